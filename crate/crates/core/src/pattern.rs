//! Counting embedded sub-chord diagrams.
//!
//! A sub-chord diagram is a subset of chords; it matches a pattern when the
//! cyclic arrangement of its endpoints equals the pattern word up to rotation,
//! reflection and relabeling.

use std::ops::Sub;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::word::{canonical_letters, GaussWord};

/// A small chord diagram, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    word: GaussWord,
}

impl Pattern {
    pub fn new(word: &GaussWord) -> Self {
        Pattern { word: word.canonical_form() }
    }

    fn builtin(text: &str) -> Self {
        Pattern::new(&text.parse().expect("built-in pattern"))
    }

    /// Two crossing chords.
    pub fn cross() -> Self {
        Pattern::builtin("A B A B")
    }

    /// Three pairwise crossing chords.
    pub fn triple() -> Self {
        Pattern::builtin("A B C A B C")
    }

    /// Two parallel chords and a sticking chord crossing both.
    pub fn h() -> Self {
        Pattern::builtin("A B C A C B")
    }

    /// Three pairwise parallel chords all crossed by one chord.
    pub fn iii() -> Self {
        Pattern::builtin("A B C D A D C B")
    }

    /// Two parallel chords each crossed by two parallel chords.
    pub fn hh() -> Self {
        Pattern::builtin("A B C D B A D C")
    }

    pub fn word(&self) -> &GaussWord {
        &self.word
    }

    pub fn chord_count(&self) -> usize {
        self.word.crossing_count()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternCounts {
    pub cross: u64,
    pub triple: u64,
    pub h: u64,
    pub iii: u64,
    pub hh: u64,
}

impl PatternCounts {
    /// `3h - 3tr + cross`, which is `4 * lambda` on realizable words.
    pub fn lambda_numerator(&self) -> i64 {
        3 * self.h as i64 - 3 * self.triple as i64 + self.cross as i64
    }

    pub fn as_array(&self) -> [u64; 5] {
        [self.cross, self.triple, self.h, self.iii, self.hh]
    }
}

impl std::ops::Add for PatternCounts {
    type Output = PatternCounts;

    fn add(self, o: PatternCounts) -> PatternCounts {
        PatternCounts {
            cross: self.cross + o.cross,
            triple: self.triple + o.triple,
            h: self.h + o.h,
            iii: self.iii + o.iii,
            hh: self.hh + o.hh,
        }
    }
}

/// Signed componentwise difference of two [`PatternCounts`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDelta {
    pub cross: i64,
    pub triple: i64,
    pub h: i64,
    pub iii: i64,
    pub hh: i64,
}

impl Sub for PatternCounts {
    type Output = CountDelta;

    fn sub(self, o: PatternCounts) -> CountDelta {
        let d = |a: u64, b: u64| a as i64 - b as i64;
        CountDelta {
            cross: d(self.cross, o.cross),
            triple: d(self.triple, o.triple),
            h: d(self.h, o.h),
            iii: d(self.iii, o.iii),
            hh: d(self.hh, o.hh),
        }
    }
}

/// Canonical letters of the sub-diagram on the chords in `subset`.
fn induced(seq: &[usize], subset: &[usize], buf: &mut Vec<usize>) -> Vec<u32> {
    buf.clear();
    buf.extend(seq.iter().filter_map(|c| subset.iter().position(|s| s == c)));
    canonical_letters(buf)
}

pub fn count_pattern(w: &GaussWord, p: &Pattern) -> u64 {
    let k = p.chord_count();
    let n = w.crossing_count();
    if k > n {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    let seq = w.chord_sequence();
    let target = p.word.letters();
    let mut buf = Vec::with_capacity(2 * k);
    (0..n)
        .combinations(k)
        .filter(|s| induced(&seq, s, &mut buf) == target)
        .count() as u64
}

/// The five named counts, one pass over the 2-, 3- and 4-subsets.
pub fn count_named(w: &GaussWord) -> PatternCounts {
    let n = w.crossing_count();
    let seq = w.chord_sequence();
    let (cross, triple, h, iii, hh) =
        (Pattern::cross(), Pattern::triple(), Pattern::h(), Pattern::iii(), Pattern::hh());
    let mut out = PatternCounts::default();
    let mut buf = Vec::with_capacity(8);
    for s in (0..n).combinations(2) {
        if induced(&seq, &s, &mut buf) == cross.word.letters() {
            out.cross += 1;
        }
    }
    for s in (0..n).combinations(3) {
        let c = induced(&seq, &s, &mut buf);
        if c == triple.word.letters() {
            out.triple += 1;
        } else if c == h.word.letters() {
            out.h += 1;
        }
    }
    for s in (0..n).combinations(4) {
        let c = induced(&seq, &s, &mut buf);
        if c == iii.word.letters() {
            out.iii += 1;
        } else if c == hh.word.letters() {
            out.hh += 1;
        }
    }
    out
}

/// Counts read off the interlacement graph alone: edges, triangles, induced
/// two-edge paths, induced claws and induced 4-cycles.
pub fn graph_counts(w: &GaussWord) -> PatternCounts {
    let g = w.interlacement();
    let n = g.vertex_count();
    let e = |i: usize, j: usize| u64::from(g.has_edge(i, j));
    let mut out = PatternCounts { cross: g.edges().len() as u64, ..Default::default() };
    for (a, b, c) in (0..n).tuple_combinations() {
        match e(a, b) + e(a, c) + e(b, c) {
            3 => out.triple += 1,
            2 => out.h += 1,
            _ => {}
        }
    }
    for (a, b, c, d) in (0..n).tuple_combinations() {
        let vs = [a, b, c, d];
        let mut edges = 0;
        let mut deg = [0u8; 4];
        for i in 0..4 {
            for j in i + 1..4 {
                if g.has_edge(vs[i], vs[j]) {
                    edges += 1;
                    deg[i] += 1;
                    deg[j] += 1;
                }
            }
        }
        if edges == 3 && deg.contains(&3) {
            out.iii += 1;
        } else if edges == 4 && deg.iter().all(|&x| x == 2) {
            out.hh += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GaussWord {
        s.parse().unwrap()
    }

    fn counts(c: [u64; 5]) -> PatternCounts {
        PatternCounts { cross: c[0], triple: c[1], h: c[2], iii: c[3], hh: c[4] }
    }

    #[test]
    fn count_pattern_examples() {
        assert_eq!(count_pattern(&w("1 2 3 1 2 3"), &Pattern::cross()), 3);
        for p in [Pattern::cross(), Pattern::h(), Pattern::hh()] {
            assert_eq!(count_pattern(&w(""), &p), 0);
        }
        assert_eq!(count_pattern(&w("1 2 3 4 2 1 4 3"), &Pattern::h()), 4);
    }

    #[test]
    fn named_counts_examples() {
        assert_eq!(count_named(&w("1 2 3 1 2 3")), counts([3, 1, 0, 0, 0]));
        assert_eq!(count_named(&w("1 2 3 4 5 1 2 3 4 5")), counts([10, 10, 0, 0, 0]));
        assert_eq!(count_named(&w("1 2 3 4 2 1 4 3")), counts([4, 0, 4, 0, 1]));
    }

    #[test]
    fn graph_counts_examples() {
        assert_eq!(graph_counts(&w("1 2 3 1 2 3")), counts([3, 1, 0, 0, 0]));
        assert_eq!(graph_counts(&w("1 2 2 1")), counts([0; 5]));
        assert_eq!(graph_counts(&w("1 2 3 4 2 1 4 3")), counts([4, 0, 4, 0, 1]));
    }

    #[test]
    fn patterns_are_the_expected_graphs() {
        assert_eq!(graph_counts(Pattern::iii().word()), counts([3, 0, 3, 1, 0]));
        assert_eq!(graph_counts(Pattern::hh().word()), counts([4, 0, 4, 0, 1]));
        assert_eq!(count_named(Pattern::h().word()), counts([2, 0, 1, 0, 0]));
    }

    #[test]
    fn delta_is_componentwise() {
        let d = counts([3, 1, 0, 0, 0]) - counts([0, 0, 0, 0, 1]);
        assert_eq!(d, CountDelta { cross: 3, triple: 1, h: 0, iii: 0, hh: -1 });
    }
}
