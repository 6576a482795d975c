//! Gauss double-occurrence words, their chord diagrams and interlacement graphs.
//!
//! A word is stored linearly but every structural question is asked of the
//! cyclic word: rotations, the reversal and relabelings all describe the same
//! projection, and [`GaussWord::canonical_form`] picks one representative.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Cyclic double-occurrence word over crossing labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussWord {
    letters: Vec<u32>,
}

/// Connected-sum factors of a word, in order of their first letter.
pub type FactorList = Vec<GaussWord>;

impl GaussWord {
    /// Checks that every label occurs exactly twice.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for &l in &letters {
            *counts.entry(l).or_default() += 1;
        }
        for &l in &letters {
            let c = counts[&l];
            if c != 2 {
                return Err(Error::LabelNotTwice { label: l.to_string(), count: c });
            }
        }
        Ok(GaussWord { letters })
    }

    /// Builds a word the caller already knows is a double-occurrence word.
    pub(crate) fn from_letters_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(GaussWord::new(letters.clone()).is_ok());
        GaussWord { letters }
    }

    /// The simple closed curve: no double points.
    pub fn circle() -> Self {
        GaussWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Number of letters, `2n`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of double points `n`.
    pub fn crossing_count(&self) -> usize {
        self.letters.len() / 2
    }

    /// Labels in order of first occurrence.
    pub fn labels(&self) -> Vec<u32> {
        let mut seen = Vec::with_capacity(self.crossing_count());
        for &l in &self.letters {
            if !seen.contains(&l) {
                seen.push(l);
            }
        }
        seen
    }

    pub fn max_label(&self) -> u32 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// The two positions of `label`, in increasing order.
    pub fn occurrences(&self, label: u32) -> Option<(usize, usize)> {
        let mut it = self
            .letters
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == label)
            .map(|(i, _)| i);
        let a = it.next()?;
        let b = it.next()?;
        Some((a, b))
    }

    /// Chord index (first-occurrence order) at every position.
    pub(crate) fn chord_sequence(&self) -> Vec<usize> {
        let mut index: HashMap<u32, usize> = HashMap::new();
        let mut seq = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let next = index.len();
            seq.push(*index.entry(l).or_insert(next));
        }
        seq
    }

    /// Relabels to `1..=n` in order of first occurrence.
    pub fn normalized(&self) -> GaussWord {
        let letters = self.chord_sequence().into_iter().map(|c| c as u32 + 1).collect();
        GaussWord { letters }
    }

    /// Rotates so that position `k` becomes the first letter.
    pub fn rotated(&self, k: usize) -> GaussWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        GaussWord { letters }
    }

    pub fn reversed(&self) -> GaussWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        GaussWord { letters }
    }

    /// Maps every label through `f`; `f` must be injective on the labels.
    pub fn relabeled(&self, mut f: impl FnMut(u32) -> u32) -> GaussWord {
        GaussWord::from_letters_unchecked(self.letters.iter().map(|&l| f(l)).collect())
    }

    pub fn chord_diagram(&self) -> ChordDiagram {
        ChordDiagram::from_word(self)
    }

    pub fn interlacement(&self) -> InterlacementGraph {
        InterlacementGraph::from_diagram(&self.chord_diagram())
    }

    /// Lexicographically least normalized word over all rotations and both
    /// reading directions.
    pub fn canonical_form(&self) -> GaussWord {
        GaussWord { letters: canonical_letters(&self.chord_sequence()) }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical_form()
    }

    /// Concatenation with `other` relabeled above this word's labels.
    pub fn connected_sum(&self, other: &GaussWord) -> GaussWord {
        if self.is_empty() {
            return other.clone();
        }
        let offset = self.max_label();
        let mut letters = self.letters.clone();
        letters.extend(other.chord_sequence().into_iter().map(|c| offset + c as u32 + 1));
        GaussWord { letters }
    }

    /// Splits the word at every pair of cut points whose two arcs each carry
    /// only complete chords, down to factors admitting no such split.
    pub fn decompose(&self) -> FactorList {
        if self.is_empty() {
            return Vec::new();
        }
        let mut factors = Vec::new();
        split_factors(&self.letters, (0..self.len()).collect(), &mut factors);
        factors.sort_by_key(|f| f[0]);
        factors
            .into_iter()
            .map(|positions| GaussWord {
                letters: positions.into_iter().map(|p| self.letters[p]).collect(),
            })
            .collect()
    }

    /// No chord is free of crossings (no nugatory double point).
    pub fn is_reduced(&self) -> bool {
        let g = self.interlacement();
        (0..g.vertex_count()).all(|v| g.degree(v) > 0)
    }

    pub fn is_prime(&self) -> bool {
        !self.is_empty() && self.decompose().len() == 1
    }
}

/// Minimal relabeled reading of a chord-index sequence; labels are `1..=n`.
pub(crate) fn canonical_letters(seq: &[usize]) -> Vec<u32> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let n = len / 2;
    let mut best: Vec<u32> = Vec::new();
    let mut cand = vec![0u32; len];
    let mut map = vec![0u32; n.max(seq.iter().copied().max().unwrap_or(0) + 1)];
    for forward in [true, false] {
        for start in 0..len {
            map.iter_mut().for_each(|m| *m = 0);
            let mut next = 1;
            let mut state = if best.is_empty() { Ordering::Less } else { Ordering::Equal };
            for (i, slot) in cand.iter_mut().enumerate() {
                let pos = if forward { (start + i) % len } else { (start + len - i) % len };
                let c = seq[pos];
                if map[c] == 0 {
                    map[c] = next;
                    next += 1;
                }
                *slot = map[c];
                if state == Ordering::Equal {
                    state = (*slot).cmp(&best[i]);
                    if state == Ordering::Greater {
                        break;
                    }
                }
            }
            if state == Ordering::Less {
                best.clone_from(&cand);
            }
        }
    }
    best
}

fn arc_is_closed(letters: &[u32], arc: &[usize]) -> bool {
    arc.iter()
        .all(|&p| arc.iter().filter(|&&q| letters[q] == letters[p]).count() == 2)
}

fn split_factors(letters: &[u32], cycle: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let len = cycle.len();
    for arc_len in (2..=len.saturating_sub(2)).step_by(2) {
        for start in 0..len {
            let arc: Vec<usize> = (0..arc_len).map(|i| cycle[(start + i) % len]).collect();
            if arc_is_closed(letters, &arc) {
                let rest: Vec<usize> =
                    (arc_len..len).map(|i| cycle[(start + i) % len]).collect();
                let mut arc = arc;
                let mut rest = rest;
                arc.sort_unstable();
                rest.sort_unstable();
                split_factors(letters, arc, out);
                split_factors(letters, rest, out);
                return;
            }
        }
    }
    let mut cycle = cycle;
    cycle.sort_unstable();
    out.push(cycle);
}

/// Parses whitespace- or comma-separated alphanumeric labels. Labels are
/// renumbered `1..=n` in order of first occurrence; empty input is the circle.
pub fn parse_gauss_word(text: &str) -> Result<GaussWord> {
    let segments: Vec<&str> = text.split(',').collect();
    let mut tokens = Vec::new();
    for seg in &segments {
        let before = tokens.len();
        tokens.extend(seg.split_whitespace());
        if tokens.len() == before && segments.len() > 1 {
            return Err(Error::EmptyToken(seg.trim().to_string()));
        }
    }
    let mut ids: HashMap<&str, u32> = HashMap::new();
    let mut order: Vec<&str> = Vec::new();
    let mut letters = Vec::with_capacity(tokens.len());
    for tok in tokens {
        if !tok.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(Error::EmptyToken(tok.to_string()));
        }
        let next = ids.len() as u32 + 1;
        let id = *ids.entry(tok).or_insert_with(|| {
            order.push(tok);
            next
        });
        letters.push(id);
    }
    for (i, tok) in order.iter().enumerate() {
        let count = letters.iter().filter(|&&l| l == i as u32 + 1).count();
        if count != 2 {
            return Err(Error::LabelNotTwice { label: tok.to_string(), count });
        }
    }
    Ok(GaussWord { letters })
}

impl FromStr for GaussWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gauss_word(s)
    }
}

impl fmt::Display for GaussWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for GaussWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let letters = text
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        GaussWord::new(letters).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chord {
    pub label: u32,
    /// Circle positions, `ends.0 < ends.1`.
    pub ends: (usize, usize),
}

impl Chord {
    pub fn interlaces(&self, other: &Chord) -> bool {
        let (a, b) = self.ends;
        let inside = |p: usize| a < p && p < b;
        inside(other.ends.0) != inside(other.ends.1)
    }
}

/// The chords of a word on `2n` circle positions, ordered by first endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    points: usize,
    chords: Vec<Chord>,
}

impl ChordDiagram {
    pub fn from_word(w: &GaussWord) -> Self {
        let mut first: HashMap<u32, usize> = HashMap::new();
        let mut chords = Vec::with_capacity(w.crossing_count());
        let mut index: HashMap<u32, usize> = HashMap::new();
        for (pos, &l) in w.letters().iter().enumerate() {
            match first.get(&l) {
                None => {
                    first.insert(l, pos);
                    index.insert(l, chords.len());
                    chords.push(Chord { label: l, ends: (pos, pos) });
                }
                Some(_) => chords[index[&l]].ends.1 = pos,
            }
        }
        ChordDiagram { points: w.len(), chords }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }
}

/// Chord-crossing graph; vertex `i` is the `i`-th chord in first-occurrence order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacementGraph {
    labels: Vec<u32>,
    adjacent: Vec<Vec<bool>>,
}

impl InterlacementGraph {
    pub fn from_diagram(cd: &ChordDiagram) -> Self {
        let chords = cd.chords();
        let n = chords.len();
        let mut adjacent = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let x = chords[i].interlaces(&chords[j]);
                adjacent[i][j] = x;
                adjacent[j][i] = x;
            }
        }
        InterlacementGraph { labels: chords.iter().map(|c| c.label).collect(), adjacent }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacent[i][j]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacent[v].iter().filter(|&&x| x).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacent[v].iter().enumerate().filter(|(_, &x)| x).map(|(j, _)| j)
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent[i][j])
            .collect()
    }

    /// Edges as label pairs.
    pub fn label_edges(&self) -> Vec<(u32, u32)> {
        self.edges().into_iter().map(|(i, j)| (self.labels[i], self.labels[j])).collect()
    }

    pub fn all_degrees_even(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v).is_multiple_of(2))
    }
}
