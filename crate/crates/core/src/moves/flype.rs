use serde::{Deserialize, Serialize};

use crate::embed::is_realizable;
use crate::error::{Error, Result};
use crate::invariant::lambda_from_counts;
use crate::pattern::count_named;
use crate::word::GaussWord;

/// A maximal run of tangle letters: `len` positions starting at `start`,
/// read cyclically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleArc {
    pub start: usize,
    pub len: usize,
}

impl TangleArc {
    fn last(self, word_len: usize) -> usize {
        (self.start + self.len - 1) % word_len
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndSide {
    Start,
    Finish,
}

/// One of the four ends of the tangle: `arc` is 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcEnd {
    pub arc: usize,
    pub side: EndSide,
}

const ENDS: [ArcEnd; 4] = [
    ArcEnd { arc: 0, side: EndSide::Start },
    ArcEnd { arc: 0, side: EndSide::Finish },
    ArcEnd { arc: 1, side: EndSide::Start },
    ArcEnd { arc: 1, side: EndSide::Finish },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FlypeCase {
    /// The crossing sits on both ends of one tangle arc.
    Case1,
    /// The crossing sits on one end of each tangle arc.
    Case5,
}

/// A crossing `q` next to a two-arc tangle. `q` currently touches the tangle
/// at `ends`; the flype moves it to the other two ends. A site without a
/// crossing is the flype of an empty tangle, which changes nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlypeSite {
    pub q: Option<u32>,
    pub case: FlypeCase,
    pub arcs: Vec<TangleArc>,
    pub ends: Vec<ArcEnd>,
}

impl FlypeSite {
    pub fn identity() -> Self {
        FlypeSite { q: None, case: FlypeCase::Case1, arcs: Vec::new(), ends: Vec::new() }
    }

    /// Tangle letters, sorted.
    pub fn tangle(&self, w: &GaussWord) -> Vec<u32> {
        let l = w.letters();
        let mut out: Vec<u32> = self
            .arcs
            .iter()
            .flat_map(|a| (0..a.len).map(move |i| l[(a.start + i) % l.len()]))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Position just outside an end.
fn end_position(arcs: &[TangleArc], end: ArcEnd, len: usize) -> usize {
    let a = arcs[end.arc];
    match end.side {
        EndSide::Start => (a.start + len - 1) % len,
        EndSide::Finish => (a.last(len) + 1) % len,
    }
}

/// Whether the letters at `positions` form a connected subgraph of the
/// curve, joining cyclically consecutive positions inside `positions`.
fn connected(l: &[u32], inside: &[bool]) -> bool {
    let len = l.len();
    let labels: Vec<u32> = {
        let mut v: Vec<u32> = (0..len).filter(|&p| inside[p]).map(|p| l[p]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    if labels.len() <= 1 {
        return true;
    }
    let idx = |x: u32| labels.binary_search(&x).expect("label inside");
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for p in 0..len {
        let q = (p + 1) % len;
        if inside[p] && inside[q] {
            let (a, b) = (find(&mut parent, idx(l[p])), find(&mut parent, idx(l[q])));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (1..labels.len()).all(|i| find(&mut parent, i) == root)
}

fn tangle_ok(l: &[u32], arcs: &[TangleArc]) -> Option<Vec<bool>> {
    let len = l.len();
    let mut inside = vec![false; len];
    for a in arcs {
        for i in 0..a.len {
            let p = (a.start + i) % len;
            if inside[p] {
                return None;
            }
            inside[p] = true;
        }
    }
    for p in 0..len {
        if inside[p] && !(0..len).any(|q| q != p && l[q] == l[p] && inside[q]) {
            return None;
        }
    }
    // both gaps must be nonempty
    for a in arcs {
        if inside[(a.start + len - 1) % len] || inside[(a.last(len) + 1) % len] {
            return None;
        }
    }
    let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
    (connected(l, &inside) && connected(l, &outside)).then_some(inside)
}

/// The identity site first, then every crossing next to a connected two-arc
/// tangle with a connected complement.
pub fn list_flype_sites(w: &GaussWord) -> Vec<FlypeSite> {
    let l = w.letters();
    let len = l.len();
    let mut out = vec![FlypeSite::identity()];
    for s0 in 0..len {
        for l0 in 1..len {
            for off in l0 + 1..len {
                let s1 = (s0 + off) % len;
                if s1 < s0 {
                    continue;
                }
                for l1 in 1..len - off {
                    if off + l1 >= len {
                        break;
                    }
                    let arcs = [TangleArc { start: s0, len: l0 }, TangleArc { start: s1, len: l1 }];
                    let Some(inside) = tangle_ok(l, &arcs) else { continue };
                    sites_for_tangle(w, &arcs, &inside, &mut out);
                }
            }
        }
    }
    out
}

fn sites_for_tangle(w: &GaussWord, arcs: &[TangleArc; 2], inside: &[bool], out: &mut Vec<FlypeSite>) {
    let l = w.letters();
    let len = l.len();
    for q in w.labels() {
        let (p1, p2) = w.occurrences(q).expect("label present");
        if inside[p1] {
            continue;
        }
        let touching = |p: usize| -> Vec<ArcEnd> {
            ENDS.iter().copied().filter(|&e| end_position(arcs, e, len) == p).collect()
        };
        for e1 in touching(p1) {
            for e2 in touching(p2) {
                if e1 == e2 {
                    continue;
                }
                let case = if e1.arc == e2.arc { FlypeCase::Case1 } else { FlypeCase::Case5 };
                out.push(FlypeSite { q: Some(q), case, arcs: arcs.to_vec(), ends: vec![e1, e2] });
            }
        }
    }
}

fn site_invalid(w: &GaussWord, s: &FlypeSite, why: &str) -> Error {
    Error::SiteInvalid(format!("flype {s:?} on \"{w}\": {why}"))
}

/// Applies a flype. The result keeps the labels of `w` and is checked to be
/// realizable with unchanged sub-chord counts.
pub fn apply_flype(w: &GaussWord, s: &FlypeSite) -> Result<GaussWord> {
    let Some(q) = s.q else {
        if !s.arcs.is_empty() || !s.ends.is_empty() {
            return Err(site_invalid(w, s, "a site without a crossing must be empty"));
        }
        return Ok(w.clone());
    };
    let l = w.letters();
    let len = l.len();
    if s.arcs.len() != 2 || s.ends.len() != 2 || s.arcs.iter().any(|a| a.len == 0 || a.start >= len || a.len >= len) {
        return Err(site_invalid(w, s, "malformed site"));
    }
    if s.ends[0] == s.ends[1] || s.ends.iter().any(|e| e.arc > 1) {
        return Err(site_invalid(w, s, "malformed ends"));
    }
    let Some(inside) = tangle_ok(l, &s.arcs) else {
        return Err(site_invalid(w, s, "not a connected two-arc tangle"));
    };
    let Some((p1, p2)) = w.occurrences(q) else {
        return Err(site_invalid(w, s, "no such crossing"));
    };
    if inside[p1] {
        return Err(site_invalid(w, s, "crossing lies in the tangle"));
    }
    let at = [end_position(&s.arcs, s.ends[0], len), end_position(&s.arcs, s.ends[1], len)];
    if !((at[0] == p1 && at[1] == p2) || (at[0] == p2 && at[1] == p1)) {
        return Err(site_invalid(w, s, "crossing does not touch these ends"));
    }
    let targets: Vec<ArcEnd> = ENDS.iter().copied().filter(|e| !s.ends.contains(e)).collect();
    let mut out = Vec::with_capacity(len);
    for (p, &x) in l.iter().enumerate() {
        for t in &targets {
            if t.side == EndSide::Start && s.arcs[t.arc].start == p {
                out.push(q);
            }
        }
        if x != q {
            out.push(x);
        }
        for t in &targets {
            if t.side == EndSide::Finish && s.arcs[t.arc].last(len) == p {
                out.push(q);
            }
        }
    }
    let result = GaussWord::new(out)?;
    check_postconditions(w, &result)?;
    Ok(result)
}

fn check_postconditions(before: &GaussWord, after: &GaussWord) -> Result<()> {
    if !is_realizable(after)? {
        return Err(Error::PostconditionViolation(format!(
            "flype of \"{before}\" gave the non-realizable \"{after}\""
        )));
    }
    let (a, b) = (count_named(before), count_named(after));
    if a != b || lambda_from_counts(&a)? != lambda_from_counts(&b)? {
        return Err(Error::PostconditionViolation(format!(
            "flype of \"{before}\" changed the counts: {a:?} -> {b:?}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GaussWord {
        s.parse().unwrap()
    }

    #[test]
    fn identity_site_comes_first() {
        for s in ["", "1 1", "1 2 3 1 2 3"] {
            let sites = list_flype_sites(&w(s));
            assert_eq!(sites[0], FlypeSite::identity());
            assert_eq!(apply_flype(&w(s), &sites[0]).unwrap(), w(s));
        }
    }

    #[test]
    fn trefoil_case1_site() {
        let t = w("1 2 3 1 2 3");
        let site = list_flype_sites(&t)
            .into_iter()
            .find(|s| s.q == Some(1) && s.case == FlypeCase::Case1 && s.tangle(&t) == vec![2, 3])
            .expect("case 1 site around 1");
        let out = apply_flype(&t, &site).unwrap();
        assert_eq!(out.canonical_form(), t);
    }

    #[test]
    fn seven_crossing_flype_changes_the_projection() {
        let a = w("1 2 3 1 4 5 6 7 2 3 5 6 7 4");
        let b = w("1 2 3 1 4 5 6 7 2 3 7 4 5 6");
        let hit = list_flype_sites(&a)
            .iter()
            .any(|s| apply_flype(&a, s).unwrap().canonical_form() == b);
        assert!(hit);
        assert_eq!(count_named(&a), count_named(&b));
    }

    #[test]
    fn bad_sites() {
        let t = w("1 2 3 1 2 3");
        let mut site = list_flype_sites(&t).into_iter().nth(1).unwrap();
        site.q = Some(9);
        assert_eq!(apply_flype(&t, &site).unwrap_err().code(), "SITE_INVALID");
        let site = FlypeSite { q: None, arcs: vec![TangleArc { start: 0, len: 1 }], ..FlypeSite::identity() };
        assert_eq!(apply_flype(&t, &site).unwrap_err().code(), "SITE_INVALID");
    }
}
