use crate::embed::{faces, Dart, SphericalEmbedding};
use crate::error::{Error, Result};
use crate::word::GaussWord;

use super::{MoveKind, MoveSite, SiteLocation};

fn edge_ends(letters: &[u32], edge: usize) -> (u32, u32) {
    (letters[edge], letters[(edge + 1) % letters.len()])
}

fn interlaced(w: &GaussWord, a: u32, b: u32) -> bool {
    let (Some((a1, a2)), Some((b1, b2))) = (w.occurrences(a), w.occurrences(b)) else {
        return false;
    };
    (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2)
}

fn kink_labels(w: &GaussWord) -> Vec<u32> {
    let l = w.letters();
    let len = l.len();
    let mut out = Vec::new();
    for lab in w.labels() {
        let (p, q) = w.occurrences(lab).expect("label present");
        if q == p + 1 || (p == 0 && q == len - 1) {
            out.push(lab);
        }
    }
    out
}

/// Labels of a triangle bounded by three distinct edges, if it is one.
fn triangle_labels(l: &[u32], edges: [usize; 3]) -> Option<[u32; 3]> {
    if edges[0] == edges[1] || edges[1] == edges[2] || edges[0] == edges[2] {
        return None;
    }
    let mut labs = Vec::with_capacity(6);
    for &e in &edges {
        let (a, b) = edge_ends(l, e);
        if a == b {
            return None;
        }
        labs.push(a);
        labs.push(b);
    }
    labs.sort_unstable();
    labs.dedup();
    if labs.len() != 3 {
        return None;
    }
    // each pair of vertices must be joined by exactly one of the edges
    let pairs: Vec<(u32, u32)> = edges
        .iter()
        .map(|&e| {
            let (a, b) = edge_ends(l, e);
            (a.min(b), a.max(b))
        })
        .collect();
    if pairs[0] == pairs[1] || pairs[1] == pairs[2] || pairs[0] == pairs[2] {
        return None;
    }
    Some([labs[0], labs[1], labs[2]])
}

fn triangle_kind(w: &GaussWord, t: [u32; 3]) -> MoveKind {
    let k = usize::from(interlaced(w, t[0], t[1]))
        + usize::from(interlaced(w, t[0], t[2]))
        + usize::from(interlaced(w, t[1], t[2]));
    if k == 0 || k == 3 {
        MoveKind::RiiiStrong
    } else {
        MoveKind::RiiiWeak
    }
}

fn bigon_labels(l: &[u32], edges: [usize; 2]) -> Option<(u32, u32)> {
    if edges[0] == edges[1] {
        return None;
    }
    let (a, b) = edge_ends(l, edges[0]);
    let (c, d) = edge_ends(l, edges[1]);
    if a == b || !((a, b) == (c, d) || (a, b) == (d, c)) {
        return None;
    }
    Some((a.min(b), a.max(b)))
}

fn pair_kind(first: Dart, second: Dart) -> MoveKind {
    if first.edge == second.edge || first.forward == second.forward {
        MoveKind::RiiStrongAdd
    } else {
        MoveKind::RiiWeakAdd
    }
}

/// Every move site of `w` in the embedding `e`: deletions first (RI, RII,
/// RIII), then additions (RI on every edge, RII on every pair of sides of a
/// common face).
pub fn list_sites(w: &GaussWord, e: &SphericalEmbedding) -> Result<Vec<MoveSite>> {
    if e.word() != w {
        return Err(Error::EmbeddingMismatch { word: w.to_string(), embedding: e.word().to_string() });
    }
    let l = w.letters();
    let fs = faces(e);
    let mut out: Vec<MoveSite> = kink_labels(w)
        .into_iter()
        .map(|label| MoveSite { kind: MoveKind::RiDel, location: SiteLocation::Letter { label } })
        .collect();
    if !w.is_empty() {
        for (fi, f) in fs.faces.iter().enumerate() {
            if f.degree() != 2 {
                continue;
            }
            let edges = [f.darts[0].edge, f.darts[1].edge];
            if let Some(labels) = bigon_labels(l, edges) {
                let kind = if interlaced(w, labels.0, labels.1) {
                    MoveKind::RiiWeakDel
                } else {
                    MoveKind::RiiStrongDel
                };
                out.push(MoveSite { kind, location: SiteLocation::Bigon { face: fi, labels, edges } });
            }
        }
        for (fi, f) in fs.faces.iter().enumerate() {
            if f.degree() != 3 {
                continue;
            }
            let edges = [f.darts[0].edge, f.darts[1].edge, f.darts[2].edge];
            if let Some(t) = triangle_labels(l, edges) {
                out.push(MoveSite {
                    kind: triangle_kind(w, t),
                    location: SiteLocation::Triangle { face: fi, edges },
                });
            }
        }
    }
    for edge in 0..l.len().max(1) {
        out.push(MoveSite { kind: MoveKind::RiAdd, location: SiteLocation::Edge { edge } });
    }
    for (fi, f) in fs.faces.iter().enumerate() {
        for i in 0..f.darts.len() {
            for j in i..f.darts.len() {
                let (first, second) = (f.darts[i], f.darts[j]);
                out.push(MoveSite {
                    kind: pair_kind(first, second),
                    location: SiteLocation::FacePair { face: fi, first, second },
                });
            }
        }
    }
    Ok(out)
}

fn invalid(w: &GaussWord, s: &MoveSite, why: &str) -> Error {
    Error::SiteInvalid(format!("{} at {:?} on \"{}\": {why}", s.kind, s.location, w))
}

/// Applies one move. The result keeps the labels of `w`; new crossings get
/// labels above the current maximum.
pub fn apply_move(w: &GaussWord, s: &MoveSite) -> Result<GaussWord> {
    let l = w.letters();
    let len = l.len();
    let fresh = w.max_label() + 1;
    let edge_ok = |e: usize| e < len.max(1);
    let out = match (&s.location, s.kind) {
        (SiteLocation::Edge { edge }, MoveKind::RiAdd) => {
            if !edge_ok(*edge) {
                return Err(invalid(w, s, "no such edge"));
            }
            insert_after(l, &[(*edge, vec![fresh, fresh])])
        }
        (SiteLocation::Letter { label }, MoveKind::RiDel) => {
            if !kink_labels(w).contains(label) {
                return Err(invalid(w, s, "occurrences are not adjacent"));
            }
            l.iter().copied().filter(|x| x != label).collect()
        }
        (SiteLocation::Bigon { labels, edges, .. }, MoveKind::RiiStrongDel | MoveKind::RiiWeakDel) => {
            if edges.iter().any(|&e| e >= len) || bigon_labels(l, *edges) != Some(*labels) {
                return Err(invalid(w, s, "edges do not bound a bigon on these labels"));
            }
            let weak = interlaced(w, labels.0, labels.1);
            if weak != (s.kind == MoveKind::RiiWeakDel) {
                return Err(invalid(w, s, "wrong strong/weak classification"));
            }
            l.iter().copied().filter(|&x| x != labels.0 && x != labels.1).collect()
        }
        (SiteLocation::FacePair { first, second, .. }, MoveKind::RiiStrongAdd | MoveKind::RiiWeakAdd) => {
            if !edge_ok(first.edge) || !edge_ok(second.edge) {
                return Err(invalid(w, s, "no such edge"));
            }
            if pair_kind(*first, *second) != s.kind {
                return Err(invalid(w, s, "wrong strong/weak classification"));
            }
            let (a, b) = (fresh, fresh + 1);
            if first.edge == second.edge {
                if first.forward != second.forward && len > 0 {
                    return Err(invalid(w, s, "opposite sides of one edge share no face"));
                }
                insert_after(l, &[(first.edge, vec![a, b, b, a])])
            } else {
                let tail = if first.forward == second.forward { vec![b, a] } else { vec![a, b] };
                insert_after(l, &[(first.edge, vec![a, b]), (second.edge, tail)])
            }
        }
        (SiteLocation::Triangle { edges, .. }, MoveKind::RiiiStrong | MoveKind::RiiiWeak) => {
            if edges.iter().any(|&e| e >= len) {
                return Err(invalid(w, s, "no such edge"));
            }
            let Some(t) = triangle_labels(l, *edges) else {
                return Err(invalid(w, s, "edges do not bound a triangle"));
            };
            if triangle_kind(w, t) != s.kind {
                return Err(invalid(w, s, "wrong strong/weak classification"));
            }
            let mut out = l.to_vec();
            for &e in edges {
                out.swap(e, (e + 1) % len);
            }
            out
        }
        _ => return Err(invalid(w, s, "location does not fit the move kind")),
    };
    GaussWord::new(out)
}

/// Copies `l`, inserting each block right after its position.
fn insert_after(l: &[u32], blocks: &[(usize, Vec<u32>)]) -> Vec<u32> {
    if l.is_empty() {
        return blocks.iter().flat_map(|(_, b)| b.iter().copied()).collect();
    }
    let mut out = Vec::with_capacity(l.len() + 4);
    for (i, &x) in l.iter().enumerate() {
        out.push(x);
        for (p, b) in blocks {
            if *p == i {
                out.extend_from_slice(b);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{find_embedding, is_realizable, spherical_embeddings};
    use crate::moves::{check_delta_contract, pattern_delta};

    fn w(s: &str) -> GaussWord {
        s.parse().unwrap()
    }

    fn sites(s: &str) -> Vec<MoveSite> {
        let word = w(s);
        let e = find_embedding(&word).unwrap().unwrap();
        list_sites(&word, &e).unwrap()
    }

    #[test]
    fn circle_sites() {
        let ss = sites("");
        let kinds: Vec<MoveKind> = ss.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![MoveKind::RiAdd, MoveKind::RiiStrongAdd, MoveKind::RiiStrongAdd]);
        let o = GaussWord::circle();
        assert_eq!(apply_move(&o, &ss[0]).unwrap(), w("1 1"));
        assert_eq!(apply_move(&o, &ss[1]).unwrap(), w("1 2 2 1"));
    }

    #[test]
    fn trefoil_sites() {
        let ss = sites("1 2 3 1 2 3");
        let count = |k| ss.iter().filter(|s| s.kind == k).count();
        assert_eq!(count(MoveKind::RiDel), 0);
        assert_eq!(count(MoveKind::RiiStrongDel), 0);
        assert_eq!(count(MoveKind::RiiWeakDel), 3);
        assert_eq!(count(MoveKind::RiiiStrong), 2);
        assert_eq!(count(MoveKind::RiAdd), 6);
        let t = ss.iter().find(|s| s.kind == MoveKind::RiiiStrong).unwrap();
        let out = apply_move(&w("1 2 3 1 2 3"), t).unwrap();
        assert!(is_realizable(&out).unwrap());
    }

    #[test]
    fn trefoil_examples() {
        let t = w("1 2 3 1 2 3");
        let ss = sites("1 2 3 1 2 3");
        let r3 = ss.iter().find(|s| s.kind == MoveKind::RiiiStrong).unwrap();
        assert_eq!(apply_move(&t, r3).unwrap().canonical_form(), w("1 2 2 3 3 1").canonical_form());
        let d = pattern_delta(&t, r3).unwrap();
        assert_eq!((d.delta.cross, d.delta.triple, d.lambda_delta), (-3, -1, 0));
        let r2 = ss
            .iter()
            .find(|s| matches!(s.location, SiteLocation::Bigon { labels: (1, 2), .. }))
            .unwrap();
        assert_eq!(r2.kind, MoveKind::RiiWeakDel);
        assert_eq!(apply_move(&t, r2).unwrap(), w("3 3").relabeled(|_| 3));
        let d = pattern_delta(&t, r2).unwrap();
        assert_eq!(d.delta, crate::pattern::CountDelta { cross: -3, triple: -1, h: 0, iii: 0, hh: 0 });
        let r1 = ss.iter().find(|s| s.kind == MoveKind::RiAdd).unwrap();
        assert_eq!(pattern_delta(&t, r1).unwrap().delta, crate::pattern::CountDelta::default());
    }

    #[test]
    fn kink_site() {
        let ss = sites("1 1");
        assert_eq!(ss.iter().filter(|s| s.kind == MoveKind::RiDel).count(), 1);
    }

    #[test]
    fn bigon_deletion() {
        let word = w("1 2 2 1");
        let mut found = 0;
        for e in spherical_embeddings(&word).unwrap() {
            for s in list_sites(&word, &e).unwrap() {
                if s.kind == MoveKind::RiiStrongDel {
                    assert_eq!(apply_move(&word, &s).unwrap(), GaussWord::circle());
                    found += 1;
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn mismatched_embedding() {
        let e = find_embedding(&w("1 1")).unwrap().unwrap();
        let err = list_sites(&w("1 2 2 1"), &e).unwrap_err();
        assert_eq!(err.code(), "EMBEDDING_MISMATCH");
    }

    #[test]
    fn invalid_site() {
        let s = MoveSite { kind: MoveKind::RiDel, location: SiteLocation::Letter { label: 1 } };
        assert_eq!(apply_move(&w("1 2 3 1 2 3"), &s).unwrap_err().code(), "SITE_INVALID");
        let s = MoveSite { kind: MoveKind::RiAdd, location: SiteLocation::Edge { edge: 9 } };
        assert_eq!(apply_move(&w("1 1"), &s).unwrap_err().code(), "SITE_INVALID");
    }

    #[test]
    fn every_site_is_realizable_and_obeys_the_table() {
        for s in ["", "1 1", "1 2 3 1 2 3", "1 2 3 4 2 1 4 3", "1 1 2 3 4 2 3 4", "1 2 3 4 5 1 2 3 4 5"] {
            let word = w(s);
            for e in spherical_embeddings(&word).unwrap() {
                for site in list_sites(&word, &e).unwrap() {
                    let out = apply_move(&word, &site).unwrap();
                    assert!(is_realizable(&out).unwrap(), "{s} {site:?} -> {out}");
                    let d = pattern_delta(&word, &site).unwrap();
                    check_delta_contract(&d).unwrap();
                }
            }
        }
    }
}
