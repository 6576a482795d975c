//! Spherical realizability by exhaustive rotation-system search.
//!
//! Edge `i` of a word runs from position `i` to position `i + 1` (cyclically).
//! Each edge has two darts: the tail dart sits at the crossing of position `i`
//! and the head dart at the crossing of position `i + 1`. At every crossing the
//! four darts are arranged counterclockwise so that the two passages alternate;
//! there are two such arrangements per crossing, selected by one config bit.
//! Face tracing follows `dart -> rotation_successor(opposite(dart))`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::GaussWord;

pub const DEFAULT_MAX_CROSSINGS: usize = 16;

/// One side of an edge. `forward` means the face walk traverses the edge in
/// the direction of the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

impl Dart {
    fn from_id(id: usize) -> Self {
        Dart { edge: id / 2, forward: id.is_multiple_of(2) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSet {
    pub faces: Vec<Face>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.faces.iter().map(Face::degree).collect()
    }
}

/// A genus-0 choice of transversal rotation at every crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalEmbedding {
    word: GaussWord,
    /// Indexed by chord, in first-occurrence order of the word.
    vertex_config: Vec<u8>,
    orientation: i8,
}

impl SphericalEmbedding {
    /// Validates transversality bits and the genus.
    pub fn new(word: GaussWord, vertex_config: Vec<u8>, orientation: i8) -> Result<Self> {
        if vertex_config.len() != word.crossing_count()
            || vertex_config.iter().any(|&b| b > 1)
            || orientation.abs() != 1
        {
            return Err(Error::SiteInvalid(format!(
                "vertex_config must hold {} bits and orientation must be +-1",
                word.crossing_count()
            )));
        }
        let rot = Rotation::new(&word);
        let bits = vertex_config.iter().enumerate().fold(0u64, |m, (i, &b)| m | (u64::from(b) << i));
        if rot.face_count(bits) != word.crossing_count() + 2 {
            return Err(Error::NotRealizable(word.to_string()));
        }
        Ok(SphericalEmbedding { word, vertex_config, orientation })
    }

    pub fn word(&self) -> &GaussWord {
        &self.word
    }

    pub fn vertex_config(&self) -> &[u8] {
        &self.vertex_config
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    /// Same rotation system, opposite sphere orientation.
    pub fn flipped(&self) -> Self {
        SphericalEmbedding { orientation: -self.orientation, ..self.clone() }
    }

    fn config_bits(&self) -> u64 {
        self.vertex_config.iter().enumerate().fold(0, |m, (i, &b)| m | (u64::from(b) << i))
    }

    pub fn faces(&self) -> FaceSet {
        faces(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("embedding serializes")
    }
}

/// Dart geometry shared by every configuration of one word.
struct Rotation {
    len: usize,
    /// Per chord: `[in_p, out_p, in_q, out_q]` dart ids, `p < q`.
    ends: Vec<[usize; 4]>,
}

impl Rotation {
    fn new(w: &GaussWord) -> Self {
        let len = w.len();
        let ends = w
            .chord_diagram()
            .chords()
            .iter()
            .map(|c| {
                let (p, q) = c.ends;
                let inn = |x: usize| 2 * ((x + len - 1) % len) + 1;
                [inn(p), 2 * p, inn(q), 2 * q]
            })
            .collect();
        Rotation { len, ends }
    }

    /// Counterclockwise successor of every dart.
    fn successors(&self, bits: u64) -> Vec<usize> {
        let mut succ = vec![0; 2 * self.len];
        for (k, &[in_p, out_p, in_q, out_q]) in self.ends.iter().enumerate() {
            let cyc = if bits >> k & 1 == 0 {
                [in_p, in_q, out_p, out_q]
            } else {
                [in_p, out_q, out_p, in_q]
            };
            for i in 0..4 {
                succ[cyc[i]] = cyc[(i + 1) % 4];
            }
        }
        succ
    }

    fn face_orbits(&self, bits: u64) -> Vec<Vec<usize>> {
        let succ = self.successors(bits);
        let mut seen = vec![false; succ.len()];
        let mut out = Vec::new();
        for start in 0..succ.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = succ[d ^ 1];
            }
            out.push(orbit);
        }
        out
    }

    fn face_count(&self, bits: u64) -> usize {
        if self.len == 0 {
            return 2;
        }
        let succ = self.successors(bits);
        let mut seen = vec![false; succ.len()];
        let mut count = 0;
        for start in 0..succ.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = succ[d ^ 1];
            }
        }
        count
    }
}

fn check_bound(w: &GaussWord, max_crossings: usize) -> Result<()> {
    let n = w.crossing_count();
    if n > max_crossings || n > 63 {
        return Err(Error::BoundExceeded { what: "crossing count", n, max: max_crossings.min(63) });
    }
    Ok(())
}

/// All genus-0 configurations, in increasing order of the config bit vector.
pub fn spherical_embeddings(w: &GaussWord) -> Result<Vec<SphericalEmbedding>> {
    spherical_embeddings_bounded(w, DEFAULT_MAX_CROSSINGS)
}

pub fn spherical_embeddings_bounded(
    w: &GaussWord,
    max_crossings: usize,
) -> Result<Vec<SphericalEmbedding>> {
    check_bound(w, max_crossings)?;
    let n = w.crossing_count();
    let rot = Rotation::new(w);
    Ok((0..1u64 << n)
        .filter(|&bits| rot.face_count(bits) == n + 2)
        .map(|bits| SphericalEmbedding {
            word: w.clone(),
            vertex_config: (0..n).map(|k| (bits >> k & 1) as u8).collect(),
            orientation: 1,
        })
        .collect())
}

/// First genus-0 embedding, if any. Words failing the even-interlacement test
/// are rejected without searching.
pub fn find_embedding(w: &GaussWord) -> Result<Option<SphericalEmbedding>> {
    check_bound(w, DEFAULT_MAX_CROSSINGS)?;
    if !w.interlacement().all_degrees_even() {
        return Ok(None);
    }
    let n = w.crossing_count();
    let rot = Rotation::new(w);
    Ok((0..1u64 << n).find(|&bits| rot.face_count(bits) == n + 2).map(|bits| {
        SphericalEmbedding {
            word: w.clone(),
            vertex_config: (0..n).map(|k| (bits >> k & 1) as u8).collect(),
            orientation: 1,
        }
    }))
}

pub fn is_realizable(w: &GaussWord) -> Result<bool> {
    Ok(find_embedding(w)?.is_some())
}

/// Face walks of an embedding. The circle has two faces of degree 1, one on
/// each side of its single closed edge.
pub fn faces(e: &SphericalEmbedding) -> FaceSet {
    if e.word.is_empty() {
        let side = |forward| Face { darts: vec![Dart { edge: 0, forward }] };
        return FaceSet { faces: vec![side(true), side(false)] };
    }
    let rot = Rotation::new(&e.word);
    let faces = rot
        .face_orbits(e.config_bits())
        .into_iter()
        .map(|orbit| Face { darts: orbit.into_iter().map(Dart::from_id).collect() })
        .collect();
    FaceSet { faces }
}

/// Crossing signs seen from a basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignAssignment {
    /// The basepoint sits just before this word position.
    pub basepoint: usize,
    /// `(label, sign)` in first-occurrence order of the word.
    pub signs: Vec<(u32, i8)>,
}

impl SignAssignment {
    pub fn sign(&self, label: u32) -> Option<i8> {
        self.signs.iter().find(|(l, _)| *l == label).map(|&(_, s)| s)
    }
}

/// Walks the curve from `basepoint`; at each crossing the frame (first
/// passage, second passage) gets sign -1 when it agrees with the sphere
/// orientation and +1 otherwise.
pub fn crossing_signs(e: &SphericalEmbedding, basepoint: usize) -> SignAssignment {
    let len = e.word.len();
    let base = if len == 0 { 0 } else { basepoint % len };
    let signs = e
        .word
        .chord_diagram()
        .chords()
        .iter()
        .zip(&e.vertex_config)
        .map(|(c, &bit)| {
            let (p, q) = c.ends;
            let p_first = base <= p || base > q;
            // config 0 places the second passage a quarter turn counterclockwise
            // of the first when the first passage is at p
            let agrees = (bit == 0) == p_first;
            let s = if agrees { -1 } else { 1 };
            (c.label, s * e.orientation)
        })
        .collect();
    SignAssignment { basepoint: base, signs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GaussWord {
        s.parse().unwrap()
    }

    #[test]
    fn parity_violation_has_no_embedding() {
        let x = w("1 2 1 2");
        // exhaust all four configurations directly
        let rot = Rotation::new(&x);
        assert!((0..4).all(|b| rot.face_count(b) != 4));
        assert!(spherical_embeddings(&x).unwrap().is_empty());
        assert!(!is_realizable(&x).unwrap());
    }

    #[test]
    fn nested_pair_embeds() {
        assert!(!spherical_embeddings(&w("1 2 2 1")).unwrap().is_empty());
    }

    #[test]
    fn circle_has_one_embedding_with_two_faces() {
        let es = spherical_embeddings(&w("")).unwrap();
        assert_eq!(es.len(), 1);
        assert_eq!(faces(&es[0]).degrees(), vec![1, 1]);
    }

    #[test]
    fn realizability_examples() {
        assert!(is_realizable(&w("1 2 3 1 2 3")).unwrap());
        assert!(is_realizable(&w("1 2 3 4 2 1 4 3")).unwrap());
    }

    #[test]
    fn trefoil_faces() {
        for e in spherical_embeddings(&w("1 2 3 1 2 3")).unwrap() {
            let mut d = faces(&e).degrees();
            d.sort();
            assert_eq!(d, vec![2, 2, 2, 3, 3]);
        }
    }

    #[test]
    fn kink_faces() {
        let e = &spherical_embeddings(&w("1 1")).unwrap()[0];
        let mut d = faces(e).degrees();
        d.sort();
        assert_eq!(d, vec![1, 1, 2]);
    }

    #[test]
    fn bound_is_enforced() {
        let big = GaussWord::new((1..=17).chain(1..=17).collect()).unwrap();
        assert_eq!(spherical_embeddings(&big).unwrap_err().code(), "BOUND_EXCEEDED");
    }

    #[test]
    fn orientation_flip_negates_signs() {
        let e = &spherical_embeddings(&w("1 2 3 4 2 1 4 3")).unwrap()[0];
        for b in 0..8 {
            let s = crossing_signs(e, b);
            let t = crossing_signs(&e.flipped(), b);
            for ((_, x), (_, y)) in s.signs.iter().zip(&t.signs) {
                assert_eq!(*x, -*y);
            }
        }
        let k = &spherical_embeddings(&w("1 1")).unwrap()[0];
        assert!(matches!(crossing_signs(k, 0).signs[0].1, -1 | 1));
    }

    #[test]
    fn embedding_json_shape() {
        let e = &spherical_embeddings(&w("1 1")).unwrap()[0];
        let v: serde_json::Value = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(v["word"], "1 1");
        assert!(v["vertex_config"].is_array());
        assert_eq!(v["orientation"], 1);
        let back: SphericalEmbedding = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(&back, e);
    }
}
