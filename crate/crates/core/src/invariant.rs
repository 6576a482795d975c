//! Invariants built from the sub-chord counts: lambda, the H and X-tilde
//! indicators, the averaged invariant, and the trivializability deciders.

use serde::{Deserialize, Serialize};

use crate::embed::{crossing_signs, find_embedding, SphericalEmbedding};
use crate::error::{Error, Result};
use crate::pattern::{count_named, PatternCounts};
use crate::word::GaussWord;

/// Figure-eight shadow, the unique 4-crossing prime reduced projection.
pub const FIGURE_EIGHT: &str = "1 2 3 4 2 1 4 3";

/// A 7-crossing prime reduced projection with lambda = -3.
pub const SEVEN_LAMBDA_MINUS_THREE: &str = "1 2 3 4 5 1 6 7 2 3 4 5 7 6";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub lambda: i64,
    #[serde(rename = "H")]
    pub h_ind: u8,
    #[serde(rename = "Xtilde")]
    pub x_ind: u8,
    pub cross_mod2: u8,
    pub cross_mod3: u8,
    pub averaged: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indicators {
    pub h_ind: u8,
    pub x_ind: u8,
    pub cross_mod2: u8,
    pub cross_mod3: u8,
}

/// Move sets of the trivializability deciders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveSet {
    #[serde(rename = "RI")]
    Ri,
    #[serde(rename = "RI+weakRIII")]
    RiWeakRiii,
    #[serde(rename = "RI+strongRIII")]
    RiStrongRiii,
}

impl MoveSet {
    pub const ALL: [MoveSet; 3] = [MoveSet::Ri, MoveSet::RiWeakRiii, MoveSet::RiStrongRiii];

    pub fn name(self) -> &'static str {
        match self {
            MoveSet::Ri => "RI",
            MoveSet::RiWeakRiii => "RI+weakRIII",
            MoveSet::RiStrongRiii => "RI+strongRIII",
        }
    }
}

fn require_realizable(w: &GaussWord) -> Result<SphericalEmbedding> {
    find_embedding(w)?.ok_or_else(|| Error::NotRealizable(w.to_string()))
}

/// `(3h - 3tr + cross) / 4`; a non-zero remainder is reported, never rounded.
pub fn lambda_from_counts(c: &PatternCounts) -> Result<i64> {
    let num = c.lambda_numerator();
    if num % 4 != 0 {
        return Err(Error::NonIntegral(num));
    }
    Ok(num / 4)
}

/// Lambda without a realizability check, so it also works above the
/// embedding-search bound.
pub fn lambda(w: &GaussWord) -> Result<i64> {
    lambda_from_counts(&count_named(w))
}

pub fn lambda_checked(w: &GaussWord) -> Result<i64> {
    require_realizable(w)?;
    lambda(w)
}

/// `1 2 .. (2i+1) 1 2 .. (2i+1)`, the (2, 2i+1)-torus projection.
pub fn torus_word(i: u32) -> GaussWord {
    assert!(i >= 1, "torus_word needs i >= 1");
    let m = 2 * i + 1;
    GaussWord::new((1..=m).chain(1..=m).collect()).expect("double occurrence")
}

pub fn indicators_from_counts(c: &PatternCounts) -> Indicators {
    Indicators {
        h_ind: u8::from(c.h != 0),
        x_ind: u8::from(c.cross != 0),
        cross_mod2: (c.cross % 2) as u8,
        cross_mod3: (c.cross % 3) as u8,
    }
}

pub fn indicators(w: &GaussWord) -> Indicators {
    indicators_from_counts(&count_named(w))
}

/// Based cross-chord sum: for every pair of interlaced chords, the product of
/// their signs seen from `basepoint`.
pub fn averaged_with(e: &SphericalEmbedding, basepoint: usize) -> i64 {
    let signs = crossing_signs(e, basepoint);
    let g = e.word().interlacement();
    g.edges()
        .into_iter()
        .map(|(i, j)| i64::from(signs.signs[i].1) * i64::from(signs.signs[j].1))
        .sum()
}

/// The averaged invariant `-(J+ + 2 St) / 2`, from the first embedding and the
/// basepoint before position 0.
pub fn averaged(w: &GaussWord) -> Result<i64> {
    let e = require_realizable(w)?;
    Ok(averaged_with(&e, 0))
}

/// Whether `w` can be related to the circle using only moves from `set`.
pub fn trivializable(w: &GaussWord, set: MoveSet) -> Result<bool> {
    require_realizable(w)?;
    let c = count_named(w);
    Ok(match set {
        MoveSet::Ri | MoveSet::RiWeakRiii => c.cross == 0,
        MoveSet::RiStrongRiii => c.h == 0 && lambda_from_counts(&c)? == 0,
    })
}

/// The `tr = 0 and lambda = 0` form of the RI decider.
pub fn trivializable_by_ri_via_triple(w: &GaussWord) -> Result<bool> {
    require_realizable(w)?;
    let c = count_named(w);
    Ok(c.triple == 0 && lambda_from_counts(&c)? == 0)
}

/// Every connected-sum factor is a kink or has pairwise crossing chords.
pub fn st_factor_check(w: &GaussWord) -> Result<bool> {
    require_realizable(w)?;
    Ok(w.decompose().iter().all(|f| {
        let g = f.interlacement();
        g.edges().len() == g.vertex_count() * (g.vertex_count() - 1) / 2
    }))
}

pub fn invariant_report(w: &GaussWord) -> Result<InvariantReport> {
    let e = require_realizable(w)?;
    let c = count_named(w);
    let ind = indicators_from_counts(&c);
    Ok(InvariantReport {
        lambda: lambda_from_counts(&c)?,
        h_ind: ind.h_ind,
        x_ind: ind.x_ind,
        cross_mod2: ind.cross_mod2,
        cross_mod3: ind.cross_mod3,
        averaged: averaged_with(&e, 0),
    })
}

/// A projection with lambda = `k`: connected sums of figure-eight with the
/// 5-crossing torus shadow (lambda -1 each) or with a lambda -3 seven-crossing
/// projection (lambda +1 each); the trefoil for `k = 0`.
pub fn lambda_witness(k: i64) -> GaussWord {
    let fig8: GaussWord = FIGURE_EIGHT.parse().expect("figure eight");
    let unit = if k > 0 {
        fig8.connected_sum(&SEVEN_LAMBDA_MINUS_THREE.parse().expect("seven crossing word"))
    } else {
        fig8.connected_sum(&torus_word(2))
    };
    if k == 0 {
        return torus_word(1);
    }
    (0..k.unsigned_abs()).fold(GaussWord::circle(), |acc, _| acc.connected_sum(&unit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GaussWord {
        s.parse().unwrap()
    }

    fn binom(n: i64, k: i64) -> i64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn lambda_anchors() {
        assert_eq!(lambda_checked(&w("1 2 3 1 2 3")).unwrap(), 0);
        assert_eq!(lambda_checked(&w(FIGURE_EIGHT)).unwrap(), 4);
        assert_eq!(lambda_checked(&w("1 2 3 4 5 1 2 3 4 5")).unwrap(), -5);
        assert_eq!(lambda_checked(&w(SEVEN_LAMBDA_MINUS_THREE)).unwrap(), -3);
    }

    #[test]
    fn non_integral_is_an_error() {
        let c = PatternCounts { cross: 1, ..Default::default() };
        assert_eq!(lambda_from_counts(&c).unwrap_err().code(), "NON_INTEGRAL");
        assert_eq!(lambda_checked(&w("1 2 1 2")).unwrap_err().code(), "NOT_REALIZABLE");
    }

    #[test]
    fn torus_words() {
        assert_eq!(torus_word(1), w("1 2 3 1 2 3"));
        assert_eq!(torus_word(2), w("1 2 3 4 5 1 2 3 4 5"));
        for i in 1..=4 {
            let m = 2 * i as i64 + 1;
            assert_eq!(lambda(&torus_word(i)).unwrap() * 4, -3 * binom(m, 3) + binom(m, 2));
        }
    }

    #[test]
    fn indicator_examples() {
        let t = |h, x, m2, m3| Indicators { h_ind: h, x_ind: x, cross_mod2: m2, cross_mod3: m3 };
        assert_eq!(indicators(&w("1 2 3 1 2 3")), t(0, 1, 1, 0));
        assert_eq!(indicators(&w("1 1 2 2")), t(0, 0, 0, 0));
        assert_eq!(indicators(&w(FIGURE_EIGHT)), t(1, 1, 0, 1));
    }

    #[test]
    fn averaged_anchors() {
        assert_eq!(averaged(&w("")).unwrap(), 0);
        assert_eq!(averaged(&w("1 2 3 1 2 3")).unwrap(), -1);
        assert_eq!(averaged(&w(FIGURE_EIGHT)).unwrap(), 0);
        assert_eq!(averaged(&w("1 2 1 2")).unwrap_err().code(), "NOT_REALIZABLE");
    }

    #[test]
    fn decider_examples() {
        assert!(trivializable(&torus_word(1), MoveSet::RiStrongRiii).unwrap());
        assert!(!trivializable(&torus_word(2), MoveSet::RiStrongRiii).unwrap());
        assert!(trivializable(&w("1 1 2 2"), MoveSet::Ri).unwrap());
        assert!(!trivializable(&torus_word(1), MoveSet::RiWeakRiii).unwrap());
        assert!(!trivializable_by_ri_via_triple(&torus_word(1)).unwrap());
    }

    #[test]
    fn st_factor_examples() {
        assert!(st_factor_check(&w("1 1 2 3 4 2 3 4")).unwrap());
        assert!(!st_factor_check(&w(FIGURE_EIGHT)).unwrap());
        assert!(st_factor_check(&w("")).unwrap());
    }

    #[test]
    fn lambda_witness_hits_every_small_integer() {
        for k in -5..=5 {
            assert_eq!(lambda(&lambda_witness(k)).unwrap(), k, "k = {k}");
        }
        assert_eq!(lambda(&w(FIGURE_EIGHT).connected_sum(&torus_word(2))).unwrap(), -1);
        assert_eq!(
            lambda(&w(FIGURE_EIGHT).connected_sum(&w(SEVEN_LAMBDA_MINUS_THREE))).unwrap(),
            1
        );
    }
}
