//! Classified Reidemeister moves and flypes, with sub-chord count deltas.

mod flype;
mod reidemeister;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embed::Dart;
use crate::error::Result;
use crate::invariant::lambda_from_counts;
use crate::pattern::{count_named, CountDelta, PatternCounts};
use crate::word::GaussWord;

pub use flype::{apply_flype, list_flype_sites, ArcEnd, EndSide, FlypeCase, FlypeSite, TangleArc};
pub use reidemeister::{apply_move, list_sites};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "RI_add")]
    RiAdd,
    #[serde(rename = "RI_del")]
    RiDel,
    #[serde(rename = "RII_strong_add")]
    RiiStrongAdd,
    #[serde(rename = "RII_strong_del")]
    RiiStrongDel,
    #[serde(rename = "RII_weak_add")]
    RiiWeakAdd,
    #[serde(rename = "RII_weak_del")]
    RiiWeakDel,
    #[serde(rename = "RIII_strong")]
    RiiiStrong,
    #[serde(rename = "RIII_weak")]
    RiiiWeak,
}

/// The five move types, without direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveFamily {
    #[serde(rename = "RI")]
    Ri,
    #[serde(rename = "sRII")]
    StrongRii,
    #[serde(rename = "wRII")]
    WeakRii,
    #[serde(rename = "sRIII")]
    StrongRiii,
    #[serde(rename = "wRIII")]
    WeakRiii,
}

impl MoveFamily {
    pub const ALL: [MoveFamily; 5] = [
        MoveFamily::Ri,
        MoveFamily::StrongRii,
        MoveFamily::WeakRii,
        MoveFamily::StrongRiii,
        MoveFamily::WeakRiii,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveFamily::Ri => "RI",
            MoveFamily::StrongRii => "sRII",
            MoveFamily::WeakRii => "wRII",
            MoveFamily::StrongRiii => "sRIII",
            MoveFamily::WeakRiii => "wRIII",
        }
    }
}

impl MoveKind {
    pub fn family(self) -> MoveFamily {
        match self {
            MoveKind::RiAdd | MoveKind::RiDel => MoveFamily::Ri,
            MoveKind::RiiStrongAdd | MoveKind::RiiStrongDel => MoveFamily::StrongRii,
            MoveKind::RiiWeakAdd | MoveKind::RiiWeakDel => MoveFamily::WeakRii,
            MoveKind::RiiiStrong => MoveFamily::StrongRiii,
            MoveKind::RiiiWeak => MoveFamily::WeakRiii,
        }
    }

    pub fn is_deletion(self) -> bool {
        matches!(self, MoveKind::RiDel | MoveKind::RiiStrongDel | MoveKind::RiiWeakDel)
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::RiAdd => "RI_add",
            MoveKind::RiDel => "RI_del",
            MoveKind::RiiStrongAdd => "RII_strong_add",
            MoveKind::RiiStrongDel => "RII_strong_del",
            MoveKind::RiiWeakAdd => "RII_weak_add",
            MoveKind::RiiWeakDel => "RII_weak_del",
            MoveKind::RiiiStrong => "RIII_strong",
            MoveKind::RiiiWeak => "RIII_weak",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a move happens. Edge `i` joins word positions `i` and `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SiteLocation {
    /// A kink is inserted on this edge.
    Edge { edge: usize },
    /// A letter whose two occurrences are cyclically adjacent.
    Letter { label: u32 },
    /// A bigon face bounded by two edges joining `labels`.
    Bigon { face: usize, labels: (u32, u32), edges: [usize; 2] },
    /// Two sides of a common face; a finger is pushed from `first` across `second`.
    FacePair { face: usize, first: Dart, second: Dart },
    /// A triangular face.
    Triangle { face: usize, edges: [usize; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub location: SiteLocation,
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<15}", self.kind.name())?;
        match &self.location {
            SiteLocation::Edge { edge } => write!(f, "edge {edge}"),
            SiteLocation::Letter { label } => write!(f, "letter {label}"),
            SiteLocation::Bigon { face, labels, edges } => {
                write!(f, "face {face}: {{{}, {}}} on edges {:?}", labels.0, labels.1, edges)
            }
            SiteLocation::FacePair { face, first, second } => write!(
                f,
                "face {face}: edge {}{} -> edge {}{}",
                first.edge,
                if first.forward { "+" } else { "-" },
                second.edge,
                if second.forward { "+" } else { "-" }
            ),
            SiteLocation::Triangle { face, edges } => write!(f, "face {face}: edges {edges:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub kind: MoveKind,
    pub before: PatternCounts,
    pub after: PatternCounts,
    pub delta: CountDelta,
    pub lambda_delta: i64,
}

pub fn pattern_delta(w: &GaussWord, s: &MoveSite) -> Result<DeltaReport> {
    let after_word = apply_move(w, s)?;
    let before = count_named(w);
    let after = count_named(&after_word);
    Ok(DeltaReport {
        kind: s.kind,
        before,
        after,
        delta: after - before,
        lambda_delta: lambda_from_counts(&after)? - lambda_from_counts(&before)?,
    })
}

/// Checks a delta against the increment table for its move type. Deletions are
/// checked as the negated addition.
pub fn check_delta_contract(r: &DeltaReport) -> std::result::Result<(), String> {
    let sign = if r.kind.is_deletion() { -1 } else { 1 };
    let d = CountDelta {
        cross: sign * r.delta.cross,
        triple: sign * r.delta.triple,
        h: sign * r.delta.h,
        iii: sign * r.delta.iii,
        hh: sign * r.delta.hh,
    };
    let odd = |x: i64| x.rem_euclid(2) == 1;
    let even = |x: i64| x.rem_euclid(2) == 0;
    let ok = match r.kind.family() {
        MoveFamily::Ri => d == CountDelta::default(),
        MoveFamily::StrongRii => {
            d.cross.rem_euclid(4) == 0 && even(d.triple) && even(d.h) && even(d.iii)
        }
        MoveFamily::WeakRii => d.cross.rem_euclid(4) == 3 && odd(d.triple) && even(d.h) && even(d.iii),
        MoveFamily::StrongRiii => d.cross.abs() == 3 && odd(d.triple) && even(d.h) && even(d.iii),
        MoveFamily::WeakRiii => d.cross.abs() == 1 && odd(d.triple) && even(d.h) && even(d.iii),
    };
    if !ok {
        return Err(format!("{} delta {:?} violates the increment table", r.kind, r.delta));
    }
    let num = 3 * r.delta.h - 3 * r.delta.triple + r.delta.cross;
    if num.rem_euclid(4) != 0 {
        return Err(format!("{}: 3dh - 3dtr + dcross = {num} is not divisible by 4", r.kind));
    }
    if matches!(r.kind.family(), MoveFamily::Ri | MoveFamily::StrongRiii) && num != 0 {
        return Err(format!("{}: lambda changed by {}", r.kind, num / 4));
    }
    Ok(())
}
