//! Exhaustive verification suites over the census.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{enumerate_exact_bounded, CensusFilter, CENSUS_MAX_CROSSINGS};
use crate::embed::{is_realizable, spherical_embeddings};
use crate::error::{Error, Result};
use crate::invariant::{
    averaged, averaged_with, indicators_from_counts, lambda, lambda_from_counts, st_factor_check,
    trivializable, MoveSet, FIGURE_EIGHT, SEVEN_LAMBDA_MINUS_THREE,
};
use crate::moves::{
    apply_flype, apply_move, check_delta_contract, list_flype_sites, list_sites, pattern_delta,
    MoveFamily, MoveKind, MoveSite, SiteLocation,
};
use crate::pattern::{count_named, count_pattern, graph_counts, Pattern};
use crate::word::GaussWord;

/// Seed of the additivity suite's random pairs.
pub const ADDITIVITY_SEED: u64 = 0x5eed_c40d;
pub const ADDITIVITY_PAIRS: usize = 1000;
/// Largest word the bounded reachability search starts from.
pub const THEOREM3_MAX_N: usize = 5;
/// Extra crossings intermediate words may carry in the reachability search.
pub const THEOREM3_SLACK: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Theorem2,
    Theorem3,
    Flype,
    Averaged,
    Additivity,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Theorem3,
        Suite::Flype,
        Suite::Averaged,
        Suite::Additivity,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem3 => "theorem3",
            Suite::Flype => "flype",
            Suite::Averaged => "averaged",
            Suite::Additivity => "additivity",
            Suite::Oracle => "oracle",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub word: String,
    pub site: Option<String>,
    pub detail: String,
}

impl Failure {
    fn new(word: &GaussWord, site: Option<String>, detail: impl Into<String>) -> Self {
        Failure { word: word.to_string(), site, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub n_max: usize,
    pub instances: u64,
    pub failures: Vec<Failure>,
    /// Findings worth reporting on a passing run, such as the flype pairs.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (n <= {}): {} instances, {} failures: {}",
            self.suite,
            self.n_max,
            self.instances,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        for x in self.failures.iter().take(50) {
            match &x.site {
                Some(s) => writeln!(f, "  FAIL \"{}\" at {}: {}", x.word, s, x.detail)?,
                None => writeln!(f, "  FAIL \"{}\": {}", x.word, x.detail)?,
            }
        }
        if self.failures.len() > 50 {
            writeln!(f, "  ... {} more", self.failures.len() - 50)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, fail: impl FnOnce() -> Failure) {
        self.instances += 1;
        if !ok {
            self.failures.push(fail());
        }
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.instances += o.instances;
        self.failures.extend(o.failures);
        self
    }
}

/// Runs `f` on every word in parallel, merging in word order.
fn over_words(words: &[GaussWord], f: impl Fn(&GaussWord) -> Tally + Sync + Send) -> Tally {
    words
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn words_upto(n_max: usize, filter: CensusFilter, max: usize) -> Result<Vec<GaussWord>> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.extend(enumerate_exact_bounded(n, filter, max)?);
    }
    Ok(out)
}

pub fn verify(suite: Suite, n_max: usize) -> Result<VerificationReport> {
    verify_bounded(suite, n_max, CENSUS_MAX_CROSSINGS)
}

/// As [`verify`], with the census guard raised or lowered to `max`.
pub fn verify_bounded(suite: Suite, n_max: usize, max: usize) -> Result<VerificationReport> {
    if n_max > max {
        return Err(Error::BoundExceeded { what: "verification crossing count", n: n_max, max });
    }
    let mut notes = Vec::new();
    let tally = match suite {
        Suite::Theorem1 => theorem1(&words_upto(n_max, CensusFilter::All, max)?),
        Suite::Theorem2 => theorem2(&words_upto(n_max, CensusFilter::All, max)?),
        Suite::Theorem3 => theorem3(n_max.min(THEOREM3_MAX_N), max)?,
        Suite::Flype => flype(n_max, max, &mut notes)?,
        Suite::Averaged => averaged_suite(n_max, max)?,
        Suite::Additivity => additivity(&words_upto(n_max, CensusFilter::All, max)?),
        Suite::Oracle => oracle(&words_upto(n_max, CensusFilter::All, max)?),
    };
    Ok(VerificationReport { suite, n_max, instances: tally.instances, failures: tally.failures, notes })
}

fn site_name(s: &MoveSite) -> Option<String> {
    Some(s.to_string())
}

/// Every site of every embedding, with the word the move produces.
fn all_moves(w: &GaussWord) -> Result<Vec<(MoveSite, GaussWord)>> {
    moves_of_kind(w, |_| true)
}

fn moves_of_kind(w: &GaussWord, keep: impl Fn(MoveKind) -> bool) -> Result<Vec<(MoveSite, GaussWord)>> {
    let mut out = Vec::new();
    for e in spherical_embeddings(w)? {
        for s in list_sites(w, &e)? {
            if keep(s.kind) {
                let next = apply_move(w, &s)?;
                out.push((s, next));
            }
        }
    }
    Ok(out)
}

fn fresh_labels(w: &GaussWord, next: &GaussWord) -> Vec<u32> {
    next.labels().into_iter().filter(|&x| x > w.max_label()).collect()
}

/// Whether some embedding of `next` offers a move undoing `s` back to `w`.
fn undo_exists(w: &GaussWord, s: &MoveSite, next: &GaussWord) -> Result<bool> {
    let target = w.canonical_form();
    let fresh = fresh_labels(w, next);
    for e in spherical_embeddings(next)? {
        for t in list_sites(next, &e)? {
            let matches = match (&s.kind.family(), &t.location) {
                (MoveFamily::Ri, SiteLocation::Letter { label }) if !s.kind.is_deletion() => {
                    fresh.contains(label)
                }
                (MoveFamily::StrongRii | MoveFamily::WeakRii, SiteLocation::Bigon { labels, .. })
                    if !s.kind.is_deletion() =>
                {
                    fresh.contains(&labels.0) && fresh.contains(&labels.1)
                }
                (MoveFamily::StrongRiii | MoveFamily::WeakRiii, SiteLocation::Triangle { .. }) => {
                    t.kind.family() == s.kind.family()
                }
                _ => false,
            };
            if matches && apply_move(next, &t)?.canonical_form() == target {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn theorem1(words: &[GaussWord]) -> Tally {
    over_words(words, |w| {
        let mut t = Tally::default();
        let moves = match all_moves(w) {
            Ok(m) => m,
            Err(e) => {
                t.check(false, || Failure::new(w, None, e.to_string()));
                return t;
            }
        };
        for (s, next) in moves {
            t.check(is_realizable(&next).unwrap_or(false), || {
                Failure::new(w, site_name(&s), format!("result \"{next}\" is not realizable"))
            });
            match pattern_delta(w, &s) {
                Ok(d) => {
                    let verdict = check_delta_contract(&d);
                    t.check(verdict.is_ok(), || {
                        Failure::new(w, site_name(&s), verdict.clone().unwrap_err())
                    });
                }
                Err(e) => t.check(false, || Failure::new(w, site_name(&s), e.to_string())),
            }
            if !s.kind.is_deletion() {
                let undo = undo_exists(w, &s, &next).unwrap_or(false);
                t.check(undo, || {
                    Failure::new(w, site_name(&s), format!("no inverse move from \"{next}\""))
                });
            }
        }
        t
    })
}

fn theorem2(words: &[GaussWord]) -> Tally {
    over_words(words, |w| {
        let mut t = Tally::default();
        let c = count_named(w);
        t.check(c.lambda_numerator().rem_euclid(4) == 0, || {
            Failure::new(w, None, format!("3h - 3tr + cross = {} is not divisible by 4", c.lambda_numerator()))
        });
        t.check(c.cross % 2 == c.triple % 2, || {
            Failure::new(w, None, format!("cross {} and triple {} differ in parity", c.cross, c.triple))
        });
        let Ok(before) = lambda_from_counts(&c) else { return t };
        let ind = indicators_from_counts(&c);
        let relevant = |k: MoveKind| {
            matches!(k.family(), MoveFamily::Ri | MoveFamily::StrongRiii | MoveFamily::WeakRiii)
        };
        let moves = match moves_of_kind(w, relevant) {
            Ok(m) => m,
            Err(e) => {
                t.check(false, || Failure::new(w, None, e.to_string()));
                return t;
            }
        };
        for (s, next) in moves {
            let c2 = count_named(&next);
            let ind2 = indicators_from_counts(&c2);
            let fam = s.kind.family();
            if matches!(fam, MoveFamily::Ri | MoveFamily::StrongRiii) {
                let after = lambda_from_counts(&c2);
                t.check(after == Ok(before), || {
                    Failure::new(w, site_name(&s), format!("lambda {before} -> {after:?}"))
                });
                t.check(ind2.h_ind == ind.h_ind, || {
                    Failure::new(w, site_name(&s), "H changed".to_string())
                });
            }
            if matches!(fam, MoveFamily::Ri | MoveFamily::WeakRiii) {
                t.check(ind2.x_ind == ind.x_ind, || {
                    Failure::new(w, site_name(&s), "X-tilde changed".to_string())
                });
            }
            if matches!(fam, MoveFamily::Ri | MoveFamily::StrongRiii) {
                t.check(c2.cross % 3 == c.cross % 3, || {
                    Failure::new(w, site_name(&s), "cross mod 3 changed".to_string())
                });
            }
        }
        t
    })
}

fn bfs_kinds(set: MoveSet) -> Vec<MoveKind> {
    let mut kinds = vec![MoveKind::RiAdd, MoveKind::RiDel];
    match set {
        MoveSet::Ri => {}
        MoveSet::RiWeakRiii => kinds.push(MoveKind::RiiiWeak),
        MoveSet::RiStrongRiii => kinds.push(MoveKind::RiiiStrong),
    }
    kinds
}

/// Canonical words reachable from the circle using `set`, never exceeding
/// `bound` crossings.
pub fn reachable_from_circle(set: MoveSet, bound: usize) -> Result<HashSet<GaussWord>> {
    let kinds = bfs_kinds(set);
    let start = GaussWord::circle();
    let mut seen: HashSet<GaussWord> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let mut next_words = BTreeSet::new();
        for e in spherical_embeddings(&w)? {
            for s in list_sites(&w, &e)? {
                if !kinds.contains(&s.kind) {
                    continue;
                }
                let next = apply_move(&w, &s)?.canonical_form();
                if next.crossing_count() <= bound {
                    next_words.insert(next);
                }
            }
        }
        for next in next_words {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

fn theorem3(n_max: usize, max: usize) -> Result<Tally> {
    let words = words_upto(n_max, CensusFilter::All, max)?;
    let classes: Vec<(MoveSet, HashSet<GaussWord>)> = MoveSet::ALL
        .par_iter()
        .map(|&set| Ok((set, reachable_from_circle(set, n_max + THEOREM3_SLACK)?)))
        .collect::<Result<_>>()?;
    let mut t = Tally::default();
    for w in &words {
        for (set, class) in &classes {
            let searched = class.contains(w);
            match trivializable(w, *set) {
                Ok(decided) => t.check(decided == searched, || {
                    Failure::new(
                        w,
                        Some(set.name().to_string()),
                        format!("decider says {decided}, bounded search says {searched}"),
                    )
                }),
                Err(e) => t.check(false, || Failure::new(w, Some(set.name().to_string()), e.to_string())),
            }
        }
    }
    let p1 = crate::invariant::torus_word(1);
    let p2 = crate::invariant::torus_word(2);
    t.check(trivializable(&p1, MoveSet::RiStrongRiii) == Ok(true), || {
        Failure::new(&p1, Some("RI+strongRIII".into()), "expected trivializable")
    });
    t.check(trivializable(&p2, MoveSet::RiStrongRiii) == Ok(false), || {
        Failure::new(&p2, Some("RI+strongRIII".into()), "expected not trivializable")
    });
    Ok(t)
}

fn flype(n_max: usize, max: usize, notes: &mut Vec<String>) -> Result<Tally> {
    let mut t = Tally::default();
    let mut by_n: Vec<BTreeSet<GaussWord>> = Vec::new();
    for n in 0..=n_max {
        by_n.push(enumerate_exact_bounded(n, CensusFilter::PrimeReduced, max)?.into_iter().collect());
    }
    let records: Vec<GaussWord> = by_n.iter().flatten().cloned().collect();
    let results: Vec<(Tally, BTreeSet<(GaussWord, GaussWord)>)> = records
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            let mut pairs = BTreeSet::new();
            let before = count_named(w);
            let census = &by_n[w.crossing_count()];
            for s in list_flype_sites(w) {
                let site = Some(format!("{s:?}"));
                let next = match apply_flype(w, &s) {
                    Ok(x) => x,
                    Err(e) => {
                        t.check(false, || Failure::new(w, site, e.to_string()));
                        continue;
                    }
                };
                t.check(count_named(&next) == before, || {
                    Failure::new(w, site.clone(), format!("counts changed on \"{next}\""))
                });
                let c = next.canonical_form();
                t.check(census.contains(&c), || {
                    Failure::new(w, site.clone(), format!("\"{c}\" is not in the census"))
                });
                let back = list_flype_sites(&next)
                    .into_iter()
                    .any(|r| apply_flype(&next, &r).map(|x| x.canonical_form()) == Ok(w.clone()));
                t.check(back, || Failure::new(w, site.clone(), "no inverse flype"));
                if c != *w {
                    pairs.insert(if *w < c { (w.clone(), c) } else { (c, w.clone()) });
                }
            }
            (t, pairs)
        })
        .collect();
    let mut pairs = BTreeSet::new();
    for (x, p) in results {
        t = t.merge(x);
        pairs.extend(p);
    }
    let mut per_n: BTreeMap<usize, usize> = BTreeMap::new();
    for (a, b) in &pairs {
        *per_n.entry(a.crossing_count()).or_default() += 1;
        notes.push(format!("flype pair: \"{a}\" <-> \"{b}\""));
    }
    if n_max >= 7 {
        let k = per_n.get(&7).copied().unwrap_or(0);
        t.check(k >= 3, || Failure::new(&GaussWord::circle(), None, format!("only {k} flype pairs at n = 7")));
    }
    Ok(t)
}

/// Averaged-invariant multisets of the prime reduced projections, sorted.
pub fn averaged_table(n: usize) -> Option<Vec<i64>> {
    let v: &[i64] = match n {
        0..=2 => &[],
        3 => &[-1],
        4 => &[0],
        5 => &[-2, -1],
        6 => &[-2, -1, 0],
        7 => &[-3, -2, -2, -2, -1, -1, -1, -1, 0, 0],
        _ => return None,
    };
    Some(v.to_vec())
}

fn averaged_suite(n_max: usize, max: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let o = GaussWord::circle();
    t.check(averaged(&o) == Ok(0), || Failure::new(&o, None, "a(circle) != 0"));
    for n in 0..=n_max {
        let Some(expected) = averaged_table(n) else { continue };
        let words = enumerate_exact_bounded(n, CensusFilter::PrimeReduced, max)?;
        let mut got: Vec<i64> = words.iter().map(averaged).collect::<Result<_>>()?;
        got.sort_unstable();
        t.check(got == expected, || {
            Failure::new(&o, Some(format!("n = {n}")), format!("multiset {got:?}, table {expected:?}"))
        });
    }
    let words = words_upto(n_max, CensusFilter::All, max)?;
    let moves_upto = n_max.min(6);
    Ok(t.merge(over_words(&words, |w| {
        let mut t = Tally::default();
        let Ok(a) = averaged(w) else {
            t.check(false, || Failure::new(w, None, "averaged failed"));
            return t;
        };
        for e in spherical_embeddings(w).unwrap_or_default() {
            for b in 0..w.len().max(1) {
                let x = averaged_with(&e, b);
                t.check(x == a, || {
                    Failure::new(w, Some(format!("basepoint {b}, config {:?}", e.vertex_config())), format!("{x} != {a}"))
                });
            }
        }
        for v in [w.reversed(), w.rotated(1 % w.len().max(1)), w.relabeled(|x| 100 - x)] {
            let x = averaged(&v);
            t.check(x == Ok(a), || Failure::new(w, Some(format!("symmetric copy \"{v}\"")), format!("{x:?} != {a}")));
        }
        if w.crossing_count() > moves_upto {
            return t;
        }
        for (s, next) in all_moves(w).unwrap_or_default() {
            let Ok(b) = averaged(&next) else {
                t.check(false, || Failure::new(w, site_name(&s), "averaged failed after the move"));
                continue;
            };
            let d = (b - a).abs();
            let ok = match s.kind.family() {
                MoveFamily::Ri | MoveFamily::StrongRii => d == 0,
                MoveFamily::WeakRii | MoveFamily::StrongRiii | MoveFamily::WeakRiii => d == 1,
            };
            t.check(ok, || Failure::new(w, site_name(&s), format!("a changed by {}", b - a)));
        }
        t
    })))
}

fn additivity(words: &[GaussWord]) -> Tally {
    let mut t = Tally::default();
    let fig8: GaussWord = FIGURE_EIGHT.parse().expect("figure eight");
    let seven: GaussWord = SEVEN_LAMBDA_MINUS_THREE.parse().expect("seven crossing word");
    for (other, expected) in [(crate::invariant::torus_word(2), -1), (seven, 1)] {
        let sum = fig8.connected_sum(&other);
        t.check(lambda(&sum) == Ok(expected), || {
            Failure::new(&sum, None, format!("lambda {:?}, expected {expected}", lambda(&sum)))
        });
    }
    let nonempty: Vec<&GaussWord> = words.iter().filter(|w| !w.is_empty()).collect();
    if nonempty.is_empty() {
        return t;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ADDITIVITY_SEED);
    let pairs: Vec<(GaussWord, GaussWord)> = (0..ADDITIVITY_PAIRS)
        .map(|_| {
            let a = nonempty[rng.gen_range(0..nonempty.len())].clone();
            let b = nonempty[rng.gen_range(0..nonempty.len())];
            let b = b.rotated(rng.gen_range(0..b.len()));
            (a, b)
        })
        .collect();
    let checked: Vec<Tally> = pairs
        .par_iter()
        .map(|(a, b)| {
            let mut t = Tally::default();
            let sum = a.connected_sum(b);
            let (ca, cb, cs) = (count_named(a), count_named(b), count_named(&sum));
            t.check(cs == ca + cb, || {
                Failure::new(&sum, Some(format!("\"{a}\" # \"{b}\"")), format!("{cs:?} != {ca:?} + {cb:?}"))
            });
            let (la, lb, ls) = (lambda(a), lambda(b), lambda(&sum));
            t.check(la.is_ok() && lb.is_ok() && ls == Ok(la.clone().unwrap_or(0) + lb.clone().unwrap_or(0)), || {
                Failure::new(&sum, None, format!("lambda {ls:?} != {la:?} + {lb:?}"))
            });
            t.check(is_realizable(&sum).unwrap_or(false), || Failure::new(&sum, None, "not realizable"));
            let mut got: Vec<GaussWord> = sum.decompose().iter().map(GaussWord::canonical_form).collect();
            let mut want: Vec<GaussWord> =
                a.decompose().iter().chain(b.decompose().iter()).map(GaussWord::canonical_form).collect();
            got.sort();
            want.sort();
            t.check(got == want, || Failure::new(&sum, None, "factor multiset differs from the summands'"));
            t
        })
        .collect();
    checked.into_iter().fold(t, Tally::merge)
}

/// Every 4-chord diagram whose interlacement graph is a 4-cycle (resp. a claw)
/// is the HH (resp. III) configuration.
fn four_chord_uniqueness(t: &mut Tally) {
    let (hh, iii) = (Pattern::hh(), Pattern::iii());
    for perm in (0..8usize).permutations(8) {
        // perm lists positions; chords are consecutive pairs of positions
        if perm.chunks(2).any(|c| c[0] > c[1]) || !perm.chunks(2).map(|c| c[0]).tuple_windows().all(|(a, b)| a < b) {
            continue;
        }
        let mut letters = [0u32; 8];
        for (k, c) in perm.chunks(2).enumerate() {
            letters[c[0]] = k as u32 + 1;
            letters[c[1]] = k as u32 + 1;
        }
        let w = GaussWord::new(letters.to_vec()).expect("matching");
        let g = graph_counts(&w);
        let c = w.canonical_form();
        if g.hh == 1 {
            t.check(c == *hh.word(), || Failure::new(&w, None, "4-cycle interlacement but not HH"));
        }
        if g.iii == 1 {
            t.check(c == *iii.word(), || Failure::new(&w, None, "claw interlacement but not III"));
        }
    }
}

fn oracle(words: &[GaussWord]) -> Tally {
    let mut t = Tally::default();
    four_chord_uniqueness(&mut t);
    let patterns = [Pattern::cross(), Pattern::triple(), Pattern::h(), Pattern::iii(), Pattern::hh()];
    t.merge(over_words(words, |w| {
        let mut t = Tally::default();
        let named = count_named(w);
        let graph = graph_counts(w);
        t.check(named == graph, || Failure::new(w, None, format!("named {named:?} != graph {graph:?}")));
        let generic: Vec<u64> = patterns.iter().map(|p| count_pattern(w, p)).collect();
        t.check(generic == named.as_array(), || {
            Failure::new(w, None, format!("count_pattern {generic:?} != {:?}", named.as_array()))
        });
        let n = w.crossing_count() as u64;
        t.check(named.triple * 3 <= named.cross * n.saturating_sub(2), || {
            Failure::new(w, None, "triple count exceeds its bound")
        });
        match st_factor_check(w) {
            Ok(st) => t.check(st == (named.h == 0), || {
                Failure::new(w, None, format!("factor check {st} but h = {}", named.h))
            }),
            Err(e) => t.check(false, || Failure::new(w, None, e.to_string())),
        }
        t
    }))
}

/// Per-suite default sizes used by the acceptance criteria.
pub fn default_n(suite: Suite) -> usize {
    match suite {
        Suite::Theorem1 => 6,
        Suite::Theorem3 => THEOREM3_MAX_N,
        _ => 7,
    }
}

/// `(n, words)` histogram of a word list.
pub fn counts_by_n(words: &[GaussWord]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for w in words {
        *m.entry(w.crossing_count()).or_default() += 1;
    }
    m
}
