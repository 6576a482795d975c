//! Enumeration of canonical realizable Gauss words by crossing count.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embed::{find_embedding, is_realizable};
use crate::error::{Error, Result};
use crate::invariant::{averaged_with, indicators_from_counts, lambda_from_counts};
use crate::pattern::count_named;
use crate::word::{canonical_letters, GaussWord};

/// Largest crossing count [`enumerate`] accepts.
pub const CENSUS_MAX_CROSSINGS: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusFilter {
    All,
    #[default]
    PrimeReduced,
}

impl CensusFilter {
    pub fn accepts(self, w: &GaussWord) -> bool {
        match self {
            CensusFilter::All => true,
            CensusFilter::PrimeReduced => w.is_reduced() && w.is_prime(),
        }
    }
}

/// One catalog row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub word: GaussWord,
    pub n: usize,
    pub cross: u64,
    pub triple: u64,
    pub h: u64,
    pub iii: u64,
    pub hh: u64,
    pub lambda: i64,
    #[serde(rename = "H")]
    pub h_ind: u8,
    #[serde(rename = "Xtilde")]
    pub x_ind: u8,
    pub averaged: i64,
    pub prime: bool,
    pub reduced: bool,
}

const CSV_HEADER: [&str; 11] =
    ["word", "n", "cross", "triple", "h", "iii", "hh", "lambda", "H", "Xtilde", "averaged"];

impl CensusRecord {
    pub fn from_word(word: GaussWord) -> Result<Self> {
        let e = find_embedding(&word)?.ok_or_else(|| Error::NotRealizable(word.to_string()))?;
        let c = count_named(&word);
        let ind = indicators_from_counts(&c);
        Ok(CensusRecord {
            n: word.crossing_count(),
            cross: c.cross,
            triple: c.triple,
            h: c.h,
            iii: c.iii,
            hh: c.hh,
            lambda: lambda_from_counts(&c)?,
            h_ind: ind.h_ind,
            x_ind: ind.x_ind,
            averaged: averaged_with(&e, 0),
            prime: word.is_prime(),
            reduced: word.is_reduced(),
            word,
        })
    }
}

/// Every normalized word with `n` chords (labels in first-occurrence order),
/// with position 0 paired to position `partner`.
fn normalized_words_with_partner(n: usize, partner: usize, out: &mut Vec<Vec<u32>>) {
    let len = 2 * n;
    let mut letters = vec![0u32; len];
    letters[0] = 1;
    letters[partner] = 1;
    fn go(letters: &mut [u32], pos: usize, next: u32, out: &mut Vec<Vec<u32>>) {
        let len = letters.len();
        if pos == len {
            out.push(letters.to_vec());
            return;
        }
        if letters[pos] != 0 {
            return go(letters, pos + 1, next, out);
        }
        // open a new chord here and close it at every later free slot
        for q in pos + 1..len {
            if letters[q] == 0 {
                letters[pos] = next;
                letters[q] = next;
                go(letters, pos + 1, next + 1, out);
                letters[q] = 0;
            }
        }
        letters[pos] = 0;
    }
    go(&mut letters, 1, 2, out);
}

fn canonical_words(n: usize) -> Vec<GaussWord> {
    if n == 0 {
        return vec![GaussWord::circle()];
    }
    let mut words: Vec<GaussWord> = (1..2 * n)
        .into_par_iter()
        .flat_map_iter(|partner| {
            let mut all = Vec::new();
            normalized_words_with_partner(n, partner, &mut all);
            all.into_iter().filter_map(|letters| {
                let seq: Vec<usize> = letters.iter().map(|&x| x as usize - 1).collect();
                (canonical_letters(&seq) == letters)
                    .then(|| GaussWord::new(letters).expect("matching"))
            })
        })
        .collect();
    words.sort_by(|a, b| a.letters().cmp(b.letters()));
    words
}

/// Canonical realizable words with exactly `n` crossings accepted by `filter`.
pub fn enumerate_exact(n: usize, filter: CensusFilter) -> Result<Vec<GaussWord>> {
    enumerate_exact_bounded(n, filter, CENSUS_MAX_CROSSINGS)
}

/// As [`enumerate_exact`], with the guard set to `max` instead of
/// [`CENSUS_MAX_CROSSINGS`].
pub fn enumerate_exact_bounded(n: usize, filter: CensusFilter, max: usize) -> Result<Vec<GaussWord>> {
    if n > max {
        return Err(Error::BoundExceeded { what: "census crossing count", n, max });
    }
    let words = canonical_words(n);
    let keep: Vec<Option<GaussWord>> = words
        .into_par_iter()
        .map(|w| -> Result<Option<GaussWord>> {
            Ok((filter.accepts(&w) && is_realizable(&w)?).then_some(w))
        })
        .collect::<Result<_>>()?;
    Ok(keep.into_iter().flatten().collect())
}

/// Catalog rows for every `n` from 0 to `n_max`, ordered by `n` then word.
pub fn enumerate(n_max: usize, filter: CensusFilter) -> Result<Vec<CensusRecord>> {
    enumerate_bounded(n_max, filter, CENSUS_MAX_CROSSINGS)
}

pub fn enumerate_bounded(n_max: usize, filter: CensusFilter, max: usize) -> Result<Vec<CensusRecord>> {
    if n_max > max {
        return Err(Error::BoundExceeded { what: "census crossing count", n: n_max, max });
    }
    let mut out = Vec::new();
    for n in 0..=n_max {
        let rows: Vec<CensusRecord> = enumerate_exact_bounded(n, filter, max)?
            .into_par_iter()
            .map(CensusRecord::from_word)
            .collect::<Result<_>>()?;
        out.extend(rows);
    }
    Ok(out)
}

pub fn write_json<W: Write>(records: &[CensusRecord], out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, records).map_err(|e| Error::Io(e.to_string()))
}

pub fn write_csv<W: Write>(records: &[CensusRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        wtr.write_record([
            r.word.to_string(),
            r.n.to_string(),
            r.cross.to_string(),
            r.triple.to_string(),
            r.h.to_string(),
            r.iii.to_string(),
            r.hh.to_string(),
            r.lambda.to_string(),
            r.h_ind.to_string(),
            r.x_ind.to_string(),
            r.averaged.to_string(),
        ])
        .map_err(io)?;
    }
    wtr.flush().map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        for (n, expected) in [(1, 1), (2, 3), (3, 15), (4, 105)] {
            let total: usize = (1..2 * n)
                .map(|p| {
                    let mut v = Vec::new();
                    normalized_words_with_partner(n, p, &mut v);
                    v.len()
                })
                .sum();
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn small_prime_reduced_census() {
        let counts: Vec<usize> =
            (0..=5).map(|n| enumerate_exact(n, CensusFilter::PrimeReduced).unwrap().len()).collect();
        assert_eq!(counts, vec![0, 0, 0, 1, 1, 2]);
        assert_eq!(enumerate_exact(3, CensusFilter::PrimeReduced).unwrap()[0].to_string(), "1 2 3 1 2 3");
    }

    #[test]
    fn bound() {
        assert_eq!(enumerate(9, CensusFilter::All).unwrap_err().code(), "BOUND_EXCEEDED");
    }

    #[test]
    fn csv_header() {
        let rows = enumerate(3, CensusFilter::PrimeReduced).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "word,n,cross,triple,h,iii,hh,lambda,H,Xtilde,averaged\n1 2 3 1 2 3,3,3,1,0,0,0,0,0,1,-1\n"
        );
    }
}
