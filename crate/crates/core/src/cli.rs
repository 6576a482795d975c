//! The `subchord` command line.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{enumerate_bounded, write_csv, write_json, CensusFilter, CENSUS_MAX_CROSSINGS};
use crate::embed::{find_embedding, spherical_embeddings};
use crate::error::{Error, Result};
use crate::invariant::{invariant_report, trivializable, InvariantReport, MoveSet};
use crate::moves::{
    apply_flype, apply_move, list_flype_sites, list_sites, pattern_delta, DeltaReport, FlypeSite,
    MoveFamily, MoveSite,
};
use crate::pattern::{count_named, PatternCounts};
use crate::render::render_svg;
use crate::verify::{verify_bounded, Suite, VerificationReport};
use crate::word::GaussWord;

/// Environment variable overriding the census and verification bound.
pub const MAX_N_ENV: &str = "SUBCHORD_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "subchord", version, about = "Sub-chord diagram invariants of knot projections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Counts, invariants, factors and trivializability of a Gauss word.
    Analyze {
        code: String,
        #[arg(long)]
        json: bool,
    },
    /// Lists move sites with their classification and count deltas.
    Moves {
        code: String,
        /// Which spherical embedding to read faces from.
        #[arg(long, default_value_t = 0)]
        embedding: usize,
        #[arg(long)]
        json: bool,
    },
    /// Applies the move site with the given id and prints the canonical result.
    Apply {
        code: String,
        #[arg(long)]
        site: usize,
        #[arg(long, default_value_t = 0)]
        embedding: usize,
        #[arg(long)]
        json: bool,
    },
    /// Lists flype sites, or applies one with --site.
    Flype {
        code: String,
        #[arg(long)]
        site: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Prints the catalog of canonical realizable projections.
    Census {
        #[arg(short = 'n', default_value_t = 7)]
        n: usize,
        #[arg(long)]
        prime_reduced: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Runs a verification suite, or all of them.
    Verify {
        /// theorem1, theorem2, theorem3, flype, averaged, additivity, oracle or all
        suite: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Writes a schematic chord-diagram drawing.
    Render {
        code: String,
        /// Output path, or `-` for standard output.
        #[arg(long)]
        svg: String,
    },
    /// Prints the connected-sum factors.
    Decompose {
        code: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisOutput {
    pub word: GaussWord,
    pub realizable: bool,
    pub counts: PatternCounts,
    #[serde(flatten)]
    pub invariants: InvariantReport,
    pub prime: bool,
    pub reduced: bool,
    pub factors: Vec<GaussWord>,
    pub trivializable: BTreeMap<&'static str, bool>,
}

pub fn analysis(w: &GaussWord) -> Result<AnalysisOutput> {
    let invariants = invariant_report(w)?;
    let mut triv = BTreeMap::new();
    for set in MoveSet::ALL {
        triv.insert(set.name(), trivializable(w, set)?);
    }
    Ok(AnalysisOutput {
        word: w.canonical_form(),
        realizable: true,
        counts: count_named(w),
        invariants,
        prime: w.is_prime(),
        reduced: w.is_reduced(),
        factors: w.decompose(),
        trivializable: triv,
    })
}

enum Failure {
    Usage(String),
    Domain(Error),
    Verification,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn bound_from_env() -> std::result::Result<usize, String> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{MAX_N_ENV} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(CENSUS_MAX_CROSSINGS),
    }
}

/// Runs the CLI with the bound taken from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match bound_from_env() {
        Ok(max) => run_with_bound(args, max, out, err),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Runs the CLI with an explicit census and verification bound.
pub fn run_with_bound<I, T>(args: I, max_n: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, max_n, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {}", e.code(), e);
            EXIT_DOMAIN
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification) => EXIT_VERIFY,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: IO: {e}");
            EXIT_DOMAIN
        }
    }
}

fn parse(code: &str) -> Result<GaussWord> {
    code.parse()
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string(v).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn dispatch(cmd: Command, max_n: usize, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cmd {
        Command::Analyze { code, json } => {
            let a = analysis(&parse(&code)?)?;
            if json {
                json_line(out, &a)?;
            } else {
                print_analysis(out, &a)?;
            }
        }
        Command::Moves { code, embedding, json } => {
            let w = parse(&code)?;
            let sites = sites_of(&w, embedding)?;
            let deltas: Vec<DeltaReport> =
                sites.iter().map(|s| pattern_delta(&w, s)).collect::<Result<_>>()?;
            if json {
                #[derive(Serialize)]
                struct Row<'a> {
                    id: usize,
                    site: &'a MoveSite,
                    delta: &'a DeltaReport,
                }
                let rows: Vec<Row> = sites
                    .iter()
                    .zip(&deltas)
                    .enumerate()
                    .map(|(id, (site, delta))| Row { id, site, delta })
                    .collect();
                json_line(out, &rows)?;
            } else {
                print_moves(out, &sites, &deltas)?;
            }
        }
        Command::Apply { code, site, embedding, json } => {
            let w = parse(&code)?;
            let sites = sites_of(&w, embedding)?;
            let s = sites.get(site).ok_or_else(|| {
                Error::SiteInvalid(format!("site id {site} out of range; \"{w}\" has {} sites", sites.len()))
            })?;
            let result = apply_move(&w, s)?.canonical_form();
            if json {
                json_line(out, &serde_json::json!({ "site": s, "word": result }))?;
            } else {
                writeln!(out, "{result}")?;
            }
        }
        Command::Flype { code, site, json } => {
            let w = parse(&code)?;
            if find_embedding(&w)?.is_none() {
                return Err(Error::NotRealizable(w.to_string()).into());
            }
            let sites = list_flype_sites(&w);
            match site {
                Some(id) => {
                    let s = sites.get(id).ok_or_else(|| {
                        Error::SiteInvalid(format!("flype site id {id} out of range; \"{w}\" has {} sites", sites.len()))
                    })?;
                    let result = apply_flype(&w, s)?.canonical_form();
                    if json {
                        json_line(out, &serde_json::json!({ "site": s, "word": result }))?;
                    } else {
                        writeln!(out, "{result}")?;
                    }
                }
                None => {
                    if json {
                        json_line(out, &sites)?;
                    } else {
                        print_flypes(out, &w, &sites)?;
                    }
                }
            }
        }
        Command::Census { n, prime_reduced, format } => {
            let filter = if prime_reduced { CensusFilter::PrimeReduced } else { CensusFilter::All };
            let records = enumerate_bounded(n, filter, max_n)?;
            match format {
                Format::Csv => write_csv(&records, &mut *out)?,
                Format::Json => {
                    write_json(&records, &mut *out)?;
                    writeln!(out)?;
                }
            }
        }
        Command::Verify { suite, n, json } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(Failure::Usage)?]
            };
            let mut reports: Vec<VerificationReport> = Vec::new();
            for s in suites {
                let n = n.unwrap_or_else(|| crate::verify::default_n(s));
                reports.push(verify_bounded(s, n, max_n)?);
            }
            if json {
                if reports.len() == 1 {
                    json_line(out, &reports[0])?;
                } else {
                    json_line(out, &reports)?;
                }
            } else {
                for r in &reports {
                    write!(out, "{r}")?;
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Verification);
            }
        }
        Command::Render { code, svg } => {
            let doc = render_svg(&parse(&code)?);
            if svg == "-" {
                out.write_all(doc.as_bytes())?;
            } else {
                std::fs::write(&svg, doc)?;
            }
        }
        Command::Decompose { code, json } => {
            let factors = parse(&code)?.decompose();
            if json {
                json_line(out, &factors)?;
            } else {
                for f in &factors {
                    writeln!(out, "{f}")?;
                }
            }
        }
    }
    Ok(())
}

fn sites_of(w: &GaussWord, embedding: usize) -> Result<Vec<MoveSite>> {
    let all = spherical_embeddings(w)?;
    if all.is_empty() {
        return Err(Error::NotRealizable(w.to_string()));
    }
    let e = all.get(embedding).ok_or_else(|| {
        Error::SiteInvalid(format!("embedding {embedding} out of range; \"{w}\" has {}", all.len()))
    })?;
    list_sites(w, e)
}

fn print_analysis(out: &mut dyn Write, a: &AnalysisOutput) -> std::io::Result<()> {
    let c = &a.counts;
    let i = &a.invariants;
    let factors: Vec<String> = a.factors.iter().map(|f| format!("\"{f}\"")).collect();
    let rows: Vec<(&str, String)> = vec![
        ("word", a.word.to_string()),
        ("crossings", a.word.crossing_count().to_string()),
        ("counts", format!("cross {}  triple {}  h {}  iii {}  hh {}", c.cross, c.triple, c.h, c.iii, c.hh)),
        ("lambda", i.lambda.to_string()),
        ("H", i.h_ind.to_string()),
        ("Xtilde", i.x_ind.to_string()),
        ("cross mod 2", i.cross_mod2.to_string()),
        ("cross mod 3", i.cross_mod3.to_string()),
        ("averaged", i.averaged.to_string()),
        ("prime", a.prime.to_string()),
        ("reduced", a.reduced.to_string()),
        ("factors", factors.join(" ")),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<16}{v}")?;
    }
    for (set, v) in &a.trivializable {
        writeln!(out, "{:<16}{v}", format!("{set}:"))?;
    }
    Ok(())
}

fn print_moves(out: &mut dyn Write, sites: &[MoveSite], deltas: &[DeltaReport]) -> std::io::Result<()> {
    writeln!(out, "{:>3}  {:<48}{:>6}{:>6}{:>6}{:>6}{:>6}{:>6}", "id", "site", "cross", "tr", "h", "thr", "HH", "lam")?;
    for (id, (s, d)) in sites.iter().zip(deltas).enumerate() {
        let x = &d.delta;
        writeln!(
            out,
            "{id:>3}  {:<48}{:>6}{:>6}{:>6}{:>6}{:>6}{:>6}",
            s.to_string(),
            x.cross,
            x.triple,
            x.h,
            x.iii,
            x.hh,
            d.lambda_delta
        )?;
    }
    // observed increments per move type, addition direction
    let mut seen: BTreeMap<(usize, MoveFamily), BTreeSet<i64>> = BTreeMap::new();
    for d in deltas {
        let sign = if d.kind.is_deletion() { -1 } else { 1 };
        let x = &d.delta;
        for (row, v) in [x.cross, x.triple, x.h, x.iii].into_iter().enumerate() {
            seen.entry((row, d.kind.family())).or_default().insert(sign * v);
        }
    }
    writeln!(out)?;
    write!(out, "{:<8}", "")?;
    for f in MoveFamily::ALL {
        write!(out, "{:>16}", f.name())?;
    }
    writeln!(out)?;
    for (row, name) in ["cross", "tr", "h", "thr"].iter().enumerate() {
        write!(out, "{name:<8}")?;
        for f in MoveFamily::ALL {
            let cell = seen
                .get(&(row, f))
                .map(|vals| vals.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
                .unwrap_or_else(|| "-".into());
            write!(out, "{cell:>16}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn print_flypes(out: &mut dyn Write, w: &GaussWord, sites: &[FlypeSite]) -> std::io::Result<()> {
    for (id, s) in sites.iter().enumerate() {
        match s.q {
            None => writeln!(out, "{id:>3}  identity")?,
            Some(q) => {
                let tangle: Vec<String> = s.tangle(w).iter().map(u32::to_string).collect();
                let result = apply_flype(w, s).map_or_else(|e| format!("error {}", e.code()), |r| r.canonical_form().to_string());
                writeln!(out, "{id:>3}  {:?} q={q} tangle {{{}}} -> {result}", s.case, tangle.join(","))?
            }
        }
    }
    Ok(())
}
