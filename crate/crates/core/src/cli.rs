//! Command-line interface: subcommands, exit-code taxonomy, JSON output.
//!
//! Exit codes: 0 ok, 10 candidate counterexample, 20 theorem violation,
//! 64 usage, 65 parse/input, 70 internal.

use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::aci::{self, Status};
use crate::error::{Error, Result};
use crate::extend;
use crate::gb::Length;
use crate::harness::{self, SearchConfig};
use crate::koszul::{self, KoszulComplex};
use crate::parse::{parse_poly, parse_raw_terms, print_poly};
use crate::presentation::PresentationFile;
use crate::report;
use crate::ring::{suggest_weights, RingPresentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CANDIDATE: i32 = 10;
pub const EXIT_VIOLATION: i32 = 20;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(
    name = "socle",
    about = "exact invariants of graded quotient rings: dimension, depth, Koszul homology, multiplicities, socle annihilator checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full invariant report for a presentation file
    Analyze { file: PathBuf },
    /// Koszul homology lengths and nonzero-ness per index for a sequence
    Koszul {
        file: PathBuf,
        /// comma-separated sequence of ring elements
        #[arg(long)]
        seq: String,
        /// largest index to report (defaults to the sequence length)
        #[arg(long)]
        max_i: Option<usize>,
    },
    /// Socle annihilator verdict over every witness and index
    Question1 { file: PathBuf },
    /// Acyclicity certificate for the residual complex on a witness
    Residual {
        file: PathBuf,
        /// witness element; defaults to the file's z entry
        #[arg(long)]
        z: Option<String>,
    },
    /// Adjoin square roots of the given elements and re-emit a presentation
    AdjoinSqrt {
        file: PathBuf,
        /// comma-separated elements to take roots of
        #[arg(long)]
        elems: String,
    },
    /// Hilbert numerator, dimension, multiplicity (standard grading only)
    Hilbert { file: PathBuf },
    /// Graded homology dimensions, degree by degree, by plain linear algebra
    Oracle {
        file: PathBuf,
        #[arg(long)]
        seq: String,
        /// homological index
        #[arg(long)]
        i: usize,
        /// inclusive degree bound
        #[arg(long)]
        bound: u64,
    },
    /// Generate random almost complete intersections and run the checks
    Search {
        /// coefficient field characteristic (0 for rationals)
        #[arg(long, default_value_t = 32003)]
        chars: u32,
        #[arg(long, default_value_t = 4)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        maxdeg: u32,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_PARSE,
    }
}

fn load_file(path: &PathBuf) -> Result<(PresentationFile, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidPresentationFile(format!("{}: {}", path.display(), e)))?;
    Ok((PresentationFile::parse(&text)?, text))
}

/// On inhomogeneous input, try to suggest weights that would fix it.
fn weight_hint(file: &PresentationFile) -> Option<Vec<u32>> {
    let term_lists: Vec<Vec<crate::monomial::Monomial>> = file
        .ideal
        .iter()
        .map(|s| {
            parse_raw_terms(file.characteristic, &file.vars, s)
                .map(|ts| ts.into_iter().map(|(m, _)| m).collect())
        })
        .collect::<Result<Vec<_>>>()
        .ok()?;
    suggest_weights(file.vars.len(), &term_lists, 512)
}

fn build_presentation(
    file: &PresentationFile,
) -> Result<(
    RingPresentation,
    Option<crate::ring::ParameterSequence>,
    Option<crate::poly::Polynomial>,
)> {
    match file.build() {
        Err(Error::Inhomogeneous { degree_a, degree_b }) => {
            let hint = match weight_hint(file) {
                Some(w) => format!(
                    "; weights {:?} would make the ideal quasi-homogeneous",
                    w
                ),
                None => "; no weights up to the search bound fix this".to_string(),
            };
            Err(Error::InvalidRing(format!(
                "generators are not quasi-homogeneous (degrees {} vs {}){}",
                degree_a, degree_b, hint
            )))
        }
        other => other,
    }
}

fn parse_seq(
    presentation: &RingPresentation,
    seq: &str,
) -> Result<Vec<crate::poly::Polynomial>> {
    seq.split(',')
        .map(|s| parse_poly(presentation.ring(), s.trim()))
        .collect()
}

fn status_exit(status: Status) -> i32 {
    match status {
        Status::Ok => EXIT_OK,
        Status::Candidate => EXIT_CANDIDATE,
        Status::Violation => EXIT_VIOLATION,
    }
}

fn cmd_analyze(path: &PathBuf) -> Result<i32> {
    let started = Instant::now();
    let (file, _) = load_file(path)?;
    let (presentation, sop, _) = build_presentation(&file)?;
    let report = aci::analyze(&presentation, sop.as_ref())?;
    let value = report::invariant_report_value(
        presentation.ring(),
        &file,
        &report,
        started.elapsed().as_millis(),
    );
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    if report.status() != Status::Ok {
        eprintln!("instance dump:\n{}", file.render());
    }
    Ok(status_exit(report.status()))
}

fn cmd_koszul(path: &PathBuf, seq: &str, max_i: Option<usize>) -> Result<i32> {
    let started = Instant::now();
    let (file, _) = load_file(path)?;
    let (presentation, _, _) = build_presentation(&file)?;
    let elems = parse_seq(&presentation, seq)?;
    let complex = KoszulComplex::build(&presentation, &elems)?;
    let top = max_i.unwrap_or(elems.len()).min(elems.len());
    let mut rows = Vec::new();
    for i in 0..=top {
        let h = koszul::homology(&presentation, &complex, i)?;
        let len = koszul::homology_length(&presentation, &h)?;
        rows.push(json!({
            "index": i,
            "rank": complex.rank(i),
            "nonzero": !h.is_zero(),
            "length": report::length_value(&len),
        }));
    }
    let value = json!({
        "schema": report::SCHEMA_VERSION,
        "engine": report::engine_banner(),
        "instance": report::presentation_value(&file),
        "sequence": elems.iter().map(|e| print_poly(presentation.ring(), e)).collect::<Vec<_>>(),
        "homology": rows,
        "timing_ms": started.elapsed().as_millis() as u64,
    });
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    Ok(EXIT_OK)
}

fn cmd_question1(path: &PathBuf) -> Result<i32> {
    let started = Instant::now();
    let (file, _) = load_file(path)?;
    let (presentation, sop, _) = build_presentation(&file)?;
    let sop = sop.ok_or_else(|| {
        Error::InvalidPresentationFile("question1 needs a sop entry".to_string())
    })?;
    if !sop.is_verified() {
        return Err(Error::NotSop);
    }
    let q = aci::question1_verdict(&presentation, &sop)?;
    let ring = presentation.ring();
    let value = json!({
        "schema": report::SCHEMA_VERSION,
        "engine": report::engine_banner(),
        "instance": report::presentation_value(&file),
        "witnesses": q.witnesses.iter().map(|z| print_poly(ring, z)).collect::<Vec<_>>(),
        "failures": q.failures.iter().map(|f| json!({
            "witness": print_poly(ring, &f.witness),
            "index": f.index,
            "oracle_confirmed": f.oracle_confirmed,
        })).collect::<Vec<_>>(),
        "first_homology_violation": q.first_homology_violation,
        "ok": q.ok,
        "timing_ms": started.elapsed().as_millis() as u64,
    });
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    if q.first_homology_violation {
        eprintln!("instance dump:\n{}", file.render());
        return Ok(EXIT_VIOLATION);
    }
    if !q.ok {
        eprintln!("instance dump:\n{}", file.render());
        return Ok(EXIT_CANDIDATE);
    }
    Ok(EXIT_OK)
}

fn cmd_residual(path: &PathBuf, z: Option<&str>) -> Result<i32> {
    let started = Instant::now();
    let (file, _) = load_file(path)?;
    let (presentation, sop, witness) = build_presentation(&file)?;
    let sop = sop.ok_or_else(|| {
        Error::InvalidPresentationFile("residual needs a sop entry".to_string())
    })?;
    if !sop.is_verified() {
        return Err(Error::NotSop);
    }
    let z = match z {
        Some(s) => parse_poly(presentation.ring(), s)?,
        None => witness.ok_or_else(|| {
            Error::InvalidPresentationFile("residual needs --z or a z entry".to_string())
        })?,
    };
    let cert = aci::acyclicity_certificate(&presentation, &sop, &z)?;
    let value = report::residual_value(
        presentation.ring(),
        &file,
        &cert,
        started.elapsed().as_millis(),
    );
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    Ok(EXIT_OK)
}

fn cmd_adjoin_sqrt(path: &PathBuf, elems: &str) -> Result<i32> {
    let (file, _) = load_file(path)?;
    let (presentation, _, _) = build_presentation(&file)?;
    let elems = parse_seq(&presentation, elems)?;
    let tower = extend::sqrt_tower(&presentation, &elems)?;
    let promoted = tower.ring.part_of_minimal_basis(&tower.roots)?;
    let new_file =
        PresentationFile::from_presentation(&tower.ring, Some(&tower.roots), None);
    let value = json!({
        "schema": report::SCHEMA_VERSION,
        "engine": report::engine_banner(),
        "instance": report::presentation_value(&file),
        "weights_doubled": tower.doubled,
        "root_vars": tower.root_vars,
        "presentation": new_file.render(),
        "minimal_basis_promotion": promoted,
        "dim_preserved": tower.ring.krull_dim() == presentation.krull_dim(),
    });
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    Ok(EXIT_OK)
}

fn cmd_hilbert(path: &PathBuf) -> Result<i32> {
    let (file, _) = load_file(path)?;
    let (presentation, _, _) = build_presentation(&file)?;
    let h = presentation.hilbert()?;
    let value = json!({
        "schema": report::SCHEMA_VERSION,
        "engine": report::engine_banner(),
        "instance": report::presentation_value(&file),
        "hilbert": report::hilbert_value(&h),
    });
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    Ok(EXIT_OK)
}

fn cmd_oracle(path: &PathBuf, seq: &str, i: usize, bound: u64) -> Result<i32> {
    let (file, _) = load_file(path)?;
    let (presentation, _, _) = build_presentation(&file)?;
    let elems = parse_seq(&presentation, seq)?;
    let rows = koszul::graded_oracle(&presentation, &elems, i, bound)?;
    let value = report::oracle_value(&file, i, &rows);
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
    Ok(EXIT_OK)
}

fn cmd_search(cfg: SearchConfig) -> Result<i32> {
    let (lines, worst) = harness::search(&cfg)?;
    for line in lines {
        println!("{}", line);
    }
    Ok(status_exit(worst))
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Analyze { file } => cmd_analyze(file),
        Command::Koszul { file, seq, max_i } => cmd_koszul(file, seq, *max_i),
        Command::Question1 { file } => cmd_question1(file),
        Command::Residual { file, z } => cmd_residual(file, z.as_deref()),
        Command::AdjoinSqrt { file, elems } => cmd_adjoin_sqrt(file, elems),
        Command::Hilbert { file } => cmd_hilbert(file),
        Command::Oracle {
            file,
            seq,
            i,
            bound,
        } => cmd_oracle(file, seq, *i, *bound),
        Command::Search {
            chars,
            vars,
            maxdeg,
            count,
            seed,
        } => cmd_search(SearchConfig {
            characteristic: *chars,
            vars: *vars,
            maxdeg: *maxdeg,
            count: *count,
            seed: *seed,
        }),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code_for(&e)
        }
    }
}

/// Artinian length helper shared with the bindings.
pub fn quotient_length_of(presentation: &RingPresentation) -> Length {
    crate::gb::ideal_colength(presentation.ring(), presentation.groebner_basis())
}
