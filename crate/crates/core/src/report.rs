//! JSON report assembly. Schema is versioned and evolves additively; all
//! numbers are exact (integers above 2^53 are emitted as strings).

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::aci::{
    AcyclicityCertificate, InvariantReport, LengthGapReport, M2CaseReport, MultDefectReport,
    Question1Report, Status,
};
use crate::gb::Length;
use crate::koszul::OracleRow;
use crate::parse::print_poly;
use crate::poly::PolyRing;
use crate::presentation::PresentationFile;
use crate::ring::HilbertData;

pub const SCHEMA_VERSION: u32 = 1;

const SAFE_INT: i128 = 1 << 53;

/// Exact integer as a JSON number when it fits below 2^53, string otherwise.
pub fn exact_int(v: i128) -> Value {
    if v.abs() <= SAFE_INT {
        json!(v as i64)
    } else {
        json!(v.to_string())
    }
}

pub fn exact_bigint(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(n) if n.abs() as i128 <= SAFE_INT => json!(n),
        _ => json!(v.to_string()),
    }
}

pub fn length_value(l: &Length) -> Value {
    match l {
        Length::Finite(n) => exact_int(*n as i128),
        Length::Infinite => json!("infinite"),
    }
}

pub fn engine_banner() -> Value {
    json!(format!("socle {}", env!("CARGO_PKG_VERSION")))
}

pub fn presentation_value(file: &PresentationFile) -> Value {
    json!({
        "char": file.characteristic,
        "vars": file.vars,
        "weights": file.weights,
        "ideal": file.ideal,
        "sop": file.sop,
        "z": file.witness,
    })
}

pub fn hilbert_value(h: &HilbertData) -> Value {
    json!({
        "numerator": h.numerator.iter().map(exact_bigint).collect::<Vec<_>>(),
        "dim": h.dimension,
        "multiplicity": exact_bigint(&h.multiplicity),
    })
}

fn length_gap_value(g: &LengthGapReport) -> Value {
    json!({ "lhs": exact_int(g.lhs as i128), "ok": g.ok })
}

fn mult_defect_value(m: &MultDefectReport) -> Value {
    json!({
        "e_x": exact_int(m.multiplicity as i128),
        "defect": exact_int(m.defect as i128),
        "ok": m.ok,
        "theorem_case": m.theorem_case,
        "violation": m.violation,
    })
}

fn question1_value(ring: &PolyRing, q: &Question1Report) -> Value {
    json!({
        "witnesses": q.witnesses.iter().map(|z| print_poly(ring, z)).collect::<Vec<_>>(),
        "failures": q.failures.iter().map(|f| json!({
            "witness": print_poly(ring, &f.witness),
            "index": f.index,
            "oracle_confirmed": f.oracle_confirmed,
        })).collect::<Vec<_>>(),
        "first_homology_violation": q.first_homology_violation,
        "ok": q.ok,
    })
}

fn m2_case_value(c: &M2CaseReport) -> Value {
    json!({
        "embdim": c.embdim,
        "dim": c.dim,
        "defect_bound": c.defect_bound,
        "len_quotient": exact_int(c.quotient_length as i128),
        "colength_identity": c.colength_identity,
        "e_x": exact_int(c.multiplicity as i128),
        "is_cm": c.is_cm,
        "multiplicity_classification": c.multiplicity_classification,
        "ok": c.ok,
    })
}

pub fn status_str(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Candidate => "candidate",
        Status::Violation => "violation",
    }
}

/// The `analyze` report.
pub fn invariant_report_value(
    ring: &PolyRing,
    file: &PresentationFile,
    report: &InvariantReport,
    timing_ms: u128,
) -> Value {
    let sop_value = report.sop.as_ref().map(|s| {
        let detail = s.detail.as_ref().map(|d| {
            json!({
                "len_quotient": exact_int(d.quotient_length as i128),
                "homology_lengths": d.homology_lengths.iter()
                    .map(|&l| exact_int(l as i128)).collect::<Vec<_>>(),
                "e_x": exact_int(d.multiplicity as i128),
                "chi2": exact_int(d.chi2 as i128),
                "m2_in_x": d.m2_in_x,
                "minimal_basis_part": d.minimal_basis_part,
                "length_gap": d.length_gap.as_ref().map(length_gap_value),
                "mult_defect": mult_defect_value(&d.mult_defect),
                "question1": d.question1.as_ref().map(|q| question1_value(ring, q)),
                "m2_case": d.m2_case.as_ref().map(m2_case_value),
            })
        });
        json!({
            "elements": s.elements.iter().map(|e| print_poly(ring, e)).collect::<Vec<_>>(),
            "verified": s.verified,
            "detail": detail,
        })
    });
    json!({
        "schema": SCHEMA_VERSION,
        "engine": engine_banner(),
        "instance": presentation_value(file),
        "dim": report.dim,
        "embdim": report.embdim,
        "mu": report.mu,
        "depth": report.depth,
        "pd": report.pd_over_ambient,
        "is_aci": report.is_aci,
        "is_cm": report.is_cm,
        "hilbert": report.hilbert.as_ref().map(hilbert_value),
        "sop": sop_value,
        "status": status_str(report.status()),
        "timing_ms": timing_ms as u64,
    })
}

pub fn residual_value(
    ring: &PolyRing,
    file: &PresentationFile,
    cert: &AcyclicityCertificate,
    timing_ms: u128,
) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "engine": engine_banner(),
        "instance": presentation_value(file),
        "witness": print_poly(ring, &cert.witness),
        "annihilation": cert.annihilation,
        "h0_length_one": cert.h0_length_one,
        "acyclic": cert.verdict,
        "timing_ms": timing_ms as u64,
    })
}

pub fn oracle_value(file: &PresentationFile, index: usize, rows: &[OracleRow]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "engine": engine_banner(),
        "instance": presentation_value(file),
        "index": index,
        "rows": rows.iter().map(|r| json!({
            "degree": r.degree,
            "dim_kernel": r.dim_kernel,
            "dim_image": r.dim_image,
            "dim_homology": r.dim_homology,
        })).collect::<Vec<_>>(),
        "total": rows.iter().map(|r| r.dim_homology as u64).sum::<u64>(),
    })
}
