//! Randomized instance generation and the search harness: sample almost
//! complete intersections (general ones, and the family where the square of
//! the maximal ideal falls into the parameter ideal), run the standing
//! checks on each, and emit one JSON record per instance. Fully
//! deterministic under a fixed seed: instance k draws from stream k.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::aci::{analyze, Status};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monideal;
use crate::monomial::Monomial;
use crate::parse::print_poly;
use crate::poly::{PolyRing, Polynomial};
use crate::presentation::PresentationFile;
use crate::report;
use crate::ring::{ParameterSequence, RingPresentation};

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub characteristic: u32,
    pub vars: usize,
    pub maxdeg: u32,
    pub count: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            characteristic: 32003,
            vars: 4,
            maxdeg: 3,
            count: 10,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    /// general almost complete intersection
    Random,
    /// parameters are variables and m^2 falls into the parameter ideal
    M2Family,
}

impl InstanceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InstanceKind::Random => "random",
            InstanceKind::M2Family => "m2-family",
        }
    }
}

/// A generated test instance, presentation plus verified parameters.
#[derive(Debug, Clone)]
pub struct Instance {
    pub kind: InstanceKind,
    pub presentation: RingPresentation,
    pub sop: ParameterSequence,
}

impl Instance {
    pub fn file(&self) -> PresentationFile {
        PresentationFile::from_presentation(
            &self.presentation,
            Some(self.sop.elements()),
            None,
        )
    }
}

fn random_coeff(rng: &mut ChaCha8Rng, characteristic: u32) -> Coeff {
    match characteristic {
        0 => Coeff::from_i64(0, rng.random_range(1..=9) * if rng.random_bool(0.5) { 1 } else { -1 }),
        p => Coeff::from_i64(p, rng.random_range(1..p as i64)),
    }
}

/// Random homogeneous polynomial of the given standard degree; at least
/// one term.
fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    ring: &PolyRing,
    degree: u64,
    density: f64,
) -> Polynomial {
    let monos = monideal::standard_monomials_of_degree(ring.arity(), &[], ring.grading(), degree);
    loop {
        let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
        for m in &monos {
            if rng.random_bool(density) {
                terms.push((m.clone(), random_coeff(rng, ring.characteristic())));
            }
        }
        if !terms.is_empty() {
            return ring.from_terms(terms).expect("terms built from the ring");
        }
    }
}

fn random_linear_form(rng: &mut ChaCha8Rng, ring: &PolyRing) -> Polynomial {
    loop {
        let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
        for v in 0..ring.arity() {
            if rng.random_bool(0.7) {
                terms.push((
                    Monomial::var(ring.arity(), v),
                    random_coeff(rng, ring.characteristic()),
                ));
            }
        }
        if !terms.is_empty() {
            return ring.from_terms(terms).expect("linear form");
        }
    }
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{}", i)).collect()
}

/// Sample a homogeneous almost complete intersection: a height-h ideal
/// minimally generated by h+1 forms, with a verified system of parameters
/// made of linear forms. Retries internally until everything checks out.
pub fn random_aci(rng: &mut ChaCha8Rng, cfg: &SearchConfig) -> Instance {
    let n = cfg.vars.max(2);
    loop {
        let ring = PolyRing::new(cfg.characteristic, var_names(n), vec![1; n]).unwrap();
        let height = rng.random_range(1..n);
        let gens: Vec<Polynomial> = (0..=height)
            .map(|_| {
                let d = rng.random_range(2..=cfg.maxdeg.max(2)) as u64;
                random_homogeneous(rng, &ring, d, 0.5)
            })
            .collect();
        let Ok(presentation) = RingPresentation::new(ring, gens) else {
            continue;
        };
        if presentation.embdim() - presentation.krull_dim() != height {
            continue;
        }
        if !presentation.is_aci().unwrap_or(false) {
            continue;
        }
        let dim = presentation.krull_dim();
        let mut found: Option<ParameterSequence> = None;
        for _ in 0..24 {
            let cand: Vec<Polynomial> = (0..dim)
                .map(|_| random_linear_form(rng, presentation.ring()))
                .collect();
            if let Ok(sop) = presentation.verify_sop(cand) {
                if sop.is_verified() {
                    found = Some(sop);
                    break;
                }
            }
        }
        let Some(sop) = found else { continue };
        return Instance {
            kind: InstanceKind::Random,
            presentation,
            sop,
        };
    }
}

/// Sample from the family with variables `x1..xd, z1, z2` and three
/// quadrics covering the products of the z's modulo `(x) m`: an almost
/// complete intersection whose variable parameters satisfy both the
/// m^2-containment and the minimal-basis condition.
pub fn random_m2_instance(rng: &mut ChaCha8Rng, cfg: &SearchConfig) -> Instance {
    loop {
        let d = rng.random_range(0..=2usize);
        let n = d + 2;
        let mut names = var_names(d);
        names.push("z1".to_string());
        names.push("z2".to_string());
        let ring = PolyRing::new(cfg.characteristic, names, vec![1; n]).unwrap();
        let z1 = d;
        let z2 = d + 1;
        let quad = |a: usize, b: usize| {
            Monomial::var(n, a).mul(&Monomial::var(n, b))
        };
        let mut gens = Vec::new();
        for (a, b) in [(z1, z1), (z1, z2), (z2, z2)] {
            let mut terms = vec![(quad(a, b), Coeff::one(cfg.characteristic))];
            // perturb by quadrics from (x) * m
            for xk in 0..d {
                for v in 0..n {
                    if rng.random_bool(0.3) {
                        terms.push((quad(xk, v), random_coeff(rng, cfg.characteristic)));
                    }
                }
            }
            gens.push(ring.from_terms(terms).unwrap());
        }
        let Ok(presentation) = RingPresentation::new(ring, gens) else {
            continue;
        };
        if presentation.krull_dim() != d || !presentation.is_aci().unwrap_or(false) {
            continue;
        }
        let params: Vec<Polynomial> = (0..d).map(|i| presentation.ring().var_poly(i)).collect();
        let Ok(sop) = presentation.verify_sop(params) else {
            continue;
        };
        if !sop.is_verified() {
            continue;
        }
        if !presentation.m2_in_x(sop.elements()).unwrap_or(false) {
            continue;
        }
        if !presentation
            .part_of_minimal_basis(sop.elements())
            .unwrap_or(false)
        {
            continue;
        }
        return Instance {
            kind: InstanceKind::M2Family,
            presentation,
            sop,
        };
    }
}

/// Random complete intersection with a verified linear system of
/// parameters (regular sequences on a Cohen-Macaulay ring).
pub fn random_complete_intersection(rng: &mut ChaCha8Rng, characteristic: u32) -> Instance {
    loop {
        let n = rng.random_range(2..=3usize);
        let ring = PolyRing::new(characteristic, var_names(n), vec![1; n]).unwrap();
        let c = rng.random_range(1..=n - 1);
        let gens: Vec<Polynomial> = (0..c)
            .map(|_| {
                let d = rng.random_range(2..=3) as u64;
                random_homogeneous(rng, &ring, d, 0.6)
            })
            .collect();
        let Ok(presentation) = RingPresentation::new(ring, gens) else {
            continue;
        };
        if presentation.embdim() - presentation.krull_dim() != c {
            continue;
        }
        let dim = presentation.krull_dim();
        let mut found: Option<ParameterSequence> = None;
        for _ in 0..24 {
            let cand: Vec<Polynomial> = (0..dim)
                .map(|_| random_linear_form(rng, presentation.ring()))
                .collect();
            if let Ok(sop) = presentation.verify_sop(cand) {
                if sop.is_verified() {
                    found = Some(sop);
                    break;
                }
            }
        }
        let Some(sop) = found else { continue };
        return Instance {
            kind: InstanceKind::Random,
            presentation,
            sop,
        };
    }
}

/// Random ideal generated by three quadrics in up to five variables.
pub fn random_three_quadrics(rng: &mut ChaCha8Rng, characteristic: u32) -> RingPresentation {
    loop {
        let n = rng.random_range(3..=5usize);
        let ring = PolyRing::new(characteristic, var_names(n), vec![1; n]).unwrap();
        let gens: Vec<Polynomial> = (0..3)
            .map(|_| random_homogeneous(rng, &ring, 2, 0.5))
            .collect();
        if let Ok(p) = RingPresentation::new(ring, gens) {
            return p;
        }
    }
}

/// Deterministic rng for instance `index` of a seeded run.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index + 1);
    rng
}

/// Instance `index` of the search stream: every third draw comes from the
/// m^2 family so the classification checks are exercised continuously.
pub fn search_instance(cfg: &SearchConfig, index: u64) -> Instance {
    let mut rng = stream_rng(cfg.seed, index);
    if index % 3 == 2 {
        random_m2_instance(&mut rng, cfg)
    } else {
        random_aci(&mut rng, cfg)
    }
}

/// Run the standing checks on one instance and serialize the record.
/// Search lines carry no timing so a fixed seed reproduces byte-identical
/// output.
pub fn run_instance(instance: &Instance, index: u64, seed: u64) -> Result<Value> {
    let report = analyze(&instance.presentation, Some(&instance.sop))?;
    let ring = instance.presentation.ring();
    let file = instance.file();
    let detail = report
        .sop
        .as_ref()
        .and_then(|s| s.detail.as_ref())
        .ok_or_else(|| Error::Internal("search instance lost its parameter data".to_string()))?;
    let status = report.status();
    let md = &detail.mult_defect;
    let mult_defect_value = json!({
        "e_x": report::exact_int(md.multiplicity as i128),
        "defect": report::exact_int(md.defect as i128),
        "ok": md.ok,
        "theorem_case": md.theorem_case,
        "violation": md.violation,
    });
    Ok(json!({
        "schema": report::SCHEMA_VERSION,
        "index": index,
        "seed": seed,
        "kind": instance.kind.as_str(),
        "instance": report::presentation_value(&file),
        "dim": report.dim,
        "embdim": report.embdim,
        "mu": report.mu,
        "depth": report.depth,
        "is_aci": report.is_aci,
        "is_cm": report.is_cm,
        "len_quotient": report::exact_int(detail.quotient_length as i128),
        "homology_lengths": detail.homology_lengths.iter()
            .map(|&l| report::exact_int(l as i128)).collect::<Vec<_>>(),
        "e_x": report::exact_int(detail.multiplicity as i128),
        "chi2": report::exact_int(detail.chi2 as i128),
        "m2_in_x": detail.m2_in_x,
        "length_gap": detail.length_gap.as_ref().map(|g| json!({
            "lhs": report::exact_int(g.lhs as i128), "ok": g.ok })),
        "mult_defect": mult_defect_value,
        "question1": detail.question1.as_ref().map(|q| json!({
            "witnesses": q.witnesses.iter().map(|z| print_poly(ring, z)).collect::<Vec<_>>(),
            "failures": q.failures.iter().map(|f| json!({
                "witness": print_poly(ring, &f.witness),
                "index": f.index,
                "oracle_confirmed": f.oracle_confirmed,
            })).collect::<Vec<_>>(),
            "ok": q.ok,
        })),
        "m2_case": detail.m2_case.as_ref().map(|c| json!({
            "defect_bound": c.defect_bound,
            "colength_identity": c.colength_identity,
            "multiplicity_classification": c.multiplicity_classification,
            "ok": c.ok,
        })),
        "status": report::status_str(status),
    }))
}

/// The full search: returns the JSON lines and the worst status seen.
pub fn search(cfg: &SearchConfig) -> Result<(Vec<String>, Status)> {
    let mut lines = Vec::with_capacity(cfg.count);
    let mut worst = Status::Ok;
    for index in 0..cfg.count as u64 {
        let instance = search_instance(cfg, index);
        let record = run_instance(&instance, index, cfg.seed)?;
        let status = match record["status"].as_str() {
            Some("violation") => Status::Violation,
            Some("candidate") => Status::Candidate,
            _ => Status::Ok,
        };
        worst = match (worst, status) {
            (Status::Violation, _) | (_, Status::Violation) => Status::Violation,
            (Status::Candidate, _) | (_, Status::Candidate) => Status::Candidate,
            _ => Status::Ok,
        };
        lines.push(serde_json::to_string(&record).expect("serializable record"));
    }
    Ok((lines, worst))
}
