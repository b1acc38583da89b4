//! Composite invariants and verdicts: depth via Koszul nonvanishing, the
//! Serre alternating-sum multiplicity, the length inequality for the first
//! homology, the multiplicity vs Cohen-Macaulay-defect comparison, the
//! socle annihilator question, the acyclicity certificate, and the
//! classification that applies when `m^2` lands in the parameter ideal.
//!
//! A failed theorem-backed check is never silently swallowed: reports carry
//! explicit violation flags and the CLI turns them into instance dumps.

use crate::error::{Error, Result};
use crate::gb::{ideal_quotient, GroebnerBasis, Length};
use crate::koszul::{
    annihilates, graded_oracle, homology, homology_length, oracle_confirms_length, HomologyModule,
    KoszulComplex,
};
use crate::poly::Polynomial;
use crate::ring::{HilbertData, ParameterSequence, RingPresentation};

/// Everything computed from one verified system of parameters; shared by
/// the individual checks so the Koszul homology is built once.
#[derive(Debug)]
pub struct SopAnalysis {
    pub quotient_gb: GroebnerBasis,
    pub complex: Option<KoszulComplex>,
    pub homologies: Vec<HomologyModule>,
    /// Homology lengths, index 0..=d; entry 0 is the quotient length.
    pub lengths: Vec<u64>,
    /// Serre multiplicity e(x, R): the alternating sum of the lengths.
    pub multiplicity: i64,
    /// Alternating partial sum over indices >= 2.
    pub chi2: i64,
}

impl SopAnalysis {
    pub fn compute(presentation: &RingPresentation, x: &ParameterSequence) -> Result<Self> {
        if !x.is_verified() {
            return Err(Error::NotSop);
        }
        let quotient_gb = presentation.quotient_gb(x.elements())?;
        let quotient_length = match presentation.length(&quotient_gb)? {
            Length::Finite(n) => n,
            Length::Infinite => {
                return Err(Error::Internal(
                    "verified parameter sequence with non-Artinian quotient".to_string(),
                ))
            }
        };
        if x.is_empty() {
            return Ok(SopAnalysis {
                quotient_gb,
                complex: None,
                homologies: Vec::new(),
                lengths: vec![quotient_length],
                multiplicity: quotient_length as i64,
                chi2: 0,
            });
        }
        let complex = KoszulComplex::build(presentation, x.elements())?;
        let d = x.len();
        let mut homologies = Vec::with_capacity(d + 1);
        let mut lengths = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let h = homology(presentation, &complex, i)?;
            let len = match homology_length(presentation, &h)? {
                Length::Finite(n) => n,
                Length::Infinite => {
                    return Err(Error::Internal(format!(
                        "H_{} of a system of parameters has infinite length",
                        i
                    )))
                }
            };
            homologies.push(h);
            lengths.push(len);
        }
        if lengths[0] != quotient_length {
            return Err(Error::Internal(
                "H_0 length disagrees with the quotient length".to_string(),
            ));
        }
        let multiplicity: i64 = lengths
            .iter()
            .enumerate()
            .map(|(i, &l)| if i % 2 == 0 { l as i64 } else { -(l as i64) })
            .sum();
        if multiplicity < 1 {
            return Err(Error::Internal(
                "Serre multiplicity must be positive".to_string(),
            ));
        }
        let chi2: i64 = lengths
            .iter()
            .enumerate()
            .skip(2)
            .map(|(i, &l)| if i % 2 == 0 { l as i64 } else { -(l as i64) })
            .sum();
        Ok(SopAnalysis {
            quotient_gb,
            complex: Some(complex),
            homologies,
            lengths,
            multiplicity,
            chi2,
        })
    }

    pub fn quotient_length(&self) -> u64 {
        self.lengths[0]
    }
}

/// Depth as codimension of the top nonvanishing Koszul homology on the
/// variables; scans upward and stops at the first vanishing index, which is
/// legitimate because a minimal free resolution has no internal gaps.
pub fn depth(presentation: &RingPresentation) -> Result<usize> {
    presentation.minimality_check()?;
    let n = presentation.embdim();
    if presentation.ideal_gens().is_empty() {
        return Ok(n);
    }
    let complex = KoszulComplex::build(presentation, &presentation.var_polys())?;
    for i in 1..=n {
        let h = homology(presentation, &complex, i)?;
        if h.is_zero() {
            return Ok(n - (i - 1));
        }
    }
    Ok(0)
}

/// `e(x, R)` by the alternating-sum formula; always positive.
pub fn serre_multiplicity(
    presentation: &RingPresentation,
    x: &ParameterSequence,
) -> Result<i64> {
    Ok(SopAnalysis::compute(presentation, x)?.multiplicity)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthGapReport {
    /// quotient length minus length of the first homology
    pub lhs: i64,
    pub ok: bool,
}

fn length_gap_from(analysis: &SopAnalysis) -> LengthGapReport {
    let l1 = if analysis.lengths.len() > 1 {
        analysis.lengths[1] as i64
    } else {
        0
    };
    let lhs = analysis.quotient_length() as i64 - l1;
    LengthGapReport { lhs, ok: lhs >= 1 }
}

/// The length inequality `len(R/(x)) - len(H_1(x,R)) >= 1`, meaningful for
/// almost complete intersections; a false result is a theorem violation.
pub fn dutta_check(
    presentation: &RingPresentation,
    x: &ParameterSequence,
) -> Result<LengthGapReport> {
    if !presentation.is_aci()? {
        return Err(Error::NotAci);
    }
    let analysis = SopAnalysis::compute(presentation, x)?;
    Ok(length_gap_from(&analysis))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultDefectReport {
    pub multiplicity: i64,
    pub dim: usize,
    pub depth: usize,
    /// dim - depth
    pub defect: i64,
    /// e(x, R) >= dim - depth
    pub ok: bool,
    /// whether a false `ok` contradicts a theorem (ACI, and dim <= 3 or
    /// e <= 2 in equal characteristic) rather than being an observation
    pub theorem_case: bool,
    pub violation: bool,
}

fn mult_defect_from(
    presentation: &RingPresentation,
    analysis: &SopAnalysis,
    depth_val: usize,
    aci: bool,
) -> MultDefectReport {
    let dim = presentation.krull_dim();
    let defect = dim as i64 - depth_val as i64;
    let ok = analysis.multiplicity >= defect;
    let theorem_case = aci && (dim <= 3 || analysis.multiplicity <= 2);
    MultDefectReport {
        multiplicity: analysis.multiplicity,
        dim,
        depth: depth_val,
        defect,
        ok,
        theorem_case,
        violation: !ok && theorem_case,
    }
}

/// Compare `e(x, R)` against the Cohen-Macaulay defect.
pub fn mult_defect_check(
    presentation: &RingPresentation,
    x: &ParameterSequence,
) -> Result<MultDefectReport> {
    let analysis = SopAnalysis::compute(presentation, x)?;
    let depth_val = depth(presentation)?;
    let aci = presentation.is_aci()?;
    Ok(mult_defect_from(presentation, &analysis, depth_val, aci))
}

#[derive(Debug, Clone)]
pub struct Question1Failure {
    pub witness: Polynomial,
    pub index: usize,
    /// graded-oracle corroboration of the homology computation behind the
    /// failure; a candidate is only as good as its confirmation
    pub oracle_confirmed: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Question1Report {
    pub witnesses: Vec<Polynomial>,
    pub failures: Vec<Question1Failure>,
    /// a failure at index 1 contradicts a theorem and flags an engine bug
    pub first_homology_violation: bool,
    pub ok: bool,
}

/// For every socle witness `z` of `(x)` and every index `i >= 1`: does `z`
/// annihilate `H_i(x, R)`? Failures are candidate counterexamples and are
/// cross-examined by the graded oracle before being taken seriously.
pub fn question1_verdict(
    presentation: &RingPresentation,
    x: &ParameterSequence,
) -> Result<Question1Report> {
    if !presentation.is_aci()? {
        return Err(Error::NotAci);
    }
    let analysis = SopAnalysis::compute(presentation, x)?;
    question1_from(presentation, x, &analysis)
}

pub fn question1_from(
    presentation: &RingPresentation,
    x: &ParameterSequence,
    analysis: &SopAnalysis,
) -> Result<Question1Report> {
    let witnesses = presentation.socle_witnesses(x)?;
    let mut failures = Vec::new();
    for z in &witnesses {
        for i in 1..analysis.homologies.len() {
            let h = &analysis.homologies[i];
            if !annihilates(presentation, z, h)? {
                let oracle_confirmed =
                    oracle_confirms_length(presentation, x.elements(), i, h)?;
                failures.push(Question1Failure {
                    witness: z.clone(),
                    index: i,
                    oracle_confirmed,
                });
            }
        }
    }
    let first_homology_violation = failures.iter().any(|f| f.index == 1);
    let ok = failures.is_empty();
    Ok(Question1Report {
        witnesses,
        failures,
        first_homology_violation,
        ok,
    })
}

#[derive(Debug, Clone)]
pub struct AcyclicityCertificate {
    pub witness: Polynomial,
    /// annihilation verdicts for indices 1..=d
    pub annihilation: Vec<bool>,
    /// the colon `(x) : z` is the whole maximal ideal
    pub h0_length_one: bool,
    pub verdict: bool,
}

/// Certificate for the residual complex built on `(x, z)`: acyclic exactly
/// when `z` annihilates every positive Koszul homology of `x`. The complex
/// itself is never materialized; the zeroth-homology identity is checked as
/// the contract `len(R / ((x):z)) = 1`.
pub fn acyclicity_certificate(
    presentation: &RingPresentation,
    x: &ParameterSequence,
    z: &Polynomial,
) -> Result<AcyclicityCertificate> {
    let analysis = SopAnalysis::compute(presentation, x)?;
    acyclicity_from(presentation, x, &analysis, z)
}

pub fn acyclicity_from(
    presentation: &RingPresentation,
    _x: &ParameterSequence,
    analysis: &SopAnalysis,
    z: &Polynomial,
) -> Result<AcyclicityCertificate> {
    let ring = presentation.ring();
    ring.check_poly(z)?;
    let gbq = &analysis.quotient_gb;
    if crate::gb::reduces_to_zero(ring, z, gbq) {
        return Err(Error::BadWitness(
            "witness lies in the parameter ideal".to_string(),
        ));
    }
    for v in presentation.var_polys() {
        let prod = ring.mul_raw(z, &v);
        if !crate::gb::reduces_to_zero(ring, &prod, gbq) {
            return Err(Error::BadWitness(
                "witness does not multiply the maximal ideal into the parameter ideal".to_string(),
            ));
        }
    }
    let colon = ideal_quotient(ring, gbq, std::slice::from_ref(z))?;
    let h0_length_one = matches!(
        crate::gb::ideal_colength(ring, &colon),
        Length::Finite(1)
    );
    let mut annihilation = Vec::new();
    for i in 1..analysis.homologies.len() {
        annihilation.push(annihilates(presentation, z, &analysis.homologies[i])?);
    }
    let verdict = annihilation.iter().all(|&a| a);
    Ok(AcyclicityCertificate {
        witness: z.clone(),
        annihilation,
        h0_length_one,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct M2CaseReport {
    pub embdim: usize,
    pub dim: usize,
    /// embdim - dim <= 2
    pub defect_bound: bool,
    pub quotient_length: u64,
    /// len(R/(x)) = embdim - dim + 1
    pub colength_identity: bool,
    pub multiplicity: i64,
    pub is_cm: bool,
    /// e = 3 forces Cohen-Macaulay; otherwise e <= 2
    pub multiplicity_classification: bool,
    pub ok: bool,
}

/// The classification available when the ring is an almost complete
/// intersection and `m^2 ⊆ (x)` with `x` part of a minimal basis; any
/// failed assertion is a theorem violation.
pub fn classify_m2_case(
    presentation: &RingPresentation,
    x: &ParameterSequence,
) -> Result<M2CaseReport> {
    if !presentation.is_aci()? {
        return Err(Error::HypothesisNotMet {
            precondition: "almost complete intersection",
        });
    }
    if !x.is_verified() {
        return Err(Error::HypothesisNotMet {
            precondition: "system of parameters",
        });
    }
    if presentation.minimality_check().is_err() {
        return Err(Error::HypothesisNotMet {
            precondition: "minimal presentation",
        });
    }
    if !presentation.m2_in_x(x.elements())? {
        return Err(Error::HypothesisNotMet {
            precondition: "m^2 inside the parameter ideal",
        });
    }
    if !presentation.part_of_minimal_basis(x.elements())? {
        return Err(Error::HypothesisNotMet {
            precondition: "parameters form part of a minimal basis",
        });
    }
    let analysis = SopAnalysis::compute(presentation, x)?;
    let depth_val = depth(presentation)?;
    Ok(m2_case_from(presentation, &analysis, depth_val))
}

fn m2_case_from(
    presentation: &RingPresentation,
    analysis: &SopAnalysis,
    depth_val: usize,
) -> M2CaseReport {
    let embdim = presentation.embdim();
    let dim = presentation.krull_dim();
    let defect_bound = embdim - dim <= 2;
    let quotient_length = analysis.quotient_length();
    let colength_identity = quotient_length as i64 == (embdim - dim + 1) as i64;
    let e = analysis.multiplicity;
    let is_cm = depth_val == dim;
    let multiplicity_classification = if e == 3 { is_cm } else { e <= 2 };
    M2CaseReport {
        embdim,
        dim,
        defect_bound,
        quotient_length,
        colength_identity,
        multiplicity: e,
        is_cm,
        multiplicity_classification,
        ok: defect_bound && colength_identity && multiplicity_classification,
    }
}

#[derive(Debug, Clone)]
pub struct SopSection {
    pub elements: Vec<Polynomial>,
    pub verified: bool,
    pub detail: Option<SopDetail>,
}

#[derive(Debug, Clone)]
pub struct SopDetail {
    pub quotient_length: u64,
    pub homology_lengths: Vec<u64>,
    pub multiplicity: i64,
    pub chi2: i64,
    pub m2_in_x: bool,
    pub minimal_basis_part: bool,
    pub length_gap: Option<LengthGapReport>,
    pub mult_defect: MultDefectReport,
    pub question1: Option<Question1Report>,
    pub m2_case: Option<M2CaseReport>,
}

/// The full invariant report for one presented ring.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub dim: usize,
    pub embdim: usize,
    pub mu: usize,
    pub depth: usize,
    /// embdim - depth: projective dimension over the ambient ring by the
    /// Auslander-Buchsbaum identity, asserted against the Koszul index
    pub pd_over_ambient: usize,
    pub is_aci: bool,
    pub is_cm: bool,
    pub hilbert: Option<HilbertData>,
    pub sop: Option<SopSection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Candidate,
    Violation,
}

impl InvariantReport {
    pub fn status(&self) -> Status {
        let Some(sop) = &self.sop else {
            return Status::Ok;
        };
        let Some(d) = &sop.detail else {
            return Status::Ok;
        };
        let mut candidate = false;
        if let Some(gap) = &d.length_gap {
            if !gap.ok {
                return Status::Violation;
            }
        }
        if d.mult_defect.violation {
            return Status::Violation;
        }
        if let Some(q) = &d.question1 {
            if q.first_homology_violation {
                return Status::Violation;
            }
            if !q.ok {
                candidate = true;
            }
        }
        if let Some(c) = &d.m2_case {
            if !c.ok {
                return Status::Violation;
            }
        }
        if candidate {
            Status::Candidate
        } else {
            Status::Ok
        }
    }
}

/// Assemble the report: core invariants always; the parameter-dependent
/// sections when a sequence is supplied and verifies.
pub fn analyze(
    presentation: &RingPresentation,
    sop: Option<&ParameterSequence>,
) -> Result<InvariantReport> {
    let dim = presentation.krull_dim();
    let (embdim, mu) = presentation.embdim_and_mu()?;
    let depth_val = depth(presentation)?;
    let is_aci = mu == embdim - dim + 1;
    let is_cm = depth_val == dim;
    let hilbert = if presentation.ring().grading().is_standard() {
        Some(presentation.hilbert()?)
    } else {
        None
    };
    let sop_section = match sop {
        None => None,
        Some(x) if !x.is_verified() => Some(SopSection {
            elements: x.elements().to_vec(),
            verified: false,
            detail: None,
        }),
        Some(x) => {
            let analysis = SopAnalysis::compute(presentation, x)?;
            let m2 = presentation.m2_in_x(x.elements())?;
            let minimal_basis_part = presentation.part_of_minimal_basis(x.elements())?;
            let length_gap = if is_aci {
                Some(length_gap_from(&analysis))
            } else {
                None
            };
            let mult_defect = mult_defect_from(presentation, &analysis, depth_val, is_aci);
            let question1 = if is_aci {
                Some(question1_from(presentation, x, &analysis)?)
            } else {
                None
            };
            let m2_case = if is_aci && m2 && minimal_basis_part {
                Some(m2_case_from(presentation, &analysis, depth_val))
            } else {
                None
            };
            Some(SopSection {
                elements: x.elements().to_vec(),
                verified: true,
                detail: Some(SopDetail {
                    quotient_length: analysis.quotient_length(),
                    homology_lengths: analysis.lengths.clone(),
                    multiplicity: analysis.multiplicity,
                    chi2: analysis.chi2,
                    m2_in_x: m2,
                    minimal_basis_part,
                    length_gap,
                    mult_defect,
                    question1,
                    m2_case,
                }),
            })
        }
    };
    Ok(InvariantReport {
        dim,
        embdim,
        mu,
        depth: depth_val,
        pd_over_ambient: embdim - depth_val,
        is_aci,
        is_cm,
        hilbert,
        sop: sop_section,
    })
}

/// Graded-oracle table rows for the CLI.
pub fn oracle_table(
    presentation: &RingPresentation,
    seq: &[Polynomial],
    i: usize,
    bound: u64,
) -> Result<Vec<crate::koszul::OracleRow>> {
    graded_oracle(presentation, seq, i, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn monomial_quotient() -> RingPresentation {
        RingPresentation::parse(0, &["x", "y", "z"], &[1, 1, 1], &["x^2", "x*y", "x*z"]).unwrap()
    }

    fn sop(r: &RingPresentation, elems: &[&str]) -> ParameterSequence {
        r.verify_sop(
            elems
                .iter()
                .map(|s| parse_poly(r.ring(), s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth(&monomial_quotient()).unwrap(), 0);
        let free = RingPresentation::parse(0, &["x", "y", "z"], &[1, 1, 1], &[]).unwrap();
        assert_eq!(depth(&free).unwrap(), 3);
        // hypersurface: depth = dim = 1
        let hyp = RingPresentation::parse(0, &["x", "y"], &[1, 1], &["x^2"]).unwrap();
        assert_eq!(depth(&hyp).unwrap(), 1);
    }

    #[test]
    fn serre_multiplicity_examples() {
        let r = monomial_quotient();
        let x = sop(&r, &["y", "z"]);
        assert_eq!(serre_multiplicity(&r, &x).unwrap(), 1);

        // regular sequence on a Cohen-Macaulay ring: e = len(R/(x))
        let free = RingPresentation::parse(0, &["x", "y"], &[1, 1], &[]).unwrap();
        let xf = sop(&free, &["x", "y^2"]);
        let analysis = SopAnalysis::compute(&free, &xf).unwrap();
        assert_eq!(analysis.multiplicity, 2);
        assert_eq!(analysis.quotient_length(), 2);
        assert!(analysis.lengths[1..].iter().all(|&l| l == 0));
    }

    #[test]
    fn serre_balance_on_the_monomial_ring() {
        // e = len(R/(x)) - len(H1) + len(H2) = 2 - 2 + 1 = 1
        let r = monomial_quotient();
        let x = sop(&r, &["y", "z"]);
        let analysis = SopAnalysis::compute(&r, &x).unwrap();
        assert_eq!(analysis.lengths, vec![2, 2, 1]);
        assert_eq!(analysis.multiplicity, 1);
        assert_eq!(analysis.chi2, 1);
    }

    #[test]
    fn length_gap_requires_aci() {
        let r = monomial_quotient();
        let x = sop(&r, &["y", "z"]);
        assert!(matches!(dutta_check(&r, &x), Err(Error::NotAci)));
    }

    #[test]
    fn mult_defect_observation_vs_theorem() {
        // e = 1 < dim - depth = 2, but the ring is not an ACI: an
        // observation, not a violation
        let r = monomial_quotient();
        let x = sop(&r, &["y", "z"]);
        let report = mult_defect_check(&r, &x).unwrap();
        assert!(!report.ok);
        assert!(!report.theorem_case);
        assert!(!report.violation);
    }

    #[test]
    fn question1_on_a_small_aci() {
        // k[x,y]/(x,y)^2 is an Artinian ACI (mu = 3 = height + 1)
        let r = RingPresentation::parse(0, &["x", "y"], &[1, 1], &["x^2", "x*y", "y^2"]).unwrap();
        assert!(r.is_aci().unwrap());
        let x = r.verify_sop(vec![]).unwrap();
        let q = question1_verdict(&r, &x).unwrap();
        assert!(q.ok);
        assert_eq!(q.witnesses.len(), 2); // socle = (x, y)
    }

    #[test]
    fn acyclicity_certificate_examples() {
        let r = monomial_quotient();
        let x = sop(&r, &["y", "z"]);
        let z = parse_poly(r.ring(), "x").unwrap();
        let cert = acyclicity_certificate(&r, &x, &z).unwrap();
        assert!(cert.h0_length_one);
        assert_eq!(cert.annihilation.len(), 2);
        // x kills H_1 and H_2 here: m H_i = 0 for this ring
        assert!(cert.verdict);

        let bad = parse_poly(r.ring(), "y").unwrap();
        assert!(matches!(
            acyclicity_certificate(&r, &x, &bad),
            Err(Error::BadWitness(_))
        ));
    }

    #[test]
    fn m2_case_on_artinian_aci() {
        // k[x,y]/m^2 with the empty sop: embdim - dim = 2, colength 3,
        // e = 3 with the ring Cohen-Macaulay: the classification is tight
        let r = RingPresentation::parse(0, &["x", "y"], &[1, 1], &["x^2", "x*y", "y^2"]).unwrap();
        let x = r.verify_sop(vec![]).unwrap();
        let c = classify_m2_case(&r, &x).unwrap();
        assert!(c.defect_bound);
        assert!(c.colength_identity);
        assert_eq!(c.multiplicity, 3);
        assert!(c.is_cm);
        assert!(c.ok);
    }

    #[test]
    fn m2_case_rejects_non_aci() {
        let r = monomial_quotient();
        let x = sop(&r, &["y", "z"]);
        assert!(matches!(
            classify_m2_case(&r, &x),
            Err(Error::HypothesisNotMet {
                precondition: "almost complete intersection"
            })
        ));
    }

    #[test]
    fn analyze_monomial_ring_end_to_end() {
        let r = monomial_quotient();
        let x = sop(&r, &["y", "z"]);
        let report = analyze(&r, Some(&x)).unwrap();
        assert_eq!(
            (report.dim, report.depth, report.embdim, report.mu),
            (2, 0, 3, 3)
        );
        assert!(!report.is_aci);
        assert!(!report.is_cm);
        assert_eq!(report.pd_over_ambient, 3);
        let h = report.hilbert.as_ref().unwrap();
        assert_eq!(h.multiplicity, num_bigint::BigInt::from(1));
        let detail = report.sop.as_ref().unwrap().detail.as_ref().unwrap();
        assert_eq!(detail.multiplicity, 1);
        assert_eq!(report.status(), Status::Ok);
    }

    #[test]
    fn chi2_zero_forces_vanishing_above_one() {
        // complete intersection k[x,y]/(x^2) with sop (y): chi2 = 0 and
        // every higher homology vanishes
        let r = RingPresentation::parse(0, &["x", "y"], &[1, 1], &["x^2"]).unwrap();
        let x = sop(&r, &["y"]);
        let analysis = SopAnalysis::compute(&r, &x).unwrap();
        assert_eq!(analysis.chi2, 0);
        assert!(analysis.lengths[2..].iter().all(|&l| l == 0));
        assert!(analysis.homologies[1..].iter().all(|h| h.is_zero()));
    }
}
