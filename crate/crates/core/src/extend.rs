//! Square-root extensions `R[X]/(X^2 - a)` and iterated towers of them,
//! used to promote a sequence to part of a minimal basis of the maximal
//! ideal. The abstract pair ring `R ⊕ R` with multiplication
//! `(r,s)(r',s') = (rr' + ss'a, rs' + r's)` is never materialized; the
//! polynomial model is the single representation and the pair law is kept
//! as a conformance helper for tests.
//!
//! The new variable is placed first (largest) in the monomial order so that
//! `X^2` leads its relation; the extension basis is then the base basis
//! plus one element and the standard monomials are `{1, X}` times the base
//! ones, which is the rank-2 freeness.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::RingPresentation;

/// One square-root extension step.
#[derive(Debug, Clone)]
pub struct SqrtExtension {
    base: RingPresentation,
    element: Polynomial,
    extended: RingPresentation,
    new_var: String,
    doubled: bool,
}

impl SqrtExtension {
    /// The base presentation actually used (weights doubled when the
    /// element had odd degree).
    pub fn base(&self) -> &RingPresentation {
        &self.base
    }

    pub fn element(&self) -> &Polynomial {
        &self.element
    }

    pub fn extended(&self) -> &RingPresentation {
        &self.extended
    }

    pub fn new_var(&self) -> &str {
        &self.new_var
    }

    pub fn weights_doubled(&self) -> bool {
        self.doubled
    }

    /// Image of a base-ring polynomial in the extension.
    pub fn lift(&self, f: &Polynomial) -> Polynomial {
        lift_insert_front(f)
    }

    /// The adjoined square root as a ring element.
    pub fn sqrt_elem(&self) -> Polynomial {
        self.extended.ring().var_poly(0)
    }
}

/// Prepending a variable preserves the weighted grevlex comparisons of
/// existing monomials, so sorted term lists stay sorted.
fn lift_insert_front(f: &Polynomial) -> Polynomial {
    Polynomial::from_sorted_terms(
        f.terms()
            .iter()
            .map(|(m, c)| (m.insert_var(0), c.clone()))
            .collect(),
    )
}

fn fresh_var_name(taken: &[String]) -> String {
    let mut k = 1usize;
    loop {
        let cand = format!("Q{}", k);
        if !taken.iter().any(|v| *v == cand) {
            return cand;
        }
        k += 1;
    }
}

fn double_weights(presentation: &RingPresentation) -> Result<RingPresentation> {
    let ring = presentation.ring();
    let doubled = PolyRing::new(
        ring.characteristic(),
        ring.vars().to_vec(),
        ring.grading().weights().iter().map(|&w| 2 * w).collect(),
    )?;
    RingPresentation::new(doubled, presentation.ideal_gens().to_vec())
}

/// Adjoin a square root of `a`: the presentation `R[X]/(I + (X^2 - a))`
/// with `X` of weight `deg(a)/2`. If `deg(a)` is odd all ambient weights
/// are doubled first and the doubling is recorded. Dimension is preserved.
pub fn adjoin_sqrt(presentation: &RingPresentation, a: &Polynomial) -> Result<SqrtExtension> {
    let ring = presentation.ring();
    ring.check_poly(a)?;
    if a.is_zero() || a.has_constant_term() {
        return Err(Error::NotInMaximalIdeal);
    }
    let deg = ring.homogeneous_degree(a)?;
    let (base, deg) = if deg % 2 == 1 {
        (double_weights(presentation)?, 2 * deg)
    } else {
        (presentation.clone(), deg)
    };
    let doubled = deg != ring.homogeneous_degree(a)?;

    let base_ring = base.ring();
    let new_var = fresh_var_name(base_ring.vars());
    let mut vars = vec![new_var.clone()];
    vars.extend(base_ring.vars().iter().cloned());
    let mut weights = vec![u32::try_from(deg / 2).map_err(|_| {
        Error::InvalidRing("square-root weight exceeds 32 bits".to_string())
    })?];
    weights.extend(base_ring.grading().weights().iter().copied());
    let ext_ring = PolyRing::new(base_ring.characteristic(), vars, weights)?;

    let mut gens: Vec<Polynomial> = base
        .ideal_gens()
        .iter()
        .map(lift_insert_front)
        .collect();
    let x_squared = ext_ring.term(
        Monomial::from_exps(
            &std::iter::once(2u32)
                .chain(std::iter::repeat_n(0u32, base_ring.arity()))
                .collect::<Vec<_>>(),
        )?,
        crate::coeff::Coeff::one(ext_ring.characteristic()),
    );
    let relation = ext_ring.sub(&x_squared, &lift_insert_front(a))?;
    gens.push(relation);
    let extended = RingPresentation::new(ext_ring, gens)?;

    assert_eq!(
        extended.krull_dim(),
        base.krull_dim(),
        "square-root extension must preserve dimension"
    );
    Ok(SqrtExtension {
        element: a.clone(),
        base,
        extended,
        new_var,
        doubled,
    })
}

/// Pair-representation product in `R ⊕ R`:
/// `(r, s) (r', s') = (r r' + s s' a, r s' + r' s)`, components reduced to
/// normal form in the base. Conformance target for the polynomial model.
pub fn pair_mul(
    base: &RingPresentation,
    a: &Polynomial,
    lhs: (&Polynomial, &Polynomial),
    rhs: (&Polynomial, &Polynomial),
) -> Result<(Polynomial, Polynomial)> {
    let ring = base.ring();
    let (r, s) = lhs;
    let (rp, sp) = rhs;
    let first = ring.add(
        &ring.mul(r, rp)?,
        &ring.mul(&ring.mul(s, sp)?, a)?,
    )?;
    let second = ring.add(&ring.mul(r, sp)?, &ring.mul(rp, s)?)?;
    Ok((base.nf(&first), base.nf(&second)))
}

/// The element `r + s X` of the extension determined by a pair.
pub fn pair_to_element(ext: &SqrtExtension, pair: (&Polynomial, &Polynomial)) -> Result<Polynomial> {
    let ring = ext.extended.ring();
    let (r, s) = pair;
    let lifted_r = ext.lift(r);
    let lifted_s = ext.lift(s);
    ring.add(&lifted_r, &ring.mul(&lifted_s, &ext.sqrt_elem())?)
}

/// An iterated square-root tower.
#[derive(Debug, Clone)]
pub struct Tower {
    /// The base after the one-time weight doubling, if any.
    pub base: RingPresentation,
    pub ring: RingPresentation,
    pub root_vars: Vec<String>,
    /// The adjoined roots as elements of the final ring.
    pub roots: Vec<Polynomial>,
    /// The original elements lifted to the final ring.
    pub lifted_elements: Vec<Polynomial>,
    pub doubled: bool,
}

/// Adjoin square roots of `x_1, ..., x_l` in turn. The doubling rule is
/// applied once up front when any element has odd degree; after that every
/// step stays even.
pub fn sqrt_tower(presentation: &RingPresentation, elems: &[Polynomial]) -> Result<Tower> {
    let ring = presentation.ring();
    let mut any_odd = false;
    for e in elems {
        ring.check_poly(e)?;
        if e.is_zero() || e.has_constant_term() {
            return Err(Error::NotInMaximalIdeal);
        }
        if ring.homogeneous_degree(e)? % 2 == 1 {
            any_odd = true;
        }
    }
    let (base, doubled) = if any_odd {
        (double_weights(presentation)?, true)
    } else {
        (presentation.clone(), false)
    };
    let mut current = base.clone();
    let mut pending: Vec<Polynomial> = elems.to_vec();
    let mut roots: Vec<Polynomial> = Vec::new();
    let mut root_vars: Vec<String> = Vec::new();
    for step in 0..elems.len() {
        let ext = adjoin_sqrt(&current, &pending[step])?;
        assert!(!ext.weights_doubled(), "tower steps never re-double");
        pending = pending.iter().map(|e| ext.lift(e)).collect();
        roots = roots.iter().map(|r| ext.lift(r)).collect();
        roots.push(ext.sqrt_elem());
        root_vars.push(ext.new_var().to_string());
        current = ext.extended().clone();
    }
    Ok(Tower {
        base,
        ring: current,
        root_vars,
        roots,
        lifted_elements: pending,
        doubled,
    })
}
