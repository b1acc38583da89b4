//! Sparse multivariate polynomials over an exact field, with the ambient
//! ring (characteristic, variable names, grading) carried as a context
//! object. Term lists are kept strictly descending in the ambient order.

use std::cmp::Ordering;

use crate::coeff::{is_odd_prime, Coeff};
use crate::error::{Error, Result};
use crate::monomial::{compare, Monomial, WeightedGrading, MAX_VARS};

/// Ambient polynomial ring data: K[v_1..v_n] with a weighted grevlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    characteristic: u32,
    vars: Vec<String>,
    grading: WeightedGrading,
}

impl PolyRing {
    pub fn new(characteristic: u32, vars: Vec<String>, weights: Vec<u32>) -> Result<Self> {
        if characteristic != 0 && !is_odd_prime(characteristic) {
            return Err(Error::InvalidRing(format!(
                "characteristic must be 0 or an odd prime < 2^31, got {}",
                characteristic
            )));
        }
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "variable count must be in 1..={}, got {}",
                MAX_VARS,
                vars.len()
            )));
        }
        if vars.len() != weights.len() {
            return Err(Error::ArityMismatch {
                expected: vars.len(),
                found: weights.len(),
            });
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty()
                || !v.chars().next().unwrap().is_ascii_alphabetic()
                || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::InvalidRing(format!("bad variable name `{}`", v)));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{}`", v)));
            }
        }
        let grading = WeightedGrading::new(weights)?;
        Ok(PolyRing {
            characteristic,
            vars,
            grading,
        })
    }

    /// Standard grading, handy in tests.
    pub fn standard(characteristic: u32, vars: &[&str]) -> Result<Self> {
        PolyRing::new(
            characteristic,
            vars.iter().map(|s| s.to_string()).collect(),
            vec![1; vars.len()],
        )
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn grading(&self) -> &WeightedGrading {
        &self.grading
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        compare(a, b, &self.grading)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        Polynomial {
            terms: vec![(Monomial::one(self.arity()), Coeff::one(self.characteristic))],
        }
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        if c.is_zero() {
            self.zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(self.arity()), c)],
            }
        }
    }

    pub fn var_poly(&self, index: usize) -> Polynomial {
        Polynomial {
            terms: vec![(
                Monomial::var(self.arity(), index),
                Coeff::one(self.characteristic),
            )],
        }
    }

    pub fn term(&self, m: Monomial, c: Coeff) -> Polynomial {
        if c.is_zero() {
            self.zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Canonicalize an arbitrary term list: validate, sort, merge, drop zeros.
    pub fn from_terms(&self, terms: Vec<(Monomial, Coeff)>) -> Result<Polynomial> {
        for (m, c) in &terms {
            self.check_term(m, c)?;
        }
        let mut terms = terms;
        terms.sort_by(|a, b| self.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Ok(Polynomial { terms: out })
    }

    fn check_term(&self, m: &Monomial, c: &Coeff) -> Result<()> {
        if m.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: m.arity(),
            });
        }
        if c.characteristic() != self.characteristic {
            return Err(Error::CharMismatch {
                expected: self.characteristic,
                found: c.characteristic(),
            });
        }
        Ok(())
    }

    pub fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if let Some((m, c)) = f.terms.first() {
            self.check_term(m, c)?;
        }
        Ok(())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check_poly(f)?;
        self.check_poly(g)?;
        Ok(self.add_raw(f, g))
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check_poly(f)?;
        self.check_poly(g)?;
        Ok(self.sub_raw(f, g))
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check_poly(f)?;
        self.check_poly(g)?;
        Ok(self.mul_raw(f, g))
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Merge of two descending term lists.
    pub(crate) fn add_raw(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.compare(&f.terms[i].0, &g.terms[j].0) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(g.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.terms[i].1.add(&g.terms[j].1);
                    if !c.is_zero() {
                        out.push((f.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        out.extend_from_slice(&g.terms[j..]);
        Polynomial { terms: out }
    }

    pub(crate) fn sub_raw(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_raw(f, &self.neg(g))
    }

    /// Multiply by a single term; sort order is preserved.
    pub(crate) fn mul_term(&self, f: &Polynomial, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(fm, fc)| (fm.mul(m), fc.mul(c)))
                .collect(),
        }
    }

    pub(crate) fn mul_raw(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (small, large) = if f.terms.len() <= g.terms.len() {
            (f, g)
        } else {
            (g, f)
        };
        let mut acc = self.zero();
        for (m, c) in &small.terms {
            acc = self.add_raw(&acc, &self.mul_term(large, m, c));
        }
        acc
    }

    pub fn scale(&self, f: &Polynomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            terms: f.terms.iter().map(|(m, fc)| (m.clone(), fc.mul(c))).collect(),
        }
    }

    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            None => self.zero(),
            Some((_, c)) if c.is_one() => f.clone(),
            Some((_, c)) => self.scale(f, &c.inv()),
        }
    }

    /// Weighted degree of a nonzero polynomial; inhomogeneity is reported
    /// with the two offending degrees.
    pub fn weighted_degree(&self, f: &Polynomial) -> Result<DegreeCheck> {
        self.check_poly(f)?;
        let mut it = f.terms.iter();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        let d = self.grading.degree(&first.0);
        for (m, _) in it {
            let dm = self.grading.degree(m);
            if dm != d {
                return Ok(DegreeCheck::Inhomogeneous(d, dm));
            }
        }
        Ok(DegreeCheck::Homogeneous(d))
    }

    /// Degree if homogeneous, error otherwise.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> Result<u64> {
        match self.weighted_degree(f)? {
            DegreeCheck::Homogeneous(d) => Ok(d),
            DegreeCheck::Inhomogeneous(a, b) => Err(Error::Inhomogeneous {
                degree_a: a,
                degree_b: b,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeCheck {
    Homogeneous(u64),
    Inhomogeneous(u64, u64),
}

/// A polynomial as a strictly descending term list; the empty list is zero.
/// Structural equality coincides with mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    /// Terms must already be strictly descending in the ambient order.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// True when some term is a nonzero constant.
    pub fn has_constant_term(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.is_one())
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff_of(&self, m: &Monomial, characteristic: u32) -> Coeff {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| Coeff::zero(characteristic))
    }

    /// The terms that are bare variables (exponent vector summing to 1),
    /// as (variable index, coefficient).
    pub fn linear_terms(&self) -> Vec<(usize, Coeff)> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            if m.total_exp() == 1 {
                let idx = (0..m.arity()).find(|&i| m.exp(i) == 1).unwrap();
                out.push((idx, c.clone()));
            }
        }
        out
    }
}
