//! Exponent vectors, positive weight vectors and the weighted graded
//! reverse-lexicographic order.

use arrayvec::ArrayVec;
use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Hard cap on ambient variables; keeps exponent vectors inline.
pub const MAX_VARS: usize = 16;

/// A monomial of fixed arity: one non-negative exponent per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: ArrayVec<u32, MAX_VARS>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        assert!(arity <= MAX_VARS);
        let mut exps = ArrayVec::new();
        for _ in 0..arity {
            exps.push(0);
        }
        Monomial { exps }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut m = Monomial::one(arity);
        m.exps[index] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::ArityMismatch {
                expected: MAX_VARS,
                found: exps.len(),
            });
        }
        Ok(Monomial {
            exps: exps.iter().copied().collect(),
        })
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Sum of exponents (degree under the all-ones weighting).
    pub fn total_exp(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Bitmask of the support; used as a cheap divisibility prefilter.
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Exponent overflow is a hard error, never a wraparound.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = ArrayVec::new();
        for i in 0..self.arity() {
            exps.push(
                self.exps[i]
                    .checked_add(other.exps[i])
                    .expect("monomial exponent overflow"),
            );
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined only when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exps = ArrayVec::new();
        for i in 0..self.arity() {
            exps.push(other.exps[i] - self.exps[i]);
        }
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = ArrayVec::new();
        for i in 0..self.arity() {
            exps.push(self.exps[i].max(other.exps[i]));
        }
        Monomial { exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Insert a zero exponent at `position`, shifting later variables right.
    pub fn insert_var(&self, position: usize) -> Monomial {
        assert!(self.arity() < MAX_VARS);
        let mut exps = ArrayVec::new();
        for i in 0..=self.arity() {
            match i.cmp(&position) {
                Ordering::Less => exps.push(self.exps[i]),
                Ordering::Equal => exps.push(0),
                Ordering::Greater => exps.push(self.exps[i - 1]),
            }
        }
        Monomial { exps }
    }
}

/// Positive integer weights on the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGrading {
    weights: Vec<u32>,
}

impl WeightedGrading {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() || weights.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "variable count must be in 1..={}, got {}",
                MAX_VARS,
                weights.len()
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidRing("weights must be positive".to_string()));
        }
        Ok(WeightedGrading { weights })
    }

    pub fn standard(arity: usize) -> Self {
        WeightedGrading::new(vec![1; arity]).unwrap()
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        debug_assert_eq!(self.arity(), m.arity());
        let mut d: u128 = 0;
        for (w, e) in self.weights.iter().zip(m.exps()) {
            d += (*w as u128) * (*e as u128);
        }
        u64::try_from(d).expect("weighted degree overflow")
    }
}

/// Weighted graded reverse-lexicographic comparison: weighted degree first,
/// ties broken so that the smaller exponent in the last differing variable
/// wins. Total, multiplicative, and degree-refining.
pub fn compare(a: &Monomial, b: &Monomial, grading: &WeightedGrading) -> Ordering {
    debug_assert_eq!(a.arity(), b.arity());
    let da = grading.degree(a);
    let db = grading.degree(b);
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.arity()).rev() {
        if a.exp(i) != b.exp(i) {
            return b.exp(i).cmp(&a.exp(i));
        }
    }
    Ordering::Equal
}
