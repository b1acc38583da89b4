//! Combinatorics of monomial ideals: interreduction, colength, Krull
//! dimension by independent-set search, Hilbert numerators, and enumeration
//! of standard monomials in a fixed weighted degree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gb::Length;
use crate::monomial::{Monomial, WeightedGrading};

/// Drop monomials divisible by another in the set; result sorted for
/// determinism.
pub fn interreduce(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| (m.total_exp(), m.exps().to_vec()));
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Is some generator supported entirely inside the variable subset `mask`?
fn has_generator_inside(gens: &[Monomial], mask: u32) -> bool {
    gens.iter().any(|m| m.support_mask() & !mask == 0)
}

/// Krull dimension of `A/M` for a monomial ideal `M`: the largest variable
/// subset containing the support of no generator. Exhaustive over subsets;
/// adequate at the ambient sizes this engine accepts.
pub fn dimension(arity: usize, gens: &[Monomial]) -> usize {
    let gens = interreduce(gens);
    if gens.iter().any(|m| m.is_one()) {
        return 0; // unit ideal: the zero ring
    }
    let mut best = 0usize;
    for mask in 0u32..(1u32 << arity) {
        let size = mask.count_ones() as usize;
        if size > best && !has_generator_inside(&gens, mask) {
            best = size;
        }
    }
    best
}

/// Number of monomials outside `M`; infinite unless every variable has a
/// pure power among the generators.
pub fn colength(arity: usize, gens: &[Monomial]) -> Length {
    let gens = interreduce(gens);
    if gens.iter().any(|m| m.is_one()) {
        return Length::Finite(0);
    }
    for v in 0..arity {
        let has_pure_power = gens
            .iter()
            .any(|m| m.exp(v) > 0 && (0..arity).all(|u| u == v || m.exp(u) == 0));
        if !has_pure_power {
            return Length::Infinite;
        }
    }
    Length::Finite(colength_rec(arity, gens))
}

fn colength_rec(arity: usize, gens: Vec<Monomial>) -> u64 {
    debug_assert!(!gens.iter().any(|m| m.is_one()));
    // base case: all generators are pure powers
    if gens
        .iter()
        .all(|m| (0..arity).filter(|&v| m.exp(v) > 0).count() == 1)
    {
        let mut bound = vec![u64::MAX; arity];
        for m in &gens {
            for v in 0..arity {
                if m.exp(v) > 0 {
                    bound[v] = bound[v].min(m.exp(v) as u64);
                }
            }
        }
        return bound.iter().product();
    }
    // pivot on a variable of a mixed generator
    let mixed = gens
        .iter()
        .find(|m| (0..arity).filter(|&v| m.exp(v) > 0).count() > 1)
        .unwrap();
    let pivot = (0..arity).find(|&v| mixed.exp(v) > 0).unwrap();

    // M + (v): kill every generator containing v
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exp(pivot) == 0).cloned().collect();
    plus.push(Monomial::var(arity, pivot));
    // M : v: lower the v-exponent of every generator by one
    let quo: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut e: Vec<u32> = m.exps().to_vec();
            if e[pivot] > 0 {
                e[pivot] -= 1;
            }
            Monomial::from_exps(&e).unwrap()
        })
        .collect();
    colength_rec(arity, interreduce(&plus)) + colength_rec(arity, interreduce(&quo))
}

/// Largest weighted degree of a standard monomial, or None when the
/// quotient is infinite. Splits on std(M) = std(M+(v)) ⊔ v·std(M:v).
pub fn max_standard_degree(
    arity: usize,
    gens: &[Monomial],
    grading: &WeightedGrading,
) -> Option<u64> {
    let gens = interreduce(gens);
    if gens.iter().any(|m| m.is_one()) {
        return Some(0); // empty quotient: report degree 0
    }
    match colength(arity, &gens) {
        Length::Infinite => None,
        Length::Finite(_) => Some(max_degree_rec(arity, gens, grading)),
    }
}

fn max_degree_rec(arity: usize, gens: Vec<Monomial>, grading: &WeightedGrading) -> u64 {
    if gens
        .iter()
        .all(|m| (0..arity).filter(|&v| m.exp(v) > 0).count() == 1)
    {
        let mut top = 0u64;
        for v in 0..arity {
            let bound = gens
                .iter()
                .filter(|m| m.exp(v) > 0)
                .map(|m| m.exp(v))
                .min()
                .unwrap_or(1);
            top += (bound as u64 - 1) * grading.weight(v) as u64;
        }
        return top;
    }
    let mixed = gens
        .iter()
        .find(|m| (0..arity).filter(|&v| m.exp(v) > 0).count() > 1)
        .unwrap();
    let pivot = (0..arity).find(|&v| mixed.exp(v) > 0).unwrap();
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exp(pivot) == 0).cloned().collect();
    plus.push(Monomial::var(arity, pivot));
    let quo: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut e: Vec<u32> = m.exps().to_vec();
            if e[pivot] > 0 {
                e[pivot] -= 1;
            }
            Monomial::from_exps(&e).unwrap()
        })
        .collect();
    let a = max_degree_rec(arity, interreduce(&plus), grading);
    let b = grading.weight(pivot) as u64 + max_degree_rec(arity, interreduce(&quo), grading);
    a.max(b)
}

/// Numerator of the Hilbert series of `A/M` over `(1-t)^n`, standard grading.
/// Coefficient list by ascending power of `t`.
pub fn hilbert_numerator(arity: usize, gens: &[Monomial]) -> Vec<BigInt> {
    let gens = interreduce(gens);
    numerator_rec(arity, gens)
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_add_scaled(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (j, bj) in b.iter().enumerate() {
        a[j + shift] += bj;
    }
}

fn numerator_rec(arity: usize, gens: Vec<Monomial>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    let pairwise_coprime = (0..gens.len())
        .all(|i| (i + 1..gens.len()).all(|j| gens[i].coprime(&gens[j])));
    if pairwise_coprime {
        let mut acc = vec![BigInt::one()];
        for m in &gens {
            let d = m.total_exp() as usize;
            let mut factor = vec![BigInt::zero(); d + 1];
            factor[0] = BigInt::one();
            factor[d] = -BigInt::one();
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    // pivot: variable occurring in the most generators
    let mut counts = vec![0usize; arity];
    for m in &gens {
        for (v, cnt) in counts.iter_mut().enumerate() {
            if m.exp(v) > 0 {
                *cnt += 1;
            }
        }
    }
    let pivot = (0..arity).max_by_key(|&v| counts[v]).unwrap();

    let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exp(pivot) == 0).cloned().collect();
    plus.push(Monomial::var(arity, pivot));
    let quo: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut e: Vec<u32> = m.exps().to_vec();
            if e[pivot] > 0 {
                e[pivot] -= 1;
            }
            Monomial::from_exps(&e).unwrap()
        })
        .collect();

    // N(M) = N(M + (v)) + t * N(M : v)
    let mut n = numerator_rec(arity, interreduce(&plus));
    let nq = numerator_rec(arity, interreduce(&quo));
    poly_add_scaled(&mut n, &nq, 1);
    n
}

/// Exact division of an integer polynomial by `(1 - t)`, `times` times.
/// Returns None if the division ever leaves a remainder.
pub fn divide_by_one_minus_t(numer: &[BigInt], times: usize) -> Option<Vec<BigInt>> {
    let mut cur: Vec<BigInt> = numer.to_vec();
    for _ in 0..times {
        // q(t) satisfying (1 - t) q = cur: q_0 = c_0, q_k = c_k + q_{k-1}
        if cur.is_empty() {
            continue;
        }
        let mut q = Vec::with_capacity(cur.len().saturating_sub(1));
        let mut carry = BigInt::zero();
        for (k, c) in cur.iter().enumerate() {
            let qk = c + &carry;
            if k + 1 == cur.len() {
                if !qk.is_zero() {
                    return None;
                }
            } else {
                q.push(qk.clone());
                carry = qk;
            }
        }
        cur = q;
    }
    while cur.last().map(|c| c.is_zero()).unwrap_or(false) {
        cur.pop();
    }
    Some(cur)
}

/// All standard monomials (not divisible by any generator) of exact
/// weighted degree `target`.
pub fn standard_monomials_of_degree(
    arity: usize,
    gens: &[Monomial],
    grading: &WeightedGrading,
    target: u64,
) -> Vec<Monomial> {
    let gens = interreduce(gens);
    let mut out = Vec::new();
    let mut exps = vec![0u32; arity];
    enumerate(arity, &gens, grading, target, 0, &mut exps, &mut out);
    out
}

fn enumerate(
    arity: usize,
    gens: &[Monomial],
    grading: &WeightedGrading,
    remaining: u64,
    var: usize,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if var == arity {
        if remaining == 0 {
            let m = Monomial::from_exps(exps).unwrap();
            if !gens.iter().any(|g| g.divides(&m)) {
                out.push(m);
            }
        }
        return;
    }
    let w = grading.weight(var) as u64;
    let max_e = remaining / w;
    for e in 0..=max_e {
        exps[var] = u32::try_from(e).expect("exponent exceeds 32 bits");
        // prune: a generator supported on the already-fixed variables that
        // already divides the partial exponent vector kills the subtree
        let partially_divisible = gens.iter().any(|g| {
            (0..=var).all(|v| g.exp(v) <= exps[v]) && (var + 1..arity).all(|v| g.exp(v) == 0)
        });
        if !partially_divisible {
            enumerate(arity, gens, grading, remaining - e * w, var + 1, exps, out);
        }
    }
    exps[var] = 0;
}
