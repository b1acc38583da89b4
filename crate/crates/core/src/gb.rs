//! Buchberger engine for ideals and for submodules of free modules under the
//! position-over-term (POT) order, plus normal forms, kernels of polynomial
//! matrices, ideal quotients and colength counting.
//!
//! There is a single Buchberger core working on module elements; an ideal is
//! the rank-1 case. Pair selection is the normal strategy (minimal weighted
//! lcm degree, then creation order). The coprimality criterion is applied in
//! rank 1 only; the chain criterion is applied in the conservative form that
//! needs no processed-pair bookkeeping (both sub-lcms strictly smaller).

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monideal;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Length of a quotient: number of standard monomials, or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn is_finite(&self) -> bool {
        matches!(self, Length::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(*n),
            Length::Infinite => None,
        }
    }
}

/// A reduced Groebner basis: monic generators, mutually reduced, sorted
/// ascending by leading monomial. Unique for a given ideal and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].leading_monomial().unwrap().is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }
}

/// One term of a free-module element: component, monomial, coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Element of a free module, stored as a flat term list strictly descending
/// in POT order (lower component index is larger; ties by monomial order).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModElement {
    terms: Vec<ModTerm>,
}

fn pot_cmp(ring: &PolyRing, ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
    match bc.cmp(&ac) {
        Ordering::Equal => ring.compare(am, bm),
        other => other,
    }
}

impl ModElement {
    pub fn zero() -> Self {
        ModElement { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    /// Build from a component-indexed vector of polynomials.
    pub fn from_components(ring: &PolyRing, comps: &[Polynomial]) -> ModElement {
        let mut terms = Vec::new();
        for (c, p) in comps.iter().enumerate() {
            for (m, k) in p.terms() {
                terms.push(ModTerm {
                    comp: c as u32,
                    mono: m.clone(),
                    coeff: k.clone(),
                });
            }
        }
        terms.sort_by(|a, b| pot_cmp(ring, b.comp, &b.mono, a.comp, &a.mono));
        ModElement { terms }
    }

    /// The polynomial sitting in one component.
    pub fn component(&self, comp: u32) -> Polynomial {
        Polynomial::from_sorted_terms(
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mono.clone(), t.coeff.clone()))
                .collect(),
        )
    }

    pub fn to_components(&self, rank: usize) -> Vec<Polynomial> {
        (0..rank as u32).map(|c| self.component(c)).collect()
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    fn shift_components(&self, delta: u32) -> ModElement {
        ModElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    comp: t.comp - delta,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }
}

fn mod_add(ring: &PolyRing, f: &ModElement, g: &ModElement) -> ModElement {
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < f.terms.len() && j < g.terms.len() {
        let a = &f.terms[i];
        let b = &g.terms[j];
        match pot_cmp(ring, a.comp, &a.mono, b.comp, &b.mono) {
            Ordering::Greater => {
                out.push(a.clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b.clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = a.coeff.add(&b.coeff);
                if !c.is_zero() {
                    out.push(ModTerm {
                        comp: a.comp,
                        mono: a.mono.clone(),
                        coeff: c,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f.terms[i..]);
    out.extend_from_slice(&g.terms[j..]);
    ModElement { terms: out }
}

fn mod_mul_term(f: &ModElement, m: &Monomial, c: &Coeff) -> ModElement {
    if c.is_zero() {
        return ModElement::zero();
    }
    ModElement {
        terms: f
            .terms
            .iter()
            .map(|t| ModTerm {
                comp: t.comp,
                mono: t.mono.mul(m),
                coeff: t.coeff.mul(c),
            })
            .collect(),
    }
}

fn mod_scale(f: &ModElement, c: &Coeff) -> ModElement {
    ModElement {
        terms: f
            .terms
            .iter()
            .map(|t| ModTerm {
                comp: t.comp,
                mono: t.mono.clone(),
                coeff: t.coeff.mul(c),
            })
            .collect(),
    }
}

fn mod_monic(f: &ModElement) -> ModElement {
    match f.leading() {
        None => ModElement::zero(),
        Some(t) if t.coeff.is_one() => f.clone(),
        Some(t) => mod_scale(f, &t.coeff.inv()),
    }
}

/// Multiply a module element by a polynomial.
pub fn scale_element(ring: &PolyRing, v: &ModElement, p: &Polynomial) -> ModElement {
    let mut acc = ModElement::zero();
    for (m, c) in p.terms() {
        acc = mod_add(ring, &acc, &mod_mul_term(v, m, c));
    }
    acc
}

/// Multiply a polynomial into a single component.
pub fn poly_to_mod(p: &Polynomial, comp: u32) -> ModElement {
    ModElement {
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| ModTerm {
                comp,
                mono: m.clone(),
                coeff: c.clone(),
            })
            .collect(),
    }
}

struct LeadInfo {
    comp: u32,
    mono: Monomial,
    mask: u32,
    deg: u64,
}

fn lead_info(ring: &PolyRing, f: &ModElement) -> LeadInfo {
    let t = f.leading().expect("lead of zero element");
    LeadInfo {
        comp: t.comp,
        mono: t.mono.clone(),
        mask: t.mono.support_mask(),
        deg: ring.grading().degree(&t.mono),
    }
}

/// Full normal form of a module element against a list of monic elements.
fn nf_mod_raw(ring: &PolyRing, f: &ModElement, basis: &[ModElement], leads: &[LeadInfo]) -> ModElement {
    let mut terms: Vec<ModTerm> = f.terms.clone();
    let mut done = 0usize;
    'scan: while done < terms.len() {
        let t_mask = terms[done].mono.support_mask();
        let t_deg = ring.grading().degree(&terms[done].mono);
        for (g, info) in basis.iter().zip(leads) {
            if info.comp == terms[done].comp
                && info.deg <= t_deg
                && (info.mask & !t_mask) == 0
                && info.mono.divides(&terms[done].mono)
            {
                let q = info.mono.div_into(&terms[done].mono);
                let factor = terms[done].coeff.neg();
                let sub = mod_mul_term(g, &q, &factor);
                let tail = ModElement {
                    terms: terms[done..].to_vec(),
                };
                let merged = mod_add(ring, &tail, &sub);
                terms.truncate(done);
                terms.extend(merged.terms);
                continue 'scan;
            }
        }
        done += 1;
    }
    ModElement { terms }
}

/// The shared Buchberger core.
fn engine(
    ring: &PolyRing,
    input: Vec<ModElement>,
    use_coprime_criterion: bool,
) -> Vec<ModElement> {
    let mut basis: Vec<ModElement> = Vec::new();
    let mut leads: Vec<LeadInfo> = Vec::new();
    // (lcm weighted degree, creation sequence, i, j)
    let mut queue: BinaryHeap<std::cmp::Reverse<(u64, u64, u32, u32)>> = BinaryHeap::new();
    let mut seq = 0u64;

    let mut push = |g: ModElement,
                    basis: &mut Vec<ModElement>,
                    leads: &mut Vec<LeadInfo>,
                    queue: &mut BinaryHeap<std::cmp::Reverse<(u64, u64, u32, u32)>>| {
        let info = lead_info(ring, &g);
        let new_idx = basis.len() as u32;
        for (k, lk) in leads.iter().enumerate() {
            if lk.comp == info.comp {
                let lcm = lk.mono.lcm(&info.mono);
                let deg = ring.grading().degree(&lcm);
                queue.push(std::cmp::Reverse((deg, seq, k as u32, new_idx)));
                seq += 1;
            }
        }
        basis.push(g);
        leads.push(info);
    };

    for f in input {
        if f.is_zero() {
            continue;
        }
        let r = nf_mod_raw(ring, &f, &basis, &leads);
        if !r.is_zero() {
            push(mod_monic(&r), &mut basis, &mut leads, &mut queue);
        }
    }

    while let Some(std::cmp::Reverse((_, _, i, j))) = queue.pop() {
        let (i, j) = (i as usize, j as usize);
        let lcm = leads[i].mono.lcm(&leads[j].mono);
        if use_coprime_criterion && leads[i].mono.coprime(&leads[j].mono) {
            continue;
        }
        if chain_skip(&leads, i, j, &lcm) {
            continue;
        }
        let ui = leads[i].mono.div_into(&lcm);
        let uj = leads[j].mono.div_into(&lcm);
        let one = Coeff::one(ring.characteristic());
        let s = mod_add(
            ring,
            &mod_mul_term(&basis[i], &ui, &one),
            &mod_mul_term(&basis[j], &uj, &one.neg()),
        );
        let r = nf_mod_raw(ring, &s, &basis, &leads);
        if !r.is_zero() {
            push(mod_monic(&r), &mut basis, &mut leads, &mut queue);
        }
    }

    interreduce(ring, basis)
}

/// Conservative chain criterion: a third lead in the same component dividing
/// the lcm, with both sub-lcms proper divisors. Safe without bookkeeping
/// because both sub-pairs live at strictly smaller lcm degree.
fn chain_skip(leads: &[LeadInfo], i: usize, j: usize, lcm: &Monomial) -> bool {
    let lcm_mask = lcm.support_mask();
    for (k, lk) in leads.iter().enumerate() {
        if k == i || k == j || lk.comp != leads[i].comp {
            continue;
        }
        if (lk.mask & !lcm_mask) != 0 || !lk.mono.divides(lcm) {
            continue;
        }
        if leads[i].mono.lcm(&lk.mono) == *lcm {
            continue;
        }
        if leads[j].mono.lcm(&lk.mono) == *lcm {
            continue;
        }
        return true;
    }
    false
}

fn interreduce(ring: &PolyRing, mut gens: Vec<ModElement>) -> Vec<ModElement> {
    gens.sort_by(|a, b| {
        let ta = a.leading().unwrap();
        let tb = b.leading().unwrap();
        pot_cmp(ring, ta.comp, &ta.mono, tb.comp, &tb.mono)
    });
    // minimalize: drop elements whose lead is divisible by an earlier lead
    let mut kept: Vec<ModElement> = Vec::new();
    let mut kept_leads: Vec<LeadInfo> = Vec::new();
    'next: for g in gens {
        let info = lead_info(ring, &g);
        for kl in &kept_leads {
            if kl.comp == info.comp && (kl.mask & !info.mask) == 0 && kl.mono.divides(&info.mono) {
                continue 'next;
            }
        }
        kept.push(g);
        kept_leads.push(info);
    }
    // tail-reduce each against all the others
    for i in 0..kept.len() {
        let mut others = Vec::with_capacity(kept.len() - 1);
        let mut other_leads = Vec::with_capacity(kept.len() - 1);
        for (k, g) in kept.iter().enumerate() {
            if k != i {
                others.push(g.clone());
                other_leads.push(lead_info(ring, g));
            }
        }
        let reduced = nf_mod_raw(ring, &kept[i], &others, &other_leads);
        debug_assert!(!reduced.is_zero());
        kept[i] = mod_monic(&reduced);
    }
    kept
}

fn validate_poly_inputs(ring: &PolyRing, gens: &[Polynomial]) -> Result<()> {
    for g in gens {
        ring.check_poly(g)?;
    }
    Ok(())
}

/// Reduced Groebner basis of the ideal generated by `gens`.
/// Zero generators are discarded; output is independent of generator order.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    validate_poly_inputs(ring, gens)?;
    let input: Vec<ModElement> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| poly_to_mod(g, 0))
        .collect();
    let out = engine(ring, input, true);
    Ok(GroebnerBasis {
        gens: out.iter().map(|e| e.component(0)).collect(),
    })
}

/// Complete reduction: no term of the result is divisible by any leading
/// monomial of the basis, and `f - result` lies in the ideal.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    ring.check_poly(f)?;
    Ok(normal_form_raw(ring, f, gb))
}

pub(crate) fn normal_form_raw(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let basis: Vec<ModElement> = gb.gens.iter().map(|g| poly_to_mod(g, 0)).collect();
    let leads: Vec<LeadInfo> = basis.iter().map(|g| lead_info(ring, g)).collect();
    nf_mod_raw(ring, &poly_to_mod(f, 0), &basis, &leads).component(0)
}

/// Ideal membership via zero normal form.
pub fn reduces_to_zero(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> bool {
    normal_form_raw(ring, f, gb).is_zero()
}

/// A reduced POT Groebner basis of a submodule of a free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleGroebnerBasis {
    rank: usize,
    gens: Vec<ModElement>,
}

impl ModuleGroebnerBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModElement] {
        &self.gens
    }

    pub fn is_zero_module(&self) -> bool {
        self.gens.is_empty()
    }

    /// Leading (component, monomial) pairs.
    pub fn leading_terms(&self) -> Vec<(u32, Monomial)> {
        self.gens
            .iter()
            .map(|g| {
                let t = g.leading().unwrap();
                (t.comp, t.mono.clone())
            })
            .collect()
    }
}

fn validate_mod_inputs(ring: &PolyRing, gens: &[ModElement], rank: usize) -> Result<()> {
    for g in gens {
        for t in g.terms() {
            if t.comp as usize >= rank {
                return Err(Error::RankMismatch {
                    rank,
                    component: t.comp as usize,
                });
            }
            if t.mono.arity() != ring.arity() {
                return Err(Error::ArityMismatch {
                    expected: ring.arity(),
                    found: t.mono.arity(),
                });
            }
        }
    }
    Ok(())
}

/// Reduced POT Groebner basis of the submodule generated by `gens`.
pub fn module_buchberger(
    ring: &PolyRing,
    gens: &[ModElement],
    rank: usize,
) -> Result<ModuleGroebnerBasis> {
    validate_mod_inputs(ring, gens, rank)?;
    let input: Vec<ModElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let out = engine(ring, input, false);
    Ok(ModuleGroebnerBasis { rank, gens: out })
}

pub fn module_normal_form(
    ring: &PolyRing,
    f: &ModElement,
    gb: &ModuleGroebnerBasis,
) -> Result<ModElement> {
    validate_mod_inputs(ring, std::slice::from_ref(f), gb.rank)?;
    Ok(module_normal_form_raw(ring, f, gb))
}

pub(crate) fn module_normal_form_raw(
    ring: &PolyRing,
    f: &ModElement,
    gb: &ModuleGroebnerBasis,
) -> ModElement {
    let leads: Vec<LeadInfo> = gb.gens.iter().map(|g| lead_info(ring, g)).collect();
    nf_mod_raw(ring, f, &gb.gens, &leads)
}

pub fn module_reduces_to_zero(ring: &PolyRing, f: &ModElement, gb: &ModuleGroebnerBasis) -> bool {
    module_normal_form_raw(ring, f, gb).is_zero()
}

/// A matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::default(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    /// Column as an element of the rank-`rows` free module.
    pub fn column_element(&self, ring: &PolyRing, c: usize) -> ModElement {
        let comps: Vec<Polynomial> = (0..self.rows).map(|r| self.entry(r, c).clone()).collect();
        ModElement::from_components(ring, &comps)
    }

    /// Matrix times a module element of rank `cols`.
    pub fn apply(&self, ring: &PolyRing, v: &ModElement) -> Vec<Polynomial> {
        let mut out = vec![ring.zero(); self.rows];
        for c in 0..self.cols {
            let vc = v.component(c as u32);
            if vc.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let e = self.entry(r, c);
                if !e.is_zero() {
                    *slot = ring.add_raw(slot, &ring.mul_raw(e, &vc));
                }
            }
        }
        out
    }

    /// Matrix product, exact over the ambient ring.
    pub fn mul(&self, ring: &PolyRing, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    let a = self.entry(r, k);
                    let b = other.entry(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = ring.add_raw(&acc, &ring.mul_raw(a, b));
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }
}

/// Generators of `{v : M v = 0}` as a reduced POT basis of a submodule of
/// the rank-`cols` free module. Computed from a POT basis of the graph
/// submodule `{(M v, v)}` with target components dominating; each returned
/// generator is verified to map to zero.
pub fn kernel(ring: &PolyRing, m: &PolyMatrix) -> Result<ModuleGroebnerBasis> {
    for e in &m.entries {
        ring.check_poly(e)?;
    }
    let graph_rank = m.rows + m.cols;
    let one = Coeff::one(ring.characteristic());
    let mut graph_gens = Vec::with_capacity(m.cols);
    for j in 0..m.cols {
        let mut comps: Vec<Polynomial> = (0..m.rows).map(|r| m.entry(r, j).clone()).collect();
        comps.extend((0..m.cols).map(|c| {
            if c == j {
                ring.constant(one.clone())
            } else {
                ring.zero()
            }
        }));
        graph_gens.push(ModElement::from_components(ring, &comps));
    }
    let gb = module_buchberger(ring, &graph_gens, graph_rank)?;
    let mut out: Vec<ModElement> = gb
        .gens
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.comp as usize >= m.rows))
        .map(|g| g.shift_components(m.rows as u32))
        .collect();
    out.sort_by(|a, b| {
        let ta = a.leading().unwrap();
        let tb = b.leading().unwrap();
        pot_cmp(ring, ta.comp, &ta.mono, tb.comp, &tb.mono)
    });
    for v in &out {
        let image = m.apply(ring, v);
        assert!(
            image.iter().all(|p| p.is_zero()),
            "kernel generator failed the post-hoc image check"
        );
    }
    Ok(ModuleGroebnerBasis {
        rank: m.cols,
        gens: out,
    })
}

/// `I : g` for a single nonzero element, read off a kernel computation.
fn quotient_by_element(ring: &PolyRing, i_gb: &GroebnerBasis, g: &Polynomial) -> Result<Vec<Polynomial>> {
    let mut entries = vec![g.clone()];
    entries.extend(i_gb.gens.iter().cloned());
    let m = PolyMatrix::new(1, entries.len(), entries)?;
    let ker = kernel(ring, &m)?;
    Ok(ker
        .gens
        .iter()
        .map(|v| v.component(0))
        .filter(|p| !p.is_zero())
        .collect())
}

/// Intersection of two ideals via the kernel of `A -> A/P (+) A/Q`.
pub fn intersect_ideals(
    ring: &PolyRing,
    a: &GroebnerBasis,
    b: &GroebnerBasis,
) -> Result<GroebnerBasis> {
    let mut entries: Vec<Polynomial> = Vec::new();
    // row 0: 1, a gens, zeros; row 1: 1, zeros, b gens
    entries.push(ring.one());
    entries.extend(a.gens.iter().cloned());
    entries.extend(std::iter::repeat_n(ring.zero(), b.gens.len()));
    entries.push(ring.one());
    entries.extend(std::iter::repeat_n(ring.zero(), a.gens.len()));
    entries.extend(b.gens.iter().cloned());
    let m = PolyMatrix::new(2, 1 + a.gens.len() + b.gens.len(), entries)?;
    let ker = kernel(ring, &m)?;
    let gens: Vec<Polynomial> = ker
        .gens
        .iter()
        .map(|v| v.component(0))
        .filter(|p| !p.is_zero())
        .collect();
    buchberger(ring, &gens)
}

/// Reduced basis of `I : (J) = { f : f g in I for all g in J }`, computed as
/// the intersection of the single-element quotients.
pub fn ideal_quotient(
    ring: &PolyRing,
    i_gb: &GroebnerBasis,
    j: &[Polynomial],
) -> Result<GroebnerBasis> {
    if j.is_empty() {
        return Err(Error::EmptySequence);
    }
    validate_poly_inputs(ring, j)?;
    let nonzero: Vec<&Polynomial> = j.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        // quotient by the zero ideal is the unit ideal
        return buchberger(ring, &[ring.one()]);
    }
    let mut acc: Option<GroebnerBasis> = None;
    for g in nonzero {
        let q = quotient_by_element(ring, i_gb, g)?;
        let q_gb = buchberger(ring, &q)?;
        acc = Some(match acc {
            None => q_gb,
            Some(prev) => intersect_ideals(ring, &prev, &q_gb)?,
        });
    }
    Ok(acc.unwrap())
}

/// Number of monomials outside the initial ideal, or infinite.
pub fn ideal_colength(ring: &PolyRing, gb: &GroebnerBasis) -> Length {
    monideal::colength(ring.arity(), &gb.leading_monomials())
}

/// Per-component standard monomial count for a module quotient.
pub fn module_colength(ring: &PolyRing, gb: &ModuleGroebnerBasis, rank: usize) -> Length {
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); rank];
    for (c, m) in gb.leading_terms() {
        per_comp[c as usize].push(m);
    }
    let mut total = 0u64;
    for lts in &per_comp {
        match monideal::colength(ring.arity(), lts) {
            Length::Infinite => return Length::Infinite,
            Length::Finite(n) => total += n,
        }
    }
    Length::Finite(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring3() -> PolyRing {
        PolyRing::standard(0, &["x", "y", "z"]).unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> Polynomial {
        parse_poly(r, s).unwrap()
    }

    fn gb_strings(r: &PolyRing, gb: &GroebnerBasis) -> Vec<String> {
        gb.generators()
            .iter()
            .map(|g| crate::parse::print_poly(r, g))
            .collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring3();
        let gb = buchberger(&r, &[p(&r, "x^2"), p(&r, "x*y"), p(&r, "x*z")]).unwrap();
        assert_eq!(gb_strings(&r, &gb), vec!["x*z", "x*y", "x^2"]);
    }

    #[test]
    fn one_step_s_polynomial() {
        let r = ring3();
        let gb = buchberger(&r, &[p(&r, "x^2 - y*z"), p(&r, "x*y")]).unwrap();
        let mut got = gb_strings(&r, &gb);
        got.sort();
        assert_eq!(got, vec!["x*y", "x^2 - y*z", "y^2*z"]);
    }

    #[test]
    fn empty_input_empty_basis() {
        let r = ring3();
        let gb = buchberger(&r, &[]).unwrap();
        assert!(gb.is_zero_ideal());
        let gb2 = buchberger(&r, &[r.zero()]).unwrap();
        assert!(gb2.is_zero_ideal());
    }

    #[test]
    fn basis_independent_of_generator_order() {
        let r = ring3();
        let gens = [p(&r, "x^2 - y*z"), p(&r, "x*y"), p(&r, "y^3 - z^3")];
        let gb1 = buchberger(&r, &gens).unwrap();
        let rev: Vec<Polynomial> = gens.iter().rev().cloned().collect();
        let gb2 = buchberger(&r, &rev).unwrap();
        assert_eq!(gb1, gb2);
    }

    #[test]
    fn buchberger_criterion_postcondition() {
        let r = ring3();
        let gb = buchberger(&r, &[p(&r, "x^2 - y*z"), p(&r, "x*y"), p(&r, "x*z - y^2")]).unwrap();
        let gens = gb.generators();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let mi = gens[i].leading_monomial().unwrap();
                let mj = gens[j].leading_monomial().unwrap();
                let lcm = mi.lcm(mj);
                let s = r.sub_raw(
                    &r.mul_term(&gens[i], &mi.div_into(&lcm), &Coeff::one(0)),
                    &r.mul_term(&gens[j], &mj.div_into(&lcm), &Coeff::one(0)),
                );
                assert!(reduces_to_zero(&r, &s, &gb));
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = ring3();
        let gb = buchberger(&r, &[p(&r, "x^2")]).unwrap();
        assert_eq!(normal_form(&r, &p(&r, "x^2*y + y"), &gb).unwrap(), p(&r, "y"));

        let gb2 = buchberger(&r, &[p(&r, "x^2 - y*z"), p(&r, "x*y"), p(&r, "y^2*z")]).unwrap();
        for g in gb2.generators() {
            assert!(reduces_to_zero(&r, g, &gb2));
        }
        assert_eq!(
            normal_form(&r, &p(&r, "y^2*z + x*z"), &gb2).unwrap(),
            p(&r, "x*z")
        );
    }

    #[test]
    fn membership_decides_ideal() {
        let r = ring3();
        let gb = buchberger(&r, &[p(&r, "x^2 - y*z"), p(&r, "x*y")]).unwrap();
        let member = r
            .add(
                &r.mul(&p(&r, "z^2 - x"), &p(&r, "x^2 - y*z")).unwrap(),
                &r.mul(&p(&r, "y + z"), &p(&r, "x*y")).unwrap(),
            )
            .unwrap();
        assert!(reduces_to_zero(&r, &member, &gb));
        assert!(!reduces_to_zero(&r, &p(&r, "x"), &gb));
    }

    fn me(r: &PolyRing, comps: &[&str]) -> ModElement {
        let polys: Vec<Polynomial> = comps.iter().map(|s| p(r, s)).collect();
        ModElement::from_components(r, &polys)
    }

    #[test]
    fn module_basis_fixed_points() {
        let r = ring3();
        let gens = [me(&r, &["x", "0"]), me(&r, &["0", "y"])];
        let gb = module_buchberger(&r, &gens, 2).unwrap();
        assert_eq!(gb.generators().len(), 2);
        for g in &gens {
            assert!(module_reduces_to_zero(&r, g, &gb));
        }

        let single = [me(&r, &["x", "y"])];
        let gb1 = module_buchberger(&r, &single, 2).unwrap();
        assert_eq!(gb1.generators().len(), 1);
    }

    #[test]
    fn module_s_pair_on_shared_component() {
        let r = ring3();
        let gens = [me(&r, &["y", "-x"]), me(&r, &["z", "0"])];
        let gb = module_buchberger(&r, &gens, 2).unwrap();
        let expect = [me(&r, &["y", "-x"]), me(&r, &["z", "0"]), me(&r, &["0", "x*z"])];
        assert_eq!(gb.generators().len(), 3);
        for e in &expect {
            assert!(module_reduces_to_zero(&r, e, &gb));
        }
    }

    #[test]
    fn kernel_of_regular_pair() {
        let r = PolyRing::standard(0, &["x", "y"]).unwrap();
        let m = PolyMatrix::new(1, 2, vec![p(&r, "x"), p(&r, "y")]).unwrap();
        let ker = kernel(&r, &m).unwrap();
        assert_eq!(ker.generators().len(), 1);
        assert_eq!(
            ker.generators()[0],
            ModElement::from_components(&r, &[p(&r, "y"), p(&r, "-x")])
        );
    }

    #[test]
    fn kernel_of_three_monomials() {
        let r = ring3();
        let m = PolyMatrix::new(1, 3, vec![p(&r, "x^2"), p(&r, "x*y"), p(&r, "x*z")]).unwrap();
        let ker = kernel(&r, &m).unwrap();
        let expect = [
            me(&r, &["y", "-x", "0"]),
            me(&r, &["z", "0", "-x"]),
            me(&r, &["0", "z", "-y"]),
        ];
        assert_eq!(ker.generators().len(), 3);
        for e in &expect {
            assert!(module_reduces_to_zero(&r, e, &ker));
        }
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let r = ring3();
        let mut m = PolyMatrix::zero(2, 2);
        m.set(0, 0, r.one());
        m.set(1, 1, r.one());
        let ker = kernel(&r, &m).unwrap();
        assert!(ker.is_zero_module());
    }

    #[test]
    fn quotient_examples() {
        let r = ring3();
        let i = buchberger(&r, &[p(&r, "x^2"), p(&r, "x*y"), p(&r, "x*z")]).unwrap();
        let q = ideal_quotient(&r, &i, &[p(&r, "x"), p(&r, "y"), p(&r, "z")]).unwrap();
        assert_eq!(gb_strings(&r, &q), vec!["x"]);

        let q_by_one = ideal_quotient(&r, &i, &[r.one()]).unwrap();
        assert_eq!(q_by_one, i);

        let i2 = buchberger(&r, &[p(&r, "x^2")]).unwrap();
        let q2 = ideal_quotient(&r, &i2, &[p(&r, "x")]).unwrap();
        assert_eq!(gb_strings(&r, &q2), vec!["x"]);
    }

    #[test]
    fn quotient_generators_multiply_back() {
        let r = ring3();
        let i = buchberger(&r, &[p(&r, "x^2 - y*z"), p(&r, "x*y"), p(&r, "z^3")]).unwrap();
        let j = [p(&r, "x"), p(&r, "y^2")];
        let q = ideal_quotient(&r, &i, &j).unwrap();
        for qg in q.generators() {
            for g in &j {
                let prod = r.mul(qg, g).unwrap();
                assert!(reduces_to_zero(&r, &prod, &i));
            }
        }
    }

    #[test]
    fn colength_counts_standard_monomials() {
        let r = ring3();
        let j = buchberger(
            &r,
            &[p(&r, "x^2"), p(&r, "x*y"), p(&r, "x*z"), p(&r, "y"), p(&r, "z")],
        )
        .unwrap();
        assert_eq!(ideal_colength(&r, &j), Length::Finite(2));

        let inf = buchberger(&r, &[p(&r, "x^2"), p(&r, "y")]).unwrap();
        assert_eq!(ideal_colength(&r, &inf), Length::Infinite);
    }
}
