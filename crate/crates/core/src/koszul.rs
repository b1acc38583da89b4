//! Koszul complexes over a presented quotient ring, homology-module
//! presentations, finite-length computation, annihilator membership, and a
//! brute-force graded oracle that recomputes homology dimensions degree by
//! degree with plain linear algebra.
//!
//! Homology over `R = A/I` is computed by lifting to `A`: the cycles of
//! `d_i` over `R` are the first-block projection of the kernel of
//! `[d_i | g_t e_r]`, and the boundaries are `im d_{i+1} + I K_i`.

use std::collections::HashMap;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::gb::{
    kernel, module_buchberger, module_colength, module_normal_form_raw, poly_to_mod, Length,
    ModElement, ModuleGroebnerBasis, PolyMatrix,
};
use crate::linalg;
use crate::monideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingPresentation;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for t in 1..=k {
        acc = acc * (n - k + t) / t;
    }
    acc
}

/// All k-subsets of 0..n in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<u8> = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v as u8);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// The Koszul complex `K_•(f; R)` of a sequence, with differentials built
/// over the ambient polynomial ring and `d ∘ d = 0` checked exactly at
/// construction. Exterior basis elements are ordered lexicographically on
/// their index sets; the differential uses
/// `d(e_{j1..ji}) = sum_k (-1)^(k+1) f_{jk} e_{j1..^jk..ji}`.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    seq: Vec<Polynomial>,
    diffs: Vec<PolyMatrix>, // diffs[i-1] = d_i : K_i -> K_{i-1}
}

impl KoszulComplex {
    pub fn build(presentation: &RingPresentation, seq: &[Polynomial]) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::EmptySequence);
        }
        let ring = presentation.ring();
        for f in seq {
            ring.check_poly(f)?;
            if f.has_constant_term() {
                return Err(Error::NotInMaximalIdeal);
            }
        }
        let n = seq.len();
        let mut diffs = Vec::with_capacity(n);
        for i in 1..=n {
            let source = subsets(n, i);
            let target = subsets(n, i - 1);
            let target_index: HashMap<&[u8], usize> = target
                .iter()
                .enumerate()
                .map(|(idx, s)| (s.as_slice(), idx))
                .collect();
            let mut m = PolyMatrix::zero(target.len(), source.len());
            for (col, subset) in source.iter().enumerate() {
                for (k, &j) in subset.iter().enumerate() {
                    let mut rest = subset.clone();
                    rest.remove(k);
                    let row = target_index[rest.as_slice()];
                    let entry = if k % 2 == 0 {
                        seq[j as usize].clone()
                    } else {
                        ring.neg(&seq[j as usize])
                    };
                    m.set(row, col, entry);
                }
            }
            diffs.push(m);
        }
        for i in 1..n {
            let prod = diffs[i - 1].mul(ring, &diffs[i])?;
            for r in 0..prod.rows() {
                for c in 0..prod.cols() {
                    assert!(
                        prod.entry(r, c).is_zero(),
                        "Koszul differentials do not compose to zero"
                    );
                }
            }
        }
        Ok(KoszulComplex {
            seq: seq.to_vec(),
            diffs,
        })
    }

    pub fn sequence(&self) -> &[Polynomial] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        binomial(self.seq.len(), i)
    }

    /// `d_i : K_i -> K_{i-1}` for `1 <= i <= n`.
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        &self.diffs[i - 1]
    }
}

/// `H_i` as a subquotient: cycles spanning `ker d_i` over `R`, the boundary
/// submodule `im d_{i+1} + I K_i`, and the subset of cycle generators with
/// nonzero class (the junk-free generating set actually presenting `H_i`).
#[derive(Debug, Clone)]
pub struct HomologyModule {
    index: usize,
    rank: usize,
    /// Weighted degree of each exterior basis element of `K_i`; absent when
    /// the sequence is not homogeneous.
    ambient_twists: Option<Vec<u64>>,
    cycle_gens: Vec<ModElement>,
    class_gens: Vec<ModElement>,
    boundary_gb: ModuleGroebnerBasis,
}

impl HomologyModule {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn cycle_generators(&self) -> &[ModElement] {
        &self.cycle_gens
    }

    pub fn class_generators(&self) -> &[ModElement] {
        &self.class_gens
    }

    pub fn boundary_basis(&self) -> &ModuleGroebnerBasis {
        &self.boundary_gb
    }

    /// Nonzero-ness is decided by membership of cycles in boundaries,
    /// never by length.
    pub fn is_zero(&self) -> bool {
        self.class_gens.is_empty()
    }
}

/// Kernel of `d_i` over `R`, lifted to `A` through the augmented matrix.
fn cycles_over_quotient(
    presentation: &RingPresentation,
    complex: &KoszulComplex,
    i: usize,
) -> Result<Vec<ModElement>> {
    let ring = presentation.ring();
    let d = complex.differential(i);
    let ideal = presentation.ideal_gens();
    let rows = d.rows();
    let aug_cols = d.cols() + ideal.len() * rows;
    let mut entries = Vec::with_capacity(rows * aug_cols);
    for r in 0..rows {
        for c in 0..d.cols() {
            entries.push(d.entry(r, c).clone());
        }
        for g in ideal {
            for target in 0..rows {
                entries.push(if target == r { g.clone() } else { ring.zero() });
            }
        }
    }
    let aug = PolyMatrix::new(rows, aug_cols, entries)?;
    let ker = kernel(ring, &aug)?;
    let first_block = d.cols() as u32;
    let mut out: Vec<ModElement> = Vec::new();
    for v in ker.generators() {
        let projected = ModElement::from_components(
            ring,
            &(0..first_block).map(|c| v.component(c)).collect::<Vec<_>>(),
        );
        if !projected.is_zero() && !out.contains(&projected) {
            out.push(projected);
        }
    }
    Ok(out)
}

fn boundary_generators(
    presentation: &RingPresentation,
    complex: &KoszulComplex,
    i: usize,
) -> Vec<ModElement> {
    let ring = presentation.ring();
    let rank = complex.rank(i);
    let mut gens: Vec<ModElement> = Vec::new();
    if i < complex.len() {
        let d_next = complex.differential(i + 1);
        for c in 0..d_next.cols() {
            gens.push(d_next.column_element(ring, c));
        }
    }
    for g in presentation.ideal_gens() {
        for comp in 0..rank {
            gens.push(poly_to_mod(g, comp as u32));
        }
    }
    gens
}

/// Compute `H_i(K; R)` as a subquotient presentation.
pub fn homology(
    presentation: &RingPresentation,
    complex: &KoszulComplex,
    i: usize,
) -> Result<HomologyModule> {
    let n = complex.len();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let ring = presentation.ring();
    let rank = complex.rank(i);
    let seq_degs: Option<Vec<u64>> = complex
        .seq
        .iter()
        .map(|f| ring.homogeneous_degree(f).ok())
        .collect();
    let ambient_twists: Option<Vec<u64>> = seq_degs.map(|degs| {
        subsets(complex.len(), i)
            .iter()
            .map(|s| s.iter().map(|&j| degs[j as usize]).sum())
            .collect()
    });
    let cycle_gens = if i == 0 {
        vec![poly_to_mod(&ring.one(), 0)]
    } else {
        cycles_over_quotient(presentation, complex, i)?
    };
    let boundary_gb = module_buchberger(ring, &boundary_generators(presentation, complex, i), rank)?;
    let mut class_gens: Vec<ModElement> = Vec::new();
    let mut seen_forms: Vec<ModElement> = Vec::new();
    for c in &cycle_gens {
        let nf = module_normal_form_raw(ring, c, &boundary_gb);
        if !nf.is_zero() && !seen_forms.contains(&nf) {
            seen_forms.push(nf);
            class_gens.push(c.clone());
        }
    }
    Ok(HomologyModule {
        index: i,
        rank,
        ambient_twists,
        cycle_gens,
        class_gens,
        boundary_gb,
    })
}

/// Relations presenting `H_i` as a cokernel on its class generators:
/// `{u : Z u ∈ boundaries}`, including the syzygies of the generators.
pub fn relation_basis(
    presentation: &RingPresentation,
    h: &HomologyModule,
) -> Result<ModuleGroebnerBasis> {
    let ring = presentation.ring();
    let t = h.class_gens.len();
    let b = h.boundary_gb.generators();
    let rows = h.rank;
    let cols = t + b.len();
    let mut m = PolyMatrix::zero(rows, cols);
    for (j, z) in h.class_gens.iter().enumerate() {
        for r in 0..rows {
            m.set(r, j, z.component(r as u32));
        }
    }
    for (j, g) in b.iter().enumerate() {
        for r in 0..rows {
            m.set(r, t + j, g.component(r as u32));
        }
    }
    let ker = kernel(ring, &m)?;
    let rel_gens: Vec<ModElement> = ker
        .generators()
        .iter()
        .map(|v| {
            ModElement::from_components(
                ring,
                &(0..t as u32).map(|c| v.component(c)).collect::<Vec<_>>(),
            )
        })
        .filter(|e| !e.is_zero())
        .collect();
    module_buchberger(ring, &rel_gens, t)
}

/// Standard-monomial count of the cokernel presentation; `Infinite` when
/// the presentation does not have finite colength.
pub fn homology_length(presentation: &RingPresentation, h: &HomologyModule) -> Result<Length> {
    if h.class_gens.is_empty() {
        return Ok(Length::Finite(0));
    }
    let rel = relation_basis(presentation, h)?;
    Ok(module_colength(
        presentation.ring(),
        &rel,
        h.class_gens.len(),
    ))
}

/// Does `z` annihilate `H_i`? True iff `z c` lies in the boundary submodule
/// for every class generator `c`.
pub fn annihilates(
    presentation: &RingPresentation,
    z: &Polynomial,
    h: &HomologyModule,
) -> Result<bool> {
    let ring = presentation.ring();
    ring.check_poly(z)?;
    for c in &h.class_gens {
        let scaled = crate::gb::scale_element(ring, c, z);
        if !module_normal_form_raw(ring, &scaled, &h.boundary_gb).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Homogeneous weighted degree of a module element under component twists.
fn element_degree(
    presentation: &RingPresentation,
    twists: &[u64],
    v: &ModElement,
) -> Option<u64> {
    let g = presentation.ring().grading();
    let mut deg: Option<u64> = None;
    for t in v.terms() {
        let d = twists[t.comp as usize] + g.degree(&t.mono);
        match deg {
            None => deg = Some(d),
            Some(prev) if prev != d => return None,
            _ => {}
        }
    }
    deg
}

/// Exact top weighted degree in which a finite-length `H_i` can be nonzero,
/// read off the relation presentation; None when the length is infinite or
/// the grading information is unavailable.
pub fn homology_top_degree(
    presentation: &RingPresentation,
    h: &HomologyModule,
) -> Result<Option<u64>> {
    if h.class_gens.is_empty() {
        return Ok(Some(0));
    }
    let Some(twists) = &h.ambient_twists else {
        return Ok(None);
    };
    let mut class_degrees = Vec::with_capacity(h.class_gens.len());
    for c in &h.class_gens {
        match element_degree(presentation, twists, c) {
            Some(d) => class_degrees.push(d),
            None => return Ok(None),
        }
    }
    let rel = relation_basis(presentation, h)?;
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); h.class_gens.len()];
    for (c, m) in rel.leading_terms() {
        per_comp[c as usize].push(m);
    }
    let g = presentation.ring().grading();
    let mut top = 0u64;
    for (c, lts) in per_comp.iter().enumerate() {
        match monideal::max_standard_degree(presentation.ring().arity(), lts, g) {
            Some(d) => top = top.max(class_degrees[c] + d),
            None => return Ok(None),
        }
    }
    Ok(Some(top))
}

/// Cross-check the Groebner route against the graded oracle: lengths must
/// agree exactly. None when the module has infinite length (nothing to
/// compare); false on any disagreement.
pub fn oracle_confirms_length(
    presentation: &RingPresentation,
    seq: &[Polynomial],
    i: usize,
    h: &HomologyModule,
) -> Result<Option<bool>> {
    let len = match homology_length(presentation, h)? {
        Length::Infinite => return Ok(None),
        Length::Finite(l) => l,
    };
    let Some(top) = homology_top_degree(presentation, h)? else {
        return Ok(None);
    };
    match graded_oracle(presentation, seq, i, top + 1) {
        Ok(rows) => Ok(Some(oracle_total(&rows) == len)),
        Err(Error::BoundTooSmall { .. }) => Ok(Some(false)),
        Err(e) => Err(e),
    }
}

/// One row of the graded oracle table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleRow {
    pub degree: u64,
    pub dim_kernel: usize,
    pub dim_image: usize,
    pub dim_homology: usize,
}

/// Brute-force graded pieces of `K_{i+1} -> K_i -> K_{i-1}` over the
/// coefficient field in every weighted degree up to the bound; ranks give
/// `dim H_i` per degree. Fails with `BoundTooSmall` when the piece at the
/// bound itself is nonzero, since the tail may continue.
pub fn graded_oracle(
    presentation: &RingPresentation,
    seq: &[Polynomial],
    i: usize,
    bound: u64,
) -> Result<Vec<OracleRow>> {
    let ring = presentation.ring();
    let n = seq.len();
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let degs: Vec<u64> = seq
        .iter()
        .map(|f| ring.homogeneous_degree(f))
        .collect::<Result<Vec<_>>>()?;
    let lts = presentation.groebner_basis().leading_monomials();
    let arity = ring.arity();
    let ch = ring.characteristic();

    let mut basis_cache: HashMap<u64, Vec<Monomial>> = HashMap::new();
    let mut rows = Vec::new();
    for degree in 0..=bound {
        let mut piece = |level: usize| -> Vec<(usize, Monomial)> {
            // pairs (subset index, standard monomial) of total twisted degree
            let subs = subsets(n, level);
            let mut out = Vec::new();
            for (si, s) in subs.iter().enumerate() {
                let twist: u64 = s.iter().map(|&j| degs[j as usize]).sum();
                if twist > degree {
                    continue;
                }
                let mons = basis_cache
                    .entry(degree - twist)
                    .or_insert_with(|| {
                        monideal::standard_monomials_of_degree(
                            arity,
                            &lts,
                            ring.grading(),
                            degree - twist,
                        )
                    })
                    .clone();
                for m in mons {
                    out.push((si, m));
                }
            }
            out
        };
        let target = piece(i.saturating_sub(1));
        let source = piece(i);
        let above = if i < n { piece(i + 1) } else { Vec::new() };

        let rank_of = |level: usize,
                       src: &[(usize, Monomial)],
                       tgt: &[(usize, Monomial)]|
         -> usize {
            if level == 0 || src.is_empty() || tgt.is_empty() {
                return 0;
            }
            let tgt_index: HashMap<(usize, &Monomial), usize> = tgt
                .iter()
                .enumerate()
                .map(|(idx, (si, m))| ((*si, m), idx))
                .collect();
            let subs = subsets(n, level);
            let mut mat: Vec<Vec<Coeff>> = Vec::with_capacity(src.len());
            for (si, u) in src {
                let mut row = vec![Coeff::zero(ch); tgt.len()];
                let subset = &subs[*si];
                let low = subsets(n, level - 1);
                let low_index: HashMap<&[u8], usize> = low
                    .iter()
                    .enumerate()
                    .map(|(idx, s)| (s.as_slice(), idx))
                    .collect();
                for (k, &j) in subset.iter().enumerate() {
                    let mut rest = subset.clone();
                    rest.remove(k);
                    let ti = low_index[rest.as_slice()];
                    let mut prod = ring.mul_term(&seq[j as usize], u, &Coeff::one(ch));
                    if k % 2 == 1 {
                        prod = ring.neg(&prod);
                    }
                    let reduced = presentation.nf(&prod);
                    for (m, c) in reduced.terms() {
                        let col = tgt_index[&(ti, m)];
                        row[col] = row[col].add(c);
                    }
                }
                mat.push(row);
            }
            linalg::rank(mat)
        };

        let rank_i = rank_of(i, &source, &target);
        let rank_above = rank_of(i + 1, &above, &source);
        let dim_kernel = source.len() - rank_i;
        assert!(dim_kernel >= rank_above, "image exceeds kernel in a graded piece");
        rows.push(OracleRow {
            degree,
            dim_kernel,
            dim_image: rank_above,
            dim_homology: dim_kernel - rank_above,
        });
    }
    if let Some(last) = rows.last() {
        if last.dim_homology != 0 {
            return Err(Error::BoundTooSmall { degree: bound });
        }
    }
    Ok(rows)
}

/// Total of the homology column.
pub fn oracle_total(rows: &[OracleRow]) -> u64 {
    rows.iter().map(|r| r.dim_homology as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingPresentation;

    fn poly(r: &RingPresentation, s: &str) -> Polynomial {
        parse_poly(r.ring(), s).unwrap()
    }

    fn monomial_quotient() -> RingPresentation {
        RingPresentation::parse(0, &["x", "y", "z"], &[1, 1, 1], &["x^2", "x*y", "x*z"]).unwrap()
    }

    #[test]
    fn differential_conventions() {
        let free = RingPresentation::parse(0, &["x", "y"], &[1, 1], &[]).unwrap();
        let k = KoszulComplex::build(&free, &[poly(&free, "x"), poly(&free, "y")]).unwrap();
        // d1 = [f1 f2]
        let d1 = k.differential(1);
        assert_eq!((d1.rows(), d1.cols()), (1, 2));
        assert_eq!(d1.entry(0, 0), &poly(&free, "x"));
        assert_eq!(d1.entry(0, 1), &poly(&free, "y"));
        // d2 column = (-f2, f1)
        let d2 = k.differential(2);
        assert_eq!((d2.rows(), d2.cols()), (2, 1));
        assert_eq!(d2.entry(0, 0), &poly(&free, "-y"));
        assert_eq!(d2.entry(1, 0), &poly(&free, "x"));
    }

    #[test]
    fn three_term_top_differential() {
        let free = RingPresentation::parse(0, &["x", "y", "z"], &[1, 1, 1], &[]).unwrap();
        let f = [poly(&free, "x"), poly(&free, "y"), poly(&free, "z")];
        let k = KoszulComplex::build(&free, &f).unwrap();
        // basis of K_2 lex ascending: e12, e13, e23; top column = (f3, -f2, f1)
        let d3 = k.differential(3);
        assert_eq!((d3.rows(), d3.cols()), (3, 1));
        assert_eq!(d3.entry(0, 0), &poly(&free, "z"));
        assert_eq!(d3.entry(1, 0), &poly(&free, "-y"));
        assert_eq!(d3.entry(2, 0), &poly(&free, "x"));
    }

    #[test]
    fn binomial_ranks() {
        let free = RingPresentation::parse(
            0,
            &["a", "b", "c", "d", "e", "f"],
            &[1; 6],
            &[],
        )
        .unwrap();
        let seq: Vec<Polynomial> = (0..6).map(|i| free.ring().var_poly(i)).collect();
        let k = KoszulComplex::build(&free, &seq).unwrap();
        let ranks: Vec<usize> = (0..=6).map(|i| k.rank(i)).collect();
        assert_eq!(ranks, vec![1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn regular_sequence_has_no_higher_homology() {
        let free = RingPresentation::parse(0, &["x", "y"], &[1, 1], &[]).unwrap();
        let k = KoszulComplex::build(&free, &[poly(&free, "x"), poly(&free, "y")]).unwrap();
        for i in 1..=2 {
            let h = homology(&free, &k, i).unwrap();
            assert!(h.is_zero(), "H_{} should vanish", i);
            assert_eq!(homology_length(&free, &h).unwrap(), Length::Finite(0));
        }
    }

    #[test]
    fn top_homology_is_the_annihilator() {
        // H_2((y,z); k[x,y,z]/(x^2,xy,xz)) = (0 : (y,z)) = (x), length 1
        let r = monomial_quotient();
        let seq = [poly(&r, "y"), poly(&r, "z")];
        let k = KoszulComplex::build(&r, &seq).unwrap();
        let h2 = homology(&r, &k, 2).unwrap();
        assert!(!h2.is_zero());
        assert_eq!(homology_length(&r, &h2).unwrap(), Length::Finite(1));

        // cross-computed via the colon ideal (I : (y,z)) / I
        let colon = crate::gb::ideal_quotient(
            r.ring(),
            r.groebner_basis(),
            &[poly(&r, "y"), poly(&r, "z")],
        )
        .unwrap();
        let survivors: Vec<Polynomial> = colon
            .generators()
            .iter()
            .map(|q| r.nf(q))
            .filter(|p| !p.is_zero())
            .collect();
        assert_eq!(survivors, vec![poly(&r, "x")]);

        let h1 = homology(&r, &k, 1).unwrap();
        assert_eq!(homology_length(&r, &h1).unwrap(), Length::Finite(2));

        let h0 = homology(&r, &k, 0).unwrap();
        assert_eq!(homology_length(&r, &h0).unwrap(), Length::Finite(2));
    }

    #[test]
    fn annihilation_examples() {
        let r = monomial_quotient();
        let seq = [poly(&r, "y"), poly(&r, "z")];
        let k = KoszulComplex::build(&r, &seq).unwrap();
        let h2 = homology(&r, &k, 2).unwrap();
        assert!(annihilates(&r, &poly(&r, "x"), &h2).unwrap());
        assert!(!annihilates(&r, &r.ring().one(), &h2).unwrap());

        let free = RingPresentation::parse(0, &["x", "y"], &[1, 1], &[]).unwrap();
        let kf = KoszulComplex::build(&free, &[poly(&free, "x"), poly(&free, "y")]).unwrap();
        let h1 = homology(&free, &kf, 1).unwrap();
        assert!(annihilates(&free, &poly(&free, "x + y"), &h1).unwrap());
    }

    #[test]
    fn oracle_matches_groebner_route() {
        let r = monomial_quotient();
        let seq = [poly(&r, "y"), poly(&r, "z")];
        let k = KoszulComplex::build(&r, &seq).unwrap();
        for i in 0..=2usize {
            let h = homology(&r, &k, i).unwrap();
            let len = homology_length(&r, &h).unwrap().finite().unwrap();
            let rows = graded_oracle(&r, &seq, i, 10).unwrap();
            assert_eq!(oracle_total(&rows), len, "index {}", i);
        }
    }

    #[test]
    fn oracle_regular_sequence_rows_vanish() {
        let free = RingPresentation::parse(0, &["x", "y"], &[1, 1], &[]).unwrap();
        let seq = [poly(&free, "x"), poly(&free, "y")];
        for i in 1..=2usize {
            let rows = graded_oracle(&free, &seq, i, 6).unwrap();
            assert!(rows.iter().all(|r| r.dim_homology == 0));
        }
        // H_0 = k: total 1
        let rows0 = graded_oracle(&free, &seq, 0, 6).unwrap();
        assert_eq!(oracle_total(&rows0), 1);
    }

    #[test]
    fn oracle_bound_too_small() {
        // H_0 of (x^2, y) on k[x,y] has a class in degree 1; bound 0 is too small
        let free = RingPresentation::parse(0, &["x", "y"], &[1, 1], &[]).unwrap();
        let seq = [poly(&free, "x^2"), poly(&free, "y")];
        assert!(matches!(
            graded_oracle(&free, &seq, 0, 0),
            Err(Error::BoundTooSmall { .. })
        ));
    }

    #[test]
    fn homology_index_range() {
        let r = monomial_quotient();
        let seq = [poly(&r, "y"), poly(&r, "z")];
        let k = KoszulComplex::build(&r, &seq).unwrap();
        assert!(matches!(
            homology(&r, &k, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            KoszulComplex::build(&r, &[]),
            Err(Error::EmptySequence)
        ));
        assert!(matches!(
            KoszulComplex::build(&r, &[r.ring().one()]),
            Err(Error::NotInMaximalIdeal)
        ));
    }
}
