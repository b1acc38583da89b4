//! Dense exact linear algebra over the coefficient field: just enough
//! Gaussian elimination for graded-piece ranks and independence tests.

use crate::coeff::Coeff;

/// Rank of a dense matrix given as rows; consumes the rows.
pub fn rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        if pivot_row >= nrows {
            break;
        }
        let Some(found) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].inv();
        for r in pivot_row + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&inv);
            for c in col..ncols {
                let delta = rows[pivot_row][c].mul(&factor);
                rows[r][c] = rows[r][c].sub(&delta);
            }
        }
        pivot_row += 1;
        rank += 1;
    }
    rank
}

/// Are the `candidates` linearly independent modulo the span of `relations`?
pub fn independent_modulo(relations: Vec<Vec<Coeff>>, candidates: Vec<Vec<Coeff>>) -> bool {
    let base = rank(relations.clone());
    let k = candidates.len();
    let mut all = relations;
    all.extend(candidates);
    rank(all) == base + k
}

/// Basis of the right nullspace of the matrix given as rows, over the
/// coefficient field. Columns without a pivot yield one basis vector each.
pub fn nullspace(characteristic: u32, mut rows: Vec<Vec<Coeff>>, ncols: usize) -> Vec<Vec<Coeff>> {
    let one = Coeff::one(characteristic);
    let zero = Coeff::zero(characteristic);
    // reduced row echelon form
    let mut pivots: Vec<usize> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].inv();
        for c in 0..ncols {
            rows[pivot_row][c] = rows[pivot_row][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = rows[pivot_row][c].mul(&factor);
                    rows[r][c] = rows[r][c].sub(&delta);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[r][free].neg();
        }
        basis.push(v);
    }
    basis
}
