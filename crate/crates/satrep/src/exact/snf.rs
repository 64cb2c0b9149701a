//! Smith normal form over the integers.

use num_traits::{Signed, Zero};

use super::matrix::round_div;
use super::IntMatrix;

/// Unimodular decomposition `D = U * A * V` with `D` diagonal,
/// nonnegative, and each diagonal entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// Diagonal entries `d_1, ..., d_rank` (the nonzero invariant factors).
    pub fn invariant_factors(&self) -> Vec<super::Int> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Computes the Smith normal form of `a` by row/column reduction.
/// Total: every integer matrix has one. Pivots are chosen with minimal
/// absolute value to keep intermediate entries small.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    assert!(rows > 0 && cols > 0, "matrix must be nonempty");
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    let mut k = 0;
    while k < steps {
        let Some((pi, pj)) = min_abs_pivot(&d, k) else {
            break; // remaining submatrix is zero
        };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // Clear row k and column k; the pivot shrinks every pass.
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -round_div(&d[(i, k)], &d[(k, k)]);
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !d[(i, k)].is_zero() {
                    // Remainder became the smaller pivot; bring it up.
                    d.swap_rows(k, i);
                    u.swap_rows(k, i);
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -round_div(&d[(k, j)], &d[(k, k)]);
                d.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !d[(k, j)].is_zero() {
                    d.swap_cols(k, j);
                    v.swap_cols(k, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }

        // Divisibility: the pivot must divide every remaining entry.
        if let Some((i, _)) = non_divisible_entry(&d, k) {
            let one = super::Int::from(1);
            d.add_row_multiple(k, i, &one);
            u.add_row_multiple(k, i, &one);
            continue; // redo step k with the fresh row
        }

        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }

    let rank = (0..steps).take_while(|&i| !d[(i, i)].is_zero()).count();
    SmithDecomposition { u, d, v, rank }
}

fn min_abs_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            if d[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if d[b].abs() <= d[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn non_divisible_entry(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    for i in k + 1..d.rows() {
        for j in k + 1..d.cols() {
            if !num_integer::Integer::is_multiple_of(&d[(i, j)], &d[(k, k)]) {
                return Some((i, j));
            }
        }
    }
    None
}
