//! Hive polytopes for Littlewood-Richardson coefficients.
//!
//! A hive of side n is a triangular array h(i,j), rows i = 0..n with
//! entries j = 0..i, drawn apex up. The boundary is pinned by the inputs:
//!
//!   left edge   h(i,0) = alpha_1 + ... + alpha_i
//!   bottom edge h(n,j) = |alpha| + beta_1 + ... + beta_j
//!   right edge  h(i,i) = lambda_1 + ... + lambda_i
//!
//! (corners agree since |alpha| + |beta| = |lambda|). Interior entries are
//! the polytope coordinates, constrained by the rhombus inequalities: for
//! every unit rhombus, the sum over the two acute corners is at most the
//! sum over the two obtuse corners (the short diagonal). In row/position
//! coordinates the three orientations read
//!
//!   h(i,j+1) + h(i+1,j)   <=  h(i,j)   + h(i+1,j+1)
//!   h(i,j-1) + h(i+1,j+1) <=  h(i,j)   + h(i+1,j)
//!   h(i,j)   + h(i+2,j+1) <=  h(i+1,j) + h(i+1,j+1)
//!
//! The number of integer points equals c_{alpha,beta}^lambda; with
//! rational boundary data the polytope tests membership of the triple in
//! the LR cone.

use num_traits::Zero;

use crate::exact::{Rat, rat_int};
use crate::polytope::{HPolytope, HRow, Relation};
use crate::{Error, Result};

use super::Partition;

/// Hive polytope in the interior coordinates; side `n` must majorize all
/// three heights and the sizes must satisfy |alpha| + |beta| = |lambda|.
pub fn hive_polytope(
    alpha: &Partition,
    beta: &Partition,
    lambda: &Partition,
    n: usize,
) -> Result<HPolytope> {
    if alpha.size() + beta.size() != lambda.size() {
        return Err(Error::DimensionMismatch(format!(
            "|alpha| + |beta| = {} but |lambda| = {}",
            alpha.size() + beta.size(),
            lambda.size()
        )));
    }
    for (name, h) in [
        ("alpha", alpha.height()),
        ("beta", beta.height()),
        ("lambda", lambda.height()),
    ] {
        if h > n {
            return Err(Error::DimensionMismatch(format!(
                "{name} has height {h}, exceeding the side {n}"
            )));
        }
    }
    let to_rat = |p: &Partition| -> Vec<Rat> {
        (0..n).map(|i| rat_int(p.part(i) as i64)).collect()
    };
    hive_polytope_rational(&to_rat(alpha), &to_rat(beta), &to_rat(lambda), n)
}

/// Hive polytope over rational weight data (weakly decreasing,
/// nonnegative vectors of length `n`, sizes adding up).
pub fn hive_polytope_rational(
    alpha: &[Rat],
    beta: &[Rat],
    lambda: &[Rat],
    n: usize,
) -> Result<HPolytope> {
    for (name, w) in [("alpha", alpha), ("beta", beta), ("lambda", lambda)] {
        if w.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{name} must have {n} coordinates"
            )));
        }
        if w.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::DimensionMismatch(format!(
                "{name} is not weakly decreasing"
            )));
        }
        if w.iter().any(|v| v < &Rat::zero()) {
            return Err(Error::DimensionMismatch(format!("{name} has negative parts")));
        }
    }
    let total = |w: &[Rat]| -> Rat { w.iter().cloned().sum() };
    if total(alpha) + total(beta) != total(lambda) {
        return Err(Error::DimensionMismatch(
            "|alpha| + |beta| must equal |lambda|".into(),
        ));
    }

    let partial = |w: &[Rat], k: usize| -> Rat { w.iter().take(k).cloned().sum() };
    let alpha_total = total(alpha);

    // Interior vertices (i,j), 1 <= j <= i-1, 2 <= i <= n-1.
    let mut var_of = std::collections::HashMap::new();
    for i in 2..n {
        for j in 1..i {
            let idx = var_of.len();
            var_of.insert((i, j), idx);
        }
    }
    let dim = var_of.len();

    // Boundary value; None marks an interior (variable) vertex.
    let boundary = |i: usize, j: usize| -> Option<Rat> {
        if j == 0 {
            Some(partial(alpha, i))
        } else if i == n {
            Some(&alpha_total + partial(beta, j))
        } else if j == i {
            Some(partial(lambda, i))
        } else {
            None
        }
    };

    let mut rows: Vec<HRow> = Vec::new();
    let mut add = |plus: [(usize, usize); 2], minus: [(usize, usize); 2]| {
        let mut coeffs = vec![Rat::zero(); dim];
        let mut rhs = Rat::zero();
        for (v, sign) in plus
            .iter()
            .map(|v| (*v, 1i64))
            .chain(minus.iter().map(|v| (*v, -1i64)))
        {
            match boundary(v.0, v.1) {
                Some(c) => rhs -= c * rat_int(sign),
                None => {
                    let idx = var_of[&v];
                    coeffs[idx] += rat_int(sign);
                }
            }
        }
        rows.push(HRow {
            coeffs,
            relation: Relation::Le,
            rhs,
        });
    };

    for i in 1..n {
        for j in 0..i {
            // acute (i,j+1), (i+1,j) vs obtuse (i,j), (i+1,j+1)
            add([(i, j + 1), (i + 1, j)], [(i, j), (i + 1, j + 1)]);
        }
        for j in 1..=i {
            // acute (i,j-1), (i+1,j+1) vs obtuse (i,j), (i+1,j)
            add([(i, j - 1), (i + 1, j + 1)], [(i, j), (i + 1, j)]);
        }
    }
    for i in 0..n.saturating_sub(1) {
        for j in 0..=i {
            // acute (i,j), (i+2,j+1) vs obtuse (i+1,j), (i+1,j+1)
            add([(i, j), (i + 2, j + 1)], [(i + 1, j), (i + 1, j + 1)]);
        }
    }

    Ok(HPolytope::new(dim, rows))
}
