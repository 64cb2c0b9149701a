//! Exact two-phase simplex with Bland's rule.
//!
//! Works on the LE/EQ closure of an H-representation. Free variables are
//! split as x = u - v with u, v >= 0; every row gets a slack (LE) or is
//! kept as an equality, artificial variables complete the initial basis.
//! Bland's pivoting rule (smallest eligible index) excludes cycling, so
//! the solver terminates on every input.

use num_traits::{One, Signed, Zero};

use crate::exact::Rat;

use super::{HPolytope, Relation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    Unbounded,
    /// Optimal value and an attaining point in the original coordinates.
    Optimal { value: Rat, point: Vec<Rat> },
}

struct Tableau {
    /// m x (cols + 1), last column is the rhs.
    rows: Vec<Vec<Rat>>,
    cost: Vec<Rat>,
    basis: Vec<usize>,
    allowed: Vec<bool>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (v, p) in r.iter_mut().zip(&pivot_row) {
                *v = &*v - &f * p;
            }
        }
        if !self.cost[col].is_zero() {
            let f = self.cost[col].clone();
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                *v = &*v - &f * p;
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes the current cost row. Returns false on unboundedness.
    fn run(&mut self) -> bool {
        loop {
            // Bland: entering column = smallest index with negative reduced cost.
            let Some(col) = (0..self.cols)
                .find(|&j| self.allowed[j] && self.cost[j].is_negative())
            else {
                return true;
            };
            // Ratio test; ties broken by smallest basis variable index.
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][col].is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / &self.rows[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Maximizes `objective . x` over the closure of `p` (strict rows relaxed
/// to their closures). The objective length must equal `p.dim`.
pub fn maximize(p: &HPolytope, objective: &[Rat]) -> LpResult {
    assert_eq!(objective.len(), p.dim, "objective length must match dim");
    let dim = p.dim;
    let m = p.rows.len();
    let n_struct = 2 * dim;
    let n_slack = p
        .rows
        .iter()
        .filter(|r| r.relation != Relation::Eq)
        .count();
    let cols = n_struct + n_slack + m;

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis = vec![usize::MAX; m];
    let mut slack_idx = 0;
    for (i, row) in p.rows.iter().enumerate() {
        let mut r = vec![Rat::zero(); cols + 1];
        let negate = row.rhs.is_negative();
        for (j, a) in row.coeffs.iter().enumerate() {
            let a = if negate { -a.clone() } else { a.clone() };
            r[2 * j] = a.clone();
            r[2 * j + 1] = -a;
        }
        r[cols] = if negate { -row.rhs.clone() } else { row.rhs.clone() };
        if row.relation != Relation::Eq {
            let s = n_struct + slack_idx;
            slack_idx += 1;
            r[s] = if negate { -Rat::one() } else { Rat::one() };
            if !negate {
                basis[i] = s;
            }
        }
        rows.push(r);
    }

    // Artificial variables where no slack can start basic.
    let art_start = n_struct + n_slack;
    let mut allowed = vec![true; cols];
    let mut n_art = 0;
    for i in 0..m {
        if basis[i] == usize::MAX {
            let a = art_start + n_art;
            n_art += 1;
            rows[i][a] = Rat::one();
            basis[i] = a;
        }
    }
    for j in art_start + n_art..cols {
        allowed[j] = false;
    }

    let mut t = Tableau {
        rows,
        cost: vec![Rat::zero(); cols + 1],
        basis,
        allowed,
        cols,
    };

    // Phase 1: minimize the sum of artificials. Reduced costs start as
    // minus the sum of rows holding an artificial basic variable.
    if n_art > 0 {
        for i in 0..m {
            if t.basis[i] >= art_start {
                let row = t.rows[i].clone();
                for (c, v) in t.cost.iter_mut().zip(&row) {
                    *c = &*c - v;
                }
            }
        }
        for j in art_start..art_start + n_art {
            t.cost[j] = Rat::zero();
        }
        let bounded = t.run();
        debug_assert!(bounded, "phase 1 objective is bounded below by zero");
        if t.cost[t.cols].is_negative() {
            return LpResult::Infeasible;
        }
        // Drive artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for j in art_start..art_start + n_art {
            t.allowed[j] = false;
        }
    }

    // Phase 2: minimize -objective over the split variables.
    let mut cost = vec![Rat::zero(); cols + 1];
    for (j, c) in objective.iter().enumerate() {
        cost[2 * j] = -c.clone();
        cost[2 * j + 1] = c.clone();
    }
    // Reduce against the current basis.
    for (i, &b) in t.basis.iter().enumerate() {
        if cost[b].is_zero() {
            continue;
        }
        let f = cost[b].clone();
        let row = t.rows[i].clone();
        for (c, v) in cost.iter_mut().zip(&row) {
            *c = &*c - &f * v;
        }
    }
    t.cost = cost;
    if !t.run() {
        return LpResult::Unbounded;
    }

    let mut split = vec![Rat::zero(); 2 * dim];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < 2 * dim {
            split[b] = t.rhs(i).clone();
        }
    }
    let point: Vec<Rat> = (0..dim)
        .map(|j| &split[2 * j] - &split[2 * j + 1])
        .collect();
    let value = objective
        .iter()
        .zip(&point)
        .map(|(c, x)| c * x)
        .sum();
    LpResult::Optimal { value, point }
}

/// Minimizes `objective . x` over the closure of `p`.
pub fn minimize(p: &HPolytope, objective: &[Rat]) -> LpResult {
    let negated: Vec<Rat> = objective.iter().map(|c| -c.clone()).collect();
    match maximize(p, &negated) {
        LpResult::Optimal { value, point } => LpResult::Optimal {
            value: -value,
            point,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::polytope::HPolytope;

    fn unit_square() -> HPolytope {
        HPolytope::from_i64_rows(
            2,
            &[
                (vec![1, 0], Relation::Le, 1),
                (vec![-1, 0], Relation::Le, 0),
                (vec![0, 1], Relation::Le, 1),
                (vec![0, -1], Relation::Le, 0),
            ],
        )
    }

    #[test]
    fn maximize_on_square() {
        let p = unit_square();
        match maximize(&p, &[rat_int(1), rat_int(1)]) {
            LpResult::Optimal { value, point } => {
                assert_eq!(value, rat_int(2));
                assert_eq!(point, vec![rat_int(1), rat_int(1)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_system() {
        let p = HPolytope::from_i64_rows(
            1,
            &[(vec![1], Relation::Le, 0), (vec![-1], Relation::Le, -1)],
        );
        assert_eq!(maximize(&p, &[rat_int(1)]), LpResult::Infeasible);
    }

    #[test]
    fn unbounded_direction() {
        let p = HPolytope::from_i64_rows(1, &[(vec![-1], Relation::Le, 0)]);
        assert_eq!(maximize(&p, &[rat_int(1)]), LpResult::Unbounded);
        match minimize(&p, &[rat_int(1)]) {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat_int(0)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn equality_with_fractional_solution() {
        // 2x = 1 pins x = 1/2.
        let p = HPolytope::from_i64_rows(1, &[(vec![2], Relation::Eq, 1)]);
        match maximize(&p, &[rat_int(1)]) {
            LpResult::Optimal { value, point } => {
                assert_eq!(value, rat(1, 2));
                assert_eq!(point, vec![rat(1, 2)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn negative_rhs_needs_artificials() {
        // x >= 2 written as -x <= -2, minimize x.
        let p = HPolytope::from_i64_rows(1, &[(vec![-1], Relation::Le, -2)]);
        match minimize(&p, &[rat_int(1)]) {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat_int(2)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let p = HPolytope::from_i64_rows(
            2,
            &[
                (vec![1, 1], Relation::Eq, 1),
                (vec![2, 2], Relation::Eq, 2),
                (vec![1, 0], Relation::Le, 1),
                (vec![-1, 0], Relation::Le, 1),
            ],
        );
        match maximize(&p, &[rat_int(1), rat_int(0)]) {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat_int(1)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }
}
