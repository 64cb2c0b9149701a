//! Rational polytopes in H-representation.
//!
//! A polytope is a finite list of rows `a . x REL b` with `REL` one of
//! `<=`, `<`, `=`. Everything an Ehrhart computation needs lives here:
//! membership, dilation, exact emptiness, implicit equalities (the affine
//! span), bounding boxes, and exhaustive lattice-point enumeration.

mod simplex;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{format_rat, parse_rat, Int, IntMatrix, Rat};
use crate::{Error, Result};

pub use simplex::{maximize, minimize, LpResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRow {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    pub dim: usize,
    pub rows: Vec<HRow>,
}

/// Integerized implicit-equality system `C x = d` cutting out the affine
/// span of a polytope. Rows are primitive: the gcd of each row's entries
/// together with its rhs is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpan {
    pub c: IntMatrix,
    pub d: Vec<Int>,
}

impl AffineSpan {
    pub fn is_full_dimensional(&self) -> bool {
        self.c.rows() == 0
    }
}

impl HPolytope {
    pub fn new(dim: usize, rows: Vec<HRow>) -> Self {
        for r in &rows {
            assert_eq!(r.coeffs.len(), dim, "row length must equal dim");
        }
        HPolytope { dim, rows }
    }

    pub fn from_i64_rows(dim: usize, rows: &[(Vec<i64>, Relation, i64)]) -> Self {
        HPolytope::new(
            dim,
            rows.iter()
                .map(|(a, rel, b)| HRow {
                    coeffs: a.iter().map(|&v| crate::exact::rat_int(v)).collect(),
                    relation: *rel,
                    rhs: crate::exact::rat_int(*b),
                })
                .collect(),
        )
    }

    /// Membership under the exact relation of each row.
    pub fn contains(&self, x: &[Rat]) -> bool {
        assert_eq!(x.len(), self.dim, "point length must equal dim");
        self.rows.iter().all(|row| {
            let lhs: Rat = row.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
            match row.relation {
                Relation::Le => lhs <= row.rhs,
                Relation::Lt => lhs < row.rhs,
                Relation::Eq => lhs == row.rhs,
            }
        })
    }

    pub fn contains_ints(&self, x: &[Int]) -> bool {
        let pt: Vec<Rat> = x.iter().map(|v| Rat::from_integer(v.clone())).collect();
        self.contains(&pt)
    }

    /// The dilation nP: every rhs multiplied by n, relations preserved.
    pub fn dilate(&self, n: u64) -> HPolytope {
        assert!(n >= 1, "dilation factor must be positive");
        let factor = crate::exact::rat_int(n as i64);
        HPolytope {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| HRow {
                    coeffs: r.coeffs.clone(),
                    relation: r.relation,
                    rhs: &r.rhs * &factor,
                })
                .collect(),
        }
    }

    /// Emptiness of the polytope as a set of rational points.
    ///
    /// The LE/EQ closure is solved by exact simplex; a strict row then
    /// makes the set empty exactly when its slack maximum over the closure
    /// is zero (the row would be tight everywhere, so no point satisfies
    /// it strictly; when every strict row has positive maximal slack, a
    /// convex combination of the witnesses satisfies all of them at once).
    pub fn is_empty(&self) -> bool {
        let zero_obj = vec![Rat::zero(); self.dim];
        match maximize(self, &zero_obj) {
            LpResult::Infeasible => return true,
            LpResult::Unbounded => unreachable!("zero objective is never unbounded"),
            LpResult::Optimal { .. } => {}
        }
        for row in &self.rows {
            if row.relation != Relation::Lt {
                continue;
            }
            let neg: Vec<Rat> = row.coeffs.iter().map(|a| -a.clone()).collect();
            match maximize(self, &neg) {
                LpResult::Unbounded => {}
                LpResult::Optimal { value, .. } => {
                    // max slack = rhs + max(-a.x)
                    if (&row.rhs + value).is_zero() {
                        return true;
                    }
                }
                LpResult::Infeasible => unreachable!("closure known nonempty"),
            }
        }
        false
    }

    /// Integerized implicit-equality system for span(P).
    ///
    /// EQ rows enter directly; an LE row enters when its slack maximum
    /// over the closure is zero, detected by one exact LP per row. Strict
    /// rows never bind on a nonempty polytope.
    pub fn affine_span(&self) -> Result<AffineSpan> {
        if self.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let mut eq_rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for row in &self.rows {
            match row.relation {
                Relation::Eq => eq_rows.push((row.coeffs.clone(), row.rhs.clone())),
                Relation::Lt => {}
                Relation::Le => {
                    let neg: Vec<Rat> = row.coeffs.iter().map(|a| -a.clone()).collect();
                    if let LpResult::Optimal { value, .. } = maximize(self, &neg) {
                        if (&row.rhs + value).is_zero() {
                            eq_rows.push((row.coeffs.clone(), row.rhs.clone()));
                        }
                    }
                }
            }
        }
        let mut entries: Vec<Int> = Vec::new();
        let mut d: Vec<Int> = Vec::new();
        for (coeffs, rhs) in &eq_rows {
            let mut lcm = Int::from(1);
            for c in coeffs.iter().chain(std::iter::once(rhs)) {
                lcm = lcm.lcm(c.denom());
            }
            let mut ints: Vec<Int> = coeffs
                .iter()
                .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
                .collect();
            let mut rhs_int = (rhs * Rat::from_integer(lcm.clone())).to_integer();
            let g = ints
                .iter()
                .fold(rhs_int.clone().abs(), |acc, v| acc.gcd(v));
            if g.is_zero() {
                continue; // 0 = 0 row carries no information
            }
            if g > Int::from(1) {
                for v in ints.iter_mut() {
                    *v = &*v / &g;
                }
                rhs_int /= &g;
            }
            entries.extend(ints);
            d.push(rhs_int);
        }
        let c = IntMatrix::new(d.len(), self.dim, entries);
        Ok(AffineSpan { c, d })
    }

    /// Coordinate-wise exact min/max over the closure.
    pub fn bounding_box(&self) -> Result<(Vec<Rat>, Vec<Rat>)> {
        if self.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut obj = vec![Rat::zero(); self.dim];
            obj[j] = Rat::from_integer(Int::from(1));
            match maximize(self, &obj) {
                LpResult::Optimal { value, .. } => hi.push(value),
                LpResult::Unbounded => return Err(Error::Unbounded(j)),
                LpResult::Infeasible => unreachable!("nonempty checked above"),
            }
            match minimize(self, &obj) {
                LpResult::Optimal { value, .. } => lo.push(value),
                LpResult::Unbounded => return Err(Error::Unbounded(j)),
                LpResult::Infeasible => unreachable!("nonempty checked above"),
            }
        }
        Ok((lo, hi))
    }

    /// Exhaustive lattice-point enumeration, in lexicographic order.
    ///
    /// Recursive interval tightening: with a prefix of coordinates fixed,
    /// the LP range of the next coordinate over the closure limits the
    /// integer candidates; full rows are checked exactly at the leaves,
    /// which restores the strict-row semantics.
    pub fn lattice_points(&self) -> Result<Vec<Vec<Int>>> {
        if self.is_empty() {
            return Ok(Vec::new());
        }
        self.bounding_box()?; // unboundedness check
        let mut out = Vec::new();
        let mut prefix: Vec<Int> = Vec::with_capacity(self.dim);
        self.enumerate_rec(&mut prefix, &mut out);
        Ok(out)
    }

    fn enumerate_rec(&self, prefix: &mut Vec<Int>, out: &mut Vec<Vec<Int>>) {
        if prefix.len() == self.dim {
            if self.contains_ints(prefix) {
                out.push(prefix.clone());
            }
            return;
        }
        let rest = self.restrict_prefix(prefix);
        let mut obj = vec![Rat::zero(); rest.dim];
        obj[0] = Rat::from_integer(Int::from(1));
        let hi = match maximize(&rest, &obj) {
            LpResult::Optimal { value, .. } => value.floor().to_integer(),
            _ => return,
        };
        let lo = match minimize(&rest, &obj) {
            LpResult::Optimal { value, .. } => value.ceil().to_integer(),
            _ => return,
        };
        let mut v = lo;
        while v <= hi {
            prefix.push(v.clone());
            self.enumerate_rec(prefix, out);
            prefix.pop();
            v += 1;
        }
    }

    /// The polytope in the remaining coordinates once a prefix is fixed.
    fn restrict_prefix(&self, prefix: &[Int]) -> HPolytope {
        let k = prefix.len();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut rhs = row.rhs.clone();
                for (a, v) in row.coeffs.iter().take(k).zip(prefix) {
                    rhs -= a * Rat::from_integer(v.clone());
                }
                HRow {
                    coeffs: row.coeffs[k..].to_vec(),
                    relation: row.relation,
                    rhs,
                }
            })
            .collect();
        HPolytope::new(self.dim - k, rows)
    }
}

// ---------------------------------------------------------------------
// JSON format: {"dim": n, "rows": [{"a": ["p/q", ...], "rel": "le", "b": "p/q"}]}

#[derive(Serialize, Deserialize)]
struct HRowDto {
    a: Vec<String>,
    rel: String,
    b: String,
}

#[derive(Serialize, Deserialize)]
struct HPolytopeDto {
    dim: usize,
    rows: Vec<HRowDto>,
}

impl HPolytope {
    pub fn to_json(&self) -> serde_json::Value {
        let dto = HPolytopeDto {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| HRowDto {
                    a: r.coeffs.iter().map(format_rat).collect(),
                    rel: match r.relation {
                        Relation::Le => "le".into(),
                        Relation::Lt => "lt".into(),
                        Relation::Eq => "eq".into(),
                    },
                    b: format_rat(&r.rhs),
                })
                .collect(),
        };
        serde_json::to_value(dto).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<HPolytope> {
        let dto: HPolytopeDto = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("polytope json: {e}")))?;
        let mut rows = Vec::with_capacity(dto.rows.len());
        for r in &dto.rows {
            if r.a.len() != dto.dim {
                return Err(Error::Parse(format!(
                    "row has {} coefficients, dim is {}",
                    r.a.len(),
                    dto.dim
                )));
            }
            let coeffs = r.a.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
            let relation = match r.rel.as_str() {
                "le" => Relation::Le,
                "lt" => Relation::Lt,
                "eq" => Relation::Eq,
                other => return Err(Error::Parse(format!("unknown relation {other:?}"))),
            };
            rows.push(HRow {
                coeffs,
                relation,
                rhs: parse_rat(&r.b)?,
            });
        }
        Ok(HPolytope::new(dto.dim, rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

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

    fn half_point() -> HPolytope {
        // {2x = 1}
        HPolytope::from_i64_rows(1, &[(vec![2], Relation::Eq, 1)])
    }

    #[test]
    fn membership() {
        let p = unit_square();
        assert!(p.contains(&[rat(1, 2), rat(1, 2)]));
        assert!(!p.contains(&[rat_int(2), rat_int(0)]));
        let strict = HPolytope::from_i64_rows(1, &[(vec![1], Relation::Lt, 1)]);
        assert!(!strict.contains(&[rat_int(1)]));
        assert!(strict.contains(&[rat(1, 2)]));
    }

    #[test]
    fn dilation() {
        let seg = HPolytope::from_i64_rows(
            1,
            &[(vec![1], Relation::Le, 1), (vec![-1], Relation::Le, 0)],
        );
        let d3 = seg.dilate(3);
        assert_eq!(d3.rows[0].rhs, rat_int(3));
        assert_eq!(seg.dilate(1), seg);
        assert_eq!(half_point().dilate(2).rows[0].rhs, rat_int(2));
        assert_eq!(seg.dilate(2).dilate(3), seg.dilate(6));
    }

    #[test]
    fn emptiness() {
        let p = HPolytope::from_i64_rows(
            1,
            &[(vec![1], Relation::Le, 0), (vec![-1], Relation::Le, -1)],
        );
        assert!(p.is_empty());
        let strict = HPolytope::from_i64_rows(
            1,
            &[(vec![-1], Relation::Le, 0), (vec![1], Relation::Lt, 0)],
        );
        assert!(strict.is_empty());
        assert!(!unit_square().is_empty());
        // Strict row with positive max slack: [0,1) is nonempty.
        let half_open = HPolytope::from_i64_rows(
            1,
            &[(vec![-1], Relation::Le, 0), (vec![1], Relation::Lt, 1)],
        );
        assert!(!half_open.is_empty());
    }

    #[test]
    fn affine_span_of_segment() {
        // {(x,y): 0 <= x <= 1, y = 0}
        let p = HPolytope::from_i64_rows(
            2,
            &[
                (vec![1, 0], Relation::Le, 1),
                (vec![-1, 0], Relation::Le, 0),
                (vec![0, 1], Relation::Eq, 0),
            ],
        );
        let span = p.affine_span().unwrap();
        assert_eq!(span.c.rows(), 1);
        assert_eq!(span.c[(0, 0)], Int::from(0));
        assert_eq!(span.c[(0, 1)], Int::from(1));
        assert_eq!(span.d, vec![Int::from(0)]);
    }

    #[test]
    fn affine_span_full_dimensional() {
        assert!(unit_square().affine_span().unwrap().is_full_dimensional());
    }

    #[test]
    fn affine_span_detects_implicit_equality() {
        // x+y <= 1, x+y >= 1, x >= 0: both rows are tight everywhere.
        let p = HPolytope::from_i64_rows(
            2,
            &[
                (vec![1, 1], Relation::Le, 1),
                (vec![-1, -1], Relation::Le, -1),
                (vec![-1, 0], Relation::Le, 0),
            ],
        );
        let span = p.affine_span().unwrap();
        assert_eq!(span.c.rows(), 2);
        for i in 0..2 {
            // each primitive row is +-(x + y = 1)
            assert_eq!(span.c[(i, 0)], span.c[(i, 1)]);
            assert_eq!(span.c[(i, 0)].abs(), Int::from(1));
            assert_eq!(span.d[i].abs(), Int::from(1));
        }
    }

    #[test]
    fn affine_span_of_empty_errors() {
        let p = HPolytope::from_i64_rows(
            1,
            &[(vec![1], Relation::Le, 0), (vec![-1], Relation::Le, -1)],
        );
        assert_eq!(p.affine_span(), Err(Error::EmptyPolytope));
    }

    #[test]
    fn boxes() {
        let (lo, hi) = unit_square().bounding_box().unwrap();
        assert_eq!(lo, vec![rat_int(0), rat_int(0)]);
        assert_eq!(hi, vec![rat_int(1), rat_int(1)]);

        let (lo, hi) = half_point().bounding_box().unwrap();
        assert_eq!(lo, vec![rat(1, 2)]);
        assert_eq!(hi, vec![rat(1, 2)]);

        let tri = HPolytope::from_i64_rows(
            2,
            &[
                (vec![-1, 0], Relation::Le, 0),
                (vec![0, -1], Relation::Le, 0),
                (vec![2, 2], Relation::Le, 3),
            ],
        );
        let (lo, hi) = tri.bounding_box().unwrap();
        assert_eq!(lo, vec![rat_int(0), rat_int(0)]);
        assert_eq!(hi, vec![rat(3, 2), rat(3, 2)]);

        let ray = HPolytope::from_i64_rows(1, &[(vec![-1], Relation::Le, 0)]);
        assert_eq!(ray.bounding_box(), Err(Error::Unbounded(0)));
    }

    #[test]
    fn lattice_enumeration() {
        let big = unit_square().dilate(2);
        let pts = big.lattice_points().unwrap();
        assert_eq!(pts.len(), 9);
        // lexicographic order
        assert_eq!(pts[0], vec![Int::from(0), Int::from(0)]);
        assert_eq!(pts[8], vec![Int::from(2), Int::from(2)]);

        assert!(half_point().lattice_points().unwrap().is_empty());

        let tri = HPolytope::from_i64_rows(
            2,
            &[
                (vec![-1, 0], Relation::Le, 0),
                (vec![0, -1], Relation::Le, 0),
                (vec![1, 1], Relation::Le, 2),
            ],
        );
        assert_eq!(tri.lattice_points().unwrap().len(), 6);
    }

    #[test]
    fn strict_rows_in_enumeration() {
        // [0, 2) x {0}: points 0 and 1 only.
        let p = HPolytope::from_i64_rows(
            1,
            &[(vec![-1], Relation::Le, 0), (vec![1], Relation::Lt, 2)],
        );
        assert_eq!(p.lattice_points().unwrap().len(), 2);
    }

    #[test]
    fn enumeration_invariant_under_row_scaling_and_permutation() {
        let base = HPolytope::from_i64_rows(
            2,
            &[
                (vec![-1, 0], Relation::Le, 0),
                (vec![0, -1], Relation::Le, 0),
                (vec![1, 2], Relation::Le, 4),
            ],
        );
        let scaled = HPolytope::from_i64_rows(
            2,
            &[
                (vec![0, -3], Relation::Le, 0),
                (vec![5, 10], Relation::Le, 20),
                (vec![-7, 0], Relation::Le, 0),
            ],
        );
        assert_eq!(
            base.lattice_points().unwrap(),
            scaled.lattice_points().unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let p = HPolytope::new(
            2,
            vec![
                HRow {
                    coeffs: vec![rat(1, 2), rat_int(-1)],
                    relation: Relation::Lt,
                    rhs: rat(3, 7),
                },
                HRow {
                    coeffs: vec![rat_int(0), rat_int(1)],
                    relation: Relation::Eq,
                    rhs: rat_int(2),
                },
            ],
        );
        let v = p.to_json();
        assert_eq!(HPolytope::from_json(&v).unwrap(), p);
    }

    #[test]
    fn dilation_membership_property() {
        let p = HPolytope::from_i64_rows(
            2,
            &[
                (vec![3, -1], Relation::Le, 1),
                (vec![-1, 0], Relation::Le, 0),
                (vec![0, 1], Relation::Le, 2),
                (vec![1, 1], Relation::Eq, 1),
            ],
        );
        let xs = [
            vec![rat(1, 3), rat(2, 3)],
            vec![rat_int(0), rat_int(1)],
            vec![rat(1, 2), rat(1, 2)],
        ];
        for n in 1..=4u64 {
            let pn = p.dilate(n);
            let f = rat_int(n as i64);
            for x in &xs {
                let nx: Vec<Rat> = x.iter().map(|v| v * &f).collect();
                assert_eq!(pn.contains(&nx), p.contains(x));
            }
        }
    }
}
