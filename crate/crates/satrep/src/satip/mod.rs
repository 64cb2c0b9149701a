//! Saturated integer programming over Ehrhart structure.
//!
//! The index of the Ehrhart quasi-polynomial of a nonempty polytope P is
//! computed without any counting: the affine span C x = d is put into
//! Smith form D = U C V, the transformed system reads d_i z_i = e_i with
//! e = U d, and after reducing each pair to lowest terms the index is
//! the lcm of the reduced moduli. nP meets the integer lattice only when
//! the index divides n, which turns relaxed integer programming into a
//! single divisibility test.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::combinat::{hive_polytope, hive_polytope_rational, Partition};
use crate::exact::{smith_normal_form, Int, Rat};
use crate::polytope::HPolytope;
use crate::quasipoly::{fit, QuasiPolynomial};
use crate::{Error, Result};

/// A relaxed integer-programming instance: the polytope plus a
/// caller-asserted bound on its saturation or positivity index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturatedIPInstance {
    pub polytope: HPolytope,
    pub estimate: IndexEstimate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexEstimate {
    /// sie(P): saturation index estimate.
    Saturation(u64),
    /// pie(P): positivity index estimate (always >= the saturation one).
    Positivity(u64),
}

impl IndexEstimate {
    pub fn value(&self) -> u64 {
        match self {
            IndexEstimate::Saturation(v) | IndexEstimate::Positivity(v) => *v,
        }
    }
}

/// Lattice-point counts of nP for n = 1..=horizon.
pub fn ehrhart_samples(p: &HPolytope, horizon: usize) -> Result<Vec<u64>> {
    (1..=horizon as u64)
        .map(|n| Ok(p.dilate(n).lattice_points()?.len() as u64))
        .collect()
}

/// Fits the Ehrhart quasi-polynomial from exact counts, at the given
/// period and degree bounds (degree defaults to the ambient dimension).
pub fn ehrhart_quasipoly(
    p: &HPolytope,
    period_bound: usize,
    degree_bound: Option<usize>,
) -> Result<QuasiPolynomial> {
    let degree = degree_bound.unwrap_or(p.dim);
    let horizon = period_bound * (degree + 2);
    let samples = ehrhart_samples(p, horizon)?;
    let pairs: Vec<(u64, Rat)> = samples
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as u64 + 1, crate::exact::rat_int(v as i64)))
        .collect();
    fit(&pairs, period_bound, degree)
}

/// Divisibility data of one diagonal equation of the transformed span.
fn reduced_moduli(p: &HPolytope) -> Result<Vec<(Int, Int)>> {
    let span = p.affine_span()?;
    if span.c.rows() == 0 {
        return Ok(Vec::new());
    }
    let snf = smith_normal_form(&span.c);
    let e = snf.u.mul_vec(&span.d);
    let mut out = Vec::new();
    for i in 0..span.c.rows() {
        let di = if i < snf.d.cols() {
            snf.d[(i, i)].clone()
        } else {
            Int::zero()
        };
        if di.is_zero() {
            if !e[i].is_zero() {
                // the span of a nonempty polytope is always consistent
                return Err(Error::InconsistentSpan);
            }
            continue;
        }
        let g = di.gcd(&e[i]);
        out.push((&di / &g, &e[i] / &g));
    }
    Ok(out)
}

/// Index of the Ehrhart quasi-polynomial: 0 for empty P, otherwise the
/// lcm of the reduced moduli of the span equations (1 when the span is
/// the whole space, or every equation has an integral solution).
pub fn ehrhart_index(p: &HPolytope) -> Result<u64> {
    if p.is_empty() {
        return Ok(0);
    }
    let mut lcm = Int::from(1);
    for (c, _) in reduced_moduli(p)? {
        lcm = lcm.lcm(&c);
    }
    Ok(u64::try_from(&lcm).expect("index fits in u64"))
}

/// Whether the affine span of a nonempty P contains an integer point: in
/// Smith coordinates each diagonal equation d_i z_i = e_i must have d_i
/// dividing e_i (unimodular V carries integer solutions back).
pub fn affine_span_has_integer_point(p: &HPolytope) -> Result<bool> {
    Ok(reduced_moduli(p)?
        .iter()
        .all(|(c, _)| c.abs() == Int::from(1)))
}

/// Saturated (or positive) integer programming: for a relaxation
/// parameter c strictly above the supplied estimate, cP contains an
/// integer point exactly when the polytope is nonempty and the Ehrhart
/// index divides c.
pub fn saturated_ip_decide(inst: &SaturatedIPInstance, c: u64) -> Result<bool> {
    if c <= inst.estimate.value() {
        return Err(Error::RelaxationTooSmall {
            c,
            estimate: inst.estimate.value(),
        });
    }
    let index = ehrhart_index(&inst.polytope)?;
    Ok(index != 0 && c % index == 0)
}

/// Nonvanishing of an integral LR coefficient by pure linear
/// programming: the hive polytope is nonempty as a rational polytope
/// exactly when some dilation carries a hive, and scaling invariance of
/// the coefficient pulls that back to n = 1.
pub fn lr_nonvanishing(
    alpha: &Partition,
    beta: &Partition,
    lambda: &Partition,
    n: usize,
) -> Result<bool> {
    let hive = hive_polytope(alpha, beta, lambda, n)?;
    Ok(!hive.is_empty())
}

/// Membership of a rational weight triple in the LR cone.
pub fn lr_cone_member(alpha: &[Rat], beta: &[Rat], lambda: &[Rat], n: usize) -> Result<bool> {
    let hive = hive_polytope_rational(alpha, beta, lambda, n)?;
    Ok(!hive.is_empty())
}

/// Outcome of the polytope-pair obstruction test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// Q empty while P is not.
    Geometric,
    /// Both nonempty; span(Q) misses the lattice while span(P) meets it.
    Modular,
    None,
}

impl std::fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ObstructionVerdict::Geometric => "GEOMETRIC",
            ObstructionVerdict::Modular => "MODULAR",
            ObstructionVerdict::None => "NONE",
        };
        write!(f, "{s}")
    }
}

/// Certificate check for the pair (P, Q).
pub fn robust_obstruction_check(p: &HPolytope, q: &HPolytope) -> Result<ObstructionVerdict> {
    let q_empty = q.is_empty();
    let p_empty = p.is_empty();
    if q_empty && !p_empty {
        return Ok(ObstructionVerdict::Geometric);
    }
    if !q_empty && !p_empty {
        let q_int = affine_span_has_integer_point(q)?;
        let p_int = affine_span_has_integer_point(p)?;
        if !q_int && p_int {
            return Ok(ObstructionVerdict::Modular);
        }
    }
    Ok(ObstructionVerdict::None)
}
