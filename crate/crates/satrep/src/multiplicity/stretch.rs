//! Stretching functions: sample, fit, and analyze.
//!
//! A stretch specification fixes labels and a backend; the driver
//! computes f~(n) for n = 1..N exactly, fits a quasi-polynomial
//! (smallest consistent period first), derives the generating function,
//! searches for a positive form, and reports the index, saturation
//! index, and positivity index of the fit.

use num_traits::Zero;

use crate::combinat::{lr_coefficient, weyl_dim_poly, Partition};
use crate::exact::{Int, Rat, RationalFunction};
use crate::quasipoly::{fit, positive_form_search, PositiveForm, QuasiPolynomial};
use crate::{Error, Result};

use super::hilbert::partitions_into_at_most;
use super::kronecker::kronecker_two_row;
use super::plethysm::plethysm_p_basis;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StretchKind {
    /// c_{n alpha, n beta}^{n lambda}
    Lr {
        alpha: Partition,
        beta: Partition,
        lambda: Partition,
    },
    /// k_{n lambda, n mu}^{n pi} with two-row lambda, mu
    KroneckerTwoRow {
        lambda: Partition,
        mu: Partition,
        pi: Partition,
    },
    /// a_{n lambda, mu}^{n pi}; mu is not stretched
    Plethysm {
        lambda: Partition,
        mu: Partition,
        pi: Partition,
        guard: u64,
    },
    /// partitions of n into at most k parts
    SymInv { k: u64 },
    /// dim V_{n lambda}(GL_k)
    GpHilbert { k: usize, lambda: Partition },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchSpec {
    pub kind: StretchKind,
    /// sample horizon: n = 1..=horizon
    pub horizon: usize,
    pub period_bound: usize,
    pub degree_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchReport {
    pub samples: Vec<Int>,
    pub quasipoly: QuasiPolynomial,
    pub genfun: RationalFunction,
    pub positive_form: Option<PositiveForm>,
    pub index: u64,
    /// None when no shift up to the internal cap works.
    pub saturation_index: Option<u64>,
    pub positivity_index: Option<u64>,
}

impl StretchKind {
    pub fn sample(&self, n: u64) -> Result<Int> {
        match self {
            StretchKind::Lr {
                alpha,
                beta,
                lambda,
            } => Ok(lr_coefficient(
                &alpha.scale(n),
                &beta.scale(n),
                &lambda.scale(n),
            )),
            StretchKind::KroneckerTwoRow { lambda, mu, pi } => {
                kronecker_two_row(&lambda.scale(n), &mu.scale(n), &pi.scale(n))
            }
            StretchKind::Plethysm {
                lambda,
                mu,
                pi,
                guard,
            } => Ok(plethysm_p_basis(&lambda.scale(n), mu, *guard)?
                .coefficient(&pi.scale(n))),
            StretchKind::SymInv { k } => Ok(partitions_into_at_most(n, *k)),
            StretchKind::GpHilbert { k, lambda } => {
                let p = weyl_dim_poly(*k, lambda)?;
                let v = p.eval_int(&Int::from(n));
                debug_assert!(v.is_integer());
                Ok(v.to_integer())
            }
        }
    }
}

const SHIFT_CAP: u64 = 20;

/// Samples, fits, and analyzes the stretching function of `spec`.
/// `threads` parallelizes the sample computations (they are independent
/// pure calls); results are deterministic regardless of thread count.
pub fn stretching_quasipolynomial(spec: &StretchSpec, threads: usize) -> Result<StretchReport> {
    let n_max = spec.horizon as u64;
    let samples = compute_samples(&spec.kind, n_max, threads.max(1))?;

    let pairs: Vec<(u64, Rat)> = samples
        .iter()
        .enumerate()
        .map(|(i, v)| (i as u64 + 1, Rat::from_integer(v.clone())))
        .collect();

    let quasipoly = fit_search(&pairs, spec.period_bound, spec.degree_bound)?;
    let genfun = quasipoly.generating_function();
    let positive_form = match quasipoly.degree() {
        Some(d) => positive_form_search(&genfun, d, spec.period_bound as u64),
        None => None,
    };
    let index = quasipoly.index();
    let saturation_index = quasipoly.saturation_index(SHIFT_CAP).ok();
    let positivity_index = quasipoly.positivity_index(SHIFT_CAP).ok();
    if let Some(pf) = &positive_form {
        // a (1 - t) factor forces strict saturation of the fit
        debug_assert!(
            !pf.has_unit_factor() || quasipoly.is_strictly_saturated(),
            "unit factor without strict saturation"
        );
    }
    debug_assert!(samples.iter().enumerate().all(|(i, v)| {
        v.is_zero() || index != 0 && (i as u64 + 1) % index == 0
    }), "nonzero sample off the index lattice");
    Ok(StretchReport {
        samples,
        quasipoly,
        genfun,
        positive_form,
        index,
        saturation_index,
        positivity_index,
    })
}

fn compute_samples(kind: &StretchKind, n_max: u64, threads: usize) -> Result<Vec<Int>> {
    if threads <= 1 || n_max <= 1 {
        return (1..=n_max).map(|n| kind.sample(n)).collect();
    }
    let mut out: Vec<Result<Int>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let kind = &*kind;
            handles.push(scope.spawn(move || {
                let mut part = Vec::new();
                let mut n = t as u64 + 1;
                while n <= n_max {
                    part.push((n, kind.sample(n)));
                    n += threads as u64;
                }
                part
            }));
        }
        let mut merged: Vec<Option<Result<Int>>> = vec![None; n_max as usize];
        for h in handles {
            for (n, v) in h.join().expect("sampler thread") {
                merged[(n - 1) as usize] = Some(v);
            }
        }
        out = merged.into_iter().map(|v| v.expect("all indices covered")).collect();
    });
    out.into_iter().collect()
}

/// Ascending period search: the first (period, degree) pair consistent
/// with the samples wins, which yields the minimal-period fit when the
/// horizon is generous enough.
fn fit_search(
    pairs: &[(u64, Rat)],
    period_bound: usize,
    degree_bound: usize,
) -> Result<QuasiPolynomial> {
    let mut last = Error::InconsistentSamples {
        period: period_bound,
        degree: degree_bound,
    };
    for period in 1..=period_bound {
        for degree in 0..=degree_bound {
            match fit(pairs, period, degree) {
                Ok(f) => return Ok(f),
                Err(e) => last = e,
            }
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int, series_coefficients, RationalPolynomial};

    fn p(parts: &[u64]) -> Partition {
        Partition::from_with_zeros(parts)
    }

    fn spec(kind: StretchKind, horizon: usize, pb: usize, db: usize) -> StretchSpec {
        StretchSpec {
            kind,
            horizon,
            period_bound: pb,
            degree_bound: db,
        }
    }

    #[test]
    fn constant_lr_stretch() {
        // c_{(n),(n)}^{(2n)} = 1 for all n.
        let s = spec(
            StretchKind::Lr {
                alpha: p(&[1]),
                beta: p(&[1]),
                lambda: p(&[2]),
            },
            6,
            2,
            2,
        );
        let r = stretching_quasipolynomial(&s, 1).unwrap();
        assert!(r.samples.iter().all(|v| *v == Int::from(1)));
        assert_eq!(r.quasipoly, QuasiPolynomial::constant_one());
        assert_eq!(
            r.genfun,
            RationalFunction::new(
                RationalPolynomial::one(),
                RationalPolynomial::from_i64(&[1, -1])
            )
        );
        let pf = r.positive_form.unwrap();
        assert_eq!(pf.denominator_factors, vec![(1, 1)]);
        assert_eq!(r.index, 1);
        assert_eq!(r.saturation_index, Some(0));
        assert_eq!(r.positivity_index, Some(0));
    }

    #[test]
    fn syminv_k2_stretch() {
        let s = spec(StretchKind::SymInv { k: 2 }, 12, 2, 1);
        let r = stretching_quasipolynomial(&s, 2).unwrap();
        assert_eq!(r.quasipoly.period(), 2);
        assert_eq!(
            r.quasipoly.constituents()[0],
            RationalPolynomial::new(vec![rat(1, 2), rat(1, 2)])
        );
        let pf = r.positive_form.unwrap();
        assert_eq!(pf.numerator_h, vec![Int::from(1)]);
        assert_eq!(pf.denominator_factors, vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn gp_hilbert_stretch_is_polynomial() {
        let s = spec(
            StretchKind::GpHilbert {
                k: 3,
                lambda: p(&[2, 1]),
            },
            8,
            2,
            3,
        );
        let r = stretching_quasipolynomial(&s, 1).unwrap();
        assert_eq!(r.quasipoly.period(), 1);
        // dim V_{(2,1)}(GL_3) = 8 at n = 1
        assert_eq!(r.samples[0], Int::from(8));
        assert_eq!(r.positivity_index, Some(0));
    }

    #[test]
    fn plethysm_stretch_mu_not_stretched() {
        // a_{(n),(1)}^{(n)} = 1: plethysm by the identity.
        let s = spec(
            StretchKind::Plethysm {
                lambda: p(&[1]),
                mu: p(&[1]),
                pi: p(&[1]),
                guard: 16,
            },
            6,
            2,
            2,
        );
        let r = stretching_quasipolynomial(&s, 1).unwrap();
        assert_eq!(r.quasipoly, QuasiPolynomial::constant_one());
    }

    #[test]
    fn threading_is_deterministic() {
        let s = spec(StretchKind::SymInv { k: 3 }, 24, 6, 2);
        let a = stretching_quasipolynomial(&s, 1).unwrap();
        let b = stretching_quasipolynomial(&s, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn inconsistent_when_bounds_too_small() {
        let s = spec(StretchKind::SymInv { k: 3 }, 24, 2, 2);
        assert!(matches!(
            stretching_quasipolynomial(&s, 1),
            Err(Error::InconsistentSamples { .. })
        ));
    }

    #[test]
    fn generating_function_matches_samples() {
        let s = spec(StretchKind::SymInv { k: 3 }, 30, 6, 2);
        let r = stretching_quasipolynomial(&s, 1).unwrap();
        let coeffs = series_coefficients(&r.genfun, 30);
        assert_eq!(coeffs[0], rat_int(1));
        for (i, v) in r.samples.iter().enumerate() {
            assert_eq!(coeffs[i + 1], Rat::from_integer(v.clone()));
        }
    }
}
