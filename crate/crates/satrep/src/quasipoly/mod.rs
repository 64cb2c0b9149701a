//! Quasi-polynomials and their positivity structure.
//!
//! A quasi-polynomial of period l is a tuple of l polynomials
//! f_1, ..., f_l with f(n) = f_j(n) when n = j (mod l); the constituent
//! f_l governs the residue 0. Counting functions (Ehrhart functions,
//! stretched structural constants) arrive as sample sequences and leave
//! as quasi-polynomials, rational generating functions, and positive
//! presentations h(t) / prod (1 - t^a)^d.

mod posform;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{
    format_rat, parse_rat, rat_int, solve_rational, Int, Rat, RationalFunction,
    RationalMatrix, RationalPolynomial,
};
use crate::{Error, Result};

pub use posform::{positive_form_search, PositiveForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    constituents: Vec<RationalPolynomial>,
}

impl QuasiPolynomial {
    /// `constituents[j-1]` governs n = j (mod period); the last entry
    /// governs multiples of the period. The period need not be minimal.
    pub fn new(constituents: Vec<RationalPolynomial>) -> Self {
        assert!(!constituents.is_empty(), "period must be positive");
        QuasiPolynomial {
            period: constituents.len(),
            constituents,
        }
    }

    pub fn zero() -> Self {
        QuasiPolynomial::new(vec![RationalPolynomial::zero()])
    }

    pub fn constant_one() -> Self {
        QuasiPolynomial::new(vec![RationalPolynomial::one()])
    }

    pub fn from_polynomial(p: RationalPolynomial) -> Self {
        QuasiPolynomial::new(vec![p])
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn constituents(&self) -> &[RationalPolynomial] {
        &self.constituents
    }

    /// Constituent governing the residue class of n (1-based; index
    /// `period` for multiples of the period).
    pub fn constituent_for(&self, n: u64) -> &RationalPolynomial {
        let r = (n % self.period as u64) as usize;
        &self.constituents[if r == 0 { self.period - 1 } else { r - 1 }]
    }

    pub fn eval(&self, n: u64) -> Rat {
        self.constituent_for(n).eval_int(&Int::from(n))
    }

    pub fn is_zero(&self) -> bool {
        self.constituents.iter().all(|f| f.is_zero())
    }

    /// Largest constituent degree, `None` for the zero quasi-polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(|f| f.degree()).max()
    }

    /// The same function represented with the smallest possible period.
    pub fn minimal_period(&self) -> QuasiPolynomial {
        'outer: for l in 1..=self.period {
            if self.period % l != 0 {
                continue;
            }
            for j in 0..self.period {
                if self.constituents[j] != self.constituents[j % l] {
                    continue 'outer;
                }
            }
            return QuasiPolynomial::new(self.constituents[..l].to_vec());
        }
        self.clone()
    }

    /// The same function represented with period `l`, which must be a
    /// multiple of the current period.
    pub fn with_period(&self, l: usize) -> QuasiPolynomial {
        assert!(l % self.period == 0, "target period must be a multiple");
        QuasiPolynomial::new((0..l).map(|j| self.constituents[j % self.period].clone()).collect())
    }

    /// Smallest residue j in 1..=l whose constituent is not identically
    /// zero, after minimal-period reduction; 0 for the zero function.
    pub fn index(&self) -> u64 {
        let reduced = self.minimal_period();
        for j in 1..=reduced.period {
            if !reduced.constituents[j - 1].is_zero() {
                return j as u64;
            }
        }
        0
    }

    /// g with g(n) = f(n + s), same period.
    pub fn shift(&self, s: u64) -> QuasiPolynomial {
        let l = self.period;
        let shift = rat_int(s as i64);
        let constituents = (1..=l)
            .map(|j| {
                // residue j after the shift is governed by residue j + s
                self.constituent_for(j as u64 + s).compose_shift(&shift)
            })
            .collect();
        QuasiPolynomial::new(constituents)
    }

    /// Every nonzero constituent positive at all integers n >= 1.
    pub fn is_strictly_saturated(&self) -> bool {
        self.constituents
            .iter()
            .filter(|f| !f.is_zero())
            .all(|f| f.positive_on_positive_integers())
    }

    /// All constituent coefficients nonnegative.
    pub fn is_strictly_positive(&self) -> bool {
        self.constituents.iter().all(|f| f.all_coeffs_nonnegative())
    }

    /// Smallest shift s <= cap making the function strictly saturated.
    pub fn saturation_index(&self, cap: u64) -> Result<u64> {
        (0..=cap)
            .find(|&s| self.shift(s).is_strictly_saturated())
            .ok_or(Error::CapExceeded(cap as usize))
    }

    /// Smallest shift s <= cap making the function strictly positive.
    pub fn positivity_index(&self, cap: u64) -> Result<u64> {
        (0..=cap)
            .find(|&s| self.shift(s).is_strictly_positive())
            .ok_or(Error::CapExceeded(cap as usize))
    }

    /// F(t) = sum_{n>=0} f(n) t^n in canonical form. The denominator
    /// always divides (1 - t^l)^(deg + 1).
    pub fn generating_function(&self) -> RationalFunction {
        if self.is_zero() {
            return RationalFunction::from_polynomial(RationalPolynomial::zero());
        }
        let l = self.period;
        let d = self.degree().expect("nonzero");
        // (1 - t^l)^(d+1)
        let mut cyc = vec![Rat::zero(); l + 1];
        cyc[0] = Rat::one();
        cyc[l] = -Rat::one();
        let den = RationalPolynomial::new(cyc).pow(d + 1);
        // numerator = den * series, a polynomial of degree < l(d+1)
        let num_len = l * (d + 1);
        let series: Vec<Rat> = (0..num_len as u64 + l as u64).map(|n| self.eval(n)).collect();
        let mut num = vec![Rat::zero(); num_len];
        for (k, c) in num.iter_mut().enumerate() {
            for j in 0..=k.min(den.coeffs().len().saturating_sub(1)) {
                *c += den.coeff(j) * &series[k - j];
            }
        }
        if cfg!(debug_assertions) {
            for k in num_len..series.len() {
                let mut c = Rat::zero();
                for j in 0..=k.min(den.coeffs().len() - 1) {
                    c += den.coeff(j) * &series[k - j];
                }
                debug_assert!(c.is_zero(), "series recurrence must terminate");
            }
        }
        RationalFunction::new(RationalPolynomial::new(num), den)
    }
}

/// Interpolates a quasi-polynomial of the given period and degree bound
/// through the samples. Every residue class mod `period` needs at least
/// `degree + 1` samples; classes with more samples are cross-checked and
/// inconsistency is an error, never silently dropped.
pub fn fit(samples: &[(u64, Rat)], period: usize, degree: usize) -> Result<QuasiPolynomial> {
    assert!(period >= 1);
    let mut constituents = Vec::with_capacity(period);
    for j in 1..=period {
        let class: Vec<&(u64, Rat)> = samples
            .iter()
            .filter(|(n, _)| (*n % period as u64) as usize == j % period)
            .collect();
        if class.len() < degree + 1 {
            return Err(Error::InsufficientSamples {
                residue: j,
                period,
                got: class.len(),
                need: degree + 1,
            });
        }
        // Solve a Vandermonde system on the first degree+1 samples.
        let pts = &class[..degree + 1];
        let mut entries = Vec::with_capacity((degree + 1) * (degree + 1));
        let mut rhs = Vec::with_capacity(degree + 1);
        for (n, v) in pts {
            let x = rat_int(*n as i64);
            let mut pw = Rat::one();
            for _ in 0..=degree {
                entries.push(pw.clone());
                pw *= &x;
            }
            rhs.push(v.clone());
        }
        let a = RationalMatrix::new(degree + 1, degree + 1, entries);
        let sol = solve_rational(&a, &rhs).ok_or(Error::InconsistentSamples { period, degree })?;
        let poly = RationalPolynomial::new(sol.particular);
        for (n, v) in &class[degree + 1..] {
            if poly.eval_int(&Int::from(*n)) != *v {
                return Err(Error::InconsistentSamples { period, degree });
            }
        }
        constituents.push(poly);
    }
    Ok(QuasiPolynomial::new(constituents))
}

// ---------------------------------------------------------------------
// JSON format: {"period": l, "constituents": [["c0","c1",...], ...]}

#[derive(Serialize, Deserialize)]
struct QuasiPolynomialDto {
    period: usize,
    constituents: Vec<Vec<String>>,
}

impl QuasiPolynomial {
    pub fn to_json(&self) -> serde_json::Value {
        let dto = QuasiPolynomialDto {
            period: self.period,
            constituents: self
                .constituents
                .iter()
                .map(|f| f.coeffs().iter().map(format_rat).collect())
                .collect(),
        };
        serde_json::to_value(dto).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<QuasiPolynomial> {
        let dto: QuasiPolynomialDto = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("quasipolynomial json: {e}")))?;
        if dto.constituents.len() != dto.period || dto.period == 0 {
            return Err(Error::Parse("period must equal constituent count".into()));
        }
        let constituents = dto
            .constituents
            .iter()
            .map(|c| Ok(RationalPolynomial::new(c.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?)))
            .collect::<Result<_>>()?;
        Ok(QuasiPolynomial::new(constituents))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, series_coefficients};

    /// Period-2 counter of partitions into at most two parts:
    /// (n+1)/2 at odd n, n/2 + 1 at even n.
    fn two_part_counter() -> QuasiPolynomial {
        QuasiPolynomial::new(vec![
            RationalPolynomial::new(vec![rat(1, 2), rat(1, 2)]),
            RationalPolynomial::new(vec![rat_int(1), rat(1, 2)]),
        ])
    }

    #[test]
    fn evaluation_conventions() {
        let one = QuasiPolynomial::constant_one();
        assert_eq!(one.eval(7), rat_int(1));
        assert_eq!(two_part_counter().eval(4), rat_int(3));
        assert_eq!(two_part_counter().eval(0), rat_int(1));
        assert_eq!(two_part_counter().eval(5), rat_int(3));
        assert_eq!(QuasiPolynomial::zero().eval(3), rat_int(0));
    }

    #[test]
    fn fitting_recovers_polynomials() {
        let samples: Vec<(u64, Rat)> = (1..=3).map(|n| (n, rat_int((n * n) as i64))).collect();
        let f = fit(&samples, 1, 2).unwrap();
        assert_eq!(f.constituents()[0], RationalPolynomial::from_i64(&[0, 0, 1]));

        // Degree too low for n^3.
        let samples: Vec<(u64, Rat)> = (1..=5).map(|n| (n, rat_int((n * n * n) as i64))).collect();
        assert_eq!(
            fit(&samples, 1, 2),
            Err(Error::InconsistentSamples { period: 1, degree: 2 })
        );

        let too_few: Vec<(u64, Rat)> = vec![(1, rat_int(1))];
        assert!(matches!(
            fit(&too_few, 1, 2),
            Err(Error::InsufficientSamples { .. })
        ));
    }

    #[test]
    fn fitting_period_two_mixed_lines() {
        // (1,1),(2,3),(3,2),(4,5),(5,3),(6,7): odd samples lie on
        // (n+1)/2 and even samples on n+1, solved as two 2x2 systems
        // with the spare sample in each class cross-checked.
        let samples: Vec<(u64, Rat)> = [1i64, 3, 2, 5, 3, 7]
            .iter()
            .enumerate()
            .map(|(i, &v)| (i as u64 + 1, rat_int(v)))
            .collect();
        let f = fit(&samples, 2, 1).unwrap();
        assert_eq!(f.constituents()[0], RationalPolynomial::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(f.constituents()[1], RationalPolynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn fitting_period_two() {
        let f = two_part_counter();
        let samples: Vec<(u64, Rat)> = (1..=8).map(|n| (n, f.eval(n))).collect();
        let fitted = fit(&samples, 2, 1).unwrap();
        assert_eq!(fitted, f);
        for (n, v) in &samples {
            assert_eq!(fitted.eval(*n), *v);
        }
    }

    #[test]
    fn index_conventions() {
        assert_eq!(QuasiPolynomial::zero().index(), 0);
        assert_eq!(QuasiPolynomial::constant_one().index(), 1);
        // Ehrhart function of {2x = 1}: 0 at odd n, 1 at even n.
        let f = QuasiPolynomial::new(vec![
            RationalPolynomial::zero(),
            RationalPolynomial::one(),
        ]);
        assert_eq!(f.index(), 2);
        // Index is representation independent.
        assert_eq!(f.with_period(4).index(), 2);
        assert_eq!(f.with_period(6).index(), 2);
    }

    #[test]
    fn minimal_period_reduction() {
        let f = two_part_counter();
        let fat = f.with_period(6);
        assert_eq!(fat.minimal_period(), f);
        assert_eq!(QuasiPolynomial::constant_one().with_period(5).minimal_period().period(), 1);
    }

    #[test]
    fn shifting() {
        let f = QuasiPolynomial::from_polynomial(RationalPolynomial::from_i64(&[-1, 1]));
        let g = f.shift(1);
        assert_eq!(g.constituents()[0], RationalPolynomial::from_i64(&[0, 1]));
        assert_eq!(f.shift(0), f);

        let p2 = two_part_counter();
        let s = p2.shift(1);
        for n in 0..=9 {
            assert_eq!(s.eval(n), p2.eval(n + 1));
        }
    }

    #[test]
    fn saturation_and_positivity_indices() {
        let n = QuasiPolynomial::from_polynomial(RationalPolynomial::from_i64(&[0, 1]));
        assert_eq!(n.saturation_index(5).unwrap(), 0);
        assert_eq!(n.positivity_index(5).unwrap(), 0);

        let n_minus_1 = QuasiPolynomial::from_polynomial(RationalPolynomial::from_i64(&[-1, 1]));
        assert_eq!(n_minus_1.saturation_index(5).unwrap(), 1);
        assert_eq!(n_minus_1.positivity_index(5).unwrap(), 1);

        let sq = QuasiPolynomial::from_polynomial(RationalPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(sq.positivity_index(5).unwrap(), 0);

        // (n-1)(n-2) needs shift 2 for saturation; positivity also at 2
        // since (n+2-1)(n+2-2) = n^2 + n.
        let p = QuasiPolynomial::from_polynomial(RationalPolynomial::from_i64(&[2, -3, 1]));
        assert_eq!(p.saturation_index(5).unwrap(), 2);
        assert_eq!(p.positivity_index(5).unwrap(), 2);
        assert!(p.saturation_index(1).is_err());

        // saturation index <= positivity index, spot family
        for coeffs in [[3, -3, 1], [2, -3, 1], [0, -1, 1], [-6, 1, 0]] {
            let f = QuasiPolynomial::from_polynomial(RationalPolynomial::from_i64(&coeffs));
            assert!(f.saturation_index(20).unwrap() <= f.positivity_index(20).unwrap());
        }
    }

    #[test]
    fn generating_functions() {
        let one = QuasiPolynomial::constant_one();
        let f = one.generating_function();
        assert_eq!(f.numerator(), &RationalPolynomial::one());
        assert_eq!(f.denominator(), &RationalPolynomial::from_i64(&[1, -1]));

        let n = QuasiPolynomial::from_polynomial(RationalPolynomial::from_i64(&[0, 1]));
        let f = n.generating_function();
        // t / (1-t)^2
        assert_eq!(f.numerator(), &RationalPolynomial::from_i64(&[0, 1]));
        assert_eq!(f.denominator(), &RationalPolynomial::from_i64(&[1, -2, 1]));

        // 1 / ((1-t)(1-t^2)) for the two-part counter, by 12-term series.
        let f = two_part_counter().generating_function();
        let expect = RationalFunction::new(
            RationalPolynomial::one(),
            RationalPolynomial::from_i64(&[1, -1]).mul(&RationalPolynomial::from_i64(&[1, 0, -1])),
        );
        assert_eq!(f, expect);
        let series = series_coefficients(&f, 12);
        for (n, c) in series.iter().enumerate() {
            assert_eq!(*c, two_part_counter().eval(n as u64));
        }
    }

    #[test]
    fn series_matches_eval_property() {
        // series_coefficients(generating_function(f), N)[n] = f(n)
        let candidates = vec![
            QuasiPolynomial::zero(),
            two_part_counter(),
            QuasiPolynomial::new(vec![
                RationalPolynomial::from_i64(&[0, 0, 2]),
                RationalPolynomial::zero(),
                RationalPolynomial::from_i64(&[5]),
            ]),
        ];
        for f in candidates {
            let l = f.period();
            let d = f.degree().unwrap_or(0);
            let n_max = 3 * l * (d + 1) + 3;
            let series = series_coefficients(&f.generating_function(), n_max);
            for n in 0..=n_max {
                assert_eq!(series[n], f.eval(n as u64), "mismatch at {n}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let f = two_part_counter();
        let v = f.to_json();
        assert_eq!(QuasiPolynomial::from_json(&v).unwrap(), f);
    }
}
