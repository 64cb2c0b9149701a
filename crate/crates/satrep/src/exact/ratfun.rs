//! Rational functions in one variable, normalized for structural equality.

use num_traits::{One, Zero};

use super::{Rat, RationalPolynomial};

/// numerator / denominator with the two coprime and the denominator
/// normalized to constant term 1. This makes the representative unique,
/// so `==` decides equality of rational functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: RationalPolynomial,
    denominator: RationalPolynomial,
}

impl RationalFunction {
    /// Builds the canonical representative of `num / den`.
    ///
    /// Panics when `den` is zero or when the reduced denominator vanishes
    /// at t = 0 (such a function has no power-series expansion and cannot
    /// arise from a counting sequence).
    pub fn new(num: RationalPolynomial, den: RationalPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                numerator: RationalPolynomial::zero(),
                denominator: RationalPolynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let c0 = den.coeff(0);
        assert!(!c0.is_zero(), "denominator vanishes at t = 0");
        let inv = c0.recip();
        RationalFunction {
            numerator: num.scale(&inv),
            denominator: den.scale(&inv),
        }
    }

    pub fn from_polynomial(p: RationalPolynomial) -> Self {
        RationalFunction::new(p, RationalPolynomial::one())
    }

    pub fn numerator(&self) -> &RationalPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &RationalPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == RationalPolynomial::one() {
            write!(f, "{}", poly_in_t(&self.numerator))
        } else {
            write!(
                f,
                "({}) / ({})",
                poly_in_t(&self.numerator),
                poly_in_t(&self.denominator)
            )
        }
    }
}

fn poly_in_t(p: &RationalPolynomial) -> String {
    format!("{p}").replace('n', "t")
}

/// Taylor coefficients of `F` at t = 0 up to and including t^N.
pub fn series_coefficients(f: &RationalFunction, n: usize) -> Vec<Rat> {
    let num = f.numerator();
    let den = f.denominator();
    let d0 = den.coeff(0);
    debug_assert!(d0.is_one(), "canonical form has den(0) = 1");
    let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = num.coeff(k);
        for j in 1..=k.min(den.coeffs().len().saturating_sub(1)) {
            c -= den.coeff(j) * &out[k - j];
        }
        out.push(c / &d0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn geom() -> RationalPolynomial {
        RationalPolynomial::from_i64(&[1, -1]) // 1 - t
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunction::new(RationalPolynomial::one(), geom());
        assert_eq!(
            series_coefficients(&f, 3),
            vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1)]
        );
    }

    #[test]
    fn binomial_series() {
        let f = RationalFunction::new(RationalPolynomial::one(), geom().mul(&geom()));
        assert_eq!(
            series_coefficients(&f, 4),
            (1..=5).map(rat_int).collect::<Vec<_>>()
        );
    }

    #[test]
    fn long_division_oracle() {
        // (1+t)/(1-t) = 1 + 2t + 2t^2 + ... by long division done by hand.
        let f = RationalFunction::new(RationalPolynomial::from_i64(&[1, 1]), geom());
        assert_eq!(
            series_coefficients(&f, 3),
            vec![rat_int(1), rat_int(2), rat_int(2), rat_int(2)]
        );
    }

    #[test]
    fn normalization_gives_structural_equality() {
        // (2 - 2t^2) / (2 - 2t) reduces to 1 + t.
        let f = RationalFunction::new(
            RationalPolynomial::from_i64(&[2, 0, -2]),
            RationalPolynomial::from_i64(&[2, -2]),
        );
        assert_eq!(f, RationalFunction::from_polynomial(RationalPolynomial::from_i64(&[1, 1])));
        assert_eq!(f.denominator(), &RationalPolynomial::one());
    }

    #[test]
    fn series_satisfies_defining_recurrence() {
        // den * series = num, checked as a convolution identity.
        let num = RationalPolynomial::from_i64(&[1, 3]);
        let den = RationalPolynomial::from_i64(&[1, -1, 0, 2]);
        let f = RationalFunction::new(num, den);
        let n = 20;
        let c = series_coefficients(&f, n);
        for k in 0..=n {
            let mut acc = Rat::zero();
            for j in 0..=k.min(f.denominator().coeffs().len() - 1) {
                acc += f.denominator().coeff(j) * &c[k - j];
            }
            assert_eq!(acc, f.numerator().coeff(k));
        }
    }
}
