//! Univariate polynomials with rational coefficients.

use num_traits::{One, Signed, Zero};

use super::{Int, Rat};

/// Coefficients in ascending degree, trailing zeros trimmed. The zero
/// polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rat>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RationalPolynomial::new(vec![c])
    }

    /// The monomial c * t^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        RationalPolynomial::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RationalPolynomial::new(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, n: &Int) -> Rat {
        self.eval(&Rat::from_integer(n.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = RationalPolynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(div.coeffs.len()) + 1];
        let dlead = div.leading().unwrap().clone();
        let ddeg = div.degree().unwrap();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().unwrap() / &dlead;
            let shift = rdeg - ddeg;
            quo[shift] = factor.clone();
            rem = rem.sub(&div.mul(&RationalPolynomial::monomial(factor, shift)));
        }
        (RationalPolynomial::new(quo), rem)
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(div);
        r.is_zero().then_some(q)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.recip();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Substitution n -> n + s, by Horner evaluation at (t + s).
    pub fn compose_shift(&self, s: &Rat) -> Self {
        let shift = RationalPolynomial::new(vec![s.clone(), Rat::one()]);
        let mut acc = RationalPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&RationalPolynomial::constant(c.clone()));
        }
        acc
    }

    /// True when the polynomial is positive at every integer n >= 1.
    /// Checks the sign of the leading coefficient and evaluates at every
    /// integer up to the Cauchy root bound, beyond which the sign is fixed.
    pub fn positive_on_positive_integers(&self) -> bool {
        let Some(lead) = self.leading() else {
            return false; // zero polynomial
        };
        if lead.is_negative() {
            return false;
        }
        let bound = self.cauchy_root_bound();
        let mut n = Int::one();
        while Rat::from_integer(n.clone()) <= bound {
            if !self.eval_int(&n).is_positive() {
                return false;
            }
            n += 1;
        }
        // One point past the bound for the degree-0 edge case.
        self.eval_int(&n).is_positive()
    }

    /// 1 + max |a_i| / |a_d|: every real root has absolute value below this.
    fn cauchy_root_bound(&self) -> Rat {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rat::zero);
        Rat::one() + max / lead
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl std::fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{}", super::format_rat(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", super::format_rat(&a))?;
                    }
                    if k == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
