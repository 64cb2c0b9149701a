//! Exact scalar, matrix, and polynomial arithmetic.
//!
//! Everything downstream counts integer points or manipulates counting
//! functions, so no rounding is tolerated anywhere: scalars are
//! arbitrary-precision integers and normalized rationals.

mod matrix;
mod poly;
mod ratfun;
mod snf;

pub use matrix::{solve_rational, IntMatrix, LinearSolution, RationalMatrix};
pub use poly::RationalPolynomial;
pub use ratfun::{series_coefficients, RationalFunction};
pub use snf::{smith_normal_form, SmithDecomposition};

use crate::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Normalized rational: positive denominator, gcd(num, den) = 1. The
/// canonical form is enforced by construction, so equality is structural.
pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Int = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
    let den: Int = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {den:?}")))?;
    if den == Int::from(0) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
