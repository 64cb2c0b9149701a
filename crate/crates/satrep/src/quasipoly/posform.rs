//! Positive presentations of rational generating functions.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{Int, Rat, RationalFunction, RationalPolynomial};
use crate::{Error, Result};

/// Presentation F(t) = (h_0 + h_1 t + ... + h_d t^d) / prod (1 - t^a)^m
/// with h_0 = 1, all h_i nonnegative integers, and the multiplicities
/// summing to degree(f) + 1. The modular index is the largest a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveForm {
    pub numerator_h: Vec<Int>,
    /// (a, multiplicity) pairs with strictly increasing a.
    pub denominator_factors: Vec<(u64, u32)>,
}

impl PositiveForm {
    pub fn modular_index(&self) -> u64 {
        self.denominator_factors
            .iter()
            .map(|&(a, _)| a)
            .max()
            .unwrap_or(1)
    }

    /// True when some denominator factor is (1 - t): such a form forces
    /// strict saturation of the underlying quasi-polynomial.
    pub fn has_unit_factor(&self) -> bool {
        self.denominator_factors.iter().any(|&(a, _)| a == 1)
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let num = RationalPolynomial::new(
            self.numerator_h
                .iter()
                .map(|h| Rat::from_integer(h.clone()))
                .collect(),
        );
        let mut den = RationalPolynomial::one();
        for &(a, mult) in &self.denominator_factors {
            let mut f = vec![Rat::zero(); a as usize + 1];
            f[0] = Rat::one();
            f[a as usize] = -Rat::one();
            den = den.mul(&RationalPolynomial::new(f).pow(mult as usize));
        }
        RationalFunction::new(num, den)
    }
}

/// Searches for a positive form of `f` with sum of multiplicities
/// `degree + 1` and every factor exponent a <= `max_a`.
///
/// Candidate factor multisets are visited in graded lex order (total sum
/// of the exponents first, then lexicographic on the ascending tuple), so
/// the returned witness is deterministic. For each candidate the product
/// h(t) = F(t) * prod (1 - t^a)^m is formed; the candidate succeeds when
/// h is a polynomial with h_0 = 1 and nonnegative integer coefficients.
pub fn positive_form_search(
    f: &RationalFunction,
    degree: usize,
    max_a: u64,
) -> Option<PositiveForm> {
    if f.is_zero() {
        return None;
    }
    let k = degree + 1;
    let mut candidates: Vec<Vec<u64>> = Vec::new();
    collect_multisets(k, 1, max_a, &mut Vec::new(), &mut candidates);
    candidates.sort_by_key(|c| (c.iter().sum::<u64>(), c.clone()));

    for tuple in candidates {
        let mut prod = RationalPolynomial::one();
        for &a in &tuple {
            let mut coeffs = vec![Rat::zero(); a as usize + 1];
            coeffs[0] = Rat::one();
            coeffs[a as usize] = -Rat::one();
            prod = prod.mul(&RationalPolynomial::new(coeffs));
        }
        // h = numerator * prod / denominator, exactly or not at all.
        let Some(h) = f.numerator().mul(&prod).div_exact(f.denominator()) else {
            continue;
        };
        if h.is_zero() || !h.coeff(0).is_one() {
            continue;
        }
        if !h
            .coeffs()
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
        {
            continue;
        }
        let numerator_h = h.coeffs().iter().map(|c| c.to_integer()).collect();
        let mut denominator_factors: Vec<(u64, u32)> = Vec::new();
        for &a in &tuple {
            match denominator_factors.last_mut() {
                Some((last, mult)) if *last == a => *mult += 1,
                _ => denominator_factors.push((a, 1)),
            }
        }
        return Some(PositiveForm {
            numerator_h,
            denominator_factors,
        });
    }
    None
}

fn collect_multisets(k: usize, min: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if k == 0 {
        out.push(cur.clone());
        return;
    }
    for a in min..=max {
        cur.push(a);
        collect_multisets(k - 1, a, max, cur, out);
        cur.pop();
    }
}

// ---------------------------------------------------------------------
// JSON format: {"h": ["1", ...], "den": [[a, mult], ...]}

#[derive(Serialize, Deserialize)]
struct PositiveFormDto {
    h: Vec<String>,
    den: Vec<(u64, u32)>,
}

impl PositiveForm {
    pub fn to_json(&self) -> serde_json::Value {
        let dto = PositiveFormDto {
            h: self.numerator_h.iter().map(|h| h.to_string()).collect(),
            den: self.denominator_factors.clone(),
        };
        serde_json::to_value(dto).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<PositiveForm> {
        let dto: PositiveFormDto = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("positive form json: {e}")))?;
        let numerator_h = dto
            .h
            .iter()
            .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))))
            .collect::<Result<_>>()?;
        Ok(PositiveForm {
            numerator_h,
            denominator_factors: dto.den,
        })
    }
}
