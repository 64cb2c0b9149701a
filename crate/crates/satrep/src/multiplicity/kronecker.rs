//! Kronecker coefficients by three independent algorithms.
//!
//! 1. Character inner product over the symmetric group (reference; cost
//!    grows with the number of partitions of m).
//! 2. Two-row contents: alternating sums of bounded-height Kostka
//!    numbers over the one free parameter of a GL_2 x GL_2 weight fiber;
//!    scales to part sizes in the thousands.
//! 3. Branching through the tensor embedding GL_2 x GL_2 in GL_4, with
//!    the alternating weight-multiplicity formula evaluated over the full
//!    weight list of the big representation.

use num_traits::{Signed, Zero};

use crate::combinat::{
    kostka, kostka_bounded_height, partitions_of, CharacterTable, CycleType, Partition,
};
use crate::exact::{Int, Rat};
use crate::{Error, Result};

/// g(lambda, mu, pi) = (1/m!) sum_rho |C_rho| chi_lambda chi_mu chi_pi
/// = sum over cycle types of the character product divided by the
/// centralizer order.
pub fn kronecker_char(
    lambda: &Partition,
    mu: &Partition,
    pi: &Partition,
    guard: u64,
) -> Result<Int> {
    let m = lambda.size();
    if mu.size() != m {
        return Err(Error::SizeMismatch(m, mu.size()));
    }
    if pi.size() != m {
        return Err(Error::SizeMismatch(m, pi.size()));
    }
    if m > guard {
        return Err(Error::SizeGuardExceeded { got: m, guard });
    }
    let mut table = CharacterTable::new();
    let mut acc = Rat::zero();
    for rho in partitions_of(m) {
        let ct = CycleType(rho);
        let a = table.value(lambda, &ct)?;
        let b = table.value(mu, &ct)?;
        let c = table.value(pi, &ct)?;
        acc += Rat::new(a * b * c, ct.centralizer_order());
    }
    debug_assert!(acc.is_integer(), "inner product of characters is integral");
    let g = acc.to_integer();
    debug_assert!(!g.is_negative(), "multiplicities are nonnegative");
    Ok(g)
}

/// Sum of GL_4 weight multiplicities of `pi` over the fiber of contents
/// restricting to the GL_2 x GL_2 weight ((p, q), (r, s)): contents are
/// (j, p - j, r - j, q - r + j) with one free parameter j.
fn fiber_weight_sum(pi: &Partition, p: i64, q: i64, r: i64, s: i64) -> Int {
    debug_assert_eq!(p + q, r + s);
    if p < 0 || q < 0 || r < 0 || s < 0 {
        return Int::from(0);
    }
    let mut acc = Int::from(0);
    let lo = 0.max(r - q);
    let hi = p.min(r);
    for j in lo..=hi {
        let content = [
            j as u64,
            (p - j) as u64,
            (r - j) as u64,
            (q - r + j) as u64,
        ];
        acc += kostka_bounded_height(pi, &content);
    }
    acc
}

/// Kronecker coefficient for two-row lambda, mu and pi of height at most
/// four, as the multiplicity of V_lambda x V_mu in the restriction of
/// V_pi(GL_4) to GL_2 x GL_2: four signed fiber sums, one per Weyl group
/// element of GL_2 x GL_2.
pub fn kronecker_two_row(lambda: &Partition, mu: &Partition, pi: &Partition) -> Result<Int> {
    if lambda.height() > 2 {
        return Err(Error::HeightViolation {
            got: lambda.height(),
            bound: 2,
        });
    }
    if mu.height() > 2 {
        return Err(Error::HeightViolation {
            got: mu.height(),
            bound: 2,
        });
    }
    if pi.height() > 4 {
        return Err(Error::HeightViolation {
            got: pi.height(),
            bound: 4,
        });
    }
    let m = lambda.size();
    if mu.size() != m {
        return Err(Error::SizeMismatch(m, mu.size()));
    }
    if pi.size() != m {
        return Err(Error::SizeMismatch(m, pi.size()));
    }
    let (l1, l2) = (lambda.part(0) as i64, lambda.part(1) as i64);
    let (m1, m2) = (mu.part(0) as i64, mu.part(1) as i64);
    let mut g = Int::from(0);
    // rho - w(rho) shifts the target by (1,-1) on each reflected factor.
    for (e1, e2) in [(0i64, 0i64), (1, 0), (0, 1), (1, 1)] {
        let term = fiber_weight_sum(pi, l1 + e1, l2 - e1, m1 + e2, m2 - e2);
        if (e1 + e2) % 2 == 0 {
            g += term;
        } else {
            g -= term;
        }
    }
    debug_assert!(!g.is_negative());
    Ok(g)
}

/// Supported subgroup embeddings for `klimyk_branching`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Embedding {
    /// GL_a x GL_b inside GL_{ab} acting on the tensor product of the
    /// defining representations.
    TensorGl2Gl2,
}

/// Multiplicity of V_{pi_left} x V_{pi_right}(GL_2 x GL_2) in the
/// restriction of V_lambda(GL_4) through the tensor embedding.
///
/// Alternating sum over the Weyl group of the subgroup of total weight
/// multiplicities: for each of the four sign terms the inner sum runs
/// over the finitely many weights of V_lambda restricting to the shifted
/// target, with weight multiplicities given by Kostka numbers via the
/// generic chain DP (not the bounded-height counter, so this route stays
/// independent of `kronecker_two_row`).
pub fn klimyk_branching(
    m: usize,
    embedding: Embedding,
    lambda: &Partition,
    pi_pair: (&Partition, &Partition),
) -> Result<Int> {
    let Embedding::TensorGl2Gl2 = embedding;
    if m != 4 {
        return Err(Error::UnsupportedEmbedding(format!(
            "tensor embedding needs rank 4, got {m}"
        )));
    }
    if lambda.height() > 4 {
        return Err(Error::HeightViolation {
            got: lambda.height(),
            bound: 4,
        });
    }
    let (pl, pr) = pi_pair;
    if pl.size() != pr.size() {
        return Err(Error::SizeMismatch(pl.size(), pr.size()));
    }
    if pl.size() != lambda.size() {
        return Err(Error::SizeMismatch(pl.size(), lambda.size()));
    }
    if pl.height() > 2 || pr.height() > 2 {
        return Err(Error::HeightViolation {
            got: pl.height().max(pr.height()),
            bound: 2,
        });
    }
    let size = lambda.size();

    // Weight multiplicities of V_lambda, bucketed by restriction: a GL_4
    // weight (c1,c2,c3,c4) restricts to ((c1+c2, c3+c4), (c1+c3, c2+c4)).
    let mut restricted: std::collections::HashMap<(i64, i64, i64, i64), Int> =
        std::collections::HashMap::new();
    for c1 in 0..=size {
        for c2 in 0..=size - c1 {
            for c3 in 0..=size - c1 - c2 {
                let c4 = size - c1 - c2 - c3;
                let mult = kostka(lambda, &[c1, c2, c3, c4]);
                if mult.is_zero() {
                    continue;
                }
                let key = (
                    (c1 + c2) as i64,
                    (c3 + c4) as i64,
                    (c1 + c3) as i64,
                    (c2 + c4) as i64,
                );
                *restricted.entry(key).or_insert_with(Int::zero) += mult;
            }
        }
    }

    let (p1, p2) = (pl.part(0) as i64, pl.part(1) as i64);
    let (q1, q2) = (pr.part(0) as i64, pr.part(1) as i64);
    let mut total = Int::from(0);
    for (e1, e2) in [(0i64, 0i64), (1, 0), (0, 1), (1, 1)] {
        let key = (p1 + e1, p2 - e1, q1 + e2, q2 - e2);
        if let Some(v) = restricted.get(&key) {
            if (e1 + e2) % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
    }
    debug_assert!(!total.is_negative());
    Ok(total)
}

/// Kronecker coefficient through the branching route; heights as in
/// `kronecker_two_row`.
pub fn kronecker_klimyk(lambda: &Partition, mu: &Partition, pi: &Partition) -> Result<Int> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    klimyk_branching(4, Embedding::TensorGl2Gl2, pi, (lambda, mu))
}
