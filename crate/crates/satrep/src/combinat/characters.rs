//! Symmetric-group characters, two independent ways.
//!
//! The reference algorithm is the Murnaghan-Nakayama recursion in the
//! beta-number (abacus) encoding. The cross-check extracts the character
//! as a monomial coefficient of Delta(x) * prod_j P_j(x)^{i_j}, where
//! Delta is the Vandermonde product and P_j the j-th power sum. The two
//! derivations share no code, so agreement is a strong correctness test.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exact::Int;
use crate::{Error, Result};

use super::{CycleType, Partition};

/// chi_lambda evaluated on the class rho, by Murnaghan-Nakayama.
pub fn sn_character(lambda: &Partition, rho: &CycleType) -> Result<Int> {
    CharacterTable::new().value(lambda, rho)
}

/// Memo shared across many (shape, class) queries of the same or
/// different sizes: cycle lists are weakly decreasing, so suffixes are
/// canonical and the recursion states coincide across queries. The table
/// is invocation-local wherever it is used, keeping call sites pure.
pub struct CharacterTable {
    memo: HashMap<(Vec<u64>, Vec<u64>), Int>,
}

impl Default for CharacterTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CharacterTable {
    pub fn new() -> Self {
        CharacterTable {
            memo: HashMap::new(),
        }
    }

    pub fn value(&mut self, lambda: &Partition, rho: &CycleType) -> Result<Int> {
        if lambda.size() != rho.group_size() {
            return Err(Error::SizeMismatch(lambda.size(), rho.group_size()));
        }
        Ok(mn_rec(lambda.parts().to_vec(), rho.0.parts(), &mut self.memo))
    }
}

fn mn_rec(
    lambda: Vec<u64>,
    cycles: &[u64],
    memo: &mut HashMap<(Vec<u64>, Vec<u64>), Int>,
) -> Int {
    if cycles.is_empty() {
        return Int::from(if lambda.is_empty() { 1 } else { 0 });
    }
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = cycles[0];
    // Beta numbers: beta_i = lambda_i + (len - 1 - i), strictly
    // decreasing. Removing a border strip of length r is subtracting r
    // from one beta number so that the result is a fresh nonnegative
    // value; the sign is (-1)^(number of beta values jumped over).
    let len = lambda.len();
    let beta: Vec<i64> = (0..len)
        .map(|i| lambda[i] as i64 + (len - 1 - i) as i64)
        .collect();
    let mut total = Int::from(0);
    for i in 0..len {
        let target = beta[i] - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let mut new_beta: Vec<i64> = beta
            .iter()
            .enumerate()
            .map(|(k, &b)| if k == i { target } else { b })
            .collect();
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda: Vec<u64> = new_beta
            .iter()
            .enumerate()
            .map(|(k, &b)| (b - (len - 1 - k) as i64) as u64)
            .filter(|&p| p > 0)
            .collect();
        let sub = mn_rec(new_lambda, &cycles[1..], memo);
        if jumped % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// chi_lambda on the class rho as the coefficient of
/// x^(lambda_1 + k - 1, lambda_2 + k - 2, ..., lambda_k) in
/// Delta(x) * prod_j (x_1^j + ... + x_k^j)^{i_j}, with k the height.
pub fn frobenius_character(lambda: &Partition, rho: &CycleType) -> Result<Int> {
    let m = rho.group_size();
    if lambda.size() != m {
        return Err(Error::SizeMismatch(lambda.size(), m));
    }
    if lambda.is_empty() {
        return Ok(Int::from(1)); // S_0: empty product
    }
    let k = lambda.height();
    let target: Vec<u64> = (0..k)
        .map(|i| lambda.part(i) + (k - 1 - i) as u64)
        .collect();

    // Vandermonde as a signed sum over permutations of the staircase.
    let mut poly: HashMap<Vec<u64>, Int> = HashMap::new();
    let staircase: Vec<u64> = (0..k as u64).rev().collect();
    for (perm, sign) in permutations_with_sign(k) {
        let expo: Vec<u64> = (0..k).map(|i| staircase[perm[i]]).collect();
        if within(&expo, &target) {
            *poly.entry(expo).or_insert_with(Int::zero) += Int::from(sign);
        }
    }

    for &j in rho.0.parts() {
        let mut next: HashMap<Vec<u64>, Int> = HashMap::new();
        for (expo, coeff) in &poly {
            for v in 0..k {
                let mut e = expo.clone();
                e[v] += j;
                if within(&e, &target) {
                    *next.entry(e).or_insert_with(Int::zero) += coeff;
                }
            }
        }
        poly = next;
    }

    Ok(poly.remove(&target).unwrap_or_else(Int::zero))
}

/// Exponent-wise comparison: monomials exceeding the target anywhere can
/// never reach it again, so they are pruned as soon as they appear.
fn within(expo: &[u64], target: &[u64]) -> bool {
    expo.iter().zip(target).all(|(e, t)| e <= t)
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            let mut inv = 0;
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..k).collect(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{factorial, partitions_of};

    fn p(parts: &[u64]) -> Partition {
        Partition::from_with_zeros(parts)
    }

    fn ct(parts: &[u64]) -> CycleType {
        CycleType(p(parts))
    }

    #[test]
    fn dimension_of_standard() {
        // chi_(2,1) at the identity = number of standard tableaux = 2.
        assert_eq!(sn_character(&p(&[2, 1]), &ct(&[1, 1, 1])).unwrap(), Int::from(2));
    }

    #[test]
    fn s3_character_table() {
        // Verified against orthogonality by the table test below; the
        // single value pinned here comes from the 3-cycle column.
        assert_eq!(sn_character(&p(&[2, 1]), &ct(&[3])).unwrap(), Int::from(-1));
        assert_eq!(sn_character(&p(&[3]), &ct(&[3])).unwrap(), Int::from(1));
        assert_eq!(sn_character(&p(&[3]), &ct(&[2, 1])).unwrap(), Int::from(1));
        assert_eq!(sn_character(&p(&[1, 1, 1]), &ct(&[2, 1])).unwrap(), Int::from(-1));
    }

    #[test]
    fn trivial_representation_is_one_everywhere() {
        for m in 1..=7u64 {
            for rho in partitions_of(m) {
                assert_eq!(
                    sn_character(&p(&[m]), &CycleType(rho)).unwrap(),
                    Int::from(1)
                );
            }
        }
    }

    #[test]
    fn sign_representation() {
        assert_eq!(sn_character(&p(&[1, 1]), &ct(&[2])).unwrap(), Int::from(-1));
        assert_eq!(frobenius_character(&p(&[1, 1]), &ct(&[2])).unwrap(), Int::from(-1));
        // sign of a class = (-1)^(m - number of cycles)
        for rho in partitions_of(6) {
            let sgn = if (6 - rho.height()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                sn_character(&p(&[1, 1, 1, 1, 1, 1]), &CycleType(rho)).unwrap(),
                Int::from(sgn)
            );
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(sn_character(&p(&[2, 1]), &ct(&[2])).is_err());
        assert!(frobenius_character(&p(&[2]), &ct(&[3])).is_err());
    }

    #[test]
    fn s4_value_from_orthogonality_oracle() {
        // chi_(2,2) at (2,2): the orthogonality test pins the whole
        // table; this value doubles as a quick regression anchor.
        assert_eq!(sn_character(&p(&[2, 2]), &ct(&[2, 2])).unwrap(), Int::from(2));
    }

    #[test]
    fn column_orthogonality() {
        // sum_lambda chi(rho) chi(sigma) = z_rho [rho = sigma].
        for m in 1..=7u64 {
            let classes = partitions_of(m);
            let lambdas = partitions_of(m);
            for rho in &classes {
                for sigma in &classes {
                    let mut acc = Int::from(0);
                    for l in &lambdas {
                        let a = sn_character(l, &CycleType(rho.clone())).unwrap();
                        let b = sn_character(l, &CycleType(sigma.clone())).unwrap();
                        acc += a * b;
                    }
                    let expect = if rho == sigma {
                        CycleType(rho.clone()).centralizer_order()
                    } else {
                        Int::from(0)
                    };
                    assert_eq!(acc, expect, "m {m}, rho {rho}, sigma {sigma}");
                }
            }
        }
    }

    #[test]
    fn frobenius_agrees_with_murnaghan_nakayama() {
        for m in 1..=8u64 {
            for lambda in partitions_of(m) {
                for rho in partitions_of(m) {
                    let ct = CycleType(rho);
                    assert_eq!(
                        frobenius_character(&lambda, &ct).unwrap(),
                        sn_character(&lambda, &ct).unwrap(),
                        "lambda {lambda}, rho {}",
                        ct.0
                    );
                }
            }
        }
    }

    #[test]
    fn dimensions_square_sum_to_group_order() {
        for m in 1..=7u64 {
            let id = CycleType(Partition::new(vec![1; m as usize]));
            let mut acc = Int::from(0);
            for l in partitions_of(m) {
                let d = sn_character(&l, &id).unwrap();
                acc += &d * &d;
            }
            assert_eq!(acc, factorial(m));
        }
    }
}
