//! Plethysm of Schur functions, two independent ways.
//!
//! Route 1 works in the power-sum basis: s_lambda[s_mu] expands through
//! symmetric-group characters and the substitution rule p_r[p_s] = p_rs,
//! and the Schur coefficients come back out through characters.
//!
//! Route 2 substitutes tableau monomials into the Schur polynomial: the
//! alphabet is one monomial t(T) per semistandard tableau T of shape mu
//! in k variables, S_lambda of that alphabet is assembled from its power
//! sums (Newton's identities plus the Jacobi-Trudi determinant), and the
//! monomial-basis coefficients are converted to Schur coefficients by
//! inverting the unitriangular Kostka matrix.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};

use crate::combinat::{kostka, partitions_of, CharacterTable, CycleType, Partition};
use crate::exact::{Int, Rat};
use crate::{Error, Result};

/// Expansion in the Schur basis; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Int>,
}

impl SchurExpansion {
    pub fn coefficient(&self, pi: &Partition) -> Int {
        self.terms.get(pi).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Int)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, pi: Partition, c: Int) {
        if !c.is_zero() {
            self.terms.insert(pi, c);
        }
    }
}

/// Multiset union of two partitions (product of power sums).
fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u64> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts)
}

/// s_lambda[s_mu] in the Schur basis via the power-sum route.
pub fn plethysm_p_basis(lambda: &Partition, mu: &Partition, guard: u64) -> Result<SchurExpansion> {
    let m = lambda.size() * mu.size();
    if m > guard {
        return Err(Error::SizeGuardExceeded { got: m, guard });
    }
    if m == 0 {
        let mut out = SchurExpansion::default();
        out.insert(Partition::empty(), Int::from(1));
        return Ok(out);
    }

    let mut table = CharacterTable::new();

    // s_mu in the p basis: coefficient of p_sigma is chi_mu(sigma)/z_sigma.
    let mu_p: Vec<(Partition, Rat)> = partitions_of(mu.size())
        .into_iter()
        .map(|sigma| {
            let ct = CycleType(sigma.clone());
            let chi = table.value(mu, &ct)?;
            Ok((sigma, Rat::new(chi, ct.centralizer_order())))
        })
        .collect::<Result<_>>()?;

    // p_r[s_mu]: scale every part of sigma by r.
    let p_r_of_mu = |r: u64| -> Vec<(Partition, Rat)> {
        mu_p.iter()
            .map(|(sigma, c)| (sigma.scale(r), c.clone()))
            .collect()
    };

    // s_lambda[s_mu] = sum_rho chi_lambda(rho)/z_rho prod_i p_{rho_i}[s_mu].
    let mut total: HashMap<Partition, Rat> = HashMap::new();
    for rho in partitions_of(lambda.size()) {
        let ct = CycleType(rho.clone());
        let chi = table.value(lambda, &ct)?;
        if chi.is_zero() {
            continue;
        }
        let scale = Rat::new(chi, ct.centralizer_order());
        // expand the product over the parts of rho
        let mut acc: HashMap<Partition, Rat> = HashMap::new();
        acc.insert(Partition::empty(), Rat::from_integer(Int::from(1)));
        for &r in rho.parts() {
            let factor = p_r_of_mu(r);
            let mut next: HashMap<Partition, Rat> = HashMap::new();
            for (base, cb) in &acc {
                for (sigma, cs) in &factor {
                    let key = merge_parts(base, sigma);
                    let add = cb * cs;
                    *next.entry(key).or_insert_with(Rat::zero) += add;
                }
            }
            acc = next;
        }
        for (sigma, c) in acc {
            *total.entry(sigma).or_insert_with(Rat::zero) += c * &scale;
        }
    }

    // Back to the Schur basis: a_pi = sum_rho c_rho chi_pi(rho).
    let mut out = SchurExpansion::default();
    for pi in partitions_of(m) {
        let mut a = Rat::zero();
        for (rho, c) in &total {
            if c.is_zero() {
                continue;
            }
            let chi = table.value(&pi, &CycleType(rho.clone()))?;
            a += c * Rat::from_integer(chi);
        }
        debug_assert!(a.is_integer(), "Schur coefficients are integers");
        let a = a.to_integer();
        debug_assert!(!a.is_negative(), "plethysm coefficients are nonnegative");
        out.insert(pi, a);
    }
    Ok(out)
}

// --- Route 2: tableau-monomial substitution -------------------------

/// Exponent vector in k variables packed 8 bits per variable; guards
/// keep every exponent far below 256.
type Mono = u128;

fn mono_add(a: Mono, b: Mono) -> Mono {
    a + b
}

fn mono_scale(a: Mono, r: u64) -> Mono {
    let mut out: Mono = 0;
    let mut rest = a;
    let mut shift = 0;
    while rest != 0 {
        let e = (rest & 0xff) as u64;
        out |= ((e * r) as Mono) << shift;
        rest >>= 8;
        shift += 8;
    }
    out
}

fn mono_exponents(a: Mono, k: usize) -> Vec<u64> {
    (0..k).map(|i| ((a >> (8 * i)) & 0xff) as u64).collect()
}

/// Multiply-fold hasher for packed exponent keys; the default hasher
/// dominates the profile in the product loops.
#[derive(Default, Clone)]
struct MonoHasher(u64);

impl std::hash::Hasher for MonoHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("monomial keys hash through write_u128");
    }

    fn write_u128(&mut self, v: u128) {
        let lo = v as u64;
        let hi = (v >> 64) as u64;
        let mut x = lo ^ hi.rotate_left(31);
        x = x.wrapping_mul(0x9e3779b97f4a7c15);
        x ^= x >> 29;
        x = x.wrapping_mul(0xbf58476d1ce4e5b9);
        x ^= x >> 32;
        self.0 = x;
    }
}

type MonoBuild = std::hash::BuildHasherDefault<MonoHasher>;

/// Integer-coefficient symmetric polynomial on packed exponent keys.
/// Everything this route touches is a count or a signed sum of counts,
/// so i128 coefficients suffice and stay cheap.
type SymPoly = HashMap<Mono, i128, MonoBuild>;

fn sym_mul(a: &SymPoly, b: &SymPoly) -> SymPoly {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out = SymPoly::with_capacity_and_hasher(large.len(), MonoBuild::default());
    for (ma, ca) in small {
        if *ca == 0 {
            continue;
        }
        for (mb, cb) in large {
            let m = mono_add(*ma, *mb);
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out
}

fn sym_add_assign(a: &mut SymPoly, b: &SymPoly, scale: i128) {
    for (m, c) in b {
        *a.entry(*m).or_insert(0) += c * scale;
    }
}

/// All semistandard tableaux of shape mu with entries in 1..=k, each
/// returned as its content monomial.
fn tableau_monomials(mu: &Partition, k: usize) -> Vec<Mono> {
    let mut out = Vec::new();
    let rows = mu.height();
    let mut tableau: Vec<Vec<u64>> = (0..rows)
        .map(|r| vec![0; mu.part(r) as usize])
        .collect();
    fn rec(
        mu: &Partition,
        k: u64,
        r: usize,
        c: usize,
        tableau: &mut Vec<Vec<u64>>,
        out: &mut Vec<Mono>,
    ) {
        if r == tableau.len() {
            let mut m: Mono = 0;
            for row in tableau.iter() {
                for &v in row {
                    m += 1 << (8 * (v - 1));
                }
            }
            out.push(m);
            return;
        }
        let (nr, nc) = if c + 1 < tableau[r].len() {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let left = if c > 0 { tableau[r][c - 1] } else { 1 };
        let above = if r > 0 && c < tableau[r - 1].len() {
            tableau[r - 1][c] + 1
        } else {
            1
        };
        for v in left.max(above)..=k {
            tableau[r][c] = v;
            rec(mu, k, nr, nc, tableau, out);
        }
        tableau[r][c] = 0;
    }
    if rows == 0 {
        out.push(0);
        return out;
    }
    rec(mu, k as u64, 0, 0, &mut tableau, &mut out);
    out
}

/// Variable count that captures the full expansion of s_lambda[s_mu]:
/// every output partition has height at most |lambda| * height(mu),
/// because the plethysm sits inside the |lambda|-fold product of s_mu
/// and product heights add at most.
pub fn plethysm_variable_count(lambda: &Partition, mu: &Partition) -> usize {
    ((lambda.size() as usize) * mu.height()).max(1)
}

/// s_lambda[s_mu] by substituting the tableau monomials of shape mu into
/// the Schur polynomial of lambda, truncated to k variables. Exact for
/// every output partition of height at most k; `plethysm_variable_count`
/// gives a k capturing the whole expansion.
pub fn plethysm_weyl_substitution(
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    guard: u64,
) -> Result<SchurExpansion> {
    let m = lambda.size() * mu.size();
    if m > guard {
        return Err(Error::SizeGuardExceeded { got: m, guard });
    }
    assert!(k <= 16 && m < 128, "packed monomials cap variables and degree");
    if m == 0 {
        let mut out = SchurExpansion::default();
        out.insert(Partition::empty(), Int::from(1));
        return Ok(out);
    }

    let alphabet = tableau_monomials(mu, k);

    // The Jacobi-Trudi determinant only reads h_0 .. h_{lambda_1 + r - 1}.
    let top = (lambda.part(0) as usize + lambda.height()).saturating_sub(1);

    // Power sums of the alphabet: p_i = sum_T t(T)^i.
    let mut power: Vec<SymPoly> = Vec::new();
    for i in 1..=top as u64 {
        let mut p = SymPoly::default();
        for t in &alphabet {
            *p.entry(mono_scale(*t, i)).or_insert(0) += 1;
        }
        power.push(p);
    }

    // Complete homogeneous via Newton: i h_i = sum_{j=1..i} p_j h_{i-j};
    // each h_i is integral, so the division is exact.
    let mut h: Vec<SymPoly> = vec![SymPoly::default()];
    h[0].insert(0, 1);
    for i in 1..=top {
        let mut acc = SymPoly::default();
        for j in 1..=i {
            let prod = sym_mul(&power[j - 1], &h[i - j]);
            sym_add_assign(&mut acc, &prod, 1);
        }
        let mut hi = SymPoly::with_capacity_and_hasher(acc.len(), MonoBuild::default());
        for (m, c) in acc {
            if c != 0 {
                debug_assert_eq!(c % i as i128, 0, "h_i has integer coefficients");
                hi.insert(m, c / i as i128);
            }
        }
        h.push(hi);
    }

    // Jacobi-Trudi: S_lambda = det( h_{lambda_i - i + j} ), size = height.
    let r = lambda.height();
    let det = jacobi_trudi_det(&h, lambda, r);

    // Collect the monomial-basis coefficients: the coefficient of m_beta
    // is the coefficient of the dominant (sorted) exponent vector.
    let mut mcoeff: HashMap<Partition, i128> = HashMap::new();
    for (mono, c) in &det {
        if *c == 0 {
            continue;
        }
        let mut expo = mono_exponents(*mono, k);
        expo.sort_unstable_by(|a, b| b.cmp(a));
        if mono_from_exponents(&expo) == *mono {
            mcoeff.insert(Partition::from_with_zeros(&expo), *c);
        }
    }

    // Triangular change of basis: M_beta = sum_{pi >= beta} a_pi K_{pi,beta},
    // solved from the lex-largest partition downward (K is unitriangular
    // with respect to dominance, and dominance refines reverse lex).
    let mut parts: Vec<Partition> = partitions_of(m)
        .into_iter()
        .filter(|p| p.height() <= k)
        .collect();
    parts.sort();
    parts.reverse(); // lex decreasing
    let mut a: BTreeMap<Partition, Int> = BTreeMap::new();
    for beta in &parts {
        let mut val = Int::from(mcoeff.get(beta).copied().unwrap_or(0));
        for (pi, apai) in &a {
            if apai.is_zero() || pi == beta {
                continue;
            }
            let kk = kostka(pi, beta.parts());
            if !kk.is_zero() {
                val -= apai * kk;
            }
        }
        a.insert(beta.clone(), val);
    }

    let mut out = SchurExpansion::default();
    for (pi, c) in a {
        out.insert(pi, c);
    }
    Ok(out)
}

fn mono_from_exponents(expo: &[u64]) -> Mono {
    let mut m: Mono = 0;
    for (i, &e) in expo.iter().enumerate() {
        m |= (e as Mono) << (8 * i);
    }
    m
}

/// Determinant of the r x r Jacobi-Trudi matrix by a column-mask DP:
/// rows are processed in order and dp[mask] accumulates the signed sum
/// over assignments of the processed rows to the columns of `mask`.
/// Partial products are shared between permutations, and a transition is
/// taken only when the remaining rows can still be completed, so nothing
/// is multiplied that a later zero entry would discard.
fn jacobi_trudi_det(h: &[SymPoly], lambda: &Partition, r: usize) -> SymPoly {
    // entry (i, j) = h_{lambda_i - i + j}, 0-based rows and columns
    let entry = |i: usize, j: usize| -> Option<&SymPoly> {
        let d = lambda.part(i) as i64 - i as i64 + j as i64;
        if d < 0 {
            None
        } else {
            h.get(d as usize)
        }
    };

    // completable[row][mask]: rows row.. can fill the columns outside mask
    let full: u32 = (1u32 << r) - 1;
    let mut completable = vec![vec![false; 1usize << r]; r + 1];
    completable[r][full as usize] = true;
    for row in (0..r).rev() {
        for mask in 0..=full {
            if mask.count_ones() as usize != row {
                continue;
            }
            completable[row][mask as usize] = (0..r).any(|c| {
                mask & (1 << c) == 0
                    && entry(row, c).is_some()
                    && completable[row + 1][(mask | (1 << c)) as usize]
            });
        }
    }

    let mut dp: HashMap<u32, SymPoly> = HashMap::new();
    let mut one = SymPoly::default();
    one.insert(0, 1);
    dp.insert(0, one);
    for row in 0..r {
        let mut next: HashMap<u32, SymPoly> = HashMap::new();
        for (mask, acc) in dp {
            if acc.is_empty() {
                continue;
            }
            for c in 0..r {
                let bit = 1u32 << c;
                if mask & bit != 0 || !completable[row + 1][(mask | bit) as usize] {
                    continue;
                }
                let Some(e) = entry(row, c) else { continue };
                if e.is_empty() {
                    continue;
                }
                // parity of the inversions added by this placement
                let sign: i128 = if (mask >> (c + 1)).count_ones() % 2 == 0 {
                    1
                } else {
                    -1
                };
                let prod = sym_mul(&acc, e);
                let slot = next.entry(mask | bit).or_default();
                sym_add_assign(slot, &prod, sign);
            }
        }
        dp = next;
    }
    dp.remove(&full).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_with_zeros(parts)
    }

    fn coeffs(e: &SchurExpansion) -> Vec<(String, String)> {
        e.terms()
            .map(|(p, c)| (p.to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn square_of_two() {
        // brute-force monomial oracle (4 variables) gives
        // s_2[s_2] = s_4 + s_{2,2}
        let e = plethysm_p_basis(&p(&[2]), &p(&[2]), 16).unwrap();
        assert_eq!(e.coefficient(&p(&[4])), Int::from(1));
        assert_eq!(e.coefficient(&p(&[2, 2])), Int::from(1));
        assert_eq!(e.coefficient(&p(&[3, 1])), Int::from(0));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn identity_plethysm() {
        for mu in [p(&[3]), p(&[2, 1]), p(&[1, 1, 1])] {
            let e = plethysm_p_basis(&p(&[1]), &mu, 16).unwrap();
            assert_eq!(e.len(), 1);
            assert_eq!(e.coefficient(&mu), Int::from(1));
        }
        let e = plethysm_weyl_substitution(&p(&[1]), &p(&[1]), 2, 16).unwrap();
        assert_eq!(e.coefficient(&p(&[1])), Int::from(1));
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn two_of_one_one() {
        // brute-force oracle: s_2[s_{1,1}] = s_{1,1,1,1} + s_{2,2}
        let e = plethysm_p_basis(&p(&[2]), &p(&[1, 1]), 16).unwrap();
        assert_eq!(e.coefficient(&p(&[1, 1, 1, 1])), Int::from(1));
        assert_eq!(e.coefficient(&p(&[2, 2])), Int::from(1));
        assert_eq!(e.len(), 2, "{:?}", coeffs(&e));
    }

    #[test]
    fn exterior_square_of_sym2() {
        // e_2[h_2] = s_{3,1}
        let e = plethysm_p_basis(&p(&[1, 1]), &p(&[2]), 16).unwrap();
        assert_eq!(e.coefficient(&p(&[3, 1])), Int::from(1));
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn substitution_route_matches_p_basis() {
        // exhaustive over small pairs; the deeper sweep runs in the
        // acceptance suite
        for (l, m) in [
            (vec![2], vec![2]),
            (vec![1, 1], vec![2]),
            (vec![2], vec![1, 1]),
            (vec![1, 1], vec![1, 1]),
            (vec![3], vec![2]),
            (vec![2, 1], vec![2]),
            (vec![2], vec![3]),
            (vec![2], vec![2, 1]),
        ] {
            let lambda = p(&l);
            let mu = p(&m);
            let a = plethysm_p_basis(&lambda, &mu, 16).unwrap();
            let k = plethysm_variable_count(&lambda, &mu);
            let b = plethysm_weyl_substitution(&lambda, &mu, k, 16).unwrap();
            assert_eq!(a, b, "lambda {lambda}, mu {mu}");
            // the loose variable count gives the same expansion
            let full = (lambda.size() * mu.size()) as usize;
            if full <= 8 {
                let c = plethysm_weyl_substitution(&lambda, &mu, full, 16).unwrap();
                assert_eq!(a, c, "lambda {lambda}, mu {mu} at k = {full}");
            }
        }
    }

    #[test]
    fn truncation_drops_tall_partitions_only() {
        // with k = 2 the substitution route sees only height <= 2 terms
        let full = plethysm_p_basis(&p(&[2]), &p(&[1, 1]), 16).unwrap();
        let trunc = plethysm_weyl_substitution(&p(&[2]), &p(&[1, 1]), 2, 16).unwrap();
        for (pi, c) in full.terms() {
            if pi.height() <= 2 {
                assert_eq!(trunc.coefficient(pi), *c);
            }
        }
        for (pi, _) in trunc.terms() {
            assert!(pi.height() <= 2);
        }
    }

    #[test]
    fn guard_rejects_large_inputs() {
        assert!(matches!(
            plethysm_p_basis(&p(&[5]), &p(&[5]), 16),
            Err(Error::SizeGuardExceeded { got: 25, guard: 16 })
        ));
    }

    #[test]
    fn dimension_identity() {
        // sum_pi a_pi dim V_pi(GL_k) = dim V_lambda(GL_d), d = dim V_mu(GL_k)
        use crate::combinat::weyl_dim_poly;
        use crate::exact::rat_int;
        let one = rat_int(1);
        let cases = [
            (vec![2u64], vec![2u64], 2usize),
            (vec![2], vec![2], 3),
            (vec![1, 1], vec![2, 1], 2),
            (vec![3], vec![1, 1], 3),
        ];
        for (l, m, k) in cases {
            let lambda = p(&l);
            let mu = p(&m);
            let e = plethysm_p_basis(&lambda, &mu, 16).unwrap();
            let d_mu = weyl_dim_poly(k, &mu).unwrap().eval(&one).to_integer();
            let d = usize::try_from(u64::try_from(&d_mu).unwrap()).unwrap();
            let big_dim = weyl_dim_poly(d, &lambda).unwrap().eval(&one);
            let mut acc = Rat::zero();
            for (pi, c) in e.terms() {
                if pi.height() <= k {
                    acc += weyl_dim_poly(k, pi).unwrap().eval(&one) * Rat::from_integer(c.clone());
                }
            }
            assert_eq!(acc, big_dim, "lambda {lambda} mu {mu} k {k}");
        }
    }
}
