//! Kostant partition function for the root system A_r.

use std::collections::HashMap;

use crate::exact::Int;

/// Number of ways to write `weight` (in simple-root coordinates) as a sum
/// of positive roots of A_r. The positive roots are
/// alpha_i + alpha_{i+1} + ... + alpha_j for 1 <= i <= j <= r, which have
/// 0/1 coordinate vectors, so nonnegativity of the running remainder
/// bounds every multiplicity. Roots are consumed in a fixed order; the
/// count for a remainder is memoized.
pub fn kostant_partition(rank: usize, weight: &[i64]) -> Int {
    assert_eq!(weight.len(), rank, "weight must have `rank` coordinates");
    if weight.iter().any(|&w| w < 0) {
        return Int::from(0);
    }
    let roots: Vec<(usize, usize)> = (0..rank)
        .flat_map(|i| (i..rank).map(move |j| (i, j)))
        .collect();
    let mut memo: HashMap<(usize, Vec<i64>), Int> = HashMap::new();
    count(&roots, 0, weight.to_vec(), &mut memo)
}

fn count(
    roots: &[(usize, usize)],
    idx: usize,
    remaining: Vec<i64>,
    memo: &mut HashMap<(usize, Vec<i64>), Int>,
) -> Int {
    if remaining.iter().all(|&w| w == 0) {
        return Int::from(1);
    }
    if idx == roots.len() {
        return Int::from(0);
    }
    let key = (idx, remaining.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (i, j) = roots[idx];
    let max_copies = remaining[i..=j].iter().copied().min().unwrap_or(0);
    let mut total = Int::from(0);
    let mut rem = remaining.clone();
    for copies in 0..=max_copies {
        if copies > 0 {
            for w in rem[i..=j].iter_mut() {
                *w -= 1;
            }
        }
        total += count(roots, idx + 1, rem.clone(), memo);
    }
    memo.insert(key, total.clone());
    total
}
