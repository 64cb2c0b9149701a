//! Kostka numbers: semistandard tableau counts.

use std::collections::HashMap;

use crate::exact::Int;

use super::Partition;

/// Number of semistandard tableaux of shape `lambda` and the given
/// content (weakly positive entries are not required; impossible content
/// counts as zero).
///
/// A tableau with entries 1..k of content mu is a chain of partitions
/// empty = p0 < p1 < ... < pk = lambda where each step adds a horizontal
/// strip of size mu_i. The count recurses over the chain with memoization
/// on (current shape, level).
pub fn kostka(lambda: &Partition, content: &[u64]) -> Int {
    if content.iter().sum::<u64>() != lambda.size() {
        return Int::from(0);
    }
    let mut memo: HashMap<(Vec<u64>, usize), Int> = HashMap::new();
    count_chains(lambda.parts(), content.len(), content, &mut memo)
}

/// Counts chains building `shape` using content entries `0..level`.
fn count_chains(
    shape: &[u64],
    level: usize,
    content: &[u64],
    memo: &mut HashMap<(Vec<u64>, usize), Int>,
) -> Int {
    if level == 0 {
        return Int::from(if shape.is_empty() { 1 } else { 0 });
    }
    let key = (shape.to_vec(), level);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = content[level - 1];
    let mut total = Int::from(0);
    // Enumerate sub-partitions kappa with shape/kappa a horizontal strip
    // of size `strip`: kappa_i in [max(shape_{i+1}, ...), shape_i] and
    // the removed cells sum to `strip`.
    let mut kappa: Vec<u64> = Vec::with_capacity(shape.len());
    enumerate_strips(shape, 0, strip, &mut kappa, &mut |kappa| {
        let trimmed: Vec<u64> = kappa.iter().copied().filter(|&p| p > 0).collect();
        total += count_chains(&trimmed, level - 1, content, memo);
    });
    memo.insert(key, total.clone());
    total
}

fn enumerate_strips(
    shape: &[u64],
    row: usize,
    remaining: u64,
    kappa: &mut Vec<u64>,
    emit: &mut impl FnMut(&[u64]),
) {
    if row == shape.len() {
        if remaining == 0 {
            emit(kappa);
        }
        return;
    }
    let next = if row + 1 < shape.len() { shape[row + 1] } else { 0 };
    // Horizontal strip: next <= kappa_row <= shape_row, and weak decrease
    // kappa_row >= kappa_{row+1} holds since kappa_{row+1} <= shape_{row+1}.
    let hi = shape[row];
    let lo = next.max(hi.saturating_sub(remaining));
    for k in (lo..=hi).rev() {
        kappa.push(k);
        enumerate_strips(shape, row + 1, remaining - (hi - k), kappa, emit);
        kappa.pop();
    }
}

/// Kostka number for shapes of height at most four, by counting
/// Gelfand-Tsetlin patterns with fixed row sums.
///
/// A pattern has rows lambda (length 4), x (3), y (2), z (1) with
/// interlacing constraints; the content pins z and the row sums of y and
/// x. Two outer loops range over x1, x2 and the y1 interval is counted in
/// closed form, so part sizes in the thousands stay cheap.
pub fn kostka_bounded_height(pi: &Partition, content: &[u64; 4]) -> Int {
    assert!(pi.height() <= 4, "height must be at most 4");
    let l = [
        pi.part(0) as i128,
        pi.part(1) as i128,
        pi.part(2) as i128,
        pi.part(3) as i128,
    ];
    let s1 = content[0] as i128;
    let s2 = s1 + content[1] as i128;
    let s3 = s2 + content[2] as i128;
    let total: i128 = s3 + content[3] as i128;
    if total != l.iter().sum::<i128>() {
        return Int::from(0);
    }
    let mut count: i128 = 0;
    for x1 in l[1]..=l[0] {
        for x2 in l[2]..=l[1].min(s3 - x1) {
            let x3 = s3 - x1 - x2;
            if x3 < l[3] || x3 > l[2] {
                continue;
            }
            // y1 range: x2 <= y1 <= x1, x3 <= s2 - y1 <= x2,
            // and s2 - y1 <= s1 <= y1 for the innermost row.
            let lo = x2.max(s2 - x2).max(s1).max(s2 - s1);
            let hi = x1.min(s2 - x3);
            if hi >= lo {
                count += hi - lo + 1;
            }
        }
    }
    Int::from(count)
}
