//! The Littlewood-Richardson rule by direct tableau enumeration.

use crate::exact::Int;

use super::Partition;

/// c_{alpha,beta}^lambda: the number of LR skew tableaux of shape
/// lambda/alpha and content beta. Zero when alpha is not contained in
/// lambda or the sizes do not add up.
///
/// Cells are filled in reverse reading order (rows top to bottom, each
/// row right to left), which makes the lattice-word condition a prefix
/// condition that can be checked as the filling grows: after every
/// placement of a value v > 1, the count of v so far must not exceed the
/// count of v - 1.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, lambda: &Partition) -> Int {
    if alpha.size() + beta.size() != lambda.size() {
        return Int::from(0);
    }
    if !alpha.contained_in(lambda) {
        return Int::from(0);
    }
    if beta.is_empty() {
        return Int::from(1); // empty skew filling
    }
    let rows = lambda.height();
    let cells: Vec<(usize, u64)> = (0..rows)
        .flat_map(|r| {
            let lo = alpha.part(r);
            let hi = lambda.part(r);
            (lo..hi).rev().map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<u64>> = (0..rows)
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();
    let mut counts = vec![0u64; beta.height()];
    let mut total = Int::from(0);
    fill(
        &cells,
        0,
        alpha,
        beta,
        &mut grid,
        &mut counts,
        &mut total,
    );
    total
}

fn fill(
    cells: &[(usize, u64)],
    idx: usize,
    alpha: &Partition,
    beta: &Partition,
    grid: &mut Vec<Vec<u64>>,
    counts: &mut Vec<u64>,
    total: &mut Int,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    // Row weakly increasing: bounded above by the right neighbor when it
    // is part of the skew shape.
    let right_cap = if c + 1 < grid[r].len() as u64 {
        grid[r][(c + 1) as usize]
    } else {
        beta.height() as u64
    };
    // Column strict: must exceed the value above, when that cell is
    // filled (cells inside alpha impose nothing).
    let above_floor = if r > 0 && c < alpha.part(r - 1) {
        0
    } else if r > 0 && c < grid[r - 1].len() as u64 {
        grid[r - 1][c as usize]
    } else {
        0
    };
    for v in (above_floor + 1)..=right_cap {
        let vi = (v - 1) as usize;
        if counts[vi] + 1 > beta.part(vi) {
            continue; // content exceeded
        }
        if v > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue; // lattice word violated
        }
        counts[vi] += 1;
        grid[r][c as usize] = v;
        fill(cells, idx + 1, alpha, beta, grid, counts, total);
        grid[r][c as usize] = 0;
        counts[vi] -= 1;
    }
}
