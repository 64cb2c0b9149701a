//! Hilbert quasi-polynomial of the symmetric-invariant ring.

use num_integer::Integer;

use crate::exact::{Int, Rat};
use crate::quasipoly::{fit, QuasiPolynomial};
use crate::{Error, Result};

/// Number of partitions of n into at most k parts, by the bounded-part
/// DP on the conjugate side.
pub fn partitions_into_at_most(n: u64, k: u64) -> Int {
    // ways(n) with parts of size <= k (conjugate formulation)
    let n = n as usize;
    let mut table = vec![Int::from(0); n + 1];
    table[0] = Int::from(1);
    for part in 1..=k.min(n as u64) as usize {
        for v in part..=n {
            let add = table[v - part].clone();
            table[v] += add;
        }
    }
    table[n].clone()
}

/// The Hilbert function of the invariant ring of the symmetric group
/// acting on k variables counts partitions of n into at most k parts; it
/// is a quasi-polynomial of degree k-1 whose period divides lcm(1..k).
/// Samples n = 1..N are counted exactly and fitted; N must cover at
/// least k samples per residue class.
pub fn syminv_hilbert(k: u64, n_horizon: usize) -> Result<QuasiPolynomial> {
    assert!(k >= 1);
    let period = (1..=k).fold(1u64, |acc, v| acc.lcm(&v)) as usize;
    let degree = (k - 1) as usize;
    let need = period * (degree + 1);
    if n_horizon < need {
        return Err(Error::InsufficientHorizon {
            got: n_horizon,
            need,
        });
    }
    let samples: Vec<(u64, Rat)> = (1..=n_horizon as u64)
        .map(|n| (n, Rat::from_integer(partitions_into_at_most(n, k))))
        .collect();
    fit(&samples, period, degree)
}
