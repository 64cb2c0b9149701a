//! Partitions, tableau counting, characters, and dimension formulas.

mod characters;
mod hive;
mod kostant;
mod kostka;
mod lr;
mod weyl;

pub use characters::{frobenius_character, sn_character, CharacterTable};
pub use hive::{hive_polytope, hive_polytope_rational};
pub use kostant::kostant_partition;
pub use kostka::{kostka, kostka_bounded_height};
pub use lr::lr_coefficient;
pub use weyl::weyl_dim_poly;

use crate::exact::Int;
use crate::{Error, Result};

/// Weakly decreasing sequence of positive integers; the empty sequence is
/// the zero partition. Zero parts are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Drops zero parts and validates monotonicity.
    pub fn from_with_zeros(parts: &[u64]) -> Partition {
        Partition::new(parts.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Parses a comma-separated part list; the empty string is the zero
    /// partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {s:?}")));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("zero parts are suppressed, not written".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The i-th part (0-based), zero beyond the height.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Diagram containment: self_i <= other_i for all i.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.height()).all(|i| self.part(i) <= other.part(i))
    }

    /// n * lambda, the stretched partition.
    pub fn scale(&self, n: u64) -> Partition {
        if n == 0 {
            return Partition::empty();
        }
        Partition::new(self.parts.iter().map(|p| p * n).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        Partition::new(
            (1..=first)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u64)
                .collect(),
        )
    }

    /// Partial sums: `sums()[k]` is the sum of the first k parts, with
    /// `sums()[0] = 0` and length `upto + 1`.
    pub fn partial_sums(&self, upto: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(upto + 1);
        out.push(0);
        for i in 0..upto {
            out.push(out[i] + self.part(i));
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All partitions of m, in lexicographically decreasing order.
pub fn partitions_of(m: u64) -> Vec<Partition> {
    partitions_bounded(m, m)
}

/// All partitions of m with every part at most `max_part`.
pub fn partitions_bounded(m: u64, max_part: u64) -> Vec<Partition> {
    fn rec(m: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if m == 0 {
            out.push(Partition {
                parts: cur.clone(),
            });
            return;
        }
        let top = m.min(max);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(m - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions of m into at most `max_height` parts.
pub fn partitions_max_height(m: u64, max_height: usize) -> Vec<Partition> {
    partitions_of(m)
        .into_iter()
        .filter(|p| p.height() <= max_height)
        .collect()
}

/// A conjugacy class of the symmetric group, stored as the partition of
/// cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn group_size(&self) -> u64 {
        self.0.size()
    }

    /// Multiplicity form: `i[j]` is the number of cycles of length j+1.
    pub fn multiplicities(&self) -> Vec<u64> {
        let m = self.group_size();
        let mut out = vec![0u64; m as usize];
        for &p in self.0.parts() {
            out[(p - 1) as usize] += 1;
        }
        out
    }

    /// Centralizer order z = prod_j j^{i_j} i_j!.
    pub fn centralizer_order(&self) -> Int {
        let mut z = Int::from(1);
        for (j, &ij) in self.multiplicities().iter().enumerate() {
            let jj = Int::from(j as u64 + 1);
            for _ in 0..ij {
                z *= &jj;
            }
            for f in 1..=ij {
                z *= Int::from(f);
            }
        }
        z
    }

    /// |C| = m! / z.
    pub fn class_size(&self) -> Int {
        factorial(self.group_size()) / self.centralizer_order()
    }
}

pub fn factorial(m: u64) -> Int {
    let mut f = Int::from(1);
    for k in 2..=m {
        f *= Int::from(k);
    }
    f
}
