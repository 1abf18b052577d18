//! Enumeration of `Π(U)` by restricted growth strings.

use crate::error::{Error, Result};
use crate::partition::{Partition, Universe};

/// Default cap on `n` for materializing every partition (`B(12) = 4 213 597`).
pub const DEFAULT_LIMIT: usize = 12;

/// Bell number `B(n)` via the Bell triangle. Exact for `n ≤ 25`.
pub fn bell_number(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        row = next;
    }
    row[0]
}

/// Iterator over all partitions of `0..n` in lexicographic order of their
/// restricted growth strings `a` (`a[0] = 0`, `a[i] ≤ 1 + max(a[..i])`).
#[derive(Debug, Clone)]
pub struct Partitions {
    universe: Universe,
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Result<Self> {
        let universe = Universe::new(n)?;
        Ok(Self {
            universe,
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        })
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        // rightmost position that can still grow
        let Some(i) = (1..n).rev().find(|&i| self.rgs[i] <= self.prefix_max[i - 1]) else {
            self.done = true;
            return;
        };
        self.rgs[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
        for j in i + 1..n {
            self.rgs[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let p = Partition::from_rgs(self.universe, self.rgs.clone());
        self.advance();
        Some(p)
    }
}

/// Every partition of `0..n`, each exactly once, for `n ≤ DEFAULT_LIMIT`.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    enumerate_partitions_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_partitions_with_limit(n: usize, limit: usize) -> Result<Vec<Partition>> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(Partitions::new(n)?.collect())
}
