//! Binary relations on a finite universe, stored as a dense bit matrix.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::partition::Universe;

/// A subset of `U×U`. Row `u` holds the bitmask of all `v` with `(u, v)` in the relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairRelation {
    universe: Universe,
    rows: Vec<u64>,
}

#[inline]
fn row_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl PairRelation {
    pub fn empty(universe: Universe) -> Self {
        Self {
            universe,
            rows: vec![0; universe.size()],
        }
    }

    pub fn full(universe: Universe) -> Self {
        let mask = row_mask(universe.size());
        Self {
            universe,
            rows: vec![mask; universe.size()],
        }
    }

    /// The diagonal `Δ = {(u, u)}`.
    pub fn diagonal(universe: Universe) -> Self {
        Self {
            universe,
            rows: (0..universe.size()).map(|u| 1u64 << u).collect(),
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(universe: Universe, pairs: I) -> Self {
        let mut r = Self::empty(universe);
        for (u, v) in pairs {
            r.insert(u, v);
        }
        r
    }

    pub(crate) fn from_rows(universe: Universe, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), universe.size());
        Self { universe, rows }
    }

    #[inline]
    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    /// # Panics
    /// If either index is outside the universe.
    pub fn insert(&mut self, u: usize, v: usize) {
        let n = self.universe.size();
        assert!(u < n && v < n, "pair ({u}, {v}) outside universe of size {n}");
        self.rows[u] |= 1 << v;
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        if u < self.rows.len() && v < self.rows.len() {
            self.rows[u] &= !(1 << v);
        }
    }

    pub fn cardinality(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn is_subset(&self, other: &PairRelation) -> bool {
        self.universe == other.universe
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Iterates member pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.universe.size();
        (0..n).flat_map(move |u| (0..n).filter(move |&v| self.contains(u, v)).map(move |v| (u, v)))
    }

    pub fn transpose(&self) -> Self {
        let n = self.universe.size();
        let mut rows = vec![0u64; n];
        for (u, v) in self.pairs() {
            rows[v] |= 1 << u;
        }
        Self::from_rows(self.universe, rows)
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(u, r)| (r >> u) & 1 == 1)
    }

    pub fn is_irreflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(u, r)| (r >> u) & 1 == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_transitive(&self) -> bool {
        // (u,v) and (v,w) in R implies (u,w) in R: row(u) ⊇ row(v) whenever v ∈ row(u).
        self.pairs()
            .all(|(u, v)| self.rows[v] & !self.rows[u] == 0)
    }

    /// `(u, w) ∈ R` implies `(u, v) ∈ R` or `(v, w) ∈ R` for every `v`.
    pub fn is_anti_transitive(&self) -> bool {
        let n = self.universe.size();
        self.pairs()
            .all(|(u, w)| (0..n).all(|v| self.contains(u, v) || self.contains(v, w)))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// Irreflexive, symmetric and anti-transitive: the complement of an equivalence relation.
    pub fn is_partition_relation(&self) -> bool {
        self.is_irreflexive() && self.is_symmetric() && self.is_anti_transitive()
    }
}

impl fmt::Debug for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&PairRelation> for &PairRelation {
            type Output = PairRelation;

            fn $method(self, rhs: &PairRelation) -> PairRelation {
                assert_eq!(self.universe, rhs.universe, "relations over different universes");
                let op = $op;
                PairRelation {
                    universe: self.universe,
                    rows: self.rows.iter().zip(&rhs.rows).map(|(&a, &b)| op(a, b)).collect(),
                }
            }
        }

        impl $trait for PairRelation {
            type Output = PairRelation;

            fn $method(self, rhs: PairRelation) -> PairRelation {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(BitOr, bitor, |a: u64, b: u64| a | b);
binop!(BitAnd, bitand, |a: u64, b: u64| a & b);
binop!(Sub, sub, |a: u64, b: u64| a & !b);

impl Not for &PairRelation {
    type Output = PairRelation;

    fn not(self) -> PairRelation {
        let mask = row_mask(self.universe.size());
        PairRelation {
            universe: self.universe,
            rows: self.rows.iter().map(|r| !r & mask).collect(),
        }
    }
}

impl Not for PairRelation {
    type Output = PairRelation;

    fn not(self) -> PairRelation {
        !&self
    }
}
