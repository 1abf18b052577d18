//! The closure and interior operators on `U×U`.
//!
//! Closed subsets are equivalence relations; open subsets (complements of
//! closed ones) are partition relations, i.e. dit sets.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::PairRelation;

/// Smallest equivalence relation containing `r`.
///
/// Reflexive and symmetric closure, then Warshall's transitive closure over the bit rows.
pub fn rst_closure(r: &PairRelation) -> PairRelation {
    let universe = r.universe();
    let n = universe.size();
    let mut rows = r.rows().to_vec();
    let t = r.transpose();
    for (u, row) in rows.iter_mut().enumerate() {
        *row |= t.rows()[u] | (1 << u);
    }
    for k in 0..n {
        let row_k = rows[k];
        for row in rows.iter_mut() {
            if (*row >> k) & 1 == 1 {
                *row |= row_k;
            }
        }
    }
    PairRelation::from_rows(universe, rows)
}

/// Largest partition relation contained in `r`: `(rst(rᶜ))ᶜ`.
pub fn interior(r: &PairRelation) -> PairRelation {
    !rst_closure(&!r)
}

/// The partition whose blocks are the classes of the equivalence relation `e`.
pub fn partition_from_equivalence(e: &PairRelation) -> Result<Partition> {
    if !e.is_reflexive() {
        return Err(Error::NotEquivalence("not reflexive"));
    }
    if !e.is_symmetric() {
        return Err(Error::NotEquivalence("not symmetric"));
    }
    if !e.is_transitive() {
        return Err(Error::NotEquivalence("not transitive"));
    }
    // each row is the class of its element
    Ok(Partition::from_key(e.universe(), |u| e.rows()[u]))
}

/// The partition whose dit set is the partition relation `d`.
pub fn partition_from_dit_set(d: &PairRelation) -> Result<Partition> {
    partition_from_equivalence(&!d)
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}
