//! Lattice operations on partitions under the refinement order.
//!
//! Where two computation routes exist, the operational one is the primary
//! entry point and the dit-set (interior) route is exposed alongside it so
//! the two can be cross-checked.

use crate::closure::{interior, partition_from_dit_set, UnionFind};
use crate::error::Result;
use crate::partition::Partition;
use crate::relation::PairRelation;

/// `π ∨ σ`: blocks are the non-empty intersections `B ∩ C`.
pub fn join(pi: &Partition, sigma: &Partition) -> Result<Partition> {
    pi.universe().check_same(sigma.universe())?;
    Ok(Partition::from_key(pi.universe(), |u| {
        (pi.block_of(u), sigma.block_of(u))
    }))
}

/// `π ∧ σ` by merging blocks of both partitions that share an element.
pub fn meet(pi: &Partition, sigma: &Partition) -> Result<Partition> {
    pi.universe().check_same(sigma.universe())?;
    let mut uf = UnionFind::new(pi.size());
    for block in pi.blocks().iter().chain(sigma.blocks()) {
        for &u in &block[1..] {
            uf.union(block[0], u);
        }
    }
    let roots: Vec<usize> = (0..pi.size()).map(|u| uf.find(u)).collect();
    Ok(Partition::from_key(pi.universe(), |u| roots[u]))
}

/// `π ∧ σ` as the partition whose dit set is `int[dit(π) ∩ dit(σ)]`.
pub fn meet_via_interior(pi: &Partition, sigma: &Partition) -> Result<Partition> {
    pi.universe().check_same(sigma.universe())?;
    partition_from_dit_set(&interior(&(&pi.dit_set() & &sigma.dit_set())))
}

/// `σ ⇒ π`: like `π`, except every block of `π` contained in a block of `σ`
/// is replaced by singletons.
pub fn implication(sigma: &Partition, pi: &Partition) -> Result<Partition> {
    pi.universe().check_same(sigma.universe())?;
    let mut labels = vec![0usize; pi.size()];
    for (b, block) in pi.blocks().iter().enumerate() {
        let inside = block.iter().all(|&u| sigma.block_of(u) == sigma.block_of(block[0]));
        for &u in block {
            // singletons get a label no intact block can collide with
            labels[u] = if inside { pi.size() + u } else { b };
        }
    }
    Ok(Partition::from_key(pi.universe(), |u| labels[u]))
}

/// `σ ⇒ π` as the partition whose dit set is `int[dit(σ)ᶜ ∪ dit(π)]`.
pub fn implication_via_interior(sigma: &Partition, pi: &Partition) -> Result<Partition> {
    pi.universe().check_same(sigma.universe())?;
    partition_from_dit_set(&interior(&(&sigma.indit_set() | &pi.dit_set())))
}

/// `σ ⪯ π`: every block of `π` lies inside some block of `σ`.
pub fn refines(sigma: &Partition, pi: &Partition) -> Result<bool> {
    pi.universe().check_same(sigma.universe())?;
    Ok(pi.blocks().iter().all(|block| {
        block
            .iter()
            .all(|&u| sigma.block_of(u) == sigma.block_of(block[0]))
    }))
}

/// `Mut(π, σ) = dit(π) ∩ dit(σ)`.
pub fn mutual_dit_set(pi: &Partition, sigma: &Partition) -> Result<PairRelation> {
    pi.universe().check_same(sigma.universe())?;
    Ok(&pi.dit_set() & &sigma.dit_set())
}

/// `Mut(π, σ)` assembled block by block as the union of `(B − C) × (C − B)`.
pub fn mutual_dit_set_structural(pi: &Partition, sigma: &Partition) -> Result<PairRelation> {
    pi.universe().check_same(sigma.universe())?;
    let mut out = PairRelation::empty(pi.universe());
    for b in pi.blocks() {
        for c in sigma.blocks() {
            let b_minus_c = b.iter().filter(|u| !c.contains(u));
            for &x in b_minus_c {
                for &y in c.iter().filter(|v| !b.contains(v)) {
                    out.insert(x, y);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn join_examples() {
        let (a, b) = (p("0,1|2,3"), p("0,2|1,3"));
        assert_eq!(join(&a, &b).unwrap(), Partition::discrete(4).unwrap());
        assert_eq!(join(&a, &Partition::indiscrete(4).unwrap()).unwrap(), a);
        assert_eq!(join(&a, &a).unwrap(), a);
    }

    #[test]
    fn meet_examples() {
        let (a, b) = (p("0,1|2,3"), p("0,2|1,3"));
        assert_eq!(meet(&a, &b).unwrap(), Partition::indiscrete(4).unwrap());
        assert_eq!(meet_via_interior(&a, &b).unwrap(), Partition::indiscrete(4).unwrap());
        assert_eq!(meet(&a, &Partition::discrete(4).unwrap()).unwrap(), a);
        assert_eq!(meet(&a, &a).unwrap(), a);
        assert_eq!(meet(&p("0,1|2|3|4"), &p("0|1,2|3|4")).unwrap(), p("0,1,2|3|4"));
    }

    #[test]
    fn implication_examples() {
        let a = p("0,1|2,3");
        let one = Partition::discrete(4).unwrap();
        assert_eq!(implication(&a, &a).unwrap(), one);
        assert_eq!(implication(&Partition::indiscrete(4).unwrap(), &a).unwrap(), one);
        let sigma = p("0,1,2|3");
        assert_eq!(implication(&sigma, &a).unwrap(), p("0|1|2,3"));
        assert_eq!(implication_via_interior(&sigma, &a).unwrap(), p("0|1|2,3"));
    }

    #[test]
    fn refines_examples() {
        let zero = Partition::indiscrete(4).unwrap();
        assert!(refines(&zero, &p("0,1|2|3")).unwrap());
        assert!(refines(&p("0,1|2"), &Partition::discrete(3).unwrap()).unwrap());
        assert!(!refines(&p("0,1|2,3"), &p("0,2|1,3")).unwrap());
    }

    #[test]
    fn mutual_examples() {
        let m = mutual_dit_set(&p("0,1|2"), &p("0|1,2")).unwrap();
        assert!(m.contains(0, 2) && m.contains(2, 0));
        assert_eq!(m, mutual_dit_set_structural(&p("0,1|2"), &p("0|1,2")).unwrap());
        let zero = Partition::indiscrete(3).unwrap();
        assert!(mutual_dit_set(&p("0,1|2"), &zero).unwrap().is_empty());
        let one = Partition::discrete(3).unwrap();
        assert_eq!(mutual_dit_set(&one, &one).unwrap().cardinality(), 6);
    }

    #[test]
    fn universe_mismatch() {
        let err = Err(Error::UniverseMismatch { left: 3, right: 4 });
        let (a, b) = (p("0,1|2"), p("0|1,2,3"));
        assert_eq!(join(&a, &b), err.clone());
        assert_eq!(meet(&a, &b), err.clone());
        assert_eq!(meet_via_interior(&a, &b), err.clone());
        assert_eq!(implication(&b, &a), err.clone());
        assert!(refines(&b, &a).is_err());
        assert!(mutual_dit_set(&a, &b).is_err());
        assert!(mutual_dit_set_structural(&a, &b).is_err());
    }
}
