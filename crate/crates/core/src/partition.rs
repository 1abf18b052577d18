//! Finite universes and partitions on them.
//!
//! A [`Partition`] is always held in canonical form: blocks ordered by their
//! least element and elements sorted within each block. Two partitions are
//! equal as values exactly when they are equal as sets of blocks.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::relation::PairRelation;

/// A finite carrier set `{0, 1, ..., size - 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe {
    size: usize,
}

impl Universe {
    /// Largest universe supported; pair relations store one `u64` row per element.
    pub const MAX_SIZE: usize = 64;

    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        if size > Self::MAX_SIZE {
            return Err(Error::UniverseTooLarge {
                size,
                max: Self::MAX_SIZE,
            });
        }
        Ok(Self { size })
    }

    #[inline]
    pub fn size(self) -> usize {
        self.size
    }

    /// Number of ordered pairs in `U×U`.
    #[inline]
    pub fn pair_count(self) -> usize {
        self.size * self.size
    }

    pub fn elements(self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub(crate) fn check_same(self, other: Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.size,
                right: other.size,
            })
        }
    }
}

/// A set of disjoint non-empty blocks covering a [`Universe`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Vec<usize>>,
    // block index of each element; a restricted growth string
    labels: Vec<usize>,
}

impl Partition {
    /// Builds a partition of `0..n` from explicit blocks, validating disjointness and coverage.
    pub fn new<I, B>(blocks: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        let universe = Universe::new(n)?;
        let mut label = vec![usize::MAX; n];
        for (b, block) in blocks.into_iter().enumerate() {
            let mut empty = true;
            for u in block {
                if u >= n {
                    return Err(Error::OutOfRange {
                        element: u,
                        size: n,
                    });
                }
                if label[u] != usize::MAX {
                    return Err(Error::Overlap { element: u });
                }
                label[u] = b;
                empty = false;
            }
            if empty {
                return Err(Error::EmptyBlock);
            }
        }
        if let Some(missing) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Missing { element: missing });
        }
        Ok(Self::from_labels_unchecked(universe, &label))
    }

    /// Builds a partition from any labelling: elements with equal labels share a block.
    pub fn from_labels<L: Eq + Clone>(labels: &[L]) -> Result<Self> {
        let universe = Universe::new(labels.len())?;
        Ok(Self::from_key(universe, |u| labels[u].clone()))
    }

    /// Groups the elements of `universe` by the value of `key`.
    pub fn from_key<K: Eq, F: Fn(usize) -> K>(universe: Universe, key: F) -> Self {
        let mut seen: Vec<K> = Vec::new();
        let mut labels = Vec::with_capacity(universe.size());
        for u in universe.elements() {
            let k = key(u);
            let idx = match seen.iter().position(|s| *s == k) {
                Some(i) => i,
                None => {
                    seen.push(k);
                    seen.len() - 1
                }
            };
            labels.push(idx);
        }
        Self::from_rgs(universe, labels)
    }

    fn from_labels_unchecked(universe: Universe, labels: &[usize]) -> Self {
        Self::from_key(universe, |u| labels[u])
    }

    // `labels` must already be a restricted growth string.
    pub(crate) fn from_rgs(universe: Universe, labels: Vec<usize>) -> Self {
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (u, &l) in labels.iter().enumerate() {
            blocks[l].push(u);
        }
        Self {
            universe,
            blocks,
            labels,
        }
    }

    /// The discrete partition **1**: every element in its own block.
    pub fn discrete(n: usize) -> Result<Self> {
        let universe = Universe::new(n)?;
        Ok(Self::from_rgs(universe, (0..n).collect()))
    }

    /// The indiscrete partition **0**: a single block.
    pub fn indiscrete(n: usize) -> Result<Self> {
        let universe = Universe::new(n)?;
        Ok(Self::from_rgs(universe, vec![0; n]))
    }

    #[inline]
    pub fn universe(&self) -> Universe {
        self.universe
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.universe.size()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index (in canonical order) of the block containing `u`.
    #[inline]
    pub fn block_of(&self, u: usize) -> usize {
        self.labels[u]
    }

    /// Canonical restricted growth string: `labels()[u]` is the block index of `u`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.size()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Ordered pairs `(u, v)` lying in different blocks.
    pub fn dit_set(&self) -> PairRelation {
        !self.indit_set()
    }

    /// Ordered pairs `(u, v)` lying in the same block: the union of `B×B` over blocks.
    pub fn indit_set(&self) -> PairRelation {
        let mut rows = vec![0u64; self.size()];
        for block in &self.blocks {
            let mask = block.iter().fold(0u64, |m, &u| m | (1 << u));
            for &u in block {
                rows[u] = mask;
            }
        }
        PairRelation::from_rows(self.universe, rows)
    }

    /// Number of distinctions, `|dit(π)|`.
    pub fn dit_count(&self) -> usize {
        let n = self.size();
        n * n - self.blocks.iter().map(|b| b.len() * b.len()).sum::<usize>()
    }

    /// Parses the text form with an explicit universe size.
    pub fn parse_with_size(s: &str, n: usize) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        Self::new(blocks, n)
    }
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for part in s.split('|') {
        let mut block = Vec::new();
        let mut pos = offset;
        for item in part.split(',') {
            let trimmed = item.trim();
            if trimmed.is_empty() {
                return Err(parse_err(pos, "expected an element index"));
            }
            let lead = item.len() - item.trim_start().len();
            let u = trimmed
                .parse::<usize>()
                .map_err(|_| parse_err(pos + lead, format!("invalid element index `{trimmed}`")))?;
            block.push(u);
            pos += item.len() + 1;
        }
        blocks.push(block);
        offset += part.len() + 1;
    }
    Ok(blocks)
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `0,1|2|3,4`; the universe size is one more than the largest index.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        let n = blocks.iter().flatten().copied().max().map_or(0, |m| m + 1);
        Self::new(blocks, n)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, u) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{u}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_partition_examples() {
        let p = Partition::new([vec![0, 1], vec![2]], 3).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);

        let d = Partition::new([vec![0], vec![1], vec![2]], 3).unwrap();
        assert_eq!(d, Partition::discrete(3).unwrap());
        assert!(d.is_discrete());

        assert_eq!(
            Partition::new([vec![0, 1], vec![1, 2]], 3),
            Err(Error::Overlap { element: 1 })
        );
    }

    #[test]
    fn make_partition_errors() {
        assert_eq!(
            Partition::new([vec![0, 1]], 3),
            Err(Error::Missing { element: 2 })
        );
        assert_eq!(
            Partition::new([vec![0, 1, 2], vec![]], 3),
            Err(Error::EmptyBlock)
        );
        assert_eq!(
            Partition::new([vec![0, 3]], 3),
            Err(Error::OutOfRange { element: 3, size: 3 })
        );
        assert_eq!(
            Partition::new(Vec::<Vec<usize>>::new(), 0),
            Err(Error::EmptyUniverse)
        );
    }

    #[test]
    fn canonical_form_ignores_input_order() {
        let a = Partition::new([vec![3, 2], vec![1, 0]], 4).unwrap();
        let b = Partition::new([vec![0, 1], vec![2, 3]], 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.labels(), &[0, 0, 1, 1]);
        assert_eq!(Partition::from_labels(&['x', 'y', 'x']).unwrap().to_string(), "0,2|1");
    }

    #[test]
    fn text_format() {
        let p: Partition = "0,1|2|3,4".parse().unwrap();
        assert_eq!(p.size(), 5);
        assert_eq!(p.to_string(), "0,1|2|3,4");
        let q: Partition = " 4 , 3| 2|1,0".parse().unwrap();
        assert_eq!(q, p);
        assert_eq!(
            Partition::parse_with_size("0|1", 3),
            Err(Error::Missing { element: 2 })
        );
        match "0,1|x".parse::<Partition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("0,,1".parse::<Partition>(), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn dit_counts() {
        let p: Partition = "0,1|2".parse().unwrap();
        assert_eq!(p.dit_count(), 4);
        assert_eq!(p.dit_set().cardinality(), 4);
        assert_eq!(Partition::indiscrete(4).unwrap().dit_count(), 0);
    }
}
