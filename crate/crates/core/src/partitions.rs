//! Integer partitions: enumeration, Young-diagram cell statistics and tuples of
//! partitions indexing torus-fixed points of Hilbert schemes of points.
//!
//! Partitions are stored in English notation as weakly decreasing part lists.
//! Cell `(row, col)` is the `col`-th box of the `row`-th part.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Parts = SmallVec<[u16; 16]>;

/// A weakly decreasing list of positive integers.
///
/// The derived ordering is lexicographic on the part lists; the canonical
/// enumeration order used throughout the crate is the *reverse* of it.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Parts,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts that must already be weakly decreasing and positive.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts.iter().map(|&p| to_part(p))))
    }

    /// Builds a partition from positive parts in any order.
    pub fn from_unsorted(parts: &[usize]) -> Result<Self> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(&sorted)
    }

    fn from_sorted(parts: impl IntoIterator<Item = u16>) -> Self {
        Self { parts: parts.into_iter().collect() }
    }

    /// A partition with a single part (`[r]`); `r = 0` gives the empty partition.
    pub fn single(r: usize) -> Self {
        if r == 0 {
            Self::empty()
        } else {
            Self::from_sorted([to_part(r)])
        }
    }

    pub fn parts(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.parts.iter().map(|&p| p as usize)
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts[i] as usize
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.parts().collect()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Pairs `(part, multiplicity)` in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for p in self.parts() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts of `self` and `other`.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts: Parts = SmallVec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Inserts one part, keeping the list weakly decreasing.
    pub fn with_part(&self, part: usize) -> Partition {
        let p = to_part(part);
        let pos = self.parts.iter().position(|&q| q < p).unwrap_or(self.parts.len());
        let mut parts = self.parts.clone();
        parts.insert(pos, p);
        Partition { parts }
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0) as usize;
        Self::from_sorted(
            (0..width).map(|col| self.parts.iter().filter(|&&p| p as usize > col).count() as u16),
        )
    }

    pub fn has_odd_part(&self) -> bool {
        self.parts.iter().any(|p| p % 2 == 1)
    }

    /// `∏_j m_j!` over the part multiplicities `m_j`.
    pub fn multiplicity_factorial(&self) -> u128 {
        self.multiplicities().iter().map(|&(_, m)| (1..=m as u128).product::<u128>()).product()
    }
}

fn to_part(p: usize) -> u16 {
    u16::try_from(p).expect("partition part exceeds u16 range")
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Arm and leg of a single cell of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellHook {
    pub row: usize,
    pub col: usize,
    /// Cells strictly to the right in the same row.
    pub arm: usize,
    /// Cells strictly below in the same column.
    pub leg: usize,
}

/// Every partition of `k` exactly once, in lexicographically decreasing order.
pub fn enumerate_partitions(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u16> = Vec::with_capacity(k);
    fill_partitions(k, k, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max_part: usize, current: &mut Vec<u16>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(current.iter().copied()));
        return;
    }
    for first in (1..=rest.min(max_part)).rev() {
        current.push(to_part(first));
        fill_partitions(rest - first, first, current, out);
        current.pop();
    }
}

/// All partitions of every size `0..=max_size`, grouped by size.
pub fn partitions_up_to(max_size: usize) -> Vec<Vec<Partition>> {
    (0..=max_size).map(enumerate_partitions).collect()
}

/// One entry per cell of the Young diagram, rows top to bottom, columns left to right.
pub fn cell_hooks(lambda: &Partition) -> Vec<CellHook> {
    let mut out = Vec::with_capacity(lambda.size());
    for (row, len) in lambda.parts().enumerate() {
        for col in 0..len {
            let leg = lambda.parts().skip(row + 1).take_while(|&p| p > col).count();
            out.push(CellHook { row, col, arm: len - col - 1, leg });
        }
    }
    out
}

/// All ordered `c`-tuples of partitions whose sizes sum to `k`.
///
/// Order: the size of the first slot decreases from `k` to `0`; within a fixed
/// size vector, each slot runs through [`enumerate_partitions`] order.
pub fn multipartitions(k: usize, c: usize) -> Vec<Vec<Partition>> {
    assert!(c >= 1, "multipartitions needs at least one slot");
    let by_size = partitions_up_to(k);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(c);
    fill_multipartitions(k, c, &by_size, &mut current, &mut out);
    out
}

fn fill_multipartitions(
    rest: usize,
    slots: usize,
    by_size: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) {
    if slots == 1 {
        for lambda in &by_size[rest] {
            current.push(lambda.clone());
            out.push(current.clone());
            current.pop();
        }
        return;
    }
    for size in (0..=rest).rev() {
        for lambda in &by_size[size] {
            current.push(lambda.clone());
            fill_multipartitions(rest - size, slots - 1, by_size, current, out);
            current.pop();
        }
    }
}
