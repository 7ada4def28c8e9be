//! Compact sets of ring-element indices.

use std::cmp::Ordering;
use std::fmt;

const BLOCK: usize = 64;

/// Fixed-universe bit set over element indices `0..universe`.
///
/// `Ord` compares the membership masks as unsigned integers (highest block
/// first), giving a stable total order that is used wherever a deterministic
/// tie-break among ideals is needed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl BitSet {
    pub fn empty(universe: usize) -> Self {
        BitSet {
            universe,
            blocks: vec![0; universe.div_ceil(BLOCK)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for block in &mut set.blocks {
            *block = !0;
        }
        set.clear_tail();
        set
    }

    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(index);
        set
    }

    // Bits at positions >= universe must stay zero so that Eq and Hash see
    // only real members.
    fn clear_tail(&mut self) {
        let tail = self.universe % BLOCK;
        if tail != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < self.universe);
        self.blocks[index / BLOCK] |= 1 << (index % BLOCK);
    }

    pub fn remove(&mut self, index: usize) {
        debug_assert!(index < self.universe);
        self.blocks[index / BLOCK] &= !(1 << (index % BLOCK));
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.blocks[index / BLOCK] >> (index % BLOCK) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks.iter().rev().cmp(other.blocks.iter().rev())
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
