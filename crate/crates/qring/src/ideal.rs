//! Right ideals of a finite ring: closure, principal ideals, sums, the
//! complete lattice, and the classification predicates (regular, maximal,
//! superfluous, quite superfluous).
//!
//! A right ideal is kept in canonical form as the bit set of its members;
//! two ideals are equal exactly when their bit sets are. Lattice enumeration
//! closes the principal ideals under pairwise sums, which is complete
//! because every right ideal is the sum of the principal ideals of its
//! members; the naive filter over all subsets exists only as a test oracle.

use std::sync::Arc;
use thiserror::Error;

use crate::bits::BitSet;
use crate::ring::FiniteRing;

/// Default cap on the ring order for full lattice enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals belong to different ring instances")]
    RingMismatch,
    #[error("ring order {order} exceeds the lattice cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// A right ideal of a finite ring: contains 0, closed under addition,
/// negation, and right multiplication by every ring element.
///
/// Equality, hashing and ordering ignore the ring and compare member sets;
/// operations combining two ideals require them to share the same ring
/// instance (the same `Arc`).
#[derive(Clone)]
pub struct RightIdeal {
    ring: Arc<FiniteRing>,
    members: BitSet,
}

impl PartialEq for RightIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for RightIdeal {}

impl std::hash::Hash for RightIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for RightIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RightIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl RightIdeal {
    /// The zero ideal `{0}`.
    pub fn zero(ring: &Arc<FiniteRing>) -> Self {
        RightIdeal {
            ring: Arc::clone(ring),
            members: BitSet::singleton(ring.order(), 0),
        }
    }

    /// The whole ring as a right ideal.
    pub fn full(ring: &Arc<FiniteRing>) -> Self {
        RightIdeal {
            ring: Arc::clone(ring),
            members: BitSet::full(ring.order()),
        }
    }

    /// Smallest right ideal containing the seed set: the least fixed point
    /// of closing `seed ∪ {0}` under addition, negation, and right
    /// multiplication by every ring element.
    pub fn closure(ring: &Arc<FiniteRing>, seed: impl IntoIterator<Item = usize>) -> Self {
        let n = ring.order();
        let mut members = BitSet::singleton(n, 0);
        let mut queue = vec![0usize];
        for s in seed {
            assert!(s < n);
            if !members.contains(s) {
                members.insert(s);
                queue.push(s);
            }
        }
        // Worklist: each newly reached element is combined with everything
        // already present. Addition is commutative, so visiting each new
        // element against the current members covers every pair eventually.
        while let Some(x) = queue.pop() {
            let reach = |members: &mut BitSet, queue: &mut Vec<usize>, y: usize| {
                if !members.contains(y) {
                    members.insert(y);
                    queue.push(y);
                }
            };
            reach(&mut members, &mut queue, ring.neg(x));
            for r in ring.elements() {
                reach(&mut members, &mut queue, ring.mul(x, r));
            }
            let present: Vec<usize> = members.to_vec();
            for y in present {
                reach(&mut members, &mut queue, ring.add(x, y));
            }
        }
        RightIdeal {
            ring: Arc::clone(ring),
            members,
        }
    }

    /// The principal right ideal `(a)`: in a non-unital ring this is the
    /// additive closure of the integer multiples of `a` together with `aR`.
    pub fn principal(ring: &Arc<FiniteRing>, a: usize) -> Self {
        Self::closure(ring, [a])
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn member_set(&self) -> &BitSet {
        &self.members
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.contains(element)
    }

    pub fn size(&self) -> usize {
        self.members.count()
    }

    pub fn is_zero(&self) -> bool {
        self.members.count() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.is_full()
    }

    pub fn is_subset_of(&self, other: &RightIdeal) -> bool {
        self.members.is_subset_of(&other.members)
    }

    /// Ideal sum `I + J`. The setwise sum of two right ideals is already a
    /// right ideal, so no closure pass is needed.
    pub fn sum(&self, other: &RightIdeal) -> Result<RightIdeal, IdealError> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(IdealError::RingMismatch);
        }
        Ok(RightIdeal {
            ring: Arc::clone(&self.ring),
            members: setwise_sum(&self.ring, &self.members, &other.members),
        })
    }

    /// True when `e` is a regulator for this ideal: `er - r` lies in the
    /// ideal for every ring element `r`, i.e. `e` acts as a left identity
    /// modulo the ideal.
    pub fn admits_regulator(&self, e: usize) -> bool {
        let ring = &self.ring;
        ring.elements()
            .all(|r| self.members.contains(ring.sub(ring.mul(e, r), r)))
    }

    /// Searches for a regulator in ascending element order and returns the
    /// witness with the smallest index, or `None` when the ideal is not
    /// regular.
    pub fn regulator(&self) -> Option<RegulatorWitness> {
        self.ring
            .elements()
            .find(|&e| self.admits_regulator(e))
            .map(|regulator| RegulatorWitness {
                ideal: self.clone(),
                regulator,
            })
    }
}

impl std::fmt::Display for RightIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.members.fmt(f)
    }
}

impl std::fmt::Debug for RightIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} of {}", self.members, self.ring.name())
    }
}

/// An element certifying that a right ideal is regular.
#[derive(Clone, Debug)]
pub struct RegulatorWitness {
    pub ideal: RightIdeal,
    pub regulator: usize,
}

impl RegulatorWitness {
    pub fn holds(&self) -> bool {
        self.ideal.admits_regulator(self.regulator)
    }
}

pub(crate) fn setwise_sum(ring: &FiniteRing, x: &BitSet, y: &BitSet) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for a in x.iter() {
        for b in y.iter() {
            out.insert(ring.add(a, b));
        }
    }
    out
}

/// The complete right-ideal lattice of a finite ring, with the
/// classification of every member precomputed. Immutable after
/// construction and safe to share across threads.
#[derive(Debug)]
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    ideals: Vec<RightIdeal>,
    regulators: Vec<Option<usize>>,
    maximal: Vec<bool>,
    superfluous: Vec<bool>,
    quite_superfluous: Vec<bool>,
    principal_index: Vec<usize>,
}

impl IdealLattice {
    /// Enumerates every right ideal of `ring` by closing the principal
    /// ideals under pairwise sums. Ideals are sorted by ascending member
    /// mask, so `{0}` comes first and the whole ring last.
    pub fn enumerate(ring: &Arc<FiniteRing>, cap: usize) -> Result<Self, IdealError> {
        let n = ring.order();
        if n > cap {
            return Err(IdealError::OrderCapExceeded { order: n, cap });
        }

        let principals: Vec<RightIdeal> = ring
            .elements()
            .map(|a| RightIdeal::principal(ring, a))
            .collect();

        let mut seen: std::collections::HashSet<BitSet> = std::collections::HashSet::new();
        let mut ideals: Vec<RightIdeal> = Vec::new();
        let mut queue: Vec<usize> = Vec::new();
        for p in &principals {
            if seen.insert(p.member_set().clone()) {
                queue.push(ideals.len());
                ideals.push(p.clone());
            }
        }
        while let Some(i) = queue.pop() {
            let mut k = 0;
            while k < ideals.len() {
                let sum = setwise_sum(ring, ideals[i].member_set(), ideals[k].member_set());
                if seen.insert(sum.clone()) {
                    queue.push(ideals.len());
                    ideals.push(RightIdeal {
                        ring: Arc::clone(ring),
                        members: sum,
                    });
                }
                k += 1;
            }
        }
        ideals.sort();

        let principal_index: Vec<usize> = principals
            .iter()
            .map(|p| {
                ideals
                    .binary_search_by(|probe| probe.member_set().cmp(p.member_set()))
                    .expect("principal ideal is in the lattice")
            })
            .collect();

        let regulators: Vec<Option<usize>> = ideals
            .iter()
            .map(|ideal| ring.elements().find(|&e| ideal.admits_regulator(e)))
            .collect();

        let mut lattice = IdealLattice {
            ring: Arc::clone(ring),
            ideals,
            regulators,
            maximal: Vec::new(),
            superfluous: Vec::new(),
            quite_superfluous: Vec::new(),
            principal_index,
        };
        lattice.maximal = lattice
            .ideals
            .iter()
            .map(|i| lattice.is_maximal(i))
            .collect();
        lattice.superfluous = lattice
            .ideals
            .iter()
            .map(|i| lattice.is_superfluous(i))
            .collect();
        lattice.quite_superfluous = lattice
            .ideals
            .iter()
            .map(|i| lattice.is_quite_superfluous(i))
            .collect();
        Ok(lattice)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn ideals(&self) -> &[RightIdeal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lattice index of an ideal, by member set.
    pub fn index_of(&self, ideal: &RightIdeal) -> Option<usize> {
        self.ideals
            .binary_search_by(|probe| probe.member_set().cmp(ideal.member_set()))
            .ok()
    }

    /// Lattice index of the principal ideal `(a)`.
    pub fn principal_index(&self, a: usize) -> usize {
        self.principal_index[a]
    }

    /// Smallest regulator of the ideal at `index`, when regular.
    pub fn regulator_at(&self, index: usize) -> Option<usize> {
        self.regulators[index]
    }

    pub fn maximal_at(&self, index: usize) -> bool {
        self.maximal[index]
    }

    pub fn superfluous_at(&self, index: usize) -> bool {
        self.superfluous[index]
    }

    pub fn quite_superfluous_at(&self, index: usize) -> bool {
        self.quite_superfluous[index]
    }

    /// True iff `ideal` is proper and no lattice member lies strictly
    /// between it and the whole ring. Decided against the enumerated
    /// lattice, which stays correct for non-unital rings.
    pub fn is_maximal(&self, ideal: &RightIdeal) -> bool {
        if ideal.is_full() {
            return false;
        }
        !self
            .ideals
            .iter()
            .any(|j| !j.is_full() && ideal.is_subset_of(j) && j.member_set() != ideal.member_set())
    }

    /// True iff `J + I = R` forces `I = R` for every right ideal `I`.
    pub fn is_superfluous(&self, ideal: &RightIdeal) -> bool {
        self.ideals.iter().all(|i| {
            i.is_full() || !setwise_sum(&self.ring, ideal.member_set(), i.member_set()).is_full()
        })
    }

    /// True iff `J + I = R` forces `I = R` for every regular right ideal
    /// `I` (including the whole ring, where the implication is vacuous).
    pub fn is_quite_superfluous(&self, ideal: &RightIdeal) -> bool {
        self.ideals.iter().zip(&self.regulators).all(|(i, reg)| {
            reg.is_none()
                || i.is_full()
                || !setwise_sum(&self.ring, ideal.member_set(), i.member_set()).is_full()
        })
    }
}
