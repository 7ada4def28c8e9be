//! Exact computation with finite associative rings, not assumed unital.
//!
//! The crate computes the Jacobson radical of a finite ring along five
//! equivalent characterisations and cross-checks the theorems relating the
//! radical to superfluous and regular right ideals:
//!
//! * directly from right quasi-regularity of all products,
//! * as the intersection of the regular maximal right ideals,
//! * as the sum of all quite superfluous right ideals,
//! * elementwise, via quite superfluous principal right ideals,
//! * elementwise, via superfluous principal ideals of left multiples.
//!
//! Rings are given by explicit addition and multiplication tables
//! ([`ring::FiniteRing`]); right ideals are bit sets over element indices
//! ([`ideal::RightIdeal`]); the complete right-ideal lattice of a small ring
//! is enumerated exactly ([`ideal::IdealLattice`]). The [`local`] module
//! provides exact arithmetic in the ring of rationals whose denominator is
//! coprime to 6, where the same radical questions have closed-form answers
//! that the finite machinery cannot reach.
//!
//! [`radical::verify_ring`] bundles everything into a per-ring report:
//! the five member sets, an agreement verdict, and one pass/fail record per
//! theorem, with a counterexample payload whenever a check fails.

pub mod bits;
pub mod catalog;
pub mod ideal;
pub mod local;
pub mod radical;
pub mod ring;
pub mod rng;

pub use bits::BitSet;
pub use ideal::{IdealError, IdealLattice, RegulatorWitness, RightIdeal, DEFAULT_LATTICE_CAP};
pub use local::{LocalError, LocalIdeal, LocalizedRational};
pub use radical::{verify_ring, CheckRecord, RadicalError, RadicalReport, RadicalSets};
pub use ring::{FiniteRing, RingError, MAX_VALIDATED_ORDER};
pub use rng::SplitMix64;
