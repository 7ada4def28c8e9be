//! The Jacobson radical of a finite ring, computed five independent ways,
//! plus the cross-check battery that tests every theorem tying the radical
//! to regular, superfluous, and quite superfluous right ideals.
//!
//! The five routes:
//!
//! 1. [`radical_by_definition`]: elements `a` such that `ab` is right
//!    quasi-regular for every `b`.
//! 2. [`radical_by_maximal_ideals`]: intersection of the regular maximal
//!    right ideals (the whole ring when there are none).
//! 3. [`radical_by_quite_superfluous`]: sum of all quite superfluous right
//!    ideals, validated to be the unique largest one.
//! 4. [`radical_by_quite_superfluous_principals`]: elements whose principal
//!    right ideal is quite superfluous.
//! 5. [`radical_by_superfluous_left_multiples`]: elements `a` such that
//!    `(sa)` is superfluous for every `s`.
//!
//! [`verify_ring`] runs all five, asserts their agreement, and records one
//! pass/fail entry per theorem. Theorem failures are data, never panics:
//! the point of the battery is falsification with evidence.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitSet;
use crate::ideal::{setwise_sum, IdealError, IdealLattice, RightIdeal};
use crate::ring::FiniteRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RadicalError {
    #[error("the ideal is the whole ring")]
    NotProper,
    #[error("{regulator} is not a regulator of the ideal")]
    NotARegulator { regulator: usize },
    /// A conclusion that should be forced by the theory failed to hold.
    /// Surfaced loudly rather than masked.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// Smallest `x` with `ax = a + x`, or `None` when `a` is not right
/// quasi-regular.
pub fn right_quasi_regular_witness(ring: &FiniteRing, a: usize) -> Option<usize> {
    ring.elements().find(|&x| ring.mul(a, x) == ring.add(a, x))
}

/// Route 1: `{ a | ab is right quasi-regular for all b }`.
pub fn radical_by_definition(ring: &FiniteRing) -> BitSet {
    let mut members = BitSet::empty(ring.order());
    for a in ring.elements() {
        let all_products_rqr = ring
            .elements()
            .all(|b| right_quasi_regular_witness(ring, ring.mul(a, b)).is_some());
        if all_products_rqr {
            members.insert(a);
        }
    }
    members
}

/// Route 2: intersection of all regular maximal right ideals; the whole
/// ring when that family is empty.
pub fn radical_by_maximal_ideals(lattice: &IdealLattice) -> BitSet {
    let n = lattice.ring().order();
    let mut intersection = BitSet::full(n);
    let mut found = false;
    for (k, ideal) in lattice.ideals().iter().enumerate() {
        if lattice.maximal_at(k) && lattice.regulator_at(k).is_some() {
            intersection.intersect_with(ideal.member_set());
            found = true;
        }
    }
    if found {
        intersection
    } else {
        BitSet::full(n)
    }
}

fn quite_superfluous_sum(lattice: &IdealLattice) -> (BitSet, bool, bool) {
    let ring = lattice.ring();
    let mut sum = BitSet::singleton(ring.order(), 0);
    for (k, ideal) in lattice.ideals().iter().enumerate() {
        if lattice.quite_superfluous_at(k) {
            sum = setwise_sum(ring, &sum, ideal.member_set());
        }
    }
    let as_ideal = RightIdeal::closure(ring, sum.iter());
    debug_assert_eq!(as_ideal.member_set(), &sum);
    let sum_is_quite_superfluous = lattice.is_quite_superfluous(&as_ideal);
    let contains_every = lattice.ideals().iter().enumerate().all(|(k, ideal)| {
        !lattice.quite_superfluous_at(k) || ideal.member_set().is_subset_of(&sum)
    });
    (sum, sum_is_quite_superfluous, contains_every)
}

/// Route 3: the sum of every quite superfluous right ideal. The sum is then
/// required to be quite superfluous itself and to contain each summand; a
/// failure of either postcondition is a [`RadicalError::TheoremViolation`].
pub fn radical_by_quite_superfluous(lattice: &IdealLattice) -> Result<BitSet, RadicalError> {
    let (sum, is_qs, contains_every) = quite_superfluous_sum(lattice);
    if !is_qs {
        return Err(RadicalError::TheoremViolation(format!(
            "sum {sum} of the quite superfluous right ideals is not quite superfluous"
        )));
    }
    if !contains_every {
        return Err(RadicalError::TheoremViolation(format!(
            "sum {sum} does not contain every quite superfluous right ideal"
        )));
    }
    Ok(sum)
}

/// Route 4: `{ a | (a) is quite superfluous }`.
pub fn radical_by_quite_superfluous_principals(lattice: &IdealLattice) -> BitSet {
    let ring = lattice.ring();
    let mut members = BitSet::empty(ring.order());
    for a in ring.elements() {
        if lattice.quite_superfluous_at(lattice.principal_index(a)) {
            members.insert(a);
        }
    }
    members
}

/// Route 5: `{ a | (sa) is superfluous for all s }`.
pub fn radical_by_superfluous_left_multiples(lattice: &IdealLattice) -> BitSet {
    let ring = lattice.ring();
    let mut members = BitSet::empty(ring.order());
    for a in ring.elements() {
        let all_translates_superfluous = ring
            .elements()
            .all(|s| lattice.superfluous_at(lattice.principal_index(ring.mul(s, a))));
        if all_translates_superfluous {
            members.insert(a);
        }
    }
    members
}

/// For a proper regular right ideal with regulator `e`, returns a regular
/// maximal right ideal containing the ideal but not `e`, with `e` again a
/// regulator. Deterministic: the qualifying maximal ideal with the
/// lexicographically smallest member mask is chosen.
///
/// Such an ideal always exists; if the lattice search comes up empty, that
/// falsifies the theory and is surfaced as a theorem violation.
pub fn extend_to_regular_maximal(
    lattice: &IdealLattice,
    ideal: &RightIdeal,
    regulator: usize,
) -> Result<RightIdeal, RadicalError> {
    assert!(
        Arc::ptr_eq(lattice.ring(), ideal.ring()),
        "ideal and lattice must share a ring instance"
    );
    if ideal.is_full() {
        return Err(RadicalError::NotProper);
    }
    if !ideal.admits_regulator(regulator) {
        return Err(RadicalError::NotARegulator { regulator });
    }
    lattice
        .ideals()
        .iter()
        .enumerate()
        .find(|(k, m)| {
            lattice.maximal_at(*k)
                && ideal.is_subset_of(m)
                && !m.contains(regulator)
                && m.admits_regulator(regulator)
        })
        .map(|(_, m)| m.clone())
        .ok_or_else(|| {
            RadicalError::TheoremViolation(format!(
                "no regular maximal right ideal contains {ideal} and avoids {regulator}"
            ))
        })
}

/// The five radical member sets of one ring, as ascending index arrays.
///
/// Serialised field names are part of the report format: `eq1` and `eq2`
/// are the elementwise characterisations via quite superfluous principal
/// ideals and via superfluous left multiples, respectively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalSets {
    pub definition: Vec<usize>,
    pub maximal: Vec<usize>,
    pub quite_superfluous: Vec<usize>,
    pub eq1: Vec<usize>,
    pub eq2: Vec<usize>,
}

impl RadicalSets {
    pub fn all_equal(&self) -> bool {
        self.maximal == self.definition
            && self.quite_superfluous == self.definition
            && self.eq1 == self.definition
            && self.eq2 == self.definition
    }
}

/// One theorem check: a stable identifier, a verdict, and a counterexample
/// payload when the verdict is negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckRecord {
    fn passing(id: &str) -> Self {
        CheckRecord {
            id: id.to_string(),
            pass: true,
            counterexample: None,
        }
    }

    fn failing(id: &str, counterexample: String) -> Self {
        CheckRecord {
            id: id.to_string(),
            pass: false,
            counterexample: Some(counterexample),
        }
    }

    fn from_outcome(id: &str, outcome: Result<(), String>) -> Self {
        match outcome {
            Ok(()) => Self::passing(id),
            Err(ce) => Self::failing(id, ce),
        }
    }
}

/// Full verification report for one ring: the five radical computations and
/// the per-theorem outcomes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub name: String,
    pub radical: RadicalSets,
    pub checks: Vec<CheckRecord>,
}

impl RadicalReport {
    /// True iff all five member sets are identical.
    pub fn agreement(&self) -> bool {
        self.radical.all_equal()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Runs the five radical computations and the whole theorem battery on one
/// ring. Check failures are recorded in the report, never panicked on.
pub fn verify_ring(ring: &Arc<FiniteRing>, cap: usize) -> Result<RadicalReport, IdealError> {
    let lattice = IdealLattice::enumerate(ring, cap)?;
    Ok(verify_with_lattice(ring, &lattice))
}

fn verify_with_lattice(ring: &Arc<FiniteRing>, lattice: &IdealLattice) -> RadicalReport {
    let definition = radical_by_definition(ring);
    let maximal = radical_by_maximal_ideals(lattice);
    let (qs_sum, sum_is_qs, sum_contains_every) = quite_superfluous_sum(lattice);
    let eq1 = radical_by_quite_superfluous_principals(lattice);
    let eq2 = radical_by_superfluous_left_multiples(lattice);

    let sets = RadicalSets {
        definition: definition.to_vec(),
        maximal: maximal.to_vec(),
        quite_superfluous: qs_sum.to_vec(),
        eq1: eq1.to_vec(),
        eq2: eq2.to_vec(),
    };

    let mut checks = Vec::new();

    checks.push(CheckRecord::from_outcome(
        "five_route_agreement",
        if sets.all_equal() {
            Ok(())
        } else {
            Err(format!(
                "definition={definition} maximal={maximal} quite_superfluous={qs_sum} \
                 principal_qs={eq1} superfluous_left_multiples={eq2}"
            ))
        },
    ));

    checks.push(CheckRecord::from_outcome(
        "radical_two_sided",
        two_sided_check(ring, &definition),
    ));

    checks.push(CheckRecord::from_outcome(
        "quite_superfluous_iff_within_radical",
        corollary_check(lattice, &definition),
    ));

    checks.push(CheckRecord::from_outcome(
        "radical_quite_superfluous",
        if sum_is_qs {
            Ok(())
        } else {
            Err(format!("sum {qs_sum} is not quite superfluous"))
        },
    ));

    checks.push(CheckRecord::from_outcome(
        "radical_contains_quite_superfluous",
        if sum_contains_every {
            Ok(())
        } else {
            Err(format!(
                "sum {qs_sum} misses some quite superfluous right ideal"
            ))
        },
    ));

    checks.push(CheckRecord::from_outcome(
        "regular_maximal_extension",
        regular_maximal_extension_check(ring, lattice),
    ));

    if ring.is_unital() {
        let radical_ideal = RightIdeal::closure(ring, definition.iter());
        checks.push(CheckRecord::from_outcome(
            "unital_radical_largest_superfluous",
            unital_largest_superfluous_check(lattice, &radical_ideal),
        ));
        checks.push(CheckRecord::from_outcome(
            "unital_superfluous_matches_quite_superfluous",
            unital_equivalence_check(lattice),
        ));
    }

    checks.push(CheckRecord::from_outcome(
        "radical_whole_iff_no_proper_regular",
        whole_radical_remark_check(lattice, &definition),
    ));

    RadicalReport {
        name: ring.name().to_string(),
        radical: sets,
        checks,
    }
}

fn two_sided_check(ring: &FiniteRing, radical: &BitSet) -> Result<(), String> {
    for a in radical.iter() {
        if !radical.contains(ring.neg(a)) {
            return Err(format!("a={a}: -a={} escapes", ring.neg(a)));
        }
        for b in radical.iter() {
            if !radical.contains(ring.add(a, b)) {
                return Err(format!("a={a}, b={b}: a+b={} escapes", ring.add(a, b)));
            }
        }
        for r in ring.elements() {
            if !radical.contains(ring.mul(a, r)) {
                return Err(format!("a={a}, r={r}: a*r={} escapes", ring.mul(a, r)));
            }
            if !radical.contains(ring.mul(r, a)) {
                return Err(format!("a={a}, r={r}: r*a={} escapes", ring.mul(r, a)));
            }
        }
    }
    Ok(())
}

fn corollary_check(lattice: &IdealLattice, radical: &BitSet) -> Result<(), String> {
    for (k, ideal) in lattice.ideals().iter().enumerate() {
        let qs = lattice.quite_superfluous_at(k);
        let within = ideal.member_set().is_subset_of(radical);
        if qs != within {
            return Err(format!(
                "ideal {ideal}: quite_superfluous={qs} but within-radical={within}"
            ));
        }
    }
    Ok(())
}

fn regular_maximal_extension_check(
    ring: &FiniteRing,
    lattice: &IdealLattice,
) -> Result<(), String> {
    for (k, ideal) in lattice.ideals().iter().enumerate() {
        if ideal.is_full() {
            continue;
        }
        let Some(e) = lattice.regulator_at(k) else {
            continue;
        };
        if ideal.contains(e) {
            return Err(format!("ideal {ideal}: regulator {e} lies in the ideal"));
        }
        if right_quasi_regular_witness(ring, e).is_some() {
            return Err(format!(
                "ideal {ideal}: regulator {e} is right quasi-regular"
            ));
        }
        match extend_to_regular_maximal(lattice, ideal, e) {
            Ok(m) => {
                let maximal = lattice.is_maximal(&m);
                let contains = ideal.is_subset_of(&m);
                let avoids = !m.contains(e);
                let regulated = m.admits_regulator(e);
                if !(maximal && contains && avoids && regulated) {
                    return Err(format!(
                        "ideal {ideal}, regulator {e}: extension {m} fails \
                         (maximal={maximal}, contains={contains}, avoids={avoids}, \
                         regulated={regulated})"
                    ));
                }
            }
            Err(err) => return Err(format!("ideal {ideal}, regulator {e}: {err}")),
        }
    }
    Ok(())
}

fn unital_largest_superfluous_check(
    lattice: &IdealLattice,
    radical: &RightIdeal,
) -> Result<(), String> {
    if !lattice.is_superfluous(radical) {
        return Err(format!("radical {radical} is not superfluous"));
    }
    for (k, ideal) in lattice.ideals().iter().enumerate() {
        if lattice.superfluous_at(k) && !ideal.is_subset_of(radical) {
            return Err(format!(
                "superfluous ideal {ideal} is not within the radical {radical}"
            ));
        }
    }
    Ok(())
}

fn unital_equivalence_check(lattice: &IdealLattice) -> Result<(), String> {
    for (k, ideal) in lattice.ideals().iter().enumerate() {
        let superfluous = lattice.superfluous_at(k);
        let quite = lattice.quite_superfluous_at(k);
        if superfluous != quite {
            return Err(format!(
                "ideal {ideal}: superfluous={superfluous}, quite_superfluous={quite}"
            ));
        }
    }
    Ok(())
}

fn whole_radical_remark_check(lattice: &IdealLattice, radical: &BitSet) -> Result<(), String> {
    let radical_is_whole = radical.is_full();
    let proper_regular = lattice
        .ideals()
        .iter()
        .enumerate()
        .find(|(k, i)| !i.is_full() && lattice.regulator_at(*k).is_some());
    match (radical_is_whole, proper_regular) {
        (true, Some((_, ideal))) => Err(format!(
            "radical is the whole ring but {ideal} is a proper regular right ideal"
        )),
        (false, None) => Err(format!(
            "radical {radical} is proper but no proper regular right ideal exists"
        )),
        (true, None) => {
            for (k, ideal) in lattice.ideals().iter().enumerate() {
                if !lattice.quite_superfluous_at(k) {
                    return Err(format!(
                        "radical is the whole ring but {ideal} is not quite superfluous"
                    ));
                }
            }
            Ok(())
        }
        (false, Some(_)) => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::DEFAULT_LATTICE_CAP;

    fn arc(ring: FiniteRing) -> Arc<FiniteRing> {
        Arc::new(ring)
    }

    fn lattice(ring: &Arc<FiniteRing>) -> IdealLattice {
        IdealLattice::enumerate(ring, DEFAULT_LATTICE_CAP).unwrap()
    }

    #[test]
    fn quasi_regular_witnesses() {
        let z4 = FiniteRing::cyclic(4);
        assert_eq!(right_quasi_regular_witness(&z4, 0), Some(0));
        assert_eq!(right_quasi_regular_witness(&z4, 2), Some(2));

        let z2 = FiniteRing::cyclic(2);
        assert_eq!(right_quasi_regular_witness(&z2, 1), None);
    }

    #[test]
    fn radical_by_definition_examples() {
        assert_eq!(
            radical_by_definition(&FiniteRing::cyclic(4)).to_vec(),
            vec![0, 2]
        );
        assert_eq!(
            radical_by_definition(&FiniteRing::cyclic(6)).to_vec(),
            vec![0]
        );
        assert_eq!(
            radical_by_definition(&FiniteRing::null(3)).to_vec(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn radical_by_maximal_ideals_examples() {
        let z4 = arc(FiniteRing::cyclic(4));
        assert_eq!(
            radical_by_maximal_ideals(&lattice(&z4)).to_vec(),
            vec![0, 2]
        );

        let z6 = arc(FiniteRing::cyclic(6));
        assert_eq!(radical_by_maximal_ideals(&lattice(&z6)).to_vec(), vec![0]);

        // no proper regular right ideal: the intersection is over an empty
        // family and the radical is the whole ring
        let even = arc(FiniteRing::nonunital_ideal(2, 4));
        assert!(radical_by_maximal_ideals(&lattice(&even)).is_full());
    }

    #[test]
    fn radical_by_quite_superfluous_examples() {
        let z4 = arc(FiniteRing::cyclic(4));
        assert_eq!(
            radical_by_quite_superfluous(&lattice(&z4))
                .unwrap()
                .to_vec(),
            vec![0, 2]
        );

        let even = arc(FiniteRing::nonunital_ideal(2, 4));
        assert!(radical_by_quite_superfluous(&lattice(&even))
            .unwrap()
            .is_full());

        let zero = arc(FiniteRing::cyclic(1));
        assert!(radical_by_quite_superfluous(&lattice(&zero))
            .unwrap()
            .is_full());
    }

    #[test]
    fn elementwise_routes() {
        let z4 = arc(FiniteRing::cyclic(4));
        let lat = lattice(&z4);
        assert_eq!(
            radical_by_quite_superfluous_principals(&lat).to_vec(),
            vec![0, 2]
        );
        assert_eq!(
            radical_by_superfluous_left_multiples(&lat).to_vec(),
            vec![0, 2]
        );

        let z6 = arc(FiniteRing::cyclic(6));
        let lat = lattice(&z6);
        assert_eq!(
            radical_by_quite_superfluous_principals(&lat).to_vec(),
            vec![0]
        );
        assert_eq!(
            radical_by_superfluous_left_multiples(&lat).to_vec(),
            vec![0]
        );

        let null3 = arc(FiniteRing::null(3));
        let lat = lattice(&null3);
        assert_eq!(
            radical_by_quite_superfluous_principals(&lat).to_vec(),
            vec![0, 1, 2]
        );

        let zero = arc(FiniteRing::cyclic(1));
        let lat = lattice(&zero);
        assert_eq!(
            radical_by_superfluous_left_multiples(&lat).to_vec(),
            vec![0]
        );
    }

    #[test]
    fn regular_maximal_extension_examples() {
        let z4 = arc(FiniteRing::cyclic(4));
        let lat = lattice(&z4);
        let m = extend_to_regular_maximal(&lat, &RightIdeal::zero(&z4), 1).unwrap();
        assert_eq!(m.member_set().to_vec(), vec![0, 2]);

        // two qualifying maximal ideals; the smaller mask {0,3} wins
        let z6 = arc(FiniteRing::cyclic(6));
        let lat = lattice(&z6);
        let m = extend_to_regular_maximal(&lat, &RightIdeal::zero(&z6), 1).unwrap();
        assert_eq!(m.member_set().to_vec(), vec![0, 3]);

        let err = extend_to_regular_maximal(&lat, &RightIdeal::full(&z6), 1).unwrap_err();
        assert_eq!(err, RadicalError::NotProper);

        let err = extend_to_regular_maximal(&lat, &RightIdeal::zero(&z6), 0).unwrap_err();
        assert_eq!(err, RadicalError::NotARegulator { regulator: 0 });
    }

    #[test]
    fn verify_ring_passes_on_representative_rings() {
        for ring in [
            FiniteRing::cyclic(4),
            FiniteRing::nonunital_ideal(2, 4),
            FiniteRing::null(4),
        ] {
            let ring = arc(ring);
            let report = verify_ring(&ring, DEFAULT_LATTICE_CAP).unwrap();
            assert!(report.agreement(), "{}: {:?}", ring.name(), report.radical);
            assert!(
                report.all_pass(),
                "{}: {:?}",
                ring.name(),
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn report_serialises_with_expected_keys() {
        let ring = arc(FiniteRing::cyclic(4));
        let report = verify_ring(&ring, DEFAULT_LATTICE_CAP).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["name"], "Z4");
        assert_eq!(json["radical"]["definition"], serde_json::json!([0, 2]));
        assert_eq!(json["radical"]["eq1"], serde_json::json!([0, 2]));
        assert_eq!(json["radical"]["eq2"], serde_json::json!([0, 2]));
        assert!(json["checks"].as_array().unwrap().len() >= 7);
        // passing checks carry no counterexample key at all
        assert!(json["checks"][0].get("counterexample").is_none());
    }
}
