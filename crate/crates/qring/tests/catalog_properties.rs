//! Structural properties that must hold on every ring of the built-in
//! catalog, checked ideal by ideal against the enumerated lattices.

use std::sync::Arc;

use qring::catalog::catalog;
use qring::ideal::{IdealLattice, RightIdeal, DEFAULT_LATTICE_CAP};
use qring::radical::{radical_by_definition, verify_ring};
use qring::ring::FiniteRing;

fn lattices() -> Vec<(Arc<FiniteRing>, IdealLattice)> {
    catalog()
        .into_iter()
        .map(|ring| {
            let lattice = IdealLattice::enumerate(&ring, DEFAULT_LATTICE_CAP).unwrap();
            (ring, lattice)
        })
        .collect()
}

#[test]
fn superfluous_implies_quite_superfluous() {
    for (ring, lattice) in &lattices() {
        for (k, ideal) in lattice.ideals().iter().enumerate() {
            if lattice.superfluous_at(k) {
                assert!(lattice.quite_superfluous_at(k), "{}: {ideal}", ring.name());
            }
        }
    }
}

#[test]
fn ideals_within_a_quite_superfluous_ideal_are_quite_superfluous() {
    for (ring, lattice) in &lattices() {
        for (k, outer) in lattice.ideals().iter().enumerate() {
            if !lattice.quite_superfluous_at(k) {
                continue;
            }
            for (j, inner) in lattice.ideals().iter().enumerate() {
                if inner.is_subset_of(outer) {
                    assert!(
                        lattice.quite_superfluous_at(j),
                        "{}: {inner} inside {outer}",
                        ring.name()
                    );
                }
            }
        }
    }
}

#[test]
fn unital_rings_have_every_ideal_regular_with_unity_as_regulator() {
    let mut unital = 0;
    for (ring, lattice) in &lattices() {
        let Some(unity) = ring.unity() else { continue };
        unital += 1;
        for (k, ideal) in lattice.ideals().iter().enumerate() {
            assert!(ideal.admits_regulator(unity), "{}: {ideal}", ring.name());
            let smallest = lattice.regulator_at(k).unwrap();
            assert!(smallest <= unity);
        }
    }
    assert!(unital >= 8);
}

#[test]
fn principal_quite_superfluous_iff_all_left_multiples_superfluous() {
    for (ring, lattice) in &lattices() {
        for a in ring.elements() {
            let principal_qs = lattice.quite_superfluous_at(lattice.principal_index(a));
            let multiples_superfluous = ring
                .elements()
                .all(|s| lattice.superfluous_at(lattice.principal_index(ring.mul(s, a))));
            assert_eq!(
                principal_qs,
                multiples_superfluous,
                "{}: element {a}",
                ring.name()
            );
        }
    }
}

#[test]
fn radical_is_a_two_sided_ideal_everywhere() {
    for (ring, _) in &lattices() {
        let radical = radical_by_definition(ring);
        let closed = RightIdeal::closure(ring, radical.iter());
        assert_eq!(closed.member_set(), &radical, "{}", ring.name());
        for a in radical.iter() {
            for r in ring.elements() {
                assert!(radical.contains(ring.mul(r, a)), "{}", ring.name());
            }
        }
    }
}

#[test]
fn product_with_coprime_cyclic_factors_has_the_cyclic_radical() {
    let z2 = Arc::new(FiniteRing::cyclic(2));
    let z6 = Arc::new(FiniteRing::cyclic(6));
    let product = Arc::new(z2.direct_product(&FiniteRing::cyclic(3)).unwrap());
    assert_eq!(radical_by_definition(&product).to_vec(), vec![0]);
    assert_eq!(radical_by_definition(&z6).to_vec(), vec![0]);
}

#[test]
fn full_battery_passes_on_every_catalog_ring() {
    for ring in catalog() {
        let report = verify_ring(&ring, DEFAULT_LATTICE_CAP).unwrap();
        assert!(report.agreement(), "{}", ring.name());
        assert!(
            report.all_pass(),
            "{}: {:?}",
            ring.name(),
            report.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn lattice_types_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<FiniteRing>();
    assert_send_sync::<RightIdeal>();
    assert_send_sync::<IdealLattice>();
}
