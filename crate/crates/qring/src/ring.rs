//! Finite associative rings, possibly without unity, as explicit Cayley tables.
//!
//! A ring of order `n` is stored as two `n x n` tables over element indices.
//! Index 0 is always the additive identity. Validation checks the full ring
//! axioms (abelian addition, associative multiplication, both distributive
//! laws) by exhaustive scan and reports the first violating triple; unity is
//! detected eagerly so unital-only theorems can branch without search.

use std::fmt;
use thiserror::Error;

/// Largest order accepted by table validation. Lattice enumeration applies
/// its own, much smaller cap (see [`crate::ideal::DEFAULT_LATTICE_CAP`]).
pub const MAX_VALIDATED_ORDER: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    /// A table is not `n x n` or holds an entry outside `0..n`.
    #[error("{table} table must be {order}x{order} with entries in 0..{order}")]
    BadTableShape { table: &'static str, order: usize },
    /// Addition fails an abelian-group law; `(a, b, c)` locates the first
    /// violation (unused positions are zero for laws of smaller arity).
    #[error("addition fails {law} at ({a}, {b}, {c})")]
    NotAbelianGroup {
        law: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("{side} distributivity fails at ({a}, {b}, {c})")]
    NotDistributive {
        side: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("ring order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// A finite associative ring given by full addition and multiplication
/// tables. Immutable after construction; element `0` is the additive
/// identity and `unity` is present iff a two-sided identity exists.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    unity: Option<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteRing {
    /// Validates `add` and `mul` as the tables of a finite associative ring
    /// and returns it with unity detected. The order is the table dimension.
    pub fn new(
        name: impl Into<String>,
        add_rows: &[Vec<usize>],
        mul_rows: &[Vec<usize>],
    ) -> Result<Self, RingError> {
        let order = add_rows.len();
        if order == 0 {
            return Err(RingError::BadTableShape {
                table: "add",
                order,
            });
        }
        if order > MAX_VALIDATED_ORDER {
            return Err(RingError::OrderCapExceeded {
                order,
                cap: MAX_VALIDATED_ORDER,
            });
        }
        let add = flatten_table("add", order, add_rows)?;
        let mul = flatten_table("mul", order, mul_rows)?;

        validate_laws(order, &add, &mul)?;
        Ok(Self::from_parts(name.into(), order, add, mul, None))
    }

    // Construction path for tables already known to satisfy the ring laws
    // (parametric families and products of validated rings). Computes the
    // negation table and scans for unity.
    fn from_parts(
        name: String,
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == 0)
                    .expect("every element has a negative") as u16
            })
            .collect();
        let unity = (0..order).find(|&e| {
            (0..order).all(|a| mul[e * order + a] == a as u16 && mul[a * order + e] == a as u16)
        });
        FiniteRing {
            name,
            order,
            add,
            mul,
            neg,
            unity,
            labels,
        }
    }

    /// The cyclic ring `Z_n` with unity (the zero ring when `n = 1`).
    pub fn cyclic(n: usize) -> Self {
        assert!((1..=MAX_VALIDATED_ORDER).contains(&n));
        let add = table(n, |a, b| (a + b) % n);
        let mul = table(n, |a, b| (a * b) % n);
        Self::from_parts(format!("Z{n}"), n, add, mul, None)
    }

    /// The null ring on the additive group `Z_n`: every product is zero.
    /// Non-unital for every `n >= 2`.
    pub fn null(n: usize) -> Self {
        assert!((1..=MAX_VALIDATED_ORDER).contains(&n));
        let add = table(n, |a, b| (a + b) % n);
        let mul = vec![0u16; n * n];
        Self::from_parts(format!("null{n}"), n, add, mul, None)
    }

    /// The ideal `(m)` of `Z_{mn}` viewed as a ring in its own right: the
    /// order-`n` ring `mZ/mnZ` whose element `i` represents the residue
    /// `i * m`. Elements are labelled by the residues they represent.
    pub fn nonunital_ideal(m: usize, n: usize) -> Self {
        assert!(m >= 2 && (1..=MAX_VALIDATED_ORDER).contains(&n));
        let add = table(n, |a, b| (a + b) % n);
        // (am)(bm) = (abm mod n) * m  in Z_{mn}
        let mul = table(n, |a, b| (a * b * m) % n);
        let labels = (0..n).map(|i| (i * m).to_string()).collect();
        Self::from_parts(format!("{m}Z/{}Z", m * n), n, add, mul, Some(labels))
    }

    /// Componentwise product ring. Index of `(x, y)` is `x * |S| + y`, so
    /// `(0, 0)` is index 0. Unity is present iff both factors are unital.
    pub fn direct_product(&self, other: &FiniteRing) -> Result<Self, RingError> {
        let order = self.order * other.order;
        if order > MAX_VALIDATED_ORDER {
            return Err(RingError::OrderCapExceeded {
                order,
                cap: MAX_VALIDATED_ORDER,
            });
        }
        let pair = |i: usize| (i / other.order, i % other.order);
        let add = table(order, |i, j| {
            let ((xa, ya), (xb, yb)) = (pair(i), pair(j));
            self.add(xa, xb) * other.order + other.add(ya, yb)
        });
        let mul = table(order, |i, j| {
            let ((xa, ya), (xb, yb)) = (pair(i), pair(j));
            self.mul(xa, xb) * other.order + other.mul(ya, yb)
        });
        let labels = (0..order)
            .map(|i| {
                let (x, y) = pair(i);
                format!("({},{})", self.label(x), other.label(y))
            })
            .collect();
        Ok(Self::from_parts(
            format!("{} x {}", self.name, other.name),
            order,
            add,
            mul,
            Some(labels),
        ))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Attaches display labels for the elements. Panics unless exactly one
    /// label per element is supplied.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unity(&self) -> Option<usize> {
        self.unity
    }

    pub fn is_unital(&self) -> bool {
        self.unity.is_some()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of element `i`: the attached label if any, else the
    /// index itself.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => i.to_string(),
        }
    }

    /// The tables as row vectors, for serialisation and re-validation.
    pub fn tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let rows = |t: &[u16]| {
            (0..self.order)
                .map(|a| {
                    (0..self.order)
                        .map(|b| t[a * self.order + b] as usize)
                        .collect()
                })
                .collect()
        };
        (rows(&self.add), rows(&self.mul))
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {}, ", self.name, self.order)?;
        match self.unity {
            Some(e) => write!(f, "unity at index {e})"),
            None => write!(f, "non-unital)"),
        }
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn table(n: usize, entry: impl Fn(usize, usize) -> usize) -> Vec<u16> {
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            out.push(entry(a, b) as u16);
        }
    }
    out
}

fn flatten_table(
    table: &'static str,
    order: usize,
    rows: &[Vec<usize>],
) -> Result<Vec<u16>, RingError> {
    if rows.len() != order {
        return Err(RingError::BadTableShape { table, order });
    }
    let mut flat = Vec::with_capacity(order * order);
    for row in rows {
        if row.len() != order {
            return Err(RingError::BadTableShape { table, order });
        }
        for &entry in row {
            if entry >= order {
                return Err(RingError::BadTableShape { table, order });
            }
            flat.push(entry as u16);
        }
    }
    Ok(flat)
}

// Exhaustive law checks, each reporting the first violation in ascending
// scan order. Distributivity is checked before multiplicative associativity
// so that a table failing both reports the distributivity triple.
fn validate_laws(n: usize, add: &[u16], mul: &[u16]) -> Result<(), RingError> {
    let at = |t: &[u16], a: usize, b: usize| t[a * n + b] as usize;

    for i in 0..n {
        if at(add, 0, i) != i {
            return Err(RingError::NotAbelianGroup {
                law: "identity (index 0)",
                a: 0,
                b: i,
                c: 0,
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if at(add, a, b) != at(add, b, a) {
                return Err(RingError::NotAbelianGroup {
                    law: "commutativity",
                    a,
                    b,
                    c: 0,
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(add, at(add, a, b), c) != at(add, a, at(add, b, c)) {
                    return Err(RingError::NotAbelianGroup {
                        law: "associativity",
                        a,
                        b,
                        c,
                    });
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| at(add, a, b) == 0) {
            return Err(RingError::NotAbelianGroup {
                law: "negation",
                a,
                b: 0,
                c: 0,
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)) {
                    return Err(RingError::NotDistributive {
                        side: "left",
                        a,
                        b,
                        c,
                    });
                }
                if at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c)) {
                    return Err(RingError::NotDistributive {
                        side: "right",
                        a,
                        b,
                        c,
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)) {
                    return Err(RingError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mod_table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    }

    #[test]
    fn zero_ring_has_unity_zero() {
        let ring = FiniteRing::new("zero", &[vec![0]], &[vec![0]]).unwrap();
        assert_eq!(ring.order(), 1);
        assert_eq!(ring.unity(), Some(0));
    }

    #[test]
    fn null_ring_of_order_two_is_valid_and_non_unital() {
        let add = mod_table(2, |a, b| (a + b) % 2);
        let mul = mod_table(2, |_, _| 0);
        let ring = FiniteRing::new("null2", &add, &mul).unwrap();
        assert_eq!(ring.unity(), None);
    }

    #[test]
    fn shifted_product_table_reports_first_distributivity_violation() {
        let add = mod_table(4, |a, b| (a + b) % 4);
        let mul = mod_table(4, |a, b| (a * b + 1) % 4);
        let err = FiniteRing::new("bad", &add, &mul).unwrap_err();
        assert_eq!(
            err,
            RingError::NotDistributive {
                side: "left",
                a: 0,
                b: 0,
                c: 0
            }
        );
    }

    #[test]
    fn table_shape_is_checked_before_laws() {
        let err =
            FiniteRing::new("bad", &[vec![0, 1], vec![1]], &[vec![0, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(
            err,
            RingError::BadTableShape {
                table: "add",
                order: 2
            }
        );

        let err = FiniteRing::new("bad", &[vec![0, 1], vec![1, 0]], &[vec![0, 7], vec![0, 0]])
            .unwrap_err();
        assert_eq!(
            err,
            RingError::BadTableShape {
                table: "mul",
                order: 2
            }
        );
    }

    #[test]
    fn cyclic_rings_have_unity_at_one() {
        assert_eq!(FiniteRing::cyclic(1).unity(), Some(0));
        for n in 2..=12 {
            let ring = FiniteRing::cyclic(n);
            assert_eq!(ring.unity(), Some(1), "Z{n}");
        }
    }

    #[test]
    fn null_rings_have_no_unity_from_order_two() {
        assert_eq!(FiniteRing::null(1).unity(), Some(0));
        for n in 2..=6 {
            assert_eq!(FiniteRing::null(n).unity(), None);
        }
    }

    #[test]
    fn nonunital_ideal_two_four_is_the_even_residues_mod_eight() {
        let ring = FiniteRing::nonunital_ideal(2, 4);
        assert_eq!(ring.order(), 4);
        assert_eq!(ring.unity(), None);
        // index i stands for residue 2i mod 8; check 2*6 = 12 = 4 -> index 2
        assert_eq!(ring.mul(1, 3), 2);
        assert_eq!(ring.label(3), "6");
    }

    #[test]
    fn nonunital_ideal_degenerate_cases() {
        let zero = FiniteRing::nonunital_ideal(2, 1);
        assert_eq!(zero.order(), 1);
        assert_eq!(zero.unity(), Some(0));

        // 3Z/9Z: the product of any three elements is zero
        let ring = FiniteRing::nonunital_ideal(3, 3);
        for a in ring.elements() {
            for b in ring.elements() {
                for c in ring.elements() {
                    assert_eq!(ring.mul(ring.mul(a, b), c), 0);
                }
            }
        }
    }

    #[test]
    fn constructed_rings_revalidate() {
        let rings = [
            FiniteRing::cyclic(6),
            FiniteRing::null(4),
            FiniteRing::nonunital_ideal(2, 4),
            FiniteRing::nonunital_ideal(3, 3),
            FiniteRing::cyclic(2)
                .direct_product(&FiniteRing::null(2))
                .unwrap(),
        ];
        for ring in rings {
            let (add, mul) = ring.tables();
            let revalidated = FiniteRing::new(ring.name(), &add, &mul).unwrap();
            assert_eq!(revalidated.unity(), ring.unity());
        }
    }

    #[test]
    fn direct_product_indexing_and_unity() {
        let z2 = FiniteRing::cyclic(2);
        let z3 = FiniteRing::cyclic(3);
        let prod = z2.direct_product(&z3).unwrap();
        assert_eq!(prod.order(), 6);
        // (0,0) is index 0 and unity is (1,1) = 1*3 + 1
        assert_eq!(prod.add(0, 0), 0);
        assert_eq!(prod.unity(), Some(4));

        let null2 = FiniteRing::null(2);
        let mixed = null2.direct_product(&z2).unwrap();
        assert_eq!(mixed.order(), 4);
        assert_eq!(mixed.unity(), None);
    }

    #[test]
    fn zero_factor_is_absorbing() {
        let ring = FiniteRing::nonunital_ideal(2, 4);
        let prod = FiniteRing::cyclic(1).direct_product(&ring).unwrap();
        assert_eq!(prod.tables(), ring.tables());
    }

    #[test]
    fn product_order_cap_is_enforced() {
        let big = FiniteRing::null(80);
        let err = big.direct_product(&FiniteRing::null(80)).unwrap_err();
        assert!(matches!(
            err,
            RingError::OrderCapExceeded { order: 6400, .. }
        ));
    }
}
