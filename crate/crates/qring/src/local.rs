//! Exact arithmetic in the ring of rationals `s/t` whose denominator is
//! coprime to 6, together with its ideals `(2^j 3^k)`.
//!
//! This ring is the localisation of the integers away from 2 and 3. Its
//! units are exactly the fractions whose numerator is also coprime to 6,
//! so unit and ideal-membership questions reduce to the 2-adic and 3-adic
//! valuations of the reduced numerator; denominators are units at both
//! primes and never matter.
//!
//! The even fractions (numerator divisible by 2) form the ideal `(2)`,
//! which is a non-unital ring in its own right. Right quasi-regularity of
//! `a` inside `(2)` is decided by the unit criterion for `1 - a` in the
//! ambient ring: the canonical solution `x = -a * (1 - a)^{-1}` of
//! `ax = a + x` has the same 2-adic valuation as `a`, so it lies in `(2)`
//! whenever `a` does (unit tests re-check this on random samples).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

use crate::rng::SplitMix64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("reduced denominator {0} shares a factor with 6")]
    DenominatorNotCoprimeTo6(BigInt),
    #[error("element is not an even fraction")]
    NotInEvenSubring,
    #[error("element lies in the radical, no counterexample exists")]
    InRadical,
}

/// An exact fraction `s/t` with `t > 0` coprime to 6 and `gcd(s, t) = 1`.
/// Zero is canonically `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LocalizedRational {
    num: BigInt,
    den: BigInt,
}

impl LocalizedRational {
    /// Normalises `s/t` (reduce, positive denominator) and rejects it when
    /// the reduced denominator shares a factor with 6. Inputs that reduce
    /// to an admissible denominator are accepted even if the raw `t` is
    /// not, e.g. `2/2`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, LocalError> {
        let mut num = num.into();
        let mut den = den.into();
        if den.is_zero() {
            return Err(LocalError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        if !g.is_zero() {
            num /= &g;
            den /= &g;
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            den.set_one();
        }
        if (&den % 2u32).is_zero() || (&den % 3u32).is_zero() {
            return Err(LocalError::DenominatorNotCoprimeTo6(den));
        }
        Ok(LocalizedRational { num, den })
    }

    pub fn zero() -> Self {
        LocalizedRational {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        LocalizedRational {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    // Denominators coprime to 6 multiply to denominators coprime to 6, so
    // the ring operations cannot fail.
    fn combined(num: BigInt, den: BigInt) -> Self {
        Self::new(num, den).expect("denominator stays coprime to 6")
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::combined(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::combined(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        LocalizedRational {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Units are exactly the nonzero fractions whose numerator is coprime
    /// to 6; the inverse of `s/t` is then `t/s`.
    pub fn is_unit(&self) -> bool {
        !self.num.is_zero() && self.num.gcd(&BigInt::from(6)).is_one()
    }

    /// `t/s` when this fraction is a unit.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_unit() {
            Some(Self::combined(self.den.clone(), self.num.clone()))
        } else {
            None
        }
    }

    /// Membership in the ideal `(2^j 3^k)`, decided by the 2-adic and
    /// 3-adic valuations of the reduced numerator.
    pub fn in_ideal(&self, ideal: LocalIdeal) -> bool {
        if self.num.is_zero() {
            return true;
        }
        valuation(&self.num, 2) >= u64::from(ideal.two)
            && valuation(&self.num, 3) >= u64::from(ideal.three)
    }

    /// Right quasi-regularity: some `x` solves `ax = a + x`, equivalently
    /// `1 - a` is a unit. For even fractions this also decides
    /// quasi-regularity inside the non-unital ring `(2)` (see module docs).
    pub fn is_right_quasi_regular(&self) -> bool {
        Self::one().sub(self).is_unit()
    }

    /// Membership in the Jacobson radical of the full localised ring,
    /// which is the ideal `(6)`.
    pub fn in_radical(&self) -> bool {
        self.in_ideal(LocalIdeal::SIX)
    }

    /// Membership in the Jacobson radical of the non-unital ring of even
    /// fractions: the intersection of `(2)` with the ambient radical,
    /// which again is `(6)`.
    pub fn in_even_subring_radical(&self) -> bool {
        let member = self.in_ideal(LocalIdeal::TWO) && self.in_radical();
        debug_assert_eq!(member, self.in_ideal(LocalIdeal::SIX));
        member
    }

    /// Splits an even fraction as `a = u - v` with `u = 3a` in `(6)` and
    /// `v = 2a` in `(4)`. Exhibits `(6) + (4)` as the whole even subring,
    /// which is why `(6)` is not superfluous there.
    pub fn decompose_witness(&self) -> Result<(Self, Self), LocalError> {
        if !self.in_ideal(LocalIdeal::TWO) {
            return Err(LocalError::NotInEvenSubring);
        }
        let three = Self::combined(BigInt::from(3), BigInt::one());
        let two = Self::combined(BigInt::from(2), BigInt::one());
        Ok((self.mul(&three), self.mul(&two)))
    }

    /// For `a = s/t` outside the radical, the smallest integer `b >= 0`
    /// such that `ab` is not right quasi-regular: solve `sb = t` modulo 3
    /// when 3 does not divide `s`, modulo 2 otherwise. The returned value
    /// is re-verified before it is handed out.
    pub fn non_quasi_regular_multiplier(&self) -> Result<u32, LocalError> {
        if self.in_radical() {
            return Err(LocalError::InRadical);
        }
        let modulus: u32 = if !(&self.num % 3u32).is_zero() { 3 } else { 2 };
        let b = (0..modulus)
            .find(|&b| {
                (&self.num * b - &self.den)
                    .mod_floor(&BigInt::from(modulus))
                    .is_zero()
            })
            .expect("numerator is invertible modulo the chosen prime");
        let product = self.mul(&Self::combined(BigInt::from(b), BigInt::one()));
        assert!(
            !product.is_right_quasi_regular(),
            "recipe produced a quasi-regular product"
        );
        Ok(b)
    }

    /// Deterministic sample with numerator in `-magnitude..=magnitude` and
    /// a denominator coprime to 6.
    pub fn sample(rng: &mut SplitMix64, magnitude: i64) -> Self {
        let num = rng.range_i64(-magnitude, magnitude + 1);
        let mut den = 1 + rng.below(magnitude as u64) as i64;
        while den % 2 == 0 || den % 3 == 0 {
            den += 1;
        }
        Self::new(num, den).expect("denominator chosen coprime to 6")
    }
}

impl From<i64> for LocalizedRational {
    fn from(value: i64) -> Self {
        Self::new(value, 1).expect("integer denominators are admissible")
    }
}

impl fmt::Display for LocalizedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for LocalizedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The ideal `(2^two * 3^three)` of the localised ring, named by the
/// exponents of its generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalIdeal {
    pub two: u32,
    pub three: u32,
}

impl LocalIdeal {
    /// `(2)`, the even fractions, a non-unital ring in its own right.
    pub const TWO: LocalIdeal = LocalIdeal { two: 1, three: 0 };
    /// `(4)`, a proper ideal of `(2)`.
    pub const FOUR: LocalIdeal = LocalIdeal { two: 2, three: 0 };
    /// `(6)`, the Jacobson radical of the localised ring and of `(2)`.
    pub const SIX: LocalIdeal = LocalIdeal { two: 1, three: 1 };

    pub fn new(two: u32, three: u32) -> Self {
        LocalIdeal { two, three }
    }

    pub fn generator(&self) -> BigInt {
        BigInt::from(2).pow(self.two) * BigInt::from(3).pow(self.three)
    }

    /// Deterministic sample of a member: the generator times a random
    /// element of the ring.
    pub fn sample_member(&self, rng: &mut SplitMix64, magnitude: i64) -> LocalizedRational {
        let factor = LocalizedRational::sample(rng, magnitude);
        let generator = LocalizedRational::new(self.generator(), 1).expect("integer");
        generator.mul(&factor)
    }
}

impl fmt::Display for LocalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator())
    }
}

fn valuation(n: &BigInt, p: u32) -> u64 {
    debug_assert!(!n.is_zero());
    if p == 2 {
        return n.trailing_zeros().unwrap_or(0);
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lr(num: i64, den: i64) -> LocalizedRational {
        LocalizedRational::new(num, den).unwrap()
    }

    #[test]
    fn normalisation() {
        let x = lr(10, -5);
        assert_eq!((x.num(), x.den()), (&BigInt::from(-2), &BigInt::from(1)));
        assert_eq!(lr(0, 35).to_string(), "0/1");
        assert_eq!(lr(6, 7).to_string(), "6/7");
        // reduces to 1/1 before the coprimality test
        assert_eq!(lr(2, 2).to_string(), "1/1");
    }

    #[test]
    fn inadmissible_denominators_are_rejected() {
        assert_eq!(
            LocalizedRational::new(1, 2).unwrap_err(),
            LocalError::DenominatorNotCoprimeTo6(BigInt::from(2))
        );
        assert!(matches!(
            LocalizedRational::new(5, 9).unwrap_err(),
            LocalError::DenominatorNotCoprimeTo6(_)
        ));
        assert_eq!(
            LocalizedRational::new(1, 0).unwrap_err(),
            LocalError::ZeroDenominator
        );
    }

    #[test]
    fn arithmetic() {
        assert_eq!(lr(1, 5).add(&lr(2, 5)), lr(3, 5));
        assert_eq!(lr(6, 5).mul(&lr(5, 7)), lr(6, 7));
        assert_eq!(lr(2, 7).sub(&lr(2, 7)), LocalizedRational::zero());
    }

    #[test]
    fn units() {
        assert!(lr(5, 7).is_unit());
        assert!(!lr(6, 7).is_unit());
        assert!(!LocalizedRational::zero().is_unit());
        // the inverse of s/t is t/s
        assert_eq!(lr(5, 7).inverse().unwrap(), lr(7, 5));
        assert_eq!(lr(6, 7).inverse(), None);
    }

    #[test]
    fn ideal_membership_by_valuation() {
        assert!(lr(6, 7).in_ideal(LocalIdeal::SIX));
        assert!(!lr(2, 1).in_ideal(LocalIdeal::FOUR));
        assert!(LocalizedRational::zero().in_ideal(LocalIdeal::new(5, 5)));
    }

    #[test]
    fn ideal_nesting_witnesses() {
        let six = lr(6, 1);
        let four = lr(4, 1);
        assert!(six.in_ideal(LocalIdeal::TWO));
        assert!(four.in_ideal(LocalIdeal::TWO));
        assert!(!six.in_ideal(LocalIdeal::FOUR));
        assert!(!four.in_ideal(LocalIdeal::SIX));
    }

    #[test]
    fn quasi_regularity() {
        assert!(lr(6, 7).is_right_quasi_regular()); // 1 - 6/7 = 1/7, a unit
        assert!(!lr(4, 1).is_right_quasi_regular()); // 1 - 4 = -3
        assert!(LocalizedRational::zero().is_right_quasi_regular());
    }

    #[test]
    fn radical_membership() {
        assert!(lr(6, 5).in_radical());
        assert!(!lr(3, 5).in_radical());
        assert!(LocalizedRational::zero().in_radical());

        assert!(lr(6, 7).in_even_subring_radical());
        assert!(!lr(2, 7).in_even_subring_radical());
        assert!(!lr(4, 1).in_even_subring_radical());
    }

    #[test]
    fn decomposition() {
        assert_eq!(lr(2, 7).decompose_witness().unwrap(), (lr(6, 7), lr(4, 7)));
        assert_eq!(
            LocalizedRational::zero().decompose_witness().unwrap(),
            (LocalizedRational::zero(), LocalizedRational::zero())
        );
        assert_eq!(
            lr(-2, 5).decompose_witness().unwrap(),
            (lr(-6, 5), lr(-4, 5))
        );
        assert_eq!(
            lr(3, 5).decompose_witness().unwrap_err(),
            LocalError::NotInEvenSubring
        );
    }

    #[test]
    fn non_quasi_regular_multipliers() {
        assert_eq!(lr(2, 1).non_quasi_regular_multiplier().unwrap(), 2);
        assert_eq!(lr(3, 1).non_quasi_regular_multiplier().unwrap(), 1);
        assert_eq!(
            lr(6, 7).non_quasi_regular_multiplier().unwrap_err(),
            LocalError::InRadical
        );
    }

    #[test]
    fn even_quasi_regular_solution_stays_even() {
        // x = -a (1-a)^{-1} solves ax = a + x and lies in (2) with a
        let mut rng = SplitMix64::new(11);
        let mut checked = 0;
        while checked < 100 {
            let a = LocalIdeal::TWO.sample_member(&mut rng, 500);
            if !a.is_right_quasi_regular() {
                continue;
            }
            let x = a
                .neg()
                .mul(&LocalizedRational::one().sub(&a).inverse().unwrap());
            assert_eq!(a.mul(&x), a.add(&x));
            assert!(x.in_ideal(LocalIdeal::TWO));
            checked += 1;
        }
    }

    fn coprime_den() -> impl Strategy<Value = i64> {
        (1i64..10_000).prop_map(|mut t| {
            while t % 2 == 0 || t % 3 == 0 {
                t += 1;
            }
            t
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_operations_preserve_validity(
            s1 in -10_000i64..10_000, t1 in coprime_den(),
            s2 in -10_000i64..10_000, t2 in coprime_den(),
        ) {
            let a = lr(s1, t1);
            let b = lr(s2, t2);
            for v in [a.add(&b), a.mul(&b), a.neg(), a.sub(&b)] {
                let den = v.den().clone();
                prop_assert!(!(&den % 2u32).is_zero() && !(&den % 3u32).is_zero());
                prop_assert!(v.num().gcd(v.den()).is_one() || v.num().is_zero());
            }
        }

        #[test]
        fn products_with_radical_members_keep_both_valuations(
            s in 1i64..10_000, t in coprime_den(),
            s2 in 1i64..10_000, t2 in coprime_den(),
        ) {
            let a = lr(6 * s, t);
            let b = lr(s2, t2);
            prop_assert!(a.mul(&b).in_ideal(LocalIdeal::SIX));
        }
    }
}
