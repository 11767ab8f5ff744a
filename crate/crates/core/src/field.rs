//! A minimal exact-field abstraction shared by the coefficient domains.
//!
//! Rings are lightweight handle objects and elements are plain data, so a
//! prime field can carry its modulus without every element repeating it.
//! The algebra, lattice, and curve machinery is generic over [`Field`], which
//! lets the same code run over `Q`, `Q(zeta_N)`, `F_p`, and the Laurent
//! fraction field used for formally free parameters.

use crate::Rational;
use num_traits::{One, Signed, Zero};
use std::fmt::{Debug, Display};

/// An exact field with decidable equality. `inv` returns `None` exactly on
/// zero; every operation is a pure function of its inputs.
pub trait Field: Clone + Debug + PartialEq {
    type Elem: Clone + PartialEq + Debug + Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a^e` for any integer exponent; negative exponents invert first.
    fn pow_i64(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            k >>= 1;
        }
        Some(acc)
    }

    /// Sum of a slice, zero when empty.
    fn sum(&self, xs: &[Self::Elem]) -> Self::Elem {
        xs.iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// The rational numbers, with elements kept in lowest terms by `num-rational`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        Zero::is_zero(a)
    }

    fn is_one(&self, a: &Rational) -> bool {
        One::is_one(a)
    }
}

/// The prime field `F_p` for `p < 2^63`, elements reduced representatives in
/// `[0, p)`. Products go through `u128` so no overflow is possible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..1u64 << 63).contains(&p));
        PrimeField { p }
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Image of a rational with denominator invertible mod p.
    pub fn reduce_rational(&self, r: &Rational) -> Option<u64> {
        let p = num_bigint::BigInt::from(self.p);
        let den = (r.denom() % &p + &p) % &p;
        let den_u = u64::try_from(&den).ok()?;
        if den_u == 0 {
            return None;
        }
        let num = (r.numer() % &p + &p) % &p;
        let num_u = u64::try_from(&num).ok()?;
        Some(self.mul(&num_u, &self.inv(&den_u)?))
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2); p is prime by construction.
        Some(crate::exactnum::finite::pow_mod(*a, self.p - 2, self.p))
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

pub fn rational_is_negative(x: &Rational) -> bool {
    x.is_negative()
}
