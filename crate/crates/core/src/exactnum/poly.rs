//! Dense univariate polynomials over any [`Field`].
//!
//! Coefficients are stored low degree first with no trailing zeros; the zero
//! polynomial is the empty vector. Used for `Q[t]` (cyclotomic reduction) and
//! `F_p[t]` (finite extension arithmetic).

use crate::field::Field;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(ring: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(ring: &F) -> Self {
        Poly {
            coeffs: vec![ring.one()],
        }
    }

    pub fn constant(ring: &F, c: F::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `t^k`.
    pub fn monomial(ring: &F, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k + 1];
        coeffs[k] = ring.one();
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, ring: &F, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, ring: &F) -> bool {
        self.leading().is_some_and(|c| ring.is_one(c))
    }

    pub fn add(&self, ring: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ring.add(&self.coeff(ring, i), &other.coeff(ring, i)))
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn sub(&self, ring: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ring.sub(&self.coeff(ring, i), &other.coeff(ring, i)))
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn neg(&self, ring: &F) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect(),
        }
    }

    pub fn scale(&self, ring: &F, s: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|c| ring.mul(c, s)).collect();
        Self::new(ring, coeffs)
    }

    pub fn mul(&self, ring: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(a, b));
            }
        }
        Self::new(ring, coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    /// Panics on a zero divisor.
    pub fn divrem(&self, ring: &F, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.leading().expect("division by zero polynomial");
        let dinv = ring.inv(dlead).expect("leading coefficient not invertible");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![ring.zero(); rem.len() - ddeg];
        for i in (ddeg..rem.len()).rev() {
            if ring.is_zero(&rem[i]) {
                continue;
            }
            let q = ring.mul(&rem[i], &dinv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let idx = i - ddeg + j;
                rem[idx] = ring.sub(&rem[idx], &ring.mul(&q, d));
            }
            quot[i - ddeg] = q;
        }
        (Self::new(ring, quot), Self::new(ring, rem))
    }

    pub fn rem(&self, ring: &F, divisor: &Self) -> Self {
        self.divrem(ring, divisor).1
    }

    pub fn to_monic(&self, ring: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(ring, &ring.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, ring: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(ring, &b);
            a = b;
            b = r;
        }
        a.to_monic(ring)
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s*self + t*other`, `g` monic.
    pub fn egcd(&self, ring: &F, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Self::one(ring);
        let mut s1 = Self::zero();
        let mut t0 = Self::zero();
        let mut t1 = Self::one(ring);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(ring, &r1);
            let s = s0.sub(ring, &q.mul(ring, &s1));
            let t = t0.sub(ring, &q.mul(ring, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = ring.inv(l).expect("nonzero leading coefficient");
                (
                    r0.scale(ring, &li),
                    s0.scale(ring, &li),
                    t0.scale(ring, &li),
                )
            }
        }
    }

    pub fn eval(&self, ring: &F, x: &F::Elem) -> F::Elem {
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), c);
        }
        acc
    }

    /// `base^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(ring: &F, base: &Self, mut exp: u64, modulus: &Self) -> Self {
        let mut acc = Self::one(ring).rem(ring, modulus);
        let mut sq = base.rem(ring, modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(ring, &sq).rem(ring, modulus);
            }
            sq = sq.mul(ring, &sq).rem(ring, modulus);
            exp >>= 1;
        }
        acc
    }

    /// Substitute `inner` for the variable, reducing mod `modulus` throughout.
    pub fn compose_mod(&self, ring: &F, inner: &Self, modulus: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(ring, inner)
                .add(ring, &Self::constant(ring, c.clone()))
                .rem(ring, modulus);
        }
        acc
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let s = c.to_string();
            if s == "0" {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{s}")?,
                1 if s == "1" => write!(f, "t")?,
                1 => write!(f, "{s}*t")?,
                _ if s == "1" => write!(f, "t^{i}")?,
                _ => write!(f, "{s}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
