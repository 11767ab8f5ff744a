//! The cyclotomic fields `Q(zeta_N) = Q[t]/(Phi_N(t))` in the power basis.
//!
//! Elements are reduced modulo the `N`-th cyclotomic polynomial, so equality
//! is coefficient-wise equality after coercing both sides to a common
//! conductor: `Q(zeta_M)` embeds into `Q(zeta_L)` for `M | L` via
//! `zeta_M -> zeta_L^(L/M)`.

use crate::error::{Error, Result};
use crate::field::{Field, RationalField};
use crate::exactnum::poly::Poly;
use crate::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Poly<RationalField>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Poly<RationalField>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `N`-th cyclotomic polynomial `Phi_N`, computed by the recursion
/// `Phi_N(t) = (t^N - 1) / prod_{d|N, d<N} Phi_d(t)` and cached.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Poly<RationalField>> {
    assert!(n >= 1);
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let ring = RationalField;
    for d in divisors(n) {
        if phi_cache().lock().unwrap().contains_key(&d) {
            continue;
        }
        // t^d - 1
        let mut coeffs = vec![ring.zero(); d as usize + 1];
        coeffs[0] = ring.from_i64(-1);
        coeffs[d as usize] = ring.one();
        let mut num = Poly::new(&ring, coeffs);
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = phi_cache().lock().unwrap()[&e].clone();
            let (q, r) = num.divrem(&ring, &phi_e);
            debug_assert!(r.is_zero());
            num = q;
        }
        phi_cache().lock().unwrap().insert(d, Arc::new(num));
    }
    phi_cache().lock().unwrap()[&n].clone()
}

/// An element of `Q(zeta_N)`: a coefficient vector of length `phi(N)` in the
/// power basis `1, zeta, ..., zeta^(phi(N)-1)`, fully reduced mod `Phi_N`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The element as a rational if it lies in the prime field.
    /// Conductors 1 and 2 are rational outright; otherwise all higher
    /// power-basis coordinates must vanish.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Reinterpret in `Q(zeta_m)`; `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u64) -> Self {
        assert!(m % self.conductor == 0, "not a conductor multiple");
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let ring = RationalField;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        cyclo_reduce(m, &Poly::new(&ring, raw))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn add(&self, other: &Self) -> Self {
        CycField.add(self, other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        CycField.mul(self, other)
    }

    pub fn inv(&self) -> Option<Self> {
        CycField.inv(self)
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        CycField.pow_i64(self, e)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let l = self.conductor.lcm(&other.conductor);
        self.embed(l).coeffs == other.embed(l).coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "zeta{}", self.conductor)?;
                } else {
                    write!(f, "zeta{}^{}", self.conductor, i)?;
                }
            }
        }
        Ok(())
    }
}

/// Remainder of `raw_poly` modulo `Phi_N`, padded to a full coefficient
/// vector of length `phi(N)`.
pub fn cyclo_reduce(conductor: u64, raw_poly: &Poly<RationalField>) -> Cyclotomic {
    assert!(conductor >= 1);
    let ring = RationalField;
    let phi = cyclotomic_polynomial(conductor);
    let rem = raw_poly.rem(&ring, &phi);
    let deg = euler_phi(conductor) as usize;
    let mut coeffs = rem.coeffs().to_vec();
    coeffs.resize(deg, Rational::zero());
    Cyclotomic {
        conductor,
        coeffs,
    }
}

/// The root of unity `zeta_N^a`.
pub fn zeta(conductor: u64, a: i64) -> Cyclotomic {
    let ring = RationalField;
    let e = a.rem_euclid(conductor as i64) as usize;
    cyclo_reduce(conductor, &Poly::monomial(&ring, e))
}

/// The field `Q(zeta_*)` of all cyclotomic numbers; binary operations coerce
/// both sides into the compositum `Q(zeta_lcm)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CycField;

impl CycField {
    fn coerce(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let l = a.conductor.lcm(&b.conductor);
            (a.embed(l), b.embed(l))
        }
    }

    fn as_poly(x: &Cyclotomic) -> Poly<RationalField> {
        Poly::new(&RationalField, x.coeffs.clone())
    }
}

impl Field for CycField {
    type Elem = Cyclotomic;

    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero()
    }

    fn one(&self) -> Cyclotomic {
        Cyclotomic::one()
    }

    fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Self::coerce(a, b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic {
            conductor: a.conductor,
            coeffs,
        }
    }

    fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Self::coerce(a, b);
        let ring = RationalField;
        let prod = Self::as_poly(&a).mul(&ring, &Self::as_poly(&b));
        cyclo_reduce(a.conductor, &prod)
    }

    fn neg(&self, a: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inv(&self, a: &Cyclotomic) -> Option<Cyclotomic> {
        if a.is_zero() {
            return None;
        }
        let ring = RationalField;
        let phi = cyclotomic_polynomial(a.conductor);
        // Phi_N is irreducible over Q, so gcd(a, Phi_N) = 1 and the Bezout
        // coefficient of a is the inverse.
        let (g, s, _) = Self::as_poly(a).egcd(&ring, &phi);
        debug_assert_eq!(g.degree(), Some(0));
        let ginv = ring.inv(g.leading().unwrap()).unwrap();
        Some(cyclo_reduce(a.conductor, &s.scale(&ring, &ginv)))
    }

    fn from_i64(&self, n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(RationalField.from_i64(n))
    }

    fn is_zero(&self, a: &Cyclotomic) -> bool {
        a.is_zero()
    }
}

/// Validation helper shared by reductions: `p` must not divide the
/// conductor or any coefficient denominator.
pub fn check_good_prime(x: &Cyclotomic, p: u64) -> Result<()> {
    if x.conductor % p == 0 {
        return Err(Error::BadPrime {
            p,
            reason: format!("p divides the conductor {}", x.conductor),
        });
    }
    let den = x.denominator_lcm();
    if (den % BigInt::from(p)).is_zero() {
        return Err(Error::BadPrime {
            p,
            reason: "p divides a coefficient denominator".into(),
        });
    }
    Ok(())
}
