//! Prime fields, finite extensions `F_p[t]/(f)`, multiplicative orders, and
//! the reduction of cyclotomic numbers modulo primes.
//!
//! Extension fields stay below `p^deg < 2^64` so that group orders fit in a
//! machine word; anything larger returns [`Error::DeskScale`].

use crate::error::{Error, Result};
use crate::exactnum::cyclotomic::{check_good_prime, cyclotomic_polynomial, euler_phi, Cyclotomic};
use crate::exactnum::poly::Poly;
use crate::field::{Field, PrimeField};
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-Pollard rho with a deterministic parameter sweep; `n` must be
/// composite with no factor below the trial-division bound.
fn pollard_rho(n: u64) -> u64 {
    for c in 1..64u64 {
        let f = |x: u64| -> u64 { ((x as u128 * x as u128 + c as u128) % n as u128) as u64 };
        let mut x: u64 = 2;
        let mut y: u64 = 2;
        let mut d: u64 = 1;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("rho parameter sweep exhausted on {n}");
}

const TRIAL_BOUND: u64 = 1_000_000;

/// Prime factorization of `n >= 1` as `prime -> exponent`: trial division up
/// to 10^6, then rho on whatever composite remains.
pub fn factor_u64(n: u64) -> BTreeMap<u64, u32> {
    let mut factors = BTreeMap::new();
    let mut m = n;
    let mut d: u64 = 2;
    while d <= TRIAL_BOUND && d * d <= m {
        while m % d == 0 {
            *factors.entry(d).or_insert(0) += 1;
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *factors.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    factors
}

pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// The field `F_p[t]/(f)` for a monic irreducible `f`; irreducibility is the
/// caller's responsibility (constructors in this module only ever pass
/// irreducible factors of cyclotomic polynomials).
#[derive(Debug, PartialEq, Eq)]
pub struct FqCtx {
    pub p: u64,
    pub modulus: Poly<PrimeField>,
    pub deg: usize,
}

impl FqCtx {
    pub fn new(p: u64, modulus: Poly<PrimeField>) -> Result<Arc<Self>> {
        let fp = PrimeField::new(p);
        if !modulus.is_monic(&fp) || modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::Internal("modulus must be monic of degree >= 1".into()));
        }
        let deg = modulus.degree().unwrap();
        Ok(Arc::new(FqCtx { p, modulus, deg }))
    }

    pub fn prime_field(&self) -> PrimeField {
        PrimeField::new(self.p)
    }

    /// `p^deg`, or a desk-scale error when it does not fit in a `u64`.
    pub fn order(&self) -> Result<u64> {
        let mut q: u64 = 1;
        for _ in 0..self.deg {
            q = q
                .checked_mul(self.p)
                .ok_or_else(|| Error::DeskScale(format!("{}^{} exceeds 2^64", self.p, self.deg)))?;
        }
        Ok(q)
    }
}

/// An element of `F_p[t]/(f)`: the residue polynomial of degree < deg f.
#[derive(Clone, Debug)]
pub struct FiniteFieldElem {
    pub ctx: Arc<FqCtx>,
    pub value: Poly<PrimeField>,
}

impl FiniteFieldElem {
    pub fn new(ctx: Arc<FqCtx>, raw: Poly<PrimeField>) -> Self {
        let fp = ctx.prime_field();
        let value = raw.rem(&fp, &ctx.modulus);
        FiniteFieldElem { ctx, value }
    }

    pub fn zero(ctx: Arc<FqCtx>) -> Self {
        FiniteFieldElem {
            ctx,
            value: Poly::zero(),
        }
    }

    pub fn one(ctx: Arc<FqCtx>) -> Self {
        let fp = ctx.prime_field();
        FiniteFieldElem {
            ctx,
            value: Poly::one(&fp),
        }
    }

    /// The image of `t`, i.e. the chosen root of the modulus.
    pub fn generator(ctx: Arc<FqCtx>) -> Self {
        let fp = ctx.prime_field();
        Self::new(ctx.clone(), Poly::monomial(&fp, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.degree() == Some(0) && self.value.coeffs()[0] == 1 % self.ctx.p
    }

    fn same_ctx(&self, other: &Self) -> bool {
        self.ctx.p == other.ctx.p && self.ctx.modulus == other.ctx.modulus
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.same_ctx(other));
        let fp = self.ctx.prime_field();
        FiniteFieldElem {
            ctx: self.ctx.clone(),
            value: self.value.add(&fp, &other.value),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(self.same_ctx(other));
        let fp = self.ctx.prime_field();
        FiniteFieldElem {
            ctx: self.ctx.clone(),
            value: self.value.sub(&fp, &other.value),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.same_ctx(other));
        let fp = self.ctx.prime_field();
        FiniteFieldElem {
            ctx: self.ctx.clone(),
            value: self.value.mul(&fp, &other.value).rem(&fp, &self.ctx.modulus),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let fp = self.ctx.prime_field();
        let (g, s, _) = self.value.egcd(&fp, &self.ctx.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        Some(FiniteFieldElem {
            ctx: self.ctx.clone(),
            value: s.rem(&fp, &self.ctx.modulus),
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.ctx.clone());
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// The least `m >= 1` with `self^m = 1`, by factoring `p^deg - 1` and
    /// stripping prime factors.
    pub fn mult_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let q = self.ctx.order()?;
        let group = q - 1;
        let mut m = group;
        for &l in factor_u64(group).keys() {
            while m % l == 0 && self.pow(m / l).is_one() {
                m /= l;
            }
        }
        debug_assert!(self.pow(m).is_one());
        Ok(m)
    }
}

impl PartialEq for FiniteFieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_ctx(other) && self.value == other.value
    }
}

impl Eq for FiniteFieldElem {}

impl fmt::Display for FiniteFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in F_{}[t]/({})", self.value, self.ctx.p, self.ctx.modulus)
    }
}

/// Multiplicative order of `a` modulo `n` for `gcd(a, n) = 1`.
pub fn order_mod_u64(a: u64, n: u64) -> u64 {
    debug_assert_eq!(gcd_u64(a % n, n), 1);
    let mut pow = a % n;
    let mut d = 1;
    while pow != 1 % n {
        pow = ((pow as u128 * a as u128) % n as u128) as u64;
        d += 1;
    }
    d
}

/// Smallest element (in the deterministic counter order) of `F_q^x` whose
/// order is divisible by `n`, raised to give an element of order exactly `n`.
fn element_of_order(ctx: &Arc<FqCtx>, n: u64) -> Result<FiniteFieldElem> {
    let q = ctx.order()?;
    let group = q - 1;
    debug_assert_eq!(group % n, 0);
    let factors = factor_u64(group);
    let fp = ctx.prime_field();
    // Skip constants when deg > 1: their orders divide p - 1, and scanning
    // them first would waste time for large p.
    let start: u64 = if ctx.deg > 1 { ctx.p } else { 2 };
    let mut counter = start;
    loop {
        // Digits of the counter in base p give the candidate coefficients.
        let mut digits = Vec::new();
        let mut c = counter;
        while c > 0 {
            digits.push(c % ctx.p);
            c /= ctx.p;
        }
        let cand = FiniteFieldElem::new(ctx.clone(), Poly::new(&fp, digits));
        counter += 1;
        if cand.is_zero() {
            continue;
        }
        // order(cand) = group / prod l^(max strip)
        let mut order = group;
        for &l in factors.keys() {
            while order % l == 0 && cand.pow(order / l).is_one() {
                order /= l;
            }
        }
        if order % n == 0 {
            return Ok(cand.pow(order / n));
        }
    }
}

/// The irreducible factors of `Phi_n` over `F_p` (for `p` not dividing `n`),
/// each monic of degree `d = ord_n(p)`, sorted by coefficient vector so that
/// a factor index is reproducible.
///
/// The factors are built as Frobenius-orbit minimal polynomials of the powers
/// `w^j`, `j` coprime to `n`, of a root of unity `w` of exact order `n` in
/// `F_(p^d)`; this is deterministic and needs no general factorization.
pub fn factor_cyclotomic_mod_p(n: u64, p: u64) -> Result<Vec<Poly<PrimeField>>> {
    if n % p == 0 {
        return Err(Error::BadPrime {
            p,
            reason: format!("p divides the conductor {n}"),
        });
    }
    let fp = PrimeField::new(p);
    if n == 1 {
        // Phi_1 = t - 1.
        return Ok(vec![Poly::new(&fp, vec![fp.neg(&fp.one()), 1])]);
    }
    let d = order_mod_u64(p % n, n) as usize;

    // The ambient field F_(p^d) in which Phi_n splits into linear factors.
    let ambient = if d == 1 {
        FqCtx::new(p, Poly::monomial(&fp, 1))? // F_p itself, modulus t
    } else {
        FqCtx::new(p, first_irreducible(p, d))?
    };
    let omega = element_of_order(&ambient, n)?;

    let mut seen = vec![false; n as usize];
    let mut factors: Vec<Poly<PrimeField>> = Vec::new();
    for j in 1..n {
        if gcd_u64(j, n) != 1 || seen[j as usize] {
            continue;
        }
        // Frobenius orbit of j mod n.
        let mut orbit = Vec::new();
        let mut k = j;
        loop {
            seen[k as usize] = true;
            orbit.push(k);
            k = ((k as u128 * (p % n) as u128) % n as u128) as u64;
            if k == j {
                break;
            }
        }
        debug_assert_eq!(orbit.len(), d);
        // minpoly = prod over the orbit of (t - w^i), computed in F_q[t].
        let mut minpoly = vec![FiniteFieldElem::one(ambient.clone())];
        for &i in &orbit {
            let root = omega.pow(i);
            // multiply by (t - root)
            let mut next = vec![FiniteFieldElem::zero(ambient.clone()); minpoly.len() + 1];
            for (k, c) in minpoly.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].sub(&c.mul(&root));
            }
            minpoly = next;
        }
        // All coefficients are Frobenius-fixed, hence in F_p.
        let coeffs: Vec<u64> = minpoly
            .iter()
            .map(|c| {
                debug_assert!(c.value.degree().is_none_or(|deg| deg == 0));
                c.value.coeffs().first().copied().unwrap_or(0)
            })
            .collect();
        factors.push(Poly::new(&fp, coeffs));
    }
    factors.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    debug_assert_eq!(factors.len() as u64, euler_phi(n) / d as u64);

    // Re-multiply and compare against Phi_n mod p.
    let phi = cyclotomic_reduced_mod_p(n, p)?;
    let product = factors
        .iter()
        .fold(Poly::one(&fp), |acc, f| acc.mul(&fp, f));
    if product != phi {
        return Err(Error::Internal(format!(
            "cyclotomic factorization of Phi_{n} mod {p} failed re-multiplication"
        )));
    }
    Ok(factors)
}

/// `Phi_n` with coefficients reduced mod `p`.
fn cyclotomic_reduced_mod_p(n: u64, p: u64) -> Result<Poly<PrimeField>> {
    let fp = PrimeField::new(p);
    let phi = cyclotomic_polynomial(n);
    let coeffs = phi
        .coeffs()
        .iter()
        .map(|c| {
            // Phi_n has integer coefficients.
            debug_assert!(c.is_integer());
            let m = c.numer() % num_bigint::BigInt::from(p);
            let m = if m.is_negative() {
                m + num_bigint::BigInt::from(p)
            } else {
                m
            };
            u64::try_from(&m).unwrap()
        })
        .collect();
    Ok(Poly::new(&fp, coeffs))
}

/// First monic irreducible of degree `d` over `F_p` in the deterministic
/// counter order (constant coefficient fastest).
fn first_irreducible(p: u64, d: usize) -> Poly<PrimeField> {
    let fp = PrimeField::new(p);
    let mut counter: u64 = 0;
    loop {
        let mut coeffs = vec![0u64; d + 1];
        let mut c = counter;
        for slot in coeffs.iter_mut().take(d) {
            *slot = c % p;
            c /= p;
        }
        counter += 1;
        if c > 0 {
            unreachable!("no irreducible of degree {d} over F_{p}");
        }
        coeffs[d] = 1;
        let cand = Poly::new(&fp, coeffs);
        if is_irreducible(&fp, &cand) {
            return cand;
        }
    }
}

/// Rabin irreducibility test: `f` of degree `d` is irreducible over `F_p`
/// iff `t^(p^d) = t mod f` and `gcd(t^(p^(d/l)) - t, f) = 1` for each prime
/// `l | d`.
fn is_irreducible(fp: &PrimeField, f: &Poly<PrimeField>) -> bool {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let t = Poly::monomial(fp, 1);
    // Frobenius t -> t^p mod f, iterated by composition.
    let frob = Poly::pow_mod(fp, &t, fp.p, f);
    let mut frob_pows = vec![t.clone(), frob.clone()]; // frob_pows[k] = t^(p^k) mod f
    for _ in 1..d {
        let prev = frob_pows.last().unwrap();
        frob_pows.push(prev.compose_mod(fp, &frob, f));
    }
    if frob_pows[d] != t.rem(fp, f) {
        return false;
    }
    for &l in factor_u64(d as u64).keys() {
        let k = d / l as usize;
        let diff = frob_pows[k].sub(fp, &t);
        if diff.gcd(fp, f).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Reduce a cyclotomic number modulo a prime `p`, choosing the
/// `root_index`-th irreducible factor of `Phi_N` mod `p` (factors in
/// lexicographic coefficient order) and mapping `zeta_N` to the class of `t`.
pub fn cyclo_reduce_mod_p(x: &Cyclotomic, p: u64, root_index: usize) -> Result<FiniteFieldElem> {
    check_good_prime(x, p)?;
    let n = x.conductor();
    if n == 1 {
        // Q(zeta_1) = Q: reduce the rational directly into F_p (modulus t).
        if root_index >= 1 {
            return Err(Error::IndexOutOfRange {
                index: root_index,
                count: 1,
            });
        }
        let fp = PrimeField::new(p);
        let ctx = FqCtx::new(p, Poly::monomial(&fp, 1))?;
        let v = fp
            .reduce_rational(&x.coeffs()[0])
            .ok_or(Error::BadPrime {
                p,
                reason: "p divides a coefficient denominator".into(),
            })?;
        return Ok(FiniteFieldElem::new(ctx, Poly::new(&fp, vec![v])));
    }
    let factors = factor_cyclotomic_mod_p(n, p)?;
    if root_index >= factors.len() {
        return Err(Error::IndexOutOfRange {
            index: root_index,
            count: factors.len(),
        });
    }
    let ctx = FqCtx::new(p, factors[root_index].clone())?;
    reduce_into(x, &ctx)
}

/// Reduce `x` into an already-chosen quotient `F_p[t]/(f)`, sending `zeta_N`
/// to the class of `t`. The context must come from a factor of `Phi_N`.
pub fn reduce_into(x: &Cyclotomic, ctx: &Arc<FqCtx>) -> Result<FiniteFieldElem> {
    let fp = ctx.prime_field();
    let p = ctx.p;
    let mut acc = Poly::zero();
    for (i, c) in x.coeffs().iter().enumerate() {
        let v = fp.reduce_rational(c).ok_or(Error::BadPrime {
            p,
            reason: "p divides a coefficient denominator".into(),
        })?;
        if v != 0 {
            let term = Poly::monomial(&fp, i).scale(&fp, &v);
            acc = acc.add(&fp, &term);
        }
    }
    Ok(FiniteFieldElem::new(ctx.clone(), acc))
}
