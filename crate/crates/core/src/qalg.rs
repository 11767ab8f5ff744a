//! Normal-form arithmetic in the quantum polynomial algebra
//! `k_q[x_1..x_n]` and the quantum torus `k_q[x_1^(+-1)..x_n^(+-1)]`.
//!
//! Monomials are exponent vectors, normal-ordered as `x_1 < x_2 < ... < x_n`
//! with coefficients on the left. Coefficients live in the Laurent ring over
//! the base field generated by the declared free parameters; when there are
//! no free parameters this ring is just the base field.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::latgroup::{Bicharacter, MultElement, PiDegree};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Laurent polynomial in the session's free generators over a base field.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar<F: Field> {
    terms: BTreeMap<Vec<i64>, F::Elem>,
}

impl<F: Field> Scalar<F> {
    pub fn terms(&self) -> &BTreeMap<Vec<i64>, F::Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single-term scalar is a unit of the Laurent ring.
    pub fn as_monomial(&self) -> Option<(&Vec<i64>, &F::Elem)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }
}

impl<F: Field> fmt::Display for Scalar<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("q{i}")
                    } else {
                        format!("q{i}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The Laurent coefficient ring `K[g_1^(+-1), ..., g_k^(+-1)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarRing<F: Field> {
    pub base: F,
    pub nfree: usize,
}

impl<F: Field> ScalarRing<F> {
    pub fn new(base: F, nfree: usize) -> Self {
        ScalarRing { base, nfree }
    }

    pub fn zero(&self) -> Scalar<F> {
        Scalar {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: F::Elem) -> Scalar<F> {
        if self.base.is_zero(&c) {
            return self.zero();
        }
        Scalar {
            terms: BTreeMap::from([(vec![0; self.nfree], c)]),
        }
    }

    pub fn one(&self) -> Scalar<F> {
        self.constant(self.base.one())
    }

    pub fn monomial(&self, exps: Vec<i64>, c: F::Elem) -> Scalar<F> {
        assert_eq!(exps.len(), self.nfree);
        if self.base.is_zero(&c) {
            return self.zero();
        }
        Scalar {
            terms: BTreeMap::from([(exps, c)]),
        }
    }

    pub fn add(&self, a: &Scalar<F>, b: &Scalar<F>) -> Scalar<F> {
        let mut terms = a.terms.clone();
        for (e, c) in &b.terms {
            let entry = terms
                .entry(e.clone())
                .or_insert_with(|| self.base.zero());
            *entry = self.base.add(entry, c);
            if self.base.is_zero(entry) {
                terms.remove(e);
            }
        }
        Scalar { terms }
    }

    pub fn neg(&self, a: &Scalar<F>) -> Scalar<F> {
        Scalar {
            terms: a
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), self.base.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Scalar<F>, b: &Scalar<F>) -> Scalar<F> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar<F>, b: &Scalar<F>) -> Scalar<F> {
        let mut terms: BTreeMap<Vec<i64>, F::Elem> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = self.base.mul(ca, cb);
                let entry = terms.entry(e.clone()).or_insert_with(|| self.base.zero());
                *entry = self.base.add(entry, &c);
                if self.base.is_zero(entry) {
                    terms.remove(&e);
                }
            }
        }
        Scalar { terms }
    }

    /// Inverse of a unit (single-term) scalar.
    pub fn inv_unit(&self, a: &Scalar<F>) -> Option<Scalar<F>> {
        let (e, c) = a.as_monomial()?;
        let ci = self.base.inv(c)?;
        Some(Scalar {
            terms: BTreeMap::from([(e.iter().map(|x| -x).collect(), ci)]),
        })
    }

    pub fn is_one(&self, a: &Scalar<F>) -> bool {
        *a == self.one()
    }
}

/// Formal fractions of Laurent scalars: a genuine field, used wherever
/// linear algebra over the coefficient domain needs division. Each fraction
/// carries its ring handle so that equality can cross-multiply.
#[derive(Clone, Debug)]
pub struct ScalarFrac<F: Field> {
    ring: ScalarRing<F>,
    pub num: Scalar<F>,
    pub den: Scalar<F>,
}

impl<F: Field> fmt::Display for ScalarFrac<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ring.is_one(&self.den) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Field> PartialEq for ScalarFrac<F> {
    fn eq(&self, other: &Self) -> bool {
        // cross-multiplication; the Laurent ring is an integral domain
        self.ring.mul(&self.num, &other.den) == self.ring.mul(&other.num, &self.den)
    }
}

/// The fraction field of the Laurent ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarFracField<F: Field> {
    pub ring: ScalarRing<F>,
}

impl<F: Field> ScalarFracField<F> {
    pub fn new(ring: ScalarRing<F>) -> Self {
        ScalarFracField { ring }
    }

    pub fn from_scalar(&self, s: Scalar<F>) -> ScalarFrac<F> {
        ScalarFrac {
            ring: self.ring.clone(),
            num: s,
            den: self.ring.one(),
        }
    }

    fn make(&self, num: Scalar<F>, den: Scalar<F>) -> ScalarFrac<F> {
        debug_assert!(!den.is_zero());
        let mut x = ScalarFrac {
            ring: self.ring.clone(),
            num,
            den,
        };
        if x.num.is_zero() {
            x.den = self.ring.one();
            return x;
        }
        // a unit denominator folds into the numerator
        if let Some(di) = self.ring.inv_unit(&x.den) {
            x.num = self.ring.mul(&x.num, &di);
            x.den = self.ring.one();
        }
        x
    }
}

impl<F: Field> Field for ScalarFracField<F> {
    type Elem = ScalarFrac<F>;

    fn zero(&self) -> ScalarFrac<F> {
        self.from_scalar(self.ring.zero())
    }

    fn one(&self) -> ScalarFrac<F> {
        self.from_scalar(self.ring.one())
    }

    fn add(&self, a: &ScalarFrac<F>, b: &ScalarFrac<F>) -> ScalarFrac<F> {
        let num = self.ring.add(
            &self.ring.mul(&a.num, &b.den),
            &self.ring.mul(&b.num, &a.den),
        );
        let den = self.ring.mul(&a.den, &b.den);
        self.make(num, den)
    }

    fn sub(&self, a: &ScalarFrac<F>, b: &ScalarFrac<F>) -> ScalarFrac<F> {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &ScalarFrac<F>, b: &ScalarFrac<F>) -> ScalarFrac<F> {
        self.make(
            self.ring.mul(&a.num, &b.num),
            self.ring.mul(&a.den, &b.den),
        )
    }

    fn neg(&self, a: &ScalarFrac<F>) -> ScalarFrac<F> {
        ScalarFrac {
            ring: a.ring.clone(),
            num: self.ring.neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn inv(&self, a: &ScalarFrac<F>) -> Option<ScalarFrac<F>> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.make(a.den.clone(), a.num.clone()))
    }

    fn from_i64(&self, n: i64) -> ScalarFrac<F> {
        self.from_scalar(self.ring.constant(self.ring.base.from_i64(n)))
    }

    fn is_zero(&self, a: &ScalarFrac<F>) -> bool {
        a.num.is_zero()
    }

    fn is_one(&self, a: &ScalarFrac<F>) -> bool {
        a.num == a.den
    }
}

/// Polynomial exponents live in `Z_(>=0)^n`, torus exponents in `Z^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Polynomial,
    Torus,
}

/// The `Z/2` grading by total degree.
#[derive(Clone, Copy, Debug, Default)]
pub struct GradedSign;

impl GradedSign {
    /// Total degree mod 2; additive on products of monomials.
    pub fn parity(exps: &[i64]) -> u8 {
        (exps.iter().sum::<i64>().rem_euclid(2)) as u8
    }
}

/// A quantum polynomial algebra or quantum torus over an exact base field,
/// with a chosen embedding of the torsion part of the bicharacter: the image
/// of `zeta_N` (`N` the bicharacter conductor) must have exact order `N` in
/// the base field.
#[derive(Clone, Debug, PartialEq)]
pub struct QAlgebra<F: Field> {
    base: F,
    bichar: Bicharacter,
    variant: Variant,
    torsion_embed: F::Elem,
    scalars: ScalarRing<F>,
}

impl<F: Field> QAlgebra<F> {
    pub fn new(
        base: F,
        bichar: Bicharacter,
        variant: Variant,
        torsion_embed: F::Elem,
    ) -> Result<Arc<Self>> {
        let n = bichar.conductor();
        // torsion_embed must be a primitive N-th root of unity
        let pow_n = base.pow_i64(&torsion_embed, n as i64).unwrap();
        if !base.is_one(&pow_n) {
            return Err(Error::InvalidBicharacter(format!(
                "torsion embedding is not an {n}-th root of unity"
            )));
        }
        for &r in crate::exactnum::finite::factor_u64(n).keys() {
            let partial = base.pow_i64(&torsion_embed, (n / r) as i64).unwrap();
            if base.is_one(&partial) {
                return Err(Error::InvalidBicharacter(format!(
                    "torsion embedding has order dividing {}, expected exactly {n}",
                    n / r
                )));
            }
        }
        let scalars = ScalarRing::new(base.clone(), bichar.nfree());
        Ok(Arc::new(QAlgebra {
            base,
            bichar,
            variant,
            torsion_embed,
            scalars,
        }))
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.bichar
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn rank(&self) -> usize {
        self.bichar.rank()
    }

    pub fn scalars(&self) -> &ScalarRing<F> {
        &self.scalars
    }

    /// Evaluate a formal multiplicative element into the coefficient ring.
    pub fn eval(&self, e: &MultElement) -> Scalar<F> {
        let n = self.bichar.conductor();
        let lift = e.torsion_exp_at(n);
        let torsion = self
            .base
            .pow_i64(&self.torsion_embed, lift as i64)
            .unwrap();
        self.scalars.monomial(e.free_exponents().to_vec(), torsion)
    }

    /// The normal-ordering scalar: `x^u * x^v = scalar(u, v) * x^(u+v)` with
    /// `scalar(u, v) = prod_(i>j) q_ij^(u_i v_j)`, collecting one `q_ij` per
    /// transposition needed to sort `x^u x^v`.
    pub fn ordering_scalar(&self, u: &[i64], v: &[i64]) -> Scalar<F> {
        let mut acc = MultElement::one(self.bichar.nfree());
        for i in 0..self.rank() {
            if u[i] == 0 {
                continue;
            }
            for j in 0..i {
                if v[j] == 0 {
                    continue;
                }
                acc = acc.mul(&self.bichar.entry(i, j).pow(u[i] * v[j]));
            }
        }
        self.eval(&acc)
    }

    /// The full pairing `prod_(i,j) q_ij^(u_i v_j)`, by which `x^u x^v` and
    /// `x^v x^u` differ.
    pub fn full_pairing(&self, u: &[i64], v: &[i64]) -> Scalar<F> {
        let mut acc = MultElement::one(self.bichar.nfree());
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                if u[i] != 0 && v[j] != 0 {
                    acc = acc.mul(&self.bichar.entry(i, j).pow(u[i] * v[j]));
                }
            }
        }
        self.eval(&acc)
    }

    /// True iff the monomial exponent lies in the radical lattice of `q`,
    /// re-verified against the defining equations.
    pub fn is_central_monomial(&self, m: &[i64]) -> bool {
        assert_eq!(m.len(), self.rank());
        if self.variant == Variant::Polynomial {
            assert!(m.iter().all(|&e| e >= 0), "polynomial exponents must be nonnegative");
        }
        self.bichar.is_radical_exponent(m)
    }

    /// PI degree of the algebra for an all-torsion bicharacter, with the
    /// bound `N^n` it divides.
    pub fn pi_degree(&self) -> Result<PiDegree> {
        self.bichar.torsion_pi_degree()
    }

    /// A minimal central monomial of odd total degree, suitable as the `z`
    /// of a Sweedler-type action: `u . a = z a` on the odd part.
    ///
    /// Minimality: smallest L1 norm, ties broken by picking the
    /// lexicographically greatest exponent vector (so positive powers of
    /// early generators win). For the polynomial variant the search is over
    /// nonnegative exponents. Torsion and torus inputs are decided exactly;
    /// a polynomial algebra with free parameters is searched within a
    /// bounded window and reports `NoCentralOddElement` if nothing is found
    /// there.
    pub fn sweedler_central_odd(&self) -> Result<Vec<i64>> {
        let n = self.rank();
        let radical = self.bichar.radical()?;
        if radical.is_empty() {
            return Err(Error::NoCentralOddElement);
        }
        let basis: Vec<Vec<i64>> = radical
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| i64::try_from(x).map_err(|_| Error::DeskScale("radical basis entry exceeds i64".into())))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        // Parity is linear, so an odd lattice vector exists iff some basis
        // vector is odd.
        if basis.iter().all(|b| GradedSign::parity(b) == 0) {
            return Err(Error::NoCentralOddElement);
        }

        let seed = match self.variant {
            Variant::Torus => basis
                .iter()
                .filter(|b| GradedSign::parity(b) == 1)
                .min_by_key(|b| b.iter().map(|x| x.abs()).sum::<i64>())
                .cloned(),
            Variant::Polynomial => self.polynomial_seed(&basis),
        };
        let Some(seed) = seed else {
            return Err(Error::NoCentralOddElement);
        };
        let bound: i64 = seed.iter().map(|x| x.abs()).sum();

        // Exhaustive sweep of the L1 ball of radius `bound`.
        let lo = if self.variant == Variant::Polynomial { 0 } else { -bound };
        let mut best: Option<Vec<i64>> = Some(seed);
        let mut v = vec![lo; n];
        loop {
            let l1: i64 = v.iter().map(|x| x.abs()).sum();
            if l1 > 0
                && l1 <= bound
                && GradedSign::parity(&v) == 1
                && self.bichar.is_radical_exponent(&v)
            {
                let better = match &best {
                    None => true,
                    Some(b) => {
                        let bl1: i64 = b.iter().map(|x| x.abs()).sum();
                        l1 < bl1 || (l1 == bl1 && v > *b)
                    }
                };
                if better {
                    best = Some(v.clone());
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == n {
                    let out = best.unwrap();
                    debug_assert!(self.is_central_monomial(&out));
                    return Ok(out);
                }
                v[k] += 1;
                if v[k] <= bound {
                    break;
                }
                v[k] = lo;
                k += 1;
            }
        }
    }

    /// A nonnegative odd radical vector for the polynomial variant, used to
    /// bound the exhaustive search.
    fn polynomial_seed(&self, basis: &[Vec<i64>]) -> Option<Vec<i64>> {
        let n = self.rank();
        if let Some(b) = basis
            .iter()
            .find(|b| GradedSign::parity(b) == 1 && b.iter().all(|&x| x >= 0))
        {
            return Some(b.clone());
        }
        if self.bichar.is_torsion() {
            let big_n = self.bichar.conductor() as i64;
            if big_n % 2 == 1 {
                // N e_1 is central (q_ij^N = 1) and odd
                let mut v = vec![0; n];
                v[0] = big_n;
                debug_assert!(self.bichar.is_radical_exponent(&v));
                return Some(v);
            }
            // N even: shifting by N e_i preserves parity and membership, so
            // any odd basis vector can be made nonnegative.
            let b = basis.iter().find(|b| GradedSign::parity(b) == 1)?;
            let v: Vec<i64> = b
                .iter()
                .map(|&x| {
                    let k = if x < 0 { (-x + big_n - 1) / big_n } else { 0 };
                    x + k * big_n
                })
                .collect();
            debug_assert!(self.bichar.is_radical_exponent(&v));
            return Some(v);
        }
        // Mixed free/torsion polynomial algebra: bounded search through
        // small combinations of the radical basis.
        let s = basis.len();
        for radius in 1..=8i64 {
            let mut y = vec![-radius; s];
            loop {
                let v: Vec<i64> = (0..n)
                    .map(|k| (0..s).map(|t| y[t] * basis[t][k]).sum())
                    .collect();
                if GradedSign::parity(&v) == 1 && v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
                {
                    return Some(v);
                }
                let mut k = 0;
                loop {
                    if k == s {
                        break;
                    }
                    y[k] += 1;
                    if y[k] <= radius {
                        break;
                    }
                    y[k] = -radius;
                    k += 1;
                }
                if k == s {
                    break;
                }
            }
        }
        None
    }
}

/// Quantum algebra over `Q(zeta_N)` with the canonical torsion embedding
/// `zeta_N` itself.
pub fn cyclotomic_algebra(
    bichar: Bicharacter,
    variant: Variant,
) -> Result<Arc<QAlgebra<crate::exactnum::CycField>>> {
    let n = bichar.conductor();
    QAlgebra::new(
        crate::exactnum::CycField,
        bichar,
        variant,
        crate::exactnum::zeta(n, 1),
    )
}

/// Quantum algebra over `Q`; the bicharacter torsion must fit in `{1, -1}`.
pub fn rational_algebra(
    bichar: Bicharacter,
    variant: Variant,
) -> Result<Arc<QAlgebra<crate::field::RationalField>>> {
    use crate::field::RationalField;
    let embed = match bichar.conductor() {
        1 => RationalField.one(),
        2 => RationalField.from_i64(-1),
        n => {
            return Err(Error::InvalidBicharacter(format!(
                "conductor {n} roots of unity are not rational"
            )))
        }
    };
    QAlgebra::new(RationalField, bichar, variant, embed)
}

/// An element of a quantum polynomial algebra or torus: a finitely supported
/// map from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct QElement<F: Field> {
    parent: Arc<QAlgebra<F>>,
    terms: BTreeMap<Vec<i64>, Scalar<F>>,
}

impl<F: Field> QElement<F> {
    pub fn zero(parent: &Arc<QAlgebra<F>>) -> Self {
        QElement {
            parent: parent.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(parent: &Arc<QAlgebra<F>>) -> Self {
        Self::monomial(parent, vec![0; parent.rank()], parent.scalars().one())
    }

    pub fn monomial(parent: &Arc<QAlgebra<F>>, exps: Vec<i64>, coeff: Scalar<F>) -> Self {
        assert_eq!(exps.len(), parent.rank());
        if parent.variant() == Variant::Polynomial {
            assert!(
                exps.iter().all(|&e| e >= 0),
                "polynomial exponents must be nonnegative"
            );
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        QElement {
            parent: parent.clone(),
            terms,
        }
    }

    /// The generator `x_(j+1)` (zero-based index).
    pub fn generator(parent: &Arc<QAlgebra<F>>, j: usize) -> Self {
        let mut exps = vec![0; parent.rank()];
        exps[j] = 1;
        Self::monomial(parent, exps, parent.scalars().one())
    }

    /// `x_(j+1)^(-1)`; torus only.
    pub fn generator_inv(parent: &Arc<QAlgebra<F>>, j: usize) -> Result<Self> {
        if parent.variant() != Variant::Torus {
            return Err(Error::UndefinedOnInverse);
        }
        let mut exps = vec![0; parent.rank()];
        exps[j] = -1;
        Ok(Self::monomial(parent, exps, parent.scalars().one()))
    }

    pub fn parent(&self) -> &Arc<QAlgebra<F>> {
        &self.parent
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Scalar<F>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_parent(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        let ring = self.parent.scalars();
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(|| ring.zero());
            *entry = ring.add(entry, c);
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Ok(QElement {
            parent: self.parent.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        let ring = self.parent.scalars();
        QElement {
            parent: self.parent.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar<F>) -> Self {
        let ring = self.parent.scalars();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let c = ring.mul(c, s);
            if !c.is_zero() {
                terms.insert(e.clone(), c);
            }
        }
        QElement {
            parent: self.parent.clone(),
            terms,
        }
    }

    /// Product in normal form: every pair of monomials is reordered through
    /// the bicharacter scalar.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        let ring = self.parent.scalars();
        let mut terms: BTreeMap<Vec<i64>, Scalar<F>> = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let scalar = self.parent.ordering_scalar(u, v);
                let coeff = ring.mul(&ring.mul(cu, cv), &scalar);
                if coeff.is_zero() {
                    continue;
                }
                let e: Vec<i64> = u.iter().zip(v).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e.clone()).or_insert_with(|| ring.zero());
                *entry = ring.add(entry, &coeff);
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Ok(QElement {
            parent: self.parent.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.parent);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Total degree of the highest term, `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(parity)` when every monomial has the same total-degree parity.
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|e| GradedSign::parity(e));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

impl<F: Field> PartialEq for QElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.parent == other.parent
    }
}

impl<F: Field> fmt::Display for QElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            let coeff = format!("{c}");
            match (mono.is_empty(), coeff.as_str()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, "1") => write!(f, "{}", mono.join("*"))?,
                (false, _) => write!(f, "({coeff})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}
