//! The Hesse cubic `abc(x^3+y^3+z^3) = (a^3+b^3+c^3)xyz` with its
//! chord-and-tangent group law, orders of the translation point `(a:b:c)`,
//! and the graded linear algebra of the three-dimensional Sklyanin algebra
//! `S(a,b,c)`: Hilbert dimensions and the degree-3 center.

use crate::error::{Error, Result};
use crate::exactnum::finite::{factor_u64, gcd_u64};
use crate::field::{Field, PrimeField, RationalField};
use crate::linalg::{nullspace, Subspace};
use crate::Rational;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// A projective point with exact coordinates, normalized so the first
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct HessePoint<F: Field> {
    pub coords: [F::Elem; 3],
}

impl<F: Field> HessePoint<F> {
    pub fn new(field: &F, coords: [F::Elem; 3]) -> Result<Self> {
        let Some(first) = coords.iter().position(|c| !field.is_zero(c)) else {
            return Err(Error::PointNotOnCurve("(0 : 0 : 0)".into()));
        };
        let inv = field.inv(&coords[first]).unwrap();
        Ok(HessePoint {
            coords: [
                field.mul(&coords[0], &inv),
                field.mul(&coords[1], &inv),
                field.mul(&coords[2], &inv),
            ],
        })
    }
}

impl<F: Field> fmt::Display for HessePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// A smooth member of the Hesse pencil `E: s(x^3+y^3+z^3) - m xyz = 0`.
/// The translation form has `s = abc` and `m = a^3+b^3+c^3` for nonzero
/// parameters, smooth iff `(3abc)^3 != (a^3+b^3+c^3)^3`; the pencil form
/// takes the two coefficients directly (over `F_7` every translation-form
/// member is singular, so exhaustive finite-field checks need this form).
#[derive(Clone, Debug)]
pub struct HesseCurve<F: Field> {
    pub field: F,
    /// translation parameters `(a, b, c)`, absent for bare pencil members
    params: Option<[F::Elem; 3]>,
    /// coefficient of `x^3 + y^3 + z^3`
    s: F::Elem,
    /// coefficient of `xyz`
    m: F::Elem,
}

impl<F: Field> HesseCurve<F> {
    pub fn new(field: F, a: F::Elem, b: F::Elem, c: F::Elem) -> Result<Self> {
        if field.is_zero(&a) || field.is_zero(&b) || field.is_zero(&c) {
            return Err(Error::DegenerateCurve("a, b, c must be nonzero".into()));
        }
        let cube = |x: &F::Elem| field.mul(x, &field.mul(x, x));
        let s = field.mul(&a, &field.mul(&b, &c));
        let m = field.add(&cube(&a), &field.add(&cube(&b), &cube(&c)));
        let mut curve = Self::from_pencil(field, s, m).map_err(|_| {
            Error::DegenerateCurve("(3abc)^3 = (a^3+b^3+c^3)^3".into())
        })?;
        curve.params = Some([a, b, c]);
        Ok(curve)
    }

    /// A pencil member from its coefficients; smooth iff `s != 0` and
    /// `(3s)^3 != m^3`.
    pub fn from_pencil(field: F, s: F::Elem, m: F::Elem) -> Result<Self> {
        if field.is_zero(&s) {
            return Err(Error::DegenerateCurve("xyz = 0 is not a curve".into()));
        }
        let cube = |x: &F::Elem| field.mul(x, &field.mul(x, x));
        let three_s = field.mul(&field.from_i64(3), &s);
        if cube(&three_s) == cube(&m) {
            return Err(Error::DegenerateCurve("(3s)^3 = m^3".into()));
        }
        Ok(HesseCurve {
            field,
            params: None,
            s,
            m,
        })
    }

    /// `F(P) = abc(x^3+y^3+z^3) - (a^3+b^3+c^3) xyz`.
    pub fn eval(&self, p: &[F::Elem; 3]) -> F::Elem {
        let f = &self.field;
        let cube = |x: &F::Elem| f.mul(x, &f.mul(x, x));
        let sum_cubes = f.add(&cube(&p[0]), &f.add(&cube(&p[1]), &cube(&p[2])));
        let xyz = f.mul(&p[0], &f.mul(&p[1], &p[2]));
        f.sub(&f.mul(&self.s, &sum_cubes), &f.mul(&self.m, &xyz))
    }

    /// Gradient of the defining cubic.
    fn gradient(&self, p: &[F::Elem; 3]) -> [F::Elem; 3] {
        let f = &self.field;
        let three_s = f.mul(&f.from_i64(3), &self.s);
        let sq = |x: &F::Elem| f.mul(x, x);
        [
            f.sub(&f.mul(&three_s, &sq(&p[0])), &f.mul(&self.m, &f.mul(&p[1], &p[2]))),
            f.sub(&f.mul(&three_s, &sq(&p[1])), &f.mul(&self.m, &f.mul(&p[0], &p[2]))),
            f.sub(&f.mul(&three_s, &sq(&p[2])), &f.mul(&self.m, &f.mul(&p[0], &p[1]))),
        ]
    }

    pub fn contains(&self, p: &HessePoint<F>) -> bool {
        self.field.is_zero(&self.eval(&p.coords))
    }

    /// The group identity `O = (1 : -1 : 0)`, an inflection point lying on
    /// every Hesse cubic.
    pub fn identity(&self) -> HessePoint<F> {
        let f = &self.field;
        HessePoint {
            coords: [f.one(), f.neg(&f.one()), f.zero()],
        }
    }

    /// The translation point `(a : b : c)` for a translation-form curve; it
    /// satisfies the curve equation identically. `None` for bare pencil
    /// members.
    pub fn translation_point(&self) -> Option<HessePoint<F>> {
        let params = self.params.as_ref()?;
        let p = HessePoint::new(&self.field, params.clone()).expect("a, b, c nonzero");
        debug_assert!(self.contains(&p));
        Some(p)
    }

    fn directional(&self, at: &[F::Elem; 3], dir: &[F::Elem; 3]) -> F::Elem {
        let f = &self.field;
        let grad = self.gradient(at);
        let mut acc = f.zero();
        for i in 0..3 {
            acc = f.add(&acc, &f.mul(&dir[i], &grad[i]));
        }
        acc
    }

    /// Third intersection of the line through `p` and `q` (tangent when
    /// `p = q`) with the curve, multiplicities included.
    fn third_intersection(&self, p: &HessePoint<F>, q: &HessePoint<F>) -> Result<HessePoint<F>> {
        let f = &self.field;
        let combine = |cp: &F::Elem, pp: &HessePoint<F>, cq: &F::Elem, qq: &HessePoint<F>| {
            [
                f.sub(&f.mul(cp, &pp.coords[0]), &f.mul(cq, &qq.coords[0])),
                f.sub(&f.mul(cp, &pp.coords[1]), &f.mul(cq, &qq.coords[1])),
                f.sub(&f.mul(cp, &pp.coords[2]), &f.mul(cq, &qq.coords[2])),
            ]
        };
        if p != q {
            // F(sP + tQ) = st (s g1 + t g2) since F(P) = F(Q) = 0
            let g1 = self.directional(&p.coords, &q.coords);
            let g2 = self.directional(&q.coords, &p.coords);
            if f.is_zero(&g1) && f.is_zero(&g2) {
                return Err(Error::Internal(
                    "line lies on the cubic; the curve is not smooth".into(),
                ));
            }
            let r = combine(&g2, p, &g1, q);
            let point = HessePoint::new(f, r)?;
            if !self.contains(&point) {
                return Err(Error::Internal("third intersection left the curve".into()));
            }
            Ok(point)
        } else {
            // tangent line at P: pick a second point T on it
            let grad = self.gradient(&p.coords);
            let candidates = [
                [f.zero(), grad[2].clone(), f.neg(&grad[1])],
                [grad[2].clone(), f.zero(), f.neg(&grad[0])],
                [grad[1].clone(), f.neg(&grad[0]), f.zero()],
            ];
            let t = candidates
                .into_iter()
                .filter(|cand| cand.iter().any(|x| !f.is_zero(x)))
                .map(|cand| HessePoint::new(f, cand).unwrap())
                .find(|cand| cand != p)
                .ok_or_else(|| Error::Internal("tangent line has no second point".into()))?;
            // F(sP + tT) = t^2 (s A + t B) with A = D_P F(T), B = F(T)
            let a = self.directional(&t.coords, &p.coords);
            let b = self.eval(&t.coords);
            if f.is_zero(&a) && f.is_zero(&b) {
                return Err(Error::Internal(
                    "tangent line lies on the cubic; the curve is not smooth".into(),
                ));
            }
            let r = combine(&b, p, &a, &t);
            let point = HessePoint::new(f, r)?;
            if !self.contains(&point) {
                return Err(Error::Internal("tangent intersection left the curve".into()));
            }
            Ok(point)
        }
    }

    /// Chord-and-tangent addition with identity `O = (1 : -1 : 0)`:
    /// `P + Q = O * (P * Q)` where `*` is the third intersection.
    pub fn add(&self, p: &HessePoint<F>, q: &HessePoint<F>) -> Result<HessePoint<F>> {
        for pt in [p, q] {
            if !self.contains(pt) {
                return Err(Error::PointNotOnCurve(pt.to_string()));
            }
        }
        let r = self.third_intersection(p, q)?;
        self.third_intersection(&r, &self.identity())
    }

    pub fn neg(&self, p: &HessePoint<F>) -> Result<HessePoint<F>> {
        if !self.contains(p) {
            return Err(Error::PointNotOnCurve(p.to_string()));
        }
        self.third_intersection(p, &self.identity())
    }

    /// `k P` by repeated addition, `k >= 0`.
    pub fn multiple(&self, p: &HessePoint<F>, k: u64) -> Result<HessePoint<F>> {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.add(&acc, p)?;
        }
        Ok(acc)
    }
}

impl HesseCurve<PrimeField> {
    /// Every projective point of the curve over `F_p`.
    pub fn enumerate_points(&self) -> Vec<HessePoint<PrimeField>> {
        let f = &self.field;
        let p = f.p;
        let mut out = Vec::new();
        // z = 0: (0 : 1 : 0) and (1 : y : 0)
        let cand = HessePoint {
            coords: [f.zero(), f.one(), f.zero()],
        };
        if self.contains(&cand) {
            out.push(cand);
        }
        for y in 0..p {
            let cand = HessePoint {
                coords: [f.one(), y, f.zero()],
            };
            if self.contains(&cand) {
                out.push(cand);
            }
        }
        // z = 1
        for x in 0..p {
            for y in 0..p {
                let coords = [x, y, f.one()];
                let cand = HessePoint::new(f, coords).unwrap();
                if self.contains(&cand) && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
        out
    }

    /// Order of a point in the finite group `E(F_p)`.
    pub fn point_order(&self, p: &HessePoint<PrimeField>) -> Result<u64> {
        let o = self.identity();
        let mut acc = p.clone();
        // Hasse: |E(F_p)| <= p + 1 + 2 sqrt(p)
        let cap = self.field.p + 2 + 2 * (self.field.p as f64).sqrt().ceil() as u64;
        for k in 1..=cap {
            if acc == o {
                return Ok(k);
            }
            acc = self.add(&acc, p)?;
        }
        Err(Error::Internal("point order exceeds the Hasse bound".into()))
    }
}

/// Verdict of the translation-order computation over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaOrder {
    Finite(u64),
    /// No multiple up to the bound hit the identity, and the gcd `g` of the
    /// point orders at two good primes satisfies `g P != O`; since torsion
    /// injects at odd good primes, the order is infinite.
    InfiniteCertified {
        primes: (u64, u64),
        orders: (u64, u64),
    },
    /// Could not decide within the bound (no certification primes found).
    ExceedsBound,
}

impl HesseCurve<RationalField> {
    fn reduce_mod(&self, p: u64) -> Option<(HesseCurve<PrimeField>, HessePoint<PrimeField>)> {
        let params = self.params.as_ref()?;
        let fp = PrimeField::new(p);
        let a = fp.reduce_rational(&params[0])?;
        let b = fp.reduce_rational(&params[1])?;
        let c = fp.reduce_rational(&params[2])?;
        if a == 0 || b == 0 || c == 0 {
            return None;
        }
        let curve = HesseCurve::new(fp, a, b, c).ok()?;
        let point = curve.translation_point().unwrap();
        Some((curve, point))
    }

    /// Order of translation by `(a : b : c)`. Torsion injects into any good
    /// reduction at an odd prime, so the order of the point at the two
    /// smallest good primes above 3 bounds every possible finite order by
    /// `g = gcd` of the two; testing the divisors of `g` over `Q` then
    /// decides finite orders exactly, and `g P != O` certifies infinitude.
    /// The height of `k P` grows quadratically in `k`, so this divisor
    /// capping is also what keeps the exact arithmetic desk-scale; the
    /// `bound`-step search is the fallback when no certification primes
    /// exist below 1000.
    pub fn sigma_order(&self, bound: u64) -> Result<SigmaOrder> {
        let p = self.translation_point().ok_or_else(|| {
            Error::Internal("translation order needs a translation-form curve".into())
        })?;
        let o = self.identity();
        // good-reduction data
        let mut found = Vec::new();
        let mut q = 5u64;
        while q <= 1000 && found.len() < 2 {
            if crate::exactnum::finite::is_prime_u64(q) {
                if let Some((curve_q, point_q)) = self.reduce_mod(q) {
                    let order = curve_q.point_order(&point_q)?;
                    found.push((q, order));
                }
            }
            q += 2;
        }
        let [(p1, n1), (p2, n2)] = found.as_slice() else {
            // no certificates available: plain bounded search
            let mut acc = p.clone();
            for k in 1..=bound {
                if acc == o {
                    return Ok(SigmaOrder::Finite(k));
                }
                acc = self.add(&acc, &p)?;
            }
            return Ok(SigmaOrder::ExceedsBound);
        };
        let g = gcd_u64(*n1, *n2);
        // a finite order divides g; try the divisors in ascending order
        let mut divisors: Vec<u64> = divisors_of(g);
        divisors.sort_unstable();
        let mut acc = o.clone();
        let mut reached = 0u64;
        for d in divisors {
            for _ in reached..d {
                acc = self.add(&acc, &p)?;
            }
            reached = d;
            if acc == o {
                return Ok(SigmaOrder::Finite(d));
            }
        }
        // g P != O was just checked by the last divisor
        Ok(SigmaOrder::InfiniteCertified {
            primes: (*p1, *p2),
            orders: (*n1, *n2),
        })
    }
}

fn divisors_of(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (&q, &e) in factor_u64(n).iter() {
        let prev = out.clone();
        let mut power = 1u64;
        for _ in 0..e {
            power *= q;
            out.extend(prev.iter().map(|d| d * power));
        }
    }
    out
}

/// Degree-graded data of the Sklyanin algebra `S(a,b,c)`: for each degree,
/// the span of the two-sided ideal generated by the three relations
/// `a yz + b zy + c x^2`, `a zx + b xz + c y^2`, `a xy + b yx + c z^2`
/// inside the free algebra on `x, y, z`.
pub struct SklyaninAlgebra<F: Field> {
    pub field: F,
    pub a: F::Elem,
    pub b: F::Elem,
    pub c: F::Elem,
    ideal_cache: Mutex<HashMap<usize, Subspace<F>>>,
}

/// Words of degree `m` are indexed `0..3^m`, most significant letter first
/// (letters: 0 = x, 1 = y, 2 = z).
pub fn word_count(degree: usize) -> usize {
    3usize.pow(degree as u32)
}

impl<F: Field> SklyaninAlgebra<F> {
    pub fn new(field: F, a: F::Elem, b: F::Elem, c: F::Elem) -> Result<Self> {
        // same smoothness condition as the associated Hesse cubic
        HesseCurve::new(field.clone(), a.clone(), b.clone(), c.clone())?;
        Ok(SklyaninAlgebra {
            field,
            a,
            b,
            c,
            ideal_cache: Mutex::new(HashMap::new()),
        })
    }

    /// The three defining relations as sparse degree-2 vectors.
    fn relations(&self) -> Vec<Vec<(usize, F::Elem)>> {
        let idx = |d1: usize, d2: usize| 3 * d1 + d2;
        vec![
            // a yz + b zy + c x^2
            vec![
                (idx(1, 2), self.a.clone()),
                (idx(2, 1), self.b.clone()),
                (idx(0, 0), self.c.clone()),
            ],
            // a zx + b xz + c y^2
            vec![
                (idx(2, 0), self.a.clone()),
                (idx(0, 2), self.b.clone()),
                (idx(1, 1), self.c.clone()),
            ],
            // a xy + b yx + c z^2
            vec![
                (idx(0, 1), self.a.clone()),
                (idx(1, 0), self.b.clone()),
                (idx(2, 2), self.c.clone()),
            ],
        ]
    }

    /// The degree-`m` component of the two-sided ideal, as a subspace of the
    /// `3^m`-dimensional word space: the span of `w1 * r * w2` over the three
    /// relations and all splits `|w1| + |w2| = m - 2`.
    ///
    /// Assembled degree by degree through the decomposition
    /// `J_m = x J_(m-1) + y J_(m-1) + z J_(m-1) + span{r w : |w| = m-2}`:
    /// the three shifted copies of the previous RREF basis occupy disjoint
    /// coordinate blocks and stay in echelon form, so only the
    /// front-relation rows need elimination. This keeps the exact rational
    /// row reduction near-linear in the output size instead of cubic in
    /// `3^m`.
    pub fn ideal_component(&self, degree: usize) -> Subspace<F> {
        if let Some(hit) = self.ideal_cache.lock().unwrap().get(&degree) {
            return hit.clone();
        }
        let f = &self.field;
        let dim = word_count(degree);
        let subspace = if degree < 2 {
            Subspace::from_vectors(f, dim, Vec::new())
        } else if degree == 2 {
            let vectors = self
                .relations()
                .iter()
                .map(|rel| {
                    let mut v = vec![f.zero(); 9];
                    for (t, coeff) in rel {
                        v[*t] = f.add(&v[*t], coeff);
                    }
                    v
                })
                .collect();
            Subspace::from_vectors(f, dim, vectors)
        } else {
            let prev = self.ideal_component(degree - 1);
            let prev_width = word_count(degree - 1);
            let right_count = word_count(degree - 2);

            // block rows: letter * (previous RREF row), echelon by block
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            let mut pivot_of_col: Vec<Option<usize>> = vec![None; dim];
            for letter in 0..3usize {
                for prev_row in prev.basis() {
                    let mut row = vec![f.zero(); dim];
                    let offset = letter * prev_width;
                    for (i, x) in prev_row.iter().enumerate() {
                        if !f.is_zero(x) {
                            row[offset + i] = x.clone();
                        }
                    }
                    let pivot = row.iter().position(|x| !f.is_zero(x)).unwrap();
                    pivot_of_col[pivot] = Some(rows.len());
                    rows.push(row);
                }
            }

            // front rows r * w2, reduced against the block rows: an RREF row
            // has zeros at every other pivot column, so one subtraction per
            // supported pivot suffices
            let mut front: Vec<Vec<F::Elem>> = Vec::new();
            for rel in &self.relations() {
                for w2 in 0..right_count {
                    let mut row = vec![f.zero(); dim];
                    for (t, coeff) in rel {
                        let idx = t * right_count + w2;
                        row[idx] = f.add(&row[idx], coeff);
                    }
                    let support: Vec<usize> = (0..dim).filter(|&i| !f.is_zero(&row[i])).collect();
                    for s in support {
                        if let Some(bi) = pivot_of_col[s] {
                            let factor = row[s].clone();
                            for (x, b) in row.iter_mut().zip(&rows[bi]) {
                                *x = f.sub(x, &f.mul(&factor, b));
                            }
                        }
                    }
                    if row.iter().any(|x| !f.is_zero(x)) {
                        front.push(row);
                    }
                }
            }
            // the reduced front rows live in the complement coordinates;
            // eliminate them among themselves
            crate::linalg::rref(f, &mut front);
            // back-substitute the new pivots into the block rows
            for frow in &front {
                let p = frow.iter().position(|x| !f.is_zero(x)).unwrap();
                for row in rows.iter_mut() {
                    if f.is_zero(&row[p]) {
                        continue;
                    }
                    let factor = row[p].clone();
                    for (x, y) in row.iter_mut().zip(frow) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
            rows.extend(front);
            rows.sort_by_key(|row| row.iter().position(|x| !f.is_zero(x)).unwrap());
            Subspace::from_rref_rows(f, dim, rows)
        };
        self.ideal_cache
            .lock()
            .unwrap()
            .insert(degree, subspace.clone());
        subspace
    }

    /// Dimensions of the graded components of `S(a,b,c)` through `max_degree`.
    pub fn hilbert(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree)
            .map(|m| word_count(m) - self.ideal_component(m).dim())
            .collect()
    }

    /// The degree-3 center: solve `[T, x] = [T, y] = [T, z] = 0` in the
    /// degree-4 quotient over the 27-dimensional degree-3 word space. The
    /// raw solution space always contains the degree-3 ideal component
    /// (commutators of ideal elements stay in the ideal), so the center of
    /// the algebra itself is the quotient by `J_3`; `basis` holds reduced
    /// representatives of that quotient. Every representative is re-verified
    /// by an independent membership check of its commutators in `J_4`.
    pub fn central_degree3(&self) -> Result<CentralDegree3<F>> {
        let f = &self.field;
        let j4 = self.ideal_component(4);
        let eqs = j4.defining_equations(f);
        let dim3 = word_count(3);
        // commutator maps T -> T g - g T from degree 3 to degree 4
        let mut rows = Vec::new();
        for g in 0..3usize {
            for e in &eqs {
                // row over the 27 unknowns: sum over degree-4 words of
                // e[w4] * (coefficient of w4 in [w3, g])
                let row: Vec<F::Elem> = (0..dim3)
                    .map(|w3| {
                        let right = 3 * w3 + g; // w3 * g
                        let left = g * word_count(3) + w3; // g * w3
                        f.sub(&e[right], &e[left])
                    })
                    .collect();
                rows.push(row);
            }
        }
        let solutions = nullspace(f, &rows, dim3);
        let j3 = self.ideal_component(3);
        for b in j3.basis() {
            if !self.is_central_degree3(b) {
                return Err(Error::Internal(
                    "ideal element fails centrality modulo the ideal".into(),
                ));
            }
        }
        // center representatives: solutions reduced modulo J_3
        let reduced: Vec<Vec<F::Elem>> = solutions
            .iter()
            .map(|v| j3.reduce(f, v))
            .filter(|v| v.iter().any(|x| !f.is_zero(x)))
            .collect();
        let center = Subspace::from_vectors(f, dim3, reduced);
        let basis = center.basis().to_vec();
        // independent re-check: the commutators really lie in the ideal
        for t in &basis {
            if !self.is_central_degree3(t) {
                return Err(Error::Internal(
                    "central element commutator escapes the ideal".into(),
                ));
            }
        }
        Ok(CentralDegree3 {
            solution_dim: solutions.len(),
            ideal_dim: j3.dim(),
            basis,
        })
    }

    /// Whether a degree-3 coefficient vector is central in the degree-4
    /// quotient.
    pub fn is_central_degree3(&self, t: &[F::Elem]) -> bool {
        debug_assert_eq!(t.len(), word_count(3));
        self.commutators_in_ideal(t)
    }

    fn commutators_in_ideal(&self, t: &[F::Elem]) -> bool {
        let f = &self.field;
        let j4 = self.ideal_component(4);
        for g in 0..3usize {
            let mut comm = vec![f.zero(); word_count(4)];
            for (w3, coeff) in t.iter().enumerate() {
                if f.is_zero(coeff) {
                    continue;
                }
                comm[3 * w3 + g] = f.add(&comm[3 * w3 + g], coeff);
                let left = g * word_count(3) + w3;
                comm[left] = f.sub(&comm[left], coeff);
            }
            if !j4.contains(f, &comm) {
                return false;
            }
        }
        true
    }
}

/// The degree-3 centrality data: the raw solution space in the word algebra
/// (which always contains `J_3`, of dimension `ideal_dim`) and reduced
/// representatives of the center of the quotient algebra itself.
#[derive(Clone, Debug)]
pub struct CentralDegree3<F: Field> {
    pub solution_dim: usize,
    pub ideal_dim: usize,
    pub basis: Vec<Vec<F::Elem>>,
}

/// Hypothesis data for the coprimality theorem on `S(a,b,c)`: the verdict is
/// `Applies` exactly when the translation order is certified infinite or
/// finite with all prime factors exceeding `d`; a failed or undecided
/// hypothesis leaves the theorem silent, so the verdict is `Inconclusive`
/// rather than any claim of failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SklyaninTheoremData {
    pub sigma: SigmaOrder,
    pub hopf_dimension: u64,
    pub applies: bool,
    /// When the order of the translation is a finite `N`, the algebra is PI
    /// of PI degree `N`; carried as hypothesis data, not recomputed.
    pub pi_degree: Option<u64>,
}

pub fn check_theorem_sklyanin(
    a: Rational,
    b: Rational,
    c: Rational,
    d: u64,
    bound: u64,
) -> Result<SklyaninTheoremData> {
    let curve = HesseCurve::new(RationalField, a, b, c)?;
    let sigma = curve.sigma_order(bound)?;
    let (applies, pi_degree) = match &sigma {
        SigmaOrder::InfiniteCertified { .. } => (true, None),
        SigmaOrder::Finite(n) => (
            crate::redmodp::coprime_to_factorial(&num_bigint::BigInt::from(*n), d)?,
            Some(*n),
        ),
        SigmaOrder::ExceedsBound => (false, None),
    };
    Ok(SklyaninTheoremData {
        sigma,
        hopf_dimension: d,
        applies,
        pi_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn curve_fp(p: u64, a: i64, b: i64, c: i64) -> Option<HesseCurve<PrimeField>> {
        let f = PrimeField::new(p);
        HesseCurve::new(f, f.from_i64(a), f.from_i64(b), f.from_i64(c)).ok()
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        // a = b = c = 1: (3)^3 = 27 = (3)^3
        assert!(matches!(
            HesseCurve::new(RationalField, rat(1), rat(1), rat(1)),
            Err(Error::DegenerateCurve(_))
        ));
        assert!(matches!(
            HesseCurve::new(RationalField, rat(0), rat(1), rat(2)),
            Err(Error::DegenerateCurve(_))
        ));
        assert!(HesseCurve::new(RationalField, rat(1), rat(1), rat(2)).is_ok());
    }

    #[test]
    fn identity_and_translation_lie_on_the_curve() {
        let e = HesseCurve::new(RationalField, rat(1), rat(1), rat(2)).unwrap();
        assert!(e.contains(&e.identity()));
        assert!(e.contains(&e.translation_point().unwrap()));
        let e2 = HesseCurve::new(RationalField, rat(2), rat(3), rat(5)).unwrap();
        assert!(e2.contains(&e2.translation_point().unwrap()));
    }

    #[test]
    fn identity_law_for_random_points() {
        let e = HesseCurve::new(RationalField, rat(1), rat(1), rat(2)).unwrap();
        let o = e.identity();
        let p = e.translation_point().unwrap();
        assert_eq!(e.add(&p, &o).unwrap(), p);
        assert_eq!(e.add(&o, &p).unwrap(), p);
        let p2 = e.add(&p, &p).unwrap();
        assert_eq!(e.add(&p2, &o).unwrap(), p2);
        // inverse law
        let minus_p = e.neg(&p).unwrap();
        assert_eq!(e.add(&p, &minus_p).unwrap(), o);
        assert_eq!(e.add(&minus_p, &p).unwrap(), o);
    }

    #[test]
    fn points_off_curve_are_rejected() {
        let e = HesseCurve::new(RationalField, rat(1), rat(1), rat(2)).unwrap();
        let f = RationalField;
        let bogus = HessePoint::new(&f, [rat(1), rat(1), rat(1)]).unwrap();
        assert!(!e.contains(&bogus));
        assert!(matches!(
            e.add(&bogus, &e.identity()),
            Err(Error::PointNotOnCurve(_))
        ));
    }

    /// Every smooth Hesse curve available over `F_p`: the translation-form
    /// ones, or (only when none exists, which happens exactly at p = 7 where
    /// 27 = -1 forces `(3abc)^3 = (a^3+b^3+c^3)^3`) the smooth pencil
    /// members.
    fn all_smooth_curves_mod(p: u64) -> Vec<HesseCurve<PrimeField>> {
        let f = PrimeField::new(p);
        let mut out = Vec::new();
        for a in 1..p {
            for b in 1..p {
                for c in 1..p {
                    if let Ok(e) = HesseCurve::new(f, a, b, c) {
                        if out
                            .iter()
                            .all(|x: &HesseCurve<PrimeField>| (x.s, x.m) != (e.s, e.m))
                        {
                            out.push(e);
                        }
                    }
                }
            }
        }
        if out.is_empty() {
            for m in 0..p {
                if let Ok(e) = HesseCurve::from_pencil(f, 1, m) {
                    out.push(e);
                }
            }
        }
        out
    }

    #[test]
    fn no_translation_form_curve_is_smooth_mod_7() {
        // 27 = -1 mod 7, so (3abc)^3 = -(abc)^3 always equals
        // (a^3+b^3+c^3)^3; checked exhaustively
        for a in 1..7i64 {
            for b in 1..7i64 {
                for c in 1..7i64 {
                    assert!(curve_fp(7, a, b, c).is_none(), "({a},{b},{c})");
                }
            }
        }
        // smooth pencil members do exist mod 7
        let f = PrimeField::new(7);
        assert!(HesseCurve::from_pencil(f, 1, 2).is_ok());
    }

    #[test]
    fn exhaustive_group_axioms_mod_5_and_7() {
        for p in [5u64, 7] {
            let curves = all_smooth_curves_mod(p);
            assert!(!curves.is_empty(), "no smooth curves available mod {p}");
            for e in &curves {
                let points = e.enumerate_points();
                let o = e.identity();
                assert!(points.contains(&o));
                // closure, identity, commutativity, inverses
                for a in &points {
                    assert_eq!(e.add(a, &o).unwrap(), *a);
                    let na = e.neg(a).unwrap();
                    assert_eq!(e.add(a, &na).unwrap(), o);
                    for b in &points {
                        let ab = e.add(a, b).unwrap();
                        assert!(points.contains(&ab));
                        assert_eq!(ab, e.add(b, a).unwrap());
                    }
                }
                // associativity over all triples
                for a in &points {
                    for b in &points {
                        let ab = e.add(a, b).unwrap();
                        for c in &points {
                            let bc = e.add(b, c).unwrap();
                            assert_eq!(e.add(&ab, c).unwrap(), e.add(a, &bc).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn group_axioms_on_sample_curves_mod_11() {
        // translation-form curves do exist mod 11; exhaust three of them
        let mut checked = 0;
        'outer: for a in 1..11i64 {
            for b in a..11 {
                for c in b..11 {
                    let Some(e) = curve_fp(11, a, b, c) else { continue };
                    let points = e.enumerate_points();
                    let o = e.identity();
                    for p in &points {
                        assert_eq!(e.add(p, &o).unwrap(), *p);
                        for q in &points {
                            let pq = e.add(p, q).unwrap();
                            assert!(points.contains(&pq));
                            assert_eq!(pq, e.add(q, p).unwrap());
                            for r in &points {
                                let qr = e.add(q, r).unwrap();
                                assert_eq!(
                                    e.add(&pq, r).unwrap(),
                                    e.add(p, &qr).unwrap()
                                );
                            }
                        }
                    }
                    checked += 1;
                    if checked == 3 {
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(checked, 3);
    }

    #[test]
    fn lagrange_from_full_enumeration_mod_7() {
        let f = PrimeField::new(7);
        let e = HesseCurve::from_pencil(f, 1, 2).unwrap();
        let points = e.enumerate_points();
        let n = points.len() as u64;
        for p in &points {
            let order = e.point_order(p).unwrap();
            assert_eq!(n % order, 0, "order {order} of {p} does not divide {n}");
        }
        // the nine inflection points are rational 3-torsion mod 7
        assert_eq!(n % 9, 0);
    }

    #[test]
    fn sigma_order_verdicts() {
        // (1 : 1 : 2) is 2-torsion: the tangent at (a : a : c) passes
        // through (1 : -1 : 0)
        let e = HesseCurve::new(RationalField, rat(1), rat(1), rat(2)).unwrap();
        assert_eq!(e.sigma_order(50).unwrap(), SigmaOrder::Finite(2));
        // self-consistency between bounds
        assert_eq!(e.sigma_order(200).unwrap(), SigmaOrder::Finite(2));
        // (1 : 2 : 3) has infinite order, certified through two reductions
        let e = HesseCurve::new(RationalField, rat(1), rat(2), rat(3)).unwrap();
        let verdict_50 = e.sigma_order(50).unwrap();
        assert!(matches!(verdict_50, SigmaOrder::InfiniteCertified { .. }));
        assert_eq!(verdict_50, e.sigma_order(200).unwrap());
    }

    #[test]
    fn sigma_order_matches_direct_iteration_mod_11() {
        let e = curve_fp(11, 1, 1, 2).unwrap();
        let t = e.translation_point().unwrap();
        let order = e.point_order(&t).unwrap();
        assert_eq!(e.multiple(&t, order).unwrap(), e.identity());
        for k in 1..order {
            assert_ne!(e.multiple(&t, k).unwrap(), e.identity());
        }
    }

    #[test]
    fn sklyanin_hilbert_series() {
        let s = SklyaninAlgebra::new(RationalField, rat(1), rat(1), rat(2)).unwrap();
        assert_eq!(s.hilbert(5), vec![1, 3, 6, 10, 15, 21]);
        // degree 2 alone: 9 - 3 independent relations = 6
        assert_eq!(s.ideal_component(2).dim(), 3);
        // free-algebra control: no relations span nothing in low degree
        assert_eq!(s.ideal_component(0).dim(), 0);
        assert_eq!(s.ideal_component(1).dim(), 0);
        assert_eq!(word_count(3), 27);
    }

    #[test]
    fn sklyanin_central_degree3() {
        for (a, b, c) in [(1i64, 1, 2), (1, 2, 3), (2, 3, 5)] {
            let s = SklyaninAlgebra::new(RationalField, rat(a), rat(b), rat(c)).unwrap();
            let center = s.central_degree3().unwrap();
            // the raw solutions contain J_3 plus at least the element T
            assert_eq!(center.ideal_dim, 27 - s.hilbert(3)[3]);
            assert!(center.solution_dim > center.ideal_dim);
            assert!(!center.basis.is_empty());
            for t in &center.basis {
                assert!(s.is_central_degree3(t));
            }
            // a degree-3 element outside the solution span fails centrality
            let f = RationalField;
            let mut probe = vec![f.zero(); 27];
            probe[0] = f.one(); // x^3
            if !s.is_central_degree3(&probe) {
                let mut sum = probe.clone();
                for (slot, x) in sum.iter_mut().zip(&center.basis[0]) {
                    *slot = f.add(slot, x);
                }
                // adding a central element cannot make it central
                assert!(!s.is_central_degree3(&sum));
            }
        }
    }

    #[test]
    fn theorem_verdicts() {
        // infinite order: applies for every d
        let data = check_theorem_sklyanin(rat(1), rat(2), rat(3), 6, 50).unwrap();
        assert!(matches!(data.sigma, SigmaOrder::InfiniteCertified { .. }));
        assert!(data.applies);
        assert_eq!(data.pi_degree, None);
        // sigma order 2 with d = 2: 2 divides 2!, the theorem is silent
        let data = check_theorem_sklyanin(rat(1), rat(1), rat(2), 2, 50).unwrap();
        assert_eq!(data.sigma, SigmaOrder::Finite(2));
        assert!(!data.applies);
        assert_eq!(data.pi_degree, Some(2));
        // the same order is coprime to 1!, so with d = 1 the theorem applies
        let data = check_theorem_sklyanin(rat(1), rat(1), rat(2), 1, 50).unwrap();
        assert!(data.applies);
        // degenerate curve is an error
        assert!(matches!(
            check_theorem_sklyanin(rat(1), rat(1), rat(1), 2, 10),
            Err(Error::DegenerateCurve(_))
        ));
    }

    #[test]
    fn divisor_enumeration() {
        let mut d12 = divisors_of(12);
        d12.sort_unstable();
        assert_eq!(d12, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors_of(1), vec![1]);
    }
}
