//! Finite-dimensional Hopf algebras given by structure constants on a fixed
//! basis, and their actions on quantum polynomial algebras and tori.
//!
//! Everything is verified computationally: Hopf axioms as exact tensor
//! identities on basis triples, module-algebra laws degree by degree,
//! semisimplicity through the left integral, and inner faithfulness through
//! the largest Hopf ideal annihilating the action up to a degree cutoff.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{nullspace, Subspace};
use crate::qalg::{QAlgebra, QElement, ScalarFrac, ScalarFracField, Variant};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A finite-dimensional Hopf algebra over an exact field, by structure
/// constants: `h_i h_j = sum_k mult[i][j][k] h_k`,
/// `Delta(h_i) = sum_(j,k) comult[i][j][k] h_j (x) h_k`,
/// `S(h_i) = sum_j antipode[i][j] h_j`.
#[derive(Clone, Debug)]
pub struct FinDimHopf<F: Field> {
    pub field: F,
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<F::Elem>>>,
    pub unit: Vec<F::Elem>,
    pub comult: Vec<Vec<Vec<F::Elem>>>,
    pub counit: Vec<F::Elem>,
    pub antipode: Vec<Vec<F::Elem>>,
}

/// A failed axiom with the basis indices witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

impl<F: Field> FinDimHopf<F> {
    pub fn new(
        field: F,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<F::Elem>>>,
        unit: Vec<F::Elem>,
        comult: Vec<Vec<Vec<F::Elem>>>,
        counit: Vec<F::Elem>,
        antipode: Vec<Vec<F::Elem>>,
    ) -> Result<Self> {
        let d = labels.len();
        let dims_ok = mult.len() == d
            && mult.iter().all(|m| m.len() == d && m.iter().all(|r| r.len() == d))
            && unit.len() == d
            && comult.len() == d
            && comult
                .iter()
                .all(|m| m.len() == d && m.iter().all(|r| r.len() == d))
            && counit.len() == d
            && antipode.len() == d
            && antipode.iter().all(|r| r.len() == d);
        if !dims_ok {
            return Err(Error::Parse(
                "structure tensors do not match the basis dimension".into(),
            ));
        }
        Ok(FinDimHopf {
            field,
            dim: d,
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn product(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = f.add(slot, &f.mul(&c, &self.mult[i][j][k]));
                }
            }
        }
        out
    }

    /// Coordinates of `Delta(a)` in the tensor basis `h_j (x) h_k`,
    /// flattened as `j * dim + k`.
    pub fn comult_of(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim * self.dim];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let t = f.mul(ai, &self.comult[i][j][k]);
                    out[j * self.dim + k] = f.add(&out[j * self.dim + k], &t);
                }
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        a.iter()
            .zip(&self.counit)
            .fold(f.zero(), |acc, (ai, ei)| f.add(&acc, &f.mul(ai, ei)))
    }

    pub fn antipode_of(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = f.add(slot, &f.mul(ai, &self.antipode[i][j]));
            }
        }
        out
    }

    fn vec_eq(&self, a: &[F::Elem], b: &[F::Elem]) -> bool {
        a.iter()
            .zip(b)
            .all(|(x, y)| self.field.is_zero(&self.field.sub(x, y)))
    }

    /// Check every Hopf axiom as an exact identity on basis elements.
    /// An empty result means all axioms hold.
    pub fn verify_hopf_axioms(&self) -> Vec<AxiomViolation> {
        let f = &self.field;
        let d = self.dim;
        let mut violations = Vec::new();

        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let ij = self.product(&self.basis_vector(i), &self.basis_vector(j));
                    let left = self.product(&ij, &self.basis_vector(k));
                    let jk = self.product(&self.basis_vector(j), &self.basis_vector(k));
                    let right = self.product(&self.basis_vector(i), &jk);
                    if !self.vec_eq(&left, &right) {
                        violations.push(AxiomViolation {
                            axiom: "associativity".into(),
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }
        for i in 0..d {
            let hi = self.basis_vector(i);
            if !self.vec_eq(&self.product(&self.unit, &hi), &hi)
                || !self.vec_eq(&self.product(&hi, &self.unit), &hi)
            {
                violations.push(AxiomViolation {
                    axiom: "unit".into(),
                    witness: vec![i],
                });
            }
        }

        // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
        for i in 0..d {
            let mut ok = true;
            'outer: for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        // left: sum_(j,k) delta_i^(jk) delta_j^(ab) [c = k]
                        let mut left = f.zero();
                        for j in 0..d {
                            left = f.add(
                                &left,
                                &f.mul(&self.comult[i][j][c], &self.comult[j][a][b]),
                            );
                        }
                        let mut right = f.zero();
                        for k in 0..d {
                            right = f.add(
                                &right,
                                &f.mul(&self.comult[i][a][k], &self.comult[k][b][c]),
                            );
                        }
                        if !f.is_zero(&f.sub(&left, &right)) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if !ok {
                violations.push(AxiomViolation {
                    axiom: "coassociativity".into(),
                    witness: vec![i],
                });
            }
        }

        // counit: (eps (x) id) Delta(h) = h = (id (x) eps) Delta(h)
        for i in 0..d {
            let mut left = vec![f.zero(); d];
            let mut right = vec![f.zero(); d];
            for j in 0..d {
                for k in 0..d {
                    left[k] = f.add(&left[k], &f.mul(&self.comult[i][j][k], &self.counit[j]));
                    right[j] = f.add(&right[j], &f.mul(&self.comult[i][j][k], &self.counit[k]));
                }
            }
            if !self.vec_eq(&left, &self.basis_vector(i))
                || !self.vec_eq(&right, &self.basis_vector(i))
            {
                violations.push(AxiomViolation {
                    axiom: "counit".into(),
                    witness: vec![i],
                });
            }
        }

        // Delta and eps are algebra maps; Delta(1) = 1 (x) 1, eps(1) = 1
        for i in 0..d {
            for j in 0..d {
                let prod = self.product(&self.basis_vector(i), &self.basis_vector(j));
                let delta_prod = self.comult_of(&prod);
                // Delta(h_i) Delta(h_j) in H (x) H
                let mut expected = vec![f.zero(); d * d];
                for a in 0..d {
                    for b in 0..d {
                        let cij = &self.comult[i][a][b];
                        if f.is_zero(cij) {
                            continue;
                        }
                        for c in 0..d {
                            for e in 0..d {
                                let w = f.mul(cij, &self.comult[j][c][e]);
                                if f.is_zero(&w) {
                                    continue;
                                }
                                // (h_a (x) h_b)(h_c (x) h_e)
                                for s in 0..d {
                                    let m1 = &self.mult[a][c][s];
                                    if f.is_zero(m1) {
                                        continue;
                                    }
                                    for t in 0..d {
                                        let m2 = &self.mult[b][e][t];
                                        if f.is_zero(m2) {
                                            continue;
                                        }
                                        let add = f.mul(&f.mul(&w, m1), m2);
                                        expected[s * d + t] = f.add(&expected[s * d + t], &add);
                                    }
                                }
                            }
                        }
                    }
                }
                if !self.vec_eq(&delta_prod, &expected) {
                    violations.push(AxiomViolation {
                        axiom: "comultiplication is an algebra map".into(),
                        witness: vec![i, j],
                    });
                }
                let eps_prod = self.counit_of(&prod);
                let eps_sep = f.mul(&self.counit[i], &self.counit[j]);
                if !f.is_zero(&f.sub(&eps_prod, &eps_sep)) {
                    violations.push(AxiomViolation {
                        axiom: "counit is an algebra map".into(),
                        witness: vec![i, j],
                    });
                }
            }
        }
        let delta_one = self.comult_of(&self.unit);
        let mut one_tensor_one = vec![f.zero(); d * d];
        for j in 0..d {
            for k in 0..d {
                one_tensor_one[j * d + k] = f.mul(&self.unit[j], &self.unit[k]);
            }
        }
        if !self.vec_eq(&delta_one, &one_tensor_one) {
            violations.push(AxiomViolation {
                axiom: "comultiplication of the unit".into(),
                witness: vec![],
            });
        }
        if !f.is_one(&self.counit_of(&self.unit)) {
            violations.push(AxiomViolation {
                axiom: "counit of the unit".into(),
                witness: vec![],
            });
        }

        // antipode: m(S (x) id)Delta(h) = eps(h) 1 = m(id (x) S)Delta(h)
        for i in 0..d {
            let mut left = vec![f.zero(); d];
            let mut right = vec![f.zero(); d];
            for j in 0..d {
                for k in 0..d {
                    let c = &self.comult[i][j][k];
                    if f.is_zero(c) {
                        continue;
                    }
                    let sj = self.antipode_of(&self.basis_vector(j));
                    let term = self.product(&sj, &self.basis_vector(k));
                    for (s, slot) in left.iter_mut().enumerate() {
                        *slot = f.add(slot, &f.mul(c, &term[s]));
                    }
                    let sk = self.antipode_of(&self.basis_vector(k));
                    let term = self.product(&self.basis_vector(j), &sk);
                    for (s, slot) in right.iter_mut().enumerate() {
                        *slot = f.add(slot, &f.mul(c, &term[s]));
                    }
                }
            }
            let expected: Vec<F::Elem> = self
                .unit
                .iter()
                .map(|u| f.mul(&self.counit[i], u))
                .collect();
            if !self.vec_eq(&left, &expected) || !self.vec_eq(&right, &expected) {
                violations.push(AxiomViolation {
                    axiom: "antipode".into(),
                    witness: vec![i],
                });
            }
        }
        violations
    }

    /// Semisimplicity by the Larson-Sweedler criterion: solve
    /// `h Lambda = eps(h) Lambda` for a left integral and test
    /// `eps(Lambda) != 0`. The integral space must be one-dimensional.
    pub fn is_semisimple(&self) -> Result<SemisimpleReport<F>> {
        let f = &self.field;
        let d = self.dim;
        // rows of (L_i - eps(h_i) id) stacked over i
        let mut rows = Vec::with_capacity(d * d);
        for i in 0..d {
            // L_i as a matrix: column j holds h_i h_j
            let mut cols = Vec::with_capacity(d);
            for j in 0..d {
                cols.push(self.product(&self.basis_vector(i), &self.basis_vector(j)));
            }
            for k in 0..d {
                let row: Vec<F::Elem> = (0..d)
                    .map(|j| {
                        let diag = if j == k {
                            self.counit[i].clone()
                        } else {
                            f.zero()
                        };
                        f.sub(&cols[j][k], &diag)
                    })
                    .collect();
                rows.push(row);
            }
        }
        let integrals = nullspace(f, &rows, d);
        if integrals.len() != 1 {
            return Err(Error::Internal(format!(
                "integral space has dimension {}, expected 1",
                integrals.len()
            )));
        }
        let integral = integrals.into_iter().next().unwrap();
        let eps = self.counit_of(&integral);
        Ok(SemisimpleReport {
            semisimple: !f.is_zero(&eps),
            integral,
            counit_of_integral: eps,
        })
    }

    fn left_mult_rows(&self, i: usize) -> Vec<Vec<F::Elem>> {
        // row k, column j: coefficient of h_k in h_i h_j
        (0..self.dim)
            .map(|k| (0..self.dim).map(|j| self.mult[i][j][k].clone()).collect())
            .collect()
    }

    fn right_mult_rows(&self, i: usize) -> Vec<Vec<F::Elem>> {
        (0..self.dim)
            .map(|k| (0..self.dim).map(|j| self.mult[j][i][k].clone()).collect())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SemisimpleReport<F: Field> {
    pub semisimple: bool,
    pub integral: Vec<F::Elem>,
    pub counit_of_integral: F::Elem,
}

/// The 4-dimensional Sweedler algebra on basis `{1, g, u, gu}`:
/// `g^2 = 1`, `u^2 = 0`, `gu + ug = 0`; `g` group-like, `u` a
/// `(g,1)`-skew-primitive, `S(g) = g`, `S(u) = -gu`.
pub fn sweedler<F: Field>(field: F) -> FinDimHopf<F> {
    let o = || field.one();
    let z = || field.zero();
    let n = |x: &F::Elem| field.neg(x);
    let d = 4;
    let mut mult = vec![vec![vec![z(); d]; d]; d];
    // products in the basis 0 = 1, 1 = g, 2 = u, 3 = gu
    let table: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, 1), (3, 1), (2, 1)],
        [(2, 1), (3, -1), (0, 0), (0, 0)],
        [(3, 1), (2, -1), (0, 0), (0, 0)],
    ];
    for i in 0..d {
        for j in 0..d {
            let (k, s) = table[i][j];
            mult[i][j][k] = match s {
                1 => o(),
                -1 => n(&o()),
                _ => z(),
            };
        }
    }
    let mut comult = vec![vec![vec![z(); d]; d]; d];
    comult[0][0][0] = o(); // Delta(1) = 1 (x) 1
    comult[1][1][1] = o(); // Delta(g) = g (x) g
    comult[2][2][0] = o(); // Delta(u) = u (x) 1 + g (x) u
    comult[2][1][2] = o();
    comult[3][3][1] = o(); // Delta(gu) = gu (x) g + 1 (x) gu
    comult[3][0][3] = o();
    let counit = vec![o(), o(), z(), z()];
    let mut antipode = vec![vec![z(); d]; d];
    antipode[0][0] = o();
    antipode[1][1] = o();
    antipode[2][3] = n(&o()); // S(u) = -gu
    antipode[3][2] = o(); // S(gu) = u
    let unit = vec![o(), z(), z(), z()];
    FinDimHopf::new(
        field,
        vec!["1".into(), "g".into(), "u".into(), "gu".into()],
        mult,
        unit,
        comult,
        counit,
        antipode,
    )
    .expect("sweedler tensors are well-formed")
}

/// Group algebra from a multiplication table `table[i][j] = index of g_i g_j`
/// with identity at index 0; group-likes, `eps = 1`, `S(g) = g^(-1)`.
pub fn group_algebra<F: Field>(
    field: F,
    labels: Vec<String>,
    table: &[Vec<usize>],
) -> Result<FinDimHopf<F>> {
    let d = labels.len();
    if table.len() != d || table.iter().any(|r| r.len() != d) {
        return Err(Error::Parse("group table is not square".into()));
    }
    let o = || field.one();
    let z = || field.zero();
    let mut mult = vec![vec![vec![z(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            mult[i][j][table[i][j]] = o();
        }
    }
    let mut comult = vec![vec![vec![z(); d]; d]; d];
    let mut antipode = vec![vec![z(); d]; d];
    for i in 0..d {
        comult[i][i][i] = o();
        let inv = (0..d)
            .find(|&j| table[i][j] == 0)
            .ok_or_else(|| Error::Parse(format!("element {i} has no inverse in the table")))?;
        antipode[i][inv] = o();
    }
    let counit = vec![o(); d];
    let mut unit = vec![z(); d];
    unit[0] = o();
    FinDimHopf::new(field, labels, mult, unit, comult, counit, antipode)
}

/// `k[Z/n]` on the basis `1, g, ..., g^(n-1)`.
pub fn cyclic_group_algebra<F: Field>(field: F, n: usize) -> Result<FinDimHopf<F>> {
    if n == 0 {
        return Err(Error::Parse("group order must be positive".into()));
    }
    let labels = (0..n)
        .map(|i| if i == 0 { "1".into() } else { format!("g^{i}") })
        .collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(field, labels, &table)
}

/// `k[S_3]` by structure constants, permutations in one-line notation.
pub fn s3_group_algebra<F: Field>(field: F) -> Result<FinDimHopf<F>> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let labels = vec![
        "e".into(),
        "(12)".into(),
        "(23)".into(),
        "(13)".into(),
        "(123)".into(),
        "(132)".into(),
    ];
    let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] {
        // (a b)(x) = a(b(x))
        [a[b[0]], a[b[1]], a[b[2]]]
    };
    let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| perms.iter().map(|b| index_of(&compose(a, b))).collect())
        .collect();
    group_algebra(field, labels, &table)
}

/// How a Hopf basis acts on the algebra.
#[derive(Debug)]
pub enum ActionBackend<F: Field> {
    /// Images `h_m . x_j` of the generators, extended to monomials through
    /// the comultiplication (polynomial variant only: the extension does not
    /// determine the action on inverted generators).
    GeneratorImages { images: Vec<Vec<QElement<F>>> },
    /// The Sweedler action on a `Z/2`-graded algebra with central odd `z`:
    /// `g . a = (-1)^deg(a) a`, `u . a = z a` on odd `a` and `0` on even.
    /// Total on the torus. Requires the Sweedler basis `{1, g, u, gu}`.
    SweedlerGraded { z: QElement<F> },
}

type MonomialImageCache<F> = Mutex<HashMap<(usize, Vec<i64>), QElement<F>>>;

/// An action of a finite-dimensional Hopf algebra on a quantum algebra.
#[derive(Debug)]
pub struct HopfAction<F: Field> {
    pub hopf: FinDimHopf<F>,
    pub algebra: Arc<QAlgebra<F>>,
    pub backend: ActionBackend<F>,
    cache: MonomialImageCache<F>,
}

impl<F: Field> HopfAction<F> {
    pub fn new(
        hopf: FinDimHopf<F>,
        algebra: Arc<QAlgebra<F>>,
        backend: ActionBackend<F>,
    ) -> Result<Self> {
        if let ActionBackend::GeneratorImages { images } = &backend {
            if images.len() != hopf.dim
                || images.iter().any(|row| row.len() != algebra.rank())
            {
                return Err(Error::Parse(
                    "generator images must be given for every basis element and generator".into(),
                ));
            }
        }
        if let ActionBackend::SweedlerGraded { .. } = &backend {
            if hopf.dim != 4 {
                return Err(Error::Parse(
                    "the graded backend requires the 4-dimensional Sweedler basis".into(),
                ));
            }
        }
        Ok(HopfAction {
            hopf,
            algebra,
            backend,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// `h . a` for `h` in basis coordinates.
    pub fn apply(&self, h: &[F::Elem], a: &QElement<F>) -> Result<QElement<F>> {
        let f = &self.hopf.field;
        let ring = self.algebra.scalars();
        let mut out = QElement::zero(&self.algebra);
        for (m, hm) in h.iter().enumerate() {
            if f.is_zero(hm) {
                continue;
            }
            for (exps, coeff) in a.terms() {
                let image = self.apply_basis_monomial(m, exps)?;
                let scaled = image.scale(&ring.mul(coeff, &ring.constant(hm.clone())));
                out = out.add(&scaled)?;
            }
        }
        Ok(out)
    }

    pub fn apply_basis(&self, m: usize, a: &QElement<F>) -> Result<QElement<F>> {
        self.apply(&self.hopf.basis_vector(m), a)
    }

    fn apply_basis_monomial(&self, m: usize, exps: &[i64]) -> Result<QElement<F>> {
        if let Some(hit) = self.cache.lock().unwrap().get(&(m, exps.to_vec())) {
            return Ok(hit.clone());
        }
        let result = match &self.backend {
            ActionBackend::SweedlerGraded { z } => {
                let mono = QElement::monomial(&self.algebra, exps.to_vec(), self.algebra.scalars().one());
                let parity = crate::qalg::GradedSign::parity(exps);
                match (m, parity) {
                    (0, _) => mono,
                    (1, 0) => mono,
                    (1, 1) => mono.neg(),
                    (2, 0) | (3, 0) => QElement::zero(&self.algebra),
                    (2, 1) | (3, 1) => z.mul(&mono)?,
                    _ => unreachable!("sweedler basis has dimension 4"),
                }
            }
            ActionBackend::GeneratorImages { images } => {
                if exps.iter().all(|&e| e == 0) {
                    // h . 1 = eps(h) 1
                    let eps = self.hopf.counit[m].clone();
                    QElement::one(&self.algebra)
                        .scale(&self.algebra.scalars().constant(eps))
                } else if exps.iter().any(|&e| e < 0) {
                    return Err(Error::UndefinedOnInverse);
                } else {
                    // split off the first generator: x^e = x_j * x^(e - e_j)
                    let j = exps.iter().position(|&e| e > 0).unwrap();
                    let mut rest = exps.to_vec();
                    rest[j] -= 1;
                    let f = &self.hopf.field;
                    let ring = self.algebra.scalars();
                    let d = self.hopf.dim;
                    let mut out = QElement::zero(&self.algebra);
                    // group Delta(h_m) terms by the right leg
                    for b in 0..d {
                        let mut left_image = QElement::zero(&self.algebra);
                        for a in 0..d {
                            let c = &self.hopf.comult[m][a][b];
                            if f.is_zero(c) {
                                continue;
                            }
                            left_image = left_image
                                .add(&images[a][j].scale(&ring.constant(c.clone())))?;
                        }
                        if left_image.is_zero() {
                            continue;
                        }
                        let right_image = self.apply_basis_monomial(b, &rest)?;
                        if right_image.is_zero() {
                            continue;
                        }
                        out = out.add(&left_image.mul(&right_image)?)?;
                    }
                    out
                }
            }
        };
        self.cache
            .lock()
            .unwrap()
            .insert((m, exps.to_vec()), result.clone());
        Ok(result)
    }

    /// The image of a generator, defined for both backends.
    pub fn generator_image(&self, m: usize, j: usize) -> Result<QElement<F>> {
        let mut exps = vec![0; self.algebra.rank()];
        exps[j] = 1;
        self.apply_basis_monomial(m, &exps)
    }
}

/// Outcome of the module-algebra verification: all checks that failed, with
/// witnesses. Empty means the action is a well-defined module algebra up to
/// the requested degree.
#[derive(Clone, Debug, Default)]
pub struct ModuleAlgebraReport {
    pub violations: Vec<ModuleAlgebraViolation>,
}

#[derive(Clone, Debug)]
pub struct ModuleAlgebraViolation {
    pub law: String,
    pub hopf_basis: usize,
    pub witness: String,
}

impl ModuleAlgebraReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All monomial exponents of the algebra up to the given total degree:
/// nonnegative exponents summing to at most `max_degree` for the polynomial
/// variant, L1 norm at most `max_degree` for the torus.
pub fn monomials_up_to<F: Field>(algebra: &QAlgebra<F>, max_degree: i64) -> Vec<Vec<i64>> {
    let n = algebra.rank();
    let (lo, hi) = match algebra.variant() {
        Variant::Polynomial => (0i64, max_degree),
        Variant::Torus => (-max_degree, max_degree),
    };
    let mut out = Vec::new();
    let mut v = vec![lo; n];
    loop {
        if v.iter().map(|e| e.abs()).sum::<i64>() <= max_degree {
            out.push(v.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            v[k] += 1;
            if v[k] <= hi {
                break;
            }
            v[k] = lo;
            k += 1;
        }
    }
}

/// Check that the action is a module-algebra structure:
/// (i) the defining relations are preserved (`h . (x_i x_j) = q_ij h . (x_j
/// x_i)` expanded by the Leibniz law, and `h . (x_j x_j^(-1)) = eps(h) 1` on
/// the torus), (ii) the Leibniz law on all monomial pairs within the degree
/// budget, (iii) `h . 1 = eps(h) 1`.
pub fn verify_module_algebra<F: Field>(
    action: &HopfAction<F>,
    max_degree: i64,
) -> Result<ModuleAlgebraReport> {
    if max_degree < 2 {
        return Err(Error::Parse("max_degree must be at least 2".into()));
    }
    let algebra = &action.algebra;
    let hopf = &action.hopf;
    let ring = algebra.scalars();
    let n = algebra.rank();
    let d = hopf.dim;
    let mut report = ModuleAlgebraReport::default();

    let leibniz = |m: usize, a: &QElement<F>, b: &QElement<F>| -> Result<QElement<F>> {
        let f = &hopf.field;
        let mut out = QElement::zero(algebra);
        for aa in 0..d {
            for bb in 0..d {
                let c = &hopf.comult[m][aa][bb];
                if f.is_zero(c) {
                    continue;
                }
                let left = action.apply_basis(aa, a)?;
                let right = action.apply_basis(bb, b)?;
                out = out.add(&left.mul(&right)?.scale(&ring.constant(c.clone())))?;
            }
        }
        Ok(out)
    };

    // (iii) h . 1 = eps(h) 1
    let one = QElement::one(algebra);
    for m in 0..d {
        let got = action.apply_basis(m, &one)?;
        let expected = one.scale(&ring.constant(hopf.counit[m].clone()));
        if got != expected {
            report.violations.push(ModuleAlgebraViolation {
                law: "unit".into(),
                hopf_basis: m,
                witness: "h . 1 != eps(h) 1".into(),
            });
        }
    }

    // (i) relations preserved, via the Leibniz expansion of both sides
    let gens: Vec<QElement<F>> = (0..n).map(|j| QElement::generator(algebra, j)).collect();
    for m in 0..d {
        for i in 0..n {
            for j in i + 1..n {
                let lhs = leibniz(m, &gens[i], &gens[j])?;
                let qij = algebra.eval(algebra.bicharacter().entry(i, j));
                let rhs = leibniz(m, &gens[j], &gens[i])?.scale(&qij);
                if lhs != rhs {
                    report.violations.push(ModuleAlgebraViolation {
                        law: "relation".into(),
                        hopf_basis: m,
                        witness: format!("(i, j) = ({}, {})", i + 1, j + 1),
                    });
                }
            }
        }
        if algebra.variant() == Variant::Torus {
            for j in 0..n {
                let inv = QElement::generator_inv(algebra, j)?;
                let got = leibniz(m, &gens[j], &inv)?;
                let expected = one.scale(&ring.constant(hopf.counit[m].clone()));
                if got != expected {
                    report.violations.push(ModuleAlgebraViolation {
                        law: "relation".into(),
                        hopf_basis: m,
                        witness: format!("x_{} x_{}^(-1)", j + 1, j + 1),
                    });
                }
            }
        }
    }

    // (ii) Leibniz on monomial pairs
    let monos = monomials_up_to(algebra.as_ref(), max_degree);
    for a_exps in &monos {
        let da: i64 = a_exps.iter().map(|e| e.abs()).sum();
        let a = QElement::monomial(algebra, a_exps.clone(), ring.one());
        for b_exps in &monos {
            let db: i64 = b_exps.iter().map(|e| e.abs()).sum();
            if da + db > max_degree {
                continue;
            }
            let b = QElement::monomial(algebra, b_exps.clone(), ring.one());
            let ab = a.mul(&b)?;
            for m in 0..d {
                let direct = action.apply_basis(m, &ab)?;
                let expanded = leibniz(m, &a, &b)?;
                if direct != expanded {
                    report.violations.push(ModuleAlgebraViolation {
                        law: "leibniz".into(),
                        hopf_basis: m,
                        witness: format!("a = {a_exps:?}, b = {b_exps:?}"),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Result of the inner-faithfulness computation. `faithful` answers whether
/// the largest Hopf ideal annihilating all monomials of degree at most the
/// cutoff is zero; `certified` records whether the annihilator dimensions
/// stabilized for `dim H + 1` consecutive degrees (otherwise the verdict is
/// a truncation and is labeled as such).
#[derive(Clone, Debug)]
pub struct InnerFaithfulReport<F: Field> {
    pub faithful: bool,
    pub certified: bool,
    pub ann_dims: Vec<usize>,
    pub ideal_dim: usize,
    pub ideal_basis: Vec<Vec<ScalarFrac<F>>>,
}

/// Compute the largest subspace of the degree-truncated annihilator that is
/// a two-sided ideal, a coideal, killed by the counit, and antipode-stable;
/// the action is inner faithful (up to truncation) iff it is zero.
pub fn inner_faithful<F: Field>(
    action: &HopfAction<F>,
    max_degree: i64,
) -> Result<InnerFaithfulReport<F>> {
    let hopf = &action.hopf;
    let algebra = &action.algebra;
    let d = hopf.dim;
    let ff = ScalarFracField::new(algebra.scalars().clone());
    let lift = |c: &F::Elem| ff.from_scalar(algebra.scalars().constant(c.clone()));

    // annihilator of monomials of degree <= D, for D = 0..max_degree
    let mut ann = Subspace::full(&ff, d);
    let mut ann_dims = Vec::new();
    for degree in 0..=max_degree {
        let mut rows: Vec<Vec<ScalarFrac<F>>> = Vec::new();
        for exps in monomials_up_to(algebra.as_ref(), degree) {
            let deg: i64 = exps.iter().map(|e| e.abs()).sum();
            if deg != degree {
                continue;
            }
            let images: Vec<QElement<F>> = (0..d)
                .map(|m| action.apply_basis_monomial(m, &exps))
                .collect::<Result<_>>()?;
            let mut keys: Vec<Vec<i64>> = Vec::new();
            for im in &images {
                for k in im.terms().keys() {
                    if !keys.contains(k) {
                        keys.push(k.clone());
                    }
                }
            }
            for key in keys {
                let row: Vec<ScalarFrac<F>> = images
                    .iter()
                    .map(|im| {
                        im.terms()
                            .get(&key)
                            .map(|s| ff.from_scalar(s.clone()))
                            .unwrap_or_else(|| ff.zero())
                    })
                    .collect();
                rows.push(row);
            }
        }
        if !rows.is_empty() {
            let kernel = Subspace::from_vectors(&ff, d, nullspace(&ff, &rows, d));
            ann = ann.intersect(&ff, &kernel);
        }
        ann_dims.push(ann.dim());
    }

    let stable_needed = d + 1;
    let certified = ann_dims.len() >= stable_needed
        && ann_dims[ann_dims.len() - stable_needed..]
            .windows(2)
            .all(|w| w[0] == w[1]);

    // lifted structure maps
    let left: Vec<Vec<Vec<ScalarFrac<F>>>> = (0..d)
        .map(|i| {
            hopf.left_mult_rows(i)
                .iter()
                .map(|r| r.iter().map(&lift).collect())
                .collect()
        })
        .collect();
    let right: Vec<Vec<Vec<ScalarFrac<F>>>> = (0..d)
        .map(|i| {
            hopf.right_mult_rows(i)
                .iter()
                .map(|r| r.iter().map(&lift).collect())
                .collect()
        })
        .collect();
    let antipode_rows: Vec<Vec<ScalarFrac<F>>> = (0..d)
        .map(|k| (0..d).map(|i| lift(&hopf.antipode[i][k])).collect())
        .collect();
    let counit_row: Vec<Vec<ScalarFrac<F>>> =
        vec![(0..d).map(|i| lift(&hopf.counit[i])).collect()];
    let counit_kernel = Subspace::from_vectors(&ff, d, nullspace(&ff, &counit_row, d));

    // largest Hopf ideal inside the annihilator, by intersecting the four
    // closure conditions until nothing changes
    let mut ideal = ann.clone();
    loop {
        let before = ideal.dim();
        // two-sided ideal
        loop {
            let mut next = ideal.clone();
            for i in 0..d {
                next = next.intersect(&ff, &ideal.preimage(&ff, &left[i], d));
                next = next.intersect(&ff, &ideal.preimage(&ff, &right[i], d));
            }
            if next.dim() == ideal.dim() {
                break;
            }
            ideal = next;
        }
        // eps(I) = 0
        ideal = ideal.intersect(&ff, &counit_kernel);
        // S(I) in I
        loop {
            let next = ideal.intersect(&ff, &ideal.preimage(&ff, &antipode_rows, d));
            if next.dim() == ideal.dim() {
                break;
            }
            ideal = next;
        }
        // Delta(I) in I (x) H + H (x) I: with E the defining equations of I,
        // the condition is (E (x) E) Delta(h) = 0
        let eqs = ideal.defining_equations(&ff);
        if !eqs.is_empty() {
            let mut rows = Vec::new();
            for e1 in &eqs {
                for e2 in &eqs {
                    let row: Vec<ScalarFrac<F>> = (0..d)
                        .map(|i| {
                            let mut acc = ff.zero();
                            for j in 0..d {
                                if ff.is_zero(&e1[j]) {
                                    continue;
                                }
                                for k in 0..d {
                                    if ff.is_zero(&e2[k]) {
                                        continue;
                                    }
                                    let c = lift(&hopf.comult[i][j][k]);
                                    acc = ff.add(&acc, &ff.mul(&ff.mul(&e1[j], &e2[k]), &c));
                                }
                            }
                            acc
                        })
                        .collect();
                    rows.push(row);
                }
            }
            let coideal = Subspace::from_vectors(&ff, d, nullspace(&ff, &rows, d));
            ideal = ideal.intersect(&ff, &coideal);
        }
        if ideal.dim() == before {
            break;
        }
    }

    Ok(InnerFaithfulReport {
        faithful: ideal.is_zero(),
        certified,
        ann_dims,
        ideal_dim: ideal.dim(),
        ideal_basis: ideal.basis().to_vec(),
    })
}

/// The Sweedler action of the paper's graded construction on
/// `k_q[x, y]` for `q` a root of unity of odd order: `z` is the minimal
/// central odd monomial (`x^ord`), `g` negates generators, `u . a = z a` on
/// odd elements. Returned with generator images so the extension through the
/// comultiplication is exercised.
pub fn sweedler_polynomial_action(
    ord: u64,
) -> Result<HopfAction<crate::exactnum::CycField>> {
    use crate::exactnum::CycField;
    use crate::latgroup::{Bicharacter, MultElement};
    let q = MultElement::root_of_unity(ord, 1, 0);
    let algebra = crate::qalg::cyclotomic_algebra(
        Bicharacter::quantum_plane(&q)?,
        Variant::Polynomial,
    )?;
    let z_exps = algebra.sweedler_central_odd()?;
    let z = QElement::monomial(&algebra, z_exps, algebra.scalars().one());
    let hopf = sweedler(CycField);
    let mut images = Vec::with_capacity(4);
    for m in 0..4 {
        let mut row = Vec::with_capacity(algebra.rank());
        for j in 0..algebra.rank() {
            let xj = QElement::generator(&algebra, j);
            let image = match m {
                0 => xj,
                1 => xj.neg(),
                _ => z.mul(&xj)?,
            };
            row.push(image);
        }
        images.push(row);
    }
    HopfAction::new(hopf, algebra, ActionBackend::GeneratorImages { images })
}

/// The Sweedler action on the quantum torus in `n` variables with a free
/// parameter `q`, `q_ij = q^sign(j-i)`; defined directly on monomials by the
/// grading rule. Fails with `NoCentralOddElement` for even `n`.
pub fn sweedler_torus_action(
    n: usize,
) -> Result<HopfAction<crate::field::RationalField>> {
    use crate::field::RationalField;
    use crate::latgroup::{Bicharacter, MultElement};
    let q = MultElement::free_generator(0, 1);
    let algebra = crate::qalg::rational_algebra(Bicharacter::sign_matrix(&q, n)?, Variant::Torus)?;
    let z_exps = algebra.sweedler_central_odd()?;
    let z = QElement::monomial(&algebra, z_exps, algebra.scalars().one());
    let hopf = sweedler(RationalField);
    HopfAction::new(hopf, algebra, ActionBackend::SweedlerGraded { z })
}

/// Parse the structure-constant document format: `dim = d`, `basis = ...`,
/// then sparse tensor sections `[mul]`, `[comul]`, `[counit]`, `[antipode]`,
/// and optionally `[unit]` (default: the first basis element). Entries are
/// `i j k value` (or `i value` / `i j value` for the lower-rank tensors)
/// with rational values, zero-based indices, `#` comments.
pub fn parse_structure_constants(
    text: &str,
) -> Result<FinDimHopf<crate::field::RationalField>> {
    use crate::field::RationalField;
    let f = RationalField;
    let mut dim: Option<usize> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut section = String::new();
    let mut mul_entries: Vec<(usize, usize, usize, crate::Rational)> = Vec::new();
    let mut comul_entries: Vec<(usize, usize, usize, crate::Rational)> = Vec::new();
    let mut counit_entries: Vec<(usize, crate::Rational)> = Vec::new();
    let mut antipode_entries: Vec<(usize, usize, crate::Rational)> = Vec::new();
    let mut unit_entries: Vec<(usize, crate::Rational)> = Vec::new();

    let parse_rational = |s: &str| -> Result<crate::Rational> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: num_bigint::BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        let d: num_bigint::BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        if d == 0.into() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(crate::Rational::new(n, d))
    };
    let parse_index = |s: &str, d: usize| -> Result<usize> {
        let i: usize = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad index `{s}`")))?;
        if i >= d {
            return Err(Error::Parse(format!("index {i} out of range (dim {d})")));
        }
        Ok(i)
    };

    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            section = rest
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("bad section header `{line}`")))?
                .trim()
                .to_lowercase();
            continue;
        }
        if let Some((key, value)) = line.split_once('=') {
            match key.trim() {
                "dim" => {
                    dim = Some(
                        value
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse("bad dim".into()))?,
                    )
                }
                "basis" => {
                    basis = Some(value.split_whitespace().map(str::to_string).collect())
                }
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
            continue;
        }
        let d = dim.ok_or_else(|| Error::Parse("dim must come before tensor entries".into()))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (section.as_str(), toks.len()) {
            ("mul", 4) => mul_entries.push((
                parse_index(toks[0], d)?,
                parse_index(toks[1], d)?,
                parse_index(toks[2], d)?,
                parse_rational(toks[3])?,
            )),
            ("comul", 4) => comul_entries.push((
                parse_index(toks[0], d)?,
                parse_index(toks[1], d)?,
                parse_index(toks[2], d)?,
                parse_rational(toks[3])?,
            )),
            ("counit", 2) => {
                counit_entries.push((parse_index(toks[0], d)?, parse_rational(toks[1])?))
            }
            ("antipode", 3) => antipode_entries.push((
                parse_index(toks[0], d)?,
                parse_index(toks[1], d)?,
                parse_rational(toks[2])?,
            )),
            ("unit", 2) => {
                unit_entries.push((parse_index(toks[0], d)?, parse_rational(toks[1])?))
            }
            (s, _) => {
                return Err(Error::Parse(format!(
                    "malformed entry `{line}` in section [{s}]"
                )))
            }
        }
    }

    let d = dim.ok_or_else(|| Error::Parse("missing dim".into()))?;
    let labels = basis.unwrap_or_else(|| (0..d).map(|i| format!("h{i}")).collect());
    if labels.len() != d {
        return Err(Error::Parse("basis label count does not match dim".into()));
    }
    let mut mult = vec![vec![vec![f.zero(); d]; d]; d];
    for (i, j, k, v) in mul_entries {
        mult[i][j][k] = v;
    }
    let mut comult = vec![vec![vec![f.zero(); d]; d]; d];
    for (i, j, k, v) in comul_entries {
        comult[i][j][k] = v;
    }
    let mut counit = vec![f.zero(); d];
    for (i, v) in counit_entries {
        counit[i] = v;
    }
    let mut antipode = vec![vec![f.zero(); d]; d];
    for (i, j, v) in antipode_entries {
        antipode[i][j] = v;
    }
    let mut unit = vec![f.zero(); d];
    if unit_entries.is_empty() {
        unit[0] = f.one();
    } else {
        for (i, v) in unit_entries {
            unit[i] = v;
        }
    }
    FinDimHopf::new(f, labels, mult, unit, comult, counit, antipode)
}

/// Express a Hopf element in the basis labels, for human-readable
/// certificates.
pub fn describe_hopf_vector<F: Field>(hopf: &FinDimHopf<F>, v: &[ScalarFrac<F>]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.num.is_zero())
        .map(|(i, c)| format!("({}) {}", c, hopf.labels[i]))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CycField;
    use crate::field::{PrimeField, RationalField};
    use crate::latgroup::{Bicharacter, MultElement};
    use crate::qalg::{rational_algebra, ScalarRing};

    #[test]
    fn sweedler_satisfies_hopf_axioms() {
        assert!(sweedler(RationalField).verify_hopf_axioms().is_empty());
        assert!(sweedler(CycField).verify_hopf_axioms().is_empty());
    }

    #[test]
    fn group_algebras_satisfy_hopf_axioms() {
        assert!(cyclic_group_algebra(RationalField, 2)
            .unwrap()
            .verify_hopf_axioms()
            .is_empty());
        assert!(cyclic_group_algebra(RationalField, 5)
            .unwrap()
            .verify_hopf_axioms()
            .is_empty());
        assert!(s3_group_algebra(RationalField)
            .unwrap()
            .verify_hopf_axioms()
            .is_empty());
    }

    #[test]
    fn corrupted_antipode_is_caught() {
        let mut h = sweedler(RationalField);
        // force S(u) := u
        h.antipode[2] = vec![
            RationalField.zero(),
            RationalField.zero(),
            RationalField.one(),
            RationalField.zero(),
        ];
        let violations = h.verify_hopf_axioms();
        assert!(violations
            .iter()
            .any(|v| v.axiom == "antipode" && v.witness == vec![2]));
    }

    #[test]
    fn sweedler_is_not_semisimple() {
        let report = sweedler(RationalField).is_semisimple().unwrap();
        assert!(!report.semisimple);
        assert!(RationalField.is_zero(&report.counit_of_integral));
        // the integral is proportional to (1 + g) u = u + gu
        let l = &report.integral;
        assert!(RationalField.is_zero(&l[0]) && RationalField.is_zero(&l[1]));
        assert!(!RationalField.is_zero(&l[2]));
        assert_eq!(l[2], l[3]);
    }

    #[test]
    fn group_algebras_are_semisimple_in_char_zero() {
        for n in 1..=6 {
            let h = cyclic_group_algebra(RationalField, n).unwrap();
            let report = h.is_semisimple().unwrap();
            assert!(report.semisimple);
            // Lambda = sum of group elements, so eps(Lambda)/coord = n
            let coord = &report.integral[0];
            assert!(report.integral.iter().all(|c| c == coord));
            assert_eq!(
                report.counit_of_integral,
                RationalField.mul(&RationalField.from_i64(n as i64), coord)
            );
        }
        assert!(s3_group_algebra(RationalField)
            .unwrap()
            .is_semisimple()
            .unwrap()
            .semisimple);
    }

    #[test]
    fn group_algebras_mod_p_follow_maschke() {
        for (n, p, expected) in [
            (6usize, 5u64, true),
            (6, 2, false),
            (6, 3, false),
            (4, 3, true),
            (4, 2, false),
        ] {
            let h = cyclic_group_algebra(PrimeField::new(p), n).unwrap();
            assert!(h.verify_hopf_axioms().is_empty());
            assert_eq!(h.is_semisimple().unwrap().semisimple, expected, "n={n} p={p}");
        }
        // S3 over F_5 semisimple, over F_3 not
        assert!(s3_group_algebra(PrimeField::new(5))
            .unwrap()
            .is_semisimple()
            .unwrap()
            .semisimple);
        assert!(!s3_group_algebra(PrimeField::new(3))
            .unwrap()
            .is_semisimple()
            .unwrap()
            .semisimple);
    }

    #[test]
    fn sweedler_action_values_on_the_quantum_plane() {
        // ord(q) = 3, z = x^3: u . y = x^3 y, u . (xy) = 0, g . (x^2 y) = -x^2 y
        let action = sweedler_polynomial_action(3).unwrap();
        let a = &action.algebra;
        let ring = a.scalars();
        let y = QElement::generator(a, 1);
        let u_dot_y = action.apply_basis(2, &y).unwrap();
        assert_eq!(u_dot_y, QElement::monomial(a, vec![3, 1], ring.one()));
        let x = QElement::generator(a, 0);
        let xy = x.mul(&y).unwrap();
        assert!(action.apply_basis(2, &xy).unwrap().is_zero());
        let x2y = QElement::monomial(a, vec![2, 1], ring.one());
        assert_eq!(action.apply_basis(1, &x2y).unwrap(), x2y.neg());
        // h . 1 = eps(h) 1
        assert_eq!(
            action.apply_basis(1, &QElement::one(a)).unwrap(),
            QElement::one(a)
        );
        assert!(action.apply_basis(2, &QElement::one(a)).unwrap().is_zero());
    }

    #[test]
    fn sweedler_polynomial_action_is_module_algebra() {
        for ord in [3u64, 5] {
            let action = sweedler_polynomial_action(ord).unwrap();
            let report = verify_module_algebra(&action, 6).unwrap();
            assert!(report.passed(), "ord {ord}: {:?}", report.violations);
        }
    }

    #[test]
    fn sweedler_torus_action_is_module_algebra() {
        let action = sweedler_torus_action(3).unwrap();
        let report = verify_module_algebra(&action, 4).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        // z = x1 x2^(-1) x3
        if let ActionBackend::SweedlerGraded { z } = &action.backend {
            let expected =
                QElement::monomial(&action.algebra, vec![1, -1, 1], action.algebra.scalars().one());
            assert_eq!(*z, expected);
        } else {
            panic!("torus action should use the graded backend");
        }
    }

    #[test]
    fn even_torus_has_no_sweedler_action() {
        assert_eq!(
            sweedler_torus_action(2).unwrap_err(),
            Error::NoCentralOddElement
        );
        assert_eq!(
            sweedler_torus_action(4).unwrap_err(),
            Error::NoCentralOddElement
        );
    }

    #[test]
    fn corrupted_action_fails_relation_check() {
        // u . x := x instead of z x
        let action = sweedler_polynomial_action(3).unwrap();
        let a = action.algebra.clone();
        let x = QElement::generator(&a, 0);
        let mut images = match action.backend {
            ActionBackend::GeneratorImages { ref images } => images.clone(),
            _ => unreachable!(),
        };
        images[2][0] = x;
        let corrupted = HopfAction::new(
            sweedler(CycField),
            a,
            ActionBackend::GeneratorImages { images },
        )
        .unwrap();
        let report = verify_module_algebra(&corrupted, 4).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == "relation" && v.witness.contains("(1, 2)")));
    }

    #[test]
    fn sweedler_actions_are_inner_faithful() {
        let action = sweedler_polynomial_action(3).unwrap();
        let report = inner_faithful(&action, 6).unwrap();
        assert!(report.faithful);
        assert!(report.certified);
        assert_eq!(report.ideal_dim, 0);

        let torus = sweedler_torus_action(3).unwrap();
        let report = inner_faithful(&torus, 4).unwrap();
        assert!(report.faithful);
    }

    #[test]
    fn g_only_action_factors_through_the_group_quotient() {
        // u |-> 0: the annihilator span(u, gu) is a Hopf ideal, for every
        // central odd z the full construction would have used
        for ord in [3u64, 5] {
            let base = sweedler_polynomial_action(ord).unwrap();
            let a = base.algebra.clone();
            let ring = a.scalars().clone();
            let mut images = Vec::new();
            for m in 0..4 {
                let row: Vec<QElement<CycField>> = (0..2)
                    .map(|j| {
                        let xj = QElement::generator(&a, j);
                        match m {
                            0 => xj,
                            1 => xj.neg(),
                            _ => QElement::zero(&a),
                        }
                    })
                    .collect();
                images.push(row);
            }
            let action = HopfAction::new(
                sweedler(CycField),
                a,
                ActionBackend::GeneratorImages { images },
            )
            .unwrap();
            assert!(verify_module_algebra(&action, 4).unwrap().passed());
            let report = inner_faithful(&action, 6).unwrap();
            assert!(!report.faithful);
            assert_eq!(report.ideal_dim, 2);
            // certificate: span(u, gu)
            let ff = ScalarFracField::new(ring);
            let ideal = Subspace::from_vectors(&ff, 4, report.ideal_basis.clone());
            let mut e2 = vec![ff.zero(); 4];
            e2[2] = ff.one();
            let mut e3 = vec![ff.zero(); 4];
            e3[3] = ff.one();
            assert!(ideal.contains(&ff, &e2));
            assert!(ideal.contains(&ff, &e3));
        }
    }

    #[test]
    fn z4_sign_action_factors_through_z2() {
        // k[Z/4] with g acting as -1 on the generator of k[x]
        let bichar = Bicharacter::from_upper(1, vec![], vec![]).unwrap();
        let a = rational_algebra(bichar, Variant::Polynomial).unwrap();
        let hopf = cyclic_group_algebra(RationalField, 4).unwrap();
        let images: Vec<Vec<QElement<RationalField>>> = (0..4)
            .map(|m| {
                let x = QElement::generator(&a, 0);
                vec![if m % 2 == 0 { x } else { x.neg() }]
            })
            .collect();
        let action =
            HopfAction::new(hopf, a.clone(), ActionBackend::GeneratorImages { images }).unwrap();
        assert!(verify_module_algebra(&action, 4).unwrap().passed());
        let report = inner_faithful(&action, 6).unwrap();
        assert!(!report.faithful);
        assert_eq!(report.ideal_dim, 2);
        // the ideal is generated by g^2 - 1: contains 1 - g^2 and g - g^3
        let ff = ScalarFracField::new(a.scalars().clone());
        let ideal = Subspace::from_vectors(&ff, 4, report.ideal_basis.clone());
        let mone = ff.from_i64(-1);
        let v1 = vec![ff.one(), ff.zero(), mone.clone(), ff.zero()];
        let v2 = vec![ff.zero(), ff.one(), ff.zero(), mone];
        assert!(ideal.contains(&ff, &v1));
        assert!(ideal.contains(&ff, &v2));
    }

    #[test]
    fn leibniz_law_on_random_elements() {
        let action = sweedler_polynomial_action(3).unwrap();
        let a = &action.algebra;
        let ring = a.scalars();
        let hopf = &action.hopf;
        let f = &hopf.field;
        let mut state = 23u64;
        let mut split = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for _ in 0..5 {
            let mut rand_elem = || {
                let mut e = QElement::zero(a);
                for _ in 0..2 {
                    let exps = vec![(split() % 3) as i64, (split() % 3) as i64];
                    let c = ring.constant(CycField.from_i64((split() % 5) as i64 - 2));
                    e = e.add(&QElement::monomial(a, exps, c)).unwrap();
                }
                e
            };
            let x = rand_elem();
            let y = rand_elem();
            let xy = x.mul(&y).unwrap();
            for m in 0..4 {
                let direct = action.apply_basis(m, &xy).unwrap();
                let mut expanded = QElement::zero(a);
                for aa in 0..4 {
                    for bb in 0..4 {
                        let c = &hopf.comult[m][aa][bb];
                        if f.is_zero(c) {
                            continue;
                        }
                        let l = action.apply_basis(aa, &x).unwrap();
                        let r = action.apply_basis(bb, &y).unwrap();
                        expanded = expanded
                            .add(&l.mul(&r).unwrap().scale(&ring.constant(c.clone())))
                            .unwrap();
                    }
                }
                assert_eq!(direct, expanded);
            }
        }
    }

    #[test]
    fn torus_generator_images_error_on_inverses() {
        // generator-images backend cannot act on x^(-1)
        let q = MultElement::free_generator(0, 1);
        let a = rational_algebra(Bicharacter::sign_matrix(&q, 3).unwrap(), Variant::Torus).unwrap();
        let hopf = cyclic_group_algebra(RationalField, 2).unwrap();
        let images: Vec<Vec<QElement<RationalField>>> = (0..2)
            .map(|m| {
                (0..3)
                    .map(|j| {
                        let x = QElement::generator(&a, j);
                        if m == 0 {
                            x
                        } else {
                            x.neg()
                        }
                    })
                    .collect()
            })
            .collect();
        let action =
            HopfAction::new(hopf, a.clone(), ActionBackend::GeneratorImages { images }).unwrap();
        let inv = QElement::generator_inv(&a, 0).unwrap();
        assert_eq!(
            action.apply_basis(1, &inv).unwrap_err(),
            Error::UndefinedOnInverse
        );
    }

    #[test]
    fn structure_constant_document_roundtrip() {
        let text = "\
# the group algebra of Z/2
dim = 2
basis = 1 g
[mul]
0 0 0 1
0 1 1 1
1 0 1 1
1 1 0 1
[comul]
0 0 0 1
1 1 1 1
[counit]
0 1
1 1
[antipode]
0 0 1
1 1 1
";
        let h = parse_structure_constants(text).unwrap();
        assert_eq!(h.dim, 2);
        assert!(h.verify_hopf_axioms().is_empty());
        assert!(h.is_semisimple().unwrap().semisimple);
        assert!(parse_structure_constants("dim = x").is_err());
        assert!(parse_structure_constants("[mul]\n0 0 0 1").is_err());
    }

    #[test]
    fn described_certificates_use_labels() {
        let h = sweedler(RationalField);
        let ff = ScalarFracField::new(ScalarRing::new(RationalField, 0));
        let v = vec![ff.zero(), ff.zero(), ff.one(), ff.from_i64(-1)];
        let s = describe_hopf_vector(&h, &v);
        assert!(s.contains('u') && s.contains("gu"));
    }
}
