//! Dense exact linear algebra over any [`Field`]: reduced row echelon form,
//! kernels, and subspace arithmetic (sums, intersections, preimages).
//!
//! Vectors are `Vec<Elem>` treated as column vectors; a linear map is a list
//! of rows, so `apply_map` computes `y_i = sum_j m[i][j] x_j`. Everything is
//! small and dense; the point is exactness, not speed.

use crate::field::Field;

/// In-place reduced row echelon form. Returns the pivot columns; zero rows
/// are removed.
pub fn rref<F: Field>(ring: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !ring.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = ring.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        for i in 0..rows.len() {
            if i != r && !ring.is_zero(&rows[i][c]) {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let s = ring.mul(&f, &rows[r][j]);
                    rows[i][j] = ring.sub(&rows[i][j], &s);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(ring: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(ring, &mut m).len()
}

/// Basis of the right kernel `{x : M x = 0}` of the matrix given by `rows`.
pub fn nullspace<F: Field>(ring: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut m = rows.to_vec();
    let pivots = rref(ring, &mut m);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![ring.zero(); ncols];
        v[free] = ring.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = ring.neg(&m[i][free]);
        }
        basis.push(v);
    }
    basis
}

/// `y = M x` for a map given by rows.
pub fn apply_map<F: Field>(ring: &F, map: &[Vec<F::Elem>], x: &[F::Elem]) -> Vec<F::Elem> {
    map.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(ring.zero(), |acc, (m, xi)| ring.add(&acc, &ring.mul(m, xi)))
        })
        .collect()
}

/// A linear subspace of `F^ambient`, stored as an RREF basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ring: &F, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![ring.zero(); ambient];
                v[i] = ring.one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    pub fn from_vectors(ring: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        let mut basis = vectors;
        rref(ring, &mut basis);
        Subspace { ambient, basis }
    }

    /// Wrap rows already known to be in reduced row echelon form (strictly
    /// increasing pivot columns with unit pivots and zeros above and below),
    /// skipping the re-reduction. The structure is spot-checked.
    pub(crate) fn from_rref_rows(ring: &F, ambient: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let s = Subspace {
            ambient,
            basis: rows,
        };
        let pivots = s.pivots(ring);
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(s.basis.iter().zip(&pivots).all(|(r, &p)| ring.is_one(&r[p])));
        debug_assert!(s.basis.iter().enumerate().all(|(i, r)| {
            pivots
                .iter()
                .enumerate()
                .all(|(j, &p)| i == j || ring.is_zero(&r[p]))
        }));
        s
    }

    /// First nonzero column of each basis row; defined because the basis is
    /// kept in reduced row echelon form.
    fn pivots(&self, ring: &F) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| {
                row.iter()
                    .position(|x| !ring.is_zero(x))
                    .expect("no zero rows in an RREF basis")
            })
            .collect()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    /// Normal form of `v` modulo this subspace: the remainder after
    /// eliminating every pivot coordinate against the RREF basis.
    pub fn reduce(&self, ring: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots(ring)) {
            if ring.is_zero(&v[p]) {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = ring.sub(x, &ring.mul(&f, r));
            }
        }
        v
    }

    /// Membership by reducing against the RREF basis.
    pub fn contains(&self, ring: &F, v: &[F::Elem]) -> bool {
        self.reduce(ring, v).iter().all(|x| ring.is_zero(x))
    }

    pub fn equals(&self, ring: &F, other: &Self) -> bool {
        self.dim() == other.dim() && other.basis.iter().all(|v| self.contains(ring, v))
    }

    pub fn sum(&self, ring: &F, other: &Self) -> Self {
        debug_assert_eq!(self.ambient, other.ambient);
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Self::from_vectors(ring, self.ambient, vecs)
    }

    pub fn intersect(&self, ring: &F, other: &Self) -> Self {
        debug_assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // x = a . basis_self = b . basis_other: solve for (a, b) in the
        // kernel of the ambient x (s + t) matrix [B_self^T | -B_other^T].
        let s = self.dim();
        let t = other.dim();
        let rows: Vec<Vec<F::Elem>> = (0..self.ambient)
            .map(|coord| {
                let mut row = Vec::with_capacity(s + t);
                for v in &self.basis {
                    row.push(v[coord].clone());
                }
                for w in &other.basis {
                    row.push(ring.neg(&w[coord]));
                }
                row
            })
            .collect();
        let ker = nullspace(ring, &rows, s + t);
        let vecs = ker
            .iter()
            .map(|ab| {
                let mut x = vec![ring.zero(); self.ambient];
                for (i, v) in self.basis.iter().enumerate() {
                    for (coord, slot) in x.iter_mut().enumerate() {
                        *slot = ring.add(slot, &ring.mul(&ab[i], &v[coord]));
                    }
                }
                x
            })
            .collect();
        Self::from_vectors(ring, self.ambient, vecs)
    }

    /// Rows of functionals whose common kernel is this subspace.
    pub fn defining_equations(&self, ring: &F) -> Vec<Vec<F::Elem>> {
        // annihilator of the column span: kernel of basis^T ... transposed
        let rows: Vec<Vec<F::Elem>> = self.basis.clone();
        nullspace(ring, &rows, self.ambient)
    }

    /// `{x : M x in self}` for a map `M: F^dom -> F^ambient` given by rows.
    pub fn preimage(&self, ring: &F, map: &[Vec<F::Elem>], dom: usize) -> Subspace<F> {
        debug_assert_eq!(map.len(), self.ambient);
        let eqs = self.defining_equations(ring);
        if eqs.is_empty() {
            return Subspace::full(ring, dom);
        }
        // (E M) x = 0
        let composed: Vec<Vec<F::Elem>> = eqs
            .iter()
            .map(|e| {
                (0..dom)
                    .map(|j| {
                        map.iter()
                            .zip(e)
                            .fold(ring.zero(), |acc, (mrow, ei)| {
                                ring.add(&acc, &ring.mul(ei, &mrow[j]))
                            })
                    })
                    .collect()
            })
            .collect();
        let ker = nullspace(ring, &composed, dom);
        Subspace::from_vectors(ring, dom, ker)
    }
}
