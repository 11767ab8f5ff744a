//! Exact integer matrices: Smith normal form with transforms, kernels, and
//! Bareiss determinants. Sizes here are desk scale (tens of rows), so the
//! classic pivot-reduction algorithm with gcd-minimal pivoting needs no
//! modular tricks.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let add = q * &self[(b, j)];
            self[(a, j)] += add;
        }
    }

    /// col[a] += q * col[b]
    fn add_col_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let add = q * &self[(i, b)];
            self[(i, a)] += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// Fraction-free Bareiss determinant; exact for any square matrix.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    m[(i, j)] = q;
                }
            }
            for i in k + 1..n {
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...`, all divisors nonnegative.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// The nonzero diagonal entries.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

/// Smith normal form by pivot reduction. The returned decomposition is
/// re-verified internally (re-multiplication, unimodularity, divisibility
/// chain); failure of any check is an internal error.
pub fn smith_normal_form(a: &IntMatrix) -> Result<Snf> {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.nrows());
    let mut v = IntMatrix::identity(a.ncols());
    let steps = a.nrows().min(a.ncols());

    for t in 0..steps {
        'pivot: loop {
            // gcd-minimal pivot: smallest absolute value in the submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.nrows() {
                for j in t..d.ncols() {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if d[(i, j)].abs() < d[(pi, pj)].abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // submatrix is zero; done with the whole reduction
                break 'pivot;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // clear column t below and row t to the right
            let mut dirty = false;
            for i in t + 1..d.nrows() {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -div_round(&d[(i, t)], &d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..d.ncols() {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -div_round(&d[(t, j)], &d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // pivot must divide the rest of the submatrix for the chain
            let mut offender = None;
            'scan: for i in t + 1..d.nrows() {
                for j in t + 1..d.ncols() {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break 'pivot,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let snf = Snf { u, d, v };
    verify_snf(a, &snf)?;
    Ok(snf)
}

fn verify_snf(a: &IntMatrix, snf: &Snf) -> Result<()> {
    let product = snf.u.mul(a).mul(&snf.v);
    if product != snf.d {
        return Err(Error::Internal("SNF re-multiplication failed".into()));
    }
    for i in 0..snf.d.nrows() {
        for j in 0..snf.d.ncols() {
            if i != j && !snf.d[(i, j)].is_zero() {
                return Err(Error::Internal("SNF result not diagonal".into()));
            }
        }
    }
    let divisors: Vec<_> = (0..snf.d.nrows().min(snf.d.ncols()))
        .map(|i| snf.d[(i, i)].clone())
        .collect();
    for w in divisors.windows(2) {
        if w[0].is_negative() || (!w[0].is_zero() && !(&w[1] % &w[0]).is_zero()) {
            return Err(Error::Internal("SNF divisibility chain violated".into()));
        }
        if w[0].is_zero() && !w[1].is_zero() {
            return Err(Error::Internal("SNF zero divisor precedes nonzero".into()));
        }
    }
    if !snf.u.det().abs().is_one() || !snf.v.det().abs().is_one() {
        return Err(Error::Internal("SNF transform not unimodular".into()));
    }
    Ok(())
}

/// Nearest-integer division, which keeps SNF entries small.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of the right kernel `{x : A x = 0}`, as a list of vectors.
pub fn kernel(a: &IntMatrix) -> Result<Vec<Vec<BigInt>>> {
    let snf = smith_normal_form(a)?;
    let rank = snf.rank();
    let mut basis = Vec::new();
    for j in rank..a.ncols() {
        let col: Vec<BigInt> = (0..a.ncols()).map(|i| snf.v[(i, j)].clone()).collect();
        basis.push(col);
    }
    // sanity: each basis vector really is annihilated
    for b in &basis {
        for i in 0..a.nrows() {
            let s: BigInt = (0..a.ncols()).map(|j| &a[(i, j)] * &b[j]).sum();
            if !s.is_zero() {
                return Err(Error::Internal("kernel vector fails A x = 0".into()));
            }
        }
    }
    Ok(basis)
}

/// `[sat(L) : L]` for the sublattice `L` of `Z^m` spanned by `basis`: the
/// product of the nonzero elementary divisors, which equals the order of the
/// torsion subgroup of `Z^m / L`. An empty basis gives 1.
pub fn saturation_index(basis: &[Vec<BigInt>], ambient: usize) -> Result<BigInt> {
    if basis.is_empty() {
        return Ok(BigInt::one());
    }
    assert!(basis.iter().all(|v| v.len() == ambient));
    let snf = smith_normal_form(&IntMatrix::from_rows(basis.to_vec()))?;
    Ok(snf
        .elementary_divisors()
        .iter()
        .product())
}
