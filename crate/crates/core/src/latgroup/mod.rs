//! The multiplicative-relation lattice of a bicharacter and its invariants:
//! the component group order `l = |G_q/G_q^0|` of the Zariski closure of
//! `<q>`, the radical, and nondegeneracy.
//!
//! Values in `k^x` are kept formal: a root-of-unity part times integer powers
//! of declared free generators. Multiplicative independence of the free
//! generators is DECLARED by the caller, not verified (it is undecidable for
//! arbitrary algebraic inputs); every invariant computed here is conditional
//! on that declaration. For purely torsion inputs no declaration is involved
//! and the results are unconditional.

pub mod intmat;

pub use intmat::{kernel, saturation_index, smith_normal_form, IntMatrix, Snf};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// A formal element of `k^x`: `zeta_N^a * g_1^(e_1) * ... * g_k^(e_k)` with
/// the `g_i` declared multiplicatively independent. Normalized so that
/// `gcd(a, N) = 1` (the conductor is the exact torsion order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultElement {
    conductor: u64,
    torsion_exp: u64,
    free: Vec<i64>,
}

impl MultElement {
    pub fn new(conductor: u64, torsion_exp: i64, free: Vec<i64>) -> Self {
        assert!(conductor >= 1);
        let a = torsion_exp.rem_euclid(conductor as i64) as u64;
        let g = gcd_u64(a, conductor);
        MultElement {
            conductor: conductor / g,
            torsion_exp: if a == 0 { 0 } else { a / g },
            free,
        }
    }

    pub fn one(nfree: usize) -> Self {
        MultElement {
            conductor: 1,
            torsion_exp: 0,
            free: vec![0; nfree],
        }
    }

    /// `zeta_N^a` with no free part.
    pub fn root_of_unity(conductor: u64, exp: i64, nfree: usize) -> Self {
        Self::new(conductor, exp, vec![0; nfree])
    }

    /// A single free generator.
    pub fn free_generator(index: usize, nfree: usize) -> Self {
        let mut free = vec![0; nfree];
        free[index] = 1;
        MultElement {
            conductor: 1,
            torsion_exp: 0,
            free,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn torsion_exp(&self) -> u64 {
        self.torsion_exp
    }

    pub fn free_exponents(&self) -> &[i64] {
        &self.free
    }

    pub fn nfree(&self) -> usize {
        self.free.len()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.free.iter().all(|&e| e == 0)
    }

    pub fn has_free_part(&self) -> bool {
        self.free.iter().any(|&e| e != 0)
    }

    /// Order of the torsion part (the conductor, by normalization).
    pub fn torsion_order(&self) -> u64 {
        self.conductor
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.free.len(), other.free.len(), "mismatched free bases");
        let l = self.conductor.lcm(&other.conductor);
        let a = (self.torsion_exp as i64) * ((l / self.conductor) as i64)
            + (other.torsion_exp as i64) * ((l / other.conductor) as i64);
        let free = self
            .free
            .iter()
            .zip(&other.free)
            .map(|(x, y)| x + y)
            .collect();
        Self::new(l, a, free)
    }

    pub fn inv(&self) -> Self {
        Self::new(
            self.conductor,
            -(self.torsion_exp as i64),
            self.free.iter().map(|&e| -e).collect(),
        )
    }

    pub fn pow(&self, k: i64) -> Self {
        let a = (self.torsion_exp as i128 * k as i128)
            .rem_euclid(self.conductor as i128) as i64;
        Self::new(
            self.conductor,
            a,
            self.free.iter().map(|&e| e * k).collect(),
        )
    }

    /// Torsion exponent lifted to a common conductor `n` (a multiple of this
    /// element's conductor).
    pub fn torsion_exp_at(&self, n: u64) -> u64 {
        debug_assert_eq!(n % self.conductor, 0);
        self.torsion_exp * (n / self.conductor)
    }
}

impl fmt::Display for MultElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.conductor > 1 {
            if self.torsion_exp == 1 {
                parts.push(format!("zeta{}", self.conductor));
            } else {
                parts.push(format!("zeta{}^{}", self.conductor, self.torsion_exp));
            }
        }
        for (i, &e) in self.free.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("g{i}")),
                _ => parts.push(format!("g{i}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    crate::exactnum::finite::gcd_u64(a, b)
}

/// A skew-symmetric bicharacter on `Z^n` with values in `k^x`, given by the
/// matrix `q_ij = q(e_i, e_j)` of formal multiplicative elements, with
/// `q_ii = 1` and `q_ij q_ji = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    n: usize,
    free_names: Vec<String>,
    entries: Vec<MultElement>,
}

impl Bicharacter {
    pub fn new(n: usize, free_names: Vec<String>, entries: Vec<MultElement>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidBicharacter(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let nfree = free_names.len();
        if entries.iter().any(|e| e.nfree() != nfree) {
            return Err(Error::InvalidBicharacter(
                "entry free-exponent vectors do not match the declared generators".into(),
            ));
        }
        let q = Bicharacter {
            n,
            free_names,
            entries,
        };
        for i in 0..n {
            if !q.entry(i, i).is_one() {
                return Err(Error::InvalidBicharacter(format!("q_{}{} != 1", i + 1, i + 1)));
            }
            for j in 0..n {
                if !q.entry(i, j).mul(q.entry(j, i)).is_one() {
                    return Err(Error::InvalidBicharacter(format!(
                        "q_{}{} * q_{}{} != 1",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(q)
    }

    /// Build from the strictly-upper-triangular entries `q_ij`, `i < j`,
    /// filling in `q_ji = q_ij^(-1)`.
    pub fn from_upper(n: usize, free_names: Vec<String>, upper: Vec<MultElement>) -> Result<Self> {
        let m = n * (n - 1) / 2;
        if upper.len() != m {
            return Err(Error::InvalidBicharacter(format!(
                "expected {m} upper entries, got {}",
                upper.len()
            )));
        }
        let nfree = free_names.len();
        let mut entries = vec![MultElement::one(nfree); n * n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let e = it.next().unwrap();
                entries[j * n + i] = e.inv();
                entries[i * n + j] = e;
            }
        }
        Self::new(n, free_names, entries)
    }

    /// `q_ij = q^(m_ij)` for an antisymmetric integer matrix.
    pub fn from_powers(q: &MultElement, m: &[Vec<i64>]) -> Result<Self> {
        let n = m.len();
        if m.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidBicharacter("exponent matrix not square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if m[i][j] != -m[j][i] {
                    return Err(Error::InvalidBicharacter(
                        "exponent matrix not antisymmetric".into(),
                    ));
                }
            }
        }
        let names = (0..q.nfree()).map(|i| format!("g{i}")).collect();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| q.pow(m[i][j]))
            .collect();
        Self::new(n, names, entries)
    }

    /// The quantum plane bicharacter: `n = 2`, `q_12 = q`.
    pub fn quantum_plane(q: &MultElement) -> Result<Self> {
        Self::from_powers(q, &[vec![0, 1], vec![-1, 0]])
    }

    /// `q_ij = q^(sign(j - i))`.
    pub fn sign_matrix(q: &MultElement, n: usize) -> Result<Self> {
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (j as i64 - i as i64).signum()).collect())
            .collect();
        Self::from_powers(q, &m)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn free_names(&self) -> &[String] {
        &self.free_names
    }

    pub fn nfree(&self) -> usize {
        self.free_names.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultElement {
        &self.entries[i * self.n + j]
    }

    /// lcm of the entry conductors.
    pub fn conductor(&self) -> u64 {
        self.entries
            .iter()
            .fold(1u64, |acc, e| acc.lcm(&e.conductor()))
    }

    /// The strictly-upper entries in row-major pair order `(i, j)`, `i < j`.
    pub fn upper_entries(&self) -> Vec<&MultElement> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(self.entry(i, j));
            }
        }
        out
    }

    pub fn is_torsion(&self) -> bool {
        self.entries.iter().all(|e| !e.has_free_part())
    }

    /// `prod_j q_ij^(m_j)` for each `i`; `m` is central iff all are 1.
    pub fn pairing_row(&self, i: usize, m: &[i64]) -> MultElement {
        assert_eq!(m.len(), self.n);
        let mut acc = MultElement::one(self.nfree());
        for (j, &e) in m.iter().enumerate() {
            if e != 0 {
                acc = acc.mul(&self.entry(i, j).pow(e));
            }
        }
        acc
    }

    /// Membership in the radical lattice, by re-verifying the defining
    /// equations `prod_j q_ij^(m_j) = 1` for every `i`.
    pub fn is_radical_exponent(&self, m: &[i64]) -> bool {
        (0..self.n).all(|i| self.pairing_row(i, m).is_one())
    }

    /// Order of the component group `G_q/G_q^0`: the torsion order of
    /// `Z^m / g^perp` for `g = (q_ij)_(i<j)` in the torus of dimension
    /// `m = n(n-1)/2`, where `g^perp` is the lattice of characters killing
    /// `g`.
    pub fn component_group_order(&self) -> Result<BigInt> {
        let pairs = self.upper_entries();
        let m = pairs.len();
        if m == 0 {
            return Ok(BigInt::one());
        }
        let nfree = self.nfree();
        let big_n = self.conductor();

        // Lattice of characters annihilating the free parts.
        let free_basis: Vec<Vec<BigInt>> = if nfree == 0 {
            (0..m)
                .map(|t| {
                    (0..m)
                        .map(|k| if k == t { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect()
        } else {
            // rows: one per free generator; chi with F chi = 0
            let f = IntMatrix::from_rows(
                (0..nfree)
                    .map(|c| {
                        pairs
                            .iter()
                            .map(|e| BigInt::from(e.free_exponents()[c]))
                            .collect()
                    })
                    .collect(),
            );
            kernel(&f)?
        };
        if free_basis.is_empty() {
            // g^perp = 0, so Z^m / g^perp = Z^m is free.
            return Ok(BigInt::one());
        }
        let gperp = if big_n == 1 {
            free_basis
        } else {
            // Within the free kernel, impose sum chi_k a_k = 0 mod N.
            let c: Vec<BigInt> = free_basis
                .iter()
                .map(|b| {
                    b.iter()
                        .zip(&pairs)
                        .map(|(x, e)| x * BigInt::from(e.torsion_exp_at(big_n)))
                        .sum()
                })
                .collect();
            let s = free_basis.len();
            let mut row: Vec<BigInt> = c;
            row.push(BigInt::from(big_n));
            let congruence = IntMatrix::from_rows(vec![row]);
            let ker = kernel(&congruence)?;
            // project away the auxiliary coordinate and map back to Z^m
            ker.iter()
                .map(|y| {
                    let mut v = vec![BigInt::zero(); m];
                    for (t, b) in free_basis.iter().enumerate().take(s) {
                        for (k, slot) in v.iter_mut().enumerate() {
                            *slot += &y[t] * &b[k];
                        }
                    }
                    v
                })
                .collect()
        };
        saturation_index(&gperp, m)
    }

    /// Basis of the radical `{a in Z^n : prod_j q_ij^(a_j) = 1 for all i}`.
    /// The bicharacter is nondegenerate iff this is empty.
    pub fn radical(&self) -> Result<Vec<Vec<BigInt>>> {
        let n = self.n;
        let nfree = self.nfree();
        let big_n = self.conductor();

        // Conditions from the free parts: for each i and free generator c,
        // sum_j a_j * free_c(q_ij) = 0.
        let free_kernel: Vec<Vec<BigInt>> = if nfree == 0 {
            (0..n)
                .map(|t| {
                    (0..n)
                        .map(|k| if k == t { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect()
        } else {
            let mut rows = Vec::with_capacity(n * nfree);
            for i in 0..n {
                for c in 0..nfree {
                    rows.push(
                        (0..n)
                            .map(|j| BigInt::from(self.entry(i, j).free_exponents()[c]))
                            .collect(),
                    );
                }
            }
            kernel(&IntMatrix::from_rows(rows))?
        };
        if free_kernel.is_empty() || big_n == 1 {
            let out = free_kernel;
            self.verify_radical(&out)?;
            return Ok(out);
        }

        // Torsion congruences: T a = 0 mod N where T_ij is the lifted
        // torsion exponent. Restricted to the free kernel via a = B^T y.
        let s = free_kernel.len();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row: Vec<BigInt> = (0..s)
                .map(|t| {
                    (0..n)
                        .map(|j| {
                            BigInt::from(self.entry(i, j).torsion_exp_at(big_n))
                                * &free_kernel[t][j]
                        })
                        .sum()
                })
                .collect();
            // auxiliary columns for the mod-N conditions
            for k in 0..n {
                row.push(if k == i {
                    BigInt::from(big_n)
                } else {
                    BigInt::zero()
                });
            }
            rows.push(row);
        }
        let ker = kernel(&IntMatrix::from_rows(rows))?;
        let out: Vec<Vec<BigInt>> = ker
            .iter()
            .map(|yw| {
                let mut v = vec![BigInt::zero(); n];
                for (t, b) in free_kernel.iter().enumerate().take(s) {
                    for (k, slot) in v.iter_mut().enumerate() {
                        *slot += &yw[t] * &b[k];
                    }
                }
                v
            })
            .collect();
        self.verify_radical(&out)?;
        Ok(out)
    }

    fn verify_radical(&self, basis: &[Vec<BigInt>]) -> Result<()> {
        for v in basis {
            let m: Option<Vec<i64>> = v.iter().map(i64::try_from).map(|r| r.ok()).collect();
            if let Some(m) = m {
                if !self.is_radical_exponent(&m) {
                    return Err(Error::Internal(
                        "radical basis vector fails the defining equations".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Nondegenerate iff the radical is `{0}`.
    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(self.radical()?.is_empty())
    }

    /// For an all-torsion bicharacter with entry orders of lcm `N`, the PI
    /// degree `sqrt(N^n / |rad_N|)` of `k_q[x_1..x_n]` together with the
    /// upper bound `N^n`, where `rad_N = {a in (Z/N)^n : prod_j q_ij^(a_j)
    /// = 1 for all i}`.
    pub fn torsion_pi_degree(&self) -> Result<PiDegree> {
        for (idx, e) in self.entries.iter().enumerate() {
            if e.has_free_part() {
                return Err(Error::NotTorsion(format!(
                    "q_{}{}",
                    idx / self.n + 1,
                    idx % self.n + 1
                )));
            }
        }
        let n = self.n;
        let big_n = self.conductor();
        let t = IntMatrix::from_rows(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigInt::from(self.entry(i, j).torsion_exp_at(big_n)))
                        .collect()
                })
                .collect(),
        );
        let snf = smith_normal_form(&t)?;
        let nbig = BigInt::from(big_n);
        let mut rad_size = BigInt::one();
        for i in 0..n {
            let d = snf.d[(i, i)].clone();
            rad_size *= if d.is_zero() { nbig.clone() } else { d.gcd(&nbig) };
        }
        let bound = nbig.pow(n as u32);
        let (square, rem) = bound.div_rem(&rad_size);
        if !rem.is_zero() {
            return Err(Error::Internal("|rad_N| does not divide N^n".into()));
        }
        let degree = square.sqrt();
        if &degree * &degree != square {
            return Err(Error::Internal("PI degree square is not a square".into()));
        }
        Ok(PiDegree {
            degree,
            bound,
            rad_size,
            order: big_n,
        })
    }
}

/// PI-degree data for an all-torsion bicharacter: the degree itself, the
/// bound `N^n` it divides, the size of the mod-N radical, and `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiDegree {
    pub degree: BigInt,
    pub bound: BigInt,
    pub rad_size: BigInt,
    pub order: u64,
}
