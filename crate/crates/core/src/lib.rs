//! Exact-arithmetic building blocks for quantum polynomial algebras and the
//! finite-dimensional Hopf actions on them.
//!
//! The crate is organized around the objects it computes with:
//! - [`exactnum`]: rationals, cyclotomic fields `Q(zeta_N)`, prime fields and
//!   their extensions `F_p[t]/(f)`, with reductions from characteristic zero.
//! - [`latgroup`]: integer-lattice algorithms (Smith normal form, saturation,
//!   kernels) and the bicharacter invariants built on them: the component
//!   group order `l = |G_q/G_q^0|`, the radical, and nondegeneracy.
//! - [`qalg`]: normal-form arithmetic in `k_q[x_1..x_n]` and the quantum
//!   torus, centrality of monomials, PI degrees, and central odd elements
//!   for Sweedler-type actions.
//! - [`hopfcore`]: finite-dimensional Hopf algebras by structure constants,
//!   axiom and module-algebra verification, inner faithfulness,
//!   semisimplicity via integrals.
//! - [`redmodp`]: reduction of multiplicative parameters modulo primes,
//!   orders of reduced tuples, and empirical prime-density searches.
//! - [`sklyanin`]: the Hesse cubic group law and translation-point orders,
//!   and graded linear algebra in three-dimensional Sklyanin algebras.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to use from multiple threads.

pub mod error;
pub mod exactnum;
pub mod field;
pub mod hopfcore;
pub mod latgroup;
pub mod linalg;
pub mod qalg;
pub mod redmodp;
pub mod sklyanin;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, FiniteFieldElem, Rational};
pub use latgroup::{Bicharacter, IntMatrix, MultElement};
pub use qalg::{QAlgebra, QElement, Variant};
