//! Exact coefficient arithmetic: rationals, cyclotomic fields `Q(zeta_N)`,
//! prime fields `F_p`, and finite extensions `F_p[t]/(f)`.

pub mod cyclotomic;
pub mod finite;
pub mod poly;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by `num-rational`.
pub type Rational = num_rational::BigRational;

pub use cyclotomic::{cyclo_reduce, cyclotomic_polynomial, euler_phi, zeta, CycField, Cyclotomic};
pub use finite::{
    cyclo_reduce_mod_p, factor_cyclotomic_mod_p, factor_u64, is_prime_u64, primes_up_to,
    FiniteFieldElem, FqCtx,
};
pub use poly::Poly;
