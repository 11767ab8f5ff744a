//! Reduction of multiplicative parameters modulo primes: instantiating
//! formal tuples as cyclotomic numbers, computing the orders of their
//! reductions at the primes of `Q(zeta_N)` (one "character" per irreducible
//! factor of `Phi_N` mod `p`), and sampling how often those orders are
//! coprime to a given `r`.
//!
//! Density here is the natural-density proxy (good primes up to the bound
//! over primes examined); the asymptotic statement it approximates is about
//! Dirichlet density.

use crate::error::{Error, Result};
use crate::exactnum::cyclotomic::{zeta, CycField, Cyclotomic};
use crate::exactnum::finite::{
    factor_cyclotomic_mod_p, factor_u64, gcd_u64, primes_up_to, reduce_into, FqCtx,
};
use crate::field::Field;
use crate::latgroup::MultElement;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use std::sync::Arc;

/// One reduction event: a prime, a character (root choice), the orders of
/// the reduced entries, and their lcm.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReductionReport {
    pub p: u64,
    pub character_index: usize,
    pub residue_degree: usize,
    pub entry_orders: Vec<u64>,
    pub tuple_order: u64,
    pub r: u64,
    pub coprime_to_r: bool,
}

/// Whether a prime counts as good when some character works or only when
/// all of them do.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Existential,
    Universal,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DensityEstimate {
    pub bound: u64,
    pub primes_examined: u64,
    pub good_count: u64,
    pub fraction: f64,
    pub mode: SearchMode,
    pub good_existential: u64,
    pub good_universal: u64,
    pub skipped_bad: u64,
}

/// Evaluate a formal multiplicative element, with the declared free
/// generators instantiated by concrete nonzero cyclotomic values.
pub fn instantiate(e: &MultElement, values: &[Option<Cyclotomic>]) -> Result<Cyclotomic> {
    let f = CycField;
    let mut acc = zeta(e.conductor(), e.torsion_exp() as i64);
    for (i, &exp) in e.free_exponents().iter().enumerate() {
        if exp == 0 {
            continue;
        }
        let v = values
            .get(i)
            .and_then(|o| o.as_ref())
            .ok_or_else(|| Error::UninstantiatedFreeGenerator(format!("g{i}")))?;
        let pow = f
            .pow_i64(v, exp)
            .ok_or_else(|| Error::Parse(format!("free generator g{i} instantiated to zero")))?;
        acc = f.mul(&acc, &pow);
    }
    if acc.is_zero() {
        return Err(Error::Parse("tuple entry instantiates to zero".into()));
    }
    Ok(acc)
}

/// The cyclotomic field containing every entry: the lcm of their conductors.
fn common_conductor(entries: &[Cyclotomic]) -> u64 {
    entries.iter().fold(1u64, |acc, e| acc.lcm(&e.conductor()))
}

/// The number of characters (irreducible factors of `Phi_N` mod `p`)
/// available at `p`, after instantiation.
pub fn character_count(g: &[MultElement], values: &[Option<Cyclotomic>], p: u64) -> Result<usize> {
    let entries: Vec<Cyclotomic> = g
        .iter()
        .map(|e| instantiate(e, values))
        .collect::<Result<_>>()?;
    let n = common_conductor(&entries);
    Ok(factor_cyclotomic_mod_p(n, p)?.len())
}

/// Reduce an instantiated tuple at the given prime and character and compute
/// entry orders, their lcm, and coprimality to `r`.
pub fn tuple_order_mod(
    g: &[MultElement],
    values: &[Option<Cyclotomic>],
    p: u64,
    character: usize,
    r: u64,
) -> Result<ReductionReport> {
    let entries: Vec<Cyclotomic> = g
        .iter()
        .map(|e| instantiate(e, values))
        .collect::<Result<_>>()?;
    for e in &entries {
        crate::exactnum::cyclotomic::check_good_prime(e, p)?;
    }
    let n = common_conductor(&entries);
    if n % p == 0 {
        return Err(Error::BadPrime {
            p,
            reason: format!("p divides the common conductor {n}"),
        });
    }
    let factors = factor_cyclotomic_mod_p(n, p)?;
    if character >= factors.len() {
        return Err(Error::IndexOutOfRange {
            index: character,
            count: factors.len(),
        });
    }
    let ctx: Arc<FqCtx> = FqCtx::new(p, factors[character].clone())?;
    // order overflow guard: p^deg must fit in u64
    ctx.order()?;
    let mut entry_orders = Vec::with_capacity(entries.len());
    for e in &entries {
        let reduced = reduce_into(&e.embed(n), &ctx)?;
        if reduced.is_zero() {
            return Err(Error::BadPrime {
                p,
                reason: "an entry reduces to zero".into(),
            });
        }
        entry_orders.push(reduced.mult_order()?);
    }
    let tuple_order = entry_orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
    Ok(ReductionReport {
        p,
        character_index: character,
        residue_degree: ctx.deg,
        entry_orders,
        tuple_order,
        r,
        coprime_to_r: gcd_u64(tuple_order, r) == 1,
    })
}

/// Outcome of a prime sweep: every reduction report in `(p, character)`
/// order, the good `(p, character)` pairs, and the density estimate.
#[derive(Clone, Debug)]
pub struct PrimeSearchOutcome {
    pub reports: Vec<ReductionReport>,
    pub good: Vec<(u64, usize)>,
    pub estimate: DensityEstimate,
}

/// Sweep all primes up to `bound` (skipping bad ones) and all characters at
/// each; a prime is good when some character (existential mode) or every
/// character (universal mode) yields a tuple order coprime to `r`.
pub fn prime_search(
    g: &[MultElement],
    values: &[Option<Cyclotomic>],
    r: u64,
    bound: u64,
    mode: SearchMode,
) -> Result<PrimeSearchOutcome> {
    // fail fast on uninstantiated generators, independent of any prime
    for e in g {
        instantiate(e, values)?;
    }
    let mut reports = Vec::new();
    let mut good = Vec::new();
    let mut examined = 0u64;
    let mut skipped = 0u64;
    let mut good_existential = 0u64;
    let mut good_universal = 0u64;
    for p in primes_up_to(bound) {
        let nchars = match character_count(g, values, p) {
            Ok(c) => c,
            Err(Error::BadPrime { .. }) | Err(Error::DeskScale(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let mut per_prime = Vec::with_capacity(nchars);
        let mut bad = false;
        for character in 0..nchars {
            match tuple_order_mod(g, values, p, character, r) {
                Ok(rep) => per_prime.push(rep),
                Err(Error::BadPrime { .. }) | Err(Error::DeskScale(_)) => {
                    bad = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if bad || per_prime.is_empty() {
            skipped += 1;
            continue;
        }
        examined += 1;
        let any = per_prime.iter().any(|rep| rep.coprime_to_r);
        let all = per_prime.iter().all(|rep| rep.coprime_to_r);
        if any {
            good_existential += 1;
        }
        if all {
            good_universal += 1;
        }
        let counts_as_good = match mode {
            SearchMode::Existential => any,
            SearchMode::Universal => all,
        };
        if counts_as_good {
            for rep in &per_prime {
                if rep.coprime_to_r {
                    good.push((p, rep.character_index));
                }
            }
        }
        reports.extend(per_prime);
    }
    let good_count = match mode {
        SearchMode::Existential => good_existential,
        SearchMode::Universal => good_universal,
    };
    let fraction = if examined == 0 {
        0.0
    } else {
        good_count as f64 / examined as f64
    };
    Ok(PrimeSearchOutcome {
        reports,
        good,
        estimate: DensityEstimate {
            bound,
            primes_examined: examined,
            good_count,
            fraction,
            mode,
            good_existential,
            good_universal,
            skipped_bad: skipped,
        },
    })
}

/// `gcd(l, d!) = 1`, decided without computing `d!`: every prime factor of
/// `l` must exceed `d`.
pub fn coprime_to_factorial(l: &BigInt, d: u64) -> Result<bool> {
    if l < &BigInt::one() {
        return Err(Error::Parse("component group order must be positive".into()));
    }
    if l.is_one() {
        return Ok(true);
    }
    if let Ok(small) = u64::try_from(l) {
        return Ok(factor_u64(small).keys().all(|&q| q > d));
    }
    if d > 10_000_000 {
        return Err(Error::DeskScale(
            "coprimality check with d > 10^7 on an oversized order".into(),
        ));
    }
    for q in primes_up_to(d) {
        if (l % BigInt::from(q)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn value_of(n: i64) -> Option<Cyclotomic> {
        Some(Cyclotomic::from_rational(Rational::from_integer(n.into())))
    }

    #[test]
    fn order_of_two_mod_seven() {
        let g = vec![MultElement::free_generator(0, 1)];
        let values = vec![value_of(2)];
        let rep = tuple_order_mod(&g, &values, 7, 0, 2).unwrap();
        assert_eq!(rep.tuple_order, 3);
        assert!(rep.coprime_to_r);
    }

    #[test]
    fn order_of_minus_one_is_two_at_odd_primes() {
        let g = vec![MultElement::root_of_unity(2, 1, 0)];
        for p in [3u64, 5, 7, 11, 101] {
            let rep = tuple_order_mod(&g, &[], p, 0, 2).unwrap();
            assert_eq!(rep.tuple_order, 2);
            assert!(!rep.coprime_to_r);
        }
        // p = 2 divides the conductor
        assert!(matches!(
            tuple_order_mod(&g, &[], 2, 0, 2),
            Err(Error::BadPrime { p: 2, .. })
        ));
    }

    #[test]
    fn componentwise_lcm() {
        let g = vec![
            MultElement::free_generator(0, 2),
            MultElement::free_generator(1, 2),
        ];
        let values = vec![value_of(2), value_of(3)];
        let rep = tuple_order_mod(&g, &values, 7, 0, 1).unwrap();
        assert_eq!(rep.entry_orders, vec![3, 6]);
        assert_eq!(rep.tuple_order, 6);
    }

    #[test]
    fn uninstantiated_free_generator_is_an_error() {
        let g = vec![MultElement::free_generator(0, 1)];
        assert!(matches!(
            tuple_order_mod(&g, &[None], 7, 0, 1),
            Err(Error::UninstantiatedFreeGenerator(_))
        ));
        assert!(matches!(
            prime_search(&g, &[None], 2, 50, SearchMode::Existential),
            Err(Error::UninstantiatedFreeGenerator(_))
        ));
    }

    #[test]
    fn tuple_order_self_check() {
        // the reported order works and no proper divisor does
        let g = vec![
            MultElement::free_generator(0, 1).mul(&MultElement::root_of_unity(4, 1, 1)),
        ];
        let values = vec![value_of(3)];
        for p in [7u64, 11, 13, 29] {
            let n_chars = character_count(&g, &values, p).unwrap();
            for c in 0..n_chars {
                let rep = tuple_order_mod(&g, &values, p, c, 1).unwrap();
                let entries: Vec<Cyclotomic> =
                    g.iter().map(|e| instantiate(e, &values).unwrap()).collect();
                let n = common_conductor(&entries);
                let factors = factor_cyclotomic_mod_p(n, p).unwrap();
                let ctx = FqCtx::new(p, factors[c].clone()).unwrap();
                for e in &entries {
                    let red = reduce_into(&e.embed(n), &ctx).unwrap();
                    assert!(red.pow(rep.tuple_order).is_one());
                }
                for &q in factor_u64(rep.tuple_order).keys() {
                    let m = rep.tuple_order / q;
                    let all_one = entries.iter().all(|e| {
                        reduce_into(&e.embed(n), &ctx).unwrap().pow(m).is_one()
                    });
                    assert!(!all_one, "divisor {m} already annihilates the tuple");
                }
            }
        }
    }

    #[test]
    fn prime_search_for_two() {
        let g = vec![MultElement::free_generator(0, 1)];
        let values = vec![value_of(2)];
        let out = prime_search(&g, &values, 2, 100, SearchMode::Existential).unwrap();
        let good_primes: Vec<u64> = out.good.iter().map(|&(p, _)| p).collect();
        assert!(good_primes.contains(&7)); // order 3
        assert!(good_primes.contains(&23)); // order 11
        assert!(out.estimate.fraction > 0.0);
        // orders re-verify by direct exponentiation
        for rep in &out.reports {
            let fp = crate::field::PrimeField::new(rep.p);
            let mut pow = 2u64 % rep.p;
            for _ in 1..rep.tuple_order {
                assert_ne!(pow, 1);
                pow = fp.mul(&pow, &(2 % rep.p));
            }
            assert_eq!(pow, 1);
        }
    }

    #[test]
    fn prime_search_for_minus_one_finds_nothing() {
        let g = vec![MultElement::root_of_unity(2, 1, 0)];
        let out = prime_search(&g, &[], 2, 100, SearchMode::Existential).unwrap();
        assert_eq!(out.estimate.good_count, 0);
        assert!(out.good.is_empty());
        assert_eq!(out.estimate.skipped_bad, 1); // p = 2
    }

    #[test]
    fn prime_search_with_r_one_marks_everything_good() {
        let g = vec![MultElement::free_generator(0, 1)];
        let values = vec![value_of(6)];
        let out = prime_search(&g, &values, 1, 60, SearchMode::Universal).unwrap();
        assert_eq!(out.estimate.good_count, out.estimate.primes_examined);
        assert_eq!(
            out.estimate.good_existential,
            out.estimate.good_universal
        );
    }

    #[test]
    fn zeta3_reduces_with_order_three_everywhere() {
        // the order of zeta_3 at any prime of good reduction is exactly 3,
        // split or not, so with r = 2 every examined prime is good
        let g = vec![MultElement::root_of_unity(3, 1, 0)];
        let out = prime_search(&g, &[], 2, 200, SearchMode::Universal).unwrap();
        assert_eq!(out.estimate.skipped_bad, 1); // p = 3
        assert_eq!(out.estimate.good_count, out.estimate.primes_examined);
        for rep in &out.reports {
            assert_eq!(rep.tuple_order, 3);
            // split primes (p = 1 mod 3) have two characters of degree 1,
            // inert ones a single character of degree 2
            if rep.p % 3 == 1 {
                assert_eq!(rep.residue_degree, 1);
            } else {
                assert_eq!(rep.residue_degree, 2);
            }
        }
    }

    #[test]
    fn torsion_tuple_keeps_its_order_at_good_primes() {
        // a root of unity of order l reduces with order exactly l
        for (n, a) in [(5u64, 1i64), (8, 3), (12, 5)] {
            let g = vec![MultElement::root_of_unity(n, a, 0)];
            let out = prime_search(&g, &[], 1, 80, SearchMode::Existential).unwrap();
            assert!(out.estimate.primes_examined > 0);
            for rep in &out.reports {
                assert_eq!(rep.tuple_order, n, "zeta_{n}^{a} at p = {}", rep.p);
            }
        }
    }

    #[test]
    fn coprimality_with_factorial() {
        assert!(coprime_to_factorial(&BigInt::from(5), 4).unwrap());
        assert!(!coprime_to_factorial(&BigInt::from(2), 2).unwrap());
        assert!(coprime_to_factorial(&BigInt::from(1), 1_000_000).unwrap());
        assert!(!coprime_to_factorial(&BigInt::from(35), 5).unwrap());
        assert!(coprime_to_factorial(&BigInt::from(143), 10).unwrap());
        assert!(!coprime_to_factorial(&BigInt::from(143), 11).unwrap());
        assert!(coprime_to_factorial(&BigInt::from(0), 3).is_err());
    }
}
