//! Cross-module flows: the lattice invariants feeding the coprimality
//! arithmetic, mod-p reductions agreeing with torsion orders, and the
//! Sweedler construction built out of the radical data.

use hopfcheck_core::exactnum::Cyclotomic;
use hopfcheck_core::field::Field;
use hopfcheck_core::hopfcore::{inner_faithful, verify_module_algebra, ActionBackend, HopfAction};
use hopfcheck_core::latgroup::{Bicharacter, MultElement};
use hopfcheck_core::qalg::{cyclotomic_algebra, QElement, Variant};
use hopfcheck_core::redmodp::{coprime_to_factorial, prime_search, tuple_order_mod, SearchMode};
use num_bigint::BigInt;

#[test]
fn minus_one_plane_hypotheses_fail_at_dimension_two() {
    // the parameter point of k_(-1)[x, y] has component group of order 2,
    // which shares a factor with 2!: the coprimality hypothesis fails, and
    // indeed an 8-dimensional semisimple action exists at these parameters
    // in the literature, so the checker must stay silent rather than claim
    // anything
    let q = Bicharacter::quantum_plane(&MultElement::root_of_unity(2, 1, 0)).unwrap();
    let ell = q.component_group_order().unwrap();
    assert_eq!(ell, BigInt::from(2));
    assert!(!coprime_to_factorial(&ell, 2).unwrap());
    // while at d = 1 it holds
    assert!(coprime_to_factorial(&ell, 1).unwrap());
}

#[test]
fn torsion_parameters_reduce_with_the_component_group_order() {
    // for an all-torsion bicharacter the tuple order after reduction at any
    // good prime equals l, and the PI degree data stays consistent
    let q = Bicharacter::quantum_plane(&MultElement::root_of_unity(3, 1, 0)).unwrap();
    let ell = q.component_group_order().unwrap();
    assert_eq!(ell, BigInt::from(3));
    let pi = q.torsion_pi_degree().unwrap();
    assert_eq!(pi.degree, BigInt::from(3));

    let tuple: Vec<MultElement> = q.upper_entries().into_iter().cloned().collect();
    let out = prime_search(&tuple, &[], 2, 60, SearchMode::Universal).unwrap();
    assert!(out.estimate.primes_examined > 0);
    for rep in &out.reports {
        assert_eq!(BigInt::from(rep.tuple_order), ell);
        // order 3 is odd, so every examined prime is good for r = 2
        assert!(rep.coprime_to_r);
    }
    assert_eq!(out.estimate.good_count, out.estimate.primes_examined);

    // a single reduction in detail
    let rep = tuple_order_mod(&tuple, &[], 7, 0, 2).unwrap();
    assert_eq!(rep.tuple_order, 3);
}

#[test]
fn sweedler_data_from_the_radical_builds_a_working_action() {
    // ord(q) = 5: z = x^5 comes out of the radical lattice, commutes with
    // the generators, and the induced action verifies and is inner faithful
    let bichar = Bicharacter::quantum_plane(&MultElement::root_of_unity(5, 1, 0)).unwrap();
    let algebra = cyclotomic_algebra(bichar, Variant::Polynomial).unwrap();
    let z_exps = algebra.sweedler_central_odd().unwrap();
    assert_eq!(z_exps, vec![5, 0]);
    let z = QElement::monomial(&algebra, z_exps, algebra.scalars().one());
    for j in 0..2 {
        let xj = QElement::generator(&algebra, j);
        assert_eq!(z.mul(&xj).unwrap(), xj.mul(&z).unwrap());
    }

    let hopf = hopfcheck_core::hopfcore::sweedler(hopfcheck_core::exactnum::CycField);
    let mut images = Vec::new();
    for m in 0..4 {
        let mut row = Vec::new();
        for j in 0..2 {
            let xj = QElement::generator(&algebra, j);
            row.push(match m {
                0 => xj,
                1 => xj.neg(),
                _ => z.mul(&xj).unwrap(),
            });
        }
        images.push(row);
    }
    let action = HopfAction::new(hopf, algebra, ActionBackend::GeneratorImages { images }).unwrap();
    assert!(verify_module_algebra(&action, 6).unwrap().passed());
    let report = inner_faithful(&action, 6).unwrap();
    assert!(report.faithful);

    // the coefficient field really contains a primitive fifth root
    let q_val = action.algebra.eval(action.algebra.bicharacter().entry(0, 1));
    let (_, c) = q_val.terms().iter().next().unwrap();
    let f = hopfcheck_core::exactnum::CycField;
    assert!(f.is_one(&f.pow_i64(c, 5).unwrap()));
    assert!(!f.is_one(c));
    let _: Cyclotomic = c.clone();
}
