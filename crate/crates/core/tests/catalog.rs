mod common;

use common::catalog;
use hopfcyc_core::catalog::{
    function_algebra, function_algebra_via_dual, group_algebra, sweedler_h4, taft, taft_cyclotomic, GroupPresentation,
};
use hopfcyc_core::cyclic::{verify_cocyclic, CocyclicModule};
use hopfcyc_core::exactla::{Field, Scalar};
use hopfcyc_core::hopf::{
    check_twisted_antipode_properties, dual, is_character, is_modular_pair_in_involution, validate_hopf, ModularPair,
};

#[test]
fn every_algebra_validates_with_twisted_properties() {
    for e in catalog::all() {
        assert!(validate_hopf(e.hopf.data()).unwrap().all_passed(), "{}", e.name);
        for (k, c) in e.characters.iter().enumerate() {
            assert!(is_character(&e.hopf, c).unwrap().all_passed(), "{} character {k}", e.name);
            let r = check_twisted_antipode_properties(&e.hopf, c).unwrap();
            assert!(r.all_passed(), "{} character {k}: {r:?}", e.name);
        }
        for (name, p) in &e.pairs {
            assert!(is_modular_pair_in_involution(&e.hopf, p).all_passed(), "{} {name}", e.name);
        }
    }
}

#[test]
fn group_and_function_algebras() {
    let q = Field::rationals();
    for g in [GroupPresentation::cyclic(2), GroupPresentation::cyclic(3), GroupPresentation::symmetric3()] {
        let (kg, pair) = group_algebra(&g, q.clone()).unwrap();
        assert_eq!(kg.dim, g.order());
        assert!(kg.is_cocommutative());
        assert!(pair.in_involution);
        let fg = function_algebra(&g, q.clone()).unwrap();
        assert!(fg.is_commutative());
        assert_eq!(fg, function_algebra_via_dual(&g, q.clone()).unwrap());
        let back = dual(&fg).unwrap();
        assert_eq!((back.mult.clone(), back.comult.clone(), back.antipode.clone()), (kg.mult.clone(), kg.comult.clone(), kg.antipode.clone()));
    }
    let s3 = GroupPresentation::symmetric3();
    let (ks3, _) = group_algebra(&s3, q.clone()).unwrap();
    assert_eq!(ks3.dim, 6);
    assert!(!ks3.is_commutative());
    let fs3 = function_algebra(&s3, q.clone()).unwrap();
    assert!(fs3.is_commutative() && !fs3.is_cocommutative());
    let fz2 = function_algebra(&GroupPresentation::cyclic(2), q).unwrap();
    assert!(fz2.mult.matrix().triplets().all(|(r, c, _)| c == r * 2 + r));
}

#[test]
fn sweedler_h4_facts() {
    let h4 = sweedler_h4(Field::rationals()).unwrap();
    let h = &h4.hopf;
    assert_eq!(h.basis_labels, ["1", "g", "x", "gx"]);
    assert!(!h.is_commutative() && !h.is_cocommutative());
    assert!(ModularPair::new(h, h.counit.clone(), h4.g.clone()).unwrap().in_involution);
    assert!(!ModularPair::trivial(h).in_involution);
    let s2 = h.antipode.compose(&h.antipode).unwrap();
    assert_eq!(h.apply(&s2, &h.basis_vector(2)), h.basis_vector(2).neg());
    // S²(h) = g h g⁻¹ as maps
    assert_eq!(s2, h.conjugation_op(&h4.g, &h4.g));
}

#[test]
fn taft_two_is_sweedler() {
    let q = Field::rationals();
    let t2 = taft(2, Scalar::from_int(-1), q.clone()).unwrap();
    assert_eq!(t2.hopf, sweedler_h4(q.clone()).unwrap().hopf);
    assert!(taft(2, Scalar::one(), q).is_err());
}

#[test]
fn taft_three() {
    let t = taft_cyclotomic(3).unwrap();
    assert_eq!(t.hopf.dim, 9);
    assert!(validate_hopf(t.hopf.data()).unwrap().all_passed());
    let s2 = t.hopf.antipode.compose(&t.hopf.antipode).unwrap();
    assert_ne!(s2, t.hopf.id(1));
    let pairs = t.search_modular_pairs();
    assert!(!pairs.is_empty());
    // The grid has 9 candidates; every returned pair is confirmed independently.
    assert!(pairs.len() <= 9);
    for p in &pairs {
        assert!(is_modular_pair_in_involution(&t.hopf, &p.pair).all_passed());
    }
}

#[test]
fn taft_three_pairs_are_cocyclic() {
    let t = taft_cyclotomic(3).unwrap();
    for p in t.search_modular_pairs() {
        let m = CocyclicModule::new(t.hopf.clone(), p.pair).unwrap();
        let r = verify_cocyclic(&m, 3).unwrap();
        assert!(r.all_passed(), "σ = g^{}, δ(g) = ζ^{}", p.sigma_power, p.delta_power);
    }
}
