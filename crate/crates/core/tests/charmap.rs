mod common;

use common::{q, Q};
use hopfcyc_core::catalog::{
    broken_translation_module, conjugation_module, evaluation_trace, haar_trace, translation_module,
};
use hopfcyc_core::charmap::{
    characteristic_cochain, sigma_trace_space, validate_action, verify_characteristic_map, verify_characteristic_map_with,
    CyclicConvention, TraceCandidate,
};
use hopfcyc_core::exactla::{Field, Scalar};
use hopfcyc_core::report::Witness;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `Σ_h f⁰(h) f¹(h + i₁) ⋯ fⁿ(h + iₙ)` for functions on ℤ/3.
fn translation_oracle(fs: &[Vec<i64>], shifts: &[usize]) -> Q {
    let mut total = Q::zero();
    for h in 0..3 {
        let mut p = q(fs[0][h]);
        for (f, s) in fs[1..].iter().zip(shifts) {
            p *= q(f[(h + s) % 3]);
        }
        total += p;
    }
    total
}

#[test]
fn gamma_matches_translation_formula() {
    let ex = translation_module(3, Field::rationals()).unwrap();
    let h = &ex.algebra.hopf;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=2usize {
        for c in 0..3usize.pow(n as u32) {
            let shifts: Vec<usize> = (0..n).map(|k| (c / 3usize.pow((n - 1 - k) as u32)) % 3).collect();
            let elem = shifts.iter().skip(1).fold(h.basis_vector(shifts[0]), |acc, &s| acc.tensor(&h.basis_vector(s)).unwrap());
            let phi = characteristic_cochain(&ex.algebra, &ex.pair, &ex.trace, &elem).unwrap();
            for _ in 0..10 {
                let fs: Vec<Vec<i64>> = (0..=n).map(|_| (0..3).map(|_| rng.gen_range(-3..=3)).collect()).collect();
                // evaluate φ on f⁰ ⊗ ⋯ ⊗ fⁿ
                let mut value = Q::zero();
                for (_, col, s) in phi.triplets() {
                    let mut p = s.as_rational().unwrap();
                    for (k, f) in fs.iter().enumerate() {
                        p *= q(f[(col / 3usize.pow((n - k) as u32)) % 3]);
                    }
                    value += p;
                }
                assert_eq!(value, translation_oracle(&fs, &shifts), "n = {n}, shifts {shifts:?}");
            }
        }
    }
}

#[test]
fn translation_module_intertwines_through_level_3() {
    let ex = translation_module(3, Field::rationals()).unwrap();
    let r = verify_characteristic_map(&ex.algebra, &ex.pair, &haar_trace(3), 3).unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(r.passed("cyclic[n=3]") && r.passed("face[n=3,i=3]") && r.passed("degeneracy[n=3,i=3]"));
}

#[test]
fn evaluation_trace_breaks_cyclic_compatibility() {
    let ex = translation_module(3, Field::rationals()).unwrap();
    let cand = TraceCandidate::evaluate(&ex.algebra, &ex.pair, evaluation_trace()).unwrap();
    assert!(cand.sigma_trace);
    assert!(!cand.delta_invariant);
    assert_eq!(cand.delta_invariance_witness.as_ref().map(Vec::len), Some(3));
    let r = verify_characteristic_map(&ex.algebra, &ex.pair, &evaluation_trace(), 2).unwrap();
    let c = r.get("cyclic[n=1]").unwrap();
    assert!(!c.passed);
    assert!(matches!(c.witness, Some(Witness::Basis(ref idx)) if idx.len() == 1));
}

#[test]
fn haar_sum_spans_the_trace_space() {
    for n in 2..=4 {
        let ex = translation_module(n, Field::rationals()).unwrap();
        let space = sigma_trace_space(&ex.algebra, &ex.pair);
        assert_eq!(space.len(), 1, "ℤ/{n}");
        let haar = haar_trace(n);
        let c = &space[0][0].1;
        let scaled: Vec<(usize, Scalar)> = haar.iter().map(|(i, _)| (*i, c.clone())).collect();
        assert_eq!(space[0], scaled);
    }
}

#[test]
fn broken_action_still_computes() {
    let ex = broken_translation_module(3, Field::rationals()).unwrap();
    assert!(!validate_action(&ex.algebra).all_passed());
    let space = sigma_trace_space(&ex.algebra, &ex.pair);
    assert!(space.len() <= 3);
    let r = verify_characteristic_map(&ex.algebra, &ex.pair, &ex.trace, 1).unwrap();
    assert!(!r.all_passed());
}

#[test]
fn conjugation_module_under_both_conventions() {
    let ex = conjugation_module(Field::rationals()).unwrap();
    assert!(validate_action(&ex.algebra).all_passed());
    let plain = verify_characteristic_map(&ex.algebra, &ex.pair, &ex.trace, 2).unwrap();
    assert!(plain.all_passed());
    let twisted = verify_characteristic_map_with(&ex.algebra, &ex.pair, &ex.trace, 2, CyclicConvention::SigmaRotation).unwrap();
    assert!(twisted.passed("cyclic[n=0]"));
    assert!(!twisted.passed("cyclic[n=1]"));
    assert!(twisted.failures().all(|c| c.name.starts_with("cyclic[")));
}
