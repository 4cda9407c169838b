//! Built-in catalog manifests, one per ground field.

use hopfcyc_core::catalog::{
    broken_translation_module, conjugation_module, evaluation_trace, function_algebra, group_algebra, sweedler_h4,
    taft_cyclotomic, translation_module, trivial, GroupPresentation, ModuleAlgebraExample,
};
use hopfcyc_core::charmap::ModuleAlgebra;
use hopfcyc_core::exactla::{Field, Scalar, TensorMap};
use hopfcyc_core::hopf::{HopfAlgebra, ModularPair};

use crate::manifest::{AlgebraEntry, Manifest, ModuleEntry, PairEntry, RMatrixEntry, TraceEntry};

fn push_algebra(m: &mut Manifest, name: &str, h: &HopfAlgebra, characters: Vec<(String, TensorMap)>) {
    m.algebras.push(AlgebraEntry { name: name.into(), data: h.data().clone(), characters });
}

fn push_pair(m: &mut Manifest, algebra: &str, name: &str, delta: TensorMap, sigma: TensorMap) {
    m.pairs.push(PairEntry { name: name.into(), algebra: algebra.into(), delta, sigma });
}

fn push_trivial_pair(m: &mut Manifest, algebra: &str, h: &HopfAlgebra) {
    let p = ModularPair::trivial(h);
    push_pair(m, algebra, "eps_one", p.delta, p.sigma);
}

fn push_module(m: &mut Manifest, name: &str, algebra: &str, ma: &ModuleAlgebra) {
    m.module_algebras.push(ModuleEntry {
        name: name.into(),
        algebra: algebra.into(),
        basis_labels: ma.basis_labels.clone(),
        mult: ma.mult.clone(),
        unit: ma.unit.column(0).to_vec(),
        action: ma.action.clone(),
    });
}

fn push_trace(m: &mut Manifest, module: &str, name: &str, pair: &str, tau: Vec<(usize, Scalar)>) {
    m.traces.push(TraceEntry { name: name.into(), module_algebra: module.into(), pair: Some(pair.into()), tau });
}

fn push_example(m: &mut Manifest, name: &str, algebra: &str, ex: &ModuleAlgebraExample, trace: &str, pair: &str) {
    push_module(m, name, algebra, &ex.algebra);
    push_trace(m, name, trace, pair, ex.trace.clone());
}

/// A character `g ↦ ±1` of a group algebra, from a sign table.
fn sign_character(h: &HopfAlgebra, signs: &[i64]) -> TensorMap {
    let coords: Vec<(usize, Scalar)> = signs.iter().enumerate().map(|(i, s)| (i, Scalar::from_int(*s))).collect();
    h.covector(&coords).expect("indices in range")
}

/// Objects over ℚ.
pub fn rationals() -> Manifest {
    let q = Field::rationals();
    let mut m = Manifest::new(q.clone());

    let t = trivial(q.clone());
    push_algebra(&mut m, "trivial", &t, vec![]);
    push_trivial_pair(&mut m, "trivial", &t);

    let z2g = GroupPresentation::cyclic(2);
    let (z2, _) = group_algebra(&z2g, q.clone()).expect("Z/2");
    push_algebra(&mut m, "Z2", &z2, vec![("sign".into(), sign_character(&z2, &[1, -1]))]);
    push_trivial_pair(&mut m, "Z2", &z2);
    push_pair(&mut m, "Z2", "eps_g", z2.counit.clone(), z2.basis_vector(1));

    let z3g = GroupPresentation::cyclic(3);
    let (z3, _) = group_algebra(&z3g, q.clone()).expect("Z/3");
    push_algebra(&mut m, "Z3", &z3, vec![]);
    push_trivial_pair(&mut m, "Z3", &z3);

    let s3g = GroupPresentation::symmetric3();
    let (s3, _) = group_algebra(&s3g, q.clone()).expect("S3");
    // permutations in lexicographic order
    let parity = sign_character(&s3, &[1, -1, -1, 1, 1, -1]);
    push_algebra(&mut m, "S3", &s3, vec![("sign".into(), parity)]);
    push_trivial_pair(&mut m, "S3", &s3);

    for (name, g) in [("F_Z2", &z2g), ("F_Z3", &z3g), ("F_S3", &s3g)] {
        let f = function_algebra(g, q.clone()).expect("function algebra");
        push_algebra(&mut m, name, &f, vec![]);
        push_trivial_pair(&mut m, name, &f);
    }

    let h4 = sweedler_h4(q.clone()).expect("H4");
    let minus = h4.hopf.covector(&[(0, Scalar::one()), (1, Scalar::from_int(-1))]).expect("in range");
    push_algebra(&mut m, "H4", &h4.hopf, vec![("delta_sign".into(), minus.clone())]);
    push_trivial_pair(&mut m, "H4", &h4.hopf);
    push_pair(&mut m, "H4", "eps_g", h4.hopf.counit.clone(), h4.g.clone());
    push_pair(&mut m, "H4", "sign_one", minus, h4.hopf.unit.clone());
    for lambda in [0, 1] {
        m.r_matrices.push(RMatrixEntry {
            name: format!("R{lambda}"),
            algebra: "H4".into(),
            r: h4.r_matrix(&Scalar::from_int(lambda)),
        });
    }

    let ground = ModuleAlgebra::ground_field(h4.hopf.clone());
    push_module(&mut m, "ground_H4", "H4", &ground);
    push_trace(&mut m, "ground_H4", "unit", "eps_g", vec![(0, Scalar::one())]);

    let tr = translation_module(3, q.clone()).expect("translation module");
    push_example(&mut m, "translation", "Z3", &tr, "haar", "eps_one");
    push_trace(&mut m, "translation", "evaluation", "eps_one", evaluation_trace());
    let broken = broken_translation_module(3, q.clone()).expect("broken module");
    push_example(&mut m, "broken_translation", "Z3", &broken, "haar", "eps_one");
    let conj = conjugation_module(q).expect("conjugation module");
    push_example(&mut m, "conjugation", "Z2", &conj, "tr_u", "eps_g");
    m
}

/// Objects over ℚ(ζ₃).
pub fn cyclotomic3() -> Manifest {
    let taft3 = taft_cyclotomic(3).expect("Taft(3)");
    let f = taft3.hopf.field.clone();
    let mut m = Manifest::new(f.clone());

    let (z3, _) = group_algebra(&GroupPresentation::cyclic(3), f.clone()).expect("Z/3");
    let z = f.generator_element().expect("extension");
    let chars = (1..3)
        .map(|k| {
            let coords: Vec<(usize, Scalar)> = (0..3).map(|a| (a, f.pow(&z, (k * a) as u64))).collect();
            (format!("chi{k}"), z3.covector(&coords).expect("in range"))
        })
        .collect();
    push_algebra(&mut m, "Z3_zeta3", &z3, chars);
    push_trivial_pair(&mut m, "Z3_zeta3", &z3);

    let chars = (0..3).map(|k| (format!("delta{k}"), taft3.character(k))).collect();
    push_algebra(&mut m, "taft3", &taft3.hopf, chars);
    push_trivial_pair(&mut m, "taft3", &taft3.hopf);
    for p in taft3.search_modular_pairs() {
        let name = format!("sigma{}_delta{}", p.sigma_power, p.delta_power);
        push_pair(&mut m, "taft3", &name, p.pair.delta, p.pair.sigma);
    }
    m
}

/// All built-in manifests with the file stems used by `export-catalog`.
pub fn all() -> Vec<(&'static str, Manifest)> {
    vec![("rationals", rationals()), ("cyclotomic3", cyclotomic3())]
}
