//! One line per acceptance criterion. Runs without the test harness so the
//! lines always appear in the output; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::dense_cyclic::DenseModule;
use common::{catalog, compose_tensor_agreement, rank_kernel_agreement};
use hopfcyc_core::catalog::{evaluation_trace, sweedler_h4, taft_cyclotomic, translation_module, trivial};
use hopfcyc_core::charmap::{is_delta_invariant, is_sigma_trace, sigma_trace_space, verify_characteristic_map};
use hopfcyc_core::cyclic::{verify_cocyclic, Bicomplex, CocyclicModule};
use hopfcyc_core::exactla::{Field, Scalar};
use hopfcyc_core::hopf::{
    check_quasitriangular, check_twisted_antipode_properties, double_cover, drinfeld_element, is_modular_pair_in_involution,
    validate_hopf, ModularPair,
};
use hopfcyc_core::report::Witness;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn axiom_suite() -> Outcome {
    let mut checked = 0;
    for e in catalog::all() {
        if !validate_hopf(e.hopf.data()).unwrap().all_passed() {
            return outcome(false, format!("{} fails validate_hopf", e.name));
        }
        for c in &e.characters {
            if !check_twisted_antipode_properties(&e.hopf, c).unwrap().all_passed() {
                return outcome(false, format!("{} fails a twisted antipode identity", e.name));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} (algebra, character) combinations"))
}

fn theorem_three() -> Outcome {
    let h4 = sweedler_h4(Field::rationals()).unwrap();
    let pair = ModularPair::new(&h4.hopf, h4.hopf.counit.clone(), h4.g.clone()).unwrap();
    let m = CocyclicModule::new(h4.hopf, pair).unwrap();
    let r = verify_cocyclic(&m, 4).unwrap();
    if !r.all_passed() || !r.passed("cyclic_order[n=4]") {
        return outcome(false, format!("H4: {:?}", r.failures().next()));
    }
    let taft = taft_cyclotomic(3).unwrap();
    let Some(p) = taft.search_modular_pairs().into_iter().next() else {
        return outcome(false, "no Taft(3) pair found");
    };
    let (sp, dp) = (p.sigma_power, p.delta_power);
    let tm = CocyclicModule::new(taft.hopf, p.pair).unwrap();
    let tr = verify_cocyclic(&tm, 3).unwrap();
    outcome(
        tr.all_passed() && tm.level_dim(3) == Some(729),
        format!("H4 (ε,g) ≤4: {} checks; Taft(3) (σ=g^{sp}, δ(g)=ζ^{dp}) ≤3: {} checks", r.len(), tr.len()),
    )
}

fn necessity_control() -> Outcome {
    let h4 = sweedler_h4(Field::rationals()).unwrap();
    let m = CocyclicModule::new_unchecked(h4.hopf.clone(), ModularPair::trivial(&h4.hopf));
    let r = verify_cocyclic(&m, 1).unwrap();
    let c = r.get("cyclic_order[n=1]").unwrap();
    match &c.witness {
        Some(Witness::Basis(idx)) if !c.passed => {
            outcome(true, format!("τ₁² ≠ I at basis {}", h4.hopf.basis_labels[idx[0]]))
        }
        _ => outcome(false, "τ₁² = I or no witness"),
    }
}

fn bicomplex_identities() -> Outcome {
    let mut count = 0;
    for e in catalog::all() {
        for (name, pair) in &e.pairs {
            let m = CocyclicModule::new(e.hopf.clone(), pair.clone()).unwrap();
            if let Err(err) = Bicomplex::new(&m, 4) {
                return outcome(false, format!("{} {name}: {err}", e.name));
            }
            count += 1;
        }
    }
    outcome(true, format!("{count} pairs, levels ≤ 4"))
}

fn cohomology_sanity() -> Outcome {
    let t = trivial(Field::rationals());
    let tpair = ModularPair::trivial(&t);
    let tm = CocyclicModule::new(t.clone(), tpair.clone()).unwrap();
    let hc = tm.cohomology_dims(2).unwrap().cyclic();
    let (_, oracle_hc) = DenseModule::new(&t, &tpair).cohomology(2);
    if hc != [1, 0, 1] || oracle_hc != hc {
        return outcome(false, format!("trivial HC {hc:?}, oracle {oracle_hc:?}"));
    }
    for e in catalog::all() {
        for (name, pair) in e.pairs.iter().filter(|(_, p)| p.sigma == e.hopf.unit) {
            let m = CocyclicModule::new(e.hopf.clone(), pair.clone()).unwrap();
            if m.cohomology_dims(0).unwrap().hochschild() != [1] {
                return outcome(false, format!("HH⁰ ≠ 1 for {} {name}", e.name));
            }
        }
    }
    let h4 = sweedler_h4(Field::rationals()).unwrap();
    let pair = ModularPair::new(&h4.hopf, h4.hopf.counit.clone(), h4.g.clone()).unwrap();
    let m = CocyclicModule::new(h4.hopf.clone(), pair.clone()).unwrap();
    let table = m.cohomology_dims(3).unwrap();
    let (hh, hc) = DenseModule::new(&h4.hopf, &pair).cohomology(3);
    let golden = table.hochschild() == [0, 1, 0, 1] && table.cyclic() == [0, 1, 0, 2];
    outcome(
        golden && hh == table.hochschild() && hc == table.cyclic(),
        format!("trivial HC (1,0,1); HH⁰ = 1 for σ = 1; H4 (ε,g) HH {hh:?} HC {hc:?} match dense oracle"),
    )
}

fn section_four_pipeline() -> Outcome {
    let h4 = sweedler_h4(Field::rationals()).unwrap();
    for lambda in [0, 1] {
        let r = h4.r_matrix(&Scalar::from_int(lambda));
        if !check_quasitriangular(&h4.hopf, &r).unwrap().report.all_passed() {
            return outcome(false, format!("R_{lambda} not quasitriangular"));
        }
        let d = drinfeld_element(&h4.hopf, &r).unwrap();
        let identities = ["counit", "antipode_squared_is_conjugation", "comult"];
        if !identities.iter().all(|n| d.report.passed(n)) {
            return outcome(false, format!("Drinfeld identities fail for R_{lambda}"));
        }
        let dc = double_cover(&h4.hopf, &r).unwrap();
        let ok = dc.report.all_passed()
            && dc.hopf.dim == 8
            && validate_hopf(dc.hopf.data()).unwrap().all_passed()
            && is_modular_pair_in_involution(&dc.hopf, &dc.pair).all_passed();
        if !ok {
            return outcome(false, format!("double cover fails for R_{lambda}"));
        }
    }
    outcome(true, "R₀, R₁: Drinfeld identities, 8-dim double cover, (ε, θ⁻¹u) in involution")
}

fn proposition_two() -> Outcome {
    let ex = translation_module(3, Field::rationals()).unwrap();
    let (ma, pair, tau) = (&ex.algebra, &ex.pair, &ex.trace);
    let conditions = is_sigma_trace(ma, pair, tau).unwrap().passed && is_delta_invariant(ma, pair, tau).unwrap().passed;
    let space = sigma_trace_space(ma, pair);
    let rescaled = |v: &Vec<(usize, Scalar)>| v.len() == tau.len() && v.iter().all(|(_, s)| *s == v[0].1);
    let contains = space.iter().any(rescaled);
    let r = verify_characteristic_map(ma, pair, tau, 3).unwrap();
    let ev = is_delta_invariant(ma, pair, &evaluation_trace()).unwrap();
    let witness = matches!(ev.witness, Some(Witness::Basis(ref idx)) if idx.len() == 3);
    outcome(
        conditions && contains && r.all_passed() && !ev.passed && witness,
        format!("{} intertwining checks through level 3; evaluation trace witness {:?}", r.len(), ev.witness),
    )
}

fn oracle_equivalence() -> Outcome {
    let rk = rank_kernel_agreement(1000, 20240601);
    let ct = compose_tensor_agreement(500, 20240602);
    outcome(rk == 1000 && ct == 500, format!("rank/kernel {rk}/1000, compose+tensor {ct}/500"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("axiom suite", axiom_suite, Duration::from_secs(10)),
        ("cocyclic identities", theorem_three, Duration::from_secs(300)),
        ("involution necessity", necessity_control, Duration::from_secs(1)),
        ("bicomplex identities", bicomplex_identities, Duration::MAX),
        ("cohomology sanity", cohomology_sanity, Duration::MAX),
        ("quasitriangular pipeline", section_four_pipeline, Duration::from_secs(30)),
        ("characteristic map", proposition_two, Duration::from_secs(60)),
        ("oracle equivalence", oracle_equivalence, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = o.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget = if limit == Duration::MAX { String::new() } else { format!(" / {} s", limit.as_secs()) };
        let late = if in_time { "" } else { " [over time budget]" };
        println!(
            "{} {name}: {} ({:.2} s{budget}){late}",
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {}/{} criteria passed", 8 - failed, 8);
    if failed > 0 {
        std::process::exit(1);
    }
}
