//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! The process exits non-zero when any criterion's outcome differs from the
//! recorded expectation. Criterion 2 is recorded as failing: the shipped G₂
//! tables disagree with the stated G₂ matrices in three cells, and no choice of
//! extension reconciles them (see `g2_sign_flip_trades_table_match_for_p_mismatch`
//! in the core pipeline tests).

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use charsheaf::disconnected::{coset_model, model_suite, sp4_2_model, ModelName};
use charsheaf::exactfield::parse_poly;
use charsheaf::lusztigcore::{
    build_omega, factorization_residual, load_case, run_case, solve_block_factorization, LusztigResult, Verdict,
};
use charsheaf::weylgroups::{f_classes, generate_weyl, RootDatum};
use charsheaf::{Poly, QuadRational, RatFunc};
use charsheaf_cli::report::{emit, Format};
use charsheaf_cli::verify::{run_named, verify_all, RunConfig, EXIT_MISMATCH, EXIT_PASS};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn poly(src: &str, d: u32) -> Poly {
    parse_poly(src, d).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(name: &str) -> Result<(LusztigResult, Duration), String> {
    let start = Instant::now();
    let bundle = load_case(&data_dir().join(format!("{name}.json"))).map_err(|e| e.to_string())?;
    let r = run_case(&bundle).map_err(|e| e.to_string())?;
    Ok((r, start.elapsed()))
}

fn cells(v: &Option<Verdict>) -> (usize, usize) {
    v.as_ref().map_or((0, 0), |v| (v.matched(), v.compared))
}

fn all_cells_failing(r: &LusztigResult) -> Vec<String> {
    let mut out: Vec<String> =
        r.verdict.mismatches.iter().map(|m| format!("X {} / {}", m.row_label, m.col_label)).collect();
    for (name, v) in [("Omega", &r.omega_check), ("P", &r.p_check), ("Lambda", &r.lambda_check)] {
        for m in v.iter().flat_map(|v| &v.mismatches) {
            out.push(format!("{name} {} / {}", m.row_label, m.col_label));
        }
    }
    out
}

fn lambda_diag_is(r: &LusztigResult, expected: &[Poly]) -> bool {
    r.lambda_is_diagonal()
        && expected.iter().enumerate().all(|(i, e)| *r.lambda.get(i, i) == RatFunc::from_poly(e.clone()))
}

fn criterion_1() -> Outcome {
    let (r, t) = match timed("b2") {
        Ok(x) => x,
        Err(e) => return outcome(false, e),
    };
    let stated = [&r.omega_check, &r.p_check, &r.lambda_check].iter().all(|v| v.as_ref().is_some_and(Verdict::passes));
    let full = stated && r.verdict.passes() && r.verdict.compared == 12 && t < Duration::from_secs(1);
    outcome(
        full,
        format!(
            "Omega {:?}, P {:?}, Lambda {:?}, X {}/{} cells, {} ms",
            cells(&r.omega_check),
            cells(&r.p_check),
            cells(&r.lambda_check),
            r.verdict.matched(),
            r.verdict.compared,
            t.as_millis()
        ),
    )
}

fn criterion_2() -> Outcome {
    let (r, t) = match timed("g2") {
        Ok(x) => x,
        Err(e) => return outcome(false, e),
    };
    let p1 = poly("(q^4-1)(q^4-q^2+1)", 3);
    let lambda_ok = lambda_diag_is(&r, &[Poly::one(3), p1.clone(), p1.shift(2), p1.shift(4)]);
    let stated = [&r.omega_check, &r.p_check, &r.lambda_check].iter().all(|v| v.as_ref().is_some_and(Verdict::passes));
    let pass = lambda_ok && stated && r.verdict.passes() && r.verdict.compared == 28 && t < Duration::from_secs(1);
    let failing = all_cells_failing(&r);
    outcome(
        pass,
        format!(
            "Lambda = diag(1, p1, q^2p1, q^4p1): {lambda_ok}, X {}/{} cells, {} ms, disagreements: [{}]",
            r.verdict.matched(),
            r.verdict.compared,
            t.as_millis(),
            failing.join("; ")
        ),
    )
}

fn criterion_3() -> Outcome {
    let (r, t) = match timed("f4") {
        Ok(x) => x,
        Err(e) => return outcome(false, e),
    };
    let d = 2;
    let f1 = poly("(q^2-1)(q^2+1)^2(q^4+1)(q^4-q^2+1)(q^8-q^4+1)", d);
    let f2 = poly("(q^4-1)(q^4+1)^2(q^4-q^2+1)(q^8-q^4+1)", d);
    let f3 = poly("(q^2-1)^2(q^2+1)^2(q^4+1)^2(q^4-q^2+1)(q^8-q^4+1)", d);
    let lambda = [
        Poly::one(d),
        f1.clone(),
        f2.shift(4),
        f1.shift(10),
        f3.shift(8),
        f3.shift(10),
        f3.shift(12),
        f3.shift(12),
        f3.shift(16),
        f3.shift(18),
        f3.shift(20),
    ];
    let lambda_ok = lambda_diag_is(&r, &lambda);
    let p = r.p_check.as_ref();
    let p_ok = p.is_some_and(|v| v.passes() && v.skipped == [(0, 1), (0, 9), (1, 8)] && v.compared == 118);
    let pass = lambda_ok
        && p_ok
        && r.residual_zero
        && r.verdict.passes()
        && r.verdict.compared == 209
        && t < Duration::from_secs(10);
    outcome(
        pass,
        format!(
            "X {}/{} cells, Lambda stated list {lambda_ok}, P {:?} with {} defective cells skipped, residual zero {}, {} ms",
            r.verdict.matched(),
            r.verdict.compared,
            cells(&r.p_check),
            p.map_or(0, |v| v.skipped.len()),
            r.residual_zero,
            t.as_millis()
        ),
    )
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn criterion_4() -> Outcome {
    let f4 = [
        "(q^2-1)^2",
        "q^4-1",
        "(q^2-1)(q^2-sqrt2*q+1)",
        "(q^2-1)(q^2+sqrt2*q+1)",
        "q^4+1",
        "(q^2-sqrt2*q+1)^2",
        "(q^2+sqrt2*q+1)^2",
        "(q^2+1)^2",
        "q^4-q^2+1",
        "q^4-sqrt2*q^3+q^2-sqrt2*q+1",
        "q^4+sqrt2*q^3+q^2+sqrt2*q+1",
    ];
    let cases: [(&str, RootDatum, u32, Vec<&str>); 3] = [
        ("b2", RootDatum::b2(), 2, vec!["q^2-1", "q^2-sqrt2*q+1", "q^2+sqrt2*q+1"]),
        ("g2", RootDatum::g2(), 3, vec!["q^2-1", "q^2+1", "q^2-sqrt3*q+1", "q^2+sqrt3*q+1"]),
        ("f4", RootDatum::f4(), 2, f4.to_vec()),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, datum, d, listed) in cases {
        let w = generate_weyl(&datum).unwrap();
        let classes = f_classes(&datum, &w).unwrap();
        let computed = sorted(classes.iter().map(|c| c.torus_order.to_string()).collect());
        let listed = sorted(listed.iter().map(|s| poly(s, d).to_string()).collect());
        let mut distinct = computed.clone();
        distinct.dedup();
        // the pipeline's column matching is then a bijection
        let r = run_case(&load_case(&data_dir().join(format!("{name}.json"))).unwrap()).unwrap();
        let matched = sorted(r.columns.iter().map(|c| c.torus_order.to_string()).collect());
        let ok = computed == listed && distinct.len() == computed.len() && matched == listed;
        pass &= ok;
        detail.push(format!("{name} {}/{}", if ok { computed.len() } else { 0 }, listed.len()));
    }
    outcome(pass, detail.join(", "))
}

fn criterion_5() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for name in ["b2", "g2", "f4"] {
        let r = run_case(&load_case(&data_dir().join(format!("{name}.json"))).unwrap()).unwrap();
        let brute: Vec<usize> = r.columns.iter().map(|c| c.size).collect();
        let ok = r.orthogonality.passes() && r.sizes_from_columns.as_deref() == Some(&brute[..]);
        pass &= ok;
        detail.push(format!("{name} sizes {brute:?}"));
        if name == "f4" {
            pass &= brute[0] == 72;
        }
    }
    outcome(pass, detail.join("; "))
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, n) in [("b2", 4), ("g2", 6), ("f4", 24)] {
        let r = run_case(&load_case(&data_dir().join(format!("{name}.json"))).unwrap()).unwrap();
        let d = r.d;
        let last = r.x.rows() - 1;
        let trivial = r.x.row(last).iter().all(|c| *c == RatFunc::one(d));
        let sign = r.x.row(0);
        let sign_ok = sign[0] == RatFunc::from_poly(Poly::one(d).shift(n)) && sign[1..].iter().all(RatFunc::is_zero);
        pass &= trivial && sign_ok;
        detail.push(format!("{name} trivial {trivial}, sign q^{n} {sign_ok}"));
    }
    outcome(pass, detail.join("; "))
}

fn criterion_7() -> Outcome {
    let two_each = ModelName::ALL.iter().all(|&m| coset_model(m).len() >= 2);
    let reports = model_suite(&ModelName::ALL);
    let models_ok = reports.iter().all(|r| r.passes());
    let (sp_ok, sp_detail) = match sp4_2_model() {
        Ok((_, s)) => (
            s.passes()
                && s.group_order == 720
                && s.fixed_subgroup_order == 20
                && s.fixed_class_count == 5
                && s.extension_order == 1440
                && s.outer_coset_class_count == 5,
            format!(
                "Sp4(2) order {}, fixed {} with {} classes, {} outer-coset classes in order {}",
                s.group_order, s.fixed_subgroup_order, s.fixed_class_count, s.outer_coset_class_count, s.extension_order
            ),
        ),
        Err(e) => (false, e.to_string()),
    };
    outcome(
        two_each && models_ok && sp_ok,
        format!("{} coset models pass: {models_ok}; {sp_detail}", reports.len()),
    )
}

fn criterion_8() -> Outcome {
    let (Ok(a), Ok(b)) = (run_named("b2", &data_dir()), run_named("b2-disconnected", &data_dir())) else {
        return outcome(false, "could not run");
    };
    let same = a.omega == b.omega && a.p == b.p && a.lambda == b.lambda && a.x == b.x;
    let relabeled = a.column_labels != b.column_labels && a.column_labels.len() == b.column_labels.len();
    outcome(
        same && relabeled && b.passes() && !b.conjectural && b.verdict.compared == 12,
        format!("identical Omega, P, Lambda, X: {same}; columns {}", b.column_labels.join(", ")),
    )
}

fn criterion_9() -> Outcome {
    let (Ok(a), Ok(b)) = (run_named("f4", &data_dir()), run_named("f4-disconnected", &data_dir())) else {
        return outcome(false, "could not run");
    };
    let mut text = Vec::new();
    emit(&b, Format::Text, &mut text).unwrap();
    let text = String::from_utf8(text).unwrap();
    let flagged = b.conjectural && text.contains("X (CONJECTURAL)");
    outcome(
        flagged && a.x == b.x && b.passes(),
        format!("flagged CONJECTURAL {flagged}, X equal to connected F4 {}", a.x == b.x),
    )
}

fn quad(d: u32) -> impl Strategy<Value = QuadRational> {
    (-9i64..10, 1i64..5, -9i64..10, 1i64..5).prop_map(move |(a, b, c, e)| {
        &QuadRational::from_fraction(a, b, d) + &(&QuadRational::from_fraction(c, e, d) * &QuadRational::sqrt_d(d))
    })
}

fn ratfunc(d: u32) -> impl Strategy<Value = RatFunc> {
    let poly = move || prop::collection::vec(quad(d), 1..=2).prop_map(move |c| Poly::from_coeffs(c, d).unwrap());
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, m)| RatFunc::new(n, m).unwrap())
}

fn field_axioms() -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: 10_000, failure_persistence: None, ..Config::default() });
    let triple = prop::sample::select(vec![1u32, 2, 3]).prop_flat_map(|d| (quad(d), quad(d), quad(d)));
    runner
        .run(&triple, |(a, b, c)| {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            Ok(())
        })
        .map_err(|e| format!("quadratic field: {e}"))?;
    let triple = prop::sample::select(vec![1u32, 2, 3]).prop_flat_map(|d| (ratfunc(d), ratfunc(d), ratfunc(d)));
    runner
        .run(&triple, |(a, b, c)| {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RatFunc::one(a.d()));
            }
            Ok(())
        })
        .map_err(|e| format!("rational functions: {e}"))
}

fn permutation_uniqueness() -> bool {
    let b = load_case(&data_dir().join("f4.json")).unwrap();
    let omega = build_omega(&b).unwrap();
    let ids = b.block_ids();
    let (p0, l0) = solve_block_factorization(&omega, &ids).unwrap();
    let mut perm: Vec<usize> = (0..ids.len()).collect();
    let mut start = 0;
    while start < ids.len() {
        let end = (start..ids.len()).find(|&k| ids[k] != ids[start]).unwrap_or(ids.len());
        perm[start..end].reverse();
        start = end;
    }
    let (p1, l1) = solve_block_factorization(&omega.permute_symmetric(&perm), &ids).unwrap();
    perm != (0..ids.len()).collect::<Vec<_>>() && p1 == p0.permute_symmetric(&perm) && l1 == l0.permute_symmetric(&perm)
}

fn verify_b2_in(dir: &Path) -> i32 {
    let mut config = RunConfig::verify_defaults(dir.to_path_buf());
    config.case_names = vec!["b2".into()];
    verify_all(&config, &mut Vec::new()).unwrap()
}

fn fault_injection() -> bool {
    let dir = tempfile::tempdir().unwrap();
    for name in ["b2", "g2", "f4"] {
        std::fs::copy(data_dir().join(format!("{name}.json")), dir.path().join(format!("{name}.json"))).unwrap();
    }
    let pristine = verify_b2_in(dir.path());
    let path = dir.path().join("b2.json");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["target_table"]["rows"][1][1] = serde_json::json!([["0/1", "0/1"], ["1/1", "0/1"]]);
    std::fs::write(&path, v.to_string()).unwrap();
    let perturbed = verify_b2_in(dir.path());
    pristine == EXIT_PASS && perturbed == EXIT_MISMATCH
}

fn criterion_10() -> Outcome {
    let axioms = field_axioms();
    let residuals = ["b2", "g2", "f4"].iter().all(|name| {
        let r = run_case(&load_case(&data_dir().join(format!("{name}.json"))).unwrap()).unwrap();
        factorization_residual(&r.p, &r.lambda, &r.omega).unwrap().is_zero()
    });
    let uniqueness = permutation_uniqueness();
    let faults = fault_injection();
    outcome(
        axioms.is_ok() && residuals && uniqueness && faults,
        format!(
            "field axioms on 10^4 instances: {}, residuals zero {residuals}, permutation uniqueness {uniqueness}, fault injection flips exit 0 -> 1 {faults}",
            axioms.as_ref().map_or_else(|e| e.clone(), |_| "ok".to_string())
        ),
    )
}

/// Cells of the G₂ run that disagree with the shipped tables, as recorded.
const G2_RECORDED: [&str; 3] = ["X R_θ̃'' / u1", "X R_θ̃'' / u4", "Omega (u4,1) / (u4,1)"];

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check); 10] = [
        ("B2 pipeline", criterion_1),
        ("G2 pipeline", criterion_2),
        ("F4 pipeline", criterion_3),
        ("torus orders", criterion_4),
        ("coset orthogonality", criterion_5),
        ("structure sanity", criterion_6),
        ("model suite", criterion_7),
        ("disconnected B2", criterion_8),
        ("disconnected F4", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut results = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!("criterion {:>2} {} {name}: {}", k + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push(o);
    }
    let passed = results.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed}/10 criteria pass");

    // criterion 2 is expected red with exactly the recorded disagreements
    let g2_as_recorded = !results[1].pass && {
        let r = run_case(&load_case(&data_dir().join("g2.json")).unwrap()).unwrap();
        all_cells_failing(&r) == G2_RECORDED && r.p_check.as_ref().is_some_and(Verdict::passes)
    };
    let others_green = results.iter().enumerate().all(|(k, o)| k == 1 || o.pass);
    if g2_as_recorded {
        println!("criterion  2 fails exactly as recorded: {}", G2_RECORDED.join("; "));
    }
    if !(others_green && g2_as_recorded) {
        println!("acceptance outcome differs from the recorded expectation");
        std::process::exit(1);
    }
}
