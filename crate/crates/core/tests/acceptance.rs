use std::process::ExitCode;
use std::time::Instant;

use socle_core::hodge::{self, CoefficientFormula, NamedEvaluation};
use socle_core::kdv;
use socle_core::{rat, run_suite, Bounds, CheckReport, Context, Execution, Perturbation, Rational, SuiteName};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Context) -> Outcome);

fn settle(reports: impl IntoIterator<Item = socle_core::Result<CheckReport>>) -> Outcome {
    let mut n = 0;
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        if !r.equal {
            return Err(format!("{} {:?} differs", r.identity_id, r.parameters));
        }
        n += 1;
    }
    Ok(format!("{n} checks"))
}

fn anchor(what: &str, got: Rational, want: Rational) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn criterion_1(ctx: &Context) -> Outcome {
    anchor("g=2", hodge::named_evaluation(ctx, NamedEvaluation::Theorem1, 2).unwrap(), rat(1, 2880))?;
    let g3 = Rational::new(1, 32 * 15) * rat(1, 42) / Rational::from(6);
    anchor("g=3", hodge::named_evaluation(ctx, NamedEvaluation::Theorem1, 3).unwrap(), g3)?;
    settle((2..=6).map(|g| hodge::theorem1_check(ctx, g)))
}

fn criterion_2(ctx: &Context) -> Outcome {
    let table = ctx.tau_zero_table(21);
    let d = kdv::two_point_d(20);
    let mut checks = vec![
        Ok(kdv::verify_d_pde(&d)),
        Ok(kdv::verify_f_ode(&kdv::three_point_f(20), &d)),
        kdv::table_series_check(&table, 20),
    ];
    for s in 0..=20 {
        checks.push(kdv::table_vs_closed_form(&table, s));
        checks.push(kdv::engine_vs_closed_form(ctx, s));
    }
    for n in 1..=14 {
        for len in 1..=2 {
            checks.push(Ok(kdv::brief0_check(ctx, n, len, 14)));
        }
    }
    settle(checks)
}

fn criterion_3(ctx: &Context) -> Outcome {
    let mut checks = Vec::new();
    for g in 1..=6 {
        checks.push(kdv::identity_four(ctx, g));
        checks.push(kdv::identity_five(ctx, g));
        checks.push(kdv::identity_five_via_f(g));
        for k in 1..=4 {
            checks.push(kdv::identity_dfgf(ctx, g, k));
        }
    }
    settle(checks)
}

fn criterion_4(ctx: &Context) -> Outcome {
    let g1 = hodge::g_series(ctx, 1, 24).unwrap();
    for (i, want) in [(2, rat(1, 24)), (4, rat(1, 2880)), (6, rat(1, 181440))] {
        anchor(&format!("G_1 t^{i}"), g1.coeffs()[i].clone(), want)?;
    }
    let mut checks: Vec<_> = (1..=4).map(|k| hodge::theorem2_check(ctx, k, 24)).collect();
    checks.push(hodge::corollary1_check(ctx, 24));
    checks.push(hodge::corollary2_check(ctx, 24));
    settle(checks)
}

fn criterion_5(ctx: &Context) -> Outcome {
    settle((1..=4).map(|d| hodge::prop1_check(ctx, d, 16)))
}

fn criterion_6(ctx: &Context) -> Outcome {
    let mut checks = Vec::new();
    for g in 1..=6 {
        for k in 1..=10 {
            for e in 1..=k {
                checks.push(hodge::prop2_check(ctx, g, k, e));
            }
        }
    }
    for n in 1..=12 {
        for t in -12..=12 {
            checks.push(Ok(hodge::kfgg_check(n, t)));
        }
    }
    for z in 1..=10 {
        for t in 1..=z {
            for e in 1..=10 {
                checks.push(hodge::weww_check(z, t, e));
            }
            for e in 1..=z - t {
                checks.push(hodge::pwp_check(z, e, t));
            }
        }
    }
    settle(checks)
}

fn criterion_7(ctx: &Context) -> Outcome {
    settle((0..=12).flat_map(|r| (0..=r).map(move |l| hodge::lemma1_check(ctx, r, l))))
}

fn criterion_8(ctx: &Context) -> Outcome {
    anchor("H_2", hodge::hyperelliptic_closed(ctx, 2).unwrap(), rat(1, 5760))?;
    anchor("H_3", hodge::hyperelliptic_closed(ctx, 3).unwrap(), rat(1, 161280))?;
    let mut checks: Vec<_> = (2..=12).map(|g| hodge::hyperelliptic_check(ctx, g)).collect();
    checks.extend((0..=30).map(|g| Ok(hodge::binomial_sum_check(g))));
    settle(checks)
}

fn criterion_9(ctx: &Context) -> Outcome {
    settle((1..=4).flat_map(|g| (1..=4).map(move |d| hodge::localization_check(ctx, g, d))))
}

fn criterion_10(ctx: &Context) -> Outcome {
    anchor(
        "triple lambda g=3",
        hodge::triple_lambda_via_linear(ctx, 3).unwrap(),
        rat(1, 1451520),
    )?;
    let mut checks = Vec::new();
    for g in 1..=10 {
        for which in CoefficientFormula::ALL {
            if g >= which.min_genus() {
                checks.push(hodge::coeff_formula_check(ctx, g, which));
            }
        }
        if g >= 2 {
            checks.push(hodge::triple_lambda_consistency(ctx, g));
        }
    }
    settle(checks)
}

fn criterion_11(ctx: &Context) -> Outcome {
    let mut checks = vec![Ok(hodge::b_inverse_check(20))];
    for g in 1..=6 {
        match hodge::matrix_route_check(ctx, g, 20) {
            Ok(rs) => checks.extend(rs.into_iter().map(Ok)),
            Err(e) => checks.push(Err(e)),
        }
    }
    settle(checks)
}

fn criterion_12(_: &Context) -> Outcome {
    settle((1..=8).map(hodge::polynomiality_check))
}

fn criterion_13(_: &Context) -> Outcome {
    let small = Bounds { max_g: 3, max_k: 3, max_d: 2, order: 12 };
    let seeds = [
        (SuiteName::Kdv, Perturbation::Bracket { indices: vec![0, 2, 4] }),
        (SuiteName::Theorem1, Perturbation::Bernoulli { index: 4 }),
        (SuiteName::Theorem2, Perturbation::Bernoulli { index: 4 }),
        (SuiteName::Theorem3, Perturbation::Stirling { n: 3, l: 2 }),
        (SuiteName::Prop1, Perturbation::TreeCoefficient { degree: 2 }),
        (SuiteName::Prop2, Perturbation::TreeCoefficient { degree: 2 }),
        (SuiteName::Hyperelliptic, Perturbation::Bernoulli { index: 6 }),
        (SuiteName::Localization, Perturbation::Bernoulli { index: 2 }),
        (SuiteName::Coefficients, Perturbation::Bernoulli { index: 4 }),
        (SuiteName::All, Perturbation::Bernoulli { index: 4 }),
    ];
    for (suite, seed) in &seeds {
        let suite = *suite;
        let clean = run_suite(suite, &small, &Context::new(), Execution::Parallel).map_err(|e| e.to_string())?;
        if let Some(r) = clean.iter().find(|r| !r.equal) {
            return Err(format!("{suite}: unperturbed run failed {}", r.identity_id));
        }
        let bad = Context::perturbed(seed.clone());
        let reports = run_suite(suite, &small, &bad, Execution::Parallel).map_err(|e| e.to_string())?;
        if reports.iter().all(|r| r.equal) {
            return Err(format!("{suite}: perturbation {seed:?} went unnoticed"));
        }
    }
    Ok(format!("{} seeded perturbations flagged", seeds.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("theorem 1 triple agreement, g = 2..6", criterion_1),
        ("D and F closed forms, tables, KdV coefficient equation", criterion_2),
        ("identities four, five and dfgf, g <= 6", criterion_3),
        ("theorem 2 series, k = 1..4 at order 24, corollaries", criterion_4),
        ("proposition 1, d = 1..4 at order 16", criterion_5),
        ("proposition 2 and its proof chain", criterion_6),
        ("lemma 1, r <= 12", criterion_7),
        ("hyperelliptic routes g = 2..12, binomial sum g <= 30", criterion_8),
        ("localization vanishing, g, d <= 4", criterion_9),
        ("coefficient formulas and triple lambda, g <= 10", criterion_10),
        ("matrix identity at size 20, matrix route g <= 6", criterion_11),
        ("polynomiality of P_g, g <= 8", criterion_12),
        ("negative controls per suite", criterion_13),
    ];
    let ctx = Context::new();
    let start = Instant::now();
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run(&ctx);
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {label} ({detail}, {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {label}: {why}", i + 1);
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!("acceptance: {} of {} criteria passed in {total:.1} s", criteria.len() - failed, criteria.len());
    if total > 60.0 {
        println!("FAIL runtime: {total:.1} s exceeds 60 s");
        failed += 1;
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
