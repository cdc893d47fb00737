//! Named verification suites over a bound box.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::hodge::{self, CoefficientFormula, NamedEvaluation};
use crate::kdv::{self, Nv1Form};
use crate::par::{self, Execution};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    All,
    Kdv,
    Theorem1,
    Theorem2,
    Theorem3,
    Prop1,
    Prop2,
    Hyperelliptic,
    Localization,
    Coefficients,
}

impl SuiteName {
    /// Every concrete family, excluding `All`.
    pub const FAMILIES: [SuiteName; 9] = [
        SuiteName::Kdv,
        SuiteName::Theorem1,
        SuiteName::Theorem2,
        SuiteName::Theorem3,
        SuiteName::Prop1,
        SuiteName::Prop2,
        SuiteName::Hyperelliptic,
        SuiteName::Localization,
        SuiteName::Coefficients,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::All => "all",
            SuiteName::Kdv => "kdv",
            SuiteName::Theorem1 => "theorem1",
            SuiteName::Theorem2 => "theorem2",
            SuiteName::Theorem3 => "theorem3",
            SuiteName::Prop1 => "prop1",
            SuiteName::Prop2 => "prop2",
            SuiteName::Hyperelliptic => "hyperelliptic",
            SuiteName::Localization => "localization",
            SuiteName::Coefficients => "coefficients",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(SuiteName::All)
            .chain(SuiteName::FAMILIES)
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The parameter box a suite sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_g: u64,
    pub max_k: u64,
    pub max_d: u64,
    pub order: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_g: 6, max_k: 6, max_d: 4, order: 24 }
    }
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        if self.max_g == 0 || self.max_k == 0 || self.max_d == 0 || self.order == 0 {
            return Err(Error::OutOfRange("bounds must be positive".into()));
        }
        Ok(())
    }
}

/// The document written by a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteDocument {
    pub suite: SuiteName,
    pub bounds: Bounds,
    pub reports: Vec<CheckReport>,
    pub all_passed: bool,
}

impl SuiteDocument {
    pub fn new(suite: SuiteName, bounds: Bounds, reports: Vec<CheckReport>) -> Self {
        let all_passed = reports.iter().all(|r| r.equal);
        SuiteDocument { suite, bounds, reports, all_passed }
    }
}

type Job<'a> = Box<dyn Fn() -> Result<Vec<CheckReport>> + Send + Sync + 'a>;

fn one<'a>(f: impl Fn() -> Result<CheckReport> + Send + Sync + 'a) -> Job<'a> {
    Box::new(move || Ok(vec![f()?]))
}

fn many<'a>(f: impl Fn() -> Result<Vec<CheckReport>> + Send + Sync + 'a) -> Job<'a> {
    Box::new(f)
}

/// Runs every check of `name` over `bounds`. Reports come back sorted by
/// identity id and parameters whatever the execution order.
pub fn run_suite(name: SuiteName, bounds: &Bounds, ctx: &Context, exec: Execution) -> Result<Vec<CheckReport>> {
    bounds.validate()?;
    let mut jobs = Vec::new();
    match name {
        SuiteName::All => {
            for family in SuiteName::FAMILIES {
                push_jobs(family, bounds, ctx, &mut jobs);
            }
        }
        family => push_jobs(family, bounds, ctx, &mut jobs),
    }
    let outcomes = par::map(jobs, exec, |job| {
        let start = Instant::now();
        let mut reports = job()?;
        let share = start.elapsed().as_secs_f64() * 1e3 / reports.len().max(1) as f64;
        for r in &mut reports {
            r.elapsed_ms = share;
        }
        Ok(reports)
    });
    let mut reports = Vec::new();
    for outcome in outcomes {
        reports.extend(outcome?);
    }
    reports.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    Ok(reports)
}

fn push_jobs<'a>(name: SuiteName, b: &Bounds, ctx: &'a Context, jobs: &mut Vec<Job<'a>>) {
    let b = *b;
    match name {
        SuiteName::All => unreachable!("expanded by the caller"),
        SuiteName::Kdv => kdv_jobs(b, ctx, jobs),
        SuiteName::Theorem1 => {
            for g in 1..=b.max_g {
                jobs.push(one(move || hodge::theorem1_check(ctx, g)));
            }
        }
        SuiteName::Theorem2 => {
            for k in 1..=b.max_k.min(b.order as u64 - 1) {
                jobs.push(one(move || hodge::theorem2_check(ctx, k, b.order)));
            }
            jobs.push(one(move || hodge::corollary1_check(ctx, b.order)));
            if b.order >= 2 {
                jobs.push(one(move || hodge::corollary2_check(ctx, b.order)));
            }
            for g in 1..=b.max_g {
                jobs.push(many(move || hodge::sdsd_series_check(ctx, g)));
            }
            for d in 1..=b.max_d {
                jobs.push(one(move || hodge::scaling_check(d, b.order)));
            }
        }
        SuiteName::Theorem3 => {
            for g in 1..=b.max_g {
                for k in 1..=b.max_k {
                    jobs.push(one(move || hodge::i_dual_route_check(ctx, g, k)));
                    jobs.push(one(move || hodge::stirling_form_check(ctx, g, k)));
                }
                jobs.push(one(move || hodge::q_series_check(ctx, g)));
                jobs.push(many(move || hodge::matrix_route_check(ctx, g, 2 * g as usize)));
            }
            for g in 1..=b.max_g + 2 {
                jobs.push(one(move || hodge::polynomiality_check(g)));
                jobs.push(one(move || hodge::shape_check(g)));
            }
            jobs.push(one(|| Ok(hodge::b_inverse_check(20))));
        }
        SuiteName::Prop1 => {
            for d in 1..=b.max_d {
                jobs.push(one(move || hodge::prop1_check(ctx, d, b.order)));
            }
            for g in 1..=b.max_g.min(5) {
                for d in 1..=2 * b.max_d {
                    jobs.push(many(move || {
                        (1..=d).map(|e| hodge::f_routes_check(ctx, g, d, e)).collect()
                    }));
                }
            }
        }
        SuiteName::Prop2 => {
            for g in 1..=b.max_g {
                for k in 1..=b.max_k {
                    jobs.push(many(move || {
                        let mut out = Vec::new();
                        for e in 1..=k {
                            out.push(hodge::prop2_check(ctx, g, k, e)?);
                            out.push(hodge::hples_check(g, k, e));
                        }
                        Ok(out)
                    }));
                }
            }
            let kmax = b.max_k as i64;
            for n in 1..=b.max_k + 2 {
                jobs.push(many(move || Ok((-kmax..=kmax + 2).map(|t| hodge::kfgg_check(n, t)).collect())));
            }
            for z in 1..=b.max_k {
                jobs.push(many(move || {
                    let mut out = Vec::new();
                    for t in 1..=z {
                        for e in 1..=b.max_k {
                            out.push(hodge::weww_check(z, t, e)?);
                        }
                        for e in 1..=z - t {
                            out.push(hodge::pwp_check(z, e, t)?);
                        }
                    }
                    Ok(out)
                }));
            }
            for r in 0..=b.max_k + 2 {
                jobs.push(many(move || (0..=r).map(|l| hodge::lemma1_check(ctx, r, l)).collect()));
            }
        }
        SuiteName::Hyperelliptic => {
            for g in 2..=2 * b.max_g {
                jobs.push(one(move || hodge::hyperelliptic_check(ctx, g)));
            }
            jobs.push(many(move || Ok((0..=5 * b.max_g).map(hodge::binomial_sum_check).collect())));
        }
        SuiteName::Localization => {
            for g in 1..=b.max_g {
                for d in 1..=b.max_d {
                    jobs.push(one(move || hodge::localization_check(ctx, g, d)));
                }
            }
        }
        SuiteName::Coefficients => {
            for g in 1..=b.max_g + 4 {
                for which in CoefficientFormula::ALL {
                    if g >= which.min_genus() {
                        jobs.push(one(move || hodge::coeff_formula_check(ctx, g, which)));
                    }
                }
                if g >= 2 {
                    jobs.push(one(move || hodge::triple_lambda_consistency(ctx, g)));
                }
            }
            for g in 1..=b.max_g {
                for which in NamedEvaluation::ALL {
                    if g >= which.min_genus() {
                        jobs.push(one(move || hodge::named_evaluation_check(ctx, which, g)));
                    }
                }
            }
        }
    }
}

fn kdv_jobs<'a>(b: Bounds, ctx: &'a Context, jobs: &mut Vec<Job<'a>>) {
    let n = b.order;
    let table = ctx.tau_zero_table(n + 1);
    jobs.push(one(move || Ok(kdv::verify_d_pde(&kdv::two_point_d(n)))));
    jobs.push(one(move || Ok(kdv::verify_f_ode(&kdv::three_point_f(n), &kdv::two_point_d(n)))));
    {
        let table = table.clone();
        jobs.push(one(move || kdv::table_series_check(&table, n)));
    }
    for s in 0..=n {
        let table = table.clone();
        jobs.push(many(move || {
            let mut out = vec![
                kdv::table_vs_closed_form(&table, s)?,
                kdv::engine_vs_closed_form(ctx, s)?,
                kdv::f_vs_engine(ctx, s)?,
                kdv::two_point_engine_check(ctx, &table, s)?,
            ];
            if s >= 1 {
                out.push(kdv::string_on_tables(&table, s)?);
            }
            Ok(out)
        }));
    }
    for g in 1..=(n as u32 / 3) {
        let table = table.clone();
        jobs.push(one(move || kdv::dilaton_on_tables(&table, g)));
    }
    let brief_sum = (n as u32).min(14);
    for m in 1..=brief_sum {
        for len in 1..=2 {
            jobs.push(one(move || Ok(kdv::brief0_check(ctx, m, len, brief_sum))));
        }
    }
    for g in 1..=b.max_g as u32 {
        jobs.push(one(move || Ok(kdv::one_point_check(ctx, g))));
        jobs.push(one(move || kdv::identity_four(ctx, g)));
        jobs.push(one(move || kdv::identity_five(ctx, g)));
        jobs.push(one(move || kdv::identity_five_via_f(g)));
        jobs.push(many(move || (1..=4).map(|k| kdv::identity_dfgf(ctx, g, k)).collect()));
        jobs.push(one(move || {
            Ok(CheckReport::new(
                "kdv.nv1_forms",
                &[("g", i64::from(g))],
                kdv::theorem1_via_kdv(ctx, g, Nv1Form::Simplified)?,
                kdv::theorem1_via_kdv(ctx, g, Nv1Form::Unsimplified)?,
            ))
        }));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in std::iter::once(SuiteName::All).chain(SuiteName::FAMILIES) {
            assert_eq!(n.to_string().parse::<SuiteName>().unwrap(), n);
        }
        assert!(matches!("theorem4".parse::<SuiteName>(), Err(Error::UnknownName(_))));
    }

    #[test]
    fn zero_bound_rejected() {
        let b = Bounds { max_g: 0, ..Bounds::default() };
        assert!(run_suite(SuiteName::Theorem1, &b, &Context::new(), Execution::Sequential).is_err());
    }

    #[test]
    fn theorem1_has_one_report_per_genus() {
        let reports = run_suite(SuiteName::Theorem1, &Bounds::default(), &Context::new(), Execution::Parallel).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports.iter().all(|r| r.equal));
    }
}
