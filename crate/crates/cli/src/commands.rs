use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::{json, Value};

use socle_core::hodge::{self, FRoute, NamedEvaluation, TreeRoute};
use socle_core::series::{named_series, NamedSeries};
use socle_core::{run_suite, Bounds, Context, Execution, Rational, SuiteDocument, SuiteName};

use crate::{cache, EvalArgs, Quantity, SeriesArgs, SeriesName, VerifyArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<socle_core::Error> for CliError {
    fn from(e: socle_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Serialize)]
struct Entry {
    label: String,
    value: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    decimal: Option<f64>,
}

#[derive(Debug, Serialize)]
struct EvalOutput {
    quantity: String,
    parameters: BTreeMap<&'static str, Value>,
    values: Vec<Entry>,
}

fn need(v: Option<u64>, flag: &str, what: &str) -> CliResult<u64> {
    v.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

fn show(r: &Rational, decimal: bool) -> String {
    if decimal {
        format!("{r}  ~ {:e}", r.to_f64())
    } else {
        r.to_string()
    }
}

pub fn eval(args: &EvalArgs) -> CliResult<ExitCode> {
    let ctx = Context::new();
    if let Some(path) = &args.cache {
        cache::load(&ctx, path)?;
    }
    let name = args.quantity.to_possible_value_name();
    let mut params: BTreeMap<&'static str, Value> = BTreeMap::new();
    let mut grab = |v: Option<u64>, flag: &'static str| -> CliResult<u64> {
        let x = need(v, flag, &name)?;
        params.insert(flag, json!(x));
        Ok(x)
    };
    let mut values: Vec<(String, Rational)> = Vec::new();
    match args.quantity {
        Quantity::Theorem1 => {
            let g = grab(args.g, "g")?;
            values.push(("value".into(), hodge::named_evaluation(&ctx, NamedEvaluation::Theorem1, g)?));
        }
        Quantity::I => {
            let (g, k) = (grab(args.g, "g")?, grab(args.k, "k")?);
            values.push(("value".into(), hodge::i_closed(&ctx, g, k)?));
        }
        Quantity::Q => {
            let (g, e) = (grab(args.g, "g")?, grab(args.e, "e")?);
            values.push(("value".into(), hodge::q(&ctx, g, e)?));
        }
        Quantity::P => {
            let (g, k) = (grab(args.g, "g")?, grab(args.k, "k")?);
            values.push(("value".into(), hodge::p_eval(g, k)?));
        }
        Quantity::F => {
            let (g, d, e) = (grab(args.g, "g")?, grab(args.d, "d")?, grab(args.e, "e")?);
            values.push(("value".into(), hodge::f_coeff(&ctx, g, d, e, FRoute::Tree(TreeRoute::Closed))?));
        }
        Quantity::Hyperelliptic => {
            let g = grab(args.g, "g")?;
            values.push(("value".into(), hodge::hyperelliptic_closed(&ctx, g)?));
        }
        Quantity::Bracket => {
            let indices = args
                .indices
                .clone()
                .ok_or_else(|| CliError::Usage("bracket needs --indices".into()))?;
            params.insert("indices", json!(indices));
            values.push(("value".into(), ctx.bracket(&indices).value));
        }
        Quantity::Socle => {
            let g = grab(args.g, "g")?;
            let (socle, poly) = hodge::socle_extract(&ctx, g)?;
            for (i, c) in socle.entries.iter().enumerate() {
                let psi = g as usize - 1 - i;
                values.push((format!("int psi^{psi} lambda_{i} lambda_{g} lambda_{}", g - 1), c.clone()));
            }
            for (i, c) in poly.coefficients.iter().enumerate() {
                values.push((format!("P_{g} [k^{i}]"), c.clone()));
            }
        }
        Quantity::Named => {
            let which: NamedEvaluation = args
                .which
                .as_deref()
                .ok_or_else(|| CliError::Usage("named needs --which".into()))?
                .parse()?;
            let g = grab(args.g, "g")?;
            params.insert("which", json!(which.to_string()));
            values.push(("value".into(), hodge::named_evaluation(&ctx, which, g)?));
        }
    }
    if let Some(path) = &args.cache {
        cache::save(&ctx, path)?;
    }
    if args.json {
        let out = EvalOutput {
            quantity: name,
            parameters: params,
            values: values
                .into_iter()
                .map(|(label, value)| Entry {
                    decimal: args.decimal.then(|| value.to_f64()),
                    label,
                    value,
                })
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else if values.len() == 1 && values[0].0 == "value" {
        println!("{}", show(&values[0].1, args.decimal));
    } else {
        for (label, v) in &values {
            println!("{label} = {}", show(v, args.decimal));
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn series(args: &SeriesArgs) -> CliResult<ExitCode> {
    let ctx = Context::new();
    let mut params = BTreeMap::new();
    let s = match args.name {
        SeriesName::GK => {
            params.insert("k", args.k);
            hodge::g_series(&ctx, args.k, args.order)?
        }
        SeriesName::H => hodge::h_series(args.order),
        other => {
            let named = match other {
                SeriesName::LogSinc => NamedSeries::LogSinc,
                SeriesName::Sinc => NamedSeries::Sinc,
                SeriesName::NegLogCosHalf => NamedSeries::NegLogCosHalf,
                _ => NamedSeries::Tree,
            };
            if matches!(named, NamedSeries::LogSinc | NamedSeries::Sinc) {
                params.insert("d", args.d);
            }
            named_series(named, args.d, args.order)?
        }
    };
    if args.json {
        let doc = json!({
            "name": args.name.to_possible_value_name(),
            "parameters": params,
            "order": s.order(),
            "coefficients": s.coeffs(),
            "decimal": args.decimal.then(|| s.coeffs().iter().map(Rational::to_f64).collect::<Vec<_>>()),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        let mut any = false;
        for (i, c) in s.coeffs().iter().enumerate() {
            if !c.is_zero() {
                any = true;
                println!("t^{i}: {}", show(c, args.decimal));
            }
        }
        if !any {
            println!("0");
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(args: &VerifyArgs) -> CliResult<ExitCode> {
    let suite: SuiteName = args.suite.parse()?;
    let bounds = Bounds { max_g: args.max_g, max_k: args.max_k, max_d: args.max_d, order: args.order };
    let ctx = Context::new();
    if let Some(path) = &args.cache {
        cache::load(&ctx, path)?;
    }
    let exec = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let reports = run_suite(suite, &bounds, &ctx, exec)?;
    if let Some(path) = &args.cache {
        cache::save(&ctx, path)?;
    }
    let doc = SuiteDocument::new(suite, bounds, reports);
    if let Some(path) = &args.json {
        let text = serde_json::to_string_pretty(&doc).expect("serializable");
        fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    print_summary(&doc, args.verbose);
    Ok(if doc.all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_summary(doc: &SuiteDocument, verbose: bool) {
    let mut groups: BTreeMap<&str, (usize, Vec<String>)> = BTreeMap::new();
    for r in &doc.reports {
        let params = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
        if verbose {
            println!("{} {} {params}", if r.equal { "PASS" } else { "FAIL" }, r.identity_id);
        }
        let entry = groups.entry(&r.identity_id).or_default();
        entry.0 += 1;
        if !r.equal {
            entry.1.push(params);
        }
    }
    if !verbose {
        for (id, (n, failed)) in &groups {
            if failed.is_empty() {
                println!("PASS {id} ({n} checks)");
            } else {
                println!("FAIL {id} ({} of {n} failed: {})", failed.len(), failed.join("; "));
            }
        }
    }
    let failed = doc.reports.iter().filter(|r| !r.equal).count();
    println!(
        "suite {}: {} checks, {} failed{}",
        doc.suite,
        doc.reports.len(),
        failed,
        if failed == 0 { ", all passed" } else { "" }
    );
}

trait ValueName {
    fn to_possible_value_name(&self) -> String;
}

impl<T: clap::ValueEnum> ValueName for T {
    fn to_possible_value_name(&self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}
