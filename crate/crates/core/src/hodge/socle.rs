//! The polynomial `P_g(k)`, the socle integrals
//! `c_i = int psi_1^{g-1-i} lambda_i lambda_g lambda_{g-1}` it packages, and
//! the closed formulas for its coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bernoulli::bernoulli;
use crate::combinat::double_factorial;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::kdv::{theorem1_leading, theorem1_via_kdv, Nv1Form};
use crate::linalg::{identity, interpolate, mat_mul, poly_eval, Matrix};
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::series::sinc;

use super::integrals::{choose, fact, p_eval, sign};

/// `P_g(k)` as a polynomial in `k`, coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgePolynomial {
    pub genus: u64,
    pub coefficients: Vec<Rational>,
}

impl HodgePolynomial {
    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        poly_eval(&self.coefficients, k)
    }

    /// Coefficient of `k^i`; errors outside `0..g`.
    pub fn coefficient(&self, i: usize) -> Result<&Rational> {
        self.coefficients
            .get(i)
            .ok_or_else(|| Error::OutOfRange(format!("P_{} has no k^{i} coefficient", self.genus)))
    }
}

/// `c_i = int psi_1^{g-1-i} lambda_i lambda_g lambda_{g-1}` for `i = 0..g-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleVector {
    pub genus: u64,
    pub entries: Vec<Rational>,
}

impl SocleVector {
    /// Reads `c_i = (-1)^i (|B_{2g}|/2g) [k^{g-1-i}] P_g`.
    pub fn from_polynomial(ratio: &Rational, p: &HodgePolynomial) -> Self {
        let g = p.genus as usize;
        let entries = (0..g)
            .map(|i| sign(i as i64) * ratio * &p.coefficients[g - 1 - i])
            .collect();
        SocleVector { genus: p.genus, entries }
    }

    /// `sum_i (-1)^i k^{g-1-i} c_i`, which equals `(|B_{2g}|/2g) P_g(k)`.
    pub fn pairing(&self, k: &Rational) -> Rational {
        let g = self.genus as usize;
        self.entries
            .iter()
            .enumerate()
            .map(|(i, c)| sign(i as i64) * k.pow((g - 1 - i) as i32) * c)
            .sum()
    }
}

fn require_genus(g: u64) -> Result<()> {
    if g == 0 {
        return Err(Error::OutOfRange("genus must be at least 1".into()));
    }
    Ok(())
}

/// Interpolates `P_g` through `k = 1..g`.
pub fn hodge_polynomial(g: u64) -> Result<HodgePolynomial> {
    require_genus(g)?;
    let xs: Vec<Rational> = (1..=g).map(Rational::from).collect();
    let ys = (1..=g).map(|k| p_eval(g, k)).collect::<Result<Vec<_>>>()?;
    Ok(HodgePolynomial { genus: g, coefficients: interpolate(&xs, &ys)? })
}

pub fn socle_extract(ctx: &Context, g: u64) -> Result<(SocleVector, HodgePolynomial)> {
    let p = hodge_polynomial(g)?;
    Ok((SocleVector::from_polynomial(&ctx.bernoulli_ratio(g), &p), p))
}

/// The interpolant through `k = 1..g` predicts `P_g(k)` for `k = g+1..2g`.
pub fn polynomiality_check(g: u64) -> Result<CheckReport> {
    let p = hodge_polynomial(g)?;
    let predicted: Vec<Rational> = (g + 1..=2 * g).map(|k| p.eval(&Rational::from(k))).collect();
    let actual = (g + 1..=2 * g).map(|k| p_eval(g, k)).collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new("theorem3.polynomiality", &[("g", g as i64)], predicted, actual))
}

/// Degree exactly `g - 1` and, for `g >= 2`, zero constant term.
pub fn shape_check(g: u64) -> Result<CheckReport> {
    let p = hodge_polynomial(g)?;
    let degree = p.degree().map_or(-1, |d| d as i64);
    let lhs = vec![Rational::from(degree), p.coefficients[0].clone()];
    let constant = if g == 1 { p.coefficients[0].clone() } else { Rational::zero() };
    let rhs = vec![Rational::from(g as i64 - 1), constant];
    Ok(CheckReport::new("theorem3.shape", &[("g", g as i64)], lhs, rhs))
}

/// `B(i,j) = (-1)^{i+j} j^{i-1} C(i,j)`, `1 <= i, j <= n`.
pub fn b_matrix(n: usize) -> Matrix {
    (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| sign(i + j) * Rational::int_pow(j, i - 1) * choose(i, j)).collect())
        .collect()
}

/// `B^{-1}(i,j) = C(i-1, j-1) i^{1-j}`.
pub fn b_inverse_matrix(n: usize) -> Matrix {
    (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| choose(i - 1, j - 1) * Rational::int_pow(i, 1 - j)).collect())
        .collect()
}

pub fn b_inverse_check(n: usize) -> CheckReport {
    let product = mat_mul(&b_matrix(n), &b_inverse_matrix(n));
    CheckReport::new(
        "theorem3.b_inverse",
        &[("size", n as i64)],
        product.into_iter().flatten().collect::<Vec<_>>(),
        identity(n).into_iter().flatten().collect::<Vec<_>>(),
    )
}

/// `A = B^{-1} D B V` with `D(k,k) = (k-1)!/(2g+k-1)! |B_{2g}|/2g` and `V(j) = j^{2g}`;
/// entry `k` equals `k (|B_{2g}|/2g) P_g(k)`.
pub fn matrix_route(ctx: &Context, g: u64, n: usize) -> Vec<Rational> {
    let gi = g as i64;
    let ratio = ctx.bernoulli_ratio(g);
    let v: Matrix = (1..=n as i64).map(|j| vec![Rational::int_pow(j, 2 * gi)]).collect();
    let bv = mat_mul(&b_matrix(n), &v);
    let dbv: Matrix = bv
        .into_iter()
        .enumerate()
        .map(|(idx, row)| {
            let k = idx as i64 + 1;
            vec![fact(k - 1) / fact(2 * gi + k - 1) * &ratio * &row[0]]
        })
        .collect();
    mat_mul(&b_inverse_matrix(n), &dbv).into_iter().map(|mut r| r.remove(0)).collect()
}

/// The matrix route against `(|B_{2g}|/2g) P_g(k)` for `k = 1..n`, and the
/// socle vector it determines against `socle_extract`.
pub fn matrix_route_check(ctx: &Context, g: u64, n: usize) -> Result<Vec<CheckReport>> {
    require_genus(g)?;
    let n = n.max(g as usize);
    let a = matrix_route(ctx, g, n);
    let per_k: Vec<Rational> = a.iter().enumerate().map(|(i, x)| x / Rational::from(i + 1)).collect();
    let ratio = ctx.bernoulli_ratio(g);
    let direct = (1..=n as u64).map(|k| Ok(&ratio * p_eval(g, k)?)).collect::<Result<Vec<_>>>()?;

    let xs: Vec<Rational> = (1..=g).map(Rational::from).collect();
    let unscaled: Vec<Rational> = per_k[..g as usize].iter().map(|x| x / &ratio).collect();
    let poly = HodgePolynomial { genus: g, coefficients: interpolate(&xs, &unscaled)? };
    let via_matrix = SocleVector::from_polynomial(&ratio, &poly);
    let (extracted, _) = socle_extract(ctx, g)?;
    let gi = g as i64;
    Ok(vec![
        CheckReport::new("theorem3.matrix", &[("g", gi), ("size", n as i64)], per_k, direct),
        CheckReport::new("theorem3.matrix_socle", &[("g", gi)], via_matrix.entries, extracted.entries),
    ])
}

/// The named coefficient formulas for `P_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoefficientFormula {
    /// `[k^{g-1}] P_g = 1/(2^{2g-1}(2g-1)!!)`.
    #[serde(rename = "eg-1")]
    TopMinus1,
    /// `[k^{g-2}] P_g = -g(g-2)/(9 2^{2g-1}(2g-1)!!)`.
    #[serde(rename = "eg-2")]
    TopMinus2,
    /// `[k^1] P_g = B_{2g-2}/(2(2g-2)!)`.
    #[serde(rename = "eg1")]
    Linear,
    /// `[k^2] P_g = -g B_{2g-2}/(2(2g-2)!)`.
    #[serde(rename = "eg2")]
    Quadratic,
}

impl CoefficientFormula {
    pub const ALL: [CoefficientFormula; 4] = [
        CoefficientFormula::TopMinus1,
        CoefficientFormula::TopMinus2,
        CoefficientFormula::Linear,
        CoefficientFormula::Quadratic,
    ];

    /// Power of `k` the formula describes at genus `g`, if it lies in `0..g`.
    pub fn power(self, g: u64) -> Option<usize> {
        let g = g as i64;
        let p = match self {
            CoefficientFormula::TopMinus1 => g - 1,
            CoefficientFormula::TopMinus2 => g - 2,
            CoefficientFormula::Linear => 1,
            CoefficientFormula::Quadratic => 2,
        };
        (p >= 0 && p < g).then_some(p as usize)
    }

    /// Smallest genus at which the formula applies.
    pub fn min_genus(self) -> u64 {
        match self {
            CoefficientFormula::TopMinus1 => 1,
            CoefficientFormula::TopMinus2 | CoefficientFormula::Linear => 2,
            CoefficientFormula::Quadratic => 3,
        }
    }

    pub fn closed_form(self, ctx: &Context, g: u64) -> Result<Rational> {
        if self.power(g).is_none() {
            return Err(Error::OutOfRange(format!("{self} does not apply at genus {g}")));
        }
        let gi = g as i64;
        let lead = || Rational::new(1, double_factorial(2 * gi - 1).expect("2g-1 >= -1")) / Rational::int_pow(2, 2 * gi - 1);
        let bern = || ctx.bernoulli(2 * g as usize - 2) / (Rational::from(2) * fact(2 * gi - 2));
        Ok(match self {
            CoefficientFormula::TopMinus1 => lead(),
            CoefficientFormula::TopMinus2 => -Rational::from(gi * (gi - 2)) / Rational::from(9) * lead(),
            CoefficientFormula::Linear => bern(),
            CoefficientFormula::Quadratic => -Rational::from(gi) * bern(),
        })
    }
}

impl fmt::Display for CoefficientFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientFormula::TopMinus1 => "eg-1",
            CoefficientFormula::TopMinus2 => "eg-2",
            CoefficientFormula::Linear => "eg1",
            CoefficientFormula::Quadratic => "eg2",
        })
    }
}

impl FromStr for CoefficientFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "eg-1" => CoefficientFormula::TopMinus1,
            "eg-2" => CoefficientFormula::TopMinus2,
            "eg1" => CoefficientFormula::Linear,
            "eg2" => CoefficientFormula::Quadratic,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

pub fn coeff_formula_check(ctx: &Context, g: u64, which: CoefficientFormula) -> Result<CheckReport> {
    let power = which
        .power(g)
        .ok_or_else(|| Error::OutOfRange(format!("{which} needs g >= {}", which.min_genus())))?;
    let p = hodge_polynomial(g)?;
    Ok(CheckReport::new(
        format!("coefficients.{which}"),
        &[("g", g as i64)],
        p.coefficient(power)?.clone(),
        which.closed_form(ctx, g)?,
    ))
}

/// Closed-form socle evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedEvaluation {
    /// `int kappa_{3g-3} = 1/(24^g g!)`.
    KappaTop,
    /// `int psi^{2g-2} lambda_g = (2^{2g-1}-1)/2^{2g-1} |B_{2g}|/(2g)!`.
    KappaLambdaG,
    /// `int psi^{g-1} lambda_g lambda_{g-1} = 1/(2^{2g-1}(2g-1)!!) |B_{2g}|/2g`.
    Theorem1,
    /// `int lambda_{g-2} lambda_{g-1} lambda_g = 1/(2(2g-2)!) |B_{2g-2}|/(2g-2) |B_{2g}|/2g`.
    TripleLambda,
}

impl NamedEvaluation {
    pub const ALL: [NamedEvaluation; 4] = [
        NamedEvaluation::KappaTop,
        NamedEvaluation::KappaLambdaG,
        NamedEvaluation::Theorem1,
        NamedEvaluation::TripleLambda,
    ];

    pub fn min_genus(self) -> u64 {
        match self {
            NamedEvaluation::TripleLambda => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for NamedEvaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedEvaluation::KappaTop => "kappa_top",
            NamedEvaluation::KappaLambdaG => "kappa_lambda_g",
            NamedEvaluation::Theorem1 => "theorem1",
            NamedEvaluation::TripleLambda => "triple_lambda",
        })
    }
}

impl FromStr for NamedEvaluation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "kappa_top" => NamedEvaluation::KappaTop,
            "kappa_lambda_g" => NamedEvaluation::KappaLambdaG,
            "theorem1" => NamedEvaluation::Theorem1,
            "triple_lambda" => NamedEvaluation::TripleLambda,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

pub fn named_evaluation(ctx: &Context, which: NamedEvaluation, g: u64) -> Result<Rational> {
    if g < which.min_genus() {
        return Err(Error::OutOfRange(format!("{which} needs g >= {}", which.min_genus())));
    }
    let gi = g as i64;
    Ok(match which {
        NamedEvaluation::KappaTop => Rational::new(1, 24).pow(gi as i32) / fact(gi),
        NamedEvaluation::KappaLambdaG => {
            let p = Rational::int_pow(2, 2 * gi - 1);
            (&p - Rational::one()) / p * ctx.bernoulli(2 * g as usize).abs() / fact(2 * gi)
        }
        NamedEvaluation::Theorem1 => theorem1_leading(g as u32) * ctx.bernoulli_ratio(g),
        NamedEvaluation::TripleLambda => {
            ctx.bernoulli_ratio(g - 1) / (Rational::from(2) * fact(2 * gi - 2)) * ctx.bernoulli_ratio(g)
        }
    })
}

/// Each named evaluation against an independent route.
pub fn named_evaluation_check(ctx: &Context, which: NamedEvaluation, g: u64) -> Result<CheckReport> {
    let closed = named_evaluation(ctx, which, g)?;
    let gi = g as i64;
    let other = match which {
        NamedEvaluation::KappaTop => ctx.bracket(&[3 * g as u32 - 2]).value,
        NamedEvaluation::KappaLambdaG => sinc(1, 2 * g as usize).coefficient(2 * g as usize)?.clone(),
        NamedEvaluation::Theorem1 => ctx.bernoulli_ratio(g) * hodge_polynomial(g)?.coefficient(g as usize - 1)?,
        NamedEvaluation::TripleLambda => triple_lambda_via_linear(ctx, g)?,
    };
    Ok(CheckReport::new(format!("named.{which}"), &[("g", gi)], closed, other))
}

/// `(-1)^g (|B_{2g}|/2g) [k^1] P_g / (2g-2)`: the linear coefficient pushed
/// down by the factor `kappa_0 = 2g - 2`.
pub fn triple_lambda_via_linear(ctx: &Context, g: u64) -> Result<Rational> {
    if g < 2 {
        return Err(Error::OutOfRange("needs g >= 2".into()));
    }
    let p = hodge_polynomial(g)?;
    Ok(sign(g as i64) * ctx.bernoulli_ratio(g) * p.coefficient(1)? / Rational::from(2 * g - 2))
}

/// The eg1 closed form pushed down the same way, against the closed triple-lambda value.
pub fn triple_lambda_consistency(ctx: &Context, g: u64) -> Result<CheckReport> {
    let eg1 = CoefficientFormula::Linear.closed_form(ctx, g)?;
    let lhs = sign(g as i64) * ctx.bernoulli_ratio(g) * eg1 / Rational::from(2 * g - 2);
    Ok(CheckReport::new(
        "coefficients.triple_lambda",
        &[("g", g as i64)],
        lhs,
        named_evaluation(ctx, NamedEvaluation::TripleLambda, g)?,
    ))
}

/// The socle formula three ways: closed form, the bracket assembly times
/// `|B_{2g}|/2g`, and the leading coefficient of `P_g` times `|B_{2g}|/2g`.
pub fn theorem1_check(ctx: &Context, g: u64) -> Result<CheckReport> {
    if g < 1 {
        return Err(Error::OutOfRange("needs g >= 1".into()));
    }
    let ratio = ctx.bernoulli_ratio(g);
    let closed = named_evaluation(ctx, NamedEvaluation::Theorem1, g)?;
    let kdv = theorem1_via_kdv(ctx, g as u32, Nv1Form::Simplified)? * &ratio;
    let unsimplified = theorem1_via_kdv(ctx, g as u32, Nv1Form::Unsimplified)? * &ratio;
    let lead = hodge_polynomial(g)?.coefficient(g as usize - 1)? * &ratio;
    let pure = theorem1_leading(g as u32) * bernoulli(2 * g as usize).abs() / Rational::from(2 * g);
    Ok(CheckReport::new(
        "theorem1.triple",
        &[("g", g as i64)],
        vec![kdv, unsimplified, lead],
        vec![closed.clone(), closed, pure],
    ))
}
