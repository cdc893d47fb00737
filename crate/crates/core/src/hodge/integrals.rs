//! One-pointed Hodge integrals against `lambda_g lambda_{g-1}`: the polynomial
//! `P_g(k)`, the families `Q_g^e` and `I(g,k)`, and the series `G_k(t)`.

use crate::combinat::{binomial, factorial};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::linalg::{interpolate, poly_eval};
use crate::rational::Rational;
use crate::report::{CheckReport, Digest};
use crate::series::{log_sinc, named_series, sinc, NamedSeries, Series1};

pub(crate) fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() }
}

pub(crate) fn fact(n: i64) -> Rational {
    Rational::from(factorial(n as u64))
}

pub(crate) fn choose(n: i64, k: i64) -> Rational {
    Rational::from(binomial(n, k))
}

fn require_positive(what: &str, values: &[(&str, u64)]) -> Result<()> {
    for (name, v) in values {
        if *v == 0 {
            return Err(Error::OutOfRange(format!("{what} needs {name} >= 1")));
        }
    }
    Ok(())
}

/// `P_g(k) = sum_{l=1}^k (k-1)!/(k-l)! k^{-l} sum_{m=1}^l (-1)^{l-m} C(l,m) m^{2g+l-1}/(2g+l-1)!`.
pub fn p_eval(g: u64, k: u64) -> Result<Rational> {
    require_positive("P_g(k)", &[("g", g), ("k", k)])?;
    let (g, k) = (g as i64, k as i64);
    let mut total = Rational::zero();
    for l in 1..=k {
        let inner: Rational = (1..=l)
            .map(|m| sign(l - m) * choose(l, m) * Rational::int_pow(m, 2 * g + l - 1))
            .sum::<Rational>()
            / fact(2 * g + l - 1);
        total += fact(k - 1) / fact(k - l) * Rational::int_pow(k, -l) * inner;
    }
    Ok(total)
}

/// `P_g(k)` in Stirling form:
/// `sum_{l=1}^k (k-1)!/(k-l)! l!/k^l S(2g-1+l, l)/(2g-1+l)!`.
pub fn p_eval_stirling(ctx: &Context, g: u64, k: u64) -> Result<Rational> {
    require_positive("P_g(k)", &[("g", g), ("k", k)])?;
    let (gi, ki) = (g as i64, k as i64);
    Ok((1..=ki)
        .map(|l| {
            let n = 2 * gi - 1 + l;
            fact(ki - 1) / fact(ki - l) * fact(l) * Rational::int_pow(ki, -l)
                * Rational::from(ctx.stirling2(n as u64, l as u64))
                / fact(n)
        })
        .sum())
}

/// `Q_g^e = (|B_{2g}|/2g) P_g(e)`.
pub fn q(ctx: &Context, g: u64, e: u64) -> Result<Rational> {
    Ok(ctx.bernoulli_ratio(g) * p_eval(g, e)?)
}

/// `I(g,k) = (k-1)!/(2g+k-1)! |B_{2g}|/2g sum_j (-1)^{k-j}/(k-j)! j^{k-1}/j! j^{2g}`.
pub fn i_closed(ctx: &Context, g: u64, k: u64) -> Result<Rational> {
    require_positive("I(g,k)", &[("g", g), ("k", k)])?;
    let (gi, ki) = (g as i64, k as i64);
    let sum: Rational = (1..=ki)
        .map(|j| sign(ki - j) / fact(ki - j) * Rational::int_pow(j, ki - 1) / fact(j) * Rational::int_pow(j, 2 * gi))
        .sum();
    Ok(fact(ki - 1) / fact(2 * gi + ki - 1) * ctx.bernoulli_ratio(g) * sum)
}

/// Partial-fraction route: `I(g,k) = sum_e Q_g^e (-1)^{k-e} e^k/k! C(k,e)`.
pub fn i_via_q(ctx: &Context, g: u64, k: u64) -> Result<Rational> {
    require_positive("I(g,k)", &[("g", g), ("k", k)])?;
    let ki = k as i64;
    let mut total = Rational::zero();
    for e in 1..=ki {
        total += q(ctx, g, e as u64)? * sign(ki - e) * Rational::int_pow(e, ki) / fact(ki) * choose(ki, e);
    }
    Ok(total)
}

/// `G_k(t) = sum_g I(g,k) t^{2g+k-1}` to order `order`.
pub fn g_series(ctx: &Context, k: u64, order: usize) -> Result<Series1> {
    require_positive("G_k", &[("k", k)])?;
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut g = 1u64;
    while (2 * g + k - 1) as usize <= order {
        coeffs[(2 * g + k - 1) as usize] = i_closed(ctx, g, k)?;
        g += 1;
    }
    Ok(Series1::new(coeffs, order))
}

pub fn i_dual_route_check(ctx: &Context, g: u64, k: u64) -> Result<CheckReport> {
    Ok(CheckReport::new(
        "theorem3.i_routes",
        &[("g", g as i64), ("k", k as i64)],
        i_closed(ctx, g, k)?,
        i_via_q(ctx, g, k)?,
    ))
}

pub fn stirling_form_check(ctx: &Context, g: u64, k: u64) -> Result<CheckReport> {
    Ok(CheckReport::new(
        "theorem3.stirling_form",
        &[("g", g as i64), ("k", k as i64)],
        p_eval(g, k)?,
        p_eval_stirling(ctx, g, k)?,
    ))
}

/// `d^{k-1} G_k / dt^{k-1} = sum_j (-1)^{k-j} j^{k-1}/k C(k,j) log((jt/2)/sin(jt/2))`.
pub fn theorem2_check(ctx: &Context, k: u64, order: usize) -> Result<CheckReport> {
    require_positive("Theorem 2", &[("k", k)])?;
    if order < k as usize + 1 {
        return Err(Error::OutOfRange(format!("order must be at least k + 1 = {}", k + 1)));
    }
    let lhs = g_series(ctx, k, order)?.nth_derivative(k as usize - 1)?;
    let out_order = lhs.order();
    let ki = k as i64;
    let mut rhs = Series1::zero(out_order);
    for j in 1..=ki {
        let c = sign(ki - j) * Rational::int_pow(j, ki - 1) / Rational::from(ki) * choose(ki, j);
        rhs = &rhs + &log_sinc(j as u64, out_order).scale(&c);
    }
    Ok(CheckReport::new(
        "theorem2.series",
        &[("k", ki), ("order", order as i64)],
        Digest::series(&lhs),
        Digest::series(&rhs),
    ))
}

/// `G_1 = log((t/2)/sin(t/2))`.
pub fn corollary1_check(ctx: &Context, order: usize) -> Result<CheckReport> {
    Ok(CheckReport::new(
        "theorem2.corollary1",
        &[("order", order as i64)],
        Digest::series(&g_series(ctx, 1, order)?),
        Digest::series(&log_sinc(1, order)),
    ))
}

/// `G_2' = -log(cos(t/2))`.
pub fn corollary2_check(ctx: &Context, order: usize) -> Result<CheckReport> {
    let lhs = g_series(ctx, 2, order)?.derivative()?;
    let rhs = named_series(NamedSeries::NegLogCosHalf, 1, lhs.order())?;
    Ok(CheckReport::new(
        "theorem2.corollary2",
        &[("order", order as i64)],
        Digest::series(&lhs),
        Digest::series(&rhs),
    ))
}

/// `Q_g^1` against the `t^{2g}` coefficient of `log S_1`.
pub fn q_series_check(ctx: &Context, g: u64) -> Result<CheckReport> {
    let s = log_sinc(1, 2 * g as usize);
    Ok(CheckReport::new(
        "theorem3.q_series",
        &[("g", g as i64)],
        q(ctx, g, 1)?,
        s.coefficient(2 * g as usize)?.clone(),
    ))
}

/// Consistency of `1 + sum t^{2g} k^i int psi^{2g-2+i} lambda_{g-i} = S_1(t)^{k+1}`:
/// the `t^{2g}` coefficient of `S_1^{k+1}` is interpolated in `k` from
/// `k = 0..g` and must predict `k = g+1..2g`. Its `k^0` coefficient is the
/// `t^{2g}` coefficient of `S_1`, and its `k^g` coefficient is
/// `int psi^{3g-2} = <tau_{3g-2}>`, taken from the bracket engine.
pub fn sdsd_series_check(ctx: &Context, g: u64) -> Result<Vec<CheckReport>> {
    require_positive("the series check", &[("g", g)])?;
    let order = 2 * g as usize;
    let s1 = sinc(1, order);
    let coeff_at = |k: u64| -> Result<Rational> { Ok(s1.pow(k as u32 + 1).coefficient(order)?.clone()) };
    let xs: Vec<Rational> = (0..=g).map(Rational::from).collect();
    let ys = (0..=g).map(coeff_at).collect::<Result<Vec<_>>>()?;
    let poly = interpolate(&xs, &ys)?;
    let predicted: Vec<Rational> = (g + 1..=2 * g).map(|k| poly_eval(&poly, &Rational::from(k))).collect();
    let actual = (g + 1..=2 * g).map(coeff_at).collect::<Result<Vec<_>>>()?;
    let gi = g as i64;
    let ends_lhs = vec![poly[0].clone(), poly[g as usize].clone()];
    let ends_rhs = vec![s1.coefficient(order)?.clone(), ctx.bracket(&[3 * g as u32 - 2]).value];
    Ok(vec![
        CheckReport::new("theorem2.sdsd_polynomial", &[("g", gi)], predicted, actual),
        CheckReport::new("theorem2.sdsd_ends", &[("g", gi)], ends_lhs, ends_rhs),
    ])
}

/// `S_d(t)`, `log S_d(t)` and `S_d log S_d` have `t^{2g}` coefficients scaling as `d^{2g}`.
pub fn scaling_check(d: u64, order: usize) -> Result<CheckReport> {
    require_positive("the scaling check", &[("d", d)])?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for name in [NamedSeries::Sinc, NamedSeries::LogSinc, NamedSeries::SincLogSinc] {
        let scaled = named_series(name, d, order)?;
        let base = named_series(name, 1, order)?;
        lhs.extend(scaled.coeffs().iter().cloned());
        rhs.extend(
            base.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::int_pow(d as i64, i as i64)),
        );
    }
    Ok(CheckReport::new("theorem2.scaling", &[("d", d as i64), ("order", order as i64)], lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn spot_values() {
        let ctx = Context::new();
        assert_eq!(p_eval(1, 1).unwrap(), rat(1, 2));
        assert_eq!(p_eval(2, 1).unwrap(), rat(1, 24));
        assert_eq!(p_eval(3, 1).unwrap(), rat(1, 720));
        assert_eq!(q(&ctx, 1, 1).unwrap(), rat(1, 24));
        assert_eq!(q(&ctx, 2, 1).unwrap(), rat(1, 2880));
        assert_eq!(q(&ctx, 3, 1).unwrap(), rat(1, 181440));
        assert_eq!(i_closed(&ctx, 1, 1).unwrap(), rat(1, 24));
        assert_eq!(i_closed(&ctx, 2, 1).unwrap(), rat(1, 2880));
        assert_eq!(i_closed(&ctx, 1, 2).unwrap(), i_via_q(&ctx, 1, 2).unwrap());
        assert!(p_eval(0, 1).is_err());
    }

    #[test]
    fn routes_agree() {
        let ctx = Context::new();
        for g in 1..=5 {
            for k in 1..=7 {
                assert!(i_dual_route_check(&ctx, g, k).unwrap().equal);
                assert!(stirling_form_check(&ctx, g, k).unwrap().equal);
            }
            assert!(q_series_check(&ctx, g).unwrap().equal);
            assert!(sdsd_series_check(&ctx, g).unwrap().iter().all(|r| r.equal));
        }
        assert!(scaling_check(3, 8).unwrap().equal);
    }

    #[test]
    fn series_identities() {
        let ctx = Context::new();
        for k in 1..=4 {
            assert!(theorem2_check(&ctx, k, 16).unwrap().equal, "k={k}");
        }
        assert!(corollary1_check(&ctx, 12).unwrap().equal);
        assert!(corollary2_check(&ctx, 12).unwrap().equal);
        let g1 = g_series(&ctx, 1, 6).unwrap();
        assert_eq!(g1.coeffs()[2], rat(1, 24));
        assert_eq!(g1.coeffs()[4], rat(1, 2880));
        assert_eq!(g1.coeffs()[6], rat(1, 181440));
    }

    #[test]
    fn perturbations_detected() {
        let bad = Context::perturbed(crate::context::Perturbation::Bernoulli { index: 4 });
        assert!(!theorem2_check(&bad, 2, 12).unwrap().equal);
        let bad = Context::perturbed(crate::context::Perturbation::Stirling { n: 5, l: 2 });
        assert!(!stirling_form_check(&bad, 2, 3).unwrap().equal);
    }
}
