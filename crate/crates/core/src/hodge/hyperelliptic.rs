//! Socle evaluation of the hyperelliptic locus.

use crate::context::Context;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::series::{named_series, NamedSeries, Series1};

use super::integrals::{choose, fact, i_closed};

/// `H(t) = t^2/96 + sum_{g>=2} eps(H_g) t^{2g}`, solved from `(t^2 H)'' = -log cos(t/2)`.
pub fn h_series(order: usize) -> Series1 {
    let rhs = named_series(NamedSeries::NegLogCosHalf, 1, order).expect("d = 1");
    rhs.antiderivative()
        .antiderivative()
        .shift_down(2)
        .expect("double antiderivative vanishes to order 2")
}

/// `eps(H_g) = (2^{2g}-1)|B_{2g}|/((2g+2)! 2g)`.
pub fn hyperelliptic_closed(ctx: &Context, g: u64) -> Result<Rational> {
    require(g)?;
    let gi = g as i64;
    Ok((Rational::int_pow(2, 2 * gi) - Rational::one()) * ctx.bernoulli(2 * g as usize).abs()
        / (fact(2 * gi + 2) * Rational::from(2 * gi)))
}

/// `I(g,2)/(2g+2)`.
pub fn hyperelliptic_via_i(ctx: &Context, g: u64) -> Result<Rational> {
    require(g)?;
    Ok(i_closed(ctx, g, 2)? / Rational::from(2 * g + 2))
}

/// `t^{2g}` coefficient of `H`.
pub fn hyperelliptic_via_series(g: u64) -> Result<Rational> {
    require(g)?;
    Ok(h_series(2 * g as usize).coefficient(2 * g as usize)?.clone())
}

fn require(g: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::OutOfRange("hyperelliptic evaluation needs g >= 2".into()));
    }
    Ok(())
}

pub fn hyperelliptic_check(ctx: &Context, g: u64) -> Result<CheckReport> {
    let closed = hyperelliptic_closed(ctx, g)?;
    Ok(CheckReport::new(
        "hyperelliptic.routes",
        &[("g", g as i64)],
        vec![hyperelliptic_via_series(g)?, hyperelliptic_via_i(ctx, g)?],
        vec![closed.clone(), closed],
    ))
}

/// `1 + 1/2 sum_{h=1}^{g} C(2g+2, 2h) = 2^{2g}`.
pub fn binomial_sum_check(g: u64) -> CheckReport {
    let gi = g as i64;
    let sum: Rational = (1..=gi).map(|h| choose(2 * gi + 2, 2 * h)).sum();
    CheckReport::new(
        "hyperelliptic.binomial_sum",
        &[("g", gi)],
        Rational::one() + sum / Rational::from(2),
        Rational::int_pow(2, 2 * gi),
    )
}
