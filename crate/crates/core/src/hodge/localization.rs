//! Reconstruction of the vanishing localization integral `P(g,d)` from its
//! graph contributions.
//!
//! With `S(t) = (t/2)/sin(t/2)`, the one-vertex term is
//! `-(-1)^{d-g} d^{d-2} d^{2g} [t^{2g}] S log S`, and the comb graphs with
//! data `(h, e, m)`, `m` a partition of `d - e` of length `l <= 2h`, give
//! `(-1)^{d-g}/d Q_h^e e^{e+1}/e! (2h+d-l-1)!/(2h-l)! (-d)^l/|Aut m|
//!  prod m_i^{m_i-1}/m_i! d^{2g-2h} [t^{2g-2h}] S`.
//! The `h = g` factor `[t^0] S = 1` is the unstable genus-zero convention.

use crate::combinat::partitions_of;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::series::{named_series, NamedSeries};

use super::integrals::{fact, q, sign};

/// Every graph contribution, the one-vertex term first.
pub fn localization_terms(ctx: &Context, g: u64, d: u64) -> Result<Vec<Rational>> {
    if g == 0 || d == 0 {
        return Err(Error::OutOfRange("localization needs g, d >= 1".into()));
    }
    let (gi, di) = (g as i64, d as i64);
    let order = 2 * g as usize;
    let s = named_series(NamedSeries::Sinc, 1, order)?;
    let sl = named_series(NamedSeries::SincLogSinc, 1, order)?;
    let eps = sign(di - gi);
    let mut terms = vec![-&eps * Rational::int_pow(di, di - 2) * Rational::int_pow(di, 2 * gi) * sl.coefficient(order)?];
    for h in 1..=gi {
        let tail = Rational::int_pow(di, 2 * gi - 2 * h) * s.coefficient((2 * gi - 2 * h) as usize)?;
        for e in 1..=di {
            let head = &eps / Rational::from(di) * q(ctx, h as u64, e as u64)? * Rational::int_pow(e, e + 1) / fact(e);
            for l in 0..=(2 * h).min(di - e) {
                let weight = fact(2 * h + di - l - 1) / fact(2 * h - l) * Rational::int_pow(-di, l);
                for m in partitions_of((di - e) as u64, Some(l as usize)) {
                    let prod: Rational = m
                        .parts()
                        .iter()
                        .map(|&p| Rational::int_pow(p as i64, p as i64 - 1) / fact(p as i64))
                        .product();
                    terms.push(&head * &weight * prod / Rational::from(m.aut_order()) * &tail);
                }
            }
        }
    }
    Ok(terms)
}

/// `P(g,d) = 0`.
pub fn localization_check(ctx: &Context, g: u64, d: u64) -> Result<CheckReport> {
    let total: Rational = localization_terms(ctx, g, d)?.into_iter().sum();
    Ok(CheckReport::new(
        "localization.vanishing",
        &[("g", g as i64), ("d", d as i64)],
        total,
        Rational::zero(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishes() {
        let ctx = Context::new();
        for g in 1..=4 {
            for d in 1..=4 {
                assert!(localization_check(&ctx, g, d).unwrap().equal, "g={g} d={d}");
            }
        }
        assert_eq!(localization_terms(&ctx, 1, 1).unwrap().len(), 2);
    }

    #[test]
    fn perturbation_detected() {
        let bad = Context::perturbed(crate::context::Perturbation::Bernoulli { index: 2 });
        assert!(!localization_check(&bad, 1, 1).unwrap().equal);
    }
}
