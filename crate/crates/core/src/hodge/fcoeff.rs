//! The localization coefficients `f_{gde}`, powers of the tree series, and
//! the identities assembled from them.

use crate::combinat::partitions_of;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{CheckReport, Digest};
use crate::series::{log_sinc, x_exp_neg_x, Series1};

use super::integrals::{choose, fact, q, sign};

/// How `C(x^r, tau^l)` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeRoute {
    /// Repeated multiplication of the tree series.
    Series,
    /// Lagrange inversion applied to `x e^{-x}`.
    Lagrange,
    /// `l! C(r-1, l-1) r^{r-l}/r!`.
    Closed,
}

/// `(1/l!) C(x^r, tau^l) = C(r-1, l-1) r^{r-l}/r!`, with `C(-1,-1) = 1` so that
/// `r = l = 0` gives 1.
pub fn lemma1_closed(r: u64, l: u64) -> Rational {
    if r == 0 {
        return if l == 0 { Rational::one() } else { Rational::zero() };
    }
    let (r, l) = (r as i64, l as i64);
    choose(r - 1, l - 1) * Rational::int_pow(r, r - l) / fact(r)
}

/// `C(x^r, tau(x)^l)`.
pub fn tree_power_coefficient(ctx: &Context, r: u64, l: u64, route: TreeRoute) -> Result<Rational> {
    match route {
        TreeRoute::Series => ctx.tree_powers(r as usize, l as usize).coefficient(r as usize, l as usize),
        TreeRoute::Lagrange => x_exp_neg_x((r as usize).max(1)).lagrange_power_coefficient(l as usize, r as usize),
        TreeRoute::Closed => Ok(fact(l as i64) * lemma1_closed(r, l)),
    }
}

/// How `f_{gde}` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FRoute {
    /// Tree-series coefficients from the given route.
    Tree(TreeRoute),
    /// Sum over partitions of `d - e`.
    Partition,
}

fn check_gde(g: u64, d: u64, e: u64) -> Result<()> {
    if g == 0 || e == 0 {
        return Err(Error::OutOfRange("f needs g, e >= 1".into()));
    }
    if d < e {
        return Err(Error::OutOfRange(format!("f needs d >= e, got d = {d}, e = {e}")));
    }
    Ok(())
}

/// `f_{gde} = e^{e+1}/e! sum_{l=0}^{2g} (2g+d-l-1)!/(2g-l)! (-d)^l/l! C(x^{d-e}, tau^l)`.
pub fn f_coeff(ctx: &Context, g: u64, d: u64, e: u64, route: FRoute) -> Result<Rational> {
    check_gde(g, d, e)?;
    let (gi, di, ei) = (g as i64, d as i64, e as i64);
    let mut total = Rational::zero();
    for l in 0..=(2 * gi).min(di - ei) {
        let weight = fact(2 * gi + di - l - 1) / fact(2 * gi - l) * Rational::int_pow(-di, l);
        let inner = match route {
            FRoute::Tree(tree) => tree_power_coefficient(ctx, d - e, l as u64, tree)? / fact(l),
            FRoute::Partition => partition_sum(d - e, l as usize),
        };
        total += weight * inner;
    }
    Ok(Rational::int_pow(ei, ei + 1) / fact(ei) * total)
}

/// `sum_{m in Part(n, l)} 1/|Aut m| prod m_i^{m_i-1}/m_i!`, which equals `C(x^n, tau^l)/l!`.
pub(crate) fn partition_sum(n: u64, l: usize) -> Rational {
    partitions_of(n, Some(l))
        .iter()
        .map(|m| {
            let prod: Rational = m
                .parts()
                .iter()
                .map(|&p| Rational::int_pow(p as i64, p as i64 - 1) / fact(p as i64))
                .product();
            prod / Rational::from(m.aut_order())
        })
        .sum()
}

/// Lemma 1: series-power and Lagrange routes against the closed form.
pub fn lemma1_check(ctx: &Context, r: u64, l: u64) -> Result<CheckReport> {
    let scale = fact(l as i64).recip();
    let lhs = vec![
        tree_power_coefficient(ctx, r, l, TreeRoute::Series)? * &scale,
        tree_power_coefficient(ctx, r, l, TreeRoute::Lagrange)? * &scale,
    ];
    let closed = lemma1_closed(r, l);
    Ok(CheckReport::new(
        "prop2.lemma1",
        &[("r", r as i64), ("l", l as i64)],
        lhs,
        vec![closed.clone(), closed],
    ))
}

/// `f_{gde}` by tree-series powers and by partitions, against the Lagrange route.
pub fn f_routes_check(ctx: &Context, g: u64, d: u64, e: u64) -> Result<CheckReport> {
    let lagrange = f_coeff(ctx, g, d, e, FRoute::Tree(TreeRoute::Lagrange))?;
    Ok(CheckReport::new(
        "prop1.f_routes",
        &[("g", g as i64), ("d", d as i64), ("e", e as i64)],
        vec![
            f_coeff(ctx, g, d, e, FRoute::Tree(TreeRoute::Series))?,
            f_coeff(ctx, g, d, e, FRoute::Partition)?,
        ],
        vec![lagrange.clone(), lagrange],
    ))
}

/// `sum_{e=1}^d sum_g Q_g^e f_{gde} t^{2g} = d^{d-1} log((dt/2)/sin(dt/2))` to order `order`.
pub fn prop1_check(ctx: &Context, d: u64, order: usize) -> Result<CheckReport> {
    if d == 0 {
        return Err(Error::OutOfRange("Proposition 1 needs d >= 1".into()));
    }
    let mut coeffs = vec![Rational::zero(); order + 1];
    for g in 1..=(order / 2) as u64 {
        let mut c = Rational::zero();
        for e in 1..=d {
            c += q(ctx, g, e)? * f_coeff(ctx, g, d, e, FRoute::Tree(TreeRoute::Series))?;
        }
        coeffs[2 * g as usize] = c;
    }
    let lhs = Series1::new(coeffs, order);
    let rhs = log_sinc(d, order).scale(&Rational::int_pow(d as i64, d as i64 - 1));
    Ok(CheckReport::new(
        "prop1.series",
        &[("d", d as i64), ("order", order as i64)],
        Digest::series(&lhs),
        Digest::series(&rhs),
    ))
}

/// `sum_{j=e}^k (-1)^{k-j} j^{k-j}/k C(k,j) f_{gje} = (2g+k-1)!/(2g)! (-1)^{k-e} e^k/k! C(k,e)`.
pub fn prop2_check(ctx: &Context, g: u64, k: u64, e: u64) -> Result<CheckReport> {
    if g == 0 || e == 0 || k < e {
        return Err(Error::OutOfRange("Proposition 2 needs g >= 1 and k >= e >= 1".into()));
    }
    let (gi, ki, ei) = (g as i64, k as i64, e as i64);
    let mut lhs = Rational::zero();
    for j in ei..=ki {
        lhs += sign(ki - j) * Rational::int_pow(j, ki - j) / Rational::from(ki) * choose(ki, j)
            * f_coeff(ctx, g, j as u64, e, FRoute::Tree(TreeRoute::Series))?;
    }
    let rhs = fact(2 * gi + ki - 1) / fact(2 * gi) * sign(ki - ei) * Rational::int_pow(ei, ki) / fact(ki)
        * choose(ki, ei);
    Ok(CheckReport::new("prop2.identity", &[("g", gi), ("k", ki), ("e", ei)], lhs, rhs))
}

/// `b^x` with `0^0 = 1` and `0^x = 0` otherwise.
fn power(b: i64, x: i64) -> Rational {
    if b == 0 {
        return if x == 0 { Rational::one() } else { Rational::zero() };
    }
    Rational::int_pow(b, x)
}

/// Shared summand of the coefficient-matching step.
fn chain_term(k: i64, e: i64, j: i64, l: i64) -> Rational {
    choose(k, j) * choose(j - 1, e - 1) * choose(j - e - 1, l - 1) * power(j, k - j + l) * power(e - j, j - e - l)
}

/// `sum_{j>e} sum_{l=1}^{j-e} C(2g+j-l-1, j-1) T(j,l)
///   = e^{k-e} C(k,e) (C(2g+k-1, k-1) - C(2g+e-1, e-1))`.
pub fn hples_check(g: u64, k: u64, e: u64) -> CheckReport {
    let (gi, ki, ei) = (g as i64, k as i64, e as i64);
    let mut lhs = Rational::zero();
    for j in ei + 1..=ki {
        for l in 1..=j - ei {
            lhs += choose(2 * gi + j - l - 1, j - 1) * chain_term(ki, ei, j, l);
        }
    }
    let rhs = power(ei, ki - ei) * choose(ki, ei) * (choose(2 * gi + ki - 1, ki - 1) - choose(2 * gi + ei - 1, ei - 1));
    CheckReport::new("prop2.hples", &[("g", gi), ("k", ki), ("e", ei)], lhs, rhs)
}

/// `sum_{j>e} sum_{l=1}^{j-e} C(j-e-l, t-l) T(j,l) = e^{k-e} C(k,e) C(k-e,t)` for `1 <= t <= k-e`.
pub fn pwp_check(k: u64, e: u64, t: u64) -> Result<CheckReport> {
    if e == 0 || t == 0 || e + t > k {
        return Err(Error::OutOfRange("pwp needs e >= 1 and 1 <= t <= k - e".into()));
    }
    let (ki, ei, ti) = (k as i64, e as i64, t as i64);
    let mut lhs = Rational::zero();
    for j in ei + 1..=ki {
        for l in 1..=j - ei {
            lhs += choose(j - ei - l, ti - l) * chain_term(ki, ei, j, l);
        }
    }
    let rhs = power(ei, ki - ei) * choose(ki, ei) * choose(ki - ei, ti);
    Ok(CheckReport::new("prop2.pwp", &[("k", ki), ("e", ei), ("t", ti)], lhs, rhs))
}

/// `sum_{s=0}^{z-t} C(z-t,s) (e+s+t)^{z-t-s} (-s-t)^{s-1} = -e^{z-t}/t` for `1 <= t <= z`.
pub fn weww_check(z: u64, t: u64, e: u64) -> Result<CheckReport> {
    if t == 0 || t > z {
        return Err(Error::OutOfRange("weww needs 1 <= t <= z".into()));
    }
    let (zi, ti, ei) = (z as i64, t as i64, e as i64);
    let lhs: Rational = (0..=zi - ti)
        .map(|s| choose(zi - ti, s) * power(ei + s + ti, zi - ti - s) * power(-s - ti, s - 1))
        .sum();
    let rhs = -power(ei, zi - ti) / Rational::from(ti);
    Ok(CheckReport::new("prop2.weww", &[("z", zi), ("t", ti), ("e", ei)], lhs, rhs))
}

/// `sum_{s=0}^n (-1)^s C(n,s) (s+t)^{n-1} = 0` for `n >= 1`.
pub fn kfgg_check(n: u64, t: i64) -> CheckReport {
    let ni = n as i64;
    let lhs: Rational = (0..=ni).map(|s| sign(s) * choose(ni, s) * power(s + t, ni - 1)).sum();
    CheckReport::new("prop2.kfgg", &[("n", ni), ("t", t)], lhs, Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Perturbation;
    use crate::rational::rat;

    #[test]
    fn spot_values() {
        let ctx = Context::new();
        for route in [
            FRoute::Tree(TreeRoute::Series),
            FRoute::Tree(TreeRoute::Lagrange),
            FRoute::Tree(TreeRoute::Closed),
            FRoute::Partition,
        ] {
            assert_eq!(f_coeff(&ctx, 1, 1, 1, route).unwrap(), rat(1, 1));
            assert_eq!(f_coeff(&ctx, 1, 2, 1, route).unwrap(), rat(-4, 1));
        }
        assert!(f_coeff(&ctx, 1, 1, 2, FRoute::Partition).is_err());
        assert_eq!(lemma1_closed(3, 2), rat(1, 1));
        assert_eq!(tree_power_coefficient(&ctx, 3, 2, TreeRoute::Series).unwrap(), rat(2, 1));
        assert_eq!(lemma1_closed(0, 0), rat(1, 1));
        assert_eq!(lemma1_closed(4, 0), rat(0, 1));
    }

    #[test]
    fn identities() {
        let ctx = Context::new();
        for r in 0..=8 {
            for l in 0..=r {
                assert!(lemma1_check(&ctx, r, l).unwrap().equal, "lemma1 {r} {l}");
            }
        }
        for d in 1..=3 {
            assert!(prop1_check(&ctx, d, 10).unwrap().equal, "prop1 {d}");
        }
        for g in 1..=3 {
            for k in 1..=6 {
                for e in 1..=k {
                    assert!(prop2_check(&ctx, g, k, e).unwrap().equal, "prop2 {g} {k} {e}");
                    assert!(hples_check(g, k, e).equal);
                    for t in 1..=k - e {
                        assert!(pwp_check(k, e, t).unwrap().equal);
                    }
                }
            }
        }
        for z in 1..=6 {
            for t in 1..=z {
                for e in 1..=4 {
                    assert!(weww_check(z, t, e).unwrap().equal);
                }
            }
        }
        for n in 1..=8 {
            for t in -4..=8 {
                assert!(kfgg_check(n, t).equal);
            }
        }
        assert_eq!(kfgg_check(3, 2).lhs, Digest::Scalar(rat(0, 1)));
    }

    #[test]
    fn tree_perturbation_detected() {
        let bad = Context::perturbed(Perturbation::TreeCoefficient { degree: 2 });
        assert!(!lemma1_check(&bad, 3, 2).unwrap().equal);
        assert!(!prop1_check(&bad, 3, 6).unwrap().equal);
    }
}
