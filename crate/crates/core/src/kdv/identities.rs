//! Checks of the bracket identities used in the first proof of the
//! `lambda_g lambda_{g-1}` socle formula.

use crate::combinat::{double_factorial, factorial};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::CheckReport;

use super::bracket::{one_point_value, split_by_mask};
use super::closed_forms::{d_from_table, three_point_f, two_point_d};
use super::TauZeroTable;

/// Bracket with signed indices; any negative index makes it zero.
pub(crate) fn br(ctx: &Context, idx: &[i64]) -> Rational {
    if idx.iter().any(|&d| d < 0) {
        return Rational::zero();
    }
    let idx: Vec<u32> = idx.iter().map(|&d| d as u32).collect();
    ctx.bracket(&idx).value
}

/// `(-1)^m / (24^m m!)`.
fn signed_exp_coeff(m: u32) -> Rational {
    let c = one_point_value(m);
    if m % 2 == 1 { -c } else { c }
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() }
}

/// `1/(2^{2g-1}(2g-1)!!)`.
pub fn theorem1_leading(g: u32) -> Rational {
    let df = double_factorial(2 * i64::from(g) - 1).expect("2g-1 >= -1");
    Rational::new(1, df) / Rational::int_pow(2, 2 * i64::from(g) - 1)
}

/// `sum_{h=1}^{g} (-1)^{g-h}/(24^{g-h}(g-h)!) <tau_{3h-g} tau_{g-1}> = 1/(24^g g!)`.
pub fn identity_four(ctx: &Context, g: u32) -> Result<CheckReport> {
    if g == 0 {
        return Err(Error::OutOfRange("identity four needs g >= 1".into()));
    }
    let gi = i64::from(g);
    let lhs: Rational = (1..=g)
        .map(|h| signed_exp_coeff(g - h) * br(ctx, &[3 * i64::from(h) - gi, gi - 1]))
        .sum();
    Ok(CheckReport::new("kdv.four", &[("g", gi)], lhs, one_point_value(g)))
}

/// `sum_j (-1)^j <tau_{2g-2-j} tau_j tau_{g-1}>`, a genus `g-1` sum.
pub fn five_lhs(ctx: &Context, g: u32) -> Rational {
    let gi = i64::from(g);
    (0..=2 * gi - 2)
        .map(|j| sign(j) * br(ctx, &[2 * gi - 2 - j, j, gi - 1]))
        .sum()
}

/// `g!/(2^{g-2}(2g)!)`.
pub fn five_rhs(g: u32) -> Rational {
    Rational::new(factorial(u64::from(g)), factorial(2 * u64::from(g))) / Rational::int_pow(2, i64::from(g) - 2)
}

/// The signed three-point sum against its closed value. The bracket sum has
/// genus `g - 1`, so the matching coefficient of `F` is `w^{g-1} z^{2g-2}`.
pub fn identity_five(ctx: &Context, g: u32) -> Result<CheckReport> {
    if g == 0 {
        return Err(Error::OutOfRange("identity five needs g >= 1".into()));
    }
    Ok(CheckReport::new("kdv.five", &[("g", i64::from(g))], five_lhs(ctx, g), five_rhs(g)))
}

/// The same closed value read off the closed form of `F`.
pub fn identity_five_via_f(g: u32) -> Result<CheckReport> {
    if g == 0 {
        return Err(Error::OutOfRange("identity five needs g >= 1".into()));
    }
    let g_us = g as usize;
    let f = three_point_f(3 * (g_us - 1));
    let coeff = f.coefficient(g_us - 1, 2 * g_us - 2)?.clone();
    Ok(CheckReport::new("kdv.five_f", &[("g", i64::from(g))], coeff, five_rhs(g)))
}

/// `sum_{h=0}^{g} (-1)^{g-h}/(24^{g-h}(g-h)!) <tau_0 tau_{3h-g+k} tau_{g-k}> = 0`.
pub fn identity_dfgf(ctx: &Context, g: u32, k: u32) -> Result<CheckReport> {
    if g == 0 || k == 0 {
        return Err(Error::OutOfRange("identity dfgf needs g, k >= 1".into()));
    }
    let (gi, ki) = (i64::from(g), i64::from(k));
    let lhs: Rational = (0..=g)
        .map(|h| signed_exp_coeff(g - h) * br(ctx, &[0, 3 * i64::from(h) - gi + ki, gi - ki]))
        .sum();
    Ok(CheckReport::new("kdv.dfgf", &[("g", gi), ("k", ki)], lhs, Rational::zero()))
}

/// Which presentation of the trailing `h`-sum to use in the assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nv1Form {
    /// `sum_{h=1}^{g-1} (-1)^{g-h}/(24^{g-h}(g-h)!) <tau_{3h-g} tau_{g-1}>`.
    Simplified,
    /// `1/2 sum_{h=1}^{g-1} [(-1)^{g-h}<tau_{3h-g} tau_{g-1}><tau_{3g-3h-2}>
    ///  + (-1)^h <tau_{3h-2}><tau_{2g-3h} tau_{g-1}>]`.
    Unsimplified,
}

/// The h-sum of the assembly in either presentation.
pub fn nv1_h_sum(ctx: &Context, g: u32, form: Nv1Form) -> Rational {
    let gi = i64::from(g);
    match form {
        Nv1Form::Simplified => (1..g)
            .map(|h| signed_exp_coeff(g - h) * br(ctx, &[3 * i64::from(h) - gi, gi - 1]))
            .sum(),
        Nv1Form::Unsimplified => {
            let s: Rational = (1..gi)
                .map(|h| {
                    sign(gi - h) * br(ctx, &[3 * h - gi, gi - 1]) * br(ctx, &[3 * gi - 3 * h - 2])
                        + sign(h) * br(ctx, &[3 * h - 2]) * br(ctx, &[2 * gi - 3 * h, gi - 1])
                })
                .sum();
            s / Rational::from(2)
        }
    }
}

/// Assembles `<tau_{2g} tau_{g-1}> - <tau_{3g-2}> + 1/2 sum_j (-1)^j <tau_{2g-2-j} tau_j tau_{g-1}>`
/// plus the h-sum, which should equal `1/(2^{2g-1}(2g-1)!!)`.
pub fn theorem1_via_kdv(ctx: &Context, g: u32, form: Nv1Form) -> Result<Rational> {
    if g < 1 {
        return Err(Error::OutOfRange("the assembly needs g >= 1".into()));
    }
    let gi = i64::from(g);
    Ok(br(ctx, &[2 * gi, gi - 1]) - br(ctx, &[3 * gi - 2]) + five_lhs(ctx, g) / Rational::from(2)
        + nv1_h_sum(ctx, g, form))
}

/// Engine value of `<tau_{3g-2}>` against `1/(24^g g!)`.
pub fn one_point_check(ctx: &Context, g: u32) -> CheckReport {
    CheckReport::new(
        "kdv.one_point",
        &[("g", i64::from(g))],
        ctx.bracket(&[3 * g - 2]).value,
        one_point_value(g),
    )
}

/// Both sides of the KdV coefficient equation
/// `(2n+1)<tau_n tau_0^2 T> = 1/4 <tau_{n-1} tau_0^4 T>
///   + sum_{T = T1 T2} (<tau_{n-1} tau_0 T1><tau_0^3 T2> + 2<tau_{n-1} tau_0^2 T1><tau_0^2 T2>)`,
/// for `n >= 1`.
pub fn brief0_sides(ctx: &Context, n: u32, t: &[u32]) -> (Rational, Rational) {
    let with = |extra: &[u32], part: &[u32]| {
        let mut v = part.to_vec();
        v.extend_from_slice(extra);
        ctx.bracket(&v).value
    };
    assert!(n >= 1, "the KdV coefficient equation needs n >= 1");
    let lhs = Rational::from(2 * n + 1) * with(&[n, 0, 0], t);
    let m = n - 1;
    let mut rhs = with(&[m, 0, 0, 0, 0], t) / Rational::from(4);
    for mask in 0..(1u32 << t.len()) {
        let (t1, t2) = split_by_mask(t, mask);
        rhs += with(&[m, 0], &t1) * with(&[0, 0, 0], &t2);
        rhs += Rational::from(2) * with(&[m, 0, 0], &t1) * with(&[0, 0], &t2);
    }
    (lhs, rhs)
}

/// The KdV coefficient equation for all `T` of the given length (1 or 2) with
/// `n + sum(T) <= max_sum`, aggregated into one report.
pub fn brief0_check(ctx: &Context, n: u32, t_len: usize, max_sum: u32) -> CheckReport {
    let mut ts: Vec<Vec<u32>> = Vec::new();
    let budget = max_sum.saturating_sub(n);
    match t_len {
        1 => ts.extend((0..=budget).map(|b| vec![b])),
        _ => {
            for b in 0..=budget {
                for c in b..=budget - b {
                    ts.push(vec![b, c]);
                }
            }
        }
    }
    let (lhs, rhs): (Vec<_>, Vec<_>) = ts.iter().map(|t| brief0_sides(ctx, n, t)).unzip();
    CheckReport::new("kdv.brief0", &[("n", i64::from(n)), ("points", t_len as i64)], lhs, rhs)
}

/// `<tau_0 tau_a tau_b>` from the table against the closed form of `D`, by antidiagonal.
pub fn table_vs_closed_form(table: &TauZeroTable, s: usize) -> Result<CheckReport> {
    let d = two_point_d(s);
    let lhs = (0..=s).map(|a| table.get(a, s - a)).collect::<Result<Vec<_>>>()?;
    let rhs = (0..=s).map(|a| d.coefficient(a, s - a).cloned()).collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new("kdv.d_table", &[("sum", s as i64)], lhs, rhs))
}

/// The general engine against the closed form of `D`, by antidiagonal.
pub fn engine_vs_closed_form(ctx: &Context, s: usize) -> Result<CheckReport> {
    let d = two_point_d(s);
    let lhs = (0..=s as u32).map(|a| ctx.bracket(&[0, a, s as u32 - a]).value).collect::<Vec<_>>();
    let rhs = (0..=s).map(|a| d.coefficient(a, s - a).cloned()).collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new("kdv.d_engine", &[("sum", s as i64)], lhs, rhs))
}

/// The whole table packaged as a series, against the closed form.
pub fn table_series_check(table: &TauZeroTable, order: usize) -> Result<CheckReport> {
    let lhs = d_from_table(table, order)?;
    Ok(CheckReport::new(
        "kdv.d_series",
        &[("order", order as i64)],
        crate::report::Digest::bivariate(&lhs),
        crate::report::Digest::bivariate(&two_point_d(order)),
    ))
}

/// Coefficient `w^a z^m` of `F` against `sum_{b+c=m} (-1)^c <tau_a tau_b tau_c>`, by total degree.
pub fn f_vs_engine(ctx: &Context, degree: usize) -> Result<CheckReport> {
    let f = three_point_f(degree);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..=degree {
        let m = degree - a;
        lhs.push(f.coefficient(a, m)?.clone());
        rhs.push(
            (0..=m)
                .map(|c| sign(c as i64) * ctx.bracket(&[a as u32, (m - c) as u32, c as u32]).value)
                .sum(),
        );
    }
    Ok(CheckReport::new("kdv.f_engine", &[("degree", degree as i64)], lhs, rhs))
}

/// String equation `<tau_0 tau_a tau_b> = <tau_{a-1} tau_b> + <tau_a tau_{b-1}>` on
/// the tables, along the antidiagonal `a + b = s`.
pub fn string_on_tables(table: &TauZeroTable, s: usize) -> Result<CheckReport> {
    let two = |a: usize, b: usize| -> Result<Rational> {
        if a == usize::MAX || b == usize::MAX { Ok(Rational::zero()) } else { table.two_point(a, b) }
    };
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..=s {
        let b = s - a;
        lhs.push(table.get(a, b)?);
        rhs.push(two(a.wrapping_sub(1), b)? + two(a, b.wrapping_sub(1))?);
    }
    Ok(CheckReport::new("kdv.string", &[("sum", s as i64)], lhs, rhs))
}

/// Dilaton equation on the tables at genus `g`:
/// `<tau_0 tau_1 tau_{3g-1}> = 2g <tau_0 tau_{3g-1}>` and
/// `<tau_1 tau_{3g-2}> = (2g-1) <tau_{3g-2}>`.
pub fn dilaton_on_tables(table: &TauZeroTable, g: u32) -> Result<CheckReport> {
    let gu = g as usize;
    let lhs = vec![table.get(1, 3 * gu - 1)?, table.two_point(1, 3 * gu - 2)?];
    let rhs = vec![
        Rational::from(2 * g) * table.two_point(0, 3 * gu - 1)?,
        Rational::from(2 * g - 1) * one_point_value(g),
    ];
    Ok(CheckReport::new("kdv.dilaton", &[("g", i64::from(g))], lhs, rhs))
}

/// Engine against the two-point table along `a + b = s`.
pub fn two_point_engine_check(ctx: &Context, table: &TauZeroTable, s: usize) -> Result<CheckReport> {
    let lhs = (0..=s).map(|a| table.two_point(a, s - a)).collect::<Result<Vec<_>>>()?;
    let rhs = (0..=s as u32).map(|a| ctx.bracket(&[a, s as u32 - a]).value).collect::<Vec<_>>();
    Ok(CheckReport::new("kdv.two_point", &[("sum", s as i64)], lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn named_identities() {
        let ctx = Context::new();
        for g in 1..=6 {
            assert!(identity_four(&ctx, g).unwrap().equal, "four {g}");
            assert!(identity_five(&ctx, g).unwrap().equal, "five {g}");
            assert!(identity_five_via_f(g).unwrap().equal, "five_f {g}");
            for k in 1..=4 {
                assert!(identity_dfgf(&ctx, g, k).unwrap().equal, "dfgf {g} {k}");
            }
        }
        assert_eq!(five_rhs(2), rat(1, 12));
    }

    #[test]
    fn assembly_both_forms() {
        let ctx = Context::new();
        assert_eq!(theorem1_via_kdv(&ctx, 2, Nv1Form::Simplified).unwrap(), rat(1, 24));
        assert_eq!(theorem1_via_kdv(&ctx, 3, Nv1Form::Simplified).unwrap(), rat(1, 480));
        assert_eq!(theorem1_via_kdv(&ctx, 4, Nv1Form::Simplified).unwrap(), rat(1, 13440));
        for g in 2..=7 {
            assert_eq!(nv1_h_sum(&ctx, g, Nv1Form::Simplified), nv1_h_sum(&ctx, g, Nv1Form::Unsimplified));
            assert_eq!(theorem1_via_kdv(&ctx, g, Nv1Form::Unsimplified).unwrap(), theorem1_leading(g));
        }
        assert_eq!(theorem1_via_kdv(&ctx, 1, Nv1Form::Simplified).unwrap(), rat(1, 2));
        assert!(theorem1_via_kdv(&ctx, 0, Nv1Form::Simplified).is_err());
    }

    #[test]
    fn kdv_equation_instances() {
        let ctx = Context::new();
        for n in 1..=6 {
            assert!(brief0_check(&ctx, n, 1, 10).equal);
            assert!(brief0_check(&ctx, n, 2, 10).equal);
        }
    }

    #[test]
    fn tables_and_closed_forms() {
        let ctx = Context::new();
        let table = TauZeroTable::build(15);
        for s in 0..=15 {
            assert!(table_vs_closed_form(&table, s).unwrap().equal);
            assert!(engine_vs_closed_form(&ctx, s).unwrap().equal);
            assert!(f_vs_engine(&ctx, s).unwrap().equal, "F degree {s}");
            assert!(string_on_tables(&table, s).unwrap().equal || s == 0, "string {s}");
        }
        for g in 1..=4 {
            assert!(dilaton_on_tables(&table, g).unwrap().equal);
        }
    }
}
