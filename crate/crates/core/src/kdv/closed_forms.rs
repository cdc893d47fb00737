//! Closed forms of the two-point function `D(w,z) = sum <tau_0 tau_a tau_b> w^a z^b`
//! and of the specialized three-point function `F(w,z)`, with the
//! differential equations they satisfy.

use crate::combinat::{binomial, factorial};
use crate::rational::Rational;
use crate::report::{CheckReport, Digest};
use crate::series::{Series1, Series2};

fn exp_cube_over_24(order: usize, w: bool, z: bool) -> Series2 {
    let c = Rational::new(1, 24);
    let mut arg = Series2::zero(order);
    if w && order >= 3 {
        arg.set(3, 0, c.clone());
    }
    if z && order >= 3 {
        arg.set(0, 3, c);
    }
    arg.exp().expect("zero constant term")
}

/// `D(w,z) = exp((w^3+z^3)/24) sum n!/(2n+1)! [wz(w+z)/2]^n` to total degree `order`.
pub fn two_point_d(order: usize) -> Series2 {
    let half = Rational::new(1, 2);
    let mut u = Series2::zero(order);
    if order >= 3 {
        u.set(2, 1, half.clone());
        u.set(1, 2, half);
    }
    let mut sum = Series2::one(order);
    let mut power = Series2::one(order);
    for n in 1..=order / 3 {
        power = &power * &u;
        let c = Rational::new(factorial(n as u64), factorial(2 * n as u64 + 1));
        sum = &sum + &power.scale(&c);
    }
    &exp_cube_over_24(order, true, true) * &sum
}

/// `F(w,z) = exp(w^3/24) sum_{a,b} (w^3)^a (w z^2)^b (a+b)!/(2^{a+b-1}(2a+2b+2)!) C(a+b+1, 2a+1)`.
pub fn three_point_f(order: usize) -> Series2 {
    let mut sum = Series2::zero(order);
    for a in 0..=order / 3 {
        for b in 0..=(order / 3 - a) {
            let n = (a + b) as u64;
            let c = Rational::new(
                factorial(n) * binomial(n as i64 + 1, 2 * a as i64 + 1) * 2,
                num_traits::pow(num_bigint::BigInt::from(2), n as usize) * factorial(2 * n + 2),
            );
            if !c.is_zero() {
                sum.set(3 * a + b, 2 * b, c);
            }
        }
    }
    &exp_cube_over_24(order, true, false) * &sum
}

/// The table `<tau_0 tau_a tau_b>` packaged as a series, for comparison with `two_point_d`.
pub fn d_from_table(table: &super::TauZeroTable, order: usize) -> crate::error::Result<Series2> {
    let mut s = Series2::zero(order);
    for a in 0..=order {
        for b in 0..=order - a {
            s.set(a, b, table.get(a, b)?);
        }
    }
    Ok(s)
}

fn w_plus_z(s: &Series2) -> Series2 {
    &s.mul_monomial(1, 0) + &s.mul_monomial(0, 1)
}

/// Residual check of
/// `(2w d/dw + 1)((w+z)D) = 1/4 (w+z)^3 w D + w D + D(w,0) z D(0,z) + 2w D(w,0) D(0,z)`
/// to total degree `d.order()`.
pub fn verify_d_pde(d: &Series2) -> CheckReport {
    let n = d.order();
    let lhs = {
        let wd = w_plus_z(d);
        let dw = wd.partial_w().expect("order >= 1");
        &dw.mul_monomial(1, 0).scale(&Rational::from(2)) + &wd.truncate(n)
    };
    let rhs = {
        let cube = w_plus_z(&w_plus_z(&w_plus_z(d)));
        let first = cube.mul_monomial(1, 0).scale(&Rational::new(1, 4));
        let dw0 = d.at_z_zero();
        let d0z = d.at_w_zero();
        let boundary = &dw0 * &d0z;
        let sum = &(&first + &d.mul_monomial(1, 0)) + &boundary.mul_monomial(0, 1);
        &sum + &boundary.mul_monomial(1, 0).scale(&Rational::from(2))
    };
    CheckReport::new(
        "kdv.d_pde",
        &[("order", n as i64)],
        Digest::bivariate(&lhs.truncate(n)),
        Digest::bivariate(&rhs.truncate(n)),
    )
}

/// Residual check of
/// `4w^2 F + 2w^3 dF/dw - 1/4 w^5 F = w(2w+z) D(w,z) D(0,-z) + w(2w-z) D(w,-z) D(0,z)`
/// to total degree `f.order()`.
pub fn verify_f_ode(f: &Series2, d: &Series2) -> CheckReport {
    let n = f.order().min(d.order());
    let lhs = {
        let a = f.mul_monomial(2, 0).scale(&Rational::from(4));
        let b = f.partial_w().expect("order >= 1").mul_monomial(3, 0).scale(&Rational::from(2));
        let c = f.mul_monomial(5, 0).scale(&Rational::new(1, 4));
        &(&a + &b) - &c
    };
    let rhs = {
        let d0z = d.at_w_zero();
        let d0mz = d0z.negate_z();
        let dwmz = d.negate_z();
        let p = &(d * &d0mz);
        let q = &(&dwmz * &d0z);
        let p = &p.mul_monomial(2, 0).scale(&Rational::from(2)) + &p.mul_monomial(1, 1);
        let q = &q.mul_monomial(2, 0).scale(&Rational::from(2)) - &q.mul_monomial(1, 1);
        &p + &q
    };
    CheckReport::new(
        "kdv.f_ode",
        &[("order", n as i64)],
        Digest::bivariate(&lhs.truncate(n)),
        Digest::bivariate(&rhs.truncate(n)),
    )
}

/// `D(w,0)`, which should be `exp(w^3/24)`.
pub fn d_boundary(order: usize) -> (Series1, Series1) {
    let d = two_point_d(order);
    let along_w = Series1::from_fn(order, |a| d.at(a, 0).clone());
    let expected = Series1::from_fn(order, |a| {
        if a % 3 == 0 {
            Rational::new(1, num_traits::pow(num_bigint::BigInt::from(24), a / 3) * factorial(a as u64 / 3))
        } else {
            Rational::zero()
        }
    });
    (along_w, expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn d_coefficients() {
        let d = two_point_d(9);
        assert_eq!(*d.coefficient(0, 0).unwrap(), rat(1, 1));
        assert!(d.coefficient(1, 1).unwrap().is_zero());
        assert_eq!(*d.coefficient(2, 1).unwrap(), rat(1, 12));
        let (got, want) = d_boundary(12);
        assert_eq!(got, want);
    }

    #[test]
    fn f_coefficients() {
        let f = three_point_f(15);
        assert_eq!(*f.coefficient(0, 0).unwrap(), rat(1, 1));
        assert_eq!(*f.coefficient(1, 2).unwrap(), rat(1, 12));
        for g in 1..=5u64 {
            let want = Rational::new(
                factorial(g + 1),
                num_traits::pow(num_bigint::BigInt::from(2), g as usize - 1) * factorial(2 * g + 2),
            );
            assert_eq!(*f.coefficient(g as usize, 2 * g as usize).unwrap(), want);
        }
    }

    #[test]
    fn residuals_vanish_and_detect_perturbation() {
        let d = two_point_d(12);
        let f = three_point_f(12);
        assert!(verify_d_pde(&d).equal);
        assert!(verify_f_ode(&f, &d).equal);
        let mut bad = d.clone();
        bad.set(3, 3, bad.at(3, 3) + &Rational::one());
        assert!(!verify_d_pde(&bad).equal);
        let mut bad = f.clone();
        bad.set(2, 4, bad.at(2, 4) + &Rational::one());
        assert!(!verify_f_ode(&bad, &d).equal);
    }
}
