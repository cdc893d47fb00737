//! The handful of named series everything else is built from.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::Series1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedSeries {
    /// `(dt/2) / sin(dt/2)`
    Sinc,
    /// `log((dt/2) / sin(dt/2))`
    LogSinc,
    /// `(dt/2)/sin(dt/2) * log((dt/2)/sin(dt/2))`
    SincLogSinc,
    /// `-log(cos(t/2))`
    NegLogCosHalf,
    /// Tree function, the compositional inverse of `x e^{-x}`.
    Tree,
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sinc" => NamedSeries::Sinc,
            "log_sinc" => NamedSeries::LogSinc,
            "sinc_log_sinc" => NamedSeries::SincLogSinc,
            "neg_log_cos_half" => NamedSeries::NegLogCosHalf,
            "tau" | "tree" => NamedSeries::Tree,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedSeries::Sinc => "sinc",
            NamedSeries::LogSinc => "log_sinc",
            NamedSeries::SincLogSinc => "sinc_log_sinc",
            NamedSeries::NegLogCosHalf => "neg_log_cos_half",
            NamedSeries::Tree => "tau",
        })
    }
}

/// Builds a named series to the given order. `d` scales the argument of the
/// sine-based families and is ignored by the others.
pub fn named_series(name: NamedSeries, d: u64, order: usize) -> Result<Series1> {
    if d == 0 {
        return Err(Error::OutOfRange("scaling parameter d must be positive".into()));
    }
    match name {
        NamedSeries::Sinc => Ok(sinc(d, order)),
        NamedSeries::LogSinc => sinc(d, order).log(),
        NamedSeries::SincLogSinc => {
            let s = sinc(d, order);
            Ok(&s * &s.log()?)
        }
        NamedSeries::NegLogCosHalf => {
            let half = Rational::new(1, 2);
            Ok(-&Series1::cos(order).log()?.scale_var(&half))
        }
        NamedSeries::Tree => Ok(tree_series(order)),
    }
}

/// `(dt/2)/sin(dt/2)`.
pub fn sinc(d: u64, order: usize) -> Series1 {
    let sin_over_t = Series1::sin(order + 1)
        .shift_down(1)
        .expect("sin has zero constant term");
    sin_over_t
        .recip()
        .expect("sin(t)/t has constant term 1")
        .scale_var(&Rational::new(d as i64, 2))
}

/// `log((dt/2)/sin(dt/2))`.
pub fn log_sinc(d: u64, order: usize) -> Series1 {
    sinc(d, order).log().expect("sinc has constant term 1")
}

/// `tau(x) = sum r^(r-1)/r! x^r`, obtained by reverting `x e^{-x}`.
pub fn tree_series(order: usize) -> Series1 {
    x_exp_neg_x(order.max(1))
        .reversion()
        .expect("x e^-x is reversible")
        .truncate(order)
}

pub(crate) fn x_exp_neg_x(order: usize) -> Series1 {
    let e = Series1::var(order).scale(&-Rational::one()).exp().expect("zero constant term");
    e.shift_up(1).truncate(order)
}

/// Powers `tau^0, tau^1, ..., tau^max_power`, each to the same order.
/// Built by repeated multiplication, independently of the Lagrange route.
#[derive(Debug, Clone)]
pub struct TreePowers {
    powers: Vec<Series1>,
    order: usize,
}

impl TreePowers {
    pub fn new(tau: &Series1, max_power: usize) -> Self {
        let order = tau.order();
        let mut powers = vec![Series1::one(order)];
        for l in 1..=max_power {
            let next = &powers[l - 1] * tau;
            powers.push(next);
        }
        TreePowers { powers, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn max_power(&self) -> usize {
        self.powers.len() - 1
    }

    /// `C(x^r, tau^l)`.
    pub fn coefficient(&self, r: usize, l: usize) -> Result<Rational> {
        if l > self.max_power() {
            return Err(Error::OutOfRange(format!("tau power {l} not tabulated")));
        }
        self.powers[l].coefficient(r).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn log_sinc_coefficients() {
        let s = named_series(NamedSeries::LogSinc, 1, 8).unwrap();
        assert_eq!(s.coeffs()[2], rat(1, 24));
        assert_eq!(s.coeffs()[4], rat(1, 2880));
        assert_eq!(s.coeffs()[6], rat(1, 181440));
        assert!(s.coeffs()[1].is_zero() && s.coeffs()[3].is_zero());
    }

    #[test]
    fn neg_log_cos_half() {
        let s = named_series(NamedSeries::NegLogCosHalf, 1, 6).unwrap();
        assert_eq!(s.coeffs()[2], rat(1, 8));
        assert_eq!(s.coeffs()[4], rat(1, 192));
        assert_eq!(s.coeffs()[6], rat(1, 2880));
    }

    #[test]
    fn sinc_scaling() {
        for d in 1..=5u64 {
            let s = sinc(d, 6);
            assert_eq!(s.coeffs()[2], rat((d * d) as i64, 24));
            assert_eq!(s.coeffs()[4], sinc(1, 6).coeffs()[4].clone() * Rational::from(d.pow(4)));
        }
    }

    #[test]
    fn tree_coefficients() {
        let tau = tree_series(12);
        for r in 1..=12u64 {
            let want = Rational::new(
                num_traits::pow(num_bigint::BigInt::from(r), (r - 1) as usize),
                crate::combinat::factorial(r),
            );
            assert_eq!(tau.coeffs()[r as usize], want);
        }
        let pw = TreePowers::new(&tau, 4);
        assert_eq!(pw.coefficient(2, 1).unwrap(), rat(1, 1));
        assert_eq!(pw.coefficient(3, 2).unwrap(), rat(2, 1));
        assert!(pw.coefficient(13, 1).is_err());
    }

    #[test]
    fn unknown_name() {
        assert!("cosh".parse::<NamedSeries>().is_err());
        assert!(named_series(NamedSeries::Sinc, 0, 4).is_err());
    }
}
