use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::Series1;

/// Truncated power series in `w` and `z`, known on all monomials `w^a z^b`
/// with total degree `a + b <= order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series2 {
    // rows[a][b] is the coefficient of w^a z^b, with b <= order - a
    rows: Vec<Vec<Rational>>,
    order: usize,
}

impl Series2 {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (0..=order)
            .map(|a| (0..=order - a).map(|b| f(a, b)).collect())
            .collect();
        Series2 { rows, order }
    }

    pub fn zero(order: usize) -> Self {
        Series2::from_fn(order, |_, _| Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        Series2::monomial(Rational::one(), 0, 0, order)
    }

    pub fn monomial(c: Rational, a: usize, b: usize, order: usize) -> Self {
        let mut s = Series2::zero(order);
        if a + b <= order {
            s.rows[a][b] = c;
        }
        s
    }

    pub fn var_w(order: usize) -> Self {
        Series2::monomial(Rational::one(), 1, 0, order)
    }

    pub fn var_z(order: usize) -> Self {
        Series2::monomial(Rational::one(), 0, 1, order)
    }

    /// A series in `w` alone.
    pub fn from_w(s: &Series1) -> Self {
        Series2::from_fn(s.order(), |a, b| {
            if b == 0 { s.coeffs()[a].clone() } else { Rational::zero() }
        })
    }

    /// A series in `z` alone.
    pub fn from_z(s: &Series1) -> Self {
        Series2::from_fn(s.order(), |a, b| {
            if a == 0 { s.coeffs()[b].clone() } else { Rational::zero() }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `w^a z^b`; errors past the truncation order.
    pub fn coefficient(&self, a: usize, b: usize) -> Result<&Rational> {
        if a + b > self.order {
            return Err(Error::BeyondTruncation { degree: a + b, order: self.order });
        }
        Ok(&self.rows[a][b])
    }

    pub(crate) fn at(&self, a: usize, b: usize) -> &Rational {
        &self.rows[a][b]
    }

    pub fn set(&mut self, a: usize, b: usize, c: Rational) {
        assert!(a + b <= self.order, "monomial beyond truncation order");
        self.rows[a][b] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend truncation order");
        Series2::from_fn(order, |a, b| self.rows[a][b].clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series2::from_fn(self.order, |a, b| &self.rows[a][b] * c)
    }

    /// Multiplies by `w^i z^j`; the product is known to `order + i + j`.
    pub fn mul_monomial(&self, i: usize, j: usize) -> Self {
        Series2::from_fn(self.order + i + j, |a, b| {
            if a >= i && b >= j {
                self.rows[a - i][b - j].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// `d/dw`; order drops by one.
    pub fn partial_w(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::BeyondTruncation { degree: 1, order: 0 });
        }
        Ok(Series2::from_fn(self.order - 1, |a, b| {
            &self.rows[a + 1][b] * Rational::from(a + 1)
        }))
    }

    /// `f(w, 0)`, still as a bivariate series.
    pub fn at_z_zero(&self) -> Self {
        Series2::from_fn(self.order, |a, b| {
            if b == 0 { self.rows[a][0].clone() } else { Rational::zero() }
        })
    }

    /// `f(0, z)`.
    pub fn at_w_zero(&self) -> Self {
        Series2::from_fn(self.order, |a, b| {
            if a == 0 { self.rows[0][b].clone() } else { Rational::zero() }
        })
    }

    /// `f(w, -z)`.
    pub fn negate_z(&self) -> Self {
        Series2::from_fn(self.order, |a, b| {
            if b % 2 == 1 { -&self.rows[a][b] } else { self.rows[a][b].clone() }
        })
    }

    /// `exp(f)` for `f(0,0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.rows[0][0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Series2::one(self.order);
        let mut power = Series2::one(self.order);
        for k in 1..=self.order {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power.scale(&Rational::from(crate::combinat::factorial(k as u64)).recip());
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Rational::is_zero)
    }

    /// Monomials `(a, b, coefficient)` with nonzero coefficient, by total degree then `a`.
    pub fn nonzero_terms(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for deg in 0..=self.order {
            for a in 0..=deg {
                let c = &self.rows[a][deg - a];
                if !c.is_zero() {
                    out.push((a, deg - a, c.clone()));
                }
            }
        }
        out
    }

    /// Coefficients listed by total degree, then by ascending power of `w`.
    pub fn graded_coefficients(&self) -> Vec<Vec<Rational>> {
        (0..=self.order)
            .map(|deg| (0..=deg).map(|a| self.rows[a][deg - a].clone()).collect())
            .collect()
    }
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, rhs: &Series2) -> Series2 {
        Series2::from_fn(self.order.min(rhs.order), |a, b| &self.rows[a][b] + &rhs.rows[a][b])
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, rhs: &Series2) -> Series2 {
        Series2::from_fn(self.order.min(rhs.order), |a, b| &self.rows[a][b] - &rhs.rows[a][b])
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        let mut out = Series2::zero(order);
        for a1 in 0..=order {
            for b1 in 0..=order - a1 {
                let x = &self.rows[a1][b1];
                if x.is_zero() {
                    continue;
                }
                let left = order - a1 - b1;
                for a2 in 0..=left {
                    for b2 in 0..=left - a2 {
                        let y = &rhs.rows[a2][b2];
                        if !y.is_zero() {
                            out.rows[a1 + a2][b1 + b2] += x * y;
                        }
                    }
                }
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for Series2 {
            type Output = Series2;
            fn $method(self, rhs: Series2) -> Series2 {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);
