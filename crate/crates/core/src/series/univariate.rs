use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Truncated power series in one variable: coefficients of degrees `0..=order`
/// are known, everything above is unknown (not zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series1 {
    coeffs: Vec<Rational>,
    order: usize,
}

impl Series1 {
    /// Builds a series known to `order`; missing coefficients are zero and
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series1 { coeffs, order }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series1 {
            coeffs: (0..=order).map(f).collect(),
            order,
        }
    }

    pub fn zero(order: usize) -> Self {
        Series1::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series1::monomial(Rational::one(), 0, order)
    }

    /// The variable itself.
    pub fn var(order: usize) -> Self {
        Series1::monomial(Rational::one(), 1, order)
    }

    pub fn monomial(c: Rational, degree: usize, order: usize) -> Self {
        let mut s = Series1::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^degree`. Asking past the truncation order is an error.
    pub fn coefficient(&self, degree: usize) -> Result<&Rational> {
        self.coeffs.get(degree).ok_or(Error::BeyondTruncation {
            degree,
            order: self.order,
        })
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend truncation order");
        Series1::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// `f(c x)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &p;
                p *= c;
                v
            })
            .collect();
        Series1 { coeffs, order: self.order }
    }

    /// Divides by `x^k`; the low `k` coefficients must vanish. Order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order {
            return Err(Error::BeyondTruncation { degree: k, order: self.order });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Series1::new(self.coeffs[k..].to_vec(), self.order - k))
    }

    /// Multiplies by `x^k`; order rises by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series1::new(coeffs, self.order + k)
    }

    pub fn recip(&self) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let acc: Rational = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(-(acc * &inv0));
        }
        Ok(Series1 { coeffs: out, order: self.order })
    }

    pub fn div(&self, rhs: &Series1) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Series1::one(self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series1) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        // Horner from the top known coefficient
        let mut acc = Series1::monomial(self.coeffs[order].clone(), 0, order);
        for i in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::BeyondTruncation { degree: 1, order: 0 });
        }
        let coeffs = (1..=self.order)
            .map(|i| &self.coeffs[i] * Rational::from(i))
            .collect();
        Ok(Series1 { coeffs, order: self.order - 1 })
    }

    pub fn nth_derivative(&self, n: usize) -> Result<Self> {
        let mut s = self.clone();
        for _ in 0..n {
            s = s.derivative()?;
        }
        Ok(s)
    }

    /// Term-wise integral with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from(i + 1));
        }
        Series1 { coeffs, order: self.order + 1 }
    }

    /// `exp(f)` for `f(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // g' = f' g  =>  n g_n = sum_k k f_k g_{n-k}
        let mut g = vec![Rational::one()];
        for n in 1..=self.order {
            let acc: Rational = (1..=n)
                .map(|k| Rational::from(k) * &self.coeffs[k] * &g[n - k])
                .sum();
            g.push(acc / Rational::from(n));
        }
        Ok(Series1 { coeffs: g, order: self.order })
    }

    /// `log(f)` for `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if self.constant_term() != &Rational::one() {
            return Err(Error::LogConstantTerm);
        }
        if self.order == 0 {
            return Ok(Series1::zero(0));
        }
        let quotient = self.derivative()?.div(&self.truncate(self.order - 1))?;
        Ok(quotient.antiderivative())
    }

    /// `sin(x)` to the given order.
    pub fn sin(order: usize) -> Self {
        let mut fact = Rational::one();
        Series1::from_fn(order, |i| {
            if i > 0 {
                fact /= Rational::from(i);
            }
            match i % 4 {
                1 => fact.clone(),
                3 => -fact.clone(),
                _ => Rational::zero(),
            }
        })
    }

    /// `cos(x)` to the given order.
    pub fn cos(order: usize) -> Self {
        let mut fact = Rational::one();
        Series1::from_fn(order, |i| {
            if i > 0 {
                fact /= Rational::from(i);
            }
            match i % 4 {
                0 => fact.clone(),
                2 => -fact.clone(),
                _ => Rational::zero(),
            }
        })
    }

    /// Compositional inverse by solving `f(g(x)) = x` one coefficient at a time.
    pub fn reversion(&self) -> Result<Self> {
        self.check_reversible()?;
        let order = self.order;
        let f1_inv = self.coeffs[1].recip();
        let mut g = Series1::monomial(f1_inv.clone(), 1, order);
        for n in 2..=order {
            // with g known below degree n, [x^n] f(g) = f_1 g_n + (terms from lower g_i)
            let residual = self.compose(&g)?;
            let excess = residual.coeffs[n].clone();
            g.coeffs[n] = -(excess * &f1_inv);
        }
        Ok(g)
    }

    /// Compositional inverse by Lagrange inversion: with `phi(z) = z/f(z)`,
    /// `[x^r] g = (1/r) [z^(r-1)] phi(z)^r`.
    pub fn reversion_lagrange(&self) -> Result<Self> {
        self.check_reversible()?;
        let mut g = Series1::zero(self.order);
        for r in 1..=self.order {
            g.coeffs[r] = self.lagrange_power_coefficient(1, r)?;
        }
        Ok(g)
    }

    /// `[x^r] g(x)^l` where `g` is the compositional inverse of `self`, via
    /// the Lagrange formula `(1/r!)[(d/dz)^(r-1) {h'(z) phi(z)^r}]_{z=0}` with
    /// `h(z) = z^l`, i.e. `(l/r) [z^(r-l)] phi(z)^r`.
    pub fn lagrange_power_coefficient(&self, l: usize, r: usize) -> Result<Rational> {
        self.check_reversible()?;
        if r == 0 {
            return Ok(if l == 0 { Rational::one() } else { Rational::zero() });
        }
        if r > self.order {
            return Err(Error::BeyondTruncation { degree: r, order: self.order });
        }
        if l == 0 || l > r {
            return Ok(Rational::zero());
        }
        let phi = self.shift_down(1)?.recip()?;
        let phi_r = phi.pow(r as u32);
        Ok(phi_r.coefficient(r - l)? * Rational::new(l as i64, r as i64))
    }

    fn check_reversible(&self) -> Result<()> {
        if self.order == 0 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotReversible);
        }
        Ok(())
    }

    /// True when both series agree on every degree up to `order`.
    pub fn agrees_to(&self, other: &Series1, order: usize) -> bool {
        order <= self.order
            && order <= other.order
            && self.coeffs[..=order] == other.coeffs[..=order]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        let order = self.order.min(rhs.order);
        Series1::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        let order = self.order.min(rhs.order);
        Series1::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, rhs: &Series1) -> Series1 {
        let order = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series1 { coeffs: out, order }
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        self.scale(&-Rational::one())
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for Series1 {
            type Output = Series1;
            fn $method(self, rhs: Series1) -> Series1 {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s(cs: &[(i64, i64)], order: usize) -> Series1 {
        Series1::new(cs.iter().map(|&(p, q)| rat(p, q)).collect(), order)
    }

    #[test]
    fn product_and_truncation_order() {
        let a = s(&[(1, 1), (1, 1)], 6);
        let b = s(&[(1, 1), (-1, 1)], 4);
        let c = &a * &b;
        assert_eq!(c.order(), 4);
        assert_eq!(c, s(&[(1, 1), (0, 1), (-1, 1)], 4));
        assert!(matches!(c.coefficient(5), Err(Error::BeyondTruncation { degree: 5, order: 4 })));
    }

    #[test]
    fn t_over_sin() {
        // long division oracle: (sin t / t) * q = 1 solved by hand at order 4
        let sinc = Series1::sin(9).shift_down(1).unwrap();
        let q = sinc.recip().unwrap();
        assert_eq!(q.coeffs()[..5], [rat(1, 1), rat(0, 1), rat(1, 6), rat(0, 1), rat(7, 360)]);
        let half = q.scale_var(&rat(1, 2));
        assert_eq!(half.coeffs()[2], rat(1, 24));
        assert_eq!(half.coeffs()[4], rat(7, 5760));
    }

    #[test]
    fn division_by_zero_constant_term() {
        let a = Series1::one(3);
        assert_eq!(a.div(&Series1::var(3)), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn composition_cases() {
        let exp = Series1::var(8).exp().unwrap();
        assert_eq!(exp.compose(&Series1::zero(8)).unwrap(), Series1::one(8));
        assert_eq!(exp.compose(&Series1::var(8)).unwrap(), exp);
        assert!(exp.compose(&Series1::one(8)).is_err());

        // log(1+x) composed with x + x^2, against direct Horner substitution
        let log1p = Series1::from_fn(6, |i| {
            if i == 0 {
                Rational::zero()
            } else {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                rat(sign, i as i64)
            }
        });
        let inner = s(&[(0, 1), (1, 1), (1, 1)], 6);
        let got = log1p.compose(&inner).unwrap();
        // oracle: sum_i c_i (x + x^2)^i expanded with binomials
        let mut want = vec![Rational::zero(); 7];
        for i in 1..=6usize {
            for j in 0..=i {
                let deg = i + j;
                if deg <= 6 {
                    want[deg] += &log1p.coeffs()[i] * Rational::from(crate::combinat::binomial(i as i64, j as i64));
                }
            }
        }
        assert_eq!(got.coeffs(), &want[..]);
        assert_eq!(got.coeffs()[1..4], [rat(1, 1), rat(1, 2), rat(-2, 3)]);
    }

    #[test]
    fn tree_function_reversion() {
        let f = (Series1::var(10) * Series1::var(10).scale(&rat(-1, 1)).exp().unwrap()).truncate(10);
        let tau = f.reversion().unwrap();
        assert_eq!(tau.coeffs()[..5], [rat(0, 1), rat(1, 1), rat(1, 1), rat(3, 2), rat(8, 3)]);
        assert_eq!(tau, f.reversion_lagrange().unwrap());
        let tau_sq = &tau * &tau;
        assert_eq!(tau_sq.coefficient(3).unwrap(), &rat(2, 1));
    }

    #[test]
    fn simple_reversions() {
        let x = Series1::var(8);
        assert_eq!(x.reversion().unwrap(), x);
        // x/(1-x) inverts to x/(1+x)
        let geo = Series1::from_fn(8, |i| if i == 0 { Rational::zero() } else { Rational::one() });
        let want = Series1::from_fn(8, |i| match i {
            0 => Rational::zero(),
            i if i % 2 == 1 => Rational::one(),
            _ => -Rational::one(),
        });
        assert_eq!(geo.reversion().unwrap(), want);
        assert_eq!(geo.reversion_lagrange().unwrap(), want);
        assert_eq!(Series1::one(4).reversion(), Err(Error::NotReversible));
        assert_eq!(s(&[(0, 1), (0, 1), (1, 1)], 4).reversion(), Err(Error::NotReversible));
    }

    #[test]
    fn calculus() {
        let f = s(&[(0, 1), (0, 1), (1, 8)], 6);
        assert_eq!(f.derivative().unwrap(), s(&[(0, 1), (1, 4)], 5));
        let g = Series1::monomial(rat(1, 96), 4, 8);
        assert_eq!(g.nth_derivative(2).unwrap(), Series1::monomial(rat(1, 8), 2, 6));
        let h = s(&[(3, 1), (1, 2), (2, 3), (5, 7)], 3);
        let back = h.derivative().unwrap().antiderivative();
        assert_eq!(back.order(), 3);
        assert_eq!(&back + &Series1::monomial(rat(3, 1), 0, 3), h);
        assert!(Series1::one(0).derivative().is_err());
    }

    #[test]
    fn trig_identity() {
        let (s, c) = (Series1::sin(20), Series1::cos(20));
        assert_eq!(&(&s * &s) + &(&c * &c), Series1::one(20));
    }

    #[test]
    fn log_requires_unit_constant() {
        assert_eq!(Series1::zero(3).log(), Err(Error::LogConstantTerm));
        assert_eq!(Series1::one(3).exp(), Err(Error::NonzeroConstantTerm));
    }
}
