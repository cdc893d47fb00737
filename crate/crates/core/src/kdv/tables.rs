//! Tables of `<tau_0 tau_a tau_b>` and `<tau_a tau_b>` built from the
//! specialized KdV equation
//!
//! ```text
//! (2a+1)<tau_0^2 tau_a tau_b> = 1/4 <tau_{a-1} tau_0^4 tau_b>
//!   + <tau_{a-1} tau_0 tau_b><tau_0^3> + <tau_{a-1} tau_0><tau_0^3 tau_b>
//!   + 2<tau_{a-1} tau_0^2><tau_0^2 tau_b>
//! ```
//!
//! and the string equation. This route never touches the general engine.

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::bracket::{genus_of, one_point_value};

/// `D[a][b] = <tau_0 tau_a tau_b>` for `a + b <= max_sum`.
#[derive(Debug, Clone)]
pub struct TauZeroTable {
    max_sum: usize,
    d: Vec<Vec<Rational>>,
    two: Vec<Vec<Rational>>,
}

impl TauZeroTable {
    pub fn build(max_sum: usize) -> Self {
        let mut t = TauZeroTable {
            max_sum,
            d: (0..=max_sum).map(|a| vec![Rational::zero(); max_sum + 1 - a]).collect(),
            two: (0..=max_sum).map(|a| vec![Rational::zero(); max_sum + 1 - a]).collect(),
        };
        for s in (0..=max_sum).step_by(3) {
            t.fill_antidiagonal(s);
        }
        for s in (2..max_sum).step_by(3) {
            t.fill_two_point(s);
        }
        t
    }

    pub fn max_sum(&self) -> usize {
        self.max_sum
    }

    /// `<tau_0 tau_a tau_b>`; zero off the dimension-valid antidiagonals.
    pub fn get(&self, a: usize, b: usize) -> Result<Rational> {
        self.check(a + b)?;
        Ok(self.d[a][b].clone())
    }

    /// `<tau_a tau_b>`, solved along antidiagonals from the string equation.
    pub fn two_point(&self, a: usize, b: usize) -> Result<Rational> {
        // the solve for a + b = s reads D on the antidiagonal s + 1
        self.check(a + b + 1)?;
        Ok(self.two[a][b].clone())
    }

    /// Largest `a + b` for which `two_point` is available.
    pub fn two_point_max_sum(&self) -> usize {
        self.max_sum.saturating_sub(1)
    }

    fn check(&self, sum: usize) -> Result<()> {
        if sum > self.max_sum {
            return Err(Error::OutOfRange(format!(
                "index sum {sum} beyond table bound {}",
                self.max_sum
            )));
        }
        Ok(())
    }

    fn fill_antidiagonal(&mut self, s: usize) {
        if s == 0 {
            self.d[0][0] = Rational::one();
            return;
        }
        // <tau_0 tau_0 tau_s> = <tau_0 tau_{s-1}> = <tau_{s-2}>
        self.d[0][s] = one_index(s as i64 - 2);
        for a in 1..=s {
            let b = s + 1 - a;
            let prev = self.d[a - 1][b].clone();
            let (a1, b) = (a as u32 - 1, b as u32);
            let mut rhs = self.reduce(&[a1, 0, 0, 0, 0, b]) / Rational::from(4);
            rhs += &prev;
            rhs += self.reduce(&[a1, 0]) * self.reduce(&[0, 0, 0, b]);
            rhs += Rational::from(2) * self.reduce(&[a1, 0, 0]) * self.reduce(&[0, 0, b]);
            self.d[a][s - a] = rhs / Rational::from(2 * a + 1) - prev;
        }
    }

    fn fill_two_point(&mut self, s: usize) {
        // <tau_0 tau_s> = <tau_{s-1}>
        self.two[0][s] = one_index(s as i64 - 1);
        for a in 1..=s {
            let b = s - a;
            self.two[a][b] = &self.d[a][b + 1] - &self.two[a - 1][b + 1];
        }
    }

    /// A bracket with at most two positive indices, reduced by the string
    /// equation to entries already in the table.
    fn reduce(&self, idx: &[u32]) -> Rational {
        let mut idx = idx.to_vec();
        idx.sort_unstable();
        self.reduce_sorted(idx)
    }

    fn reduce_sorted(&self, idx: Vec<u32>) -> Rational {
        if genus_of(&idx).is_none() {
            return Rational::zero();
        }
        let positive: Vec<u32> = idx.iter().copied().filter(|&d| d > 0).collect();
        let zeros = idx.len() - positive.len();
        match (zeros, positive.as_slice()) {
            (3, []) => Rational::one(),
            (0, [d]) => one_point_value(d.div_ceil(3)),
            (1, [a, b]) => self.d[*a as usize][*b as usize].clone(),
            _ => {
                debug_assert_eq!(idx[0], 0);
                let rest = &idx[1..];
                let mut acc = Rational::zero();
                for (i, &d) in rest.iter().enumerate() {
                    if d > 0 && (i + 1 == rest.len() || rest[i + 1] != d) {
                        let mut t = rest.to_vec();
                        t[i] -= 1;
                        t.sort_unstable();
                        let mult = rest.iter().filter(|&&e| e == d).count();
                        acc += Rational::from(mult) * self.reduce_sorted(t);
                    }
                }
                acc
            }
        }
    }
}

/// `<tau_m>`, zero unless `m = 3g - 2`.
fn one_index(m: i64) -> Rational {
    if m >= 1 && m % 3 == 1 {
        one_point_value(((m + 2) / 3) as u32)
    } else {
        Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kdv::BracketTable;
    use crate::rational::rat;

    #[test]
    fn small_entries() {
        let t = TauZeroTable::build(12);
        assert_eq!(t.get(0, 0).unwrap(), rat(1, 1));
        assert_eq!(t.get(1, 2).unwrap(), rat(1, 12));
        assert_eq!(t.get(2, 1).unwrap(), rat(1, 12));
        assert_eq!(t.get(0, 3).unwrap(), rat(1, 24));
        assert!(t.get(1, 1).unwrap().is_zero());
        assert_eq!(t.two_point(2, 3).unwrap(), rat(29, 5760));
        assert_eq!(t.two_point(1, 1).unwrap(), rat(1, 24));
        assert!(t.two_point(1, 2).unwrap().is_zero());
        assert!(t.get(7, 6).is_err());
        assert!(t.two_point(6, 6).is_err());
    }

    #[test]
    fn agrees_with_engine() {
        let t = TauZeroTable::build(18);
        let e = BracketTable::new();
        for a in 0..=18u32 {
            for b in 0..=(18 - a) {
                assert_eq!(t.get(a as usize, b as usize).unwrap(), e.value(&[0, a, b]), "({a},{b})");
                if a + b < 18 {
                    assert_eq!(t.two_point(a as usize, b as usize).unwrap(), e.value(&[a, b]));
                }
            }
        }
    }
}
