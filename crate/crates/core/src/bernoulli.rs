//! Bernoulli numbers under the convention `t/(e^t - 1) = sum B_m t^m / m!`,
//! so `B_1 = -1/2`.
//!
//! Values come from exact division of `t` by `e^t - 1`: the reciprocal of
//! `sum_m t^m/(m+1)!` is extended one coefficient at a time and cached. The
//! cache is an `RwLock`: readers run concurrently, extensions are serialized.

use std::sync::{OnceLock, RwLock};

use crate::combinat::factorial;
use crate::rational::Rational;

#[derive(Debug, Default)]
pub struct BernoulliTable {
    // coefficients b_m of t/(e^t - 1), so B_m = m! b_m
    coeffs: RwLock<Vec<Rational>>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            coeffs: RwLock::new(vec![Rational::one()]),
        }
    }

    /// `B_m` (signed).
    pub fn get(&self, m: usize) -> Rational {
        {
            let coeffs = self.coeffs.read().expect("bernoulli table poisoned");
            if let Some(b) = coeffs.get(m) {
                return b * Rational::from(factorial(m as u64));
            }
        }
        let mut coeffs = self.coeffs.write().expect("bernoulli table poisoned");
        while coeffs.len() <= m {
            let n = coeffs.len();
            // b_n = -sum_{i=1}^{n} a_i b_{n-i}, with a_i = 1/(i+1)!
            let mut acc = Rational::zero();
            for i in 1..=n {
                acc += &coeffs[n - i] / Rational::from(factorial(i as u64 + 1));
            }
            coeffs.push(-acc);
        }
        &coeffs[m] * Rational::from(factorial(m as u64))
    }

    pub fn cached_len(&self) -> usize {
        self.coeffs.read().expect("bernoulli table poisoned").len()
    }
}

fn global() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(BernoulliTable::new)
}

/// `B_m` from the process-wide memo table.
pub fn bernoulli(m: usize) -> Rational {
    global().get(m)
}

/// `|B_m|`.
pub fn bernoulli_abs(m: usize) -> Rational {
    bernoulli(m).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binomial;
    use crate::rational::rat;

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli_abs(12), rat(691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for m in (3..60).step_by(2) {
            assert!(bernoulli(m).is_zero(), "B_{m}");
        }
    }

    #[test]
    fn defining_recurrence() {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0, evaluated independently of the series division
        for n in 1..=40i64 {
            let s: Rational = (0..=n)
                .map(|k| Rational::from(binomial(n + 1, k)) * bernoulli(k as usize))
                .sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn concurrent_readers_agree() {
        let table = BernoulliTable::new();
        let expected: Vec<Rational> = (0..40).map(bernoulli).collect();
        std::thread::scope(|s| {
            for t in 0..8 {
                let table = &table;
                let expected = &expected;
                s.spawn(move || {
                    for m in (0..40).rev().skip(t) {
                        assert_eq!(table.get(m), expected[m]);
                    }
                });
            }
        });
        assert!(table.cached_len() >= 40);
    }
}
