//! Truncated formal power series over exact rationals.
//!
//! Every series carries its truncation order. Arithmetic takes the minimum
//! order of its inputs, derivatives lower it, and reading a coefficient past
//! it is an error rather than a silent zero.

mod bivariate;
mod named;
mod univariate;

pub use bivariate::Series2;
pub use named::{log_sinc, named_series, sinc, tree_series, NamedSeries, TreePowers};
pub(crate) use named::x_exp_neg_x;
pub use univariate::Series1;

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(p, q))
    }

    fn series2(order: usize) -> impl Strategy<Value = Series2> {
        let n = (order + 1) * (order + 2) / 2;
        prop::collection::vec(small_rational(), n).prop_map(move |cs| {
            let mut it = cs.into_iter();
            Series2::from_fn(order, |_, _| it.next().unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reversion_round_trip(tail in prop::collection::vec(small_rational(), 7)) {
            let mut cs = vec![Rational::zero(), Rational::one()];
            cs.extend(tail);
            let f = Series1::new(cs, 8);
            let g = f.reversion().unwrap();
            prop_assert_eq!(f.compose(&g).unwrap(), Series1::var(8));
            prop_assert_eq!(g, f.reversion_lagrange().unwrap());
        }

        #[test]
        fn exp_log_inverse(tail in prop::collection::vec(small_rational(), 8)) {
            let mut cs = vec![Rational::one()];
            cs.extend(tail);
            let f = Series1::new(cs, 8);
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
        }

        #[test]
        fn bivariate_ring_laws(a in series2(5), b in series2(5), c in series2(5)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
