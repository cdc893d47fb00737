//! General psi-class intersection numbers `<tau_{d_1} ... tau_{d_n}>`.
//!
//! Evaluation order for a sorted index list:
//! 1. dimension: `sum d_i = 3g - 3 + n` with `2g - 2 + n > 0`, else zero;
//! 2. base values `<tau_0^3> = 1`, `<tau_1> = 1/24`;
//! 3. a `tau_0` insertion is removed by the string equation;
//! 4. a `tau_1` insertion is removed by the dilaton equation;
//! 5. otherwise every index is at least 2. With `a` the largest index and
//!    `T` the rest, the KdV coefficient equation at `n = a + 2`,
//!    `(2n+1)<tau_n tau_0^2 T> = 1/4 <tau_{n-1} tau_0^4 T> + sum_{T = T1 T2}
//!    (<tau_{n-1} tau_0 T1><tau_0^3 T2> + 2<tau_{n-1} tau_0^2 T1><tau_0^2 T2>)`,
//!    is expanded with the string equation on both `<tau_n tau_0^2 T>` and
//!    `<tau_{n-1} tau_0 T>`. The target appears once in each expansion and is
//!    solved for. Every other term has lower genus, fewer points, or the same
//!    genus and points with a larger top index, so the recursion terminates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A multiset of tau indices, stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bracket {
    indices: Vec<u32>,
}

impl Bracket {
    pub fn new(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        Bracket { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Genus forced by the dimension constraint, if the bracket is nonempty,
    /// dimensionally consistent and stable.
    pub fn genus(&self) -> Option<u32> {
        genus_of(&self.indices)
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, d) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "tau_{d}")?;
        }
        f.write_str(">")
    }
}

pub(crate) fn genus_of(indices: &[u32]) -> Option<u32> {
    let n = indices.len() as i64;
    if n == 0 {
        return None;
    }
    let sum: i64 = indices.iter().map(|&d| i64::from(d)).sum();
    let three_g = sum - n + 3;
    if three_g < 0 || three_g % 3 != 0 {
        return None;
    }
    let g = three_g / 3;
    (2 * g - 2 + n > 0).then_some(g as u32)
}

/// A bracket value, distinguishing "zero by dimension" from a computed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketValue {
    pub value: Rational,
    pub zero_by_dimension: bool,
}

impl BracketValue {
    fn dimension_zero() -> Self {
        BracketValue { value: Rational::zero(), zero_by_dimension: true }
    }
}

/// `<tau_{3g-2}> = 1/(24^g g!)`.
pub fn one_point(g: u32) -> Result<Rational> {
    if g == 0 {
        return Err(Error::OutOfRange("one-point bracket needs g >= 1".into()));
    }
    Ok(one_point_value(g))
}

pub(crate) fn one_point_value(g: u32) -> Rational {
    let denom = num_traits::pow(num_bigint::BigInt::from(24), g as usize) * factorial(u64::from(g));
    Rational::new(1, denom)
}

/// Memoized evaluator for arbitrary brackets.
#[derive(Debug, Default)]
pub struct BracketTable {
    memo: RwLock<HashMap<Vec<u32>, Rational>>,
    offset: Option<Vec<u32>>,
}

impl BracketTable {
    pub fn new() -> Self {
        BracketTable::default()
    }

    /// A table that adds 1 to the value of one bracket (negative control).
    pub(crate) fn with_offset(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        BracketTable { memo: RwLock::default(), offset: Some(indices) }
    }

    pub fn evaluate(&self, indices: &[u32]) -> BracketValue {
        let mut key = indices.to_vec();
        key.sort_unstable();
        if genus_of(&key).is_none() {
            return BracketValue::dimension_zero();
        }
        BracketValue { value: self.eval_sorted(&key), zero_by_dimension: false }
    }

    /// Shorthand for the value alone.
    pub fn value(&self, indices: &[u32]) -> Rational {
        self.evaluate(indices).value
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("bracket memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Copy of every memoized value.
    pub fn snapshot(&self) -> BTreeMap<Vec<u32>, Rational> {
        self.memo
            .read()
            .expect("bracket memo poisoned")
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    /// Seeds the memo with precomputed values (e.g. from a cache file).
    /// Keys are normalized to sorted order; dimension-invalid keys are rejected.
    pub fn preload(&self, entries: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<()> {
        let mut memo = self.memo.write().expect("bracket memo poisoned");
        for (mut k, v) in entries {
            k.sort_unstable();
            if genus_of(&k).is_none() {
                return Err(Error::OutOfRange(format!("cached bracket {k:?} is not dimension-valid")));
            }
            memo.insert(k, v);
        }
        Ok(())
    }

    fn eval_sorted(&self, key: &[u32]) -> Rational {
        let Some(g) = genus_of(key) else {
            return Rational::zero();
        };
        if let Some(v) = self.memo.read().expect("bracket memo poisoned").get(key) {
            return v.clone();
        }
        let mut value = self.compute(key, g);
        if self.offset.as_deref() == Some(key) {
            value += Rational::one();
        }
        self.memo
            .write()
            .expect("bracket memo poisoned")
            .entry(key.to_vec())
            .or_insert(value)
            .clone()
    }

    fn eval_terms(&self, terms: &[Vec<u32>]) -> Rational {
        terms.iter().map(|t| self.eval_sorted(t)).sum()
    }

    fn compute(&self, key: &[u32], g: u32) -> Rational {
        match key {
            [0, 0, 0] => return Rational::one(),
            [1] => return Rational::new(1, 24),
            _ => {}
        }
        let n = key.len() as i64;
        if key[0] == 0 {
            return self.eval_terms(&string_terms(key));
        }
        if key[0] == 1 {
            let factor = Rational::from(2 * i64::from(g) - 2 + n - 1);
            return factor * self.eval_sorted(&key[1..]);
        }
        self.kdv_lift(key)
    }

    fn kdv_lift(&self, key: &[u32]) -> Rational {
        let (&top, rest) = key.split_last().expect("nonempty");
        let n = top + 2;

        // <tau_n tau_0^2 T> expanded by two string steps
        let lhs_terms: Vec<Vec<u32>> = string_terms(&with(rest, &[0, 0, n]))
            .iter()
            .flat_map(|t| string_terms(t))
            .collect();
        let lhs_rest = self.eval_terms(&without_once(lhs_terms, key));

        // <tau_{n-1} tau_0 T> <tau_0^3>, the T2 = {} product term
        let self_term_rest = self.eval_terms(&without_once(string_terms(&with(rest, &[0, n - 1])), key));

        let mut rhs = self.eval_sorted(&with(rest, &[0, 0, 0, 0, n - 1])) / Rational::from(4);
        rhs += self_term_rest;
        let m = rest.len();
        for mask in 0..(1u32 << m) {
            if mask == (1u32 << m) - 1 {
                continue;
            }
            let (t1, t2) = split_by_mask(rest, mask);
            rhs += self.eval_sorted(&with(&t1, &[0, n - 1])) * self.eval_sorted(&with(&t2, &[0, 0, 0]));
            rhs += Rational::from(2)
                * self.eval_sorted(&with(&t1, &[0, 0, n - 1]))
                * self.eval_sorted(&with(&t2, &[0, 0]));
        }
        let lead = Rational::from(2 * i64::from(n) + 1);
        (rhs - &lead * lhs_rest) / (lead - Rational::one())
    }
}

/// Terms of the string equation for a sorted key with a leading `tau_0`:
/// drop one `tau_0` and lower each remaining positive index in turn.
pub(crate) fn string_terms(key: &[u32]) -> Vec<Vec<u32>> {
    debug_assert_eq!(key.first(), Some(&0));
    let rest = &key[1..];
    let mut out = Vec::with_capacity(rest.len());
    for (i, &d) in rest.iter().enumerate() {
        if d > 0 {
            let mut t = rest.to_vec();
            t[i] -= 1;
            t.sort_unstable();
            out.push(t);
        }
    }
    out
}

pub(crate) fn with(base: &[u32], extra: &[u32]) -> Vec<u32> {
    let mut v = base.to_vec();
    v.extend_from_slice(extra);
    v.sort_unstable();
    v
}

pub(crate) fn split_by_mask(items: &[u32], mask: u32) -> (Vec<u32>, Vec<u32>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        if mask >> i & 1 == 1 {
            a.push(x);
        } else {
            b.push(x);
        }
    }
    (a, b)
}

fn without_once(mut terms: Vec<Vec<u32>>, target: &[u32]) -> Vec<Vec<u32>> {
    let pos = terms
        .iter()
        .position(|t| t.as_slice() == target)
        .expect("target appears in its own string expansion");
    terms.swap_remove(pos);
    debug_assert!(!terms.iter().any(|t| t.as_slice() == target));
    terms
}
