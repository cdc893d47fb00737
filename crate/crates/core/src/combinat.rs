//! Integer combinatorics: factorials, binomials, Stirling numbers, partitions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!/(n-k)!`, the falling factorial. Zero when `k > n`.
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`; zero whenever `k < 0` or `k > n`, and for negative `n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n!! = n (n-2) (n-4) ...` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::OutOfRange(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// Stirling number of the second kind `S(n, l)`: set partitions of an
/// `n`-set into `l` nonempty blocks, by the alternating sum
/// `(1/l!) sum_m (-1)^(l-m) C(l,m) m^n`.
pub fn stirling2(n: u64, l: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for m in 0..=l {
        let term = binomial(l as i64, m as i64) * num_traits::pow(BigInt::from(m), n as usize);
        if (l - m).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&acc, &factorial(l));
    debug_assert!(r.is_zero());
    q
}

/// Table of `S(n, l)` for `0 <= l <= n <= max_n` via
/// `S(n+1, l) = l S(n, l) + S(n, l-1)`. Indexed `[n][l]`.
pub fn stirling2_table(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let mut row = vec![BigInt::zero(); n + 2];
        for l in 1..=n + 1 {
            let stay = if l <= n { &prev[l] * l } else { BigInt::zero() };
            row[l] = stay + &prev[l - 1];
        }
        rows.push(row);
    }
    rows
}

/// An integer partition, parts kept in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::OutOfRange("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part value -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Order of the group permuting equal parts: product of multiplicity factorials.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .values()
            .map(|&c| factorial(c))
            .product()
    }
}

/// All partitions of `n`, optionally only those with exactly `length` parts.
/// Ordered reverse-lexicographically; `n = 0` yields the empty partition
/// (when the length allows it).
pub fn partitions_of(n: u64, length: Option<usize>) -> Vec<Partition> {
    fn go(n: u64, max: u64, length: Option<usize>, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if n == 0 {
            if length.is_none_or(|l| l == prefix.len()) {
                out.push(Partition { parts: prefix.clone() });
            }
            return;
        }
        if let Some(l) = length {
            if prefix.len() >= l {
                return;
            }
            // remaining slots must be able to absorb n with parts <= max
            let slots = (l - prefix.len()) as u64;
            if slots * max < n {
                return;
            }
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, length, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, length, &mut Vec::new(), &mut out);
    out
}
