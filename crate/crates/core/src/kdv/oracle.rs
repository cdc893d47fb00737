//! Independent oracle: the Dijkgraaf-Verlinde-Verlinde recursion on the
//! largest index. Test-only.

use std::collections::HashMap;

use crate::combinat::double_factorial;
use crate::rational::Rational;

use super::bracket::{genus_of, split_by_mask, BracketTable};

#[derive(Default)]
struct Dvv {
    memo: HashMap<Vec<u32>, Rational>,
}

fn dfact(n: i64) -> Rational {
    Rational::from(double_factorial(n).unwrap())
}

impl Dvv {
    fn eval(&mut self, idx: &[u32]) -> Rational {
        let mut key = idx.to_vec();
        key.sort_unstable();
        if genus_of(&key).is_none() {
            return Rational::zero();
        }
        if key == [0, 0, 0] {
            return Rational::one();
        }
        if key == [1] {
            return Rational::new(1, 24);
        }
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let top = key.pop().unwrap();
        let rest = key;
        let k = i64::from(top) - 1;
        let mut total = Rational::zero();
        for j in 0..rest.len() {
            let d = i64::from(rest[j]);
            let mut next = rest.clone();
            next[j] = (d + k) as u32;
            total += dfact(2 * k + 2 * d + 1) / dfact(2 * d - 1) * self.eval(&next);
        }
        for r in 0..k.max(0) {
            let s = k - 1 - r;
            let c = dfact(2 * r + 1) * dfact(2 * s + 1) / Rational::from(2);
            let mut both = rest.clone();
            both.extend([r as u32, s as u32]);
            total += &c * self.eval(&both);
            for mask in 0..(1u32 << rest.len()) {
                let (mut i, mut j) = split_by_mask(&rest, mask);
                i.push(r as u32);
                j.push(s as u32);
                total += &c * self.eval(&i) * self.eval(&j);
            }
        }
        let value = total / dfact(2 * k + 3);
        let mut full = rest;
        full.push(top);
        full.sort_unstable();
        self.memo.insert(full, value.clone());
        value
    }
}

fn multisets(len: usize, max_sum: u32, min: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let used: u32 = cur.iter().sum();
    for d in min..=max_sum.saturating_sub(used) {
        cur.push(d);
        multisets(len, max_sum, d, out, cur);
        cur.pop();
    }
}

#[test]
fn engine_matches_dvv() {
    let engine = BracketTable::new();
    let mut dvv = Dvv::default();
    for len in 1..=4 {
        let mut all = Vec::new();
        multisets(len, 14, 0, &mut all, &mut Vec::new());
        for idx in all {
            assert_eq!(engine.value(&idx), dvv.eval(&idx), "{idx:?}");
        }
    }
}
