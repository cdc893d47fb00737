//! Shared evaluation state: memo tables and an optional seeded perturbation.
//!
//! All memo tables sit behind `RwLock`s. Lookups take a read lock; a miss is
//! computed without holding any lock and then inserted under a write lock, so
//! concurrent readers never block each other and writes are linearized. Two
//! threads racing on the same miss compute the same value.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bernoulli;
use crate::combinat;
use crate::kdv::{BracketTable, BracketValue, TauZeroTable};
use crate::rational::Rational;
use crate::series::{tree_series, TreePowers};

/// A deliberate corruption of one input, used to prove checks are not vacuous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Perturbation {
    /// Adds 1 to `B_index`.
    Bernoulli { index: usize },
    /// Adds 1 to one bracket in the general intersection-number table.
    Bracket { indices: Vec<u32> },
    /// Adds 1 to one coefficient of the tree series used by the power route.
    TreeCoefficient { degree: usize },
    /// Adds 1 to one Stirling number in the Stirling form of the polynomial.
    Stirling { n: u64, l: u64 },
}

#[derive(Debug, Default)]
pub struct Context {
    brackets: BracketTable,
    tree: RwLock<Option<Arc<TreePowers>>>,
    tau_zero: RwLock<Option<Arc<TauZeroTable>>>,
    perturbation: Option<Perturbation>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    pub fn perturbed(perturbation: Perturbation) -> Self {
        let brackets = match &perturbation {
            Perturbation::Bracket { indices } => BracketTable::with_offset(indices.clone()),
            _ => BracketTable::default(),
        };
        Context {
            brackets,
            perturbation: Some(perturbation),
            ..Context::default()
        }
    }

    /// Process-wide unperturbed context.
    pub fn global() -> &'static Context {
        static CTX: OnceLock<Context> = OnceLock::new();
        CTX.get_or_init(Context::new)
    }

    pub fn perturbation(&self) -> Option<&Perturbation> {
        self.perturbation.as_ref()
    }

    pub fn bernoulli(&self, m: usize) -> Rational {
        let b = bernoulli::bernoulli(m);
        match self.perturbation {
            Some(Perturbation::Bernoulli { index }) if index == m => b + Rational::one(),
            _ => b,
        }
    }

    /// `|B_2g| / 2g`, the normalization shared by most Hodge integrals here.
    pub fn bernoulli_ratio(&self, g: u64) -> Rational {
        self.bernoulli(2 * g as usize).abs() / Rational::from(2 * g)
    }

    pub fn stirling2(&self, n: u64, l: u64) -> BigInt {
        let s = combinat::stirling2(n, l);
        match self.perturbation {
            Some(Perturbation::Stirling { n: pn, l: pl }) if pn == n && pl == l => s + 1,
            _ => s,
        }
    }

    pub fn brackets(&self) -> &BracketTable {
        &self.brackets
    }

    /// General intersection number `<tau_{d_1} ... tau_{d_n}>`.
    pub fn bracket(&self, indices: &[u32]) -> BracketValue {
        self.brackets.evaluate(indices)
    }

    /// Powers of the tree series, at least to `order` and `max_power`.
    pub fn tree_powers(&self, order: usize, max_power: usize) -> Arc<TreePowers> {
        if let Some(p) = self.tree.read().expect("tree cache poisoned").as_ref() {
            if p.order() >= order && p.max_power() >= max_power {
                return Arc::clone(p);
            }
        }
        let order = order.max(12);
        let max_power = max_power.max(12);
        let mut tau = tree_series(order);
        if let Some(Perturbation::TreeCoefficient { degree }) = self.perturbation {
            if degree <= order {
                let mut cs = tau.coeffs().to_vec();
                cs[degree] += Rational::one();
                tau = crate::series::Series1::new(cs, order);
            }
        }
        let powers = Arc::new(TreePowers::new(&tau, max_power));
        let mut slot = self.tree.write().expect("tree cache poisoned");
        match slot.as_ref() {
            Some(p) if p.order() >= order && p.max_power() >= max_power => Arc::clone(p),
            _ => {
                *slot = Some(Arc::clone(&powers));
                powers
            }
        }
    }

    /// The `<tau_0 tau_a tau_b>` table from the recursion, covering `a + b <= max_sum`.
    pub fn tau_zero_table(&self, max_sum: usize) -> Arc<TauZeroTable> {
        if let Some(t) = self.tau_zero.read().expect("table cache poisoned").as_ref() {
            if t.max_sum() >= max_sum {
                return Arc::clone(t);
            }
        }
        let table = Arc::new(TauZeroTable::build(max_sum.max(24)));
        let mut slot = self.tau_zero.write().expect("table cache poisoned");
        match slot.as_ref() {
            Some(t) if t.max_sum() >= table.max_sum() => Arc::clone(t),
            _ => {
                *slot = Some(Arc::clone(&table));
                table
            }
        }
    }
}
