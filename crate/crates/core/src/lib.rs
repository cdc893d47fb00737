//! Exact psi-class intersection numbers, Hodge integrals and the identities
//! relating them, over arbitrary-precision rationals.

pub mod bernoulli;
pub mod combinat;
pub mod context;
pub mod error;
pub mod hodge;
pub mod kdv;
pub mod linalg;
pub mod par;
pub mod rational;
pub mod report;
pub mod series;
pub mod suite;

pub use context::{Context, Perturbation};
pub use error::{Error, Result};
pub use par::Execution;
pub use rational::{rat, Rational};
pub use report::{CheckReport, Digest};
pub use suite::{run_suite, Bounds, SuiteDocument, SuiteName};
