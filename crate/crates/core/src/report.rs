use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::series::{Series1, Series2};

/// One side of a verified identity: a number, a list of numbers, or a
/// truncated series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Digest {
    Scalar(Rational),
    Vector(Vec<Rational>),
    Series {
        order: usize,
        coefficients: Vec<Rational>,
    },
    /// Coefficients grouped by total degree, ascending power of the first variable.
    Bivariate {
        order: usize,
        coefficients: Vec<Vec<Rational>>,
    },
}

impl Digest {
    pub fn series(s: &Series1) -> Self {
        Digest::Series {
            order: s.order(),
            coefficients: s.coeffs().to_vec(),
        }
    }

    pub fn bivariate(s: &Series2) -> Self {
        Digest::Bivariate {
            order: s.order(),
            coefficients: s.graded_coefficients(),
        }
    }
}

impl From<Rational> for Digest {
    fn from(r: Rational) -> Self {
        Digest::Scalar(r)
    }
}

impl From<Vec<Rational>> for Digest {
    fn from(v: Vec<Rational>) -> Self {
        Digest::Vector(v)
    }
}

/// Outcome of one identity check. `equal` holds exactly when both digests
/// are identical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity_id: String,
    pub parameters: BTreeMap<String, i64>,
    pub lhs: Digest,
    pub rhs: Digest,
    pub equal: bool,
    pub elapsed_ms: f64,
}

impl CheckReport {
    pub fn new(
        identity_id: impl Into<String>,
        parameters: &[(&str, i64)],
        lhs: impl Into<Digest>,
        rhs: impl Into<Digest>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        CheckReport {
            identity_id: identity_id.into(),
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            equal: lhs == rhs,
            lhs,
            rhs,
            elapsed_ms: 0.0,
        }
    }

    /// Runs `f` and stamps the wall time it took.
    pub fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
        let start = Instant::now();
        let mut report = f();
        report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        report
    }

    /// Sort key: identity id, then parameters.
    pub fn canonical_key(&self) -> (&str, Vec<(&str, i64)>) {
        (
            &self.identity_id,
            self.parameters.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn equality_flag_tracks_digests() {
        let r = CheckReport::new("x", &[("g", 2)], rat(1, 24), rat(1, 24));
        assert!(r.equal);
        let r = CheckReport::new("x", &[("g", 2)], rat(1, 24), rat(1, 25));
        assert!(!r.equal);
        let a = Series1::new(vec![rat(1, 1), rat(2, 1)], 1);
        let b = Series1::new(vec![rat(1, 1), rat(2, 1)], 2);
        assert!(!CheckReport::new("s", &[], Digest::series(&a), Digest::series(&b)).equal);
    }

    #[test]
    fn json_round_trip() {
        let r = CheckReport::new(
            "demo",
            &[("k", 3), ("g", 1)],
            Digest::series(&Series1::new(vec![rat(0, 1), rat(-691, 2730)], 1)),
            Digest::Vector(vec![rat(1, 2)]),
        );
        let json = serde_json::to_string(&r).unwrap();
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
