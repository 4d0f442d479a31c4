//! Per-run records shared by every engine.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::graph::PathWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Dfs,
    ColorCoding,
    DivideColor,
    CountIe,
    CountColorful,
    Algebraic,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Dfs,
        Algorithm::ColorCoding,
        Algorithm::DivideColor,
        Algorithm::CountIe,
        Algorithm::CountColorful,
        Algorithm::Algebraic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dfs => "dfs",
            Algorithm::ColorCoding => "color-coding",
            Algorithm::DivideColor => "divide-color",
            Algorithm::CountIe => "count-ie",
            Algorithm::CountColorful => "count-colorful",
            Algorithm::Algebraic => "algebraic",
        }
    }

    /// Whether the engine draws random bits (and may give false negatives).
    pub fn is_randomized(self) -> bool {
        !matches!(self, Algorithm::Dfs | Algorithm::CountIe)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm {0:?}")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decision {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
}

impl Decision {
    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }
}

impl From<bool> for Decision {
    fn from(yes: bool) -> Self {
        if yes {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub algorithm: Algorithm,
    pub k: usize,
    pub seed: u64,
    pub trials_run: u64,
    pub decision: Decision,
    pub witness: Option<PathWitness>,
    /// Exact counts are emitted as decimal strings so they survive JSON
    /// readers limited to 64-bit numbers.
    #[serde(serialize_with = "decimal_string")]
    pub count: Option<BigUint>,
    pub wall_time: f64,
}

fn decimal_string<S: Serializer>(count: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match count {
        Some(c) => s.serialize_str(&c.to_str_radix(10)),
        None => s.serialize_none(),
    }
}

impl TrialReport {
    pub(crate) fn new(algorithm: Algorithm, k: usize, seed: u64, started: Instant) -> Self {
        TrialReport {
            algorithm,
            k,
            seed,
            trials_run: 1,
            decision: Decision::No,
            witness: None,
            count: None,
            wall_time: 0.0,
        }
        .finish(started)
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.wall_time = started.elapsed().as_secs_f64();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
            assert_eq!(serde_json::to_value(a).unwrap(), a.name());
        }
        assert!("nosuch".parse::<Algorithm>().is_err());
    }

    #[test]
    fn json_shape() {
        let r = TrialReport {
            algorithm: Algorithm::CountIe,
            k: 3,
            seed: 9,
            trials_run: 1,
            decision: Decision::Yes,
            witness: Some(PathWitness(vec![0, 1, 2])),
            count: Some(BigUint::from(3u32)),
            wall_time: 0.5,
        };
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["algorithm"], "count-ie");
        assert_eq!(v["decision"], "YES");
        assert_eq!(v["witness"], serde_json::json!([0, 1, 2]));
        assert_eq!(v["count"], "3");
        assert_eq!(v["trials_run"], 1);
    }
}
