//! JSON report schema.

use serde::{Deserialize, Deserializer, Serialize};

/// Top-level report written by `--json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub input: String,
    pub seed: u64,
    pub stages: Stages,
}

impl Report {
    pub fn new(input: &str, seed: u64) -> Self {
        Report { tool_version: env!("CARGO_PKG_VERSION").to_string(), input: input.to_string(), seed, stages: Stages::default() }
    }

    /// Canonical rendering: pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Stages a command ran. Absent keys were not part of the command; `null`
/// marks a stage that ran but could not produce a value.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Stages {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<ClosureStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_invariants: Option<InvariantStage>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "present")]
    pub reduced_degree: Option<Option<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "present")]
    pub reduced_cone_degree: Option<Option<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "present")]
    pub lne: Option<Option<LneStage>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<RegionStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent: Option<TangentStage>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
}

/// A key that is present maps to `Some`, even when its value is `null`.
fn present<'de, D: Deserializer<'de>, T: Deserialize<'de>>(d: D) -> Result<Option<Option<T>>, D::Error> {
    Option::<T>::deserialize(d).map(Some)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeStage {
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureStage {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    pub part_at_infinity: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantStage {
    pub dim: i64,
    pub degree_scheme: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_numerator: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checks {
    pub dims_equal: bool,
    pub inequality_holds: Option<bool>,
    pub equality_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LneStage {
    pub radii: Vec<f64>,
    pub ratios: Vec<f64>,
    pub verdict: String,
    pub c_estimate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionStage {
    /// Variables spanning the first block of the split.
    pub first: Vec<String>,
    pub a: f64,
    pub b: f64,
    pub band: [f64; 2],
    pub points: usize,
    pub coverage: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentStage {
    pub scales: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Cluster representatives as `[re, im]` pairs per coordinate.
    pub clusters: Vec<Vec<[f64; 2]>>,
    pub cluster_residuals: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub stage: String,
    pub message: String,
}
