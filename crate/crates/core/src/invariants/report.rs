//! Side-by-side invariants of a variety and its cone at infinity.

use std::fmt;

use super::{dim_degree, reduced_degree_with, FiberOptions};
use crate::cone::{cone_at_infinity, ConeResult};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::probe::{lne_profile, LneOptions, LneProfile};

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub fibers: FiberOptions,
    /// Run the distance probe (hypersurfaces only) with these settings.
    pub lne: Option<LneOptions>,
}

/// A stage that could not be completed, and why.
#[derive(Clone, Debug, PartialEq)]
pub struct StageFailure {
    pub stage: &'static str,
    pub message: String,
}

/// Dimensions and degrees of `X = V(I)` and of its cone at infinity.
///
/// Scheme degrees come from Hilbert series and count multiplicity; reduced
/// degrees count distinct points in generic fibers. The comparison flags
/// use the reduced numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub cone: Vec<Polynomial>,
    pub dim_x: i64,
    pub dim_cone: i64,
    pub deg_scheme_x: u64,
    pub deg_scheme_cone: u64,
    pub deg_reduced_x: Option<u64>,
    pub deg_reduced_cone: Option<u64>,
    pub dims_equal: bool,
    /// `deg X >= deg C(X)` for the reduced degrees.
    pub inequality_holds: Option<bool>,
    /// `deg X == deg C(X)` for the reduced degrees.
    pub equality_holds: Option<bool>,
    pub lne: Option<LneProfile>,
    pub failures: Vec<StageFailure>,
}

/// Computes the report for a proper ideal. Failures of the fiber counts or
/// the probe are recorded in `failures` instead of aborting.
pub fn verify_theorem(ideal: &Ideal, seed: u64, options: &VerifyOptions) -> Result<TheoremReport> {
    ideal.ensure_proper()?;
    let ConeResult { cone_ideal, .. } = cone_at_infinity(ideal)?;
    let hx = dim_degree(ideal)?;
    let hc = dim_degree(&cone_ideal)?;
    let mut failures = Vec::new();
    let mut record = |stage: &'static str, r: Result<usize>| match r {
        Ok(d) => Some(d as u64),
        Err(e) => {
            failures.push(StageFailure { stage, message: e.to_string() });
            None
        }
    };
    let deg_reduced_x = record("reduced degree", reduced_degree_with(ideal, seed, &options.fibers));
    let deg_reduced_cone = record("reduced cone degree", reduced_degree_with(&cone_ideal, seed, &options.fibers));
    let compare = |f: fn(u64, u64) -> bool| Some(f(deg_reduced_x?, deg_reduced_cone?));
    let inequality_holds = compare(|x, c| x >= c);
    let equality_holds = compare(|x, c| x == c);

    let lne = match (&options.lne, ideal.generators()) {
        (Some(o), [f]) => match lne_profile(f, o, seed) {
            Ok(p) => Some(p),
            Err(e) => {
                failures.push(StageFailure { stage: "lne probe", message: e.to_string() });
                None
            }
        },
        _ => None,
    };
    Ok(TheoremReport {
        cone: cone_ideal.generators().to_vec(),
        dim_x: hx.dim,
        dim_cone: hc.dim,
        deg_scheme_x: hx.degree,
        deg_scheme_cone: hc.degree,
        deg_reduced_x,
        deg_reduced_cone,
        dims_equal: hx.dim == hc.dim,
        inequality_holds,
        equality_holds,
        lne,
        failures,
    })
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "unavailable".to_string(), T::to_string)
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cone: Vec<String> = self.cone.iter().map(ToString::to_string).collect();
        writeln!(f, "cone at infinity: ({})", cone.join(", "))?;
        writeln!(f, "dim X = {}, dim C = {} ({})", self.dim_x, self.dim_cone, if self.dims_equal { "equal" } else { "DIFFER" })?;
        writeln!(f, "scheme degree: X {}, C {}", self.deg_scheme_x, self.deg_scheme_cone)?;
        writeln!(f, "reduced degree: X {}, C {}", opt(&self.deg_reduced_x), opt(&self.deg_reduced_cone))?;
        writeln!(f, "deg X >= deg C: {}", opt(&self.inequality_holds))?;
        writeln!(f, "deg X == deg C: {}", opt(&self.equality_holds))?;
        if let Some(p) = &self.lne {
            let ratios: Vec<String> = p.ratios.iter().map(|r| format!("{r:.3}")).collect();
            writeln!(f, "distance ratios: [{}] -> {}", ratios.join(", "), p.verdict)?;
        }
        for e in &self.failures {
            writeln!(f, "{} failed: {}", e.stage, e.message)?;
        }
        Ok(())
    }
}
