//! Dimension, degree and the theorem-verification report.

mod degree;
mod fiber;
mod hilbert;
mod report;

pub use degree::{dim_degree, HilbertData};
pub use fiber::{
    distinct_point_count, fiber_multiplicity, generic_fiber, reduced_degree, reduced_degree_with,
    sample_fibers, FiberOptions, FiberSample,
};
pub use hilbert::{hilbert_numerator, IntPoly, MonomialIdeal};
pub use report::{verify_theorem, StageFailure, TheoremReport, VerifyOptions};
