//! Numerical probes on sampled hypersurfaces: inner distances, region fits
//! and tangent directions at infinity.

mod graph;
mod lne;
mod region;
mod roots;
mod sample;
mod tangent;

pub use graph::{inner_distance, NeighborGraph, DEFAULT_K, EDGE_TOLERANCE, MAX_K};
pub use lne::{classify, lne_profile, pair_ratios, LneOptions, LneProfile, Verdict, BOUNDED_FACTOR, GROWTH_FACTOR};
pub use region::{region_fit, AlgebraicRegion};
pub use roots::polynomial_roots;
pub use sample::{sample_hypersurface, Hypersurface, PointCloud, DEFAULT_RESIDUAL_TOL};
pub use tangent::{
    cluster, line_alignment, normalize, tangent_directions, Direction, ScaleSample, TangentDirections,
    CLUSTER_THRESHOLD,
};
