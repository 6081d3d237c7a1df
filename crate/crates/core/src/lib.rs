//! Tangent cones at infinity, dimensions and degrees of affine complex
//! algebraic sets given by polynomial ideals over the rationals, together
//! with numerical probes of the inner metric of hypersurfaces.

pub mod battery;
pub mod cone;
pub mod error;
pub mod ideal;
pub mod ideal_file;
pub mod invariants;
pub mod poly;
pub mod probe;
pub mod rng;

pub use error::{Error, Result};
