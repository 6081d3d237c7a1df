//! Seeded random streams.
//!
//! Every random draw in the crate derives from one `u64` seed. Independent
//! consumers get their own ChaCha stream (the generator is counter based, so
//! streams never overlap), which keeps results reproducible regardless of how
//! many numbers a sibling consumer draws.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream labels used across the crate. Distinct labels give disjoint streams.
pub mod streams {
    pub const LINEAR_CHANGE: u64 = 1;
    pub const BASE_POINTS: u64 = 2;
    pub const SAMPLING: u64 = 3;
    pub const PAIRS: u64 = 4;
    pub const BATTERY: u64 = 5;
}

/// Returns the generator for `(seed, stream)`.
pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Derives a sub-seed, used when one operation fans out into seeded calls.
pub fn derive(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
