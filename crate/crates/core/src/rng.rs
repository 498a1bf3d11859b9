//! Seeded uniform streams and substream derivation.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

/// SplitMix64 finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for replication `rep` of table cell `cell` under `master`.
///
/// Depends only on the triple, never on evaluation order.
pub fn substream_seed(master: u64, cell: u64, rep: u64) -> u64 {
    let a = mix64(master ^ 0x9E37_79B9_7F4A_7C15);
    let b = mix64(a ^ cell.wrapping_mul(0xD134_2543_DE82_EF95));
    mix64(b ^ rep.wrapping_mul(0xA076_1D64_78BD_642F))
}

/// A uniform stream on the open interval (0, 1).
#[derive(Debug, Clone)]
pub struct UniformStream {
    inner: Xoshiro256PlusPlus,
}

impl UniformStream {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    /// Next draw, `(k + 0.5) / 2^53` for a uniform 53-bit `k`; never 0 or 1.
    #[inline]
    pub fn next_open01(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        ((self.inner.next_u64() >> 11) as f64 + 0.5) * SCALE
    }
}
