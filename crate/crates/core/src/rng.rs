//! Reproducible randomness. Every randomized routine draws from a generator
//! seeded by the process-wide seed mixed with a call-specific tag, so results
//! do not depend on call order.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{FieldSpec, Scalar};

pub const DEFAULT_SEED: u64 = 0x5eed;

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

pub fn rng_for(tag: &[usize]) -> ChaCha8Rng {
    let mut h = seed() ^ 0x9e37_79b9_7f4a_7c15;
    for &t in tag {
        h = (h ^ t as u64).wrapping_mul(0x100_0000_01b3).rotate_left(17);
    }
    ChaCha8Rng::seed_from_u64(h)
}

/// A random scalar: uniform over a prime field, a small integer over ℚ.
pub fn random_scalar(rng: &mut ChaCha8Rng, f: FieldSpec) -> Scalar {
    match f {
        FieldSpec::Prime(p) => f.int(rng.gen_range(0..p) as i64),
        FieldSpec::Rationals => f.int(rng.gen_range(-1000..=1000)),
    }
}
