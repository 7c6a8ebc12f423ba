//! Reproducible per-sample random streams.
//!
//! Sample `i` of an estimator draws from a generator seeded by hashing
//! `(seed, domain, i)`. Any partition of the sample indices across threads
//! therefore sees the same random numbers.

use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

pub type SampleRng = Xoshiro256PlusPlus;

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Generator for sample `index` of stream `domain` under `seed`.
#[inline]
pub fn sample_rng(seed: u64, domain: u64, index: u64) -> SampleRng {
    let key = splitmix64(splitmix64(seed ^ splitmix64(domain)) ^ index);
    let mut state = [0u8; 32];
    let mut z = key;
    for chunk in state.chunks_exact_mut(8) {
        z = splitmix64(z);
        chunk.copy_from_slice(&z.to_le_bytes());
    }
    SampleRng::from_seed(state)
}

/// Single sequential stream, for callers that draw many values in a loop.
pub fn stream_rng(seed: u64, domain: u64) -> SampleRng {
    sample_rng(seed, domain ^ 0x5eed_0000_0000_0000, u64::MAX)
}
