//! Deterministic random streams.
//!
//! Every generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) keyed by
//! `seed_from_u64(seed)`. A suite trial then selects its own 64-bit stream
//!
//! ```text
//! stream = property << 48 | n << 32 | trial
//! ```
//!
//! so each `(property, n, trial)` triple draws from an independent sequence and
//! a trial can be replayed in isolation from `(seed, n, trial)` alone, in any
//! order and on any platform. `gen` uses stream 0.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn root(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn stream_id(property: usize, n: usize, trial: u64) -> u64 {
    assert!(property < 1 << 16, "too many properties in a suite");
    assert!(n < 1 << 16, "dimension out of range");
    assert!(trial < 1 << 32, "trial index out of range");
    (property as u64) << 48 | (n as u64) << 32 | trial
}

pub fn trial(seed: u64, property: usize, n: usize, trial: u64) -> ChaCha8Rng {
    let mut r = root(seed);
    r.set_stream(stream_id(property, n, trial));
    r
}
