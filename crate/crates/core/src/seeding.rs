//! Deterministic randomness: one u64 seed fans out into independent named
//! streams, so "the message stream" and "the error stream" of a run never
//! interleave. The label hash (FNV-1a, 64-bit) is fixed and part of the
//! reproducibility contract: same (seed, label) always yields the same stream.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn fnv1a(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn stream_rng(seed: u64, label: &str) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(label));
    rng
}
