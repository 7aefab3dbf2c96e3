//! Deterministic seed derivation.
//!
//! Every stochastic operation in the crate takes an explicit seed or RNG.
//! Sub-tasks (per-chain, per-tree, per-sample) derive their own seeds from a
//! base seed plus a label, so results are independent of the order in which
//! sub-tasks run and stable across platforms.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// Derive a child seed from a base seed, a domain label, and an index.
///
/// Uses an SplitMix64-style finalizer over the label bytes so the mapping is
/// stable regardless of Rust's hasher internals.
pub fn derive_seed(base: u64, label: &str, index: u64) -> u64 {
    let mut h = base ^ 0x9e37_79b9_7f4a_7c15;
    for &b in label.as_bytes() {
        h = mix(h ^ u64::from(b));
    }
    mix(h ^ index)
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seeded generator used throughout the crate. ChaCha20 keeps the stream
/// identical across platforms and releases.
pub fn rng_from_seed(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_is_deterministic_and_label_sensitive() {
        assert_eq!(derive_seed(7, "chain", 0), derive_seed(7, "chain", 0));
        assert_ne!(derive_seed(7, "chain", 0), derive_seed(7, "chain", 1));
        assert_ne!(derive_seed(7, "chain", 0), derive_seed(7, "tree", 0));
        assert_ne!(derive_seed(7, "chain", 0), derive_seed(8, "chain", 0));
    }

    #[test]
    fn rng_reproduces_stream() {
        use rand::RngCore;
        let mut a = rng_from_seed(42);
        let mut b = rng_from_seed(42);
        for _ in 0..16 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
