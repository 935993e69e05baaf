use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derive a child seed from a base seed and a label.
///
/// Every stochastic subsystem (initialization, batch sampling, marginal
/// draws, ...) pulls from its own labelled stream so that disabling one
/// consumer never shifts the draws seen by another. FNV-1a over the label
/// followed by a splitmix64 finalizer; stable across platforms.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    // splitmix64 finalizer
    h = h.wrapping_add(0x9e37_79b9_7f4a_7c15);
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

/// Seeded RNG stream for the given label.
pub fn seed_stream(seed: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn labelled_streams_are_stable_and_distinct() {
        let mut a = seed_stream(7, "init");
        let mut b = seed_stream(7, "init");
        let mut c = seed_stream(7, "batches");
        assert_eq!(a.next_u64(), b.next_u64());
        assert_ne!(seed_stream(7, "init").next_u64(), c.next_u64());
        assert_ne!(derive_seed(7, "init"), derive_seed(8, "init"));
    }
}
