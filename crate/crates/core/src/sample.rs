use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator shared by all sampled checks.
pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
