//! Seeded random streams for generators and sweeps.
//!
//! ChaCha8 output for a seed is fixed by the algorithm, and the `rand`
//! version is pinned by the lockfile, so a seed always regenerates the same
//! instance.

use rand::SeedableRng;

pub use rand_chacha::ChaCha8Rng as SeededRng;

pub fn seeded(seed: u64) -> SeededRng {
    SeededRng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<u64> = seeded(11).random_iter().take(8).collect();
        let b: Vec<u64> = seeded(11).random_iter().take(8).collect();
        let c: Vec<u64> = seeded(12).random_iter().take(8).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
