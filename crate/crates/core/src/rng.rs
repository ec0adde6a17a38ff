//! Platform-independent pseudorandomness.
//!
//! Every random choice in this crate is driven by SplitMix64 (Steele, Lea and
//! Flood; the variant used to seed the xoshiro family). From state `s` each
//! step does `s += 0x9E3779B97F4A7C15` and outputs
//!
//! ```text
//! z = s
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! with wrapping 64-bit arithmetic. Test vectors: seed 0 yields
//! `0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f`; seed 1234567
//! yields `6457827717110365317, 3203168211198807973, 9817491932198370423`.
//!
//! Derived operations are fixed here so other implementations can match them:
//! a coin flip is the top bit of one output, and a shuffle is Fisher-Yates from
//! the back with index `next_u64() % (i + 1)`.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::from_seed(seed.to_le_bytes()))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// A uniformly shuffled `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        self.shuffle(&mut p);
        p
    }
}

/// Seed for trial `index` of a run seeded with `master`: the `index + 1`-th
/// SplitMix64 output from state `master`. Independent of how trials are scheduled.
pub fn mix(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add((index.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
