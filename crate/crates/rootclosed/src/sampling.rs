//! Seeded sampling helpers for the randomized invariance checks.
//!
//! A fixed-width splitmix generator keeps the sampled (closed set, Weyl
//! element) pairs identical across platforms and runs for a given seed.

use crate::closed::{self, RootSet};
use crate::perm::Perm;
use crate::root_system::RootSystem;
use crate::weyl::WeylAction;

/// splitmix64; passes through every 64-bit state exactly once.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// A random closed set: a few random roots closed up under addition.
pub fn random_closed_set(rs: &RootSystem, rng: &mut SplitMix64) -> RootSet {
    let picks = 1 + rng.below(4);
    let mut set = RootSet::EMPTY;
    for _ in 0..picks {
        set.insert(rng.below(rs.num_roots()));
    }
    closed::close_up(rs, set)
}

/// A random Weyl element as a product of random simple reflections.
pub fn random_weyl_element(wa: &WeylAction, rng: &mut SplitMix64) -> Perm {
    let len = rng.below(24);
    let mut p = Perm::identity(wa.rs().num_roots());
    for _ in 0..len {
        p = wa.simple_reflection(rng.below(wa.rs().rank())).compose(&p);
    }
    p
}
