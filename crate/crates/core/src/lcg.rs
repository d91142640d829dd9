//! Seeded 64-bit linear congruential generator for reproducible sweeps.
//!
//! The recurrence is pinned so that independent implementations draw the
//! same divisors: x <- x * 6364136223846793005 + 1442695040888963407
//! (mod 2^64), with samples taken from the high bits of the state.

use crate::intersection::DivisorClass;
use crate::linalg::Int;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        self.state
    }

    /// Uniform-ish integer in [-max_abs, max_abs] from the high 31 bits.
    pub fn int_in(&mut self, max_abs: i64) -> i64 {
        debug_assert!(max_abs >= 0);
        let span = 2 * max_abs + 1;
        let high = (self.next_u64() >> 33) as i64;
        high.rem_euclid(span) - max_abs
    }

    /// Integral divisor with coefficients in [-max_abs, max_abs], drawn in
    /// canonical facet order.
    pub fn divisor(&mut self, ray_count: usize, max_abs: i64) -> DivisorClass {
        let coefficients: Vec<i64> = (0..ray_count).map(|_| self.int_in(max_abs)).collect();
        DivisorClass::from_integers(&coefficients)
    }

    /// Random lattice point with coordinates in [-max_abs, max_abs].
    pub fn lattice_point(&mut self, dim: usize, max_abs: i64) -> Vec<Int> {
        (0..dim).map(|_| Int::from(self.int_in(max_abs))).collect()
    }
}
