//! Seeded randomness for the verification suites.
//!
//! The PRNG is pinned to SplitMix64 so that a 64-bit seed produces the same
//! stream on every platform and in every build; reports and frozen test
//! tables depend on that. Raw integers are drawn x-major, mask-ascending, by
//! reduction of the next stream value modulo the range width.

use crate::duality::LinkageFunction;
use crate::rational::Rational;
use crate::system::GroundSet;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw in `0..bound` for the tiny bounds used here.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}

/// A fixed mixing of (base seed, system index, trial index) into a stream
/// seed, so that every suite derives the same linkage for the same triple.
pub fn derive_seed(base: u64, system: u64, trial: u64) -> u64 {
    let mut rng = SplitMix64::new(base ^ system.wrapping_mul(0x9E3779B97F4A7C15));
    let a = rng.next_u64();
    let mut rng = SplitMix64::new(a ^ trial.wrapping_mul(0xD1B54A32D192ED03));
    rng.next_u64()
}

/// A random linkage that is monotone by construction: draw an arbitrary
/// integer table `raw(x, Y)` in `lo..=hi`, then close it upward with
/// `π(x, X) = max{raw(x, Y) : Y ⊇ X}`. The max over supersets is antitone in
/// `X`, so the result always passes the monotonicity check.
pub fn random_monotone_linkage(ground: &GroundSet, seed: u64, lo: i64, hi: i64) -> LinkageFunction {
    assert!(lo <= hi, "empty value range");
    let n = ground.n();
    let size = 1usize << n;
    let width = (hi - lo + 1) as u64;
    let mut rng = SplitMix64::new(seed);
    let mut tables: Vec<Vec<i64>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut raw: Vec<i64> = (0..size)
            .map(|_| lo + rng.next_below(width) as i64)
            .collect();
        // superset-max zeta transform
        for b in 0..n {
            for mask in 0..size {
                if mask & (1 << b) == 0 {
                    raw[mask] = raw[mask].max(raw[mask | (1 << b)]);
                }
            }
        }
        tables.push(raw);
    }
    LinkageFunction::from_fn(ground, |x, set| {
        Rational::int(tables[x][set.mask() as usize])
    })
}
