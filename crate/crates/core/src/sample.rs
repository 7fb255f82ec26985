//! Deterministic instance sampling for randomized verification runs.
//!
//! The generator is a self-contained SplitMix64 stream so that a seed
//! reproduces the same instances on every platform and toolchain.
//!
//! Sampler shape: at most 3 distinct exponents with denominators at most 6
//! and values at most 2; at most 3 factors; each factor has at most 4
//! generators with coordinates at most 12.

use crate::geom::{rat, Rat};
use crate::newton::{MonomialIdeal, RIdeal};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in 0..n. Modulo bias is irrelevant here; determinism
    /// is what matters.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }
}

/// Random exponent pool: up to `max_size` distinct positive rationals with
/// denominator at most `max_den` and value at most 2. Half of the draws are
/// capped at 1 so that polygons containing (1,1) show up often.
fn random_exponent_pool(rng: &mut SplitMix64, max_size: u64, max_den: u64) -> Vec<Rat> {
    let target = 1 + rng.below(max_size);
    let mut pool: Vec<Rat> = Vec::new();
    while (pool.len() as u64) < target {
        let den = 1 + rng.below(max_den);
        let cap = if rng.below(2) == 0 { den } else { 2 * den };
        let num = 1 + rng.below(cap);
        let value = rat(num as i64, den as i64);
        if !pool.contains(&value) {
            pool.push(value);
        }
    }
    pool
}

/// Generator coordinate in 0..=12, drawn from a mixture that favors the
/// near-origin region so both mld branches occur at useful rates.
fn random_coordinate(rng: &mut SplitMix64) -> u64 {
    match rng.below(3) {
        0 => rng.below(2),
        1 => rng.below(4),
        _ => rng.below(13),
    }
}

/// Random monomial R-ideal with the documented sampler shape.
pub fn random_rideal(rng: &mut SplitMix64) -> RIdeal {
    let pool = random_exponent_pool(rng, 3, 6);
    let factor_count = 1 + rng.below(3);
    let mut factors = Vec::new();
    for _ in 0..factor_count {
        let exponent = pool[rng.below(pool.len() as u64) as usize].clone();
        let gen_count = 1 + rng.below(4);
        let generators = (0..gen_count)
            .map(|_| (random_coordinate(rng), random_coordinate(rng)))
            .collect();
        factors.push((
            MonomialIdeal::new(generators).expect("generator list is nonempty"),
            exponent,
        ));
    }
    RIdeal::new(factors).expect("factor list is nonempty with positive exponents")
}

/// Random coefficient set values: up to `max_size` distinct positive
/// rationals with denominator at most `max_den` and value at most 2.
pub fn random_coefficients(rng: &mut SplitMix64, max_size: u64, max_den: u64) -> Vec<Rat> {
    random_exponent_pool(rng, max_size, max_den)
}
