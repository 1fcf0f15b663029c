//! Deterministic randomness.
//!
//! Everything random in the crate flows through [`SplitMix64`], a named,
//! seedable 64-bit generator, or through the stateless [`edge_uniform`]
//! stream. Edge-deletion passes derive one independent value per
//! `(seed, edge key)` pair so the outcome does not depend on iteration order.

/// SplitMix64 finalizer: a bijective 64-bit mix.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Sequential SplitMix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n` (n > 0), bias negligible at our sizes.
    #[inline]
    pub fn gen_range(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.gen_range(i + 1);
            xs.swap(i, j);
        }
    }

    /// `k` distinct values from `0..n` in shuffled order.
    pub fn sample_distinct(&mut self, n: usize, k: usize) -> Vec<usize> {
        debug_assert!(k <= n);
        let mut ids: Vec<usize> = (0..n).collect();
        self.shuffle(&mut ids);
        ids.truncate(k);
        ids
    }

    /// Derive an independent child generator; used to give each worker or
    /// restart its own stream.
    pub fn fork(&mut self, tag: u64) -> SplitMix64 {
        SplitMix64::new(mix64(self.next_u64() ^ mix64(tag)))
    }
}

/// Stateless uniform in `[0, 1)` for the pair `(seed, edge_key)`.
///
/// Independent of iteration order by construction: the value is a pure
/// function of its arguments.
#[inline]
pub fn edge_uniform(seed: u64, edge_key: u64) -> f64 {
    let z = mix64(mix64(seed) ^ mix64(edge_key.wrapping_add(0x632be59bd9b4e019)));
    (z >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
