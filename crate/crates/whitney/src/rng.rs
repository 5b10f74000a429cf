/// SplitMix64 pseudo random number generator.
///
/// This is the generator fixed for every randomized feature of the crate
/// (Erdős–Rényi sampling, Monte Carlo index expectation). It is a single
/// 64-bit state with the finalizer of Steele–Lea–Flood's SplitMix64, so a
/// seed reproduces the identical stream on every platform and in every
/// port of the toolkit.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// The i-th substream of a master seed. The stream index is pushed
    /// through the finalizer before seeding, so substreams do not overlap
    /// as shifted windows of one sequence; per-sample draws stay
    /// decorrelated and independent of scheduling.
    pub fn substream(seed: u64, i: u64) -> Self {
        let mut seeder = SplitMix64::new(seed.wrapping_add(GAMMA.wrapping_mul(i)));
        let state = seeder.next_u64();
        SplitMix64::new(state)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in 0..bound via rejection-free Lemire reduction.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}
