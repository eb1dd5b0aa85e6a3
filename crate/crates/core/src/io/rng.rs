//! Counter-based random stream.
//!
//! Every draw is a pure function of `(seed, stream, counter)`:
//!
//! ```text
//! mix(z)  = splitmix64 finalizer
//! key     = mix(seed + GOLDEN·(stream + 1))
//! bits    = mix(key + GOLDEN·(counter + 1))            (wrapping u64 arithmetic)
//! uniform = ((bits >> 11) + 0.5) · 2⁻⁵³                 in (0, 1)
//! normal  = sqrt(−2 ln u₁) · cos(2π u₂),  u₁ = uniform(2k), u₂ = uniform(2k + 1)
//! ```
//!
//! with `GOLDEN = 0x9E3779B97F4A7C15`. Output never depends on draw order, so
//! matrices can be filled in any order (or in parallel) and reproduced from
//! another language with the same few lines.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent sub-streams of one seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    OffDiagonal = 0,
    Imaginary = 1,
    Diagonal = 2,
    Coupling = 3,
    Basis = 4,
    Levels = 5,
}

#[derive(Clone, Copy, Debug)]
pub struct CounterRng {
    seed: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn bits(&self, stream: Stream, counter: u64) -> u64 {
        let key = mix(self.seed.wrapping_add(GOLDEN.wrapping_mul(stream as u64 + 1)));
        mix(key.wrapping_add(GOLDEN.wrapping_mul(counter.wrapping_add(1))))
    }

    /// Uniform on the open interval (0, 1).
    pub fn uniform(&self, stream: Stream, counter: u64) -> f64 {
        ((self.bits(stream, counter) >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal; consumes counters `2k` and `2k + 1`.
    pub fn normal(&self, stream: Stream, k: u64) -> f64 {
        let u1 = self.uniform(stream, 2 * k);
        let u2 = self.uniform(stream, 2 * k + 1);
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }
}
