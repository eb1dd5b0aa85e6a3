use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::rng::{CounterRng, Stream};
use crate::eigensolve::HermitianMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    /// Real symmetric Gaussian: off-diagonal variance 1/2, diagonal variance 1.
    Goe,
    /// Complex Hermitian Gaussian: off-diagonal `E|z|² = 1/2`, diagonal variance 1.
    Gue,
    /// Real tridiagonal with diagonal `k + U(0, ½)` and off-diagonal `½ + U(0, 1)`.
    Jacobi,
    /// `diag(k + 1 + U(0, ½))`, strictly increasing.
    Diagonal,
    /// `Q D Qᵀ` with repeated levels in `D` and a random orthogonal `Q`.
    Clustered,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [Self::Goe, Self::Gue, Self::Jacobi, Self::Diagonal, Self::Clustered];

    pub fn name(self) -> &'static str {
        match self {
            Self::Goe => "goe",
            Self::Gue => "gue",
            Self::Jacobi => "jacobi",
            Self::Diagonal => "diagonal",
            Self::Clustered => "clustered",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown generator kind '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
    /// Level multiplicities for [`GeneratorKind::Clustered`]; defaults to pairs
    /// (plus a trailing singleton when `n` is odd).
    pub cluster_multiplicities: Option<Vec<usize>>,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize, seed: u64) -> Self {
        Self { kind, n, seed, cluster_multiplicities: None }
    }

    pub fn clustered(multiplicities: Vec<usize>, seed: u64) -> Self {
        Self {
            kind: GeneratorKind::Clustered,
            n: multiplicities.iter().sum(),
            seed,
            cluster_multiplicities: Some(multiplicities),
        }
    }

    /// Multiplicities after defaulting, validated against `n`.
    pub fn multiplicities(&self) -> Result<Vec<usize>> {
        let m = match &self.cluster_multiplicities {
            Some(m) => m.clone(),
            None => {
                let mut m = vec![2; self.n / 2];
                if self.n % 2 == 1 {
                    m.push(1);
                }
                m
            }
        };
        if m.contains(&0) {
            return Err(Error::InvalidSpec("multiplicities must be positive".into()));
        }
        if m.iter().sum::<usize>() != self.n {
            return Err(Error::InvalidSpec(format!(
                "multiplicities sum to {}, expected n = {}",
                m.iter().sum::<usize>(),
                self.n
            )));
        }
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be positive".into()));
        }
        match self.kind {
            GeneratorKind::Clustered => self.multiplicities().map(|_| ()),
            _ if self.cluster_multiplicities.is_some() => {
                Err(Error::InvalidSpec("multiplicities only apply to the clustered kind".into()))
            }
            _ => Ok(()),
        }
    }

    /// Short provenance tag, e.g. `goe:n=16:seed=3`.
    pub fn provenance(&self) -> String {
        let mut s = format!("{}:n={}:seed={}", self.kind, self.n, self.seed);
        if let Some(m) = &self.cluster_multiplicities {
            let m: Vec<String> = m.iter().map(|k| k.to_string()).collect();
            s.push_str(&format!(":mult={}", m.join(",")));
        }
        s
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<HermitianMatrix<f64>> {
    spec.validate()?;
    let n = spec.n;
    let rng = CounterRng::new(spec.seed);
    let idx = |i: usize, j: usize| (i * n + j) as u64;
    let real = |x: f64| Complex::new(x, 0.0);

    match spec.kind {
        GeneratorKind::Goe => HermitianMatrix::from_lower_fn(n, |i, j| {
            if i == j {
                real(rng.normal(Stream::Diagonal, i as u64))
            } else {
                real(rng.normal(Stream::OffDiagonal, idx(i, j)) * std::f64::consts::FRAC_1_SQRT_2)
            }
        }),
        GeneratorKind::Gue => HermitianMatrix::from_lower_fn(n, |i, j| {
            if i == j {
                real(rng.normal(Stream::Diagonal, i as u64))
            } else {
                Complex::new(
                    0.5 * rng.normal(Stream::OffDiagonal, idx(i, j)),
                    0.5 * rng.normal(Stream::Imaginary, idx(i, j)),
                )
            }
        }),
        GeneratorKind::Jacobi => HermitianMatrix::from_real_lower_fn(n, |i, j| {
            if i == j {
                i as f64 + 0.5 * rng.uniform(Stream::Diagonal, i as u64)
            } else if i == j + 1 {
                0.5 + rng.uniform(Stream::Coupling, j as u64)
            } else {
                0.0
            }
        }),
        GeneratorKind::Diagonal => HermitianMatrix::from_real_lower_fn(n, |i, j| {
            if i == j {
                (i + 1) as f64 + 0.5 * rng.uniform(Stream::Diagonal, i as u64)
            } else {
                0.0
            }
        }),
        GeneratorKind::Clustered => {
            let mult = spec.multiplicities()?;
            let mut levels = Vec::with_capacity(n);
            for (c, &m) in mult.iter().enumerate() {
                let level = 3.0 * c as f64 + 1.0 + rng.uniform(Stream::Levels, c as u64);
                levels.extend(std::iter::repeat_n(level, m));
            }
            let q = random_orthogonal(n, &rng);
            HermitianMatrix::from_real_lower_fn(n, |i, j| {
                (0..n).map(|k| q[i * n + k] * levels[k] * q[j * n + k]).sum()
            })
        }
    }
}

/// Orthonormalized Gaussian matrix (row-major), via modified Gram–Schmidt
/// run twice over the columns.
fn random_orthogonal(n: usize, rng: &CounterRng) -> Vec<f64> {
    let mut q: Vec<f64> = (0..n * n).map(|k| rng.normal(Stream::Basis, k as u64)).collect();
    for c in 0..n {
        for _ in 0..2 {
            for p in 0..c {
                let dot: f64 = (0..n).map(|r| q[r * n + p] * q[r * n + c]).sum();
                for r in 0..n {
                    q[r * n + c] -= dot * q[r * n + p];
                }
            }
        }
        let norm = (0..n).map(|r| q[r * n + c] * q[r * n + c]).sum::<f64>().sqrt();
        for r in 0..n {
            q[r * n + c] /= norm;
        }
    }
    q
}
