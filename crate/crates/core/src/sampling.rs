//! Deterministic sampling.
//!
//! All random draws go through [`SampleRng`]: a ChaCha8 stream seeded with
//! `seed_from_u64(seed)`. Each `f64` in `[0, 1)` is built from one 64-bit
//! word as `(word >> 11) * 2^-53`, so sample points are reproducible
//! bit-for-bit on every platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Hypercomplex;
use crate::calculus::Point4;
use crate::error::{Error, Result};
use crate::scale::Scale;

pub const DEFAULT_SEED: u64 = 0x5348_5800_2024_0001;

#[derive(Debug, Clone)]
pub struct SampleRng {
    inner: ChaCha8Rng,
}

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        SampleRng { inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform integer in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        (self.unit() * n as f64) as usize % n.max(1)
    }

    pub fn coords(&mut self, lo: f64, hi: f64) -> [f64; 4] {
        [(); 4].map(|_| self.uniform(lo, hi))
    }

    /// Element with coordinates uniform in `[lo, hi)`.
    pub fn hypercomplex(&mut self, scale: Scale, lo: f64, hi: f64) -> Hypercomplex {
        Hypercomplex::from_raw(scale, self.coords(lo, hi))
    }

    pub fn point(&mut self, lo: f64, hi: f64) -> Point4 {
        Point4(self.coords(lo, hi))
    }
}

/// An open connected region of `R^4`, used as the domain `U` for
/// regularity checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Region {
    /// Open box `center ± radius` in every coordinate.
    Box { center: [f64; 4], radius: f64 },
    /// Open Euclidean ball.
    Ball { center: [f64; 4], radius: f64 },
}

impl Default for Region {
    fn default() -> Self {
        Region::unit_box()
    }
}

impl Region {
    pub fn unit_box() -> Self {
        Region::Box { center: [0.0; 4], radius: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        let (c, r) = match self {
            Region::Box { center, radius } | Region::Ball { center, radius } => (center, *radius),
        };
        if !(r > 0.0 && r.is_finite()) || c.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!("region radius must be positive, got {r}")));
        }
        Ok(())
    }

    pub fn contains(&self, p: &Point4) -> bool {
        match self {
            Region::Box { center, radius } => {
                p.0.iter().zip(center).all(|(x, c)| (x - c).abs() < *radius)
            }
            Region::Ball { center, radius } => {
                let d2: f64 = p.0.iter().zip(center).map(|(x, c)| (x - c) * (x - c)).sum();
                d2 < radius * radius
            }
        }
    }

    /// `n` points drawn with the seeded generator. Balls use rejection from
    /// the enclosing box.
    pub fn sample(&self, n: usize, seed: u64) -> Vec<Point4> {
        let mut rng = SampleRng::new(seed);
        let mut out = Vec::with_capacity(n);
        let (center, radius) = match self {
            Region::Box { center, radius } | Region::Ball { center, radius } => (*center, *radius),
        };
        while out.len() < n {
            let mut x = [0.0; 4];
            for (xi, ci) in x.iter_mut().zip(center) {
                *xi = ci + rng.uniform(-radius, radius);
            }
            let p = Point4(x);
            if self.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}
