use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::Hypercomplex;
use crate::error::{Error, Result};
use crate::scale::Scale;

/// The 2×2 complex matrix `π_t((a, b)) = [[a, t b], [conj(b), conj(a)]]`.
///
/// Serialized row-major as four `[re, im]` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[[f64; 2]; 4]", into = "[[f64; 2]; 4]")]
pub struct Realization {
    pub m: [[Complex64; 2]; 2],
}

impl From<[[f64; 2]; 4]> for Realization {
    fn from(v: [[f64; 2]; 4]) -> Self {
        let c = |i: usize| Complex64::new(v[i][0], v[i][1]);
        Realization { m: [[c(0), c(1)], [c(2), c(3)]] }
    }
}

impl From<Realization> for [[f64; 2]; 4] {
    fn from(r: Realization) -> Self {
        let p = |z: Complex64| [z.re, z.im];
        [p(r.m[0][0]), p(r.m[0][1]), p(r.m[1][0]), p(r.m[1][1])]
    }
}

impl Realization {
    pub fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        Realization { m: [[m11, m12], [m21, m22]] }
    }

    pub fn of(h: &Hypercomplex) -> Self {
        let (a, b) = h.pair();
        Realization::new(a, b * h.t(), b.conj(), a.conj())
    }

    pub fn identity() -> Self {
        let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        Realization::new(o, z, z, o)
    }

    pub fn matmul(&self, rhs: &Realization) -> Realization {
        let (a, b) = (&self.m, &rhs.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Realization::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, rhs: &Realization) -> Realization {
        let (a, b) = (&self.m, &rhs.m);
        Realization::new(a[0][0] + b[0][0], a[0][1] + b[0][1], a[1][0] + b[1][0], a[1][1] + b[1][1])
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn matrix_trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    /// Deviation from the pattern `m22 = conj(m11)`, `m12 = t conj(m21)`.
    pub fn pattern_residual(&self, scale: Scale) -> f64 {
        let [[m11, m12], [m21, m22]] = self.m;
        let r1 = (m22 - m11.conj()).norm();
        let r2 = (m12 - m21.conj() * scale.t()).norm();
        r1.max(r2)
    }

    /// Inverse of [`Realization::of`].
    ///
    /// `b` is always read from `m21`; at `t = 0` the entry `m12` must vanish
    /// and carries nothing about `b`.
    pub fn unrealize(&self, scale: Scale, tol: f64) -> Result<Hypercomplex> {
        let residual = self.pattern_residual(scale);
        if residual > tol {
            return Err(Error::PatternViolation { residual });
        }
        Hypercomplex::from_pair(scale, self.m[0][0], self.m[1][0].conj())
    }

    pub fn max_abs_diff(&self, other: &Realization) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let z = self.m[i][j] - other.m[i][j];
                d = d.max(z.re.abs()).max(z.im.abs());
            }
        }
        d
    }
}

impl Hypercomplex {
    pub fn realize(&self) -> Realization {
        Realization::of(self)
    }
}
