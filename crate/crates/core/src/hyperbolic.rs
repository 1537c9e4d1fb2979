//! The scaled hyperbolic subring `D_t = {x + u j_t}` and its polar form.
//!
//! `j_t^2 = t`, so `D_t` is the complex numbers for `t < 0`, the split-complex
//! numbers for `t > 0` and the dual numbers for `t = 0`. The unit elements
//! are `e^{j_t θ}`:
//!
//! | scale | `e^{j_t θ}` |
//! |-------|-------------|
//! | `t < 0` | `cos(ρθ) + j_t sin(ρθ)/ρ` |
//! | `t > 0` | `cosh(ρθ) + j_t sinh(ρθ)/ρ` |
//! | `t = 0` | `±1 + u j_0` |
//!
//! with `ρ = sqrt|t|`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::algebra::Hypercomplex;
use crate::error::{Error, Result};
use crate::scale::Scale;

/// Default relative tolerance for the null cone and unit tests.
pub const POLAR_TOL: f64 = 1e-12;

/// `x + u j_t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "HyperbolicRepr", into = "HyperbolicRepr")]
pub struct HyperbolicNumber {
    pub scale: Scale,
    pub x: f64,
    pub u: f64,
}

#[derive(Serialize, Deserialize)]
struct HyperbolicRepr {
    t: f64,
    x: f64,
    u: f64,
}

impl TryFrom<HyperbolicRepr> for HyperbolicNumber {
    type Error = Error;

    fn try_from(r: HyperbolicRepr) -> Result<Self> {
        HyperbolicNumber::new(Scale::new(r.t)?, r.x, r.u)
    }
}

impl From<HyperbolicNumber> for HyperbolicRepr {
    fn from(d: HyperbolicNumber) -> Self {
        HyperbolicRepr { t: d.scale.t(), x: d.x, u: d.u }
    }
}

impl HyperbolicNumber {
    pub fn new(scale: Scale, x: f64, u: f64) -> Result<Self> {
        if !(x.is_finite() && u.is_finite()) {
            return Err(Error::NonFinite("hyperbolic coordinate"));
        }
        Ok(HyperbolicNumber { scale, x, u })
    }

    pub fn embed(&self) -> Hypercomplex {
        Hypercomplex::from_raw(self.scale, [self.x, 0.0, self.u, 0.0])
    }

    /// Projects an element with vanishing `i` and `k_t` parts.
    pub fn from_hypercomplex(h: &Hypercomplex) -> Result<Self> {
        let [x, y, u, v] = h.coords();
        if y != 0.0 || v != 0.0 {
            return Err(Error::InvalidArgument("element is not in the hyperbolic subring".into()));
        }
        HyperbolicNumber::new(h.scale(), x, u)
    }

    pub fn checked_mul(&self, rhs: &HyperbolicNumber) -> Result<HyperbolicNumber> {
        self.scale.ensure_same(rhs.scale)?;
        let t = self.scale.t();
        Ok(HyperbolicNumber {
            scale: self.scale,
            x: self.x * rhs.x + t * self.u * rhs.u,
            u: self.x * rhs.u + self.u * rhs.x,
        })
    }

    /// `x^2 - t u^2`.
    pub fn det(&self) -> f64 {
        self.x * self.x - self.scale.t() * self.u * self.u
    }

    pub fn seminorm(&self) -> f64 {
        self.det().abs().sqrt()
    }

    fn magnitude_sq(&self) -> f64 {
        self.x * self.x + self.scale.t().abs() * self.u * self.u
    }

    pub fn is_unit(&self) -> bool {
        (self.seminorm() - 1.0).abs() <= 1e-9
    }

    /// Euclidean argument of `(x, u)` in `[0, 2π)`; reported alongside the
    /// branch parameter for comparison only.
    pub fn euclidean_arg(&self) -> f64 {
        self.u.atan2(self.x).rem_euclid(TAU)
    }
}

/// `e^{j_t θ}` for `t != 0`. At `t = 0` this returns `1 + θ j_0`, the
/// positive branch of [`exp_j0`].
pub fn exp_j(scale: Scale, theta: f64) -> HyperbolicNumber {
    let t = scale.t();
    let rho = scale.rho();
    let (x, u) = if t < 0.0 {
        let a = rho * theta;
        (a.cos(), a.sin() / rho)
    } else if t > 0.0 {
        let a = rho * theta;
        (a.cosh(), a.sinh() / rho)
    } else {
        (1.0, theta)
    };
    HyperbolicNumber { scale, x, u }
}

/// The `t = 0` unit `±1 + u j_0`.
pub fn exp_j0(sign: f64, u: f64) -> HyperbolicNumber {
    HyperbolicNumber { scale: Scale::ZERO, x: sign.signum(), u }
}

/// `d = sign · r · e^{j_t θ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Polar {
    pub r: f64,
    pub theta: f64,
    pub sign: i8,
    /// Componentwise reconstruction error.
    pub residual: f64,
}

impl Polar {
    pub fn reconstruct(&self, scale: Scale) -> HyperbolicNumber {
        let s = f64::from(self.sign);
        let e = if scale.is_zero() { exp_j0(s, self.theta) } else { exp_j(scale, self.theta) };
        let k = if scale.is_zero() { self.r } else { s * self.r };
        HyperbolicNumber { scale, x: k * e.x, u: k * e.u }
    }
}

/// Splits `d` into `sign · ‖d‖ · e^{j_t θ}`.
///
/// * `t < 0`: `θ = atan2(ρu, x)/ρ`, reduced modulo `2π/ρ`, `sign = +1`.
/// * `t > 0`: `θ = atanh(ρu/x)/ρ`, `sign = sgn(x)`; only the sector
///   `|x| > ρ|u|` has such a form, the rest yields [`Error::NoBranch`].
/// * `t = 0`: `d = r (±1 + θ j_0)` with `r = |x|`, `θ = u/|x|`.
pub fn polar_decompose(d: &HyperbolicNumber) -> Result<Polar> {
    let seminorm = d.seminorm();
    if d.det().abs() <= POLAR_TOL * d.magnitude_sq() {
        return Err(Error::NullCone { seminorm });
    }
    let t = d.scale.t();
    let rho = d.scale.rho();
    let (r, theta, sign) = if t < 0.0 {
        let period = TAU / rho;
        (seminorm, ((rho * d.u).atan2(d.x) / rho).rem_euclid(period), 1)
    } else if t > 0.0 {
        let sign: i8 = if d.x < 0.0 { -1 } else { 1 };
        if d.det() < 0.0 {
            // closest cosh-form candidate: match u exactly and report the miss in x
            let theta = (rho * d.u / seminorm).asinh() / rho;
            let probe = Polar { r: seminorm, theta, sign, residual: 0.0 }.reconstruct(d.scale);
            let residual = (probe.x - d.x).abs().max((probe.u - d.u).abs());
            return Err(Error::NoBranch { residual });
        }
        // atanh(ρu/x) = ln((x + ρu)/(x - ρu))/2; using the factors of det for
        // both r and θ keeps their rounding errors matched near the null cone
        let s = f64::from(sign);
        let (plus, minus) = (s * (d.x + rho * d.u), s * (d.x - rho * d.u));
        ((plus * minus).sqrt(), 0.5 * (plus / minus).ln() / rho, sign)
    } else {
        (d.x.abs(), d.u / d.x.abs(), if d.x < 0.0 { -1 } else { 1 })
    };
    let mut polar = Polar { r, theta, sign, residual: 0.0 };
    let back = polar.reconstruct(d.scale);
    polar.residual = (back.x - d.x).abs().max((back.u - d.u).abs());
    Ok(polar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn d(t: f64, x: f64, u: f64) -> HyperbolicNumber {
        HyperbolicNumber::new(Scale::new(t).unwrap(), x, u).unwrap()
    }

    #[test]
    fn embedding_shape() {
        assert_eq!(d(1.0, 1.0, 0.0).embed(), Hypercomplex::one(Scale::SPLIT));
        assert_eq!(d(2.0, 3.0, 4.0).embed().coords(), [3.0, 0.0, 4.0, 0.0]);
    }

    #[test]
    fn split_j_squares_to_one() {
        let j = d(1.0, 0.0, 1.0).embed();
        assert_eq!(j * j, Hypercomplex::one(Scale::SPLIT));
    }

    #[test]
    fn quaternion_subring_is_complex() {
        let p = d(-1.0, 1.0, 2.0).checked_mul(&d(-1.0, 3.0, -1.0)).unwrap();
        // (1 + 2i)(3 - i) = 5 + 5i
        assert_eq!((p.x, p.u), (5.0, 5.0));
        let via_ring = d(-1.0, 1.0, 2.0).embed() * d(-1.0, 3.0, -1.0).embed();
        assert_eq!(via_ring, p.embed());
    }

    #[test]
    fn exp_examples() {
        for t in [-2.0, -1.0, 0.5, 1.0, 3.0] {
            let e = exp_j(Scale::new(t).unwrap(), 0.0);
            assert_eq!((e.x, e.u), (1.0, 0.0));
        }
        let e = exp_j(Scale::QUATERNION, FRAC_PI_2);
        assert!(e.x.abs() < 1e-15 && (e.u - 1.0).abs() < 1e-15);
        let e = exp_j(Scale::SPLIT, 1.0);
        assert_eq!((e.x, e.u), (1f64.cosh(), 1f64.sinh()));
        assert!((e.seminorm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn polar_examples() {
        let p = polar_decompose(&d(-1.0, 0.0, 1.0)).unwrap();
        assert!((p.r - 1.0).abs() < 1e-15 && (p.theta - FRAC_PI_2).abs() < 1e-15);
        let p = polar_decompose(&d(1.0, 2f64.cosh(), 2f64.sinh())).unwrap();
        assert!((p.r - 1.0).abs() < 1e-12 && (p.theta - 2.0).abs() < 1e-12);
        assert!(matches!(polar_decompose(&d(1.0, 1.0, 1.0)), Err(Error::NullCone { .. })));
    }

    #[test]
    fn timelike_sector_has_no_branch() {
        assert!(matches!(polar_decompose(&d(1.0, 0.5, 2.0)), Err(Error::NoBranch { .. })));
    }

    #[test]
    fn negative_x_split_uses_sign() {
        let src = d(2.0, -3.0, 1.0);
        let p = polar_decompose(&src).unwrap();
        assert_eq!(p.sign, -1);
        assert!(p.residual < 1e-12);
    }

    #[test]
    fn zero_scale_polar() {
        let src = d(0.0, -2.0, 3.0);
        let p = polar_decompose(&src).unwrap();
        assert_eq!((p.r, p.sign), (2.0, -1));
        let back = p.reconstruct(Scale::ZERO);
        assert_eq!((back.x, back.u), (-2.0, 3.0));
        assert!(matches!(polar_decompose(&d(0.0, 0.0, 1.0)), Err(Error::NullCone { .. })));
    }

    #[test]
    fn units() {
        assert!(exp_j(Scale::new(2.0).unwrap(), 0.7).is_unit());
        assert!(!d(1.0, 2.0, 0.0).is_unit());
        assert!(d(0.0, -1.0, 7.0).is_unit());
        assert!(exp_j0(-1.0, 7.0).is_unit());
    }

    #[test]
    fn json_shapes() {
        let s = serde_json::to_string(&d(1.0, 2.0, 0.5)).unwrap();
        assert_eq!(s, r#"{"t":1.0,"x":2.0,"u":0.5}"#);
        let p = Polar { r: 1.0, theta: 0.5, sign: 1, residual: 0.0 };
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"r":1.0,"theta":0.5,"sign":1,"residual":0.0}"#);
    }
}
