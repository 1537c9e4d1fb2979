use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The real scale `t` of the ring `H_t`.
///
/// `-0.0` is normalized to `+0.0` so that scale equality can be decided on
/// the bit pattern.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Scale(f64);

impl Scale {
    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::NonFinite("scale"));
        }
        Ok(Scale(if t == 0.0 { 0.0 } else { t }))
    }

    pub const QUATERNION: Scale = Scale(-1.0);
    pub const SPLIT: Scale = Scale(1.0);
    pub const ZERO: Scale = Scale(0.0);

    #[inline]
    pub fn t(self) -> f64 {
        self.0
    }

    /// `sgn(t)`; undefined at zero.
    pub fn sgn(self) -> Result<f64> {
        if self.0 > 0.0 {
            Ok(1.0)
        } else if self.0 < 0.0 {
            Ok(-1.0)
        } else {
            Err(Error::ZeroScaleSign)
        }
    }

    /// `sqrt(|t|)`.
    #[inline]
    pub fn rho(self) -> f64 {
        self.0.abs().sqrt()
    }

    /// `sgn(t) / sqrt(|t|)`, the factor attached to `j_t` and `k_t` in the
    /// scaled operators and the `eta` polynomials.
    pub fn sgn_over_rho(self) -> Result<f64> {
        Ok(self.sgn()? / self.rho())
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    pub fn ensure_same(self, other: Scale) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ScaleMismatch { left: self.0, right: other.0 })
        }
    }
}

impl PartialEq for Scale {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits()
    }
}

impl Eq for Scale {}

impl TryFrom<f64> for Scale {
    type Error = Error;

    fn try_from(t: f64) -> Result<Self> {
        Scale::new(t)
    }
}

impl From<Scale> for f64 {
    fn from(s: Scale) -> f64 {
        s.0
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_and_rho() {
        let s = Scale::new(-4.0).unwrap();
        assert_eq!(s.sgn().unwrap(), -1.0);
        assert_eq!(s.rho(), 2.0);
        assert_eq!(s.sgn().unwrap() * s.t().abs(), s.t());
        assert_eq!(Scale::new(0.0).unwrap().sgn(), Err(Error::ZeroScaleSign));
        assert_eq!(Scale::ZERO.rho(), 0.0);
    }

    #[test]
    fn negative_zero_is_zero() {
        assert_eq!(Scale::new(-0.0).unwrap(), Scale::ZERO);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Scale::new(f64::NAN).is_err());
        assert!(Scale::new(f64::INFINITY).is_err());
    }

    #[test]
    fn equality_is_exact() {
        assert_ne!(Scale::new(1.0).unwrap(), Scale::new(1.0 + f64::EPSILON).unwrap());
        assert!(Scale::SPLIT.ensure_same(Scale::QUATERNION).is_err());
    }
}
