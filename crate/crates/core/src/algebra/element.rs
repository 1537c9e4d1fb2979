use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scale::Scale;

/// Real basis of `H_t`: `{1, i, j_t, k_t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    One,
    I,
    J,
    K,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::One, Basis::I, Basis::J, Basis::K];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::One => "1",
            Basis::I => "i",
            Basis::J => "j",
            Basis::K => "k",
        }
    }
}

/// The `t`-scaled product in coordinates.
///
/// With `a = x1 + x2 i`, `b = x3 + x4 i` this is
/// `(a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2))`.
#[inline]
pub(crate) fn mul_coords(t: f64, p: &[f64; 4], q: &[f64; 4]) -> [f64; 4] {
    let [p0, p1, p2, p3] = *p;
    let [q0, q1, q2, q3] = *q;
    [
        p0 * q0 - p1 * q1 + t * (p2 * q2 + p3 * q3),
        p0 * q1 + p1 * q0 + t * (p3 * q2 - p2 * q3),
        p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
        p0 * q3 + p1 * q2 + p3 * q0 - p2 * q1,
    ]
}

/// An element `x1 + x2 i + x3 j_t + x4 k_t` of the ring `H_t`.
///
/// The complex-pair view `(a, b)` with `a = x1 + x2 i` and `b = x3 + x4 i`
/// is computed on demand.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "HypercomplexRepr", into = "HypercomplexRepr")]
pub struct Hypercomplex {
    scale: Scale,
    x: [f64; 4],
}

#[derive(Serialize, Deserialize)]
struct HypercomplexRepr {
    t: f64,
    x: [f64; 4],
}

impl TryFrom<HypercomplexRepr> for Hypercomplex {
    type Error = Error;

    fn try_from(r: HypercomplexRepr) -> Result<Self> {
        Hypercomplex::new(Scale::new(r.t)?, r.x)
    }
}

impl From<Hypercomplex> for HypercomplexRepr {
    fn from(h: Hypercomplex) -> Self {
        HypercomplexRepr { t: h.scale.t(), x: h.x }
    }
}

impl Hypercomplex {
    pub fn new(scale: Scale, x: [f64; 4]) -> Result<Self> {
        if x.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("hypercomplex coordinate"));
        }
        Ok(Hypercomplex { scale, x })
    }

    /// Construction without the finiteness check, for internal arithmetic.
    #[inline]
    pub(crate) fn from_raw(scale: Scale, x: [f64; 4]) -> Self {
        Hypercomplex { scale, x }
    }

    pub fn from_pair(scale: Scale, a: Complex64, b: Complex64) -> Result<Self> {
        Hypercomplex::new(scale, [a.re, a.im, b.re, b.im])
    }

    pub fn zero(scale: Scale) -> Self {
        Hypercomplex::from_raw(scale, [0.0; 4])
    }

    pub fn one(scale: Scale) -> Self {
        Hypercomplex::from_raw(scale, [1.0, 0.0, 0.0, 0.0])
    }

    pub fn real(scale: Scale, r: f64) -> Self {
        Hypercomplex::from_raw(scale, [r, 0.0, 0.0, 0.0])
    }

    pub fn basis(scale: Scale, which: Basis) -> Self {
        let mut x = [0.0; 4];
        x[which.index()] = 1.0;
        Hypercomplex::from_raw(scale, x)
    }

    #[inline]
    pub fn scale(&self) -> Scale {
        self.scale
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.scale.t()
    }

    #[inline]
    pub fn coords(&self) -> [f64; 4] {
        self.x
    }

    #[inline]
    pub fn coord(&self, which: Basis) -> f64 {
        self.x[which.index()]
    }

    pub fn a(&self) -> Complex64 {
        Complex64::new(self.x[0], self.x[1])
    }

    pub fn b(&self) -> Complex64 {
        Complex64::new(self.x[2], self.x[3])
    }

    pub fn pair(&self) -> (Complex64, Complex64) {
        (self.a(), self.b())
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(|&c| c == 0.0)
    }

    pub fn checked_mul(&self, rhs: &Hypercomplex) -> Result<Hypercomplex> {
        self.scale.ensure_same(rhs.scale)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn checked_add(&self, rhs: &Hypercomplex) -> Result<Hypercomplex> {
        self.scale.ensure_same(rhs.scale)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn checked_sub(&self, rhs: &Hypercomplex) -> Result<Hypercomplex> {
        self.scale.ensure_same(rhs.scale)?;
        Ok(self.add_unchecked(&rhs.neg()))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, rhs: &Hypercomplex) -> Hypercomplex {
        Hypercomplex::from_raw(self.scale, mul_coords(self.t(), &self.x, &rhs.x))
    }

    #[inline]
    pub(crate) fn add_unchecked(&self, rhs: &Hypercomplex) -> Hypercomplex {
        let mut x = self.x;
        for (c, r) in x.iter_mut().zip(rhs.x) {
            *c += r;
        }
        Hypercomplex::from_raw(self.scale, x)
    }

    pub fn scalar_mul(&self, r: f64) -> Hypercomplex {
        Hypercomplex::from_raw(self.scale, self.x.map(|c| r * c))
    }

    pub fn neg(&self) -> Hypercomplex {
        self.scalar_mul(-1.0)
    }

    /// Integer power by repeated multiplication; `h^0` is the unity.
    pub fn powi(&self, n: u32) -> Hypercomplex {
        (0..n).fold(Hypercomplex::one(self.scale), |acc, _| acc.mul_unchecked(self))
    }

    /// The hypercomplex conjugate `(a, b)† = (conj(a), -b)`.
    pub fn conj(&self) -> Hypercomplex {
        let [x1, x2, x3, x4] = self.x;
        Hypercomplex::from_raw(self.scale, [x1, -x2, -x3, -x4])
    }

    /// `|a|^2 - t |b|^2`, the determinant of the realization.
    pub fn det(&self) -> f64 {
        let [x1, x2, x3, x4] = self.x;
        x1 * x1 + x2 * x2 - self.t() * (x3 * x3 + x4 * x4)
    }

    /// `|a|^2 + |t| |b|^2`, the magnitude used for relative singularity tests.
    pub fn magnitude_sq(&self) -> f64 {
        let [x1, x2, x3, x4] = self.x;
        x1 * x1 + x2 * x2 + self.t().abs() * (x3 * x3 + x4 * x4)
    }

    /// The normalized trace `Re(a)`.
    pub fn trace(&self) -> f64 {
        self.x[0]
    }

    pub fn inverse(&self) -> Result<Hypercomplex> {
        self.inverse_with(SingularityTolerance::default())
    }

    pub fn inverse_with(&self, tol: SingularityTolerance) -> Result<Hypercomplex> {
        let det = self.det();
        if det.abs() <= tol.threshold(self) {
            return Err(Error::Singular { det });
        }
        Ok(self.conj().scalar_mul(1.0 / det))
    }

    pub fn classify(&self) -> InvertibilityClass {
        self.classify_with(SingularityTolerance::default())
    }

    pub fn classify_with(&self, tol: SingularityTolerance) -> InvertibilityClass {
        if self.det().abs() > tol.threshold(self) {
            InvertibilityClass::GroupPart
        } else {
            InvertibilityClass::SemigroupPart { zero: self.is_zero() }
        }
    }

    /// Largest coordinate magnitude; used for residuals.
    pub fn max_abs(&self) -> f64 {
        self.x.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Componentwise distance `max |x_l - y_l|`.
    pub fn max_abs_diff(&self, other: &Hypercomplex) -> f64 {
        self.x.iter().zip(other.x).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Which side of the disjoint union `H_t = H_t^inv ⊔ H_t^sing` an element is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvertibilityClass {
    GroupPart,
    SemigroupPart { zero: bool },
}

/// Relative threshold for `|det| ≈ 0`: an element is singular when
/// `|det| <= relative * (|a|^2 + |t| |b|^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularityTolerance {
    pub relative: f64,
}

impl Default for SingularityTolerance {
    fn default() -> Self {
        SingularityTolerance { relative: 1e-12 }
    }
}

impl SingularityTolerance {
    pub fn threshold(&self, h: &Hypercomplex) -> f64 {
        self.relative * h.magnitude_sq()
    }
}

impl Add for Hypercomplex {
    type Output = Hypercomplex;

    /// Panics on scale mismatch; use [`Hypercomplex::checked_add`] otherwise.
    fn add(self, rhs: Hypercomplex) -> Hypercomplex {
        self.checked_add(&rhs).expect("scale mismatch in addition")
    }
}

impl Sub for Hypercomplex {
    type Output = Hypercomplex;

    fn sub(self, rhs: Hypercomplex) -> Hypercomplex {
        self.checked_sub(&rhs).expect("scale mismatch in subtraction")
    }
}

impl Mul for Hypercomplex {
    type Output = Hypercomplex;

    /// Panics on scale mismatch; use [`Hypercomplex::checked_mul`] otherwise.
    fn mul(self, rhs: Hypercomplex) -> Hypercomplex {
        self.checked_mul(&rhs).expect("scale mismatch in multiplication")
    }
}

impl Mul<Hypercomplex> for f64 {
    type Output = Hypercomplex;

    fn mul(self, rhs: Hypercomplex) -> Hypercomplex {
        rhs.scalar_mul(self)
    }
}

impl Neg for Hypercomplex {
    type Output = Hypercomplex;

    fn neg(self) -> Hypercomplex {
        Hypercomplex::neg(&self)
    }
}

impl fmt::Display for Hypercomplex {
    /// Renders `x1 + x2 i + x3 j_t + x4 k_t` with `t` substituted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x1, x2, x3, x4] = self.x;
        let t = self.t();
        write!(f, "{x1} {} {} i {} {} j_{t} {} {} k_{t}",
            sign(x2), x2.abs(), sign(x3), x3.abs(), sign(x4), x4.abs())
    }
}

fn sign(v: f64) -> char {
    if v.is_sign_negative() {
        '-'
    } else {
        '+'
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: f64, x: [f64; 4]) -> Hypercomplex {
        Hypercomplex::new(Scale::new(t).unwrap(), x).unwrap()
    }

    #[test]
    fn unity_is_neutral() {
        let x = h(0.7, [1.5, -2.0, 0.25, 3.0]);
        let one = Hypercomplex::one(x.scale());
        assert_eq!(one * x, x);
        assert_eq!(x * one, x);
    }

    #[test]
    fn quaternion_jk_is_i() {
        let j = h(-1.0, [0.0, 0.0, 1.0, 0.0]);
        let k = h(-1.0, [0.0, 0.0, 0.0, 1.0]);
        assert_eq!((j * k).coords(), [0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn j_squared_is_t() {
        let j = h(2.0, [0.0, 0.0, 1.0, 0.0]);
        assert_eq!((j * j).coords(), [2.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn vector_space_ops() {
        let x = h(1.0, [1.0, 2.0, 3.0, 4.0]);
        assert!(x.scalar_mul(0.0).is_zero());
        assert_eq!(Hypercomplex::one(x.scale()).scalar_mul(3.5).coords(), [3.5, 0.0, 0.0, 0.0]);
        assert!((x + (-x)).is_zero());
    }

    #[test]
    fn mismatched_scales_are_rejected() {
        let x = h(1.0, [1.0, 0.0, 0.0, 0.0]);
        let y = h(-1.0, [1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(x.checked_mul(&y), Err(Error::ScaleMismatch { .. })));
        assert!(x.checked_add(&y).is_err());
    }

    #[test]
    fn pair_view_round_trips() {
        let x = h(3.0, [1.0, 2.0, 3.0, 4.0]);
        let (a, b) = x.pair();
        assert_eq!(Hypercomplex::from_pair(x.scale(), a, b).unwrap(), x);
    }

    #[test]
    fn conjugate_examples() {
        let x = h(0.5, [1.0, 2.0, 3.0, 4.0]);
        assert_eq!(x.conj().coords(), [1.0, -2.0, -3.0, -4.0]);
        assert_eq!(x.conj().conj(), x);
        let p = x * x.conj();
        assert!((p.coords()[0] - x.det()).abs() < 1e-12);
        assert!(p.coords()[1..].iter().all(|c| c.abs() < 1e-12));
    }

    #[test]
    fn det_examples() {
        assert_eq!(h(1.0, [1.0, 0.0, 1.0, 0.0]).det(), 0.0);
        assert_eq!(h(-1.0, [1.0, 2.0, 3.0, 4.0]).det(), 30.0);
    }

    #[test]
    fn inverse_examples() {
        let x = h(1.0, [2.0, 0.0, 1.0, 0.0]);
        let inv = x.inverse().unwrap();
        let expected = [2.0 / 3.0, 0.0, -1.0 / 3.0, 0.0];
        for (c, e) in inv.coords().iter().zip(expected) {
            assert!((c - e).abs() < 1e-15);
        }
        let one = Hypercomplex::one(x.scale());
        assert_eq!(one.inverse().unwrap(), one);
        assert!(matches!(h(1.0, [1.0, 0.0, 1.0, 0.0]).inverse(), Err(Error::Singular { .. })));
    }

    #[test]
    fn classification() {
        assert_eq!(h(-1.0, [0.0, 0.0, 1e-3, 0.0]).classify(), InvertibilityClass::GroupPart);
        assert_eq!(
            h(0.0, [0.0, 0.0, 1.0, 0.0]).classify(),
            InvertibilityClass::SemigroupPart { zero: false }
        );
        assert_eq!(
            h(1.0, [1.0, 0.0, 1.0, 0.0]).classify(),
            InvertibilityClass::SemigroupPart { zero: false }
        );
        assert_eq!(
            Hypercomplex::zero(Scale::SPLIT).classify(),
            InvertibilityClass::SemigroupPart { zero: true }
        );
    }

    #[test]
    fn trace_is_first_coordinate() {
        assert_eq!(h(2.0, [5.0, 1.0, 2.0, 3.0]).trace(), 5.0);
    }

    #[test]
    fn json_shape() {
        let x = h(-1.0, [1.0, 2.0, 3.0, 4.0]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"t":-1.0,"x":[1.0,2.0,3.0,4.0]}"#);
        let back: Hypercomplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display_substitutes_scale() {
        let x = h(2.5, [1.0, -2.0, 0.0, 4.0]);
        assert_eq!(x.to_string(), "1 - 2 i + 0 j_2.5 + 4 k_2.5");
    }
}
