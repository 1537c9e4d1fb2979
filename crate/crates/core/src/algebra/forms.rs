//! The trace form `<h1, h2>_t = τ(h1 h2†)` and the semi-norm `sqrt|<h, h>_t|`.
//!
//! For `t < 0` the form is an inner product and the semi-norm a norm. For
//! `t >= 0` the form is indefinite; the search routines below look for
//! elements that break the Cauchy-Schwarz-type bound and the triangle
//! inequality.

use crate::algebra::Hypercomplex;
use crate::error::Result;
use crate::sampling::SampleRng;
use crate::scale::Scale;

pub fn bilinear(h1: &Hypercomplex, h2: &Hypercomplex) -> Result<f64> {
    Ok(h1.checked_mul(&h2.conj())?.trace())
}

impl Hypercomplex {
    pub fn seminorm(&self) -> f64 {
        self.det().abs().sqrt()
    }
}

/// A pair of elements that violates an inequality, with both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub h1: Hypercomplex,
    pub h2: Hypercomplex,
    pub lhs: f64,
    pub rhs: f64,
}

/// Candidate pairs: half uniform in `[-1, 1]^4`, half with the second
/// element forced onto the null cone `|a|^2 = t |b|^2` (only when `t >= 0`).
fn candidates(scale: Scale, samples: usize, seed: u64) -> impl Iterator<Item = (Hypercomplex, Hypercomplex)> {
    let mut rng = SampleRng::new(seed);
    (0..samples).map(move |k| {
        let h1 = rng.hypercomplex(scale, -1.0, 1.0);
        let mut h2 = rng.hypercomplex(scale, -1.0, 1.0);
        if k % 2 == 1 && scale.t() >= 0.0 {
            h2 = null_vector(scale, &mut rng);
        }
        (h1, h2)
    })
}

/// A random nonzero element with `det = 0`; requires `t >= 0`.
pub fn null_vector(scale: Scale, rng: &mut SampleRng) -> Hypercomplex {
    let t = scale.t();
    debug_assert!(t >= 0.0);
    let phi = rng.uniform(0.0, std::f64::consts::TAU);
    let psi = rng.uniform(0.0, std::f64::consts::TAU);
    let r = rng.uniform(0.1, 1.0);
    if t == 0.0 {
        // a = 0, b arbitrary
        Hypercomplex::from_raw(scale, [0.0, 0.0, r * phi.cos(), r * phi.sin()])
    } else {
        let rb = r / t.sqrt();
        Hypercomplex::from_raw(scale, [r * phi.cos(), r * phi.sin(), rb * psi.cos(), rb * psi.sin()])
    }
}

/// Searches for `|<h1,h2>|^2 > |<h1,h1>|^2 |<h2,h2>|^2` (the squared-right-hand-side form).
pub fn find_squared_bound_violation(scale: Scale, samples: usize, seed: u64) -> Option<Violation> {
    candidates(scale, samples, seed).find_map(|(h1, h2)| {
        let lhs = bilinear(&h1, &h2).ok()?.powi(2);
        let rhs = h1.det().powi(2) * h2.det().powi(2);
        (lhs > rhs * (1.0 + 1e-9) + 1e-12).then_some(Violation { h1, h2, lhs, rhs })
    })
}

/// Searches for `|<h1,h2>|^2 > <h1,h1> <h2,h2>` (standard Cauchy-Schwarz).
pub fn find_cauchy_schwarz_violation(scale: Scale, samples: usize, seed: u64) -> Option<Violation> {
    candidates(scale, samples, seed).find_map(|(h1, h2)| {
        let lhs = bilinear(&h1, &h2).ok()?.powi(2);
        let rhs = h1.det() * h2.det();
        (lhs > rhs * (1.0 + 1e-9) + 1e-12).then_some(Violation { h1, h2, lhs, rhs })
    })
}

/// Searches for `‖h1 + h2‖ > ‖h1‖ + ‖h2‖`.
pub fn find_triangle_violation(scale: Scale, samples: usize, seed: u64) -> Option<Violation> {
    candidates(scale, samples, seed).find_map(|(h1, h2)| {
        let lhs = h1.add_unchecked(&h2).seminorm();
        let rhs = h1.seminorm() + h2.seminorm();
        (lhs > rhs * (1.0 + 1e-9) + 1e-12).then_some(Violation { h1, h2, lhs, rhs })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: f64, x: [f64; 4]) -> Hypercomplex {
        Hypercomplex::new(Scale::new(t).unwrap(), x).unwrap()
    }

    #[test]
    fn form_on_diagonal_is_det() {
        let x = h(2.0, [1.0, 1.0, 1.0, 0.0]);
        assert_eq!(bilinear(&x, &x).unwrap(), 0.0);
        let y = h(-3.0, [0.5, -1.0, 2.0, 0.25]);
        assert!((bilinear(&y, &y).unwrap() - y.det()).abs() < 1e-12);
    }

    #[test]
    fn seminorm_examples() {
        assert_eq!(h(1.0, [1.0, 0.0, 1.0, 0.0]).seminorm(), 0.0);
        assert_eq!(h(-1.0, [1.0, 1.0, 1.0, 1.0]).seminorm(), 2.0);
    }

    #[test]
    fn split_counterexample_by_hand() {
        // h2 is a null vector; the squared bound and the triangle inequality both fail.
        let h1 = h(1.0, [1.0, 0.0, 0.0, 0.0]);
        let h2 = h(1.0, [1.0, 0.0, 1.0, 0.0]);
        let ip = bilinear(&h1, &h2).unwrap();
        assert_eq!(ip, 1.0);
        assert!(ip * ip > h1.det().powi(2) * h2.det().powi(2));
        assert!((h1 + h2).seminorm() > h1.seminorm() + h2.seminorm());
    }

    #[test]
    fn null_vectors_are_null() {
        let mut rng = SampleRng::new(5);
        for t in [0.0, 0.5, 1.0, 4.0] {
            let s = Scale::new(t).unwrap();
            for _ in 0..50 {
                let v = null_vector(s, &mut rng);
                assert!(!v.is_zero());
                assert!(v.det().abs() < 1e-12);
            }
        }
    }

    #[test]
    fn no_cauchy_schwarz_violation_for_negative_scale() {
        assert!(find_cauchy_schwarz_violation(Scale::new(-0.5).unwrap(), 2000, 1).is_none());
        assert!(find_triangle_violation(Scale::QUATERNION, 2000, 1).is_none());
    }
}
