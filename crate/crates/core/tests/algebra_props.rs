use nalgebra::Matrix2;
use num_complex::Complex64;
use proptest::prelude::*;

use shx::algebra::bilinear;
use shx::{Hypercomplex, InvertibilityClass, Realization, Scale};

fn scale() -> impl Strategy<Value = Scale> {
    prop_oneof![
        Just(-2.0),
        Just(-1.0),
        Just(-0.25),
        Just(0.0),
        Just(0.5),
        Just(1.0),
        Just(3.0),
        -4.0..4.0f64,
    ]
    .prop_map(|t| Scale::new(t).unwrap())
}

fn element(scale: Scale) -> impl Strategy<Value = Hypercomplex> {
    prop::array::uniform4(-2.0..2.0f64).prop_map(move |x| Hypercomplex::new(scale, x).unwrap())
}

fn pair() -> impl Strategy<Value = (Hypercomplex, Hypercomplex)> {
    scale().prop_flat_map(|s| (element(s), element(s)))
}

fn triple() -> impl Strategy<Value = (Hypercomplex, Hypercomplex, Hypercomplex)> {
    scale().prop_flat_map(|s| (element(s), element(s), element(s)))
}

fn oracle(h: &Hypercomplex) -> Matrix2<Complex64> {
    let (a, b) = h.pair();
    Matrix2::new(a, b * h.t(), b.conj(), a.conj())
}

fn close(a: &Hypercomplex, b: &Hypercomplex, tol: f64) -> bool {
    a.max_abs_diff(b) <= tol * (1.0 + a.max_abs().max(b.max_abs()))
}

proptest! {
    #[test]
    fn associative((a, b, c) in triple()) {
        prop_assert!(close(&((a * b) * c), &(a * (b * c)), 1e-12));
    }

    #[test]
    fn distributive((a, b, c) in triple()) {
        prop_assert!(close(&(a * (b + c)), &(a * b + a * c), 1e-12));
        prop_assert!(close(&((a + b) * c), &(a * c + b * c), 1e-12));
    }

    #[test]
    fn one_is_identity(a in scale().prop_flat_map(element)) {
        let one = Hypercomplex::one(a.scale());
        prop_assert_eq!(a * one, a);
        prop_assert_eq!(one * a, a);
    }

    #[test]
    fn conjugate_reverses_products((a, b) in pair()) {
        prop_assert_eq!(a.conj().conj(), a);
        prop_assert!(close(&(a * b).conj(), &(b.conj() * a.conj()), 1e-12));
    }

    #[test]
    fn norm_product_is_real(a in scale().prop_flat_map(element)) {
        let det = Hypercomplex::real(a.scale(), a.det());
        prop_assert!(close(&(a * a.conj()), &det, 1e-12));
        prop_assert!(close(&(a.conj() * a), &det, 1e-12));
        prop_assert!((2.0 * a.trace() - (a + a.conj()).coords()[0]).abs() < 1e-12);
    }

    #[test]
    fn det_is_multiplicative((a, b) in pair()) {
        let lhs = (a * b).det();
        let rhs = a.det() * b.det();
        prop_assert!((lhs - rhs).abs() <= 1e-11 * (1.0 + lhs.abs()));
    }

    #[test]
    fn bilinear_is_symmetric_and_polarizes((a, b) in pair()) {
        let ab = bilinear(&a, &b).unwrap();
        prop_assert_eq!(ab, bilinear(&b, &a).unwrap());
        let polar = ((a + b).det() - (a - b).det()) / 4.0;
        prop_assert!((ab - polar).abs() < 1e-12);
    }

    #[test]
    fn realization_matches_matrix_oracle((a, b) in pair()) {
        let m = (a * b).realize().m;
        let o = oracle(&a) * oracle(&b);
        for r in 0..2 {
            for c in 0..2 {
                prop_assert!((m[r][c] - o[(r, c)]).norm() < 1e-12);
            }
        }
        let det = a.realize().det();
        prop_assert!((det.re - a.det()).abs() < 1e-12 && det.im.abs() < 1e-12);
    }

    #[test]
    fn unrealize_round_trips(a in scale().prop_flat_map(element)) {
        let back = a.realize().unrealize(a.scale(), 1e-12).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn inverse_matches_matrix_inverse(a in scale().prop_flat_map(element)) {
        prop_assume!(a.det().abs() > 1e-3);
        prop_assert_eq!(a.classify(), InvertibilityClass::GroupPart);
        let inv = a.inverse().unwrap();
        let o = oracle(&a).try_inverse().unwrap();
        let m = inv.realize().m;
        for r in 0..2 {
            for c in 0..2 {
                prop_assert!((m[r][c] - o[(r, c)]).norm() < 1e-9 * (1.0 + o[(r, c)].norm()));
            }
        }
    }
}

#[test]
fn off_pattern_matrix_is_rejected() {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let m = Realization::new(one, one, z, one);
    assert!(m.unrealize(Scale::SPLIT, 1e-12).is_err());
}

#[test]
fn mixed_scales_refuse_to_multiply() {
    let a = Hypercomplex::one(Scale::SPLIT);
    let b = Hypercomplex::one(Scale::QUATERNION);
    assert!(a.checked_mul(&b).is_err());
    assert!(bilinear(&a, &b).is_err());
}
