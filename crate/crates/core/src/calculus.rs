//! Differential operators on `H_t`-valued functions of four real variables.
//!
//! Every operator is evaluated on jets, so results are exact up to rounding
//! for polynomial inputs. First-order operators are written `Σ c_l ∂_l` with
//! hypercomplex coefficients `c_l`; `apply_left` puts `c_l` to the left of
//! the partial derivative, `apply_right` to the right.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::algebra::{Basis, Hypercomplex};
use crate::error::{Error, Result};
use crate::function::HFunction;
use crate::jet::Jet;
use crate::scale::Scale;

/// Default verdict tolerance for jet-evaluated functions.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A point `x1 + x2 i + x3 j_t + x4 k_t` seen as a point of `R^4`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point4(pub [f64; 4]);

impl Point4 {
    pub fn new(x: [f64; 4]) -> Result<Self> {
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("point coordinate"));
        }
        Ok(Point4(x))
    }

    pub const ORIGIN: Point4 = Point4([0.0; 4]);

    pub fn scaled(&self, s: f64) -> Point4 {
        Point4(self.0.map(|v| s * v))
    }

    /// Lexicographic order with `total_cmp`; used to break ties between witnesses.
    pub fn lex_cmp(&self, other: &Point4) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl From<[f64; 4]> for Point4 {
    fn from(x: [f64; 4]) -> Self {
        Point4(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum OperatorKind {
    /// `∂1 + i ∂2 + j_t ∂3 + k_t ∂4`
    D,
    Ddag,
    /// `∂1 + i ∂2 - (s/ρ) j_t ∂3 - (s/ρ) k_t ∂4`, `t != 0`
    Nabla,
    NablaDag,
    /// `∂1 + i ∂2 + j_0 ∂3 + k_0 ∂4`, `t = 0`
    Nabla0,
    Nabla0Dag,
    /// `∂1² + ∂2² - sgn(t)(∂3² + ∂4²)`, `t != 0`
    Laplacian,
    /// `∂1² + ∂2²`, `t = 0`
    Laplacian0,
    /// `∂1 + i ∂2 + u3 j_0 ∂3 + u4 k_0 ∂4`, `t = 0`
    Dilated { u3: f64, u4: f64 },
    DilatedDag { u3: f64, u4: f64 },
}

impl OperatorKind {
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::D => "D",
            OperatorKind::Ddag => "Ddag",
            OperatorKind::Nabla => "Nabla",
            OperatorKind::NablaDag => "NablaDag",
            OperatorKind::Nabla0 => "Nabla0",
            OperatorKind::Nabla0Dag => "Nabla0Dag",
            OperatorKind::Laplacian => "Laplacian",
            OperatorKind::Laplacian0 => "Laplacian0",
            OperatorKind::Dilated { .. } => "Dilated",
            OperatorKind::DilatedDag { .. } => "DilatedDag",
        }
    }

    /// Differential order: 1 or 2.
    pub fn order(&self) -> usize {
        match self {
            OperatorKind::Laplacian | OperatorKind::Laplacian0 => 2,
            _ => 1,
        }
    }

    pub fn check_scale(&self, scale: Scale) -> Result<()> {
        let ok = match self {
            OperatorKind::D | OperatorKind::Ddag => true,
            OperatorKind::Nabla | OperatorKind::NablaDag | OperatorKind::Laplacian => !scale.is_zero(),
            _ => scale.is_zero(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ScaleConstraint { op: self.name(), t: scale.t() })
        }
    }

    /// `c_1..c_4` for first-order operators.
    pub fn coefficients(&self, scale: Scale) -> Result<[Hypercomplex; 4]> {
        self.check_scale(scale)?;
        let unit = |b| Hypercomplex::basis(scale, b);
        let w = |a: f64, b: f64, c: f64, d: f64| {
            [
                unit(Basis::One).scalar_mul(a),
                unit(Basis::I).scalar_mul(b),
                unit(Basis::J).scalar_mul(c),
                unit(Basis::K).scalar_mul(d),
            ]
        };
        Ok(match *self {
            OperatorKind::D | OperatorKind::Nabla0 => w(1.0, 1.0, 1.0, 1.0),
            OperatorKind::Ddag | OperatorKind::Nabla0Dag => w(1.0, -1.0, -1.0, -1.0),
            OperatorKind::Nabla => {
                let q = scale.sgn_over_rho()?;
                w(1.0, 1.0, -q, -q)
            }
            OperatorKind::NablaDag => {
                let q = scale.sgn_over_rho()?;
                w(1.0, -1.0, q, q)
            }
            OperatorKind::Dilated { u3, u4 } => w(1.0, 1.0, u3, u4),
            OperatorKind::DilatedDag { u3, u4 } => w(1.0, -1.0, -u3, -u4),
            OperatorKind::Laplacian | OperatorKind::Laplacian0 => {
                return Err(Error::InvalidArgument(format!("{} is second order", self.name())))
            }
        })
    }

    /// Real weights `w_l` of `Σ w_l ∂_l²` for the Laplacians.
    fn laplacian_weights(&self, scale: Scale) -> Result<[f64; 4]> {
        self.check_scale(scale)?;
        match self {
            OperatorKind::Laplacian => {
                let s = scale.sgn()?;
                Ok([1.0, 1.0, -s, -s])
            }
            OperatorKind::Laplacian0 => Ok([1.0, 1.0, 0.0, 0.0]),
            _ => Err(Error::InvalidArgument(format!("{} is first order", self.name()))),
        }
    }

    /// The formal adjoint, where one exists.
    pub fn adjoint(&self) -> Option<OperatorKind> {
        Some(match *self {
            OperatorKind::D => OperatorKind::Ddag,
            OperatorKind::Ddag => OperatorKind::D,
            OperatorKind::Nabla => OperatorKind::NablaDag,
            OperatorKind::NablaDag => OperatorKind::Nabla,
            OperatorKind::Nabla0 => OperatorKind::Nabla0Dag,
            OperatorKind::Nabla0Dag => OperatorKind::Nabla0,
            OperatorKind::Dilated { u3, u4 } => OperatorKind::DilatedDag { u3, u4 },
            OperatorKind::DilatedDag { u3, u4 } => OperatorKind::Dilated { u3, u4 },
            OperatorKind::Laplacian | OperatorKind::Laplacian0 => return None,
        })
    }

    /// The regularity operator for a scale: `Nabla` or `Nabla0`.
    pub fn regularity(scale: Scale) -> OperatorKind {
        if scale.is_zero() {
            OperatorKind::Nabla0
        } else {
            OperatorKind::Nabla
        }
    }

    pub fn harmonic(scale: Scale) -> OperatorKind {
        if scale.is_zero() {
            OperatorKind::Laplacian0
        } else {
            OperatorKind::Laplacian
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Applies `op` to a jet, lowering its order by `op.order()`.
pub fn apply_to_jet(op: OperatorKind, side: Side, f: &Jet) -> Result<Jet> {
    let scale = f.scale();
    if f.order() < op.order() {
        return Err(Error::InvalidArgument(format!(
            "{} needs a jet of order {}, got {}",
            op.name(),
            op.order(),
            f.order()
        )));
    }
    if op.order() == 2 {
        let w = op.laplacian_weights(scale)?;
        let mut acc = Jet::zero(scale, f.order() - 2)?;
        for (l, wl) in w.iter().enumerate() {
            if *wl != 0.0 {
                acc = acc.add(&f.derivative(l).derivative(l).scale_by(*wl));
            }
        }
        return Ok(acc);
    }
    let c = op.coefficients(scale)?;
    let mut acc = Jet::zero(scale, f.order() - 1)?;
    for (l, cl) in c.iter().enumerate() {
        let d = f.derivative(l);
        let term = match side {
            Side::Left => d.left_mul(cl),
            Side::Right => d.right_mul(cl),
        };
        acc = acc.add(&term);
    }
    Ok(acc)
}

fn coord_index(l: usize) -> Result<usize> {
    if (1..=4).contains(&l) {
        Ok(l - 1)
    } else {
        Err(Error::InvalidArgument(format!("coordinate index must be in 1..=4, got {l}")))
    }
}

/// `∂f/∂x_l` at `p`, `l` in `1..=4`.
pub fn partial(f: &HFunction, scale: Scale, l: usize, p: &Point4) -> Result<Hypercomplex> {
    let l = coord_index(l)?;
    let jet = f.eval_jet(scale, p, 1)?;
    Ok(jet.derivative(l).value())
}

/// Central difference `(f(p + h e_l) - f(p - h e_l)) / 2h`.
pub fn finite_difference(f: &HFunction, scale: Scale, l: usize, p: &Point4, h: f64) -> Result<Hypercomplex> {
    let l = coord_index(l)?;
    let (mut plus, mut minus) = (*p, *p);
    plus.0[l] += h;
    minus.0[l] -= h;
    let d = f.eval(scale, &plus)?.add_unchecked(&f.eval(scale, &minus)?.neg());
    Ok(d.scalar_mul(0.5 / h))
}

fn apply(op: OperatorKind, side: Side, f: &HFunction, scale: Scale, p: &Point4) -> Result<Hypercomplex> {
    op.check_scale(scale)?;
    let jet = f.eval_jet(scale, p, op.order())?;
    Ok(apply_to_jet(op, side, &jet)?.value())
}

pub fn apply_left(op: OperatorKind, f: &HFunction, scale: Scale, p: &Point4) -> Result<Hypercomplex> {
    apply(op, Side::Left, f, scale, p)
}

pub fn apply_right(op: OperatorKind, f: &HFunction, scale: Scale, p: &Point4) -> Result<Hypercomplex> {
    apply(op, Side::Right, f, scale, p)
}

/// `op1 (op2 f)` at `p`, both applied from the left.
pub fn compose_operators(
    op1: OperatorKind,
    op2: OperatorKind,
    f: &HFunction,
    scale: Scale,
    p: &Point4,
) -> Result<Hypercomplex> {
    op1.check_scale(scale)?;
    op2.check_scale(scale)?;
    let jet = f.eval_jet(scale, p, op1.order() + op2.order())?;
    let inner = apply_to_jet(op2, Side::Left, &jet)?;
    Ok(apply_to_jet(op1, Side::Left, &inner)?.value())
}

/// Outcome of a sampled check: the largest componentwise residual and
/// where it occurred.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub pass: bool,
    pub worst_point: Point4,
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Left,
    Right,
    Harmonic,
}

/// Evaluates `residual_at` on every point and keeps the worst one. Ties go
/// to the lexicographically smallest point; NaN counts as infinite.
pub fn sweep<F>(points: &[Point4], tol: f64, mut residual_at: F) -> Result<Verdict>
where
    F: FnMut(&Point4) -> Result<f64>,
{
    if points.is_empty() {
        return Err(Error::InvalidArgument("no sample points".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let mut worst: Option<(f64, Point4)> = None;
    for p in points {
        let mut r = residual_at(p)?;
        if r.is_nan() {
            r = f64::INFINITY;
        }
        let better = match &worst {
            None => true,
            Some((wr, wp)) => r > *wr || (r == *wr && p.lex_cmp(wp) == Ordering::Less),
        };
        if better {
            worst = Some((r, *p));
        }
    }
    let (residual, worst_point) = worst.expect("nonempty");
    Ok(Verdict { pass: residual <= tol, worst_point, residual })
}

pub fn check(f: &HFunction, scale: Scale, mode: CheckMode, points: &[Point4], tol: f64) -> Result<Verdict> {
    let (op, side) = match mode {
        CheckMode::Left => (OperatorKind::regularity(scale), Side::Left),
        CheckMode::Right => (OperatorKind::regularity(scale), Side::Right),
        CheckMode::Harmonic => (OperatorKind::harmonic(scale), Side::Left),
    };
    sweep(points, tol, |p| Ok(apply(op, side, f, scale, p)?.max_abs()))
}

pub fn is_left_regular(f: &HFunction, scale: Scale, points: &[Point4], tol: f64) -> Result<Verdict> {
    check(f, scale, CheckMode::Left, points, tol)
}

pub fn is_right_regular(f: &HFunction, scale: Scale, points: &[Point4], tol: f64) -> Result<Verdict> {
    check(f, scale, CheckMode::Right, points, tol)
}

pub fn is_harmonic(f: &HFunction, scale: Scale, points: &[Point4], tol: f64) -> Result<Verdict> {
    check(f, scale, CheckMode::Harmonic, points, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::HFunction as F;

    fn s(t: f64) -> Scale {
        Scale::new(t).unwrap()
    }

    const P: Point4 = Point4([0.3, -0.7, 1.1, 0.4]);

    #[test]
    fn partial_of_coordinate() {
        assert_eq!(partial(&F::coord(3), Scale::SPLIT, 3, &P).unwrap(), Hypercomplex::one(Scale::SPLIT));
        assert!(partial(&F::coord(3), Scale::SPLIT, 5, &P).is_err());
    }

    #[test]
    fn partial_of_eta2() {
        let i = Hypercomplex::basis(Scale::SPLIT, Basis::I);
        assert_eq!(partial(&F::eta(2), Scale::SPLIT, 1, &P).unwrap(), -i);
    }

    #[test]
    fn nabla_kills_eta2() {
        for t in [-2.0, -1.0, 0.5, 1.0, 3.0] {
            let r = apply_left(OperatorKind::Nabla, &F::eta(2), s(t), &P).unwrap();
            assert!(r.max_abs() < 1e-15);
        }
    }

    #[test]
    fn nabla_on_zeta3() {
        let r = apply_left(OperatorKind::Nabla, &F::zeta(3), Scale::SPLIT, &P).unwrap();
        assert_eq!(r.coords(), [0.0, 0.0, -2.0, 0.0]);
    }

    #[test]
    fn laplacian0_of_x3_squared() {
        let f = F::coord(3).mul(F::coord(3));
        assert_eq!(apply_left(OperatorKind::Laplacian0, &f, Scale::ZERO, &P).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn left_and_right_differ() {
        let j = Hypercomplex::basis(Scale::QUATERNION, Basis::J);
        let f = F::coord(2).mul(F::constant(&j));
        let l = apply_left(OperatorKind::Nabla, &f, Scale::QUATERNION, &P).unwrap();
        let r = apply_right(OperatorKind::Nabla, &f, Scale::QUATERNION, &P).unwrap();
        assert_eq!(l.coords(), [0.0, 0.0, 0.0, 1.0]);
        assert_eq!(r.coords(), [0.0, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn scale_constraints() {
        assert!(apply_left(OperatorKind::Nabla, &F::eta(2), Scale::ZERO, &P).is_err());
        assert!(apply_left(OperatorKind::Nabla0, &F::eta(2), Scale::SPLIT, &P).is_err());
        assert!(apply_left(OperatorKind::D, &F::eta(2), Scale::ZERO, &P).is_ok());
    }

    #[test]
    fn quaternion_factorization() {
        let f = F::coord(3).mul(F::coord(3)).mul(F::coord(1));
        let lhs = compose_operators(OperatorKind::Ddag, OperatorKind::D, &f, Scale::QUATERNION, &P).unwrap();
        // ∂3²(x1 x3²) = 2 x1
        assert!((lhs.coords()[0] - 2.0 * P.0[0]).abs() < 1e-15);
    }

    #[test]
    fn verdict_ties_pick_smallest_point() {
        let pts = [Point4([1.0, 0.0, 0.0, 0.0]), Point4([0.0, 5.0, 0.0, 0.0])];
        let v = sweep(&pts, 1.0, |_| Ok(2.0)).unwrap();
        assert_eq!(v.worst_point, pts[1]);
        assert!(!v.pass);
        assert!(sweep(&[], 1.0, |_| Ok(0.0)).is_err());
    }

    #[test]
    fn verdict_json() {
        let v = Verdict { pass: true, worst_point: Point4([0.0, 1.0, 2.0, 3.0]), residual: 0.0 };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"pass":true,"worst_point":[0.0,1.0,2.0,3.0],"residual":0.0}"#
        );
    }
}
