//! Evaluable `H_t`-valued functions on `R^4`.
//!
//! An [`HFunction`] is an expression tree. It does not carry a scale: the
//! same tree is evaluated in whichever `H_t` the caller names, and constants
//! are read as coordinates in that ring. Evaluation is generic over
//! [`Evaluator`], so one tree serves both plain points and jets.

use serde::{Deserialize, Serialize};

use crate::algebra::{Hypercomplex, NcAlgebra};
use crate::calculus::Point4;
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::regular::{max_degree, sym_power_product_in, MultiIndex};
use crate::scale::Scale;

#[derive(Debug, Clone, PartialEq)]
pub enum HFunction {
    /// `x_l`, `l` in `1..=4`.
    Coord(usize),
    Const([f64; 4]),
    Add(Box<HFunction>, Box<HFunction>),
    Sub(Box<HFunction>, Box<HFunction>),
    Mul(Box<HFunction>, Box<HFunction>),
    Scale(f64, Box<HFunction>),
    Neg(Box<HFunction>),
    /// `η_l`, `l` in `2..=4`.
    Eta(usize),
    /// `ζ_l = x_l - x1 e_l`, `l` in `2..=4`.
    Zeta(usize),
    EtaPower(MultiIndex),
    Poly(Vec<PolyTerm>),
}

/// `x1^e1 x2^e2 x3^e3 x4^e4 · coef`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTerm {
    pub exp: [u32; 4],
    pub coef: [f64; 4],
}

/// Polynomial spec file: `{"t": .., "terms": [{"exp": [..], "coef": [..]}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolySpec {
    pub t: f64,
    pub terms: Vec<PolyTerm>,
}

impl PolySpec {
    pub fn from_json(s: &str) -> Result<PolySpec> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("polynomial spec: {e}")))
    }

    pub fn into_function(self) -> Result<(Scale, HFunction)> {
        let scale = Scale::new(self.t)?;
        if self.terms.iter().any(|term| term.coef.iter().any(|c| !c.is_finite())) {
            return Err(Error::NonFinite("polynomial coefficient"));
        }
        Ok((scale, HFunction::Poly(self.terms)))
    }
}

/// Where an [`HFunction`] gets evaluated.
pub trait Evaluator {
    type Value: NcAlgebra;
    fn scale(&self) -> Scale;
    /// The coordinate `x_l` (`l` in `0..4`) as a real-valued element.
    fn coord(&self, l: usize) -> Self::Value;
    fn constant(&self, c: [f64; 4]) -> Self::Value;
}

pub struct PointEvaluator {
    pub scale: Scale,
    pub point: Point4,
}

impl Evaluator for PointEvaluator {
    type Value = Hypercomplex;

    fn scale(&self) -> Scale {
        self.scale
    }

    fn coord(&self, l: usize) -> Hypercomplex {
        Hypercomplex::real(self.scale, self.point.0[l])
    }

    fn constant(&self, c: [f64; 4]) -> Hypercomplex {
        Hypercomplex::from_raw(self.scale, c)
    }
}

pub struct JetEvaluator {
    scale: Scale,
    order: usize,
    vars: [Jet; 4],
}

impl JetEvaluator {
    pub fn new(scale: Scale, point: &Point4, order: usize) -> Result<Self> {
        let v = |l| Jet::variable(scale, order, l, point.0[l]);
        Ok(JetEvaluator { scale, order, vars: [v(0)?, v(1)?, v(2)?, v(3)?] })
    }
}

impl Evaluator for JetEvaluator {
    type Value = Jet;

    fn scale(&self) -> Scale {
        self.scale
    }

    fn coord(&self, l: usize) -> Jet {
        self.vars[l].clone()
    }

    fn constant(&self, c: [f64; 4]) -> Jet {
        Jet::constant(&Hypercomplex::from_raw(self.scale, c), self.order).expect("order checked in new")
    }
}

/// `η_l - x_l`, i.e. the coordinates of the unit multiplying `x1` in `η_l`.
fn eta_unit(scale: Scale, l: usize) -> Result<[f64; 4]> {
    let q = if scale.is_zero() { -1.0 } else { scale.sgn_over_rho()? };
    Ok(match l {
        2 => [0.0, -1.0, 0.0, 0.0],
        3 => [0.0, 0.0, q, 0.0],
        4 => [0.0, 0.0, 0.0, q],
        _ => return Err(Error::InvalidArgument(format!("η index must be in 2..=4, got {l}"))),
    })
}

fn zeta_unit(l: usize) -> Result<[f64; 4]> {
    let mut c = [0.0; 4];
    if !(2..=4).contains(&l) {
        return Err(Error::InvalidArgument(format!("ζ index must be in 2..=4, got {l}")));
    }
    c[l - 1] = -1.0;
    Ok(c)
}

fn power<V: NcAlgebra>(base: &V, n: u32, one: V) -> V {
    (0..n).fold(one, |acc, _| acc.mul(base))
}

impl HFunction {
    pub fn coord(l: usize) -> HFunction {
        HFunction::Coord(l)
    }

    pub fn constant(h: &Hypercomplex) -> HFunction {
        HFunction::Const(h.coords())
    }

    pub fn eta(l: usize) -> HFunction {
        HFunction::Eta(l)
    }

    pub fn zeta(l: usize) -> HFunction {
        HFunction::Zeta(l)
    }

    pub fn eta_power(n: MultiIndex) -> HFunction {
        HFunction::EtaPower(n)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: HFunction) -> HFunction {
        HFunction::Add(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: HFunction) -> HFunction {
        HFunction::Sub(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: HFunction) -> HFunction {
        HFunction::Mul(Box::new(self), Box::new(other))
    }

    pub fn scaled(self, r: f64) -> HFunction {
        HFunction::Scale(r, Box::new(self))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> HFunction {
        HFunction::Neg(Box::new(self))
    }

    pub fn eval_with<E: Evaluator>(&self, e: &E) -> Result<E::Value> {
        let scale = e.scale();
        Ok(match self {
            HFunction::Coord(l) => {
                if !(1..=4).contains(l) {
                    return Err(Error::InvalidArgument(format!("coordinate index must be in 1..=4, got {l}")));
                }
                e.coord(l - 1)
            }
            HFunction::Const(c) => e.constant(*c),
            HFunction::Add(a, b) => a.eval_with(e)?.add(&b.eval_with(e)?),
            HFunction::Sub(a, b) => a.eval_with(e)?.add(&b.eval_with(e)?.scale(-1.0)),
            HFunction::Mul(a, b) => a.eval_with(e)?.mul(&b.eval_with(e)?),
            HFunction::Scale(r, a) => a.eval_with(e)?.scale(*r),
            HFunction::Neg(a) => a.eval_with(e)?.scale(-1.0),
            HFunction::Eta(l) => {
                let u = eta_unit(scale, *l)?;
                e.coord(l - 1).add(&e.coord(0).mul(&e.constant(u)))
            }
            HFunction::Zeta(l) => {
                let u = zeta_unit(*l)?;
                e.coord(l - 1).add(&e.coord(0).mul(&e.constant(u)))
            }
            HFunction::EtaPower(n) => eta_power_with(e, n)?,
            HFunction::Poly(terms) => {
                let one = e.constant([1.0, 0.0, 0.0, 0.0]);
                let mut acc = e.constant([0.0; 4]);
                for term in terms {
                    let mut m = one.clone();
                    for (l, &k) in term.exp.iter().enumerate() {
                        if k > 0 {
                            m = m.mul(&power(&e.coord(l), k, one.clone()));
                        }
                    }
                    acc = acc.add(&m.mul(&e.constant(term.coef)));
                }
                acc
            }
        })
    }

    pub fn eval(&self, scale: Scale, p: &Point4) -> Result<Hypercomplex> {
        self.eval_with(&PointEvaluator { scale, point: *p })
    }

    /// Order-`order` jet of the function at `p`.
    pub fn eval_jet(&self, scale: Scale, p: &Point4, order: usize) -> Result<Jet> {
        self.eval_with(&JetEvaluator::new(scale, p, order)?)
    }
}

fn eta_power_with<E: Evaluator>(e: &E, n: &MultiIndex) -> Result<E::Value> {
    let cap = max_degree();
    if n.total() > cap {
        return Err(Error::DegreeTooLarge { degree: n.total(), cap });
    }
    let factors: Vec<(E::Value, usize)> = (0..3)
        .filter(|&k| n.0[k] > 0)
        .map(|k| Ok((HFunction::Eta(k + 2).eval_with(e)?, n.0[k] as usize)))
        .collect::<Result<_>>()?;
    Ok(match sym_power_product_in(&factors) {
        Some(v) => v.scale(1.0 / n.factorial()),
        None => e.constant([1.0, 0.0, 0.0, 0.0]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: [f64; 4]) -> Point4 {
        Point4(x)
    }

    #[test]
    fn eta3_split_example() {
        let v = HFunction::eta(3).eval(Scale::SPLIT, &p([1.0, 0.0, 2.0, 0.0])).unwrap();
        assert_eq!(v.coords(), [2.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn eta2_on_axis() {
        let v = HFunction::eta(2).eval(Scale::new(3.0).unwrap(), &p([0.0, 5.0, 0.0, 0.0])).unwrap();
        assert_eq!(v.coords(), [5.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn eta_matches_zeta_for_quaternions() {
        let q = p([0.4, -1.0, 2.5, 0.3]);
        for l in 2..=4 {
            let a = HFunction::eta(l).eval(Scale::QUATERNION, &q).unwrap();
            let b = HFunction::zeta(l).eval(Scale::QUATERNION, &q).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn eta_at_zero_scale() {
        let v = HFunction::eta(4).eval(Scale::ZERO, &p([2.0, 0.0, 0.0, 1.0])).unwrap();
        assert_eq!(v.coords(), [1.0, 0.0, 0.0, -2.0]);
    }

    #[test]
    fn first_eta_power_is_eta2() {
        let q = p([0.4, -1.0, 2.5, 0.3]);
        let a = HFunction::eta_power(MultiIndex([1, 0, 0])).eval(Scale::SPLIT, &q).unwrap();
        let b = HFunction::eta(2).eval(Scale::SPLIT, &q).unwrap();
        assert_eq!(a, b);
        let one = HFunction::eta_power(MultiIndex([0, 0, 0])).eval(Scale::SPLIT, &q).unwrap();
        assert_eq!(one, Hypercomplex::one(Scale::SPLIT));
    }

    #[test]
    fn poly_coefficient_on_the_right() {
        // x2 · j at t = -1, times i on the left via a product
        let spec = PolySpec::from_json(r#"{"t":-1,"terms":[{"exp":[0,1,0,0],"coef":[0,0,1,0]}]}"#).unwrap();
        let (scale, f) = spec.into_function().unwrap();
        let v = f.eval(scale, &p([0.0, 2.0, 0.0, 0.0])).unwrap();
        assert_eq!(v.coords(), [0.0, 0.0, 2.0, 0.0]);
    }

    #[test]
    fn non_polynomial_spec_rejected() {
        assert!(PolySpec::from_json(r#"{"t":1,"terms":[{"exp":[0.5,0,0,0],"coef":[1,0,0,0]}]}"#).is_err());
        assert!(PolySpec::from_json(r#"{"t":1,"terms":[{"abs":[1,0,0,0],"coef":[1,0,0,0]}]}"#).is_err());
    }

    #[test]
    fn jet_and_point_agree() {
        let f = HFunction::eta_power(MultiIndex([1, 1, 1])).mul(HFunction::zeta(3));
        let q = p([0.2, 0.3, -0.4, 0.5]);
        let s = Scale::new(2.0).unwrap();
        let a = f.eval(s, &q).unwrap();
        let b = f.eval_jet(s, &q, 2).unwrap().value();
        assert!(a.max_abs_diff(&b) < 1e-14);
    }

    #[test]
    fn bad_indices() {
        assert!(HFunction::eta(1).eval(Scale::SPLIT, &Point4::ORIGIN).is_err());
        assert!(HFunction::coord(0).eval(Scale::SPLIT, &Point4::ORIGIN).is_err());
    }
}
