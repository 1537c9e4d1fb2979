//! Regular polynomials and the expansion of left regular functions.
//!
//! The symmetrized product of `h1, …, hN` is the average of the ordered
//! product over all `N!` orderings. [`sym_product`] computes it literally;
//! [`sym_power_product`] walks only the distinct words of a multiset and
//! weights each by `∏ n_j! / N!`.
//!
//! `η^𝐧 = (1/𝐧!) η2^{(n1)} × η3^{(n2)} × η4^{(n3)}` restricts to
//! `x2^n1 x3^n2 x4^n3 / 𝐧!` on `x1 = 0`, so a left regular `f` expands as
//! `f(0) + Σ η^𝐧 f_𝐧` with `f_𝐧 = ∂^𝐧 f(0)` taken in `(x2, x3, x4)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Hypercomplex, NcAlgebra};
use crate::calculus::{is_left_regular, Point4, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::function::HFunction;
use crate::scale::Scale;

/// Default cap on the total degree of symmetrized products.
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// Default expansion degree.
pub const DEFAULT_EXPAND_DEGREE: usize = 4;

/// The degree cap, overridable with `SHX_MAX_DEGREE`.
pub fn max_degree() -> usize {
    std::env::var("SHX_MAX_DEGREE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

fn check_degree(n: usize) -> Result<()> {
    let cap = max_degree();
    if n > cap {
        return Err(Error::DegreeTooLarge { degree: n, cap });
    }
    Ok(())
}

/// `𝐧 = (n1, n2, n3)`, the exponents of `η2, η3, η4`.
///
/// Ordered graded-lexicographically: by total degree, then by `n1`, `n2`, `n3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub [u32; 3]);

impl MultiIndex {
    pub fn total(&self) -> usize {
        self.0.iter().map(|&n| n as usize).sum()
    }

    pub fn factorial(&self) -> f64 {
        self.0.iter().map(|&n| (1..=n).map(f64::from).product::<f64>()).product()
    }

    /// All indices with `1 <= |𝐧| <= maxdeg`, in order.
    pub fn up_to(maxdeg: usize) -> Vec<MultiIndex> {
        (1..=maxdeg).flat_map(MultiIndex::with_total).collect()
    }

    pub fn with_total(total: usize) -> Vec<MultiIndex> {
        let n = total as u32;
        let mut out = Vec::new();
        for a in 0..=n {
            for b in 0..=n - a {
                out.push(MultiIndex([a, b, n - a - b]));
            }
        }
        out
    }

    /// The jet exponent `(0, n1, n2, n3)`.
    pub fn exponent(&self) -> [u8; 4] {
        [0, self.0[0] as u8, self.0[1] as u8, self.0[2] as u8]
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total(), self.0).cmp(&(other.total(), other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

fn common_scale<'a>(mut hs: impl Iterator<Item = &'a Hypercomplex>) -> Result<Scale> {
    let first = hs.next().ok_or_else(|| Error::InvalidArgument("empty product".into()))?.scale();
    for h in hs {
        first.ensure_same(h.scale())?;
    }
    Ok(first)
}

/// `(1/N!) Σ_σ h_σ(1) ⋯ h_σ(N)` over all `N!` permutations.
pub fn sym_product(hs: &[Hypercomplex]) -> Result<Hypercomplex> {
    common_scale(hs.iter())?;
    check_degree(hs.len())?;
    // Heap's algorithm
    let n = hs.len();
    let mut items = hs.to_vec();
    let mut c = vec![0usize; n];
    let ordered = |v: &[Hypercomplex]| v[1..].iter().fold(v[0], |acc, h| acc.mul_unchecked(h));
    let mut sum = ordered(&items);
    let mut count = 1u64;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            sum = sum.add_unchecked(&ordered(&items));
            count += 1;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(sum.scalar_mul(1.0 / count as f64))
}

/// Symmetrized product of `h_j` repeated `n_j` times, one product per
/// distinct arrangement.
pub fn sym_power_product(factors: &[(Hypercomplex, usize)]) -> Result<Hypercomplex> {
    let scale = common_scale(factors.iter().map(|(h, _)| h))?;
    check_degree(factors.iter().map(|(_, n)| n).sum())?;
    Ok(sym_power_product_in(factors).unwrap_or_else(|| Hypercomplex::one(scale)))
}

/// Generic multiset-permutation sum; `None` when the total multiplicity is 0.
pub(crate) fn sym_power_product_in<T: NcAlgebra>(factors: &[(T, usize)]) -> Option<T> {
    let factors: Vec<&(T, usize)> = factors.iter().filter(|(_, n)| *n > 0).collect();
    let total: usize = factors.iter().map(|(_, n)| n).sum();
    if total == 0 {
        return None;
    }
    let mut remaining: Vec<usize> = factors.iter().map(|(_, n)| *n).collect();
    let mut acc: Option<T> = None;
    walk(&factors, &mut remaining, None, total, &mut acc);
    let weight = factors.iter().map(|(_, n)| factorial(*n)).product::<f64>() / factorial(total);
    acc.map(|v| v.scale(weight))
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn walk<T: NcAlgebra>(
    factors: &[&(T, usize)],
    remaining: &mut [usize],
    prefix: Option<&T>,
    left: usize,
    acc: &mut Option<T>,
) {
    if left == 0 {
        let word = prefix.expect("nonempty word").clone();
        *acc = Some(match acc.take() {
            Some(a) => a.add(&word),
            None => word,
        });
        return;
    }
    for k in 0..factors.len() {
        if remaining[k] == 0 {
            continue;
        }
        remaining[k] -= 1;
        let next = match prefix {
            Some(p) => p.mul(&factors[k].0),
            None => factors[k].0.clone(),
        };
        walk(factors, remaining, Some(&next), left - 1, acc);
        remaining[k] += 1;
    }
}

/// `η_l(p)`, `l` in `2..=4`.
pub fn eta(l: usize, scale: Scale, p: &Point4) -> Result<Hypercomplex> {
    HFunction::eta(l).eval(scale, p)
}

/// `ζ_l(p)`, `l` in `2..=4`.
pub fn zeta(l: usize, scale: Scale, p: &Point4) -> Result<Hypercomplex> {
    HFunction::zeta(l).eval(scale, p)
}

/// `η^𝐧` as an evaluable function.
pub fn eta_power(n: MultiIndex) -> Result<HFunction> {
    check_degree(n.total())?;
    Ok(HFunction::eta_power(n))
}

/// `-1 - sgn(t)/sqrt|t|`, the multiple of `j_t` in `∇_t ζ3`.
pub fn zeta_defect(scale: Scale) -> Result<f64> {
    Ok(-1.0 - scale.sgn_over_rho()?)
}

/// Upper bound on `‖η^𝐧(p)‖_t`.
pub fn eta_norm_bound(n: MultiIndex, scale: Scale, p: &Point4) -> f64 {
    let [x1, x2, x3, x4] = p.0;
    let [n1, n2, n3] = n.0.map(|k| k as i32);
    let first = (x1 * x1 + x2 * x2).sqrt().powi(n1);
    if scale.is_zero() {
        return first * x3.abs().powi(n2) * x4.abs().powi(n3);
    }
    let s = if scale.t() > 0.0 { 1.0 } else { -1.0 };
    first * (x3 * x3 - s * x1 * x1).abs().sqrt().powi(n2) * (x4 * x4 - s * x1 * x1).abs().sqrt().powi(n3)
}

/// `f(0) + Σ η^𝐧 f_𝐧`, coefficients on the right.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularSeries {
    pub scale: Scale,
    pub constant: Hypercomplex,
    pub coefficients: BTreeMap<MultiIndex, Hypercomplex>,
}

impl RegularSeries {
    pub fn new(constant: Hypercomplex) -> Self {
        RegularSeries { scale: constant.scale(), constant, coefficients: BTreeMap::new() }
    }

    pub fn with_term(mut self, n: MultiIndex, coef: Hypercomplex) -> Result<Self> {
        self.scale.ensure_same(coef.scale())?;
        check_degree(n.total())?;
        self.coefficients.insert(n, coef);
        Ok(self)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.keys().map(MultiIndex::total).max().unwrap_or(0)
    }

    pub fn to_function(&self) -> HFunction {
        self.coefficients.iter().fold(HFunction::constant(&self.constant), |acc, (n, c)| {
            acc.add(HFunction::eta_power(*n).mul(HFunction::constant(c)))
        })
    }

    pub fn evaluate(&self, p: &Point4) -> Result<Hypercomplex> {
        self.to_function().eval(self.scale, p)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    t: f64,
    constant: [f64; 4],
    coefficients: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    n: [u32; 3],
    coef: [f64; 4],
}

impl Serialize for RegularSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            t: self.scale.t(),
            constant: self.constant.coords(),
            coefficients: self
                .coefficients
                .iter()
                .map(|(n, c)| TermRepr { n: n.0, coef: c.coords() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RegularSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = SeriesRepr::deserialize(d)?;
        let scale = Scale::new(r.t).map_err(D::Error::custom)?;
        let mut series = RegularSeries::new(Hypercomplex::new(scale, r.constant).map_err(D::Error::custom)?);
        for term in r.coefficients {
            let c = Hypercomplex::new(scale, term.coef).map_err(D::Error::custom)?;
            series.coefficients.insert(MultiIndex(term.n), c);
        }
        Ok(series)
    }
}

/// `f_𝐧 = ∂^𝐧 f(0)` in `(x2, x3, x4)` for `1 <= |𝐧| <= maxdeg`.
pub fn taylor_coefficients(
    f: &HFunction,
    scale: Scale,
    maxdeg: usize,
) -> Result<(Hypercomplex, BTreeMap<MultiIndex, Hypercomplex>)> {
    check_degree(maxdeg)?;
    let jet = f.eval_jet(scale, &Point4::ORIGIN, maxdeg)?;
    let coefficients = MultiIndex::up_to(maxdeg).into_iter().map(|n| (n, jet.partial(n.exponent()))).collect();
    Ok((jet.value(), coefficients))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expansion {
    pub series: RegularSeries,
    /// Largest componentwise `|f(p) - series(p)|` over the samples.
    pub residual: f64,
}

/// Expands a left regular `f` about 0. `points` serve both the regularity
/// precheck (tolerance `tol`) and the residual.
pub fn expand(f: &HFunction, scale: Scale, maxdeg: usize, points: &[Point4], tol: f64) -> Result<Expansion> {
    let verdict = is_left_regular(f, scale, points, tol)?;
    if !verdict.pass {
        return Err(Error::NotLeftRegular { witness: verdict.worst_point.0, residual: verdict.residual });
    }
    let (constant, all) = taylor_coefficients(f, scale, maxdeg)?;
    let mut series = RegularSeries::new(constant);
    series.coefficients = all.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let g = series.to_function();
    let mut residual: f64 = 0.0;
    for p in points {
        let d = f.eval(scale, p)?.max_abs_diff(&g.eval(scale, p)?);
        residual = residual.max(if d.is_nan() { f64::INFINITY } else { d });
    }
    Ok(Expansion { series, residual })
}

pub fn expand_default(f: &HFunction, scale: Scale, points: &[Point4]) -> Result<Expansion> {
    expand(f, scale, DEFAULT_EXPAND_DEGREE, points, DEFAULT_TOL)
}

/// Composite Simpson on `[0, 1]`, starting from 64 panels and doubling until
/// successive estimates agree to `1e-8` or 1024 panels are used.
pub fn simpson<F>(mut g: F) -> Result<[f64; 4]>
where
    F: FnMut(f64) -> Result<[f64; 4]>,
{
    let mut estimate = |panels: usize| -> Result<[f64; 4]> {
        let h = 1.0 / panels as f64;
        let mut acc = [0.0; 4];
        for k in 0..=panels {
            let w = if k == 0 || k == panels {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let v = g(k as f64 * h)?;
            for q in 0..4 {
                acc[q] += w * v[q];
            }
        }
        Ok(acc.map(|a| a * h / 3.0))
    };
    let mut panels = 64;
    let mut prev = estimate(panels)?;
    while panels < 1024 {
        panels *= 2;
        let next = estimate(panels)?;
        let diff = prev.iter().zip(&next).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        prev = next;
        if diff < 1e-8 {
            break;
        }
    }
    Ok(prev)
}

/// `(R_n f)(w) = ∫_0^1 ∂f/∂x_n (s w) ds`, `n` in `2..=4`.
pub fn remainder_integral(f: &HFunction, scale: Scale, n: usize, w: &Point4) -> Result<Hypercomplex> {
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidArgument(format!("remainder index must be in 2..=4, got {n}")));
    }
    let v = simpson(|s| Ok(f.eval_jet(scale, &w.scaled(s), 1)?.derivative(n - 1).value().coords()))?;
    Hypercomplex::new(scale, v)
}

/// Componentwise `|f(w) - f(0) - Σ η_n(w) (R_n f)(w)|`.
pub fn remainder_identity_residual(f: &HFunction, scale: Scale, w: &Point4) -> Result<f64> {
    let mut rhs = f.eval(scale, &Point4::ORIGIN)?;
    for n in 2..=4 {
        rhs = rhs.checked_add(&eta(n, scale, w)?.checked_mul(&remainder_integral(f, scale, n, w)?)?)?;
    }
    Ok(f.eval(scale, w)?.max_abs_diff(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Basis;

    fn s(t: f64) -> Scale {
        Scale::new(t).unwrap()
    }

    fn h(t: f64, x: [f64; 4]) -> Hypercomplex {
        Hypercomplex::new(s(t), x).unwrap()
    }

    #[test]
    fn multi_index_order() {
        let all = MultiIndex::up_to(2);
        assert_eq!(all.len(), 3 + 6);
        assert_eq!(all[0], MultiIndex([0, 0, 1]));
        assert_eq!(all[2], MultiIndex([1, 0, 0]));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(MultiIndex([2, 0, 3]).factorial(), 12.0);
    }

    #[test]
    fn sym_product_examples() {
        let x = h(1.0, [0.5, 1.0, -2.0, 0.25]);
        assert_eq!(sym_product(&[x]).unwrap(), x);
        let cube = sym_product(&[x, x, x]).unwrap();
        assert!(cube.max_abs_diff(&x.powi(3)) < 1e-12);
        let i = Hypercomplex::basis(Scale::QUATERNION, Basis::I);
        let j = Hypercomplex::basis(Scale::QUATERNION, Basis::J);
        assert_eq!(sym_product(&[i, j]).unwrap(), Hypercomplex::zero(Scale::QUATERNION));
        assert_eq!(sym_power_product(&[(i, 1), (j, 1)]).unwrap(), Hypercomplex::zero(Scale::QUATERNION));
    }

    #[test]
    fn power_product_matches_naive() {
        let a = h(-1.0, [0.3, -1.0, 0.7, 2.0]);
        let b = h(-1.0, [1.5, 0.2, -0.4, 0.1]);
        let fast = sym_power_product(&[(a, 2), (b, 1)]).unwrap();
        let naive = sym_product(&[a, a, b]).unwrap();
        assert!(fast.max_abs_diff(&naive) < 1e-12);
        assert!(sym_power_product(&[(a, 3)]).unwrap().max_abs_diff(&a.powi(3)) < 1e-12);
    }

    #[test]
    fn degree_cap_and_scale_checks() {
        let a = h(1.0, [1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(sym_power_product(&[(a, 9)]), Err(Error::DegreeTooLarge { .. })));
        assert!(sym_product(&[a, h(2.0, [1.0, 0.0, 0.0, 0.0])]).is_err());
        assert!(sym_product(&[]).is_err());
    }

    #[test]
    fn norm_bound_examples() {
        let origin = Point4::ORIGIN;
        assert_eq!(eta_norm_bound(MultiIndex([0, 0, 0]), Scale::SPLIT, &origin), 1.0);
        let p = Point4([3.0, 4.0, 0.0, 0.0]);
        assert_eq!(eta_norm_bound(MultiIndex([1, 0, 0]), Scale::SPLIT, &p), 5.0);
        assert_eq!(eta(2, Scale::SPLIT, &p).unwrap().seminorm(), 5.0);
    }

    #[test]
    fn expansion_round_trip() {
        let scale = Scale::SPLIT;
        let c = h(1.0, [0.0, 0.0, 0.0, 2.0]);
        let f = HFunction::eta_power(MultiIndex([1, 1, 0])).add(HFunction::eta(2).mul(HFunction::constant(&c)));
        let pts: Vec<Point4> = crate::sampling::Region::unit_box().sample(20, 1);
        let e = expand(&f, scale, 3, &pts, 1e-9).unwrap();
        assert!(e.residual <= 1e-8);
        assert!(e.series.coefficients[&MultiIndex([1, 1, 0])].max_abs_diff(&Hypercomplex::one(scale)) < 1e-12);
        assert!(e.series.coefficients[&MultiIndex([1, 0, 0])].max_abs_diff(&c) < 1e-12);
        assert_eq!(e.series.coefficients.len(), 2);
    }

    #[test]
    fn zeta3_is_rejected() {
        let pts = crate::sampling::Region::unit_box().sample(5, 1);
        match expand(&HFunction::zeta(3), Scale::SPLIT, 3, &pts, 1e-9) {
            Err(Error::NotLeftRegular { residual, .. }) => assert!((residual - 2.0).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn constant_expands_trivially() {
        let c = h(0.5, [1.0, 2.0, 3.0, 4.0]);
        let pts = crate::sampling::Region::unit_box().sample(5, 1);
        let e = expand(&HFunction::constant(&c), s(0.5), 4, &pts, 1e-9).unwrap();
        assert_eq!(e.series.constant, c);
        assert!(e.series.coefficients.is_empty());
        assert_eq!(e.residual, 0.0);
    }

    #[test]
    fn remainder_examples() {
        let w = Point4([0.3, -0.2, 0.5, 0.9]);
        let r = remainder_integral(&HFunction::eta(2), Scale::SPLIT, 2, &w).unwrap();
        assert!(r.max_abs_diff(&Hypercomplex::one(Scale::SPLIT)) < 1e-14);
        let r = remainder_integral(&HFunction::eta(3), Scale::QUATERNION, 3, &w).unwrap();
        assert!(r.max_abs_diff(&Hypercomplex::one(Scale::QUATERNION)) < 1e-14);
        let f = HFunction::eta_power(MultiIndex([0, 1, 1]));
        assert!(remainder_identity_residual(&f, Scale::SPLIT, &w).unwrap() < 1e-6);
    }

    #[test]
    fn series_json() {
        let series = RegularSeries::new(h(1.0, [1.0, 0.0, 0.0, 0.0]))
            .with_term(MultiIndex([0, 1, 0]), h(1.0, [0.0, 2.0, 0.0, 0.0]))
            .unwrap();
        let text = serde_json::to_string(&series).unwrap();
        assert_eq!(
            text,
            r#"{"t":1.0,"constant":[1.0,0.0,0.0,0.0],"coefficients":[{"n":[0,1,0],"coef":[0.0,2.0,0.0,0.0]}]}"#
        );
        let back: RegularSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, series);
    }
}
