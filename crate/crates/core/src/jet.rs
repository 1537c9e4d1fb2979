//! Truncated Taylor expansions in four real variables with `H_t` coefficients.
//!
//! A [`Jet`] of order `K` stores the Taylor coefficients (derivative divided
//! by factorials) of a function at a base point for every exponent tuple of
//! total degree `<= K`. Multiplication uses the `t`-scaled product on the
//! coefficients, so jets propagate derivatives through noncommutative
//! expressions exactly, up to rounding, for polynomials of degree `<= K`.
//!
//! Monomials are enumerated once, graded by total degree and then
//! lexicographically, so the monomials of order `K - 1` are a prefix of
//! those of order `K`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::algebra::{mul_coords, Hypercomplex, NcAlgebra};
use crate::error::{Error, Result};
use crate::scale::Scale;

/// Highest supported jet order.
pub const MAX_JET_ORDER: usize = 12;

pub type Exponent = [u8; 4];

struct Monomials {
    exps: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
    /// `len[k]` = number of monomials of total degree `<= k`.
    len: Vec<usize>,
}

fn monomials() -> &'static Monomials {
    static M: OnceLock<Monomials> = OnceLock::new();
    M.get_or_init(|| {
        let mut exps = Vec::new();
        let mut len = Vec::new();
        for deg in 0..=MAX_JET_ORDER as u8 {
            // lexicographic, largest first exponent first
            for a in (0..=deg).rev() {
                for b in (0..=deg - a).rev() {
                    for c in (0..=deg - a - b).rev() {
                        exps.push([a, b, c, deg - a - b - c]);
                    }
                }
            }
            len.push(exps.len());
        }
        let index = exps.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        Monomials { exps, index, len }
    })
}

type Triple = (u16, u16, u16);

/// `(i, j, k)` with `exps[i] + exps[j] = exps[k]`, total degree `<= order`.
fn products(order: usize) -> &'static [Triple] {
    static P: OnceLock<Vec<OnceLock<Vec<Triple>>>> = OnceLock::new();
    let cells = P.get_or_init(|| (0..=MAX_JET_ORDER).map(|_| OnceLock::new()).collect());
    cells[order].get_or_init(|| {
        let m = monomials();
        let n = m.len[order];
        let mut out = Vec::new();
        for i in 0..n {
            let ei = m.exps[i];
            let di: u8 = ei.iter().sum();
            for j in 0..n {
                let ej = m.exps[j];
                let dj: u8 = ej.iter().sum();
                if (di + dj) as usize > order {
                    continue;
                }
                let sum = [ei[0] + ej[0], ei[1] + ej[1], ei[2] + ej[2], ei[3] + ej[3]];
                out.push((i as u16, j as u16, m.index[&sum] as u16));
            }
        }
        out
    })
}

pub fn monomial_count(order: usize) -> usize {
    monomials().len[order]
}

pub fn exponents(order: usize) -> &'static [Exponent] {
    &monomials().exps[..monomial_count(order)]
}

fn factorial(n: u8) -> f64 {
    (1..=n as u32).map(f64::from).product()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    scale: Scale,
    order: usize,
    coeffs: Vec<[f64; 4]>,
}

impl Jet {
    fn check_order(order: usize) -> Result<()> {
        if order > MAX_JET_ORDER {
            return Err(Error::DegreeTooLarge { degree: order, cap: MAX_JET_ORDER });
        }
        Ok(())
    }

    pub fn zero(scale: Scale, order: usize) -> Result<Jet> {
        Self::check_order(order)?;
        Ok(Jet { scale, order, coeffs: vec![[0.0; 4]; monomial_count(order)] })
    }

    pub fn constant(h: &Hypercomplex, order: usize) -> Result<Jet> {
        let mut j = Jet::zero(h.scale(), order)?;
        j.coeffs[0] = h.coords();
        Ok(j)
    }

    /// The coordinate function `x_l` (`l` in `0..4`) expanded at `value`.
    pub fn variable(scale: Scale, order: usize, l: usize, value: f64) -> Result<Jet> {
        let mut j = Jet::zero(scale, order)?;
        j.coeffs[0][0] = value;
        if order >= 1 {
            let mut e = [0u8; 4];
            e[l] = 1;
            j.coeffs[monomials().index[&e]][0] = 1.0;
        }
        Ok(j)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn value(&self) -> Hypercomplex {
        Hypercomplex::from_raw(self.scale, self.coeffs[0])
    }

    /// Taylor coefficient of `x^e` (zero beyond the order).
    pub fn coefficient(&self, e: Exponent) -> Hypercomplex {
        let m = monomials();
        let c = match m.index.get(&e) {
            Some(&i) if i < self.coeffs.len() => self.coeffs[i],
            _ => [0.0; 4],
        };
        Hypercomplex::from_raw(self.scale, c)
    }

    /// Mixed partial derivative `∂^e f` at the base point.
    pub fn partial(&self, e: Exponent) -> Hypercomplex {
        let f: f64 = e.iter().map(|&k| factorial(k)).product();
        self.coefficient(e).scalar_mul(f)
    }

    /// Iterates `(exponent, Taylor coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, Hypercomplex)> + '_ {
        exponents(self.order)
            .iter()
            .zip(&self.coeffs)
            .map(move |(e, c)| (*e, Hypercomplex::from_raw(self.scale, *c)))
    }

    /// Jet of `∂f/∂x_l`, one order lower.
    pub fn derivative(&self, l: usize) -> Jet {
        assert!(self.order >= 1, "cannot differentiate an order-0 jet");
        let m = monomials();
        let n = m.len[self.order - 1];
        let mut coeffs = vec![[0.0; 4]; n];
        for (k, out) in coeffs.iter_mut().enumerate() {
            let mut e = m.exps[k];
            e[l] += 1;
            let factor = f64::from(e[l]);
            let src = self.coeffs[m.index[&e]];
            *out = src.map(|c| factor * c);
        }
        Jet { scale: self.scale, order: self.order - 1, coeffs }
    }

    /// Truncates to a lower order.
    pub fn truncate(&self, order: usize) -> Jet {
        let order = order.min(self.order);
        Jet { scale: self.scale, order, coeffs: self.coeffs[..monomial_count(order)].to_vec() }
    }

    fn assert_compatible(&self, other: &Jet) {
        assert_eq!(self.scale, other.scale, "jet scale mismatch");
        assert_eq!(self.order, other.order, "jet order mismatch");
    }

    pub fn add(&self, other: &Jet) -> Jet {
        self.assert_compatible(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]])
            .collect();
        Jet { scale: self.scale, order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        self.add(&other.scale_by(-1.0))
    }

    pub fn scale_by(&self, r: f64) -> Jet {
        let coeffs = self.coeffs.iter().map(|c| c.map(|v| r * v)).collect();
        Jet { scale: self.scale, order: self.order, coeffs }
    }

    /// Truncated Cauchy product with the `t`-scaled coefficient product.
    pub fn mul(&self, other: &Jet) -> Jet {
        self.assert_compatible(other);
        let t = self.scale.t();
        let mut coeffs = vec![[0.0; 4]; self.coeffs.len()];
        for &(i, j, k) in products(self.order) {
            let (a, b) = (&self.coeffs[i as usize], &other.coeffs[j as usize]);
            if a == &[0.0; 4] || b == &[0.0; 4] {
                continue;
            }
            let p = mul_coords(t, a, b);
            let out = &mut coeffs[k as usize];
            for q in 0..4 {
                out[q] += p[q];
            }
        }
        Jet { scale: self.scale, order: self.order, coeffs }
    }

    /// `h · f`, the constant multiplying from the left.
    pub fn left_mul(&self, h: &Hypercomplex) -> Jet {
        let t = self.scale.t();
        let hc = h.coords();
        let coeffs = self.coeffs.iter().map(|c| mul_coords(t, &hc, c)).collect();
        Jet { scale: self.scale, order: self.order, coeffs }
    }

    /// `f · h`, the constant multiplying from the right.
    pub fn right_mul(&self, h: &Hypercomplex) -> Jet {
        let t = self.scale.t();
        let hc = h.coords();
        let coeffs = self.coeffs.iter().map(|c| mul_coords(t, c, &hc)).collect();
        Jet { scale: self.scale, order: self.order, coeffs }
    }
}

impl NcAlgebra for Jet {
    fn add(&self, other: &Self) -> Self {
        Jet::add(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        Jet::mul(self, other)
    }

    fn scale(&self, r: f64) -> Self {
        self.scale_by(r)
    }
}
