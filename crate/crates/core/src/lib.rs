//! Scaled hypercomplex rings `H_t` and their regularity calculus.
//!
//! `H_t` is `C^2` with the product
//! `(a1, b1)(a2, b2) = (a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2))`.
//! `t = -1` gives the quaternions, `t = 1` the split-quaternions and `t = 0`
//! a degenerate ring with `j_0 k_0 = 0`.
//!
//! * [`algebra`]: elements, realization as 2×2 complex matrices, conjugate,
//!   inverse, multiplication table, trace form and semi-norm.
//! * [`hyperbolic`]: the subring `x + u j_t` and its polar form.
//! * [`jet`], [`function`], [`calculus`]: jet differentiation and the
//!   operators `D_t`, `∇_t`, `Δ_t` applied from either side.
//! * [`regular`]: the `η` polynomials, symmetrized products, expansion of
//!   left regular functions and the remainder integrals.
//! * [`cli`]: the `shx` command line.

pub mod algebra;
pub mod calculus;
pub mod cli;
pub mod error;
pub mod function;
pub mod hyperbolic;
pub mod jet;
pub mod regular;
pub mod sampling;
pub mod scale;

pub use algebra::{Basis, Hypercomplex, InvertibilityClass, Realization};
pub use calculus::{OperatorKind, Point4, Verdict};
pub use error::{Error, Result};
pub use function::HFunction;
pub use hyperbolic::{HyperbolicNumber, Polar};
pub use jet::Jet;
pub use regular::{MultiIndex, RegularSeries};
pub use sampling::Region;
pub use scale::Scale;
