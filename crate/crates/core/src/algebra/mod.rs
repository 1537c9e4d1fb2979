//! Arithmetic of the scaled hypercomplex rings `H_t`.

mod element;
pub mod forms;
mod realization;
mod table;

pub use element::{Basis, Hypercomplex, InvertibilityClass, SingularityTolerance};
pub(crate) use element::mul_coords;
pub use forms::bilinear;
pub use realization::Realization;
pub use table::{basis_product, mul_table, MulTable, SymCoef, SymEntry};

/// The operations a value needs for symmetrized products: an
/// associative, possibly noncommutative, real algebra.
pub trait NcAlgebra: Clone {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: f64) -> Self;
}

impl NcAlgebra for Hypercomplex {
    fn add(&self, other: &Self) -> Self {
        self.add_unchecked(other)
    }

    fn mul(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }

    fn scale(&self, r: f64) -> Self {
        self.scalar_mul(r)
    }
}
