// Symmetrized products of non-commuting factors.

use shx::regular::{sym_power_product, sym_product};
use shx::{Hypercomplex, Scale};

fn main() -> shx::Result<()> {
    let scale = Scale::SPLIT;
    let a = Hypercomplex::new(scale, [0.0, 1.0, 0.0, 0.0])?;
    let b = Hypercomplex::new(scale, [0.0, 0.0, 1.0, 0.0])?;
    let c = Hypercomplex::new(scale, [1.0, 0.0, 0.0, 1.0])?;

    println!("ab = {}, ba = {}", a * b, b * a);
    println!("×(a, b) = {}", sym_product(&[a, b])?);
    println!("×(a, b, c) = {}", sym_product(&[a, b, c])?);
    // a^2 b^3 c symmetrized: 60 distinct words instead of 720 permutations
    println!("×(a^2, b^3, c) = {}", sym_power_product(&[(a, 2), (b, 3), (c, 1)])?);
    Ok(())
}
