// Products, conjugates and inverses in H_t for the three kinds of scale.

use shx::algebra::mul_table;
use shx::{Basis, Hypercomplex, Scale};

fn main() -> shx::Result<()> {
    for t in [-1.0, 0.0, 1.0] {
        let scale = Scale::new(t)?;
        let j = Hypercomplex::basis(scale, Basis::J);
        let k = Hypercomplex::basis(scale, Basis::K);
        println!("t = {t}: jk = {}, kj = {}", j * k, k * j);

        let h = Hypercomplex::new(scale, [2.0, 1.0, -0.5, 0.25])?;
        println!("  h = {h}, conj(h) = {}, det = {}", h.conj(), h.det());
        match h.inverse() {
            Ok(inv) => println!("  h^-1 = {inv}, h h^-1 = {}", h * inv),
            Err(e) => println!("  h is singular: {e}"),
        }
    }

    let table = mul_table(Scale::new(2.5)?);
    for (l, row) in table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("{} | {}", Basis::ALL[l].symbol(), cells.join(" | "));
    }
    Ok(())
}
