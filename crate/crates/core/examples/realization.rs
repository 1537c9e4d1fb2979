// The 2x2 complex matrix picture of H_t and back.

use shx::{Hypercomplex, Scale};

fn main() -> shx::Result<()> {
    let scale = Scale::new(-2.0)?;
    let a = Hypercomplex::new(scale, [1.0, 2.0, 0.0, -1.0])?;
    let b = Hypercomplex::new(scale, [0.5, 0.0, 1.5, 1.0])?;

    let ma = a.realize();
    let mb = b.realize();
    let prod = ma.matmul(&mb);
    println!("M(a) M(b) - M(ab) = {:e}", prod.max_abs_diff(&(a * b).realize()));
    println!("det M(a) = {}, det a = {}", ma.det(), a.det());

    let back = prod.unrealize(scale, 1e-12)?;
    println!("unrealized product: {back}");
    Ok(())
}
