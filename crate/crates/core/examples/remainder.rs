// f(w) = f(0) + Σ η_n(w) (R_n f)(w) for a left regular f.

use shx::regular::{remainder_identity_residual, remainder_integral};
use shx::{HFunction, MultiIndex, Point4, Scale};

fn main() -> shx::Result<()> {
    let f = HFunction::eta_power(MultiIndex([1, 2, 0])).add(HFunction::eta(4));
    let w = Point4([0.4, -0.3, 0.7, 0.2]);
    for t in [-1.0, 1.0, 0.0] {
        let scale = Scale::new(t)?;
        for n in 2..=4 {
            println!("t = {t}: R{n} f(w) = {}", remainder_integral(&f, scale, n, &w)?);
        }
        println!("  identity residual {:.2e}", remainder_identity_residual(&f, scale, &w)?);
    }
    Ok(())
}
