// Polar form of hyperbolic numbers x + u j_t.

use shx::hyperbolic::{exp_j, polar_decompose};
use shx::{HyperbolicNumber, Scale};

fn main() -> shx::Result<()> {
    let cases = [(-1.0, 0.0, 1.0), (-0.25, 3.0, 2.0), (2.0, 3.0, -1.0), (2.0, -3.0, 1.0), (1.0, 0.5, 2.0), (0.0, -2.0, 3.0), (1.0, 1.0, 1.0)];
    for (t, x, u) in cases {
        let d = HyperbolicNumber::new(Scale::new(t)?, x, u)?;
        match polar_decompose(&d) {
            Ok(p) => println!("t = {t}: ({x}, {u}) = {} * {} * e^(j {}) (residual {:e})", p.sign, p.r, p.theta, p.residual),
            Err(e) => println!("t = {t}: ({x}, {u}) has no polar form: {e}"),
        }
    }

    let e = exp_j(Scale::new(3.0)?, 0.8);
    println!("e^(0.8 j) at t = 3: {} + {} j, seminorm {}", e.x, e.u, e.seminorm());
    Ok(())
}
