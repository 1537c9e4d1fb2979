// The trace form and semi-norm, and where they stop behaving like a norm.

use shx::algebra::bilinear;
use shx::algebra::forms::{find_cauchy_schwarz_violation, find_squared_bound_violation, find_triangle_violation};
use shx::{Hypercomplex, Scale};

fn main() -> shx::Result<()> {
    for t in [-1.0, 0.0, 1.0] {
        let scale = Scale::new(t)?;
        let a = Hypercomplex::new(scale, [1.0, 0.0, 1.0, 0.0])?;
        let b = Hypercomplex::new(scale, [0.0, 1.0, 0.0, 2.0])?;
        println!("t = {t}: <a,b> = {}, <a,a> = {}, |a| = {}", bilinear(&a, &b)?, bilinear(&a, &a)?, a.seminorm());

        // the squared right-hand side is not homogeneous, so small elements break it at every t
        match find_squared_bound_violation(scale, 10_000, 1) {
            Some(v) => println!("  squared bound broken: {} > {}", v.lhs, v.rhs),
            None => println!("  squared bound holds on every sample"),
        }
        match find_cauchy_schwarz_violation(scale, 10_000, 1) {
            Some(v) => println!("  Cauchy-Schwarz broken: {} > {} for {} and {}", v.lhs, v.rhs, v.h1, v.h2),
            None => println!("  Cauchy-Schwarz holds on every sample"),
        }
        match find_triangle_violation(scale, 10_000, 1) {
            Some(v) => println!("  triangle inequality broken: {} > {}", v.lhs, v.rhs),
            None => println!("  triangle inequality holds on every sample"),
        }
    }
    Ok(())
}
