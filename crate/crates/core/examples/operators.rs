// First-order operators applied from the left and the right, and the
// factorization of the Laplacian.

use shx::calculus::{apply_left, apply_right, compose_operators};
use shx::{HFunction, OperatorKind, Point4, Scale};

fn main() -> shx::Result<()> {
    // f = x1 x3 + x2^2 x4
    let f = HFunction::coord(1).mul(HFunction::coord(3)).add(HFunction::coord(2).mul(HFunction::coord(2)).mul(HFunction::coord(4)));
    let p = Point4([0.3, -0.2, 0.7, 0.1]);

    for t in [-1.0, 1.0, 3.0] {
        let scale = Scale::new(t)?;
        let left = apply_left(OperatorKind::Nabla, &f, scale, &p)?;
        let right = apply_right(OperatorKind::Nabla, &f, scale, &p)?;
        let lap = apply_left(OperatorKind::Laplacian, &f, scale, &p)?;
        let fact = compose_operators(OperatorKind::NablaDag, OperatorKind::Nabla, &f, scale, &p)?;
        println!("t = {t}: ∇f = {left}, f∇ = {right}");
        println!("  Δf = {lap}, ∇†∇f = {fact}");
    }

    let zero = Scale::ZERO;
    let dil = OperatorKind::Dilated { u3: 2.0, u4: -0.5 };
    println!(
        "t = 0: Δ0 f = {}, dilated factorization = {}",
        apply_left(OperatorKind::Laplacian0, &f, zero, &p)?,
        compose_operators(dil.adjoint().unwrap(), dil, &f, zero, &p)?
    );
    Ok(())
}
