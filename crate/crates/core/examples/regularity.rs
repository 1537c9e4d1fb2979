// Regularity and harmonicity checks over a sampled domain.

use shx::calculus::{check, CheckMode};
use shx::{HFunction, MultiIndex, Region, Scale};

fn main() -> shx::Result<()> {
    let points = Region::unit_box().sample(200, 7);
    let funcs = [
        ("eta3", HFunction::eta(3)),
        ("zeta3", HFunction::zeta(3)),
        ("eta^(1,1,1)", HFunction::eta_power(MultiIndex([1, 1, 1]))),
        ("x1 x2", HFunction::coord(1).mul(HFunction::coord(2))),
    ];
    for t in [-1.0, 0.0, 1.0] {
        let scale = Scale::new(t)?;
        for (name, f) in &funcs {
            let l = check(f, scale, CheckMode::Left, &points, 1e-9)?;
            let r = check(f, scale, CheckMode::Right, &points, 1e-9)?;
            let h = check(f, scale, CheckMode::Harmonic, &points, 1e-9)?;
            println!(
                "t = {t:>4} {name:<12} left {:<5} right {:<5} harmonic {:<5} (left residual {:.3e})",
                l.pass, r.pass, h.pass, l.residual
            );
        }
    }
    Ok(())
}
