// Recovering the series of a left regular function from its Taylor data.

use shx::regular::expand;
use shx::{Hypercomplex, MultiIndex, Region, RegularSeries, Scale};

fn main() -> shx::Result<()> {
    let points = Region::unit_box().sample(50, 3);
    for t in [-1.0, 0.5, 0.0] {
        let scale = Scale::new(t)?;
        let series = RegularSeries::new(Hypercomplex::real(scale, 1.0))
            .with_term(MultiIndex([1, 0, 0]), Hypercomplex::new(scale, [0.0, 2.0, 0.0, 0.0])?)?
            .with_term(MultiIndex([0, 1, 1]), Hypercomplex::new(scale, [1.0, 0.0, -1.0, 0.5])?)?
            .with_term(MultiIndex([2, 0, 1]), Hypercomplex::new(scale, [0.0, 0.0, 0.0, 3.0])?)?;
        let e = expand(&series.to_function(), scale, 3, &points, 1e-9)?;
        println!("t = {t}: residual {:.2e}", e.residual);
        println!("  {}", serde_json::to_string(&e.series).expect("series serializes"));
    }

    let rejected = expand(&shx::HFunction::zeta(3), Scale::SPLIT, 3, &points, 1e-9);
    println!("zeta3 at t = 1: {}", rejected.unwrap_err());
    Ok(())
}
