//! Single-component, order-p and up-to-p error indexes on the interior,
//! boundary and corner subsets of the sampling grid.

use composite_fourier::metrics::{error_report_2d, make_grid_2d};
use composite_fourier::prelude::*;

fn main() -> Result<()> {
    let r = SmoothnessOrder::new(3)?;
    let SampleFunction::TwoD { spec, kind } = get_sample(6)?.function else { unreachable!() };
    let s = build_composite_2d(&spec, kind, r, 20, 20, &QuadratureRule::default())?;
    let grid = make_grid_2d(&spec.domain, 101, 101)?;
    let rep = error_report_2d(&s, &spec, &grid, 6)?;

    println!("points: {:?}", rep.counts);
    println!("{:<8}{:>14}{:>14}{:>14}{:>14}", "p", "overall", "interior", "boundary", "corner");
    for p in 0..=6 {
        let row: Vec<String> = rep.subsets().iter().map(|&sub| rep.order_p(p, sub).unwrap().to_string()).collect();
        println!("|e|^{p:<4}{:>14}{:>14}{:>14}{:>14}", row[0], row[1], row[2], row[3]);
    }
    println!("||e||^4 overall = {}", rep.up_to_p(4, Subset::Overall)?);
    println!("e^(3_3) corner  = {}", rep.single(MultiIndex::new(3, 3), Subset::Corner)?);
    Ok(())
}
