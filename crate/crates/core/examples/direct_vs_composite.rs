//! Composite series against independent expansions of every derivative.

use composite_fourier::metrics::{error_report_1d, make_grid_1d};
use composite_fourier::prelude::*;

fn main() -> Result<()> {
    let r = SmoothnessOrder::new(3)?;
    let rule = QuadratureRule::default();
    let SampleFunction::OneD { spec, kind } = get_sample(4)?.function else { unreachable!() };
    let grid = make_grid_1d(&spec.domain, 10001)?;

    let composite = build_composite_1d(&spec, kind, r, 40, &rule)?;
    let direct = build_direct_1d(&spec, kind, r, 40, &rule)?;
    let c = error_report_1d(&composite, &spec, &grid, 6)?;
    let d = error_report_1d(&direct, &spec, &grid, 6)?;

    println!("{:<10}{:<10}{:>14}{:>14}", "index", "subset", "composite", "direct");
    for k in 0..=6 {
        for &subset in c.subsets() {
            let key = MultiIndex::new(k, 0);
            println!("{:<10}{:<10}{:>14}{:>14}", format!("e^({k})"), subset.as_str(), c.single(key, subset)?.to_string(), d.single(key, subset)?.to_string());
        }
    }
    Ok(())
}
