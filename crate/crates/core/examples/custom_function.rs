//! Any function with exact derivatives can be expanded; here `exp(x) cos(3x)`
//! on `[0, 2]` with a half-range cosine series.

use composite_fourier::metrics::{error_report_1d, make_grid_1d};
use composite_fourier::prelude::*;

/// `d^k/dx^k exp(x) cos(3x) = 10^(k/2) exp(x) cos(3x + k atan(3))`.
fn f(k: usize, x: f64) -> f64 {
    let k = k as f64;
    10f64.powf(k / 2.0) * x.exp() * (3.0 * x + k * 3f64.atan()).cos()
}

fn main() -> Result<()> {
    let r = SmoothnessOrder::new(3)?;
    let spec = FunctionSpec1D::new(Domain1D::nonnegative(2.0)?, usize::MAX, f);
    let grid = make_grid_1d(&spec.domain, 2001)?;
    for m in [10, 20, 40] {
        let s = build_composite_1d(&spec, SeriesKind1D::HalfCosine, r, m, &QuadratureRule::default())?;
        let rep = error_report_1d(&s, &spec, &grid, s.max_order())?;
        println!(
            "M={m:<3} ||e||^4 = {}  e^(5) = {}  e^(6) = {}",
            rep.up_to_p(4, Subset::Overall)?,
            rep.single(MultiIndex::new(5, 0), Subset::Overall)?,
            rep.single(MultiIndex::new(6, 0), Subset::Overall)?
        );
    }
    Ok(())
}
