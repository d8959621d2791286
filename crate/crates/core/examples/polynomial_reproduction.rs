//! The supplementary polynomials absorb a cubic completely: the boundary
//! vector is exact and the internal series keeps only the constant.

use composite_fourier::prelude::*;
use composite_fourier::samples::cubic;

fn main() -> Result<()> {
    let r = SmoothnessOrder::new(3)?;
    let rule = QuadratureRule::default();

    let f = FunctionSpec1D::new(Domain1D::symmetric(1.0)?, usize::MAX, cubic);
    let s = build_composite_1d(&f, SeriesKind1D::FullRange, r, 40, &rule)?;
    let bd = s.boundary_data();
    for (label, q) in bd.labels.iter().zip(&bd.q1) {
        println!("{label:>22} = {q}");
    }
    let worst = (0..=100)
        .flat_map(|i| (0..=6).map(move |k| (k, -1.0 + 0.02 * i as f64)))
        .map(|(k, x)| (s.evaluate(k, x).unwrap() - f.eval(k, x)).abs())
        .fold(0.0, f64::max);
    println!("max error over u .. u^(6): {worst:.2e}");

    let g = FunctionSpec2D::new(Domain2D::symmetric(1.0, 1.0)?, usize::MAX, |k1, k2, x1, x2| {
        cubic(k1, x1) * cubic(k2, x2)
    });
    let s2 = build_composite_2d(&g, SeriesKind2D::FullRange, r, 40, 40, &rule)?;
    println!("\ncorner vector q3 (nonzero entries):");
    let cd = s2.corner_data();
    for (i, (label, q)) in cd.labels.iter().zip(&cd.q3).enumerate() {
        if *q != 0.0 {
            println!("  [{i:2}] {label} = {q}");
        }
    }
    println!("u^(3,3)(0.3,-0.7) = {:.12}", s2.evaluate(3, 3, 0.3, -0.7)?);
    println!("exact             = {:.12}", g.eval(3, 3, 0.3, -0.7));
    Ok(())
}
