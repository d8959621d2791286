//! One composite series approximates a function and its first six
//! derivatives at once.

use composite_fourier::prelude::*;

fn main() -> Result<()> {
    let r = SmoothnessOrder::new(3)?;
    let f = FunctionSpec1D::new(Domain1D::symmetric(1.0)?, usize::MAX, |k, x| {
        Trig::Sin.eval_deriv(k, std::f64::consts::FRAC_PI_2, x)
    });
    let x = 0.9;
    println!("{:>3} {:>10} {:>14} {:>14}", "M", "k", "series", "error");
    for m in [5, 10, 20, 40] {
        let s = build_composite_1d(&f, SeriesKind1D::FullRange, r, m, &QuadratureRule::default())?;
        for k in 0..=s.max_order() {
            let v = s.evaluate(k, x)?;
            println!("{m:>3} {k:>10} {v:>14.9} {:>14.2e}", (v - f.eval(k, x)).abs());
        }
    }

    let s = build_composite_1d(&f, SeriesKind1D::FullRange, r, 40, &QuadratureRule::default())?;
    println!("\nparts at x = {x}: internal {:.6e}, boundary {:.6e}",
        s.evaluate_part(Part1D::Internal, 0, x)?,
        s.evaluate_part(Part1D::Boundary, 0, x)?);
    Ok(())
}
