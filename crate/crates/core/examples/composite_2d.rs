//! Sine-sine composite series on the unit square: corner, edge and internal
//! parts, and partial derivatives up to order six.

use composite_fourier::prelude::*;

fn main() -> Result<()> {
    let r = SmoothnessOrder::new(3)?;
    let h = std::f64::consts::FRAC_PI_2;
    let f = FunctionSpec2D::new(Domain2D::nonnegative(1.0, 1.0)?, usize::MAX, move |k1, k2, x1, x2| {
        Trig::Sin.eval_deriv(k1, h, x1) * Trig::Cos.eval_deriv(k2, h, x2)
    });
    let s = build_composite_2d(&f, SeriesKind2D::SinSin, r, 30, 30, &QuadratureRule::default())?;

    println!("corner system size {}, condition {:.2e}", s.corner_basis().size(), s.corner_basis().condition());
    for axis in [EdgeAxis::X1, EdgeAxis::X2] {
        let e = s.edge(axis);
        println!("edge {axis:?}: rows {:?}", e.table.labels);
    }

    let (x1, x2) = (0.25, 0.6);
    for part in Part2D::ALL {
        println!("{part:?}: {:+.6e}", s.evaluate_part(part, 0, 0, x1, x2)?);
    }
    for k in enumerate_graded(6).into_iter().filter(|k| k.total() >= 5) {
        let v = s.evaluate(k.k1, k.k2, x1, x2)?;
        println!("u^{k} = {v:+.6} (error {:.1e})", (v - f.eval(k.k1, k.k2, x1, x2)).abs());
    }
    Ok(())
}
