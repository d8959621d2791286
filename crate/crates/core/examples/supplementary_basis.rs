//! Swapping in a different supplementary family. Any family giving a
//! nonsingular constraint matrix spans the same correction, so the series
//! agrees with the default one.

use std::sync::Arc;

use composite_fourier::basis::{build_boundary_matrix_1d, SupplementaryFamily1D};
use composite_fourier::prelude::*;
use composite_fourier::series1d::build_composite_1d_with_basis;

/// `(x/a)^(j+1) / (j+1)!`.
#[derive(Debug)]
struct ScaledPowers {
    a: f64,
    size: usize,
}

impl SupplementaryFamily1D for ScaledPowers {
    fn size(&self) -> usize {
        self.size
    }

    fn eval(&self, j: usize, k: usize, x: f64) -> f64 {
        let e = j + 1;
        if k > e {
            return 0.0;
        }
        let fact = |n: usize| (1..=n).map(|v| v as f64).product::<f64>();
        (x / self.a).powi((e - k) as i32) / fact(e - k) / self.a.powi(k as i32)
    }

    fn label(&self) -> String {
        "scaled powers".into()
    }
}

fn main() -> Result<()> {
    let r = SmoothnessOrder::new(3)?;
    let kind = SeriesKind1D::FullRange;
    let rule = QuadratureRule::default();
    let SampleFunction::OneD { spec, .. } = get_sample(2)?.function else { unreachable!() };

    let family = ScaledPowers { a: 1.0, size: r.two_r() };
    let matrix = build_boundary_matrix_1d(&family, kind, r, 1.0)?;
    let basis = BasisOperator1D::new(Arc::new(family), matrix)?;
    println!("custom family condition {:.2e}", basis.condition());

    let custom = build_composite_1d_with_basis(&spec, kind, r, 20, &rule, basis)?;
    let default = build_composite_1d(&spec, kind, r, 20, &rule)?;
    println!("default family condition {:.2e}", default.basis().condition());
    for k in 0..=6 {
        let x = 0.37;
        println!(
            "k={k}: custom {:+.12} default {:+.12}",
            custom.evaluate(k, x)?,
            default.evaluate(k, x)?
        );
    }
    Ok(())
}
