//! Composite Fourier series approximation of functions and their derivatives.
//!
//! A function on an interval or rectangle is split into closed-form
//! supplementary parts (polynomials absorbing boundary and corner
//! discontinuities of the periodic extension) and a residual Fourier series
//! that can be differentiated term by term up to order `2r`.
//!
//! ```
//! use composite_fourier::prelude::*;
//!
//! let domain = Domain1D::symmetric(1.0).unwrap();
//! let f = FunctionSpec1D::new(domain, 6, |k, x| {
//!     Trig::Sin.eval_deriv(k, std::f64::consts::FRAC_PI_2, x)
//! });
//! let r = SmoothnessOrder::new(3).unwrap();
//! let s = build_composite_1d(&f, SeriesKind1D::FullRange, r, 20, &QuadratureRule::default()).unwrap();
//! let d3 = s.evaluate(3, 0.25).unwrap();
//! assert!((d3 - f.eval(3, 0.25)).abs() < 1e-6);
//! ```

pub mod basis;
pub mod direct;
pub mod domain;
pub mod error;
pub mod linalg;
pub mod metrics;
pub mod quadrature;
pub mod report;
pub mod samples;
pub mod series1d;
pub mod series2d;
pub mod trig;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::basis::{
        default_basis_1d, default_corner_basis, polynomial_family_1d, polynomial_family_corner,
        BasisOperator1D, BasisOperator2D, SupplementaryFamily1D, SupplementaryFamily2D,
    };
    pub use crate::direct::{build_direct_1d, build_direct_2d, DirectExpansion1D, DirectExpansion2D};
    pub use crate::domain::{
        enumerate_graded, Domain1D, Domain2D, DomainKind, FunctionSpec1D, FunctionSpec2D,
        MultiIndex, SeriesKind1D, SeriesKind2D, SmoothnessOrder,
    };
    pub use crate::error::{Error, Result};
    pub use crate::metrics::{
        error_report_1d, error_report_2d, make_grid_1d, make_grid_2d, Approximation1D,
        Approximation2D, ErrorReport, ErrorValue, Subset,
    };
    pub use crate::quadrature::QuadratureRule;
    pub use crate::samples::{get_sample, SampleCase, SampleFunction};
    pub use crate::series1d::{build_composite_1d, CompositeSeries1D, Part1D};
    pub use crate::series2d::{build_composite_2d, CompositeSeries2D, EdgeAxis, Part2D};
    pub use crate::trig::Trig;
}
