#![allow(dead_code)]

use composite_fourier::basis::{boundary_constraints_1d, corner_constraints};
use composite_fourier::trig::{mu, wavenumber};
use composite_fourier::metrics::ErrorReport;
use composite_fourier::prelude::*;
use composite_fourier::report::{error_report, Method};
use composite_fourier::samples::get_sample;
use rand::Rng;

pub fn r3() -> SmoothnessOrder {
    SmoothnessOrder::new(3).unwrap()
}

pub fn spec_1d(id: u32) -> (FunctionSpec1D, SeriesKind1D) {
    match get_sample(id).unwrap().function {
        SampleFunction::OneD { spec, kind } => (spec, kind),
        SampleFunction::TwoD { .. } => panic!("sample {id} is 2D"),
    }
}

pub fn spec_2d(id: u32) -> (FunctionSpec2D, SeriesKind2D) {
    match get_sample(id).unwrap().function {
        SampleFunction::TwoD { spec, kind } => (spec, kind),
        SampleFunction::OneD { .. } => panic!("sample {id} is 1D"),
    }
}

pub fn report(id: u32, method: Method, m: usize) -> ErrorReport {
    let case = get_sample(id).unwrap();
    let grid = if case.dims() == 1 { 10001 } else { 101 };
    error_report(&case, method, r3(), m, grid, &QuadratureRule::default()).unwrap()
}

pub fn value(rep: &ErrorReport, name: &str, subset: Subset) -> f64 {
    rep.records()
        .unwrap()
        .into_iter()
        .find(|(n, s, _)| n == name && *s == subset)
        .unwrap_or_else(|| panic!("no record {name} {subset}"))
        .2
        .value()
        .expect("not degenerate")
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// `d^k/dx^k x^e`.
pub fn mono(e: usize, k: usize, x: f64) -> f64 {
    if k > e {
        return 0.0;
    }
    let c: f64 = ((e - k + 1)..=e).map(|v| v as f64).product();
    c * x.powi((e - k) as i32)
}

/// A polynomial `sum c x1^i x2^j` with exact partial derivatives.
pub fn polynomial_2d(domain: Domain2D, terms: Vec<(usize, usize, f64)>) -> FunctionSpec2D {
    FunctionSpec2D::new(domain, usize::MAX, move |k1, k2, x1, x2| {
        terms.iter().map(|&(i, j, c)| c * mono(i, k1, x1) * mono(j, k2, x2)).sum()
    })
}

/// Largest coefficient of a non-constant mode.
pub fn max_nonconstant_1d(q: &composite_fourier::trig::TrigSeries1D) -> f64 {
    q.families()
        .flat_map(|(_, c)| c.iter().skip(1).map(|v| v.abs()))
        .fold(0.0, f64::max)
}

pub fn max_nonconstant_2d(q: &composite_fourier::trig::TrigSeries2D) -> f64 {
    let mut worst = 0.0f64;
    for b in &q.blocks {
        for m in 0..b.coeffs.rows() {
            for n in 0..b.coeffs.cols() {
                if m + n > 0 {
                    worst = worst.max(b.coeffs[(m, n)].abs());
                }
            }
        }
    }
    worst
}

/// Largest edge coefficient of a non-constant mode along the edge.
pub fn max_nonconstant_edge(t: &composite_fourier::series2d::EdgeCoefficientTable) -> f64 {
    [&t.cosine, &t.sine]
        .into_iter()
        .flatten()
        .flat_map(|m| (0..m.rows()).flat_map(move |i| (1..m.cols()).map(move |n| m[(i, n)].abs())))
        .fold(0.0, f64::max)
}

/// Random coefficients in `[-1, 1]` for every `x1^i x2^j` with `i + j <= degree`.
pub fn random_complete_terms(rng: &mut impl Rng, degree: usize) -> Vec<(usize, usize, f64)> {
    enumerate_graded(degree)
        .into_iter()
        .map(|k| (k.k1, k.k2, rng.gen_range(-1.0..=1.0)))
        .collect()
}

/// Largest `|approx - exact|` over every component `k1 + k2 <= p` on an
/// `n x n` grid.
pub fn max_reconstruction_error_2d(s: &CompositeSeries2D, f: &FunctionSpec2D, p: usize, n: usize) -> f64 {
    let d = f.domain;
    let (a1, a2) = (d.axis1(), d.axis2());
    let xs1 = linspace(a1.lo(), a1.hi(), n);
    let xs2 = linspace(a2.lo(), a2.hi(), n);
    let mut worst = 0.0f64;
    for k in enumerate_graded(p) {
        let g = s.evaluate_grid(k.k1, k.k2, &xs1, &xs2).unwrap();
        for (i, &x1) in xs1.iter().enumerate() {
            for (j, &x2) in xs2.iter().enumerate() {
                worst = worst.max((g[(i, j)] - f.eval(k.k1, k.k2, x1, x2)).abs());
            }
        }
    }
    worst
}

/// Largest residual of the boundary conditions of `u - phi_1` relative to the
/// size of the boundary data.
pub fn residual_boundary_1d(s: &CompositeSeries1D, f: &FunctionSpec1D) -> f64 {
    let rows = boundary_constraints_1d(s.kind, s.r, s.domain.a);
    let scale = 1.0 + s.boundary_data().q1.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    rows.iter()
        .map(|c| {
            c.apply(|k, x| f.eval(k, x) - s.evaluate_part(Part1D::Boundary, k, x).unwrap())
                .abs()
        })
        .fold(0.0, f64::max)
        / scale
}

/// Residuals of the 2D supplementary conditions at `probes` points per edge,
/// relative to the size of the data:
///
/// * corner rows applied to `u - phi_3`,
/// * edge rows applied to each edge function against the truncated series
///   of its boundary Fourier coefficients,
/// * edge rows applied to the opposite edge function, which must vanish.
pub fn residual_edges_2d(s: &CompositeSeries2D, f: &FunctionSpec2D, probes: usize) -> f64 {
    let d = f.domain;
    let r = s.r;
    let mut worst = 0.0f64;

    let q3_scale = 1.0 + s.corner_data().q3.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    for c in corner_constraints(s.kind, r, d.a, d.b).unwrap() {
        let v = c.apply(|k1, k2, x1, x2| {
            f.eval(k1, k2, x1, x2) - s.evaluate_part(Part2D::Corner, k1, k2, x1, x2).unwrap()
        });
        worst = worst.max(v.abs() / q3_scale);
    }

    let edge_kind = s.kind.edge_kind().unwrap();
    for axis in [EdgeAxis::X1, EdgeAxis::X2] {
        let e = s.edge(axis);
        let (constrained, along, own, other) = match axis {
            EdgeAxis::X1 => (d.axis1(), d.axis2(), Part2D::EdgeX1, Part2D::EdgeX2),
            EdgeAxis::X2 => (d.axis2(), d.axis1(), Part2D::EdgeX2, Part2D::EdgeX1),
        };
        let part = |p: Part2D, k: usize, c: f64, t: f64| match axis {
            EdgeAxis::X1 => s.evaluate_part(p, k, 0, c, t).unwrap(),
            EdgeAxis::X2 => s.evaluate_part(p, 0, k, t, c).unwrap(),
        };
        let scale = 1.0 + e.table.max_abs();
        for (i, row) in boundary_constraints_1d(edge_kind, r, constrained.a).iter().enumerate() {
            for t in linspace(along.lo(), along.hi(), probes) {
                let mut series = 0.0;
                for n in 0..=e.table.modes {
                    let beta = wavenumber(n, along.a);
                    if let Some(c) = &e.table.cosine {
                        series += mu(n) * c[(i, n)] * (beta * t).cos();
                    }
                    if let Some(sn) = &e.table.sine {
                        series += mu(n) * sn[(i, n)] * (beta * t).sin();
                    }
                }
                let own_v = row.apply(|k, c| part(own, k, c, t));
                let other_v = row.apply(|k, c| part(other, k, c, t));
                worst = worst.max((own_v - series).abs() / scale).max(other_v.abs() / scale);
            }
        }
    }
    worst
}

/// Fourth-order central difference.
pub fn central_difference(g: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (8.0 * (g(x + h) - g(x - h)) - (g(x + 2.0 * h) - g(x - 2.0 * h))) / (12.0 * h)
}

/// `bound` plus one unit in its second significant digit.
pub fn two_digit_slack(bound: f64) -> f64 {
    bound + 10f64.powf(bound.log10().floor() - 1.0)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Golden rows `(index, subset, [s2 composite, s2 direct, s4 composite, s4 direct])` at `M = 40`.
pub const GOLDEN_1D: [(&str, Subset, [f64; 4]); 9] = [
    ("||e||^4", Subset::Overall, [4.72516E-07, 1.24047E-02, 4.72516E-07, 1.23744E-02]),
    ("||e||^4", Subset::Interior, [4.72595E-07, 1.22866E-02, 4.72603E-07, 1.23165E-02]),
    ("||e||^4", Subset::Boundary, [7.98557E-08, 6.03144E-01, 4.14033E-08, 3.01591E-01]),
    ("e^(5)", Subset::Overall, [2.06660E-04, 2.06662E-04, 2.06266E-04, 2.06188E-04]),
    ("e^(5)", Subset::Interior, [2.05129E-04, 2.05131E-04, 2.05511E-04, 2.05434E-04]),
    ("e^(5)", Subset::Boundary, [7.85952E-03, 7.85949E-03, 3.97827E-03, 3.97717E-03]),
    ("e^(6)", Subset::Overall, [2.05366E-02, 2.05368E-02, 2.04864E-02, 2.04799E-02]),
    ("e^(6)", Subset::Interior, [2.03407E-02, 2.03409E-02, 2.03904E-02, 2.03840E-02]),
    ("e^(6)", Subset::Boundary, [1.00000E+00, 1.00000E+00, 5.00000E-01, 5.00000E-01]),
];

/// Golden rows `(index, subset, [s6 composite, s6 direct, s8 composite, s8 direct])` at `M = N = 40`.
pub const GOLDEN_2D: [(&str, Subset, [f64; 4]); 12] = [
    ("||e||^4", Subset::Overall, [5.18432E-06, 2.01323E-02, 2.15001E-07, 1.80706E-02]),
    ("||e||^4", Subset::Interior, [2.43680E-06, 7.86272E-03, 2.10033E-07, 1.08846E-02]),
    ("||e||^4", Subset::Boundary, [4.67352E-05, 3.21987E-01, 3.25495E-07, 1.94078E-01]),
    ("||e||^4", Subset::Corner, [2.62376E-03, 2.00012E-01, 1.45041E-06, 2.00799E-01]),
    ("|e|^5", Subset::Overall, [1.30588E-03, 1.88203E-02, 6.18574E-05, 1.66987E-02]),
    ("|e|^5", Subset::Interior, [5.83649E-04, 6.49644E-03, 4.39762E-05, 1.06156E-02]),
    ("|e|^5", Subset::Boundary, [1.04781E-02, 3.18975E-01, 4.84950E-04, 1.64899E-01]),
    ("|e|^5", Subset::Corner, [8.62915E-01, 5.00031E-01, 1.98913E-03, 2.50000E-01]),
    ("|e|^6", Subset::Overall, [9.95679E-02, 2.10069E-02, 5.36005E-03, 1.63157E-02]),
    ("|e|^6", Subset::Interior, [4.75365E-02, 8.77358E-03, 3.41443E-03, 9.51247E-03]),
    ("|e|^6", Subset::Boundary, [9.41960E-01, 3.23994E-01, 5.15023E-02, 1.83399E-01]),
    ("|e|^6", Subset::Corner, [4.41929E+01, 3.39905E-17, 2.04528E-01, 1.44568E-01]),
];
