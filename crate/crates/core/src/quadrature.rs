//! Composite Gauss-Legendre quadrature and Fourier coefficient extraction.

use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use serde::Serialize;

use crate::domain::{Domain1D, Domain2D, SeriesKind1D};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::trig::{Trig, TrigBlock, TrigSeries1D, TrigSeries2D};

/// Panelled Gauss-Legendre rule.
///
/// The panel count for a job whose highest mode is `osc` is
/// `max(panels_base, 2 * osc)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub nodes_per_panel: usize,
    pub panels_base: usize,
    /// Projected coefficients smaller than this many roundoff units of the
    /// integrand magnitude are set to zero. `0` disables the floor.
    pub noise_floor_factor: f64,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self { nodes_per_panel: 16, panels_base: 4, noise_floor_factor: 16.0 }
    }
}

impl QuadratureRule {
    pub fn new(nodes_per_panel: usize, panels_base: usize) -> Result<Self> {
        if nodes_per_panel < 8 {
            return Err(Error::InvalidArgument("nodes_per_panel must be at least 8".into()));
        }
        if panels_base < 4 {
            return Err(Error::InvalidArgument("panels_base must be at least 4".into()));
        }
        Ok(Self { nodes_per_panel, panels_base, ..Self::default() })
    }

    pub fn with_noise_floor_factor(mut self, factor: f64) -> Self {
        self.noise_floor_factor = factor;
        self
    }

    pub fn panels(&self, osc: usize) -> usize {
        self.panels_base.max(2 * osc)
    }

    pub fn nodes(&self, lo: f64, hi: f64, osc: usize) -> NodeSet {
        let n = NonZeroUsize::new(self.nodes_per_panel.max(1)).expect("nonzero");
        let gl = GaussLegendre::new(n);
        let ref_pairs = gl.as_node_weight_pairs();
        let panels = self.panels(osc);
        let width = (hi - lo) / panels as f64;
        let mut x = Vec::with_capacity(panels * ref_pairs.len());
        let mut w = Vec::with_capacity(panels * ref_pairs.len());
        for p in 0..panels {
            let pl = lo + p as f64 * width;
            let mid = pl + 0.5 * width;
            for &(t, wt) in ref_pairs {
                x.push(mid + 0.5 * width * t);
                w.push(0.5 * width * wt);
            }
        }
        NodeSet { x, w }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    pub x: Vec<f64>,
    pub w: Vec<f64>,
}

impl NodeSet {
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// `sum |w_i|`: bound on the roundoff a weighted sum picks up when the
    /// node errors are correlated.
    pub fn noise_scale(&self) -> f64 {
        self.w.iter().map(|w| w.abs()).sum()
    }

    /// `sqrt(sum w_i^2)`: the same for uncorrelated node errors.
    pub fn random_noise_scale(&self) -> f64 {
        self.w.iter().map(|w| w * w).sum::<f64>().sqrt()
    }

    /// Weighted basis matrix: rows nodes, columns modes, entries `w_i f(alpha_m x_i)`.
    pub fn projection_matrix(&self, f: Trig, a: f64, m_max: usize) -> DenseMatrix {
        DenseMatrix::from_fn(self.len(), m_max + 1, |i, m| {
            self.w[i] * f.apply(crate::trig::wavenumber(m, a) * self.x[i])
        })
    }
}

fn check_finite(v: f64, at: &[f64]) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteIntegrand { at: at.to_vec() })
    }
}

pub fn integrate_1d(
    g: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    oscillation_index: usize,
    rule: &QuadratureRule,
) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
    }
    let nodes = rule.nodes(lo, hi, oscillation_index);
    let mut s = 0.0;
    for (&x, &w) in nodes.x.iter().zip(&nodes.w) {
        s += w * check_finite(g(x), &[x])?;
    }
    Ok(s)
}

pub fn integrate_2d(
    g: impl Fn(f64, f64) -> f64,
    domain: &Domain2D,
    osc1: usize,
    osc2: usize,
    rule: &QuadratureRule,
) -> Result<f64> {
    let (d1, d2) = (domain.axis1(), domain.axis2());
    let n1 = rule.nodes(d1.lo(), d1.hi(), osc1);
    let n2 = rule.nodes(d2.lo(), d2.hi(), osc2);
    let mut s = 0.0;
    for (&x1, &w1) in n1.x.iter().zip(&n1.w) {
        let mut inner = 0.0;
        for (&x2, &w2) in n2.x.iter().zip(&n2.w) {
            inner += w2 * check_finite(g(x1, x2), &[x1, x2])?;
        }
        s += w1 * inner;
    }
    Ok(s)
}

/// Trigonometric families of a one-dimensional kind.
pub fn kind_families(kind: SeriesKind1D) -> &'static [Trig] {
    match kind {
        SeriesKind1D::FullRange => &[Trig::Cos, Trig::Sin],
        SeriesKind1D::HalfCosine => &[Trig::Cos],
        SeriesKind1D::HalfSine => &[Trig::Sin],
    }
}

/// Projects node values onto `families` with modes `0..=m_max`.
///
/// Coefficients are `(2/L) sum_i w_i g_i f(alpha_m x_i)`, `L` the interval
/// length. `magnitude` bounds the terms that cancelled when forming `values`;
/// it sets the noise floor.
pub fn project_1d(
    values: &[f64],
    nodes: &NodeSet,
    domain: &Domain1D,
    families: &[Trig],
    m_max: usize,
    magnitude: f64,
    rule: &QuadratureRule,
) -> Result<TrigSeries1D> {
    if values.len() != nodes.len() {
        return Err(Error::DimensionMismatch { expected: nodes.len(), got: values.len() });
    }
    for (v, x) in values.iter().zip(&nodes.x) {
        check_finite(*v, &[*x])?;
    }
    let scale = 2.0 / domain.length();
    let floor = rule.noise_floor_factor * f64::EPSILON * magnitude * scale * nodes.noise_scale();
    let mut out = TrigSeries1D::zero(domain.a, m_max, families);
    for &f in families {
        let coeffs = out.family_mut(f).as_mut().expect("allocated");
        for (m, c) in coeffs.iter_mut().enumerate() {
            if f == Trig::Sin && m == 0 {
                continue;
            }
            let alpha = crate::trig::wavenumber(m, domain.a);
            let mut s = 0.0;
            for ((&x, &w), &g) in nodes.x.iter().zip(&nodes.w).zip(values) {
                s += w * g * f.apply(alpha * x);
            }
            let v = scale * s;
            *c = if v.abs() < floor { 0.0 } else { v };
        }
    }
    Ok(out)
}

/// Projects tensor-grid node values (rows `x1`) onto product families.
#[allow(clippy::too_many_arguments)]
pub fn project_2d(
    values: &DenseMatrix,
    nodes1: &NodeSet,
    nodes2: &NodeSet,
    domain: &Domain2D,
    families: &[(Trig, Trig)],
    m_max: usize,
    n_max: usize,
    magnitude: f64,
    rule: &QuadratureRule,
) -> Result<TrigSeries2D> {
    if values.rows() != nodes1.len() || values.cols() != nodes2.len() {
        return Err(Error::DimensionMismatch {
            expected: nodes1.len() * nodes2.len(),
            got: values.rows() * values.cols(),
        });
    }
    if let Some(pos) = values.as_slice().iter().position(|v| !v.is_finite()) {
        let (i, j) = (pos / values.cols(), pos % values.cols());
        return Err(Error::NonFiniteIntegrand { at: vec![nodes1.x[i], nodes2.x[j]] });
    }
    let (d1, d2) = (domain.axis1(), domain.axis2());
    let scale = (2.0 / d1.length()) * (2.0 / d2.length());
    let floor = rule.noise_floor_factor
        * f64::EPSILON
        * magnitude
        * scale
        * (nodes1.noise_scale() * nodes2.random_noise_scale())
            .max(nodes1.random_noise_scale() * nodes2.noise_scale());
    let mut blocks = Vec::with_capacity(families.len());
    for &(f1, f2) in families {
        let b1 = nodes1.projection_matrix(f1, domain.a, m_max);
        let b2 = nodes2.projection_matrix(f2, domain.b, n_max);
        let mut v = b1.transpose_matmul(values)?.matmul(&b2)?;
        for m in 0..=m_max {
            for n in 0..=n_max {
                let zero_mode = (f1 == Trig::Sin && m == 0) || (f2 == Trig::Sin && n == 0);
                let c = scale * v[(m, n)];
                v[(m, n)] = if zero_mode || c.abs() < floor { 0.0 } else { c };
            }
        }
        blocks.push(TrigBlock { f1, f2, coeffs: v });
    }
    Ok(TrigSeries2D { a: domain.a, b: domain.b, m_max, n_max, blocks })
}

/// Fourier coefficients of `g` in the series of `kind` with modes `0..=m_max`.
///
/// `V_m = (2/L) integral g(x) f(alpha_m x) dx`, with `L = 2a` for the
/// full-range kind and `L = a` for the half-range kinds.
pub fn fourier_coefficients_1d(
    g: impl Fn(f64) -> f64,
    kind: SeriesKind1D,
    domain: &Domain1D,
    m_max: usize,
    rule: &QuadratureRule,
) -> Result<TrigSeries1D> {
    kind.check_domain(domain)?;
    let nodes = rule.nodes(domain.lo(), domain.hi(), m_max);
    let values: Vec<f64> = nodes.x.iter().map(|&x| g(x)).collect();
    let magnitude = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    project_1d(&values, &nodes, domain, kind_families(kind), m_max, magnitude, rule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn trapezoid(g: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
        let h = (hi - lo) / n as f64;
        let mut s = 0.5 * (g(lo) + g(hi));
        for i in 1..n {
            s += g(lo + i as f64 * h);
        }
        s * h
    }

    #[test]
    fn basic_integrals() {
        let rule = QuadratureRule::default();
        assert!((integrate_1d(|_| 1.0, -1.0, 1.0, 0, &rule).unwrap() - 2.0).abs() < 1e-15);
        let c = integrate_1d(|x| (3.0 * PI * x).cos(), -1.0, 1.0, 3, &rule).unwrap();
        assert!(c.abs() < 1e-15);
        let g = |x: f64| x.powi(3) * (PI * x).sin();
        let v = integrate_1d(g, -1.0, 1.0, 1, &rule).unwrap();
        let oracle = trapezoid(g, -1.0, 1.0, 1_000_000);
        assert!((v - oracle).abs() < 1e-11, "{v} vs {oracle}");
        // Closed form by parts.
        assert!((v - (2.0 / PI - 12.0 / PI.powi(3))).abs() < 1e-14);
    }

    #[test]
    fn two_dimensional_integrals() {
        let rule = QuadratureRule::default();
        let d = Domain2D::symmetric(1.0, 1.0).unwrap();
        assert!((integrate_2d(|_, _| 1.0, &d, 0, 0, &rule).unwrap() - 4.0).abs() < 1e-14);
        let c = integrate_2d(|x, y| (2.0 * PI * x).cos() * (2.0 * PI * y).cos(), &d, 2, 2, &rule)
            .unwrap();
        assert!(c.abs() < 1e-14);
        let p = integrate_2d(|x, y| x * x * y * y, &d, 0, 0, &rule).unwrap();
        assert!((p - 4.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn panel_counts() {
        let rule = QuadratureRule::default();
        assert_eq!(rule.panels(0), 4);
        assert_eq!(rule.panels(40), 80);
        assert_eq!(rule.nodes(0.0, 1.0, 40).len(), 1280);
        assert!(QuadratureRule::new(4, 4).is_err());
        assert!(QuadratureRule::new(16, 2).is_err());
    }

    #[test]
    fn non_finite_is_reported() {
        let rule = QuadratureRule::default();
        let r = integrate_1d(|x| if x > 0.5 { f64::NAN } else { 0.0 }, 0.0, 1.0, 0, &rule);
        assert!(matches!(r, Err(Error::NonFiniteIntegrand { .. })));
        let d = Domain1D::symmetric(1.0).unwrap();
        let r = fourier_coefficients_1d(|_| f64::INFINITY, SeriesKind1D::FullRange, &d, 2, &rule);
        assert!(matches!(r, Err(Error::NonFiniteIntegrand { .. })));
    }

    #[test]
    fn constant_and_pure_modes() {
        let rule = QuadratureRule::default();
        let d = Domain1D::symmetric(1.0).unwrap();
        let c = fourier_coefficients_1d(|_| 0.5, SeriesKind1D::FullRange, &d, 40, &rule).unwrap();
        let cos = c.cosine.as_ref().unwrap();
        assert!((cos[0] - 1.0).abs() < 1e-14);
        assert!(cos[1..].iter().all(|v| v.abs() < 1e-13));
        assert!(c.sine.as_ref().unwrap().iter().all(|v| v.abs() < 1e-13));

        let s = fourier_coefficients_1d(|x| (PI * x).sin(), SeriesKind1D::FullRange, &d, 10, &rule)
            .unwrap();
        let sin = s.sine.as_ref().unwrap();
        assert!((sin[1] - 1.0).abs() < 1e-14);
        for (m, v) in sin.iter().enumerate().filter(|(m, _)| *m != 1) {
            assert!(v.abs() < 1e-13, "sine {m}");
        }
        assert!(s.cosine.as_ref().unwrap().iter().all(|v| v.abs() < 1e-13));

        for k in 0..=12 {
            let g = move |x: f64| (k as f64 * PI * x).cos();
            let c = fourier_coefficients_1d(g, SeriesKind1D::FullRange, &d, 12, &rule).unwrap();
            let cos = c.cosine.as_ref().unwrap();
            for (m, v) in cos.iter().enumerate() {
                let expect = if m == k { if k == 0 { 2.0 } else { 1.0 } } else { 0.0 };
                assert!((v - expect).abs() < 1e-12, "k={k} m={m} v={v}");
            }
        }
    }

    #[test]
    fn half_sine_of_linear_function() {
        let rule = QuadratureRule::default();
        let d = Domain1D::nonnegative(1.0).unwrap();
        let c = fourier_coefficients_1d(|x| x, SeriesKind1D::HalfSine, &d, 3, &rule).unwrap();
        let sin = c.sine.as_ref().unwrap();
        assert!(c.cosine.is_none());
        for m in 1..=3 {
            let oracle = 2.0 * trapezoid(|x| x * (m as f64 * PI * x).sin(), 0.0, 1.0, 1_000_000);
            assert!((sin[m] - oracle).abs() < 1e-11, "m={m}");
            let closed = 2.0 * if m % 2 == 1 { 1.0 } else { -1.0 } / (m as f64 * PI);
            assert!((sin[m] - closed).abs() < 1e-14);
        }
    }

    #[test]
    fn doubling_panels_is_a_plateau() {
        let d = Domain1D::symmetric(1.0).unwrap();
        let g = |x: f64| (0.5 * PI * x).sin();
        let base = QuadratureRule::default();
        let doubled = QuadratureRule { panels_base: 8, ..base };
        // panels_base only matters below 2*m_max panels; use a small m_max.
        let c1 = fourier_coefficients_1d(g, SeriesKind1D::FullRange, &d, 3, &base).unwrap();
        let c2 = fourier_coefficients_1d(g, SeriesKind1D::FullRange, &d, 3, &doubled).unwrap();
        for (f, a) in c1.families() {
            let b = c2.family(f).unwrap();
            for (x, y) in a.iter().zip(b) {
                assert!((x - y).abs() <= 1e-12);
            }
        }
    }
}
