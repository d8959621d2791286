//! Two-dimensional composite series: corner function, two edge functions and
//! an internal double series.

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{
    boundary_constraints_1d, corner_constraints, default_basis_1d, default_corner_basis,
    BasisOperator1D, BasisOperator2D, Constraint1D, CornerConstraint,
};
use crate::domain::{Domain1D, Domain2D, FunctionSpec2D, SeriesKind2D, SmoothnessOrder};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::quadrature::{project_1d, project_2d, NodeSet, QuadratureRule};
use crate::trig::{trig_matrix, Trig, TrigSeries2D};

/// The corner vector `q3` with one label per constraint row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerData {
    pub q3: Vec<f64>,
    pub labels: Vec<String>,
}

pub fn corner_data(f: &FunctionSpec2D, kind: SeriesKind2D, r: SmoothnessOrder) -> Result<CornerData> {
    kind.check(&f.domain)?;
    f.require_order(r.two_r() - 2)?;
    let rows = corner_constraints(kind, r, f.domain.a, f.domain.b)?;
    Ok(CornerData {
        q3: rows.iter().map(|c| c.apply(|k1, k2, x1, x2| f.eval(k1, k2, x1, x2))).collect(),
        labels: rows.iter().map(CornerConstraint::label).collect(),
    })
}

/// Which pair of opposite edges an edge function handles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeAxis {
    /// Edges `x1 = const`; constraints act on `x1`, modes run along `x2`.
    X1,
    /// Edges `x2 = const`; constraints act on `x2`, modes run along `x1`.
    X2,
}

/// Boundary Fourier coefficients of the residual edge traces.
///
/// Row `i` of each matrix is constraint `i` applied across the edges; column
/// `n` is mode `n` along the edge direction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeCoefficientTable {
    pub axis: EdgeAxis,
    pub modes: usize,
    pub labels: Vec<String>,
    pub cosine: Option<DenseMatrix>,
    pub sine: Option<DenseMatrix>,
}

impl EdgeCoefficientTable {
    pub fn family(&self, f: Trig) -> Option<&DenseMatrix> {
        match f {
            Trig::Cos => self.cosine.as_ref(),
            Trig::Sin => self.sine.as_ref(),
        }
    }

    /// The q-vector of mode `n` in family `f`.
    pub fn vector(&self, f: Trig, n: usize) -> Option<Vec<f64>> {
        self.family(f).map(|m| m.column(n))
    }

    pub fn max_abs(&self) -> f64 {
        [&self.cosine, &self.sine]
            .iter()
            .filter_map(|m| m.as_ref())
            .fold(0.0, |a, m| a.max(m.max_abs()))
    }
}

fn edge_families(kind: SeriesKind2D) -> Result<&'static [Trig]> {
    match kind {
        SeriesKind2D::FullRange => Ok(&[Trig::Cos, Trig::Sin]),
        SeriesKind2D::SinSin => Ok(&[Trig::Sin]),
        other => Err(Error::UnsupportedKind(other.to_string())),
    }
}

fn internal_families(kind: SeriesKind2D) -> Result<&'static [(Trig, Trig)]> {
    match kind {
        SeriesKind2D::FullRange => Ok(&[
            (Trig::Cos, Trig::Cos),
            (Trig::Sin, Trig::Cos),
            (Trig::Cos, Trig::Sin),
            (Trig::Sin, Trig::Sin),
        ]),
        SeriesKind2D::SinSin => Ok(&[(Trig::Sin, Trig::Sin)]),
        other => Err(Error::UnsupportedKind(other.to_string())),
    }
}

type Eval2D<'a> = &'a (dyn Fn(usize, usize, f64, f64) -> f64 + Sync);

/// Per-axis view: (constrained axis extent, edge-direction extent).
fn axis_domains(domain: &Domain2D, axis: EdgeAxis) -> (Domain1D, Domain1D) {
    match axis {
        EdgeAxis::X1 => (domain.axis1(), domain.axis2()),
        EdgeAxis::X2 => (domain.axis2(), domain.axis1()),
    }
}

/// Computes the edge table of the residual `f - phi3` for one edge pair.
///
/// `phi3_magnitude` bounds the terms of `phi3` before cancellation; it sets
/// the noise floor together with `f`.
#[allow(clippy::too_many_arguments)]
pub fn edge_coefficients(
    f: &FunctionSpec2D,
    phi3: Eval2D<'_>,
    phi3_magnitude: Eval2D<'_>,
    kind: SeriesKind2D,
    r: SmoothnessOrder,
    axis: EdgeAxis,
    modes: usize,
    rule: &QuadratureRule,
) -> Result<EdgeCoefficientTable> {
    kind.check(&f.domain)?;
    let edge_kind = kind.edge_kind()?;
    let families = edge_families(kind)?;
    let (constrained, along) = axis_domains(&f.domain, axis);
    let rows = boundary_constraints_1d(edge_kind, r, constrained.a);
    let nodes = rule.nodes(along.lo(), along.hi(), modes);
    // (k along the constrained axis, coordinate on it, coordinate along the edge)
    let pick = |g: Eval2D<'_>, k: usize, c: f64, t: f64| match axis {
        EdgeAxis::X1 => g(k, 0, c, t),
        EdgeAxis::X2 => g(0, k, t, c),
    };
    let u = |k1: usize, k2: usize, x1: f64, x2: f64| f.eval(k1, k2, x1, x2);
    let mut cos = families.contains(&Trig::Cos).then(|| DenseMatrix::zeros(rows.len(), modes + 1));
    let mut sin = families.contains(&Trig::Sin).then(|| DenseMatrix::zeros(rows.len(), modes + 1));
    for (i, row) in rows.iter().enumerate() {
        let mut mag = 0.0f64;
        let values: Vec<f64> = nodes
            .x
            .iter()
            .map(|&t| {
                let uv = row.apply(|k, c| pick(&u, k, c, t));
                let pv = row.apply(|k, c| pick(phi3, k, c, t));
                mag = mag
                    .max(row.magnitude(|k, c| pick(&u, k, c, t)) + row.magnitude(|k, c| pick(phi3_magnitude, k, c, t)));
                uv - pv
            })
            .collect();
        let series = project_1d(&values, &nodes, &along, families, modes, mag, rule)?;
        for (fam, coeffs) in series.families() {
            let target = match fam {
                Trig::Cos => cos.as_mut(),
                Trig::Sin => sin.as_mut(),
            }
            .expect("family allocated");
            for (n, c) in coeffs.iter().enumerate() {
                target[(i, n)] = *c;
            }
        }
    }
    Ok(EdgeCoefficientTable {
        axis,
        modes,
        labels: rows.iter().map(Constraint1D::label).collect(),
        cosine: cos,
        sine: sin,
    })
}

/// An edge function `sum_n mu_n [xi_1n(s) cos(beta_n t) + xi_2n(s) sin(beta_n t)]`
/// with `s` the constrained coordinate and `t` the edge coordinate.
#[derive(Debug, Clone)]
pub struct EdgeFunction {
    pub table: EdgeCoefficientTable,
    basis: BasisOperator1D,
    /// Family coefficients per mode: `size x (modes + 1)`.
    cos_coeffs: Option<DenseMatrix>,
    sin_coeffs: Option<DenseMatrix>,
    along: Domain1D,
}

impl EdgeFunction {
    fn new(table: EdgeCoefficientTable, basis: BasisOperator1D, along: Domain1D) -> Result<Self> {
        let solve = |q: &Option<DenseMatrix>| -> Result<Option<DenseMatrix>> {
            let Some(q) = q else { return Ok(None) };
            let cols: Vec<Vec<f64>> = (0..q.cols()).map(|n| q.column(n)).collect();
            let sols = basis.solve_multi(&cols)?;
            Ok(Some(DenseMatrix::from_fn(basis.size(), q.cols(), |j, n| sols[n].solution[j])))
        };
        let cos_coeffs = solve(&table.cosine)?;
        let sin_coeffs = solve(&table.sine)?;
        Ok(Self { table, basis, cos_coeffs, sin_coeffs, along })
    }

    pub fn basis(&self) -> &BasisOperator1D {
        &self.basis
    }

    /// Family coefficients `R^-1 q` per mode (columns).
    pub fn family_coefficients(&self, f: Trig) -> Option<&DenseMatrix> {
        match f {
            Trig::Cos => self.cos_coeffs.as_ref(),
            Trig::Sin => self.sin_coeffs.as_ref(),
        }
    }

    /// Bound on the size of the terms summed by the edge function, with `ss`
    /// sampling the constrained axis.
    fn magnitude_bound(&self, ss: &[f64]) -> f64 {
        let pmax: Vec<f64> = (0..self.basis.size())
            .map(|j| ss.iter().fold(0.0f64, |m, &s| m.max(self.basis.family().eval(j, 0, s).abs())))
            .collect();
        [&self.cos_coeffs, &self.sin_coeffs]
            .into_iter()
            .flatten()
            .map(|c| {
                (0..c.rows())
                    .flat_map(|j| (0..c.cols()).map(move |n| (j, n)))
                    .map(|(j, n)| crate::trig::mu(n) * (c[(j, n)] * pmax[j]).abs())
                    .sum::<f64>()
            })
            .sum()
    }

    /// Values on `xs1 x xs2`.
    fn eval_grid(&self, k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> DenseMatrix {
        let (ks, kt, ss, ts) = match self.table.axis {
            EdgeAxis::X1 => (k1, k2, xs1, xs2),
            EdgeAxis::X2 => (k2, k1, xs2, xs1),
        };
        let p = DenseMatrix::from_fn(ss.len(), self.basis.size(), |i, j| {
            self.basis.family().eval(j, ks, ss[i])
        });
        let mut out = DenseMatrix::zeros(ss.len(), ts.len());
        for (f, coeffs) in [(Trig::Cos, &self.cos_coeffs), (Trig::Sin, &self.sin_coeffs)] {
            let Some(c) = coeffs else { continue };
            let t = trig_matrix(f, kt, self.along.a, self.table.modes, ts);
            let part = p
                .matmul(c)
                .and_then(|x| x.matmul_transpose(&t))
                .expect("shapes are consistent by construction");
            for i in 0..ss.len() {
                for j in 0..ts.len() {
                    out[(i, j)] += part[(i, j)];
                }
            }
        }
        match self.table.axis {
            EdgeAxis::X1 => out,
            EdgeAxis::X2 => out.transpose(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Part2D {
    /// `phi_0`, the internal double series.
    Internal,
    /// `phi_1`, the edge function for `x1 = const` edges.
    EdgeX1,
    /// `phi_2`, the edge function for `x2 = const` edges.
    EdgeX2,
    /// `phi_3`, the corner function.
    Corner,
}

impl Part2D {
    pub const ALL: [Part2D; 4] = [Part2D::Internal, Part2D::EdgeX1, Part2D::EdgeX2, Part2D::Corner];
}

/// `u ~ phi_0 + phi_1 + phi_2 + phi_3`, differentiable term by term for
/// `k1 + k2 <= 2r`.
#[derive(Debug, Clone)]
pub struct CompositeSeries2D {
    pub r: SmoothnessOrder,
    pub kind: SeriesKind2D,
    pub domain: Domain2D,
    pub m_max: usize,
    pub n_max: usize,
    corner: BasisOperator2D,
    q3: CornerData,
    a3: Vec<f64>,
    edge1: EdgeFunction,
    edge2: EdgeFunction,
    q0: TrigSeries2D,
}

fn corner_grid(basis: &BasisOperator2D, a3: &[f64], k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> DenseMatrix {
    let rows: Vec<Vec<f64>> = xs1
        .par_iter()
        .map(|&x1| xs2.iter().map(|&x2| basis.combine(a3, k1, k2, x1, x2)).collect())
        .collect();
    DenseMatrix::from_rows(&rows).unwrap_or_else(|_| DenseMatrix::zeros(xs1.len(), xs2.len()))
}

/// Builds the composite series with the default polynomial families.
///
/// Construction order is corner, `x1` edges, `x2` edges, internal series.
pub fn build_composite_2d(
    f: &FunctionSpec2D,
    kind: SeriesKind2D,
    r: SmoothnessOrder,
    m_max: usize,
    n_max: usize,
    rule: &QuadratureRule,
) -> Result<CompositeSeries2D> {
    let domain = f.domain;
    kind.check(&domain)?;
    f.require_order(r.two_r() - 1)?;

    let corner = default_corner_basis(kind, r, domain.a, domain.b)?;
    let q3 = corner_data(f, kind, r)?;
    let a3 = corner.solve(&q3.q3)?.solution;
    let phi3 = |k1: usize, k2: usize, x1: f64, x2: f64| corner.combine(&a3, k1, k2, x1, x2);
    let phi3_mag = |k1: usize, k2: usize, x1: f64, x2: f64| corner.combine_magnitude(&a3, k1, k2, x1, x2);

    let edge_kind = kind.edge_kind()?;
    let t1 = edge_coefficients(f, &phi3, &phi3_mag, kind, r, EdgeAxis::X1, n_max, rule)?;
    let edge1 = EdgeFunction::new(t1, default_basis_1d(edge_kind, r, domain.a)?, domain.axis2())?;
    let t2 = edge_coefficients(f, &phi3, &phi3_mag, kind, r, EdgeAxis::X2, m_max, rule)?;
    let edge2 = EdgeFunction::new(t2, default_basis_1d(edge_kind, r, domain.b)?, domain.axis1())?;

    let (d1, d2) = (domain.axis1(), domain.axis2());
    let n1: NodeSet = rule.nodes(d1.lo(), d1.hi(), m_max);
    let n2: NodeSet = rule.nodes(d2.lo(), d2.hi(), n_max);
    let u_rows: Vec<Vec<f64>> = n1
        .x
        .par_iter()
        .map(|&x1| n2.x.iter().map(|&x2| f.eval(0, 0, x1, x2)).collect())
        .collect();
    let u = DenseMatrix::from_rows(&u_rows)?;
    let p3 = corner_grid(&corner, &a3, 0, 0, &n1.x, &n2.x);
    let p1 = edge1.eval_grid(0, 0, &n1.x, &n2.x);
    let p2 = edge2.eval_grid(0, 0, &n1.x, &n2.x);
    let p3_mag = n1
        .x
        .iter()
        .flat_map(|&x1| n2.x.iter().map(move |&x2| (x1, x2)))
        .map(|(x1, x2)| phi3_mag(0, 0, x1, x2))
        .fold(0.0f64, f64::max);
    let magnitude = u.max_abs() + edge1.magnitude_bound(&n1.x) + edge2.magnitude_bound(&n2.x) + p3_mag;
    let residual = DenseMatrix::from_fn(n1.len(), n2.len(), |i, j| {
        u[(i, j)] - p3[(i, j)] - p1[(i, j)] - p2[(i, j)]
    });
    let q0 = project_2d(&residual, &n1, &n2, &domain, internal_families(kind)?, m_max, n_max, magnitude, rule)?;

    Ok(CompositeSeries2D { r, kind, domain, m_max, n_max, corner, q3, a3, edge1, edge2, q0 })
}

impl CompositeSeries2D {
    pub fn max_order(&self) -> usize {
        self.r.two_r()
    }

    pub fn corner_data(&self) -> &CornerData {
        &self.q3
    }

    pub fn corner_coefficients(&self) -> &[f64] {
        &self.a3
    }

    pub fn corner_basis(&self) -> &BasisOperator2D {
        &self.corner
    }

    pub fn edge(&self, axis: EdgeAxis) -> &EdgeFunction {
        match axis {
            EdgeAxis::X1 => &self.edge1,
            EdgeAxis::X2 => &self.edge2,
        }
    }

    pub fn internal_coefficients(&self) -> &TrigSeries2D {
        &self.q0
    }

    fn check_order(&self, k1: usize, k2: usize) -> Result<()> {
        if k1 + k2 > self.max_order() {
            return Err(Error::OrderOutOfRange { order: k1 + k2, max: self.max_order() });
        }
        Ok(())
    }

    pub fn evaluate_part_grid(
        &self,
        part: Part2D,
        k1: usize,
        k2: usize,
        xs1: &[f64],
        xs2: &[f64],
    ) -> Result<DenseMatrix> {
        self.check_order(k1, k2)?;
        Ok(match part {
            Part2D::Internal => self.q0.eval_grid(k1, k2, xs1, xs2),
            Part2D::EdgeX1 => self.edge1.eval_grid(k1, k2, xs1, xs2),
            Part2D::EdgeX2 => self.edge2.eval_grid(k1, k2, xs1, xs2),
            Part2D::Corner => corner_grid(&self.corner, &self.a3, k1, k2, xs1, xs2),
        })
    }

    /// `u^(k1,k2)` on the grid `xs1 x xs2` (rows follow `xs1`).
    pub fn evaluate_grid(&self, k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> Result<DenseMatrix> {
        let mut out = self.evaluate_part_grid(Part2D::Internal, k1, k2, xs1, xs2)?;
        for part in [Part2D::EdgeX1, Part2D::EdgeX2, Part2D::Corner] {
            let p = self.evaluate_part_grid(part, k1, k2, xs1, xs2)?;
            for i in 0..xs1.len() {
                for j in 0..xs2.len() {
                    out[(i, j)] += p[(i, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn evaluate_part(&self, part: Part2D, k1: usize, k2: usize, x1: f64, x2: f64) -> Result<f64> {
        Ok(self.evaluate_part_grid(part, k1, k2, &[x1], &[x2])?[(0, 0)])
    }

    pub fn evaluate(&self, k1: usize, k2: usize, x1: f64, x2: f64) -> Result<f64> {
        Ok(self.evaluate_grid(k1, k2, &[x1], &[x2])?[(0, 0)])
    }
}

pub fn evaluate_2d(s: &CompositeSeries2D, k1: usize, k2: usize, x1: f64, x2: f64) -> Result<f64> {
    s.evaluate(k1, k2, x1, x2)
}
