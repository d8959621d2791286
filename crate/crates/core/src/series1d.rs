//! One-dimensional composite series: boundary function plus internal series.

use serde::Serialize;

use crate::basis::{boundary_constraints_1d, constraint_matrix_1d, BasisOperator1D, Constraint1D};
use crate::domain::{FunctionSpec1D, SeriesKind1D, SmoothnessOrder};
use crate::error::{Error, Result};
use crate::quadrature::{kind_families, project_1d, QuadratureRule};
use crate::trig::TrigSeries1D;

/// The boundary vector `q1` with one label per constraint row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryData1D {
    pub q1: Vec<f64>,
    pub labels: Vec<String>,
}

fn apply_rows(f: &FunctionSpec1D, rows: &[Constraint1D]) -> BoundaryData1D {
    BoundaryData1D {
        q1: rows.iter().map(|c| c.apply(|k, x| f.eval(k, x))).collect(),
        labels: rows.iter().map(Constraint1D::label).collect(),
    }
}

pub fn boundary_data_1d(
    f: &FunctionSpec1D,
    kind: SeriesKind1D,
    r: SmoothnessOrder,
) -> Result<BoundaryData1D> {
    kind.check_domain(&f.domain)?;
    f.require_order(r.two_r() - 1)?;
    Ok(apply_rows(f, &boundary_constraints_1d(kind, r, f.domain.a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Part1D {
    /// `phi_0`, the internal series.
    Internal,
    /// `phi_1`, the boundary function.
    Boundary,
}

/// `u ~ phi_0 + phi_1`, differentiable term by term up to order `2r`.
#[derive(Debug, Clone)]
pub struct CompositeSeries1D {
    pub r: SmoothnessOrder,
    pub kind: SeriesKind1D,
    pub domain: crate::domain::Domain1D,
    pub m_max: usize,
    basis: BasisOperator1D,
    q1: BoundaryData1D,
    a1: Vec<f64>,
    q0: TrigSeries1D,
}

/// Builds the composite series with the default polynomial family.
pub fn build_composite_1d(
    f: &FunctionSpec1D,
    kind: SeriesKind1D,
    r: SmoothnessOrder,
    m_max: usize,
    rule: &QuadratureRule,
) -> Result<CompositeSeries1D> {
    let basis = crate::basis::default_basis_1d(kind, r, f.domain.a)?;
    build_composite_1d_with_basis(f, kind, r, m_max, rule, basis)
}

/// Builds the composite series with a caller-supplied supplementary basis.
///
/// The basis matrix must be the kind's boundary constraints applied to the
/// family.
pub fn build_composite_1d_with_basis(
    f: &FunctionSpec1D,
    kind: SeriesKind1D,
    r: SmoothnessOrder,
    m_max: usize,
    rule: &QuadratureRule,
    basis: BasisOperator1D,
) -> Result<CompositeSeries1D> {
    let domain = f.domain;
    let q1 = boundary_data_1d(f, kind, r)?;
    let rows = boundary_constraints_1d(kind, r, domain.a);
    let expected = constraint_matrix_1d(basis.family(), &rows)?;
    if &expected != basis.matrix() {
        return Err(Error::InvalidArgument(
            "basis matrix does not match the kind's boundary constraints".into(),
        ));
    }
    let a1 = basis.solve(&q1.q1)?.solution;

    let nodes = rule.nodes(domain.lo(), domain.hi(), m_max);
    let mut umax = 0.0f64;
    let mut pmax = 0.0f64;
    let residual: Vec<f64> = nodes
        .x
        .iter()
        .map(|&x| {
            let u = f.eval(0, x);
            let p = basis.combine(&a1, 0, x);
            umax = umax.max(u.abs());
            pmax = pmax.max(basis.combine_magnitude(&a1, 0, x));
            u - p
        })
        .collect();
    let q0 = project_1d(&residual, &nodes, &domain, kind_families(kind), m_max, umax + pmax, rule)?;
    Ok(CompositeSeries1D { r, kind, domain, m_max, basis, q1, a1, q0 })
}

impl CompositeSeries1D {
    pub fn max_order(&self) -> usize {
        self.r.two_r()
    }

    pub fn boundary_data(&self) -> &BoundaryData1D {
        &self.q1
    }

    /// Family coefficients `R^-1 q1` of the boundary function.
    pub fn boundary_coefficients(&self) -> &[f64] {
        &self.a1
    }

    pub fn internal_coefficients(&self) -> &TrigSeries1D {
        &self.q0
    }

    pub fn basis(&self) -> &BasisOperator1D {
        &self.basis
    }

    fn check_order(&self, k: usize) -> Result<()> {
        if k > self.max_order() {
            return Err(Error::OrderOutOfRange { order: k, max: self.max_order() });
        }
        Ok(())
    }

    pub fn evaluate_part(&self, part: Part1D, k: usize, x: f64) -> Result<f64> {
        self.check_order(k)?;
        Ok(match part {
            Part1D::Internal => self.q0.eval(k, x),
            Part1D::Boundary => self.basis.combine(&self.a1, k, x),
        })
    }

    /// `u^(k)(x)` as `phi_0^(k)(x) + phi_1^(k)(x)`.
    pub fn evaluate(&self, k: usize, x: f64) -> Result<f64> {
        Ok(self.evaluate_part(Part1D::Internal, k, x)? + self.evaluate_part(Part1D::Boundary, k, x)?)
    }

    pub fn evaluate_grid(&self, k: usize, xs: &[f64]) -> Result<Vec<f64>> {
        xs.iter().map(|&x| self.evaluate(k, x)).collect()
    }
}

pub fn evaluate_1d(s: &CompositeSeries1D, k: usize, x: f64) -> Result<f64> {
    s.evaluate(k, x)
}
