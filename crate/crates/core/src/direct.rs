//! Direct expansion baseline: every derivative gets its own Fourier series.
//!
//! For half-range kinds the order-`k` derivative is expanded in the family
//! obtained by differentiating the kind's basis `k` times (sine for even `k`
//! and cosine for odd `k` in the sine case).

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::domain::{
    enumerate_graded, Domain1D, Domain2D, FunctionSpec1D, FunctionSpec2D, MultiIndex, SeriesKind1D,
    SeriesKind2D, SmoothnessOrder,
};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::quadrature::{project_1d, project_2d, QuadratureRule};
use crate::trig::{Trig, TrigSeries1D, TrigSeries2D};

fn families_1d(kind: SeriesKind1D, k: usize) -> Vec<Trig> {
    match kind {
        SeriesKind1D::FullRange => vec![Trig::Cos, Trig::Sin],
        SeriesKind1D::HalfSine => vec![Trig::Sin.differentiated(k)],
        SeriesKind1D::HalfCosine => vec![Trig::Cos.differentiated(k)],
    }
}

fn families_2d(kind: SeriesKind2D, k: MultiIndex) -> Result<Vec<(Trig, Trig)>> {
    match kind {
        SeriesKind2D::FullRange => Ok(vec![
            (Trig::Cos, Trig::Cos),
            (Trig::Sin, Trig::Cos),
            (Trig::Cos, Trig::Sin),
            (Trig::Sin, Trig::Sin),
        ]),
        SeriesKind2D::SinSin => Ok(vec![(Trig::Sin.differentiated(k.k1), Trig::Sin.differentiated(k.k2))]),
        other => Err(Error::UnsupportedKind(other.to_string())),
    }
}

#[derive(Debug, Clone)]
pub struct DirectExpansion1D {
    pub kind: SeriesKind1D,
    pub domain: Domain1D,
    pub m_max: usize,
    /// Series of `u^(k)`, indexed by `k`.
    pub orders: Vec<TrigSeries1D>,
}

pub fn build_direct_1d(
    f: &FunctionSpec1D,
    kind: SeriesKind1D,
    r: SmoothnessOrder,
    m_max: usize,
    rule: &QuadratureRule,
) -> Result<DirectExpansion1D> {
    let domain = f.domain;
    kind.check_domain(&domain)?;
    f.require_order(r.two_r())?;
    let nodes = rule.nodes(domain.lo(), domain.hi(), m_max);
    let orders = (0..=r.two_r())
        .map(|k| {
            let values: Vec<f64> = nodes.x.iter().map(|&x| f.eval(k, x)).collect();
            let mag = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            project_1d(&values, &nodes, &domain, &families_1d(kind, k), m_max, mag, rule)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DirectExpansion1D { kind, domain, m_max, orders })
}

impl DirectExpansion1D {
    pub fn max_order(&self) -> usize {
        self.orders.len().saturating_sub(1)
    }

    pub fn evaluate(&self, k: usize, x: f64) -> Result<f64> {
        self.orders
            .get(k)
            .map(|s| s.eval(0, x))
            .ok_or_else(|| Error::OrderNotBuilt(k.to_string()))
    }

    pub fn evaluate_grid(&self, k: usize, xs: &[f64]) -> Result<Vec<f64>> {
        xs.iter().map(|&x| self.evaluate(k, x)).collect()
    }
}

pub fn evaluate_direct_1d(d: &DirectExpansion1D, k: usize, x: f64) -> Result<f64> {
    d.evaluate(k, x)
}

#[derive(Debug, Clone)]
pub struct DirectExpansion2D {
    pub kind: SeriesKind2D,
    pub domain: Domain2D,
    pub m_max: usize,
    pub n_max: usize,
    pub orders: BTreeMap<MultiIndex, TrigSeries2D>,
}

pub fn build_direct_2d(
    f: &FunctionSpec2D,
    kind: SeriesKind2D,
    r: SmoothnessOrder,
    m_max: usize,
    n_max: usize,
    rule: &QuadratureRule,
) -> Result<DirectExpansion2D> {
    let domain = f.domain;
    kind.check(&domain)?;
    f.require_order(r.two_r())?;
    let (d1, d2) = (domain.axis1(), domain.axis2());
    let n1 = rule.nodes(d1.lo(), d1.hi(), m_max);
    let n2 = rule.nodes(d2.lo(), d2.hi(), n_max);
    let mut orders = BTreeMap::new();
    for k in enumerate_graded(r.two_r()) {
        let rows: Vec<Vec<f64>> = n1
            .x
            .par_iter()
            .map(|&x1| n2.x.iter().map(|&x2| f.eval(k.k1, k.k2, x1, x2)).collect())
            .collect();
        let values = DenseMatrix::from_rows(&rows)?;
        let mag = values.max_abs();
        let series = project_2d(&values, &n1, &n2, &domain, &families_2d(kind, k)?, m_max, n_max, mag, rule)?;
        orders.insert(k, series);
    }
    Ok(DirectExpansion2D { kind, domain, m_max, n_max, orders })
}

impl DirectExpansion2D {
    pub fn max_order(&self) -> usize {
        self.orders.keys().map(MultiIndex::total).max().unwrap_or(0)
    }

    pub fn evaluate_grid(&self, k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> Result<DenseMatrix> {
        self.orders
            .get(&MultiIndex::new(k1, k2))
            .map(|s| s.eval_grid(0, 0, xs1, xs2))
            .ok_or_else(|| Error::OrderNotBuilt(MultiIndex::new(k1, k2).to_string()))
    }

    pub fn evaluate(&self, k1: usize, k2: usize, x1: f64, x2: f64) -> Result<f64> {
        Ok(self.evaluate_grid(k1, k2, &[x1], &[x2])?[(0, 0)])
    }
}

pub fn evaluate_direct_2d(d: &DirectExpansion2D, k1: usize, k2: usize, x1: f64, x2: f64) -> Result<f64> {
    d.evaluate(k1, k2, x1, x2)
}
