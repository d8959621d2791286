//! Sampling grids and the normalized mean-absolute error indexes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::direct::{DirectExpansion1D, DirectExpansion2D};
use crate::domain::{enumerate_graded, Domain1D, Domain2D, FunctionSpec1D, FunctionSpec2D, MultiIndex};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::series1d::CompositeSeries1D;
use crate::series2d::CompositeSeries2D;

/// Normalizers below this are treated as zero.
pub const DEGENERATE_NORMALIZER: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Subset {
    Overall,
    Interior,
    Boundary,
    Corner,
}

impl Subset {
    pub const ONE_D: [Subset; 3] = [Subset::Overall, Subset::Interior, Subset::Boundary];
    pub const TWO_D: [Subset; 4] = [Subset::Overall, Subset::Interior, Subset::Boundary, Subset::Corner];

    pub fn as_str(self) -> &'static str {
        match self {
            Subset::Overall => "overall",
            Subset::Interior => "interior",
            Subset::Boundary => "boundary",
            Subset::Corner => "corner",
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    Interior,
    Boundary,
    Corner,
}

impl PointClass {
    fn subset(self) -> Subset {
        match self {
            PointClass::Interior => Subset::Interior,
            PointClass::Boundary => Subset::Boundary,
            PointClass::Corner => Subset::Corner,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridCounts {
    pub total: usize,
    pub interior: usize,
    pub boundary: usize,
    pub corner: usize,
}

impl GridCounts {
    pub fn of(&self, subset: Subset) -> usize {
        match subset {
            Subset::Overall => self.total,
            Subset::Interior => self.interior,
            Subset::Boundary => self.boundary,
            Subset::Corner => self.corner,
        }
    }
}

fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let h = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| if i + 1 == n { hi } else { lo + i as f64 * h }).collect()
}

/// Uniform points including both endpoints; the endpoints are the boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingGrid1D {
    pub xs: Vec<f64>,
}

impl SamplingGrid1D {
    pub fn class(&self, i: usize) -> PointClass {
        if i == 0 || i + 1 == self.xs.len() {
            PointClass::Boundary
        } else {
            PointClass::Interior
        }
    }

    pub fn counts(&self) -> GridCounts {
        let n = self.xs.len();
        GridCounts { total: n, interior: n - 2, boundary: 2, corner: 0 }
    }
}

/// Tensor grid `xs1 x xs2`; edges minus corners are the boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingGrid2D {
    pub xs1: Vec<f64>,
    pub xs2: Vec<f64>,
}

impl SamplingGrid2D {
    pub fn class(&self, i: usize, j: usize) -> PointClass {
        let e1 = i == 0 || i + 1 == self.xs1.len();
        let e2 = j == 0 || j + 1 == self.xs2.len();
        match (e1, e2) {
            (true, true) => PointClass::Corner,
            (false, false) => PointClass::Interior,
            _ => PointClass::Boundary,
        }
    }

    pub fn counts(&self) -> GridCounts {
        let (n1, n2) = (self.xs1.len(), self.xs2.len());
        GridCounts {
            total: n1 * n2,
            interior: (n1 - 2) * (n2 - 2),
            boundary: 2 * (n1 - 2) + 2 * (n2 - 2),
            corner: 4,
        }
    }
}

pub fn make_grid_1d(domain: &Domain1D, n: usize) -> Result<SamplingGrid1D> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("grid needs at least 3 points, got {n}")));
    }
    Ok(SamplingGrid1D { xs: uniform(domain.lo(), domain.hi(), n) })
}

pub fn make_grid_2d(domain: &Domain2D, n1: usize, n2: usize) -> Result<SamplingGrid2D> {
    let g1 = make_grid_1d(&domain.axis1(), n1)?;
    let g2 = make_grid_1d(&domain.axis2(), n2)?;
    Ok(SamplingGrid2D { xs1: g1.xs, xs2: g2.xs })
}

/// Anything that approximates `u^(k)` on an interval.
pub trait Approximation1D {
    fn max_order(&self) -> usize;
    fn evaluate_grid(&self, k: usize, xs: &[f64]) -> Result<Vec<f64>>;
}

/// Anything that approximates `u^(k1,k2)` on a rectangle.
pub trait Approximation2D {
    fn max_order(&self) -> usize;
    /// Row-major values with `xs1` as rows.
    fn evaluate_grid(&self, k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> Result<DenseMatrix>;
}

impl Approximation1D for CompositeSeries1D {
    fn max_order(&self) -> usize {
        CompositeSeries1D::max_order(self)
    }
    fn evaluate_grid(&self, k: usize, xs: &[f64]) -> Result<Vec<f64>> {
        CompositeSeries1D::evaluate_grid(self, k, xs)
    }
}

impl Approximation1D for DirectExpansion1D {
    fn max_order(&self) -> usize {
        DirectExpansion1D::max_order(self)
    }
    fn evaluate_grid(&self, k: usize, xs: &[f64]) -> Result<Vec<f64>> {
        DirectExpansion1D::evaluate_grid(self, k, xs)
    }
}

impl Approximation2D for CompositeSeries2D {
    fn max_order(&self) -> usize {
        CompositeSeries2D::max_order(self)
    }
    fn evaluate_grid(&self, k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> Result<DenseMatrix> {
        CompositeSeries2D::evaluate_grid(self, k1, k2, xs1, xs2)
    }
}

impl Approximation2D for DirectExpansion2D {
    fn max_order(&self) -> usize {
        DirectExpansion2D::max_order(self)
    }
    fn evaluate_grid(&self, k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> Result<DenseMatrix> {
        DirectExpansion2D::evaluate_grid(self, k1, k2, xs1, xs2)
    }
}

/// One error index value; `Degenerate` when the normalizer vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorValue {
    Value(f64),
    Degenerate,
}

impl ErrorValue {
    pub fn value(self) -> Option<f64> {
        match self {
            ErrorValue::Value(v) => Some(v),
            ErrorValue::Degenerate => None,
        }
    }
}

/// Scientific notation with 6 significant digits and a signed two-digit
/// exponent, e.g. `2.06660E-04`.
pub fn format_value(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{v:.5E}");
    let (mant, exp) = s.split_once('E').expect("exponent present");
    let e: i32 = exp.parse().expect("integer exponent");
    let sign = if e < 0 { '-' } else { '+' };
    format!("{mant}E{sign}{:02}", e.abs())
}

impl fmt::Display for ErrorValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorValue::Value(v) => f.write_str(&format_value(*v)),
            ErrorValue::Degenerate => f.write_str("degenerate"),
        }
    }
}

impl Serialize for ErrorValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Raw error data of one derivative component.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentErrors {
    /// `max |u^(k)|` over the whole grid.
    pub u_max: f64,
    /// Sum of `|approx - exact|` per subset; the overall sum is the sum of the
    /// interior, boundary and corner sums.
    pub abs_sums: BTreeMap<Subset, f64>,
}

impl ComponentErrors {
    fn from_points(u_max: f64, points: impl Iterator<Item = (PointClass, f64)>) -> Self {
        let mut abs_sums = BTreeMap::new();
        for (class, e) in points {
            *abs_sums.entry(class.subset()).or_insert(0.0) += e;
        }
        let overall = [Subset::Interior, Subset::Boundary, Subset::Corner]
            .iter()
            .filter_map(|s| abs_sums.get(s))
            .sum();
        abs_sums.insert(Subset::Overall, overall);
        Self { u_max, abs_sums }
    }

    /// Mean absolute error over the subset divided by `u_max`.
    pub fn error(&self, subset: Subset, counts: &GridCounts) -> Result<f64> {
        if self.u_max < DEGENERATE_NORMALIZER {
            return Err(Error::DegenerateNormalizer(self.u_max));
        }
        let n = counts.of(subset);
        if n == 0 {
            return Err(Error::MissingComponent(format!("subset {subset} is empty")));
        }
        let sum = self.abs_sums.get(&subset).copied().unwrap_or(0.0);
        Ok(sum / (n as f64 * self.u_max))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AggregateMode {
    /// Mean over components with `k1 + k2 = p`.
    OrderP,
    /// Mean over components with `k1 + k2 <= p`.
    UpToP,
}

/// The components an aggregate averages over.
pub fn aggregate_indices(dims: usize, p: usize, mode: AggregateMode) -> Vec<MultiIndex> {
    let all = if dims == 1 {
        (0..=p).map(|k| MultiIndex::new(k, 0)).collect()
    } else {
        enumerate_graded(p)
    };
    match mode {
        AggregateMode::OrderP => all.into_iter().filter(|m| m.total() == p).collect(),
        AggregateMode::UpToP => all,
    }
}

/// Averages single-component errors; degenerate if any component is.
pub fn aggregate_errors(
    singles: &BTreeMap<MultiIndex, ErrorValue>,
    dims: usize,
    p: usize,
    mode: AggregateMode,
) -> Result<ErrorValue> {
    let idx = aggregate_indices(dims, p, mode);
    let mut sum = 0.0;
    let mut degenerate = false;
    for k in &idx {
        match singles.get(k) {
            None => return Err(Error::MissingComponent(k.to_string())),
            Some(ErrorValue::Degenerate) => degenerate = true,
            Some(ErrorValue::Value(v)) => sum += v,
        }
    }
    Ok(if degenerate { ErrorValue::Degenerate } else { ErrorValue::Value(sum / idx.len() as f64) })
}

/// All single-component errors of one approximation on one grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport {
    pub dims: usize,
    pub max_order: usize,
    pub counts: GridCounts,
    pub components: BTreeMap<MultiIndex, ComponentErrors>,
}

impl ErrorReport {
    pub fn subsets(&self) -> &'static [Subset] {
        if self.dims == 1 {
            &Subset::ONE_D
        } else {
            &Subset::TWO_D
        }
    }

    pub fn single(&self, k: MultiIndex, subset: Subset) -> Result<ErrorValue> {
        let c = self
            .components
            .get(&k)
            .ok_or_else(|| Error::MissingComponent(k.to_string()))?;
        match c.error(subset, &self.counts) {
            Ok(v) => Ok(ErrorValue::Value(v)),
            Err(Error::DegenerateNormalizer(_)) => Ok(ErrorValue::Degenerate),
            Err(e) => Err(e),
        }
    }

    pub fn singles(&self, subset: Subset) -> Result<BTreeMap<MultiIndex, ErrorValue>> {
        self.components.keys().map(|&k| Ok((k, self.single(k, subset)?))).collect()
    }

    pub fn aggregate(&self, p: usize, mode: AggregateMode, subset: Subset) -> Result<ErrorValue> {
        aggregate_errors(&self.singles(subset)?, self.dims, p, mode)
    }

    /// `|e|^p`.
    pub fn order_p(&self, p: usize, subset: Subset) -> Result<ErrorValue> {
        self.aggregate(p, AggregateMode::OrderP, subset)
    }

    /// `||e||^p`.
    pub fn up_to_p(&self, p: usize, subset: Subset) -> Result<ErrorValue> {
        self.aggregate(p, AggregateMode::UpToP, subset)
    }

    /// Every index in a fixed order: singles, then order-`p` (2D only), then
    /// up-to-`p` aggregates, each crossed with every subset.
    pub fn records(&self) -> Result<Vec<(String, Subset, ErrorValue)>> {
        let mut out = Vec::new();
        for &k in self.components.keys() {
            for &s in self.subsets() {
                out.push((single_name(self.dims, k), s, self.single(k, s)?));
            }
        }
        if self.dims == 2 {
            for p in 0..=self.max_order {
                for &s in self.subsets() {
                    out.push((format!("|e|^{p}"), s, self.order_p(p, s)?));
                }
            }
        }
        for p in 0..=self.max_order {
            for &s in self.subsets() {
                out.push((format!("||e||^{p}"), s, self.up_to_p(p, s)?));
            }
        }
        Ok(out)
    }
}

/// `e^(k)` in 1D, `e^(k1_k2)` in 2D.
pub fn single_name(dims: usize, k: MultiIndex) -> String {
    if dims == 1 {
        format!("e^({})", k.k1)
    } else {
        format!("e^({}_{})", k.k1, k.k2)
    }
}

fn component_1d(
    approx: &dyn Approximation1D,
    exact: &FunctionSpec1D,
    k: usize,
    grid: &SamplingGrid1D,
) -> Result<ComponentErrors> {
    let a = approx.evaluate_grid(k, &grid.xs)?;
    let e: Vec<f64> = grid.xs.iter().map(|&x| exact.eval(k, x)).collect();
    let u_max = e.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(ComponentErrors::from_points(
        u_max,
        (0..grid.xs.len()).map(|i| (grid.class(i), (a[i] - e[i]).abs())),
    ))
}

fn component_2d(
    approx: &dyn Approximation2D,
    exact: &FunctionSpec2D,
    k: MultiIndex,
    grid: &SamplingGrid2D,
) -> Result<ComponentErrors> {
    let a = approx.evaluate_grid(k.k1, k.k2, &grid.xs1, &grid.xs2)?;
    let e = DenseMatrix::from_fn(grid.xs1.len(), grid.xs2.len(), |i, j| {
        exact.eval(k.k1, k.k2, grid.xs1[i], grid.xs2[j])
    });
    let n2 = grid.xs2.len();
    Ok(ComponentErrors::from_points(
        e.max_abs(),
        (0..grid.xs1.len() * n2).map(|p| {
            let (i, j) = (p / n2, p % n2);
            (grid.class(i, j), (a[(i, j)] - e[(i, j)]).abs())
        }),
    ))
}

pub fn single_component_error_1d(
    approx: &dyn Approximation1D,
    exact: &FunctionSpec1D,
    k: usize,
    grid: &SamplingGrid1D,
    subset: Subset,
) -> Result<f64> {
    component_1d(approx, exact, k, grid)?.error(subset, &grid.counts())
}

pub fn single_component_error_2d(
    approx: &dyn Approximation2D,
    exact: &FunctionSpec2D,
    k: MultiIndex,
    grid: &SamplingGrid2D,
    subset: Subset,
) -> Result<f64> {
    component_2d(approx, exact, k, grid)?.error(subset, &grid.counts())
}

pub fn error_report_1d(
    approx: &dyn Approximation1D,
    exact: &FunctionSpec1D,
    grid: &SamplingGrid1D,
    max_order: usize,
) -> Result<ErrorReport> {
    let mut components = BTreeMap::new();
    for k in 0..=max_order {
        components.insert(MultiIndex::new(k, 0), component_1d(approx, exact, k, grid)?);
    }
    Ok(ErrorReport { dims: 1, max_order, counts: grid.counts(), components })
}

pub fn error_report_2d(
    approx: &dyn Approximation2D,
    exact: &FunctionSpec2D,
    grid: &SamplingGrid2D,
    max_order: usize,
) -> Result<ErrorReport> {
    let mut components = BTreeMap::new();
    for k in enumerate_graded(max_order) {
        components.insert(k, component_2d(approx, exact, k, grid)?);
    }
    Ok(ErrorReport { dims: 2, max_order, counts: grid.counts(), components })
}
