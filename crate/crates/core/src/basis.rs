//! Supplementary function families, constraint rows, constraint matrices and
//! the basis operators built from them.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::domain::{
    enumerate_graded, enumerate_sinsin_corner_set, MultiIndex, SeriesKind1D, SeriesKind2D,
    SmoothnessOrder,
};
use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, Lu, SolveReport};

/// An ordered list of smooth functions of one variable with exact derivatives.
pub trait SupplementaryFamily1D: Send + Sync + fmt::Debug {
    fn size(&self) -> usize;
    /// `k`-th derivative of member `j` at `x`.
    fn eval(&self, j: usize, k: usize, x: f64) -> f64;
    fn label(&self) -> String;
}

/// An ordered list of smooth functions of two variables with exact partials.
pub trait SupplementaryFamily2D: Send + Sync + fmt::Debug {
    fn size(&self) -> usize;
    fn eval(&self, j: usize, k1: usize, k2: usize, x1: f64, x2: f64) -> f64;
    fn label(&self) -> String;
}

/// `d^k/dx^k (x/s)^e`.
pub fn monomial_deriv(e: usize, k: usize, s: f64, x: f64) -> f64 {
    if k > e {
        return 0.0;
    }
    let mut falling = 1.0;
    for i in 0..k {
        falling *= (e - i) as f64;
    }
    falling * (x / s).powi((e - k) as i32) / s.powi(k as i32)
}

/// Monomials `(x/s)^e` for a list of exponents.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonomialFamily1D {
    pub scale: f64,
    pub exponents: Vec<usize>,
}

impl SupplementaryFamily1D for MonomialFamily1D {
    fn size(&self) -> usize {
        self.exponents.len()
    }

    fn eval(&self, j: usize, k: usize, x: f64) -> f64 {
        monomial_deriv(self.exponents[j], k, self.scale, x)
    }

    fn label(&self) -> String {
        let parts: Vec<String> = self.exponents.iter().map(|e| format!("(x/{})^{e}", self.scale)).collect();
        parts.join(", ")
    }
}

/// Products `(x1/a)^j (x2/b)^l`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonomialFamily2D {
    pub a: f64,
    pub b: f64,
    pub exponents: Vec<MultiIndex>,
}

impl SupplementaryFamily2D for MonomialFamily2D {
    fn size(&self) -> usize {
        self.exponents.len()
    }

    fn eval(&self, j: usize, k1: usize, k2: usize, x1: f64, x2: f64) -> f64 {
        let e = self.exponents[j];
        let d1 = monomial_deriv(e.k1, k1, self.a, x1);
        if d1 == 0.0 {
            return 0.0;
        }
        d1 * monomial_deriv(e.k2, k2, self.b, x2)
    }

    fn label(&self) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|e| format!("(x1/{})^{}(x2/{})^{}", self.a, e.k1, self.b, e.k2))
            .collect();
        parts.join(", ")
    }
}

/// Default polynomial family for a one-dimensional kind.
///
/// Full-range and half-range cosine: `(x/a)^j`, `j = 1..=2r`.
/// Half-range sine: `(x/a)^(j-1)`, `j = 1..=2r`.
pub fn polynomial_family_1d(kind: SeriesKind1D, r: SmoothnessOrder, a: f64) -> MonomialFamily1D {
    let two_r = r.two_r();
    let exponents = match kind {
        SeriesKind1D::FullRange | SeriesKind1D::HalfCosine => (1..=two_r).collect(),
        SeriesKind1D::HalfSine => (0..two_r).collect(),
    };
    MonomialFamily1D { scale: a, exponents }
}

/// Default polynomial corner family.
///
/// Full-range: four parity blocks, exponents `(2j+2, 2l+2)`, `(2j+1, 2l+2)`,
/// `(2j+2, 2l+1)` over `j + l <= r - 2` and `(2j+1, 2l+1)` over
/// `j + l <= r - 1`. Sine-sine: the set from [`enumerate_sinsin_corner_set`].
pub fn polynomial_family_corner(
    kind: SeriesKind2D,
    r: SmoothnessOrder,
    a: f64,
    b: f64,
) -> Result<MonomialFamily2D> {
    let exponents = match kind {
        SeriesKind2D::FullRange => {
            let inner = if r.r() >= 2 { enumerate_graded(r.r() - 2) } else { Vec::new() };
            let outer = enumerate_graded(r.r() - 1);
            let map = |set: &[MultiIndex], o1: usize, o2: usize| -> Vec<MultiIndex> {
                set.iter().map(|m| MultiIndex::new(2 * m.k1 + o1, 2 * m.k2 + o2)).collect()
            };
            let mut e = map(&inner, 2, 2);
            e.extend(map(&inner, 1, 2));
            e.extend(map(&inner, 2, 1));
            e.extend(map(&outer, 1, 1));
            e
        }
        SeriesKind2D::SinSin => enumerate_sinsin_corner_set(r),
        other => return Err(Error::UnsupportedKind(other.to_string())),
    };
    Ok(MonomialFamily2D { a, b, exponents })
}

/// A linear functional on derivative values of a function of one variable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Constraint1D {
    /// `f^(k)(a) - f^(k)(-a)`.
    Jump { k: usize, a: f64 },
    /// `f^(k)(x)`.
    Value { k: usize, x: f64 },
}

impl Constraint1D {
    pub fn order(&self) -> usize {
        match *self {
            Constraint1D::Jump { k, .. } | Constraint1D::Value { k, .. } => k,
        }
    }

    /// `(weight, k, x)` triples whose weighted sum defines the functional.
    pub fn terms(&self) -> Vec<(f64, usize, f64)> {
        match *self {
            Constraint1D::Jump { k, a } => vec![(1.0, k, a), (-1.0, k, -a)],
            Constraint1D::Value { k, x } => vec![(1.0, k, x)],
        }
    }

    pub fn apply(&self, f: impl Fn(usize, f64) -> f64) -> f64 {
        match *self {
            Constraint1D::Jump { k, a } => f(k, a) - f(k, -a),
            Constraint1D::Value { k, x } => f(k, x),
        }
    }

    /// Sum of the magnitudes of the terms, a bound on cancellation.
    pub fn magnitude(&self, f: impl Fn(usize, f64) -> f64) -> f64 {
        self.terms().iter().map(|&(w, k, x)| (w * f(k, x)).abs()).sum()
    }

    pub fn label(&self) -> String {
        match *self {
            Constraint1D::Jump { k, .. } => format!("u^({k})(a)-u^({k})(-a)"),
            Constraint1D::Value { k, x } if x == 0.0 => format!("u^({k})(0)"),
            Constraint1D::Value { k, .. } => format!("u^({k})(a)"),
        }
    }
}

/// Boundary constraint rows of a one-dimensional kind on `[-a, a]` or `[0, a]`.
///
/// Full-range: jumps for `k = 0..2r-1`. Half-range sine: even `k <= 2r-2`;
/// half-range cosine: odd `k <= 2r-1`; values at `x = a` first, then `x = 0`.
pub fn boundary_constraints_1d(kind: SeriesKind1D, r: SmoothnessOrder, a: f64) -> Vec<Constraint1D> {
    let two_r = r.two_r();
    let orders: Vec<usize> = match kind {
        SeriesKind1D::FullRange => return (0..two_r).map(|k| Constraint1D::Jump { k, a }).collect(),
        SeriesKind1D::HalfSine => (0..two_r).step_by(2).collect(),
        SeriesKind1D::HalfCosine => (1..two_r).step_by(2).collect(),
    };
    let mut out: Vec<Constraint1D> = orders.iter().map(|&k| Constraint1D::Value { k, x: a }).collect();
    out.extend(orders.iter().map(|&k| Constraint1D::Value { k, x: 0.0 }));
    out
}

/// A linear functional on partial-derivative values at the corners.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum CornerConstraint {
    /// `f(a,b) - f(a,-b) - f(-a,b) + f(-a,-b)` applied to `f^(k1,k2)`.
    AlternatingSum { k: MultiIndex, a: f64, b: f64 },
    /// `f^(k1,k2)(x1, x2)`.
    Value { k: MultiIndex, x1: f64, x2: f64 },
}

impl CornerConstraint {
    pub fn order(&self) -> MultiIndex {
        match *self {
            CornerConstraint::AlternatingSum { k, .. } | CornerConstraint::Value { k, .. } => k,
        }
    }

    pub fn terms(&self) -> Vec<(f64, MultiIndex, f64, f64)> {
        match *self {
            CornerConstraint::AlternatingSum { k, a, b } => vec![
                (1.0, k, a, b),
                (-1.0, k, a, -b),
                (-1.0, k, -a, b),
                (1.0, k, -a, -b),
            ],
            CornerConstraint::Value { k, x1, x2 } => vec![(1.0, k, x1, x2)],
        }
    }

    pub fn apply(&self, f: impl Fn(usize, usize, f64, f64) -> f64) -> f64 {
        self.terms().iter().map(|&(w, k, x1, x2)| w * f(k.k1, k.k2, x1, x2)).sum()
    }

    pub fn label(&self) -> String {
        match *self {
            CornerConstraint::AlternatingSum { k, .. } => {
                format!("D[u^({},{})](a,b)", k.k1, k.k2)
            }
            CornerConstraint::Value { k, x1, x2 } => {
                let c1 = if x1 == 0.0 { "0" } else { "a" };
                let c2 = if x2 == 0.0 { "0" } else { "b" };
                format!("u^({},{})({c1},{c2})", k.k1, k.k2)
            }
        }
    }
}

/// Corner constraint rows for a two-dimensional kind.
///
/// Full-range: alternating four-corner sums for `k1 + k2 <= 2r - 2` in graded
/// order. Sine-sine: values of even-even derivatives with `k1 + k2 <= 2r - 2`,
/// corner-major over `(a,b), (a,0), (0,b), (0,0)`.
pub fn corner_constraints(
    kind: SeriesKind2D,
    r: SmoothnessOrder,
    a: f64,
    b: f64,
) -> Result<Vec<CornerConstraint>> {
    let graded = enumerate_graded(r.two_r() - 2);
    match kind {
        SeriesKind2D::FullRange => Ok(graded
            .into_iter()
            .map(|k| CornerConstraint::AlternatingSum { k, a, b })
            .collect()),
        SeriesKind2D::SinSin => {
            let even: Vec<MultiIndex> =
                graded.into_iter().filter(|m| m.k1 % 2 == 0 && m.k2 % 2 == 0).collect();
            let corners = [(a, b), (a, 0.0), (0.0, b), (0.0, 0.0)];
            Ok(corners
                .iter()
                .flat_map(|&(x1, x2)| even.iter().map(move |&k| CornerConstraint::Value { k, x1, x2 }))
                .collect())
        }
        other => Err(Error::UnsupportedKind(other.to_string())),
    }
}

/// Constraint matrix with rows = constraints applied to the family members.
pub fn constraint_matrix_1d(
    family: &dyn SupplementaryFamily1D,
    constraints: &[Constraint1D],
) -> Result<DenseMatrix> {
    if family.size() != constraints.len() {
        return Err(Error::DimensionMismatch { expected: constraints.len(), got: family.size() });
    }
    Ok(DenseMatrix::from_fn(constraints.len(), family.size(), |i, j| {
        constraints[i].apply(|k, x| family.eval(j, k, x))
    }))
}

pub fn constraint_matrix_2d(
    family: &dyn SupplementaryFamily2D,
    constraints: &[CornerConstraint],
) -> Result<DenseMatrix> {
    if family.size() != constraints.len() {
        return Err(Error::DimensionMismatch { expected: constraints.len(), got: family.size() });
    }
    Ok(DenseMatrix::from_fn(constraints.len(), family.size(), |i, j| {
        constraints[i].apply(|k1, k2, x1, x2| family.eval(j, k1, k2, x1, x2))
    }))
}

pub fn build_boundary_matrix_1d(
    family: &dyn SupplementaryFamily1D,
    kind: SeriesKind1D,
    r: SmoothnessOrder,
    a: f64,
) -> Result<DenseMatrix> {
    constraint_matrix_1d(family, &boundary_constraints_1d(kind, r, a))
}

pub fn build_corner_matrix(
    family: &dyn SupplementaryFamily2D,
    kind: SeriesKind2D,
    r: SmoothnessOrder,
    a: f64,
    b: f64,
) -> Result<DenseMatrix> {
    constraint_matrix_2d(family, &corner_constraints(kind, r, a, b)?)
}

/// A family together with its factored constraint matrix.
///
/// The basis vector is `Phi(x) = R^-T p(x)`; a boundary vector `q` maps to
/// `sum_j (R^-1 q)_j p_j(x)`.
#[derive(Clone)]
pub struct BasisOperator1D {
    family: Arc<dyn SupplementaryFamily1D>,
    r: DenseMatrix,
    lu: Lu,
}

impl BasisOperator1D {
    pub fn new(family: Arc<dyn SupplementaryFamily1D>, r: DenseMatrix) -> Result<Self> {
        if r.rows() != family.size() {
            return Err(Error::DimensionMismatch { expected: family.size(), got: r.rows() });
        }
        let lu = Lu::factor(&r)?;
        Ok(Self { family, r, lu })
    }

    pub fn family(&self) -> &dyn SupplementaryFamily1D {
        self.family.as_ref()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.r
    }

    pub fn condition(&self) -> f64 {
        self.lu.condition_estimate()
    }

    pub fn size(&self) -> usize {
        self.family.size()
    }

    pub fn p(&self, k: usize, x: f64) -> Vec<f64> {
        (0..self.size()).map(|j| self.family.eval(j, k, x)).collect()
    }

    /// `Phi^(k)(x)`.
    pub fn phi(&self, k: usize, x: f64) -> Vec<f64> {
        self.lu.solve_transpose(&self.p(k, x))
    }

    /// Family coefficients `R^-1 q`.
    pub fn solve(&self, q: &[f64]) -> Result<SolveReport> {
        self.lu.solve(q)
    }

    pub fn solve_multi(&self, qs: &[Vec<f64>]) -> Result<Vec<SolveReport>> {
        qs.iter().map(|q| self.lu.solve(q)).collect()
    }

    /// `sum_j coeffs_j p_j^(k)(x)`.
    pub fn combine(&self, coeffs: &[f64], k: usize, x: f64) -> f64 {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(j, c)| c * self.family.eval(j, k, x))
            .sum()
    }

    /// `sum_j |coeffs_j p_j^(k)(x)|`, the size of the terms before they cancel.
    pub fn combine_magnitude(&self, coeffs: &[f64], k: usize, x: f64) -> f64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (c * self.family.eval(j, k, x)).abs())
            .sum()
    }
}

impl fmt::Debug for BasisOperator1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasisOperator1D")
            .field("family", &self.family.label())
            .field("condition", &self.condition())
            .finish()
    }
}

#[derive(Clone)]
pub struct BasisOperator2D {
    family: Arc<dyn SupplementaryFamily2D>,
    r: DenseMatrix,
    lu: Lu,
}

impl BasisOperator2D {
    pub fn new(family: Arc<dyn SupplementaryFamily2D>, r: DenseMatrix) -> Result<Self> {
        if r.rows() != family.size() {
            return Err(Error::DimensionMismatch { expected: family.size(), got: r.rows() });
        }
        let lu = Lu::factor(&r)?;
        Ok(Self { family, r, lu })
    }

    pub fn family(&self) -> &dyn SupplementaryFamily2D {
        self.family.as_ref()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.r
    }

    pub fn condition(&self) -> f64 {
        self.lu.condition_estimate()
    }

    pub fn size(&self) -> usize {
        self.family.size()
    }

    pub fn p(&self, k1: usize, k2: usize, x1: f64, x2: f64) -> Vec<f64> {
        (0..self.size()).map(|j| self.family.eval(j, k1, k2, x1, x2)).collect()
    }

    pub fn phi(&self, k1: usize, k2: usize, x1: f64, x2: f64) -> Vec<f64> {
        self.lu.solve_transpose(&self.p(k1, k2, x1, x2))
    }

    pub fn solve(&self, q: &[f64]) -> Result<SolveReport> {
        self.lu.solve(q)
    }

    pub fn combine(&self, coeffs: &[f64], k1: usize, k2: usize, x1: f64, x2: f64) -> f64 {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(j, c)| c * self.family.eval(j, k1, k2, x1, x2))
            .sum()
    }

    pub fn combine_magnitude(&self, coeffs: &[f64], k1: usize, k2: usize, x1: f64, x2: f64) -> f64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (c * self.family.eval(j, k1, k2, x1, x2)).abs())
            .sum()
    }
}

impl fmt::Debug for BasisOperator2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasisOperator2D")
            .field("family", &self.family.label())
            .field("condition", &self.condition())
            .finish()
    }
}

/// Basis operator of the default polynomial family for a one-dimensional kind.
pub fn default_basis_1d(kind: SeriesKind1D, r: SmoothnessOrder, a: f64) -> Result<BasisOperator1D> {
    let family = polynomial_family_1d(kind, r, a);
    let m = build_boundary_matrix_1d(&family, kind, r, a)?;
    BasisOperator1D::new(Arc::new(family), m)
}

pub fn default_corner_basis(
    kind: SeriesKind2D,
    r: SmoothnessOrder,
    a: f64,
    b: f64,
) -> Result<BasisOperator2D> {
    let family = polynomial_family_corner(kind, r, a, b)?;
    let m = build_corner_matrix(&family, kind, r, a, b)?;
    BasisOperator2D::new(Arc::new(family), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> SmoothnessOrder {
        SmoothnessOrder::new(n).unwrap()
    }

    const KINDS_1D: [SeriesKind1D; 3] =
        [SeriesKind1D::FullRange, SeriesKind1D::HalfCosine, SeriesKind1D::HalfSine];

    #[test]
    fn family_members() {
        let f = polynomial_family_1d(SeriesKind1D::FullRange, r(3), 1.0);
        assert_eq!(f.eval(1, 0, 0.5), 0.25);
        let h = polynomial_family_1d(SeriesKind1D::HalfSine, r(3), 1.0);
        assert_eq!(h.eval(0, 0, 0.37), 1.0);
        let g = polynomial_family_1d(SeriesKind1D::FullRange, r(1), 2.0);
        assert!((g.eval(1, 1, 2.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn small_boundary_matrices() {
        let f = polynomial_family_1d(SeriesKind1D::FullRange, r(1), 1.0);
        let m = build_boundary_matrix_1d(&f, SeriesKind1D::FullRange, r(1), 1.0).unwrap();
        assert_eq!(m, DenseMatrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 4.0]]).unwrap());
        let h = polynomial_family_1d(SeriesKind1D::HalfSine, r(1), 1.0);
        let m = build_boundary_matrix_1d(&h, SeriesKind1D::HalfSine, r(1), 1.0).unwrap();
        assert_eq!(m, DenseMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 0.0]]).unwrap());
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn cubic_from_boundary_jumps() {
        let b = default_basis_1d(SeriesKind1D::FullRange, r(3), 1.0).unwrap();
        let a1 = b.solve(&[0.0, -2.0, 12.0, 0.0, 0.0, 0.0]).unwrap().solution;
        let expect = [-1.0, -0.5, 1.0, 0.0, 0.0, 0.0];
        for (x, y) in a1.iter().zip(expect) {
            assert!((x - y).abs() < 1e-12, "{a1:?}");
        }
        let q = [0.0, -2.0, 12.0, 0.0, 0.0, 0.0];
        let phi = b.phi(0, 0.3);
        let v: f64 = phi.iter().zip(q).map(|(p, q)| p * q).sum();
        assert!((v + 0.318).abs() < 1e-12);
    }

    #[test]
    fn corner_family_sizes() {
        let f = polynomial_family_corner(SeriesKind2D::FullRange, r(3), 1.0, 1.0).unwrap();
        assert_eq!(f.size(), 15);
        let s = polynomial_family_corner(SeriesKind2D::SinSin, r(3), 1.0, 1.0).unwrap();
        assert_eq!(s.size(), 24);
        let one = polynomial_family_corner(SeriesKind2D::FullRange, r(1), 1.0, 1.0).unwrap();
        assert_eq!(one.exponents, vec![MultiIndex::new(1, 1)]);
        let m = build_corner_matrix(&one, SeriesKind2D::FullRange, r(1), 1.0, 1.0).unwrap();
        assert_eq!(m.as_slice(), &[4.0]);
        assert!(matches!(
            polynomial_family_corner(SeriesKind2D::CosSin, r(3), 1.0, 1.0),
            Err(Error::UnsupportedKind(_))
        ));
        let two = default_corner_basis(SeriesKind2D::FullRange, r(2), 1.0, 1.0).unwrap();
        assert_eq!(two.size(), 6);
        assert!(two.condition() < 1e8);
    }

    #[test]
    fn identity_operator_returns_family() {
        let f = polynomial_family_1d(SeriesKind1D::FullRange, r(1), 1.0);
        let op = BasisOperator1D::new(Arc::new(f.clone()), DenseMatrix::identity(2)).unwrap();
        assert_eq!(op.phi(1, 0.4), vec![f.eval(0, 1, 0.4), f.eval(1, 1, 0.4)]);
    }

    #[test]
    fn interpolation_property_1d() {
        for n in 1..=4 {
            for kind in KINDS_1D {
                let op = default_basis_1d(kind, r(n), 1.3).unwrap();
                let cons = boundary_constraints_1d(kind, r(n), 1.3);
                // Row i of the constraints applied to Phi_j gives delta_ij.
                for (i, c) in cons.iter().enumerate() {
                    let applied: Vec<f64> = {
                        let mut acc = vec![0.0; op.size()];
                        for (w, k, x) in c.terms() {
                            for (a, p) in acc.iter_mut().zip(op.phi(k, x)) {
                                *a += w * p;
                            }
                        }
                        acc
                    };
                    for (j, v) in applied.iter().enumerate() {
                        let e = if i == j { 1.0 } else { 0.0 };
                        assert!((v - e).abs() < 1e-9, "{kind} r={n} ({i},{j}) {v}");
                    }
                }
                assert!(op.condition() < 1e10, "{kind} r={n} {}", op.condition());
            }
        }
    }

    #[test]
    fn interpolation_property_corner() {
        for n in 1..=4 {
            for kind in [SeriesKind2D::FullRange, SeriesKind2D::SinSin] {
                let op = default_corner_basis(kind, r(n), 1.0, 0.7).unwrap();
                let cons = corner_constraints(kind, r(n), 1.0, 0.7).unwrap();
                for (i, c) in cons.iter().enumerate() {
                    let mut acc = vec![0.0; op.size()];
                    for (w, k, x1, x2) in c.terms() {
                        for (a, p) in acc.iter_mut().zip(op.phi(k.k1, k.k2, x1, x2)) {
                            *a += w * p;
                        }
                    }
                    for (j, v) in acc.iter().enumerate() {
                        let e = if i == j { 1.0 } else { 0.0 };
                        assert!((v - e).abs() < 1e-9, "{kind} r={n} ({i},{j}) {v}");
                    }
                }
                assert!(op.condition() < 1e10, "{kind} r={n} {}", op.condition());
            }
        }
    }

    #[test]
    fn family_derivatives_match_finite_differences() {
        let h = 1e-6;
        for kind in KINDS_1D {
            let f = polynomial_family_1d(kind, r(3), 1.5);
            for j in 0..f.size() {
                for k in 1..=6 {
                    let x = 0.77;
                    let fd = (f.eval(j, k - 1, x + h) - f.eval(j, k - 1, x - h)) / (2.0 * h);
                    let ex = f.eval(j, k, x);
                    assert!((fd - ex).abs() <= 1e-6 * (1.0 + ex.abs()), "{kind} j={j} k={k}");
                }
            }
        }
        let c = polynomial_family_corner(SeriesKind2D::SinSin, r(3), 1.0, 2.0).unwrap();
        for j in 0..c.size() {
            let (x1, x2) = (0.4, 1.1);
            let fd = (c.eval(j, 0, 1, x1, x2 + h) - c.eval(j, 0, 1, x1, x2 - h)) / (2.0 * h);
            let ex = c.eval(j, 0, 2, x1, x2);
            assert!((fd - ex).abs() <= 1e-6 * (1.0 + ex.abs()));
        }
    }

    #[test]
    fn constraint_labels_and_counts() {
        let hs = boundary_constraints_1d(SeriesKind1D::HalfSine, r(3), 1.0);
        let labels: Vec<String> = hs.iter().map(Constraint1D::label).collect();
        assert_eq!(labels, ["u^(0)(a)", "u^(2)(a)", "u^(4)(a)", "u^(0)(0)", "u^(2)(0)", "u^(4)(0)"]);
        let hc = boundary_constraints_1d(SeriesKind1D::HalfCosine, r(3), 1.0);
        assert_eq!(hc.iter().map(Constraint1D::order).collect::<Vec<_>>(), vec![1, 3, 5, 1, 3, 5]);
        let ss = corner_constraints(SeriesKind2D::SinSin, r(3), 1.0, 1.0).unwrap();
        assert_eq!(ss.len(), 24);
        assert_eq!(ss[6].label(), "u^(0,0)(a,0)");
    }
}
