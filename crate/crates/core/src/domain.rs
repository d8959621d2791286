//! Domains, series kinds, multi-indices and user function specifications.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// The smoothness parameter `r`; derivatives up to order `2r` are approximated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SmoothnessOrder(usize);

impl SmoothnessOrder {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be at least 1".into()));
        }
        Ok(Self(r))
    }

    pub fn r(self) -> usize {
        self.0
    }

    pub fn two_r(self) -> usize {
        2 * self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DomainKind {
    /// `[-a, a]` (and `[-b, b]`).
    Symmetric,
    /// `[0, a]` (and `[0, b]`).
    Nonnegative,
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainKind::Symmetric => write!(f, "symmetric"),
            DomainKind::Nonnegative => write!(f, "nonnegative"),
        }
    }
}

fn check_extent(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} must be positive, got {v}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Domain1D {
    pub kind: DomainKind,
    pub a: f64,
}

impl Domain1D {
    pub fn new(kind: DomainKind, a: f64) -> Result<Self> {
        check_extent("a", a)?;
        Ok(Self { kind, a })
    }

    pub fn symmetric(a: f64) -> Result<Self> {
        Self::new(DomainKind::Symmetric, a)
    }

    pub fn nonnegative(a: f64) -> Result<Self> {
        Self::new(DomainKind::Nonnegative, a)
    }

    pub fn lo(&self) -> f64 {
        match self.kind {
            DomainKind::Symmetric => -self.a,
            DomainKind::Nonnegative => 0.0,
        }
    }

    pub fn hi(&self) -> f64 {
        self.a
    }

    pub fn length(&self) -> f64 {
        self.hi() - self.lo()
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo() && x <= self.hi()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Domain2D {
    pub kind: DomainKind,
    pub a: f64,
    pub b: f64,
}

impl Domain2D {
    pub fn new(kind: DomainKind, a: f64, b: f64) -> Result<Self> {
        check_extent("a", a)?;
        check_extent("b", b)?;
        Ok(Self { kind, a, b })
    }

    pub fn symmetric(a: f64, b: f64) -> Result<Self> {
        Self::new(DomainKind::Symmetric, a, b)
    }

    pub fn nonnegative(a: f64, b: f64) -> Result<Self> {
        Self::new(DomainKind::Nonnegative, a, b)
    }

    /// The domain's extent along `x1`.
    pub fn axis1(&self) -> Domain1D {
        Domain1D { kind: self.kind, a: self.a }
    }

    /// The domain's extent along `x2`.
    pub fn axis2(&self) -> Domain1D {
        Domain1D { kind: self.kind, a: self.b }
    }

    pub fn contains(&self, x1: f64, x2: f64) -> bool {
        self.axis1().contains(x1) && self.axis2().contains(x2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesKind1D {
    FullRange,
    HalfCosine,
    HalfSine,
}

impl SeriesKind1D {
    pub fn required_domain(self) -> DomainKind {
        match self {
            SeriesKind1D::FullRange => DomainKind::Symmetric,
            _ => DomainKind::Nonnegative,
        }
    }

    pub fn check_domain(self, domain: &Domain1D) -> Result<()> {
        if domain.kind == self.required_domain() {
            Ok(())
        } else {
            Err(Error::KindDomainMismatch {
                kind: self.to_string(),
                domain: domain.kind.to_string(),
            })
        }
    }
}

impl fmt::Display for SeriesKind1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesKind1D::FullRange => "full-range",
            SeriesKind1D::HalfCosine => "half-range-cosine",
            SeriesKind1D::HalfSine => "half-range-sine",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesKind2D {
    FullRange,
    CosCos,
    SinCos,
    CosSin,
    SinSin,
}

impl SeriesKind2D {
    pub fn required_domain(self) -> DomainKind {
        match self {
            SeriesKind2D::FullRange => DomainKind::Symmetric,
            _ => DomainKind::Nonnegative,
        }
    }

    pub fn is_supported(self) -> bool {
        matches!(self, SeriesKind2D::FullRange | SeriesKind2D::SinSin)
    }

    /// Fails with `UnsupportedKind` or `KindDomainMismatch`.
    pub fn check(self, domain: &Domain2D) -> Result<()> {
        if !self.is_supported() {
            return Err(Error::UnsupportedKind(self.to_string()));
        }
        if domain.kind != self.required_domain() {
            return Err(Error::KindDomainMismatch {
                kind: self.to_string(),
                domain: domain.kind.to_string(),
            });
        }
        Ok(())
    }

    /// The one-dimensional kind used along each edge direction.
    pub fn edge_kind(self) -> Result<SeriesKind1D> {
        match self {
            SeriesKind2D::FullRange => Ok(SeriesKind1D::FullRange),
            SeriesKind2D::SinSin => Ok(SeriesKind1D::HalfSine),
            other => Err(Error::UnsupportedKind(other.to_string())),
        }
    }
}

impl fmt::Display for SeriesKind2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesKind2D::FullRange => "full-range",
            SeriesKind2D::CosCos => "cosine-cosine",
            SeriesKind2D::SinCos => "sine-cosine",
            SeriesKind2D::CosSin => "cosine-sine",
            SeriesKind2D::SinSin => "sine-sine",
        };
        f.write_str(s)
    }
}

/// A pair of derivative orders `(k1, k2)`, or a pair of exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiIndex {
    pub k1: usize,
    pub k2: usize,
}

impl MultiIndex {
    pub const fn new(k1: usize, k2: usize) -> Self {
        Self { k1, k2 }
    }

    pub fn total(&self) -> usize {
        self.k1 + self.k2
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k1, self.k2)
    }
}

/// All pairs with `k1 + k2 <= max_total`, by ascending grade and descending `k1`.
pub fn enumerate_graded(max_total: usize) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity((max_total + 1) * (max_total + 2) / 2);
    for g in 0..=max_total {
        for k1 in (0..=g).rev() {
            out.push(MultiIndex::new(k1, g - k1));
        }
    }
    out
}

/// Exponent set of the sine-sine corner family, in graded order.
///
/// Complete polynomials of degree `2r - 1` plus the odd-odd pairs
/// `(j, 2r - j)`, `j = 1, 3, ..., 2r - 1`. For `r <= 3` this is the set
/// `j + l <= 2r - 1`, plus `(j, 2r - j)` and `(2r - l, l)` for
/// `1 <= j, l <= J`, plus `(r, r)` when `r` is odd, with `J = r/2` or
/// `(r - 1)/2`. For `r >= 4` that literal rule yields a singular corner
/// matrix, while the odd-odd completion stays nonsingular.
pub fn enumerate_sinsin_corner_set(r: SmoothnessOrder) -> Vec<MultiIndex> {
    let two_r = r.two_r();
    enumerate_graded(two_r)
        .into_iter()
        .filter(|m| m.total() < two_r || m.k1 % 2 == 1)
        .collect()
}

/// Exponent subsets used in the reproducing-property argument for the
/// full-range corner construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReproductionSets {
    /// `j + l <= 2r` (the complete polynomials of degree `2r`).
    pub omega: Vec<MultiIndex>,
    /// `j = 0` or `l = 0`: reproduced by the boundary and internal functions.
    pub omega0: Vec<MultiIndex>,
    /// `j, l >= 1`, `j + l <= 2r`: reproduced by the corner function.
    pub omega3: Vec<MultiIndex>,
    pub omega31: Vec<MultiIndex>,
    pub omega32: Vec<MultiIndex>,
    pub omega33: Vec<MultiIndex>,
    pub omega34: Vec<MultiIndex>,
}

/// Splits the degree-`2r` exponent set by parity of the corner blocks.
pub fn reproduction_sets(r: SmoothnessOrder) -> ReproductionSets {
    let two_r = r.two_r();
    let omega = enumerate_graded(two_r);
    let omega0 = omega.iter().copied().filter(|m| m.k1 == 0 || m.k2 == 0).collect();
    let omega3: Vec<MultiIndex> = omega.iter().copied().filter(|m| m.k1 >= 1 && m.k2 >= 1).collect();
    let pick = |p1: usize, p2: usize| -> Vec<MultiIndex> {
        omega3
            .iter()
            .copied()
            .filter(|m| m.k1 % 2 == p1 && m.k2 % 2 == p2)
            .collect()
    };
    ReproductionSets {
        omega31: pick(0, 0),
        omega32: pick(1, 0),
        omega33: pick(0, 1),
        omega34: pick(1, 1),
        omega,
        omega0,
        omega3,
    }
}

pub type Deriv1D = Arc<dyn Fn(usize, f64) -> f64 + Send + Sync>;
pub type Deriv2D = Arc<dyn Fn(usize, usize, f64, f64) -> f64 + Send + Sync>;

/// A function on an interval together with its derivatives.
///
/// `deriv(k, x)` must return the exact `k`-th derivative for `k <= max_order`.
#[derive(Clone)]
pub struct FunctionSpec1D {
    pub domain: Domain1D,
    pub max_order: usize,
    deriv: Deriv1D,
}

impl FunctionSpec1D {
    pub fn new<F>(domain: Domain1D, max_order: usize, deriv: F) -> Self
    where
        F: Fn(usize, f64) -> f64 + Send + Sync + 'static,
    {
        Self { domain, max_order, deriv: Arc::new(deriv) }
    }

    pub fn zero(domain: Domain1D) -> Self {
        Self::new(domain, usize::MAX, |_, _| 0.0)
    }

    #[inline]
    pub fn eval(&self, k: usize, x: f64) -> f64 {
        (self.deriv)(k, x)
    }

    pub fn require_order(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::OrderOutOfRange { order, max: self.max_order });
        }
        Ok(())
    }
}

impl fmt::Debug for FunctionSpec1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionSpec1D")
            .field("domain", &self.domain)
            .field("max_order", &self.max_order)
            .finish_non_exhaustive()
    }
}

/// A function on a rectangle together with its partial derivatives.
///
/// `deriv(k1, k2, x1, x2)` must be exact for `k1 + k2 <= max_order`.
#[derive(Clone)]
pub struct FunctionSpec2D {
    pub domain: Domain2D,
    pub max_order: usize,
    deriv: Deriv2D,
}

impl FunctionSpec2D {
    pub fn new<F>(domain: Domain2D, max_order: usize, deriv: F) -> Self
    where
        F: Fn(usize, usize, f64, f64) -> f64 + Send + Sync + 'static,
    {
        Self { domain, max_order, deriv: Arc::new(deriv) }
    }

    pub fn zero(domain: Domain2D) -> Self {
        Self::new(domain, usize::MAX, |_, _, _, _| 0.0)
    }

    #[inline]
    pub fn eval(&self, k1: usize, k2: usize, x1: f64, x2: f64) -> f64 {
        (self.deriv)(k1, k2, x1, x2)
    }

    pub fn require_order(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::OrderOutOfRange { order, max: self.max_order });
        }
        Ok(())
    }
}

impl fmt::Debug for FunctionSpec2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionSpec2D")
            .field("domain", &self.domain)
            .field("max_order", &self.max_order)
            .finish_non_exhaustive()
    }
}
