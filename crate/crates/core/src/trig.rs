//! Truncated trigonometric series and their termwise derivatives.

use std::f64::consts::PI;

use serde::Serialize;

use crate::linalg::DenseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Trig {
    Cos,
    Sin,
}

impl Trig {
    /// `d^k/dt^k f(t) = sign · g(t)`.
    pub fn derivative(self, k: usize) -> (f64, Trig) {
        match (self, k % 4) {
            (Trig::Cos, 0) => (1.0, Trig::Cos),
            (Trig::Cos, 1) => (-1.0, Trig::Sin),
            (Trig::Cos, 2) => (-1.0, Trig::Cos),
            (Trig::Cos, _) => (1.0, Trig::Sin),
            (Trig::Sin, 0) => (1.0, Trig::Sin),
            (Trig::Sin, 1) => (1.0, Trig::Cos),
            (Trig::Sin, 2) => (-1.0, Trig::Sin),
            (Trig::Sin, _) => (-1.0, Trig::Cos),
        }
    }

    /// The family obtained after differentiating `k` times.
    pub fn differentiated(self, k: usize) -> Trig {
        self.derivative(k).1
    }

    #[inline]
    pub fn apply(self, t: f64) -> f64 {
        match self {
            Trig::Cos => t.cos(),
            Trig::Sin => t.sin(),
        }
    }

    /// `d^k/dx^k f(alpha x)`.
    #[inline]
    pub fn eval_deriv(self, k: usize, alpha: f64, x: f64) -> f64 {
        let (sign, g) = self.derivative(k);
        sign * alpha.powi(k as i32) * g.apply(alpha * x)
    }
}

/// `mu_0 = 1/2`, `mu_m = 1` otherwise.
#[inline]
pub fn mu(m: usize) -> f64 {
    if m == 0 {
        0.5
    } else {
        1.0
    }
}

/// Wavenumber `m pi / a`.
#[inline]
pub fn wavenumber(m: usize, a: f64) -> f64 {
    m as f64 * PI / a
}

/// Rows: points; columns: modes `0..=m_max`; entries `mu_m d^k f(alpha_m x)`.
pub fn trig_matrix(f: Trig, k: usize, a: f64, m_max: usize, xs: &[f64]) -> DenseMatrix {
    DenseMatrix::from_fn(xs.len(), m_max + 1, |i, m| {
        if f == Trig::Sin && m == 0 {
            0.0
        } else {
            mu(m) * f.eval_deriv(k, wavenumber(m, a), xs[i])
        }
    })
}

/// A truncated series `sum_m mu_m (c_m cos(alpha_m x) + s_m sin(alpha_m x))`.
///
/// Both coefficient arrays are indexed by `m = 0..=m_max`; an absent family is
/// `None`. `sine[0]` is always zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrigSeries1D {
    pub a: f64,
    pub m_max: usize,
    pub cosine: Option<Vec<f64>>,
    pub sine: Option<Vec<f64>>,
}

impl TrigSeries1D {
    pub fn zero(a: f64, m_max: usize, families: &[Trig]) -> Self {
        let mut s = Self { a, m_max, cosine: None, sine: None };
        for f in families {
            *s.family_mut(*f) = Some(vec![0.0; m_max + 1]);
        }
        s
    }

    pub fn family(&self, f: Trig) -> Option<&Vec<f64>> {
        match f {
            Trig::Cos => self.cosine.as_ref(),
            Trig::Sin => self.sine.as_ref(),
        }
    }

    pub fn family_mut(&mut self, f: Trig) -> &mut Option<Vec<f64>> {
        match f {
            Trig::Cos => &mut self.cosine,
            Trig::Sin => &mut self.sine,
        }
    }

    pub fn families(&self) -> impl Iterator<Item = (Trig, &Vec<f64>)> {
        [Trig::Cos, Trig::Sin]
            .into_iter()
            .filter_map(move |f| self.family(f).map(|c| (f, c)))
    }

    pub fn eval(&self, k: usize, x: f64) -> f64 {
        let mut sum = 0.0;
        for (f, coeffs) in self.families() {
            for (m, &c) in coeffs.iter().enumerate() {
                if c != 0.0 && !(f == Trig::Sin && m == 0) {
                    sum += mu(m) * c * f.eval_deriv(k, wavenumber(m, self.a), x);
                }
            }
        }
        sum
    }

    pub fn max_abs(&self) -> f64 {
        self.families()
            .flat_map(|(_, c)| c.iter())
            .fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// One product block `sum_mn lambda_mn V_mn f1(alpha_m x1) f2(beta_n x2)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrigBlock {
    pub f1: Trig,
    pub f2: Trig,
    /// `(m_max + 1) x (n_max + 1)`.
    pub coeffs: DenseMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrigSeries2D {
    pub a: f64,
    pub b: f64,
    pub m_max: usize,
    pub n_max: usize,
    pub blocks: Vec<TrigBlock>,
}

impl TrigSeries2D {
    pub fn block(&self, f1: Trig, f2: Trig) -> Option<&TrigBlock> {
        self.blocks.iter().find(|b| b.f1 == f1 && b.f2 == f2)
    }

    /// Values on the tensor grid `xs1 x xs2`, row-major with `x1` as the row.
    pub fn eval_grid(&self, k1: usize, k2: usize, xs1: &[f64], xs2: &[f64]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(xs1.len(), xs2.len());
        for blk in &self.blocks {
            let t1 = trig_matrix(blk.f1, k1, self.a, self.m_max, xs1);
            let t2 = trig_matrix(blk.f2, k2, self.b, self.n_max, xs2);
            let part = t1
                .matmul(&blk.coeffs)
                .and_then(|tv| tv.matmul_transpose(&t2))
                .expect("shapes are consistent by construction");
            for i in 0..xs1.len() {
                for j in 0..xs2.len() {
                    out[(i, j)] += part[(i, j)];
                }
            }
        }
        out
    }

    pub fn eval(&self, k1: usize, k2: usize, x1: f64, x2: f64) -> f64 {
        self.eval_grid(k1, k2, &[x1], &[x2])[(0, 0)]
    }

    pub fn max_abs(&self) -> f64 {
        self.blocks.iter().fold(0.0, |m, b| m.max(b.coeffs.max_abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_cycles() {
        let (a, x) = (1.7, 0.3);
        for f in [Trig::Cos, Trig::Sin] {
            for k in 0..8 {
                let h = 1e-5;
                let fd = (f.eval_deriv(k, a, x + h) - f.eval_deriv(k, a, x - h)) / (2.0 * h);
                let exact = f.eval_deriv(k + 1, a, x);
                assert!((fd - exact).abs() < 1e-6 * a.powi(k as i32 + 1), "{f:?} {k}");
            }
        }
        assert_eq!(Trig::Cos.differentiated(1), Trig::Sin);
        assert_eq!(Trig::Sin.differentiated(3), Trig::Cos);
    }

    #[test]
    fn unit_cosine_mode_at_origin() {
        let mut s = TrigSeries1D::zero(1.0, 4, &[Trig::Cos]);
        s.cosine.as_mut().unwrap()[3] = 1.0;
        assert_eq!(s.eval(0, 0.0), 1.0);
        let z = TrigSeries1D::zero(1.0, 4, &[Trig::Cos, Trig::Sin]);
        assert_eq!(z.eval(2, 0.4), 0.0);
    }

    #[test]
    fn constant_term_is_halved() {
        let mut s = TrigSeries1D::zero(2.0, 2, &[Trig::Cos]);
        s.cosine.as_mut().unwrap()[0] = 1.0;
        assert_eq!(s.eval(0, 0.7), 0.5);
        assert_eq!(s.eval(1, 0.7), 0.0);
    }

    #[test]
    fn grid_matches_point() {
        let mut c = DenseMatrix::zeros(3, 4);
        c[(1, 2)] = 0.5;
        c[(0, 0)] = 2.0;
        let s = TrigSeries2D {
            a: 1.0,
            b: 2.0,
            m_max: 2,
            n_max: 3,
            blocks: vec![TrigBlock { f1: Trig::Cos, f2: Trig::Sin, coeffs: c }],
        };
        let (x1, x2) = (0.2, -0.7);
        let g = s.eval_grid(1, 1, &[0.0, x1], &[x2]);
        let expect = 0.5 * Trig::Cos.eval_deriv(1, PI, x1) * Trig::Sin.eval_deriv(1, PI, x2);
        assert!((g[(1, 0)] - expect).abs() < 1e-14);
        assert_eq!(s.eval(1, 1, x1, x2), g[(1, 0)]);
    }
}
