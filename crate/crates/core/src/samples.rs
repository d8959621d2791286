//! The eight benchmark functions with exact derivatives of every order.

use std::f64::consts::FRAC_PI_2;

use crate::domain::{Domain1D, Domain2D, FunctionSpec1D, FunctionSpec2D, SeriesKind1D, SeriesKind2D};
use crate::error::{Error, Result};
use crate::trig::Trig;

#[derive(Debug, Clone)]
pub enum SampleFunction {
    OneD { spec: FunctionSpec1D, kind: SeriesKind1D },
    TwoD { spec: FunctionSpec2D, kind: SeriesKind2D },
}

#[derive(Debug, Clone)]
pub struct SampleCase {
    pub id: u32,
    pub description: &'static str,
    pub function: SampleFunction,
}

impl SampleCase {
    pub fn dims(&self) -> usize {
        match self.function {
            SampleFunction::OneD { .. } => 1,
            SampleFunction::TwoD { .. } => 2,
        }
    }

    pub fn kind_name(&self) -> String {
        match &self.function {
            SampleFunction::OneD { kind, .. } => kind.to_string(),
            SampleFunction::TwoD { kind, .. } => kind.to_string(),
        }
    }
}

/// `1/2 - t - t^2/2 + t^3` and its derivatives in `t`.
pub fn cubic(k: usize, t: f64) -> f64 {
    match k {
        0 => 0.5 - t - 0.5 * t * t + t * t * t,
        1 => -1.0 - t + 3.0 * t * t,
        2 => -1.0 + 6.0 * t,
        3 => 6.0,
        _ => 0.0,
    }
}

fn scaled_cubic(k: usize, x: f64, a: f64) -> f64 {
    cubic(k, x / a) / a.powi(k as i32)
}

pub const IDS: [u32; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

pub fn get_sample(id: u32) -> Result<SampleCase> {
    get_sample_scaled(id, 1.0, 1.0)
}

/// The sample on a domain with half-widths (or lengths) `a` and `b`.
pub fn get_sample_scaled(id: u32, a: f64, b: f64) -> Result<SampleCase> {
    let alpha0 = FRAC_PI_2 / a;
    let beta0 = FRAC_PI_2 / b;
    let one_d = |domain: Domain1D, kind, f: Box<dyn Fn(usize, f64) -> f64 + Send + Sync>| {
        SampleFunction::OneD { spec: FunctionSpec1D::new(domain, usize::MAX, f), kind }
    };
    type F2 = Box<dyn Fn(usize, usize, f64, f64) -> f64 + Send + Sync>;
    let two_d = |domain: Domain2D, kind, f: F2| SampleFunction::TwoD {
        spec: FunctionSpec2D::new(domain, usize::MAX, f),
        kind,
    };
    let cubic_1d: Box<dyn Fn(usize, f64) -> f64 + Send + Sync> = Box::new(move |k, x| scaled_cubic(k, x, a));
    let cubic_2d: F2 = Box::new(move |k1, k2, x1, x2| scaled_cubic(k1, x1, a) * scaled_cubic(k2, x2, b));
    let trig_2d: F2 = Box::new(move |k1, k2, x1, x2| {
        Trig::Sin.eval_deriv(k1, alpha0, x1) * Trig::Cos.eval_deriv(k2, beta0, x2)
    });
    let (description, function) = match id {
        1 => ("cubic on [-a,a]", one_d(Domain1D::symmetric(a)?, SeriesKind1D::FullRange, cubic_1d)),
        2 => (
            "sin(pi x/2a) on [-a,a]",
            one_d(
                Domain1D::symmetric(a)?,
                SeriesKind1D::FullRange,
                Box::new(move |k, x| Trig::Sin.eval_deriv(k, alpha0, x)),
            ),
        ),
        3 => ("cubic on [0,a]", one_d(Domain1D::nonnegative(a)?, SeriesKind1D::HalfSine, cubic_1d)),
        4 => (
            "cos(pi x/2a) on [0,a]",
            one_d(
                Domain1D::nonnegative(a)?,
                SeriesKind1D::HalfSine,
                Box::new(move |k, x| Trig::Cos.eval_deriv(k, alpha0, x)),
            ),
        ),
        5 => ("cubic x cubic on [-a,a]x[-b,b]", two_d(Domain2D::symmetric(a, b)?, SeriesKind2D::FullRange, cubic_2d)),
        6 => (
            "sin(pi x1/2a) cos(pi x2/2b) on [-a,a]x[-b,b]",
            two_d(Domain2D::symmetric(a, b)?, SeriesKind2D::FullRange, trig_2d),
        ),
        7 => ("cubic x cubic on [0,a]x[0,b]", two_d(Domain2D::nonnegative(a, b)?, SeriesKind2D::SinSin, cubic_2d)),
        8 => (
            "sin(pi x1/2a) cos(pi x2/2b) on [0,a]x[0,b]",
            two_d(Domain2D::nonnegative(a, b)?, SeriesKind2D::SinSin, trig_2d),
        ),
        other => return Err(Error::UnknownSample(other.to_string())),
    };
    Ok(SampleCase { id, description, function })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_values() {
        let SampleFunction::OneD { spec, .. } = get_sample(1).unwrap().function else { panic!() };
        assert_eq!(spec.eval(0, 0.0), 0.5);
        let SampleFunction::OneD { spec, .. } = get_sample(2).unwrap().function else { panic!() };
        assert!((spec.eval(0, 1.0) - 1.0).abs() < 1e-15);
        let SampleFunction::TwoD { spec, .. } = get_sample(5).unwrap().function else { panic!() };
        assert_eq!(spec.eval(1, 1, 1.0, 1.0), 1.0);
        assert!(matches!(get_sample(9), Err(Error::UnknownSample(_))));
        assert!(matches!(get_sample(0), Err(Error::UnknownSample(_))));
    }

    #[test]
    fn kinds() {
        let dims: Vec<usize> = IDS.iter().map(|&i| get_sample(i).unwrap().dims()).collect();
        assert_eq!(dims, vec![1, 1, 1, 1, 2, 2, 2, 2]);
        assert_eq!(get_sample(3).unwrap().kind_name(), "half-range-sine");
        assert_eq!(get_sample(7).unwrap().kind_name(), "sine-sine");
    }
}
