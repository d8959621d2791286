mod common;

use common::*;
use composite_fourier::prelude::*;
use composite_fourier::report::{convergence_records, error_report, Method};
use composite_fourier::samples::{get_sample, get_sample_scaled, SampleCase};
use proptest::prelude::*;

fn poly_1d(domain: Domain1D, coeffs: Vec<f64>) -> FunctionSpec1D {
    FunctionSpec1D::new(domain, usize::MAX, move |k, x| {
        coeffs.iter().enumerate().map(|(e, c)| c * mono(e, k, x)).sum()
    })
}

fn max_error_1d(s: &CompositeSeries1D, f: &FunctionSpec1D) -> f64 {
    let d = f.domain;
    let mut worst = 0.0f64;
    for x in linspace(d.lo(), d.hi(), 41) {
        for k in 0..=s.max_order() {
            worst = worst.max((s.evaluate(k, x).unwrap() - f.eval(k, x)).abs());
        }
    }
    worst
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn full_range_reproduces_degree_six(coeffs in prop::collection::vec(-1.0f64..1.0, 7)) {
        let f = poly_1d(Domain1D::symmetric(1.0).unwrap(), coeffs);
        let s = build_composite_1d(&f, SeriesKind1D::FullRange, r3(), 20, &QuadratureRule::default()).unwrap();
        prop_assert!(max_error_1d(&s, &f) < 1e-9);
    }

    #[test]
    fn half_cosine_reproduces_degree_six(coeffs in prop::collection::vec(-1.0f64..1.0, 7)) {
        let f = poly_1d(Domain1D::nonnegative(1.0).unwrap(), coeffs);
        let s = build_composite_1d(&f, SeriesKind1D::HalfCosine, r3(), 20, &QuadratureRule::default()).unwrap();
        prop_assert!(max_error_1d(&s, &f) < 1e-9);
    }

    #[test]
    fn half_sine_reproduces_degree_five(coeffs in prop::collection::vec(-1.0f64..1.0, 6)) {
        let f = poly_1d(Domain1D::nonnegative(1.0).unwrap(), coeffs);
        let s = build_composite_1d(&f, SeriesKind1D::HalfSine, r3(), 20, &QuadratureRule::default()).unwrap();
        prop_assert!(max_error_1d(&s, &f) < 1e-9);
    }

    #[test]
    fn full_range_2d_reproduces_complete_degree_six(seed in 0u64..1000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = polynomial_2d(Domain2D::symmetric(1.0, 1.0).unwrap(), random_complete_terms(&mut rng, 6));
        let s = build_composite_2d(&f, SeriesKind2D::FullRange, r3(), 6, 6, &QuadratureRule::default()).unwrap();
        prop_assert!(max_reconstruction_error_2d(&s, &f, 6, 9) < 1e-8);
    }
}

#[test]
fn boundary_residual_conditions_hold_for_every_kind() {
    let rule = QuadratureRule::default();
    let cases = [
        (Domain1D::symmetric(1.0).unwrap(), SeriesKind1D::FullRange),
        (Domain1D::nonnegative(1.0).unwrap(), SeriesKind1D::HalfSine),
        (Domain1D::nonnegative(1.0).unwrap(), SeriesKind1D::HalfCosine),
    ];
    for (domain, kind) in cases {
        let f = FunctionSpec1D::new(domain, usize::MAX, |k, x| {
            Trig::Sin.eval_deriv(k, 1.3, x) + (0.7f64).powi(k as i32) * (0.7 * x).exp()
        });
        let s = build_composite_1d(&f, kind, r3(), 30, &rule).unwrap();
        assert!(residual_boundary_1d(&s, &f) < 1e-8, "{kind}");
    }
}

#[test]
fn error_indexes_are_scale_invariant() {
    let rule = QuadratureRule::default();
    for (id, grid) in [(2u32, 2001), (4, 2001), (8, 41)] {
        let base = error_report(&get_sample(id).unwrap(), Method::Composite, r3(), 10, grid, &rule).unwrap();
        let scaled = error_report(&get_sample_scaled(id, 2.0, 2.0).unwrap(), Method::Composite, r3(), 10, grid, &rule).unwrap();
        for ((n, s, a), (_, _, b)) in base.records().unwrap().into_iter().zip(scaled.records().unwrap()) {
            match (a.value(), b.value()) {
                (Some(a), Some(b)) => assert!((a - b).abs() <= 1e-9 * a.abs().max(1e-12), "sample {id} {n} {s}: {a} vs {b}"),
                (None, None) => {}
                _ => panic!("degeneracy differs for {n} {s}"),
            }
        }
    }
}

#[test]
fn direct_expansion_is_exact_for_a_single_cosine_mode() {
    let rule = QuadratureRule::default();
    let w = 3.0 * std::f64::consts::PI;
    let f = FunctionSpec1D::new(Domain1D::symmetric(1.0).unwrap(), usize::MAX, move |k, x| Trig::Cos.eval_deriv(k, w, x));
    let d = build_direct_1d(&f, SeriesKind1D::FullRange, r3(), 10, &rule).unwrap();
    let s = build_composite_1d(&f, SeriesKind1D::FullRange, r3(), 10, &rule).unwrap();
    for x in linspace(-1.0, 1.0, 21) {
        for k in 0..=6 {
            let scale = w.powi(k as i32);
            assert!((d.evaluate(k, x).unwrap() - f.eval(k, x)).abs() < 1e-12 * scale);
            assert!((s.evaluate(k, x).unwrap() - f.eval(k, x)).abs() < 1e-12 * scale);
        }
    }
}

#[test]
fn direct_interior_error_decreases_with_terms() {
    let case = get_sample(2).unwrap();
    let rule = QuadratureRule::default();
    let errs: Vec<ErrorReport> = [2usize, 10, 40]
        .iter()
        .map(|&m| error_report(&case, Method::Direct, r3(), m, 2001, &rule).unwrap())
        .collect();
    for k in 0..=6 {
        let e: Vec<f64> = errs
            .iter()
            .map(|r| r.single(MultiIndex::new(k, 0), Subset::Interior).unwrap().value().unwrap())
            .collect();
        assert!(e[0] > e[1] && e[1] > e[2], "order {k}: {e:?}");
    }
}

#[test]
fn zero_function_reports_degenerate_indexes() {
    let domain = Domain1D::symmetric(1.0).unwrap();
    let case = SampleCase {
        id: 0,
        description: "zero",
        function: SampleFunction::OneD { spec: FunctionSpec1D::zero(domain), kind: SeriesKind1D::FullRange },
    };
    let recs = convergence_records(&case, &[Method::Composite, Method::Direct], r3(), &[2, 5], 11, &QuadratureRule::default())
        .unwrap();
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| r.value == ErrorValue::Degenerate));
}

#[test]
fn record_count_is_terms_times_indexes_times_subsets() {
    let rule = QuadratureRule::default();
    let terms = [2usize, 3, 5];
    for (id, indexes, subsets) in [(4u32, 7 + 7, 3), (6, 28 + 7 + 7, 4)] {
        let case = get_sample(id).unwrap();
        let recs = convergence_records(&case, &[Method::Composite], r3(), &terms, 21, &rule).unwrap();
        assert_eq!(recs.len(), terms.len() * indexes * subsets, "sample {id}");
        let again = convergence_records(&case, &[Method::Composite], r3(), &terms, 21, &rule).unwrap();
        assert_eq!(recs, again);
    }
}

#[test]
fn polynomial_samples_have_degenerate_high_order_aggregates() {
    let rep = report(1, Method::Composite, 10);
    assert_eq!(rep.single(MultiIndex::new(4, 0), Subset::Overall).unwrap(), ErrorValue::Degenerate);
    assert_eq!(rep.up_to_p(6, Subset::Overall).unwrap(), ErrorValue::Degenerate);
    assert!(rep.up_to_p(3, Subset::Overall).unwrap().value().unwrap() < 1e-12);
}

use composite_fourier::metrics::ErrorReport;
