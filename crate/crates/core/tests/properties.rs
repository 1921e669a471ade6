use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use pqfs::bernardi::{bernardi_integral, bernardi_transform, BernardiParams};
use pqfs::bounds::{self, Reading};
use pqfs::classes::{caratheodory_from_schwarz, subordination_residual, ClassKind, MemberBuilder};
use pqfs::oracle::{OracleConfig, Verifier};
use pqfs::pq_core::{pq_derivative, pq_integral};
use pqfs::{CaratheodoryJet, MaMindaTarget, PQParams, SchwarzJet, TruncatedSeries};

/// Pairs with `[2] > 1.2` and `[3] > 1.2`.
fn valid_params() -> impl Strategy<Value = PQParams<f64>> {
    (0.62f64..=1.0, 0.0f64..1.0)
        .prop_map(|(p, t)| {
            let lo = 1.2 - p;
            (p, lo + t * (p - lo) * 0.999)
        })
        .prop_filter_map("degenerate", |(p, q)| {
            let params = PQParams::new(p, q).ok()?;
            (params.number(2) > 1.2 && params.number(3) > 1.2).then_some(params)
        })
}

fn schwarz() -> impl Strategy<Value = SchwarzJet<f64>> {
    (0.0f64..=1.0, 0.0f64..std::f64::consts::TAU, 0.0f64..=1.0, 0.0f64..std::f64::consts::TAU).prop_map(
        |(r1, t1, r2, t2)| {
            let w1 = Complex64::from_polar(r1.sqrt(), t1);
            let w2 = Complex64::from_polar((1.0 - w1.norm_sqr()).max(0.0) * r2.sqrt(), t2);
            SchwarzJet::new(w1, w2).unwrap()
        },
    )
}

/// `b1 > 0`, `b2 >= 0`.
fn positive_phi() -> impl Strategy<Value = MaMindaTarget<f64>> {
    (0.1f64..3.0, 0.0f64..3.0).prop_map(|(b1, b2)| MaMindaTarget::new(vec![b1, b2]).unwrap())
}

fn kind() -> impl Strategy<Value = ClassKind> {
    prop_oneof![Just(ClassKind::Starlike), Just(ClassKind::Convex)]
}

fn real_poly(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-5.0f64..5.0, len)
}

fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap()
}

proptest! {
    #[test]
    fn numbers_match_exact_closed_form(p in 0.05f64..=1.0, frac in 0.0f64..1.0, n in 1usize..12) {
        let q = (p - 1e-6 - frac * (p - 0.01)).max(1e-3);
        prop_assume!(p - q >= 1e-6);
        let params = PQParams::new(p, q).unwrap();
        let sum = params.number(n);
        prop_assert!(sum > 0.0);
        let (pr, qr) = (rat(p), rat(q));
        let exact = (num_traits::pow(pr.clone(), n) - num_traits::pow(qr.clone(), n)) / (pr - qr);
        prop_assert!((sum - exact.to_f64().unwrap()).abs() <= 1e-12, "n={} sum={} exact={}", n, sum, exact);
    }

    #[test]
    fn derivative_is_linear(params in valid_params(), f in real_poly(9), g in real_poly(9), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let (f, g) = (TruncatedSeries::new(f), TruncatedSeries::new(g));
        let lhs = pq_derivative(&(f.scale(&a) + g.scale(&b)), &params).unwrap();
        let rhs = pq_derivative(&f, &params).unwrap().scale(&a) + pq_derivative(&g, &params).unwrap().scale(&b);
        for n in 0..lhs.order() {
            prop_assert!((lhs.coeff(n) - rhs.coeff(n)).abs() <= 1e-12 * (1.0 + rhs.coeff(n).abs()));
        }
    }

    #[test]
    fn derivative_inverts_integral_exactly(p in 0.5f64..=1.0, t in 0.01f64..0.99, f in real_poly(9)) {
        let params = PQParams::new(rat(p), rat(p * t)).unwrap();
        let f = TruncatedSeries::new(f.into_iter().map(rat).collect());
        let back = pq_derivative(&pq_integral(&f, &params), &params).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn caratheodory_body(j in schwarz()) {
        let c = caratheodory_from_schwarz(&j);
        prop_assert!(c.c1().norm() <= 2.0 + 1e-12);
        prop_assert!(c.c2().norm() <= 2.0 + 1e-12);
    }

    #[test]
    fn residual_is_tiny(k in kind(), params in valid_params(), j in schwarz(), b in prop::collection::vec(-2.0f64..2.0, 2..5)) {
        prop_assume!(b[0].abs() > 0.05);
        let phi = MaMindaTarget::new(b).unwrap();
        let m = MemberBuilder::new(k, &phi, &params).unwrap().member(&caratheodory_from_schwarz(&j));
        prop_assert!(subordination_residual(&m, &j, &phi, &params) <= 1e-10);
    }

    #[test]
    fn zero_c1_gives_zero_a2_and_linear_a3(k in kind(), params in valid_params(), phi in positive_phi(), c2 in 0.0f64..2.0) {
        let builder = MemberBuilder::new(k, &phi, &params).unwrap();
        let m = builder.member(&CaratheodoryJet::real(0.0, c2).unwrap());
        let unit = builder.member(&CaratheodoryJet::real(0.0, 1.0).unwrap());
        prop_assert_eq!(m.a2(), Complex64::new(0.0, 0.0));
        prop_assert!((m.a3() - unit.a3() * c2).norm() <= 1e-12 * (1.0 + m.a3().norm()));
    }

    #[test]
    fn branch_agreement_and_positivity(k in kind(), params in valid_params(), phi in positive_phi(), mu in -5.0f64..5.0) {
        let pw = bounds::fs_piecewise(k, mu, &phi, &params, Reading::Consistent).unwrap();
        let mf = bounds::fs_bound(k, Complex64::new(mu, 0.0), &phi, &params).unwrap();
        prop_assert!((pw.value - mf.value).abs() <= 1e-12 * (1.0 + mf.value));
        prop_assert!(pw.value > 0.0 && mf.value > 0.0);
    }

    #[test]
    fn piecewise_is_continuous(k in kind(), params in valid_params(), phi in positive_phi()) {
        let t = match k {
            ClassKind::Starlike => bounds::sigma_thresholds(&phi, &params).unwrap(),
            ClassKind::Convex => bounds::rho_thresholds(&phi, &params, Reading::Consistent).unwrap(),
        };
        prop_assert!(t.t1 <= t.t3 && t.t3 <= t.t2);
        let f = |mu: f64| bounds::fs_piecewise(k, mu, &phi, &params, Reading::Consistent).unwrap().value;
        for s in [t.t1, t.t2] {
            prop_assert!((f(s - 1e-12) - f(s + 1e-12)).abs() <= 1e-9);
        }
    }

    #[test]
    fn outer_branches_are_monotone(k in kind(), params in valid_params(), phi in positive_phi(), d in 0.01f64..2.0) {
        let t = match k {
            ClassKind::Starlike => bounds::sigma_thresholds(&phi, &params).unwrap(),
            ClassKind::Convex => bounds::rho_thresholds(&phi, &params, Reading::Consistent).unwrap(),
        };
        let f = |mu: f64| bounds::fs_piecewise(k, mu, &phi, &params, Reading::Consistent).unwrap().value;
        prop_assert!(f(t.t1 - d) >= f(t.t1) - 1e-12);
        prop_assert!(f(t.t2 + d) >= f(t.t2) - 1e-12);
    }

    #[test]
    fn bernardi_routes_agree(params in valid_params(), c in 0u32..6, tail in real_poly(7)) {
        let mut coeffs = vec![0.0, 1.0];
        coeffs.extend(tail);
        let f = TruncatedSeries::new(coeffs);
        let bp = BernardiParams::new(c, params);
        let a = bernardi_transform(&f, &bp).unwrap();
        let b = bernardi_integral(&f, &bp).unwrap();
        for n in 0..=8 {
            prop_assert!((a.coeff(n) - b.coeff(n)).abs() <= 1e-12);
        }
    }
}

#[test]
fn derivative_approaches_ordinary_derivative() {
    let f = TruncatedSeries::new(vec![0.3, 1.0, -2.0, 0.5, 4.0, -1.5, 0.25, 3.0, -0.75]);
    let classical: Vec<f64> = (1..=8).map(|n| n as f64 * f.coeff(n)).collect();
    for eps in [1e-3, 1e-6] {
        let params = PQParams::new(1.0, 1.0 - eps).unwrap();
        let d = pq_derivative(&f, &params).unwrap();
        let err = (0..8).map(|k| (d.coeff(k) - classical[k]).abs()).fold(0.0, f64::max);
        // [n] = n - eps n(n-1)/2 + O(eps^2)
        assert!(err <= 8.0 * 28.0 * eps * 1.01, "eps={eps} err={err}");
        assert!(err >= eps, "eps={eps} err={err}");
    }
}

#[test]
fn classical_bernardi_factors_are_exact() {
    let classical = PQParams::<f64>::classical();
    for c in 0..8u32 {
        let bp = BernardiParams::new(c, classical);
        for n in 1..10usize {
            assert_eq!(bp.factor(n).unwrap(), (1.0 + c as f64) / (n as f64 + c as f64));
        }
    }
    let exact = BernardiParams::new(3, PQParams::<BigRational>::classical());
    assert_eq!(exact.factor(2).unwrap(), BigRational::new(BigInt::from(4), BigInt::from(5)));
    assert!(!exact.factor(7).unwrap().is_zero());
}

#[test]
fn oracle_maximum_grows_with_refinement() {
    let phi = MaMindaTarget::new(vec![1.0, 0.5]).unwrap();
    let params = PQParams::new(0.9, 0.6).unwrap();
    let mut last = [f64::NEG_INFINITY; 4];
    for (grid, samples) in [(8, 100), (16, 1_000), (32, 10_000)] {
        let v = Verifier::new(OracleConfig {
            grid_density: grid,
            random_samples: samples,
            include_extremals: false,
            ..OracleConfig::default()
        })
        .unwrap();
        for (i, mu) in [-1.0, 0.3, 0.9, 2.5].into_iter().enumerate() {
            let r = v.fs(ClassKind::Convex, Complex64::new(mu, 0.0), &phi, &params).unwrap();
            assert!(r.empirical_max >= last[i], "grid {grid} mu {mu}");
            assert!(r.passed);
            last[i] = r.empirical_max;
        }
    }
}
