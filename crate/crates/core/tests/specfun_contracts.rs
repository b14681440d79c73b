mod common;

use common::{contract_suite, Tally};
use hankel_dual::specfun::{
    bessel_zero, chebyshev_t, gamma_fn, hyp2f1_terminating, iv, jacobi_p, jv, kv, yv, Order, SpecialValue,
};
use proptest::prelude::*;

#[test]
fn suite_holds() {
    let t = contract_suite();
    t.assert_clean();
    assert!(t.count >= 200, "only {} assertions", t.count);
}

#[test]
fn each_family_is_exercised() {
    let mut t = Tally::default();
    common::recurrence(&mut t);
    assert!(t.count >= 100);
    let mut t = Tally::default();
    common::wronskians(&mut t);
    assert_eq!(t.count, 48);
    let mut t = Tally::default();
    common::half_integer(&mut t);
    assert_eq!(t.count, 120);
    let mut t = Tally::default();
    common::chebyshev(&mut t);
    assert_eq!(t.count, 72);
}

fn finite_err(v: SpecialValue) -> bool {
    v.abs_err >= 0.0 && v.abs_err.is_finite()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn recurrence_fuzzed(nu in 0.0f64..6.0, x in 0.1f64..40.0) {
        let (a, b) = (jv(nu - 1.0, x), jv(nu + 1.0, x));
        let scale = a.abs().max(b.abs()).max(1e-300);
        prop_assert!((a + b - 2.0 * nu / x * jv(nu, x)).abs() <= 1e-10 * scale);
    }

    #[test]
    fn y_recurrence_fuzzed(nu in 0.0f64..6.0, x in 0.5f64..40.0) {
        let (a, b) = (yv(nu - 1.0, x), yv(nu + 1.0, x));
        let scale = a.abs().max(b.abs());
        prop_assert!((a + b - 2.0 * nu / x * yv(nu, x)).abs() <= 1e-10 * scale);
    }

    #[test]
    fn wronskian_fuzzed(nu in 0.0f64..5.0, x in 0.2f64..45.0) {
        let (j, y) = (jv(nu, x), yv(nu, x));
        let w = j * (nu / x * y - yv(nu + 1.0, x)) - (nu / x * j - jv(nu + 1.0, x)) * y;
        let want = 2.0 / (std::f64::consts::PI * x);
        prop_assert!((w - want).abs() <= 1e-9 * want);
    }

    #[test]
    fn modified_wronskian_fuzzed(nu in 0.0f64..5.0, x in 0.05f64..30.0) {
        let (i, k) = (iv(nu, x), kv(nu, x));
        let w = i * (nu / x * k - kv(nu + 1.0, x)) - (nu / x * i + iv(nu + 1.0, x)) * k;
        prop_assert!((w + 1.0 / x).abs() <= 1e-9 / x);
    }

    #[test]
    fn gamma_functional_equation(x in 0.01f64..160.0) {
        let g = gamma_fn(x).unwrap();
        let g1 = gamma_fn(x + 1.0).unwrap();
        prop_assert!(finite_err(g) && finite_err(g1));
        prop_assert!((g1.value - x * g.value).abs() <= 5e-13 * g1.value.abs());
    }

    #[test]
    fn chebyshev_is_cosine(n in 0u32..30, theta in 0.0f64..std::f64::consts::PI) {
        let got = chebyshev_t(n, theta.cos()).unwrap().value;
        prop_assert!((got - (n as f64 * theta).cos()).abs() <= 1e-13 * (1.0 + (n * n) as f64 / 100.0));
    }

    #[test]
    fn jacobi_endpoint(n in 0u32..20, a in -0.9f64..4.0, b in -0.9f64..4.0) {
        // P_n^{(α,β)}(1) = (α+1)_n / n!
        let want: f64 = (0..n).map(|k| (a + 1.0 + k as f64) / (k + 1) as f64).product();
        let got = jacobi_p(n, a, b, 1.0).value;
        prop_assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0));
    }

    #[test]
    fn terminating_hypergeometric_at_unity(a in -3.0f64..3.0, n in 0u32..8, c in 0.5f64..6.0) {
        // Chu–Vandermonde: ₂F₁(a, −n; c; 1) = (c−a)_n/(c)_n
        let want: f64 = (0..n).map(|k| (c - a + k as f64) / (c + k as f64)).product();
        let got = hyp2f1_terminating(a, n, c, 1.0).unwrap().value;
        prop_assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0));
    }

    #[test]
    fn zeros_increase(nu in -0.5f64..6.0, k in 1u32..60) {
        let (z0, z1) = (bessel_zero(Order(nu), k), bessel_zero(Order(nu), k + 1));
        prop_assert!(z1 > z0);
        prop_assert!(jv(nu, z0).abs() <= 1e-11);
    }
}
