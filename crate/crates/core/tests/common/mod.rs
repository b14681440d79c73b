//! Checks shared between the integration tests and the acceptance run.

#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use hankel_dual::specfun::{
    bessel_i, bessel_j, bessel_k_real, bessel_y, bessel_zero, chebyshev_t, gamma_fn, hyp2f1_terminating, iv, jacobi_p,
    jv, kv, legendre_p_negorder, legendre_q_negorder, struve_h, yv, Order, SpecialValue,
};

/// Assertion counter that records failures instead of panicking.
#[derive(Debug, Default)]
pub struct Tally {
    pub count: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    /// |got − want| ≤ tol.
    pub fn close(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        let d = (got - want).abs();
        self.check(d <= tol, || format!("{what}: got {got:e}, want {want:e}, |d| = {d:e} > {tol:e}"));
    }

    /// |got − want| ≤ rel·scale.
    pub fn rel(&mut self, what: &str, got: f64, want: f64, rel: f64, scale: f64) {
        self.close(what, got, want, rel * scale);
    }

    /// Contract form for a SpecialValue: |v − want| ≤ max(abs_err, tol).
    pub fn special(&mut self, what: &str, got: SpecialValue, want: f64, tol: f64) {
        self.close(what, got.value, want, tol.max(got.abs_err));
    }

    pub fn merge(&mut self, other: Tally) {
        self.count += other.count;
        self.failures.extend(other.failures);
    }

    pub fn assert_clean(&self) {
        assert!(
            self.failures.is_empty(),
            "{} of {} assertions failed:\n{}",
            self.failures.len(),
            self.count,
            self.failures.join("\n")
        );
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

/// J_{ν−1} + J_{ν+1} = (2ν/x)J_ν, relative to the size of the terms.
pub fn recurrence(t: &mut Tally) {
    for nu in [0.5, 1.0, 2.5] {
        for x in linspace(0.1, 40.0, 41) {
            let (a, b, c) = (jv(nu - 1.0, x), jv(nu + 1.0, x), jv(nu, x));
            let scale = a.abs().max(b.abs()).max(1e-300);
            t.rel(&format!("recurrence ν={nu} x={x}"), a + b, 2.0 * nu / x * c, 1e-10, scale);
        }
    }
}

/// Wronskians with derivatives from the order recurrences.
pub fn wronskians(t: &mut Tally) {
    for nu in [0.0, 0.5, 1.0, 2.5] {
        for x in [0.3, 1.0, 2.0, 5.5, 12.0, 25.0] {
            let (j, y) = (jv(nu, x), yv(nu, x));
            let jp = nu / x * j - jv(nu + 1.0, x);
            let yp = nu / x * y - yv(nu + 1.0, x);
            let want = 2.0 / (PI * x);
            t.rel(&format!("J/Y Wronskian ν={nu} x={x}"), j * yp - jp * y, want, 1e-9, want);

            let (i, k) = (iv(nu, x), kv(nu, x));
            let ip = nu / x * i + iv(nu + 1.0, x);
            let kp = nu / x * k - kv(nu + 1.0, x);
            let want = -1.0 / x;
            t.rel(&format!("I/K Wronskian ν={nu} x={x}"), i * kp - ip * k, want, 1e-9, want.abs());
        }
    }
}

/// J, Y, I, K, H of order ½ against their elementary forms on [0.05, 30].
pub fn half_integer(t: &mut Tally) {
    for x in linspace(0.05, 30.0, 24) {
        let s = (2.0 / (PI * x)).sqrt();
        let h = Order(0.5);
        t.special(&format!("J½({x})"), bessel_j(h, x).unwrap(), s * x.sin(), 1e-12 * (s * x.sin()).abs());
        t.special(&format!("Y½({x})"), bessel_y(h, x).unwrap(), -s * x.cos(), 1e-12 * (s * x.cos()).abs());
        let want = s * x.sinh();
        t.special(&format!("I½({x})"), bessel_i(h, x).unwrap(), want, 1e-12 * want);
        let want = (PI / (2.0 * x)).sqrt() * (-x).exp();
        t.special(&format!("K½({x})"), bessel_k_real(h, x).unwrap(), want, 1e-12 * want);
        let want = s * (1.0 - x.cos());
        t.special(&format!("H½({x})"), struve_h(h, x).unwrap(), want, 1e-12 * want);
    }
}

/// T_n(cos θ) = cos nθ.
pub fn chebyshev(t: &mut Tally) {
    for n in [0, 1, 2, 3, 5, 8, 13, 20] {
        for theta in linspace(0.0, PI, 9) {
            let got = chebyshev_t(n, theta.cos()).unwrap().value;
            t.close(&format!("T_{n}(cos {theta})"), got, (n as f64 * theta).cos(), 1e-13);
        }
    }
}

/// Σ (−1)^k (x/2)^{2k}/(k!)², 25 terms.
pub fn j0_series(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 1..25 {
        term *= q / (k * k) as f64;
        sum += term;
    }
    sum
}

/// Y_0 from its ascending series with the Euler–Mascheroni term.
pub fn y0_series(x: f64) -> f64 {
    const EULER: f64 = 0.577_215_664_901_532_9;
    let q = -0.25 * x * x;
    let (mut term, mut harmonic, mut sum) = (1.0, 0.0, 0.0);
    for k in 1..30 {
        term *= q / (k * k) as f64;
        harmonic += 1.0 / k as f64;
        sum -= harmonic * term;
    }
    2.0 / PI * (((0.5 * x).ln() + EULER) * j0_series(x) + sum)
}

/// Σ (x/2)^{ν+2k}/(k! Γ(ν+k+1)) for integer ν.
pub fn i_series(n: u32, x: f64) -> f64 {
    let h = 0.5 * x;
    let mut term = h.powi(n as i32) / (1..=n).map(f64::from).product::<f64>();
    let mut sum = term;
    for k in 1..40 {
        term *= h * h / (k as f64 * (k + n) as f64);
        sum += term;
    }
    sum
}

/// Trapezoid rule for ∫₀^∞ e^{−x cosh t} dt, exponentially accurate.
pub fn k0_integral(x: f64) -> f64 {
    let h: f64 = 0.02;
    let mut sum = 0.5 * (-x).exp();
    let mut t = h;
    loop {
        let v = (-x * t.cosh()).exp();
        sum += v;
        if v < 1e-300 {
            break;
        }
        t += h;
    }
    h * sum
}

/// Σ (−1)^k (x/2)^{2k+1}/Γ(k+3/2)².
pub fn h0_series(x: f64) -> f64 {
    let h = 0.5 * x;
    let g = PI.sqrt() / 2.0; // Γ(3/2)
    let mut term = h / (g * g);
    let mut sum = term;
    for k in 1..40 {
        let kk = k as f64 + 0.5;
        term *= -h * h / (kk * kk);
        sum += term;
    }
    sum
}

fn binom(n: f64, k: u32) -> f64 {
    (0..k).map(|i| (n - i as f64) / (i + 1) as f64).product()
}

/// Explicit-coefficient Jacobi polynomial.
pub fn jacobi_explicit(n: u32, a: f64, b: f64, x: f64) -> f64 {
    (0..=n)
        .map(|s| {
            binom(n as f64 + a, n - s)
                * binom(n as f64 + b, s)
                * (0.5 * (x - 1.0)).powi(s as i32)
                * (0.5 * (x + 1.0)).powi((n - s) as i32)
        })
        .sum()
}

/// ₂F₁(−ν, ν+1; 1; (1−x)/2) summed directly (converges for 1 < x < 3).
pub fn legendre_p_series(nu: f64, x: f64) -> f64 {
    let z = 0.5 * (1.0 - x);
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 0..400 {
        let k = k as f64;
        term *= (-nu + k) * (nu + 1.0 + k) / ((1.0 + k) * (1.0 + k)) * z;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Root of the J₀ series in (2, 3) by bisection.
pub fn j0_first_zero_bisect() -> f64 {
    let (mut a, mut b) = (2.0, 3.0);
    while b - a > 1e-15 {
        let m = 0.5 * (a + b);
        if j0_series(a) * j0_series(m) <= 0.0 {
            b = m;
        } else {
            a = m;
        }
    }
    0.5 * (a + b)
}

/// The worked examples attached to each special function.
pub fn examples(t: &mut Tally) {
    t.special("Γ(1)", gamma_fn(1.0).unwrap(), 1.0, 1e-13);
    t.special("Γ(5)", gamma_fn(5.0).unwrap(), 24.0, 24e-13);
    t.special("Γ(½)", gamma_fn(0.5).unwrap(), PI.sqrt(), 1e-13 * PI.sqrt());
    t.check(gamma_fn(0.0).is_err() && gamma_fn(-3.0).is_err(), || "Γ poles".into());
    t.check(gamma_fn(172.0).is_err(), || "Γ overflow".into());

    t.special("J₀(0)", bessel_j(Order(0.0), 0.0).unwrap(), 1.0, 0.0);
    t.special("J½(π)", bessel_j(Order(0.5), PI).unwrap(), 0.0, 1e-15);
    t.special("J₀(2)", bessel_j(Order(0.0), 2.0).unwrap(), j0_series(2.0), 1e-12 * j0_series(2.0).abs());
    t.check(bessel_j(Order(0.0), -1.0).is_err(), || "J domain x<0".into());
    t.check(bessel_j(Order(-0.5), 0.0).is_err(), || "J domain x=0, ν<0".into());

    t.special("Y½(π/2)", bessel_y(Order(0.5), FRAC_PI_2).unwrap(), 0.0, 1e-15);
    let y0 = y0_series(1.0);
    t.special("Y₀(1)", bessel_y(Order(0.0), 1.0).unwrap(), y0, 1e-12 * y0.abs());
    t.check(bessel_y(Order(0.0), 0.0).is_err(), || "Y domain".into());

    t.special("I₀(0)", bessel_i(Order(0.0), 0.0).unwrap(), 1.0, 1e-15);
    let want = (2.0 / PI).sqrt() * 1f64.sinh();
    t.special("I½(1)", bessel_i(Order(0.5), 1.0).unwrap(), want, 1e-12 * want);
    t.special("I₁(2)", bessel_i(Order(1.0), 2.0).unwrap(), i_series(1, 2.0), 1e-12 * i_series(1, 2.0));

    let want = FRAC_PI_2.sqrt() * (-1f64).exp();
    t.special("K½(1)", bessel_k_real(Order(0.5), 1.0).unwrap(), want, 1e-11 * want);
    t.special("K₀(1)", bessel_k_real(Order(0.0), 1.0).unwrap(), k0_integral(1.0), 1e-11 * k0_integral(1.0));

    let want = (2.0 / (PI * PI)).sqrt() * 2.0;
    t.special("H½(π)", struve_h(Order(0.5), PI).unwrap(), want, 1e-10 * want);
    t.special("H₀(0)", struve_h(Order(0.0), 0.0).unwrap(), 0.0, 0.0);
    t.special("H₀(1)", struve_h(Order(0.0), 1.0).unwrap(), h0_series(1.0), 1e-10 * h0_series(1.0));

    t.special("₂F₁(ν,0;c;x)", hyp2f1_terminating(0.7, 0, 1.3, 0.4).unwrap(), 1.0, 1e-13);
    t.special("₂F₁(2,−1;1;½)", hyp2f1_terminating(2.0, 1, 1.0, 0.5).unwrap(), 0.0, 1e-15);
    // exact: 1 − 3/2 + 3/8
    t.special("₂F₁(3,−2;1;¼)", hyp2f1_terminating(3.0, 2, 1.0, 0.25).unwrap(), -0.125, 1.25e-14);
    t.check(hyp2f1_terminating(1.0, 3, -1.0, 0.5).is_err(), || "₂F₁ c pole".into());

    t.close("P₀^{(ν,0)}", jacobi_p(0, 0.3, 0.0, 0.2).value, 1.0, 1e-12);
    for a in [0.0, 0.5, 2.0] {
        t.close(&format!("P₁^{{({a},β)}}(1)"), jacobi_p(1, a, 0.7, 1.0).value, a + 1.0, 1e-12 * (a + 1.0));
    }
    let want = jacobi_explicit(2, 1.0, 0.0, 0.3);
    t.close("P₂^{(1,0)}(0.3)", jacobi_p(2, 1.0, 0.0, 0.3).value, want, 1e-12);
    for n in [3, 7, 12] {
        for x in [-0.9, -0.2, 0.45, 1.0] {
            let want = jacobi_explicit(n, 0.5, 1.5, x);
            t.close(
                &format!("P_{n}^{{(½,3/2)}}({x})"),
                jacobi_p(n, 0.5, 1.5, x).value,
                want,
                1e-12 * want.abs().max(1.0),
            );
        }
    }

    t.close("T₀(0.7)", chebyshev_t(0, 0.7).unwrap().value, 1.0, 1e-14);
    t.close("T₂(½)", chebyshev_t(2, 0.5).unwrap().value, -0.5, 1e-14);
    t.close("T₅(0.3)", chebyshev_t(5, 0.3).unwrap().value, (5.0 * 0.3f64.acos()).cos(), 1e-14);
    t.check(chebyshev_t(2, 1.5).is_err(), || "T domain".into());

    t.special("P₀(x)", legendre_p_negorder(0.0, 0.0, 1.7).unwrap(), 1.0, 1e-9);
    t.special("Q₀(3)", legendre_q_negorder(0.0, 0.0, 3.0).unwrap(), 0.5 * 2f64.ln(), 1e-9 * 0.5 * 2f64.ln());
    let want = legendre_p_series(0.5, 2.0);
    t.special("P½(2)", legendre_p_negorder(0.5, 0.0, 2.0).unwrap(), want, 1e-9 * want);
    t.check(legendre_p_negorder(0.5, 0.0, 0.9).is_err(), || "Legendre domain".into());

    for k in 1..=6 {
        t.close(&format!("j½,{k}"), bessel_zero(Order(0.5), k), k as f64 * PI, 1e-12);
    }
    t.close("j₀,₁", bessel_zero(Order(0.0), 1), j0_first_zero_bisect(), 1e-12);
    let gap = bessel_zero(Order(0.0), 51) - bessel_zero(Order(0.0), 50);
    t.close("j₀ spacing at k=50", gap, PI, 1e-3);
}

/// The whole special-function contract suite.
pub fn contract_suite() -> Tally {
    let mut t = Tally::default();
    recurrence(&mut t);
    wronskians(&mut t);
    half_integer(&mut t);
    chebyshev(&mut t);
    examples(&mut t);
    t
}
