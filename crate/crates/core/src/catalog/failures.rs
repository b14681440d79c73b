//! Seeds whose transform pairs exist but violate the admissibility condition.

use std::f64::consts::PI;

use super::FailureSeed;
use crate::hankel::{Endpoint, SeedFunction};
use crate::specfun::{bessel_i_scaled, bessel_k_scaled, gamma_raw, jv, kv, rgamma, yv};

fn alpha(nu: f64, mu: f64) -> f64 {
    gamma_raw(0.5 * (mu - nu + 1.0)) * rgamma(0.5 * (mu + nu + 1.0))
}

fn beta(nu: f64, mu: f64) -> f64 {
    gamma_raw(0.5 * nu - mu) * rgamma(1.0 + 0.5 * nu + mu)
}

fn fail(
    id: &'static str,
    description: &'static str,
    seed: SeedFunction,
    expected_failing_endpoint: Endpoint,
    provenance: &'static str,
) -> FailureSeed {
    FailureSeed { id, description, seed, expected_failing_endpoint, provenance }
}

/// The 16 failure seeds, in document order.
pub fn all_failures() -> Vec<FailureSeed> {
    use Endpoint::*;
    // the J(bx)/x seeds sit exactly on the critical exponent at infinity, so
    // their exponents are declared rather than fitted
    let (nu, mu) = (1.0, 2.0);
    let c1 = alpha(nu, mu) * gamma_raw(nu + 1.0);
    let mut s1a = SeedFunction::new("α(ν,μ)Γ(ν+1)b^{−ν}x^{−1}J_ν(bx), ν=1, μ=2, b=1", move |x: f64| {
        c1 * jv(nu, x) / x
    })
    .oscillatory();
    s1a.decay_at_zero = Some(nu - 1.0);
    s1a.decay_at_inf = Some(-1.5);
    let mut s1b = SeedFunction::new("α(ν,μ)Γ(ν+1)a^{ν+1}x^{−1}J_μ(ax), ν=1, μ=2, a=1", move |x: f64| {
        c1 * jv(mu, x) / x
    })
    .oscillatory();
    s1b.decay_at_zero = Some(mu - 1.0);
    s1b.decay_at_inf = Some(-1.5);

    let b22 = 0.5 * beta(1.0, 1.0);
    let b28 = 0.5 * beta(1.0, 1.0);
    let g16 = PI.sqrt() * 8f64.powf(-0.5) * rgamma(1.0);

    vec![
        fail("S6512_1a", "α(ν,μ)Γ(ν+1)b^{−ν}x^{−1}J_ν(bx)", s1a, Infinity, "GR 6.512.1"),
        fail("S6512_1b", "α(ν,μ)Γ(ν+1)a^{ν+1}x^{−1}J_μ(ax)", s1b, Infinity, "GR 6.512.1"),
        fail(
            "S6514_1",
            "b x^{−3} J_ν(b/x)",
            SeedFunction::new("x^{−3}J_1(1/x)", |x: f64| x.powi(-3) * jv(1.0, 1.0 / x)).oscillatory(),
            Zero,
            "GR 6.514.1",
        ),
        fail(
            "S6514_2",
            "b x^{−3} Y_ν(b/x)",
            SeedFunction::new("x^{−3}Y_0(1/x)", |x: f64| x.powi(-3) * yv(0.0, 1.0 / x)).oscillatory(),
            Zero,
            "GR 6.514.2",
        ),
        fail(
            "S6516_2",
            "−2b Y_ν(bx²)",
            SeedFunction::new("−2Y_{1/2}(x²)", |x: f64| -2.0 * yv(0.5, x * x)).oscillatory(),
            Infinity,
            "GR 6.516.2",
        ),
        fail(
            "S6516_3",
            "4bπ^{−1} K_ν(bx²)",
            SeedFunction::new("4π^{−1}K_1(x²)", |x: f64| 4.0 / PI * kv(1.0, x * x)),
            Zero,
            "GR 6.516.3",
        ),
        fail(
            "S6516_4",
            "x^{−1} Y_{2ν}(a√x)",
            SeedFunction::new("x^{−1}Y_{1/2}(√x)", |x: f64| yv(0.5, x.sqrt()) / x).oscillatory(),
            Infinity,
            "GR 6.516.4",
        ),
        fail(
            "S6516_7",
            "4π^{−1}x^{−1} cos(νπ) K_{2ν}(a√x)",
            SeedFunction::new("4π^{−1}x^{−1}cos(3π/4)K_{3/2}(√x)", |x: f64| {
                4.0 / PI / x * (0.75 * PI).cos() * kv(1.5, x.sqrt())
            }),
            Zero,
            "GR 6.516.7",
        ),
        fail(
            "S6522_2",
            "½ e^{−2μπi} β(ν,μ) K_μ(ax)²",
            SeedFunction::new("½β(1,1)K_1(x)²", move |x: f64| b22 * kv(1.0, x).powi(2)),
            Zero,
            "GR 6.522.2",
        ),
        fail(
            "S6522_6",
            "−(π/2) J_0(ax) Y_0(ax)",
            SeedFunction::new("−(π/2)J_0(x)Y_0(x)", |x: f64| -0.5 * PI * jv(0.0, x) * yv(0.0, x)).oscillatory(),
            Infinity,
            "GR 6.522.6",
        ),
        fail(
            "S6522_8",
            "½ e^{−2μπi} β(ν,μ) K_{μ−½}(ax) K_{μ+½}(ax)",
            SeedFunction::new("½β(1,1)K_{1/2}(x)K_{3/2}(x)", move |x: f64| b28 * kv(0.5, x) * kv(1.5, x)),
            Zero,
            "GR 6.522.8",
        ),
        fail(
            "S6522_16",
            "√π x^ν γ(ν) I_ν(cx) K_ν(bx)",
            SeedFunction::new("√π x^{1/2}γ(1/2)I_{1/2}(x)K_{1/2}(x)", move |x: f64| {
                g16 * x.sqrt() * bessel_i_scaled(0.5, x) * bessel_k_scaled(0.5, x)
            }),
            Infinity,
            "GR 6.522.16",
        ),
        fail(
            "S6526_2",
            "2x^{−1} Y_ν(b√x)",
            SeedFunction::new("2x^{−1}Y_{1/2}(√x)", |x: f64| 2.0 * yv(0.5, x.sqrt()) / x).oscillatory(),
            Infinity,
            "GR 6.526.2",
        ),
        fail(
            "S6526_3",
            "cos(νπ/2) K_ν(b√x)/(2πx)",
            SeedFunction::new("cos(3π/4)K_{3/2}(√x)/(2πx)", |x: f64| {
                (0.75 * PI).cos() * kv(1.5, x.sqrt()) / (2.0 * PI * x)
            }),
            Zero,
            "GR 6.526.3",
        ),
        fail(
            "S6526_6",
            "4aπ^{−1} K_{ν/2}(ax²)",
            SeedFunction::new("4π^{−1}K_1(x²)", |x: f64| 4.0 / PI * kv(1.0, x * x)),
            Zero,
            "GR 6.526.6",
        ),
        fail(
            "S6527_3",
            "−x Y_{ν+½}(x²/4)/4",
            SeedFunction::new("−xY_{1/2}(x²/4)/4", |x: f64| -0.25 * x * yv(0.5, 0.25 * x * x)).oscillatory(),
            Infinity,
            "GR 6.527.3",
        ),
    ]
}

/// An admissible control: F(x) = e^{−x}.
pub fn control_seed() -> SeedFunction {
    SeedFunction::new("e^{−x}", |x: f64| (-x).exp())
}
