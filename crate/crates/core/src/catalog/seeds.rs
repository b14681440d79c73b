//! The seed function F behind each theorem, at the first grid point of its
//! entry, together with its analytic endpoint exponents.

use std::f64::consts::PI;

use crate::hankel::{SeedFunction, CRITICAL_EXPONENT};
use crate::specfun::{bessel_i_scaled, bessel_k_scaled, gamma_raw, jv, kv, yv};

#[derive(Debug, Clone)]
pub struct TheoremSeed {
    /// Entry id (or id prefix for a pair) that the seed generates.
    pub entry: &'static str,
    pub seed: SeedFunction,
    /// Power law of |F| at 0, logarithms ignored.
    pub zero_exponent: f64,
    /// Power law of the envelope of |F| at ∞.
    pub inf_exponent: f64,
}

impl TheoremSeed {
    /// Whether ∫√x|F| converges, judged from the analytic exponents. A seed
    /// exactly at the critical exponent diverges logarithmically.
    pub fn analytically_admissible(&self) -> bool {
        self.zero_exponent > CRITICAL_EXPONENT && self.inf_exponent < CRITICAL_EXPONENT
    }
}

fn ts(entry: &'static str, seed: SeedFunction, zero_exponent: f64, inf_exponent: f64) -> TheoremSeed {
    TheoremSeed { entry, seed, zero_exponent, inf_exponent }
}

fn s(name: &str, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> SeedFunction {
    SeedFunction::new(name, f)
}

/// One seed per theorem, in document order.
pub fn theorem_seeds() -> Vec<TheoremSeed> {
    let inf = f64::NEG_INFINITY;
    vec![
        ts(
            "T01",
            s("√πΓ(3/2)x^{−1}J_1(x)²", |x| PI.sqrt() * gamma_raw(1.5) / x * jv(1.0, x).powi(2)).oscillatory(),
            1.0,
            -2.0,
        ),
        ts("T02", s("x^{−1}J_1(x)", |x| jv(1.0, x) / x).oscillatory(), 0.0, -1.5),
        ts("T03", s("K_{1/2}(x)", |x| kv(0.5, x)), -0.5, inf),
        ts("T04", s("xK_1(x)/2", |x| 0.5 * x * kv(1.0, x)), 0.0, inf),
        ts("T05", s("xK_0(x)/2", |x| 0.5 * x * kv(0.0, x)), 1.0, inf),
        ts("T06", s("K_0(x)J_0(x)", |x| kv(0.0, x) * jv(0.0, x)), 0.0, inf),
        ts(
            "T07",
            s("I_0(x/2)K_0(x)", |x| bessel_i_scaled(0.0, 0.5 * x) * bessel_k_scaled(0.0, x) * (-0.5 * x).exp()),
            0.0,
            inf,
        ),
        ts("T08", s("K_0(x)J_0(x)", |x| kv(0.0, x) * jv(0.0, x)), 0.0, inf),
        ts("T09", s("xK_0(x)J_0(x)", |x| x * kv(0.0, x) * jv(0.0, x)), 1.0, inf),
        ts("T10", s("I_0(x)K_0(x)", |x| bessel_i_scaled(0.0, x) * bessel_k_scaled(0.0, x)), 0.0, -1.0),
        ts("T11", s("−(π/2)J_0(x)Y_0(x)", |x| -0.5 * PI * jv(0.0, x) * yv(0.0, x)).oscillatory(), 0.0, -1.0),
        ts(
            "T12",
            s("2^{1/2}I_{−1/4}(x)K_{1/4}(x)", |x| 2f64.sqrt() * bessel_i_scaled(-0.25, x) * bessel_k_scaled(0.25, x)),
            -0.5,
            -1.0,
        ),
        ts(
            "T13",
            s("xI_0(x/2)K_1(x)/2", |x| {
                0.5 * x * bessel_i_scaled(0.0, 0.5 * x) * bessel_k_scaled(1.0, x) * (-0.5 * x).exp()
            }),
            0.0,
            inf,
        ),
        ts("T14", s("x^{−1}J_{1/2}(1/x)", |x| jv(0.5, 1.0 / x) / x).oscillatory(), -0.5, -1.5),
        ts("T15", s("x^{−3}K_0(1/x)", |x| x.powi(-3) * kv(0.0, 1.0 / x)), f64::INFINITY, -3.0),
        ts("T16", s("−π/(2x)Y_0(1/x)", |x| -0.5 * PI / x * yv(0.0, 1.0 / x)).oscillatory(), -0.5, -1.0),
        ts("T17", s("2J_0(x²)", |x| 2.0 * jv(0.0, x * x)).oscillatory(), 0.0, -1.0),
        ts("T18", s("x^{−1}J_0(√x)", |x| jv(0.0, x.sqrt()) / x).oscillatory(), -1.0, -1.25),
        ts("T19", s("(x/4)J_{−1/2}(x²/4)", |x| 0.25 * x * jv(-0.5, 0.25 * x * x)).oscillatory(), 0.0, 0.0),
        ts("T20", s("(x/4)J_{1/2}(x²/4)", |x| 0.25 * x * jv(0.5, 0.25 * x * x)).oscillatory(), 2.0, 0.0),
        ts("T21", s("−2Y_0(x²)", |x| -2.0 * yv(0.0, x * x)).oscillatory(), 0.0, -1.0),
        ts(
            "T22",
            s("2J_0(2√x)K_0(2√x)", |x| {
                let w = 2.0 * x.sqrt();
                2.0 * jv(0.0, w) * kv(0.0, w)
            }),
            0.0,
            inf,
        ),
        ts("T23", s("−πx^{−1}Y_0(x)", |x| -PI / x * yv(0.0, x)).oscillatory(), -1.0, -1.5),
        ts("T24", s("2x^{−1}K_0(x)", |x| 2.0 / x * kv(0.0, x)), -1.0, inf),
        ts("T25", s("(π/(2x))J_0(x)²", |x| 0.5 * PI / x * jv(0.0, x).powi(2)).oscillatory(), -1.0, -2.0),
        ts("T26", s("J_1(x)/x", |x| jv(1.0, x) / x).oscillatory(), 0.0, -1.5),
        ts(
            "T27",
            s("Γ(3/4)/Γ(3/4) x^{−1}I_0(x)K_0(x)", |x| bessel_i_scaled(0.0, x) * bessel_k_scaled(0.0, x) / x),
            -1.0,
            -2.0,
        ),
        ts("T28", s("x^{−1}K_0(x)²", |x| kv(0.0, x).powi(2) / x), -1.0, inf),
        ts("T29", s("x^{−1}J_0(x)", |x| jv(0.0, x) / x).oscillatory(), -1.0, -1.5),
        ts("T30", s("(π/2)J_0(x)²", |x| 0.5 * PI * jv(0.0, x).powi(2)).oscillatory(), 0.0, -1.0),
    ]
}
