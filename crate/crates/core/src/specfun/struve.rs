//! Struve function H_ν(x) for real order and x ≥ 0.
//!
//! Small arguments use the ascending series. Beyond that H_ν = Y_ν + K_ν
//! where the Struve K_ν has the Laplace-type integral
//! K_ν(x) = 2(x/2)^ν / (√π Γ(ν+½)) ∫₀^∞ e^{−xt} (1+t²)^{ν−½} dt,
//! evaluated by the trapezoidal rule after t = e^s / x.

use std::f64::consts::PI;

use super::{bessel::jy, rgamma, Order, Result, SpecFunError, SpecialValue};

const EPS: f64 = f64::EPSILON;
const SERIES_MAX_X: f64 = 6.0;

fn series(nu: f64, x: f64) -> (f64, f64) {
    let h = 0.5 * x;
    let mut term = h.powf(nu + 1.0) * rgamma(1.5) * rgamma(nu + 1.5);
    let mut sum = term;
    let mut abs_sum = term.abs();
    let h2 = h * h;
    for k in 0..500 {
        let kf = k as f64;
        term *= -h2 / ((kf + 1.5) * (kf + nu + 1.5));
        sum += term;
        abs_sum += term.abs();
        if term.abs() <= 0.25 * EPS * sum.abs() || term == 0.0 {
            break;
        }
    }
    (sum, 4.0 * EPS * abs_sum)
}

/// Struve K_ν(x) = H_ν(x) − Y_ν(x) for x > 0, ν > −½ (zero at ν = −½).
pub fn struve_k_raw(nu: f64, x: f64) -> f64 {
    struve_k_with_err(nu, x).0
}

fn struve_k_with_err(nu: f64, x: f64) -> (f64, f64) {
    if !(x > 0.0) {
        return (f64::NAN, f64::NAN);
    }
    let pref = 2.0 * (0.5 * x).powf(nu) / PI.sqrt() * rgamma(nu + 0.5);
    if pref == 0.0 {
        return (0.0, 0.0);
    }
    // ∫₀^∞ e^{−u} (1 + u²/x²)^{ν−½} du / x with u = e^s
    let h = 0.2;
    let p = nu - 0.5;
    let f = |s: f64| {
        let u = s.exp();
        let r = u / x;
        (-u).exp() * (1.0 + r * r).powf(p) * u
    };
    let mut sum = f(0.0);
    let mut k = 1;
    loop {
        let s = k as f64 * h;
        let v = f(s);
        sum += v;
        if v < 1e-20 * sum {
            break;
        }
        k += 1;
    }
    let mut k = 1;
    loop {
        let s = -(k as f64) * h;
        let v = f(s);
        sum += v;
        if v < 1e-20 * sum {
            break;
        }
        k += 1;
    }
    let v = pref * sum * h / x;
    (v, 64.0 * EPS * v.abs())
}

/// Raw H_ν(x); NaN for x < 0.
pub fn struve_hv(nu: f64, x: f64) -> f64 {
    struve_with_err(nu, x).0
}

fn struve_with_err(nu: f64, x: f64) -> (f64, f64) {
    if x < 0.0 || x.is_nan() {
        return (f64::NAN, f64::NAN);
    }
    if x == 0.0 {
        return if nu > -1.0 { (0.0, 0.0) } else { (f64::NAN, f64::NAN) };
    }
    if x <= SERIES_MAX_X || nu > x {
        return series(nu, x);
    }
    let (_, y, jerr) = jy(nu, x);
    let (k, kerr) = struve_k_with_err(nu, x);
    let yerr = jerr.max(48.0 * EPS * y.abs()) * 2.0;
    (y + k, yerr + kerr)
}

/// Struve function of the first kind.
pub fn struve_h(nu: Order, x: f64) -> Result<SpecialValue> {
    if x < 0.0 || x.is_nan() {
        return Err(SpecFunError::Domain { func: "struve_h", arg: x, reason: "x must be non-negative" });
    }
    if nu.0 < -0.5 {
        return Err(SpecFunError::Parameter {
            func: "struve_h",
            reason: format!("order {} below −1/2 is not supported", nu.0),
        });
    }
    let (v, e) = struve_with_err(nu.0, x);
    Ok(SpecialValue::new(v, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_domain() {
        assert_eq!(struve_h(Order(0.0), 0.0).unwrap().value, 0.0);
        assert!(struve_h(Order(0.0), -1.0).is_err());
    }

    #[test]
    fn half_order_closed_form() {
        for i in 0..60 {
            let x = 0.05 + 0.5 * i as f64;
            let exact = (2.0 / (PI * x)).sqrt() * 2.0 * (0.5 * x).sin().powi(2);
            let v = struve_h(Order(0.5), x).unwrap();
            let env = (2.0 / (PI * x)).sqrt();
            assert!((v.value - exact).abs() < 1e-13 * exact.abs().max(env), "x = {x}: {} vs {exact}", v.value);
        }
    }

    #[test]
    fn reference_values() {
        let cases = [
            (0.0, 1.0, 0.568_656_627_048_287_95),
            (0.0, 5.0, -0.185_216_815_776_684_89),
            (0.0, 12.0, -0.172_534_135_119_988_72),
            (1.0, 9.5, 0.846_648_546_425_673_6),
            (-0.25, 20.0, 0.130_716_635_572_512_57),
            (0.75, 40.0, 0.336_657_813_700_879_8),
            (0.25, 3.0, 0.774_490_166_862_195_6),
            (0.5, 100.0, 0.010_985_364_611_558_452),
            (2.3, 7.0, 1.908_758_865_645_574_3),
        ];
        for &(nu, x, r) in &cases {
            let v = struve_h(Order(nu), x).unwrap();
            assert!((v.value - r).abs() < 1e-13, "H_{nu}({x}) = {} vs {r}", v.value);
            assert!((v.value - r).abs() <= 5.0 * v.abs_err, "H_{nu}({x}) error estimate");
        }
    }

    #[test]
    fn branches_agree_at_switch() {
        for &nu in &[-0.25, 0.0, 0.5, 1.3] {
            for &x in &[6.0, 7.0] {
                let (s, _) = series(nu, x);
                let (_, y, _) = jy(nu, x);
                let k = struve_k_raw(nu, x);
                assert!((s - (y + k)).abs() < 1e-12, "nu = {nu}, x = {x}");
            }
        }
    }
}
