//! K_ν(z) for complex z in the right half plane.
//!
//! Uses the trapezoidal rule on K_ν(z) = ∫₀^∞ exp(−z cosh t) cosh(νt) dt.
//! The integrand is analytic in the strip |Im t| < π/2 − |arg z|, so the rule
//! converges geometrically with a step tied to the strip width.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{ComplexValue, Result, SpecFunError};

/// Raw complex K_ν(z); NaN components when Re z ≤ 0.
pub fn bessel_k_complex_raw(nu: f64, z: Complex64) -> (Complex64, f64) {
    if !(z.re > 0.0) || !nu.is_finite() {
        return (Complex64::new(f64::NAN, f64::NAN), f64::NAN);
    }
    let theta = z.arg().abs();
    // shift the contour to Im t = y just inside the strip and bound the
    // resulting error exp(|z|(cos θ − cos(θ+y)) − 2πy/h) by e^{-42}
    let y = 0.9 * (0.5 * PI - theta);
    let growth = z.norm() * (theta.cos() - (theta + y).cos());
    let h = (2.0 * PI * y / (42.0 + growth)).min(0.25);
    let nu = nu.abs();
    let mut sum = 0.5 * (-z).exp();
    let mut abs_sum = sum.norm();
    let mut k = 1usize;
    loop {
        let t = k as f64 * h;
        let ch = t.cosh();
        let w = (nu * t).cosh();
        let term = (-z * ch).exp() * w;
        sum += term;
        let mag = term.norm();
        abs_sum += mag;
        // the decay is super-exponential once Re z cosh t exceeds νt
        if z.re * ch > nu * t + 40.0 && mag <= 1e-18 * sum.norm() {
            break;
        }
        if !mag.is_finite() || k > 100_000 {
            break;
        }
        k += 1;
    }
    let value = sum * h;
    let err = 32.0 * f64::EPSILON * abs_sum * h + 1e-17 * value.norm();
    (value, err)
}

/// Modified Bessel function K_ν(z) for complex z with Re z > 0.
pub fn bessel_k_complex(nu: f64, z: Complex64) -> Result<ComplexValue> {
    if !(z.re > 0.0) {
        return Err(SpecFunError::Domain { func: "bessel_k", arg: z.re, reason: "requires Re z > 0" });
    }
    let (v, err) = bessel_k_complex_raw(nu, z);
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(SpecFunError::Overflow { func: "bessel_k", arg: z.norm() });
    }
    Ok(ComplexValue { re: v.re, im: v.im, abs_err: err })
}
