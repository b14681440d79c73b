//! Special functions needed by the dual-integral catalog.
//!
//! Every public evaluator comes in two flavours: a checked form returning a
//! [`SpecialValue`] (value plus an absolute-error estimate) and a raw `f64`
//! form used inside integrands, which returns NaN outside its domain.

mod bessel;
mod complex_k;
mod gamma;
mod hyper;
mod legendre;
mod orthopoly;
mod struve;
mod zeros;

use thiserror::Error;

pub use bessel::{
    bessel_i, bessel_i_scaled, bessel_j, bessel_k, bessel_k_real, bessel_k_scaled, bessel_y, hankel1, iv, jv, jy, kv,
    yv,
};
pub use complex_k::{bessel_k_complex, bessel_k_complex_raw};
pub use gamma::{digamma, gamma_fn, gamma_raw, ln_gamma, rgamma};
pub use hyper::{hyp2f1, hyp2f1_raw, hyp2f1_terminating};
pub use legendre::{legendre_p_negorder, legendre_q_negorder, plegendre, plegendre_sq, qlegendre, qlegendre_sq};
pub use orthopoly::{chebyshev_t, chebyshev_t_raw, jacobi_p, jacobi_p_raw};
pub use struve::{struve_h, struve_hv, struve_k_raw};
pub use zeros::{bessel_zero, first_zero_index_after};

pub use num_complex::Complex64;

/// A computed function value together with an estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialValue {
    pub value: f64,
    pub abs_err: f64,
}

impl SpecialValue {
    pub fn new(value: f64, abs_err: f64) -> Self {
        debug_assert!(abs_err >= 0.0 || abs_err.is_nan());
        SpecialValue { value, abs_err }
    }

    /// Value with an error estimate of `ulps` units of relative rounding.
    pub(crate) fn with_rel(value: f64, ulps: f64) -> Self {
        SpecialValue::new(value, ulps * f64::EPSILON * value.abs())
    }
}

/// A complex function value with an absolute-error estimate on its modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
    pub abs_err: f64,
}

impl ComplexValue {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Order (or degree) parameter of a Bessel or Legendre function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(pub f64);

impl Order {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<f64> for Order {
    fn from(nu: f64) -> Self {
        Order(nu)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("{func}: argument {arg} is outside the domain ({reason})")]
    Domain { func: &'static str, arg: f64, reason: &'static str },
    #[error("{func}: pole at {at}")]
    Pole { func: &'static str, at: f64 },
    #[error("{func}: result overflows at argument {arg}")]
    Overflow { func: &'static str, arg: f64 },
    #[error("{func}: invalid parameters ({reason})")]
    Parameter { func: &'static str, reason: String },
    #[error("{func}: evaluation did not converge")]
    NoConvergence { func: &'static str },
}

pub type Result<T> = std::result::Result<T, SpecFunError>;

/// sin(pi x) with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x / 2.0).floor();
    // r in [0, 2)
    let (r, sign) = if r >= 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    if r == 0.0 {
        return 0.0;
    }
    let s = if r <= 0.25 {
        (std::f64::consts::PI * r).sin()
    } else if r <= 0.75 {
        (std::f64::consts::PI * (0.5 - r)).cos()
    } else {
        (std::f64::consts::PI * (1.0 - r)).sin()
    };
    sign * s
}

/// cos(pi x) with exact zeros at the half-integers.
pub(crate) fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = (x.abs()) % 2.0;
    if r == 0.5 || r == 1.5 {
        return 0.0;
    }
    sin_pi(x + 0.5)
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}
