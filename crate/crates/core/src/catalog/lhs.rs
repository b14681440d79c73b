//! Left sides that need more than a single routed quadrature: products of a
//! linear-phase and a square-root-phase Bessel factor, reciprocal arguments,
//! and the complex-K and Struve integrands.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;

use super::{LhsError, ParamPoint};
use crate::quad::{
    integrate_chirp_tail, integrate_entry, integrate_finite, integrate_oscillatory_tail, BesselKind, ChirpFactor,
    Interval, OscillationSpec, QuadResult, DEFAULT_MAX_EVALS,
};
use crate::specfun::{bessel_k_complex_raw, jv, kv, struve_hv, struve_k_raw, yv};

fn eval(f: ChirpFactor, x: f64) -> f64 {
    match f.kind {
        BesselKind::J => jv(f.order, x),
        BesselKind::Y => yv(f.order, x),
    }
}

fn factor(kind: BesselKind, order: f64, scale: f64) -> ChirpFactor {
    ChirpFactor { kind, order, scale }
}

/// Start of the chirp tail: both phases are monotone and the kernels are in
/// their oscillating regime beyond this point.
fn chirp_start(lin: ChirpFactor, sq: ChirpFactor) -> f64 {
    let (w, k) = (lin.scale, sq.scale);
    (k / w).powi(2).max(8.0 / w).max((4.0 / k).powi(2))
}

/// ∫₀^{s1} g(s) ds with s = u², which smooths √s behaviour at the origin.
fn head_sqrt<F: Fn(f64) -> f64>(g: F, s1: f64, tol: f64) -> Result<QuadResult, LhsError> {
    let h = |u: f64| 2.0 * u * g(u * u);
    Ok(integrate_finite(h, Interval::segment(0.0, s1.sqrt()), tol)?)
}

/// ∫₀^∞ amp(s)·C(ω s)·D(κ√s) ds.
fn chirp_product<A: Fn(f64) -> f64>(
    amp: A,
    lin: ChirpFactor,
    sq: ChirpFactor,
    tol: f64,
) -> Result<QuadResult, LhsError> {
    let s0 = chirp_start(lin, sq);
    let head = head_sqrt(|s| amp(s) * eval(lin, lin.scale * s) * eval(sq, sq.scale * s.sqrt()), s0, 0.5 * tol)?;
    let tail = integrate_chirp_tail(&amp, lin, sq, s0, 0.5 * tol, DEFAULT_MAX_EVALS)?;
    Ok(head.combine(&tail))
}

/// ∫₀^∞ J_μ(cz) J_μ(1/(4c)) dc, split at c = 1; the inner piece becomes a
/// tail in u = 1/(4c).
fn reciprocal(mu: f64, z: f64, tol: f64) -> Result<QuadResult, LhsError> {
    let inner = integrate_oscillatory_tail(
        |u: f64| jv(mu, z / (4.0 * u)) / (4.0 * u * u),
        OscillationSpec::new(mu, 1.0),
        0.25,
        0.5 * tol,
    )?;
    let outer = integrate_oscillatory_tail(|c: f64| jv(mu, 0.25 / c), OscillationSpec::new(mu, z), 1.0, 0.5 * tol)?;
    Ok(inner.combine(&outer))
}

pub(super) fn t14(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (nu, z) = (p.get("nu"), p.get("z"));
    chirp_product(|_| 1.0, factor(BesselKind::J, nu, z), factor(BesselKind::J, 2.0 * nu, 2.0), tol)
}

/// c·[e^{iφ}K_{2ν}(2e^{iπ/4}√c) + e^{−iφ}K_{2ν}(2e^{−iπ/4}√c)], φ = (ν+1)π/2.
pub(super) fn t15_bracket(nu: f64, c: f64) -> Complex64 {
    if c == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let phi = (nu + 1.0) * FRAC_PI_2;
    let w = Complex64::from_polar(2.0 * c.sqrt(), FRAC_PI_4);
    let (k1, _) = bessel_k_complex_raw(2.0 * nu, w);
    let (k2, _) = bessel_k_complex_raw(2.0 * nu, w.conj());
    c * (Complex64::from_polar(1.0, phi) * k1 + Complex64::from_polar(1.0, -phi) * k2)
}

pub(super) fn t15(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (nu, z) = (p.get("nu"), p.get("z"));
    let osc = Some(OscillationSpec::new(nu, z));
    let re = integrate_entry(|c| t15_bracket(nu, c).re, Interval::full_half_line(), osc, tol)?;
    let im = integrate_entry(|c| t15_bracket(nu, c).im, Interval::full_half_line(), osc, tol)?;
    let bound = tol * (1.0 + re.value.abs());
    if im.value.abs() > bound.max(im.abs_err) {
        return Err(LhsError::ImaginaryResidue { im: im.value, tol: bound });
    }
    Ok(re)
}

pub(super) fn t16(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (nu, z) = (p.get("nu"), p.get("z"));
    let k_part = integrate_entry(
        |c: f64| if c > 0.0 { kv(2.0 * nu, 2.0 * c.sqrt()) } else { 0.0 },
        Interval::full_half_line(),
        Some(OscillationSpec::new(nu, z)),
        0.5 * tol,
    )?;
    let y_part = chirp_product(|_| 1.0, factor(BesselKind::J, nu, z), factor(BesselKind::Y, 2.0 * nu, 2.0), 0.5 * tol)?;
    Ok(k_part.combine(&y_part.scale(-FRAC_PI_2)))
}

pub(super) fn t17a(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (nu, z) = (p.get("nu"), p.get("z"));
    chirp_product(|_| 2.0, factor(BesselKind::J, nu, 1.0), factor(BesselKind::J, 2.0 * nu, 2.0 * z), tol)
}

pub(super) fn t17b(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    reciprocal(p.get("mu"), p.get("z"), tol)
}

pub(super) fn t18a(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    reciprocal(0.5 * p.get("nu"), p.get("z"), tol)
}

pub(super) fn t18b(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (mu, z) = (p.get("mu"), p.get("z"));
    chirp_product(|_| 2.0, factor(BesselKind::J, 0.5 * mu, 1.0), factor(BesselKind::J, mu, 2.0 * z), tol)
}

pub(super) fn t19(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (nu, x) = (p.get("nu"), p.get("x"));
    chirp_product(
        |s: f64| 0.5 * s.sqrt(),
        factor(BesselKind::J, nu + 0.5, 1.0),
        factor(BesselKind::J, 2.0 * nu, x),
        tol,
    )
}

pub(super) fn t20(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (nu, x) = (p.get("nu"), p.get("x"));
    chirp_product(
        |s: f64| 0.5 * s.sqrt(),
        factor(BesselKind::J, nu - 0.5, 1.0),
        factor(BesselKind::J, 2.0 * nu, x),
        tol,
    )
}

/// 2∫₀^∞ J_ν(2z√s) H_{ν/2}(s) ds. Past the head the Struve function is split
/// as Y + K: the Y part is a chirp product, the K part is smooth and goes
/// back to c = 2√s with a plain J_ν(cz) kernel.
pub(super) fn t21(p: &ParamPoint, tol: f64) -> Result<QuadResult, LhsError> {
    let (nu, z) = (p.get("nu"), p.get("z"));
    let lin = factor(BesselKind::Y, 0.5 * nu, 1.0);
    let sq = factor(BesselKind::J, nu, 2.0 * z);
    let s0 = chirp_start(lin, sq);
    let third = tol / 3.0;
    let head = head_sqrt(|s| 2.0 * jv(nu, 2.0 * z * s.sqrt()) * struve_hv(0.5 * nu, s), s0, third)?;
    let y_tail = integrate_chirp_tail(&|_| 2.0, lin, sq, s0, third, DEFAULT_MAX_EVALS)?;
    let k_tail = integrate_oscillatory_tail(
        |c: f64| c * struve_k_raw(0.5 * nu, 0.25 * c * c),
        OscillationSpec::new(nu, z),
        2.0 * s0.sqrt(),
        third,
    )?;
    Ok(head.combine(&y_tail).combine(&k_tail))
}
