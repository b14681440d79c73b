//! Semi-infinite integrals split into lobes and summed with acceleration.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::extrap::{levin_u, wynn_epsilon};
use super::gk::adaptive;
use super::{QuadError, QuadResult};
use crate::specfun::{bessel_zero, first_zero_index_after, hankel1, Order};

/// Lobes accumulated before the epsilon table is restarted.
pub const LOBES_PER_WINDOW: usize = 40;
/// Number of epsilon-table windows tried before giving up.
pub const WINDOWS: usize = 3;
const MIN_LOBES: usize = 6;

/// Integrate `g` over [p₀, ∞) where `points` yields p₀ < p₁ < … and each
/// [p_k, p_{k+1}] holds one lobe. The partial sums are extrapolated with both
/// Wynn's epsilon (alternating lobes) and Levin's u-transform (lobes of one
/// sign decaying like a power); the estimate with the smaller error wins.
pub fn integrate_partitioned<F, I>(g: &F, points: I, tol: f64, max_evals: usize) -> Result<QuadResult, QuadError>
where
    F: Fn(f64) -> f64,
    I: IntoIterator<Item = f64>,
{
    let mut points = points.into_iter();
    let Some(mut a) = points.next() else {
        return Err(QuadError::InvalidInterval("empty partition".into()));
    };
    let lobe_tol = 1e-3 * tol;
    let mut evals = 0;
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut lobe_err = 0.0;
    let mut lobes: Vec<f64> = Vec::new();
    let mut partials: Vec<f64> = Vec::new();
    let mut window_start = 0;
    let mut prev_wynn: Option<f64> = None;
    let mut prev_levin: Option<f64> = None;
    let mut best = QuadResult { value: 0.0, abs_err: f64::INFINITY, evaluations: 0, converged: false };
    for b in points {
        if lobes.len() >= LOBES_PER_WINDOW * WINDOWS {
            break;
        }
        if !(b > a) {
            return Err(QuadError::InvalidInterval(format!("partition not increasing at {b}")));
        }
        let budget = max_evals.saturating_sub(evals);
        let r = adaptive(g, &[a, b], lobe_tol, 1e-13, budget).map_err(|e| match e {
            QuadError::NoConvergence { partial } => QuadError::NoConvergence {
                partial: QuadResult {
                    value: sum + partial.value,
                    abs_err: f64::INFINITY,
                    evaluations: evals + partial.evaluations,
                    converged: false,
                },
            },
            other => other,
        })?;
        evals += r.evaluations;
        sum += r.value;
        abs_sum += r.value.abs();
        lobe_err += r.abs_err;
        lobes.push(r.value);
        partials.push(sum);
        a = b;
        let target = tol * (1.0 + sum.abs());
        let floor = 16.0 * f64::EPSILON * abs_sum + lobe_err;

        let k = lobes.len();
        if k >= 4 {
            // exponentially decaying integrands: stop once the geometric
            // bound on the remainder is negligible
            let l = &lobes[k - 3..];
            if l.iter().all(|&v| v == 0.0) {
                return Ok(QuadResult { value: sum, abs_err: floor, evaluations: evals, converged: true });
            }
            let r1 = (l[1] / l[0]).abs();
            let r2 = (l[2] / l[1]).abs();
            let ratio = r1.max(r2);
            if ratio < 0.5 {
                let rest = l[2].abs() * ratio / (1.0 - ratio);
                if rest <= 0.01 * target {
                    let err = floor + rest;
                    return Ok(QuadResult { value: sum, abs_err: err, evaluations: evals, converged: err <= target });
                }
            }
        }
        if k - window_start >= MIN_LOBES {
            let window = &partials[window_start..];
            let (wv, we) = wynn_epsilon(window);
            let (lv, le) = levin_u(window, &lobes[window_start..], window_start, lobe_err);
            let settle = |prev: Option<f64>, v: f64, e: f64| match prev {
                Some(p) => e.max((v - p).abs()),
                None => f64::INFINITY,
            };
            let candidates = [(wv, settle(prev_wynn, wv, we)), (lv, settle(prev_levin, lv, le))];
            prev_wynn = Some(wv);
            prev_levin = Some(lv);
            let (v, est) = if candidates[1].1 < candidates[0].1 { candidates[1] } else { candidates[0] };
            let err = est + floor;
            if err < best.abs_err {
                best = QuadResult { value: v, abs_err: err, evaluations: evals, converged: false };
            }
            if err <= tol * (1.0 + v.abs()) {
                return Ok(QuadResult { value: v, abs_err: err, evaluations: evals, converged: true });
            }
        }
        if k - window_start >= LOBES_PER_WINDOW {
            window_start = k;
            prev_wynn = None;
            prev_levin = None;
        }
    }
    best.evaluations = evals;
    if !best.abs_err.is_finite() {
        best.value = sum;
    }
    Err(QuadError::NoConvergence { partial: best })
}

/// Lobe boundaries for J_ν(ω t) on [lower, ∞): `lower` and then the
/// scaled zeros j_{ν,k}/ω beyond it.
pub fn bessel_zero_points(nu: f64, frequency: f64, lower: f64) -> impl Iterator<Item = f64> {
    let x0 = lower * frequency;
    let exact = nu >= -0.5;
    let k0 = if exact {
        first_zero_index_after(nu, x0)
    } else {
        // asymptotic zeros (k + ν/2 − 1/4)π
        ((x0 / PI - 0.5 * nu + 0.25).floor() + 1.0).max(1.0) as u32
    };
    std::iter::once(lower).chain((k0..).filter_map(move |k| {
        let z = if exact { bessel_zero(Order(nu), k) } else { (k as f64 + 0.5 * nu - 0.25) * PI };
        let p = z / frequency;
        (p > lower).then_some(p)
    }))
}

/// Which solution of Bessel's equation a chirp factor is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    J,
    Y,
}

/// A Bessel factor C_order(scale·φ(s)) inside a chirp integrand.
#[derive(Debug, Clone, Copy)]
pub struct ChirpFactor {
    pub kind: BesselKind,
    pub order: f64,
    pub scale: f64,
}

impl ChirpFactor {
    fn rotation(&self) -> Complex64 {
        match self.kind {
            BesselKind::J => Complex64::new(1.0, 0.0),
            BesselKind::Y => Complex64::new(0.0, -1.0),
        }
    }
}

/// ∫_{lower}^∞ amp(s)·C_a(ω s)·D_b(κ√s) ds for products of a linear-phase and a
/// square-root-phase Bessel factor.
///
/// With A = H⁽¹⁾_a(ωs) and B = H⁽¹⁾_b(κ√s) the product splits into
/// ½Re(c_A c_B A B) + ½Re(c_A A conj(c_B B)), whose phases are ωs ± κ√s.
/// Each part is partitioned at steps of π in its own phase.
pub fn integrate_chirp_tail<F: Fn(f64) -> f64>(
    amp: &F,
    linear: ChirpFactor,
    sqrt: ChirpFactor,
    lower: f64,
    tol: f64,
    max_evals: usize,
) -> Result<QuadResult, QuadError> {
    let (w, kappa) = (linear.scale, sqrt.scale);
    if !(w > 0.0) || !(kappa > 0.0) || !(lower > 0.0) {
        return Err(QuadError::InvalidInterval("chirp tail needs positive scales and lower bound".into()));
    }
    let ca = linear.rotation();
    let cb = sqrt.rotation();
    let plus = |s: f64| {
        let a = hankel1(linear.order, w * s);
        let b = hankel1(sqrt.order, kappa * s.sqrt());
        0.5 * amp(s) * (ca * cb * a * b).re
    };
    let minus = |s: f64| {
        let a = hankel1(linear.order, w * s);
        let b = hankel1(sqrt.order, kappa * s.sqrt());
        0.5 * amp(s) * (ca * a * (cb * b).conj()).re
    };
    let half_tol = 0.5 * tol;
    let plus_part = integrate_partitioned(&plus, phase_points(w, kappa, lower), half_tol, max_evals)?;

    // the minus phase ωs − κ√s is stationary at √s = κ/(2ω); start its lobes
    // where the phase speed is at least ω/2
    let start = lower.max((kappa / w).powi(2));
    let mut total = plus_part;
    if start > lower {
        let head = adaptive(&minus, &[lower, start], 0.0, 1e-3 * tol, max_evals)?;
        total = total.combine(&head);
    }
    let minus_part = integrate_partitioned(&minus, phase_points(w, -kappa, start), half_tol, max_evals)?;
    Ok(total.combine(&minus_part))
}

/// Points where ωs + κ√s advances by π from its value at `lower`.
fn phase_points(w: f64, kappa: f64, lower: f64) -> impl Iterator<Item = f64> {
    let theta0 = w * lower + kappa * lower.sqrt();
    (0u32..).map(move |k| {
        if k == 0 {
            return lower;
        }
        let theta = theta0 + k as f64 * PI;
        // ω u² + κ u − θ = 0 with u = √s
        let u = 2.0 * theta / (kappa + (kappa * kappa + 4.0 * w * theta).sqrt());
        u * u
    })
}
