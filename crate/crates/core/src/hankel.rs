//! Forward and inverse Hankel transforms, the admissibility test
//! ∫₀^∞ √x |F(x)| dx < ∞, and the numerical round trip F → G → F.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::quad::{
    integrate_entry_with, integrate_finite_with, Interval, OscillationSpec, QuadError, QuadResult, DEFAULT_MAX_EVALS,
};
use crate::specfun::Order;

/// Threshold on envelope exponents: √x·x^p is integrable at 0 iff p > −3/2
/// and at ∞ iff p < −3/2.
pub const CRITICAL_EXPONENT: f64 = -1.5;
/// Half-width of the band around the threshold where a fitted slope is not trusted.
pub const INCONCLUSIVE_BAND: f64 = 0.05;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A function F on (0, ∞) with optional knowledge of its endpoint behaviour.
#[derive(Clone)]
pub struct SeedFunction {
    pub name: String,
    pub eval: RealFn,
    /// F(x) = Θ(x^{p₀}) as x → 0.
    pub decay_at_zero: Option<f64>,
    /// Power of the amplitude envelope as x → ∞.
    pub decay_at_inf: Option<f64>,
    pub oscillatory_envelope: bool,
    /// Points where F jumps.
    pub jumps: Vec<f64>,
    /// F vanishes beyond this point.
    pub support_end: Option<f64>,
}

impl fmt::Debug for SeedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeedFunction")
            .field("name", &self.name)
            .field("decay_at_zero", &self.decay_at_zero)
            .field("decay_at_inf", &self.decay_at_inf)
            .field("oscillatory_envelope", &self.oscillatory_envelope)
            .field("jumps", &self.jumps)
            .field("support_end", &self.support_end)
            .finish()
    }
}

impl SeedFunction {
    pub fn new(name: impl Into<String>, eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        SeedFunction {
            name: name.into(),
            eval: Arc::new(eval),
            decay_at_zero: None,
            decay_at_inf: None,
            oscillatory_envelope: false,
            jumps: Vec::new(),
            support_end: None,
        }
    }
    pub fn with_exponents(mut self, at_zero: f64, at_inf: f64) -> Self {
        self.decay_at_zero = Some(at_zero);
        self.decay_at_inf = Some(at_inf);
        self
    }
    pub fn oscillatory(mut self) -> Self {
        self.oscillatory_envelope = true;
        self
    }
    /// F supported on (0, end] with a jump at `end`.
    pub fn truncated_at(mut self, end: f64) -> Self {
        self.support_end = Some(end);
        self.jumps.push(end);
        self
    }
    pub fn at(&self, x: f64) -> f64 {
        (self.eval)(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Endpoint {
    Zero,
    Infinity,
    Both,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Endpoint::Zero => "zero",
            Endpoint::Infinity => "infinity",
            Endpoint::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionVerdict {
    pub admissible: bool,
    pub zero_exponent: f64,
    pub inf_exponent: f64,
    pub failing_endpoint: Option<Endpoint>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HankelError {
    #[error("seed `{seed}` is not admissible (fails at {endpoint}; exponents {zero_exponent:.3} at 0, {inf_exponent:.3} at ∞)")]
    Inadmissible { seed: String, endpoint: Endpoint, zero_exponent: f64, inf_exponent: f64 },
    #[error("admissibility of `{seed}` is inconclusive: fitted exponent {exponent:.4} at {endpoint} is within {band} of −3/2")]
    Inconclusive { seed: String, endpoint: Endpoint, exponent: f64, band: f64 },
    #[error("order {0} is below −1/2")]
    Order(f64),
    #[error("envelope fit failed at {0}: F is not finite on the sample range")]
    Fit(Endpoint),
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// Amplitude envelope of |F| near x: the maximum over a short geometric window
/// when F oscillates, the plain value otherwise.
fn envelope(seed: &SeedFunction, x: f64) -> f64 {
    if !seed.oscillatory_envelope {
        return seed.at(x).abs();
    }
    const SAMPLES: usize = 257;
    (0..SAMPLES).map(|i| seed.at(x * (1.0 + 0.05 * i as f64 / (SAMPLES - 1) as f64)).abs()).fold(0.0, f64::max)
}

/// Least-squares slope of log envelope against log x on [lo, hi].
fn fit_slope(seed: &SeedFunction, lo: f64, hi: f64, at: Endpoint) -> Result<f64, HankelError> {
    const POINTS: usize = 17;
    let (l0, l1) = (lo.ln(), hi.ln());
    let mut pts = Vec::with_capacity(POINTS);
    for i in 0..POINTS {
        let lx = l0 + (l1 - l0) * i as f64 / (POINTS - 1) as f64;
        let e = envelope(seed, lx.exp());
        if e == 0.0 {
            // underflow: faster than any power
            return Ok(match at {
                Endpoint::Zero => f64::INFINITY,
                _ => f64::NEG_INFINITY,
            });
        }
        if !e.is_finite() {
            return Err(HankelError::Fit(at));
        }
        pts.push((lx, e.ln()));
    }
    let n = POINTS as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Decide whether √x |F(x)| is integrable on (0, ∞).
pub fn check_condition(seed: &SeedFunction) -> Result<ConditionVerdict, HankelError> {
    let exponent = |declared: Option<f64>, lo: f64, hi: f64, at: Endpoint| -> Result<f64, HankelError> {
        if let Some(p) = declared {
            return Ok(p);
        }
        let p = fit_slope(seed, lo, hi, at)?;
        if (p - CRITICAL_EXPONENT).abs() < INCONCLUSIVE_BAND {
            return Err(HankelError::Inconclusive {
                seed: seed.name.clone(),
                endpoint: at,
                exponent: p,
                band: INCONCLUSIVE_BAND,
            });
        }
        Ok(p)
    };
    let p0 = exponent(seed.decay_at_zero, 1e-6, 1e-4, Endpoint::Zero)?;
    let pinf = match seed.support_end {
        // compact support: nothing to integrate at infinity
        Some(_) => seed.decay_at_inf.unwrap_or(f64::NEG_INFINITY),
        None => exponent(seed.decay_at_inf, 1e4, 1e6, Endpoint::Infinity)?,
    };
    let zero_ok = p0 > CRITICAL_EXPONENT;
    let inf_ok = pinf < CRITICAL_EXPONENT;
    let failing_endpoint = match (zero_ok, inf_ok) {
        (true, true) => None,
        (false, true) => Some(Endpoint::Zero),
        (true, false) => Some(Endpoint::Infinity),
        (false, false) => Some(Endpoint::Both),
    };
    Ok(ConditionVerdict {
        admissible: failing_endpoint.is_none(),
        zero_exponent: p0,
        inf_exponent: pinf,
        failing_endpoint,
    })
}

fn require_admissible(seed: &SeedFunction) -> Result<(), HankelError> {
    let v = check_condition(seed)?;
    match v.failing_endpoint {
        None => Ok(()),
        Some(endpoint) => Err(HankelError::Inadmissible {
            seed: seed.name.clone(),
            endpoint,
            zero_exponent: v.zero_exponent,
            inf_exponent: v.inf_exponent,
        }),
    }
}

fn check_order(nu: Order) -> Result<(), HankelError> {
    if nu.0 >= -0.5 && nu.0.is_finite() {
        Ok(())
    } else {
        Err(HankelError::Order(nu.0))
    }
}

/// G(b) = ∫₀^∞ x F(x) J_ν(bx) dx, after checking admissibility.
pub fn hankel_forward(seed: &SeedFunction, nu: Order, b: f64, tol: f64) -> Result<QuadResult, HankelError> {
    require_admissible(seed)?;
    hankel_forward_unchecked(seed, nu, b, tol)
}

/// As [`hankel_forward`] for a seed whose integrability the caller vouches for.
pub fn hankel_forward_unchecked(seed: &SeedFunction, nu: Order, b: f64, tol: f64) -> Result<QuadResult, HankelError> {
    check_order(nu)?;
    if !(b > 0.0) {
        return Err(QuadError::InvalidInterval(format!("transform variable must be positive, got {b}")).into());
    }
    let f = |x: f64| x * seed.at(x);
    let osc = OscillationSpec::new(nu.0, b);
    if let Some(end) = seed.support_end {
        let mut breaks: Vec<f64> = seed.jumps.iter().copied().filter(|&j| j > 0.0 && j < end).collect();
        breaks.sort_by(f64::total_cmp);
        breaks.insert(0, 0.0);
        breaks.push(end);
        let g = |x: f64| f(x) * crate::specfun::jv(nu.0, b * x);
        let share = tol / (breaks.len() - 1) as f64;
        let mut total = QuadResult::exact(0.0);
        for w in breaks.windows(2) {
            let r = integrate_finite_with(&g, Interval::segment(w[0], w[1]), share, DEFAULT_MAX_EVALS)?;
            total = total.combine(&r);
        }
        return Ok(total);
    }
    Ok(integrate_entry_with(&f, Interval::full_half_line(), Some(osc), tol, DEFAULT_MAX_EVALS)?)
}

/// ∫₀^∞ u G(u) J_ν(ur) du.
pub fn hankel_inverse<G: Fn(f64) -> f64>(g: G, nu: Order, r: f64, tol: f64) -> Result<QuadResult, HankelError> {
    check_order(nu)?;
    if !(r > 0.0) {
        return Err(QuadError::InvalidInterval(format!("radius must be positive, got {r}")).into());
    }
    let f = |u: f64| u * g(u);
    Ok(integrate_entry_with(
        &f,
        Interval::full_half_line(),
        Some(OscillationSpec::new(nu.0, r)),
        tol,
        DEFAULT_MAX_EVALS,
    )?)
}

/// One grid point of a round trip.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundtripPoint {
    pub r: f64,
    /// ½(F(r+0) + F(r−0)).
    pub expected: f64,
    pub recovered: Result<QuadResult, HankelError>,
}

impl RoundtripPoint {
    pub fn residual(&self) -> Option<f64> {
        self.recovered.as_ref().ok().map(|q| (q.value - self.expected).abs())
    }
}

/// Recover F on `r_grid` by inverting its forward transform.
pub fn dual_roundtrip(
    seed: &SeedFunction,
    nu: Order,
    r_grid: &[f64],
    tol: f64,
) -> Result<Vec<RoundtripPoint>, HankelError> {
    require_admissible(seed)?;
    check_order(nu)?;
    let inner_tol = 1e-3 * tol;
    let points = r_grid
        .par_iter()
        .map(|&r| {
            let expected = if seed.jumps.contains(&r) {
                let h = 1e-13 * r;
                0.5 * (seed.at(r - h) + if seed.support_end.is_some_and(|e| r + h > e) { 0.0 } else { seed.at(r + h) })
            } else {
                seed.at(r)
            };
            let g = |b: f64| match hankel_forward_unchecked(seed, nu, b, inner_tol) {
                Ok(q) => q.value,
                Err(_) => f64::NAN,
            };
            RoundtripPoint { r, expected, recovered: hankel_inverse(g, nu, r, tol) }
        })
        .collect();
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian() -> SeedFunction {
        SeedFunction::new("gaussian", |x: f64| (-0.5 * x * x).exp())
    }

    #[test]
    fn exponential_is_admissible() {
        let v = check_condition(&SeedFunction::new("exp", |x: f64| (-x).exp())).unwrap();
        assert!(v.admissible);
        assert!(v.zero_exponent.abs() < 1e-3);
    }

    #[test]
    fn power_law_slopes() {
        let v = check_condition(&SeedFunction::new("pow", |x: f64| x.powf(-0.5) / (1.0 + x * x))).unwrap();
        assert!((v.zero_exponent + 0.5).abs() < 1e-3);
        assert!((v.inf_exponent + 2.5).abs() < 1e-3);
        assert!(v.admissible);
    }

    #[test]
    fn declared_exponents_win() {
        let s = SeedFunction::new("decl", |x: f64| x.powi(-3)).with_exponents(0.0, -2.0);
        assert!(check_condition(&s).unwrap().admissible);
    }

    #[test]
    fn band_is_inconclusive() {
        let s = SeedFunction::new("edge", |x: f64| x.powf(-1.5));
        assert!(matches!(check_condition(&s), Err(HankelError::Inconclusive { .. })));
    }

    #[test]
    fn gaussian_is_self_reciprocal() {
        let g = hankel_forward(&gaussian(), Order(0.0), 1.0, 1e-10).unwrap();
        assert!((g.value - (-0.5f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn inadmissible_seed_is_rejected() {
        let s = SeedFunction::new("bad", |x: f64| 1.0 / x);
        assert!(matches!(hankel_forward(&s, Order(0.0), 1.0, 1e-8), Err(HankelError::Inadmissible { .. })));
    }

    #[test]
    fn truncated_power_forward() {
        // ∫₀^1 x·x·J₁(bx) dx = J₂(b)/b
        let s = SeedFunction::new("trunc", |x: f64| if x < 1.0 { x } else { 0.0 }).truncated_at(1.0);
        let g = hankel_forward(&s, Order(1.0), 0.5, 1e-12).unwrap();
        let exact = crate::specfun::jv(2.0, 0.5) / 0.5;
        assert!((g.value - exact).abs() < 1e-13);
    }
}
