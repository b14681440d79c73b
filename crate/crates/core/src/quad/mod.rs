//! Numerical integration: adaptive Gauss–Kronrod on finite ranges with
//! endpoint substitutions, and lobe-partitioned tails with epsilon
//! acceleration for Bessel kernels on [L, ∞).

mod extrap;
mod gk;
mod tail;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::specfun::{jv, Order};

pub use extrap::{levin_u, wynn_epsilon};
pub use tail::{
    bessel_zero_points, integrate_chirp_tail, integrate_partitioned, BesselKind, ChirpFactor, LOBES_PER_WINDOW, WINDOWS,
};

/// Evaluation budget per integration call.
pub const DEFAULT_MAX_EVALS: usize = 2_000_000;
/// Default tolerance for integrands that decay absolutely.
pub const TOL_DECAYING: f64 = 1e-10;
/// Default tolerance for conditionally convergent oscillatory tails.
pub const TOL_OSCILLATORY: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum IntervalKind {
    FiniteFromZero { upper: f64 },
    Tail { lower: f64 },
    FullHalfLine,
    FiniteSegment { lower: f64, upper: f64 },
}

/// Known endpoint behaviour that calls for a change of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingularityHint {
    None,
    InverseSqrtAtUpper,
    InverseSqrtAtLower,
    /// Algebraic (x − L)^p (U − x)^q behaviour at both ends, p, q > −1.
    InverseSqrtAtBoth,
    LogAtUpper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub kind: IntervalKind,
    pub singularity_hint: SingularityHint,
}

impl Interval {
    pub fn finite_from_zero(upper: f64) -> Self {
        Self::new(IntervalKind::FiniteFromZero { upper })
    }
    pub fn tail(lower: f64) -> Self {
        Self::new(IntervalKind::Tail { lower })
    }
    pub fn full_half_line() -> Self {
        Self::new(IntervalKind::FullHalfLine)
    }
    pub fn segment(lower: f64, upper: f64) -> Self {
        Self::new(IntervalKind::FiniteSegment { lower, upper })
    }
    fn new(kind: IntervalKind) -> Self {
        Interval { kind, singularity_hint: SingularityHint::None }
    }
    pub fn with_hint(mut self, hint: SingularityHint) -> Self {
        self.singularity_hint = hint;
        self
    }

    /// (lower, upper) with `upper = ∞` for unbounded kinds.
    pub fn bounds(&self) -> (f64, f64) {
        match self.kind {
            IntervalKind::FiniteFromZero { upper } => (0.0, upper),
            IntervalKind::Tail { lower } => (lower, f64::INFINITY),
            IntervalKind::FullHalfLine => (0.0, f64::INFINITY),
            IntervalKind::FiniteSegment { lower, upper } => (lower, upper),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.bounds().1.is_finite()
    }

    pub fn validate(&self) -> Result<(), QuadError> {
        let (lo, hi) = self.bounds();
        let ok = match self.kind {
            IntervalKind::FiniteFromZero { upper } => upper > 0.0 && upper.is_finite(),
            IntervalKind::Tail { lower } => lower >= 0.0 && lower.is_finite(),
            IntervalKind::FullHalfLine => true,
            IntervalKind::FiniteSegment { lower, upper } => lower >= 0.0 && upper > lower && upper.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(QuadError::InvalidInterval(format!("bad bounds [{lo}, {hi}]")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadResult {
    pub fn exact(value: f64) -> Self {
        QuadResult { value, abs_err: 0.0, evaluations: 0, converged: true }
    }

    /// Sum of two pieces of one integral.
    pub fn combine(&self, other: &QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            abs_err: self.abs_err + other.abs_err,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }

    pub fn scale(&self, k: f64) -> QuadResult {
        QuadResult { value: self.value * k, abs_err: self.abs_err * k.abs(), ..*self }
    }
}

/// Bessel kernel J_ν(frequency·t) multiplying the smooth part of an integrand.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillationSpec {
    pub bessel_order: Order,
    pub frequency: f64,
}

impl OscillationSpec {
    pub fn new(order: f64, frequency: f64) -> Self {
        OscillationSpec { bessel_order: Order(order), frequency }
    }
    fn kernel(&self, t: f64) -> f64 {
        jv(self.bessel_order.0, self.frequency * t)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("integrand is not finite at x = {at}")]
    NonFinite { at: f64 },
    #[error("no convergence after {} evaluations (partial value {}, error {})", partial.evaluations, partial.value, partial.abs_err)]
    NoConvergence { partial: QuadResult },
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.0)
    }
}

fn finalize(mut r: QuadResult, tol: f64) -> QuadResult {
    r.converged = r.converged && r.abs_err <= tol * (1.0 + r.value.abs());
    r
}

/// ∫ f over a finite interval to `tol·(1+|I|)`.
pub fn integrate_finite<F: Fn(f64) -> f64>(f: F, seg: Interval, tol: f64) -> Result<QuadResult, QuadError> {
    integrate_finite_with(&f, seg, tol, DEFAULT_MAX_EVALS)
}

pub fn integrate_finite_with<F: Fn(f64) -> f64>(
    f: &F,
    seg: Interval,
    tol: f64,
    max_evals: usize,
) -> Result<QuadResult, QuadError> {
    seg.validate()?;
    if !seg.is_finite() {
        return Err(QuadError::InvalidInterval("integrate_finite needs finite bounds".into()));
    }
    if !(tol > 0.0) {
        return Err(QuadError::InvalidInterval(format!("tolerance must be positive, got {tol}")));
    }
    let (lo, hi) = seg.bounds();
    let w = hi - lo;
    // a mapped node that rounds onto an endpoint sits where the transformed
    // integrand is negligible; skip it rather than evaluate f there
    let inner = |x: f64| if x > lo && x < hi { f(x) } else { 0.0 };
    let f_raw = f;
    let f = &inner;
    let r = match seg.singularity_hint {
        SingularityHint::None => gk::adaptive(f_raw, &[lo, hi], 0.0, tol, max_evals)?,
        SingularityHint::InverseSqrtAtUpper => {
            let g = |th: f64| f(lo + w * th.sin()) * w * th.cos();
            gk::adaptive(&g, &[0.0, 0.5 * PI], 0.0, tol, max_evals)?
        }
        SingularityHint::InverseSqrtAtLower if lo > 0.0 => {
            let g = |t: f64| f(lo * t.cosh()) * lo * t.sinh();
            gk::adaptive(&g, &[0.0, (hi / lo).acosh()], 0.0, tol, max_evals)?
        }
        SingularityHint::InverseSqrtAtLower => {
            let g = |th: f64| f(hi - w * th.cos()) * w * th.sin();
            gk::adaptive(&g, &[0.0, 0.5 * PI], 0.0, tol, max_evals)?
        }
        SingularityHint::InverseSqrtAtBoth => {
            let (m, r) = (0.5 * (lo + hi), 0.5 * w);
            let g = |th: f64| f(m - r * th.cos()) * r * th.sin();
            gk::adaptive(&g, &[0.0, PI], 0.0, tol, max_evals)?
        }
        SingularityHint::LogAtUpper => {
            // geometric grading towards the upper end
            let mut breaks = vec![lo];
            let mut d = 0.5 * w;
            while d > 1e-12 * w {
                breaks.push(hi - d);
                d *= 0.25;
            }
            breaks.push(hi);
            gk::adaptive(f_raw, &breaks, 0.0, tol, max_evals)?
        }
    };
    Ok(finalize(r, tol))
}

/// ∫_{lower}^∞ f_smooth(t)·J_ν(ωt) dt by partitioning at the zeros of the kernel.
pub fn integrate_oscillatory_tail<F: Fn(f64) -> f64>(
    f_smooth: F,
    osc: OscillationSpec,
    lower: f64,
    tol: f64,
) -> Result<QuadResult, QuadError> {
    integrate_oscillatory_tail_with(&f_smooth, osc, lower, tol, DEFAULT_MAX_EVALS)
}

pub fn integrate_oscillatory_tail_with<F: Fn(f64) -> f64>(
    f_smooth: &F,
    osc: OscillationSpec,
    lower: f64,
    tol: f64,
    max_evals: usize,
) -> Result<QuadResult, QuadError> {
    if !(osc.frequency > 0.0) || !osc.frequency.is_finite() {
        return Err(QuadError::InvalidInterval(format!("frequency must be positive, got {}", osc.frequency)));
    }
    if !(lower >= 0.0) || !lower.is_finite() {
        return Err(QuadError::InvalidInterval(format!("bad tail start {lower}")));
    }
    let g = |t: f64| f_smooth(t) * osc.kernel(t);
    let pts = bessel_zero_points(osc.bessel_order.0, osc.frequency, lower);
    let r = integrate_partitioned(&g, pts, tol, max_evals)?;
    Ok(finalize(r, tol))
}

/// ∫_{lower}^∞ f for absolutely integrable, non-oscillating f, via
/// t = lower + u/(1 − u).
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: &F,
    lower: f64,
    tol: f64,
    max_evals: usize,
) -> Result<QuadResult, QuadError> {
    let g = |u: f64| {
        let d = 1.0 - u;
        f(lower + u / d) / (d * d)
    };
    let r = gk::adaptive(&g, &[0.0, 0.5, 1.0], 0.0, tol, max_evals)?;
    Ok(finalize(r, tol))
}

/// Route an integrand to the right integrator. With `osc` present, `f` is the
/// smooth factor and the kernel J_ν(ωt) is applied here.
pub fn integrate_entry<F: Fn(f64) -> f64>(
    f: F,
    iv: Interval,
    osc: Option<OscillationSpec>,
    tol: f64,
) -> Result<QuadResult, QuadError> {
    integrate_entry_with(&f, iv, osc, tol, DEFAULT_MAX_EVALS)
}

pub fn integrate_entry_with<F: Fn(f64) -> f64>(
    f: &F,
    iv: Interval,
    osc: Option<OscillationSpec>,
    tol: f64,
    max_evals: usize,
) -> Result<QuadResult, QuadError> {
    iv.validate()?;
    if iv.is_finite() {
        return match osc {
            Some(o) => integrate_finite_with(&|t: f64| f(t) * o.kernel(t), iv, tol, max_evals),
            None => integrate_finite_with(f, iv, tol, max_evals),
        };
    }
    let (lower, _) = iv.bounds();
    let Some(o) = osc else {
        return match iv.singularity_hint {
            SingularityHint::InverseSqrtAtLower if lower > 0.0 => {
                let split = 2.0 * lower;
                let head = integrate_finite_with(
                    f,
                    Interval::segment(lower, split).with_hint(iv.singularity_hint),
                    tol,
                    max_evals,
                )?;
                let tail = integrate_semi_infinite(f, split, tol, max_evals)?;
                Ok(finalize(head.combine(&tail), 2.0 * tol))
            }
            _ => integrate_semi_infinite(f, lower, tol, max_evals),
        };
    };
    let g = |t: f64| f(t) * o.kernel(t);
    let split = match iv.kind {
        IntervalKind::FullHalfLine => (10.0 / o.frequency).max(1.0),
        // leave about one period in the head so the substitution covers the singular end
        _ if iv.singularity_hint == SingularityHint::InverseSqrtAtLower => lower + PI / o.frequency,
        _ => lower,
    };
    let attempt = |share: f64| -> Result<QuadResult, QuadError> {
        let mut total = QuadResult::exact(0.0);
        if split > lower {
            let head_iv = Interval::segment(lower, split).with_hint(match iv.kind {
                IntervalKind::FullHalfLine => SingularityHint::None,
                _ => iv.singularity_hint,
            });
            total = integrate_finite_with(&g, head_iv, share * tol, max_evals)?;
        }
        let tail = integrate_oscillatory_tail_with(f, o, split, share * tol, max_evals)?;
        Ok(finalize(total.combine(&tail), tol))
    };
    let r = attempt(0.5)?;
    if r.converged {
        return Ok(r);
    }
    // head and tail each met their share but of opposite sign the sum can
    // still miss the target relative to the total; tighten once
    attempt(0.2).or(Ok(r))
}
