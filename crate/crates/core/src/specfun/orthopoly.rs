//! Jacobi and Chebyshev polynomials.

use super::{Result, SpecFunError, SpecialValue};

const EPS: f64 = f64::EPSILON;

/// Raw Jacobi polynomial P_n^{(α,β)}(x) by the three-term recurrence.
pub fn jacobi_p_raw(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    jacobi_with_bound(n, alpha, beta, x).0
}

// returns the value and the same recurrence run on absolute values
fn jacobi_with_bound(n: u32, a: f64, b: f64, x: f64) -> (f64, f64) {
    let p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    if n == 0 {
        return (1.0, 1.0);
    }
    let q1 = (a + 1.0).abs() + 0.5 * ((a + b + 2.0) * (x - 1.0)).abs();
    if n == 1 {
        return (p1, q1);
    }
    let (mut pm2, mut pm1) = (1.0, p1);
    let (mut qm2, mut qm1) = (1.0, q1);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let c0 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let p = (c1 * pm1 - c2 * pm2) / c0;
        let q = ((s - 1.0) * ((s * (s - 2.0) * x).abs() + (a * a - b * b).abs()) * qm1 + c2.abs() * qm2) / c0.abs();
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
    }
    (pm1, qm1)
}

/// Jacobi polynomial P_n^{(α,β)}(x).
pub fn jacobi_p(n: u32, alpha: f64, beta: f64, x: f64) -> SpecialValue {
    let (v, bound) = jacobi_with_bound(n, alpha, beta, x);
    SpecialValue::new(v, 4.0 * (n as f64 + 1.0) * EPS * bound)
}

/// Chebyshev polynomial of the first kind T_n(x), |x| ≤ 1.
pub fn chebyshev_t(n: u32, x: f64) -> Result<SpecialValue> {
    if !(x.abs() <= 1.0) {
        return Err(SpecFunError::Domain { func: "chebyshev_t", arg: x, reason: "requires |x| ≤ 1" });
    }
    let v = chebyshev_t_raw(n, x);
    let nf = n as f64 + 1.0;
    Ok(SpecialValue::new(v, 2.0 * nf * nf * EPS))
}

/// Raw T_n(x) by the recurrence; valid for any real x.
pub fn chebyshev_t_raw(n: u32, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut t0, mut t1) = (1.0, x);
            for _ in 2..=n {
                let t2 = 2.0 * x * t1 - t0;
                t0 = t1;
                t1 = t2;
            }
            t1
        }
    }
}
