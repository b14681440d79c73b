//! Positive zeros j_{ν,k} of J_ν.

use std::f64::consts::PI;

use super::{bessel::jy, Order};

fn j_and_deriv(nu: f64, x: f64) -> (f64, f64) {
    let (j, _, _) = jy(nu, x);
    let (j1, _, _) = jy(nu + 1.0, x);
    (j, nu / x * j - j1)
}

/// McMahon's expansion for large k.
fn mcmahon(nu: f64, k: u32) -> f64 {
    let mu = 4.0 * nu * nu;
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    let b8 = 8.0 * beta;
    let b82 = b8 * b8;
    beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b82)
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8 * b82 * b82)
}

/// Newton iteration kept inside the bracket [lo, hi] where J changes sign.
fn refine(nu: f64, mut lo: f64, mut hi: f64, guess: f64) -> f64 {
    let mut flo = jy(nu, lo).0;
    let mut x = guess.clamp(lo, hi);
    for _ in 0..100 {
        let (f, df) = j_and_deriv(nu, x);
        if f == 0.0 {
            return x;
        }
        if (f > 0.0) == (flo > 0.0) {
            lo = x;
            flo = f;
        } else {
            hi = x;
        }
        let newton = x - f / df;
        let (next, bisected) = if newton > lo && newton < hi {
            (newton, false)
        } else if (newton - x).abs() < 1e-10 * x {
            // within rounding of the bracket ends
            (newton.clamp(lo, hi), false)
        } else {
            (0.5 * (lo + hi), true)
        };
        let step = (next - x).abs();
        x = next;
        if (!bisected && step <= 4.0 * f64::EPSILON * x) || hi - lo <= 2.0 * f64::EPSILON * x {
            break;
        }
    }
    x
}

/// Sign-change scan from the origin; returns the bracket of the k-th zero.
fn scan_bracket(nu: f64, k: u32) -> (f64, f64) {
    let step = 0.5;
    let mut count = 0;
    let mut a = 1e-3;
    let mut fa = jy(nu, a).0;
    loop {
        let b = a + step;
        let fb = jy(nu, b).0;
        if (fa > 0.0) != (fb > 0.0) || fb == 0.0 {
            count += 1;
            if count == k {
                return (a, b);
            }
        }
        a = b;
        fa = fb;
    }
}

fn mcmahon_reliable(nu: f64, k: u32) -> bool {
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    beta > 12.0 && beta > 4.0 * nu.abs()
}

/// The k-th positive zero of J_ν (k ≥ 1, ν ≥ −½); NaN outside that range.
pub fn bessel_zero(nu: Order, k: u32) -> f64 {
    let nu = nu.0;
    if k == 0 || !(nu >= -0.5) || !nu.is_finite() {
        return f64::NAN;
    }
    if nu == 0.5 {
        return k as f64 * PI;
    }
    if nu == -0.5 {
        return (k as f64 - 0.5) * PI;
    }
    if mcmahon_reliable(nu, k) {
        let g = mcmahon(nu, k);
        // consecutive zeros are at least ~2.4 apart for these orders
        refine(nu, g - 1.0, g + 1.0, g)
    } else {
        let (a, b) = scan_bracket(nu, k);
        refine(nu, a, b, 0.5 * (a + b))
    }
}

/// Index of the first zero of J_ν strictly greater than `x`.
pub fn first_zero_index_after(nu: f64, x: f64) -> u32 {
    let est = (x / PI - 0.5 * nu + 0.25).floor().max(1.0) as u32;
    let mut k = est.saturating_sub(1).max(1);
    while bessel_zero(Order(nu), k) <= x {
        k += 1;
    }
    while k > 1 && bessel_zero(Order(nu), k - 1) > x {
        k -= 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_zeros() {
        for k in 1..20 {
            assert_eq!(bessel_zero(Order(0.5), k), k as f64 * PI);
        }
    }

    #[test]
    fn first_zero_of_j0() {
        // bisection on the ascending series
        let series = |x: f64| {
            let mut t = 1.0;
            let mut s = 1.0;
            for k in 1..40 {
                t *= -(x * x / 4.0) / (k as f64 * k as f64);
                s += t;
            }
            s
        };
        let (mut lo, mut hi) = (2.0, 3.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if series(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((bessel_zero(Order(0.0), 1) - lo).abs() < 1e-14);
    }

    #[test]
    fn spacing_tends_to_pi() {
        let d = bessel_zero(Order(0.0), 51) - bessel_zero(Order(0.0), 50);
        assert!((d - PI).abs() < 1e-3);
    }

    #[test]
    fn mcmahon_and_scan_agree() {
        for &nu in &[-0.3, 0.0, 0.7, 1.0, 2.5, 4.0, 7.5] {
            for k in 1..25u32 {
                let (a, b) = scan_bracket(nu, k);
                let s = refine(nu, a, b, 0.5 * (a + b));
                let z = bessel_zero(Order(nu), k);
                assert!((s - z).abs() < 1e-12, "nu = {nu}, k = {k}: {s} vs {z}");
                assert!(jy(nu, z).0.abs() < 4e-15, "nu = {nu}, k = {k}");
            }
        }
    }

    #[test]
    fn zero_after_lookup() {
        let k = first_zero_index_after(1.0, 10.0);
        assert!(bessel_zero(Order(1.0), k) > 10.0);
        assert!(bessel_zero(Order(1.0), k - 1) <= 10.0);
        assert_eq!(first_zero_index_after(1.0, 0.1), 1);
    }
}
