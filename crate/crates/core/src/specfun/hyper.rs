//! Gauss hypergeometric function ₂F₁ for real parameters and real z ≤ 1.

use super::{digamma, gamma_raw, is_nonpositive_integer, rgamma, Result, SpecFunError, SpecialValue};

const EPS: f64 = f64::EPSILON;

/// Terminating ₂F₁(a, −n; c; x) as the finite sum of n+1 terms.
pub fn hyp2f1_terminating(a: f64, n: u32, c: f64, x: f64) -> Result<SpecialValue> {
    for j in 0..n {
        if c + j as f64 == 0.0 {
            return Err(SpecFunError::Parameter {
                func: "hyp2f1_terminating",
                reason: format!("c + {j} vanishes inside the sum"),
            });
        }
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    let nf = n as f64;
    for k in 0..n {
        let kf = k as f64;
        term *= (a + kf) * (kf - nf) / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
        abs_sum += term.abs();
    }
    Ok(SpecialValue::new(sum, 4.0 * (nf + 1.0) * EPS * abs_sum))
}

/// Power series about zero; returns (sum, Σ|terms|).
fn series(a: f64, b: f64, c: f64, z: f64) -> Option<(f64, f64)> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    for k in 0..10_000 {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        abs_sum += term.abs();
        if term == 0.0 || (term.abs() <= 0.25 * EPS * sum.abs() && k > 2) {
            return Some((sum, abs_sum));
        }
    }
    None
}

/// ₂F₁ near z = 1 through the connection with w = 1 − z when c − a − b is not
/// an integer.
fn connect_generic(a: f64, b: f64, c: f64, w: f64) -> Option<(f64, f64)> {
    let s = c - a - b;
    let (f1, e1) = series(a, b, 1.0 - s, w)?;
    let (f2, e2) = series(c - a, c - b, 1.0 + s, w)?;
    let g = gamma_raw(c);
    let c1 = g * gamma_raw(s) * rgamma(c - a) * rgamma(c - b);
    let c2 = g * gamma_raw(-s) * rgamma(a) * rgamma(b) * w.powf(s);
    let v = c1 * f1 + c2 * f2;
    // the prefactor gammas carry their own rounding
    let mag = (c1 * e1).abs() + (c2 * e2).abs();
    Some((v, mag * 4.0))
}

/// ₂F₁(a, b; a+b+m; 1−w) for integer m ≥ 0 (logarithmic case).
fn connect_integer(a: f64, b: f64, m: u32, w: f64) -> Option<(f64, f64)> {
    let mf = m as f64;
    let c = a + b + mf;
    let gc = gamma_raw(c);
    let mut finite = 0.0;
    let mut finite_abs = 0.0;
    if m > 0 {
        let pref = gamma_raw(mf) * gc * rgamma(a + mf) * rgamma(b + mf);
        let mut term = 1.0;
        for n in 0..m {
            let nf = n as f64;
            if n > 0 {
                term *= (a + nf - 1.0) * (b + nf - 1.0) / (nf * (nf - mf)) * w;
            }
            finite += term;
            finite_abs += term.abs();
        }
        finite *= pref;
        finite_abs *= pref.abs();
    }
    let pref = if m.is_multiple_of(2) { 1.0 } else { -1.0 } * w.powi(m as i32) * gc * rgamma(a) * rgamma(b);
    if pref == 0.0 {
        return Some((finite, finite_abs * 4.0 * EPS));
    }
    let lnw = w.ln();
    // running values of ψ(n+1), ψ(n+m+1), ψ(a+n+m), ψ(b+n+m)
    let mut p1 = digamma(1.0);
    let mut pm = digamma(mf + 1.0);
    let mut pa = digamma(a + mf);
    let mut pb = digamma(b + mf);
    let mut coef = 1.0 / gamma_raw(mf + 1.0);
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    for n in 0..10_000u32 {
        let nf = n as f64;
        if n > 0 {
            coef *= (a + mf + nf - 1.0) * (b + mf + nf - 1.0) / (nf * (nf + mf)) * w;
            p1 += 1.0 / nf;
            pm += 1.0 / (nf + mf);
            pa += 1.0 / (a + mf + nf - 1.0);
            pb += 1.0 / (b + mf + nf - 1.0);
        }
        let bracket = lnw - p1 - pm + pa + pb;
        let term = coef * bracket;
        sum += term;
        abs_sum += coef.abs() * (lnw.abs() + p1.abs() + pm.abs() + pa.abs() + pb.abs());
        if n > 2 && term.abs() <= 0.25 * EPS * sum.abs() {
            let v = finite - pref * sum;
            let e = 4.0 * EPS * (finite_abs + (pref * abs_sum).abs()) * 4.0;
            return Some((v, e));
        }
    }
    None
}

fn hyp2f1_inner(a: f64, b: f64, c: f64, z: f64) -> std::result::Result<(f64, f64), &'static str> {
    hyp2f1_zw(a, b, c, z, 1.0 - z)
}

/// Core evaluator; `w` must equal 1 − z and is passed separately so callers
/// close to z = 1 can supply it without cancellation.
fn hyp2f1_zw(a: f64, b: f64, c: f64, z: f64, w: f64) -> std::result::Result<(f64, f64), &'static str> {
    if z == 0.0 {
        return Ok((1.0, 0.0));
    }
    // polynomial cases are summed directly whatever z is
    for &p in &[a, b] {
        if is_nonpositive_integer(p) {
            let n = (-p) as u32;
            let other = if p == a { b } else { a };
            return hyp2f1_terminating(other, n, c, z)
                .map(|v| (v.value, v.abs_err))
                .map_err(|_| "c hits a pole of the terminating sum");
        }
    }
    if is_nonpositive_integer(c) {
        return Err("c is a non-positive integer");
    }
    if z > 1.0 {
        return Err("z > 1 lies on the branch cut");
    }
    if z < 0.0 {
        // Pfaff: F(a,b;c;z) = (1−z)^{−a} F(a, c−b; c; z/(z−1))
        let zz = z / (z - 1.0);
        let (v, e) = hyp2f1_zw(a, c - b, c, zz, 1.0 / (1.0 - z))?;
        let p = (1.0 - z).powf(-a);
        return Ok((p * v, p * e + 4.0 * EPS * (p * v).abs()));
    }
    let s = c - a - b;
    if z == 1.0 {
        if s <= 0.0 {
            return Err("series diverges at z = 1 when c − a − b ≤ 0");
        }
        let v = gamma_raw(c) * gamma_raw(s) * rgamma(c - a) * rgamma(c - b);
        return Ok((v, 64.0 * EPS * v.abs()));
    }
    if z <= 0.5 {
        return series(a, b, c, z).map(|(v, e)| (v, 4.0 * EPS * e)).ok_or("power series did not converge");
    }
    let si = s.round();
    if s == si {
        if si >= 0.0 {
            connect_integer(a, b, si as u32, w).ok_or("logarithmic series did not converge")
        } else {
            // Euler: F = (1−z)^{c−a−b} F(c−a, c−b; c; z), raising c−a−b to −s
            let (v, e) = connect_integer(c - a, c - b, (-si) as u32, w).ok_or("logarithmic series did not converge")?;
            let p = w.powf(s);
            Ok((p * v, p * e))
        }
    } else {
        connect_generic(a, b, c, w)
            .map(|(v, e)| (v, EPS * e + 32.0 * EPS * v.abs()))
            .ok_or("connection series did not converge")
    }
}

/// Raw ₂F₁(a, b; c; 1 − w) for 0 < w ≤ 1, accurate when w is small.
pub(crate) fn hyp2f1_complement(a: f64, b: f64, c: f64, w: f64) -> (f64, f64) {
    hyp2f1_zw(a, b, c, 1.0 - w, w).unwrap_or((f64::NAN, f64::NAN))
}

/// Raw ₂F₁(a, b; c; z) for real arguments with z ≤ 1; NaN when undefined.
pub fn hyp2f1_raw(a: f64, b: f64, c: f64, z: f64) -> f64 {
    hyp2f1_inner(a, b, c, z).map(|r| r.0).unwrap_or(f64::NAN)
}

/// Gauss hypergeometric function for real parameters and z ≤ 1.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<SpecialValue> {
    match hyp2f1_inner(a, b, c, z) {
        Ok((v, e)) if v.is_finite() => Ok(SpecialValue::new(v, e.abs().max(4.0 * EPS * v.abs()))),
        Ok(_) => Err(SpecFunError::Overflow { func: "hyp2f1", arg: z }),
        Err(reason) if reason.contains("branch") || reason.contains("diverges") => {
            Err(SpecFunError::Domain { func: "hyp2f1", arg: z, reason })
        }
        Err(reason) => Err(SpecFunError::Parameter { func: "hyp2f1", reason: reason.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminating_trivial_cases() {
        assert_eq!(hyp2f1_terminating(1.7, 0, 2.5, 0.3).unwrap().value, 1.0);
        assert_eq!(hyp2f1_terminating(2.0, 1, 1.0, 0.5).unwrap().value, 0.0);
        assert!(hyp2f1_terminating(1.0, 3, -1.0, 0.5).is_err());
    }

    #[test]
    fn terminating_three_terms_exact() {
        // 1 − 2·3·0.25 + (3·4)(−2·−1)/(1·2·2)·0.0625 = 1 − 1.5 + 0.375
        let v = hyp2f1_terminating(3.0, 2, 1.0, 0.25).unwrap();
        assert_eq!(v.value, -0.125);
    }

    #[test]
    fn elementary_closed_forms() {
        // ₂F₁(1,1;2;z) = −ln(1−z)/z
        for &z in &[-3.0, -0.7, 0.2, 0.49, 0.51, 0.8, 0.99, 0.999999] {
            let v = hyp2f1(1.0, 1.0, 2.0, z).unwrap();
            let exact = -(1.0f64 - z).ln() / z;
            assert!((v.value - exact).abs() < 1e-14 * exact.abs(), "z = {z}");
        }
        // ₂F₁(1/2,1/2;3/2;z²) = arcsin z / z
        for &x in &[0.3f64, 0.7, 0.9, 0.999] {
            let v = hyp2f1(0.5, 0.5, 1.5, x * x).unwrap();
            let exact = x.asin() / x;
            assert!((v.value - exact).abs() < 1e-14 * exact, "x = {x}");
        }
        // ₂F₁(a,b;b;z) = (1−z)^{−a}
        for &z in &[-0.9, 0.3, 0.75, 0.95] {
            let v = hyp2f1(0.37, 1.3, 1.3, z).unwrap();
            let exact = (1.0f64 - z).powf(-0.37);
            assert!((v.value - exact).abs() < 1e-13 * exact, "z = {z}");
        }
    }

    #[test]
    fn integer_excess_branches_agree_with_series() {
        // 0.5 < z ≤ 0.7 is still inside the radius where the plain series is usable
        for &(a, b, c) in &[(0.3, 0.7, 1.0), (0.25, 1.25, 3.5), (1.5, 0.5, 5.0), (0.4, 0.9, 0.3)] {
            for &z in &[0.55, 0.62, 0.7] {
                let direct = series(a, b, c, z).unwrap().0;
                let v = hyp2f1(a, b, c, z).unwrap();
                assert!((v.value - direct).abs() < 1e-13 * direct.abs(), "{a} {b} {c} {z}");
            }
        }
    }

    #[test]
    fn gauss_sum_at_unity() {
        let v = hyp2f1(0.2, 0.3, 1.7, 1.0).unwrap().value;
        let exact = gamma_raw(1.7) * gamma_raw(1.2) / (gamma_raw(1.5) * gamma_raw(1.4));
        assert!((v - exact).abs() < 1e-14);
        assert!(hyp2f1(1.0, 1.0, 2.0, 1.0).is_err());
        assert!(hyp2f1(1.0, 1.0, 2.0, 1.5).is_err());
    }
}
