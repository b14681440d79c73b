//! Special functions against frozen mpmath tables (tools/gen_reference.py).
//!
//! Each comparison checks the accuracy contract of the function,
//! |value − reference| ≤ max(abs_err, contract tolerance), and that the
//! reported error estimate is honest: |value − reference| ≤ 5·abs_err, or the
//! two agree to within a couple of rounding units of the reference.

use std::path::Path;

use hankel_dual::specfun::{
    bessel_i, bessel_j, bessel_k, bessel_k_real, bessel_y, bessel_zero, hyp2f1, legendre_p_negorder,
    legendre_q_negorder, struve_h, Complex64, Order, SpecialValue,
};

fn table(name: &str) -> Vec<Vec<f64>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    let mut rdr = csv::Reader::from_path(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    rdr.records().map(|r| r.unwrap().iter().map(|s| s.parse::<f64>().unwrap()).collect()).collect()
}

/// Rounding slack: a correctly rounded value may still differ from the
/// 17-digit reference by an ulp or two.
fn slack(reference: f64) -> f64 {
    4.0 * f64::EPSILON * reference.abs() + f64::MIN_POSITIVE
}

struct Check {
    what: &'static str,
    count: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(what: &'static str) -> Self {
        Check { what, count: 0, failures: Vec::new() }
    }

    /// `tol` is the absolute tolerance the contract grants at this point.
    fn value(&mut self, label: String, got: SpecialValue, reference: f64, tol: f64) {
        self.count += 1;
        let d = (got.value - reference).abs();
        if !(d <= tol.max(got.abs_err)) {
            self.failures.push(format!("{label}: got {:e}, want {reference:e}, |d| = {d:e} > {tol:e}", got.value));
        }
        if !(d <= 5.0 * got.abs_err + slack(reference)) {
            self.failures.push(format!("{label}: |d| = {d:e} exceeds 5 × abs_err = {:e}", 5.0 * got.abs_err));
        }
    }

    fn finish(self) {
        assert!(self.count > 0, "{}: empty table", self.what);
        assert!(
            self.failures.is_empty(),
            "{}: {} of {} comparisons failed:\n{}",
            self.what,
            self.failures.len(),
            self.count,
            self.failures.join("\n")
        );
    }
}

#[test]
fn bessel_j_and_y() {
    let mut c = Check::new("J/Y");
    for r in table("bessel_jy.csv") {
        let (nu, x, j, y) = (r[0], r[1], r[2], r[3]);
        let tol = |v: f64| if x <= 50.0 { 1e-12 * v.abs() } else { 1e-12 };
        c.value(format!("J({nu}, {x})"), bessel_j(Order(nu), x).unwrap(), j, tol(j).max(slack(j)));
        c.value(format!("Y({nu}, {x})"), bessel_y(Order(nu), x).unwrap(), y, tol(y).max(slack(y)));
    }
    c.finish();
}

#[test]
fn modified_bessel_real_axis() {
    let mut c = Check::new("I/K");
    for r in table("bessel_ik_scaled.csv") {
        let (nu, x, is, ks) = (r[0], r[1], r[2], r[3]);
        // the table is scaled: e^{−x}I and e^{x}K
        if x <= 30.0 {
            let i = bessel_i(Order(nu), x).unwrap();
            let want = is * x.exp();
            c.value(format!("I({nu}, {x})"), i, want, (1e-12 * want.abs()).max(slack(want)));
        }
        if x <= 50.0 {
            let k = bessel_k_real(Order(nu), x).unwrap();
            let want = ks * (-x).exp();
            c.value(format!("K({nu}, {x})"), k, want, (1e-11 * want.abs()).max(slack(want)));
        }
    }
    c.finish();
}

#[test]
fn modified_bessel_k_on_rays() {
    let mut c = Check::new("complex K");
    for r in table("bessel_k_complex.csv") {
        let (nu, m, ray, re, im) = (r[0], r[1], r[2], r[3], r[4]);
        let z = Complex64::from_polar(m, ray * std::f64::consts::FRAC_PI_4);
        let got = bessel_k(Order(nu), z).unwrap();
        let want = Complex64::new(re, im);
        let d = (got.as_complex() - want).norm();
        c.count += 1;
        if !(d <= 1e-9 * want.norm()) {
            c.failures.push(format!("K({nu}, {z}): |d| = {d:e}"));
        }
        if !(d <= 5.0 * got.abs_err + slack(want.norm())) {
            c.failures.push(format!("K({nu}, {z}): |d| = {d:e} exceeds 5 × abs_err = {:e}", 5.0 * got.abs_err));
        }
        // Schwarz reflection
        let conj = bessel_k(Order(nu), z.conj()).unwrap().as_complex();
        assert!((conj - got.as_complex().conj()).norm() <= 1e-15 * want.norm(), "reflection at {nu}, {z}");
    }
    c.finish();
}

#[test]
fn struve() {
    let mut c = Check::new("Struve H");
    for r in table("struve_h.csv") {
        let (nu, x, h) = (r[0], r[1], r[2]);
        if x <= 40.0 {
            c.value(format!("H({nu}, {x})"), struve_h(Order(nu), x).unwrap(), h, (1e-10 * h.abs()).max(slack(h)));
        }
    }
    c.finish();
}

#[test]
fn legendre_on_the_cut() {
    let mut c = Check::new("Legendre");
    for r in table("legendre.csv") {
        let (nu, mu, x, p, q) = (r[0], r[1], r[2], r[3], r[4]);
        let lp = legendre_p_negorder(nu, mu, x).unwrap();
        let lq = legendre_q_negorder(nu, mu, x).unwrap();
        c.value(format!("P({nu}, −{mu}, {x})"), lp, p, (1e-9 * p.abs()).max(slack(p)));
        c.value(format!("Q({nu}, −{mu}, {x})"), lq, q, (1e-9 * q.abs()).max(slack(q)));
    }
    c.finish();
}

#[test]
fn gauss_hypergeometric() {
    let mut c = Check::new("2F1");
    for r in table("hyp2f1.csv") {
        let (a, b, cc, z, f) = (r[0], r[1], r[2], r[3], r[4]);
        c.value(format!("2F1({a}, {b}; {cc}; {z})"), hyp2f1(a, b, cc, z).unwrap(), f, (1e-10 * f.abs()).max(slack(f)));
    }
    c.finish();
}

#[test]
fn bessel_zeros() {
    let rows = table("bessel_zeros.csv");
    assert!(!rows.is_empty());
    for r in rows {
        let (nu, k, z) = (r[0], r[1] as u32, r[2]);
        let got = bessel_zero(Order(nu), k);
        assert!((got - z).abs() <= 1e-12, "j({nu}, {k}) = {got}, want {z}");
    }
}
