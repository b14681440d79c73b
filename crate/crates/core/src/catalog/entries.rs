//! The 41 dual integrals, grouped G2–G6 in document order.

use std::f64::consts::{FRAC_PI_2, PI};

use super::geometry::{heron_area, l_pair};
use super::lhs;
use super::{
    Group, IntegralEntry, IntegrandFn, IntervalFn, LhsFn, OscFn, ParamPoint, PredicateFn, Provenance, RealFn, TolClass,
};
use crate::quad::{Interval, OscillationSpec, SingularityHint};
use crate::specfun::{
    bessel_i_scaled, bessel_k_scaled, chebyshev_t_raw, gamma_raw, hyp2f1_terminating, jacobi_p_raw, jv, kv,
    plegendre_sq, qlegendre_sq, rgamma, struve_hv, yv,
};

fn blank(id: &'static str, group: Group, params: &'static [&'static str], statement: &'static str) -> IntegralEntry {
    IntegralEntry {
        id,
        alias: None,
        group,
        statement,
        params,
        integrand: |_, _| f64::NAN,
        interval: |_| Interval::full_half_line(),
        osc: None,
        rhs: |_| f64::NAN,
        constraints: |_| true,
        constraints_text: "",
        default_grid: Vec::new(),
        provenance: Provenance { seed: "", source: "" },
        tol_class: TolClass::Decaying,
        custom_lhs: None,
    }
}

impl IntegralEntry {
    fn lhs(mut self, integrand: IntegrandFn, interval: IntervalFn, osc: Option<OscFn>) -> Self {
        self.integrand = integrand;
        self.interval = interval;
        self.osc = osc;
        self
    }

    fn rhs(mut self, rhs: RealFn) -> Self {
        self.rhs = rhs;
        self
    }

    fn when(mut self, constraints: PredicateFn, text: &'static str) -> Self {
        self.constraints = constraints;
        self.constraints_text = text;
        self
    }

    fn grid(mut self, rows: &[&[f64]]) -> Self {
        self.default_grid = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), self.params.len(), "{}: grid row width", self.id);
                let pairs: Vec<(&str, f64)> = self.params.iter().copied().zip(row.iter().copied()).collect();
                ParamPoint::new(&pairs)
            })
            .collect();
        self
    }

    fn from(mut self, seed: &'static str, source: &'static str) -> Self {
        self.provenance = Provenance { seed, source };
        self
    }

    fn class(mut self, c: TolClass) -> Self {
        self.tol_class = c;
        self
    }

    fn custom(mut self, f: LhsFn) -> Self {
        self.custom_lhs = Some(f);
        self
    }
}

/// I_μ(x)K_ν(y) without overflowing the exponentials.
fn ik(mu: f64, x: f64, nu: f64, y: f64) -> f64 {
    bessel_i_scaled(mu, x) * bessel_k_scaled(nu, y) * (x - y).exp()
}

fn positive(v: &[f64]) -> bool {
    v.iter().all(|&x| x > 0.0 && x.is_finite())
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn g2() -> Vec<IntegralEntry> {
    use TolClass::*;
    vec![
        blank(
            "T01",
            Group::G2,
            &["nu", "b", "c", "t"],
            "∫_0^∞ Δ(a,b,c)^{2ν−1} a^{1−ν} J_ν(at) da = 2^{1−ν}√π Γ(ν+½)(bc/t)^ν J_ν(bt)J_ν(ct)",
        )
        .lhs(
            |p, a| {
                let (nu, b, c, t) = (p.get("nu"), p.get("b"), p.get("c"), p.get("t"));
                let d = heron_area(a, b, c);
                if d == 0.0 {
                    return 0.0;
                }
                d.powf(2.0 * nu - 1.0) * a.powf(1.0 - nu) * jv(nu, a * t)
            },
            |p| {
                let (b, c) = (p.get("b"), p.get("c"));
                Interval::segment((b - c).abs(), b + c).with_hint(SingularityHint::InverseSqrtAtBoth)
            },
            None,
        )
        .rhs(|p| {
            let (nu, b, c, t) = (p.get("nu"), p.get("b"), p.get("c"), p.get("t"));
            2f64.powf(1.0 - nu) * PI.sqrt() * gamma_raw(nu + 0.5) * (b * c / t).powf(nu) * jv(nu, b * t) * jv(nu, c * t)
        })
        .when(|p| p.get("nu") > -0.5 && positive(&[p.get("b"), p.get("c"), p.get("t")]), "ν > −½, b, c, t > 0")
        .grid(&[&[1.0, 1.0, 1.0, 1.0], &[0.75, 3.0, 4.0, 1.0], &[1.5, 1.0, 2.0, 0.7]])
        .from("2^{1−ν}√πΓ(ν+½)(bc/t)^ν J_ν(bt)J_ν(ct)", "Sonine's formula")
        .class(Singular),
        blank("T02a", Group::G2, &["nu", "alpha", "z"], "∫_0^α b^ν J_{ν−1}(bz) db = α^ν J_ν(αz)/z")
            .lhs(
                |p, b| b.powf(p.get("nu")) * jv(p.get("nu") - 1.0, b * p.get("z")),
                |p| Interval::finite_from_zero(p.get("alpha")),
                None,
            )
            .rhs(|p| {
                let (nu, al, z) = (p.get("nu"), p.get("alpha"), p.get("z"));
                al.powf(nu) * jv(nu, al * z) / z
            })
            .when(|p| p.get("nu") > 0.5 && positive(&[p.get("alpha"), p.get("z")]), "ν > ½, α, z > 0")
            .grid(&[&[1.0, 1.0, 1.0], &[1.5, 2.0, 0.7], &[2.5, 1.3, 1.9]])
            .from("α^ν x^{−1} J_ν(αx)", "GR 6.512.3")
            .class(Decaying),
        blank("T02b", Group::G2, &["mu", "beta", "z"], "∫_β^∞ a^{1−μ} J_μ(az) da = β^{1−μ} J_{μ−1}(βz)/z")
            .lhs(
                |p, a| a.powf(1.0 - p.get("mu")),
                |p| Interval::tail(p.get("beta")),
                Some(|p| OscillationSpec::new(p.get("mu"), p.get("z"))),
            )
            .rhs(|p| {
                let (mu, be, z) = (p.get("mu"), p.get("beta"), p.get("z"));
                be.powf(1.0 - mu) * jv(mu - 1.0, be * z) / z
            })
            .when(|p| p.get("mu") > 0.5 && positive(&[p.get("beta"), p.get("z")]), "μ > ½, β, z > 0")
            .grid(&[&[1.0, 1.0, 1.0], &[1.5, 0.8, 1.4], &[2.5, 1.5, 0.9]])
            .from("β^{1−μ} x^{−1} J_{μ−1}(βx)", "GR 6.512.3")
            .class(Oscillatory),
        blank("T03", Group::G2, &["nu", "z"], "∫_0^∞ c^{ν+1}/(1+c²) J_ν(cz) dc = K_ν(z)")
            .lhs(
                |p, c| c.powf(p.get("nu") + 1.0) / (1.0 + c * c),
                |_| Interval::full_half_line(),
                Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
            )
            .rhs(|p| kv(p.get("nu"), p.get("z")))
            .when(|p| (-0.5..1.5).contains(&p.get("nu")) && p.get("z") > 0.0, "−½ ≤ ν < 3/2, z > 0")
            .grid(&[&[0.5, 1.0], &[0.0, 1.5], &[1.0, 0.8]])
            .from("a^ν K_ν(ax)", "GR 6.521.2")
            .class(Oscillatory),
        blank("T04", Group::G2, &["z"], "∫_0^∞ c/(1+c²)² J_0(cz) dc = (z/2) K_1(z)")
            .lhs(
                |_, c| c / (1.0 + c * c).powi(2),
                |_| Interval::full_half_line(),
                Some(|p| OscillationSpec::new(0.0, p.get("z"))),
            )
            .rhs(|p| 0.5 * p.get("z") * kv(1.0, p.get("z")))
            .when(|p| p.get("z") > 0.0, "z > 0")
            .grid(&[&[0.5], &[1.0], &[2.0]])
            .from("x K_1(ax)/(2a)", "GR 6.521.12")
            .class(Oscillatory),
        blank("T05", Group::G2, &["z"], "∫_0^∞ c²/(1+c²)² J_1(cz) dc = (z/2) K_0(z)")
            .lhs(
                |_, c| c * c / (1.0 + c * c).powi(2),
                |_| Interval::full_half_line(),
                Some(|p| OscillationSpec::new(1.0, p.get("z"))),
            )
            .rhs(|p| 0.5 * p.get("z") * kv(0.0, p.get("z")))
            .when(|p| p.get("z") > 0.0, "z > 0")
            .grid(&[&[0.5], &[1.0], &[2.0]])
            .from("x K_0(ax)/2", "GR 6.521.12")
            .class(Oscillatory),
        blank(
            "T06a",
            Group::G2,
            &["nu", "alpha", "gamma", "z"],
            "∫_0^∞ b J_ν(bz) l₁^ν/(l₂^ν(l₂²−l₁²)) db = K_0(αz) J_ν(γz), l of (α, b, γ)",
        )
        .lhs(
            |p, b| {
                let (l1, l2, d) = l_pair(p.get("alpha"), b, p.get("gamma"));
                b * (l1 / l2).powf(p.get("nu")) / d
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| kv(0.0, p.get("alpha") * p.get("z")) * jv(p.get("nu"), p.get("gamma") * p.get("z")))
        .when(|p| p.get("nu") >= -0.5 && positive(&[p.get("alpha"), p.get("gamma"), p.get("z")]), "ν ≥ −½, α, γ, z > 0")
        .grid(&[&[0.0, 1.0, 1.0, 1.0], &[1.0, 0.5, 2.0, 1.5], &[0.5, 1.2, 0.7, 0.9]])
        .from("K_0(ax) J_ν(cx)", "GR 6.522.12")
        .class(Oscillatory),
        blank(
            "T06b",
            Group::G2,
            &["nu", "alpha", "beta", "z"],
            "∫_0^∞ c J_ν(cz) l₁^ν/(l₂^ν(l₂²−l₁²)) dc = K_0(αz) J_ν(βz), l of (α, β, c)",
        )
        .lhs(
            |p, c| {
                let (l1, l2, d) = l_pair(p.get("alpha"), p.get("beta"), c);
                c * (l1 / l2).powf(p.get("nu")) / d
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| kv(0.0, p.get("alpha") * p.get("z")) * jv(p.get("nu"), p.get("beta") * p.get("z")))
        .when(|p| p.get("nu") >= -0.5 && positive(&[p.get("alpha"), p.get("beta"), p.get("z")]), "ν ≥ −½, α, β, z > 0")
        .grid(&[&[0.0, 1.0, 1.0, 1.0], &[1.0, 0.8, 1.5, 1.2], &[2.0, 1.5, 0.6, 0.8]])
        .from("K_0(ax) J_ν(bx)", "GR 6.522.12")
        .class(Oscillatory),
        blank(
            "T07a",
            Group::G2,
            &["a", "b", "z"],
            "∫_0^∞ c J_0(cz)(a⁴+b⁴+c⁴−2a²b²+2a²c²+2b²c²)^{−½} dc = I_0(az) K_0(bz)",
        )
        .lhs(
            |p, c| {
                // (a²+b²+c²)² − 4a²b² = ((a−b)²+c²)((a+b)²+c²)
                let (a, b, c2) = (p.get("a"), p.get("b"), c * c);
                c / (((a - b).powi(2) + c2) * ((a + b).powi(2) + c2)).sqrt()
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(0.0, p.get("z"))),
        )
        .rhs(|p| ik(0.0, p.get("a") * p.get("z"), 0.0, p.get("b") * p.get("z")))
        .when(|p| positive(&[p.get("a"), p.get("z")]) && p.get("b") > p.get("a"), "0 < a < b, z > 0")
        .grid(&[&[0.5, 1.0, 1.0], &[1.0, 2.0, 0.7], &[0.3, 0.8, 2.0]])
        .from("I_0(ax) K_0(bx)", "GR 6.522.4")
        .class(Oscillatory),
        blank("T07b", Group::G2, &["b", "c", "z"], "∫_0^∞ a J_0(az)/(l₂²−l₁²) da = I_0(cz) K_0(bz), l of (a, b, c)")
            .lhs(
                |p, a| a / l_pair(a, p.get("b"), p.get("c")).2,
                |_| Interval::full_half_line(),
                Some(|p| OscillationSpec::new(0.0, p.get("z"))),
            )
            .rhs(|p| ik(0.0, p.get("c") * p.get("z"), 0.0, p.get("b") * p.get("z")))
            .when(|p| positive(&[p.get("c"), p.get("z")]) && p.get("b") > p.get("c"), "0 < c < b, z > 0")
            .grid(&[&[1.0, 0.5, 1.0], &[2.0, 1.0, 0.7], &[0.8, 0.3, 2.0]])
            .from("I_0(cx) K_0(bx)", "GR 6.522.4")
            .class(Oscillatory),
        blank(
            "T08a",
            Group::G2,
            &["nu", "alpha", "gamma", "z"],
            "∫_0^∞ b^{ν+1} J_ν(bz)/(l₂²−l₁²)^{2ν+1} db = z^ν(αγ)^{−ν}√π/(2^{3ν}Γ(ν+½)) K_ν(αz) J_ν(γz), l of (α, b, γ)",
        )
        .lhs(
            |p, b| {
                let nu = p.get("nu");
                b.powf(nu + 1.0) / l_pair(p.get("alpha"), b, p.get("gamma")).2.powf(2.0 * nu + 1.0)
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| t08_rhs(p.get("nu"), p.get("alpha"), p.get("gamma"), p.get("z")))
        .when(|p| p.get("nu") >= -0.5 && positive(&[p.get("alpha"), p.get("gamma"), p.get("z")]), "ν ≥ −½, α, γ, z > 0")
        .grid(&[&[0.0, 1.0, 1.0, 1.0], &[0.5, 1.0, 0.5, 1.5], &[1.0, 0.8, 1.2, 1.0]])
        .from("x^ν(ac)^{−ν}√π/(2^{3ν}Γ(ν+½)) K_ν(ax) J_ν(cx)", "GR 6.522.15")
        .class(Oscillatory),
        blank(
            "T08b",
            Group::G2,
            &["nu", "alpha", "beta", "z"],
            "∫_0^∞ c^{ν+1} J_ν(cz)/(l₂²−l₁²)^{2ν+1} dc = z^ν(αβ)^{−ν}√π/(2^{3ν}Γ(ν+½)) K_ν(αz) J_ν(βz), l of (α, β, c)",
        )
        .lhs(
            |p, c| {
                let nu = p.get("nu");
                c.powf(nu + 1.0) / l_pair(p.get("alpha"), p.get("beta"), c).2.powf(2.0 * nu + 1.0)
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| t08_rhs(p.get("nu"), p.get("alpha"), p.get("beta"), p.get("z")))
        .when(|p| p.get("nu") >= -0.5 && positive(&[p.get("alpha"), p.get("beta"), p.get("z")]), "ν ≥ −½, α, β, z > 0")
        .grid(&[&[0.0, 1.0, 1.0, 1.0], &[0.5, 0.7, 1.3, 1.1], &[1.0, 1.5, 0.6, 0.8]])
        .from("x^ν(ab)^{−ν}√π/(2^{3ν}Γ(ν+½)) K_ν(ax) J_ν(bx)", "GR 6.522.15")
        .class(Oscillatory),
        blank(
            "T09a",
            Group::G2,
            &["beta", "gamma", "z"],
            "∫_0^∞ 2a² J_1(az)(a²+β²−γ²)[(a²+β²+γ²)²−4a²γ²]^{−3/2} da = z K_0(βz) J_0(γz)",
        )
        .lhs(
            |p, a| {
                let (b2, g2) = (p.get("beta").powi(2), p.get("gamma").powi(2));
                let a2 = a * a;
                2.0 * a2 * (a2 + b2 - g2) * mixed_cube(a, p.get("beta"), p.get("gamma"))
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(1.0, p.get("z"))),
        )
        .rhs(|p| p.get("z") * kv(0.0, p.get("beta") * p.get("z")) * jv(0.0, p.get("gamma") * p.get("z")))
        .when(|p| positive(&[p.get("beta"), p.get("gamma"), p.get("z")]), "β, γ, z > 0")
        .grid(&[&[1.0, 1.0, 1.0], &[0.5, 1.5, 1.2], &[2.0, 0.7, 0.8]])
        .from("x K_0(bx) J_0(cx)", "GR 6.525.1")
        .class(Oscillatory),
        blank(
            "T09b",
            Group::G2,
            &["alpha", "beta", "z"],
            "∫_0^∞ c J_0(cz)(α²+β²−c²)[(α²+β²+c²)²−4α²c²]^{−3/2} dc = z/(2α) J_1(αz) K_0(βz)",
        )
        .lhs(
            |p, c| {
                let (a2, b2) = (p.get("alpha").powi(2), p.get("beta").powi(2));
                c * (a2 + b2 - c * c) * mixed_cube(c, p.get("beta"), p.get("alpha"))
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(0.0, p.get("z"))),
        )
        .rhs(|p| {
            let (al, be, z) = (p.get("alpha"), p.get("beta"), p.get("z"));
            z / (2.0 * al) * jv(1.0, al * z) * kv(0.0, be * z)
        })
        .when(|p| positive(&[p.get("alpha"), p.get("z")]) && p.get("beta") >= p.get("alpha"), "0 < α ≤ β, z > 0")
        .grid(&[&[1.0, 1.0, 1.0], &[0.5, 1.0, 1.5], &[1.0, 2.0, 0.8]])
        .from("x J_1(ax) K_0(bx)/(2a)", "GR 6.525.1")
        .class(Oscillatory),
        blank(
            "T09c",
            Group::G2,
            &["p", "gamma", "z"],
            "∫_0^∞ J_1(bz) 2b²(p²+b²−γ²)/(l₂²−l₁²)³ db = z K_0(pz) J_0(γz), l of (p, b, γ)",
        )
        .lhs(
            |p, b| {
                let (pp, g) = (p.get("p"), p.get("gamma"));
                2.0 * b * b * (pp * pp + b * b - g * g) / l_pair(pp, b, g).2.powi(3)
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(1.0, p.get("z"))),
        )
        .rhs(|p| p.get("z") * kv(0.0, p.get("p") * p.get("z")) * jv(0.0, p.get("gamma") * p.get("z")))
        .when(|p| positive(&[p.get("p"), p.get("gamma"), p.get("z")]), "p, γ, z > 0")
        .grid(&[&[1.0, 1.0, 1.0], &[1.5, 0.5, 0.8], &[0.7, 1.8, 1.3]])
        .from("x K_0(ax) J_0(cx)", "GR 6.525.1")
        .class(Oscillatory),
        blank(
            "T09d",
            Group::G2,
            &["p", "q", "z"],
            "∫_0^∞ J_0(cz) c(p²+q²−c²)/(l₂²−l₁²)³ dc = z/(2q) J_1(qz) K_0(pz), l of (p, q, c)",
        )
        .lhs(
            |p, c| {
                let (pp, q) = (p.get("p"), p.get("q"));
                c * (pp * pp + q * q - c * c) / l_pair(pp, q, c).2.powi(3)
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(0.0, p.get("z"))),
        )
        .rhs(|p| {
            let (pp, q, z) = (p.get("p"), p.get("q"), p.get("z"));
            z / (2.0 * q) * jv(1.0, q * z) * kv(0.0, pp * z)
        })
        .when(|p| positive(&[p.get("q"), p.get("z")]) && p.get("p") > p.get("q"), "0 < q < p, z > 0")
        .grid(&[&[1.0, 0.5, 1.0], &[2.0, 1.0, 0.7], &[1.2, 0.9, 1.6]])
        .from("x J_1(bx) K_0(ax)/(2b)", "GR 6.525.1")
        .class(Oscillatory),
        blank("T10", Group::G2, &["nu", "a", "z"], "∫_0^∞ J_ν(bz)/√(b²+4a²) db = I_{ν/2}(az) K_{ν/2}(az)")
            .lhs(
                |p, b| 1.0 / (b * b + 4.0 * p.get("a").powi(2)).sqrt(),
                |_| Interval::full_half_line(),
                Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
            )
            .rhs(|p| {
                let (h, x) = (0.5 * p.get("nu"), p.get("a") * p.get("z"));
                ik(h, x, h, x)
            })
            .when(|p| p.get("nu") >= -0.5 && positive(&[p.get("a"), p.get("z")]), "ν ≥ −½, a, z > 0")
            .grid(&[&[0.0, 1.0, 1.0], &[1.0, 0.5, 1.5], &[0.5, 1.0, 0.7]])
            .from("I_{ν/2}(ax) K_{ν/2}(ax)", "GR 6.522.9")
            .class(Oscillatory),
        blank("T11", Group::G2, &["nu", "a", "z"], "∫_{2a}^∞ J_ν(bz)/√(b²−4a²) db = −(π/2) J_{ν/2}(az) Y_{ν/2}(az)")
            .lhs(
                |p, b| {
                    let a2 = 2.0 * p.get("a");
                    1.0 / ((b - a2) * (b + a2)).sqrt()
                },
                |p| Interval::tail(2.0 * p.get("a")).with_hint(SingularityHint::InverseSqrtAtLower),
                Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
            )
            .rhs(|p| {
                let (h, x) = (0.5 * p.get("nu"), p.get("a") * p.get("z"));
                -FRAC_PI_2 * jv(h, x) * yv(h, x)
            })
            .when(|p| p.get("nu") >= -0.5 && positive(&[p.get("a"), p.get("z")]), "ν ≥ −½, a, z > 0")
            .grid(&[&[0.0, 1.0, 1.0], &[1.0, 0.5, 1.5], &[0.5, 0.8, 0.7]])
            .from("−(π/2) J_{ν/2}(ax) Y_{ν/2}(ax)", "GR 6.522.10")
            .class(Singular),
        blank(
            "T12",
            Group::G2,
            &["nu", "mu", "a", "z"],
            "∫_0^∞ J_ν(bz)(b+√(b²+4a²))^μ/√(b²+4a²) db = 2^μ a^μ I_{(ν−μ)/2}(az) K_{(ν+μ)/2}(az)",
        )
        .lhs(
            |p, b| {
                let r = (b * b + 4.0 * p.get("a").powi(2)).sqrt();
                (b + r).powf(p.get("mu")) / r
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| {
            let (nu, mu, a, z) = (p.get("nu"), p.get("mu"), p.get("a"), p.get("z"));
            (2.0 * a).powf(mu) * ik(0.5 * (nu - mu), a * z, 0.5 * (nu + mu), a * z)
        })
        .when(
            |p| {
                let (nu, mu) = (p.get("nu"), p.get("mu"));
                nu >= -0.5 && mu > 0.0 && mu < 1.5 && nu - mu > -2.0 && positive(&[p.get("a"), p.get("z")])
            },
            "ν ≥ −½, 0 < μ < 3/2, ν − μ > −2, a, z > 0",
        )
        .grid(&[&[0.0, 0.5, 1.0, 1.0], &[1.0, 1.0, 0.5, 1.5], &[0.5, 0.25, 1.0, 0.7]])
        .from("2^μ a^μ I_{(ν−μ)/2}(ax) K_{(ν+μ)/2}(ax)", "GR 6.522.12")
        .class(Oscillatory),
        blank(
            "T13",
            Group::G2,
            &["a", "b", "x"],
            "∫_0^∞ c J_0(cx)(b²+c²−a²)[(a²+b²+c²)²−4a²b²]^{−3/2} dc = x/(2b) I_0(ax) K_1(bx)",
        )
        .lhs(
            |p, c| {
                let (a, b) = (p.get("a"), p.get("b"));
                let c2 = c * c;
                let q = ((a - b).powi(2) + c2) * ((a + b).powi(2) + c2);
                c * (b * b + c2 - a * a) / (q * q.sqrt())
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(0.0, p.get("x"))),
        )
        .rhs(|p| {
            let (a, b, x) = (p.get("a"), p.get("b"), p.get("x"));
            x / (2.0 * b) * ik(0.0, a * x, 1.0, b * x)
        })
        .when(|p| p.get("a").abs() < p.get("b") && p.get("x") > 0.0, "|a| < b, x > 0")
        .grid(&[&[0.5, 1.0, 1.0], &[0.3, 1.2, 0.8], &[1.0, 2.0, 2.0]])
        .from("x I_0(ax) K_1(bx)/(2b)", "GR 6.525.2")
        .class(Oscillatory),
    ]
}

/// [(a²+b²+c²)² − 4a²c²]^{−3/2} in factored form.
fn mixed_cube(a: f64, b: f64, c: f64) -> f64 {
    let b2 = b * b;
    let q = ((a - c).powi(2) + b2) * ((a + c).powi(2) + b2);
    1.0 / (q * q.sqrt())
}

fn t08_rhs(nu: f64, a: f64, c: f64, z: f64) -> f64 {
    (z / (a * c)).powf(nu) * PI.sqrt() / 8f64.powf(nu) * rgamma(nu + 0.5) * kv(nu, a * z) * jv(nu, c * z)
}

fn g3() -> Vec<IntegralEntry> {
    use TolClass::*;
    let full = |_: &ParamPoint| Interval::full_half_line();
    vec![
        blank("T14", Group::G3, &["nu", "z"], "∫_0^∞ J_ν(cz) J_{2ν}(2√c) dc = J_ν(1/z)/z")
            .lhs(
                |p, c| jv(2.0 * p.get("nu"), 2.0 * c.sqrt()),
                full,
                Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
            )
            .rhs(|p| jv(p.get("nu"), 1.0 / p.get("z")) / p.get("z"))
            .when(|p| positive(&[p.get("nu"), p.get("z")]), "ν > 0, z > 0")
            .grid(&[&[0.5, 1.0], &[1.0, 0.7], &[2.0, 1.5]])
            .from("x^{−1} J_ν(1/x)", "GR 6.514.1")
            .class(Oscillatory)
            .custom(lhs::t14),
        blank(
            "T15",
            Group::G3,
            &["nu", "z"],
            "∫_0^∞ c J_ν(cz)[e^{i(ν+1)π/2}K_{2ν}(2e^{iπ/4}√c) + e^{−i(ν+1)π/2}K_{2ν}(2e^{−iπ/4}√c)] dc = z^{−3} K_ν(1/z)",
        )
        .lhs(
            |p, c| lhs::t15_bracket(p.get("nu"), c).re,
            full,
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| p.get("z").powi(-3) * kv(p.get("nu"), 1.0 / p.get("z")))
        .when(|p| (-0.5..2.5).contains(&p.get("nu")) && p.get("z") > 0.0, "−½ ≤ ν < 5/2, z > 0")
        .grid(&[&[0.0, 1.0], &[0.5, 0.8], &[1.5, 1.2]])
        .from("x^{−3} K_ν(1/x)", "GR 6.514.3")
        .class(Decaying)
        .custom(lhs::t15),
        blank(
            "T16",
            Group::G3,
            &["nu", "z"],
            "∫_0^∞ J_ν(cz)[K_{2ν}(2√c) − (π/2) Y_{2ν}(2√c)] dc = −π/(2z) Y_ν(1/z)",
        )
        .lhs(
            |p, c| {
                let nu = p.get("nu");
                if c == 0.0 {
                    return 0.0;
                }
                kv(2.0 * nu, 2.0 * c.sqrt()) - FRAC_PI_2 * yv(2.0 * nu, 2.0 * c.sqrt())
            },
            full,
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| -PI / (2.0 * p.get("z")) * yv(p.get("nu"), 1.0 / p.get("z")))
        .when(|p| p.get("nu").abs() < 0.5 && p.get("z") > 0.0, "|ν| < ½, z > 0")
        .grid(&[&[0.0, 1.0], &[0.25, 0.8], &[-0.25, 1.5]])
        .from("−π/(2x) Y_ν(1/x)", "GR 6.514.4")
        .class(Oscillatory)
        .custom(lhs::t16),
        blank("T17a", Group::G3, &["nu", "z"], "∫_0^∞ J_{2ν}(cz) J_ν(c²/4) c dc = 2 J_ν(z²)")
            .lhs(
                |p, c| c * jv(p.get("nu"), 0.25 * c * c),
                full,
                Some(|p| OscillationSpec::new(2.0 * p.get("nu"), p.get("z"))),
            )
            .rhs(|p| 2.0 * jv(p.get("nu"), p.get("z").powi(2)))
            .when(|p| p.get("nu") >= -0.25 && p.get("z") > 0.0, "ν ≥ −¼, z > 0")
            .grid(&[&[0.0, 1.0], &[0.5, 1.3], &[1.0, 0.8]])
            .from("2b J_ν(bx²)", "GR 6.516.1")
            .class(Oscillatory)
            .custom(lhs::t17a),
        blank("T17b", Group::G3, &["mu", "z"], "∫_0^∞ J_μ(cz) J_μ(1/(4c)) dc = z^{−1} J_{2μ}(√z)")
            .lhs(
                |p, c| if c > 0.0 { jv(p.get("mu"), 0.25 / c) } else { 0.0 },
                full,
                Some(|p| OscillationSpec::new(p.get("mu"), p.get("z"))),
            )
            .rhs(|p| jv(2.0 * p.get("mu"), p.get("z").sqrt()) / p.get("z"))
            .when(|p| p.get("mu") > -0.5 && p.get("z") > 0.0, "μ > −½, z > 0")
            .grid(&[&[0.0, 1.0], &[0.5, 2.0], &[1.0, 0.6]])
            .from("x^{−1} J_{2μ}(a√x)", "GR 6.516.1")
            .class(Oscillatory)
            .custom(lhs::t17b),
        blank("T18a", Group::G3, &["nu", "z"], "∫_0^∞ J_{ν/2}(cz) J_{ν/2}(1/(4c)) dc = z^{−1} J_ν(√z)")
            .lhs(
                |p, c| if c > 0.0 { jv(0.5 * p.get("nu"), 0.25 / c) } else { 0.0 },
                full,
                Some(|p| OscillationSpec::new(0.5 * p.get("nu"), p.get("z"))),
            )
            .rhs(|p| jv(p.get("nu"), p.get("z").sqrt()) / p.get("z"))
            .when(|p| p.get("nu") > -1.0 && p.get("z") > 0.0, "ν > −1, z > 0")
            .grid(&[&[0.0, 1.0], &[1.0, 2.0], &[2.5, 0.7]])
            .from("x^{−1} J_ν(b√x)", "GR 6.526.1")
            .class(Oscillatory)
            .custom(lhs::t18a),
        blank("T18b", Group::G3, &["mu", "z"], "∫_0^∞ c J_μ(cz) J_{μ/2}(c²/4) dc = 2 J_{μ/2}(z²)")
            .lhs(
                |p, c| c * jv(0.5 * p.get("mu"), 0.25 * c * c),
                full,
                Some(|p| OscillationSpec::new(p.get("mu"), p.get("z"))),
            )
            .rhs(|p| 2.0 * jv(0.5 * p.get("mu"), p.get("z").powi(2)))
            .when(|p| p.get("mu") >= -0.5 && p.get("z") > 0.0, "μ ≥ −½, z > 0")
            .grid(&[&[0.0, 1.0], &[1.0, 0.8], &[2.0, 1.3]])
            .from("x^{−1} J_ν(b√x)", "GR 6.526.1")
            .class(Oscillatory)
            .custom(lhs::t18b),
        blank("T19", Group::G3, &["nu", "x"], "∫_0^∞ a² J_{2ν}(ax) J_{ν+½}(a²) da = (x/4) J_{ν−½}(x²/4)")
            .lhs(
                |p, a| a * a * jv(p.get("nu") + 0.5, a * a),
                full,
                Some(|p| OscillationSpec::new(2.0 * p.get("nu"), p.get("x"))),
            )
            .rhs(|p| 0.25 * p.get("x") * jv(p.get("nu") - 0.5, 0.25 * p.get("x").powi(2)))
            .when(|p| p.get("nu") >= -0.25 && p.get("x") > 0.0, "ν ≥ −¼, x > 0")
            .grid(&[&[0.0, 1.0], &[0.5, 2.0], &[1.0, 1.5]])
            .from("(x/4) J_{ν−½}(x²/4)", "GR 6.527.1")
            .class(Oscillatory)
            .custom(lhs::t19),
        blank("T20", Group::G3, &["nu", "x"], "∫_0^∞ a² J_{2ν}(ax) J_{ν−½}(a²) da = (x/4) J_{ν+½}(x²/4)")
            .lhs(
                |p, a| a * a * jv(p.get("nu") - 0.5, a * a),
                full,
                Some(|p| OscillationSpec::new(2.0 * p.get("nu"), p.get("x"))),
            )
            .rhs(|p| 0.25 * p.get("x") * jv(p.get("nu") + 0.5, 0.25 * p.get("x").powi(2)))
            .when(|p| p.get("nu") >= -0.25 && p.get("x") > 0.0, "ν ≥ −¼, x > 0")
            .grid(&[&[0.0, 1.0], &[0.5, 2.0], &[1.0, 1.5]])
            .from("(x/4) J_{ν+½}(x²/4)", "GR 6.527.1")
            .class(Oscillatory)
            .custom(lhs::t20),
        blank("T21", Group::G3, &["nu", "z"], "∫_0^∞ c J_ν(cz) H_{ν/2}(c²/4) dc = −2 Y_{ν/2}(z²)")
            .lhs(
                |p, c| c * struve_hv(0.5 * p.get("nu"), 0.25 * c * c),
                full,
                Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
            )
            .rhs(|p| -2.0 * yv(0.5 * p.get("nu"), p.get("z").powi(2)))
            .when(|p| (-0.5..1.5).contains(&p.get("nu")) && p.get("z") > 0.0, "−½ ≤ ν < 3/2, z > 0")
            .grid(&[&[0.0, 1.0], &[0.5, 0.8], &[1.0, 1.2]])
            .from("−2a Y_{ν/2}(ax²)", "GR 6.526.4")
            .class(Oscillatory)
            .custom(lhs::t21),
    ]
}

fn g4() -> Vec<IntegralEntry> {
    use TolClass::*;
    vec![
        blank("T22", Group::G4, &["nu", "z"], "∫_0^∞ J_ν(cz) e^{−2/c} c^{−1} dc = 2 J_ν(2√z) K_ν(2√z)")
            .lhs(
                |_, c| if c > 0.0 { (-2.0 / c).exp() / c } else { 0.0 },
                |_| Interval::full_half_line(),
                Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
            )
            .rhs(|p| {
                let (nu, w) = (p.get("nu"), 2.0 * p.get("z").sqrt());
                2.0 * jv(nu, w) * kv(nu, w)
            })
            .when(|p| p.get("nu") >= -0.5 && p.get("z") > 0.0, "ν ≥ −½, z > 0")
            .grid(&[&[0.0, 1.0], &[0.5, 2.0], &[1.0, 0.7]])
            .from("2 J_ν(2√(ax)) K_ν(2√(ax))", "GR 6.526.4")
            .class(Oscillatory),
        blank("T23", Group::G4, &["a", "z"], "∫_0^a J_1(bz) ln(1−b²/a²) db = −π z^{−1} Y_0(az)")
            .lhs(
                |p, b| {
                    let a = p.get("a");
                    jv(1.0, b * p.get("z")) * (-(b / a) * (b / a)).ln_1p()
                },
                |p| Interval::finite_from_zero(p.get("a")).with_hint(SingularityHint::LogAtUpper),
                None,
            )
            .rhs(|p| -PI / p.get("z") * yv(0.0, p.get("a") * p.get("z")))
            .when(|p| positive(&[p.get("a"), p.get("z")]), "a, z > 0")
            .grid(&[&[1.0, 1.0], &[2.0, 0.5], &[0.5, 3.0]])
            .from("−π x^{−1} Y_0(ax)", "GR 6.512.6")
            .class(Singular),
        blank("T24", Group::G4, &["z"], "∫_0^∞ J_1(cz) ln(1+c²) dc = 2 z^{−1} K_0(z)")
            .lhs(
                |_, c| (c * c).ln_1p(),
                |_| Interval::full_half_line(),
                Some(|p| OscillationSpec::new(1.0, p.get("z"))),
            )
            .rhs(|p| 2.0 / p.get("z") * kv(0.0, p.get("z")))
            .when(|p| p.get("z") > 0.0, "z > 0")
            .grid(&[&[0.5], &[1.0], &[2.0]])
            .from("2x^{−1} K_0(ax)", "GR 6.512.9")
            .class(Oscillatory),
        blank("T25", Group::G4, &["a", "z"], "∫_0^{2a} arcsin(b/(2a)) J_1(bz) db = π/(2z)[J_0²(az) − J_0(2az)]")
            .lhs(
                |p, b| (b / (2.0 * p.get("a"))).min(1.0).asin() * jv(1.0, b * p.get("z")),
                |p| Interval::finite_from_zero(2.0 * p.get("a")).with_hint(SingularityHint::InverseSqrtAtUpper),
                None,
            )
            .rhs(|p| {
                let (a, z) = (p.get("a"), p.get("z"));
                PI / (2.0 * z) * (jv(0.0, a * z).powi(2) - jv(0.0, 2.0 * a * z))
            })
            .when(|p| positive(&[p.get("a"), p.get("z")]), "a, z > 0")
            .grid(&[&[1.0, 1.0], &[0.5, 2.0], &[1.5, 0.6]])
            .from("(π/(2x)) J_0²(ax)", "GR 6.513.9")
            .class(Singular),
    ]
}

fn hyp_n(a: f64, n: u32, c: f64, x: f64) -> f64 {
    hyp2f1_terminating(a, n, c, x).map(|v| v.value).unwrap_or(f64::NAN)
}

fn g5() -> Vec<IntegralEntry> {
    use TolClass::*;
    vec![
        blank(
            "T26a",
            Group::G5,
            &["n", "nu", "alpha", "t"],
            "∫_0^α J_{ν−n−1}(bt) ₂F₁(ν, −n; ν−n; b²/α²) b^{ν−n} db = n! α^{ν−n} Γ(ν−n) J_{ν+n}(αt)/(t Γ(ν))",
        )
        .lhs(
            |p, b| {
                let (nu, al, t) = (p.get("nu"), p.get("alpha"), p.get("t"));
                let Some(n) = p.get_n("n") else { return f64::NAN };
                let nf = f64::from(n);
                jv(nu - nf - 1.0, b * t) * hyp_n(nu, n, nu - nf, (b / al).powi(2)) * b.powf(nu - nf)
            },
            |p| Interval::finite_from_zero(p.get("alpha")),
            None,
        )
        .rhs(|p| {
            let (nu, al, t) = (p.get("nu"), p.get("alpha"), p.get("t"));
            let n = p.get("n");
            factorial(n as u32) * al.powf(nu - n) * gamma_raw(nu - n) * jv(nu + n, al * t) / t * rgamma(nu)
        })
        .when(
            |p| p.get_n("n").is_some() && p.get("nu") > p.get("n") + 0.5 && positive(&[p.get("alpha"), p.get("t")]),
            "n ∈ ℕ₀, ν > n + ½, α, t > 0",
        )
        .grid(&[&[0.0, 1.0, 1.0, 1.0], &[1.0, 2.0, 1.5, 0.8], &[2.0, 3.5, 1.0, 1.2]])
        .from("n! α^{ν−n} Γ(ν−n) J_{ν+n}(αt)/(t Γ(ν))", "GR 6.512.2")
        .class(Decaying),
        blank(
            "T26b",
            Group::G5,
            &["n", "mu", "beta", "t"],
            "∫_β^∞ J_{μ+n}(at) ₂F₁(μ, −n; μ−n; β²/a²) a^{−μ+n+1} da = n! β^{−μ+n+1} Γ(μ−n) J_{μ−n−1}(βt)/(t Γ(μ))",
        )
        .lhs(
            |p, a| {
                let (mu, be) = (p.get("mu"), p.get("beta"));
                let Some(n) = p.get_n("n") else { return f64::NAN };
                let nf = f64::from(n);
                hyp_n(mu, n, mu - nf, (be / a).powi(2)) * a.powf(nf + 1.0 - mu)
            },
            |p| Interval::tail(p.get("beta")),
            Some(|p| OscillationSpec::new(p.get("mu") + p.get("n"), p.get("t"))),
        )
        .rhs(|p| {
            let (mu, be, t) = (p.get("mu"), p.get("beta"), p.get("t"));
            let n = p.get("n");
            factorial(n as u32) * be.powf(n + 1.0 - mu) * gamma_raw(mu - n) * jv(mu - n - 1.0, be * t) / t * rgamma(mu)
        })
        .when(
            |p| p.get_n("n").is_some() && p.get("mu") > p.get("n") + 0.5 && positive(&[p.get("beta"), p.get("t")]),
            "n ∈ ℕ₀, μ > n + ½, β, t > 0",
        )
        .grid(&[&[0.0, 1.0, 1.0, 1.0], &[1.0, 2.5, 1.0, 1.5], &[2.0, 3.0, 0.8, 1.0]])
        .from("n! β^{−μ+n+1} Γ(μ−n) J_{μ−n−1}(βt)/(t Γ(μ))", "GR 6.512.2")
        .class(Oscillatory),
        blank(
            "T27",
            Group::G5,
            &["nu", "mu", "z"],
            "∫_0^∞ P^{−μ}_{−½+ν/2}(√(1+4/c²)) Q^{−μ}_{−½+ν/2}(√(1+4/c²)) J_ν(cz) dc = e^{−μπi} Γ((ν−2μ+1)/2)/(z Γ((ν+2μ+1)/2)) I_μ(z) K_μ(z)",
        )
        .lhs(
            |p, c| {
                if c == 0.0 {
                    return 0.0;
                }
                let (d, mu, s) = (0.5 * p.get("nu") - 0.5, p.get("mu"), 4.0 / (c * c));
                plegendre_sq(d, mu, s) * qlegendre_sq(d, mu, s)
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| {
            let (nu, mu, z) = (p.get("nu"), p.get("mu"), p.get("z"));
            gamma_raw(0.5 * (nu - 2.0 * mu + 1.0)) * rgamma(0.5 * (nu + 2.0 * mu + 1.0)) / z * ik(mu, z, mu, z)
        })
        .when(
            |p| {
                let (nu, mu) = (p.get("nu"), p.get("mu"));
                nu >= -0.5 && nu > -2.0 * mu - 1.0 && mu >= 0.0 && p.get("z") > 0.0
            },
            "ν ≥ −½, ν > −2μ − 1, μ ≥ 0, z > 0",
        )
        .grid(&[&[0.5, 0.0, 1.0], &[1.0, 0.0, 0.7], &[1.5, 0.0, 1.5]])
        .from("e^{−μπi} Γ((ν−2μ+1)/2)/(x Γ((ν+2μ+1)/2)) I_μ(ax) K_μ(ax)", "GR 6.513.3")
        .class(Oscillatory),
        blank(
            "T28",
            Group::G5,
            &["nu", "mu", "z"],
            "∫_0^∞ J_ν(cz)[Q^{−μ}_{−½+ν/2}(√(1+4/c²))]² dc = e^{−2μπi} Γ((1+ν−2μ)/2)/(z Γ((1+ν+2μ)/2)) K_μ(z)²",
        )
        .lhs(
            |p, c| {
                if c == 0.0 {
                    return 0.0;
                }
                let (d, mu, s) = (0.5 * p.get("nu") - 0.5, p.get("mu"), 4.0 / (c * c));
                qlegendre_sq(d, mu, s).powi(2)
            },
            |_| Interval::full_half_line(),
            Some(|p| OscillationSpec::new(p.get("nu"), p.get("z"))),
        )
        .rhs(|p| {
            let (nu, mu, z) = (p.get("nu"), p.get("mu"), p.get("z"));
            gamma_raw(0.5 * (1.0 + nu - 2.0 * mu)) * rgamma(0.5 * (1.0 + nu + 2.0 * mu)) / z * kv(mu, z).powi(2)
        })
        .when(
            |p| {
                let (nu, mu) = (p.get("nu"), p.get("mu"));
                nu >= -0.5 && nu > mu.abs() - 1.0 && p.get("z") > 0.0
            },
            "ν ≥ −½, ν > |μ| − 1, z > 0",
        )
        .grid(&[&[0.5, 0.0, 1.0], &[1.0, 0.0, 0.7], &[1.5, 0.0, 1.5]])
        .from("e^{−2μπi} Γ((1+ν−2μ)/2)/(x Γ((1+ν+2μ)/2)) K_μ(ax)²", "GR 6.513.5")
        .class(Oscillatory),
    ]
}

fn g6() -> Vec<IntegralEntry> {
    use TolClass::*;
    vec![
        blank(
            "T29a",
            Group::G6,
            &["n", "nu", "beta", "z"],
            "∫_β^∞ P_n^{(ν,0)}(1−2β²/a²) J_{ν+2n+1}(az) a^{−ν} da = z^{−1} β^{−ν} J_ν(βz)",
        )
        .lhs(
            |p, a| {
                let Some(n) = p.get_n("n") else { return f64::NAN };
                let (nu, be) = (p.get("nu"), p.get("beta"));
                jacobi_p_raw(n, nu, 0.0, 1.0 - 2.0 * (be / a).powi(2)) * a.powf(-nu)
            },
            |p| Interval::tail(p.get("beta")),
            Some(|p| OscillationSpec::new(p.get("nu") + 2.0 * p.get("n") + 1.0, p.get("z"))),
        )
        .rhs(|p| {
            let (nu, be, z) = (p.get("nu"), p.get("beta"), p.get("z"));
            be.powf(-nu) * jv(nu, be * z) / z
        })
        .when(
            |p| p.get_n("n").is_some() && p.get("nu") > -0.5 && positive(&[p.get("beta"), p.get("z")]),
            "n ∈ ℕ₀, ν > −½, β, z > 0",
        )
        .grid(&[&[0.0, 0.0, 1.0, 1.0], &[1.0, 0.5, 1.0, 1.5], &[2.0, 1.0, 0.7, 2.0]])
        .from("x^{−1} b^{−ν} J_ν(bx)", "GR 6.512.4")
        .class(Oscillatory),
        blank(
            "T29b",
            Group::G6,
            &["n", "nu", "alpha", "z"],
            "∫_0^α P_n^{(ν,0)}(1−2b²/α²) J_ν(bz) b^{ν+1} db = z^{−1} α^{ν+1} J_{ν+2n+1}(αz)",
        )
        .lhs(
            |p, b| {
                let Some(n) = p.get_n("n") else { return f64::NAN };
                let (nu, al, z) = (p.get("nu"), p.get("alpha"), p.get("z"));
                jacobi_p_raw(n, nu, 0.0, 1.0 - 2.0 * (b / al).powi(2)) * jv(nu, b * z) * b.powf(nu + 1.0)
            },
            |p| Interval::finite_from_zero(p.get("alpha")),
            None,
        )
        .rhs(|p| {
            let (n, nu, al, z) = (p.get("n"), p.get("nu"), p.get("alpha"), p.get("z"));
            al.powf(nu + 1.0) * jv(nu + 2.0 * n + 1.0, al * z) / z
        })
        .when(
            |p| p.get_n("n").is_some() && p.get("nu") > -p.get("n") - 1.0 && positive(&[p.get("alpha"), p.get("z")]),
            "n ∈ ℕ₀, ν > −n − 1, α, z > 0",
        )
        .grid(&[&[0.0, 0.0, 1.0, 1.0], &[1.0, 0.5, 1.5, 1.2], &[3.0, 1.0, 2.0, 0.9]])
        .from("x^{−1} a^{ν+1} J_{ν+2n+1}(ax)", "GR 6.512.4")
        .class(Decaying),
        blank(
            "T30",
            Group::G6,
            &["nu", "n", "a", "z"],
            "∫_0^{2a} J_ν(bz) T_n(b/(2a))/√(4a²−b²) db = (π/2) J_{(ν+n)/2}(az) J_{(ν−n)/2}(az)",
        )
        .lhs(
            |p, b| {
                let Some(n) = p.get_n("n") else { return f64::NAN };
                let (nu, a, z) = (p.get("nu"), p.get("a"), p.get("z"));
                let a2 = 2.0 * a;
                jv(nu, b * z) * chebyshev_t_raw(n, b / a2) / ((a2 - b) * (a2 + b)).sqrt()
            },
            |p| Interval::finite_from_zero(2.0 * p.get("a")).with_hint(SingularityHint::InverseSqrtAtUpper),
            None,
        )
        .rhs(|p| {
            let (nu, n, a, z) = (p.get("nu"), p.get("n"), p.get("a"), p.get("z"));
            FRAC_PI_2 * jv(0.5 * (nu + n), a * z) * jv(0.5 * (nu - n), a * z)
        })
        .when(
            |p| {
                p.get_n("n").is_some_and(|n| f64::from(n) <= p.get("nu"))
                    && p.get("nu") >= -0.5
                    && positive(&[p.get("a"), p.get("z")])
            },
            "n ∈ ℕ₀, n ≤ ν, a, z > 0",
        )
        .grid(&[&[0.0, 0.0, 1.0, 1.0], &[1.0, 1.0, 0.5, 1.5], &[2.5, 2.0, 1.0, 0.8]])
        .from("(π/2) J_{(ν+n)/2}(ax) J_{(ν−n)/2}(ax)", "GR 6.522.11")
        .class(Singular),
    ]
}

/// All entries in document order.
pub fn all_entries() -> Vec<IntegralEntry> {
    let mut v = g2();
    v[0].alias = Some("Heron");
    v.extend(g3());
    v.extend(g4());
    v.extend(g5());
    v.extend(g6());
    v
}
