//! The verification harness: evaluates each catalog entry on its grid,
//! compares against the closed form, checks the failure seeds, and collects
//! everything into a report with a canonical row order.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{FailureSeed, Group, IntegralEntry, LhsError, ParamPoint, TolClass, SCHEMA_VERSION};
use crate::hankel::{check_condition, Endpoint, HankelError, SeedFunction};
use crate::quad::{integrate_entry, QuadError, QuadResult};

/// Quadrature is asked for this fraction of the comparison tolerance.
pub const QUAD_TOL_FACTOR: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "Pass",
            Status::Fail => "Fail",
            Status::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    Entry,
    Seed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRow {
    pub kind: RowKind,
    pub entry_id: String,
    pub group: Option<Group>,
    pub grid_index: usize,
    pub param_point: ParamPoint,
    pub lhs: Option<QuadResult>,
    pub rhs: Option<f64>,
    pub rel_err: Option<f64>,
    pub tol: f64,
    pub status: Status,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl Counts {
    fn add(&mut self, s: Status) {
        self.total += 1;
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Inconclusive => self.inconclusive += 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub overall: Counts,
    /// Keyed by group name; failure seeds are counted under "seeds".
    pub by_group: BTreeMap<String, Counts>,
}

impl Summary {
    pub fn of(rows: &[VerificationRow]) -> Summary {
        let mut s = Summary::default();
        for r in rows {
            s.overall.add(r.status);
            let key = r.group.map_or("seeds".to_string(), |g| g.to_string());
            s.by_group.entry(key).or_default().add(r.status);
        }
        s
    }

    /// 0 when everything passed, 1 on any Fail, 2 when only Inconclusive rows spoil the run.
    pub fn exit_code(&self) -> i32 {
        if self.overall.fail > 0 {
            1
        } else if self.overall.inconclusive > 0 {
            2
        } else {
            0
        }
    }
}

/// Tolerance overrides: a global value beats the per-class table.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TolOverrides {
    pub global: Option<f64>,
    pub per_class: BTreeMap<TolClass, f64>,
}

impl TolOverrides {
    pub fn resolve(&self, class: TolClass) -> f64 {
        self.global.or_else(|| self.per_class.get(&class).copied()).unwrap_or_else(|| class.default_tol())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("point {point} violates the constraints of {entry} ({constraints})")]
    Constraint { entry: String, point: String, constraints: String },
    #[error("tolerance must be positive and finite, got {0}")]
    Tolerance(f64),
    #[error("worker pool: {0}")]
    Pool(String),
}

fn check_tol(tol: f64) -> Result<(), VerifyError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(VerifyError::Tolerance(tol))
    }
}

/// Check one grid point of an entry.
pub fn verify_entry(
    entry: &IntegralEntry,
    point: &ParamPoint,
    tol_override: Option<f64>,
) -> Result<VerificationRow, VerifyError> {
    verify_point(entry, 0, point, tol_override.unwrap_or_else(|| entry.tol_class.default_tol()))
}

fn verify_point(
    entry: &IntegralEntry,
    grid_index: usize,
    point: &ParamPoint,
    tol: f64,
) -> Result<VerificationRow, VerifyError> {
    check_tol(tol)?;
    if !(entry.constraints)(point) {
        return Err(VerifyError::Constraint {
            entry: entry.id.to_string(),
            point: point.to_string(),
            constraints: entry.constraints_text.to_string(),
        });
    }
    let quad_tol = QUAD_TOL_FACTOR * tol;
    let lhs: Result<QuadResult, LhsError> = match entry.custom_lhs {
        Some(f) => f(point, quad_tol),
        None => integrate_entry(
            |x| (entry.integrand)(point, x),
            (entry.interval)(point),
            entry.osc.map(|o| o(point)),
            quad_tol,
        )
        .map_err(LhsError::from),
    };
    let rhs = (entry.rhs)(point);
    let mut row = VerificationRow {
        kind: RowKind::Entry,
        entry_id: entry.id.to_string(),
        group: Some(entry.group),
        grid_index,
        param_point: point.clone(),
        lhs: None,
        rhs: Some(rhs),
        rel_err: None,
        tol,
        status: Status::Inconclusive,
        reason: None,
    };
    let q = match lhs {
        Ok(q) => q,
        Err(LhsError::Quad(QuadError::NoConvergence { partial })) => {
            row.lhs = Some(partial);
            row.rel_err = Some((partial.value - rhs).abs() / (1.0 + rhs.abs()));
            row.reason = Some(format!("quadrature did not converge (error estimate {:e})", partial.abs_err));
            return Ok(row);
        }
        Err(e) => {
            row.reason = Some(e.to_string());
            return Ok(row);
        }
    };
    row.lhs = Some(q);
    if !rhs.is_finite() || !q.value.is_finite() {
        row.reason = Some("non-finite value".into());
        return Ok(row);
    }
    let rel = (q.value - rhs).abs() / (1.0 + rhs.abs());
    row.rel_err = Some(rel);
    row.status = if !q.converged {
        row.reason = Some(format!("error estimate {:e} above the quadrature target", q.abs_err));
        Status::Inconclusive
    } else if rel <= tol {
        Status::Pass
    } else {
        row.reason = Some(format!("relative error {rel:e} exceeds {tol:e}"));
        Status::Fail
    };
    Ok(row)
}

/// Admissibility check of an arbitrary seed expected to fail; Pass means the
/// condition was found violated (at `expected` when given).
pub fn verify_inadmissible(id: &str, seed: &SeedFunction, expected: Option<Endpoint>) -> VerificationRow {
    let mut row = VerificationRow {
        kind: RowKind::Seed,
        entry_id: id.to_string(),
        group: None,
        grid_index: 0,
        param_point: ParamPoint::default(),
        lhs: None,
        rhs: None,
        rel_err: None,
        tol: crate::hankel::INCONCLUSIVE_BAND,
        status: Status::Inconclusive,
        reason: None,
    };
    match check_condition(seed) {
        Ok(v) => match v.failing_endpoint {
            None => {
                row.status = Status::Fail;
                row.reason =
                    Some(format!("admissible (exponents {:.3} at 0, {:.3} at ∞)", v.zero_exponent, v.inf_exponent));
            }
            Some(at) => {
                let matches = expected.is_none_or(|e| e == at || at == Endpoint::Both);
                row.status = if matches { Status::Pass } else { Status::Fail };
                row.reason = Some(format!(
                    "inadmissible at {at} (exponents {:.3} at 0, {:.3} at ∞){}",
                    v.zero_exponent,
                    v.inf_exponent,
                    match expected {
                        Some(e) if !matches => format!("; expected {e}"),
                        _ => String::new(),
                    }
                ));
            }
        },
        Err(e @ HankelError::Inconclusive { .. }) => row.reason = Some(e.to_string()),
        Err(e) => row.reason = Some(e.to_string()),
    }
    row
}

pub fn verify_failure(seed: &FailureSeed) -> VerificationRow {
    verify_inadmissible(seed.id, &seed.seed, Some(seed.expected_failing_endpoint))
}

/// What to run: entries with their grids, failure seeds, tolerances and workers.
#[derive(Debug, Clone)]
pub struct RunPlan {
    pub entries: Vec<(IntegralEntry, Vec<ParamPoint>)>,
    pub seeds: Vec<FailureSeed>,
    pub tol: TolOverrides,
    pub jobs: usize,
}

impl RunPlan {
    /// Every entry on its default grid plus every failure seed.
    pub fn full(jobs: usize) -> RunPlan {
        RunPlan {
            entries: crate::catalog::all_entries()
                .into_iter()
                .map(|e| {
                    let g = e.default_grid.clone();
                    (e, g)
                })
                .collect(),
            seeds: crate::catalog::all_failures(),
            tol: TolOverrides::default(),
            jobs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub entries: Vec<String>,
    pub seeds: Vec<String>,
    pub tol: TolOverrides,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub rows: Vec<VerificationRow>,
    pub wall_time_s: f64,
}

enum Task<'a> {
    Point(&'a IntegralEntry, usize, &'a ParamPoint, f64),
    Seed(&'a FailureSeed),
}

/// Run a plan on a pool of `plan.jobs` workers. Rows come back sorted by
/// kind, id and grid index whatever order they finished in.
pub fn run_all(plan: &RunPlan) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let mut tasks = Vec::new();
    for (e, grid) in &plan.entries {
        let tol = plan.tol.resolve(e.tol_class);
        check_tol(tol)?;
        for (i, p) in grid.iter().enumerate() {
            if !(e.constraints)(p) {
                return Err(VerifyError::Constraint {
                    entry: e.id.to_string(),
                    point: p.to_string(),
                    constraints: e.constraints_text.to_string(),
                });
            }
            tasks.push(Task::Point(e, i, p, tol));
        }
    }
    tasks.extend(plan.seeds.iter().map(Task::Seed));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.jobs.max(1))
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    let results: Vec<Result<VerificationRow, VerifyError>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| match *t {
                Task::Point(e, i, p, tol) => verify_point(e, i, p, tol),
                Task::Seed(s) => Ok(verify_failure(s)),
            })
            .collect()
    });
    let mut rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| (a.kind, &a.entry_id, a.grid_index).cmp(&(b.kind, &b.entry_id, b.grid_index)));
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        config: ConfigEcho {
            entries: plan.entries.iter().map(|(e, _)| e.id.to_string()).collect(),
            seeds: plan.seeds.iter().map(|s| s.id.to_string()).collect(),
            tol: plan.tol.clone(),
            jobs: plan.jobs,
        },
        summary: Summary::of(&rows),
        rows,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

fn opt(v: Option<f64>) -> String {
    v.map_or(String::new(), |x| format!("{x:e}"))
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code()
    }

    /// The same report with the timing field zeroed, for comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport { wall_time_s: 0.0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Rows only, one line each, with the schema version in the first column.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "schema_version",
            "kind",
            "id",
            "group",
            "grid_index",
            "params",
            "lhs",
            "lhs_abs_err",
            "lhs_converged",
            "evaluations",
            "rhs",
            "rel_err",
            "tol",
            "status",
            "reason",
        ])?;
        for r in &self.rows {
            let kind = match r.kind {
                RowKind::Entry => "entry",
                RowKind::Seed => "seed",
            };
            w.write_record([
                self.schema_version.to_string(),
                kind.to_string(),
                r.entry_id.clone(),
                r.group.map_or(String::new(), |g| g.to_string()),
                r.grid_index.to_string(),
                r.param_point.to_string(),
                opt(r.lhs.map(|q| q.value)),
                opt(r.lhs.map(|q| q.abs_err)),
                r.lhs.map_or(String::new(), |q| q.converged.to_string()),
                r.lhs.map_or(String::new(), |q| q.evaluations.to_string()),
                opt(r.rhs),
                opt(r.rel_err),
                format!("{:e}", r.tol),
                r.status.as_str().to_string(),
                r.reason.clone().unwrap_or_default(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Summary table by group, then every row that did not pass.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<8} {:>6} {:>6} {:>6} {:>13}", "group", "total", "pass", "fail", "inconclusive");
        let line = |s: &mut String, name: &str, c: &Counts| {
            let _ = writeln!(s, "{:<8} {:>6} {:>6} {:>6} {:>13}", name, c.total, c.pass, c.fail, c.inconclusive);
        };
        for (g, c) in &self.summary.by_group {
            line(&mut s, g, c);
        }
        line(&mut s, "all", &self.summary.overall);
        let bad: Vec<&VerificationRow> = self.rows.iter().filter(|r| r.status != Status::Pass).collect();
        if !bad.is_empty() {
            let _ = writeln!(s);
            for r in bad {
                let _ = writeln!(
                    s,
                    "{:<12} {:<10} [{}] {}: {}",
                    r.status.as_str(),
                    r.entry_id,
                    r.grid_index,
                    r.param_point,
                    r.reason.as_deref().unwrap_or("")
                );
            }
        }
        let _ = writeln!(s, "\nwall time {:.1} s", self.wall_time_s);
        s
    }
}
