use hankel_dual::catalog::{all_entries, entry_by_id, IntegralEntry, ParamPoint, TolClass, SCHEMA_VERSION};
use hankel_dual::verify::{
    run_all, verify_entry, RowKind, RunPlan, Status, TolOverrides, VerificationReport, VerifyError,
};

fn corrupted(id: &'static str, rhs: fn(&ParamPoint) -> f64) -> IntegralEntry {
    let mut e = entry_by_id(id).unwrap();
    e.rhs = rhs;
    e
}

fn t03_times_1_01(p: &ParamPoint) -> f64 {
    (entry_by_id("T03").unwrap().rhs)(p) * 1.01
}

fn t13_times_1_01(p: &ParamPoint) -> f64 {
    (entry_by_id("T13").unwrap().rhs)(p) * 1.01
}

fn plan_of(entries: Vec<IntegralEntry>, jobs: usize) -> RunPlan {
    RunPlan {
        entries: entries
            .into_iter()
            .map(|e| {
                let g = e.default_grid.clone();
                (e, g)
            })
            .collect(),
        seeds: Vec::new(),
        tol: TolOverrides::default(),
        jobs,
    }
}

/// Rows and summary only: the echoed config records the worker count.
fn comparable(r: &VerificationReport) -> String {
    let r = r.without_timing();
    serde_json::to_string(&(&r.summary, &r.rows)).unwrap()
}

#[test]
fn corrupted_rhs_fails() {
    let report =
        run_all(&plan_of(vec![corrupted("T03", t03_times_1_01), corrupted("T13", t13_times_1_01)], 2)).unwrap();
    assert!(!report.rows.is_empty());
    for row in &report.rows {
        assert_eq!(row.status, Status::Fail, "{} [{}]: {:?}", row.entry_id, row.grid_index, row.reason);
        assert!(row.rel_err.unwrap() > row.tol);
    }
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn uncorrupted_entries_pass() {
    let report = run_all(&plan_of(vec![entry_by_id("T03").unwrap(), entry_by_id("T13").unwrap()], 2)).unwrap();
    assert!(report.rows.iter().all(|r| r.status == Status::Pass));
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn parallel_and_serial_agree() {
    let serial = run_all(&RunPlan::full(1)).unwrap();
    let parallel = run_all(&RunPlan::full(4)).unwrap();
    assert_eq!(comparable(&serial), comparable(&parallel));
    assert_eq!(serial.to_csv().unwrap(), parallel.to_csv().unwrap());
}

#[test]
fn runs_are_deterministic() {
    let a = run_all(&RunPlan::full(3)).unwrap();
    let b = run_all(&RunPlan::full(3)).unwrap();
    assert_eq!(a.without_timing(), b.without_timing());
}

#[test]
fn full_run_shape() {
    let r = run_all(&RunPlan::full(2)).unwrap();
    assert_eq!(r.schema_version, SCHEMA_VERSION);
    assert_eq!(r.rows.len(), 139);
    assert_eq!(r.rows.iter().filter(|x| x.kind == RowKind::Seed).count(), 16);
    assert_eq!(r.summary.overall.total, r.rows.len());
    assert_eq!(r.summary.overall.inconclusive, 0);
    let failing: Vec<_> = r.rows.iter().filter(|x| x.status == Status::Fail).map(|x| x.entry_id.as_str()).collect();
    assert_eq!(failing, ["T23", "T23", "T23"]);
    let sum: usize = r.summary.by_group.values().map(|c| c.total).sum();
    assert_eq!(sum, r.summary.overall.total);
}

#[test]
fn report_round_trips_through_json() {
    let r = run_all(&plan_of(vec![entry_by_id("T05").unwrap()], 1)).unwrap();
    let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn csv_has_a_header_and_one_line_per_row() {
    let r = run_all(&plan_of(vec![entry_by_id("T05").unwrap(), entry_by_id("T06a").unwrap()], 1)).unwrap();
    let csv = r.to_csv().unwrap();
    let mut rdr = csv::Reader::from_reader(csv.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert!(headers.iter().any(|h| h == "status"));
    assert_eq!(rdr.records().count(), r.rows.len());
}

#[test]
fn tighter_tolerance_than_quadrature_can_meet_is_inconclusive() {
    let mut plan = plan_of(vec![entry_by_id("T11").unwrap()], 1);
    plan.tol.global = Some(1e-15);
    let r = run_all(&plan).unwrap();
    assert!(r.rows.iter().any(|x| x.status == Status::Inconclusive));
    assert_eq!(r.exit_code(), 2);
}

#[test]
fn class_override_applies_to_that_class_only() {
    let mut t = TolOverrides::default();
    t.per_class.insert(TolClass::Oscillatory, 1e-4);
    assert_eq!(t.resolve(TolClass::Oscillatory), 1e-4);
    assert_eq!(t.resolve(TolClass::Decaying), TolClass::Decaying.default_tol());
}

#[test]
fn bad_inputs_are_errors() {
    let e = entry_by_id("T03").unwrap();
    let p = e.default_grid[0].clone();
    assert!(matches!(verify_entry(&e, &p, Some(0.0)), Err(VerifyError::Tolerance(_))));
    assert!(matches!(verify_entry(&e, &p, Some(f64::NAN)), Err(VerifyError::Tolerance(_))));
    let mut plan = plan_of(vec![e.clone()], 1);
    let mut bad = p.clone();
    for name in e.params {
        bad.set(name, -5.0);
    }
    plan.entries[0].1 = vec![bad];
    assert!(matches!(run_all(&plan), Err(VerifyError::Constraint { .. })));
}

#[test]
fn every_entry_has_a_tolerance_class() {
    for e in all_entries() {
        assert!(e.tol_class.default_tol() > 0.0, "{}", e.id);
    }
}
