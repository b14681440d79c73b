//! Command-line front end. `run_with` does all the work and returns the exit
//! status so that tests can drive it without spawning a process.
//!
//! Exit status: 0 when every row passes, 1 when any row fails, 2 when the
//! only problems are Inconclusive rows, 64 on a usage or configuration
//! error, 74 when a file cannot be read or the report cannot be written.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use thiserror::Error;

use crate::catalog::{
    all_entries, all_failures, catalog_document, entry_by_id, failure_by_id, select_entries, CatalogError, FailureSeed,
    Group, IntegralEntry, ParamPoint, TolClass,
};
use crate::verify::{run_all, RunPlan, TolOverrides, VerificationReport, VerifyError};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;
/// Fallback for `--jobs`.
pub const JOBS_ENV: &str = "HANKEL_DUAL_JOBS";

#[derive(Debug, Parser)]
#[command(name = "hankel-dual", version, about = "Numerical verification of dual Bessel integral identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate catalog entries on their grids and compare with the closed forms.
    Verify(VerifyArgs),
    /// Run the admissibility check on the failure seeds.
    Check(CheckArgs),
    /// Print the catalog.
    List(ListArgs),
}

#[derive(Debug, Default, clap::Args)]
pub struct VerifyArgs {
    /// Entry id, alias or id prefix ("T29" selects T29a and T29b). Repeatable.
    #[arg(long = "entry", value_name = "ID")]
    pub entries: Vec<String>,
    /// Group G2..G6. Repeatable.
    #[arg(long = "group", value_name = "G")]
    pub groups: Vec<String>,
    /// TOML run configuration, or the JSON document printed by `list --json`.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Comparison tolerance for every entry.
    #[arg(long, value_name = "X")]
    pub tol: Option<f64>,
    /// Worker threads (default: config, then HANKEL_DUAL_JOBS, then all cores)
    #[arg(long, value_name = "N")]
    pub jobs: Option<usize>,
    /// Report format (default text)
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, clap::Args)]
pub struct CheckArgs {
    /// Failure seed id. Repeatable; all seeds when absent.
    #[arg(long = "seed", value_name = "ID")]
    pub seeds: Vec<String>,
    /// Worker threads (default: HANKEL_DUAL_JOBS, then all cores)
    #[arg(long, value_name = "N")]
    pub jobs: Option<usize>,
    /// Report format (default text)
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, clap::Args)]
pub struct ListArgs {
    /// Print the catalog metadata document instead of one line per item.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Usage(String),
    #[error("config {path}: {msg}")]
    Config { path: PathBuf, msg: String },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Csv(_) => EXIT_IO,
            CliError::Verify(VerifyError::Pool(_)) => EXIT_IO,
            _ => EXIT_USAGE,
        }
    }
}

/// The on-disk configuration. Every key is optional.
///
/// ```toml
/// entries = ["T03", "Heron"]
/// groups = ["G6"]
/// seeds = ["S6512_1a"]
/// tol = 1e-8
/// jobs = 4
/// format = "json"
/// out = "report.json"
///
/// [tol_class]
/// oscillatory = 1e-6
///
/// [grid]
/// T03 = [{ nu = 0.5, z = 1.0 }, { nu = 2.0, z = 0.3 }]
/// ```
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub entries: Option<Vec<String>>,
    pub groups: Option<Vec<String>>,
    pub seeds: Option<Vec<String>>,
    pub tol: Option<f64>,
    #[serde(default)]
    pub tol_class: BTreeMap<String, f64>,
    #[serde(default)]
    pub grid: BTreeMap<String, Vec<BTreeMap<String, f64>>>,
    pub jobs: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

#[derive(Deserialize)]
struct IdOnly {
    id: String,
}

/// Enough of the `list --json` document to use it as a filter.
#[derive(Deserialize)]
struct CatalogFilter {
    #[serde(default)]
    entries: Vec<IdOnly>,
    #[serde(default)]
    failure_seeds: Vec<IdOnly>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<ConfigFile, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        let err = |msg: String| CliError::Config { path: path.to_path_buf(), msg };
        if text.trim_start().starts_with('{') {
            let doc: CatalogFilter = serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
            return Ok(ConfigFile {
                entries: Some(doc.entries.into_iter().map(|e| e.id).collect()),
                seeds: Some(doc.failure_seeds.into_iter().map(|s| s.id).collect()),
                ..ConfigFile::default()
            });
        }
        toml::from_str(&text).map_err(|e| err(e.to_string()))
    }
}

/// A fully resolved run: ids are checked, grids and tolerances are final.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub entries: Vec<IntegralEntry>,
    pub grid_overrides: BTreeMap<String, Vec<ParamPoint>>,
    pub seeds: Vec<FailureSeed>,
    pub tol: TolOverrides,
    pub jobs: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn plan(&self) -> RunPlan {
        RunPlan {
            entries: self
                .entries
                .iter()
                .map(|e| {
                    let grid = self.grid_overrides.get(e.id).cloned().unwrap_or_else(|| e.default_grid.clone());
                    (e.clone(), grid)
                })
                .collect(),
            seeds: self.seeds.clone(),
            tol: self.tol.clone(),
            jobs: self.jobs,
        }
    }
}

fn parse_group(s: &str) -> Result<Group, CliError> {
    Group::parse(s).ok_or_else(|| CliError::Usage(format!("unknown group `{s}` (expected G2..G6)")))
}

/// Entries named by ids or groups, in catalog order without duplicates.
fn select(ids: &[String], groups: &[String]) -> Result<Vec<IntegralEntry>, CliError> {
    let mut wanted = BTreeSet::new();
    for id in ids {
        wanted.extend(select_entries(id)?.into_iter().map(|e| e.id));
    }
    for g in groups {
        let g = parse_group(g)?;
        wanted.extend(all_entries().into_iter().filter(|e| e.group == g).map(|e| e.id));
    }
    Ok(all_entries().into_iter().filter(|e| wanted.contains(e.id)).collect())
}

fn select_seeds(ids: &[String]) -> Result<Vec<FailureSeed>, CliError> {
    if ids.is_empty() {
        return Ok(all_failures());
    }
    let mut out: Vec<FailureSeed> = Vec::new();
    for id in ids {
        let s = failure_by_id(id)?;
        if !out.iter().any(|o| o.id == s.id) {
            out.push(s);
        }
    }
    Ok(out)
}

fn resolve_jobs(flag: Option<usize>, config: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    let from_env = match env {
        Some(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("{JOBS_ENV}={v:?} is not a positive integer")))?,
        ),
        None => None,
    };
    let jobs =
        flag.or(config).or(from_env).unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(CliError::Usage("jobs must be at least 1".into()));
    }
    Ok(jobs)
}

fn check_tol_value(what: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("{what} must be positive and finite, got {v}")))
    }
}

fn grid_overrides(
    raw: &BTreeMap<String, Vec<BTreeMap<String, f64>>>,
) -> Result<BTreeMap<String, Vec<ParamPoint>>, CliError> {
    let mut out = BTreeMap::new();
    for (id, points) in raw {
        let e = entry_by_id(id)?;
        let expected: BTreeSet<&str> = e.params.iter().copied().collect();
        let mut grid = Vec::with_capacity(points.len());
        for p in points {
            let got: BTreeSet<&str> = p.keys().map(String::as_str).collect();
            if got != expected {
                return Err(CliError::Usage(format!(
                    "grid point for {} has parameters {:?}, expected {:?}",
                    e.id, got, expected
                )));
            }
            grid.push(ParamPoint(p.clone()));
        }
        if grid.is_empty() {
            return Err(CliError::Usage(format!("empty grid for {}", e.id)));
        }
        out.insert(e.id.to_string(), grid);
    }
    Ok(out)
}

/// Merge flags over the config file. With no filter anywhere the run is the
/// full suite, failure seeds included; an entry or group filter runs only
/// the named entries (plus any seeds the config lists).
pub fn resolve_verify(args: &VerifyArgs, env_jobs: Option<&str>) -> Result<RunConfig, CliError> {
    let file = match &args.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let (ids, groups) = if !args.entries.is_empty() || !args.groups.is_empty() {
        (args.entries.clone(), args.groups.clone())
    } else {
        (file.entries.clone().unwrap_or_default(), file.groups.clone().unwrap_or_default())
    };
    let filtered = !ids.is_empty() || !groups.is_empty() || file.entries.is_some() || file.groups.is_some();
    let entries = if filtered { select(&ids, &groups)? } else { all_entries() };
    let seeds = match (&file.seeds, filtered) {
        (Some(s), _) if s.is_empty() => Vec::new(),
        (Some(s), _) => select_seeds(s)?,
        (None, true) => Vec::new(),
        (None, false) => all_failures(),
    };
    let grid = grid_overrides(&file.grid)?;
    if let Some(id) = grid.keys().find(|id| !entries.iter().any(|e| e.id == id.as_str())) {
        return Err(CliError::Usage(format!("grid override for {id}, which is not selected")));
    }
    let mut tol = TolOverrides::default();
    for (k, v) in &file.tol_class {
        let class = TolClass::parse(k).ok_or_else(|| CliError::Usage(format!("unknown tolerance class `{k}`")))?;
        tol.per_class.insert(class, check_tol_value(k, *v)?);
    }
    tol.global = match args.tol.or(file.tol) {
        Some(v) => Some(check_tol_value("tol", v)?),
        None => None,
    };
    Ok(RunConfig {
        entries,
        grid_overrides: grid,
        seeds,
        tol,
        jobs: resolve_jobs(args.jobs, file.jobs, env_jobs)?,
        format: args.format.or(file.format).unwrap_or_default(),
        out: args.out.clone().or(file.out),
    })
}

fn render(report: &VerificationReport, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    })
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => {
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
        }
    }
}

fn cmd_verify(args: &VerifyArgs, env_jobs: Option<&str>, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = resolve_verify(args, env_jobs)?;
    let report = run_all(&cfg.plan())?;
    emit(&render(&report, cfg.format)?, cfg.out.as_deref(), stdout)?;
    Ok(report.exit_code())
}

fn cmd_check(args: &CheckArgs, env_jobs: Option<&str>, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let plan = RunPlan {
        entries: Vec::new(),
        seeds: select_seeds(&args.seeds)?,
        tol: TolOverrides::default(),
        jobs: resolve_jobs(args.jobs, None, env_jobs)?,
    };
    let report = run_all(&plan)?;
    let format = args.format.unwrap_or_default();
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &report.rows {
                s.push_str(&format!(
                    "{:<12} {:<10} {}\n",
                    r.status.as_str(),
                    r.entry_id,
                    r.reason.as_deref().unwrap_or("")
                ));
            }
            s
        }
        f => render(&report, f)?,
    };
    emit(&text, args.out.as_deref(), stdout)?;
    Ok(report.exit_code())
}

fn cmd_list(args: &ListArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let text = if args.json {
        serde_json::to_string_pretty(&catalog_document()).expect("catalog serialises") + "\n"
    } else {
        let mut s = String::new();
        for e in all_entries() {
            let id = match e.alias {
                Some(a) => format!("{} ({a})", e.id),
                None => e.id.to_string(),
            };
            s.push_str(&format!(
                "{id:<14} {}  {}  [{}]  {}; F = {}\n",
                e.group, e.statement, e.constraints_text, e.provenance.source, e.provenance.seed
            ));
        }
        for f in all_failures() {
            s.push_str(&format!(
                "{:<14} seed  {}  [inadmissible at {}]  {}\n",
                f.id, f.description, f.expected_failing_endpoint, f.provenance
            ));
        }
        s
    };
    emit(&text, None, stdout)?;
    Ok(0)
}

/// Parse `args` (program name first) and run. Diagnostics go to `stderr`.
pub fn run_with<I, T>(args: I, env_jobs: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    let result = match &cli.command {
        None => cmd_verify(&VerifyArgs::default(), env_jobs, stdout),
        Some(Command::Verify(a)) => cmd_verify(a, env_jobs, stdout),
        Some(Command::Check(a)) => cmd_check(a, env_jobs, stdout),
        Some(Command::List(a)) => cmd_list(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main_exit() -> i32 {
    let env = std::env::var(JOBS_ENV).ok();
    run_with(std::env::args_os(), env.as_deref(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
