//! The dual-integral catalog: each entry pairs a numerically integrable left
//! side with its closed-form right side, plus the failure seeds whose
//! transforms do not satisfy the admissibility condition.

mod entries;
mod failures;
pub mod geometry;
mod lhs;
mod seeds;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hankel::{Endpoint, SeedFunction};
use crate::quad::{Interval, OscillationSpec, QuadError, QuadResult};

pub use entries::all_entries;
pub use failures::{all_failures, control_seed};
pub use seeds::{theorem_seeds, TheoremSeed};

/// Number of displayed dual integrals.
pub const ENTRY_COUNT: usize = 41;
/// Number of failure seeds.
pub const FAILURE_COUNT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Group {
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl Group {
    pub const ALL: [Group; 5] = [Group::G2, Group::G3, Group::G4, Group::G5, Group::G6];

    pub fn parse(s: &str) -> Option<Group> {
        Group::ALL.into_iter().find(|g| g.as_str().eq_ignore_ascii_case(s))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Group::G2 => "G2",
            Group::G3 => "G3",
            Group::G4 => "G4",
            Group::G5 => "G5",
            Group::G6 => "G6",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Comparison tolerance class of an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TolClass {
    Decaying,
    Oscillatory,
    Singular,
}

impl TolClass {
    pub fn default_tol(self) -> f64 {
        match self {
            TolClass::Decaying => 1e-9,
            TolClass::Oscillatory => 1e-7,
            TolClass::Singular => 1e-6,
        }
    }

    pub fn parse(s: &str) -> Option<TolClass> {
        match s.to_ascii_lowercase().as_str() {
            "decaying" => Some(TolClass::Decaying),
            "oscillatory" => Some(TolClass::Oscillatory),
            "singular" => Some(TolClass::Singular),
            _ => None,
        }
    }
}

/// Named parameter values; a missing name reads as NaN so that constraint
/// predicates reject it.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParamPoint(pub BTreeMap<String, f64>);

impl ParamPoint {
    pub fn new(pairs: &[(&str, f64)]) -> Self {
        ParamPoint(pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect())
    }

    pub fn get(&self, name: &str) -> f64 {
        self.0.get(name).copied().unwrap_or(f64::NAN)
    }

    /// Integer parameter; NaN-safe (returns None when not a non-negative integer).
    pub fn get_n(&self, name: &str) -> Option<u32> {
        let v = self.get(name);
        (v >= 0.0 && v == v.round() && v < 1e6).then_some(v as u32)
    }

    pub fn set(&mut self, name: &str, v: f64) {
        self.0.insert(name.to_string(), v);
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

pub type IntegrandFn = fn(&ParamPoint, f64) -> f64;
pub type IntervalFn = fn(&ParamPoint) -> Interval;
pub type OscFn = fn(&ParamPoint) -> OscillationSpec;
pub type RealFn = fn(&ParamPoint) -> f64;
pub type PredicateFn = fn(&ParamPoint) -> bool;
/// Specialised left-side evaluator: (point, quadrature tolerance).
pub type LhsFn = fn(&ParamPoint, f64) -> Result<QuadResult, LhsError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LhsError {
    #[error(transparent)]
    Quad(#[from] QuadError),
    /// A combination that should be real kept an imaginary part.
    #[error("imaginary part {im:e} exceeds tolerance {tol:e}")]
    ImaginaryResidue { im: f64, tol: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// The function F whose transform pair produces the identity.
    pub seed: &'static str,
    /// Citation of the integral table entry the dual was derived from.
    pub source: &'static str,
}

/// One dual integral identity.
#[derive(Clone)]
pub struct IntegralEntry {
    pub id: &'static str,
    pub alias: Option<&'static str>,
    pub group: Group,
    /// Plain-text statement of the identity.
    pub statement: &'static str,
    pub params: &'static [&'static str],
    /// Integrand, or its smooth factor when `osc` is present.
    pub integrand: IntegrandFn,
    pub interval: IntervalFn,
    pub osc: Option<OscFn>,
    pub rhs: RealFn,
    pub constraints: PredicateFn,
    pub constraints_text: &'static str,
    pub default_grid: Vec<ParamPoint>,
    pub provenance: Provenance,
    pub tol_class: TolClass,
    pub custom_lhs: Option<LhsFn>,
}

impl fmt::Debug for IntegralEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegralEntry")
            .field("id", &self.id)
            .field("group", &self.group)
            .field("statement", &self.statement)
            .finish_non_exhaustive()
    }
}

impl IntegralEntry {
    /// The full integrand, kernel included.
    pub fn full_integrand(&self, p: &ParamPoint, x: f64) -> f64 {
        let f = (self.integrand)(p, x);
        match self.osc {
            Some(o) => {
                let o = o(p);
                f * crate::specfun::jv(o.bessel_order.0, o.frequency * x)
            }
            None => f,
        }
    }

    pub fn matches_id(&self, id: &str) -> bool {
        self.id.eq_ignore_ascii_case(id) || self.alias.is_some_and(|a| a.eq_ignore_ascii_case(id))
    }

    pub fn metadata(&self) -> EntryMetadata {
        EntryMetadata {
            id: self.id.to_string(),
            alias: self.alias.map(str::to_string),
            group: self.group,
            statement: self.statement.to_string(),
            params: self.params.iter().map(|s| s.to_string()).collect(),
            constraints: self.constraints_text.to_string(),
            provenance_seed: self.provenance.seed.to_string(),
            provenance_source: self.provenance.source.to_string(),
            tol_class: self.tol_class,
            default_grid: self.default_grid.clone(),
        }
    }
}

/// A function for which the transform method breaks down.
#[derive(Debug, Clone)]
pub struct FailureSeed {
    pub id: &'static str,
    pub description: &'static str,
    pub seed: SeedFunction,
    pub expected_failing_endpoint: Endpoint,
    pub provenance: &'static str,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown entry id `{0}`")]
    UnknownEntry(String),
    #[error("unknown failure seed `{0}`")]
    UnknownSeed(String),
}

/// Exact (case-insensitive) id or alias lookup.
pub fn entry_by_id(id: &str) -> Result<IntegralEntry, CatalogError> {
    all_entries().into_iter().find(|e| e.matches_id(id)).ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))
}

/// Entries selected by an id or id prefix: "T29" selects T29a and T29b.
pub fn select_entries(key: &str) -> Result<Vec<IntegralEntry>, CatalogError> {
    let all = all_entries();
    if let Some(e) = all.iter().find(|e| e.matches_id(key)) {
        return Ok(vec![e.clone()]);
    }
    let lower = key.to_ascii_lowercase();
    let hits: Vec<IntegralEntry> = all
        .into_iter()
        .filter(|e| {
            let id = e.id.to_ascii_lowercase();
            id.len() == lower.len() + 1 && id.starts_with(&lower) && id.as_bytes()[lower.len()].is_ascii_alphabetic()
        })
        .collect();
    if hits.is_empty() {
        Err(CatalogError::UnknownEntry(key.to_string()))
    } else {
        Ok(hits)
    }
}

pub fn failure_by_id(id: &str) -> Result<FailureSeed, CatalogError> {
    all_failures()
        .into_iter()
        .find(|s| s.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| CatalogError::UnknownSeed(id.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryMetadata {
    pub id: String,
    pub alias: Option<String>,
    pub group: Group,
    pub statement: String,
    pub params: Vec<String>,
    pub constraints: String,
    pub provenance_seed: String,
    pub provenance_source: String,
    pub tol_class: TolClass,
    pub default_grid: Vec<ParamPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedMetadata {
    pub id: String,
    pub description: String,
    pub expected_failing_endpoint: String,
    pub provenance: String,
}

/// Version of the metadata and report documents.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub schema_version: u32,
    pub entries: Vec<EntryMetadata>,
    pub failure_seeds: Vec<SeedMetadata>,
}

/// The catalog metadata as a serialisable document.
pub fn catalog_document() -> CatalogDocument {
    CatalogDocument {
        schema_version: SCHEMA_VERSION,
        entries: all_entries().iter().map(IntegralEntry::metadata).collect(),
        failure_seeds: all_failures()
            .iter()
            .map(|s| SeedMetadata {
                id: s.id.to_string(),
                description: s.description.to_string(),
                expected_failing_endpoint: s.expected_failing_endpoint.to_string(),
                provenance: s.provenance.to_string(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all_entries().len(), ENTRY_COUNT);
        assert_eq!(all_failures().len(), FAILURE_COUNT);
        assert_eq!(theorem_seeds().len(), 30);
    }

    #[test]
    fn ids_are_unique() {
        let mut seen = BTreeSet::new();
        for e in all_entries() {
            assert!(seen.insert(e.id.to_ascii_lowercase()), "{}", e.id);
            if let Some(a) = e.alias {
                assert!(seen.insert(a.to_ascii_lowercase()), "{a}");
            }
        }
        for s in all_failures() {
            assert!(seen.insert(s.id.to_ascii_lowercase()), "{}", s.id);
        }
    }

    #[test]
    fn grids_satisfy_constraints() {
        for e in all_entries() {
            assert!(e.default_grid.len() >= 3, "{}", e.id);
            for p in &e.default_grid {
                assert!((e.constraints)(p), "{} at {p}", e.id);
                let keys: Vec<&str> = p.0.keys().map(String::as_str).collect();
                let mut params = e.params.to_vec();
                params.sort_unstable();
                assert_eq!(keys, params, "{}", e.id);
                assert!((e.rhs)(p).is_finite(), "{} rhs at {p}", e.id);
                let (lo, hi) = (e.interval)(p).bounds();
                let x = if hi.is_finite() { lo + 0.37 * (hi - lo) } else { lo + 0.37 };
                assert!(e.custom_lhs.is_some() || e.full_integrand(p, x).is_finite(), "{} integrand at {p}", e.id);
            }
        }
    }

    #[test]
    fn every_group_is_populated() {
        let entries = all_entries();
        for g in Group::ALL {
            assert!(entries.iter().any(|e| e.group == g), "{g}");
            assert_eq!(Group::parse(&g.to_string().to_lowercase()), Some(g));
        }
        assert_eq!(Group::parse("G7"), None);
    }

    #[test]
    fn lookup() {
        assert_eq!(entry_by_id("t03").unwrap().id, "T03");
        assert_eq!(entry_by_id("heron").unwrap().id, "T01");
        assert!(matches!(entry_by_id("T99"), Err(CatalogError::UnknownEntry(_))));
        let pair: Vec<&str> = select_entries("T29").unwrap().iter().map(|e| e.id).collect();
        assert_eq!(pair, ["T29a", "T29b"]);
        assert_eq!(select_entries("T3").unwrap_err(), CatalogError::UnknownEntry("T3".into()));
        assert!(failure_by_id("s6514_1").is_ok());
        assert!(failure_by_id("BOGUS").is_err());
    }

    #[test]
    fn constraints_reject_missing_parameters() {
        for e in all_entries() {
            assert!(!(e.constraints)(&ParamPoint::default()), "{}", e.id);
        }
    }

    #[test]
    fn document_round_trips() {
        let doc = catalog_document();
        assert_eq!(doc.schema_version, SCHEMA_VERSION);
        let text = serde_json::to_string(&doc).unwrap();
        let back: CatalogDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }
}
