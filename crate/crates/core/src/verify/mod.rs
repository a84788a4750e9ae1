//! Named verification suites.
//!
//! The catalogue lives in `data/suites.toml`. Each check names an entry in
//! the registry in [`checks`] and carries its own parameter grid and class.

mod checks;

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;

pub use checks::{known_check, CHECK_IDS};

const CATALOGUE: &str = include_str!("../../data/suites.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    MustPass,
    ReportOnly,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::MustPass => "must-pass",
            Class::ReportOnly => "report-only",
        })
    }
}

/// Inclusive parameter range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
pub struct Span(pub u64, pub u64);

impl Span {
    pub fn iter(self) -> std::ops::RangeInclusive<u64> {
        self.0..=self.1
    }
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("expected N or LO..HI, got {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
            None => (s, s),
        };
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(Span(lo, hi))
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub id: String,
    pub class: Class,
    pub claim: String,
    pub a: Option<Span>,
    pub b: Option<Span>,
    pub j: Option<Span>,
    pub k: Option<Span>,
    pub y: Option<Span>,
    pub z: Option<Span>,
    pub n: Option<u64>,
    pub len: Option<u64>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteSpec {
    pub name: String,
    pub description: String,
    #[serde(default)]
    pub tags: Vec<String>,
    #[serde(rename = "check")]
    pub checks: Vec<CheckSpec>,
}

#[derive(Deserialize)]
struct Catalogue {
    suite: Vec<SuiteSpec>,
}

pub fn parse_catalogue(text: &str) -> Result<Vec<SuiteSpec>> {
    let cat: Catalogue = toml::from_str(text).map_err(|e| Error::Catalogue(e.to_string()))?;
    for s in &cat.suite {
        if let Some(c) = s.checks.iter().find(|c| !known_check(&c.id)) {
            return Err(Error::Catalogue(format!(
                "suite {} names unknown check {}",
                s.name, c.id
            )));
        }
    }
    Ok(cat.suite)
}

/// The bundled catalogue.
pub fn catalogue() -> &'static [SuiteSpec] {
    static CAT: OnceLock<Vec<SuiteSpec>> = OnceLock::new();
    CAT.get_or_init(|| parse_catalogue(CATALOGUE).expect("bundled catalogue is valid"))
}

pub fn list_suites() -> &'static [SuiteSpec] {
    catalogue()
}

pub fn suite(name: &str) -> Result<&'static SuiteSpec> {
    catalogue()
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Parameter overrides applied to every check of a suite, parsed from
/// `key=value` pairs separated by commas, e.g. `a=2..4,n=500`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridOverride {
    pub a: Option<Span>,
    pub b: Option<Span>,
    pub j: Option<Span>,
    pub k: Option<Span>,
    pub y: Option<Span>,
    pub z: Option<Span>,
    pub n: Option<u64>,
    pub len: Option<u64>,
    pub tol: Option<f64>,
}

impl FromStr for GridOverride {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut g = GridOverride::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part.split_once('=').ok_or_else(|| {
                Error::Precondition(format!("grid entry {part:?} is not key=value"))
            })?;
            let int = |v: &str| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Precondition(format!("{key}: {v:?} is not an integer")))
            };
            match key.trim() {
                "a" => g.a = Some(val.parse()?),
                "b" => g.b = Some(val.parse()?),
                "j" => g.j = Some(val.parse()?),
                "k" => g.k = Some(val.parse()?),
                "y" => g.y = Some(val.parse()?),
                "z" => g.z = Some(val.parse()?),
                "n" => g.n = Some(int(val)?),
                "len" => g.len = Some(int(val)?),
                "tol" => {
                    g.tol = Some(val.trim().parse().map_err(|_| {
                        Error::Precondition(format!("tol: {val:?} is not a number"))
                    })?)
                }
                other => return Err(Error::Precondition(format!("unknown grid key {other:?}"))),
            }
        }
        Ok(g)
    }
}

impl GridOverride {
    /// Overrides only parameters the check already uses.
    pub fn apply(&self, spec: &CheckSpec) -> CheckSpec {
        let mut s = spec.clone();
        fn set<T: Copy>(slot: &mut Option<T>, v: Option<T>) {
            if slot.is_some() {
                if let Some(v) = v {
                    *slot = Some(v);
                }
            }
        }
        set(&mut s.a, self.a);
        set(&mut s.j, self.j);
        set(&mut s.k, self.k);
        set(&mut s.y, self.y);
        set(&mut s.z, self.z);
        set(&mut s.n, self.n);
        set(&mut s.len, self.len);
        set(&mut s.tol, self.tol);
        // `b` is implicit in most specs, so it is always taken.
        if self.b.is_some() {
            s.b = self.b;
        }
        s
    }
}

/// What a single check found.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub class: Class,
    pub claim: String,
    pub passed: bool,
    /// Parameter points evaluated.
    pub points: usize,
    pub max_residual: Option<u64>,
    pub first_failure: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub description: String,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn must_pass_failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks
            .iter()
            .filter(|c| c.class == Class::MustPass && !c.passed)
    }

    pub fn ok(&self) -> bool {
        self.must_pass_failures().next().is_none()
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Text => Ok(self.to_text()),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => serde_json::to_string_pretty(self)
                .map(|s| s + "\n")
                .map_err(|e| Error::Format {
                    line: 0,
                    message: e.to_string(),
                }),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {}: {}\n", self.suite, self.description);
        for c in &self.checks {
            let status = match (c.passed, c.class) {
                (true, _) => "PASS",
                (false, Class::MustPass) => "FAIL",
                (false, Class::ReportOnly) => "NOTE",
            };
            let _ = writeln!(
                s,
                "  {status:<4} {:<30} [{}] {} ({} points)",
                c.id, c.class, c.claim, c.points
            );
            if let Some(r) = c.max_residual {
                let _ = writeln!(s, "       max residual {r}");
            }
            if let Some(f) = &c.first_failure {
                let _ = writeln!(s, "       first failure: {f}");
            }
            if !c.detail.is_empty() {
                let _ = writeln!(s, "       {}", c.detail);
            }
        }
        let failures = self.must_pass_failures().count();
        let _ = writeln!(
            s,
            "{}: {} checks, {} must-pass failures",
            if failures == 0 { "ok" } else { "FAILED" },
            self.checks.len(),
            failures
        );
        s
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Format {
            line: 0,
            message: e.to_string(),
        };
        w.write_record([
            "suite",
            "id",
            "class",
            "passed",
            "points",
            "max_residual",
            "first_failure",
            "detail",
        ])
        .map_err(err)?;
        for c in &self.checks {
            w.write_record([
                self.suite.as_str(),
                &c.id,
                &c.class.to_string(),
                if c.passed { "true" } else { "false" },
                &c.points.to_string(),
                &c.max_residual.map(|r| r.to_string()).unwrap_or_default(),
                c.first_failure.as_deref().unwrap_or(""),
                &c.detail,
            ])
            .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Format {
            line: 0,
            message: e.to_string(),
        })?;
        String::from_utf8(bytes).map_err(|e| Error::Format {
            line: 0,
            message: e.to_string(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(Error::Precondition(format!("unknown report format {s:?}"))),
        }
    }
}

pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    let o = checks::run(spec)?;
    Ok(CheckReport {
        id: spec.id.clone(),
        class: spec.class,
        claim: spec.claim.clone(),
        passed: o.passed,
        points: o.points,
        max_residual: o.max_residual,
        first_failure: o.first_failure,
        detail: o.detail,
    })
}

pub fn run_spec(spec: &SuiteSpec, grid: &GridOverride) -> Result<SuiteReport> {
    let specs: Vec<CheckSpec> = spec.checks.iter().map(|c| grid.apply(c)).collect();
    let checks = par::map(&specs, run_check)
        .into_iter()
        .collect::<Result<_>>()?;
    Ok(SuiteReport {
        suite: spec.name.clone(),
        description: spec.description.clone(),
        checks,
    })
}

pub fn run_suite(name: &str, grid: &GridOverride) -> Result<SuiteReport> {
    run_spec(suite(name)?, grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_loads() {
        let names: Vec<_> = list_suites().iter().map(|s| s.name.as_str()).collect();
        for want in [
            "golden-core",
            "double",
            "squares",
            "extraction",
            "cf",
            "rank-transform",
            "oeis",
            "cf-powers2",
        ] {
            assert!(names.contains(&want), "{want}");
        }
        assert!(list_suites()
            .iter()
            .all(|s| !s.tags.is_empty() && !s.checks.is_empty()));
        for id in CHECK_IDS {
            assert!(
                list_suites()
                    .iter()
                    .flat_map(|s| &s.checks)
                    .any(|c| c.id == *id),
                "{id} unused"
            );
        }
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite("nope", &GridOverride::default()),
            Err(Error::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn catalogue_rejects_unknown_checks() {
        let text = "[[suite]]\nname='x'\ndescription='d'\n[[suite.check]]\nid='no.such'\nclass='must-pass'\nclaim='c'\n";
        assert!(matches!(parse_catalogue(text), Err(Error::Catalogue(_))));
        let text = "[[suite]]\nname='x'\ndescription='d'\n[[suite.check]]\nid='golden.beatty'\nclass='maybe'\nclaim='c'\n";
        assert!(matches!(parse_catalogue(text), Err(Error::Catalogue(_))));
    }

    #[test]
    fn grid_parsing() {
        let g: GridOverride = "a=2..4, n=50,k=3".parse().unwrap();
        assert_eq!(g.a, Some(Span(2, 4)));
        assert_eq!(g.k, Some(Span(3, 3)));
        assert_eq!(g.n, Some(50));
        assert!("q=1".parse::<GridOverride>().is_err());
        assert!("a=4..2".parse::<GridOverride>().is_err());
        assert!("n".parse::<GridOverride>().is_err());
        let spec = &suite("golden-core").unwrap().checks[1];
        let applied = g.apply(spec);
        assert_eq!(
            (applied.a, applied.n, applied.k),
            (Some(Span(2, 4)), Some(50), None)
        );
    }

    #[test]
    fn small_rank_transform_suite() {
        let r = run_suite("rank-transform", &"n=60".parse().unwrap()).unwrap();
        assert!(r.ok(), "{}", r.to_text());
        let csv = r.to_csv().unwrap();
        assert!(csv.starts_with("suite,id,class,passed"));
        assert_eq!(csv.lines().count(), 3);
        let json: serde_json::Value =
            serde_json::from_str(&r.render(ReportFormat::Json).unwrap()).unwrap();
        assert_eq!(json["checks"][0]["id"], "rank.equivalence");
    }

    #[test]
    fn reports_are_deterministic() {
        let g: GridOverride = "n=80,a=2..3".parse().unwrap();
        let a = run_suite("golden-core", &g).unwrap();
        let b = run_suite("golden-core", &g).unwrap();
        assert_eq!(a.to_text(), b.to_text());
    }
}
