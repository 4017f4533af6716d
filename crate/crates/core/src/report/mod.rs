//! Named verification scenarios and their reports.
//!
//! A [`Scenario`] is an id plus parameters; [`run_scenario`] dispatches it to
//! the kernel modules and collects one [`StepRecord`] per checked assertion.
//! Reports render to JSON with the top-level shape
//! `{scenario, status, steps: [{name, anchor, artifact, scalar, counts,
//! enclosures, millis, passed}], version, seed}` and to markdown.

mod render;
mod scenarios;

pub use render::{to_json, to_markdown, Markdown};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::tubes::{Family, FamilyTag};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "String")]
pub enum ScenarioId {
    ThmHom,
    Thm1,
    Thm2Hopf,
    Thm2NonhopfCase1,
    Thm2NonhopfCase2,
    TypeDE,
    TypeBCSweep,
    Ruled,
}

impl ScenarioId {
    pub const ALL: [ScenarioId; 8] = [
        ScenarioId::ThmHom,
        ScenarioId::Thm1,
        ScenarioId::Thm2Hopf,
        ScenarioId::Thm2NonhopfCase1,
        ScenarioId::Thm2NonhopfCase2,
        ScenarioId::TypeDE,
        ScenarioId::TypeBCSweep,
        ScenarioId::Ruled,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioId::ThmHom => "thm-hom",
            ScenarioId::Thm1 => "thm1",
            ScenarioId::Thm2Hopf => "thm2-hopf",
            ScenarioId::Thm2NonhopfCase1 => "thm2-nonhopf-case1",
            ScenarioId::Thm2NonhopfCase2 => "thm2-nonhopf-case2",
            ScenarioId::TypeDE => "type-DE",
            ScenarioId::TypeBCSweep => "type-BC-sweep",
            ScenarioId::Ruled => "ruled",
        }
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl From<ScenarioId> for String {
    fn from(id: ScenarioId) -> String {
        id.as_str().to_string()
    }
}

impl FromStr for ScenarioId {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| ReportError::UnknownScenario(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub n: Option<u32>,
    pub m: Option<u32>,
    /// Restricts tube scenarios to one family.
    pub family: Option<FamilyTag>,
    pub d_samples: usize,
    pub seed: u64,
    /// Width `2^-bits` for refined root and radius enclosures.
    pub precision_bits: u32,
    /// Record wall-clock millis per step; off by default so reports are
    /// byte-identical across runs.
    pub timing: bool,
    /// Replacement multiplicity table for the type-D tube.
    pub d_multiplicities: Option<Vec<u32>>,
}

impl Default for Params {
    fn default() -> Self {
        Self { n: None, m: None, family: None, d_samples: 5, seed: 1, precision_bits: 40, timing: false, d_multiplicities: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub id: ScenarioId,
    pub params: Params,
}

impl Scenario {
    pub fn new(id: ScenarioId) -> Self {
        Self { id, params: Params::default() }
    }

    pub fn with_params(id: ScenarioId, params: Params) -> Self {
        Self { id, params }
    }

    /// Rejects parameters the scenario cannot take.
    pub fn validate(&self) -> Result<(), ReportError> {
        let p = &self.params;
        let usage = |msg: String| Err(ReportError::Usage(msg));
        if p.precision_bits == 0 || p.precision_bits > 256 {
            return usage(format!("precision bits must be in 1..=256, got {}", p.precision_bits));
        }
        if p.m.is_some() && !matches!(self.id, ScenarioId::ThmHom) {
            return usage(format!("{} takes no m", self.id));
        }
        match (self.id, p.n) {
            (ScenarioId::ThmHom, Some(n)) => {
                if n < 2 {
                    return usage(format!("type A needs n >= 2, got {n}"));
                }
                if let Some(m) = p.m {
                    if m + 2 > n {
                        return usage(format!("type A needs 0 <= m <= n-2, got n={n}, m={m}"));
                    }
                }
            }
            (ScenarioId::ThmHom, None) if p.m.is_some() => return usage("m needs n".into()),
            (ScenarioId::Thm2Hopf, Some(n)) if n < 2 => return usage(format!("n must be >= 2, got {n}")),
            (ScenarioId::Ruled, Some(n)) if n < 2 => return usage(format!("n must be >= 2, got {n}")),
            (ScenarioId::TypeBCSweep, Some(n)) => match p.family {
                Some(FamilyTag::C) if n < 5 || n % 2 == 0 => {
                    return usage(format!("type C needs odd n >= 5, got {n}"))
                }
                Some(FamilyTag::B) if n < 2 => return usage(format!("type B needs n >= 2, got {n}")),
                None if n < 2 => return usage(format!("n must be >= 2, got {n}")),
                _ => {}
            },
            (ScenarioId::TypeDE, Some(n)) => match p.family {
                Some(FamilyTag::D) if n != 9 => return usage(format!("type D lives in CP^9, got n={n}")),
                Some(FamilyTag::E) if n != 15 => return usage(format!("type E lives in CP^15, got n={n}")),
                None => return usage("n needs a family for type-DE".into()),
                _ => {}
            },
            (ScenarioId::Thm1 | ScenarioId::Thm2NonhopfCase1 | ScenarioId::Thm2NonhopfCase2, Some(_)) => {
                return usage(format!("{} takes no n", self.id))
            }
            _ => {}
        }
        if let Some(tag) = p.family {
            let fits = match self.id {
                ScenarioId::ThmHom => tag == FamilyTag::A,
                ScenarioId::TypeBCSweep => matches!(tag, FamilyTag::B | FamilyTag::C),
                ScenarioId::TypeDE => matches!(tag, FamilyTag::D | FamilyTag::E),
                _ => false,
            };
            if !fits {
                return usage(format!("{} does not cover type {tag}", self.id));
            }
        }
        if let Some(mults) = &p.d_multiplicities {
            if mults.len() != 4 {
                return usage(format!("type D needs 4 multiplicities, got {}", mults.len()));
            }
        }
        if self.id == ScenarioId::Thm2NonhopfCase2 && p.d_samples == 0 {
            return usage("d-samples must be positive".into());
        }
        Ok(())
    }

    /// The scenario for `verify tube --family F --n N [--m M]`.
    pub fn tube(tag: FamilyTag, n: u32, m: Option<u32>) -> Result<Self, ReportError> {
        let id = match tag {
            FamilyTag::A => ScenarioId::ThmHom,
            FamilyTag::B | FamilyTag::C => ScenarioId::TypeBCSweep,
            FamilyTag::D | FamilyTag::E => ScenarioId::TypeDE,
        };
        if tag == FamilyTag::A {
            Family::new(tag, Some(m.unwrap_or(0))).map_err(|e| ReportError::Usage(e.to_string()))?;
        } else if m.is_some() {
            return Err(ReportError::Usage(format!("type {tag} takes no m")));
        }
        let s = Self::with_params(id, Params { n: Some(n), m: if tag == FamilyTag::A { m } else { None }, family: Some(tag), ..Params::default() });
        s.validate()?;
        Ok(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepRecord {
    pub name: String,
    pub anchor: String,
    pub artifact: serde_json::Value,
    pub scalar: Option<String>,
    pub counts: BTreeMap<String, usize>,
    pub enclosures: Vec<String>,
    pub millis: u64,
    pub passed: bool,
}

impl StepRecord {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, artifact: serde_json::Value, passed: bool) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            artifact,
            scalar: None,
            counts: BTreeMap::new(),
            enclosures: Vec::new(),
            millis: 0,
            passed,
        }
    }

    pub fn count(mut self, key: &str, value: usize) -> Self {
        self.counts.insert(key.into(), value);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub scenario: ScenarioId,
    pub status: Status,
    pub steps: Vec<StepRecord>,
    pub version: String,
    pub seed: u64,
}

impl VerificationReport {
    pub fn step(&self, name: &str) -> Option<&StepRecord> {
        self.steps.iter().find(|s| s.name == name)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.steps.iter().filter(|s| !s.passed).map(|s| s.name.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AggregateReport {
    pub status: Status,
    pub version: String,
    pub seed: u64,
    pub scenarios: Vec<VerificationReport>,
}

impl AggregateReport {
    pub fn report(&self, id: ScenarioId) -> Option<&VerificationReport> {
        self.scenarios.iter().find(|r| r.scenario == id)
    }
}

/// Collects step records, timing each one when asked.
pub(crate) struct Recorder {
    timing: bool,
    steps: Vec<StepRecord>,
    inconclusive: bool,
}

impl Recorder {
    fn new(timing: bool) -> Self {
        Self { timing, steps: Vec::new(), inconclusive: false }
    }

    /// Runs `f` and records its steps; an error becomes a failing step.
    pub(crate) fn run<E: fmt::Display>(&mut self, name: &str, anchor: &str, f: impl FnOnce() -> Result<Vec<StepRecord>, E>) {
        let start = Instant::now();
        let out = f();
        let millis = if self.timing { start.elapsed().as_millis() as u64 } else { 0 };
        match out {
            Ok(steps) => {
                let k = steps.len().max(1) as u64;
                self.steps.extend(steps.into_iter().map(|mut s| {
                    s.millis = millis / k;
                    s
                }));
            }
            Err(e) => {
                let mut s = StepRecord::new(name, anchor, serde_json::json!({ "error": e.to_string() }), false);
                s.millis = millis;
                self.steps.push(s);
            }
        }
    }

    pub(crate) fn mark_inconclusive(&mut self) {
        self.inconclusive = true;
    }
}

/// Runs one scenario. Only invalid parameters are errors; failed checks are
/// reported in the returned report.
pub fn run_scenario(s: &Scenario) -> Result<VerificationReport, ReportError> {
    s.validate()?;
    let mut rec = Recorder::new(s.params.timing);
    scenarios::dispatch(s, &mut rec);
    let status = if rec.steps.iter().any(|st| !st.passed) || rec.steps.is_empty() {
        Status::Fail
    } else if rec.inconclusive {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    Ok(VerificationReport { scenario: s.id, status, steps: rec.steps, version: VERSION.into(), seed: s.params.seed })
}

/// Runs every scenario with its default sweep, concurrently; reports come
/// back in [`ScenarioId::ALL`] order.
pub fn run_all(seed: u64, precision_bits: u32, timing: bool) -> Result<AggregateReport, ReportError> {
    let params = Params { seed, precision_bits, timing, ..Params::default() };
    let scenarios: Vec<Scenario> = ScenarioId::ALL.iter().map(|&id| Scenario::with_params(id, params.clone())).collect();
    for s in &scenarios {
        s.validate()?;
    }
    let mut reports: Vec<VerificationReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = scenarios.iter().map(|s| scope.spawn(move || run_scenario(s))).collect();
        handles.into_iter().map(|h| h.join().expect("scenario thread panicked")).collect::<Result<_, _>>()
    })?;
    reports.sort_by_key(|r| r.scenario);
    Ok(aggregate(seed, reports))
}

pub fn aggregate(seed: u64, scenarios: Vec<VerificationReport>) -> AggregateReport {
    let status = if scenarios.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if scenarios.iter().any(|r| r.status == Status::Inconclusive) {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    AggregateReport { status, version: VERSION.into(), seed, scenarios }
}
