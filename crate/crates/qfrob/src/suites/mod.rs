//! Verification suites. Each check is a named closure producing a status and
//! a JSON witness; checks run concurrently and the report lists them sorted
//! by name.

pub mod bigon;
pub mod specialize;
pub mod surface;
pub mod torus;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::fixture::FixtureError;
use crate::report::{CheckRecord, Report, Status};

pub const DEFAULT_SEED: u64 = 20_240_617;

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    /// Overrides the per-check default orders.
    pub n: Option<u32>,
    pub seed: u64,
    pub exploratory: bool,
    /// Skew-form fixtures for the torus suite (random forms when empty).
    pub forms: Vec<String>,
    /// Surface fixture for the subgroup checks (bundled square by default).
    pub surface: Option<String>,
    /// Points of `SL_2` for the specialization suite (bundled points by default).
    pub points: Vec<String>,
}

impl RunConfig {
    pub fn new(seed: u64) -> Self {
        RunConfig {
            seed,
            ..Default::default()
        }
    }

    /// `[n]` if an order was requested, else `defaults`.
    pub fn orders(&self, defaults: &[u32]) -> Vec<u32> {
        match self.n {
            Some(n) => vec![n],
            None => defaults.to_vec(),
        }
    }

    pub fn order(&self, default: u32) -> u32 {
        self.n.unwrap_or(default)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Bigon,
    Torus,
    Surface,
    Specialize,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bigon => "bigon",
            Suite::Torus => "torus",
            Suite::Surface => "surface",
            Suite::Specialize => "specialize",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Value,
}

impl Outcome {
    pub fn new(passed: bool, witness: Value) -> Self {
        Outcome {
            status: if passed { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn info(witness: Value) -> Self {
        Outcome {
            status: Status::Info,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Passes when every part passes; the witness lists each part.
    pub fn all(parts: Vec<(&str, Outcome)>) -> Self {
        let passed = parts.iter().all(|(_, o)| o.passed());
        let witness: serde_json::Map<String, Value> = parts
            .into_iter()
            .map(|(name, o)| (name.to_string(), json!({ "status": o.status, "witness": o.witness })))
            .collect();
        Outcome::new(passed, Value::Object(witness))
    }
}

impl From<qfrob_core::Error> for Outcome {
    fn from(e: qfrob_core::Error) -> Self {
        Outcome::new(false, json!({ "error": e.to_string() }))
    }
}

type CheckFn = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Check {
    pub name: String,
    pub reference: &'static str,
    pub hard: bool,
    pub criterion: Option<u8>,
    pub run: CheckFn,
}

impl Check {
    pub fn hard(name: impl Into<String>, reference: &'static str, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Check {
            name: name.into(),
            reference,
            hard: true,
            criterion: None,
            run: Box::new(run),
        }
    }

    pub fn criterion(mut self, k: u8) -> Self {
        self.criterion = Some(k);
        self
    }

    pub fn exploratory(
        name: impl Into<String>,
        reference: &'static str,
        run: impl Fn() -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Check {
            name: name.into(),
            reference,
            hard: false,
            criterion: None,
            run: Box::new(run),
        }
    }

    pub fn execute(&self) -> CheckRecord {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        log::info!("{} finished in {} ms: {:?}", self.name, elapsed_ms, outcome.status);
        CheckRecord {
            name: self.name.clone(),
            reference: self.reference.to_string(),
            status: outcome.status,
            hard: self.hard,
            criterion: self.criterion,
            witness: outcome.witness,
            elapsed_ms,
        }
    }
}

/// A generator seeded by the run seed and the check name, so results do not
/// depend on scheduling.
pub fn check_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

pub fn checks(suite: Suite, cfg: &RunConfig) -> Result<Vec<Check>, FixtureError> {
    Ok(match suite {
        Suite::Bigon => bigon::checks(cfg)?,
        Suite::Torus => torus::checks(cfg)?,
        Suite::Surface => surface::checks(cfg)?,
        Suite::Specialize => specialize::checks(cfg)?,
        Suite::All => {
            let mut all = bigon::checks(cfg)?;
            all.extend(torus::checks(cfg)?);
            all.extend(surface::checks(cfg)?);
            all.extend(specialize::checks(cfg)?);
            all
        }
    })
}

pub fn run_checks(checks: &[Check]) -> Vec<CheckRecord> {
    let mut records: Vec<CheckRecord> = checks.par_iter().map(Check::execute).collect();
    records.sort_by(|a, b| a.name.cmp(&b.name));
    records
}

/// Loads fixtures, runs every check of `suite` and assembles the report.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Report, FixtureError> {
    let list = checks(suite, cfg)?;
    Ok(Report {
        suite: suite.name().to_string(),
        n: cfg.n,
        seed: cfg.seed,
        checks: run_checks(&list),
    })
}

pub(crate) fn root(n: u32) -> Result<std::sync::Arc<qfrob_core::scalars::RootData>, FixtureError> {
    qfrob_core::scalars::RootData::new(n).map_err(|e| FixtureError::Invalid {
        path: "--n".into(),
        reason: e.to_string(),
    })
}
