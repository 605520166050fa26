//! Named property suites. Each property is run on `trials` independent random
//! instances for every requested dimension.

mod algebra;
mod bundles;
mod groups;
mod oracle;

use std::time::Instant;

use jetframe::frames::FrameDoc;
use jetframe::groups::Element;
use jetframe::Bilinear;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{Counterexample, PropertyReport, SuiteReport};
use crate::rng;

/// Deliberate faults used to check that a suite can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mutant {
    /// Fiber membership of `π̂²₂` ignores the skewness of the difference.
    SkewCheckOff,
}

impl Mutant {
    pub fn name(self) -> &'static str {
        match self {
            Mutant::SkewCheckOff => "skew-check-off",
        }
    }
}

pub struct Ctx {
    pub n: usize,
    pub mutant: Option<Mutant>,
}

pub type Outcome = Result<(), Value>;

pub struct Property {
    pub name: &'static str,
    pub check: fn(&Ctx, &mut ChaCha8Rng) -> Outcome,
}

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub properties: &'static [Property],
}

pub const SUITES: &[Suite] = &[
    groups::AXIOMS,
    algebra::PREL1,
    groups::GROL1,
    groups::GROL3,
    groups::GROP1,
    groups::GROL4,
    bundles::RBSP1,
    bundles::RBSL1,
    bundles::RBSL2,
    bundles::RBSL3,
    bundles::RBST1,
    bundles::RBST2,
    bundles::DIAGRAM,
    oracle::ORACLE,
    groups::DELEON,
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ns: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    pub mutant: Option<Mutant>,
}

impl RunConfig {
    /// Sorted, deduplicated dimensions; `n = 1` is always included.
    pub fn dimensions(&self) -> Vec<usize> {
        let mut ns = self.ns.clone();
        ns.push(1);
        ns.sort_unstable();
        ns.dedup();
        ns
    }
}

pub fn run(suite: &Suite, cfg: &RunConfig) -> SuiteReport {
    let start = Instant::now();
    let ns = cfg.dimensions();
    let properties: Vec<PropertyReport> = suite
        .properties
        .par_iter()
        .enumerate()
        .map(|(index, prop)| run_property(index, prop, &ns, cfg))
        .collect();
    SuiteReport {
        suite: suite.name.to_string(),
        n: ns,
        trials: cfg.trials,
        seed: cfg.seed,
        mutant: cfg.mutant.map(|m| m.name().to_string()),
        passed: properties.iter().all(|p| p.passed),
        properties,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

fn run_property(index: usize, prop: &Property, ns: &[usize], cfg: &RunConfig) -> PropertyReport {
    let jobs: Vec<(usize, u64)> = ns
        .iter()
        .flat_map(|&n| (0..cfg.trials).map(move |t| (n, t)))
        .collect();
    let failures: Vec<(usize, u64, Value)> = jobs
        .par_iter()
        .filter_map(|&(n, t)| {
            let ctx = Ctx { n, mutant: cfg.mutant };
            let mut r = rng::trial(cfg.seed, index, n, t);
            (prop.check)(&ctx, &mut r).err().map(|data| (n, t, data))
        })
        .collect();
    let counterexample = failures
        .iter()
        .min_by_key(|(n, t, _)| (*n, *t))
        .map(|(n, t, data)| Counterexample { seed: cfg.seed, n: *n, trial: *t, data: data.clone() });
    PropertyReport {
        name: prop.name.to_string(),
        passed: failures.is_empty(),
        checked: jobs.len() as u64,
        failures: failures.len() as u64,
        counterexample,
    }
}

pub(crate) fn ensure(ok: bool, data: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(data())
    }
}

pub(crate) fn el<T: Clone + Into<Element>>(x: &T) -> Value {
    to_value(&x.clone().into())
}

pub(crate) fn fr<T: Clone + Into<FrameDoc>>(q: &T) -> Value {
    to_value(&q.clone().into())
}

pub(crate) fn bil(f: &Bilinear) -> Value {
    json!(f.to_nested())
}

pub(crate) fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}
