//! Acceptance run: every criterion over n ∈ {1, 2, 3, 4} with 200 seeded
//! trials per n and exact comparison. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use jetframe_cli::report::SuiteReport;
use jetframe_cli::suites::{self, RunConfig};

const SEED: u64 = 20240611;
const TRIALS: u64 = 200;

/// A criterion selects properties by suite, either all of them or by name.
struct Criterion {
    id: u32,
    title: &'static str,
    parts: &'static [(&'static str, Option<&'static [&'static str]>)],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "group axioms for all laws",
        parts: &[("axioms", None)],
    },
    Criterion {
        id: 2,
        title: "transpose/sym/skew commute with post- and diagonal pre-composition",
        parts: &[("prel1", None)],
    },
    Criterion {
        id: 3,
        title: "conjugates of S2 and A2 translations; unique G2 x A2 decomposition",
        parts: &[("grol1", None)],
    },
    Criterion {
        id: 4,
        title: "normality of {I}xS2, {I}xA2 and f-independence of conjugation",
        parts: &[("grol3", None)],
    },
    Criterion {
        id: 5,
        title: "mu is a bijective homomorphism",
        parts: &[("grop1", None)],
    },
    Criterion {
        id: 6,
        title: "T1nL1n law in both forms and tau isomorphism",
        parts: &[("grol4", None)],
    },
    Criterion {
        id: 7,
        title: "hat22 projection is independent of the factorization",
        parts: &[("rbsp1", Some(&["hat22_well_defined"]))],
    },
    Criterion {
        id: 8,
        title: "base point, linear frame and fiber of hat22; symmetrized products",
        parts: &[
            ("rbsl1", None),
            ("rbsl2", None),
            ("rbsl3", None),
            ("rbsp1", Some(&["group_level", "frame_level", "g2_closed_in_hat2"])),
        ],
    },
    Criterion {
        id: 9,
        title: "hat22 is a principal A2 bundle (free action, Omega, sigma)",
        parts: &[("rbst1", None)],
    },
    Criterion {
        id: 10,
        title: "tilde22 is a principal tilde22-group bundle",
        parts: &[("rbst2", None)],
    },
    Criterion {
        id: 11,
        title: "jet oracle agrees with the G2 law and the diffeomorphism action",
        parts: &[("oracle", None)],
    },
    Criterion {
        id: 12,
        title: "projection diagram commutes",
        parts: &[("diagram", None)],
    },
];

fn main() -> ExitCode {
    let start = Instant::now();
    let cfg = RunConfig { ns: vec![1, 2, 3, 4], trials: TRIALS, seed: SEED, mutant: None };
    let mut reports: BTreeMap<&str, SuiteReport> = BTreeMap::new();
    for c in CRITERIA {
        for (suite, _) in c.parts {
            if !reports.contains_key(suite) {
                let s = suites::find(suite).expect("suite exists");
                reports.insert(suite, suites::run(s, &cfg));
            }
        }
    }

    let mut failed = Vec::new();
    for c in CRITERIA {
        let mut checked = 0;
        let mut failing = Vec::new();
        for (suite, names) in c.parts {
            let report = &reports[suite];
            assert_eq!(report.n, vec![1, 2, 3, 4]);
            let selected: Vec<_> = match names {
                None => report.properties.iter().collect(),
                Some(names) => names
                    .iter()
                    .map(|n| report.property(n).unwrap_or_else(|| panic!("{suite}.{n} exists")))
                    .collect(),
            };
            for p in selected {
                checked += p.checked;
                if !p.passed {
                    let at = p
                        .counterexample
                        .as_ref()
                        .map(|c| format!(" [n={} trial={}]", c.n, c.trial))
                        .unwrap_or_default();
                    failing.push(format!("{suite}.{}{at}", p.name));
                }
            }
        }
        let verdict = if failing.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}: {} ({checked} checks)", c.id, c.title);
        for f in &failing {
            println!("              failing property {f}");
        }
        if !failing.is_empty() {
            failed.push(c.id);
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1} s (seed {SEED}, {TRIALS} trials per n)",
        CRITERIA.len() - failed.len(),
        CRITERIA.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
