use std::io::Write;
use std::process::ExitCode;

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};
use touchard_core::counting::{IdentityKind, IdentityReport};
use touchard_core::verify::{
    census, check_decompositions, check_round_trips, Canonical, CensusReport, Construction, Fault,
    Faulty, RoundTripReport,
};
use touchard_core::{Natural, NaturalTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Ndjson,
}

impl Format {
    pub fn report(self, r: &IdentityReport<Natural>) -> String {
        match self {
            Format::Text => r.to_string(),
            Format::Ndjson => identity_json(r).to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InjectedFault {
    SwapColors,
    LastRedZero,
}

impl From<InjectedFault> for Fault {
    fn from(f: InjectedFault) -> Fault {
        match f {
            InjectedFault::SwapColors => Fault::SwapColors,
            InjectedFault::LastRedZero => Fault::LastGroundRedZero,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_identity_n: usize,
    pub max_census_n: usize,
    pub max_roundtrip_len: usize,
    pub output_format: Format,
    pub fault: Option<InjectedFault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_identity_n: 200,
            max_census_n: 9,
            max_roundtrip_len: 10,
            output_format: Format::Text,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Check {
    Identity(IdentityKind, usize),
    RoundTrip(usize),
    Decompositions(usize),
    Census(IdentityKind, usize),
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn identity_json(r: &IdentityReport<Natural>) -> Value {
    json!({
        "check": r.kind.name(),
        "n": r.n,
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "holds": r.holds,
        "terms": r.per_k_terms.iter().map(Natural::to_string).collect::<Vec<_>>(),
    })
}

fn round_trip_json(check: &str, r: &RoundTripReport) -> Value {
    json!({
        "check": check,
        "n": r.n,
        "dyck": r.dyck_words,
        "restricted": r.restricted_words,
        "g": r.g_words,
        "failures": r.failure_count,
        "ok": r.ok(),
        "messages": r.failures,
    })
}

fn census_json(r: &CensusReport) -> Value {
    json!({
        "check": "census",
        "kind": r.kind.name(),
        "n": r.n,
        "counts": r.counts,
        "expected": r.expected.iter().map(Natural::to_string).collect::<Vec<_>>(),
        "ok": r.ok(),
    })
}

impl Check {
    fn run(self, table: &NaturalTable, construction: &dyn Construction) -> Outcome {
        match self {
            Check::Identity(kind, n) => {
                let r = table.rhs(kind, n);
                Outcome {
                    text: r.to_string(),
                    json: identity_json(&r),
                    ok: r.holds,
                }
            }
            Check::RoundTrip(n) => {
                let r = check_round_trips(construction, n);
                let mut text = r.to_string();
                for f in &r.failures {
                    text.push_str(&format!("\n#   {f}"));
                }
                Outcome {
                    text,
                    json: round_trip_json("roundtrip", &r),
                    ok: r.ok(),
                }
            }
            Check::Decompositions(n) => {
                let r = check_decompositions(n);
                Outcome {
                    text: format!(
                        "decompositions n={} g={} failures={} ok={}",
                        r.n,
                        r.g_words,
                        r.failure_count,
                        r.ok()
                    ),
                    json: round_trip_json("decompositions", &r),
                    ok: r.ok(),
                }
            }
            Check::Census(kind, n) => {
                let r = census(table, kind, n);
                Outcome {
                    text: r.to_string(),
                    json: census_json(&r),
                    ok: r.ok(),
                }
            }
        }
    }
}

fn plan(cfg: &VerifyConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    for kind in [IdentityKind::Touchard, IdentityKind::Motzkin] {
        checks.extend((0..=cfg.max_identity_n).map(|n| Check::Identity(kind, n)));
    }
    for n in 0..=cfg.max_roundtrip_len {
        checks.push(Check::RoundTrip(n));
        checks.push(Check::Decompositions(n));
    }
    for kind in [IdentityKind::Touchard, IdentityKind::Motzkin] {
        checks.extend((0..=cfg.max_census_n).map(|n| Check::Census(kind, n)));
    }
    checks
}

/// Runs every planned check (in parallel) and prints the results in plan
/// order. Exit status 1 names the first failing check on stderr.
pub fn run(cfg: &VerifyConfig, out: &mut impl Write) -> std::io::Result<ExitCode> {
    let table = NaturalTable::new();
    let faulty = cfg.fault.map(|f| Faulty(f.into()));
    let construction: &dyn Construction = match &faulty {
        Some(f) => f,
        None => &Canonical,
    };
    let outcomes: Vec<Outcome> = plan(cfg)
        .into_par_iter()
        .map(|check| check.run(&table, construction))
        .collect();

    for o in &outcomes {
        match cfg.output_format {
            Format::Text => writeln!(out, "{}", o.text)?,
            Format::Ndjson => writeln!(out, "{}", o.json)?,
        }
    }
    let passed = outcomes.iter().filter(|o| o.ok).count();
    if cfg.output_format == Format::Text {
        writeln!(out, "# {passed}/{} checks passed", outcomes.len())?;
    }
    out.flush()?;
    match outcomes.iter().find(|o| !o.ok) {
        Some(first) => {
            let line = first.text.lines().next().unwrap_or_default();
            eprintln!("verification failed; first failing check: {line}");
            Ok(ExitCode::from(1))
        }
        None => Ok(ExitCode::SUCCESS),
    }
}
