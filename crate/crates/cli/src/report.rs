//! `verify-all`: every record, in catalog order, against its expected status.

use std::path::Path;
use std::time::Instant;

use ineqcert::catalog::{Catalog, Expected};
use ineqcert::certify::{verify_inequality, verify_monotone, Certificate, Config, Status};
use rayon::prelude::*;
use serde_json::json;

use crate::commands::{write, CliError};
use crate::exit;

pub const SCHEMA: &str = "ineqcert.report/1";

enum Job<'a> {
    Inequality(&'a ineqcert::catalog::InequalityRecord),
    Monotone(&'a ineqcert::catalog::MonotoneRecord),
}

struct Outcome {
    id: String,
    kind: &'static str,
    expected: &'static str,
    result: Result<(Certificate, bool), String>,
    seconds: f64,
}

fn expected_ok(e: Expected, s: Status) -> bool {
    match e {
        Expected::Provable => s == Status::Proven,
        Expected::ProvableOnTruncation => s == Status::ProvenOnTruncation,
        Expected::SuspectedTypo => s.is_proven(),
        Expected::Refuted => s == Status::Refuted,
    }
}

fn run(job: &Job, cfg: &Config) -> Outcome {
    let t = Instant::now();
    let (id, kind, expected, result) = match job {
        Job::Inequality(r) => {
            let res = verify_inequality(r, cfg).map(|c| {
                let ok = expected_ok(r.expected, c.status);
                (c, ok)
            });
            (r.id.clone(), "inequality", r.expected.as_str(), res.map_err(|e| e.to_string()))
        }
        Job::Monotone(m) => {
            let res = verify_monotone(m, cfg).map(|rep| {
                let ok = rep.passed();
                (rep.certificate, ok)
            });
            (m.id.to_string(), "monotone", "provable", res.map_err(|e| e.to_string()))
        }
    };
    Outcome { id, kind, expected, result, seconds: t.elapsed().as_secs_f64() }
}

pub fn verify_all(cat: &Catalog, cfg: &Config, jobs: usize, out: Option<&Path>) -> Result<u8, CliError> {
    let work: Vec<Job> = cat
        .inequalities
        .iter()
        .map(Job::Inequality)
        .chain(cat.monotone.iter().map(Job::Monotone))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let outcomes: Vec<Outcome> = pool.install(|| work.par_iter().map(|j| run(j, cfg)).collect());

    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    let mut records = Vec::new();
    let mut matched = 0;
    for o in &outcomes {
        let (status, ok, cert_file) = match &o.result {
            Ok((c, ok)) => {
                let file = format!("{}.json", o.id);
                if let Some(dir) = out {
                    write(&dir.join(&file), &(c.to_json() + "\n"))?;
                }
                (c.status.as_str().to_string(), *ok, Some(file))
            }
            Err(e) => (format!("error: {e}"), false, None),
        };
        matched += ok as usize;
        println!("{:<28} {:<11} {:<22} {:<22} {}", o.id, o.kind, o.expected, status, if ok { "ok" } else { "MISMATCH" });
        eprintln!("{:<28} {:.3}s", o.id, o.seconds);
        let summary = o.result.as_ref().ok().map(|(c, _)| {
            json!({"cells": c.cells.len(), "zones": c.exclusions.len(), "depth": c.depth})
        });
        records.push(json!({
            "id": o.id,
            "kind": o.kind,
            "expected": o.expected,
            "status": status,
            "matches_expected": ok,
            "certificate": cert_file,
            "summary": summary,
        }));
    }
    let total = outcomes.len();
    println!("{matched}/{total} records as expected");
    eprintln!("total {:.2}s with {jobs} job{}", start.elapsed().as_secs_f64(), if jobs == 1 { "" } else { "s" });
    if let Some(dir) = out {
        let report = json!({
            "schema": SCHEMA,
            "tool": {"name": "ineqcert", "version": env!("CARGO_PKG_VERSION")},
            "config": cfg,
            "records": records,
            "matched": matched,
            "total": total,
        });
        let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        write(&dir.join("report.json"), &text)?;
    }
    Ok(if matched == total { exit::OK } else { exit::MISMATCH })
}
