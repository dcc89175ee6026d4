//! The ten acceptance criteria, one test each, run through the same checks
//! as `qfrob verify all`. Every test prints one PASS/FAIL line with its
//! runtime and limit. Tests are serialized so each timing is its own.

use std::io::Write;
use std::sync::Mutex;
use std::time::Duration;

use qfrob::suites::{checks, RunConfig, Suite};
use qfrob::{Status, DEFAULT_SEED};

static SERIAL: Mutex<()> = Mutex::new(());

fn criterion(k: u8, limit_secs: u64) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let cfg = RunConfig::new(DEFAULT_SEED);
    let all = checks(Suite::All, &cfg).expect("bundled fixtures load");
    let mut tagged: Vec<_> = all.iter().filter(|c| c.criterion == Some(k)).collect();
    assert_eq!(tagged.len(), 1, "criterion {k} must map to exactly one check");
    let record = tagged.pop().unwrap().execute();
    let limit = Duration::from_secs(limit_secs);
    let elapsed = Duration::from_millis(record.elapsed_ms);
    let passed = record.status == Status::Pass && elapsed < limit;
    // Written to the process stdout directly so the line survives capture.
    let mut out = std::io::stdout().lock();
    let _ = writeln!(
        out,
        "criterion {k:>2}: {} {} ({} ms, limit {} s)",
        if passed { "PASS" } else { "FAIL" },
        record.name,
        record.elapsed_ms,
        limit_secs
    );
    drop(out);
    assert_eq!(
        record.status,
        Status::Pass,
        "criterion {k} ({}) failed: {}",
        record.name,
        serde_json::to_string_pretty(&record.witness).unwrap()
    );
    assert!(elapsed < limit, "criterion {k} took {elapsed:?}, limit {limit:?}");
}

#[test]
fn criterion_01_chebyshev_trace() {
    criterion(1, 1);
}

#[test]
fn criterion_02_bigon_frobenius_hom() {
    criterion(2, 60);
}

#[test]
fn criterion_03_bigon_trace_over_frobenius() {
    criterion(3, 5);
}

#[test]
fn criterion_04_bigon_trace_over_center() {
    criterion(4, 10);
}

#[test]
fn criterion_05_torus_frobenius_trace_oracle() {
    criterion(5, 60);
}

#[test]
fn criterion_06_surface_subgroup_trace() {
    criterion(6, 60);
}

#[test]
fn criterion_07_specialized_frobenius_algebra() {
    criterion(7, 120);
}

#[test]
fn criterion_08_torus_division() {
    criterion(8, 30);
}

#[test]
fn criterion_09_gram_certificate() {
    criterion(9, 30);
}

#[test]
fn criterion_10_surface_formula_table() {
    criterion(10, 1);
}
