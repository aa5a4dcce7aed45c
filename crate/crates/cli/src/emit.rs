//! Text and JSON renderings of a report.

use std::fmt::Write;

use confalg::report::{Record, Report, Verdict};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A finished run: the header echoed back plus the records.
#[derive(Clone, Debug, Serialize)]
pub struct Output<'a> {
    pub schema: u32,
    pub command: String,
    pub seed: Option<u64>,
    pub records: &'a [Record],
    pub pass: bool,
    /// 0 unless timing was requested, so reports stay byte-identical.
    pub elapsed_ms: u64,
}

impl<'a> Output<'a> {
    pub fn new(command: String, seed: Option<u64>, report: &'a Report, elapsed_ms: u64) -> Output<'a> {
        Output {
            schema: 1,
            command,
            seed,
            records: &report.records,
            pass: report.pass(),
            elapsed_ms,
        }
    }
}

pub fn emit(out: &Output, format: Format, timing: bool) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(out).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text(out, timing),
    }
}

fn text(out: &Output, timing: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command: {}", out.command);
    match out.seed {
        Some(seed) => {
            let _ = writeln!(s, "seed: {seed}");
        }
        None => s.push_str("seed: none\n"),
    }
    for r in out.records {
        let tag = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        let _ = write!(s, "{tag} {}", r.id);
        if let Some(d) = r.degree {
            let _ = write!(s, " [degree {d}]");
        }
        let _ = writeln!(s, "\n  lhs: {}\n  rhs: {}", r.lhs, r.rhs);
    }
    let failures = out.records.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let _ = writeln!(s, "records: {}, failures: {failures}", out.records.len());
    if timing {
        let _ = writeln!(s, "elapsed_ms: {}", out.elapsed_ms);
    }
    let _ = writeln!(s, "pass: {}", out.pass);
    s
}
