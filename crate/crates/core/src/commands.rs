//! Subcommand bodies for the `albert` binary.
//!
//! Each command takes its input text and returns the JSON to print plus a
//! process exit code:
//!
//! | code | meaning                                              |
//! |------|------------------------------------------------------|
//! | 0    | success                                              |
//! | 1    | malformed input                                      |
//! | 2    | pipeline failure, replay mismatch or failed selftest |
//! | 3    | input lives in the wrong algebra for the command     |
//!
//! JSON objects are emitted with sorted keys.

use serde::Serialize;

use crate::diagonalize::{diagonalize, verify_transcript, Tolerances, TranscriptRecord};
use crate::error::Error;
use crate::jordan::{Invariants, JordanElement};
use crate::octonion::Algebra;
use crate::random::Sampler;
use crate::split::diagonalizability_obstruction;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_WRONG_ALGEBRA: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    /// JSON document for stdout; empty when the command failed before producing one.
    pub json: String,
    pub code: i32,
    /// Human-readable message for stderr.
    pub diagnostic: Option<String>,
}

impl CommandOutput {
    fn ok(json: String) -> Self {
        Self {
            json,
            code: EXIT_OK,
            diagnostic: None,
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Self {
            json: String::new(),
            code,
            diagnostic: Some(msg.into()),
        }
    }
}

/// Serialize through `serde_json::Value` so object keys come out sorted.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn parse_element(input: &str) -> Result<JordanElement, CommandOutput> {
    serde_json::from_str(input)
        .map_err(|e| CommandOutput::fail(EXIT_MALFORMED, format!("malformed Jordan element: {e}")))
}

pub fn diagonalize_cmd(input: &str, tol: &Tolerances) -> CommandOutput {
    let x = match parse_element(input) {
        Ok(x) => x,
        Err(out) => return out,
    };
    if x.algebra() == Algebra::Split {
        return CommandOutput::fail(
            EXIT_WRONG_ALGEBRA,
            "split elements cannot be diagonalized in general; run `albert split-check` instead",
        );
    }
    if let Err(e) = tol.validate() {
        return CommandOutput::fail(EXIT_MALFORMED, e.to_string());
    }
    match diagonalize(&x, tol) {
        Ok(t) => CommandOutput::ok(to_sorted_json(&t)),
        Err(e) => CommandOutput::fail(EXIT_FAILURE, format!("diagonalization failed: {e}")),
    }
}

pub fn verify_cmd(input: &str) -> CommandOutput {
    let record: TranscriptRecord = match serde_json::from_str(input) {
        Ok(r) => r,
        Err(e) => return CommandOutput::fail(EXIT_MALFORMED, format!("malformed transcript: {e}")),
    };
    let report = verify_transcript(&record);
    let json = to_sorted_json(&report);
    if report.ok {
        CommandOutput::ok(json)
    } else {
        CommandOutput {
            json,
            code: EXIT_FAILURE,
            diagnostic: Some("transcript failed verification".into()),
        }
    }
}

pub fn invariants_cmd(input: &str) -> CommandOutput {
    match parse_element(input) {
        Ok(x) => CommandOutput::ok(to_sorted_json(&Invariants::of(&x))),
        Err(out) => out,
    }
}

pub fn random_cmd(seed: u64, algebra: Algebra) -> CommandOutput {
    CommandOutput::ok(to_sorted_json(&Sampler::new(seed).jordan(algebra)))
}

pub fn split_check_cmd(input: &str) -> CommandOutput {
    let x = match parse_element(input) {
        Ok(x) => x,
        Err(out) => return out,
    };
    match diagonalizability_obstruction(&x) {
        Ok(v) => CommandOutput::ok(to_sorted_json(&v)),
        Err(Error::CompactUnsupported) => CommandOutput::fail(
            EXIT_WRONG_ALGEBRA,
            "compact elements are always diagonalizable; run `albert diagonalize` instead",
        ),
        Err(e) => CommandOutput::fail(EXIT_FAILURE, e.to_string()),
    }
}

pub fn selftest_cmd(seed: u64) -> CommandOutput {
    let report = crate::selftest::run(seed);
    let json = to_sorted_json(&report);
    if report.passed {
        CommandOutput::ok(json)
    } else {
        CommandOutput {
            json,
            code: EXIT_FAILURE,
            diagnostic: Some("selftest failed".into()),
        }
    }
}
