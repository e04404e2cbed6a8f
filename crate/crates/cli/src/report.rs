//! Verdicts, witnesses and certificates, rendered for people or for machines.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use hopfkit_core::linalg::LinearMap;
use hopfkit_core::ScalarField;
use serde::Serialize;
use serde_json::Value;

use crate::format::{to_pretty, Block};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Found,
    NotFound,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Found => "found",
            Verdict::NotFound => "not-found",
        }
    }

    pub fn succeeded(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::Found)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub verdict: Verdict,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub budget_exhausted: bool,
    pub witnesses: BTreeMap<String, Value>,
    pub certificates: BTreeMap<String, Block>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certification: Option<BTreeMap<String, bool>>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
    #[serde(skip)]
    field: Option<ScalarField>,
}

impl Report {
    pub fn new(command: &str, input: &str, verdict: Verdict, summary: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            input: input.into(),
            verdict,
            summary: summary.into(),
            error: None,
            budget_exhausted: false,
            witnesses: BTreeMap::new(),
            certificates: BTreeMap::new(),
            certification: None,
            elapsed: None,
            field: None,
        }
    }

    pub fn witness(mut self, key: &str, value: impl Serialize) -> Self {
        self.witnesses
            .insert(key.into(), serde_json::to_value(value).expect("serializable witness"));
        self
    }

    pub fn error(mut self, name: &str) -> Self {
        self.error = Some(name.into());
        self
    }

    pub fn exhausted(mut self, flag: bool) -> Self {
        self.budget_exhausted = flag;
        self
    }

    pub fn certificate(mut self, key: &str, map: &LinearMap) -> Self {
        self.field = Some(map.field());
        self.certificates.insert(key.into(), Block::from_map(map));
        self
    }

    /// The certificate as it was emitted, read back from its serialized block.
    pub fn read_certificate(&self, key: &str) -> Option<LinearMap> {
        let block = self.certificates.get(key)?;
        block.to_map(key, self.field?, block.rows, block.cols).ok()
    }

    /// Runs `verify` against the emitted certificates and records each named check.
    pub fn certify(&mut self, verify: impl FnOnce(&Report) -> Vec<(String, bool)>) {
        let mut checks: BTreeMap<String, bool> = verify(self).into_iter().collect();
        for key in self.certificates.keys() {
            checks
                .entry(format!("{key} round-trips"))
                .or_insert_with(|| self.read_certificate(key).is_some());
        }
        self.certification = Some(checks);
    }

    pub fn certified(&self) -> Option<bool> {
        self.certification.as_ref().map(|c| c.values().all(|&ok| ok))
    }

    /// 0 for pass/found, 1 for fail/not-found or a failed certification.
    pub fn exit_code(&self) -> i32 {
        if self.verdict.succeeded() && self.certified() != Some(false) {
            0
        } else {
            1
        }
    }

    /// Deterministic: no timing, sorted keys.
    pub fn to_json(&self) -> String {
        to_pretty(&serde_json::to_value(self).expect("serializable report"))
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}: {}", self.command, self.input, self.verdict.name().to_uppercase());
        let _ = writeln!(out, "  {}", self.summary);
        if let Some(e) = &self.error {
            let _ = writeln!(out, "  error: {e}");
        }
        if self.budget_exhausted {
            let _ = writeln!(out, "  search budget exhausted");
        }
        for (k, v) in &self.witnesses {
            let _ = writeln!(out, "  {k}: {}", serde_json::to_string(v).expect("value"));
        }
        for (k, b) in &self.certificates {
            let _ = writeln!(out, "  certificate {k}: {}x{} matrix, {} nonzero entries", b.rows, b.cols, b.entries.len());
        }
        if let Some(checks) = &self.certification {
            for (k, ok) in checks {
                let _ = writeln!(out, "  certify {k}: {}", if *ok { "ok" } else { "FAILED" });
            }
        }
        if let Some(t) = self.elapsed {
            let _ = writeln!(out, "  time: {:.3} s", t.as_secs_f64());
        }
        out
    }
}
