use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

pub const SCHEMA: &str = "report_v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exact symbolic identity; the residual counts surviving terms.
    Exact,
    /// Floating-point comparison against `threshold`.
    Numeric,
}

#[derive(Clone, Debug, Serialize)]
pub struct Suite {
    pub name: String,
    pub tag: String,
    pub mode: Mode,
    pub passed: bool,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Suite {
    pub fn exact(name: impl Into<String>, tag: &str, residual: usize, detail: Value) -> Suite {
        Suite {
            name: name.into(),
            tag: tag.into(),
            mode: Mode::Exact,
            passed: residual == 0,
            residual: residual as f64,
            threshold: None,
            detail,
        }
    }

    /// Passes when `residual <= threshold`; NaN fails.
    pub fn numeric(name: impl Into<String>, tag: &str, residual: f64, threshold: f64, detail: Value) -> Suite {
        Suite {
            name: name.into(),
            tag: tag.into(),
            mode: Mode::Numeric,
            passed: residual <= threshold,
            residual,
            threshold: Some(threshold),
            detail,
        }
    }

    /// A yes/no structural check.
    pub fn check(name: impl Into<String>, tag: &str, ok: bool, detail: Value) -> Suite {
        Suite::exact(name, tag, usize::from(!ok), detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub config: RunConfig,
    pub passed: bool,
    pub suites: Vec<Suite>,
}

impl Report {
    pub fn new(command: &str, config: &RunConfig, suites: Vec<Suite>) -> Report {
        Report {
            schema: SCHEMA,
            command: command.into(),
            config: config.clone(),
            passed: suites.iter().all(|s| s.passed),
            suites,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per suite; details are left to the JSON form.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["schema", "command", "suite", "tag", "mode", "passed", "residual", "threshold"])?;
        for s in &self.suites {
            let mode = match s.mode {
                Mode::Exact => "exact",
                Mode::Numeric => "numeric",
            };
            w.write_record([
                SCHEMA,
                &self.command,
                &s.name,
                &s.tag,
                mode,
                if s.passed { "true" } else { "false" },
                &format!("{:e}", s.residual),
                &s.threshold.map(|t| format!("{t:e}")).unwrap_or_default(),
            ])?;
        }
        Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 fields"))
    }
}
