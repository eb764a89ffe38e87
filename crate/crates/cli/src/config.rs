use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;

/// A parameter given either as a number or as `formal`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ParamArg {
    Formal,
    Value(f64),
}

impl ParamArg {
    pub fn value(self) -> Option<f64> {
        match self {
            ParamArg::Formal => None,
            ParamArg::Value(v) => Some(v),
        }
    }

    pub fn or(self, fallback: f64) -> f64 {
        self.value().unwrap_or(fallback)
    }
}

impl FromStr for ParamArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("formal") {
            return Ok(ParamArg::Formal);
        }
        let v: f64 = s.parse().map_err(|_| format!("expected a number or `formal`, got `{s}`"))?;
        if !v.is_finite() {
            return Err(format!("`{s}` is not finite"));
        }
        Ok(ParamArg::Value(v))
    }
}

impl fmt::Display for ParamArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamArg::Formal => f.write_str("formal"),
            ParamArg::Value(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ParamArg {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamArg::Formal => s.serialize_str("formal"),
            ParamArg::Value(v) => s.serialize_f64(*v),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Values used where a numeric suite meets a formal parameter.
pub const FALLBACK_KAPPA_INV: f64 = 0.7;
pub const FALLBACK_TWIST: f64 = 0.4;
/// Cosmological constants swept when `--lambda formal` reaches a numeric suite.
pub const FALLBACK_LAMBDAS: [f64; 2] = [-1.0, 1.0];

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub lambda: ParamArg,
    pub kappa_inv: ParamArg,
    pub twist: ParamArg,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub format: Format,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub inject_fault: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.samples == 0 {
            return Err("--samples must be at least 1".into());
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(format!("--tol must be positive and finite, got {}", self.tolerance));
        }
        if let ParamArg::Value(k) = self.kappa_inv {
            if k < 0.0 {
                return Err(format!("--kappa-inv must be non-negative, got {k}"));
            }
        }
        Ok(())
    }

    pub fn kinv(&self) -> f64 {
        self.kappa_inv.or(FALLBACK_KAPPA_INV)
    }

    pub fn twist_value(&self) -> f64 {
        self.twist.or(FALLBACK_TWIST)
    }

    pub fn lambdas(&self) -> Vec<f64> {
        match self.lambda {
            ParamArg::Formal => FALLBACK_LAMBDAS.to_vec(),
            ParamArg::Value(v) => vec![v],
        }
    }
}
