//! Flat TOML run configuration.

use crate::error::{CliError, Result};
use panelbreak_core::dist::Deterministic;
use panelbreak_core::report::Tail;
use panelbreak_core::synth::{DgpKind, VARIABLES};
use panelbreak_core::vecm::{Estimator, ModelSpec};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const FORMATS: [&str; 3] = ["csv", "markdown", "json"];

/// How the policy dummy enters the first-stage cointegration regressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PedroniDummy {
    /// Left out of the first stage (default).
    Omit,
    /// Counted as an additional regressor.
    Regressor,
    /// Level shift not counted among the integrated regressors. The
    /// tabulated moments do not allow for a broken intercept, so this
    /// over-rejects badly under the null; kept for comparison only.
    Shift,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Long-format CSV (`entity,year,variable,value`). Relative paths are
    /// resolved against the config file's directory.
    pub input: Option<PathBuf>,
    /// Generate the data instead of reading it.
    pub synth_kind: Option<String>,
    #[serde(default = "default_entities")]
    pub synth_entities: usize,
    #[serde(default = "default_years")]
    pub synth_years: usize,
    #[serde(default)]
    pub seed: u64,

    #[serde(default = "default_output")]
    pub output_dir: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<String>,

    #[serde(default = "default_start")]
    pub start_year: i32,
    #[serde(default = "default_end")]
    pub end_year: i32,
    #[serde(default = "default_min_obs")]
    pub min_obs: usize,
    #[serde(default)]
    pub interpolate: bool,

    /// Names of the model variables in the input's `variable` column.
    #[serde(default = "default_map_co2")]
    pub map_co2: String,
    #[serde(default = "default_map_energy")]
    pub map_energy_use: String,
    #[serde(default = "default_map_gdp")]
    pub map_gdp: String,
    #[serde(default = "default_map_population")]
    pub map_population: String,

    #[serde(default)]
    pub log_co2: bool,
    #[serde(default)]
    pub log_energy_use: bool,
    #[serde(default)]
    pub log_gdp: bool,
    #[serde(default)]
    pub log_population: bool,

    #[serde(default = "default_dummy_name")]
    pub dummy_name: String,
    #[serde(default = "default_threshold")]
    pub dummy_threshold: i32,

    #[serde(default = "default_lag_order")]
    pub lag_order: usize,
    #[serde(default = "default_rank")]
    pub rank: usize,
    #[serde(default = "default_estimator")]
    pub estimator: Estimator,
    #[serde(default = "default_ordering")]
    pub ordering: Vec<String>,

    #[serde(default = "default_deterministic")]
    pub unit_root_deterministic: Deterministic,
    #[serde(default = "default_pedroni_dummy")]
    pub pedroni_dummy: PedroniDummy,
    #[serde(default = "default_horizon")]
    pub horizon: usize,
    #[serde(default = "default_scales")]
    pub shock_scales: Vec<f64>,
    #[serde(default = "default_lm_lags")]
    pub lm_max_lag: usize,
    #[serde(default = "default_true")]
    pub white_cross_terms: bool,
    #[serde(default = "default_tail")]
    pub slope_tail: Tail,
}

fn default_entities() -> usize {
    106
}
fn default_years() -> usize {
    43
}
fn default_output() -> PathBuf {
    PathBuf::from("panelbreak-out")
}
fn default_formats() -> Vec<String> {
    FORMATS.iter().map(|s| s.to_string()).collect()
}
fn default_start() -> i32 {
    1980
}
fn default_end() -> i32 {
    2022
}
fn default_min_obs() -> usize {
    10
}
fn default_map_co2() -> String {
    VARIABLES[0].into()
}
fn default_map_energy() -> String {
    VARIABLES[1].into()
}
fn default_map_gdp() -> String {
    VARIABLES[2].into()
}
fn default_map_population() -> String {
    VARIABLES[3].into()
}
fn default_dummy_name() -> String {
    panelbreak_core::synth::DUMMY.into()
}
fn default_threshold() -> i32 {
    2015
}
fn default_lag_order() -> usize {
    2
}
fn default_rank() -> usize {
    1
}
fn default_estimator() -> Estimator {
    Estimator::TwoStep
}
fn default_ordering() -> Vec<String> {
    VARIABLES.iter().map(|s| s.to_string()).collect()
}
fn default_deterministic() -> Deterministic {
    Deterministic::Constant
}
fn default_pedroni_dummy() -> PedroniDummy {
    PedroniDummy::Omit
}
fn default_horizon() -> usize {
    24
}
fn default_scales() -> Vec<f64> {
    panelbreak_core::dynamics::DEFAULT_SHOCK_SCALES.to_vec()
}
fn default_lm_lags() -> usize {
    3
}
fn default_true() -> bool {
    true
}
fn default_tail() -> Tail {
    Tail::Right
}

impl Default for RunConfig {
    fn default() -> Self {
        toml::from_str("").expect("all fields have defaults")
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::Config(e.message().to_string()))
    }

    /// Reads and validates a config file; a relative `input` is resolved
    /// against the file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut cfg = Self::from_toml(&text)?;
        if let (Some(input), Some(dir)) = (&cfg.input, path.parent()) {
            if input.is_relative() {
                cfg.input = Some(dir.join(input));
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Input-column name to model-variable name.
    pub fn mapping(&self) -> BTreeMap<String, String> {
        [
            (&self.map_co2, VARIABLES[0]),
            (&self.map_energy_use, VARIABLES[1]),
            (&self.map_gdp, VARIABLES[2]),
            (&self.map_population, VARIABLES[3]),
        ]
        .into_iter()
        .map(|(from, to)| (from.clone(), to.to_string()))
        .collect()
    }

    pub fn logged(&self) -> Vec<&'static str> {
        [self.log_co2, self.log_energy_use, self.log_gdp, self.log_population]
            .iter()
            .zip(VARIABLES)
            .filter(|(on, _)| **on)
            .map(|(_, v)| v)
            .collect()
    }

    pub fn model_spec(&self) -> ModelSpec {
        let ordering: Vec<&str> = self.ordering.iter().map(|s| s.as_str()).collect();
        ModelSpec::new(&VARIABLES, &[self.dummy_name.as_str()], self.lag_order)
            .with_rank(self.rank)
            .with_estimator(self.estimator)
            .with_ordering(&ordering)
    }

    pub fn synth_kind(&self) -> Result<Option<DgpKind>> {
        self.synth_kind
            .as_deref()
            .map(|k| DgpKind::parse(k).ok_or_else(|| CliError::Config(format!("unknown synth_kind `{k}`"))))
            .transpose()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(CliError::Config(msg));
        match (&self.input, &self.synth_kind) {
            (None, None) => return bad("set either `input` or `synth_kind`".into()),
            (Some(_), Some(_)) => return bad("`input` and `synth_kind` are mutually exclusive".into()),
            _ => {}
        }
        self.synth_kind()?;
        if self.start_year > self.end_year {
            return bad(format!("start_year {} is after end_year {}", self.start_year, self.end_year));
        }
        if self.dummy_threshold < self.start_year || self.dummy_threshold > self.end_year {
            return bad(format!(
                "dummy_threshold {} must lie inside {}..={}",
                self.dummy_threshold, self.start_year, self.end_year
            ));
        }
        let mut sources: Vec<&String> = vec![&self.map_co2, &self.map_energy_use, &self.map_gdp, &self.map_population];
        if sources.iter().any(|s| s.is_empty()) {
            return bad("every model variable needs a source name".into());
        }
        sources.sort();
        sources.dedup();
        if sources.len() != 4 {
            return bad("two model variables are mapped from the same source name".into());
        }
        if VARIABLES.contains(&self.dummy_name.as_str()) || self.dummy_name.is_empty() {
            return bad(format!("invalid dummy_name `{}`", self.dummy_name));
        }
        for f in &self.formats {
            if !FORMATS.contains(&f.as_str()) {
                return bad(format!("unknown format `{f}` (expected csv, markdown or json)"));
            }
        }
        if self.formats.is_empty() {
            return bad("no output formats selected".into());
        }
        if self.horizon == 0 || self.lm_max_lag == 0 {
            return bad("horizon and lm_max_lag must be at least 1".into());
        }
        if self.shock_scales.iter().any(|s| !s.is_finite()) {
            return bad("shock scales must be finite".into());
        }
        if self.synth_kind.is_some() && (self.synth_entities == 0 || self.synth_years == 0) {
            return bad("synth_entities and synth_years must be positive".into());
        }
        self.model_spec().validate().map_err(|e| CliError::Config(e.to_string()))
    }

    /// SHA-256 of the canonical serialization, with the output directory
    /// left out so that the same run written to two places hashes alike.
    pub fn hash(&self) -> String {
        let mut canon = self.clone();
        canon.output_dir = PathBuf::new();
        let text = toml::to_string(&canon).expect("config serializes");
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}
