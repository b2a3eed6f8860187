//! Uniform result record shared by every hypothesis test in the crate.

use crate::dist::{chi2_sf, f_sf, normal_cdf, normal_sf};
use crate::error::Result;
use serde::{Deserialize, Serialize};

/// Nominal size used for the reject/fail-to-reject decision.
pub const SIGNIFICANCE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tail {
    Left,
    Right,
    Both,
}

/// Reference distribution of a test statistic under its null.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Distribution {
    ChiSquare { df: f64 },
    F { df1: f64, df2: f64 },
    Normal { tail: Tail },
}

impl Distribution {
    pub fn p_value(&self, statistic: f64) -> Result<f64> {
        match *self {
            Distribution::ChiSquare { df } => chi2_sf(statistic, df),
            Distribution::F { df1, df2 } => f_sf(statistic, df1, df2),
            Distribution::Normal { tail } => Ok(match tail {
                Tail::Left => normal_cdf(statistic),
                Tail::Right => normal_sf(statistic),
                Tail::Both => (2.0 * normal_sf(statistic.abs())).min(1.0),
            }),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Distribution::ChiSquare { df } => format!("chi2({})", fmt_df(df)),
            Distribution::F { df1, df2 } => format!("F({}, {})", fmt_df(df1), fmt_df(df2)),
            Distribution::Normal { tail } => format!("N(0,1) {tail:?}").to_lowercase(),
        }
    }
}

/// Whole degrees of freedom print as integers, fractional ones to one decimal.
pub fn fmt_df(df: f64) -> String {
    if (df - df.round()).abs() < 1e-9 {
        format!("{}", df.round() as i64)
    } else {
        format!("{df:.1}")
    }
}

/// One labelled row of a test's sub-table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentRow {
    pub label: String,
    pub values: Vec<(String, f64)>,
}

impl ComponentRow {
    pub fn value(&self, key: &str) -> Option<f64> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub name: String,
    pub statistic: f64,
    pub distribution: Distribution,
    pub p_value: f64,
    pub reject: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentRow>,
}

impl TestReport {
    pub fn new(name: impl Into<String>, statistic: f64, distribution: Distribution) -> Result<Self> {
        let p_value = distribution.p_value(statistic)?;
        Ok(Self {
            name: name.into(),
            statistic,
            distribution,
            p_value,
            reject: p_value < SIGNIFICANCE,
            components: Vec::new(),
        })
    }

    pub fn chi_square(name: impl Into<String>, statistic: f64, df: f64) -> Result<Self> {
        Self::new(name, statistic, Distribution::ChiSquare { df })
    }

    pub fn with_components(mut self, components: Vec<ComponentRow>) -> Self {
        self.components = components;
        self
    }

    pub fn component(&self, label: &str) -> Option<&ComponentRow> {
        self.components.iter().find(|c| c.label == label)
    }
}
