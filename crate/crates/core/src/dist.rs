//! Reference distributions used to turn statistics into p-values.
//!
//! Chi-square, F and normal tail probabilities come from `statrs`. The
//! Dickey-Fuller p-values use the MacKinnon (1994) response-surface
//! approximation, with the coefficients embedded below as published in
//! statsmodels' `adfvalues.py` (rows indexed by the number of integrated
//! variables, 1 = plain unit-root test, >1 = Engle-Granger residual test).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF, FisherSnedecor, Normal};

/// Deterministic terms in a Dickey-Fuller style regression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Deterministic {
    None,
    Constant,
    ConstantTrend,
}

impl Deterministic {
    /// Number of deterministic regressors the term adds to a design.
    pub fn n_terms(self) -> usize {
        match self {
            Deterministic::None => 0,
            Deterministic::Constant => 1,
            Deterministic::ConstantTrend => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Deterministic::None => "none",
            Deterministic::Constant => "constant",
            Deterministic::ConstantTrend => "constant_trend",
        }
    }
}

fn standard_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("standard normal")
}

/// Lower-tail standard normal probability.
pub fn normal_cdf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    standard_normal().cdf(x)
}

/// Upper-tail standard normal probability.
pub fn normal_sf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    standard_normal().sf(x)
}

/// Chi-square survival function `P(X > x)`.
pub fn chi2_sf(x: f64, df: f64) -> Result<f64> {
    let dist = ChiSquared::new(df)
        .map_err(|e| Error::InvalidSpec(format!("chi-square df {df}: {e}")))?;
    if x <= 0.0 {
        return Ok(1.0);
    }
    Ok(dist.sf(x).clamp(0.0, 1.0))
}

/// F survival function `P(X > x)`.
pub fn f_sf(x: f64, df1: f64, df2: f64) -> Result<f64> {
    let dist = FisherSnedecor::new(df1, df2)
        .map_err(|e| Error::InvalidSpec(format!("F df ({df1}, {df2}): {e}")))?;
    if x <= 0.0 {
        return Ok(1.0);
    }
    Ok(dist.sf(x).clamp(0.0, 1.0))
}

const SMALL_SCALE: [f64; 3] = [1.0, 1.0, 1e-2];
const LARGE_SCALE: [f64; 4] = [1.0, 1e-1, 1e-1, 1e-2];

const TAU_MAX_NC: [f64; 1] = [f64::INFINITY];
const TAU_MIN_NC: [f64; 1] = [-19.04];
const TAU_STAR_NC: [f64; 1] = [-1.04];
const TAU_NC_SMALLP: [[f64; 3]; 1] = [[0.6344, 1.2378, 3.2496]];
const TAU_NC_LARGEP: [[f64; 4]; 1] = [[0.4797, 9.3557, -0.6999, 3.3066]];

const TAU_MAX_C: [f64; 6] = [2.74, 0.92, 0.55, 0.61, 0.79, 1.0];
const TAU_MIN_C: [f64; 6] = [-18.83, -18.86, -23.48, -28.07, -25.96, -23.27];
const TAU_STAR_C: [f64; 6] = [-1.61, -2.62, -3.13, -3.47, -3.78, -3.93];
const TAU_C_SMALLP: [[f64; 3]; 6] = [
    [2.1659, 1.4412, 3.8269],
    [2.92, 1.5012, 3.9796],
    [3.4699, 1.4856, 3.164],
    [3.9673, 1.4777, 2.6315],
    [4.5509, 1.5338, 2.9545],
    [5.1399, 1.6036, 3.4445],
];
const TAU_C_LARGEP: [[f64; 4]; 6] = [
    [1.7339, 9.3202, -1.2745, -1.0368],
    [2.1945, 6.4695, -2.9198, -4.2377],
    [2.5893, 4.5168, -3.6529, -5.0074],
    [3.0387, 4.5452, -3.3666, -4.1921],
    [3.5049, 5.2098, -2.9158, -3.3468],
    [3.9489, 5.8933, -2.5359, -2.721],
];

const TAU_MAX_CT: [f64; 1] = [0.7];
const TAU_MIN_CT: [f64; 1] = [-16.18];
const TAU_STAR_CT: [f64; 1] = [-2.89];
const TAU_CT_SMALLP: [[f64; 3]; 1] = [[3.2512, 1.6047, 4.9588]];
const TAU_CT_LARGEP: [[f64; 4]; 1] = [[2.5261, 6.1654, -3.7956, -6.0285]];

fn poly(coefs: &[f64], scale: &[f64], x: f64) -> f64 {
    // ascending powers
    coefs
        .iter()
        .zip(scale)
        .rev()
        .fold(0.0, |acc, (c, s)| acc * x + c * s)
}

/// Approximate p-value of a Dickey-Fuller t statistic.
///
/// `n_vars` is the number of integrated variables in the tested relation:
/// 1 for an ordinary unit-root test, k+1 for Engle-Granger residuals of a
/// regression on k integrated regressors. Only the constant case carries
/// rows for more than one variable.
pub fn mackinnon_p(stat: f64, deterministic: Deterministic, n_vars: usize) -> Result<f64> {
    if stat.is_nan() {
        return Ok(f64::NAN);
    }
    let (max, min, star, small, large): (&[f64], &[f64], &[f64], &[[f64; 3]], &[[f64; 4]]) =
        match deterministic {
            Deterministic::None => (
                &TAU_MAX_NC,
                &TAU_MIN_NC,
                &TAU_STAR_NC,
                &TAU_NC_SMALLP,
                &TAU_NC_LARGEP,
            ),
            Deterministic::Constant => (
                &TAU_MAX_C,
                &TAU_MIN_C,
                &TAU_STAR_C,
                &TAU_C_SMALLP,
                &TAU_C_LARGEP,
            ),
            Deterministic::ConstantTrend => (
                &TAU_MAX_CT,
                &TAU_MIN_CT,
                &TAU_STAR_CT,
                &TAU_CT_SMALLP,
                &TAU_CT_LARGEP,
            ),
        };
    if n_vars == 0 || n_vars > max.len() {
        return Err(Error::InvalidSpec(format!(
            "no Dickey-Fuller response surface for {n_vars} variables with {} deterministic terms",
            deterministic.label()
        )));
    }
    let i = n_vars - 1;
    if stat > max[i] {
        return Ok(1.0);
    }
    if stat < min[i] {
        return Ok(0.0);
    }
    let z = if stat <= star[i] {
        poly(&small[i], &SMALL_SCALE, stat)
    } else {
        poly(&large[i], &LARGE_SCALE, stat)
    };
    Ok(normal_cdf(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mackinnon_reproduces_five_percent_critical_values() {
        // asymptotic 5% critical values: -1.94 (none), -2.86 (constant), -3.41 (trend)
        for (det, cv) in [
            (Deterministic::None, -1.9409),
            (Deterministic::Constant, -2.8621),
            (Deterministic::ConstantTrend, -3.4126),
        ] {
            let p = mackinnon_p(cv, det, 1).unwrap();
            assert!((p - 0.05).abs() < 0.002, "{det:?}: {p}");
        }
        // Engle-Granger with four variables: -4.10
        let p = mackinnon_p(-4.1000, Deterministic::Constant, 4).unwrap();
        assert!((p - 0.05).abs() < 0.003, "{p}");
    }

    #[test]
    fn mackinnon_is_monotone_and_bounded() {
        let mut prev = 0.0;
        let mut t = -25.0;
        while t < 5.0 {
            let p = mackinnon_p(t, Deterministic::Constant, 1).unwrap();
            assert!((0.0..=1.0).contains(&p));
            assert!(p + 1e-9 >= prev, "not monotone at {t}");
            prev = p;
            t += 0.05;
        }
    }

    #[test]
    fn unsupported_rows_are_rejected() {
        assert!(mackinnon_p(-2.0, Deterministic::ConstantTrend, 2).is_err());
        assert!(mackinnon_p(-2.0, Deterministic::Constant, 7).is_err());
    }

    #[test]
    fn chi_square_identities() {
        // df 2: survival is exp(-x/2)
        let p = chi2_sf(2.0, 2.0).unwrap();
        assert!((p - (-1.0f64).exp()).abs() < 1e-14);
        assert_eq!(chi2_sf(0.0, 3.0).unwrap(), 1.0);
    }
}
