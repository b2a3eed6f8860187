//! Embedded reference constants for the panel tests.
//!
//! The LLC mean/standard-deviation adjustments are the published
//! Levin-Lin-Chu values. The IPS t-bar moments and the
//! Pedroni standardization constants are Monte Carlo estimates produced by
//! `cargo run --release --example gen_tables`, which runs the crate's own
//! estimators on simulated null data and rewrites `ips.rs` and `pedroni.rs`.

use crate::dist::Deterministic;

mod ips;
mod pedroni;

pub use ips::{IPS_LAGS, IPS_T};
pub use pedroni::{PEDRONI_MAX_REGRESSORS, PEDRONI_T};

/// Linear interpolation of `ys` over the increasing grid `xs`, clamped at the ends.
pub(crate) fn interpolate(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    if x <= xs[0] {
        return ys[0];
    }
    let last = xs.len() - 1;
    if x >= xs[last] {
        return ys[last];
    }
    let i = xs.partition_point(|&g| g <= x) - 1;
    let w = (x - xs[i]) / (xs[i + 1] - xs[i]);
    ys[i] + w * (ys[i + 1] - ys[i])
}

const LLC_T: [f64; 13] = [
    25.0, 30.0, 35.0, 40.0, 45.0, 50.0, 60.0, 70.0, 80.0, 90.0, 100.0, 250.0, 500.0,
];
const LLC_MEAN: [[f64; 13]; 3] = [
    [0.004, 0.003, 0.002, 0.002, 0.001, 0.001, 0.001, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [
        -0.554, -0.546, -0.541, -0.537, -0.533, -0.531, -0.527, -0.524, -0.521, -0.520, -0.518,
        -0.509, -0.500,
    ],
    [
        -0.703, -0.674, -0.653, -0.637, -0.624, -0.614, -0.598, -0.587, -0.578, -0.571, -0.566,
        -0.533, -0.500,
    ],
];
const LLC_SD: [[f64; 13]; 3] = [
    [
        1.049, 1.035, 1.027, 1.021, 1.017, 1.014, 1.011, 1.008, 1.007, 1.006, 1.005, 1.001, 1.000,
    ],
    [
        0.919, 0.889, 0.867, 0.850, 0.837, 0.826, 0.810, 0.798, 0.789, 0.782, 0.776, 0.742, 0.707,
    ],
    [
        1.003, 0.949, 0.906, 0.871, 0.842, 0.818, 0.780, 0.751, 0.728, 0.710, 0.695, 0.603, 0.500,
    ],
];

fn det_row(det: Deterministic) -> usize {
    match det {
        Deterministic::None => 0,
        Deterministic::Constant => 1,
        Deterministic::ConstantTrend => 2,
    }
}

/// LLC adjustment `(mu*, sigma*)` at average effective sample size `t_tilde`.
pub fn llc_adjustment(det: Deterministic, t_tilde: f64) -> (f64, f64) {
    let r = det_row(det);
    (
        interpolate(&LLC_T, &LLC_MEAN[r], t_tilde),
        interpolate(&LLC_T, &LLC_SD[r], t_tilde),
    )
}

/// Null mean and variance of an ADF t statistic for a series of `len`
/// observations regressed with `lags` augmentation lags.
///
/// Interpolates linearly in `len`; rows where the regression would be
/// infeasible are skipped in favour of the nearest feasible one.
pub fn ips_moments(det: Deterministic, len: usize, lags: usize) -> Option<(f64, f64)> {
    let r = det_row(det);
    let p = lags.min(IPS_LAGS - 1);
    let xs: Vec<f64> = IPS_T.iter().map(|&t| t as f64).collect();
    let mut grid = Vec::new();
    let mut mean = Vec::new();
    let mut var = Vec::new();
    for (i, &x) in xs.iter().enumerate() {
        let m = ips::IPS_MEAN[r][i][p];
        let v = ips::IPS_VAR[r][i][p];
        if m.is_finite() && v.is_finite() {
            grid.push(x);
            mean.push(m);
            var.push(v);
        }
    }
    if grid.is_empty() {
        return None;
    }
    let x = len as f64;
    Some((interpolate(&grid, &mean, x), interpolate(&grid, &var, x)))
}

/// Pedroni standardization `(mu, nu)` for statistic `stat` (index into
/// the seven statistics in canonical order), `m` integrated regressors and
/// residual series length `len`.
pub fn pedroni_moments(stat: usize, m: usize, det: Deterministic, len: usize) -> Option<(f64, f64)> {
    if m == 0 || m > PEDRONI_MAX_REGRESSORS || stat >= 7 {
        return None;
    }
    let d = match det {
        Deterministic::Constant => 0,
        Deterministic::ConstantTrend => 1,
        Deterministic::None => return None,
    };
    let xs: Vec<f64> = PEDRONI_T.iter().map(|&t| t as f64).collect();
    let mu: Vec<f64> = (0..xs.len()).map(|i| pedroni::PEDRONI_MU[d][m - 1][i][stat]).collect();
    let nu: Vec<f64> = (0..xs.len()).map(|i| pedroni::PEDRONI_NU[d][m - 1][i][stat]).collect();
    if mu.iter().chain(&nu).any(|v| !v.is_finite()) {
        return None;
    }
    let x = len as f64;
    Some((interpolate(&xs, &mu, x), interpolate(&xs, &nu, x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_clamps_and_hits_nodes() {
        let xs = [1.0, 2.0, 4.0];
        let ys = [10.0, 20.0, 0.0];
        assert_eq!(interpolate(&xs, &ys, 0.0), 10.0);
        assert_eq!(interpolate(&xs, &ys, 2.0), 20.0);
        assert_eq!(interpolate(&xs, &ys, 3.0), 10.0);
        assert_eq!(interpolate(&xs, &ys, 9.0), 0.0);
    }

    #[test]
    fn llc_asymptotic_row() {
        let (m, s) = llc_adjustment(Deterministic::Constant, 1000.0);
        assert_eq!((m, s), (-0.5, 0.707));
        let (m, _) = llc_adjustment(Deterministic::ConstantTrend, 27.5);
        assert!((m + 0.6885).abs() < 1e-12);
    }
}
