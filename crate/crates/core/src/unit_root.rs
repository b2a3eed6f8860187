//! Single-series Dickey-Fuller / Phillips-Perron statistics and the four
//! panel unit-root tests built from them: LLC, IPS, ADF-Fisher and PP-Fisher.

use crate::dist::{chi2_sf, mackinnon_p, normal_cdf, Deterministic};
use crate::error::{Error, Result};
use crate::panel::{first_difference, PanelDataset, SeriesView};
use crate::regress::{bartlett_lrv, ols, Bandwidth, OlsFit};
use crate::report::{Distribution, Tail, TestReport, SIGNIFICANCE};
use crate::scalar::Real;
use crate::tables;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Smallest number of usable rows in a Dickey-Fuller regression.
pub const MIN_ADF_NOBS: usize = 10;

/// Smallest p-value fed into a Fisher combination, so that a test whose
/// response surface underflows still contributes a finite term.
pub const FISHER_P_FLOOR: f64 = 1e-300;

/// Augmentation lag order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LagSpec {
    Fixed(usize),
    /// Schwarz criterion over `0..=floor(12 (T/100)^(1/4))`.
    Schwarz,
}

/// Outcome of one augmented Dickey-Fuller regression.
#[derive(Debug, Clone)]
pub struct AdfOutcome<T: Real> {
    /// t-ratio on the lagged level.
    pub statistic: T,
    pub p_value: f64,
    pub lags: usize,
    pub nobs: usize,
    pub fit: OlsFit<T>,
}

/// Outcome of a Phillips-Perron `Z_t` computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PpOutcome<T: Real> {
    pub statistic: T,
    pub p_value: f64,
    pub bandwidth: usize,
    pub nobs: usize,
}

fn sic_rule(len: usize) -> usize {
    (12.0 * (len as f64 / 100.0).powf(0.25)).floor() as usize
}

fn adf_feasible(len: usize, lags: usize, det: Deterministic) -> bool {
    let nobs = len.saturating_sub(lags + 1);
    let k = 1 + lags + det.n_terms();
    nobs >= MIN_ADF_NOBS && nobs > k + 1
}

/// Largest lag searched by the Schwarz rule, shrunk until the regression
/// on the common sample stays feasible.
pub fn max_sic_lag(len: usize, det: Deterministic) -> usize {
    let mut p = sic_rule(len);
    while p > 0 && !adf_feasible(len, p, det) {
        p -= 1;
    }
    p
}

/// Dickey-Fuller design over rows `s = first..len` of `y`:
/// `dy_s` on `[y_{s-1}, dy_{s-1}..dy_{s-lags}, const, trend]`.
fn adf_design<T: Real>(
    y: &[T],
    lags: usize,
    det: Deterministic,
    first: usize,
) -> (DVector<T>, DMatrix<T>) {
    debug_assert!(first > lags);
    let n = y.len() - first;
    let k = 1 + lags + det.n_terms();
    let dy = |s: usize| y[s] - y[s - 1];
    let target = DVector::from_fn(n, |r, _| dy(first + r));
    let design = DMatrix::from_fn(n, k, |r, c| {
        let s = first + r;
        if c == 0 {
            y[s - 1]
        } else if c <= lags {
            dy(s - c)
        } else if c == lags + 1 {
            T::one()
        } else {
            T::count(s)
        }
    });
    (target, design)
}

fn check_len(len: usize, det: Deterministic) -> Result<()> {
    if adf_feasible(len, 0, det) {
        Ok(())
    } else {
        let needed = (MIN_ADF_NOBS + 1).max(det.n_terms() + 4);
        Err(Error::SeriesTooShort { needed, got: len })
    }
}

/// Lag order chosen by the Schwarz criterion on the common sample that
/// starts after the largest candidate lag.
pub fn select_lag_sic<T: Real>(y: &[T], det: Deterministic) -> Result<usize> {
    check_len(y.len(), det)?;
    let pmax = max_sic_lag(y.len(), det);
    let mut best = (f64::INFINITY, 0);
    for p in 0..=pmax {
        let (dy, x) = adf_design(y, p, det, pmax + 1);
        let fit = match ols(&dy, &x) {
            Ok(f) => f,
            Err(Error::RankDeficient { .. }) => continue,
            Err(e) => return Err(e),
        };
        let n = fit.nobs as f64;
        let ssr = fit.ssr().as_f64().max(f64::MIN_POSITIVE);
        let sic = (ssr / n).ln() + x.ncols() as f64 * n.ln() / n;
        if sic < best.0 {
            best = (sic, p);
        }
    }
    Ok(best.1)
}

fn resolve_lags<T: Real>(y: &[T], det: Deterministic, lags: LagSpec) -> Result<usize> {
    match lags {
        LagSpec::Fixed(p) => {
            if !adf_feasible(y.len(), p, det) {
                return Err(Error::SeriesTooShort {
                    needed: MIN_ADF_NOBS + p + 1,
                    got: y.len(),
                });
            }
            Ok(p)
        }
        LagSpec::Schwarz => select_lag_sic(y, det),
    }
}

fn adf_fit<T: Real>(y: &[T], det: Deterministic, lags: LagSpec) -> Result<AdfOutcome<T>> {
    let p = resolve_lags(y, det, lags)?;
    let (dy, x) = adf_design(y, p, det, p + 1);
    let fit = ols(&dy, &x)?;
    let statistic = fit.t_ratios()[0];
    let p_value = mackinnon_p(statistic.as_f64(), det, 1)?;
    Ok(AdfOutcome {
        statistic,
        p_value,
        lags: p,
        nobs: fit.nobs,
        fit,
    })
}

/// Augmented Dickey-Fuller t statistic with a MacKinnon p-value.
pub fn adf_stat<T: Real>(s: &SeriesView<T>, det: Deterministic, lags: LagSpec) -> Result<AdfOutcome<T>> {
    adf_fit(&s.data, det, lags)
}

/// Phillips-Perron `Z_t`: the zero-lag Dickey-Fuller t-ratio corrected with
/// a Bartlett long-run variance of the regression residuals.
pub fn pp_stat<T: Real>(s: &SeriesView<T>, det: Deterministic, bandwidth: Bandwidth) -> Result<PpOutcome<T>> {
    let y = &s.data;
    check_len(y.len(), det)?;
    let (dy, x) = adf_design(y, 0, det, 1);
    let fit = ols(&dy, &x)?;
    let n = fit.nobs;
    let nt = T::count(n);
    let bw = bandwidth.resolve(n).min(n - 1);
    let u = fit.residuals.as_slice();
    let gamma0 = (fit.ssr() / nt).max(T::variance_floor());
    let lambda2 = bartlett_lrv(u, bw, false)?;
    let lambda = lambda2.sqrt();
    let se = fit.std_errors()[0];
    let t = fit.coefficients[0] / se;
    let s_reg = fit.sigma2.max(T::variance_floor()).sqrt();
    let statistic =
        (gamma0 / lambda2).sqrt() * t - (lambda2 - gamma0) / (T::lit(2.0) * lambda) * nt * se / s_reg;
    let p_value = mackinnon_p(statistic.as_f64(), det, 1)?;
    Ok(PpOutcome {
        statistic,
        p_value,
        bandwidth: bw,
        nobs: n,
    })
}

/// Fisher's combination `-2 sum ln p_i`, referred to chi-square with `2N` df.
pub fn fisher_combine(p_values: &[f64]) -> Result<(f64, f64)> {
    if p_values.is_empty() {
        return Err(Error::InsufficientEntities { needed: 1, got: 0 });
    }
    let mut stat = 0.0;
    for &p in p_values {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::InvalidPValue(p));
        }
        stat -= 2.0 * p.ln();
    }
    let p = chi2_sf(stat, 2.0 * p_values.len() as f64)?;
    Ok((stat, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitRootMethod {
    Llc,
    Ips,
    AdfFisher,
    PpFisher,
}

impl UnitRootMethod {
    pub const ALL: [UnitRootMethod; 4] = [
        UnitRootMethod::Llc,
        UnitRootMethod::Ips,
        UnitRootMethod::AdfFisher,
        UnitRootMethod::PpFisher,
    ];

    pub fn label(self) -> &'static str {
        match self {
            UnitRootMethod::Llc => "LLC (common unit root)",
            UnitRootMethod::Ips => "IPS (individual unit root)",
            UnitRootMethod::AdfFisher => "ADF Fisher chi-square",
            UnitRootMethod::PpFisher => "PP Fisher chi-square",
        }
    }
}

/// Per-entity ingredient of a panel unit-root test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntityStat {
    pub entity: String,
    pub statistic: f64,
    pub p_value: f64,
    pub lags: usize,
    pub nobs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitRootResult {
    pub method: UnitRootMethod,
    pub variable: String,
    pub statistic: f64,
    pub p_value: f64,
    pub per_entity: Option<Vec<EntityStat>>,
    pub differenced: bool,
    pub deterministic: Deterministic,
    /// Augmentation lag (or PP bandwidth) per usable entity.
    pub lags: Vec<usize>,
    /// Entities left out because their series was too short.
    pub dropped: Vec<String>,
}

impl UnitRootResult {
    pub fn reject(&self) -> bool {
        self.p_value < SIGNIFICANCE
    }

    pub fn n_entities(&self) -> usize {
        self.lags.len()
    }

    pub fn report(&self) -> Result<TestReport> {
        let distribution = match self.method {
            UnitRootMethod::Llc | UnitRootMethod::Ips => Distribution::Normal { tail: Tail::Left },
            _ => Distribution::ChiSquare {
                df: 2.0 * self.n_entities() as f64,
            },
        };
        let mut rep = TestReport::new(self.method.label(), self.statistic, distribution)?;
        rep.p_value = self.p_value;
        rep.reject = self.reject();
        Ok(rep)
    }
}

/// Settings shared by the panel unit-root tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRootOptions {
    pub differenced: bool,
    pub deterministic: Deterministic,
    pub lags: LagSpec,
    pub bandwidth: Bandwidth,
}

impl UnitRootOptions {
    /// Constant in levels, no deterministic terms in differences,
    /// Schwarz lags and the automatic Newey-West bandwidth.
    pub fn new(differenced: bool) -> Self {
        Self {
            differenced,
            deterministic: if differenced {
                Deterministic::None
            } else {
                Deterministic::Constant
            },
            lags: LagSpec::Schwarz,
            bandwidth: Bandwidth::Auto,
        }
    }

    pub fn with_deterministic(mut self, det: Deterministic) -> Self {
        self.deterministic = det;
        self
    }

    pub fn with_lags(mut self, lags: LagSpec) -> Self {
        self.lags = lags;
        self
    }
}

/// Per-entity series the panel tests run on: the longest observed run,
/// differenced when requested, and long enough for a zero-lag regression.
fn usable_series<T: Real>(
    p: &PanelDataset<T>,
    variable: &str,
    opts: &UnitRootOptions,
) -> Result<(Vec<SeriesView<T>>, Vec<String>)> {
    let v = p.var_index(variable)?;
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for e in 0..p.n_entities() {
        let series = match p.entity_series(e, v) {
            Some(s) if opts.differenced => first_difference(&s).ok(),
            other => other,
        };
        match series {
            Some(s) if check_len(s.len(), opts.deterministic).is_ok() => kept.push(s),
            _ => {
                log::warn!(
                    "unit-root tests on `{variable}`: dropping entity `{}` (series too short)",
                    p.entities()[e]
                );
                dropped.push(p.entities()[e].clone());
            }
        }
    }
    if kept.len() < 2 {
        return Err(Error::InsufficientEntities {
            needed: 2,
            got: kept.len(),
        });
    }
    Ok((kept, dropped))
}

fn result(
    method: UnitRootMethod,
    variable: &str,
    statistic: f64,
    p_value: f64,
    per_entity: Option<Vec<EntityStat>>,
    lags: Vec<usize>,
    dropped: Vec<String>,
    opts: &UnitRootOptions,
) -> UnitRootResult {
    UnitRootResult {
        method,
        variable: variable.to_string(),
        statistic,
        p_value,
        per_entity,
        differenced: opts.differenced,
        deterministic: opts.deterministic,
        lags,
        dropped,
    }
}

fn residualize<T: Real>(y: &DVector<T>, z: &DMatrix<T>) -> Result<DVector<T>> {
    if z.ncols() == 0 {
        Ok(y.clone())
    } else {
        Ok(ols(y, z)?.residuals)
    }
}

/// Removes the deterministic terms of `det` from `x` by least squares.
fn detrend<T: Real>(x: &[T], det: Deterministic) -> Result<Vec<T>> {
    let n = x.len();
    let k = det.n_terms();
    if k == 0 {
        return Ok(x.to_vec());
    }
    let y = DVector::from_column_slice(x);
    let z = DMatrix::from_fn(n, k, |r, c| if c == 0 { T::one() } else { T::count(r) });
    Ok(ols(&y, &z)?.residuals.as_slice().to_vec())
}

struct LlcEntity<T: Real> {
    e_tilde: DVector<T>,
    v_tilde: DVector<T>,
    ratio: T,
    lags: usize,
}

fn llc_entity<T: Real>(y: &[T], opts: &UnitRootOptions) -> Result<LlcEntity<T>> {
    let det = opts.deterministic;
    let p = resolve_lags(y, det, opts.lags)?;
    let (dy, x) = adf_design(y, p, det, p + 1);
    let n = dy.len();
    let z = x.columns(1, x.ncols() - 1).into_owned();
    let e = residualize(&dy, &z)?;
    let v = residualize(&x.column(0).into_owned(), &z)?;
    let full = ols(&dy, &x)?;
    let sigma_eps = (full.ssr() / T::count(n)).max(T::variance_floor()).sqrt();

    let diffs: Vec<T> = y.windows(2).map(|w| w[1] - w[0]).collect();
    let diffs = detrend(&diffs, det)?;
    let kbar = opts.bandwidth.resolve(diffs.len()).min(diffs.len() - 1);
    let sigma_y = bartlett_lrv(&diffs, kbar, false)?.sqrt();
    Ok(LlcEntity {
        e_tilde: e / sigma_eps,
        v_tilde: v / sigma_eps,
        ratio: sigma_y / sigma_eps,
        lags: p,
    })
}

/// Levin-Lin-Chu adjusted pooled t statistic on pre-extracted series.
pub fn llc_series<T: Real>(series: &[SeriesView<T>], opts: &UnitRootOptions) -> Result<(f64, f64, Vec<usize>)> {
    if series.len() < 2 {
        return Err(Error::InsufficientEntities {
            needed: 2,
            got: series.len(),
        });
    }
    let parts = series
        .iter()
        .map(|s| llc_entity(&s.data, opts))
        .collect::<Result<Vec<_>>>()?;
    let n_ent = T::count(parts.len());
    let mut svv = T::zero();
    let mut sve = T::zero();
    let mut total = 0usize;
    for part in &parts {
        svv += part.v_tilde.norm_squared();
        sve += part.v_tilde.dot(&part.e_tilde);
        total += part.e_tilde.len();
    }
    if !(svv > T::zero()) {
        return Err(Error::RankDeficient {
            condition: f64::INFINITY,
        });
    }
    let delta = sve / svv;
    let ssr = parts.iter().fold(T::zero(), |acc, part| {
        acc + (&part.e_tilde - &part.v_tilde * delta).norm_squared()
    });
    let nt = T::count(total);
    let sigma2 = (ssr / nt).max(T::variance_floor());
    let std = sigma2.sqrt() / svv.sqrt();
    let t_delta = delta / std;
    let s_n = parts.iter().fold(T::zero(), |acc, part| acc + part.ratio) / n_ent;
    let t_tilde = total as f64 / parts.len() as f64;
    let (mu, sd) = tables::llc_adjustment(opts.deterministic, t_tilde);
    let adj = nt * s_n / sigma2 * std * T::lit(mu);
    let stat = ((t_delta - adj) / T::lit(sd)).as_f64();
    Ok((stat, normal_cdf(stat), parts.iter().map(|p| p.lags).collect()))
}

/// Im-Pesaran-Shin W-t-bar statistic on pre-extracted series.
pub fn ips_series<T: Real>(
    series: &[SeriesView<T>],
    opts: &UnitRootOptions,
) -> Result<(f64, f64, Vec<EntityStat>)> {
    if series.len() < 2 {
        return Err(Error::InsufficientEntities {
            needed: 2,
            got: series.len(),
        });
    }
    let mut stats = Vec::with_capacity(series.len());
    let (mut tbar, mut ebar, mut vbar) = (0.0, 0.0, 0.0);
    for s in series {
        let out = adf_fit(&s.data, opts.deterministic, opts.lags)?;
        let (m, v) = tables::ips_moments(opts.deterministic, s.len(), out.lags).ok_or_else(|| {
            Error::InvalidSpec("IPS moment table has no entry for this sample size".into())
        })?;
        let t = out.statistic.as_f64();
        tbar += t;
        ebar += m;
        vbar += v;
        stats.push(EntityStat {
            entity: s.entity.clone(),
            statistic: t,
            p_value: out.p_value,
            lags: out.lags,
            nobs: out.nobs,
        });
    }
    let n = series.len() as f64;
    let w = n.sqrt() * (tbar / n - ebar / n) / (vbar / n).sqrt();
    Ok((w, normal_cdf(w), stats))
}

/// Fisher combination of per-entity ADF p-values on pre-extracted series.
pub fn adf_fisher_series<T: Real>(
    series: &[SeriesView<T>],
    opts: &UnitRootOptions,
) -> Result<(f64, f64, Vec<EntityStat>)> {
    let stats = series
        .iter()
        .map(|s| {
            let out = adf_fit(&s.data, opts.deterministic, opts.lags)?;
            Ok(EntityStat {
                entity: s.entity.clone(),
                statistic: out.statistic.as_f64(),
                p_value: out.p_value,
                lags: out.lags,
                nobs: out.nobs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    combine(stats)
}

/// Fisher combination of per-entity Phillips-Perron p-values.
pub fn pp_fisher_series<T: Real>(
    series: &[SeriesView<T>],
    opts: &UnitRootOptions,
) -> Result<(f64, f64, Vec<EntityStat>)> {
    let stats = series
        .iter()
        .map(|s| {
            let out = pp_stat(s, opts.deterministic, opts.bandwidth)?;
            Ok(EntityStat {
                entity: s.entity.clone(),
                statistic: out.statistic.as_f64(),
                p_value: out.p_value,
                lags: out.bandwidth,
                nobs: out.nobs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    combine(stats)
}

fn combine(stats: Vec<EntityStat>) -> Result<(f64, f64, Vec<EntityStat>)> {
    let ps: Vec<f64> = stats.iter().map(|s| s.p_value.max(FISHER_P_FLOOR)).collect();
    let (stat, p) = fisher_combine(&ps)?;
    Ok((stat, p, stats))
}

/// Runs one panel unit-root method on `variable`.
pub fn panel_unit_root<T: Real>(
    p: &PanelDataset<T>,
    variable: &str,
    method: UnitRootMethod,
    opts: &UnitRootOptions,
) -> Result<UnitRootResult> {
    let (series, dropped) = usable_series(p, variable, opts)?;
    let out = match method {
        UnitRootMethod::Llc => {
            let (stat, pv, lags) = llc_series(&series, opts)?;
            result(method, variable, stat, pv, None, lags, dropped, opts)
        }
        UnitRootMethod::Ips | UnitRootMethod::AdfFisher | UnitRootMethod::PpFisher => {
            let (stat, pv, stats) = match method {
                UnitRootMethod::Ips => ips_series(&series, opts)?,
                UnitRootMethod::AdfFisher => adf_fisher_series(&series, opts)?,
                _ => pp_fisher_series(&series, opts)?,
            };
            let lags = stats.iter().map(|s| s.lags).collect();
            result(method, variable, stat, pv, Some(stats), lags, dropped, opts)
        }
    };
    Ok(out)
}

/// Levin-Lin-Chu test with Schwarz lags.
pub fn llc_test<T: Real>(
    p: &PanelDataset<T>,
    variable: &str,
    differenced: bool,
    det: Deterministic,
) -> Result<UnitRootResult> {
    let opts = UnitRootOptions::new(differenced).with_deterministic(det);
    panel_unit_root(p, variable, UnitRootMethod::Llc, &opts)
}

/// Im-Pesaran-Shin test with Schwarz lags.
pub fn ips_test<T: Real>(
    p: &PanelDataset<T>,
    variable: &str,
    differenced: bool,
    det: Deterministic,
) -> Result<UnitRootResult> {
    let opts = UnitRootOptions::new(differenced).with_deterministic(det);
    panel_unit_root(p, variable, UnitRootMethod::Ips, &opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn noise(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
        (0..n).map(|_| rng.sample(StandardNormal)).collect()
    }

    fn walk(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
        let mut acc = 0.0;
        noise(rng, n)
            .into_iter()
            .map(|e| {
                acc += e;
                acc
            })
            .collect()
    }

    fn ar1(rng: &mut ChaCha8Rng, n: usize, rho: f64) -> Vec<f64> {
        let mut y = 0.0;
        noise(rng, n + 50)
            .into_iter()
            .map(|e| {
                y = rho * y + e;
                y
            })
            .skip(50)
            .collect()
    }

    #[test]
    fn fisher_boundaries() {
        assert_eq!(fisher_combine(&[1.0, 1.0, 1.0]).unwrap(), (0.0, 1.0));
        let (s, p) = fisher_combine(&[(-1.0f64).exp()]).unwrap();
        assert!((s - 2.0).abs() < 1e-12);
        assert!((p - (-1.0f64).exp()).abs() < 1e-12);
        assert!(matches!(fisher_combine(&[0.5, 0.0]), Err(Error::InvalidPValue(_))));
        assert!(matches!(fisher_combine(&[1.2]), Err(Error::InvalidPValue(_))));
    }

    proptest::proptest! {
        #[test]
        fn fisher_decreasing_in_each_p(
            ps in proptest::collection::vec(0.001f64..1.0, 1..30),
            pick in 0usize..30,
            shrink in 0.05f64..0.95,
        ) {
            let i = pick % ps.len();
            let (s0, p0) = fisher_combine(&ps).unwrap();
            let mut lower = ps.clone();
            lower[i] *= shrink;
            let (s1, p1) = fisher_combine(&lower).unwrap();
            proptest::prop_assert!(s1 > s0);
            proptest::prop_assert!(p1 <= p0);
            let direct: f64 = -2.0 * ps.iter().map(|p| p.ln()).sum::<f64>();
            proptest::prop_assert!((s0 - direct).abs() <= 1e-12 * direct.max(1.0));
        }
    }

    #[test]
    fn design_rows_match_definition() {
        let y = [1.0, 2.0, 4.0, 7.0, 11.0];
        let (dy, x) = adf_design(&y, 1, Deterministic::ConstantTrend, 2);
        assert_eq!(dy.as_slice(), &[2.0, 3.0, 4.0]);
        assert_eq!(x.row(0).iter().copied().collect::<Vec<_>>(), vec![2.0, 1.0, 1.0, 2.0]);
        assert_eq!(x.row(2).iter().copied().collect::<Vec<_>>(), vec![7.0, 3.0, 1.0, 4.0]);
    }

    #[test]
    fn short_series_rejected() {
        let s = SeriesView::new(vec![1.0, 2.0, 1.5, 3.0, 2.0]);
        assert!(matches!(
            adf_stat(&s, Deterministic::Constant, LagSpec::Fixed(0)),
            Err(Error::SeriesTooShort { .. })
        ));
    }

    #[test]
    fn linear_trend_does_not_reject_with_constant_only() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let y: Vec<f64> = (0..200).map(|t| t as f64 + 0.01 * rng.sample::<f64, _>(StandardNormal)).collect();
        let out = adf_stat(&SeriesView::new(y), Deterministic::Constant, LagSpec::Fixed(0)).unwrap();
        assert!(out.p_value > 0.05, "stat {}", out.statistic);
    }

    #[test]
    fn schwarz_picks_true_order_for_ar2_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut hits = 0;
        for _ in 0..50 {
            let e = noise(&mut rng, 400);
            let mut d = vec![0.0; 400];
            for t in 2..400 {
                d[t] = 0.6 * d[t - 1] - 0.3 * d[t - 2] + e[t];
            }
            let y = crate::panel::integrate(0.0, &d);
            if select_lag_sic(&y, Deterministic::Constant).unwrap() == 2 {
                hits += 1;
            }
        }
        assert!(hits >= 40, "{hits}");
    }

    #[test]
    fn adf_size_under_random_walk() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let reps = 1000;
        let mut rej = 0;
        for _ in 0..reps {
            let s = SeriesView::new(walk(&mut rng, 500));
            if adf_stat(&s, Deterministic::Constant, LagSpec::Fixed(0)).unwrap().p_value < 0.05 {
                rej += 1;
            }
        }
        let rate = rej as f64 / reps as f64;
        assert!((0.03..=0.07).contains(&rate), "{rate}");
    }

    #[test]
    fn adf_power_on_white_noise() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let reps = 200;
        let rej = (0..reps)
            .filter(|_| {
                let s = SeriesView::new(noise(&mut rng, 500));
                adf_stat(&s, Deterministic::Constant, LagSpec::Schwarz).unwrap().p_value < 0.05
            })
            .count();
        assert!(rej as f64 / reps as f64 >= 0.95);
    }

    #[test]
    fn pp_matches_adf_without_serial_correlation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut gaps = Vec::new();
        for _ in 0..50 {
            let s = SeriesView::new(noise(&mut rng, 1000));
            let adf = adf_stat(&s, Deterministic::Constant, LagSpec::Fixed(0)).unwrap();
            // zero bandwidth removes the correction entirely
            let pp0 = pp_stat(&s, Deterministic::Constant, Bandwidth::Fixed(0)).unwrap();
            assert!((pp0.statistic - adf.statistic).abs() < 1e-9);
            let pp = pp_stat(&s, Deterministic::Constant, Bandwidth::Auto).unwrap();
            gaps.push(pp.statistic - adf.statistic);
        }
        let mean = gaps.iter().sum::<f64>() / gaps.len() as f64;
        gaps.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
        let median = gaps[gaps.len() / 2].abs();
        assert!(median < 0.02 && mean.abs() < 0.05, "mean {mean} median {median}");
    }

    #[test]
    fn pp_size_under_random_walk() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let reps = 1000;
        let rej = (0..reps)
            .filter(|_| {
                let s = SeriesView::new(walk(&mut rng, 200));
                pp_stat(&s, Deterministic::Constant, Bandwidth::Auto).unwrap().p_value < 0.05
            })
            .count();
        let rate = rej as f64 / reps as f64;
        assert!((0.03..=0.07).contains(&rate), "{rate}");
    }

    #[test]
    fn pp_corrects_serially_correlated_errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let reps = 500;
        let (mut pp_rej, mut df_rej) = (0, 0);
        for _ in 0..reps {
            let u = ar1(&mut rng, 300, -0.5);
            let s = SeriesView::new(crate::panel::integrate(0.0, &u));
            if pp_stat(&s, Deterministic::Constant, Bandwidth::Auto).unwrap().p_value < 0.05 {
                pp_rej += 1;
            }
            if adf_stat(&s, Deterministic::Constant, LagSpec::Fixed(0)).unwrap().p_value < 0.05 {
                df_rej += 1;
            }
        }
        let pp = pp_rej as f64 / reps as f64;
        let df = df_rej as f64 / reps as f64;
        assert!((pp - 0.05).abs() < (df - 0.05).abs(), "pp {pp} df {df}");
    }

    #[test]
    fn f32_and_f64_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let y = walk(&mut rng, 120);
        let y32: Vec<f32> = y.iter().map(|&v| v as f32).collect();
        let a = adf_stat(&SeriesView::new(y), Deterministic::Constant, LagSpec::Fixed(1)).unwrap();
        let b = adf_stat(&SeriesView::new(y32), Deterministic::Constant, LagSpec::Fixed(1)).unwrap();
        assert!((a.statistic - b.statistic as f64).abs() < 1e-3);
    }

    #[test]
    fn fisher_p_is_uniform_under_uniform_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let reps = 2000;
        let mut ps: Vec<f64> = (0..reps)
            .map(|_| {
                let draws: Vec<f64> = (0..50).map(|_| 1.0 - rng.random::<f64>()).collect();
                fisher_combine(&draws).unwrap().1
            })
            .collect();
        ps.sort_by(f64::total_cmp);
        let d = ps
            .iter()
            .enumerate()
            .map(|(i, &p)| (p - i as f64 / reps as f64).abs().max(((i + 1) as f64 / reps as f64 - p).abs()))
            .fold(0.0, f64::max);
        // 1% Kolmogorov-Smirnov critical value
        assert!(d < 1.628 / (reps as f64).sqrt(), "D = {d}");
    }

    fn panel(kind: crate::synth::DgpKind, rho: f64, seed: u64) -> PanelDataset<f64> {
        let mut spec = crate::synth::DgpSpec::new(kind, 20, 100, seed);
        spec.ar.rho = rho;
        crate::synth::generate(&spec).unwrap()
    }

    fn decisions(p: &PanelDataset<f64>, differenced: bool) -> Vec<UnitRootResult> {
        UnitRootMethod::ALL
            .iter()
            .map(|&m| panel_unit_root(p, "gdp", m, &UnitRootOptions::new(differenced)).unwrap())
            .collect()
    }

    #[test]
    fn differencing_an_integrated_panel_flips_every_test() {
        let reps = 20;
        let mut flipped = [0usize; 4];
        for seed in 0..reps {
            let p = panel(crate::synth::DgpKind::IndependentWalks, 0.0, 900 + seed);
            for (j, r) in decisions(&p, true).iter().enumerate() {
                assert!(r.differenced);
                if r.p_value < 0.01 {
                    flipped[j] += 1;
                }
            }
        }
        assert!(flipped.iter().all(|&f| f as f64 >= 0.95 * reps as f64), "{flipped:?}");
    }

    #[test]
    fn methods_agree_on_clean_panels() {
        let reps = 20;
        let mut agree = 0;
        for seed in 0..reps {
            for (kind, truth) in [
                (crate::synth::DgpKind::IndependentWalks, false),
                (crate::synth::DgpKind::StationaryAr, true),
            ] {
                let p = panel(kind, 0.3, 950 + seed);
                if decisions(&p, false).iter().all(|r| r.reject() == truth) {
                    agree += 1;
                }
            }
        }
        assert!(agree as f64 >= 0.9 * 2.0 * reps as f64, "{agree}");
    }

    #[test]
    fn per_entity_detail_and_reports() {
        let p = panel(crate::synth::DgpKind::StationaryAr, 0.5, 3);
        for r in decisions(&p, false) {
            assert_eq!(r.per_entity.is_some(), r.method != UnitRootMethod::Llc);
            assert_eq!(r.n_entities(), 20);
            let rep = r.report().unwrap();
            assert!((0.0..=1.0).contains(&rep.p_value));
            assert_eq!(rep.reject, r.reject());
        }
        assert!(matches!(
            llc_test(&p.subset_entities(&[0]), "gdp", false, Deterministic::Constant),
            Err(Error::InsufficientEntities { .. })
        ));
    }
}
