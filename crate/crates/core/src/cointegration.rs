//! Pedroni residual-based panel cointegration tests.
//!
//! A first-stage regression of the dependent variable on the integrated
//! regressors (plus deterministic terms and optional exogenous shifts) is
//! run entity by entity. The seven statistics are then built from the
//! residuals: four pooled within-dimension statistics (panel v, rho, PP,
//! ADF) and three between-dimension averages (group rho, PP, ADF).

use crate::dist::Deterministic;
use crate::error::{Error, Result};
use crate::panel::PanelDataset;
use crate::regress::{bartlett_lrv, ols, Bandwidth};
use crate::report::{Distribution, Tail, TestReport, SIGNIFICANCE};
use crate::scalar::Real;
use crate::tables;
use crate::unit_root::{select_lag_sic, LagSpec, MIN_ADF_NOBS};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// First-stage specification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PedroniSpec {
    pub dependent: String,
    /// Integrated regressors; their count selects the standardization row.
    pub regressors: Vec<String>,
    /// Exogenous level shifts (policy dummies) included in the first stage
    /// but not counted as integrated regressors.
    pub shifts: Vec<String>,
    pub deterministic: Deterministic,
    pub lags: LagSpec,
    pub bandwidth: Bandwidth,
}

impl PedroniSpec {
    pub fn new(dependent: &str, regressors: &[&str]) -> Self {
        Self {
            dependent: dependent.to_string(),
            regressors: regressors.iter().map(|s| s.to_string()).collect(),
            shifts: Vec::new(),
            deterministic: Deterministic::Constant,
            lags: LagSpec::Schwarz,
            bandwidth: Bandwidth::Auto,
        }
    }

    pub fn with_shifts(mut self, shifts: &[&str]) -> Self {
        self.shifts = shifts.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_deterministic(mut self, det: Deterministic) -> Self {
        self.deterministic = det;
        self
    }
}

/// First-stage residuals of one entity together with the long-run
/// variance of its conditional innovation.
#[derive(Debug, Clone, PartialEq)]
pub struct EntityResiduals<T: Real> {
    pub entity: String,
    pub first_year: i32,
    pub residuals: Vec<T>,
    /// Long-run variance of the residual of `dy` on `dx`.
    pub l11_sq: T,
}

/// The seven statistics, in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PedroniStatistic {
    PanelV,
    PanelRho,
    PanelPp,
    PanelAdf,
    GroupRho,
    GroupPp,
    GroupAdf,
}

impl PedroniStatistic {
    pub const ALL: [PedroniStatistic; 7] = [
        PedroniStatistic::PanelV,
        PedroniStatistic::PanelRho,
        PedroniStatistic::PanelPp,
        PedroniStatistic::PanelAdf,
        PedroniStatistic::GroupRho,
        PedroniStatistic::GroupPp,
        PedroniStatistic::GroupAdf,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            PedroniStatistic::PanelV => "Panel v-Statistic",
            PedroniStatistic::PanelRho => "Panel rho-Statistic",
            PedroniStatistic::PanelPp => "Panel PP-Statistic",
            PedroniStatistic::PanelAdf => "Panel ADF-Statistic",
            PedroniStatistic::GroupRho => "Group rho-Statistic",
            PedroniStatistic::GroupPp => "Group PP-Statistic",
            PedroniStatistic::GroupAdf => "Group ADF-Statistic",
        }
    }

    /// Panel v diverges to +inf under cointegration, the others to -inf.
    pub fn tail(self) -> Tail {
        if self == PedroniStatistic::PanelV {
            Tail::Right
        } else {
            Tail::Left
        }
    }
}

/// Per-entity building blocks of the seven statistics.
///
/// `a`, `b`, `c` feed the pooled statistics (already scaled by the sample
/// size and weighted by the inverse long-run variance); `rho`, `t` and
/// `t_star` are the per-entity group ingredients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ingredients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub a_star: f64,
    pub b_star: f64,
    pub c_star: f64,
    pub rho: f64,
    pub t: f64,
    pub t_star: f64,
    pub lags: usize,
}

impl Ingredients {
    fn as_array(&self) -> [f64; 9] {
        [
            self.a,
            self.b,
            self.c,
            self.a_star,
            self.b_star,
            self.c_star,
            self.rho,
            self.t,
            self.t_star,
        ]
    }
}

/// Raw (unstandardized) statistic from ingredient means, divided by `sqrt(N)`.
/// Indices: a=0, b=1, c=2, a*=3, b*=4, c*=5, rho=6, t=7, t*=8.
fn raw_from_means(stat: PedroniStatistic, m: &[f64; 9]) -> f64 {
    match stat {
        PedroniStatistic::PanelV => 1.0 / m[0],
        PedroniStatistic::PanelRho => m[1] / m[0],
        PedroniStatistic::PanelPp => m[1] / (m[2] * m[0]).sqrt(),
        PedroniStatistic::PanelAdf => m[4] / (m[5] * m[3]).sqrt(),
        PedroniStatistic::GroupRho => m[6],
        PedroniStatistic::GroupPp => m[7],
        PedroniStatistic::GroupAdf => m[8],
    }
}

fn gradient(stat: PedroniStatistic, m: &[f64; 9]) -> [f64; 9] {
    let mut g = [0.0; 9];
    match stat {
        PedroniStatistic::PanelV => g[0] = -1.0 / (m[0] * m[0]),
        PedroniStatistic::PanelRho => {
            g[0] = -m[1] / (m[0] * m[0]);
            g[1] = 1.0 / m[0];
        }
        PedroniStatistic::PanelPp | PedroniStatistic::PanelAdf => {
            let (ia, ib, ic) = if stat == PedroniStatistic::PanelPp {
                (0, 1, 2)
            } else {
                (3, 4, 5)
            };
            let f = m[ib] / (m[ic] * m[ia]).sqrt();
            g[ib] = f / m[ib];
            g[ia] = -0.5 * f / m[ia];
            g[ic] = -0.5 * f / m[ic];
        }
        PedroniStatistic::GroupRho => g[6] = 1.0,
        PedroniStatistic::GroupPp => g[7] = 1.0,
        PedroniStatistic::GroupAdf => g[8] = 1.0,
    }
    g
}

/// Null mean and variance `(mu, nu)` of each normalized statistic, from a
/// sample of per-entity ingredients, by the delta method: `sqrt(N) f(mean)`
/// is asymptotically `N(sqrt(N) f(E x), grad' Cov(x) grad)`.
pub fn standardization_from_sample(sample: &[Ingredients]) -> [(f64, f64); 7] {
    let n = sample.len() as f64;
    let mut mean = [0.0; 9];
    for s in sample {
        for (acc, v) in mean.iter_mut().zip(s.as_array()) {
            *acc += v / n;
        }
    }
    let mut cov = [[0.0; 9]; 9];
    for s in sample {
        let x = s.as_array();
        for i in 0..9 {
            for j in 0..9 {
                cov[i][j] += (x[i] - mean[i]) * (x[j] - mean[j]) / (n - 1.0);
            }
        }
    }
    PedroniStatistic::ALL.map(|stat| {
        let g = gradient(stat, &mean);
        let mut nu = 0.0;
        for i in 0..9 {
            for j in 0..9 {
                nu += g[i] * cov[i][j] * g[j];
            }
        }
        (raw_from_means(stat, &mean), nu)
    })
}

/// Per-entity ingredients from first-stage residuals `e` and the long-run
/// variance `l11_sq` of the conditional innovation.
pub fn entity_ingredients<T: Real>(
    e: &[T],
    l11_sq: T,
    lags: LagSpec,
    bandwidth: Bandwidth,
) -> Result<Ingredients> {
    let len = e.len();
    if len < MIN_ADF_NOBS + 2 {
        return Err(Error::SeriesTooShort {
            needed: MIN_ADF_NOBS + 2,
            got: len,
        });
    }
    let l2 = l11_sq.max(T::variance_floor());
    let n = len - 1;
    let nt = T::count(n);

    // AR(1) residual regression for the rho and PP statistics
    let mut see = T::zero();
    let mut sed = T::zero();
    let mut sel = T::zero();
    for t in 1..len {
        see += e[t - 1] * e[t - 1];
        sed += e[t - 1] * (e[t] - e[t - 1]);
        sel += e[t - 1] * e[t];
    }
    if !(see > T::zero()) {
        return Err(Error::InsufficientData("first-stage residuals are identically zero".into()));
    }
    let rho_hat = sel / see;
    let u: Vec<T> = (1..len).map(|t| e[t] - rho_hat * e[t - 1]).collect();
    let bw = bandwidth.resolve(n).min(n - 1);
    let sigma2 = bartlett_lrv(&u, bw, false)?;
    let s2 = u.iter().fold(T::zero(), |acc, &x| acc + x * x) / nt;
    let lambda = (sigma2 - s2) * T::lit(0.5);
    let num = sed - nt * lambda;

    // ADF-type regression with Schwarz-selected augmentation
    let k = match lags {
        LagSpec::Fixed(p) => p,
        LagSpec::Schwarz => select_lag_sic(e, Deterministic::None)?,
    };
    let rows = len - k - 1;
    let de = |s: usize| e[s] - e[s - 1];
    let dy = DVector::from_fn(rows, |r, _| de(k + 1 + r));
    let yl = DVector::from_fn(rows, |r, _| e[k + r]);
    let (dy_star, yl_star) = if k == 0 {
        (dy, yl)
    } else {
        let z = DMatrix::from_fn(rows, k, |r, c| de(k + 1 + r - (c + 1)));
        (ols(&dy, &z)?.residuals, ols(&yl, &z)?.residuals)
    };
    let s_yy = yl_star.norm_squared();
    let s_yd = yl_star.dot(&dy_star);
    let delta = s_yd / s_yy;
    let u_star = &dy_star - &yl_star * delta;
    let rt = T::count(rows);
    let s2_star = (u_star.norm_squared() / rt).max(T::variance_floor());

    let f = |x: T| x.as_f64();
    Ok(Ingredients {
        a: f(see / (l2 * nt * nt)),
        b: f(num / (l2 * nt)),
        c: f(sigma2 / l2),
        a_star: f(s_yy / (l2 * rt * rt)),
        b_star: f(s_yd / (l2 * rt)),
        c_star: f(s2_star / l2),
        rho: f(nt * num / see),
        t: f(num / (sigma2 * see).sqrt()),
        t_star: f(s_yd / (s2_star * s_yy).sqrt()),
        lags: k,
    })
}

/// Per-entity first-stage OLS residuals of `dependent` on the regressors,
/// shifts and deterministic terms, over each entity's longest complete run.
///
/// Entities that are too short or whose design is rank deficient are
/// dropped with a log message and returned by name. A shift that is
/// constant over an entity's run is left out of that entity's regression.
pub fn entity_cointegrating_residuals<T: Real>(
    p: &PanelDataset<T>,
    spec: &PedroniSpec,
) -> Result<(Vec<EntityResiduals<T>>, Vec<String>)> {
    if spec.deterministic == Deterministic::None {
        return Err(Error::InvalidSpec(
            "the first-stage regression needs at least a constant".into(),
        ));
    }
    let dep = p.var_index(&spec.dependent)?;
    let regs = spec
        .regressors
        .iter()
        .map(|r| p.var_index(r))
        .collect::<Result<Vec<_>>>()?;
    let shifts = spec
        .shifts
        .iter()
        .map(|r| p.var_index(r))
        .collect::<Result<Vec<_>>>()?;
    let mut all = vec![dep];
    all.extend(&regs);
    all.extend(&shifts);
    let n_det = spec.deterministic.n_terms();

    let mut out = Vec::new();
    let mut dropped = Vec::new();
    for e in 0..p.n_entities() {
        let name = &p.entities()[e];
        let run = match p.observed_run(e, &all) {
            Some(run) if run.len >= regs.len() + shifts.len() + n_det + 5 && run.len >= MIN_ADF_NOBS + 2 => run,
            _ => {
                log::warn!("cointegration: dropping entity `{name}` (too few complete observations)");
                dropped.push(name.clone());
                continue;
            }
        };
        match first_stage(p, e, dep, &regs, &shifts, run, spec) {
            Ok((residuals, l11_sq)) => out.push(EntityResiduals {
                entity: name.clone(),
                first_year: p.year(run.start),
                residuals,
                l11_sq,
            }),
            Err(err @ (Error::RankDeficient { .. } | Error::SeriesTooShort { .. })) => {
                log::warn!("cointegration: dropping entity `{name}` ({err})");
                dropped.push(name.clone());
            }
            Err(err) => return Err(err),
        }
    }
    Ok((out, dropped))
}

fn first_stage<T: Real>(
    p: &PanelDataset<T>,
    e: usize,
    dep: usize,
    regs: &[usize],
    shifts: &[usize],
    run: crate::panel::Run,
    spec: &PedroniSpec,
) -> Result<(Vec<T>, T)> {
    let y = p.run_values(e, dep, run);
    let xs: Vec<Vec<T>> = regs.iter().map(|&v| p.run_values(e, v, run)).collect();
    let ds: Vec<Vec<T>> = shifts
        .iter()
        .map(|&v| p.run_values(e, v, run))
        .filter(|d| d.iter().any(|&x| x != d[0]))
        .collect();
    let n = y.len();
    let trend = spec.deterministic == Deterministic::ConstantTrend;
    let mut cols: Vec<Vec<T>> = vec![vec![T::one(); n]];
    if trend {
        cols.push((0..n).map(T::count).collect());
    }
    cols.extend(xs.iter().cloned());
    cols.extend(ds);
    let x = DMatrix::from_fn(n, cols.len(), |r, c| cols[c][r]);
    let fit = ols(&DVector::from_vec(y.clone()), &x)?;
    let residuals = fit.residuals.as_slice().to_vec();

    // conditional innovation: dy on dx (constant only with a trend)
    let dy = DVector::from_fn(n - 1, |r, _| y[r + 1] - y[r]);
    let mut dcols: Vec<Vec<T>> = xs.iter().map(|x| x.windows(2).map(|w| w[1] - w[0]).collect()).collect();
    if trend {
        dcols.push(vec![T::one(); n - 1]);
    }
    let eta = if dcols.is_empty() {
        dy.as_slice().to_vec()
    } else {
        let dx = DMatrix::from_fn(n - 1, dcols.len(), |r, c| dcols[c][r]);
        ols(&dy, &dx)?.residuals.as_slice().to_vec()
    };
    let bw = spec.bandwidth.resolve(eta.len()).min(eta.len() - 1);
    let l11_sq = bartlett_lrv(&eta, bw, false)?;
    Ok((residuals, l11_sq))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PedroniEntry {
    pub statistic: PedroniStatistic,
    /// Normalized statistic before the mean/variance adjustment.
    pub raw: f64,
    pub report: TestReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PedroniResult {
    pub statistics: Vec<PedroniEntry>,
    /// True when at least four of the seven statistics reject at 5%.
    pub decision: bool,
    pub n_regressors: usize,
    pub deterministic: Deterministic,
    pub n_entities: usize,
    pub series_length: usize,
    pub dropped: Vec<String>,
}

impl PedroniResult {
    pub fn get(&self, stat: PedroniStatistic) -> &PedroniEntry {
        &self.statistics[stat.index()]
    }

    pub fn rejections(&self) -> usize {
        self.statistics.iter().filter(|s| s.report.reject).count()
    }
}

/// The seven standardized Pedroni statistics from per-entity residuals.
///
/// `n_regressors` is the number of integrated regressors in the first
/// stage. Entities are reduced in name order so the result does not depend
/// on the input order.
pub fn pedroni_tests<T: Real>(
    residuals: &[EntityResiduals<T>],
    n_regressors: usize,
    det: Deterministic,
    lags: LagSpec,
    bandwidth: Bandwidth,
) -> Result<PedroniResult> {
    if residuals.len() < 2 {
        return Err(Error::InsufficientEntities {
            needed: 2,
            got: residuals.len(),
        });
    }
    let mut order: Vec<&EntityResiduals<T>> = residuals.iter().collect();
    order.sort_by(|a, b| a.entity.cmp(&b.entity));
    let parts = order
        .iter()
        .map(|r| entity_ingredients(&r.residuals, r.l11_sq, lags, bandwidth))
        .collect::<Result<Vec<_>>>()?;
    let n = parts.len() as f64;
    let mut mean = [0.0; 9];
    for part in &parts {
        for (acc, v) in mean.iter_mut().zip(part.as_array()) {
            *acc += v;
        }
    }
    for m in mean.iter_mut() {
        *m /= n;
    }
    let avg_len = (order.iter().map(|r| r.residuals.len()).sum::<usize>() as f64 / n).round() as usize;
    let mut statistics = Vec::with_capacity(7);
    for stat in PedroniStatistic::ALL {
        let raw = n.sqrt() * raw_from_means(stat, &mean);
        let (mu, nu) = tables::pedroni_moments(stat.index(), n_regressors, det, avg_len).ok_or_else(|| {
            Error::InvalidSpec(format!(
                "no Pedroni standardization for {n_regressors} regressors with {} terms",
                det.label()
            ))
        })?;
        let z = (raw - mu * n.sqrt()) / nu.sqrt();
        let report = TestReport::new(stat.label(), z, Distribution::Normal { tail: stat.tail() })?;
        statistics.push(PedroniEntry {
            statistic: stat,
            raw,
            report,
        });
    }
    let rejections = statistics.iter().filter(|s| s.report.p_value < SIGNIFICANCE).count();
    Ok(PedroniResult {
        statistics,
        decision: rejections >= 4,
        n_regressors,
        deterministic: det,
        n_entities: parts.len(),
        series_length: avg_len,
        dropped: Vec::new(),
    })
}

/// First stage plus the seven statistics.
pub fn pedroni_panel<T: Real>(p: &PanelDataset<T>, spec: &PedroniSpec) -> Result<PedroniResult> {
    let (res, dropped) = entity_cointegrating_residuals(p, spec)?;
    let mut out = pedroni_tests(&res, spec.regressors.len(), spec.deterministic, spec.lags, spec.bandwidth)?;
    out.dropped = dropped;
    Ok(out)
}
