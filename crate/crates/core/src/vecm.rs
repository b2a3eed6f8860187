//! Pooled panel vector error-correction model.
//!
//! The default path is two-step: a within (fixed-effects) OLS of the first
//! endogenous variable on the others and the policy dummies gives the
//! long-run relation, and its lagged residual enters each short-run
//! equation as the error-correction term. A reduced-rank (Johansen) path
//! with entity fixed effects estimates the long-run space instead and feeds
//! the same short-run regressions.

use crate::error::{Error, Result};
use crate::panel::{PanelDataset, Run};
use crate::regress::{ols, OlsFit};
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Long-run estimator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Estimator {
    TwoStep,
    ReducedRank,
}

/// Declaration of the system to estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub endogenous: Vec<String>,
    pub exogenous_dummies: Vec<String>,
    /// Lags of the differences in the short-run equations.
    pub lag_order: usize,
    pub rank: usize,
    /// Cholesky ordering for impulse responses and variance decompositions.
    pub ordering: Vec<String>,
    pub estimator: Estimator,
}

impl ModelSpec {
    pub fn new(endogenous: &[&str], dummies: &[&str], lag_order: usize) -> Self {
        let endogenous: Vec<String> = endogenous.iter().map(|s| s.to_string()).collect();
        Self {
            ordering: endogenous.clone(),
            endogenous,
            exogenous_dummies: dummies.iter().map(|s| s.to_string()).collect(),
            lag_order,
            rank: 1,
            estimator: Estimator::TwoStep,
        }
    }

    pub fn with_rank(mut self, rank: usize) -> Self {
        self.rank = rank;
        self
    }

    pub fn with_estimator(mut self, estimator: Estimator) -> Self {
        self.estimator = estimator;
        self
    }

    pub fn with_ordering(mut self, ordering: &[&str]) -> Self {
        self.ordering = ordering.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn k(&self) -> usize {
        self.endogenous.len()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        if k < 2 {
            return Err(Error::InvalidSpec("need at least two endogenous variables".into()));
        }
        if self.rank < 1 || self.rank >= k {
            return Err(Error::InvalidSpec(format!(
                "cointegrating rank must satisfy 1 <= r < K = {k}, got {}",
                self.rank
            )));
        }
        if self.lag_order < 1 {
            return Err(Error::InvalidSpec("lag order must be at least 1".into()));
        }
        if self.estimator == Estimator::TwoStep && self.rank != 1 {
            return Err(Error::InvalidSpec(
                "the two-step estimator identifies a single cointegrating relation; use reduced_rank".into(),
            ));
        }
        let mut a = self.ordering.clone();
        let mut b = self.endogenous.clone();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::InvalidSpec(
                "Cholesky ordering must be a permutation of the endogenous variables".into(),
            ));
        }
        let mut all = self.endogenous.clone();
        all.extend(self.exogenous_dummies.iter().cloned());
        let n = all.len();
        all.sort();
        all.dedup();
        if all.len() != n {
            return Err(Error::InvalidSpec("variable names must be distinct".into()));
        }
        Ok(())
    }
}

/// Long-run relation(s) in normalized form:
/// `ECT_it = beta' Y_it + c_i + delta' D_t`, with the first `r` rows of
/// `beta` equal to the identity. For one relation this is the
/// "first variable = 1" presentation; the regression form of the first
/// variable on the others is the negation (see [`Self::regression_form`]).
#[derive(Debug, Clone, PartialEq)]
pub struct CointegratingVector<T: Real> {
    pub variables: Vec<String>,
    /// `K x r`.
    pub beta: DMatrix<T>,
    /// Standard errors of `beta` (zero on the normalized rows). Not
    /// available from the reduced-rank path.
    pub beta_se: Option<DMatrix<T>>,
    /// Observation-weighted mean of the entity effects, one per relation.
    pub constant: DVector<T>,
    pub dummies: Vec<String>,
    /// `n_dummies x r`; zero for dummies flagged collinear.
    pub dummy_coef: DMatrix<T>,
    pub dummy_se: Option<DMatrix<T>>,
    /// Dummies dropped because they were constant within every entity.
    pub collinear: Vec<String>,
    pub entity_effects: BTreeMap<String, DVector<T>>,
    /// Pooled within regression behind the two-step estimate.
    pub fit: Option<OlsFit<T>>,
    pub nobs: usize,
    pub estimator: Estimator,
}

/// Regression-form coefficients of one long-run relation:
/// `y1 = constant + sum_j slopes_j y_j + sum_d dummies_d D_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionForm<T: Real> {
    pub slopes: Vec<T>,
    pub slope_se: Option<Vec<T>>,
    pub constant: T,
    pub dummies: Vec<T>,
    pub dummy_se: Option<Vec<T>>,
}

impl<T: Real> CointegratingVector<T> {
    pub fn rank(&self) -> usize {
        self.beta.ncols()
    }

    /// Error-correction terms at one observation.
    pub fn ect(&self, entity: &str, y: &[T], dummies: &[T]) -> Option<DVector<T>> {
        let c = self.entity_effects.get(entity)?;
        let y = DVector::from_column_slice(y);
        let d = DVector::from_column_slice(dummies);
        Some(self.beta.transpose() * y + c + self.dummy_coef.transpose() * d)
    }

    pub fn regression_form(&self, relation: usize) -> RegressionForm<T> {
        let r = self.rank();
        let k = self.variables.len();
        let col = self.beta.column(relation);
        RegressionForm {
            slopes: (r..k).map(|j| -col[j]).collect(),
            slope_se: self.beta_se.as_ref().map(|se| (r..k).map(|j| se[(j, relation)]).collect()),
            constant: -self.constant[relation],
            dummies: self.dummy_coef.column(relation).iter().map(|&d| -d).collect(),
            dummy_se: self.dummy_se.as_ref().map(|se| se.column(relation).iter().copied().collect()),
        }
    }

    /// t-ratios of the normalized coefficients (free rows only).
    pub fn beta_t(&self) -> Option<DMatrix<T>> {
        let se = self.beta_se.as_ref()?;
        Some(self.beta.zip_map(se, |b, s| if s > T::zero() { b / s } else { T::zero() }))
    }
}

/// Estimated short-run system.
#[derive(Debug, Clone)]
pub struct VecmEstimate<T: Real> {
    pub spec: ModelSpec,
    pub long_run: CointegratingVector<T>,
    /// One pooled regression per endogenous variable, columns as in
    /// `regressors`.
    pub equations: Vec<OlsFit<T>>,
    pub regressors: Vec<String>,
    pub design: DMatrix<T>,
    /// Observations x equations.
    pub residuals: DMatrix<T>,
    /// `U'U / (n - k)`.
    pub sigma: DMatrix<T>,
    pub nobs: usize,
    /// `(entity index, year offset)` of every row.
    pub rows: Vec<(usize, usize)>,
    pub entities: Vec<String>,
    pub first_year: i32,
    /// Short-run dummies dropped for lack of variation.
    pub collinear: Vec<String>,
    pub dropped: Vec<String>,
}

/// Levels VAR implied by a VECM.
#[derive(Debug, Clone, PartialEq)]
pub struct VarSystem<T: Real> {
    pub variables: Vec<String>,
    /// `A_1 .. A_{p+1}`.
    pub a: Vec<DMatrix<T>>,
    pub sigma: DMatrix<T>,
}

impl<T: Real> VarSystem<T> {
    pub fn k(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }
}

impl<T: Real> VecmEstimate<T> {
    pub fn k(&self) -> usize {
        self.spec.k()
    }

    /// Column of regressor `label`, if kept.
    pub fn column(&self, label: &str) -> Option<usize> {
        self.regressors.iter().position(|r| r == label)
    }

    /// Column of the `lag`-th lagged difference of endogenous variable `var`.
    pub fn lag_column(&self, var: usize, lag: usize) -> usize {
        self.spec.rank + var * self.spec.lag_order + (lag - 1)
    }

    /// Loadings `K x r`.
    pub fn alpha(&self) -> DMatrix<T> {
        let r = self.spec.rank;
        DMatrix::from_fn(self.k(), r, |i, j| self.equations[i].coefficients[j])
    }

    /// Short-run block `Gamma_j`, `K x K`.
    pub fn gamma(&self, lag: usize) -> DMatrix<T> {
        DMatrix::from_fn(self.k(), self.k(), |i, v| {
            self.equations[i].coefficients[self.lag_column(v, lag)]
        })
    }

    /// Long-run impact `alpha beta'`.
    pub fn pi(&self) -> DMatrix<T> {
        self.alpha() * self.long_run.beta.transpose()
    }

    pub fn to_levels_var(&self) -> VarSystem<T> {
        let gammas: Vec<DMatrix<T>> = (1..=self.spec.lag_order).map(|j| self.gamma(j)).collect();
        VarSystem {
            variables: self.spec.endogenous.clone(),
            a: to_levels_var(&self.pi(), &gammas),
            sigma: self.sigma.clone(),
        }
    }
}

/// `A_1 = I + Pi + Gamma_1`, `A_j = Gamma_j - Gamma_{j-1}`, `A_{p+1} = -Gamma_p`.
pub fn to_levels_var<T: Real>(pi: &DMatrix<T>, gammas: &[DMatrix<T>]) -> Vec<DMatrix<T>> {
    let k = pi.nrows();
    let p = gammas.len();
    let zero = DMatrix::zeros(k, k);
    let g = |j: usize| if j >= 1 && j <= p { &gammas[j - 1] } else { &zero };
    let mut a = Vec::with_capacity(p + 1);
    a.push(DMatrix::identity(k, k) + pi + g(1));
    for j in 2..=p + 1 {
        a.push(g(j) - g(j - 1));
    }
    a
}

struct Layout {
    endo: Vec<usize>,
    dummies: Vec<usize>,
    /// Per usable entity: (entity index, run).
    runs: Vec<(usize, Run)>,
    dropped: Vec<String>,
}

fn layout<T: Real>(p: &PanelDataset<T>, spec: &ModelSpec) -> Result<Layout> {
    spec.validate()?;
    let endo = spec
        .endogenous
        .iter()
        .map(|v| p.var_index(v))
        .collect::<Result<Vec<_>>>()?;
    let dummies = spec
        .exogenous_dummies
        .iter()
        .map(|v| p.var_index(v))
        .collect::<Result<Vec<_>>>()?;
    let mut all = endo.clone();
    all.extend(&dummies);
    let mut runs = Vec::new();
    let mut dropped = Vec::new();
    for e in 0..p.n_entities() {
        match p.observed_run(e, &all) {
            Some(run) if run.len >= spec.lag_order + 3 => runs.push((e, run)),
            _ => {
                log::warn!("vecm: dropping entity `{}` (too few complete observations)", p.entities()[e]);
                dropped.push(p.entities()[e].clone());
            }
        }
    }
    if runs.is_empty() {
        return Err(Error::InsufficientData("no entity has enough complete observations".into()));
    }
    Ok(Layout {
        endo,
        dummies,
        runs,
        dropped,
    })
}

fn value<T: Real>(p: &PanelDataset<T>, e: usize, t: usize, v: usize) -> T {
    p.value(e, t, v).expect("cell inside an observed run")
}

/// Columns with no variation left after demeaning.
fn is_degenerate<T: Real>(col: &[T]) -> bool {
    let scale = col.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    scale <= T::lit(1e-12)
}

/// Two-step (within OLS) or reduced-rank estimate of the long-run relation.
pub fn estimate_long_run<T: Real>(p: &PanelDataset<T>, spec: &ModelSpec) -> Result<CointegratingVector<T>> {
    let lay = layout(p, spec)?;
    match spec.estimator {
        Estimator::TwoStep => long_run_within(p, spec, &lay),
        Estimator::ReducedRank => long_run_reduced_rank(p, spec, &lay),
    }
}

fn long_run_within<T: Real>(p: &PanelDataset<T>, spec: &ModelSpec, lay: &Layout) -> Result<CointegratingVector<T>> {
    let k = spec.k();
    let nd = lay.dummies.len();
    // raw columns: x_1..x_{K-1}, dummies; plus y
    let ncol = k - 1 + nd;
    let mut y = Vec::new();
    let mut cols: Vec<Vec<T>> = vec![Vec::new(); ncol];
    let mut means = Vec::with_capacity(lay.runs.len());
    for &(e, run) in &lay.runs {
        let n = T::count(run.len);
        let series = |v: usize| -> Vec<T> { (run.start..run.end()).map(|t| value(p, e, t, v)).collect() };
        let yv = series(lay.endo[0]);
        let ym = crate::scalar::mean(&yv);
        y.extend(yv.iter().map(|&v| v - ym));
        let mut m = vec![ym];
        for (c, &v) in lay.endo[1..].iter().chain(&lay.dummies).enumerate() {
            let xv = series(v);
            let xm = xv.iter().fold(T::zero(), |a, &b| a + b) / n;
            cols[c].extend(xv.iter().map(|&v| v - xm));
            m.push(xm);
        }
        means.push((e, run.len, m));
    }
    let nobs = y.len();
    let n_coef = ncol + 1;
    if nobs < 30 * n_coef {
        return Err(Error::InsufficientData(format!(
            "long-run regression has {nobs} pooled observations, needs at least {}",
            30 * n_coef
        )));
    }
    let mut keep: Vec<usize> = (0..k - 1).collect();
    let mut collinear = Vec::new();
    for d in 0..nd {
        if is_degenerate(&cols[k - 1 + d]) {
            log::warn!(
                "vecm: dummy `{}` does not vary within any entity; dropped as collinear",
                spec.exogenous_dummies[d]
            );
            collinear.push(spec.exogenous_dummies[d].clone());
        } else {
            keep.push(k - 1 + d);
        }
    }
    let x = DMatrix::from_fn(nobs, keep.len(), |r, c| cols[keep[c]][r]);
    let fit = ols(&DVector::from_vec(y), &x)?;
    let df = nobs
        .checked_sub(keep.len() + lay.runs.len())
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::InsufficientData("no degrees of freedom after absorbing entity effects".into()))?;
    let fit = fit.with_df_resid(df)?;
    let se = fit.std_errors();

    // full coefficient vector over raw columns (zero for dropped dummies)
    let mut coef = vec![T::zero(); ncol];
    let mut coef_se = vec![T::zero(); ncol];
    for (c, &j) in keep.iter().enumerate() {
        coef[j] = fit.coefficients[c];
        coef_se[j] = se[c];
    }
    let mut beta = DMatrix::zeros(k, 1);
    let mut beta_se = DMatrix::zeros(k, 1);
    beta[(0, 0)] = T::one();
    for j in 1..k {
        beta[(j, 0)] = -coef[j - 1];
        beta_se[(j, 0)] = coef_se[j - 1];
    }
    let dummy_coef = DMatrix::from_fn(nd, 1, |d, _| -coef[k - 1 + d]);
    let dummy_se = DMatrix::from_fn(nd, 1, |d, _| coef_se[k - 1 + d]);

    let mut entity_effects = BTreeMap::new();
    let mut weighted = T::zero();
    for (e, len, m) in &means {
        // a_i = mean(y) - b' mean(x) - d' mean(D); normalized c_i = -a_i
        let a_i = (0..ncol).fold(m[0], |acc, j| acc - coef[j] * m[j + 1]);
        weighted += a_i * T::count(*len);
        entity_effects.insert(p.entities()[*e].clone(), DVector::from_element(1, -a_i));
    }
    let constant = DVector::from_element(1, -(weighted / T::count(nobs)));
    Ok(CointegratingVector {
        variables: spec.endogenous.clone(),
        beta,
        beta_se: Some(beta_se),
        constant,
        dummies: spec.exogenous_dummies.clone(),
        dummy_coef,
        dummy_se: Some(dummy_se),
        collinear,
        entity_effects,
        fit: Some(fit),
        nobs,
        estimator: Estimator::TwoStep,
    })
}

/// Residuals of the columns of `y` on `z` (unchanged when `z` is empty).
fn partial_out<T: Real>(y: &DMatrix<T>, z: &DMatrix<T>) -> Result<DMatrix<T>> {
    if z.ncols() == 0 {
        return Ok(y.clone());
    }
    let mut out = DMatrix::zeros(y.nrows(), y.ncols());
    for c in 0..y.ncols() {
        let fit = ols(&y.column(c).into_owned(), z)?;
        out.set_column(c, &fit.residuals);
    }
    Ok(out)
}

fn long_run_reduced_rank<T: Real>(
    p: &PanelDataset<T>,
    spec: &ModelSpec,
    lay: &Layout,
) -> Result<CointegratingVector<T>> {
    let k = spec.k();
    let lags = spec.lag_order;
    let r = spec.rank;
    let nd = lay.dummies.len();
    let nz2 = k * lags + nd;
    let mut z0 = Vec::new();
    let mut z1 = Vec::new();
    let mut z2 = Vec::new();
    for &(e, run) in &lay.runs {
        let y = |t: usize, j: usize| value(p, e, t, lay.endo[j]);
        let rows: Vec<usize> = (run.start + lags + 1..run.end()).collect();
        let n = T::count(rows.len());
        let mut b0: Vec<Vec<T>> = rows.iter().map(|&t| (0..k).map(|j| y(t, j) - y(t - 1, j)).collect()).collect();
        let mut b1: Vec<Vec<T>> = rows.iter().map(|&t| (0..k).map(|j| y(t - 1, j)).collect()).collect();
        let mut b2: Vec<Vec<T>> = rows
            .iter()
            .map(|&t| {
                let mut row = Vec::with_capacity(nz2);
                for j in 0..k {
                    for l in 1..=lags {
                        row.push(y(t - l, j) - y(t - l - 1, j));
                    }
                }
                for &d in &lay.dummies {
                    row.push(value(p, e, t, d));
                }
                row
            })
            .collect();
        for block in [&mut b0, &mut b1, &mut b2] {
            let w = block[0].len();
            for c in 0..w {
                let m = block.iter().fold(T::zero(), |a, row| a + row[c]) / n;
                for row in block.iter_mut() {
                    row[c] -= m;
                }
            }
        }
        z0.extend(b0);
        z1.extend(b1);
        z2.extend(b2);
    }
    let n = z0.len();
    if n < 30 * (k + nz2) {
        return Err(Error::InsufficientData(format!(
            "reduced-rank regression has {n} pooled observations, needs at least {}",
            30 * (k + nz2)
        )));
    }
    let m0 = DMatrix::from_fn(n, k, |i, j| z0[i][j]);
    let m1 = DMatrix::from_fn(n, k, |i, j| z1[i][j]);
    // dummies without within variation drop out of the concentration step
    let keep: Vec<usize> = (0..nz2)
        .filter(|&c| !is_degenerate(&z2.iter().map(|row| row[c]).collect::<Vec<_>>()))
        .collect();
    let m2 = DMatrix::from_fn(n, keep.len(), |i, j| z2[i][keep[j]]);
    let r0 = partial_out(&m0, &m2)?;
    let r1 = partial_out(&m1, &m2)?;
    let nt = T::count(n);
    let s00 = r0.transpose() * &r0 / nt;
    let s01 = r0.transpose() * &r1 / nt;
    let s11 = r1.transpose() * &r1 / nt;
    let chol11 = s11.clone().cholesky().ok_or(Error::CholeskyFailure)?;
    let s00_inv = s00.clone().cholesky().ok_or(Error::CholeskyFailure)?.inverse();
    let l = chol11.l();
    let l_inv = l
        .clone()
        .solve_lower_triangular(&DMatrix::identity(k, k))
        .ok_or(Error::CholeskyFailure)?;
    let m = &l_inv * s01.transpose() * &s00_inv * &s01 * l_inv.transpose();
    let m = (&m + m.transpose()) * T::lit(0.5);
    let eig = SymmetricEigen::new(m);
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let v = DMatrix::from_fn(k, r, |i, j| eig.eigenvectors[(i, idx[j])]);
    let raw = l_inv.transpose() * v;
    let head = raw.rows(0, r).into_owned();
    let head_inv = head.try_inverse().ok_or(Error::SingularRestriction)?;
    let beta = raw * head_inv;

    let mut entity_effects = BTreeMap::new();
    let mut weighted = DVector::zeros(r);
    let mut total = 0usize;
    for &(e, run) in &lay.runs {
        let mut s = DVector::zeros(r);
        for t in run.start..run.end() {
            let y = DVector::from_fn(k, |j, _| value(p, e, t, lay.endo[j]));
            s += beta.transpose() * y;
        }
        let c = -(s / T::count(run.len));
        weighted += &c * T::count(run.len);
        total += run.len;
        entity_effects.insert(p.entities()[e].clone(), c);
    }
    Ok(CointegratingVector {
        variables: spec.endogenous.clone(),
        beta,
        beta_se: None,
        constant: weighted / T::count(total),
        dummies: spec.exogenous_dummies.clone(),
        dummy_coef: DMatrix::zeros(nd, r),
        dummy_se: None,
        collinear: Vec::new(),
        entity_effects,
        fit: None,
        nobs: total,
        estimator: Estimator::ReducedRank,
    })
}

/// Adds the error-correction term(s) as `ect` (or `ect1..ectr`).
pub fn build_ect<T: Real>(p: &PanelDataset<T>, beta: &CointegratingVector<T>) -> Result<PanelDataset<T>> {
    let endo = beta
        .variables
        .iter()
        .map(|v| p.var_index(v))
        .collect::<Result<Vec<_>>>()?;
    let dummies = beta
        .dummies
        .iter()
        .map(|v| p.var_index(v))
        .collect::<Result<Vec<_>>>()?;
    let r = beta.rank();
    let mut out = p.clone();
    for rel in 0..r {
        let name = if r == 1 { "ect".to_string() } else { format!("ect{}", rel + 1) };
        out = out.with_variable(&name, |e, t| {
            let y: Option<Vec<T>> = endo.iter().map(|&v| p.value(e, t, v)).collect();
            let d: Option<Vec<T>> = dummies.iter().map(|&v| p.value(e, t, v)).collect();
            beta.ect(&p.entities()[e], &y?, &d?).map(|v| v[rel])
        });
    }
    Ok(out)
}

/// Pooled short-run equations given the long-run relation.
pub fn estimate_vecm<T: Real>(
    p: &PanelDataset<T>,
    spec: &ModelSpec,
    beta: &CointegratingVector<T>,
) -> Result<VecmEstimate<T>> {
    let lay = layout(p, spec)?;
    let k = spec.k();
    let r = spec.rank;
    let lags = spec.lag_order;
    if beta.rank() != r || beta.variables != spec.endogenous {
        return Err(Error::ShapeMismatch(
            "cointegrating vector does not match the model specification".into(),
        ));
    }
    let mut labels = Vec::new();
    for rel in 0..r {
        labels.push(format!("CointEq{}", rel + 1));
    }
    for v in &spec.endogenous {
        for l in 1..=lags {
            labels.push(format!("D({v}(-{l}))"));
        }
    }
    labels.push("C".to_string());
    labels.extend(spec.exogenous_dummies.iter().cloned());

    let mut rows = Vec::new();
    let mut data: Vec<Vec<T>> = Vec::new();
    let mut targets: Vec<Vec<T>> = Vec::new();
    for &(e, run) in &lay.runs {
        let name = &p.entities()[e];
        if !beta.entity_effects.contains_key(name) {
            continue;
        }
        let y = |t: usize, j: usize| value(p, e, t, lay.endo[j]);
        for t in run.start + lags + 1..run.end() {
            let ylag: Vec<T> = (0..k).map(|j| y(t - 1, j)).collect();
            let dlag: Vec<T> = lay.dummies.iter().map(|&d| value(p, e, t - 1, d)).collect();
            let ect = beta.ect(name, &ylag, &dlag).expect("entity effect present");
            let mut row: Vec<T> = ect.iter().copied().collect();
            for j in 0..k {
                for l in 1..=lags {
                    row.push(y(t - l, j) - y(t - l - 1, j));
                }
            }
            row.push(T::one());
            row.extend(lay.dummies.iter().map(|&d| value(p, e, t, d)));
            data.push(row);
            targets.push((0..k).map(|j| y(t, j) - y(t - 1, j)).collect());
            rows.push((e, t));
        }
    }
    let n = data.len();
    let mut keep: Vec<usize> = (0..labels.len() - lay.dummies.len()).collect();
    let mut collinear = Vec::new();
    let first_dummy = labels.len() - lay.dummies.len();
    for d in 0..lay.dummies.len() {
        let c = first_dummy + d;
        let col: Vec<T> = data.iter().map(|row| row[c]).collect();
        let first = col.first().copied().unwrap_or(T::zero());
        if col.iter().all(|&v| v == first) {
            log::warn!(
                "vecm: dummy `{}` is constant over the short-run sample; dropped as collinear",
                labels[c]
            );
            collinear.push(labels[c].clone());
        } else {
            keep.push(c);
        }
    }
    let design = DMatrix::from_fn(n, keep.len(), |i, j| data[i][keep[j]]);
    let regressors: Vec<String> = keep.iter().map(|&c| labels[c].clone()).collect();
    let mut equations = Vec::with_capacity(k);
    let mut residuals = DMatrix::zeros(n, k);
    for j in 0..k {
        let yj = DVector::from_fn(n, |i, _| targets[i][j]);
        let fit = ols(&yj, &design)?;
        residuals.set_column(j, &fit.residuals);
        equations.push(fit);
    }
    let df = n - design.ncols();
    let sigma = residuals.transpose() * &residuals / T::count(df);
    let sigma = (&sigma + sigma.transpose()) * T::lit(0.5);
    let mut dropped = lay.dropped;
    for &(e, _) in &lay.runs {
        if !beta.entity_effects.contains_key(&p.entities()[e]) {
            dropped.push(p.entities()[e].clone());
        }
    }
    Ok(VecmEstimate {
        spec: spec.clone(),
        long_run: beta.clone(),
        equations,
        regressors,
        design,
        residuals,
        sigma,
        nobs: n,
        rows,
        entities: p.entities().to_vec(),
        first_year: p.first_year(),
        collinear,
        dropped,
    })
}

/// Long-run relation followed by the short-run system.
pub fn estimate<T: Real>(p: &PanelDataset<T>, spec: &ModelSpec) -> Result<VecmEstimate<T>> {
    let beta = estimate_long_run(p, spec)?;
    estimate_vecm(p, spec, &beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::Deterministic;
    use crate::dynamics::simulate_with_shocks;
    use crate::synth::{generate, DgpKind, DgpSpec, DUMMY, VARIABLES};
    use crate::unit_root::llc_test;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn spec(lags: usize) -> ModelSpec {
        ModelSpec::new(&VARIABLES, &[DUMMY], lags)
    }

    /// Walk regressors and `co2 = 5 + 2 eu - gdp + 0 pop + s * e`, i.i.d. `e`.
    fn exact_relation(n: usize, t: usize, noise: f64, seed: u64) -> PanelDataset<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cells = vec![[0.0; 5]; n * t];
        for e in 0..n {
            let mut x = [0.0f64; 3];
            for s in 0..t {
                for v in x.iter_mut() {
                    *v += rng.sample::<f64, _>(StandardNormal);
                }
                let u: f64 = rng.sample(StandardNormal);
                let year = 2022 - (t - 1 - s) as i32;
                cells[e * t + s] = [
                    5.0 + 2.0 * x[0] - x[1] + noise * u,
                    x[0],
                    x[1],
                    x[2],
                    if year >= 2015 { 1.0 } else { 0.0 },
                ];
            }
        }
        let mut vars: Vec<String> = VARIABLES.iter().map(|s| s.to_string()).collect();
        vars.push(DUMMY.to_string());
        let entities = (0..n).map(|i| format!("E{i:03}")).collect();
        PanelDataset::from_fn(entities, 2022 - t as i32 + 1, t, vars, |e, s, v| Some(cells[e * t + s][v])).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(spec(2).validate().is_ok());
        assert!(spec(2).with_rank(4).validate().is_err());
        assert!(spec(2).with_rank(0).validate().is_err());
        assert!(spec(0).validate().is_err());
        assert!(spec(2).with_rank(2).validate().is_err());
        assert!(spec(2)
            .with_rank(2)
            .with_estimator(Estimator::ReducedRank)
            .validate()
            .is_ok());
        assert!(spec(2).with_ordering(&["co2", "gdp"]).validate().is_err());
    }

    #[test]
    fn levels_var_reductions() {
        let a = to_levels_var(&DMatrix::<f64>::zeros(4, 4), &[DMatrix::zeros(4, 4), DMatrix::zeros(4, 4)]);
        assert_eq!(a.len(), 3);
        assert_eq!(a[0], DMatrix::identity(4, 4));
        assert!(a[1].iter().chain(a[2].iter()).all(|&v| v == 0.0));

        let a = to_levels_var(&DMatrix::from_element(1, 1, -0.5), &[DMatrix::zeros(1, 1)]);
        assert_eq!(a[0][(0, 0)], 0.5);
        assert_eq!(a[1][(0, 0)], 0.0);
    }

    #[test]
    fn vecm_and_levels_var_paths_coincide() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let k = 4;
        let mut m = |s: f64| DMatrix::from_fn(k, k, |_, _| s * rng.sample::<f64, _>(StandardNormal));
        let alpha = DMatrix::from_column_slice(k, 1, &[-0.3, 0.1, 0.05, 0.0]);
        let beta = DMatrix::from_column_slice(k, 1, &[1.0, -0.8, 0.5, 0.2]);
        let pi = &alpha * beta.transpose();
        let gammas = vec![m(0.1), m(0.1)];
        let shocks: Vec<DVector<f64>> = (0..100).map(|_| m(1.0).column(0).into_owned()).collect();
        let init: Vec<DVector<f64>> = (0..3).map(|_| m(1.0).column(0).into_owned()).collect();

        let a = to_levels_var(&pi, &gammas);
        let var_path = simulate_with_shocks(&a, &init, &shocks, true).unwrap();

        let mut hist = init.clone();
        for u in &shocks {
            let t = hist.len();
            let mut dy = &pi * &hist[t - 1] + u;
            for (j, g) in gammas.iter().enumerate() {
                dy += g * (&hist[t - 1 - j] - &hist[t - 2 - j]);
            }
            let next = &hist[t - 1] + dy;
            hist.push(next);
        }
        for (x, y) in var_path.iter().zip(&hist[3..]) {
            assert!((x - y).amax() < 1e-10);
        }
    }

    #[test]
    fn long_run_recovers_known_relation() {
        let p = exact_relation(20, 60, 1.0, 3);
        let beta = estimate_long_run(&p, &spec(1)).unwrap();
        let rf = beta.regression_form(0);
        let se = rf.slope_se.unwrap();
        for (j, truth) in [2.0, -1.0, 0.0].into_iter().enumerate() {
            assert!(
                (rf.slopes[j] - truth).abs() < 3.0 * se[j],
                "slope {j}: {} (se {})",
                rf.slopes[j],
                se[j]
            );
        }
        assert_eq!(beta.beta[(0, 0)], 1.0);
        for j in 1..4 {
            assert_eq!(beta.beta[(j, 0)], -rf.slopes[j - 1]);
        }
    }

    #[test]
    fn ect_matches_first_stage_residuals() {
        let p = exact_relation(8, 40, 1.0, 5);
        let beta = estimate_long_run(&p, &spec(1)).unwrap();
        let with_ect = build_ect(&p, &beta).unwrap();
        let v = with_ect.var_index("ect").unwrap();
        let fit = beta.fit.as_ref().unwrap();
        let mut i = 0;
        for e in 0..p.n_entities() {
            for t in 0..p.n_years() {
                let ect = with_ect.value(e, t, v).unwrap();
                assert!((ect - fit.residuals[i]).abs() < 1e-10);
                i += 1;
            }
        }
        assert_eq!(i, fit.residuals.len());
    }

    #[test]
    fn exact_relation_gives_zero_ect() {
        let p = exact_relation(6, 40, 0.0, 9);
        let beta = estimate_long_run(&p, &spec(1)).unwrap();
        let with_ect = build_ect(&p, &beta).unwrap();
        let v = with_ect.var_index("ect").unwrap();
        for e in 0..p.n_entities() {
            for t in 0..p.n_years() {
                assert!(with_ect.value(e, t, v).unwrap().abs() < 1e-8);
            }
        }
        let rf = beta.regression_form(0);
        assert!((rf.slopes[0] - 2.0).abs() < 1e-10 && (rf.slopes[1] + 1.0).abs() < 1e-10);
        assert!((rf.constant - 5.0).abs() < 1e-8);
    }

    #[test]
    fn dummy_without_variation_is_dropped() {
        let mut dgp = DgpSpec::new(DgpKind::Cointegrated, 10, 40, 2);
        dgp.last_year = 2014;
        let p = generate(&dgp).unwrap();
        let est = estimate(&p, &spec(1)).unwrap();
        assert_eq!(est.long_run.collinear, vec![DUMMY.to_string()]);
        assert_eq!(est.long_run.dummy_coef[(0, 0)], 0.0);
        assert_eq!(est.collinear, vec![DUMMY.to_string()]);
        assert!(est.column(DUMMY).is_none());
    }

    #[test]
    fn cointegrated_ect_is_stationary() {
        let p = generate(&DgpSpec::new(DgpKind::Cointegrated, 20, 200, 4)).unwrap();
        let beta = estimate_long_run(&p, &spec(1)).unwrap();
        let with_ect = build_ect(&p, &beta).unwrap();
        let r = llc_test(&with_ect, "ect", false, Deterministic::Constant).unwrap();
        assert!(r.p_value < 0.01, "p = {}", r.p_value);
    }

    #[test]
    fn loadings_recovered_within_three_se() {
        let mut dgp = DgpSpec::new(DgpKind::Cointegrated, 20, 100, 21);
        dgp.vecm.alpha = [-0.2, 0.1, 0.0, 0.0];
        let est = estimate(&generate(&dgp).unwrap(), &spec(1)).unwrap();
        for (j, truth) in dgp.vecm.alpha.iter().enumerate() {
            let fit = &est.equations[j];
            let se = fit.std_errors()[0];
            assert!((fit.coefficients[0] - truth).abs() < 3.0 * se, "equation {j}");
        }
        let resid_means = est.residuals.row_mean();
        assert!(resid_means.amax() < 1e-8);
        assert!((&est.sigma - est.sigma.transpose()).amax() < 1e-14);
    }

    #[test]
    fn zero_loadings_are_insignificant() {
        // regressor equations carry no error correction; the first equation
        // is left out because a zero loading there means no cointegration,
        // and its t-ratio on a spurious residual is not normal
        let reps = 100;
        let mut accepted = [0usize; 4];
        for seed in 0..reps {
            let p = generate(&DgpSpec::new(DgpKind::Cointegrated, 20, 100, 100 + seed)).unwrap();
            let est = estimate(&p, &spec(1)).unwrap();
            for (j, fit) in est.equations.iter().enumerate() {
                if fit.t_ratios()[0].abs() < 1.96 {
                    accepted[j] += 1;
                }
            }
        }
        for a in &accepted[1..] {
            assert!(*a as f64 >= 0.9 * reps as f64, "{accepted:?}");
        }
    }

    #[test]
    fn two_step_leaves_k_minus_r_near_unit_roots() {
        let p = generate(&DgpSpec::new(DgpKind::Cointegrated, 20, 100, 8)).unwrap();
        for estimator in [Estimator::TwoStep, Estimator::ReducedRank] {
            let est = estimate(&p, &spec(2).with_estimator(estimator)).unwrap();
            let roots = crate::dynamics::companion_roots(&est.to_levels_var().a).unwrap();
            let m = roots.moduli();
            assert!(m[..3].iter().all(|&r| (r - 1.0).abs() < 0.05), "{m:?}");
            assert!(m[3] < 0.95);
            if estimator == Estimator::ReducedRank {
                assert!(m[..3].iter().all(|&r| (r - 1.0).abs() < 1e-8));
            }
        }
    }

    #[test]
    fn regenerating_from_estimates_is_a_fixed_point() {
        let p = generate(&DgpSpec::new(DgpKind::Cointegrated, 6, 60, 13)).unwrap();
        let sp = spec(2);
        let est = estimate(&p, &sp).unwrap();
        let k = sp.k();
        let alpha = est.alpha();
        let gammas: Vec<DMatrix<f64>> = (1..=2).map(|l| est.gamma(l)).collect();
        let c = est.column("C").unwrap();
        let d = est.column(DUMMY).unwrap();
        let dv = p.var_index(DUMMY).unwrap();
        let endo: Vec<usize> = VARIABLES.iter().map(|v| p.var_index(v).unwrap()).collect();

        // rebuild every path from its first three observations, the estimated
        // coefficients and the estimated residuals
        let mut paths: Vec<Vec<DVector<f64>>> = Vec::new();
        let mut row = 0;
        let mut max_gap = 0.0f64;
        for e in 0..p.n_entities() {
            let name = &p.entities()[e];
            let mut y: Vec<DVector<f64>> = (0..3)
                .map(|t| DVector::from_fn(k, |j, _| p.value(e, t, endo[j]).unwrap()))
                .collect();
            for t in 3..p.n_years() {
                assert_eq!(est.rows[row], (e, t));
                let dlag = [p.value(e, t - 1, dv).unwrap()];
                let ect = est.long_run.ect(name, y[t - 1].as_slice(), &dlag).unwrap();
                let mut dy = &alpha * ect + est.residuals.row(row).transpose();
                for (l, g) in gammas.iter().enumerate() {
                    dy += g * (&y[t - 1 - l] - &y[t - 2 - l]);
                }
                for j in 0..k {
                    let b = &est.equations[j].coefficients;
                    dy[j] += b[c] + b[d] * p.value(e, t, dv).unwrap();
                }
                let next = &y[t - 1] + dy;
                let truth = DVector::from_fn(k, |j, _| p.value(e, t, endo[j]).unwrap());
                max_gap = max_gap.max((&next - truth).amax());
                y.push(next);
                row += 1;
            }
            paths.push(y);
        }
        let mut rebuilt = p.clone();
        for j in 0..k {
            rebuilt = rebuilt.with_variable(VARIABLES[j], |e, t| Some(paths[e][t][j]));
        }
        assert!(max_gap < 1e-8, "reconstruction gap {max_gap}");
        let again = estimate(&rebuilt, &sp).unwrap();
        for (a, b) in est.equations.iter().zip(&again.equations) {
            assert!((&a.coefficients - &b.coefficients).amax() < 1e-8);
        }
        assert!((&est.long_run.beta - &again.long_run.beta).amax() < 1e-8);
    }

    #[test]
    fn f32_estimate_tracks_f64() {
        let p = generate(&DgpSpec::new(DgpKind::Cointegrated, 10, 60, 17)).unwrap();
        let a = estimate(&p, &spec(1)).unwrap();
        let b = estimate(&p.cast::<f32>(), &spec(1)).unwrap();
        for j in 1..4 {
            assert!((a.long_run.beta[(j, 0)] - b.long_run.beta[(j, 0)] as f64).abs() < 1e-2);
        }
    }
}
