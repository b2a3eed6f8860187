//! Post-estimation tests on a fitted panel VECM.

use crate::error::{Error, Result};
use crate::panel::PanelDataset;
use crate::regress::wald;
use crate::report::{ComponentRow, Distribution, Tail, TestReport};
use crate::scalar::Real;
use crate::vecm::{ModelSpec, VecmEstimate};
use nalgebra::{DMatrix, DVector};
use std::collections::HashMap;

/// Minimum number of entities for the slope homogeneity test.
pub const MIN_HOMOGENEITY_ENTITIES: usize = 5;

fn var_index<T: Real>(est: &VecmEstimate<T>, name: &str) -> Result<usize> {
    est.spec
        .endogenous
        .iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

/// Wald tests that the lagged differences of each other variable can be
/// excluded from the `target` equation, then all of them jointly.
pub fn granger_block_exogeneity<T: Real>(est: &VecmEstimate<T>, target: &str) -> Result<Vec<TestReport>> {
    let eq = var_index(est, target)?;
    let p = est.spec.lag_order;
    if p == 0 {
        return Err(Error::InvalidSpec("block exogeneity needs at least one lag".into()));
    }
    let fit = &est.equations[eq];
    let ncoef = fit.coefficients.len();
    let excluded: Vec<usize> = (0..est.spec.k()).filter(|&v| v != eq).collect();
    let restrict = |vars: &[usize]| -> Result<TestReport> {
        let cols: Vec<usize> = vars
            .iter()
            .flat_map(|&v| (1..=p).map(move |l| (v, l)))
            .map(|(v, l)| est.lag_column(v, l))
            .collect();
        let r = DMatrix::from_fn(cols.len(), ncoef, |i, j| if cols[i] == j { T::one() } else { T::zero() });
        wald(fit, &r, &DVector::zeros(cols.len()))
    };
    let mut out = Vec::with_capacity(excluded.len() + 1);
    for &v in &excluded {
        let mut rep = restrict(&[v])?;
        rep.name = format!("D({})", est.spec.endogenous[v]);
        out.push(rep);
    }
    let mut all = restrict(&excluded)?;
    all.name = "All".to_string();
    out.push(all);
    Ok(out)
}

/// Orthonormal basis for the span of `cols`, by twice-iterated modified
/// Gram-Schmidt. Columns whose remaining norm is negligible relative to
/// their original norm are skipped; the kept indices are returned.
fn orthonormal_basis<T: Real>(cols: &[DVector<T>]) -> (Vec<DVector<T>>, Vec<usize>) {
    let tol = T::default_epsilon().sqrt() * T::lit(10.0);
    let mut basis: Vec<DVector<T>> = Vec::new();
    let mut kept = Vec::new();
    for (i, c) in cols.iter().enumerate() {
        let norm0 = c.norm();
        if !(norm0 > T::zero()) {
            continue;
        }
        let mut v = c.clone();
        for _ in 0..2 {
            for q in &basis {
                let d = q.dot(&v);
                v.axpy(-d, q, T::one());
            }
        }
        let norm = v.norm();
        if norm > tol * norm0 {
            basis.push(v / norm);
            kept.push(i);
        }
    }
    (basis, kept)
}

/// Residuals of every column of `y` after projection on the basis.
fn residualize<T: Real>(y: &DMatrix<T>, basis: &[DVector<T>]) -> DMatrix<T> {
    let mut out = y.clone();
    for mut col in out.column_iter_mut() {
        for q in basis {
            let d = q.dot(&col);
            col.axpy(-d, q, T::one());
        }
    }
    out
}

fn log_det<T: Real>(m: &DMatrix<T>) -> Result<T> {
    let chol = m.clone().cholesky().ok_or(Error::CholeskyFailure)?;
    Ok((0..m.nrows()).map(|i| chol.l_dirty()[(i, i)].ln()).fold(T::zero(), |a, b| a + b) * T::lit(2.0))
}

fn columns<T: Real>(m: &DMatrix<T>) -> Vec<DVector<T>> {
    m.column_iter().map(|c| c.into_owned()).collect()
}

/// Residual serial correlation tests for lags `1..=max_lag`. Returns the
/// single-lag tests followed by the cumulative ones (`lags 1 to h`).
///
/// Each report's statistic is the Edgeworth-corrected likelihood ratio;
/// components carry the plain LM statistic and the Rao F transform.
pub fn serial_correlation_lm<T: Real>(est: &VecmEstimate<T>, max_lag: usize) -> Result<Vec<TestReport>> {
    if max_lag == 0 {
        return Err(Error::InvalidSpec("serial correlation test needs max_lag >= 1".into()));
    }
    let mut out = Vec::with_capacity(2 * max_lag);
    for h in 1..=max_lag {
        out.push(lm_test(est, &[h], format!("lag {h}"))?);
    }
    for h in 1..=max_lag {
        let lags: Vec<usize> = (1..=h).collect();
        out.push(lm_test(est, &lags, format!("lags 1 to {h}"))?);
    }
    Ok(out)
}

fn lm_test<T: Real>(est: &VecmEstimate<T>, lags: &[usize], name: String) -> Result<TestReport> {
    let u = &est.residuals;
    let (n, kk) = u.shape();
    let k_orig = est.design.ncols();
    let m = kk * lags.len();
    let d = k_orig + m;
    if n <= d + kk {
        return Err(Error::SeriesTooShort { needed: d + kk + 1, got: n });
    }
    // lagged residuals, zero before each entity's first row
    let index: HashMap<(usize, usize), usize> = est.rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut cols = columns(&est.design);
    for &h in lags {
        for j in 0..kk {
            cols.push(DVector::from_fn(n, |i, _| {
                let (e, t) = est.rows[i];
                t.checked_sub(h)
                    .and_then(|s| index.get(&(e, s)))
                    .map_or(T::zero(), |&r| u[(r, j)])
            }));
        }
    }
    let (basis, kept) = orthonormal_basis(&cols);
    if kept.len() < cols.len() {
        return Err(Error::RankDeficient { condition: f64::INFINITY });
    }
    let e = residualize(u, &basis);
    let nn = T::count(n);
    let s_r = u.transpose() * u / nn;
    let s_u = e.transpose() * &e / nn;
    let ld_r = log_det(&s_r)?;
    let ld_u = log_det(&s_u)?;
    let ratio = (ld_r - ld_u).as_f64();

    let inv_r = s_r.clone().cholesky().ok_or(Error::CholeskyFailure)?.inverse();
    let lm = (nn * (T::count(kk) - (inv_r * &s_u).trace())).as_f64().max(0.0);
    let df = (kk * m) as f64;
    let nf = n as f64;
    let lre = ((nf - d as f64 - 0.5) * ratio).max(0.0);

    let (kf, mf) = (kk as f64, m as f64);
    let s = if kf * kf + mf * mf - 5.0 > 0.0 {
        ((kf * kf * mf * mf - 4.0) / (kf * kf + mf * mf - 5.0)).sqrt()
    } else {
        1.0
    };
    let q = kf * mf / 2.0 - 1.0;
    let big_n = nf - d as f64 - (kf - mf + 1.0) / 2.0;
    let df2 = big_n * s - q;
    if !(df2 > 0.0) {
        return Err(Error::SeriesTooShort { needed: d + kk + 2, got: n });
    }
    let rao = ((ratio / s).exp() - 1.0) * df2 / df;
    let lm_rep = TestReport::chi_square("LM", lm, df)?;
    let rao_rep = TestReport::new("Rao F", rao, Distribution::F { df1: df, df2 })?;
    let rep = TestReport::chi_square(name, lre, df)?;
    let components = vec![
        ComponentRow {
            label: "LRE*".into(),
            values: vec![("stat".into(), lre), ("df".into(), df), ("prob".into(), rep.p_value)],
        },
        ComponentRow {
            label: "Rao F".into(),
            values: vec![
                ("stat".into(), rao),
                ("df1".into(), df),
                ("df2".into(), df2),
                ("prob".into(), rao_rep.p_value),
            ],
        },
        ComponentRow {
            label: "LM".into(),
            values: vec![("stat".into(), lm), ("df".into(), df), ("prob".into(), lm_rep.p_value)],
        },
    ];
    Ok(rep.with_components(components))
}

/// White test on the residual cross products against the regressors, their
/// squares and, with `cross_terms`, their pairwise products. Degenerate
/// auxiliary columns (e.g. the square of a dummy) are dropped.
pub fn heteroskedasticity_white<T: Real>(est: &VecmEstimate<T>, cross_terms: bool) -> Result<TestReport> {
    let u = &est.residuals;
    let (n, kk) = u.shape();
    let base: Vec<(String, DVector<T>)> = est
        .regressors
        .iter()
        .zip(est.design.column_iter())
        .filter(|(name, _)| name.as_str() != "C")
        .map(|(name, c)| (name.clone(), c.into_owned()))
        .collect();
    let mut cand: Vec<(String, DVector<T>)> = vec![("C".into(), DVector::from_element(n, T::one()))];
    cand.extend(base.iter().cloned());
    for (name, c) in &base {
        cand.push((format!("{name}^2"), c.component_mul(c)));
    }
    if cross_terms {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                cand.push((format!("{}*{}", base[i].0, base[j].0), base[i].1.component_mul(&base[j].1)));
            }
        }
    }
    let cols: Vec<DVector<T>> = cand.iter().map(|(_, c)| c.clone()).collect();
    let (basis, kept) = orthonormal_basis(&cols);
    if kept.first() != Some(&0) {
        return Err(Error::RankDeficient { condition: f64::INFINITY });
    }
    let mut k = 0;
    for (i, (name, _)) in cand.iter().enumerate() {
        if kept.get(k) == Some(&i) {
            k += 1;
        } else {
            log::info!("white test: auxiliary regressor `{name}` is collinear and dropped");
        }
    }
    let q = basis.len() - 1;
    if n <= basis.len() + 1 {
        return Err(Error::SeriesTooShort { needed: basis.len() + 2, got: n });
    }

    // components: squares first, then cross products below the diagonal
    let mut pairs: Vec<(usize, usize)> = (0..kk).map(|i| (i, i)).collect();
    for i in 1..kk {
        for j in 0..i {
            pairs.push((i, j));
        }
    }
    let mcomp = pairs.len();
    let y = DMatrix::from_fn(n, mcomp, |t, c| u[(t, pairs[c].0)] * u[(t, pairs[c].1)]);
    let resid = residualize(&y, &basis);
    let centered = residualize(&y, &basis[..1]);

    let nf = n as f64;
    let qf = q as f64;
    let mut components = Vec::with_capacity(mcomp);
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let sst = centered.column(c).norm_squared().as_f64();
        let ssr = resid.column(c).norm_squared().as_f64();
        let r2 = if sst > 0.0 { (1.0 - ssr / sst).clamp(0.0, 1.0) } else { 0.0 };
        let df2 = nf - qf - 1.0;
        let f = (r2 / qf) / ((1.0 - r2).max(f64::MIN_POSITIVE) / df2);
        let f_rep = TestReport::new("F", f, Distribution::F { df1: qf, df2 })?;
        let chi = TestReport::chi_square("chi2", nf * r2, qf)?;
        components.push(ComponentRow {
            label: format!("res{}*res{}", i + 1, j + 1),
            values: vec![
                ("r_squared".into(), r2),
                ("f".into(), f),
                ("f_prob".into(), f_rep.p_value),
                ("chi2".into(), nf * r2),
                ("chi2_prob".into(), chi.p_value),
                ("df".into(), qf),
            ],
        });
    }
    let e_e = resid.transpose() * &resid;
    let e0 = centered.transpose() * &centered;
    let inv0 = e0.clone().cholesky().ok_or(Error::CholeskyFailure)?.inverse();
    let joint = (T::count(n) * (T::count(mcomp) - (e_e * inv0).trace())).as_f64().max(0.0);
    let name = if cross_terms {
        "Joint (includes cross terms)"
    } else {
        "Joint (no cross terms)"
    };
    Ok(TestReport::chi_square(name, joint, (mcomp * q) as f64)?.with_components(components))
}

/// Dispersion of entity slopes around the weighted pooled estimate of the
/// regression of the first endogenous variable on the others, with entity
/// intercepts. Both the plain and the small-sample adjusted standardizations
/// are returned as components; the report's statistic is the adjusted one.
pub fn slope_homogeneity<T: Real>(p: &PanelDataset<T>, spec: &ModelSpec, tail: Tail) -> Result<TestReport> {
    let vars: Vec<usize> = spec
        .endogenous
        .iter()
        .map(|v| p.var_index(v))
        .collect::<Result<_>>()?;
    if vars.len() < 2 {
        return Err(Error::InvalidSpec("slope homogeneity needs at least one regressor".into()));
    }
    let k = vars.len() - 1;
    // demeaned (X, y) per entity
    let mut units: Vec<(DMatrix<T>, DVector<T>)> = Vec::new();
    for e in 0..p.n_entities() {
        let Some(run) = p.observed_run(e, &vars) else { continue };
        if run.len <= k + 2 {
            continue;
        }
        let cols: Vec<Vec<T>> = vars.iter().map(|&v| p.run_values(e, v, run)).collect();
        let demean = |c: &[T]| -> Vec<T> {
            let m = crate::scalar::mean(c);
            c.iter().map(|&x| x - m).collect()
        };
        let y = DVector::from_vec(demean(&cols[0]));
        let xs: Vec<Vec<T>> = cols[1..].iter().map(|c| demean(c)).collect();
        let x = DMatrix::from_fn(run.len, k, |t, j| xs[j][t]);
        units.push((x, y));
    }
    let n = units.len();
    if n < MIN_HOMOGENEITY_ENTITIES {
        return Err(Error::InsufficientEntities {
            needed: MIN_HOMOGENEITY_ENTITIES,
            got: n,
        });
    }
    let solve = |a: DMatrix<T>, b: DVector<T>| -> Result<DVector<T>> {
        a.cholesky()
            .map(|c| c.solve(&b))
            .ok_or(Error::RankDeficient { condition: f64::INFINITY })
    };
    let xx: Vec<DMatrix<T>> = units.iter().map(|(x, _)| x.transpose() * x).collect();
    let xy: Vec<DVector<T>> = units.iter().map(|(x, y)| x.transpose() * y).collect();

    // pooled fixed effects, then entity variances around it
    let sum_xx = xx.iter().fold(DMatrix::zeros(k, k), |a, b| a + b);
    let sum_xy = xy.iter().fold(DVector::zeros(k), |a, b| a + b);
    let b_fe = solve(sum_xx, sum_xy)?;
    let sig2: Vec<T> = units
        .iter()
        .map(|(x, y)| {
            let r = y - x * &b_fe;
            r.norm_squared() / T::count(y.len() - 1)
        })
        .collect();
    if sig2.iter().any(|s| !(*s > T::zero())) {
        return Err(Error::InsufficientData("an entity has a perfect fit".into()));
    }
    let mut w_xx = DMatrix::zeros(k, k);
    let mut w_xy = DVector::zeros(k);
    for i in 0..n {
        w_xx += &xx[i] / sig2[i];
        w_xy += &xy[i] / sig2[i];
    }
    let b_wfe = solve(w_xx, w_xy)?;
    let mut s = T::zero();
    for i in 0..n {
        let b_i = solve(xx[i].clone(), xy[i].clone())?;
        let d = b_i - &b_wfe;
        s += (d.transpose() * &xx[i] * &d)[(0, 0)] / sig2[i];
    }
    let s = s.as_f64();
    let t_min = units.iter().map(|(_, y)| y.len()).min().unwrap_or(0) as f64;
    let (nf, kf) = (n as f64, k as f64);
    let centered = nf.sqrt() * (s / nf - kf);
    let delta = centered / (2.0 * kf).sqrt();
    let delta_adj = centered / (2.0 * kf * (t_min - kf - 1.0) / (t_min + 1.0)).sqrt();
    let dist = Distribution::Normal { tail };
    let plain = TestReport::new("Delta", delta, dist)?;
    let rep = TestReport::new("Slope homogeneity", delta_adj, dist)?;
    let components = vec![
        ComponentRow {
            label: "Delta".into(),
            values: vec![("stat".into(), delta), ("prob".into(), plain.p_value)],
        },
        ComponentRow {
            label: "Delta adjusted".into(),
            values: vec![("stat".into(), delta_adj), ("prob".into(), rep.p_value)],
        },
    ];
    Ok(rep.with_components(components))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regress::ols;
    use crate::synth::{generate, DgpKind, DgpSpec, DUMMY, VARIABLES};
    use crate::vecm::estimate;

    fn spec(lags: usize) -> ModelSpec {
        ModelSpec::new(&VARIABLES, &[DUMMY], lags)
    }

    fn fitted(n: usize, t: usize, lags: usize, seed: u64) -> (PanelDataset<f64>, VecmEstimate<f64>) {
        let p = generate(&DgpSpec::new(DgpKind::Cointegrated, n, t, seed)).unwrap();
        let est = estimate(&p, &spec(lags)).unwrap();
        (p, est)
    }

    /// Renames entities so that their sorted order is reversed.
    fn reversed(p: &PanelDataset<f64>) -> PanelDataset<f64> {
        let n = p.n_entities();
        let names: Vec<String> = (0..n).map(|e| format!("R{:03}", n - e)).collect();
        let vars = p.variables().to_vec();
        PanelDataset::from_fn(names, p.first_year(), p.n_years(), vars, |e, t, v| p.value(e, t, v)).unwrap()
    }

    fn rescaled(p: &PanelDataset<f64>, factor: f64) -> PanelDataset<f64> {
        VARIABLES.iter().fold(p.clone(), |acc, v| acc.scale(v, factor).unwrap())
    }

    fn all_statistics(p: &PanelDataset<f64>, est: &VecmEstimate<f64>) -> Vec<f64> {
        let mut out: Vec<f64> = granger_block_exogeneity(est, "co2")
            .unwrap()
            .iter()
            .map(|r| r.statistic)
            .collect();
        for r in serial_correlation_lm(est, 2).unwrap() {
            out.push(r.statistic);
            out.push(r.component("LM").unwrap().value("stat").unwrap());
        }
        let white = heteroskedasticity_white(est, true).unwrap();
        out.push(white.statistic);
        out.extend(white.components.iter().map(|c| c.value("chi2").unwrap()));
        out.push(slope_homogeneity(p, &spec(2), Tail::Right).unwrap().statistic);
        out
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol * x.abs().max(1.0), "{x} vs {y}");
        }
    }

    #[test]
    fn granger_layout() {
        let (_, est) = fitted(10, 50, 2, 1);
        let reps = granger_block_exogeneity(&est, "co2").unwrap();
        let names: Vec<&str> = reps.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["D(energy_use)", "D(gdp)", "D(population)", "All"]);
        for r in &reps[..3] {
            assert_eq!(r.distribution, Distribution::ChiSquare { df: 2.0 });
        }
        assert_eq!(reps[3].distribution, Distribution::ChiSquare { df: 6.0 });
        assert!(matches!(
            granger_block_exogeneity(&est, "nope"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn granger_single_block_is_squared_t_with_one_lag() {
        let (_, est) = fitted(10, 50, 1, 2);
        let reps = granger_block_exogeneity(&est, "gdp").unwrap();
        let fit = &est.equations[2];
        let t = fit.t_ratios()[est.lag_column(0, 1)];
        assert!((reps[0].statistic - t * t).abs() < 1e-10 * t * t);
    }

    #[test]
    fn lm_cumulative_first_row_equals_single() {
        let (_, est) = fitted(10, 50, 2, 3);
        let reps = serial_correlation_lm(&est, 3).unwrap();
        assert_eq!(reps.len(), 6);
        assert_eq!(reps[0].name, "lag 1");
        assert_eq!(reps[3].name, "lags 1 to 1");
        assert_eq!(reps[0].statistic, reps[3].statistic);
        assert_eq!(reps[0].components, reps[3].components);
        assert_eq!(reps[0].distribution, Distribution::ChiSquare { df: 16.0 });
        assert_eq!(reps[5].distribution, Distribution::ChiSquare { df: 48.0 });
        let rao = reps[5].component("Rao F").unwrap();
        assert_eq!(rao.value("df1"), Some(48.0));
        assert!(rao.value("df2").unwrap() > 48.0);
    }

    #[test]
    fn lm_reduces_to_n_r_squared_for_one_equation() {
        let (_, mut est) = fitted(10, 50, 1, 4);
        let u = est.residuals.column(0).into_owned();
        est.residuals = DMatrix::from_column_slice(u.len(), 1, u.as_slice());
        let rep = serial_correlation_lm(&est, 1).unwrap().remove(0);
        let lm = rep.component("LM").unwrap().value("stat").unwrap();

        let index: HashMap<(usize, usize), usize> = est.rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let n = u.len();
        let k = est.design.ncols();
        let x = DMatrix::from_fn(n, k + 1, |i, j| {
            if j < k {
                est.design[(i, j)]
            } else {
                let (e, t) = est.rows[i];
                index.get(&(e, t - 1)).map_or(0.0, |&r| u[r])
            }
        });
        let fit = ols(&u, &x).unwrap();
        assert!((lm - n as f64 * fit.r_squared).abs() < 1e-10 * lm.max(1.0), "{lm} vs {}", n as f64 * fit.r_squared);
    }

    #[test]
    fn white_has_ten_components() {
        let (_, est) = fitted(10, 60, 2, 5);
        let rep = heteroskedasticity_white(&est, true).unwrap();
        let labels: Vec<&str> = rep.components.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(
            labels,
            [
                "res1*res1", "res2*res2", "res3*res3", "res4*res4", "res2*res1", "res3*res1", "res3*res2",
                "res4*res1", "res4*res2", "res4*res3"
            ]
        );
        // regressors: ect, 8 lagged differences, dummy; the dummy's square equals the dummy
        let q = rep.components[0].value("df").unwrap();
        let base = est.regressors.len() - 1;
        assert_eq!(q as usize, base + (base - 1) + base * (base - 1) / 2);
        assert_eq!(rep.distribution, Distribution::ChiSquare { df: 10.0 * q });
        for c in &rep.components {
            let r2 = c.value("r_squared").unwrap();
            assert!((0.0..=1.0).contains(&r2));
        }
        let plain = heteroskedasticity_white(&est, false).unwrap();
        assert_eq!(plain.components[0].value("df"), Some((2 * base - 1) as f64));
    }

    #[test]
    fn invariant_to_entity_order() {
        let (p, est) = fitted(12, 50, 2, 6);
        let q = reversed(&p);
        let other = estimate(&q, &spec(2)).unwrap();
        assert_close(&all_statistics(&p, &est), &all_statistics(&q, &other), 1e-8);
    }

    #[test]
    fn invariant_to_joint_rescaling() {
        let (p, est) = fitted(12, 50, 2, 7);
        let q = rescaled(&p, 25.0);
        let other = estimate(&q, &spec(2)).unwrap();
        assert_close(&all_statistics(&p, &est), &all_statistics(&q, &other), 1e-8);
    }

    #[test]
    fn slope_homogeneity_layout_and_errors() {
        let p = generate(&DgpSpec::new(DgpKind::HeterogeneousSlopes, 4, 30, 8)).unwrap();
        assert!(matches!(
            slope_homogeneity(&p, &spec(1), Tail::Right),
            Err(Error::InsufficientEntities { needed: 5, got: 4 })
        ));
        let p = generate(&DgpSpec::new(DgpKind::HeterogeneousSlopes, 20, 30, 8)).unwrap();
        let rep = slope_homogeneity(&p, &spec(1), Tail::Right).unwrap();
        let delta = rep.component("Delta").unwrap().value("stat").unwrap();
        let adj = rep.component("Delta adjusted").unwrap().value("stat").unwrap();
        assert_eq!(rep.statistic, adj);
        // adjusted = plain * sqrt((T + 1) / (T - k - 1)) with T = 30, k = 3
        assert!((adj - delta * (31.0f64 / 26.0).sqrt()).abs() < 1e-12 * adj.abs().max(1.0));
    }

    #[test]
    fn slope_homogeneity_size_and_power() {
        let reps = 100;
        let (mut accept, mut reject) = (0, 0);
        for seed in 0..reps {
            let mut dgp = DgpSpec::new(DgpKind::HeterogeneousSlopes, 20, 100, 300 + seed);
            let p = generate(&dgp).unwrap();
            if !slope_homogeneity(&p, &spec(1), Tail::Right).unwrap().reject {
                accept += 1;
            }
            dgp.slopes.multiplier = 2.0;
            let p = generate(&dgp).unwrap();
            if slope_homogeneity(&p, &spec(1), Tail::Right).unwrap().reject {
                reject += 1;
            }
        }
        assert!(accept >= 85, "accepted {accept}");
        assert!(reject >= 90, "rejected {reject}");
    }

    #[test]
    fn lm_detects_planted_autocorrelation() {
        let reps = 40;
        let mut hits = 0;
        for seed in 0..reps {
            let (_, mut est) = fitted(20, 100, 1, 500 + seed);
            // AR(0.5) residuals within each entity
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
            let mut prev = DVector::<f64>::zeros(4);
            let mut last_entity = usize::MAX;
            for i in 0..est.nobs {
                let e = est.rows[i].0;
                if e != last_entity {
                    prev.fill(0.0);
                    last_entity = e;
                }
                let z = DVector::from_fn(4, |_, _| rand::Rng::sample::<f64, _>(&mut rng, rand_distr::StandardNormal));
                prev = &prev * 0.5 + z;
                est.residuals.set_row(i, &prev.transpose());
            }
            if serial_correlation_lm(&est, 1).unwrap()[0].reject {
                hits += 1;
            }
        }
        assert!(hits as f64 >= 0.95 * reps as f64, "{hits}/{reps}");
    }
}
