//! Least squares, Wald restrictions and long-run variance.

use crate::error::{Error, Result};
use crate::report::TestReport;
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector, SVD};

/// Ordinary least squares fit.
#[derive(Debug, Clone, PartialEq)]
pub struct OlsFit<T: Real> {
    pub coefficients: DVector<T>,
    /// `sigma2 * (X'X)^-1`
    pub covariance: DMatrix<T>,
    pub residuals: DVector<T>,
    pub sigma2: T,
    pub nobs: usize,
    pub df_resid: usize,
    pub r_squared: T,
}

impl<T: Real> OlsFit<T> {
    pub fn std_errors(&self) -> DVector<T> {
        DVector::from_iterator(
            self.coefficients.len(),
            (0..self.coefficients.len()).map(|i| self.covariance[(i, i)].max(T::zero()).sqrt()),
        )
    }

    pub fn t_ratios(&self) -> DVector<T> {
        let se = self.std_errors();
        self.coefficients.zip_map(&se, |b, s| b / s)
    }

    pub fn ssr(&self) -> T {
        self.residuals.norm_squared()
    }

    /// Rescales the covariance to a different residual degrees of freedom,
    /// e.g. after absorbing fixed effects by demeaning.
    pub fn with_df_resid(mut self, df_resid: usize) -> Result<Self> {
        if df_resid == 0 {
            return Err(Error::InsufficientData("no residual degrees of freedom".into()));
        }
        let factor = T::count(self.df_resid) / T::count(df_resid);
        self.covariance *= factor;
        self.sigma2 *= factor;
        self.df_resid = df_resid;
        Ok(self)
    }
}

/// Condition number of `x` after scaling every column to unit length.
/// Returns infinity when a column is identically zero.
pub fn equilibrated_condition<T: Real>(x: &DMatrix<T>) -> T {
    let mut scaled = x.clone();
    for mut col in scaled.column_iter_mut() {
        let n = col.norm();
        if n <= T::zero() {
            return T::lit(f64::INFINITY);
        }
        col /= n;
    }
    let sv = SVD::new(scaled, false, false).singular_values;
    let max = sv.max();
    let min = sv.min();
    if min <= T::zero() {
        T::lit(f64::INFINITY)
    } else {
        max / min
    }
}

/// QR-based least squares of `y` on the columns of `x`.
pub fn ols<T: Real>(y: &DVector<T>, x: &DMatrix<T>) -> Result<OlsFit<T>> {
    let (n, k) = x.shape();
    if y.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "response has {} rows, design has {n}",
            y.len()
        )));
    }
    if n <= k {
        return Err(Error::ShapeMismatch(format!(
            "design with {n} rows cannot identify {k} coefficients"
        )));
    }
    let qr = x.clone().qr();
    let r = qr.r();
    // cond(X D) equals cond(R D), which is cheaper to decompose
    let condition = equilibrated_condition(&r);
    if !(condition <= T::max_condition()) {
        return Err(Error::RankDeficient {
            condition: condition.as_f64(),
        });
    }
    let mut qty = y.clone();
    qr.q_tr_mul(&mut qty);
    let head = qty.rows(0, k).into_owned();
    let coefficients = r
        .solve_upper_triangular(&head)
        .ok_or(Error::RankDeficient {
            condition: f64::INFINITY,
        })?;
    let residuals = y - x * &coefficients;
    let df_resid = n - k;
    let ssr = residuals.norm_squared();
    let sigma2 = ssr / T::count(df_resid);
    let r_inv = r
        .solve_upper_triangular(&DMatrix::identity(k, k))
        .ok_or(Error::RankDeficient {
            condition: f64::INFINITY,
        })?;
    let mut covariance = &r_inv * r_inv.transpose() * sigma2;
    covariance = (&covariance + covariance.transpose()) * T::lit(0.5);

    let tss = if has_constant_column(x) {
        let m = y.mean();
        y.iter().map(|&v| (v - m) * (v - m)).fold(T::zero(), |a, b| a + b)
    } else {
        y.norm_squared()
    };
    let r_squared = if tss > T::zero() {
        (T::one() - ssr / tss).max(T::zero()).min(T::one())
    } else {
        T::zero()
    };
    Ok(OlsFit {
        coefficients,
        covariance,
        residuals,
        sigma2,
        nobs: n,
        df_resid,
        r_squared,
    })
}

fn has_constant_column<T: Real>(x: &DMatrix<T>) -> bool {
    x.column_iter().any(|c| {
        let first = c[0];
        first != T::zero() && c.iter().all(|&v| v == first)
    })
}

/// Wald test of `R b = r` using the fit's coefficient covariance.
pub fn wald<T: Real>(fit: &OlsFit<T>, restrictions: &DMatrix<T>, values: &DVector<T>) -> Result<TestReport> {
    let q = restrictions.nrows();
    if restrictions.ncols() != fit.coefficients.len() || values.len() != q || q == 0 {
        return Err(Error::ShapeMismatch(format!(
            "restriction matrix {}x{} and vector of length {} do not fit {} coefficients",
            q,
            restrictions.ncols(),
            values.len(),
            fit.coefficients.len()
        )));
    }
    let diff = restrictions * &fit.coefficients - values;
    let v = restrictions * &fit.covariance * restrictions.transpose();
    let v = (&v + v.transpose()) * T::lit(0.5);
    let chol = v.clone().cholesky().ok_or(Error::SingularRestriction)?;
    // Cholesky of a rank-deficient matrix can succeed on rounding noise.
    let scale = (0..q).map(|i| v[(i, i)]).fold(T::zero(), |a, b| a.max(b));
    let weakest = (0..q).map(|i| chol.l_dirty()[(i, i)].powi(2)).fold(scale, |a, b| a.min(b));
    if !(weakest > scale * T::lit(1e-10)) {
        return Err(Error::SingularRestriction);
    }
    let solved = chol.solve(&diff);
    let stat = diff.dot(&solved).max(T::zero());
    TestReport::chi_square("Wald", stat.as_f64(), q as f64)
}

/// Bandwidth choice for kernel long-run variance estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bandwidth {
    Fixed(usize),
    /// `floor(4 (T/100)^(2/9))`
    Auto,
}

impl Bandwidth {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Bandwidth::Fixed(l) => l,
            Bandwidth::Auto => newey_west_bandwidth(n),
        }
    }
}

pub fn newey_west_bandwidth(n: usize) -> usize {
    (4.0 * (n as f64 / 100.0).powf(2.0 / 9.0)).floor() as usize
}

/// Sample autocovariances `gamma_0..=gamma_max` with `1/n` normalization.
pub fn autocovariances<T: Real>(u: &[T], max_lag: usize, demean: bool) -> Vec<T> {
    let n = u.len();
    let m = if demean { crate::scalar::mean(u) } else { T::zero() };
    let centered: Vec<T> = u.iter().map(|&x| x - m).collect();
    (0..=max_lag.min(n.saturating_sub(1)))
        .map(|j| {
            let s = (j..n).fold(T::zero(), |acc, t| acc + centered[t] * centered[t - j]);
            s / T::count(n)
        })
        .collect()
}

/// Bartlett-kernel (Newey-West) long-run variance of the demeaned series:
/// `gamma_0 + 2 sum_{j=1}^{L} (1 - j/(L+1)) gamma_j`, floored at a small
/// positive value.
pub fn long_run_variance<T: Real>(u: &[T], bandwidth: Bandwidth) -> Result<T> {
    let lags = bandwidth.resolve(u.len());
    bartlett_lrv(u, lags, true)
}

pub(crate) fn bartlett_lrv<T: Real>(u: &[T], lags: usize, demean: bool) -> Result<T> {
    if u.len() <= lags || u.is_empty() {
        return Err(Error::SeriesTooShort {
            needed: lags + 1,
            got: u.len(),
        });
    }
    let gamma = autocovariances(u, lags, demean);
    let l1 = T::count(lags + 1);
    let mut s = gamma[0];
    for (j, g) in gamma.iter().enumerate().skip(1) {
        s += T::lit(2.0) * (T::one() - T::count(j) / l1) * *g;
    }
    Ok(s.max(T::variance_floor()))
}
