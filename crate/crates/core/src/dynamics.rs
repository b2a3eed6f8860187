//! Companion roots, orthogonalized impulse responses, variance
//! decompositions and a seeded simulator for levels VARs.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::vecm::VarSystem;
use nalgebra::{Complex, DMatrix, DVector, Schur};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Ridge added to a covariance matrix whose Cholesky factorization fails.
pub const CHOLESKY_RIDGE: f64 = 1e-10;

/// Largest root modulus the simulator accepts without the explosive flag.
pub const EXPLOSIVE_MODULUS: f64 = 1.01;

#[derive(Debug, Clone, PartialEq)]
pub struct CompanionForm<T: Real> {
    pub matrix: DMatrix<T>,
    /// Eigenvalues sorted by modulus, largest first.
    pub roots: Vec<Complex<f64>>,
}

impl<T: Real> CompanionForm<T> {
    pub fn moduli(&self) -> Vec<f64> {
        self.roots.iter().map(|z| z.norm()).collect()
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.first().map_or(0.0, |z| z.norm())
    }

    /// Roots whose modulus is within `tol` of one.
    pub fn unit_roots(&self, tol: f64) -> usize {
        self.roots.iter().filter(|z| (z.norm() - 1.0).abs() <= tol).count()
    }

    pub fn is_stable(&self) -> bool {
        self.roots.iter().all(|z| z.norm() < 1.0)
    }
}

fn check_blocks<T: Real>(a: &[DMatrix<T>]) -> Result<usize> {
    let k = a
        .first()
        .map(|m| m.nrows())
        .ok_or_else(|| Error::ShapeMismatch("VAR needs at least one coefficient matrix".into()))?;
    if k == 0 || a.iter().any(|m| m.nrows() != k || m.ncols() != k) {
        return Err(Error::ShapeMismatch(
            "VAR coefficient matrices must be square and of equal size".into(),
        ));
    }
    Ok(k)
}

/// Stacked first-order form of `y_t = sum_j A_j y_{t-j}` and its eigenvalues.
pub fn companion_roots<T: Real>(a: &[DMatrix<T>]) -> Result<CompanionForm<T>> {
    let k = check_blocks(a)?;
    let p = a.len();
    let dim = k * p;
    let mut m = DMatrix::zeros(dim, dim);
    for (j, aj) in a.iter().enumerate() {
        m.view_mut((0, j * k), (k, k)).copy_from(aj);
    }
    for i in k..dim {
        m[(i, i - k)] = T::one();
    }
    let mut roots = eigenvalues(&m.map(|v| v.as_f64()))?;
    roots.sort_by(|x, y| {
        y.norm()
            .total_cmp(&x.norm())
            .then(y.re.total_cmp(&x.re))
            .then(y.im.total_cmp(&x.im))
    });
    Ok(CompanionForm { matrix: m, roots })
}

/// Eigenvalues by real Schur decomposition. The shifted QR iteration can
/// cycle on matrices with clustered unit roots; when it stalls, the matrix
/// is rotated by a fixed random orthogonal similarity and retried.
fn eigenvalues(m: &DMatrix<f64>) -> Result<Vec<Complex<f64>>> {
    let n = m.nrows();
    let max_iter = 200 * n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut work = m.clone();
    for _ in 0..8 {
        if let Some(schur) = Schur::try_new(work.clone(), f64::EPSILON, max_iter) {
            return Ok(schur.complex_eigenvalues().iter().copied().collect());
        }
        let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
        let q = g.qr().q();
        work = q.transpose() * m * &q;
    }
    Err(Error::EigenFailure)
}

/// Moving-average coefficients `Psi_0 .. Psi_h`.
pub fn ma_coefficients<T: Real>(a: &[DMatrix<T>], horizon: usize) -> Result<Vec<DMatrix<T>>> {
    let k = check_blocks(a)?;
    let mut psi = vec![DMatrix::identity(k, k)];
    for h in 1..=horizon {
        let mut next = DMatrix::zeros(k, k);
        for j in 1..=h.min(a.len()) {
            next += &a[j - 1] * &psi[h - j];
        }
        psi.push(next);
    }
    Ok(psi)
}

fn permutation(variables: &[String], ordering: &[String]) -> Result<Vec<usize>> {
    if ordering.len() != variables.len() {
        return Err(Error::InvalidSpec("ordering must list every variable once".into()));
    }
    let perm = ordering
        .iter()
        .map(|o| {
            variables
                .iter()
                .position(|v| v == o)
                .ok_or_else(|| Error::UnknownVariable(o.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen = perm.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != perm.len() {
        return Err(Error::InvalidSpec("ordering repeats a variable".into()));
    }
    Ok(perm)
}

/// Lower Cholesky factor, retried once with a small ridge on failure.
pub fn cholesky_with_ridge<T: Real>(sigma: &DMatrix<T>) -> Result<DMatrix<T>> {
    let sym = (sigma + sigma.transpose()) * T::lit(0.5);
    if let Some(c) = sym.clone().cholesky() {
        return Ok(c.l());
    }
    log::warn!("residual covariance is not positive definite; adding a ridge of {CHOLESKY_RIDGE:e}");
    let k = sym.nrows();
    let scale = (0..k).fold(T::zero(), |m, i| m.max(sym[(i, i)].abs())).max(T::one());
    let ridged = sym + DMatrix::identity(k, k) * (T::lit(CHOLESKY_RIDGE) * scale);
    ridged.cholesky().map(|c| c.l()).ok_or(Error::CholeskyFailure)
}

/// Impact matrix of one-standard-deviation orthogonalized shocks in the
/// original variable order. Column `j` is the shock of `ordering[j]`.
pub fn impact_matrix<T: Real>(sigma: &DMatrix<T>, variables: &[String], ordering: &[String]) -> Result<DMatrix<T>> {
    let perm = permutation(variables, ordering)?;
    let k = perm.len();
    if sigma.nrows() != k || sigma.ncols() != k {
        return Err(Error::ShapeMismatch("covariance does not match the variable list".into()));
    }
    let reordered = DMatrix::from_fn(k, k, |i, j| sigma[(perm[i], perm[j])]);
    let chol = cholesky_with_ridge(&reordered)?;
    let mut b = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            b[(perm[i], j)] = chol[(i, j)];
        }
    }
    Ok(b)
}

/// Orthogonalized impulse responses to one-standard-deviation shocks.
#[derive(Debug, Clone, PartialEq)]
pub struct IrfResult<T: Real> {
    pub variables: Vec<String>,
    /// Shock labels in Cholesky order.
    pub ordering: Vec<String>,
    /// `responses[h][(response, shock)]` for `h = 0..=H`.
    pub responses: Vec<DMatrix<T>>,
    /// Signed shock sizes in multiples of one standard deviation.
    pub shock_scales: Vec<f64>,
}

impl<T: Real> IrfResult<T> {
    pub fn horizon(&self) -> usize {
        self.responses.len() - 1
    }

    /// Response of `response` to a shock of size `scale` standard deviations.
    pub fn scaled(&self, h: usize, response: usize, shock: usize, scale: f64) -> T {
        self.responses[h][(response, shock)] * T::lit(scale)
    }
}

pub const DEFAULT_SHOCK_SCALES: [f64; 6] = [0.5, 1.0, 2.0, -0.5, -1.0, -2.0];

pub fn irf<T: Real>(system: &VarSystem<T>, ordering: &[String], horizon: usize, scales: &[f64]) -> Result<IrfResult<T>> {
    let psi = ma_coefficients(&system.a, horizon)?;
    let b = impact_matrix(&system.sigma, &system.variables, ordering)?;
    Ok(IrfResult {
        variables: system.variables.clone(),
        ordering: ordering.to_vec(),
        responses: psi.iter().map(|p| p * &b).collect(),
        shock_scales: scales.to_vec(),
    })
}

/// Forecast-error variance decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct FevdResult<T: Real> {
    pub variables: Vec<String>,
    pub ordering: Vec<String>,
    /// `shares[h - 1][(response, shock)]` in percent, `h = 1..=H`.
    pub shares: Vec<DMatrix<T>>,
    /// `std_errors[h - 1][response]`: square root of the h-step forecast-error variance.
    pub std_errors: Vec<DVector<T>>,
}

pub fn fevd<T: Real>(system: &VarSystem<T>, ordering: &[String], horizon: usize) -> Result<FevdResult<T>> {
    if horizon == 0 {
        return Err(Error::InvalidSpec("variance decomposition horizon must be at least 1".into()));
    }
    let psi = ma_coefficients(&system.a, horizon.saturating_sub(1))?;
    let b = impact_matrix(&system.sigma, &system.variables, ordering)?;
    let k = system.k();
    let mut acc = DMatrix::<T>::zeros(k, k);
    let mut shares = Vec::with_capacity(horizon);
    let mut std_errors = Vec::with_capacity(horizon);
    let hundred = T::lit(100.0);
    for p in &psi {
        let theta = p * &b;
        acc += theta.component_mul(&theta);
        let totals = DVector::from_fn(k, |i, _| acc.row(i).sum());
        shares.push(DMatrix::from_fn(k, k, |i, j| {
            if totals[i] > T::zero() {
                acc[(i, j)] / totals[i] * hundred
            } else if i == j {
                hundred
            } else {
                T::zero()
            }
        }));
        std_errors.push(totals.map(|v| v.sqrt()));
    }
    Ok(FevdResult {
        variables: system.variables.clone(),
        ordering: ordering.to_vec(),
        shares,
        std_errors,
    })
}

/// Gaussian innovations with covariance `sigma`.
///
/// Draws come from ChaCha8 seeded with `seed` and switched to stream
/// `stream`; giving every entity its own stream makes generation order
/// irrelevant.
pub fn gaussian_shocks<T: Real>(sigma: &DMatrix<T>, steps: usize, seed: u64, stream: u64) -> Result<Vec<DVector<T>>> {
    let l = cholesky_with_ridge(sigma)?;
    let k = l.nrows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    Ok((0..steps)
        .map(|_| {
            let z = DVector::from_fn(k, |_, _| T::lit(rng.sample::<f64, _>(StandardNormal)));
            &l * z
        })
        .collect())
}

/// Deterministic recursion `y_t = sum_j A_j y_{t-j} + u_t`.
///
/// `initial` holds presample values, most recent last; missing presample
/// values are zero. Refuses explosive systems unless `allow_explosive`.
pub fn simulate_with_shocks<T: Real>(
    a: &[DMatrix<T>],
    initial: &[DVector<T>],
    shocks: &[DVector<T>],
    allow_explosive: bool,
) -> Result<Vec<DVector<T>>> {
    let k = check_blocks(a)?;
    if !allow_explosive {
        let max = companion_roots(a)?.max_modulus();
        if max > EXPLOSIVE_MODULUS {
            return Err(Error::ExplosiveWithoutFlag { max_modulus: max });
        }
    }
    if shocks.iter().chain(initial).any(|u| u.len() != k) {
        return Err(Error::ShapeMismatch("shock or initial vector has the wrong length".into()));
    }
    let mut hist: Vec<DVector<T>> = initial.to_vec();
    let offset = hist.len();
    for u in shocks {
        let t = hist.len();
        let mut y = u.clone();
        for (j, aj) in a.iter().enumerate() {
            if t > j {
                y += aj * &hist[t - j - 1];
            }
        }
        hist.push(y);
    }
    Ok(hist.split_off(offset))
}

/// Gaussian simulation from a zero initial state.
pub fn simulate<T: Real>(
    system: &VarSystem<T>,
    steps: usize,
    seed: u64,
    stream: u64,
    allow_explosive: bool,
) -> Result<Vec<DVector<T>>> {
    let shocks = gaussian_shocks(&system.sigma, steps, seed, stream)?;
    simulate_with_shocks(&system.a, &[], &shocks, allow_explosive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vecm::to_levels_var;

    fn names(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("y{i}")).collect()
    }

    fn random_stable(rng: &mut ChaCha8Rng, k: usize, p: usize) -> VarSystem<f64> {
        loop {
            let a: Vec<DMatrix<f64>> = (0..p)
                .map(|_| DMatrix::from_fn(k, k, |_, _| rng.random_range(-0.5..0.5) / p as f64))
                .collect();
            if companion_roots(&a).unwrap().max_modulus() < 0.95 {
                let m = DMatrix::from_fn(k, k, |_, _| rng.random_range(-1.0..1.0));
                let sigma = &m * m.transpose() + DMatrix::identity(k, k) * 0.1;
                return VarSystem { variables: names(k), a, sigma };
            }
        }
    }

    #[test]
    fn scalar_and_identity_roots() {
        let c = companion_roots(&[DMatrix::from_element(1, 1, 0.5)]).unwrap();
        assert_eq!(c.roots.len(), 1);
        assert!((c.roots[0].re - 0.5).abs() < 1e-15 && c.roots[0].im == 0.0);
        let c = companion_roots(&[DMatrix::<f64>::identity(4, 4)]).unwrap();
        assert_eq!(c.unit_roots(1e-12), 4);
    }

    #[test]
    fn companion_layout() {
        let a1 = DMatrix::from_row_slice(2, 2, &[0.1, 0.2, 0.3, 0.4]);
        let a2 = DMatrix::from_row_slice(2, 2, &[0.5, 0.6, 0.7, 0.8]);
        let c = companion_roots(&[a1.clone(), a2.clone()]).unwrap();
        assert_eq!(c.matrix.view((0, 0), (2, 2)), a1);
        assert_eq!(c.matrix.view((0, 2), (2, 2)), a2);
        assert_eq!(c.matrix.view((2, 0), (2, 2)), DMatrix::<f64>::identity(2, 2));
        assert_eq!(c.roots.len(), 4);
    }

    #[test]
    fn rank_one_vecm_has_k_minus_one_unit_roots() {
        let alpha = DMatrix::from_column_slice(4, 1, &[-0.3, 0.1, 0.05, 0.0]);
        let beta = DMatrix::from_column_slice(4, 1, &[1.0, -5.2, 3.3, -0.4]);
        let g1 = DMatrix::from_fn(4, 4, |i, j| if i == j { 0.2 } else { 0.01 * (i + j) as f64 });
        let g2 = DMatrix::from_fn(4, 4, |i, j| if i == j { -0.1 } else { 0.0 });
        let a = to_levels_var(&(&alpha * beta.transpose()), &[g1, g2]);
        let c = companion_roots(&a).unwrap();
        assert_eq!(c.roots.len(), 12);
        assert_eq!(c.unit_roots(1e-8), 3);
        assert!(c.roots[3..].iter().all(|z| z.norm() < 1.0));
    }

    #[test]
    fn roots_invariant_to_reordering() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let sys = random_stable(&mut rng, 3, 2);
        let perm = [2usize, 0, 1];
        let a: Vec<DMatrix<f64>> = sys.a.iter().map(|m| DMatrix::from_fn(3, 3, |i, j| m[(perm[i], perm[j])])).collect();
        let r1 = companion_roots(&sys.a).unwrap().roots;
        let r2 = companion_roots(&a).unwrap().roots;
        for (x, y) in r1.iter().zip(&r2) {
            assert!((x - y).norm() < 1e-8);
        }
    }

    #[test]
    fn no_dynamics_gives_identity_response() {
        let sys = VarSystem { variables: names(3), a: vec![DMatrix::zeros(3, 3)], sigma: DMatrix::identity(3, 3) };
        let out = irf(&sys, &sys.variables, 5, &DEFAULT_SHOCK_SCALES).unwrap();
        assert_eq!(out.responses[0], DMatrix::identity(3, 3));
        assert!(out.responses[1..].iter().all(|m| m.iter().all(|&v| v == 0.0)));
        let f = fevd(&sys, &sys.variables, 10).unwrap();
        for s in &f.shares {
            assert_eq!(*s, DMatrix::identity(3, 3) * 100.0);
        }
    }

    #[test]
    fn impact_respects_ordering() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let sys = random_stable(&mut rng, 4, 1);
        let ordering: Vec<String> = ["y2", "y0", "y3", "y1"].iter().map(|s| s.to_string()).collect();
        let out = irf(&sys, &ordering, 0, &[1.0]).unwrap();
        let pos = [2usize, 0, 3, 1];
        for (j, _) in ordering.iter().enumerate() {
            for (later, &var) in pos.iter().enumerate() {
                if later < j {
                    assert_eq!(out.responses[0][(var, j)], 0.0);
                }
            }
        }
        let b = &out.responses[0];
        assert!((b * b.transpose() - &sys.sigma).abs().max() < 1e-12);
    }

    #[test]
    fn unit_impulse_decays_geometrically() {
        let a = [DMatrix::from_element(1, 1, 0.9)];
        let mut shocks = vec![DVector::zeros(1); 30];
        shocks[0][0] = 1.0;
        let path = simulate_with_shocks(&a, &[], &shocks, false).unwrap();
        for (t, y) in path.iter().enumerate() {
            assert!((y[0] - 0.9f64.powi(t as i32)).abs() < 1e-12);
        }
        let zero = simulate_with_shocks(&a, &[], &vec![DVector::zeros(1); 30], false).unwrap();
        assert!(zero.iter().all(|y| y[0] == 0.0));
    }

    #[test]
    fn simulation_is_seeded_and_streamed() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let sys = random_stable(&mut rng, 3, 2);
        let a = simulate(&sys, 50, 99, 3, false).unwrap();
        let b = simulate(&sys, 50, 99, 3, false).unwrap();
        let c = simulate(&sys, 50, 99, 4, false).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn explosive_requires_flag() {
        let a = [DMatrix::from_element(1, 1, 1.2)];
        let shocks = vec![DVector::from_element(1, 1.0); 3];
        assert!(matches!(
            simulate_with_shocks(&a, &[], &shocks, false),
            Err(Error::ExplosiveWithoutFlag { .. })
        ));
        assert!(simulate_with_shocks(&a, &[], &shocks, true).is_ok());
    }

    #[test]
    fn singular_covariance_gets_ridge() {
        let sigma = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0]);
        let l = cholesky_with_ridge(&sigma).unwrap();
        assert!((&l * l.transpose() - &sigma).abs().max() < 1e-4);
    }

    #[test]
    fn fevd_matches_monte_carlo_variance_ratios() {
        // brute force: from a zero state the h-step value is the forecast error;
        // feed each orthogonalized shock through the simulator on its own
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let sys = random_stable(&mut rng, 3, 2);
        let h = 24;
        let f = fevd(&sys, &sys.variables, h).unwrap();
        let b = impact_matrix(&sys.sigma, &sys.variables, &sys.variables).unwrap();
        let mut contrib = DMatrix::<f64>::zeros(3, 3);
        let mut draw = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..200_000 {
            for j in 0..3 {
                let shocks: Vec<DVector<f64>> = (0..h)
                    .map(|_| b.column(j) * draw.sample::<f64, _>(StandardNormal))
                    .collect();
                let path = simulate_with_shocks(&sys.a, &[], &shocks, true).unwrap();
                for i in 0..3 {
                    contrib[(i, j)] += path[h - 1][i].powi(2);
                }
            }
        }
        for i in 0..3 {
            let total: f64 = contrib.row(i).sum();
            for j in 0..3 {
                let mc = contrib[(i, j)] / total * 100.0;
                assert!((mc - f.shares[h - 1][(i, j)]).abs() < 0.5, "{i} {j}: {mc}");
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(40))]
        #[test]
        fn irf_matches_shocked_minus_baseline(seed in 0u64..10_000, k in 1usize..5, p in 1usize..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let sys = random_stable(&mut rng, k, p);
            let r = irf(&sys, &sys.variables, 24, &DEFAULT_SHOCK_SCALES).unwrap();
            let b = impact_matrix(&sys.sigma, &sys.variables, &sys.variables).unwrap();
            let init: Vec<DVector<f64>> = (0..p).map(|_| DVector::from_fn(k, |_, _| rng.random_range(-1.0..1.0))).collect();
            let zero = vec![DVector::zeros(k); 25];
            let base = simulate_with_shocks(&sys.a, &init, &zero, false).unwrap();
            for j in 0..k {
                let mut shocks = zero.clone();
                shocks[0] = b.column(j).into_owned();
                let hit = simulate_with_shocks(&sys.a, &init, &shocks, false).unwrap();
                for h in 0..=24 {
                    for i in 0..k {
                        let sim = hit[h][i] - base[h][i];
                        proptest::prop_assert!((sim - r.responses[h][(i, j)]).abs() < 1e-8);
                        proptest::prop_assert_eq!(r.scaled(h, i, j, -1.0), -r.scaled(h, i, j, 1.0));
                        proptest::prop_assert_eq!(r.scaled(h, i, j, 2.0), 2.0 * r.scaled(h, i, j, 1.0));
                    }
                }
            }
        }

        #[test]
        fn fevd_rows_sum_to_one_hundred(seed in 0u64..10_000, k in 1usize..5, p in 1usize..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let sys = random_stable(&mut rng, k, p);
            let f = fevd(&sys, &sys.variables, 24).unwrap();
            for (h, share) in f.shares.iter().enumerate() {
                for i in 0..k {
                    proptest::prop_assert!((share.row(i).sum() - 100.0).abs() < 1e-9);
                    proptest::prop_assert!(share.row(i).iter().all(|&v| (0.0..=100.0 + 1e-9).contains(&v)));
                }
                if h == 0 {
                    proptest::prop_assert!((share[(0, 0)] - 100.0).abs() < 1e-9);
                }
            }
        }
    }
}
