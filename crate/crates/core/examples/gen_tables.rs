//! Regenerates the simulated IPS and Pedroni moment tables.
//!
//! ```text
//! cargo run --release -p panelbreak-core --example gen_tables -- [ips|pedroni|all] [reps]
//! ```
//!
//! Both tables are produced by running the crate's own estimators on
//! Gaussian random walks started at zero, so the standardization matches
//! the exact finite-sample conventions used by the tests.

use panelbreak_core::cointegration::{entity_cointegrating_residuals, entity_ingredients, standardization_from_sample, PedroniSpec};
use panelbreak_core::dist::Deterministic;
use panelbreak_core::panel::{PanelDataset, SeriesView};
use panelbreak_core::regress::Bandwidth;
use panelbreak_core::tables::{IPS_LAGS, IPS_T, PEDRONI_MAX_REGRESSORS, PEDRONI_T};
use panelbreak_core::unit_root::{adf_stat, LagSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

const DETS: [Deterministic; 3] = [Deterministic::None, Deterministic::Constant, Deterministic::ConstantTrend];

fn walk(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut acc = 0.0;
    (0..n)
        .map(|_| {
            acc += rng.sample::<f64, _>(StandardNormal);
            acc
        })
        .collect()
}

fn lit(x: f64) -> String {
    if x.is_finite() {
        format!("{x:?}")
    } else {
        "f64::NAN".to_string()
    }
}

fn table_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("src/tables")
}

fn ips(reps: usize) {
    let mut mean = vec![vec![vec![f64::NAN; IPS_LAGS]; IPS_T.len()]; 3];
    let mut var = mean.clone();
    for (d, &det) in DETS.iter().enumerate() {
        for (i, &len) in IPS_T.iter().enumerate() {
            let start = Instant::now();
            let mut rng = ChaCha8Rng::seed_from_u64(1_000 + (d * 100 + i) as u64);
            let mut acc = vec![Vec::with_capacity(reps); IPS_LAGS];
            for _ in 0..reps {
                let s = SeriesView::new(walk(&mut rng, len));
                for (p, slot) in acc.iter_mut().enumerate() {
                    if let Ok(out) = adf_stat(&s, det, LagSpec::Fixed(p)) {
                        slot.push(out.statistic);
                    }
                }
            }
            for (p, xs) in acc.iter().enumerate() {
                if xs.len() == reps {
                    let n = xs.len() as f64;
                    let m = xs.iter().sum::<f64>() / n;
                    mean[d][i][p] = m;
                    var[d][i][p] = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0);
                }
            }
            eprintln!("ips {} T={len}: {:.1?}", det.label(), start.elapsed());
        }
    }
    let mut src = String::new();
    writeln!(src, "// @generated by examples/gen_tables.rs ({reps} replications per cell)").unwrap();
    writeln!(src, "// Null moments of the ADF t statistic for Gaussian random walks,").unwrap();
    writeln!(src, "// indexed [deterministic][series length][augmentation lags].").unwrap();
    writeln!(src, "// Entries are NaN where the regression is infeasible.\n").unwrap();
    writeln!(src, "pub const IPS_T: [usize; {}] = {:?};", IPS_T.len(), IPS_T).unwrap();
    writeln!(src, "pub const IPS_LAGS: usize = {IPS_LAGS};\n").unwrap();
    for (name, t) in [("IPS_MEAN", &mean), ("IPS_VAR", &var)] {
        writeln!(src, "pub(super) const {name}: [[[f64; {IPS_LAGS}]; {}]; 3] = [", IPS_T.len()).unwrap();
        for plane in t.iter() {
            writeln!(src, "    [").unwrap();
            for row in plane {
                let cells: Vec<String> = row.iter().map(|&x| lit(x)).collect();
                writeln!(src, "        [{}],", cells.join(", ")).unwrap();
            }
            writeln!(src, "    ],").unwrap();
        }
        writeln!(src, "];\n").unwrap();
    }
    std::fs::write(table_dir().join("ips.rs"), src.trim_end().to_string() + "\n").unwrap();
}

fn pedroni(reps: usize) {
    const BATCH: usize = 200;
    let mut mu = vec![vec![vec![[f64::NAN; 7]; PEDRONI_T.len()]; PEDRONI_MAX_REGRESSORS]; 2];
    let mut nu = mu.clone();
    for (d, det) in [Deterministic::Constant, Deterministic::ConstantTrend].into_iter().enumerate() {
        for m in 1..=PEDRONI_MAX_REGRESSORS {
            let names: Vec<String> = (0..=m).map(|v| format!("v{v}")).collect();
            let regs: Vec<&str> = names[1..].iter().map(|s| s.as_str()).collect();
            let spec = PedroniSpec::new("v0", &regs).with_deterministic(det);
            for (i, &len) in PEDRONI_T.iter().enumerate() {
                let start = Instant::now();
                let mut rng = ChaCha8Rng::seed_from_u64(50_000 + (d * 1000 + m * 20 + i) as u64);
                let mut sample = Vec::with_capacity(reps);
                while sample.len() < reps {
                    let entities: Vec<String> = (0..BATCH).map(|e| format!("E{e:04}")).collect();
                    let cols: Vec<Vec<Vec<f64>>> =
                        (0..BATCH).map(|_| (0..=m).map(|_| walk(&mut rng, len)).collect()).collect();
                    let panel =
                        PanelDataset::from_fn(entities, 1, len, names.clone(), |e, t, v| Some(cols[e][v][t])).unwrap();
                    let (res, _) = entity_cointegrating_residuals(&panel, &spec).unwrap();
                    for r in res {
                        if sample.len() == reps {
                            break;
                        }
                        if let Ok(ing) = entity_ingredients(&r.residuals, r.l11_sq, spec.lags, Bandwidth::Auto) {
                            sample.push(ing);
                        }
                    }
                }
                let moments = standardization_from_sample(&sample);
                for (s, (a, b)) in moments.iter().enumerate() {
                    mu[d][m - 1][i][s] = *a;
                    nu[d][m - 1][i][s] = *b;
                }
                eprintln!("pedroni {} m={m} T={len}: {:.1?} {:?}", det.label(), start.elapsed(), &moments[..3]);
            }
        }
    }
    let n_t = PEDRONI_T.len();
    let mut src = String::new();
    writeln!(src, "// @generated by examples/gen_tables.rs ({reps} entities per cell)").unwrap();
    writeln!(src, "// Delta-method null mean and variance of the seven normalized statistics").unwrap();
    writeln!(src, "// for independent Gaussian random walks, indexed").unwrap();
    writeln!(src, "// [constant|trend][regressors - 1][series length][statistic].\n").unwrap();
    writeln!(src, "pub const PEDRONI_T: [usize; {n_t}] = {:?};", PEDRONI_T).unwrap();
    writeln!(src, "pub const PEDRONI_MAX_REGRESSORS: usize = {PEDRONI_MAX_REGRESSORS};\n").unwrap();
    for (name, t) in [("PEDRONI_MU", &mu), ("PEDRONI_NU", &nu)] {
        writeln!(src, "pub(super) const {name}: [[[[f64; 7]; {n_t}]; {PEDRONI_MAX_REGRESSORS}]; 2] = [").unwrap();
        for det in t.iter() {
            writeln!(src, "    [").unwrap();
            for reg in det {
                writeln!(src, "        [").unwrap();
                for row in reg {
                    let cells: Vec<String> = row.iter().map(|&x| lit(x)).collect();
                    writeln!(src, "            [{}],", cells.join(", ")).unwrap();
                }
                writeln!(src, "        ],").unwrap();
            }
            writeln!(src, "    ],").unwrap();
        }
        writeln!(src, "];\n").unwrap();
    }
    std::fs::write(table_dir().join("pedroni.rs"), src.trim_end().to_string() + "\n").unwrap();
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let which = args.first().map(String::as_str).unwrap_or("all");
    let reps = args.get(1).and_then(|r| r.parse().ok());
    if matches!(which, "ips" | "all") {
        ips(reps.unwrap_or(10_000));
    }
    if matches!(which, "pedroni" | "all") {
        pedroni(reps.unwrap_or(6_000));
    }
}
