//! Stage orchestration: ingest, unit roots, cointegration, VECM, dynamics
//! and diagnostics, each turned into one or more rendered artifacts.

use crate::config::{PedroniDummy, RunConfig};
use crate::error::{CliError, Result};
use crate::ingest::{build_policy_dummy, parse_long_csv};
use crate::render::{self, text, Artifact, Cell, Section};
use panelbreak_core::cointegration::{pedroni_panel, PedroniSpec, PedroniStatistic};
use panelbreak_core::diagnostics::{
    granger_block_exogeneity, heteroskedasticity_white, serial_correlation_lm, slope_homogeneity,
};
use panelbreak_core::dynamics::{companion_roots, fevd, irf};
use panelbreak_core::report::{TestReport, SIGNIFICANCE};
use panelbreak_core::synth::{generate, DgpSpec, VARIABLES};
use panelbreak_core::unit_root::{panel_unit_root, UnitRootMethod, UnitRootOptions, UnitRootResult};
use panelbreak_core::vecm::estimate;
use panelbreak_core::{Panel, Vecm};
use sha2::{Digest, Sha256};
use std::path::Path;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Tolerance on the modulus for counting companion roots as unit roots.
pub const UNIT_ROOT_TOL: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Ingest,
    UnitRoot,
    Cointegration,
    Vecm,
    Dynamics,
    Diagnostics,
}

impl Stage {
    pub const ALL: [Stage; 6] = [
        Stage::Ingest,
        Stage::UnitRoot,
        Stage::Cointegration,
        Stage::Vecm,
        Stage::Dynamics,
        Stage::Diagnostics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Ingest => "ingest",
            Stage::UnitRoot => "unit_root",
            Stage::Cointegration => "cointegration",
            Stage::Vecm => "vecm",
            Stage::Dynamics => "dynamics",
            Stage::Diagnostics => "diagnostics",
        }
    }

    /// Artifact ids the stage emits.
    pub fn artifacts(self) -> &'static [&'static str] {
        match self {
            Stage::Ingest => &["variables"],
            Stage::UnitRoot => &["unit_root"],
            Stage::Cointegration => &["pedroni"],
            Stage::Vecm => &["vecm_estimates"],
            Stage::Dynamics => &["variance_decomposition", "impulse_responses", "companion_roots"],
            Stage::Diagnostics => &["granger", "serial_lm", "heteroskedasticity", "slope_homogeneity"],
        }
    }
}

/// Outcome of one stage for the summary table.
#[derive(Debug, Clone, PartialEq)]
pub struct StageRecord {
    pub stage: Stage,
    pub ok: bool,
    pub detail: String,
}

/// Everything a run produced, complete or up to the failing stage.
#[derive(Debug)]
pub struct Bundle {
    pub config_hash: String,
    pub input_hash: String,
    pub artifacts: Vec<Artifact>,
    pub records: Vec<StageRecord>,
    pub failure: Option<CliError>,
}

impl Bundle {
    pub fn artifact(&self, id: &str) -> Option<&Artifact> {
        self.artifacts.iter().find(|a| a.id == id)
    }

    pub fn exit_code(&self) -> i32 {
        self.failure.as_ref().map_or(crate::error::EXIT_OK, CliError::exit_code)
    }

    pub fn summary(&self) -> Artifact {
        let mut a = Artifact::new("summary", "Pipeline Summary");
        a.meta = vec![
            ("version".into(), format!("panelbreak {VERSION}")),
            ("config_sha256".into(), self.config_hash.clone()),
            ("input_sha256".into(), self.input_hash.clone()),
        ];
        let mut s = Section::new("stages", &["Stage", "Status", "Detail"]);
        for r in &self.records {
            s.push(vec![text(r.stage.name()), text(if r.ok { "ok" } else { "FAILED" }), text(&r.detail)]);
        }
        a.sections.push(s);
        a
    }
}

/// Loads or generates the panel and applies year selection, gap filling,
/// logs, the minimum-observation filter and the policy dummy. Returns the
/// panel with the input digest.
pub fn prepare_panel(cfg: &RunConfig) -> Result<(Panel, String)> {
    let (raw, input_hash) = match (&cfg.input, cfg.synth_kind()?) {
        (Some(path), _) => {
            let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
            (parse_long_csv(path, &cfg.mapping(), &VARIABLES)?, hex::encode(Sha256::digest(&bytes)))
        }
        (None, Some(kind)) => {
            let mut spec = DgpSpec::new(kind, cfg.synth_entities, cfg.synth_years, cfg.seed);
            spec.last_year = cfg.end_year;
            spec.dummy_threshold = cfg.dummy_threshold;
            let tag = format!("synthetic:{}:{}:{}x{}", kind.name(), cfg.seed, cfg.synth_entities, cfg.synth_years);
            let p = generate(&spec)?;
            let vars: Vec<String> = VARIABLES.iter().map(|s| s.to_string()).collect();
            let only_model = Panel::from_fn(p.entities().to_vec(), p.first_year(), p.n_years(), vars, |e, t, v| {
                p.value(e, t, p.var_index(VARIABLES[v]).expect("generated variable"))
            })?;
            (only_model, hex::encode(Sha256::digest(tag.as_bytes())))
        }
        (None, None) => return Err(CliError::Config("set either `input` or `synth_kind`".into())),
    };
    let mut p = raw.select_years(cfg.start_year, cfg.end_year)?;
    if cfg.interpolate {
        for v in VARIABLES {
            p = p.interpolate_gaps(v)?;
        }
    }
    for v in cfg.logged() {
        p = p.log_transform(v)?;
    }
    let p = p.enforce_min_obs(&VARIABLES, cfg.min_obs)?;
    if p.n_entities() == 0 {
        return Err(CliError::Config(format!("no entity has {} jointly observed years", cfg.min_obs)));
    }
    let p = build_policy_dummy(&p, &cfg.dummy_name, cfg.dummy_threshold)?;
    Ok((p, input_hash))
}

/// Integration order suggested by the four tests: a majority rejecting in
/// levels means stationary, otherwise a majority rejecting after
/// differencing means integrated of order one.
fn integration_order(levels: &[UnitRootResult], diffs: &[UnitRootResult]) -> &'static str {
    let rej = |r: &[UnitRootResult]| r.iter().filter(|x| x.reject()).count();
    if rej(levels) * 2 > levels.len() {
        "I(0)"
    } else if rej(diffs) * 2 > diffs.len() {
        "I(1)"
    } else {
        "undetermined"
    }
}

struct Runner<'a> {
    cfg: &'a RunConfig,
    config_hash: String,
    input_hash: String,
    /// Upstream decisions, stamped into every later artifact.
    context: Vec<(String, String)>,
    artifacts: Vec<Artifact>,
    records: Vec<StageRecord>,
    panel: Option<Panel>,
    vecm: Option<Vecm>,
}

impl Runner<'_> {
    fn artifact(&self, id: &str, title: &str) -> Artifact {
        let cfg = self.cfg;
        let logs = cfg.logged();
        let p = self.panel.as_ref();
        let mut meta = vec![
            ("version".into(), format!("panelbreak {VERSION}")),
            ("config_sha256".into(), self.config_hash.clone()),
            ("input_sha256".into(), self.input_hash.clone()),
            (
                "sample".into(),
                match p {
                    Some(p) => format!(
                        "{}-{}, {} entities, {} excluded",
                        p.first_year(),
                        p.last_year(),
                        p.n_entities(),
                        p.exclusions().len()
                    ),
                    None => format!("{}-{}", cfg.start_year, cfg.end_year),
                },
            ),
            ("logs".into(), if logs.is_empty() { "none".into() } else { logs.join(", ") }),
            (
                "model".into(),
                format!(
                    "lags={} rank={} estimator={} ordering={}",
                    cfg.lag_order,
                    cfg.rank,
                    match cfg.estimator {
                        panelbreak_core::vecm::Estimator::TwoStep => "two_step",
                        panelbreak_core::vecm::Estimator::ReducedRank => "reduced_rank",
                    },
                    cfg.ordering.join(">")
                ),
            ),
            ("dummy".into(), format!("{} = 1 for year >= {}", cfg.dummy_name, cfg.dummy_threshold)),
        ];
        meta.extend(self.context.iter().cloned());
        let mut a = Artifact::new(id, title);
        a.meta = meta;
        a
    }

    fn panel(&self) -> &Panel {
        self.panel.as_ref().expect("ingest ran")
    }

    fn vecm(&self) -> &Vecm {
        self.vecm.as_ref().expect("vecm ran")
    }

    fn run_stage(&mut self, stage: Stage) -> Result<String> {
        match stage {
            Stage::Ingest => self.ingest(),
            Stage::UnitRoot => self.unit_root(),
            Stage::Cointegration => self.cointegration(),
            Stage::Vecm => self.estimate_vecm(),
            Stage::Dynamics => self.dynamics(),
            Stage::Diagnostics => self.diagnostics(),
        }
    }

    fn ingest(&mut self) -> Result<String> {
        let (p, hash) = prepare_panel(self.cfg)?;
        self.input_hash = hash;
        self.panel = Some(p);
        let p = self.panel();
        let mut a = self.artifact("variables", "Variables");
        let sources = [&self.cfg.map_co2, &self.cfg.map_energy_use, &self.cfg.map_gdp, &self.cfg.map_population];
        let logs = self.cfg.logged();
        let mut s = Section::new(
            "variables",
            &["Variable", "Source Name", "Transform", "Observations", "Mean", "Std. Dev.", "Min", "Max"],
        );
        let mut names: Vec<(&str, String, &str)> = VARIABLES
            .iter()
            .zip(sources)
            .map(|(v, src)| (*v, src.clone(), if logs.contains(v) { "log" } else { "level" }))
            .collect();
        names.push((self.cfg.dummy_name.as_str(), "constructed".into(), "indicator"));
        for (v, src, tr) in names {
            let vi = p.var_index(v)?;
            let xs: Vec<f64> = (0..p.n_entities())
                .flat_map(|e| (0..p.n_years()).filter_map(move |t| p.value(e, t, vi)))
                .collect();
            let n = xs.len() as f64;
            let mean = xs.iter().sum::<f64>() / n;
            let sd = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
            let min = xs.iter().copied().fold(f64::INFINITY, f64::min);
            let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            s.push(vec![
                text(v),
                text(src),
                text(tr),
                Cell::Int(xs.len() as i64),
                Cell::Num(mean),
                Cell::Num(sd),
                Cell::Num(min),
                Cell::Num(max),
            ]);
        }
        a.sections.push(s);
        if !p.exclusions().is_empty() {
            let mut ex = Section::new("excluded entities", &["Entity", "Reason"]);
            for x in p.exclusions() {
                ex.push(vec![text(&x.entity), text(&x.reason)]);
            }
            a.sections.push(ex);
        }
        a.notes.push(format!(
            "{} = 1 for years {} and later, 0 otherwise",
            self.cfg.dummy_name, self.cfg.dummy_threshold
        ));
        let detail = format!(
            "{} entities, {}-{}, {} excluded",
            p.n_entities(),
            p.first_year(),
            p.last_year(),
            p.exclusions().len()
        );
        self.artifacts.push(a);
        Ok(detail)
    }

    fn unit_root(&mut self) -> Result<String> {
        let p = self.panel();
        let levels_opts = UnitRootOptions::new(false).with_deterministic(self.cfg.unit_root_deterministic);
        let diff_opts = UnitRootOptions::new(true);
        let mut a = self.artifact("unit_root", "Panel Unit Root Test");
        let mut s = Section::new(
            "unit root",
            &[
                "Variable",
                "Test Method",
                "Test Statistic (Before Diff.)",
                "Probability (Before Diff.)",
                "Test Statistic (After Diff.)",
                "Probability (After Diff.)",
            ],
        );
        let mut orders = Vec::new();
        for v in VARIABLES {
            let mut levels = Vec::new();
            let mut diffs = Vec::new();
            for m in UnitRootMethod::ALL {
                levels.push(panel_unit_root(p, v, m, &levels_opts)?);
                diffs.push(panel_unit_root(p, v, m, &diff_opts)?);
            }
            for (i, (l, d)) in levels.iter().zip(&diffs).enumerate() {
                s.push(vec![
                    text(if i == 0 { v } else { "" }),
                    text(l.method.label()),
                    Cell::Num(l.statistic),
                    Cell::Num(l.p_value),
                    Cell::Num(d.statistic),
                    Cell::Num(d.p_value),
                ]);
            }
            orders.push(format!("{v} {}", integration_order(&levels, &diffs)));
        }
        a.sections.push(s);
        a.notes.push(format!(
            "levels with {} deterministic terms, differences without; lags by Schwarz criterion",
            self.cfg.unit_root_deterministic.label()
        ));
        self.artifacts.push(a);
        let verdict = orders.join(", ");
        self.context.push(("unit_root_verdict".into(), verdict.clone()));
        Ok(verdict)
    }

    fn cointegration(&mut self) -> Result<String> {
        let p = self.panel();
        let dummy = self.cfg.dummy_name.as_str();
        let mut regs: Vec<&str> = VARIABLES[1..].to_vec();
        let mut spec = match self.cfg.pedroni_dummy {
            PedroniDummy::Shift => PedroniSpec::new(VARIABLES[0], &regs).with_shifts(&[dummy]),
            PedroniDummy::Regressor => {
                regs.push(dummy);
                PedroniSpec::new(VARIABLES[0], &regs)
            }
            PedroniDummy::Omit => PedroniSpec::new(VARIABLES[0], &regs),
        };
        spec = spec.with_deterministic(panelbreak_core::dist::Deterministic::Constant);
        let res = pedroni_panel(p, &spec)?;
        let mut a = self.artifact("pedroni", "Pedroni Residual Cointegration Test");
        let mut s = Section::new("pedroni", &["Test", "Statistic", "p-value"]);
        for stat in PedroniStatistic::ALL {
            let e = res.get(stat);
            s.push(vec![text(stat.label()), Cell::Num(e.report.statistic), Cell::Num(e.report.p_value)]);
        }
        a.sections.push(s);
        let verdict = format!(
            "{} ({} of 7 statistics reject no cointegration at {:.0}%)",
            if res.decision { "cointegrated" } else { "not cointegrated" },
            res.rejections(),
            SIGNIFICANCE * 100.0
        );
        a.notes.push(format!(
            "majority rule: cointegration is {} by {} of 7 statistics",
            if res.decision { "confirmed" } else { "not confirmed" },
            res.rejections()
        ));
        a.notes.push(format!("{} entities, {} integrated regressors", res.n_entities, res.n_regressors));
        self.artifacts.push(a);
        self.context.push(("cointegration_verdict".into(), verdict.clone()));
        Ok(verdict)
    }

    fn estimate_vecm(&mut self) -> Result<String> {
        let est = estimate(self.panel(), &self.cfg.model_spec())?;
        let mut a = self.artifact("vecm_estimates", "Vector Error Correction Estimates");
        let lr = &est.long_run;
        let r = lr.rank();
        let k = est.k();
        let relations: Vec<String> = (1..=r).map(|j| format!("CointEq{j}")).collect();

        let mut cols = vec!["Cointegrating Eq:"];
        cols.extend(relations.iter().map(|s| s.as_str()));
        let mut ce = Section::new("Cointegrating Eq", &cols);
        let beta_t = lr.beta_t();
        let na_row = |label: &str| {
            let mut row = vec![text(label)];
            row.extend((0..r).map(|_| Cell::Num(f64::NAN)));
            row
        };
        for (i, v) in lr.variables.iter().enumerate() {
            let mut row = vec![text(format!("{v}(-1)"))];
            row.extend((0..r).map(|j| Cell::Num(lr.beta[(i, j)])));
            ce.push(row);
            if i < r {
                continue;
            }
            match (&lr.beta_se, &beta_t) {
                (Some(se), Some(t)) => {
                    let mut row = vec![text("")];
                    row.extend((0..r).map(|j| Cell::Num(se[(i, j)])));
                    ce.push(row);
                    let mut row = vec![text("")];
                    row.extend((0..r).map(|j| Cell::T(t[(i, j)])));
                    ce.push(row);
                }
                _ => {
                    ce.push(na_row(""));
                    let mut row = vec![text("")];
                    row.extend((0..r).map(|_| Cell::T(f64::NAN)));
                    ce.push(row);
                }
            }
        }
        let mut row = vec![text("C")];
        row.extend((0..r).map(|j| Cell::Num(lr.constant[j])));
        ce.push(row);
        for (d, name) in lr.dummies.iter().enumerate() {
            let mut row = vec![text(name)];
            row.extend((0..r).map(|j| Cell::Num(lr.dummy_coef[(d, j)])));
            ce.push(row);
            let (se_row, t_row): (Vec<Cell>, Vec<Cell>) = (0..r)
                .map(|j| match &lr.dummy_se {
                    Some(se) if se[(d, j)] > 0.0 => (Cell::Num(se[(d, j)]), Cell::T(lr.dummy_coef[(d, j)] / se[(d, j)])),
                    _ => (Cell::Num(f64::NAN), Cell::T(f64::NAN)),
                })
                .unzip();
            ce.push(std::iter::once(text("")).chain(se_row).collect());
            ce.push(std::iter::once(text("")).chain(t_row).collect());
        }
        a.sections.push(ce);

        let rf = lr.regression_form(0);
        let mut reg = Section::new(
            format!("Regression form: {}", lr.variables[0]),
            &["Regressor", "Coefficient", "Std. Error", "t-Statistic"],
        );
        for (j, v) in lr.variables[r..].iter().enumerate() {
            let se = rf.slope_se.as_ref().map_or(f64::NAN, |s| s[j]);
            reg.push(vec![text(v), Cell::Num(rf.slopes[j]), Cell::Num(se), Cell::T(rf.slopes[j] / se)]);
        }
        reg.push(vec![text("C"), Cell::Num(rf.constant), Cell::Num(f64::NAN), Cell::T(f64::NAN)]);
        for (d, name) in lr.dummies.iter().enumerate() {
            let se = rf.dummy_se.as_ref().map_or(f64::NAN, |s| s[d]);
            let se = if se > 0.0 { se } else { f64::NAN };
            reg.push(vec![text(name), Cell::Num(rf.dummies[d]), Cell::Num(se), Cell::T(rf.dummies[d] / se)]);
        }
        a.sections.push(reg);

        let heads: Vec<String> = est.spec.endogenous.iter().map(|v| format!("D({v})")).collect();
        let mut cols = vec!["Error Correction:"];
        cols.extend(heads.iter().map(|s| s.as_str()));
        let mut ec = Section::new("Error Correction", &cols);
        let ses: Vec<_> = est.equations.iter().map(|f| f.std_errors()).collect();
        for (c, label) in est.regressors.iter().enumerate() {
            ec.push(std::iter::once(text(label)).chain((0..k).map(|i| Cell::Num(est.equations[i].coefficients[c]))).collect());
            ec.push(std::iter::once(text("")).chain((0..k).map(|i| Cell::Num(ses[i][c]))).collect());
            ec.push(
                std::iter::once(text(""))
                    .chain((0..k).map(|i| Cell::T(est.equations[i].coefficients[c] / ses[i][c])))
                    .collect(),
            );
        }
        a.sections.push(ec);
        a.notes.push("each coefficient row is followed by its standard error and bracketed t-ratio".into());
        if !lr.collinear.is_empty() || !est.collinear.is_empty() {
            let mut dropped: Vec<&str> = lr.collinear.iter().chain(&est.collinear).map(|s| s.as_str()).collect();
            dropped.dedup();
            a.notes.push(format!("dropped for lack of variation: {}", dropped.join(", ")));
        }
        let alpha0 = est.equations[0].coefficients[0];
        let detail = format!("{} observations, loading on {} = {:.4}", est.nobs, est.spec.endogenous[0], alpha0);
        self.artifacts.push(a);
        self.vecm = Some(est);
        Ok(detail)
    }

    fn dynamics(&mut self) -> Result<String> {
        let est = self.vecm();
        let sys = est.to_levels_var();
        let ordering = &self.cfg.ordering;
        let h = self.cfg.horizon;
        let fe = fevd(&sys, ordering, h)?;
        let ir = irf(&sys, ordering, h, &self.cfg.shock_scales)?;
        let comp = companion_roots(&sys.a)?;

        let mut t5 = self.artifact("variance_decomposition", "Variance Decomposition");
        let mut cols = vec!["Period", "S.E."];
        cols.extend(ordering.iter().map(|s| s.as_str()));
        for resp_name in ordering {
            let resp = sys.variables.iter().position(|v| v == resp_name).expect("validated ordering");
            let mut s = Section::new(format!("Variance Decomposition of {resp_name}"), &cols);
            for step in 1..=h {
                let mut row = vec![Cell::Int(step as i64), Cell::Num(fe.std_errors[step - 1][resp])];
                row.extend((0..ordering.len()).map(|j| Cell::Num(fe.shares[step - 1][(resp, j)])));
                s.push(row);
            }
            t5.sections.push(s);
        }
        t5.notes.push(format!("Cholesky ordering: {}", ordering.join(" ")));

        let mut g1 = self.artifact("impulse_responses", "Impulse Responses");
        let mut s = Section::new("responses", &["Response", "Shock", "Scale", "Horizon", "Value"]);
        for (ri, resp) in sys.variables.iter().enumerate() {
            for (si, shock) in ordering.iter().enumerate() {
                for &scale in &ir.shock_scales {
                    for step in 0..=ir.horizon() {
                        s.push(vec![
                            text(resp),
                            text(shock),
                            Cell::Num(scale),
                            Cell::Int(step as i64),
                            Cell::Num(ir.scaled(step, ri, si, scale)),
                        ]);
                    }
                }
            }
        }
        g1.sections.push(s);
        g1.notes.push("orthogonalized responses; scale is the shock size in residual standard deviations".into());

        let mut g2 = self.artifact("companion_roots", "Roots of Characteristic Polynomial");
        let mut s = Section::new("roots", &["Real", "Imaginary", "Modulus"]);
        for z in &comp.roots {
            s.push(vec![Cell::Num(z.re), Cell::Num(z.im), Cell::Num(z.norm())]);
        }
        g2.sections.push(s);
        let units = comp.unit_roots(UNIT_ROOT_TOL);
        let inside = comp.moduli().iter().filter(|&&m| m < 1.0 - UNIT_ROOT_TOL).count();
        let stable_rest = inside + units == comp.roots.len();
        g2.notes.push(format!(
            "{} roots within {} of the unit circle; {} roots inside",
            units, UNIT_ROOT_TOL, inside
        ));
        let verdict = format!(
            "{} unit roots (expected {}), {}",
            units,
            est.k() - est.spec.rank,
            if stable_rest { "remaining roots inside the unit circle" } else { "some roots outside the unit circle" }
        );
        let own = fe.shares[h - 1][(
            sys.variables.iter().position(|v| *v == ordering[0]).expect("validated ordering"),
            0,
        )];
        self.artifacts.extend([t5, g1, g2]);
        self.context.push(("roots_verdict".into(), verdict.clone()));
        Ok(format!("{verdict}; own share of {} at horizon {h} = {own:.4}", ordering[0]))
    }

    fn diagnostics(&mut self) -> Result<String> {
        let est = self.vecm();
        let target = VARIABLES[0];
        let granger = granger_block_exogeneity(est, target)?;
        let lm = serial_correlation_lm(est, self.cfg.lm_max_lag)?;
        let white = heteroskedasticity_white(est, self.cfg.white_cross_terms)?;
        let slope = slope_homogeneity(self.panel(), &self.cfg.model_spec(), self.cfg.slope_tail)?;

        let mut t6 = self.artifact("granger", "VEC Granger Causality/Block Exogeneity Wald Test");
        let mut s = Section::new(
            format!("Dependent variable: D({target})"),
            &["Excluded Variable", "Chi-Square Statistic", "Degrees of Freedom (df)", "p-value"],
        );
        for rep in &granger {
            let name = if rep.name == "All" { "All Variables".to_string() } else { rep.name.clone() };
            s.push(vec![text(name), Cell::Num(rep.statistic), chi_df(rep), Cell::Num(rep.p_value)]);
        }
        t6.sections.push(s);
        t6.notes.push(format!("null hypothesis: the excluded variable does not Granger-cause {target}"));

        let mut t7 = self.artifact("serial_lm", "VEC Residual Serial Correlation LM Tests");
        let cols = ["Lag", "LRE* stat", "df", "Prob.", "Rao F-stat", "df", "Prob."];
        let mut single = Section::new("Null hypothesis: No serial correlation at lag h", &cols);
        let mut joint = Section::new("Null hypothesis: No serial correlation at lags 1 to h", &cols);
        for rep in &lm {
            let (target, h) = match rep.name.strip_prefix("lags 1 to ") {
                Some(h) => (&mut joint, h),
                None => (&mut single, rep.name.trim_start_matches("lag ")),
            };
            let lre = rep.component("LRE*").expect("LRE* component");
            let rao = rep.component("Rao F").expect("Rao F component");
            let v = |c: &panelbreak_core::report::ComponentRow, k: &str| c.value(k).unwrap_or(f64::NAN);
            target.push(vec![
                text(h),
                Cell::Num(v(lre, "stat")),
                Cell::Df(v(lre, "df")),
                Cell::Num(v(lre, "prob")),
                Cell::Num(v(rao, "stat")),
                Cell::DfPair(v(rao, "df1"), v(rao, "df2")),
                Cell::Num(v(rao, "prob")),
            ]);
        }
        t7.sections.extend([single, joint]);
        t7.notes.push("LRE* is the Edgeworth-corrected likelihood ratio statistic".into());

        let mut t8 = self.artifact(
            "heteroskedasticity",
            if self.cfg.white_cross_terms {
                "VEC Residual Heteroskedasticity Tests (Includes Cross Terms)"
            } else {
                "VEC Residual Heteroskedasticity Tests (No Cross Terms)"
            },
        );
        let mut j = Section::new("Joint Test", &["Chi-Square Statistic", "Degrees of Freedom (df)", "p-value"]);
        j.push(vec![Cell::Num(white.statistic), chi_df(&white), Cell::Num(white.p_value)]);
        let q = white.components.first().and_then(|c| c.value("df")).unwrap_or(f64::NAN);
        let df2 = est.nobs as f64 - q - 1.0;
        let f_head = format!("F-Statistic ({}, {})", fmt_df(q), fmt_df(df2));
        let c_head = format!("Chi-Square ({})", fmt_df(q));
        let mut c = Section::new(
            "Individual Components",
            &["Dependent Variable", "R-Squared", &f_head, "p-value", &c_head, "p-value"],
        );
        for comp in &white.components {
            let v = |k: &str| comp.value(k).unwrap_or(f64::NAN);
            c.push(vec![
                text(&comp.label),
                Cell::Num(v("r_squared")),
                Cell::Num(v("f")),
                Cell::Num(v("f_prob")),
                Cell::Num(v("chi2")),
                Cell::Num(v("chi2_prob")),
            ]);
        }
        t8.sections.extend([j, c]);

        let mut t9 = self.artifact("slope_homogeneity", "Slope Homogeneity Test");
        let mut s = Section::new("slope homogeneity", &["Test Statistic", "Value"]);
        let delta = slope.component("Delta").and_then(|c| c.value("stat")).unwrap_or(f64::NAN);
        let adj = slope.component("Delta adjusted").and_then(|c| c.value("stat")).unwrap_or(f64::NAN);
        let conclusion = if slope.reject {
            "Reject Null: Slopes are heterogeneous"
        } else {
            "Fail to Reject Null: Slopes are homogeneous"
        };
        s.push(vec![text("Delta Tilde"), Cell::Num(delta)]);
        s.push(vec![text("Delta Adjusted"), Cell::Num(adj)]);
        s.push(vec![text("P-value"), Cell::Num(slope.p_value)]);
        s.push(vec![text("Conclusion"), text(conclusion)]);
        t9.sections.push(s);
        t9.notes.push(format!("regression of {} on the other model variables with entity intercepts", VARIABLES[0]));

        let all = granger.last().expect("joint row");
        let detail = format!(
            "granger all p={:.4}; white joint p={:.4}; slope p={:.4}",
            all.p_value, white.p_value, slope.p_value
        );
        self.artifacts.extend([t6, t7, t8, t9]);
        Ok(detail)
    }
}

fn fmt_df(x: f64) -> String {
    panelbreak_core::report::fmt_df(x)
}

fn chi_df(rep: &TestReport) -> Cell {
    match rep.distribution {
        panelbreak_core::report::Distribution::ChiSquare { df } => Cell::Df(df),
        _ => Cell::Num(f64::NAN),
    }
}

/// Runs every stage up to and including `until`. A failing stage stops the
/// run; the bundle then holds the artifacts produced so far.
pub fn run_pipeline(cfg: &RunConfig, until: Stage) -> Bundle {
    let mut runner = Runner {
        cfg,
        config_hash: cfg.hash(),
        input_hash: String::new(),
        context: Vec::new(),
        artifacts: Vec::new(),
        records: Vec::new(),
        panel: None,
        vecm: None,
    };
    let mut failure = None;
    for stage in Stage::ALL.into_iter().filter(|s| *s <= until) {
        log::info!("stage {}", stage.name());
        match runner.run_stage(stage) {
            Ok(detail) => runner.records.push(StageRecord { stage, ok: true, detail }),
            Err(e) => {
                let e = match e {
                    CliError::Core(source) => CliError::Stage {
                        stage: stage.name(),
                        source,
                    },
                    other => other,
                };
                log::error!("stage {} failed: {e}", stage.name());
                runner.records.push(StageRecord {
                    stage,
                    ok: false,
                    detail: e.to_string(),
                });
                failure = Some(e);
                break;
            }
        }
    }
    Bundle {
        config_hash: runner.config_hash,
        input_hash: runner.input_hash,
        artifacts: runner.artifacts,
        records: runner.records,
        failure,
    }
}

/// Writes every artifact, the summary, `metadata.json` and, after a
/// failure, a `FAILED` marker naming the stage.
pub fn write_bundle(bundle: &Bundle, dir: &Path, formats: &[String]) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    for a in &bundle.artifacts {
        render::write_artifact(dir, a, formats)?;
    }
    render::write_artifact(dir, &bundle.summary(), formats)?;
    let failed = dir.join("FAILED");
    match &bundle.failure {
        Some(e) => {
            let stage = bundle.records.last().map_or("ingest", |r| r.stage.name());
            std::fs::write(&failed, format!("stage {stage}: {e}\n")).map_err(|err| CliError::io(&failed, err))?;
        }
        None if failed.exists() => std::fs::remove_file(&failed).map_err(|e| CliError::io(&failed, e))?,
        None => {}
    }
    let seconds = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    let mut files: Vec<String> = bundle
        .artifacts
        .iter()
        .map(|a| a.id.clone())
        .chain(std::iter::once("summary".to_string()))
        .flat_map(|id| formats.iter().map(move |f| format!("{id}.{}", render::extension(f))))
        .collect();
    files.sort();
    let meta = serde_json::json!({
        "version": VERSION,
        "created_unix": seconds,
        "config_sha256": bundle.config_hash,
        "input_sha256": bundle.input_hash,
        "status": if bundle.failure.is_some() { "failed" } else { "ok" },
        "files": files,
    });
    let path = dir.join("metadata.json");
    let text = serde_json::to_string_pretty(&meta).expect("metadata serializes") + "\n";
    std::fs::write(&path, text).map_err(|e| CliError::io(&path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(kind: &str) -> RunConfig {
        let mut c = RunConfig::from_toml(&format!("synth_kind = \"{kind}\"\nseed = 3")).unwrap();
        c.synth_entities = 12;
        c.synth_years = 30;
        c.start_year = 1993;
        c.horizon = 6;
        c
    }

    #[test]
    fn full_run_emits_every_artifact() {
        let cfg = small("vecm_calibrated");
        let b = run_pipeline(&cfg, Stage::Diagnostics);
        assert!(b.failure.is_none(), "{:?}", b.failure);
        for stage in Stage::ALL {
            for id in stage.artifacts() {
                assert!(b.artifact(id).is_some(), "{id}");
            }
        }
        let t2 = b.artifact("unit_root").unwrap();
        assert_eq!(t2.sections[0].rows.len(), 16);
        assert_eq!(b.artifact("pedroni").unwrap().sections[0].rows.len(), 7);
        assert_eq!(b.artifact("heteroskedasticity").unwrap().sections[1].rows.len(), 10);
        let vecm = b.artifact("vecm_estimates").unwrap();
        assert!(vecm.meta.iter().any(|(k, _)| k == "cointegration_verdict"));
        assert!(vecm.meta.iter().any(|(k, _)| k == "config_sha256"));
    }

    #[test]
    fn fevd_rows_render_to_one_hundred() {
        let cfg = small("vecm_calibrated");
        let b = run_pipeline(&cfg, Stage::Dynamics);
        let t5 = b.artifact("variance_decomposition").unwrap();
        assert_eq!(t5.sections[0].title, "Variance Decomposition of co2");
        for s in &t5.sections {
            for row in &s.rows {
                let total: f64 = row[2..].iter().map(|c| c.render().parse::<f64>().unwrap()).sum();
                assert!((total - 100.0).abs() < 5e-4, "{total}");
            }
        }
    }

    #[test]
    fn vecm_table_has_se_and_t_after_each_coefficient() {
        let b = run_pipeline(&small("cointegrated"), Stage::Vecm);
        let ec = b.artifact("vecm_estimates").unwrap().section("Error Correction").unwrap().clone();
        assert_eq!(ec.rows.len() % 3, 0);
        for trio in ec.rows.chunks(3) {
            assert!(matches!(&trio[0][0], Cell::Text(s) if !s.is_empty()));
            assert!(matches!(&trio[1][1], Cell::Num(_)));
            assert!(trio[2][1].render().starts_with('['));
        }
        assert!(matches!(&ec.rows[0][0], Cell::Text(s) if s == "CointEq1"));
    }

    #[test]
    fn walks_record_non_cointegration() {
        let mut cfg = small("independent_walks");
        cfg.synth_entities = 20;
        cfg.synth_years = 40;
        cfg.start_year = 1983;
        let b = run_pipeline(&cfg, Stage::Cointegration);
        let rec = b.records.iter().find(|r| r.stage == Stage::Cointegration).unwrap();
        assert!(rec.detail.starts_with("not cointegrated"), "{}", rec.detail);
    }

    #[test]
    fn failing_stage_leaves_partial_bundle() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = small("cointegrated");
        cfg.min_obs = 200;
        let b = run_pipeline(&cfg, Stage::Diagnostics);
        assert!(b.failure.is_some());
        assert_eq!(b.exit_code(), crate::error::EXIT_VALIDATION);
        write_bundle(&b, dir.path(), &cfg.formats).unwrap();
        let marker = std::fs::read_to_string(dir.path().join("FAILED")).unwrap();
        assert!(marker.starts_with("stage ingest"), "{marker}");
        assert!(dir.path().join("summary.csv").exists());
    }
}
