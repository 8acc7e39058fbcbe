use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::influence::InfluenceConfig;
use crate::local::{
    adamic_adar_scores, cclp_scores, jaccard_scores, local_path, resource_allocation_scores,
    LpConfig,
};
use crate::scores::ScoreTable;
use crate::walkers::{
    lrw_score, mirw_score, rwr_score, select_walk_length, srw_score, RwrConfig, MAX_WALK_LENGTH,
    MIN_WALK_LENGTH,
};

use super::metrics::{
    auc, downsample_roc, precision_at, roc_points, AucMode, RocPoint, MAX_ROC_POINTS,
};
use super::report::{mean_std, EvalReport, MethodReport, MethodStatus, TrialMetrics, TrialSummary};
use super::split::{split, CandidateUniverse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Jc,
    Ra,
    Aa,
    Cclp,
    Lp,
    Lrw,
    Srw,
    Rwr,
    Mirw,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Jc,
        Method::Ra,
        Method::Aa,
        Method::Cclp,
        Method::Lp,
        Method::Lrw,
        Method::Srw,
        Method::Rwr,
        Method::Mirw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Jc => "jc",
            Method::Ra => "ra",
            Method::Aa => "aa",
            Method::Cclp => "cclp",
            Method::Lp => "lp",
            Method::Lrw => "lrw",
            Method::Srw => "srw",
            Method::Rwr => "rwr",
            Method::Mirw => "mirw",
        }
    }

    /// Whether the score depends on the finite walk length.
    pub fn uses_walk_length(self) -> bool {
        matches!(self, Method::Lrw | Method::Srw | Method::Mirw)
    }

    /// Parses a comma-separated list, or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<Method>> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Method::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let m: Method = part.parse()?;
            if !out.contains(&m) {
                out.push(m);
            }
        }
        if out.is_empty() {
            return Err(Error::invalid("no methods selected"));
        }
        Ok(out)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let valid: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
                Error::invalid(format!(
                    "unknown method `{s}`; valid methods: {}, all",
                    valid.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AucSetting {
    Exact,
    Sampled { samples: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopL {
    /// L equals the number of held-out edges.
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub dataset: String,
    pub methods: Vec<Method>,
    pub test_ratio: f64,
    pub trials: usize,
    /// Trial `k` uses seed `master_seed + k`.
    pub master_seed: u64,
    /// Overrides the ASPL-derived walk length.
    pub walk_length: Option<usize>,
    /// Evaluate walk methods at every length in `2..=7`.
    pub sweep_t: bool,
    pub lp: LpConfig,
    pub rwr: RwrConfig,
    pub influence: InfluenceConfig,
    pub auc: AucSetting,
    pub top_l: TopL,
    pub record_timings: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            dataset: String::new(),
            methods: Method::ALL.to_vec(),
            test_ratio: 0.10,
            trials: 10,
            master_seed: 42,
            walk_length: None,
            sweep_t: false,
            lp: LpConfig::default(),
            rwr: RwrConfig::default(),
            influence: InfluenceConfig::default(),
            auc: AucSetting::Exact,
            top_l: TopL::Auto,
            record_timings: false,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return Err(Error::invalid("no methods selected"));
        }
        if !(self.test_ratio > 0.0 && self.test_ratio < 1.0) {
            return Err(Error::invalid(format!(
                "test ratio {} outside (0, 1)",
                self.test_ratio
            )));
        }
        if self.trials == 0 {
            return Err(Error::invalid("at least one trial is required"));
        }
        if self.walk_length == Some(0) {
            return Err(Error::invalid("walk length must be at least 1"));
        }
        if let AucSetting::Sampled { samples: 0 } = self.auc {
            return Err(Error::invalid("sampled AUC needs at least one comparison"));
        }
        if self.top_l == TopL::Fixed(0) {
            return Err(Error::invalid("top-L must be at least 1"));
        }
        Ok(())
    }

    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.master_seed.wrapping_add(trial as u64)
    }
}

/// Scores every pair of `train` with one method.
pub fn score_method(
    method: Method,
    train: &Graph,
    t: usize,
    cfg: &BenchConfig,
) -> Result<ScoreTable> {
    match method {
        Method::Jc => Ok(jaccard_scores(train)),
        Method::Ra => Ok(resource_allocation_scores(train)),
        Method::Aa => Ok(adamic_adar_scores(train)),
        Method::Cclp => Ok(cclp_scores(train)),
        Method::Lp => local_path(train, &cfg.lp),
        Method::Lrw => lrw_score(train, t),
        Method::Srw => srw_score(train, t),
        Method::Rwr => rwr_score(train, &cfg.rwr),
        Method::Mirw => mirw_score(train, t, &cfg.influence),
    }
}

struct Job {
    label: String,
    method: Method,
    t: Option<usize>,
}

fn jobs(cfg: &BenchConfig, walk_length: usize) -> Vec<Job> {
    let mut out = Vec::new();
    for &method in &cfg.methods {
        if method.uses_walk_length() && cfg.sweep_t {
            for t in MIN_WALK_LENGTH..=MAX_WALK_LENGTH {
                out.push(Job {
                    label: format!("{method}_t{t}"),
                    method,
                    t: Some(t),
                });
            }
        } else {
            out.push(Job {
                label: method.name().to_string(),
                method,
                t: method.uses_walk_length().then_some(walk_length),
            });
        }
    }
    out
}

type JobOutcome = Result<(TrialMetrics, Option<Vec<RocPoint>>)>;

fn run_trial(
    g: &Graph,
    cfg: &BenchConfig,
    jobs: &[Job],
    walk_length: usize,
    trial: usize,
) -> Result<(TrialSummary, Vec<JobOutcome>)> {
    let seed = cfg.trial_seed(trial);
    let split = split(g, cfg.test_ratio, seed)?;
    let universe = CandidateUniverse::from_split(&split);
    let l = match cfg.top_l {
        TopL::Auto => split.test_edges.len(),
        TopL::Fixed(l) => l,
    };
    let auc_mode = match cfg.auc {
        AucSetting::Exact => AucMode::ExactRank,
        AucSetting::Sampled { samples } => AucMode::Sampled { samples, seed },
    };
    let outcomes = jobs
        .par_iter()
        .map(|job| {
            let t = job.t.unwrap_or(walk_length);
            let started = Instant::now();
            let scores = score_method(job.method, &split.train, t, cfg)?;
            let wall_ms = if cfg.record_timings {
                started.elapsed().as_millis() as u64
            } else {
                0
            };
            if !scores.all_finite() {
                return Err(Error::UndefinedMetric(format!(
                    "{} produced non-finite scores",
                    job.label
                )));
            }
            let metrics = TrialMetrics {
                trial,
                seed,
                auc: auc(&scores, &universe, auc_mode)?,
                precision: precision_at(&scores, &universe, l, seed)?,
                l,
                t: job.t,
                wall_ms,
            };
            let roc = if trial == 0 {
                Some(downsample_roc(
                    &roc_points(&scores, &universe)?,
                    MAX_ROC_POINTS,
                ))
            } else {
                None
            };
            Ok((metrics, roc))
        })
        .collect();
    let summary = TrialSummary {
        trial,
        seed,
        test_edges: split.test_edges.len(),
        candidates: universe.len(),
    };
    Ok((summary, outcomes))
}

/// Repeated random hold-out evaluation of every configured method on `g`.
///
/// Trials run in parallel; each method is scored on the identical split of
/// its trial. A failing method is recorded in its row without aborting the
/// others.
pub fn run_benchmark(g: &Graph, cfg: &BenchConfig) -> Result<EvalReport> {
    cfg.validate()?;
    if g.edge_count() < 2 {
        return Err(Error::invalid("benchmarking needs at least two edges"));
    }
    let walk_length = match cfg.walk_length {
        Some(t) => t,
        None => select_walk_length(g)?,
    };
    let jobs = jobs(cfg, walk_length);
    let per_trial: Vec<(TrialSummary, Vec<JobOutcome>)> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| run_trial(g, cfg, &jobs, walk_length, trial))
        .collect::<Result<_>>()?;

    let mut methods = Vec::with_capacity(jobs.len());
    for (k, job) in jobs.iter().enumerate() {
        let mut trials = Vec::with_capacity(cfg.trials);
        let mut roc = None;
        let mut status = MethodStatus::Ok;
        for (summary, outcomes) in &per_trial {
            match &outcomes[k] {
                Ok((metrics, curve)) => {
                    trials.push(metrics.clone());
                    if curve.is_some() {
                        roc = curve.clone();
                    }
                }
                Err(e) => {
                    if status == MethodStatus::Ok {
                        status = MethodStatus::Failed {
                            trial: summary.trial,
                            error: e.to_string(),
                        };
                    }
                }
            }
        }
        let ok = status == MethodStatus::Ok;
        let aucs: Vec<f64> = trials.iter().map(|t| t.auc).collect();
        let precs: Vec<f64> = trials.iter().map(|t| t.precision).collect();
        let auc_stats = mean_std(&aucs).filter(|_| ok);
        let prec_stats = mean_std(&precs).filter(|_| ok);
        methods.push(MethodReport {
            method: job.label.clone(),
            status,
            trials,
            mean_auc: auc_stats.map(|s| s.0),
            std_auc: auc_stats.map(|s| s.1),
            mean_precision: prec_stats.map(|s| s.0),
            std_precision: prec_stats.map(|s| s.1),
            roc,
        });
    }

    Ok(EvalReport {
        dataset: cfg.dataset.clone(),
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        walk_length,
        config: cfg.clone(),
        trials: per_trial.into_iter().map(|(s, _)| s).collect(),
        methods,
    })
}

/// One benchmark per training fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub train_fractions: Vec<f64>,
    pub reports: Vec<EvalReport>,
}

/// Runs [`run_benchmark`] once per training fraction, holding out
/// `1 - fraction` of the edges each time.
pub fn training_size_sweep(
    g: &Graph,
    cfg: &BenchConfig,
    train_fractions: &[f64],
) -> Result<SweepReport> {
    if train_fractions.is_empty() {
        return Err(Error::invalid("no training fractions given"));
    }
    for &f in train_fractions {
        if !(f > 0.0 && f < 1.0) {
            return Err(Error::invalid(format!(
                "training fraction {f} outside (0, 1)"
            )));
        }
    }
    let reports = train_fractions
        .iter()
        .map(|&f| {
            let run_cfg = BenchConfig {
                test_ratio: 1.0 - f,
                ..cfg.clone()
            };
            run_benchmark(g, &run_cfg)
        })
        .collect::<Result<_>>()?;
    Ok(SweepReport {
        train_fractions: train_fractions.to_vec(),
        reports,
    })
}

impl SweepReport {
    pub fn all_ok(&self) -> bool {
        self.reports.iter().all(EvalReport::all_ok)
    }

    /// `ratio,method,mean_auc,std_auc`, one row per fraction × method.
    pub fn sweep_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["ratio", "method", "mean_auc", "std_auc"])?;
        for (f, report) in self.train_fractions.iter().zip(&self.reports) {
            for m in &report.methods {
                let cell = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
                w.write_record([
                    f.to_string(),
                    m.method.clone(),
                    cell(m.mean_auc),
                    cell(m.std_auc),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn report_dir_name(fraction: f64) -> String {
        format!("train_{fraction:.2}")
    }

    /// Writes each report under `train_<fraction>/` plus `sweep.csv`.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        for (f, report) in self.train_fractions.iter().zip(&self.reports) {
            report.write_to(&dir.join(Self::report_dir_name(*f)))?;
        }
        fs::write(dir.join("sweep.csv"), self.sweep_csv()?)?;
        Ok(())
    }
}
