use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::bench::BenchConfig;
use super::metrics::RocPoint;

/// Metrics of one method on one trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialMetrics {
    pub trial: usize,
    pub seed: u64,
    pub auc: f64,
    pub precision: f64,
    /// Number of top-ranked pairs inspected for precision.
    pub l: usize,
    /// Walk length, for walk-based methods.
    pub t: Option<usize>,
    /// Scoring time; zero unless timings were requested.
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MethodStatus {
    Ok,
    Failed { trial: usize, error: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodReport {
    pub method: String,
    #[serde(flatten)]
    pub status: MethodStatus,
    pub trials: Vec<TrialMetrics>,
    pub mean_auc: Option<f64>,
    pub std_auc: Option<f64>,
    pub mean_precision: Option<f64>,
    pub std_precision: Option<f64>,
    /// ROC curve of the first trial, thinned for plotting.
    pub roc: Option<Vec<RocPoint>>,
}

impl MethodReport {
    pub fn is_ok(&self) -> bool {
        self.status == MethodStatus::Ok
    }

    pub fn aucs(&self) -> Vec<f64> {
        self.trials.iter().map(|t| t.auc).collect()
    }

    pub fn precisions(&self) -> Vec<f64> {
        self.trials.iter().map(|t| t.precision).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub trial: usize,
    pub seed: u64,
    pub test_edges: usize,
    pub candidates: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub dataset: String,
    pub node_count: usize,
    pub edge_count: usize,
    /// Walk length used unless a method row says otherwise.
    pub walk_length: usize,
    pub config: BenchConfig,
    pub trials: Vec<TrialSummary>,
    pub methods: Vec<MethodReport>,
}

/// Mean and population standard deviation.
pub(crate) fn mean_std(xs: &[f64]) -> Option<(f64, f64)> {
    if xs.is_empty() {
        return None;
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    Some((mean, var.sqrt()))
}

impl EvalReport {
    pub fn method(&self, name: &str) -> Option<&MethodReport> {
        self.methods.iter().find(|m| m.method == name)
    }

    pub fn all_ok(&self) -> bool {
        self.methods.iter().all(MethodReport::is_ok)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// One row per method × trial:
    /// `dataset,method,trial,seed,auc,precision,L,t,wall_ms`.
    pub fn metrics_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "dataset",
            "method",
            "trial",
            "seed",
            "auc",
            "precision",
            "L",
            "t",
            "wall_ms",
        ])?;
        for m in &self.methods {
            for t in &m.trials {
                w.write_record([
                    self.dataset.clone(),
                    m.method.clone(),
                    t.trial.to_string(),
                    t.seed.to_string(),
                    t.auc.to_string(),
                    t.precision.to_string(),
                    t.l.to_string(),
                    t.t.map(|x| x.to_string()).unwrap_or_default(),
                    t.wall_ms.to_string(),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn roc_csv(method: &MethodReport) -> Option<String> {
        let roc = method.roc.as_ref()?;
        let mut out = String::from("fpr,tpr\n");
        for p in roc {
            let _ = writeln!(out, "{},{}", p.fpr, p.tpr);
        }
        Some(out)
    }

    /// Writes `report.json`, `metrics.csv` and one `roc_<method>.csv` per
    /// method with a curve.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.json"), self.to_json()?)?;
        fs::write(dir.join("metrics.csv"), self.metrics_csv()?)?;
        for m in &self.methods {
            if let Some(csv) = Self::roc_csv(m) {
                fs::write(dir.join(format!("roc_{}.csv", m.method)), csv)?;
            }
        }
        Ok(())
    }

    /// Method × metric grid rendered from the report.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} (|V|={}, |E|={}, trials={}, t={})",
            self.dataset, self.node_count, self.edge_count, self.config.trials, self.walk_length
        );
        let _ = writeln!(
            out,
            "{:<10} {:>8} {:>8} {:>10} {:>8}  status",
            "method", "AUC", "±", "precision", "±"
        );
        for m in &self.methods {
            let fmt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.4}"));
            let status = match &m.status {
                MethodStatus::Ok => "ok".to_string(),
                MethodStatus::Failed { trial, error } => format!("failed (trial {trial}): {error}"),
            };
            let _ = writeln!(
                out,
                "{:<10} {:>8} {:>8} {:>10} {:>8}  {}",
                m.method,
                fmt(m.mean_auc),
                fmt(m.std_auc),
                fmt(m.mean_precision),
                fmt(m.std_precision),
                status
            );
        }
        out
    }
}
