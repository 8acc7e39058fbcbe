//! The `linkpred` command line: `stats`, `bench` and `sweep`.
//!
//! Exit codes: 0 when everything requested completed, 1 when at least one
//! method failed on some trial, 2 for usage errors and unreadable datasets.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::datasets;
use crate::error::{Error, Result};
use crate::eval::{run_benchmark, training_size_sweep, AucSetting, BenchConfig, Method, TopL};
use crate::graph::{graph_stats, GraphStats};
use crate::influence::{CnMode, Direction, InfluenceConfig};
use crate::local::LpConfig;
use crate::walkers::RwrConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARTIAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "linkpred",
    version,
    about = "Link prediction benchmarks on undirected networks"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print |V|, |E|, <K>, <C>, ASPL and diameter.
    Stats {
        /// Edge-list path or bundled name (karate, dolphins, football).
        dataset: String,
        /// Also write stats.csv here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Repeated hold-out evaluation of the selected methods.
    Bench {
        #[command(flatten)]
        opts: BenchArgs,
        /// Fraction of edges held out per trial.
        #[arg(long, default_value_t = 0.10)]
        ratio: f64,
    },
    /// Benchmark at several training-set fractions.
    Sweep {
        #[command(flatten)]
        opts: BenchArgs,
        /// Training fractions, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        ratios: Vec<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AucModeArg {
    Exact,
    Sampled,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CnModeArg {
    Raw,
    PlusTwo,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DirectionArg {
    Literal,
    Received,
}

fn parse_top_l(s: &str) -> std::result::Result<TopL, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(TopL::Auto);
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer or `auto`, got `{s}`")),
        Ok(l) => Ok(TopL::Fixed(l)),
    }
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Edge-list path or bundled name.
    pub dataset: String,
    /// Output directory for report.json, metrics.csv and ROC files.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Master seed; trial k uses seed + k.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    /// Comma-separated subset of jc,ra,aa,cclp,lp,lrw,srw,rwr,mirw, or `all`.
    #[arg(long, default_value = "all")]
    pub methods: String,
    #[arg(long, value_enum, default_value = "exact")]
    pub auc_mode: AucModeArg,
    #[arg(long, default_value_t = 100_000)]
    pub auc_samples: usize,
    /// Pairs inspected for precision, or `auto` for the number of held-out edges.
    #[arg(long, default_value = "auto", value_parser = parse_top_l)]
    pub top_l: TopL,
    /// Walk length for lrw, srw and mirw (default: rounded ASPL in [2, 7]).
    #[arg(long)]
    pub walk_length: Option<usize>,
    /// Evaluate walk methods at every length from 2 to 7.
    #[arg(long)]
    pub sweep_t: bool,
    #[arg(long, default_value_t = 0.85)]
    pub rwr_c: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub rwr_tol: f64,
    #[arg(long, default_value_t = 1000)]
    pub rwr_max_iter: usize,
    #[arg(long, default_value_t = 0.001)]
    pub lp_alpha: f64,
    #[arg(long, value_enum, default_value = "plus-two")]
    pub cn_mode: CnModeArg,
    #[arg(long, value_enum, default_value = "literal")]
    pub influence_direction: DirectionArg,
    /// Record scoring wall time (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
}

impl BenchArgs {
    pub fn to_config(&self, test_ratio: f64) -> Result<BenchConfig> {
        let cn_mode = match self.cn_mode {
            CnModeArg::Raw => CnMode::Raw,
            CnModeArg::PlusTwo => CnMode::PlusTwo,
        };
        let direction = match self.influence_direction {
            DirectionArg::Literal => Direction::Literal,
            DirectionArg::Received => Direction::Received,
        };
        let auc = match self.auc_mode {
            AucModeArg::Exact => AucSetting::Exact,
            AucModeArg::Sampled => AucSetting::Sampled {
                samples: self.auc_samples,
            },
        };
        let cfg = BenchConfig {
            dataset: datasets::display_name(&self.dataset),
            methods: Method::parse_list(&self.methods)?,
            test_ratio,
            trials: self.trials,
            master_seed: self.seed,
            walk_length: self.walk_length,
            sweep_t: self.sweep_t,
            lp: LpConfig {
                alpha: self.lp_alpha,
            },
            rwr: RwrConfig {
                continue_prob: self.rwr_c,
                tol: self.rwr_tol,
                max_iter: self.rwr_max_iter,
            },
            influence: InfluenceConfig::new(cn_mode, direction),
            auc,
            top_l: self.top_l,
            record_timings: self.timings,
        };
        cfg.validate()?;
        if !(cfg.rwr.continue_prob > 0.0 && cfg.rwr.continue_prob < 1.0) {
            return Err(Error::invalid(format!(
                "--rwr-c {} outside (0, 1)",
                cfg.rwr.continue_prob
            )));
        }
        Ok(cfg)
    }
}

pub fn stats_csv(dataset: &str, s: &GraphStats) -> String {
    format!(
        "dataset,nodes,edges,avg_degree,avg_clustering,avg_clustering_nontrivial,aspl,diameter\n\
         {dataset},{},{},{},{},{},{},{}\n",
        s.node_count,
        s.edge_count,
        s.avg_degree,
        s.avg_clustering,
        s.avg_clustering_nontrivial,
        s.aspl,
        s.diameter
    )
}

/// `|V| |E| <K> <C> ASPL D` on one line.
pub fn stats_line(s: &GraphStats) -> String {
    format!(
        "{} {} {:.6} {:.6} {:.6} {}",
        s.node_count, s.edge_count, s.avg_degree, s.avg_clustering, s.aspl, s.diameter
    )
}

enum Failure {
    Usage(Error),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::UnknownDataset(_)
            | Error::Io(_)
            | Error::Parse { .. } => Failure::Usage(e),
            other => Failure::Runtime(other),
        }
    }
}

fn execute(cmd: &Command, out: &mut Vec<u8>) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::Stats { dataset, out: dir } => {
            let g = datasets::load(dataset)?;
            let s = graph_stats(&g);
            let name = datasets::display_name(dataset);
            let _ = writeln!(out, "# |V| |E| <K> <C> ASPL D");
            let _ = writeln!(out, "{}", stats_line(&s));
            let _ = writeln!(
                out,
                "# <C> over nodes with degree >= 2: {:.6}",
                s.avg_clustering_nontrivial
            );
            if let Some(dir) = dir {
                fs::create_dir_all(dir)
                    .map_err(Error::from)
                    .map_err(Failure::Runtime)?;
                fs::write(dir.join("stats.csv"), stats_csv(&name, &s))
                    .map_err(Error::from)
                    .map_err(Failure::Runtime)?;
            }
            Ok(EXIT_OK)
        }
        Command::Bench { opts, ratio } => {
            let cfg = opts.to_config(*ratio)?;
            let g = datasets::load(&opts.dataset)?;
            let report = run_benchmark(&g, &cfg)?;
            let _ = write!(out, "{}", report.summary_table());
            if let Some(dir) = &opts.out {
                report.write_to(dir).map_err(Failure::Runtime)?;
            }
            Ok(if report.all_ok() {
                EXIT_OK
            } else {
                EXIT_PARTIAL
            })
        }
        Command::Sweep { opts, ratios } => {
            for &r in ratios {
                if !(r > 0.0 && r < 1.0) {
                    return Err(Failure::Usage(Error::invalid(format!(
                        "training ratio {r} outside (0, 1)"
                    ))));
                }
            }
            let cfg = opts.to_config(0.10)?;
            let g = datasets::load(&opts.dataset)?;
            let sweep = training_size_sweep(&g, &cfg, ratios)?;
            for (f, report) in sweep.train_fractions.iter().zip(&sweep.reports) {
                let _ = writeln!(out, "training fraction {f}");
                let _ = write!(out, "{}", report.summary_table());
            }
            if let Some(dir) = &opts.out {
                sweep.write_to(dir).map_err(Failure::Runtime)?;
            }
            Ok(if sweep.all_ok() {
                EXIT_OK
            } else {
                EXIT_PARTIAL
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(0) => Err(Failure::Usage(Error::invalid(
            "--threads must be at least 1",
        ))),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &mut buf)),
            Err(e) => Err(Failure::Runtime(Error::invalid(e.to_string()))),
        },
        None => execute(&cli.command, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_PARTIAL
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
