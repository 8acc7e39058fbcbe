//! Accuracy against the share of edges kept for training, for the
//! mutual-influence walk and two baselines on the karate club.
//!
//! Run with `cargo run --release --example training_sweep`.

use linkpred::datasets::load_bundled;
use linkpred::eval::{training_size_sweep, BenchConfig, Method};

fn main() -> linkpred::Result<()> {
    let g = load_bundled("karate")?;
    let cfg = BenchConfig {
        dataset: "karate".into(),
        methods: vec![Method::Mirw, Method::Srw, Method::Ra],
        ..BenchConfig::default()
    };
    let fractions = [0.5, 0.6, 0.7, 0.8, 0.9];
    let sweep = training_size_sweep(&g, &cfg, &fractions)?;

    print!("{:<8}", "train");
    for m in &cfg.methods {
        print!("{:>16}", m.name());
    }
    println!();
    for (f, report) in fractions.iter().zip(&sweep.reports) {
        print!("{f:<8}");
        for m in &report.methods {
            print!(
                "{:>9.4} ±{:.3}",
                m.mean_auc.unwrap_or(f64::NAN),
                m.std_auc.unwrap_or(f64::NAN)
            );
        }
        println!();
    }
    Ok(())
}
