//! Ten seeded trials of all nine methods on a bundled network, printed as a
//! method × metric grid. Pass an output directory to also write
//! `report.json`, `metrics.csv` and the ROC files.
//!
//! Run with `cargo run --release --example benchmark -- football [OUT_DIR]`.

use std::path::Path;

use linkpred::datasets;
use linkpred::eval::{run_benchmark, BenchConfig};

fn main() -> linkpred::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "karate".into());
    let g = datasets::load(&name)?;
    let cfg = BenchConfig {
        dataset: datasets::display_name(&name),
        ..BenchConfig::default()
    };
    let report = run_benchmark(&g, &cfg)?;
    print!("{}", report.summary_table());
    if let Some(dir) = args.next() {
        report.write_to(Path::new(&dir))?;
        println!("report written to {dir}");
    }
    Ok(())
}
