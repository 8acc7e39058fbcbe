//! One hold-out split scored by hand: AUC (exact and sampled), top-L
//! precision and the ROC curve of the mutual-influence walk on the karate
//! club. The ROC points are written to `roc_mirw.csv` in the current
//! directory when `--write` is passed.
//!
//! Run with `cargo run --example evaluate_split [-- --write]`.

use linkpred::datasets::load_bundled;
use linkpred::eval::{
    auc, downsample_roc, precision_at, roc_area, roc_points, split, AucMode, CandidateUniverse,
};
use linkpred::influence::InfluenceConfig;
use linkpred::walkers::{mirw_score, select_walk_length};

fn main() -> linkpred::Result<()> {
    let g = load_bundled("karate")?;
    let seed = 42;
    let s = split(&g, 0.10, seed)?;
    let universe = CandidateUniverse::from_split(&s);
    println!(
        "{} training edges, {} held out, {} candidate pairs",
        s.train.edge_count(),
        s.test_edges.len(),
        universe.len()
    );

    let t = select_walk_length(&g)?;
    let scores = mirw_score(&s.train, t, &InfluenceConfig::default())?;
    let exact = auc(&scores, &universe, AucMode::ExactRank)?;
    let sampled = auc(
        &scores,
        &universe,
        AucMode::Sampled {
            samples: 100_000,
            seed,
        },
    )?;
    let precision = precision_at(&scores, &universe, s.test_edges.len(), seed)?;
    println!(
        "AUC exact {exact:.4}, sampled {sampled:.4}, precision@{} {precision:.4}",
        s.test_edges.len()
    );

    let roc = roc_points(&scores, &universe)?;
    println!("ROC: {} points, area {:.4}", roc.len(), roc_area(&roc));
    if std::env::args().any(|a| a == "--write") {
        let mut csv = String::from("fpr,tpr\n");
        for p in downsample_roc(&roc, 500) {
            csv.push_str(&format!("{},{}\n", p.fpr, p.tpr));
        }
        std::fs::write("roc_mirw.csv", csv)?;
        println!("wrote roc_mirw.csv");
    }
    Ok(())
}
