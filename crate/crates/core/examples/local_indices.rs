//! Neighbourhood indices and the local path index on the karate club:
//! the five highest-scored non-adjacent pairs under each.
//!
//! Run with `cargo run --example local_indices`.

use linkpred::datasets::load_bundled;
use linkpred::local::{
    adamic_adar_scores, cclp_scores, jaccard_scores, local_path, resource_allocation_scores,
    LpConfig,
};
use linkpred::{Graph, ScoreTable};

fn top_pairs(g: &Graph, s: &ScoreTable, k: usize) -> Vec<String> {
    let mut pairs: Vec<(usize, usize, f64)> =
        s.iter().filter(|&(i, j, _)| !g.has_edge(i, j)).collect();
    pairs.sort_by(|a, b| b.2.total_cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));
    pairs
        .iter()
        .take(k)
        .map(|&(i, j, v)| format!("{}-{} {v:.3}", g.label(i), g.label(j)))
        .collect()
}

fn main() -> linkpred::Result<()> {
    let g = load_bundled("karate")?;
    let tables = [
        jaccard_scores(&g),
        resource_allocation_scores(&g),
        adamic_adar_scores(&g),
        cclp_scores(&g),
        local_path(&g, &LpConfig::default())?,
    ];
    for t in &tables {
        println!("{:<5} {}", t.method(), top_pairs(&g, t, 5).join(", "));
    }
    Ok(())
}
