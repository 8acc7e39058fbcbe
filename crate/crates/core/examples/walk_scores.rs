//! Random-walk similarities on the dolphin network: local, superposed,
//! restarting and mutual-influence walks, with the walk length picked from
//! the average shortest path length.
//!
//! Run with `cargo run --release --example walk_scores`.

use linkpred::datasets::load_bundled;
use linkpred::influence::{CnMode, Direction, InfluenceConfig};
use linkpred::walkers::{
    lrw_score, mirw_score, rwr_score, select_walk_length, srw_score, RwrConfig,
};
use linkpred::{Graph, ScoreTable};

fn best(g: &Graph, s: &ScoreTable) -> String {
    let (i, j, v) = s
        .iter()
        .filter(|&(i, j, _)| !g.has_edge(i, j))
        .max_by(|a, b| a.2.total_cmp(&b.2))
        .expect("graph is not complete");
    format!("{}-{} ({v:.5})", g.label(i), g.label(j))
}

fn main() -> linkpred::Result<()> {
    let g = load_bundled("dolphins")?;
    let t = select_walk_length(&g)?;
    println!("walk length t = {t}");

    let received = InfluenceConfig::new(CnMode::PlusTwo, Direction::Received);
    let tables = [
        lrw_score(&g, t)?,
        srw_score(&g, t)?,
        rwr_score(&g, &RwrConfig::default())?,
        mirw_score(&g, t, &InfluenceConfig::default())?,
        mirw_score(&g, t, &received)?,
    ];
    let names = ["lrw", "srw", "rwr", "mirw", "mirw (received)"];
    for (name, table) in names.iter().zip(&tables) {
        println!("{name:<16} best unlinked pair {}", best(&g, table));
    }
    Ok(())
}
