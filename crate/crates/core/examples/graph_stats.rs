//! Topological summary of the bundled networks, or of any edge-list file
//! given on the command line.
//!
//! ```text
//! cargo run --example graph_stats
//! cargo run --example graph_stats -- path/to/net.edges
//! ```

use std::fs::File;
use std::io::BufReader;

use linkpred::datasets::BUNDLED;
use linkpred::graph::{graph_stats, load_edge_list, load_edge_list_with_diagnostics, Graph};

fn show(name: &str, g: &Graph) {
    let s = graph_stats(g);
    println!(
        "{name:<10} {:>5} {:>6} {:>8.3} {:>7.3} {:>7.3} {:>6.3} {:>3}",
        s.node_count,
        s.edge_count,
        s.avg_degree,
        s.avg_clustering,
        s.avg_clustering_nontrivial,
        s.aspl,
        s.diameter
    );
}

fn main() -> linkpred::Result<()> {
    println!(
        "{:<10} {:>5} {:>6} {:>8} {:>7} {:>7} {:>6} {:>3}",
        "network", "|V|", "|E|", "<K>", "<C>", "<C>k>1", "ASPL", "D"
    );
    let paths: Vec<String> = std::env::args().skip(1).collect();
    if paths.is_empty() {
        for d in &BUNDLED {
            show(d.name, &load_edge_list(d.edges.as_bytes())?);
        }
        return Ok(());
    }
    for path in paths {
        let (g, diag) = load_edge_list_with_diagnostics(BufReader::new(File::open(&path)?))?;
        show(&path, &g);
        if diag.duplicates + diag.self_loops > 0 {
            eprintln!(
                "  {path}: skipped {} duplicate(s), {} self-loop(s)",
                diag.duplicates, diag.self_loops
            );
        }
    }
    Ok(())
}
