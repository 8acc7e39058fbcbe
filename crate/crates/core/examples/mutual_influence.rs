//! Mutual information and asymmetric mutual influence between neighbours,
//! and the transition matrix they induce.
//!
//! Run with `cargo run --example mutual_influence`.

use linkpred::graph::load_edge_list;
use linkpred::influence::{ami, ami_transition_matrix, mutual_information, InfluenceConfig};

fn main() -> linkpred::Result<()> {
    // A is a hub of degree 4; A, E and X close a triangle.
    let g = load_edge_list("A E\nA X\nE X\nA Y\nA Z\nY W\n".as_bytes())?;
    let cfg = InfluenceConfig::default();
    let node = |l: &str| g.node_by_label(l).unwrap();
    let (a, e) = (node("A"), node("E"));

    println!("MI(A,E)  = {:.4}", mutual_information(&g, a, e, &cfg)?);
    println!(
        "AMI(A,E) = {:.4}  (influence of A on E)",
        ami(&g, a, e, &cfg)?
    );
    println!(
        "AMI(E,A) = {:.4}  (influence of E on A)",
        ami(&g, e, a, &cfg)?
    );

    let p = ami_transition_matrix(&g, &cfg);
    println!(
        "\ntransition rows (max deviation from 1: {:.1e})",
        p.max_row_deviation()
    );
    for i in 0..g.node_count() {
        let row: Vec<String> = p
            .row(i)
            .map(|(j, w)| format!("{}:{w:.3}", g.label(j)))
            .collect();
        println!("  {} -> {}", g.label(i), row.join(" "));
    }
    Ok(())
}
