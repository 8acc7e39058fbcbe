//! Independent reference implementations shared by the integration tests.
//! Everything here works on dense matrices and plain loops so that it
//! shares no code path with the library.

#![allow(dead_code)]

use linkpred::influence::{CnMode, Direction, InfluenceConfig};
use linkpred::Graph;
use rand::Rng;

pub type Dense = Vec<Vec<f64>>;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut a = vec![vec![false; n]; n];
    for (i, j) in g.edges() {
        a[i][j] = true;
        a[j][i] = true;
    }
    a
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every connected labelled graph on `n` nodes.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if n == 1 || is_connected(n, &edges) {
            out.push(Graph::from_edges(n, &edges).unwrap());
        }
    }
    out
}

/// Erdős–Rényi graph; may be disconnected or have isolated nodes.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut c = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0.0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

pub fn mat_pow(p: &Dense, t: usize) -> Dense {
    let n = p.len();
    let mut r: Dense = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for _ in 0..t {
        r = mat_mul(&r, p);
    }
    r
}

fn normalise_rows(a: &[Vec<bool>], w: impl Fn(usize, usize) -> f64) -> Dense {
    let n = a.len();
    let mut p = vec![vec![0.0; n]; n];
    for i in 0..n {
        let nbrs: Vec<usize> = (0..n).filter(|&j| a[i][j]).collect();
        if nbrs.is_empty() {
            p[i][i] = 1.0;
            continue;
        }
        let raw: Vec<f64> = nbrs.iter().map(|&j| w(i, j).max(0.0)).collect();
        let total: f64 = raw.iter().sum();
        for (&j, &x) in nbrs.iter().zip(&raw) {
            p[i][j] = if total > 0.0 {
                x / total
            } else {
                1.0 / nbrs.len() as f64
            };
        }
    }
    p
}

pub fn dense_uniform(g: &Graph) -> Dense {
    normalise_rows(&adjacency(g), |_, _| 1.0)
}

fn common(a: &[Vec<bool>], i: usize, j: usize) -> usize {
    (0..a.len()).filter(|&z| a[i][z] && a[j][z]).count()
}

/// Influence of `i` on `j` straight from the definitions.
pub fn ami_oracle(a: &[Vec<bool>], i: usize, j: usize, mode: CnMode) -> f64 {
    let n = a.len() as f64;
    let deg = |v: usize| a[v].iter().filter(|&&x| x).count() as f64;
    let cn = |x: usize, y: usize| {
        common(a, x, y) as f64 + if mode == CnMode::PlusTwo { 2.0 } else { 0.0 }
    };
    let (pi, pj) = (deg(i) / n, deg(j) / n);
    let denom: f64 = (0..a.len()).filter(|&k| a[j][k]).map(|k| cn(j, k)).sum();
    if denom == 0.0 || pi == 0.0 || pj == 0.0 {
        return 0.0;
    }
    let pij = pi * cn(i, j) / denom;
    if pij == 0.0 {
        0.0
    } else {
        pij * (pij / (pi * pj)).ln()
    }
}

pub fn dense_ami(g: &Graph, cfg: &InfluenceConfig) -> Dense {
    let a = adjacency(g);
    normalise_rows(&a, |i, j| match cfg.direction {
        Direction::Literal => ami_oracle(&a, i, j, cfg.cn_mode),
        Direction::Received => ami_oracle(&a, j, i, cfg.cn_mode),
    })
}

pub fn lp_oracle(g: &Graph, alpha: f64) -> Dense {
    let a: Dense = adjacency(g)
        .into_iter()
        .map(|r| r.into_iter().map(|x| if x { 1.0 } else { 0.0 }).collect())
        .collect();
    let a2 = mat_mul(&a, &a);
    let a3 = mat_mul(&a2, &a);
    a2.iter()
        .zip(&a3)
        .map(|(r2, r3)| r2.iter().zip(r3).map(|(x, y)| x + alpha * y).collect())
        .collect()
}

/// `(n' + 0.5 n'') / n` by comparing every missing score with every
/// non-existent one.
pub fn brute_auc(missing: &[f64], nonexistent: &[f64]) -> f64 {
    let (mut higher, mut ties) = (0u64, 0u64);
    for &m in missing {
        for &x in nonexistent {
            if m > x {
                higher += 1;
            } else if m == x {
                ties += 1;
            }
        }
    }
    (higher as f64 + 0.5 * ties as f64) / (missing.len() * nonexistent.len()) as f64
}

pub const ALL_CONFIGS: [(CnMode, Direction); 4] = [
    (CnMode::PlusTwo, Direction::Literal),
    (CnMode::PlusTwo, Direction::Received),
    (CnMode::Raw, Direction::Literal),
    (CnMode::Raw, Direction::Received),
];
