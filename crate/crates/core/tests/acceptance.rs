//! Acceptance report: one PASS/FAIL line per criterion, preceded by
//! indented detail lines. Exits non-zero when any criterion fails.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use common::*;
use linkpred::datasets::load_bundled;
use linkpred::eval::{
    auc, auc_from_classes, run_benchmark, split, test_edge_count, training_size_sweep, AucMode,
    BenchConfig, CandidateUniverse, EvalReport, Method,
};
use linkpred::influence::{
    ami, ami_from_parts, ami_transition_matrix, mutual_information, InfluenceConfig,
};
use linkpred::local::{
    adamic_adar_scores, cclp_scores, jaccard_scores, local_path, resource_allocation_scores,
    LpConfig,
};
use linkpred::transition::uniform_transition_matrix;
use linkpred::walkers::{
    lrw_score, mirw_score, propagate, rwr_score, srw_score, RwrConfig, MAX_WALK_LENGTH,
    MIN_WALK_LENGTH,
};
use linkpred::{Graph, ScoreTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const AUC_TOLERANCE: f64 = 0.06;

struct Outcome {
    pass: bool,
    summary: String,
}

fn detail(line: impl AsRef<str>) {
    println!("    {}", line.as_ref());
}

fn config_name(cfg: &InfluenceConfig) -> String {
    format!("{:?}/{:?}", cfg.cn_mode, cfg.direction).to_lowercase()
}

fn mean_auc(report: &EvalReport, label: &str) -> f64 {
    report
        .method(label)
        .and_then(|m| m.mean_auc)
        .unwrap_or(f64::NAN)
}

fn defaults(dataset: &str) -> BenchConfig {
    BenchConfig {
        dataset: dataset.into(),
        ..BenchConfig::default()
    }
}

// ---------------------------------------------------------------- 1

const TARGETS: [(&str, Method, f64); 11] = [
    ("karate", Method::Mirw, 0.9057),
    ("karate", Method::Lrw, 0.8629),
    ("karate", Method::Srw, 0.8648),
    ("karate", Method::Ra, 0.7639),
    ("karate", Method::Aa, 0.7733),
    ("karate", Method::Jc, 0.7464),
    ("karate", Method::Cclp, 0.8404),
    ("karate", Method::Lp, 0.7898),
    ("karate", Method::Rwr, 0.8056),
    ("dolphins", Method::Mirw, 0.8001),
    ("football", Method::Mirw, 0.8603),
];

/// Mean AUC of every walk method at every length under one influence
/// configuration; labels look like `mirw_t3`.
fn walk_length_grid(
    g: &Graph,
    dataset: &str,
    influence: InfluenceConfig,
    with_baselines: bool,
) -> EvalReport {
    let mut methods = vec![Method::Mirw];
    if with_baselines {
        methods.extend([Method::Lrw, Method::Srw]);
    }
    let cfg = BenchConfig {
        methods,
        sweep_t: true,
        influence,
        ..defaults(dataset)
    };
    run_benchmark(g, &cfg).unwrap()
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let mut misses = Vec::new();
    for dataset in ["karate", "dolphins", "football"] {
        let g = load_bundled(dataset).unwrap();
        let base = run_benchmark(&g, &defaults(dataset)).unwrap();
        let mut grids: Vec<(InfluenceConfig, EvalReport)> = Vec::new();
        for (k, (cn, dir)) in ALL_CONFIGS.iter().enumerate() {
            let cfg = InfluenceConfig::new(*cn, *dir);
            grids.push((cfg, walk_length_grid(&g, dataset, cfg, k == 0)));
        }
        for &(_, method, target) in TARGETS.iter().filter(|t| t.0 == dataset) {
            let got = mean_auc(&base, method.name());
            let within = |x: f64| (x - target).abs() <= AUC_TOLERANCE;
            let mut line = format!(
                "{dataset}/{method}: default (t={}) {got:.4} vs {target:.4}",
                base.walk_length
            );
            if within(got) {
                detail(format!("ok   {line}"));
                continue;
            }
            // documented alternatives: influence configuration and walk length
            let mut best: Option<(String, f64)> = None;
            if method.uses_walk_length() {
                for (cfg, grid) in &grids {
                    if grid.method(&format!("{method}_t2")).is_none() {
                        continue;
                    }
                    for t in MIN_WALK_LENGTH..=MAX_WALK_LENGTH {
                        let x = mean_auc(grid, &format!("{method}_t{t}"));
                        let name = if method == Method::Mirw {
                            format!("{} t={t}", config_name(cfg))
                        } else {
                            format!("t={t}")
                        };
                        if best
                            .as_ref()
                            .is_none_or(|b| (x - target).abs() < (b.1 - target).abs())
                        {
                            best = Some((name, x));
                        }
                    }
                }
            }
            match best {
                Some((name, x)) if within(x) => {
                    line += &format!("; within tolerance with {name}: {x:.4}");
                    detail(format!("ok   {line}"));
                }
                Some((name, x)) => {
                    line += &format!("; closest alternative {name}: {x:.4}");
                    detail(format!("MISS {line}"));
                    misses.push(format!("{dataset}/{method}"));
                }
                None => {
                    detail(format!("MISS {line}; no configuration applies"));
                    misses.push(format!("{dataset}/{method}"));
                }
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    Outcome {
        pass: misses.is_empty(),
        summary: if misses.is_empty() {
            format!("all 11 mean AUCs within ±{AUC_TOLERANCE} ({secs:.1}s)")
        } else {
            format!(
                "{} of 11 outside ±{AUC_TOLERANCE} under every configuration: {} ({secs:.1}s)",
                misses.len(),
                misses.join(", ")
            )
        },
    }
}

// ---------------------------------------------------------------- 2

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    for dataset in ["karate", "dolphins", "football"] {
        let g = load_bundled(dataset).unwrap();
        let cfg = BenchConfig {
            methods: vec![Method::Mirw, Method::Lrw, Method::Srw],
            ..defaults(dataset)
        };
        let r = run_benchmark(&g, &cfg).unwrap();
        let (mirw, lrw, srw) = (
            mean_auc(&r, "mirw"),
            mean_auc(&r, "lrw"),
            mean_auc(&r, "srw"),
        );
        let ok = mirw >= lrw && mirw >= srw;
        detail(format!(
            "{} {dataset} (t={}): mirw {mirw:.4}, lrw {lrw:.4}, srw {srw:.4}",
            if ok { "ok  " } else { "MISS" },
            r.walk_length
        ));
        if !ok {
            failures.push(dataset);
        }
    }
    Outcome {
        pass: failures.is_empty(),
        summary: if failures.is_empty() {
            "mirw >= lrw and srw on all three networks".into()
        } else {
            format!("mirw below lrw or srw on {}", failures.join(", "))
        },
    }
}

// ---------------------------------------------------------------- 3

fn criterion_3() -> Outcome {
    let g = load_bundled("karate").unwrap();
    let cfg = BenchConfig {
        methods: vec![
            Method::Mirw,
            Method::Jc,
            Method::Ra,
            Method::Aa,
            Method::Cclp,
        ],
        ..defaults("karate")
    };
    let r = run_benchmark(&g, &cfg).unwrap();
    let prec = |m: &str| {
        r.method(m)
            .and_then(|m| m.mean_precision)
            .unwrap_or(f64::NAN)
    };
    let mirw = prec("mirw");
    let beaten: Vec<String> = ["jc", "ra", "aa", "cclp"]
        .iter()
        .filter(|m| mirw < prec(m))
        .map(|m| format!("{m} {:.4}", prec(m)))
        .collect();
    for m in ["mirw", "jc", "ra", "aa", "cclp"] {
        detail(format!("karate precision {m:<5} {:.4}", prec(m)));
    }
    Outcome {
        pass: beaten.is_empty(),
        summary: if beaten.is_empty() {
            format!("karate mirw precision {mirw:.4} >= jc, ra, aa, cclp")
        } else {
            format!(
                "karate mirw precision {mirw:.4} below {}",
                beaten.join(", ")
            )
        },
    }
}

// ---------------------------------------------------------------- 4

fn criterion_4() -> Outcome {
    let mut graphs = 0;
    let mut worst_walk: f64 = 0.0;
    let mut worst_lp: f64 = 0.0;
    for n in 2..=6 {
        for g in connected_graphs(n) {
            graphs += 1;
            let mut pairs = vec![(uniform_transition_matrix(&g), dense_uniform(&g))];
            for (cn, dir) in ALL_CONFIGS {
                let cfg = InfluenceConfig::new(cn, dir);
                pairs.push((ami_transition_matrix(&g, &cfg), dense_ami(&g, &cfg)));
            }
            for (p, dense) in &pairs {
                let mut power = dense.clone();
                for t in 1..=4 {
                    for s in 0..n {
                        let r = propagate(p, s, t).unwrap();
                        for j in 0..n {
                            worst_walk = worst_walk.max((r.probs[j] - power[s][j]).abs());
                        }
                    }
                    power = mat_mul(&power, dense);
                }
            }
            let alpha = LpConfig::default().alpha;
            let want = lp_oracle(&g, alpha);
            for (i, j, v) in local_path(&g, &LpConfig { alpha }).unwrap().iter() {
                worst_lp = worst_lp.max((v - want[i][j]).abs());
            }
        }
    }
    detail(format!("{graphs} connected graphs with 2..=6 nodes"));
    detail(format!(
        "propagate vs matrix power: max |Δ| = {worst_walk:.1e}"
    ));
    detail(format!(
        "local path vs A² + αA³:    max |Δ| = {worst_lp:.1e}"
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut auc_mismatch = 0;
    let mut universes = 0;
    for round in 0..300 {
        let pos = rng.gen_range(1..100);
        let neg = rng.gen_range(1..(10_000 / pos).min(400));
        let levels = if round % 3 == 0 { 5 } else { 10_000 };
        let m: Vec<f64> = (0..pos)
            .map(|_| rng.gen_range(0..levels) as f64 * 0.01)
            .collect();
        let x: Vec<f64> = (0..neg)
            .map(|_| rng.gen_range(0..levels) as f64 * 0.01)
            .collect();
        universes += 1;
        if auc_from_classes(&m, &x, AucMode::ExactRank).unwrap() != brute_auc(&m, &x) {
            auc_mismatch += 1;
        }
    }
    for dataset in ["karate", "dolphins"] {
        let g = load_bundled(dataset).unwrap();
        for seed in 0..10 {
            let s = split(&g, 0.1, seed).unwrap();
            let u = CandidateUniverse::from_split(&s);
            let scores = mirw_score(&s.train, 3, &InfluenceConfig::default()).unwrap();
            let (mut m, mut x) = (Vec::new(), Vec::new());
            for (i, j, missing) in u.iter() {
                if missing {
                    m.push(scores.get(i, j))
                } else {
                    x.push(scores.get(i, j))
                }
            }
            universes += 1;
            if auc(&scores, &u, AucMode::ExactRank).unwrap() != brute_auc(&m, &x) {
                auc_mismatch += 1;
            }
        }
    }
    detail(format!(
        "exact AUC vs exhaustive comparison: {auc_mismatch} mismatches in {universes} universes"
    ));
    let pass = worst_walk < 1e-12 && worst_lp < 1e-12 && auc_mismatch == 0;
    Outcome {
        pass,
        summary: format!(
            "walk |Δ| {worst_walk:.1e}, lp |Δ| {worst_lp:.1e}, AUC mismatches {auc_mismatch}/{universes}"
        ),
    }
}

// ---------------------------------------------------------------- 5

fn symmetric_finite(t: &ScoreTable) -> bool {
    let n = t.node_count();
    t.all_finite() && (0..n).all(|i| (0..n).all(|j| i == j || t.get(i, j) == t.get(j, i)))
}

fn criterion_5() -> Outcome {
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst_row: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.gen_range(2..40);
        let p = rng.gen_range(0.02..0.5);
        let g = random_graph(&mut rng, n, p);
        worst_row = worst_row.max(uniform_transition_matrix(&g).max_row_deviation());
        for (cn, dir) in ALL_CONFIGS {
            let cfg = InfluenceConfig::new(cn, dir);
            worst_row = worst_row.max(ami_transition_matrix(&g, &cfg).max_row_deviation());
            for i in 0..n {
                for j in i + 1..n {
                    if mutual_information(&g, i, j, &cfg).unwrap()
                        != mutual_information(&g, j, i, &cfg).unwrap()
                    {
                        problems.push("mutual information asymmetric".to_string());
                    }
                }
            }
        }
        if g.edge_count() == 0 {
            continue;
        }
        let t = rng.gen_range(1..=6);
        let srw = srw_score(&g, t).unwrap();
        let mut acc = ScoreTable::zeros("sum", n);
        for l in 1..=t {
            for (i, j, v) in lrw_score(&g, l).unwrap().iter() {
                acc.add(i, j, v);
            }
        }
        if srw
            .iter()
            .any(|(i, j, v)| v.to_bits() != acc.get(i, j).to_bits())
        {
            problems.push(format!("srw differs from cumulative lrw (n={n}, t={t})"));
        }
        let tables = [
            jaccard_scores(&g),
            resource_allocation_scores(&g),
            adamic_adar_scores(&g),
            cclp_scores(&g),
            local_path(&g, &LpConfig::default()).unwrap(),
            lrw_score(&g, t).unwrap(),
            srw,
            rwr_score(&g, &RwrConfig::default()).unwrap(),
            mirw_score(&g, t, &InfluenceConfig::default()).unwrap(),
        ];
        for table in &tables {
            if !symmetric_finite(table) {
                problems.push(format!("{} table not symmetric and finite", table.method()));
            }
        }
    }
    detail(format!(
        "100 random graphs: max row-sum deviation {worst_row:.1e}"
    ));
    if worst_row >= 1e-9 {
        problems.push(format!("row sums off by {worst_row:e}"));
    }

    // six nodes: hub A of degree 4, triangle A-E-X, pendant path A-Y-W
    let g = linkpred::graph::load_edge_list("A E\nA X\nE X\nA Y\nA Z\nY W\n".as_bytes()).unwrap();
    let (a, e) = (g.node_by_label("A").unwrap(), g.node_by_label("E").unwrap());
    let cfg = InfluenceConfig::default();
    let (ae, ea) = (ami(&g, a, e, &cfg).unwrap(), ami(&g, e, a, &cfg).unwrap());
    let (hand_ae, hand_ea) = ((1.0 / 3.0) * 1.5f64.ln(), 0.1 * 0.45f64.ln());
    detail(format!(
        "AMI(A,E) = {ae:.4} (hand {hand_ae:.4}), AMI(E,A) = {ea:.4} (hand {hand_ea:.4})"
    ));
    let parts_ok = (ami_from_parts(4.0 / 6.0, 2.0 / 6.0, 3.0, 6.0) - hand_ae).abs() < 1e-12;
    if !((ae - hand_ae).abs() < 1e-4
        && (ea - hand_ea).abs() < 1e-4
        && (ae - 0.1352).abs() < 1e-4
        && (ea + 0.0799).abs() < 1e-4
        && ae > ea
        && parts_ok)
    {
        problems.push("influence fixture values".into());
    }

    let nets: Vec<Graph> = ["karate", "dolphins", "football"]
        .iter()
        .map(|d| load_bundled(d).unwrap())
        .collect();
    let mut bad_splits = 0;
    for seed in 0..1000u64 {
        let g = &nets[seed as usize % 3];
        let ratio = [0.1, 0.3, 0.5][(seed / 3) as usize % 3];
        let s = split(g, ratio, seed).unwrap();
        let all: HashSet<(usize, usize)> = g.edges().collect();
        let train: HashSet<(usize, usize)> = s.train.edges().collect();
        let test: HashSet<(usize, usize)> = s.test_edges.iter().copied().collect();
        let exact = test.len() == s.test_edges.len()
            && test.len() == test_edge_count(g.edge_count(), ratio)
            && train.is_disjoint(&test)
            && &train | &test == all
            && s.train.node_count() == g.node_count();
        if !exact {
            bad_splits += 1;
        }
    }
    detail(format!(
        "1000 seeded splits: {bad_splits} not an exact partition"
    ));
    if bad_splits > 0 {
        problems.push(format!("{bad_splits} bad splits"));
    }
    problems.dedup();
    Outcome {
        pass: problems.is_empty(),
        summary: if problems.is_empty() {
            "row-stochastic, symmetric MI, fixture AMI, srw = Σ lrw bitwise, symmetric finite tables, exact splits".into()
        } else {
            problems.join("; ")
        },
    }
}

// ---------------------------------------------------------------- 6

fn criterion_6() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |sub: &str| {
        let out = dir.path().join(sub);
        let status = Command::new(env!("CARGO_BIN_EXE_linkpred"))
            .args([
                "bench",
                "karate",
                "--methods",
                "all",
                "--seed",
                "42",
                "--out",
                out.to_str().unwrap(),
            ])
            .output()
            .unwrap()
            .status;
        assert!(status.success());
        std::fs::read(out.join("metrics.csv")).unwrap()
    };
    let (a, b) = (run("first"), run("second"));
    detail(format!(
        "metrics.csv sizes {} and {} bytes",
        a.len(),
        b.len()
    ));
    Outcome {
        pass: a == b,
        summary: if a == b {
            "two runs wrote byte-identical metrics.csv".into()
        } else {
            "metrics.csv differs between runs".into()
        },
    }
}

// ---------------------------------------------------------------- 7

fn criterion_7() -> Outcome {
    let g = load_bundled("karate").unwrap();
    let cfg = BenchConfig {
        methods: vec![Method::Mirw],
        ..defaults("karate")
    };
    let fractions = [0.5, 0.6, 0.7, 0.8, 0.9];
    let sweep = training_size_sweep(&g, &cfg, &fractions).unwrap();
    let stats: Vec<(f64, f64)> = sweep
        .reports
        .iter()
        .map(|r| {
            let m = r.method("mirw").unwrap();
            (m.mean_auc.unwrap(), m.std_auc.unwrap())
        })
        .collect();
    for (f, (m, s)) in fractions.iter().zip(&stats) {
        detail(format!("train {f}: mirw {m:.4} ± {s:.4}"));
    }
    let drops: Vec<String> = stats
        .windows(2)
        .zip(fractions.windows(2))
        .filter(|(w, _)| {
            let pooled = ((w[0].1.powi(2) + w[1].1.powi(2)) / 2.0).sqrt();
            w[1].0 < w[0].0 - pooled
        })
        .map(|(_, f)| format!("{}→{}", f[0], f[1]))
        .collect();
    Outcome {
        pass: drops.is_empty(),
        summary: if drops.is_empty() {
            "karate mirw AUC non-decreasing within one pooled std over 0.5..0.9".into()
        } else {
            format!("drops beyond one pooled std at {}", drops.join(", "))
        },
    }
}

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check); 7] = [
        ("1 table AUC within tolerance", criterion_1),
        ("2 mirw beats lrw and srw", criterion_2),
        ("3 karate precision ordering", criterion_3),
        ("4 oracle equivalence", criterion_4),
        ("5 invariants", criterion_5),
        ("6 deterministic output", criterion_6),
        ("7 training-size trend", criterion_7),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        println!("criterion {name}");
        let o = check();
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.summary
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
