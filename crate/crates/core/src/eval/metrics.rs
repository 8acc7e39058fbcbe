use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scores::ScoreTable;

use super::split::CandidateUniverse;

/// Emitted ROC curves are thinned to at most this many points.
pub const MAX_ROC_POINTS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AucMode {
    /// Rank statistic over every missing × non-existent comparison.
    ExactRank,
    /// `samples` random comparisons drawn with `seed`.
    Sampled { samples: usize, seed: u64 },
}

fn by_score(a: f64, b: f64) -> Ordering {
    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
}

fn split_classes(scores: &ScoreTable, universe: &CandidateUniverse) -> (Vec<f64>, Vec<f64>) {
    let mut missing = Vec::with_capacity(universe.missing_count());
    let mut nonexistent = Vec::with_capacity(universe.nonexistent_count());
    for (i, j, is_missing) in universe.iter() {
        let s = scores.get(i, j);
        if is_missing {
            missing.push(s);
        } else {
            nonexistent.push(s);
        }
    }
    (missing, nonexistent)
}

/// `(n' + 0.5 n'') / n`: the chance that a missing edge outscores a
/// non-existent one, ties counting half.
pub fn auc(scores: &ScoreTable, universe: &CandidateUniverse, mode: AucMode) -> Result<f64> {
    let (missing, nonexistent) = split_classes(scores, universe);
    auc_from_classes(&missing, &nonexistent, mode)
}

pub fn auc_from_classes(missing: &[f64], nonexistent: &[f64], mode: AucMode) -> Result<f64> {
    if missing.is_empty() || nonexistent.is_empty() {
        return Err(Error::UndefinedMetric(format!(
            "AUC needs both classes ({} missing, {} non-existent)",
            missing.len(),
            nonexistent.len()
        )));
    }
    match mode {
        AucMode::ExactRank => {
            let mut all: Vec<(f64, bool)> = missing
                .iter()
                .map(|&s| (s, true))
                .chain(nonexistent.iter().map(|&s| (s, false)))
                .collect();
            all.sort_by(|a, b| by_score(a.0, b.0));
            // integer Mann–Whitney counts, walking tie groups upwards
            let (mut higher, mut ties, mut below) = (0u128, 0u128, 0u128);
            let mut start = 0;
            while start < all.len() {
                let mut end = start;
                while end < all.len() && by_score(all[end].0, all[start].0) == Ordering::Equal {
                    end += 1;
                }
                let pos = all[start..end].iter().filter(|e| e.1).count() as u128;
                let neg = (end - start) as u128 - pos;
                higher += pos * below;
                ties += pos * neg;
                below += neg;
                start = end;
            }
            let total = missing.len() as u128 * nonexistent.len() as u128;
            Ok((2 * higher + ties) as f64 / (2 * total) as f64)
        }
        AucMode::Sampled { samples, seed } => {
            if samples == 0 {
                return Err(Error::invalid("sampled AUC needs at least one comparison"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut higher, mut ties) = (0u64, 0u64);
            for _ in 0..samples {
                let a = missing[rng.gen_range(0..missing.len())];
                let b = nonexistent[rng.gen_range(0..nonexistent.len())];
                match by_score(a, b) {
                    Ordering::Greater => higher += 1,
                    Ordering::Equal => ties += 1,
                    Ordering::Less => {}
                }
            }
            Ok((2 * higher + ties) as f64 / (2 * samples as u64) as f64)
        }
    }
}

/// Share of held-out edges among the `l` best-scored candidates. Exact score
/// ties are ordered by a shuffle seeded with `tie_seed`.
pub fn precision_at(
    scores: &ScoreTable,
    universe: &CandidateUniverse,
    l: usize,
    tie_seed: u64,
) -> Result<f64> {
    if l == 0 {
        return Err(Error::invalid("top-L precision needs L >= 1"));
    }
    if l > universe.len() {
        return Err(Error::invalid(format!(
            "L = {l} exceeds the {} candidate pairs",
            universe.len()
        )));
    }
    let mut ranked: Vec<(f64, bool)> = universe
        .iter()
        .map(|(i, j, m)| (scores.get(i, j), m))
        .collect();
    ranked.shuffle(&mut ChaCha8Rng::seed_from_u64(tie_seed));
    ranked.sort_by(|a, b| by_score(b.0, a.0));
    let hits = ranked[..l].iter().filter(|e| e.1).count();
    Ok(hits as f64 / l as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RocPoint {
    pub fpr: f64,
    pub tpr: f64,
}

/// ROC curve with one point per distinct score threshold, from (0, 0) to
/// (1, 1).
pub fn roc_points(scores: &ScoreTable, universe: &CandidateUniverse) -> Result<Vec<RocPoint>> {
    let (missing, nonexistent) = split_classes(scores, universe);
    if missing.is_empty() || nonexistent.is_empty() {
        return Err(Error::UndefinedMetric("ROC needs both classes".into()));
    }
    let mut all: Vec<(f64, bool)> = missing
        .iter()
        .map(|&s| (s, true))
        .chain(nonexistent.iter().map(|&s| (s, false)))
        .collect();
    all.sort_by(|a, b| by_score(b.0, a.0));
    let (pos_total, neg_total) = (missing.len() as f64, nonexistent.len() as f64);
    let mut points = vec![RocPoint { fpr: 0.0, tpr: 0.0 }];
    let (mut tp, mut fp) = (0usize, 0usize);
    let mut start = 0;
    while start < all.len() {
        let mut end = start;
        while end < all.len() && by_score(all[end].0, all[start].0) == Ordering::Equal {
            if all[end].1 {
                tp += 1;
            } else {
                fp += 1;
            }
            end += 1;
        }
        points.push(RocPoint {
            fpr: fp as f64 / neg_total,
            tpr: tp as f64 / pos_total,
        });
        start = end;
    }
    Ok(points)
}

/// Trapezoidal area under a ROC polyline.
pub fn roc_area(points: &[RocPoint]) -> f64 {
    points
        .windows(2)
        .map(|w| (w[1].fpr - w[0].fpr) * (w[0].tpr + w[1].tpr) / 2.0)
        .sum()
}

/// Keeps at most `max_points` evenly spaced points, always including both
/// endpoints.
pub fn downsample_roc(points: &[RocPoint], max_points: usize) -> Vec<RocPoint> {
    if points.len() <= max_points || max_points < 2 {
        return points.to_vec();
    }
    let last = points.len() - 1;
    let mut out: Vec<RocPoint> = Vec::with_capacity(max_points);
    let mut prev = usize::MAX;
    for k in 0..max_points {
        let idx = ((k * last) as f64 / (max_points - 1) as f64).round() as usize;
        if idx != prev {
            out.push(points[idx]);
            prev = idx;
        }
    }
    out
}
