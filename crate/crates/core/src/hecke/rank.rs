//! Generic ranks of families of braid words inside a product of irreducible models.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::labels::IrrepLabel;
use super::models::{build_model, IrrepModel, ModPoint};
use crate::linalg::{certified_rank, ModMatrix};
use crate::modp;

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub rank: usize,
    pub points: Vec<[i64; 3]>,
    pub ranks: Vec<usize>,
    /// true when the rank at each point was certified exactly over the rationals
    pub exact: bool,
}

/// Integer points with distinct coordinates in [2, 97].
pub fn sample_points(seed: u64, count: usize) -> Vec<[i64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let v = [rng.gen_range(2..=97), rng.gen_range(2..=97), rng.gen_range(2..=97)];
        if v[0] == v[1] || v[1] == v[2] || v[0] == v[2] || out.contains(&v) {
            continue;
        }
        out.push(v);
    }
    out
}

/// Rows are words, columns the concatenated matrix entries of `(abc)^k` times their images.
pub fn evaluation_matrix(words: &[Vec<i32>], models: &[IrrepModel], v: [i64; 3]) -> Vec<Vec<BigInt>> {
    let gens: Vec<_> = models.iter().map(|m| m.at_ints(v)).collect();
    words
        .iter()
        .map(|w| {
            let mut row = Vec::new();
            for g in &gens {
                for r in g.scaled_word(w) {
                    row.extend(r);
                }
            }
            row
        })
        .collect()
}

/// Same, modulo a prime.
pub fn evaluation_matrix_mod(words: &[Vec<i32>], models: &[IrrepModel], pt: &ModPoint) -> Option<ModMatrix> {
    let gens = models.iter().map(|m| m.at_mod(pt)).collect::<Option<Vec<_>>>()?;
    let cols: usize = models.iter().map(|m| m.dim * m.dim).sum();
    let mut out = ModMatrix::zeros(words.len(), cols, pt.p);
    for (i, w) in words.iter().enumerate() {
        let mut c = 0;
        for g in &gens {
            let m = g.word(w);
            for x in &m.data {
                out.set(i, c, *x);
                c += 1;
            }
        }
    }
    Some(out)
}

fn rank_at(words: &[Vec<i32>], models: &[IrrepModel], v: [i64; 3]) -> Result<(usize, bool), String> {
    if models.iter().any(IrrepModel::has_j) {
        // no integer model: the best of two primes with a cube root of unity
        let mut best = 0;
        for p in modp::primes_1_mod_3().take(2) {
            let vals = v.map(|x| modp::from_i64(x, p));
            let m = evaluation_matrix_mod(words, models, &ModPoint::new(p, vals)).ok_or("degenerate point")?;
            best = best.max(m.rank());
        }
        return Ok((best, false));
    }
    let mat = evaluation_matrix(words, models, v);
    Ok((certified_rank(&mat, 4000)?.rank, true))
}

/// Rank at three agreeing generic points, trying up to `budget` points.
pub fn rank_of_span_models(
    words: &[Vec<i32>],
    models: &[IrrepModel],
    seed: u64,
    budget: usize,
) -> Result<RankReport, String> {
    let candidates = sample_points(seed, budget.max(3));
    let mut points = Vec::new();
    let mut ranks = Vec::new();
    let mut exact = true;
    for v in candidates {
        let (r, ex) = rank_at(words, models, v)?;
        exact &= ex;
        points.push(v);
        ranks.push(r);
        let best = *ranks.iter().max().unwrap();
        if ranks.iter().filter(|&&x| x == best).count() >= 3 {
            return Ok(RankReport { rank: best, points, ranks, exact });
        }
    }
    Err(format!("no three agreeing points among {points:?} (ranks {ranks:?})"))
}

pub fn rank_of_span(words: &[Vec<i32>], labels: &[IrrepLabel], seed: u64) -> Result<RankReport, String> {
    let models: Vec<IrrepModel> = labels.iter().map(build_model).collect();
    rank_of_span_models(words, &models, seed, 6)
}
