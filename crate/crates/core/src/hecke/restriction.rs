//! Restriction of H4 representations to H3, via characters at random modular points.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::labels::{h3_labels, IrrepLabel};
use super::models::{build_model, IrrepModel, ModPoint};
use super::words::h3_spanning;
use crate::linalg::ModMatrix;
use crate::modp;

pub type Multiset = BTreeMap<IrrepLabel, usize>;

/// Random points modulo primes congruent to 1 mod 3.
pub fn random_mod_points(seed: u64, count: usize) -> Vec<ModPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    modp::primes_1_mod_3()
        .take(count)
        .map(|p| ModPoint::new(p, [rng.gen_range(2..p), rng.gen_range(2..p), rng.gen_range(2..p)]))
        .collect()
}

/// Traces of the images of `words` at a modular point.
pub fn character(m: &IrrepModel, words: &[Vec<i32>], pt: &ModPoint) -> Option<Vec<u64>> {
    let g = m.at_mod(pt)?;
    Some(words.iter().map(|w| g.word(w).trace()).collect())
}

/// Multiplicities of `basis` in `m`, read off the traces of `words`.
pub fn decompose_at(m: &IrrepModel, basis: &[IrrepModel], words: &[Vec<i32>], pt: &ModPoint) -> Result<Vec<usize>, String> {
    let k = basis.len();
    let mut aug = ModMatrix::zeros(words.len(), k + 1, pt.p);
    for (c, h) in basis.iter().enumerate() {
        let ch = character(h, words, pt).ok_or("degenerate point")?;
        for (i, x) in ch.into_iter().enumerate() {
            aug.set(i, c, x);
        }
    }
    let target = character(m, words, pt).ok_or("degenerate point")?;
    for (i, x) in target.into_iter().enumerate() {
        aug.set(i, k, x);
    }
    let piv = aug.rref();
    if piv.len() != k || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return Err(format!("character system for {} is singular or inconsistent", m.label));
    }
    (0..k)
        .map(|i| {
            let v = modp::to_signed(aug.at(i, k), pt.p);
            usize::try_from(v).ok().filter(|&x| x <= m.dim).ok_or_else(|| format!("non-integral multiplicity for {}", m.label))
        })
        .collect()
}

/// Decomposition of the restriction to the subalgebra generated by s1, s2, cross-checked
/// at three points.
pub fn restriction_multiplicities(m: &IrrepModel, seed: u64) -> Result<Multiset, String> {
    decompose(m, &h3_labels(), &h3_spanning(), seed)
}

/// Decomposition of the restriction to the subalgebra generated by s1.
pub fn restriction_to_h2(m: &IrrepModel, seed: u64) -> Result<Multiset, String> {
    decompose(m, &h2_labels(), &[vec![], vec![1], vec![-1]], seed)
}

pub fn h2_labels() -> Vec<IrrepLabel> {
    ["S_a", "S_b", "S_c"].iter().map(|s| s.parse().unwrap()).collect()
}

fn decompose(m: &IrrepModel, labels: &[IrrepLabel], words: &[Vec<i32>], seed: u64) -> Result<Multiset, String> {
    let basis: Vec<IrrepModel> = labels.iter().map(build_model).collect();
    let mut first: Option<Vec<usize>> = None;
    for pt in random_mod_points(seed, 3) {
        let d = decompose_at(m, &basis, words, &pt)?;
        match &first {
            None => first = Some(d),
            Some(f) if f != &d => return Err(format!("inconsistent decompositions for {}", m.label)),
            _ => {}
        }
    }
    let d = first.unwrap();
    Ok(labels.iter().cloned().zip(d).filter(|(_, k)| *k > 0).collect())
}

pub fn multiset_dim(ms: &Multiset) -> usize {
    ms.iter().map(|(l, k)| l.dim() * k).sum()
}

pub fn multiset_text(ms: &Multiset) -> String {
    let mut parts = Vec::new();
    for (l, &k) in ms {
        if k == 1 {
            parts.push(l.to_string());
        } else {
            parts.push(format!("{k}{l}"));
        }
    }
    parts.join(" + ")
}

/// True when the character vectors of the models are pairwise distinct at a random point.
pub fn pairwise_distinct(models: &[IrrepModel], seed: u64) -> bool {
    let words = super::words::all_words(3, 3);
    let pt = random_mod_points(seed, 1)[0];
    let chars: Vec<Option<Vec<u64>>> = models.iter().map(|m| character(m, &words, &pt)).collect();
    if chars.iter().any(Option::is_none) {
        return false;
    }
    (0..chars.len()).all(|i| (i + 1..chars.len()).all(|k| chars[i] != chars[k]))
}
