//! The relations r2 (on three strands) and r3 (on four strands) cutting the cubic Hecke
//! algebras down to LG3 and LG4.

use serde::Serialize;

use super::element::AlgebraElement;
use super::labels::IrrepLabel;
use super::models::{build_model, IrrepModel, ModPoint};
use super::rank::evaluation_matrix_mod;
use super::restriction::random_mod_points;
use super::words::{b4_4, h3_spanning, Word};
use crate::interp::reconstruct;
use crate::linalg::ModMatrix;

const MAX_PRIMES: usize = 12;

/// Exponent sum of a word; images scale by `lambda^e` when (a, b, c) scales by `lambda`.
pub fn exponent_sum(w: &[i32]) -> i64 {
    w.iter().map(|&l| l.signum() as i64).sum()
}

fn models(labels: &[IrrepLabel]) -> Vec<IrrepModel> {
    labels.iter().map(build_model).collect()
}

/// Canonical kernel vector of the evaluation map on the H3 spanning set: the basis vector
/// attached to the last free word, whose coefficient is 1.
fn r2_kernel_at(ms: &[IrrepModel], words: &[Word], b: u64, c: u64, p: u64) -> Option<(Vec<usize>, Vec<u64>)> {
    let e = evaluation_matrix_mod(words, ms, &ModPoint::new(p, [1, b, c]))?;
    let (piv, basis) = e.transpose().nullspace();
    Some((piv, basis.last()?.clone()))
}

/// r2: the combination of the 24 spanning words of H3 vanishing in every representation
/// of LG3 (`lg3`), normalised so that the last free word has coefficient 1.
pub fn derive_r2(lg3: &[IrrepLabel], seed: u64) -> Result<AlgebraElement, String> {
    let ms = models(lg3);
    let words = h3_spanning();
    let pt = random_mod_points(seed, 1)[0];
    let (pivots, v0) = r2_kernel_at(&ms, &words, pt.vals[1], pt.vals[2], pt.p).ok_or("degenerate point")?;
    let free = v0.iter().enumerate().filter(|(i, _)| !pivots.contains(i)).map(|(i, _)| i).last().ok_or("empty kernel")?;
    let degrees: Vec<i64> = words.iter().map(|w| exponent_sum(&words[free]) - exponent_sum(w)).collect();
    let sampler = |b: u64, c: u64, p: u64| {
        let (piv, v) = r2_kernel_at(&ms, &words, b, c, p)?;
        (piv == pivots).then_some(v)
    };
    let coeffs = reconstruct(&sampler, &degrees, seed, MAX_PRIMES)?;
    let mut out = AlgebraElement::new();
    for (w, c) in words.iter().zip(coeffs) {
        out.add_term(w, c);
    }
    Ok(out)
}

/// `s1^± s3^-1 s2 s3^-1 - s3^-1 s2 s3^-1 s1^±`
pub fn commutator_words(sign: i32) -> (Word, Word) {
    let x = [-3, 2, -3];
    let mut left = vec![sign];
    left.extend(x);
    let mut right = x.to_vec();
    right.push(sign);
    (left, right)
}

/// Coefficients `c_w` with `sum c_w w = s1^± X - X s1^±` in every representation of `ms`.
fn r3_solve_at(ms: &[IrrepModel], support: &[Word], sign: i32, b: u64, c: u64, p: u64) -> Option<Vec<u64>> {
    let pt = ModPoint::new(p, [1, b, c]);
    let e = evaluation_matrix_mod(support, ms, &pt)?;
    let (l, r) = commutator_words(sign);
    let t = evaluation_matrix_mod(&[l, r], ms, &pt)?;
    let (n, k) = (e.cols, e.rows);
    let mut aug = ModMatrix::zeros(n, k + 1, p);
    for i in 0..n {
        for j in 0..k {
            aug.set(i, j, e.at(j, i));
        }
        aug.set(i, k, crate::modp::sub(t.at(0, i), t.at(1, i), p));
    }
    let piv = aug.rref();
    if piv.len() != k || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some((0..k).map(|i| aug.at(i, k)).collect())
}

/// F±: `s1^± X - X s1^± - L±` with `X = s3^-1 s2 s3^-1` and `L±` the unique combination of
/// the 141-word free family agreeing with the commutator in every representation of LG4.
pub fn derive_r3(sign: i32, lg4: &[IrrepLabel], seed: u64) -> Result<AlgebraElement, String> {
    assert!(sign == 1 || sign == -1);
    let ms = models(lg4);
    let support = b4_4();
    let (l, r) = commutator_words(sign);
    let top = exponent_sum(&l);
    let degrees: Vec<i64> = support.iter().map(|w| top - exponent_sum(w)).collect();
    let sampler = |b: u64, c: u64, p: u64| r3_solve_at(&ms, &support, sign, b, c, p);
    let coeffs = reconstruct(&sampler, &degrees, seed, MAX_PRIMES)?;
    let mut out = AlgebraElement::word(&l);
    out.add_term(&r, crate::arith::RatFunc::int(-1));
    for (w, c) in support.iter().zip(coeffs) {
        out.add_term(w, -c);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct VanishingReport {
    /// (label, vanishes) for every representation examined
    pub rows: Vec<(String, bool)>,
}

impl VanishingReport {
    pub fn vanishing(&self) -> Vec<&str> {
        self.rows.iter().filter(|r| r.1).map(|r| r.0.as_str()).collect()
    }
}

/// Exact vanishing test in each model.
pub fn vanishing_exact(e: &AlgebraElement, labels: &[IrrepLabel]) -> VanishingReport {
    VanishingReport { rows: labels.iter().map(|l| (l.to_string(), e.vanishes_in(&build_model(l)))).collect() }
}

/// Vanishing test at random modular points. A nonzero image at one point proves the
/// element is nonzero; vanishing at every point is only evidence.
pub fn vanishing_mod(e: &AlgebraElement, labels: &[IrrepLabel], seed: u64) -> VanishingReport {
    let pts = random_mod_points(seed, 2);
    let rows = labels
        .iter()
        .map(|l| {
            let m = build_model(l);
            let zero = pts.iter().all(|pt| e.evaluate_mod(&m, pt).map(|x| x.is_zero()).unwrap_or(false));
            (l.to_string(), zero)
        })
        .collect();
    VanishingReport { rows }
}
