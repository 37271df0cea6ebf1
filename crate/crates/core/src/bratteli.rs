//! The generic branching graph of the tower LG_n: nodes `[a,k]_r`, path counts and
//! algebra dimensions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    pub a: u32,
    pub k: u32,
    pub r: u32,
}

impl Weight {
    pub fn new(a: u32, k: u32, r: u32) -> Self {
        Weight { a, k, r }
    }

    pub fn is_admissible(&self) -> bool {
        if self.r == 0 {
            return self.a == 0 && self.k == 0;
        }
        self.a < self.r && self.k + self.a < self.r
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_{}", self.a, self.k, self.r)
    }
}

/// Summands of `[a,k]_r` tensored with the fundamental module.
pub fn children(w: Weight) -> Vec<Weight> {
    let r = w.r + 1;
    if w.r == 0 {
        return vec![Weight::new(0, 0, 1)];
    }
    let mut out = Vec::with_capacity(4);
    if w.a > 0 {
        out.push(Weight::new(w.a - 1, w.k + 1, r));
    }
    out.push(Weight::new(w.a, w.k, r));
    out.push(Weight::new(w.a, w.k + 1, r));
    out.push(Weight::new(w.a + 1, w.k, r));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliLevel {
    pub r: u32,
    /// path counts keyed by (a, k)
    pub counts: BTreeMap<(u32, u32), BigUint>,
}

impl BratteliLevel {
    pub fn count(&self, a: u32, k: u32) -> Option<&BigUint> {
        self.counts.get(&(a, k))
    }

    /// Sum of squared path counts.
    pub fn algebra_dim(&self) -> BigUint {
        self.counts.values().map(|c| c * c).sum()
    }
}

/// Path counts at every level up to `r`.
pub fn levels(r: u32) -> Vec<BratteliLevel> {
    let mut cur = BratteliLevel { r: 0, counts: BTreeMap::from([((0, 0), BigUint::one())]) };
    let mut out = vec![cur.clone()];
    for _ in 0..r {
        let mut next: BTreeMap<(u32, u32), BigUint> = BTreeMap::new();
        for (&(a, k), c) in &cur.counts {
            for ch in children(Weight::new(a, k, cur.r)) {
                *next.entry((ch.a, ch.k)).or_insert_with(BigUint::zero) += c;
            }
        }
        cur = BratteliLevel { r: cur.r + 1, counts: next };
        out.push(cur.clone());
    }
    out
}

pub fn level_dims(r: u32) -> BratteliLevel {
    levels(r).pop().unwrap()
}

/// Parents of a node at level `w.r - 1`.
pub fn parents(w: Weight) -> Vec<Weight> {
    if w.r == 0 {
        return Vec::new();
    }
    let prev = w.r - 1;
    let mut out = Vec::new();
    for (a, k) in level_dims(prev).counts.keys() {
        let p = Weight::new(*a, *k, prev);
        if children(p).contains(&w) {
            out.push(p);
        }
    }
    out
}

pub fn dim_lg(n: u32) -> BigUint {
    level_dims(n).algebra_dim()
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn catalan(n: u32) -> BigUint {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}

/// `(2n)!(2n+1)! / (n!(n+1)!)^2`
pub fn conjectured_dim(n: u32) -> BigUint {
    let d = factorial(n) * factorial(n + 1);
    factorial(2 * n) * factorial(2 * n + 1) / (&d * &d)
}

#[derive(Debug, Clone, Serialize)]
pub struct DimRow {
    pub n: u32,
    /// dimension of LG_{n+1}
    pub dim: String,
    pub formula: String,
    pub matches: bool,
}

/// Compares `dim LG_{n+1}` with the closed formula and with `C_n^2 (2n+1)` for `n <= max`.
pub fn check_dim_conjecture(max: u32) -> Vec<DimRow> {
    let ls = levels(max + 1);
    (1..=max)
        .map(|n| {
            let dim = ls[(n + 1) as usize].algebra_dim();
            let formula = conjectured_dim(n);
            let c = catalan(n);
            let alt = &c * &c * (2 * n + 1);
            DimRow { n, matches: dim == formula && formula == alt, dim: dim.to_string(), formula: formula.to_string() }
        })
        .collect()
}

/// Pairs of down/right lattice paths across a square of side `n+1` that meet only at
/// the two corners.
pub fn noncrossing_pairs(n: u32) -> BigUint {
    let m = (n + 1) as usize;
    // state: number of right moves taken by the upper path and by the lower path
    let mut cur = vec![vec![BigUint::zero(); m + 1]; m + 1];
    cur[0][0] = BigUint::one();
    for t in 0..2 * m {
        let mut next = vec![vec![BigUint::zero(); m + 1]; m + 1];
        for i in 0..=m {
            for j in 0..=m {
                if cur[i][j].is_zero() {
                    continue;
                }
                for (di, dj) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    let (ni, nj) = (i + di, j + dj);
                    // each path has at most m moves of each kind
                    if ni > m || nj > m || t + 1 - ni > m || t + 1 - nj > m {
                        continue;
                    }
                    if t + 1 < 2 * m && ni <= nj {
                        continue;
                    }
                    next[ni][nj] += &cur[i][j];
                }
            }
        }
        cur = next;
    }
    cur[m][m].clone()
}

/// Value of the Casimir element on `[a,k]_r`: `-2(r alpha + k)(r alpha + k + a + 1)`.
pub fn casimir_value(w: Weight, alpha: &BigRational) -> BigRational {
    let x = alpha * BigRational::from_integer(w.r.into()) + BigRational::from_integer(w.k.into());
    let y = &x + BigRational::from_integer((w.a + 1).into());
    BigRational::from_integer((-2).into()) * x * y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels() {
        assert_eq!(children(Weight::new(0, 0, 1)), vec![Weight::new(0, 0, 2), Weight::new(0, 1, 2), Weight::new(1, 0, 2)]);
        let l4 = level_dims(4);
        let got: Vec<u32> = l4.counts.values().map(|c| c.to_string().parse().unwrap()).collect();
        assert_eq!(got, vec![1, 6, 6, 1, 3, 8, 3, 3, 3, 1]);
        assert_eq!(noncrossing_pairs(1), BigUint::from(3u32));
        assert_eq!(noncrossing_pairs(2), BigUint::from(20u32));
    }
}
