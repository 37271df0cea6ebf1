//! The 16x16 R-matrix on V (x) V, its inverse, sparse braid action on tensor states
//! and the partial-trace invariant.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{Exp2, HalfLaurent, LGScalar, Laurent};
use crate::braid::BraidWord;

pub const MAX_STRANDS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{0} strands exceeds the bound of {MAX_STRANDS}")]
    TooManyStrands(usize),
    #[error("partial trace is not a multiple of the identity")]
    NotScalar,
    #[error("invariant is not an integral Laurent polynomial: {0}")]
    NotIntegral(String),
    #[error("letter {0} out of range")]
    OutOfRange(i32),
    #[error("R-matrix consistency check failed: {0}")]
    Inconsistent(&'static str),
}

pub type Matrix16 = Vec<Vec<LGScalar>>;

#[derive(Debug, Clone)]
pub struct RMatrixData {
    pub r: Matrix16,
    pub rinv: Matrix16,
    pub mu: [LGScalar; 4],
    // nonzero entries of each column: (row, value)
    r_cols: Vec<Vec<(usize, LGScalar)>>,
    rinv_cols: Vec<Vec<(usize, LGScalar)>>,
    // the same for the transposed matrices
    r_rows: Vec<Vec<(usize, LGScalar)>>,
    rinv_rows: Vec<Vec<(usize, LGScalar)>>,
}

fn mono(e: Exp2, c: i64) -> LGScalar {
    LGScalar::monomial(e, c)
}

fn t0_minus_1() -> LGScalar {
    LGScalar::from_half(HalfLaurent::from_terms([((2, 0), BigInt::from(1)), ((0, 0), BigInt::from(-1))]))
}

fn t1_minus_1() -> LGScalar {
    LGScalar::from_half(HalfLaurent::from_terms([((0, 2), BigInt::from(1)), ((0, 0), BigInt::from(-1))]))
}

/// Basis pair `(i, j)` (1-based) to matrix index.
pub fn pair_index(i: usize, j: usize) -> usize {
    4 * (i - 1) + (j - 1)
}

/// The R-matrix, entry `[row][col]`, with rows and columns indexed by `pair_index`.
pub fn rmatrix_entries() -> Matrix16 {
    let y = LGScalar::y();
    let s0s1y = &mono((1, 1), -1) * &y;
    let mut r = vec![vec![LGScalar::zero(); 16]; 16];
    let mut put = |row: usize, col: usize, v: LGScalar| r[row - 1][col - 1] = v;
    put(1, 1, mono((2, 0), 1));
    put(2, 5, mono((1, 0), 1));
    put(3, 9, mono((1, 0), 1));
    put(4, 13, LGScalar::one());
    put(5, 2, mono((1, 0), 1));
    put(5, 5, t0_minus_1());
    put(6, 6, LGScalar::from_i64(-1));
    put(7, 7, LGScalar::from_half(HalfLaurent::from_terms([((2, 2), BigInt::from(1)), ((0, 0), BigInt::from(-1))])));
    put(7, 10, mono((1, 1), -1));
    put(7, 13, s0s1y.clone());
    put(8, 14, mono((0, 1), 1));
    put(9, 3, mono((1, 0), 1));
    put(9, 9, t0_minus_1());
    put(10, 7, mono((1, 1), -1));
    put(10, 13, y.clone());
    put(11, 11, LGScalar::from_i64(-1));
    put(12, 15, mono((0, 1), 1));
    put(13, 4, LGScalar::one());
    put(13, 7, s0s1y);
    put(13, 10, y.clone());
    put(13, 13, &y * &y);
    put(14, 8, mono((0, 1), 1));
    put(14, 14, t1_minus_1());
    put(15, 12, mono((0, 1), 1));
    put(15, 15, t1_minus_1());
    put(16, 16, mono((0, 2), 1));
    r
}

pub fn mat_mul(x: &Matrix16, y: &Matrix16) -> Matrix16 {
    let n = x.len();
    let mut out = vec![vec![LGScalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if x[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&x[i][k] * &y[k][j]);
                }
            }
        }
    }
    out
}

fn mat_lin(terms: &[(&Matrix16, LGScalar)], identity_coeff: LGScalar) -> Matrix16 {
    let n = 16;
    let mut out = vec![vec![LGScalar::zero(); n]; n];
    for (m, c) in terms {
        for i in 0..n {
            for j in 0..n {
                if !m[i][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&m[i][j] * c);
                }
            }
        }
    }
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = &row[i] + &identity_coeff;
    }
    out
}

pub fn is_identity(m: &Matrix16) -> bool {
    m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
}

pub fn is_zero_matrix(m: &Matrix16) -> bool {
    m.iter().all(|row| row.iter().all(LGScalar::is_zero))
}

/// Rinv = -(R^2 + (1 - t0 - t1) R + (t0 t1 - t0 - t1) Id) / (t0 t1).
pub fn rmatrix_inverse(r: &Matrix16) -> Matrix16 {
    let r2 = mat_mul(r, r);
    let lin = LGScalar::from_half(HalfLaurent::from_terms([
        ((0, 0), BigInt::from(1)),
        ((2, 0), BigInt::from(-1)),
        ((0, 2), BigInt::from(-1)),
    ]));
    let cst = LGScalar::from_half(HalfLaurent::from_terms([
        ((2, 2), BigInt::from(1)),
        ((2, 0), BigInt::from(-1)),
        ((0, 2), BigInt::from(-1)),
    ]));
    let sum = mat_lin(&[(&r2, LGScalar::one()), (r, lin)], cst);
    let minus_one = BigInt::from(-1);
    sum.iter()
        .map(|row| row.iter().map(|x| x.div_monomial((2, 2), &minus_one).expect("unit division")).collect())
        .collect()
}

/// `Id (x) M` and `M (x) Id` on V^(x)3, as dense 64x64 matrices.
fn kron_id_left(m: &Matrix16) -> Vec<Vec<LGScalar>> {
    let mut out = vec![vec![LGScalar::zero(); 64]; 64];
    for a in 0..4 {
        for i in 0..16 {
            for j in 0..16 {
                if !m[i][j].is_zero() {
                    out[16 * a + i][16 * a + j] = m[i][j].clone();
                }
            }
        }
    }
    out
}

fn kron_id_right(m: &Matrix16) -> Vec<Vec<LGScalar>> {
    let mut out = vec![vec![LGScalar::zero(); 64]; 64];
    for i in 0..16 {
        for j in 0..16 {
            if m[i][j].is_zero() {
                continue;
            }
            for a in 0..4 {
                out[4 * i + a][4 * j + a] = m[i][j].clone();
            }
        }
    }
    out
}

/// Yang-Baxter residual (R12 R23 R12 - R23 R12 R23) as a dense 64x64 matrix.
pub fn yang_baxter_residual(r: &Matrix16) -> Vec<Vec<LGScalar>> {
    let r12 = kron_id_right(r);
    let r23 = kron_id_left(r);
    let lhs = mat_mul(&mat_mul(&r12, &r23), &r12);
    let rhs = mat_mul(&mat_mul(&r23, &r12), &r23);
    lhs.iter().zip(&rhs).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

/// (R + 1)(R - t0)(R - t1).
pub fn cubic_residual(r: &Matrix16) -> Matrix16 {
    let a = mat_lin(&[(r, LGScalar::one())], LGScalar::one());
    let b = mat_lin(&[(r, LGScalar::one())], mono((2, 0), -1));
    let c = mat_lin(&[(r, LGScalar::one())], mono((0, 2), -1));
    mat_mul(&mat_mul(&a, &b), &c)
}

impl RMatrixData {
    pub fn build() -> Result<Self, InvariantError> {
        let r = rmatrix_entries();
        let rinv = rmatrix_inverse(&r);
        if !is_identity(&mat_mul(&r, &rinv)) {
            return Err(InvariantError::Inconsistent("R * Rinv != Id"));
        }
        if !is_zero_matrix(&cubic_residual(&r)) {
            return Err(InvariantError::Inconsistent("cubic relation"));
        }
        if !yang_baxter_residual(&r).iter().all(|row| row.iter().all(LGScalar::is_zero)) {
            return Err(InvariantError::Inconsistent("Yang-Baxter"));
        }
        Ok(Self::from_parts(r, rinv))
    }

    /// Builds without running the consistency gates.
    pub fn unchecked() -> Self {
        let r = rmatrix_entries();
        let rinv = rmatrix_inverse(&r);
        Self::from_parts(r, rinv)
    }

    fn from_parts(r: Matrix16, rinv: Matrix16) -> Self {
        let cols = |m: &Matrix16| -> Vec<Vec<(usize, LGScalar)>> {
            (0..16).map(|j| (0..16).filter(|&i| !m[i][j].is_zero()).map(|i| (i, m[i][j].clone())).collect()).collect()
        };
        let rows = |m: &Matrix16| -> Vec<Vec<(usize, LGScalar)>> {
            (0..16).map(|i| (0..16).filter(|&j| !m[i][j].is_zero()).map(|j| (j, m[i][j].clone())).collect()).collect()
        };
        let mu = [mono((-2, 0), 1), mono((0, 2), -1), mono((-2, 0), -1), mono((0, 2), 1)];
        RMatrixData {
            r_cols: cols(&r),
            rinv_cols: cols(&rinv),
            r_rows: rows(&r),
            rinv_rows: rows(&rinv),
            r,
            rinv,
            mu,
        }
    }
}

/// A sparse vector in V^(x)n. Basis tuples are packed two bits per slot,
/// slot 0 in the lowest bits; digits 0..3 stand for e1..e4.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StateVector {
    pub n: usize,
    pub entries: HashMap<u32, LGScalar>,
}

impl StateVector {
    pub fn basis(n: usize, tuple: &[usize]) -> Self {
        assert_eq!(tuple.len(), n);
        let mut entries = HashMap::new();
        entries.insert(pack(tuple), LGScalar::one());
        StateVector { n, entries }
    }

    pub fn get(&self, tuple: &[usize]) -> LGScalar {
        self.entries.get(&pack(tuple)).cloned().unwrap_or_default()
    }
}

/// Packs 1-based indices.
pub fn pack(tuple: &[usize]) -> u32 {
    tuple.iter().enumerate().fold(0u32, |acc, (k, &d)| acc | (((d - 1) as u32) << (2 * k)))
}

pub fn unpack(code: u32, n: usize) -> Vec<usize> {
    (0..n).map(|k| ((code >> (2 * k)) & 3) as usize + 1).collect()
}

impl RMatrixData {
    /// Applies `R` (or `Rinv` for a negative letter) on slots `|letter|`, `|letter|+1`.
    pub fn apply_letter(&self, state: &StateVector, letter: i32) -> Result<StateVector, InvariantError> {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i >= state.n {
            return Err(InvariantError::OutOfRange(letter));
        }
        Ok(StateVector { n: state.n, entries: self.apply_raw(&state.entries, letter, false) })
    }

    fn apply_raw(&self, entries: &HashMap<u32, LGScalar>, letter: i32, transpose: bool) -> HashMap<u32, LGScalar> {
        let cols = match (letter > 0, transpose) {
            (true, false) => &self.r_cols,
            (false, false) => &self.rinv_cols,
            (true, true) => &self.r_rows,
            (false, true) => &self.rinv_rows,
        };
        let shift = 2 * (letter.unsigned_abs() - 1);
        let mask = !(0xFu32 << shift);
        let mut out: HashMap<u32, LGScalar> = HashMap::with_capacity(entries.len() * 2);
        for (&code, amp) in entries {
            let lo = (code >> shift) & 3;
            let hi = (code >> (shift + 2)) & 3;
            let col = (4 * lo + hi) as usize;
            let rest = code & mask;
            for (row, v) in &cols[col] {
                let (rl, rh) = ((row / 4) as u32, (row % 4) as u32);
                let key = rest | (rl << shift) | (rh << (shift + 2));
                let add = amp * v;
                match out.get_mut(&key) {
                    Some(x) => {
                        *x = &*x + &add;
                    }
                    None => {
                        out.insert(key, add);
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// The four partial traces `sum_{j2..jn} mu_{j2}...mu_{jn} <i j|rho(w)|i j>`, one per `i`.
    pub fn partial_traces(&self, w: &BraidWord) -> Result<[LGScalar; 4], InvariantError> {
        let n = w.strands();
        if n > MAX_STRANDS {
            return Err(InvariantError::TooManyStrands(n));
        }
        let columns: Vec<u32> = (0..(1u32 << (2 * n))).collect();
        let contributions: Vec<(usize, LGScalar)> = columns
            .par_iter()
            .map(|&code| {
                let diag = self.diagonal_entry(w.letters(), code);
                let mut weight = LGScalar::one();
                for k in 1..n {
                    weight = &weight * &self.mu[((code >> (2 * k)) & 3) as usize];
                }
                ((code & 3) as usize, &diag * &weight)
            })
            .collect();
        let mut sums: [LGScalar; 4] = Default::default();
        for (i, v) in contributions {
            sums[i] = &sums[i] + &v;
        }
        Ok(sums)
    }

    /// `<code| rho(w) |code>`, meeting in the middle: the second half of the word acts
    /// forward on the ket, the transpose of the first half acts on the bra.
    pub fn diagonal_entry(&self, letters: &[i32], code: u32) -> LGScalar {
        let mid = letters.len() / 2;
        let mut ket = HashMap::new();
        ket.insert(code, LGScalar::one());
        for &l in letters[mid..].iter().rev() {
            ket = self.apply_raw(&ket, l, false);
            if ket.is_empty() {
                return LGScalar::zero();
            }
        }
        let mut bra = HashMap::new();
        bra.insert(code, LGScalar::one());
        for &l in &letters[..mid] {
            bra = self.apply_raw(&bra, l, true);
            if bra.is_empty() {
                return LGScalar::zero();
            }
        }
        let (small, large) = if ket.len() <= bra.len() { (&ket, &bra) } else { (&bra, &ket) };
        let mut acc = LGScalar::zero();
        for (k, v) in small {
            if let Some(u) = large.get(k) {
                acc = &acc + &(v * u);
            }
        }
        acc
    }

    /// The invariant of the closure of `w`, normalized to 1 on the unknot.
    pub fn lg_invariant(&self, w: &BraidWord) -> Result<Laurent, InvariantError> {
        let traces = self.partial_traces(w)?;
        if traces.iter().any(|t| t != &traces[0]) {
            return Err(InvariantError::NotScalar);
        }
        traces[0].integral_part().ok_or_else(|| InvariantError::NotIntegral(traces[0].to_string()))
    }
}

/// Convenience wrapper around a lazily built, checked R-matrix.
pub fn lg_invariant(w: &BraidWord) -> Result<Laurent, InvariantError> {
    shared().lg_invariant(w)
}

pub fn shared() -> &'static RMatrixData {
    use std::sync::OnceLock;
    static DATA: OnceLock<RMatrixData> = OnceLock::new();
    DATA.get_or_init(|| RMatrixData::build().expect("R-matrix constants are consistent"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_entries() {
        let r = rmatrix_entries();
        assert_eq!(r[0][0].to_string(), "t0");
        assert_eq!(r[15][15].to_string(), "t1");
        assert_eq!(r[12][12].to_string(), "-1 + t1 + t0 - t0*t1");
    }

    #[test]
    fn gates() {
        RMatrixData::build().unwrap();
    }

    #[test]
    fn unknot_and_trefoil() {
        let d = shared();
        assert_eq!(d.lg_invariant(&BraidWord::identity(1)).unwrap(), Laurent::one());
        assert!(d.lg_invariant(&BraidWord::identity(2)).unwrap().is_zero());
        let tre = BraidWord::parse("[1,1,1]", 2).unwrap();
        let v = d.lg_invariant(&tre).unwrap();
        let v2 = d.lg_invariant(&BraidWord::parse("[1,2,1,2]", 3).unwrap()).unwrap();
        assert_eq!(v, v2);
    }
}
