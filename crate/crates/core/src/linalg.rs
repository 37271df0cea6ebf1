//! Dense linear algebra over word-size prime fields, and exact rank certification
//! over the integers by modular computation plus lifted kernel certificates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::modp::{self, Crt};

/// Row-major matrix over Z/p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    pub rows: usize,
    pub cols: usize,
    pub p: u64,
    pub data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        ModMatrix { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], cols: usize, p: u64) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        ModMatrix { rows: rows.len(), cols, p, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, o.rows);
        let p = self.p;
        let mut out = ModMatrix::zeros(self.rows, o.cols, p);
        for i in 0..self.rows {
            let orow = &mut out.data[i * o.cols..(i + 1) * o.cols];
            for k in 0..self.cols {
                let x = self.data[i * self.cols + k];
                if x == 0 {
                    continue;
                }
                let brow = &o.data[k * o.cols..(k + 1) * o.cols];
                for (dst, &y) in orow.iter_mut().zip(brow) {
                    *dst = (*dst + x * y) % p;
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, o: &ModMatrix, k: u64) {
        let p = self.p;
        for (x, &y) in self.data.iter_mut().zip(&o.data) {
            *x = (*x + k * y) % p;
        }
    }

    pub fn trace(&self) -> u64 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| modp::add(acc, self.at(i, i), self.p))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut out = ModMatrix::zeros(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = modp::inv(self.data[r * cols + c], p);
            for j in c..cols {
                self.data[r * cols + j] = modp::mul(self.data[r * cols + j], inv, p);
            }
            let pivot_row: Vec<u64> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                let row = &mut self.data[i * cols + c..(i + 1) * cols];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + nf * y) % p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel, one vector per free column (free entry 1).
    pub fn nullspace(&self) -> (Vec<usize>, Vec<Vec<u64>>) {
        let mut m = self.clone();
        let pivots = m.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = modp::neg(m.at(r, f), p);
            }
            basis.push(v);
        }
        (pivots, basis)
    }

    /// Solves `self * x = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = ModMatrix::zeros(n, n + 1, self.p);
        for i in 0..n {
            aug.data[i * (n + 1)..i * (n + 1) + n].copy_from_slice(self.row(i));
            aug.data[i * (n + 1) + n] = rhs[i];
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some((0..n).map(|i| aug.at(i, n)).collect())
    }

    /// Indices of a maximal set of linearly independent rows, in increasing order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut t = self.transpose();
        t.rref()
    }
}

/// Exact rank of an integer matrix, certified from both sides: a modular rank gives the
/// lower bound, and an exactly verified kernel basis gives the upper bound.
#[derive(Debug, Clone)]
pub struct RankCertificate {
    pub rank: usize,
    /// kernel vectors verified exactly (on the smaller side)
    pub kernel_dim: usize,
    pub primes_used: usize,
}

fn reduce(mat: &[Vec<BigInt>], p: u64) -> ModMatrix {
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut m = ModMatrix::zeros(mat.len(), cols, p);
    for (i, r) in mat.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m.set(i, j, modp::from_bigint(x, p));
        }
    }
    m
}

fn transpose_big(mat: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    (0..cols).map(|j| mat.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Exact rank of `mat` over Q. Fails only if no kernel certificate is found within
/// `max_primes` primes.
pub fn certified_rank(mat: &[Vec<BigInt>], max_primes: usize) -> Result<RankCertificate, String> {
    let rows = mat.len();
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    if rows == 0 || cols == 0 {
        return Ok(RankCertificate { rank: 0, kernel_dim: 0, primes_used: 0 });
    }
    // the modular rank is a lower bound; take the best of two primes to dodge unlucky ones
    let mut primes = modp::primes();
    let (pa, pb) = (primes.next().unwrap(), primes.next().unwrap());
    let (ma, mb) = (reduce(mat, pa), reduce(mat, pb));
    let (ra, rb) = (ma.rank(), mb.rank());
    let (p0, m0, r) = if ra >= rb { (pa, ma, ra) } else { (pb, mb, rb) };
    if r == rows.min(cols) {
        return Ok(RankCertificate { rank: r, kernel_dim: 0, primes_used: 1 });
    }
    // work on the side with the smaller kernel
    let (work, independent) = if cols - r <= rows - r {
        let ind = m0.independent_rows();
        (mat.to_vec(), ind)
    } else {
        let t = transpose_big(mat);
        let ind = reduce(&t, p0).independent_rows();
        (t, ind)
    };
    let wcols = work[0].len();
    let sub: Vec<Vec<BigInt>> = independent.iter().map(|&i| work[i].clone()).collect();
    let (pivots0, _) = reduce(&sub, p0).nullspace();
    let kdim = wcols - pivots0.len();
    let mut crt = Crt::new(kdim * wcols);
    let mut used = 0;
    let mut next_try = 1;
    for p in [pa, pb].into_iter().chain(primes).take(max_primes) {
        let m = reduce(&sub, p);
        let (piv, basis) = m.nullspace();
        if piv != pivots0 {
            continue;
        }
        let flat: Vec<u64> = basis.concat();
        crt.add(&flat, p);
        used += 1;
        // reconstruction is attempted at doubling intervals; any candidate is checked exactly
        if used < next_try {
            continue;
        }
        next_try *= 2;
        if let Some(q) = crt.rationals() {
            if verify_kernel(&work, &q, kdim, wcols) {
                return Ok(RankCertificate { rank: wcols - kdim, kernel_dim: kdim, primes_used: used });
            }
        }
    }
    Err(format!("no kernel certificate after {used} primes (modular rank {r})"))
}

fn verify_kernel(work: &[Vec<BigInt>], flat: &[BigRational], kdim: usize, wcols: usize) -> bool {
    for k in 0..kdim {
        let v = &flat[k * wcols..(k + 1) * wcols];
        // clear denominators
        let mut den = BigInt::one();
        for x in v {
            den = num_integer::Integer::lcm(&den, x.denom());
        }
        let iv: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        for row in work {
            let mut s = BigInt::zero();
            for (a, b) in row.iter().zip(&iv) {
                if !a.is_zero() && !b.is_zero() {
                    s += a * b;
                }
            }
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Exact solution of a square rational system by Gauss-Jordan elimination.
pub fn solve_rational(a: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> =
        a.iter().zip(rhs).map(|(row, r)| row.iter().cloned().chain(std::iter::once(r.clone())).collect()).collect();
    for c in 0..n {
        let pr = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(pr, c);
        let inv = m[c][c].recip();
        for j in c..=n {
            m[c][j] = &m[c][j] * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = &m[c][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let p = modp::primes().next().unwrap();
        let m = ModMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]], 3, p);
        assert_eq!(m.rank(), 2);
        let (_, ker) = m.nullspace();
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        for i in 0..3 {
            let s = (0..3).fold(0, |acc, j| modp::add(acc, modp::mul(m.at(i, j), v[j], p), p));
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn certified_ranks() {
        let m = big(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[3, 4, 7]]);
        let c = certified_rank(&m, 10).unwrap();
        assert_eq!(c.rank, 2);
        assert_eq!(c.kernel_dim, 1);
        let full = big(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(certified_rank(&full, 10).unwrap().rank, 2);
        // a rank drop that only shows up with big entries
        let q = BigInt::from(2147483647u64);
        let m = vec![vec![q.clone(), BigInt::one()], vec![BigInt::zero(), BigInt::one()]];
        assert_eq!(certified_rank(&m, 10).unwrap().rank, 2);
    }

    #[test]
    fn rational_solve() {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        let a = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        let x = solve_rational(&a, &[r(3), r(5)]).unwrap();
        assert_eq!(x, vec![BigRational::new(4.into(), 5.into()), BigRational::new(7.into(), 5.into())]);
    }
}
