//! Word-size prime field arithmetic, Chinese remaindering and rational reconstruction.
//!
//! All primes used are below 2^31, so products fit in a `u64` before reduction.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub const PRIME_BOUND: u64 = 1 << 31;

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub fn pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i64) as u64
}

pub fn from_i64(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub fn from_bigint(x: &BigInt, p: u64) -> u64 {
    if let Some(v) = x.to_i64() {
        return from_i64(v, p);
    }
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

/// Residue of a rational number, `None` if `p` divides the denominator.
pub fn from_rational(x: &BigRational, p: u64) -> Option<u64> {
    let d = from_bigint(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul(from_bigint(x.numer(), p), inv(d, p), p))
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulw = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = {
            let (mut acc, mut base, mut e) = (1u64, a % n, d);
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulw(acc, base);
                }
                base = mulw(base, base);
                e >>= 1;
            }
            acc
        };
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulw(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^31 in decreasing order, starting after `skip` of them.
pub fn primes() -> impl Iterator<Item = u64> {
    (1..PRIME_BOUND).rev().filter(|&n| n % 2 == 1 && is_prime(n))
}

/// Primes congruent to 1 mod 3 (so that a primitive cube root of unity exists).
pub fn primes_1_mod_3() -> impl Iterator<Item = u64> {
    primes().filter(|p| p % 3 == 1)
}

/// A primitive cube root of unity modulo `p` (requires p = 1 mod 3).
pub fn cube_root_of_unity(p: u64) -> Option<u64> {
    if p % 3 != 1 {
        return None;
    }
    for g in 2..p {
        let w = pow(g, (p - 1) / 3, p);
        if w != 1 {
            return Some(w);
        }
    }
    None
}

/// Symmetric representative in (-p/2, p/2].
pub fn to_signed(x: u64, p: u64) -> i64 {
    if x > p / 2 {
        x as i64 - p as i64
    } else {
        x as i64
    }
}

/// Incremental Chinese remaindering of a vector of residues.
#[derive(Clone, Debug)]
pub struct Crt {
    pub modulus: BigInt,
    pub values: Vec<BigInt>,
}

impl Crt {
    pub fn new(len: usize) -> Self {
        Crt { modulus: BigInt::one(), values: vec![BigInt::zero(); len] }
    }

    pub fn add(&mut self, residues: &[u64], p: u64) {
        assert_eq!(residues.len(), self.values.len());
        let pm = BigInt::from(p);
        let m_mod_p = from_bigint(&self.modulus, p);
        let m_inv = inv(m_mod_p, p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let cur = from_bigint(v, p);
            let t = mul(sub(r, cur, p), m_inv, p);
            *v += &self.modulus * BigInt::from(t);
        }
        self.modulus *= pm;
    }

    /// Rational reconstruction of every entry.
    pub fn rationals(&self) -> Option<Vec<BigRational>> {
        self.values.iter().map(|v| rational_reconstruct(v, &self.modulus)).collect()
    }
}

/// Find n/d with |n|, d <= sqrt(m/2) and n = x d mod m.
pub fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<BigRational> {
    let x = x.mod_floor(m);
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    Some(BigRational::new(n, d))
}

/// Dense univariate polynomials mod p, coefficients in increasing degree.
pub mod upoly {
    use super::{add, inv, mul, neg, sub};

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn degree(a: &[u64]) -> i64 {
        a.iter().rposition(|&c| c != 0).map(|d| d as i64).unwrap_or(-1)
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
    }

    pub fn mul_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (k, &y) in b.iter().enumerate() {
                out[i + k] = add(out[i + k], mul(x, y, p), p);
            }
        }
        trim(&mut out);
        out
    }

    pub fn sub_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect();
        trim(&mut out);
        out
    }

    /// Quotient and remainder of a by b (b nonzero).
    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let db = degree(b);
        assert!(db >= 0);
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let da = degree(&r);
        if da < db {
            return (Vec::new(), r);
        }
        let lc_inv = inv(b[db as usize], p);
        let mut q = vec![0; (da - db + 1) as usize];
        for i in (0..=(da - db) as usize).rev() {
            let c = mul(r[i + db as usize], lc_inv, p);
            q[i] = c;
            if c != 0 {
                for k in 0..=db as usize {
                    r[i + k] = sub(r[i + k], mul(c, b[k], p), p);
                }
            }
        }
        trim(&mut r);
        trim(&mut q);
        (q, r)
    }

    /// Newton interpolation through (xs[i], ys[i]).
    pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
        let n = xs.len();
        let mut coef: Vec<u64> = ys.to_vec();
        for k in 1..n {
            for i in (k..n).rev() {
                let num = sub(coef[i], coef[i - 1], p);
                let den = sub(xs[i], xs[i - k], p);
                coef[i] = mul(num, inv(den, p), p);
            }
        }
        // expand Newton form
        let mut poly: Vec<u64> = vec![0; n];
        for i in (0..n).rev() {
            // poly = poly * (x - xs[i]) + coef[i]
            let mut next = vec![0; n];
            for k in 0..n - 1 {
                next[k + 1] = add(next[k + 1], poly[k], p);
                next[k] = add(next[k], mul(poly[k], neg(xs[i], p), p), p);
            }
            next[0] = add(next[0], coef[i], p);
            poly = next;
        }
        trim(&mut poly);
        poly
    }

    /// Rational reconstruction of the function sampled at `xs`: returns `(num, den)` with
    /// `den(0) = 1`, chosen at the largest quotient degree of the Euclidean sequence.
    /// `None` if no candidate has a denominator that is nonzero at 0.
    pub fn rational_interpolate(xs: &[u64], ys: &[u64], p: u64) -> Option<(Vec<u64>, Vec<u64>)> {
        let n = xs.len();
        let f = interpolate(xs, ys, p);
        let mut m: Vec<u64> = vec![1];
        for &x in xs {
            m = mul_poly(&m, &[neg(x, p), 1], p);
        }
        let (mut r0, mut r1) = (m, f);
        let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        let mut best: Option<(i64, Vec<u64>, Vec<u64>)> = None;
        if degree(&r1) < 0 {
            return Some((Vec::new(), vec![1]));
        }
        // candidate r1/t1 at each step; the jump deg(q) measures confidence
        loop {
            if degree(&r1) < 0 {
                break;
            }
            let (q, r2) = divrem(&r0, &r1, p);
            let dq = degree(&q);
            let t2 = sub_poly(&t0, &mul_poly(&q, &t1, p), p);
            if dq > 0 || best.is_none() {
                // candidate before this step is r1/t1
                let cand_ok = t1.first().copied().unwrap_or(0) != 0;
                if cand_ok && (best.as_ref().map(|b| dq > b.0).unwrap_or(true)) && degree(&r1) + degree(&t1) < n as i64 {
                    best = Some((dq, r1.clone(), t1.clone()));
                }
            }
            r0 = std::mem::replace(&mut r1, r2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let (_, num, den) = best?;
        let c = inv(den[0], p);
        let num: Vec<u64> = num.iter().map(|&x| mul(x, c, p)).collect();
        let den: Vec<u64> = den.iter().map(|&x| mul(x, c, p)).collect();
        Some((num, den))
    }

    /// Rational reconstruction with prescribed degree bound on the numerator.
    pub fn rational_interpolate_deg(xs: &[u64], ys: &[u64], num_deg: i64, p: u64) -> Option<(Vec<u64>, Vec<u64>)> {
        let f = interpolate(xs, ys, p);
        let mut m: Vec<u64> = vec![1];
        for &x in xs {
            m = mul_poly(&m, &[neg(x, p), 1], p);
        }
        let (mut r0, mut r1) = (m, f);
        let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        while degree(&r1) > num_deg {
            let (q, r2) = divrem(&r0, &r1, p);
            let t2 = sub_poly(&t0, &mul_poly(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let c0 = *t1.first()?;
        if c0 == 0 {
            return None;
        }
        let c = inv(c0, p);
        let num: Vec<u64> = r1.iter().map(|&x| mul(x, c, p)).collect();
        let den: Vec<u64> = t1.iter().map(|&x| mul(x, c, p)).collect();
        Some((num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_pow() {
        let p = primes().next().unwrap();
        for a in [1u64, 2, 12345, p - 1] {
            assert_eq!(mul(a, inv(a, p), p), 1);
        }
        assert_eq!(pow(3, p - 1, p), 1);
    }

    #[test]
    fn largest_primes_below_bound() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps, vec![2147483647, 2147483629, 2147483587]);
    }

    #[test]
    fn crt_recovers_fraction() {
        let x = BigRational::new(BigInt::from(-123456789), BigInt::from(987654321));
        let mut crt = Crt::new(1);
        for p in primes().take(3) {
            crt.add(&[from_rational(&x, p).unwrap()], p);
        }
        assert_eq!(crt.rationals().unwrap()[0], x);
    }

    #[test]
    fn univariate_rational_reconstruction() {
        let p = primes().next().unwrap();
        // (3 + x^2) / (1 + 2x + 5x^3)
        let num = [3u64, 0, 1];
        let den = [1u64, 2, 0, 5];
        let xs: Vec<u64> = (1..12).collect();
        let ys: Vec<u64> = xs
            .iter()
            .map(|&x| mul(upoly::eval(&num, x, p), inv(upoly::eval(&den, x, p), p), p))
            .collect();
        let (n, d) = upoly::rational_interpolate(&xs, &ys, p).unwrap();
        assert_eq!(n, num.to_vec());
        assert_eq!(d, den.to_vec());
        let (n, d) = upoly::rational_interpolate_deg(&xs[..7], &ys[..7], 2, p).unwrap();
        assert_eq!(n, num.to_vec());
        assert_eq!(d, den.to_vec());
    }

    #[test]
    fn cube_root() {
        let p = primes_1_mod_3().next().unwrap();
        let w = cube_root_of_unity(p).unwrap();
        assert_eq!(add(add(mul(w, w, p), w, p), 1, p), 0);
    }
}
