//! Dense reconstruction of homogeneous rational functions in a, b, c from
//! modular samples taken on the affine chart a = 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{MultiPoly, RatFunc, ZJ};
use crate::modp::{self, upoly, Crt};

/// Dense bivariate polynomial mod p: `c[i][j]` is the coefficient of `b^i c^j`.
type Dense2 = Vec<Vec<u64>>;

/// A vector-valued black box evaluated at (a, b, c) = (1, b, c) modulo p. `None` marks an
/// unusable point.
pub trait Sampler: Fn(u64, u64, u64) -> Option<Vec<u64>> + Sync {}
impl<F: Fn(u64, u64, u64) -> Option<Vec<u64>> + Sync> Sampler for F {}

#[derive(Debug, Clone, Copy)]
struct Degrees {
    num: i64,
    den: i64,
}

fn sample_line<S: Sampler>(
    f: &S,
    rng: &mut ChaCha8Rng,
    shift: (u64, u64),
    y: u64,
    count: usize,
    p: u64,
) -> Result<(Vec<u64>, Vec<Vec<u64>>), String> {
    let mut ts = Vec::with_capacity(count);
    let mut vals = Vec::with_capacity(count);
    let mut misses = 0;
    while ts.len() < count {
        let t = rng.gen_range(1..p);
        if ts.contains(&t) {
            continue;
        }
        let b = modp::add(t, shift.0, p);
        let c = modp::add(modp::mul(y, t, p), shift.1, p);
        match f(b, c, p) {
            Some(v) => {
                ts.push(t);
                vals.push(v);
            }
            None => {
                misses += 1;
                if misses > 50 {
                    return Err("too many degenerate sample points".into());
                }
            }
        }
    }
    Ok((ts, vals))
}

fn column(vals: &[Vec<u64>], k: usize) -> Vec<u64> {
    vals.iter().map(|v| v[k]).collect()
}

fn checks_out(num: &[u64], den: &[u64], xs: &[u64], ys: &[u64], p: u64) -> bool {
    xs.iter().zip(ys).all(|(&x, &y)| {
        let d = upoly::eval(den, x, p);
        d != 0 && modp::mul(y, d, p) == upoly::eval(num, x, p)
    })
}

const CHECKS: usize = 3;

/// Degrees along one random line, found by doubling the number of samples.
fn detect_degrees<S: Sampler>(
    f: &S,
    rng: &mut ChaCha8Rng,
    shift: (u64, u64),
    p: u64,
) -> Result<Vec<Degrees>, String> {
    let mut n = 8;
    while n <= 2048 {
        let y = rng.gen_range(1..p);
        let (ts, vals) = sample_line(f, rng, shift, y, n + CHECKS, p)?;
        let width = vals[0].len();
        let mut out = Vec::with_capacity(width);
        for k in 0..width {
            let ys = column(&vals, k);
            let Some((num, den)) = upoly::rational_interpolate(&ts[..n], &ys[..n], p) else { break };
            if !checks_out(&num, &den, &ts[n..], &ys[n..], p) {
                break;
            }
            out.push(Degrees { num: upoly::degree(&num), den: upoly::degree(&den) });
        }
        if out.len() == width {
            return Ok(out);
        }
        n *= 2;
    }
    Err("degree detection did not stabilise".into())
}

/// `q(x - s)` for a dense univariate `q`.
fn taylor_shift(q: &[u64], s: u64, p: u64) -> Vec<u64> {
    let ns = modp::neg(s, p);
    let mut out: Vec<u64> = Vec::new();
    for &c in q.iter().rev() {
        // out = out * (x - s) + c
        let mut next = vec![0; out.len() + 1];
        for (i, &o) in out.iter().enumerate() {
            next[i + 1] = modp::add(next[i + 1], o, p);
            next[i] = modp::add(next[i], modp::mul(o, ns, p), p);
        }
        next[0] = modp::add(next[0], c, p);
        out = next;
    }
    out
}

/// From the homogeneous pieces `P_e(1, y)` to the dense polynomial `sum_e P_e(b - sb, c - sc)`.
fn assemble(pieces: &[Vec<u64>], shift: (u64, u64), p: u64) -> Dense2 {
    let d = pieces.len();
    // x[i][j]: coefficient of xb^i xc^j
    let mut x: Dense2 = vec![vec![0; d]; d];
    for (e, q) in pieces.iter().enumerate() {
        for (jx, &c) in q.iter().enumerate() {
            if jx <= e {
                x[e - jx][jx] = modp::add(x[e - jx][jx], c, p);
            }
        }
    }
    // shift in xb for every power of xc, then in xc for every power of b
    let mut mid: Dense2 = vec![vec![0; d]; d];
    for jx in 0..d {
        let col: Vec<u64> = (0..d).map(|i| x[i][jx]).collect();
        let s = taylor_shift(&col, shift.0, p);
        for (i, &v) in s.iter().enumerate().take(d) {
            mid[i][jx] = v;
        }
    }
    let mut out: Dense2 = vec![vec![0; d]; d];
    for i in 0..d {
        let s = taylor_shift(&mid[i], shift.1, p);
        for (jx, &v) in s.iter().enumerate().take(d) {
            out[i][jx] = v;
        }
    }
    out
}

type SparseModP = BTreeMap<(u32, u32), u64>;

fn sparse(d: &Dense2) -> SparseModP {
    let mut out = BTreeMap::new();
    for (i, r) in d.iter().enumerate() {
        for (j, &v) in r.iter().enumerate() {
            if v != 0 {
                out.insert((i as u32, j as u32), v);
            }
        }
    }
    out
}

/// Key ordering the monomials by total degree, then by the power of b.
fn lead_key(m: &(u32, u32)) -> (u32, u32) {
    (m.0 + m.1, m.0)
}

fn reconstruct_mod_p<S: Sampler>(f: &S, p: u64, seed: u64) -> Result<Vec<(SparseModP, SparseModP)>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p);
    let shift = (rng.gen_range(1..p), rng.gen_range(1..p));
    let degs = detect_degrees(f, &mut rng, shift, p)?;
    let width = degs.len();
    let need = degs.iter().map(|d| (d.num.max(0) + d.den + 1) as usize).max().unwrap_or(1);
    let lines = degs.iter().map(|d| d.num.max(d.den).max(0) as usize + 1).max().unwrap_or(1);
    // per coefficient, per line: (num, den) along the line
    let mut per: Vec<Vec<(Vec<u64>, Vec<u64>)>> = vec![Vec::new(); width];
    let mut ys = Vec::new();
    let mut attempts = 0;
    while ys.len() < lines {
        attempts += 1;
        if attempts > lines + 20 {
            return Err("too many unlucky lines".into());
        }
        let y = rng.gen_range(1..p);
        if ys.contains(&y) {
            continue;
        }
        let (ts, vals) = sample_line(f, &mut rng, shift, y, need + CHECKS, p)?;
        let mut row = Vec::with_capacity(width);
        for (k, d) in degs.iter().enumerate() {
            let col = column(&vals, k);
            if d.num < 0 {
                row.push((Vec::new(), vec![1]));
                continue;
            }
            let m = (d.num + d.den + 1) as usize;
            let Some((num, den)) = upoly::rational_interpolate_deg(&ts[..m], &col[..m], d.num, p) else { break };
            if upoly::degree(&num) != d.num || upoly::degree(&den) != d.den || !checks_out(&num, &den, &ts[m..], &col[m..], p) {
                break;
            }
            row.push((num, den));
        }
        if row.len() < width {
            continue;
        }
        ys.push(y);
        for (k, r) in row.into_iter().enumerate() {
            per[k].push(r);
        }
    }
    let mut out = Vec::with_capacity(width);
    for (k, d) in degs.iter().enumerate() {
        if d.num < 0 {
            out.push((SparseModP::new(), SparseModP::from([((0, 0), 1)])));
            continue;
        }
        let piece = |deg: i64, pick: &dyn Fn(&(Vec<u64>, Vec<u64>)) -> &Vec<u64>| -> Result<Vec<Vec<u64>>, String> {
            (0..=deg as usize)
                .map(|e| {
                    let vals: Vec<u64> = per[k].iter().map(|r| pick(r).get(e).copied().unwrap_or(0)).collect();
                    let q = upoly::interpolate(&ys, &vals, p);
                    if upoly::degree(&q) > e as i64 {
                        return Err("inconsistent homogeneous piece".to_string());
                    }
                    Ok(q)
                })
                .collect()
        };
        let np = piece(d.num, &|r| &r.0)?;
        let dp = piece(d.den, &|r| &r.1)?;
        let size = (d.num.max(d.den) + 1) as usize;
        let pad = |mut v: Vec<Vec<u64>>| {
            v.resize(size, Vec::new());
            v
        };
        let (mut n, mut dd) = (sparse(&assemble(&pad(np), shift, p)), sparse(&assemble(&pad(dp), shift, p)));
        let lead = *dd.keys().max_by_key(|m| lead_key(m)).ok_or("vanishing denominator")?;
        let li = modp::inv(dd[&lead], p);
        for v in n.values_mut().chain(dd.values_mut()) {
            *v = modp::mul(*v, li, p);
        }
        out.push((n, dd));
    }
    Ok(out)
}

fn layout(r: &[(SparseModP, SparseModP)]) -> Vec<(Vec<(u32, u32)>, Vec<(u32, u32)>)> {
    r.iter().map(|(n, d)| (n.keys().copied().collect(), d.keys().copied().collect())).collect()
}

fn flatten(r: &[(SparseModP, SparseModP)]) -> Vec<u64> {
    r.iter().flat_map(|(n, d)| n.values().chain(d.values()).copied()).collect()
}

/// Reconstructs rational functions `f_k(a, b, c)`, homogeneous of degree `degrees[k]`,
/// from a sampler of `f_k(1, b, c)` modulo primes. Integer coefficients are recovered by
/// Chinese remaindering until two consecutive primes agree.
pub fn reconstruct<S: Sampler>(f: &S, degrees: &[i64], seed: u64, max_primes: usize) -> Result<Vec<RatFunc>, String> {
    let mut shape = None;
    let mut crt: Option<Crt> = None;
    let mut last: Option<Vec<BigRational>> = None;
    for p in modp::primes().take(max_primes) {
        let r = reconstruct_mod_p(f, p, seed)?;
        let l = layout(&r);
        match &shape {
            None => shape = Some(l),
            Some(s) if *s != l => continue,
            _ => {}
        }
        let flat = flatten(&r);
        let c = crt.get_or_insert_with(|| Crt::new(flat.len()));
        c.add(&flat, p);
        let Some(q) = c.rationals() else { continue };
        if last.as_ref() == Some(&q) {
            return Ok(assemble_exact(shape.as_ref().unwrap(), &q, degrees));
        }
        last = Some(q);
    }
    Err(format!("no stable reconstruction within {max_primes} primes"))
}

fn assemble_exact(
    shape: &[(Vec<(u32, u32)>, Vec<(u32, u32)>)],
    flat: &[BigRational],
    degrees: &[i64],
) -> Vec<RatFunc> {
    let mut pos = 0;
    let mut out = Vec::with_capacity(shape.len());
    for ((nm, dm), &delta) in shape.iter().zip(degrees) {
        let nv = &flat[pos..pos + nm.len()];
        pos += nm.len();
        let dv = &flat[pos..pos + dm.len()];
        pos += dm.len();
        let mut l = BigInt::one();
        for x in nv.iter().chain(dv) {
            l = l.lcm(x.denom());
        }
        let total = |ms: &[(u32, u32)]| ms.iter().map(|m| m.0 + m.1).max().unwrap_or(0);
        let (tn, td) = (total(nm), total(dm));
        let build = |ms: &[(u32, u32)], vs: &[BigRational], t: u32| {
            MultiPoly::from_terms(ms.iter().zip(vs).map(|(m, v)| {
                let c = v.numer() * (&l / v.denom());
                ([t - m.0 - m.1, m.0, m.1], ZJ::int(c))
            }))
        };
        let mut num = build(nm, nv, tn);
        let mut den = build(dm, dv, td);
        let shift = delta - tn as i64 + td as i64;
        if shift >= 0 {
            num = num.mul_monomial([shift as u32, 0, 0]);
        } else {
            den = den.mul_monomial([(-shift) as u32, 0, 0]);
        }
        if den.lead().map(|(_, c)| c.u.is_negative()).unwrap_or(false) {
            num = -num;
            den = -den;
        }
        out.push(if num.is_zero() { RatFunc::zero() } else { RatFunc::new(num, den).expect("nonzero denominator") });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_known_functions() {
        let fs = vec![
            RatFunc::new(MultiPoly::parse("a*b - c^2").unwrap(), MultiPoly::parse("a + 2*b").unwrap()).unwrap(),
            RatFunc::new(MultiPoly::parse("3").unwrap(), MultiPoly::parse("a*b*c^2 - b^4").unwrap()).unwrap(),
            RatFunc::zero(),
            RatFunc::from_poly(MultiPoly::parse("a^2 - 5*b*c").unwrap()),
        ];
        let degs = [1, -4, 0, 2];
        let f = |b: u64, c: u64, p: u64| fs.iter().map(|x| x.eval_mod(&[1, b, c], None, p)).collect::<Option<Vec<_>>>();
        let got = reconstruct(&f, &degs, 1, 10).unwrap();
        assert_eq!(got, fs);
    }
}
