//! Polynomials in a, b, c with coefficients in Z[j].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zj::{QJ, ZJ};
use super::ArithError;
use crate::modp;

/// Exponents of (a, b, c).
pub type Mono = [u32; 3];

/// Sparse polynomial; terms sorted by lexicographic order on `(deg a, deg b, deg c)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: Vec<(Mono, ZJ)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ZJ::one())
    }

    pub fn constant(c: ZJ) -> Self {
        Self::term([0, 0, 0], c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(ZJ::from_i64(c))
    }

    pub fn j() -> Self {
        Self::constant(ZJ::j())
    }

    pub fn term(m: Mono, c: ZJ) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// The variable with index 0 (a), 1 (b) or 2 (c).
    pub fn var(i: usize) -> Self {
        let mut m = [0; 3];
        m[i] = 1;
        Self::term(m, ZJ::one())
    }

    pub fn a() -> Self {
        Self::var(0)
    }

    pub fn b() -> Self {
        Self::var(1)
    }

    pub fn c() -> Self {
        Self::var(2)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, ZJ)>>(it: I) -> Self {
        let mut map: BTreeMap<Mono, ZJ> = BTreeMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&m) {
                Some(x) => *x = &*x + &c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        MultiPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn from_hash(map: HashMap<Mono, ZJ>) -> Self {
        let mut terms: Vec<(Mono, ZJ)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|x, y| x.0.cmp(&y.0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Mono, ZJ)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0, 0, 0] && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == [0, 0, 0])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn has_j(&self) -> bool {
        self.terms.iter().any(|(_, c)| !c.v.is_zero())
    }

    pub fn lead(&self) -> Option<&(Mono, ZJ)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.iter().map(|(m, _)| (m[0] + m[1] + m[2]) as i64).max().unwrap_or(-1)
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.iter().map(|(m, _)| m[var] as i64).max().unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.total_degree();
        self.terms.iter().all(|(m, _)| (m[0] + m[1] + m[2]) as i64 == d)
    }

    pub fn scale(&self, k: &ZJ) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.scale(k))).collect() }
    }

    pub fn mul_monomial(&self, e: Mono) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| ([m[0] + e[0], m[1] + e[1], m[2] + e[2]], c.clone())).collect() }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Mono {
        let mut g = [u32::MAX; 3];
        for (m, _) in &self.terms {
            for i in 0..3 {
                g[i] = g[i].min(m[i]);
            }
        }
        if self.is_zero() {
            [0; 3]
        } else {
            g
        }
    }

    pub fn div_monomial(&self, e: Mono) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| ([m[0] - e[0], m[1] - e[1], m[2] - e[2]], c.clone())).collect(),
        }
    }

    /// Gcd of all integer components of all coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&c.u).gcd(&c.v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, ZJ { u: &c.u / k, v: &c.v / k })).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Apply j -> j^2 to every coefficient.
    pub fn conj_j(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect() }
    }

    /// Substitute variable `v` by `images[v]`, i.e. `(a, b, c) -> (images[0], images[1], images[2])`.
    pub fn compose(&self, images: &[MultiPoly; 3]) -> Self {
        let mut cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for v in 0..3 {
                if m[v] > 0 {
                    let p = cache.entry((v, m[v])).or_insert_with(|| images[v].pow(m[v])).clone();
                    t = &t * &p;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Rename variables: variable `v` becomes variable `target[v]`.
    pub fn permute_vars(&self, target: [usize; 3]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut n = [0; 3];
            for v in 0..3 {
                n[target[v]] += m[v];
            }
            (n, c.clone())
        }))
    }

    /// Exact quotient `self / d`, if `d` divides `self` in Z[j][a,b,c].
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if m[0] < dm[0] || m[1] < dm[1] || m[2] < dm[2] {
                    return None;
                }
                out.push(([m[0] - dm[0], m[1] - dm[1], m[2] - dm[2]], c.div_exact(dc)?));
            }
            return Some(MultiPoly { terms: out });
        }
        for v in 0..3 {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (lm, lc) = d.lead().unwrap().clone();
        let mut rem: BTreeMap<Mono, ZJ> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, ZJ)> = Vec::new();
        while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if rm[0] < lm[0] || rm[1] < lm[1] || rm[2] < lm[2] {
                return None;
            }
            let qm = [rm[0] - lm[0], rm[1] - lm[1], rm[2] - lm[2]];
            let qc = rc.div_exact(&lc)?;
            for (m, c) in &d.terms {
                let key = [m[0] + qm[0], m[1] + qm[1], m[2] + qm[2]];
                let prod = c * &qc;
                let entry = rem.entry(key).or_insert_with(ZJ::zero);
                *entry = &*entry - &prod;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        Some(Self::from_terms(quot))
    }

    /// Evaluate at a rational point.
    pub fn eval_q(&self, pt: &[BigRational; 3]) -> QJ {
        let mut u = BigRational::zero();
        let mut v = BigRational::zero();
        let mut powers: [Vec<BigRational>; 3] = Default::default();
        for i in 0..3 {
            let d = self.degree_in(i).max(0) as usize;
            let mut p = Vec::with_capacity(d + 1);
            p.push(BigRational::one());
            for k in 1..=d {
                let next = &p[k - 1] * &pt[i];
                p.push(next);
            }
            powers[i] = p;
        }
        for (m, c) in &self.terms {
            let x = &(&powers[0][m[0] as usize] * &powers[1][m[1] as usize]) * &powers[2][m[2] as usize];
            if !c.u.is_zero() {
                u += &x * BigRational::from_integer(c.u.clone());
            }
            if !c.v.is_zero() {
                v += &x * BigRational::from_integer(c.v.clone());
            }
        }
        QJ::new(u, v)
    }

    /// Evaluate modulo `p`; `j` is a primitive cube root of unity mod `p` when needed.
    pub fn eval_mod(&self, pt: &[u64; 3], j: Option<u64>, p: u64) -> Option<u64> {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut x = 1u64;
            for i in 0..3 {
                if m[i] > 0 {
                    x = modp::mul(x, modp::pow(pt[i], m[i] as u64, p), p);
                }
            }
            let mut coef = modp::from_bigint(&c.u, p);
            if !c.v.is_zero() {
                let jv = j?;
                coef = modp::add(coef, modp::mul(modp::from_bigint(&c.v, p), jv, p), p);
            }
            acc = modp::add(acc, modp::mul(coef, x, p), p);
        }
        Some(acc)
    }

    /// Substitute integer values for some variables (`None` keeps the variable).
    pub fn substitute_ints(&self, vals: [Option<i64>; 3]) -> Self {
        let mut out: HashMap<Mono, ZJ> = HashMap::new();
        for (m, c) in &self.terms {
            let mut k = BigInt::one();
            let mut n = *m;
            for v in 0..3 {
                if let Some(x) = vals[v] {
                    k *= BigInt::from(x).pow(m[v]);
                    n[v] = 0;
                }
            }
            let e = out.entry(n).or_insert_with(ZJ::zero);
            *e = &*e + &c.scale(&k);
        }
        Self::from_hash(out)
    }

    pub fn parse(text: &str) -> Result<Self, ArithError> {
        parse_multipoly(text)
    }

    fn mul_impl(&self, o: &MultiPoly) -> MultiPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return MultiPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(n, d)| ([n[0] + m[0], n[1] + m[1], n[2] + m[2]], d * c))
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            };
        }
        if self.terms.len() == 1 {
            return o.mul_impl(self);
        }
        let mut map: HashMap<Mono, ZJ> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let key = [m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]];
                let prod = c1 * c2;
                match map.get_mut(&key) {
                    Some(x) => *x = &*x + &prod,
                    None => {
                        map.insert(key, prod);
                    }
                }
            }
        }
        Self::from_hash(map)
    }

    fn merge(&self, o: &MultiPoly, negate: bool) -> MultiPoly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut k) = (0, 0);
        while i < a.len() || k < b.len() {
            if k >= b.len() || (i < a.len() && a[i].0 < b[k].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i >= a.len() || b[k].0 < a[i].0 {
                out.push((b[k].0, if negate { -&b[k].1 } else { b[k].1.clone() }));
                k += 1;
            } else {
                let c = if negate { &a[i].1 - &b[k].1 } else { &a[i].1 + &b[k].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                k += 1;
            }
        }
        MultiPoly { terms: out }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.merge(o, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.merge(o, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.mul_impl(o)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: MultiPoly) -> MultiPoly {
        &self + &o
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: MultiPoly) -> MultiPoly {
        &self - &o
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        &self * &o
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

fn render_mono(m: &Mono) -> String {
    let names = ["a", "b", "c"];
    let mut parts = Vec::new();
    for v in 0..3 {
        match m[v] {
            0 => {}
            1 => parts.push(names[v].to_string()),
            e => parts.push(format!("{}^{}", names[v], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = render_mono(m);
            let (neg, body) = if c.v.is_zero() {
                let mag = c.u.abs();
                let body = if mono.is_empty() {
                    mag.to_string()
                } else if mag.is_one() {
                    mono
                } else {
                    format!("{}*{}", mag, mono)
                };
                (c.u.is_negative(), body)
            } else if mono.is_empty() {
                (false, c.to_string())
            } else {
                (false, format!("{}*{}", c, mono))
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        f.write_str(&s)
    }
}

fn parse_factor(tok: &str) -> Result<MultiPoly, ArithError> {
    let bad = || ArithError::Parse(format!("bad factor `{tok}`"));
    if let Some(inner) = tok.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        // (u+v*j) or (u-v*j)
        let body = inner.strip_suffix("*j").ok_or_else(bad)?;
        let split = body.rfind(|ch| ch == '+' || ch == '-').filter(|&i| i > 0).ok_or_else(bad)?;
        let u: BigInt = body[..split].parse().map_err(|_| bad())?;
        let v: BigInt = body[split..].trim_start_matches('+').parse().map_err(|_| bad())?;
        return Ok(MultiPoly::constant(ZJ::new(u, v)));
    }
    if tok == "j" {
        return Ok(MultiPoly::j());
    }
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    if base == "j" {
        return Ok(MultiPoly::j().pow(exp));
    }
    let var = match base {
        "a" => Some(0),
        "b" => Some(1),
        "c" => Some(2),
        _ => None,
    };
    match var {
        Some(v) => {
            let mut m = [0; 3];
            m[v] = exp;
            Ok(MultiPoly::term(m, ZJ::one()))
        }
        None => {
            if tok.contains('^') {
                return Err(bad());
            }
            let k: BigInt = tok.parse().map_err(|_| bad())?;
            Ok(MultiPoly::constant(ZJ::int(k)))
        }
    }
}

/// Split at `*` outside parentheses.
fn split_top(body: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in body.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&body[start..]);
    out
}

fn parse_multipoly(text: &str) -> Result<MultiPoly, ArithError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ArithError::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if !terms.is_empty() {
                    return Err(ArithError::Parse(format!("dangling sign in `{text}`")));
                }
                neg = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    if cur.is_empty() {
        return Err(ArithError::Parse(format!("dangling sign in `{text}`")));
    }
    terms.push((neg, cur));
    let mut acc = MultiPoly::zero();
    for (neg, body) in terms {
        let mut t = MultiPoly::one();
        for f in split_top(&body) {
            t = &t * &parse_factor(f)?;
        }
        acc = if neg { &acc - &t } else { &acc + &t };
    }
    Ok(acc)
}
