//! Laurent polynomials in t0, t1 with half-integer exponents.
//!
//! Exponents are stored doubled, so `t0^(1/2)` has key `(1, 0)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Doubled exponent pair `(2*e0, 2*e1)`.
pub type Exp2 = (i32, i32);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    // sorted by key, no zero coefficients
    terms: Vec<(Exp2, BigInt)>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial((0, 0), c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// `c * t0^(e.0/2) * t1^(e.1/2)`.
    pub fn monomial(e: Exp2, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            HalfLaurent { terms: vec![(e, c)] }
        }
    }

    pub fn t0() -> Self {
        Self::monomial((2, 0), BigInt::one())
    }

    pub fn t1() -> Self {
        Self::monomial((0, 2), BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp2, BigInt)>>(it: I) -> Self {
        let mut v: Vec<(Exp2, BigInt)> = it.into_iter().collect();
        v.sort_by(|x, y| x.0.cmp(&y.0));
        let mut out: Vec<(Exp2, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        HalfLaurent { terms: out }
    }

    pub fn terms(&self) -> &[(Exp2, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.iter().all(|((a, b), _)| a % 2 == 0 && b % 2 == 0)
    }

    /// Multiply by `t0^(d.0/2) t1^(d.1/2)`.
    pub fn shift(&self, d: Exp2) -> Self {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| ((e.0 + d.0, e.1 + d.1), c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        HalfLaurent { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Swap the roles of t0 and t1.
    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_left = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_right = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_left {
                out.push(a[i].clone());
                i += 1;
            } else if take_right {
                let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        HalfLaurent { terms: out }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (d, k) = &other.terms[0];
            return self.shift(*d).scale(k);
        }
        if self.terms.len() == 1 {
            let (d, k) = &self.terms[0];
            return other.shift(*d).scale(k);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                prods.push(((e1.0 + e2.0, e1.1 + e2.1), c1 * c2));
            }
        }
        Self::from_terms(prods)
    }

    /// Exact division by a monomial (always possible in a Laurent ring up to the coefficient).
    pub fn div_monomial(&self, e: Exp2, c: &BigInt) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, v) in &self.terms {
            if !(v % c).is_zero() {
                return None;
            }
            terms.push(((k.0 - e.0, k.1 - e.1), v / c));
        }
        Some(HalfLaurent { terms })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, o: &HalfLaurent) -> HalfLaurent {
        self.merge(o, false)
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, o: &HalfLaurent) -> HalfLaurent {
        self.merge(o, true)
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, o: &HalfLaurent) -> HalfLaurent {
        self.mul_ref(o)
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, o: HalfLaurent) -> HalfLaurent {
        &self + &o
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, o: HalfLaurent) -> HalfLaurent {
        &self - &o
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, o: HalfLaurent) -> HalfLaurent {
        &self * &o
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

fn fmt_exp(var: &str, e2: i32) -> Option<String> {
    match e2 {
        0 => None,
        2 => Some(var.to_string()),
        e if e % 2 == 0 => Some(format!("{}^{}", var, e / 2)),
        e => Some(format!("{}^{}/2", var, e)),
    }
}

/// Renders a list of terms; `suffix` is appended to each monomial (used for `*Y`).
pub(crate) fn render_terms<'a, I>(out: &mut String, terms: I, first: &mut bool)
where
    I: Iterator<Item = (Exp2, &'a BigInt, bool)>,
{
    for (e, c, with_y) in terms {
        let mut factors: Vec<String> = Vec::new();
        if let Some(f) = fmt_exp("t0", e.0) {
            factors.push(f);
        }
        if let Some(f) = fmt_exp("t1", e.1) {
            factors.push(f);
        }
        if with_y {
            factors.push("Y".to_string());
        }
        let mag = c.abs();
        let body = if factors.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            factors.join("*")
        } else {
            format!("{}*{}", mag, factors.join("*"))
        };
        if *first {
            if c.is_negative() {
                out.push('-');
            }
            *first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        let mut first = true;
        render_terms(&mut s, self.terms.iter().map(|(e, c)| (*e, c, false)), &mut first);
        f.write_str(&s)
    }
}
