//! The ring Z[t0^(±1/2), t1^(±1/2)][Y] / (Y^2 - (t0-1)(1-t1)) and its integral part.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::half_laurent::{render_terms, Exp2, HalfLaurent};
use super::ArithError;

/// `p0 + p1 * Y`, always Y-reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LGScalar {
    pub p0: HalfLaurent,
    pub p1: HalfLaurent,
}

/// Y^2 = (t0 - 1)(1 - t1) = -t0 t1 + t0 + t1 - 1.
pub fn y_squared() -> HalfLaurent {
    HalfLaurent::from_terms([
        ((2, 2), BigInt::from(-1)),
        ((2, 0), BigInt::one()),
        ((0, 2), BigInt::one()),
        ((0, 0), BigInt::from(-1)),
    ])
}

impl LGScalar {
    pub fn new(p0: HalfLaurent, p1: HalfLaurent) -> Self {
        LGScalar { p0, p1 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_half(HalfLaurent::one())
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_half(HalfLaurent::from_i64(c))
    }

    pub fn from_half(p0: HalfLaurent) -> Self {
        LGScalar { p0, p1: HalfLaurent::zero() }
    }

    pub fn y() -> Self {
        LGScalar { p0: HalfLaurent::zero(), p1: HalfLaurent::one() }
    }

    /// `c * t0^(e.0/2) t1^(e.1/2)`.
    pub fn monomial(e: Exp2, c: i64) -> Self {
        Self::from_half(HalfLaurent::monomial(e, BigInt::from(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.p0.is_zero() && self.p1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p1.is_zero() && self.p0.is_one()
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.p1.is_zero() && o.p1.is_zero() {
            return Self::from_half(&self.p0 * &o.p0);
        }
        let mut p0 = &self.p0 * &o.p0;
        if !self.p1.is_zero() && !o.p1.is_zero() {
            p0 = &p0 + &(&(&self.p1 * &o.p1) * &y_squared());
        }
        let p1 = &(&self.p0 * &o.p1) + &(&self.p1 * &o.p0);
        LGScalar { p0, p1 }
    }

    /// Multiply by `c * t0^(e.0/2) t1^(e.1/2)`.
    pub fn mul_monomial(&self, e: Exp2, c: &BigInt) -> Self {
        LGScalar { p0: self.p0.shift(e).scale(c), p1: self.p1.shift(e).scale(c) }
    }

    /// Divide by `c * t0^(e.0/2) t1^(e.1/2)`; `None` if a coefficient is not divisible by `c`.
    pub fn div_monomial(&self, e: Exp2, c: &BigInt) -> Option<Self> {
        Some(LGScalar { p0: self.p0.div_monomial(e, c)?, p1: self.p1.div_monomial(e, c)? })
    }

    /// The element as an integral Laurent polynomial when it is one.
    pub fn integral_part(&self) -> Option<Laurent> {
        if !self.p1.is_zero() || !self.p0.has_integer_exponents() {
            return None;
        }
        Some(Laurent { inner: self.p0.clone() })
    }

    pub fn parse(text: &str) -> Result<Self, ArithError> {
        let mut p0 = Vec::new();
        let mut p1 = Vec::new();
        for (e, c, y) in parse_terms(text)? {
            if y {
                p1.push((e, c));
            } else {
                p0.push((e, c));
            }
        }
        Ok(LGScalar { p0: HalfLaurent::from_terms(p0), p1: HalfLaurent::from_terms(p1) })
    }
}

impl Add for &LGScalar {
    type Output = LGScalar;
    fn add(self, o: &LGScalar) -> LGScalar {
        LGScalar { p0: &self.p0 + &o.p0, p1: &self.p1 + &o.p1 }
    }
}

impl Sub for &LGScalar {
    type Output = LGScalar;
    fn sub(self, o: &LGScalar) -> LGScalar {
        LGScalar { p0: &self.p0 - &o.p0, p1: &self.p1 - &o.p1 }
    }
}

impl Mul for &LGScalar {
    type Output = LGScalar;
    fn mul(self, o: &LGScalar) -> LGScalar {
        self.mul_ref(o)
    }
}

impl Neg for &LGScalar {
    type Output = LGScalar;
    fn neg(self) -> LGScalar {
        LGScalar { p0: -&self.p0, p1: -&self.p1 }
    }
}

impl Add for LGScalar {
    type Output = LGScalar;
    fn add(self, o: LGScalar) -> LGScalar {
        &self + &o
    }
}

impl Sub for LGScalar {
    type Output = LGScalar;
    fn sub(self, o: LGScalar) -> LGScalar {
        &self - &o
    }
}

impl Mul for LGScalar {
    type Output = LGScalar;
    fn mul(self, o: LGScalar) -> LGScalar {
        &self * &o
    }
}

impl Neg for LGScalar {
    type Output = LGScalar;
    fn neg(self) -> LGScalar {
        -&self
    }
}

impl fmt::Display for LGScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        let mut first = true;
        render_terms(&mut s, self.p0.terms().iter().map(|(e, c)| (*e, c, false)), &mut first);
        render_terms(&mut s, self.p1.terms().iter().map(|(e, c)| (*e, c, true)), &mut first);
        f.write_str(&s)
    }
}

/// An element of Z[t0^(±1), t1^(±1)].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    inner: HalfLaurent,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Laurent { inner: HalfLaurent::one() }
    }

    /// Builds from integer exponents.
    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), BigInt)>>(it: I) -> Self {
        Laurent { inner: HalfLaurent::from_terms(it.into_iter().map(|((a, b), c)| ((2 * a, 2 * b), c))) }
    }

    /// Terms with integer exponents, sorted by `(e0, e1)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigInt)> {
        self.inner.terms().iter().map(|((a, b), c)| ((a / 2, b / 2), c))
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn as_half(&self) -> &HalfLaurent {
        &self.inner
    }

    pub fn to_scalar(&self) -> LGScalar {
        LGScalar::from_half(self.inner.clone())
    }

    /// Smallest exponents of t0 and t1 that occur (0 for the zero polynomial).
    pub fn min_exponents(&self) -> (i32, i32) {
        let mut m = (i32::MAX, i32::MAX);
        for ((a, b), _) in self.terms() {
            m.0 = m.0.min(a);
            m.1 = m.1.min(b);
        }
        if self.is_zero() {
            (0, 0)
        } else {
            m
        }
    }

    pub fn swap_vars(&self) -> Self {
        Laurent { inner: self.inner.swap_vars() }
    }

    pub fn parse(text: &str) -> Result<Self, ArithError> {
        let s = LGScalar::parse(text)?;
        s.integral_part().ok_or_else(|| ArithError::Parse(format!("not an integral Laurent polynomial: {text}")))
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        Laurent { inner: &self.inner + &o.inner }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        Laurent { inner: &self.inner - &o.inner }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        Laurent { inner: &self.inner * &o.inner }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

fn parse_exponent(s: &str) -> Result<i32, ArithError> {
    let bad = || ArithError::Parse(format!("bad exponent `{s}`"));
    if let Some(num) = s.strip_suffix("/2") {
        let v: i32 = num.parse().map_err(|_| bad())?;
        if v % 2 == 0 {
            return Err(bad());
        }
        Ok(v)
    } else {
        let v: i32 = s.parse().map_err(|_| bad())?;
        Ok(2 * v)
    }
}

/// Parses the rendering produced by `Display`: terms `c*t0^p*t1^q[*Y]` joined by `+`/`-`.
fn parse_terms(text: &str) -> Result<Vec<(Exp2, BigInt, bool)>, ArithError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ArithError::Parse("empty polynomial".into()));
    }
    // split at '+'/'-' that are not part of an exponent
    let bytes = s.as_bytes();
    let mut pieces: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        if (ch == b'+' || ch == b'-') && (i == 0 || bytes[i - 1] != b'^') {
            if i > start {
                pieces.push((neg, &s[start..i]));
            } else if i != 0 {
                return Err(ArithError::Parse(format!("dangling sign in `{text}`")));
            }
            neg = ch == b'-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= s.len() {
        return Err(ArithError::Parse(format!("dangling sign in `{text}`")));
    }
    pieces.push((neg, &s[start..]));

    let mut out = Vec::new();
    for (neg, body) in pieces {
        let mut coeff = BigInt::one();
        let mut e = (0, 0);
        let mut y = false;
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(ArithError::Parse(format!("empty factor in `{text}`")));
            }
            if factor == "Y" {
                if y {
                    return Err(ArithError::Parse("Y occurs twice in a term".into()));
                }
                y = true;
            } else if let Some(rest) = factor.strip_prefix("t0") {
                e.0 += if rest.is_empty() { 2 } else { parse_exponent(rest.strip_prefix('^').ok_or_else(|| ArithError::Parse(format!("bad factor `{factor}`")))?)? };
            } else if let Some(rest) = factor.strip_prefix("t1") {
                e.1 += if rest.is_empty() { 2 } else { parse_exponent(rest.strip_prefix('^').ok_or_else(|| ArithError::Parse(format!("bad factor `{factor}`")))?)? };
            } else {
                let v: BigInt = factor.parse().map_err(|_| ArithError::Parse(format!("bad factor `{factor}`")))?;
                coeff *= v;
            }
        }
        if neg {
            coeff = -coeff;
        }
        if !coeff.is_zero() {
            out.push((e, coeff, y));
        }
    }
    Ok(out)
}
