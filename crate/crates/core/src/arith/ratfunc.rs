//! Rational functions in a, b, c over Q(j).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multipoly::{Mono, MultiPoly};
use super::zj::{QJ, ZJ};
use super::ArithError;

/// `num / den`. Normalized on construction: common monomial factors and the
/// integer content are removed, an exact polynomial quotient is taken when the
/// denominator divides the numerator, and the leading denominator coefficient
/// is made positive. Equality is always decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn int(k: i64) -> Self {
        Self::from_poly(MultiPoly::int(k))
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(MultiPoly::var(i))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = (num, den);
        let mn = num.monomial_content();
        let md = den.monomial_content();
        let g: Mono = [mn[0].min(md[0]), mn[1].min(md[1]), mn[2].min(md[2])];
        if g != [0, 0, 0] {
            num = num.div_monomial(g);
            den = den.div_monomial(g);
        }
        if !den.is_monomial() {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = MultiPoly::one();
            }
        }
        let c = num.content();
        let c = num_integer::Integer::gcd(&c, &den.content());
        if !c.is_one() && !c.is_zero() {
            num = num.div_int(&c);
            den = den.div_int(&c);
        }
        if den.lead().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Result<Self, ArithError> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, k: &ZJ) -> Self {
        Self::normalized(self.num.scale(k), self.den.clone())
    }

    /// Multiply by a polynomial without re-normalizing the denominator.
    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn specialize(&self, pt: &[BigRational; 3]) -> Result<QJ, ArithError> {
        let d = self.den.eval_q(pt);
        let inv = d.inv().ok_or(ArithError::VanishingDenominator)?;
        Ok(&self.num.eval_q(pt) * &inv)
    }

    pub fn specialize_ints(&self, a: i64, b: i64, c: i64) -> Result<QJ, ArithError> {
        let pt = [a, b, c].map(|x| BigRational::from_integer(x.into()));
        self.specialize(&pt)
    }

    /// Value modulo `p`; `None` if the denominator vanishes or j is needed but absent.
    pub fn eval_mod(&self, pt: &[u64; 3], j: Option<u64>, p: u64) -> Option<u64> {
        let d = self.den.eval_mod(pt, j, p)?;
        if d == 0 {
            return None;
        }
        let n = self.num.eval_mod(pt, j, p)?;
        Some(crate::modp::mul(n, crate::modp::inv(d, p), p))
    }

    /// Apply j -> j^2.
    pub fn conj_j(&self) -> Self {
        Self::normalized(self.num.conj_j(), self.den.conj_j())
    }

    /// Substitute `(a, b, c) -> images`.
    pub fn compose(&self, images: &[MultiPoly; 3]) -> Result<Self, ArithError> {
        Self::new(self.num.compose(images), self.den.compose(images))
    }

    pub fn permute_vars(&self, target: [usize; 3]) -> Self {
        Self::normalized(self.num.permute_vars(target), self.den.permute_vars(target))
    }

    fn add_impl(&self, o: &RatFunc, negate: bool) -> RatFunc {
        let on = if negate { -&o.num } else { o.num.clone() };
        if self.is_zero() {
            return RatFunc { num: on, den: o.den.clone() };
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::normalized(&self.num + &on, self.den.clone());
        }
        // split each denominator into monomial * rest and share the rest when equal
        let m1 = self.den.monomial_content();
        let m2 = o.den.monomial_content();
        let r1 = self.den.div_monomial(m1);
        let r2 = o.den.div_monomial(m2);
        if r1 == r2 {
            let l: Mono = [m1[0].max(m2[0]), m1[1].max(m2[1]), m1[2].max(m2[2])];
            let f1 = [l[0] - m1[0], l[1] - m1[1], l[2] - m1[2]];
            let f2 = [l[0] - m2[0], l[1] - m2[1], l[2] - m2[2]];
            let num = &self.num.mul_monomial(f1) + &on.mul_monomial(f2);
            return Self::normalized(num, r1.mul_monomial(l));
        }
        if let Some(q) = o.den.div_exact(&self.den) {
            return Self::normalized(&(&self.num * &q) + &on, o.den.clone());
        }
        if let Some(q) = self.den.div_exact(&o.den) {
            return Self::normalized(&self.num + &(&on * &q), self.den.clone());
        }
        Self::normalized(&(&self.num * &o.den) + &(&on * &self.den), &self.den * &o.den)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &RatFunc) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        self.add_impl(o, false)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self.add_impl(o, true)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: MultiPoly::one() };
        }
        RatFunc::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        &self + &o
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        &self - &o
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        &self * &o
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}
