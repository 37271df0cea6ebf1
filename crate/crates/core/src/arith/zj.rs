//! Z[j] and Q(j) with j^2 + j + 1 = 0, stored as pairs u + v*j.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZJ {
    pub u: BigInt,
    pub v: BigInt,
}

impl ZJ {
    pub fn new(u: BigInt, v: BigInt) -> Self {
        ZJ { u, v }
    }

    pub fn from_i64(u: i64) -> Self {
        ZJ { u: BigInt::from(u), v: BigInt::zero() }
    }

    pub fn int(u: BigInt) -> Self {
        ZJ { u, v: BigInt::zero() }
    }

    pub fn j() -> Self {
        ZJ { u: BigInt::zero(), v: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    /// The Galois conjugate j -> j^2 = -1 - j.
    pub fn conj(&self) -> Self {
        ZJ { u: &self.u - &self.v, v: -&self.v }
    }

    /// Norm u^2 - uv + v^2 (always >= 0).
    pub fn norm(&self) -> BigInt {
        &self.u * &self.u - &self.u * &self.v + &self.v * &self.v
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        ZJ { u: &self.u * k, v: &self.v * k }
    }

    /// Exact quotient in Z[j], if it exists.
    pub fn div_exact(&self, d: &ZJ) -> Option<ZJ> {
        if d.is_zero() {
            return None;
        }
        if d.v.is_zero() {
            let (qu, ru) = self.u.div_rem(&d.u);
            let (qv, rv) = self.v.div_rem(&d.u);
            return if ru.is_zero() && rv.is_zero() { Some(ZJ { u: qu, v: qv }) } else { None };
        }
        let n = d.norm();
        let t = self * &d.conj();
        let (qu, ru) = t.u.div_rem(&n);
        let (qv, rv) = t.v.div_rem(&n);
        if ru.is_zero() && rv.is_zero() {
            Some(ZJ { u: qu, v: qv })
        } else {
            None
        }
    }

    /// Gcd of the two integer components.
    pub fn content(&self) -> BigInt {
        self.u.gcd(&self.v)
    }

    /// Sign used for normalization: sign of the first nonzero component.
    pub fn is_negative(&self) -> bool {
        if !self.u.is_zero() {
            self.u.is_negative()
        } else {
            self.v.is_negative()
        }
    }

    pub fn to_qj(&self) -> QJ {
        QJ { u: BigRational::from_integer(self.u.clone()), v: BigRational::from_integer(self.v.clone()) }
    }
}

impl Add for &ZJ {
    type Output = ZJ;
    fn add(self, o: &ZJ) -> ZJ {
        ZJ { u: &self.u + &o.u, v: &self.v + &o.v }
    }
}

impl Sub for &ZJ {
    type Output = ZJ;
    fn sub(self, o: &ZJ) -> ZJ {
        ZJ { u: &self.u - &o.u, v: &self.v - &o.v }
    }
}

impl Mul for &ZJ {
    type Output = ZJ;
    fn mul(self, o: &ZJ) -> ZJ {
        if self.v.is_zero() && o.v.is_zero() {
            return ZJ { u: &self.u * &o.u, v: BigInt::zero() };
        }
        // (u1 + v1 j)(u2 + v2 j) with j^2 = -1 - j
        let vv = &self.v * &o.v;
        ZJ { u: &self.u * &o.u - &vv, v: &self.u * &o.v + &self.v * &o.u - vv }
    }
}

impl Neg for &ZJ {
    type Output = ZJ;
    fn neg(self) -> ZJ {
        ZJ { u: -&self.u, v: -&self.v }
    }
}

impl fmt::Display for ZJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else if self.v.is_negative() {
            write!(f, "({}-{}*j)", self.u, -&self.v)
        } else {
            write!(f, "({}+{}*j)", self.u, self.v)
        }
    }
}

/// An element of Q(j).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QJ {
    pub u: BigRational,
    pub v: BigRational,
}

impl Default for QJ {
    fn default() -> Self {
        QJ::zero()
    }
}

impl QJ {
    pub fn new(u: BigRational, v: BigRational) -> Self {
        QJ { u, v }
    }

    pub fn zero() -> Self {
        QJ { u: BigRational::zero(), v: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(u: i64) -> Self {
        QJ { u: BigRational::from_integer(BigInt::from(u)), v: BigRational::zero() }
    }

    pub fn rational(u: BigRational) -> Self {
        QJ { u, v: BigRational::zero() }
    }

    pub fn j() -> Self {
        QJ { u: BigRational::zero(), v: BigRational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn conj(&self) -> Self {
        QJ { u: &self.u - &self.v, v: -&self.v }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = &self.u * &self.u - &self.u * &self.v + &self.v * &self.v;
        let c = self.conj();
        Some(QJ { u: c.u / &n, v: c.v / &n })
    }
}

impl Add for &QJ {
    type Output = QJ;
    fn add(self, o: &QJ) -> QJ {
        QJ { u: &self.u + &o.u, v: &self.v + &o.v }
    }
}

impl Sub for &QJ {
    type Output = QJ;
    fn sub(self, o: &QJ) -> QJ {
        QJ { u: &self.u - &o.u, v: &self.v - &o.v }
    }
}

impl Mul for &QJ {
    type Output = QJ;
    fn mul(self, o: &QJ) -> QJ {
        if self.v.is_zero() && o.v.is_zero() {
            return QJ { u: &self.u * &o.u, v: BigRational::zero() };
        }
        let vv = &self.v * &o.v;
        QJ { u: &self.u * &o.u - &vv, v: &self.u * &o.v + &self.v * &o.u - vv }
    }
}

impl Neg for &QJ {
    type Output = QJ;
    fn neg(self) -> QJ {
        QJ { u: -&self.u, v: -&self.v }
    }
}

impl fmt::Display for QJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else if self.u.is_zero() {
            write!(f, "{}*j", self.v)
        } else if self.v.is_negative() {
            write!(f, "{}-{}*j", self.u, -&self.v)
        } else {
            write!(f, "{}+{}*j", self.u, self.v)
        }
    }
}
