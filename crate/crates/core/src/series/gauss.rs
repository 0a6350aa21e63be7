use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Gaussian integer `re + im·i` with arbitrary-precision parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn real(re: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: BigInt::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for the four units 1, -1, i, -i.
    pub fn is_unit(&self) -> bool {
        (self.re.abs().is_one() && self.im.is_zero()) || (self.re.is_zero() && self.im.abs().is_one())
    }

    /// Inverse of a unit; `None` for anything else.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        // 1/(re + im i) = re - im i when re² + im² = 1
        Some(Self { re: self.re.clone(), im: -self.im.clone() })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Largest bit length of the two parts.
    pub(crate) fn bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }

    pub(crate) fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.re.to_i64()?, self.im.to_i64()?))
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        Self::real(1)
    }
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        Self::real(v)
    }
}

impl From<BigInt> for GaussInt {
    fn from(v: BigInt) -> Self {
        Self::real(v)
    }
}

impl<'a> Add<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, rhs: &GaussInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<'a> Mul<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussInt::real(&self.re * &rhs.re);
        }
        GaussInt { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        &self * &rhs
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

/// JSON integer: a number when it fits in `i64`, otherwise a decimal string.
pub(crate) mod json_int {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(x) => Ok(BigInt::from(x)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GaussJson {
    #[serde(with = "json_int")]
    re: BigInt,
    #[serde(with = "json_int")]
    im: BigInt,
}

impl Serialize for GaussInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GaussJson { re: self.re.clone(), im: self.im.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let g = GaussJson::deserialize(d)?;
        Ok(GaussInt { re: g.re, im: g.im })
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -&self.im),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_and_inverses() {
        for u in [GaussInt::from(1), GaussInt::from(-1), GaussInt::i(), -GaussInt::i()] {
            assert!(u.is_unit());
            assert_eq!(&u * &u.unit_inverse().unwrap(), GaussInt::one());
        }
        assert!(!GaussInt::new(1, 1).is_unit());
        assert!(GaussInt::from(2).unit_inverse().is_none());
    }

    #[test]
    fn i_squared() {
        assert_eq!(GaussInt::i().pow(2), GaussInt::from(-1));
        assert_eq!(GaussInt::i().pow(4), GaussInt::one());
        assert_eq!(GaussInt::new(1, 1).pow(2), GaussInt::new(0, 2));
    }

    #[test]
    fn display() {
        assert_eq!(GaussInt::from(-3).to_string(), "-3");
        assert_eq!(GaussInt::new(0, -1).to_string(), "-1i");
        assert_eq!(GaussInt::new(2, -5).to_string(), "2-5i");
    }

    #[test]
    fn json_keeps_big_values_exact() {
        let big: BigInt = "-98765432109876543210987654321".parse().unwrap();
        let g = GaussInt::new(big, 7);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"re":"-98765432109876543210987654321","im":7}"#);
        assert_eq!(serde_json::from_str::<GaussInt>(&text).unwrap(), g);
    }

    #[test]
    fn real_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let g = GaussInt::from(big.clone());
        assert!(g.is_real());
        assert_eq!(g.re, big);
    }
}
