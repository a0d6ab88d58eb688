//! Gaussian rationals `a + b i` with `a, b` exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Q(i)`. Both parts are kept in lowest terms by `BigRational`,
/// so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `num / den`; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `(a/b) + (c/d) i`.
    pub fn gaussian(a: i64, b: i64, c: i64, d: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Integer value, if this scalar is a (small) rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.im.is_zero() || !self.re.is_integer() {
            return None;
        }
        i64::try_from(self.re.to_integer()).ok()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar {
                re: self.re.recip(),
                im: BigRational::zero(),
            });
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    /// `self * a + b` style helper used in elimination: `self - f * g`.
    pub fn sub_mul(&mut self, f: &Scalar, g: &Scalar) {
        if f.is_zero() || g.is_zero() {
            return;
        }
        let p = f * g;
        *self -= &p;
    }
}

fn mul_parts(a: &Scalar, b: &Scalar) -> Scalar {
    if a.im.is_zero() && b.im.is_zero() {
        return Scalar {
            re: &a.re * &b.re,
            im: BigRational::zero(),
        };
    }
    if a.im.is_zero() {
        return Scalar {
            re: &a.re * &b.re,
            im: &a.re * &b.im,
        };
    }
    if b.im.is_zero() {
        return Scalar {
            re: &a.re * &b.re,
            im: &a.im * &b.re,
        };
    }
    Scalar {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        mul_parts(self, rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if !rhs.re.is_zero() {
            self.re += &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if !rhs.re.is_zero() {
            self.re -= &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_abs = self.im.abs();
        let im_body = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", im_abs)
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_negative() {
                    write!(f, "-{}", im_body)
                } else {
                    write!(f, "{}", im_body)
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}", self.re, sign, im_body)
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!("`{}`: only exact literals p/q", s)));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{}`", num)))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{}`", den)))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{}`: zero denominator", s)));
    }
    Ok(BigRational::new(num, den))
}

/// Parses an imaginary part such as `i`, `-i`, `3*i`, `1/2*i`, `i/3`, `2i`.
fn parse_imaginary(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s.strip_prefix('+').unwrap_or(s).trim()),
    };
    let value = if body == "i" {
        BigRational::one()
    } else if let Some(den) = body.strip_prefix("i/") {
        parse_rational(&format!("1/{}", den))?
    } else if let Some(coef) = body.strip_suffix("*i") {
        parse_rational(coef)?
    } else if let Some(coef) = body.strip_suffix('i') {
        parse_rational(coef)?
    } else {
        return Err(Error::Parse(format!("bad imaginary part `{}`", s)));
    };
    Ok(if neg { -value } else { value })
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p`, `p/q`, `i`, `r/s*i`, `i/q` and `p/q+r/s*i`, optionally
    /// wrapped in parentheses. Floating point literals are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let mut s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.starts_with('(') && s.ends_with(')') {
            s = s[1..s.len() - 1].to_string();
        }
        if s.is_empty() {
            return Err(Error::Parse("empty scalar literal".into()));
        }
        if !s.contains('i') {
            return Ok(Scalar::from(parse_rational(&s)?));
        }
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => {
                let re = parse_rational(&s[..k])?;
                let im = parse_imaginary(&s[k..])?;
                Ok(Scalar { re, im })
            }
            None => Ok(Scalar {
                re: BigRational::zero(),
                im: parse_imaginary(&s)?,
            }),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::ratio(2, 3);
        assert_eq!(&a + &b, Scalar::one());
        let z = Scalar::gaussian(1, 2, 1, 3);
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Scalar::one());
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn canonical_equality() {
        assert_eq!(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(-3, -6), Scalar::ratio(1, 2));
    }

    #[test]
    fn display_and_parse() {
        for (text, value) in [
            ("1/2", Scalar::ratio(1, 2)),
            ("-3", Scalar::from_int(-3)),
            ("i", Scalar::i()),
            ("-i", -Scalar::i()),
            ("1/2*i", Scalar::gaussian(0, 1, 1, 2)),
            ("1/3+1/2*i", Scalar::gaussian(1, 3, 1, 2)),
            ("1/3-i", Scalar::gaussian(1, 3, -1, 1)),
        ] {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<Scalar>().unwrap(), value);
        }
        assert_eq!("i/3".parse::<Scalar>().unwrap(), Scalar::gaussian(0, 1, 1, 3));
        assert_eq!(
            "(1/3 + 1/2*i)".parse::<Scalar>().unwrap(),
            Scalar::gaussian(1, 3, 1, 2)
        );
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!("0.5".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }
}
