//! Exact Gaussian-rational scalars ℚ(i).
//!
//! True complex scalars cannot be represented exactly; ℚ(i) is closed under
//! conjugation, which is all the anti-linear involution needs, and makes
//! every scalar identity a decidable equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar { re: BigRational::one(), im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² = z·conj(z), a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Parse the coefficient format `a/b+c/d*i`, with either part optional
    /// (`-1`, `i`, `-2/3*i`, `1-1/2*i` are all accepted).
    pub fn parse(s: &str) -> Result<Self, ScalarParseError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ScalarParseError(s));
        }
        // Split at the last top-level '+'/'-' that is not a leading sign.
        let bytes = s.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && bytes[k - 1] as char != '/' {
                split = Some(k);
                break;
            }
        }
        let (a, b) = match split {
            Some(k) => (&s[..k], &s[k..]),
            None => ("", s.as_str()),
        };
        let parse_rat = |t: &str| -> Result<BigRational, ScalarParseError> {
            let t = t.strip_prefix('+').unwrap_or(t);
            let (neg, t) = match t.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, t),
            };
            let r: BigRational = if let Some((num, den)) = t.split_once('/') {
                let n: BigInt = num.parse().map_err(|_| ScalarParseError(s.clone()))?;
                let d: BigInt = den.parse().map_err(|_| ScalarParseError(s.clone()))?;
                if d.is_zero() {
                    return Err(ScalarParseError(s.clone()));
                }
                BigRational::new(n, d)
            } else if t.is_empty() {
                BigRational::one()
            } else {
                let n: BigInt = t.parse().map_err(|_| ScalarParseError(s.clone()))?;
                BigRational::from_integer(n)
            };
            Ok(if neg { -r } else { r })
        };
        let (re_str, im_str) = if let Some(t) = b.strip_suffix("*i") {
            (a, Some(t))
        } else if let Some(t) = b.strip_suffix('i') {
            (a, Some(t))
        } else {
            if !a.is_empty() {
                return Err(ScalarParseError(s.clone()));
            }
            (b, None)
        };
        let re = if re_str.is_empty() { BigRational::zero() } else { parse_rat(re_str)? };
        let im = match im_str {
            Some(t) => parse_rat(t)?,
            None => BigRational::zero(),
        };
        Ok(Scalar { re, im })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse scalar {0:?}")]
pub struct ScalarParseError(pub String);

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", fmt_rat(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", fmt_rat(&self.re), fmt_rat(&-self.im.clone()))
        } else {
            write!(f, "{}+{}*i", fmt_rat(&self.re), fmt_rat(&self.im))
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
        let z = Scalar::from_parts(1, 2, -3, 4);
        assert_eq!(&z + &z.conj(), Scalar::from_parts(1, 1, 0, 1));
        assert!((&z * &z.inv().unwrap()).is_one());
    }

    #[test]
    fn norm_one_is_not_only_units() {
        // (3+4i)/5 has norm 1 without being a power of i; the unitary group
        // of ℚ(i) is infinite, which is why unitary-element enumeration in
        // linear categories must be frame-bounded.
        let z = Scalar::from_parts(3, 5, 4, 5);
        assert!(z.norm_sqr().is_one());
    }

    #[test]
    fn display_parse_round_trip() {
        for z in [
            Scalar::zero(),
            Scalar::one(),
            Scalar::i(),
            Scalar::from_int(-7),
            Scalar::from_parts(1, 2, 1, 3),
            Scalar::from_parts(-1, 2, -5, 1),
            Scalar::from_parts(0, 1, -2, 7),
        ] {
            let s = z.to_string();
            assert_eq!(Scalar::parse(&s).unwrap(), z, "{}", s);
        }
        assert_eq!(Scalar::parse("1/2+1/3*i").unwrap(), Scalar::from_parts(1, 2, 1, 3));
        assert_eq!(Scalar::parse("-i").unwrap(), -Scalar::i());
        assert_eq!(Scalar::parse("i").unwrap(), Scalar::i());
        assert!(Scalar::parse("1/0").is_err());
        assert!(Scalar::parse("").is_err());
    }
}
