//! Gaussian-rational coefficients `re + i*im`.
//!
//! The formal unit `i` fixes the square-root branch used throughout:
//! `(-1)^(1/2) = i`, so `(-c)^(1/2) = i*sqrt(c)` for positive rational `c`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        GaussRat::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRat::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The `i -> -i` conjugation automorphism.
    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re^2 + im^2` (a rational).
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero coefficient");
        let n = self.norm();
        GaussRat::new(&self.re / &n, -&self.im / &n)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return GaussRat::one();
        }
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = GaussRat::one();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Square root within the Gaussian rationals, when one exists among
    /// `{r, i*r : r rational}`. Returns `i*sqrt(|c|)` for negative real `c`,
    /// fixing the global branch convention.
    pub fn sqrt(&self) -> Option<GaussRat> {
        if !self.im.is_zero() {
            return None;
        }
        if self.re.is_zero() {
            return Some(GaussRat::zero());
        }
        let r = rational_sqrt(&self.re.abs())?;
        if self.re.is_positive() {
            Some(GaussRat::from_rational(r))
        } else {
            Some(GaussRat::new(BigRational::zero(), r))
        }
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv()
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &BigRational| {
            if im.is_one() {
                write!(f, "i")
            } else if (-im).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{}*i", im)
            }
        };
        if self.re.is_zero() {
            im_part(f, &self.im)
        } else if self.im.is_positive() {
            write!(f, "{}+", self.re)?;
            im_part(f, &self.im)
        } else {
            write!(f, "{}", self.re)?;
            im_part(f, &self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared() {
        let i = GaussRat::i();
        assert_eq!(&i * &i, GaussRat::from_int(-1));
        assert_eq!(i.pow(4), GaussRat::one());
        assert_eq!(i.pow(-1), -&i);
    }

    #[test]
    fn inverse() {
        let c = GaussRat::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(3.into(), 4.into()),
        );
        assert!((&c * &c.inv()).is_one());
    }

    #[test]
    fn sqrt_branch() {
        assert_eq!(GaussRat::from_int(-1).sqrt(), Some(GaussRat::i()));
        assert_eq!(GaussRat::from_int(4).sqrt(), Some(GaussRat::from_int(2)));
        assert_eq!(
            GaussRat::from_ratio(-9, 4).sqrt(),
            Some(GaussRat::new(
                BigRational::zero(),
                BigRational::new(3.into(), 2.into())
            ))
        );
        assert_eq!(GaussRat::from_int(2).sqrt(), None);
        assert_eq!(GaussRat::i().sqrt(), None);
    }

    #[test]
    fn display() {
        assert_eq!(GaussRat::i().to_string(), "i");
        assert_eq!(GaussRat::from_ratio(-3, 2).to_string(), "-3/2");
        let c = GaussRat::new(BigRational::one(), -BigRational::one());
        assert_eq!(c.to_string(), "1-i");
    }
}
