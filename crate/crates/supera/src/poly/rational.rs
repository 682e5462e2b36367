//! Rational functions as normalized quotients of Laurent polynomials.
//!
//! Normal form: the denominator is monomial-content-free with leading
//! coefficient 1 (monomial units are pushed into the numerator), and
//! [`RationalFunc::simplified`] additionally cancels detected common
//! polynomial factors. Equality is decided by cross-multiplication, so it
//! does not depend on how much cancellation has happened.

use super::coeff::GaussRat;
use super::gcd;
use super::laurent::LaurentPoly;
use super::varid::VarId;
use super::PolyError;
use num_complex::Complex64;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Eq, Debug)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunc {
                num,
                den: LaurentPoly::one(),
            });
        }
        // Move the denominator's monomial content and leading coefficient
        // into the numerator; monomials are units here.
        let content = den.content_monomial();
        let den = den.mul_monomial(&content.inv());
        let lead = den.leading().expect("nonzero").1.clone();
        let den = den.scale(&lead.inv());
        let num = num
            .mul_monomial(&content.inv())
            .scale(&lead.inv());
        Ok(RationalFunc { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunc::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        RationalFunc::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.is_poly().then_some(&self.num)
    }

    /// Cancel detected common polynomial factors of numerator and
    /// denominator. Detection is best-effort; the value never changes.
    pub fn simplified(&self) -> RationalFunc {
        if self.is_zero() || self.den.is_one() {
            return self.clone();
        }
        let g = gcd::gcd(&self.num, &self.den);
        if g.num_terms() <= 1 {
            return self.clone();
        }
        match (self.num.exact_div(&g), self.den.exact_div(&g)) {
            (Ok(n), Ok(d)) => RationalFunc::new(n, d).expect("gcd divisor nonzero"),
            _ => self.clone(),
        }
    }

    pub fn inv(&self) -> Result<RationalFunc, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        RationalFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow_i64(&self, e: i64) -> Result<RationalFunc, PolyError> {
        if e == 0 {
            return Ok(RationalFunc::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        RationalFunc::new(base.num.pow(k), base.den.pow(k))
    }

    /// Square root of a monomial value (`c * m` with `c` a Gaussian rational
    /// admitting a square root and `m` a monomial in the legal half lattice).
    pub fn monomial_sqrt(&self) -> Option<RationalFunc> {
        if !self.den.is_one() || self.num.num_terms() != 1 {
            return None;
        }
        let (m, c) = self.num.terms().next().expect("single term");
        let mr = m.sqrt()?;
        let cr = c.sqrt()?;
        Some(RationalFunc::from_poly(LaurentPoly::from_monomial(mr, cr)))
    }

    pub fn conj(&self) -> RationalFunc {
        RationalFunc::new(self.num.conj(), self.den.conj()).expect("conjugate den nonzero")
    }

    pub fn substitute(
        &self,
        bindings: &HashMap<VarId, RationalFunc>,
    ) -> Result<RationalFunc, PolyError> {
        let n = self.num.substitute(bindings)?;
        let d = self.den.substitute(bindings)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        &n / &d
    }

    /// The `q -> 1` limit: cancel the maximal common `(1-q)` power, then
    /// substitute. `PoleAtQ1` when the limit is genuinely infinite (or an
    /// indeterminate form survives cancellation).
    pub fn limit_q1(&self) -> Result<RationalFunc, PolyError> {
        let one_minus_q = &LaurentPoly::one() - &LaurentPoly::var(VarId::Q);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let d1 = eval_q1(&den);
            if !d1.is_zero() {
                return Ok(RationalFunc::new(eval_q1(&num), d1)?.simplified());
            }
            let n1 = eval_q1(&num);
            if n1.is_zero() {
                if let (Ok(n2), Ok(d2)) = (num.exact_div(&one_minus_q), den.exact_div(&one_minus_q))
                {
                    num = n2;
                    den = d2;
                    continue;
                }
            }
            return Err(PolyError::PoleAtQ1);
        }
    }

    pub fn eval_complex(&self, values: &HashMap<VarId, Complex64>) -> Complex64 {
        self.num.eval_complex(values) / self.den.eval_complex(values)
    }

    /// Bind a subset of variables to rational constants, exactly.
    pub fn eval_vars_rational(
        &self,
        values: &HashMap<VarId, num_rational::BigRational>,
    ) -> Result<RationalFunc, PolyError> {
        RationalFunc::new(
            self.num.eval_vars_rational(values),
            self.den.eval_vars_rational(values),
        )
    }

    /// Exact evaluation at rational points; `DivisionByZero` on a vanishing
    /// denominator.
    pub fn eval_gauss(
        &self,
        values: &HashMap<VarId, num_rational::BigRational>,
    ) -> Result<GaussRat, PolyError> {
        let d = self.den.eval_gauss(values);
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(&self.num.eval_gauss(values) / &d)
    }
}

/// Substitute `q = 1`; sound for half exponents since `1^(k/2) = 1`.
fn eval_q1(p: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (m, c) in p.terms() {
        let pairs: Vec<_> = m.iter().filter(|&(v, _)| v != VarId::Q).collect();
        let m2 = super::monomial::Monomial::from_halves(&pairs).expect("legal");
        out.add_term(m2, c.clone());
    }
    out
}

impl PartialEq for RationalFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        if self.den == rhs.den {
            return RationalFunc::new(&self.num + &rhs.num, self.den.clone()).expect("den nonzero");
        }
        // Shared-denominator fast paths keep sums of operator coefficients
        // from ballooning.
        if let Ok(ratio) = self.den.exact_div(&rhs.den) {
            return RationalFunc::new(&self.num + &(&rhs.num * &ratio), self.den.clone())
                .expect("den nonzero");
        }
        if let Ok(ratio) = rhs.den.exact_div(&self.den) {
            return RationalFunc::new(&(&self.num * &ratio) + &rhs.num, rhs.den.clone())
                .expect("den nonzero");
        }
        RationalFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("den nonzero")
    }
}

impl Sub for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self + &-rhs
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        RationalFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("dens nonzero")
    }
}

impl Div for &RationalFunc {
    type Output = Result<RationalFunc, PolyError>;
    fn div(self, rhs: &RationalFunc) -> Result<RationalFunc, PolyError> {
        Ok(self * &rhs.inv()?)
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn rf(n: &str, d: &str) -> RationalFunc {
        RationalFunc::new(parse(n).unwrap(), parse(d).unwrap()).unwrap()
    }

    #[test]
    fn limit_examples() {
        // (1-q^2)/(1-q) -> 2
        let r = rf("1-q^2", "1-q");
        assert_eq!(
            r.limit_q1().unwrap(),
            RationalFunc::from_poly(parse("2").unwrap())
        );
        // constants pass through
        let r = rf("5", "1");
        assert_eq!(
            r.limit_q1().unwrap(),
            RationalFunc::from_poly(parse("5").unwrap())
        );
        // a genuine pole
        let r = rf("1", "1-q");
        assert!(matches!(r.limit_q1(), Err(PolyError::PoleAtQ1)));
    }

    #[test]
    fn limit_cancels_common_factor_after_substitution() {
        // (x-1)*(1+a*q*t^3*x^2) / (q*(1+a*t^3*x)*(1+a*t^3*q^-1*x^2))
        // at q=1 both sides gain a (1+a*t^3*x^2) factor, which must cancel.
        let r = rf(
            "(x-1)*(1+a*q*t^3*x^2)",
            "q*(1+a*t^3*x)*(1+a*t^3*q^-1*x^2)",
        );
        let lim = r.limit_q1().unwrap();
        assert_eq!(lim, rf("x-1", "1+a*t^3*x"));
        assert_eq!(lim.num(), &parse("x-1").unwrap());
    }

    #[test]
    fn cross_multiplied_equality() {
        let r1 = rf("x^2-1", "x-1");
        let r2 = rf("x+1", "1");
        assert_eq!(r1, r2);
        assert_eq!(r1.simplified().num(), &parse("x+1").unwrap());
    }

    #[test]
    fn shared_denominator_add() {
        let r1 = rf("x", "1+a*t^3*x");
        let r2 = rf("1", "(1+a*t^3*x)^2");
        let s = &r1 + &r2;
        assert_eq!(s, rf("x*(1+a*t^3*x)+1", "(1+a*t^3*x)^2"));
        assert_eq!(s.den(), &parse("(1+a*t^3*x)^2").unwrap());
    }

    #[test]
    fn monomial_sqrt() {
        let r = RationalFunc::from_poly(parse("-a^-1*t^-3").unwrap());
        let s = r.monomial_sqrt().unwrap();
        assert_eq!(
            s,
            RationalFunc::from_poly(parse("i*a^(-1/2)*t^(-3/2)").unwrap())
        );
        assert!(RationalFunc::from_poly(parse("1+q").unwrap())
            .monomial_sqrt()
            .is_none());
    }
}
