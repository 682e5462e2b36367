//! Text grammar for Laurent polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := ('+' | '-')* atom ('^' exponent)?
//! atom     := rational | 'i' | variable | '(' expr ')'
//! rational := digits ('/' digits)?
//! exponent := sign? rational | '(' sign? rational ')'
//! ```
//!
//! Exponent denominators must divide 2, and half exponents are only accepted
//! on `a`, `q`, `t`. Non-atomic bases (numbers, parenthesized sums) take
//! integer exponents; negative ones only when the base is a single term.

use super::coeff::GaussRat;
use super::laurent::LaurentPoly;
use super::varid::VarId;
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn parse(text: &str) -> Result<LaurentPoly, PolyError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut sign = false;
        loop {
            match self.peek() {
                Some(b'-') => {
                    sign = !sign;
                    self.pos += 1;
                }
                Some(b'+') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let base = self.atom()?;
        let poly = if self.eat(b'^') {
            let (num, den) = self.exponent()?;
            self.apply_exponent(base, num, den)?
        } else {
            self.base_poly(base)
        };
        Ok(if sign { -&poly } else { poly })
    }

    fn base_poly(&self, base: Atom) -> LaurentPoly {
        match base {
            Atom::Number(r) => LaurentPoly::constant(GaussRat::from_rational(r)),
            Atom::Imag => LaurentPoly::imaginary_unit(),
            Atom::Var(v) => LaurentPoly::var(v),
            Atom::Paren(p) => p,
        }
    }

    fn apply_exponent(
        &mut self,
        base: Atom,
        num: BigInt,
        den: BigInt,
    ) -> Result<LaurentPoly, PolyError> {
        let den_i: i64 = i64::try_from(&den).map_err(|_| self.err("exponent too large"))?;
        let num_i: i64 = i64::try_from(&num).map_err(|_| self.err("exponent too large"))?;
        match base {
            Atom::Var(v) => {
                let halves = match den_i {
                    1 => 2 * num_i,
                    2 => num_i,
                    _ => return Err(self.err("exponent denominator must divide 2")),
                };
                if halves % 2 != 0 && !v.half_allowed() {
                    return Err(self.err(&format!("half exponents are not allowed on {v}")));
                }
                LaurentPoly::var_pow_halves(v, halves).map_err(|_| {
                    self.err(&format!("half exponents are not allowed on {v}"))
                })
            }
            Atom::Number(r) => {
                if den_i != 1 {
                    return Err(self.err("fractional exponent on a number"));
                }
                let c = GaussRat::from_rational(r);
                if c.is_zero() && num_i < 0 {
                    return Err(self.err("negative power of zero"));
                }
                Ok(LaurentPoly::constant(c.pow(num_i)))
            }
            Atom::Imag => {
                if den_i != 1 {
                    return Err(self.err("fractional exponent on i"));
                }
                Ok(LaurentPoly::constant(GaussRat::i().pow(num_i)))
            }
            Atom::Paren(p) => {
                if den_i != 1 {
                    return Err(self.err("fractional exponent on a sum"));
                }
                if num_i >= 0 {
                    Ok(p.pow(num_i as u32))
                } else if p.num_terms() == 1 {
                    let (m, c) = p.terms().next().expect("single term");
                    Ok(LaurentPoly::from_monomial(m.pow(num_i), c.pow(num_i)))
                } else {
                    Err(self.err("negative power of a polynomial"))
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Atom, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(Atom::Paren(inner))
            }
            Some(b) if b.is_ascii_digit() => {
                let (num, den) = self.rational()?;
                Ok(Atom::Number(BigRational::new(num, den)))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let ident = self.ident();
                if ident == "i" {
                    Ok(Atom::Imag)
                } else {
                    Ok(Atom::Var(VarId::intern(&ident)))
                }
            }
            _ => Err(self.err("expected a number, variable, 'i' or '('")),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos])
            .parse()
            .map_err(|_| self.err("bad integer"))
    }

    fn rational(&mut self) -> Result<(BigInt, BigInt), PolyError> {
        let num = self.digits()?;
        if self.bytes.get(self.pos) == Some(&b'/') {
            // only treat '/' as a fraction bar when digits follow
            if self
                .bytes
                .get(self.pos + 1)
                .is_some_and(|b| b.is_ascii_digit())
            {
                self.pos += 1;
                let den = self.digits()?;
                if den == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                return Ok((num, den));
            }
        }
        Ok((num, BigInt::from(1)))
    }

    /// `sign? rational` with optional enclosing parentheses.
    fn exponent(&mut self) -> Result<(BigInt, BigInt), PolyError> {
        let parens = self.eat(b'(');
        let mut sign = false;
        loop {
            match self.peek() {
                Some(b'-') => {
                    sign = !sign;
                    self.pos += 1;
                }
                Some(b'+') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let (num, den) = self.rational()?;
        if parens && !self.eat(b')') {
            return Err(self.err("expected ')' after exponent"));
        }
        Ok((if sign { -num } else { num }, den))
    }
}

enum Atom {
    Number(BigRational),
    Imag,
    Var(VarId),
    Paren(LaurentPoly),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_half_powers() {
        let p = parse("a^(1/2)").unwrap();
        assert_eq!(p, LaurentPoly::var_pow_halves(VarId::A, 1).unwrap());
        assert!(parse("a^1/2").is_ok());
        let e = parse("x^(1/2)");
        assert!(matches!(e, Err(PolyError::Syntax { .. })));
    }

    #[test]
    fn error_position() {
        match parse("a^2 + $") {
            Err(PolyError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn trefoil_constant_term() {
        let p = parse("a^2*t^4*(x-1)*x^3").unwrap();
        let q = parse("a^2*t^4*x^4 - a^2*t^4*x^3").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn signs_and_imaginary() {
        assert_eq!(parse("--3").unwrap(), LaurentPoly::int(3));
        assert_eq!(parse("i^2").unwrap(), LaurentPoly::int(-1));
        assert_eq!(
            parse("-i*a^(-1/2)").unwrap(),
            LaurentPoly::from_monomial(
                super::super::monomial::Monomial::from_halves(&[(VarId::A, -1)]).unwrap(),
                -&GaussRat::i()
            )
        );
    }

    #[test]
    fn negative_monomial_power() {
        assert_eq!(parse("(2*x)^-1").unwrap(), parse("1/2*x^-1").unwrap());
        assert!(parse("(1+x)^-1").is_err());
    }
}
