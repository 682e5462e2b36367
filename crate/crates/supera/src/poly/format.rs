//! Printing in plain text, LaTeX and the JSON term format.
//!
//! `parse(plain(p)) == p` for every polynomial, and the JSON form round-trips
//! bit-exactly: `{"terms":[{"c":["re","im"],"e":{"a":[p,q],...}}]}` with
//! exponents as `[numerator, denominator]` pairs.

use super::coeff::GaussRat;
use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::varid::VarId;
use super::PolyError;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Style {
    Plain,
    Json,
    Latex,
}

pub fn format(p: &LaurentPoly, style: Style) -> String {
    match style {
        Style::Plain => plain(p),
        Style::Latex => latex(p),
        Style::Json => serde_json::to_string(&JsonPoly::from_poly(p)).expect("serializable"),
    }
}

fn is_negative_ish(c: &GaussRat) -> bool {
    c.re.is_negative() || (c.re.is_zero() && c.im.is_negative())
}

pub fn plain(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms_desc().enumerate() {
        let neg = is_negative_ish(c);
        let mag = if neg { -c } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&plain_term(&mag, m));
    }
    out
}

fn plain_term(mag: &GaussRat, m: &Monomial) -> String {
    if m.is_one() {
        return mag.to_string();
    }
    if mag.is_one() {
        return m.to_string();
    }
    let coeff = if mag.is_real() || mag.re.is_zero() {
        mag.to_string()
    } else {
        format!("({})", mag)
    };
    format!("{}*{}", coeff, m)
}

pub fn latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms_desc().enumerate() {
        let neg = is_negative_ish(c);
        let mag = if neg { -c } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&latex_term(&mag, m));
    }
    out
}

fn latex_rational(r: &BigRational) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) {
        format!("{}", r.numer())
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{}\\frac{{{}}}{{{}}}", sign, r.numer().magnitude(), r.denom())
    }
}

fn latex_coeff(c: &GaussRat) -> String {
    if c.is_real() {
        latex_rational(&c.re)
    } else if c.re.is_zero() {
        if c.im.is_zero() {
            "0".into()
        } else if c.im == BigRational::from_integer(1.into()) {
            "i".into()
        } else {
            format!("{} i", latex_rational(&c.im))
        }
    } else {
        format!(
            "\\left({} + {} i\\right)",
            latex_rational(&c.re),
            latex_rational(&c.im)
        )
    }
}

fn latex_term(mag: &GaussRat, m: &Monomial) -> String {
    let mono = if m.is_one() {
        String::new()
    } else {
        let mut s = String::new();
        for (v, halves) in m.iter() {
            if !s.is_empty() {
                s.push(' ');
            }
            if halves == 2 {
                s.push_str(&v.name());
            } else if halves % 2 == 0 {
                s.push_str(&format!("{}^{{{}}}", v.name(), halves / 2));
            } else {
                s.push_str(&format!("{}^{{{}/2}}", v.name(), halves));
            }
        }
        s
    };
    if mono.is_empty() {
        latex_coeff(mag)
    } else if mag.is_one() {
        mono
    } else {
        format!("{} {}", latex_coeff(mag), mono)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JsonPoly {
    pub terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JsonTerm {
    /// `[re, im]` as rational strings.
    pub c: [String; 2],
    /// Exponents per variable as `[numerator, denominator]`.
    pub e: BTreeMap<String, [i64; 2]>,
}

impl JsonPoly {
    pub fn from_poly(p: &LaurentPoly) -> JsonPoly {
        let terms = p
            .terms_desc()
            .map(|(m, c)| {
                let mut e = BTreeMap::new();
                for (v, halves) in m.iter() {
                    let pair = if halves % 2 == 0 {
                        [halves / 2, 1]
                    } else {
                        [halves, 2]
                    };
                    e.insert(v.name(), pair);
                }
                JsonTerm {
                    c: [c.re.to_string(), c.im.to_string()],
                    e,
                }
            })
            .collect();
        JsonPoly { terms }
    }

    pub fn to_poly(&self) -> Result<LaurentPoly, PolyError> {
        let mut out = LaurentPoly::zero();
        for term in &self.terms {
            let re: BigRational = term.c[0].parse().map_err(|_| PolyError::Syntax {
                pos: 0,
                msg: format!("bad rational {:?}", term.c[0]),
            })?;
            let im: BigRational = term.c[1].parse().map_err(|_| PolyError::Syntax {
                pos: 0,
                msg: format!("bad rational {:?}", term.c[1]),
            })?;
            let mut halves = Vec::new();
            for (name, [num, den]) in &term.e {
                if !VarId::valid_name(name) {
                    return Err(PolyError::Syntax {
                        pos: 0,
                        msg: format!("bad variable name {name:?}"),
                    });
                }
                let v = VarId::intern(name);
                let h = match den {
                    1 => 2 * num,
                    2 => *num,
                    _ => {
                        return Err(PolyError::Syntax {
                            pos: 0,
                            msg: format!("exponent denominator {den} must divide 2"),
                        })
                    }
                };
                halves.push((v, h));
            }
            out.add_term(Monomial::from_halves(&halves)?, GaussRat::new(re, im));
        }
        Ok(out)
    }
}

pub fn from_json(text: &str) -> Result<LaurentPoly, PolyError> {
    let jp: JsonPoly = serde_json::from_str(text).map_err(|e| PolyError::Syntax {
        pos: 0,
        msg: format!("bad JSON polynomial: {e}"),
    })?;
    jp.to_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn plain_round_trip() {
        for text in [
            "a*q^-1 + a*q*t^2 + a^2*t^3",
            "i*a^(-1/2)*q^(1/2)*t^(-3/2)",
            "-x + 3/2*y - 1",
            "(1+i)*x - i",
            "0",
        ] {
            let p = parse(text).unwrap();
            let printed = plain(&p);
            assert_eq!(parse(&printed).unwrap(), p, "printed as {printed}");
        }
    }

    #[test]
    fn plain_is_descending() {
        let p = parse("1 + a^2*t^3 + a*q*t^2 + a*q^-1").unwrap();
        assert_eq!(plain(&p), "a^2*t^3 + a*q*t^2 + a*q^-1 + 1");
    }

    #[test]
    fn json_round_trip() {
        let p = parse("i*a^(1/2)*t^(3/2) - 2/3*x*y^-2").unwrap();
        let json = format(&p, Style::Json);
        let back = from_json(&json).unwrap();
        assert_eq!(back, p);
        // byte-identical re-serialization
        assert_eq!(format(&back, Style::Json), json);
    }

    #[test]
    fn latex_has_braces() {
        let p = parse("a^(-1/2)*x^2 - 1/2").unwrap();
        let s = latex(&p);
        assert!(s.contains("a^{-1/2}"));
        assert!(s.contains("\\frac{1}{2}"));
    }
}
