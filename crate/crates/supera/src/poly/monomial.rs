//! Monomials with exponents in the half-integer lattice.
//!
//! Exponents are stored in half-units (the integer `3` means exponent `3/2`),
//! which turns all exponent arithmetic into plain integer arithmetic. Only
//! `a`, `q`, `t` may carry odd half-units; `x`, `y`, `z` and any interned
//! extras are restricted to whole exponents.
//!
//! The ordering is graded lexicographic with precedence `a > q > t > x > y > z`.

use super::varid::VarId;
use super::PolyError;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    /// Sorted by `VarId`, no zero exponents, values in half-units.
    exps: Vec<(VarId, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 2)] }
    }

    /// Build from `(var, half_units)` pairs, validating the per-variable rule.
    pub fn from_halves(pairs: &[(VarId, i64)]) -> Result<Self, PolyError> {
        let mut exps: Vec<(VarId, i64)> = pairs.iter().copied().filter(|&(_, e)| e != 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        for w in exps.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate variable in monomial");
        }
        for &(v, e) in &exps {
            if e % 2 != 0 && !v.half_allowed() {
                return Err(PolyError::HalfExponent { var: v.name() });
            }
        }
        Ok(Monomial { exps })
    }

    /// Build from whole-integer exponents.
    pub fn from_exps(pairs: &[(VarId, i64)]) -> Self {
        let halves: Vec<(VarId, i64)> = pairs.iter().map(|&(v, e)| (v, 2 * e)).collect();
        Monomial::from_halves(&halves).expect("whole exponents are always legal")
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, i64)> + '_ {
        self.exps.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    /// Exponent of `v` in half-units (0 if absent).
    pub fn exp_halves(&self, v: VarId) -> i64 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|idx| self.exps[idx].1)
            .unwrap_or(0)
    }

    /// Total degree in half-units.
    pub fn total_halves(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + rhs.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < rhs.exps.len() {
            match self.exps[i].0.cmp(&rhs.exps[j].0) {
                Ordering::Less => {
                    exps.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(rhs.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.exps[i].1 + rhs.exps[j].1;
                    if e != 0 {
                        exps.push((self.exps[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&rhs.exps[j..]);
        Monomial { exps }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, k)| (v, k * e)).collect(),
        }
    }

    /// `self / rhs`; always defined, Laurent monomials are units.
    pub fn div(&self, rhs: &Monomial) -> Monomial {
        self.mul(&rhs.inv())
    }

    /// Halve every exponent, if the result stays in the legal lattice.
    pub fn sqrt(&self) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &(v, e) in &self.exps {
            if e % 2 != 0 {
                // odd half-units would halve to quarter-units
                return None;
            }
            let h = e / 2;
            if h % 2 != 0 && !v.half_allowed() {
                return None;
            }
            exps.push((v, h));
        }
        Some(Monomial { exps })
    }

    /// True when every exponent is a non-negative whole integer.
    pub fn is_polynomial(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e >= 0 && e % 2 == 0)
    }

    /// Graded-lexicographic comparison.
    pub fn cmp_order(&self, rhs: &Monomial) -> Ordering {
        match self.total_halves().cmp(&rhs.total_halves()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lexicographic tie-break: scan variables in precedence order; the
        // monomial with the larger exponent on the first differing variable
        // is the larger monomial.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), rhs.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    Ordering::Less => match e.cmp(&0) {
                        Ordering::Equal => i += 1,
                        ord => return ord,
                    },
                    Ordering::Greater => match 0.cmp(&f) {
                        Ordering::Equal => j += 1,
                        ord => return ord,
                    },
                    Ordering::Equal => match e.cmp(&f) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
                (Some(&(_, e)), None) => match e.cmp(&0) {
                    Ordering::Equal => i += 1,
                    ord => return ord,
                },
                (None, Some(&(_, f))) => match 0.cmp(&f) {
                    Ordering::Equal => j += 1,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_order(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, halves) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if halves == 2 {
                write!(f, "{}", v)?;
            } else if halves % 2 == 0 {
                write!(f, "{}^{}", v, halves / 2)?;
            } else {
                write!(f, "{}^({}/2)", v, halves)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(VarId, i64)]) -> Monomial {
        Monomial::from_exps(pairs)
    }

    #[test]
    fn grlex_order() {
        // x^3 > x^2*y under grlex (equal degree, lex tie-break on x).
        let x3 = m(&[(VarId::X, 3)]);
        let x2y = m(&[(VarId::X, 2), (VarId::Y, 1)]);
        assert!(x3 > x2y);
        // a beats everything of the same degree.
        let a = m(&[(VarId::A, 1)]);
        let y = m(&[(VarId::Y, 1)]);
        assert!(a > y);
        // degree dominates.
        let xy = m(&[(VarId::X, 1), (VarId::Y, 1)]);
        assert!(xy > a);
        // negative exponents are smaller than absent ones at equal degree.
        let q_inv_x = Monomial::from_halves(&[(VarId::Q, -2), (VarId::X, 2)]).unwrap();
        let one = Monomial::one();
        assert_eq!(q_inv_x.total_halves(), 0);
        assert!(q_inv_x < one);
    }

    #[test]
    fn half_rule() {
        assert!(Monomial::from_halves(&[(VarId::A, 1)]).is_ok());
        assert!(matches!(
            Monomial::from_halves(&[(VarId::X, 1)]),
            Err(PolyError::HalfExponent { .. })
        ));
    }

    #[test]
    fn mul_div_sqrt() {
        let ax2 = m(&[(VarId::A, 1), (VarId::X, 2)]);
        // a -> a^(1/2) is legal, x^2 -> x is legal
        let expect = Monomial::from_halves(&[(VarId::A, 1), (VarId::X, 2)]).unwrap();
        assert_eq!(ax2.sqrt(), Some(expect));
        // x -> x^(1/2) is not
        let x = m(&[(VarId::X, 1)]);
        assert_eq!(x.sqrt(), None);
        assert_eq!(ax2.div(&ax2), Monomial::one());
        assert_eq!(
            m(&[(VarId::X, 1)]).mul(&m(&[(VarId::X, -1)])),
            Monomial::one()
        );
    }

    #[test]
    fn display() {
        let mo = Monomial::from_halves(&[(VarId::A, -1), (VarId::T, 3), (VarId::X, 4)]).unwrap();
        assert_eq!(mo.to_string(), "a^(-1/2)*t^(3/2)*x^2");
    }
}
