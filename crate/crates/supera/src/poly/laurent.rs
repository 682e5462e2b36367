//! Sparse multivariate Laurent polynomials over the Gaussian rationals.
//!
//! Terms live in a `BTreeMap` keyed by the graded-lex monomial order, so a
//! polynomial has exactly one representation and iteration order is
//! deterministic. The last map entry is the leading term.

use super::coeff::GaussRat;
use super::monomial::Monomial;
use super::rational::RationalFunc;
use super::varid::VarId;
use super::PolyError;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::constant(GaussRat::from_int(n))
    }

    pub fn imaginary_unit() -> Self {
        LaurentPoly::constant(GaussRat::i())
    }

    pub fn var(v: VarId) -> Self {
        LaurentPoly::from_monomial(Monomial::var(v), GaussRat::one())
    }

    /// `c * v^(halves/2)`.
    pub fn var_pow_halves(v: VarId, halves: i64) -> Result<Self, PolyError> {
        Ok(LaurentPoly::from_monomial(
            Monomial::from_halves(&[(v, halves)])?,
            GaussRat::one(),
        ))
    }

    pub fn var_pow(v: VarId, e: i64) -> Self {
        LaurentPoly::from_monomial(Monomial::from_exps(&[(v, e)]), GaussRat::one())
    }

    pub fn from_monomial(m: Monomial, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, GaussRat)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> + '_ {
        self.terms.iter()
    }

    /// Terms in descending monomial order (leading first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRat {
        self.terms.get(m).cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Leading (monomial, coefficient) under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &GaussRat)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut set = BTreeSet::new();
        for m in self.terms.keys() {
            set.extend(m.vars());
        }
        set
    }

    pub fn scale(&self, c: &GaussRat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The `i -> -i` conjugation automorphism, applied coefficient-wise.
    pub fn conj(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    /// Minimum and maximum exponent of `v` in half-units.
    pub fn degree_halves(&self, v: VarId) -> Option<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        for m in self.terms.keys() {
            let e = m.exp_halves(v);
            range = Some(match range {
                None => (e, e),
                Some((lo, hi)) => (lo.min(e), hi.max(e)),
            });
        }
        range
    }

    /// Degree of `v` in whole units, when all exponents of `v` are whole.
    pub fn degree(&self, v: VarId) -> Option<(i64, i64)> {
        self.degree_halves(v).map(|(lo, hi)| {
            debug_assert!(lo % 2 == 0 && hi % 2 == 0);
            (lo / 2, hi / 2)
        })
    }

    /// True if `v` only appears with whole exponents.
    pub fn whole_in(&self, v: VarId) -> bool {
        self.terms.keys().all(|m| m.exp_halves(v) % 2 == 0)
    }

    /// Collect the coefficient of `v^e` (whole `e`), with `v` removed.
    pub fn coeff_of(&self, v: VarId, e: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if m.exp_halves(v) == 2 * e {
                out.add_term(m.div(&Monomial::from_exps(&[(v, e)])), c.clone());
            }
        }
        out
    }

    /// View as a univariate polynomial in `v`: list of `(exponent, coeff)` by
    /// ascending whole exponent, coefficients free of `v`.
    pub fn as_univariate(&self, v: VarId) -> Vec<(i64, LaurentPoly)> {
        let mut map: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let h = m.exp_halves(v);
            assert!(h % 2 == 0, "half exponent on main variable {v}");
            let e = h / 2;
            map.entry(e)
                .or_default()
                .add_term(m.div(&Monomial::from_exps(&[(v, e)])), c.clone());
        }
        map.into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }

    /// Componentwise-minimum monomial of the support (the monomial content).
    pub fn content_monomial(&self) -> Monomial {
        let mut mins: BTreeMap<VarId, i64> = BTreeMap::new();
        for v in self.vars() {
            let min = self
                .terms
                .keys()
                .map(|m| m.exp_halves(v))
                .min()
                .unwrap_or(0);
            mins.insert(v, min);
        }
        let pairs: Vec<(VarId, i64)> = mins.into_iter().filter(|&(_, e)| e != 0).collect();
        Monomial::from_halves(&pairs).expect("content of legal monomials is legal")
    }

    /// Divide out the monomial content and scale the leading coefficient to 1.
    /// Idempotent; errors on the zero polynomial.
    pub fn normalize_unit(&self) -> Result<LaurentPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let stripped = self.mul_monomial(&self.content_monomial().inv());
        let lead = stripped.leading().expect("nonzero").1.clone();
        Ok(stripped.scale(&lead.inv()))
    }

    /// Exact division; `NotDivisible` when no Laurent-polynomial quotient
    /// exists, `DivisionByZero` for a zero divisor.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both operands to content-free position; a quotient of
        // content-free polynomials is itself content-free, so plain
        // leading-term division decides divisibility.
        let mp = self.content_monomial();
        let md = d.content_monomial();
        let mut rem = self.mul_monomial(&mp.inv());
        let dd = d.mul_monomial(&md.inv());
        let (dlm, dlc) = dd.leading().expect("nonzero divisor");
        let dlm = dlm.clone();
        let dlc = dlc.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let (rlm, rlc) = rem.leading().expect("nonzero");
            let qm = rlm.div(&dlm);
            // In shifted (polynomial) position the quotient monomial must
            // have non-negative exponents.
            if qm.iter().any(|(_, e)| e < 0) {
                return Err(PolyError::NotDivisible);
            }
            let qc = &rlc.clone() / &dlc;
            for (m, c) in &dd.terms {
                rem.add_term(m.mul(&qm), -&(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot.mul_monomial(&mp.div(&md)))
    }

    /// Multiplicity of `d` as a factor, together with the cofactor.
    pub fn strip_factor(&self, d: &LaurentPoly) -> (u32, LaurentPoly) {
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(d) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    /// Substitute rational functions for variables; unbound variables stay.
    pub fn substitute(
        &self,
        bindings: &HashMap<VarId, RationalFunc>,
    ) -> Result<RationalFunc, PolyError> {
        let mut acc = RationalFunc::zero();
        for (m, c) in &self.terms {
            let mut term = RationalFunc::from_poly(LaurentPoly::constant(c.clone()));
            let mut residue = Monomial::one();
            for (v, halves) in m.iter() {
                match bindings.get(&v) {
                    None => {
                        residue = residue.mul(&Monomial::from_halves(&[(v, halves)])?);
                    }
                    Some(val) => {
                        if val.is_zero() {
                            if halves < 0 {
                                return Err(PolyError::SubstituteZero { var: v.name() });
                            }
                            // positive power of zero kills the term
                            term = RationalFunc::zero();
                            break;
                        }
                        let whole = halves.div_euclid(2);
                        let half = halves.rem_euclid(2);
                        if whole != 0 {
                            term = &term * &val.pow_i64(whole)?;
                        }
                        if half != 0 {
                            let root = val
                                .monomial_sqrt()
                                .ok_or_else(|| PolyError::NonSquareBinding { var: v.name() })?;
                            term = &term * &root;
                        }
                    }
                }
            }
            let residue = RationalFunc::from_poly(LaurentPoly::from_monomial(
                residue,
                GaussRat::one(),
            ));
            acc = &acc + &(&term * &residue);
        }
        Ok(acc)
    }

    /// Substitute a single variable by a rational constant, exactly.
    pub fn eval_var_rational(&self, v: VarId, value: &BigRational) -> LaurentPoly {
        let mut vals = HashMap::new();
        vals.insert(v, value.clone());
        self.eval_vars_rational(&vals)
    }

    /// Substitute a subset of variables by rational constants, exactly;
    /// other variables stay symbolic. Requires whole exponents on the bound
    /// variables.
    pub fn eval_vars_rational(&self, values: &HashMap<VarId, BigRational>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept: Vec<(VarId, i64)> = Vec::new();
            for (v, halves) in m.iter() {
                match values.get(&v) {
                    None => kept.push((v, halves)),
                    Some(val) => {
                        assert!(
                            halves % 2 == 0,
                            "half exponent of {v} cannot take rational values"
                        );
                        coeff = &coeff
                            * &GaussRat::from_rational(rational_pow(val, halves / 2));
                    }
                }
            }
            out.add_term(
                Monomial::from_halves(&kept).expect("subset of a legal monomial"),
                coeff,
            );
        }
        out
    }

    /// Exact evaluation at rational points; requires whole exponents on the
    /// bound variables and a value for every variable present.
    pub fn eval_gauss(&self, values: &HashMap<VarId, BigRational>) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, halves) in m.iter() {
                assert!(halves % 2 == 0, "half exponent of {v} in exact evaluation");
                let val = values
                    .get(&v)
                    .unwrap_or_else(|| panic!("no value for variable {v}"));
                t = &t * &GaussRat::from_rational(rational_pow(val, halves / 2));
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Numeric evaluation; half exponents use the principal branch of `powc`,
    /// which agrees with the global `(-1)^(1/2) = i` convention.
    pub fn eval_complex(&self, values: &HashMap<VarId, Complex64>) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            acc += self.term_complex(m, c, values);
        }
        acc
    }

    /// Scale-normalized residual `|p(v)| / (1 + sum |terms|)`.
    pub fn residual_at(&self, values: &HashMap<VarId, Complex64>) -> f64 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut scale = 1.0;
        for (m, c) in &self.terms {
            let t = self.term_complex(m, c, values);
            sum += t;
            scale += t.norm();
        }
        sum.norm() / scale
    }

    fn term_complex(
        &self,
        m: &Monomial,
        c: &GaussRat,
        values: &HashMap<VarId, Complex64>,
    ) -> Complex64 {
        let mut t = Complex64::new(
            c.re.to_f64().unwrap_or(f64::NAN),
            c.im.to_f64().unwrap_or(f64::NAN),
        );
        for (v, halves) in m.iter() {
            let val = values
                .get(&v)
                .unwrap_or_else(|| panic!("no value for variable {v}"));
            if halves % 2 == 0 {
                t *= val.powi(halves as i32 / 2);
            } else {
                t *= val.powc(Complex64::new(halves as f64 / 2.0, 0.0));
            }
        }
        t
    }
}

pub(crate) fn rational_pow(base: &BigRational, e: i64) -> BigRational {
    use num_traits::One;
    if e == 0 {
        return BigRational::one();
    }
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut acc = BigRational::one();
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        k >>= 1;
        if k > 0 {
            b = &b * &b;
        }
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if let Some(out) = dense_univariate_mul(self, rhs) {
            return out;
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// Convolution fast path when both operands involve a single shared variable
/// (indexed by half-units, so half exponents cost nothing extra).
fn dense_univariate_mul(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    const MAX_SPAN: i64 = 1 << 17;
    if a.is_zero() || b.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let mut var: Option<VarId> = None;
    for m in a.terms.keys().chain(b.terms.keys()) {
        for (v, _) in m.iter() {
            match var {
                None => var = Some(v),
                Some(w) if w == v => {}
                _ => return None,
            }
        }
    }
    let Some(v) = var else {
        // both constants
        let ca = a.terms.values().next().expect("nonzero");
        let cb = b.terms.values().next().expect("nonzero");
        return Some(LaurentPoly::constant(ca * cb));
    };
    let (alo, ahi) = a.degree_halves(v).expect("nonzero");
    let (blo, bhi) = b.degree_halves(v).expect("nonzero");
    let span = (ahi - alo) + (bhi - blo);
    if span > MAX_SPAN {
        return None;
    }
    let mut acc: Vec<GaussRat> = vec![GaussRat::zero(); span as usize + 1];
    let av: Vec<(i64, &GaussRat)> = a
        .terms
        .iter()
        .map(|(m, c)| (m.exp_halves(v) - alo, c))
        .collect();
    let bv: Vec<(i64, &GaussRat)> = b
        .terms
        .iter()
        .map(|(m, c)| (m.exp_halves(v) - blo, c))
        .collect();
    for (i, ca) in &av {
        for (j, cb) in &bv {
            let k = (i + j) as usize;
            acc[k] = &acc[k] + &(*ca * *cb);
        }
    }
    let lo = alo + blo;
    let terms: BTreeMap<Monomial, GaussRat> = acc
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            (
                Monomial::from_halves(&[(v, lo + k as i64)]).expect("product of legal halves"),
                c,
            )
        })
        .collect();
    Some(LaurentPoly { terms })
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::format::plain(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn arith_examples() {
        // (1-q)*(1+q) = 1-q^2
        let p = parse("(1-q)*(1+q)").unwrap();
        assert_eq!(p, parse("1-q^2").unwrap());
        // p + 0 = p
        let p = parse("a*t^3*x - y").unwrap();
        assert_eq!(&p + &LaurentPoly::zero(), p);
        // (1+a*t^3*x)^2 expanded
        let sq = parse("(1+a*t^3*x)^2").unwrap();
        assert_eq!(sq, parse("1 + 2*a*t^3*x + a^2*t^6*x^2").unwrap());
    }

    #[test]
    fn exact_div_examples() {
        let p = parse("x^2-y^2").unwrap();
        let d = parse("x-y").unwrap();
        assert_eq!(p.exact_div(&d).unwrap(), parse("x+y").unwrap());
        let d2 = parse("x-2*y").unwrap();
        assert!(matches!(p.exact_div(&d2), Err(PolyError::NotDivisible)));
        assert!(matches!(
            p.exact_div(&LaurentPoly::zero()),
            Err(PolyError::DivisionByZero)
        ));
        // Laurent shifts are fine
        let p = parse("q^-1 - q").unwrap();
        let d = parse("1-q").unwrap();
        let q = p.exact_div(&d).unwrap();
        assert_eq!(&q * &d, p);
    }

    #[test]
    fn normalize_unit_examples() {
        let p = parse("-3*a*x^2*y + 3*a*x^3").unwrap();
        let n = p.normalize_unit().unwrap();
        // content a*x^2 and scalar -3 stripped; leading term is x under grlex
        assert_eq!(n, parse("x - y").unwrap());
        assert_eq!(n.normalize_unit().unwrap(), n);
        assert!(matches!(
            LaurentPoly::zero().normalize_unit(),
            Err(PolyError::ZeroPolynomial)
        ));
    }

    #[test]
    fn substitute_examples() {
        // x*y with x -> 1 gives y
        let p = parse("x*y").unwrap();
        let mut b = HashMap::new();
        b.insert(VarId::X, RationalFunc::from_poly(LaurentPoly::one()));
        let r = p.substitute(&b).unwrap();
        assert_eq!(r, RationalFunc::from_poly(parse("y").unwrap()));
        // negative power of a zero binding
        let p = parse("x^-1").unwrap();
        let mut b = HashMap::new();
        b.insert(VarId::X, RationalFunc::zero());
        assert!(matches!(
            p.substitute(&b),
            Err(PolyError::SubstituteZero { .. })
        ));
    }

    #[test]
    fn substitute_half_powers() {
        // a^(1/2) at a = q^2 becomes q
        let p = parse("a^(1/2)").unwrap();
        let mut b = HashMap::new();
        b.insert(VarId::A, RationalFunc::from_poly(parse("q^2").unwrap()));
        assert_eq!(
            p.substitute(&b).unwrap(),
            RationalFunc::from_poly(parse("q").unwrap())
        );
        // t^(3/2) at t = -1 becomes i^3 = -i
        let p = parse("t^(3/2)").unwrap();
        let mut b = HashMap::new();
        b.insert(VarId::T, RationalFunc::from_poly(parse("-1").unwrap()));
        assert_eq!(
            p.substitute(&b).unwrap(),
            RationalFunc::from_poly(parse("-i").unwrap())
        );
    }

    #[test]
    fn strip_factor_counts_multiplicity() {
        let p = parse("(1-q)^3*(1+q)").unwrap();
        let (k, rest) = p.strip_factor(&parse("1-q").unwrap());
        assert_eq!(k, 3);
        assert_eq!(rest, parse("1+q").unwrap());
    }
}
