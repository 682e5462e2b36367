//! Closed-form colored superpolynomial generators for the unknot, trefoil,
//! figure-eight knot and the `(2,2p+1)` torus-knot family, plus the
//! specialization cascade down to colored HOMFLY and Jones polynomials.
//!
//! All generators return *reduced* polynomials; the unknot is the exception
//! and comes unreduced (as a rational function), since reduced invariants are
//! normalized by the unknot value.

mod cache;

pub use cache::SuperCache;

use crate::poly::{GaussRat, LaurentPoly, Monomial, RationalFunc, VarId};
use crate::qcalc::{qbinom, qfac, qpoch_q, qpoch_qinv};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("half powers fail to cancel in the torus superpolynomial at p={p}, r={r}")]
    HalfPowerResidue { p: u32, r: u32 },
    #[error("unsupported knot {0}")]
    Unsupported(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum KnotId {
    Unknot,
    Trefoil,
    FigureEight,
    /// The `(2, 2p+1)` torus knot; `Torus(1)` is the trefoil's alternate
    /// presentation.
    Torus(u32),
}

impl KnotId {
    pub fn torus(p: u32) -> KnotId {
        assert!(p >= 1, "torus parameter must be positive");
        KnotId::Torus(p)
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::Unknot => write!(f, "unknot"),
            KnotId::Trefoil => write!(f, "trefoil"),
            KnotId::FigureEight => write!(f, "fig8"),
            KnotId::Torus(p) => write!(f, "torus{p}"),
        }
    }
}

impl FromStr for KnotId {
    type Err = KnotError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unknot" | "0_1" => Ok(KnotId::Unknot),
            "trefoil" | "3_1" => Ok(KnotId::Trefoil),
            "fig8" | "4_1" | "figure-eight" | "figure8" => Ok(KnotId::FigureEight),
            other => {
                if let Some(num) = other.strip_prefix("torus") {
                    let p: u32 = num
                        .parse()
                        .map_err(|_| KnotError::Unsupported(other.to_string()))?;
                    if p >= 1 {
                        return Ok(KnotId::Torus(p));
                    }
                }
                Err(KnotError::Unsupported(other.to_string()))
            }
        }
    }
}

/// Color `n >= 1`, labelling the symmetric representation `S^{n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ColorIndex {
    n: u32,
}

impl ColorIndex {
    pub fn new(n: u32) -> ColorIndex {
        assert!(n >= 1, "color index must be at least 1");
        ColorIndex { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.n - 1
    }
}

fn var(v: VarId) -> LaurentPoly {
    LaurentPoly::var(v)
}

fn mono(pairs: &[(VarId, i64)]) -> LaurentPoly {
    LaurentPoly::from_monomial(Monomial::from_exps(pairs), GaussRat::one())
}

fn mono_halves(pairs: &[(VarId, i64)]) -> LaurentPoly {
    LaurentPoly::from_monomial(
        Monomial::from_halves(pairs).expect("legal half exponents"),
        GaussRat::one(),
    )
}

/// Reduced colored superpolynomial for any supported knot. Torus knots use
/// the differential-chain form; the unknot is trivially 1.
pub fn superpoly(knot: KnotId, n: ColorIndex) -> LaurentPoly {
    match knot {
        KnotId::Unknot => LaurentPoly::one(),
        KnotId::Trefoil => superpoly_trefoil(n),
        KnotId::FigureEight => superpoly_fig8(n),
        KnotId::Torus(p) => superpoly_torus_diff(p, n.r()).expect("chain sum is exact"),
    }
}

/// Unreduced unknot superpolynomial
/// `(-1)^{(n-1)/2} a^{-(n-1)/2} q^{(n-1)/2} t^{-3(n-1)/2}
///  (-a t^3; q)_{n-1} / (q; q)_{n-1}`,
/// with the global branch `(-1)^{1/2} = i`.
pub fn superpoly_unknot_unreduced(n: ColorIndex) -> RationalFunc {
    let r = n.r() as i64;
    let prefix = LaurentPoly::constant(GaussRat::i().pow(r));
    let prefix = &prefix * &mono_halves(&[(VarId::A, -r), (VarId::Q, r), (VarId::T, -3 * r)]);
    let num_poch = qpoch_q(&crate::poly::parse("-a*t^3").unwrap(), n.r());
    let den = qfac(n.r());
    RationalFunc::new(&prefix * &num_poch, den).expect("(q;q)_{n-1} is nonzero")
}

/// Trefoil superpolynomial. The k-sum is assembled incrementally: the
/// Pochhammer quotient `(q^{n-1}; q^-1)_k / (q; q)_k` picks up one exact
/// binomial factor and one exact binomial division per step.
pub fn superpoly_trefoil(n: ColorIndex) -> LaurentPoly {
    let nn = n.n() as i64;
    let at_factor = |i: i64| crate::poly::parse(&format!("1 + a*t*q^{}", i - 1)).unwrap();
    let mut acc = LaurentPoly::zero();
    let mut binom = LaurentPoly::one();
    let mut poch_at = LaurentPoly::one();
    for k in 0..n.n() {
        let kk = k as i64;
        let head = mono(&[
            (VarId::A, nn - 1),
            (VarId::T, 2 * kk),
            (VarId::Q, nn * (kk - 1) + 1),
        ]);
        acc = &acc + &(&head * &(&binom * &poch_at));
        if k + 1 < n.n() {
            poch_at = &poch_at * &at_factor(kk);
            binom = (&binom * &one_minus_q(nn - 1 - kk))
                .exact_div(&one_minus_q(kk + 1))
                .expect("binomial step is exact");
        }
    }
    acc
}

/// Figure-eight superpolynomial; the infinite k-sum truncates at `k = n-1`
/// where the `(q^{1-n}; q)_k` factor vanishes.
pub fn superpoly_fig8(n: ColorIndex) -> LaurentPoly {
    let nn = n.n() as i64;
    let at_factor = |i: i64| crate::poly::parse(&format!("1 + a*t*q^{}", i - 1)).unwrap();
    let at3_factor =
        |i: i64| crate::poly::parse(&format!("1 + a*t^3*q^{}", nn - 1 + i)).unwrap();
    let mut acc = LaurentPoly::zero();
    // (q^{1-n}; q)_k / (q; q)_k, (-a t q^-1; q)_k and (-a t^3 q^{n-1}; q)_k
    let mut binom = LaurentPoly::one();
    let mut poch_at = LaurentPoly::one();
    let mut poch_at3 = LaurentPoly::one();
    for k in 0..n.n() {
        let kk = k as i64;
        let sign = GaussRat::from_int(if k % 2 == 0 { 1 } else { -1 });
        let head = mono(&[
            (VarId::A, -kk),
            (VarId::T, -2 * kk),
            (VarId::Q, -kk * (kk - 3) / 2),
        ])
        .scale(&sign);
        acc = &acc + &(&head * &(&(&binom * &poch_at) * &poch_at3));
        if k + 1 < n.n() {
            poch_at = &poch_at * &at_factor(kk);
            poch_at3 = &poch_at3 * &at3_factor(kk);
            binom = (&binom * &one_minus_q(1 - nn + kk))
                .exact_div(&one_minus_q(kk + 1))
                .expect("binomial step is exact");
        }
    }
    acc
}

fn one_minus_q(e: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::var_pow(VarId::Q, e)
}

/// `1 + c q^e` for a rational constant `c`.
fn one_plus_cq(c: &num_rational::BigRational, e: i64) -> LaurentPoly {
    &LaurentPoly::one()
        + &LaurentPoly::var_pow(VarId::Q, e).scale(&GaussRat::from_rational(c.clone()))
}

/// Reduced superpolynomial with `a`, `t` bound to nonzero rationals,
/// returned as a Laurent polynomial in `q` alone. Much cheaper than
/// specializing the symbolic polynomial; equality with that route is part of
/// the test suite.
pub fn superpoly_at(
    knot: KnotId,
    n: ColorIndex,
    a_val: &num_rational::BigRational,
    t_val: &num_rational::BigRational,
) -> LaurentPoly {
    use crate::poly::rational_pow;
    use num_traits::Zero;
    assert!(!a_val.is_zero() && !t_val.is_zero());
    match knot {
        KnotId::Unknot => LaurentPoly::one(),
        KnotId::Trefoil => {
            let nn = n.n() as i64;
            let at = a_val * t_val;
            let mut acc = LaurentPoly::zero();
            let mut binom = LaurentPoly::one();
            let mut poch_at = LaurentPoly::one();
            for k in 0..n.n() {
                let kk = k as i64;
                let c = GaussRat::from_rational(
                    rational_pow(a_val, nn - 1) * rational_pow(t_val, 2 * kk),
                );
                let head = LaurentPoly::var_pow(VarId::Q, nn * (kk - 1) + 1).scale(&c);
                acc = &acc + &(&head * &(&binom * &poch_at));
                if k + 1 < n.n() {
                    poch_at = &poch_at * &one_plus_cq(&at, kk - 1);
                    binom = (&binom * &one_minus_q(nn - 1 - kk))
                        .exact_div(&one_minus_q(kk + 1))
                        .expect("binomial step is exact");
                }
            }
            acc
        }
        KnotId::FigureEight => {
            let nn = n.n() as i64;
            let at = a_val * t_val;
            let at3 = a_val * &rational_pow(t_val, 3);
            let mut acc = LaurentPoly::zero();
            let mut binom = LaurentPoly::one();
            let mut poch_at = LaurentPoly::one();
            let mut poch_at3 = LaurentPoly::one();
            for k in 0..n.n() {
                let kk = k as i64;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let c = GaussRat::from_rational(
                    rational_pow(a_val, -kk)
                        * rational_pow(t_val, -2 * kk)
                        * num_rational::BigRational::from_integer(sign.into()),
                );
                let head = LaurentPoly::var_pow(VarId::Q, -kk * (kk - 3) / 2).scale(&c);
                acc = &acc + &(&head * &(&(&binom * &poch_at) * &poch_at3));
                if k + 1 < n.n() {
                    poch_at = &poch_at * &one_plus_cq(&at, kk - 1);
                    poch_at3 = &poch_at3 * &one_plus_cq(&at3, nn - 1 + kk);
                    binom = (&binom * &one_minus_q(1 - nn + kk))
                        .exact_div(&one_minus_q(kk + 1))
                        .expect("binomial step is exact");
                }
            }
            acc
        }
        KnotId::Torus(p) => {
            let mut vals = std::collections::HashMap::new();
            vals.insert(VarId::A, a_val.clone());
            vals.insert(VarId::T, t_val.clone());
            superpoly_torus_diff(p, n.r())
                .expect("chain sum is exact")
                .eval_vars_rational(&vals)
        }
    }
}

/// Torus superpolynomial from the partition-function ratio, as an l-sum of
/// Pochhammer ratios. Terms are assembled in factored form so cancellation
/// is exact, and the residual half powers must cancel term by term.
pub fn superpoly_torus_cs(p: u32, r: u32) -> Result<LaurentPoly, KnotError> {
    assert!(p >= 1);
    let rr = r as i64;
    let pp = p as i64;
    let two_p1 = 2 * pp + 1;

    // factor multiset per term: poly -> signed multiplicity
    let mut terms: Vec<(GaussRat, Monomial, BTreeMap<LaurentPoly, i64>)> = Vec::new();
    let t2 = crate::poly::parse("t^2").unwrap();
    let minus_at3 = crate::poly::parse("-a*t^3").unwrap();
    let minus_at_qinv = crate::poly::parse("-a*t*q^-1").unwrap();
    let qx = var(VarId::Q);

    let poch_factors = |x: &LaurentPoly, len: i64, step: i64| -> Vec<LaurentPoly> {
        (0..len)
            .map(|i| {
                &LaurentPoly::one()
                    - &x.mul_monomial(&Monomial::from_exps(&[(VarId::Q, step * i)]))
            })
            .collect()
    };

    for l in 0..=rr {
        let mut fac: BTreeMap<LaurentPoly, i64> = BTreeMap::new();
        let mut push = |facs: Vec<LaurentPoly>, mult: i64, fac: &mut BTreeMap<LaurentPoly, i64>| {
            for f in facs {
                *fac.entry(f).or_insert(0) += mult;
            }
        };
        // (q t^2; q)_l / ((q; q)_l (q^2 t^2; q)_{r+l}) and partners
        push(poch_factors(&(&qx * &t2), l, 1), 1, &mut fac);
        push(poch_factors(&minus_at3, rr + l, 1), 1, &mut fac);
        push(
            poch_factors(&minus_at_qinv, rr - l, 1),
            1,
            &mut fac,
        );
        push(poch_factors(&qx, rr, 1), 1, &mut fac);
        push(
            vec![&LaurentPoly::one() - &mono(&[(VarId::Q, 2 * l + 1), (VarId::T, 2)])],
            1,
            &mut fac,
        );
        push(poch_factors(&qx, l, 1), -1, &mut fac);
        push(
            poch_factors(&(&mono(&[(VarId::Q, 2)]) * &t2), rr + l, 1),
            -1,
            &mut fac,
        );
        push(poch_factors(&qx, rr - l, 1), -1, &mut fac);
        push(poch_factors(&minus_at3, rr, 1), -1, &mut fac);
        push(
            vec![&LaurentPoly::one() - &(&qx * &t2)],
            -1,
            &mut fac,
        );
        fac.retain(|_, m| *m != 0);

        // monomial prefix in half-units:
        //   a^{-r/2} * (a^{r/2})^{2p+1}
        //   q^{3r/2 - l} * (q^{(r^2 - l(l+1))/2})^{2p+1}
        //   t^{-rp - l + r/2} * (t^{3r/2 - l})^{2p+1}
        let a_halves = -rr + rr * two_p1;
        let q_halves = 3 * rr - 2 * l + (rr * rr - l * (l + 1)) * two_p1;
        let t_halves = -2 * rr * pp - 2 * l + rr + (3 * rr - 2 * l) * two_p1;
        if a_halves % 2 != 0 || q_halves % 2 != 0 || t_halves % 2 != 0 {
            return Err(KnotError::HalfPowerResidue { p, r });
        }
        let prefix = Monomial::from_halves(&[
            (VarId::A, a_halves),
            (VarId::Q, q_halves),
            (VarId::T, t_halves),
        ])
        .map_err(|_| KnotError::HalfPowerResidue { p, r })?;
        let sign = GaussRat::from_int(if (rr + l) % 2 == 0 { 1 } else { -1 });
        terms.push((sign, prefix, fac));
    }

    // common denominator: max needed multiplicity per factor
    let mut den_mult: BTreeMap<LaurentPoly, i64> = BTreeMap::new();
    for (_, _, fac) in &terms {
        for (f, &m) in fac {
            if m < 0 {
                let e = den_mult.entry(f.clone()).or_insert(0);
                *e = (*e).max(-m);
            }
        }
    }
    let mut num_sum = LaurentPoly::zero();
    for (sign, prefix, fac) in &terms {
        let mut t = LaurentPoly::constant(sign.clone()).mul_monomial(prefix);
        for (f, need) in &den_mult {
            let have = fac.get(f).copied().unwrap_or(0);
            let e = have + need;
            debug_assert!(e >= 0);
            if e > 0 {
                t = &t * &f.pow(e as u32);
            }
        }
        for (f, &m) in fac {
            if !den_mult.contains_key(f) && m != 0 {
                debug_assert!(m > 0);
                t = &t * &f.pow(m as u32);
            }
        }
        num_sum = &num_sum + &t;
    }
    let mut den = LaurentPoly::one();
    for (f, m) in &den_mult {
        den = &den * &f.pow(*m as u32);
    }
    let result = num_sum
        .exact_div(&den)
        .map_err(|_| KnotError::HalfPowerResidue { p, r })?;
    if [VarId::A, VarId::Q, VarId::T]
        .iter()
        .any(|&v| !result.whole_in(v))
    {
        return Err(KnotError::HalfPowerResidue { p, r });
    }
    Ok(result)
}

/// Torus superpolynomial from the differential-chain form:
/// `a^{pr} q^{-pr} * sum over 0 <= k_p <= ... <= k_1 <= r` of q-binomial
/// chains, with `k_0 = r`.
pub fn superpoly_torus_diff(p: u32, r: u32) -> Result<LaurentPoly, KnotError> {
    assert!(p >= 1);
    let rr = r as i64;
    let pp = p as i64;
    let mut acc = LaurentPoly::zero();
    let mut chain: Vec<i64> = vec![0; p as usize];
    sum_chains(&mut chain, 0, rr, pp, rr, &mut acc);
    Ok(acc.mul_monomial(&Monomial::from_exps(&[(
        VarId::A,
        pp * rr,
    ), (VarId::Q, -pp * rr)])))
}

fn sum_chains(chain: &mut Vec<i64>, idx: usize, max: i64, p: i64, r: i64, acc: &mut LaurentPoly) {
    if idx == chain.len() {
        let s: i64 = chain.iter().sum();
        let mut cross = 0;
        let mut prev = r;
        let mut binoms = LaurentPoly::one();
        for &k in chain.iter() {
            cross += prev * k;
            binoms = &binoms * &qbinom(prev, k).expect("0 <= k <= prev");
            prev = k;
        }
        let mut term = binoms.mul_monomial(&Monomial::from_exps(&[
            (VarId::Q, (2 * r + 1) * s - cross),
            (VarId::T, 2 * s),
        ]));
        for i in 1..=chain[0] {
            term = &term * &crate::poly::parse(&format!("1 + a*q^{}*t", i - 2)).unwrap();
        }
        *acc = &*acc + &term;
        return;
    }
    for k in 0..=max {
        chain[idx] = k;
        sum_chains(chain, idx + 1, k, p, r, acc);
    }
    chain[idx] = 0;
}

/// HOMFLY specialization `t -> -1`.
pub fn specialize_homfly(p: &LaurentPoly) -> LaurentPoly {
    let mut b = HashMap::new();
    b.insert(
        VarId::T,
        RationalFunc::from_poly(LaurentPoly::int(-1)),
    );
    let r = p.substitute(&b).expect("constant substitution");
    r.as_poly().expect("constant substitution is polynomial").clone()
}

/// Jones specialization `a -> q^2, t -> -1`.
pub fn specialize_jones(p: &LaurentPoly) -> LaurentPoly {
    let mut b = HashMap::new();
    b.insert(
        VarId::A,
        RationalFunc::from_poly(LaurentPoly::var_pow(VarId::Q, 2)),
    );
    b.insert(
        VarId::T,
        RationalFunc::from_poly(LaurentPoly::int(-1)),
    );
    let r = p.substitute(&b).expect("monomial substitution");
    r.as_poly().expect("monomial substitution is polynomial").clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn n(k: u32) -> ColorIndex {
        ColorIndex::new(k)
    }

    #[test]
    fn trefoil_low_colors() {
        assert!(superpoly_trefoil(n(1)).is_one());
        assert_eq!(
            superpoly_trefoil(n(2)),
            parse("a*q^-1 + a*q*t^2 + a^2*t^3").unwrap()
        );
        assert_eq!(
            superpoly_trefoil(n(3)),
            parse(
                "a^2*q^-2 + a^2*q*(1+q)*t^2 + a^3*(1+q)*t^3 + a^2*q^4*t^4 \
                 + a^3*q^3*(1+q)*t^5 + a^4*q^3*t^6"
            )
            .unwrap()
        );
    }

    #[test]
    fn fig8_low_colors() {
        assert!(superpoly_fig8(n(1)).is_one());
        assert_eq!(
            superpoly_fig8(n(2)),
            parse("a^-1*t^-2 + t^-1*q^-1 + 1 + q*t + a*t^2").unwrap()
        );
    }

    #[test]
    fn unknot_unreduced() {
        assert_eq!(superpoly_unknot_unreduced(n(1)), RationalFunc::one());
        let p2 = superpoly_unknot_unreduced(n(2));
        let expect = crate::poly::RationalFunc::new(
            parse("i*a^(-1/2)*q^(1/2)*t^(-3/2)*(1+a*t^3)").unwrap(),
            parse("1-q").unwrap(),
        )
        .unwrap();
        assert_eq!(p2, expect);
    }

    #[test]
    fn torus_cs_p1_matches_trefoil() {
        let p = superpoly_torus_cs(1, 1).unwrap();
        assert_eq!(p, parse("a*q^-1 + a*q*t^2 + a^2*t^3").unwrap());
        assert!(superpoly_torus_cs(1, 0).unwrap().is_one());
        for nn in 1..=5u32 {
            assert_eq!(
                superpoly_torus_cs(1, nn - 1).unwrap(),
                superpoly_trefoil(n(nn)),
                "n={nn}"
            );
        }
    }

    #[test]
    fn torus_diff_examples() {
        assert_eq!(
            superpoly_torus_diff(1, 1).unwrap(),
            parse("a*q^-1*(1 + q^2*t^2*(1+a*q^-1*t))").unwrap()
        );
        assert!(superpoly_torus_diff(1, 0).unwrap().is_one());
    }

    #[test]
    fn torus_formulas_agree_small() {
        for p in 1..=2u32 {
            for r in 0..=3u32 {
                assert_eq!(
                    superpoly_torus_cs(p, r).unwrap(),
                    superpoly_torus_diff(p, r).unwrap(),
                    "p={p} r={r}"
                );
            }
        }
    }

    #[test]
    fn positivity_small() {
        use num_traits::Signed;
        for nn in 1..=6u32 {
            for p in [superpoly_trefoil(n(nn)), superpoly_fig8(n(nn))] {
                for (_, c) in p.terms() {
                    assert!(c.is_real() && c.re.is_positive(), "n={nn}");
                    assert!(c.re.denom() == &num_bigint::BigInt::from(1));
                }
            }
        }
    }

    #[test]
    fn canceling_differential_collapses_fig8() {
        // a = -q^{1-n} t^{-3} kills every k > 0 term
        for nn in 2..=6u32 {
            let p = superpoly_fig8(n(nn));
            let mut b = HashMap::new();
            b.insert(
                VarId::A,
                RationalFunc::from_poly(
                    parse(&format!("-q^{}*t^-3", 1 - nn as i64)).unwrap(),
                ),
            );
            let r = p.substitute(&b).unwrap();
            assert_eq!(r, RationalFunc::one(), "n={nn}");
        }
    }

    #[test]
    fn homfly_and_jones_specializations() {
        let p2 = superpoly_trefoil(n(2));
        assert_eq!(
            specialize_homfly(&p2),
            parse("a*q^-1 + a*q - a^2").unwrap()
        );
        assert_eq!(specialize_jones(&p2), parse("q + q^3 - q^4").unwrap());
        let f2 = superpoly_fig8(n(2));
        assert_eq!(
            specialize_homfly(&f2),
            parse("a^-1 - q^-1 + 1 - q + a").unwrap()
        );
        assert!(specialize_jones(&superpoly_fig8(n(1))).is_one());
    }

    #[test]
    fn unknot_ratio_matches_recursion_step() {
        // ratio P_{n+1}/P_n = (-a^-1 t^-3 q)^{1/2} (1 + a t^3 q^{n-1})/(1 - q^n)
        for nn in 1..=4u32 {
            let pn = superpoly_unknot_unreduced(n(nn));
            let pn1 = superpoly_unknot_unreduced(n(nn + 1));
            let step = crate::poly::RationalFunc::new(
                parse(&format!(
                    "i*a^(-1/2)*t^(-3/2)*q^(1/2)*(1 + a*t^3*q^{})",
                    nn as i64 - 1
                ))
                .unwrap(),
                parse(&format!("1 - q^{nn}")).unwrap(),
            )
            .unwrap();
            assert_eq!(pn1, &pn * &step, "n={nn}");
        }
    }

    #[test]
    fn knot_id_round_trip() {
        for k in [
            KnotId::Unknot,
            KnotId::Trefoil,
            KnotId::FigureEight,
            KnotId::Torus(3),
        ] {
            assert_eq!(k.to_string().parse::<KnotId>().unwrap(), k);
        }
        assert_eq!("4_1".parse::<KnotId>().unwrap(), KnotId::FigureEight);
        assert!("torus0".parse::<KnotId>().is_err());
    }
}
