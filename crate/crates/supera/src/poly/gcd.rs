//! Bounded common-factor detection via primitive pseudo-remainder sequences.
//!
//! This is deliberately not a general-purpose GCD engine: it exists so that
//! rational-function normalization and cofactor stripping can *detect* the
//! small common polynomial factors that show up when clearing denominators
//! (for instance after a `q -> 1` limit). Inputs past the size guards are
//! reported coprime, which is always a safe answer for the callers.

use super::laurent::LaurentPoly;
use super::varid::VarId;

const MAX_HALF_DEGREE: i64 = 160;
const MAX_TERMS: usize = 60_000;

/// gcd up to unit; returns `1` when coprime or when detection is skipped.
pub(crate) fn gcd(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return normal(q);
    }
    if q.is_zero() {
        return normal(p);
    }
    let ps = shift(p);
    let qs = shift(q);
    if too_big(&ps) || too_big(&qs) {
        return LaurentPoly::one();
    }
    normal(&gcd_inner(&ps, &qs))
}

/// gcd of a whole list, `1` as soon as the running gcd is constant.
pub(crate) fn gcd_list(polys: &[LaurentPoly]) -> LaurentPoly {
    let mut acc: Option<LaurentPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => normal(&shift(p)),
            Some(g) => gcd(&g, p),
        });
        if acc.as_ref().is_some_and(is_constant) {
            return LaurentPoly::one();
        }
    }
    acc.unwrap_or_else(LaurentPoly::zero)
}

fn normal(p: &LaurentPoly) -> LaurentPoly {
    p.normalize_unit().unwrap_or_else(|_| LaurentPoly::zero())
}

fn shift(p: &LaurentPoly) -> LaurentPoly {
    p.mul_monomial(&p.content_monomial().inv())
}

fn is_constant(p: &LaurentPoly) -> bool {
    p.num_terms() <= 1
}

fn too_big(p: &LaurentPoly) -> bool {
    if p.num_terms() > MAX_TERMS {
        return true;
    }
    p.vars().iter().any(|&v| {
        p.degree_halves(v)
            .is_some_and(|(lo, hi)| hi - lo > MAX_HALF_DEGREE)
    })
}

fn gcd_inner(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    if is_constant(p) || is_constant(q) {
        return LaurentPoly::one();
    }
    let common: Vec<VarId> = p.vars().intersection(&q.vars()).copied().collect();
    let Some(&v) = common.iter().min_by_key(|&&v| {
        let dp = p.degree_halves(v).map(|(lo, hi)| hi - lo).unwrap_or(0);
        let dq = q.degree_halves(v).map(|(lo, hi)| hi - lo).unwrap_or(0);
        dp.min(dq)
    }) else {
        return LaurentPoly::one();
    };

    let fu = univ(p, v);
    let gu = univ(q, v);
    let cont_f = gcd_list(&fu);
    let cont_g = gcd_list(&gu);
    let pp_f = divide_all(&fu, &cont_f);
    let pp_g = divide_all(&gu, &cont_g);
    let cont_gcd = gcd_inner(&cont_f, &cont_g);

    let pp_gcd = prs(pp_f, pp_g);
    let rebuilt = rebuild(&pp_gcd, v);
    &rebuilt * &cont_gcd
}

/// Dense coefficient vector of `p` in `v`, indexed by half-units from the
/// minimum exponent.
fn univ(p: &LaurentPoly, v: VarId) -> Vec<LaurentPoly> {
    let (lo, hi) = p.degree_halves(v).expect("nonzero");
    let mut out = vec![LaurentPoly::zero(); (hi - lo + 1) as usize];
    for (m, c) in p.terms() {
        let h = m.exp_halves(v);
        let rest = m.div(&super::monomial::Monomial::from_halves(&[(v, h)]).expect("legal"));
        out[(h - lo) as usize].add_term(rest, c.clone());
    }
    out
}

fn rebuild(coeffs: &[LaurentPoly], v: VarId) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (h, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = super::monomial::Monomial::from_halves(&[(v, h as i64)]).expect("legal");
        out = &out + &c.mul_monomial(&m);
    }
    out
}

fn deg(f: &[LaurentPoly]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

fn divide_all(f: &[LaurentPoly], d: &LaurentPoly) -> Vec<LaurentPoly> {
    if d.is_one() || is_constant(d) {
        // strip scalar content by leaving coefficients as-is; scale is a unit
        return f.to_vec();
    }
    f.iter()
        .map(|c| {
            if c.is_zero() {
                LaurentPoly::zero()
            } else {
                c.exact_div(d).expect("content divides coefficients")
            }
        })
        .collect()
}

fn primitive(f: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
    let cont = gcd_list(&f);
    divide_all(&f, &cont)
}

/// Primitive PRS; inputs primitive, output the primitive gcd coefficients.
fn prs(mut f: Vec<LaurentPoly>, mut g: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
    if deg(&f) < deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let Some(dg) = deg(&g) else {
            return f;
        };
        if dg == 0 {
            return vec![LaurentPoly::one()];
        }
        let r = prem(&f, &g, dg);
        if deg(&r).is_none() {
            return g;
        }
        if r.iter().map(|c| c.num_terms()).sum::<usize>() > MAX_TERMS {
            return vec![LaurentPoly::one()];
        }
        f = g;
        g = primitive(r);
    }
}

/// Pseudo-remainder of `f` by `g` (degree `dg`).
fn prem(f: &[LaurentPoly], g: &[LaurentPoly], dg: usize) -> Vec<LaurentPoly> {
    let lc_g = g[dg].clone();
    let mut r = f.to_vec();
    while let Some(dr) = deg(&r) {
        if dr < dg {
            break;
        }
        let lc_r = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lc_g;
        }
        for j in 0..=dg {
            r[dr - dg + j] = &r[dr - dg + j] - &(&lc_r * &g[j]);
        }
        debug_assert!(deg(&r).map_or(true, |d| d < dr));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn detects_shared_factor() {
        let p = parse("(1+a*t^3*x^2)*(x-1)*a^2*t^4*x^3").unwrap();
        let q = parse("(1+a*t^3*x)*(1+a*t^3*x^2)").unwrap();
        let g = gcd(&p, &q);
        assert_eq!(g, parse("1+a*t^3*x^2").unwrap().normalize_unit().unwrap());
    }

    #[test]
    fn coprime_gives_one() {
        let p = parse("x^2+y").unwrap();
        let q = parse("x+y^2").unwrap();
        assert!(gcd(&p, &q).is_one());
    }

    #[test]
    fn univariate_multiplicity() {
        let p = parse("(1-q)^2*(1+q)").unwrap();
        let q = parse("(1-q)^3").unwrap();
        let g = gcd(&p, &q);
        // gcd is (1-q)^2 up to unit
        assert!(p.exact_div(&g).is_ok());
        assert!(q.exact_div(&g).is_ok());
        let expect = parse("(1-q)^2").unwrap().normalize_unit().unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_list_common_y_free_factor() {
        let f = parse("1+a*t^3*x").unwrap();
        let c0 = &f * &parse("a^2*t^4*(x-1)*x^3").unwrap();
        let c1 = &f * &parse("-a*(1-t^2*x)").unwrap();
        let c2 = &f * &parse("1+a*t^3*x^2").unwrap();
        let g = gcd_list(&[c0, c1, c2]);
        assert_eq!(g, f.normalize_unit().unwrap());
    }
}
