//! Saddle-point systems and resultant elimination to classical
//! super-A-polynomials, independent of the recursion route.
//!
//! Each supported knot carries a two-equation system in `(z; x, a, t)`: the
//! exponentiated critical-point condition `1 = R(z, x, a, t)` and the closed
//! form `y = S(z, x, a, t)`. Both are stored cleared, as `num - den * lhs`.
//! Eliminating `z` by a Sylvester resultant and stripping monomial content
//! and detected `y`-free cofactors yields a polynomial the classical
//! super-A-polynomial divides exactly.

use crate::knots::KnotId;
use crate::poly::{self, parse, LaurentPoly, PolyError, RationalFunc, VarId};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EliminationError {
    #[error("no saddle system for {0}; the unknot curve is written down directly")]
    Unsupported(String),
    #[error("resultant vanished identically: the system shares a component")]
    DegenerateResultant,
    #[error("no tabulated change of variables for {0}")]
    UnknownFamily(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Cleared polynomial pair: `eq_saddle = 0` encodes `1 = R`, `eq_y = 0`
/// encodes `y = S`.
#[derive(Clone, Debug, PartialEq)]
pub struct SaddleSystem {
    pub knot: KnotId,
    pub eq_saddle: LaurentPoly,
    pub eq_y: LaurentPoly,
}

/// Literal transcription of the critical-point system for the knot.
pub fn saddle_system(knot: KnotId) -> Result<SaddleSystem, EliminationError> {
    let (eq_saddle, eq_y) = match knot {
        KnotId::Unknot => {
            return Err(EliminationError::Unsupported(knot.to_string()));
        }
        KnotId::Trefoil => (
            // 1 = t^2 x (x - z)(1 + a t z) / (z (z - 1))
            parse("t^2*x*(x - z)*(1 + a*t*z) - z*(z - 1)").expect("fixture parses"),
            // y = a z^2 (x - 1) / (x - z)
            parse("a*z^2*(x - 1) - (x - z)*y").expect("fixture parses"),
        ),
        KnotId::FigureEight => (
            // 1 = (x - z)(1 + a t z)(1 + a t^3 x z) / (a t^2 x z (z - 1))
            parse("(x - z)*(1 + a*t*z)*(1 + a*t^3*x*z) - a*t^2*x*z*(z - 1)")
                .expect("fixture parses"),
            // y = (x - 1)(1 + a t^3 x z) / ((1 + a t^3 x)(x - z))
            parse("(x - 1)*(1 + a*t^3*x*z) - (1 + a*t^3*x)*(x - z)*y").expect("fixture parses"),
        ),
        KnotId::Torus(p) => {
            let p = p as i64;
            // 1 = (z - x)(t^2 z - 1)(1 + a t^3 x z)
            //     / (t^{2+2p} z^{1+2p} (z - 1)(a t x + z)(t^2 x z - 1))
            let saddle = parse(&format!(
                "(z - x)*(t^2*z - 1)*(1 + a*t^3*x*z) \
                 - t^{}*z^{}*(z - 1)*(a*t*x + z)*(t^2*x*z - 1)",
                2 + 2 * p,
                1 + 2 * p
            ))
            .expect("fixture parses");
            // y = a^p t^{2+2p} (x - 1) x^{1+2p} (a t x + z)(1 + a t^3 x z)
            //     / ((1 + a t^3 x)(x - z)(t^2 x z - 1))
            let yeq = parse(&format!(
                "a^{}*t^{}*(x - 1)*x^{}*(a*t*x + z)*(1 + a*t^3*x*z) \
                 - (1 + a*t^3*x)*(x - z)*(t^2*x*z - 1)*y",
                p,
                2 + 2 * p,
                1 + 2 * p
            ))
            .expect("fixture parses");
            (saddle, yeq)
        }
    };
    Ok(SaddleSystem {
        knot,
        eq_saddle,
        eq_y,
    })
}

/// Candidate `y`-free factors that resultant elimination is known to drag in:
/// pieces of the systems that are free of both `y` and `z`.
fn spurious_candidates(sys: &SaddleSystem) -> Vec<LaurentPoly> {
    [
        "1 + a*t^3*x",
        "x - 1",
        "1 - t^2*x",
        "1 + a*t*x",
        "1 + a*t^3*x^2",
    ]
    .iter()
    .map(|s| parse(s).expect("fixture parses"))
    .chain(std::iter::once(&sys.eq_saddle).map(|p| p.coeff_of(VarId::Z, 0)))
    .collect()
}

/// Eliminate `z` by a resultant and normalize: strip monomial content, strip
/// detected `y`-free factors, unit-normalize. The classical
/// super-A-polynomial divides the raw output exactly; stripping only ever
/// removes `y`-free cofactors.
pub fn eliminate(sys: &SaddleSystem) -> Result<LaurentPoly, EliminationError> {
    let raw = poly::resultant(&sys.eq_saddle, &sys.eq_y, VarId::Z)?;
    if raw.is_zero() {
        return Err(EliminationError::DegenerateResultant);
    }
    Ok(strip_y_free(&raw, &spurious_candidates(sys))?)
}

/// Resultant without cofactor stripping, for divisibility certification.
pub fn eliminate_raw(sys: &SaddleSystem) -> Result<LaurentPoly, EliminationError> {
    let raw = poly::resultant(&sys.eq_saddle, &sys.eq_y, VarId::Z)?;
    if raw.is_zero() {
        return Err(EliminationError::DegenerateResultant);
    }
    Ok(raw.normalize_unit()?)
}

/// Remove `y`-free content: the detected gcd of the `y`-coefficients plus
/// repeated exact division by the candidate factors. Divisibility is the
/// certificate; nothing is removed on a failed division.
pub fn strip_y_free(p: &LaurentPoly, candidates: &[LaurentPoly]) -> Result<LaurentPoly, PolyError> {
    let mut cur = p.normalize_unit()?;
    loop {
        let coeffs: Vec<LaurentPoly> = cur
            .as_univariate(VarId::Y)
            .into_iter()
            .map(|(_, c)| c)
            .collect();
        if coeffs.len() <= 1 {
            // y-free overall or a single y-power: only monomial content left
            return cur.normalize_unit();
        }
        let g = poly::gcd_list(&coeffs);
        let mut progressed = false;
        if g.num_terms() > 1 {
            if let Ok(q) = cur.exact_div(&g) {
                cur = q;
                progressed = true;
            }
        }
        for cand in candidates {
            if cand.num_terms() <= 1 {
                continue;
            }
            let (k, rest) = cur.strip_factor(cand);
            if k > 0 {
                cur = rest;
                progressed = true;
            }
        }
        if !progressed {
            return cur.normalize_unit();
        }
        cur = cur.normalize_unit()?;
    }
}

/// Verify that `a` divides `b` with a cofactor free of `y`; returns the
/// cofactor on success.
pub fn divides_with_y_free_cofactor(
    dividend: &LaurentPoly,
    divisor: &LaurentPoly,
) -> Option<LaurentPoly> {
    let q = dividend.exact_div(divisor).ok()?;
    let (lo, hi) = q.degree(VarId::Y).unwrap_or((0, 0));
    (lo == 0 && hi == 0).then_some(q)
}

/// The tabulated `(alpha, beta, Q)` change of variables taking the `t = -1`
/// specialization of the super-A-polynomial to the Q-deformed (augmentation)
/// polynomial. Substitutes `x = beta`, `a = Q` and the knot-family expression
/// for `y`, clears denominators, strips `alpha`-free factors and
/// unit-normalizes.
pub fn change_vars_qdef(a_poly: &LaurentPoly, knot: KnotId) -> Result<LaurentPoly, EliminationError> {
    let alpha = VarId::intern("alpha");
    let beta = VarId::intern("beta");
    let big_q = VarId::intern("Q");
    let y_expr = match knot {
        KnotId::Unknot => RationalFunc::from_poly(LaurentPoly::var(alpha)),
        KnotId::FigureEight => {
            // alpha = y (1 - beta Q) / (Q (1 - beta))
            RationalFunc::new(
                parse("alpha*Q*(1 - beta)").expect("fixture parses"),
                parse("1 - beta*Q").expect("fixture parses"),
            )?
        }
        KnotId::Trefoil | KnotId::Torus(_) => {
            let p = match knot {
                KnotId::Trefoil => 1i64,
                KnotId::Torus(p) => p as i64,
                _ => unreachable!(),
            };
            // alpha = y Q^{-p} beta^{-4p-2} (1 - Q beta) / (1 - beta)
            RationalFunc::new(
                parse(&format!("alpha*Q^{}*beta^{}*(1 - beta)", p, 4 * p + 2))
                    .expect("fixture parses"),
                parse("1 - Q*beta").expect("fixture parses"),
            )?
        }
    };
    let mut bindings = HashMap::new();
    bindings.insert(VarId::X, RationalFunc::from_poly(LaurentPoly::var(beta)));
    bindings.insert(VarId::A, RationalFunc::from_poly(LaurentPoly::var(big_q)));
    bindings.insert(VarId::Y, y_expr);
    let substituted = a_poly.substitute(&bindings)?;
    let cleared = substituted.num();
    if cleared.is_zero() {
        return Err(EliminationError::DegenerateResultant);
    }
    let candidates = vec![
        parse("1 - beta").expect("fixture parses"),
        parse("1 - Q*beta").expect("fixture parses"),
    ];
    Ok(strip_free_of(cleared, alpha, &candidates)?)
}

/// Like [`strip_y_free`] but for an arbitrary main variable.
fn strip_free_of(
    p: &LaurentPoly,
    main: VarId,
    candidates: &[LaurentPoly],
) -> Result<LaurentPoly, PolyError> {
    let mut cur = p.normalize_unit()?;
    loop {
        let coeffs: Vec<LaurentPoly> = cur
            .as_univariate(main)
            .into_iter()
            .map(|(_, c)| c)
            .collect();
        if coeffs.len() <= 1 {
            return cur.normalize_unit();
        }
        let g = poly::gcd_list(&coeffs);
        let mut progressed = false;
        if g.num_terms() > 1 {
            if let Ok(q) = cur.exact_div(&g) {
                cur = q;
                progressed = true;
            }
        }
        for cand in candidates {
            let (k, rest) = cur.strip_factor(cand);
            if k > 0 {
                cur = rest;
                progressed = true;
            }
        }
        if !progressed {
            return cur.normalize_unit();
        }
        cur = cur.normalize_unit()?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::classical_fixture;

    #[test]
    fn unknot_is_unsupported() {
        assert!(matches!(
            saddle_system(KnotId::Unknot),
            Err(EliminationError::Unsupported(_))
        ));
    }

    #[test]
    fn trefoil_elimination_reproduces_classical() {
        let sys = saddle_system(KnotId::Trefoil).unwrap();
        let raw = eliminate_raw(&sys).unwrap();
        let expect = classical_fixture(KnotId::Trefoil)
            .unwrap()
            .normalize_unit()
            .unwrap();
        let cof = divides_with_y_free_cofactor(&raw, &expect).expect("divides with y-free cofactor");
        assert!(!cof.is_zero());
        // after stripping, the eliminated polynomial is the classical one
        let stripped = eliminate(&sys).unwrap();
        assert_eq!(stripped, expect);
    }

    #[test]
    fn torus1_elimination_matches_trefoil_fixture() {
        let sys = saddle_system(KnotId::Torus(1)).unwrap();
        let raw = eliminate_raw(&sys).unwrap();
        let expect = classical_fixture(KnotId::Trefoil)
            .unwrap()
            .normalize_unit()
            .unwrap();
        assert!(divides_with_y_free_cofactor(&raw, &expect).is_some());
    }

    #[test]
    fn fig8_elimination_divisible_by_classical() {
        let sys = saddle_system(KnotId::FigureEight).unwrap();
        let raw = eliminate_raw(&sys).unwrap();
        let expect = classical_fixture(KnotId::FigureEight)
            .unwrap()
            .normalize_unit()
            .unwrap();
        assert!(divides_with_y_free_cofactor(&raw, &expect).is_some());
    }

    #[test]
    fn specialized_trefoil_contains_negative_branch() {
        // substitute a = 1, t = -1 into the system, then eliminate: the
        // result must contain the branch y = -x^3 (and the abelian y = 1).
        let sys = saddle_system(KnotId::Trefoil).unwrap();
        let mut b = HashMap::new();
        b.insert(VarId::A, RationalFunc::one());
        b.insert(
            VarId::T,
            RationalFunc::from_poly(LaurentPoly::int(-1)),
        );
        let subbed = SaddleSystem {
            knot: sys.knot,
            eq_saddle: sys.eq_saddle.substitute(&b).unwrap().num().clone(),
            eq_y: sys.eq_y.substitute(&b).unwrap().num().clone(),
        };
        let raw = eliminate_raw(&subbed).unwrap();
        assert!(raw.exact_div(&parse("y + x^3").unwrap()).is_ok());
        assert!(raw.exact_div(&parse("y - 1").unwrap()).is_ok());
    }

    #[test]
    fn qdef_change_of_variables() {
        // trefoil: t = -1 specialization then (alpha, beta, Q) rewrite
        let a31 = classical_fixture(KnotId::Trefoil).unwrap();
        let mut b = HashMap::new();
        b.insert(
            VarId::T,
            RationalFunc::from_poly(LaurentPoly::int(-1)),
        );
        let at_minus1 = a31.substitute(&b).unwrap().num().clone();
        let got = change_vars_qdef(&at_minus1, KnotId::Trefoil).unwrap();
        let expect = parse(include_str!("../fixtures/qdef_trefoil.txt"))
            .unwrap()
            .normalize_unit()
            .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn unknot_qdef_factorizes_at_a1() {
        // identity change of variables on the unknot augmentation polynomial
        // at a = 1: (1 - x)(1 - y) up to unit
        let aug = parse("a^(-1/2)*(1 - a*x) - (1 - x)*y").unwrap();
        let mut b = HashMap::new();
        b.insert(VarId::A, RationalFunc::one());
        let at_a1 = aug.substitute(&b).unwrap().num().clone();
        let mut bb = HashMap::new();
        bb.insert(
            VarId::X,
            RationalFunc::from_poly(LaurentPoly::var(VarId::intern("beta"))),
        );
        bb.insert(
            VarId::Y,
            RationalFunc::from_poly(LaurentPoly::var(VarId::intern("alpha"))),
        );
        let renamed = at_a1.substitute(&bb).unwrap().num().clone();
        let expect = parse("(1 - beta)*(1 - alpha)")
            .unwrap()
            .normalize_unit()
            .unwrap();
        assert_eq!(renamed.normalize_unit().unwrap(), expect);
    }
}
