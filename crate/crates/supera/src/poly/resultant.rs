//! Sylvester resultants by fraction-free Bareiss elimination, with an
//! evaluation–interpolation fast path for matrices whose entries carry large
//! degrees in some secondary variable.

use super::coeff::GaussRat;
use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::varid::VarId;
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

/// Entry-degree total (in the best interpolation variable) beyond which the
/// evaluation–interpolation path is taken.
pub const DEFAULT_INTERP_THRESHOLD: i64 = 28;

pub fn resultant(p: &LaurentPoly, q: &LaurentPoly, v: VarId) -> Result<LaurentPoly, PolyError> {
    resultant_with(p, q, v, DEFAULT_INTERP_THRESHOLD)
}

/// Resultant in `v` after clearing negative `v`-powers by a monomial.
pub fn resultant_with(
    p: &LaurentPoly,
    q: &LaurentPoly,
    v: VarId,
    interp_threshold: i64,
) -> Result<LaurentPoly, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::DegreeZero { var: v.name() });
    }
    let ps = clear_var(p, v);
    let qs = clear_var(q, v);
    let pu = ps.as_univariate(v);
    let qu = qs.as_univariate(v);
    let m = pu.last().map(|&(e, _)| e).unwrap_or(0);
    let n = qu.last().map(|&(e, _)| e).unwrap_or(0);
    if m == 0 || n == 0 {
        return Err(PolyError::DegreeZero { var: v.name() });
    }
    let matrix = sylvester(&pu, m as usize, &qu, n as usize);
    match pick_interp_var(&matrix, interp_threshold) {
        Some(w) => det_interpolated(matrix, w),
        None => Ok(det_bareiss(matrix)),
    }
}

fn clear_var(p: &LaurentPoly, v: VarId) -> LaurentPoly {
    assert!(p.whole_in(v), "half exponent on elimination variable {v}");
    let (lo, _) = p.degree(v).expect("nonzero");
    if lo >= 0 {
        p.clone()
    } else {
        p.mul_monomial(&Monomial::from_exps(&[(v, -lo)]))
    }
}

/// Sylvester matrix: `n` shifted rows of `p`'s coefficients followed by `m`
/// rows of `q`'s, highest degree first.
fn sylvester(
    pu: &[(i64, LaurentPoly)],
    m: usize,
    qu: &[(i64, LaurentPoly)],
    n: usize,
) -> Vec<Vec<LaurentPoly>> {
    let size = m + n;
    let mut mat = vec![vec![LaurentPoly::zero(); size]; size];
    for i in 0..n {
        for &(e, ref c) in pu {
            mat[i][i + (m - e as usize)] = c.clone();
        }
    }
    for i in 0..m {
        for &(e, ref c) in qu {
            mat[n + i][i + (n - e as usize)] = c.clone();
        }
    }
    mat
}

/// Fraction-free Bareiss determinant over the Laurent ring.
fn det_bareiss(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&pivot * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss intermediate division is exact");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Choose the interpolation variable with the largest row-degree bound, if it
/// clears the threshold. Variables with half exponents are not eligible.
fn pick_interp_var(m: &[Vec<LaurentPoly>], threshold: i64) -> Option<VarId> {
    let mut vars = std::collections::BTreeSet::new();
    for row in m {
        for e in row {
            vars.extend(e.vars());
        }
    }
    let mut best: Option<(VarId, i64)> = None;
    for &w in &vars {
        if !m.iter().flatten().all(|e| e.whole_in(w)) {
            continue;
        }
        let bound: i64 = m
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|e| !e.is_zero())
                    .filter_map(|e| e.degree(w))
                    .map(|(lo, hi)| (lo, hi))
                    .fold(None::<(i64, i64)>, |acc, (lo, hi)| {
                        Some(match acc {
                            None => (lo, hi),
                            Some((alo, ahi)) => (alo.min(lo), ahi.max(hi)),
                        })
                    })
                    .map(|(lo, hi)| hi - lo)
                    .unwrap_or(0)
            })
            .sum();
        if bound > threshold && best.map_or(true, |(_, b)| bound > b) {
            best = Some((w, bound));
        }
    }
    best.map(|(w, _)| w)
}

/// Evaluate the matrix at sample points of `w`, take determinants in
/// parallel, and interpolate the result back.
fn det_interpolated(mut m: Vec<Vec<LaurentPoly>>, w: VarId) -> Result<LaurentPoly, PolyError> {
    // Shift each row so entries are polynomial in w; det picks up w^shift.
    let mut shift: i64 = 0;
    for row in m.iter_mut() {
        let lo = row
            .iter()
            .filter(|e| !e.is_zero())
            .filter_map(|e| e.degree(w))
            .map(|(lo, _)| lo)
            .min()
            .unwrap_or(0);
        if lo != 0 {
            let inv = Monomial::from_exps(&[(w, -lo)]);
            for e in row.iter_mut() {
                if !e.is_zero() {
                    *e = e.mul_monomial(&inv);
                }
            }
            shift += lo;
        }
    }
    let bound: i64 = m
        .iter()
        .map(|row| {
            row.iter()
                .filter(|e| !e.is_zero())
                .filter_map(|e| e.degree(w))
                .map(|(_, hi)| hi)
                .max()
                .unwrap_or(0)
        })
        .sum();
    let nodes: Vec<BigRational> = (0..=bound)
        .map(|k| BigRational::from_integer(BigInt::from(k + 2)))
        .collect();
    let dets: Vec<LaurentPoly> = nodes
        .par_iter()
        .map(|node| {
            let eval: Vec<Vec<LaurentPoly>> = m
                .iter()
                .map(|row| row.iter().map(|e| e.eval_var_rational(w, node)).collect())
                .collect();
            det_bareiss(eval)
        })
        .collect();
    let poly = newton_interpolate(&nodes, &dets, w);
    Ok(if shift == 0 {
        poly
    } else {
        poly.mul_monomial(&Monomial::from_exps(&[(w, shift)]))
    })
}

fn newton_interpolate(nodes: &[BigRational], values: &[LaurentPoly], w: VarId) -> LaurentPoly {
    let n = nodes.len();
    let mut dd: Vec<LaurentPoly> = values.to_vec();
    for j in 1..n {
        for k in (j..n).rev() {
            let diff = &nodes[k] - &nodes[k - j];
            let inv = GaussRat::from_rational(diff).inv();
            dd[k] = (&dd[k] - &dd[k - 1]).scale(&inv);
        }
    }
    let wp = LaurentPoly::var(w);
    let mut acc = dd[n - 1].clone();
    for k in (0..n - 1).rev() {
        let shifted = &wp - &LaurentPoly::constant(GaussRat::from_rational(nodes[k].clone()));
        acc = &(&acc * &shifted) + &dd[k];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn substitution_example() {
        // Res_z(z - x, z^2 - y) = x^2 - y
        let r = resultant(
            &parse("z-x").unwrap(),
            &parse("z^2-y").unwrap(),
            VarId::Z,
        )
        .unwrap();
        assert_eq!(r, parse("x^2-y").unwrap());
    }

    #[test]
    fn common_root_vanishes() {
        let r = resultant(&parse("z-1").unwrap(), &parse("z-1").unwrap(), VarId::Z).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn degree_zero_rejected() {
        let e = resultant(&parse("x").unwrap(), &parse("z-1").unwrap(), VarId::Z);
        assert!(matches!(e, Err(PolyError::DegreeZero { .. })));
    }

    #[test]
    fn laurent_inputs_are_cleared() {
        // z^-1 - x and z - y: clearing gives (1 - x z) and (z - y)
        let r = resultant(&parse("z^-1 - x").unwrap(), &parse("z-y").unwrap(), VarId::Z).unwrap();
        // common root z = y iff 1 - x y = 0
        assert_eq!(r.normalize_unit().unwrap(), parse("x*y-1").unwrap().normalize_unit().unwrap());
    }

    #[test]
    fn interp_path_matches_direct() {
        let p = parse("(x^9 + 3*x^4 - 2)*z^2 + (x^7-x)*z + x^12 - 5").unwrap();
        let q = parse("(x^6 - 4)*z^3 + x^3*z + 1 - x^8").unwrap();
        let direct = resultant_with(&p, &q, VarId::Z, i64::MAX).unwrap();
        let interp = resultant_with(&p, &q, VarId::Z, 4).unwrap();
        assert_eq!(direct, interp);
    }

    #[test]
    fn sign_swap_symmetry() {
        let p = parse("z^2 + x*z - 1").unwrap();
        let q = parse("z^3 - y").unwrap();
        let r1 = resultant(&p, &q, VarId::Z).unwrap();
        let r2 = resultant(&q, &p, VarId::Z).unwrap();
        // res(p,q) = (-1)^(deg p * deg q) res(q,p); 2*3 even
        assert_eq!(r1, r2);
        let p1 = parse("z - x").unwrap();
        let q1 = parse("z^3 - y").unwrap();
        let r1 = resultant(&p1, &q1, VarId::Z).unwrap();
        let r2 = resultant(&q1, &p1, VarId::Z).unwrap();
        assert_eq!(r1, -&r2);
    }
}
