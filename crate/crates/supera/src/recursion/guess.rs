//! Ansatz-based recovery of annihilating operators at specialized `(a, t)`.
//!
//! The unknown coefficients `a_i(xh; q) = sum_j c_ij xh^j` with `c_ij` in
//! `Q(q)` satisfy the exact linear system `sum_ij c_ij q^{nj} P_{n+i} = 0`.
//! Rather than eliminating over `Q(q)` symbolically, the system is solved
//! exactly at rational sample values of `q`, the kernel is reconstructed
//! entrywise as rational functions of `q`, and the assembled operator is
//! certified by exact symbolic annihilation before it is returned. A sample
//! point with full column rank certifies that no operator of the given shape
//! exists at all, since specialization can only lower rank.

use super::{QDiffOperator, SuperSequence};
use crate::poly::{GaussRat, LaurentPoly, RationalFunc, VarId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GuessError {
    #[error("no annihilating operator of the requested shape exists")]
    NoSolution,
    #[error("the sequence provides too few terms: need at least {needed}")]
    InsufficientData { needed: u32 },
    #[error("kernel reconstruction failed within the degree budget")]
    Reconstruction,
}

const MAX_RECON_DEGREE: usize = 16;

/// Find the minimal-order annihilator with `order <= max_order` and
/// polynomial `xh`-degree at most `deg_x`, over exact `Q(q)` with `a`, `t`
/// specialized to the given nonzero rationals. Returned monic.
pub fn guess_operator(
    seq: &SuperSequence,
    max_order: usize,
    deg_x: usize,
    a_val: &BigRational,
    t_val: &BigRational,
) -> Result<QDiffOperator, GuessError> {
    assert!(max_order >= 1);
    assert!(!a_val.is_zero() && !t_val.is_zero(), "a, t must be nonzero");
    let needed = ((max_order + 1) * (deg_x + 1) + 4) as u32;
    if let Some(limit) = seq.limit() {
        if limit < needed + max_order as u32 {
            return Err(GuessError::InsufficientData { needed });
        }
    }

    let rows = needed as usize;
    let specialized = specialize_sequence(seq, rows + max_order + 5, a_val, t_val);

    for order in 1..=max_order {
        match guess_at_order(&specialized, order, deg_x, rows) {
            Ok(op) => return Ok(op),
            Err(GuessError::NoSolution) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GuessError::NoSolution)
}

/// Sequence values with `a`, `t` bound to rationals; entries are rational
/// functions of `q` only, index 0 holding `P_1`.
fn specialize_sequence(
    seq: &SuperSequence,
    count: usize,
    a_val: &BigRational,
    t_val: &BigRational,
) -> Vec<RationalFunc> {
    (1..=count as u32)
        .map(|n| seq.value_at(n, a_val, t_val))
        .collect()
}

fn guess_at_order(
    specialized: &[RationalFunc],
    order: usize,
    deg_x: usize,
    rows: usize,
) -> Result<QDiffOperator, GuessError> {
    let cols = (order + 1) * (deg_x + 1);
    let mut samples: Vec<(BigRational, Vec<BigRational>)> = Vec::new();
    let mut pivot_idx: Option<usize> = None;
    let mut next_node = 2i64;
    let mut full_rank_seen = false;

    let mut take_sample = |node: i64,
                           pivot_idx: &mut Option<usize>,
                           full_rank_seen: &mut bool|
     -> Option<(BigRational, Vec<BigRational>)> {
        let q0 = BigRational::from_integer(BigInt::from(node));
        let matrix = build_matrix(specialized, order, deg_x, rows, &q0)?;
        let kernel = rational_kernel(matrix, cols);
        if kernel.is_empty() {
            *full_rank_seen = true;
            return None;
        }
        let v = kernel.into_iter().next().expect("nonempty");
        let idx = match *pivot_idx {
            Some(i) => i,
            None => {
                let i = v.iter().position(|e| !e.is_zero()).expect("kernel vector nonzero");
                *pivot_idx = Some(i);
                i
            }
        };
        if v[idx].is_zero() {
            return None;
        }
        let piv = v[idx].clone();
        Some((q0, v.into_iter().map(|e| e / &piv).collect()))
    };

    // two independent sample points decide existence
    let mut misses = 0;
    while samples.len() < 2 {
        if let Some(s) = take_sample(next_node, &mut pivot_idx, &mut full_rank_seen) {
            samples.push(s);
        } else {
            if full_rank_seen {
                return Err(GuessError::NoSolution);
            }
            misses += 1;
            if misses > 6 {
                return Err(GuessError::Reconstruction);
            }
        }
        next_node += 1;
    }

    for degree in 0..=MAX_RECON_DEGREE {
        let want = 2 * degree + 4;
        let mut misses = 0;
        while samples.len() < want {
            if let Some(s) = take_sample(next_node, &mut pivot_idx, &mut full_rank_seen) {
                samples.push(s);
            } else {
                if full_rank_seen {
                    return Err(GuessError::NoSolution);
                }
                misses += 1;
                if misses > 6 {
                    return Err(GuessError::Reconstruction);
                }
            }
            next_node += 1;
        }
        if let Some(entries) = reconstruct_all(&samples, cols, degree) {
            if let Some(op) = assemble(&entries, order, deg_x) {
                if certify(&op, specialized, rows + order + 5) {
                    return Ok(op.monic());
                }
            }
        }
    }
    Err(GuessError::Reconstruction)
}

/// Row for color `n`: entry at unknown `(i, j)` is `q0^{n j} P_{n+i}(q0)`.
/// `None` when some sequence value has a pole at `q0`.
fn build_matrix(
    specialized: &[RationalFunc],
    order: usize,
    deg_x: usize,
    rows: usize,
    q0: &BigRational,
) -> Option<Vec<Vec<BigRational>>> {
    let mut values = HashMap::new();
    values.insert(VarId::Q, q0.clone());
    let evals: Vec<BigRational> = specialized
        .iter()
        .take(rows + order)
        .map(|p| {
            let g = p.eval_gauss(&values).ok()?;
            g.is_real().then_some(g.re)
        })
        .collect::<Option<_>>()?;
    let mut matrix = Vec::with_capacity(rows);
    for n in 1..=rows {
        let mut row = Vec::with_capacity((order + 1) * (deg_x + 1));
        for i in 0..=order {
            let p = &evals[n + i - 1];
            let mut xpow = BigRational::one();
            let qn = rat_pow(q0, n as i64);
            for _j in 0..=deg_x {
                row.push(p * &xpow);
                xpow *= &qn;
            }
        }
        matrix.push(row);
    }
    Some(matrix)
}

fn rat_pow(base: &BigRational, e: i64) -> BigRational {
    crate::poly::rational_pow(base, e)
}

/// Reduced-echelon kernel basis of the column space; deterministic.
fn rational_kernel(mut m: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for e in m[r].iter_mut() {
            *e *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for c2 in 0..cols {
                    let sub = &m[r][c2] * &f;
                    m[i][c2] -= sub;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for &(pr, pc) in &pivots {
            v[pc] = -m[pr][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Fit every kernel entry as a rational function `N/D` with both degrees at
/// most `degree`, validated on held-out sample points.
fn reconstruct_all(
    samples: &[(BigRational, Vec<BigRational>)],
    cols: usize,
    degree: usize,
) -> Option<Vec<RationalFunc>> {
    let fit = samples.len() - 2;
    (0..cols)
        .map(|e| {
            let pts: Vec<(BigRational, BigRational)> = samples
                .iter()
                .map(|(q0, v)| (q0.clone(), v[e].clone()))
                .collect();
            reconstruct_entry(&pts[..fit], &pts[fit..], degree)
        })
        .collect()
}

fn reconstruct_entry(
    fit: &[(BigRational, BigRational)],
    holdout: &[(BigRational, BigRational)],
    degree: usize,
) -> Option<RationalFunc> {
    // unknowns: N_0..N_d, D_0..D_d with sum_m N_m q^m - v sum_m D_m q^m = 0
    let cols = 2 * (degree + 1);
    let rows: Vec<Vec<BigRational>> = fit
        .iter()
        .map(|(q0, v)| {
            let mut row = Vec::with_capacity(cols);
            let mut p = BigRational::one();
            for _ in 0..=degree {
                row.push(p.clone());
                p *= q0;
            }
            let mut p = BigRational::one();
            for _ in 0..=degree {
                row.push(-(v * &p));
                p *= q0;
            }
            row
        })
        .collect();
    if rows.len() < cols - 1 {
        return None;
    }
    let kernel = rational_kernel(rows, cols);
    let sol = kernel.into_iter().next()?;
    let (ncoef, dcoef) = sol.split_at(degree + 1);
    let num = poly_from_coeffs(ncoef);
    let den = poly_from_coeffs(dcoef);
    if den.is_zero() {
        return None;
    }
    let rf = RationalFunc::new(num, den).ok()?;
    // held-out validation
    for (q0, v) in holdout {
        let mut values = HashMap::new();
        values.insert(VarId::Q, q0.clone());
        let got = rf.eval_gauss(&values).ok()?;
        if !got.is_real() || &got.re != v {
            return None;
        }
    }
    Some(rf)
}

fn poly_from_coeffs(coeffs: &[BigRational]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            p = &p
                + &LaurentPoly::var_pow(VarId::Q, e as i64)
                    .scale(&GaussRat::from_rational(c.clone()));
        }
    }
    p
}

/// `a_i(x, q) = sum_j c_ij x^j`; trailing zero coefficients are trimmed.
fn assemble(entries: &[RationalFunc], order: usize, deg_x: usize) -> Option<QDiffOperator> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut acc = RationalFunc::zero();
        for j in 0..=deg_x {
            let c = &entries[i * (deg_x + 1) + j];
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(c * &RationalFunc::from_poly(LaurentPoly::var_pow(VarId::X, j as i64)));
        }
        coeffs.push(acc);
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    (coeffs.len() >= 2).then(|| QDiffOperator::new(coeffs))
}

/// Exact symbolic certification on the specialized sequence.
fn certify(op: &QDiffOperator, specialized: &[RationalFunc], n_max: usize) -> bool {
    let top = n_max.min(specialized.len().saturating_sub(op.order()));
    for n in 1..=top {
        let mut bindings = HashMap::new();
        bindings.insert(
            VarId::X,
            RationalFunc::from_poly(LaurentPoly::var_pow(VarId::Q, n as i64)),
        );
        let mut acc = RationalFunc::zero();
        for (i, c) in op.coeffs().iter().enumerate() {
            let Ok(at_n) = c.substitute(&bindings) else {
                return false;
            };
            acc = &acc + &(&at_n * &specialized[n + i - 1]);
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::KnotId;
    use crate::poly::parse;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn geometric_sequence_first_order() {
        // P_n = 2^n is annihilated by yh - 2
        let seq = SuperSequence::from_fn(|n| {
            RationalFunc::from_poly(LaurentPoly::int(1i64 << n))
        });
        let op = guess_operator(&seq, 1, 0, &ratio(3, 1), &ratio(-1, 1)).unwrap();
        assert_eq!(op.order(), 1);
        let c0 = &op.coeffs()[0];
        assert_eq!(c0, &RationalFunc::from_poly(parse("-2").unwrap()));
        assert!(op.coeffs()[1].as_poly().unwrap().is_one());
    }

    #[test]
    fn trefoil_order_one_has_no_solution() {
        let seq = SuperSequence::for_knot(KnotId::Trefoil);
        let e = guess_operator(&seq, 1, 4, &ratio(3, 1), &ratio(-1, 1));
        assert!(matches!(e, Err(GuessError::NoSolution)));
    }

    #[test]
    fn insufficient_data_is_flagged() {
        let seq =
            SuperSequence::from_fn(|n| RationalFunc::from_poly(LaurentPoly::int(n as i64)))
                .with_limit(5);
        let e = guess_operator(&seq, 2, 3, &ratio(2, 1), &ratio(-1, 1));
        assert!(matches!(e, Err(GuessError::InsufficientData { .. })));
    }
}
