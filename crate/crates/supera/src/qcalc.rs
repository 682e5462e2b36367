//! q-calculus primitives: finite q-Pochhammer symbols in base `q` or `q^-1`
//! and Gaussian q-binomial coefficients.

use crate::poly::{LaurentPoly, VarId};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum QcalcError {
    #[error("q-binomial index out of range: k={k}, n={n}")]
    Range { n: i64, k: i64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PochBase {
    Q,
    QInv,
}

#[derive(Clone, Debug)]
pub struct QPochSpec {
    pub x: LaurentPoly,
    pub base: PochBase,
    pub len: u32,
}

/// `(x; base)_k = prod_{i=0}^{k-1} (1 - x * base^i)`; the empty product is 1.
pub fn qpoch(spec: &QPochSpec) -> LaurentPoly {
    let step = match spec.base {
        PochBase::Q => 1,
        PochBase::QInv => -1,
    };
    let mut acc = LaurentPoly::one();
    for i in 0..spec.len as i64 {
        let factor = &LaurentPoly::one() - &spec.x.mul_monomial(
            &crate::poly::Monomial::from_exps(&[(VarId::Q, step * i)]),
        );
        acc = &acc * &factor;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `(x; q)_k`.
pub fn qpoch_q(x: &LaurentPoly, k: u32) -> LaurentPoly {
    qpoch(&QPochSpec {
        x: x.clone(),
        base: PochBase::Q,
        len: k,
    })
}

/// `(x; q^-1)_k`.
pub fn qpoch_qinv(x: &LaurentPoly, k: u32) -> LaurentPoly {
    qpoch(&QPochSpec {
        x: x.clone(),
        base: PochBase::QInv,
        len: k,
    })
}

/// `(q; q)_k`.
pub fn qfac(k: u32) -> LaurentPoly {
    qpoch_q(&LaurentPoly::var(VarId::Q), k)
}

/// Gaussian binomial `[n choose k]_q`, computed by the Pascal recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]` so all arithmetic stays in the
/// polynomial ring.
pub fn qbinom(n: i64, k: i64) -> Result<LaurentPoly, QcalcError> {
    if k < 0 || k > n {
        return Err(QcalcError::Range { n, k });
    }
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(LaurentPoly::one());
        for j in 1..row.len() {
            let shifted = row[j].mul_monomial(&crate::poly::Monomial::from_exps(&[(
                VarId::Q,
                j as i64,
            )]));
            next.push(&row[j - 1] + &shifted);
        }
        next.push(LaurentPoly::one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// `1 - q^e` as a polynomial, handy for building Pochhammer arguments.
pub fn one_minus_q_pow(e: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::var_pow(VarId::Q, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn empty_product() {
        assert!(qpoch_q(&parse("x").unwrap(), 0).is_one());
    }

    #[test]
    fn qq2() {
        assert_eq!(qfac(2), parse("(1-q)*(1-q^2)").unwrap());
    }

    #[test]
    fn truncation_root() {
        // (q^{1-n}; q)_k at n=2, k=2: (1 - q^-1)(1 - 1) = 0
        let x = parse("q^-1").unwrap();
        assert!(qpoch_q(&x, 2).is_zero());
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1).unwrap(), parse("1+q").unwrap());
        assert!(qbinom(7, 0).unwrap().is_one());
        assert!(qbinom(5, 5).unwrap().is_one());
        assert!(matches!(qbinom(3, 4), Err(QcalcError::Range { .. })));
        assert!(matches!(qbinom(3, -1), Err(QcalcError::Range { .. })));
    }

    #[test]
    fn qbinom_4_2_against_division_oracle() {
        // independent route: (q;q)_4 / ((q;q)_2)^2 by exact division
        let num = qfac(4);
        let den = &qfac(2) * &qfac(2);
        let oracle = num.exact_div(&den).unwrap();
        assert_eq!(oracle, parse("1+q+2*q^2+q^3+q^4").unwrap());
        assert_eq!(qbinom(4, 2).unwrap(), oracle);
    }

    #[test]
    fn pascal_identities() {
        for n in 1..=12i64 {
            for k in 1..=n {
                let lhs = qbinom(n, k).unwrap();
                let a = qbinom(n - 1, k - 1).unwrap();
                let b = if k <= n - 1 {
                    qbinom(n - 1, k).unwrap()
                } else {
                    LaurentPoly::zero()
                };
                let qk = LaurentPoly::var_pow(crate::poly::VarId::Q, k);
                assert_eq!(lhs, &a + &(&qk * &b), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pochhammer_recurrence() {
        let xs = ["a*t^3", "q^2*t^-1", "x-1", "2"];
        for xt in xs {
            let x = parse(xt).unwrap();
            for k in 0..=10u32 {
                let lhs = qpoch_q(&x, k + 1);
                let tail = &LaurentPoly::one()
                    - &x.mul_monomial(&crate::poly::Monomial::from_exps(&[(
                        crate::poly::VarId::Q,
                        k as i64,
                    )]));
                assert_eq!(lhs, &qpoch_q(&x, k) * &tail);
            }
        }
    }

    #[test]
    fn differential_product_identity() {
        // prod_{i=1}^{k} (1 + a q^{i-2} t) = (-a t q^{-1}; q)_k
        for k in 0..=6u32 {
            let mut prod = LaurentPoly::one();
            for i in 1..=k as i64 {
                prod = &prod * &parse(&format!("1 + a*q^{}*t", i - 2)).unwrap();
            }
            let poch = qpoch_q(&parse("-a*t*q^-1").unwrap(), k);
            assert_eq!(prod, poch, "k={k}");
        }
    }
}
