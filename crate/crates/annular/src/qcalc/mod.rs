//! Exact polynomial arithmetic over the rationals and the standard
//! q-combinatorial building blocks.
//!
//! Everything here is exact: q-integers, q-factorials, Gaussian binomials and
//! q-multinomials are computed by explicit products and exact polynomial
//! division (a nonzero remainder is a hard fault, because the quotients are
//! polynomials by theorem), and root-of-unity evaluation works in the
//! cyclotomic quotient ring rather than with complex floats.

mod cyclotomic;
mod poly;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, eval_at_primitive_root, CyclotomicValue};
pub use poly::QPolynomial;

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num::{BigRational, One};
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QcalcError {
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("division left a nonzero remainder: {remainder}")]
    DivisionWithRemainder { remainder: QPolynomial },
    #[error("q^j is not a primitive {d}th root of unity (j = {j})")]
    NonPrimitiveRoot { d: u64, j: i64 },
    #[error("partition has {actual} parts, expected {expected}")]
    WrongPartCount { expected: u64, actual: usize },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`; zero for `n = 0`.
pub fn q_int(n: u64) -> QPolynomial {
    QPolynomial::from_coeffs(vec![BigRational::one(); n as usize])
}

static Q_FACTORIALS: LazyLock<Mutex<Vec<QPolynomial>>> =
    LazyLock::new(|| Mutex::new(vec![QPolynomial::one()]));

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u64) -> QPolynomial {
    let mut cache = Q_FACTORIALS.lock().unwrap();
    while cache.len() <= n as usize {
        let next = cache.last().unwrap() * &q_int(cache.len() as u64);
        cache.push(next);
    }
    cache[n as usize].clone()
}

static Q_BINOMIALS: LazyLock<Mutex<HashMap<(u64, u64), QPolynomial>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The Gaussian binomial `[n choose k]_q = [n]_q! / ([k]_q! [n-k]_q!)`,
/// computed by exact division; zero when `k < 0`, `k > n`, or `n < 0`.
pub fn q_binomial(n: i64, k: i64) -> QPolynomial {
    if n < 0 || k < 0 || k > n {
        return QPolynomial::zero();
    }
    let (n, k) = (n as u64, k as u64);
    if let Some(p) = Q_BINOMIALS.lock().unwrap().get(&(n, k)) {
        return p.clone();
    }
    let den = &q_factorial(k) * &q_factorial(n - k);
    let result = q_factorial(n)
        .exact_div(&den)
        .expect("[k]_q! [n-k]_q! divides [n]_q!");
    Q_BINOMIALS.lock().unwrap().insert((n, k), result.clone());
    result
}

/// The q-multinomial `[k choose lam]_q = [k]_q! / prod_i [m_i]_q!`, indexed
/// by the part multiplicities `m_i` of `lam`. Errors unless `lam` has exactly
/// `k` parts.
pub fn q_multinomial_partition(k: u64, lam: &Partition) -> Result<QPolynomial, QcalcError> {
    if lam.len() as u64 != k {
        return Err(QcalcError::WrongPartCount {
            expected: k,
            actual: lam.len(),
        });
    }
    let mut den = QPolynomial::one();
    for mult in lam.multiplicities().values() {
        den = &den * &q_factorial(u64::from(*mult));
    }
    Ok(q_factorial(k)
        .exact_div(&den)
        .expect("product of [m_i]_q! divides [k]_q!"))
}

/// The q-Pochhammer symbol `(q;q)_r = (1-q)(1-q^2)...(1-q^r)`.
pub fn q_pochhammer(r: u64) -> QPolynomial {
    let mut acc = QPolynomial::one();
    for i in 1..=r as usize {
        let mut factor = QPolynomial::one();
        factor = &factor - &QPolynomial::monomial(i);
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, Zero};
    use proptest::prelude::*;

    fn binom(n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let mut r = BigInt::one();
        for i in 0..k {
            r = r * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        r
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(0), QPolynomial::zero());
        assert_eq!(q_int(1), QPolynomial::one());
        assert_eq!(q_int(4), QPolynomial::from_integers(&[1, 1, 1, 1]));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), QPolynomial::one());
        assert_eq!(q_factorial(2), QPolynomial::from_integers(&[1, 1]));
        assert_eq!(q_factorial(3), QPolynomial::from_integers(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_examples() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), QPolynomial::one());
        }
        assert_eq!(
            q_binomial(4, 2),
            QPolynomial::from_integers(&[1, 1, 2, 1, 1])
        );
        assert_eq!(q_binomial(3, 5), QPolynomial::zero());
        assert_eq!(q_binomial(3, -1), QPolynomial::zero());
        assert_eq!(q_binomial(-1, -1), QPolynomial::zero());
    }

    #[test]
    fn q_binomial_properties_up_to_20() {
        for n in 0..=20i64 {
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert!(b.has_nonnegative_integer_coeffs(), "[{n} choose {k}]_q");
                // symmetric coefficient sequence of degree k(n-k)
                let deg = (k * (n - k)) as usize;
                assert_eq!(b.degree().unwrap_or(0), deg);
                for i in 0..=deg {
                    assert_eq!(b.coeff(i), b.coeff(deg - i));
                }
                // q = 1 specializes to the ordinary binomial
                assert_eq!(
                    b.at_one(),
                    BigRational::from_integer(binom(n as u64, k as u64))
                );
            }
        }
    }

    #[test]
    fn q_multinomial_examples() {
        // indexed by part multiplicities: (1,1) has m_1 = 2, so the
        // denominator is [2]_q! and the quotient is 1
        let lam11: Partition = "(1,1)".parse().unwrap();
        let lam21: Partition = "(2,1)".parse().unwrap();
        let lam111: Partition = "(1,1,1)".parse().unwrap();
        assert_eq!(
            q_multinomial_partition(2, &lam11).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            q_multinomial_partition(2, &lam21).unwrap(),
            QPolynomial::from_integers(&[1, 1])
        );
        assert_eq!(
            q_multinomial_partition(3, &lam111).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            q_multinomial_partition(4, &"(3,2,2,1)".parse().unwrap())
                .unwrap()
                .at_one(),
            BigRational::from_integer(12.into())
        );
        assert!(matches!(
            q_multinomial_partition(3, &lam21),
            Err(QcalcError::WrongPartCount {
                expected: 3,
                actual: 2
            })
        ));
    }

    #[test]
    fn q_multinomial_at_one_is_multinomial() {
        for n in 0..=8u32 {
            for k in 0..=n {
                for lam in crate::partitions::par_set(n, k) {
                    let poly = q_multinomial_partition(u64::from(k), &lam).unwrap();
                    assert_eq!(
                        poly.at_one(),
                        BigRational::from_integer(lam.rearrangement_count()),
                    );
                }
            }
        }
    }

    #[test]
    fn q_pochhammer_examples() {
        assert_eq!(q_pochhammer(0), QPolynomial::one());
        assert_eq!(q_pochhammer(1), QPolynomial::from_integers(&[1, -1]));
        assert_eq!(q_pochhammer(2), QPolynomial::from_integers(&[1, -1, -1, 1]));
    }

    #[test]
    fn binomial_via_pochhammer_quotient() {
        // [4][3]/[2] = [4 choose 2]_q as polynomials (quoted example: the
        // quotient is exact even though [2] divides neither factor alone).
        let num = &q_int(4) * &q_int(3);
        let q = num.exact_div(&q_int(2)).unwrap();
        assert_eq!(q, q_binomial(4, 2));
        for n in 0..=10u64 {
            for k in 0..=n {
                let den = &q_pochhammer(k) * &q_pochhammer(n - k);
                assert_eq!(
                    q_pochhammer(n).exact_div(&den).unwrap(),
                    q_binomial(n as i64, k as i64)
                );
            }
        }
    }

    #[test]
    fn root_of_unity_evaluation_lemma() {
        // For d | n at a primitive d-th root w: [n]_q itself vanishes for
        // d > 1, the polynomial quotient [n]_q/[d]_q evaluates to n/d (the
        // working form of the evaluation lemma), and [n choose k]_q is
        // binom(n/d, k/d) if d | k, else 0.
        for n in 1..=24u64 {
            for d in 1..=n {
                if n % d != 0 {
                    continue;
                }
                for j in 1..=d {
                    if num::integer::gcd(j, d) != 1 {
                        continue;
                    }
                    let v = eval_at_primitive_root(&q_int(n), d, j as i64).unwrap();
                    let expected = if d == 1 { n } else { 0 };
                    assert_eq!(v.as_integer(), Some(BigInt::from(expected)));

                    let ratio = q_int(n).exact_div(&q_int(d)).unwrap();
                    let v = eval_at_primitive_root(&ratio, d, j as i64).unwrap();
                    assert_eq!(v.as_integer(), Some(BigInt::from(n / d)));

                    for k in 0..=n {
                        let v =
                            eval_at_primitive_root(&q_binomial(n as i64, k as i64), d, j as i64)
                                .unwrap();
                        let expected = if k % d == 0 {
                            binom(n / d, k / d)
                        } else {
                            BigInt::zero()
                        };
                        assert_eq!(v.as_integer(), Some(expected), "n={n} k={k} d={d} j={j}");
                    }
                }
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = QPolynomial> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), 0..8).prop_map(|cs| {
            QPolynomial::from_coeffs(
                cs.into_iter()
                    .map(|(n, d)| BigRational::new(n.into(), d.into()))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn exact_div_round_trips(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&(&q * &b) + &r), &a);
            if let (Some(rd), Some(bd)) = (r.degree(), b.degree()) {
                prop_assert!(rd < bd);
            }
        }
    }
}
