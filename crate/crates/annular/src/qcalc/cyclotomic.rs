//! Exact evaluation of q-polynomials at roots of unity.
//!
//! A value in the cyclotomic field of order `d` is represented in the power
//! basis `1, w, ..., w^{phi(d)-1}` of a primitive `d`-th root `w`, i.e. as a
//! polynomial residue modulo the `d`-th cyclotomic polynomial. All arithmetic
//! is exact; there is no floating-point fallback. Cyclic-sieving checks hinge
//! on deciding whether such a value is a plain integer, which the power basis
//! makes trivial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num::{BigInt, BigRational, One, Zero};

use super::poly::format_terms;
use super::{QPolynomial, QcalcError};

/// An element of `Q(w)` for `w` a primitive `d`-th root of unity, stored as
/// the residue of a polynomial in `w` modulo the `d`-th cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicValue {
    order: u64,
    residue: QPolynomial,
}

impl CyclotomicValue {
    /// The order `d` of the root of unity this value is expressed in.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The residue polynomial in the power basis, degree below `phi(d)`.
    pub fn residue(&self) -> &QPolynomial {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// The value as a rational if the residue is constant, else `None`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.residue.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            Some(_) => None,
        }
    }

    /// The value as an integer; `None` ("not an integer") is an ordinary
    /// outcome, not a fault.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lcm = self.residue.coeffs().iter().fold(BigInt::one(), |acc, c| {
            num::integer::lcm(acc, c.denom().clone())
        });
        let ints: Vec<BigInt> = self
            .residue
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        if lcm.is_one() {
            format_terms(f, &ints, "w")
        } else {
            write!(f, "(")?;
            format_terms(f, &ints, "w")?;
            write!(f, ")/{lcm}")
        }
    }
}

static CYCLOTOMIC_CACHE: LazyLock<Mutex<HashMap<u64, QPolynomial>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The `d`-th cyclotomic polynomial, computed by the recursive quotient
/// `Phi_d(q) = (q^d - 1) / prod_{e|d, e<d} Phi_e(q)` and memoized.
pub fn cyclotomic_polynomial(d: u64) -> QPolynomial {
    assert!(d >= 1, "cyclotomic order must be positive");
    let mut cache = CYCLOTOMIC_CACHE.lock().unwrap();
    fn compute(d: u64, cache: &mut HashMap<u64, QPolynomial>) -> QPolynomial {
        if let Some(p) = cache.get(&d) {
            return p.clone();
        }
        let result = if d == 1 {
            QPolynomial::from_integers(&[-1, 1])
        } else {
            // q^d - 1
            let mut num = QPolynomial::monomial(d as usize);
            num = &num - &QPolynomial::one();
            let mut den = QPolynomial::one();
            for e in 1..d {
                if d.is_multiple_of(e) {
                    den = &den * &compute(e, cache);
                }
            }
            num.exact_div(&den)
                .expect("product of proper-divisor cyclotomics divides q^d - 1")
        };
        cache.insert(d, result.clone());
        result
    }
    compute(d, &mut cache)
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1);
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            phi = phi / p * (p - 1);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

/// Substitutes `q -> w^j` for `w` a primitive `d`-th root of unity and
/// reduces modulo the `d`-th cyclotomic polynomial. Requires `gcd(j, d) = 1`;
/// for `d = 1` this is evaluation at `q = 1`.
pub fn eval_at_primitive_root(
    p: &QPolynomial,
    d: u64,
    j: i64,
) -> Result<CyclotomicValue, QcalcError> {
    assert!(d >= 1, "root-of-unity order must be positive");
    let jm = j.rem_euclid(d as i64) as u64;
    if num::integer::gcd(jm, d) != 1 {
        return Err(QcalcError::NonPrimitiveRoot { d, j });
    }
    // Fold q^i onto w^{ij mod d}, then reduce modulo Phi_d.
    let mut folded = vec![BigRational::zero(); d as usize];
    for (i, c) in p.coeffs().iter().enumerate() {
        folded[(i as u64 * jm % d) as usize] += c;
    }
    let folded = QPolynomial::from_coeffs(folded);
    let (_, residue) = folded.div_rem(&cyclotomic_polynomial(d))?;
    Ok(CyclotomicValue { order: d, residue })
}

#[cfg(test)]
mod tests {
    use super::super::{q_binomial, q_int};
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(
            cyclotomic_polynomial(1),
            QPolynomial::from_integers(&[-1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(2),
            QPolynomial::from_integers(&[1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(3),
            QPolynomial::from_integers(&[1, 1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(4),
            QPolynomial::from_integers(&[1, 0, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(6),
            QPolynomial::from_integers(&[1, -1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(12),
            QPolynomial::from_integers(&[1, 0, -1, 0, 1])
        );
        for d in 1..=24 {
            assert_eq!(
                cyclotomic_polynomial(d).degree(),
                Some(euler_phi(d) as usize)
            );
        }
    }

    #[test]
    fn euler_phi_values() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e);
        }
    }

    #[test]
    fn eval_examples() {
        // [4 choose 2]_q at q = -1: 1 - 1 + 2 - 1 + 1 = 2
        let v = eval_at_primitive_root(&q_binomial(4, 2), 2, 1).unwrap();
        assert_eq!(v.as_integer(), Some(2.into()));

        // [6]_q vanishes at a primitive cube root (q^6 = 1 there); the
        // quotient [6]_q/[3]_q carries the value 6/3
        let v = eval_at_primitive_root(&q_int(6), 3, 1).unwrap();
        assert_eq!(v.as_integer(), Some(0.into()));
        let ratio = q_int(6).exact_div(&q_int(3)).unwrap();
        let v = eval_at_primitive_root(&ratio, 3, 1).unwrap();
        assert_eq!(v.as_integer(), Some(2.into()));

        // constant 1 at any root
        for d in 1..=6 {
            let v = eval_at_primitive_root(&QPolynomial::one(), d, 1).unwrap();
            assert_eq!(v.as_integer(), Some(1.into()));
        }

        // q at a primitive 4th root is i: not rational, not an integer
        let v = eval_at_primitive_root(&QPolynomial::monomial(1), 4, 1).unwrap();
        assert_eq!(v.as_integer(), None);
        assert_eq!(v.as_rational(), None);
        assert_eq!(v.residue(), &QPolynomial::monomial(1));
    }

    #[test]
    fn non_primitive_exponent_is_rejected() {
        assert!(matches!(
            eval_at_primitive_root(&QPolynomial::one(), 4, 2),
            Err(QcalcError::NonPrimitiveRoot { d: 4, j: 2 })
        ));
        // negative exponents are reduced mod d
        assert!(eval_at_primitive_root(&QPolynomial::one(), 5, -1).is_ok());
    }

    #[test]
    fn d_one_is_evaluation_at_one() {
        let p = QPolynomial::from_integers(&[1, 2, 3]);
        let v = eval_at_primitive_root(&p, 1, 1).unwrap();
        assert_eq!(v.as_integer(), Some(6.into()));
    }
}
