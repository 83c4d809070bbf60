use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::QcalcError;

/// A dense polynomial in `q` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`; the highest-index coefficient is
/// nonzero unless the polynomial is zero, so equality is plain coefficient
/// comparison. Rational (not integer) coefficients are essential: several of
/// the annular q-analogues have half-integer coefficients, and integrality at
/// roots of unity is a theorem to be checked, not a representation invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigRational>,
}

impl QPolynomial {
    /// Builds a polynomial from coefficients in ascending degree, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> QPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> QPolynomial {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> QPolynomial {
        QPolynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> QPolynomial {
        QPolynomial::from_coeffs(vec![c])
    }

    /// The monomial `q^exp`.
    pub fn monomial(exp: usize) -> QPolynomial {
        let mut coeffs = vec![BigRational::zero(); exp + 1];
        coeffs[exp] = BigRational::one();
        QPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficients in ascending degree, highest nonzero.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: &BigRational) -> QPolynomial {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^exp`.
    pub fn shifted(&self, exp: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); exp];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &QPolynomial) -> Result<(QPolynomial, QPolynomial), QcalcError> {
        if divisor.is_zero() {
            return Err(QcalcError::DivisionByZero);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((QPolynomial::zero(), self.clone()));
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] / lead;
            for j in 0..dd {
                let t = &c * &divisor.coeffs[j];
                rem[i - dd + j] -= t;
            }
            rem[i] = BigRational::zero();
            quot[i - dd] = c;
        }
        Ok((
            QPolynomial::from_coeffs(quot),
            QPolynomial::from_coeffs(rem),
        ))
    }

    /// Exact division: fails with the offending remainder when the divisor
    /// does not divide evenly.
    pub fn exact_div(&self, divisor: &QPolynomial) -> Result<QPolynomial, QcalcError> {
        let (quot, rem) = self.div_rem(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(QcalcError::DivisionWithRemainder { remainder: rem })
        }
    }

    /// Evaluates at a rational point by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The value at `q = 1` (the classical specialization).
    pub fn at_one(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    /// True iff every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// True iff every coefficient is nonnegative (integrality not required).
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// JSON form `{"coeffs": [[num, den], ...]}` in ascending degree, with
    /// numerator and denominator as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| serde_json::json!([c.numer().to_string(), c.denom().to_string()]))
            .collect();
        serde_json::json!({ "coeffs": coeffs })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<QPolynomial, QcalcError> {
        let bad = || QcalcError::Json(value.to_string());
        let coeffs = value
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(bad)?;
        let mut out = Vec::with_capacity(coeffs.len());
        for pair in coeffs {
            let pair = pair.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
            let num: BigInt = pair[0]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(bad)?;
            let den: BigInt = pair[1]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(bad)?;
            if den.is_zero() {
                return Err(bad());
            }
            out.push(BigRational::new(num, den));
        }
        Ok(QPolynomial::from_coeffs(out))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, other: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, other: &QPolynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, other: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, other: &QPolynomial) -> QPolynomial {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPolynomial { coeffs }
    }
}

/// Renders coefficients in ascending degree with `var` as the variable name;
/// shared between the `q`-polynomial display and cyclotomic residues.
pub(super) fn format_terms(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[BigInt],
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mag = c.abs();
        if i == 0 {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if i == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{i}")?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for QPolynomial {
    /// Human form, e.g. `1 + 2q + q^3`; when coefficients share a common
    /// denominator `L > 1` the polynomial prints as `(...)/L`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| {
            num::integer::lcm(acc, c.denom().clone())
        });
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        if lcm.is_one() {
            format_terms(f, &ints, "q")
        } else {
            write!(f, "(")?;
            format_terms(f, &ints, "q")?;
            write!(f, ")/{lcm}")
        }
    }
}
