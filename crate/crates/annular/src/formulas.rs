//! Closed-form counts and q-polynomials for noncrossing permutations of the
//! disc and the annulus.
//!
//! The disc family (Catalan, Narayana, Kreweras and their q-analogues) backs
//! the classical identities; the annular family covers the five granularities
//! of connected annular noncrossing permutations — by full cycle-type
//! profile, by `(c, r, s, R, S)`, by `(c, r, s)`, by `c`, and in total —
//! together with their q-analogues, the rotation-fixed-point counting
//! formula, the type-B counts, and the matching counts.
//!
//! Every quotient is computed by exact division with a hard fault on a
//! nonzero remainder, so the polynomiality statements behind these formulas
//! are exercised on every call.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

use crate::partitions::Partition;
use crate::qcalc::{q_binomial, q_int, q_multinomial_partition, QPolynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid cycle profile: {0}")]
    InvalidProfile(String),
    #[error("parity precondition failed: {0}")]
    Parity(String),
    #[error("negative exponent W = {w} for profile {profile}")]
    NegativeExponent { w: i64, profile: String },
}

/// The cycle-type profile `(c, r, s, R, S; alpha, beta, lam, mu)` of a
/// connected annular noncrossing permutation on an `(n, m)`-annulus:
/// `alpha` and `beta` are the exterior and interior cycle types (weights `R`
/// and `S`, lengths `r` and `s`), while `lam` and `mu` are the exterior and
/// interior size profiles of the `c` connected cycles.
///
/// Only `(n, m)` and the four partitions are stored; the counts and weights
/// are derived, so a constructed profile is consistent by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleProfile {
    n: u32,
    m: u32,
    alpha: Partition,
    beta: Partition,
    lam: Partition,
    mu: Partition,
}

impl CycleProfile {
    pub fn new(
        n: u32,
        m: u32,
        alpha: Partition,
        beta: Partition,
        lam: Partition,
        mu: Partition,
    ) -> Result<CycleProfile, FormulaError> {
        let fail = |msg: String| Err(FormulaError::InvalidProfile(msg));
        if lam.len() != mu.len() {
            return fail(format!(
                "connected cycle types have different lengths: lam={lam}, mu={mu}"
            ));
        }
        if lam.is_empty() {
            return fail("a connected profile needs at least one connected cycle".into());
        }
        if alpha.weight() + lam.weight() != n {
            return fail(format!(
                "exterior weights {}+{} do not sum to n={n}",
                alpha.weight(),
                lam.weight()
            ));
        }
        if beta.weight() + mu.weight() != m {
            return fail(format!(
                "interior weights {}+{} do not sum to m={m}",
                beta.weight(),
                mu.weight()
            ));
        }
        Ok(CycleProfile {
            n,
            m,
            alpha,
            beta,
            lam,
            mu,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    /// The number of connected cycles `c`.
    pub fn c(&self) -> u32 {
        self.lam.len() as u32
    }
    /// The number of exterior cycles `r`.
    pub fn r(&self) -> u32 {
        self.alpha.len() as u32
    }
    /// The number of interior cycles `s`.
    pub fn s(&self) -> u32 {
        self.beta.len() as u32
    }
    /// The total exterior cycle size `R`.
    pub fn ext_weight(&self) -> u32 {
        self.alpha.weight()
    }
    /// The total interior cycle size `S`.
    pub fn int_weight(&self) -> u32 {
        self.beta.weight()
    }
    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }
    pub fn beta(&self) -> &Partition {
        &self.beta
    }
    pub fn lam(&self) -> &Partition {
        &self.lam
    }
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// True iff every numeric parameter and every partition of the profile
    /// is divisible by `d`.
    pub fn is_divisible(&self, d: u32) -> bool {
        [
            self.n,
            self.m,
            self.c(),
            self.r(),
            self.s(),
            self.ext_weight(),
            self.int_weight(),
        ]
        .iter()
        .all(|&v| v % d == 0)
            && self.alpha.is_divisible(d)
            && self.beta.is_divisible(d)
            && self.lam.is_divisible(d)
            && self.mu.is_divisible(d)
    }
}

impl fmt::Display for CycleProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} c={} r={} s={} R={} S={} alpha={} beta={} lam={} mu={}",
            self.n,
            self.m,
            self.c(),
            self.r(),
            self.s(),
            self.ext_weight(),
            self.int_weight(),
            self.alpha,
            self.beta,
            self.lam,
            self.mu
        )
    }
}

/// The four exponents `X, Y, Z, W` entering the annular q-analogues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentQuadruple {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub w: u64,
}

impl ExponentQuadruple {
    pub fn total(&self) -> u64 {
        self.x + self.y + self.z + self.w
    }
}

/// The exponents of a profile:
/// `X = c(c-1)`, `Y = r(c+r) + s(c+s)`, `Z = r(n-c-R) + s(m-c-S)`,
/// `W = r(R-r) + s(S-s) + c(n-R-c) + c(m-S-c) - tau(alpha) - tau(beta) -
/// tau(lam) - tau(mu)`.
///
/// A negative `W` is reported as an error rather than used silently; no
/// valid profile is known to produce one.
pub fn exponents(p: &CycleProfile) -> Result<ExponentQuadruple, FormulaError> {
    let (n, m) = (i64::from(p.n), i64::from(p.m));
    let (c, r, s) = (i64::from(p.c()), i64::from(p.r()), i64::from(p.s()));
    let (rw, sw) = (i64::from(p.ext_weight()), i64::from(p.int_weight()));
    let x = c * (c - 1);
    let y = r * (c + r) + s * (c + s);
    let z = r * (n - c - rw) + s * (m - c - sw);
    let w = r * (rw - r) + s * (sw - s) + c * (n - rw - c) + c * (m - sw - c)
        - p.alpha.tau() as i64
        - p.beta.tau() as i64
        - p.lam.tau() as i64
        - p.mu.tau() as i64;
    if w < 0 {
        return Err(FormulaError::NegativeExponent {
            w,
            profile: p.to_string(),
        });
    }
    debug_assert!(x >= 0 && y >= 0 && z >= 0);
    Ok(ExponentQuadruple {
        x: x as u64,
        y: y as u64,
        z: z as u64,
        w: w as u64,
    })
}

// ---------------------------------------------------------------------------
// integer helpers

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub(crate) fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `binom` with the single boundary convention `C(-1, -1) = 1`, which makes
/// the `C(R-1, r-1)` factor contribute 1 for profiles with no exterior (or
/// interior) cycles.
fn binom_edge(n: i64, k: i64) -> BigInt {
    if n == -1 && k == -1 {
        BigInt::one()
    } else {
        binom(n, k)
    }
}

/// `[n choose k]_q` with the same `(-1, -1)` boundary convention.
pub(crate) fn q_binomial_edge(n: i64, k: i64) -> QPolynomial {
    if n == -1 && k == -1 {
        QPolynomial::one()
    } else {
        q_binomial(n, k)
    }
}

fn div_exact(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num::Integer::div_rem(&num, den);
    assert!(r.is_zero(), "inexact integer division: {num} / {den}");
    q
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

// ---------------------------------------------------------------------------
// disc-case formulas

/// `Cat(n) = C(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigInt {
    let n = i64::from(n);
    div_exact(binom(2 * n, n), &BigInt::from(n + 1))
}

/// `Nara(n, k) = C(n, k-1) C(n, k) / n`.
pub fn narayana(n: u32, k: u32) -> BigInt {
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let (n, k) = (i64::from(n), i64::from(k));
    div_exact(binom(n, k - 1) * binom(n, k), &BigInt::from(n))
}

/// `Kre(lam) = C(n, k-1) C(k; lam) / k` for `lam` a partition of `n` with
/// `k` parts.
pub fn kreweras(lam: &Partition) -> BigInt {
    if lam.is_empty() {
        return BigInt::one();
    }
    let n = i64::from(lam.weight());
    let k = lam.len() as i64;
    div_exact(
        binom(n, k - 1) * lam.rearrangement_count(),
        &BigInt::from(k),
    )
}

/// `Cat_q(n) = [2n choose n]_q / [n+1]_q`.
pub fn catalan_q(n: u32) -> QPolynomial {
    let n = i64::from(n);
    q_binomial(2 * n, n)
        .exact_div(&q_int(n as u64 + 1))
        .expect("[n+1]_q divides [2n choose n]_q")
}

/// `Nara_q(n, k) = q^{(n-k)(n+1-k)} [n choose k-1]_q [n choose k]_q / [n]_q`.
pub fn narayana_q(n: u32, k: u32) -> QPolynomial {
    if n == 0 {
        return if k == 0 {
            QPolynomial::one()
        } else {
            QPolynomial::zero()
        };
    }
    let num = &q_binomial(i64::from(n), i64::from(k) - 1) * &q_binomial(i64::from(n), i64::from(k));
    if num.is_zero() {
        return QPolynomial::zero();
    }
    let quot = num
        .exact_div(&q_int(u64::from(n)))
        .expect("[n]_q divides the q-Narayana numerator");
    let exp = u64::from(n - k) * u64::from(n + 1 - k);
    quot.shifted(exp as usize)
}

/// `Kre_q(lam) = q^{(n+1)(n-k) - tau(lam)} [n choose k-1]_q [k choose lam]_q
/// / [k]_q`.
pub fn kreweras_q(lam: &Partition) -> QPolynomial {
    if lam.is_empty() {
        return QPolynomial::one();
    }
    let n = lam.weight();
    let k = lam.len() as u32;
    let exp = u64::from(n + 1) * u64::from(n - k) - lam.tau();
    bessis_reiner_x(lam).shifted(exp as usize)
}

/// The disc sieving polynomial `[n choose k-1]_q [k choose lam]_q / [k]_q`
/// for noncrossing permutations (equivalently partitions) of type `lam`.
pub fn bessis_reiner_x(lam: &Partition) -> QPolynomial {
    if lam.is_empty() {
        return QPolynomial::one();
    }
    let n = i64::from(lam.weight());
    let k = lam.len() as i64;
    let num = &q_binomial(n, k - 1)
        * &q_multinomial_partition(k as u64, lam).expect("lam has k parts by construction");
    num.exact_div(&q_int(k as u64))
        .expect("[k]_q divides the Kreweras numerator")
}

// ---------------------------------------------------------------------------
// annular q-analogues

/// The annular q-Kreweras number of a full profile:
/// `q^{X+Y+Z+W} [nm]/([n][m]) * [2c]/2 * [n-R][m-S]/[c]^2 * [n:r][m:s]
/// [r:alpha][s:beta][c:lam][c:mu]` (all brackets q-analogues).
pub fn annular_kreweras_q(p: &CycleProfile) -> Result<QPolynomial, FormulaError> {
    let e = exponents(p)?.total();
    let (n, m, c) = (u64::from(p.n), u64::from(p.m), u64::from(p.c()));
    let (r, s) = (u64::from(p.r()), u64::from(p.s()));
    let (rw, sw) = (u64::from(p.ext_weight()), u64::from(p.int_weight()));
    let mut num = q_int(n * m);
    num = &num * &q_int(2 * c);
    num = &num * &q_int(n - rw);
    num = &num * &q_int(m - sw);
    num = &num * &q_binomial(n as i64, r as i64);
    num = &num * &q_binomial(m as i64, s as i64);
    num = &num * &q_multinomial_partition(r, p.alpha()).expect("alpha has r parts");
    num = &num * &q_multinomial_partition(s, p.beta()).expect("beta has s parts");
    num = &num * &q_multinomial_partition(c, p.lam()).expect("lam has c parts");
    num = &num * &q_multinomial_partition(c, p.mu()).expect("mu has c parts");
    let den = &(&q_int(n) * &q_int(m)) * &(&q_int(c) * &q_int(c));
    let quot = num
        .exact_div(&den)
        .expect("annular q-Kreweras denominator divides exactly");
    Ok(quot.scale(&half()).shifted(e as usize))
}

/// The rotation-sieving polynomial of a full profile from the invariance
/// theorem: `[(n-R)(m-S)]_q / [c]_q * [n:r][m:s][r:alpha][s:beta][c:lam]
/// [c:mu]`. Exhibits the same cyclic sieving as the annular q-Kreweras
/// number, without the `q`-power prefactor.
pub fn profile_csp_q(p: &CycleProfile) -> QPolynomial {
    let (n, m, c) = (u64::from(p.n), u64::from(p.m), u64::from(p.c()));
    let (r, s) = (u64::from(p.r()), u64::from(p.s()));
    let (rw, sw) = (u64::from(p.ext_weight()), u64::from(p.int_weight()));
    let mut num = q_int((n - rw) * (m - sw));
    num = &num * &q_binomial(n as i64, r as i64);
    num = &num * &q_binomial(m as i64, s as i64);
    num = &num * &q_multinomial_partition(r, p.alpha()).expect("alpha has r parts");
    num = &num * &q_multinomial_partition(s, p.beta()).expect("beta has s parts");
    num = &num * &q_multinomial_partition(c, p.lam()).expect("lam has c parts");
    num = &num * &q_multinomial_partition(c, p.mu()).expect("mu has c parts");
    num.exact_div(&q_int(c))
        .expect("[c]_q divides the profile sieving numerator")
}

/// The annular q-Narayana number of type 1, summing q-Kreweras numbers over
/// all profiles with the given `(c, r, s, R, S)`.
pub fn annular_narayana1_q(
    n: u32,
    m: u32,
    c: u32,
    r: u32,
    s: u32,
    ext_weight: u32,
    int_weight: u32,
) -> QPolynomial {
    let (nn, mm, cc) = (i64::from(n), i64::from(m), i64::from(c));
    let (rr, ss) = (i64::from(r), i64::from(s));
    let (rw, sw) = (i64::from(ext_weight), i64::from(int_weight));
    // cheap cached factors first: any zero kills the whole product
    let factors = [
        q_binomial(nn, rr),
        q_binomial(mm, ss),
        q_binomial_edge(rw - 1, rr - 1),
        q_binomial_edge(sw - 1, ss - 1),
        q_binomial(nn - rw, cc),
        q_binomial(mm - sw, cc),
    ];
    if c == 0 || factors.iter().any(QPolynomial::is_zero) {
        return QPolynomial::zero();
    }
    let mut num = q_int(n as u64 * m as u64);
    num = &num * &q_int(2 * c as u64);
    for f in &factors {
        num = &num * f;
    }
    let den = &q_int(n as u64) * &q_int(m as u64);
    let quot = num
        .exact_div(&den)
        .expect("[n]_q [m]_q divides the type-1 numerator");
    // X + Y + Z; nonzero value forces R >= r, n-R >= c (and the interior
    // analogues), so Z is nonnegative here.
    let x = cc * (cc - 1);
    let y = rr * (cc + rr) + ss * (cc + ss);
    let z = rr * (nn - cc - rw) + ss * (mm - cc - sw);
    debug_assert!(z >= 0);
    quot.scale(&half()).shifted((x + y + z) as usize)
}

/// The annular q-Narayana number of type 2 (by `(c, r, s)`).
pub fn annular_narayana2_q(n: u32, m: u32, c: u32, r: u32, s: u32) -> QPolynomial {
    let (nn, mm, cc) = (i64::from(n), i64::from(m), i64::from(c));
    let (rr, ss) = (i64::from(r), i64::from(s));
    let factors = [
        q_binomial(nn, rr),
        q_binomial(mm, ss),
        q_binomial(nn, rr + cc),
        q_binomial(mm, ss + cc),
    ];
    if c == 0 || factors.iter().any(QPolynomial::is_zero) {
        return QPolynomial::zero();
    }
    let mut num = q_int(n as u64 * m as u64);
    num = &num * &q_int(2 * c as u64);
    for f in &factors {
        num = &num * f;
    }
    let den = &q_int(n as u64) * &q_int(m as u64);
    let quot = num
        .exact_div(&den)
        .expect("[n]_q [m]_q divides the type-2 numerator");
    let xy = cc * (cc - 1) + rr * (cc + rr) + ss * (cc + ss);
    quot.scale(&half()).shifted(xy as usize)
}

/// The annular q-Narayana number of type 3 (by `c`).
pub fn annular_narayana3_q(n: u32, m: u32, c: u32) -> QPolynomial {
    let (nn, mm, cc) = (i64::from(n), i64::from(m), i64::from(c));
    let factors = [q_binomial(2 * nn, nn - cc), q_binomial(2 * mm, mm - cc)];
    if c == 0 || factors.iter().any(QPolynomial::is_zero) {
        return QPolynomial::zero();
    }
    let mut num = q_int(n as u64 * m as u64);
    num = &num * &q_int(2 * c as u64);
    for f in &factors {
        num = &num * f;
    }
    let den = &q_int(n as u64) * &q_int(m as u64);
    let quot = num
        .exact_div(&den)
        .expect("[n]_q [m]_q divides the type-3 numerator");
    quot.scale(&half()).shifted((cc * (cc - 1)) as usize)
}

/// The annular q-Catalan number
/// `Cat(n, m) = [nm]_q / (2 [m+n]_q) * [2n:n]_q [2m:m]_q`.
pub fn annular_catalan_q(n: u32, m: u32) -> QPolynomial {
    assert!(n >= 1 && m >= 1, "annulus circles must be nonempty");
    let (nn, mm) = (i64::from(n), i64::from(m));
    let mut num = q_int(n as u64 * m as u64);
    num = &num * &q_binomial(2 * nn, nn);
    num = &num * &q_binomial(2 * mm, mm);
    let quot = num
        .exact_div(&q_int(n as u64 + m as u64))
        .expect("[m+n]_q divides the annular q-Catalan numerator");
    quot.scale(&half())
}

// ---------------------------------------------------------------------------
// plain counts (q = 1)

/// The number of permutations with the given full profile fixed by an
/// annular rotation of order `d`: zero unless every parameter of the profile
/// is divisible by `d`, else the hatted product formula.
pub fn fixed_count_formula(p: &CycleProfile, d: u32) -> BigInt {
    assert!(d >= 1);
    if !p.is_divisible(d) {
        return BigInt::zero();
    }
    let hat = |v: u32| i64::from(v / d);
    let (n, m, c) = (hat(p.n), hat(p.m), hat(p.c()));
    let (r, s) = (hat(p.r()), hat(p.s()));
    let (rw, sw) = (hat(p.ext_weight()), hat(p.int_weight()));
    let alpha = p.alpha.divide(d).expect("checked divisible");
    let beta = p.beta.divide(d).expect("checked divisible");
    let lam = p.lam.divide(d).expect("checked divisible");
    let mu = p.mu.divide(d).expect("checked divisible");
    let num = BigInt::from(d)
        * BigInt::from((n - rw) * (m - sw))
        * binom(n, r)
        * binom(m, s)
        * alpha.rearrangement_count()
        * beta.rearrangement_count()
        * lam.rearrangement_count()
        * mu.rearrangement_count();
    div_exact(num, &BigInt::from(c))
}

/// `#anc` with the given full profile (the `d = 1` fixed-point count).
pub fn count_anc_profile(p: &CycleProfile) -> BigInt {
    fixed_count_formula(p, 1)
}

/// `#anc(n, m; c, r, s, R, S) = c C(n,r) C(m,s) C(R-1,r-1) C(S-1,s-1)
/// C(n-R,c) C(m-S,c)`.
pub fn count_anc_weighted(
    n: u32,
    m: u32,
    c: u32,
    r: u32,
    s: u32,
    ext_weight: u32,
    int_weight: u32,
) -> BigInt {
    let (nn, mm, cc) = (i64::from(n), i64::from(m), i64::from(c));
    let (rr, ss) = (i64::from(r), i64::from(s));
    let (rw, sw) = (i64::from(ext_weight), i64::from(int_weight));
    BigInt::from(cc)
        * binom(nn, rr)
        * binom(mm, ss)
        * binom_edge(rw - 1, rr - 1)
        * binom_edge(sw - 1, ss - 1)
        * binom(nn - rw, cc)
        * binom(mm - sw, cc)
}

/// `#anc(n, m; c, r, s) = c C(n,r) C(m,s) C(n,r+c) C(m,s+c)`.
pub fn count_anc_crs(n: u32, m: u32, c: u32, r: u32, s: u32) -> BigInt {
    let (nn, mm, cc) = (i64::from(n), i64::from(m), i64::from(c));
    let (rr, ss) = (i64::from(r), i64::from(s));
    BigInt::from(cc) * binom(nn, rr) * binom(mm, ss) * binom(nn, rr + cc) * binom(mm, ss + cc)
}

/// `#anc(n, m; c) = c C(2n, n-c) C(2m, m-c)`.
pub fn count_anc_c(n: u32, m: u32, c: u32) -> BigInt {
    let (nn, mm, cc) = (i64::from(n), i64::from(m), i64::from(c));
    BigInt::from(cc) * binom(2 * nn, nn - cc) * binom(2 * mm, mm - cc)
}

/// `#anc(n, m) = nm / (2(m+n)) * C(2n, n) C(2m, m)`.
pub fn count_anc(n: u32, m: u32) -> BigInt {
    assert!(n >= 1 && m >= 1);
    let (nn, mm) = (i64::from(n), i64::from(m));
    div_exact(
        BigInt::from(nn * mm) * binom(2 * nn, nn) * binom(2 * mm, mm),
        &BigInt::from(2 * (nn + mm)),
    )
}

/// Type-B count with full profile parameters (in B coordinates, i.e. the
/// ambient annulus is `(2n, 2m)` and every ambient parameter is doubled).
pub fn count_anc_b_profile(p: &CycleProfile) -> BigInt {
    BigInt::from(2) * count_anc_profile(p)
}

pub fn count_anc_b_weighted(
    n: u32,
    m: u32,
    c: u32,
    r: u32,
    s: u32,
    ext_weight: u32,
    int_weight: u32,
) -> BigInt {
    BigInt::from(2) * count_anc_weighted(n, m, c, r, s, ext_weight, int_weight)
}

pub fn count_anc_b_crs(n: u32, m: u32, c: u32, r: u32, s: u32) -> BigInt {
    BigInt::from(2) * count_anc_crs(n, m, c, r, s)
}

pub fn count_anc_b_c(n: u32, m: u32, c: u32) -> BigInt {
    BigInt::from(2) * count_anc_c(n, m, c)
}

/// `#anc_B(n, m) = nm / (m+n) * C(2n, n) C(2m, m)`.
pub fn count_anc_b(n: u32, m: u32) -> BigInt {
    assert!(n >= 1 && m >= 1);
    let (nn, mm) = (i64::from(n), i64::from(m));
    div_exact(
        BigInt::from(nn * mm) * binom(2 * nn, nn) * binom(2 * mm, mm),
        &BigInt::from(nn + mm),
    )
}

/// The number of annular noncrossing matchings with exactly `c` connected
/// pairs: `c C(n, (n-c)/2) C(m, (m-c)/2)`; requires `n = m = c (mod 2)`.
pub fn matching_count(n: u32, m: u32, c: u32) -> Result<BigInt, FormulaError> {
    if n % 2 != m % 2 || m % 2 != c % 2 {
        return Err(FormulaError::Parity(format!(
            "matching_count needs n = m = c (mod 2), got n={n} m={m} c={c}"
        )));
    }
    let (nn, mm, cc) = (i64::from(n), i64::from(m), i64::from(c));
    Ok(BigInt::from(cc) * binom(nn, (nn - cc) / 2) * binom(mm, (mm - cc) / 2))
}

/// The total number of connected annular noncrossing matchings:
/// `2 ceil(n/2) ceil(m/2) / (n+m) * C(n, ceil(n/2)) C(m, ceil(m/2))`;
/// requires `n = m (mod 2)`.
pub fn matching_total(n: u32, m: u32) -> Result<BigInt, FormulaError> {
    assert!(n >= 1 && m >= 1);
    if n % 2 != m % 2 {
        return Err(FormulaError::Parity(format!(
            "matching_total needs n = m (mod 2), got n={n} m={m}"
        )));
    }
    let (hn, hm) = (i64::from(n.div_ceil(2)), i64::from(m.div_ceil(2)));
    let (nn, mm) = (i64::from(n), i64::from(m));
    Ok(div_exact(
        BigInt::from(2 * hn * hm) * binom(nn, hn) * binom(mm, hm),
        &BigInt::from(nn + mm),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::par_set;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn profile(
        n: u32,
        m: u32,
        alpha: &[u32],
        beta: &[u32],
        lam: &[u32],
        mu: &[u32],
    ) -> CycleProfile {
        CycleProfile::new(n, m, pt(alpha), pt(beta), pt(lam), pt(mu)).unwrap()
    }

    #[test]
    fn disc_counts() {
        assert_eq!(catalan(3), BigInt::from(5));
        let cats = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in cats.iter().enumerate() {
            assert_eq!(catalan(n as u32), BigInt::from(c));
        }
        assert_eq!(narayana(3, 2), BigInt::from(3));
        assert_eq!(kreweras(&pt(&[2, 1, 1])), BigInt::from(6));
        assert_eq!(kreweras(&Partition::empty()), BigInt::one());
        // Kreweras numbers refine Narayana numbers
        for n in 1..=8u32 {
            for k in 1..=n {
                let total: BigInt = par_set(n, k).iter().map(kreweras).sum();
                assert_eq!(total, narayana(n, k));
            }
        }
    }

    #[test]
    fn disc_q_polynomials() {
        assert_eq!(catalan_q(2), QPolynomial::from_integers(&[1, 0, 1]));
        for n in 1..=7 {
            assert_eq!(narayana_q(n, n), QPolynomial::one());
            assert_eq!(kreweras_q(&pt(&vec![1; n as usize])), QPolynomial::one());
        }
        // Kre_q((2)) = q^2: single noncrossing 2-cycle on [2]
        assert_eq!(kreweras_q(&pt(&[2])), QPolynomial::monomial(2));
        assert_eq!(
            bessis_reiner_x(&pt(&[2, 1])),
            QPolynomial::from_integers(&[1, 1, 1])
        );
        assert_eq!(
            bessis_reiner_x(&pt(&[2, 1, 1])).at_one(),
            BigRational::from_integer(6.into())
        );
    }

    #[test]
    fn reiner_sommers_examples() {
        // sum of q-Kreweras numbers over Par(3,2) is the q-Narayana number
        let mut total = QPolynomial::zero();
        for lam in par_set(3, 2) {
            total += &kreweras_q(&lam);
        }
        assert_eq!(total, narayana_q(3, 2));

        let mut total = QPolynomial::zero();
        for k in 0..=4 {
            total += &narayana_q(4, k);
        }
        assert_eq!(total, catalan_q(4));
    }

    #[test]
    fn exponent_examples() {
        let p = profile(1, 1, &[], &[], &[1], &[1]);
        assert_eq!(
            exponents(&p).unwrap(),
            ExponentQuadruple {
                x: 0,
                y: 0,
                z: 0,
                w: 0
            }
        );

        let p = profile(2, 2, &[1], &[1], &[1], &[1]);
        assert_eq!(
            exponents(&p).unwrap(),
            ExponentQuadruple {
                x: 0,
                y: 4,
                z: 0,
                w: 0
            }
        );

        let p = profile(2, 2, &[], &[], &[1, 1], &[1, 1]);
        assert_eq!(
            exponents(&p).unwrap(),
            ExponentQuadruple {
                x: 2,
                y: 0,
                z: 0,
                w: 0
            }
        );
    }

    #[test]
    fn annular_kreweras_examples() {
        // the unique profile of anc(1,1) gives (1+q)/2 = Cat(1,1)
        let p = profile(1, 1, &[], &[], &[1], &[1]);
        let kre = annular_kreweras_q(&p).unwrap();
        assert_eq!(kre, annular_catalan_q(1, 1));
        assert_eq!(kre.to_string(), "(1 + q)/2");

        // q = 1 specialization equals the plain profile count
        let p = profile(2, 2, &[], &[], &[1, 1], &[1, 1]);
        let kre = annular_kreweras_q(&p).unwrap();
        assert_eq!(kre.at_one(), BigRational::from_integer(2.into()));
        assert_eq!(count_anc_profile(&p), BigInt::from(2));
    }

    #[test]
    fn kreweras_specializes_to_count_for_small_profiles() {
        for n in 1..=4u32 {
            for m in 1..=4u32 {
                for rw in 0..n {
                    for sw in 0..m {
                        for r in 0..=rw {
                            for s in 0..=sw {
                                for c in 1..=(n - rw).min(m - sw) {
                                    for alpha in par_set(rw, r) {
                                        for beta in par_set(sw, s) {
                                            for lam in par_set(n - rw, c) {
                                                for mu in par_set(m - sw, c) {
                                                    let p = CycleProfile::new(
                                                        n,
                                                        m,
                                                        alpha.clone(),
                                                        beta.clone(),
                                                        lam.clone(),
                                                        mu.clone(),
                                                    )
                                                    .unwrap();
                                                    let kre = annular_kreweras_q(&p).unwrap();
                                                    assert_eq!(
                                                        kre.at_one(),
                                                        BigRational::from_integer(
                                                            count_anc_profile(&p)
                                                        ),
                                                        "profile {p}"
                                                    );
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn narayana1_example() {
        // Nara_1(2,2;1,1,1,1,1) = q^4 (1+q^2)(1+q)^2 / 2
        let got = annular_narayana1_q(2, 2, 1, 1, 1, 1, 1);
        let expected = QPolynomial::from_coeffs(
            [0, 0, 0, 0, 1, 2, 2, 2, 1]
                .iter()
                .map(|&c| BigRational::new(BigInt::from(c), BigInt::from(2)))
                .collect(),
        );
        assert_eq!(got, expected);
        assert_eq!(got.at_one(), BigRational::from_integer(4.into()));
        assert_eq!(count_anc_weighted(2, 2, 1, 1, 1, 1, 1), BigInt::from(4));
    }

    #[test]
    fn narayana3_and_catalan() {
        for c in 3..6 {
            assert_eq!(annular_narayana3_q(2, 2, c), QPolynomial::zero());
        }
        let mut total = QPolynomial::zero();
        for c in 0..=2 {
            total += &annular_narayana3_q(2, 2, c);
        }
        assert_eq!(total, annular_catalan_q(2, 2));
    }

    #[test]
    fn annular_catalan_values() {
        assert_eq!(annular_catalan_q(1, 1).to_string(), "(1 + q)/2");
        // rational coefficients, yet the value at q = -1 is the integer 0
        let v = crate::qcalc::eval_at_primitive_root(&annular_catalan_q(1, 1), 2, 1).unwrap();
        assert_eq!(v.as_integer(), Some(BigInt::zero()));
        assert_eq!(
            annular_catalan_q(2, 2).at_one(),
            BigRational::from_integer(18.into())
        );
        assert_eq!(
            annular_catalan_q(2, 1).at_one(),
            BigRational::from_integer(4.into())
        );
    }

    #[test]
    fn fixed_count_examples() {
        // d = 1: the plain count
        let p = profile(2, 2, &[], &[], &[1, 1], &[1, 1]);
        assert_eq!(fixed_count_formula(&p, 1), count_anc_profile(&p));
        // d = 2 on the matching profile of (2,2): the two fixed matchings
        assert_eq!(fixed_count_formula(&p, 2), BigInt::from(2));
        // odd c is never divisible by 2
        let p = profile(2, 2, &[1], &[1], &[1], &[1]);
        assert_eq!(fixed_count_formula(&p, 2), BigInt::zero());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_anc(1, 1), BigInt::one());
        assert_eq!(count_anc(2, 1), BigInt::from(4));
        assert_eq!(count_anc(2, 2), BigInt::from(18));
        assert_eq!(count_anc_c(2, 2, 1), BigInt::from(16));
        assert_eq!(count_anc_c(2, 2, 2), BigInt::from(2));
        assert_eq!(count_anc_b(1, 1), BigInt::from(2));
        assert_eq!(count_anc_b_c(1, 1, 1), BigInt::from(2));
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_count(2, 2, 2).unwrap(), BigInt::from(2));
        assert_eq!(matching_count(4, 2, 2).unwrap(), BigInt::from(8));
        assert_eq!(matching_total(2, 2).unwrap(), BigInt::from(2));
        assert_eq!(
            matching_total(4, 2).unwrap(),
            matching_count(4, 2, 2).unwrap() + matching_count(4, 2, 4).unwrap()
        );
        assert!(matching_count(2, 2, 1).is_err());
        assert!(matching_total(2, 1).is_err());
    }

    #[test]
    fn profile_validation() {
        assert!(CycleProfile::new(2, 2, pt(&[1]), pt(&[]), pt(&[1]), pt(&[1, 1])).is_err());
        assert!(CycleProfile::new(2, 2, pt(&[2]), pt(&[2]), pt(&[]), pt(&[])).is_err());
        assert!(CycleProfile::new(3, 2, pt(&[1]), pt(&[]), pt(&[1, 1]), pt(&[1, 1])).is_ok());
    }

    #[test]
    fn profile_csp_poly_at_one_is_count() {
        let p = profile(9, 6, &[2], &[1], &[4, 3], &[3, 2]);
        assert_eq!(
            profile_csp_q(&p).at_one(),
            BigRational::from_integer(count_anc_profile(&p))
        );
    }
}
