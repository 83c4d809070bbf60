//! Executable theorem suites.
//!
//! Each suite sweeps a parameter grid exhaustively (never by sampling),
//! compares exact values — polynomial identities coefficientwise, counts as
//! big integers, sieving evaluations in cyclotomic fields — and produces a
//! deterministic machine-readable report. A failing check carries a witness
//! with the smallest parameters in sweep order.
//!
//! Suites:
//!
//! - [`verify_csp_annular`]: root-of-unity evaluations of all six sieving
//!   polynomial families against rotation fixed-point counts;
//! - [`verify_unequal_orders`]: rotation pairs of unequal component orders
//!   fix nothing;
//! - [`verify_fixed_counts`]: the closed-form rotation-invariant count
//!   against enumeration for every order and profile;
//! - [`verify_counts`], [`verify_type_b`], [`verify_matchings`]:
//!   enumeration equals the closed forms at every granularity;
//! - [`verify_specializations`]: the q-families specialize at `q = 1` to
//!   the count formulas, with nonnegative coefficients;
//! - [`verify_sum_chain`]: the Kreweras -> Narayana(1,2,3) -> Catalan
//!   summation chain as exact polynomial identities;
//! - [`verify_lemmas`]: the three summation lemmas and q-Vandermonde;
//! - [`verify_polynomiality`]: the two quotient expressions land in `N[q]`;
//! - [`verify_disc_identities`]: disc counts, the q-identities refining
//!   them, and the disc sieving statement;
//! - [`verify_bijection`]: injectivity and cardinality of the
//!   invariance-proof encoding.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Display;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::annulus::{
    all_rotation_pairs, bijection_codomain_size, bijection_phi, disc, enumerate_anc,
    enumerate_anc_b, enumerate_matchings, rigid_rotations_of_order, AnnularPermutation,
    ProfileFilter, RotationPair,
};
use crate::formulas::{
    annular_catalan_q, annular_kreweras_q, annular_narayana1_q, annular_narayana2_q,
    annular_narayana3_q, catalan, catalan_q, count_anc, count_anc_b, count_anc_b_c,
    count_anc_b_crs, count_anc_b_profile, count_anc_b_weighted, count_anc_c, count_anc_crs,
    count_anc_profile, count_anc_weighted, fixed_count_formula, kreweras, kreweras_q,
    matching_count, matching_total, narayana, narayana_q, profile_csp_q, CycleProfile,
};
use crate::partitions::{par_set, Partition};
use crate::qcalc::{
    eval_at_primitive_root, q_binomial, q_int, q_multinomial_partition, QPolynomial,
};

/// The first failing comparison of a check: parameters, expected, actual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub params: String,
    pub expected: String,
    pub actual: String,
}

/// One grouped check: a batch of comparisons sharing a parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    pub attempted: u64,
    pub passed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckRecord {
    pub fn ok(&self) -> bool {
        self.attempted == self.passed
    }
}

/// A full suite run: deterministic records plus wall time. The serialized
/// forms never include the wall time, so reports are byte-identical across
/// runs.
#[derive(Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub ranges: String,
    pub records: Vec<CheckRecord>,
    pub wall: Duration,
}

impl VerificationReport {
    pub fn attempted(&self) -> u64 {
        self.records.iter().map(|r| r.attempted).sum()
    }

    pub fn passed(&self) -> u64 {
        self.records.iter().map(|r| r.passed).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(CheckRecord::ok)
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.records.iter().find_map(|r| r.witness.as_ref())
    }

    /// The trailing summary object (wall time excluded for determinism).
    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "ranges": self.ranges,
            "checks": self.records.len(),
            "attempted": self.attempted(),
            "passed": self.passed(),
            "ok": self.all_passed(),
        })
    }

    /// JSON lines: one line per check, then the summary object.
    pub fn write_jsonl<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for record in &self.records {
            serde_json::to_writer(&mut *out, record)?;
            writeln!(out)?;
        }
        serde_json::to_writer(&mut *out, &self.summary())?;
        writeln!(out)
    }

    /// One human-readable line, for stderr alongside the JSON report.
    pub fn human_summary(&self) -> String {
        format!(
            "{}: {}/{} checks passed ({} comparisons) in {:.2?}",
            self.suite,
            self.records.iter().filter(|r| r.ok()).count(),
            self.records.len(),
            self.attempted(),
            self.wall
        )
    }
}

/// Accumulates comparisons for one `CheckRecord`.
struct Checker {
    suite: &'static str,
    check: String,
    attempted: u64,
    passed: u64,
    witness: Option<Witness>,
}

impl Checker {
    fn new(suite: &'static str, check: impl Into<String>) -> Checker {
        Checker {
            suite,
            check: check.into(),
            attempted: 0,
            passed: 0,
            witness: None,
        }
    }

    fn eq<T: PartialEq + Display>(
        &mut self,
        expected: &T,
        actual: &T,
        params: impl FnOnce() -> String,
    ) {
        self.attempted += 1;
        if expected == actual {
            self.passed += 1;
        } else if self.witness.is_none() {
            self.witness = Some(Witness {
                params: params(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn expect(
        &mut self,
        ok: bool,
        expected: &str,
        actual: impl FnOnce() -> String,
        params: impl FnOnce() -> String,
    ) {
        self.attempted += 1;
        if ok {
            self.passed += 1;
        } else if self.witness.is_none() {
            self.witness = Some(Witness {
                params: params(),
                expected: expected.to_string(),
                actual: actual(),
            });
        }
    }

    fn finish(self) -> CheckRecord {
        CheckRecord {
            suite: self.suite.to_string(),
            check: self.check,
            attempted: self.attempted,
            passed: self.passed,
            witness: self.witness,
        }
    }
}

fn report(
    suite: &str,
    ranges: String,
    records: Vec<CheckRecord>,
    started: Instant,
) -> VerificationReport {
    VerificationReport {
        suite: suite.to_string(),
        ranges,
        records,
        wall: started.elapsed(),
    }
}

/// All `(n, m)` with `n, m >= 1` and `n + m <= max_total`, smallest first.
fn annulus_sizes(max_total: u32) -> Vec<(u32, u32)> {
    let mut sizes = Vec::new();
    for total in 2..=max_total {
        for n in 1..total {
            sizes.push((n, total - n));
        }
    }
    sizes
}

fn divisors_of_gcd(n: u32, m: u32) -> Vec<u32> {
    let g = num::integer::gcd(n, m);
    (1..=g).filter(|d| g.is_multiple_of(*d)).collect()
}

fn coprime_residues(d: u64) -> Vec<i64> {
    (1..=d)
        .filter(|&j| num::integer::gcd(j, d) == 1)
        .map(|j| j as i64)
        .collect()
}

fn enumerate_profiled(n: u32, m: u32) -> (Vec<AnnularPermutation>, Vec<CycleProfile>) {
    let perms = enumerate_anc(n, m, &ProfileFilter::any()).expect("size within bound");
    let profiles = perms
        .par_iter()
        .map(|p| p.profile().expect("enumerated objects are connected"))
        .collect();
    (perms, profiles)
}

// ---------------------------------------------------------------------------
// CSP

/// The six sieving families checked per profile level.
const CSP_LEVELS: [&str; 6] = [
    "kreweras",
    "profile-sieve",
    "narayana1",
    "narayana2",
    "narayana3",
    "catalan",
];

/// Verifies the cyclic sieving statements: for every annulus size, every
/// order `d` dividing both circles, every rigid rotation pair of that order,
/// and every primitive `d`-th root, the exact evaluation of each level's
/// polynomial equals the number of fixed permutations at that level, and is
/// in particular always an integer. The fixed counts are also asserted to
/// agree across the rigid pairs of one order.
pub fn verify_csp_annular(max_total: u32) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();
    for (n, m) in annulus_sizes(max_total) {
        let (perms, profiles) = enumerate_profiled(n, m);
        for d in divisors_of_gcd(n, m) {
            let pairs = rigid_rotations_of_order(n, m, d);
            let fixed_per_pair: Vec<Vec<bool>> = pairs
                .par_iter()
                .map(|rot| perms.iter().map(|p| &rot.apply(p) == p).collect())
                .collect();
            let js = coprime_residues(u64::from(d));
            for level in CSP_LEVELS {
                records.push(csp_level_check(
                    n,
                    m,
                    d,
                    level,
                    &profiles,
                    &pairs,
                    &fixed_per_pair,
                    &js,
                ));
            }
        }
    }
    report(
        "csp",
        format!(
            "n+m <= {max_total}, all d | gcd(n,m), all rigid rotation pairs and primitive roots"
        ),
        records,
        started,
    )
}

/// Group profiles into the keys of one sieving level.
fn level_key(level: &str, p: &CycleProfile) -> String {
    match level {
        "kreweras" | "profile-sieve" => format!(
            "c={} r={} s={} R={} S={} alpha={} beta={} lam={} mu={}",
            p.c(),
            p.r(),
            p.s(),
            p.ext_weight(),
            p.int_weight(),
            p.alpha(),
            p.beta(),
            p.lam(),
            p.mu()
        ),
        "narayana1" => format!(
            "c={} r={} s={} R={} S={}",
            p.c(),
            p.r(),
            p.s(),
            p.ext_weight(),
            p.int_weight()
        ),
        "narayana2" => format!("c={} r={} s={}", p.c(), p.r(), p.s()),
        "narayana3" => format!("c={}", p.c()),
        "catalan" => String::new(),
        other => unreachable!("unknown level {other}"),
    }
}

fn level_poly(level: &str, n: u32, m: u32, p: &CycleProfile) -> Result<QPolynomial, String> {
    match level {
        "kreweras" => annular_kreweras_q(p).map_err(|e| e.to_string()),
        "profile-sieve" => Ok(profile_csp_q(p)),
        "narayana1" => Ok(annular_narayana1_q(
            n,
            m,
            p.c(),
            p.r(),
            p.s(),
            p.ext_weight(),
            p.int_weight(),
        )),
        "narayana2" => Ok(annular_narayana2_q(n, m, p.c(), p.r(), p.s())),
        "narayana3" => Ok(annular_narayana3_q(n, m, p.c())),
        "catalan" => Ok(annular_catalan_q(n, m)),
        other => unreachable!("unknown level {other}"),
    }
}

#[allow(clippy::too_many_arguments)]
fn csp_level_check(
    n: u32,
    m: u32,
    d: u32,
    level: &'static str,
    profiles: &[CycleProfile],
    pairs: &[RotationPair],
    fixed_per_pair: &[Vec<bool>],
    js: &[i64],
) -> CheckRecord {
    let mut checker = Checker::new("csp", format!("n={n} m={m} d={d} level={level}"));

    // one representative profile and the fixed counts per level key
    let mut reps: BTreeMap<String, &CycleProfile> = BTreeMap::new();
    for p in profiles {
        reps.entry(level_key(level, p)).or_insert(p);
    }
    let mut counts: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for key in reps.keys() {
        counts.insert(key.clone(), vec![0; pairs.len()]);
    }
    for (pair_idx, fixed) in fixed_per_pair.iter().enumerate() {
        for (p, &is_fixed) in profiles.iter().zip(fixed) {
            if is_fixed {
                counts.get_mut(&level_key(level, p)).unwrap()[pair_idx] += 1;
            }
        }
    }

    // polynomial evaluations in parallel over a sorted key list, so the
    // comparison order (and any witness) is deterministic
    let reps: Vec<(String, &CycleProfile)> = reps.into_iter().collect();
    let evaluated: Vec<(String, Result<QPolynomial, String>)> = reps
        .par_iter()
        .map(|(key, p)| (key.clone(), level_poly(level, n, m, p)))
        .collect();

    for ((key, poly), (_, per_pair)) in evaluated.iter().zip(counts.iter()) {
        // the fixed count must not depend on which order-d pair acts
        let count = per_pair[0];
        for (pair_idx, &c) in per_pair.iter().enumerate() {
            let pair = &pairs[pair_idx];
            checker.eq(&count, &c, || {
                format!(
                    "{key}: pair (ext_shift={}, int_shift={}) disagrees with first pair",
                    pair.ext_shift(),
                    pair.int_shift()
                )
            });
        }
        let poly = match poly {
            Ok(p) => p,
            Err(e) => {
                checker.expect(false, "a polynomial", || e.clone(), || key.clone());
                continue;
            }
        };
        for &j in js {
            match eval_at_primitive_root(poly, u64::from(d), j) {
                Ok(value) => match value.as_integer() {
                    Some(int) => checker.eq(&BigInt::from(count), &int, || {
                        format!("{key}: evaluation at root exponent j={j}")
                    }),
                    None => checker.expect(
                        false,
                        "an integer evaluation",
                        || format!("{value}"),
                        || format!("{key}: j={j}"),
                    ),
                },
                Err(e) => checker.expect(
                    false,
                    "a successful evaluation",
                    || e.to_string(),
                    || format!("{key}: j={j}"),
                ),
            }
        }
    }
    checker.finish()
}

/// Verifies that bicyclic pairs with unequal component orders have no fixed
/// points at all.
pub fn verify_unequal_orders(max_total: u32) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();
    for (n, m) in annulus_sizes(max_total) {
        let perms = enumerate_anc(n, m, &ProfileFilter::any()).expect("size within bound");
        let mut checker = Checker::new("unequal-orders", format!("n={n} m={m}"));
        for pair in all_rotation_pairs(n, m) {
            if pair.is_annular() {
                continue;
            }
            let fixed = perms.par_iter().filter(|&p| &pair.apply(p) == p).count();
            checker.eq(&0usize, &fixed, || {
                format!(
                    "ext_shift={} (order {}), int_shift={} (order {})",
                    pair.ext_shift(),
                    pair.ext_order(),
                    pair.int_shift(),
                    pair.int_order()
                )
            });
        }
        records.push(checker.finish());
    }
    report(
        "unequal-orders",
        format!("n+m <= {max_total}, all unequal-order pairs"),
        records,
        started,
    )
}

/// Verifies the rotation-invariant counting formula against enumeration for
/// every order `d`, every rigid rotation pair of that order, and every
/// occurring profile, including the zero cases forced by divisibility
/// failures.
pub fn verify_fixed_counts(max_total: u32) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();
    for (n, m) in annulus_sizes(max_total) {
        let (perms, profiles) = enumerate_profiled(n, m);
        let mut domain: BTreeMap<&CycleProfile, Vec<usize>> = BTreeMap::new();
        for (idx, p) in profiles.iter().enumerate() {
            domain.entry(p).or_default().push(idx);
        }
        for d in divisors_of_gcd(n, m) {
            let mut checker = Checker::new("fixed-counts", format!("n={n} m={m} d={d}"));
            for pair in rigid_rotations_of_order(n, m, d) {
                let fixed: Vec<bool> = perms.par_iter().map(|p| &pair.apply(p) == p).collect();
                for (profile, members) in &domain {
                    let enumerated = members.iter().filter(|&&idx| fixed[idx]).count();
                    let formula = fixed_count_formula(profile, d);
                    checker.eq(&formula, &BigInt::from(enumerated), || {
                        format!(
                            "{profile}, pair (ext_shift={}, int_shift={})",
                            pair.ext_shift(),
                            pair.int_shift()
                        )
                    });
                }
            }
            records.push(checker.finish());
        }
    }
    report(
        "fixed-counts",
        format!("n+m <= {max_total}, all d | gcd(n,m), all rigid pairs, all profiles"),
        records,
        started,
    )
}

// ---------------------------------------------------------------------------
// counts

/// Verifies enumeration against the closed-form counts at every granularity
/// level of the type-A corollary.
pub fn verify_counts(max_total: u32) -> VerificationReport {
    let started = Instant::now();
    let records: Vec<Vec<CheckRecord>> = annulus_sizes(max_total)
        .into_par_iter()
        .map(|(n, m)| count_checks(n, m))
        .collect();
    report(
        "counts",
        format!("n+m <= {max_total}, all granularities"),
        records.concat(),
        started,
    )
}

fn count_checks(n: u32, m: u32) -> Vec<CheckRecord> {
    let (perms, profiles) = enumerate_profiled(n, m);
    let mut records = Vec::new();

    let mut checker = Checker::new("counts", format!("n={n} m={m} total"));
    checker.eq(&count_anc(n, m), &BigInt::from(perms.len()), String::new);
    records.push(checker.finish());

    // orientation soundness: every accepted cycle passes the clockwise test
    let mut checker = Checker::new("counts", format!("n={n} m={m} orientation"));
    for p in &perms {
        let bad = p
            .cycles()
            .into_iter()
            .find(|cycle| !crate::annulus::is_clockwise_cycle(cycle, n, m));
        checker.expect(
            bad.is_none(),
            "all cycles oriented clockwise",
            || format!("{bad:?}"),
            || p.to_string(),
        );
    }
    records.push(checker.finish());

    let mut by_c: BTreeMap<u32, u64> = BTreeMap::new();
    let mut by_crs: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
    let mut by_weight: BTreeMap<(u32, u32, u32, u32, u32), u64> = BTreeMap::new();
    let mut by_profile: BTreeMap<&CycleProfile, u64> = BTreeMap::new();
    for p in &profiles {
        *by_c.entry(p.c()).or_default() += 1;
        *by_crs.entry((p.c(), p.r(), p.s())).or_default() += 1;
        *by_weight
            .entry((p.c(), p.r(), p.s(), p.ext_weight(), p.int_weight()))
            .or_default() += 1;
        *by_profile.entry(p).or_default() += 1;
    }

    let mut checker = Checker::new("counts", format!("n={n} m={m} by c"));
    for c in 1..=n.min(m) {
        let enumerated = by_c.get(&c).copied().unwrap_or(0);
        checker.eq(&count_anc_c(n, m, c), &BigInt::from(enumerated), || {
            format!("c={c}")
        });
    }
    records.push(checker.finish());

    let mut checker = Checker::new("counts", format!("n={n} m={m} by (c,r,s)"));
    for c in 1..=n.min(m) {
        for r in 0..=n {
            for s in 0..=m {
                let enumerated = by_crs.get(&(c, r, s)).copied().unwrap_or(0);
                checker.eq(
                    &count_anc_crs(n, m, c, r, s),
                    &BigInt::from(enumerated),
                    || format!("c={c} r={r} s={s}"),
                );
            }
        }
    }
    records.push(checker.finish());

    let mut checker = Checker::new("counts", format!("n={n} m={m} by (c,r,s,R,S)"));
    for c in 1..=n.min(m) {
        for rw in 0..=n.saturating_sub(c) {
            for r in 0..=rw {
                for sw in 0..=m.saturating_sub(c) {
                    for s in 0..=sw {
                        let enumerated = by_weight.get(&(c, r, s, rw, sw)).copied().unwrap_or(0);
                        checker.eq(
                            &count_anc_weighted(n, m, c, r, s, rw, sw),
                            &BigInt::from(enumerated),
                            || format!("c={c} r={r} s={s} R={rw} S={sw}"),
                        );
                    }
                }
            }
        }
    }
    records.push(checker.finish());

    // every consistent full profile, occurring or not
    let mut checker = Checker::new("counts", format!("n={n} m={m} by profile"));
    for c in 1..=n.min(m) {
        for rw in 0..=n - c {
            for sw in 0..=m - c {
                for r in 0..=rw {
                    for s in 0..=sw {
                        for alpha in par_set(rw, r) {
                            for beta in par_set(sw, s) {
                                for lam in par_set(n - rw, c) {
                                    for mu in par_set(m - sw, c) {
                                        let profile = CycleProfile::new(
                                            n,
                                            m,
                                            alpha.clone(),
                                            beta.clone(),
                                            lam.clone(),
                                            mu.clone(),
                                        )
                                        .expect("consistent by construction");
                                        let enumerated =
                                            by_profile.get(&profile).copied().unwrap_or(0);
                                        checker.eq(
                                            &count_anc_profile(&profile),
                                            &BigInt::from(enumerated),
                                            || profile.to_string(),
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
    // conversely, every enumerated profile must appear in the formula sweep
    for p in by_profile.keys() {
        let consistent = p.c() >= 1 && p.ext_weight() <= n - p.c() && p.int_weight() <= m - p.c();
        checker.expect(
            consistent,
            "profile inside the formula domain",
            || p.to_string(),
            || p.to_string(),
        );
    }
    records.push(checker.finish());
    records
}

/// Verifies the five type-B counting formulas against enumeration of
/// rotation-invariant elements in the doubled annulus.
pub fn verify_type_b(max_ambient_total: u32) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();
    for (n, m) in annulus_sizes(max_ambient_total / 2) {
        let b_perms = enumerate_anc_b(n, m, &ProfileFilter::any()).expect("within bound");
        let mut checker = Checker::new(
            "type-b",
            format!("n={n} m={m} (ambient {},{})", 2 * n, 2 * m),
        );

        // ambient profiles must be divisible by 2; group in B coordinates
        let mut by_c: BTreeMap<u32, u64> = BTreeMap::new();
        let mut by_crs: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
        let mut by_weight: BTreeMap<(u32, u32, u32, u32, u32), u64> = BTreeMap::new();
        let mut by_profile: BTreeMap<CycleProfile, u64> = BTreeMap::new();
        for p in &b_perms {
            let ambient = p.profile().expect("enumerated objects are connected");
            checker.expect(
                ambient.is_divisible(2),
                "ambient profile divisible by 2",
                || ambient.to_string(),
                || format!("{p}"),
            );
            let (c, r, s) = (ambient.c() / 2, ambient.r() / 2, ambient.s() / 2);
            let (rw, sw) = (ambient.ext_weight() / 2, ambient.int_weight() / 2);
            *by_c.entry(c).or_default() += 1;
            *by_crs.entry((c, r, s)).or_default() += 1;
            *by_weight.entry((c, r, s, rw, sw)).or_default() += 1;
            let b_profile = CycleProfile::new(
                n,
                m,
                ambient.alpha().divide(2).expect("divisible"),
                ambient.beta().divide(2).expect("divisible"),
                ambient.lam().divide(2).expect("divisible"),
                ambient.mu().divide(2).expect("divisible"),
            )
            .expect("halved profile stays consistent");
            *by_profile.entry(b_profile).or_default() += 1;
        }

        checker.eq(&count_anc_b(n, m), &BigInt::from(b_perms.len()), || {
            "total".to_string()
        });
        for c in 1..=n.min(m) {
            let enumerated = by_c.get(&c).copied().unwrap_or(0);
            checker.eq(&count_anc_b_c(n, m, c), &BigInt::from(enumerated), || {
                format!("c={c}")
            });
        }
        for c in 1..=n.min(m) {
            for r in 0..=n {
                for s in 0..=m {
                    let enumerated = by_crs.get(&(c, r, s)).copied().unwrap_or(0);
                    checker.eq(
                        &count_anc_b_crs(n, m, c, r, s),
                        &BigInt::from(enumerated),
                        || format!("c={c} r={r} s={s}"),
                    );
                }
            }
        }
        for c in 1..=n.min(m) {
            for rw in 0..=n - c {
                for sw in 0..=m - c {
                    for r in 0..=rw {
                        for s in 0..=sw {
                            let enumerated =
                                by_weight.get(&(c, r, s, rw, sw)).copied().unwrap_or(0);
                            checker.eq(
                                &count_anc_b_weighted(n, m, c, r, s, rw, sw),
                                &BigInt::from(enumerated),
                                || format!("c={c} r={r} s={s} R={rw} S={sw}"),
                            );
                        }
                    }
                }
            }
        }
        for c in 1..=n.min(m) {
            for rw in 0..=n - c {
                for sw in 0..=m - c {
                    for r in 0..=rw {
                        for s in 0..=sw {
                            for alpha in par_set(rw, r) {
                                for beta in par_set(sw, s) {
                                    for lam in par_set(n - rw, c) {
                                        for mu in par_set(m - sw, c) {
                                            let profile = CycleProfile::new(
                                                n,
                                                m,
                                                alpha.clone(),
                                                beta.clone(),
                                                lam.clone(),
                                                mu.clone(),
                                            )
                                            .expect("consistent");
                                            let enumerated =
                                                by_profile.get(&profile).copied().unwrap_or(0);
                                            checker.eq(
                                                &count_anc_b_profile(&profile),
                                                &BigInt::from(enumerated),
                                                || profile.to_string(),
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
        records.push(checker.finish());
    }
    report(
        "type-b",
        format!("ambient 2n+2m <= {max_ambient_total}, all granularities"),
        records,
        started,
    )
}

/// Verifies the two matching theorems against direct matching enumeration.
pub fn verify_matchings(max_total: u32) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();
    for (n, m) in annulus_sizes(max_total) {
        let matchings = enumerate_matchings(n, m).expect("within bound");
        let mut checker = Checker::new("matchings", format!("n={n} m={m}"));
        if n % 2 != m % 2 {
            checker.eq(&0usize, &matchings.len(), || "parity mismatch".to_string());
            records.push(checker.finish());
            continue;
        }
        let mut by_c: BTreeMap<u32, u64> = BTreeMap::new();
        for p in &matchings {
            let profile = p.profile().expect("connected");
            *by_c.entry(profile.c()).or_default() += 1;
        }
        checker.eq(
            &matching_total(n, m).expect("parity checked"),
            &BigInt::from(matchings.len()),
            || "total".to_string(),
        );
        for c in 1..=n.min(m) {
            let enumerated = BigInt::from(by_c.get(&c).copied().unwrap_or(0));
            if c % 2 == n % 2 {
                checker.eq(
                    &matching_count(n, m, c).expect("parity checked"),
                    &enumerated,
                    || format!("c={c}"),
                );
            } else {
                checker.eq(&BigInt::zero(), &enumerated, || format!("c={c} (parity)"));
            }
        }
        records.push(checker.finish());
    }
    report("matchings", format!("n+m <= {max_total}"), records, started)
}

/// Verifies that every annular q-polynomial family specializes at `q = 1`
/// to its count formula and has nonnegative coefficients, over every
/// consistent parameter tuple. This also drives every exact division inside
/// every formula across the whole grid (a remainder would fault the sweep),
/// and the nonnegativity makes the sieving sweep's domain complete: a family
/// member for a zero-count tuple is forced to be identically zero.
pub fn verify_specializations(max_total: u32) -> VerificationReport {
    let started = Instant::now();
    let records: Vec<Vec<CheckRecord>> = annulus_sizes(max_total)
        .into_par_iter()
        .map(|(n, m)| specialization_checks(n, m))
        .collect();
    report(
        "specializations",
        format!("n+m <= {max_total}, all five families, all tuples"),
        records.concat(),
        started,
    )
}

fn specialization_checks(n: u32, m: u32) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    let rat = BigRational::from_integer;

    let mut checker = Checker::new("specializations", format!("n={n} m={m} catalan/narayana"));
    let take =
        |checker: &mut Checker, poly: &QPolynomial, expected: BigInt, what: &dyn Fn() -> String| {
            checker.eq(&rat(expected), &poly.at_one(), what);
            checker.expect(
                poly.has_nonnegative_coeffs(),
                "nonnegative coefficients",
                || poly.to_string(),
                what,
            );
        };
    take(
        &mut checker,
        &annular_catalan_q(n, m),
        count_anc(n, m),
        &|| "catalan".to_string(),
    );
    for c in 1..=n.min(m) {
        take(
            &mut checker,
            &annular_narayana3_q(n, m, c),
            count_anc_c(n, m, c),
            &|| format!("narayana3 c={c}"),
        );
        for r in 0..=n {
            for s in 0..=m {
                take(
                    &mut checker,
                    &annular_narayana2_q(n, m, c, r, s),
                    count_anc_crs(n, m, c, r, s),
                    &|| format!("narayana2 c={c} r={r} s={s}"),
                );
            }
        }
        for rw in 0..=n - c {
            for sw in 0..=m - c {
                for r in 0..=rw {
                    for s in 0..=sw {
                        take(
                            &mut checker,
                            &annular_narayana1_q(n, m, c, r, s, rw, sw),
                            count_anc_weighted(n, m, c, r, s, rw, sw),
                            &|| format!("narayana1 c={c} r={r} s={s} R={rw} S={sw}"),
                        );
                    }
                }
            }
        }
    }
    records.push(checker.finish());

    let mut checker = Checker::new("specializations", format!("n={n} m={m} kreweras"));
    for c in 1..=n.min(m) {
        for rw in 0..=n - c {
            for sw in 0..=m - c {
                for r in 0..=rw {
                    for s in 0..=sw {
                        for alpha in par_set(rw, r) {
                            for beta in par_set(sw, s) {
                                for lam in par_set(n - rw, c) {
                                    for mu in par_set(m - sw, c) {
                                        let profile = CycleProfile::new(
                                            n,
                                            m,
                                            alpha.clone(),
                                            beta.clone(),
                                            lam.clone(),
                                            mu.clone(),
                                        )
                                        .expect("consistent");
                                        let expected = rat(count_anc_profile(&profile));
                                        match annular_kreweras_q(&profile) {
                                            Ok(kre) => {
                                                checker.eq(&expected, &kre.at_one(), || {
                                                    format!("kreweras {profile}")
                                                });
                                                checker.expect(
                                                    kre.has_nonnegative_coeffs(),
                                                    "nonnegative coefficients",
                                                    || kre.to_string(),
                                                    || format!("kreweras {profile}"),
                                                );
                                            }
                                            Err(e) => checker.expect(
                                                false,
                                                "a polynomial",
                                                || e.to_string(),
                                                || profile.to_string(),
                                            ),
                                        }
                                        let sieve = profile_csp_q(&profile);
                                        checker.eq(&expected, &sieve.at_one(), || {
                                            format!("profile-sieve {profile}")
                                        });
                                        checker.expect(
                                            sieve.has_nonnegative_integer_coeffs(),
                                            "nonnegative integer coefficients",
                                            || sieve.to_string(),
                                            || format!("profile-sieve {profile}"),
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
    records.push(checker.finish());
    records
}

// ---------------------------------------------------------------------------
// polynomial identities

/// Verifies the four-stage summation chain
/// Kreweras -> Narayana_1 -> Narayana_2 -> Narayana_3 -> Catalan
/// as exact polynomial identities.
pub fn verify_sum_chain(max_n: u32, max_m: u32) -> VerificationReport {
    let started = Instant::now();
    let pairs: Vec<(u32, u32)> = (1..=max_n)
        .flat_map(|n| (1..=max_m).map(move |m| (n, m)))
        .collect();
    let records: Vec<Vec<CheckRecord>> = pairs
        .into_par_iter()
        .map(|(n, m)| sum_chain_checks(n, m))
        .collect();
    report(
        "sum-chain",
        format!("n <= {max_n}, m <= {max_m}"),
        records.concat(),
        started,
    )
}

fn sum_chain_checks(n: u32, m: u32) -> Vec<CheckRecord> {
    let mut records = Vec::new();

    // every Narayana value is computed once and reused by the later stages
    let tuples: Vec<(u32, u32, u32, u32, u32)> = (1..=n.min(m))
        .flat_map(|c| {
            (0..=n).flat_map(move |r| {
                (0..=m).flat_map(move |s| {
                    (0..=n).flat_map(move |rw| (0..=m).map(move |sw| (c, r, s, rw, sw)))
                })
            })
        })
        .collect();
    let nara1: BTreeMap<(u32, u32, u32, u32, u32), QPolynomial> = tuples
        .par_iter()
        .map(|&(c, r, s, rw, sw)| {
            (
                (c, r, s, rw, sw),
                annular_narayana1_q(n, m, c, r, s, rw, sw),
            )
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();

    // stage 1: sum of Kreweras over (alpha, beta, lam, mu) = Narayana_1
    let mut checker = Checker::new("sum-chain", format!("n={n} m={m} Kre -> Nara1"));
    let results: Vec<(QPolynomial, Option<String>)> = tuples
        .par_iter()
        .map(|&(c, r, s, rw, sw)| {
            let mut lhs = QPolynomial::zero();
            let mut error = None;
            if rw + c <= n && sw + c <= m {
                for alpha in par_set(rw, r) {
                    for beta in par_set(sw, s) {
                        for lam in par_set(n - rw, c) {
                            for mu in par_set(m - sw, c) {
                                let profile = CycleProfile::new(
                                    n,
                                    m,
                                    alpha.clone(),
                                    beta.clone(),
                                    lam.clone(),
                                    mu.clone(),
                                )
                                .expect("consistent");
                                match annular_kreweras_q(&profile) {
                                    Ok(kre) => lhs += &kre,
                                    Err(e) => error = Some(e.to_string()),
                                }
                            }
                        }
                    }
                }
            }
            (lhs, error)
        })
        .collect();
    for (&(c, r, s, rw, sw), (lhs, error)) in tuples.iter().zip(&results) {
        if let Some(e) = error {
            checker.expect(
                false,
                "a polynomial",
                || e.clone(),
                || format!("c={c} r={r} s={s} R={rw} S={sw}"),
            );
            continue;
        }
        checker.eq(&nara1[&(c, r, s, rw, sw)], lhs, || {
            format!("c={c} r={r} s={s} R={rw} S={sw}")
        });
    }
    records.push(checker.finish());

    // stage 2: sum over (R, S) = Narayana_2
    let mut checker = Checker::new("sum-chain", format!("n={n} m={m} Nara1 -> Nara2"));
    let mut nara2: BTreeMap<(u32, u32, u32), QPolynomial> = BTreeMap::new();
    for c in 1..=n.min(m) {
        for r in 0..=n {
            for s in 0..=m {
                let mut lhs = QPolynomial::zero();
                for rw in 0..=n {
                    for sw in 0..=m {
                        lhs += &nara1[&(c, r, s, rw, sw)];
                    }
                }
                let rhs = annular_narayana2_q(n, m, c, r, s);
                checker.eq(&rhs, &lhs, || format!("c={c} r={r} s={s}"));
                nara2.insert((c, r, s), rhs);
            }
        }
    }
    records.push(checker.finish());

    // stage 3: sum over (r, s) = Narayana_3
    let mut checker = Checker::new("sum-chain", format!("n={n} m={m} Nara2 -> Nara3"));
    let mut nara3: Vec<QPolynomial> = Vec::new();
    for c in 1..=n.min(m) {
        let mut lhs = QPolynomial::zero();
        for r in 0..=n {
            for s in 0..=m {
                lhs += &nara2[&(c, r, s)];
            }
        }
        let rhs = annular_narayana3_q(n, m, c);
        checker.eq(&rhs, &lhs, || format!("c={c}"));
        nara3.push(rhs);
    }
    records.push(checker.finish());

    // stage 4: sum over c = Catalan (the c = 0 term vanishes)
    let mut checker = Checker::new("sum-chain", format!("n={n} m={m} Nara3 -> Cat"));
    assert!(annular_narayana3_q(n, m, 0).is_zero());
    let mut lhs = QPolynomial::zero();
    for poly in &nara3 {
        lhs += poly;
    }
    checker.eq(&annular_catalan_q(n, m), &lhs, String::new);
    records.push(checker.finish());

    records
}

/// Grid bounds for the summation lemmas.
#[derive(Debug, Clone, Copy)]
pub struct LemmaBounds {
    /// `sum2` (Kreweras-refinement lemma): weights up to this `n`.
    pub sum2_n: u32,
    /// `sum3` (weight-splitting lemma): `n` up to this bound, all `r, c`.
    pub sum3_n: u32,
    /// `sum1` (connected-cycle lemma): `n, m, k` up to this bound.
    pub sum1_nmk: u32,
    /// q-Vandermonde: `m, n` up to this bound, all `k`.
    pub vandermonde_mn: u32,
}

impl Default for LemmaBounds {
    fn default() -> Self {
        LemmaBounds {
            sum2_n: 10,
            sum3_n: 10,
            sum1_nmk: 6,
            vandermonde_mn: 8,
        }
    }
}

/// Verifies the three summation lemmas and the q-Vandermonde identity as
/// exact polynomial identities over their grids.
pub fn verify_lemmas(bounds: LemmaBounds) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();

    // sum2: sum over Par(n,k) of q^{k(n-k)-tau} [k choose lam] = [n-1 choose k-1]
    let mut checker = Checker::new("lemmas", format!("sum2, n <= {}", bounds.sum2_n));
    for n in 1..=bounds.sum2_n {
        for k in 1..=n {
            let mut lhs = QPolynomial::zero();
            let mut bad_exponent = None;
            for lam in par_set(n, k) {
                let exp = i64::from(k) * i64::from(n - k) - lam.tau() as i64;
                if exp < 0 {
                    bad_exponent = Some((lam.clone(), exp));
                    break;
                }
                let term = q_multinomial_partition(u64::from(k), &lam)
                    .expect("lam has k parts")
                    .shifted(exp as usize);
                lhs += &term;
            }
            if let Some((lam, exp)) = bad_exponent {
                checker.expect(
                    false,
                    "a nonnegative exponent",
                    || format!("{exp}"),
                    || format!("n={n} k={k} lam={lam}"),
                );
                continue;
            }
            let rhs = q_binomial(i64::from(n) - 1, i64::from(k) - 1);
            checker.eq(&rhs, &lhs, || format!("n={n} k={k}"));
        }
    }
    records.push(checker.finish());

    // sum3: sum over R of q^{r(n-c-R)} [R-1 choose r-1] [n-R choose c]
    //       = [n choose r+c]
    let mut checker = Checker::new("lemmas", format!("sum3, n <= {}", bounds.sum3_n));
    for n in 0..=bounds.sum3_n {
        for r in 0..=n {
            for c in 0..=n {
                let mut lhs = QPolynomial::zero();
                for rw in 0..=n {
                    let first =
                        crate::formulas::q_binomial_edge(i64::from(rw) - 1, i64::from(r) - 1);
                    let second = q_binomial(i64::from(n - rw), i64::from(c));
                    if first.is_zero() || second.is_zero() {
                        continue;
                    }
                    let exp = i64::from(r) * (i64::from(n) - i64::from(c) - i64::from(rw));
                    debug_assert!(exp >= 0, "nonzero term with negative exponent");
                    lhs += &(&first * &second).shifted(exp as usize);
                }
                let rhs = q_binomial(i64::from(n), i64::from(r + c));
                checker.eq(&rhs, &lhs, || format!("n={n} r={r} c={c}"));
            }
        }
    }
    records.push(checker.finish());

    // sum1: sum over c of q^{c(c-1+k)} [2c+k] [2n+k choose n-c][2m+k choose m-c]
    //       = [n+k][m+k]/[n+m+k] [2n+k choose n+k][2m+k choose m+k]
    let mut checker = Checker::new("lemmas", format!("sum1, n,m,k <= {}", bounds.sum1_nmk));
    for n in 0..=bounds.sum1_nmk {
        for m in 0..=bounds.sum1_nmk {
            for k in 0..=bounds.sum1_nmk {
                let mut lhs = QPolynomial::zero();
                for c in 0..=n.min(m) {
                    let exp = i64::from(c) * (i64::from(c) - 1 + i64::from(k));
                    debug_assert!(exp >= 0);
                    let term = &(&q_int(u64::from(2 * c + k))
                        * &q_binomial(i64::from(2 * n + k), i64::from(n) - i64::from(c)))
                        * &q_binomial(i64::from(2 * m + k), i64::from(m) - i64::from(c));
                    lhs += &term.shifted(exp as usize);
                }
                let rhs = if n + m + k == 0 {
                    QPolynomial::zero()
                } else {
                    let num = &(&q_int(u64::from(n + k)) * &q_int(u64::from(m + k)))
                        * &(&q_binomial(i64::from(2 * n + k), i64::from(n + k))
                            * &q_binomial(i64::from(2 * m + k), i64::from(m + k)));
                    match num.exact_div(&q_int(u64::from(n + m + k))) {
                        Ok(p) => p,
                        Err(e) => {
                            checker.expect(
                                false,
                                "an exact division",
                                || e.to_string(),
                                || format!("n={n} m={m} k={k}"),
                            );
                            continue;
                        }
                    }
                };
                checker.eq(&rhs, &lhs, || format!("n={n} m={m} k={k}"));
            }
        }
    }
    records.push(checker.finish());

    // q-Vandermonde: sum over i of q^{i(m-k+i)} [m choose k-i][n choose i]
    //                = [m+n choose k]
    let mut checker = Checker::new(
        "lemmas",
        format!("q-vandermonde, m,n <= {}", bounds.vandermonde_mn),
    );
    for m in 0..=bounds.vandermonde_mn {
        for n in 0..=bounds.vandermonde_mn {
            for k in 0..=m + n + 1 {
                let mut lhs = QPolynomial::zero();
                for i in 0..=n.min(k) {
                    let first = q_binomial(i64::from(m), i64::from(k) - i64::from(i));
                    let second = q_binomial(i64::from(n), i64::from(i));
                    if first.is_zero() || second.is_zero() {
                        continue;
                    }
                    let exp = i64::from(i) * (i64::from(m) - i64::from(k) + i64::from(i));
                    debug_assert!(exp >= 0, "nonzero term with negative exponent");
                    lhs += &(&first * &second).shifted(exp as usize);
                }
                let rhs = q_binomial(i64::from(m + n), i64::from(k));
                checker.eq(&rhs, &lhs, || format!("m={m} n={n} k={k}"));
            }
        }
    }
    records.push(checker.finish());

    report("lemmas", format!("{bounds:?}"), records, started)
}

/// Verifies that `[n]/[k] [k choose lam]` and `[N-n]/[N] [N choose k]
/// [k choose lam]` are polynomials with nonnegative integer coefficients.
pub fn verify_polynomiality(max_big_n: u32) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();
    let mut checker = Checker::new("polynomiality", format!("N <= {max_big_n}"));
    for n in 1..=max_big_n {
        for k in 1..=n {
            for lam in par_set(n, k) {
                let multi = q_multinomial_partition(u64::from(k), &lam).expect("k parts");
                let first = (&q_int(u64::from(n)) * &multi).exact_div(&q_int(u64::from(k)));
                match first {
                    Ok(p) => checker.expect(
                        p.has_nonnegative_integer_coeffs(),
                        "nonnegative integer coefficients",
                        || p.to_string(),
                        || format!("[{n}]/[{k}] [k choose {lam}]"),
                    ),
                    Err(e) => checker.expect(
                        false,
                        "an exact division",
                        || e.to_string(),
                        || format!("[{n}]/[{k}] [k choose {lam}]"),
                    ),
                }
                for big_n in n..=max_big_n {
                    let num = &(&q_int(u64::from(big_n - n))
                        * &q_binomial(i64::from(big_n), i64::from(k)))
                        * &multi;
                    match num.exact_div(&q_int(u64::from(big_n))) {
                        Ok(p) => checker.expect(
                            p.has_nonnegative_integer_coeffs(),
                            "nonnegative integer coefficients",
                            || p.to_string(),
                            || format!("[{big_n}-{n}]/[{big_n}] [N choose {k}] [k choose {lam}]"),
                        ),
                        Err(e) => checker.expect(
                            false,
                            "an exact division",
                            || e.to_string(),
                            || format!("[{big_n}-{n}]/[{big_n}] [N choose {k}] [k choose {lam}]"),
                        ),
                    }
                }
            }
        }
    }
    records.push(checker.finish());
    report(
        "polynomiality",
        format!("N <= {max_big_n}, all lam in Par(n,k), n <= N"),
        records,
        started,
    )
}

/// Grid bounds for the disc suites.
#[derive(Debug, Clone, Copy)]
pub struct DiscBounds {
    /// Enumeration-vs-count checks for `n` up to this bound.
    pub enum_n: u32,
    /// The Kreweras/Narayana/Catalan q-identities up to this bound.
    pub q_n: u32,
    /// The disc sieving checks up to this bound.
    pub csp_n: u32,
}

impl Default for DiscBounds {
    fn default() -> Self {
        DiscBounds {
            enum_n: 7,
            q_n: 8,
            csp_n: 6,
        }
    }
}

/// Verifies the disc-case results: enumeration matches Catalan, Narayana,
/// and Kreweras counts; the q-identities refine them; and the disc sieving
/// polynomial counts rotation fixed points at every root of unity.
pub fn verify_disc_identities(bounds: DiscBounds) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();

    let mut checker = Checker::new("disc", format!("counts, n <= {}", bounds.enum_n));
    for n in 0..=bounds.enum_n {
        let all = disc::enumerate_noncrossing(n, None).expect("within bound");
        checker.eq(&catalan(n), &BigInt::from(all.len()), || {
            format!("n={n} total")
        });
        let mut by_k: BTreeMap<u32, u64> = BTreeMap::new();
        let mut by_type: BTreeMap<Partition, u64> = BTreeMap::new();
        for images in &all {
            let lam = disc::cycle_type(images);
            *by_k.entry(lam.len() as u32).or_default() += 1;
            *by_type.entry(lam).or_default() += 1;
        }
        for k in 0..=n {
            let enumerated = by_k.get(&k).copied().unwrap_or(0);
            checker.eq(&narayana(n, k), &BigInt::from(enumerated), || {
                format!("n={n} k={k}")
            });
            for lam in par_set(n, k) {
                let enumerated = by_type.get(&lam).copied().unwrap_or(0);
                checker.eq(&kreweras(&lam), &BigInt::from(enumerated), || {
                    format!("n={n} lam={lam}")
                });
            }
        }
    }
    records.push(checker.finish());

    let mut checker = Checker::new("disc", format!("q-identities, n <= {}", bounds.q_n));
    for n in 1..=bounds.q_n {
        for k in 1..=n {
            let mut lhs = QPolynomial::zero();
            for lam in par_set(n, k) {
                lhs += &kreweras_q(&lam);
            }
            checker.eq(&narayana_q(n, k), &lhs, || {
                format!("sum Kre_q, n={n} k={k}")
            });
        }
        let mut lhs = QPolynomial::zero();
        for k in 0..=n {
            lhs += &narayana_q(n, k);
        }
        checker.eq(&catalan_q(n), &lhs, || format!("sum Nara_q, n={n}"));
    }
    records.push(checker.finish());

    let mut checker = Checker::new("disc", format!("sieving, n <= {}", bounds.csp_n));
    for n in 1..=bounds.csp_n {
        for k in 1..=n {
            for lam in par_set(n, k) {
                let members = disc::enumerate_noncrossing(n, Some(&lam)).expect("within bound");
                let poly = crate::formulas::bessis_reiner_x(&lam);
                for t in 0..n {
                    let fixed = members
                        .iter()
                        .filter(|images| &disc::rotate(images, t) == *images)
                        .count();
                    let d = u64::from(n) / num::integer::gcd(u64::from(n), u64::from(t));
                    let j = if t == 0 {
                        0
                    } else {
                        i64::from(t) / (i64::from(n) / d as i64)
                    };
                    match eval_at_primitive_root(&poly, d, j) {
                        Ok(value) => match value.as_integer() {
                            Some(int) => checker.eq(&BigInt::from(fixed), &int, || {
                                format!("n={n} lam={lam} t={t}")
                            }),
                            None => checker.expect(
                                false,
                                "an integer evaluation",
                                || value.to_string(),
                                || format!("n={n} lam={lam} t={t}"),
                            ),
                        },
                        Err(e) => checker.expect(
                            false,
                            "a successful evaluation",
                            || e.to_string(),
                            || format!("n={n} lam={lam} t={t}"),
                        ),
                    }
                }
            }
        }
    }
    records.push(checker.finish());

    report("disc", format!("{bounds:?}"), records, started)
}

/// Verifies the forward bijection: for `d` in `{1, 2}`, over every profile,
/// the encoding of all `(connected cycle, fixed permutation)` pairs is
/// injective and the domain size matches both `c * count` and the
/// closed-form codomain size.
pub fn verify_bijection(max_total: u32) -> VerificationReport {
    let started = Instant::now();
    let mut records = Vec::new();
    for (n, m) in annulus_sizes(max_total) {
        for d in [1u32, 2] {
            if n % d != 0 || m % d != 0 {
                continue;
            }
            let rot = RotationPair::standard_of_order(n, m, d).expect("divisibility checked");
            let mut fixed = enumerate_anc(n, m, &ProfileFilter::any()).expect("within bound");
            fixed.retain(|p| &rot.apply(p) == p);
            let mut by_profile: BTreeMap<CycleProfile, Vec<&AnnularPermutation>> = BTreeMap::new();
            for p in &fixed {
                by_profile
                    .entry(p.profile().expect("connected"))
                    .or_default()
                    .push(p);
            }
            let mut checker = Checker::new("bijection", format!("n={n} m={m} d={d}"));
            for (profile, members) in &by_profile {
                let mut tuples = HashSet::new();
                let mut domain: u64 = 0;
                let mut phi_error = None;
                for p in members {
                    for cycle in p.cycles() {
                        let u = cycle.iter().filter(|&&x| x <= n).count();
                        if u == 0 || u == cycle.len() {
                            continue;
                        }
                        domain += 1;
                        match bijection_phi(&cycle, p, d) {
                            Ok(tuple) => {
                                tuples.insert(tuple);
                            }
                            Err(e) => phi_error = Some(format!("{p}: {e}")),
                        }
                    }
                }
                if let Some(e) = phi_error {
                    checker.expect(false, "a bijection tuple", || e, || profile.to_string());
                    continue;
                }
                checker.eq(
                    &(profile.c() as u64 * members.len() as u64),
                    &domain,
                    || format!("{profile}: |A| = c * #fixed"),
                );
                checker.eq(&domain, &(tuples.len() as u64), || {
                    format!("{profile}: injectivity")
                });
                match bijection_codomain_size(profile, d) {
                    Some(size) => checker.eq(&size, &BigInt::from(domain), || {
                        format!("{profile}: |A| = |B|")
                    }),
                    None => checker.expect(
                        false,
                        "a d-divisible profile",
                        || profile.to_string(),
                        || profile.to_string(),
                    ),
                }
            }
            records.push(checker.finish());
        }
    }
    report(
        "bijection",
        format!("n+m <= {max_total}, d in {{1, 2}}"),
        records,
        started,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(verify_csp_annular(5).all_passed());
        assert!(verify_unequal_orders(5).all_passed());
        assert!(verify_fixed_counts(5).all_passed());
        assert!(verify_counts(5).all_passed());
        assert!(verify_type_b(6).all_passed());
        assert!(verify_matchings(6).all_passed());
        assert!(verify_sum_chain(3, 3).all_passed());
        assert!(verify_specializations(5).all_passed());
        assert!(verify_polynomiality(6).all_passed());
        assert!(verify_bijection(4).all_passed());
        let bounds = LemmaBounds {
            sum2_n: 5,
            sum3_n: 5,
            sum1_nmk: 3,
            vandermonde_mn: 4,
        };
        assert!(verify_lemmas(bounds).all_passed());
        let bounds = DiscBounds {
            enum_n: 5,
            q_n: 5,
            csp_n: 4,
        };
        assert!(verify_disc_identities(bounds).all_passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_csp_annular(4);
        let b = verify_csp_annular(4);
        let mut buf_a = Vec::new();
        let mut buf_b = Vec::new();
        a.write_jsonl(&mut buf_a).unwrap();
        b.write_jsonl(&mut buf_b).unwrap();
        assert_eq!(buf_a, buf_b);
        assert!(!buf_a.is_empty());
    }

    #[test]
    fn failures_carry_witnesses() {
        // a deliberately broken comparison to exercise the witness path
        let mut checker = Checker::new("test", "witness");
        checker.eq(&1, &2, || "params".to_string());
        checker.eq(&3, &3, || unreachable!());
        let record = checker.finish();
        assert!(!record.ok());
        assert_eq!(record.attempted, 2);
        assert_eq!(record.passed, 1);
        let w = record.witness.unwrap();
        assert_eq!(
            (w.params.as_str(), w.expected.as_str(), w.actual.as_str()),
            ("params", "1", "2")
        );
    }
}
