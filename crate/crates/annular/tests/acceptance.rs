//! Acceptance gate: every headline claim verified end to end at its stated
//! bound, exact equality throughout, one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use num::BigInt;

use annular::annulus::{fixed_points, ProfileFilter, RotationPair};
use annular::formulas::{annular_catalan_q, count_anc, matching_count, matching_total};
use annular::qcalc::eval_at_primitive_root;
use annular::verify::*;

fn gate(criterion: &str, what: &str, report: &VerificationReport) {
    let status = if report.all_passed() { "PASS" } else { "FAIL" };
    println!(
        "{criterion} {what}: {status} ({} comparisons in {:.2?})",
        report.attempted(),
        report.wall
    );
    assert!(
        report.all_passed(),
        "{criterion} failed; first witness: {:?}",
        report.first_failure()
    );
}

#[test]
fn a1_counts_match_enumeration() {
    assert_eq!(count_anc(1, 1), BigInt::from(1));
    assert_eq!(count_anc(2, 1), BigInt::from(4));
    assert_eq!(count_anc(2, 2), BigInt::from(18));
    gate(
        "A1",
        "closed-form counts vs enumeration, all granularities, n+m <= 9",
        &verify_counts(9),
    );
}

#[test]
fn a2_cyclic_sieving() {
    // spot value: Cat(2,2) at q = -1 counts the two half-turn-fixed elements
    let value = eval_at_primitive_root(&annular_catalan_q(2, 2), 2, 1)
        .unwrap()
        .as_integer()
        .unwrap();
    assert_eq!(value, BigInt::from(2));
    let rot = RotationPair::standard_of_order(2, 2, 2).unwrap();
    assert_eq!(fixed_points(&rot, &ProfileFilter::any()).unwrap().len(), 2);
    gate(
        "A2",
        "cyclic sieving at all levels, orders, rigid pairs, and roots, n+m <= 8",
        &verify_csp_annular(8),
    );
}

#[test]
fn a3_rotation_invariant_counts() {
    gate(
        "A3",
        "fixed-point count formula vs enumeration, all orders and profiles, n+m <= 8",
        &verify_fixed_counts(8),
    );
}

#[test]
fn a4_summation_chain() {
    gate(
        "A4",
        "Kreweras -> Narayana -> Catalan sum chain as polynomials, n,m <= 6",
        &verify_sum_chain(6, 6),
    );
}

#[test]
fn a5_summation_lemmas() {
    gate(
        "A5",
        "summation lemmas and q-Vandermonde on their stated grids",
        &verify_lemmas(LemmaBounds::default()),
    );
}

#[test]
fn a6_polynomiality() {
    gate(
        "A6",
        "quotient expressions have nonnegative integer coefficients, N <= 12",
        &verify_polynomiality(12),
    );
    gate(
        "A6",
        "every formula divides exactly and specializes at q = 1, n+m <= 9",
        &verify_specializations(9),
    );
}

#[test]
fn a7_type_b_counts() {
    gate(
        "A7",
        "type-B counting formulas vs enumeration, ambient size <= 8",
        &verify_type_b(8),
    );
}

#[test]
fn a8_matchings() {
    assert_eq!(matching_count(2, 2, 2).unwrap(), BigInt::from(2));
    assert_eq!(matching_total(2, 2).unwrap(), BigInt::from(2));
    gate(
        "A8",
        "matching theorems vs enumeration, n+m <= 10",
        &verify_matchings(10),
    );
}

#[test]
fn a9_unequal_orders_fix_nothing() {
    gate(
        "A9",
        "unequal-order rotation pairs have no fixed points, n+m <= 8",
        &verify_unequal_orders(8),
    );
}

#[test]
fn a10_bijection() {
    gate(
        "A10",
        "invariance encoding is injective with matching cardinalities, d in {1,2}, n+m <= 6",
        &verify_bijection(6),
    );
}

#[test]
fn a11_disc_oracles() {
    gate(
        "A11",
        "disc counts (n <= 7), q-identities (n <= 8), disc sieving (n <= 6)",
        &verify_disc_identities(DiscBounds::default()),
    );
}
