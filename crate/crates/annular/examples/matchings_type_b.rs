//! Annular noncrossing matchings and type-B annular noncrossing
//! permutations, enumerated and counted.
//!
//! Run with: cargo run --example matchings_type_b

use annular::annulus::{enumerate_anc_b, enumerate_matchings, is_type_b, ProfileFilter};
use annular::formulas::{count_anc_b, matching_count, matching_total};

fn main() {
    println!("connected annular noncrossing matchings of the (4,2)-annulus:");
    let matchings = enumerate_matchings(4, 2).unwrap();
    for p in &matchings {
        let c = p.profile().unwrap().c();
        println!("  {p}  ({c} connected pairs)");
    }
    println!(
        "total {} (formula: {}); with c = 2 connected pairs: {}",
        matchings.len(),
        matching_total(4, 2).unwrap(),
        matching_count(4, 2, 2).unwrap(),
    );

    println!("\ntype-B objects with parameters (1,1), i.e. half-turn-invariant");
    println!("elements of anc(2,2):");
    let b = enumerate_anc_b(1, 1, &ProfileFilter::any()).unwrap();
    for p in &b {
        assert!(is_type_b(p).unwrap());
        println!("  {p}");
    }
    println!("total {} (formula: {})", b.len(), count_anc_b(1, 1));
}
