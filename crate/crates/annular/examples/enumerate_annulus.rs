//! Exhaustive enumeration of connected annular noncrossing permutations,
//! with their cycle-type profiles and the matching closed-form counts.
//!
//! Run with: cargo run --example enumerate_annulus

use annular::annulus::{enumerate_anc, ProfileFilter};
use annular::formulas::{count_anc, count_anc_c};

fn main() {
    let (n, m) = (2, 2);
    let all = enumerate_anc(n, m, &ProfileFilter::any()).unwrap();
    println!(
        "anc({n},{m}) has {} elements; the closed form says {}",
        all.len(),
        count_anc(n, m)
    );
    for p in &all {
        let profile = p.profile().unwrap();
        println!("  {p}  ->  {profile}");
    }

    println!();
    for c in 1..=2 {
        let with_c = enumerate_anc(n, m, &ProfileFilter::with_c(c)).unwrap();
        println!(
            "with {c} connected cycle(s): {} elements (formula: {})",
            with_c.len(),
            count_anc_c(n, m, c)
        );
    }
}
