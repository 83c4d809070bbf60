//! Disc and annular q-analogues, printed exactly.
//!
//! Run with: cargo run --example q_polynomials

use annular::formulas::{
    annular_catalan_q, annular_narayana3_q, bessis_reiner_x, catalan_q, kreweras_q, narayana_q,
};
use annular::partitions::par_set;
use annular::qcalc::{q_binomial, q_factorial, q_int};

fn main() {
    println!("q-integers and q-factorials:");
    for n in 0..=4 {
        println!("  [{n}]_q  = {}", q_int(n));
    }
    for n in 0..=4 {
        println!("  [{n}]_q! = {}", q_factorial(n));
    }

    println!("\nGaussian binomials in row 4:");
    for k in 0..=4 {
        println!("  [4 choose {k}]_q = {}", q_binomial(4, k));
    }

    println!("\ndisc q-Catalan numbers:");
    for n in 1..=4 {
        println!("  Cat_q({n}) = {}", catalan_q(n));
    }

    println!("\ndisc q-Narayana numbers for n = 4:");
    for k in 1..=4 {
        println!("  Nara_q(4,{k}) = {}", narayana_q(4, k));
    }

    println!("\ndisc q-Kreweras numbers over Par(4, 2):");
    for lam in par_set(4, 2) {
        println!("  Kre_q({lam}) = {}", kreweras_q(&lam));
        println!("  sieving poly of {lam} = {}", bessis_reiner_x(&lam));
    }

    println!("\nannular q-Catalan numbers (note the rational coefficients):");
    for (n, m) in [(1, 1), (2, 1), (2, 2)] {
        println!("  Cat({n},{m}) = {}", annular_catalan_q(n, m));
    }

    println!("\nannular q-Narayana numbers of type 3 on the (2,2)-annulus:");
    for c in 1..=2 {
        println!("  Nara3(2,2;{c}) = {}", annular_narayana3_q(2, 2, c));
    }
}
