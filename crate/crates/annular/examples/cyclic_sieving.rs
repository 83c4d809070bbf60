//! The cyclic sieving phenomenon, end to end: evaluate the annular
//! q-Catalan number at an exact root of unity and watch it count the
//! permutations fixed by the corresponding annulus rotation.
//!
//! Run with: cargo run --example cyclic_sieving

use annular::annulus::{fixed_points, rigid_rotations_of_order, ProfileFilter};
use annular::formulas::annular_catalan_q;
use annular::qcalc::eval_at_primitive_root;

fn main() {
    let (n, m) = (4, 4);
    let cat = annular_catalan_q(n, m);
    println!("Cat({n},{m}) = {cat}\n");

    for d in [1u32, 2, 4] {
        for rot in rigid_rotations_of_order(n, m, d) {
            let fixed = fixed_points(&rot, &ProfileFilter::any()).unwrap();
            // the rotation shifting the exterior by u*n/d corresponds to the
            // root of unity zeta_d^u
            let j = i64::from(rot.ext_shift() / (n / d).max(1));
            let j = if d == 1 { 1 } else { j };
            let value = eval_at_primitive_root(&cat, u64::from(d), j)
                .unwrap()
                .as_integer()
                .expect("sieving evaluations are integers");
            println!(
                "order {d}, shifts ({}, {}): {} fixed permutations, Cat at zeta_{d}^{j} = {value}",
                rot.ext_shift(),
                rot.int_shift(),
                fixed.len(),
            );
            assert_eq!(value, fixed.len().into());
        }
    }

    println!("\nevery evaluation matched its fixed-point count");
}
