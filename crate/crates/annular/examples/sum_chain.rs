//! The four-stage summation chain: summing annular q-Kreweras numbers over
//! cycle types gives the type-1 q-Narayana number, and so on up to the
//! annular q-Catalan number.
//!
//! Run with: cargo run --example sum_chain

use annular::formulas::{
    annular_catalan_q, annular_kreweras_q, annular_narayana1_q, annular_narayana3_q, CycleProfile,
};
use annular::partitions::par_set;
use annular::qcalc::QPolynomial;

fn main() {
    let (n, m) = (3, 3);

    // stage 1 at one parameter point: (c, r, s, R, S) = (1, 1, 0, 2, 0)
    let (c, r, s, rw, sw) = (1, 1, 0, 2, 0);
    let mut kre_sum = QPolynomial::zero();
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
                    .unwrap();
                    let kre = annular_kreweras_q(&profile).unwrap();
                    println!("Kre({profile})\n  = {kre}");
                    kre_sum += &kre;
                }
            }
        }
    }
    let nara1 = annular_narayana1_q(n, m, c, r, s, rw, sw);
    println!("sum  = {kre_sum}");
    println!("Nara1(n={n},m={m};c={c},r={r},s={s},R={rw},S={sw}) = {nara1}");
    assert_eq!(kre_sum, nara1);

    // the last stage over the whole annulus
    let mut nara3_sum = QPolynomial::zero();
    for c in 1..=n.min(m) {
        nara3_sum += &annular_narayana3_q(n, m, c);
    }
    let cat = annular_catalan_q(n, m);
    println!("\nsum of Nara3 over c = {nara3_sum}");
    println!("Cat({n},{m})          = {cat}");
    assert_eq!(nara3_sum, cat);
    println!("\nboth identities hold exactly");
}
