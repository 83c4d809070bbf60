//! The encoding behind the rotation-invariant counting formula: each
//! (connected cycle, permutation) pair maps to a tuple of ranks, marked
//! labels, and block lengths; injectivity plus the cardinality match force
//! the count.
//!
//! Run with: cargo run --example rotation_bijection

use std::collections::{BTreeMap, HashSet};

use annular::annulus::{
    bijection_codomain_size, bijection_phi, fixed_points, ProfileFilter, RotationPair,
};
use annular::formulas::CycleProfile;

fn main() {
    let (n, m, d) = (4, 2, 2);
    let rot = RotationPair::standard_of_order(n, m, d).unwrap();
    let fixed = fixed_points(&rot, &ProfileFilter::any()).unwrap();
    println!(
        "anc({n},{m}) has {} elements fixed by the half-turn\n",
        fixed.len()
    );

    let mut by_profile: BTreeMap<CycleProfile, Vec<_>> = BTreeMap::new();
    for p in &fixed {
        by_profile.entry(p.profile().unwrap()).or_default().push(p);
    }
    for (profile, members) in &by_profile {
        println!("profile {profile}:");
        let mut tuples = HashSet::new();
        let mut domain = 0u64;
        for p in members {
            for cycle in p.cycles() {
                let ext = cycle.iter().filter(|&&x| x <= n).count();
                if ext == 0 || ext == cycle.len() {
                    continue;
                }
                domain += 1;
                let tuple = bijection_phi(&cycle, p, d).unwrap();
                println!("  {p}, cycle {cycle:?} -> {tuple:?}");
                tuples.insert(tuple);
            }
        }
        let codomain = bijection_codomain_size(profile, d).unwrap();
        println!(
            "  |A| = {domain}, distinct tuples = {}, |B| = {codomain}\n",
            tuples.len()
        );
        assert_eq!(domain, tuples.len() as u64);
        assert_eq!(codomain, domain.into());
    }
}
