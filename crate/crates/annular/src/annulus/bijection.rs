//! The forward bijection behind the rotation-invariant counting theorem.
//!
//! For a permutation `pi` fixed by the canonical order-`d` annular rotation
//! and a chosen connected cycle `gamma` of `pi`, the map encodes
//! `(gamma, pi)` as a tuple of positions, marked labels, and block lengths.
//! The encoding follows the published construction: arrange `[n+m]` starting
//! from the first exterior element of `gamma` and just past its last
//! interior element, mark the rightmost element of every non-connected cycle
//! with its size, restrict marks to one fundamental domain of the rotation,
//! and cut the remaining sequence at the connected cycles' extremal
//! elements.
//!
//! Only the forward direction is built; correctness is asserted through
//! injectivity plus a cardinality match with the closed-form codomain size,
//! which together force bijectivity.

use num::BigInt;

use crate::formulas::{binom, CycleProfile};
use crate::partitions::Partition;

use super::{AnnularPermutation, AnnulusError, RotationPair};

/// The image of one `(connected cycle, permutation)` pair.
///
/// `a` and `b` are 1-based ranks: `a` ranks the cycle's first exterior
/// element among all exterior elements lying on connected cycles (a set of
/// size `n - R`), and `b` ranks its last interior element among interior
/// elements on connected cycles (size `m - S`). `ext_marks` and `int_marks`
/// are the marked labels inside the fundamental domains `[n/d]` and `[m/d]`,
/// with `ext_labels`/`int_labels` carrying the cycle sizes written on the
/// marks in increasing label order. `conn_ext_lengths` and
/// `conn_int_lengths` are the first `c/d` block lengths cut by the connected
/// cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BijectionTuple {
    pub a: u32,
    pub b: u32,
    pub ext_marks: Vec<u32>,
    pub int_marks: Vec<u32>,
    pub ext_labels: Vec<u32>,
    pub int_labels: Vec<u32>,
    pub conn_ext_lengths: Vec<u32>,
    pub conn_int_lengths: Vec<u32>,
}

fn precondition(msg: impl Into<String>) -> AnnulusError {
    AnnulusError::Precondition(msg.into())
}

/// Encodes `(gamma_cycle, p)` under an order-`d` rotation; see the module
/// docs for the construction. All preconditions are checked: `p` must be
/// connected annular noncrossing and fixed by the canonical order-`d`
/// rotation, `gamma_cycle` must be one of its connected cycles, and the
/// whole profile must be divisible by `d`.
pub fn bijection_phi(
    gamma_cycle: &[u32],
    p: &AnnularPermutation,
    d: u32,
) -> Result<BijectionTuple, AnnulusError> {
    let (n, m) = (p.n(), p.m());
    if d == 0 || n % d != 0 || m % d != 0 {
        return Err(precondition(format!(
            "order {d} does not divide both circle sizes ({n}, {m})"
        )));
    }
    let rot = RotationPair::standard_of_order(n, m, d).expect("divisibility checked");
    if &rot.apply(p) != p {
        return Err(precondition(format!(
            "permutation is not fixed by the canonical order-{d} rotation"
        )));
    }
    let profile = p
        .profile()
        .map_err(|_| precondition("permutation is not connected annular noncrossing"))?;
    if !profile.is_divisible(d) {
        return Err(precondition(format!(
            "profile {profile} is not divisible by {d}"
        )));
    }

    // locate gamma_cycle among the connected cycles of p
    let canonical = canonical_rotation(gamma_cycle);
    let cycle = p
        .cycles()
        .into_iter()
        .find(|c| *c == canonical)
        .ok_or_else(|| precondition("gamma_cycle is not a cycle of the permutation"))?;
    let is_ext = |x: u32| x <= n;
    if cycle.iter().all(|&x| is_ext(x)) || cycle.iter().all(|&x| !is_ext(x)) {
        return Err(precondition("gamma_cycle is not a connected cycle"));
    }

    // rotate the cycle into its exterior-block/interior-block form
    let k = cycle.len();
    let starts: Vec<usize> = (0..k)
        .filter(|&i| is_ext(cycle[i]) && !is_ext(cycle[(i + k - 1) % k]))
        .collect();
    if starts.len() != 1 {
        return Err(precondition(
            "connected cycle is not an exterior block followed by an interior block",
        ));
    }
    let rotated: Vec<u32> = (0..k).map(|i| cycle[(starts[0] + i) % k]).collect();
    let a_val = rotated[0];
    let b_val = *rotated.last().unwrap();
    debug_assert!(is_ext(a_val) && !is_ext(b_val));

    // the arrangement a, a+1, ..., a-1, b+1, b+2, ..., b of [n+m]
    let mut seq: Vec<u32> = Vec::with_capacity((n + m) as usize);
    seq.extend((0..n).map(|i| (a_val - 1 + i) % n + 1));
    let b_int = b_val - n;
    seq.extend((0..m).map(|i| n + (b_int + i) % m + 1));
    let mut pos = vec![0usize; (n + m) as usize];
    for (i, &x) in seq.iter().enumerate() {
        pos[(x - 1) as usize] = i;
    }

    // mark the rightmost element of every exterior/interior cycle with the
    // cycle size, then keep the marks inside the fundamental domains
    let all_cycles = p.cycles();
    let mut marked: Vec<(u32, u32)> = Vec::new(); // (element, cycle size)
    for c in &all_cycles {
        let u = c.iter().filter(|&&x| is_ext(x)).count();
        if u > 0 && u < c.len() {
            continue; // connected
        }
        let rightmost = *c.iter().max_by_key(|&&x| pos[(x - 1) as usize]).unwrap();
        marked.push((rightmost, c.len() as u32));
    }
    let (n_hat, m_hat) = (n / d, m / d);
    let (c_hat, r_hat, s_hat) = (profile.c() / d, profile.r() / d, profile.s() / d);
    let mut ext_marked: Vec<(u32, u32)> = marked
        .iter()
        .filter(|&&(x, _)| is_ext(x) && x <= n_hat)
        .copied()
        .collect();
    let mut int_marked: Vec<(u32, u32)> = marked
        .iter()
        .filter(|&&(x, _)| !is_ext(x) && x - n <= m_hat)
        .map(|&(x, t)| (x - n, t))
        .collect();
    ext_marked.sort_unstable();
    int_marked.sort_unstable();

    let invariant = |msg: String| AnnulusError::BijectionInvariant(msg);
    if ext_marked.len() != r_hat as usize || int_marked.len() != s_hat as usize {
        return Err(invariant(format!(
            "expected {r_hat} exterior and {s_hat} interior marks, got {} and {}",
            ext_marked.len(),
            int_marked.len()
        )));
    }
    let (ext_marks, ext_labels): (Vec<u32>, Vec<u32>) = ext_marked.into_iter().unzip();
    let (int_marks, int_labels): (Vec<u32>, Vec<u32>) = int_marked.into_iter().unzip();
    let alpha_hat = profile.alpha().divide(d).expect("divisibility checked");
    let beta_hat = profile.beta().divide(d).expect("divisibility checked");
    if !is_rearrangement(&ext_labels, &alpha_hat) || !is_rearrangement(&int_labels, &beta_hat) {
        return Err(invariant(format!(
            "mark labels {ext_labels:?}/{int_labels:?} do not rearrange {alpha_hat}/{beta_hat}"
        )));
    }

    // drop exterior/interior cycle elements and cut what remains at the
    // connected cycles' extremal elements
    let on_connected: Vec<bool> = {
        let mut v = vec![false; (n + m) as usize];
        for c in &all_cycles {
            let u = c.iter().filter(|&&x| is_ext(x)).count();
            if u > 0 && u < c.len() {
                for &x in c {
                    v[(x - 1) as usize] = true;
                }
            }
        }
        v
    };
    let ext_rem: Vec<u32> = seq
        .iter()
        .copied()
        .filter(|&x| is_ext(x) && on_connected[(x - 1) as usize])
        .collect();
    let int_rem: Vec<u32> = seq
        .iter()
        .copied()
        .filter(|&x| !is_ext(x) && on_connected[(x - 1) as usize])
        .collect();

    let mut left_cuts = Vec::new();
    let mut right_cuts = Vec::new();
    for c in &all_cycles {
        let u = c.iter().filter(|&&x| is_ext(x)).count();
        if u == 0 || u == c.len() {
            continue;
        }
        let leftmost = *c.iter().min_by_key(|&&x| pos[(x - 1) as usize]).unwrap();
        let rightmost = *c.iter().max_by_key(|&&x| pos[(x - 1) as usize]).unwrap();
        left_cuts.push(index_of(&ext_rem, leftmost));
        right_cuts.push(index_of(&int_rem, rightmost));
    }
    left_cuts.sort_unstable();
    right_cuts.sort_unstable();
    debug_assert_eq!(left_cuts.first(), Some(&0));
    debug_assert_eq!(right_cuts.last(), Some(&(int_rem.len() - 1)));

    // block lengths between consecutive cuts; one fundamental domain
    let mut conn_ext_lengths: Vec<u32> =
        left_cuts.windows(2).map(|w| (w[1] - w[0]) as u32).collect();
    conn_ext_lengths.push((ext_rem.len() - left_cuts.last().unwrap()) as u32);
    conn_ext_lengths.truncate(c_hat as usize);
    let mut conn_int_lengths: Vec<u32> = Vec::with_capacity(right_cuts.len());
    let mut prev = 0usize;
    for &cut in &right_cuts {
        conn_int_lengths.push((cut + 1 - prev) as u32);
        prev = cut + 1;
    }
    conn_int_lengths.truncate(c_hat as usize);
    let lam_hat = profile.lam().divide(d).expect("divisibility checked");
    let mu_hat = profile.mu().divide(d).expect("divisibility checked");
    if !is_rearrangement(&conn_ext_lengths, &lam_hat)
        || !is_rearrangement(&conn_int_lengths, &mu_hat)
    {
        return Err(invariant(format!(
            "block lengths {conn_ext_lengths:?}/{conn_int_lengths:?} do not rearrange {lam_hat}/{mu_hat}"
        )));
    }

    // ranks of a and b among labels on connected cycles
    let a = (1..=n)
        .filter(|&x| on_connected[(x - 1) as usize] && x <= a_val)
        .count() as u32;
    let b = (n + 1..=n + m)
        .filter(|&x| on_connected[(x - 1) as usize] && x <= b_val)
        .count() as u32;

    Ok(BijectionTuple {
        a,
        b,
        ext_marks,
        int_marks,
        ext_labels,
        int_labels,
        conn_ext_lengths,
        conn_int_lengths,
    })
}

/// The closed-form size of the bijection's codomain for a `d`-divisible
/// profile: `(n-R)(m-S) C(n/d, r/d) C(m/d, s/d)` times the rearrangement
/// counts of the four hatted partitions. `None` when the profile is not
/// divisible by `d`.
pub fn bijection_codomain_size(p: &CycleProfile, d: u32) -> Option<BigInt> {
    if !p.is_divisible(d) {
        return None;
    }
    let hat = |v: u32| i64::from(v / d);
    let size = BigInt::from((p.n() - p.ext_weight()) * (p.m() - p.int_weight()))
        * binom(hat(p.n()), hat(p.r()))
        * binom(hat(p.m()), hat(p.s()))
        * p.alpha().divide(d).unwrap().rearrangement_count()
        * p.beta().divide(d).unwrap().rearrangement_count()
        * p.lam().divide(d).unwrap().rearrangement_count()
        * p.mu().divide(d).unwrap().rearrangement_count();
    Some(size)
}

fn canonical_rotation(cycle: &[u32]) -> Vec<u32> {
    let k = cycle.len();
    let min_idx = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    (0..k).map(|i| cycle[(min_idx + i) % k]).collect()
}

fn index_of(slice: &[u32], value: u32) -> usize {
    slice
        .iter()
        .position(|&x| x == value)
        .expect("connected-cycle element is in the remaining sequence")
}

fn is_rearrangement(values: &[u32], of: &Partition) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted == of.parts()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use num::BigInt;

    use super::*;
    use crate::annulus::{enumerate_anc, fixed_points, ProfileFilter};
    use crate::formulas::count_anc_profile;

    #[test]
    fn golden_tuple_for_the_two_one_annulus() {
        let p = AnnularPermutation::from_cycle_str(2, 1, "(1,3)(2)").unwrap();
        let tuple = bijection_phi(&[1, 3], &p, 1).unwrap();
        assert_eq!(
            tuple,
            BijectionTuple {
                a: 1,
                b: 1,
                ext_marks: vec![2],
                int_marks: vec![],
                ext_labels: vec![1],
                int_labels: vec![],
                conn_ext_lengths: vec![1],
                conn_int_lengths: vec![1],
            }
        );
    }

    #[test]
    fn preconditions_are_enforced() {
        let p = AnnularPermutation::from_cycle_str(2, 1, "(1,3)(2)").unwrap();
        // (2) is not connected
        assert!(matches!(
            bijection_phi(&[2], &p, 1),
            Err(AnnulusError::Precondition(_))
        ));
        // not a cycle at all
        assert!(matches!(
            bijection_phi(&[1, 2], &p, 1),
            Err(AnnulusError::Precondition(_))
        ));
        // d does not divide m
        assert!(matches!(
            bijection_phi(&[1, 3], &p, 2),
            Err(AnnulusError::Precondition(_))
        ));
        // not noncrossing-connected
        let bad = AnnularPermutation::from_cycle_str(2, 2, "(1,2)").unwrap();
        assert!(matches!(
            bijection_phi(&[1, 2], &bad, 1),
            Err(AnnulusError::Precondition(_))
        ));
    }

    #[test]
    fn injective_with_matching_cardinality_on_a_small_profile() {
        // the (2,1) profile with one exterior fixed point: |A| = |B| = 2
        let perms = enumerate_anc(2, 1, &ProfileFilter::any()).unwrap();
        let mut tuples = HashSet::new();
        let mut domain = 0;
        for p in &perms {
            let profile = p.profile().unwrap();
            if profile.r() != 1 {
                continue;
            }
            for cycle in p.cycles() {
                if cycle.len() == 2 {
                    domain += 1;
                    tuples.insert(bijection_phi(&cycle, p, 1).unwrap());
                }
            }
        }
        assert_eq!(domain, 2);
        assert_eq!(tuples.len(), 2);
    }

    #[test]
    fn order_two_tuples_on_the_two_two_annulus() {
        let rot = RotationPair::standard_of_order(2, 2, 2).unwrap();
        let fixed = fixed_points(&rot, &ProfileFilter::any()).unwrap();
        assert_eq!(fixed.len(), 2);
        let mut tuples = HashSet::new();
        let mut domain = 0;
        for p in &fixed {
            let profile = p.profile().unwrap();
            for cycle in p.cycles() {
                domain += 1;
                let t = bijection_phi(&cycle, p, 2).unwrap();
                assert_eq!(t.conn_ext_lengths, vec![1]);
                assert_eq!(t.conn_int_lengths, vec![1]);
                tuples.insert(t);
            }
            assert_eq!(bijection_codomain_size(&profile, 2), Some(BigInt::from(4)));
            // at q = 1 the same profile counts 2 unrestricted elements
            assert_eq!(count_anc_profile(&profile), BigInt::from(2));
        }
        // |A| = c * #fixed = 2 * 2 = 4 tuples, all distinct and equal to |B|
        assert_eq!(domain, 4);
        assert_eq!(tuples.len(), 4);
    }
}
