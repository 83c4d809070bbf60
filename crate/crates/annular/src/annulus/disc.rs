//! Noncrossing permutations of the disc.
//!
//! These back the classical Catalan/Narayana/Kreweras counts and the disc
//! sieving checks, and serve as independent oracles for the annular case.
//! The noncrossing test is the disc metric criterion
//! `cycles(pi) + cycles(pi^-1 gamma) = n + 1` with `gamma = (1, ..., n)`.
//!
//! Disc permutations are plain 1-based image sequences; they never carry an
//! annulus split.

use crate::partitions::Partition;

use super::{cycle_count_of, cycles_of, next_permutation, AnnulusError, DEFAULT_ENUMERATION_BOUND};

/// The disc metric noncrossing criterion.
pub fn is_noncrossing(images: &[u32]) -> bool {
    let n = images.len();
    if n == 0 {
        return true;
    }
    let mut inv = vec![0u32; n];
    for (i, &y) in images.iter().enumerate() {
        inv[(y - 1) as usize] = i as u32 + 1;
    }
    let gamma_of = |x: u32| if x as usize == n { 1 } else { x + 1 };
    let pg: Vec<u32> = (1..=n as u32)
        .map(|x| inv[(gamma_of(x) - 1) as usize])
        .collect();
    cycle_count_of(images) + cycle_count_of(&pg) == n + 1
}

/// The cycle decomposition in canonical form (smallest element first,
/// cycles sorted by smallest element).
pub fn cycles(images: &[u32]) -> Vec<Vec<u32>> {
    cycles_of(images)
}

/// The cycle type of a disc permutation.
pub fn cycle_type(images: &[u32]) -> Partition {
    Partition::new(cycles_of(images).iter().map(|c| c.len() as u32).collect())
}

/// Conjugation by the `t`-th power of the full rotation `(1, ..., n)`; the
/// cyclic action in the disc sieving statements.
pub fn rotate(images: &[u32], t: u32) -> Vec<u32> {
    let n = images.len() as u32;
    let shift = |x: u32| (x - 1 + t) % n + 1;
    let mut out = vec![0u32; images.len()];
    for (i, &y) in images.iter().enumerate() {
        out[(shift(i as u32 + 1) - 1) as usize] = shift(y);
    }
    out
}

/// All noncrossing permutations of `[n]`, optionally restricted to one cycle
/// type, in lexicographic order of image sequence.
pub fn enumerate_noncrossing(
    n: u32,
    filter: Option<&Partition>,
) -> Result<Vec<Vec<u32>>, AnnulusError> {
    if n > DEFAULT_ENUMERATION_BOUND {
        return Err(AnnulusError::BoundExceeded {
            size: n,
            bound: DEFAULT_ENUMERATION_BOUND,
        });
    }
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    let mut images: Vec<u32> = (1..=n).collect();
    loop {
        if is_noncrossing(&images) && filter.is_none_or(|f| &cycle_type(&images) == f) {
            out.push(images.clone());
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{catalan, kreweras};
    use num::BigInt;

    #[test]
    fn identity_is_noncrossing() {
        for n in 0..=6u32 {
            let id: Vec<u32> = (1..=n).collect();
            assert!(is_noncrossing(&id));
        }
    }

    #[test]
    fn counts_match_catalan() {
        for n in 0..=6u32 {
            let count = enumerate_noncrossing(n, None).unwrap().len();
            assert_eq!(BigInt::from(count), catalan(n), "n = {n}");
        }
    }

    #[test]
    fn cycle_type_filter_matches_kreweras() {
        let lam = Partition::new(vec![2, 1, 1]);
        let count = enumerate_noncrossing(4, Some(&lam)).unwrap().len();
        assert_eq!(BigInt::from(count), kreweras(&lam));
        assert_eq!(count, 6);
    }

    #[test]
    fn rotation_is_an_action_on_noncrossing_permutations() {
        for images in enumerate_noncrossing(5, None).unwrap() {
            for t in 0..5 {
                let rotated = rotate(&images, t);
                assert!(is_noncrossing(&rotated));
                assert_eq!(cycle_type(&rotated), cycle_type(&images));
            }
            assert_eq!(rotate(&images, 0), images);
        }
    }
}
