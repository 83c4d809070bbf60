//! Integer partitions with the part-multiplicity view.
//!
//! Partitions classify cycle types throughout the crate: the exterior and
//! interior cycle types of an annular permutation, the connected cycle types,
//! and the indices of the q-multinomial coefficients. The operations here are
//! exactly the ones those uses need: generation of `Par(n, k)` (partitions of
//! `n` with exactly `k` parts), conjugation, the `tau` statistic, divisibility
//! and scaling by `d`, and rearrangement counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition {0} is not divisible by {1}")]
    NotDivisible(Partition, u32),
    #[error("cannot parse {0:?} as a partition")]
    Parse(String),
}

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty partition is a first-class value; it is the cycle type of an
/// annular permutation with no exterior (or no interior) cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Panics on a zero part.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The weight `n = sum of parts`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The number of parts `k`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part multiplicities `m_i = #{parts equal to i}`, keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut mults = BTreeMap::new();
        for &p in &self.parts {
            *mults.entry(p).or_insert(0) += 1;
        }
        mults
    }

    /// The conjugate partition: `conj_i = #{j : part_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=largest)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The statistic `tau = sum_{i>=1} conj_i * conj_{i+1}`.
    pub fn tau(&self) -> u64 {
        let conj = self.conjugate();
        conj.parts
            .windows(2)
            .map(|w| u64::from(w[0]) * u64::from(w[1]))
            .sum()
    }

    /// True iff every part multiplicity is divisible by `d`.
    pub fn is_divisible(&self, d: u32) -> bool {
        assert!(d > 0);
        self.multiplicities().values().all(|&m| m % d == 0)
    }

    /// Scales every multiplicity by `1/d`; part sizes are unchanged, so the
    /// weight drops to `n/d`.
    pub fn divide(&self, d: u32) -> Result<Partition, PartitionError> {
        if !self.is_divisible(d) {
            return Err(PartitionError::NotDivisible(self.clone(), d));
        }
        let mut parts = Vec::with_capacity(self.parts.len() / d as usize);
        for (size, mult) in self.multiplicities().into_iter().rev() {
            parts.extend(std::iter::repeat_n(size, (mult / d) as usize));
        }
        Ok(Partition { parts })
    }

    /// Scales every multiplicity by `d` (the inverse of [`divide`]); each
    /// part is repeated `d` times.
    ///
    /// [`divide`]: Partition::divide
    pub fn repeat(&self, d: u32) -> Partition {
        assert!(d > 0);
        let mut parts = Vec::with_capacity(self.parts.len() * d as usize);
        for &p in &self.parts {
            parts.extend(std::iter::repeat_n(p, d as usize));
        }
        Partition { parts }
    }

    /// Multiplies each part by `t`.
    pub fn scale_parts(&self, t: u32) -> Partition {
        assert!(t > 0);
        Partition {
            parts: self.parts.iter().map(|&p| p * t).collect(),
        }
    }

    /// The number of rearrangements of the multiplicity sequence,
    /// `k! / (m_1! m_2! ...)`.
    pub fn rearrangement_count(&self) -> BigInt {
        multinomial(self.len() as u32, self.multiplicities().values().copied())
    }
}

/// The multinomial coefficient `k! / prod(m_i!)`. Panics unless the `m_i`
/// sum to `k`.
pub(crate) fn multinomial(k: u32, mults: impl IntoIterator<Item = u32>) -> BigInt {
    let mut result = BigInt::from(1);
    let mut seen = 0u32;
    for m in mults {
        for i in 1..=m {
            seen += 1;
            result = result * BigInt::from(seen) / BigInt::from(i);
        }
    }
    assert_eq!(seen, k, "multiplicities must sum to the number of parts");
    result
}

/// All partitions of `n` with exactly `k` parts, in lexicographically
/// decreasing order. `par_set(0, 0)` is the singleton list of the empty
/// partition.
pub fn par_set(n: u32, k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k as usize);
    fill_par(n, k, u32::MAX, &mut stack, &mut out);
    out
}

fn fill_par(n: u32, k: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if k == 0 {
        if n == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
        }
        return;
    }
    if n < k {
        return;
    }
    // Largest feasible first part down to ceil(n/k) keeps the output in
    // decreasing lexicographic order.
    let hi = (n - (k - 1)).min(max_part);
    let lo = n.div_ceil(k);
    for p in (lo..=hi).rev() {
        stack.push(p);
        fill_par(n - p, k - 1, p, stack, out);
        stack.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses the text form `(3,1)`; whitespace-insensitive, `()` is empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(D::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent partition generator (all partitions of n, any length),
    /// used only to cross-check `par_set`.
    fn all_partitions(n: u32) -> Vec<Vec<u32>> {
        fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn par_set_examples() {
        assert_eq!(par_set(4, 2), vec![pt(&[3, 1]), pt(&[2, 2])]);
        assert_eq!(par_set(3, 5), Vec::<Partition>::new());
        assert_eq!(par_set(0, 0), vec![Partition::empty()]);
    }

    #[test]
    fn par_set_matches_direct_generator() {
        for n in 0..=12 {
            let direct = all_partitions(n);
            let by_length: usize = (0..=n).map(|k| par_set(n, k).len()).sum();
            assert_eq!(by_length, direct.len(), "p({n}) mismatch");
            for k in 0..=n {
                for lam in par_set(n, k) {
                    assert_eq!(lam.weight(), n);
                    assert_eq!(lam.len(), k as usize);
                }
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(pt(&[2, 1]).conjugate(), pt(&[2, 1]));
        assert_eq!(pt(&[5]).conjugate(), pt(&[1, 1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(pt(&[4, 3]).conjugate(), pt(&[2, 2, 2, 1]));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12u32 {
            for parts in all_partitions(n) {
                let lam = Partition::new(parts);
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(pt(&[1, 1, 1, 1]).tau(), 0);
        assert_eq!(pt(&[2, 1]).tau(), 2);
        for n in 1..=8 {
            assert_eq!(pt(&[n]).tau(), u64::from(n) - 1);
        }
    }

    #[test]
    fn tau_matches_pairwise_oracle() {
        // tau(lam) = sum over ordered part pairs (a, b) of min(a, b - 1):
        // each i >= 1 with i <= a and i + 1 <= b contributes 1 to
        // conj_i * conj_{i+1}.
        for n in 0..=12u32 {
            for parts in all_partitions(n) {
                let lam = Partition::new(parts);
                let oracle: u64 = lam
                    .parts()
                    .iter()
                    .flat_map(|&a| {
                        lam.parts()
                            .iter()
                            .map(move |&b| u64::from(a.min(b.saturating_sub(1))))
                    })
                    .sum();
                assert_eq!(lam.tau(), oracle, "tau mismatch for {lam}");
            }
        }
    }

    #[test]
    fn divisibility_examples() {
        let lam = pt(&[2, 2, 1, 1]);
        assert!(lam.is_divisible(2));
        assert_eq!(lam.divide(2).unwrap(), pt(&[2, 1]));
        assert!(!pt(&[2, 1]).is_divisible(2));
        assert!(pt(&[2, 1]).divide(2).is_err());
        assert!(lam.is_divisible(1));
        assert_eq!(lam.divide(1).unwrap(), lam);
    }

    #[test]
    fn scale_parts_examples() {
        assert_eq!(pt(&[2, 1]).scale_parts(2), pt(&[4, 2]));
        assert_eq!(Partition::empty().scale_parts(7), Partition::empty());
        assert_eq!(pt(&[1, 1, 1]).scale_parts(3), pt(&[3, 3, 3]));
    }

    #[test]
    fn rearrangement_count_examples() {
        assert_eq!(pt(&[2, 1]).rearrangement_count(), BigInt::from(2));
        assert_eq!(pt(&[1, 1, 1]).rearrangement_count(), BigInt::from(1));
        assert_eq!(pt(&[3, 2, 2, 1]).rearrangement_count(), BigInt::from(12));
        assert_eq!(Partition::empty().rearrangement_count(), BigInt::from(1));
    }

    #[test]
    fn text_round_trip() {
        for s in ["(3,1)", "()", "(2,1,1)", "( 4 , 4 )"] {
            let lam: Partition = s.parse().unwrap();
            let back: Partition = lam.to_string().parse().unwrap();
            assert_eq!(lam, back);
        }
        assert!("(1,2".parse::<Partition>().is_err());
        assert!("(0)".parse::<Partition>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let lam = pt(&[3, 1]);
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, "[3,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(lam, back);
    }

    proptest! {
        #[test]
        fn divide_then_repeat_round_trips(parts in proptest::collection::vec(1u32..6, 0..8), d in 1u32..4) {
            let lam = Partition::new(parts).repeat(d);
            prop_assert!(lam.is_divisible(d));
            prop_assert_eq!(lam.divide(d).unwrap().repeat(d), lam);
        }

        #[test]
        fn conjugate_involution_prop(parts in proptest::collection::vec(1u32..9, 0..9)) {
            let lam = Partition::new(parts);
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().weight(), lam.weight());
        }
    }
}
