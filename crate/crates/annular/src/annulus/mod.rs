//! Annular noncrossing permutations: the objects, the noncrossing test, the
//! rotation action, exhaustive enumeration, matchings, and the type-B class.
//!
//! An `(n, m)`-annulus carries labels `1..=n` clockwise on the exterior
//! circle and `n+1..=n+m` counter-clockwise on the interior circle. A
//! permutation of `[n+m]` is *connected annular noncrossing* when its cycles
//! can be drawn in the annulus with every cycle clockwise, no crossing
//! arrows, and at least one cycle visiting both circles.
//!
//! Drawability is decided by the metric criterion
//! `cycles(pi) + cycles(pi^-1 gamma) = n + m` against the reference rotation
//! `gamma = (1,...,n)(n+1,...,n+m)`, together with the connectedness
//! requirement. The closed-form counts verified by the test suites
//! independently pin this criterion down at every size this crate enumerates.

mod bijection;
pub mod disc;

pub use bijection::{bijection_codomain_size, bijection_phi, BijectionTuple};

use std::fmt;

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::formulas::CycleProfile;
use crate::partitions::Partition;

/// Ceiling on `n + m` for exhaustive enumeration unless a caller raises it.
pub const DEFAULT_ENUMERATION_BOUND: u32 = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnnulusError {
    #[error("enumeration size {size} exceeds the bound {bound}")]
    BoundExceeded { size: u32, bound: u32 },
    #[error("permutation is not connected annular noncrossing")]
    NotConnectedNoncrossing,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cannot parse {0:?} as cycle notation")]
    Parse(String),
    #[error("type-B objects need even circle sizes, got ({n}, {m})")]
    OddTypeB { n: u32, m: u32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bijection invariant failed: {0}")]
    BijectionInvariant(String),
}

/// A permutation of `[n+m]` on an `(n, m)`-annulus, stored as the image
/// sequence `images[i-1] = pi(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnularPermutation {
    n: u32,
    m: u32,
    images: Vec<u32>,
}

impl AnnularPermutation {
    /// The reference rotation `gamma(n, m) = (1,...,n)(n+1,...,n+m)`.
    pub fn gamma(n: u32, m: u32) -> AnnularPermutation {
        assert!(n >= 1 && m >= 1, "annulus circles must be nonempty");
        AnnularPermutation {
            n,
            m,
            images: gamma_images(n, m),
        }
    }

    pub fn from_images(n: u32, m: u32, images: Vec<u32>) -> Result<Self, AnnulusError> {
        assert!(n >= 1 && m >= 1, "annulus circles must be nonempty");
        let t = (n + m) as usize;
        if images.len() != t {
            return Err(AnnulusError::InvalidPermutation(format!(
                "expected {t} images, got {}",
                images.len()
            )));
        }
        let mut seen = vec![false; t];
        for &y in &images {
            if y < 1 || y as usize > t || seen[(y - 1) as usize] {
                return Err(AnnulusError::InvalidPermutation(format!(
                    "images are not a bijection on [1..={t}]"
                )));
            }
            seen[(y - 1) as usize] = true;
        }
        Ok(AnnularPermutation { n, m, images })
    }

    /// Builds a permutation from disjoint cycles; elements of `[n+m]` not
    /// mentioned become fixed points.
    pub fn from_cycles(n: u32, m: u32, cycles: &[Vec<u32>]) -> Result<Self, AnnulusError> {
        assert!(n >= 1 && m >= 1, "annulus circles must be nonempty");
        let t = n + m;
        let mut images: Vec<u32> = (1..=t).collect();
        let mut used = vec![false; t as usize];
        for cycle in cycles {
            for &x in cycle {
                if x < 1 || x > t {
                    return Err(AnnulusError::InvalidPermutation(format!(
                        "element {x} outside [1..={t}]"
                    )));
                }
                if used[(x - 1) as usize] {
                    return Err(AnnulusError::InvalidPermutation(format!(
                        "element {x} appears in two cycles"
                    )));
                }
                used[(x - 1) as usize] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[(x - 1) as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(AnnularPermutation { n, m, images })
    }

    /// Parses cycle notation like `(1,3)(2,4)`; whitespace-insensitive.
    pub fn from_cycle_str(n: u32, m: u32, s: &str) -> Result<Self, AnnulusError> {
        let cycles = parse_cycles(s)?;
        Self::from_cycles(n, m, &cycles)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Total number of labels `n + m`.
    pub fn size(&self) -> u32 {
        self.n + self.m
    }

    pub fn image(&self, x: u32) -> u32 {
        self.images[(x - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Cycle decomposition in canonical form: every cycle starts at its
    /// smallest element and cycles are sorted by smallest element.
    /// Singletons are included.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        cycles_of(&self.images)
    }

    pub fn cycle_count(&self) -> usize {
        cycle_count_of(&self.images)
    }

    pub fn inverse(&self) -> AnnularPermutation {
        let mut images = vec![0; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            images[(y - 1) as usize] = i as u32 + 1;
        }
        AnnularPermutation {
            n: self.n,
            m: self.m,
            images,
        }
    }

    /// Composition `(self . other)(x) = self(other(x))`, the crate-wide
    /// right-to-left convention.
    pub fn compose(&self, other: &AnnularPermutation) -> AnnularPermutation {
        assert_eq!(self.images.len(), other.images.len());
        let images = other.images.iter().map(|&y| self.image(y)).collect();
        AnnularPermutation {
            n: self.n,
            m: self.m,
            images,
        }
    }

    /// The connected annular noncrossing test: some cycle must meet both
    /// circles, and `cycles(pi) + cycles(pi^-1 gamma) = n + m`.
    pub fn is_connected_anc(&self) -> bool {
        let mut scratch = Scratch::new(self.images.len());
        connected_anc_images(&self.images, self.n, &mut scratch)
    }

    /// The cycle-type profile; errors unless the permutation is connected
    /// annular noncrossing.
    pub fn profile(&self) -> Result<CycleProfile, AnnulusError> {
        if !self.is_connected_anc() {
            return Err(AnnulusError::NotConnectedNoncrossing);
        }
        Ok(profile_of_images(&self.images, self.n, self.m))
    }

    /// JSON form `{"n": .., "m": .., "cycles": [[..], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "n": self.n, "m": self.m, "cycles": self.cycles() })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, AnnulusError> {
        let bad = || AnnulusError::Parse(value.to_string());
        let n = value.get("n").and_then(|v| v.as_u64()).ok_or_else(bad)? as u32;
        let m = value.get("m").and_then(|v| v.as_u64()).ok_or_else(bad)? as u32;
        let cycles: Vec<Vec<u32>> = value
            .get("cycles")
            .and_then(|v| serde_json::from_value(v.clone()).ok())
            .ok_or_else(bad)?;
        Self::from_cycles(n, m, &cycles)
    }
}

impl fmt::Display for AnnularPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<u32>>, AnnulusError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let inner_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| AnnulusError::Parse(s.to_string()))?;
        let inner = &rest[1..=inner_end];
        if !inner.is_empty() {
            let cycle = inner
                .split(',')
                .map(|e| e.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| AnnulusError::Parse(s.to_string()))?;
            cycles.push(cycle);
        }
        rest = &rest[inner_end + 2..];
    }
    Ok(cycles)
}

fn gamma_images(n: u32, m: u32) -> Vec<u32> {
    (1..=n + m)
        .map(|x| {
            if x == n {
                1
            } else if x == n + m {
                n + 1
            } else {
                x + 1
            }
        })
        .collect()
}

fn cycles_of(images: &[u32]) -> Vec<Vec<u32>> {
    let t = images.len();
    let mut seen = vec![false; t];
    let mut cycles = Vec::new();
    for start in 1..=t as u32 {
        if seen[(start - 1) as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[(start - 1) as usize] = true;
        let mut x = images[(start - 1) as usize];
        while x != start {
            seen[(x - 1) as usize] = true;
            cycle.push(x);
            x = images[(x - 1) as usize];
        }
        cycles.push(cycle);
    }
    cycles
}

fn cycle_count_of(images: &[u32]) -> usize {
    let t = images.len();
    let mut seen = vec![false; t];
    let mut count = 0;
    for start in 1..=t as u32 {
        if seen[(start - 1) as usize] {
            continue;
        }
        count += 1;
        let mut x = start;
        loop {
            seen[(x - 1) as usize] = true;
            x = images[(x - 1) as usize];
            if x == start {
                break;
            }
        }
    }
    count
}

/// Reusable buffers for the enumeration hot loop.
struct Scratch {
    seen: Vec<bool>,
    inv: Vec<u32>,
}

impl Scratch {
    fn new(t: usize) -> Scratch {
        Scratch {
            seen: vec![false; t],
            inv: vec![0; t],
        }
    }
}

/// The metric noncrossing-and-connected test on a raw image sequence.
fn connected_anc_images(images: &[u32], n: u32, scratch: &mut Scratch) -> bool {
    let t = images.len();
    let m = t as u32 - n;

    // cycles of pi, watching for a cycle that meets both circles
    scratch.seen.fill(false);
    let mut pi_cycles = 0usize;
    let mut spanning = false;
    for start in 1..=t as u32 {
        if scratch.seen[(start - 1) as usize] {
            continue;
        }
        pi_cycles += 1;
        let (mut has_ext, mut has_int) = (false, false);
        let mut x = start;
        loop {
            scratch.seen[(x - 1) as usize] = true;
            if x <= n {
                has_ext = true;
            } else {
                has_int = true;
            }
            x = images[(x - 1) as usize];
            if x == start {
                break;
            }
        }
        spanning |= has_ext && has_int;
    }
    if !spanning {
        return false;
    }

    // cycles of pi^-1 gamma
    for (i, &y) in images.iter().enumerate() {
        scratch.inv[(y - 1) as usize] = i as u32 + 1;
    }
    scratch.seen.fill(false);
    let mut pg_cycles = 0usize;
    let gamma_of = |x: u32| {
        if x == n {
            1
        } else if x == n + m {
            n + 1
        } else {
            x + 1
        }
    };
    for start in 1..=t as u32 {
        if scratch.seen[(start - 1) as usize] {
            continue;
        }
        pg_cycles += 1;
        let mut x = start;
        loop {
            scratch.seen[(x - 1) as usize] = true;
            x = scratch.inv[(gamma_of(x) - 1) as usize];
            if x == start {
                break;
            }
        }
    }

    pi_cycles + pg_cycles == t
}

fn profile_of_images(images: &[u32], n: u32, m: u32) -> CycleProfile {
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut lam = Vec::new();
    let mut mu = Vec::new();
    for cycle in cycles_of(images) {
        let u = cycle.iter().filter(|&&x| x <= n).count() as u32;
        let v = cycle.len() as u32 - u;
        match (u > 0, v > 0) {
            (true, true) => {
                lam.push(u);
                mu.push(v);
            }
            (true, false) => alpha.push(u),
            (false, _) => beta.push(v),
        }
    }
    CycleProfile::new(
        n,
        m,
        Partition::new(alpha),
        Partition::new(beta),
        Partition::new(lam),
        Partition::new(mu),
    )
    .expect("cycle decomposition yields a consistent profile")
}

/// Tests the clockwise-orientation condition for a single cycle: some
/// rotation of the cycle word must consist of an exterior block that is a
/// cyclic rotation of the sorted exterior elements followed by an interior
/// block that is a cyclic rotation of the sorted interior elements.
pub fn is_clockwise_cycle(cycle: &[u32], n: u32, m: u32) -> bool {
    let k = cycle.len();
    debug_assert!(cycle.iter().all(|&x| x >= 1 && x <= n + m));
    if k <= 1 {
        return true;
    }
    let is_ext = |x: u32| x <= n;
    let u = cycle.iter().filter(|&&x| is_ext(x)).count();
    if u == 0 || u == k {
        return is_cyclic_rotation_of_sorted(cycle);
    }
    // the exterior block must be contiguous: exactly one interior->exterior
    // boundary in the cyclic word
    let starts: Vec<usize> = (0..k)
        .filter(|&i| is_ext(cycle[i]) && !is_ext(cycle[(i + k - 1) % k]))
        .collect();
    if starts.len() != 1 {
        return false;
    }
    let rotated: Vec<u32> = (0..k).map(|i| cycle[(starts[0] + i) % k]).collect();
    let (ext_block, int_block) = rotated.split_at(u);
    int_block.iter().all(|&x| !is_ext(x))
        && is_cyclic_rotation_of_sorted(ext_block)
        && is_cyclic_rotation_of_sorted(int_block)
}

fn is_cyclic_rotation_of_sorted(seq: &[u32]) -> bool {
    let k = seq.len();
    if k <= 1 {
        return true;
    }
    let min_idx = (0..k).min_by_key(|&i| seq[i]).unwrap();
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    (0..k).all(|i| seq[(min_idx + i) % k] == sorted[i])
}

// ---------------------------------------------------------------------------
// rotations

/// An element `(c1, c2)` of the bicyclic action: `c1` shifts exterior labels
/// by `ext_shift` clockwise (`i -> i + ext_shift mod n`) and `c2` shifts
/// interior labels by `int_shift` (`n+i -> n+j`, `j = i - int_shift mod m`).
/// The pair is an *annular rotation* when both components have the same
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationPair {
    n: u32,
    m: u32,
    ext_shift: u32,
    int_shift: u32,
}

impl RotationPair {
    pub fn new(n: u32, m: u32, ext_shift: u32, int_shift: u32) -> RotationPair {
        assert!(n >= 1 && m >= 1);
        RotationPair {
            n,
            m,
            ext_shift: ext_shift % n,
            int_shift: int_shift % m,
        }
    }

    pub fn identity(n: u32, m: u32) -> RotationPair {
        RotationPair::new(n, m, 0, 0)
    }

    /// The canonical order-`d` annular rotation with shifts `(n/d, m/d)`,
    /// when `d` divides both circle sizes.
    pub fn standard_of_order(n: u32, m: u32, d: u32) -> Option<RotationPair> {
        if d == 0 || !n.is_multiple_of(d) || !m.is_multiple_of(d) {
            return None;
        }
        Some(RotationPair::new(n, m, n / d, m / d))
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn ext_shift(&self) -> u32 {
        self.ext_shift
    }
    pub fn int_shift(&self) -> u32 {
        self.int_shift
    }

    pub fn ext_order(&self) -> u32 {
        self.n / num::integer::gcd(self.n, self.ext_shift)
    }

    pub fn int_order(&self) -> u32 {
        self.m / num::integer::gcd(self.m, self.int_shift)
    }

    /// True iff the two component orders agree.
    pub fn is_annular(&self) -> bool {
        self.ext_order() == self.int_order()
    }

    /// True iff both circles rotate by the same fraction of a full turn,
    /// i.e. the pair lies in the cyclic group generated by the simultaneous
    /// rotation `(n/g, m/g)` for `g = gcd(n, m)`. Equal component orders do
    /// not imply this once the order exceeds 2: on the (3,3)-annulus the
    /// pair `(1, 2)` has both orders 3 but twists the circles by different
    /// angles, and it genuinely fixes different sets than `(1, 1)` does.
    pub fn is_rigid(&self) -> bool {
        // ext_shift/n == int_shift/m as fractions of a turn; both shifts are
        // already reduced, so cross-multiplication is an exact test
        u64::from(self.ext_shift) * u64::from(self.m)
            == u64::from(self.int_shift) * u64::from(self.n)
    }

    /// The order of the pair as a group element, `lcm` of the component
    /// orders.
    pub fn order(&self) -> u32 {
        num::integer::lcm(self.ext_order(), self.int_order())
    }

    /// The label relabeling `sigma` combining the two circle shifts.
    pub fn relabel(&self, x: u32) -> u32 {
        if x <= self.n {
            (x - 1 + self.ext_shift) % self.n + 1
        } else {
            let i = x - self.n;
            self.n + (i + self.m - 1 - self.int_shift) % self.m + 1
        }
    }

    /// Acts on a permutation by relabeling: `pi -> sigma pi sigma^-1`.
    /// Preserves connected-annular-noncrossingness and the whole profile.
    pub fn apply(&self, p: &AnnularPermutation) -> AnnularPermutation {
        assert_eq!(
            (self.n, self.m),
            (p.n, p.m),
            "rotation/permutation size mismatch"
        );
        let mut images = vec![0; p.images.len()];
        for x in 1..=p.size() {
            images[(self.relabel(x) - 1) as usize] = self.relabel(p.image(x));
        }
        AnnularPermutation {
            n: p.n,
            m: p.m,
            images,
        }
    }
}

/// All rotation pairs whose component orders both equal `d`; empty unless
/// `d` divides both `n` and `m`.
pub fn rotations_of_order(n: u32, m: u32, d: u32) -> Vec<RotationPair> {
    let mut out = Vec::new();
    for e in 0..n {
        for i in 0..m {
            let pair = RotationPair::new(n, m, e, i);
            if pair.ext_order() == d && pair.int_order() == d {
                out.push(pair);
            }
        }
    }
    out
}

/// The order-`d` elements of the group of rigid annulus rotations: the pairs
/// `(u n/d, u m/d)` for `gcd(u, d) = 1`, i.e. [`rotations_of_order`]
/// restricted to pairs turning both circles by the same angle. These are the
/// symmetries of the sieving and fixed-point-count statements.
pub fn rigid_rotations_of_order(n: u32, m: u32, d: u32) -> Vec<RotationPair> {
    let mut out = rotations_of_order(n, m, d);
    out.retain(RotationPair::is_rigid);
    out
}

/// Every element of the bicyclic group, annular or not.
pub fn all_rotation_pairs(n: u32, m: u32) -> Vec<RotationPair> {
    (0..n)
        .flat_map(|e| (0..m).map(move |i| RotationPair::new(n, m, e, i)))
        .collect()
}

// ---------------------------------------------------------------------------
// enumeration

/// A partial profile for filtering enumerations; unset fields match
/// anything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProfileFilter {
    pub c: Option<u32>,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub ext_weight: Option<u32>,
    pub int_weight: Option<u32>,
    pub alpha: Option<Partition>,
    pub beta: Option<Partition>,
    pub lam: Option<Partition>,
    pub mu: Option<Partition>,
}

impl ProfileFilter {
    pub fn any() -> ProfileFilter {
        ProfileFilter::default()
    }

    pub fn with_c(c: u32) -> ProfileFilter {
        ProfileFilter {
            c: Some(c),
            ..Default::default()
        }
    }

    pub fn of_profile(p: &CycleProfile) -> ProfileFilter {
        ProfileFilter {
            c: Some(p.c()),
            r: Some(p.r()),
            s: Some(p.s()),
            ext_weight: Some(p.ext_weight()),
            int_weight: Some(p.int_weight()),
            alpha: Some(p.alpha().clone()),
            beta: Some(p.beta().clone()),
            lam: Some(p.lam().clone()),
            mu: Some(p.mu().clone()),
        }
    }

    pub fn is_unconstrained(&self) -> bool {
        *self == ProfileFilter::default()
    }

    pub fn matches(&self, p: &CycleProfile) -> bool {
        self.c.is_none_or(|c| p.c() == c)
            && self.r.is_none_or(|r| p.r() == r)
            && self.s.is_none_or(|s| p.s() == s)
            && self.ext_weight.is_none_or(|w| p.ext_weight() == w)
            && self.int_weight.is_none_or(|w| p.int_weight() == w)
            && self.alpha.as_ref().is_none_or(|a| p.alpha() == a)
            && self.beta.as_ref().is_none_or(|b| p.beta() == b)
            && self.lam.as_ref().is_none_or(|l| p.lam() == l)
            && self.mu.as_ref().is_none_or(|u| p.mu() == u)
    }

    /// The ambient filter for type-B enumeration: numeric parameters double
    /// and each partition has every multiplicity doubled.
    fn doubled(&self) -> ProfileFilter {
        ProfileFilter {
            c: self.c.map(|v| 2 * v),
            r: self.r.map(|v| 2 * v),
            s: self.s.map(|v| 2 * v),
            ext_weight: self.ext_weight.map(|v| 2 * v),
            int_weight: self.int_weight.map(|v| 2 * v),
            alpha: self.alpha.as_ref().map(|p| p.repeat(2)),
            beta: self.beta.as_ref().map(|p| p.repeat(2)),
            lam: self.lam.as_ref().map(|p| p.repeat(2)),
            mu: self.mu.as_ref().map(|p| p.repeat(2)),
        }
    }
}

/// Lexicographic successor in place; false once the sequence is the last.
pub(crate) fn next_permutation(arr: &mut [u32]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// All connected annular noncrossing permutations of the `(n, m)`-annulus
/// matching `filter`, in lexicographic order of image sequence. Uses the
/// default size bound.
pub fn enumerate_anc(
    n: u32,
    m: u32,
    filter: &ProfileFilter,
) -> Result<Vec<AnnularPermutation>, AnnulusError> {
    enumerate_anc_with_bound(n, m, filter, DEFAULT_ENUMERATION_BOUND)
}

/// As [`enumerate_anc`] with an explicit bound on `n + m`.
///
/// The search is partitioned over the image of 1 and run on parallel
/// workers; partial results merge in order, so output is deterministic
/// regardless of worker count.
pub fn enumerate_anc_with_bound(
    n: u32,
    m: u32,
    filter: &ProfileFilter,
    bound: u32,
) -> Result<Vec<AnnularPermutation>, AnnulusError> {
    assert!(n >= 1 && m >= 1, "annulus circles must be nonempty");
    let t = n + m;
    if t > bound {
        return Err(AnnulusError::BoundExceeded { size: t, bound });
    }
    let chunks: Vec<Vec<AnnularPermutation>> = (1..=t)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut rest: Vec<u32> = (1..=t).filter(|&x| x != first).collect();
            let mut images = vec![0u32; t as usize];
            let mut scratch = Scratch::new(t as usize);
            loop {
                images[0] = first;
                images[1..].copy_from_slice(&rest);
                if connected_anc_images(&images, n, &mut scratch)
                    && (filter.is_unconstrained()
                        || filter.matches(&profile_of_images(&images, n, m)))
                {
                    out.push(AnnularPermutation {
                        n,
                        m,
                        images: images.clone(),
                    });
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            out
        })
        .collect();
    Ok(chunks.concat())
}

/// The elements of `anc(n, m)` matching `filter` that are fixed by `rot`.
pub fn fixed_points(
    rot: &RotationPair,
    filter: &ProfileFilter,
) -> Result<Vec<AnnularPermutation>, AnnulusError> {
    let mut perms = enumerate_anc(rot.n, rot.m, filter)?;
    perms.retain(|p| &rot.apply(p) == p);
    Ok(perms)
}

/// All connected annular noncrossing matchings (every cycle of size 2), in
/// lexicographic order. Empty when `n` and `m` have different parities.
pub fn enumerate_matchings(n: u32, m: u32) -> Result<Vec<AnnularPermutation>, AnnulusError> {
    enumerate_matchings_with_bound(n, m, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_matchings_with_bound(
    n: u32,
    m: u32,
    bound: u32,
) -> Result<Vec<AnnularPermutation>, AnnulusError> {
    assert!(n >= 1 && m >= 1);
    let t = n + m;
    if t > bound {
        return Err(AnnulusError::BoundExceeded { size: t, bound });
    }
    if !t.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    // generate fixed-point-free involutions directly; (t-1)!! candidates
    // instead of t!
    let mut out = Vec::new();
    let mut images = vec![0u32; t as usize];
    let mut scratch = Scratch::new(t as usize);
    fn pair_up(
        images: &mut Vec<u32>,
        n: u32,
        m: u32,
        scratch: &mut Scratch,
        out: &mut Vec<AnnularPermutation>,
    ) {
        let Some(first) = images.iter().position(|&y| y == 0) else {
            if connected_anc_images(images, n, scratch) {
                out.push(AnnularPermutation {
                    n,
                    m,
                    images: images.clone(),
                });
            }
            return;
        };
        for partner in first + 1..images.len() {
            if images[partner] == 0 {
                images[first] = partner as u32 + 1;
                images[partner] = first as u32 + 1;
                pair_up(images, n, m, scratch, out);
                images[first] = 0;
                images[partner] = 0;
            }
        }
    }
    pair_up(&mut images, n, m, &mut scratch, &mut out);
    out.sort_unstable_by(|a, b| a.images.cmp(&b.images));
    Ok(out)
}

// ---------------------------------------------------------------------------
// type B

/// True iff `p` is fixed by the order-2 annular rotation of its (even-sized)
/// annulus.
pub fn is_type_b(p: &AnnularPermutation) -> Result<bool, AnnulusError> {
    let rot = RotationPair::standard_of_order(p.n, p.m, 2)
        .ok_or(AnnulusError::OddTypeB { n: p.n, m: p.m })?;
    Ok(&rot.apply(p) == p)
}

/// The type-B objects with parameters `(n, m)`: elements of `anc(2n, 2m)`
/// invariant under the order-2 annular rotation. The filter is given in B
/// coordinates; ambient parameters are twice as large, with partition
/// multiplicities doubled.
pub fn enumerate_anc_b(
    n: u32,
    m: u32,
    filter: &ProfileFilter,
) -> Result<Vec<AnnularPermutation>, AnnulusError> {
    enumerate_anc_b_with_bound(n, m, filter, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_anc_b_with_bound(
    n: u32,
    m: u32,
    filter: &ProfileFilter,
    bound: u32,
) -> Result<Vec<AnnularPermutation>, AnnulusError> {
    let rot = RotationPair::standard_of_order(2 * n, 2 * m, 2).expect("even by construction");
    let mut perms = enumerate_anc_with_bound(2 * n, 2 * m, &filter.doubled(), bound)?;
    perms.retain(|p| &rot.apply(p) == p);
    Ok(perms)
}
