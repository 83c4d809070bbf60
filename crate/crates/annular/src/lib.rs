//! Exact enumeration, q-analogues, and cyclic sieving for annular
//! noncrossing permutations.
//!
//! A permutation of `[n+m]` drawn on an annulus — `n` labels clockwise on
//! the exterior circle, `m` counter-clockwise on the interior — is
//! *connected annular noncrossing* when its cycles can be drawn with every
//! cycle clockwise, no crossing arrows, and at least one cycle visiting both
//! circles. This crate provides:
//!
//! - [`qcalc`]: exact rational polynomial arithmetic in `q`, Gaussian
//!   binomials and q-multinomials, and root-of-unity evaluation in
//!   cyclotomic quotient rings (no floating point anywhere);
//! - [`partitions`]: integer partitions, conjugation, the `tau` statistic,
//!   divisibility and scaling, and `Par(n, k)` generation;
//! - [`formulas`]: the closed-form counts and q-polynomials — disc and
//!   annular Kreweras/Narayana/Catalan families, rotation-fixed-point
//!   counts, type-B counts, and matching counts;
//! - [`annulus`]: the objects themselves — the noncrossing test, cycle-type
//!   profiles, the bicyclic rotation action, exhaustive enumeration,
//!   matchings, type-B objects, the disc case, and the forward bijection
//!   from the invariance argument;
//! - [`verify`]: executable theorem suites that sweep all of the above
//!   exhaustively at desk scale and emit machine-readable reports;
//! - [`cli`]: the `annular` command-line front end, including SVG rendering
//!   of annulus diagrams.
//!
//! Everything is exact: counts are big integers, polynomial identities are
//! checked coefficientwise, and sieving evaluations happen in `Q(w)` for `w`
//! an exact root of unity.
//!
//! # Examples
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```bash
//! cargo run --example q_polynomials      # disc and annular q-analogues
//! cargo run --example enumerate_annulus  # exhaustive enumeration + profiles
//! cargo run --example cyclic_sieving     # root-of-unity vs. fixed points
//! cargo run --example sum_chain          # Kreweras -> ... -> Catalan sums
//! cargo run --example matchings_type_b   # matchings and type-B objects
//! cargo run --example rotation_bijection # the invariance-proof encoding
//! cargo run --example render_annulus     # SVG diagram of a permutation
//! ```
//!
//! The same functionality is scriptable through the thin `annular` binary;
//! see the README.

pub mod annulus;
pub mod cli;
pub mod formulas;
pub mod partitions;
pub mod qcalc;
pub mod verify;

pub use annulus::AnnularPermutation;
pub use formulas::CycleProfile;
pub use partitions::Partition;
pub use qcalc::QPolynomial;
