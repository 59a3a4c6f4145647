//! Exact invariants for Fano varieties built as towers of projective bundles.
//!
//! Start from projective space, repeatedly projectivize a split vector
//! bundle of the form `O^r ⊕ O(c)`, and you get a family of smooth Fano
//! varieties whose anticanonical degrees can be made astonishingly large —
//! large enough to probe how fast the degree of an `n`-dimensional Fano can
//! grow with `n`. This crate computes those degrees and the related
//! invariants (index, Picard rank, normalized degree) in exact arithmetic,
//! and certifies every inequality either exactly or with outward-rounded
//! interval enclosures at adaptive precision.
//!
//! The best way in is the `examples/` directory; each example is a small,
//! runnable tour of one capability:
//!
//! * `construct_towers` — describing towers, validating them, and the
//!   ready-made families (`cargo run --example construct_towers`)
//! * `exact_degrees` — exact degree computation and the closed-form identity
//!   for the two-factor family
//! * `chow_oracle` — the independent Chow-ring evaluation used to
//!   cross-check the fast degree recursion
//! * `verify_growth` — certified degree lower bounds for the one-step family
//! * `verify_multistep` — the multi-step families with prescribed Picard
//!   rank, and the per-level certificate chain behind their bounds
//! * `best_twist_search` — exhaustive search over one-step towers at fixed
//!   dimension
//! * `known_bounds_table` — classical upper bounds for Fano degrees placed
//!   next to the degrees this family achieves
//! * `adaptive_precision` — how comparisons escalate precision and report
//!   failure honestly instead of guessing
//!
//! The same functionality is scriptable through the `fano-towers` binary;
//! see the README for the command set.
//!
//! # Layout
//!
//! * [`numerics`] — exact integers/rationals, interval arithmetic with
//!   outward rounding, a small expression language for bounds, and rigorous
//!   comparison/floor procedures.
//! * [`tower`] — tower descriptions, validation, and exact invariants
//!   (dimension, index, Picard rank, degree, normalized degree).
//! * [`chow`] — a symbolic Chow-ring presentation used as an independent
//!   oracle for the degree computation.
//! * [`bounds`] — certified checks of degree lower bounds for the built-in
//!   families, the per-level certificate chain, and classical upper bounds.
//! * [`search`] — exhaustive searches over one-step towers.
//! * [`report`] — serializable report records and CSV/JSON emission.
//! * [`cli`] — the command-line interface wired up by the `fano-towers`
//!   binary.

pub mod bounds;
pub mod chow;
pub mod cli;
pub mod numerics;
pub mod report;
pub mod search;
pub mod tower;

pub use numerics::{ExactInt, ExactRat};
pub use tower::{BuildMode, FanoInvariants, Level, TowerSpec};
