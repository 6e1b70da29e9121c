//! Discrete invariants of subcanonical points on algebraic curves.
//!
//! A point `p` on a smooth curve of genus `g >= 2` is subcanonical when
//! `K_C ≅ O_C((2g-2)p)`. This crate works with the combinatorial shadows of
//! such points:
//!
//! - [`sequences`]: vanishing, ramification and gap encodings, weight,
//!   theta-characteristic parity and component classification;
//! - [`semigroups`]: the numerical semigroup of non-gaps and its closure and
//!   symmetry tests;
//! - [`covers`]: vanishing sequences at ramification points of double and
//!   cyclic covers;
//! - [`limit_series`]: limit canonical series on an elliptic tail and the
//!   associated dimension counts;
//! - [`atlas`]: exhaustive enumeration of admissible gap sequences and
//!   comparison with the stored low-genus table.

pub mod atlas;
pub mod covers;
pub mod error;
pub mod limit_series;
pub mod semigroups;
pub mod sequences;

pub use error::{Error, Result, ValidationError};
pub use semigroups::{check_ramification_admissible, ClosureViolation, NumericalSemigroup};
pub use sequences::{
    Component, GapSet, Parity, PointProfile, RamificationSequence, VanishingSequence,
};
