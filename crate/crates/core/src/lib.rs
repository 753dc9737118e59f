//! Exact counts of `3n`-letter words over a three-letter alphabet, split by
//! the residues of the three letter counts modulo 3.
//!
//! A word of length `3n` with letter counts `(n1, n2, n3)` falls into one of
//! four classes: all counts `≡ 0` (A), all `≡ 1` (B), all `≡ 2` (C), or one
//! count of each residue (D). This crate computes `C_A(n) .. C_D(n)` with
//! several engines that share no code path beyond big-integer arithmetic:
//!
//! * [`counters`]: word enumeration, composition summation and the literal
//!   trinomial sums (ground truth).
//! * [`recurrences`]: the coupled 4×4 linear recurrence, the decoupled
//!   third-order recurrence, the quartic recurrence for class C and an
//!   identity suite over the elimination steps between them.
//! * [`closed_forms`]: closed forms evaluated in the ring `Q(i, √3)`, as
//!   linear combinations of characteristic roots, and with integer-only case
//!   analysis on `n mod 4`.
//! * [`genfun`]: Taylor coefficients of the rational generating functions.
//!
//! The numeric core is generic over `num-traits` scalars; the aliases below
//! fix the exact big-number instantiations used by the engines.

pub mod algebraic;
pub mod classes;
pub mod closed_forms;
pub mod counters;
pub mod engine;
pub mod error;
pub mod genfun;
pub mod identities;
pub mod oeis;
pub mod poly;
pub mod recurrences;
pub mod scalar;
pub mod validate;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use crate::algebraic::QuadI3;
pub use crate::classes::{ClassCounts, ClassLabel};
pub use crate::engine::EngineId;
pub use crate::error::{Error, Result};
pub use crate::genfun::RationalGf;
pub use crate::poly::Polynomial;
pub use crate::scalar::{ExactField, ExactInt};

/// Reduced fraction of big integers.
pub type Rational = BigRational;

/// Element of `Q(i, √3)` with big-rational coordinates.
pub type AlgebraicQ3i = QuadI3<Rational>;

/// `(C_A(n), C_B(n), C_C(n), C_D(n))` with big-integer entries.
pub type ClassVector = ClassCounts<BigInt>;

/// Dense polynomial with big-integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;

/// Rational generating function with big-integer polynomial parts.
pub type RationalGF = RationalGf<BigInt>;
