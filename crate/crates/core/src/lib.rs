//! Explicit, invertible bijections behind Touchard's identity
//!
//! ```text
//! C(n+1) = sum_k binom(n, 2k) 2^(n-2k) C(k)
//! ```
//!
//! A Dyck word of semilength `n + 1` is read two letters at a time and
//! compressed into a bicolored Motzkin word of length `n + 1` whose red
//! zeros never touch the ground ([`bijections::pair_encode`]). That set is
//! then put in bijection with the unrestricted words of length `n`
//! ([`bijections::drop_restriction`]), which are counted directly by
//! splitting off the Up/Down skeleton ([`bijections::touchard_split`]) or
//! the red zeros ([`bijections::motzkin_split`]).
//!
//! The counting side is generic over the integer type; [`Natural`] is the
//! arbitrary precision default and [`Machine`] a fixed-width alternative for
//! small arguments.

pub mod bijections;
pub mod counting;
pub mod error;
pub mod paths;
pub mod render;
pub mod verify;

pub use bijections::{
    catalan_to_g, drop_restriction, g_to_catalan, motzkin_merge, motzkin_split, pair_decode,
    pair_encode, raise_restriction, touchard_merge, touchard_split, MotzkinDecomposition,
    TouchardDecomposition,
};
pub use counting::{CountTable, Counting, IdentityKind, IdentityReport};
pub use error::{Error, Result};
pub use paths::{
    enumerate_dyck, enumerate_g, enumerate_g_restricted, enumerate_motzkin, prefix_sums,
    sample_dyck, validate_dyck, validate_g, validate_g_restricted, validate_motzkin, DyckWord,
    GWord, Letter, MotzkinWord, RestrictedGWord, Word,
};

/// Arbitrary precision count type.
pub type Natural = num_bigint::BigUint;

/// Fixed-width count type; overflows past `catalan(33)`.
pub type Machine = u128;

/// Memoized count table over [`Natural`].
pub type NaturalTable = CountTable<Natural>;

/// Memoized count table over [`Machine`].
pub type MachineTable = CountTable<Machine>;

/// Identity report with exact [`Natural`] entries.
pub type NaturalReport = IdentityReport<Natural>;

pub use counting::{binomial, catalan, motzkin_count, motzkin_rhs, touchard_rhs};
