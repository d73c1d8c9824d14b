//! Trailing zeros, fixed-length reflections and run-length statistics of
//! the Collatz map.
//!
//! The accelerated map `x -> 3 * odd_part(x) + 1` collapses every run of
//! halvings into one step. Its multiplier `3 / 2^t(x)` reappears as the gap
//! between consecutive even binary palindromes, which yields two mirror
//! formulations of the same dynamics. Every closed form in this crate is
//! paired with a brute-force check in its tests.
//!
//! Modules, bottom up:
//!
//! * [`numtheory`]: binary length, trailing zeros, odd part, complement.
//! * [`hierarchy`]: fixed-length words, Mersenne intervals, projections.
//! * [`reflection`]: the reflector, palindromes, difference identities.
//! * [`runlength`]: signed run-length codes and block counts.
//! * [`collatz`]: the four step functions and trajectories.
//! * [`experiments`]: mass ratios and figure datasets.
//! * [`verify`]: named exhaustive verification suites.
//! * [`cli`]: the `hailstone` command line.

pub mod cli;
pub mod collatz;
pub mod dataset;
pub mod error;
pub mod experiments;
pub mod hierarchy;
pub mod numtheory;
pub mod reflection;
pub mod report;
pub mod runlength;
pub mod verify;

pub use error::{Error, Result};
pub use report::CheckReport;

/// Non-negative integer values. Arithmetic that can grow is checked.
pub type Natural = u128;

/// Expansion length in bits.
pub type BitLen = u32;

/// Widest supported word.
pub const MAX_BITS: BitLen = 128;

/// Widest interval materialized as a table (`2^24` entries).
pub const MAX_TABLE_BITS: BitLen = 24;

/// Widest interval scanned element by element without materializing it.
pub const MAX_SCAN_BITS: BitLen = 32;
