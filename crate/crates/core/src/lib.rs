//! Exact Dedekind sums, inversion counts of multiplier permutations, and
//! executable checks for the congruences that relate them.
//!
//! Everything is computed with exact integers and fractions. The central
//! question the crate answers is when `12s(a₁, b) − 12s(a₂, b)` lies in `8ℤ`,
//! decided three independent ways (inversion counts, exact sums, and a
//! Jacobi-symbol congruence) so that each route can check the others.
//!
//! ```
//! use dedekind_core::{dedekind::dedekind_sum_bhk, theorems::classify_pair, exactmath::Rational};
//!
//! assert_eq!(dedekind_sum_bhk(15, 49)?.value, Rational::new(-8, 49)?);
//! let c = classify_pair(1, 15, 49)?;
//! assert!(c.cond_c && !c.equal);
//! # Ok::<(), dedekind_core::Error>(())
//! ```

pub mod confrac;
pub mod dedekind;
mod error;
pub mod exactmath;
pub mod permutation;
pub mod scan;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
