//! Exact enumerative combinatorics of quasi-Yamanouchi tableaux.
//!
//! A quasi-Yamanouchi tableau is a semistandard Young tableau in which, for
//! every value i that appears, the leftmost i sits weakly left of some i-1.
//! These fillings refine standard Young tableaux and index exactly the
//! nonzero terms of the fundamental quasisymmetric expansion of a Schur
//! polynomial.
//!
//! Modules:
//! - [`partition`]: partitions, diagram geometry, hooks, contents, Durfee size
//! - [`tableau`]: the [`Tableau`] type, SSYT/SYT/QYT predicates, exhaustive
//!   generators, and explicit witness constructions
//! - [`bijection`]: destandardization, restandardization, conjugation, and
//!   the max-value symmetry bijection
//! - [`formula`]: hook-length and hook-content counts, the closed-form
//!   product formula for Durfee-size-2 shapes, and exact identity checks
//! - [`schur`]: sparse polynomials for checking the Schur expansions
//! - [`factor`]: exact integer factorization for the large-prime reports
//!
//! Counting is exact everywhere: counts are [`BigUint`] and every pending
//! division inside a closed form is checked to be exact.
//!
//! ```
//! use qyt_core::formula::{hook_length_count, qyt_count};
//! use qyt_core::tableau::{enumerate_qyt, CountMode};
//! use qyt_core::{BigUint, Partition};
//!
//! let shape: Partition = "3,2,1".parse().unwrap();
//! // Exact-max counts partition the standard fillings by run count.
//! let total: BigUint = (1..=6).map(|m| qyt_count(&shape, CountMode::Eq(m))).sum();
//! assert_eq!(total, hook_length_count(&shape));
//! // Streams are lazy; counting consumes them without materializing.
//! assert_eq!(enumerate_qyt(&shape, CountMode::Eq(3)).count(), 8);
//! ```

pub mod bijection;
pub mod error;
pub mod factor;
pub mod formula;
pub mod partition;
pub mod schur;
pub mod tableau;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use partition::{partitions_of, Cell, Durfee2Frame, Partition};
pub use tableau::{CountMode, DescentSet, Tableau};
