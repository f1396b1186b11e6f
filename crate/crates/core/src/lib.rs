//! Topological indices of divisor prime graphs.
//!
//! The divisor prime graph of `n` has the divisors of `n` as vertices, with
//! two distinct divisors adjacent when they are coprime. Eight indices of it
//! (Wiener, Harary, hyper-Wiener, both Zagreb indices, Gutman, Schultz and
//! eccentric connectivity) are available two ways:
//!
//! - [`closed_form`] evaluates them from the prime factorization alone;
//! - [`graph_oracle`] builds the graph and sums each definition directly.
//!
//! [`verify`] checks the two against each other.
//!
//! ```
//! use divprime_core::{closed_form, Factorization};
//!
//! let f = Factorization::from_u64(12).unwrap();
//! assert_eq!(closed_form::wiener(&f), 23u32.into());
//! assert_eq!(closed_form::harary(&f).to_string(), "11/1");
//! ```

pub mod arithmetic;
pub mod closed_form;
pub mod error;
pub mod graph_oracle;
pub mod rational;
pub mod report;
pub mod verify;

pub use arithmetic::{factorize, gcd, is_prime, Factorization, PrimePower};
pub use error::{Error, Result};
pub use graph_oracle::{build_graph, DistanceSummary, DivisorGraph};
pub use rational::ExactRational;
pub use report::{IndexName, IndexReport, IndexValue, Source};
pub use verify::{
    verify_n, verify_range, verify_range_with, Comparison, Status, SweepSummary,
    VerificationResult, DEFAULT_ORACLE_CAP,
};
