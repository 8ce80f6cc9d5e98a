//! Factorization of natural numbers by an extended difference-of-squares search.
//!
//! The pipeline writes an input as `N = 2^m * P` with `P` odd, reduces perfect
//! squares to their roots, and factors the remaining odd parts by scanning for
//! representations `P = b^2 - c^2 = (b + c)(b - c)`. Every odd `P` has the
//! trivial representation `P = P * 1` at `b = (P + 1) / 2`, so the scan always
//! terminates; reaching the trivial representation without any earlier hit
//! certifies `P` prime, which makes the same search double as a primality test.
//!
//! Candidates `b^2 - P` are screened before any square root is taken: a
//! perfect square in base 10 must end in one of 22 two-digit patterns, and
//! everything else is rejected from the digit pair alone.
//!
//! ```
//! use fermatx::{factorize, is_prime, Natural};
//!
//! let f = factorize(&Natural::from(176400u32), None).unwrap();
//! assert_eq!(f.to_string(), "2^4 * 3^2 * 5^2 * 7^2");
//! assert!(is_prime(&Natural::from(101u32), None).unwrap());
//! ```

pub mod arith;
mod error;
pub mod factor;
pub mod fermat;
pub mod oracle;

/// Unbounded non-negative integer; every numeric quantity in this crate is one.
pub type Natural = num_bigint::BigUint;

pub use arith::{check_square, isqrt, square_filter, SquareCheck, SQUARE_RESIDUES_MOD_100};
pub use error::{Error, Result};
pub use factor::{
    extract_twos, factorize, factorize_with_stats, reduce_square, Factorization, PrimePower,
};
pub use fermat::{
    fermat_split, is_prime, search_bounds, SearchBounds, SearchStats, SplitKind, SplitOutcome,
};
pub use oracle::{
    trial_division_factorize, trial_division_factorize_with_count, trial_division_is_prime,
};
