//! Exact-arithmetic Jack symmetric functions.
//!
//! Everything here works over either the rational function field `Q(α)`
//! ([`RatFunc`]) or the rationals at a fixed numeric value of the Jack
//! parameter ([`BigRational`]); both implement [`Scalar`]. The crate is
//! `no_std` and only needs `alloc`.
//!
//! Module map:
//!
//! * [`ratfield`] exact polynomials and rational functions in `α`
//! * [`partition`] partitions, hooks, corners, complements, filtrations
//! * [`symfun`] the power-sum algebra with the Jack inner product
//! * [`jack`] Jack `P`/`Q`/`J`, Pieri coefficients, filtration construction
//! * [`vandermonde`] Laurent expansion of `∏(1 - D_i/D_j)^t` and its uses
//! * [`lr`] Littlewood–Richardson coefficients and positivity sweeps
//! * [`frobenius`] g-coefficients and the Frobenius-type power-sum formulas
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod frobenius;
pub mod jack;
pub mod lr;
pub mod partition;
pub mod ratfield;
pub mod symfun;
pub mod vandermonde;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use partition::{Partition, Square};
pub use ratfield::{Poly, RatFunc, Scalar};
pub use symfun::SymFun;
