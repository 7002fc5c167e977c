//! Exact continued-fraction arithmetic on rationals in `[0, 1)` and the
//! bijection between those rationals and pairs `(n, m)` classifying
//! extensions `0 -> K (+) K -> E -> M_n (x) C(T) -> 0` of index `(-1, 1)`.
//!
//! The pipeline runs `rational -> simple continued fraction -> k-sequence ->
//! (phi_h, sum of phi_l)` one way and a modified Euclidean algorithm the other
//! way. Brute-force oracles for the path counts and for the quotient group
//! `Z^2 / (Za + nZ^2)` live alongside the closed forms they check.

pub mod continued_fractions;
pub mod correspondence;
mod error;
pub mod exact_arith;
pub mod extension_invariants;
pub mod path_category;

pub use error::{Error, Result};
