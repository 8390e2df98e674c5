//! Rational quartic residue symbols and constructive checks of the rational
//! quartic reciprocity laws built on them.
//!
//! - [`arith`]: primality, factorization, Jacobi symbols, modular square roots
//! - [`quartic`]: `(a/p)_4`, `(p/2)_4` and their composite extensions
//! - [`two_squares`]: canonical `m = a² + b²`
//! - [`alpha`]: the generator `α = A + B√m` of the quartic field of conductor `m`
//! - [`pell`]: units of norm −1 and their residue symbols
//! - [`laws`]: verifiers, oracle cross-checks and range sweeps
//! - [`genus`]: C4 splittings of discriminants that are sums of two squares
//! - [`oracles`]: brute-force references used by tests and `--oracle` mode
//!
//! All arithmetic is exact; nothing in the crate touches floating point.

pub mod alpha;
pub mod arith;
pub mod error;
pub mod genus;
pub mod laws;
pub mod modulus;
pub mod oracles;
pub mod pell;
pub mod quartic;
pub mod two_squares;

pub use alpha::{alpha_triple, eval_alpha_symbol, AlphaTriple};
pub use arith::{factorize, is_prime, jacobi, mod_pow, sqrt_mod_prime, Factorization, OddPrime, Sign};
pub use error::{Error, Result};
pub use modulus::FourOneModulus;
pub use pell::{
    eval_unit_symbol, eval_unit_symbol_composite, fundamental_negative_unit, unit_times_sqrt_as_alpha, PellUnit,
};
pub use quartic::{quartic_symbol_composite, quartic_symbol_prime, quartic_symbol_two};
pub use two_squares::{all_two_squares, cornacchia_prime, two_squares_composite, TwoSquaresRep};
