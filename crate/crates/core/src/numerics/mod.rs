//! Arbitrary-precision naturals, base-10 digit views, exact harmonic
//! numbers, divisor sums and primality.
//!
//! Everything here is decimal and most-significant-digit first.

mod arith;
mod digits;
mod primes;

pub use arith::{harmonic, harmonic_range, lcm_upto, sigma, sigma_u64, HarmonicSums, Sieve, DEFAULT_SIEVE_BOUND};
pub use digits::{
    digit_product, digit_product_u64, from_digits, is_palindrome, reverse_and_add, reverse_digits, to_digits,
};
pub use primes::{is_prime, is_prime_u64, next_prime_in_class, DEFAULT_CLASS_CEILING};

use num_bigint::BigUint;
use num_rational::Ratio;

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Exact non-negative rational, always kept in lowest terms.
pub type Rational = Ratio<BigUint>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("argument must be positive")]
    Zero,
    #[error("{0} exceeds the supported range of 2^64 - 1")]
    OutOfRange(Natural),
    #[error("residue {residue} is not below modulus {modulus}")]
    BadResidue { residue: u64, modulus: u64 },
    #[error("no prime in class {residue} mod {modulus} between {start} and {ceiling}")]
    BoundExhausted { start: u64, residue: u64, modulus: u64, ceiling: u64 },
    #[error("cofactor {0} cannot be certified prime with the current sieve bound")]
    FactorBound(Natural),
}
