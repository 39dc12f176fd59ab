//! Exact linear algebra over prime fields.

mod matrix;
mod prime;
mod subspace;

pub use matrix::FpMatrix;
pub use prime::{is_prime, prime_divisors, prime_power, Prime, MAX_PRIME};
pub use subspace::Subspace;
