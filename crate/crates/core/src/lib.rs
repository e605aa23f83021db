//! Exact prime-characteristic commutative algebra on presented local rings
//! R = S/A, S = F_p[x_1..x_d] localized at (x_1..x_d).
//!
//! The crate decides F-purity by Fedder's colon criterion, tests and
//! enumerates the uniformly F-compatible ideals by two independent routes
//! (colon containments and Cartier/Frobenius-root operators), computes
//! splitting primes, big test ideals and big-test-ideal chains, and checks
//! the corresponding Matlis-dual statements on finite truncations of the
//! injective hull of the residue field.

pub mod decomp;
pub mod error;
pub mod factor;
pub mod field;
pub mod frobenius;
pub mod fsing;
pub mod groebner;
mod linalg;
pub mod matlis;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{GbCaps, GroebnerBasis, Ideal};
pub use monomial::{Monomial, TermOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::RingCtx;
