//! Exact computations around the moduli space of conics in `Gr(n-1, n+1)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`qpoly`]: integer polynomials in the motivic variable `q`;
//! * [`linalg`]: exact rationals, dense matrices and binary forms in `(s, t)`;
//! * [`kronecker`]: GIT stability and stratification of 2×2 Kronecker modules;
//! * [`conic`]: the Plücker conic attached to a Kronecker module, its linear
//!   envelope and the λ-family elementary modification;
//! * [`motivic`]: virtual Poincaré polynomials;
//! * [`chamber`]: the Mori chamber navigator on the seven named divisors;
//! * [`json`] and [`cli`]: the stable JSON surface used by the binary.

pub mod chamber;
pub mod cli;
pub mod conic;
mod error;
pub mod json;
pub mod kronecker;
pub mod linalg;
pub mod motivic;
pub mod qpoly;

pub use error::{Error, Result};
pub use linalg::{BinaryForm, FormGcd, Rat, RatMatrix, RootStructure};
pub use qpoly::QPoly;
