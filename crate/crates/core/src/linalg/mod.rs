//! Exact scalars, dense rational matrices and binary forms in `(s, t)`.

mod binary;
mod matrix;
mod upoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use binary::{quadratic_root_structure, BinaryForm, FormGcd, ProjPoint, RootStructure};
pub use matrix::RatMatrix;

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optional sign, decimal digits).
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    let bad = || crate::Error::Parse(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
