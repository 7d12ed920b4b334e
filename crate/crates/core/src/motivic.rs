//! Virtual Poincaré polynomials, in the variable `q` of complex dimension
//! (so `P(ℙⁿ) = 1 + q + … + qⁿ`).
//!
//! Every rational formula is evaluated as a numerator product followed by an
//! exact division; a remainder is reported as [`Error::NotDivisible`].

use std::fmt;

use num_bigint::BigInt;

use crate::{Error, QPoly, Result};

/// The spaces the formulas below are stated for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceId {
    ProjSpace(usize),
    /// `Gr(k, N)`: k-planes in an N-dimensional space.
    Grassmannian { k: usize, n: usize },
    /// `M̄₀,₀(ℙ^{n-1}, 2)`.
    KontsevichProj(usize),
    /// `M̄₀,₀(Gr(n-1, n+1), 2)`.
    MbarGr(usize),
    Sym2Of(Box<SpaceId>),
    ProductOf(Box<SpaceId>, Box<SpaceId>),
    /// The double symmetroid `T₄(n)` for `dim V = n + 1`.
    T4(usize),
    /// `M_{ℙ²}(4m+2)`.
    MP2FourMPlusTwo,
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceId::ProjSpace(n) => write!(f, "P^{n}"),
            SpaceId::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            SpaceId::KontsevichProj(n) => write!(f, "Mbar_0,0(P^{},2)", n.saturating_sub(1)),
            SpaceId::MbarGr(n) => write!(f, "Mbar_0,0(Gr({},{}),2)", n.saturating_sub(1), n + 1),
            SpaceId::Sym2Of(x) => write!(f, "Sym^2({x})"),
            SpaceId::ProductOf(a, b) => write!(f, "{a} x {b}"),
            SpaceId::T4(n) => write!(f, "T4({n})"),
            SpaceId::MP2FourMPlusTwo => write!(f, "M_P2(4m+2)"),
        }
    }
}

/// `P(X)` for any supported space.
pub fn poincare(space: &SpaceId) -> Result<QPoly> {
    match space {
        SpaceId::ProjSpace(n) => Ok(proj_space_poincare(*n)),
        SpaceId::Grassmannian { k, n } => grassmannian_poincare(*k, *n),
        SpaceId::KontsevichProj(n) => kontsevich_proj_poincare(*n),
        SpaceId::MbarGr(n) => mbar_gr_poincare(*n),
        SpaceId::Sym2Of(x) => sym2_poincare(&poincare(x)?),
        SpaceId::ProductOf(a, b) => Ok(poincare(a)? * poincare(b)?),
        SpaceId::T4(n) => t4_poincare(*n),
        SpaceId::MP2FourMPlusTwo => mp2_4m2_poincare(),
    }
}

fn product_of_one_minus(exps: &[usize]) -> QPoly {
    exps.iter().fold(QPoly::one(), |acc, &k| acc * QPoly::one_minus_q_pow(k))
}

/// `1 + q + … + qⁿ`.
pub fn proj_space_poincare(n: usize) -> QPoly {
    QPoly::one_minus_q_pow(n + 1)
        .exact_div(&QPoly::one_minus_q_pow(1))
        .expect("geometric series divides")
}

/// Gaussian binomial `[N choose k]_q`.
pub fn grassmannian_poincare(k: usize, n: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::InvalidInput(format!("Gr({k},{n}) needs k <= N")));
    }
    let num: Vec<usize> = (0..k).map(|i| n - i).collect();
    let den: Vec<usize> = (1..=k).collect();
    product_of_one_minus(&num).exact_div(&product_of_one_minus(&den))
}

/// `(1-q^{n+1})(1-qⁿ)(1-q^{n-1}) / ((1-q)²(1-q²))`.
pub fn kontsevich_proj_poincare(n: usize) -> Result<QPoly> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("Mbar_0,0(P^{{n-1}},2) needs n >= 2, got {n}")));
    }
    product_of_one_minus(&[n + 1, n, n - 1]).exact_div(&product_of_one_minus(&[1, 1, 2]))
}

/// `[(1+q^{n+1})(1+q³) − q(1+q)(q²+q^{n−1})](1−q^{n+1})(1−qⁿ)(1−q^{n−1})
///  / ((1−q)³(1−q²)²)`.
pub fn mbar_gr_poincare(n: usize) -> Result<QPoly> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("Mbar_0,0(Gr(n-1,n+1),2) needs n >= 3, got {n}")));
    }
    let one = BigInt::from(1);
    let q = |k| QPoly::monomial(one.clone(), k);
    let bracket = (QPoly::one() + q(n + 1)) * (QPoly::one() + q(3))
        - q(1) * (QPoly::one() + q(1)) * (q(2) + q(n - 1));
    let num = bracket * product_of_one_minus(&[n + 1, n, n - 1]);
    num.exact_div(&product_of_one_minus(&[1, 1, 1, 2, 2]))
}

/// `P(Sym²X) = ½(P(X)(q)² + P(X)(q²))`.
pub fn sym2_poincare(p: &QPoly) -> Result<QPoly> {
    (p * p + p.subst_q_power(2)).exact_scalar_div(&BigInt::from(2))
}

/// `P(N₂)` for the stratum of rank-two quadrics on `ℙⁿ`, written as in the
/// source: `½(P(ℙⁿ)² + (1−q^{2n+2})/(1−q²)) − P(ℙⁿ)`.
fn rank_two_quadrics(n: usize) -> Result<QPoly> {
    let pn = proj_space_poincare(n);
    let at_q2 = QPoly::one_minus_q_pow(2 * n + 2).exact_div(&QPoly::one_minus_q_pow(2))?;
    Ok((&pn * &pn + at_q2).exact_scalar_div(&BigInt::from(2))? - pn)
}

/// Virtual Poincaré polynomial of the double symmetroid, from the
/// partial desingularization `M → T₄`:
///
/// `P(M) − (P(M̄₀,₀(ℙ^{n−1},2)) − 1)·P(ℙⁿ) − (P(ℙ^{n−2})² − 1)·P(N₂)`
///
/// where `ℙⁿ = ℙV*` is the stratum of rank-one quadrics.
pub fn t4_poincare(n: usize) -> Result<QPoly> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("T4(n) needs n >= 3, got {n}")));
    }
    let m = mbar_gr_poincare(n)?;
    let rank_one_fibre = kontsevich_proj_poincare(n)? - QPoly::one();
    let rank_two_fibre = proj_space_poincare(n - 2).pow(2) - QPoly::one();
    Ok(m - rank_one_fibre * proj_space_poincare(n) - rank_two_fibre * rank_two_quadrics(n)?)
}

/// Coefficients (ascending) of `P(M_{ℙ²}(4m+2))` as published.
const MP2_4M2_GOLDEN: [i64; 18] = [1, 2, 5, 9, 12, 12, 12, 10, 10, 9, 10, 10, 11, 11, 9, 5, 2, 1];

/// `(P(ℙ¹⁴) − P(ℙ²)) + P(ℙ²×ℙ²)(P(ℙ¹²) − 1) + P(T₄(5))`, checked against the
/// published polynomial.
pub fn mp2_4m2_poincare() -> Result<QPoly> {
    let p2 = proj_space_poincare(2);
    let value = (proj_space_poincare(14) - &p2)
        + (&p2 * &p2) * (proj_space_poincare(12) - QPoly::one())
        + t4_poincare(5)?;
    let golden = QPoly::from_i64s(&MP2_4M2_GOLDEN);
    if value != golden {
        return Err(Error::Mismatch(format!("computed {value}, published {golden}")));
    }
    Ok(value)
}
