//! Binary forms `Σ cᵢ s^{d-i} tⁱ` with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::integer_row;
use super::{upoly, Rat};
use crate::{Error, Result};

/// A homogeneous form of nominal degree `d` in `(s, t)`.
///
/// `coeffs[i]` multiplies `s^{d-i} t^i`. The zero form keeps its nominal
/// degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    /// Panics on an empty coefficient list (there is no form of degree -1).
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![Rat::zero(); degree + 1])
    }

    /// `a·s + b·t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![a, b])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &BinaryForm) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &BinaryForm) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn mul(&self, other: &BinaryForm) -> Self {
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(s.clone(), d - i) * num_traits::pow(t.clone(), i))
            .sum()
    }

    /// `F(a·s + b·t, c·s + d·t)`.
    pub fn substitute(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Self {
        let sl = BinaryForm::linear(a.clone(), b.clone());
        let tl = BinaryForm::linear(c.clone(), d.clone());
        let deg = self.degree();
        let mut out = BinaryForm::zero(deg);
        for (i, coef) in self.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let mut term = BinaryForm::new(vec![coef.clone()]);
            for _ in 0..deg - i {
                term = term.mul(&sl);
            }
            for _ in 0..i {
                term = term.mul(&tl);
            }
            out = out.add(&term);
        }
        out
    }

    /// Multiplicity of `t` as a factor (equivalently of the root `(1:0)`).
    /// `None` for the zero form.
    pub fn t_multiplicity(&self) -> Option<usize> {
        let first = self.coeffs.iter().position(|c| !c.is_zero())?;
        Some(first)
    }

    /// `F(s, 1)` as an integer polynomial in `s`, ascending, up to a
    /// positive rational factor.
    fn dehomogenize(&self) -> Vec<BigInt> {
        let ints = integer_row(&self.coeffs);
        upoly::trim(ints.into_iter().rev().collect())
    }

    /// Homogenizes an ascending polynomial in `s` to degree `deg(p) + t_power`.
    fn homogenize(p: &[BigInt], t_power: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); t_power];
        coeffs.extend(p.iter().rev().map(|c| Rat::from_integer(c.clone())));
        Self::new(coeffs)
    }

    /// Integer coprime coefficients with a positive first nonzero entry.
    pub fn normalized(&self) -> Self {
        let ints = integer_row(&self.coeffs);
        let g = upoly::content(&ints);
        if g.is_zero() {
            return self.clone();
        }
        let lead = ints.iter().find(|c| !c.is_zero()).unwrap();
        let g = if lead.is_negative() { -g } else { g };
        Self::new(ints.iter().map(|c| Rat::from_integer(c / &g)).collect())
    }

    /// Exact quotient `self / other` as binary forms, if it exists.
    pub fn div_exact(&self, other: &BinaryForm) -> Option<BinaryForm> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return (self.degree() >= other.degree())
                .then(|| BinaryForm::zero(self.degree() - other.degree()));
        }
        let d = self.degree().checked_sub(other.degree())?;
        // long division in the s-descending coefficient order, starting from
        // the first nonzero coefficient of the divisor
        let k = other.t_multiplicity().unwrap();
        let lead = &other.coeffs[k];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); d + 1];
        for i in 0..=d {
            if rem[i + k].is_zero() {
                continue;
            }
            let c = &rem[i + k] / lead;
            for (j, o) in other.coeffs.iter().enumerate() {
                let v = &c * o;
                rem[i + j] -= v;
            }
            quot[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| BinaryForm::new(quot))
    }

    /// Discriminant `c₁² - 4c₀c₂` of a quadratic form.
    pub fn discriminant(&self) -> Rat {
        assert_eq!(self.degree(), 2, "discriminant is only defined here for quadratics");
        let c = &self.coeffs;
        &c[1] * &c[1] - super::rat(4) * &c[0] * &c[2]
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (a, 0) => pow_str("s", a),
                (0, b) => pow_str("t", b),
                (a, b) => format!("{}{}", pow_str("s", a), pow_str("t", b)),
            };
            let mag = c.abs();
            let coef = if mag.is_one() && !mono.is_empty() {
                String::new()
            } else {
                super::rat_to_string(&mag)
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coef}{mono}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn pow_str(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

/// Result of [`BinaryForm::gcd`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormGcd {
    /// Every input vanished identically.
    AllZero,
    Form(BinaryForm),
}

impl FormGcd {
    pub fn degree(&self) -> Option<usize> {
        match self {
            FormGcd::AllZero => None,
            FormGcd::Form(f) => Some(f.degree()),
        }
    }
}

impl BinaryForm {
    /// Gcd of a nonempty list of forms.
    ///
    /// Each nonzero form is dehomogenized at `t = 1`; the dehomogenizations
    /// are combined with the subresultant gcd and the lost factor of `t`
    /// (roots at `(1:0)`) is restored from the minimum `t`-multiplicity.
    pub fn gcd(forms: &[BinaryForm]) -> FormGcd {
        assert!(!forms.is_empty(), "gcd of an empty list");
        let mut acc: Option<Vec<BigInt>> = None;
        let mut t_power = usize::MAX;
        for f in forms.iter().filter(|f| !f.is_zero()) {
            t_power = t_power.min(f.t_multiplicity().unwrap());
            let dh = f.dehomogenize();
            acc = Some(match acc {
                None => upoly::primitive(&dh),
                Some(g) => upoly::gcd(&g, &dh),
            });
        }
        match acc {
            None => FormGcd::AllZero,
            Some(g) => FormGcd::Form(BinaryForm::homogenize(&g, t_power).normalized()),
        }
    }
}

/// A point `(s:t)` of ℙ¹ with coprime integer coordinates, first nonzero
/// coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    pub s: BigInt,
    pub t: BigInt,
}

impl ProjPoint {
    pub fn new(s: Rat, t: Rat) -> Self {
        assert!(!(s.is_zero() && t.is_zero()), "(0:0) is not a point");
        let ints = integer_row(&[s, t]);
        let mut g = ints[0].gcd(&ints[1]);
        let lead = if ints[0].is_zero() { &ints[1] } else { &ints[0] };
        if lead.is_negative() {
            g = -g;
        }
        ProjPoint {
            s: &ints[0] / &g,
            t: &ints[1] / &g,
        }
    }

    pub fn from_i64(s: i64, t: i64) -> Self {
        Self::new(super::rat(s), super::rat(t))
    }

    pub fn as_rats(&self) -> (Rat, Rat) {
        (Rat::from_integer(self.s.clone()), Rat::from_integer(self.t.clone()))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

/// Zero pattern of a nonzero binary form of nominal degree at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootStructure {
    /// Nonzero constant.
    NoRoot,
    SimpleRoot(ProjPoint),
    /// `roots` is `None` when the discriminant is not a rational square.
    TwoDistinctRoots {
        roots: Option<[ProjPoint; 2]>,
        discriminant: Rat,
    },
    DoubleRoot(ProjPoint),
}

impl RootStructure {
    pub fn rational_roots(&self) -> Vec<ProjPoint> {
        match self {
            RootStructure::NoRoot => vec![],
            RootStructure::SimpleRoot(p) | RootStructure::DoubleRoot(p) => vec![p.clone()],
            RootStructure::TwoDistinctRoots { roots, .. } => {
                roots.iter().flat_map(|r| r.iter().cloned()).collect()
            }
        }
    }
}

fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rat::new(n, d))
}

/// Classifies the zeros of a nonzero form of degree 0, 1 or 2 over ℚ̄,
/// giving the roots explicitly when they are rational.
pub fn quadratic_root_structure(f: &BinaryForm) -> Result<RootStructure> {
    if f.is_zero() {
        return Err(Error::InvalidInput("root structure of the zero form".into()));
    }
    let c = f.coeffs();
    match f.degree() {
        0 => Ok(RootStructure::NoRoot),
        // c0 s + c1 t vanishes at (-c1 : c0)
        1 => Ok(RootStructure::SimpleRoot(ProjPoint::new(-c[1].clone(), c[0].clone()))),
        2 => {
            let disc = f.discriminant();
            if c[0].is_zero() {
                // t (c1 s + c2 t)
                if c[1].is_zero() {
                    return Ok(RootStructure::DoubleRoot(ProjPoint::from_i64(1, 0)));
                }
                let roots = [
                    ProjPoint::from_i64(1, 0),
                    ProjPoint::new(-c[2].clone(), c[1].clone()),
                ];
                return Ok(RootStructure::TwoDistinctRoots {
                    roots: Some(sorted(roots)),
                    discriminant: disc,
                });
            }
            let two_a = super::rat(2) * &c[0];
            if disc.is_zero() {
                return Ok(RootStructure::DoubleRoot(ProjPoint::new(-&c[1] / &two_a, Rat::one())));
            }
            let roots = rational_sqrt(&disc).map(|r| {
                sorted([
                    ProjPoint::new((-&c[1] + &r) / &two_a, Rat::one()),
                    ProjPoint::new((-&c[1] - &r) / &two_a, Rat::one()),
                ])
            });
            Ok(RootStructure::TwoDistinctRoots {
                roots,
                discriminant: disc,
            })
        }
        d => Err(Error::InvalidInput(format!("root structure of a degree {d} form"))),
    }
}

fn sorted(mut r: [ProjPoint; 2]) -> [ProjPoint; 2] {
    r.sort();
    r
}
