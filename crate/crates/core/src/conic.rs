//! The conic in `ℙ(∧²V*)` attached to a Kronecker module.
//!
//! Column 1 of `M` pairs with `s` and column 2 with `t`: the `2 × (n+1)`
//! matrix of linear binary forms is `G_{ki} = s·[x_i]m_{k1} + t·[x_i]m_{k2}`
//! and the Plücker coordinates are its 2×2 minors `p_{ij}`, `i < j`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::kronecker::{column_minors, KroneckerModule, LinearForm};
use crate::linalg::{quadratic_root_structure, BinaryForm, FormGcd, Rat, RatMatrix, RootStructure};
use crate::{Error, Result};

/// Plücker coordinates `p_I(s, t)` of a conic, one binary quadratic per
/// index pair `I = (i, j)` with `i < j ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerConic {
    n: usize,
    coords: BTreeMap<(usize, usize), BinaryForm>,
}

impl PluckerConic {
    /// Fills in missing pairs with zero; rejects out-of-range or unordered
    /// pairs and forms that are not quadratic.
    pub fn new(n: usize, coords: BTreeMap<(usize, usize), BinaryForm>) -> Result<Self> {
        for (&(i, j), f) in &coords {
            if !(i < j && j <= n) {
                return Err(Error::InvalidInput(format!("bad Plücker index ({i},{j}) for n = {n}")));
            }
            if f.degree() != 2 {
                return Err(Error::InvalidInput(format!("p_{{{i},{j}}} has degree {}", f.degree())));
            }
        }
        let mut full = BTreeMap::new();
        for i in 0..=n {
            for j in i + 1..=n {
                full.insert((i, j), coords.get(&(i, j)).cloned().unwrap_or_else(|| BinaryForm::zero(2)));
            }
        }
        Ok(PluckerConic { n, coords: full })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &BTreeMap<(usize, usize), BinaryForm> {
        &self.coords
    }

    /// `p_{ij}` with the sign convention `p_{ji} = -p_{ij}`; `p_{ii} = 0`.
    pub fn get(&self, i: usize, j: usize) -> BinaryForm {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coords[&(i, j)].clone(),
            std::cmp::Ordering::Greater => self.coords[&(j, i)].scale(&-Rat::from_integer(1.into())),
            std::cmp::Ordering::Equal => BinaryForm::zero(2),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.values().all(BinaryForm::is_zero)
    }

    fn forms(&self) -> Vec<BinaryForm> {
        self.coords.values().cloned().collect()
    }

    /// The three-term Plücker relations `p_ij p_kl − p_ik p_jl + p_il p_jk`
    /// for `i < j < k < l`, as quartic binary forms. All vanish for a curve
    /// on `Gr(2, V*)`.
    pub fn plucker_relations(&self) -> Vec<((usize, usize, usize, usize), BinaryForm)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        let p = |a, b| &self.coords[&(a, b)];
                        let r = p(i, j)
                            .mul(p(k, l))
                            .sub(&p(i, k).mul(p(j, l)))
                            .add(&p(i, l).mul(p(j, k)));
                        out.push(((i, j, k, l), r));
                    }
                }
            }
        }
        out
    }
}

/// Plücker coordinates of the conic of `M`.
pub fn plucker_conic(m: &KroneckerModule) -> PluckerConic {
    PluckerConic {
        n: m.n(),
        coords: column_minors(m).into_iter().collect(),
    }
}

/// The linear span of a conic inside `∧²V*`, as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    basis: Vec<Vec<Rat>>,
}

impl Envelope {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Vectors indexed by the pairs `(i, j)` in lexicographic order.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }
}

/// Span of the `s²`, `st` and `t²` coefficient vectors.
pub fn envelope(c: &PluckerConic) -> Result<Envelope> {
    if c.is_zero() {
        return Err(Error::ZeroConic);
    }
    let rows: Vec<Vec<Rat>> = (0..3)
        .map(|k| c.coords.values().map(|f| f.coeffs()[k].clone()).collect())
        .collect();
    let (r, pivots) = RatMatrix::from_rows(rows).rref();
    let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    Ok(Envelope { basis })
}

/// Degree of the parametrised curve: 2 minus the degree of the common factor
/// of all coordinates.
pub fn conic_degree(c: &PluckerConic) -> Result<usize> {
    match BinaryForm::gcd(&c.forms()) {
        FormGcd::AllZero => Err(Error::ZeroConic),
        FormGcd::Form(g) => Ok(2 - g.degree()),
    }
}

/// A polynomial in `λ` whose coefficients are linear forms, one per matrix
/// entry. `entries[r][c][d]` is the `λ^d` coefficient of `m_{rc}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaFamily {
    n: usize,
    entries: [[Vec<LinearForm>; 2]; 2],
}

impl LambdaFamily {
    pub fn new(entries: [[Vec<LinearForm>; 2]; 2]) -> Result<Self> {
        let n = entries
            .iter()
            .flatten()
            .flatten()
            .map(LinearForm::n)
            .next()
            .ok_or_else(|| Error::InvalidInput("family has no coefficients".into()))?;
        if entries.iter().flatten().flatten().any(|f| f.n() != n) {
            return Err(Error::InvalidInput("entries have different numbers of variables".into()));
        }
        if n < 2 {
            return Err(Error::InvalidInput(format!("need n >= 2, got n = {n}")));
        }
        Ok(LambdaFamily { n, entries })
    }

    /// A family that does not depend on `λ`.
    pub fn constant(m: &KroneckerModule) -> Self {
        LambdaFamily {
            n: m.n(),
            entries: m.entries().clone().map(|row| row.map(|f| vec![f])),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[[Vec<LinearForm>; 2]; 2] {
        &self.entries
    }

    /// The matrix at a given `λ`; `None` if it is the zero matrix.
    pub fn at(&self, lambda: &Rat) -> Option<KroneckerModule> {
        let e = self.entries.clone().map(|row| {
            row.map(|poly| {
                let mut acc = LinearForm::zero(self.n);
                let mut pow = Rat::from_integer(1.into());
                for f in &poly {
                    acc = acc.add(&f.scale(&pow));
                    pow = &pow * lambda;
                }
                acc
            })
        });
        KroneckerModule::new(e).ok()
    }

    /// `p_I(λ; s, t)` as a list of quadratics indexed by `λ`-degree.
    fn wedge(&self) -> BTreeMap<(usize, usize), Vec<BinaryForm>> {
        let n = self.n;
        // G_{ki}(λ) as polynomials in λ of linear binary forms
        let g = |k: usize, i: usize| -> Vec<BinaryForm> {
            let (c1, c2) = (&self.entries[k][0], &self.entries[k][1]);
            let len = c1.len().max(c2.len());
            (0..len)
                .map(|d| {
                    let a = c1.get(d).map_or_else(Rat::zero, |f| f.coeffs()[i].clone());
                    let b = c2.get(d).map_or_else(Rat::zero, |f| f.coeffs()[i].clone());
                    BinaryForm::linear(a, b)
                })
                .collect()
        };
        let lambda_mul = |x: &[BinaryForm], y: &[BinaryForm]| -> Vec<BinaryForm> {
            if x.is_empty() || y.is_empty() {
                return Vec::new();
            }
            let mut out = vec![BinaryForm::zero(2); x.len() + y.len() - 1];
            for (i, a) in x.iter().enumerate() {
                for (j, b) in y.iter().enumerate() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
            out
        };
        let lambda_sub = |x: Vec<BinaryForm>, y: Vec<BinaryForm>| -> Vec<BinaryForm> {
            let len = x.len().max(y.len());
            (0..len)
                .map(|d| {
                    let a = x.get(d).cloned().unwrap_or_else(|| BinaryForm::zero(2));
                    let b = y.get(d).cloned().unwrap_or_else(|| BinaryForm::zero(2));
                    a.sub(&b)
                })
                .collect()
        };
        let rows: Vec<[Vec<BinaryForm>; 2]> = (0..=n).map(|i| [g(0, i), g(1, i)]).collect();
        let mut out = BTreeMap::new();
        for i in 0..=n {
            for j in i + 1..=n {
                let p = lambda_sub(
                    lambda_mul(&rows[i][0], &rows[j][1]),
                    lambda_mul(&rows[j][0], &rows[i][1]),
                );
                out.insert((i, j), p);
            }
        }
        out
    }

    /// `F₀` at `λ`: the conic of the family member, computed through the
    /// `λ`-expansion of the wedge.
    pub fn wedge_at(&self, lambda: &Rat) -> PluckerConic {
        let coords = self
            .wedge()
            .into_iter()
            .map(|(k, poly)| {
                let mut acc = BinaryForm::zero(2);
                let mut pow = Rat::from_integer(1.into());
                for f in &poly {
                    acc = acc.add(&f.scale(&pow));
                    pow = &pow * lambda;
                }
                (k, acc)
            })
            .collect();
        PluckerConic { n: self.n, coords }
    }
}

/// Outcome of dividing the family's wedge by the largest power of `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modification {
    /// Exponent of `λ` removed from every coordinate.
    pub k: usize,
    /// `F₁(0)`.
    pub conic: PluckerConic,
    /// Common zeros of the modified coordinates, where the map still has
    /// base points; `None` if there are none.
    pub base_points: Option<RootStructure>,
}

/// Elementary modification along `λ = 0`: divide all `p_I(λ)` by `λ^k` for
/// the largest such `k` and restrict to `λ = 0`.
pub fn modify_family(f: &LambdaFamily) -> Result<Modification> {
    let wedge = f.wedge();
    let k = wedge
        .values()
        .filter_map(|poly| poly.iter().position(|c| !c.is_zero()))
        .min()
        .ok_or(Error::IdenticallyZero)?;
    let coords: BTreeMap<_, _> = wedge
        .into_iter()
        .map(|(idx, poly)| (idx, poly.get(k).cloned().unwrap_or_else(|| BinaryForm::zero(2))))
        .collect();
    let conic = PluckerConic { n: f.n, coords };
    let base_points = match BinaryForm::gcd(&conic.forms()) {
        FormGcd::Form(g) if g.degree() > 0 => Some(quadratic_root_structure(&g)?),
        _ => None,
    };
    Ok(Modification { k, conic, base_points })
}
