//! 2×2 Kronecker modules: matrices of linear forms on `V ≅ ℚ^{n+1}`, up to
//! the action `M ↦ A·M·B⁻¹` of `SL₂ × SL₂`.
//!
//! Stability is decided from the column minors: for `v = (s, t)` the pair of
//! forms `M v` has a `2 × (n+1)` coefficient matrix whose 2×2 minors are
//! binary quadratics. A common root of all minors is a line `v` on which
//! `M` has rank one, i.e. a `(1,1)` subrepresentation, so the module is
//! strictly semistable exactly when those minors share a root over ℚ̄ (or
//! all vanish). How many roots they share, and with what multiplicity,
//! separates the orbit types.

use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{quadratic_root_structure, BinaryForm, FormGcd, ProjPoint, Rat, RatMatrix, RootStructure};
use crate::{Error, Result};

/// An element of `V*`: the coefficients of `x₀ … x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Rat>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a linear form needs at least one variable");
        LinearForm { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| crate::linalg::rat(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Rat::zero(); n + 1])
    }

    /// The coordinate function `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut f = Self::zero(n);
        f.coeffs[i] = Rat::one();
        f
    }

    /// `n` with `dim V = n + 1`.
    pub fn n(&self) -> usize {
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

    pub fn add(&self, other: &LinearForm) -> Self {
        assert_eq!(self.n(), other.n(), "dimension mismatch");
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    /// `a·self + b·other`.
    pub fn combine(a: &Rat, f: &LinearForm, b: &Rat, g: &LinearForm) -> Self {
        f.scale(a).add(&g.scale(b))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    format!("x{i}")
                } else {
                    format!("{}*x{i}", crate::linalg::rat_to_string(c))
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A 2×2 matrix of linear forms on `V`, a point of `ℙ(V* ⊗ gl₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KroneckerModule {
    n: usize,
    entries: [[LinearForm; 2]; 2],
}

impl KroneckerModule {
    /// Rejects `n < 2`, mismatched dimensions and the zero matrix.
    pub fn new(entries: [[LinearForm; 2]; 2]) -> Result<Self> {
        let n = entries[0][0].n();
        if entries.iter().flatten().any(|f| f.n() != n) {
            return Err(Error::InvalidInput("entries have different numbers of variables".into()));
        }
        if n < 2 {
            return Err(Error::InvalidInput(format!("need n >= 2, got n = {n}")));
        }
        if entries.iter().flatten().all(LinearForm::is_zero) {
            return Err(Error::InvalidInput("the zero matrix is not a point of P(V*⊗gl2)".into()));
        }
        Ok(KroneckerModule { n, entries })
    }

    /// Convenience constructor from integer coefficient rows
    /// `[[m11, m12], [m21, m22]]`.
    pub fn from_i64s(m: [[&[i64]; 2]; 2]) -> Result<Self> {
        Self::new(m.map(|row| row.map(LinearForm::from_i64s)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &LinearForm {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[[LinearForm; 2]; 2] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        KroneckerModule {
            n: self.n,
            entries: [[e[0][0].clone(), e[1][0].clone()], [e[0][1].clone(), e[1][1].clone()]],
        }
    }

    /// `A·M·B⁻¹` for invertible constant 2×2 matrices given row-major.
    pub fn transform(&self, a: &[[Rat; 2]; 2], b: &[[Rat; 2]; 2]) -> Result<Self> {
        let det = &b[0][0] * &b[1][1] - &b[0][1] * &b[1][0];
        if det.is_zero() {
            return Err(Error::InvalidInput("B is singular".into()));
        }
        let binv = [
            [&b[1][1] / &det, -&b[0][1] / &det],
            [-&b[1][0] / &det, &b[0][0] / &det],
        ];
        let times = |l: &[[Rat; 2]; 2], m: &[[LinearForm; 2]; 2]| -> [[LinearForm; 2]; 2] {
            std::array::from_fn(|i| {
                std::array::from_fn(|j| LinearForm::combine(&l[i][0], &m[0][j], &l[i][1], &m[1][j]))
            })
        };
        let am = times(a, &self.entries);
        let amb: [[LinearForm; 2]; 2] = std::array::from_fn(|i| {
            std::array::from_fn(|j| LinearForm::combine(&binv[0][j], &am[i][0], &binv[1][j], &am[i][1]))
        });
        KroneckerModule::new(amb)
    }

    /// The row of `M·v` as degree-one binary forms: entry `i` is
    /// `s·[x_i]m_{k1} + t·[x_i]m_{k2}`.
    pub(crate) fn column_form_row(&self, k: usize, i: usize) -> BinaryForm {
        BinaryForm::linear(
            self.entries[k][0].coeffs[i].clone(),
            self.entries[k][1].coeffs[i].clone(),
        )
    }

    /// Coefficient matrix of `M·v` at a fixed column vector `v`, shape
    /// `2 × (n+1)`.
    pub fn apply(&self, v: (&Rat, &Rat)) -> RatMatrix {
        RatMatrix::from_rows(
            (0..2)
                .map(|k| {
                    (0..=self.n)
                        .map(|i| v.0 * &self.entries[k][0].coeffs[i] + v.1 * &self.entries[k][1].coeffs[i])
                        .collect()
                })
                .collect(),
        )
    }
}

impl fmt::Display for KroneckerModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// The 2×2 minors of the coefficient matrix of `M·v`, keyed by the column
/// pair `(i, j)`, `i < j`, in lexicographic order.
pub fn column_minors(m: &KroneckerModule) -> Vec<((usize, usize), BinaryForm)> {
    let n = m.n();
    let g: Vec<[BinaryForm; 2]> = (0..=n)
        .map(|i| [m.column_form_row(0, i), m.column_form_row(1, i)])
        .collect();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..=n {
        for j in i + 1..=n {
            let p = g[i][0].mul(&g[j][1]).sub(&g[j][0].mul(&g[i][1]));
            out.push(((i, j), p));
        }
    }
    out
}

fn minor_gcd(m: &KroneckerModule) -> FormGcd {
    let forms: Vec<BinaryForm> = column_minors(m).into_iter().map(|(_, f)| f).collect();
    BinaryForm::gcd(&forms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Unstable,
    StrictlySemistable,
    Stable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Unstable => "unstable",
            Verdict::StrictlySemistable => "strictly_semistable",
            Verdict::Stable => "stable",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilizerKind {
    /// `SL₂ ⋉ ℤ₂`, scalar matrices.
    Sl2SemidirectZ2,
    /// `ℂ* ⋉ ℤ₂`, non-scalar diagonal matrices.
    CstarSemidirectZ2,
    Finite,
}

impl StabilizerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StabilizerKind::Sl2SemidirectZ2 => "SL2_Z2",
            StabilizerKind::CstarSemidirectZ2 => "Cstar_Z2",
            StabilizerKind::Finite => "finite",
        }
    }
}

/// Certificate attached to a non-stable verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Nonzero `v` with `M v = 0`: a zero column after a change of basis.
    ZeroColumn(Vec<Rat>),
    /// Nonzero `w` with `wᵀ M = 0`: a zero row after a change of basis.
    ZeroRow(Vec<Rat>),
    /// Rational `v = (s:t)` with `rank(M v) ≤ 1`: a `(1,1)` subrepresentation.
    RankDrop(ProjPoint),
    /// The destabilizing lines are irrational; the minor gcd certifies them.
    MinorGcd(BinaryForm),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityClass {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// `None` for unstable points.
    pub closed_orbit: Option<bool>,
    /// Present only for closed orbits.
    pub stabilizer: Option<StabilizerKind>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stratum {
    /// Equivalent to a scalar matrix `g·Id`.
    Y0,
    /// Upper triangular with proportional diagonal, not scalar.
    Z0,
    /// Non-scalar diagonal.
    Y1,
    /// Upper triangular, none of the above.
    Z1,
    StableLocus,
    UnstableLocus,
}

impl Stratum {
    pub fn as_str(self) -> &'static str {
        match self {
            Stratum::Y0 => "Y0",
            Stratum::Z0 => "Z0",
            Stratum::Y1 => "Y1",
            Stratum::Z1 => "Z1",
            Stratum::StableLocus => "stable",
            Stratum::UnstableLocus => "unstable",
        }
    }
}

/// Zero column or zero row witness, if `M` is unstable.
fn unstable_witness(m: &KroneckerModule) -> Option<Witness> {
    let n = m.n();
    let e = &m.entries;
    // columns of M stacked as vectors of length 2(n+1)
    let cols = RatMatrix::from_rows(
        (0..2)
            .map(|c| e[0][c].coeffs.iter().chain(&e[1][c].coeffs).cloned().collect())
            .collect(),
    );
    if let Some(v) = cols.left_nullspace().into_iter().next() {
        return Some(Witness::ZeroColumn(v));
    }
    let rows = RatMatrix::from_rows(
        (0..2)
            .map(|r| e[r][0].coeffs.iter().chain(&e[r][1].coeffs).cloned().collect())
            .collect(),
    );
    debug_assert_eq!(rows.cols(), 2 * (n + 1));
    rows.left_nullspace().into_iter().next().map(Witness::ZeroRow)
}

fn stratum_of_semistable(g: &FormGcd) -> Stratum {
    match g {
        FormGcd::AllZero => Stratum::Y0,
        FormGcd::Form(f) => match f.degree() {
            0 => Stratum::StableLocus,
            1 => Stratum::Z1,
            2 => match quadratic_root_structure(f).expect("gcd is nonzero") {
                RootStructure::DoubleRoot(_) => Stratum::Z0,
                RootStructure::TwoDistinctRoots { .. } => Stratum::Y1,
                other => unreachable!("degree-two gcd with root structure {other:?}"),
            },
            d => unreachable!("minors have degree 2, gcd has degree {d}"),
        },
    }
}

/// Location of `M` in `X^ss = Y₀ ⊔ Z₀ ⊔ Y₁ ⊔ Z₁ ⊔ X^s`, or the unstable locus.
pub fn stratify(m: &KroneckerModule) -> Stratum {
    if unstable_witness(m).is_some() {
        return Stratum::UnstableLocus;
    }
    stratum_of_semistable(&minor_gcd(m))
}

/// GIT verdict for the `SL₂ × SL₂` action.
pub fn classify_stability(m: &KroneckerModule) -> StabilityClass {
    if let Some(w) = unstable_witness(m) {
        return StabilityClass {
            verdict: Verdict::Unstable,
            witness: Some(w),
            closed_orbit: None,
            stabilizer: None,
        };
    }
    let g = minor_gcd(m);
    let stratum = stratum_of_semistable(&g);
    if stratum == Stratum::StableLocus {
        return StabilityClass {
            verdict: Verdict::Stable,
            witness: None,
            closed_orbit: Some(true),
            stabilizer: Some(StabilizerKind::Finite),
        };
    }
    let witness = match &g {
        // every line works; report (1:0)
        FormGcd::AllZero => Witness::RankDrop(ProjPoint::from_i64(1, 0)),
        FormGcd::Form(f) => match quadratic_root_structure(f)
            .expect("gcd is nonzero")
            .rational_roots()
            .into_iter()
            .next()
        {
            Some(p) => Witness::RankDrop(p),
            None => Witness::MinorGcd(f.clone()),
        },
    };
    let (closed_orbit, stabilizer) = match stratum {
        Stratum::Y0 => (true, Some(StabilizerKind::Sl2SemidirectZ2)),
        Stratum::Y1 => (true, Some(StabilizerKind::CstarSemidirectZ2)),
        _ => (false, None),
    };
    StabilityClass {
        verdict: Verdict::StrictlySemistable,
        witness: Some(witness),
        closed_orbit: Some(closed_orbit),
        stabilizer,
    }
}

/// A quadratic form on `V`, stored as its symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricForm {
    gram: RatMatrix,
}

impl QuadricForm {
    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn n(&self) -> usize {
        self.gram.rows() - 1
    }

    /// `Σ Q_ij x_i x_j` evaluated at a point.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        let k = self.gram.rows();
        (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| &self.gram[(i, j)] * &x[i] * &x[j])
            .sum()
    }

    /// Product of two linear forms as a quadric.
    fn product(f: &LinearForm, g: &LinearForm) -> RatMatrix {
        let k = f.coeffs.len();
        let half = crate::linalg::ratio(1, 2);
        let mut m = RatMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = (&f.coeffs[i] * &g.coeffs[j] + &f.coeffs[j] * &g.coeffs[i]) * &half;
            }
        }
        m
    }
}

/// `det M = m₁₁m₂₂ − m₁₂m₂₁ ∈ Sym²V*`.
pub fn det_quadric(m: &KroneckerModule) -> QuadricForm {
    let e = &m.entries;
    let a = QuadricForm::product(&e[0][0], &e[1][1]);
    let b = QuadricForm::product(&e[0][1], &e[1][0]);
    let k = a.rows();
    let mut gram = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = &a[(i, j)] - &b[(i, j)];
        }
    }
    debug_assert!(gram.is_symmetric());
    QuadricForm { gram }
}

pub fn quadric_rank(q: &QuadricForm) -> usize {
    q.gram.rank()
}

/// Shape of the cokernel sheaf of a semistable module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CokernelKind {
    /// `I_{ℙ^{n-2}, Q}(1)` for a quadric `Q` of rank 3 or 4.
    TwistedIdealOfQuadric(usize),
    /// Extension of the structure sheaves of two hyperplanes (`rank det ≤ 2`).
    PlanePairExtension,
}

pub fn cokernel_kind(m: &KroneckerModule) -> Result<CokernelKind> {
    if unstable_witness(m).is_some() {
        return Err(Error::NotSemistable);
    }
    match quadric_rank(&det_quadric(m)) {
        r @ (3 | 4) => Ok(CokernelKind::TwistedIdealOfQuadric(r)),
        _ => Ok(CokernelKind::PlanePairExtension),
    }
}
