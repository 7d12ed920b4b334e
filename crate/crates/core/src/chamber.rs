//! Mori chamber lookup on the effective cone of `M̄₀,₀(Gr(n−1, n+1), 2)`.
//!
//! The effective cone is simplicial on `D_unb`, `D_deg`, `Δ`. Every
//! birational model `M(D)` is attained on a cone spanned by some of the
//! seven named divisors, so the chambers are read off a planar cross-section:
//! a divisor `Σ cᵢ Dᵢ` is sent to the weighted barycenter of the generators'
//! cross-section points and located in the cell complex by exact
//! orientation tests.
//!
//! Cross-section coordinates: `D_unb = (0,0)`, `D_deg = (10,0)`,
//! `Δ = (5,7)`, `T = (5,14/3)`, `H_{σ1,1} = (5/2,7/3)`, `H_{σ2} = (15/2,7/3)`
//! and `P = (5,14/9)`, the intersection of `H_{σ1,1}D_deg` with `H_{σ2}D_unb`.
//! `D_unb, H_{σ1,1}, T` and `D_deg, H_{σ2}, T` are collinear.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::linalg::{ratio, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Dunb,
    Ddeg,
    Delta,
    T,
    H11,
    H2,
    P,
}

impl Generator {
    pub const ALL: [Generator; 7] = [
        Generator::Dunb,
        Generator::Ddeg,
        Generator::Delta,
        Generator::T,
        Generator::H11,
        Generator::H2,
        Generator::P,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Generator::Dunb => "Dunb",
            Generator::Ddeg => "Ddeg",
            Generator::Delta => "Delta",
            Generator::T => "T",
            Generator::H11 => "H11",
            Generator::H2 => "H2",
            Generator::P => "P",
        }
    }

    /// Cross-section point.
    pub fn coord(self) -> (Rat, Rat) {
        match self {
            Generator::Dunb => (ratio(0, 1), ratio(0, 1)),
            Generator::Ddeg => (ratio(10, 1), ratio(0, 1)),
            Generator::Delta => (ratio(5, 1), ratio(7, 1)),
            Generator::T => (ratio(5, 1), ratio(14, 3)),
            Generator::H11 => (ratio(5, 2), ratio(7, 3)),
            Generator::H2 => (ratio(15, 2), ratio(7, 3)),
            Generator::P => (ratio(5, 1), ratio(14, 9)),
        }
    }

    /// Image under the duality `Gr(n−1, V) ≅ Gr(2, V*)`: the reflection in
    /// the vertical line through `Δ` and `P`.
    pub fn dual(self) -> Generator {
        match self {
            Generator::Dunb => Generator::Ddeg,
            Generator::Ddeg => Generator::Dunb,
            Generator::H11 => Generator::H2,
            Generator::H2 => Generator::H11,
            g => g,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown divisor generator {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NMode {
    /// `n = 3`, `Gr(2, 4)`.
    Eq3,
    #[default]
    Gt3,
}

impl NMode {
    pub fn as_str(self) -> &'static str {
        match self {
            NMode::Eq3 => "eq3",
            NMode::Gt3 => "gt3",
        }
    }
}

impl FromStr for NMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq3" => Ok(NMode::Eq3),
            "gt3" => Ok(NMode::Gt3),
            _ => Err(Error::Parse(format!("n_mode must be \"eq3\" or \"gt3\", got {s:?}"))),
        }
    }
}

/// A nonnegative rational combination of the named divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorCombo {
    coeffs: BTreeMap<Generator, Rat>,
    mode: NMode,
}

impl DivisorCombo {
    /// Zero coefficients are dropped. Negative coefficients are invalid;
    /// an all-zero combination is [`Error::ZeroDivisor`].
    pub fn new(coeffs: impl IntoIterator<Item = (Generator, Rat)>, mode: NMode) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (g, c) in coeffs {
            if c.is_negative() {
                return Err(Error::InvalidInput(format!("coefficient of {g} is negative")));
            }
            if !c.is_zero() {
                *map.entry(g).or_insert_with(Rat::zero) += c;
            }
        }
        if map.is_empty() {
            return Err(Error::ZeroDivisor);
        }
        Ok(DivisorCombo { coeffs: map, mode })
    }

    pub fn from_i64s(coeffs: &[(Generator, i64)], mode: NMode) -> Result<Self> {
        Self::new(coeffs.iter().map(|&(g, c)| (g, ratio(c, 1))), mode)
    }

    pub fn coeffs(&self) -> &BTreeMap<Generator, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, g: Generator) -> Rat {
        self.coeffs.get(&g).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn mode(&self) -> NMode {
        self.mode
    }

    /// Weighted barycenter in the cross-section.
    pub fn point(&self) -> (Rat, Rat) {
        let total: Rat = self.coeffs.values().sum();
        let (mut x, mut y) = (Rat::zero(), Rat::zero());
        for (g, c) in &self.coeffs {
            let (gx, gy) = g.coord();
            x += c * gx;
            y += c * gy;
        }
        (x / &total, y / &total)
    }
}

/// Swaps `D_unb ↔ D_deg` and `H_{σ1,1} ↔ H_{σ2}`; fixes `Δ`, `T`, `P`.
pub fn duality_reflect(d: &DivisorCombo) -> DivisorCombo {
    DivisorCombo {
        coeffs: d.coeffs.iter().map(|(g, c)| (g.dual(), c.clone())).collect(),
        mode: d.mode,
    }
}

/// An open cell of the complex, vertices in [`Generator`] order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(Vec<Generator>);

impl Cell {
    pub fn new(mut gens: Vec<Generator>) -> Self {
        assert!((1..=3).contains(&gens.len()));
        gens.sort();
        gens.dedup();
        Cell(gens)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    fn contains(&self, p: &(Rat, Rat)) -> bool {
        let pts: Vec<(Rat, Rat)> = self.0.iter().map(|g| g.coord()).collect();
        match pts.as_slice() {
            [a] => a == p,
            [a, b] => {
                orient(a, b, p).is_zero() && {
                    // strictly between a and b
                    let dot_a = (&p.0 - &a.0) * (&b.0 - &a.0) + (&p.1 - &a.1) * (&b.1 - &a.1);
                    let dot_b = (&p.0 - &b.0) * (&a.0 - &b.0) + (&p.1 - &b.1) * (&a.1 - &b.1);
                    dot_a.is_positive() && dot_b.is_positive()
                }
            }
            [a, b, c] => {
                let s = [orient(a, b, p), orient(b, c, p), orient(c, a, p)];
                s.iter().all(Signed::is_positive) || s.iter().all(Signed::is_negative)
            }
            _ => unreachable!(),
        }
    }

    /// Barycenter of the cell's vertices.
    pub fn barycenter(&self) -> (Rat, Rat) {
        let k = Rat::from_integer(self.0.len().into());
        let (x, y) = self.0.iter().map(|g| g.coord()).fold(
            (Rat::zero(), Rat::zero()),
            |(x, y), (gx, gy)| (x + gx, y + gy),
        );
        (x / &k, y / k)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|g| g.as_str()).collect();
        write!(f, "({})", names.join(","))
    }
}

fn orient(a: &(Rat, Rat), b: &(Rat, Rat), c: &(Rat, Rat)) -> Rat {
    (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
}

/// What a cell resolves to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelLabel {
    /// Item number in the classification for the current mode.
    pub case: u8,
    pub model: &'static str,
    pub description: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberVerdict {
    pub case: u8,
    pub model: &'static str,
    pub description: &'static str,
    pub cell: Cell,
}

/// Labeled open-cell partition of the cross-section triangle.
#[derive(Clone, Debug)]
pub struct ChamberComplex {
    mode: NMode,
    cells: Vec<(Cell, ModelLabel)>,
}

use Generator::{Ddeg, Delta, Dunb, H11, H2, P, T};

const TRIANGLES: [[Generator; 3]; 9] = [
    [H11, H2, T],
    [H11, T, Delta],
    [H2, T, Delta],
    [H11, Dunb, Delta],
    [H2, Ddeg, Delta],
    [H11, H2, P],
    [H11, P, Dunb],
    [H2, P, Ddeg],
    [Dunb, P, Ddeg],
];

const EDGES: [[Generator; 2]; 15] = [
    [H11, H2],
    [T, Delta],
    [H11, Delta],
    [H2, Delta],
    [H11, T],
    [H2, T],
    [H11, P],
    [H2, P],
    [P, Ddeg],
    [P, Dunb],
    [H11, Dunb],
    [H2, Ddeg],
    [Delta, Ddeg],
    [Delta, Dunb],
    [Dunb, Ddeg],
];

const VERTICES: [Generator; 7] = [H11, H2, T, P, Delta, Ddeg, Dunb];

fn label(case: u8, model: &'static str, description: &'static str) -> ModelLabel {
    ModelLabel { case, model, description }
}

/// Chamber table for `n > 3`.
fn label_gt3(cell: &Cell) -> ModelLabel {
    let m_item = |c: u8| -> ModelLabel {
        match c {
            1 => label(1, "M", "the moduli space of stable maps itself"),
            2 => label(2, "C", "normalization of the main component of the Chow variety"),
            3 => label(3, "H", "Hilbert scheme of conics Hilb^{2m+1}(Gr(n-1,V))"),
            4 => label(4, "U", "normalization of the image in P(∧^{n-1}V*⊗sl2)//SL2"),
            5 => label(5, "K", "Kronecker moduli space P(V*⊗gl2)//SL2×SL2 ≅ T4"),
            6 => label(6, "X1modG", "first step X^1//SL2×SL2 of the partial desingularization of K"),
            7 => label(7, "Gtilde", "the determinantal model G~"),
            8 => label(8, "G", "Gr(3, ∧²S) over Gr(4, V*)"),
            9 => label(9, "B", "blow-up of Gr(3, ∧²S) along OG(3, ∧²S)_{σ(2)*}"),
            10 => label(10, "KS", "relative Kronecker moduli space P(S*⊗gl2)//SL2×SL2"),
            11 => label(11, "R", "normalization of the incidence variety in M_PV*(m²+3m+2) × U"),
            12 => label(12, "L", "closure of sheaves supported on smooth quadric surfaces"),
            13 => label(13, "Gbar", "normalization of the image of the envelope map"),
            14 => label(14, "Ghat", "blow-up of G along OG(3, ∧²S)"),
            15 => label(15, "Point", "a point"),
            16 => label(16, "Gr4Vdual", "Gr(4, V*) ≅ Gr(n-3, V)"),
            _ => unreachable!(),
        }
    };
    let c = |g: &[Generator]| Cell::new(g.to_vec());
    let item = match cell {
        x if *x == c(&[H11, H2, T]) => 1,
        x if *x == c(&[H11, T, Delta]) => 11,
        x if *x == c(&[H2, T, Delta]) => 6,
        x if *x == c(&[H11, Dunb, Delta]) => 10,
        x if *x == c(&[H2, Ddeg, Delta]) => 5,
        x if *x == c(&[H11, H2, P]) => 3,
        x if *x == c(&[H11, P, Dunb]) => 9,
        x if *x == c(&[H2, P, Ddeg]) => 7,
        x if *x == c(&[Dunb, P, Ddeg]) => 8,
        x if *x == c(&[H11, H2]) => 2,
        x if *x == c(&[T, Delta]) => 4,
        x if *x == c(&[H11, Delta]) => 12,
        x if *x == c(&[H2, Delta]) => 5,
        x if *x == c(&[H11, T]) => 11,
        x if *x == c(&[H2, T]) => 6,
        x if *x == c(&[H11, P]) => 14,
        x if *x == c(&[H2, P]) => 7,
        x if *x == c(&[P, Ddeg]) => 13,
        x if *x == c(&[P, Dunb]) => 8,
        x if *x == c(&[H11, Dunb]) => 10,
        x if *x == c(&[H2, Ddeg]) => 5,
        x if *x == c(&[Delta, Ddeg]) => 15,
        x if *x == c(&[Delta, Dunb]) => 16,
        x if *x == c(&[Dunb, Ddeg]) => 16,
        x if *x == c(&[H11]) => 12,
        x if *x == c(&[H2]) => 5,
        x if *x == c(&[T]) => 4,
        x if *x == c(&[P]) => 13,
        x if *x == c(&[Delta]) => 15,
        x if *x == c(&[Ddeg]) => 15,
        x if *x == c(&[Dunb]) => 16,
        _ => unreachable!("cell {cell} is not in the complex"),
    };
    m_item(item)
}

/// Chamber table for `n = 3`.
fn label_eq3(cell: &Cell) -> ModelLabel {
    let m_item = |c: u8| -> ModelLabel {
        match c {
            1 => label(1, "M", "the moduli space of stable maps itself"),
            2 => label(2, "H", "Hilbert scheme of conics Hilb^{2m+1}(Gr(2,V))"),
            3 => label(3, "K", "Kronecker moduli space P(V*⊗gl2)//SL2×SL2 ≅ T4"),
            4 => label(4, "X1modG", "intermediate space X^1//SL2×SL2 of the desingularization of K"),
            5 => label(5, "BlOGGr3", "blow-up of Gr(3, ∧²V) along OG(3, ∧²V)_{σ(1,1)*}"),
            6 => label(6, "Gr3Wedge2V", "Gr(3, ∧²V) ≅ Gr(3, ∧²V*)"),
            7 => label(7, "BlOGGr3Dual", "blow-up of Gr(3, ∧²V) along OG(3, ∧²V)_{σ(2)*}"),
            8 => label(8, "Kdual", "dual Kronecker moduli space P(V⊗gl2)//SL2×SL2"),
            9 => label(9, "X1modGdual", "intermediate space of the desingularization of K*"),
            10 => label(10, "U", "normalization of the image in P(∧²V*⊗sl2)//SL2"),
            11 => label(11, "C", "normalization of the Chow variety Chow_{1,2}(Gr(2,V))"),
            12 => label(12, "Point", "a point"),
            _ => unreachable!(),
        }
    };
    let c = |g: &[Generator]| Cell::new(g.to_vec());
    let item = match cell {
        x if *x == c(&[H11, H2, T]) => 1,
        x if *x == c(&[H11, H2, P]) => 2,
        x if *x == c(&[H2, Ddeg, Delta]) || *x == c(&[H2, Ddeg]) || *x == c(&[H2, Delta]) || *x == c(&[H2]) => 3,
        x if *x == c(&[H2, T, Delta]) || *x == c(&[H2, T]) => 4,
        x if *x == c(&[H2, P, Ddeg]) || *x == c(&[H2, P]) => 5,
        x if *x == c(&[Dunb, P, Ddeg]) || *x == c(&[P, Dunb]) || *x == c(&[P, Ddeg]) || *x == c(&[P]) => 6,
        x if *x == c(&[H11, P, Dunb]) || *x == c(&[H11, P]) => 7,
        x if *x == c(&[H11, Dunb, Delta]) || *x == c(&[H11, Dunb]) || *x == c(&[H11, Delta]) || *x == c(&[H11]) => 8,
        x if *x == c(&[H11, T, Delta]) || *x == c(&[H11, T]) => 9,
        x if *x == c(&[T, Delta]) || *x == c(&[T]) => 10,
        x if *x == c(&[H11, H2]) => 11,
        x if *x == c(&[Dunb, Ddeg])
            || *x == c(&[Delta, Dunb])
            || *x == c(&[Delta, Ddeg])
            || *x == c(&[Dunb])
            || *x == c(&[Ddeg])
            || *x == c(&[Delta]) =>
        {
            12
        }
        _ => unreachable!("cell {cell} is not in the complex"),
    };
    m_item(item)
}

impl ChamberComplex {
    pub fn mode(&self) -> NMode {
        self.mode
    }

    pub fn cells(&self) -> &[(Cell, ModelLabel)] {
        &self.cells
    }

    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = &(Cell, ModelLabel)> {
        self.cells.iter().filter(move |(c, _)| c.dim() == dim)
    }

    /// All cells whose relative interior contains `p`. A valid point of the
    /// cross-section triangle lies in exactly one.
    pub fn cells_containing(&self, p: &(Rat, Rat)) -> Vec<&(Cell, ModelLabel)> {
        self.cells.iter().filter(|(c, _)| c.contains(p)).collect()
    }

    pub fn resolve(&self, d: &DivisorCombo) -> Result<ChamberVerdict> {
        let p = d.point();
        let (cell, label) = self
            .cells
            .iter()
            .find(|(c, _)| c.contains(&p))
            .ok_or_else(|| Error::InvalidInput("point outside the effective cone".into()))?;
        Ok(ChamberVerdict {
            case: label.case,
            model: label.model,
            description: label.description,
            cell: cell.clone(),
        })
    }
}

pub fn build_complex(mode: NMode) -> ChamberComplex {
    let labeler = match mode {
        NMode::Gt3 => label_gt3,
        NMode::Eq3 => label_eq3,
    };
    let cells = VERTICES
        .iter()
        .map(|&g| Cell::new(vec![g]))
        .chain(EDGES.iter().map(|e| Cell::new(e.to_vec())))
        .chain(TRIANGLES.iter().map(|t| Cell::new(t.to_vec())))
        .map(|c| {
            let l = labeler(&c);
            (c, l)
        })
        .collect();
    ChamberComplex { mode, cells }
}

/// Resolves a combination using the complex for its own mode.
pub fn resolve(d: &DivisorCombo) -> Result<ChamberVerdict> {
    build_complex(d.mode()).resolve(d)
}
