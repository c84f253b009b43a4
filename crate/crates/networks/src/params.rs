use deodhar_core::algebra::{Coeff, Family, Fp, Laurent, Ring};
use deodhar_core::diagram::{Cell, GoDiagram, ReadingOrder, Stone};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::NetworkError;

/// Which parametrization a [`Params`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParamFamily {
    Beta,
    BetaStar,
    Alpha,
    /// Talaska–Williams edge weights: `a_b` at `+`, `c_b` at `•`.
    Tw,
    Gamma,
}

impl ParamFamily {
    /// Symbol family used for the cell's variable, `None` where the value is forced to 0.
    pub fn symbol(self, stone: Stone) -> Option<Family> {
        if stone == Stone::White {
            return None;
        }
        Some(match self {
            ParamFamily::Beta => Family::Beta,
            ParamFamily::BetaStar => Family::BetaStar,
            ParamFamily::Alpha => Family::Alpha,
            ParamFamily::Gamma => Family::Gamma,
            ParamFamily::Tw if stone == Stone::Plus => Family::A,
            ParamFamily::Tw => Family::C,
        })
    }
}

/// Row-major label of a cell: `|λ|` at the top-left corner down to 1. Symbols are
/// indexed by it regardless of the reading order used elsewhere.
pub fn cell_label(d: &GoDiagram, c: Cell) -> u32 {
    ReadingOrder::row_major(d.shape()).label(c) as u32
}

/// One value per cell of a Go-diagram, validated against the stones:
/// zero at `∘`, invertible at `+`, free at `•`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<T: Ring> {
    family: ParamFamily,
    values: Vec<Vec<T>>,
}

impl<T: Ring> Params<T> {
    pub fn from_fn(d: &GoDiagram, family: ParamFamily, f: impl FnMut(Cell) -> T) -> Result<Self, NetworkError> {
        let p = Self::from_fn_unchecked(d, family, f);
        p.validate(d)?;
        Ok(p)
    }

    /// Skips validation; callers that build intermediate values (e.g. distorted
    /// parameters) use this.
    pub fn from_fn_unchecked(d: &GoDiagram, family: ParamFamily, mut f: impl FnMut(Cell) -> T) -> Self {
        let values = d
            .shape()
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| f(Cell::new(r, c))).collect())
            .collect();
        Params { family, values }
    }

    pub fn validate(&self, d: &GoDiagram) -> Result<(), NetworkError> {
        for cell in d.shape().cells() {
            let v = self.get(cell);
            match d.stone(cell) {
                Stone::White if !v.is_zero() => return Err(NetworkError::NonZeroAtWhite(cell)),
                Stone::Plus if v.inv().is_none() => return Err(NetworkError::NotInvertible(cell)),
                _ => {}
            }
        }
        Ok(())
    }

    pub fn family(&self) -> ParamFamily {
        self.family
    }

    pub fn get(&self, c: Cell) -> &T {
        &self.values[c.row][c.col]
    }

    pub fn set(&mut self, c: Cell, v: T) {
        self.values[c.row][c.col] = v;
    }

    pub fn values(&self) -> &[Vec<T>] {
        &self.values
    }

    pub fn map<U: Ring>(&self, family: ParamFamily, f: impl Fn(&T) -> U) -> Params<U> {
        Params {
            family,
            values: self.values.iter().map(|row| row.iter().map(&f).collect()).collect(),
        }
    }
}

impl<C: Coeff> Params<Laurent<C>> {
    /// Independent symbols at `+`/`•` cells (e.g. `b9` at the corner), `0` at `∘`.
    pub fn symbolic(d: &GoDiagram, family: ParamFamily) -> Self {
        Params::from_fn_unchecked(d, family, |c| match family.symbol(d.stone(c)) {
            Some(f) => Laurent::sym(f, cell_label(d, c)),
            None => Laurent::zero(),
        })
    }
}

/// Uniform random values: nonzero at `+`, arbitrary at `•`, zero at `∘`.
pub fn random_params<const P: u64>(d: &GoDiagram, family: ParamFamily, rng: &mut impl Rng) -> Params<Fp<P>> {
    Params::from_fn_unchecked(d, family, |c| match d.stone(c) {
        Stone::White => Fp::new(0),
        Stone::Plus => Fp::new(rng.gen_range(1..P) as i64),
        Stone::Black => Fp::new(rng.gen_range(0..P) as i64),
    })
}
