use deodhar_core::diagram::{Cell, CrossingPair, GoDiagram, Stone, Tile};
use serde::{Deserialize, Serialize};

use crate::ClosureError;

/// A crossing–uncrossing pair of `D′` on adjacent pipes together with the
/// promoted diagram `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureInstance {
    pub d_prime: GoDiagram,
    pub d: GoDiagram,
    pub pair: CrossingPair,
}

impl ClosureInstance {
    pub fn new(d_prime: &GoDiagram, c: Cell, c_prime: Cell) -> Result<Self, ClosureError> {
        let pair = find_pair(d_prime, c, c_prime)?;
        let d = promote(d_prime, c, c_prime)?;
        Ok(ClosureInstance { d_prime: d_prime.clone(), d, pair })
    }

    /// The lower pipe label `i`; the pair is `(i, i+1)`.
    pub fn i(&self) -> usize {
        self.pair.i
    }

    pub fn c(&self) -> Cell {
        self.pair.c
    }

    pub fn c_prime(&self) -> Cell {
        self.pair.c_prime
    }
}

pub fn find_pair(d_prime: &GoDiagram, c: Cell, c_prime: Cell) -> Result<CrossingPair, ClosureError> {
    d_prime
        .crossing_pairs()
        .into_iter()
        .find(|p| p.c == c && p.c_prime == c_prime)
        .ok_or(ClosureError::NotAPair(c, c_prime))
}

/// Crossing–uncrossing pairs of `d` whose pipes carry consecutive labels.
pub fn adjacent_pairs(d: &GoDiagram) -> Vec<CrossingPair> {
    d.crossing_pairs().into_iter().filter(|p| p.j == p.i + 1).collect()
}

/// Replace the stones at `c` and `c′` by `+` and retrace.
pub fn promote(d_prime: &GoDiagram, c: Cell, c_prime: Cell) -> Result<GoDiagram, ClosureError> {
    let pair = find_pair(d_prime, c, c_prime)?;
    if pair.j != pair.i + 1 {
        return Err(ClosureError::NotAdjacent(pair.i, pair.j));
    }
    let mut f = d_prime.filling().clone();
    f.set(c, Tile::Elbow);
    f.set(c_prime, Tile::Elbow);
    let d = GoDiagram::from_filling(&f)?;
    for cell in d.shape().cells() {
        let expect = if cell == c || cell == c_prime { Stone::Plus } else { d_prime.stone(cell) };
        if d.stone(cell) != expect {
            return Err(ClosureError::StoneChanged(cell));
        }
    }
    Ok(d)
}
