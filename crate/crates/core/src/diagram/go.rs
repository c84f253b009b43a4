use serde::{Deserialize, Serialize};

use super::{Cell, Config, DiagramError, Filling, Partition, PipeTrace, ReadingOrder, Tile};
use crate::perm::Subexpression;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stone {
    /// Elbow in configuration A.
    Plus,
    /// Crossing point, configuration C.
    White,
    /// Uncrossing point, configuration D.
    Black,
}

impl Stone {
    pub fn symbol(self) -> char {
        match self {
            Stone::Plus => '+',
            Stone::White => 'o',
            Stone::Black => '*',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(Stone::Plus),
            'o' => Some(Stone::White),
            '*' => Some(Stone::Black),
            _ => None,
        }
    }

    pub fn tile(self) -> Tile {
        match self {
            Stone::Plus => Tile::Elbow,
            Stone::White | Stone::Black => Tile::Crossing,
        }
    }
}

/// A filling without configuration B, with its trace and stones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoDiagram {
    filling: Filling,
    stones: Vec<Vec<Stone>>,
    trace: PipeTrace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    NotGo { witness: Cell },
    Go(GoDiagram),
    Le(GoDiagram),
}

impl Classification {
    pub fn is_go(&self) -> bool {
        !matches!(self, Classification::NotGo { .. })
    }

    pub fn is_le(&self) -> bool {
        matches!(self, Classification::Le(_))
    }

    pub fn diagram(self) -> Option<GoDiagram> {
        match self {
            Classification::NotGo { .. } => None,
            Classification::Go(d) | Classification::Le(d) => Some(d),
        }
    }
}

pub fn classify(filling: &Filling) -> Classification {
    let trace = filling.trace();
    if let Some(witness) = trace.first_config(Config::B) {
        return Classification::NotGo { witness };
    }
    let le = trace.first_config(Config::D).is_none();
    let stones = trace
        .config
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| match c {
                    Config::A => Stone::Plus,
                    Config::C => Stone::White,
                    Config::D => Stone::Black,
                    Config::B => unreachable!(),
                })
                .collect()
        })
        .collect();
    let d = GoDiagram { filling: filling.clone(), stones, trace };
    if le {
        Classification::Le(d)
    } else {
        Classification::Go(d)
    }
}

/// A crossing–uncrossing pair: pipes `i < j` cross at `c` and next meet at `c_prime`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingPair {
    pub c: Cell,
    pub c_prime: Cell,
    pub i: usize,
    pub j: usize,
}

impl GoDiagram {
    pub fn from_filling(filling: &Filling) -> Result<Self, DiagramError> {
        match classify(filling) {
            Classification::NotGo { witness } => Err(DiagramError::NotGo(witness)),
            Classification::Go(d) | Classification::Le(d) => Ok(d),
        }
    }

    /// Rebuilds from stones; the stones must agree with a fresh trace of the implied tiles.
    pub fn from_stones(shape: Partition, stones: Vec<Vec<Stone>>) -> Result<Self, DiagramError> {
        let tiles = stones.iter().map(|row| row.iter().map(|s| s.tile()).collect()).collect();
        let filling = Filling::new(shape, tiles)?;
        let d = Self::from_filling(&filling)?;
        for cell in d.shape().cells() {
            if d.stone(cell) != stones[cell.row][cell.col] {
                return Err(DiagramError::StoneMismatch(cell));
            }
        }
        Ok(d)
    }

    pub fn shape(&self) -> &Partition {
        self.filling.shape()
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn trace(&self) -> &PipeTrace {
        &self.trace
    }

    pub fn stone(&self, c: Cell) -> Stone {
        self.stones[c.row][c.col]
    }

    pub fn stones(&self) -> &[Vec<Stone>] {
        &self.stones
    }

    pub fn cells_with(&self, s: Stone) -> Vec<Cell> {
        self.shape().cells().into_iter().filter(|&c| self.stone(c) == s).collect()
    }

    pub fn count(&self, s: Stone) -> usize {
        self.stones.iter().flatten().filter(|&&x| x == s).count()
    }

    pub fn is_le(&self) -> bool {
        self.count(Stone::Black) == 0
    }

    /// Jump coordinate `σ_D(b)`: west exit first.
    pub fn sigma(&self, c: Cell) -> (usize, usize) {
        self.trace.exits(c)
    }

    /// Dual jump coordinate, the reverse of `σ_D(b)`.
    pub fn sigma_star(&self, c: Cell) -> (usize, usize) {
        let (i, j) = self.sigma(c);
        (j, i)
    }

    pub fn sigma_table(&self) -> Vec<Vec<(usize, usize)>> {
        self.trace
            .west_exit
            .iter()
            .zip(&self.trace.north_exit)
            .map(|(w, nn)| w.iter().copied().zip(nn.iter().copied()).collect())
            .collect()
    }

    /// West boundary labels `v_1..v_k`.
    pub fn west_labels(&self) -> &[usize] {
        &self.trace.west_labels
    }

    /// North boundary labels right to left.
    pub fn north_labels_rtl(&self) -> Vec<usize> {
        self.trace.north_labels.iter().rev().copied().collect()
    }

    pub fn stone_rows(&self) -> Vec<String> {
        self.stones.iter().map(|row| row.iter().map(|s| s.symbol()).collect()).collect()
    }

    pub fn crossing_pairs(&self) -> Vec<CrossingPair> {
        let routes = &self.trace.routes;
        let mut out = Vec::new();
        for c in self.cells_with(Stone::White) {
            let (i, j) = self.sigma(c);
            let after = |p: usize| -> Vec<Cell> {
                let r = &routes[p - 1];
                let at = r.iter().position(|s| s.cell == c).expect("pipe passes c");
                r[at + 1..].iter().map(|s| s.cell).collect()
            };
            let (ri, rj) = (after(i), after(j));
            let meet = ri.iter().find(|x| rj.contains(x));
            if let Some(&cp) = meet {
                if self.stone(cp) == Stone::Black {
                    out.push(CrossingPair { c, c_prime: cp, i, j });
                }
            }
        }
        out
    }

    pub fn subexpression(&self, reading: &ReadingOrder) -> Subexpression {
        subexpression_word(&self.filling, reading)
    }
}

/// The subexpression of the reduced word of `reading` that keeps the crossing cells.
pub fn subexpression_word(filling: &Filling, reading: &ReadingOrder) -> Subexpression {
    let shape = filling.shape();
    let cells = reading.cells_ascending();
    let parent: Vec<usize> = cells.iter().map(|&c| shape.reflection(c)).collect();
    let keep: Vec<bool> = cells.iter().map(|&c| filling.tile(c) == Tile::Crossing).collect();
    Subexpression::new(shape.n(), parent, &keep)
}
