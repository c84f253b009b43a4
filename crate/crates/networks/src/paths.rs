//! Restricted and dual restricted paths on the pipe dream of a Go-diagram.
//!
//! Paths run from the north-west boundary to the south-east boundary, moving
//! right or down through cells. A walker entering a cell knows which pipe it is on
//! from the side it entered by, so the legal moves depend only on the stone.

use std::collections::HashMap;

use deodhar_core::algebra::{Matrix, Ring};
use deodhar_core::diagram::{Cell, GoDiagram, Stone};
use serde::{Deserialize, Serialize};

use crate::params::Params;
use crate::NetworkError;

/// Side through which a path enters a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Entry {
    Left,
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Exit {
    Right,
    Down,
}

/// Jumps go to the lower pipe for restricted paths, the higher one for duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathKind {
    Restricted,
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Step {
    pub cell: Cell,
    pub entry: Entry,
    pub exit: Exit,
    pub jump: bool,
}

/// Legal `(exit, jump)` pairs for a path entering a cell.
pub fn moves(kind: PathKind, stone: Stone, entry: Entry) -> &'static [(Exit, bool)] {
    use Exit::*;
    match (kind, entry, stone) {
        (PathKind::Restricted, Entry::Left, Stone::Plus) => &[(Down, false), (Right, true)],
        (PathKind::Restricted, Entry::Left, Stone::Black) => &[(Right, false), (Down, true)],
        (PathKind::Restricted, Entry::Left, Stone::White) => &[(Right, false)],
        (PathKind::Restricted, Entry::Top, Stone::Plus) => &[(Right, false)],
        (PathKind::Restricted, Entry::Top, _) => &[(Down, false)],
        (PathKind::Dual, Entry::Top, Stone::Plus) => &[(Right, false), (Down, true)],
        (PathKind::Dual, Entry::Top, Stone::Black) => &[(Down, false), (Right, true)],
        (PathKind::Dual, Entry::Top, Stone::White) => &[(Down, false)],
        (PathKind::Dual, Entry::Left, Stone::Plus) => &[(Down, false)],
        (PathKind::Dual, Entry::Left, _) => &[(Right, false)],
    }
}

/// Whether a move through a cell with `stone` is legal, and if so whether it jumps.
pub fn classify_move(kind: PathKind, stone: Stone, entry: Entry, exit: Exit) -> Option<bool> {
    moves(kind, stone, entry).iter().find(|m| m.0 == exit).map(|m| m.1)
}

/// Where a walker ends up next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Enter(Cell, Entry),
    Sink(usize),
}

/// Next position after leaving `cell` through `exit`.
pub fn advance(d: &GoDiagram, cell: Cell, exit: Exit) -> Target {
    let shape = d.shape();
    let (rows, cols) = shape.boundary_labels();
    match exit {
        Exit::Right if cell.col + 1 < shape.row_len(cell.row) => Target::Enter(Cell::new(cell.row, cell.col + 1), Entry::Left),
        Exit::Right => Target::Sink(rows[cell.row]),
        Exit::Down if shape.contains(Cell::new(cell.row + 1, cell.col)) => {
            Target::Enter(Cell::new(cell.row + 1, cell.col), Entry::Top)
        }
        Exit::Down => Target::Sink(cols[cell.col]),
    }
}

/// Every north-west source as `(label, first target)`: west edges top to bottom,
/// then north edges left to right.
pub fn sources(d: &GoDiagram) -> Vec<(usize, Target)> {
    let shape = d.shape();
    let (rows, cols) = shape.boundary_labels();
    let t = d.trace();
    let mut out = Vec::with_capacity(shape.n());
    for r in 0..shape.k() {
        let first = if shape.row_len(r) > 0 { Target::Enter(Cell::new(r, 0), Entry::Left) } else { Target::Sink(rows[r]) };
        out.push((t.west_labels[r], first));
    }
    for c in 0..shape.n() - shape.k() {
        let first = if shape.col_len(c) > 0 { Target::Enter(Cell::new(0, c), Entry::Top) } else { Target::Sink(cols[c]) };
        out.push((t.north_labels[c], first));
    }
    out
}

/// `n × n` matrix whose `(s, t)` entry sums, over all paths from source `s` to
/// sink `t`, the product of `weight` over the steps.
pub fn path_sum_matrix<T: Ring>(d: &GoDiagram, kind: PathKind, weight: &dyn Fn(&Step) -> T) -> Matrix<T> {
    let n = d.shape().n();
    let mut memo: HashMap<(Cell, Entry), Vec<T>> = HashMap::new();
    let mut m = Matrix::zeros(n, n);
    for (label, first) in sources(d) {
        let v = sums_from(d, kind, weight, first, &mut memo);
        for (t, x) in v.into_iter().enumerate() {
            m.set(label - 1, t, x);
        }
    }
    m
}

fn sums_from<T: Ring>(
    d: &GoDiagram,
    kind: PathKind,
    weight: &dyn Fn(&Step) -> T,
    at: Target,
    memo: &mut HashMap<(Cell, Entry), Vec<T>>,
) -> Vec<T> {
    let n = d.shape().n();
    let (cell, entry) = match at {
        Target::Sink(t) => {
            let mut v = vec![T::zero(); n];
            v[t - 1] = T::one();
            return v;
        }
        Target::Enter(c, e) => (c, e),
    };
    if let Some(v) = memo.get(&(cell, entry)) {
        return v.clone();
    }
    let mut acc = vec![T::zero(); n];
    for &(exit, jump) in moves(kind, d.stone(cell), entry) {
        let w = weight(&Step { cell, entry, exit, jump });
        if w.is_zero() {
            continue;
        }
        let rest = sums_from(d, kind, weight, advance(d, cell, exit), memo);
        for (a, r) in acc.iter_mut().zip(rest) {
            if !r.is_zero() {
                *a = a.add(&w.mul(&r));
            }
        }
    }
    memo.insert((cell, entry), acc.clone());
    acc
}

/// A source-to-sink path with its steps in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RestrictedPath {
    pub source: usize,
    pub sink: usize,
    pub steps: Vec<Step>,
}

impl RestrictedPath {
    pub fn jump_sites(&self) -> Vec<Cell> {
        self.steps.iter().filter(|s| s.jump).map(|s| s.cell).collect()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.steps.iter().map(|s| s.cell)
    }

    pub fn weight<T: Ring>(&self, f: &dyn Fn(&Step) -> T) -> T {
        self.steps.iter().fold(T::one(), |acc, s| acc.mul(&f(s)))
    }

    /// Walks from `first`, letting `exits` choose the way out of each cell.
    pub fn walk(
        d: &GoDiagram,
        kind: PathKind,
        source: usize,
        first: Target,
        exits: &dyn Fn(Cell, Entry) -> Exit,
    ) -> Result<Self, NetworkError> {
        let mut steps = Vec::new();
        let mut at = first;
        loop {
            match at {
                Target::Sink(t) => return Ok(RestrictedPath { source, sink: t, steps }),
                Target::Enter(cell, entry) => {
                    let exit = exits(cell, entry);
                    let jump = classify_move(kind, d.stone(cell), entry, exit)
                        .ok_or_else(|| NetworkError::Malformed(format!("illegal move at {cell}")))?;
                    steps.push(Step { cell, entry, exit, jump });
                    at = advance(d, cell, exit);
                }
            }
        }
    }
}

/// All paths from one source, depth first with `Right` explored before `Down`.
pub fn enumerate_paths(d: &GoDiagram, kind: PathKind, source: usize, first: Target) -> Vec<RestrictedPath> {
    fn rec(d: &GoDiagram, kind: PathKind, source: usize, at: Target, steps: &mut Vec<Step>, out: &mut Vec<RestrictedPath>) {
        match at {
            Target::Sink(t) => out.push(RestrictedPath { source, sink: t, steps: steps.clone() }),
            Target::Enter(cell, entry) => {
                let mut opts = moves(kind, d.stone(cell), entry).to_vec();
                opts.sort();
                for (exit, jump) in opts {
                    steps.push(Step { cell, entry, exit, jump });
                    rec(d, kind, source, advance(d, cell, exit), steps, out);
                    steps.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(d, kind, source, first, &mut Vec::new(), &mut out);
    out
}

/// Jump weight: the cell's parameter at a jump, 1 otherwise.
pub fn jump_weight<'a, T: Ring>(params: &'a Params<T>) -> impl Fn(&Step) -> T + 'a {
    move |s: &Step| if s.jump { params.get(s.cell).clone() } else { T::one() }
}

/// Corner weight on the grid network: `α_b` for a left-to-down turn, `−1/α_b` for a
/// top-to-right turn. Fails only if a top-to-right turn meets a non-invertible `α`.
pub fn corner_weight<T: Ring>(alpha: &Params<T>, s: &Step) -> Option<T> {
    let a = alpha.get(s.cell);
    match (s.entry, s.exit) {
        (Entry::Left, Exit::Down) => Some(a.clone()),
        (Entry::Top, Exit::Right) => a.inv().map(|x| x.neg()),
        _ => Some(T::one()),
    }
}

/// `(R̃_D, R_D)` for jump parameters `β`.
pub fn restricted_weight_matrix<T: Ring>(d: &GoDiagram, beta: &Params<T>) -> Result<(Matrix<T>, Matrix<T>), NetworkError> {
    beta.validate_zero_at_white(d)?;
    let full = path_sum_matrix(d, PathKind::Restricted, &jump_weight(beta));
    let rows: Vec<usize> = d.west_labels().iter().map(|v| v - 1).collect();
    let trunc = full.select_rows(&rows);
    Ok((full, trunc))
}

/// `(R̃*_D, R*_D)` for dual jump parameters `β*`; the truncation reads the north
/// boundary from right to left.
pub fn dual_weight_matrix<T: Ring>(d: &GoDiagram, beta_star: &Params<T>) -> Result<(Matrix<T>, Matrix<T>), NetworkError> {
    beta_star.validate_zero_at_white(d)?;
    let full = path_sum_matrix(d, PathKind::Dual, &jump_weight(beta_star));
    let rows: Vec<usize> = d.north_labels_rtl().iter().map(|v| v - 1).collect();
    let trunc = full.select_rows(&rows);
    Ok((full, trunc))
}

/// The dual point: `R*_D` with `β*_b = −β_b`.
pub fn dual_point<T: Ring>(d: &GoDiagram, beta: &Params<T>) -> Result<(Matrix<T>, Matrix<T>), NetworkError> {
    let bs = beta.map(crate::ParamFamily::BetaStar, |x| x.neg());
    dual_weight_matrix(d, &bs)
}

/// `(S̃_D, S_D)` for corner weights `α`.
pub fn wtprime_weight_matrix<T: Ring>(d: &GoDiagram, alpha: &Params<T>) -> Result<(Matrix<T>, Matrix<T>), NetworkError> {
    alpha.validate(d)?;
    let w = |s: &Step| corner_weight(alpha, s).expect("validated: α invertible at +");
    let full = path_sum_matrix(d, PathKind::Restricted, &w);
    let rows: Vec<usize> = d.west_labels().iter().map(|v| v - 1).collect();
    let trunc = full.select_rows(&rows);
    Ok((full, trunc))
}

impl<T: Ring> Params<T> {
    /// Jump parameters only need to vanish at `∘`; invertibility at `+` is part
    /// of the parametrization theorem, not of the path sums.
    pub fn validate_zero_at_white(&self, d: &GoDiagram) -> Result<(), NetworkError> {
        match d.cells_with(Stone::White).into_iter().find(|&c| !self.get(c).is_zero()) {
            Some(c) => Err(NetworkError::NonZeroAtWhite(c)),
            None => Ok(()),
        }
    }
}
