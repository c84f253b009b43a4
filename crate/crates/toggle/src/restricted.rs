use std::collections::BTreeSet;

use deodhar_core::diagram::{Cell, Edge, Filling, GoDiagram, PipeTrace, RouteStep, Stone, Tile};
use deodhar_core::Permutation;
use deodhar_networks::paths::{classify_move, sources, Entry, Exit, PathKind, RestrictedPath, Step};
use serde::{Deserialize, Serialize};

use crate::ToggleError;

/// A `(+, ∘)` filling reached from a Go-diagram by toggles, with the toggled cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedDiagram {
    filling: Filling,
    toggled: BTreeSet<Cell>,
    trace: PipeTrace,
}

impl RestrictedDiagram {
    /// `D` itself, black stones read as crossings.
    pub fn root(d: &GoDiagram) -> Self {
        let filling = d.filling().clone();
        let trace = filling.trace();
        RestrictedDiagram { filling, toggled: BTreeSet::new(), trace }
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn toggled(&self) -> &BTreeSet<Cell> {
        &self.toggled
    }

    pub fn trace(&self) -> &PipeTrace {
        &self.trace
    }

    pub fn key(&self) -> (Vec<Vec<Tile>>, BTreeSet<Cell>) {
        (self.filling.tiles().to_vec(), self.toggled.clone())
    }

    /// `I_E`: labels of the pipes ending on the west boundary.
    pub fn index_set(&self) -> Vec<usize> {
        let mut v = self.trace.west_labels.clone();
        v.sort();
        v
    }

    /// `sign(π_E)`: the sign of sorting the west labels read top to bottom.
    pub fn sign(&self) -> i64 {
        Permutation::sort_sign(&self.trace.west_labels)
    }

    pub fn length(&self) -> usize {
        self.trace.perm.length()
    }

    /// Product of the parameters at the toggled cells.
    pub fn weight<T: deodhar_core::algebra::Ring>(&self, beta: &deodhar_networks::Params<T>) -> T {
        self.toggled.iter().fold(T::one(), |acc, &c| acc.mul(beta.get(c)))
    }

    /// The diagram with `p` toggled, whether or not `p` is togglable.
    pub fn toggle_unchecked(&self, p: Cell) -> Self {
        let mut filling = self.filling.clone();
        let t = match filling.tile(p) {
            Tile::Elbow => Tile::Crossing,
            Tile::Crossing => Tile::Elbow,
        };
        filling.set(p, t);
        let mut toggled = self.toggled.clone();
        toggled.insert(p);
        let trace = filling.trace();
        RestrictedDiagram { filling, toggled, trace }
    }

    pub fn toggle(&self, d: &GoDiagram, p: Cell) -> Result<Self, ToggleError> {
        if !is_togglable(d, self, p) {
            return Err(ToggleError::NotTogglable(p));
        }
        Ok(self.toggle_unchecked(p))
    }

    /// The pipes entering `p` as `(b, c)` when one ends on the west boundary (`b`)
    /// and the other on the north boundary (`c`).
    pub fn boundary_pair(&self, p: Cell) -> Option<(usize, usize)> {
        let (e, s) = self.trace.entries(p);
        let west = |x: usize| self.trace.west_labels.contains(&x);
        match (west(e), west(s)) {
            (true, false) => Some((e, s)),
            (false, true) => Some((s, e)),
            _ => None,
        }
    }
}

fn is_togglable(d: &GoDiagram, e: &RestrictedDiagram, p: Cell) -> bool {
    if d.stone(p) == Stone::White {
        return false;
    }
    if e.toggled.iter().any(|&q| q.precedes_eq(p)) {
        return false;
    }
    matches!(e.boundary_pair(p), Some((b, c)) if c < b)
}

/// Cells of `e` that may be toggled next, in row-major order.
pub fn togglable_cells(d: &GoDiagram, e: &RestrictedDiagram) -> Vec<Cell> {
    d.shape().cells().into_iter().filter(|&p| is_togglable(d, e, p)).collect()
}

fn route_to_path(
    d: &GoDiagram,
    kind: PathKind,
    source: usize,
    sink: usize,
    route: &[RouteStep],
) -> Result<RestrictedPath, ToggleError> {
    let steps = route
        .iter()
        .rev()
        .map(|s| {
            let entry = if s.exit == Edge::West { Entry::Left } else { Entry::Top };
            let exit = if s.entry == Edge::East { Exit::Right } else { Exit::Down };
            let jump = classify_move(kind, d.stone(s.cell), entry, exit).ok_or(ToggleError::IllegalPath(s.cell))?;
            Ok(Step { cell: s.cell, entry, exit, jump })
        })
        .collect::<Result<Vec<_>, ToggleError>>()?;
    Ok(RestrictedPath { source, sink, steps })
}

/// `(f₁(E), f₂(E))`: the pipes of `E` ending on the west boundary as restricted
/// paths (top to bottom) and those ending on the north boundary as dual restricted
/// paths (right to left).
pub fn boundary_paths(
    d: &GoDiagram,
    e: &RestrictedDiagram,
) -> Result<(Vec<RestrictedPath>, Vec<RestrictedPath>), ToggleError> {
    let srcs = sources(d);
    let k = d.shape().k();
    let t = &e.trace;
    let west = (0..k)
        .map(|r| {
            let sink = t.west_labels[r];
            route_to_path(d, PathKind::Restricted, srcs[r].0, sink, &t.routes[sink - 1])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut north = (0..d.shape().n() - k)
        .map(|c| {
            let sink = t.north_labels[c];
            route_to_path(d, PathKind::Dual, srcs[k + c].0, sink, &t.routes[sink - 1])
        })
        .collect::<Result<Vec<_>, _>>()?;
    north.reverse();
    Ok((west, north))
}
