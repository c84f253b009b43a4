//! The Talaska–Williams network `M_D` and its weight matrix `W_D`.

use std::collections::HashMap;

use deodhar_core::algebra::{Matrix, Ring};
use deodhar_core::diagram::{Cell, GoDiagram, Stone};
use serde::{Deserialize, Serialize};

use crate::params::Params;
use crate::NetworkError;

/// A vertex of `M_D`: the east end of a row (a source), an internal `+`/`•` cell,
/// or the bottom of a column (a sink). Boundary vertices carry their label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwVertex {
    Source(usize),
    Internal(Cell),
    Sink(usize),
}

/// One edge taken by a path; `horizontal` edges carry the weight of their head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwEdge {
    pub to: TwVertex,
    pub horizontal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwPath {
    pub source: usize,
    pub sink: usize,
    pub edges: Vec<TwEdge>,
}

impl TwPath {
    pub fn weight<T: Ring>(&self, params: &Params<T>) -> T {
        self.edges
            .iter()
            .filter(|e| e.horizontal)
            .fold(T::one(), |acc, e| match e.to {
                TwVertex::Internal(c) => acc.mul(params.get(c)),
                _ => acc,
            })
    }

    /// Column in which the path leaves each row it passes, top row first.
    pub fn down_columns(&self, d: &GoDiagram) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur: Option<Cell> = None;
        let cols = d.shape().boundary_labels().1;
        for e in &self.edges {
            match (e.horizontal, e.to) {
                (true, TwVertex::Internal(c)) => cur = Some(c),
                (false, TwVertex::Internal(c)) => {
                    let from = cur.expect("vertical edge leaves an internal vertex");
                    out.extend(std::iter::repeat(from.col).take(c.row - from.row));
                    cur = Some(c);
                }
                (false, TwVertex::Sink(t)) => {
                    let from = cur.expect("vertical edge leaves an internal vertex");
                    let col = cols.iter().position(|&x| x == t).expect("sink label");
                    out.extend(std::iter::repeat(col).take(d.shape().col_len(col) - from.row));
                }
                _ => {}
            }
        }
        out
    }
}

/// `χ(b)`: the nearest `+` strictly right of `b`, `None` for the boundary.
pub fn chi(d: &GoDiagram, b: Cell) -> Option<Cell> {
    (b.col + 1..d.shape().row_len(b.row))
        .map(|c| Cell::new(b.row, c))
        .find(|&c| d.stone(c) == Stone::Plus)
}

/// Source labels of `M_D`, top to bottom (increasing).
pub fn tw_sources(d: &GoDiagram) -> Vec<usize> {
    d.shape().boundary_labels().0
}

/// Number of sources strictly between labels `a` and `b`.
pub fn sources_between(d: &GoDiagram, a: usize, b: usize) -> usize {
    let (lo, hi) = (a.min(b), a.max(b));
    tw_sources(d).iter().filter(|&&v| lo < v && v < hi).count()
}

/// `ρ(b)`: sources strictly between the row's source and the column's sink.
pub fn rho(d: &GoDiagram, b: Cell) -> usize {
    let (rows, cols) = d.shape().boundary_labels();
    sources_between(d, rows[b.row], cols[b.col])
}

fn out_edges(d: &GoDiagram, v: TwVertex) -> Vec<TwEdge> {
    let shape = d.shape();
    let internal = |c: Cell| d.stone(c) != Stone::White;
    let horizontal_from = |row: usize, chi_of: Option<Cell>| -> Vec<TwEdge> {
        (0..shape.row_len(row))
            .rev()
            .map(|c| Cell::new(row, c))
            .filter(|&c| internal(c) && chi(d, c) == chi_of)
            .map(|c| TwEdge { to: TwVertex::Internal(c), horizontal: true })
            .collect()
    };
    match v {
        TwVertex::Source(label) => {
            let row = tw_sources(d).iter().position(|&x| x == label).expect("source label");
            horizontal_from(row, None)
        }
        TwVertex::Internal(b) => {
            let mut out = if d.stone(b) == Stone::Plus { horizontal_from(b.row, Some(b)) } else { Vec::new() };
            let below = (b.row + 1..shape.col_len(b.col))
                .map(|r| Cell::new(r, b.col))
                .find(|&c| d.stone(c) == Stone::Plus);
            let to = match below {
                Some(c) => TwVertex::Internal(c),
                None => TwVertex::Sink(shape.boundary_labels().1[b.col]),
            };
            out.push(TwEdge { to, horizontal: false });
            out
        }
        TwVertex::Sink(_) => Vec::new(),
    }
}

/// Every path of `M_D` from `source`.
pub fn tw_paths(d: &GoDiagram, source: usize) -> Vec<TwPath> {
    fn rec(d: &GoDiagram, source: usize, v: TwVertex, edges: &mut Vec<TwEdge>, out: &mut Vec<TwPath>) {
        if let TwVertex::Sink(t) = v {
            out.push(TwPath { source, sink: t, edges: edges.clone() });
            return;
        }
        for e in out_edges(d, v) {
            edges.push(e);
            rec(d, source, e.to, edges, out);
            edges.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, source, TwVertex::Source(source), &mut Vec::new(), &mut out);
    out
}

/// `W_D`: `(−1)^{b(s,t)}` times the path sum from source `s` to `t`, with the
/// trivial path at `t = s`.
pub fn tw_weight_matrix<T: Ring>(d: &GoDiagram, params: &Params<T>) -> Result<Matrix<T>, NetworkError> {
    params.validate(d)?;
    let n = d.shape().n();
    let srcs = tw_sources(d);
    let mut memo: HashMap<TwVertex, Vec<T>> = HashMap::new();
    let mut w = Matrix::zeros(srcs.len(), n);
    for (s_idx, &s) in srcs.iter().enumerate() {
        let sums = sums_from(d, params, TwVertex::Source(s), &mut memo);
        for (t0, x) in sums.into_iter().enumerate() {
            let t = t0 + 1;
            let v = if t == s {
                T::one()
            } else if sources_between(d, s, t) % 2 == 1 {
                x.neg()
            } else {
                x
            };
            w.set(s_idx, t0, v);
        }
    }
    Ok(w)
}

fn sums_from<T: Ring>(d: &GoDiagram, params: &Params<T>, v: TwVertex, memo: &mut HashMap<TwVertex, Vec<T>>) -> Vec<T> {
    let n = d.shape().n();
    if let TwVertex::Sink(t) = v {
        let mut out = vec![T::zero(); n];
        out[t - 1] = T::one();
        return out;
    }
    if let Some(x) = memo.get(&v) {
        return x.clone();
    }
    let mut acc = vec![T::zero(); n];
    for e in out_edges(d, v) {
        let w = match (e.horizontal, e.to) {
            (true, TwVertex::Internal(c)) => params.get(c).clone(),
            _ => T::one(),
        };
        if w.is_zero() {
            continue;
        }
        for (a, r) in acc.iter_mut().zip(sums_from(d, params, e.to, memo)) {
            if !r.is_zero() {
                *a = a.add(&w.mul(&r));
            }
        }
    }
    memo.insert(v, acc.clone());
    acc
}
