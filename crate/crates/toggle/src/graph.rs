use std::collections::{BTreeMap, HashMap, VecDeque};

use deodhar_core::diagram::{Cell, GoDiagram};
use serde::{Deserialize, Serialize};

use crate::restricted::{togglable_cells, RestrictedDiagram};
use crate::ToggleError;

pub const DEFAULT_TOGGLE_GUARD: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToggleEdge {
    pub from: usize,
    pub to: usize,
    pub cell: Cell,
}

/// `𝔇(D)`: vertex 0 is `D`, vertices in breadth-first order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ToggleGraph {
    pub vertices: Vec<RestrictedDiagram>,
    pub edges: Vec<ToggleEdge>,
}

impl ToggleGraph {
    /// Vertex indices grouped by `I_E`.
    pub fn by_index_set(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut out: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            out.entry(v.index_set()).or_default().push(i);
        }
        out
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.from == v).count()
    }
}

pub fn toggle_graph(d: &GoDiagram, guard: usize) -> Result<ToggleGraph, ToggleError> {
    let cells = d.shape().size();
    if cells > guard {
        return Err(ToggleError::GuardExceeded { cells, guard });
    }
    let root = RestrictedDiagram::root(d);
    let mut index = HashMap::new();
    index.insert(root.key(), 0);
    let mut vertices = vec![root];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for p in togglable_cells(d, &vertices[i]) {
            let next = vertices[i].toggle_unchecked(p);
            let key = next.key();
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    let j = vertices.len();
                    index.insert(key, j);
                    vertices.push(next);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(ToggleEdge { from: i, to: j, cell: p });
        }
    }
    Ok(ToggleGraph { vertices, edges })
}
