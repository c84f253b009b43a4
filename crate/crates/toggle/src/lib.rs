//! Plücker coordinates of restricted-path matrices: minors, non-intersecting
//! path systems, and sums over the graph of restricted diagrams.

use deodhar_core::diagram::Cell;
use deodhar_networks::NetworkError;
use thiserror::Error;

pub mod graph;
pub mod plucker;
pub mod restricted;

pub use graph::{toggle_graph, ToggleEdge, ToggleGraph, DEFAULT_TOGGLE_GUARD};
pub use plucker::{
    lgv_sum, nonintersecting_dual_systems, nonintersecting_systems, nonzero_pluckers, plucker, plucker_toggle_sum,
    system_sign, Method,
};
pub use restricted::{boundary_paths, togglable_cells, RestrictedDiagram};

#[derive(Debug, Error)]
pub enum ToggleError {
    #[error("{cells} cells exceeds the toggle-graph guard {guard}")]
    GuardExceeded { cells: usize, guard: usize },
    #[error("cell {0} is not togglable")]
    NotTogglable(Cell),
    #[error("pipe through {0} does not form a legal path")]
    IllegalPath(Cell),
    #[error(transparent)]
    Network(#[from] NetworkError),
}
