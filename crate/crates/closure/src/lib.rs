//! Closure relations between Deodhar components.
//!
//! The core is the D′-distortion of `R̃_D`: the transvection product of a
//! promoted diagram `D` is conjugated between a crossing–uncrossing pair of `D′`
//! and the resulting excited factors are migrated to their cooling sites. Solving
//! the resulting triangular system gives a family of points of `𝒟_D` whose limit
//! as `γ_c → ∞` is an arbitrary point of `𝒟_{D′}`.

pub mod census;
pub mod distort;
pub mod mr;
pub mod pad;
pub mod promote;
pub mod scan;
pub mod solve;
pub mod verify;

use deodhar_core::algebra::AlgebraError;
use deodhar_core::diagram::{Cell, DiagramError};
use deodhar_networks::NetworkError;
use thiserror::Error;

pub use census::{fq_cell_census, CensusReport, DEFAULT_CENSUS_GUARD};
pub use distort::{distort, Distortion, Factor, FactorTable, Role, Snapshot};
pub use mr::{component_points, mr_cross_check, MrReport};
pub use pad::{pad, pad_instance, truncate, PadSide, PaddedInstance};
pub use promote::{adjacent_pairs, find_pair, promote, ClosureInstance};
pub use scan::{conjecture_scan, ConjectureMode, ScanEntry, ScanReport, Verdict, SCAN_DISCLAIMER};
pub use solve::{solve_gamma, Equation, GammaSolution};
pub use verify::{numeric_limit_check, verify_closure_general, verify_closure_identity_case, ClosureReport, GeneralReport};

/// Default cap on `|λ|` for exhaustive closure scans.
pub const DEFAULT_CLOSURE_GUARD: usize = 9;

#[derive(Debug, Error)]
pub enum ClosureError {
    #[error("cells {0} and {1} do not form a crossing-uncrossing pair")]
    NotAPair(Cell, Cell),
    #[error("pipes {0} and {1} at the pair are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("the diagram's permutation is not the identity")]
    NotIdentity,
    #[error("promoting the pair changed the stone at {0}")]
    StoneChanged(Cell),
    #[error("no cooling site for X{pair:?} created at {cell}")]
    NoCoolingSite { cell: Cell, pair: (usize, usize) },
    #[error("excited factor X{0:?} has increasing indices")]
    IncreasingExcited((usize, usize)),
    #[error("factors X{0:?} and X{1:?} cannot be exchanged")]
    Unmovable((usize, usize), (usize, usize)),
    #[error("unexpected factor X{pair:?} left at {cell}")]
    UnexpectedFactor { cell: Cell, pair: (usize, usize) },
    #[error("product changed at move {step}: {what}")]
    ProductMismatch { step: usize, what: String },
    #[error("distortion did not terminate within {0} moves")]
    NoTermination(usize),
    #[error("equation at {0} is not triangular")]
    NonTriangular(Cell),
    #[error("{size} cells exceeds the guard {guard}")]
    GuardExceeded { size: usize, guard: usize },
    #[error("padding did not reach the identity permutation")]
    PaddingStuck,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Network(#[from] NetworkError),
}
