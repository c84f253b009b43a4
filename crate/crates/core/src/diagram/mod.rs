//! Shapes, fillings, pipe tracing and Go-diagrams.

mod enumerate;
mod filling;
mod go;
pub mod io;
mod partition;
mod reading;

use thiserror::Error;

pub use enumerate::{enumerate_diagrams, go_diagrams, go_diagrams_in_box, go_diagrams_up_to, DiagramClass, DEFAULT_ENUM_GUARD};
pub use filling::{trace, Config, Edge, Filling, PipeTrace, RouteStep, Tile};
pub use go::{classify, subexpression_word, Classification, CrossingPair, GoDiagram, Stone};
pub use partition::{Cell, GrassmannianData, Partition};
pub use reading::{ReadingKind, ReadingOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("subset has {got} distinct elements, expected {expected}")]
    SubsetSize { expected: usize, got: usize },
    #[error("subset element {0} out of range")]
    SubsetOutOfRange(usize),
    #[error("tile grid does not match the shape")]
    ShapeMismatch,
    #[error("cell {0} is outside the shape")]
    CellOutOfShape(Cell),
    #[error("invalid reading order: {0}")]
    InvalidReadingOrder(String),
    #[error("not a Go-diagram: configuration B at {0}")]
    NotGo(Cell),
    #[error("stone at {0} disagrees with the traced configuration")]
    StoneMismatch(Cell),
    #[error("{size} cells exceeds the enumeration guard {guard}")]
    GuardExceeded { size: usize, guard: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
