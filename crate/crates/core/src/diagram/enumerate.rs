use serde::{Deserialize, Serialize};

use super::{classify, Classification, DiagramError, Filling, GoDiagram, Partition};

/// Default cap on the number of cells for exhaustive enumeration.
pub const DEFAULT_ENUM_GUARD: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagramClass {
    All,
    Go,
    Le,
}

/// Fillings of `shape` in the requested class, ordered by row-major bitmask.
pub fn enumerate_diagrams(
    shape: &Partition,
    class: DiagramClass,
    guard: usize,
) -> Result<Vec<Filling>, DiagramError> {
    let size = shape.size();
    if size > guard {
        return Err(DiagramError::GuardExceeded { size, guard });
    }
    Ok((0..1u64 << size)
        .map(|m| Filling::from_mask(shape, m))
        .filter(|f| match class {
            DiagramClass::All => true,
            DiagramClass::Go => classify(f).is_go(),
            DiagramClass::Le => classify(f).is_le(),
        })
        .collect())
}

/// All Go-diagrams of `shape`.
pub fn go_diagrams(shape: &Partition, guard: usize) -> Result<Vec<GoDiagram>, DiagramError> {
    let size = shape.size();
    if size > guard {
        return Err(DiagramError::GuardExceeded { size, guard });
    }
    Ok((0..1u64 << size)
        .filter_map(|m| match classify(&Filling::from_mask(shape, m)) {
            Classification::NotGo { .. } => None,
            Classification::Go(d) | Classification::Le(d) => Some(d),
        })
        .collect())
}

/// Go-diagrams of every shape with at most `max_size` cells, each in its minimal box.
pub fn go_diagrams_up_to(max_size: usize) -> Vec<GoDiagram> {
    Partition::up_to_size(max_size)
        .iter()
        .flat_map(|p| go_diagrams(p, usize::MAX).expect("unguarded"))
        .collect()
}

/// Go-diagrams of every shape in the `k × (n−k)` box.
pub fn go_diagrams_in_box(k: usize, n: usize) -> Vec<GoDiagram> {
    Partition::all_in_box(k, n)
        .iter()
        .flat_map(|p| go_diagrams(p, usize::MAX).expect("unguarded"))
        .collect()
}
