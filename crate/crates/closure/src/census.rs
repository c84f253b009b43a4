//! Point count of the Grassmannian over `F_q` from the Deodhar cover.

use std::collections::BTreeMap;

use deodhar_core::algebra::{gaussian_binomial, Family, Laurent, Mono, Poly, Ring, Var};
use deodhar_core::diagram::{go_diagrams, Partition, Stone};

use crate::ClosureError;

/// Largest `n` the census runs without an explicit override.
pub const DEFAULT_CENSUS_GUARD: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    pub k: usize,
    pub diagrams: usize,
    /// `Σ_D (q−1)^{#+} q^{#•}` over all Go-diagrams of all shapes in the box.
    pub sum: Poly,
    pub expected: Poly,
}

impl CensusReport {
    pub fn ok(&self) -> bool {
        self.sum == self.expected
    }
}

pub fn fq_cell_census(n: usize, k: usize, guard: usize) -> Result<CensusReport, ClosureError> {
    if n > guard {
        return Err(ClosureError::GuardExceeded { size: n, guard });
    }
    if k > n {
        return Err(ClosureError::Diagram(deodhar_core::diagram::DiagramError::InvalidPartition(format!(
            "k={k} exceeds n={n}"
        ))));
    }
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut diagrams = 0;
    for shape in Partition::all_in_box(k, n) {
        for d in go_diagrams(&shape, usize::MAX)? {
            *counts.entry((d.count(Stone::Plus), d.count(Stone::Black))).or_default() += 1;
            diagrams += 1;
        }
    }
    let q = Laurent::var(Var::new(Family::Q, 0));
    let q_minus_one = q.sub(&Poly::one());
    let mut sum = Poly::zero();
    for ((plus, black), m) in counts {
        let term = q_minus_one
            .pow(plus as i32)?
            .mul_mono(&Mono::var(Var::new(Family::Q, 0), black as i32))
            .mul(&Poly::int(m as i64));
        sum = sum.add(&term);
    }
    Ok(CensusReport { n, k, diagrams, sum, expected: gaussian_binomial(n, k) })
}
