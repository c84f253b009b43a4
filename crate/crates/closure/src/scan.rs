//! Exploratory scan over non-adjacent crossing–uncrossing pairs.
//!
//! The only check performed is a necessary condition for `𝒟_{D′} ⊂ cl(𝒟_D)`:
//! every Plücker coordinate identically zero on `𝒟_D` must vanish on `𝒟_{D′}`.
//! Passing it proves nothing.

use std::collections::BTreeMap;

use serde::Serialize;

use deodhar_core::algebra::{Poly, Ring};
use deodhar_core::diagram::{classify, go_diagrams, Cell, CrossingPair, GoDiagram, Partition, ReadingOrder, Tile};
use deodhar_networks::{restricted_weight_matrix, ParamFamily, Params};

use crate::promote::adjacent_pairs;
use crate::ClosureError;

pub const SCAN_DISCLAIMER: &str =
    "EXPLORATORY: heuristic evidence from coordinate vanishing only; not a proof of containment or non-containment";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConjectureMode {
    /// Pairs with no intermediate pipe forming a pair in between; containment expected.
    Conj1,
    /// Pairs with such an intermediate pipe; non-containment expected.
    Conj2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The necessary condition holds (conj1) or is the only evidence available (conj2).
    Undecided,
    /// Conj1 instance failing the necessary condition.
    Violation,
    /// Conj2 instance where the vanishing check rules out containment.
    NonContainment,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanEntry {
    pub d_prime: Vec<String>,
    pub d: Vec<String>,
    pub c: Cell,
    pub c_prime: Cell,
    pub i: usize,
    pub j: usize,
    /// An intermediate pipe `k` forming a pair with `i` or `j` in between.
    pub witness_k: Option<usize>,
    /// First Plücker index zero on `D` but not on `D′`.
    pub failing_index: Option<Vec<usize>>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub disclaimer: &'static str,
    pub mode: ConjectureMode,
    pub shape: Vec<usize>,
    pub entries: Vec<ScanEntry>,
    /// Adjacent pairs scanned with the same check; all of them should pass.
    pub adjacent_checked: usize,
    pub adjacent_failed: usize,
}

fn symbolic_plucker(d: &GoDiagram) -> Result<BTreeMap<Vec<usize>, Poly>, ClosureError> {
    let beta = Params::<Poly>::symbolic(d, ParamFamily::Beta);
    Ok(restricted_weight_matrix(d, &beta)?.1.plucker_vector())
}

/// First index whose coordinate is zero on `D` and nonzero on `D′`.
fn vanishing_failure(d: &GoDiagram, d_prime: &GoDiagram) -> Result<Option<Vec<usize>>, ClosureError> {
    let on_d = symbolic_plucker(d)?;
    let on_dp = symbolic_plucker(d_prime)?;
    Ok(on_d.into_iter().find(|(s, v)| v.is_zero() && !on_dp[s].is_zero()).map(|(s, _)| s))
}

/// Replace the stones at the pair by `+`, recolouring the rest; `None` if the
/// result has the forbidden configuration.
fn promote_recolour(d_prime: &GoDiagram, p: &CrossingPair) -> Option<GoDiagram> {
    let mut f = d_prime.filling().clone();
    f.set(p.c, Tile::Elbow);
    f.set(p.c_prime, Tile::Elbow);
    classify(&f).diagram()
}

fn intermediate_witness(d_prime: &GoDiagram, p: &CrossingPair, reading: &ReadingOrder) -> Option<usize> {
    let (lo, hi) = {
        let (a, b) = (reading.label(p.c), reading.label(p.c_prime));
        (a.min(b), a.max(b))
    };
    d_prime
        .crossing_pairs()
        .into_iter()
        .filter(|q| {
            let l = reading.label(q.c);
            l > lo && l < hi
        })
        .find_map(|q| match (q.i, q.j) {
            (a, k) if a == p.i && k > p.i && k < p.j => Some(k),
            (k, b) if b == p.j && k > p.i && k < p.j => Some(k),
            _ => None,
        })
}

/// Scan every Go-diagram of `shape` (at most `guard` cells).
pub fn conjecture_scan(shape: &Partition, mode: ConjectureMode, guard: usize) -> Result<ScanReport, ClosureError> {
    let size = shape.size();
    if size > guard {
        return Err(ClosureError::GuardExceeded { size, guard });
    }
    let reading = ReadingOrder::row_major(shape);
    let mut entries = Vec::new();
    let (mut adjacent_checked, mut adjacent_failed) = (0, 0);
    for d_prime in go_diagrams(shape, guard)? {
        for p in adjacent_pairs(&d_prime) {
            if let Some(d) = promote_recolour(&d_prime, &p) {
                adjacent_checked += 1;
                if vanishing_failure(&d, &d_prime)?.is_some() {
                    adjacent_failed += 1;
                }
            }
        }
        for p in d_prime.crossing_pairs().into_iter().filter(|p| p.j > p.i + 1) {
            let Some(d) = promote_recolour(&d_prime, &p) else { continue };
            let witness_k = intermediate_witness(&d_prime, &p, &reading);
            if witness_k.is_some() != (mode == ConjectureMode::Conj2) {
                continue;
            }
            let failing_index = vanishing_failure(&d, &d_prime)?;
            let verdict = match (mode, failing_index.is_some()) {
                (_, false) => Verdict::Undecided,
                (ConjectureMode::Conj1, true) => Verdict::Violation,
                (ConjectureMode::Conj2, true) => Verdict::NonContainment,
            };
            entries.push(ScanEntry {
                d_prime: d_prime.stone_rows(),
                d: d.stone_rows(),
                c: p.c,
                c_prime: p.c_prime,
                i: p.i,
                j: p.j,
                witness_k,
                failing_index,
                verdict,
            });
        }
    }
    Ok(ScanReport {
        disclaimer: SCAN_DISCLAIMER,
        mode,
        shape: shape.parts().to_vec(),
        entries,
        adjacent_checked,
        adjacent_failed,
    })
}
