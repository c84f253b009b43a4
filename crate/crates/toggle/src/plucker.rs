use std::collections::BTreeSet;

use deodhar_core::algebra::{subsets, Ring};
use deodhar_core::diagram::GoDiagram;
use deodhar_core::Permutation;
use deodhar_networks::bijection::{self, west_sources};
use deodhar_networks::paths::{jump_weight, sources, PathKind, RestrictedPath};
use deodhar_networks::{restricted_weight_matrix, Params};
use serde::{Deserialize, Serialize};

use crate::graph::{toggle_graph, ToggleGraph};
use crate::ToggleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Minor,
    Lgv,
    Toggle,
}

/// `𝔑(D)` restricted to sink set `I`.
pub fn nonintersecting_systems(d: &GoDiagram, i: &[usize]) -> Vec<Vec<RestrictedPath>> {
    let sinks: BTreeSet<usize> = i.iter().copied().collect();
    bijection::nonintersecting_systems(d, PathKind::Restricted, &west_sources(d), &sinks)
}

/// `𝔑*(D)` restricted to sink set `I`, sources read on the north boundary right to left.
pub fn nonintersecting_dual_systems(d: &GoDiagram, i: &[usize]) -> Vec<Vec<RestrictedPath>> {
    let sinks: BTreeSet<usize> = i.iter().copied().collect();
    let k = d.shape().k();
    let mut srcs: Vec<_> = sources(d).into_iter().skip(k).collect();
    srcs.reverse();
    bijection::nonintersecting_systems(d, PathKind::Dual, &srcs, &sinks)
}

/// Sign of the permutation taking the sources (in order) to the sorted sinks.
pub fn system_sign(system: &[RestrictedPath]) -> i64 {
    let sinks: Vec<usize> = system.iter().map(|p| p.sink).collect();
    Permutation::sort_sign(&sinks)
}

pub fn lgv_sum<T: Ring>(d: &GoDiagram, beta: &Params<T>, i: &[usize]) -> T {
    let w = jump_weight(beta);
    nonintersecting_systems(d, i).iter().fold(T::zero(), |acc, sys| {
        let wt = sys.iter().fold(T::one(), |a, p| a.mul(&p.weight(&w)));
        if system_sign(sys) < 0 {
            acc.sub(&wt)
        } else {
            acc.add(&wt)
        }
    })
}

/// `Σ_{E : I_E = I} sign(π_E) wt(E)` over the toggle graph.
pub fn plucker_toggle_sum<T: Ring>(d: &GoDiagram, beta: &Params<T>, i: &[usize], guard: usize) -> Result<T, ToggleError> {
    Ok(graph_sum(&toggle_graph(d, guard)?, beta, i))
}

fn graph_sum<T: Ring>(g: &ToggleGraph, beta: &Params<T>, i: &[usize]) -> T {
    let mut want = i.to_vec();
    want.sort();
    g.vertices.iter().filter(|e| e.index_set() == want).fold(T::zero(), |acc, e| {
        let wt = e.weight(beta);
        if e.sign() < 0 {
            acc.sub(&wt)
        } else {
            acc.add(&wt)
        }
    })
}

/// `Δ_I(R_D)` by the chosen method; `I` is 1-based and need not be sorted.
pub fn plucker<T: Ring>(d: &GoDiagram, beta: &Params<T>, i: &[usize], method: Method, guard: usize) -> Result<T, ToggleError> {
    let mut sorted = i.to_vec();
    sorted.sort();
    match method {
        Method::Minor => {
            let (_, r) = restricted_weight_matrix(d, beta)?;
            Ok(r.minor(&sorted).map_err(deodhar_networks::NetworkError::from)?)
        }
        Method::Lgv => Ok(lgv_sum(d, beta, &sorted)),
        Method::Toggle => plucker_toggle_sum(d, beta, &sorted, guard),
    }
}

/// `{I_E : E ∈ 𝔇(D)}` filtered to the index sets whose toggle sum is nonzero.
pub fn nonzero_pluckers<T: Ring>(d: &GoDiagram, beta: &Params<T>, guard: usize) -> Result<BTreeSet<Vec<usize>>, ToggleError> {
    let g = toggle_graph(d, guard)?;
    let mut out = BTreeSet::new();
    for (i, _) in g.by_index_set() {
        if !graph_sum(&g, beta, &i).is_zero() {
            out.insert(i);
        }
    }
    Ok(out)
}

/// Every `k`-subset of `[n]`, for exhaustive scans.
pub fn all_index_sets(d: &GoDiagram) -> Vec<Vec<usize>> {
    subsets(d.shape().n(), d.shape().k())
}
