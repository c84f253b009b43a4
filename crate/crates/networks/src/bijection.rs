//! Non-intersecting systems of restricted paths and their correspondence with
//! single paths of the Talaska–Williams network.

use std::collections::{BTreeSet, HashSet};

use deodhar_core::algebra::Ring;
use deodhar_core::diagram::{Cell, GoDiagram, Stone};
use deodhar_core::Permutation;

use crate::params::Params;
use crate::paths::{corner_weight, enumerate_paths, sources, Entry, Exit, PathKind, RestrictedPath, Target};
use crate::tw::{sources_between, tw_paths, tw_sources, TwPath};
use crate::NetworkError;

/// Non-intersecting systems, one path per entry of `srcs`, whose sinks are exactly `sinks`.
/// Paths are listed in the order of `srcs`.
///
/// Two paths intersect when they enter the same cell through the same side: the
/// legal moves depend only on that pair, so it is the vertex at which tails can be
/// swapped. Crossing strands inside a cell do not intersect.
pub fn nonintersecting_systems(
    d: &GoDiagram,
    kind: PathKind,
    srcs: &[(usize, Target)],
    sinks: &BTreeSet<usize>,
) -> Vec<Vec<RestrictedPath>> {
    if srcs.len() != sinks.len() {
        return Vec::new();
    }
    let options: Vec<Vec<RestrictedPath>> = srcs
        .iter()
        .map(|&(s, first)| enumerate_paths(d, kind, s, first).into_iter().filter(|p| sinks.contains(&p.sink)).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<RestrictedPath> = Vec::new();
    let mut used_cells: HashSet<(Cell, Entry)> = HashSet::new();
    let mut used_sinks: HashSet<usize> = HashSet::new();
    fn rec(
        i: usize,
        options: &[Vec<RestrictedPath>],
        chosen: &mut Vec<RestrictedPath>,
        used_cells: &mut HashSet<(Cell, Entry)>,
        used_sinks: &mut HashSet<usize>,
        out: &mut Vec<Vec<RestrictedPath>>,
    ) {
        if i == options.len() {
            out.push(chosen.clone());
            return;
        }
        for p in &options[i] {
            if used_sinks.contains(&p.sink) || p.steps.iter().any(|s| used_cells.contains(&(s.cell, s.entry))) {
                continue;
            }
            used_sinks.insert(p.sink);
            used_cells.extend(p.steps.iter().map(|s| (s.cell, s.entry)));
            chosen.push(p.clone());
            rec(i + 1, options, chosen, used_cells, used_sinks, out);
            let p = chosen.pop().unwrap();
            for s in &p.steps {
                used_cells.remove(&(s.cell, s.entry));
            }
            used_sinks.remove(&p.sink);
        }
    }
    rec(0, &options, &mut chosen, &mut used_cells, &mut used_sinks, &mut out);
    out
}

/// West-boundary sources of the restricted network, top to bottom.
pub fn west_sources(d: &GoDiagram) -> Vec<(usize, Target)> {
    sources(d).into_iter().take(d.shape().k()).collect()
}

/// Sink labels `h > v₁` of `M_D` for which the correspondence is defined.
pub fn bijection_targets(d: &GoDiagram) -> Vec<usize> {
    let v = tw_sources(d);
    let (_, cols) = d.shape().boundary_labels();
    let mut hs: Vec<usize> = cols.into_iter().filter(|&h| v.first().is_some_and(|&v1| h > v1)).collect();
    hs.sort();
    hs
}

/// `𝒫_h`: systems from the west sources to `{v₂, …, v_k, h}`.
pub fn systems_for(d: &GoDiagram, h: usize) -> Vec<Vec<RestrictedPath>> {
    let v = tw_sources(d);
    let sinks: BTreeSet<usize> = v.iter().skip(1).copied().chain([h]).collect();
    nonintersecting_systems(d, PathKind::Restricted, &west_sources(d), &sinks)
}

/// Sign of `τ_P`, where `τ_P(i)` is the path reaching the `i`-th of `(h, v₂, …, v_k)`.
pub fn tau_sign(d: &GoDiagram, h: usize, system: &[RestrictedPath]) -> i64 {
    let v = tw_sources(d);
    let targets: Vec<usize> = [h].into_iter().chain(v.iter().skip(1).copied()).collect();
    let pos: Vec<usize> = system.iter().map(|p| targets.iter().position(|&t| t == p.sink).expect("sink in target set")).collect();
    Permutation::sort_sign(&pos)
}

/// `ϱ`: sources of `M_D` strictly between `v₁` and `h`.
pub fn varrho(d: &GoDiagram, h: usize) -> usize {
    sources_between(d, tw_sources(d)[0], h)
}

/// Column of the unique downward step out of each row `0..=ϱ`.
fn down_sequence(d: &GoDiagram, h: usize, system: &[RestrictedPath]) -> Result<Vec<usize>, NetworkError> {
    let rows = varrho(d, h) + 1;
    (0..rows)
        .map(|r| {
            let mut cols = system.iter().flat_map(|p| &p.steps).filter(|s| s.cell.row == r && s.exit == Exit::Down);
            match (cols.next(), cols.next()) {
                (Some(s), None) => Ok(s.cell.col),
                _ => Err(NetworkError::Malformed(format!("row {r} does not have exactly one downward step"))),
            }
        })
        .collect()
}

/// The bijection `f: 𝒫_h → 𝒬_h`.
pub fn system_to_tw(d: &GoDiagram, h: usize, system: &[RestrictedPath]) -> Result<TwPath, NetworkError> {
    let t = down_sequence(d, h, system)?;
    let v1 = tw_sources(d)[0];
    tw_paths(d, v1)
        .into_iter()
        .find(|q| q.sink == h && q.down_columns(d) == t)
        .ok_or_else(|| NetworkError::Malformed(format!("no network path goes down in columns {t:?}")))
}

/// The inverse `f⁻¹: 𝒬_h → 𝒫_h`, built row by row from the columns where `Q` goes down.
pub fn tw_to_system(d: &GoDiagram, q: &TwPath) -> Result<Vec<RestrictedPath>, NetworkError> {
    let t = q.down_columns(d);
    let k = d.shape().k();
    // owner[r]: whether the path starting in row r is the one going down there.
    let mut owner = vec![false; k];
    if let Some(o) = owner.first_mut() {
        *o = !t.is_empty();
    }
    for r in 1..t.len() {
        let above = Cell::new(r, t[r - 1]);
        if d.stone(above) == Stone::Plus {
            owner[r] = true;
        } else if t[r] != t[r - 1] {
            return Err(NetworkError::Malformed(format!("path leaves column {} at a non-plus cell", t[r - 1])));
        }
    }
    west_sources(d)
        .into_iter()
        .enumerate()
        .map(|(row, (s, first))| {
            let rule = |cell: Cell, entry: Entry| match entry {
                Entry::Left if owner[row] && cell.row == row && cell.col == t[row] => Exit::Down,
                Entry::Left => Exit::Right,
                Entry::Top if d.stone(cell) == Stone::Plus => Exit::Right,
                Entry::Top => Exit::Down,
            };
            RestrictedPath::walk(d, PathKind::Restricted, s, first, &rule)
        })
        .collect()
}

/// `sign(τ_P)·wt′(P)` and `(−1)^ϱ·wt_TW(f(P))` for the given corner weights.
pub fn weight_relation<T: Ring>(
    d: &GoDiagram,
    h: usize,
    system: &[RestrictedPath],
    alpha: &Params<T>,
    tw: &Params<T>,
) -> Result<(T, T), NetworkError> {
    let mut lhs = T::one();
    for p in system {
        for s in &p.steps {
            lhs = lhs.mul(&corner_weight(alpha, s).ok_or(NetworkError::NotInvertible(s.cell))?);
        }
    }
    if tau_sign(d, h, system) < 0 {
        lhs = lhs.neg();
    }
    let q = system_to_tw(d, h, system)?;
    let mut rhs = q.weight(tw);
    if varrho(d, h) % 2 == 1 {
        rhs = rhs.neg();
    }
    Ok((lhs, rhs))
}

