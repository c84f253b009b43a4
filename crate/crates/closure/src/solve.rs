//! Triangular solve of the distorted parameters against `R̃_{D′}`.

use std::collections::BTreeMap;

use deodhar_core::algebra::{Family, Laurent, Poly, Ring, Var};
use deodhar_core::diagram::{Cell, Stone};
use deodhar_networks::cell_label;

use crate::distort::{gamma_var, Distortion};
use crate::ClosureError;

/// `lhs = rhs` at one cell: the entry of the distorted factor against `β_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Equation {
    pub cell: Cell,
    pub lhs: Poly,
    pub rhs: Poly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GammaSolution {
    pub gamma_c: Var,
    pub equations: Vec<Equation>,
    /// `γ_b ↦` Laurent polynomial in `β` and `γ_c`, for every cell except `c`.
    pub subs: BTreeMap<Var, Poly>,
}

impl GammaSolution {
    pub fn equation(&self, cell: Cell) -> Option<&Equation> {
        self.equations.iter().find(|e| e.cell == cell)
    }

    pub fn substitute(&self, p: &Poly) -> Result<Poly, ClosureError> {
        Ok(p.substitute(&|v| self.subs.get(&v).cloned())?)
    }
}

/// Solve the per-cell equations of a distortion in increasing reading order.
pub fn solve_gamma(dist: &Distortion) -> Result<GammaSolution, ClosureError> {
    let inst = &dist.instance;
    let (d, d_prime) = (&inst.d, &inst.d_prime);
    let gc = dist.gamma_c();
    let table = dist.final_table();
    let mut equations = Vec::new();
    let mut subs: BTreeMap<Var, Poly> = BTreeMap::new();
    for cell in dist.reading.cells_ascending() {
        if cell == inst.c() {
            continue;
        }
        let lhs = table.principal(cell).expect("every cell keeps a principal factor").entry.clone();
        let rhs = match d_prime.stone(cell) {
            Stone::White => Poly::zero(),
            _ => Laurent::sym(Family::Beta, cell_label(d_prime, cell)),
        };
        let v = gamma_var(d, cell);
        if lhs.vars().iter().any(|&w| w != v && w != gc && w.family == Family::Gamma && !subs.contains_key(&w)) {
            return Err(ClosureError::NonTriangular(cell));
        }
        let l = lhs.substitute(&|w| if w == v { None } else { subs.get(&w).cloned() })?;
        let value = if d.stone(cell) == Stone::White {
            if !l.is_zero() {
                return Err(ClosureError::NonTriangular(cell));
            }
            Poly::zero()
        } else {
            match l.degree_range(v) {
                Some((lo, 1)) if lo >= 0 => {}
                _ => return Err(ClosureError::NonTriangular(cell)),
            }
            let u = l.coefficient_of(v, 1);
            if u.as_monomial().is_none() || u.vars().iter().any(|&w| w != gc) {
                return Err(ClosureError::NonTriangular(cell));
            }
            rhs.sub(&l.coefficient_of(v, 0)).div(&u)?
        };
        subs.insert(v, value);
        equations.push(Equation { cell, lhs, rhs });
    }
    Ok(GammaSolution { gamma_c: gc, equations, subs })
}
