//! Cross-check of `R_D` against the Marsh–Rietsch parametrization over small fields.

use std::collections::BTreeSet;

use deodhar_core::algebra::mr::{grassmannian_projection, marsh_rietsch_matrix, PhiConvention};
use deodhar_core::algebra::{Fp, Matrix, Ring};
use deodhar_core::diagram::{go_diagrams_up_to, GoDiagram, ReadingOrder, Stone};
use deodhar_core::perm::JClass;
use deodhar_networks::{restricted_weight_matrix, ParamFamily, Params};

use crate::ClosureError;

#[derive(Clone, Debug, PartialEq)]
pub struct MrReport {
    pub prime: u64,
    pub convention: PhiConvention,
    pub reversed: bool,
    pub components: usize,
    /// Stone rows of the diagrams whose two point sets differ.
    pub mismatches: Vec<Vec<String>>,
}

impl MrReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Plücker vector scaled so the first nonzero coordinate is 1.
fn projective_point<const P: u64>(m: &Matrix<Fp<P>>) -> Vec<u64> {
    let v = m.plucker_vector_field();
    let Some(lead) = v.iter().find(|x| !x.is_zero()) else {
        return vec![0; v.len()];
    };
    let inv = lead.inv().expect("field element");
    v.iter().map(|x| x.mul(&inv).value()).collect()
}

/// Every tuple with `slots[j]` = whether slot `j` must be nonzero.
fn tuples<const P: u64>(slots: &[bool]) -> Vec<Vec<Fp<P>>> {
    let mut out = vec![Vec::new()];
    for &nonzero in slots {
        let lo = u64::from(nonzero);
        out = out
            .into_iter()
            .flat_map(|t| {
                (lo..P).map(move |x| {
                    let mut t = t.clone();
                    t.push(Fp::new(x as i64));
                    t
                })
            })
            .collect();
    }
    out
}

fn reverse_columns<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    Matrix::from_rows((0..m.rows()).map(|r| m.row(r).iter().rev().cloned().collect()).collect())
}

fn restricted_points<const P: u64>(d: &GoDiagram) -> Result<BTreeSet<Vec<u64>>, ClosureError> {
    let cells: Vec<_> = d.shape().cells().into_iter().filter(|&c| d.stone(c) != Stone::White).collect();
    let slots: Vec<bool> = cells.iter().map(|&c| d.stone(c) == Stone::Plus).collect();
    let mut out = BTreeSet::new();
    for t in tuples::<P>(&slots) {
        let beta = Params::from_fn_unchecked(d, ParamFamily::Beta, |c| {
            cells.iter().position(|&x| x == c).map_or(Fp::new(0), |j| t[j])
        });
        out.insert(projective_point(&restricted_weight_matrix(d, &beta)?.1));
    }
    Ok(out)
}

fn mr_points<const P: u64>(d: &GoDiagram, conv: PhiConvention, reversed: bool) -> Result<BTreeSet<Vec<u64>>, ClosureError> {
    let shape = d.shape();
    let reading = ReadingOrder::row_major(shape);
    let word = shape.grassmannian_data(&reading).word;
    let jclass = d.subexpression(&reading).jclass;
    let slots: Vec<bool> = jclass.iter().filter(|c| **c != JClass::Up).map(|c| *c == JClass::Stay).collect();
    let mut out = BTreeSet::new();
    for t in tuples::<P>(&slots) {
        let (mut p, mut q) = (Vec::new(), Vec::new());
        for (x, &stay) in t.iter().zip(&slots) {
            if stay {
                p.push(*x);
            } else {
                q.push(*x);
            }
        }
        let g = marsh_rietsch_matrix(shape.n(), &word, &jclass, &p, &q, conv)?;
        let mut m = grassmannian_projection(&g, shape.k());
        if reversed {
            m = reverse_columns(&m);
        }
        out.insert(projective_point(&m));
    }
    Ok(out)
}

/// Both point sets of one component: `(from R_D, from Marsh–Rietsch)`. With
/// `reversed`, the Marsh–Rietsch coordinates are read with columns `n, …, 1`.
pub fn component_points<const P: u64>(
    d: &GoDiagram,
    conv: PhiConvention,
    reversed: bool,
) -> Result<(BTreeSet<Vec<u64>>, BTreeSet<Vec<u64>>), ClosureError> {
    Ok((restricted_points::<P>(d)?, mr_points::<P>(d, conv, reversed)?))
}

/// Compare, diagram by diagram for all shapes with at most `max_size` cells, the
/// projective Plücker vectors of all `R_D` parameter tuples with those of all
/// Marsh–Rietsch tuples over `F_P`.
pub fn mr_cross_check<const P: u64>(
    max_size: usize,
    conv: PhiConvention,
    reversed: bool,
) -> Result<MrReport, ClosureError> {
    let mut components = 0;
    let mut mismatches = Vec::new();
    for d in go_diagrams_up_to(max_size) {
        components += 1;
        let (a, b) = component_points::<P>(&d, conv, reversed)?;
        if a != b {
            mismatches.push(d.stone_rows());
        }
    }
    Ok(MrReport { prime: P, convention: conv, reversed, components, mismatches })
}
