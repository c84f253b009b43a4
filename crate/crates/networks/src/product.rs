//! Products of transvections indexed by cells of a Go-diagram.

use deodhar_core::algebra::{transvection, Matrix, Ring};
use deodhar_core::diagram::{GoDiagram, ReadingOrder, Stone};

use crate::params::Params;
use crate::NetworkError;

fn ordered_product<T: Ring>(
    d: &GoDiagram,
    params: &Params<T>,
    reading: &ReadingOrder,
    index: impl Fn(&GoDiagram, deodhar_core::diagram::Cell) -> (usize, usize),
) -> Result<Matrix<T>, NetworkError> {
    params.validate_zero_at_white(d)?;
    let n = d.shape().n();
    let mut m = Matrix::identity(n);
    for c in reading.cells_descending() {
        if d.stone(c) == Stone::White {
            continue;
        }
        let (i, j) = index(d, c);
        m = m.mul(&transvection(n, i, j, params.get(c).clone())?);
    }
    Ok(m)
}

/// `∏ X_{σ_D(b)}(β_b)`, higher labels on the left. Equals `R̃_D` for any reading order.
pub fn product_formula_matrix<T: Ring>(
    d: &GoDiagram,
    beta: &Params<T>,
    reading: &ReadingOrder,
) -> Result<Matrix<T>, NetworkError> {
    ordered_product(d, beta, reading, |d, c| d.sigma(c))
}

/// `∏ X_{σ*_D(b)}(β*_b)` in the same order.
pub fn dual_product_matrix<T: Ring>(
    d: &GoDiagram,
    beta_star: &Params<T>,
    reading: &ReadingOrder,
) -> Result<Matrix<T>, NetworkError> {
    ordered_product(d, beta_star, reading, |d, c| d.sigma_star(c))
}
