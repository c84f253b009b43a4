//! Generator matrices `φ_i`, `x_i`, `y_i`, `ṡ_i` and the Marsh–Rietsch product.

use super::coeff::Ring;
use super::matrix::Matrix;
use super::AlgebraError;
use crate::perm::JClass;

/// Where `φ_i` places its 2×2 block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiConvention {
    /// The upper-left block entry is the `(i+1)`-th diagonal entry counted from the bottom.
    Bottom,
    /// The usual convention: block on rows and columns `i, i+1`.
    Top,
}

impl PhiConvention {
    /// 1-based index of the block's first row.
    pub fn block_row(self, n: usize, i: usize) -> usize {
        match self {
            PhiConvention::Top => i,
            PhiConvention::Bottom => n - i,
        }
    }
}

pub fn phi<T: Ring>(n: usize, i: usize, conv: PhiConvention, block: [[T; 2]; 2]) -> Result<Matrix<T>, AlgebraError> {
    if i == 0 || i >= n {
        return Err(AlgebraError::IndexOutOfRange(i));
    }
    let t = conv.block_row(n, i) - 1;
    let mut m = Matrix::identity(n);
    let [[a, b], [c, d]] = block;
    m.set(t, t, a);
    m.set(t, t + 1, b);
    m.set(t + 1, t, c);
    m.set(t + 1, t + 1, d);
    Ok(m)
}

pub fn x_gen<T: Ring>(n: usize, i: usize, p: T, conv: PhiConvention) -> Result<Matrix<T>, AlgebraError> {
    phi(n, i, conv, [[T::one(), p], [T::zero(), T::one()]])
}

pub fn y_gen<T: Ring>(n: usize, i: usize, p: T, conv: PhiConvention) -> Result<Matrix<T>, AlgebraError> {
    phi(n, i, conv, [[T::one(), T::zero()], [p, T::one()]])
}

pub fn s_dot<T: Ring>(n: usize, i: usize, conv: PhiConvention) -> Result<Matrix<T>, AlgebraError> {
    phi(n, i, conv, [[T::zero(), T::one().neg()], [T::one(), T::zero()]])
}

pub fn s_dot_inv<T: Ring>(n: usize, i: usize, conv: PhiConvention) -> Result<Matrix<T>, AlgebraError> {
    phi(n, i, conv, [[T::zero(), T::one()], [T::one().neg(), T::zero()]])
}

/// `g_1 ⋯ g_m` with `g_l = x(q)ṡ⁻¹` at `Down`, `y(p)` at `Stay`, `ṡ` at `Up` positions.
///
/// `p` and `q` are consumed in word order.
pub fn marsh_rietsch_matrix<T: Ring>(
    n: usize,
    word: &[usize],
    jclass: &[JClass],
    p: &[T],
    q: &[T],
    conv: PhiConvention,
) -> Result<Matrix<T>, AlgebraError> {
    if word.len() != jclass.len() {
        return Err(AlgebraError::SizeMismatch { expected: word.len(), got: jclass.len() });
    }
    let stays = jclass.iter().filter(|c| **c == JClass::Stay).count();
    let downs = jclass.iter().filter(|c| **c == JClass::Down).count();
    if p.len() != stays {
        return Err(AlgebraError::SizeMismatch { expected: stays, got: p.len() });
    }
    if q.len() != downs {
        return Err(AlgebraError::SizeMismatch { expected: downs, got: q.len() });
    }
    if p.iter().any(|x| x.is_zero()) {
        return Err(AlgebraError::DivisionByZero);
    }
    let (mut pi, mut qi) = (p.iter(), q.iter());
    let mut g = Matrix::identity(n);
    for (&i, c) in word.iter().zip(jclass) {
        let f = match c {
            JClass::Up => s_dot(n, i, conv)?,
            JClass::Stay => y_gen(n, i, pi.next().expect("counted").clone(), conv)?,
            JClass::Down => x_gen(n, i, qi.next().expect("counted").clone(), conv)?.mul(&s_dot_inv(n, i, conv)?),
        };
        g = g.mul(&f);
    }
    Ok(g)
}

/// Row-space representative of the projection to `Gr_{k,n}`: the transpose of the
/// first `k` columns.
pub fn grassmannian_projection<T: Ring>(g: &Matrix<T>, k: usize) -> Matrix<T> {
    let n = g.rows();
    Matrix::from_rows((0..k).map(|c| (0..n).map(|r| g.get(r, c).clone()).collect()).collect())
}
