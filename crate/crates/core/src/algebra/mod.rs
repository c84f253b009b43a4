//! Exact coefficient domains, Laurent polynomials, matrices and generators.

pub mod coeff;
pub mod laurent;
pub mod matrix;
pub mod mr;

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

pub use coeff::{rat, Coeff, Fp, Ring};
pub use laurent::{Family, Laurent, Mono, Poly, Var};
pub use matrix::{subsets, transvection, weyl_factor, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by a non-monomial Laurent polynomial")]
    NonMonomialDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("transvection X_({0},{0}) has equal indices")]
    DiagonalTransvection(usize),
    #[error("variable {0} has no value")]
    UnboundVariable(String),
}

/// Gaussian binomial `[n choose k]_q` as a polynomial in `q`, from the product
/// `∏_{i<k} (q^{n-i} - 1)/(q^{k-i} - 1)` with exact polynomial division.
pub fn gaussian_binomial(n: usize, k: usize) -> Poly {
    let mut num = vec![BigInt::from(1)];
    let mut den = vec![BigInt::from(1)];
    if k <= n {
        for i in 0..k {
            num = poly_mul(&num, &q_pow_minus_one(n - i));
            den = poly_mul(&den, &q_pow_minus_one(k - i));
        }
    } else {
        num = vec![BigInt::zero()];
    }
    let quot = poly_div_exact(&num, &den);
    let q = Var::new(Family::Q, 0);
    let mut out = Poly::zero();
    for (e, c) in quot.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&Poly::term(BigRational::from_integer(c.clone()), Mono::var(q, e as i32)));
        }
    }
    out
}

fn q_pow_minus_one(e: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); e + 1];
    v[0] = BigInt::from(-1);
    v[e] += BigInt::from(1);
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len() - 1;
    let lead = &den[dl];
    if rem.len() <= dl {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dl];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dl] / lead;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(|x| x.is_zero()), "inexact polynomial division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_small() {
        assert_eq!(gaussian_binomial(4, 2).to_string(), "q^4+q^3+2q^2+q+1");
        assert_eq!(gaussian_binomial(5, 0).to_string(), "1");
        assert_eq!(gaussian_binomial(5, 5).to_string(), "1");
        assert_eq!(gaussian_binomial(2, 1).to_string(), "q+1");
    }
}
