//! Monomial changes of parameters: corner weights `α` against jump weights `β`,
//! and `α` against Talaska–Williams weights `(a, c)`.

use deodhar_core::algebra::Ring;
use deodhar_core::diagram::{Cell, Edge, GoDiagram, ReadingOrder, Stone};

use crate::params::{ParamFamily, Params};
use crate::tw::{chi, rho};
use crate::NetworkError;

fn inv_at<T: Ring>(x: &T, c: Cell) -> Result<T, NetworkError> {
    x.inv().ok_or(NetworkError::NotInvertible(c))
}

/// Corner weight of pipe `p` strictly south-east of `b`, i.e. from `b` to its sink,
/// not counting the turn at `b`.
fn segment_weight<T: Ring>(d: &GoDiagram, alpha: &Params<T>, p: usize, b: Cell) -> Result<T, NetworkError> {
    let route = &d.trace().routes[p - 1];
    let at = route.iter().position(|s| s.cell == b).expect("pipe passes b");
    let mut w = T::one();
    for s in &route[..at] {
        match (s.entry, s.exit) {
            (Edge::South, Edge::West) => w = w.mul(alpha.get(s.cell)),
            (Edge::East, Edge::North) => w = w.mul(&inv_at(alpha.get(s.cell), s.cell)?.neg()),
            _ => {}
        }
    }
    Ok(w)
}

/// `wt′(⁻b)/wt′(⁺b)` where `⁺b` leaves `b` west and `⁻b` leaves it north.
fn ratio<T: Ring>(d: &GoDiagram, alpha: &Params<T>, b: Cell) -> Result<T, NetworkError> {
    let (plus, minus) = d.sigma(b);
    let num = segment_weight(d, alpha, minus, b)?;
    let den = segment_weight(d, alpha, plus, b)?;
    Ok(num.mul(&inv_at(&den, b)?))
}

pub fn alpha_to_beta<T: Ring>(d: &GoDiagram, alpha: &Params<T>) -> Result<Params<T>, NetworkError> {
    alpha.validate(d)?;
    let mut err = None;
    let beta = Params::from_fn_unchecked(d, ParamFamily::Beta, |b| {
        let a = alpha.get(b);
        let t = match d.stone(b) {
            Stone::White => return T::zero(),
            Stone::Plus => a.inv().expect("validated"),
            Stone::Black => a.clone(),
        };
        match ratio(d, alpha, b) {
            Ok(r) => t.mul(&r),
            Err(e) => {
                err.get_or_insert(e);
                T::zero()
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(beta),
    }
}

/// Inverse of [`alpha_to_beta`]. Segment weights at `b` only involve cells with
/// smaller row-major labels, so cells are solved from the south-east corner.
pub fn beta_to_alpha<T: Ring>(d: &GoDiagram, beta: &Params<T>) -> Result<Params<T>, NetworkError> {
    beta.validate(d)?;
    let mut alpha = Params::from_fn_unchecked(d, ParamFamily::Alpha, |_| T::zero());
    for b in ReadingOrder::row_major(d.shape()).cells_ascending() {
        let v = match d.stone(b) {
            Stone::White => continue,
            Stone::Plus => ratio(d, &alpha, b)?.mul(&inv_at(beta.get(b), b)?),
            Stone::Black => beta.get(b).mul(&inv_at(&ratio(d, &alpha, b)?, b)?),
        };
        alpha.set(b, v);
    }
    Ok(alpha)
}

fn parity_sign<T: Ring>(x: T, odd: bool) -> T {
    if odd {
        x.neg()
    } else {
        x
    }
}

fn chi_data<T: Ring>(d: &GoDiagram, alpha: &Params<T>, b: Cell) -> (T, usize) {
    match chi(d, b) {
        Some(c) => (alpha.get(c).clone(), rho(d, c)),
        None => (T::one(), 0),
    }
}

/// `a_b` (at `+`) or `c_b` (at `•`) as `(−1)^{ρ(b)−ρ(χ(b))} α_b / α_{χ(b)}`.
pub fn alpha_to_tw<T: Ring>(d: &GoDiagram, alpha: &Params<T>) -> Result<Params<T>, NetworkError> {
    alpha.validate(d)?;
    Ok(Params::from_fn_unchecked(d, ParamFamily::Tw, |b| {
        if d.stone(b) == Stone::White {
            return T::zero();
        }
        let (ac, rc) = chi_data(d, alpha, b);
        let q = alpha.get(b).mul(&ac.inv().expect("α invertible at +"));
        parity_sign(q, (rho(d, b) + rc) % 2 == 1)
    }))
}

pub fn tw_to_alpha<T: Ring>(d: &GoDiagram, tw: &Params<T>) -> Result<Params<T>, NetworkError> {
    tw.validate(d)?;
    let mut alpha = Params::from_fn_unchecked(d, ParamFamily::Alpha, |_| T::zero());
    for r in 0..d.shape().num_rows() {
        for col in (0..d.shape().row_len(r)).rev() {
            let b = Cell::new(r, col);
            if d.stone(b) == Stone::White {
                continue;
            }
            let (ac, rc) = chi_data(d, &alpha, b);
            let v = parity_sign(tw.get(b).mul(&ac), (rho(d, b) + rc) % 2 == 1);
            alpha.set(b, v);
        }
    }
    Ok(alpha)
}
