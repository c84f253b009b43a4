//! Exact coefficient domains.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// A commutative ring with exact arithmetic.
///
/// Matrices and determinants are generic over this trait, so the same code
/// runs over rationals, prime fields and Laurent polynomials.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, if one exists in the ring.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// An exact field usable as the coefficient domain of a Laurent polynomial.
pub trait Coeff: Ring + Eq + std::hash::Hash + fmt::Display + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &BigRational) -> Option<Self>;
    /// 0 for characteristic zero.
    fn characteristic() -> u64;

    /// Sign and absolute-value text, used by the polynomial renderer.
    fn render_signed(&self) -> (bool, String) {
        (false, self.to_string())
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
    fn characteristic() -> u64 {
        0
    }
    fn render_signed(&self) -> (bool, String) {
        (self.is_negative(), fmt_rational(&self.abs()))
    }
}

/// Element of the prime field `F_P`.
///
/// Primality of `P` is checked in debug builds on construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        debug_assert!(is_prime(P), "modulus {P} is not prime");
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }

    /// All field elements in increasing order.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(Fp)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - o.0 as u128) % P as u128) as u64)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
}

impl<const P: u64> Coeff for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        let m = BigInt::from(P);
        let num = (q.numer() % &m + &m) % &m;
        let den = (q.denom() % &m + &m) % &m;
        let den = Fp::<P>(den.to_u64()?).inv()?;
        Some(Fp::<P>(num.to_u64()?).mul(&den))
    }
    fn characteristic() -> u64 {
        P
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduce a rational modulo a runtime prime `p`; `None` if the denominator vanishes.
pub fn rational_mod(q: &BigRational, p: u64) -> Option<u64> {
    let m = BigInt::from(p);
    let num = ((q.numer() % &m) + &m) % &m;
    let den = ((q.denom() % &m) + &m) % &m;
    let den = den.to_u64()?;
    if den == 0 {
        return None;
    }
    let inv = mod_pow(den, p - 2, p);
    Some((num.to_u64()? as u128 * inv as u128 % p as u128) as u64)
}

pub fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let (mut base, mut acc) = (b as u128 % p as u128, 1u128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Integer rational from an `i64`.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Render a rational compactly: `3`, `-1/2`.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        for x in Fp::<13>::elements().skip(1) {
            assert_eq!(x.mul(&x.inv().unwrap()), Fp::one());
        }
        assert_eq!(Fp::<7>::new(-1).value(), 6);
    }

    #[test]
    fn rational_reduction() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(Fp::<11>::from_rational(&half), Some(Fp::new(6)));
        assert_eq!(rational_mod(&half, 11), Some(6));
        assert_eq!(Fp::<2>::from_rational(&half), None);
    }
}
