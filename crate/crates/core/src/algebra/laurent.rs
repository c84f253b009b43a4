//! Sparse multivariate Laurent polynomials over an exact field.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::BigRational;
use serde::{Deserialize, Serialize};

use super::coeff::{Coeff, Ring};
use super::AlgebraError;

/// Parameter families. The rendered prefix is what appears in text output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Jump parameter β.
    Beta,
    /// Dual jump parameter β*.
    BetaStar,
    /// Corner weight α on the grid network.
    Alpha,
    /// Talaska–Williams weight at a `+` sink.
    A,
    /// Talaska–Williams weight at a `•` sink.
    C,
    /// Distortion parameter γ.
    Gamma,
    /// Marsh–Rietsch parameter at a □ position.
    P,
    /// `q` with index 0 is the point-counting variable; positive indices are
    /// Marsh–Rietsch parameters at • positions.
    Q,
    /// Free symbol for tests and identities.
    X,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::Beta => "b",
            Family::BetaStar => "bs",
            Family::Alpha => "al",
            Family::A => "a",
            Family::C => "c",
            Family::Gamma => "g",
            Family::P => "p",
            Family::Q => "q",
            Family::X => "x",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub fn new(family: Family, index: u32) -> Self {
        Var { family, index }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::Q && self.index == 0 {
            write!(f, "q")
        } else {
            write!(f, "{}{}", self.family.prefix(), self.index)
        }
    }
}

/// A monomial: sorted `(variable, nonzero exponent)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(Vec<(Var, i32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: Var, e: i32) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut m = Mono::one();
        for (v, e) in pairs {
            m = m.mul(&Mono::var(v, e));
        }
        m
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn without(&self, v: Var) -> Mono {
        Mono(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C: Coeff> {
    terms: BTreeMap<Mono, C>,
}

/// Laurent polynomial with rational coefficients, the default symbolic ring.
pub type Poly = Laurent<BigRational>;

impl<C: Coeff> Laurent<C> {
    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Laurent { terms }
    }

    pub fn int(v: i64) -> Self {
        Self::constant(C::from_i64(v))
    }

    pub fn var(v: Var) -> Self {
        Self::term(C::one(), Mono::var(v, 1))
    }

    pub fn sym(family: Family, index: u32) -> Self {
        Self::var(Var::new(family, index))
    }

    pub fn term(c: C, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The single term, if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&Mono, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone())).collect(),
        }
    }

    /// Exact division by a monomial (a single nonzero term).
    pub fn div(&self, d: &Self) -> Result<Self, AlgebraError> {
        let (m, c) = d.as_monomial().ok_or(AlgebraError::NonMonomialDivision)?;
        let ci = c.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self.mul_mono(&m.inv()).scale(&ci))
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 {
            self.inv().ok_or(AlgebraError::NonMonomialDivision)?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = Ring::mul(&acc, &base);
        }
        Ok(acc)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect()
    }

    /// Smallest and largest exponent of `v` over all terms.
    pub fn degree_range(&self, v: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Coefficient of `v^d`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: Var, d: i32) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == d)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Replace variables by Laurent polynomials; unmapped variables stay.
    /// Negative powers need a monomial image.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<Self>) -> Result<Self, AlgebraError> {
        let mut cache: BTreeMap<(Var, i32), Self> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for &(v, e) in &m.0 {
                let p = match cache.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = match f(v) {
                            Some(img) => img.pow(e)?,
                            None => Self::term(C::one(), Mono::var(v, e)),
                        };
                        cache.insert((v, e), p.clone());
                        p
                    }
                };
                t = Ring::mul(&t, &p);
            }
            out = Ring::add(&out, &t);
        }
        Ok(out)
    }

    /// Evaluate into any ring, given images of the variables and coefficients.
    pub fn eval<T: Ring>(
        &self,
        val: &dyn Fn(Var) -> Option<T>,
        lift: &dyn Fn(&C) -> Option<T>,
    ) -> Result<T, AlgebraError> {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = lift(c).ok_or(AlgebraError::DivisionByZero)?;
            for &(v, e) in &m.0 {
                let x = val(v).ok_or(AlgebraError::UnboundVariable(v.to_string()))?;
                let x = if e < 0 {
                    x.inv().ok_or(AlgebraError::DivisionByZero)?
                } else {
                    x
                };
                for _ in 0..e.unsigned_abs() {
                    t = t.mul(&x);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Map coefficients into another field (e.g. reduce rationals mod p).
    pub fn map_coeffs<D: Coeff>(&self, f: &dyn Fn(&C) -> Option<D>) -> Result<Laurent<D>, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = f(c).ok_or(AlgebraError::DivisionByZero)?;
            if !d.is_zero() {
                terms.insert(m.clone(), d);
            }
        }
        Ok(Laurent { terms })
    }

    /// Terms in canonical display order: total degree descending, then monomial order.
    fn ordered_terms(&self) -> Vec<(&Mono, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// Machine-diffable term list: `[{"coeff": "...", "mono": [["b5", 1], ...]}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.ordered_terms()
                .into_iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "coeff": c.to_string(),
                        "mono": m.0.iter().map(|(v, e)| serde_json::json!([v.to_string(), e])).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl<C: Coeff> Ring for Laurent<C> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(a) => {
                    let s = a.add(c);
                    if s.is_zero() {
                        terms.remove(m);
                    } else {
                        *a = s;
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Laurent { terms }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Mono, C> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.mul(c2);
                match terms.get_mut(&m) {
                    Some(a) => {
                        let s = a.add(&c);
                        if s.is_zero() {
                            terms.remove(&m);
                        } else {
                            *a = s;
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            terms.insert(m, c);
                        }
                    }
                }
            }
        }
        Laurent { terms }
    }
    fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        let (m, c) = self.as_monomial()?;
        Some(Self::term(c.inv()?, m.inv()))
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let (neg, abs) = c.render_signed();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{m}")?;
            } else if abs.contains('/') {
                write!(f, "({abs})*{m}")?;
            } else {
                write!(f, "{abs}{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_ops {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> std::ops::$tr for Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, o: Self) -> Self {
                Ring::$m(&self, &o)
            }
        }
        impl<'a, C: Coeff> std::ops::$tr<&'a Laurent<C>> for &'a Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, o: &'a Laurent<C>) -> Laurent<C> {
                Ring::$m(self, o)
            }
        }
    };
}
forward_ops!(Add, add);
forward_ops!(Sub, sub);
forward_ops!(Mul, mul);

impl<C: Coeff> std::ops::Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Self {
        Ring::neg(&self)
    }
}

impl<C: Coeff> std::ops::Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Ring::neg(self)
    }
}
