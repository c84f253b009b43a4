//! Dense exact matrices, minors and Plücker vectors.
//!
//! Row and column indices are 0-based in the API; the transvection helpers
//! take the 1-based pipe labels used throughout the combinatorics.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::coeff::{Coeff, Ring};
use super::laurent::Laurent;
use super::AlgebraError;

#[derive(Clone, PartialEq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>, n: usize) -> Self
    where
        T: 'a,
    {
        factors.into_iter().fold(Self::identity(n), |acc, f| acc.mul(f))
    }

    /// Rows picked by index, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix {
            rows: idx.len(),
            cols: self.cols,
            data: idx.iter().flat_map(|&r| self.row(r).iter().cloned()).collect(),
        }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.rows).all(|r| {
            (0..self.cols).all(|c| match r.cmp(&c) {
                std::cmp::Ordering::Equal => self.get(r, c).is_one(),
                std::cmp::Ordering::Less => self.get(r, c).is_zero(),
                std::cmp::Ordering::Greater => true,
            })
        })
    }

    /// Maximal minor on 1-based column labels `cols`, by memoized Laplace expansion.
    pub fn minor(&self, cols: &[usize]) -> Result<T, AlgebraError> {
        let k = self.rows;
        if cols.len() != k {
            return Err(AlgebraError::SizeMismatch { expected: k, got: cols.len() });
        }
        if let Some(&bad) = cols.iter().find(|&&c| c == 0 || c > self.cols) {
            return Err(AlgebraError::IndexOutOfRange(bad));
        }
        let cols0: Vec<usize> = cols.iter().map(|c| c - 1).collect();
        let mut memo = HashMap::new();
        Ok(self.laplace(0, (1u64 << k) - 1, &cols0, &mut memo))
    }

    // Determinant of rows `row..` against the selected columns still in `mask`.
    fn laplace(&self, row: usize, mask: u64, cols: &[usize], memo: &mut HashMap<u64, T>) -> T {
        if row == self.rows {
            return T::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = T::zero();
        let mut sign_neg = false;
        for (j, &c) in cols.iter().enumerate() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let a = self.get(row, c);
            if !a.is_zero() {
                let sub = self.laplace(row + 1, mask & !(1 << j), cols, memo);
                let t = a.mul(&sub);
                acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// All maximal minors, keyed by 1-based column subsets in lexicographic order.
    pub fn plucker_vector(&self) -> BTreeMap<Vec<usize>, T> {
        subsets(self.cols, self.rows)
            .into_iter()
            .map(|s| {
                let v = self.minor(&s).expect("subset has matching size");
                (s, v)
            })
            .collect()
    }
}

impl<C: Coeff> Matrix<C> {
    /// Determinant of a square matrix over a field by elimination.
    pub fn det(&self) -> C {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = C::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return C::zero();
            };
            if p != col {
                for c in 0..n {
                    let t = a.get(p, c).clone();
                    a.set(p, c, a.get(col, c).clone());
                    a.set(col, c, t);
                }
                det = det.neg();
            }
            let piv = a.get(col, col).clone();
            det = det.mul(&piv);
            let pinv = piv.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = a.get(r, col).mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a.get(r, c).sub(&f.mul(a.get(col, c)));
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    /// Maximal minor over a field, by elimination.
    pub fn minor_field(&self, cols: &[usize]) -> C {
        let sub = Matrix::from_rows(
            (0..self.rows).map(|r| cols.iter().map(|&c| self.get(r, c - 1).clone()).collect()).collect(),
        );
        sub.det()
    }

    pub fn plucker_vector_field(&self) -> Vec<C> {
        subsets(self.cols, self.rows).iter().map(|s| self.minor_field(s)).collect()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Self {
        let mut a = self.clone();
        let mut lead = 0;
        for r in 0..a.rows {
            while lead < a.cols && (r..a.rows).all(|i| a.get(i, lead).is_zero()) {
                lead += 1;
            }
            if lead == a.cols {
                break;
            }
            let p = (r..a.rows).find(|&i| !a.get(i, lead).is_zero()).expect("pivot exists");
            for c in 0..a.cols {
                let t = a.get(p, c).clone();
                a.set(p, c, a.get(r, c).clone());
                a.set(r, c, t);
            }
            let inv = a.get(r, lead).inv().expect("nonzero pivot");
            for c in 0..a.cols {
                let v = a.get(r, c).mul(&inv);
                a.set(r, c, v);
            }
            for i in 0..a.rows {
                if i != r {
                    let f = a.get(i, lead).clone();
                    if !f.is_zero() {
                        for c in 0..a.cols {
                            let v = a.get(i, c).sub(&f.mul(a.get(r, c)));
                            a.set(i, c, v);
                        }
                    }
                }
            }
            lead += 1;
        }
        a
    }
}

impl<C: Coeff> Matrix<Laurent<C>> {
    /// Evaluate every entry into a field.
    pub fn eval<T: Ring>(
        &self,
        val: &dyn Fn(super::laurent::Var) -> Option<T>,
        lift: &dyn Fn(&C) -> Option<T>,
    ) -> Result<Matrix<T>, AlgebraError> {
        self.try_map(|x| x.eval(val, lift))
    }

    pub fn substitute(
        &self,
        f: &dyn Fn(super::laurent::Var) -> Option<Laurent<C>>,
    ) -> Result<Self, AlgebraError> {
        self.try_map(|x| x.substitute(f))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// `X_{(i,j)}(β)`: identity plus `β` at row `i`, column `j` (1-based).
pub fn transvection<T: Ring>(n: usize, i: usize, j: usize, beta: T) -> Result<Matrix<T>, AlgebraError> {
    if i == j {
        return Err(AlgebraError::DiagonalTransvection(i));
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(AlgebraError::IndexOutOfRange(i.max(j)));
    }
    let mut m = Matrix::identity(n);
    m.set(i - 1, j - 1, beta);
    Ok(m)
}

/// `W_{(i,j)}(β) = X_{(i,j)}(β) X_{(j,i)}(-1/β) X_{(i,j)}(β)`.
pub fn weyl_factor<T: Ring>(n: usize, i: usize, j: usize, beta: T) -> Result<Matrix<T>, AlgebraError> {
    let binv = beta.inv().ok_or(AlgebraError::DivisionByZero)?;
    let x = transvection(n, i, j, beta)?;
    let y = transvection(n, j, i, binv.neg())?;
    Ok(x.mul(&y).mul(&x))
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n + 1 - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::Fp;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(6, 3).len(), 20);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn laplace_matches_elimination() {
        let m = Matrix::from_rows(vec![
            vec![Fp::<7>::new(1), Fp::new(2), Fp::new(3), Fp::new(4)],
            vec![Fp::new(0), Fp::new(5), Fp::new(6), Fp::new(1)],
        ]);
        for s in subsets(4, 2) {
            assert_eq!(m.minor(&s).unwrap(), m.minor_field(&s));
        }
    }

    #[test]
    fn weyl_is_signed_permutation() {
        let w = weyl_factor(3, 1, 2, Fp::<5>::new(2)).unwrap();
        assert_eq!(*w.get(0, 1), Fp::new(2));
        assert_eq!(*w.get(1, 0), Fp::new(-3));
        assert!(w.get(0, 0).is_zero() && w.get(1, 1).is_zero());
        assert_eq!(*w.get(2, 2), Fp::new(1));
    }
}
