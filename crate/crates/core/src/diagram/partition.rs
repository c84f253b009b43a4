use serde::{Deserialize, Serialize};

use super::DiagramError;
use crate::perm::Permutation;

/// A cell addressed from the north-west corner, both coordinates 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `self ≺ other`: `other` is weakly north-west of `self` and distinct from it.
    pub fn precedes(self, other: Cell) -> bool {
        self != other && other.row <= self.row && other.col <= self.col
    }

    /// Weak version of [`Cell::precedes`].
    pub fn precedes_eq(self, other: Cell) -> bool {
        other.row <= self.row && other.col <= self.col
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition fitting in a `k × (n−k)` box. Trailing zero parts are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
    k: usize,
    n: usize,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>, k: usize, n: usize) -> Result<Self, DiagramError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if k > n {
            return Err(DiagramError::InvalidPartition(format!("k={k} exceeds n={n}")));
        }
        if parts.len() > k {
            return Err(DiagramError::InvalidPartition(format!("{} rows exceed k={k}", parts.len())));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.first().is_some_and(|&p| p > n - k) {
            return Err(DiagramError::InvalidPartition(format!("{parts:?} wider than n-k={}", n - k)));
        }
        Ok(Partition { parts, k, n })
    }

    /// `k × (n−k)` rectangle.
    pub fn rectangle(k: usize, n: usize) -> Self {
        Partition::new(vec![n - k; k], k, n).expect("rectangle fits its own box")
    }

    /// The smallest box holding `parts`: `k` = number of rows, `n = k + parts[0]`.
    /// The empty partition gets the `1 × 0` box.
    pub fn minimal(parts: Vec<usize>) -> Result<Self, DiagramError> {
        let nonzero = parts.iter().filter(|&&p| p > 0).count();
        let k = nonzero.max(1);
        let width = parts.first().copied().unwrap_or(0);
        Partition::new(parts, k, k + width)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Length of row `r` (0 beyond the last part).
    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// Length of column `c`.
    pub fn col_len(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > c).count()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col < self.row_len(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell::new(r, c)))
            .collect()
    }

    /// Position of `cell` in [`Partition::cells`].
    pub fn index_of(&self, cell: Cell) -> usize {
        self.parts[..cell.row].iter().sum::<usize>() + cell.col
    }

    /// Labels of the south-east boundary from the north-east corner.
    ///
    /// Returns `(row_labels, col_labels)`: `row_labels[r]` sits on the east edge of
    /// row `r` (for all `k` rows), `col_labels[c]` on the south edge of column `c`.
    pub fn boundary_labels(&self) -> (Vec<usize>, Vec<usize>) {
        let (k, n) = (self.k, self.n);
        let mut rows = vec![0; k];
        let mut cols = vec![0; n - k];
        let (mut r, mut c) = (0, n - k);
        for label in 1..=n {
            if r < k && self.row_len(r) == c {
                rows[r] = label;
                r += 1;
            } else {
                cols[c - 1] = label;
                c -= 1;
            }
        }
        (rows, cols)
    }

    /// `I_λ`: labels on the vertical boundary steps, increasing.
    pub fn subset(&self) -> Vec<usize> {
        self.boundary_labels().0
    }

    pub fn from_subset(subset: &[usize], k: usize, n: usize) -> Result<Self, DiagramError> {
        if subset.len() != k {
            return Err(DiagramError::SubsetSize { expected: k, got: subset.len() });
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return Err(DiagramError::SubsetSize { expected: k, got: sorted.len() });
        }
        if let Some(&x) = sorted.iter().find(|&&x| x == 0 || x > n) {
            return Err(DiagramError::SubsetOutOfRange(x));
        }
        let mut parts = Vec::with_capacity(k);
        let mut c = n - k;
        for label in 1..=n {
            if sorted.binary_search(&label).is_ok() {
                parts.push(c);
            } else {
                c -= 1;
            }
        }
        Partition::new(parts, k, n)
    }

    /// Index of the simple reflection attached to `cell`: `s_{n−k}` at the corner,
    /// decreasing to the right and increasing downwards.
    pub fn reflection(&self, cell: Cell) -> usize {
        self.n - self.k - cell.col + cell.row
    }

    /// `w_λ` together with the reduced word read off `reading`, whose `j`-th letter
    /// sits in the cell labelled `j`.
    pub fn grassmannian_data(&self, reading: &super::ReadingOrder) -> GrassmannianData {
        let word: Vec<usize> = reading.cells_ascending().iter().map(|&c| self.reflection(c)).collect();
        GrassmannianData {
            subset: self.subset(),
            perm: Permutation::from_word(self.n, &word),
            word,
        }
    }

    /// All partitions in the `k × (n−k)` box, in lexicographic order of parts.
    pub fn all_in_box(k: usize, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(k, p, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(k, n - k, &mut cur, &mut raw);
        for parts in raw {
            out.push(Partition::new(parts, k, n).expect("generated inside box"));
        }
        out
    }

    /// All partitions with at most `max_size` cells, each in its minimal box,
    /// ordered by size then reverse-lexicographically.
    pub fn up_to_size(max_size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for size in 0..=max_size {
            let mut stack = Vec::new();
            partitions_of(size, size, &mut stack, &mut |p| {
                out.push(Partition::minimal(p.to_vec()).expect("valid partition"))
            });
        }
        out
    }
}

fn partitions_of(rest: usize, max: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if rest == 0 {
        f(cur);
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        partitions_of(rest - p, p, cur, f);
        cur.pop();
    }
}

/// Subset, Grassmannian permutation and reduced word of a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianData {
    pub subset: Vec<usize>,
    pub perm: Permutation,
    pub word: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::ReadingOrder;

    #[test]
    fn subset_examples() {
        assert_eq!(Partition::from_subset(&[1, 2, 3], 3, 6).unwrap().parts(), &[3, 3, 3]);
        assert!(Partition::from_subset(&[4, 5, 6], 3, 6).unwrap().is_empty());
        assert_eq!(Partition::rectangle(3, 6).subset(), vec![1, 2, 3]);
        assert!(matches!(Partition::from_subset(&[1, 7, 2], 3, 6), Err(DiagramError::SubsetOutOfRange(7))));
        assert!(Partition::from_subset(&[1, 2], 3, 6).is_err());
    }

    #[test]
    fn boundary_walk() {
        let (rows, cols) = Partition::rectangle(3, 6).boundary_labels();
        assert_eq!(rows, vec![1, 2, 3]);
        assert_eq!(cols, vec![6, 5, 4]);
    }

    #[test]
    fn grassmannian_examples() {
        let p = Partition::rectangle(3, 6);
        let g = p.grassmannian_data(&ReadingOrder::row_major(&p));
        assert_eq!(g.perm.to_string(), "456123");
        assert_eq!(g.word, vec![3, 4, 5, 2, 3, 4, 1, 2, 3]);
        let g = p.grassmannian_data(&ReadingOrder::column_major(&p));
        assert_eq!(g.perm.to_string(), "456123");
        assert_eq!(g.word, vec![3, 2, 1, 4, 3, 2, 5, 4, 3]);
        let e = Partition::new(vec![], 2, 4).unwrap();
        let g = e.grassmannian_data(&ReadingOrder::row_major(&e));
        assert!(g.perm.is_identity() && g.word.is_empty());
        let one = Partition::new(vec![1], 1, 2).unwrap();
        let g = one.grassmannian_data(&ReadingOrder::row_major(&one));
        assert_eq!((g.perm.to_string(), g.word), ("21".to_string(), vec![1]));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(Partition::all_in_box(3, 6).len(), 20);
        // 1 + 1 + 2 + 3 + 5
        assert_eq!(Partition::up_to_size(4).len(), 12);
    }
}
