//! Permutations in one-line notation and subexpressions of reduced words.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{1..n}` stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based position `x`.
    pub fn at(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Right multiplication by the simple reflection `s_i` (swaps positions i, i+1).
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation { images: other.images.iter().map(|&x| self.at(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Sign as `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign of the permutation sorting `seq` (distinct entries) increasingly.
    pub fn sort_sign(seq: &[usize]) -> i64 {
        let mut inv = 0;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] > seq[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(n), |p, &i| p.mul_simple(i))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { " " } else { "" };
        let s: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Classification of a word position by how the prefix product changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JClass {
    /// Length goes up.
    Up,
    /// Unchanged (identity factor).
    Stay,
    /// Length goes down.
    Down,
}

impl JClass {
    pub fn symbol(self) -> char {
        match self {
            JClass::Up => 'o',
            JClass::Stay => '+',
            JClass::Down => '*',
        }
    }
}

/// A subexpression of a reduced word: `Some(i)` keeps `s_i`, `None` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subexpression {
    pub n: usize,
    pub parent_word: Vec<usize>,
    pub word: Vec<Option<usize>>,
    pub jclass: Vec<JClass>,
    pub is_distinguished: bool,
    pub is_positive_distinguished: bool,
}

impl Subexpression {
    pub fn new(n: usize, parent_word: Vec<usize>, keep: &[bool]) -> Self {
        assert_eq!(parent_word.len(), keep.len());
        let word: Vec<Option<usize>> =
            parent_word.iter().zip(keep).map(|(&i, &k)| k.then_some(i)).collect();
        let mut v = Permutation::identity(n);
        let mut jclass = Vec::with_capacity(word.len());
        let mut distinguished = true;
        let mut positive = true;
        for (pos, entry) in word.iter().enumerate() {
            let before = v.length();
            let next = match entry {
                Some(i) => v.mul_simple(*i),
                None => v.clone(),
            };
            let after = next.length();
            // ℓ(v_(j+1)) ≤ ℓ(v_(j) s_{i_{j+1}})
            let with_s = v.mul_simple(parent_word[pos]).length();
            if after > with_s {
                distinguished = false;
            }
            let c = match after.cmp(&before) {
                std::cmp::Ordering::Greater => JClass::Up,
                std::cmp::Ordering::Equal => JClass::Stay,
                std::cmp::Ordering::Less => JClass::Down,
            };
            if c == JClass::Down {
                positive = false;
            }
            jclass.push(c);
            v = next;
        }
        Subexpression {
            n,
            parent_word,
            word,
            jclass,
            is_distinguished: distinguished,
            is_positive_distinguished: distinguished && positive,
        }
    }

    pub fn product(&self) -> Permutation {
        self.word
            .iter()
            .fold(Permutation::identity(self.n), |p, e| match e {
                Some(i) => p.mul_simple(*i),
                None => p,
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word() -> Vec<usize> {
        vec![3, 4, 5, 2, 3, 4, 1, 2, 3]
    }

    #[test]
    fn grassmannian_word_product() {
        assert_eq!(Permutation::from_word(6, &word()).to_string(), "456123");
    }

    #[test]
    fn distinguished_examples() {
        let mk = |pos: &[usize]| {
            let keep: Vec<bool> = (1..=9).map(|j| pos.contains(&j)).collect();
            Subexpression::new(6, word(), &keep)
        };
        let v1 = mk(&[1, 9]);
        assert!(!v1.is_distinguished);
        let v2 = mk(&[1, 5, 9]);
        assert!(v2.is_distinguished && !v2.is_positive_distinguished);
        assert_eq!(v2.product().to_string(), "124356");
        let v3 = mk(&[9]);
        assert!(v3.is_positive_distinguished);
    }

    #[test]
    fn sort_sign_matches_inversions() {
        assert_eq!(Permutation::sort_sign(&[3, 1, 2]), 1);
        assert_eq!(Permutation::sort_sign(&[2, 1, 3]), -1);
    }
}
