//! Combinatorics of pipe dreams and Go-diagrams, plus the exact algebra used to
//! parametrize Deodhar components of the Grassmannian.

pub mod algebra;
pub mod diagram;
pub mod perm;

pub use perm::{JClass, Permutation, Subexpression};
