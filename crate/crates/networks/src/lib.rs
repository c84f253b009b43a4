//! Path networks on Go-diagrams: restricted paths with jump weights, the grid
//! network with corner weights, the Talaska–Williams network, and the changes of
//! parameters between them.

use deodhar_core::algebra::AlgebraError;
use deodhar_core::diagram::{Cell, DiagramError};
use thiserror::Error;

pub mod bijection;
pub mod params;
pub mod paths;
pub mod product;
pub mod transforms;
pub mod tw;

pub use params::{cell_label, random_params, ParamFamily, Params};
pub use paths::{
    dual_point, dual_weight_matrix, enumerate_paths, restricted_weight_matrix, wtprime_weight_matrix, Entry, Exit,
    PathKind, RestrictedPath, Step, Target,
};
pub use product::{dual_product_matrix, product_formula_matrix};
pub use transforms::{alpha_to_beta, alpha_to_tw, beta_to_alpha, tw_to_alpha};
pub use tw::{tw_paths, tw_weight_matrix, TwPath, TwVertex};

#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("parameter at white stone {0} must be zero")]
    NonZeroAtWhite(Cell),
    #[error("parameter at {0} must be invertible")]
    NotInvertible(Cell),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
