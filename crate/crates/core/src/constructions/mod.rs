//! Named algebras and maps: Matsuo algebras, root-projection Jordan
//! algebras, zero-sum symmetric matrices, the plane algebra and its
//! hermitian model, and the rank-4 computations.

mod matsuo;
mod p3;
mod projections;
mod rank4;
mod zero_sum;

pub use matsuo::{matsuo_algebra, matsuo_eigenbasis, MatsuoEigenbasis, MatsuoSpec};
pub use p3::{
    eta, eta_xi, eta_xi_scaled, h3_algebra, h3_matrix_model, line_idempotents, p3_char3_chain, p3_lines, p3_matsuo,
    p3_peirce, p3_unit, parallel_classes, Char3Chain, PeirceDecomposition, Quad, H3_PAIRS,
};
pub use projections::{
    check_projection_cases, jordan_from_roots, jordan_product, jr_dimension, matsuo_to_roots, proj_matrix,
    projection_case, ProjectionCase, RootJordan,
};
pub use rank4::{
    embedding_check, embedding_matrices, presented_group, rank4_check, rank4_presented, rank4_wk, EmbeddingReport,
    Rank4Report,
};
pub use zero_sum::{
    an_isomorphism, zero_sum_basis_matrix, zero_sum_coordinates, zero_sum_pairs, zero_sum_sym_algebra, zero_sum_unit,
};

use crate::algebra::AlgebraError;
use crate::groups::{EnumerationError, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("alpha = {0} is excluded (must differ from 0 and 1)")]
    Alpha(String),
    #[error("point {point} out of range for {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("root {0:?} has norm zero in the field")]
    SingularRoot(Vec<i64>),
    #[error("{what} is unavailable in characteristic {forbidden}")]
    Characteristic { what: &'static str, forbidden: u64 },
    #[error("{what} needs characteristic {required}, got {found}")]
    RequiresCharacteristic {
        what: &'static str,
        required: u64,
        found: u64,
    },
    #[error("{0:?} is not a line of the plane")]
    NotALine([usize; 3]),
    #[error("lines do not form a parallel class")]
    NotParallelClass,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
