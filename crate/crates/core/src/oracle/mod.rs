//! Ground truth for small ranks: the diagonal coinvariant ring computed by
//! exact linear algebra.

mod group;
mod hilbert;
mod linalg;
mod poly;

pub use group::SignedPerm;
pub use hilbert::{
    epsilon_from, epsilon_report, quotient_dims_direct, quotient_hilbert, BidegreeDims, EpsilonReport,
    GradedDims, GradedReport, DEFAULT_MAX_DEGREE, MAX_ORACLE_RANK,
};
pub use linalg::{rank, Echelon, SparseVec};
pub use poly::{act, project, reynolds, Monomial, PolyQ};
