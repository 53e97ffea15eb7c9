//! Pointwise multilinear algebra over a quadratic vector space.

pub mod prolongation;
pub mod sequence;
pub mod space;
pub mod tensor;

pub use prolongation::{
    even_rank_kahler_prolongation, even_rank_u_prolongation, expected_u_prolongation_dim,
    generalized_first_prolongation, i_eigenspace, kahler_prolongation, kahler_splits, stabilizer_algebra,
    u_prolongation, u_prolongation_spanning_set, unitary_splits, KahlerProlongation, ModelSpace, ProlongationSpace,
    StructureTensor,
};
pub use sequence::{check_exact_sequence, ExactSequenceReport};
pub use space::{lift, signature, QuadraticError, QuadraticSpace};
pub use tensor::{alternate, cyclic_del, sk, ThreeTensor};
