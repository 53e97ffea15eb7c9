//! `B_n`-generalized almost complex and pseudo-Hermitian structures:
//! validation, eigenbundles, Nijenhuis tensor and integrability.

pub mod complex;
pub mod eigen;
pub mod nijenhuis;
pub mod structure;

pub use complex::{complex_bracket, complex_pair, ComplexSection};
pub use eigen::{eigen_decompose, EigenDecomposition, MetricSplitting};
pub use nijenhuis::{
    is_integrable, kahler_integrability, l_frame, nijenhuis, nijenhuis_raw, nijenhuis_tensor, IntegrabilityReport,
};
pub use structure::{
    g_skew_witness, parity_sign, projector_onto, sample_grid, skew_witness, validate_bn_gacs,
    validate_generalized_metric, validate_pseudo_hermitian, BnAlmostComplex, BnPseudoHermitian, StructureError,
};
