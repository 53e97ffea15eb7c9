//! Adapted generalized connections: the u0-parallelizing correction, the
//! F-preserving connection with prescribed torsion, Levi-Civita and
//! pseudo-Kähler connections, and the affine space of adapted connections.

pub mod complex;
pub mod kahler;
pub mod parallel;
pub mod space;

use thiserror::Error;

use crate::bn::StructureError;
use crate::courant::{ConnectionError, GeneralizedConnection, GeneralizedSection, OddExactAlgebroid};
use crate::quadratic::ThreeTensor;
use crate::report::StageReport;
use crate::symbolic::{PolyMatrix, Polynomial, Rational, Ring};

pub use complex::{
    a_operator, adapted_pipeline, adapted_pipeline_from, build_adapted, gamma_crosscheck, torsion_formula_checks,
    u0_nijenhuis_check, AdaptedPipeline,
};
pub use kahler::{
    build_bn_kahler_connection, g_skew_wedge_witness, levi_civita, make_metric_u0_parallel, metric_correction,
    torsion_killer, u0_metric_check, KahlerBuild,
};
pub use parallel::{make_u0_parallel, nijenhuis_identity_check, u0_parallel_correction};
pub use space::{
    adapted_space, check_affine_samples, difference_in_fiber, infeasibility_certificate, random_fiber_elements,
    AdaptedSpaceModel, InfeasibilityCertificate,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AdaptedError {
    #[error("connection is not torsion-free: {0}")]
    NotTorsionFree(String),
    #[error("connection does not preserve u0: {0}")]
    NotParallel(String),
    #[error("connection does not preserve G: {0}")]
    NotMetric(String),
    #[error("structure is not constant; fiber samples need constant F, u0 and G")]
    NonConstant,
    #[error(transparent)]
    Connection(#[from] ConnectionError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A constructed connection, the correction it added, and its checks.
#[derive(Clone, Debug)]
pub struct Built {
    pub connection: GeneralizedConnection,
    pub correction: ThreeTensor<Polynomial>,
    pub report: StageReport,
}

pub fn tensor_witness(label: &str, t: &ThreeTensor<Polynomial>) -> Option<String> {
    t.first_nonzero()
        .map(|(a, b, c, r)| format!("{label}(e_{a}, e_{b}, e_{c}) = {r}"))
}

pub(crate) fn matrix_witness(label: &str, m: &PolyMatrix) -> Option<String> {
    m.first_nonzero().map(|(i, j, r)| format!("{label}[{i}][{j}] = {r}"))
}

pub(crate) fn torsion_witness(alg: &OddExactAlgebroid, conn: &GeneralizedConnection) -> Option<String> {
    tensor_witness("T", &crate::courant::torsion(alg, conn))
}

pub(crate) fn parallel_witness(conn: &GeneralizedConnection, u0: &GeneralizedSection) -> Option<String> {
    matrix_witness("D u0", &conn.derivative_matrix(u0))
}

pub(crate) fn endo_witness(conn: &GeneralizedConnection, label: &str, m: &PolyMatrix) -> Option<String> {
    conn.endo_residual(m)
        .map(|(a, i, j, r)| format!("(D_e{a} {label})[{i}][{j}] = {r}"))
}

pub(crate) fn require_torsion_free(alg: &OddExactAlgebroid, conn: &GeneralizedConnection) -> Result<(), AdaptedError> {
    torsion_witness(alg, conn).map_or(Ok(()), |w| Err(AdaptedError::NotTorsionFree(w)))
}

pub(crate) fn require_parallel(conn: &GeneralizedConnection, u0: &GeneralizedSection) -> Result<(), AdaptedError> {
    parallel_witness(conn, u0).map_or(Ok(()), |w| Err(AdaptedError::NotParallel(w)))
}

/// `γ(x, y, z) = ⟨(D_x F) y, z⟩` on the frame.
pub fn gamma(alg: &OddExactAlgebroid, conn: &GeneralizedConnection, f: &PolyMatrix) -> ThreeTensor<Polynomial> {
    let df: Vec<PolyMatrix> = (0..alg.rank()).map(|a| conn.frame_endo_derivative(a, f)).collect();
    ThreeTensor::from_endomorphisms(alg.space(), &df)
}

pub(crate) fn identity(alg: &OddExactAlgebroid) -> PolyMatrix {
    PolyMatrix::identity(alg.rank())
}

pub(crate) fn scaled(t: &ThreeTensor<Polynomial>, num: i64, den: i64) -> ThreeTensor<Polynomial> {
    t.scaled(&(Rational::from_i64(num) / Rational::from_i64(den)))
}

/// `⟨(A) u, F v⟩` as a frame matrix.
pub(crate) fn paired_with_f(alg: &OddExactAlgebroid, a: &PolyMatrix, f: &PolyMatrix) -> PolyMatrix {
    &alg.space().bilinear_form(a) * f
}

/// `Σ_c t(·, ·, e_c) u^c`.
pub(crate) fn contract_last(t: &ThreeTensor<Polynomial>, u: &GeneralizedSection) -> PolyMatrix {
    let n = t.dim();
    PolyMatrix::from_fn(n, n, |a, b| {
        let mut acc = Polynomial::from_i64(0);
        for c in 0..n {
            let x = u.component(c);
            let y = t.get(a, b, c);
            if !num_traits::Zero::is_zero(x) && !num_traits::Zero::is_zero(y) {
                acc = &acc + &(x * y);
            }
        }
        acc
    })
}
