//! The fiber of the affine space of adapted connections at a point.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{endo_witness, parallel_witness, torsion_witness, AdaptedError};
use crate::bn::{eigen_decompose, BnAlmostComplex};
use crate::courant::{GeneralizedConnection, OddExactAlgebroid};
use crate::quadratic::{
    generalized_first_prolongation, stabilizer_algebra, u_prolongation_spanning_set, ProlongationSpace,
    StructureTensor, ThreeTensor,
};
use crate::report::StageReport;
use crate::symbolic::linalg::{rank, span_rank};
use crate::symbolic::random::random_rational;
use crate::symbolic::{Matrix, PolyMatrix, Polynomial, Rational};

#[derive(Clone, Debug)]
pub struct AdaptedSpaceModel {
    pub point: Vec<Rational>,
    pub prolongation: ProlongationSpace<Rational>,
    /// `Re sk η` over the complex parametrization.
    pub parametrization: Vec<ThreeTensor<Rational>>,
    pub expected_dimension: usize,
    pub report: StageReport,
}

impl AdaptedSpaceModel {
    pub fn dimension(&self) -> usize {
        self.prolongation.dimension()
    }
}

/// Stabilizer of `F(p)`, `u0(p)` and, if given, `G(p)` in `so(E_p)`.
fn structure_algebra(
    alg: &OddExactAlgebroid,
    s: &BnAlmostComplex,
    g: Option<&PolyMatrix>,
    point: &[Rational],
) -> Vec<Matrix<Rational>> {
    let mut tensors = vec![
        StructureTensor::Endomorphism(s.f().eval(point)),
        StructureTensor::Vector(s.u0().components().iter().map(|c| c.eval(point)).collect()),
    ];
    if let Some(g) = g {
        tensors.push(StructureTensor::Endomorphism(g.eval(point)));
    }
    stabilizer_algebra(alg.space(), &tensors)
}

fn cube_sum(p: usize) -> usize {
    p * p * (p + 1)
}

/// Fiber of the admissible corrections `{ η : ∂η = 0, η_u ∈ h }` at `point`,
/// matched against `Re sk` of `S²L*⊗L̄*` (or the two `E_{±,F}` summands).
pub fn adapted_space(
    alg: &OddExactAlgebroid,
    s: &BnAlmostComplex,
    g: Option<&PolyMatrix>,
    point: &[Rational],
) -> Result<AdaptedSpaceModel, AdaptedError> {
    let space = alg.space();
    let h = structure_algebra(alg, s, g, point);
    let prolongation = generalized_first_prolongation(space, &h);
    let eigen = eigen_decompose(alg, s, g, point);
    let (parametrization, expected_dimension) = match &eigen.metric {
        None => (
            u_prolongation_spanning_set(space, &eigen.l).map_err(|e| invalid("L", e))?,
            cube_sum(alg.base_dim()),
        ),
        Some(m) => {
            let mut set = u_prolongation_spanning_set(space, &m.e_plus_f).map_err(|e| invalid("E₊,F", e))?;
            set.extend(u_prolongation_spanning_set(space, &m.e_minus_f).map_err(|e| invalid("E₋,F", e))?);
            (set, cube_sum(m.e_plus_f.len()) + cube_sum(m.e_minus_f.len()))
        }
    };
    let mut report = StageReport::new("adapted space");
    report.postconditions.extend(eigen.report.postconditions);
    report.check(
        "prolongation basis valid",
        (!prolongation.verify(space)).then(|| "basis fails ∂α = 0, membership or independence".to_string()),
    );
    let dim = prolongation.dimension();
    report.check(
        "fiber dimension matches the expected count",
        (dim != expected_dimension).then(|| format!("computed {dim}, expected {expected_dimension}")),
    );
    let flat: Vec<Vec<Rational>> = parametrization.iter().map(|t| t.components().to_vec()).collect();
    let r = span_rank(&flat);
    report.check(
        "Re sk parametrization has full rank",
        (r != dim).then(|| format!("rank {r}, dimension {dim}")),
    );
    let outside = parametrization.iter().position(|t| !prolongation.contains(t));
    report.check(
        "Re sk parametrization lies in the fiber",
        outside.map(|k| format!("element {k} not in the prolongation")),
    );
    Ok(AdaptedSpaceModel {
        point: point.to_vec(),
        prolongation,
        parametrization,
        expected_dimension,
        report,
    })
}

fn invalid(which: &str, e: impl std::fmt::Display) -> AdaptedError {
    AdaptedError::Structure(crate::bn::StructureError::Invalid {
        name: format!("eigenspace {which}"),
        witness: e.to_string(),
    })
}

/// Seeded random combinations of the parametrization `Re sk η`.
pub fn random_fiber_elements(model: &AdaptedSpaceModel, seed: u64, count: usize) -> Vec<ThreeTensor<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = model.point.len() * 2 + 1;
    (0..count)
        .map(|_| {
            model.parametrization.iter().fold(ThreeTensor::zeros(n), |acc, t| {
                let c = random_rational(&mut rng);
                if c.is_zero() || rng.gen_bool(0.3) {
                    acc
                } else {
                    &acc + &t.scaled(&c)
                }
            })
        })
        .collect()
}

/// For each sample `η`, `D + η` is again torsion-free and preserves the
/// structure. Needs a constant structure, so that a constant `η` from the
/// fiber at one point lies in the fiber everywhere.
pub fn check_affine_samples(
    alg: &OddExactAlgebroid,
    s: &BnAlmostComplex,
    g: Option<&PolyMatrix>,
    conn: &GeneralizedConnection,
    samples: &[ThreeTensor<Rational>],
) -> Result<StageReport, AdaptedError> {
    let constant = s.f().is_constant()
        && s.u0().components().iter().all(Polynomial::is_constant)
        && g.is_none_or(PolyMatrix::is_constant);
    if !constant {
        return Err(AdaptedError::NonConstant);
    }
    let mut report = StageReport::new("affine samples");
    let mut failure = None;
    for (k, eta) in samples.iter().enumerate() {
        let shifted = conn.add_tensor(alg, &eta.map(|x| Polynomial::constant(x.clone())))?;
        let witness = torsion_witness(alg, &shifted)
            .or_else(|| endo_witness(&shifted, "F", s.f()))
            .or_else(|| parallel_witness(&shifted, s.u0()))
            .or_else(|| g.and_then(|g| endo_witness(&shifted, "G", g)));
        if let Some(w) = witness {
            failure = Some(format!("sample {k}: {w}"));
            break;
        }
    }
    report.check(format!("D + Re sk η adapted for {} samples", samples.len()), failure);
    Ok(report)
}

/// Whether `D₂ − D₁` at the model point lies in the fiber.
pub fn difference_in_fiber(
    model: &AdaptedSpaceModel,
    first: &GeneralizedConnection,
    second: &GeneralizedConnection,
    alg: &OddExactAlgebroid,
) -> bool {
    let diff = &second.correction_tensor(alg.space()) - &first.correction_tensor(alg.space());
    model.prolongation.contains(&diff.map(|x| x.eval(&model.point)))
}

/// Exact rank certificate for `∂η = −t(p)` with `η ∈ V*⊗h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfeasibilityCertificate {
    pub unknowns: usize,
    pub rank_system: usize,
    pub rank_augmented: usize,
    pub infeasible: bool,
}

/// Whether some correction `η ∈ V*⊗h`, `h` the stabilizer at `point`, can
/// cancel the torsion `t` there.
pub fn infeasibility_certificate(
    alg: &OddExactAlgebroid,
    s: &BnAlmostComplex,
    g: Option<&PolyMatrix>,
    t: &ThreeTensor<Polynomial>,
    point: &[Rational],
) -> InfeasibilityCertificate {
    let space = alg.space();
    let n = space.dim();
    let h = structure_algebra(alg, s, g, point);
    let forms: Vec<Matrix<Rational>> = h.iter().map(|a| space.bilinear_form(a)).collect();
    let unknowns = n * forms.len();
    let tp = t.map(|x| x.eval(point));
    let mut rows = Vec::new();
    let mut augmented = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut row = vec![Rational::zero(); unknowns];
                for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                    for (k, f) in forms.iter().enumerate() {
                        row[a * forms.len() + k] += f[(b, c)].clone();
                    }
                }
                let mut aug = row.clone();
                aug.push(-tp.get(x, y, z).clone());
                rows.push(row);
                augmented.push(aug);
            }
        }
    }
    let rank_system = rank(&Matrix::from_rows(rows));
    let rank_augmented = rank(&Matrix::from_rows(augmented));
    InfeasibilityCertificate {
        unknowns,
        rank_system,
        rank_augmented,
        infeasible: rank_augmented > rank_system,
    }
}
