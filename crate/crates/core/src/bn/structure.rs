//! `B_n`-generalized almost complex and almost pseudo-Hermitian structures.

use num_traits::Zero;
use thiserror::Error;

use crate::courant::{GeneralizedSection, OddExactAlgebroid};
use crate::report::StageReport;
use crate::symbolic::linalg::rank;
use crate::symbolic::scalar::sign_pow;
use crate::symbolic::{Matrix, PolyMatrix, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error("invalid structure: {name}: {witness}")]
    Invalid { name: String, witness: String },
    #[error("{which} is not orthogonal to u0: ⟨{which}, u0⟩ = {residual}")]
    NotOrthogonal { which: &'static str, residual: String },
}

impl StructureError {
    fn from_report(report: &StageReport) -> Option<Self> {
        report.first_failure().map(|p| StructureError::Invalid {
            name: p.name.clone(),
            witness: p.witness.clone().unwrap_or_default(),
        })
    }
}

/// Rational grid `{-1, 0, 1, 2}^d` used for pointwise rank checks.
pub fn sample_grid(d: usize) -> Vec<Vec<Rational>> {
    let values: Vec<Rational> = [-1, 0, 1, 2].iter().map(|&v| Rational::from_i64(v)).collect();
    let mut points = vec![Vec::new()];
    for _ in 0..d {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    points
}

fn matrix_witness(label: &str, m: &PolyMatrix) -> Option<String> {
    m.first_nonzero().map(|(i, j, r)| format!("{label}[{i}][{j}] = {r}"))
}

/// `(−1)^n`.
pub fn parity_sign(alg: &OddExactAlgebroid) -> Polynomial {
    Polynomial::from_i64(sign_pow(alg.base_dim()))
}

/// The endomorphism `v ↦ ⟨v, u0⟩ u0`.
pub fn projector_onto(alg: &OddExactAlgebroid, u0: &GeneralizedSection) -> PolyMatrix {
    let flat = alg.space().flat(u0.components());
    PolyMatrix::from_fn(alg.rank(), alg.rank(), |i, j| u0.component(i) * &flat[j])
}

/// `F` skew with respect to the pairing: `⟨Fu, v⟩ + ⟨u, Fv⟩ = 0`.
pub fn skew_witness(alg: &OddExactAlgebroid, label: &str, f: &PolyMatrix) -> Option<String> {
    let b = alg.space().bilinear_form(f);
    matrix_witness(&format!("⟨{label}·,·⟩ + ⟨·,{label}·⟩"), &(&b + &b.transpose()))
}

/// Check every `B_n`-generalized almost complex condition on `(F, u0)`.
pub fn validate_bn_gacs(alg: &OddExactAlgebroid, f: &PolyMatrix, u0: &GeneralizedSection) -> StageReport {
    validate_labelled(alg, "F", f, u0)
}

fn validate_labelled(alg: &OddExactAlgebroid, label: &str, f: &PolyMatrix, u0: &GeneralizedSection) -> StageReport {
    let n = alg.rank();
    let d = alg.base_dim();
    let mut report = StageReport::new(format!("structure {label}"));
    let shape_ok = f.rows() == n && f.cols() == n && u0.rank() == n;
    report.check(
        format!("{label} and u0 have frame shape"),
        (!shape_ok).then(|| {
            format!(
                "{label} is {}×{}, u0 has {} entries, rank is {n}",
                f.rows(),
                f.cols(),
                u0.rank()
            )
        }),
    );
    if !shape_ok {
        return report;
    }
    let eps = parity_sign(alg);
    report.check(format!("{label} skew"), skew_witness(alg, label, f));
    let norm = alg.pair(u0, u0);
    report.check(
        "⟨u0,u0⟩ = (−1)^n",
        (norm != eps).then(|| format!("⟨u0,u0⟩ = {norm}, expected {eps}")),
    );
    let fu0 = u0.transform(f);
    let kills = report.check(
        format!("{label} u0 = 0"),
        fu0.first_nonzero().map(|(i, r)| format!("({label} u0)[{i}] = {r}")),
    );
    let residual = &(f * f) + &(&Matrix::identity(n) - &projector_onto(alg, u0).map(|x| x * &eps));
    let square = report.check(
        format!("{label}² = −Id + (−1)^n⟨·,u0⟩u0"),
        matrix_witness(&format!("{label}² + Id − (−1)^n⟨·,u0⟩u0"), &residual),
    );
    let bad_point = sample_grid(d).into_iter().find_map(|p| {
        let r = rank(&f.eval(&p));
        (r != 2 * d).then(|| format!("rank {r} at {p:?}"))
    });
    report.check(format!("rank {label} = 2n at sample points"), bad_point);
    // Fv = 0 gives 0 = F²v = −v + (−1)^n⟨v,u0⟩u0, so v ∈ span(u0)
    report.check(
        format!("ker {label} = span(u0)"),
        (!(kills && square && norm == eps)).then(|| "follows only from the identities above, which fail".to_string()),
    );
    report
}

/// Check the generalized metric conditions on `G^end`.
pub fn validate_generalized_metric(alg: &OddExactAlgebroid, g: &PolyMatrix) -> StageReport {
    let n = alg.rank();
    let d = alg.base_dim();
    let mut report = StageReport::new("generalized metric");
    if g.rows() != n || g.cols() != n {
        report.check("G has frame shape", Some(format!("G is {}×{}", g.rows(), g.cols())));
        return report;
    }
    report.check("G² = Id", matrix_witness("G² − Id", &(&(g * g) - &Matrix::identity(n))));
    let b = alg.space().bilinear_form(g);
    report.check("G symmetric", matrix_witness("⟨G·,·⟩ − ⟨·,G·⟩", &(&b - &b.transpose())));
    let orth = &(&b * g) - &alg.space().bilinear_form(&PolyMatrix::identity(n));
    report.check("G orthogonal", matrix_witness("⟨G·,G·⟩ − ⟨·,·⟩", &orth));
    let mut nondeg = None;
    let mut anchor = None;
    for p in sample_grid(d) {
        let gp = g.eval(&p);
        let minus = crate::symbolic::linear_kernel(&(&gp + &Matrix::identity(n)));
        let gram = Matrix::from_fn(minus.len(), minus.len(), |i, j| {
            alg.space().pairing(&minus[i], &minus[j])
        });
        if nondeg.is_none() && (minus.is_empty() || rank(&gram) != minus.len()) {
            nondeg = Some(format!(
                "⟨·,·⟩ on E₋ has rank {} of {} at {p:?}",
                rank(&gram),
                minus.len()
            ));
        }
        let pi = Matrix::from_fn(d, minus.len(), |i, j| minus[j][i].clone());
        if anchor.is_none() && (minus.len() != d || rank(&pi) != d) {
            anchor = Some(format!("dim E₋ = {}, rank π|E₋ = {} at {p:?}", minus.len(), rank(&pi)));
        }
    }
    report.check("⟨·,·⟩|E₋ non-degenerate", nondeg);
    report.check("π|_{E₋} isomorphism", anchor);
    report
}

/// `G(Au, v) + G(u, Av)` with `G(u, v) = ⟨G^end u, v⟩`.
pub fn g_skew_witness(alg: &OddExactAlgebroid, g: &PolyMatrix, label: &str, a: &PolyMatrix) -> Option<String> {
    let space = alg.space();
    let m = &space.bilinear_form(&(g * a)) + &(&space.bilinear_form(g) * a);
    matrix_witness(&format!("G({label}·,·) + G(·,{label}·)"), &m)
}

/// Check the almost pseudo-Hermitian conditions on `(G, F, u0)`, including
/// the companion structure `G^end F`.
pub fn validate_pseudo_hermitian(
    alg: &OddExactAlgebroid,
    g: &PolyMatrix,
    f: &PolyMatrix,
    u0: &GeneralizedSection,
) -> StageReport {
    let mut report = StageReport::new("pseudo-Hermitian structure");
    let parts = [validate_bn_gacs(alg, f, u0), validate_generalized_metric(alg, g)];
    for part in &parts {
        report.postconditions.extend(part.postconditions.iter().cloned());
    }
    if !parts.iter().all(StageReport::pass) {
        return report;
    }
    let gf = g * f;
    report.check("G F = F G", matrix_witness("[G, F]", &g.commutator(f)));
    let eps = parity_sign(alg);
    let gu0 = &u0.transform(g) - &u0.scale(&eps);
    report.check(
        "G u0 = (−1)^n u0",
        gu0.first_nonzero()
            .map(|(i, r)| format!("(G u0 − (−1)^n u0)[{i}] = {r}")),
    );
    report
        .postconditions
        .extend(validate_labelled(alg, "GF", &gf, u0).postconditions);
    report.check("F G-skew", g_skew_witness(alg, g, "F", f));
    report.check("GF G-skew", g_skew_witness(alg, g, "GF", &gf));
    report
}

/// A validated `B_n`-generalized almost complex structure.
#[derive(Clone, Debug, PartialEq)]
pub struct BnAlmostComplex {
    f: PolyMatrix,
    u0: GeneralizedSection,
}

impl BnAlmostComplex {
    pub fn new(alg: &OddExactAlgebroid, f: PolyMatrix, u0: GeneralizedSection) -> Result<Self, StructureError> {
        match StructureError::from_report(&validate_bn_gacs(alg, &f, &u0)) {
            Some(e) => Err(e),
            None => Ok(BnAlmostComplex { f, u0 }),
        }
    }

    pub fn f(&self) -> &PolyMatrix {
        &self.f
    }

    pub fn u0(&self) -> &GeneralizedSection {
        &self.u0
    }

    /// Orthogonal projection `P = Id − (−1)^n⟨·,u0⟩u0` onto `U^⊥`.
    pub fn projection(&self, alg: &OddExactAlgebroid) -> PolyMatrix {
        let eps = parity_sign(alg);
        &PolyMatrix::identity(alg.rank()) - &projector_onto(alg, &self.u0).map(|x| x * &eps)
    }

    /// Spanning sections `P e_a` of `U^⊥`.
    pub fn orthogonal_frame(&self, alg: &OddExactAlgebroid) -> Vec<GeneralizedSection> {
        let p = self.projection(alg);
        alg.frame_sections().iter().map(|e| e.transform(&p)).collect()
    }

    pub fn check_orthogonal(
        &self,
        alg: &OddExactAlgebroid,
        which: &'static str,
        v: &GeneralizedSection,
    ) -> Result<(), StructureError> {
        let r = alg.pair(v, &self.u0);
        if r.is_zero() {
            Ok(())
        } else {
            Err(StructureError::NotOrthogonal {
                which,
                residual: r.to_string(),
            })
        }
    }
}

/// A validated almost pseudo-Hermitian structure `(G, F, u0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BnPseudoHermitian {
    g: PolyMatrix,
    complex: BnAlmostComplex,
}

impl BnPseudoHermitian {
    pub fn new(
        alg: &OddExactAlgebroid,
        g: PolyMatrix,
        f: PolyMatrix,
        u0: GeneralizedSection,
    ) -> Result<Self, StructureError> {
        match StructureError::from_report(&validate_pseudo_hermitian(alg, &g, &f, &u0)) {
            Some(e) => Err(e),
            None => Ok(BnPseudoHermitian {
                g,
                complex: BnAlmostComplex { f, u0 },
            }),
        }
    }

    pub fn g(&self) -> &PolyMatrix {
        &self.g
    }

    pub fn complex(&self) -> &BnAlmostComplex {
        &self.complex
    }

    /// The companion structure `G^end F`.
    pub fn companion(&self) -> BnAlmostComplex {
        BnAlmostComplex {
            f: &self.g * &self.complex.f,
            u0: self.complex.u0.clone(),
        }
    }
}
