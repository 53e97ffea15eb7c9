use super::{
    gamma, identity, parallel_witness, require_parallel, require_torsion_free, tensor_witness, torsion_witness,
    AdaptedError, Built,
};
use crate::bn::{nijenhuis_tensor, parity_sign, projector_onto, BnAlmostComplex};
use crate::courant::{torsion, GeneralizedConnection, GeneralizedSection, OddExactAlgebroid};
use crate::quadratic::{cyclic_del, ThreeTensor};
use crate::report::StageReport;
use crate::symbolic::{PolyMatrix, Polynomial};

/// `η_u = (−1)^{n+1} u0 ∧ D_u u0` on `U^⊥` and `η_{u0} = −2 (D u0)^sk`,
/// returned as `η(e_a)`.
pub fn u0_parallel_correction(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    u0: &GeneralizedSection,
) -> Vec<PolyMatrix> {
    let space = alg.space();
    let eps = parity_sign(alg);
    let m = conn.derivative_matrix(u0);
    // −2 · ½(M − M*)
    let eta_u0 = &space.adjoint(&m) - &m;
    let p = &identity(alg) - &projector_onto(alg, u0).map(|x| x * &eps);
    let mp = &m * &p;
    let flat = space.flat(u0.components());
    (0..alg.rank())
        .map(|a| {
            let w = space
                .wedge(u0.components(), &mp.column(a))
                .expect("frame-sized vectors");
            let tangential = w.map(|x| -(x * &eps));
            &tangential + &eta_u0.map(|x| x * &(&eps * &flat[a]))
        })
        .collect()
}

/// `D⁽¹⁾ = D + η` with `D⁽¹⁾ u0 = 0`; `D` must be torsion-free.
pub fn make_u0_parallel(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    u0: &GeneralizedSection,
) -> Result<Built, AdaptedError> {
    require_torsion_free(alg, conn)?;
    let eta = u0_parallel_correction(alg, conn, u0);
    let connection = conn.add_correction(alg, &eta)?;
    let correction = ThreeTensor::from_endomorphisms(alg.space(), &eta);
    let mut report = StageReport::new("u0-parallel");
    report.check("D u0 = 0", parallel_witness(&connection, u0));
    report.check("T = 0", torsion_witness(alg, &connection));
    report.check("∂η = 0", tensor_witness("∂η", &cyclic_del(&correction)));
    Ok(Built {
        connection,
        correction,
        report,
    })
}

/// `⟨N_F(u,v), w⟩` against the ten-term expression in torsion and `DF`,
/// for `u, v ∈ U^⊥` and any `w`; `D` must preserve `u0`.
pub fn nijenhuis_identity_check(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    s: &BnAlmostComplex,
) -> Result<StageReport, AdaptedError> {
    require_parallel(conn, s.u0())?;
    let f = s.f();
    let p = s.projection(alg);
    let id = identity(alg);
    let fp = f * &p;
    let t = torsion(alg, conn);
    let g = gamma(alg, conn, f);
    let f_df: Vec<PolyMatrix> = (0..alg.rank()).map(|a| f * &conn.frame_endo_derivative(a, f)).collect();
    // χ(x, y, z) = ⟨F (D_x F) y, z⟩
    let chi = ThreeTensor::from_endomorphisms(alg.space(), &f_df);
    let g_fp = g.pullback_by(&fp, &p, &id);
    let chi_pp = chi.pullback_by(&p, &p, &id);
    let terms = [
        (-1, t.pullback_by(&fp, &fp, &id)),
        (1, t.pullback_by(&p, &p, &id)),
        (-1, t.pullback_by(&fp, &p, f)),
        (-1, t.pullback_by(&p, &fp, f)),
        (1, g_fp.clone()),
        (-1, g_fp.permuted([1, 0, 2])),
        (1, chi_pp.permuted([1, 0, 2])),
        (-1, chi_pp),
        (-1, chi.pullback_by(&id, &p, &p).permuted([2, 0, 1])),
        (1, g.pullback_by(f, &p, &p).permuted([2, 0, 1])),
    ];
    let rhs = terms
        .iter()
        .fold(ThreeTensor::<Polynomial>::zeros(alg.rank()), |acc, (sign, x)| {
            if *sign > 0 {
                &acc + x
            } else {
                &acc - x
            }
        });
    let lhs = nijenhuis_tensor(alg, s);
    let mut report = StageReport::new("nijenhuis identity");
    report.check(
        "⟨N_F(u,v),w⟩ = torsion and DF terms",
        tensor_witness("lhs − rhs", &(&lhs - &rhs)),
    );
    Ok(report)
}
