//! The `F`-preserving connection `D̃ = D − ¼{A_u, F} − ½ F (D_u F)` and the
//! identities its torsion satisfies.

use super::parallel::make_u0_parallel;
use super::{
    contract_last, endo_witness, gamma, identity, matrix_witness, paired_with_f, parallel_witness, require_parallel,
    require_torsion_free, scaled, tensor_witness, AdaptedError, Built,
};
use crate::bn::{nijenhuis_tensor, BnAlmostComplex};
use crate::courant::{
    dorfman_lie, torsion, torsion_anti_part, torsion_free_base, GeneralizedConnection, OddExactAlgebroid,
};
use crate::quadratic::{cyclic_del, ThreeTensor};
use crate::report::StageReport;
use crate::symbolic::{PolyMatrix, Polynomial, Rational, Ring};

/// `A_{e_c}`: `⟨A_u v, w⟩ = ½(γ(Pv, u, Pw) + γ(Pw, u, Pv))`, zero on `U`.
pub fn a_operator(alg: &OddExactAlgebroid, conn: &GeneralizedConnection, s: &BnAlmostComplex) -> Vec<PolyMatrix> {
    let p = s.projection(alg);
    let g = gamma(alg, conn, s.f());
    // q(u, v, w) = γ(Pv, u, Pw)
    let q = g.pullback_by(&p, &identity(alg), &p).permuted([1, 0, 2]);
    let sym = scaled(&(&q + &q.permuted([0, 2, 1])), 1, 2);
    sym.to_endomorphisms(alg.space())
}

/// `D̃ = D − ¼{A_u, F} − ½ F (D_u F)`; `D` must be torsion-free with
/// `D u0 = 0`. The report carries both torsion formulas.
pub fn build_adapted(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    s: &BnAlmostComplex,
) -> Result<Built, AdaptedError> {
    require_torsion_free(alg, conn)?;
    require_parallel(conn, s.u0())?;
    let f = s.f();
    let quarter = Rational::from_i64(1) / Rational::from_i64(4);
    let half = Rational::from_i64(1) / Rational::from_i64(2);
    let a = a_operator(alg, conn, s);
    let mut report = StageReport::new("adapted connection");
    let mut anti = None;
    let eta: Vec<PolyMatrix> = (0..alg.rank())
        .map(|c| {
            let df = conn.frame_endo_derivative(c, f);
            if anti.is_none() {
                anti = matrix_witness(&format!("{{D_e{c} F, F}}"), &df.anticommutator(f));
            }
            let sym_part = a[c].anticommutator(f).scaled(&quarter);
            let f_part = (f * &df).scaled(&half);
            -&(&sym_part + &f_part)
        })
        .collect();
    report.check("(D_u F) F + F (D_u F) = 0", anti);
    let a_sym = a.iter().enumerate().find_map(|(c, m)| {
        let b = alg.space().bilinear_form(m);
        matrix_witness(&format!("A_e{c} − A_e{c}*"), &(&b - &b.transpose()))
    });
    report.check("A_u symmetric", a_sym);
    let a_u0 = a.iter().enumerate().find_map(|(c, m)| {
        s.u0()
            .transform(m)
            .first_nonzero()
            .map(|(i, r)| format!("(A_e{c} u0)[{i}] = {r}"))
    });
    report.check("A_u u0 = 0", a_u0);
    let connection = conn.add_correction(alg, &eta)?;
    report.check("D̃ F = 0", endo_witness(&connection, "F", f));
    report.check("D̃ u0 = 0", parallel_witness(&connection, s.u0()));
    let t = torsion(alg, &connection);
    report
        .postconditions
        .extend(torsion_formula_checks(alg, &t, s).postconditions);
    Ok(Built {
        correction: ThreeTensor::from_endomorphisms(alg.space(), &eta),
        connection,
        report,
    })
}

/// For the torsion `t` of an `F`-preserving connection: the two torsion
/// formulas and the anti-invariant part of `t(·, ·, u0)`.
pub fn torsion_formula_checks(
    alg: &OddExactAlgebroid,
    t: &ThreeTensor<Polynomial>,
    s: &BnAlmostComplex,
) -> StageReport {
    let mut report = StageReport::new("torsion formulas");
    let f = s.f();
    let p = s.projection(alg);
    let n_tensor = nijenhuis_tensor(alg, s);
    let lhs = t.pullback_by(&p, &p, &p);
    let rhs = scaled(&n_tensor.pullback_by(&identity(alg), &identity(alg), &p), 1, 4);
    report.check(
        "T(u,v,w) = ¼⟨N_F(u,v),w⟩ on U^⊥",
        tensor_witness("lhs − rhs", &(&lhs - &rhs)),
    );
    let lie = dorfman_lie(alg, s.u0(), f);
    let lf = paired_with_f(alg, &lie, f);
    let half = Rational::from_i64(1) / Rational::from_i64(2);
    let t_u0 = contract_last(t, s.u0());
    report.check(
        "T(u,v,u0) = ½⟨(L_u0 F)u, Fv⟩",
        matrix_witness("lhs − rhs", &(&t_u0 - &lf.scaled(&half))),
    );
    let anti = torsion_anti_part(t, f, s.u0());
    report.check(
        "T^{F,−}(u,v,u0) = −½⟨(L_u0 F)u, Fv⟩",
        matrix_witness("lhs − rhs", &(&anti + &lf.scaled(&half))),
    );
    report
}

/// `⟨N_F(u,v), u0⟩ = ⟨(L_u0 F)u, Fv⟩` for `u, v ∈ U^⊥`.
pub fn u0_nijenhuis_check(alg: &OddExactAlgebroid, s: &BnAlmostComplex) -> StageReport {
    let f = s.f();
    let p = s.projection(alg);
    let lhs = contract_last(&nijenhuis_tensor(alg, s), s.u0());
    let lie = dorfman_lie(alg, s.u0(), f);
    let rhs = &(&p.transpose() * &paired_with_f(alg, &lie, f)) * &p;
    let mut report = StageReport::new("N_F along u0");
    report.check(
        "⟨N_F(u,v),u0⟩ = ⟨(L_u0 F)u, Fv⟩",
        matrix_witness("lhs − rhs", &(&lhs - &rhs)),
    );
    report
}

/// The intermediate torsion of `D − ½ F DF` and the torsion of `D̃`, each
/// against its expression in `γ(x,y,z) = ⟨(D_x F)y, z⟩`.
pub fn gamma_crosscheck(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    s: &BnAlmostComplex,
) -> Result<StageReport, AdaptedError> {
    require_torsion_free(alg, conn)?;
    require_parallel(conn, s.u0())?;
    let f = s.f();
    let id = identity(alg);
    let p = s.projection(alg);
    let g = gamma(alg, conn, f);
    let half = Rational::from_i64(-1) / Rational::from_i64(2);
    let eta1: Vec<PolyMatrix> = (0..alg.rank())
        .map(|a| (f * &conn.frame_endo_derivative(a, f)).scaled(&half))
        .collect();
    let d1 = conn.add_correction(alg, &eta1)?;
    let mut report = StageReport::new("gamma cross-check");
    let lhs = torsion(alg, &d1);
    let rhs = scaled(&cyclic_del(&g.pullback_by(&id, &id, f)), 1, 2);
    report.check("T^{D⁽¹⁾} = ½ Σ γ(u,v,Fw)", tensor_witness("lhs − rhs", &(&lhs - &rhs)));
    let tilde = build_adapted(alg, conn, s)?;
    let lhs = torsion(alg, &tilde.connection).pullback_by(&p, &p, &p);
    let dt = scaled(
        &cyclic_del(&(&g.pullback_by(f, &id, &id) + &g.pullback_by(&id, &id, f))),
        1,
        4,
    )
    .pullback_by(&p, &p, &p);
    report.check(
        "T^{D̃} = ¼ Σ (γ(Fu,v,w) + γ(u,v,Fw)) on U^⊥",
        tensor_witness("lhs − rhs", &(&lhs - &dt)),
    );
    let n_quarter = scaled(&nijenhuis_tensor(alg, s).pullback_by(&id, &id, &p), 1, 4);
    report.check(
        "¼ Σ (γ(Fu,v,w) + γ(u,v,Fw)) = ¼⟨N_F(u,v),w⟩ on U^⊥",
        tensor_witness("lhs − rhs", &(&dt - &n_quarter)),
    );
    Ok(report)
}

/// Torsion-free base, u0-parallel correction and `D̃`, in sequence.
#[derive(Clone, Debug)]
pub struct AdaptedPipeline {
    pub base: GeneralizedConnection,
    pub parallel: Built,
    pub adapted: Built,
}

impl AdaptedPipeline {
    pub fn stages(&self) -> Vec<StageReport> {
        vec![self.parallel.report.clone(), self.adapted.report.clone()]
    }
}

pub fn adapted_pipeline(alg: &OddExactAlgebroid, s: &BnAlmostComplex) -> Result<AdaptedPipeline, AdaptedError> {
    adapted_pipeline_from(alg, s, torsion_free_base(alg))
}

/// The pipeline started from any torsion-free connection.
pub fn adapted_pipeline_from(
    alg: &OddExactAlgebroid,
    s: &BnAlmostComplex,
    base: GeneralizedConnection,
) -> Result<AdaptedPipeline, AdaptedError> {
    let parallel = make_u0_parallel(alg, &base, s.u0())?;
    let adapted = build_adapted(alg, &parallel.connection, s)?;
    Ok(AdaptedPipeline {
        base,
        parallel,
        adapted,
    })
}
