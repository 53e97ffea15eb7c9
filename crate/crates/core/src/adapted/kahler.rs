//! Connections preserving a generalized metric, and the pseudo-Kähler
//! pipeline built on them.

use super::complex::build_adapted;
use super::parallel::u0_parallel_correction;
use super::{
    endo_witness, gamma, identity, matrix_witness, parallel_witness, require_torsion_free, scaled, tensor_witness,
    torsion_witness, AdaptedError, Built,
};
use crate::bn::{g_skew_witness, kahler_integrability, validate_generalized_metric, BnPseudoHermitian, StructureError};
use crate::courant::{dorfman_lie, torsion, GeneralizedConnection, GeneralizedSection, OddExactAlgebroid};
use crate::quadratic::ThreeTensor;
use crate::report::StageReport;
use crate::symbolic::{PolyMatrix, Polynomial, Rational, Ring};

fn half() -> Rational {
    Rational::from_i64(1) / Rational::from_i64(2)
}

/// `P_± = ½(Id ± G)`.
fn type_projections(alg: &OddExactAlgebroid, g: &PolyMatrix) -> [PolyMatrix; 2] {
    let id = identity(alg);
    [(&id + g).scaled(&half()), (&id - g).scaled(&half())]
}

/// `η_u = ½ G (D⁰_u G)`, which makes `D⁰ + η` preserve `G`.
pub fn metric_correction(alg: &OddExactAlgebroid, g: &PolyMatrix) -> Vec<PolyMatrix> {
    let n = alg.rank();
    (0..n)
        .map(|a| {
            if a < alg.base_dim() {
                (g * &g.derivative(a)).scaled(&half())
            } else {
                PolyMatrix::zeros(n, n)
            }
        })
        .collect()
}

/// Correction removing a totally skew torsion `t` while commuting with `G`:
/// `−⅓` of the pure-type parts, and each mixed part assigned to the slot of
/// the odd type out.
pub fn torsion_killer(alg: &OddExactAlgebroid, g: &PolyMatrix, t: &ThreeTensor<Polynomial>) -> ThreeTensor<Polynomial> {
    let [plus, minus] = type_projections(alg, g);
    let pure = &t.pullback_by(&plus, &plus, &plus) + &t.pullback_by(&minus, &minus, &minus);
    let mixed = &t.pullback_by(&minus, &plus, &plus) + &t.pullback_by(&plus, &minus, &minus);
    let third = scaled(&pure, -1, 3);
    &third - &mixed
}

fn blocks_witness(alg: &OddExactAlgebroid, killer: &ThreeTensor<Polynomial>, g: &PolyMatrix) -> Option<String> {
    killer
        .to_endomorphisms(alg.space())
        .iter()
        .enumerate()
        .find_map(|(a, eta)| matrix_witness(&format!("[η(e_{a}), G]"), &eta.commutator(g)))
}

/// Torsion-free connection preserving `G`: `D⁰` corrected to preserve `G`,
/// then its torsion removed type by type.
pub fn levi_civita(alg: &OddExactAlgebroid, g: &PolyMatrix) -> Result<Built, AdaptedError> {
    let metric = validate_generalized_metric(alg, g);
    if let Some(p) = metric.first_failure() {
        return Err(AdaptedError::Structure(StructureError::Invalid {
            name: p.name.clone(),
            witness: p.witness.clone().unwrap_or_default(),
        }));
    }
    let mut report = StageReport::new("levi-civita");
    let base = GeneralizedConnection::base(alg);
    let eta = metric_correction(alg, g);
    let metric_conn = base.add_correction(alg, &eta)?;
    report.check("(D⁰ + ½G D⁰G) G = 0", endo_witness(&metric_conn, "G", g));
    let killer = torsion_killer(alg, g, &torsion(alg, &metric_conn));
    let connection = metric_conn.add_tensor(alg, &killer)?;
    report.check("D G = 0", endo_witness(&connection, "G", g));
    report.check("T = 0", torsion_witness(alg, &connection));
    report.check("torsion correction preserves E±", blocks_witness(alg, &killer, g));
    let correction = &ThreeTensor::from_endomorphisms(alg.space(), &eta) + &killer;
    Ok(Built {
        connection,
        correction,
        report,
    })
}

/// `u ∧ v + G u ∧ G v` is `G`-skew.
pub fn g_skew_wedge_witness(
    alg: &OddExactAlgebroid,
    g: &PolyMatrix,
    u: &GeneralizedSection,
    v: &GeneralizedSection,
) -> Option<String> {
    let space = alg.space();
    let (gu, gv) = (u.transform(g), v.transform(g));
    let w = &space.wedge(u.components(), v.components()).expect("frame-sized")
        + &space.wedge(gu.components(), gv.components()).expect("frame-sized");
    g_skew_witness(alg, g, "u∧v + Gu∧Gv", &w)
}

/// The two reformulations of `G`-skewness of `η_{u0}` for a Levi-Civita `D`,
/// on frame sections.
pub fn u0_metric_check(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    g: &PolyMatrix,
    u0: &GeneralizedSection,
) -> StageReport {
    let space = alg.space();
    let mut report = StageReport::new("G-skewness of D u0");
    let m = conn.derivative_matrix(u0);
    let left = space.bilinear_form(&(&m * g));
    let right = &space.bilinear_form(&m) * g;
    let lhs = &left + &left.transpose();
    let rhs = &right + &right.transpose();
    report.check(
        "⟨D_{Gv}u0,w⟩ + ⟨D_{Gw}u0,v⟩ = ⟨D_v u0,Gw⟩ + ⟨D_w u0,Gv⟩",
        matrix_witness("lhs − rhs", &(&lhs - &rhs)),
    );
    let frame = alg.frame_sections();
    let gform = space.bilinear_form(g);
    let anchor_u0 = u0.anchor();
    let mut witness = None;
    'outer: for (b, v) in frame.iter().enumerate() {
        let gv = v.transform(g);
        let gvu0 = alg.bracket(&gv, u0);
        for (c, w) in frame.iter().enumerate() {
            let gw = w.transform(g);
            let lhs = &anchor_u0.apply(&gform[(b, c)]) - &alg.pair(&alg.bracket(u0, &gw), v);
            let g_u0_v = alg.pair(&u0.transform(g), v);
            let rhs = &w.anchor().apply(&g_u0_v) - &alg.pair(&gvu0, w);
            if lhs != rhs {
                witness = Some(format!("v = e_{b}, w = e_{c}: lhs − rhs = {}", &lhs - &rhs));
                break 'outer;
            }
        }
    }
    report.check("π(u0)G(v,w) − ⟨[u0,Gw],v⟩ = π(w)G(u0,v) − ⟨[Gv,u0],w⟩", witness);
    report
}

/// `make_u0_parallel` applied to a Levi-Civita connection of `G`, with
/// `G`-skewness of every `η_u` checked.
pub fn make_metric_u0_parallel(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    g: &PolyMatrix,
    u0: &GeneralizedSection,
) -> Result<Built, AdaptedError> {
    require_torsion_free(alg, conn)?;
    if let Some(w) = endo_witness(conn, "G", g) {
        return Err(AdaptedError::NotMetric(w));
    }
    let mut report = StageReport::new("metric u0-parallel");
    let lie = dorfman_lie(alg, u0, g);
    report.check("L_u0 G = 0", matrix_witness("L_u0 G", &lie));
    let eta = u0_parallel_correction(alg, conn, u0);
    let skew = eta
        .iter()
        .enumerate()
        .find_map(|(a, m)| g_skew_witness(alg, g, &format!("η(e_{a})"), m));
    report.check("η_u G-skew", skew);
    report
        .postconditions
        .extend(u0_metric_check(alg, conn, g, u0).postconditions);
    let connection = conn.add_correction(alg, &eta)?;
    report.check("D G = 0", endo_witness(&connection, "G", g));
    report.check("D u0 = 0", parallel_witness(&connection, u0));
    report.check("T = 0", torsion_witness(alg, &connection));
    Ok(Built {
        connection,
        correction: ThreeTensor::from_endomorphisms(alg.space(), &eta),
        report,
    })
}

#[derive(Clone, Debug)]
pub struct KahlerBuild {
    pub integrable: bool,
    pub connection: GeneralizedConnection,
    pub stages: Vec<StageReport>,
}

impl KahlerBuild {
    pub fn pass(&self) -> bool {
        self.stages.iter().all(StageReport::pass)
    }
}

/// Levi-Civita, then u0-parallel, then `D̃`; checks `D̃G = D̃F = 0` and
/// `T^{D̃} = 0`. Non-integrable input runs through and reports residuals.
pub fn build_bn_kahler_connection(alg: &OddExactAlgebroid, s: &BnPseudoHermitian) -> Result<KahlerBuild, AdaptedError> {
    let g = s.g();
    let f = s.complex().f();
    let u0 = s.complex().u0();
    let (integrable, integrability) = kahler_integrability(alg, s);
    let lc = levi_civita(alg, g)?;
    let parallel = make_metric_u0_parallel(alg, &lc.connection, g, u0)?;
    let d = &parallel.connection;
    let mut decomposition = StageReport::new("type decomposition");
    let [plus, minus] = type_projections(alg, g);
    let gam = gamma(alg, d, f);
    let mixed = &gam.pullback_by(&plus, &identity(alg), &minus) + &gam.pullback_by(&minus, &identity(alg), &plus);
    decomposition.check("⟨(D_v F)u, w⟩ = 0 for v ∈ E±, w ∈ E∓", tensor_witness("γ", &mixed));
    for (label, v_proj, uw_proj) in [("E₊, E₋", &plus, &minus), ("E₋, E₊", &minus, &plus)] {
        let witness = alg.frame_sections().iter().enumerate().find_map(|(b, e)| {
            let v = e.transform(v_proj);
            let lie = dorfman_lie(alg, &v, f);
            let m = &(&uw_proj.transpose() * &alg.space().bilinear_form(&lie)) * uw_proj;
            matrix_witness(&format!("⟨[v,Fu] − F[v,u], w⟩ with v = P e_{b}"), &m)
        });
        decomposition.check(format!("⟨[v,Fu] − F[v,u], w⟩ = 0 for v ∈ {label}"), witness);
    }
    let tilde = build_adapted(alg, d, s.complex())?;
    let mut final_stage = tilde.report.clone();
    final_stage.stage = "pseudo-Kähler connection".into();
    final_stage.check("D̃ G = 0", endo_witness(&tilde.connection, "G", g));
    final_stage.check("T = 0", torsion_witness(alg, &tilde.connection));
    Ok(KahlerBuild {
        integrable,
        connection: tilde.connection,
        stages: vec![integrability, lc.report, parallel.report, decomposition, final_stage],
    })
}
