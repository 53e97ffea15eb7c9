use num_traits::Zero;

use super::complex::{complex_bracket, complex_pair, ComplexSection};
use super::structure::{BnAlmostComplex, BnPseudoHermitian, StructureError};
use crate::courant::{dorfman_lie, GeneralizedSection, OddExactAlgebroid};
use crate::quadratic::ThreeTensor;
use crate::report::StageReport;
use crate::symbolic::{PolyMatrix, Polynomial};

/// `N_F(u,v) = [Fu,Fv] − [u,v] − F([Fu,v] + [u,Fv])` without the `U^⊥` check.
pub fn nijenhuis_raw(
    alg: &OddExactAlgebroid,
    f: &PolyMatrix,
    u: &GeneralizedSection,
    v: &GeneralizedSection,
) -> GeneralizedSection {
    let (fu, fv) = (u.transform(f), v.transform(f));
    let mixed = &alg.bracket(&fu, v) + &alg.bracket(u, &fv);
    &(&alg.bracket(&fu, &fv) - &alg.bracket(u, v)) - &mixed.transform(f)
}

/// The Nijenhuis tensor on `u, v ∈ Γ(U^⊥)`.
pub fn nijenhuis(
    alg: &OddExactAlgebroid,
    s: &BnAlmostComplex,
    u: &GeneralizedSection,
    v: &GeneralizedSection,
) -> Result<GeneralizedSection, StructureError> {
    s.check_orthogonal(alg, "u", u)?;
    s.check_orthogonal(alg, "v", v)?;
    Ok(nijenhuis_raw(alg, s.f(), u, v))
}

/// `⟨N_F(P e_a, P e_b), e_c⟩`.
pub fn nijenhuis_tensor(alg: &OddExactAlgebroid, s: &BnAlmostComplex) -> ThreeTensor<Polynomial> {
    let frame = s.orthogonal_frame(alg);
    let basis = alg.frame_sections();
    let n = alg.rank();
    let values: Vec<Vec<GeneralizedSection>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| nijenhuis_raw(alg, s.f(), &frame[a], &frame[b]))
                .collect()
        })
        .collect();
    ThreeTensor::from_fn(n, |a, b, c| alg.pair(&values[a][b], &basis[c]))
}

/// Sections `ℓ_a = P e_a − i F e_a` spanning the `i`-eigenbundle `L`.
pub fn l_frame(alg: &OddExactAlgebroid, s: &BnAlmostComplex) -> Vec<ComplexSection> {
    s.orthogonal_frame(alg)
        .into_iter()
        .zip(alg.frame_sections())
        .map(|(pe, e)| ComplexSection::new(pe, -&e.transform(s.f())))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegrabilityReport {
    pub integrable: bool,
    /// Frame indices `(a, b)` with `N_F(P e_a, P e_b) ≠ 0`.
    pub witness_pair: Option<(usize, usize)>,
    pub stage: StageReport,
}

/// Integrability via the Nijenhuis tensor on the `U^⊥` frame; when it
/// vanishes, also checks `L_{u0} F = 0` and that `Γ(L)` is closed under the
/// bracket.
pub fn is_integrable(alg: &OddExactAlgebroid, s: &BnAlmostComplex) -> IntegrabilityReport {
    is_integrable_labelled(alg, s, "F")
}

pub(crate) fn is_integrable_labelled(alg: &OddExactAlgebroid, s: &BnAlmostComplex, label: &str) -> IntegrabilityReport {
    let mut stage = StageReport::new(format!("integrability {label}"));
    let frame = s.orthogonal_frame(alg);
    let n = alg.rank();
    let mut witness_pair = None;
    let mut witness = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            let nf = nijenhuis_raw(alg, s.f(), &frame[a], &frame[b]);
            if let Some((i, r)) = nf.first_nonzero() {
                witness_pair = Some((a, b));
                witness = Some(format!("N_{label}(P e_{a}, P e_{b})[{i}] = {r}"));
                break 'outer;
            }
        }
    }
    let integrable = stage.check(format!("N_{label} = 0 on U^⊥"), witness);
    if integrable {
        let lie = dorfman_lie(alg, s.u0(), s.f());
        stage.check(
            format!("L_u0 {label} = 0"),
            lie.first_nonzero()
                .map(|(i, j, r)| format!("(L_u0 {label})[{i}][{j}] = {r}")),
        );
        stage.check(
            format!("Γ(L_{label}) closed under the bracket"),
            l_closure_witness(alg, s),
        );
    }
    IntegrabilityReport {
        integrable,
        witness_pair,
        stage,
    }
}

/// `[ℓ_a, ℓ_b]` lies in `L = (L ⊕ U)^⊥ ∩ U^⊥` iff it pairs to zero with
/// every `ℓ_c` and with `u0`.
fn l_closure_witness(alg: &OddExactAlgebroid, s: &BnAlmostComplex) -> Option<String> {
    let ell = l_frame(alg, s);
    let u0 = ComplexSection::real(s.u0().clone());
    for (a, la) in ell.iter().enumerate() {
        for (b, lb) in ell.iter().enumerate() {
            let br = complex_bracket(alg, la, lb);
            for (c, target) in ell.iter().chain(std::iter::once(&u0)).enumerate() {
                let (re, im) = complex_pair(alg, &br, target);
                if !re.is_zero() || !im.is_zero() {
                    let name = if c == ell.len() {
                        "u0".to_string()
                    } else {
                        format!("ℓ_{c}")
                    };
                    return Some(format!("⟨[ℓ_{a}, ℓ_{b}], {name}⟩ = ({re}) + i({im})"));
                }
            }
        }
    }
    None
}

/// Integrability of both `F` and `G^end F`; when both hold, also checks
/// `L_{u0} G^end = 0`.
pub fn kahler_integrability(alg: &OddExactAlgebroid, s: &BnPseudoHermitian) -> (bool, StageReport) {
    let mut stage = StageReport::new("pseudo-Kähler integrability");
    let first = is_integrable_labelled(alg, s.complex(), "F");
    let second = is_integrable_labelled(alg, &s.companion(), "GF");
    stage.postconditions.extend(first.stage.postconditions);
    stage.postconditions.extend(second.stage.postconditions);
    let both = first.integrable && second.integrable;
    if both {
        let lie = dorfman_lie(alg, s.complex().u0(), s.g());
        stage.check(
            "L_u0 G = 0",
            lie.first_nonzero().map(|(i, j, r)| format!("(L_u0 G)[{i}][{j}] = {r}")),
        );
    }
    (both, stage)
}
