//! Torsion `T(u,v,w) = ⟨D_u v − D_v u − [u,v], w⟩ + ⟨D_w u, v⟩`.

use super::algebroid::OddExactAlgebroid;
use super::connection::GeneralizedConnection;
use super::section::GeneralizedSection;
use crate::quadratic::ThreeTensor;
use crate::symbolic::{PolyMatrix, Polynomial, Rational, Ring};

/// Torsion evaluated from its definition on arbitrary sections.
pub fn torsion_on(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    u: &GeneralizedSection,
    v: &GeneralizedSection,
    w: &GeneralizedSection,
) -> Polynomial {
    let first = &(&conn.apply(u, v) - &conn.apply(v, u)) - &alg.bracket(u, v);
    &alg.pair(&first, w) + &alg.pair(&conn.apply(w, u), v)
}

/// Frame values `T(e_a, e_b, e_c)` from the definition.
pub fn torsion(alg: &OddExactAlgebroid, conn: &GeneralizedConnection) -> ThreeTensor<Polynomial> {
    let n = alg.rank();
    let frame = alg.frame_sections();
    // D_{e_a} e_b and [e_a, e_b]
    let d_ab: Vec<Vec<GeneralizedSection>> = (0..n)
        .map(|a| frame.iter().map(|e| conn.frame_apply(a, e)).collect())
        .collect();
    let br: Vec<Vec<GeneralizedSection>> = frame
        .iter()
        .map(|ea| frame.iter().map(|eb| alg.bracket(ea, eb)).collect())
        .collect();
    ThreeTensor::from_fn(n, |a, b, c| {
        let first = &(&d_ab[a][b] - &d_ab[b][a]) - &br[a][b];
        &alg.pair(&first, &frame[c]) + &alg.pair(&d_ab[c][a], &frame[b])
    })
}

/// Torsion of the base connection, `−⟨[e_a, e_b], e_c⟩`.
pub fn base_torsion(alg: &OddExactAlgebroid) -> ThreeTensor<Polynomial> {
    torsion(alg, &GeneralizedConnection::base(alg))
}

/// The torsion-free connection `D⁰ − ⅓ T^{D⁰}`.
pub fn torsion_free_base(alg: &OddExactAlgebroid) -> GeneralizedConnection {
    let t = base_torsion(alg).scaled(&Rational::new((-1).into(), 3.into()));
    // T^{D⁰} is totally skew, so the correction is skew in its last two slots
    GeneralizedConnection::from_tensor(alg, &t).unwrap_or_else(|e| panic!("torsion-free base: {e}"))
}

/// `(T^D)^{F,−}(u, v, u₀) = ½(T(Fu, Fv, u₀) − T(u, v, u₀))` as a bilinear
/// form in `(u, v)` on the frame.
pub fn torsion_anti_part(torsion: &ThreeTensor<Polynomial>, f: &PolyMatrix, u0: &GeneralizedSection) -> PolyMatrix {
    let n = torsion.dim();
    let half = Rational::new(1.into(), 2.into());
    let cols: Vec<Vec<Polynomial>> = (0..n).map(|j| f.column(j)).collect();
    let unit = |i: usize| -> Vec<Polynomial> { (0..n).map(|k| Polynomial::from_i64((k == i) as i64)).collect() };
    PolyMatrix::from_fn(n, n, |a, b| {
        let twisted = torsion.eval(&cols[a], &cols[b], u0.components());
        let plain = torsion.eval(&unit(a), &unit(b), u0.components());
        (&twisted - &plain).scale(&half)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::courant::axioms::random_samples;
    use crate::courant::connection::check_connection_axioms;
    use crate::courant::lie::dorfman_lie;
    use crate::quadratic::{cyclic_del, sk};
    use crate::symbolic::parse::parse_polynomial;
    use crate::symbolic::random::random_polynomial;
    use crate::symbolic::DifferentialForm;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn twisted3() -> OddExactAlgebroid {
        let f2 = DifferentialForm::monomial(3, &[0, 1], Polynomial::from_i64(1)).unwrap();
        let h3 = DifferentialForm::monomial(3, &[0, 1, 2], Polynomial::from_i64(1)).unwrap();
        OddExactAlgebroid::twisted(3, f2, h3).unwrap()
    }

    fn nonclosed() -> OddExactAlgebroid {
        let f2 = DifferentialForm::monomial(3, &[0, 1], parse_polynomial("x3", 3).unwrap()).unwrap();
        OddExactAlgebroid::twisted(3, f2, DifferentialForm::zero(3, 3)).unwrap()
    }

    fn random_skew(alg: &OddExactAlgebroid, seed: u64, degree: u32) -> ThreeTensor<Polynomial> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = alg.base_dim();
        let sigma = ThreeTensor::from_fn(alg.rank(), |_, _, _| random_polynomial(&mut rng, d, degree, 2));
        sk(&sigma)
    }

    #[test]
    fn base_torsion_is_minus_bracket_and_totally_skew() {
        for alg in [OddExactAlgebroid::untwisted(2), twisted3(), nonclosed()] {
            let t = base_torsion(&alg);
            let frame = alg.frame_sections();
            for a in 0..alg.rank() {
                for b in 0..alg.rank() {
                    let br = alg.bracket(&frame[a], &frame[b]);
                    for c in 0..alg.rank() {
                        assert_eq!(*t.get(a, b, c), -alg.pair(&br, &frame[c]));
                    }
                }
            }
            assert!(t.is_totally_skew());
        }
        assert!(base_torsion(&OddExactAlgebroid::untwisted(2)).is_zero());
    }

    #[test]
    fn torsion_free_base_has_no_torsion() {
        for alg in [OddExactAlgebroid::untwisted(2), twisted3()] {
            assert!(torsion(&alg, &torsion_free_base(&alg)).is_zero());
        }
    }

    #[test]
    fn shift_law() {
        let alg = twisted3();
        let base = torsion_free_base(&alg);
        let eta = random_skew(&alg, 7, 1);
        let shifted = base.add_tensor(&alg, &eta).unwrap();
        let expected = &torsion(&alg, &base) + &cyclic_del(&eta);
        assert_eq!(torsion(&alg, &shifted), expected);
    }

    #[test]
    fn torsion_is_tensorial_and_matches_frame_values() {
        let alg = twisted3();
        let conn = GeneralizedConnection::from_tensor(&alg, &random_skew(&alg, 3, 1)).unwrap();
        let t = torsion(&alg, &conn);
        for s in random_samples(3, 11, 1, 2) {
            let direct = torsion_on(&alg, &conn, &s.u, &s.v, &s.w);
            assert_eq!(direct, t.eval(s.u.components(), s.v.components(), s.w.components()));
            assert_eq!(torsion_on(&alg, &conn, &s.u.scale(&s.f), &s.v, &s.w), &direct * &s.f);
            assert_eq!(torsion_on(&alg, &conn, &s.u, &s.v.scale(&s.f), &s.w), &direct * &s.f);
        }
    }

    #[test]
    fn connection_axioms_hold_for_skew_corrections() {
        let alg = twisted3();
        let conn = GeneralizedConnection::from_tensor(&alg, &random_skew(&alg, 5, 1)).unwrap();
        let report = check_connection_axioms(&alg, &conn, &random_samples(3, 2, 1, 3));
        assert!(report.leibniz && report.metricity, "{:?}", report.witness);
    }

    #[test]
    fn non_skew_correction_rejected() {
        let alg = OddExactAlgebroid::untwisted(1);
        let mut eta = vec![crate::symbolic::PolyMatrix::zeros(3, 3); 3];
        eta[0] = crate::symbolic::PolyMatrix::identity(3);
        assert!(GeneralizedConnection::new(&alg, eta).is_err());
    }

    #[test]
    fn dorfman_lie_is_tensorial() {
        let alg = twisted3();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = crate::symbolic::PolyMatrix::from_fn(7, 7, |_, _| random_polynomial(&mut rng, 3, 1, 2));
        for s in random_samples(3, 4, 1, 2) {
            let l = dorfman_lie(&alg, &s.u, &a);
            let direct = &alg.bracket(&s.u, &s.v.transform(&a)) - &alg.bracket(&s.u, &s.v).transform(&a);
            assert_eq!(s.v.transform(&l), direct);
        }
        let constant = crate::symbolic::PolyMatrix::from_fn(7, 7, |i, j| Polynomial::from_i64((i + 2 * j) as i64 % 3));
        assert!(!dorfman_lie(&alg, &alg.frame(0), &constant).is_zero());
    }

    #[test]
    fn constants_module_matches_search() {
        let outcome = crate::courant::oracle::search_bracket_constants(0);
        assert_eq!(
            crate::courant::oracle::render_constants(&outcome),
            crate::courant::CONSTANTS_SOURCE
        );
    }
}
