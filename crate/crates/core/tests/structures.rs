mod common;

use bn_courant::bn::{
    complex_pair, eigen_decompose, is_integrable, kahler_integrability, l_frame, nijenhuis_tensor, validate_bn_gacs,
    validate_generalized_metric, validate_pseudo_hermitian,
};
use bn_courant::symbolic::scalar::q;
use bn_courant::symbolic::PolyMatrix;
use common::*;
use num_traits::Zero;

#[test]
fn every_fixture_structure_validates() {
    for name in STRUCTURED {
        let (alg, data) = structure(name);
        let report = match &data.g_end {
            Some(g) => validate_pseudo_hermitian(&alg, g, &data.f, &data.u0),
            None => validate_bn_gacs(&alg, &data.f, &data.u0),
        };
        assert!(report.pass(), "{name}: {:?}", report.first_failure());
    }
}

#[test]
fn rescaled_f_fails_the_square_identity() {
    let (alg, data) = structure("cx_even");
    let f = data.f.scaled(&q(2, 1));
    let report = validate_bn_gacs(&alg, &f, &data.u0);
    let failure = report.first_failure().expect("2F is not a structure");
    assert!(failure.witness.is_some());
}

#[test]
fn u0_with_wrong_norm_is_rejected() {
    let (alg, data) = structure("cx_odd");
    let u0 = data.u0.scale(&bn_courant::symbolic::Polynomial::constant(q(2, 1)));
    assert!(!validate_bn_gacs(&alg, &data.f, &u0).pass());
}

#[test]
fn identity_is_not_a_generalized_metric() {
    let (alg, _) = structure("kah");
    let report = validate_generalized_metric(&alg, &PolyMatrix::identity(alg.rank()));
    assert!(!report.pass());
}

#[test]
fn fixture_metrics_validate() {
    for name in ["kah", "kah_bfield", "kah3_h3", "kah3_twisted"] {
        let (alg, data) = structure(name);
        let report = validate_generalized_metric(&alg, data.g_end.as_ref().unwrap());
        assert!(report.pass(), "{name}: {:?}", report.first_failure());
    }
}

#[test]
fn integrability_catalog() {
    let expected = [
        ("cx_even", true),
        ("cx_even_twisted", true),
        ("cx_even_gauge", true),
        ("cx_odd", true),
        ("cx_odd3", true),
        ("cx_odd3_twisted", false),
        ("cx_odd3_h3", true),
        ("kah", true),
        ("kah_bfield", true),
        ("kah3_h3", true),
        ("kah3_twisted", false),
    ];
    for (name, integrable) in expected {
        let (alg, s) = complex(name);
        let report = is_integrable(&alg, &s);
        assert_eq!(report.integrable, integrable, "{name}");
        assert_eq!(report.integrable, nijenhuis_tensor(&alg, &s).is_zero(), "{name}");
        assert_eq!(report.witness_pair.is_some(), !integrable, "{name}");
    }
}

#[test]
fn kahler_integrability_needs_both_structures() {
    let (alg, ph) = hermitian("kah");
    assert!(kahler_integrability(&alg, &ph).0);
    let (alg, ph) = hermitian("kah3_h3");
    assert!(is_integrable(&alg, ph.complex()).integrable);
    let (ok, report) = kahler_integrability(&alg, &ph);
    assert!(!ok);
    assert!(report.first_failure().unwrap().name.contains("GF"));
}

#[test]
fn l_frame_is_isotropic() {
    for name in ["cx_even", "cx_odd3", "cx_even_gauge"] {
        let (alg, s) = complex(name);
        let frame = l_frame(&alg, &s);
        for a in &frame {
            for b in &frame {
                let (re, im) = complex_pair(&alg, a, b);
                assert!(re.is_zero() && im.is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn eigen_decomposition_dimensions() {
    for (name, n) in [("cx_even", 2), ("cx_odd", 1), ("cx_odd3", 3)] {
        let (alg, s) = complex(name);
        let dec = eigen_decompose(&alg, &s, None, &origin(&alg));
        assert!(dec.report.pass(), "{name}: {:?}", dec.report.first_failure());
        assert_eq!((dec.l.len(), dec.l_bar.len(), dec.u.len()), (n, n, 1), "{name}");
        assert!(dec.metric.is_none());
    }
}

#[test]
fn metric_splitting_of_kahler_fixture() {
    let (alg, ph) = hermitian("kah");
    let dec = eigen_decompose(&alg, ph.complex(), Some(ph.g()), &origin(&alg));
    assert!(dec.report.pass(), "{:?}", dec.report.first_failure());
    let m = dec.metric.expect("metric splitting");
    assert_eq!(m.e_plus.len() + m.e_minus.len(), alg.rank());
    assert_eq!(m.e_plus_f.len() + m.e_minus_f.len(), dec.l.len());
}
