//! Validate the fixture structures and decide integrability, printing the
//! Nijenhuis witness when there is one.

use bn_courant::bn::{is_integrable, kahler_integrability, validate_bn_gacs, BnAlmostComplex, BnPseudoHermitian};
use bn_courant::instance::Instance;

fn main() {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    for name in ["cx_even", "cx_odd3", "cx_odd3_twisted", "kah", "kah3_h3"] {
        let inst = Instance::load(format!("{fixtures}/{name}.json")).unwrap();
        let alg = &inst.algebroid;
        let data = inst.structure.unwrap();
        let valid = validate_bn_gacs(alg, &data.f, &data.u0).pass();
        let s = BnAlmostComplex::new(alg, data.f.clone(), data.u0.clone()).unwrap();
        let report = is_integrable(alg, &s);
        let witness = report
            .stage
            .first_failure()
            .and_then(|p| p.witness.clone())
            .unwrap_or_default();
        println!("{name}: valid {valid}, integrable {} {witness}", report.integrable);
        if let Some(g) = data.g_end {
            let ph = BnPseudoHermitian::new(alg, g, data.f, data.u0).unwrap();
            println!("  pseudo-Kähler: {}", kahler_integrability(alg, &ph).0);
        }
    }
}
