//! Build F-preserving and pseudo-Kähler connections and sample the affine
//! space of torsion-free ones.

use bn_courant::adapted::{
    adapted_pipeline, adapted_space, build_bn_kahler_connection, check_affine_samples, infeasibility_certificate,
    random_fiber_elements,
};
use bn_courant::bn::{BnAlmostComplex, BnPseudoHermitian};
use bn_courant::courant::torsion;
use bn_courant::instance::Instance;
use bn_courant::symbolic::scalar::qi;

fn load(name: &str) -> Instance {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    Instance::load(format!("{fixtures}/{name}.json")).unwrap()
}

fn main() {
    for name in ["cx_even", "cx_even_gauge", "cx_odd3_twisted"] {
        let inst = load(name);
        let alg = &inst.algebroid;
        let data = inst.structure.unwrap();
        let s = BnAlmostComplex::new(alg, data.f, data.u0).unwrap();
        let pipeline = adapted_pipeline(alg, &s).unwrap();
        let t = torsion(alg, &pipeline.adapted.connection);
        println!(
            "{name}: D̃F = 0 {}, T = 0 {}",
            pipeline.adapted.connection.preserves_endo(s.f()),
            t.is_zero()
        );
        let origin = vec![qi(0); alg.base_dim()];
        if t.is_zero() {
            let model = adapted_space(alg, &s, None, &origin).unwrap();
            println!("  fiber dimension {}", model.dimension());
        } else {
            let cert = infeasibility_certificate(alg, &s, None, &t, &origin);
            println!(
                "  no torsion-free correction: rank {} < {}",
                cert.rank_system, cert.rank_augmented
            );
        }
    }

    let inst = load("kah");
    let alg = &inst.algebroid;
    let data = inst.structure.unwrap();
    let ph = BnPseudoHermitian::new(alg, data.g_end.unwrap(), data.f, data.u0).unwrap();
    let build = build_bn_kahler_connection(alg, &ph).unwrap();
    println!("kah: every stage passes {}", build.pass());
    let model = adapted_space(alg, ph.complex(), Some(ph.g()), &vec![qi(0); alg.base_dim()]).unwrap();
    let samples = random_fiber_elements(&model, 0, 5);
    let report = check_affine_samples(alg, ph.complex(), Some(ph.g()), &build.connection, &samples).unwrap();
    println!(
        "  fiber dimension {}, shifted connections adapted {}",
        model.dimension(),
        report.pass()
    );
}
