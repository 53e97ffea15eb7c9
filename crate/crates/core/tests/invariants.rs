mod common;

use bn_courant::adapted::{adapted_pipeline_from, adapted_space, difference_in_fiber};
use bn_courant::courant::{
    check_connection_axioms, check_courant_axioms, random_samples, torsion, torsion_free_base, GeneralizedConnection,
};
use bn_courant::quadratic::cyclic_del;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn closed_twists_satisfy_the_axioms(seed in any::<u64>()) {
        let alg = load("twisted_d3").algebroid;
        let report = check_courant_axioms(&alg, &random_samples(3, seed, 2, 2));
        prop_assert!(report.pass(), "{:?}", report.first_failure().and_then(|o| o.witness.clone()));
    }

    #[test]
    fn torsion_shifts_by_the_cyclic_sum(seed in any::<u64>()) {
        let alg = load("cx_odd3_twisted").algebroid;
        let base = GeneralizedConnection::base(&alg);
        let eta = random_skew(&alg, seed, 1);
        let shifted = base.add_tensor(&alg, &eta).unwrap();
        prop_assert_eq!(&torsion(&alg, &shifted) - &torsion(&alg, &base), cyclic_del(&eta));
    }

    #[test]
    fn skew_corrections_are_connections(seed in any::<u64>()) {
        let alg = load("twisted_d3").algebroid;
        let conn = GeneralizedConnection::from_tensor(&alg, &random_skew(&alg, seed, 1)).unwrap();
        let report = check_connection_axioms(&alg, &conn, &random_samples(3, seed, 1, 2));
        prop_assert!(report.leibniz && report.metricity, "{:?}", report.witness);
    }

    #[test]
    fn adapted_connections_differ_by_fiber_elements(seed in any::<u64>()) {
        let (alg, s) = complex("cx_even");
        let model = adapted_space(&alg, &s, None, &origin(&alg)).unwrap();
        let build = |seed| {
            let base = torsion_free_base(&alg).add_tensor(&alg, &random_sk_symmetric(&alg, seed)).unwrap();
            adapted_pipeline_from(&alg, &s, base).unwrap().adapted.connection
        };
        let (first, second) = (build(seed), build(seed.wrapping_add(1)));
        prop_assert!(torsion(&alg, &second).is_zero());
        prop_assert!(second.preserves_endo(s.f()));
        prop_assert!(difference_in_fiber(&model, &first, &second, &alg));
    }
}
