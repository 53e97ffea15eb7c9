//! First prolongations of u(m1,m2) and of u(k1,l1) + u(k2,l2), and the exact
//! sequence through `sk` and `∂`.

use bn_courant::quadratic::{
    check_exact_sequence, expected_u_prolongation_dim, kahler_prolongation, kahler_splits, u_prolongation,
    unitary_splits, QuadraticSpace,
};

fn main() {
    for n in 1..=3 {
        for (m1, m2) in unitary_splits(n) {
            let (_, p) = u_prolongation(m1, m2);
            println!(
                "u({m1},{m2}): dim {} (n²(n+1) = {})",
                p.dimension(),
                expected_u_prolongation_dim(n)
            );
        }
    }
    for (s1, s2) in kahler_splits(2) {
        let kp = kahler_prolongation(s1, s2).unwrap();
        println!(
            "u{s1:?} + u{s2:?}: dim {} (expected {}, direct sum: {})",
            kp.total.dimension(),
            kp.expected_dimension(),
            kp.is_direct_sum()
        );
    }
    for d in 0..=3 {
        let r = check_exact_sequence(&QuadraticSpace::split_model(d), false);
        println!(
            "dim V = {}: dimensions {:?}, exact: {}",
            2 * d + 1,
            r.dimensions,
            r.pass
        );
    }
}
