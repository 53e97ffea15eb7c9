use super::algebroid::OddExactAlgebroid;
use super::section::{columns_to_matrix, GeneralizedSection};
use crate::symbolic::PolyMatrix;

/// Dorfman–Lie derivative `(L_u A) v = [u, A v] − A [u, v]`, assembled on
/// the frame.
pub fn dorfman_lie(alg: &OddExactAlgebroid, u: &GeneralizedSection, a: &PolyMatrix) -> PolyMatrix {
    let cols: Vec<_> = alg
        .frame_sections()
        .iter()
        .map(|e| &alg.bracket(u, &e.transform(a)) - &alg.bracket(u, e).transform(a))
        .collect();
    columns_to_matrix(&cols)
}
