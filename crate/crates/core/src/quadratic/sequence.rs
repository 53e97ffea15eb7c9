//! The exact sequence
//! `0 → S³V* → S²V*⊗V* --sk--> V*⊗Λ²V* --∂--> Λ³V* → 0`
//! checked by exact ranks in fixed lexicographic bases.

use serde::Serialize;

use super::space::QuadraticSpace;
use super::tensor::{cyclic_del, sk, ThreeTensor};
use crate::symbolic::linalg::rank;
use crate::symbolic::random::increasing_tuples;
use crate::symbolic::{Field, GaussianRational, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSequenceReport {
    pub dim: usize,
    pub complexified: bool,
    /// `[dim S³, dim S²⊗V*, dim V*⊗Λ², dim Λ³]`.
    pub dimensions: [usize; 4],
    pub rank_inclusion: usize,
    pub rank_sk: usize,
    pub rank_del: usize,
    pub injective: bool,
    pub exact_at_sym: bool,
    pub ker_del_eq_im_sk: bool,
    pub del_surjective: bool,
    pub alternating_sum_zero: bool,
    pub pass: bool,
}

fn sym3_basis<K: Field>(n: usize) -> Vec<ThreeTensor<K>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let mut key = [a, b, c];
                out.push(ThreeTensor::from_fn(n, |x, y, z| {
                    let mut k = [x, y, z];
                    k.sort_unstable();
                    key.sort_unstable();
                    if k == key {
                        K::one()
                    } else {
                        K::zero()
                    }
                }));
            }
        }
    }
    out
}

fn sym21_index(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in 0..n {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn sym21_basis<K: Field>(n: usize) -> Vec<ThreeTensor<K>> {
    sym21_index(n)
        .into_iter()
        .map(|(a, b, c)| {
            let mut t = ThreeTensor::zeros(n);
            t.set(a, b, c, K::one());
            t.set(b, a, c, K::one());
            t
        })
        .collect()
}

fn anti21_index(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn anti21_basis<K: Field>(n: usize) -> Vec<ThreeTensor<K>> {
    anti21_index(n)
        .into_iter()
        .map(|(a, b, c)| {
            let mut t = ThreeTensor::zeros(n);
            t.set(a, b, c, K::one());
            t.set(a, c, b, -K::one());
            t
        })
        .collect()
}

/// Matrix of a map whose images are read off at the given coordinate slots.
fn coordinate_matrix<K: Field>(images: &[ThreeTensor<K>], coords: &[(usize, usize, usize)]) -> Matrix<K> {
    Matrix::from_fn(coords.len(), images.len(), |i, j| {
        let (a, b, c) = coords[i];
        images[j].get(a, b, c).clone()
    })
}

fn sequence_ranks<K: Field>(n: usize) -> ([usize; 4], usize, usize, usize, bool) {
    let s3 = sym3_basis::<K>(n);
    let s21 = sym21_basis::<K>(n);
    let a21 = anti21_basis::<K>(n);
    let l3: Vec<_> = increasing_tuples(n, 3)
        .into_iter()
        .map(|t| (t[0], t[1], t[2]))
        .collect();
    let dims = [s3.len(), s21.len(), a21.len(), l3.len()];

    let incl = coordinate_matrix(&s3, &sym21_index(n));
    let sk_images: Vec<_> = s21.iter().map(sk).collect();
    let sk_m = coordinate_matrix(&sk_images, &anti21_index(n));
    let del_images: Vec<_> = a21.iter().map(cyclic_del).collect();
    let del_m = coordinate_matrix(&del_images, &l3);

    // consecutive maps compose to zero
    let composes = s3.iter().all(|t| sk(t).is_zero()) && sk_images.iter().all(|t| cyclic_del(t).is_zero());
    (dims, rank(&incl), rank(&sk_m), rank(&del_m), composes)
}

/// Verify exactness of the sequence on `V` (real or complexified).
pub fn check_exact_sequence(space: &QuadraticSpace, complexified: bool) -> ExactSequenceReport {
    let n = space.dim();
    let (dims, r_incl, r_sk, r_del, composes) = if complexified {
        sequence_ranks::<GaussianRational>(n)
    } else {
        sequence_ranks::<Rational>(n)
    };
    let injective = r_incl == dims[0];
    let exact_at_sym = composes && r_sk == dims[1] - r_incl;
    let ker_del_eq_im_sk = composes && r_sk == dims[2] - r_del;
    let del_surjective = r_del == dims[3];
    let alternating_sum_zero = dims[0] + dims[2] == dims[1] + dims[3];
    ExactSequenceReport {
        dim: n,
        complexified,
        dimensions: dims,
        rank_inclusion: r_incl,
        rank_sk: r_sk,
        rank_del: r_del,
        injective,
        exact_at_sym,
        ker_del_eq_im_sk,
        del_surjective,
        alternating_sum_zero,
        pass: injective && exact_at_sym && ker_del_eq_im_sk && del_surjective && alternating_sum_zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_three() {
        let space = QuadraticSpace::diagonal(&[1, 1, -1]).unwrap();
        let r = check_exact_sequence(&space, false);
        assert_eq!(r.dimensions, [10, 18, 9, 1]);
        assert!(r.pass, "{r:?}");
        assert!(check_exact_sequence(&space, true).pass);
    }

    #[test]
    fn dimension_one() {
        let space = QuadraticSpace::diagonal(&[1]).unwrap();
        let r = check_exact_sequence(&space, false);
        assert_eq!(r.dimensions, [1, 1, 0, 0]);
        assert!(r.pass);
    }
}
