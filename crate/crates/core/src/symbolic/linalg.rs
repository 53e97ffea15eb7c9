//! Exact Gaussian elimination over a scalar field.

use super::matrix::Matrix;
use super::scalar::Field;

/// Reduced row echelon form together with the pivot columns.
pub struct Echelon<K> {
    pub reduced: Matrix<K>,
    pub pivots: Vec<usize>,
}

pub fn rref<K: Field>(m: &Matrix<K>) -> Echelon<K> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].inv();
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let sub = factor.clone() * a[(r, j)].clone();
                a[(i, j)] = a[(i, j)].clone() - sub;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

pub fn rank<K: Field>(m: &Matrix<K>) -> usize {
    rref(m).pivots.len()
}

/// Basis of the right kernel `{x : M x = 0}`. One vector per free column,
/// with a 1 in that column.
pub fn linear_kernel<K: Field>(m: &Matrix<K>) -> Vec<Vec<K>> {
    let Echelon { reduced, pivots } = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![K::zero(); cols];
        v[free] = K::one();
        for (row, &p) in pivots.iter().enumerate() {
            let entry = &reduced[(row, free)];
            if !entry.is_zero() {
                v[p] = -entry.clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of a family of vectors.
pub fn span_rank<K: Field>(vectors: &[Vec<K>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].len();
    rank(&Matrix::from_fn(vectors.len(), n, |i, j| vectors[i][j].clone()))
}

/// Solve `M x = b`; `None` if the system is inconsistent.
pub fn solve<K: Field>(m: &Matrix<K>, b: &[K]) -> Option<Vec<K>> {
    assert_eq!(m.rows(), b.len(), "dimension mismatch in linear solve");
    let aug = Matrix::from_fn(m.rows(), m.cols() + 1, |i, j| {
        if j < m.cols() {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let Echelon { reduced, pivots } = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![K::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(row, m.cols())].clone();
    }
    Some(x)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span<K: Field>(basis: &[Vec<K>], v: &[K]) -> bool {
    if basis.is_empty() {
        return v.iter().all(K::is_zero);
    }
    let m = Matrix::from_columns(basis, v.len());
    solve(&m, v).is_some()
}

pub fn inverse<K: Field>(m: &Matrix<K>) -> Option<Matrix<K>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            K::one()
        } else {
            K::zero()
        }
    });
    let Echelon { reduced, pivots } = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| reduced[(i, n + j)].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::scalar::{gauss, qi, GaussianRational, Rational};
    use num_traits::Zero;

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(linear_kernel(&Matrix::<Rational>::identity(3)).is_empty());
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let k = linear_kernel(&Matrix::<Rational>::zeros(2, 5));
        assert_eq!(k.len(), 5);
        assert_eq!(span_rank(&k), 5);
    }

    #[test]
    fn rank_two_kernel_is_annihilated() {
        // rows 3 and 4 are combinations of rows 1 and 2
        let m = mat(&[&[1, 2, 0, -1], &[0, 1, 3, 2], &[1, 3, 3, 1], &[2, 3, -3, -4]]);
        assert_eq!(rank(&m), 2);
        let k = linear_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(Zero::is_zero));
        }
        assert_eq!(span_rank(&k), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(solve(&m, &[qi(3), qi(2)]).unwrap(), vec![qi(1), qi(1)]);
        let singular = mat(&[&[1, 1], &[1, 1]]);
        assert!(inverse(&singular).is_none());
        assert!(solve(&singular, &[qi(1), qi(2)]).is_none());
        assert!(in_span(&[vec![qi(1), qi(1)]], &[qi(2), qi(2)]));
    }

    #[test]
    fn gaussian_kernel() {
        // F - i Id for the rotation generator
        let i = gauss(qi(0), qi(1));
        let m: Matrix<GaussianRational> = Matrix::from_rows(vec![
            vec![-i.clone(), gauss(qi(-1), qi(0))],
            vec![gauss(qi(1), qi(0)), -i.clone()],
        ]);
        let k = linear_kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Zero::is_zero));
    }
}
