//! Quadratic vector spaces and the identification `so(V) ≅ Λ²V*`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::symbolic::linalg::inverse;
use crate::symbolic::{Field, Matrix, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is degenerate")]
    Degenerate,
    #[error("signature {computed:?} does not match declared {declared:?}")]
    SignatureMismatch {
        declared: (usize, usize),
        computed: (usize, usize),
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("subspace is not isotropic")]
    NotIsotropic,
    #[error("inconsistent signature split: {0}")]
    InconsistentSplit(String),
}

/// Lift a rational matrix into any ring.
pub fn lift<R: Ring>(m: &Matrix<Rational>) -> Matrix<R> {
    m.map(|q| R::one().scaled(q))
}

/// Signature `(p, q)` of a nondegenerate symmetric rational matrix, by
/// congruence diagonalization.
pub fn signature(gram: &Matrix<Rational>) -> Result<(usize, usize), QuadraticError> {
    let n = gram.rows();
    let mut a = gram.clone();
    let (mut p, mut q) = (0, 0);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            // bring a nonzero diagonal entry to position k
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // e_k -> e_k + e_j makes the diagonal 2 a_kj != 0
                for i in 0..n {
                    let v = a[(i, j)].clone();
                    a[(i, k)] = a[(i, k)].clone() + v;
                }
                for i in 0..n {
                    let v = a[(j, i)].clone();
                    a[(k, i)] = a[(k, i)].clone() + v;
                }
            } else {
                return Err(QuadraticError::Degenerate);
            }
        }
        let pivot = a[(k, k)].clone();
        if pivot > Rational::zero() {
            p += 1;
        } else {
            q += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = a[(i, k)].clone() / pivot.clone();
            for j in k..n {
                let v = f.clone() * a[(k, j)].clone();
                a[(i, j)] = a[(i, j)].clone() - v;
            }
            for j in k..n {
                let v = f.clone() * a[(j, k)].clone();
                a[(j, i)] = a[(j, i)].clone() - v;
            }
        }
    }
    Ok((p, q))
}

fn swap_sym(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

/// A real vector space with a nondegenerate symmetric bilinear form, given by
/// its Gram matrix in a fixed basis.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSpace {
    gram: Matrix<Rational>,
    gram_inv: Matrix<Rational>,
    signature: (usize, usize),
}

impl QuadraticSpace {
    pub fn new(gram: Matrix<Rational>) -> Result<Self, QuadraticError> {
        if !gram.is_square() || gram != gram.transpose() {
            return Err(QuadraticError::NotSymmetric);
        }
        let gram_inv = inverse(&gram).ok_or(QuadraticError::Degenerate)?;
        let signature = signature(&gram)?;
        Ok(QuadraticSpace {
            gram,
            gram_inv,
            signature,
        })
    }

    pub fn with_signature(gram: Matrix<Rational>, declared: (usize, usize)) -> Result<Self, QuadraticError> {
        let space = Self::new(gram)?;
        if space.signature != declared {
            return Err(QuadraticError::SignatureMismatch {
                declared,
                computed: space.signature,
            });
        }
        Ok(space)
    }

    /// Diagonal Gram matrix with the given entries (nonzero integers).
    pub fn diagonal(entries: &[i64]) -> Result<Self, QuadraticError> {
        let n = entries.len();
        Self::new(Matrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::from_i64(entries[i])
            } else {
                Rational::zero()
            }
        }))
    }

    /// Gram matrix of `TM ⊕ R ⊕ T*M` in the frame `(∂_1..∂_d, e, dx_1..dx_d)`:
    /// `⟨∂_i, dx_i⟩ = 1/2`, `⟨e, e⟩ = 1`. Signature `(d+1, d)`.
    pub fn split_model(d: usize) -> Self {
        let n = 2 * d + 1;
        let half = Rational::new(1.into(), 2.into());
        let gram = Matrix::from_fn(n, n, |i, j| {
            if i == d && j == d {
                Rational::one()
            } else if (i < d && j == i + d + 1) || (j < d && i == j + d + 1) {
                half.clone()
            } else {
                Rational::zero()
            }
        });
        // the frame Gram is fixed and nondegenerate
        Self::with_signature(gram, (d + 1, d)).unwrap_or_else(|e| panic!("split model: {e}"))
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix<Rational> {
        &self.gram_inv
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    fn check_len(&self, len: usize) -> Result<(), QuadraticError> {
        if len == self.dim() {
            Ok(())
        } else {
            Err(QuadraticError::Dimension {
                expected: self.dim(),
                got: len,
            })
        }
    }

    /// Lower an index: the covector `⟨v, ·⟩`.
    pub fn flat<R: Ring>(&self, v: &[R]) -> Vec<R> {
        lift::<R>(&self.gram).apply(v)
    }

    /// Raise an index: the vector `v` with `⟨v, ·⟩ = ξ`.
    pub fn sharp<R: Ring>(&self, xi: &[R]) -> Vec<R> {
        lift::<R>(&self.gram_inv).apply(xi)
    }

    pub fn pairing<R: Ring>(&self, u: &[R], v: &[R]) -> R {
        let gv = self.flat(v);
        u.iter()
            .zip(&gv)
            .fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Bilinear form `B(v, w) = ⟨A v, w⟩` of an endomorphism, i.e. `Aᵀ g`.
    pub fn bilinear_form<R: Ring>(&self, a: &Matrix<R>) -> Matrix<R> {
        &a.transpose() * &lift::<R>(&self.gram)
    }

    /// Inverse of [`bilinear_form`](Self::bilinear_form): `A = g⁻¹ Bᵀ`.
    pub fn endo_from_form<R: Ring>(&self, b: &Matrix<R>) -> Matrix<R> {
        &lift::<R>(&self.gram_inv) * &b.transpose()
    }

    /// Metric adjoint `A* = g⁻¹ Aᵀ g`.
    pub fn adjoint<R: Ring>(&self, a: &Matrix<R>) -> Matrix<R> {
        &lift::<R>(&self.gram_inv) * &(&a.transpose() * &lift::<R>(&self.gram))
    }

    pub fn is_skew<R: Ring>(&self, a: &Matrix<R>) -> bool {
        let b = self.bilinear_form(a);
        (&b + &b.transpose()).is_zero()
    }

    pub fn is_symmetric<R: Ring>(&self, a: &Matrix<R>) -> bool {
        let b = self.bilinear_form(a);
        b == b.transpose()
    }

    /// `(u ∧ v)(w) = ⟨u, w⟩ v − ⟨v, w⟩ u`.
    pub fn wedge<R: Ring>(&self, u: &[R], v: &[R]) -> Result<Matrix<R>, QuadraticError> {
        self.check_len(u.len())?;
        self.check_len(v.len())?;
        let (gu, gv) = (self.flat(u), self.flat(v));
        let n = self.dim();
        Ok(Matrix::from_fn(n, n, |i, j| {
            gu[j].clone() * v[i].clone() - gv[j].clone() * u[i].clone()
        }))
    }

    /// Basis `{e_a ∧ e_b : a < b}` of `so(V)`.
    pub fn so_basis<K: Field>(&self) -> Vec<Matrix<K>> {
        let n = self.dim();
        let unit = |i: usize| -> Vec<K> { (0..n).map(|j| if i == j { K::one() } else { K::zero() }).collect() };
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for a in 0..n {
            for b in a + 1..n {
                out.push(self.wedge(&unit(a), &unit(b)).unwrap_or_else(|_| unreachable!()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::random::random_rational;
    use crate::symbolic::scalar::{q, qi};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn split_model_pairing() {
        let s = QuadraticSpace::split_model(2);
        assert_eq!(s.signature(), (3, 2));
        let e = |i: usize| -> Vec<Rational> { (0..5).map(|j| qi((i == j) as i64)).collect() };
        assert_eq!(s.pairing(&e(2), &e(2)), qi(1));
        assert_eq!(s.pairing(&e(0), &e(3)), q(1, 2));
        let u: Vec<_> = (0..5).map(|j| qi([1, 0, 0, -1, 0][j])).collect();
        assert_eq!(s.pairing(&u, &u), qi(-1));
    }

    #[test]
    fn signature_of_hyperbolic_plane() {
        let h = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]);
        assert_eq!(signature(&h).unwrap(), (1, 1));
        let bad = Matrix::from_rows(vec![vec![qi(1), qi(1)], vec![qi(1), qi(1)]]);
        assert_eq!(QuadraticSpace::new(bad), Err(QuadraticError::Degenerate));
        assert!(matches!(
            QuadraticSpace::with_signature(h, (2, 0)),
            Err(QuadraticError::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn wedge_on_orthonormal_pair() {
        let s = QuadraticSpace::diagonal(&[1, 1, -1]).unwrap();
        let e1 = vec![qi(1), qi(0), qi(0)];
        let e2 = vec![qi(0), qi(1), qi(0)];
        let w = s.wedge(&e1, &e2).unwrap();
        assert_eq!(w.apply(&e1), e2);
        assert_eq!(w.apply(&e2), vec![qi(-1), qi(0), qi(0)]);
        assert!(s.wedge(&e1, &e1).unwrap().is_zero());
        assert!(s.wedge(&e1, &[qi(1)]).is_err());
    }

    #[test]
    fn random_wedges_are_skew() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = QuadraticSpace::split_model(2);
        for _ in 0..20 {
            let u: Vec<_> = (0..5).map(|_| random_rational(&mut rng)).collect();
            let v: Vec<_> = (0..5).map(|_| random_rational(&mut rng)).collect();
            let w = s.wedge(&u, &v).unwrap();
            assert!(s.is_skew(&w));
            assert_eq!(w, -&s.wedge(&v, &u).unwrap());
            assert_eq!(s.endo_from_form(&s.bilinear_form(&w)), w);
        }
        assert_eq!(s.so_basis::<Rational>().len(), 10);
    }
}
