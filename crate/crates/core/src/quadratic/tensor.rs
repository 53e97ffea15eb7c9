//! Trilinear forms on `V`: the spaces `V*⊗Λ²V*`, `S²V*⊗V*`, `Λ³V*`, and the
//! maps `sk` and `∂` between them.

use std::ops::{Add, Sub};

use num_traits::Zero;

use super::space::{lift, QuadraticSpace};
use crate::symbolic::{GaussianRational, Matrix, Rational, Ring};

/// A trilinear form `t(e_a, e_b, e_c) = t[a][b][c]` on an `n`-dimensional space.
#[derive(Clone, PartialEq, Debug)]
pub struct ThreeTensor<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> ThreeTensor<R> {
    pub fn zeros(n: usize) -> Self {
        ThreeTensor {
            n,
            data: vec![R::zero(); n * n * n],
        }
    }

    pub fn from_fn<F: FnMut(usize, usize, usize) -> R>(n: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    data.push(f(a, b, c));
                }
            }
        }
        ThreeTensor { n, data }
    }

    /// `α ⊗ β ⊗ γ` for covectors given by components.
    pub fn outer(alpha: &[R], beta: &[R], gamma: &[R]) -> Self {
        Self::from_fn(alpha.len(), |a, b, c| {
            alpha[a].clone() * beta[b].clone() * gamma[c].clone()
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.n + b) * self.n + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &R {
        &self.data[self.idx(a, b, c)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, value: R) {
        let i = self.idx(a, b, c);
        self.data[i] = value;
    }

    /// Components in `(a, b, c)` lexicographic order.
    pub fn components(&self) -> &[R] {
        &self.data
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> ThreeTensor<S> {
        ThreeTensor {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scaled(&self, q: &Rational) -> Self {
        self.map(|x| x.scaled(q))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    /// First nonzero component `(a, b, c, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, &R)> {
        let n = self.n;
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|k| (k / (n * n), (k / n) % n, k % n, &self.data[k]))
    }

    /// Skew in the last two slots, i.e. an element of `V*⊗Λ²V*`.
    pub fn is_skew_last_two(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| (b..self.n).all(|c| (self.get(a, b, c).clone() + self.get(a, c, b).clone()).is_zero()))
        })
    }

    /// Symmetric in the first two slots, i.e. an element of `S²V*⊗V*`.
    pub fn is_symmetric_first_two(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| (0..self.n).all(|c| self.get(a, b, c) == self.get(b, a, c))))
    }

    pub fn is_totally_skew(&self) -> bool {
        self.is_skew_last_two()
            && (0..self.n).all(|a| {
                (0..self.n)
                    .all(|b| (0..self.n).all(|c| (self.get(a, b, c).clone() + self.get(b, a, c).clone()).is_zero()))
            })
    }

    pub fn is_totally_symmetric(&self) -> bool {
        self.is_symmetric_first_two()
            && (0..self.n).all(|a| (0..self.n).all(|b| (0..self.n).all(|c| self.get(a, b, c) == self.get(a, c, b))))
    }

    /// Symmetrize in the first two slots: `½(t_abc + t_bac)`.
    pub fn symmetrize_first_two(&self) -> Self {
        let half = Rational::new(1.into(), 2.into());
        Self::from_fn(self.n, |a, b, c| {
            (self.get(a, b, c).clone() + self.get(b, a, c).clone()).scaled(&half)
        })
    }

    /// Tensor of a connection correction: `η_abc = ⟨η(e_a) e_b, e_c⟩`.
    pub fn from_endomorphisms(space: &QuadraticSpace, endos: &[Matrix<R>]) -> Self {
        let forms: Vec<_> = endos.iter().map(|e| space.bilinear_form(e)).collect();
        Self::from_fn(endos.len(), |a, b, c| forms[a][(b, c)].clone())
    }

    /// The endomorphisms `η(e_a)` recovered through the scalar product.
    pub fn to_endomorphisms(&self, space: &QuadraticSpace) -> Vec<Matrix<R>> {
        (0..self.n).map(|a| space.endo_from_form(&self.slice(a))).collect()
    }

    /// The bilinear form `t(e_a, ·, ·)`.
    pub fn slice(&self, a: usize) -> Matrix<R> {
        Matrix::from_fn(self.n, self.n, |b, c| self.get(a, b, c).clone())
    }

    /// Evaluate on arbitrary vectors.
    pub fn eval(&self, u: &[R], v: &[R], w: &[R]) -> R {
        let mut acc = R::zero();
        for a in 0..self.n {
            if u[a].is_zero() {
                continue;
            }
            for b in 0..self.n {
                if v[b].is_zero() {
                    continue;
                }
                for c in 0..self.n {
                    let t = self.get(a, b, c);
                    if t.is_zero() || w[c].is_zero() {
                        continue;
                    }
                    acc = acc + u[a].clone() * v[b].clone() * w[c].clone() * t.clone();
                }
            }
        }
        acc
    }

    /// Pull back along a linear map `P`: `(P*t)(u, v, w) = t(Pu, Pv, Pw)`.
    pub fn pullback(&self, p: &Matrix<Rational>) -> Self {
        let p = lift::<R>(p);
        self.pullback_by(&p, &p, &p)
    }

    /// Slot-wise pullback `(u, v, w) ↦ t(Au, Bv, Cw)`.
    pub fn pullback_by(&self, a: &Matrix<R>, b: &Matrix<R>, c: &Matrix<R>) -> Self {
        self.pull_slot(0, a).pull_slot(1, b).pull_slot(2, c)
    }

    fn pull_slot(&self, slot: usize, p: &Matrix<R>) -> Self {
        let n = self.n;
        ThreeTensor::from_fn(n, |a, b, c| {
            let mut acc = R::zero();
            for k in 0..n {
                let (idx, col) = match slot {
                    0 => ((k, b, c), a),
                    1 => ((a, k, c), b),
                    _ => ((a, b, k), c),
                };
                let coeff = &p[(k, col)];
                let val = self.get(idx.0, idx.1, idx.2);
                if !coeff.is_zero() && !val.is_zero() {
                    acc = acc + coeff.clone() * val.clone();
                }
            }
            acc
        })
    }

    /// Reorder slots: `s(x₀, x₁, x₂) = t(x_{p[0]}, x_{p[1]}, x_{p[2]})`.
    pub fn permuted(&self, p: [usize; 3]) -> Self {
        ThreeTensor::from_fn(self.n, |a, b, c| {
            let x = [a, b, c];
            self.get(x[p[0]], x[p[1]], x[p[2]]).clone()
        })
    }
}

impl ThreeTensor<Rational> {
    pub fn complexify(&self) -> ThreeTensor<GaussianRational> {
        self.map(|x| GaussianRational::new(x.clone(), Rational::zero()))
    }
}

impl ThreeTensor<GaussianRational> {
    pub fn re(&self) -> ThreeTensor<Rational> {
        ThreeTensor {
            n: self.n,
            data: self.data.iter().map(|z| z.re.clone()).collect(),
        }
    }

    pub fn im(&self) -> ThreeTensor<Rational> {
        ThreeTensor {
            n: self.n,
            data: self.data.iter().map(|z| z.im.clone()).collect(),
        }
    }
}

impl<R: Ring> Add for &ThreeTensor<R> {
    type Output = ThreeTensor<R>;

    fn add(self, rhs: &ThreeTensor<R>) -> ThreeTensor<R> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ThreeTensor {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<R: Ring> Sub for &ThreeTensor<R> {
    type Output = ThreeTensor<R>;

    fn sub(self, rhs: &ThreeTensor<R>) -> ThreeTensor<R> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ThreeTensor {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

/// Partial skew-symmetrization `(sk σ)(u, v, w) = σ(u, v, w) − σ(u, w, v)`.
pub fn sk<R: Ring>(sigma: &ThreeTensor<R>) -> ThreeTensor<R> {
    ThreeTensor::from_fn(sigma.dim(), |a, b, c| {
        sigma.get(a, b, c).clone() - sigma.get(a, c, b).clone()
    })
}

/// Cyclic sum `(∂α)(u, v, w) = α(u, v, w) + α(v, w, u) + α(w, u, v)`.
pub fn cyclic_del<R: Ring>(alpha: &ThreeTensor<R>) -> ThreeTensor<R> {
    ThreeTensor::from_fn(alpha.dim(), |a, b, c| {
        alpha.get(a, b, c).clone() + alpha.get(b, c, a).clone() + alpha.get(c, a, b).clone()
    })
}

/// Total antisymmetrization `(1/6) Σ sign(π) t_π`.
pub fn alternate<R: Ring>(t: &ThreeTensor<R>) -> ThreeTensor<R> {
    let sixth = Rational::new(1.into(), 6.into());
    ThreeTensor::from_fn(t.dim(), |a, b, c| {
        (t.get(a, b, c).clone() + t.get(b, c, a).clone() + t.get(c, a, b).clone()
            - t.get(b, a, c).clone()
            - t.get(a, c, b).clone()
            - t.get(c, b, a).clone())
        .scaled(&sixth)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::random::random_rational;
    use crate::symbolic::scalar::qi;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unit(n: usize, i: usize) -> Vec<Rational> {
        (0..n).map(|j| qi((i == j) as i64)).collect()
    }

    fn random_tensor(rng: &mut ChaCha8Rng, n: usize) -> ThreeTensor<Rational> {
        ThreeTensor::from_fn(n, |_, _, _| random_rational(rng))
    }

    #[test]
    fn sk_kills_totally_symmetric() {
        let alpha = vec![qi(1), qi(2), qi(-1)];
        let s = ThreeTensor::outer(&alpha, &alpha, &alpha);
        assert!(s.is_totally_symmetric());
        assert!(sk(&s).is_zero());
    }

    #[test]
    fn sk_of_aab_expands() {
        // sk(α⊗α⊗β) = α⊗(α⊗β − β⊗α)
        let a = unit(3, 0);
        let b = unit(3, 1);
        let out = sk(&ThreeTensor::outer(&a, &a, &b));
        let expected = &ThreeTensor::outer(&a, &a, &b) - &ThreeTensor::outer(&a, &b, &a);
        assert_eq!(out, expected);
        assert_eq!(*out.get(0, 0, 1), qi(1));
        assert_eq!(*out.get(0, 1, 0), qi(-1));
        assert!(out.is_skew_last_two());
    }

    #[test]
    fn del_of_basic_tensor() {
        // e¹⊗(e²∧e³) -> e¹∧e²∧e³
        let mut t = ThreeTensor::zeros(3);
        t.set(0, 1, 2, qi(1));
        t.set(0, 2, 1, qi(-1));
        let d = cyclic_del(&t);
        assert!(d.is_totally_skew());
        assert_eq!(*d.get(0, 1, 2), qi(1));
        assert_eq!(*d.get(1, 0, 2), qi(-1));
    }

    #[test]
    fn del_of_three_form_triples_it() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let t = alternate(&random_tensor(&mut rng, 4));
        assert!(t.is_totally_skew());
        assert_eq!(cyclic_del(&t), t.scaled(&qi(3)));
    }

    #[test]
    fn exactness_and_linearity_on_random_data() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let s1 = random_tensor(&mut rng, 4).symmetrize_first_two();
            let s2 = random_tensor(&mut rng, 4).symmetrize_first_two();
            assert!(cyclic_del(&sk(&s1)).is_zero());
            assert_eq!(sk(&(&s1 + &s2)), &sk(&s1) + &sk(&s2));
        }
    }

    #[test]
    fn endomorphism_round_trip_and_realification() {
        let space = QuadraticSpace::split_model(1);
        let basis = space.so_basis::<Rational>();
        let t = ThreeTensor::from_endomorphisms(&space, &basis);
        assert!(t.is_skew_last_two());
        assert_eq!(t.to_endomorphisms(&space), basis);
        assert_eq!(t.complexify().re(), t);
        assert!(t.complexify().im().is_zero());
    }
}
