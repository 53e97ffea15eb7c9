//! Stabilizer subalgebras of `so(V)` and their generalized first
//! prolongations `h^⟨1⟩ = { α ∈ V*⊗h : ∂α = 0 }`.

use num_traits::Zero;

use super::space::{lift, QuadraticError, QuadraticSpace};
use super::tensor::{cyclic_del, sk, ThreeTensor};
use crate::symbolic::linalg::{in_span, linear_kernel, span_rank};
use crate::symbolic::scalar::imag_unit;
use crate::symbolic::{Field, GaussianRational, Matrix, Rational, Ring};

/// A tensor whose stabilizer is taken.
#[derive(Clone, Debug)]
pub enum StructureTensor<K> {
    /// `[A, T] = 0`.
    Endomorphism(Matrix<K>),
    /// `A v = 0`.
    Vector(Vec<K>),
    /// `A T = 0`: the algebra acts trivially on the image of `T`.
    Kills(Matrix<K>),
}

/// Basis of `{ A ∈ so(V) : A·T = 0 for all T }`.
pub fn stabilizer_algebra<K: Field>(space: &QuadraticSpace, tensors: &[StructureTensor<K>]) -> Vec<Matrix<K>> {
    let so = space.so_basis::<K>();
    let mut equations: Vec<Vec<K>> = Vec::new();
    let images: Vec<Vec<K>> = so
        .iter()
        .map(|b| {
            let mut out = Vec::new();
            for t in tensors {
                match t {
                    StructureTensor::Endomorphism(m) => {
                        let c = b.commutator(m);
                        for i in 0..c.rows() {
                            out.extend_from_slice(c.row(i));
                        }
                    }
                    StructureTensor::Vector(v) => out.extend(b.apply(v)),
                    StructureTensor::Kills(m) => {
                        let c = b * m;
                        for i in 0..c.rows() {
                            out.extend_from_slice(c.row(i));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let neq = images.first().map_or(0, Vec::len);
    for e in 0..neq {
        equations.push(images.iter().map(|img| img[e].clone()).collect());
    }
    if neq == 0 {
        return so;
    }
    let m = Matrix::from_rows(equations);
    linear_kernel(&m)
        .into_iter()
        .map(|c| {
            let mut acc = Matrix::zeros(space.dim(), space.dim());
            for (coef, b) in c.iter().zip(&so) {
                if !coef.is_zero() {
                    acc = &acc + &b.scale_by(coef);
                }
            }
            acc
        })
        .collect()
}

/// Exact basis of a generalized first prolongation.
#[derive(Clone, Debug)]
pub struct ProlongationSpace<K> {
    pub algebra: Vec<Matrix<K>>,
    pub basis: Vec<ThreeTensor<K>>,
}

impl<K: Field> ProlongationSpace<K> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn flatten(basis: &[ThreeTensor<K>]) -> Vec<Vec<K>> {
        basis.iter().map(|t| t.components().to_vec()).collect()
    }

    pub fn contains(&self, t: &ThreeTensor<K>) -> bool {
        in_span(&Self::flatten(&self.basis), t.components())
    }

    /// Rank of the basis; equals the dimension for a valid space.
    pub fn rank(&self) -> usize {
        span_rank(&Self::flatten(&self.basis))
    }

    /// Check every defining property: `∂α = 0`, each `α(e_a, ·, ·)` lies in
    /// the algebra, and the basis is independent.
    pub fn verify(&self, space: &QuadraticSpace) -> bool {
        let algebra_forms: Vec<Vec<K>> = self
            .algebra
            .iter()
            .map(|a| space.bilinear_form(a))
            .map(|m| (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect())
            .collect();
        self.rank() == self.dimension()
            && self.basis.iter().all(|alpha| {
                cyclic_del(alpha).is_zero()
                    && (0..alpha.dim()).all(|a| {
                        let s = alpha.slice(a);
                        let flat: Vec<K> = (0..s.rows()).flat_map(|i| s.row(i).to_vec()).collect();
                        in_span(&algebra_forms, &flat)
                    })
            })
    }
}

/// `{ α ∈ V*⊗h : ∂α = 0 }` by a linear solve over the basis `e^a ⊗ h_k`.
pub fn generalized_first_prolongation<K: Field>(space: &QuadraticSpace, h: &[Matrix<K>]) -> ProlongationSpace<K> {
    let n = space.dim();
    let forms: Vec<Matrix<K>> = h.iter().map(|a| space.bilinear_form(a)).collect();
    let unknowns = n * forms.len();
    let column = |a: usize, k: usize| a * forms.len() + k;
    let mut rows = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                // (∂α)_xyz with α_abc = Σ c_{a,k} (h_k)_bc
                let mut row = vec![K::zero(); unknowns];
                for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                    for (k, f) in forms.iter().enumerate() {
                        row[column(a, k)] = row[column(a, k)].clone() + f[(b, c)].clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                (0..unknowns)
                    .map(|j| if i == j { K::one() } else { K::zero() })
                    .collect()
            })
            .collect()
    } else {
        linear_kernel(&Matrix::from_rows(rows))
    };
    let basis = kernel
        .into_iter()
        .map(|c| {
            ThreeTensor::from_fn(n, |a, b, cc| {
                let mut acc = K::zero();
                for (k, f) in forms.iter().enumerate() {
                    let coef = &c[column(a, k)];
                    if !coef.is_zero() {
                        acc = acc + coef.clone() * f[(b, cc)].clone();
                    }
                }
                acc
            })
        })
        .collect();
    ProlongationSpace {
        algebra: h.to_vec(),
        basis,
    }
}

/// `n²(n+1)`, the real dimension of `S²Cⁿ ⊗ Cⁿ`.
pub fn expected_u_prolongation_dim(n: usize) -> usize {
    n * n * (n + 1)
}

/// The `i`-eigenspace of a real endomorphism, over the Gaussian rationals.
pub fn i_eigenspace(f: &Matrix<Rational>) -> Vec<Vec<GaussianRational>> {
    let fc: Matrix<GaussianRational> = lift(f);
    let shifted = &fc - &Matrix::identity(f.rows()).scale_by(&imag_unit());
    linear_kernel(&shifted)
}

/// Real spanning set of `u^⟨1⟩` from an isotropic `i`-eigenspace `V_F`:
/// `Re sk σ` and `Re sk(iσ)` for `σ = φ_j⊗φ_k⊗φ̄_l + φ_k⊗φ_j⊗φ̄_l`, where
/// `φ_j = ⟨ℓ̄_j, ·⟩` runs over the dual basis of `V_F`.
pub fn u_prolongation_spanning_set(
    space: &QuadraticSpace,
    v_f: &[Vec<GaussianRational>],
) -> Result<Vec<ThreeTensor<Rational>>, QuadraticError> {
    for v in v_f {
        if v.len() != space.dim() {
            return Err(QuadraticError::Dimension {
                expected: space.dim(),
                got: v.len(),
            });
        }
    }
    for a in v_f {
        for b in v_f {
            if !space.pairing(a, b).is_zero() {
                return Err(QuadraticError::NotIsotropic);
            }
        }
    }
    let conj = |v: &[GaussianRational]| -> Vec<GaussianRational> { v.iter().map(Field::conj).collect() };
    let phi: Vec<Vec<GaussianRational>> = v_f.iter().map(|l| space.flat(&conj(l))).collect();
    let phi_bar: Vec<Vec<GaussianRational>> = v_f.iter().map(|l| space.flat(l)).collect();
    let mut out = Vec::new();
    for j in 0..v_f.len() {
        for k in j..v_f.len() {
            for l in 0..v_f.len() {
                let sigma = &ThreeTensor::outer(&phi[j], &phi[k], &phi_bar[l])
                    + &ThreeTensor::outer(&phi[k], &phi[j], &phi_bar[l]);
                let eta = sk(&sigma);
                out.push(eta.re());
                out.push(eta.scale_by(&imag_unit()).re());
            }
        }
    }
    Ok(out)
}

/// Structure tensors of a model `B_n`-type vector space.
#[derive(Clone, Debug)]
pub struct ModelSpace {
    pub space: QuadraticSpace,
    pub f: Matrix<Rational>,
    pub u0: Option<Vec<Rational>>,
    pub g_end: Option<Matrix<Rational>>,
    /// Index ranges of the complex blocks, in order.
    pub blocks: Vec<std::ops::Range<usize>>,
}

impl ModelSpace {
    /// Blocks `R^{2k_i, 2l_i}` with `F = J` on consecutive pairs, optionally
    /// followed by a definite line with the given sign. With `with_g`, block
    /// `i` is the `(-1)^i` eigenspace of `G^end` and the line has eigenvalue
    /// equal to its sign.
    fn build(blocks: &[(usize, usize)], line: Option<i64>, with_g: bool) -> Result<Self, QuadraticError> {
        let mut diag = Vec::new();
        let mut gdiag = Vec::new();
        let mut ranges = Vec::new();
        for (i, &(k, l)) in blocks.iter().enumerate() {
            let start = diag.len();
            diag.extend(std::iter::repeat_n(1, 2 * k));
            diag.extend(std::iter::repeat_n(-1, 2 * l));
            let g = if i % 2 == 0 { 1 } else { -1 };
            gdiag.extend(std::iter::repeat_n(g, 2 * (k + l)));
            ranges.push(start..diag.len());
        }
        let even = diag.len();
        if let Some(s) = line {
            diag.push(s);
            gdiag.push(s);
        }
        let n = diag.len();
        let space = QuadraticSpace::diagonal(&diag)?;
        let f = Matrix::from_fn(n, n, |i, j| {
            if i >= even || j >= even {
                Rational::zero()
            } else if j % 2 == 0 && i == j + 1 {
                Rational::from_i64(1)
            } else if j % 2 == 1 && i + 1 == j {
                Rational::from_i64(-1)
            } else {
                Rational::zero()
            }
        });
        let u0 = line.map(|_| (0..n).map(|i| Rational::from_i64((i == even) as i64)).collect());
        let g_end = with_g.then(|| {
            Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    Rational::from_i64(gdiag[i])
                } else {
                    Rational::zero()
                }
            })
        });
        Ok(ModelSpace {
            space,
            f,
            u0,
            g_end,
            blocks: ranges,
        })
    }

    /// `V = R^{2m₁,2m₂} ⊕ R` with the line positive for even `n = m₁+m₂`
    /// and negative for odd `n`.
    pub fn unitary(m1: usize, m2: usize) -> Self {
        let n = m1 + m2;
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        Self::build(&[(m1, m2)], Some(sign), false).unwrap_or_else(|e| panic!("unitary model: {e}"))
    }

    /// `V = V₊ ⊕ V₋ ⊕ R = R^{2k₁,2l₁} ⊕ R^{2k₂,2l₂} ⊕ R`, requiring
    /// `(k₁+k₂, l₁+l₂) = (m, m)` for `n = 2m` and `(m+1, m)` for `n = 2m+1`.
    pub fn kahler(s1: (usize, usize), s2: (usize, usize)) -> Result<Self, QuadraticError> {
        let n = s1.0 + s1.1 + s2.0 + s2.1;
        let m = n / 2;
        let expected = if n.is_multiple_of(2) { (m, m) } else { (m + 1, m) };
        let got = (s1.0 + s2.0, s1.1 + s2.1);
        if n == 0 || got != expected {
            return Err(QuadraticError::InconsistentSplit(format!(
                "(k1+k2, l1+l2) = {got:?}, expected {expected:?} for n = {n}"
            )));
        }
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        Self::build(&[s1, s2], Some(sign), true)
    }

    /// Even-rank space `R^{2k,2l}` with a complex structure.
    pub fn even_unitary(k: usize, l: usize) -> Self {
        Self::build(&[(k, l)], None, false).unwrap_or_else(|e| panic!("even model: {e}"))
    }

    /// Even-rank `E₊ ⊕ E₋ = R^{2k₊,2l₊} ⊕ R^{2k₋,2l₋}` with `G` and `F`.
    pub fn even_kahler(plus: (usize, usize), minus: (usize, usize)) -> Self {
        Self::build(&[plus, minus], None, true).unwrap_or_else(|e| panic!("even model: {e}"))
    }

    pub fn structure_tensors(&self) -> Vec<StructureTensor<Rational>> {
        let mut out = vec![StructureTensor::Endomorphism(self.f.clone())];
        if let Some(u0) = &self.u0 {
            out.push(StructureTensor::Vector(u0.clone()));
        }
        if let Some(g) = &self.g_end {
            out.push(StructureTensor::Endomorphism(g.clone()));
        }
        out
    }

    /// Projection onto block `i` along the other summands.
    pub fn block_projection(&self, i: usize) -> Matrix<Rational> {
        let n = self.space.dim();
        let r = &self.blocks[i];
        Matrix::from_fn(n, n, |a, b| Rational::from_i64((a == b && r.contains(&a)) as i64))
    }

    /// The stabilizer algebra of `F`, `u₀` and (if present) `G`.
    pub fn algebra(&self) -> Vec<Matrix<Rational>> {
        stabilizer_algebra(&self.space, &self.structure_tensors())
    }

    /// The factor of the stabilizer acting on block `i` only.
    pub fn block_algebra(&self, i: usize) -> Vec<Matrix<Rational>> {
        let mut tensors = self.structure_tensors();
        let n = self.space.dim();
        let other = &Matrix::identity(n) - &self.block_projection(i);
        tensors.push(StructureTensor::Kills(other));
        stabilizer_algebra(&self.space, &tensors)
    }

    /// Basis of the `i`-eigenspace of `F` on block `i`.
    pub fn block_eigenspace(&self, i: usize) -> Vec<Vec<GaussianRational>> {
        let p = self.block_projection(i);
        i_eigenspace(&(&self.f * &p))
    }
}

/// `u(m₁,m₂)^⟨1⟩` on the unitary model space.
pub fn u_prolongation(m1: usize, m2: usize) -> (ModelSpace, ProlongationSpace<Rational>) {
    let model = ModelSpace::unitary(m1, m2);
    let h = model.algebra();
    let p = generalized_first_prolongation(&model.space, &h);
    (model, p)
}

/// Prolongation of `u(k₁,l₁) ⊕ u(k₂,l₂)` together with the prolongations of
/// each summand, embedded in `so(V)`.
#[derive(Clone, Debug)]
pub struct KahlerProlongation {
    pub model: ModelSpace,
    pub total: ProlongationSpace<Rational>,
    pub factors: [ProlongationSpace<Rational>; 2],
}

impl KahlerProlongation {
    pub fn expected_dimension(&self) -> usize {
        self.model
            .blocks
            .iter()
            .map(|r| expected_u_prolongation_dim(r.len() / 2))
            .sum()
    }

    /// `h^⟨1⟩ = u₁^⟨1⟩ ⊕ u₂^⟨1⟩`: the summands are independent and together
    /// span the total space.
    pub fn is_direct_sum(&self) -> bool {
        let mut union: Vec<Vec<Rational>> = Vec::new();
        for f in &self.factors {
            union.extend(f.basis.iter().map(|t| t.components().to_vec()));
        }
        let total: Vec<Vec<Rational>> = self.total.basis.iter().map(|t| t.components().to_vec()).collect();
        let r_union = span_rank(&union);
        let mut both = union.clone();
        both.extend(total.iter().cloned());
        r_union == self.factors[0].dimension() + self.factors[1].dimension()
            && r_union == self.total.dimension()
            && span_rank(&both) == r_union
    }
}

pub fn kahler_prolongation(s1: (usize, usize), s2: (usize, usize)) -> Result<KahlerProlongation, QuadraticError> {
    let model = ModelSpace::kahler(s1, s2)?;
    Ok(kahler_from_model(model))
}

fn kahler_from_model(model: ModelSpace) -> KahlerProlongation {
    let total = generalized_first_prolongation(&model.space, &model.algebra());
    let factors = [0, 1].map(|i| generalized_first_prolongation(&model.space, &model.block_algebra(i)));
    KahlerProlongation { model, total, factors }
}

/// `u(k,l)^⟨1⟩` on an even-rank space `R^{2k,2l}`.
pub fn even_rank_u_prolongation(k: usize, l: usize) -> ProlongationSpace<Rational> {
    let model = ModelSpace::even_unitary(k, l);
    generalized_first_prolongation(&model.space, &model.algebra())
}

/// `(u(E₊) ⊕ u(E₋))^⟨1⟩` on an even-rank space with a generalized metric.
pub fn even_rank_kahler_prolongation(plus: (usize, usize), minus: (usize, usize)) -> KahlerProlongation {
    kahler_from_model(ModelSpace::even_kahler(plus, minus))
}

/// All `(m₁, m₂)` with `m₁ + m₂ = n`.
pub fn unitary_splits(n: usize) -> Vec<(usize, usize)> {
    (0..=n).map(|m1| (m1, n - m1)).collect()
}

/// All pairs of splits consistent with `V = R^{n+1,n}`.
pub fn kahler_splits(n: usize) -> Vec<((usize, usize), (usize, usize))> {
    let m = n / 2;
    let (kt, lt) = if n.is_multiple_of(2) { (m, m) } else { (m + 1, m) };
    let mut out = Vec::new();
    for k1 in 0..=kt {
        for l1 in 0..=lt {
            out.push(((k1, l1), (kt - k1, lt - l1)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::scalar::qi;

    #[test]
    fn full_algebra_without_tensors() {
        let space = QuadraticSpace::diagonal(&[1, 1, -1]).unwrap();
        assert_eq!(stabilizer_algebra::<Rational>(&space, &[]).len(), 3);
    }

    #[test]
    fn n1_stabilizer_is_u1() {
        let model = ModelSpace::unitary(1, 0);
        assert_eq!(model.space.signature(), (2, 1));
        assert_eq!(model.algebra().len(), 1);
    }

    #[test]
    fn kahler_n2_stabilizer() {
        let model = ModelSpace::kahler((1, 0), (0, 1)).unwrap();
        assert_eq!(model.space.signature(), (3, 2));
        assert_eq!(model.algebra().len(), 2);
        assert!(ModelSpace::kahler((1, 0), (1, 0)).is_err());
    }

    #[test]
    fn so3_prolongation() {
        let space = QuadraticSpace::diagonal(&[1, 1, -1]).unwrap();
        let p = generalized_first_prolongation(&space, &space.so_basis::<Rational>());
        assert_eq!(p.dimension(), 8);
        assert!(p.verify(&space));
    }

    #[test]
    fn small_u_prolongations() {
        for n in 1..=2 {
            for (m1, m2) in unitary_splits(n) {
                let (model, p) = u_prolongation(m1, m2);
                assert_eq!(p.dimension(), expected_u_prolongation_dim(n), "split ({m1},{m2})");
                assert!(p.verify(&model.space));
            }
        }
    }

    #[test]
    fn spanning_set_matches_kernel() {
        for (m1, m2) in [(1, 0), (1, 1), (0, 2)] {
            let (model, p) = u_prolongation(m1, m2);
            let v_f = i_eigenspace(&model.f);
            assert_eq!(v_f.len(), m1 + m2);
            let gens = u_prolongation_spanning_set(&model.space, &v_f).unwrap();
            for g in &gens {
                assert!(cyclic_del(g).is_zero());
                assert!(p.contains(g));
            }
            let flat: Vec<_> = gens.iter().map(|t| t.components().to_vec()).collect();
            assert_eq!(span_rank(&flat), p.dimension());
        }
    }

    #[test]
    fn non_isotropic_input_rejected() {
        let model = ModelSpace::unitary(1, 0);
        let v = vec![GaussianRational::from(qi(1)); 3];
        assert_eq!(
            u_prolongation_spanning_set(&model.space, &[v]),
            Err(QuadraticError::NotIsotropic)
        );
    }

    #[test]
    fn kahler_direct_sum() {
        let k = kahler_prolongation((1, 0), (0, 1)).unwrap();
        assert_eq!(k.total.dimension(), 4);
        assert_eq!(k.expected_dimension(), 4);
        assert!(k.is_direct_sum());
    }

    #[test]
    fn trivial_summand() {
        let k = kahler_prolongation((0, 0), (1, 1)).unwrap();
        let (_, single) = u_prolongation(1, 1);
        assert_eq!(k.total.dimension(), single.dimension());
        assert!(k.is_direct_sum());
    }

    #[test]
    fn even_rank_dimensions() {
        assert_eq!(even_rank_u_prolongation(1, 1).dimension(), 12);
        let k = even_rank_kahler_prolongation((1, 0), (0, 1));
        assert_eq!(k.total.dimension(), 4);
        assert!(k.is_direct_sum());
    }
}
