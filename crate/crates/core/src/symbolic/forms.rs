//! Polynomial vector fields and differential forms on a coordinate patch
//! `R^d`, with the Cartan calculus needed by the split-model bracket.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use super::poly::Polynomial;
use super::scalar::{Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("form degree {degree} exceeds dimension {dim}")]
    Degree { degree: usize, dim: usize },
    #[error("index {index} out of range for dimension {dim}")]
    Index { index: usize, dim: usize },
    #[error("repeated index in {0:?}")]
    RepeatedIndex(Vec<usize>),
}

fn check_dims(a: usize, b: usize) -> Result<(), CalculusError> {
    if a == b {
        Ok(())
    } else {
        Err(CalculusError::Dimension(a, b))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VectorField {
    comps: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(comps: Vec<Polynomial>) -> Self {
        VectorField { comps }
    }

    pub fn zero(dim: usize) -> Self {
        VectorField {
            comps: vec![Polynomial::zero(); dim],
        }
    }

    /// The coordinate field `∂_{i+1}`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.comps[i] = Polynomial::from_i64(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }

    /// Directional derivative `X(f)`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (i, xi) in self.comps.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let df = f.derivative(i);
            if !df.is_zero() {
                acc = &acc + &(xi * &df);
            }
        }
        acc
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField, CalculusError> {
        check_dims(self.dim(), other.dim())?;
        Ok(VectorField::new(
            self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField, CalculusError> {
        check_dims(self.dim(), other.dim())?;
        Ok(VectorField::new(
            self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, f: &Polynomial) -> VectorField {
        VectorField::new(self.comps.iter().map(|c| c * f).collect())
    }

    /// Lie bracket `[X, Y]^j = X(Y^j) - Y(X^j)`.
    pub fn lie_bracket(&self, other: &VectorField) -> Result<VectorField, CalculusError> {
        check_dims(self.dim(), other.dim())?;
        Ok(VectorField::new(
            (0..self.dim())
                .map(|j| &self.apply(&other.comps[j]) - &other.apply(&self.comps[j]))
                .collect(),
        ))
    }
}

/// A `k`-form `Σ ω_I dx_I` stored by strictly increasing index tuples `I`.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferentialForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Polynomial>,
}

/// Sort `idx` in place, returning the permutation sign, or `None` if an index
/// repeats.
fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl DifferentialForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        DifferentialForm {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The function `f` as a 0-form.
    pub fn function(dim: usize, f: Polynomial) -> Self {
        let mut w = Self::zero(dim, 0);
        w.add_term(Vec::new(), f);
        w
    }

    /// `f dx_{i1} ∧ ... ∧ dx_{ik}` for 0-based indices in any order.
    pub fn monomial(dim: usize, indices: &[usize], f: Polynomial) -> Result<Self, CalculusError> {
        if indices.len() > dim {
            return Err(CalculusError::Degree {
                degree: indices.len(),
                dim,
            });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= dim) {
            return Err(CalculusError::Index { index: bad, dim });
        }
        let mut idx = indices.to_vec();
        let sign = sort_with_sign(&mut idx).ok_or_else(|| CalculusError::RepeatedIndex(indices.to_vec()))?;
        let mut w = Self::zero(dim, indices.len());
        w.add_term(idx, f.scaled(&Rational::from_i64(sign)));
        Ok(w)
    }

    /// 1-form with the given components.
    pub fn one_form(comps: &[Polynomial]) -> Self {
        let mut w = Self::zero(comps.len(), 1);
        for (i, c) in comps.iter().enumerate() {
            w.add_term(vec![i], c.clone());
        }
        w
    }

    /// `df` for a function `f`.
    pub fn differential(dim: usize, f: &Polynomial) -> Self {
        let comps: Vec<_> = (0..dim).map(|i| f.derivative(i)).collect();
        Self::one_form(&comps)
    }

    fn add_term(&mut self, idx: Vec<usize>, f: Polynomial) {
        if f.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(f);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &f;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Add `f dx_I` with `I` in arbitrary order; no-op if indices repeat.
    fn add_unsorted(&mut self, idx: &[usize], f: Polynomial) {
        let mut idx = idx.to_vec();
        if let Some(sign) = sort_with_sign(&mut idx) {
            self.add_term(idx, if sign < 0 { -f } else { f });
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.coeffs.iter()
    }

    /// Coefficient of `dx_I` for strictly increasing `I`.
    pub fn coefficient(&self, idx: &[usize]) -> Polynomial {
        self.coeffs.get(idx).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Value on coordinate fields: `ω(∂_{i1}, ..., ∂_{ik})` for any index order.
    pub fn component(&self, idx: &[usize]) -> Polynomial {
        let mut sorted = idx.to_vec();
        match sort_with_sign(&mut sorted) {
            Some(sign) => self.coefficient(&sorted).scaled(&Rational::from_i64(sign)),
            None => Polynomial::zero(),
        }
    }

    /// Components of a 1-form.
    pub fn one_form_components(&self) -> Vec<Polynomial> {
        (0..self.dim).map(|i| self.coefficient(&[i])).collect()
    }

    fn check_same(&self, other: &DifferentialForm) -> Result<(), CalculusError> {
        check_dims(self.dim, other.dim)?;
        if self.degree != other.degree {
            return Err(CalculusError::Dimension(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &DifferentialForm) -> Result<DifferentialForm, CalculusError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DifferentialForm) -> Result<DifferentialForm, CalculusError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DifferentialForm {
        self.scale(&Polynomial::from_i64(-1))
    }

    /// Multiply by a function.
    pub fn scale(&self, f: &Polynomial) -> DifferentialForm {
        let mut out = Self::zero(self.dim, self.degree);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v * f);
        }
        out
    }

    pub fn exterior_derivative(&self) -> DifferentialForm {
        let mut out = Self::zero(self.dim, self.degree + 1);
        if self.degree >= self.dim {
            return out;
        }
        for (idx, f) in &self.coeffs {
            for j in 0..self.dim {
                let df = f.derivative(j);
                if df.is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(idx.len() + 1);
                full.push(j);
                full.extend_from_slice(idx);
                out.add_unsorted(&full, df);
            }
        }
        out
    }

    pub fn wedge(&self, other: &DifferentialForm) -> Result<DifferentialForm, CalculusError> {
        check_dims(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        if self.degree + other.degree > self.dim {
            return Ok(out);
        }
        for (i, f) in &self.coeffs {
            for (j, g) in &other.coeffs {
                let mut full = i.clone();
                full.extend_from_slice(j);
                out.add_unsorted(&full, f * g);
            }
        }
        Ok(out)
    }

    /// Interior product `ι_X ω`; the zero function for 0-forms.
    pub fn interior(&self, x: &VectorField) -> Result<DifferentialForm, CalculusError> {
        check_dims(self.dim, x.dim())?;
        if self.degree == 0 {
            return Ok(Self::zero(self.dim, 0));
        }
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (idx, f) in &self.coeffs {
            for (r, &i) in idx.iter().enumerate() {
                let xi = x.component(i);
                if xi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(r);
                let term = xi * f;
                out.add_term(rest, if r % 2 == 0 { term } else { -term });
            }
        }
        Ok(out)
    }

    /// Lie derivative from the coordinate formula
    /// `L_X(f dx_I) = X(f) dx_I + f Σ_r dx_{i1} ∧ .. ∧ d(X^{i_r}) ∧ .. ∧ dx_{ik}`.
    pub fn lie_derivative(&self, x: &VectorField) -> Result<DifferentialForm, CalculusError> {
        check_dims(self.dim, x.dim())?;
        let mut out = Self::zero(self.dim, self.degree);
        for (idx, f) in &self.coeffs {
            out.add_term(idx.clone(), x.apply(f));
            for r in 0..idx.len() {
                let dxr = x.component(idx[r]);
                for j in 0..self.dim {
                    let c = dxr.derivative(j);
                    if c.is_zero() {
                        continue;
                    }
                    let mut replaced = idx.clone();
                    replaced[r] = j;
                    out.add_unsorted(&replaced, f * &c);
                }
            }
        }
        Ok(out)
    }

    /// As a function, for 0-forms.
    pub fn as_function(&self) -> Polynomial {
        self.coefficient(&[])
    }
}

/// Lie bracket of vector fields.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField, CalculusError> {
    x.lie_bracket(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    #[test]
    fn d_of_x1_dx2() {
        let w = DifferentialForm::monomial(2, &[1], p("x1")).unwrap();
        let dw = w.exterior_derivative();
        assert_eq!(dw, DifferentialForm::monomial(2, &[0, 1], p("1")).unwrap());
    }

    #[test]
    fn contraction_rule() {
        let w = DifferentialForm::monomial(2, &[0, 1], p("1")).unwrap();
        let out = w.interior(&VectorField::coordinate(2, 0)).unwrap();
        assert_eq!(out, DifferentialForm::monomial(2, &[1], p("1")).unwrap());
        let out = w.interior(&VectorField::coordinate(2, 1)).unwrap();
        assert_eq!(out, DifferentialForm::monomial(2, &[0], p("-1")).unwrap());
    }

    #[test]
    fn lie_derivative_of_dx1_along_x2_d1() {
        let x = VectorField::new(vec![p("x2"), p("0")]);
        let w = DifferentialForm::monomial(2, &[0], p("1")).unwrap();
        let lie = w.lie_derivative(&x).unwrap();
        assert_eq!(lie, DifferentialForm::monomial(2, &[1], p("1")).unwrap());
        let cartan = w
            .exterior_derivative()
            .interior(&x)
            .unwrap()
            .add(&w.interior(&x).unwrap().exterior_derivative())
            .unwrap();
        assert_eq!(lie, cartan);
    }

    #[test]
    fn wedge_sign_and_repeats() {
        let a = DifferentialForm::monomial(3, &[0], p("1")).unwrap();
        let b = DifferentialForm::monomial(3, &[1], p("1")).unwrap();
        assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().neg());
        assert!(a.wedge(&a).unwrap().is_zero());
        assert_eq!(
            DifferentialForm::monomial(3, &[2, 0], p("1"))
                .unwrap()
                .component(&[0, 2]),
            p("-1")
        );
    }

    #[test]
    fn mismatches_are_errors() {
        let a = DifferentialForm::monomial(3, &[0], p("1")).unwrap();
        let b = DifferentialForm::monomial(2, &[0], p("1")).unwrap();
        assert_eq!(a.wedge(&b), Err(CalculusError::Dimension(3, 2)));
        assert!(a.add(&a.exterior_derivative()).is_err());
        assert!(DifferentialForm::monomial(2, &[0, 0], p("1")).is_err());
        assert!(DifferentialForm::monomial(2, &[0, 1, 1], p("1")).is_err());
        assert!(a.interior(&VectorField::zero(2)).is_err());
    }

    #[test]
    fn vector_field_bracket() {
        let x = VectorField::new(vec![p("x2"), p("0")]);
        let y = VectorField::new(vec![p("0"), p("x1")]);
        // [x2 ∂1, x1 ∂2] = x2 ∂2 - x1 ∂1
        let b = x.lie_bracket(&y).unwrap();
        assert_eq!(b, VectorField::new(vec![p("-x1"), p("x2")]));
    }

    mod properties {

        use crate::symbolic::random::{random_form, random_vector_field};
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn d_squared_vanishes(seed in any::<u64>(), dim in 1usize..=4, k in 0usize..=3) {
                prop_assume!(k <= dim);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let w = random_form(&mut rng, dim, k, 3);
                prop_assert!(w.exterior_derivative().exterior_derivative().is_zero());
            }

            #[test]
            fn cartan_formula(seed in any::<u64>(), dim in 1usize..=3, k in 0usize..=3) {
                prop_assume!(k <= dim);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let x = random_vector_field(&mut rng, dim, 2);
                let w = random_form(&mut rng, dim, k, 2);
                let lhs = w.lie_derivative(&x).unwrap();
                let mut rhs = w.exterior_derivative().interior(&x).unwrap();
                if k > 0 {
                    rhs = rhs.add(&w.interior(&x).unwrap().exterior_derivative()).unwrap();
                }
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn lie_derivative_is_a_derivation(seed in any::<u64>(), dim in 2usize..=3) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let x = random_vector_field(&mut rng, dim, 2);
                let a = random_form(&mut rng, dim, 1, 2);
                let b = random_form(&mut rng, dim, 1, 1);
                let lhs = a.wedge(&b).unwrap().lie_derivative(&x).unwrap();
                let rhs = a
                    .lie_derivative(&x)
                    .unwrap()
                    .wedge(&b)
                    .unwrap()
                    .add(&a.wedge(&b.lie_derivative(&x).unwrap()).unwrap())
                    .unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn jacobi_identity(seed in any::<u64>(), dim in 1usize..=3) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let x = random_vector_field(&mut rng, dim, 2);
                let y = random_vector_field(&mut rng, dim, 2);
                let z = random_vector_field(&mut rng, dim, 2);
                let t1 = x.lie_bracket(&y.lie_bracket(&z).unwrap()).unwrap();
                let t2 = y.lie_bracket(&z.lie_bracket(&x).unwrap()).unwrap();
                let t3 = z.lie_bracket(&x.lie_bracket(&y).unwrap()).unwrap();
                prop_assert!(t1.add(&t2).unwrap().add(&t3).unwrap().is_zero());
            }
        }
    }
}
