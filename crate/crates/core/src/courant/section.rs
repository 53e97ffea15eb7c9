use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use rand::Rng;

use crate::symbolic::random::random_polynomial;
use crate::symbolic::{DifferentialForm, PolyMatrix, Polynomial, Ring, VectorField};

/// A section `X + f + ξ` of `TM ⊕ R ⊕ T*M`, stored by its components in the
/// frame `(∂_1..∂_d, e, dx_1..dx_d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedSection {
    comps: Vec<Polynomial>,
}

impl GeneralizedSection {
    /// Components in frame order; the length must be odd.
    pub fn new(comps: Vec<Polynomial>) -> Self {
        assert!(comps.len() % 2 == 1, "frame length must be 2d+1");
        GeneralizedSection { comps }
    }

    pub fn zero(d: usize) -> Self {
        Self::new(vec![Polynomial::zero(); 2 * d + 1])
    }

    /// The `i`-th frame section.
    pub fn frame(d: usize, i: usize) -> Self {
        let mut s = Self::zero(d);
        s.comps[i] = Polynomial::from_i64(1);
        s
    }

    pub fn from_parts(x: &VectorField, f: &Polynomial, xi: &DifferentialForm) -> Self {
        let d = x.dim();
        let mut comps = x.components().to_vec();
        comps.push(f.clone());
        comps.extend((0..d).map(|i| xi.coefficient(&[i])));
        Self::new(comps)
    }

    /// Random section with components of degree at most `degree` in `d`
    /// variables.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, d: usize, degree: u32) -> Self {
        Self::new((0..2 * d + 1).map(|_| random_polynomial(rng, d, degree, 3)).collect())
    }

    pub fn base_dim(&self) -> usize {
        self.comps.len() / 2
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    /// Anchor `π(X + f + ξ) = X`.
    pub fn anchor(&self) -> VectorField {
        VectorField::new(self.comps[..self.base_dim()].to_vec())
    }

    pub fn scalar_part(&self) -> &Polynomial {
        &self.comps[self.base_dim()]
    }

    pub fn form_part(&self) -> DifferentialForm {
        DifferentialForm::one_form(&self.comps[self.base_dim() + 1..])
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        Self::new(self.comps.iter().map(|c| c * f).collect())
    }

    /// Image under an endomorphism field.
    pub fn transform(&self, a: &PolyMatrix) -> Self {
        Self::new(a.apply(&self.comps))
    }

    /// Componentwise directional derivative along a vector field.
    pub fn differentiate(&self, x: &VectorField) -> Self {
        Self::new(self.comps.iter().map(|c| x.apply(c)).collect())
    }

    /// Componentwise partial derivative `∂/∂x_{i+1}`.
    pub fn partial(&self, i: usize) -> Self {
        Self::new(self.comps.iter().map(|c| c.derivative(i)).collect())
    }

    /// First nonzero component, for witnesses.
    pub fn first_nonzero(&self) -> Option<(usize, &Polynomial)> {
        self.comps.iter().enumerate().find(|(_, c)| !c.is_zero())
    }
}

impl Add for &GeneralizedSection {
    type Output = GeneralizedSection;

    fn add(self, rhs: &GeneralizedSection) -> GeneralizedSection {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        GeneralizedSection::new(self.comps.iter().zip(&rhs.comps).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &GeneralizedSection {
    type Output = GeneralizedSection;

    fn sub(self, rhs: &GeneralizedSection) -> GeneralizedSection {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        GeneralizedSection::new(self.comps.iter().zip(&rhs.comps).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &GeneralizedSection {
    type Output = GeneralizedSection;

    fn neg(self) -> GeneralizedSection {
        GeneralizedSection::new(self.comps.iter().map(|a| -a).collect())
    }
}

/// Matrix whose `j`-th column is the given section.
pub fn columns_to_matrix(cols: &[GeneralizedSection]) -> PolyMatrix {
    let n = cols.first().map_or(0, GeneralizedSection::rank);
    PolyMatrix::from_fn(n, cols.len(), |i, j| cols[j].comps[i].clone())
}

/// The `j`-th column of an endomorphism field as a section.
pub fn column_section(a: &PolyMatrix, j: usize) -> GeneralizedSection {
    GeneralizedSection::new(a.column(j))
}
