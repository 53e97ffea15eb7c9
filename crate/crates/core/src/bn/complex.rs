//! Complexified sections `re + i·im` and the complex-bilinear extensions of
//! the bracket and the pairing.

use crate::courant::{GeneralizedSection, OddExactAlgebroid};
use crate::symbolic::Polynomial;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexSection {
    pub re: GeneralizedSection,
    pub im: GeneralizedSection,
}

impl ComplexSection {
    pub fn new(re: GeneralizedSection, im: GeneralizedSection) -> Self {
        assert_eq!(re.rank(), im.rank(), "real and imaginary parts differ in rank");
        ComplexSection { re, im }
    }

    pub fn real(re: GeneralizedSection) -> Self {
        let im = GeneralizedSection::zero(re.base_dim());
        ComplexSection { re, im }
    }

    pub fn conj(&self) -> Self {
        ComplexSection {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

pub fn complex_bracket(alg: &OddExactAlgebroid, a: &ComplexSection, b: &ComplexSection) -> ComplexSection {
    ComplexSection {
        re: &alg.bracket(&a.re, &b.re) - &alg.bracket(&a.im, &b.im),
        im: &alg.bracket(&a.re, &b.im) + &alg.bracket(&a.im, &b.re),
    }
}

/// `(Re, Im)` of the complex-bilinear pairing.
pub fn complex_pair(alg: &OddExactAlgebroid, a: &ComplexSection, b: &ComplexSection) -> (Polynomial, Polynomial) {
    (
        &alg.pair(&a.re, &b.re) - &alg.pair(&a.im, &b.im),
        &alg.pair(&a.re, &b.im) + &alg.pair(&a.im, &b.re),
    )
}
