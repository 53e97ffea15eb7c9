use num_traits::Zero;
use thiserror::Error;

use super::constants;
use super::section::GeneralizedSection;
use crate::quadratic::QuadraticSpace;
use crate::symbolic::scalar::q;
use crate::symbolic::{DifferentialForm, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebroidError {
    #[error("twist {name} must be a {expected}-form on R^{dim}")]
    TwistShape {
        name: &'static str,
        expected: usize,
        dim: usize,
    },
    #[error("section of rank {got} in an algebroid of rank {expected}")]
    Rank { expected: usize, got: usize },
}

/// Coefficients of the twisted split-model Dorfman bracket, see
/// [`OddExactAlgebroid::dorfman`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketConstants {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl BracketConstants {
    pub const PINNED: BracketConstants = BracketConstants {
        c1: constants::C1,
        c2: constants::C2,
        c3: constants::C3,
    };
}

/// The odd exact Courant algebroid `TM ⊕ R ⊕ T*M` over `R^d`, twisted by a
/// 2-form `F₂` and a 3-form `H₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct OddExactAlgebroid {
    d: usize,
    f2: DifferentialForm,
    h3: DifferentialForm,
    constants: BracketConstants,
    space: QuadraticSpace,
}

impl OddExactAlgebroid {
    pub fn untwisted(d: usize) -> Self {
        OddExactAlgebroid {
            d,
            f2: DifferentialForm::zero(d, 2),
            h3: DifferentialForm::zero(d, 3),
            constants: BracketConstants::PINNED,
            space: QuadraticSpace::split_model(d),
        }
    }

    /// Twisted model. The closure conditions are not enforced here; see
    /// [`twist_residuals`](Self::twist_residuals).
    pub fn twisted(d: usize, f2: DifferentialForm, h3: DifferentialForm) -> Result<Self, AlgebroidError> {
        if f2.dim() != d || f2.degree() != 2 {
            return Err(AlgebroidError::TwistShape {
                name: "F2",
                expected: 2,
                dim: d,
            });
        }
        if h3.dim() != d || h3.degree() != 3 {
            return Err(AlgebroidError::TwistShape {
                name: "H3",
                expected: 3,
                dim: d,
            });
        }
        Ok(OddExactAlgebroid {
            f2,
            h3,
            ..Self::untwisted(d)
        })
    }

    /// Same twist with different bracket coefficients.
    pub fn with_constants(mut self, constants: BracketConstants) -> Self {
        self.constants = constants;
        self
    }

    pub fn base_dim(&self) -> usize {
        self.d
    }

    /// Rank `2d + 1`.
    pub fn rank(&self) -> usize {
        2 * self.d + 1
    }

    pub fn f2(&self) -> &DifferentialForm {
        &self.f2
    }

    pub fn h3(&self) -> &DifferentialForm {
        &self.h3
    }

    pub fn constants(&self) -> BracketConstants {
        self.constants
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn is_untwisted(&self) -> bool {
        self.f2.is_zero() && self.h3.is_zero()
    }

    /// `(dF₂, dH₃ − κ F₂∧F₂)`; both vanish for a valid twist.
    pub fn twist_residuals(&self) -> (DifferentialForm, DifferentialForm) {
        let kappa = q(constants::KAPPA.0, constants::KAPPA.1);
        let ff = self
            .f2
            .wedge(&self.f2)
            .unwrap_or_else(|_| unreachable!("same dimension"));
        let dh = self.h3.exterior_derivative();
        let resid = dh
            .sub(&ff.scale(&Polynomial::constant(kappa)))
            .unwrap_or_else(|_| unreachable!("same degree"));
        (self.f2.exterior_derivative(), resid)
    }

    pub fn twist_is_closed(&self) -> bool {
        let (a, b) = self.twist_residuals();
        a.is_zero() && b.is_zero()
    }

    pub fn frame(&self, i: usize) -> GeneralizedSection {
        GeneralizedSection::frame(self.d, i)
    }

    pub fn frame_sections(&self) -> Vec<GeneralizedSection> {
        (0..self.rank()).map(|i| self.frame(i)).collect()
    }

    fn check(&self, u: &GeneralizedSection) -> Result<(), AlgebroidError> {
        if u.rank() == self.rank() {
            Ok(())
        } else {
            Err(AlgebroidError::Rank {
                expected: self.rank(),
                got: u.rank(),
            })
        }
    }

    /// `⟨X+f+ξ, Y+g+η⟩ = ½(η(X) + ξ(Y)) + fg`.
    pub fn pairing(&self, u: &GeneralizedSection, v: &GeneralizedSection) -> Result<Polynomial, AlgebroidError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.pair(u, v))
    }

    /// `pairing` for sections already known to have the right rank.
    pub fn pair(&self, u: &GeneralizedSection, v: &GeneralizedSection) -> Polynomial {
        let d = self.d;
        let half = Rational::new(1.into(), 2.into());
        let mut acc = u.component(d) * v.component(d);
        let mut cross = Polynomial::zero();
        for i in 0..d {
            cross = &cross + &(u.component(i) * v.component(d + 1 + i));
            cross = &cross + &(v.component(i) * u.component(d + 1 + i));
        }
        acc = &acc + &cross.scaled(&half);
        acc
    }

    /// Twisted Dorfman bracket
    /// `[X+f+ξ, Y+g+η] = [X,Y] + (X(g) − Y(f) + c₁F₂(X,Y))
    ///   + (L_Xη − ι_Y dξ + 2g df + ι_Yι_X H₃ + c₂ g ι_X F₂ + c₃ f ι_Y F₂)`.
    pub fn dorfman(
        &self,
        u: &GeneralizedSection,
        v: &GeneralizedSection,
    ) -> Result<GeneralizedSection, AlgebroidError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.bracket(u, v))
    }

    /// `dorfman` for sections already known to have the right rank.
    pub fn bracket(&self, u: &GeneralizedSection, v: &GeneralizedSection) -> GeneralizedSection {
        let d = self.d;
        let c = self.constants;
        let (x, f, xi) = (u.anchor(), u.scalar_part(), u.form_part());
        let (y, g, eta) = (v.anchor(), v.scalar_part(), v.form_part());
        // every form below lives on R^d, so the calculus cannot fail
        let ok = |r: Result<DifferentialForm, _>| r.unwrap_or_else(|_| unreachable!());

        let vector = x.lie_bracket(&y).unwrap_or_else(|_| unreachable!());

        let mut scalar = &x.apply(g) - &y.apply(f);
        let f2_xy = ok(ok(self.f2.interior(&x)).interior(&y)).as_function();
        if c.c1 != 0 && !f2_xy.is_zero() {
            scalar = &scalar + &f2_xy.scaled(&Rational::from_i64(c.c1));
        }

        let mut form = ok(eta.lie_derivative(&x));
        form = ok(form.sub(&ok(xi.exterior_derivative().interior(&y))));
        let df = DifferentialForm::differential(d, f);
        form = ok(form.add(&df.scale(&g.scaled(&Rational::from_i64(2)))));
        if !self.h3.is_zero() {
            form = ok(form.add(&ok(ok(self.h3.interior(&x)).interior(&y))));
        }
        if !self.f2.is_zero() {
            if c.c2 != 0 && !g.is_zero() {
                let t = ok(self.f2.interior(&x)).scale(&g.scaled(&Rational::from_i64(c.c2)));
                form = ok(form.add(&t));
            }
            if c.c3 != 0 && !f.is_zero() {
                let t = ok(self.f2.interior(&y)).scale(&f.scaled(&Rational::from_i64(c.c3)));
                form = ok(form.add(&t));
            }
        }
        GeneralizedSection::from_parts(&vector, &scalar, &form)
    }
}
