//! Generalized connections `D = D⁰ + η`, where `D⁰` differentiates frame
//! components along the anchor and `η(e_a)` is a skew endomorphism field.

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use super::algebroid::OddExactAlgebroid;
use super::section::{columns_to_matrix, GeneralizedSection};
use crate::quadratic::{QuadraticSpace, ThreeTensor};
use crate::symbolic::{PolyMatrix, Polynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConnectionError {
    #[error("correction in direction {direction} is not skew: residual {residual}")]
    NotSkew { direction: usize, residual: String },
    #[error("expected {expected} correction matrices of size {expected}, got {got}")]
    Shape { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedConnection {
    d: usize,
    eta: Vec<PolyMatrix>,
}

fn check_skew(space: &QuadraticSpace, eta: &[PolyMatrix]) -> Result<(), ConnectionError> {
    let n = space.dim();
    if eta.len() != n || eta.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(ConnectionError::Shape {
            expected: n,
            got: eta.len(),
        });
    }
    for (a, m) in eta.iter().enumerate() {
        let b = space.bilinear_form(m);
        let sym = &b + &b.transpose();
        if let Some((i, j, r)) = sym.first_nonzero() {
            return Err(ConnectionError::NotSkew {
                direction: a,
                residual: format!("⟨η e_{i}, e_{j}⟩ + ⟨e_{i}, η e_{j}⟩ = {r}"),
            });
        }
    }
    Ok(())
}

impl GeneralizedConnection {
    /// The base connection `D⁰` (zero correction).
    pub fn base(alg: &OddExactAlgebroid) -> Self {
        let n = alg.rank();
        GeneralizedConnection {
            d: alg.base_dim(),
            eta: vec![PolyMatrix::zeros(n, n); n],
        }
    }

    /// `D⁰ + η`, where `eta[a]` is `η(e_a)`; each must be skew.
    pub fn new(alg: &OddExactAlgebroid, eta: Vec<PolyMatrix>) -> Result<Self, ConnectionError> {
        check_skew(alg.space(), &eta)?;
        Ok(GeneralizedConnection { d: alg.base_dim(), eta })
    }

    /// `D⁰ + η` from the tensor `η_abc = ⟨η(e_a) e_b, e_c⟩`.
    pub fn from_tensor(alg: &OddExactAlgebroid, t: &ThreeTensor<Polynomial>) -> Result<Self, ConnectionError> {
        Self::new(alg, t.to_endomorphisms(alg.space()))
    }

    pub fn correction(&self) -> &[PolyMatrix] {
        &self.eta
    }

    pub fn correction_tensor(&self, space: &QuadraticSpace) -> ThreeTensor<Polynomial> {
        ThreeTensor::from_endomorphisms(space, &self.eta)
    }

    /// `D + η'`.
    pub fn add_correction(&self, alg: &OddExactAlgebroid, extra: &[PolyMatrix]) -> Result<Self, ConnectionError> {
        check_skew(alg.space(), extra)?;
        Ok(GeneralizedConnection {
            d: self.d,
            eta: self.eta.iter().zip(extra).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn add_tensor(&self, alg: &OddExactAlgebroid, t: &ThreeTensor<Polynomial>) -> Result<Self, ConnectionError> {
        self.add_correction(alg, &t.to_endomorphisms(alg.space()))
    }

    fn rank(&self) -> usize {
        2 * self.d + 1
    }

    /// `η_u = Σ_a u^a η(e_a)`.
    pub fn eta_along(&self, u: &GeneralizedSection) -> PolyMatrix {
        let n = self.rank();
        let mut acc = PolyMatrix::zeros(n, n);
        for (a, m) in self.eta.iter().enumerate() {
            let c = u.component(a);
            if !c.is_zero() {
                acc = &acc + &m.map(|x| x * c);
            }
        }
        acc
    }

    /// `D_u v`.
    pub fn apply(&self, u: &GeneralizedSection, v: &GeneralizedSection) -> GeneralizedSection {
        &v.differentiate(&u.anchor()) + &v.transform(&self.eta_along(u))
    }

    /// `D_{e_a} v`.
    pub fn frame_apply(&self, a: usize, v: &GeneralizedSection) -> GeneralizedSection {
        let flat = if a < self.d {
            v.partial(a)
        } else {
            GeneralizedSection::zero(self.d)
        };
        &flat + &v.transform(&self.eta[a])
    }

    /// The endomorphism `w ↦ D_w v`.
    pub fn derivative_matrix(&self, v: &GeneralizedSection) -> PolyMatrix {
        let cols: Vec<_> = (0..self.rank()).map(|a| self.frame_apply(a, v)).collect();
        columns_to_matrix(&cols)
    }

    /// `D_{e_a} A = ∂_a A + [η(e_a), A]`, with `∂_a = 0` off the tangent part.
    pub fn frame_endo_derivative(&self, a: usize, m: &PolyMatrix) -> PolyMatrix {
        let comm = self.eta[a].commutator(m);
        if a < self.d {
            &m.derivative(a) + &comm
        } else {
            comm
        }
    }

    /// `D_u A`.
    pub fn endo_derivative(&self, u: &GeneralizedSection, m: &PolyMatrix) -> PolyMatrix {
        let n = self.rank();
        let mut acc = PolyMatrix::zeros(n, n);
        for a in 0..n {
            let c = u.component(a);
            if !c.is_zero() {
                acc = &acc + &self.frame_endo_derivative(a, m).map(|x| x * c);
            }
        }
        acc
    }

    /// First frame direction `a` with `D_{e_a} A ≠ 0`, and the entry.
    pub fn endo_residual(&self, m: &PolyMatrix) -> Option<(usize, usize, usize, Polynomial)> {
        (0..self.rank()).find_map(|a| {
            self.frame_endo_derivative(a, m)
                .first_nonzero()
                .map(|(i, j, r)| (a, i, j, r.clone()))
        })
    }

    pub fn preserves_endo(&self, m: &PolyMatrix) -> bool {
        self.endo_residual(m).is_none()
    }

    pub fn preserves_section(&self, v: &GeneralizedSection) -> bool {
        self.derivative_matrix(v).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConnectionAxiomReport {
    pub leibniz: bool,
    pub metricity: bool,
    pub witness: Option<String>,
}

/// Leibniz `D_v(fu) = π(v)(f)u + f D_v u` and metricity
/// `π(w)⟨u,v⟩ = ⟨D_w u, v⟩ + ⟨u, D_w v⟩` on the given samples.
pub fn check_connection_axioms(
    alg: &OddExactAlgebroid,
    conn: &GeneralizedConnection,
    samples: &[super::axioms::AxiomSample],
) -> ConnectionAxiomReport {
    let mut report = ConnectionAxiomReport {
        leibniz: true,
        metricity: true,
        witness: None,
    };
    for (k, s) in samples.iter().enumerate() {
        let lhs = conn.apply(&s.v, &s.u.scale(&s.f));
        let rhs = &s.u.scale(&s.v.anchor().apply(&s.f)) + &conn.apply(&s.v, &s.u).scale(&s.f);
        if let Some((i, r)) = (&lhs - &rhs).first_nonzero() {
            report.leibniz = false;
            report
                .witness
                .get_or_insert(format!("sample {k}: Leibniz residual component {i} = {r}"));
        }
        let lhs = s.w.anchor().apply(&alg.pair(&s.u, &s.v));
        let rhs = &alg.pair(&conn.apply(&s.w, &s.u), &s.v) + &alg.pair(&s.u, &conn.apply(&s.w, &s.v));
        let r = &lhs - &rhs;
        if !r.is_zero() {
            report.metricity = false;
            report
                .witness
                .get_or_insert(format!("sample {k}: metricity residual {r}"));
        }
    }
    report
}
