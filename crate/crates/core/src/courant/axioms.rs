//! The Courant axioms, checked as polynomial identities on sample sections.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebroid::OddExactAlgebroid;
use super::section::GeneralizedSection;
use crate::symbolic::random::random_polynomial;
use crate::symbolic::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `[u,[v,w]] = [[u,v],w] + [v,[u,w]]`
    Jacobi,
    /// `[u, fv] = f[u,v] + π(u)(f) v`
    Leibniz,
    /// `π(u)⟨v,w⟩ = ⟨[u,v],w⟩ + ⟨v,[u,w]⟩`
    MetricInvariance,
    /// `⟨[u,v] + [v,u], w⟩ = π(w)⟨u,v⟩`
    Symmetrization,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Jacobi,
        Axiom::Leibniz,
        Axiom::MetricInvariance,
        Axiom::Symmetrization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Jacobi => "jacobi",
            Axiom::Leibniz => "leibniz",
            Axiom::MetricInvariance => "metric_invariance",
            Axiom::Symmetrization => "symmetrization",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub pass: bool,
    pub checked: usize,
    /// Index of the failing sample and the first nonzero residual.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }

    pub fn first_failure(&self) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| !o.pass)
    }

    pub fn outcome(&self, axiom: Axiom) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.axiom == axiom)
    }
}

/// A sample for the axiom checks: three sections and a function.
#[derive(Clone, Debug)]
pub struct AxiomSample {
    pub u: GeneralizedSection,
    pub v: GeneralizedSection,
    pub w: GeneralizedSection,
    pub f: Polynomial,
}

/// `count` seeded random samples with components of degree at most `degree`.
pub fn random_samples(d: usize, seed: u64, degree: u32, count: usize) -> Vec<AxiomSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| AxiomSample {
            u: GeneralizedSection::random(&mut rng, d, degree),
            v: GeneralizedSection::random(&mut rng, d, degree),
            w: GeneralizedSection::random(&mut rng, d, degree),
            f: random_polynomial(&mut rng, d, degree, 3),
        })
        .collect()
}

fn section_witness(k: usize, r: &GeneralizedSection) -> Option<String> {
    r.first_nonzero()
        .map(|(i, c)| format!("sample {k}: residual component {i} = {c}"))
}

fn scalar_witness(k: usize, r: &Polynomial) -> Option<String> {
    use num_traits::Zero;
    (!r.is_zero()).then(|| format!("sample {k}: residual = {r}"))
}

/// Residual of one axiom on one sample, as a witness string if nonzero.
pub fn axiom_residual(alg: &OddExactAlgebroid, axiom: Axiom, k: usize, s: &AxiomSample) -> Option<String> {
    let br = |a: &GeneralizedSection, b: &GeneralizedSection| alg.bracket(a, b);
    let pair = |a: &GeneralizedSection, b: &GeneralizedSection| alg.pair(a, b);
    match axiom {
        Axiom::Jacobi => {
            let lhs = br(&s.u, &br(&s.v, &s.w));
            let rhs = &br(&br(&s.u, &s.v), &s.w) + &br(&s.v, &br(&s.u, &s.w));
            section_witness(k, &(&lhs - &rhs))
        }
        Axiom::Leibniz => {
            let lhs = br(&s.u, &s.v.scale(&s.f));
            let rhs = &br(&s.u, &s.v).scale(&s.f) + &s.v.scale(&s.u.anchor().apply(&s.f));
            section_witness(k, &(&lhs - &rhs))
        }
        Axiom::MetricInvariance => {
            let lhs = s.u.anchor().apply(&pair(&s.v, &s.w));
            let rhs = &pair(&br(&s.u, &s.v), &s.w) + &pair(&s.v, &br(&s.u, &s.w));
            scalar_witness(k, &(&lhs - &rhs))
        }
        Axiom::Symmetrization => {
            let sym = &br(&s.u, &s.v) + &br(&s.v, &s.u);
            let lhs = pair(&sym, &s.w);
            let rhs = s.w.anchor().apply(&pair(&s.u, &s.v));
            scalar_witness(k, &(&lhs - &rhs))
        }
    }
}

/// Check the given axioms on every sample. Each axiom stops at its first
/// failing sample.
pub fn check_axioms(alg: &OddExactAlgebroid, axioms: &[Axiom], samples: &[AxiomSample]) -> AxiomReport {
    let outcomes = axioms
        .iter()
        .map(|&axiom| {
            let witness = samples
                .iter()
                .enumerate()
                .find_map(|(k, s)| axiom_residual(alg, axiom, k, s));
            AxiomOutcome {
                axiom,
                pass: witness.is_none(),
                checked: samples.len(),
                witness,
            }
        })
        .collect();
    AxiomReport { outcomes }
}

/// All four axioms.
pub fn check_courant_axioms(alg: &OddExactAlgebroid, samples: &[AxiomSample]) -> AxiomReport {
    check_axioms(alg, &Axiom::ALL, samples)
}
