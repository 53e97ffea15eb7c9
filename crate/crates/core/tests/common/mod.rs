#![allow(dead_code)]

use std::path::PathBuf;

use bn_courant::bn::{BnAlmostComplex, BnPseudoHermitian};
use bn_courant::courant::OddExactAlgebroid;
use bn_courant::instance::{Instance, StructureData};
use bn_courant::quadratic::{sk, ThreeTensor};
use bn_courant::symbolic::random::{random_polynomial, random_rational};
use bn_courant::symbolic::{Polynomial, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const STRUCTURED: [&str; 11] = [
    "cx_even",
    "cx_even_twisted",
    "cx_even_gauge",
    "cx_odd",
    "cx_odd3",
    "cx_odd3_twisted",
    "cx_odd3_h3",
    "kah",
    "kah_bfield",
    "kah3_h3",
    "kah3_twisted",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
}

pub fn load(name: &str) -> Instance {
    Instance::load(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn structure(name: &str) -> (OddExactAlgebroid, StructureData) {
    let inst = load(name);
    let data = inst.structure.unwrap_or_else(|| panic!("{name} has no structure"));
    (inst.algebroid, data)
}

pub fn complex(name: &str) -> (OddExactAlgebroid, BnAlmostComplex) {
    let (alg, data) = structure(name);
    let s = BnAlmostComplex::new(&alg, data.f, data.u0).unwrap();
    (alg, s)
}

pub fn hermitian(name: &str) -> (OddExactAlgebroid, BnPseudoHermitian) {
    let (alg, data) = structure(name);
    let g = data.g_end.unwrap_or_else(|| panic!("{name} has no Gend"));
    let ph = BnPseudoHermitian::new(&alg, g, data.f, data.u0).unwrap();
    (alg, ph)
}

pub fn origin(alg: &OddExactAlgebroid) -> Vec<Rational> {
    vec![Rational::from_integer(0.into()); alg.base_dim()]
}

/// Random polynomial correction, skew in its last two slots.
pub fn random_skew(alg: &OddExactAlgebroid, seed: u64, degree: u32) -> ThreeTensor<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = alg.base_dim();
    let sigma = ThreeTensor::from_fn(alg.rank(), |_, _, _| random_polynomial(&mut rng, d, degree, 2));
    sk(&sigma)
}

/// `sk` of a random constant tensor symmetric in its first two slots.
pub fn random_sk_symmetric(alg: &OddExactAlgebroid, seed: u64) -> ThreeTensor<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = ThreeTensor::from_fn(alg.rank(), |_, _, _| random_rational(&mut rng));
    sk(&sigma.symmetrize_first_two()).map(|x| Polynomial::constant(x.clone()))
}
