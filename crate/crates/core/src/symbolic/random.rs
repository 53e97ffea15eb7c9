//! Seeded generators for random exact test data.

use rand::Rng;

use super::forms::{DifferentialForm, VectorField};
use super::poly::{Monomial, Polynomial};
use super::scalar::{q, Rational};

/// Small nonzero-biased rational with numerator in `-4..=4` and denominator
/// in `1..=3`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    q(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

/// Random polynomial in `nvars` variables of total degree at most `degree`,
/// with up to `max_terms` terms.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, nvars: usize, degree: u32, max_terms: usize) -> Polynomial {
    let nterms = rng.gen_range(0..=max_terms);
    let mut p = Polynomial::from_terms(std::iter::empty());
    for _ in 0..nterms {
        let mut exps = vec![0u32; nvars];
        let total = rng.gen_range(0..=degree);
        for _ in 0..total {
            if nvars > 0 {
                exps[rng.gen_range(0..nvars)] += 1;
            }
        }
        p.add_term(Monomial::new(exps), random_rational(rng));
    }
    p
}

pub fn random_vector_field<R: Rng + ?Sized>(rng: &mut R, dim: usize, degree: u32) -> VectorField {
    VectorField::new((0..dim).map(|_| random_polynomial(rng, dim, degree, 3)).collect())
}

/// Random `k`-form with every coefficient drawn independently.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, dim: usize, k: usize, degree: u32) -> DifferentialForm {
    let mut w = DifferentialForm::zero(dim, k);
    for idx in increasing_tuples(dim, k) {
        let f = random_polynomial(rng, dim, degree, 2);
        // in-range, non-repeating indices: cannot fail
        if let Ok(term) = DifferentialForm::monomial(dim, &idx, f) {
            w = w.add(&term).unwrap_or(w);
        }
    }
    w
}

/// All strictly increasing `k`-tuples from `0..n`, lexicographically.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tuples_count() {
        assert_eq!(increasing_tuples(4, 2).len(), 6);
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert!(increasing_tuples(2, 3).is_empty());
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_polynomial(&mut ChaCha8Rng::seed_from_u64(7), 3, 2, 4);
        let b = random_polynomial(&mut ChaCha8Rng::seed_from_u64(7), 3, 2, 4);
        assert_eq!(a, b);
        assert!(a.degree().unwrap_or(0) <= 2);
    }
}
