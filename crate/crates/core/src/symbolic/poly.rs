use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{Field, GaussianRational, Rational, Ring};

/// Exponent vector of a monomial in `x1, x2, ...`. Trailing zero exponents
/// are never stored, so equal monomials compare equal regardless of how many
/// variables were in scope when they were built.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// The monomial `x_{i+1}` (variables are 0-indexed internally).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of variables this monomial could depend on.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let exps = (0..n).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Monomial(exps)
    }
}

/// Sparse multivariate polynomial over an exact field, in the variables
/// `x1, x2, ...`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<K = Rational> {
    terms: BTreeMap<Monomial, K>,
}

/// Real polynomial, the coefficient ring of every section in the engine.
pub type Polynomial = Poly<Rational>;

impl<K: Field> Poly<K> {
    pub fn constant(c: K) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// The coordinate function `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), K::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, K)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// One more than the largest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> K {
        self.coefficient(&Monomial::one())
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c.clone() * K::from_i64(e as i64));
        }
        out
    }

    /// Evaluate at a point. Coordinates beyond `point.len()` are taken as 0.
    pub fn eval(&self, point: &[K]) -> K {
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point.get(i).cloned().unwrap_or_else(K::zero);
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<L: Field, F: Fn(&K) -> L>(&self, f: F) -> Poly<L> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl Polynomial {
    /// Complexification of a real polynomial.
    pub fn complexify(&self) -> Poly<GaussianRational> {
        self.map_coeffs(|c| GaussianRational::from_rational(c.clone()))
    }
}

impl<K: Field> Default for Poly<K> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<K: Field> Zero for Poly<K> {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Field> One for Poly<K> {
    fn one() -> Self {
        Poly::constant(K::one())
    }
}

impl<'a, K: Field> Add<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;

    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, K: Field> Sub<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;

    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, K: Field> Mul<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;

    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;

    fn neg(self) -> Poly<K> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<K: Field> Add for Poly<K> {
    type Output = Poly<K>;

    fn add(self, rhs: Poly<K>) -> Poly<K> {
        &self + &rhs
    }
}

impl<K: Field> Sub for Poly<K> {
    type Output = Poly<K>;

    fn sub(self, rhs: Poly<K>) -> Poly<K> {
        &self - &rhs
    }
}

impl<K: Field> Mul for Poly<K> {
    type Output = Poly<K>;

    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        &self * &rhs
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;

    fn neg(self) -> Poly<K> {
        -&self
    }
}

impl<K: Field> Ring for Poly<K> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(K::from_i64(n))
    }

    fn scaled(&self, q: &Rational) -> Self {
        self.scale(&K::from_rational(q.clone()))
    }
}

impl<K: fmt::Debug> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{}", e)?;
        }
    }
    Ok(())
}

/// Terms are printed by descending total degree, then descending exponent
/// vector; the output is accepted by [`super::parse::parse_polynomial`].
impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c < &Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly<GaussianRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            if m.degree() > 0 {
                write!(f, "*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::scalar::{q, qi};

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(Monomial::new(vec![1, 0, 0]), Monomial::var(0));
    }

    #[test]
    fn derivative_and_eval() {
        // p = x1^2 x2 - 3 x2
        let p = &(&(&x(0) * &x(0)) * &x(1)) - &x(1).scale(&qi(3));
        assert_eq!(p.derivative(0), (&x(0) * &x(1)).scale(&qi(2)));
        assert_eq!(p.derivative(2), Polynomial::zero());
        assert_eq!(p.eval(&[qi(2), q(1, 2)]), qi(2) - q(3, 2));
    }

    #[test]
    fn display_orders_terms() {
        let p = &(&x(0) * &x(0)) - &x(1).scale(&q(1, 2));
        assert_eq!(p.to_string(), "x1^2 - 1/2*x2");
        assert_eq!((-&x(2)).to_string(), "-x3");
        assert_eq!(Polynomial::constant(q(-5, 3)).to_string(), "-5/3");
    }

    mod properties {

        use crate::symbolic::parse::parse_polynomial;
        use crate::symbolic::random::{random_polynomial, random_rational};
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn exact_ring_arithmetic(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let p = random_polynomial(&mut rng, 3, 3, 5);
                let r = random_polynomial(&mut rng, 3, 3, 5);
                prop_assert_eq!(&(&p + &r) - &r, p.clone());
                let prod = &p * &r;
                for _ in 0..10 {
                    let pt: Vec<_> = (0..3).map(|_| random_rational(&mut rng)).collect();
                    prop_assert_eq!(prod.eval(&pt), p.eval(&pt) * r.eval(&pt));
                }
            }

            #[test]
            fn print_parse_round_trip(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let p = random_polynomial(&mut rng, 4, 3, 6);
                prop_assert_eq!(parse_polynomial(&p.to_string(), 4).unwrap(), p);
            }
        }
    }
}
