//! Pointwise eigenbundle decompositions over the Gaussian rationals.

use num_traits::Zero;

use crate::courant::OddExactAlgebroid;
use crate::quadratic::{i_eigenspace, lift};
use crate::report::StageReport;
use crate::symbolic::linalg::{in_span, linear_kernel, span_rank};
use crate::symbolic::scalar::imag_unit;
use crate::symbolic::{Field, GaussianRational, Matrix, PolyMatrix, Rational};

use super::structure::BnAlmostComplex;

type CVec = Vec<GaussianRational>;

/// Decomposition of `(E_±)^ℂ` for a pseudo-Hermitian structure.
#[derive(Clone, Debug)]
pub struct MetricSplitting {
    pub e_plus: Vec<Vec<Rational>>,
    pub e_minus: Vec<Vec<Rational>>,
    /// `E_{±,F} = (E_±)^ℂ ∩ L`.
    pub e_plus_f: Vec<CVec>,
    pub e_minus_f: Vec<CVec>,
}

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub point: Vec<Rational>,
    pub l: Vec<CVec>,
    pub l_bar: Vec<CVec>,
    pub u: Vec<Vec<Rational>>,
    pub metric: Option<MetricSplitting>,
    pub report: StageReport,
}

fn conj(v: &[GaussianRational]) -> CVec {
    v.iter().map(Field::conj).collect()
}

fn complexify(v: &[Rational]) -> CVec {
    v.iter()
        .map(|x| GaussianRational::new(x.clone(), Rational::zero()))
        .collect()
}

/// `L`, `L̄` and `U^ℂ` at `point`; with `g` also the splitting of `(E_±)^ℂ`.
pub fn eigen_decompose(
    alg: &OddExactAlgebroid,
    s: &BnAlmostComplex,
    g: Option<&PolyMatrix>,
    point: &[Rational],
) -> EigenDecomposition {
    let n = alg.base_dim();
    let space = alg.space();
    let f = s.f().eval(point);
    let u0 = complexify(&s.u0().components().iter().map(|c| c.eval(point)).collect::<Vec<_>>());
    let mut report = StageReport::new("eigen decomposition");
    let l = i_eigenspace(&f);
    let l_bar: Vec<CVec> = l.iter().map(|v| conj(v)).collect();
    let u = linear_kernel(&f);
    let fc: Matrix<GaussianRational> = lift(&f);
    let eigen_bad = l
        .iter()
        .position(|v| fc.apply(v) != v.iter().map(|x| x.clone() * imag_unit()).collect::<CVec>());
    report.check("F ℓ = iℓ on L", eigen_bad.map(|k| format!("basis vector {k}")));
    report.check("rank L = n", (l.len() != n).then(|| format!("rank L = {}", l.len())));
    let isotropic = l.iter().enumerate().find_map(|(a, x)| {
        l.iter()
            .enumerate()
            .find(|(_, y)| !space.pairing(x, y).is_zero())
            .map(|(b, y)| format!("⟨ℓ_{a}, ℓ_{b}⟩ = {}", space.pairing(x, y)))
    });
    report.check("L isotropic", isotropic);
    let both: Vec<CVec> = l.iter().chain(&l_bar).cloned().collect();
    let r = span_rank(&both);
    report.check("L ∩ L̄ = 0", (r != 2 * l.len()).then(|| format!("rank(L + L̄) = {r}")));
    let u_ok = u.len() == 1 && in_span(&u.iter().map(|v| complexify(v)).collect::<Vec<_>>(), &u0);
    report.check("U^ℂ = span(u0)", (!u_ok).then(|| format!("dim ker F = {}", u.len())));
    let mut all = both.clone();
    all.push(u0.clone());
    let total = span_rank(&all);
    report.check(
        "E^ℂ = L ⊕ L̄ ⊕ U^ℂ",
        (total != alg.rank()).then(|| format!("rank {total} of {}", alg.rank())),
    );
    let metric = g.map(|g| {
        let gp = g.eval(point);
        let id = Matrix::<Rational>::identity(alg.rank());
        let e_plus = linear_kernel(&(&gp - &id));
        let e_minus = linear_kernel(&(&gp + &id));
        let gc: Matrix<GaussianRational> = lift(&gp);
        let shifted = &fc - &Matrix::identity(alg.rank()).scale_by(&imag_unit());
        let intersect = |sign: i64| -> Vec<CVec> {
            let gs = &gc
                - &Matrix::identity(alg.rank()).scale_by(&GaussianRational::from(Rational::from_integer(sign.into())));
            let mut rows: Vec<CVec> = (0..shifted.rows()).map(|i| shifted.row(i).to_vec()).collect();
            rows.extend((0..gs.rows()).map(|i| gs.row(i).to_vec()));
            linear_kernel(&Matrix::from_rows(rows))
        };
        let e_plus_f = intersect(1);
        let e_minus_f = intersect(-1);
        // u0 sits in E₊ for even n and in E₋ for odd n
        let even = n.is_multiple_of(2);
        for (name, e, ef, holds_u0) in [("E₊", &e_plus, &e_plus_f, even), ("E₋", &e_minus, &e_minus_f, !even)] {
            let mut parts: Vec<CVec> = ef
                .iter()
                .chain(ef.iter().map(|v| conj(v)).collect::<Vec<_>>().iter())
                .cloned()
                .collect();
            if holds_u0 {
                parts.push(u0.clone());
            }
            let ec: Vec<CVec> = e.iter().map(|v| complexify(v)).collect();
            let contained = parts.iter().all(|v| in_span(&ec, v));
            let rank = span_rank(&parts);
            let label = if holds_u0 {
                format!("({name})^ℂ = span(u0) ⊕ {name}∩L ⊕ {name}∩L̄")
            } else {
                format!("({name})^ℂ = {name}∩L ⊕ {name}∩L̄")
            };
            let ok = contained && rank == e.len() && rank == parts.len();
            report.check(
                label,
                (!ok).then(|| format!("dim {name} = {}, summands of rank {rank}", e.len())),
            );
        }
        let u0_in_plus = in_span(&e_plus.iter().map(|v| complexify(v)).collect::<Vec<_>>(), &u0);
        report.check(
            "u0 ∈ (E₊)^ℂ iff n even",
            (u0_in_plus != even).then(|| format!("n = {n}, u0 ∈ E₊: {u0_in_plus}")),
        );
        MetricSplitting {
            e_plus,
            e_minus,
            e_plus_f,
            e_minus_f,
        }
    });
    EigenDecomposition {
        point: point.to_vec(),
        l,
        l_bar,
        u,
        metric,
        report,
    }
}
