//! Acceptance criteria, one line each. Runs without the default harness.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bn_courant::adapted::{
    adapted_pipeline, adapted_pipeline_from, adapted_space, build_bn_kahler_connection, check_affine_samples,
    difference_in_fiber, gamma_crosscheck, infeasibility_certificate, nijenhuis_identity_check, random_fiber_elements,
    torsion_formula_checks, u0_nijenhuis_check,
};
use bn_courant::bn::{is_integrable, nijenhuis_tensor};
use bn_courant::courant::{check_courant_axioms, random_samples, torsion, torsion_free_base, GeneralizedConnection};
use bn_courant::quadratic::{
    check_exact_sequence, cyclic_del, expected_u_prolongation_dim, kahler_prolongation, kahler_splits, u_prolongation,
    unitary_splits, QuadraticSpace,
};
use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prolongation_dimensions() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        let expected = n * n * (n + 1);
        for (m1, m2) in unitary_splits(n) {
            let (_, p) = u_prolongation(m1, m2);
            ensure(p.dimension() == expected, || {
                format!("u({m1},{m2}): {} ≠ {expected}", p.dimension())
            })?;
            ensure(expected_u_prolongation_dim(n) == expected, || {
                format!("formula at n = {n}")
            })?;
            count += 1;
        }
    }
    for n in 1..=3 {
        for (s1, s2) in kahler_splits(n) {
            let expected: usize = [s1, s2].iter().map(|&(k, l)| (k + l) * (k + l) * (k + l + 1)).sum();
            let kp = kahler_prolongation(s1, s2).map_err(|e| e.to_string())?;
            let computed = kp.total.dimension();
            ensure(computed == expected, || {
                format!("u{s1:?} + u{s2:?}: {computed} ≠ {expected}")
            })?;
            ensure(kp.is_direct_sum(), || format!("u{s1:?} + u{s2:?}: not the direct sum"))?;
            count += 1;
        }
    }
    Ok(format!("{count} splits"))
}

fn exact_sequence() -> Outcome {
    for d in 0..=3 {
        let r = check_exact_sequence(&QuadraticSpace::split_model(d), false);
        let dim = 2 * d + 1;
        ensure(r.injective, || format!("dim {dim}: S³ → S²⊗V* not injective"))?;
        ensure(r.ker_del_eq_im_sk, || format!("dim {dim}: ker ∂ ≠ im sk"))?;
        ensure(r.del_surjective, || format!("dim {dim}: ∂ not surjective"))?;
        ensure(r.alternating_sum_zero, || {
            format!("dim {dim}: alternating sum {:?}", r.dimensions)
        })?;
    }
    Ok("dim V = 1, 3, 5, 7".into())
}

fn courant_axioms() -> Outcome {
    for name in ["untwisted_d2", "twisted_d3"] {
        let alg = load(name).algebroid;
        let samples = random_samples(alg.base_dim(), 0, 2, 20);
        let report = check_courant_axioms(&alg, &samples);
        ensure(report.pass(), || {
            format!("{name}: {:?}", report.first_failure().and_then(|o| o.witness.clone()))
        })?;
    }
    let alg = load("nonclosed_f2").algebroid;
    let report = check_courant_axioms(&alg, &random_samples(alg.base_dim(), 0, 2, 20));
    let witness = report.first_failure().and_then(|o| o.witness.clone());
    ensure(witness.is_some(), || "nonclosed_f2 passed the axioms".into())?;
    Ok(format!("20 samples; nonclosed_f2 witness: {}", witness.unwrap()))
}

fn torsion_formulas() -> Outcome {
    for name in STRUCTURED {
        let (alg, s) = complex(name);
        let pipeline = adapted_pipeline(&alg, &s).map_err(|e| format!("{name}: {e}"))?;
        let t = torsion(&alg, &pipeline.adapted.connection);
        let report = torsion_formula_checks(&alg, &t, &s);
        ensure(report.pass(), || format!("{name}: {:?}", report.first_failure()))?;
    }
    Ok(format!("{} fixtures", STRUCTURED.len()))
}

fn adapted_f(
    conn: &GeneralizedConnection,
    name: &str,
    alg: &bn_courant::courant::OddExactAlgebroid,
    s: &bn_courant::bn::BnAlmostComplex,
) -> Result<(), String> {
    ensure(torsion(alg, conn).is_zero(), || format!("{name}: T ≠ 0"))?;
    ensure(conn.preserves_endo(s.f()), || format!("{name}: DF ≠ 0"))?;
    ensure(conn.preserves_section(s.u0()), || format!("{name}: Du0 ≠ 0"))
}

fn positive_direction() -> Outcome {
    for name in ["cx_even", "cx_odd"] {
        let (alg, s) = complex(name);
        ensure(is_integrable(&alg, &s).integrable, || format!("{name} not integrable"))?;
        let pipeline = adapted_pipeline(&alg, &s).map_err(|e| format!("{name}: {e}"))?;
        adapted_f(&pipeline.adapted.connection, name, &alg, &s)?;
    }
    let (alg, ph) = hermitian("kah");
    let build = build_bn_kahler_connection(&alg, &ph).map_err(|e| e.to_string())?;
    ensure(build.pass(), || "kah: pipeline stage failed".into())?;
    adapted_f(&build.connection, "kah", &alg, ph.complex())?;
    ensure(build.connection.preserves_endo(ph.g()), || "kah: DG ≠ 0".into())?;
    Ok("cx_even, cx_odd: T = 0, DF = 0; kah: T = 0, DG = 0, DF = 0".into())
}

fn negative_direction() -> Outcome {
    let name = "cx_odd3_twisted";
    let (alg, s) = complex(name);
    let integrability = is_integrable(&alg, &s);
    ensure(!integrability.integrable, || format!("{name} is integrable"))?;
    let witness = integrability.stage.first_failure().and_then(|p| p.witness.clone());
    ensure(witness.is_some(), || "no Nijenhuis witness".into())?;
    let p = origin(&alg);
    let n_at_p = nijenhuis_tensor(&alg, &s).map(|x| x.eval(&p));
    ensure(!n_at_p.is_zero(), || "N_F vanishes at the witness point".into())?;
    let pipeline = adapted_pipeline(&alg, &s).map_err(|e| e.to_string())?;
    let t = torsion(&alg, &pipeline.adapted.connection);
    let cert = infeasibility_certificate(&alg, &s, None, &t, &p);
    ensure(cert.infeasible, || {
        format!("system solvable: rank {} = {}", cert.rank_system, cert.rank_augmented)
    })?;
    let along_u0 = u0_nijenhuis_check(&alg, &s);
    ensure(along_u0.pass(), || {
        format!("N_F along u0: {:?}", along_u0.first_failure())
    })?;
    Ok(format!(
        "{}; rank {} < {}",
        witness.unwrap(),
        cert.rank_system,
        cert.rank_augmented
    ))
}

fn frame_identities() -> Outcome {
    for name in ["cx_odd3_twisted", "cx_even_gauge", "kah3_twisted"] {
        let (alg, s) = complex(name);
        let pipeline = adapted_pipeline(&alg, &s).map_err(|e| format!("{name}: {e}"))?;
        let conn = &pipeline.parallel.connection;
        let rel = nijenhuis_identity_check(&alg, conn, &s).map_err(|e| e.to_string())?;
        ensure(rel.pass(), || {
            format!("{name} Nijenhuis identity: {:?}", rel.first_failure())
        })?;
        let gam = gamma_crosscheck(&alg, conn, &s).map_err(|e| e.to_string())?;
        ensure(gam.pass(), || {
            format!("{name} gamma identities: {:?}", gam.first_failure())
        })?;
    }
    let (alg, s) = complex("cx_odd3_twisted");
    ensure(!nijenhuis_tensor(&alg, &s).is_zero(), || {
        "Nijenhuis identity only checked where N_F = 0".into()
    })?;
    Ok("cx_odd3_twisted, cx_even_gauge, kah3_twisted".into())
}

fn affine_structure() -> Outcome {
    let mut summary = Vec::new();
    for (name, n) in [("cx_even", 2), ("cx_odd", 1)] {
        let (alg, s) = complex(name);
        let p = origin(&alg);
        let model = adapted_space(&alg, &s, None, &p).map_err(|e| e.to_string())?;
        let expected = expected_u_prolongation_dim(n);
        ensure(
            model.dimension() == expected && model.expected_dimension == expected,
            || format!("{name}: fiber {} ≠ {expected}", model.dimension()),
        )?;
        ensure(model.report.pass(), || {
            format!("{name}: {:?}", model.report.first_failure())
        })?;
        let first = adapted_pipeline(&alg, &s)
            .map_err(|e| e.to_string())?
            .adapted
            .connection;
        let samples = random_fiber_elements(&model, 0, 20);
        let affine = check_affine_samples(&alg, &s, None, &first, &samples).map_err(|e| e.to_string())?;
        ensure(affine.pass(), || format!("{name}: {:?}", affine.first_failure()))?;
        let other_base = torsion_free_base(&alg)
            .add_tensor(&alg, &random_sk_symmetric(&alg, 1))
            .map_err(|e| e.to_string())?;
        ensure(torsion(&alg, &other_base).is_zero(), || {
            "second base has torsion".into()
        })?;
        let second = adapted_pipeline_from(&alg, &s, other_base)
            .map_err(|e| e.to_string())?
            .adapted
            .connection;
        ensure(second.correction() != first.correction(), || {
            "second connection equals the first".into()
        })?;
        adapted_f(&second, name, &alg, &s)?;
        ensure(difference_in_fiber(&model, &first, &second, &alg), || {
            format!("{name}: difference outside fiber")
        })?;
        summary.push(format!("{name} {expected}"));
    }
    let (alg, ph) = hermitian("kah");
    let model = adapted_space(&alg, ph.complex(), Some(ph.g()), &origin(&alg)).map_err(|e| e.to_string())?;
    ensure(model.dimension() == 4 && model.report.pass(), || {
        format!("kah: fiber {}", model.dimension())
    })?;
    let build = build_bn_kahler_connection(&alg, &ph).map_err(|e| e.to_string())?;
    let samples = random_fiber_elements(&model, 0, 20);
    let affine = check_affine_samples(&alg, ph.complex(), Some(ph.g()), &build.connection, &samples)
        .map_err(|e| e.to_string())?;
    ensure(affine.pass(), || format!("kah: {:?}", affine.first_failure()))?;
    summary.push("kah 4".into());
    Ok(format!("fibers {}; 20 samples each", summary.join(", ")))
}

fn shift_law() -> Outcome {
    let alg = load("twisted_d3").algebroid;
    let base = torsion_free_base(&alg);
    let t0 = torsion(&alg, &base);
    for seed in 0..50 {
        let eta = random_skew(&alg, seed, 1);
        let shifted = base.add_tensor(&alg, &eta).map_err(|e| e.to_string())?;
        let diff = &torsion(&alg, &shifted) - &t0;
        ensure(diff == cyclic_del(&eta), || format!("seed {seed}"))?;
    }
    Ok("50 corrections on twisted_d3".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("prolongation dimensions", 30, prolongation_dimensions),
        ("exact sequence", 60, exact_sequence),
        ("courant axioms", 30, courant_axioms),
        ("torsion formulas", 60, torsion_formulas),
        ("torsion-free adapted connections", 60, positive_direction),
        ("non-integrable obstruction", 60, negative_direction),
        ("nijenhuis and gamma identities", 60, frame_identities),
        ("affine space of adapted connections", 60, affine_structure),
        ("torsion shift law", 30, shift_law),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*budget) => Err(format!("{detail}; over budget {budget}s")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS {name} ({:.2}s) {detail}",
                k + 1,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({:.2}s) {why}", k + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
