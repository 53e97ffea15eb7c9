//! Command-line front end: load an instance, run a pipeline, emit a report.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::adapted::{
    adapted_pipeline, adapted_space, build_bn_kahler_connection, check_affine_samples, gamma_crosscheck,
    infeasibility_certificate, nijenhuis_identity_check, random_fiber_elements, tensor_witness, u0_nijenhuis_check,
    AdaptedError,
};
use crate::bn::{
    eigen_decompose, is_integrable, validate_bn_gacs, validate_pseudo_hermitian, BnAlmostComplex, BnPseudoHermitian,
};
use crate::courant::{check_courant_axioms, random_samples, torsion, Axiom, OddExactAlgebroid};
use crate::instance::{Instance, InstanceError, StructureData};
use crate::quadratic::{
    check_exact_sequence, expected_u_prolongation_dim, kahler_prolongation, kahler_splits, u_prolongation,
    unitary_splits, QuadraticError, QuadraticSpace,
};
use crate::report::{DimensionCheck, Postcondition, Report, StageReport};
use crate::symbolic::Rational;

/// Samples drawn for the axiom suite.
pub const AXIOM_SAMPLES: usize = 20;
/// Random fiber elements tried against the affine structure.
pub const FIBER_SAMPLES: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "bn-courant",
    version,
    about = "Exact checks for odd exact Courant algebroids and B_n structures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Courant axioms on seeded random sections.
    Axioms(InstanceArgs),
    /// Validate F (and G) and decompose at the origin.
    Structure(InstanceArgs),
    /// Nijenhuis integrability of F.
    Integrable(InstanceArgs),
    /// Build the F-preserving connection and verify its torsion.
    Adapt(InstanceArgs),
    /// Build the pseudo-Kähler connection.
    Kahler(InstanceArgs),
    /// Prolongation dimensions and the exact sequence.
    Prolong(ProlongArgs),
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Maximal degree of random section components.
    #[arg(long, default_value_t = 2)]
    pub degree: u32,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InstanceArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ProlongArgs {
    /// Base dimension; checks every signature split.
    #[arg(long, required_unless_present = "split", conflicts_with = "split")]
    pub n: Option<usize>,
    /// Kähler split `k1,l1:k2,l2`.
    #[arg(long)]
    pub split: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Adapted(#[from] AdaptedError),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
}

impl From<QuadraticError> for CliError {
    fn from(e: QuadraticError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl Cli {
    pub fn common(&self) -> &Common {
        match &self.command {
            Command::Axioms(a)
            | Command::Structure(a)
            | Command::Integrable(a)
            | Command::Adapt(a)
            | Command::Kahler(a) => &a.common,
            Command::Prolong(p) => &p.common,
        }
    }
}

fn origin(alg: &OddExactAlgebroid) -> Vec<Rational> {
    vec![Rational::from_integer(0.into()); alg.base_dim()]
}

fn load(args: &InstanceArgs) -> Result<Instance, CliError> {
    Ok(Instance::load(&args.instance)?)
}

fn structure_of<'a>(inst: &'a Instance, path: &Path) -> Result<&'a StructureData, CliError> {
    inst.structure
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{} has no structure block", path.display())))
}

fn complex_structure(alg: &OddExactAlgebroid, data: &StructureData) -> Result<BnAlmostComplex, CliError> {
    BnAlmostComplex::new(alg, data.f.clone(), data.u0.clone()).map_err(|e| CliError::Adapted(e.into()))
}

fn new_report(name: &str, args: &InstanceArgs) -> Report {
    Report::new(
        name,
        Some(args.instance.display().to_string()),
        args.common.seed,
        args.common.degree,
    )
}

pub fn cmd_axioms(args: &InstanceArgs) -> Result<Report, CliError> {
    let inst = load(args)?;
    let alg = &inst.algebroid;
    let samples = random_samples(alg.base_dim(), args.common.seed, args.common.degree, AXIOM_SAMPLES);
    let result = check_courant_axioms(alg, &samples);
    let mut stage = StageReport::new("courant axioms");
    for axiom in Axiom::ALL {
        if let Some(o) = result.outcome(axiom) {
            stage.push(Postcondition::check(
                format!("{} ({} samples)", axiom.name(), o.checked),
                o.witness.clone(),
            ));
        }
    }
    let mut report = new_report("axioms", args);
    report.push_stage(stage);
    Ok(report)
}

pub fn cmd_structure(args: &InstanceArgs) -> Result<Report, CliError> {
    let inst = load(args)?;
    let alg = &inst.algebroid;
    let data = structure_of(&inst, &args.instance)?;
    let mut report = new_report("structure", args);
    let validation = match &data.g_end {
        Some(g) => validate_pseudo_hermitian(alg, g, &data.f, &data.u0),
        None => validate_bn_gacs(alg, &data.f, &data.u0),
    };
    let valid = validation.pass();
    report.push_stage(validation);
    if valid {
        let s = complex_structure(alg, data)?;
        report.push_stage(eigen_decompose(alg, &s, data.g_end.as_ref(), &origin(alg)).report);
    }
    Ok(report)
}

pub fn cmd_integrable(args: &InstanceArgs) -> Result<Report, CliError> {
    let inst = load(args)?;
    let alg = &inst.algebroid;
    let data = structure_of(&inst, &args.instance)?;
    let mut report = new_report("integrable", args);
    let validation = validate_bn_gacs(alg, &data.f, &data.u0);
    if !validation.pass() {
        report.push_stage(validation);
        return Ok(report);
    }
    let s = complex_structure(alg, data)?;
    report.push_stage(is_integrable(alg, &s).stage);
    Ok(report)
}

pub fn cmd_adapt(args: &InstanceArgs) -> Result<Report, CliError> {
    let inst = load(args)?;
    let alg = &inst.algebroid;
    let data = structure_of(&inst, &args.instance)?;
    let mut report = new_report("adapt", args);
    let validation = validate_bn_gacs(alg, &data.f, &data.u0);
    if !validation.pass() {
        report.push_stage(validation);
        return Ok(report);
    }
    let s = complex_structure(alg, data)?;
    let integrability = is_integrable(alg, &s);
    let pipeline = adapted_pipeline(alg, &s)?;
    for stage in pipeline.stages() {
        report.push_stage(stage);
    }
    report.push_stage(nijenhuis_identity_check(alg, &pipeline.parallel.connection, &s)?);
    report.push_stage(gamma_crosscheck(alg, &pipeline.parallel.connection, &s)?);
    report.push_stage(u0_nijenhuis_check(alg, &s));
    let t = torsion(alg, &pipeline.adapted.connection);
    let p = origin(alg);
    let mut verdict = StageReport::new("torsion-free F-preserving connection");
    if integrability.integrable {
        verdict.check("integrable: T = 0", tensor_witness("T", &t));
        let model = adapted_space(alg, &s, None, &p)?;
        report.push_stage(model.report.clone());
        let samples = random_fiber_elements(&model, args.common.seed, FIBER_SAMPLES);
        match check_affine_samples(alg, &s, None, &pipeline.adapted.connection, &samples) {
            Ok(stage) => report.push_stage(stage),
            Err(AdaptedError::NonConstant) => {}
            Err(e) => return Err(e.into()),
        }
    } else {
        let witness = integrability.stage.first_failure().and_then(|p| p.witness.clone());
        verdict.push(match witness {
            Some(w) => Postcondition::holds_with("not integrable: N_F witness", w),
            None => Postcondition::fails("not integrable: N_F witness", "no witness recorded"),
        });
        let cert = infeasibility_certificate(alg, &s, None, &t, &p);
        let name = "no torsion-free F-preserving correction at the origin";
        let detail = format!(
            "rank {} vs augmented rank {} ({} unknowns)",
            cert.rank_system, cert.rank_augmented, cert.unknowns
        );
        verdict.push(if cert.infeasible {
            Postcondition::holds_with(name, detail)
        } else {
            Postcondition::fails(name, detail)
        });
    }
    report.push_stage(verdict);
    Ok(report)
}

pub fn cmd_kahler(args: &InstanceArgs) -> Result<Report, CliError> {
    let inst = load(args)?;
    let alg = &inst.algebroid;
    let data = structure_of(&inst, &args.instance)?;
    let g = data
        .g_end
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{} has no Gend block", args.instance.display())))?;
    let mut report = new_report("kahler", args);
    let validation = validate_pseudo_hermitian(alg, g, &data.f, &data.u0);
    if !validation.pass() {
        report.push_stage(validation);
        return Ok(report);
    }
    let ph = BnPseudoHermitian::new(alg, g.clone(), data.f.clone(), data.u0.clone())
        .map_err(|e| CliError::Adapted(e.into()))?;
    let build = build_bn_kahler_connection(alg, &ph)?;
    for stage in &build.stages {
        report.push_stage(stage.clone());
    }
    if build.integrable {
        let model = adapted_space(alg, ph.complex(), Some(g), &origin(alg))?;
        report.push_stage(model.report.clone());
        let samples = random_fiber_elements(&model, args.common.seed, FIBER_SAMPLES);
        match check_affine_samples(alg, ph.complex(), Some(g), &build.connection, &samples) {
            Ok(stage) => report.push_stage(stage),
            Err(AdaptedError::NonConstant) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(report)
}

/// `(k, l)` signature of one unitary block.
type Block = (usize, usize);

fn parse_split(text: &str) -> Result<(Block, Block), CliError> {
    let bad = || CliError::Usage(format!("split `{text}` is not of the form k1,l1:k2,l2"));
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 2 {
        return Err(bad());
    }
    let pair = |s: &str| -> Result<Block, CliError> {
        let xs: Vec<&str> = s.split(',').collect();
        match xs.as_slice() {
            [a, b] => Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            )),
            _ => Err(bad()),
        }
    };
    Ok((pair(parts[0])?, pair(parts[1])?))
}

fn kahler_check(s1: Block, s2: Block) -> Result<DimensionCheck, CliError> {
    let kp = kahler_prolongation(s1, s2)?;
    let computed = kp.total.dimension();
    let expected = kp.expected_dimension();
    Ok(DimensionCheck {
        space: format!(
            "R^{{{},{}}} + R^{{{},{}}} + line",
            2 * s1.0,
            2 * s1.1,
            2 * s2.0,
            2 * s2.1
        ),
        algebra: format!("u({},{}) + u({},{})", s1.0, s1.1, s2.0, s2.1),
        dimension_expected: expected,
        dimension_computed: computed,
        pass: computed == expected && kp.is_direct_sum(),
    })
}

pub fn cmd_prolong(args: &ProlongArgs) -> Result<Report, CliError> {
    let mut report = Report::new("prolong", None, args.common.seed, args.common.degree);
    if let Some(split) = &args.split {
        let (s1, s2) = parse_split(split)?;
        report.push_dimension(kahler_check(s1, s2)?);
        return Ok(report);
    }
    let n = args.n.unwrap_or(0);
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    for (m1, m2) in unitary_splits(n) {
        let (_, p) = u_prolongation(m1, m2);
        let expected = expected_u_prolongation_dim(n);
        report.push_dimension(DimensionCheck {
            space: format!("R^{{{},{}}} + line", 2 * m1, 2 * m2),
            algebra: format!("u({m1},{m2})"),
            dimension_expected: expected,
            dimension_computed: p.dimension(),
            pass: p.dimension() == expected,
        });
    }
    for (s1, s2) in kahler_splits(n) {
        report.push_dimension(kahler_check(s1, s2)?);
    }
    let seq = check_exact_sequence(&QuadraticSpace::split_model(n), false);
    let mut stage = StageReport::new(format!("exact sequence, dim V = {}", 2 * n + 1));
    let [s3, s2v, vl2, l3] = seq.dimensions;
    stage.check(
        "S³V* → S²V*⊗V* injective",
        (!seq.injective).then(|| format!("rank {} of {s3}", seq.rank_inclusion)),
    );
    stage.check(
        "ker ∂ = im sk",
        (!seq.ker_del_eq_im_sk).then(|| format!("rank sk {}, dim ker ∂ {}", seq.rank_sk, vl2 - seq.rank_del)),
    );
    stage.check(
        "∂ surjective",
        (!seq.del_surjective).then(|| format!("rank {} of {l3}", seq.rank_del)),
    );
    stage.check(
        "alternating dimension sum 0",
        (!seq.alternating_sum_zero).then(|| format!("{s3} − {s2v} + {vl2} − {l3}")),
    );
    report.push_stage(stage);
    Ok(report)
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Axioms(a) => cmd_axioms(a),
        Command::Structure(a) => cmd_structure(a),
        Command::Integrable(a) => cmd_integrable(a),
        Command::Adapt(a) => cmd_adapt(a),
        Command::Kahler(a) => cmd_kahler(a),
        Command::Prolong(p) => cmd_prolong(p),
    }
}

/// Run and write the report; returns the process exit code.
pub fn execute(cli: &Cli) -> i32 {
    let report = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = report.to_json();
    match &cli.common().out {
        Some(path) => {
            if let Err(source) = std::fs::write(path, &text) {
                eprintln!(
                    "error: {}",
                    CliError::Output {
                        path: path.display().to_string(),
                        source
                    }
                );
                return 2;
            }
        }
        None => print!("{text}"),
    }
    if report.pass {
        0
    } else {
        1
    }
}
