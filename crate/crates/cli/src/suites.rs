//! Verification suite drivers: backend selection, seeded sampling,
//! and aggregation into a single report per invocation.

use std::sync::Arc;

use anyhow::{bail, Result};

use tenscat_core::abelian::{FgAbelianGroup, GroupHom};
use tenscat_core::complex::{
    AbelianBackend, BoundedComplex, HModuleBackend, LinearBackend, QuiverBackend,
};
use tenscat_core::hopf::builders;
use tenscat_core::intmat::IntMatrix;
use tenscat_core::quiver::Quiver;
use tenscat_core::report::{CaseRecord, Verdict, VerificationReport};
use tenscat_core::sample;
use tenscat_core::scalar::FieldSpec;
use tenscat_core::verify;

/// Parses the field argument grammar: `q`, `fp:P`, or `cyc:N`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    if text == "q" {
        return Ok(FieldSpec::rationals());
    }
    if let Some(p) = text.strip_prefix("fp:") {
        let p: u64 = p.parse().map_err(|_| anyhow::anyhow!("bad prime in {text:?}"))?;
        return Ok(FieldSpec::prime_field(p)?);
    }
    if let Some(n) = text.strip_prefix("cyc:") {
        let n: u64 = n.parse().map_err(|_| anyhow::anyhow!("bad order in {text:?}"))?;
        return Ok(FieldSpec::cyclotomic(n)?);
    }
    bail!("unknown field {text:?}; use q, fp:P, or cyc:N")
}

/// Field to use when none was given: the Taft algebras default to the
/// cyclotomic field of their own order, everything else to the
/// rationals.
pub fn default_field(builtin: &str, n: Option<u64>) -> Result<FieldSpec> {
    if builtin == "taft" {
        if let Some(n) = n {
            return Ok(FieldSpec::cyclotomic(n)?);
        }
    }
    Ok(FieldSpec::rationals())
}

pub fn resolve_field(builtin: &str, n: Option<u64>, field: Option<&str>) -> Result<FieldSpec> {
    match field {
        Some(text) => parse_field(text),
        None => default_field(builtin, n),
    }
}

/// The coefficient context a suite runs over.
pub enum SuiteBackend {
    Hopf(HModuleBackend),
    Quiver(QuiverBackend),
    Integers,
}

impl SuiteBackend {
    pub fn label(&self) -> String {
        match self {
            SuiteBackend::Hopf(b) => format!(
                "modules over a dim {} Hopf algebra over {}",
                b.algebra().dim(),
                b.algebra().field()
            ),
            SuiteBackend::Quiver(b) => format!(
                "representations of a {}-vertex quiver over {}",
                b.quiver().vertices(),
                b.field()
            ),
            SuiteBackend::Integers => "finitely generated abelian groups".to_string(),
        }
    }
}

/// Picks the backend named by `--builtin`: a Hopf algebra name, `a2`
/// for representations of the two-vertex quiver, or `integers`.
pub fn pick_backend(builtin: &str, n: Option<u64>, field: Option<&str>) -> Result<SuiteBackend> {
    match builtin {
        "integers" => Ok(SuiteBackend::Integers),
        "a2" => {
            let field = resolve_field(builtin, n, field)?;
            Ok(SuiteBackend::Quiver(QuiverBackend::new(
                Arc::new(Quiver::a2()),
                field,
            )))
        }
        name => {
            let field = resolve_field(name, n, field)?;
            let algebra = Arc::new(builders::builtin(name, &field, n)?);
            Ok(SuiteBackend::Hopf(HModuleBackend::new(algebra)))
        }
    }
}

/// The integer pair whose total tensor product breaks the Kunneth
/// comparison: a torsion stalk against the two-term complex
/// Z --2--> Z in degrees -1 and 0.
pub fn integer_counterexample_pair(
) -> Result<(BoundedComplex<AbelianBackend>, BoundedComplex<AbelianBackend>)> {
    let b = AbelianBackend::new();
    let x = BoundedComplex::stalk(b.clone(), FgAbelianGroup::cyclic(6), 0);
    let z = FgAbelianGroup::free(1);
    let two = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_i64_rows(&[&[2]]))?;
    let y = BoundedComplex::new(b, -1, vec![z.clone(), z], vec![two])?;
    Ok((x, y))
}

fn summarize_pair_report(
    report: &mut VerificationReport,
    i: usize,
    inputs: String,
    sub: &VerificationReport,
) {
    let id = format!("pair-{i:03}");
    let case = match sub.verdict() {
        Verdict::Pass => CaseRecord::pass(id, inputs),
        Verdict::Fail => {
            let failure = sub.failures().next().expect("fail verdict needs a failing case");
            let detail = failure
                .witness
                .clone()
                .unwrap_or_else(|| "no witness recorded".to_string());
            CaseRecord::fail(id, inputs, format!("{}: {detail}", failure.inputs))
        }
        Verdict::Undetermined => CaseRecord::undetermined(id, inputs),
    };
    report.push(case.with("degree-cases", sub.cases.len().to_string()));
}

/// Kunneth comparison over seeded random pairs; over the integers it
/// runs the fixed counterexample pair instead.
pub fn run_kunneth(
    backend: &SuiteBackend,
    cases: usize,
    seed: u64,
) -> Result<VerificationReport> {
    match backend {
        SuiteBackend::Integers => {
            let (x, y) = integer_counterexample_pair()?;
            let mut report = verify::kunneth_check_abelian(&x, &y)?;
            report.note(
                "fixed pair over the integers: stalk Z/6 against Z --2--> Z in degrees [-1, 0]"
                    .to_string(),
            );
            Ok(report)
        }
        SuiteBackend::Hopf(b) => {
            let all = sample::random_module_complexes(b, 2 * cases, 4, 4, seed)?;
            let mut report = VerificationReport::new("kunneth-suite");
            for i in 0..cases {
                let (x, y) = (&all[2 * i], &all[2 * i + 1]);
                let sub = verify::kunneth_check(x, y)?;
                let inputs = format!(
                    "degrees [{}, {}] x [{}, {}]",
                    x.lo(),
                    x.hi(),
                    y.lo(),
                    y.hi()
                );
                summarize_pair_report(&mut report, i, inputs, &sub);
            }
            report.note(format!("{cases} seeded pairs, seed {seed}, over {}", backend.label()));
            Ok(report)
        }
        SuiteBackend::Quiver(b) => {
            let all = sample::random_quiver_complexes(b, 2 * cases, 3, 4, seed)?;
            let mut report = VerificationReport::new("kunneth-suite");
            for i in 0..cases {
                let (x, y) = (&all[2 * i], &all[2 * i + 1]);
                let sub = verify::kunneth_check(x, y)?;
                let inputs = format!(
                    "degrees [{}, {}] x [{}, {}]",
                    x.lo(),
                    x.hi(),
                    y.lo(),
                    y.hi()
                );
                summarize_pair_report(&mut report, i, inputs, &sub);
            }
            report.note(format!("{cases} seeded pairs, seed {seed}, over {}", backend.label()));
            Ok(report)
        }
    }
}

/// Monoidal aisle conditions at the cut given by `--n` over a seeded
/// sample of complexes.
pub fn run_aisle(
    backend: &SuiteBackend,
    n: i64,
    cases: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let mut report = match backend {
        SuiteBackend::Hopf(b) => {
            let sample = sample::random_module_complexes(b, cases, 4, 3, seed)?;
            verify::monoidal_aisle_check(&sample, n)?
        }
        SuiteBackend::Quiver(b) => {
            let sample = sample::random_quiver_complexes(b, cases, 3, 3, seed)?;
            verify::monoidal_aisle_check(&sample, n)?
        }
        SuiteBackend::Integers => {
            let sample = sample::random_abelian_complexes(cases, 3, seed)?;
            verify::monoidal_aisle_check(&sample, n)?
        }
    };
    report.note(format!("{cases} seeded complexes, seed {seed}, over {}", backend.label()));
    Ok(report)
}

/// Deviation probe over the cuts n in [-2, 2]. A nonzero cut passes
/// when the probe refutes it with an explicit witness pair; the zero
/// cut passes when no sampled instance violates it.
pub fn run_deviation(
    backend: &SuiteBackend,
    cases: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let cuts = [-2i64, -1, 0, 1, 2];
    let probe = match backend {
        SuiteBackend::Hopf(b) => {
            let sample = sample::random_module_complexes(b, cases, 4, 3, seed)?;
            verify::deviation_probe(b, &sample, &cuts)?
        }
        SuiteBackend::Quiver(b) => {
            let sample = sample::random_quiver_complexes(b, cases, 3, 3, seed)?;
            verify::deviation_probe(b, &sample, &cuts)?
        }
        SuiteBackend::Integers => {
            let sample = sample::random_abelian_complexes(cases, 3, seed)?;
            verify::deviation_probe(&AbelianBackend::new(), &sample, &cuts)?
        }
    };
    let mut report = VerificationReport::new("deviation");
    for o in &probe.outcomes {
        let id = if o.n < 0 {
            format!("cut-m{}", -o.n)
        } else {
            format!("cut-{}", o.n)
        };
        let inputs = format!("n = {}", o.n);
        let case = match (o.n, o.report.verdict()) {
            (0, Verdict::Pass) => CaseRecord::pass(id, inputs)
                .with("survived-instances", o.report.cases.len().to_string()),
            (0, Verdict::Fail) => {
                let failure = o.report.failures().next().expect("failing case");
                CaseRecord::fail(
                    id,
                    inputs,
                    failure
                        .witness
                        .clone()
                        .unwrap_or_else(|| "violation without witness".to_string()),
                )
            }
            (_, Verdict::Fail) => {
                let failure = o.report.failures().next().expect("failing case");
                CaseRecord::pass(id, inputs).with("refuted", "yes").with_witness(
                    failure
                        .witness
                        .clone()
                        .unwrap_or_else(|| "witness missing".to_string()),
                )
            }
            (_, Verdict::Pass) => CaseRecord::undetermined(id, inputs)
                .with("refuted", "no witness found"),
            (_, Verdict::Undetermined) => CaseRecord::undetermined(id, inputs),
        };
        report.push(case);
    }
    report.note(
        "a nonzero cut passes when refuted by an explicit witness; the zero cut passes when every sampled instance satisfies it"
            .to_string(),
    );
    report.note(format!("{cases} seeded complexes, seed {seed}, over {}", backend.label()));
    Ok(report)
}

/// Tensor-reducedness over a seeded object sample.
pub fn run_reduced(
    backend: &SuiteBackend,
    cases: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let mut report = match backend {
        SuiteBackend::Hopf(b) => {
            let objs = sample::random_modules(b.algebra(), cases, 4, seed)?;
            verify::tensor_reduced_check(b, &objs)?
        }
        SuiteBackend::Quiver(b) => {
            let objs = sample::random_quiver_reps(b.quiver(), b.field(), cases, 3, seed)?;
            verify::tensor_reduced_check(b, &objs)?
        }
        SuiteBackend::Integers => {
            let b = AbelianBackend::new();
            let objs = [
                FgAbelianGroup::free(1),
                FgAbelianGroup::cyclic(2),
                FgAbelianGroup::cyclic(3),
                FgAbelianGroup::cyclic(6),
                FgAbelianGroup::trivial(),
            ];
            verify::tensor_reduced_check(&b, &objs)?
        }
    };
    report.note(format!("seed {seed}, over {}", backend.label()));
    Ok(report)
}

/// Unit concentration in degree zero.
pub fn run_unit(backend: &SuiteBackend) -> Result<VerificationReport> {
    match backend {
        SuiteBackend::Hopf(b) => Ok(verify::unit_concentration_check(b)?),
        SuiteBackend::Quiver(b) => Ok(verify::unit_concentration_check(b)?),
        SuiteBackend::Integers => Ok(verify::unit_concentration_check(&AbelianBackend::new())?),
    }
}

/// Zig-zag identities for both duals over seeded modules and
/// complexes; Hopf backends only.
pub fn run_dual_zigzag(
    backend: &SuiteBackend,
    cases: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let SuiteBackend::Hopf(b) = backend else {
        bail!("dual complexes need a rigid backend; pick a Hopf algebra builtin");
    };
    let modules = sample::random_modules(b.algebra(), cases, 4, seed)?;
    let complex_count = (2 * cases).div_euclid(5).max(1);
    let complexes = sample::random_module_complexes(b, complex_count, 3, 3, seed + 1)?;
    let mut report = verify::dual_zigzag_check(&modules, &complexes)?;
    report.note(format!(
        "{cases} seeded modules and {complex_count} seeded complexes, seed {seed}, over {}",
        backend.label()
    ));
    Ok(report)
}
