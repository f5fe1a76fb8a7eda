//! Object commands: axiom checks, module arithmetic, and complex
//! operations, each reported through the shared case-record schema.

use std::path::Path;

use anyhow::{bail, Result};

use tenscat_core::complex::{
    dual_complex, dual_complex_right, Backend, BoundedComplex, DualSide,
};
use tenscat_core::hopf::module::{hom_space, is_isomorphic, HModule, IsoOutcome};
use tenscat_core::hopf::HopfAlgebra;
use tenscat_core::report::{CaseRecord, VerificationReport};
use tenscat_core::verify;

use crate::files::{self, AnyComplex};

/// Converts the axiom sweep of an algebra into a report; one case per
/// axiom, witnesses naming the first failing basis tuple.
pub fn axiom_report(h: &HopfAlgebra, label: &str) -> VerificationReport {
    let mut report = VerificationReport::new("hopf-axioms");
    for check in &h.check_axioms().checks {
        let id = check.name.replace(' ', "-");
        let case = if check.passed {
            CaseRecord::pass(id, check.name)
        } else if check.witness.is_empty() {
            CaseRecord::fail(id, check.name, "global identity fails")
        } else {
            CaseRecord::fail(
                id,
                check.name,
                format!("first failing basis tuple {:?}", check.witness),
            )
        };
        report.push(case);
    }
    report.note(format!("algebra: {label}"));
    report.note(format!("dim {}", h.dim()));
    report.note(format!("field {}", h.field()));
    report
}

/// Writes a module file when a path was given, recording the path as
/// a report note either way.
fn emit_module(report: &mut VerificationReport, m: &HModule, out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        files::save_document(path, &files::encode_module(m))?;
        report.note(format!("module written to {}", path.display()));
    }
    Ok(())
}

pub fn module_tensor(left: &HModule, right: &HModule, out: Option<&Path>) -> Result<VerificationReport> {
    let product = left.tensor(right)?;
    let mut report = VerificationReport::new("module-tensor");
    let mut case = CaseRecord::pass(
        "tensor",
        format!("dim {} tensor dim {}", left.dim(), right.dim()),
    )
    .with("result-dim", product.dim().to_string());
    report.note(format!("tensor product has dim {}", product.dim()));
    if product.dim() == 1 {
        let trivial = HModule::trivial(product.algebra().clone());
        match is_isomorphic(&product, &trivial)? {
            IsoOutcome::Isomorphic(w) => {
                case = case
                    .with("isomorphic-to-trivial", "yes")
                    .with_witness(format!("intertwiner {w}"));
                report.note(format!(
                    "isomorphic to the trivial module via intertwiner {w}"
                ));
            }
            IsoOutcome::NotIsomorphic => {
                case = case.with("isomorphic-to-trivial", "no");
                report.note("not isomorphic to the trivial module");
            }
            IsoOutcome::Undetermined => {
                case = case.with("isomorphic-to-trivial", "undetermined");
            }
        }
    }
    report.push(case);
    emit_module(&mut report, &product, out)?;
    Ok(report)
}

/// Dualizes a module and confirms both zig-zag identities for it.
pub fn module_dual(module: &HModule, side: DualSide, out: Option<&Path>) -> Result<VerificationReport> {
    let dual = match side {
        DualSide::Left => module.dual_left()?,
        DualSide::Right => module.dual_right()?,
    };
    let mut report = verify::dual_zigzag_check(core::slice::from_ref(module), &[])?;
    report.note(match side {
        DualSide::Left => format!("left dual has dim {}", dual.dim()),
        DualSide::Right => format!("right dual has dim {}", dual.dim()),
    });
    emit_module(&mut report, &dual, out)?;
    Ok(report)
}

pub fn module_hom(left: &HModule, right: &HModule) -> Result<VerificationReport> {
    let basis = hom_space(left, right)?;
    let mut report = VerificationReport::new("module-hom");
    report.push(
        CaseRecord::pass(
            "hom",
            format!("dim {} to dim {}", left.dim(), right.dim()),
        )
        .with("hom-dim", basis.len().to_string()),
    );
    report.note(format!("hom space has dim {}", basis.len()));
    Ok(report)
}

pub fn module_iso(left: &HModule, right: &HModule) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("module-iso");
    let inputs = format!("dim {} vs dim {}", left.dim(), right.dim());
    let case = match is_isomorphic(left, right)? {
        IsoOutcome::Isomorphic(w) => {
            report.note(format!("isomorphic via intertwiner {w}"));
            CaseRecord::pass("iso", inputs).with_witness(format!("intertwiner {w}"))
        }
        IsoOutcome::NotIsomorphic => CaseRecord::fail("iso", inputs, "no invertible intertwiner"),
        IsoOutcome::Undetermined => CaseRecord::undetermined("iso", inputs),
    };
    report.push(case);
    Ok(report)
}

fn cohomology_cases<B: Backend>(
    report: &mut VerificationReport,
    x: &BoundedComplex<B>,
) -> Result<()> {
    let b = x.backend();
    for n in x.lo()..=x.hi() {
        let h = x.cohomology(n)?;
        let shape = b.describe(&h);
        report.push(
            CaseRecord::pass(format!("d{:03}", n - x.lo()), format!("degree {n}"))
                .with("object", shape.clone()),
        );
        report.note(format!("H^{n}: {shape}"));
    }
    report.note(format!("degrees [{}, {}]", x.lo(), x.hi()));
    Ok(())
}

pub fn complex_cohomology(x: &AnyComplex) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("cohomology");
    match x {
        AnyComplex::Module(x) => cohomology_cases(&mut report, x)?,
        AnyComplex::Quiver(x) => cohomology_cases(&mut report, x)?,
        AnyComplex::Abelian(x) => cohomology_cases(&mut report, x)?,
    }
    Ok(report)
}

fn emit_complex(report: &mut VerificationReport, x: &AnyComplex, out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        files::save_document(path, &files::encode_complex(x))?;
        report.note(format!("complex written to {}", path.display()));
    }
    Ok(())
}

pub fn complex_tensor(left: &AnyComplex, right: &AnyComplex, out: Option<&Path>) -> Result<VerificationReport> {
    let total = match (left, right) {
        (AnyComplex::Module(x), AnyComplex::Module(y)) => {
            if !x.backend().same_context(y.backend()) {
                bail!("the two complexes live over different algebras");
            }
            AnyComplex::Module(x.total_tensor(y)?)
        }
        (AnyComplex::Quiver(x), AnyComplex::Quiver(y)) => {
            if !x.backend().same_context(y.backend()) {
                bail!("the two complexes live over different quivers or fields");
            }
            AnyComplex::Quiver(x.total_tensor(y)?)
        }
        (AnyComplex::Abelian(x), AnyComplex::Abelian(y)) => {
            AnyComplex::Abelian(x.total_tensor(y)?)
        }
        (x, y) => bail!(
            "total tensor needs matching backends, got {} and {}",
            x.backend_name(),
            y.backend_name()
        ),
    };
    let mut report = VerificationReport::new("total-tensor");
    report.push(
        CaseRecord::pass(
            "span",
            format!(
                "[{}, {}] tensor [{}, {}]",
                left.lo(),
                left.hi(),
                right.lo(),
                right.hi()
            ),
        )
        .with("result-degrees", format!("[{}, {}]", total.lo(), total.hi())),
    );
    emit_complex(&mut report, &total, out)?;
    Ok(report)
}

/// Dualizes a complex over a rigid backend; the evaluation and
/// coevaluation chain maps are validated by construction.
pub fn complex_dual(x: &AnyComplex, side: DualSide, out: Option<&Path>) -> Result<VerificationReport> {
    let AnyComplex::Module(x) = x else {
        bail!(
            "dual complexes need a rigid backend, got {}",
            x.backend_name()
        );
    };
    let data = match side {
        DualSide::Left => dual_complex(x)?,
        DualSide::Right => dual_complex_right(x)?,
    };
    let mut report = VerificationReport::new("dual-complex");
    report.push(
        CaseRecord::pass("construction", format!("degrees [{}, {}]", x.lo(), x.hi()))
            .with(
                "side",
                match side {
                    DualSide::Left => "left",
                    DualSide::Right => "right",
                },
            )
            .with(
                "dual-degrees",
                format!("[{}, {}]", data.dual.lo(), data.dual.hi()),
            ),
    );
    report.note("evaluation and coevaluation were validated as chain maps".to_string());
    emit_complex(&mut report, &AnyComplex::Module(data.dual), out)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use tenscat_core::complex::HModuleBackend;
    use tenscat_core::hopf::builders;
    use tenscat_core::report::Verdict;
    use tenscat_core::scalar::FieldSpec;

    fn sweedler() -> Arc<HopfAlgebra> {
        Arc::new(builders::sweedler(&FieldSpec::rationals()).unwrap())
    }

    #[test]
    fn axiom_report_is_all_pass_for_sweedler() {
        let h = sweedler();
        let report = axiom_report(&h, "sweedler");
        assert_eq!(report.verdict(), Verdict::Pass);
        assert!(report.notes.iter().any(|n| n == "dim 4"));
    }

    #[test]
    fn sign_module_squares_to_the_trivial_module() {
        let q = FieldSpec::rationals();
        let h = Arc::new(builders::group_algebra("c2", &q).unwrap());
        let regular = HModule::regular(h.clone());
        let basis = [
            tenscat_core::scalar::ExactScalar::one(&q),
            tenscat_core::scalar::ExactScalar::from_int(&q, -1),
        ];
        let (sign, _) = regular.submodule_generated_by(&[basis.to_vec()]).unwrap();
        assert_eq!(sign.dim(), 1);
        let report = module_tensor(&sign, &sign, None).unwrap();
        assert_eq!(report.verdict(), Verdict::Pass);
        let case = &report.cases[0];
        assert!(case
            .data
            .iter()
            .any(|(k, v)| k == "isomorphic-to-trivial" && v == "yes"));
        assert!(case.witness.is_some());
    }

    #[test]
    fn module_dual_confirms_both_zigzags() {
        let h = sweedler();
        let report = module_dual(&HModule::regular(h), DualSide::Left, None).unwrap();
        assert_eq!(report.verdict(), Verdict::Pass);
        assert_eq!(report.cases.len(), 2);
    }

    #[test]
    fn hom_between_modules_over_different_algebras_is_an_error() {
        let q = FieldSpec::rationals();
        let a = Arc::new(builders::group_algebra("c2", &q).unwrap());
        let b = Arc::new(builders::group_algebra("c3", &q).unwrap());
        let m = HModule::trivial(a);
        let n = HModule::trivial(b);
        assert!(module_hom(&m, &n).is_err());
    }

    #[test]
    fn complex_dual_rejects_non_rigid_backends() {
        let x = AnyComplex::Abelian(BoundedComplex::stalk(
            tenscat_core::complex::AbelianBackend::new(),
            tenscat_core::abelian::FgAbelianGroup::cyclic(2),
            0,
        ));
        assert!(complex_dual(&x, DualSide::Left, None).is_err());
    }

    #[test]
    fn complex_cohomology_describes_every_degree() {
        let h = sweedler();
        let b = HModuleBackend::new(h.clone());
        let x = BoundedComplex::stalk(b, HModule::trivial(h), 2);
        let report = complex_cohomology(&x_any(x)).unwrap();
        assert_eq!(report.cases.len(), 1);
        assert_eq!(report.cases[0].inputs, "degree 2");
    }

    fn x_any(x: BoundedComplex<HModuleBackend>) -> AnyComplex {
        AnyComplex::Module(x)
    }
}
