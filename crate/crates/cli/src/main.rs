//! tenscat: exact construction and verification of Hopf algebras,
//! their module categories, and bounded complexes with total tensor
//! structure.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 input or
//! usage error, 3 a check came back undetermined.

mod files;
mod ops;
mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use tenscat_core::complex::{BoundedComplex, DualSide, HModuleBackend};
use tenscat_core::hopf::builders;
use tenscat_core::hopf::module::HModule;
use tenscat_core::report::{Verdict, VerificationReport};
use tenscat_core::verify;

#[derive(Parser)]
#[command(
    name = "tenscat",
    version,
    about = "Exact workbench for Hopf algebras, module categories, and bounded complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and axiom-check Hopf algebras.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Tensor, dualize, and compare module files.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Cohomology, total tensor, and duals of complex files.
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Per-degree cohomology comparison for total tensor products.
    Kunneth,
    /// Monoidal aisle conditions for the standard t-structure.
    Aisle,
    /// Refute nonzero deviation cuts, confirm the zero cut on samples.
    Deviation,
    /// Tensor-reducedness of sampled objects.
    Reduced,
    /// Unit object cohomology concentration.
    Unit,
    /// Zig-zag identities for left and right duals.
    DualZigzag,
    /// The integer pair separating the sum and total cohomologies.
    Z6Counterexample,
    /// Defining values and square of the representation endofunctor.
    A2Functor,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Copy, Clone, ValueEnum)]
enum Side {
    Left,
    Right,
}

impl From<Side> for DualSide {
    fn from(side: Side) -> DualSide {
        match side {
            Side::Left => DualSide::Left,
            Side::Right => DualSide::Right,
        }
    }
}

#[derive(Args)]
struct OutputOpts {
    /// Report format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the rendered report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Format flag alone, for commands whose `--out` is an object file.
#[derive(Args)]
struct FormatOpt {
    /// Report format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyOpts {
    /// Backend: a built-in Hopf algebra name, `a2`, or `integers`.
    #[arg(long, default_value = "sweedler")]
    builtin: String,
    /// Numeric parameter: Taft order, or object bound for a2-functor.
    #[arg(long)]
    n: Option<u64>,
    /// Scalar field: `q`, `fp:P`, or `cyc:N`.
    #[arg(long)]
    field: Option<String>,
    /// Sample size for seeded suites.
    #[arg(long, default_value_t = 25)]
    cases: usize,
    /// Random seed; fixed seed and config give identical output bytes.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check the Hopf axioms of a built-in or file algebra.
    Check {
        /// Built-in name; see `algebra names`.
        #[arg(long, conflicts_with = "input")]
        builtin: Option<String>,
        /// Taft order when the builtin is `taft`.
        #[arg(long)]
        n: Option<u64>,
        /// Scalar field: `q`, `fp:P`, or `cyc:N`.
        #[arg(long)]
        field: Option<String>,
        /// Algebra file to check instead of a built-in.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Write a built-in algebra to an object file.
    Emit {
        #[arg(long)]
        builtin: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        field: Option<String>,
        /// Destination path for the object file.
        #[arg(long)]
        out: PathBuf,
    },
    /// List the built-in algebra names.
    Names,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ModuleKind {
    Trivial,
    Regular,
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Write a standard module of a built-in algebra to a file.
    Emit {
        #[arg(long)]
        builtin: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        field: Option<String>,
        /// Which module: the trivial one or the regular representation.
        #[arg(long, value_enum, default_value_t = ModuleKind::Regular)]
        kind: ModuleKind,
        /// Destination path for the object file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Tensor two module files over the same algebra.
    Tensor {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Write the resulting module file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Dualize a module file and confirm the zig-zag identities.
    Dual {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
        /// Write the dual module file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Dimension of the space of module maps between two files.
    Hom {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Search for a module isomorphism between two files.
    Iso {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Write the stalk complex of a module file to a file.
    Stalk {
        /// Module file to place in a single degree.
        #[arg(long)]
        module: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        degree: i64,
        /// Destination path for the object file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Cohomology of a complex file in every degree.
    Cohomology {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Total tensor product of two complex files.
    Tensor {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Write the resulting complex file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Dual of a complex file over a rigid backend.
    Dual {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
        /// Write the dual complex file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        format: FormatOpt,
    },
}

fn verdict_code(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Undetermined => 3,
    }
}

/// Prints the report in the chosen format, mirrors the bytes to
/// `mirror` when given, and returns the exit code for the verdict.
fn finish(report: &VerificationReport, format: Format, mirror: Option<&PathBuf>) -> Result<u8> {
    let body = match format {
        Format::Text => report.render_text(),
        Format::Structured => {
            let mut s = report.render_structured();
            s.push('\n');
            s
        }
    };
    print!("{body}");
    if let Some(path) = mirror {
        fs::write(path, &body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(verdict_code(report.verdict()))
}

fn run_verify(suite: Suite, opts: &VerifyOpts) -> Result<u8> {
    let report = match suite {
        Suite::Z6Counterexample => verify::z6_counterexample()?,
        Suite::A2Functor => {
            let field = match &opts.field {
                Some(text) => suites::parse_field(text)?,
                None => tenscat_core::scalar::FieldSpec::rationals(),
            };
            let max = opts.n.unwrap_or(3) as usize;
            verify::a2_functor_check(&field, max)?
        }
        _ => {
            let backend = suites::pick_backend(&opts.builtin, opts.n, opts.field.as_deref())?;
            match suite {
                Suite::Kunneth => suites::run_kunneth(&backend, opts.cases, opts.seed)?,
                Suite::Aisle => suites::run_aisle(&backend, 0, opts.cases, opts.seed)?,
                Suite::Deviation => suites::run_deviation(&backend, opts.cases, opts.seed)?,
                Suite::Reduced => suites::run_reduced(&backend, opts.cases, opts.seed)?,
                Suite::Unit => suites::run_unit(&backend)?,
                Suite::DualZigzag => suites::run_dual_zigzag(&backend, opts.cases, opts.seed)?,
                Suite::Z6Counterexample | Suite::A2Functor => unreachable!(),
            }
        }
    };
    finish(&report, opts.output.format, opts.output.out.as_ref())
}

fn run_algebra(cmd: &AlgebraCmd) -> Result<u8> {
    match cmd {
        AlgebraCmd::Check {
            builtin,
            n,
            field,
            input,
            output,
        } => {
            let (algebra, label) = match (input, builtin) {
                (Some(path), _) => (files::load_algebra(path)?, path.display().to_string()),
                (None, Some(name)) => {
                    let spec = suites::resolve_field(name, *n, field.as_deref())?;
                    (builders::builtin(name, &spec, *n)?, name.clone())
                }
                (None, None) => bail!("pass --builtin NAME or --input PATH"),
            };
            let report = ops::axiom_report(&algebra, &label);
            finish(&report, output.format, output.out.as_ref())
        }
        AlgebraCmd::Emit {
            builtin,
            n,
            field,
            out,
        } => {
            let spec = suites::resolve_field(builtin, *n, field.as_deref())?;
            let algebra = builders::builtin(builtin, &spec, *n)?;
            files::save_document(out, &files::encode_algebra(&algebra))?;
            println!(
                "wrote {builtin}: dim {} over {} to {}",
                algebra.dim(),
                algebra.field(),
                out.display()
            );
            Ok(0)
        }
        AlgebraCmd::Names => {
            for name in builders::builtin_names() {
                println!("{name}");
            }
            Ok(0)
        }
    }
}

fn run_module(cmd: &ModuleCmd) -> Result<u8> {
    match cmd {
        ModuleCmd::Emit {
            builtin,
            n,
            field,
            kind,
            out,
        } => {
            let spec = suites::resolve_field(builtin, *n, field.as_deref())?;
            let algebra = Arc::new(builders::builtin(builtin, &spec, *n)?);
            let module = match kind {
                ModuleKind::Trivial => HModule::trivial(algebra),
                ModuleKind::Regular => HModule::regular(algebra),
            };
            files::save_document(out, &files::encode_module(&module))?;
            println!(
                "wrote the {} module of {builtin}: dim {} to {}",
                match kind {
                    ModuleKind::Trivial => "trivial",
                    ModuleKind::Regular => "regular",
                },
                module.dim(),
                out.display()
            );
            Ok(0)
        }
        ModuleCmd::Tensor {
            left,
            right,
            out,
            format,
        } => {
            let l = files::load_module(left)?;
            let r = files::load_module(right)?;
            let report = ops::module_tensor(&l, &r, out.as_deref())?;
            finish(&report, format.format, None)
        }
        ModuleCmd::Dual {
            input,
            side,
            out,
            format,
        } => {
            let m = files::load_module(input)?;
            let report = ops::module_dual(&m, (*side).into(), out.as_deref())?;
            finish(&report, format.format, None)
        }
        ModuleCmd::Hom {
            left,
            right,
            output,
        } => {
            let l = files::load_module(left)?;
            let r = files::load_module(right)?;
            let report = ops::module_hom(&l, &r)?;
            finish(&report, output.format, output.out.as_ref())
        }
        ModuleCmd::Iso {
            left,
            right,
            output,
        } => {
            let l = files::load_module(left)?;
            let r = files::load_module(right)?;
            let report = ops::module_iso(&l, &r)?;
            finish(&report, output.format, output.out.as_ref())
        }
    }
}

fn run_complex(cmd: &ComplexCmd) -> Result<u8> {
    match cmd {
        ComplexCmd::Stalk {
            module,
            degree,
            out,
        } => {
            let m = files::load_module(module)?;
            let backend = HModuleBackend::new(m.algebra().clone());
            let x = BoundedComplex::stalk(backend, m, *degree);
            files::save_document(out, &files::encode_complex(&files::AnyComplex::Module(x)))?;
            println!("wrote stalk complex in degree {degree} to {}", out.display());
            Ok(0)
        }
        ComplexCmd::Cohomology { input, output } => {
            let x = files::load_complex(input)?;
            let report = ops::complex_cohomology(&x)?;
            finish(&report, output.format, output.out.as_ref())
        }
        ComplexCmd::Tensor {
            left,
            right,
            out,
            format,
        } => {
            let l = files::load_complex(left)?;
            let r = files::load_complex(right)?;
            let report = ops::complex_tensor(&l, &r, out.as_deref())?;
            finish(&report, format.format, None)
        }
        ComplexCmd::Dual {
            input,
            side,
            out,
            format,
        } => {
            let x = files::load_complex(input)?;
            let report = ops::complex_dual(&x, (*side).into(), out.as_deref())?;
            finish(&report, format.format, None)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Algebra { cmd } => run_algebra(cmd),
        Command::Module { cmd } => run_module(cmd),
        Command::Complex { cmd } => run_complex(cmd),
        Command::Verify { suite, opts } => run_verify(*suite, opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
