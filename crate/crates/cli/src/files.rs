//! JSON object files for algebras, modules, representations, and
//! complexes.
//!
//! Exact scalars are serialized as strings: rationals as `"p/q"`,
//! prime field elements as `"k mod p"`, cyclotomic elements as lists
//! of rational coefficient strings. Matrices carry explicit shapes so
//! that empty rows and columns survive the round trip. Every document
//! emitted by the binary re-parses to a structurally equal value.

use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use tenscat_core::abelian::{FgAbelianGroup, GroupHom};
use tenscat_core::complex::{
    AbelianBackend, BoundedComplex, HModuleBackend, LinearBackend, QuiverBackend,
};
use tenscat_core::hopf::module::HModule;
use tenscat_core::hopf::HopfAlgebra;
use tenscat_core::intmat::IntMatrix;
use tenscat_core::matrix::ExactMatrix;
use tenscat_core::scalar::{ExactScalar, FieldSpec};
use tenscat_core::quiver::{Quiver, QuiverRep};

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FieldDto {
    Rationals,
    PrimeField { p: u64 },
    Cyclotomic { n: u64 },
}

impl FieldDto {
    pub fn from_spec(spec: &FieldSpec) -> FieldDto {
        match spec {
            FieldSpec::Rationals => FieldDto::Rationals,
            FieldSpec::PrimeField(p) => FieldDto::PrimeField { p: *p },
            FieldSpec::Cyclotomic(c) => FieldDto::Cyclotomic { n: c.n() },
        }
    }

    pub fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldDto::Rationals => Ok(FieldSpec::rationals()),
            FieldDto::PrimeField { p } => Ok(FieldSpec::prime_field(*p)?),
            FieldDto::Cyclotomic { n } => Ok(FieldSpec::cyclotomic(*n)?),
        }
    }
}

/// One exact scalar: a string for rational and prime field elements,
/// a list of rational strings for cyclotomic coefficients.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum ScalarDto {
    Text(String),
    Coeffs(Vec<String>),
}

pub fn encode_scalar(s: &ExactScalar) -> ScalarDto {
    if let Some(q) = s.as_rational() {
        ScalarDto::Text(q.to_string())
    } else if let Some(r) = s.as_residue() {
        ScalarDto::Text(format!("{r} mod {}", s.field().characteristic()))
    } else {
        let coeffs = s.as_coeffs().expect("scalar representations are exhaustive");
        ScalarDto::Coeffs(coeffs.iter().map(|c| c.to_string()).collect())
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let body = text.trim();
    let (numer, denom) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let bad = |e: &dyn core::fmt::Display| anyhow!("bad rational literal {text:?}: {e}");
    let n = BigInt::from_str(numer).map_err(|e| bad(&e))?;
    let d = BigInt::from_str(denom).map_err(|e| bad(&e))?;
    if d == BigInt::from(0) {
        bail!("bad rational literal {text:?}: zero denominator");
    }
    Ok(BigRational::new(n, d))
}

pub fn decode_scalar(field: &FieldSpec, dto: &ScalarDto) -> Result<ExactScalar> {
    match (dto, field) {
        (ScalarDto::Text(t), FieldSpec::PrimeField(p)) => {
            let body = match t.split_once(" mod ") {
                Some((residue, modulus)) => {
                    let m: u64 = modulus
                        .trim()
                        .parse()
                        .map_err(|_| anyhow!("bad modulus in {t:?}"))?;
                    if m != *p {
                        bail!("scalar {t:?} has modulus {m}, the field has {p}");
                    }
                    residue
                }
                None => t.as_str(),
            };
            let k: i64 = body
                .trim()
                .parse()
                .map_err(|_| anyhow!("bad residue in {t:?}"))?;
            Ok(ExactScalar::from_int(field, k))
        }
        (ScalarDto::Text(t), _) => {
            Ok(ExactScalar::from_big_rational(field, parse_rational(t)?)?)
        }
        (ScalarDto::Coeffs(list), FieldSpec::Cyclotomic(_)) => {
            let coeffs: Vec<BigRational> = list
                .iter()
                .map(|t| parse_rational(t))
                .collect::<Result<_>>()?;
            Ok(ExactScalar::from_coeffs(field, &coeffs)?)
        }
        (ScalarDto::Coeffs(_), _) => {
            bail!("coefficient-list scalars only make sense over a cyclotomic field")
        }
    }
}

/// A dense matrix with explicit shape; `entries` is row major.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<ScalarDto>>,
}

pub fn encode_matrix(m: &ExactMatrix) -> MatrixDto {
    MatrixDto {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| encode_scalar(m.get(r, c))).collect())
            .collect(),
    }
}

pub fn decode_matrix(field: &FieldSpec, dto: &MatrixDto) -> Result<ExactMatrix> {
    if dto.entries.len() != dto.rows {
        bail!("matrix declares {} rows but lists {}", dto.rows, dto.entries.len());
    }
    let mut grid = Vec::with_capacity(dto.rows);
    for (r, row) in dto.entries.iter().enumerate() {
        if row.len() != dto.cols {
            bail!("matrix row {r} has {} entries, expected {}", row.len(), dto.cols);
        }
        let decoded: Vec<ExactScalar> = row
            .iter()
            .map(|s| decode_scalar(field, s))
            .collect::<Result<_>>()
            .with_context(|| format!("matrix row {r}"))?;
        grid.push(decoded);
    }
    Ok(ExactMatrix::from_fn(field, dto.rows, dto.cols, |r, c| {
        grid[r][c].clone()
    }))
}

fn decode_scalars(field: &FieldSpec, list: &[ScalarDto], what: &str) -> Result<Vec<ExactScalar>> {
    list.iter()
        .map(|s| decode_scalar(field, s))
        .collect::<Result<_>>()
        .with_context(|| what.to_string())
}

/// An integer matrix with explicit shape; entries are decimal strings.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct IntMatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

pub fn encode_int_matrix(m: &IntMatrix) -> IntMatrixDto {
    IntMatrixDto {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
            .collect(),
    }
}

pub fn decode_int_matrix(dto: &IntMatrixDto) -> Result<IntMatrix> {
    if dto.entries.len() != dto.rows {
        bail!("matrix declares {} rows but lists {}", dto.rows, dto.entries.len());
    }
    let mut grid = Vec::with_capacity(dto.rows);
    for (r, row) in dto.entries.iter().enumerate() {
        if row.len() != dto.cols {
            bail!("matrix row {r} has {} entries, expected {}", row.len(), dto.cols);
        }
        let decoded: Vec<BigInt> = row
            .iter()
            .map(|t| BigInt::from_str(t.trim()).map_err(|e| anyhow!("bad integer {t:?}: {e}")))
            .collect::<Result<_>>()?;
        grid.push(decoded);
    }
    Ok(IntMatrix::from_fn(dto.rows, dto.cols, |r, c| {
        grid[r][c].clone()
    }))
}

/// A Hopf algebra by structure constants. `mult` is flat with
/// `mult[(i*dim + j)*dim + k]` the coefficient of e_k in e_i e_j;
/// `comult` is dim^2 x dim with column j holding the coordinates of
/// the comultiplication of e_j.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDto {
    pub dim: usize,
    pub field: FieldDto,
    pub mult: Vec<ScalarDto>,
    pub unit: Vec<ScalarDto>,
    pub comult: MatrixDto,
    pub counit: Vec<ScalarDto>,
    pub antipode: MatrixDto,
}

pub fn encode_algebra(h: &HopfAlgebra) -> AlgebraDto {
    AlgebraDto {
        dim: h.dim(),
        field: FieldDto::from_spec(h.field()),
        mult: h.mult_table().iter().map(encode_scalar).collect(),
        unit: h.unit_vec().iter().map(encode_scalar).collect(),
        comult: encode_matrix(h.comult_matrix()),
        counit: h.counit_vec().iter().map(encode_scalar).collect(),
        antipode: encode_matrix(h.antipode_matrix()),
    }
}

pub fn decode_algebra(dto: &AlgebraDto) -> Result<HopfAlgebra> {
    let field = dto.field.to_spec()?;
    let mult = decode_scalars(&field, &dto.mult, "mult table")?;
    let unit = decode_scalars(&field, &dto.unit, "unit vector")?;
    let comult = decode_matrix(&field, &dto.comult).context("comult matrix")?;
    let counit = decode_scalars(&field, &dto.counit, "counit vector")?;
    let antipode = decode_matrix(&field, &dto.antipode).context("antipode matrix")?;
    Ok(HopfAlgebra::new(
        field, dto.dim, mult, unit, comult, counit, antipode, None,
    )?)
}

/// A right module over an embedded Hopf algebra; `action[i]` is the
/// dim x dim matrix of the basis element e_i acting.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ModuleDto {
    pub algebra: AlgebraDto,
    pub dim: usize,
    pub action: Vec<MatrixDto>,
}

pub fn encode_module(m: &HModule) -> ModuleDto {
    ModuleDto {
        algebra: encode_algebra(m.algebra()),
        dim: m.dim(),
        action: m.action().iter().map(encode_matrix).collect(),
    }
}

/// Decodes and fully validates a module, including the module law.
pub fn decode_module(dto: &ModuleDto) -> Result<HModule> {
    let algebra = Arc::new(decode_algebra(&dto.algebra)?);
    let field = algebra.field().clone();
    let action = dto
        .action
        .iter()
        .map(|m| decode_matrix(&field, m))
        .collect::<Result<Vec<_>>>()
        .context("action matrices")?;
    let module = HModule::new(algebra, dto.dim, action)?;
    module.check_law()?;
    Ok(module)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ModuleObjectDto {
    pub dim: usize,
    pub action: Vec<MatrixDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct QuiverObjectDto {
    pub dims: Vec<usize>,
    pub maps: Vec<MatrixDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct AbelianObjectDto {
    pub gens: usize,
    pub relations: IntMatrixDto,
}

/// A bounded complex, tagged by its backend. Objects are listed from
/// degree `lo` upward; differential k maps object k to object k+1.
/// Module and quiver differentials are raw matrices in the stacked
/// coordinates of their objects.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "backend", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ComplexDto {
    Module {
        algebra: AlgebraDto,
        lo: i64,
        hi: i64,
        objects: Vec<ModuleObjectDto>,
        differentials: Vec<MatrixDto>,
    },
    Quiver {
        field: FieldDto,
        vertices: usize,
        arrows: Vec<(usize, usize)>,
        lo: i64,
        hi: i64,
        objects: Vec<QuiverObjectDto>,
        differentials: Vec<MatrixDto>,
    },
    Abelian {
        lo: i64,
        hi: i64,
        objects: Vec<AbelianObjectDto>,
        differentials: Vec<IntMatrixDto>,
    },
}

/// A loaded complex over whichever backend its file declared.
pub enum AnyComplex {
    Module(BoundedComplex<HModuleBackend>),
    Quiver(BoundedComplex<QuiverBackend>),
    Abelian(BoundedComplex<AbelianBackend>),
}

impl AnyComplex {
    pub fn backend_name(&self) -> &'static str {
        match self {
            AnyComplex::Module(_) => "module",
            AnyComplex::Quiver(_) => "quiver",
            AnyComplex::Abelian(_) => "abelian",
        }
    }

    pub fn lo(&self) -> i64 {
        match self {
            AnyComplex::Module(x) => x.lo(),
            AnyComplex::Quiver(x) => x.lo(),
            AnyComplex::Abelian(x) => x.lo(),
        }
    }

    pub fn hi(&self) -> i64 {
        match self {
            AnyComplex::Module(x) => x.hi(),
            AnyComplex::Quiver(x) => x.hi(),
            AnyComplex::Abelian(x) => x.hi(),
        }
    }
}

pub fn encode_complex(x: &AnyComplex) -> ComplexDto {
    match x {
        AnyComplex::Module(x) => {
            let b = x.backend();
            let objects = (x.lo()..=x.hi())
                .map(|n| {
                    let m = x.obj(n);
                    ModuleObjectDto {
                        dim: m.dim(),
                        action: m.action().iter().map(encode_matrix).collect(),
                    }
                })
                .collect();
            let differentials = (x.lo()..x.hi())
                .map(|n| encode_matrix(&b.raw_matrix(&x.diff(n))))
                .collect();
            ComplexDto::Module {
                algebra: encode_algebra(b.algebra()),
                lo: x.lo(),
                hi: x.hi(),
                objects,
                differentials,
            }
        }
        AnyComplex::Quiver(x) => {
            let b = x.backend();
            let objects = (x.lo()..=x.hi())
                .map(|n| {
                    let rep = x.obj(n);
                    QuiverObjectDto {
                        dims: rep.dims().to_vec(),
                        maps: rep.maps().iter().map(encode_matrix).collect(),
                    }
                })
                .collect();
            let differentials = (x.lo()..x.hi())
                .map(|n| encode_matrix(&b.raw_matrix(&x.diff(n))))
                .collect();
            ComplexDto::Quiver {
                field: FieldDto::from_spec(b.field()),
                vertices: b.quiver().vertices(),
                arrows: b.quiver().arrows().to_vec(),
                lo: x.lo(),
                hi: x.hi(),
                objects,
                differentials,
            }
        }
        AnyComplex::Abelian(x) => {
            let objects = (x.lo()..=x.hi())
                .map(|n| {
                    let g = x.obj(n);
                    AbelianObjectDto {
                        gens: g.gens(),
                        relations: encode_int_matrix(g.relations()),
                    }
                })
                .collect();
            let differentials = (x.lo()..x.hi())
                .map(|n| encode_int_matrix(x.diff(n).matrix()))
                .collect();
            ComplexDto::Abelian {
                lo: x.lo(),
                hi: x.hi(),
                objects,
                differentials,
            }
        }
    }
}

fn check_degree_span(lo: i64, hi: i64, objects: usize, differentials: usize) -> Result<()> {
    if objects == 0 {
        bail!("a complex file needs at least one object");
    }
    if hi - lo + 1 != objects as i64 {
        bail!("degrees [{lo}, {hi}] do not fit {objects} objects");
    }
    if differentials + 1 != objects {
        bail!("{objects} objects need {} differentials, got {differentials}", objects - 1);
    }
    Ok(())
}

/// Decodes and fully validates a complex: object laws, morphism
/// equations for every differential, and d^2 = 0.
pub fn decode_complex(dto: &ComplexDto) -> Result<AnyComplex> {
    match dto {
        ComplexDto::Module {
            algebra,
            lo,
            hi,
            objects,
            differentials,
        } => {
            check_degree_span(*lo, *hi, objects.len(), differentials.len())?;
            let algebra = Arc::new(decode_algebra(algebra)?);
            let field = algebra.field().clone();
            let backend = HModuleBackend::new(algebra.clone());
            let objs: Vec<HModule> = objects
                .iter()
                .enumerate()
                .map(|(k, o)| {
                    let action = o
                        .action
                        .iter()
                        .map(|m| decode_matrix(&field, m))
                        .collect::<Result<Vec<_>>>()?;
                    let module = HModule::new(algebra.clone(), o.dim, action)
                        .with_context(|| format!("object at degree {}", lo + k as i64))?;
                    module.check_law()?;
                    Ok(module)
                })
                .collect::<Result<_>>()?;
            let diffs = differentials
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    let raw = decode_matrix(&field, m)?;
                    Ok(backend.mor_from_raw(&objs[k], &objs[k + 1], raw).with_context(
                        || format!("differential at degree {}", lo + k as i64),
                    )?)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyComplex::Module(BoundedComplex::new(
                backend, *lo, objs, diffs,
            )?))
        }
        ComplexDto::Quiver {
            field,
            vertices,
            arrows,
            lo,
            hi,
            objects,
            differentials,
        } => {
            check_degree_span(*lo, *hi, objects.len(), differentials.len())?;
            let field = field.to_spec()?;
            let quiver = Arc::new(Quiver::new(*vertices, arrows.clone())?);
            let backend = QuiverBackend::new(quiver.clone(), field.clone());
            let objs: Vec<QuiverRep> = objects
                .iter()
                .enumerate()
                .map(|(k, o)| {
                    let maps = o
                        .maps
                        .iter()
                        .map(|m| decode_matrix(&field, m))
                        .collect::<Result<Vec<_>>>()?;
                    QuiverRep::new(quiver.clone(), field.clone(), o.dims.clone(), maps)
                        .with_context(|| format!("object at degree {}", lo + k as i64))
                })
                .collect::<Result<_>>()?;
            let diffs = differentials
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    let raw = decode_matrix(&field, m)?;
                    Ok(backend.mor_from_raw(&objs[k], &objs[k + 1], raw).with_context(
                        || format!("differential at degree {}", lo + k as i64),
                    )?)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyComplex::Quiver(BoundedComplex::new(
                backend, *lo, objs, diffs,
            )?))
        }
        ComplexDto::Abelian {
            lo,
            hi,
            objects,
            differentials,
        } => {
            check_degree_span(*lo, *hi, objects.len(), differentials.len())?;
            let objs: Vec<FgAbelianGroup> = objects
                .iter()
                .enumerate()
                .map(|(k, o)| {
                    FgAbelianGroup::new(o.gens, decode_int_matrix(&o.relations)?)
                        .with_context(|| format!("object at degree {}", lo + k as i64))
                })
                .collect::<Result<_>>()?;
            let diffs = differentials
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    GroupHom::new(objs[k].clone(), objs[k + 1].clone(), decode_int_matrix(m)?)
                        .with_context(|| format!("differential at degree {}", lo + k as i64))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyComplex::Abelian(BoundedComplex::new(
                AbelianBackend::new(),
                *lo,
                objs,
                diffs,
            )?))
        }
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("parsing {}", path.display()))
}

pub fn load_algebra(path: &Path) -> Result<HopfAlgebra> {
    let text = read_to_string(path)?;
    let dto: AlgebraDto = parse_json(path, &text)?;
    decode_algebra(&dto).with_context(|| format!("validating {}", path.display()))
}

pub fn load_module(path: &Path) -> Result<HModule> {
    let text = read_to_string(path)?;
    let dto: ModuleDto = parse_json(path, &text)?;
    decode_module(&dto).with_context(|| format!("validating {}", path.display()))
}

pub fn load_complex(path: &Path) -> Result<AnyComplex> {
    let text = read_to_string(path)?;
    let dto: ComplexDto = parse_json(path, &text)?;
    decode_complex(&dto).with_context(|| format!("validating {}", path.display()))
}

pub fn save_document<T: Serialize>(path: &Path, doc: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
