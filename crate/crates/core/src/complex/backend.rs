//! Coefficient backends for bounded complexes.
//!
//! A backend packages an additive tensor category with enough exactness
//! structure to compute cohomology: kernels and cokernels together with
//! their universal factorizations, finite direct sums with inclusions
//! and projections, and a tensor product on objects and morphisms.
//!
//! Three backends are provided: right modules over a fixed Hopf algebra
//! ([`HModuleBackend`]), representations of a fixed quiver under the
//! pointwise tensor product ([`QuiverBackend`]), and finitely generated
//! abelian groups over the integers ([`AbelianBackend`]). The first two
//! are linear over an exact field and additionally expose their raw
//! coordinate structure through [`LinearBackend`].

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::{FgAbelianGroup, GroupHom};
use crate::error::Error;
use crate::hopf::module::{self, HModule, IsoOutcome, ModuleMor};
use crate::hopf::HopfAlgebra;
use crate::intmat::IntMatrix;
use crate::matrix::ExactMatrix;
use crate::quiver::{same_quiver, A2Object, Quiver, QuiverMor, QuiverRep};
use crate::scalar::FieldSpec;
use crate::Result;

/// Outcome of an object isomorphism test.
///
/// `No` is always definitive. `Undetermined` records that a search was
/// exhausted without a verdict; it is never used to encode a negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Yes,
    No,
    Undetermined,
}

/// An additive tensor category with computable kernels and cokernels.
///
/// Kernels come with their inclusion, cokernels with their projection,
/// and both factorizations (`lift_through_mono`, `descend_through_epi`)
/// report failure when the universal property does not apply.
pub trait Backend: Clone {
    type Obj: Clone;
    type Mor: Clone;

    /// Whether two backend values describe the same category, so that
    /// their objects may be mixed.
    fn same_context(&self, other: &Self) -> bool;

    fn zero_obj(&self) -> Self::Obj;
    fn unit_obj(&self) -> Self::Obj;
    fn is_zero_obj(&self, x: &Self::Obj) -> bool;
    /// Equality of objects as presented data, not up to isomorphism.
    fn obj_eq(&self, a: &Self::Obj, b: &Self::Obj) -> bool;
    /// A short human-readable size descriptor for reports.
    fn describe(&self, x: &Self::Obj) -> String;

    /// Direct sum of the parts in order; empty input gives the zero
    /// object and a single part is returned unchanged.
    fn direct_sum(&self, parts: &[Self::Obj]) -> Result<Self::Obj>;
    fn incl(&self, parts: &[Self::Obj], i: usize) -> Result<Self::Mor>;
    fn proj(&self, parts: &[Self::Obj], i: usize) -> Result<Self::Mor>;

    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn zero_mor(&self, source: &Self::Obj, target: &Self::Obj) -> Self::Mor;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// Composition g after f.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn add_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn neg_mor(&self, f: &Self::Mor) -> Self::Mor;
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool>;
    fn is_zero_mor(&self, f: &Self::Mor) -> Result<bool>;
    fn mor_source(&self, f: &Self::Mor) -> Self::Obj;
    fn mor_target(&self, f: &Self::Mor) -> Self::Obj;

    /// Kernel object with its inclusion into the source of f.
    fn kernel(&self, f: &Self::Mor) -> Result<(Self::Obj, Self::Mor)>;
    /// Cokernel object with the projection from the target of f.
    fn cokernel(&self, f: &Self::Mor) -> Result<(Self::Obj, Self::Mor)>;
    /// The unique g with mono . g = f, for f landing in the image.
    fn lift_through_mono(&self, f: &Self::Mor, mono: &Self::Mor) -> Result<Self::Mor>;
    /// The unique g with g . epi = f, for f vanishing on ker(epi).
    fn descend_through_epi(&self, f: &Self::Mor, epi: &Self::Mor) -> Result<Self::Mor>;

    fn mor_is_iso(&self, f: &Self::Mor) -> Result<bool>;
    fn obj_iso(&self, a: &Self::Obj, b: &Self::Obj) -> Result<IsoVerdict>;

    /// Whether the backend supplies duals, evaluation and coevaluation.
    fn has_duals(&self) -> bool;
    fn dual_obj(&self, x: &Self::Obj) -> Result<Self::Obj>;
    /// Contravariant dual: f: A -> B gives f*: dual(B) -> dual(A).
    fn dual_mor(&self, f: &Self::Mor) -> Result<Self::Mor>;
    /// Evaluation dual(x) (x) x -> unit.
    fn ev(&self, x: &Self::Obj) -> Result<Self::Mor>;
    /// Coevaluation unit -> x (x) dual(x).
    fn coev(&self, x: &Self::Obj) -> Result<Self::Mor>;

    /// Right dual, pairing on the other side: evaluation runs
    /// x (x) dual_right(x) -> unit and coevaluation runs
    /// unit -> dual_right(x) (x) x.
    fn dual_right_obj(&self, _x: &Self::Obj) -> Result<Self::Obj> {
        Err(Error::NonRigidBackend("backend has no duals".into()))
    }
    fn dual_right_mor(&self, _f: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::NonRigidBackend("backend has no duals".into()))
    }
    fn ev_right(&self, _x: &Self::Obj) -> Result<Self::Mor> {
        Err(Error::NonRigidBackend("backend has no duals".into()))
    }
    fn coev_right(&self, _x: &Self::Obj) -> Result<Self::Mor> {
        Err(Error::NonRigidBackend("backend has no duals".into()))
    }
}

/// A backend linear over an exact field, exposing raw coordinates.
///
/// `tensor_structure(a, b)` is the matrix T of the canonical map from
/// Kronecker coordinates into the raw coordinates of `tensor_obj(a, b)`:
/// for raw vectors x of a and y of b, T (x kron y) is the raw vector of
/// x (x) y. Its rows are orthonormal, so T Tᵀ is the identity.
pub trait LinearBackend: Backend {
    fn field(&self) -> &FieldSpec;
    fn raw_dim(&self, x: &Self::Obj) -> usize;
    fn raw_matrix(&self, f: &Self::Mor) -> ExactMatrix;
    fn tensor_structure(&self, a: &Self::Obj, b: &Self::Obj) -> Result<ExactMatrix>;
    /// Wraps a raw matrix as a morphism, verifying it is one.
    fn mor_from_raw(
        &self,
        source: &Self::Obj,
        target: &Self::Obj,
        matrix: ExactMatrix,
    ) -> Result<Self::Mor>;
    /// A basis of the morphism space a -> b.
    fn hom_basis(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>>;
}

/// Splitting data for the cokernel of a matrix over a field: the
/// projection onto complement coordinates and a section choosing
/// representatives, with proj * reps = identity and proj * f = 0.
pub(crate) fn cokernel_data(f: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let basis = f.column_space_basis();
    let (full, _) = basis.extend_to_basis()?;
    let inv = full
        .inverse()?
        .ok_or_else(|| Error::Singular("extended basis must be invertible".into()))?;
    let r = basis.cols();
    let c = f.rows() - r;
    let proj = ExactMatrix::from_fn(f.field(), c, f.rows(), |i, j| inv.get(r + i, j).clone());
    let reps = ExactMatrix::from_fn(f.field(), f.rows(), c, |i, j| full.get(i, r + j).clone());
    Ok((proj, reps))
}

fn block_offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    for &d in dims {
        out.push(acc);
        acc += d;
    }
    out.push(acc);
    out
}

/// Inclusion of block i into the concatenation of coordinate blocks.
fn field_block_incl(field: &FieldSpec, dims: &[usize], i: usize) -> ExactMatrix {
    let offsets = block_offsets(dims);
    let total = offsets[dims.len()];
    ExactMatrix::from_fn(field, total, dims[i], |r, c| {
        if r == offsets[i] + c {
            crate::scalar::ExactScalar::one(field)
        } else {
            crate::scalar::ExactScalar::zero(field)
        }
    })
}

fn field_block_proj(field: &FieldSpec, dims: &[usize], i: usize) -> ExactMatrix {
    field_block_incl(field, dims, i).transpose()
}

fn check_part_index(len: usize, i: usize) -> Result<()> {
    if i >= len {
        return Err(Error::InvalidParameter(format!(
            "part index {i} out of range for {len} summands"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Hopf algebra modules
// ---------------------------------------------------------------------

/// Right modules over a fixed Hopf algebra.
#[derive(Clone)]
pub struct HModuleBackend {
    algebra: Arc<HopfAlgebra>,
}

impl HModuleBackend {
    pub fn new(algebra: Arc<HopfAlgebra>) -> Self {
        HModuleBackend { algebra }
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    fn endpoints_match(&self, g: &ModuleMor, f: &ModuleMor, what: &str) -> Result<()> {
        if g.source != f.target {
            return Err(Error::context(format!(
                "{what}: endpoints do not match"
            )));
        }
        Ok(())
    }
}

impl Backend for HModuleBackend {
    type Obj = HModule;
    type Mor = ModuleMor;

    fn same_context(&self, other: &Self) -> bool {
        module::same_algebra(&self.algebra, &other.algebra)
    }

    fn zero_obj(&self) -> HModule {
        HModule::zero(self.algebra.clone())
    }

    fn unit_obj(&self) -> HModule {
        HModule::trivial(self.algebra.clone())
    }

    fn is_zero_obj(&self, x: &HModule) -> bool {
        x.dim() == 0
    }

    fn obj_eq(&self, a: &HModule, b: &HModule) -> bool {
        a == b
    }

    fn describe(&self, x: &HModule) -> String {
        format!("dim {}", x.dim())
    }

    fn direct_sum(&self, parts: &[HModule]) -> Result<HModule> {
        match parts {
            [] => Ok(self.zero_obj()),
            [one] => Ok(one.clone()),
            [first, rest @ ..] => {
                let mut acc = first.clone();
                for p in rest {
                    acc = acc.direct_sum(p)?;
                }
                Ok(acc)
            }
        }
    }

    fn incl(&self, parts: &[HModule], i: usize) -> Result<ModuleMor> {
        check_part_index(parts.len(), i)?;
        let dims: Vec<usize> = parts.iter().map(HModule::dim).collect();
        let m = field_block_incl(self.algebra.field(), &dims, i);
        ModuleMor::new(parts[i].clone(), self.direct_sum(parts)?, m)
    }

    fn proj(&self, parts: &[HModule], i: usize) -> Result<ModuleMor> {
        check_part_index(parts.len(), i)?;
        let dims: Vec<usize> = parts.iter().map(HModule::dim).collect();
        let m = field_block_proj(self.algebra.field(), &dims, i);
        ModuleMor::new(self.direct_sum(parts)?, parts[i].clone(), m)
    }

    fn tensor_obj(&self, a: &HModule, b: &HModule) -> Result<HModule> {
        a.tensor(b)
    }

    fn tensor_mor(&self, f: &ModuleMor, g: &ModuleMor) -> Result<ModuleMor> {
        ModuleMor::new(
            f.source.tensor(&g.source)?,
            f.target.tensor(&g.target)?,
            f.matrix.kronecker(&g.matrix)?,
        )
    }

    fn zero_mor(&self, source: &HModule, target: &HModule) -> ModuleMor {
        ModuleMor {
            matrix: ExactMatrix::zeros(self.algebra.field(), target.dim(), source.dim()),
            source: source.clone(),
            target: target.clone(),
        }
    }

    fn identity(&self, x: &HModule) -> ModuleMor {
        ModuleMor {
            matrix: ExactMatrix::identity(self.algebra.field(), x.dim()),
            source: x.clone(),
            target: x.clone(),
        }
    }

    fn compose(&self, g: &ModuleMor, f: &ModuleMor) -> Result<ModuleMor> {
        self.endpoints_match(g, f, "composition")?;
        ModuleMor::new(f.source.clone(), g.target.clone(), g.matrix.matmul(&f.matrix)?)
    }

    fn add_mor(&self, f: &ModuleMor, g: &ModuleMor) -> Result<ModuleMor> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::context("sum of morphisms with different endpoints"));
        }
        ModuleMor::new(f.source.clone(), f.target.clone(), f.matrix.add(&g.matrix)?)
    }

    fn neg_mor(&self, f: &ModuleMor) -> ModuleMor {
        ModuleMor {
            matrix: f.matrix.neg(),
            source: f.source.clone(),
            target: f.target.clone(),
        }
    }

    fn mor_eq(&self, f: &ModuleMor, g: &ModuleMor) -> Result<bool> {
        Ok(f.source == g.source && f.target == g.target && f.matrix == g.matrix)
    }

    fn is_zero_mor(&self, f: &ModuleMor) -> Result<bool> {
        Ok(f.matrix.is_zero())
    }

    fn mor_source(&self, f: &ModuleMor) -> HModule {
        f.source.clone()
    }

    fn mor_target(&self, f: &ModuleMor) -> HModule {
        f.target.clone()
    }

    fn kernel(&self, f: &ModuleMor) -> Result<(HModule, ModuleMor)> {
        let incl = f.matrix.kernel_basis();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for rho in f.source.action() {
            let moved = rho.matmul(&incl)?;
            let induced = incl.solve_matrix(&moved)?.ok_or_else(|| {
                Error::Factorization("kernel is not stable under the action".into())
            })?;
            action.push(induced);
        }
        let obj = HModule::new(self.algebra.clone(), incl.cols(), action)?;
        let mono = ModuleMor::new(obj.clone(), f.source.clone(), incl)?;
        Ok((obj, mono))
    }

    fn cokernel(&self, f: &ModuleMor) -> Result<(HModule, ModuleMor)> {
        let (proj, reps) = cokernel_data(&f.matrix)?;
        let mut action = Vec::with_capacity(self.algebra.dim());
        for rho in f.target.action() {
            action.push(proj.matmul(&rho.matmul(&reps)?)?);
        }
        let obj = HModule::new(self.algebra.clone(), proj.rows(), action)?;
        let epi = ModuleMor::new(f.target.clone(), obj.clone(), proj)?;
        Ok((obj, epi))
    }

    fn lift_through_mono(&self, f: &ModuleMor, mono: &ModuleMor) -> Result<ModuleMor> {
        if f.target != mono.target {
            return Err(Error::context("lift: targets do not match"));
        }
        let x = mono.matrix.solve_matrix(&f.matrix)?.ok_or_else(|| {
            Error::Factorization("morphism does not factor through the mono".into())
        })?;
        ModuleMor::new(f.source.clone(), mono.source.clone(), x)
    }

    fn descend_through_epi(&self, f: &ModuleMor, epi: &ModuleMor) -> Result<ModuleMor> {
        if f.source != epi.source {
            return Err(Error::context("descent: sources do not match"));
        }
        let xt = epi
            .matrix
            .transpose()
            .solve_matrix(&f.matrix.transpose())?
            .ok_or_else(|| {
                Error::Factorization("morphism does not vanish on the kernel of the epi".into())
            })?;
        ModuleMor::new(epi.target.clone(), f.target.clone(), xt.transpose())
    }

    fn mor_is_iso(&self, f: &ModuleMor) -> Result<bool> {
        Ok(f.source.dim() == f.target.dim() && f.matrix.rank() == f.source.dim())
    }

    fn obj_iso(&self, a: &HModule, b: &HModule) -> Result<IsoVerdict> {
        Ok(match module::is_isomorphic(a, b)? {
            IsoOutcome::Isomorphic(_) => IsoVerdict::Yes,
            IsoOutcome::NotIsomorphic => IsoVerdict::No,
            IsoOutcome::Undetermined => IsoVerdict::Undetermined,
        })
    }

    fn has_duals(&self) -> bool {
        self.algebra.antipode_inv_matrix().is_some()
    }

    fn dual_obj(&self, x: &HModule) -> Result<HModule> {
        x.dual_left()
    }

    fn dual_mor(&self, f: &ModuleMor) -> Result<ModuleMor> {
        ModuleMor::new(
            f.target.dual_left()?,
            f.source.dual_left()?,
            f.matrix.transpose(),
        )
    }

    fn ev(&self, x: &HModule) -> Result<ModuleMor> {
        ModuleMor::new(x.dual_left()?.tensor(x)?, self.unit_obj(), x.evaluation())
    }

    fn coev(&self, x: &HModule) -> Result<ModuleMor> {
        ModuleMor::new(self.unit_obj(), x.tensor(&x.dual_left()?)?, x.coevaluation())
    }

    fn dual_right_obj(&self, x: &HModule) -> Result<HModule> {
        x.dual_right()
    }

    fn dual_right_mor(&self, f: &ModuleMor) -> Result<ModuleMor> {
        ModuleMor::new(
            f.target.dual_right()?,
            f.source.dual_right()?,
            f.matrix.transpose(),
        )
    }

    fn ev_right(&self, x: &HModule) -> Result<ModuleMor> {
        ModuleMor::new(x.tensor(&x.dual_right()?)?, self.unit_obj(), x.evaluation())
    }

    fn coev_right(&self, x: &HModule) -> Result<ModuleMor> {
        ModuleMor::new(self.unit_obj(), x.dual_right()?.tensor(x)?, x.coevaluation())
    }
}

impl LinearBackend for HModuleBackend {
    fn field(&self) -> &FieldSpec {
        self.algebra.field()
    }

    fn raw_dim(&self, x: &HModule) -> usize {
        x.dim()
    }

    fn raw_matrix(&self, f: &ModuleMor) -> ExactMatrix {
        f.matrix.clone()
    }

    fn tensor_structure(&self, a: &HModule, b: &HModule) -> Result<ExactMatrix> {
        Ok(ExactMatrix::identity(self.algebra.field(), a.dim() * b.dim()))
    }

    fn mor_from_raw(
        &self,
        source: &HModule,
        target: &HModule,
        matrix: ExactMatrix,
    ) -> Result<ModuleMor> {
        let mor = ModuleMor::new(source.clone(), target.clone(), matrix)?;
        if !mor.is_morphism()? {
            return Err(Error::NotAMorphism(
                "matrix does not intertwine the module actions".into(),
            ));
        }
        Ok(mor)
    }

    fn hom_basis(&self, a: &HModule, b: &HModule) -> Result<Vec<ModuleMor>> {
        crate::hopf::module::hom_space(a, b)?
            .into_iter()
            .map(|m| ModuleMor::new(a.clone(), b.clone(), m))
            .collect()
    }
}

// ---------------------------------------------------------------------
// Quiver representations
// ---------------------------------------------------------------------

/// Representations of a fixed quiver with the pointwise tensor product.
#[derive(Clone)]
pub struct QuiverBackend {
    quiver: Arc<Quiver>,
    field: FieldSpec,
}

impl QuiverBackend {
    pub fn new(quiver: Arc<Quiver>, field: FieldSpec) -> Self {
        QuiverBackend { quiver, field }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    fn rep_eq(a: &QuiverRep, b: &QuiverRep) -> bool {
        same_quiver(a.quiver(), b.quiver()) && a.dims() == b.dims() && a.maps() == b.maps()
    }

    fn is_a2(&self) -> bool {
        self.quiver.vertices() == 2 && self.quiver.arrows() == [(0, 1)]
    }
}

impl Backend for QuiverBackend {
    type Obj = QuiverRep;
    type Mor = QuiverMor;

    fn same_context(&self, other: &Self) -> bool {
        same_quiver(&self.quiver, &other.quiver) && self.field == other.field
    }

    fn zero_obj(&self) -> QuiverRep {
        QuiverRep::zero(self.quiver.clone(), self.field.clone())
    }

    fn unit_obj(&self) -> QuiverRep {
        QuiverRep::unit(self.quiver.clone(), self.field.clone())
    }

    fn is_zero_obj(&self, x: &QuiverRep) -> bool {
        x.is_zero()
    }

    fn obj_eq(&self, a: &QuiverRep, b: &QuiverRep) -> bool {
        Self::rep_eq(a, b)
    }

    fn describe(&self, x: &QuiverRep) -> String {
        format!("dims {:?}", x.dims())
    }

    fn direct_sum(&self, parts: &[QuiverRep]) -> Result<QuiverRep> {
        match parts {
            [] => Ok(self.zero_obj()),
            [one] => Ok(one.clone()),
            [first, rest @ ..] => {
                let mut acc = first.clone();
                for p in rest {
                    acc = acc.direct_sum(p)?;
                }
                Ok(acc)
            }
        }
    }

    fn incl(&self, parts: &[QuiverRep], i: usize) -> Result<QuiverMor> {
        check_part_index(parts.len(), i)?;
        let sum = self.direct_sum(parts)?;
        let maps = (0..self.quiver.vertices())
            .map(|v| {
                let dims: Vec<usize> = parts.iter().map(|p| p.dims()[v]).collect();
                field_block_incl(&self.field, &dims, i)
            })
            .collect();
        QuiverMor::new(parts[i].clone(), sum, maps)
    }

    fn proj(&self, parts: &[QuiverRep], i: usize) -> Result<QuiverMor> {
        check_part_index(parts.len(), i)?;
        let sum = self.direct_sum(parts)?;
        let maps = (0..self.quiver.vertices())
            .map(|v| {
                let dims: Vec<usize> = parts.iter().map(|p| p.dims()[v]).collect();
                field_block_proj(&self.field, &dims, i)
            })
            .collect();
        QuiverMor::new(sum, parts[i].clone(), maps)
    }

    fn tensor_obj(&self, a: &QuiverRep, b: &QuiverRep) -> Result<QuiverRep> {
        a.tensor(b)
    }

    fn tensor_mor(&self, f: &QuiverMor, g: &QuiverMor) -> Result<QuiverMor> {
        let maps = f
            .vertex_maps
            .iter()
            .zip(&g.vertex_maps)
            .map(|(a, b)| a.kronecker(b))
            .collect::<Result<Vec<_>>>()?;
        QuiverMor::new(
            f.source.tensor(&g.source)?,
            f.target.tensor(&g.target)?,
            maps,
        )
    }

    fn zero_mor(&self, source: &QuiverRep, target: &QuiverRep) -> QuiverMor {
        let maps = (0..self.quiver.vertices())
            .map(|v| ExactMatrix::zeros(&self.field, target.dims()[v], source.dims()[v]))
            .collect();
        QuiverMor {
            source: source.clone(),
            target: target.clone(),
            vertex_maps: maps,
        }
    }

    fn identity(&self, x: &QuiverRep) -> QuiverMor {
        let maps = x
            .dims()
            .iter()
            .map(|&d| ExactMatrix::identity(&self.field, d))
            .collect();
        QuiverMor {
            source: x.clone(),
            target: x.clone(),
            vertex_maps: maps,
        }
    }

    fn compose(&self, g: &QuiverMor, f: &QuiverMor) -> Result<QuiverMor> {
        if !Self::rep_eq(&g.source, &f.target) {
            return Err(Error::context("composition: endpoints do not match"));
        }
        let maps = g
            .vertex_maps
            .iter()
            .zip(&f.vertex_maps)
            .map(|(a, b)| a.matmul(b))
            .collect::<Result<Vec<_>>>()?;
        QuiverMor::new(f.source.clone(), g.target.clone(), maps)
    }

    fn add_mor(&self, f: &QuiverMor, g: &QuiverMor) -> Result<QuiverMor> {
        if !Self::rep_eq(&f.source, &g.source) || !Self::rep_eq(&f.target, &g.target) {
            return Err(Error::context("sum of morphisms with different endpoints"));
        }
        let maps = f
            .vertex_maps
            .iter()
            .zip(&g.vertex_maps)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        QuiverMor::new(f.source.clone(), f.target.clone(), maps)
    }

    fn neg_mor(&self, f: &QuiverMor) -> QuiverMor {
        QuiverMor {
            source: f.source.clone(),
            target: f.target.clone(),
            vertex_maps: f.vertex_maps.iter().map(ExactMatrix::neg).collect(),
        }
    }

    fn mor_eq(&self, f: &QuiverMor, g: &QuiverMor) -> Result<bool> {
        Ok(Self::rep_eq(&f.source, &g.source)
            && Self::rep_eq(&f.target, &g.target)
            && f.vertex_maps == g.vertex_maps)
    }

    fn is_zero_mor(&self, f: &QuiverMor) -> Result<bool> {
        Ok(f.vertex_maps.iter().all(ExactMatrix::is_zero))
    }

    fn mor_source(&self, f: &QuiverMor) -> QuiverRep {
        f.source.clone()
    }

    fn mor_target(&self, f: &QuiverMor) -> QuiverRep {
        f.target.clone()
    }

    fn kernel(&self, f: &QuiverMor) -> Result<(QuiverRep, QuiverMor)> {
        let incls: Vec<ExactMatrix> = f.vertex_maps.iter().map(ExactMatrix::kernel_basis).collect();
        let dims: Vec<usize> = incls.iter().map(ExactMatrix::cols).collect();
        let mut maps = Vec::with_capacity(self.quiver.arrows().len());
        for (idx, &(s, t)) in self.quiver.arrows().iter().enumerate() {
            let moved = f.source.maps()[idx].matmul(&incls[s])?;
            let induced = incls[t].solve_matrix(&moved)?.ok_or_else(|| {
                Error::Factorization("kernel is not stable under the arrow maps".into())
            })?;
            maps.push(induced);
        }
        let obj = QuiverRep::new(self.quiver.clone(), self.field.clone(), dims, maps)?;
        let mono = QuiverMor::new(obj.clone(), f.source.clone(), incls)?;
        Ok((obj, mono))
    }

    fn cokernel(&self, f: &QuiverMor) -> Result<(QuiverRep, QuiverMor)> {
        let mut projs = Vec::with_capacity(self.quiver.vertices());
        let mut repss = Vec::with_capacity(self.quiver.vertices());
        for m in &f.vertex_maps {
            let (proj, reps) = cokernel_data(m)?;
            projs.push(proj);
            repss.push(reps);
        }
        let dims: Vec<usize> = projs.iter().map(ExactMatrix::rows).collect();
        let mut maps = Vec::with_capacity(self.quiver.arrows().len());
        for (idx, &(s, t)) in self.quiver.arrows().iter().enumerate() {
            maps.push(projs[t].matmul(&f.target.maps()[idx].matmul(&repss[s])?)?);
        }
        let obj = QuiverRep::new(self.quiver.clone(), self.field.clone(), dims, maps)?;
        let epi = QuiverMor::new(f.target.clone(), obj.clone(), projs)?;
        Ok((obj, epi))
    }

    fn lift_through_mono(&self, f: &QuiverMor, mono: &QuiverMor) -> Result<QuiverMor> {
        if !Self::rep_eq(&f.target, &mono.target) {
            return Err(Error::context("lift: targets do not match"));
        }
        let maps = mono
            .vertex_maps
            .iter()
            .zip(&f.vertex_maps)
            .map(|(m, fm)| {
                m.solve_matrix(fm)?.ok_or_else(|| {
                    Error::Factorization("morphism does not factor through the mono".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        QuiverMor::new(f.source.clone(), mono.source.clone(), maps)
    }

    fn descend_through_epi(&self, f: &QuiverMor, epi: &QuiverMor) -> Result<QuiverMor> {
        if !Self::rep_eq(&f.source, &epi.source) {
            return Err(Error::context("descent: sources do not match"));
        }
        let maps = epi
            .vertex_maps
            .iter()
            .zip(&f.vertex_maps)
            .map(|(p, fm)| {
                let xt = p.transpose().solve_matrix(&fm.transpose())?.ok_or_else(|| {
                    Error::Factorization(
                        "morphism does not vanish on the kernel of the epi".into(),
                    )
                })?;
                Ok(xt.transpose())
            })
            .collect::<Result<Vec<_>>>()?;
        QuiverMor::new(epi.target.clone(), f.target.clone(), maps)
    }

    fn mor_is_iso(&self, f: &QuiverMor) -> Result<bool> {
        Ok(f
            .vertex_maps
            .iter()
            .all(|m| m.rows() == m.cols() && m.rank() == m.rows()))
    }

    fn obj_iso(&self, a: &QuiverRep, b: &QuiverRep) -> Result<IsoVerdict> {
        if Self::rep_eq(a, b) {
            return Ok(IsoVerdict::Yes);
        }
        if a.dims() != b.dims() {
            return Ok(IsoVerdict::No);
        }
        if self.is_a2() {
            return Ok(if A2Object::of_rep(a)? == A2Object::of_rep(b)? {
                IsoVerdict::Yes
            } else {
                IsoVerdict::No
            });
        }
        Ok(IsoVerdict::Undetermined)
    }

    fn has_duals(&self) -> bool {
        false
    }

    fn dual_obj(&self, _x: &QuiverRep) -> Result<QuiverRep> {
        Err(Error::NonRigidBackend(
            "the pointwise tensor product on quiver representations has no duals".into(),
        ))
    }

    fn dual_mor(&self, _f: &QuiverMor) -> Result<QuiverMor> {
        Err(Error::NonRigidBackend(
            "the pointwise tensor product on quiver representations has no duals".into(),
        ))
    }

    fn ev(&self, _x: &QuiverRep) -> Result<QuiverMor> {
        Err(Error::NonRigidBackend(
            "the pointwise tensor product on quiver representations has no duals".into(),
        ))
    }

    fn coev(&self, _x: &QuiverRep) -> Result<QuiverMor> {
        Err(Error::NonRigidBackend(
            "the pointwise tensor product on quiver representations has no duals".into(),
        ))
    }
}

impl LinearBackend for QuiverBackend {
    fn field(&self) -> &FieldSpec {
        &self.field
    }

    fn raw_dim(&self, x: &QuiverRep) -> usize {
        x.total_dim()
    }

    fn raw_matrix(&self, f: &QuiverMor) -> ExactMatrix {
        let src = block_offsets(f.source.dims());
        let tgt = block_offsets(f.target.dims());
        let mut out = ExactMatrix::zeros(
            &self.field,
            tgt[self.quiver.vertices()],
            src[self.quiver.vertices()],
        );
        for (v, m) in f.vertex_maps.iter().enumerate() {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    out.set(tgt[v] + r, src[v] + c, m.get(r, c).clone());
                }
            }
        }
        out
    }

    fn tensor_structure(&self, a: &QuiverRep, b: &QuiverRep) -> Result<ExactMatrix> {
        let a_off = block_offsets(a.dims());
        let b_off = block_offsets(b.dims());
        let raw_b = b.total_dim();
        let t_dims: Vec<usize> = a
            .dims()
            .iter()
            .zip(b.dims())
            .map(|(&x, &y)| x * y)
            .collect();
        let t_off = block_offsets(&t_dims);
        let mut out = ExactMatrix::zeros(
            &self.field,
            t_off[self.quiver.vertices()],
            a.total_dim() * raw_b,
        );
        let one = crate::scalar::ExactScalar::one(&self.field);
        for v in 0..self.quiver.vertices() {
            for p in 0..a.dims()[v] {
                for q in 0..b.dims()[v] {
                    out.set(
                        t_off[v] + p * b.dims()[v] + q,
                        (a_off[v] + p) * raw_b + (b_off[v] + q),
                        one.clone(),
                    );
                }
            }
        }
        Ok(out)
    }

    fn mor_from_raw(
        &self,
        source: &QuiverRep,
        target: &QuiverRep,
        matrix: ExactMatrix,
    ) -> Result<QuiverMor> {
        let src = block_offsets(source.dims());
        let tgt = block_offsets(target.dims());
        if (matrix.rows(), matrix.cols()) != (target.total_dim(), source.total_dim()) {
            return Err(Error::shape(format!(
                "raw matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.total_dim(),
                source.total_dim()
            )));
        }
        let vertex_of = |off: &[usize], i: usize| off.iter().filter(|&&o| o <= i).count() - 1;
        for r in 0..matrix.rows() {
            for c in 0..matrix.cols() {
                if vertex_of(&tgt, r) != vertex_of(&src, c) && !matrix.get(r, c).is_zero() {
                    return Err(Error::NotAMorphism(
                        "raw matrix mixes distinct vertices".into(),
                    ));
                }
            }
        }
        let maps = (0..self.quiver.vertices())
            .map(|v| {
                ExactMatrix::from_fn(
                    &self.field,
                    target.dims()[v],
                    source.dims()[v],
                    |r, c| matrix.get(tgt[v] + r, src[v] + c).clone(),
                )
            })
            .collect();
        let mor = QuiverMor::new(source.clone(), target.clone(), maps)?;
        if !mor.is_morphism()? {
            return Err(Error::NotAMorphism(
                "vertex maps do not commute with the arrow maps".into(),
            ));
        }
        Ok(mor)
    }

    fn hom_basis(&self, a: &QuiverRep, b: &QuiverRep) -> Result<Vec<QuiverMor>> {
        crate::quiver::quiver_hom_space(a, b)?
            .into_iter()
            .map(|maps| QuiverMor::new(a.clone(), b.clone(), maps))
            .collect()
    }
}

// ---------------------------------------------------------------------
// Finitely generated abelian groups
// ---------------------------------------------------------------------

/// Finitely generated abelian groups with the tensor product over Z.
#[derive(Clone, Copy, Default)]
pub struct AbelianBackend;

impl AbelianBackend {
    pub fn new() -> Self {
        AbelianBackend
    }

    fn group_eq(a: &FgAbelianGroup, b: &FgAbelianGroup) -> bool {
        a.gens() == b.gens() && a.relations() == b.relations()
    }
}

impl Backend for AbelianBackend {
    type Obj = FgAbelianGroup;
    type Mor = GroupHom;

    fn same_context(&self, _other: &Self) -> bool {
        true
    }

    fn zero_obj(&self) -> FgAbelianGroup {
        FgAbelianGroup::trivial()
    }

    fn unit_obj(&self) -> FgAbelianGroup {
        FgAbelianGroup::free(1)
    }

    fn is_zero_obj(&self, x: &FgAbelianGroup) -> bool {
        x.is_trivial()
    }

    fn obj_eq(&self, a: &FgAbelianGroup, b: &FgAbelianGroup) -> bool {
        Self::group_eq(a, b)
    }

    fn describe(&self, x: &FgAbelianGroup) -> String {
        format!("{x}")
    }

    fn direct_sum(&self, parts: &[FgAbelianGroup]) -> Result<FgAbelianGroup> {
        match parts {
            [] => Ok(self.zero_obj()),
            [one] => Ok(one.clone()),
            [first, rest @ ..] => {
                let mut acc = first.clone();
                for p in rest {
                    acc = acc.direct_sum(p);
                }
                Ok(acc)
            }
        }
    }

    fn incl(&self, parts: &[FgAbelianGroup], i: usize) -> Result<GroupHom> {
        check_part_index(parts.len(), i)?;
        let sum = self.direct_sum(parts)?;
        let offsets = block_offsets(&parts.iter().map(FgAbelianGroup::gens).collect::<Vec<_>>());
        let m = IntMatrix::from_fn(sum.gens(), parts[i].gens(), |r, c| {
            if r == offsets[i] + c {
                1.into()
            } else {
                0.into()
            }
        });
        GroupHom::new(parts[i].clone(), sum, m)
    }

    fn proj(&self, parts: &[FgAbelianGroup], i: usize) -> Result<GroupHom> {
        check_part_index(parts.len(), i)?;
        let sum = self.direct_sum(parts)?;
        let offsets = block_offsets(&parts.iter().map(FgAbelianGroup::gens).collect::<Vec<_>>());
        let m = IntMatrix::from_fn(parts[i].gens(), sum.gens(), |r, c| {
            if c == offsets[i] + r {
                1.into()
            } else {
                0.into()
            }
        });
        GroupHom::new(sum, parts[i].clone(), m)
    }

    fn tensor_obj(&self, a: &FgAbelianGroup, b: &FgAbelianGroup) -> Result<FgAbelianGroup> {
        Ok(a.tensor(b))
    }

    fn tensor_mor(&self, f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
        Ok(f.tensor(g))
    }

    fn zero_mor(&self, source: &FgAbelianGroup, target: &FgAbelianGroup) -> GroupHom {
        GroupHom::zero(source, target)
    }

    fn identity(&self, x: &FgAbelianGroup) -> GroupHom {
        GroupHom::identity(x)
    }

    fn compose(&self, g: &GroupHom, f: &GroupHom) -> Result<GroupHom> {
        g.compose_after(f)
    }

    fn add_mor(&self, f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
        f.add(g)
    }

    fn neg_mor(&self, f: &GroupHom) -> GroupHom {
        f.neg()
    }

    fn mor_eq(&self, f: &GroupHom, g: &GroupHom) -> Result<bool> {
        if !Self::group_eq(f.source(), g.source()) || !Self::group_eq(f.target(), g.target()) {
            return Ok(false);
        }
        f.equals(g)
    }

    fn is_zero_mor(&self, f: &GroupHom) -> Result<bool> {
        f.is_zero()
    }

    fn mor_source(&self, f: &GroupHom) -> FgAbelianGroup {
        f.source().clone()
    }

    fn mor_target(&self, f: &GroupHom) -> FgAbelianGroup {
        f.target().clone()
    }

    fn kernel(&self, f: &GroupHom) -> Result<(FgAbelianGroup, GroupHom)> {
        f.kernel()
    }

    fn cokernel(&self, f: &GroupHom) -> Result<(FgAbelianGroup, GroupHom)> {
        f.cokernel()
    }

    fn lift_through_mono(&self, f: &GroupHom, mono: &GroupHom) -> Result<GroupHom> {
        mono.lift_through_mono(f)
    }

    fn descend_through_epi(&self, f: &GroupHom, epi: &GroupHom) -> Result<GroupHom> {
        epi.descend_through_epi(f)
    }

    fn mor_is_iso(&self, f: &GroupHom) -> Result<bool> {
        let (ker, _) = f.kernel()?;
        if !ker.is_trivial() {
            return Ok(false);
        }
        let (coker, _) = f.cokernel()?;
        Ok(coker.is_trivial())
    }

    fn obj_iso(&self, a: &FgAbelianGroup, b: &FgAbelianGroup) -> Result<IsoVerdict> {
        Ok(if a.invariant_factors() == b.invariant_factors() {
            IsoVerdict::Yes
        } else {
            IsoVerdict::No
        })
    }

    fn has_duals(&self) -> bool {
        false
    }

    fn dual_obj(&self, _x: &FgAbelianGroup) -> Result<FgAbelianGroup> {
        Err(Error::NonRigidBackend(
            "the integral backend has no duals".into(),
        ))
    }

    fn dual_mor(&self, _f: &GroupHom) -> Result<GroupHom> {
        Err(Error::NonRigidBackend(
            "the integral backend has no duals".into(),
        ))
    }

    fn ev(&self, _x: &FgAbelianGroup) -> Result<GroupHom> {
        Err(Error::NonRigidBackend(
            "the integral backend has no duals".into(),
        ))
    }

    fn coev(&self, _x: &FgAbelianGroup) -> Result<GroupHom> {
        Err(Error::NonRigidBackend(
            "the integral backend has no duals".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builders::group_algebra;
    use crate::quiver::{a2_p2, a2_s1, a2_s2};
    use crate::scalar::ExactScalar;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn c2_backend() -> HModuleBackend {
        HModuleBackend::new(Arc::new(group_algebra("c2", &q()).unwrap()))
    }

    fn augmentation(b: &HModuleBackend) -> ModuleMor {
        let reg = HModule::regular(b.algebra().clone());
        let m = ExactMatrix::from_i64_rows(&q(), &[&[1, 1]]);
        ModuleMor::new(reg, b.unit_obj(), m).unwrap()
    }

    #[test]
    fn cokernel_data_splits() {
        let f = ExactMatrix::from_i64_rows(&q(), &[&[1, 0], &[2, 0], &[0, 0]]);
        let (proj, reps) = cokernel_data(&f).unwrap();
        assert_eq!((proj.rows(), proj.cols()), (2, 3));
        assert!(proj.matmul(&f).unwrap().is_zero());
        assert!(proj.matmul(&reps).unwrap().is_identity());
    }

    #[test]
    fn hmodule_kernel_of_augmentation_is_the_sign_module() {
        let b = c2_backend();
        let aug = augmentation(&b);
        assert!(aug.is_morphism().unwrap());
        let (ker, mono) = b.kernel(&aug).unwrap();
        assert_eq!(ker.dim(), 1);
        assert!(mono.is_morphism().unwrap());
        let minus_one = ExactScalar::one(&q()).neg();
        assert_eq!(ker.action()[1].get(0, 0), &minus_one);
        let (coker, _) = b.cokernel(&aug).unwrap();
        assert!(b.is_zero_obj(&coker));
        assert!(!b.mor_is_iso(&aug).unwrap());
        assert!(b.mor_is_iso(&b.identity(&b.unit_obj())).unwrap());
    }

    #[test]
    fn hmodule_sum_projections_split_inclusions() {
        let b = c2_backend();
        let aug = augmentation(&b);
        let sign = b.kernel(&aug).unwrap().0;
        let parts = [b.unit_obj(), sign];
        assert!(b.obj_eq(&b.direct_sum(&parts[..1]).unwrap(), &parts[0]));
        for i in 0..2 {
            for j in 0..2 {
                let c = b
                    .compose(&b.proj(&parts, i).unwrap(), &b.incl(&parts, j).unwrap())
                    .unwrap();
                if i == j {
                    assert!(b.mor_eq(&c, &b.identity(&parts[i])).unwrap());
                } else {
                    assert!(b.is_zero_mor(&c).unwrap());
                }
            }
        }
    }

    #[test]
    fn hmodule_regular_is_trivial_plus_sign() {
        let b = c2_backend();
        let aug = augmentation(&b);
        let sign = b.kernel(&aug).unwrap().0;
        let sum = b.direct_sum(&[b.unit_obj(), sign]).unwrap();
        let reg = HModule::regular(b.algebra().clone());
        assert_eq!(b.obj_iso(&reg, &sum).unwrap(), IsoVerdict::Yes);
        assert_eq!(b.obj_iso(&b.unit_obj(), &reg).unwrap(), IsoVerdict::No);
    }

    #[test]
    fn hmodule_lift_and_descent_recover_components() {
        let b = c2_backend();
        let aug = augmentation(&b);
        let sign = b.kernel(&aug).unwrap().0;
        let parts = [b.unit_obj(), sign];
        let incl0 = b.incl(&parts, 0).unwrap();
        let proj0 = b.proj(&parts, 0).unwrap();
        let lifted = b.lift_through_mono(&incl0, &incl0).unwrap();
        assert!(b.mor_eq(&lifted, &b.identity(&parts[0])).unwrap());
        let descended = b.descend_through_epi(&proj0, &proj0).unwrap();
        assert!(b.mor_eq(&descended, &b.identity(&parts[0])).unwrap());
        let incl1 = b.incl(&parts, 1).unwrap();
        assert!(b.lift_through_mono(&incl0, &incl1).is_err());
    }

    #[test]
    fn hmodule_mor_from_raw_validates() {
        let b = c2_backend();
        let reg = HModule::regular(b.algebra().clone());
        let good = ExactMatrix::from_i64_rows(&q(), &[&[1, 1]]);
        assert!(b.mor_from_raw(&reg, &b.unit_obj(), good).is_ok());
        let bad = ExactMatrix::from_i64_rows(&q(), &[&[1, 0]]);
        assert!(matches!(
            b.mor_from_raw(&reg, &b.unit_obj(), bad),
            Err(Error::NotAMorphism(_))
        ));
    }

    #[test]
    fn quiver_kernel_and_cokernel_of_p2_onto_s1() {
        let b = QuiverBackend::new(Arc::new(Quiver::a2()), q());
        let f = QuiverMor::new(
            a2_p2(&q()),
            a2_s1(&q()),
            alloc::vec![
                ExactMatrix::identity(&q(), 1),
                ExactMatrix::zeros(&q(), 0, 1),
            ],
        )
        .unwrap();
        assert!(f.is_morphism().unwrap());
        let (ker, mono) = b.kernel(&f).unwrap();
        assert_eq!(ker.dims(), &[0, 1]);
        assert_eq!(b.obj_iso(&ker, &a2_s2(&q())).unwrap(), IsoVerdict::Yes);
        assert!(mono.is_morphism().unwrap());
        let (coker, _) = b.cokernel(&f).unwrap();
        assert!(b.is_zero_obj(&coker));
    }

    #[test]
    fn quiver_obj_iso_distinguishes_p2_from_its_semisimplification() {
        let b = QuiverBackend::new(Arc::new(Quiver::a2()), q());
        let split = b.direct_sum(&[a2_s1(&q()), a2_s2(&q())]).unwrap();
        assert_eq!(split.dims(), a2_p2(&q()).dims());
        assert_eq!(b.obj_iso(&a2_p2(&q()), &split).unwrap(), IsoVerdict::No);
        assert_eq!(b.obj_iso(&split, &split).unwrap(), IsoVerdict::Yes);
    }

    #[test]
    fn quiver_tensor_structure_matches_kronecker() {
        let b = QuiverBackend::new(Arc::new(Quiver::a2()), q());
        let a = a2_p2(&q());
        let c = b.direct_sum(&[a2_s1(&q()), a2_p2(&q())]).unwrap();
        let t = b.tensor_structure(&a, &c).unwrap();
        assert!(t.matmul(&t.transpose()).unwrap().is_identity());
        let x = ExactMatrix::from_i64_rows(&q(), &[&[2], &[3]]);
        let y = ExactMatrix::from_i64_rows(&q(), &[&[5], &[7], &[11]]);
        let pushed = t.matmul(&x.kronecker(&y).unwrap()).unwrap();
        let expected = ExactMatrix::from_i64_rows(&q(), &[&[10], &[14], &[33]]);
        assert_eq!(pushed, expected);
    }

    #[test]
    fn quiver_mor_from_raw_rejects_vertex_mixing() {
        let b = QuiverBackend::new(Arc::new(Quiver::a2()), q());
        let u = b.unit_obj();
        let mixing = ExactMatrix::from_i64_rows(&q(), &[&[1, 1], &[0, 1]]);
        assert!(matches!(
            b.mor_from_raw(&u, &u, mixing),
            Err(Error::NotAMorphism(_))
        ));
        let diagonal = ExactMatrix::from_i64_rows(&q(), &[&[1, 0], &[0, 1]]);
        let mor = b.mor_from_raw(&u, &u, diagonal).unwrap();
        assert!(b.mor_eq(&mor, &b.identity(&u)).unwrap());
    }

    #[test]
    fn abelian_backend_computes_with_presentations() {
        let b = AbelianBackend::new();
        let z = b.unit_obj();
        let two = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_i64_rows(&[&[2]])).unwrap();
        let (ker, _) = b.kernel(&two).unwrap();
        assert!(b.is_zero_obj(&ker));
        let (coker, _) = b.cokernel(&two).unwrap();
        assert_eq!(coker.invariant_factors(), alloc::vec![2.into()]);
        assert!(!b.mor_is_iso(&two).unwrap());

        let z6 = FgAbelianGroup::cyclic(6);
        let z2z3 = b
            .direct_sum(&[FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(3)])
            .unwrap();
        assert_eq!(b.obj_iso(&z6, &z2z3).unwrap(), IsoVerdict::Yes);
        let z4 = FgAbelianGroup::cyclic(4);
        let z2z2 = b
            .direct_sum(&[FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(2)])
            .unwrap();
        assert_eq!(b.obj_iso(&z4, &z2z2).unwrap(), IsoVerdict::No);
        assert!(b.dual_obj(&z6).is_err());
    }

    #[test]
    fn abelian_sum_projections_split_inclusions() {
        let b = AbelianBackend::new();
        let parts = [FgAbelianGroup::cyclic(4), FgAbelianGroup::free(1)];
        for i in 0..2 {
            for j in 0..2 {
                let c = b
                    .compose(&b.proj(&parts, i).unwrap(), &b.incl(&parts, j).unwrap())
                    .unwrap();
                if i == j {
                    assert!(b.mor_eq(&c, &b.identity(&parts[i])).unwrap());
                } else {
                    assert!(b.is_zero_mor(&c).unwrap());
                }
            }
        }
    }
}
