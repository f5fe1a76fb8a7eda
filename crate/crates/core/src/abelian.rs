//! Finitely generated abelian groups presented by relation matrices.
//!
//! A group is the cokernel of its relation matrix: generators index the
//! rows, each column is one relation. Morphisms are integer matrices on
//! generators, validated eagerly to respect the relations. Kernels,
//! cokernels, lifts, and descents are computed with Smith normal form,
//! which makes every question here decidable: invariant factors are a
//! complete isomorphism invariant.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::intmat::IntMatrix;
use crate::Result;

/// A finitely generated abelian group, Z^gens / columns(relations).
#[derive(Clone, PartialEq, Eq)]
pub struct FgAbelianGroup {
    gens: usize,
    relations: IntMatrix,
}

impl FgAbelianGroup {
    pub fn new(gens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != gens {
            return Err(Error::shape(format!(
                "relation matrix has {} rows but the group has {} generators",
                relations.rows(),
                gens
            )));
        }
        Ok(FgAbelianGroup { gens, relations })
    }

    /// The free group Z^n.
    pub fn free(n: usize) -> Self {
        FgAbelianGroup {
            gens: n,
            relations: IntMatrix::zeros(n, 0),
        }
    }

    /// The cyclic group Z/k (k = 0 gives Z).
    pub fn cyclic(k: i64) -> Self {
        FgAbelianGroup {
            gens: 1,
            relations: IntMatrix::from_i64_rows(&[&[k]]),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn from_invariant_factors(factors: &[i64]) -> Self {
        let n = factors.len();
        let mut relations = IntMatrix::zeros(n, n);
        for (i, &f) in factors.iter().enumerate() {
            relations.set(i, i, BigInt::from(f));
        }
        FgAbelianGroup { gens: n, relations }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Invariant factors d_1 | d_2 | ... with 0 for each free rank,
    /// entries of 1 dropped. The empty list is the trivial group.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let snf = self.relations.smith_normal_form();
        let diag = snf.diagonal();
        let mut out = Vec::new();
        for i in 0..self.gens {
            let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if !d.is_one() {
                out.push(d);
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors().is_empty()
    }

    /// Direct sum, with the left summand's generators first.
    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let gens = self.gens + other.gens;
        let rels = self.relations.cols() + other.relations.cols();
        let mut relations = IntMatrix::zeros(gens, rels);
        for r in 0..self.gens {
            for c in 0..self.relations.cols() {
                relations.set(r, c, self.relations.get(r, c).clone());
            }
        }
        for r in 0..other.gens {
            for c in 0..other.relations.cols() {
                relations.set(
                    self.gens + r,
                    self.relations.cols() + c,
                    other.relations.get(r, c).clone(),
                );
            }
        }
        FgAbelianGroup { gens, relations }
    }

    /// Tensor product over Z. Generators are pairs (i, j) indexed as
    /// i * other.gens + j; relations are the two blocks
    /// R_self (x) I and I (x) R_other.
    pub fn tensor(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let left = self.relations.kronecker(&IntMatrix::identity(other.gens));
        let right = IntMatrix::identity(self.gens).kronecker(&other.relations);
        let relations = left.hstack(&right).expect("row counts match by construction");
        FgAbelianGroup {
            gens: self.gens * other.gens,
            relations,
        }
    }

    /// Whether the generator-coordinate vector v represents zero, i.e.
    /// lies in the relation lattice.
    pub fn is_zero_element(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.gens {
            return Err(Error::shape(format!(
                "element has {} coordinates but the group has {} generators",
                v.len(),
                self.gens
            )));
        }
        Ok(self.relations.solve(v)?.is_some())
    }

    fn describe(&self) -> String {
        let factors = self.invariant_factors();
        if factors.is_empty() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for f in &factors {
            if f.is_zero() {
                parts.push(String::from("Z"));
            } else {
                parts.push(format!("Z/{f}"));
            }
        }
        parts.join(" + ")
    }
}

impl core::fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.describe())
    }
}

impl core::fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "FgAbelianGroup({} gens, {} relations, \u{2245} {})",
            self.gens,
            self.relations.cols(),
            self.describe()
        )
    }
}

/// A homomorphism between presented groups, as an integer matrix on
/// generators (target.gens x source.gens). Validated on construction.
#[derive(Clone)]
pub struct GroupHom {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Builds and validates: every source relation must map into the
    /// target relation lattice, otherwise the matrix does not define a
    /// homomorphism of the presented groups.
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.gens() || matrix.cols() != source.gens() {
            return Err(Error::shape(format!(
                "hom matrix is {}x{} but should be {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.gens(),
                source.gens()
            )));
        }
        let target_snf = target.relations.smith_normal_form();
        for c in 0..source.relations.cols() {
            let image = matrix.apply(&source.relations.column(c))?;
            if target_snf.solve(&image)?.is_none() {
                return Err(Error::NotWellDefined(format!(
                    "relation {c} of the source maps outside the target relations"
                )));
            }
        }
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn identity(g: &FgAbelianGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.gens()),
        }
    }

    pub fn zero(source: &FgAbelianGroup, target: &FgAbelianGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.gens(), source.gens()),
        }
    }

    pub fn compose_after(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target != self.source {
            return Err(Error::context(
                "compose: inner target differs from outer source",
            ));
        }
        Ok(GroupHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.matmul(&first.matrix)?,
        })
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::context("cannot add homs with different endpoints"));
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn neg(&self) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.neg(),
        }
    }

    /// Tensor product of homs on tensor product presentations.
    pub fn tensor(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            source: self.source.tensor(&other.source),
            target: self.target.tensor(&other.target),
            matrix: self.matrix.kronecker(&other.matrix),
        }
    }

    /// Whether this hom is the zero map (every generator image lies in
    /// the target relation lattice).
    pub fn is_zero(&self) -> Result<bool> {
        let snf = self.target.relations.smith_normal_form();
        for c in 0..self.matrix.cols() {
            if snf.solve(&self.matrix.column(c))?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as homomorphisms of the presented groups (difference of
    /// matrices is zero modulo target relations).
    pub fn equals(&self, other: &GroupHom) -> Result<bool> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::context("cannot compare homs with different endpoints"));
        }
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix.neg())?,
        }
        .is_zero()
    }

    /// Kernel subgroup with its inclusion.
    ///
    /// The x-parts of solutions of F x = R_target y form a sublattice
    /// of the source generator lattice; a Smith-reduced basis of it
    /// gives the kernel generators, and their coordinates give the
    /// inclusion matrix.
    pub fn kernel(&self) -> Result<(FgAbelianGroup, GroupHom)> {
        let a = self.source.gens();
        let block = self.matrix.hstack(&self.target.relations.neg())?;
        let w = block.kernel_lattice();
        let x_parts = IntMatrix::from_fn(a, w.cols(), |r, c| w.get(r, c).clone());
        // Lattice basis: columns of U^-1 D generate the same lattice as
        // the columns of x_parts and the nonzero ones are independent.
        let snf = x_parts.smith_normal_form();
        let rank = snf.rank();
        let ud = snf.u_inv.matmul(&snf.d)?;
        let idx: Vec<usize> = (0..rank).collect();
        let g = ud.select_columns(&idx);
        // Relations of the kernel: z with G z inside the source
        // relation lattice.
        let rel_block = g.hstack(&self.source.relations.neg())?;
        let w2 = rel_block.kernel_lattice();
        let rel_k = IntMatrix::from_fn(rank, w2.cols(), |r, c| w2.get(r, c).clone());
        let kernel = FgAbelianGroup::new(rank, rel_k)?;
        let incl = GroupHom::new(kernel.clone(), self.source.clone(), g)?;
        Ok((kernel, incl))
    }

    /// Cokernel with its projection: same generators as the target,
    /// with the image columns adjoined as relations.
    pub fn cokernel(&self) -> Result<(FgAbelianGroup, GroupHom)> {
        let relations = self.matrix.hstack(&self.target.relations)?;
        let coker = FgAbelianGroup::new(self.target.gens(), relations)?;
        let proj = GroupHom {
            source: self.target.clone(),
            target: coker.clone(),
            matrix: IntMatrix::identity(self.target.gens()),
        };
        Ok((coker, proj))
    }

    /// Unique factorization through a kernel-style inclusion: given
    /// mono: K -> A (this hom) and f: S -> A landing in the image of
    /// mono, returns the lift S -> K.
    pub fn lift_through_mono(&self, f: &GroupHom) -> Result<GroupHom> {
        if f.target != self.target {
            return Err(Error::context("lift: maps have different targets"));
        }
        let snf = self.matrix.smith_normal_form();
        let mut cols = Vec::with_capacity(f.matrix.cols());
        for c in 0..f.matrix.cols() {
            let b = f.matrix.column(c);
            let sol = snf.solve(&b)?.ok_or_else(|| {
                Error::Factorization(format!(
                    "column {c} does not lie in the sublattice spanned by the mono"
                ))
            })?;
            cols.push(sol);
        }
        let matrix = IntMatrix::from_fn(self.source.gens(), f.matrix.cols(), |r, c| {
            cols[c][r].clone()
        });
        GroupHom::new(f.source.clone(), self.source.clone(), matrix)
    }

    /// Unique factorization through an epi: given epi: B -> C (this
    /// hom) and f: B -> T vanishing on ker(epi), returns g: C -> T with
    /// g after epi = f.
    ///
    /// Each generator of C is pulled back through [E | R_C] and pushed
    /// through f; the vanishing hypothesis makes the choice immaterial.
    pub fn descend_through_epi(&self, f: &GroupHom) -> Result<GroupHom> {
        if f.source != self.source {
            return Err(Error::context("descend: maps have different sources"));
        }
        let c_gens = self.target.gens();
        let block = self.matrix.hstack(&self.target.relations)?;
        let snf = block.smith_normal_form();
        let mut cols = Vec::with_capacity(c_gens);
        for j in 0..c_gens {
            let mut e = vec![BigInt::zero(); c_gens];
            e[j] = BigInt::one();
            let sol = snf.solve(&e)?.ok_or_else(|| {
                Error::Factorization(format!("generator {j} has no preimage under the epi"))
            })?;
            let preimage: Vec<BigInt> = sol[..self.source.gens()].to_vec();
            cols.push(f.matrix.apply(&preimage)?);
        }
        let matrix = IntMatrix::from_fn(f.target.gens(), c_gens, |r, c| cols[c][r].clone());
        GroupHom::new(self.target.clone(), f.target.clone(), matrix)
    }
}

impl core::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "GroupHom({:?} -> {:?})\n{}",
            self.source, self.target, self.matrix
        )
    }
}
