//! Quiver representations over an exact field, with the pointwise
//! tensor product, and the A2 quiver with its zero-preserving
//! endofunctor on multiplicity-typed objects.
//!
//! A representation assigns a dimension to each vertex and a matrix to
//! each arrow; the tensor product is vertexwise and arrowwise
//! Kronecker, with unit the representation that is the field at every
//! vertex and the identity on every arrow. The unit is not simple in
//! general, so this monoidal category is a deliberate source of
//! non-rigid, non-unit-simple behavior.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::ExactMatrix;
use crate::scalar::{ExactScalar, FieldSpec};
use crate::Result;

/// A finite quiver: a number of vertices and a list of arrows given
/// as (source, target) pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            if s >= vertices || t >= vertices {
                return Err(Error::shape(format!(
                    "arrow ({s}, {t}) outside vertex range 0..{vertices}"
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// The A2 quiver: two vertices joined by one arrow.
    pub fn a2() -> Self {
        Quiver {
            vertices: 2,
            arrows: vec![(0, 1)],
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }
}

/// A representation of a fixed quiver.
#[derive(Clone)]
pub struct QuiverRep {
    quiver: Arc<Quiver>,
    field: FieldSpec,
    dims: Vec<usize>,
    maps: Vec<ExactMatrix>,
}

/// Representations are comparable when they share the quiver
/// structurally; a shared allocation is the fast path.
pub fn same_quiver(a: &Arc<Quiver>, b: &Arc<Quiver>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for QuiverRep {
    fn eq(&self, other: &Self) -> bool {
        same_quiver(&self.quiver, &other.quiver)
            && self.field == other.field
            && self.dims == other.dims
            && self.maps == other.maps
    }
}

impl Eq for QuiverRep {}

impl core::fmt::Debug for QuiverRep {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "QuiverRep(dims {:?} over {})", self.dims, self.field)
    }
}

impl QuiverRep {
    pub fn new(
        quiver: Arc<Quiver>,
        field: FieldSpec,
        dims: Vec<usize>,
        maps: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertices() {
            return Err(Error::shape(format!(
                "expected {} vertex dimensions, got {}",
                quiver.vertices(),
                dims.len()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::shape(format!(
                "expected {} arrow maps, got {}",
                quiver.arrows().len(),
                maps.len()
            )));
        }
        for (m, &(s, t)) in maps.iter().zip(quiver.arrows()) {
            if (m.rows(), m.cols()) != (dims[t], dims[s]) {
                return Err(Error::shape(format!(
                    "arrow ({s}, {t}) map is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[t],
                    dims[s]
                )));
            }
            if m.field() != &field {
                return Err(field.mismatch(m.field()));
            }
        }
        Ok(QuiverRep {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// The zero representation.
    pub fn zero(quiver: Arc<Quiver>, field: FieldSpec) -> Self {
        let dims = vec![0; quiver.vertices()];
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| ExactMatrix::zeros(&field, 0, 0))
            .collect();
        QuiverRep {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// The monoidal unit: the field at every vertex, identities on
    /// arrows.
    pub fn unit(quiver: Arc<Quiver>, field: FieldSpec) -> Self {
        let dims = vec![1; quiver.vertices()];
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| ExactMatrix::identity(&field, 1))
            .collect();
        QuiverRep {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// Pointwise tensor product: dimensions multiply per vertex and
    /// arrow maps are Kronecker products.
    pub fn tensor(&self, other: &QuiverRep) -> Result<QuiverRep> {
        if !same_quiver(&self.quiver, &other.quiver) {
            return Err(Error::context("tensor product over different quivers"));
        }
        if self.field != other.field {
            return Err(self.field.mismatch(&other.field));
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a * b)
            .collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.kronecker(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuiverRep {
            quiver: self.quiver.clone(),
            field: self.field.clone(),
            dims,
            maps,
        })
    }

    /// Direct sum with summands in order.
    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep> {
        if !same_quiver(&self.quiver, &other.quiver) {
            return Err(Error::context("direct sum over different quivers"));
        }
        if self.field != other.field {
            return Err(self.field.mismatch(&other.field));
        }
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (idx, &(s, t)) in self.quiver.arrows().iter().enumerate() {
            let mut m = ExactMatrix::zeros(&self.field, dims[t], dims[s]);
            let a = &self.maps[idx];
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    let v = a.get(r, c);
                    if !v.is_zero() {
                        m.set(r, c, v.clone());
                    }
                }
            }
            let b = &other.maps[idx];
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    let v = b.get(r, c);
                    if !v.is_zero() {
                        m.set(self.dims[t] + r, self.dims[s] + c, v.clone());
                    }
                }
            }
            maps.push(m);
        }
        Ok(QuiverRep {
            quiver: self.quiver.clone(),
            field: self.field.clone(),
            dims,
            maps,
        })
    }
}

/// The simple at vertex 1 of A2.
pub fn a2_s1(field: &FieldSpec) -> QuiverRep {
    let quiver = Arc::new(Quiver::a2());
    QuiverRep::new(
        quiver,
        field.clone(),
        vec![1, 0],
        vec![ExactMatrix::zeros(field, 0, 1)],
    )
    .expect("valid shape")
}

/// The simple at vertex 2 of A2.
pub fn a2_s2(field: &FieldSpec) -> QuiverRep {
    let quiver = Arc::new(Quiver::a2());
    QuiverRep::new(
        quiver,
        field.clone(),
        vec![0, 1],
        vec![ExactMatrix::zeros(field, 1, 0)],
    )
    .expect("valid shape")
}

/// The projective cover of S2: the field at both vertices with the
/// identity arrow; this is also the monoidal unit of rep(A2).
pub fn a2_p2(field: &FieldSpec) -> QuiverRep {
    QuiverRep::unit(Arc::new(Quiver::a2()), field.clone())
}

/// A map of representations: one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverMor {
    pub source: QuiverRep,
    pub target: QuiverRep,
    pub vertex_maps: Vec<ExactMatrix>,
}

impl QuiverMor {
    pub fn new(source: QuiverRep, target: QuiverRep, vertex_maps: Vec<ExactMatrix>) -> Result<Self> {
        if !same_quiver(&source.quiver, &target.quiver) {
            return Err(Error::context("morphism between different quivers"));
        }
        if vertex_maps.len() != source.quiver.vertices() {
            return Err(Error::shape(format!(
                "expected {} vertex maps, got {}",
                source.quiver.vertices(),
                vertex_maps.len()
            )));
        }
        for (v, m) in vertex_maps.iter().enumerate() {
            if (m.rows(), m.cols()) != (target.dims[v], source.dims[v]) {
                return Err(Error::shape(format!(
                    "vertex {v} map is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.dims[v],
                    source.dims[v]
                )));
            }
        }
        Ok(QuiverMor {
            source,
            target,
            vertex_maps,
        })
    }

    /// Whether every arrow square commutes.
    pub fn is_morphism(&self) -> Result<bool> {
        for (idx, &(s, t)) in self.source.quiver.arrows().iter().enumerate() {
            let lhs = self.vertex_maps[t].matmul(&self.source.maps[idx])?;
            let rhs = self.target.maps[idx].matmul(&self.vertex_maps[s])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Basis of the space of representation maps M -> N: per-vertex
/// matrices subject to one commuting-square condition per arrow.
pub fn quiver_hom_space(m: &QuiverRep, n: &QuiverRep) -> Result<Vec<Vec<ExactMatrix>>> {
    if !same_quiver(&m.quiver, &n.quiver) {
        return Err(Error::context("hom space between different quivers"));
    }
    if m.field != n.field {
        return Err(m.field.mismatch(&n.field));
    }
    let field = m.field.clone();
    let verts = m.quiver.vertices();
    // Unknown vector: concatenated column-major vec(f_v), one block
    // per vertex.
    let block_sizes: Vec<usize> = (0..verts).map(|v| m.dims[v] * n.dims[v]).collect();
    let total: usize = block_sizes.iter().sum();
    let offsets: Vec<usize> = block_sizes
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    if total == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<ExactMatrix> = Vec::new();
    for (idx, &(s, t)) in m.quiver.arrows().iter().enumerate() {
        // f_t phi^M - phi^N f_s = 0, vectorized: the f_t block gets
        // (phi^M)^T (x) I and the f_s block gets -(I (x) phi^N).
        let cond_rows = m.dims[s] * n.dims[t];
        if cond_rows == 0 {
            continue;
        }
        let mut row = ExactMatrix::zeros(&field, cond_rows, total);
        let a = m.maps[idx]
            .transpose()
            .kronecker(&ExactMatrix::identity(&field, n.dims[t]))?;
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                let v = a.get(r, c);
                if !v.is_zero() {
                    row.set(r, offsets[t] + c, v.clone());
                }
            }
        }
        let b = ExactMatrix::identity(&field, m.dims[s]).kronecker(&n.maps[idx])?;
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                let v = b.get(r, c);
                if !v.is_zero() {
                    row.set(r, offsets[s] + c, -v);
                }
            }
        }
        rows.push(row);
    }
    let stacked = match rows.len() {
        0 => ExactMatrix::zeros(&field, 0, total),
        _ => {
            let mut acc = rows[0].clone();
            for r in &rows[1..] {
                acc = acc.vstack(r)?;
            }
            acc
        }
    };
    let kernel = stacked.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for c in 0..kernel.cols() {
        let mut maps = Vec::with_capacity(verts);
        for v in 0..verts {
            let mut f = ExactMatrix::zeros(&field, n.dims[v], m.dims[v]);
            for col in 0..m.dims[v] {
                for row in 0..n.dims[v] {
                    let val = kernel.get(offsets[v] + col * n.dims[v] + row, c);
                    if !val.is_zero() {
                        f.set(row, col, val.clone());
                    }
                }
            }
            maps.push(f);
        }
        out.push(maps);
    }
    Ok(out)
}

/// An object of the A2 category presented by multiplicities of the
/// indecomposables: S1^s1 (+) S2^s2 (+) P2^p2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct A2Object {
    pub s1: usize,
    pub s2: usize,
    pub p2: usize,
}

impl A2Object {
    pub fn zero() -> Self {
        A2Object { s1: 0, s2: 0, p2: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.s1 == 0 && self.s2 == 0 && self.p2 == 0
    }

    /// Multiplicities of an arbitrary A2 representation, read off from
    /// the rank of its arrow map.
    pub fn of_rep(rep: &QuiverRep) -> Result<Self> {
        if rep.quiver().arrows() != Quiver::a2().arrows() || rep.dims().len() != 2 {
            return Err(Error::context("not an A2 representation"));
        }
        let r = rep.maps()[0].rank();
        Ok(A2Object {
            s1: rep.dims()[0] - r,
            s2: rep.dims()[1] - r,
            p2: r,
        })
    }

    /// The underlying representation, with basis order S1 copies then
    /// P2 copies at vertex 1, and S2 copies then P2 copies at vertex 2.
    pub fn to_rep(&self, field: &FieldSpec) -> QuiverRep {
        let quiver = Arc::new(Quiver::a2());
        let d1 = self.s1 + self.p2;
        let d2 = self.s2 + self.p2;
        let mut map = ExactMatrix::zeros(field, d2, d1);
        let one = ExactScalar::one(field);
        for i in 0..self.p2 {
            map.set(self.s2 + i, self.s1 + i, one.clone());
        }
        QuiverRep::new(quiver, field.clone(), vec![d1, d2], vec![map]).expect("valid shape")
    }
}

/// A map between multiplicity-typed A2 objects, stored as the five
/// blocks that can be nonzero: the diagonal blocks together with the
/// S2 -> P2 and P2 -> S1 components. Block (i, j) maps copies of
/// type i in the source to copies of type j in the target, so b23 has
/// shape p2(target) x s2(source) and b31 has shape s1(target) x
/// p2(source).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Hom {
    pub source: A2Object,
    pub target: A2Object,
    pub b11: ExactMatrix,
    pub b22: ExactMatrix,
    pub b33: ExactMatrix,
    pub b23: ExactMatrix,
    pub b31: ExactMatrix,
}

impl A2Hom {
    pub fn new(
        source: A2Object,
        target: A2Object,
        b11: ExactMatrix,
        b22: ExactMatrix,
        b33: ExactMatrix,
        b23: ExactMatrix,
        b31: ExactMatrix,
    ) -> Result<Self> {
        let shapes = [
            (&b11, target.s1, source.s1, "S1 -> S1"),
            (&b22, target.s2, source.s2, "S2 -> S2"),
            (&b33, target.p2, source.p2, "P2 -> P2"),
            (&b23, target.p2, source.s2, "S2 -> P2"),
            (&b31, target.s1, source.p2, "P2 -> S1"),
        ];
        for (m, r, c, label) in shapes {
            if (m.rows(), m.cols()) != (r, c) {
                return Err(Error::shape(format!(
                    "{label} block is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(A2Hom {
            source,
            target,
            b11,
            b22,
            b33,
            b23,
            b31,
        })
    }

    pub fn zero(field: &FieldSpec, source: A2Object, target: A2Object) -> Self {
        A2Hom {
            source,
            target,
            b11: ExactMatrix::zeros(field, target.s1, source.s1),
            b22: ExactMatrix::zeros(field, target.s2, source.s2),
            b33: ExactMatrix::zeros(field, target.p2, source.p2),
            b23: ExactMatrix::zeros(field, target.p2, source.s2),
            b31: ExactMatrix::zeros(field, target.s1, source.p2),
        }
    }

    pub fn identity(field: &FieldSpec, obj: A2Object) -> Self {
        A2Hom {
            source: obj,
            target: obj,
            b11: ExactMatrix::identity(field, obj.s1),
            b22: ExactMatrix::identity(field, obj.s2),
            b33: ExactMatrix::identity(field, obj.p2),
            b23: ExactMatrix::zeros(field, obj.p2, obj.s2),
            b31: ExactMatrix::zeros(field, obj.s1, obj.p2),
        }
    }

    pub fn add(&self, other: &A2Hom) -> Result<A2Hom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::context("sum of maps with different endpoints"));
        }
        Ok(A2Hom {
            source: self.source,
            target: self.target,
            b11: self.b11.add(&other.b11)?,
            b22: self.b22.add(&other.b22)?,
            b33: self.b33.add(&other.b33)?,
            b23: self.b23.add(&other.b23)?,
            b31: self.b31.add(&other.b31)?,
        })
    }

    /// Composition self . first, using that S2 -> P2 -> S1 composes
    /// to zero while the diagonal blocks compose through.
    pub fn compose_after(&self, first: &A2Hom) -> Result<A2Hom> {
        if first.target != self.source {
            return Err(Error::context("composition endpoint mismatch"));
        }
        Ok(A2Hom {
            source: first.source,
            target: self.target,
            b11: self.b11.matmul(&first.b11)?,
            b22: self.b22.matmul(&first.b22)?,
            b33: self.b33.matmul(&first.b33)?,
            b23: self
                .b23
                .matmul(&first.b22)?
                .add(&self.b33.matmul(&first.b23)?)?,
            b31: self
                .b11
                .matmul(&first.b31)?
                .add(&self.b31.matmul(&first.b33)?)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.b11.is_zero()
            && self.b22.is_zero()
            && self.b33.is_zero()
            && self.b23.is_zero()
            && self.b31.is_zero()
    }

    /// The underlying map of representations, in the basis order of
    /// [`A2Object::to_rep`].
    pub fn to_mor(&self, field: &FieldSpec) -> QuiverMor {
        let src = self.source.to_rep(field);
        let tgt = self.target.to_rep(field);
        let mut v1 = ExactMatrix::zeros(field, tgt.dims()[0], src.dims()[0]);
        // Vertex 1 carries S1 and P2 copies: blocks b11, b31, b33.
        copy_block(&mut v1, &self.b11, 0, 0);
        copy_block(&mut v1, &self.b31, 0, self.source.s1);
        copy_block(&mut v1, &self.b33, self.target.s1, self.source.s1);
        let mut v2 = ExactMatrix::zeros(field, tgt.dims()[1], src.dims()[1]);
        // Vertex 2 carries S2 and P2 copies: blocks b22, b23, b33.
        copy_block(&mut v2, &self.b22, 0, 0);
        copy_block(&mut v2, &self.b23, self.target.s2, 0);
        copy_block(&mut v2, &self.b33, self.target.s2, self.source.s2);
        QuiverMor::new(src, tgt, vec![v1, v2]).expect("valid shape")
    }
}

fn copy_block(dest: &mut ExactMatrix, block: &ExactMatrix, row0: usize, col0: usize) {
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            let v = block.get(r, c);
            if !v.is_zero() {
                dest.set(row0 + r, col0 + c, v.clone());
            }
        }
    }
}

/// Object part of the A2 endofunctor: S1 and S2 are killed and P2 is
/// sent to S2, so (s1, s2, p2) becomes (0, p2, 0).
pub fn a2_functor_object(obj: A2Object) -> A2Object {
    A2Object {
        s1: 0,
        s2: obj.p2,
        p2: 0,
    }
}

/// Map part of the A2 endofunctor: of the five blocks only the
/// S2 -> S2 one survives, transplanted verbatim into the image hom.
/// When its shape does not match the image hom and the image hom is
/// not trivially zero, the block is replaced by zero and a note is
/// returned describing the mismatch.
pub fn a2_functor_hom(field: &FieldSpec, f: &A2Hom) -> (A2Hom, Option<String>) {
    let source = a2_functor_object(f.source);
    let target = a2_functor_object(f.target);
    let mut out = A2Hom::zero(field, source, target);
    if source.s2 == 0 || target.s2 == 0 {
        return (out, None);
    }
    if (f.b22.rows(), f.b22.cols()) == (target.s2, source.s2) {
        out.b22 = f.b22.clone();
        (out, None)
    } else {
        let note = format!(
            "kept block has shape {}x{} but the image hom needs {}x{}; substituted zero",
            f.b22.rows(),
            f.b22.cols(),
            target.s2,
            source.s2
        );
        (out, Some(note))
    }
}
