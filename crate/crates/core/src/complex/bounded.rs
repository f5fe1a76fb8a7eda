//! Bounded cochain complexes and degree-zero chain maps.
//!
//! A complex stores its objects for a contiguous degree range [lo, hi]
//! together with the differentials between consecutive degrees; d² = 0
//! is verified at construction. Outside the stored range every object
//! is the zero object and every differential the zero morphism, so
//! degree indexing is total.
//!
//! The total tensor product follows the Koszul convention: on the
//! summand in bidegree (p, q) the differential is
//! d_X ⊗ id + (−1)^p id ⊗ d_Y, with summands ordered by ascending p.
//! Shifting by k multiplies every differential by (−1)^k.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::backend::{Backend, IsoVerdict};
use crate::error::Error;
use crate::Result;

/// A bounded cochain complex over a backend category.
#[derive(Clone)]
pub struct BoundedComplex<B: Backend> {
    backend: B,
    lo: i64,
    objects: Vec<B::Obj>,
    diffs: Vec<B::Mor>,
}

impl<B: Backend> BoundedComplex<B> {
    /// Builds a complex from consecutive objects starting at degree lo.
    ///
    /// `diffs[k]` must map `objects[k]` to `objects[k + 1]`, and any
    /// two consecutive differentials must compose to zero. An empty
    /// object list yields the zero complex.
    pub fn new(backend: B, lo: i64, objects: Vec<B::Obj>, diffs: Vec<B::Mor>) -> Result<Self> {
        if objects.is_empty() {
            if !diffs.is_empty() {
                return Err(Error::shape("differentials without objects"));
            }
            return Ok(Self::zero(backend));
        }
        if diffs.len() + 1 != objects.len() {
            return Err(Error::shape(format!(
                "{} objects need {} differentials, got {}",
                objects.len(),
                objects.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if !backend.obj_eq(&backend.mor_source(d), &objects[k])
                || !backend.obj_eq(&backend.mor_target(d), &objects[k + 1])
            {
                return Err(Error::DegreeMismatch(format!(
                    "differential at degree {} does not match its objects",
                    lo + k as i64
                )));
            }
        }
        for k in 0..diffs.len().saturating_sub(1) {
            let square = backend.compose(&diffs[k + 1], &diffs[k])?;
            if !backend.is_zero_mor(&square)? {
                return Err(Error::DifferentialSquare {
                    degree: lo + k as i64,
                });
            }
        }
        Ok(BoundedComplex {
            backend,
            lo,
            objects,
            diffs,
        })
    }

    /// The zero complex, stored as a single zero object in degree 0.
    pub fn zero(backend: B) -> Self {
        let z = backend.zero_obj();
        BoundedComplex {
            backend,
            lo: 0,
            objects: vec![z],
            diffs: Vec::new(),
        }
    }

    /// A single object placed in the given degree.
    pub fn stalk(backend: B, obj: B::Obj, degree: i64) -> Self {
        BoundedComplex {
            backend,
            lo: degree,
            objects: vec![obj],
            diffs: Vec::new(),
        }
    }

    /// The unit object as a stalk in degree 0.
    pub fn unit_stalk(backend: B) -> Self {
        let u = backend.unit_obj();
        Self::stalk(backend, u, 0)
    }

    pub fn backend(&self) -> &B {
        &self.backend
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    /// The object in degree n, zero outside the stored range.
    pub fn obj(&self, n: i64) -> B::Obj {
        if n < self.lo || n > self.hi() {
            self.backend.zero_obj()
        } else {
            self.objects[(n - self.lo) as usize].clone()
        }
    }

    /// The differential leaving degree n, zero outside the range.
    pub fn diff(&self, n: i64) -> B::Mor {
        if n >= self.lo && n < self.hi() {
            self.diffs[(n - self.lo) as usize].clone()
        } else {
            self.backend.zero_mor(&self.obj(n), &self.obj(n + 1))
        }
    }

    /// Whether every stored object is the zero object.
    pub fn is_zero_complex(&self) -> bool {
        self.objects.iter().all(|o| self.backend.is_zero_obj(o))
    }

    /// Degree-wise equality of the stored data, range included.
    pub fn strictly_equals(&self, other: &Self) -> Result<bool> {
        if !self.backend.same_context(&other.backend) {
            return Ok(false);
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        for n in lo..=hi {
            if !self.backend.obj_eq(&self.obj(n), &other.obj(n)) {
                return Ok(false);
            }
            if n < hi && !self.backend.mor_eq(&self.diff(n), &other.diff(n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The shift Σ^k: degree n holds X^{n + k} and every differential
    /// picks up the sign (−1)^k.
    pub fn shift(&self, k: i64) -> Self {
        let diffs = if k.rem_euclid(2) == 1 {
            self.diffs.iter().map(|d| self.backend.neg_mor(d)).collect()
        } else {
            self.diffs.clone()
        };
        BoundedComplex {
            backend: self.backend.clone(),
            lo: self.lo - k,
            objects: self.objects.clone(),
            diffs,
        }
    }

    /// Degree-wise direct sum of complexes over a shared backend.
    pub fn direct_sum(backend: B, summands: &[Self]) -> Result<Self> {
        if summands.is_empty() {
            return Ok(Self::zero(backend));
        }
        if summands
            .iter()
            .any(|x| !backend.same_context(x.backend()))
        {
            return Err(Error::context("direct sum across backends"));
        }
        let lo = summands.iter().map(|x| x.lo()).min().unwrap_or(0);
        let hi = summands.iter().map(|x| x.hi()).max().unwrap_or(0);
        let mut objects = Vec::with_capacity((hi - lo + 1) as usize);
        for n in lo..=hi {
            let parts: Vec<B::Obj> = summands.iter().map(|x| x.obj(n)).collect();
            objects.push(backend.direct_sum(&parts)?);
        }
        let mut diffs = Vec::with_capacity((hi - lo) as usize);
        for n in lo..hi {
            let src: Vec<B::Obj> = summands.iter().map(|x| x.obj(n)).collect();
            let tgt: Vec<B::Obj> = summands.iter().map(|x| x.obj(n + 1)).collect();
            let mut d = backend.zero_mor(&objects[(n - lo) as usize], &objects[(n - lo + 1) as usize]);
            for (i, x) in summands.iter().enumerate() {
                let term = backend.compose(
                    &backend.compose(&backend.incl(&tgt, i)?, &x.diff(n))?,
                    &backend.proj(&src, i)?,
                )?;
                d = backend.add_mor(&d, &term)?;
            }
            diffs.push(d);
        }
        Self::new(backend, lo, objects, diffs)
    }

    /// The bidegrees (p, q) with p + q = n contributing to the total
    /// tensor product, ascending in p.
    pub fn tensor_summands(&self, other: &Self, n: i64) -> Vec<(i64, i64)> {
        let p_min = self.lo.max(n - other.hi());
        let p_max = self.hi().min(n - other.lo);
        (p_min..=p_max).map(|p| (p, n - p)).collect()
    }

    /// The tensor objects for the given bidegree pairs, in order.
    pub fn summand_objects(&self, other: &Self, pairs: &[(i64, i64)]) -> Result<Vec<B::Obj>> {
        pairs
            .iter()
            .map(|&(p, q)| self.backend.tensor_obj(&self.obj(p), &other.obj(q)))
            .collect()
    }

    /// The total tensor product complex.
    pub fn total_tensor(&self, other: &Self) -> Result<Self> {
        if !self.backend.same_context(&other.backend) {
            return Err(Error::context(
                "tensor of complexes over different backends",
            ));
        }
        let b = &self.backend;
        let lo = self.lo + other.lo;
        let hi = self.hi() + other.hi();
        let mut objects = Vec::with_capacity((hi - lo + 1) as usize);
        let mut parts_by_degree = Vec::with_capacity((hi - lo + 1) as usize);
        for n in lo..=hi {
            let pairs = self.tensor_summands(other, n);
            let parts = self.summand_objects(other, &pairs)?;
            objects.push(b.direct_sum(&parts)?);
            parts_by_degree.push((pairs, parts));
        }
        let mut diffs = Vec::with_capacity((hi - lo) as usize);
        for n in lo..hi {
            let (pairs, parts) = &parts_by_degree[(n - lo) as usize];
            let (next_pairs, next_parts) = &parts_by_degree[(n - lo + 1) as usize];
            let mut d = b.zero_mor(&objects[(n - lo) as usize], &objects[(n - lo + 1) as usize]);
            for (idx, &(p, q)) in pairs.iter().enumerate() {
                let from = b.proj(parts, idx)?;
                if let Some(tgt) = next_pairs.iter().position(|&pq| pq == (p + 1, q)) {
                    let step = b.tensor_mor(&self.diff(p), &b.identity(&other.obj(q)))?;
                    let term = b.compose(&b.incl(next_parts, tgt)?, &b.compose(&step, &from)?)?;
                    d = b.add_mor(&d, &term)?;
                }
                if let Some(tgt) = next_pairs.iter().position(|&pq| pq == (p, q + 1)) {
                    let step = b.tensor_mor(&b.identity(&self.obj(p)), &other.diff(q))?;
                    let mut term =
                        b.compose(&b.incl(next_parts, tgt)?, &b.compose(&step, &from)?)?;
                    if p.rem_euclid(2) == 1 {
                        term = b.neg_mor(&term);
                    }
                    d = b.add_mor(&d, &term)?;
                }
            }
            diffs.push(d);
        }
        Self::new(b.clone(), lo, objects, diffs)
    }

    /// Kernel, cohomology object and the connecting maps at degree n.
    pub fn cohomology_data(&self, n: i64) -> Result<CohomologyData<B>> {
        let b = &self.backend;
        let (kernel, kernel_incl) = b.kernel(&self.diff(n))?;
        let into_kernel = b.lift_through_mono(&self.diff(n - 1), &kernel_incl)?;
        let (object, proj) = b.cokernel(&into_kernel)?;
        Ok(CohomologyData {
            kernel,
            kernel_incl,
            object,
            proj,
        })
    }

    /// The cohomology object H^n = ker(d^n) / im(d^{n−1}).
    pub fn cohomology(&self, n: i64) -> Result<B::Obj> {
        Ok(self.cohomology_data(n)?.object)
    }

    /// The smart truncation τ^{≤n} with its inclusion into self.
    ///
    /// Degrees above n are cut off and the object in degree n is
    /// replaced by ker(d^n), so cohomology up to degree n is preserved
    /// and vanishes above.
    pub fn truncate_le(&self, n: i64) -> Result<(Self, ChainMap<B>)> {
        let b = &self.backend;
        if n >= self.hi() {
            let map = ChainMap::identity(self);
            return Ok((self.clone(), map));
        }
        if n < self.lo {
            let zero = Self::zero(b.clone());
            let map = ChainMap::zero(&zero, self)?;
            return Ok((zero, map));
        }
        let (kernel, kernel_incl) = b.kernel(&self.diff(n))?;
        let mut objects: Vec<B::Obj> = (self.lo..n).map(|m| self.obj(m)).collect();
        objects.push(kernel);
        let mut diffs: Vec<B::Mor> = (self.lo..n - 1).map(|m| self.diff(m)).collect();
        let mut components: Vec<B::Mor> = (self.lo..n).map(|m| b.identity(&self.obj(m))).collect();
        if n > self.lo {
            diffs.push(b.lift_through_mono(&self.diff(n - 1), &kernel_incl)?);
        }
        components.push(kernel_incl);
        let trunc = Self::new(b.clone(), self.lo, objects, diffs)?;
        let map = ChainMap::new(trunc.clone(), self.clone(), self.lo, components)?;
        Ok((trunc, map))
    }

    /// The smart truncation τ^{≥n} with the projection from self.
    ///
    /// Degrees below n are cut off and the object in degree n is
    /// replaced by coker(d^{n−1}).
    pub fn truncate_ge(&self, n: i64) -> Result<(Self, ChainMap<B>)> {
        let b = &self.backend;
        if n <= self.lo {
            let map = ChainMap::identity(self);
            return Ok((self.clone(), map));
        }
        if n > self.hi() {
            let zero = Self::zero(b.clone());
            let map = ChainMap::zero(self, &zero)?;
            return Ok((zero, map));
        }
        let (coker, proj) = b.cokernel(&self.diff(n - 1))?;
        let mut objects = vec![coker];
        objects.extend((n + 1..=self.hi()).map(|m| self.obj(m)));
        let mut diffs = Vec::new();
        if n < self.hi() {
            diffs.push(b.descend_through_epi(&self.diff(n), &proj)?);
            diffs.extend((n + 1..self.hi()).map(|m| self.diff(m)));
        }
        let mut components = vec![proj];
        components.extend((n + 1..=self.hi()).map(|m| b.identity(&self.obj(m))));
        let trunc = Self::new(b.clone(), n, objects, diffs)?;
        let map = ChainMap::new(self.clone(), trunc.clone(), n, components)?;
        Ok((trunc, map))
    }
}

/// The kernel and cohomology of a complex at one degree, with the
/// inclusion ker(d^n) -> X^n and the projection ker(d^n) -> H^n.
pub struct CohomologyData<B: Backend> {
    pub kernel: B::Obj,
    pub kernel_incl: B::Mor,
    pub object: B::Obj,
    pub proj: B::Mor,
}

/// A degree-zero chain map between two complexes over one backend.
///
/// Components are stored over the union of the two degree ranges and
/// padded with zero morphisms outside; every square is verified to
/// commute at construction.
#[derive(Clone)]
pub struct ChainMap<B: Backend> {
    source: BoundedComplex<B>,
    target: BoundedComplex<B>,
    lo: i64,
    components: Vec<B::Mor>,
}

impl<B: Backend> ChainMap<B> {
    /// Builds a chain map from components starting at degree lo; the
    /// given degrees may cover any subrange, the rest is zero-padded.
    pub fn new(
        source: BoundedComplex<B>,
        target: BoundedComplex<B>,
        lo: i64,
        components: Vec<B::Mor>,
    ) -> Result<Self> {
        let b = source.backend().clone();
        if !b.same_context(target.backend()) {
            return Err(Error::context("chain map between different backends"));
        }
        let union_lo = source.lo().min(target.lo());
        let union_hi = source.hi().max(target.hi());
        let given_hi = lo + components.len() as i64 - 1;
        for (k, c) in components.iter().enumerate() {
            let n = lo + k as i64;
            if !b.obj_eq(&b.mor_source(c), &source.obj(n))
                || !b.obj_eq(&b.mor_target(c), &target.obj(n))
            {
                return Err(Error::DegreeMismatch(format!(
                    "component at degree {n} does not match the complexes"
                )));
            }
        }
        let mut padded = Vec::with_capacity((union_hi - union_lo + 1) as usize);
        for n in union_lo..=union_hi {
            let c = if n >= lo && n <= given_hi {
                components[(n - lo) as usize].clone()
            } else {
                b.zero_mor(&source.obj(n), &target.obj(n))
            };
            padded.push(c);
        }
        let map = ChainMap {
            source,
            target,
            lo: union_lo,
            components: padded,
        };
        for n in (union_lo - 1)..=union_hi {
            let down_then_map = map
                .backend()
                .compose(&map.component(n + 1), &map.source.diff(n))?;
            let map_then_down = map
                .backend()
                .compose(&map.target.diff(n), &map.component(n))?;
            if !map.backend().mor_eq(&down_then_map, &map_then_down)? {
                return Err(Error::NotAChainMap { degree: n });
            }
        }
        Ok(map)
    }

    pub fn identity(x: &BoundedComplex<B>) -> Self {
        let b = x.backend();
        let components = (x.lo()..=x.hi()).map(|n| b.identity(&x.obj(n))).collect();
        ChainMap {
            source: x.clone(),
            target: x.clone(),
            lo: x.lo(),
            components,
        }
    }

    pub fn zero(source: &BoundedComplex<B>, target: &BoundedComplex<B>) -> Result<Self> {
        ChainMap::new(source.clone(), target.clone(), 0, Vec::new())
    }

    pub fn source(&self) -> &BoundedComplex<B> {
        &self.source
    }

    pub fn target(&self) -> &BoundedComplex<B> {
        &self.target
    }

    pub fn backend(&self) -> &B {
        self.source.backend()
    }

    /// The component in degree n, zero-padded outside the stored range.
    pub fn component(&self, n: i64) -> B::Mor {
        let hi = self.lo + self.components.len() as i64 - 1;
        if n >= self.lo && n <= hi {
            self.components[(n - self.lo) as usize].clone()
        } else {
            self.backend()
                .zero_mor(&self.source.obj(n), &self.target.obj(n))
        }
    }

    /// Composition self after first.
    pub fn compose_after(&self, first: &ChainMap<B>) -> Result<ChainMap<B>> {
        if !first.target.strictly_equals(&self.source)? {
            return Err(Error::context(
                "chain map composition through unequal complexes",
            ));
        }
        let lo = first.source.lo().min(self.target.lo());
        let hi = first.source.hi().max(self.target.hi());
        let b = self.backend();
        let components = (lo..=hi)
            .map(|n| b.compose(&self.component(n), &first.component(n)))
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(first.source.clone(), self.target.clone(), lo, components)
    }

    pub fn equals(&self, other: &ChainMap<B>) -> Result<bool> {
        if !self.source.strictly_equals(&other.source)?
            || !self.target.strictly_equals(&other.target)?
        {
            return Ok(false);
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.components.len() as i64).max(other.lo + other.components.len() as i64);
        for n in lo..hi {
            if !self.backend().mor_eq(&self.component(n), &other.component(n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_map(&self) -> Result<bool> {
        for c in &self.components {
            if !self.backend().is_zero_mor(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The tensor product of two chain maps between the total tensor
    /// complexes, acting as u ⊗ v on each summand without extra signs.
    pub fn tensor(&self, other: &ChainMap<B>) -> Result<ChainMap<B>> {
        let b = self.backend().clone();
        let source = self.source.total_tensor(&other.source)?;
        let target = self.target.total_tensor(&other.target)?;
        let lo = source.lo().min(target.lo());
        let hi = source.hi().max(target.hi());
        let mut components = Vec::with_capacity((hi - lo + 1) as usize);
        for n in lo..=hi {
            let src_pairs = self.source.tensor_summands(&other.source, n);
            let src_parts = self.source.summand_objects(&other.source, &src_pairs)?;
            let tgt_pairs = self.target.tensor_summands(&other.target, n);
            let tgt_parts = self.target.summand_objects(&other.target, &tgt_pairs)?;
            let mut comp = b.zero_mor(&source.obj(n), &target.obj(n));
            for (si, &(p, q)) in src_pairs.iter().enumerate() {
                if let Some(ti) = tgt_pairs.iter().position(|&pq| pq == (p, q)) {
                    let block = b.tensor_mor(&self.component(p), &other.component(q))?;
                    let term = b.compose(
                        &b.incl(&tgt_parts, ti)?,
                        &b.compose(&block, &b.proj(&src_parts, si)?)?,
                    )?;
                    comp = b.add_mor(&comp, &term)?;
                }
            }
            components.push(comp);
        }
        ChainMap::new(source, target, lo, components)
    }

    /// The map induced on cohomology in degree n.
    pub fn induced_on_cohomology(&self, n: i64) -> Result<B::Mor> {
        let b = self.backend();
        let s = self.source.cohomology_data(n)?;
        let t = self.target.cohomology_data(n)?;
        let into_target = b.compose(&self.component(n), &s.kernel_incl)?;
        let cycles = b.lift_through_mono(&into_target, &t.kernel_incl)?;
        let classes = b.compose(&t.proj, &cycles)?;
        b.descend_through_epi(&classes, &s.proj)
    }

    /// Whether the map induces isomorphisms on all cohomology objects.
    ///
    /// The verdict is definitive for every provided backend; the
    /// undetermined variant is reserved for backends whose isomorphism
    /// test is a search.
    pub fn is_quasi_isomorphism(&self) -> Result<IsoVerdict> {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        for n in lo..=hi {
            if !self.backend().mor_is_iso(&self.induced_on_cohomology(n)?)? {
                return Ok(IsoVerdict::No);
            }
        }
        Ok(IsoVerdict::Yes)
    }
}
