//! Seeded generators for modules, representations, and complexes.
//!
//! Verification suites quantify over finite samples; the generators
//! here produce those samples deterministically from a seed so every
//! run is reproducible. Differentials of random complexes are drawn
//! from the actual morphism space of consecutive objects and then
//! projected onto the subspace composing to zero with the previous
//! differential, so every generated complex is valid by construction
//! rather than by rejection.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{FgAbelianGroup, GroupHom};
use crate::complex::backend::{AbelianBackend, HModuleBackend, LinearBackend, QuiverBackend};
use crate::complex::bounded::BoundedComplex;
use crate::hopf::module::HModule;
use crate::hopf::HopfAlgebra;
use crate::intmat::IntMatrix;
use crate::matrix::ExactMatrix;
use crate::quiver::{Quiver, QuiverRep};
use crate::scalar::{ExactScalar, FieldSpec};
use crate::Result;

/// Small modules over the algebra: the trivial module plus every
/// cyclic submodule of the regular representation generated by one
/// or two basis vectors, together with their left duals, filtered to
/// dimension at most max_dim.
pub fn module_pool(algebra: &Arc<HopfAlgebra>, max_dim: usize) -> Result<Vec<HModule>> {
    let field = algebra.field().clone();
    let dim = algebra.dim();
    let regular = HModule::regular(algebra.clone());
    let mut generators: Vec<Vec<ExactScalar>> = Vec::new();
    let basis_vec = |i: usize| {
        let mut v = vec![ExactScalar::zero(&field); dim];
        v[i] = ExactScalar::one(&field);
        v
    };
    for i in 0..dim {
        generators.push(basis_vec(i));
    }
    for i in 0..dim {
        for j in (i + 1)..dim {
            let mut v = basis_vec(i);
            v[j] = ExactScalar::one(&field);
            generators.push(v);
        }
    }
    let mut pool = vec![HModule::trivial(algebra.clone())];
    for v in generators {
        let (sub, _) = regular.submodule_generated_by(&[v])?;
        if sub.dim() >= 1 && sub.dim() <= max_dim {
            pool.push(sub);
        }
    }
    let duals: Vec<HModule> = pool.iter().map(|m| m.dual_left()).collect::<Result<_>>()?;
    pool.extend(duals);
    Ok(pool)
}

/// Draws count modules of dimension at most max_dim from the pool,
/// mixing in tensor products, direct sums, and duals of pool
/// members when the result stays within the bound.
pub fn random_modules(
    algebra: &Arc<HopfAlgebra>,
    count: usize,
    max_dim: usize,
    seed: u64,
) -> Result<Vec<HModule>> {
    let pool = module_pool(algebra, max_dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let a = pool[rng.random_range(0..pool.len())].clone();
        let m = match rng.random_range(0..4u32) {
            0 => {
                let b = &pool[rng.random_range(0..pool.len())];
                let t = a.tensor(b)?;
                if t.dim() <= max_dim {
                    t
                } else {
                    a
                }
            }
            1 => {
                let b = &pool[rng.random_range(0..pool.len())];
                let s = a.direct_sum(b)?;
                if s.dim() <= max_dim {
                    s
                } else {
                    a
                }
            }
            2 => a.dual_left()?,
            _ => a,
        };
        out.push(m);
    }
    Ok(out)
}

/// Representations of the quiver with vertex dimensions at most
/// max_dim and small integer arrow matrices.
pub fn random_quiver_reps(
    quiver: &Arc<Quiver>,
    field: &FieldSpec,
    count: usize,
    max_dim: usize,
    seed: u64,
) -> Result<Vec<QuiverRep>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let dims: Vec<usize> = (0..quiver.vertices())
            .map(|_| rng.random_range(0..=max_dim))
            .collect();
        let maps: Vec<ExactMatrix> = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                ExactMatrix::from_fn(field, dims[t], dims[s], |_, _| {
                    ExactScalar::from_int(field, rng.random_range(-2..=2))
                })
            })
            .collect();
        out.push(QuiverRep::new(quiver.clone(), field.clone(), dims, maps)?);
    }
    Ok(out)
}

/// A random combination of the kernel columns with coefficients in
/// [-2, 2]; columns of `kernel` index the admissible coefficient
/// vectors for the hom basis.
fn random_kernel_combo(
    field: &FieldSpec,
    rng: &mut ChaCha8Rng,
    kernel: &ExactMatrix,
) -> Vec<ExactScalar> {
    let mut coeffs = vec![ExactScalar::zero(field); kernel.rows()];
    for j in 0..kernel.cols() {
        let c = ExactScalar::from_int(field, rng.random_range(-2..=2));
        if c.is_zero() {
            continue;
        }
        for (i, coeff) in coeffs.iter_mut().enumerate() {
            *coeff = coeff.add(&c.mul(kernel.get(i, j)));
        }
    }
    coeffs
}

/// A random bounded complex with objects from the pool, degrees in
/// [-3, 3], and length at most max_len. Differentials are random
/// elements of the hom space constrained to compose to zero with the
/// previous one.
pub fn random_complex<B: LinearBackend>(
    backend: &B,
    rng: &mut ChaCha8Rng,
    max_len: usize,
    pool: &[B::Obj],
) -> Result<BoundedComplex<B>> {
    let field = backend.field().clone();
    let len = rng.random_range(1..=max_len.max(1));
    let lo = rng.random_range(-3..=(3 - (len as i64 - 1)));
    let objects: Vec<B::Obj> = (0..len)
        .map(|_| pool[rng.random_range(0..pool.len())].clone())
        .collect();
    let mut diffs: Vec<B::Mor> = Vec::new();
    for i in 0..len.saturating_sub(1) {
        let src = &objects[i];
        let tgt = &objects[i + 1];
        let basis = backend.hom_basis(src, tgt)?;
        if basis.is_empty() {
            diffs.push(backend.zero_mor(src, tgt));
            continue;
        }
        let raw_basis: Vec<ExactMatrix> = basis.iter().map(|t| backend.raw_matrix(t)).collect();
        let coeffs = match diffs.last() {
            None => (0..raw_basis.len())
                .map(|_| ExactScalar::from_int(&field, rng.random_range(-2..=2)))
                .collect::<Vec<_>>(),
            Some(prev) => {
                let prev_raw = backend.raw_matrix(prev);
                let products: Vec<ExactMatrix> = raw_basis
                    .iter()
                    .map(|t| t.matmul(&prev_raw))
                    .collect::<Result<_>>()?;
                let width = products[0].cols();
                let entries = products[0].rows() * width;
                let system = ExactMatrix::from_fn(&field, entries, products.len(), |r, c| {
                    if width == 0 {
                        ExactScalar::zero(&field)
                    } else {
                        products[c].get(r / width, r % width).clone()
                    }
                });
                random_kernel_combo(&field, rng, &system.kernel_basis())
            }
        };
        let mut raw = ExactMatrix::zeros(&field, backend.raw_dim(tgt), backend.raw_dim(src));
        for (c, t) in coeffs.iter().zip(&raw_basis) {
            if !c.is_zero() {
                raw = raw.add(&t.scale(c))?;
            }
        }
        diffs.push(backend.mor_from_raw(src, tgt, raw)?);
    }
    BoundedComplex::new(backend.clone(), lo, objects, diffs)
}

/// Seeded complexes of modules over the backend's algebra.
pub fn random_module_complexes(
    backend: &HModuleBackend,
    count: usize,
    max_dim: usize,
    max_len: usize,
    seed: u64,
) -> Result<Vec<BoundedComplex<HModuleBackend>>> {
    let pool = module_pool(backend.algebra(), max_dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_complex(backend, &mut rng, max_len, &pool))
        .collect()
}

/// Seeded complexes of quiver representations.
pub fn random_quiver_complexes(
    backend: &QuiverBackend,
    count: usize,
    max_dim: usize,
    max_len: usize,
    seed: u64,
) -> Result<Vec<BoundedComplex<QuiverBackend>>> {
    let pool = random_quiver_reps(backend.quiver(), backend.field(), 12, max_dim, seed ^ 0x5eed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_complex(backend, &mut rng, max_len, &pool))
        .collect()
}

/// Seeded complexes of finitely generated abelian groups: direct
/// sums of integer and cyclic stalks and two-term multiplication
/// complexes, in degrees [-2, 2].
pub fn random_abelian_complexes(
    count: usize,
    max_pieces: usize,
    seed: u64,
) -> Result<Vec<BoundedComplex<AbelianBackend>>> {
    let b = AbelianBackend::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let pieces = rng.random_range(1..=max_pieces.max(1));
        let mut parts = Vec::with_capacity(pieces);
        for _ in 0..pieces {
            let deg = rng.random_range(-2..=1);
            let part = match rng.random_range(0..3u32) {
                0 => BoundedComplex::stalk(b.clone(), FgAbelianGroup::free(1), deg),
                1 => {
                    let m = [2i64, 3, 4, 6][rng.random_range(0..4)];
                    BoundedComplex::stalk(b.clone(), FgAbelianGroup::cyclic(m), deg)
                }
                _ => {
                    let m = [1i64, 2, 3][rng.random_range(0..3)];
                    let z = FgAbelianGroup::free(1);
                    let hom =
                        GroupHom::new(z.clone(), z.clone(), IntMatrix::from_i64_rows(&[&[m]]))?;
                    BoundedComplex::new(b.clone(), deg, vec![z.clone(), z], vec![hom])?
                }
            };
            parts.push(part);
        }
        out.push(BoundedComplex::direct_sum(b.clone(), &parts)?);
    }
    Ok(out)
}
