//! Randomized properties of the linear algebra layer, the group and
//! complex structures, and the t-structure predicates.

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use tenscat_core::abelian::FgAbelianGroup;
use tenscat_core::complex::{
    dual_complex, dual_complex_right, AbelianBackend, Backend, BoundedComplex, ChainMap,
    HModuleBackend, IsoVerdict,
};
use tenscat_core::hopf::builders::sweedler;
use tenscat_core::hopf::module::ModuleMor;
use tenscat_core::intmat::IntMatrix;
use tenscat_core::matrix::ExactMatrix;
use tenscat_core::sample;
use tenscat_core::scalar::{ExactScalar, FieldSpec};
use tenscat_core::verify::{aisle_membership, heart_membership, AisleSpec};

fn entries(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, cols), rows)
}

fn any_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| entries(r, c))
}

fn qmat(field: &FieldSpec, rows: &[Vec<i64>]) -> ExactMatrix {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    ExactMatrix::from_fn(field, r, c, |i, j| ExactScalar::from_int(field, rows[i][j]))
}

fn imat(rows: &[Vec<i64>]) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    IntMatrix::from_i64_rows(&refs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rank_is_invariant_under_transpose(rows in any_matrix(3)) {
        let q = FieldSpec::rationals();
        let m = qmat(&q, &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_basis_annihilates_and_has_complementary_rank(rows in any_matrix(3)) {
        let q = FieldSpec::rationals();
        let m = qmat(&q, &rows);
        let kernel = m.kernel_basis();
        prop_assert!(m.matmul(&kernel).unwrap().is_zero());
        prop_assert_eq!(kernel.cols(), m.cols() - m.rank());
        prop_assert_eq!(kernel.rank(), kernel.cols());
    }

    #[test]
    fn kronecker_respects_composition(
        (a, b, c, d) in (1..=2usize, 1..=2usize, 1..=2usize, 1..=2usize, 1..=2usize, 1..=2usize)
            .prop_flat_map(|(m, n, p, s, t, u)| (entries(m, n), entries(n, p), entries(s, t), entries(t, u)))
    ) {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let (a, b, c, d) = (qmat(&f5, &a), qmat(&f5, &b), qmat(&f5, &c), qmat(&f5, &d));
        let left = a.kronecker(&c).unwrap().matmul(&b.kronecker(&d).unwrap()).unwrap();
        let right = a.matmul(&b).unwrap().kronecker(&c.matmul(&d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn smith_normal_form_contract(rows in any_matrix(3)) {
        let a = imat(&rows);
        let snf = a.smith_normal_form();
        prop_assert_eq!(snf.u.matmul(&a).unwrap().matmul(&snf.v).unwrap(), snf.d.clone());
        for r in 0..snf.d.rows() {
            for c in 0..snf.d.cols() {
                if r != c {
                    prop_assert_eq!(snf.d.get(r, c), &BigInt::from(0));
                }
            }
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if w[0] == BigInt::from(0) {
                prop_assert_eq!(&w[1], &BigInt::from(0));
            } else {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            }
        }
        let u_diag = snf.u.smith_normal_form().diagonal();
        let v_diag = snf.v.smith_normal_form().diagonal();
        prop_assert!(u_diag.iter().all(|x| *x == BigInt::from(1)));
        prop_assert!(v_diag.iter().all(|x| *x == BigInt::from(1)));
    }

    #[test]
    fn invariant_factors_ignore_redundant_relations(
        rows in (1..=3usize, 0..=3usize).prop_flat_map(|(g, r)| entries(g, r)),
        combo in proptest::collection::vec(-2i64..=2, 0..=3),
    ) {
        let gens = rows.len();
        let relations = imat(&rows);
        let group = FgAbelianGroup::new(gens, relations.clone()).unwrap();
        let mut extra = IntMatrix::zeros(gens, 1);
        for c in 0..relations.cols().min(combo.len()) {
            for r in 0..gens {
                let v = extra.get(r, 0) + relations.get(r, c) * BigInt::from(combo[c]);
                extra.set(r, 0, v);
            }
        }
        let padded = FgAbelianGroup::new(gens, relations.hstack(&extra).unwrap()).unwrap();
        prop_assert_eq!(group.invariant_factors(), padded.invariant_factors());
    }

    #[test]
    fn abelian_tensor_is_symmetric(
        a in (1..=2usize, 0..=2usize).prop_flat_map(|(g, r)| entries(g, r)),
        b in (1..=2usize, 0..=2usize).prop_flat_map(|(g, r)| entries(g, r)),
    ) {
        let x = FgAbelianGroup::new(a.len(), imat(&a)).unwrap();
        let y = FgAbelianGroup::new(b.len(), imat(&b)).unwrap();
        prop_assert_eq!(
            x.tensor(&y).invariant_factors(),
            y.tensor(&x).invariant_factors()
        );
    }
}

#[test]
fn cyclotomic_generators_are_primitive_roots() {
    for n in 2..=10u64 {
        let field = FieldSpec::cyclotomic(n).unwrap();
        let zeta = ExactScalar::zeta(&field).unwrap();
        let one = ExactScalar::one(&field);
        assert_eq!(zeta.pow(n), one, "zeta_{n}^{n} != 1");
        for k in 1..n {
            assert_ne!(zeta.pow(k), one, "zeta_{n}^{k} == 1");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn shift_round_trips_and_respects_aisles(seed in any::<u64>(), k in -2i64..=2, n in -1i64..=1) {
        let x = sample::random_abelian_complexes(1, 3, seed).unwrap().remove(0);
        prop_assert!(x.shift(k).shift(-k).strictly_equals(&x).unwrap());
        prop_assert_eq!(
            aisle_membership(&x, AisleSpec::le(n)).unwrap(),
            aisle_membership(&x.shift(-k), AisleSpec::le(n + k)).unwrap()
        );
        prop_assert_eq!(
            aisle_membership(&x, AisleSpec::ge(n)).unwrap(),
            aisle_membership(&x.shift(-k), AisleSpec::ge(n + k)).unwrap()
        );
    }

    #[test]
    fn heart_means_cohomology_concentrated_in_degree_zero(seed in any::<u64>()) {
        let x = sample::random_abelian_complexes(1, 3, seed).unwrap().remove(0);
        let b = x.backend().clone();
        let mut concentrated = true;
        for i in x.lo()..=x.hi() {
            if i != 0 && !b.is_zero_obj(&x.cohomology(i).unwrap()) {
                concentrated = false;
            }
        }
        prop_assert_eq!(heart_membership(&x).unwrap(), concentrated);
    }

    #[test]
    fn truncation_preserves_cohomology_on_its_side(seed in any::<u64>(), n in -1i64..=1) {
        let x = sample::random_abelian_complexes(1, 3, seed).unwrap().remove(0);
        let b = x.backend().clone();
        let (le, le_map) = x.truncate_le(n).unwrap();
        for i in (x.lo() - 1)..=(x.hi() + 1) {
            if i <= n {
                prop_assert!(b.mor_is_iso(&le_map.induced_on_cohomology(i).unwrap()).unwrap());
            } else {
                prop_assert!(b.is_zero_obj(&le.cohomology(i).unwrap()));
            }
        }
        let (ge, ge_map) = x.truncate_ge(n).unwrap();
        for i in (x.lo() - 1)..=(x.hi() + 1) {
            if i >= n {
                prop_assert!(b.mor_is_iso(&ge_map.induced_on_cohomology(i).unwrap()).unwrap());
            } else {
                prop_assert!(b.is_zero_obj(&ge.cohomology(i).unwrap()));
            }
        }
    }

    #[test]
    fn induced_maps_compose_functorially(seed in any::<u64>()) {
        let b = AbelianBackend::new();
        let x = sample::random_abelian_complexes(1, 2, seed).unwrap().remove(0);
        let z = FgAbelianGroup::free(1);
        let id_hom = tenscat_core::abelian::GroupHom::identity(&z);
        let acyclic = BoundedComplex::new(b.clone(), 0, vec![z.clone(), z], vec![id_hom]).unwrap();
        let sum = BoundedComplex::direct_sum(b.clone(), &[x.clone(), acyclic.clone()]).unwrap();
        let lo = sum.lo();
        let parts: Vec<Vec<_>> = (lo..=sum.hi())
            .map(|d| vec![x.obj(d), acyclic.obj(d)])
            .collect();
        let incls = parts.iter().map(|p| b.incl(p, 0).unwrap()).collect();
        let projs = parts.iter().map(|p| b.proj(p, 0).unwrap()).collect();
        let f = ChainMap::new(x.clone(), sum.clone(), lo, incls).unwrap();
        let g = ChainMap::new(sum, x.clone(), lo, projs).unwrap();
        let gf = g.compose_after(&f).unwrap();
        for i in x.lo()..=x.hi() {
            let composed = b
                .compose(
                    &g.induced_on_cohomology(i).unwrap(),
                    &f.induced_on_cohomology(i).unwrap(),
                )
                .unwrap();
            prop_assert!(b.mor_eq(&gf.induced_on_cohomology(i).unwrap(), &composed).unwrap());
            prop_assert!(b.mor_is_iso(&composed).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn tensoring_preserves_quasi_isomorphisms_over_a_field(seed in any::<u64>()) {
        let field = FieldSpec::rationals();
        let algebra = Arc::new(sweedler(&field).unwrap());
        let b = HModuleBackend::new(algebra.clone());
        let x = sample::random_module_complexes(&b, 1, 3, 2, seed).unwrap().remove(0);
        let m = sample::random_modules(&algebra, 1, 3, seed ^ 1).unwrap().remove(0);
        let id_mor = ModuleMor::new(
            m.clone(),
            m.clone(),
            ExactMatrix::identity(&field, m.dim()),
        )
        .unwrap();
        let acyclic =
            BoundedComplex::new(b.clone(), x.lo(), vec![m.clone(), m], vec![id_mor]).unwrap();
        let sum = BoundedComplex::direct_sum(b.clone(), &[x.clone(), acyclic.clone()]).unwrap();
        let lo = sum.lo();
        let incls = (lo..=sum.hi())
            .map(|d| b.incl(&[x.obj(d), acyclic.obj(d)], 0).unwrap())
            .collect();
        let f = ChainMap::new(x.clone(), sum, lo, incls).unwrap();
        prop_assert_eq!(f.is_quasi_isomorphism().unwrap(), IsoVerdict::Yes);
        let y = BoundedComplex::stalk(
            b.clone(),
            sample::random_modules(&algebra, 1, 3, seed ^ 2).unwrap().remove(0),
            0,
        );
        let tensored = f.tensor(&ChainMap::identity(&y)).unwrap();
        prop_assert_eq!(tensored.is_quasi_isomorphism().unwrap(), IsoVerdict::Yes);
    }

    #[test]
    fn duals_swap_the_aisles(seed in any::<u64>()) {
        let field = FieldSpec::rationals();
        let algebra = Arc::new(sweedler(&field).unwrap());
        let b = HModuleBackend::new(algebra);
        let x = sample::random_module_complexes(&b, 1, 3, 2, seed).unwrap().remove(0);
        let nonpositive = x.shift(x.hi());
        for data in [
            dual_complex(&nonpositive).unwrap(),
            dual_complex_right(&nonpositive).unwrap(),
        ] {
            prop_assert!(aisle_membership(&data.dual, AisleSpec::ge(0)).unwrap());
        }
    }

    #[test]
    fn total_tensor_differentials_square_to_zero(seed in any::<u64>()) {
        let field = FieldSpec::rationals();
        let algebra = Arc::new(sweedler(&field).unwrap());
        let b = HModuleBackend::new(algebra);
        let mut pair = sample::random_module_complexes(&b, 2, 3, 3, seed).unwrap();
        let y = pair.pop().unwrap();
        let x = pair.pop().unwrap();
        let total = x.total_tensor(&y).unwrap();
        for n in (total.lo() - 1)..=total.hi() {
            let square = b.compose(&total.diff(n + 1), &total.diff(n)).unwrap();
            prop_assert!(b.is_zero_mor(&square).unwrap());
        }
    }
}
