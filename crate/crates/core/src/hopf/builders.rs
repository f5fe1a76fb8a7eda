//! Built-in Hopf algebras: group algebras of the groups of order at
//! most 8, Sweedler's four-dimensional algebra, and the Taft algebras.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hopf::HopfAlgebra;
use crate::matrix::ExactMatrix;
use crate::scalar::{ExactScalar, FieldSpec};
use crate::Result;

/// Multiplication table of a finite group; entry [i][j] is the index
/// of the product of elements i and j, with index 0 the identity.
fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Direct product of two groups given by tables; pairs are indexed
/// (a, b) -> a * |B| + b.
fn product_table(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (na, nb) = (a.len(), b.len());
    let mut t = vec![vec![0; na * nb]; na * nb];
    for i1 in 0..na {
        for j1 in 0..nb {
            for i2 in 0..na {
                for j2 in 0..nb {
                    t[i1 * nb + j1][i2 * nb + j2] = a[i1][i2] * nb + b[j1][j2];
                }
            }
        }
    }
    t
}

/// Dihedral-style presentation on pairs (a, b) with a mod n, b mod 2
/// and (a, b)(c, d) = (a + (-1)^b c, b + d); n = 3 gives S3, n = 4
/// gives D4. Pairs are indexed a * 2 + b.
fn dihedral_table(n: usize) -> Vec<Vec<usize>> {
    let idx = |a: usize, b: usize| a * 2 + b;
    let mut t = vec![vec![0; 2 * n]; 2 * n];
    for a in 0..n {
        for b in 0..2 {
            for c in 0..n {
                for d in 0..2 {
                    let e = if b == 0 { (a + c) % n } else { (a + n - c % n) % n };
                    t[idx(a, b)][idx(c, d)] = idx(e, (b + d) % 2);
                }
            }
        }
    }
    t
}

/// Quaternion group on {1, -1, i, -i, j, -j, k, -k} in that order.
fn quaternion_table() -> Vec<Vec<usize>> {
    // Element 2a + s encodes axis a (0 = 1, 1 = i, 2 = j, 3 = k) with
    // sign (-1)^s. Axis products follow i j = k cyclically.
    let axis_mul = |x: usize, y: usize| -> (usize, usize) {
        match (x, y) {
            (0, a) => (a, 0),
            (a, 0) => (a, 0),
            (a, b) if a == b => (0, 1),
            (1, 2) => (3, 0),
            (2, 3) => (1, 0),
            (3, 1) => (2, 0),
            (2, 1) => (3, 1),
            (3, 2) => (1, 1),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let mut t = vec![vec![0; 8]; 8];
    for x in 0..4 {
        for s in 0..2 {
            for y in 0..4 {
                for r in 0..2 {
                    let (axis, flip) = axis_mul(x, y);
                    t[2 * x + s][2 * y + r] = 2 * axis + (s + r + flip) % 2;
                }
            }
        }
    }
    t
}

/// Checks the group axioms on a multiplication table: closure,
/// identity at index 0, associativity, and inverses.
fn validate_group_table(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
        }
        for &v in row {
            if v >= n {
                return Err(Error::NotAGroup(format!("entry {v} out of range")));
            }
        }
    }
    for i in 0..n {
        if table[0][i] != i || table[i][0] != i {
            return Err(Error::NotAGroup("index 0 is not an identity".into()));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == 0 && table[j][i] == 0) {
            return Err(Error::NotAGroup(format!("element {i} has no inverse")));
        }
    }
    Ok(())
}

/// Group algebra of a finite group given by its multiplication table:
/// basis elements are grouplike, the antipode sends g to g^-1.
pub fn group_algebra_from_table(field: &FieldSpec, table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    validate_group_table(table)?;
    let n = table.len();
    let one = ExactScalar::one(field);
    let zero = ExactScalar::zero(field);

    let mut mult = vec![zero.clone(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            mult[(i * n + j) * n + table[i][j]] = one.clone();
        }
    }
    let mut unit = vec![zero.clone(); n];
    unit[0] = one.clone();
    let mut comult = ExactMatrix::zeros(field, n * n, n);
    for i in 0..n {
        comult.set(i * n + i, i, one.clone());
    }
    let counit = vec![one.clone(); n];
    let mut antipode = ExactMatrix::zeros(field, n, n);
    for i in 0..n {
        let inv = (0..n)
            .find(|&j| table[i][j] == 0)
            .expect("validated table has inverses");
        antipode.set(inv, i, one.clone());
    }
    let antipode_inv = Some(antipode.transpose());
    HopfAlgebra::new(
        field.clone(),
        n,
        mult,
        unit,
        comult,
        counit,
        antipode,
        antipode_inv,
    )
}

/// Names accepted by [`group_algebra`].
pub const GROUP_NAMES: [&str; 14] = [
    "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "v4", "c2xc4", "c2xc2xc2", "s3", "d4", "q8",
];

/// Group algebra of a named group of order at most 8.
pub fn group_algebra(name: &str, field: &FieldSpec) -> Result<HopfAlgebra> {
    let table = match name {
        "c1" => cyclic_table(1),
        "c2" => cyclic_table(2),
        "c3" => cyclic_table(3),
        "c4" => cyclic_table(4),
        "c5" => cyclic_table(5),
        "c6" => cyclic_table(6),
        "c7" => cyclic_table(7),
        "c8" => cyclic_table(8),
        "v4" => product_table(&cyclic_table(2), &cyclic_table(2)),
        "c2xc4" => product_table(&cyclic_table(2), &cyclic_table(4)),
        "c2xc2xc2" => product_table(&cyclic_table(2), &product_table(&cyclic_table(2), &cyclic_table(2))),
        "s3" => dihedral_table(3),
        "d4" => dihedral_table(4),
        "q8" => quaternion_table(),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown group '{other}'; known groups: {}",
                GROUP_NAMES.join(", ")
            )))
        }
    };
    group_algebra_from_table(field, &table)
}

/// Sweedler's four-dimensional Hopf algebra with basis {1, g, x, gx};
/// g^2 = 1, x^2 = 0, x g = -g x. Requires characteristic not 2.
pub fn sweedler(field: &FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedField(
            "Sweedler's algebra needs characteristic not 2".into(),
        ));
    }
    let one = ExactScalar::one(field);
    let zero = ExactScalar::zero(field);
    let neg = -&one;
    let d = 4usize;

    // Rows index the left factor 1, g, x, gx; entries are (target, sign).
    let table: [[Option<(usize, bool)>; 4]; 4] = [
        [Some((0, false)), Some((1, false)), Some((2, false)), Some((3, false))],
        [Some((1, false)), Some((0, false)), Some((3, false)), Some((2, false))],
        [Some((2, false)), Some((3, true)), None, None],
        [Some((3, false)), Some((2, true)), None, None],
    ];
    let mut mult = vec![zero.clone(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            if let Some((k, negate)) = table[i][j] {
                mult[(i * d + j) * d + k] = if negate { neg.clone() } else { one.clone() };
            }
        }
    }
    let mut unit = vec![zero.clone(); d];
    unit[0] = one.clone();

    let mut comult = ExactMatrix::zeros(field, d * d, d);
    comult.set(0, 0, one.clone());
    comult.set(1 * d + 1, 1, one.clone());
    // Delta(x) = x (x) 1 + g (x) x.
    comult.set(2 * d, 2, one.clone());
    comult.set(1 * d + 2, 2, one.clone());
    // Delta(gx) = gx (x) g + 1 (x) gx.
    comult.set(3 * d + 1, 3, one.clone());
    comult.set(3, 3, one.clone());

    let counit = vec![one.clone(), one.clone(), zero.clone(), zero.clone()];

    // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x.
    let mut antipode = ExactMatrix::zeros(field, d, d);
    antipode.set(0, 0, one.clone());
    antipode.set(1, 1, one.clone());
    antipode.set(3, 2, neg.clone());
    antipode.set(2, 3, one.clone());

    HopfAlgebra::new(field.clone(), d, mult, unit, comult, counit, antipode, None)
}

/// The Taft algebra of dimension n^2 over a field with a primitive
/// n-th root of unity q: generators g (grouplike of order n) and x
/// with x^n = 0, x g = q g x, Delta(x) = x (x) 1 + g (x) x. The basis
/// is g^a x^b at index a*n + b. The root is found in the field; pass
/// one explicitly with [`taft_with_root`].
pub fn taft(n: u64, field: &FieldSpec) -> Result<HopfAlgebra> {
    let q = ExactScalar::primitive_root_of_unity(field, n)?;
    taft_with_root(n, field, &q)
}

/// [`taft`] with a caller-chosen root of unity, which must be a
/// primitive n-th root.
pub fn taft_with_root(n: u64, field: &FieldSpec, q: &ExactScalar) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "the Taft algebra needs n >= 2".to_string(),
        ));
    }
    if q.field() != field {
        return Err(field.mismatch(q.field()));
    }
    if !q.pow(n).is_one() {
        return Err(Error::InvalidParameter(format!(
            "q is not an n-th root of unity for n = {n}"
        )));
    }
    for k in 1..n {
        if q.pow(k).is_one() {
            return Err(Error::InvalidParameter(format!(
                "q has order {k}, not a primitive {n}-th root of unity"
            )));
        }
    }
    let n = n as usize;
    let d = n * n;
    let one = ExactScalar::one(field);
    let zero = ExactScalar::zero(field);
    let idx = |a: usize, b: usize| a * n + b;

    // (g^a x^b)(g^c x^e) = q^(b c) g^(a + c) x^(b + e), zero past x^n.
    let mut mult = vec![zero.clone(); d * d * d];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    if b + e >= n {
                        continue;
                    }
                    let coeff = q.pow((b * c) as u64);
                    mult[(idx(a, b) * d + idx(c, e)) * d + idx((a + c) % n, b + e)] = coeff;
                }
            }
        }
    }
    let mut unit = vec![zero.clone(); d];
    unit[idx(0, 0)] = one.clone();
    let mut counit = vec![zero.clone(); d];
    for a in 0..n {
        counit[idx(a, 0)] = one.clone();
    }

    // The algebra so far, with placeholder coalgebra data, gives exact
    // products in the tensor square for building Delta iteratively.
    let shell = HopfAlgebra::new(
        field.clone(),
        d,
        mult.clone(),
        unit.clone(),
        ExactMatrix::zeros(field, d * d, d),
        counit.clone(),
        ExactMatrix::identity(field, d),
        None,
    )?;

    // Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x; extend as an
    // algebra map by multiplying in the tensor square.
    let mut delta_g = vec![zero.clone(); d * d];
    delta_g[idx(1, 0) * d + idx(1, 0)] = one.clone();
    let mut delta_x = vec![zero.clone(); d * d];
    delta_x[idx(0, 1) * d + idx(0, 0)] = one.clone();
    delta_x[idx(1, 0) * d + idx(0, 1)] = one.clone();

    let mut comult = ExactMatrix::zeros(field, d * d, d);
    let mut delta_ga = vec![zero.clone(); d * d];
    delta_ga[idx(0, 0) * d + idx(0, 0)] = one.clone();
    for a in 0..n {
        let mut col = delta_ga.clone();
        for b in 0..n {
            if b > 0 {
                col = shell.multiply2(&col, &delta_x);
            }
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    comult.set(r, idx(a, b), v.clone());
                }
            }
        }
        delta_ga = shell.multiply2(&delta_ga, &delta_g);
    }

    // S(g) = g^(n-1), S(x) = -g^(n-1) x; extend as an anti-algebra map:
    // S(g^a x^b) = S(x)^b S(g)^a.
    let s_g = crate::hopf::basis_vec(field, d, idx(n - 1, 0));
    let mut s_x = vec![zero.clone(); d];
    s_x[idx(n - 1, 1)] = -&one;
    let mut antipode = ExactMatrix::zeros(field, d, d);
    for a in 0..n {
        for b in 0..n {
            let mut val = crate::hopf::basis_vec(field, d, idx(0, 0));
            for _ in 0..b {
                val = shell.multiply(&val, &s_x);
            }
            for _ in 0..a {
                val = shell.multiply(&val, &s_g);
            }
            for (r, v) in val.into_iter().enumerate() {
                if !v.is_zero() {
                    antipode.set(r, idx(a, b), v);
                }
            }
        }
    }

    HopfAlgebra::new(field.clone(), d, mult, unit, comult, counit, antipode, None)
}

/// Names accepted by [`builtin`]: every group algebra name plus
/// "sweedler" and "taft" (the latter takes the dimension parameter n).
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = GROUP_NAMES.iter().map(|s| s.to_string()).collect();
    names.push("sweedler".to_string());
    names.push("taft".to_string());
    names
}

/// Looks up a built-in Hopf algebra by name; `n` is required for
/// "taft" and ignored otherwise.
pub fn builtin(name: &str, field: &FieldSpec, n: Option<u64>) -> Result<HopfAlgebra> {
    match name {
        "sweedler" => sweedler(field),
        "taft" => {
            let n = n.ok_or_else(|| {
                Error::InvalidParameter("the Taft algebra needs a dimension parameter n".into())
            })?;
            taft(n, field)
        }
        other => group_algebra(other, field),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn all_group_algebras_pass_axioms() {
        for name in GROUP_NAMES {
            let h = group_algebra(name, &q()).unwrap();
            let report = h.check_axioms();
            assert!(report.passed(), "{name} failed:\n{report}");
        }
    }

    #[test]
    fn group_orders() {
        for (name, order) in [
            ("c1", 1),
            ("c8", 8),
            ("v4", 4),
            ("c2xc4", 8),
            ("c2xc2xc2", 8),
            ("s3", 6),
            ("d4", 8),
            ("q8", 8),
        ] {
            assert_eq!(group_algebra(name, &q()).unwrap().dim(), order);
        }
    }

    #[test]
    fn s3_is_nonabelian_q8_has_central_minus_one() {
        let t = dihedral_table(3);
        assert_ne!(t[1][2], t[2][1]);
        let t = quaternion_table();
        // i * i = -1 and -1 is central of order 2.
        assert_eq!(t[2][2], 1);
        assert_eq!(t[1][1], 0);
        for x in 0..8 {
            assert_eq!(t[1][x], t[x][1]);
        }
    }

    #[test]
    fn sweedler_passes_axioms() {
        let h = sweedler(&q()).unwrap();
        assert_eq!(h.dim(), 4);
        let report = h.check_axioms();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn sweedler_needs_odd_characteristic() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        assert!(matches!(
            sweedler(&f2),
            Err(Error::UnsupportedField(_))
        ));
        let f3 = FieldSpec::prime_field(3).unwrap();
        assert!(sweedler(&f3).unwrap().check_axioms().passed());
    }

    #[test]
    fn sweedler_antipode_squares_to_conjugation() {
        // S^2(x) = -x for Sweedler's algebra, so S has order 4.
        let h = sweedler(&q()).unwrap();
        let s = h.antipode_matrix();
        let s2 = s.matmul(s).unwrap();
        let x = crate::hopf::basis_vec(&q(), 4, 2);
        let s2x = s2.apply(&x).unwrap();
        assert!(s2x[2] == -&ExactScalar::one(&q()));
        let s4 = s2.matmul(&s2).unwrap();
        assert!(s4.is_identity());
    }

    #[test]
    fn taft_algebras_pass_axioms() {
        let h = taft(2, &q()).unwrap();
        assert!(h.check_axioms().passed());
        let f3 = FieldSpec::cyclotomic(3).unwrap();
        let h = taft(3, &f3).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(h.check_axioms().passed());
        let f4 = FieldSpec::cyclotomic(4).unwrap();
        let h = taft(4, &f4).unwrap();
        assert_eq!(h.dim(), 16);
        assert!(h.check_axioms().passed());
        let f13 = FieldSpec::prime_field(13).unwrap();
        let h = taft(3, &f13).unwrap();
        assert!(h.check_axioms().passed());
    }

    #[test]
    fn taft_rejects_non_primitive_root() {
        let one = ExactScalar::one(&q());
        assert!(matches!(
            taft_with_root(2, &q(), &one),
            Err(Error::InvalidParameter(_))
        ));
        // No primitive cube root of unity exists in Q.
        assert!(taft(3, &q()).is_err());
    }

    #[test]
    fn taft_two_is_sweedler_up_to_relabeling() {
        // Sweedler basis {1, g, x, gx} matches Taft basis g^a x^b
        // under the permutation [0, 2, 1, 3].
        let sw = sweedler(&q()).unwrap();
        let tf = taft(2, &q()).unwrap();
        let p = [0usize, 2, 1, 3];
        let d = 4usize;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    assert_eq!(
                        sw.mult_coeff(i, j, k),
                        tf.mult_coeff(p[i], p[j], p[k]),
                        "mult mismatch at ({i}, {j}, {k})"
                    );
                }
            }
        }
        for i in 0..d {
            assert_eq!(sw.unit_vec()[i], tf.unit_vec()[p[i]]);
            assert_eq!(sw.counit_vec()[i], tf.counit_vec()[p[i]]);
            for j in 0..d {
                assert_eq!(
                    sw.antipode_matrix().get(j, i),
                    tf.antipode_matrix().get(p[j], p[i])
                );
                for k in 0..d {
                    assert_eq!(
                        sw.comult_matrix().get(j * d + k, i),
                        tf.comult_matrix().get(p[j] * d + p[k], p[i])
                    );
                }
            }
        }
    }

    #[test]
    fn corrupted_structures_are_caught() {
        let h = sweedler(&q()).unwrap();
        let one = ExactScalar::one(&q());

        // Corrupt one comultiplication entry.
        let mut comult = h.comult_matrix().clone();
        comult.set(5, 2, &comult.get(5, 2).clone() + &one);
        let bad = HopfAlgebra::new(
            q(),
            4,
            h.mult_table().to_vec(),
            h.unit_vec().to_vec(),
            comult,
            h.counit_vec().to_vec(),
            h.antipode_matrix().clone(),
            None,
        )
        .unwrap();
        let report = bad.check_axioms();
        assert!(!report.passed());
        assert!(report.failures().count() > 0);

        // Corrupt the counit.
        let mut counit = h.counit_vec().to_vec();
        counit[2] = one.clone();
        let bad = HopfAlgebra::new(
            q(),
            4,
            h.mult_table().to_vec(),
            h.unit_vec().to_vec(),
            h.comult_matrix().clone(),
            counit,
            h.antipode_matrix().clone(),
            None,
        )
        .unwrap();
        assert!(!bad.check_axioms().passed());

        // Corrupt the antipode.
        let mut antipode = h.antipode_matrix().clone();
        antipode.set(1, 1, -&one);
        let bad = HopfAlgebra::new(
            q(),
            4,
            h.mult_table().to_vec(),
            h.unit_vec().to_vec(),
            h.comult_matrix().clone(),
            h.counit_vec().to_vec(),
            antipode,
            None,
        )
        .unwrap();
        let report = bad.check_axioms();
        assert!(!report.passed());
        let names: Vec<_> = report.failures().map(|c| c.name).collect();
        assert!(names.contains(&"antipode-left") || names.contains(&"antipode-right"));
    }

    #[test]
    fn trivial_twist_is_bit_identical() {
        for name in ["c2", "s3", "sweedler"] {
            let h = builtin(name, &q(), None).unwrap();
            let d = h.dim();
            let mut j = vec![ExactScalar::zero(&q()); d * d];
            for (a, ua) in h.unit_vec().iter().enumerate() {
                for (b, ub) in h.unit_vec().iter().enumerate() {
                    if !ua.is_zero() && !ub.is_zero() {
                        j[a * d + b] = ua * ub;
                    }
                }
            }
            let twisted = h.twist(&j).unwrap();
            assert!(twisted == h, "trivial twist changed {name}");
        }
    }

    #[test]
    fn sweedler_x_tensor_x_perturbation_fails_cocycle() {
        // J = 1 (x) 1 + x (x) x is invertible and counit-normalized
        // but violates the cocycle identity.
        let h = sweedler(&q()).unwrap();
        let d = 4usize;
        let one = ExactScalar::one(&q());
        let mut j = vec![ExactScalar::zero(&q()); d * d];
        j[0] = one.clone();
        j[2 * d + 2] = one.clone();
        match h.twist(&j) {
            Err(Error::InvalidTwist { clause, .. }) => {
                assert_eq!(clause, crate::error::TwistClause::Cocycle);
            }
            other => panic!("expected cocycle rejection, got {other:?}"),
        }
    }

    #[test]
    fn non_invertible_twist_rejected_first() {
        let h = sweedler(&q()).unwrap();
        let j = vec![ExactScalar::zero(&q()); 16];
        match h.twist(&j) {
            Err(Error::InvalidTwist { clause, .. }) => {
                assert_eq!(clause, crate::error::TwistClause::Invertibility);
            }
            other => panic!("expected invertibility rejection, got {other:?}"),
        }
    }

    #[test]
    fn counit_normalization_checked_second() {
        // J = 2 (1 (x) 1) is invertible but not counit-normalized.
        let h = sweedler(&q()).unwrap();
        let mut j = vec![ExactScalar::zero(&q()); 16];
        j[0] = ExactScalar::from_int(&q(), 2);
        match h.twist(&j) {
            Err(Error::InvalidTwist { clause, .. }) => {
                assert_eq!(clause, crate::error::TwistClause::CounitNormalization);
            }
            other => panic!("expected counit rejection, got {other:?}"),
        }
    }
}
