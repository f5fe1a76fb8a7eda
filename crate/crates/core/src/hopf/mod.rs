//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! An algebra of dimension d over an exact field stores multiplication
//! as a flat d^3 table (e_i e_j = sum_k c[i][j][k] e_k), the unit as a
//! coordinate vector, comultiplication as a d^2 x d matrix whose column
//! i holds Delta(e_i) in the e_j (x) e_k basis (row index j*d + k), the
//! counit as a vector, and the antipode as a d x d matrix. Sparse views
//! of the multiplication and comultiplication are precomputed because
//! every built-in has monomial or near-monomial products.
//!
//! Nothing here assumes the axioms hold: [`HopfAlgebra::check_axioms`]
//! verifies them mechanically, pointwise on basis tuples, and reports
//! the first failing tuple per axiom. This keeps deliberately corrupted
//! structures constructible so the checker itself can be tested.

pub mod builders;
pub mod module;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, TwistClause};
use crate::matrix::ExactMatrix;
use crate::scalar::{ExactScalar, FieldSpec};
use crate::Result;

/// Coordinate vector of the i-th basis element.
pub fn basis_vec(field: &FieldSpec, dim: usize, i: usize) -> Vec<ExactScalar> {
    let mut v = vec![ExactScalar::zero(field); dim];
    v[i] = ExactScalar::one(field);
    v
}

/// A finite-dimensional Hopf algebra candidate over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    field: FieldSpec,
    dim: usize,
    mult: Vec<ExactScalar>,
    unit: Vec<ExactScalar>,
    comult: ExactMatrix,
    counit: Vec<ExactScalar>,
    antipode: ExactMatrix,
    antipode_inv: Option<ExactMatrix>,
    /// Nonzero products: entry i*d + j lists (k, c) with c = c[i][j][k].
    mult_sparse: Vec<Vec<(usize, ExactScalar)>>,
    /// Nonzero coproduct terms: entry i lists (j, k, c).
    comult_sparse: Vec<Vec<(usize, usize, ExactScalar)>>,
}

impl HopfAlgebra {
    /// Builds from raw structure constants, validating shapes and
    /// fields but not the axioms. When `antipode_inv` is absent it is
    /// computed by matrix inversion where possible.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: FieldSpec,
        dim: usize,
        mult: Vec<ExactScalar>,
        unit: Vec<ExactScalar>,
        comult: ExactMatrix,
        counit: Vec<ExactScalar>,
        antipode: ExactMatrix,
        antipode_inv: Option<ExactMatrix>,
    ) -> Result<Self> {
        if mult.len() != dim * dim * dim {
            return Err(Error::shape(format!(
                "multiplication table has {} entries, expected {}",
                mult.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(Error::shape(
                "unit and counit must have one coordinate per basis element",
            ));
        }
        if (comult.rows(), comult.cols()) != (dim * dim, dim) {
            return Err(Error::shape(format!(
                "comultiplication matrix is {}x{}, expected {}x{}",
                comult.rows(),
                comult.cols(),
                dim * dim,
                dim
            )));
        }
        if (antipode.rows(), antipode.cols()) != (dim, dim) {
            return Err(Error::shape(format!(
                "antipode matrix is {}x{}, expected {dim}x{dim}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        for s in mult.iter().chain(unit.iter()).chain(counit.iter()) {
            if s.field() != &field {
                return Err(field.mismatch(s.field()));
            }
        }
        for m in [&comult, &antipode] {
            if m.field() != &field {
                return Err(field.mismatch(m.field()));
            }
        }
        let antipode_inv = match antipode_inv {
            Some(inv) => {
                if (inv.rows(), inv.cols()) != (dim, dim) {
                    return Err(Error::shape("antipode inverse has wrong shape"));
                }
                if inv.field() != &field {
                    return Err(field.mismatch(inv.field()));
                }
                let prod = antipode.matmul(&inv)?;
                let prod2 = inv.matmul(&antipode)?;
                if !prod.is_identity() || !prod2.is_identity() {
                    return Err(Error::InvalidStructure(
                        "provided antipode inverse does not invert the antipode".into(),
                    ));
                }
                Some(inv)
            }
            None => antipode.inverse()?,
        };
        let mut mult_sparse = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut terms = Vec::new();
                for k in 0..dim {
                    let c = &mult[(i * dim + j) * dim + k];
                    if !c.is_zero() {
                        terms.push((k, c.clone()));
                    }
                }
                mult_sparse.push(terms);
            }
        }
        let mut comult_sparse = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut terms = Vec::new();
            for j in 0..dim {
                for k in 0..dim {
                    let c = comult.get(j * dim + k, i);
                    if !c.is_zero() {
                        terms.push((j, k, c.clone()));
                    }
                }
            }
            comult_sparse.push(terms);
        }
        Ok(HopfAlgebra {
            field,
            dim,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv,
            mult_sparse,
            comult_sparse,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_table(&self) -> &[ExactScalar] {
        &self.mult
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &ExactScalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn mult_terms(&self, i: usize, j: usize) -> &[(usize, ExactScalar)] {
        &self.mult_sparse[i * self.dim + j]
    }

    pub fn unit_vec(&self) -> &[ExactScalar] {
        &self.unit
    }

    pub fn comult_matrix(&self) -> &ExactMatrix {
        &self.comult
    }

    pub fn comult_terms(&self, i: usize) -> &[(usize, usize, ExactScalar)] {
        &self.comult_sparse[i]
    }

    pub fn counit_vec(&self) -> &[ExactScalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &ExactMatrix {
        &self.antipode
    }

    pub fn antipode_inv_matrix(&self) -> Option<&ExactMatrix> {
        self.antipode_inv.as_ref()
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, x: &[ExactScalar], y: &[ExactScalar]) -> Vec<ExactScalar> {
        let mut out = vec![ExactScalar::zero(&self.field); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.mult_terms(i, j) {
                    out[*k] = &out[*k] + &(&coeff * c);
                }
            }
        }
        out
    }

    /// Product in the tensor square; vectors are indexed i*d + j.
    pub fn multiply2(&self, a: &[ExactScalar], b: &[ExactScalar]) -> Vec<ExactScalar> {
        let d = self.dim;
        let mut out = vec![ExactScalar::zero(&self.field); d * d];
        for (ij, aij) in a.iter().enumerate() {
            if aij.is_zero() {
                continue;
            }
            let (i, j) = (ij / d, ij % d);
            for (kl, bkl) in b.iter().enumerate() {
                if bkl.is_zero() {
                    continue;
                }
                let (k, l) = (kl / d, kl % d);
                let coeff = aij * bkl;
                for (m, c1) in self.mult_terms(i, k) {
                    for (n, c2) in self.mult_terms(j, l) {
                        out[m * d + n] = &out[m * d + n] + &(&(&coeff * c1) * c2);
                    }
                }
            }
        }
        out
    }

    /// Product in the tensor cube; vectors are indexed (i*d + j)*d + k.
    pub fn multiply3(&self, a: &[ExactScalar], b: &[ExactScalar]) -> Vec<ExactScalar> {
        let d = self.dim;
        let mut out = vec![ExactScalar::zero(&self.field); d * d * d];
        for (ijk, av) in a.iter().enumerate() {
            if av.is_zero() {
                continue;
            }
            let (i, j, k) = (ijk / (d * d), (ijk / d) % d, ijk % d);
            for (lmn, bv) in b.iter().enumerate() {
                if bv.is_zero() {
                    continue;
                }
                let (l, m, n) = (lmn / (d * d), (lmn / d) % d, lmn % d);
                let coeff = av * bv;
                for (p, c1) in self.mult_terms(i, l) {
                    for (q, c2) in self.mult_terms(j, m) {
                        for (r, c3) in self.mult_terms(k, n) {
                            let idx = (p * d + q) * d + r;
                            out[idx] = &out[idx] + &(&(&(&coeff * c1) * c2) * c3);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[ExactScalar]) -> ExactScalar {
        let mut acc = ExactScalar::zero(&self.field);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                acc = &acc + &(xi * &self.counit[i]);
            }
        }
        acc
    }

    /// Delta applied to a coordinate vector, as a d^2 vector.
    pub fn comult_of(&self, x: &[ExactScalar]) -> Vec<ExactScalar> {
        let d = self.dim;
        let mut out = vec![ExactScalar::zero(&self.field); d * d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_terms(i) {
                out[j * d + k] = &out[j * d + k] + &(xi * c);
            }
        }
        out
    }

    pub fn antipode_of(&self, x: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.antipode.apply(x)
    }

    /// Matrix of left multiplication by u.
    pub fn left_mult_matrix(&self, u: &[ExactScalar]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(u, &basis_vec(&self.field, self.dim, j));
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, j, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by u.
    pub fn right_mult_matrix(&self, u: &[ExactScalar]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(&basis_vec(&self.field, self.dim, j), u);
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, j, v);
                }
            }
        }
        m
    }

    /// The unit of the tensor square, 1 (x) 1.
    fn unit2(&self) -> Vec<ExactScalar> {
        let d = self.dim;
        let mut out = vec![ExactScalar::zero(&self.field); d * d];
        for (i, ui) in self.unit.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, uj) in self.unit.iter().enumerate() {
                if !uj.is_zero() {
                    out[i * d + j] = ui * uj;
                }
            }
        }
        out
    }

    /// Runs every axiom check and reports per-axiom outcomes with the
    /// first failing basis tuple.
    pub fn check_axioms(&self) -> AxiomReport {
        let d = self.dim;
        let zero = ExactScalar::zero(&self.field);
        let mut checks = Vec::new();

        // Associativity: (e_i e_j) e_k = e_i (e_j e_k), coefficients of
        // e_l compared for every (i, j, k).
        let mut assoc = AxiomCheck::pass("associativity");
        'assoc: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut lhs = vec![zero.clone(); d];
                    for (m, c1) in self.mult_terms(i, j) {
                        for (l, c2) in self.mult_terms(*m, k) {
                            lhs[*l] = &lhs[*l] + &(c1 * c2);
                        }
                    }
                    let mut rhs = vec![zero.clone(); d];
                    for (m, c1) in self.mult_terms(j, k) {
                        for (l, c2) in self.mult_terms(i, *m) {
                            rhs[*l] = &rhs[*l] + &(c1 * c2);
                        }
                    }
                    if lhs != rhs {
                        assoc = AxiomCheck::fail("associativity", vec![i, j, k]);
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(assoc);

        let mut unit_check = AxiomCheck::pass("unit");
        for i in 0..d {
            let e = basis_vec(&self.field, d, i);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                unit_check = AxiomCheck::fail("unit", vec![i]);
                break;
            }
        }
        checks.push(unit_check);

        // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
        let mut coassoc = AxiomCheck::pass("coassociativity");
        for i in 0..d {
            let mut lhs = vec![zero.clone(); d * d * d];
            let mut rhs = vec![zero.clone(); d * d * d];
            for (p, q, c) in self.comult_terms(i) {
                for (a, b, c2) in self.comult_terms(*p) {
                    let idx = (a * d + b) * d + q;
                    lhs[idx] = &lhs[idx] + &(c * c2);
                }
                for (a, b, c2) in self.comult_terms(*q) {
                    let idx = (p * d + a) * d + b;
                    rhs[idx] = &rhs[idx] + &(c * c2);
                }
            }
            if lhs != rhs {
                coassoc = AxiomCheck::fail("coassociativity", vec![i]);
                break;
            }
        }
        checks.push(coassoc);

        // Counit: (eps (x) id) Delta = id = (id (x) eps) Delta.
        let mut counit_check = AxiomCheck::pass("counit");
        for i in 0..d {
            let mut left = vec![zero.clone(); d];
            let mut right = vec![zero.clone(); d];
            for (p, q, c) in self.comult_terms(i) {
                left[*q] = &left[*q] + &(&self.counit[*p] * c);
                right[*p] = &right[*p] + &(c * &self.counit[*q]);
            }
            let e = basis_vec(&self.field, d, i);
            if left != e || right != e {
                counit_check = AxiomCheck::fail("counit", vec![i]);
                break;
            }
        }
        checks.push(counit_check);

        // Delta is an algebra map.
        let mut comult_mult = AxiomCheck::pass("comultiplication-multiplicativity");
        'cm: for i in 0..d {
            for j in 0..d {
                let mut lhs = vec![zero.clone(); d * d];
                for (k, c) in self.mult_terms(i, j) {
                    for (p, q, c2) in self.comult_terms(*k) {
                        lhs[p * d + q] = &lhs[p * d + q] + &(c * c2);
                    }
                }
                let di = self.comult.column(i);
                let dj = self.comult.column(j);
                let rhs = self.multiply2(&di, &dj);
                if lhs != rhs {
                    comult_mult = AxiomCheck::fail("comultiplication-multiplicativity", vec![i, j]);
                    break 'cm;
                }
            }
        }
        checks.push(comult_mult);

        // eps is an algebra map.
        let mut counit_mult = AxiomCheck::pass("counit-multiplicativity");
        'um: for i in 0..d {
            for j in 0..d {
                let mut lhs = zero.clone();
                for (k, c) in self.mult_terms(i, j) {
                    lhs = &lhs + &(c * &self.counit[*k]);
                }
                if lhs != &self.counit[i] * &self.counit[j] {
                    counit_mult = AxiomCheck::fail("counit-multiplicativity", vec![i, j]);
                    break 'um;
                }
            }
        }
        checks.push(counit_mult);

        // Delta(1) = 1 (x) 1 and eps(1) = 1.
        let unit_compat = if self.comult_of(&self.unit) == self.unit2()
            && self.counit_of(&self.unit).is_one()
        {
            AxiomCheck::pass("comultiplication-of-unit")
        } else {
            AxiomCheck::fail("comultiplication-of-unit", vec![])
        };
        checks.push(unit_compat);

        // Antipode: m (S (x) id) Delta = unit . eps = m (id (x) S) Delta.
        let mut anti_left = AxiomCheck::pass("antipode-left");
        let mut anti_right = AxiomCheck::pass("antipode-right");
        for i in 0..d {
            let mut left = vec![zero.clone(); d];
            let mut right = vec![zero.clone(); d];
            for (p, q, c) in self.comult_terms(i) {
                let sp = self.antipode.column(*p);
                let sq = self.antipode.column(*q);
                let eq = basis_vec(&self.field, d, *q);
                let ep = basis_vec(&self.field, d, *p);
                let l = self.multiply(&sp, &eq);
                let r = self.multiply(&ep, &sq);
                for k in 0..d {
                    left[k] = &left[k] + &(c * &l[k]);
                    right[k] = &right[k] + &(c * &r[k]);
                }
            }
            let expected: Vec<ExactScalar> =
                self.unit.iter().map(|u| u * &self.counit[i]).collect();
            if anti_left.passed && left != expected {
                anti_left = AxiomCheck::fail("antipode-left", vec![i]);
            }
            if anti_right.passed && right != expected {
                anti_right = AxiomCheck::fail("antipode-right", vec![i]);
            }
            if !anti_left.passed && !anti_right.passed {
                break;
            }
        }
        checks.push(anti_left);
        checks.push(anti_right);

        // The antipode of a finite-dimensional Hopf algebra is
        // invertible, so a missing or wrong inverse is a failure.
        let anti_inv = match &self.antipode_inv {
            Some(inv) => {
                let ok = self
                    .antipode
                    .matmul(inv)
                    .map(|p| p.is_identity())
                    .unwrap_or(false)
                    && inv
                        .matmul(&self.antipode)
                        .map(|p| p.is_identity())
                        .unwrap_or(false);
                if ok {
                    AxiomCheck::pass("antipode-invertibility")
                } else {
                    AxiomCheck::fail("antipode-invertibility", vec![])
                }
            }
            None => AxiomCheck::fail("antipode-invertibility", vec![]),
        };
        checks.push(anti_inv);

        AxiomReport { checks }
    }

    /// Validates a Drinfeld twist candidate and returns the twisted
    /// Hopf algebra. Validation order: invertibility in the tensor
    /// square, counit normalization, then the 2-cocycle identity; the
    /// first violated clause is named in the error.
    pub fn twist(&self, j: &[ExactScalar]) -> Result<HopfAlgebra> {
        let d = self.dim;
        if j.len() != d * d {
            return Err(Error::shape(format!(
                "twist element has {} coordinates, expected {}",
                j.len(),
                d * d
            )));
        }
        for s in j {
            if s.field() != &self.field {
                return Err(self.field.mismatch(s.field()));
            }
        }
        let unit2 = self.unit2();

        // Invertibility: solve (left multiplication by J) x = 1 (x) 1
        // and insist the inverse is two-sided.
        let mut left2 = ExactMatrix::zeros(&self.field, d * d, d * d);
        for col in 0..d * d {
            let mut e = vec![ExactScalar::zero(&self.field); d * d];
            e[col] = ExactScalar::one(&self.field);
            let prod = self.multiply2(j, &e);
            for (r, v) in prod.into_iter().enumerate() {
                if !v.is_zero() {
                    left2.set(r, col, v);
                }
            }
        }
        let j_inv = left2
            .solve(&unit2)?
            .ok_or_else(|| Error::InvalidTwist {
                clause: TwistClause::Invertibility,
                detail: ": no right inverse in the tensor square".into(),
            })?;
        if self.multiply2(&j_inv, j) != unit2 {
            return Err(Error::InvalidTwist {
                clause: TwistClause::Invertibility,
                detail: ": right inverse is not a left inverse".into(),
            });
        }

        // Counit normalization: (eps (x) id) J = 1 = (id (x) eps) J.
        let mut eps_left = vec![ExactScalar::zero(&self.field); d];
        let mut eps_right = vec![ExactScalar::zero(&self.field); d];
        for (ik, v) in j.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, k) = (ik / d, ik % d);
            eps_left[k] = &eps_left[k] + &(&self.counit[i] * v);
            eps_right[i] = &eps_right[i] + &(v * &self.counit[k]);
        }
        if eps_left != self.unit {
            return Err(Error::InvalidTwist {
                clause: TwistClause::CounitNormalization,
                detail: ": (counit (x) id)(J) is not the unit".into(),
            });
        }
        if eps_right != self.unit {
            return Err(Error::InvalidTwist {
                clause: TwistClause::CounitNormalization,
                detail: ": (id (x) counit)(J) is not the unit".into(),
            });
        }

        // Cocycle: (J (x) 1)((Delta (x) id) J) = (1 (x) J)((id (x) Delta) J).
        let mut j_tensor_unit = vec![ExactScalar::zero(&self.field); d * d * d];
        let mut unit_tensor_j = vec![ExactScalar::zero(&self.field); d * d * d];
        for (ik, v) in j.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, k) = (ik / d, ik % d);
            for (u, uv) in self.unit.iter().enumerate() {
                if uv.is_zero() {
                    continue;
                }
                j_tensor_unit[(i * d + k) * d + u] = v * uv;
                unit_tensor_j[(u * d + i) * d + k] = uv * v;
            }
        }
        let mut comult_id_j = vec![ExactScalar::zero(&self.field); d * d * d];
        let mut id_comult_j = vec![ExactScalar::zero(&self.field); d * d * d];
        for (ik, v) in j.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, k) = (ik / d, ik % d);
            for (p, q, c) in self.comult_terms(i) {
                let idx = (p * d + q) * d + k;
                comult_id_j[idx] = &comult_id_j[idx] + &(v * c);
            }
            for (p, q, c) in self.comult_terms(k) {
                let idx = (i * d + p) * d + q;
                id_comult_j[idx] = &id_comult_j[idx] + &(v * c);
            }
        }
        let lhs = self.multiply3(&j_tensor_unit, &comult_id_j);
        let rhs = self.multiply3(&unit_tensor_j, &id_comult_j);
        if lhs != rhs {
            return Err(Error::InvalidTwist {
                clause: TwistClause::Cocycle,
                detail: String::new(),
            });
        }

        // Twisted comultiplication J Delta(h) J^-1.
        let mut comult = ExactMatrix::zeros(&self.field, d * d, d);
        for i in 0..d {
            let col = self.multiply2(&self.multiply2(j, &self.comult.column(i)), &j_inv);
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    comult.set(r, i, v);
                }
            }
        }

        // Twisted antipode u S(h) u^-1 with u = m (id (x) S) (J).
        let mut u = vec![ExactScalar::zero(&self.field); d];
        for (ik, v) in j.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, k) = (ik / d, ik % d);
            let sk = self.antipode.column(k);
            let prod = self.multiply(&basis_vec(&self.field, d, i), &sk);
            for (r, p) in prod.into_iter().enumerate() {
                u[r] = &u[r] + &(v * &p);
            }
        }
        let lu = self.left_mult_matrix(&u);
        let u_inv = lu.solve(&self.unit)?.ok_or_else(|| {
            Error::InvalidStructure("twist unit m(id (x) S)(J) is not invertible".into())
        })?;
        if self.multiply(&u_inv, &u) != self.unit {
            return Err(Error::InvalidStructure(
                "twist unit m(id (x) S)(J) has no two-sided inverse".into(),
            ));
        }
        let antipode = lu
            .matmul(&self.right_mult_matrix(&u_inv))?
            .matmul(&self.antipode)?;

        HopfAlgebra::new(
            self.field.clone(),
            d,
            self.mult.clone(),
            self.unit.clone(),
            comult,
            self.counit.clone(),
            antipode,
            None,
        )
    }
}

impl core::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "HopfAlgebra(dim {} over {})", self.dim, self.field)
    }
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Basis indices of the first failing tuple, empty for global checks.
    pub witness: Vec<usize>,
}

impl AxiomCheck {
    fn pass(name: &'static str) -> Self {
        AxiomCheck {
            name,
            passed: true,
            witness: Vec::new(),
        }
    }

    fn fail(name: &'static str, witness: Vec<usize>) -> Self {
        AxiomCheck {
            name,
            passed: false,
            witness,
        }
    }
}

/// Results of all axiom checks, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl core::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for check in &self.checks {
            if check.passed {
                writeln!(f, "  ok   {}", check.name)?;
            } else if check.witness.is_empty() {
                writeln!(f, "  FAIL {}", check.name)?;
            } else {
                writeln!(
                    f,
                    "  FAIL {} at basis tuple {:?}",
                    check.name, check.witness
                )?;
            }
        }
        Ok(())
    }
}
