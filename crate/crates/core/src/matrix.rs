//! Dense matrices over an exact scalar field.
//!
//! All decompositions use fraction-free-of-error exact arithmetic:
//! Gaussian elimination with normalized pivots over the field itself.
//! Every matrix carries its [`FieldSpec`], which makes zero-sized
//! matrices unambiguous. Binary operations validate field and shape
//! compatibility and report errors instead of panicking.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::scalar::{ExactScalar, FieldSpec};
use crate::Result;

/// A dense rows x cols matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![ExactScalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, ExactScalar::one(field));
        }
        m
    }

    pub fn from_fn(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ExactScalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds from scalar rows; all rows must have equal length and all
    /// entries must belong to `field`.
    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::shape(format!(
                    "ragged rows: expected {ncols} entries, found {}",
                    row.len()
                )));
            }
            for s in row {
                if s.field() != field {
                    return Err(field.mismatch(s.field()));
                }
                data.push(s);
            }
        }
        Ok(ExactMatrix {
            field: field.clone(),
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Convenience for integer matrices in tests and builders.
    pub fn from_i64_rows(field: &FieldSpec, rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), ncols, |r, c| {
            ExactScalar::from_int(field, rows[r][c])
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row_slice(&self, r: usize) -> &[ExactScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<ExactScalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> ExactMatrix {
        Self::from_fn(&self.field, self.rows, idx.len(), |r, j| {
            self.get(r, idx[j]).clone()
        })
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                if r == c {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn check_field(&self, other: &ExactMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(self.field.mismatch(&other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape(format!(
                "cannot add {}x{} to {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExactMatrix {
        self.map(ExactScalar::neg)
    }

    pub fn scale(&self, s: &ExactScalar) -> ExactMatrix {
        self.map(|a| a * s)
    }

    fn map(&self, f: impl Fn(&ExactScalar) -> ExactScalar) -> ExactMatrix {
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        if v.len() != self.cols {
            return Err(Error::shape(format!(
                "cannot apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![ExactScalar::zero(&self.field); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = &out[r] + &(a * &v[c]);
            }
        }
        Ok(out)
    }

    /// Kronecker product with the convention
    /// `(A (x) B)[i*rows(B)+k, j*cols(B)+l] = A[i,j] * B[k,l]`.
    pub fn kronecker(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        let mut out = Self::zeros(
            &self.field,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::shape(format!(
                "cannot hstack {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(
            &self.field,
            self.rows,
            self.cols + other.cols,
            |r, c| {
                if c < self.cols {
                    self.get(r, c).clone()
                } else {
                    other.get(r, c - self.cols).clone()
                }
            },
        ))
    }

    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::shape(format!(
                "cannot vstack {} cols with {} cols",
                self.cols, other.cols
            )));
        }
        Ok(Self::from_fn(
            &self.field,
            self.rows + other.rows,
            self.cols,
            |r, c| {
                if r < self.rows {
                    self.get(r, c).clone()
                } else {
                    other.get(r - self.rows, c).clone()
                }
            },
        ))
    }

    /// Reduced row echelon form with unit pivots.
    ///
    /// Returns the reduced matrix and the pivot column indices in
    /// increasing order; the rank is the number of pivots.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.data[r * cols + col].is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..cols {
                    m.data.swap(row * cols + j, pr * cols + j);
                }
            }
            let inv = m.data[row * cols + col].inv().expect("pivot is nonzero");
            for j in col..cols {
                let v = &m.data[row * cols + j] * &inv;
                m.data[row * cols + j] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.data[r * cols + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..cols {
                    let v = &m.data[r * cols + j] - &(&factor * &m.data[row * cols + j]);
                    m.data[r * cols + j] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel as matrix columns.
    ///
    /// For each non-pivot column f the basis vector has 1 in slot f,
    /// minus the reduced entry in each pivot slot, and 0 elsewhere.
    pub fn kernel_basis(&self) -> ExactMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(&self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            out.set(f, j, ExactScalar::one(&self.field));
            for (i, &p) in pivots.iter().enumerate() {
                out.set(p, j, r.get(i, f).neg());
            }
        }
        out
    }

    /// Solves self * X = B column by column; None when any column has
    /// no solution. Free variables are set to zero.
    pub fn solve_matrix(&self, b: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        self.check_field(b)?;
        if self.rows != b.rows {
            return Err(Error::shape(format!(
                "cannot solve {}x{} system against {} right-hand rows",
                self.rows, self.cols, b.rows
            )));
        }
        let (r, pivots) = self.hstack(b)?.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(&self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Solves self * x = b; None when the system is inconsistent.
    pub fn solve(&self, b: &[ExactScalar]) -> Result<Option<Vec<ExactScalar>>> {
        let col = ExactMatrix::from_fn(&self.field, b.len(), 1, |r, _| b[r].clone());
        Ok(self.solve_matrix(&col)?.map(|x| x.column(0)))
    }

    /// Inverse of a square matrix; None when singular.
    pub fn inverse(&self) -> Result<Option<ExactMatrix>> {
        if self.rows != self.cols {
            return Err(Error::shape(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let aug = self.hstack(&Self::identity(&self.field, self.rows))?;
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        Ok(Some(Self::from_fn(
            &self.field,
            self.rows,
            self.cols,
            |i, j| r.get(i, self.cols + j).clone(),
        )))
    }

    /// The pivot columns of self, taken from the original matrix; they
    /// form a basis of the column space.
    pub fn column_space_basis(&self) -> ExactMatrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Extends the (independent) columns of self to a basis by
    /// appending standard basis vectors.
    ///
    /// Returns the square invertible matrix and the indices of the
    /// appended standard vectors. Fails when the columns are dependent.
    pub fn extend_to_basis(&self) -> Result<(ExactMatrix, Vec<usize>)> {
        let aug = self.hstack(&Self::identity(&self.field, self.rows))?;
        let (_, pivots) = aug.rref();
        let own: Vec<usize> = pivots.iter().copied().filter(|&p| p < self.cols).collect();
        if own.len() != self.cols {
            return Err(Error::InvalidParameter(format!(
                "columns are dependent: rank {} of {}",
                own.len(),
                self.cols
            )));
        }
        let appended: Vec<usize> = pivots
            .iter()
            .copied()
            .filter(|&p| p >= self.cols)
            .map(|p| p - self.cols)
            .collect();
        let full = aug.select_columns(&pivots);
        Ok((full, appended))
    }
}

impl core::fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "(empty {}x{})", self.rows, self.cols);
        }
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]")?;
            if r + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl core::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "ExactMatrix({}x{} over {})\n{}",
            self.rows, self.cols, self.field, self
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn rref_rank_one_square() {
        let m = ExactMatrix::from_i64_rows(&q(), &[&[1, 1], &[1, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r, ExactMatrix::from_i64_rows(&q(), &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn rref_rank_one_tall() {
        let m = ExactMatrix::from_i64_rows(&q(), &[&[2, 4], &[1, 2], &[3, 6]]);
        // Oracle: every 2x2 minor vanishes, so the rank is exactly 1.
        assert_eq!(2 * 2 - 4 * 1, 0);
        assert_eq!(2 * 6 - 4 * 3, 0);
        assert_eq!(1 * 6 - 2 * 3, 0);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.row_slice(0), ExactMatrix::from_i64_rows(&q(), &[&[1, 2]]).row_slice(0));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_sum_functional() {
        let m = ExactMatrix::from_i64_rows(&q(), &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, ExactMatrix::from_i64_rows(&q(), &[&[-1], &[1]]));
        assert!(m.matmul(&k).unwrap().is_zero());
        // The spec vector (1, -1) spans the same line.
        let target = ExactMatrix::from_i64_rows(&q(), &[&[1], &[-1]]);
        assert!(k.solve_matrix(&target).unwrap().is_some());
    }

    #[test]
    fn kernel_of_two_functionals() {
        let m = ExactMatrix::from_i64_rows(&q(), &[&[1, 0, 1], &[0, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, ExactMatrix::from_i64_rows(&q(), &[&[-1], &[-1], &[1]]));
        assert!(m.matmul(&k).unwrap().is_zero());
        let target = ExactMatrix::from_i64_rows(&q(), &[&[1], &[1], &[-1]]);
        assert!(k.solve_matrix(&target).unwrap().is_some());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = ExactMatrix::from_i64_rows(&q(), &[&[1], &[0]]);
        let b = [ExactScalar::zero(&q()), ExactScalar::one(&q())];
        assert!(m.solve(&b).unwrap().is_none());
        let b2 = [ExactScalar::from_int(&q(), 5), ExactScalar::zero(&q())];
        let x = m.solve(&b2).unwrap().unwrap();
        assert_eq!(x, vec![ExactScalar::from_int(&q(), 5)]);
    }

    #[test]
    fn kronecker_convention() {
        let a = ExactMatrix::from_i64_rows(&q(), &[&[0, 1], &[0, 0]]);
        let b = ExactMatrix::from_i64_rows(&q(), &[&[2]]);
        let k = a.kronecker(&b).unwrap();
        assert_eq!(k, ExactMatrix::from_i64_rows(&q(), &[&[0, 2], &[0, 0]]));
    }

    #[test]
    fn kronecker_mixed_product() {
        let a = ExactMatrix::from_i64_rows(&q(), &[&[1, 2], &[3, 4]]);
        let b = ExactMatrix::from_i64_rows(&q(), &[&[0, 1], &[1, 1]]);
        let c = ExactMatrix::from_i64_rows(&q(), &[&[2], &[5]]);
        let d = ExactMatrix::from_i64_rows(&q(), &[&[1, -1], &[0, 2]]);
        let lhs = a
            .kronecker(&b)
            .unwrap()
            .matmul(&c.kronecker(&d).unwrap())
            .unwrap();
        let rhs = a
            .matmul(&c)
            .unwrap()
            .kronecker(&b.matmul(&d).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_and_singular() {
        let m = ExactMatrix::from_i64_rows(&q(), &[&[1, 1], &[0, 1]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(inv, ExactMatrix::from_i64_rows(&q(), &[&[1, -1], &[0, 1]]));
        assert!(m.matmul(&inv).unwrap().is_identity());
        let s = ExactMatrix::from_i64_rows(&q(), &[&[1, 1], &[1, 1]]);
        assert!(s.inverse().unwrap().is_none());
    }

    #[test]
    fn extend_to_basis_appends_standard_vectors() {
        let c = ExactMatrix::from_i64_rows(&q(), &[&[1], &[1]]);
        let (full, appended) = c.extend_to_basis().unwrap();
        assert_eq!(appended, vec![0]);
        assert_eq!(full, ExactMatrix::from_i64_rows(&q(), &[&[1, 1], &[1, 0]]));
        assert!(full.inverse().unwrap().is_some());
        let dep = ExactMatrix::from_i64_rows(&q(), &[&[1, 2], &[1, 2]]);
        assert!(dep.extend_to_basis().is_err());
    }

    #[test]
    fn column_space_basis_takes_original_columns() {
        let m = ExactMatrix::from_i64_rows(&q(), &[&[2, 4, 1], &[1, 2, 0]]);
        let b = m.column_space_basis();
        assert_eq!(b, ExactMatrix::from_i64_rows(&q(), &[&[2, 1], &[1, 0]]));
    }

    #[test]
    fn shape_and_field_errors() {
        let a = ExactMatrix::from_i64_rows(&q(), &[&[1, 2]]);
        let b = ExactMatrix::from_i64_rows(&q(), &[&[1, 2]]);
        assert!(a.matmul(&b).is_err());
        let f7 = FieldSpec::prime_field(7).unwrap();
        let c = ExactMatrix::from_i64_rows(&f7, &[&[1], &[2]]);
        assert!(a.matmul(&c).is_err());
        assert!(a.add(&c.transpose()).is_err());
    }

    #[test]
    fn empty_matrices() {
        let e = ExactMatrix::zeros(&q(), 2, 0);
        let f = ExactMatrix::zeros(&q(), 0, 3);
        let p = e.matmul(&f).unwrap();
        assert_eq!((p.rows(), p.cols()), (2, 3));
        assert!(p.is_zero());
        assert!(ExactMatrix::identity(&q(), 0).is_identity());
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel_basis().cols(), 0);
    }

    #[test]
    fn prime_field_elimination() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let m = ExactMatrix::from_i64_rows(&f5, &[&[2, 1], &[3, 4]]);
        // det = 8 - 3 = 5 = 0 in F_5, so the rank drops to 1.
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.matmul(&k).unwrap().is_zero());
    }
}
