//! Integer matrices and the Smith normal form.
//!
//! The Smith normal form routine returns the full transform data
//! U * M * V = D with U, V unimodular (their tracked inverses certify
//! this), diagonal entries nonnegative, and each entry dividing the
//! next. Integer linear systems and kernel lattices reduce to it.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::Result;

/// A dense rows x cols integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), ncols, |r, c| BigInt::from(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        Self::from_fn(self.rows, idx.len(), |r, j| self.get(r, idx[j]).clone())
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn neg(&self) -> IntMatrix {
        Self::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape(format!(
                "cannot add {}x{} to {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) + other.get(r, c)
        }))
    }

    pub fn matmul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
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
                    let v = out.get(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::shape(format!(
                "cannot apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![BigInt::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c).is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] += self.get(r, c) * &v[c];
            }
        }
        Ok(out)
    }

    /// Kronecker product with the convention
    /// `(A (x) B)[i*rows(B)+k, j*cols(B)+l] = A[i,j] * B[k,l]`.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
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
        out
    }

    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::shape(format!(
                "cannot hstack {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::shape(format!(
                "cannot vstack {} cols with {} cols",
                self.cols, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        }))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row i += k * row j
    fn add_row_multiple(&mut self, i: usize, j: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(i, c) + k * self.get(j, c);
            self.set(i, c, v);
        }
    }

    /// col i += k * col j
    fn add_col_multiple(&mut self, i: usize, j: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, i) + k * self.get(r, j);
            self.set(r, i, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    /// Smith normal form with tracked transforms.
    pub fn smith_normal_form(&self) -> SmithNormalForm {
        let rows = self.rows;
        let cols = self.cols;
        let mut m = self.clone();
        let mut u = Self::identity(rows);
        let mut u_inv = Self::identity(rows);
        let mut v = Self::identity(cols);
        let mut v_inv = Self::identity(cols);

        // Row op mirrors: m <- E m means u <- E u, u_inv <- u_inv E^-1.
        // Col op mirrors: m <- m F means v <- v F, v_inv <- F^-1 v_inv.
        let bound = rows.min(cols);
        let mut t = 0;
        'pivot: while t < bound {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if m.get(r, c).is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(br, bc)| m.get(r, c).abs() < m.get(br, bc).abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                break;
            };
            if pr != t {
                m.swap_rows(t, pr);
                u.swap_rows(t, pr);
                u_inv.swap_cols(t, pr);
            }
            if pc != t {
                m.swap_cols(t, pc);
                v.swap_cols(t, pc);
                v_inv.swap_rows(t, pc);
            }
            // Clear the pivot column; a nonzero remainder becomes a
            // smaller candidate, so re-pick.
            for r in t + 1..rows {
                if m.get(r, t).is_zero() {
                    continue;
                }
                let (q, rem) = m.get(r, t).div_rem(m.get(t, t));
                let k = -&q;
                m.add_row_multiple(r, t, &k);
                u.add_row_multiple(r, t, &k);
                u_inv.add_col_multiple(t, r, &q);
                if !rem.is_zero() {
                    continue 'pivot;
                }
            }
            // Clear the pivot row; column t below the pivot is zero, so
            // these column ops leave it intact.
            for c in t + 1..cols {
                if m.get(t, c).is_zero() {
                    continue;
                }
                let (q, rem) = m.get(t, c).div_rem(m.get(t, t));
                let k = -&q;
                m.add_col_multiple(c, t, &k);
                v.add_col_multiple(c, t, &k);
                v_inv.add_row_multiple(t, c, &q);
                if !rem.is_zero() {
                    continue 'pivot;
                }
            }
            // Enforce the divisibility chain: fold an offending row into
            // the pivot row and restart this pivot.
            let p = m.get(t, t).clone();
            for r in t + 1..rows {
                for c in t + 1..cols {
                    if !m.get(r, c).mod_floor(&p).is_zero() {
                        let one = BigInt::from(1);
                        let minus_one = BigInt::from(-1);
                        m.add_row_multiple(t, r, &one);
                        u.add_row_multiple(t, r, &one);
                        u_inv.add_col_multiple(r, t, &minus_one);
                        continue 'pivot;
                    }
                }
            }
            if m.get(t, t).is_negative() {
                m.negate_row(t);
                u.negate_row(t);
                for r in 0..rows {
                    let neg = -u_inv.get(r, t);
                    u_inv.set(r, t, neg);
                }
            }
            t += 1;
        }
        SmithNormalForm {
            u,
            d: m,
            v,
            u_inv,
            v_inv,
        }
    }

    /// Basis of the integer solution lattice of self * x = 0, as
    /// columns. Because V is unimodular these columns generate every
    /// integer solution, not just a finite-index sublattice.
    pub fn kernel_lattice(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let rank = snf.rank();
        let idx: Vec<usize> = (rank..self.cols).collect();
        snf.v.select_columns(&idx)
    }

    /// Some integer solution of self * x = b, or None.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        Ok(self.smith_normal_form().solve(b)?)
    }
}

/// The decomposition U * M * V = D.
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithNormalForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Solves M x = b through the diagonalization; free coordinates are
    /// set to zero.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        let ub = self.u.apply(b)?;
        let min = self.d.rows().min(self.d.cols());
        let mut y = vec![BigInt::zero(); self.d.cols()];
        for (i, val) in ub.iter().enumerate() {
            let dii = if i < min {
                self.d.get(i, i).clone()
            } else {
                BigInt::zero()
            };
            if dii.is_zero() {
                if !val.is_zero() {
                    return Ok(None);
                }
            } else {
                let (q, rem) = val.div_rem(&dii);
                if !rem.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
        }
        Ok(Some(self.v.apply(&y)?))
    }
}

impl core::fmt::Display for IntMatrix {
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

impl core::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "IntMatrix({}x{})\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_snf_contract(m: &IntMatrix) -> SmithNormalForm {
        let snf = m.smith_normal_form();
        let umv = snf.u.matmul(m).unwrap().matmul(&snf.v).unwrap();
        assert_eq!(umv, snf.d, "U M V = D");
        assert!(
            snf.u.matmul(&snf.u_inv).unwrap() == IntMatrix::identity(m.rows()),
            "U unimodular"
        );
        assert!(
            snf.v.matmul(&snf.v_inv).unwrap() == IntMatrix::identity(m.cols()),
            "V unimodular"
        );
        let diag = snf.diagonal();
        for i in 0..diag.len() {
            assert!(diag[i] >= BigInt::zero(), "nonnegative diagonal");
            if i + 1 < diag.len() && !diag[i].is_zero() {
                assert!(
                    diag[i + 1].mod_floor(&diag[i]).is_zero(),
                    "divisibility chain at {i}: {:?}",
                    diag
                );
            }
            if diag[i].is_zero() && i + 1 < diag.len() {
                assert!(diag[i + 1].is_zero(), "zeros come last");
            }
        }
        for r in 0..snf.d.rows() {
            for c in 0..snf.d.cols() {
                if r != c {
                    assert!(snf.d.get(r, c).is_zero(), "off-diagonal zero");
                }
            }
        }
        snf
    }

    #[test]
    fn snf_of_diag_2_3() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let snf = assert_snf_contract(&m);
        assert_eq!(
            snf.diagonal(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn snf_of_zero_matrix() {
        let m = IntMatrix::zeros(2, 3);
        let snf = assert_snf_contract(&m);
        assert!(snf.d.is_zero());
        assert_eq!(snf.u, IntMatrix::identity(2));
        assert_eq!(snf.v, IntMatrix::identity(3));
    }

    #[test]
    fn snf_classic_three_by_three() {
        let m = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let snf = assert_snf_contract(&m);
        assert_eq!(
            snf.diagonal(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn snf_rectangular_and_negative() {
        for rows in [
            IntMatrix::from_i64_rows(&[&[4, 6, 8]]),
            IntMatrix::from_i64_rows(&[&[-3], &[6], &[9]]),
            IntMatrix::from_i64_rows(&[&[0, 5], &[7, 0], &[2, 2]]),
            IntMatrix::from_i64_rows(&[&[12, 8], &[6, 10]]),
        ] {
            assert_snf_contract(&rows);
        }
    }

    #[test]
    fn kernel_lattice_of_single_relation() {
        let m = IntMatrix::from_i64_rows(&[&[2, 6]]);
        let k = m.kernel_lattice();
        assert_eq!(k, IntMatrix::from_i64_rows(&[&[-3], &[1]]));
        assert!(m.matmul(&k).unwrap().is_zero());
    }

    #[test]
    fn kernel_lattice_is_primitive() {
        // x + y + z = 0 has a rank-2 kernel containing e.g. (1, -1, 0).
        let m = IntMatrix::from_i64_rows(&[&[1, 1, 1]]);
        let k = m.kernel_lattice();
        assert_eq!(k.cols(), 2);
        assert!(m.matmul(&k).unwrap().is_zero());
        // (1, -1, 0) must be an integer combination of the basis.
        let sol = k.solve(&[BigInt::from(1), BigInt::from(-1), BigInt::from(0)]);
        assert!(sol.unwrap().is_some());
    }

    #[test]
    fn integer_solve() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let b = [BigInt::from(4), BigInt::from(9)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), b.to_vec());

        let m2 = IntMatrix::from_i64_rows(&[&[2]]);
        assert!(m2.solve(&[BigInt::from(3)]).unwrap().is_none());

        let m3 = IntMatrix::from_i64_rows(&[&[2, 6]]);
        let b3 = [BigInt::from(4)];
        let x3 = m3.solve(&b3).unwrap().unwrap();
        assert_eq!(m3.apply(&x3).unwrap(), b3.to_vec());
    }
}
