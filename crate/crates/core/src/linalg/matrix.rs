use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { field, rows: r, cols, data }
    }

    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
        Matrix::from_rows(field, rows, cols)
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i].clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s = s.add_ref(&a.mul_ref(b));
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul_ref(s)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self + s * o`.
    pub fn axpy(&mut self, s: &Scalar, o: &Matrix) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a = a.add_ref(&s.mul_ref(b));
            }
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        out
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.get(i, j).clone();
            }
            for j in 0..o.cols {
                out.data[i * out.cols + self.cols + j] = o.get(i, j).clone();
            }
        }
        out
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.data[(i - r0) * out.cols + (j - c0)] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j).clone();
            }
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * out.cols + jj] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend(self.row(r).iter().cloned());
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut s = self.field.zero();
        for i in 0..self.rows {
            s = s.add_ref(self.get(i, i));
        }
        s
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn rref(&self) -> Rref {
        rref(self)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn kernel(&self) -> Matrix {
        kernel_basis(self)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let r = rref(&aug);
        if r.pivots.len() < n || (n > 0 && r.pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.reduced.submatrix(0, n, n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of the column space, as the pivot columns of `self`.
    pub fn column_space(&self) -> Matrix {
        let r = rref(self);
        self.select_columns(&r.pivots)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// Reduced row-echelon form by Gauss–Jordan elimination.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Smallest-height pivot keeps rational entries small.
        let mut best: Option<(usize, u128)> = None;
        for i in r..rows {
            let x = &a.data[i * cols + c];
            if !x.is_zero() {
                let h = x.height();
                if best.map_or(true, |(_, bh)| h < bh) {
                    best = Some((i, h));
                    if h <= 2 {
                        break;
                    }
                }
            }
        }
        let Some((p, _)) = best else { continue };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.data[r * cols + c].inv();
        if !inv.is_one() {
            for j in c..cols {
                let idx = r * cols + j;
                if !a.data[idx].is_zero() {
                    a.data[idx] = a.data[idx].mul_ref(&inv);
                }
            }
        }
        let nz: Vec<usize> = (c..cols).filter(|&j| !a.data[r * cols + j].is_zero()).collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.data[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            for &j in &nz {
                let v = a.data[r * cols + j].clone();
                let idx = i * cols + j;
                a.data[idx] = a.data[idx].sub_mul(&f, &v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    Rref { reduced: a, pivots, rank }
}

/// Columns spanning the null space of `m`, one per free column.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let f = m.field;
    let r = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m.cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(f, m.cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        k.set(fc, j, f.one());
        for (i, &pc) in r.pivots.iter().enumerate() {
            let v = r.reduced.get(i, fc);
            if !v.is_zero() {
                k.set(pc, j, v.neg_ref());
            }
        }
    }
    k
}

/// Some `x` with `a·x = b`, or `None` if the system is inconsistent.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!("solve: {} rows against {} rows", a.rows, b.rows)));
    }
    let f = a.field;
    let aug = a.hstack(b);
    let r = rref(&aug);
    if r.pivots.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(f, a.cols, b.cols);
    for (i, &p) in r.pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(p, j, r.reduced.get(i, a.cols + j).clone());
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_rank_one() {
        let q = FieldSpec::Rationals;
        let m = Matrix::from_ints(q, &[&[1, 2], &[2, 4]]);
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn empty_and_identity() {
        let q = FieldSpec::Rationals;
        assert_eq!(rref(&Matrix::zeros(q, 0, 0)).rank, 0);
        let i = Matrix::identity(q, 3);
        let r = rref(&i);
        assert_eq!(r.reduced, i);
        assert_eq!(kernel_basis(&i).cols(), 0);
        assert_eq!(kernel_basis(&Matrix::zeros(q, 2, 3)).cols(), 3);
    }

    #[test]
    fn kernel_over_f2() {
        let f = FieldSpec::prime(2).unwrap();
        let k = kernel_basis(&Matrix::from_ints(f, &[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![f.one(), f.one()]);
    }

    #[test]
    fn solve_cases() {
        let q = FieldSpec::Rationals;
        let a = Matrix::from_ints(q, &[&[1, 1]]);
        let b = Matrix::from_ints(q, &[&[2]]);
        let x = solve(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul(&x), b);
        let z = Matrix::from_ints(q, &[&[0]]);
        let one = Matrix::from_ints(q, &[&[1]]);
        assert!(solve(&z, &one).unwrap().is_none());
        assert!(solve(&a, &Matrix::zeros(q, 2, 1)).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let q = FieldSpec::Rationals;
        let m = Matrix::from_ints(q, &[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q, 2));
        assert!(Matrix::from_ints(q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
