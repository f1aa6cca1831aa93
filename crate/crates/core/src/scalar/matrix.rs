use std::fmt;

use super::{CyclotomicField, Scalar};

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: CyclotomicField,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: CyclotomicField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: CyclotomicField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// # Panics
    /// If `entries.len() != rows * cols`.
    pub fn from_entries(field: CyclotomicField, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows × cols");
        Matrix { field, rows, cols, entries }
    }

    pub fn from_rows(field: CyclotomicField, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        Self::from_entries(field, r, c, entries)
    }

    pub fn field(&self) -> CyclotomicField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Gauss–Jordan elimination; the pivot of each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for x in rows[r].iter_mut().skip(c) {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let support: Vec<usize> = (c..self.cols).filter(|&j| !rows[r][j].is_zero()).collect();
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for &j in &support {
                    row[j] -= &(&factor * &pivot_row[j]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let entries = rows.into_iter().flatten().collect();
        Rref { matrix: Matrix { field: self.field, rows: self.rows, cols: self.cols, entries }, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Rank and a kernel basis. Each kernel vector has a 1 in exactly one
    /// non-pivot column and 0 in the others, listed by increasing free column,
    /// so the basis is determined by the kernel alone.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let rref = self.rref();
        let kernel = rref.kernel();
        (rref.pivots.len(), kernel)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let m = &self.matrix;
        let field = m.field;
        let mut is_pivot = vec![false; m.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); m.cols];
            v[free] = field.one();
            for (row, &p) in self.pivots.iter().enumerate() {
                let entry = m.get(row, free);
                if !entry.is_zero() {
                    v[p] = -entry;
                }
            }
            kernel.push(v);
        }
        kernel
    }

    /// The nonzero rows of the reduced form.
    pub fn row_space(&self) -> Vec<Vec<Scalar>> {
        (0..self.pivots.len()).map(|r| self.matrix.row(r).to_vec()).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(f: CyclotomicField, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(f, rows.iter().map(|r| r.iter().map(|&x| f.integer(x)).collect()).collect())
    }

    #[test]
    fn identity_has_full_rank() {
        let f = CyclotomicField::new(12).unwrap();
        let (rank, kernel) = Matrix::identity(f, 2).rank_and_kernel();
        assert_eq!(rank, 2);
        assert!(kernel.is_empty());
    }

    #[test]
    fn empty_matrix() {
        let f = CyclotomicField::new(12).unwrap();
        let (rank, kernel) = Matrix::zeros(f, 0, 0).rank_and_kernel();
        assert_eq!(rank, 0);
        assert!(kernel.is_empty());
        let (rank, kernel) = Matrix::zeros(f, 0, 3).rank_and_kernel();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = CyclotomicField::new(12).unwrap();
        let m = int_matrix(f, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn cyclotomic_entries() {
        let f = CyclotomicField::new(12).unwrap();
        let z = f.zeta();
        // rows (1, z) and (z, z^2) are dependent
        let m = Matrix::from_rows(f, vec![vec![f.one(), z.clone()], vec![z.clone(), &z * &z]]);
        assert_eq!(m.rank(), 1);
    }
}
