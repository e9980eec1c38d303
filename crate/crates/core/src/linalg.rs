//! Exact linear algebra over a [`Field`]: rank, reduced row-echelon
//! form, nullspaces. Arithmetic is exact, so elimination needs no
//! pivoting strategy beyond "find a nonzero entry".

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// A dense matrix over a finite field, stored row-major as packed
/// element encodings.
#[derive(Clone)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of field elements; all elements must
    /// belong to `field` and the rows must have equal lengths.
    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch);
                }
                data.push(e.value());
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub(crate) fn from_packed(field: &Field, rows: usize, cols: usize, data: Vec<u64>) -> Matrix {
        debug_assert_eq!(rows * cols, data.len());
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.element_from_packed(self.data[i * self.cols + j])
    }

    pub(crate) fn packed_at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn packed_row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row(&self, i: usize) -> Vec<FieldElement> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps the named columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.data[i * self.cols + j]);
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        row_echelon(&self.field, &mut work, self.rows, self.cols)
    }

    /// Reduced row-echelon form with zero rows dropped: the canonical
    /// representative of the row space, so equality of RREFs is
    /// equality of row spaces.
    pub fn rref(&self) -> Matrix {
        let mut work = self.data.clone();
        let rank = row_echelon(&self.field, &mut work, self.rows, self.cols);
        back_substitute(&self.field, &mut work, rank, self.cols);
        work.truncate(rank * self.cols);
        Matrix {
            field: self.field.clone(),
            rows: rank,
            cols: self.cols,
            data: work,
        }
    }

    /// True when the two matrices span the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        a.rows == b.rows && a.data == b.data
    }

    /// A basis (as matrix rows) of the right nullspace
    /// { x : self * x^T = 0 }, with `cols - rank` rows.
    pub fn nullspace(&self) -> Matrix {
        let f = self.field.packed();
        let r = self.rref();
        // pivot column of each rref row
        let mut pivots = Vec::with_capacity(r.rows);
        for i in 0..r.rows {
            let j = (0..r.cols)
                .find(|&j| r.data[i * r.cols + j] != 0)
                .expect("rref rows are nonzero");
            pivots.push(j);
        }
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &j in &pivots {
                v[j] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut data = Vec::with_capacity(free.len() * self.cols);
        for &fj in &free {
            let mut x = vec![0u64; self.cols];
            x[fj] = 1;
            // pivot variable = -(coefficient of the free column)
            for (i, &pj) in pivots.iter().enumerate() {
                x[pj] = f.neg(r.data[i * r.cols + fj]);
            }
            data.extend_from_slice(&x);
        }
        Matrix {
            field: self.field.clone(),
            rows: free.len(),
            cols: self.cols,
            data,
        }
    }

    /// Square and invertible?
    pub fn is_nonsingular(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Renders the matrix as plain text, one row per line, entries in
    /// canonical form separated by single spaces.
    pub fn to_plain_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// In-place elimination to (unreduced) row echelon form; returns the
/// rank. Rows end up ordered with the `rank` pivot rows first.
fn row_echelon(field: &Field, data: &mut [u64], rows: usize, cols: usize) -> usize {
    let f = field.packed();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(src) = (pivot_row..rows).find(|&i| data[i * cols + col] != 0) else {
            continue;
        };
        if src != pivot_row {
            for j in 0..cols {
                data.swap(src * cols + j, pivot_row * cols + j);
            }
        }
        let inv = f.inv(data[pivot_row * cols + col]).expect("pivot nonzero");
        for j in col..cols {
            data[pivot_row * cols + j] = f.mul(data[pivot_row * cols + j], inv);
        }
        for i in pivot_row + 1..rows {
            let factor = data[i * cols + col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                let sub = f.mul(factor, data[pivot_row * cols + j]);
                data[i * cols + j] = f.sub(data[i * cols + j], sub);
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

/// Clears entries above the pivots of an echelon form (pivots already 1).
fn back_substitute(field: &Field, data: &mut [u64], rank: usize, cols: usize) {
    let f = field.packed();
    for i in (0..rank).rev() {
        let Some(col) = (0..cols).find(|&j| data[i * cols + j] != 0) else {
            continue;
        };
        for above in 0..i {
            let factor = data[above * cols + col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                let sub = f.mul(factor, data[i * cols + j]);
                data[above * cols + j] = f.sub(data[above * cols + j], sub);
            }
        }
    }
}
