//! Dense Gauss-Jordan elimination over `F_p`.
//!
//! Every graded dimension in the crate is the rank of a coefficient matrix
//! whose rows are derivatives of forms. Bases are kept in canonical reduced
//! row-echelon form, so two spanning sets of the same space produce identical
//! [`ReducedBasis`] values.

use crate::error::{Error, Result};
use crate::field::{FieldElem, PrimeField, SeededRng};

/// How many times [`random_combinations`] redraws before giving up.
pub const GENERICITY_ATTEMPTS: usize = 3;

/// Row-major dense matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFp {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl MatrixFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        MatrixFp {
            field,
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    /// Stacks rows of equal length. An empty list gives a `0 x cols` matrix.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedInput {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().map(|c| field.elem(c.value())));
        }
        Ok(MatrixFp {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor reducing plain integers mod `p`.
    pub fn from_u64_rows(field: PrimeField, rows: &[&[u64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<FieldElem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.elem(v)).collect())
            .collect();
        MatrixFp::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Appends the rows of `other` below `self`.
    pub fn vstack(&self, other: &MatrixFp) -> Result<MatrixFp> {
        if self.cols != other.cols {
            return Err(Error::RaggedInput {
                row: self.rows,
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixFp {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &MatrixFp) -> Result<MatrixFp> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = MatrixFp::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank()
    }
}

/// A row space in canonical reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    basis_rows: MatrixFp,
    pivot_cols: Vec<usize>,
}

impl ReducedBasis {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn cols(&self) -> usize {
        self.basis_rows.cols
    }

    pub fn field(&self) -> PrimeField {
        self.basis_rows.field
    }

    pub fn basis_rows(&self) -> &MatrixFp {
        &self.basis_rows
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub fn into_matrix(self) -> MatrixFp {
        self.basis_rows
    }

    /// Whether `row` lies in the span.
    pub fn contains(&self, row: &[FieldElem]) -> bool {
        let f = self.field();
        let mut residue = row.to_vec();
        for (k, &pc) in self.pivot_cols.iter().enumerate() {
            let factor = residue[pc];
            if factor.is_zero() {
                continue;
            }
            for (j, &b) in self.basis_rows.row(k).iter().enumerate() {
                residue[j] = f.sub(residue[j], f.mul(factor, b));
            }
        }
        residue.iter().all(|c| c.is_zero())
    }
}

/// Canonical reduced row-echelon form of the row space of `m`.
pub fn rref(m: &MatrixFp) -> ReducedBasis {
    let f = m.field;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = f.inv(a.get(r, col)).expect("pivot is nonzero");
        let cols = a.cols;
        for j in col..cols {
            let v = f.mul(a.get(r, j), inv);
            a.set(r, j, v);
        }
        let (before, rest) = a.data.split_at_mut(r * cols);
        let (pivot_row, after) = rest.split_at_mut(cols);
        for other in before.chunks_exact_mut(cols).chain(after.chunks_exact_mut(cols)) {
            let factor = other[col];
            if factor.is_zero() {
                continue;
            }
            for j in col..cols {
                other[j] = f.sub(other[j], f.mul(factor, pivot_row[j]));
            }
        }
        pivots.push(col);
        r += 1;
    }
    a.data.truncate(r * a.cols);
    a.rows = r;
    ReducedBasis {
        basis_rows: a,
        pivot_cols: pivots,
    }
}

/// Dimension of the span of `rows`, all of which must share one length.
pub fn rank_of_span(field: PrimeField, rows: &[Vec<FieldElem>]) -> Result<usize> {
    let Some(first) = rows.first() else {
        return Ok(0);
    };
    let m = MatrixFp::from_rows(field, first.len(), rows)?;
    Ok(rref(&m).rank())
}

/// `c` random combinations of the rows of `basis`, redrawn until they are
/// linearly independent.
pub fn random_combinations(basis: &ReducedBasis, c: usize, rng: &mut SeededRng) -> Result<MatrixFp> {
    if c > basis.rank() {
        return Err(Error::TypeTooLarge {
            requested: c,
            available: basis.rank(),
        });
    }
    let f = basis.field();
    for _ in 0..GENERICITY_ATTEMPTS {
        let mut coeffs = MatrixFp::zeros(f, c, basis.rank());
        for i in 0..c {
            for j in 0..basis.rank() {
                coeffs.set(i, j, f.random_nonzero(rng));
            }
        }
        let combos = coeffs.mul(basis.basis_rows())?;
        if combos.rank() == c {
            return Ok(combos);
        }
    }
    Err(Error::GenericityFailure {
        attempts: GENERICITY_ATTEMPTS,
    })
}
