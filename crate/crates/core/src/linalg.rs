//! Dense exact linear algebra over a [`Field`].

use crate::error::{Error, Result};
use crate::scalars::{Field, FieldElement};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix over {:?} {}x{}\n{}", self.field, self.rows, self.cols, self)
    }
}

/// One line per row, entries separated by single spaces.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> FieldElement) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Leading `n x n` block.
    pub fn leading_block(&self, n: usize) -> Matrix {
        Matrix::from_fn(&self.field, n, n, |r, c| self.get(r, c))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::IncompatibleFields);
        }
        if self.cols != other.rows {
            return Err(Error::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c);
                        out.set(r, c, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j);
                self.set(r, j, f.mul(v, inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![FieldElement::ZERO; self.cols];
                v[fc] = FieldElement::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::Precondition("determinant of a non-square matrix".into()));
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = FieldElement::ONE;
        for c in 0..self.cols {
            let Some(pr) = (c..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(FieldElement::ZERO);
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot)?;
            for i in c + 1..self.rows {
                let factor = f.mul(m.get(i, c), inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Precondition("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(&self.field, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c)
            } else if c - n == r {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotInvertible);
        }
        Ok(Matrix::from_fn(&self.field, n, n, |r, c| aug.get(r, c + n)))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..r.min(self.cols)).all(|c| self.get(r, c).is_zero()))
    }
}

/// Reusable solver for `A y = b` when `A` has full column rank: a square
/// subsystem on independent rows is inverted once.
pub struct ColumnSolver {
    pivot_rows: Vec<usize>,
    inverse: Matrix,
}

impl ColumnSolver {
    pub fn new(a: &Matrix) -> Result<ColumnSolver> {
        let f = a.field.clone();
        let mut work = a.clone();
        let mut origin: Vec<usize> = (0..a.rows).collect();
        let mut r = 0;
        for c in 0..a.cols {
            let pr = (r..work.rows)
                .find(|&i| !work.get(i, c).is_zero())
                .ok_or_else(|| Error::Precondition("matrix lacks full column rank".into()))?;
            work.swap_rows(r, pr);
            origin.swap(r, pr);
            let inv = f.inv(work.get(r, c))?;
            for i in r + 1..work.rows {
                let factor = f.mul(work.get(i, c), inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..work.cols {
                    let v = f.sub(work.get(i, j), f.mul(factor, work.get(r, j)));
                    work.set(i, j, v);
                }
            }
            r += 1;
        }
        let pivot_rows: Vec<usize> = origin[..a.cols].to_vec();
        let square = Matrix::from_fn(&f, a.cols, a.cols, |i, j| a.get(pivot_rows[i], j));
        Ok(ColumnSolver { pivot_rows, inverse: square.inverse()? })
    }

    /// The unique candidate solution; callers verify it against all rows.
    pub fn solve(&self, rhs: impl Fn(usize) -> FieldElement) -> Vec<FieldElement> {
        let b: Vec<FieldElement> = self.pivot_rows.iter().map(|&r| rhs(r)).collect();
        self.inverse.mul_vec(&b)
    }
}
