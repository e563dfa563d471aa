//! Dense exact linear algebra over the base field.
//!
//! Everything downstream (covers, syzygies, liftings, hom solves) reduces to
//! RREF with top-down row scans, so pivot choices are fully deterministic.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.scale(&self.field.one().neg()))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Write `block` into `self` with upper-left corner at (r, c).
    pub fn set_block(&mut self, r: usize, c: usize, block: &Mat) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r + i, c + j).clone());
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot columns in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    let a = self.get(row, j).clone();
                    let b = self.get(p, j).clone();
                    self.set(row, j, b);
                    self.set(p, j, a);
                }
            }
            let inv = self.get(row, col).inv();
            for j in col..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).sub(&f.mul(self.get(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the nullspace, one column per free variable, in column order.
    /// The standard RREF parametrization: free variable set to 1, others 0.
    pub fn nullspace(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_set[*c].is_none()).collect();
        let mut out = Mat::zeros(self.field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, self.field.one());
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, m.get(r, fc).neg());
            }
        }
        out
    }

    /// Solve `self * x = b` for one particular solution (free variables zero).
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.field, self.rows, self.cols + 1);
        aug.set_block(0, 0, self);
        for i in 0..self.rows {
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::DimensionMismatch(
                "inconsistent linear system".into(),
            ));
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Ok(x)
    }

    /// Solve `self * X = B` columnwise.
    pub fn solve_mat(&self, b: &Mat) -> Result<Mat> {
        assert_eq!(self.rows, b.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.column(j))?);
        }
        Ok(Mat::from_columns(self.field, self.cols, &cols))
    }

    /// Echelon basis of the column span: RREF of the transpose read back as columns.
    pub fn column_space(&self) -> Mat {
        let mut t = self.transpose();
        let pivots = t.rref();
        let mut cols = Vec::new();
        for r in 0..pivots.len() {
            cols.push((0..self.rows).map(|i| t.get(r, i).clone()).collect());
        }
        Mat::from_columns(self.field, self.rows, &cols)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// True if `v` lies in the column span.
    pub fn contains_column(&self, v: &[Scalar]) -> bool {
        self.solve(v).is_ok()
    }
}

/// Greedy deterministic selection: scan `candidates` in order and keep those
/// independent of `base` and of the candidates already kept. Returns kept indices.
pub fn select_independent(base: &Mat, candidates: &Mat) -> Vec<usize> {
    let mut kept = Vec::new();
    let mut current = base.clone();
    let mut rank = current.rank();
    for j in 0..candidates.cols {
        let col = candidates.block(0, j, candidates.rows, 1);
        let trial = current.hstack(&col);
        let r = trial.rank();
        if r > rank {
            kept.push(j);
            current = trial;
            rank = r;
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: Field, rows: usize, cols: usize, vals: &[i64]) -> Mat {
        let mut out = Mat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, field.from_i64(vals[i * cols + j]));
            }
        }
        out
    }

    #[test]
    fn rref_and_rank() {
        let a = m(Field::Rational, 3, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.cols, 1);
        assert!(a.mul(&ns).is_zero());
    }

    #[test]
    fn solve_particular() {
        let a = m(Field::Rational, 2, 3, &[1, 1, 0, 0, 1, 1]);
        let b = vec![Field::Rational.from_i64(3), Field::Rational.from_i64(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        // free variable pinned to zero
        assert!(x[2].is_zero());
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(Field::Rational, 2, 1, &[1, 1]);
        let b = vec![Field::Rational.from_i64(1), Field::Rational.from_i64(2)];
        assert!(a.solve(&b).is_err());
    }

    #[test]
    fn prime_field_roundtrip() {
        let a = m(Field::Prime(7), 2, 2, &[2, 1, 3, 4]);
        assert_eq!(a.rank(), 2);
        let inv = a.solve_mat(&Mat::identity(Field::Prime(7), 2)).unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(Field::Prime(7), 2));
    }
}
