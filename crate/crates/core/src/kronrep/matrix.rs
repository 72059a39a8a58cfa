//! Dense matrices over GF(q) and exact Gaussian elimination.

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Row-major dense matrix. Maps act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![FieldElem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vec<FieldElem>>) -> Result<Self> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("expected a {rows}x{cols} matrix")));
        }
        Ok(Matrix { rows, cols, data: data.into_iter().flatten().collect() })
    }

    pub fn from_codes(k: &FieldCtx, rows: usize, cols: usize, codes: &[Vec<u32>]) -> Result<Self> {
        let data = codes
            .iter()
            .map(|r| r.iter().map(|&c| k.elem(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows, cols, data)
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

    pub fn to_codes(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|c| c.code()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix, k: &FieldCtx) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = k.add(out.get(i, j), k.mul(a, o.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElem], k: &FieldCtx) -> Vec<FieldElem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(FieldElem::ZERO, |acc, (&a, &b)| k.add(acc, k.mul(a, b)))
            })
            .collect()
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j));
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self, k: &FieldCtx) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = k.inv(m.get(r, c)).expect("pivot nonzero");
            for j in c..m.cols {
                let v = k.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = k.sub(m.get(i, j), k.mul(f, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, k: &FieldCtx) -> usize {
        self.rref(k).1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self, k: &FieldCtx) -> Vec<Vec<FieldElem>> {
        let (r, pivots) = self.rref(k);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![FieldElem::ZERO; self.cols];
                v[f] = FieldElem::ONE;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = k.neg(r.get(row, f));
                }
                v
            })
            .collect()
    }

    pub fn kernel_dim(&self, k: &FieldCtx) -> usize {
        self.cols - self.rank(k)
    }

    pub fn is_invertible(&self, k: &FieldCtx) -> bool {
        self.rows == self.cols && self.rank(k) == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_vectors_are_annihilated() {
        let k = FieldCtx::new(3, 1).unwrap();
        let m = Matrix::from_codes(&k, 2, 4, &[vec![1, 2, 0, 1], vec![2, 1, 0, 2]]).unwrap();
        let ker = m.kernel(&k);
        assert_eq!(ker.len(), 4 - m.rank(&k));
        for v in ker {
            assert!(m.mul_vec(&v, &k).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn empty_shapes() {
        let k = FieldCtx::new(2, 1).unwrap();
        let m = Matrix::zeros(0, 3);
        assert_eq!(m.rank(&k), 0);
        assert_eq!(m.kernel(&k).len(), 3);
        assert_eq!(Matrix::zeros(2, 0).mul_vec(&[], &k).len(), 2);
    }
}
