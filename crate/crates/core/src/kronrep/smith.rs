//! Smith normal form of matrices over GF(q)[t].

use crate::gf::FieldCtx;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged polynomial matrix");
        PolyMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &PolyMatrix, k: &FieldCtx) -> PolyMatrix {
        assert_eq!(self.cols, o.rows, "polynomial matrix product shape");
        let mut out = PolyMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Poly::zero();
                for l in 0..self.cols {
                    acc = acc.add(&self.get(i, l).mul(o.get(l, j), k), k);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Determinant by Laplace expansion; meant for auditing small transforms.
    pub fn determinant(&self, k: &FieldCtx) -> Poly {
        assert_eq!(self.rows, self.cols);
        fn det(m: &[Vec<Poly>], k: &FieldCtx) -> Poly {
            let n = m.len();
            if n == 0 {
                return Poly::one();
            }
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det(&minor, k), k);
                acc = if j % 2 == 0 { acc.add(&term, k) } else { acc.sub(&term, k) };
            }
            acc
        }
        let rows: Vec<Vec<Poly>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect()).collect();
        det(&rows, k)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &Poly, k: &FieldCtx) {
        for j in 0..self.cols {
            let v = self.get(dst, j).add(&self.get(src, j).mul(f, k), k);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += f * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, f: &Poly, k: &FieldCtx) {
        for i in 0..self.rows {
            let v = self.get(i, dst).add(&self.get(i, src).mul(f, k), k);
            self.set(i, dst, v);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Poly, k: &FieldCtx) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(c, k);
            self.set(r, j, v);
        }
    }
}

/// `left * M * right = diag(invariant_factors)`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// `min(rows, cols)` monic entries with `d_i | d_(i+1)`; zeros trail.
    pub invariant_factors: Vec<Poly>,
    pub left: PolyMatrix,
    pub right: PolyMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms. The pivot is the nonzero
/// entry of least degree, ties broken by row-major position.
pub fn smith_normal_form(m: &PolyMatrix, k: &FieldCtx) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = PolyMatrix::identity(rows);
    let mut right = PolyMatrix::identity(cols);
    let n = rows.min(cols);
    let mut diag = vec![Poly::zero(); n];

    'outer: for s in 0..n {
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for i in s..rows {
                for j in s..cols {
                    if let Some(d) = a.get(i, j).degree() {
                        if best.is_none_or(|(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                break 'outer;
            };
            a.swap_rows(s, pi);
            left.swap_rows(s, pi);
            a.swap_cols(s, pj);
            right.swap_cols(s, pj);

            let pivot = a.get(s, s).clone();
            let mut clean = true;
            for i in s + 1..rows {
                if a.get(i, s).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, s).divrem(&pivot, k).expect("pivot nonzero");
                let nq = q.neg(k);
                a.add_row_multiple(i, s, &nq, k);
                left.add_row_multiple(i, s, &nq, k);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            for j in s + 1..cols {
                if a.get(s, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(s, j).divrem(&pivot, k).expect("pivot nonzero");
                let nq = q.neg(k);
                a.add_col_multiple(j, s, &nq, k);
                right.add_col_multiple(j, s, &nq, k);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (s + 1..rows).find(|&i| {
                (s + 1..cols).any(|j| !a.get(i, j).rem(&pivot, k).expect("pivot nonzero").is_zero())
            });
            match offender {
                Some(i) => {
                    a.add_row_multiple(s, i, &Poly::one(), k);
                    left.add_row_multiple(s, i, &Poly::one(), k);
                }
                None => break,
            }
        }
        let lead_inv = Poly::constant(k.inv(a.get(s, s).lead()).expect("pivot nonzero"));
        a.scale_row(s, &lead_inv, k);
        left.scale_row(s, &lead_inv, k);
        diag[s] = a.get(s, s).clone();
    }
    SmithForm { invariant_factors: diag, left, right }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: &FieldCtx, c: &[u32]) -> Poly {
        Poly::from_codes(k, c).unwrap()
    }

    fn audit(m: &PolyMatrix, k: &FieldCtx) -> SmithForm {
        let s = smith_normal_form(m, k);
        let prod = s.left.mul(m, k).mul(&s.right, k);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let expect = if i == j { s.invariant_factors[i].clone() } else { Poly::zero() };
                assert_eq!(prod.get(i, j), &expect, "entry ({i},{j})");
            }
        }
        for w in s.invariant_factors.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must trail");
            } else {
                assert!(w[1].rem(&w[0], k).unwrap().is_zero());
            }
        }
        assert_eq!(s.left.determinant(k).degree(), Some(0));
        assert_eq!(s.right.determinant(k).degree(), Some(0));
        s
    }

    #[test]
    fn diagonal_t_t() {
        let k = FieldCtx::new(2, 1).unwrap();
        let t = Poly::t();
        let m = PolyMatrix::from_rows(vec![vec![t.clone(), Poly::zero()], vec![Poly::zero(), t.clone()]]);
        assert_eq!(audit(&m, &k).invariant_factors, vec![t.clone(), t]);
    }

    #[test]
    fn upper_triangular_t_1_0_t() {
        let k = FieldCtx::new(3, 1).unwrap();
        let t = Poly::t();
        let m = PolyMatrix::from_rows(vec![vec![t.clone(), Poly::one()], vec![Poly::zero(), t.clone()]]);
        assert_eq!(audit(&m, &k).invariant_factors, vec![Poly::one(), t.pow(2, &k)]);
    }

    #[test]
    fn jordan_block_pencil() {
        // tI - [[a,1],[0,a]] has invariant factors 1, (t-a)^2.
        let k = FieldCtx::new(5, 1).unwrap();
        for a in 0..5u32 {
            let na = k.neg(k.elem(a).unwrap()).code();
            let m = PolyMatrix::from_rows(vec![
                vec![p(&k, &[na, 1]), p(&k, &[4])],
                vec![Poly::zero(), p(&k, &[na, 1])],
            ]);
            let s = audit(&m, &k);
            assert_eq!(s.invariant_factors, vec![Poly::one(), p(&k, &[na, 1]).pow(2, &k)]);
        }
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let k = FieldCtx::new(3, 1).unwrap();
        let t = Poly::t();
        let m = PolyMatrix::from_rows(vec![
            vec![t.clone(), Poly::one(), Poly::zero()],
            vec![t.pow(2, &k), t.clone(), Poly::zero()],
        ]);
        let s = audit(&m, &k);
        assert_eq!(s.invariant_factors, vec![Poly::one(), Poly::zero()]);
        assert_eq!(s.rank(), 1);
        let s = audit(&m.transpose(), &k);
        assert_eq!(s.rank(), 1);
    }
}
