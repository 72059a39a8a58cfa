//! Linear Kronecker representations `X1 ⇉ X0` over GF(q).
//!
//! `F` (the x-action) and `G` (the y-action) are `d0 × d1` matrices acting
//! on column vectors. The constructors use monomial bases ordered by
//! y-degree: `V_n` has basis `x^n, x^(n-1) y, ..., y^n`.

pub mod decompose;
pub mod matrix;
pub mod smith;

use serde::{Deserialize, Serialize};

use crate::binforms::BinForm;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::poly::Poly;

pub use decompose::{decompose, Decomposition, Indecomposable};
pub use matrix::Matrix;
pub use smith::{smith_normal_form, PolyMatrix, SmithForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KronRep {
    field: FieldCtx,
    d1: usize,
    d0: usize,
    f: Matrix,
    g: Matrix,
}

impl KronRep {
    /// Validates a pair of parallel maps.
    pub fn new(field: &FieldCtx, f: Matrix, g: Matrix) -> Result<Self> {
        if f.rows() != g.rows() || f.cols() != g.cols() {
            return Err(Error::ShapeMismatch(format!(
                "F is {}x{} but G is {}x{}",
                f.rows(),
                f.cols(),
                g.rows(),
                g.cols()
            )));
        }
        Ok(KronRep { field: field.clone(), d1: f.cols(), d0: f.rows(), f, g })
    }

    pub fn from_codes(
        field: &FieldCtx,
        d1: usize,
        d0: usize,
        f: &[Vec<u32>],
        g: &[Vec<u32>],
    ) -> Result<Self> {
        let f = Matrix::from_codes(field, d0, d1, f)?;
        let g = Matrix::from_codes(field, d0, d1, g)?;
        KronRep::new(field, f, g)
    }

    pub fn zero(field: &FieldCtx) -> Self {
        KronRep::new(field, Matrix::zeros(0, 0), Matrix::zeros(0, 0)).unwrap()
    }

    /// `P(n)`: `V_(n-1) ⇉ V_n` given by multiplication with `x` and `y`.
    pub fn preprojective(field: &FieldCtx, n: usize) -> Self {
        let mut f = Matrix::zeros(n + 1, n);
        let mut g = Matrix::zeros(n + 1, n);
        for j in 0..n {
            f.set(j, j, FieldElem::ONE);
            g.set(j + 1, j, FieldElem::ONE);
        }
        KronRep::new(field, f, g).unwrap()
    }

    /// `I(n)`, the dual of `P(n)`.
    pub fn preinjective(field: &FieldCtx, n: usize) -> Self {
        KronRep::preprojective(field, n).dual()
    }

    /// `R(f)`: `V_(n-1) ⇉ V_n / <f>`. The quotient drops the monomial of
    /// highest y-degree that occurs in `f`.
    pub fn regular(form: &BinForm) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        let n = form.degree();
        if n == 0 {
            return Err(Error::InvalidArgument("R(f) needs deg f >= 1".into()));
        }
        let k = form.field();
        let c = form.coeffs();
        let pivot = c.iter().rposition(|a| !a.is_zero()).unwrap();
        let inv = k.inv(c[pivot])?;
        let position = |j: usize| if j < pivot { j } else { j - 1 };
        // Image of monomial j of V_n in the quotient basis.
        let reduce = |j: usize| -> Vec<FieldElem> {
            let mut v = vec![FieldElem::ZERO; n];
            if j != pivot {
                v[position(j)] = FieldElem::ONE;
            } else {
                for (i, &ci) in c.iter().enumerate() {
                    if i != pivot && !ci.is_zero() {
                        v[position(i)] = k.neg(k.mul(ci, inv));
                    }
                }
            }
            v
        };
        let mut f = Matrix::zeros(n, n);
        let mut g = Matrix::zeros(n, n);
        for col in 0..n {
            for (row, val) in reduce(col).into_iter().enumerate() {
                f.set(row, col, val);
            }
            for (row, val) in reduce(col + 1).into_iter().enumerate() {
                g.set(row, col, val);
            }
        }
        KronRep::new(k, f, g)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// Dimension of `X1`, the arrow space.
    pub fn d1(&self) -> usize {
        self.d1
    }

    /// Dimension of `X0`, the vertex space.
    pub fn d0(&self) -> usize {
        self.d0
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn g(&self) -> &Matrix {
        &self.g
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d1, self.d0)
    }

    /// Transposes both maps, swapping the roles of `X0` and `X1`.
    pub fn dual(&self) -> Self {
        KronRep::new(&self.field, self.f.transpose(), self.g.transpose()).unwrap()
    }

    pub fn direct_sum(&self, o: &KronRep) -> Result<Self> {
        if self.field != o.field {
            return Err(Error::FieldMismatch);
        }
        KronRep::new(
            &self.field,
            Matrix::block_diag(&self.f, &o.f),
            Matrix::block_diag(&self.g, &o.g),
        )
    }

    pub fn direct_sum_all<'a>(field: &FieldCtx, parts: impl IntoIterator<Item = &'a KronRep>) -> Result<Self> {
        parts.into_iter().try_fold(KronRep::zero(field), |acc, p| acc.direct_sum(p))
    }

    /// The pencil `t F - G` over GF(q)[t].
    pub fn pencil(&self) -> PolyMatrix {
        let k = &self.field;
        let mut m = PolyMatrix::zeros(self.d0, self.d1);
        for i in 0..self.d0 {
            for j in 0..self.d1 {
                m.set(i, j, Poly::new(vec![k.neg(self.g.get(i, j)), self.f.get(i, j)]));
            }
        }
        m
    }

    /// Whether `(phi1, phi0)` satisfies `phi0 F = F' phi1` and `phi0 G = G' phi1`.
    pub fn is_intertwiner(&self, target: &KronRep, phi1: &Matrix, phi0: &Matrix) -> bool {
        let k = &self.field;
        if phi1.rows() != target.d1 || phi1.cols() != self.d1 || phi0.rows() != target.d0 || phi0.cols() != self.d0 {
            return false;
        }
        phi0.mul(&self.f, k) == target.f.mul(phi1, k) && phi0.mul(&self.g, k) == target.g.mul(phi1, k)
    }

    /// Dimension of `Hom(self, target)`.
    pub fn hom_dim(&self, target: &KronRep) -> Result<usize> {
        if self.field != target.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.hom_system(target).kernel(&self.field).len())
    }

    /// Basis of `Hom(self, target)` as pairs `(phi1, phi0)`.
    pub fn hom_basis(&self, target: &KronRep) -> Result<Vec<(Matrix, Matrix)>> {
        if self.field != target.field {
            return Err(Error::FieldMismatch);
        }
        let (a1, a0, b1, b0) = (self.d1, self.d0, target.d1, target.d0);
        let n0 = b0 * a0;
        Ok(self
            .hom_system(target)
            .kernel(&self.field)
            .into_iter()
            .map(|v| {
                let mut phi0 = Matrix::zeros(b0, a0);
                let mut phi1 = Matrix::zeros(b1, a1);
                for i in 0..b0 {
                    for l in 0..a0 {
                        phi0.set(i, l, v[i * a0 + l]);
                    }
                }
                for i in 0..b1 {
                    for l in 0..a1 {
                        phi1.set(i, l, v[n0 + i * a1 + l]);
                    }
                }
                (phi1, phi0)
            })
            .collect())
    }

    /// Linear system in the entries of `phi0` (first, row-major) and `phi1`.
    fn hom_system(&self, target: &KronRep) -> Matrix {
        let k = &self.field;
        let (a1, a0, b1, b0) = (self.d1, self.d0, target.d1, target.d0);
        let n0 = b0 * a0;
        let unknowns = n0 + b1 * a1;
        let mut sys = Matrix::zeros(2 * b0 * a1, unknowns);
        let mut row = 0;
        for (src, dst) in [(&self.f, &target.f), (&self.g, &target.g)] {
            for i in 0..b0 {
                for j in 0..a1 {
                    // (phi0 src)[i][j] - (dst phi1)[i][j] = 0
                    for l in 0..a0 {
                        let v = src.get(l, j);
                        if !v.is_zero() {
                            let col = i * a0 + l;
                            sys.set(row, col, k.add(sys.get(row, col), v));
                        }
                    }
                    for l in 0..b1 {
                        let v = dst.get(i, l);
                        if !v.is_zero() {
                            let col = n0 + l * a1 + j;
                            sys.set(row, col, k.sub(sys.get(row, col), v));
                        }
                    }
                    row += 1;
                }
            }
        }
        sys
    }

    pub fn decompose(&self) -> Decomposition {
        decompose(self)
    }

    /// Isomorphism by comparing Krull–Remak–Schmidt decompositions.
    pub fn is_isomorphic(&self, o: &KronRep) -> Result<bool> {
        if self.field != o.field {
            return Err(Error::FieldMismatch);
        }
        if self.dims() != o.dims() {
            return Ok(false);
        }
        Ok(self.decompose() == o.decompose())
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            field: self.field.to_string(),
            d1: self.d1,
            d0: self.d0,
            f: self.f.to_codes(),
            g: self.g.to_codes(),
        }
    }

    pub fn from_json(j: &RepJson) -> Result<Self> {
        let field: FieldCtx = j.field.parse()?;
        KronRep::from_codes(&field, j.d1, j.d0, &j.f, &j.g)
    }
}

/// On-disk representation: `{"field","d1","d0","F","G"}` with element codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub field: String,
    pub d1: usize,
    pub d0: usize,
    #[serde(rename = "F")]
    pub f: Vec<Vec<u32>>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<u32>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    #[test]
    fn make_examples() {
        let k5 = gf(5);
        let r = KronRep::from_codes(&k5, 1, 1, &[vec![1]], &[vec![4]]).unwrap();
        assert_eq!(r.dims(), (1, 1));
        let z = KronRep::from_codes(&gf(2), 0, 0, &[], &[]).unwrap();
        assert_eq!(z, KronRep::zero(&gf(2)));
        let bad = KronRep::new(&k5, Matrix::zeros(2, 1), Matrix::zeros(2, 2));
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn preprojective_matrices() {
        let k = gf(2);
        let p0 = KronRep::preprojective(&k, 0);
        assert_eq!(p0.dims(), (0, 1));
        let p1 = KronRep::preprojective(&k, 1);
        assert_eq!(p1.f().to_codes(), vec![vec![1], vec![0]]);
        assert_eq!(p1.g().to_codes(), vec![vec![0], vec![1]]);
        // Multiply each basis monomial x^(1-j) y^j of V_1 by x and y.
        let p2 = KronRep::preprojective(&k, 2);
        assert_eq!(p2.f().to_codes(), vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
        assert_eq!(p2.g().to_codes(), vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn preinjective_is_transpose() {
        let k = gf(2);
        assert_eq!(KronRep::preinjective(&k, 0).dims(), (1, 0));
        let i1 = KronRep::preinjective(&k, 1);
        assert_eq!(i1.f().to_codes(), vec![vec![1, 0]]);
        assert_eq!(i1.g().to_codes(), vec![vec![0, 1]]);
        let i2 = KronRep::preinjective(&k, 2);
        assert_eq!(i2.f(), &KronRep::preprojective(&k, 2).f().transpose());
        let p3 = KronRep::preprojective(&k, 3);
        assert_eq!(p3.dual().dual(), p3);
        assert_eq!(KronRep::zero(&k).dual(), KronRep::zero(&k));
    }

    #[test]
    fn regular_examples() {
        let k5 = gf(5);
        // label t - 4: f(1,t) = t - 4, i.e. the form y - 4x
        let f = BinForm::parse(&k5, "y-4x", None).unwrap();
        let r = KronRep::regular(&f).unwrap();
        assert_eq!((r.f().to_codes(), r.g().to_codes()), (vec![vec![1]], vec![vec![4]]));

        let k3 = gf(3);
        let r = KronRep::regular(&BinForm::parse(&k3, "y^2", None).unwrap()).unwrap();
        assert_eq!(r.f().to_codes(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(r.g().to_codes(), vec![vec![0, 0], vec![1, 0]]);

        assert!(matches!(KronRep::regular(&BinForm::zero(&k3, 2)), Err(Error::ZeroForm)));
    }

    #[test]
    fn direct_sum_shapes() {
        let k = gf(3);
        let a = KronRep::from_codes(&k, 1, 2, &[vec![1], vec![2]], &[vec![0], vec![1]]).unwrap();
        assert_eq!(a.direct_sum(&KronRep::zero(&k)).unwrap(), a);
        let b = KronRep::new(&k, Matrix::zeros(1, 3), Matrix::zeros(1, 3)).unwrap();
        assert_eq!(a.direct_sum(&b).unwrap().dims(), (4, 3));
        let p0 = KronRep::preprojective(&k, 0);
        let s = p0.direct_sum(&p0).unwrap();
        assert_eq!((s.f().rows(), s.f().cols()), (2, 0));
        assert!(matches!(a.direct_sum(&KronRep::zero(&gf(2))), Err(Error::FieldMismatch)));
    }

    #[test]
    fn hom_dimension_examples() {
        let k = gf(3);
        let p0 = KronRep::preprojective(&k, 0);
        let p1 = KronRep::preprojective(&k, 1);
        assert_eq!(p0.hom_dim(&p1).unwrap(), 2);
        assert_eq!(p1.hom_dim(&p0).unwrap(), 0);
        let x = KronRep::from_codes(&k, 1, 1, &[vec![1]], &[vec![2]]).unwrap();
        assert_eq!(x.hom_dim(&x).unwrap(), 1);
        for (phi1, phi0) in p0.hom_basis(&p1).unwrap() {
            assert!(p0.is_intertwiner(&p1, &phi1, &phi0));
        }
    }

    #[test]
    fn hom_basis_solves_intertwiner_equations() {
        let k = gf(2);
        let a = KronRep::preprojective(&k, 2).direct_sum(&KronRep::preinjective(&k, 1)).unwrap();
        let b = KronRep::preprojective(&k, 3);
        let basis = a.hom_basis(&b).unwrap();
        assert_eq!(basis.len(), a.hom_dim(&b).unwrap());
        for (phi1, phi0) in basis {
            assert!(a.is_intertwiner(&b, &phi1, &phi0));
        }
    }

    #[test]
    fn json_round_trip() {
        let k = gf(4);
        let r = KronRep::preinjective(&k, 2);
        let j = serde_json::to_string(&r.to_json()).unwrap();
        assert!(j.contains("\"F\""));
        let back: RepJson = serde_json::from_str(&j).unwrap();
        assert_eq!(KronRep::from_json(&back).unwrap(), r);
    }
}
