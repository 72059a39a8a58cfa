//! Krull–Remak–Schmidt decomposition through the Kronecker canonical form
//! of the pencil `t F - G`.
//!
//! * Minimal indices come from kernel dimensions of the convolution
//!   matrices that encode polynomial kernel vectors of bounded degree. A
//!   right (column) index `e` is the summand `I(e)`, a left (row) index is
//!   `P(e)`.
//! * Finite elementary divisors `u^d` are read from the Smith form of the
//!   whole pencil (singular blocks only contribute unit invariant factors)
//!   and give `R(u^d)`.
//! * Elementary divisors at infinity are the powers of `s` in the Smith form
//!   of `F - s G`; `s^d` gives `R(x^d)`.

use std::fmt;

use crate::binforms::{univ_factor, FormLabel};
use crate::gf::FieldCtx;
use crate::kronrep::matrix::Matrix;
use crate::kronrep::smith::{smith_normal_form, PolyMatrix};
use crate::kronrep::KronRep;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indecomposable {
    /// Preprojective `P(n)`, dimension vector `(n, n+1)`.
    Pre(usize),
    /// Preinjective `I(n)`, dimension vector `(n+1, n)`.
    Inj(usize),
    /// Regular `R(label^d)`.
    Reg(FormLabel, usize),
}

impl Indecomposable {
    /// `(d1, d0)`.
    pub fn dims(&self) -> (usize, usize) {
        match self {
            Indecomposable::Pre(n) => (*n, n + 1),
            Indecomposable::Inj(n) => (n + 1, *n),
            Indecomposable::Reg(label, d) => (label.degree() * d, label.degree() * d),
        }
    }

    pub fn build(&self, field: &FieldCtx) -> KronRep {
        match self {
            Indecomposable::Pre(n) => KronRep::preprojective(field, *n),
            Indecomposable::Inj(n) => KronRep::preinjective(field, *n),
            Indecomposable::Reg(label, d) => {
                KronRep::regular(&label.power_form(field, *d)).expect("nonzero form of positive degree")
            }
        }
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indecomposable::Pre(n) => write!(f, "P({n})"),
            Indecomposable::Inj(n) => write!(f, "I({n})"),
            Indecomposable::Reg(label, d) => write!(f, "R({})", label.power_string(*d)),
        }
    }
}

/// A multiset of indecomposables, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    summands: Vec<Indecomposable>,
}

impl Decomposition {
    pub fn new(mut summands: Vec<Indecomposable>) -> Self {
        summands.sort();
        Decomposition { summands }
    }

    pub fn summands(&self) -> &[Indecomposable] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Total `(d1, d0)`.
    pub fn dims(&self) -> (usize, usize) {
        self.summands.iter().fold((0, 0), |(a, b), s| {
            let (x, y) = s.dims();
            (a + x, b + y)
        })
    }

    /// Multiset union.
    pub fn union(&self, o: &Decomposition) -> Decomposition {
        Decomposition::new(self.summands.iter().chain(&o.summands).cloned().collect())
    }

    /// Direct sum of the constructed indecomposables, in sorted order.
    pub fn build(&self, field: &FieldCtx) -> KronRep {
        self.summands
            .iter()
            .fold(KronRep::zero(field), |acc, s| acc.direct_sum(&s.build(field)).expect("same field"))
    }

    /// Joins the summands with `sep`; the empty decomposition renders as `0`.
    pub fn join(&self, sep: &str) -> String {
        if self.summands.is_empty() {
            return "0".to_string();
        }
        self.summands.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.join(" + "))
    }
}

pub fn decompose(m: &KronRep) -> Decomposition {
    let k = m.field();
    let mut out = Vec::new();

    let smith = smith_normal_form(&m.pencil(), k);
    let rank = smith.rank();
    for d in smith.invariant_factors.iter().filter(|d| d.deg0() > 0) {
        for (u, mult) in univ_factor(d, k).expect("invariant factors are monic") {
            out.push(Indecomposable::Reg(FormLabel::Poly(u), mult));
        }
    }

    let reversed = reversed_pencil(m.f(), m.g(), k);
    for d in smith_normal_form(&reversed, k).invariant_factors {
        if !d.is_zero() && d.valuation() > 0 {
            out.push(Indecomposable::Reg(FormLabel::X, d.valuation()));
        }
    }

    for e in minimal_indices(m.f(), m.g(), k, m.d1() - rank) {
        out.push(Indecomposable::Inj(e));
    }
    let (ft, gt) = (m.f().transpose(), m.g().transpose());
    for e in minimal_indices(&ft, &gt, k, m.d0() - rank) {
        out.push(Indecomposable::Pre(e));
    }

    let dec = Decomposition::new(out);
    debug_assert_eq!(dec.dims(), m.dims(), "dimension bookkeeping");
    dec
}

/// `F - s G`.
fn reversed_pencil(f: &Matrix, g: &Matrix, k: &FieldCtx) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(f.rows(), f.cols());
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            m.set(i, j, Poly::new(vec![f.get(i, j), k.neg(g.get(i, j))]));
        }
    }
    m
}

/// Right minimal indices of `t F - G`, given how many there are.
///
/// `N_k`, the dimension of kernel vectors of degree at most `k`, equals
/// `sum_i max(0, k - e_i + 1)`, so the second difference of `N` counts the
/// indices equal to `k`.
fn minimal_indices(f: &Matrix, g: &Matrix, k: &FieldCtx, count: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let bound = f.rows() + f.cols();
    let (mut n1, mut n2) = (0usize, 0usize);
    let mut deg = 0;
    while out.len() < count {
        assert!(deg <= bound, "minimal index bound exceeded");
        let n = convolution_matrix(f, g, deg, k).kernel_dim(k);
        let c = n + n2 - 2 * n1;
        out.extend(std::iter::repeat_n(deg, c));
        n2 = n1;
        n1 = n;
        deg += 1;
    }
    out
}

/// Matrix of `(v_0, ..., v_deg) -> coefficients of (t F - G) sum v_i t^i`.
fn convolution_matrix(f: &Matrix, g: &Matrix, deg: usize, k: &FieldCtx) -> Matrix {
    let (d0, d1) = (f.rows(), f.cols());
    let mut t = Matrix::zeros((deg + 2) * d0, (deg + 1) * d1);
    for blk in 0..=deg {
        for i in 0..d0 {
            for j in 0..d1 {
                // coefficient of t^blk receives -G v_blk; t^(blk+1) receives F v_blk
                let gv = g.get(i, j);
                if !gv.is_zero() {
                    t.set(blk * d0 + i, blk * d1 + j, k.neg(gv));
                }
                t.set((blk + 1) * d0 + i, blk * d1 + j, f.get(i, j));
            }
        }
    }
    t
}
