//! Truncated path algebras `A[Q]` and tensor algebras `T_R(B)` for
//! `R = A^(Q0)`, `B = A^(Q1)`, over `GF(q)` or `Z/m`.
//!
//! Paths compose left to right: `ab` is `a` followed by `b`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::quiver::Quiver;

mod tensor;

pub use tensor::tensor_algebra;

/// Commutative coefficient ring; elements are integer codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingCtx {
    Field(FieldCtx),
    Zmod(u32),
}

impl RingCtx {
    pub fn zmod(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("Z/{m} needs m >= 2")));
        }
        Ok(RingCtx::Zmod(m))
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            RingCtx::Field(k) => k.add(k.elem(a).unwrap(), k.elem(b).unwrap()).code(),
            RingCtx::Zmod(m) => ((a as u64 + b as u64) % *m as u64) as u32,
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            RingCtx::Field(k) => k.mul(k.elem(a).unwrap(), k.elem(b).unwrap()).code(),
            RingCtx::Zmod(m) => ((a as u64 * b as u64) % *m as u64) as u32,
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        match self {
            RingCtx::Field(k) => k.neg(k.elem(a).unwrap()).code(),
            RingCtx::Zmod(m) => (*m - a % *m) % *m,
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            RingCtx::Field(k) => k.order(),
            RingCtx::Zmod(m) => *m,
        }
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingCtx::Field(k) => write!(f, "{k}"),
            RingCtx::Zmod(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for RingCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(m) = t.strip_prefix("Z/") {
            let m = m.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad ring {s:?}")))?;
            return RingCtx::zmod(m);
        }
        Ok(RingCtx::Field(t.parse()?))
    }
}

/// Basis label shared by both constructions: an idempotent `e_v` in degree
/// 0, otherwise a sequence of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Vertex(usize),
    Arrows(Vec<usize>),
}

impl Word {
    pub fn degree(&self) -> usize {
        match self {
            Word::Vertex(_) => 0,
            Word::Arrows(a) => a.len(),
        }
    }
}

/// `(degree, index within the degree)`.
pub type BasisId = (usize, usize);
/// Sparse element: basis id to nonzero coefficient code.
pub type Element = BTreeMap<BasisId, u32>;

/// A graded algebra truncated at `max_len`, given by structure constants on
/// basis pairs whose degrees add up to at most `max_len`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub(crate) ring: RingCtx,
    pub(crate) max_len: usize,
    pub(crate) basis: Vec<Vec<Word>>,
    pub(crate) products: HashMap<(BasisId, BasisId), Element>,
    pub(crate) unit: Element,
}

impl GradedAlgebra {
    pub fn ring(&self) -> &RingCtx {
        &self.ring
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, degree: usize) -> &[Word] {
        &self.basis[degree]
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn basis_element(&self, id: BasisId) -> Element {
        BTreeMap::from([(id, 1)])
    }

    pub fn mul_basis(&self, a: BasisId, b: BasisId) -> Option<&Element> {
        self.products.get(&(a, b))
    }

    /// Bilinear extension; `None` if some product leaves the window.
    pub fn mul(&self, x: &Element, y: &Element) -> Option<Element> {
        let r = &self.ring;
        let mut out = Element::new();
        for (&a, &ca) in x {
            for (&b, &cb) in y {
                let c = r.mul(ca, cb);
                if c == 0 {
                    continue;
                }
                for (&z, &cz) in self.products.get(&(a, b))? {
                    let e = out.entry(z).or_insert(0);
                    *e = r.add(*e, r.mul(c, cz));
                }
            }
        }
        out.retain(|_, c| *c != 0);
        Some(out)
    }

    fn ids(&self) -> Vec<BasisId> {
        self.basis.iter().enumerate().flat_map(|(d, b)| (0..b.len()).map(move |i| (d, i))).collect()
    }

    /// `(xy)z = x(yz)` on every basis triple inside the window.
    pub fn check_associative(&self) -> Result<usize> {
        let ids = self.ids();
        let mut checked = 0;
        for &a in &ids {
            for &b in &ids {
                if a.0 + b.0 > self.max_len {
                    continue;
                }
                let ab = self.mul(&self.basis_element(a), &self.basis_element(b)).unwrap();
                for &c in &ids {
                    if a.0 + b.0 + c.0 > self.max_len {
                        continue;
                    }
                    let bc = self.mul(&self.basis_element(b), &self.basis_element(c)).unwrap();
                    let left = self.mul(&ab, &self.basis_element(c)).unwrap();
                    let right = self.mul(&self.basis_element(a), &bc).unwrap();
                    if left != right {
                        return Err(Error::MismatchFound(format!("associativity fails on {a:?} {b:?} {c:?}")));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }

    /// `1 x = x = x 1` on every basis element.
    pub fn check_unit(&self) -> Result<()> {
        for a in self.ids() {
            let x = self.basis_element(a);
            if self.mul(&self.unit, &x).as_ref() != Some(&x) || self.mul(&x, &self.unit).as_ref() != Some(&x) {
                return Err(Error::MismatchFound(format!("unit law fails on {a:?}")));
            }
        }
        Ok(())
    }

    pub(crate) fn index(&self) -> HashMap<&Word, BasisId> {
        self.basis
            .iter()
            .enumerate()
            .flat_map(|(d, b)| b.iter().enumerate().map(move |(i, w)| (w, (d, i))))
            .collect()
    }
}

/// Paths of length `n`: the trivial paths for `n = 0`, otherwise arrow
/// sequences with `t(a_i) = s(a_(i+1))`, in lexicographic order of arrow
/// indices.
pub fn enumerate_paths(q: &Quiver, n: usize) -> Vec<Word> {
    if n == 0 {
        return (0..q.vertex_count()).map(Word::Vertex).collect();
    }
    let mut out_arrows = vec![Vec::new(); q.vertex_count()];
    for a in 0..q.arrow_count() {
        out_arrows[q.src(a)].push(a);
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(n);
    fn dfs(q: &Quiver, outs: &[Vec<usize>], n: usize, stack: &mut Vec<usize>, out: &mut Vec<Word>) {
        if stack.len() == n {
            out.push(Word::Arrows(stack.clone()));
            return;
        }
        let next: Vec<usize> = match stack.last() {
            Some(&a) => outs[q.dst(a)].clone(),
            None => (0..q.arrow_count()).collect(),
        };
        for b in next {
            stack.push(b);
            dfs(q, outs, n, stack, out);
            stack.pop();
        }
    }
    dfs(q, &out_arrows, n, &mut stack, &mut out);
    out
}

fn endpoints(q: &Quiver, w: &Word) -> (usize, usize) {
    match w {
        Word::Vertex(v) => (*v, *v),
        Word::Arrows(a) => (q.src(a[0]), q.dst(*a.last().unwrap())),
    }
}

/// `A[Q]` truncated at `max_len`, with concatenation as product.
pub fn path_algebra(q: &Quiver, ring: &RingCtx, max_len: usize) -> GradedAlgebra {
    let basis: Vec<Vec<Word>> = (0..=max_len).map(|n| enumerate_paths(q, n)).collect();
    let mut alg = GradedAlgebra {
        ring: ring.clone(),
        max_len,
        basis,
        products: HashMap::new(),
        unit: Element::new(),
    };
    let index: HashMap<Word, BasisId> = alg.index().into_iter().map(|(w, id)| (w.clone(), id)).collect();
    for (x, &a) in &index {
        for (y, &b) in &index {
            if a.0 + b.0 > max_len {
                continue;
            }
            let (_, tx) = endpoints(q, x);
            let (sy, _) = endpoints(q, y);
            let prod = if tx != sy {
                None
            } else {
                Some(match (x, y) {
                    (Word::Vertex(_), _) => y.clone(),
                    (_, Word::Vertex(_)) => x.clone(),
                    (Word::Arrows(p), Word::Arrows(r)) => Word::Arrows(p.iter().chain(r).copied().collect()),
                })
            };
            alg.products.insert((a, b), prod.map(|w| BTreeMap::from([(index[&w], 1)])).unwrap_or_default());
        }
    }
    alg.unit = (0..q.vertex_count()).map(|v| ((0, v), 1)).collect();
    alg
}

#[derive(Clone, Debug, Serialize)]
pub struct PathTensorReport {
    pub ring: String,
    pub max_len: usize,
    pub dims: Vec<usize>,
    pub products_checked: usize,
    pub associativity_triples: usize,
}

/// Builds both algebras and compares them through `path <-> tuple`.
pub fn compare_path_tensor(q: &Quiver, ring: &RingCtx, max_len: usize) -> Result<PathTensorReport> {
    let pa = path_algebra(q, ring, max_len);
    let ta = tensor_algebra(q, ring, max_len);
    if pa.dims() != ta.dims() {
        return Err(Error::MismatchFound(format!("graded dimensions {:?} vs {:?}", pa.dims(), ta.dims())));
    }
    let to_tensor: HashMap<BasisId, BasisId> = {
        let ti = ta.index();
        pa.index()
            .into_iter()
            .map(|(w, id)| ti.get(w).map(|&t| (id, t)).ok_or_else(|| Error::MismatchFound(format!("{w:?} has no tensor"))))
            .collect::<Result<_>>()?
    };
    let map = |e: &Element| -> Element { e.iter().map(|(k, &c)| (to_tensor[k], c)).collect() };
    let mut checked = 0;
    for (&(a, b), e) in &pa.products {
        let t = ta
            .mul_basis(to_tensor[&a], to_tensor[&b])
            .ok_or_else(|| Error::MismatchFound(format!("missing tensor product {a:?} {b:?}")))?;
        if &map(e) != t {
            return Err(Error::MismatchFound(format!("products differ on {a:?} {b:?}")));
        }
        checked += 1;
    }
    if checked != ta.products.len() || map(&pa.unit) != ta.unit {
        return Err(Error::MismatchFound("tables or units differ".into()));
    }
    let triples = pa.check_associative()?;
    ta.check_associative()?;
    pa.check_unit()?;
    ta.check_unit()?;
    Ok(PathTensorReport {
        ring: ring.to_string(),
        max_len,
        dims: pa.dims(),
        products_checked: checked,
        associativity_triples: triples,
    })
}
