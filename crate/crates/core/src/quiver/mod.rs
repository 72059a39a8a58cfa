//! Finite quivers `(Q0, Q1, s, t)`, i.e. set-valued Kronecker representations.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod classify;
pub mod gen;
pub mod io;
pub mod iso;

pub use classify::{classify_component, st_bijective, FamilyTag, Orientation};
pub use iso::isomorphism;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub label: String,
}

/// Vertices and arrows are kept in insertion order; `s` and `t` are stored
/// as vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    s: Vec<usize>,
    t: Vec<usize>,
}

/// Vertex and arrow maps, by index, between two quivers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuiverMorphism {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

/// Vertex and arrow indices of one weakly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl Quiver {
    pub fn new(vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::DuplicateId(v.id.clone()));
            }
        }
        let mut seen = HashMap::with_capacity(arrows.len());
        let (mut s, mut t) = (Vec::with_capacity(arrows.len()), Vec::with_capacity(arrows.len()));
        for a in &arrows {
            if seen.insert(a.id.as_str(), ()).is_some() {
                return Err(Error::DuplicateId(a.id.clone()));
            }
            let (Some(&i), Some(&j)) = (index.get(&a.src), index.get(&a.dst)) else {
                return Err(Error::DanglingArrow(a.id.clone()));
            };
            s.push(i);
            t.push(j);
        }
        Ok(Quiver { vertices, arrows, s, t })
    }

    /// Builds from labels and index incidence; ids are the labels.
    pub fn from_labels(vertex_labels: Vec<String>, arrows: Vec<(usize, usize, String)>) -> Self {
        let vertices: Vec<Vertex> =
            vertex_labels.into_iter().map(|l| Vertex { id: l.clone(), label: l }).collect();
        Self::from_parts(vertices, arrows.into_iter().map(|(s, t, l)| (s, t, l.clone(), l)).collect())
    }

    /// `(src, dst, id, label)` per arrow. Ids are trusted to be unique.
    pub(crate) fn from_parts(vertices: Vec<Vertex>, arrows: Vec<(usize, usize, String, String)>) -> Self {
        let mut q = Quiver { vertices, ..Default::default() };
        for (s, t, id, label) in arrows {
            assert!(s < q.vertices.len() && t < q.vertices.len(), "arrow endpoint out of range");
            q.arrows.push(Arrow {
                id,
                src: q.vertices[s].id.clone(),
                dst: q.vertices[t].id.clone(),
                label,
            });
            q.s.push(s);
            q.t.push(t);
        }
        q
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn src(&self, a: usize) -> usize {
        self.s[a]
    }

    pub fn dst(&self, a: usize) -> usize {
        self.t[a]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        self.s.iter().for_each(|&v| d[v] += 1);
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        self.t.iter().for_each(|&v| d[v] += 1);
        d
    }

    /// Loop arrows, by index.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.s[a] == self.t[a]).collect()
    }

    /// Weakly connected components, ordered by their smallest vertex id.
    pub fn components(&self) -> Vec<Component> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..self.arrows.len() {
            let (x, y) = (find(&mut parent, self.s[a]), find(&mut parent, self.t[a]));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut comps: Vec<Component> = Vec::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let c = *slot.entry(r).or_insert_with(|| {
                comps.push(Component { vertices: Vec::new(), arrows: Vec::new() });
                comps.len() - 1
            });
            comps[c].vertices.push(v);
        }
        for a in 0..self.arrows.len() {
            let r = find(&mut parent, self.s[a]);
            comps[slot[&r]].arrows.push(a);
        }
        let key = |c: &Component| {
            c.vertices.iter().map(|&v| self.vertices[v].id.as_str()).min_by(|a, b| natural_cmp(a, b)).unwrap()
        };
        comps.sort_by(|a, b| natural_cmp(key(a), key(b)));
        comps
    }

    /// The full subquiver on a component, keeping ids and labels.
    pub fn subquiver(&self, c: &Component) -> Quiver {
        let pos: HashMap<usize, usize> = c.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let vertices = c.vertices.iter().map(|&v| self.vertices[v].clone()).collect();
        let arrows = c
            .arrows
            .iter()
            .map(|&a| (pos[&self.s[a]], pos[&self.t[a]], self.arrows[a].id.clone(), self.arrows[a].label.clone()))
            .collect();
        Quiver::from_parts(vertices, arrows)
    }

    pub fn component_quivers(&self) -> Vec<Quiver> {
        self.components().iter().map(|c| self.subquiver(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Same vertices, every arrow turned around.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { src: a.dst.clone(), dst: a.src.clone(), ..a.clone() })
                .collect(),
            s: self.t.clone(),
            t: self.s.clone(),
        }
    }

    /// Ids are prefixed with the position of their summand, `"i:id"`.
    pub fn disjoint_union(parts: &[Quiver]) -> Quiver {
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        for (i, q) in parts.iter().enumerate() {
            let off = vertices.len();
            vertices.extend(q.vertices.iter().map(|v| Vertex { id: format!("{i}:{}", v.id), label: v.label.clone() }));
            arrows.extend(
                q.arrows
                    .iter()
                    .enumerate()
                    .map(|(a, x)| (off + q.s[a], off + q.t[a], format!("{i}:{}", x.id), x.label.clone())),
            );
        }
        Quiver::from_parts(vertices, arrows)
    }

    /// Categorical product: vertex and arrow pairs, `a`-major, with `s` and
    /// `t` acting componentwise.
    pub fn product(a: &Quiver, b: &Quiver) -> Quiver {
        let pair = |x: &str, y: &str| format!("({x},{y})");
        let mut vertices = Vec::with_capacity(a.vertex_count() * b.vertex_count());
        for u in &a.vertices {
            for v in &b.vertices {
                vertices.push(Vertex { id: pair(&u.id, &v.id), label: pair(&u.label, &v.label) });
            }
        }
        let nb = b.vertex_count();
        let mut arrows = Vec::with_capacity(a.arrow_count() * b.arrow_count());
        for (i, x) in a.arrows.iter().enumerate() {
            for (j, y) in b.arrows.iter().enumerate() {
                arrows.push((
                    a.s[i] * nb + b.s[j],
                    a.t[i] * nb + b.t[j],
                    pair(&x.id, &y.id),
                    pair(&x.label, &y.label),
                ));
            }
        }
        Quiver::from_parts(vertices, arrows)
    }

    /// Number of arrows `u -> v` for every ordered pair that has one.
    pub(crate) fn multiplicities(&self) -> HashMap<(usize, usize), usize> {
        let mut m = HashMap::new();
        for a in 0..self.arrows.len() {
            *m.entry((self.s[a], self.t[a])).or_insert(0) += 1;
        }
        m
    }
}

impl QuiverMorphism {
    pub fn identity(q: &Quiver) -> Self {
        QuiverMorphism { vertex_map: (0..q.vertex_count()).collect(), arrow_map: (0..q.arrow_count()).collect() }
    }

    /// `s(phi(a)) = phi(s(a))` and `t(phi(a)) = phi(t(a))` for every arrow.
    pub fn commutes(&self, src: &Quiver, dst: &Quiver) -> bool {
        self.vertex_map.len() == src.vertex_count()
            && self.arrow_map.len() == src.arrow_count()
            && self.vertex_map.iter().all(|&v| v < dst.vertex_count())
            && self.arrow_map.iter().enumerate().all(|(a, &b)| {
                b < dst.arrow_count()
                    && dst.src(b) == self.vertex_map[src.src(a)]
                    && dst.dst(b) == self.vertex_map[src.dst(a)]
            })
    }

    pub fn is_injective(&self) -> bool {
        fn distinct(xs: &[usize]) -> bool {
            let mut v = xs.to_vec();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        }
        distinct(&self.vertex_map) && distinct(&self.arrow_map)
    }

    pub fn is_isomorphism(&self, src: &Quiver, dst: &Quiver) -> bool {
        self.commutes(src, dst)
            && self.is_injective()
            && src.vertex_count() == dst.vertex_count()
            && src.arrow_count() == dst.arrow_count()
    }

    /// `self` followed by `o`.
    pub fn then(&self, o: &QuiverMorphism) -> QuiverMorphism {
        QuiverMorphism {
            vertex_map: self.vertex_map.iter().map(|&v| o.vertex_map[v]).collect(),
            arrow_map: self.arrow_map.iter().map(|&a| o.arrow_map[a]).collect(),
        }
    }

    pub fn inverse(&self) -> QuiverMorphism {
        let inv = |m: &[usize]| {
            let mut out = vec![0; m.len()];
            m.iter().enumerate().for_each(|(i, &j)| out[j] = i);
            out
        };
        QuiverMorphism { vertex_map: inv(&self.vertex_map), arrow_map: inv(&self.arrow_map) }
    }
}

/// `"(a,b,c)"`; one-element tuples print bare and the empty tuple as `"()"`.
pub fn tuple_label<S: AsRef<str>>(parts: &[S]) -> String {
    match parts {
        [one] => one.as_ref().to_string(),
        _ => format!("({})", parts.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(",")),
    }
}

/// Compares digit runs numerically, everything else bytewise.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(c), Some(d)) if c.is_ascii_digit() && d.is_ascii_digit() => {
                let i = x.iter().take_while(|c| c.is_ascii_digit()).count();
                let j = y.iter().take_while(|c| c.is_ascii_digit()).count();
                let (dx, dy) = (&x[..i], &y[..j]);
                let tx = &dx[dx.iter().take_while(|&&c| c == b'0').count()..];
                let ty = &dy[dy.iter().take_while(|&&c| c == b'0').count()..];
                let ord = tx.len().cmp(&ty.len()).then_with(|| tx.cmp(ty)).then_with(|| i.cmp(&j));
                if ord != Ordering::Equal {
                    return ord;
                }
                x = &x[i..];
                y = &y[j..];
            }
            (Some(c), Some(d)) => {
                if c != d {
                    return c.cmp(d);
                }
                x = &x[1..];
                y = &y[1..];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::gen::{cyclic, linear};

    fn v(id: &str) -> Vertex {
        Vertex { id: id.into(), label: id.into() }
    }

    fn a(id: &str, s: &str, t: &str) -> Arrow {
        Arrow { id: id.into(), src: s.into(), dst: t.into(), label: id.into() }
    }

    #[test]
    fn make_examples() {
        let c1 = Quiver::new(vec![v("v")], vec![a("a", "v", "v")]).unwrap();
        assert_eq!(c1.loops(), vec![0]);
        let empty = Quiver::new(vec![], vec![]).unwrap();
        assert_eq!(empty.components().len(), 0);
        assert!(matches!(Quiver::new(vec![v("v")], vec![a("a", "w", "v")]), Err(Error::DanglingArrow(_))));
        assert!(matches!(Quiver::new(vec![v("v"), v("v")], vec![]), Err(Error::DuplicateId(_))));
    }

    #[test]
    fn components_and_union() {
        let u = Quiver::disjoint_union(&[linear(3).unwrap(), cyclic(1).unwrap()]);
        assert_eq!(u.components().len(), 2);
        let u = Quiver::disjoint_union(&[linear(2).unwrap(), cyclic(3).unwrap(), Quiver::default()]);
        assert_eq!(u.components().len(), 2);
        assert_eq!((u.vertex_count(), u.arrow_count()), (5, 4));
    }

    #[test]
    fn product_examples() {
        let a2 = linear(2).unwrap();
        let p = Quiver::product(&a2, &a2);
        assert_eq!((p.vertex_count(), p.arrow_count(), p.components().len()), (4, 1, 3));
        assert_eq!((p.arrows()[0].src.as_str(), p.arrows()[0].dst.as_str()), ("(1,1)", "(2,2)"));
        let pt = Quiver::from_labels(vec!["*".into()], vec![]);
        let p = Quiver::product(&cyclic(3).unwrap(), &pt);
        assert_eq!((p.vertex_count(), p.arrow_count()), (3, 0));
        let c1 = cyclic(1).unwrap();
        assert!(isomorphism(&Quiver::product(&c1, &c1), &c1).is_some());
    }

    #[test]
    fn natural_order() {
        let mut ids = vec!["v10", "v2", "v1", "a", "(1,10)", "(1,9)"];
        ids.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(ids, vec!["(1,9)", "(1,10)", "a", "v1", "v2", "v10"]);
        assert_eq!(tuple_label(&["3"]), "3");
        assert_eq!(tuple_label::<&str>(&[]), "()");
        assert_eq!(tuple_label(&["0", "1"]), "(0,1)");
    }

    mod product_laws {
        use super::*;
        use crate::quiver::gen::random;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        fn small(seed: u64) -> Quiver {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let nv = 1 + (seed % 3) as usize;
            random(&mut rng, nv, (seed / 3 % 4) as usize)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn commutative_and_associative(x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
                let (a, b, c) = (small(x), small(y), small(z));
                prop_assert!(isomorphism(&Quiver::product(&a, &b), &Quiver::product(&b, &a)).is_some());
                let left = Quiver::product(&Quiver::product(&a, &b), &c);
                let right = Quiver::product(&a, &Quiver::product(&b, &c));
                prop_assert!(isomorphism(&left, &right).is_some());
            }
        }
    }
}
