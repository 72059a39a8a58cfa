//! `T_R(B)` for the ring representation `R = A^(Q0) => B = A^(Q1)` given by
//! pulling functions back along `s` and `t`.
//!
//! `R` splits into the idempotents `e_v`, and `B` becomes an `R`-bimodule
//! with `e_v . e_a = s*(e_v)(a) e_a` and `e_a . e_v = t*(e_v)(a) e_a`. The
//! balancing relations `(x e_v) (x) y = x (x) (e_v y)` are imposed degree by
//! degree on the free module of arrow tuples.

use std::collections::{BTreeMap, HashMap};

use super::{BasisId, Element, GradedAlgebra, RingCtx, Word};
use crate::quiver::Quiver;

/// The ring maps `s*`, `t*: A^(Q0) -> A^(Q1)` on idempotents, as 0/1
/// coefficient tables indexed `[v][a]`.
struct Pullbacks {
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
}

impl Pullbacks {
    fn new(q: &Quiver) -> Self {
        let pull = |along: &dyn Fn(usize) -> usize| {
            (0..q.vertex_count())
                .map(|v| (0..q.arrow_count()).map(|a| u32::from(along(a) == v)).collect())
                .collect()
        };
        Pullbacks { left: pull(&|a| q.src(a)), right: pull(&|a| q.dst(a)) }
    }

    /// Coefficient of `x (x) y` in the relation for `e_v` between arrows
    /// `x` and `y`.
    fn relation(&self, ring: &RingCtx, x: usize, y: usize, v: usize) -> u32 {
        ring.add(self.right[v][x], ring.neg(self.left[v][y]))
    }

    /// Whether the balancing relations annihilate `x (x) y`.
    fn kills(&self, ring: &RingCtx, x: usize, y: usize) -> bool {
        (0..self.left.len()).any(|v| {
            let c = self.relation(ring, x, y, v);
            // every relation is +-1 times a single tuple
            assert!(c == 0 || c == 1 || c == ring.neg(1), "relation coefficient {c} is not a unit");
            c != 0
        })
    }
}

pub fn tensor_algebra(q: &Quiver, ring: &RingCtx, max_len: usize) -> GradedAlgebra {
    let pullbacks = Pullbacks::new(q);
    let pb = &pullbacks;
    let (nv, na) = (q.vertex_count(), q.arrow_count());

    let mut basis: Vec<Vec<Word>> = vec![(0..nv).map(Word::Vertex).collect()];
    let mut prev: Vec<Vec<usize>> = vec![Vec::new()];
    for n in 1..=max_len {
        let next: Vec<Vec<usize>> = prev
            .iter()
            .flat_map(|w| {
                (0..na).filter_map(move |a| match w.last() {
                    Some(&x) if pb.kills(ring, x, a) => None,
                    _ => Some(w.iter().copied().chain([a]).collect()),
                })
            })
            .collect();
        debug_assert!(next.iter().all(|w| w.len() == n));
        basis.push(next.iter().cloned().map(Word::Arrows).collect());
        prev = next;
    }

    let mut alg = GradedAlgebra { ring: ring.clone(), max_len, basis, products: HashMap::new(), unit: Element::new() };
    let index: HashMap<Word, BasisId> = alg.index().into_iter().map(|(w, id)| (w.clone(), id)).collect();
    let single = |id: BasisId, c: u32| -> Element { BTreeMap::from([(id, c)]).into_iter().filter(|(_, c)| *c != 0).collect() };

    for (x, &a) in &index {
        for (y, &b) in &index {
            if a.0 + b.0 > max_len {
                continue;
            }
            let prod = match (x, y) {
                // pointwise product of functions on Q0
                (Word::Vertex(u), Word::Vertex(v)) => single(a, u32::from(u == v)),
                (Word::Vertex(v), Word::Arrows(t)) => single(b, pb.left[*v][t[0]]),
                (Word::Arrows(t), Word::Vertex(v)) => single(a, pb.right[*v][*t.last().unwrap()]),
                (Word::Arrows(s), Word::Arrows(t)) => {
                    if pb.kills(ring, *s.last().unwrap(), t[0]) {
                        Element::new()
                    } else {
                        let w = Word::Arrows(s.iter().chain(t).copied().collect());
                        single(index[&w], 1)
                    }
                }
            };
            alg.products.insert((a, b), prod);
        }
    }
    // the constant function 1 on Q0
    alg.unit = (0..nv).map(|v| ((0, v), 1)).collect();
    alg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::gen::{cyclic, kronecker};

    #[test]
    fn degree_dimensions() {
        let gf2: RingCtx = "GF(2)".parse().unwrap();
        assert_eq!(tensor_algebra(&kronecker(), &gf2, 2).dims(), vec![2, 2, 0]);
        let gf3: RingCtx = "GF(3)".parse().unwrap();
        assert_eq!(tensor_algebra(&cyclic(2).unwrap(), &gf3, 4).dims(), vec![2, 2, 2, 2, 2]);
        let pt = Quiver::from_labels(vec!["v".into()], vec![]);
        assert_eq!(tensor_algebra(&pt, &gf3, 3).dims(), vec![1, 0, 0, 0]);
    }
}
