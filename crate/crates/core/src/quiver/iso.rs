//! Quiver isomorphism by colour refinement and backtracking.
//!
//! Both quivers are refined together so colours are comparable. The search
//! visits vertices of `a` in BFS order and only tries targets of the same
//! colour whose arrow multiplicities to already mapped vertices agree.

use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{Quiver, QuiverMorphism};

pub fn isomorphism(a: &Quiver, b: &Quiver) -> Option<QuiverMorphism> {
    if a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count() {
        return None;
    }
    let (ca, cb) = refine(a, b);
    let hist = |c: &[usize]| {
        let mut h = BTreeMap::new();
        c.iter().for_each(|&x| *h.entry(x).or_insert(0usize) += 1);
        h
    };
    if hist(&ca) != hist(&cb) {
        return None;
    }
    let vmap = Search::new(a, b, &ca, &cb).run()?;
    Some(QuiverMorphism { arrow_map: match_arrows(a, b, &vmap)?, vertex_map: vmap })
}

fn adjacency(q: &Quiver) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = q.vertex_count();
    let (mut out, mut inc) = (vec![Vec::new(); n], vec![Vec::new(); n]);
    for x in 0..q.arrow_count() {
        out[q.src(x)].push(q.dst(x));
        inc[q.dst(x)].push(q.src(x));
    }
    (out, inc)
}

fn initial_colours(q: &Quiver) -> Vec<(usize, usize, usize, usize)> {
    let (od, id) = (q.out_degrees(), q.in_degrees());
    let mut loops = vec![0; q.vertex_count()];
    q.loops().into_iter().for_each(|x| loops[q.src(x)] += 1);
    let mut size = vec![0; q.vertex_count()];
    for c in q.components() {
        c.vertices.iter().for_each(|&v| size[v] = c.vertices.len());
    }
    (0..q.vertex_count()).map(|v| (od[v], id[v], loops[v], size[v])).collect()
}

/// Stable colouring of both quivers with a shared palette.
fn refine(a: &Quiver, b: &Quiver) -> (Vec<usize>, Vec<usize>) {
    let na = a.vertex_count();
    let adj: Vec<_> = [a, b].iter().map(|q| adjacency(q)).collect();
    let init: Vec<_> = initial_colours(a).into_iter().chain(initial_colours(b)).collect();
    let mut colour = relabel(&init);
    let mut classes = count_distinct(&colour);
    loop {
        let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..colour.len())
            .map(|g| {
                let (side, v, off) = if g < na { (0, g, 0) } else { (1, g - na, na) };
                let (out, inc) = &adj[side];
                let mut o: Vec<usize> = out[v].iter().map(|&w| colour[off + w]).collect();
                let mut i: Vec<usize> = inc[v].iter().map(|&w| colour[off + w]).collect();
                o.sort_unstable();
                i.sort_unstable();
                (colour[g], o, i)
            })
            .collect();
        let next = relabel(&sig);
        let n = count_distinct(&next);
        colour = next;
        if n == classes {
            break;
        }
        classes = n;
    }
    let cb = colour.split_off(na);
    (colour, cb)
}

fn relabel<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

fn count_distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    ca: &'a [usize],
    cb: &'a [usize],
    ma: HashMap<(usize, usize), usize>,
    mb: HashMap<(usize, usize), usize>,
    /// Distinct neighbours (either direction) of each vertex.
    na: Vec<Vec<usize>>,
    nb: Vec<Vec<usize>>,
    order: Vec<usize>,
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
}

impl<'a> Search<'a> {
    fn new(a: &Quiver, b: &Quiver, ca: &'a [usize], cb: &'a [usize]) -> Self {
        let neighbours = |q: &Quiver| {
            let (out, inc) = adjacency(q);
            out.into_iter()
                .zip(inc)
                .enumerate()
                .map(|(v, (mut o, i))| {
                    o.extend(i);
                    o.retain(|&w| w != v);
                    o.sort_unstable();
                    o.dedup();
                    o
                })
                .collect::<Vec<_>>()
        };
        let na = neighbours(a);
        let n = a.vertex_count();
        // BFS order, each component seeded at its rarest colour
        let mut freq = HashMap::new();
        ca.iter().for_each(|&c| *freq.entry(c).or_insert(0usize) += 1);
        let mut seeds: Vec<usize> = (0..n).collect();
        seeds.sort_by_key(|&v| (freq[&ca[v]], v));
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in seeds {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &na[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        Search {
            ca,
            cb,
            ma: a.multiplicities(),
            mb: b.multiplicities(),
            nb: neighbours(b),
            na,
            order,
            fwd: vec![None; n],
            bwd: vec![None; n],
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.extend(0) {
            Some(self.fwd.into_iter().map(Option::unwrap).collect())
        } else {
            None
        }
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let anchored: Option<usize> = self.na[v].iter().find_map(|&u| self.fwd[u]);
        let candidates: Vec<usize> = match anchored {
            Some(w) => self.nb[w].clone(),
            None => (0..self.cb.len()).collect(),
        };
        for w in candidates {
            if self.bwd[w].is_some() || self.cb[w] != self.ca[v] || !self.consistent(v, w) {
                continue;
            }
            self.fwd[v] = Some(w);
            self.bwd[w] = Some(v);
            if self.extend(depth + 1) {
                return true;
            }
            self.fwd[v] = None;
            self.bwd[w] = None;
        }
        false
    }

    fn consistent(&self, v: usize, w: usize) -> bool {
        let get = |m: &HashMap<(usize, usize), usize>, x, y| m.get(&(x, y)).copied().unwrap_or(0);
        let mut mapped_a = 0;
        for &u in &self.na[v] {
            if let Some(x) = self.fwd[u] {
                mapped_a += 1;
                if get(&self.ma, v, u) != get(&self.mb, w, x) || get(&self.ma, u, v) != get(&self.mb, x, w) {
                    return false;
                }
            }
        }
        let mapped_b = self.nb[w].iter().filter(|&&x| self.bwd[x].is_some()).count();
        mapped_a == mapped_b
    }
}

/// Pairs up parallel arrows once the vertex bijection is fixed.
fn match_arrows(a: &Quiver, b: &Quiver, vmap: &[usize]) -> Option<Vec<usize>> {
    let mut pool: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for x in (0..b.arrow_count()).rev() {
        pool.entry((b.src(x), b.dst(x))).or_default().push(x);
    }
    (0..a.arrow_count()).map(|x| pool.get_mut(&(vmap[a.src(x)], vmap[a.dst(x)]))?.pop()).collect()
}
