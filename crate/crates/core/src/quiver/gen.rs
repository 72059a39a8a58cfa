//! Generators for the quiver families: linear, cyclic, the Kronecker quiver,
//! `Gamma(f)`, `Gamma((A,a),n)`, de Bruijn graphs and almost complete trees.

use rand::Rng;

use super::{tuple_label, Quiver};
use crate::binforms::BinForm;
use crate::error::{Error, Result};
use crate::quiver::classify::Orientation;

/// `A_r`: vertices `1..=r`, arrows `a_i: i -> i+1`.
pub fn linear(r: usize) -> Result<Quiver> {
    if r == 0 {
        return Err(Error::BadSize("linear quiver needs r >= 1".into()));
    }
    Ok(chain(r, false))
}

/// `C_r`: `A_r` plus the closing arrow `r -> 1`.
pub fn cyclic(r: usize) -> Result<Quiver> {
    if r == 0 {
        return Err(Error::BadSize("cyclic quiver needs r >= 1".into()));
    }
    Ok(chain(r, true))
}

fn chain(r: usize, closed: bool) -> Quiver {
    let vertices = (1..=r).map(|i| i.to_string()).collect();
    let n = if closed { r } else { r - 1 };
    Quiver::from_labels(vertices, (0..n).map(|i| (i, (i + 1) % r, format!("a{}", i + 1))).collect())
}

/// Two vertices `1` and `0` with the parallel arrows `f, g: 1 -> 0`.
pub fn kronecker() -> Quiver {
    Quiver::from_labels(vec!["1".into(), "0".into()], vec![(0, 1, "f".into()), (0, 1, "g".into())])
}

/// `Gamma(f)` for `f = 0` or `d_y(f) = 0`. Vertices are the forms
/// `x^-k f y^k`, the arrow between consecutive ones is `x^-k f y^(k-1)`.
pub fn gamma_f(f: &BinForm) -> Result<Quiver> {
    if f.is_zero() {
        return Ok(Quiver::from_labels(vec!["0".into()], vec![(0, 0, "0".into())]));
    }
    let (dx, dy) = f.dxdy()?;
    if dy > 0 {
        return Err(Error::Precondition(format!("Gamma(f) needs d_y(f) = 0, got {dy} for {f}")));
    }
    let k = f.field();
    let n = f.degree();
    let x = BinForm::x(k);
    let y = BinForm::y(k);
    let mut vertices = Vec::with_capacity(dx + 1);
    let mut arrows = Vec::with_capacity(dx);
    for i in 0..=dx {
        let g = f.div_exact(&x.pow(i))?.mul(&y.pow(i))?;
        vertices.push(g.to_string());
        if i > 0 {
            let a = f.div_exact(&x.pow(i))?.mul(&y.pow(i - 1))?;
            debug_assert_eq!(a.degree(), n - 1);
            arrows.push((i - 1, i, a.to_string()));
        }
    }
    Ok(Quiver::from_labels(vertices, arrows))
}

/// All tuples of length `n` over `0..base`, first coordinate most significant.
pub(crate) fn tuples(base: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = base.checked_pow(n as u32).expect("tuple count overflow");
    (0..total).map(move |mut idx| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % base;
            idx /= base;
        }
        t
    })
}

fn tuple_index(base: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &c| acc * base + c)
}

fn render<S: AsRef<str>>(set: &[S], t: &[usize]) -> String {
    tuple_label(&t.iter().map(|&i| set[i].as_ref()).collect::<Vec<_>>())
}

/// `Gamma((A,a),n)`: vertices `A^(n+1)`, arrows `A^n`, and the arrow
/// `(a_1..a_n)` runs `(a,a_1..a_n) -> (a_1..a_n,a)`.
pub fn gamma_pointed<S: AsRef<str>>(set: &[S], base: &str, n: usize) -> Result<Quiver> {
    let b = set.iter().position(|s| s.as_ref() == base).ok_or(Error::BasepointMissing)?;
    let m = set.len();
    let vertices = tuples(m, n + 1).map(|t| render(set, &t)).collect();
    let arrows = tuples(m, n)
        .map(|t| {
            let mut src = vec![b];
            src.extend(&t);
            let mut dst = t.clone();
            dst.push(b);
            (tuple_index(m, &src), tuple_index(m, &dst), render(set, &t))
        })
        .collect();
    Ok(Quiver::from_labels(vertices, arrows))
}

/// de Bruijn graph of dimension `n` on `set`: arrow `(a_0..a_n)` runs
/// `(a_0..a_(n-1)) -> (a_1..a_n)`.
pub fn debruijn<S: AsRef<str>>(set: &[S], n: usize) -> Quiver {
    let m = set.len();
    let vertices = tuples(m, n).map(|t| render(set, &t)).collect();
    let arrows = tuples(m, n + 1)
        .map(|t| (tuple_index(m, &t[..n]), tuple_index(m, &t[1..]), render(set, &t)))
        .collect();
    Quiver::from_labels(vertices, arrows)
}

/// Almost complete directed tree of width `q` and height `d` on the tuples
/// `{0..q}^d`: every `v` has the arrow `v -> (0, v_0, .., v_(d-2))`, so
/// `(0,..,0)` is the root and carries the loop. Arrows are labelled by
/// their start.
pub fn almost_tree(q: usize, d: usize, orientation: Orientation) -> Result<Quiver> {
    if q < 2 || d == 0 {
        return Err(Error::BadSize(format!("almost complete tree needs q >= 2, d >= 1, got ({q},{d})")));
    }
    let labels: Vec<String> = (0..q).map(|i| i.to_string()).collect();
    let vertices: Vec<String> = tuples(q, d).map(|t| render(&labels, &t)).collect();
    let arrows = tuples(q, d)
        .enumerate()
        .map(|(i, t)| {
            let mut next = vec![0];
            next.extend(&t[..d - 1]);
            let j = tuple_index(q, &next);
            let (s, e) = match orientation {
                Orientation::Forward => (i, j),
                Orientation::Reversed => (j, i),
            };
            (s, e, vertices[i].clone())
        })
        .collect();
    Ok(Quiver::from_labels(vertices, arrows))
}

/// Random multigraph with the given counts, loops allowed.
pub fn random<R: Rng>(rng: &mut R, vertices: usize, arrows: usize) -> Quiver {
    assert!(vertices > 0 || arrows == 0, "arrows need vertices");
    let vs = (0..vertices).map(|i| format!("v{i}")).collect();
    let arrows = (0..arrows)
        .map(|i| (rng.gen_range(0..vertices), rng.gen_range(0..vertices), format!("e{i}")))
        .collect();
    Quiver::from_labels(vs, arrows)
}

/// Random disjoint union of cycles on `vertices` vertices.
pub fn random_cycles<R: Rng>(rng: &mut R, vertices: usize) -> Quiver {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..vertices).collect();
    perm.shuffle(rng);
    let vs = (0..vertices).map(|i| format!("v{i}")).collect();
    Quiver::from_labels(vs, perm.into_iter().enumerate().map(|(i, j)| (i, j, format!("e{i}"))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    fn ids(q: &Quiver) -> Vec<(&str, &str)> {
        q.arrows().iter().map(|a| (a.src.as_str(), a.dst.as_str())).collect()
    }

    #[test]
    fn linear_and_cyclic() {
        assert_eq!(linear(1).unwrap().arrow_count(), 0);
        assert_eq!(ids(&cyclic(1).unwrap()), vec![("1", "1")]);
        assert_eq!(ids(&linear(4).unwrap()), vec![("1", "2"), ("2", "3"), ("3", "4")]);
        assert!(matches!(linear(0), Err(Error::BadSize(_))));
        assert!(matches!(cyclic(0), Err(Error::BadSize(_))));
    }

    #[test]
    fn gamma_f_examples() {
        let k = FieldCtx::new(2, 1).unwrap();
        let zero = gamma_f(&BinForm::zero(&k, 2)).unwrap();
        assert_eq!(ids(&zero), vec![("0", "0")]);
        let g = gamma_f(&BinForm::parse(&k, "x^2", None).unwrap()).unwrap();
        assert_eq!(ids(&g), vec![("x^2", "xy"), ("xy", "y^2")]);
        assert_eq!(g.arrows().iter().map(|a| a.label.as_str()).collect::<Vec<_>>(), vec!["x", "y"]);
        let g = gamma_f(&BinForm::parse(&k, "x^2+xy+y^2", None).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.arrow_count()), (1, 0));
        assert!(matches!(gamma_f(&BinForm::parse(&k, "xy", None).unwrap()), Err(Error::Precondition(_))));
    }

    #[test]
    fn pointed_examples() {
        let g = gamma_pointed(&["0", "1"], "0", 2).unwrap();
        assert_eq!((g.vertex_count(), g.arrow_count()), (8, 4));
        let a = &g.arrows()[g.arrow_index("(1,1)").unwrap()];
        assert_eq!((a.src.as_str(), a.dst.as_str()), ("(0,1,1)", "(1,1,0)"));
        let g = gamma_pointed(&["0", "1", "2"], "1", 0).unwrap();
        assert_eq!(ids(&g), vec![("1", "1")]);
        assert_eq!(g.vertex_count(), 3);
        let g = gamma_pointed(&["0", "1", "2"], "0", 1).unwrap();
        assert_eq!((g.vertex_count(), g.arrow_count()), (9, 3));
        assert!(matches!(gamma_pointed(&["0"], "7", 1), Err(Error::BasepointMissing)));
    }

    #[test]
    fn debruijn_examples() {
        let d = debruijn(&["0", "1"], 2);
        assert_eq!((d.vertex_count(), d.arrow_count()), (4, 8));
        let loops: Vec<&str> = d.loops().into_iter().map(|a| d.arrows()[a].src.as_str()).collect();
        assert_eq!(loops, vec!["(0,0)", "(1,1)"]);
        let d0 = debruijn(&["0", "1", "2"], 0);
        assert_eq!((d0.vertex_count(), d0.loops().len()), (1, 3));
        assert_eq!(debruijn(&["0", "1"], 1).arrow_count(), 4);
    }

    #[test]
    fn tree_examples() {
        let t = almost_tree(3, 2, Orientation::Forward).unwrap();
        assert_eq!((t.vertex_count(), t.arrow_count()), (9, 9));
        assert_eq!(t.loops().len(), 1);
        assert_eq!(t.in_degrees()[0], 3);
        let small = almost_tree(2, 1, Orientation::Forward).unwrap();
        assert_eq!(ids(&small), vec![("0", "0"), ("1", "0")]);
        let r = almost_tree(3, 2, Orientation::Reversed).unwrap();
        assert_eq!(r, t.reversed());
        assert!(matches!(almost_tree(1, 2, Orientation::Forward), Err(Error::BadSize(_))));
    }
}
