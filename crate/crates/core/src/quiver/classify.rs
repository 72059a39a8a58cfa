//! Recognizers for the component families of finite quivers.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::gen::{almost_tree, debruijn};
use super::{isomorphism, Quiver};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    Linear(usize),
    Cyclic(usize),
    DeBruijn { q: usize, n: usize },
    AlmostTree { q: usize, d: usize, orientation: Orientation },
    Other,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Linear(r) => write!(f, "A_{r}"),
            FamilyTag::Cyclic(r) => write!(f, "C_{r}"),
            FamilyTag::DeBruijn { q, n } => write!(f, "deBruijn({q},{n})"),
            FamilyTag::AlmostTree { q, d, orientation: Orientation::Forward } => write!(f, "tree({q},{d})"),
            FamilyTag::AlmostTree { q, d, orientation: Orientation::Reversed } => write!(f, "tree({q},{d},rev)"),
            FamilyTag::Other => f.write_str("other"),
        }
    }
}

/// `s` and `t` are both bijections from arrows to vertices.
pub fn st_bijective(q: &Quiver) -> bool {
    q.vertex_count() == q.arrow_count()
        && q.out_degrees().iter().all(|&d| d == 1)
        && q.in_degrees().iter().all(|&d| d == 1)
}

pub fn classify_component(q: &Quiver) -> Result<FamilyTag> {
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    let (v, a) = (q.vertex_count(), q.arrow_count());
    let (od, id) = (q.out_degrees(), q.in_degrees());
    if a + 1 == v && od.iter().all(|&d| d <= 1) && id.iter().all(|&d| d <= 1) {
        return Ok(FamilyTag::Linear(v));
    }
    if st_bijective(q) {
        return Ok(FamilyTag::Cyclic(v));
    }
    if a % v == 0 && a / v >= 2 {
        let m = a / v;
        if let Some(n) = exact_log(v, m) {
            let labels: Vec<String> = (0..m).map(|i| i.to_string()).collect();
            if isomorphism(q, &debruijn(&labels, n)).is_some() {
                return Ok(FamilyTag::DeBruijn { q: m, n });
            }
        }
    }
    if a == v {
        for m in 2..=v {
            let Some(d) = exact_log(v, m).filter(|&d| d >= 1) else {
                continue;
            };
            for orientation in [Orientation::Forward, Orientation::Reversed] {
                if isomorphism(q, &almost_tree(m, d, orientation)?).is_some() {
                    return Ok(FamilyTag::AlmostTree { q: m, d, orientation });
                }
            }
        }
    }
    Ok(FamilyTag::Other)
}

/// `n` with `base^n = v`.
fn exact_log(v: usize, base: usize) -> Option<usize> {
    let (mut acc, mut n) = (1usize, 0);
    while acc < v {
        acc = acc.checked_mul(base)?;
        n += 1;
    }
    (acc == v).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::gen::{cyclic, linear, random, random_cycles};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        assert_eq!(classify_component(&cyclic(4).unwrap()).unwrap(), FamilyTag::Cyclic(4));
        assert_eq!(classify_component(&debruijn(&["0", "1"], 2)).unwrap(), FamilyTag::DeBruijn { q: 2, n: 2 });
        assert_eq!(
            classify_component(&almost_tree(3, 2, Orientation::Forward).unwrap()).unwrap(),
            FamilyTag::AlmostTree { q: 3, d: 2, orientation: Orientation::Forward }
        );
        assert_eq!(classify_component(&linear(1).unwrap()).unwrap(), FamilyTag::Linear(1));
        let two = Quiver::disjoint_union(&[cyclic(1).unwrap(), cyclic(1).unwrap()]);
        assert!(matches!(classify_component(&two), Err(Error::NotConnected)));
    }

    #[test]
    fn generator_grid() {
        for m in [2usize, 3, 5] {
            let labels: Vec<String> = (0..m).map(|i| i.to_string()).collect();
            for n in 0..=4 {
                if m.pow(n as u32 + 1) > 625 {
                    continue;
                }
                assert_eq!(classify_component(&debruijn(&labels, n)).unwrap(), FamilyTag::DeBruijn { q: m, n });
            }
            for d in 1..=4 {
                if m.pow(d as u32) > 625 {
                    continue;
                }
                for o in [Orientation::Forward, Orientation::Reversed] {
                    let t = almost_tree(m, d, o).unwrap();
                    assert_eq!(classify_component(&t).unwrap(), FamilyTag::AlmostTree { q: m, d, orientation: o });
                }
            }
        }
        for r in 1..=4 {
            assert_eq!(classify_component(&linear(r).unwrap()).unwrap(), FamilyTag::Linear(r));
            assert_eq!(classify_component(&cyclic(r).unwrap()).unwrap(), FamilyTag::Cyclic(r));
        }
    }

    #[test]
    fn st_bijective_examples() {
        assert!(st_bijective(&cyclic(5).unwrap()));
        assert!(!st_bijective(&linear(2).unwrap()));
        assert!(st_bijective(&Quiver::disjoint_union(&[cyclic(2).unwrap(), cyclic(3).unwrap()])));
    }

    proptest! {
        #[test]
        fn lemma_both_ways(seed in any::<u64>(), nv in 1usize..=8, extra in 0usize..3, cycles in any::<bool>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = if cycles { random_cycles(&mut rng, nv) } else { random(&mut rng, nv, nv + extra - 1) };
            let all_cyclic = q
                .component_quivers()
                .iter()
                .all(|c| matches!(classify_component(c).unwrap(), FamilyTag::Cyclic(_)));
            prop_assert_eq!(st_bijective(&q), all_cyclic);
        }
    }
}
