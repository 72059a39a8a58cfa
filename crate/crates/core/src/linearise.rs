//! Linearisation of quivers: the free representation `k^(Q)` and its dual
//! `k^Q`.

use crate::binforms::{univ_factor, FormLabel};
use crate::gf::{FieldCtx, FieldElem};
use crate::kronrep::{Decomposition, Indecomposable, KronRep, Matrix};
use crate::poly::Poly;
use crate::quiver::{Quiver, QuiverMorphism};

/// `k^(Q)`: `X1 = k^(arrows)`, `X0 = k^(vertices)`, and the basis vector of
/// an arrow goes to the basis vectors of its start (F) and end (G).
pub fn lin(q: &Quiver, field: &FieldCtx) -> KronRep {
    let (d1, d0) = (q.arrow_count(), q.vertex_count());
    let mut f = Matrix::zeros(d0, d1);
    let mut g = Matrix::zeros(d0, d1);
    for a in 0..d1 {
        f.set(q.src(a), a, FieldElem::ONE);
        g.set(q.dst(a), a, FieldElem::ONE);
    }
    KronRep::new(field, f, g).expect("shapes agree")
}

/// `k^Q`, the dual of `k^(Q)` for finite `Q`.
pub fn colin(q: &Quiver, field: &FieldCtx) -> KronRep {
    lin(q, field).dual()
}

/// The intertwiner `k^(phi)` as `(phi1, phi0)`, permutation-like 0/1 matrices.
pub fn lin_morphism(src: &Quiver, dst: &Quiver, phi: &QuiverMorphism) -> (Matrix, Matrix) {
    let mut phi1 = Matrix::zeros(dst.arrow_count(), src.arrow_count());
    let mut phi0 = Matrix::zeros(dst.vertex_count(), src.vertex_count());
    phi.arrow_map.iter().enumerate().for_each(|(a, &b)| phi1.set(b, a, FieldElem::ONE));
    phi.vertex_map.iter().enumerate().for_each(|(v, &w)| phi0.set(w, v, FieldElem::ONE));
    (phi1, phi0)
}

/// Decomposition of `k^(C_n)`: with `n = p^c m` and `p` not dividing `m`,
/// `t^m - 1` is squarefree and each irreducible factor `u` gives `R(u^(p^c))`.
pub fn cyclic_decomposition(field: &FieldCtx, n: usize) -> Decomposition {
    assert!(n >= 1, "cyclic quiver needs n >= 1");
    let p = field.characteristic() as usize;
    let (mut m, mut pc) = (n, 1);
    while m % p == 0 {
        m /= p;
        pc *= p;
    }
    let u = Poly::monomial(FieldElem::ONE, m).sub(&Poly::one(), field);
    let summands = univ_factor(&u, field)
        .expect("monic of positive degree")
        .into_iter()
        .map(|(f, mult)| {
            debug_assert_eq!(mult, 1);
            Indecomposable::Reg(FormLabel::Poly(f), pc)
        })
        .collect();
    Decomposition::new(summands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronrep::decompose;
    use crate::quiver::gen::{cyclic, linear, random};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    fn label(k: &FieldCtx, codes: &[u32]) -> FormLabel {
        FormLabel::Poly(Poly::from_codes(k, codes).unwrap())
    }

    #[test]
    fn linear_quivers_are_p_and_i() {
        for q in [2u64, 3, 5] {
            let k = gf(q);
            for n in 0..=5 {
                let a = linear(n + 1).unwrap();
                assert_eq!(lin(&a, &k), KronRep::preprojective(&k, n));
                assert!(lin(&a, &k).is_isomorphic(&KronRep::preprojective(&k, n)).unwrap());
                assert!(colin(&a, &k).is_isomorphic(&KronRep::preinjective(&k, n)).unwrap());
            }
        }
    }

    #[test]
    fn cyclic_matrices() {
        let k = gf(3);
        let c = lin(&cyclic(4).unwrap(), &k);
        assert_eq!(c.f(), &Matrix::identity(4));
        let shift: Vec<Vec<u32>> =
            (0..4).map(|i| (0..4).map(|j| u32::from((j + 1) % 4 == i)).collect()).collect();
        assert_eq!(c.g().to_codes(), shift);
        assert!(colin(&cyclic(4).unwrap(), &k).is_isomorphic(&c).unwrap());
        assert_eq!(lin(&Quiver::default(), &k), KronRep::zero(&k));
        let pt = Quiver::from_labels(vec!["v".into()], vec![]);
        assert_eq!(colin(&pt, &k).dims(), (1, 0));
    }

    #[test]
    fn cyclic_decomposition_examples() {
        let k2 = gf(2);
        assert_eq!(
            cyclic_decomposition(&k2, 6).summands(),
            &[Indecomposable::Reg(label(&k2, &[1, 1]), 2), Indecomposable::Reg(label(&k2, &[1, 1, 1]), 2)]
        );
        let k3 = gf(3);
        assert_eq!(cyclic_decomposition(&k3, 3).summands(), &[Indecomposable::Reg(label(&k3, &[2, 1]), 3)]);
        assert_eq!(cyclic_decomposition(&k2, 1).summands(), &[Indecomposable::Reg(label(&k2, &[1, 1]), 1)]);
    }

    #[test]
    fn cyclic_decomposition_matches_decomposer() {
        for q in [2u64, 3, 5] {
            let k = gf(q);
            for n in 1..=8 {
                let d = cyclic_decomposition(&k, n);
                assert_eq!(decompose(&lin(&cyclic(n).unwrap(), &k)), d, "q={q} n={n}");
                assert_eq!(d.dims(), (n, n));
            }
        }
    }

    #[test]
    fn colin_is_dual_of_lin() {
        let k = gf(2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let q = random(&mut rng, 4, 4);
            assert!(colin(&q, &k).is_isomorphic(&lin(&q, &k).dual()).unwrap());
        }
    }

    #[test]
    fn morphisms_give_intertwiners() {
        let k = gf(3);
        let (a2, c1) = (linear(2).unwrap(), cyclic(1).unwrap());
        let phi = QuiverMorphism { vertex_map: vec![0, 0], arrow_map: vec![0] };
        assert!(phi.commutes(&a2, &c1));
        let (phi1, phi0) = lin_morphism(&a2, &c1, &phi);
        assert!(lin(&a2, &k).is_intertwiner(&lin(&c1, &k), &phi1, &phi0));
        let bad = QuiverMorphism { vertex_map: vec![0, 0], arrow_map: vec![0] };
        let (phi1, phi0) = lin_morphism(&a2, &a2, &QuiverMorphism { vertex_map: vec![1, 0], ..bad });
        assert!(!lin(&a2, &k).is_intertwiner(&lin(&a2, &k), &phi1, &phi0));
    }
}
