//! The forgetful functor from linear to set-valued Kronecker
//! representations, and the unit `Q -> |k^(Q)|`.

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::kronrep::{KronRep, Matrix};
use crate::linearise::lin;
use crate::quiver::{tuple_label, Quiver, QuiverMorphism};

mod checks;

pub use checks::{
    check_preinjective, check_preinjective_rep, check_preprojective, check_preprojective_rep, check_regular,
    check_regular_rep, embedding_report, EmbeddingReport, FactorReport, PreinjectiveReport, PreprojectiveReport,
    RegularCase, RegularReport,
};

/// Largest number of vectors enumerated for one space.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// `q^d`, checked against `cap`.
pub fn space_size(field: &FieldCtx, d: usize, cap: u64) -> Result<usize> {
    let mut cells: u128 = 1;
    for _ in 0..d {
        cells = cells.saturating_mul(field.order() as u128);
        if cells > cap as u128 {
            return Err(Error::EnumerationTooLarge { cells: saturating_pow(field.order() as u128, d), cap });
        }
    }
    Ok(cells as usize)
}

fn saturating_pow(b: u128, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(b))
}

/// The vector with index `idx` in lexicographic order, first coordinate
/// most significant.
pub fn vector_at(field: &FieldCtx, d: usize, mut idx: usize) -> Vec<FieldElem> {
    let q = field.order() as usize;
    let mut v = vec![FieldElem::ZERO; d];
    for slot in v.iter_mut().rev() {
        *slot = FieldElem::from_code_unchecked((idx % q) as u32);
        idx /= q;
    }
    v
}

pub fn vector_index(field: &FieldCtx, v: &[FieldElem]) -> usize {
    let q = field.order() as usize;
    v.iter().fold(0, |acc, c| acc * q + c.code() as usize)
}

pub fn vector_label(v: &[FieldElem]) -> String {
    tuple_label(&v.iter().map(|c| c.code().to_string()).collect::<Vec<_>>())
}

/// `|m|` with the default cap.
pub fn forget(m: &KronRep) -> Result<Quiver> {
    forget_with_cap(m, DEFAULT_CAP)
}

/// Vertices are the vectors of `X0`, arrows the vectors of `X1`, with
/// `s(v) = F v` and `t(v) = G v`. Ids and labels are coordinate tuples.
pub fn forget_with_cap(m: &KronRep, cap: u64) -> Result<Quiver> {
    let k = m.field();
    let nv = space_size(k, m.d0(), cap)?;
    let na = space_size(k, m.d1(), cap)?;
    let vertices = (0..nv).map(|i| vector_label(&vector_at(k, m.d0(), i))).collect();
    let image = |mat: &Matrix, v: &[FieldElem]| vector_index(k, &mat.mul_vec(v, k));
    let arrows = (0..na)
        .map(|i| {
            let v = vector_at(k, m.d1(), i);
            (image(m.f(), &v), image(m.g(), &v), vector_label(&v))
        })
        .collect();
    Ok(Quiver::from_labels(vertices, arrows))
}

/// `v -> e_v`, `a -> e_a` into `|k^(Q)|`; checked to commute and be injective.
pub fn unit_embedding(q: &Quiver, field: &FieldCtx, cap: u64) -> Result<(Quiver, QuiverMorphism)> {
    let target = forget_with_cap(&lin(q, field), cap)?;
    let unit = unit_map(q, field);
    if !unit.commutes(q, &target) || !unit.is_injective() {
        return Err(Error::CheckFailed("unit map is not an injective quiver morphism".into()));
    }
    Ok((target, unit))
}

pub(crate) fn unit_map(q: &Quiver, field: &FieldCtx) -> QuiverMorphism {
    let basis = |d: usize, i: usize| {
        let mut v = vec![FieldElem::ZERO; d];
        v[i] = FieldElem::ONE;
        vector_index(field, &v)
    };
    let (nv, na) = (q.vertex_count(), q.arrow_count());
    QuiverMorphism {
        vertex_map: (0..nv).map(|v| basis(nv, v)).collect(),
        arrow_map: (0..na).map(|a| basis(na, a)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binforms::BinForm;
    use crate::quiver::gen::{cyclic, linear};
    use crate::quiver::isomorphism;

    fn gf(q: u64) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    fn cycle_of(q: &Quiver, start: &str) -> Vec<String> {
        let mut out = vec![start.to_string()];
        let mut cur = q.vertex_index(start).unwrap();
        loop {
            let a = (0..q.arrow_count()).find(|&a| q.src(a) == cur).unwrap();
            cur = q.dst(a);
            if q.vertices()[cur].id == start {
                return out;
            }
            out.push(q.vertices()[cur].id.clone());
        }
    }

    #[test]
    fn f5_pairs() {
        let k = gf(5);
        let r = KronRep::regular(&BinForm::parse(&k, "y-4x", None).unwrap()).unwrap();
        assert_eq!(r.f().to_codes(), vec![vec![1]]);
        assert_eq!(r.g().to_codes(), vec![vec![4]]);
        let q = forget(&r).unwrap();
        assert_eq!(cycle_of(&q, "0"), vec!["0"]);
        assert_eq!(cycle_of(&q, "1"), vec!["1", "4"]);
        assert_eq!(cycle_of(&q, "2"), vec!["2", "3"]);
        let r = KronRep::regular(&BinForm::parse(&k, "y-2x", None).unwrap()).unwrap();
        assert_eq!(cycle_of(&forget(&r).unwrap(), "1"), vec!["1", "2", "4", "3"]);
    }

    #[test]
    fn counts_and_cap() {
        let k = gf(3);
        let m = KronRep::preprojective(&k, 2);
        let q = forget(&m).unwrap();
        assert_eq!((q.vertex_count(), q.arrow_count()), (27, 9));
        assert!(matches!(forget_with_cap(&m, 26), Err(Error::EnumerationTooLarge { cells: 27, cap: 26 })));
        let z = forget(&KronRep::zero(&k)).unwrap();
        assert_eq!((z.vertex_count(), z.arrow_count(), z.loops().len()), (1, 1, 1));
    }

    #[test]
    fn unit_examples() {
        let k = gf(2);
        let (target, u) = unit_embedding(&cyclic(1).unwrap(), &k, DEFAULT_CAP).unwrap();
        assert_eq!((target.vertex_count(), target.loops().len()), (2, 2));
        assert_eq!(target.vertices()[u.vertex_map[0]].id, "1");
        let (target, u) = unit_embedding(&linear(2).unwrap(), &k, DEFAULT_CAP).unwrap();
        assert_eq!((target.vertex_count(), target.arrow_count()), (4, 2));
        assert!(isomorphism(&target, &forget(&KronRep::preprojective(&k, 1)).unwrap()).is_some());
        assert!(u.is_injective());
        let (_, u) = unit_embedding(&Quiver::default(), &k, DEFAULT_CAP).unwrap();
        assert!(u.vertex_map.is_empty() && u.arrow_map.is_empty());
    }
}
