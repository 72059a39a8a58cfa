//! Structured checks of the quivers `|P(n)|`, `|I(n)|`, `|R(f)|` and of the
//! embedding of a quiver into a product of such quivers.

use serde::Serialize;

use super::{forget_with_cap, unit_map, vector_at, vector_index};
use crate::binforms::{BinForm, FormLabel};
use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::kronrep::{decompose, Decomposition, Indecomposable, KronRep};
use crate::linearise::lin;
use crate::poly::Poly;
use crate::quiver::gen::{almost_tree, debruijn, gamma_f, gamma_pointed};
use crate::quiver::{classify_component, isomorphism, st_bijective, FamilyTag, Orientation, Quiver, QuiverMorphism};

#[derive(Clone, Debug, Serialize)]
pub struct PreprojectiveReport {
    pub field: String,
    pub n: usize,
    pub vertices: usize,
    pub arrows: usize,
    pub components: Vec<FamilyTag>,
    /// Onto the disjoint union of the `Gamma(f)`.
    #[serde(skip)]
    pub gamma_f_iso: QuiverMorphism,
    /// Onto `Gamma((k,0),n)`, reversing coordinates.
    #[serde(skip)]
    pub pointed_iso: QuiverMorphism,
}

#[derive(Clone, Debug, Serialize)]
pub struct PreinjectiveReport {
    pub field: String,
    pub n: usize,
    pub vertices: usize,
    pub arrows: usize,
    pub loops: Vec<String>,
    /// Onto the de Bruijn graph, identity on coordinates.
    #[serde(skip)]
    pub debruijn_iso: QuiverMorphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularCase {
    /// Both actions invertible.
    Cycles,
    /// `f = c y^d`.
    Tree,
    /// `f = c x^d`.
    ReversedTree,
    /// Several summands, checked one by one.
    Mixed,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularReport {
    pub field: String,
    pub form: String,
    pub case: RegularCase,
    pub components: Vec<FamilyTag>,
    pub cycle_lengths: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub summand: String,
    pub components: Vec<FamilyTag>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingReport {
    pub field: String,
    pub vertices: usize,
    pub arrows: usize,
    pub decomposition: String,
    pub factors: Vec<FactorReport>,
    pub product_isomorphic: bool,
    pub unit_commutes: bool,
    pub unit_injective: bool,
    #[serde(skip)]
    pub unit: QuiverMorphism,
}

fn fail(msg: String) -> Error {
    Error::CheckFailed(msg)
}

fn element_labels(field: &FieldCtx) -> Vec<String> {
    field.elements().map(|c| c.code().to_string()).collect()
}

fn component_tags(q: &Quiver) -> Result<Vec<FamilyTag>> {
    let mut tags = q.component_quivers().iter().map(classify_component).collect::<Result<Vec<_>>>()?;
    tags.sort();
    Ok(tags)
}

pub fn check_preprojective(field: &FieldCtx, n: usize, cap: u64) -> Result<PreprojectiveReport> {
    check_preprojective_rep(&KronRep::preprojective(field, n), n, cap)
}

/// Checks a representation claimed to be `P(n)`.
pub fn check_preprojective_rep(m: &KronRep, n: usize, cap: u64) -> Result<PreprojectiveReport> {
    let k = m.field();
    if m.dims() != (n, n + 1) {
        return Err(fail(format!("P({n}) has dimension vector {:?}", m.dims())));
    }
    let q = forget_with_cap(m, cap)?;

    let forms: Vec<BinForm> = (0..q.vertex_count())
        .map(|i| BinForm::new(k, vector_at(k, n + 1, i)))
        .collect::<Result<_>>()?;
    let gammas = forms
        .iter()
        .filter(|f| f.is_zero() || !f.coeffs()[0].is_zero())
        .map(gamma_f)
        .collect::<Result<Vec<_>>>()?;
    let union = Quiver::disjoint_union(&gammas);
    let gamma_f_iso =
        isomorphism(&q, &union).ok_or_else(|| fail(format!("|P({n})| is not the union of the Gamma(f)")))?;

    let labels = element_labels(k);
    let pointed = gamma_pointed(&labels, "0", n)?;
    let reverse = |d: usize, i: usize| {
        let mut v = vector_at(k, d, i);
        v.reverse();
        vector_index(k, &v)
    };
    let pointed_iso = QuiverMorphism {
        vertex_map: (0..q.vertex_count()).map(|i| reverse(n + 1, i)).collect(),
        arrow_map: (0..q.arrow_count()).map(|i| reverse(n, i)).collect(),
    };
    if !pointed_iso.is_isomorphism(&q, &pointed) {
        return Err(fail(format!("coordinate reversal is not an isomorphism |P({n})| -> Gamma((k,0),{n})")));
    }
    if isomorphism(&q, &pointed).is_none() {
        return Err(fail("isomorphism search disagrees with the explicit bijection".into()));
    }
    Ok(PreprojectiveReport {
        field: k.to_string(),
        n,
        vertices: q.vertex_count(),
        arrows: q.arrow_count(),
        components: component_tags(&q)?,
        gamma_f_iso,
        pointed_iso,
    })
}

pub fn check_preinjective(field: &FieldCtx, n: usize, cap: u64) -> Result<PreinjectiveReport> {
    check_preinjective_rep(&KronRep::preinjective(field, n), n, cap)
}

/// Checks a representation claimed to be `I(n)`.
pub fn check_preinjective_rep(m: &KronRep, n: usize, cap: u64) -> Result<PreinjectiveReport> {
    let k = m.field();
    if m.dims() != (n + 1, n) {
        return Err(fail(format!("I({n}) has dimension vector {:?}", m.dims())));
    }
    let q = forget_with_cap(m, cap)?;
    let db = debruijn(&element_labels(k), n);
    let identity = QuiverMorphism::identity(&q);
    if !identity.is_isomorphism(&q, &db) {
        return Err(fail(format!("coordinates do not identify |I({n})| with the de Bruijn graph")));
    }
    if isomorphism(&q, &db).is_none() {
        return Err(fail("isomorphism search disagrees with the explicit bijection".into()));
    }
    Ok(PreinjectiveReport {
        field: k.to_string(),
        n,
        vertices: q.vertex_count(),
        arrows: q.arrow_count(),
        loops: q.loops().into_iter().map(|a| q.vertices()[q.src(a)].id.clone()).collect(),
        debruijn_iso: identity,
    })
}

pub fn check_regular(f: &BinForm, cap: u64) -> Result<RegularReport> {
    check_regular_rep(&KronRep::regular(f)?, f, cap)
}

/// Checks a representation claimed to be `R(f)`.
pub fn check_regular_rep(m: &KronRep, f: &BinForm, cap: u64) -> Result<RegularReport> {
    let k = m.field();
    let n = f.degree();
    if m.dims() != (n, n) {
        return Err(fail(format!("R({f}) has dimension vector {:?}", m.dims())));
    }
    let q = forget_with_cap(m, cap)?;
    let width = k.order() as usize;
    let factors = f.factor()?.factors;
    let single_power = |want: &FormLabel| matches!(factors.as_slice(), [(l, _)] if l == want);
    let expected = Decomposition::new(factors.iter().map(|(l, e)| Indecomposable::Reg(l.clone(), *e)).collect());
    let dec = decompose(m);
    if dec != expected {
        return Err(fail(format!("claimed R({f}) decomposes as {dec}, expected {expected}")));
    }

    let case = if m.f().is_invertible(k) && m.g().is_invertible(k) {
        if !st_bijective(&q) {
            return Err(fail(format!("|R({f})| has invertible actions but s, t are not bijective")));
        }
        RegularCase::Cycles
    } else if single_power(&FormLabel::Poly(Poly::t())) || single_power(&FormLabel::X) {
        let orientation =
            if single_power(&FormLabel::X) { Orientation::Reversed } else { Orientation::Forward };
        tree_degrees(&q, width, orientation).map_err(|e| fail(format!("|R({f})|: {e}")))?;
        if isomorphism(&q, &almost_tree(width, n, orientation)?).is_none() {
            return Err(fail(format!("|R({f})| is not the almost complete tree of height {n}")));
        }
        match orientation {
            Orientation::Forward => RegularCase::Tree,
            Orientation::Reversed => RegularCase::ReversedTree,
        }
    } else {
        let mut product = forget_with_cap(&KronRep::zero(k), cap)?;
        for s in dec.summands() {
            let part = forget_with_cap(&s.build(k), cap)?;
            for tag in component_tags(&part)? {
                if !matches!(tag, FamilyTag::Cyclic(_) | FamilyTag::AlmostTree { .. }) {
                    return Err(fail(format!("summand {s} of R({f}) has a component {tag}")));
                }
            }
            product = Quiver::product(&product, &part);
        }
        if isomorphism(&q, &product).is_none() {
            return Err(fail(format!("|R({f})| is not the product over its summands")));
        }
        RegularCase::Mixed
    };

    let components = component_tags(&q)?;
    if case == RegularCase::Cycles && !components.iter().all(|t| matches!(t, FamilyTag::Cyclic(_))) {
        return Err(fail(format!("|R({f})| has a non-cyclic component")));
    }
    let mut cycle_lengths: Vec<usize> = components
        .iter()
        .filter_map(|t| match t {
            FamilyTag::Cyclic(r) => Some(*r),
            _ => None,
        })
        .collect();
    cycle_lengths.sort_unstable();
    Ok(RegularReport { field: k.to_string(), form: f.to_string(), case, components, cycle_lengths })
}

/// One arrow out of (into, when reversed) every vertex; `0` or `q` arrows in
/// (out of) every vertex.
fn tree_degrees(q: &Quiver, width: usize, orientation: Orientation) -> std::result::Result<(), String> {
    let (one, fan) = match orientation {
        Orientation::Forward => (q.out_degrees(), q.in_degrees()),
        Orientation::Reversed => (q.in_degrees(), q.out_degrees()),
    };
    if one.iter().any(|&d| d != 1) {
        return Err("a vertex without exactly one tree arrow".into());
    }
    if fan.iter().any(|&d| d != 0 && d != width) {
        return Err(format!("fan-in other than 0 or {width}"));
    }
    if q.loops().len() != 1 {
        return Err("expected a unique loop".into());
    }
    Ok(())
}

/// Embeds `q` into the product of the quivers of the indecomposable
/// summands of `k^(q)` and classifies all of their components.
pub fn embedding_report(q: &Quiver, field: &FieldCtx, cap: u64) -> Result<EmbeddingReport> {
    let l = lin(q, field);
    let target = forget_with_cap(&l, cap)?;
    let unit = unit_map(q, field);
    let (unit_commutes, unit_injective) = (unit.commutes(q, &target), unit.is_injective());
    if !unit_commutes || !unit_injective {
        return Err(fail("unit map is not an injective quiver morphism".into()));
    }

    let dec = decompose(&l);
    let mut factors = Vec::with_capacity(dec.len());
    let mut product = forget_with_cap(&KronRep::zero(field), cap)?;
    for s in dec.summands() {
        let part = forget_with_cap(&s.build(field), cap)?;
        let components = component_tags(&part)?;
        if components.contains(&FamilyTag::Other) {
            return Err(Error::ClassificationFailed(format!("a component of |{s}| is in none of the families")));
        }
        factors.push(FactorReport { summand: s.to_string(), components });
        product = Quiver::product(&product, &part);
    }
    if isomorphism(&target, &product).is_none() {
        return Err(fail("|k^(Q)| is not the product of the summand quivers".into()));
    }
    Ok(EmbeddingReport {
        field: field.to_string(),
        vertices: q.vertex_count(),
        arrows: q.arrow_count(),
        decomposition: dec.to_string(),
        factors,
        product_isomorphic: true,
        unit_commutes,
        unit_injective,
        unit,
    })
}
