//! Factorization of univariate polynomials over GF(q): squarefree
//! decomposition, distinct-degree splitting, then Cantor–Zassenhaus
//! equal-degree splitting (trace map in characteristic 2).

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::poly::Poly;

/// Default seed for the randomized splitting step.
pub const DEFAULT_SEED: u64 = 0;

/// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with each
/// `g` squarefree, pairwise coprime, and `u = prod g^m`.
pub fn squarefree(u: &Poly, k: &FieldCtx) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if u.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = u.derivative(k);
    let mut c = u.gcd(&d, k);
    let mut w = u.div_exact(&c, k).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c, k);
        let z = w.div_exact(&y, k).expect("gcd divides");
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w, k).expect("gcd divides");
    }
    if !c.is_one() {
        let p = k.characteristic() as usize;
        for (g, m) in squarefree(&c.pth_root(k), k) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree splitting of a monic squarefree polynomial into
/// `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(u: &Poly, k: &FieldCtx) -> Vec<(Poly, usize)> {
    let q = k.order() as u64;
    let t = Poly::t();
    let mut out = Vec::new();
    let mut f = u.clone();
    let mut h = t.rem(&f, k).expect("nonzero");
    let mut d = 1;
    while f.deg0() >= 2 * d {
        h = h.powmod(q, &f, k).expect("nonzero");
        let g = h.sub(&t, k).gcd(&f, k);
        if !g.is_one() {
            f = f.div_exact(&g, k).expect("gcd divides");
            h = h.rem(&f, k).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if f.deg0() > 0 {
        let deg = f.deg0();
        out.push((f, deg));
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree<R: Rng>(u: &Poly, d: usize, k: &FieldCtx, rng: &mut R) -> Vec<Poly> {
    let n = u.deg0();
    if n == d {
        return vec![u.clone()];
    }
    let q = k.order() as u64;
    let p = k.characteristic();
    loop {
        let a = Poly::new((0..n).map(|_| k.elem(rng.gen_range(0..k.order())).unwrap()).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace from GF(2^(e d)) to GF(2).
            let steps = k.degree() as usize * d;
            let mut cur = a.rem(u, k).unwrap();
            let mut acc = cur.clone();
            for _ in 1..steps {
                cur = cur.mul(&cur, k).rem(u, k).unwrap();
                acc = acc.add(&cur, k);
            }
            acc
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            let mut cur = a.rem(u, k).unwrap();
            let mut acc = cur.clone();
            for _ in 1..d {
                cur = cur.powmod(q, u, k).unwrap();
                acc = acc.mul(&cur, k).rem(u, k).unwrap();
            }
            acc.powmod((q - 1) / 2, u, k).unwrap().sub(&Poly::one(), k)
        };
        let g = b.gcd(u, k);
        let gd = g.deg0();
        if gd > 0 && gd < n {
            let h = u.div_exact(&g, k).unwrap();
            let mut out = equal_degree(&g, d, k, rng);
            out.extend(equal_degree(&h, d, k, rng));
            return out;
        }
    }
}

/// Complete factorization of a monic polynomial of degree at least one,
/// sorted canonically (degree, then coefficient codes).
pub fn univ_factor(u: &Poly, k: &FieldCtx) -> Result<Vec<(Poly, usize)>> {
    univ_factor_seeded(u, k, DEFAULT_SEED)
}

pub fn univ_factor_seeded(u: &Poly, k: &FieldCtx, seed: u64) -> Result<Vec<(Poly, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    univ_factor_with_rng(u, k, &mut rng)
}

pub fn univ_factor_with_rng<R: Rng>(
    u: &Poly,
    k: &FieldCtx,
    rng: &mut R,
) -> Result<Vec<(Poly, usize)>> {
    match u.degree() {
        None | Some(0) => {
            return Err(Error::InvalidArgument("factorization needs degree at least 1".into()))
        }
        _ => {}
    }
    if !u.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut acc: BTreeMap<Poly, usize> = BTreeMap::new();
    for (part, mult) in squarefree(u, k) {
        for (block, d) in distinct_degree(&part, k) {
            for irr in equal_degree(&block, d, k, rng) {
                *acc.entry(irr).or_default() += mult;
            }
        }
    }
    Ok(acc.into_iter().collect())
}
