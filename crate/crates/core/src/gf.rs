//! Exact arithmetic in GF(p^e).
//!
//! Elements are identified by an integer code in `[0, q)`: the base-`p`
//! digits of the code are the coefficients of the representative polynomial
//! in `t`, lowest degree first. The defining modulus is the
//! lexicographically smallest monic irreducible of degree `e`, so two
//! contexts built from the same `(p, e)` agree code for code.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// A field element, stored as its canonical integer code.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_code_unchecked(code: u32) -> Self {
        FieldElem(code)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus over GF(p), lowest degree first, length `e + 1`.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed primitive element `g`.
    exp: Vec<u32>,
    /// Discrete logarithm base `g`; entry 0 is unused.
    log: Vec<u32>,
}

/// An immutable finite field context. Cloning is cheap.
#[derive(Clone)]
pub struct FieldCtx(Arc<Inner>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.e == other.0.e
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn digits(mut code: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(code % p);
        code /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplication straight from the definition; used only to build tables.
fn slow_mul(a: u32, b: u32, p: u32, e: u32, modulus: &[u32]) -> u32 {
    if e == 1 {
        return ((a as u64 * b as u64) % p as u64) as u32;
    }
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    let e = e as usize;
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // t^deg = -sum_{i<e} m_i t^(deg-e+i)
        for (i, &m) in modulus.iter().enumerate().take(e) {
            let k = deg - e + i;
            prod[k] = (prod[k] + (p as u64 - m as u64) * c) % p as u64;
        }
        prod[deg] = 0;
    }
    let low: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
    undigits(&low, p)
}

fn slow_pow(mut a: u32, mut n: u64, p: u32, e: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1u32;
    while n > 0 {
        if n & 1 == 1 {
            acc = slow_mul(acc, a, p, e, modulus);
        }
        a = slow_mul(a, a, p, e, modulus);
        n >>= 1;
    }
    acc
}

impl FieldCtx {
    /// Builds GF(p^e) with its canonical modulus.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > MAX_FIELD_SIZE as u128 {
            return Err(Error::TooLarge { p, e });
        }
        let p32 = p as u32;
        let q = q as u32;
        let modulus = if e == 1 { vec![0, 1] } else { canonical_modulus(p32, e) };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let gen = (1..q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| slow_pow(g, order / r, p32, e, &modulus) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..order as u32 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = slow_mul(cur, gen, p32, e, &modulus);
        }
        Ok(FieldCtx(Arc::new(Inner { p: p32, e, q, modulus, exp, log })))
    }

    /// Builds the field of the given size, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
        }
        let p = prime_factors(q)[0];
        let mut e = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
        }
        FieldCtx::new(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// The defining modulus over GF(p), lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn elem(&self, code: u32) -> Result<FieldElem> {
        if code < self.0.q {
            Ok(FieldElem(code))
        } else {
            Err(Error::InvalidElement { code, q: self.0.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.0.q).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let Inner { p, e, .. } = *self.0;
        if e == 1 {
            return FieldElem((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let Inner { p, e, .. } = *self.0;
        if e == 1 {
            return FieldElem((p - a.0) % p);
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let inner = &*self.0;
        let order = inner.q - 1;
        let l = (inner.log[a.0 as usize] + inner.log[b.0 as usize]) % order;
        FieldElem(inner.exp[l as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let order = inner.q - 1;
        let l = (order - inner.log[a.0 as usize]) % order;
        Ok(FieldElem(inner.exp[l as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, n: u64) -> FieldElem {
        if n == 0 {
            return FieldElem::ONE;
        }
        if a.0 == 0 {
            return FieldElem::ZERO;
        }
        let inner = &*self.0;
        let order = (inner.q - 1) as u64;
        let l = (inner.log[a.0 as usize] as u64 * (n % order)) % order;
        FieldElem(inner.exp[l as usize])
    }

    /// Applies one of the named operations; `pow` reads the exponent from
    /// the code of `b`.
    pub fn arith(&self, op: ArithOp, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
            ArithOp::Neg => self.neg(a),
            ArithOp::Inv => self.inv(a)?,
            ArithOp::Pow => self.pow(a, b.0 as u64),
        })
    }

    /// `a^(1/p)`, the inverse of the Frobenius map.
    pub fn pth_root(&self, a: FieldElem) -> FieldElem {
        self.pow(a, (self.0.q / self.0.p) as u64)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow,
}

/// Lexicographically smallest monic irreducible of degree `e` over GF(p),
/// comparing `(c_0, c_1, ..., c_{e-1})` as integer sequences.
fn canonical_modulus(p: u32, e: u32) -> Vec<u32> {
    let prime = FieldCtx::new(p as u64, 1).expect("prime field");
    let count = (p as u64).pow(e);
    for idx in 0..count {
        // c_0 is the most significant digit of idx.
        let mut coeffs = vec![0u32; e as usize + 1];
        let mut rest = idx;
        for i in (0..e as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[e as usize] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        let poly = Poly::from_codes(&prime, &coeffs).expect("codes below p");
        if poly.is_irreducible(&prime) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Parses `GF(p)`, `GF(p^e)` or `GF(q)` for a prime power `q`.
impl FromStr for FieldCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected GF(p) or GF(p^e), got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        };
        match body.split_once('^') {
            Some((p, e)) => {
                let e = parse(e)?;
                let e = u32::try_from(e).map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                FieldCtx::new(parse(p)?, e)
            }
            None => FieldCtx::with_order(parse(body)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_gf2() {
        let k = FieldCtx::new(2, 1).unwrap();
        assert_eq!(k.order(), 2);
        let codes: Vec<u32> = k.elements().map(FieldElem::code).collect();
        assert_eq!(codes, vec![0, 1]);
    }

    #[test]
    fn gf4_modulus_from_exhaustive_scan() {
        // Oracle: test each of the four monic quadratics over GF(2) for a root.
        let irreducible: Vec<[u32; 3]> = (0..4u32)
            .map(|i| [i & 1, (i >> 1) & 1, 1])
            .filter(|c| (0..2u32).all(|x| (c[0] + c[1] * x + c[2] * x * x) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![[1, 1, 1]]);
        let k = FieldCtx::new(2, 2).unwrap();
        assert_eq!(k.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn non_prime_characteristic() {
        assert!(matches!(FieldCtx::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldCtx::new(2, 17), Err(Error::TooLarge { .. })));
        assert!(FieldCtx::new(2, 16).is_ok());
    }

    #[test]
    fn small_examples() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f5.inv(f5.elem(4).unwrap()).unwrap().code(), 4);
        let f4 = FieldCtx::new(2, 2).unwrap();
        let t = f4.elem(2).unwrap();
        assert_eq!(f4.mul(t, t).code(), 3);
        assert!(matches!(f4.inv(FieldElem::ZERO), Err(Error::DivisionByZero)));
        assert!(matches!(f4.div(t, FieldElem::ZERO), Err(Error::DivisionByZero)));
        assert_eq!(
            f4.arith(ArithOp::Pow, t, f4.elem(3).unwrap()).unwrap(),
            FieldElem::ONE
        );
    }

    #[test]
    fn enumeration_order() {
        for (q, len) in [(3u64, 3usize), (4, 4), (5, 5)] {
            let k = FieldCtx::with_order(q).unwrap();
            let elems: Vec<u32> = k.elements().map(FieldElem::code).collect();
            assert_eq!(elems.len(), len);
            assert_eq!(elems, (0..len as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let k = FieldCtx::with_order(q).unwrap();
            let els: Vec<FieldElem> = k.elements().collect();
            for &a in &els {
                assert_eq!(k.add(a, k.neg(a)), FieldElem::ZERO);
                assert_eq!(k.pow(a, q), a, "Frobenius fixes {a} in GF({q})");
                if !a.is_zero() {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), FieldElem::ONE);
                }
                for &b in &els {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for &c in &els {
                        assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_sampled_large_fields() {
        for (p, e) in [(2u64, 16u32), (3, 10), (251, 2), (65521, 1)] {
            let k = FieldCtx::new(p, e).unwrap();
            let q = k.order() as u64;
            for code in (0..k.order()).step_by((k.order() / 97).max(1) as usize) {
                let a = k.elem(code).unwrap();
                assert_eq!(k.pow(a, q), a);
                // Multiplication table agrees with the schoolbook product.
                let b = k.elem((code * 7 + 3) % k.order()).unwrap();
                let slow = slow_mul(a.code(), b.code(), k.0.p, k.0.e, &k.0.modulus);
                assert_eq!(k.mul(a, b).code(), slow);
            }
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = FieldCtx::new(3, 3).unwrap();
        let b = FieldCtx::new(3, 3).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.mul(x, y), b.mul(x, y));
                assert_eq!(a.add(x, y), b.add(x, y));
            }
        }
    }

    #[test]
    fn parse_field_strings() {
        assert_eq!("GF(5)".parse::<FieldCtx>().unwrap().order(), 5);
        assert_eq!("GF(2^3)".parse::<FieldCtx>().unwrap().order(), 8);
        assert_eq!("GF(9)".parse::<FieldCtx>().unwrap().degree(), 2);
        assert!("GF(6)".parse::<FieldCtx>().is_err());
        assert!("F(5)".parse::<FieldCtx>().is_err());
    }
}
