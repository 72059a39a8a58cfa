//! Dense univariate polynomials in `t` over a [`FieldCtx`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Coefficients lowest degree first, without trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

/// Canonical order: degree first, then coefficient codes lowest degree first.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![FieldElem::ONE] }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Poly { coeffs: vec![FieldElem::ZERO, FieldElem::ONE] }
    }

    pub fn constant(c: FieldElem) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: FieldElem, deg: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_codes(k: &FieldCtx, codes: &[u32]) -> Result<Self> {
        let coeffs = codes.iter().map(|&c| k.elem(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElem::ONE
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for sizing.
    pub(crate) fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElem::ONE
    }

    /// Largest `r` with `t^r` dividing `self`; zero for the zero polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn add(&self, o: &Poly, k: &FieldCtx) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| k.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Poly, k: &FieldCtx) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| k.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self, k: &FieldCtx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| k.neg(c)).collect())
    }

    pub fn scale(&self, c: FieldElem, k: &FieldCtx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    pub fn mul(&self, o: &Poly, k: &FieldCtx) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, n: usize, k: &FieldCtx) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// Multiplies by `t^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElem::ZERO; n];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Euclidean division.
    pub fn divrem(&self, d: &Poly, k: &FieldCtx) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = k.inv(d.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElem::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let f = k.mul(c, inv_lead);
            quot[i - dd] = f;
            for (j, &b) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = k.sub(rem[idx], k.mul(f, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, d: &Poly, k: &FieldCtx) -> Result<Poly> {
        Ok(self.divrem(d, k)?.1)
    }

    /// Quotient of an exact division.
    pub fn div_exact(&self, d: &Poly, k: &FieldCtx) -> Result<Poly> {
        let (q, r) = self.divrem(d, k)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    pub fn monic(&self, k: &FieldCtx) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = k.inv(self.lead()).expect("nonzero leading coefficient");
        self.scale(inv, k)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Poly, k: &FieldCtx) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b, k).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn derivative(&self, k: &FieldCtx) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| k.mul(k.from_int(i as i64), c))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly, k: &FieldCtx) -> Result<Poly> {
        let mut base = self.rem(m, k)?;
        let mut acc = Poly::one().rem(m, k)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, k).rem(m, k)?;
            }
            base = base.mul(&base, k).rem(m, k)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Inverse of the Frobenius `u(t) -> u(t)^p`; requires every exponent
    /// with a nonzero coefficient to be a multiple of `p`.
    pub fn pth_root(&self, k: &FieldCtx) -> Poly {
        let p = k.characteristic() as usize;
        debug_assert!(self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % p == 0 || c.is_zero()));
        Poly::new(self.coeffs.iter().step_by(p).map(|&c| k.pth_root(c)).collect())
    }

    pub fn eval(&self, x: FieldElem, k: &FieldCtx) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// Irreducibility via `gcd(t^(q^i) - t, u) = 1` for `1 <= i <= deg/2`.
    pub fn is_irreducible(&self, k: &FieldCtx) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let q = k.order() as u64;
        let t = Poly::t();
        let mut h = t.rem(self, k).expect("nonzero modulus");
        for _ in 1..=n / 2 {
            h = h.powmod(q, self, k).expect("nonzero modulus");
            if !h.sub(&t, k).gcd(self, k).is_one() {
                return false;
            }
        }
        true
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.code() == 1 && i > 0 { String::new() } else { c.code().to_string() };
            let term = match i {
                0 => coef,
                1 => format!("{coef}{var}"),
                _ => format!("{coef}{var}^{i}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: &FieldCtx, c: &[u32]) -> Poly {
        Poly::from_codes(k, c).unwrap()
    }

    #[test]
    fn divrem_reconstructs() {
        let k = FieldCtx::new(5, 1).unwrap();
        let a = p(&k, &[1, 2, 3, 4, 1]);
        let b = p(&k, &[3, 0, 2]);
        let (q, r) = a.divrem(&b, &k).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&b, &k).add(&r, &k), a);
    }

    #[test]
    fn gcd_is_monic() {
        let k = FieldCtx::new(3, 1).unwrap();
        // (t+1)(t+2) and 2(t+1)
        let a = p(&k, &[2, 0, 1]);
        let b = p(&k, &[2, 2]);
        assert_eq!(a.gcd(&b, &k), p(&k, &[1, 1]));
    }

    #[test]
    fn irreducibility_matches_root_search_for_quadratics_and_cubics() {
        for q in [2u64, 3, 4, 5] {
            let k = FieldCtx::with_order(q).unwrap();
            let q = q as u32;
            for deg in 2..=3usize {
                for idx in 0..q.pow(deg as u32) {
                    let mut codes: Vec<u32> = (0..deg).map(|i| (idx / q.pow(i as u32)) % q).collect();
                    codes.push(1);
                    let u = p(&k, &codes);
                    let has_root = k.elements().any(|x| u.eval(x, &k).is_zero());
                    assert_eq!(u.is_irreducible(&k), !has_root, "{u} over GF({q})");
                }
            }
        }
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        let k = FieldCtx::new(3, 2).unwrap();
        let u = p(&k, &[4, 7, 1]);
        let cubed = u.pow(3, &k);
        assert_eq!(cubed.pth_root(&k), u);
    }

    #[test]
    fn display() {
        let k = FieldCtx::new(3, 1).unwrap();
        assert_eq!(p(&k, &[2, 0, 1]).to_string(), "t^2+2");
        assert_eq!(p(&k, &[0, 1]).to_string(), "t");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
