//! Homogeneous binary forms in `x`, `y` over GF(q).
//!
//! A form of degree `n` stores the coefficient of `x^(n-j) y^j` at position
//! `j`. Dehomogenizing with `x = 1` (the chart `t = y/x`) turns position `j`
//! into the coefficient of `t^j`, so form multiplication is polynomial
//! multiplication of the coefficient vectors and the form `y` carries the
//! label `t`.

pub mod factor;

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::poly::Poly;

pub use factor::{univ_factor, univ_factor_seeded};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinForm {
    field: FieldCtx,
    coeffs: Vec<FieldElem>,
}

/// Label of an irreducible form: `x` itself, or the homogenization of a
/// monic irreducible `u(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormLabel {
    X,
    Poly(Poly),
}

impl FormLabel {
    pub fn degree(&self) -> usize {
        match self {
            FormLabel::X => 1,
            FormLabel::Poly(u) => u.deg0(),
        }
    }

    /// The form `label^d`.
    pub fn power_form(&self, field: &FieldCtx, d: usize) -> BinForm {
        match self {
            FormLabel::X => BinForm::monomial(field, d, 0),
            FormLabel::Poly(u) => BinForm::homogenize(field, &u.pow(d, field), d * u.deg0()),
        }
    }

    /// Renders `label^d` as `X^2`, `t^3`, `(t+1)^2`, or just the label for `d = 1`.
    pub fn power_string(&self, d: usize) -> String {
        let base = self.to_string();
        if d == 1 {
            return base;
        }
        let atomic = match self {
            FormLabel::X => true,
            FormLabel::Poly(u) => u.term_count() == 1 && u.coeff(u.deg0()) == FieldElem::ONE && u.deg0() <= 1,
        };
        if atomic {
            format!("{base}^{d}")
        } else {
            format!("({base})^{d}")
        }
    }
}

impl fmt::Display for FormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormLabel::X => f.write_str("X"),
            FormLabel::Poly(u) => write!(f, "{u}"),
        }
    }
}

/// Factorization `f = scalar * prod label^mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormFactorization {
    pub scalar: FieldElem,
    pub factors: Vec<(FormLabel, usize)>,
}

impl BinForm {
    pub fn new(field: &FieldCtx, coeffs: Vec<FieldElem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a form of degree n has n+1 coefficients".into()));
        }
        Ok(BinForm { field: field.clone(), coeffs })
    }

    pub fn from_codes(field: &FieldCtx, codes: &[u32]) -> Result<Self> {
        let coeffs = codes.iter().map(|&c| field.elem(c)).collect::<Result<Vec<_>>>()?;
        BinForm::new(field, coeffs)
    }

    pub fn zero(field: &FieldCtx, degree: usize) -> Self {
        BinForm { field: field.clone(), coeffs: vec![FieldElem::ZERO; degree + 1] }
    }

    /// `x^i y^j`.
    pub fn monomial(field: &FieldCtx, i: usize, j: usize) -> Self {
        let mut f = BinForm::zero(field, i + j);
        f.coeffs[j] = FieldElem::ONE;
        f
    }

    pub fn x(field: &FieldCtx) -> Self {
        BinForm::monomial(field, 1, 0)
    }

    pub fn y(field: &FieldCtx) -> Self {
        BinForm::monomial(field, 0, 1)
    }

    /// The form of the given degree with `f(1, t) = u(t)`.
    pub fn homogenize(field: &FieldCtx, u: &Poly, degree: usize) -> Self {
        assert!(u.degree().is_none_or(|d| d <= degree), "degree too small to homogenize");
        let mut f = BinForm::zero(field, degree);
        for (j, &c) in u.coeffs().iter().enumerate() {
            f.coeffs[j] = c;
        }
        f
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `f(1, t)`.
    pub fn dehomogenize(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    fn check_field(&self, o: &BinForm) -> Result<()> {
        if self.field != o.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &BinForm) -> Result<BinForm> {
        self.check_field(o)?;
        if self.degree() != o.degree() {
            return Err(Error::InvalidArgument("adding forms of different degrees".into()));
        }
        let k = &self.field;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(&a, &b)| k.add(a, b)).collect();
        Ok(BinForm { field: k.clone(), coeffs })
    }

    pub fn scale(&self, c: FieldElem) -> BinForm {
        let k = &self.field;
        BinForm { field: k.clone(), coeffs: self.coeffs.iter().map(|&a| k.mul(a, c)).collect() }
    }

    pub fn mul(&self, o: &BinForm) -> Result<BinForm> {
        self.check_field(o)?;
        let prod = self.dehomogenize().mul(&o.dehomogenize(), &self.field);
        Ok(BinForm::homogenize(&self.field, &prod, self.degree() + o.degree()))
    }

    pub fn pow(&self, n: usize) -> BinForm {
        let mut acc = BinForm::monomial(&self.field, 0, 0);
        for _ in 0..n {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Exact quotient `self / g`.
    pub fn div_exact(&self, g: &BinForm) -> Result<BinForm> {
        self.check_field(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if g.degree() > self.degree() {
            return Err(Error::NotDivisible);
        }
        let qdeg = self.degree() - g.degree();
        let (quot, rem) = self.dehomogenize().divrem(&g.dehomogenize(), &self.field)?;
        if !rem.is_zero() || quot.degree().is_some_and(|d| d > qdeg) {
            return Err(Error::NotDivisible);
        }
        Ok(BinForm::homogenize(&self.field, &quot, qdeg))
    }

    /// `(d_x, d_y)`: the largest powers of `x` and `y` dividing the form.
    pub fn dxdy(&self) -> Result<(usize, usize)> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        let first = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        Ok((self.degree() - last, first))
    }

    pub fn factor(&self) -> Result<FormFactorization> {
        self.factor_seeded(factor::DEFAULT_SEED)
    }

    pub fn factor_seeded(&self, seed: u64) -> Result<FormFactorization> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let k = &self.field;
        let u = self.dehomogenize();
        let du = u.deg0();
        let scalar = u.lead();
        let mut factors = Vec::new();
        let mx = self.degree() - du;
        if mx > 0 {
            factors.push((FormLabel::X, mx));
        }
        if du > 0 {
            for (g, m) in univ_factor_seeded(&u.monic(k), k, seed)? {
                factors.push((FormLabel::Poly(g), m));
            }
        }
        Ok(FormFactorization { scalar, factors })
    }

    /// Parses a homogeneous polynomial such as `x^2+x*y`, `2xy-y^2` or `0`.
    /// Integer coefficients are reduced into the prime subfield. The zero
    /// form needs `degree` since its degree cannot be read off.
    pub fn parse(field: &FieldCtx, s: &str, degree: Option<usize>) -> Result<BinForm> {
        let terms = parse_terms(s)?;
        let mut deg: Option<usize> = degree;
        for &(_, i, j) in &terms {
            match deg {
                None => deg = Some(i + j),
                Some(d) if d != i + j => {
                    return Err(Error::Parse(format!("{s:?} is not homogeneous")));
                }
                _ => {}
            }
        }
        let deg = deg.ok_or_else(|| Error::Parse(format!("cannot infer the degree of {s:?}")))?;
        let mut f = BinForm::zero(field, deg);
        for (c, _, j) in terms {
            f.coeffs[j] = field.add(f.coeffs[j], field.from_int(c));
        }
        Ok(f)
    }
}

/// Terms `(coefficient, x-exponent, y-exponent)`; a bare `0` yields no terms.
fn parse_terms(s: &str) -> Result<Vec<(i64, usize, usize)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty form".into()));
    }
    let bad = || Error::Parse(format!("cannot parse form {s:?}"));
    let chars: Vec<char> = compact.chars().collect();
    let mut pos = 0;
    let mut out = Vec::new();
    let read_int = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            None
        } else {
            chars[start..*pos].iter().collect::<String>().parse().ok()
        }
    };
    while pos < chars.len() {
        let mut sign = 1i64;
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -1;
            }
            pos += 1;
        } else if !out.is_empty() {
            return Err(bad());
        }
        let mut coef = read_int(&mut pos).unwrap_or(1);
        let mut saw_number = pos > 0 && chars[pos - 1].is_ascii_digit();
        let (mut i, mut j) = (0usize, 0usize);
        let mut saw_var = false;
        while pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
            match chars[pos] {
                '*' => pos += 1,
                v @ ('x' | 'y') => {
                    pos += 1;
                    let mut e = 1usize;
                    if pos < chars.len() && chars[pos] == '^' {
                        pos += 1;
                        e = read_int(&mut pos).ok_or_else(bad)? as usize;
                    }
                    if v == 'x' {
                        i += e;
                    } else {
                        j += e;
                    }
                    saw_var = true;
                }
                c if c.is_ascii_digit() => {
                    let n = read_int(&mut pos).ok_or_else(bad)?;
                    coef *= n;
                    saw_number = true;
                }
                _ => return Err(bad()),
            }
        }
        if !saw_var && !saw_number {
            return Err(bad());
        }
        if !saw_var && coef == 0 && compact.len() == 1 {
            return Ok(Vec::new());
        }
        out.push((sign * coef, i, j));
    }
    Ok(out)
}

impl fmt::Display for BinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = n - j;
            let mut mono = String::new();
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            let term = if mono.is_empty() {
                c.code().to_string()
            } else if c.code() == 1 {
                mono
            } else {
                format!("{}{mono}", c.code())
            };
            terms.push(term);
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}
