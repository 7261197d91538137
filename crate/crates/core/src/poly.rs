//! Polynomials over GF(16), factorization of `x^n - 1`, reciprocals and conjugates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2e::{nth_root, F16};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("length n = {0} must be odd")]
    EvenLength(usize),
    #[error("{divisor} does not divide x^{n} - 1 (remainder {remainder})")]
    NotADivisor { divisor: F16Poly, n: usize, remainder: F16Poly },
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Polynomial over GF(16), lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F16Poly {
    coeffs: Vec<F16>,
}

impl F16Poly {
    pub fn zero() -> F16Poly {
        F16Poly { coeffs: Vec::new() }
    }

    pub fn one() -> F16Poly {
        F16Poly::constant(F16::ONE)
    }

    pub fn x() -> F16Poly {
        F16Poly::monomial(F16::ONE, 1)
    }

    pub fn constant(c: F16) -> F16Poly {
        F16Poly::new(vec![c])
    }

    pub fn monomial(c: F16, e: usize) -> F16Poly {
        let mut v = vec![F16::ZERO; e + 1];
        v[e] = c;
        F16Poly::new(v)
    }

    /// `x^n - 1` (which is `x^n + 1` in characteristic 2).
    pub fn xn_minus_1(n: usize) -> F16Poly {
        let mut v = vec![F16::ZERO; n + 1];
        v[0] = F16::ONE;
        v[n] += F16::ONE;
        F16Poly::new(v)
    }

    pub fn new(mut coeffs: Vec<F16>) -> F16Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        F16Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[F16] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> F16 {
        self.coeffs.get(i).copied().unwrap_or(F16::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [F16::ONE]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> F16 {
        self.coeffs.last().copied().unwrap_or(F16::ZERO)
    }

    pub fn scale(&self, c: F16) -> F16Poly {
        F16Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn monic(&self) -> F16Poly {
        match self.lead().inv() {
            Some(i) => self.scale(i),
            None => F16Poly::zero(),
        }
    }

    pub fn shift(&self, e: usize) -> F16Poly {
        if self.is_zero() {
            return F16Poly::zero();
        }
        let mut v = vec![F16::ZERO; e];
        v.extend_from_slice(&self.coeffs);
        F16Poly { coeffs: v }
    }

    pub fn eval(&self, x: F16) -> F16 {
        self.coeffs.iter().rev().fold(F16::ZERO, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &F16Poly) -> F16Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        F16Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &F16Poly) -> F16Poly {
        if self.is_zero() || other.is_zero() {
            return F16Poly::zero();
        }
        let mut v = vec![F16::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        F16Poly::new(v)
    }

    pub fn div_rem(&self, d: &F16Poly) -> Result<(F16Poly, F16Poly), PolyError> {
        let dd = d.deg().ok_or(PolyError::ZeroDivisor)?;
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        let Some(sd) = self.deg() else {
            return Ok((F16Poly::zero(), F16Poly::zero()));
        };
        if sd < dd {
            return Ok((F16Poly::zero(), self.clone()));
        }
        let mut q = vec![F16::ZERO; sd - dd + 1];
        for i in (dd..=sd).rev() {
            let c = r[i] * inv;
            if c.is_zero() {
                continue;
            }
            q[i - dd] = c;
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i - dd + j] += c * b;
            }
        }
        r.truncate(dd);
        Ok((F16Poly::new(q), F16Poly::new(r)))
    }

    pub fn rem(&self, d: &F16Poly) -> Result<F16Poly, PolyError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &F16Poly) -> F16Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &F16Poly, b: &F16Poly) -> (F16Poly, F16Poly, F16Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (F16Poly::one(), F16Poly::zero());
        let (mut t0, mut t1) = (F16Poly::zero(), F16Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("r1 nonzero");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.add(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.add(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().inv() {
            Some(i) => (r0.scale(i), s0.scale(i), t0.scale(i)),
            None => (r0, s0, t0),
        }
    }

    /// Inverse modulo `m`, if `gcd(self, m) = 1`.
    pub fn inv_mod(&self, m: &F16Poly) -> Option<F16Poly> {
        let (g, s, _) = F16Poly::ext_gcd(self, m);
        g.is_one().then(|| s.rem(m).expect("m nonzero"))
    }

    pub fn pow_mod(&self, mut e: u128, m: &F16Poly) -> Result<F16Poly, PolyError> {
        let mut base = self.rem(m)?;
        let mut acc = F16Poly::one().rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mul_mod(&acc, &base, m)?;
            }
            base = poly_mul_mod(&base, &base, m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Coefficient reversal `x^deg f * f(1/x)`; zero maps to zero.
    pub fn reciprocal(&self) -> F16Poly {
        F16Poly::new(self.coeffs.iter().rev().copied().collect())
    }

    /// Reciprocal normalized to be monic.
    pub fn reciprocal_monic(&self) -> F16Poly {
        self.reciprocal().monic()
    }

    /// Coefficient-wise Frobenius `c -> c^4`.
    pub fn conj(&self) -> F16Poly {
        F16Poly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// True when every coefficient lies in GF(2).
    pub fn is_binary(&self) -> bool {
        self.coeffs.iter().all(|c| c.bits() <= 1)
    }

    /// Rabin's test over GF(16).
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.deg() else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let f = self.monic();
        let x = F16Poly::x();
        // x^(16^i) mod f for i = 0..=d
        let mut frob = vec![x.clone()];
        for i in 0..d {
            let next = frob[i].pow_mod(16, &f).expect("f nonzero");
            frob.push(next);
        }
        if frob[d] != x.rem(&f).expect("f nonzero") {
            return false;
        }
        prime_factors(d as u64).into_iter().all(|p| frob[d / p as usize].add(&x).gcd(&f).is_one())
    }

    /// Canonical comparison: degree first, then coefficients from the top
    /// down with `0 < 1 < w < w^2 < ...`.
    pub fn canonical_cmp(&self, other: &F16Poly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            let a = self.coeffs.iter().rev().map(|c| c.order_key());
            let b = other.coeffs.iter().rev().map(|c| c.order_key());
            a.cmp(b)
        })
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn poly_mul_mod(a: &F16Poly, b: &F16Poly, modulus: &F16Poly) -> Result<F16Poly, PolyError> {
    if modulus.is_zero() {
        return Err(PolyError::ZeroDivisor);
    }
    a.mul(b).rem(modulus)
}

pub fn reciprocal(f: &F16Poly) -> F16Poly {
    f.reciprocal()
}

pub fn poly_conj(f: &F16Poly) -> F16Poly {
    f.conj()
}

/// `(x^n - 1) / p`, rejecting non-divisors.
pub fn hat(p: &F16Poly, n: usize) -> Result<F16Poly, PolyError> {
    let (q, r) = F16Poly::xn_minus_1(n).div_rem(p)?;
    if !r.is_zero() {
        return Err(PolyError::NotADivisor { divisor: p.clone(), n, remainder: r });
    }
    Ok(q)
}

/// The irreducible factors of `x^n - 1` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSet {
    pub n: usize,
    pub factors: Vec<F16Poly>,
}

impl FactorSet {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factor by 1-based index, as written `f_i`.
    pub fn get(&self, i: usize) -> Option<&F16Poly> {
        i.checked_sub(1).and_then(|i| self.factors.get(i))
    }

    pub fn product(&self) -> F16Poly {
        self.factors.iter().fold(F16Poly::one(), |acc, f| acc.mul(f))
    }
}

/// Cyclotomic cosets of multiplication by 16 on `Z_n`, each sorted, ordered by
/// smallest member.
pub fn cyclotomic_cosets(n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            c.push(t);
            t = t * 16 % n;
        }
        c.sort_unstable();
        out.push(c);
    }
    out
}

pub fn factor_xn_minus_1(n: usize) -> Result<FactorSet, PolyError> {
    if n.is_multiple_of(2) {
        return Err(PolyError::EvenLength(n));
    }
    let (field, rho) = nth_root(n).map_err(|_| PolyError::EvenLength(n))?;
    let mut factors = Vec::new();
    for coset in cyclotomic_cosets(n) {
        // product of (x - rho^s) over the coset, computed in GF(16^m)[x]
        let mut prod: Vec<_> = vec![field.one()];
        for &s in &coset {
            let root = field.pow(&rho, s as u128);
            let mut next = vec![field.zero(); prod.len() + 1];
            for (i, c) in prod.iter().enumerate() {
                next[i + 1] = field.add(&next[i + 1], c);
                let t = field.mul(c, &root);
                next[i] = field.add(&next[i], &t);
            }
            prod = next;
        }
        let coeffs = prod.iter().map(|c| field.to_base(c).expect("coset product has GF(16) coefficients")).collect();
        let f = F16Poly::new(coeffs);
        debug_assert!(f.is_irreducible());
        factors.push(f);
    }
    factors.sort_by(|a, b| a.canonical_cmp(b));
    Ok(FactorSet { n, factors })
}

impl fmt::Display for F16Poly {
    /// Descending terms, e.g. `x^3 + x + 1`, `w^3x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let xs = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            match (*c == F16::ONE, e) {
                (true, 0) => f.write_str("1")?,
                (true, _) => f.write_str(&xs)?,
                (false, _) => write!(f, "{c}{xs}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F16Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F16Poly({self})")
    }
}

impl FromStr for F16Poly {
    type Err = PolyError;

    /// Sum of terms `c`, `x^e`, `c x^e`, `c*x^e` with `c` a GF(16) literal.
    fn from_str(s: &str) -> Result<F16Poly, PolyError> {
        let err = |reason: &str| PolyError::Parse { text: s.to_string(), reason: reason.to_string() };
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        if cleaned.is_empty() {
            return Err(err("empty"));
        }
        let mut acc = F16Poly::zero();
        for term in cleaned.split('+') {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (cpart, xpart) = match term.find('x') {
                Some(i) => (&term[..i], Some(&term[i + 1..])),
                None => (term, None),
            };
            let cpart = cpart.trim_end_matches('*');
            let c =
                if cpart.is_empty() { F16::ONE } else { cpart.parse::<F16>().map_err(|_| err("bad coefficient"))? };
            let e = match xpart {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    rest.strip_prefix('^').and_then(|r| r.parse::<usize>().ok()).ok_or_else(|| err("bad exponent"))?
                }
            };
            acc = acc.add(&F16Poly::monomial(c, e));
        }
        Ok(acc)
    }
}

impl Serialize for F16Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for F16Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<F16Poly, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
