use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::F16;
use crate::poly::{prime_factors, F16Poly};

/// Seed used by [`nth_root`] when searching for extension moduli.
pub const DEFAULT_EXT_SEED: u64 = 0x0016_1616;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtError {
    #[error("extension degree {0} outside 1..=12")]
    Degree(usize),
    #[error("n = {0} must be odd")]
    EvenOrder(usize),
}

/// GF(16^m) realised as GF(16)[y] / g(y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    pub m: usize,
    pub modulus: F16Poly,
    pub seed: u64,
}

/// An element of an [`ExtField`], reduced modulo its modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElem(F16Poly);

impl ExtElem {
    pub fn coeffs(&self) -> &[F16] {
        self.0.coeffs()
    }
}

impl ExtField {
    /// Finds a monic irreducible modulus of degree `m` by seeded random search.
    pub fn build(m: usize, seed: u64) -> Result<ExtField, ExtError> {
        if !(1..=12).contains(&m) {
            return Err(ExtError::Degree(m));
        }
        if m == 1 {
            return Ok(ExtField { m, modulus: F16Poly::x(), seed });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut c: Vec<F16> = (0..m).map(|_| F16::from_bits(rng.gen())).collect();
            c.push(F16::ONE);
            let g = F16Poly::new(c);
            if g.is_irreducible() {
                return Ok(ExtField { m, modulus: g, seed });
            }
        }
    }

    /// `16^m`.
    pub fn size(&self) -> u128 {
        16u128.pow(self.m as u32)
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem(F16Poly::zero())
    }

    pub fn one(&self) -> ExtElem {
        self.embed(F16::ONE)
    }

    pub fn embed(&self, c: F16) -> ExtElem {
        ExtElem(F16Poly::constant(c).rem(&self.modulus).expect("modulus nonzero"))
    }

    /// The class of `y` (for `m = 1` this is zero).
    pub fn gen_y(&self) -> ExtElem {
        ExtElem(F16Poly::x().rem(&self.modulus).expect("modulus nonzero"))
    }

    pub fn from_coeffs(&self, c: Vec<F16>) -> ExtElem {
        ExtElem(F16Poly::new(c).rem(&self.modulus).expect("modulus nonzero"))
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(a.0.add(&b.0))
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(a.0.mul(&b.0).rem(&self.modulus).expect("modulus nonzero"))
    }

    pub fn pow(&self, a: &ExtElem, e: u128) -> ExtElem {
        ExtElem(a.0.pow_mod(e, &self.modulus).expect("modulus nonzero"))
    }

    pub fn is_one(&self, a: &ExtElem) -> bool {
        a.0.is_one()
    }

    /// The element as a GF(16) scalar, if it lies in the base field.
    pub fn to_base(&self, a: &ExtElem) -> Option<F16> {
        match a.0.deg() {
            None => Some(F16::ZERO),
            Some(0) => Some(a.0.coeff(0)),
            _ => None,
        }
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> ExtElem {
        self.from_coeffs((0..self.m).map(|_| F16::from_bits(rng.gen())).collect())
    }

    /// True when `a` has multiplicative order exactly `n`.
    pub fn has_order(&self, a: &ExtElem, n: u128) -> bool {
        self.is_one(&self.pow(a, n))
            && prime_factors(n as u64).into_iter().all(|p| !self.is_one(&self.pow(a, n / p as u128)))
    }
}

/// Multiplicative order of 16 modulo `n` (odd `n`).
pub fn ord_16(n: usize) -> usize {
    if n == 1 {
        return 1;
    }
    let mut t = 16 % n;
    let mut m = 1;
    while t != 1 {
        t = t * 16 % n;
        m += 1;
    }
    m
}

/// A primitive `n`-th root of unity in GF(16^m), `m = ord_n(16)`.
pub fn nth_root(n: usize) -> Result<(ExtField, ExtElem), ExtError> {
    nth_root_seeded(n, DEFAULT_EXT_SEED)
}

pub fn nth_root_seeded(n: usize, seed: u64) -> Result<(ExtField, ExtElem), ExtError> {
    if n.is_multiple_of(2) {
        return Err(ExtError::EvenOrder(n));
    }
    let m = ord_16(n);
    let field = ExtField::build(m, seed)?;
    if m == 1 {
        // w generates GF(16)*, so w^(15/n) has order n directly
        let rho = field.embed(F16::pow_w((15 / n) as u64));
        return Ok((field, rho));
    }
    let cofactor = (field.size() - 1) / n as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    loop {
        let gamma = field.random(&mut rng);
        if gamma == field.zero() {
            continue;
        }
        let rho = field.pow(&gamma, cofactor);
        if field.has_order(&rho, n as u128) {
            return Ok((field, rho));
        }
    }
}
