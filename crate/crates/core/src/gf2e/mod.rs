//! GF(16) arithmetic and the extension fields GF(16^m) used for root finding.
//!
//! Elements of GF(16) are 4-bit vectors in the basis `{1, w, w^2, w^3}` with
//! `w^4 = w + 1`.

mod ext;

pub use ext::{nth_root, ExtElem, ExtField};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const MODULUS: u8 = 0b1_0011;

const fn build_tables() -> ([u8; 16], [u8; 16]) {
    let mut exp = [0u8; 16];
    let mut log = [0u8; 16];
    let mut x: u8 = 1;
    let mut t = 0;
    while t < 15 {
        exp[t] = x;
        log[x as usize] = t as u8;
        x <<= 1;
        if x & 0x10 != 0 {
            x ^= MODULUS;
        }
        t += 1;
    }
    exp[15] = 1;
    (exp, log)
}

const TABLES: ([u8; 16], [u8; 16]) = build_tables();
const EXP: [u8; 16] = TABLES.0;
const LOG: [u8; 16] = TABLES.1;

const fn build_mul() -> [[u8; 16]; 16] {
    let mut m = [[0u8; 16]; 16];
    let mut a = 1;
    while a < 16 {
        let mut b = 1;
        while b < 16 {
            m[a][b] = EXP[(LOG[a] as usize + LOG[b] as usize) % 15];
            b += 1;
        }
        a += 1;
    }
    m
}

/// Full 16x16 product table, indexed by raw bit patterns.
pub const MUL: [[u8; 16]; 16] = build_mul();

/// An element of GF(16).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F16(u8);

impl F16 {
    pub const ZERO: F16 = F16(0);
    pub const ONE: F16 = F16(1);
    /// The primitive element `w`.
    pub const W: F16 = F16(2);

    /// Builds an element from its low four bits.
    pub const fn from_bits(bits: u8) -> F16 {
        F16(bits & 0xf)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// `w^e`, with `e` taken mod 15.
    pub const fn pow_w(e: u64) -> F16 {
        F16(EXP[(e % 15) as usize])
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Discrete log base `w`, `None` for zero.
    pub fn log(self) -> Option<u8> {
        (self.0 != 0).then(|| LOG[self.0 as usize])
    }

    pub fn inv(self) -> Option<F16> {
        self.log().map(|t| F16(EXP[(15 - t as usize) % 15]))
    }

    pub fn pow(self, e: u64) -> F16 {
        match self.log() {
            None if e == 0 => F16::ONE,
            None => F16::ZERO,
            Some(t) => F16::pow_w(t as u64 * (e % 15)),
        }
    }

    /// Frobenius conjugation `a -> a^4`.
    pub fn conj(self) -> F16 {
        self.pow(4)
    }

    /// All sixteen elements in bit order.
    pub fn all() -> impl Iterator<Item = F16> {
        (0..16u8).map(F16)
    }

    /// Sort key used for canonical orderings: `0 -> 0`, `w^t -> t + 1`.
    pub fn order_key(self) -> u8 {
        self.log().map_or(0, |t| t + 1)
    }
}

pub fn f16_add(a: F16, b: F16) -> F16 {
    a + b
}

pub fn f16_mul(a: F16, b: F16) -> F16 {
    a * b
}

pub fn f16_conj(a: F16) -> F16 {
    a.conj()
}

impl std::ops::Add for F16 {
    type Output = F16;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
    fn add(self, rhs: F16) -> F16 {
        F16(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for F16 {
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: F16) {
        self.0 ^= rhs.0;
    }
}

impl std::ops::Sub for F16 {
    type Output = F16;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
    fn sub(self, rhs: F16) -> F16 {
        F16(self.0 ^ rhs.0)
    }
}

impl std::ops::Mul for F16 {
    type Output = F16;
    #[inline]
    fn mul(self, rhs: F16) -> F16 {
        F16(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl std::ops::MulAssign for F16 {
    #[inline]
    fn mul_assign(&mut self, rhs: F16) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for F16 {
    fn sum<I: Iterator<Item = F16>>(iter: I) -> F16 {
        iter.fold(F16::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for F16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => f.write_str("0"),
            Some(0) => f.write_str("1"),
            Some(1) => f.write_str("w"),
            Some(t) => write!(f, "w^{t}"),
        }
    }
}

impl fmt::Debug for F16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a GF(16) element: {0:?}")]
pub struct ParseF16Error(pub String);

impl FromStr for F16 {
    type Err = ParseF16Error;

    /// Accepts `0`, `1`, `w`, `w^e` and `w^{e}`.
    fn from_str(s: &str) -> Result<F16, ParseF16Error> {
        let err = || ParseF16Error(s.to_string());
        let t = s.trim();
        match t {
            "0" => return Ok(F16::ZERO),
            "1" => return Ok(F16::ONE),
            "w" => return Ok(F16::W),
            _ => {}
        }
        let e = t.strip_prefix("w^").ok_or_else(err)?;
        let e = e.trim_start_matches('{').trim_end_matches('}');
        let e: u64 = e.parse().map_err(|_| err())?;
        Ok(F16::pow_w(e))
    }
}

impl Serialize for F16 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for F16 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<F16, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: u64) -> F16 {
        F16::pow_w(t)
    }

    #[test]
    fn add_examples() {
        assert_eq!(F16::ZERO + w(3), w(3));
        assert_eq!(F16::W + F16::W, F16::ZERO);
        assert_eq!(w(1) + w(4), F16::ONE);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(w(3) * w(12), F16::ONE);
        assert_eq!(w(5) * w(6), w(11));
        assert_eq!(F16::ZERO * w(7), F16::ZERO);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(F16::ONE.conj(), F16::ONE);
        assert_eq!(F16::W.conj(), w(4));
        assert_eq!(w(5).conj(), w(5));
    }

    // independent shift-and-reduce multiplication
    fn slow_mul(a: u8, b: u8) -> u8 {
        let mut acc = 0u8;
        let mut a = a;
        for i in 0..4 {
            if b >> i & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if a & 0x10 != 0 {
                a ^= MODULUS;
            }
        }
        acc
    }

    #[test]
    fn table_matches_schoolbook() {
        for a in 0..16u8 {
            for b in 0..16u8 {
                assert_eq!(MUL[a as usize][b as usize], slow_mul(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn modulus_and_order() {
        assert_eq!(w(4), w(1) + F16::ONE);
        let mut x = F16::ONE;
        for t in 1..=15 {
            x *= F16::W;
            assert_eq!(x == F16::ONE, t == 15);
        }
    }

    #[test]
    fn exponent_table_exhaustive() {
        for s in 0..15 {
            for t in 0..15 {
                assert_eq!(w(s) * w(t), w((s + t) % 15));
            }
        }
    }

    #[test]
    fn inverse_and_frobenius_exhaustive() {
        for a in F16::all() {
            assert_eq!(a.conj().conj(), a);
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F16::ONE);
                assert_eq!(a.inv().unwrap(), a.pow(14));
            }
        }
    }

    #[test]
    fn display_roundtrip() {
        assert_eq!(F16::ZERO.to_string(), "0");
        assert_eq!(F16::ONE.to_string(), "1");
        assert_eq!(F16::W.to_string(), "w");
        assert_eq!(w(14).to_string(), "w^14");
        for a in F16::all() {
            assert_eq!(a.to_string().parse::<F16>().unwrap(), a);
        }
        assert_eq!("w^{13}".parse::<F16>().unwrap(), w(13));
        assert_eq!("w^15".parse::<F16>().unwrap(), F16::ONE);
        assert!("v".parse::<F16>().is_err());
    }
}
