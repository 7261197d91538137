//! The ring `R = M4(F2[u]/u^k)`, seen both as 4x4 matrices and as
//! `F16[u, v]` coordinates with `v = 1 + e` and `w` realised by `omega`.
//!
//! An [`RElem`] stores right coefficients: `r = sum u^i v^j c_ij` with
//! `c_ij` in GF(16). The ring is not commutative, so the side matters;
//! scalars multiplied on the right act coordinate-wise.

mod bachoc;
mod gray;
mod mat;

pub use bachoc::{bachoc_phi, bachoc_weight, bachoc_weight_with, default_base_weight};
pub use gray::{lee_weight, theta, theta_inv};
pub use mat::{upoly_mul, Mat4F2, MatForm, E, OMEGA, V};

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2e::F16;

/// Largest supported nilpotency index.
pub const MAX_K: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("mismatched nilpotency indices k = {0} and k = {1}")]
    KMismatch(usize, usize),
    #[error("k = {0} outside 1..={MAX_K}")]
    BadK(usize),
    #[error("basis u^i V^j Omega^l is dependent for k = {k} (rank {rank})")]
    Dependent { k: usize, rank: usize },
    #[error("no s in 1..15 with E Omega E^-1 = Omega^s")]
    NoTwist,
}

/// Which conjugation `b -> b^4` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum ConjMode {
    /// `b * b * b * b` in the ring.
    #[serde(rename = "power")]
    RingPower,
    /// Frobenius on every GF(16) coordinate, monomials fixed.
    #[default]
    #[serde(rename = "coeff")]
    Coefficient,
}

impl fmt::Display for ConjMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjMode::RingPower => "power",
            ConjMode::Coefficient => "coeff",
        })
    }
}

/// Transport tables between coordinates and matrix bits for one `k`.
pub struct RingTables {
    pub k: usize,
    /// `vec(u^i V^j Omega^l)` at index `16i + 4j + l`.
    pub basis: Vec<u128>,
    to_mat: Vec<[u128; 256]>,
    to_coord: Vec<[u128; 256]>,
}

fn byte_tables(images: &[u128]) -> Vec<[u128; 256]> {
    images
        .chunks(8)
        .map(|chunk| {
            let mut t = [0u128; 256];
            for byte in 1..256usize {
                let low = byte.trailing_zeros() as usize;
                t[byte] = t[byte & (byte - 1)] ^ chunk.get(low).copied().unwrap_or(0);
            }
            t
        })
        .collect()
}

#[inline]
fn apply(tables: &[[u128; 256]], x: u128) -> u128 {
    let mut acc = 0;
    for (b, t) in tables.iter().enumerate() {
        acc ^= t[(x >> (8 * b)) as usize & 0xff];
    }
    acc
}

impl RingTables {
    fn build(k: usize) -> Result<RingTables, RingError> {
        let dim = 16 * k;
        let mut basis = Vec::with_capacity(dim);
        for i in 0..k {
            for j in 0..4 {
                for l in 0..4 {
                    let m = MatForm::u_pow(k, i)
                        .mul(&MatForm::from_f2(k, V.pow(j as u32)))
                        .mul(&MatForm::from_f2(k, OMEGA.pow(l as u32)));
                    basis.push(m.to_bits());
                }
            }
        }
        // Gauss-Jordan on (matrix bits | coordinate bits)
        let mut rows: Vec<(u128, u128)> = basis.iter().enumerate().map(|(b, &m)| (m, 1u128 << b)).collect();
        let mut inverse = vec![0u128; dim];
        let mut rank = 0;
        for bit in 0..dim {
            let Some(p) = (rank..dim).find(|&r| rows[r].0 >> bit & 1 == 1) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.0 >> bit & 1 == 1 {
                    row.0 ^= pivot.0;
                    row.1 ^= pivot.1;
                }
            }
            rank += 1;
        }
        if rank != dim {
            return Err(RingError::Dependent { k, rank });
        }
        for &(m, c) in &rows {
            inverse[m.trailing_zeros() as usize] = c;
        }
        Ok(RingTables { k, to_mat: byte_tables(&basis), to_coord: byte_tables(&inverse), basis })
    }

    /// F2-rank of the basis matrices (always `16k` once built).
    pub fn rank(&self) -> usize {
        crate::linalg::gf2_rank(&self.basis)
    }
}

static TABLES: [OnceLock<Result<RingTables, RingError>>; MAX_K + 1] = [const { OnceLock::new() }; MAX_K + 1];

/// Cached transport tables for `k`.
pub fn tables(k: usize) -> Result<&'static RingTables, RingError> {
    if !(1..=MAX_K).contains(&k) {
        return Err(RingError::BadK(k));
    }
    TABLES[k].get_or_init(|| RingTables::build(k)).as_ref().map_err(|e| e.clone())
}

fn tab(k: usize) -> &'static RingTables {
    tables(k).expect("valid k")
}

/// An element of R in coordinate form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RElem {
    k: u8,
    bits: u128,
}

impl RElem {
    pub fn zero(k: usize) -> RElem {
        assert!((1..=MAX_K).contains(&k), "k = {k} outside 1..={MAX_K}");
        RElem { k: k as u8, bits: 0 }
    }

    pub fn one(k: usize) -> RElem {
        RElem::scalar(k, F16::ONE)
    }

    /// A GF(16) scalar at `u^0 v^0`.
    pub fn scalar(k: usize, c: F16) -> RElem {
        RElem::monomial(k, 0, 0, c)
    }

    /// `u^i v^j c`; zero once `i >= k` or `j >= 4`.
    pub fn monomial(k: usize, i: usize, j: usize, c: F16) -> RElem {
        let mut r = RElem::zero(k);
        if i < k && j < 4 {
            r.set(i, j, c);
        }
        r
    }

    pub fn u(k: usize) -> RElem {
        RElem::monomial(k, 1, 0, F16::ONE)
    }

    pub fn v(k: usize) -> RElem {
        RElem::monomial(k, 0, 1, F16::ONE)
    }

    pub fn omega(k: usize) -> RElem {
        RElem::scalar(k, F16::W)
    }

    /// Raw coordinate bits: bit `l` of `c_ij` at index `16i + 4j + l`.
    pub fn from_bits(k: usize, bits: u128) -> RElem {
        let mut r = RElem::zero(k);
        r.bits = if 16 * k == 128 { bits } else { bits & ((1u128 << (16 * k)) - 1) };
        r
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn coeff(&self, i: usize, j: usize) -> F16 {
        F16::from_bits((self.bits >> (16 * i + 4 * j)) as u8)
    }

    pub fn set(&mut self, i: usize, j: usize, c: F16) {
        let sh = 16 * i + 4 * j;
        self.bits = (self.bits & !(0xfu128 << sh)) | ((c.bits() as u128) << sh);
    }

    /// Coefficients `d_1 .. d_4k` with `d_(4i+j+1)` the coefficient of `u^i v^j`.
    pub fn flat(&self) -> Vec<F16> {
        (0..4 * self.k()).map(|t| F16::from_bits((self.bits >> (4 * t)) as u8)).collect()
    }

    pub fn from_flat(k: usize, d: &[F16]) -> RElem {
        assert_eq!(d.len(), 4 * k);
        let bits = d.iter().enumerate().fold(0u128, |acc, (t, c)| acc | (c.bits() as u128) << (4 * t));
        RElem::from_bits(k, bits)
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn add(&self, o: &RElem) -> RElem {
        debug_assert_eq!(self.k, o.k);
        RElem { k: self.k, bits: self.bits ^ o.bits }
    }

    /// Product, panicking on mismatched `k`. See [`r_mul`] for the checked form.
    pub fn mul(&self, o: &RElem) -> RElem {
        r_mul(self, o).expect("same k")
    }

    /// Right multiplication by a scalar: coordinate-wise.
    pub fn mul_scalar(&self, c: F16) -> RElem {
        let mut r = RElem::zero(self.k());
        for t in 0..4 * self.k() {
            let d = F16::from_bits((self.bits >> (4 * t)) as u8) * c;
            r.bits |= (d.bits() as u128) << (4 * t);
        }
        r
    }

    pub fn pow(&self, e: u32) -> RElem {
        (0..e).fold(RElem::one(self.k()), |acc, _| acc.mul(self))
    }

    /// True when the matrix form is invertible.
    pub fn is_unit(&self) -> bool {
        psi_inv(self).layer(0).is_invertible()
    }

    /// Every element for a given `k` (only sensible for `k = 1`).
    pub fn all(k: usize) -> impl Iterator<Item = RElem> {
        (0..1u128 << (16 * k)).map(move |b| RElem::from_bits(k, b))
    }

    pub fn random<R: rand::Rng>(k: usize, rng: &mut R) -> RElem {
        RElem::from_bits(k, rng.gen())
    }
}

impl std::ops::Add for RElem {
    type Output = RElem;
    fn add(self, rhs: RElem) -> RElem {
        RElem::add(&self, &rhs)
    }
}

impl std::ops::Mul for RElem {
    type Output = RElem;
    fn mul(self, rhs: RElem) -> RElem {
        RElem::mul(&self, &rhs)
    }
}

pub fn psi_inv(r: &RElem) -> MatForm {
    let t = tab(r.k());
    MatForm::from_bits(r.k(), apply(&t.to_mat, r.bits))
}

pub fn psi(m: &MatForm) -> RElem {
    let t = tab(m.k());
    RElem::from_bits(m.k(), apply(&t.to_coord, m.to_bits()))
}

pub fn r_mul(a: &RElem, b: &RElem) -> Result<RElem, RingError> {
    if a.k != b.k {
        return Err(RingError::KMismatch(a.k(), b.k()));
    }
    Ok(psi(&psi_inv(a).mul(&psi_inv(b))))
}

/// The `s` with `E Omega E^-1 = Omega^s`.
pub fn twist_exponent() -> Result<u32, RingError> {
    static S: OnceLock<Result<u32, RingError>> = OnceLock::new();
    S.get_or_init(|| {
        let conj = E.mul(OMEGA).mul(E.pow(3));
        (1..15).find(|&s| OMEGA.pow(s) == conj).ok_or(RingError::NoTwist)
    })
    .clone()
}

pub fn r_conj(r: &RElem, mode: ConjMode) -> RElem {
    match mode {
        ConjMode::RingPower => r.pow(4),
        ConjMode::Coefficient => {
            let d: Vec<F16> = r.flat().into_iter().map(|c| c.conj()).collect();
            RElem::from_flat(r.k(), &d)
        }
    }
}

pub(crate) fn monomial_str(i: usize, j: usize) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("u".to_string()),
        _ => parts.push(format!("u^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("v".to_string()),
        _ => parts.push(format!("v^{j}")),
    }
    parts.join("*")
}

impl fmt::Display for RElem {
    /// Monomial first, then its right coefficient: `v^3*w^3 + u*v + w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for i in (0..self.k()).rev() {
            for j in (0..4).rev() {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                let m = monomial_str(i, j);
                terms.push(match (m.is_empty(), c == F16::ONE) {
                    (true, _) => c.to_string(),
                    (false, true) => m,
                    (false, false) => format!("{m}*{c}"),
                });
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RElem[k={}]({self})", self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn psi_inv_examples() {
        for k in 1..=4 {
            assert_eq!(psi_inv(&RElem::one(k)), MatForm::identity(k));
            assert_eq!(psi_inv(&RElem::omega(k)), MatForm::from_f2(k, OMEGA));
            assert_eq!(psi_inv(&RElem::v(k)), MatForm::from_f2(k, Mat4F2::IDENTITY.add(E)));
        }
    }

    #[test]
    fn psi_examples() {
        for k in 1..=4 {
            assert_eq!(psi(&MatForm::identity(k)), RElem::one(k));
            assert_eq!(psi(&MatForm::zero(k)), RElem::zero(k));
            assert_eq!(psi(&MatForm::from_f2(k, E)), RElem::one(k) + RElem::v(k));
        }
    }

    #[test]
    fn basis_has_full_rank() {
        for k in 1..=MAX_K {
            assert_eq!(tables(k).unwrap().rank(), 16 * k);
        }
        assert_eq!(tables(0).err(), Some(RingError::BadK(0)));
    }

    #[test]
    fn mul_examples() {
        let k = 2;
        assert!((RElem::u(k) * RElem::u(k)).is_zero());
        assert!((RElem::v(1) * RElem::v(1).pow(3)).is_zero());
        let (v, w) = (RElem::v(1), RElem::omega(1));
        assert_ne!(v * w, w * v);
        assert_eq!(r_mul(&RElem::u(2), &RElem::u(3)), Err(RingError::KMismatch(2, 3)));
    }

    #[test]
    fn twist_is_a_frobenius_power() {
        let s = twist_exponent().unwrap();
        assert!([2, 4, 8].contains(&s));
        assert_eq!(s.pow(4) % 15, 1);
        // conjugating by E four times fixes Omega
        let mut m = OMEGA;
        for _ in 0..4 {
            m = E.mul(m).mul(E.pow(3));
        }
        assert_eq!(m, OMEGA);
    }

    #[test]
    fn v_omega_commutation() {
        // v w = w^s v + (w + w^s)
        let s = twist_exponent().unwrap() as u64;
        for k in 1..=3 {
            let (v, w) = (RElem::v(k), RElem::omega(k));
            let ws = RElem::scalar(k, F16::pow_w(s));
            let corr = RElem::scalar(k, F16::W + F16::pow_w(s));
            assert_eq!(v * w, ws * v + corr);
        }
    }

    #[test]
    fn ring_axioms_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 1..=4 {
            for _ in 0..200 {
                let a = RElem::random(k, &mut rng);
                let b = RElem::random(k, &mut rng);
                let c = RElem::random(k, &mut rng);
                assert_eq!((a * b) * c, a * (b * c));
                assert_eq!(a * (b + c), a * b + a * c);
                assert_eq!((a + b) * c, a * c + b * c);
                assert_eq!(psi(&psi_inv(&a)), a);
                assert_eq!(a.mul_scalar(F16::pow_w(7)), a * RElem::scalar(k, F16::pow_w(7)));
            }
        }
    }

    #[test]
    fn conj_examples() {
        for mode in [ConjMode::RingPower, ConjMode::Coefficient] {
            assert_eq!(r_conj(&RElem::one(2), mode), RElem::one(2));
            assert_eq!(r_conj(&RElem::omega(2), mode), RElem::scalar(2, F16::pow_w(4)));
        }
        assert!(r_conj(&RElem::v(1), ConjMode::RingPower).is_zero());
        assert_eq!(r_conj(&RElem::v(1), ConjMode::Coefficient), RElem::v(1));
    }

    #[test]
    fn display() {
        let k = 2;
        let r = RElem::monomial(k, 0, 3, F16::pow_w(3)) + RElem::u(k) * RElem::v(k) + RElem::omega(k);
        assert_eq!(r.to_string(), "u*v + v^3*w^3 + w");
        assert_eq!(RElem::zero(1).to_string(), "0");
        assert_eq!(RElem::one(1).to_string(), "1");
    }
}
