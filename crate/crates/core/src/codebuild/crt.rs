use serde::Serialize;

use super::LinearCodeF16;
use crate::genexpr::RPoly;
use crate::linalg::RowSpace;
use crate::poly::{factor_xn_minus_1, hat, poly_mul_mod, F16Poly, PolyError};

/// Idempotents `e_r = f_r hat * (f_r hat^-1 mod f_r)` of `F16[x]/(x^n - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrtReport {
    pub n: usize,
    #[serde(serialize_with = "ser_polys")]
    pub factors: Vec<F16Poly>,
    #[serde(serialize_with = "ser_polys")]
    pub idempotents: Vec<F16Poly>,
    pub sum_is_one: bool,
    pub orthogonal: bool,
    pub idempotent: bool,
}

fn ser_polys<S: serde::Serializer>(ps: &[F16Poly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

impl CrtReport {
    pub fn ok(&self) -> bool {
        self.sum_is_one && self.orthogonal && self.idempotent
    }
}

pub fn crt_decompose(n: usize) -> Result<CrtReport, PolyError> {
    let fs = factor_xn_minus_1(n)?;
    let m = F16Poly::xn_minus_1(n);
    let mut idempotents = Vec::with_capacity(fs.len());
    for f in &fs.factors {
        let h = hat(f, n)?;
        let inv = h.rem(f)?.inv_mod(f).expect("hat is coprime to its factor");
        idempotents.push(poly_mul_mod(&h, &inv, &m)?);
    }
    let sum = idempotents.iter().fold(F16Poly::zero(), |a, e| a.add(e));
    let mut orthogonal = true;
    let mut idempotent = true;
    for (r, a) in idempotents.iter().enumerate() {
        for (s, b) in idempotents.iter().enumerate() {
            let p = poly_mul_mod(a, b, &m)?;
            match r == s {
                true => idempotent &= p == *a,
                false => orthogonal &= p.is_zero(),
            }
        }
    }
    Ok(CrtReport { n, factors: fs.factors, idempotents, sum_is_one: sum.is_one(), orthogonal, idempotent })
}

/// Dimensions of the components `C e_r`, one per factor.
///
/// `e_r` has GF(16) coefficients, which do not commute with `v`, so the
/// components are taken on the right, where `C` is closed. `C e_r` is the
/// GF(16)-span of `b e_r` over a basis `b` of `C`; it is not itself closed
/// under right multiplication by `v`.
pub fn crt_component_dims(code: &LinearCodeF16, report: &CrtReport) -> Vec<usize> {
    let (n, k) = (code.n, code.k);
    let basis = code.basis_polys();
    report
        .idempotents
        .iter()
        .map(|e| {
            let e = RPoly::from_f16poly(n, k, e);
            RowSpace::from_rows(code.length(), basis.iter().map(|b| b.mul(&e).gray_image())).dim()
        })
        .collect()
}
