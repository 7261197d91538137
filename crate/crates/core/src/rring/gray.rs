//! The Gray map `theta: R -> GF(16)^(4k)` and the Lee weight it induces.

use super::RElem;
use crate::gf2e::F16;

/// `(d_L, d_(L-1)+d_L, ..., d_2+d_L, d_1+...+d_L)` with `L = 4k`.
pub fn theta(r: &RElem) -> Vec<F16> {
    let d = r.flat();
    let l = d.len();
    let last = d[l - 1];
    let mut out = Vec::with_capacity(l);
    out.push(last);
    for t in 1..l - 1 {
        out.push(d[l - 1 - t] + last);
    }
    out.push(d.iter().copied().sum());
    out
}

/// Inverse of [`theta`] by back-substitution.
pub fn theta_inv(k: usize, img: &[F16]) -> RElem {
    let l = 4 * k;
    assert_eq!(img.len(), l, "image length must be 4k");
    let mut d = vec![F16::ZERO; l];
    d[l - 1] = img[0];
    for t in 1..l - 1 {
        d[l - 1 - t] = img[t] + img[0];
    }
    d[0] = img[l - 1] + d[1..].iter().copied().sum();
    RElem::from_flat(k, &d)
}

/// Hamming weight of the Gray image.
pub fn lee_weight(r: &RElem) -> u32 {
    theta(r).iter().filter(|c| !c.is_zero()).count() as u32
}
