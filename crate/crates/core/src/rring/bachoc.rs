//! The triangular layer map `phi` on `u`-adic layers and the weight it carries.

use super::{psi_inv, Mat4F2, RElem};

/// With `psi_inv(r) = Y_1 + u Y_2 + ... + u^(k-1) Y_k`, returns
/// `(Y_k, Y_k + Y_(k-1), ..., Y_k + Y_2, Y_1 + ... + Y_k)`.
pub fn bachoc_phi(r: &RElem) -> Vec<Mat4F2> {
    let y = psi_inv(r).layers();
    let k = y.len();
    if k == 1 {
        return y;
    }
    let top = y[k - 1];
    let mut out = Vec::with_capacity(k);
    out.push(top);
    for i in (1..k - 1).rev() {
        out.push(top.add(y[i]));
    }
    out.push(y.iter().fold(Mat4F2::ZERO, |a, &b| a.add(b)));
    out
}

/// 0 on the zero matrix, 1 on invertible matrices, 2 on the rest.
pub fn default_base_weight(m: Mat4F2) -> u32 {
    match m.rank() {
        0 => 0,
        4 => 1,
        _ => 2,
    }
}

pub fn bachoc_weight_with(r: &RElem, base: impl Fn(Mat4F2) -> u32) -> u32 {
    bachoc_phi(r).into_iter().map(base).sum()
}

pub fn bachoc_weight(r: &RElem) -> u32 {
    bachoc_weight_with(r, default_base_weight)
}
