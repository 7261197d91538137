//! 4x4 matrices over GF(2) and over GF(2)[u]/u^k.

use std::fmt;

/// A 4x4 matrix over GF(2); bit `4r + c` holds entry `(r, c)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mat4F2(pub u16);

#[allow(clippy::should_implement_trait)]
impl Mat4F2 {
    pub const ZERO: Mat4F2 = Mat4F2(0);
    pub const IDENTITY: Mat4F2 = Mat4F2(0b1000_0100_0010_0001);

    pub fn from_rows(rows: [[u8; 4]; 4]) -> Mat4F2 {
        let mut b = 0u16;
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x & 1 == 1 {
                    b |= 1 << (4 * r + c);
                }
            }
        }
        Mat4F2(b)
    }

    pub fn get(self, r: usize, c: usize) -> bool {
        self.0 >> (4 * r + c) & 1 == 1
    }

    fn row(self, r: usize) -> u16 {
        self.0 >> (4 * r) & 0xf
    }

    pub fn add(self, o: Mat4F2) -> Mat4F2 {
        Mat4F2(self.0 ^ o.0)
    }

    pub fn mul(self, o: Mat4F2) -> Mat4F2 {
        let mut out = 0u16;
        for r in 0..4 {
            let mut acc = 0u16;
            for t in 0..4 {
                if self.get(r, t) {
                    acc ^= o.row(t);
                }
            }
            out |= acc << (4 * r);
        }
        Mat4F2(out)
    }

    pub fn pow(self, e: u32) -> Mat4F2 {
        (0..e).fold(Mat4F2::IDENTITY, |acc, _| acc.mul(self))
    }

    pub fn rank(self) -> u32 {
        let mut rows: Vec<u16> = (0..4).map(|r| self.row(r)).collect();
        let mut rank = 0;
        for bit in 0..4 {
            let Some(p) = (rank..4).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
            rows.swap(rank, p);
            for i in 0..4 {
                if i != rank && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank as u32
    }

    pub fn is_invertible(self) -> bool {
        self.rank() == 4
    }
}

impl fmt::Debug for Mat4F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..4 {
            let row: String = (0..4).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            if r > 0 {
                f.write_str("/")?;
            }
            f.write_str(&row)?;
        }
        Ok(())
    }
}

/// The matrix `e`.
pub const E: Mat4F2 = Mat4F2(0b1100_0011_0100_0001);
/// The matrix `omega`, a companion matrix of `x^4 + x + 1`.
pub const OMEGA: Mat4F2 = Mat4F2(0b0011_1000_0100_0010);
/// `v = 1 + e`.
pub const V: Mat4F2 = Mat4F2(E.0 ^ Mat4F2::IDENTITY.0);

/// Product of two elements of GF(2)[u]/u^k, stored as bit polynomials.
#[inline]
pub fn upoly_mul(a: u8, b: u8, k: usize) -> u8 {
    let mut acc = 0u16;
    for i in 0..8 {
        if b >> i & 1 == 1 {
            acc ^= (a as u16) << i;
        }
    }
    (acc & ((1u16 << k) - 1)) as u8
}

/// A 4x4 matrix over GF(2)[u]/u^k.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatForm {
    k: usize,
    ent: [[u8; 4]; 4],
}

impl MatForm {
    pub fn zero(k: usize) -> MatForm {
        MatForm { k, ent: [[0; 4]; 4] }
    }

    pub fn identity(k: usize) -> MatForm {
        MatForm::from_f2(k, Mat4F2::IDENTITY)
    }

    /// Embeds a GF(2) matrix in the `u^0` layer.
    pub fn from_f2(k: usize, m: Mat4F2) -> MatForm {
        MatForm::from_layers(k, &[m])
    }

    /// `sum_i u^i layers[i]`.
    pub fn from_layers(k: usize, layers: &[Mat4F2]) -> MatForm {
        let mut ent = [[0u8; 4]; 4];
        for (i, m) in layers.iter().enumerate().take(k) {
            for (r, row) in ent.iter_mut().enumerate() {
                for (c, e) in row.iter_mut().enumerate() {
                    if m.get(r, c) {
                        *e |= 1 << i;
                    }
                }
            }
        }
        MatForm { k, ent }
    }

    /// `u^i` times the identity.
    pub fn u_pow(k: usize, i: usize) -> MatForm {
        let mut m = MatForm::zero(k);
        if i < k {
            for r in 0..4 {
                m.ent[r][r] = 1 << i;
            }
        }
        m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, r: usize, c: usize) -> u8 {
        self.ent[r][c]
    }

    /// The GF(2) matrix of `u^i` coefficients.
    pub fn layer(&self, i: usize) -> Mat4F2 {
        let mut b = 0u16;
        for r in 0..4 {
            for c in 0..4 {
                if self.ent[r][c] >> i & 1 == 1 {
                    b |= 1 << (4 * r + c);
                }
            }
        }
        Mat4F2(b)
    }

    pub fn layers(&self) -> Vec<Mat4F2> {
        (0..self.k).map(|i| self.layer(i)).collect()
    }

    /// Bit vector with bit `16i + 4r + c` = coefficient of `u^i` in entry `(r, c)`.
    pub fn to_bits(&self) -> u128 {
        let mut b = 0u128;
        for i in 0..self.k {
            b |= (self.layer(i).0 as u128) << (16 * i);
        }
        b
    }

    pub fn from_bits(k: usize, bits: u128) -> MatForm {
        let layers: Vec<Mat4F2> = (0..k).map(|i| Mat4F2((bits >> (16 * i)) as u16)).collect();
        MatForm::from_layers(k, &layers)
    }

    pub fn add(&self, o: &MatForm) -> MatForm {
        let mut ent = self.ent;
        for (row, orow) in ent.iter_mut().zip(&o.ent) {
            for (a, b) in row.iter_mut().zip(orow) {
                *a ^= b;
            }
        }
        MatForm { k: self.k, ent }
    }

    pub fn mul(&self, o: &MatForm) -> MatForm {
        let mut ent = [[0u8; 4]; 4];
        for (row, srow) in ent.iter_mut().zip(&self.ent) {
            for (c, e) in row.iter_mut().enumerate() {
                *e = srow.iter().zip(&o.ent).fold(0, |acc, (a, orow)| acc ^ upoly_mul(*a, orow[c], self.k));
            }
        }
        MatForm { k: self.k, ent }
    }

    pub fn pow(&self, e: u32) -> MatForm {
        (0..e).fold(MatForm::identity(self.k), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.ent.iter().flatten().all(|&e| e == 0)
    }
}

fn fmt_upoly(e: u8) -> String {
    if e == 0 {
        return "0".into();
    }
    let mut terms = Vec::new();
    for i in (0..8).rev() {
        if e >> i & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "u".to_string(),
                _ => format!("u^{i}"),
            });
        }
    }
    terms.join("+")
}

impl fmt::Display for MatForm {
    /// Four rows of entries, each a polynomial in `u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..4 {
            let row: Vec<String> = (0..4).map(|c| fmt_upoly(self.ent[r][c])).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MatForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
