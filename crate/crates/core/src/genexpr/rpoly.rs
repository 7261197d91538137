use std::fmt;

use crate::gf2e::F16;
use crate::poly::F16Poly;
use crate::rring::RElem;

/// An element of `R[x] / (x^n - 1)`: `n` coefficients in R, `x^t` at index `t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RPoly {
    n: usize,
    k: usize,
    coeffs: Vec<RElem>,
}

impl RPoly {
    pub fn zero(n: usize, k: usize) -> RPoly {
        assert!(n >= 1, "n must be positive");
        RPoly { n, k, coeffs: vec![RElem::zero(k); n] }
    }

    pub fn constant(n: usize, r: RElem) -> RPoly {
        let mut p = RPoly::zero(n, r.k());
        p.coeffs[0] = r;
        p
    }

    pub fn one(n: usize, k: usize) -> RPoly {
        RPoly::constant(n, RElem::one(k))
    }

    /// `x^e` reduced mod `x^n - 1`.
    pub fn x_pow(n: usize, k: usize, e: usize) -> RPoly {
        let mut p = RPoly::zero(n, k);
        p.coeffs[e % n] = RElem::one(k);
        p
    }

    /// Lifts a GF(16) polynomial to scalar coefficients, reducing mod `x^n - 1`.
    pub fn from_f16poly(n: usize, k: usize, f: &F16Poly) -> RPoly {
        let mut p = RPoly::zero(n, k);
        for (t, &c) in f.coeffs().iter().enumerate() {
            p.coeffs[t % n] = p.coeffs[t % n] + RElem::scalar(k, c);
        }
        p
    }

    pub fn from_coeffs(n: usize, k: usize, coeffs: Vec<RElem>) -> RPoly {
        assert_eq!(coeffs.len(), n);
        assert!(coeffs.iter().all(|c| c.k() == k));
        RPoly { n, k, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[RElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &RPoly) -> RPoly {
        assert_eq!((self.n, self.k), (o.n, o.k));
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| *a + *b).collect();
        RPoly { n: self.n, k: self.k, coeffs }
    }

    /// Product in `R[x]/(x^n - 1)`, coefficients multiplied in written order.
    pub fn mul(&self, o: &RPoly) -> RPoly {
        assert_eq!((self.n, self.k), (o.n, o.k));
        let mut out = RPoly::zero(self.n, self.k);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = (i + j) % self.n;
                out.coeffs[t] = out.coeffs[t] + *a * *b;
            }
        }
        out
    }

    /// `self * r` for a constant `r`.
    pub fn mul_elem(&self, r: &RElem) -> RPoly {
        let coeffs = self.coeffs.iter().map(|a| *a * *r).collect();
        RPoly { n: self.n, k: self.k, coeffs }
    }

    /// `r * self` for a constant `r`.
    pub fn elem_mul(&self, r: &RElem) -> RPoly {
        let coeffs = self.coeffs.iter().map(|a| *r * *a).collect();
        RPoly { n: self.n, k: self.k, coeffs }
    }

    /// `self * x^t`, a cyclic shift.
    pub fn shift(&self, t: usize) -> RPoly {
        let mut coeffs = vec![RElem::zero(self.k); self.n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + t) % self.n] = *c;
        }
        RPoly { n: self.n, k: self.k, coeffs }
    }

    /// Right multiplication by a GF(16) scalar, coordinate-wise.
    pub fn mul_scalar(&self, c: F16) -> RPoly {
        let coeffs = self.coeffs.iter().map(|a| a.mul_scalar(c)).collect();
        RPoly { n: self.n, k: self.k, coeffs }
    }

    pub fn pow(&self, e: u32) -> RPoly {
        (0..e).fold(RPoly::one(self.n, self.k), |acc, _| acc.mul(self))
    }

    /// Concatenated Gray images of the coefficients, length `4kn`.
    pub fn gray_image(&self) -> Vec<F16> {
        self.coeffs.iter().flat_map(crate::rring::theta).collect()
    }

    pub fn from_gray_image(n: usize, k: usize, img: &[F16]) -> RPoly {
        assert_eq!(img.len(), 4 * k * n);
        let coeffs = img.chunks(4 * k).map(|c| crate::rring::theta_inv(k, c)).collect();
        RPoly { n, k, coeffs }
    }

    /// Sum of the Lee weights of the coefficients.
    pub fn lee_weight(&self) -> u32 {
        self.coeffs.iter().map(crate::rring::lee_weight).sum()
    }

    pub fn random<R: rand::Rng>(n: usize, k: usize, rng: &mut R) -> RPoly {
        RPoly { n, k, coeffs: (0..n).map(|_| RElem::random(k, rng)).collect() }
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format(self))
    }
}

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPoly[n={}, k={}]({})", self.n, self.k, super::format(self))
    }
}
