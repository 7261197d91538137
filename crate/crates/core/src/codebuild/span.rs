use serde::Serialize;

use super::GeneratorSet;
use crate::genexpr::RPoly;
use crate::gf2e::F16;
use crate::linalg::RowSpace;
use crate::rring::RElem;

/// A GF(16)-linear code of length `4kn`, kept as a reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCodeF16 {
    pub n: usize,
    pub k: usize,
    pub space: RowSpace,
    pub provenance: Vec<String>,
}

#[derive(Serialize)]
struct CodeJson<'a> {
    length: usize,
    dim: usize,
    n: usize,
    k: usize,
    provenance: &'a [String],
    basis: Vec<String>,
}

impl Serialize for LinearCodeF16 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let basis =
            self.basis().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).collect();
        CodeJson { length: self.length(), dim: self.dim(), n: self.n, k: self.k, provenance: &self.provenance, basis }
            .serialize(s)
    }
}

impl LinearCodeF16 {
    pub fn length(&self) -> usize {
        self.space.ncols()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vec<F16>] {
        self.space.rows()
    }

    pub fn contains(&self, v: &[F16]) -> bool {
        self.space.contains(v)
    }

    /// The same code pulled back to `R[x]/(x^n - 1)`, one element per basis row.
    pub fn basis_polys(&self) -> Vec<RPoly> {
        self.basis().iter().map(|r| RPoly::from_gray_image(self.n, self.k, r)).collect()
    }
}

/// Gray image of the right `R_n`-module generated by `gens`.
pub fn gray_span(gens: &GeneratorSet) -> LinearCodeF16 {
    let (n, k) = (gens.n, gens.k);
    let len = 4 * k * n;
    let mut space = RowSpace::new(len);
    let monos: Vec<RElem> = (0..k).flat_map(|i| (0..4).map(move |j| RElem::monomial(k, i, j, F16::ONE))).collect();
    'outer: for g in gens.polys() {
        for t in 0..n {
            let shifted = g.shift(t);
            for m in &monos {
                space.insert(shifted.mul_elem(m).gray_image());
                if space.dim() == len {
                    break 'outer;
                }
            }
        }
    }
    LinearCodeF16 { n, k, space, provenance: gens.gens.iter().map(|g| g.label.clone()).collect() }
}

/// F2-dimension of `{sum g * a}` with `a` over an F2 basis of `R_n`, by
/// full ring multiplication. Slow; meant as a cross-check at small sizes.
pub fn right_span_brute(gens: &GeneratorSet) -> usize {
    let (n, k) = (gens.n, gens.k);
    let nbits = 16 * k * n;
    let words = nbits.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for g in gens.polys() {
        for t in 0..n {
            for b in 0..16 * k {
                let mut coeffs = vec![RElem::zero(k); n];
                coeffs[t] = RElem::from_bits(k, 1u128 << b);
                let prod = g.mul(&RPoly::from_coeffs(n, k, coeffs));
                let mut v = vec![0u64; words];
                for (pos, c) in prod.gray_image().iter().enumerate() {
                    for l in 0..4 {
                        if c.bits() >> l & 1 == 1 {
                            let bit = 4 * pos + l;
                            v[bit / 64] |= 1 << (bit % 64);
                        }
                    }
                }
                for (row, &p) in rows.iter().zip(&pivots) {
                    if v[p / 64] >> (p % 64) & 1 == 1 {
                        v.iter_mut().zip(row).for_each(|(a, b)| *a ^= b);
                    }
                }
                if let Some(p) = (0..nbits).find(|&p| v[p / 64] >> (p % 64) & 1 == 1) {
                    rows.push(v);
                    pivots.push(p);
                }
            }
        }
    }
    rows.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebuild::{assemble_generators, ConstructionProfile};
    use crate::genexpr::parse;
    use crate::poly::factor_xn_minus_1;

    fn gens(n: usize, k: usize, exprs: &[&str]) -> GeneratorSet {
        let fs = factor_xn_minus_1(n).unwrap();
        GeneratorSet::from_polys(n, k, exprs.iter().map(|e| parse(e, &fs, k).unwrap()))
    }

    #[test]
    fn unit_generates_everything() {
        let c = gray_span(&gens(3, 1, &["1"]));
        assert_eq!((c.length(), c.dim()), (12, 12));
    }

    #[test]
    fn empty_set_is_zero_code() {
        assert_eq!(gray_span(&GeneratorSet::new(5, 2)).dim(), 0);
    }

    #[test]
    fn matches_ring_multiplication_oracle() {
        for e in ["v^3 (x^2 + x + 1)", "v (x^2 + x + 1)", "u + v w", "(v + w^2 v^2) f_2", "w v + x u"] {
            let k = if e.contains('u') { 2 } else { 1 };
            let g = gens(3, k, &[e]);
            assert_eq!(4 * gray_span(&g).dim(), right_span_brute(&g), "{e}");
        }
    }

    #[test]
    fn whole_code_profile_is_full() {
        let p = ConstructionProfile::uniform(5, 2, 1).unwrap();
        assert_eq!(gray_span(&assemble_generators(&p).unwrap()).dim(), 40);
    }

    #[test]
    fn pullback_round_trips() {
        let c = gray_span(&gens(3, 1, &["v (x + 1)"]));
        for (p, row) in c.basis_polys().iter().zip(c.basis()) {
            assert_eq!(&p.gray_image(), row);
        }
    }
}
