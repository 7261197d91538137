use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::Serialize;

use crate::gf2e::F16;
use crate::linalg::gf2_rank;
use crate::rring::RElem;

/// A right ideal of R written by generators, with the name of its family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealForm {
    pub family: String,
    pub gens: Vec<RElem>,
}

/// `dim_F2(I * u^a v^b)` for `a < k`, `b < 4`; the `(0, 0)` entry is `dim I`.
/// A right-module isomorphism carries `I * r` onto `I' * r`, so these are
/// invariants of the module type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IdealSignature(pub Vec<usize>);

/// F2 basis of the right ideal generated by `gens`, as coordinate bit masks.
fn right_ideal(k: usize, gens: &[RElem]) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::new();
    let mut pivots: Vec<u32> = Vec::new();
    for g in gens {
        for b in 0..16 * k {
            let mut x = g.mul(&RElem::from_bits(k, 1u128 << b)).bits();
            for (row, &p) in basis.iter().zip(&pivots) {
                if x >> p & 1 == 1 {
                    x ^= row;
                }
            }
            if x != 0 {
                pivots.push(x.trailing_zeros());
                basis.push(x);
            }
        }
    }
    basis
}

pub fn ideal_signature(k: usize, gens: &[RElem]) -> IdealSignature {
    let basis = right_ideal(k, gens);
    let mut sig = Vec::with_capacity(4 * k);
    for a in 0..k {
        for b in 0..4 {
            let r = RElem::monomial(k, a, b, F16::ONE);
            let img: Vec<u128> = basis.iter().map(|&x| RElem::from_bits(k, x).mul(&r).bits()).collect();
            sig.push(gf2_rank(&img));
        }
    }
    IdealSignature(sig)
}

fn unit<R: Rng>(rng: &mut R) -> F16 {
    F16::pow_w(rng.gen_range(0..15))
}

/// `u^lo c_lo + ... + u^hi c_hi` with the given leading coefficients, times `v^j`.
fn uv_sum(k: usize, j: usize, coeffs: &[(usize, F16)]) -> RElem {
    coeffs.iter().fold(RElem::zero(k), |acc, &(i, c)| acc + RElem::monomial(k, i, j, c))
}

/// The listed right-ideal families of R with random unit parameters.
pub fn listed_forms<R: Rng>(k: usize, rng: &mut R) -> Vec<IdealForm> {
    let mut out = vec![IdealForm { family: "{0}".into(), gens: vec![] }];
    for i in 0..k {
        for j in 0..4 {
            out.push(IdealForm { family: format!("<u^{i} v^{j}>"), gens: vec![RElem::monomial(k, i, j, F16::ONE)] });
        }
    }
    for i in 1..k {
        let g = (1..=3).fold(RElem::monomial(k, i, 0, F16::ONE), |acc, m| acc + RElem::monomial(k, 0, m, unit(rng)));
        out.push(IdealForm { family: format!("<u^{i} + v b + v^2 b + v^3 b>"), gens: vec![g] });
        let gens = std::iter::once(RElem::monomial(k, i, 0, F16::ONE))
            .chain((1..=3).map(|m| RElem::monomial(k, 0, m, F16::ONE)))
            .collect();
        out.push(IdealForm { family: format!("<u^{i}, v, v^2, v^3>"), gens });
    }
    // u + u^2 a13 + ... + u^(top-1) a1,top
    let head = |rng: &mut R, j: usize, top: usize| {
        let mut c = vec![(1, F16::ONE)];
        c.extend((3..=top).map(|t| (t - 1, unit(rng))));
        uv_sum(k, j, &c)
    };
    // a1 + u a2 + ... + u^(top-1) a_top
    let row = |rng: &mut R, j: usize, top: usize| {
        let c: Vec<_> = (0..top).map(|t| (t, unit(rng))).collect();
        uv_sum(k, j, &c)
    };
    let g3 = head(rng, 0, k) + row(rng, 1, k) + row(rng, 2, k) + row(rng, 3, k - 1);
    let g4 = head(rng, 1, k) + row(rng, 2, k) + row(rng, 3, k - 1);
    let g5 = head(rng, 2, k) + row(rng, 3, k - 1);
    let g6 = head(rng, 3, k - 1);
    for (name, g) in [("alpha form iii", g3), ("alpha form iv", g4), ("alpha form v", g5), ("alpha form vi", g6)] {
        out.push(IdealForm { family: name.into(), gens: vec![g] });
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub k: usize,
    pub trials: usize,
    pub matched: usize,
    /// Family name to number of samples it matched.
    pub by_family: BTreeMap<String, usize>,
    /// Up to a few unmatched generators with their signatures.
    pub unmatched: Vec<(String, IdealSignature)>,
    pub unmatched_count: usize,
}

impl ClassifyReport {
    pub fn ok(&self) -> bool {
        self.unmatched_count == 0
    }
}

/// Samples cyclic right submodules `gR` and matches each signature against
/// the listed families. Half the samples are uniform; half are uniform
/// elements times a random monomial, which reaches the small ideals.
pub fn submodule_sample_classify<R: Rng>(k: usize, trials: usize, rng: &mut R) -> ClassifyReport {
    // several parameter draws per family, since the signature could depend on them
    let mut known: BTreeMap<IdealSignature, BTreeSet<String>> = BTreeMap::new();
    for _ in 0..16 {
        for f in listed_forms(k, rng) {
            known.entry(ideal_signature(k, &f.gens)).or_default().insert(f.family);
        }
    }
    let mut by_family = BTreeMap::new();
    let mut unmatched = Vec::new();
    let mut unmatched_count = 0;
    for t in 0..trials {
        let mut g = RElem::random(k, rng);
        if t % 2 == 1 {
            let m = RElem::monomial(k, rng.gen_range(0..k), rng.gen_range(0..4), F16::ONE);
            g = m * g;
        }
        let sig = ideal_signature(k, &[g]);
        match known.get(&sig) {
            Some(fams) => *by_family.entry(fams.iter().next().cloned().unwrap_or_default()).or_insert(0) += 1,
            None => {
                unmatched_count += 1;
                if unmatched.len() < 5 {
                    unmatched.push((g.to_string(), sig));
                }
            }
        }
    }
    ClassifyReport { k, trials, matched: trials - unmatched_count, by_family, unmatched, unmatched_count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_unit_and_monomial() {
        let k = 2;
        assert_eq!(ideal_signature(k, &[RElem::zero(k)]), ideal_signature(k, &[]));
        let full = ideal_signature(k, &[RElem::one(k)]);
        assert_eq!(full.0[0], 32);
        let w_unit = RElem::one(k) + RElem::u(k).mul(&RElem::omega(k));
        assert!(w_unit.is_unit());
        assert_eq!(ideal_signature(k, &[w_unit]), full);
        let uv = RElem::u(k) * RElem::v(k);
        assert_eq!(ideal_signature(k, &[uv]).0[0], 12);
    }

    #[test]
    fn k1_is_all_matched() {
        let r = submodule_sample_classify(1, 60, &mut ChaCha8Rng::seed_from_u64(5));
        assert!(r.ok(), "{r:?}");
    }
}
