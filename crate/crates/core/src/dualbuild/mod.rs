//! Euclidean and Hermitian duals of profile codes: generator lists, an
//! orthogonality check on spanning families, and size bookkeeping.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codebuild::{
    assemble_generators, cardinality_xi, gray_span, CardinalitySummary, ConstructionProfile, GeneratorSet, ProfileError,
};
use crate::genexpr::RPoly;
use crate::gf2e::F16;
use crate::poly::{hat, F16Poly};
use crate::rring::{psi_inv, r_conj, ConjMode, MatForm, RElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    #[default]
    Euclidean,
    Hermitian,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Euclidean => "euclidean",
            Flavor::Hermitian => "hermitian",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("generator sets disagree: (n, k) = ({0}, {1}) against ({2}, {3})")]
    Shape(usize, usize, usize, usize),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

/// `P_c hat *`, or its conjugate version for the Hermitian dual.
pub fn dual_factor(p: &ConstructionProfile, c: usize, flavor: Flavor) -> F16Poly {
    let h = match flavor {
        Flavor::Euclidean => p.class_hat(c),
        Flavor::Hermitian => hat(&p.class_poly(c), p.n).expect("divisor").conj(),
    };
    h.reciprocal_monic()
}

/// `(u exponent, v exponent, class)` for every term of the dual generator list.
pub fn dual_terms(p: &ConstructionProfile) -> Vec<(usize, usize, usize)> {
    let k = p.k;
    let mut t = vec![(0, 0, 0)];
    for i in 2..=k {
        t.push((k - (i - 1), 0, i));
    }
    for (m, vexp) in [(1, 3), (2, 2), (3, 1)] {
        for i in 1..=k {
            t.push((0, vexp, m * k + i));
            t.push((k - (i - 1), 0, m * k + i));
        }
    }
    if k > 1 {
        for i in 1..k {
            t.push((k - i, 3, 4 * k + i));
        }
        t.push((k - 1, 3, 5 * k));
        for (c, vexp) in [(5 * k + 1, 3), (5 * k + 2, 2), (5 * k + 3, 1)] {
            t.push((0, vexp, c));
            t.push((k - 1, 0, c));
        }
    }
    t
}

fn monomial_label(a: usize, b: usize) -> String {
    let mut s = String::new();
    match a {
        0 => {}
        1 => s.push_str("u "),
        _ => s.push_str(&format!("u^{a} ")),
    }
    match b {
        0 => {}
        1 => s.push_str("v "),
        _ => s.push_str(&format!("v^{b} ")),
    }
    s
}

fn dual_generators(p: &ConstructionProfile, flavor: Flavor) -> Result<GeneratorSet, ProfileError> {
    p.validate()?;
    let (n, k) = (p.n, p.k);
    let mut out = GeneratorSet::new(n, k);
    let bar = if flavor == Flavor::Hermitian { "bar " } else { "" };
    for (a, b, c) in dual_terms(p) {
        if c != 0 && !p.class_of.contains(&c) || a >= k {
            continue;
        }
        let q = dual_factor(p, c, flavor);
        let g = RPoly::constant(n, RElem::monomial(k, a, b, F16::ONE)).mul(&RPoly::from_f16poly(n, k, &q));
        if g.is_zero() {
            continue;
        }
        let label = format!("{}P{c} {bar}hat*", monomial_label(a, b));
        out.gens.push(crate::codebuild::Generator { label, class: Some(c), poly: g });
    }
    Ok(out)
}

pub fn euclidean_dual_generators(p: &ConstructionProfile) -> Result<GeneratorSet, ProfileError> {
    dual_generators(p, Flavor::Euclidean)
}

pub fn hermitian_dual_generators(p: &ConstructionProfile) -> Result<GeneratorSet, ProfileError> {
    dual_generators(p, Flavor::Hermitian)
}

/// A labelled spanning vector in matrix form.
struct Spanned {
    label: String,
    mats: Vec<MatForm>,
}

/// An F2 basis of the right module spanned by `gens`, each vector labelled
/// `(generator, shift, monomial, w power)`.
fn f2_family(gens: &GeneratorSet) -> Vec<(String, RPoly)> {
    let (n, k) = (gens.n, gens.k);
    let nbits = 16 * k * n;
    let words = nbits.div_ceil(64);
    let mut kept = Vec::new();
    let mut rows: Vec<(Vec<u64>, usize)> = Vec::new();
    for (gi, g) in gens.gens.iter().enumerate() {
        for t in 0..n {
            let sh = g.poly.shift(t);
            for i in 0..k {
                for j in 0..4 {
                    for l in 0..4 {
                        let m = RElem::monomial(k, i, j, F16::pow_w(l));
                        let p = sh.mul_elem(&m);
                        let mut v = vec![0u64; words];
                        for (pos, c) in p.coeffs().iter().enumerate() {
                            let bits = c.bits();
                            for b in 0..16 * k {
                                if bits >> b & 1 == 1 {
                                    let idx = 16 * k * pos + b;
                                    v[idx / 64] |= 1 << (idx % 64);
                                }
                            }
                        }
                        for (r, piv) in &rows {
                            if v[piv / 64] >> (piv % 64) & 1 == 1 {
                                v.iter_mut().zip(r).for_each(|(a, b)| *a ^= b);
                            }
                        }
                        if let Some(piv) = (0..nbits).find(|&x| v[x / 64] >> (x % 64) & 1 == 1) {
                            rows.push((v, piv));
                            let label = format!("g{gi}[{}] x^{t} {}w^{l}", g.label, monomial_label(i, j));
                            kept.push((label, p));
                        }
                    }
                }
            }
        }
    }
    kept
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub c_side: String,
    pub d_side: String,
    /// The nonzero inner product.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub flavor: Flavor,
    pub conj_mode: ConjMode,
    pub c_family: usize,
    pub d_family: usize,
    pub pairs: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

impl OrthogonalityReport {
    pub fn ok(&self) -> bool {
        self.violation_count == 0
    }
}

/// Checks `<a, b> = 0` for every pair of spanning vectors of C and D.
///
/// Both sides are reduced to F2 bases of `g x^t u^i v^j w^l`. GF(16)
/// scalars do not commute with R, so an F16-span would not be enough, and
/// ring-power conjugation is not additive. Pairs are checked in order
/// (C vector, D vector); the first few violations are kept.
pub fn verify_orthogonality(
    c: &GeneratorSet,
    d: &GeneratorSet,
    flavor: Flavor,
    conj_mode: ConjMode,
) -> Result<OrthogonalityReport, DualError> {
    if (c.n, c.k) != (d.n, d.k) {
        return Err(DualError::Shape(c.n, c.k, d.n, d.k));
    }
    let to_mats = |(label, p): (String, RPoly), conj: bool| Spanned {
        label,
        mats: p.coeffs().iter().map(|x| psi_inv(&if conj { r_conj(x, conj_mode) } else { *x })).collect(),
    };
    let cs: Vec<Spanned> = f2_family(c).into_iter().map(|x| to_mats(x, false)).collect();
    let ds: Vec<Spanned> = f2_family(d).into_iter().map(|x| to_mats(x, flavor == Flavor::Hermitian)).collect();
    let mut report = OrthogonalityReport {
        flavor,
        conj_mode,
        c_family: cs.len(),
        d_family: ds.len(),
        pairs: cs.len() * ds.len(),
        violation_count: 0,
        violations: Vec::new(),
    };
    for a in &cs {
        for b in &ds {
            let sum = a.mats.iter().zip(&b.mats).fold(MatForm::zero(c.k), |acc, (x, y)| acc.add(&x.mul(y)));
            if !sum.is_zero() {
                report.violation_count += 1;
                if report.violations.len() < 5 {
                    report.violations.push(Violation {
                        c_side: a.label.clone(),
                        d_side: b.label.clone(),
                        value: crate::rring::psi(&sum).to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCardinalityReport {
    pub flavor: Flavor,
    pub length: usize,
    pub dim_c: usize,
    pub dim_dual: usize,
    pub xi: usize,
    pub eta: usize,
}

impl DualCardinalityReport {
    pub fn complementary(&self) -> bool {
        self.dim_c + self.dim_dual == self.length
    }

    pub fn matches_eta(&self) -> bool {
        self.dim_dual == self.eta
    }

    pub fn ok(&self) -> bool {
        self.complementary() && self.matches_eta() && self.xi + self.eta == self.length
    }
}

pub fn dual_cardinality_check(p: &ConstructionProfile, flavor: Flavor) -> Result<DualCardinalityReport, ProfileError> {
    let c = gray_span(&assemble_generators(p)?);
    let d = gray_span(&dual_generators(p, flavor)?);
    let s = cardinality_xi(p);
    Ok(DualCardinalityReport { flavor, length: 4 * p.k * p.n, dim_c: c.dim(), dim_dual: d.dim(), xi: s.xi, eta: s.eta })
}

/// R'-form of the dual: a generator `u^a v^b Q` feeds `<Q>` into every
/// layer `u^a' v^b'` with `a' >= a`, `b' >= b`; the layer's `A*` is the gcd
/// of what reaches it. Layer `u^a v^b` is slot `bk + a + 1`; the twisted
/// slots `4k+1..=5k+3` carry `x^n - 1`.
pub fn dual_to_rprime_form(p: &ConstructionProfile, flavor: Flavor) -> Result<CardinalitySummary, ProfileError> {
    p.validate()?;
    let (n, k) = (p.n, p.k);
    let m = F16Poly::xn_minus_1(n);
    let mut layers = vec![m.clone(); 4 * k];
    for (a, b, c) in dual_terms(p) {
        if c != 0 && !p.class_of.contains(&c) || a >= k {
            continue;
        }
        let q = dual_factor(p, c, flavor);
        for bb in b..4 {
            for aa in a..k {
                let slot = &mut layers[bb * k + aa];
                *slot = slot.gcd(&q);
            }
        }
    }
    let mut s = cardinality_xi(p);
    s.deg_a = layers.iter().map(|a| a.deg().unwrap_or(0)).collect();
    s.deg_a.extend(std::iter::repeat_n(n, k + 3));
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_zero() {
        let full = ConstructionProfile::uniform(3, 2, 1).unwrap();
        assert_eq!(gray_span(&euclidean_dual_generators(&full).unwrap()).dim(), 0);
        let zero = ConstructionProfile::new(3, 2).unwrap();
        let d = euclidean_dual_generators(&zero).unwrap();
        assert_eq!(gray_span(&d).dim(), 24);
        assert_eq!(d.gens[0].poly, RPoly::one(3, 2));
        for f in [Flavor::Euclidean, Flavor::Hermitian] {
            assert_eq!(dual_to_rprime_form(&full, f).unwrap().rprime_exponent(), Some(0));
            assert_eq!(dual_to_rprime_form(&zero, f).unwrap().rprime_exponent(), Some(24));
        }
        let r = verify_orthogonality(
            &assemble_generators(&full).unwrap(),
            &euclidean_dual_generators(&full).unwrap(),
            Flavor::Euclidean,
            ConjMode::default(),
        )
        .unwrap();
        assert!(r.ok());
    }

    #[test]
    fn hermitian_factor_at_n3() {
        // f_2 = x + w^5; its hat conjugated and reversed
        let p = ConstructionProfile::new(3, 1).unwrap().assign(2, 1).unwrap();
        let f: F16Poly = "x + w^5".parse().unwrap();
        assert_eq!(p.factors.factors[1], f);
        let want = hat(&f, 3).unwrap().conj().reciprocal_monic();
        assert_eq!(dual_factor(&p, 1, Flavor::Hermitian), want);
        assert_eq!(f.conj().reciprocal_monic(), "x + w^10".parse().unwrap());
    }

    fn check(p: &ConstructionProfile) -> OrthogonalityReport {
        let c = assemble_generators(p).unwrap();
        let d = euclidean_dual_generators(p).unwrap();
        verify_orthogonality(&c, &d, Flavor::Euclidean, ConjMode::default()).unwrap()
    }

    #[test]
    fn binary_u_class_is_orthogonal_and_sized() {
        let p = ConstructionProfile::new(7, 1).unwrap().assign(2, 1).unwrap();
        assert!(check(&p).ok());
        let r = dual_cardinality_check(&p, Flavor::Euclidean).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(dual_to_rprime_form(&p, Flavor::Euclidean).unwrap().rprime_exponent(), Some(r.eta));
    }

    #[test]
    fn v_class_dual_meets_scalars_from_r() {
        // C = <v (x^2 + x + 1)> holds (vs, vs, vs); the listed dual holds
        // (v^3 t, v^3 t, v^3 t), and v w v^3 = (w + w^s) v^3 is not zero.
        let p = ConstructionProfile::new(3, 1).unwrap().assign(1, 2).unwrap();
        let d = euclidean_dual_generators(&p).unwrap();
        assert!(d.gens.iter().any(|g| g.label.starts_with("v^3 P2")));
        let r = check(&p);
        assert!(!r.ok());
        let r = dual_cardinality_check(&p, Flavor::Euclidean).unwrap();
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn corrupted_dual_is_caught() {
        let p = ConstructionProfile::new(3, 1).unwrap().assign(1, 2).unwrap();
        let c = assemble_generators(&p).unwrap();
        let mut d = euclidean_dual_generators(&p).unwrap();
        d.push("1", RPoly::one(3, 1));
        let r = verify_orthogonality(&c, &d, Flavor::Euclidean, ConjMode::default()).unwrap();
        assert!(!r.ok());
        assert!(r.violations[0].d_side.contains("g"));
    }

    #[test]
    fn shape_mismatch() {
        let a = GeneratorSet::new(3, 1);
        let b = GeneratorSet::new(5, 1);
        assert!(matches!(
            verify_orthogonality(&a, &b, Flavor::Euclidean, ConjMode::default()),
            Err(DualError::Shape(..))
        ));
    }
}
