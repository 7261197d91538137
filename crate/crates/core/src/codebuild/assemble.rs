use serde::Serialize;

use super::{ConstructionProfile, ProfileError};
use crate::genexpr::{format, RPoly};
use crate::gf2e::F16;
use crate::poly::F16Poly;
use crate::rring::RElem;

/// One generator with a human label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    /// Construction class, when built from a profile.
    pub class: Option<usize>,
    pub poly: RPoly,
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Generator", 3)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("class", &self.class)?;
        st.serialize_field("poly", &format(&self.poly))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub n: usize,
    pub k: usize,
    pub gens: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new(n: usize, k: usize) -> GeneratorSet {
        GeneratorSet { n, k, gens: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, poly: RPoly) {
        assert_eq!((poly.n(), poly.k()), (self.n, self.k), "generator shape");
        self.gens.push(Generator { label: label.into(), class: None, poly });
    }

    pub fn from_polys(n: usize, k: usize, polys: impl IntoIterator<Item = RPoly>) -> GeneratorSet {
        let mut g = GeneratorSet::new(n, k);
        for p in polys {
            let label = format(&p);
            g.push(label, p);
        }
        g
    }

    pub fn polys(&self) -> impl Iterator<Item = &RPoly> {
        self.gens.iter().map(|g| &g.poly)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// `u^i v^j a` with `a` a scalar polynomial.
fn term(n: usize, k: usize, i: usize, j: usize, a: &F16Poly) -> RPoly {
    RPoly::constant(n, RElem::monomial(k, i, j, F16::ONE)).mul(&RPoly::from_f16poly(n, k, a))
}

/// `u + u^2 a_13 + ... + u^(upper-1) a_1,upper`, the shared head of the alpha forms.
fn alpha_head(p: &ConstructionProfile, upper: usize) -> Result<RPoly, ProfileError> {
    let (n, k) = (p.n, p.k);
    let mut acc = term(n, k, 1, 0, &F16Poly::one());
    for j in 3..=upper {
        acc = acc.add(&term(n, k, j - 1, 0, &p.alpha(1, j)?));
    }
    Ok(acc)
}

/// `v^m (a_i1 + u a_i2 + ... + u^(upper-1) a_i,upper)`.
fn alpha_row(p: &ConstructionProfile, m: usize, i: usize, upper: usize) -> Result<RPoly, ProfileError> {
    let mut acc = RPoly::zero(p.n, p.k);
    for j in 1..=upper {
        acc = acc.add(&term(p.n, p.k, j - 1, m, &p.alpha(i, j)?));
    }
    Ok(acc)
}

/// The bracketed ring part of the class-`c` generator, before `P_c hat`.
pub fn class_generator(p: &ConstructionProfile, c: usize) -> Result<RPoly, ProfileError> {
    let (n, k) = (p.n, p.k);
    let one = F16Poly::one();
    if c == 0 || c > p.max_allowed_class() {
        return Err(ProfileError::BadClass { factor: 0, class: c, max: p.max_allowed_class() });
    }
    let g = match c {
        c if c <= 4 * k => {
            let (j, i) = ((c - 1) / k, (c - 1) % k);
            term(n, k, i, j, &one)
        }
        c if c < 5 * k => {
            let i = c - 4 * k;
            let b = p.beta(i)?;
            (1..=3).fold(term(n, k, i, 0, &one), |acc, m| acc.add(&term(n, k, 0, m, &b[m - 1])))
        }
        c => match c - 5 * k {
            0 => {
                let mut acc = alpha_head(p, k)?;
                for m in 1..=3 {
                    acc = acc.add(&alpha_row(p, m, m + 1, k)?);
                }
                acc
            }
            1 => {
                let mut acc = RPoly::constant(n, RElem::v(k)).mul(&alpha_head(p, k)?);
                for m in 2..=3 {
                    acc = acc.add(&alpha_row(p, m, m, k)?);
                }
                acc
            }
            2 => RPoly::constant(n, RElem::monomial(k, 0, 2, F16::ONE)).mul(&alpha_head(p, k)?).add(&alpha_row(
                p,
                3,
                2,
                k - 1,
            )?),
            _ => RPoly::constant(n, RElem::monomial(k, 0, 3, F16::ONE)).mul(&alpha_head(p, k - 1)?),
        },
    };
    Ok(g)
}

fn class_label(k: usize, c: usize) -> String {
    let off = |base: usize, name: &str| match c - base {
        0 => name.to_string(),
        d => format!("{name}+{d}"),
    };
    if c <= 4 * k {
        let (j, i) = ((c - 1) / k, (c - 1) % k + 1);
        if j == 0 {
            format!("class {i}")
        } else {
            format!("class {}k+{i}", if j == 1 { String::new() } else { j.to_string() })
        }
    } else if c < 5 * k {
        format!("class {}", off(4 * k, "4k"))
    } else {
        format!("class {}", off(5 * k, "5k"))
    }
}

/// One generator per populated class, `g_c * P_c hat`.
pub fn assemble_generators(p: &ConstructionProfile) -> Result<GeneratorSet, ProfileError> {
    p.validate()?;
    let mut out = GeneratorSet::new(p.n, p.k);
    for c in p.populated() {
        let g = class_generator(p, c)?.mul(&RPoly::from_f16poly(p.n, p.k, &p.class_hat(c)));
        out.gens.push(Generator { label: class_label(p.k, c), class: Some(c), poly: g });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_module_at_n3() {
        let p = ConstructionProfile::uniform(3, 1, 1).unwrap();
        let g = assemble_generators(&p).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.gens[0].poly, RPoly::one(3, 1));
    }

    #[test]
    fn v_class_is_v_times_hat() {
        // f_1 = x + 1 in class k+1 = 2
        let p = ConstructionProfile::new(3, 1).unwrap().assign(1, 2).unwrap();
        assert_eq!(p.factors.factors[0].to_string(), "x + 1");
        let g = assemble_generators(&p).unwrap();
        let hat: F16Poly = "x^2 + x + 1".parse().unwrap();
        let want = RPoly::constant(3, RElem::v(1)).mul(&RPoly::from_f16poly(3, 1, &hat));
        assert_eq!(g.gens[0].poly, want);
    }

    #[test]
    fn beta_class_instance() {
        let p = ConstructionProfile::new(5, 2)
            .unwrap()
            .assign(1, 9)
            .unwrap()
            .with_beta(1, [F16Poly::one(), F16Poly::one(), F16Poly::one()]);
        let g = assemble_generators(&p).unwrap();
        let k = 2;
        let head = RElem::u(k) + RElem::v(k) + RElem::monomial(k, 0, 2, F16::ONE) + RElem::monomial(k, 0, 3, F16::ONE);
        let want = RPoly::constant(5, head).mul(&RPoly::from_f16poly(5, k, &p.class_hat(9)));
        assert_eq!(g.gens[0].poly, want);
        assert_eq!(g.gens[0].label, "class 4k+1");
    }

    #[test]
    fn k1_rejects_twisted_classes() {
        let p = ConstructionProfile::new(3, 1).unwrap().assign(1, 5).unwrap();
        assert!(matches!(assemble_generators(&p), Err(ProfileError::KOneRestricted { .. })));
    }

    #[test]
    fn missing_alpha_is_an_error() {
        let p = ConstructionProfile::new(3, 2).unwrap().assign(1, 10).unwrap();
        assert_eq!(assemble_generators(&p), Err(ProfileError::MissingAlpha(2, 1)));
    }

    #[test]
    fn alpha_forms_k2_with_unit_alphas() {
        let mut p = ConstructionProfile::new(3, 2).unwrap().assign(1, 13).unwrap();
        p.fill_random_units(&mut <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(1));
        let g = class_generator(&p, 13).unwrap();
        // v^3 u at k = 2
        assert_eq!(g, RPoly::constant(3, RElem::monomial(2, 1, 3, F16::ONE)));
        let labels: Vec<_> = (1..=13).map(|c| class_label(2, c)).collect();
        assert_eq!(labels[0], "class 1");
        assert_eq!(labels[2], "class k+1");
        assert_eq!(labels[5], "class 2k+2");
        assert_eq!(labels[10], "class 5k+1");
    }
}
