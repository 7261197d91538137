use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::ProfileError;
use crate::gf2e::F16;
use crate::poly::{factor_xn_minus_1, hat, F16Poly, FactorSet};

/// Assignment of the irreducible factors of `x^n - 1` to the `5k + 4`
/// construction classes, plus the unit data the twisted classes need.
///
/// Class layout for `1 <= i <= k`: `i` is `u^(i-1)`, `k+i` is `u^(i-1) v`,
/// `2k+i` is `u^(i-1) v^2`, `3k+i` is `u^(i-1) v^3`; `4k+i` (`i < k`) is
/// `u^i + v b1 + v^2 b2 + v^3 b3`; `5k..=5k+3` are the alpha forms; class 0
/// holds unused factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionProfile {
    pub n: usize,
    pub k: usize,
    pub factors: FactorSet,
    /// Class of each factor, indexed like `factors.factors`.
    pub class_of: Vec<usize>,
    /// `alpha_ij` keyed by `(i, j)`; `alpha_11 = 0` and `alpha_12 = 1` are implied.
    pub alphas: BTreeMap<(usize, usize), F16Poly>,
    /// `[beta_1i, beta_2i, beta_3i]` keyed by `i`.
    pub betas: BTreeMap<usize, [F16Poly; 3]>,
}

/// Serialized form; factor indices are 1-based into the canonical factor list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub n: usize,
    pub k: usize,
    #[serde(default)]
    pub classes: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub alphas: BTreeMap<String, F16Poly>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub betas: BTreeMap<String, Vec<F16Poly>>,
}

fn parse_alpha_key(key: &str) -> Result<(usize, usize), ProfileError> {
    let bad = || ProfileError::BadKey(key.to_string());
    let (a, b) = match key.split_once(',') {
        Some((a, b)) => (a.trim(), b.trim()),
        None if key.len() == 2 => key.split_at(1),
        None => return Err(bad()),
    };
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

impl ConstructionProfile {
    /// Every factor in class 0 (the zero code).
    pub fn new(n: usize, k: usize) -> Result<ConstructionProfile, ProfileError> {
        if k == 0 || k > crate::rring::MAX_K {
            return Err(ProfileError::BadK(k));
        }
        let factors = factor_xn_minus_1(n)?;
        let class_of = vec![0; factors.len()];
        Ok(ConstructionProfile { n, k, factors, class_of, alphas: BTreeMap::new(), betas: BTreeMap::new() })
    }

    /// Sets the class of factor `f_index` (1-based).
    pub fn assign(mut self, f_index: usize, class: usize) -> Result<ConstructionProfile, ProfileError> {
        let slot =
            f_index.checked_sub(1).filter(|&i| i < self.class_of.len()).ok_or(ProfileError::FactorIndex(f_index))?;
        self.class_of[slot] = class;
        Ok(self)
    }

    pub fn with_alpha(mut self, i: usize, j: usize, a: F16Poly) -> ConstructionProfile {
        self.alphas.insert((i, j), a);
        self
    }

    pub fn with_beta(mut self, i: usize, b: [F16Poly; 3]) -> ConstructionProfile {
        self.betas.insert(i, b);
        self
    }

    /// Every factor placed in one class.
    pub fn uniform(n: usize, k: usize, class: usize) -> Result<ConstructionProfile, ProfileError> {
        let mut p = ConstructionProfile::new(n, k)?;
        p.class_of.iter_mut().for_each(|c| *c = class);
        Ok(p)
    }

    /// Highest class index, `5k + 3`.
    pub fn max_class(&self) -> usize {
        5 * self.k + 3
    }

    /// Highest class usable at this `k`.
    pub fn max_allowed_class(&self) -> usize {
        if self.k == 1 {
            4
        } else {
            self.max_class()
        }
    }

    /// `P_c`: product of the factors in class `c`.
    pub fn class_poly(&self, c: usize) -> F16Poly {
        self.factors
            .factors
            .iter()
            .zip(&self.class_of)
            .filter(|(_, &cl)| cl == c)
            .fold(F16Poly::one(), |acc, (f, _)| acc.mul(f))
    }

    pub fn deg(&self, c: usize) -> usize {
        self.class_poly(c).deg().unwrap_or(0)
    }

    pub fn class_hat(&self, c: usize) -> F16Poly {
        hat(&self.class_poly(c), self.n).expect("class product divides x^n - 1")
    }

    /// Classes holding at least one factor, ascending, excluding class 0.
    pub fn populated(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.class_of.iter().copied().filter(|&c| c > 0).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn alpha(&self, i: usize, j: usize) -> Result<F16Poly, ProfileError> {
        match (i, j) {
            (1, 1) => Ok(F16Poly::zero()),
            (1, 2) => Ok(F16Poly::one()),
            _ => self.alphas.get(&(i, j)).cloned().ok_or(ProfileError::MissingAlpha(i, j)),
        }
    }

    pub fn beta(&self, i: usize) -> Result<&[F16Poly; 3], ProfileError> {
        self.betas.get(&i).ok_or(ProfileError::MissingBeta(i))
    }

    /// The `(i, j)` alpha indices a class reads.
    pub fn alpha_indices(&self, class: usize) -> Vec<(usize, usize)> {
        let k = self.k;
        let mut out = Vec::new();
        let head = |upper: usize, out: &mut Vec<(usize, usize)>| out.extend((3..=upper).map(|j| (1, j)));
        match class.checked_sub(5 * k) {
            Some(0) => {
                head(k, &mut out);
                for i in 2..=4 {
                    out.extend((1..=k).map(|j| (i, j)));
                }
            }
            Some(1) => {
                head(k, &mut out);
                for i in 2..=3 {
                    out.extend((1..=k).map(|j| (i, j)));
                }
            }
            Some(2) => {
                head(k, &mut out);
                out.extend((1..k).map(|j| (2, j)));
            }
            Some(3) => head(k - 1, &mut out),
            _ => {}
        }
        out
    }

    fn check_unit(&self, name: String, p: &F16Poly) -> Result<(), ProfileError> {
        if p.gcd(&F16Poly::xn_minus_1(self.n)).is_one() {
            Ok(())
        } else {
            Err(ProfileError::NotUnit { name, poly: p.clone() })
        }
    }

    pub fn validate(&self) -> Result<(), ProfileError> {
        if self.class_of.len() != self.factors.len() {
            return Err(ProfileError::FactorIndex(self.class_of.len()));
        }
        for (i, &c) in self.class_of.iter().enumerate() {
            if c > self.max_class() {
                return Err(ProfileError::BadClass { factor: i + 1, class: c, max: self.max_class() });
            }
            if self.k == 1 && c > 4 {
                return Err(ProfileError::KOneRestricted { factor: i + 1, class: c });
            }
        }
        for (&(i, j), a) in &self.alphas {
            if (i, j) == (1, 1) && !a.is_zero() || (i, j) == (1, 2) && !a.is_one() {
                return Err(ProfileError::FixedAlpha(i, j));
            }
        }
        for c in self.populated() {
            if c > 4 * self.k && c < 5 * self.k {
                let i = c - 4 * self.k;
                for (m, b) in self.beta(i)?.iter().enumerate() {
                    self.check_unit(format!("beta_{}{}", m + 1, i), b)?;
                }
            }
            for (i, j) in self.alpha_indices(c) {
                let a = self.alpha(i, j)?;
                self.check_unit(format!("alpha_{i}{j}"), &a)?;
            }
        }
        Ok(())
    }

    pub fn from_json_value(j: &ProfileJson) -> Result<ConstructionProfile, ProfileError> {
        let mut p = ConstructionProfile::new(j.n, j.k)?;
        let mut seen = vec![false; p.factors.len()];
        for (class, idxs) in &j.classes {
            let c: usize = class.trim().parse().map_err(|_| ProfileError::BadKey(class.clone()))?;
            for &f in idxs {
                let slot = f.checked_sub(1).filter(|&i| i < seen.len()).ok_or(ProfileError::FactorIndex(f))?;
                if std::mem::replace(&mut seen[slot], true) {
                    return Err(ProfileError::DuplicateFactor(f));
                }
                p.class_of[slot] = c;
            }
        }
        for (key, a) in &j.alphas {
            p.alphas.insert(parse_alpha_key(key)?, a.clone());
        }
        for (key, b) in &j.betas {
            let i: usize = key.trim().parse().map_err(|_| ProfileError::BadKey(key.clone()))?;
            let arr: [F16Poly; 3] = b.clone().try_into().map_err(|_| ProfileError::BadKey(key.clone()))?;
            p.betas.insert(i, arr);
        }
        p.validate()?;
        Ok(p)
    }

    pub fn from_json(text: &str) -> Result<ConstructionProfile, ProfileError> {
        let j: ProfileJson = serde_json::from_str(text).map_err(|e| ProfileError::Json(e.to_string()))?;
        ConstructionProfile::from_json_value(&j)
    }

    pub fn to_json_value(&self) -> ProfileJson {
        let mut classes: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (i, &c) in self.class_of.iter().enumerate() {
            if c > 0 {
                classes.entry(c.to_string()).or_default().push(i + 1);
            }
        }
        let alphas = self.alphas.iter().map(|(&(i, j), a)| (format!("{i},{j}"), a.clone())).collect();
        let betas = self.betas.iter().map(|(i, b)| (i.to_string(), b.to_vec())).collect();
        ProfileJson { n: self.n, k: self.k, classes, alphas, betas }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// A random valid profile: random classes, random unit alphas and betas.
    pub fn random<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<ConstructionProfile, ProfileError> {
        let mut p = ConstructionProfile::new(n, k)?;
        let top = p.max_allowed_class();
        for c in p.class_of.iter_mut() {
            *c = rng.gen_range(0..=top);
        }
        p.fill_random_units(rng);
        Ok(p)
    }

    /// Supplies random unit alphas and betas for every populated class.
    pub fn fill_random_units<R: Rng>(&mut self, rng: &mut R) {
        for c in self.populated() {
            if c > 4 * self.k && c < 5 * self.k {
                let i = c - 4 * self.k;
                let b = [random_unit(self.n, rng), random_unit(self.n, rng), random_unit(self.n, rng)];
                self.betas.entry(i).or_insert(b);
            }
            for key in self.alpha_indices(c) {
                if !self.alphas.contains_key(&key) {
                    let a = random_unit(self.n, rng);
                    self.alphas.insert(key, a);
                }
            }
        }
    }
}

/// A random unit of `F16[x]/(x^n - 1)`, degree below `n`.
pub fn random_unit<R: Rng>(n: usize, rng: &mut R) -> F16Poly {
    let m = F16Poly::xn_minus_1(n);
    loop {
        let p = F16Poly::new((0..n).map(|_| F16::from_bits(rng.gen())).collect());
        if !p.is_zero() && p.gcd(&m).is_one() {
            return p;
        }
    }
}
