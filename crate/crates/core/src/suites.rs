//! Fixed-seed invariant suites. Each suite returns a list of named checks
//! with counts, so a failure says which property broke and how often.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codebuild::{
    assemble_generators, crt_component_dims, crt_decompose, gray_span, submodule_sample_classify, to_rprime_form,
    ConstructionProfile, ProfileError, ProfileJson,
};
use crate::dualbuild::{
    dual_cardinality_check, euclidean_dual_generators, hermitian_dual_generators, verify_orthogonality, Flavor,
};
use crate::genexpr::RPoly;
use crate::gf2e::F16;
use crate::linalg::gf2_rank;
use crate::metrics::DEFAULT_SEED;
use crate::rring::{psi, psi_inv, tables, theta, theta_inv, twist_exponent, ConjMode, RElem};

const PROFILES_JSON: &str = include_str!("../data/profiles.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Iso,
    Gray,
    Cardinality,
    Duality,
    Submodule,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 6] =
        [Suite::Core, Suite::Iso, Suite::Gray, Suite::Cardinality, Suite::Duality, Suite::Submodule];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Iso => "iso",
            Suite::Gray => "gray",
            Suite::Cardinality => "cardinality",
            Suite::Duality => "duality",
            Suite::Submodule => "submodule",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Cases examined and cases that failed.
    pub cases: usize,
    pub failures: usize,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, cases: usize, failures: usize, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed: failures == 0, cases, failures, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct NamedProfile {
    pub name: String,
    pub profile: ProfileJson,
}

/// The profiles shipped in `data/profiles.json`.
pub fn bundled_profiles() -> Vec<(String, ConstructionProfile)> {
    let named: Vec<NamedProfile> = serde_json::from_str(PROFILES_JSON).expect("bundled profiles parse");
    named
        .into_iter()
        .map(|np| {
            let p = ConstructionProfile::from_json_value(&np.profile).expect("bundled profile is valid");
            (np.name, p)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random ring elements per `k` for the isomorphism checks.
    pub iso_samples: usize,
    /// Random codeword pairs for the Lee/Hamming check.
    pub gray_pairs: usize,
    /// Random profiles per `(n, k)` for the cardinality suite.
    pub profiles_per_shape: usize,
    /// Random profiles per shape added to the duality corpus.
    pub duality_random: usize,
    pub submodule_trials: usize,
    /// User-supplied profiles for the core suite.
    pub inputs: Vec<(String, ConstructionProfile)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            iso_samples: 1000,
            gray_pairs: 10_000,
            profiles_per_shape: 50,
            duality_random: 4,
            submodule_trials: 200,
            inputs: Vec::new(),
        }
    }
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::PARTS.iter().map(|&s| run_one(s, cfg)).collect(),
        s => vec![run_one(s, cfg)],
    }
}

fn run_one(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let checks = match suite {
        Suite::Core => core_checks(&cfg.inputs),
        Suite::Iso => iso_checks(cfg),
        Suite::Gray => gray_checks(cfg),
        Suite::Cardinality => cardinality_checks(cfg),
        Suite::Duality => duality_checks(cfg),
        Suite::Submodule => submodule_checks(cfg),
        Suite::All => unreachable!("expanded by run"),
    };
    SuiteReport { suite, seed: cfg.seed, checks, millis: start.elapsed().as_millis() }
}

fn rng_for(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Per-profile sanity on user inputs: the generators build, the code fits,
/// and the right CRT components add up. No inputs is a vacuous pass.
fn core_checks(inputs: &[(String, ConstructionProfile)]) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, p) in inputs {
        let built = p.validate().and_then(|_| assemble_generators(p));
        let gens = match built {
            Ok(g) => g,
            Err(e) => {
                out.push(Check::new(format!("{name}: builds"), 1, 1, e.to_string()));
                continue;
            }
        };
        let code = gray_span(&gens);
        let fits = code.dim() <= code.length();
        out.push(Check::new(
            format!("{name}: dim within length"),
            1,
            usize::from(!fits),
            format!("[{}, {}]", code.length(), code.dim()),
        ));
        let (crt_ok, detail) = match crt_decompose(p.n) {
            Ok(r) if r.ok() => {
                let dims = crt_component_dims(&code, &r);
                let total: usize = dims.iter().sum();
                (total == code.dim(), format!("components {dims:?} sum {total}, dim {}", code.dim()))
            }
            Ok(_) => (false, "idempotents fail".into()),
            Err(e) => (false, e.to_string()),
        };
        out.push(Check::new(format!("{name}: CRT components"), 1, usize::from(!crt_ok), detail));
    }
    out
}

fn iso_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=4 {
        let rank = tables(k).map(|t| t.rank()).unwrap_or(0);
        out.push(Check::new(
            format!("k={k}: basis rank"),
            1,
            usize::from(rank != 16 * k),
            format!("rank {rank}, want {}", 16 * k),
        ));
        let mut rng = rng_for(cfg, k as u64);
        let (mut round, mut additive, mut multiplicative) = (0, 0, 0);
        for _ in 0..cfg.iso_samples {
            let a = RElem::random(k, &mut rng);
            let b = RElem::random(k, &mut rng);
            round += usize::from(psi(&psi_inv(&a)) != a);
            additive += usize::from(psi_inv(&(a + b)) != psi_inv(&a).add(&psi_inv(&b)));
            multiplicative += usize::from(psi_inv(&(a * b)) != psi_inv(&a).mul(&psi_inv(&b)));
        }
        let n = cfg.iso_samples;
        out.push(Check::new(format!("k={k}: psi round trip"), n, round, ""));
        out.push(Check::new(format!("k={k}: psi additive"), n, additive, ""));
        out.push(Check::new(format!("k={k}: psi multiplicative"), n, multiplicative, ""));
    }
    let (bad, detail) = match twist_exponent() {
        Ok(s) => (usize::from(![2, 4, 8].contains(&s)), format!("s = {s}")),
        Err(e) => (1, e.to_string()),
    };
    out.push(Check::new("twist exponent in {2, 4, 8}", 1, bad, detail));
    out
}

fn gray_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=4 {
        // theta is F2-linear; bijective iff the images of an F2 basis are independent
        let images: Vec<u128> = (0..16 * k)
            .map(|b| {
                theta(&RElem::from_bits(k, 1 << b))
                    .iter()
                    .enumerate()
                    .fold(0u128, |acc, (i, c)| acc | (c.bits() as u128) << (4 * i))
            })
            .collect();
        let rank = gf2_rank(&images);
        out.push(Check::new(format!("k={k}: theta bijective"), 1, usize::from(rank != 16 * k), format!("rank {rank}")));
        let mut rng = rng_for(cfg, 100 + k as u64);
        let (mut inv, mut add, mut right) = (0, 0, 0);
        let samples = cfg.iso_samples;
        for _ in 0..samples {
            let a = RElem::random(k, &mut rng);
            let b = RElem::random(k, &mut rng);
            let lam = F16::from_bits(rng.gen_range(0..16));
            inv += usize::from(theta_inv(k, &theta(&a)) != a);
            let sum: Vec<F16> = theta(&a).iter().zip(theta(&b)).map(|(x, y)| *x + y).collect();
            add += usize::from(theta(&(a + b)) != sum);
            // right scalar through ring multiplication, not through coordinates
            let scaled: Vec<F16> = theta(&a).iter().map(|x| *x * lam).collect();
            right += usize::from(theta(&(a * RElem::scalar(k, lam))) != scaled);
        }
        out.push(Check::new(format!("k={k}: theta inverse"), samples, inv, ""));
        out.push(Check::new(format!("k={k}: theta additive"), samples, add, ""));
        out.push(Check::new(format!("k={k}: theta right-linear"), samples, right, ""));
    }
    let mut rng = rng_for(cfg, 200);
    let shapes = [(1, 1), (1, 2), (3, 1), (3, 2)];
    let mut bad = 0;
    for t in 0..cfg.gray_pairs {
        let (n, k) = shapes[t % shapes.len()];
        let c = RPoly::random(n, k, &mut rng);
        let d = RPoly::random(n, k, &mut rng);
        let lee = c.add(&d).lee_weight() as usize;
        let ham = c.gray_image().iter().zip(d.gray_image()).filter(|(x, y)| **x != *y).count();
        bad += usize::from(lee != ham);
    }
    out.push(Check::new("Lee distance = Hamming distance of images, n <= 3", cfg.gray_pairs, bad, ""));
    out
}

fn cardinality_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, k) in [(3, 1), (3, 2), (5, 1), (5, 2)] {
        let mut rng = rng_for(cfg, 300 + 10 * n as u64 + k as u64);
        let (mut rank_bad, mut count_bad, mut errors) = (0, 0, 0);
        let mut first = String::new();
        for _ in 0..cfg.profiles_per_shape {
            let p = match ConstructionProfile::random(n, k, &mut rng) {
                Ok(p) => p,
                Err(_) => {
                    errors += 1;
                    continue;
                }
            };
            let (summary, _) = to_rprime_form(&p);
            let dim = match assemble_generators(&p) {
                Ok(g) => gray_span(&g).dim(),
                Err(_) => {
                    errors += 1;
                    continue;
                }
            };
            let count = summary.rprime_exponent().unwrap_or(usize::MAX);
            if dim != summary.xi && first.is_empty() {
                first = format!("classes {:?}: rank {dim}, xi {}, R' count {count}", p.class_of, summary.xi);
            }
            rank_bad += usize::from(dim != summary.xi);
            count_bad += usize::from(count != summary.xi);
        }
        let m = cfg.profiles_per_shape;
        out.push(Check::new(format!("n={n} k={k}: profiles build"), m, errors, ""));
        out.push(Check::new(format!("n={n} k={k}: gray_span rank = xi"), m, rank_bad, first));
        out.push(Check::new(format!("n={n} k={k}: R' count = xi"), m, count_bad, ""));
    }
    out
}

/// The bundled corpus plus a few random profiles per shape.
pub fn duality_corpus(cfg: &SuiteConfig) -> Vec<(String, ConstructionProfile)> {
    let mut corpus = bundled_profiles();
    for (n, k) in [(3, 1), (3, 2), (7, 1)] {
        let mut rng = rng_for(cfg, 400 + 10 * n as u64 + k as u64);
        for i in 0..cfg.duality_random {
            if let Ok(p) = ConstructionProfile::random(n, k, &mut rng) {
                corpus.push((format!("random n={n} k={k} #{i}"), p));
            }
        }
    }
    corpus
}

fn duality_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let corpus = duality_corpus(cfg);
    let mut out = Vec::new();
    let mut sums_bad = Vec::new();
    let mut coincide = (0, 0);
    for (name, p) in &corpus {
        let res: Result<(), ProfileError> = (|| {
            let c = assemble_generators(p)?;
            let de = euclidean_dual_generators(p)?;
            let dh = hermitian_dual_generators(p)?;
            for (flavor, d) in [(Flavor::Euclidean, &de), (Flavor::Hermitian, &dh)] {
                let r = verify_orthogonality(&c, d, flavor, ConjMode::Coefficient).expect("same shape");
                let detail = match r.violations.first() {
                    Some(v) => format!(
                        "{} of {} pairs, e.g. <{}, {}> = {}",
                        r.violation_count, r.pairs, v.c_side, v.d_side, v.value
                    ),
                    None => format!("{} pairs", r.pairs),
                };
                out.push(Check::new(format!("{name}: {flavor} orthogonal"), r.pairs, r.violation_count, detail));
                let card = dual_cardinality_check(p, flavor)?;
                out.push(Check::new(
                    format!("{name}: {flavor} dual size"),
                    1,
                    usize::from(!card.complementary() || !card.matches_eta()),
                    format!("dim C {} + dim D {} vs {}, eta {}", card.dim_c, card.dim_dual, card.length, card.eta),
                ));
            }
            let s = to_rprime_form(p).0;
            if !s.sums_to_full() {
                sums_bad.push(name.clone());
            }
            if p.n == 7 {
                coincide.0 += 1;
                let same = de.polys().zip(dh.polys()).all(|(a, b)| a == b) && de.len() == dh.len();
                coincide.1 += usize::from(!same);
            }
            Ok(())
        })();
        if let Err(e) = res {
            out.push(Check::new(format!("{name}: builds"), 1, 1, e.to_string()));
        }
    }
    out.push(Check::new("xi + eta = 4kn", corpus.len(), sums_bad.len(), sums_bad.join(", ")));
    out.push(Check::new("Hermitian = Euclidean generators at n=7", coincide.0, coincide.1, ""));
    out
}

fn submodule_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=2 {
        let mut rng = rng_for(cfg, 500 + k as u64);
        let r = submodule_sample_classify(k, cfg.submodule_trials, &mut rng);
        let detail = match r.unmatched.first() {
            Some((g, sig)) => format!("e.g. {g} with signature {:?}", sig.0),
            None => format!("{:?}", r.by_family),
        };
        out.push(Check::new(
            format!("k={k}: sampled submodules match a listed form"),
            r.trials,
            r.unmatched_count,
            detail,
        ));
    }
    out
}
