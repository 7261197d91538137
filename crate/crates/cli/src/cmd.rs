use std::path::{Path, PathBuf};

use m4cyclic::codebuild::{
    assemble_generators, gray_span, to_rprime_form, CardinalitySummary, ConstructionProfile, GeneratorSet,
    LinearCodeF16, ProfileError, ProfileJson,
};
use m4cyclic::dualbuild::{
    dual_cardinality_check, euclidean_dual_generators, hermitian_dual_generators, verify_orthogonality, Flavor,
};
use m4cyclic::genexpr::{self, ParseError};
use m4cyclic::metrics::{
    fmt_vec, mds_gap, min_distance_certified, min_distance_exhaustive, DistanceResult, MetricsError, SearchLimits,
    EXHAUSTIVE_LIMIT,
};
use m4cyclic::poly::{factor_xn_minus_1, PolyError};
use m4cyclic::reproduce::{self, describe_certificate, ExampleReport, ReproError, Verdict};
use m4cyclic::rring::ConjMode;
use m4cyclic::suites::{self, Suite, SuiteConfig};
use serde::Serialize;
use thiserror::Error;

use crate::report::{print_json, tsv_row, Format, Timer};
use crate::CodeInput;

pub enum Outcome {
    Ok,
    Mismatch,
}

impl Outcome {
    fn from_ok(ok: bool) -> Outcome {
        if ok {
            Outcome::Ok
        } else {
            Outcome::Mismatch
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("generator {index} {expr:?}: {source}\n  {expr}\n  {caret}")]
    Parse { index: usize, expr: String, caret: String, source: ParseError },
    #[error("{path}: {source}")]
    Profile { path: PathBuf, source: ProfileError },
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Repro(#[from] ReproError),
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn odd_n(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(usage(format!("n = {n} must be odd")));
    }
    Ok(())
}

#[derive(Serialize)]
struct FactorRow {
    index: usize,
    factor: String,
    degree: usize,
}

pub fn factor(n: usize, fmt: Format) -> Result<Outcome> {
    odd_n(n)?;
    let t = Timer::start();
    let fs = factor_xn_minus_1(n)?;
    let rows: Vec<FactorRow> = fs
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| FactorRow { index: i + 1, factor: f.to_string(), degree: f.deg().unwrap_or(0) })
        .collect();
    match fmt {
        Format::Json => print_json(&t.report(serde_json::json!({ "n": n }), &rows)),
        Format::Tsv => {
            rows.iter().for_each(|r| tsv_row([format!("f{}", r.index), r.factor.clone(), r.degree.to_string()]))
        }
        Format::Human => {
            println!("x^{n} - 1 over GF(16), w^4 = w + 1");
            for r in &rows {
                println!("  f{} = {}", r.index, r.factor);
            }
        }
    }
    Ok(Outcome::Ok)
}

/// A code read from `--gen` expressions or a `--profile`.
struct Loaded {
    n: usize,
    k: usize,
    gens: GeneratorSet,
    profile: Option<ConstructionProfile>,
}

#[derive(Serialize)]
struct InputEcho {
    n: usize,
    k: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<ProfileJson>,
    seed: u64,
}

impl Loaded {
    fn echo(&self, input: &CodeInput) -> InputEcho {
        InputEcho {
            n: self.n,
            k: self.k,
            generators: input.gens.clone(),
            profile: self.profile.as_ref().map(|p| p.to_json_value()),
            seed: input.seed,
        }
    }
}

fn read_profile(path: &Path) -> Result<ConstructionProfile> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    ConstructionProfile::from_json(&text).map_err(|source| CliError::Profile { path: path.into(), source })
}

fn load(input: &CodeInput) -> Result<Loaded> {
    if let Some(path) = &input.profile {
        let p = read_profile(path)?;
        if input.n.is_some_and(|n| n != p.n) || input.k.is_some_and(|k| k != p.k) {
            return Err(usage("--n/--k disagree with the profile"));
        }
        let gens = assemble_generators(&p).map_err(|source| CliError::Profile { path: path.clone(), source })?;
        return Ok(Loaded { n: p.n, k: p.k, gens, profile: Some(p) });
    }
    if input.gens.is_empty() {
        return Err(usage("give --gen expressions (with --n and --k) or --profile"));
    }
    let n = input.n.ok_or_else(|| usage("--gen needs --n"))?;
    let k = input.k.ok_or_else(|| usage("--gen needs --k"))?;
    odd_n(n)?;
    if !(1..=m4cyclic::rring::MAX_K).contains(&k) {
        return Err(usage(format!("k = {k} outside 1..={}", m4cyclic::rring::MAX_K)));
    }
    let factors = factor_xn_minus_1(n)?;
    let mut gens = GeneratorSet::new(n, k);
    for (i, e) in input.gens.iter().enumerate() {
        let p = genexpr::parse(e, &factors, k).map_err(|source| CliError::Parse {
            index: i + 1,
            expr: e.clone(),
            caret: format!("{}^", " ".repeat(source.pos)),
            source,
        })?;
        gens.push(e.clone(), p);
    }
    Ok(Loaded { n, k, gens, profile: None })
}

#[derive(Serialize)]
struct CodeOut<'a> {
    params: [Option<usize>; 3],
    d_mds: usize,
    mds_gap: Option<i64>,
    certificate: String,
    distance: &'a DistanceResult,
    generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cardinality: Option<CardinalitySummary>,
}

fn code_out<'a>(l: &Loaded, code: &LinearCodeF16, dist: &'a DistanceResult) -> CodeOut<'a> {
    CodeOut {
        params: [Some(code.length()), Some(code.dim()), dist.d],
        d_mds: code.length() - code.dim() + 1,
        mds_gap: dist.d.map(|d| mds_gap(code.length(), code.dim(), d)),
        certificate: describe_certificate(&dist.certificate),
        distance: dist,
        generators: l.gens.polys().map(genexpr::format).collect(),
        cardinality: l.profile.as_ref().map(|p| to_rprime_form(p).0),
    }
}

fn print_code(l: &Loaded, code: &LinearCodeF16, dist: &DistanceResult, fmt: Format, input: &CodeInput, t: &Timer) {
    let out = code_out(l, code, dist);
    match fmt {
        Format::Json => print_json(&t.report(l.echo(input), &out)),
        Format::Tsv => {
            tsv_row(["length", "dim", "d", "d_mds", "exact"]);
            tsv_row([
                code.length().to_string(),
                code.dim().to_string(),
                dist.d_display(),
                out.d_mds.to_string(),
                dist.is_exact().to_string(),
            ]);
        }
        Format::Human => {
            println!("n = {}, k = {}", l.n, l.k);
            for (g, p) in l.gens.gens.iter().zip(&out.generators) {
                match g.class {
                    Some(_) => println!("  {}: {p}", g.label),
                    None => println!("  {}", g.label),
                }
            }
            println!("code [{},{},{}]  d_MDS {}", code.length(), code.dim(), dist.d_display(), out.d_mds);
            if let Some(gap) = out.mds_gap {
                println!("MDS gap {gap}");
            }
            println!("certificate: {}", out.certificate);
            if let Some(w) = &dist.witness {
                println!("witness: {}", fmt_vec(w));
            }
            if let Some(c) = &out.cardinality {
                println!("xi = {}, eta = {}, R' count {:?}", c.xi, c.eta, c.rprime_exponent());
            }
        }
    }
}

fn limits(seed: u64) -> SearchLimits {
    SearchLimits { seed, ..SearchLimits::default() }
}

pub fn build(input: &CodeInput, fmt: Format) -> Result<Outcome> {
    let t = Timer::start();
    let l = load(input)?;
    let code = gray_span(&l.gens);
    let dist = min_distance_certified(&code, None, &limits(input.seed));
    print_code(&l, &code, &dist, fmt, input, &t);
    Ok(Outcome::Ok)
}

pub fn mindist(input: &CodeInput, exhaustive: bool, fmt: Format) -> Result<Outcome> {
    let t = Timer::start();
    let l = load(input)?;
    let code = gray_span(&l.gens);
    let dist = match exhaustive {
        true => min_distance_exhaustive(&code, EXHAUSTIVE_LIMIT)?,
        false => min_distance_certified(&code, None, &limits(input.seed)),
    };
    print_code(&l, &code, &dist, fmt, input, &t);
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct DualOut {
    flavor: Flavor,
    conj_mode: ConjMode,
    /// Set when the dual is the nullspace of the Gray image rather than a generator list.
    image_level: bool,
    generators: Vec<String>,
    length: usize,
    dim_c: usize,
    dim_dual: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    xi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta: Option<usize>,
    violations: usize,
    pairs: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    examples: Vec<String>,
    ok: bool,
}

pub fn dual(input: &CodeInput, hermitian: bool, conj: ConjMode, fmt: Format) -> Result<Outcome> {
    let t = Timer::start();
    let l = load(input)?;
    let flavor = if hermitian { Flavor::Hermitian } else { Flavor::Euclidean };
    let out = match &l.profile {
        Some(p) => {
            let perr = |source| CliError::Profile { path: input.profile.clone().unwrap_or_default(), source };
            let d = match flavor {
                Flavor::Euclidean => euclidean_dual_generators(p),
                Flavor::Hermitian => hermitian_dual_generators(p),
            }
            .map_err(perr)?;
            let orth = verify_orthogonality(&l.gens, &d, flavor, conj).expect("same shape");
            let card = dual_cardinality_check(p, flavor).map_err(perr)?;
            DualOut {
                flavor,
                conj_mode: conj,
                image_level: false,
                generators: d.gens.iter().map(|g| format!("{}: {}", g.label, genexpr::format(&g.poly))).collect(),
                length: card.length,
                dim_c: card.dim_c,
                dim_dual: card.dim_dual,
                xi: Some(card.xi),
                eta: Some(card.eta),
                violations: orth.violation_count,
                pairs: orth.pairs,
                examples: orth
                    .violations
                    .iter()
                    .map(|v| format!("<{}, {}> = {}", v.c_side, v.d_side, v.value))
                    .collect(),
                ok: orth.ok() && card.ok(),
            }
        }
        None => {
            // no construction data: the dual of the image code, by nullspace
            let code = gray_span(&l.gens);
            let h = code.space.nullspace();
            DualOut {
                flavor,
                conj_mode: conj,
                image_level: true,
                generators: Vec::new(),
                length: code.length(),
                dim_c: code.dim(),
                dim_dual: h.dim(),
                xi: None,
                eta: None,
                violations: 0,
                pairs: 0,
                examples: Vec::new(),
                ok: code.dim() + h.dim() == code.length(),
            }
        }
    };
    match fmt {
        Format::Json => print_json(&t.report(l.echo(input), &out)),
        Format::Tsv => {
            tsv_row(["flavor", "length", "dim_c", "dim_dual", "eta", "violations", "ok"]);
            tsv_row([
                out.flavor.to_string(),
                out.length.to_string(),
                out.dim_c.to_string(),
                out.dim_dual.to_string(),
                out.eta.map(|e| e.to_string()).unwrap_or_default(),
                out.violations.to_string(),
                out.ok.to_string(),
            ]);
        }
        Format::Human => {
            println!("{} dual, n = {}, k = {}, conjugation {}", out.flavor, l.n, l.k, out.conj_mode);
            if out.image_level {
                println!("  (image-level: nullspace of the Gray image, no generator list)");
            }
            for g in &out.generators {
                println!("  {g}");
            }
            println!("dim C = {}, dim dual = {}, length {}", out.dim_c, out.dim_dual, out.length);
            if let (Some(x), Some(e)) = (out.xi, out.eta) {
                println!("xi = {x}, eta = {e}, xi + eta = {} (4kn = {})", x + e, out.length);
            }
            if !out.image_level {
                println!("orthogonality: {} violations in {} pairs", out.violations, out.pairs);
                for e in &out.examples {
                    println!("  {e}");
                }
            }
            println!("{}", if out.ok { "OK" } else { "VIOLATION" });
        }
    }
    Ok(Outcome::from_ok(out.ok))
}

pub fn reproduce(example: &str, seed: u64, fmt: Format) -> Result<Outcome> {
    let t = Timer::start();
    let cat = reproduce::catalog()?;
    let ids: Vec<String> = match example {
        "all" => cat.examples.iter().map(|e| e.id.clone()).collect(),
        id => vec![cat.find(id).map_err(|_| usage(format!("no example {id:?}; use 1..4 or all")))?.id.clone()],
    };
    let lim = limits(seed);
    let reports: Vec<ExampleReport> =
        ids.iter().map(|id| reproduce::reproduce_example(&cat, id, &lim)).collect::<std::result::Result<_, _>>()?;
    let ok = reports.iter().all(|r| r.all_match());
    match fmt {
        Format::Json => print_json(&t.report(serde_json::json!({ "example": example, "seed": seed }), &reports)),
        Format::Tsv => {
            tsv_row(["example", "row", "expected", "got", "d_mds_expected", "d_mds", "exact", "verdict"]);
            for r in reports.iter().flat_map(|e| &e.rows) {
                tsv_row([
                    r.example.clone(),
                    r.row.to_string(),
                    r.want(),
                    r.got(),
                    r.expected_d_mds.map(|m| m.to_string()).unwrap_or_default(),
                    r.d_mds.to_string(),
                    r.distance.is_exact().to_string(),
                    verdict(r.verdict).into(),
                ]);
            }
        }
        Format::Human => {
            for e in &reports {
                println!("{} ({})", e.id, e.title);
                println!("  {:<4} {:<12} {:<12} {:<8} verdict", "row", "expected", "got", "d_MDS");
                for r in &e.rows {
                    let dm = match r.expected_d_mds {
                        Some(m) => format!("{m}/{}", r.d_mds),
                        None => r.d_mds.to_string(),
                    };
                    println!("  {:<4} {:<12} {:<12} {:<8} {}", r.row, r.want(), r.got(), dm, verdict(r.verdict));
                    if let Some([a, b, c]) = r.existing {
                        println!("       reference code [{a},{b},{c}]");
                    }
                    for d in &r.diff {
                        println!("       {d}");
                    }
                }
            }
        }
    }
    Ok(Outcome::from_ok(ok))
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Match => "MATCH",
        Verdict::Mismatch => "MISMATCH",
    }
}

pub fn verify(suite: &str, profiles: &[PathBuf], seed: u64, fmt: Format) -> Result<Outcome> {
    let t = Timer::start();
    let suite: Suite = suite.parse().map_err(CliError::Usage)?;
    let mut inputs = Vec::new();
    for path in profiles {
        inputs.push((path.display().to_string(), read_profile(path)?));
    }
    let cfg = SuiteConfig { seed, inputs, ..SuiteConfig::default() };
    let reports = suites::run(suite, &cfg);
    let ok = reports.iter().all(|r| r.ok());
    match fmt {
        Format::Json => print_json(&t.report(
            serde_json::json!({ "suite": suite, "seed": seed, "profiles": profiles }),
            serde_json::json!({ "ok": ok, "suites": reports }),
        )),
        Format::Tsv => {
            tsv_row(["suite", "check", "cases", "failures", "passed"]);
            for r in &reports {
                for c in &r.checks {
                    tsv_row([
                        r.suite.to_string(),
                        c.name.clone(),
                        c.cases.to_string(),
                        c.failures.to_string(),
                        c.passed.to_string(),
                    ]);
                }
            }
        }
        Format::Human => {
            for r in &reports {
                let status = if r.ok() { "PASS" } else { "FAIL" };
                println!("{status} {} ({} checks, {} ms)", r.suite, r.checks.len(), r.millis);
                for c in r.failures() {
                    println!("  {}: {}/{} failed {}", c.name, c.failures, c.cases, c.detail);
                }
            }
        }
    }
    Ok(Outcome::from_ok(ok))
}
