//! Rebuilds the bundled example tables and compares them with what the
//! construction actually produces. Expected values live only in
//! `data/examples.toml`; the builder never sees them.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codebuild::{gray_span, GeneratorSet};
use crate::genexpr::{self, ParseError};
use crate::metrics::{fmt_vec, min_distance_certified, Certificate, DistanceResult, SearchLimits};
use crate::poly::{factor_xn_minus_1, F16Poly, PolyError};

const EXAMPLES_TOML: &str = include_str!("../data/examples.toml");

#[derive(Debug, Error)]
pub enum ReproError {
    #[error("bundled example data is malformed: {0}")]
    Data(#[from] toml::de::Error),
    #[error("no example {0:?}")]
    UnknownExample(String),
    #[error("example {example} row {row}, generator {gen:?}: {source}")]
    Parse { example: String, row: usize, gen: String, source: ParseError },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Catalog {
    #[serde(rename = "example")]
    pub examples: Vec<ExampleTable>,
    /// Published factor lists keyed by `n`.
    pub factors: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ExampleTable {
    pub id: String,
    pub title: String,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "row")]
    pub rows: Vec<ExampleRow>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ExampleRow {
    /// Overrides the table's `n`.
    #[serde(default)]
    pub n: Option<usize>,
    pub gens: Vec<String>,
    pub expected: [usize; 3],
    #[serde(default)]
    pub d_mds: Option<usize>,
    /// Comparison code printed next to the row, for reference only.
    #[serde(default)]
    pub existing: Option<[usize; 3]>,
}

pub fn catalog() -> Result<Catalog, ReproError> {
    Ok(toml::from_str(EXAMPLES_TOML)?)
}

impl Catalog {
    /// Accepts `1`, `ex1` or the full id.
    pub fn find(&self, id: &str) -> Result<&ExampleTable, ReproError> {
        let want = if id.starts_with("ex") { id.to_string() } else { format!("ex{id}") };
        self.examples.iter().find(|e| e.id == want).ok_or_else(|| ReproError::UnknownExample(id.to_string()))
    }

    pub fn published_factors(&self, n: usize) -> Option<&[String]> {
        self.factors.get(&n.to_string()).map(|v| v.as_slice())
    }
}

/// Computed factor list against the published one, as display strings.
#[derive(Clone, Debug, Serialize)]
pub struct FactorCheck {
    pub n: usize,
    pub computed: Vec<String>,
    pub published: Vec<String>,
    pub matches: bool,
}

pub fn check_factors(cat: &Catalog, n: usize) -> Result<FactorCheck, ReproError> {
    let computed: Vec<String> = factor_xn_minus_1(n)?.factors.iter().map(|f| f.to_string()).collect();
    let published = cat.published_factors(n).map(|p| p.to_vec()).unwrap_or_default();
    // compare as polynomials so spacing in the data file does not matter
    let parsed: Result<Vec<F16Poly>, _> = published.iter().map(|s| s.parse::<F16Poly>()).collect();
    let matches = match parsed {
        Ok(p) => p.iter().map(|f| f.to_string()).collect::<Vec<_>>() == computed,
        Err(_) => false,
    };
    Ok(FactorCheck { n, computed, published, matches })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub example: String,
    pub row: usize,
    pub n: usize,
    pub k: usize,
    pub generators: Vec<String>,
    pub expected: [usize; 3],
    pub expected_d_mds: Option<usize>,
    pub existing: Option<[usize; 3]>,
    pub length: usize,
    pub dim: usize,
    pub distance: DistanceResult,
    pub d_mds: usize,
    pub verdict: Verdict,
    /// One line per disagreeing field.
    pub diff: Vec<String>,
    pub millis: u128,
}

impl RowReport {
    pub fn got(&self) -> String {
        format!("[{},{},{}]", self.length, self.dim, self.distance.d_display())
    }

    pub fn want(&self) -> String {
        let [a, b, c] = self.expected;
        format!("[{a},{b},{c}]")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub id: String,
    pub title: String,
    pub rows: Vec<RowReport>,
}

impl ExampleReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Match)
    }
}

/// Parse a row's generators against the canonical factors of its `n`.
pub fn build_row(ex: &ExampleTable, row_index: usize) -> Result<GeneratorSet, ReproError> {
    let row = &ex.rows[row_index];
    let n = row.n.unwrap_or(ex.n);
    let factors = factor_xn_minus_1(n)?;
    let mut set = GeneratorSet::new(n, ex.k);
    for g in &row.gens {
        let p = genexpr::parse(g, &factors, ex.k).map_err(|source| ReproError::Parse {
            example: ex.id.clone(),
            row: row_index + 1,
            gen: g.clone(),
            source,
        })?;
        set.push(g.clone(), p);
    }
    Ok(set)
}

pub fn reproduce_row(ex: &ExampleTable, row_index: usize, lim: &SearchLimits) -> Result<RowReport, ReproError> {
    let start = Instant::now();
    let row = &ex.rows[row_index];
    let set = build_row(ex, row_index)?;
    let code = gray_span(&set);
    let (length, dim) = (code.length(), code.dim());
    let distance = min_distance_certified(&code, None, lim);
    let d_mds = length - dim + 1;
    let [el, ed, edist] = row.expected;
    let mut diff = Vec::new();
    if length != el {
        diff.push(format!("length {length} != {el}"));
    }
    if dim != ed {
        diff.push(format!("dim {dim} != {ed}"));
    }
    match distance.d {
        Some(d) if distance.is_exact() && d != edist => diff.push(format!("d {d} != {edist}")),
        Some(d) if !distance.is_exact() && (edist < distance.lower || edist > d) => {
            diff.push(format!("d in {}..={d} excludes {edist}", distance.lower))
        }
        Some(_) if !distance.is_exact() => diff.push(format!("d not certified, {} is within bounds", edist)),
        None => diff.push(format!("zero code, expected d {edist}")),
        _ => {}
    }
    if let Some(m) = row.d_mds {
        if m != d_mds {
            diff.push(format!("d_MDS {d_mds} != {m}"));
        }
    }
    if !diff.is_empty() {
        if let Some(w) = &distance.witness {
            diff.push(format!("witness {}", fmt_vec(w)));
        }
        diff.push(format!("certificate {}", describe_certificate(&distance.certificate)));
    }
    let verdict = if diff.is_empty() { Verdict::Match } else { Verdict::Mismatch };
    Ok(RowReport {
        example: ex.id.clone(),
        row: row_index + 1,
        n: set.n,
        k: ex.k,
        generators: row.gens.clone(),
        expected: row.expected,
        expected_d_mds: row.d_mds,
        existing: row.existing,
        length,
        dim,
        distance,
        d_mds,
        verdict,
        diff,
        millis: start.elapsed().as_millis(),
    })
}

pub fn reproduce_example(cat: &Catalog, id: &str, lim: &SearchLimits) -> Result<ExampleReport, ReproError> {
    let ex = cat.find(id)?;
    let rows = (0..ex.rows.len()).map(|i| reproduce_row(ex, i, lim)).collect::<Result<_, _>>()?;
    Ok(ExampleReport { id: ex.id.clone(), title: ex.title.clone(), rows })
}

pub fn describe_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Empty => "empty code".into(),
        Certificate::Exhaustive { codewords } => format!("exhaustive over {codewords} codewords"),
        Certificate::ColumnIndependence { up_to: 0 } => "full space, d = 1".into(),
        Certificate::ColumnIndependence { up_to } => format!("every {up_to} parity-check columns independent"),
        Certificate::Open { lower, upper } => format!("open, {lower} <= d <= {upper}"),
    }
}
