//! Hamming distances of Gray-image codes, with witnesses and certificates,
//! and Lee-weight histograms.

mod packed;

pub use packed::PackedVec;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::codebuild::LinearCodeF16;
use crate::genexpr::RPoly;
use crate::gf2e::{F16, MUL};

/// Default cap on `16^dim` for full enumeration.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 24;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricsError {
    #[error("16^{dim} codewords exceed the enumeration limit {limit}")]
    TooLarge { dim: usize, limit: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// The code is `{0}`.
    Empty,
    Exhaustive {
        codewords: u64,
    },
    /// Every set of at most `up_to` columns of the parity-check matrix is independent.
    ColumnIndependence {
        up_to: usize,
    },
    /// Bounds did not meet inside the work limit.
    Open {
        lower: usize,
        upper: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Work {
    pub codewords: u64,
    pub combinations: u64,
    pub probes: u64,
    pub subsets: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub length: usize,
    pub dim: usize,
    /// `None` for the zero code.
    pub d: Option<usize>,
    pub lower: usize,
    pub witness: Option<Vec<F16>>,
    pub certificate: Certificate,
    pub work: Work,
}

impl DistanceResult {
    pub fn is_exact(&self) -> bool {
        !matches!(self.certificate, Certificate::Open { .. })
    }

    pub fn upper(&self) -> Option<usize> {
        self.witness.as_ref().map(|w| w.iter().filter(|c| !c.is_zero()).count())
    }

    pub fn d_display(&self) -> String {
        match (self.d, &self.certificate) {
            (None, _) => "inf".into(),
            (Some(d), Certificate::Open { lower, .. }) => format!("{lower}..={d}"),
            (Some(d), _) => d.to_string(),
        }
    }
}

#[derive(Serialize)]
struct DistanceJson<'a> {
    length: usize,
    dim: usize,
    d: Option<usize>,
    lower: usize,
    exact: bool,
    mds_gap: Option<i64>,
    witness: Option<String>,
    certificate: &'a Certificate,
    work: &'a Work,
}

impl Serialize for DistanceResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DistanceJson {
            length: self.length,
            dim: self.dim,
            d: self.d,
            lower: self.lower,
            exact: self.is_exact(),
            mds_gap: self.d.map(|d| mds_gap(self.length, self.dim, d)),
            witness: self.witness.as_ref().map(|w| fmt_vec(w)),
            certificate: &self.certificate,
            work: &self.work,
        }
        .serialize(s)
    }
}

/// Space-separated `w^i` notation.
pub fn fmt_vec(v: &[F16]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

/// `(length - dim + 1) - d`.
pub fn mds_gap(length: usize, dim: usize, d: usize) -> i64 {
    (length as i64 - dim as i64 + 1) - d as i64
}

fn empty(code: &LinearCodeF16) -> DistanceResult {
    DistanceResult {
        length: code.length(),
        dim: 0,
        d: None,
        lower: code.length() + 1,
        witness: None,
        certificate: Certificate::Empty,
        work: Work::default(),
    }
}

/// Calls `f` on every nonzero codeword, in odometer order over the message space.
fn for_each_codeword<F: FnMut(&PackedVec)>(rows: &[Vec<F16>], length: usize, mut f: F) -> u64 {
    // multiples[i][c] = c * row_i
    let multiples: Vec<Vec<PackedVec>> = rows
        .iter()
        .map(|r| {
            let p = PackedVec::from_slice(r);
            (0..16).map(|c| p.scale(F16::from_bits(c))).collect()
        })
        .collect();
    let dim = rows.len();
    let mut digits = vec![0u8; dim];
    let mut cur = PackedVec::zero(length);
    let mut count = 0;
    loop {
        let mut i = 0;
        while i < dim && digits[i] == 15 {
            cur.add_assign(&multiples[i][15]);
            digits[i] = 0;
            i += 1;
        }
        if i == dim {
            return count;
        }
        let d = digits[i] as usize;
        cur.add_assign(&multiples[i][d ^ (d + 1)]);
        digits[i] += 1;
        count += 1;
        f(&cur);
    }
}

/// Exact minimum weight by enumeration; refuses when `16^dim > limit`.
pub fn min_distance_exhaustive(code: &LinearCodeF16, limit: u64) -> Result<DistanceResult, MetricsError> {
    let dim = code.dim();
    if dim == 0 {
        return Ok(empty(code));
    }
    if 4 * dim as u32 >= 64 || 1u64 << (4 * dim) > limit {
        return Err(MetricsError::TooLarge { dim, limit });
    }
    let mut best: Option<PackedVec> = None;
    let mut best_w = usize::MAX;
    let n = for_each_codeword(code.basis(), code.length(), |c| {
        let w = c.weight();
        if w < best_w {
            best_w = w;
            best = Some(c.clone());
        }
    });
    Ok(DistanceResult {
        length: code.length(),
        dim,
        d: Some(best_w),
        lower: best_w,
        witness: best.map(|b| b.to_vec()),
        certificate: Certificate::Exhaustive { codewords: n },
        work: Work { codewords: n, ..Work::default() },
    })
}

/// Knobs for [`min_distance_certified`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub seed: u64,
    pub probes: usize,
    /// Budget for three-row combinations.
    pub combination_budget: u64,
    /// Budget for parity-check column subsets.
    pub subset_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { seed: DEFAULT_SEED, probes: 64, combination_budget: 20_000_000, subset_budget: 200_000_000 }
    }
}

struct Best {
    vec: Option<PackedVec>,
    w: usize,
}

impl Best {
    fn offer(&mut self, v: &PackedVec) {
        let w = v.weight();
        if w > 0 && w < self.w {
            self.w = w;
            self.vec = Some(v.clone());
        }
    }
}

fn upper_search(code: &LinearCodeF16, hint: Option<usize>, lim: &SearchLimits, work: &mut Work) -> Best {
    let rows: Vec<PackedVec> = code.basis().iter().map(|r| PackedVec::from_slice(r)).collect();
    let mut best = Best { vec: None, w: usize::MAX };
    let done = |b: &Best| hint.is_some_and(|h| b.w <= h) || b.w == 1;
    for r in &rows {
        best.offer(r);
    }
    let scaled: Vec<Vec<PackedVec>> =
        rows.iter().map(|r| (1..16).map(|c| r.scale(F16::from_bits(c))).collect()).collect();
    let dim = rows.len();
    'pairs: for (i, ri) in rows.iter().enumerate() {
        for sj in &scaled[i + 1..] {
            for m in sj {
                let mut v = ri.clone();
                v.add_assign(m);
                work.combinations += 1;
                best.offer(&v);
            }
            if done(&best) {
                break 'pairs;
            }
        }
    }
    let triples = (dim as u64).pow(3) / 6 * 225;
    if !done(&best) && triples <= lim.combination_budget {
        'triples: for (i, ri) in rows.iter().enumerate() {
            for (j, sj) in scaled.iter().enumerate().skip(i + 1) {
                for mj in sj {
                    let mut ij = ri.clone();
                    ij.add_assign(mj);
                    for sl in &scaled[j + 1..] {
                        for ml in sl {
                            let mut v = ij.clone();
                            v.add_assign(ml);
                            work.combinations += 1;
                            best.offer(&v);
                        }
                    }
                }
                if done(&best) {
                    break 'triples;
                }
            }
        }
    }
    // information-set probes: reduce the basis in a shuffled column order
    let mut rng = ChaCha8Rng::seed_from_u64(lim.seed);
    let mut order: Vec<usize> = (0..code.length()).collect();
    for _ in 0..lim.probes {
        if done(&best) {
            break;
        }
        order.shuffle(&mut rng);
        work.probes += 1;
        for r in reduce_in_order(code.basis(), &order) {
            best.offer(&PackedVec::from_slice(&r));
        }
    }
    best
}

/// Row-reduces `rows` choosing pivots in column order `order`.
fn reduce_in_order(rows: &[Vec<F16>], order: &[usize]) -> Vec<Vec<F16>> {
    let mut m: Vec<Vec<F16>> = rows.to_vec();
    let mut r = 0;
    for &c in order {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        m[r].iter_mut().for_each(|x| *x *= inv);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a += f * *b);
            }
        }
        r += 1;
    }
    m
}

/// Depth-first search over column subsets of `h` (columns as byte vectors),
/// keeping an incrementally reduced basis. Reports the first dependent
/// subset of exactly `depth` columns whose proper subsets are independent.
struct SubsetSearch<'a> {
    cols: &'a [Vec<u8>],
    /// reduced vector, pivot, combination over chosen columns
    basis: Vec<(Vec<u8>, usize, Vec<u8>)>,
    chosen: Vec<usize>,
    visited: u64,
    budget: u64,
}

enum Outcome {
    Independent,
    Dependent(Vec<(usize, u8)>),
    OutOfBudget,
}

impl SubsetSearch<'_> {
    fn run(&mut self, start: usize, depth: usize) -> Outcome {
        for c in start..self.cols.len() {
            self.visited += 1;
            if self.visited > self.budget {
                return Outcome::OutOfBudget;
            }
            let t = self.chosen.len();
            let mut v = self.cols[c].clone();
            let mut comb = vec![0u8; t + 1];
            comb[t] = 1;
            for (b, p, bc) in &self.basis {
                let f = v[*p];
                if f != 0 {
                    v.iter_mut().zip(b).for_each(|(x, y)| *x ^= MUL[f as usize][*y as usize]);
                    comb.iter_mut().zip(bc).for_each(|(x, y)| *x ^= MUL[f as usize][*y as usize]);
                }
            }
            match v.iter().position(|&x| x != 0) {
                None => {
                    if t + 1 == depth {
                        self.chosen.push(c);
                        let out = self.chosen.iter().copied().zip(comb).collect();
                        self.chosen.pop();
                        return Outcome::Dependent(out);
                    }
                    // a smaller dependent set exists; shallower depths already ruled that out
                }
                Some(p) if t + 1 < depth => {
                    let inv = F16::from_bits(v[p]).inv().expect("nonzero").bits() as usize;
                    v.iter_mut().for_each(|x| *x = MUL[inv][*x as usize]);
                    comb.iter_mut().for_each(|x| *x = MUL[inv][*x as usize]);
                    let padded = self.basis.iter_mut();
                    padded.for_each(|(_, _, bc)| bc.push(0));
                    self.basis.push((v, p, comb));
                    self.chosen.push(c);
                    let r = self.run(c + 1, depth);
                    self.chosen.pop();
                    self.basis.pop();
                    self.basis.iter_mut().for_each(|(_, _, bc)| {
                        bc.pop();
                    });
                    match r {
                        Outcome::Independent => {}
                        other => return other,
                    }
                }
                Some(_) => {}
            }
        }
        Outcome::Independent
    }
}

/// Minimum distance with a witness and a certificate. The upper bound comes
/// from sparse basis combinations and information-set probes; the lower
/// bound from checking that every small set of parity-check columns is
/// independent, smallest sets first. A dependent set found there is itself
/// a lighter codeword.
pub fn min_distance_certified(code: &LinearCodeF16, d_hint: Option<usize>, lim: &SearchLimits) -> DistanceResult {
    let (length, dim) = (code.length(), code.dim());
    if dim == 0 {
        return empty(code);
    }
    let mut work = Work::default();
    let best = upper_search(code, d_hint, lim, &mut work);
    let upper = best.w;
    let mut witness = best.vec.map(|v| v.to_vec());
    let h = code.space.nullspace();
    let cols: Vec<Vec<u8>> = (0..length).map(|c| h.rows().iter().map(|r| r[c].bits()).collect()).collect();
    let mut d = upper;
    let mut lower = 1;
    let mut open = false;
    for depth in 1..upper {
        let mut s =
            SubsetSearch { cols: &cols, basis: Vec::new(), chosen: Vec::new(), visited: 0, budget: lim.subset_budget };
        let outcome = s.run(0, depth);
        work.subsets += s.visited;
        match outcome {
            Outcome::Independent => lower = depth + 1,
            Outcome::Dependent(support) => {
                let mut w = vec![F16::ZERO; length];
                for (c, x) in support {
                    w[c] = F16::from_bits(x);
                }
                witness = Some(w);
                d = depth;
                lower = depth;
                break;
            }
            Outcome::OutOfBudget => {
                open = true;
                break;
            }
        }
    }
    let certificate =
        if open { Certificate::Open { lower, upper: d } } else { Certificate::ColumnIndependence { up_to: d - 1 } };
    DistanceResult { length, dim, d: Some(d), lower, witness, certificate, work }
}

/// Lee-weight histogram of every codeword of `code`, read back through the Gray map.
pub fn lee_profile(code: &LinearCodeF16, limit: u64) -> Result<BTreeMap<u32, u64>, MetricsError> {
    let dim = code.dim();
    if 4 * dim as u32 >= 64 || 1u64 << (4 * dim) > limit {
        return Err(MetricsError::TooLarge { dim, limit });
    }
    let mut hist = BTreeMap::from([(0u32, 1u64)]);
    for_each_codeword(code.basis(), code.length(), |c| {
        let w = RPoly::from_gray_image(code.n, code.k, &c.to_vec()).lee_weight();
        *hist.entry(w).or_insert(0) += 1;
    });
    Ok(hist)
}
