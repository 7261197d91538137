//! Linear algebra over GF(2) and GF(16).

use crate::gf2e::F16;

/// Rank over GF(2) of a set of bit vectors.
pub fn gf2_rank(vectors: &[u128]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &v in vectors {
        let mut x = v;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// A row space over GF(16) kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<Vec<F16>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> RowSpace {
        RowSpace { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<F16>>>(ncols: usize, rows: I) -> RowSpace {
        let mut s = RowSpace::new(ncols);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows sorted by pivot column.
    pub fn rows(&self) -> &[Vec<F16>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the basis.
    pub fn reduce(&self, mut v: Vec<F16>) -> Vec<F16> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x += c * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F16]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F16>) -> bool {
        assert_eq!(v.len(), self.ncols, "row length");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else { return false };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            *x *= inv;
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x += c * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Basis of the orthogonal complement under the standard dot product.
    pub fn nullspace(&self) -> RowSpace {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = RowSpace::new(self.ncols);
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F16::ZERO; self.ncols];
            v[f] = F16::ONE;
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = row[f];
            }
            out.insert(v);
        }
        out
    }

    /// Same row space as `other`.
    pub fn same_space(&self, other: &RowSpace) -> bool {
        self.ncols == other.ncols && self.rows == other.rows
    }
}

pub fn dot(a: &[F16], b: &[F16]) -> F16 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

pub fn weight(v: &[F16]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}
