//! Integral chain complexes and their homology over a field.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::simplicial::SimplicialComplex;
use crate::error::{invalid, Error, Result};
use crate::linalg::arith::Arith;
use crate::linalg::sparse::{self, Echelon, Row, RowSource, SparseMatrix};
use crate::linalg::{Field, Scalar};

/// Integer matrix stored by columns: column `j` is the image of basis
/// element `j`.
#[derive(Clone, Debug, Default)]
pub struct IntMatrix {
    pub nrows: usize,
    pub ncols: usize,
    offsets: Vec<usize>,
    entries: Vec<(u32, i32)>,
}

impl IntMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        IntMatrix { nrows, ncols, offsets: vec![0; ncols + 1], entries: Vec::new() }
    }

    /// Builds from per-column entry lists; duplicate rows are summed.
    pub fn from_columns(nrows: usize, columns: Vec<Vec<(u32, i32)>>) -> Self {
        let ncols = columns.len();
        let mut offsets = Vec::with_capacity(ncols + 1);
        let mut entries: Vec<(u32, i32)> = Vec::new();
        offsets.push(0);
        for mut c in columns {
            c.sort_unstable_by_key(|e| e.0);
            let start = entries.len();
            for (r, v) in c {
                if entries.len() > start && entries[entries.len() - 1].0 == r {
                    entries.last_mut().unwrap().1 += v;
                } else {
                    entries.push((r, v));
                }
            }
            let mut w = start;
            for k in start..entries.len() {
                if entries[k].1 != 0 {
                    entries[w] = entries[k];
                    w += 1;
                }
            }
            entries.truncate(w);
            offsets.push(entries.len());
        }
        IntMatrix { nrows, ncols, offsets, entries }
    }

    pub fn column(&self, j: usize) -> &[(u32, i32)] {
        &self.entries[self.offsets[j]..self.offsets[j + 1]]
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Product `self * other` (exact integers).
    pub fn compose(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows);
        let cols = (0..other.ncols)
            .map(|j| {
                let mut out: Vec<(u32, i32)> = Vec::new();
                for &(k, v) in other.column(j) {
                    for &(i, w) in self.column(k as usize) {
                        out.push((i, v * w));
                    }
                }
                out
            })
            .collect();
        IntMatrix::from_columns(self.nrows, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Row view: rows indexed by the target basis.
    pub fn to_sparse_rows(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.nrows];
        for j in 0..self.ncols {
            for &(i, v) in self.column(j) {
                rows[i as usize].push((j as u32, Scalar::from_integer(v.into())));
            }
        }
        SparseMatrix { ncols: self.ncols, rows }
    }

    /// Image vector of a dense coefficient vector.
    pub fn apply(&self, x: &[Scalar], field: Field) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.nrows];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for &(i, v) in self.column(j) {
                out[i as usize] += xj * Scalar::from_integer(v.into());
            }
        }
        out.into_iter().map(|v| field.reduce(&v).unwrap()).collect()
    }
}

/// Treats the columns (images of basis elements) as rows; same rank.
pub struct ImageRows<'a>(pub &'a IntMatrix);

impl RowSource for ImageRows<'_> {
    fn ncols(&self) -> usize {
        self.0.nrows
    }
    fn build_rows<A: Arith>(&self, a: &A) -> Result<Vec<Row<A::E>>> {
        let m = self.0;
        Ok((0..m.ncols)
            .into_par_iter()
            .map(|j| {
                m.column(j)
                    .iter()
                    .filter_map(|&(i, v)| {
                        let x = a.from_i64(v as i64);
                        (!a.is_zero(&x)).then_some((i, x))
                    })
                    .collect()
            })
            .collect())
    }
}

/// A chain complex `C_top -> ... -> C_min`, where `min` is -1 for augmented
/// complexes. `boundaries[k]` maps degree `min + k` to degree `min + k - 1`
/// (the first one has no rows).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub min_degree: i64,
    pub boundaries: Vec<IntMatrix>,
    /// Homology is exact in degrees up to this one; higher chain groups are
    /// missing from the truncated complex.
    pub valid_through: i64,
}

impl ChainComplex {
    pub fn new(min_degree: i64, boundaries: Vec<IntMatrix>, truncated: bool) -> Result<Self> {
        for w in boundaries.windows(2) {
            if w[0].ncols != w[1].nrows {
                return Err(Error::Dimension("consecutive boundaries do not compose".into()));
            }
        }
        let top = min_degree + boundaries.len() as i64 - 1;
        let valid_through = if truncated { top - 1 } else { i64::MAX };
        Ok(ChainComplex { min_degree, boundaries, valid_through })
    }

    pub fn top_degree(&self) -> i64 {
        self.min_degree + self.boundaries.len() as i64 - 1
    }

    pub fn dim(&self, d: i64) -> usize {
        self.boundary(d).map_or(0, |b| b.ncols)
    }

    /// `∂_d : C_d -> C_{d-1}`.
    pub fn boundary(&self, d: i64) -> Option<&IntMatrix> {
        if d < self.min_degree || d > self.top_degree() {
            return None;
        }
        self.boundaries.get((d - self.min_degree) as usize)
    }

    /// Checks `∂∘∂ = 0` exactly.
    pub fn check(&self) -> Result<()> {
        for w in self.boundaries.windows(2) {
            if !w[0].compose(&w[1]).is_zero() {
                return Err(Error::NotChainMap("boundary squares to a nonzero map".into()));
            }
        }
        Ok(())
    }

    pub fn basis_sizes(&self) -> BTreeMap<i64, usize> {
        (self.min_degree..=self.top_degree()).map(|d| (d, self.dim(d))).collect()
    }
}

/// Simplicial chains of `X` relative to a subcomplex, optionally augmented
/// by a degree -1 copy of the field (not allowed for relative chains).
pub fn chain_complex(x: &SimplicialComplex, sub: Option<&SimplicialComplex>, augmented: bool) -> Result<SimplicialChains> {
    if augmented && sub.is_some() {
        return invalid("augmentation is only defined for absolute chains");
    }
    let top = x.dim().max(0) as usize;
    let mut bases: Vec<Vec<Vec<u32>>> = Vec::new();
    for d in 0..=top {
        let cells: Vec<Vec<u32>> = x
            .simplices(d)
            .iter()
            .filter(|s| sub.map_or(true, |y| y.index_of(s).is_none()))
            .cloned()
            .collect();
        bases.push(cells);
    }
    if let Some(y) = sub {
        for d in 0..=y.dim().max(0) as usize {
            if y.simplices(d).iter().any(|s| x.index_of(s).is_none()) {
                return invalid("subcomplex has simplices outside the complex");
            }
        }
    }
    let pos: Vec<std::collections::HashMap<&Vec<u32>, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let mut boundaries = Vec::new();
    if augmented {
        boundaries.push(IntMatrix::zero(0, 1));
        boundaries.push(IntMatrix::from_columns(1, bases[0].iter().map(|_| vec![(0, 1)]).collect()));
    } else {
        boundaries.push(IntMatrix::zero(0, bases[0].len()));
    }
    for d in 1..=top {
        let cols = bases[d]
            .iter()
            .map(|s| {
                let mut col = Vec::with_capacity(s.len());
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    if let Some(&k) = pos[d - 1].get(&face) {
                        col.push((k as u32, if i % 2 == 0 { 1 } else { -1 }));
                    }
                }
                col
            })
            .collect();
        boundaries.push(IntMatrix::from_columns(bases[d - 1].len(), cols));
    }
    let complex = ChainComplex::new(if augmented { -1 } else { 0 }, boundaries, false)?;
    let vertex_rank = (0..x.nvertices).map(|v| x.rank_of(v)).collect();
    Ok(SimplicialChains { complex, bases, augmented, vertex_rank })
}

/// Simplicial chain complex together with the simplex basis of each degree.
#[derive(Clone, Debug)]
pub struct SimplicialChains {
    pub complex: ChainComplex,
    /// `bases[d]` lists the basis simplices of degree `d >= 0`.
    pub bases: Vec<Vec<Vec<u32>>>,
    pub augmented: bool,
    /// Position of each vertex in the orientation order.
    pub vertex_rank: Vec<usize>,
}

/// Homology dimensions and the ranks behind them.
#[derive(Clone, Debug, serde::Serialize)]
pub struct HomologyResult {
    pub dims: BTreeMap<i64, usize>,
    pub basis_sizes: BTreeMap<i64, usize>,
    /// Rank of `∂_d` for each degree used.
    pub ranks: BTreeMap<i64, usize>,
    /// False when some rational rank rests on two-prime agreement only.
    pub certified: bool,
}

pub fn boundary_rank(c: &ChainComplex, d: i64, field: Field) -> Result<sparse::RankInfo> {
    match c.boundary(d) {
        Some(b) if b.nrows > 0 && b.ncols > 0 && !b.is_zero() => sparse::rank(field, &ImageRows(b)),
        _ => Ok(sparse::RankInfo { rank: 0, certified: true }),
    }
}

/// `dim H_d = dim C_d - rank ∂_d - rank ∂_{d+1}` for each requested degree.
pub fn homology(c: &ChainComplex, field: Field, degrees: std::ops::RangeInclusive<i64>) -> Result<HomologyResult> {
    let (lo, hi) = (*degrees.start(), *degrees.end());
    if hi > c.valid_through {
        return invalid(format!("homology requested through degree {hi} but the complex is only valid through {}", c.valid_through));
    }
    let needed: Vec<i64> = (lo.max(c.min_degree)..=(hi + 1).min(c.top_degree())).collect();
    let ranks: Vec<(i64, sparse::RankInfo)> =
        needed.par_iter().map(|&d| boundary_rank(c, d, field).map(|r| (d, r))).collect::<Result<Vec<_>>>()?;
    let rank_map: BTreeMap<i64, usize> = ranks.iter().map(|(d, r)| (*d, r.rank)).collect();
    let certified = ranks.iter().all(|(_, r)| r.certified);
    let mut dims = BTreeMap::new();
    let mut basis_sizes = BTreeMap::new();
    for d in lo..=hi {
        let n = c.dim(d);
        let r_in = rank_map.get(&d).copied().unwrap_or(0);
        let r_out = rank_map.get(&(d + 1)).copied().unwrap_or(0);
        dims.insert(d, n - r_in - r_out);
        basis_sizes.insert(d, n);
    }
    Ok(HomologyResult { dims, basis_sizes, ranks: rank_map, certified })
}

/// Cycle representatives of a basis of `H_d`, plus a basis of `B_d`.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub degree: i64,
    pub reps: Vec<Vec<Scalar>>,
    pub boundaries: Vec<Vec<Scalar>>,
}

fn dense(row: &Row<Scalar>, n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    for (c, x) in row {
        v[*c as usize] = x.clone();
    }
    v
}

/// Explicit homology basis; intended for complexes of moderate size.
pub fn homology_basis(c: &ChainComplex, field: Field, d: i64) -> Result<HomologyBasis> {
    if d > c.valid_through {
        return invalid(format!("degree {d} is beyond the valid range of the complex"));
    }
    let n = c.dim(d);
    let cycles: Vec<Vec<Scalar>> = match c.boundary(d) {
        Some(b) if b.nrows > 0 => sparse::kernel(field, &b.to_sparse_rows())?.iter().map(|r| dense(r, n)).collect(),
        _ => (0..n).map(|i| dense(&vec![(i as u32, Scalar::from_integer(1.into()))], n)).collect(),
    };
    let image: Vec<Vec<Scalar>> = match c.boundary(d + 1) {
        Some(b) => (0..b.ncols)
            .map(|j| dense(&b.column(j).iter().map(|&(i, v)| (i, field.from_i64(v as i64))).collect(), n))
            .collect(),
        None => Vec::new(),
    };
    // Echelon basis of B, then extend by cycles.
    let mut ech_rows: Vec<Vec<Scalar>> = Vec::new();
    let mut reps = Vec::new();
    match field {
        Field::Prime(p) => {
            let a = crate::linalg::arith::ModP(p);
            let mut ech = Echelon::new(n);
            let to_row = |v: &Vec<Scalar>| -> Result<Row<u64>> {
                let mut r = Vec::new();
                for (i, x) in v.iter().enumerate() {
                    let y = a.from_scalar(x)?;
                    if y != 0 {
                        r.push((i as u32, y));
                    }
                }
                Ok(r)
            };
            for v in &image {
                if ech.insert(&a, &to_row(v)?) {
                    ech_rows.push(v.clone());
                }
            }
            for z in &cycles {
                if ech.insert(&a, &to_row(z)?) {
                    reps.push(z.clone());
                }
            }
        }
        Field::Rational => {
            let a = crate::linalg::arith::Exact;
            let mut ech = Echelon::new(n);
            let to_row = |v: &Vec<Scalar>| -> Row<Scalar> { v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i as u32, x.clone())).collect() };
            for v in &image {
                if ech.insert(&a, &to_row(v)) {
                    ech_rows.push(v.clone());
                }
            }
            for z in &cycles {
                if ech.insert(&a, &to_row(z)) {
                    reps.push(z.clone());
                }
            }
        }
    }
    Ok(HomologyBasis { degree: d, reps, boundaries: ech_rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_of_triangle() {
        let full = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
        let bdry = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let c = chain_complex(&bdry, None, true).unwrap();
        c.complex.check().unwrap();
        let h = homology(&c.complex, Field::Rational, -1..=1).unwrap();
        assert_eq!(h.dims.values().copied().collect::<Vec<_>>(), vec![0, 0, 1]);
        let rel = chain_complex(&full, Some(&bdry), false).unwrap();
        let h = homology(&rel.complex, Field::Rational, 0..=2).unwrap();
        assert_eq!(h.dims.values().copied().collect::<Vec<_>>(), vec![0, 0, 1]);
    }

    #[test]
    fn empty_complex_has_reduced_minus_one() {
        let e = SimplicialComplex::from_facets(0, &[]).unwrap();
        let c = chain_complex(&e, None, true).unwrap();
        let h = homology(&c.complex, Field::Rational, -1..=0).unwrap();
        assert_eq!(h.dims[&-1], 1);
        assert_eq!(h.dims[&0], 0);
    }

    #[test]
    fn basis_of_circle() {
        let bdry = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let c = chain_complex(&bdry, None, true).unwrap();
        let hb = homology_basis(&c.complex, Field::Prime(3), 1).unwrap();
        assert_eq!(hb.reps.len(), 1);
        assert!(hb.boundaries.is_empty());
    }
}
