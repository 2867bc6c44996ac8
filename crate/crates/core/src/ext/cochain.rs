//! Normalized cochain complexes computing `Ext_{KM}(V, W)`: the standard
//! complex `C^q(M, V) = V^{(M \ 1)^q}` and the Hom complex of the bar
//! resolution of `V`.

use std::collections::BTreeMap;
use std::ops::Range;

use rayon::prelude::*;

use super::report::{ExtReport, Method};
use crate::error::{Error, Result};
use crate::linalg::arith::{Arith, ModP};
use crate::linalg::sparse::{self, large_primes, Echelon, Row, RowSource};
use crate::linalg::{Field, Matrix};
use crate::modules::MonRep;
use crate::monoid::FiniteMonoid;

/// Default cap on the number of rows of a coboundary matrix.
pub const DEFAULT_COCHAIN_CAP: u128 = 4_000_000;

/// Up to this many rows the coboundary is materialized and its rational
/// rank certified by an exact kernel lift.
const MATERIALIZE_ROWS: usize = 150_000;

const CHUNK: usize = 1 << 15;

/// A coboundary `δ_q : C^q -> C^{q+1}` that can emit any row on demand.
trait Coboundary: Sync {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn rows<A: Arith>(&self, a: &A, coeffs: &Coeffs<A::E>, range: Range<usize>) -> Vec<Row<A::E>>;
}

/// Matrix entries of the modules converted into the working arithmetic.
struct Coeffs<E> {
    v: Vec<Vec<E>>,
    w: Vec<Vec<E>>,
}

fn convert<A: Arith>(a: &A, mats: &[Matrix]) -> Result<Vec<Vec<A::E>>> {
    mats.iter()
        .map(|m| {
            let mut out = Vec::with_capacity(m.rows * m.cols);
            for i in 0..m.rows {
                for x in m.row(i) {
                    out.push(a.from_scalar(x)?);
                }
            }
            Ok(out)
        })
        .collect()
}

fn decode(mut code: usize, len: usize, k: usize, out: &mut [usize]) {
    for slot in out[..len].iter_mut().rev() {
        *slot = code % k + 1;
        code /= k;
    }
}

fn encode(tuple: &[usize], k: usize) -> usize {
    tuple.iter().fold(0, |acc, &m| acc * k + (m - 1))
}

fn finish_row<E: Clone>(a: &impl Arith<E = E>, mut row: Row<E>) -> Row<E> {
    row.sort_unstable_by_key(|e| e.0);
    let mut out: Row<E> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = a.add(&last.1, &v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !a.is_zero(&e.1));
    out
}

/// `δ_q` on `Hom_{KM}(KM ⊗ KM̄^{⊗q} ⊗ V, W) = Hom_K(KM̄^{⊗q} ⊗ V, W)`:
/// `(δf)(m_1..m_{q+1}) = W(m_1) f(m_2..) + Σ_{i=1}^q (-1)^i f(.., m_i m_{i+1}, ..)
///  + (-1)^{q+1} f(m_1..m_q) V(m_{q+1})`.
/// `f(t)` is a `dim W × dim V` matrix stored at `code(t)·dW·dV + i·dV + j`.
struct BarCoboundary<'a> {
    m: &'a FiniteMonoid,
    q: usize,
    dv: usize,
    dw: usize,
    k: usize,
}

impl Coboundary for BarCoboundary<'_> {
    fn nrows(&self) -> usize {
        self.k.pow(self.q as u32 + 1) * self.dv * self.dw
    }
    fn ncols(&self) -> usize {
        self.k.pow(self.q as u32) * self.dv * self.dw
    }
    fn rows<A: Arith>(&self, a: &A, c: &Coeffs<A::E>, range: Range<usize>) -> Vec<Row<A::E>> {
        let (q, dv, dw, k) = (self.q, self.dv, self.dw, self.k);
        let block = dv * dw;
        let mut t = vec![0usize; q + 1];
        let mut face = vec![0usize; q];
        let mut out = Vec::with_capacity(range.len());
        let sign = |s: usize| if s % 2 == 0 { a.one() } else { a.neg(&a.one()) };
        for r in range {
            let (code, ij) = (r / block, r % block);
            let (i, j) = (ij / dv, ij % dv);
            decode(code, q + 1, k, &mut t);
            let mut row: Row<A::E> = Vec::new();
            let tail = encode(&t[1..], k) * block;
            let wm = &c.w[t[0]];
            for kk in 0..dw {
                let x = &wm[i * dw + kk];
                if !a.is_zero(x) {
                    row.push(((tail + kk * dv + j) as u32, x.clone()));
                }
            }
            for p in 1..=q {
                let prod = self.m.mul(t[p - 1], t[p]);
                if prod == 0 {
                    continue;
                }
                face[..p - 1].copy_from_slice(&t[..p - 1]);
                face[p - 1] = prod;
                face[p..q].copy_from_slice(&t[p + 1..]);
                row.push(((encode(&face[..q], k) * block + i * dv + j) as u32, sign(p)));
            }
            let head = encode(&t[..q], k) * block;
            let vm = &c.v[t[q]];
            let s = sign(q + 1);
            for kk in 0..dv {
                let x = &vm[kk * dv + j];
                if !a.is_zero(x) {
                    row.push(((head + i * dv + kk) as u32, a.mul(&s, x)));
                }
            }
            out.push(finish_row(a, row));
        }
        out
    }
}

/// The standard cochains of a left module written in the order
/// `f(m_q, .., m_1)` with coboundary
/// `δf(m_q..m_0) = f(m_q..m_1) + Σ_{i=0}^{q-1} (-1)^{i+1} f(m_q.., m_{i+1}m_i, ..m_0)
///  + (-1)^{q+1} m_q f(m_{q-1}..m_0)`.
/// A cochain value `f(m_q..m_1)_i` sits at `code(m_q..m_1)·dV + i`, with
/// `m_q` the most significant digit.
struct StandardCoboundary<'a> {
    m: &'a FiniteMonoid,
    q: usize,
    dv: usize,
    k: usize,
}

impl StandardCoboundary<'_> {
    /// Index of `f(m_top..m_bottom)`, where `sub` lists `m_s` at slot `s`.
    fn col(&self, sub: &[usize], i: usize) -> usize {
        let code = sub.iter().rev().fold(0, |acc, &m| acc * self.k + (m - 1));
        code * self.dv + i
    }
}

impl Coboundary for StandardCoboundary<'_> {
    fn nrows(&self) -> usize {
        self.k.pow(self.q as u32 + 1) * self.dv
    }
    fn ncols(&self) -> usize {
        self.k.pow(self.q as u32) * self.dv
    }
    fn rows<A: Arith>(&self, a: &A, c: &Coeffs<A::E>, range: Range<usize>) -> Vec<Row<A::E>> {
        let (q, dv, k) = (self.q, self.dv, self.k);
        // b[s] = m_s for s = 0..=q
        let mut b = vec![0usize; q + 1];
        let mut sub = vec![0usize; q];
        let mut out = Vec::with_capacity(range.len());
        let sign = |s: usize| if s % 2 == 0 { a.one() } else { a.neg(&a.one()) };
        for r in range {
            let (mut code, i) = (r / dv, r % dv);
            for slot in b.iter_mut() {
                *slot = code % k + 1;
                code /= k;
            }
            let mut row: Row<A::E> = Vec::new();
            // f(m_q, .., m_1)
            row.push((self.col(&b[1..], i) as u32, a.one()));
            for s in 0..q {
                let prod = self.m.mul(b[s + 1], b[s]);
                if prod == 0 {
                    continue;
                }
                // m_q .. m_{s+2}, m_{s+1} m_s, m_{s-1} .. m_0
                sub[..s].copy_from_slice(&b[..s]);
                sub[s] = prod;
                sub[s + 1..q].copy_from_slice(&b[s + 2..]);
                row.push((self.col(&sub, i) as u32, sign(s + 1)));
            }
            // (-1)^{q+1} m_q f(m_{q-1} .. m_0)
            let base = self.col(&b[..q], 0);
            let vm = &c.v[b[q]];
            let sgn = sign(q + 1);
            for kk in 0..dv {
                let x = &vm[i * dv + kk];
                if !a.is_zero(x) {
                    row.push(((base + kk) as u32, a.mul(&sgn, x)));
                }
            }
            out.push(finish_row(a, row));
        }
        out
    }
}

struct Materialized<'a, C: Coboundary> {
    cob: &'a C,
    v: &'a [Matrix],
    w: &'a [Matrix],
}

impl<C: Coboundary> RowSource for Materialized<'_, C> {
    fn ncols(&self) -> usize {
        self.cob.ncols()
    }
    fn build_rows<A: Arith>(&self, a: &A) -> Result<Vec<Row<A::E>>> {
        let coeffs = Coeffs { v: convert(a, self.v)?, w: convert(a, self.w)? };
        let n = self.cob.nrows();
        let chunks: Vec<Range<usize>> = (0..n).step_by(CHUNK).map(|s| s..(s + CHUNK).min(n)).collect();
        let parts: Vec<Vec<Row<A::E>>> = chunks.into_par_iter().map(|r| self.cob.rows(a, &coeffs, r)).collect();
        Ok(parts.into_iter().flatten().filter(|r| !r.is_empty()).collect())
    }
}

/// Rank modulo `p`, streaming rows in parallel chunks into one echelon
/// form; stops early once `stop_at` is reached.
fn streamed_rank_mod_p<C: Coboundary>(cob: &C, v: &[Matrix], w: &[Matrix], p: u64, stop_at: usize) -> Result<usize> {
    let a = ModP(p);
    let coeffs = Coeffs { v: convert(&a, v)?, w: convert(&a, w)? };
    let n = cob.nrows();
    let stop_at = stop_at.min(cob.ncols());
    let mut ech: Echelon<u64> = Echelon::new(cob.ncols());
    let batch = CHUNK * rayon::current_num_threads().max(1);
    let mut start = 0;
    while start < n && ech.rank() < stop_at {
        let end = (start + batch).min(n);
        let chunks: Vec<Range<usize>> = (start..end).step_by(CHUNK).map(|s| s..(s + CHUNK).min(end)).collect();
        let parts: Vec<Vec<Row<u64>>> = chunks.into_par_iter().map(|r| cob.rows(&a, &coeffs, r)).collect();
        for part in parts {
            ech.insert_batch(&a, &part);
            if ech.rank() >= stop_at {
                break;
            }
        }
        start = end;
    }
    Ok(ech.rank())
}

#[derive(Clone, Copy, Debug)]
struct Rank {
    rank: usize,
    certified: bool,
}

/// Rank of `δ_q`. `bound` is a certified upper bound on the rank over the
/// field (from `im δ_{q-1} ⊆ ker δ_q`); reaching it certifies the rank.
fn coboundary_rank<C: Coboundary>(cob: &C, v: &[Matrix], w: &[Matrix], field: Field, bound: Option<usize>) -> Result<Rank> {
    if cob.ncols() == 0 || cob.nrows() == 0 {
        return Ok(Rank { rank: 0, certified: true });
    }
    let stop = bound.unwrap_or(usize::MAX);
    match field {
        Field::Prime(p) => Ok(Rank { rank: streamed_rank_mod_p(cob, v, w, p, stop)?, certified: true }),
        Field::Rational => {
            if cob.nrows() <= MATERIALIZE_ROWS {
                let info = sparse::rank(Field::Rational, &Materialized { cob, v, w })?;
                return Ok(Rank { rank: info.rank, certified: info.certified });
            }
            // Reduction modulo a prime never raises the rank, so a modular
            // rank equal to the bound is the rational rank.
            let primes = large_primes();
            let r1 = streamed_rank_mod_p(cob, v, w, primes[0], stop)?;
            if Some(r1) == bound {
                return Ok(Rank { rank: r1, certified: true });
            }
            let r2 = streamed_rank_mod_p(cob, v, w, primes[1], stop)?;
            let r = r1.max(r2);
            Ok(Rank { rank: r, certified: Some(r) == bound })
        }
    }
}

/// Certified upper bound for `rank δ_q`: `dim C^q - rank δ_{q-1}`.
fn rank_bound(dims: &[usize], ranks: &[Rank], q: usize) -> Option<usize> {
    if q == 0 {
        return Some(dims[0]);
    }
    ranks[q - 1].certified.then(|| dims[q] - ranks[q - 1].rank)
}

fn check_cap(what: &str, dims_next: &[u128], cap: u128) -> Result<()> {
    if let Some(q) = dims_next.iter().position(|&d| d > cap) {
        let largest = q as i64 - 1;
        return Err(Error::TooLarge {
            what: format!("{what} coboundary in degree {q} (largest computable degree {largest})"),
            size: dims_next[q],
            cap,
        });
    }
    Ok(())
}

fn assemble(
    method: Method,
    dims: &[usize],
    ranks: &[Rank],
    max_n: usize,
    field: Field,
    assumptions: BTreeMap<String, serde_json::Value>,
) -> ExtReport {
    let mut out = BTreeMap::new();
    for q in 0..=max_n {
        let prev = if q == 0 { 0 } else { ranks[q - 1].rank };
        out.insert(q, dims[q] - ranks[q].rank - prev);
    }
    let certified = ranks.iter().all(|r| r.certified);
    let mut rep = ExtReport::new(method, field, out, max_n);
    rep.assumptions = assumptions;
    rep.certified = certified;
    if !certified {
        rep.notes.push("some rational ranks rest on agreement of two large primes".into());
    }
    rep
}

/// `H^q(M, V)` for `q ≤ max_n` from the standard normalized cochains.
pub fn monoid_cohomology(v: &MonRep, max_n: usize, cap: u128) -> Result<ExtReport> {
    let m = &v.monoid;
    let k = m.size() - 1;
    let sizes: Vec<u128> = (0..=max_n + 1).map(|q| (k as u128).pow(q as u32) * v.dim as u128).collect();
    check_cap("standard", &sizes[1..], cap)?;
    let dims: Vec<usize> = sizes.iter().map(|&s| s as usize).collect();
    let mut ranks = Vec::with_capacity(max_n + 1);
    for q in 0..=max_n {
        let cob = StandardCoboundary { m, q, dv: v.dim, k };
        let bound = rank_bound(&dims, &ranks, q);
        ranks.push(coboundary_rank(&cob, &v.rho, &[], v.field, bound)?);
    }
    Ok(assemble(Method::Cohomology, &dims, &ranks, max_n, v.field, BTreeMap::new()))
}

/// `Ext^q_{KM}(V, W)` for `q ≤ max_n` from the bar resolution of `V`.
pub fn ext_oracle(v: &MonRep, w: &MonRep, max_n: usize, cap: u128) -> Result<ExtReport> {
    if v.monoid.size() != w.monoid.size() || v.monoid.table_rows() != w.monoid.table_rows() {
        return Err(Error::Invalid("modules are over different monoids".into()));
    }
    if v.field != w.field {
        return Err(Error::Invalid("modules are over different fields".into()));
    }
    let m = &v.monoid;
    let k = m.size() - 1;
    let block = (v.dim * w.dim) as u128;
    let sizes: Vec<u128> = (0..=max_n + 1).map(|q| (k as u128).pow(q as u32) * block).collect();
    check_cap("bar", &sizes[1..], cap)?;
    let dims: Vec<usize> = sizes.iter().map(|&s| s as usize).collect();
    let mut ranks = Vec::with_capacity(max_n + 1);
    for q in 0..=max_n {
        let cob = BarCoboundary { m, q, dv: v.dim, dw: w.dim, k };
        let bound = rank_bound(&dims, &ranks, q);
        ranks.push(coboundary_rank(&cob, &v.rho, &w.rho, v.field, bound)?);
    }
    Ok(assemble(Method::Oracle, &dims, &ranks, max_n, v.field, BTreeMap::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builders::*;
    use std::sync::Arc;

    #[test]
    fn z2_mod_2_has_cohomology_in_every_degree() {
        let z2 = Arc::new(cyclic_group(2).unwrap());
        let k = MonRep::trivial(z2, Field::Prime(2));
        let r = monoid_cohomology(&k, 4, DEFAULT_COCHAIN_CAP).unwrap();
        assert!(r.dims.values().all(|&d| d == 1));
        let o = ext_oracle(&k, &k, 4, DEFAULT_COCHAIN_CAP).unwrap();
        assert_eq!(o.dims, r.dims);
    }

    #[test]
    fn semilattice_trivial_cohomology() {
        let m = Arc::new(two_element_semilattice());
        let k = MonRep::trivial(m, Field::Rational);
        let r = monoid_cohomology(&k, 3, DEFAULT_COCHAIN_CAP).unwrap();
        assert_eq!(r.dims.values().copied().collect::<Vec<_>>(), vec![1, 0, 0, 0]);
        assert!(r.certified);
    }
}
