//! Sparse row echelon forms, and certified rank/kernel/solve over the
//! rationals via reduction modulo large primes.
//!
//! Over `Q`, a kernel computed modulo primes is lifted by CRT and rational
//! reconstruction and then checked exactly against the rational rows. A
//! verified lift pins the rank exactly: reduction mod `p` cannot raise the
//! rank, and the verified kernel bounds it from above. When lifting fails
//! the routines fall back to exact rational elimination.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::arith::{Arith, Exact, ModP};
use super::field::{inv_mod, is_prime, rational_reconstruct, Field, Scalar};
use crate::error::{Error, Result};

pub type Row<E> = Vec<(u32, E)>;

const NONE: u32 = u32::MAX;

/// Anything that can produce its rows in a given arithmetic.
pub trait RowSource: Sync {
    fn ncols(&self) -> usize;
    fn build_rows<A: Arith>(&self, a: &A) -> Result<Vec<Row<A::E>>>;
}

/// Sparse matrix with rational entries, stored by rows.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub ncols: usize,
    pub rows: Vec<Row<Scalar>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    /// Appends a row given as unsorted `(col, value)` pairs; duplicates are summed.
    pub fn push_row(&mut self, mut entries: Vec<(u32, Scalar)>) {
        entries.sort_by_key(|e| e.0);
        let mut out: Row<Scalar> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|e| !e.1.is_zero());
        self.rows.push(out);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
}

impl RowSource for SparseMatrix {
    fn ncols(&self) -> usize {
        self.ncols
    }
    fn build_rows<A: Arith>(&self, a: &A) -> Result<Vec<Row<A::E>>> {
        self.rows
            .iter()
            .map(|r| {
                let mut out = Vec::with_capacity(r.len());
                for (c, v) in r {
                    let x = a.from_scalar(v)?;
                    if !a.is_zero(&x) {
                        out.push((*c, x));
                    }
                }
                Ok(out)
            })
            .collect()
    }
}

struct Workspace<E> {
    acc: Vec<E>,
    in_heap: Vec<bool>,
    heap: BinaryHeap<Reverse<u32>>,
}

impl<E: Clone> Workspace<E> {
    fn new(ncols: usize, zero: E) -> Self {
        Workspace { acc: vec![zero; ncols], in_heap: vec![false; ncols], heap: BinaryHeap::new() }
    }
}

/// Row echelon form built by inserting rows one at a time. Every stored
/// row starts with its pivot, normalized to one.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub ncols: usize,
    pub rows: Vec<Row<E>>,
    pivot_of_col: Vec<u32>,
    reduced: bool,
}

impl<E: Clone + Send + Sync + std::fmt::Debug> Echelon<E> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_of_col: vec![NONE; ncols], reduced: true }
    }

    pub fn from_rows<A: Arith<E = E>>(a: &A, ncols: usize, rows: &[Row<E>]) -> Self {
        let mut ech = Echelon::new(ncols);
        let mut ws = Workspace::new(ncols, a.zero());
        for r in rows {
            ech.insert_with(a, r, &mut ws);
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_row(&self, col: usize) -> Option<usize> {
        match self.pivot_of_col[col] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    /// Pivot columns in increasing order.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().map(|r| r[0].0 as usize).collect();
        v.sort_unstable();
        v
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Inserts rows in order with one shared workspace; returns how many
    /// were independent.
    pub fn insert_batch<A: Arith<E = E>>(&mut self, a: &A, rows: &[Row<E>]) -> usize {
        let mut ws = Workspace::new(self.ncols, a.zero());
        let mut added = 0;
        for r in rows {
            if self.rows.len() == self.ncols {
                break;
            }
            if self.insert_with(a, r, &mut ws) {
                added += 1;
            }
        }
        added
    }

    /// Inserts a row; returns true when it was independent of the rows so far.
    pub fn insert<A: Arith<E = E>>(&mut self, a: &A, row: &Row<E>) -> bool {
        let mut ws = Workspace::new(self.ncols, a.zero());
        self.insert_with(a, row, &mut ws)
    }

    fn insert_with<A: Arith<E = E>>(&mut self, a: &A, row: &Row<E>, ws: &mut Workspace<E>) -> bool {
        for (c, v) in row {
            let c = *c as usize;
            ws.acc[c] = a.add(&ws.acc[c], v);
            if !ws.in_heap[c] {
                ws.in_heap[c] = true;
                ws.heap.push(Reverse(c as u32));
            }
        }
        while let Some(Reverse(c)) = ws.heap.pop() {
            let c = c as usize;
            ws.in_heap[c] = false;
            if a.is_zero(&ws.acc[c]) {
                continue;
            }
            let pv = self.pivot_of_col[c];
            if pv != NONE {
                let f = std::mem::replace(&mut ws.acc[c], a.zero());
                for (c2, v2) in &self.rows[pv as usize][1..] {
                    let c2 = *c2 as usize;
                    ws.acc[c2] = a.sub(&ws.acc[c2], &a.mul(&f, v2));
                    if !ws.in_heap[c2] {
                        ws.in_heap[c2] = true;
                        ws.heap.push(Reverse(c2 as u32));
                    }
                }
                continue;
            }
            let lead = std::mem::replace(&mut ws.acc[c], a.zero());
            let scale = a.inv(&lead);
            let mut new_row: Row<E> = vec![(c as u32, a.one())];
            let mut rest: Vec<u32> = ws.heap.drain().map(|Reverse(x)| x).collect();
            rest.sort_unstable();
            for c2 in rest {
                let c2 = c2 as usize;
                ws.in_heap[c2] = false;
                let v = std::mem::replace(&mut ws.acc[c2], a.zero());
                if !a.is_zero(&v) {
                    new_row.push((c2 as u32, a.mul(&v, &scale)));
                }
            }
            self.pivot_of_col[c] = self.rows.len() as u32;
            self.rows.push(new_row);
            self.reduced = false;
            return true;
        }
        false
    }

    /// Turns the echelon form into reduced row echelon form.
    pub fn reduce_fully<A: Arith<E = E>>(&mut self, a: &A) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&i| Reverse(self.rows[i][0].0));
        let mut acc: Vec<E> = vec![a.zero(); self.ncols];
        let mut touched: Vec<bool> = vec![false; self.ncols];
        for &i in &order {
            let needs = self.rows[i][1..].iter().any(|(c, _)| self.pivot_of_col[*c as usize] != NONE);
            if !needs {
                continue;
            }
            let row = std::mem::take(&mut self.rows[i]);
            let mut cols: Vec<u32> = Vec::new();
            for (c, v) in &row[1..] {
                let cu = *c as usize;
                let pv = self.pivot_of_col[cu];
                if pv == NONE {
                    acc[cu] = a.add(&acc[cu], v);
                    if !touched[cu] {
                        touched[cu] = true;
                        cols.push(*c);
                    }
                } else {
                    for (c2, v2) in &self.rows[pv as usize][1..] {
                        let c2u = *c2 as usize;
                        acc[c2u] = a.sub(&acc[c2u], &a.mul(v, v2));
                        if !touched[c2u] {
                            touched[c2u] = true;
                            cols.push(*c2);
                        }
                    }
                }
            }
            cols.sort_unstable();
            let mut new_row: Row<E> = vec![row[0].clone()];
            for c in cols {
                let cu = c as usize;
                touched[cu] = false;
                let v = std::mem::replace(&mut acc[cu], a.zero());
                if !a.is_zero(&v) {
                    new_row.push((c, v));
                }
            }
            self.rows[i] = new_row;
        }
        self.reduced = true;
    }

    /// Kernel basis of the row space's annihilator (right null space), one
    /// vector per free column. Requires reduced form.
    pub fn kernel_basis<A: Arith<E = E>>(&mut self, a: &A) -> Vec<Row<E>> {
        self.reduce_fully(a);
        let mut slot: Vec<u32> = vec![NONE; self.ncols];
        let mut out: Vec<Row<E>> = Vec::new();
        for c in 0..self.ncols {
            if self.pivot_of_col[c] == NONE {
                slot[c] = out.len() as u32;
                out.push(Vec::new());
            }
        }
        for r in &self.rows {
            let lead = r[0].0;
            for (c, v) in &r[1..] {
                out[slot[*c as usize] as usize].push((lead, a.neg(v)));
            }
        }
        for c in 0..self.ncols {
            if slot[c] != NONE {
                let v = &mut out[slot[c] as usize];
                v.push((c as u32, a.one()));
                v.sort_unstable_by_key(|e| e.0);
            }
        }
        out
    }
}

/// Primes just below `2^31`, largest first.
pub fn large_primes() -> &'static [u64] {
    static P: OnceLock<Vec<u64>> = OnceLock::new();
    P.get_or_init(|| {
        let mut v = Vec::new();
        let mut n: u64 = (1 << 31) - 1;
        while v.len() < 16 {
            if is_prime(n) {
                v.push(n);
            }
            n -= 2;
        }
        v
    })
}

/// Rank together with whether it was certified exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankInfo {
    pub rank: usize,
    pub certified: bool,
}

/// Above this many echelon entries the rational rank is not lifted and
/// rests on agreement of two independent primes.
pub const CERTIFY_BUDGET: usize = 4_000_000;

pub fn rank_mod_p<S: RowSource>(src: &S, p: u64) -> Result<usize> {
    let a = ModP(p);
    let rows = src.build_rows(&a)?;
    Ok(Echelon::from_rows(&a, src.ncols(), &rows).rank())
}

/// Rank over `field`.
pub fn rank<S: RowSource>(field: Field, src: &S) -> Result<RankInfo> {
    match field {
        Field::Prime(p) => Ok(RankInfo { rank: rank_mod_p(src, p)?, certified: true }),
        Field::Rational => {
            let primes = large_primes();
            let (r1, r2) = rayon::join(|| rank_mod_p(src, primes[0]), || rank_mod_p(src, primes[1]));
            let (r1, r2) = (r1?, r2?);
            let mut r = r1.max(r2);
            if r1 != r2 {
                r = r.max(rank_mod_p(src, primes[2])?);
            }
            let ncols = src.ncols();
            let kernel_dim = ncols - r;
            if kernel_dim.saturating_mul(r.max(1)) <= CERTIFY_BUDGET {
                let k = kernel(Field::Rational, src)?;
                return Ok(RankInfo { rank: ncols - k.len(), certified: true });
            }
            Ok(RankInfo { rank: r, certified: false })
        }
    }
}

/// Basis of `{x : A x = 0}` as sparse vectors.
pub fn kernel<S: RowSource>(field: Field, src: &S) -> Result<Vec<Row<Scalar>>> {
    match field {
        Field::Prime(p) => {
            let a = ModP(p);
            let rows = src.build_rows(&a)?;
            let mut ech = Echelon::from_rows(&a, src.ncols(), &rows);
            Ok(to_scalar_rows(ech.kernel_basis(&a)))
        }
        Field::Rational => {
            let exact_rows = src.build_rows(&Exact)?;
            if let Some(k) = lift_kernel(src, &exact_rows)? {
                return Ok(k);
            }
            let mut ech = Echelon::from_rows(&Exact, src.ncols(), &exact_rows);
            Ok(ech.kernel_basis(&Exact))
        }
    }
}

fn to_scalar_rows(rows: Vec<Row<u64>>) -> Vec<Row<Scalar>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (c, Scalar::from_integer(BigInt::from(v)))).collect())
        .collect()
}

/// Residues of reduced-echelon entries, accumulated by CRT.
struct CrtState {
    pivots: Vec<usize>,
    modulus: BigInt,
    entries: HashMap<(u32, u32), BigInt>,
}

impl CrtState {
    fn from_echelon(ech: &Echelon<u64>, p: u64, pivots: Vec<usize>) -> Self {
        let mut entries = HashMap::new();
        for r in &ech.rows {
            for (c, v) in &r[1..] {
                entries.insert((r[0].0, *c), BigInt::from(*v));
            }
        }
        CrtState { pivots, modulus: BigInt::from(p), entries }
    }

    fn absorb(&mut self, ech: &Echelon<u64>, p: u64) {
        let mut fresh: HashMap<(u32, u32), u64> = HashMap::new();
        for r in &ech.rows {
            for (c, v) in &r[1..] {
                fresh.insert((r[0].0, *c), *v);
            }
        }
        let m_inv = inv_mod((&self.modulus % p).to_u64().unwrap(), p);
        let pb = BigInt::from(p);
        for (k, _) in fresh.iter() {
            self.entries.entry(*k).or_insert_with(BigInt::zero);
        }
        for (k, a) in self.entries.iter_mut() {
            let b = fresh.get(k).copied().unwrap_or(0);
            let a_mod = a.mod_floor(&pb).to_u64().unwrap();
            let t = ((b + p - a_mod) % p) * m_inv % p;
            *a += &self.modulus * BigInt::from(t);
        }
        self.modulus *= pb;
    }

    fn reconstruct(&self) -> Option<HashMap<(u32, u32), Scalar>> {
        let mut out = HashMap::with_capacity(self.entries.len());
        for (k, v) in &self.entries {
            let q = rational_reconstruct(v, &self.modulus)?;
            if !q.is_zero() {
                out.insert(*k, q);
            }
        }
        Some(out)
    }
}

const MAX_LIFT_PRIMES: usize = 6;

/// Reduced echelon entries lifted to `Q` and checked to annihilate the rows.
fn lift_rref<S: RowSource>(src: &S, exact_rows: &[Row<Scalar>]) -> Result<Option<(Vec<usize>, HashMap<(u32, u32), Scalar>)>> {
    let ncols = src.ncols();
    let mut state: Option<CrtState> = None;
    for &p in large_primes().iter().take(MAX_LIFT_PRIMES) {
        let a = ModP(p);
        let rows = match src.build_rows(&a) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let mut ech = Echelon::from_rows(&a, ncols, &rows);
        ech.reduce_fully(&a);
        let pivots = ech.pivot_cols();
        match &mut state {
            None => state = Some(CrtState::from_echelon(&ech, p, pivots)),
            Some(s) if s.pivots == pivots => s.absorb(&ech, p),
            Some(s) if pivots.len() > s.pivots.len() => *s = CrtState::from_echelon(&ech, p, pivots),
            Some(_) => continue,
        }
        let s = state.as_ref().unwrap();
        if let Some(rref) = s.reconstruct() {
            if verify_rref(exact_rows, ncols, &s.pivots, &rref) {
                return Ok(Some((s.pivots.clone(), rref)));
            }
        }
    }
    Ok(None)
}

fn kernel_from_rref(ncols: usize, pivots: &[usize], rref: &HashMap<(u32, u32), Scalar>) -> Vec<Row<Scalar>> {
    let mut is_pivot = vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut slot = vec![NONE; ncols];
    let mut out: Vec<Row<Scalar>> = Vec::new();
    for c in 0..ncols {
        if !is_pivot[c] {
            slot[c] = out.len() as u32;
            out.push(vec![(c as u32, Scalar::from_integer(1.into()))]);
        }
    }
    for ((lead, c), v) in rref {
        if (*c as usize) < ncols && !is_pivot[*c as usize] {
            out[slot[*c as usize] as usize].push((*lead, -v.clone()));
        }
    }
    for v in &mut out {
        v.sort_unstable_by_key(|e| e.0);
    }
    out
}

fn lift_kernel<S: RowSource>(src: &S, exact_rows: &[Row<Scalar>]) -> Result<Option<Vec<Row<Scalar>>>> {
    Ok(lift_rref(src, exact_rows)?.map(|(pivots, rref)| kernel_from_rref(src.ncols(), &pivots, &rref)))
}

/// Checks `A k = 0` for every kernel vector implied by the candidate rref.
fn verify_rref(rows: &[Row<Scalar>], ncols: usize, pivots: &[usize], rref: &HashMap<(u32, u32), Scalar>) -> bool {
    let mut by_lead: HashMap<u32, Vec<(u32, &Scalar)>> = HashMap::new();
    for ((lead, c), v) in rref {
        by_lead.entry(*lead).or_default().push((*c, v));
    }
    let mut is_pivot = vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    rows.par_iter().all(|row| {
        let mut acc: HashMap<u32, Scalar> = HashMap::new();
        for (j, a) in row {
            if !is_pivot[*j as usize] {
                *acc.entry(*j).or_insert_with(Scalar::zero) += a;
            } else if let Some(list) = by_lead.get(j) {
                for (f, r) in list {
                    *acc.entry(*f).or_insert_with(Scalar::zero) -= a * *r;
                }
            }
        }
        acc.values().all(|v| v.is_zero())
    })
}

/// Solves `A X = B` where the columns of `B` are given as dense vectors.
/// Returns `None` when some column is inconsistent.
pub fn solve(field: Field, a: &SparseMatrix, rhs: &[Vec<Scalar>]) -> Result<Option<Vec<Vec<Scalar>>>> {
    let n = a.ncols;
    let k = rhs.len();
    let m = a.nrows();
    for b in rhs {
        if b.len() != m {
            return Err(Error::Dimension(format!("right-hand side has length {}, expected {m}", b.len())));
        }
    }
    let mut aug = SparseMatrix::new(n + k);
    for (i, row) in a.rows.iter().enumerate() {
        let mut r = row.clone();
        for (j, b) in rhs.iter().enumerate() {
            if !b[i].is_zero() {
                r.push(((n + j) as u32, b[i].clone()));
            }
        }
        aug.rows.push(r);
    }
    match field {
        Field::Prime(p) => {
            let ar = ModP(p);
            let rows = aug.build_rows(&ar)?;
            let mut ech = Echelon::from_rows(&ar, n + k, &rows);
            if ech.pivot_cols().last().is_some_and(|&c| c >= n) {
                return Ok(None);
            }
            ech.reduce_fully(&ar);
            let mut x = vec![vec![Scalar::zero(); n]; k];
            for r in &ech.rows {
                for (c, v) in &r[1..] {
                    if *c as usize >= n {
                        x[*c as usize - n][r[0].0 as usize] = Scalar::from_integer(BigInt::from(*v));
                    }
                }
            }
            Ok(Some(x))
        }
        Field::Rational => solve_rational(a, &aug, rhs),
    }
}

fn solve_rational(a: &SparseMatrix, aug: &SparseMatrix, rhs: &[Vec<Scalar>]) -> Result<Option<Vec<Vec<Scalar>>>> {
    let n = a.ncols;
    let k = rhs.len();
    let exact_a = a.build_rows(&Exact)?;
    let mut state: Option<CrtState> = None;
    let mut rank_a: Option<usize> = None;
    for &p in large_primes().iter().take(MAX_LIFT_PRIMES) {
        let ar = ModP(p);
        let rows = match aug.build_rows(&ar) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let mut ech = Echelon::from_rows(&ar, n + k, &rows);
        let pivots = ech.pivot_cols();
        if pivots.last().is_some_and(|&c| c >= n) {
            let r_exact = match rank_a {
                Some(r) => r,
                None => {
                    let kern = kernel(Field::Rational, a)?;
                    let r = n - kern.len();
                    rank_a = Some(r);
                    r
                }
            };
            if pivots.len() > r_exact {
                return Ok(None);
            }
            continue;
        }
        ech.reduce_fully(&ar);
        match &mut state {
            None => state = Some(CrtState::from_echelon(&ech, p, pivots)),
            Some(s) if s.pivots == pivots => s.absorb(&ech, p),
            Some(s) if pivots.len() > s.pivots.len() => *s = CrtState::from_echelon(&ech, p, pivots),
            Some(_) => continue,
        }
        let s = state.as_ref().unwrap();
        if let Some(rref) = s.reconstruct() {
            let mut x = vec![vec![Scalar::zero(); n]; k];
            for ((lead, c), v) in &rref {
                if *c as usize >= n {
                    x[*c as usize - n][*lead as usize] = v.clone();
                }
            }
            if check_solution(&exact_a, &x, rhs) {
                return Ok(Some(x));
            }
        }
    }
    let exact_aug = aug.build_rows(&Exact)?;
    let mut ech = Echelon::from_rows(&Exact, n + k, &exact_aug);
    if ech.pivot_cols().last().is_some_and(|&c| c >= n) {
        return Ok(None);
    }
    ech.reduce_fully(&Exact);
    let mut x = vec![vec![Scalar::zero(); n]; k];
    for r in &ech.rows {
        for (c, v) in &r[1..] {
            if *c as usize >= n {
                x[*c as usize - n][r[0].0 as usize] = v.clone();
            }
        }
    }
    Ok(Some(x))
}

fn check_solution(rows: &[Row<Scalar>], x: &[Vec<Scalar>], rhs: &[Vec<Scalar>]) -> bool {
    rows.par_iter().enumerate().all(|(i, row)| {
        x.iter().zip(rhs).all(|(xj, bj)| {
            let mut s = Scalar::zero();
            for (c, v) in row {
                s += v * &xj[*c as usize];
            }
            s == bj[i]
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows[0].len());
        for r in rows {
            m.push_row(r.iter().enumerate().map(|(j, v)| (j as u32, q(*v))).collect());
        }
        m
    }

    #[test]
    fn primes_are_prime() {
        let ps = large_primes();
        assert_eq!(ps[0], 2147483647);
        assert!(ps.iter().all(|&p| is_prime(p) && p < 1 << 31));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(rank(Field::Rational, &m).unwrap(), RankInfo { rank: 3, certified: true });
        assert_eq!(rank(Field::Prime(2), &m).unwrap().rank, 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 7]]);
        let k = kernel(Field::Rational, &m).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m.rows {
                let mut s = Scalar::zero();
                for (c, a) in row {
                    if let Some((_, x)) = v.iter().find(|e| e.0 == *c) {
                        s += a * x;
                    }
                }
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[2, 0], &[0, 3], &[2, 3]]);
        let x = solve(Field::Rational, &m, &[vec![q(1), q(1), q(2)]]).unwrap().unwrap();
        assert_eq!(x[0], vec![Scalar::new(1.into(), 2.into()), Scalar::new(1.into(), 3.into())]);
        assert!(solve(Field::Rational, &m, &[vec![q(1), q(1), q(3)]]).unwrap().is_none());
        assert!(solve(Field::Prime(2), &m, &[vec![q(1), q(0), q(0)]]).unwrap().is_none());
    }
}
