//! Finite simplicial complexes and order complexes.

use std::collections::HashMap;

use super::poset::Poset;
use crate::error::{invalid, Result};

/// Simplices are stored per dimension as vertex tuples sorted by the
/// fixed vertex order `rank`; this tuple order is the orientation.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    pub nvertices: usize,
    rank: Vec<usize>,
    simplices: Vec<Vec<Vec<u32>>>,
    index: Vec<HashMap<Vec<u32>, usize>>,
}

impl SimplicialComplex {
    fn empty(nvertices: usize, rank: Vec<usize>) -> Self {
        SimplicialComplex { nvertices, rank, simplices: Vec::new(), index: Vec::new() }
    }

    fn add(&mut self, simplex: Vec<u32>) {
        let d = simplex.len() - 1;
        while self.simplices.len() <= d {
            self.simplices.push(Vec::new());
            self.index.push(HashMap::new());
        }
        if !self.index[d].contains_key(&simplex) {
            self.index[d].insert(simplex.clone(), self.simplices[d].len());
            self.simplices[d].push(simplex);
        }
    }

    /// All faces of the given facets, vertex order by id.
    pub fn from_facets(nvertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut k = Self::empty(nvertices, (0..nvertices).collect());
        for f in facets {
            let mut s: Vec<u32> = f.iter().map(|&v| v as u32).collect();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() || s.iter().any(|&v| v as usize >= nvertices) {
                return invalid("facet is empty or has out-of-range vertices");
            }
            if s.len() > 20 {
                return invalid("facets of dimension above 19 are not supported");
            }
            for mask in 1u32..(1 << s.len()) {
                let face: Vec<u32> = (0..s.len()).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
                k.add(face);
            }
        }
        k.sort_all();
        Ok(k)
    }

    fn sort_all(&mut self) {
        for d in 0..self.simplices.len() {
            let rank = &self.rank;
            self.simplices[d].sort_by(|a, b| {
                let ka: Vec<usize> = a.iter().map(|&v| rank[v as usize]).collect();
                let kb: Vec<usize> = b.iter().map(|&v| rank[v as usize]).collect();
                ka.cmp(&kb)
            });
            self.index[d] = self.simplices[d].iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        }
    }

    /// Dimension, or -1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.simplices.len() as i64 - 1
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, |s| s.len())
    }

    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map_or(&[], |s| s.as_slice())
    }

    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.index.get(d)?.get(simplex).copied()
    }

    pub fn rank_of(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// Image of a simplex under a vertex map: `None` if it collapses,
    /// otherwise the sorted image tuple and the sign of the sorting permutation.
    pub fn map_simplex(&self, simplex: &[u32], f: &[usize]) -> Option<(Vec<u32>, i64)> {
        let mut img: Vec<u32> = simplex.iter().map(|&v| f[v as usize] as u32).collect();
        let mut sign = 1i64;
        for i in 1..img.len() {
            let mut j = i;
            while j > 0 && self.rank[img[j - 1] as usize] > self.rank[img[j] as usize] {
                img.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if img.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((img, sign))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }
}

/// The order complex `Δ(P)`: simplices are chains, listed bottom to top.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    let ext = p.linear_extension();
    let mut rank = vec![0; p.size()];
    for (i, &v) in ext.iter().enumerate() {
        rank[v] = i;
    }
    let mut k = SimplicialComplex::empty(p.size(), rank);
    let mut stack: Vec<Vec<u32>> = ext.iter().map(|&v| vec![v as u32]).collect();
    while let Some(chain) = stack.pop() {
        let top = *chain.last().unwrap() as usize;
        for b in 0..p.size() {
            if p.lt(top, b) {
                let mut c = chain.clone();
                c.push(b as u32);
                stack.push(c);
            }
        }
        k.add(chain);
    }
    k.sort_all();
    k
}
