//! Crossed products `M ⋊_{α,c} N`.

use super::table::FiniteMonoid;
use crate::error::{invalid, Error, Result};

/// Data `(α, c)` for a crossed product of `base = M` by `top = N`.
/// `alpha[n][m] = α_n(m)` and `cocycle[n1][n2] = c(n1, n2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSystem {
    pub base: FiniteMonoid,
    pub top: FiniteMonoid,
    pub alpha: Vec<Vec<usize>>,
    pub cocycle: Vec<Vec<usize>>,
}

/// The product monoid with its structure maps. Element `(m, n)` has index
/// `n * |M| + m`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub monoid: FiniteMonoid,
    pub base_size: usize,
    pub top_size: usize,
}

impl CrossedProduct {
    pub fn index(&self, m: usize, n: usize) -> usize {
        n * self.base_size + m
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        (x % self.base_size, x / self.base_size)
    }

    /// Projection `(m, n) -> n`.
    pub fn projection(&self) -> Vec<usize> {
        (0..self.monoid.size()).map(|x| x / self.base_size).collect()
    }

    /// Section `n -> (1, n)`.
    pub fn section(&self) -> Vec<usize> {
        (0..self.top_size).map(|n| self.index(0, n)).collect()
    }

    /// Embedding `m -> (m, 1)`.
    pub fn base_embedding(&self) -> Vec<usize> {
        (0..self.base_size).collect()
    }
}

impl CrossedSystem {
    /// Semidirect product: trivial cocycle.
    pub fn semidirect(base: FiniteMonoid, top: FiniteMonoid, alpha: Vec<Vec<usize>>) -> CrossedSystem {
        let k = top.size();
        CrossedSystem { base, top, alpha, cocycle: vec![vec![0; k]; k] }
    }

    fn a(&self, n: usize, m: usize) -> usize {
        self.alpha[n][m]
    }

    fn c(&self, n1: usize, n2: usize) -> usize {
        self.cocycle[n1][n2]
    }

    /// Checks that each `α_n` is an endomorphism, that `c` takes unit
    /// values, and the four compatibility conditions (C1)-(C4).
    pub fn verify(&self) -> Result<()> {
        let (bm, bn) = (self.base.size(), self.top.size());
        if self.alpha.len() != bn || self.alpha.iter().any(|r| r.len() != bm || r.iter().any(|&x| x >= bm)) {
            return invalid("alpha must be |N| rows of |M| entries in range");
        }
        if self.cocycle.len() != bn || self.cocycle.iter().any(|r| r.len() != bn || r.iter().any(|&x| x >= bm)) {
            return invalid("c must be an |N| x |N| table of base elements");
        }
        let fail = |axiom: &'static str, witness: String| Err(Error::CrossedAxiom { axiom, witness });
        for n in 0..bn {
            if !self.base.is_homomorphism(&self.alpha[n], &self.base) {
                return fail("alpha_n endomorphism", format!("n={n}"));
            }
        }
        let units = self.base.units();
        for n1 in 0..bn {
            for n2 in 0..bn {
                if !units.contains(&self.c(n1, n2)) {
                    return fail("c takes unit values", format!("n1={n1}, n2={n2}"));
                }
            }
        }
        if (0..bm).any(|m| self.a(0, m) != m) {
            return fail("C3", "alpha_1 is not the identity".into());
        }
        for n in 0..bn {
            if self.c(0, n) != 0 || self.c(n, 0) != 0 {
                return fail("C4", format!("n={n}"));
            }
        }
        let b = &self.base;
        let t = &self.top;
        for n1 in 0..bn {
            for n2 in 0..bn {
                let c12 = self.c(n1, n2);
                let n12 = t.mul(n1, n2);
                for m in 0..bm {
                    let lhs = b.mul(self.a(n1, self.a(n2, m)), c12);
                    let rhs = b.mul(c12, self.a(n12, m));
                    if lhs != rhs {
                        return fail("C1", format!("n1={n1}, n2={n2}, m={m}"));
                    }
                }
                for n3 in 0..bn {
                    let lhs = b.mul(c12, self.c(n12, n3));
                    let rhs = b.mul(self.a(n1, self.c(n2, n3)), self.c(n1, t.mul(n2, n3)));
                    if lhs != rhs {
                        return fail("C2", format!("n1={n1}, n2={n2}, n3={n3}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `(m1, n1)(m2, n2) = (m1 α_{n1}(m2) c(n1, n2), n1 n2)`.
    pub fn build(&self) -> Result<CrossedProduct> {
        self.verify()?;
        let (bm, bn) = (self.base.size(), self.top.size());
        let k = bm * bn;
        if k > super::table::MAX_SIZE {
            return Err(Error::TooLarge { what: "crossed product".into(), size: k as u128, cap: super::table::MAX_SIZE as u128 });
        }
        let mut table = vec![0u32; k * k];
        for x in 0..k {
            let (m1, n1) = (x % bm, x / bm);
            for y in 0..k {
                let (m2, n2) = (y % bm, y / bm);
                let m = self.base.mul(self.base.mul(m1, self.a(n1, m2)), self.c(n1, n2));
                table[x * k + y] = (self.top.mul(n1, n2) * bm + m) as u32;
            }
        }
        let labels = (0..k).map(|x| format!("({},{})", self.base.label(x % bm), self.top.label(x / bm))).collect();
        let monoid = FiniteMonoid::from_flat(k, table, Some(labels))?;
        Ok(CrossedProduct { monoid, base_size: bm, top_size: bn })
    }

    /// The equivalent system `(α', c')` obtained from `f : N -> G` with
    /// `f(1) = 1`: `α'_n(m) = f(n) α_n(m) f(n)^{-1}` and
    /// `c'(n1,n2) = f(n1) α_{n1}(f(n2)) c(n1,n2) f(n1 n2)^{-1}`.
    pub fn twisted_by(&self, f: &[usize]) -> Result<CrossedSystem> {
        let b = &self.base;
        let bn = self.top.size();
        if f.len() != bn || f[0] != 0 {
            return invalid("f must assign a unit to every element of N with f(1) = 1");
        }
        let inv = |g: usize| (0..b.size()).find(|&h| b.mul(g, h) == 0 && b.mul(h, g) == 0);
        let mut finv = Vec::with_capacity(bn);
        for &g in f {
            finv.push(inv(g).ok_or_else(|| Error::Invalid(format!("f takes non-unit value {g}")))?);
        }
        let alpha = (0..bn).map(|n| (0..b.size()).map(|m| b.mul_all(&[f[n], self.a(n, m), finv[n]])).collect()).collect();
        let cocycle = (0..bn)
            .map(|n1| {
                (0..bn)
                    .map(|n2| b.mul_all(&[f[n1], self.a(n1, f[n2]), self.c(n1, n2), finv[self.top.mul(n1, n2)]]))
                    .collect()
            })
            .collect();
        Ok(CrossedSystem { base: self.base.clone(), top: self.top.clone(), alpha, cocycle })
    }
}

/// Recovers `(α, c)` from a monoid `L` with an embedding `ι` of `M`, a
/// projection to `N` and a section `s`, using `s(n) ι(m) = ι(α_n(m)) s(n)`
/// and `s(n1) s(n2) = ι(c(n1, n2)) s(n1 n2)`.
pub fn system_from_section(
    l: &FiniteMonoid,
    base: &FiniteMonoid,
    top: &FiniteMonoid,
    embed: &[usize],
    section: &[usize],
) -> Result<CrossedSystem> {
    let solve = |target: usize, n: usize| -> Result<usize> {
        let hits: Vec<usize> = (0..base.size()).filter(|&x| l.mul(embed[x], section[n]) == target).collect();
        match hits.as_slice() {
            [x] => Ok(*x),
            _ => invalid(format!("section does not determine a unique base element ({} candidates)", hits.len())),
        }
    };
    let mut alpha = vec![vec![0; base.size()]; top.size()];
    for n in 0..top.size() {
        for m in 0..base.size() {
            alpha[n][m] = solve(l.mul(section[n], embed[m]), n)?;
        }
    }
    let mut cocycle = vec![vec![0; top.size()]; top.size()];
    for n1 in 0..top.size() {
        for n2 in 0..top.size() {
            cocycle[n1][n2] = solve(l.mul(section[n1], section[n2]), top.mul(n1, n2))?;
        }
    }
    Ok(CrossedSystem { base: base.clone(), top: top.clone(), alpha, cocycle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builders::*;

    /// `Z/2 ⋊ {1,0}` with `0` acting by the trivial endomorphism.
    fn small() -> CrossedSystem {
        let z2 = cyclic_group(2).unwrap();
        let sl = two_element_semilattice();
        CrossedSystem::semidirect(z2, sl, vec![vec![0, 1], vec![0, 0]])
    }

    #[test]
    fn builds_and_projects() {
        let p = small().build().unwrap();
        assert_eq!(p.monoid.size(), 4);
        assert!(p.monoid.is_homomorphism(&p.projection(), &two_element_semilattice()));
    }

    #[test]
    fn section_recovers_system() {
        let s = small();
        let p = s.build().unwrap();
        let back = system_from_section(&p.monoid, &s.base, &s.top, &p.base_embedding(), &p.section()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn c4_violation_is_reported() {
        let mut s = small();
        s.cocycle[0][1] = 1;
        assert!(matches!(s.verify(), Err(Error::CrossedAxiom { axiom: "C4", .. })));
    }
}
