//! Concrete families: transformation monoids, matrix monoids over `F_q`,
//! affine monoids, and a few small named monoids.

use std::collections::HashMap;

use super::table::FiniteMonoid;
use crate::error::{invalid, Error, Result};
use crate::linalg::field::is_prime;

/// A monoid of maps on `{0, .., degree-1}` acting on the left, so the
/// product `fg` is `x -> f(g(x))`.
#[derive(Clone, Debug)]
pub struct TransformationMonoid {
    pub monoid: FiniteMonoid,
    pub degree: usize,
    pub maps: Vec<Vec<usize>>,
}

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

fn map_label(f: &[usize]) -> String {
    if f.len() <= 10 {
        f.iter().map(|x| x.to_string()).collect()
    } else {
        format!("{f:?}")
    }
}

/// Monoid generated by the given maps.
pub fn transformation_monoid(degree: usize, generators: &[Vec<usize>]) -> Result<TransformationMonoid> {
    if generators.iter().any(|g| g.len() != degree || g.iter().any(|&x| x >= degree)) {
        return invalid(format!("generators must be maps on {degree} points"));
    }
    let id: Vec<usize> = (0..degree).collect();
    let (monoid, maps) = FiniteMonoid::generate(id, generators, |f, g| compose(f, g), |f| map_label(f))?;
    Ok(TransformationMonoid { monoid, degree, maps })
}

fn all_maps(n: usize, q: usize) -> Vec<Vec<usize>> {
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut k| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = k % q;
                k /= q;
            }
            v
        })
        .collect()
}

/// Lists `elems` with `identity` moved to the front and builds the table.
fn enumerate<T, F>(identity: T, elems: Vec<T>, mul: F, label: impl Fn(&T) -> String) -> Result<(FiniteMonoid, Vec<T>)>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, &T) -> T,
{
    let mut list = vec![identity.clone()];
    list.extend(elems.into_iter().filter(|x| *x != identity));
    let index: HashMap<T, usize> = list.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
    let m = FiniteMonoid::from_elements(&list, &index, mul, label)?;
    Ok((m, list))
}

/// The full transformation monoid `T_n`: identity first, then every other
/// map in lexicographic order of its image tuple.
pub fn full_transformation_monoid(n: usize) -> Result<TransformationMonoid> {
    if n == 0 || n > 5 {
        return invalid("full_tn supports 1 <= n <= 5 (|T_n| = n^n)");
    }
    let (monoid, maps) = enumerate((0..n).collect(), all_maps(n, n), |f: &Vec<usize>, g: &Vec<usize>| compose(f, g), |f| map_label(f))?;
    Ok(TransformationMonoid { monoid, degree: n, maps })
}

/// The symmetric group `S_n` as permutations, identity first then lexicographic.
pub fn symmetric_group(n: usize) -> Result<TransformationMonoid> {
    if n == 0 || n > 6 {
        return invalid("symmetric group supports 1 <= n <= 6");
    }
    let perms: Vec<Vec<usize>> = all_maps(n, n)
        .into_iter()
        .filter(|f| {
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == n
        })
        .collect();
    let (monoid, maps) = enumerate((0..n).collect(), perms, |f: &Vec<usize>, g: &Vec<usize>| compose(f, g), |f| map_label(f))?;
    Ok(TransformationMonoid { monoid, degree: n, maps })
}

/// `Z/n` written additively.
pub fn cyclic_group(n: usize) -> Result<FiniteMonoid> {
    if n == 0 {
        return invalid("cyclic group of order 0");
    }
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteMonoid::from_table(&table, 0, Some((0..n).map(|a| a.to_string()).collect()))
}

/// `{1, 0}` under multiplication.
pub fn two_element_semilattice() -> FiniteMonoid {
    FiniteMonoid::from_table(&[vec![0, 1], vec![1, 1]], 0, Some(vec!["1".into(), "0".into()])).unwrap()
}

/// `{1, x, 0}` with `x^2 = 0`; not regular and not right p.p.
pub fn nilpotent_three() -> FiniteMonoid {
    FiniteMonoid::from_table(&[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]], 0, Some(vec!["1".into(), "x".into(), "0".into()])).unwrap()
}

/// The 2x2 rectangular band with an identity and a zero adjoined: six
/// idempotents `1, (i,j), 0` with `(i,j)(k,l) = (i,l)`.
pub fn rectangular_band_with_zero() -> FiniteMonoid {
    let mut labels = vec!["1".to_string()];
    let cells: Vec<(usize, usize)> = vec![(0, 0), (0, 1), (1, 0), (1, 1)];
    labels.extend(cells.iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)));
    labels.push("0".into());
    let n = 6;
    let mut t = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            t[a][b] = if a == 0 {
                b
            } else if b == 0 {
                a
            } else if a == 5 || b == 5 {
                5
            } else {
                let (i, _) = cells[a - 1];
                let (_, l) = cells[b - 1];
                1 + cells.iter().position(|&c| c == (i, l)).unwrap()
            };
        }
    }
    FiniteMonoid::from_table(&t, 0, Some(labels)).unwrap()
}

/// `n x n` matrices over the prime field `F_q` under multiplication.
#[derive(Clone, Debug)]
pub struct MatrixMonoid {
    pub monoid: FiniteMonoid,
    pub n: usize,
    pub q: usize,
    /// Row-major entries of each element.
    pub mats: Vec<Vec<usize>>,
}

fn check_prime(q: usize) -> Result<()> {
    if !is_prime(q as u64) {
        return invalid(format!("q = {q} must be prime"));
    }
    Ok(())
}

fn mat_mul(a: &[usize], b: &[usize], n: usize, q: usize) -> Vec<usize> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % q;
                }
            }
        }
    }
    c
}

fn mat_vec(a: &[usize], v: &[usize], n: usize, q: usize) -> Vec<usize> {
    (0..n).map(|i| (0..n).map(|k| a[i * n + k] * v[k]).sum::<usize>() % q).collect()
}

fn mat_label(a: &[usize], n: usize) -> String {
    let rows: Vec<String> = a.chunks(n).map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("[{}]", rows.join(";"))
}

fn identity_matrix(n: usize) -> Vec<usize> {
    (0..n * n).map(|k| usize::from(k / n == k % n)).collect()
}

/// Index of a vector of `F_q^n` in lexicographic order.
pub fn vector_index(v: &[usize], q: usize) -> usize {
    v.iter().fold(0, |acc, &x| acc * q + x)
}

/// `M_n(F_q)`: identity first, then all other matrices lexicographically.
pub fn matrix_monoid(n: usize, q: usize) -> Result<MatrixMonoid> {
    check_prime(q)?;
    let total = (q as u128).pow((n * n) as u32);
    if n == 0 || total > super::table::MAX_SIZE as u128 {
        return Err(Error::TooLarge { what: format!("M_{n}(F_{q})"), size: total, cap: super::table::MAX_SIZE as u128 });
    }
    let (monoid, mats) = enumerate(identity_matrix(n), all_maps(n * n, q), |a, b| mat_mul(a, b, n, q), |a| mat_label(a, n))?;
    Ok(MatrixMonoid { monoid, n, q, mats })
}

impl MatrixMonoid {
    /// Action of element `a` on the points of `F_q^n` (lexicographic indexing).
    pub fn point_action(&self, a: usize) -> Vec<usize> {
        all_maps(self.n, self.q).iter().map(|v| vector_index(&mat_vec(&self.mats[a], v, self.n, self.q), self.q)).collect()
    }

    pub fn index_of(&self, mat: &[usize]) -> Option<usize> {
        self.mats.iter().position(|m| m == mat)
    }
}

/// The affine monoid `Aff(n, q)` of maps `x -> Ax + b` on `F_q^n`,
/// composed as maps acting on the left.
#[derive(Clone, Debug)]
pub struct AffineMonoid {
    pub monoid: FiniteMonoid,
    pub n: usize,
    pub q: usize,
    /// `(A, b)` for each element, `A` row-major.
    pub maps: Vec<(Vec<usize>, Vec<usize>)>,
}

/// `Aff(n, q)`: identity first, then pairs `(A, b)` lexicographically.
pub fn affine_monoid(n: usize, q: usize) -> Result<AffineMonoid> {
    check_prime(q)?;
    let total = (q as u128).pow((n * n + n) as u32);
    if n == 0 || total > super::table::MAX_SIZE as u128 {
        return Err(Error::TooLarge { what: format!("Aff({n},{q})"), size: total, cap: super::table::MAX_SIZE as u128 });
    }
    let mut elems = Vec::new();
    for a in all_maps(n * n, q) {
        for b in all_maps(n, q) {
            elems.push((a.clone(), b));
        }
    }
    let mul = |x: &(Vec<usize>, Vec<usize>), y: &(Vec<usize>, Vec<usize>)| {
        let a = mat_mul(&x.0, &y.0, n, q);
        let ab = mat_vec(&x.0, &y.1, n, q);
        let b = ab.iter().zip(&x.1).map(|(u, v)| (u + v) % q).collect();
        (a, b)
    };
    let label = |x: &(Vec<usize>, Vec<usize>)| format!("{}+{:?}", mat_label(&x.0, n), x.1);
    let (monoid, maps) = enumerate((identity_matrix(n), vec![0; n]), elems, mul, label)?;
    Ok(AffineMonoid { monoid, n, q, maps })
}

impl AffineMonoid {
    /// Action on the `q^n` points of `F_q^n`.
    pub fn point_action(&self, a: usize) -> Vec<usize> {
        let (mat, b) = &self.maps[a];
        all_maps(self.n, self.q)
            .iter()
            .map(|v| {
                let w: Vec<usize> = mat_vec(mat, v, self.n, self.q).iter().zip(b).map(|(x, y)| (x + y) % self.q).collect();
                vector_index(&w, self.q)
            })
            .collect()
    }

    /// The surjection `(A, b) -> A` onto `M_n(F_q)`.
    pub fn linear_part(&self, target: &MatrixMonoid) -> Result<Vec<usize>> {
        if (target.n, target.q) != (self.n, self.q) {
            return invalid("linear part needs M_n(F_q) with matching n and q");
        }
        self.maps
            .iter()
            .map(|(a, _)| target.index_of(a).ok_or_else(|| Error::Invalid("matrix not found".into())))
            .collect()
    }
}

/// Named monoids accepted by the JSON builder format.
pub fn named(name: &str) -> Result<FiniteMonoid> {
    Ok(named_with_points(name)?.0)
}

/// Like [`named`], also returning the action on points for the families
/// that act on a set (`T_n`, `S_n`, `Aff(n,q)`, `M_n(F_q)`).
pub fn named_with_points(name: &str) -> Result<(FiniteMonoid, Option<Vec<Vec<usize>>>)> {
    let lower = name.to_ascii_lowercase();
    let parse_two = |s: &str| -> Option<(usize, usize)> {
        let (a, b) = s.split_once(',')?;
        Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
    };
    if let Some(n) = lower.strip_prefix('t').and_then(|s| s.parse().ok()) {
        let t = full_transformation_monoid(n)?;
        return Ok((t.monoid, Some(t.maps)));
    }
    if let Some(n) = lower.strip_prefix('s').and_then(|s| s.parse().ok()) {
        let t = symmetric_group(n)?;
        return Ok((t.monoid, Some(t.maps)));
    }
    if let Some(n) = lower.strip_prefix('z').and_then(|s| s.parse().ok()) {
        return Ok((cyclic_group(n)?, None));
    }
    if let Some((n, q)) = lower.strip_prefix("aff(").and_then(|s| s.strip_suffix(')')).and_then(parse_two) {
        let a = affine_monoid(n, q)?;
        let pts = (0..a.monoid.size()).map(|x| a.point_action(x)).collect();
        return Ok((a.monoid, Some(pts)));
    }
    if let Some((n, q)) = lower.strip_prefix("m(").and_then(|s| s.strip_suffix(')')).and_then(parse_two) {
        let a = matrix_monoid(n, q)?;
        let pts = (0..a.monoid.size()).map(|x| a.point_action(x)).collect();
        return Ok((a.monoid, Some(pts)));
    }
    match lower.as_str() {
        "semilattice2" => Ok((two_element_semilattice(), None)),
        "band6" => Ok((rectangular_band_with_zero(), None)),
        "nil3" => Ok((nilpotent_three(), None)),
        _ => invalid(format!("unknown monoid name {name:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(full_transformation_monoid(3).unwrap().monoid.size(), 27);
        assert_eq!(symmetric_group(4).unwrap().monoid.size(), 24);
        assert_eq!(matrix_monoid(2, 2).unwrap().monoid.size(), 16);
        assert_eq!(affine_monoid(1, 3).unwrap().monoid.size(), 9);
        assert_eq!(affine_monoid(2, 2).unwrap().monoid.size(), 64);
        assert_eq!(rectangular_band_with_zero().idempotents().len(), 6);
    }

    #[test]
    fn generated_t3_matches_full() {
        let gens = vec![vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 2]];
        let t = transformation_monoid(3, &gens).unwrap();
        assert_eq!(t.monoid.size(), 27);
        assert_eq!(t.maps[0], vec![0, 1, 2]);
    }

    #[test]
    fn composition_convention() {
        let t = full_transformation_monoid(2).unwrap();
        let c0 = t.maps.iter().position(|f| f == &vec![0, 0]).unwrap();
        let swap = t.maps.iter().position(|f| f == &vec![1, 0]).unwrap();
        // swap * c0 is the constant map onto 1; c0 * swap stays c0.
        assert_eq!(t.maps[t.monoid.mul(swap, c0)], vec![1, 1]);
        assert_eq!(t.monoid.mul(c0, swap), c0);
    }

    #[test]
    fn affine_projection_is_homomorphism() {
        let a = affine_monoid(1, 3).unwrap();
        let m = matrix_monoid(1, 3).unwrap();
        let p = a.linear_part(&m).unwrap();
        assert!(a.monoid.is_homomorphism(&p, &m.monoid));
    }
}
