//! Rational irreducible representations of the small groups that occur as
//! maximal subgroups in the corpus: symmetric groups up to `S_4` acting on
//! points, and cyclic groups.

use std::sync::Arc;

use super::rep::GroupRep;
use crate::error::{invalid, Result};
use crate::linalg::{Field, Matrix};
use crate::monoid::GroupTable;

/// Permutations of `im(e)` induced by the elements of `G_e`, where `maps[x]`
/// is the map on points of monoid element `x`. Points of the image are
/// numbered in increasing order.
pub fn perms_on_image(group: &GroupTable, maps: &[Vec<usize>], e: usize) -> Vec<Vec<usize>> {
    let mut points = maps[e].clone();
    points.sort_unstable();
    points.dedup();
    let emb = group.embedding.as_ref().expect("G_e carries its embedding");
    emb.iter()
        .map(|&x| points.iter().map(|&p| points.binary_search(&maps[x][p]).expect("G_e preserves im(e)")).collect())
        .collect()
}

/// Drops the points fixed by every permutation and renumbers the rest.
pub fn moved_points(perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = perms.first().map_or(0, Vec::len);
    let moved: Vec<usize> = (0..n).filter(|&x| perms.iter().any(|p| p[x] != x)).collect();
    perms.iter().map(|p| moved.iter().map(|&x| moved.binary_search(&p[x]).expect("permutations preserve moved points")).collect()).collect()
}

fn parity(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for s in 0..perm.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

pub fn sign(group: Arc<GroupTable>, field: Field, perms: &[Vec<usize>]) -> Result<GroupRep> {
    let rho = perms.iter().map(|p| Matrix::from_i64(field, 1, 1, &[if parity(p) { -1 } else { 1 }])).collect();
    GroupRep::new(group, field, 1, rho)
}

/// The permutation module modulo the constants is dual to the sum-zero
/// submodule; we use the latter with basis `e_i - e_{k-1}`.
pub fn standard(group: Arc<GroupTable>, field: Field, perms: &[Vec<usize>]) -> Result<GroupRep> {
    let k = perms.first().map_or(0, |p| p.len());
    if k < 2 {
        return invalid("the standard representation needs at least two points");
    }
    let last = k - 1;
    let rho = perms
        .iter()
        .map(|p| {
            let mut m = Matrix::zeros(field, last, last);
            for i in 0..last {
                if p[i] != last {
                    m.set(p[i], i, field.one());
                }
                if p[last] != last {
                    m.set(p[last], i, field.from_i64(-1));
                }
            }
            m
        })
        .collect();
    GroupRep::new(group, field, last, rho)
}

/// Action of a permutation of four points on the three pairings
/// `{01|23}, {02|13}, {03|12}`.
fn pairing_perm(p: &[usize]) -> Vec<usize> {
    let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let norm = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    pairings
        .iter()
        .map(|pr| {
            let a = norm((p[pr[0].0], p[pr[0].1]));
            pairings.iter().position(|q| q[0] == a || q[1] == a).unwrap()
        })
        .collect()
}

/// The rational irreducibles of a group acting as the full symmetric group
/// on `k ≤ 4` points, with names.
pub fn symmetric_irreps(group: Arc<GroupTable>, field: Field, perms: &[Vec<usize>]) -> Result<Vec<(String, GroupRep)>> {
    let k = perms.first().map_or(0, |p| p.len());
    let order: usize = (1..=k).product();
    if group.size() != order {
        return invalid(format!("group of order {} is not the full symmetric group on {k} points", group.size()));
    }
    let mut out = vec![("trivial".to_string(), GroupRep::trivial(group.clone(), field))];
    if k >= 2 {
        out.push(("sign".into(), sign(group.clone(), field, perms)?));
    }
    if k >= 3 {
        let std = standard(group.clone(), field, perms)?;
        if k == 4 {
            let sgn = sign(group.clone(), field, perms)?;
            let pair: Vec<Vec<usize>> = perms.iter().map(|p| pairing_perm(p)).collect();
            out.push(("standard".into(), std.clone()));
            out.push(("standard_sign".into(), std.tensor(&sgn)));
            out.push(("pairing".into(), standard(group.clone(), field, &pair)?));
        } else {
            out.push(("standard".into(), std));
        }
    }
    if k > 4 {
        return invalid("irreducibles are only provided for at most four points");
    }
    Ok(out)
}

/// Integer coefficients of the cyclotomic polynomial `Φ_d`, constant term first.
pub fn cyclotomic(d: usize) -> Vec<i64> {
    let mut num = vec![0i64; d + 1];
    num[0] = -1;
    num[d] = 1;
    for c in 1..d {
        if d % c == 0 {
            num = poly_div(&num, &cyclotomic(c));
        }
    }
    num
}

fn poly_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let (da, db) = (a.len() - 1, b.len() - 1);
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db] / b[db];
        q[i] = c;
        for j in 0..=db {
            r[i + j] -= c * b[j];
        }
    }
    q
}

fn companion(field: Field, poly: &[i64]) -> Matrix {
    let k = poly.len() - 1;
    let mut m = Matrix::zeros(field, k, k);
    for i in 1..k {
        m.set(i, i - 1, field.one());
    }
    for i in 0..k {
        m.set(i, k - 1, field.from_i64(-poly[i]));
    }
    m
}

/// The rational irreducibles of a cyclic group: for each `d | n`, a
/// generator acts by the companion matrix of `Φ_d`.
pub fn cyclic_irreps(group: Arc<GroupTable>, field: Field) -> Result<Vec<(String, GroupRep)>> {
    let n = group.size();
    let order = |g: usize| {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = group.mul(x, g);
            k += 1;
        }
        k
    };
    let Some(gen) = (0..n).find(|&g| order(g) == n) else {
        return invalid("group is not cyclic");
    };
    let mut powers = vec![0; n];
    let mut x = 0;
    for slot in powers.iter_mut() {
        *slot = x;
        x = group.mul(gen, x);
    }
    let mut out = Vec::new();
    for d in (1..=n).filter(|d| n % d == 0) {
        let c = companion(field, &cyclotomic(d));
        let mut rho = vec![Matrix::zeros(field, 0, 0); n];
        let mut p = Matrix::identity(field, c.rows);
        for &g in &powers {
            rho[g] = p.clone();
            p = c.mul(&p);
        }
        out.push((format!("phi{d}"), GroupRep::new(group.clone(), field, c.rows, rho)?));
    }
    Ok(out)
}

/// Named fixture lookup used by the command line.
pub fn named_irrep(name: &str, group: Arc<GroupTable>, field: Field, perms: Option<&[Vec<usize>]>) -> Result<GroupRep> {
    match name {
        "trivial" => return Ok(GroupRep::trivial(group, field)),
        "regular" => return Ok(GroupRep::regular(group, field)),
        _ => {}
    }
    let list = match perms {
        Some(p) => symmetric_irreps(group.clone(), field, p)?,
        None => cyclic_irreps(group.clone(), field)?,
    };
    list.into_iter().find(|(n, _)| n == name).map(|(_, r)| r).ok_or_else(|| crate::Error::Invalid(format!("no fixture named {name:?} for this group")))
}
