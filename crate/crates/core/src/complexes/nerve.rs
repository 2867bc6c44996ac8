//! Nerves of action categories `X ⋊ M` and two-sided bar complexes.

use rayon::prelude::*;

use super::chain::{ChainComplex, IntMatrix};
use super::mset::{LeftMSet, RightMSet};
use crate::error::{Error, Result};

/// Per-degree cap on basis size.
pub const DEFAULT_CAP: u128 = 20_000_000;

const NONE: u32 = u32::MAX;

fn check_cap(what: &str, size: u128, cap: u128) -> Result<()> {
    if size > cap {
        return Err(Error::TooLarge { what: what.into(), size, cap });
    }
    Ok(())
}

/// Tuples `(m_q, .., m_1)` of non-identity elements encoded in base
/// `|M| - 1` with `m_q` most significant; digit `i` stands for element `i + 1`.
fn decode(mut code: usize, q: usize, k: usize, out: &mut Vec<usize>) {
    out.clear();
    out.resize(q, 0);
    for slot in out.iter_mut().rev() {
        *slot = code % k + 1;
        code /= k;
    }
}

fn encode(tuple: &[usize], k: usize) -> usize {
    tuple.iter().fold(0, |acc, &m| acc * k + (m - 1))
}

/// The nerve of `X ⋊ M`, relative to an invariant subset `Y` if given.
#[derive(Clone, Debug)]
pub struct NerveComplex {
    pub complex: ChainComplex,
    /// Objects of `X \ Y` in basis order.
    pub objects: Vec<usize>,
    obj_pos: Vec<u32>,
    monoid_size: usize,
    pub augmented: bool,
}

impl NerveComplex {
    /// Cell map in degree `q` induced by an object map `f` on `X` that
    /// commutes with the action.
    pub fn object_map(&self, f: &[usize], q: i64, cell: usize) -> Option<(usize, i64)> {
        if q < 0 {
            return Some((cell, 1));
        }
        let k = self.monoid_size - 1;
        let span = k.pow(q as u32);
        let (xi, code) = (cell / span, cell % span);
        let fx = f[self.objects[xi]];
        match self.obj_pos[fx] {
            NONE => None,
            p => Some((p as usize * span + code, 1)),
        }
    }
}

/// Simplices in degree `q` are `(x, m_q, .., m_1)` with `x ∉ Y` and every
/// `m_i ≠ 1`, with boundary
/// `(x, m_q..m_2) + Σ_{i=1}^{q-1} (-1)^i (x, .., m_{i+1} m_i, ..) + (-1)^q (x m_q, m_{q-1}..m_1)`;
/// terms containing the identity or an object of `Y` vanish. Built through
/// degree `max_degree + 1` so homology is valid through `max_degree`.
pub fn nerve_chain_complex(
    m: &crate::monoid::FiniteMonoid,
    x: &RightMSet,
    y: Option<&[bool]>,
    max_degree: usize,
    augmented: bool,
    cap: u128,
) -> Result<NerveComplex> {
    if x.monoid_size() != m.size() {
        return Err(Error::Dimension("M-set is over a different monoid".into()));
    }
    if let Some(y) = y {
        if y.len() != x.size() || !x.is_invariant(y) {
            return Err(Error::Invalid("relative subset must be an invariant subset of X".into()));
        }
    }
    if augmented && y.is_some() {
        return Err(Error::Invalid("augmentation is only defined for absolute nerves".into()));
    }
    let in_y = |o: usize| y.is_some_and(|y| y[o]);
    let objects: Vec<usize> = (0..x.size()).filter(|&o| !in_y(o)).collect();
    let mut obj_pos = vec![NONE; x.size()];
    for (i, &o) in objects.iter().enumerate() {
        obj_pos[o] = i as u32;
    }
    let k = m.size() - 1;
    let top = max_degree + 1;
    for q in 0..=top {
        let size = objects.len() as u128 * (k as u128).pow(q as u32);
        check_cap(&format!("nerve degree {q}"), size, cap)?;
    }
    let nobj = objects.len();
    let mut boundaries = Vec::new();
    if augmented {
        boundaries.push(IntMatrix::zero(0, 1));
        boundaries.push(IntMatrix::from_columns(1, (0..nobj).map(|_| vec![(0, 1)]).collect()));
    } else {
        boundaries.push(IntMatrix::zero(0, nobj));
    }
    for q in 1..=top {
        let span = k.pow(q as u32);
        let lower = k.pow(q as u32 - 1);
        let cols: Vec<Vec<(u32, i32)>> = (0..nobj * span)
            .into_par_iter()
            .map_init(
                || (Vec::new(), Vec::new()),
                |(t, face), cell| {
                    let (xi, code) = (cell / span, cell % span);
                    decode(code, q, k, t);
                    let obj = objects[xi];
                    let mut col = Vec::with_capacity(q + 1);
                    // (x, m_q .. m_2)
                    col.push(((xi * lower + encode(&t[..q - 1], k)) as u32, 1));
                    // merges m_{i+1} m_i, at tuple positions p = q-1-i and p+1
                    for i in 1..q {
                        let p = q - 1 - i;
                        let prod = m.mul(t[p], t[p + 1]);
                        if prod == 0 {
                            continue;
                        }
                        face.clear();
                        face.extend_from_slice(&t[..p]);
                        face.push(prod);
                        face.extend_from_slice(&t[p + 2..]);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        col.push(((xi * lower + encode(face, k)) as u32, sign));
                    }
                    // (x m_q, m_{q-1} .. m_1)
                    let moved = obj_pos[x.act(obj, t[0])];
                    if moved != NONE {
                        let sign = if q % 2 == 0 { 1 } else { -1 };
                        col.push(((moved as usize * lower + encode(&t[1..], k)) as u32, sign));
                    }
                    col
                },
            )
            .collect();
        boundaries.push(IntMatrix::from_columns(nobj * lower, cols));
    }
    let complex = ChainComplex::new(if augmented { -1 } else { 0 }, boundaries, true)?;
    Ok(NerveComplex { complex, objects, obj_pos, monoid_size: m.size(), augmented })
}

/// Two-sided bar complex `B(X, M, Y)`: cells `(x, m_q, .., m_1, y)` with
/// boundary `(x, m_q..m_2, m_1 y) + Σ (-1)^i (.., m_{i+1} m_i, ..) + (-1)^q (x m_q, m_{q-1}..m_1, y)`.
/// Its homology is `Tor_*(KX, KY)`; built so that degrees through
/// `max_degree` are valid.
pub fn two_sided_bar_complex(
    m: &crate::monoid::FiniteMonoid,
    x: &RightMSet,
    y: &LeftMSet,
    max_degree: usize,
    cap: u128,
) -> Result<ChainComplex> {
    if x.monoid_size() != m.size() || y.monoid_size() != m.size() {
        return Err(Error::Dimension("M-sets are over a different monoid".into()));
    }
    let k = m.size() - 1;
    let (nx, ny) = (x.size(), y.size());
    let top = max_degree + 1;
    for q in 0..=top {
        check_cap(&format!("bar degree {q}"), (nx * ny) as u128 * (k as u128).pow(q as u32), cap)?;
    }
    let mut boundaries = vec![IntMatrix::zero(0, nx * ny)];
    for q in 1..=top {
        let span = k.pow(q as u32);
        let lower = k.pow(q as u32 - 1);
        // cell index = (xi * span + code) * ny + yi
        let idx = |xi: usize, code: usize, yi: usize, width: usize| ((xi * width + code) * ny + yi) as u32;
        let cols: Vec<Vec<(u32, i32)>> = (0..nx * span * ny)
            .into_par_iter()
            .map_init(
                || (Vec::new(), Vec::new()),
                |(t, face), cell| {
                    let yi = cell % ny;
                    let rest = cell / ny;
                    let (xi, code) = (rest / span, rest % span);
                    decode(code, q, k, t);
                    let mut col = Vec::with_capacity(q + 1);
                    col.push((idx(xi, encode(&t[..q - 1], k), y.act(t[q - 1], yi), lower), 1));
                    for i in 1..q {
                        let p = q - 1 - i;
                        let prod = m.mul(t[p], t[p + 1]);
                        if prod == 0 {
                            continue;
                        }
                        face.clear();
                        face.extend_from_slice(&t[..p]);
                        face.push(prod);
                        face.extend_from_slice(&t[p + 2..]);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        col.push((idx(xi, encode(face, k), yi, lower), sign));
                    }
                    let sign = if q % 2 == 0 { 1 } else { -1 };
                    col.push((idx(x.act(xi, t[0]), encode(&t[1..], k), yi, lower), sign));
                    col
                },
            )
            .collect();
        boundaries.push(IntMatrix::from_columns(nx * lower * ny, cols));
    }
    ChainComplex::new(0, boundaries, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::chain::homology;
    use crate::linalg::Field;
    use crate::monoid::builders::*;

    #[test]
    fn bar_of_z2_over_f2() {
        let z2 = cyclic_group(2).unwrap();
        let pt = RightMSet::single_point(&z2);
        let lpt = LeftMSet::single_point(&z2);
        let c = two_sided_bar_complex(&z2, &pt, &lpt, 3, DEFAULT_CAP).unwrap();
        c.check().unwrap();
        let h2 = homology(&c, Field::Prime(2), 0..=3).unwrap();
        assert_eq!(h2.dims.values().copied().collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        let hq = homology(&c, Field::Rational, 0..=3).unwrap();
        assert_eq!(hq.dims.values().copied().collect::<Vec<_>>(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn nerve_of_monoid_with_zero_is_contractible() {
        let m = two_element_semilattice();
        let pt = RightMSet::single_point(&m);
        let n = nerve_chain_complex(&m, &pt, None, 3, true, DEFAULT_CAP).unwrap();
        n.complex.check().unwrap();
        let h = homology(&n.complex, Field::Rational, -1..=3).unwrap();
        assert!(h.dims.values().all(|&d| d == 0));
    }

    #[test]
    fn nerve_of_universe_is_contractible() {
        let m = full_transformation_monoid(2).unwrap().monoid;
        let u = RightMSet::universe(&m);
        let n = nerve_chain_complex(&m, &u, None, 2, true, DEFAULT_CAP).unwrap();
        n.complex.check().unwrap();
        let h = homology(&n.complex, Field::Rational, -1..=2).unwrap();
        assert!(h.dims.values().all(|&d| d == 0));
    }
}
