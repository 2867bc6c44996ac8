//! Matrices over a group algebra `KG`.

use num_traits::{One, Zero};

use super::field::{Field, Scalar};
use super::sparse::{self, SparseMatrix};
use crate::error::Result;
use crate::monoid::GroupTable;

/// Matrix over `KG`; each entry is a coefficient vector indexed by group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<Scalar>>>,
}

impl GroupAlgebraMatrix {
    /// Entries as coefficient lists over the group, rationals as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<Vec<String>>> =
            self.entries.iter().map(|row| row.iter().map(|x| x.iter().map(super::field::scalar_to_string).collect()).collect()).collect();
        serde_json::json!(rows)
    }

    /// Embeds a matrix over `G ∪ {0}`.
    pub fn from_monomial(p: &[Vec<Option<usize>>], group_size: usize) -> Self {
        let rows = p.len();
        let cols = p.first().map_or(0, |r| r.len());
        let entries = p
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        let mut v = vec![Scalar::zero(); group_size];
                        if let Some(g) = x {
                            v[*g] = Scalar::one();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        GroupAlgebraMatrix { rows, cols, entries }
    }

    pub fn mul(&self, other: &GroupAlgebraMatrix, g: &GroupTable, field: Field) -> GroupAlgebraMatrix {
        assert_eq!(self.cols, other.rows);
        let n = g.size();
        let mut entries = vec![vec![vec![Scalar::zero(); n]; other.cols]; self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i][k];
                for j in 0..other.cols {
                    let b = &other.entries[k][j];
                    let out = &mut entries[i][j];
                    for (x, ax) in a.iter().enumerate() {
                        if ax.is_zero() {
                            continue;
                        }
                        for (y, by) in b.iter().enumerate() {
                            if !by.is_zero() {
                                let xy = g.mul(x, y);
                                out[xy] = field.add(&out[xy], &field.mul(ax, by));
                            }
                        }
                    }
                }
            }
        }
        GroupAlgebraMatrix { rows: self.rows, cols: other.cols, entries }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(i, r)| {
                r.iter().enumerate().all(|(j, v)| v.iter().enumerate().all(|(g, c)| *c == if i == j && g == 0 { Scalar::one() } else { Scalar::zero() }))
            })
    }
}

/// Finds `Q` over `KG` with `P Q = I`, where `P` has entries in `G ∪ {0}`.
/// Solves the expanded linear system in which each entry `g` acts on `KG`
/// by left multiplication, then checks `P Q = I` in `KG` arithmetic.
pub fn group_algebra_right_inverse(p: &[Vec<Option<usize>>], g: &GroupTable, field: Field) -> Result<Option<GroupAlgebraMatrix>> {
    let n = g.size();
    let rows_b = p.len();
    let cols_a = p.first().map_or(0, |r| r.len());
    let mut sys = SparseMatrix::new(cols_a * n);
    let mut row_entries: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); rows_b * n];
    for (b, row) in p.iter().enumerate() {
        for (a, x) in row.iter().enumerate() {
            if let Some(gi) = x {
                for k in 0..n {
                    row_entries[b * n + g.mul(*gi, k)].push(((a * n + k) as u32, Scalar::one()));
                }
            }
        }
    }
    for r in row_entries {
        sys.push_row(r);
    }
    let rhs: Vec<Vec<Scalar>> = (0..rows_b)
        .map(|b| {
            let mut v = vec![Scalar::zero(); rows_b * n];
            v[b * n] = Scalar::one();
            v
        })
        .collect();
    let sol = match sparse::solve(field, &sys, &rhs)? {
        Some(s) => s,
        None => return Ok(None),
    };
    let mut entries = vec![vec![vec![Scalar::zero(); n]; rows_b]; cols_a];
    for (b, col) in sol.iter().enumerate() {
        for a in 0..cols_a {
            entries[a][b] = col[a * n..(a + 1) * n].to_vec();
        }
    }
    let q = GroupAlgebraMatrix { rows: cols_a, cols: rows_b, entries };
    let pm = GroupAlgebraMatrix::from_monomial(p, n);
    assert!(pm.mul(&q, g, field).is_identity(), "expanded solve must give a right inverse");
    Ok(Some(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builders::cyclic_group;

    #[test]
    fn monomial_row_has_right_inverse() {
        let z2 = GroupTable::from_monoid(&cyclic_group(2).unwrap()).unwrap();
        let p = vec![vec![Some(1), None]];
        let q = group_algebra_right_inverse(&p, &z2, Field::Rational).unwrap().unwrap();
        assert_eq!((q.rows, q.cols), (2, 1));
    }

    #[test]
    fn augmentation_kernel_blocks_inverse() {
        // [1 g] over K[Z/2] is right invertible, but [[1, g], [g, 1]] is not
        // since 1 - g is a zero divisor in every characteristic.
        let z2 = GroupTable::from_monoid(&cyclic_group(2).unwrap()).unwrap();
        let p = vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]];
        assert!(group_algebra_right_inverse(&p, &z2, Field::Rational).unwrap().is_none());
    }
}
