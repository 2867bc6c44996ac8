use monoext::linalg::sparse::{self, SparseMatrix};
use monoext::linalg::{group_algebra_right_inverse, rank_kernel, solve_right, Field, Matrix, Scalar};
use monoext::monoid::builders::{cyclic_group, symmetric_group};
use monoext::monoid::GroupTable;
use num_traits::Zero;
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(5))]
}

/// Integer matrices, often of low rank (a product `B C` through a thin middle).
fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..7, 1usize..7, 1usize..5).prop_flat_map(|(r, c, mid)| {
        (prop::collection::vec(-40i64..40, r * mid), prop::collection::vec(-3i64..4, mid * c), any::<bool>()).prop_map(move |(b, cc, thin)| {
            if thin {
                let mut v = vec![0i64; r * c];
                for i in 0..r {
                    for j in 0..c {
                        v[i * c + j] = (0..mid).map(|k| b[i * mid + k] * cc[k * c + j]).sum();
                    }
                }
                (r, c, v)
            } else {
                (r, c, b.iter().chain(cc.iter()).cycle().take(r * c).copied().collect())
            }
        })
    })
}

/// Textbook Gauss-Jordan elimination, dense, one pivot at a time.
fn naive_rank(m: &Matrix) -> usize {
    let f = m.field;
    let mut a: Vec<Vec<Scalar>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = f.inv(&a[rank][col]).unwrap();
        for i in 0..m.rows {
            if i != rank && !a[i][col].is_zero() {
                let t = f.mul(&a[i][col], &inv);
                for j in 0..m.cols {
                    let d = f.mul(&t, &a[rank][j]);
                    a[i][j] = f.sub(&a[i][j], &d);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn ga_identity(q: &monoext::linalg::GroupAlgebraMatrix, p: &[Vec<Option<usize>>], g: &GroupTable, field: Field) -> bool {
    let n = g.size();
    for i in 0..p.len() {
        for j in 0..q.cols {
            let mut acc = vec![field.zero(); n];
            for (k, x) in p[i].iter().enumerate() {
                let Some(a) = x else { continue };
                for (b, c) in q.entries[k][j].iter().enumerate() {
                    let s = g.mul(*a, b);
                    acc[s] = field.add(&acc[s], c);
                }
            }
            for (s, v) in acc.iter().enumerate() {
                let want = if i == j && s == 0 { field.one() } else { field.zero() };
                if field.reduce(v).unwrap() != want {
                    return false;
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn kernel_is_annihilated_and_rank_matches(field in field_strategy(), (r, c, v) in matrix_strategy()) {
        let a = Matrix::from_i64(field, r, c, &v);
        let rk = rank_kernel(&a);
        prop_assert_eq!(rk.rank + rk.kernel.len(), c);
        for x in &rk.kernel {
            prop_assert!(a.mul_vec(x).iter().all(|s| s.is_zero()));
        }
        let kmat = Matrix::from_columns(field, c, &rk.kernel);
        prop_assert_eq!(kmat.rank(), rk.kernel.len());
        prop_assert_eq!(rk.rank, naive_rank(&a));
        prop_assert_eq!(a.transpose().rank(), rk.rank);
        let info = sparse::rank(field, &a).unwrap();
        prop_assert!(info.certified);
        prop_assert_eq!(info.rank, rk.rank);
    }

    #[test]
    fn reduction_mod_p_never_raises_rank((r, c, v) in matrix_strategy(), p in prop_oneof![Just(2u64), Just(3), Just(7)]) {
        let q = Matrix::from_i64(Field::Rational, r, c, &v).rank();
        prop_assert!(Matrix::from_i64(Field::Prime(p), r, c, &v).rank() <= q);
    }

    #[test]
    fn solutions_solve(field in field_strategy(), (r, c, v) in matrix_strategy(), x in prop::collection::vec(-5i64..5, 14)) {
        let a = Matrix::from_i64(field, r, c, &v);
        let x0 = Matrix::from_i64(field, c, 2, &x[..2 * c]);
        let b = a.mul(&x0);
        let sol = solve_right(&a, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul(&sol), b);
    }

    #[test]
    fn inverse_is_two_sided(field in field_strategy(), n in 1usize..6, seed in prop::collection::vec(-9i64..9, 36)) {
        let a = Matrix::from_i64(field, n, n, &seed[..n * n]);
        match a.inverse() {
            Some(inv) => {
                prop_assert!(a.mul(&inv).is_identity());
                prop_assert!(inv.mul(&a).is_identity());
            }
            None => prop_assert!(naive_rank(&a) < n),
        }
    }

    #[test]
    fn group_algebra_right_inverses_multiply_to_identity(
        which in 0usize..3,
        field in prop_oneof![Just(Field::Rational), Just(Field::Prime(5)), Just(Field::Prime(2))],
        (rows, cols, raw) in (1usize..4, 1usize..4).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(prop::option::weighted(0.7, 0usize..6), r * c))),
    ) {
        let m = match which { 0 => cyclic_group(2).unwrap(), 1 => cyclic_group(3).unwrap(), _ => symmetric_group(3).unwrap().monoid };
        let g = GroupTable::from_monoid(&m).unwrap();
        let p: Vec<Vec<Option<usize>>> =
            (0..rows).map(|i| (0..cols).map(|j| raw[i * cols + j].map(|x| x % g.size())).collect()).collect();
        if let Some(q) = group_algebra_right_inverse(&p, &g, field).unwrap() {
            prop_assert_eq!((q.rows, q.cols), (cols, rows));
            prop_assert!(ga_identity(&q, &p, &g, field));
        }
        // A square monomial matrix with unit entries is always invertible.
        if rows == cols {
            let perm: Vec<Vec<Option<usize>>> = (0..rows).map(|i| (0..cols).map(|j| (j == (i + 1) % cols).then_some(raw.len() % g.size())).collect()).collect();
            let q = group_algebra_right_inverse(&perm, &g, field).unwrap().expect("monomial matrices are invertible");
            prop_assert!(ga_identity(&q, &perm, &g, field));
        }
    }
}

#[test]
fn rational_rank_lifts_through_large_entries() {
    // Entries near 2^31 force several primes in the lift.
    let big = (1i64 << 31) - 1;
    let v = [big, big - 2, 3, 2 * big, 2 * big - 4, 6, 1, 1, 1];
    let a = Matrix::from_i64(Field::Rational, 3, 3, &v);
    assert_eq!(a.rank(), 2);
    assert_eq!(naive_rank(&a), 2);
    let mut s = SparseMatrix::new(3);
    for i in 0..3 {
        s.push_row((0..3).map(|j| (j as u32, Field::Rational.from_i64(v[i * 3 + j]))).collect());
    }
    assert_eq!(sparse::rank(Field::Rational, &s).unwrap().rank, 2);
}

#[test]
fn zero_divisors_block_right_inverses() {
    let g = GroupTable::from_monoid(&cyclic_group(2).unwrap()).unwrap();
    // [1 g] has the right inverse (1, 0)^T in any characteristic.
    let p = vec![vec![Some(0), Some(1)]];
    assert!(group_algebra_right_inverse(&p, &g, Field::Prime(2)).unwrap().is_some());
    // The 2x2 all-ones sandwich of Z2 ∪ {0}: rank one over KG, never right invertible.
    let p = vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]];
    assert!(group_algebra_right_inverse(&p, &g, Field::Rational).unwrap().is_none());
    // [[1, 1], [1, g]]: needs 1 - g to be a unit, but (1 - g)(1 + g) = 0.
    let p = vec![vec![Some(0), Some(0)], vec![Some(0), Some(1)]];
    assert!(group_algebra_right_inverse(&p, &g, Field::Rational).unwrap().is_none());
    assert!(group_algebra_right_inverse(&p, &g, Field::Prime(2)).unwrap().is_none());
}
