use num_traits::{One, Zero};
use serde_json::Value;

use super::arith::Arith;
use super::field::{scalar_from_json, scalar_to_string, Field, Scalar};
use super::sparse::{self, Row, RowSource, SparseMatrix};
use crate::error::{Error, Result};

/// Dense matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`rank_kernel`].
#[derive(Clone, Debug)]
pub struct RankKernel {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Basis of the right null space, as dense column vectors.
    pub kernel: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dimension("ragged matrix rows".into()));
            }
            for v in row {
                data.push(field.reduce(&v)?);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// Builds a matrix with `rows` rows and `cols` columns from integers.
    pub fn from_i64(field: Field, rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        assert_eq!(vals.len(), rows * cols);
        Matrix { field, rows, cols, data: vals.iter().map(|v| field.from_i64(*v)).collect() }
    }

    pub fn from_columns(field: Field, nrows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let v = self.field.reduce(&v).expect("value has an image in the field");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == if i == j { Scalar::one() } else { Scalar::zero() }))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = vec![Scalar::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        self.finish(self.rows, other.cols, out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                self.field.reduce(&s).unwrap()
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let out = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        self.finish(self.rows, self.cols, out)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let out = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        self.finish(self.rows, self.cols, out)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let out = self.data.iter().map(|a| a * s).collect();
        self.finish(self.rows, self.cols, out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data: out }
    }

    /// Kronecker product; row index of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = vec![Scalar::zero(); r * c];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        self.finish(r, c, out)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * m.cols + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.data[(self.rows + i) * m.cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        m
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * m.cols + b] = self.get(i, j).clone();
            }
        }
        m
    }

    fn finish(&self, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        let data = match self.field {
            Field::Rational => data,
            f => data.into_iter().map(|x| f.reduce(&x).unwrap()).collect(),
        };
        Matrix { field: self.field, rows, cols, data }
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let mut s = SparseMatrix::new(self.cols);
        for i in 0..self.rows {
            s.rows.push(
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j as u32, v.clone()))
                    .collect(),
            );
        }
        s
    }

    pub fn rank(&self) -> usize {
        rank_kernel(self).rank
    }

    /// Solves `self * X = b` for a matrix `b`; `None` when inconsistent.
    pub fn solve_right(&self, b: &Matrix) -> Result<Option<Matrix>> {
        solve_right(self, b)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = solve_right(self, &Matrix::identity(self.field, self.rows)).ok()??;
        Some(x)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(|v| Value::String(scalar_to_string(v))).collect()))
                .collect(),
        )
    }

    pub fn from_json(field: Field, v: &Value) -> Result<Matrix> {
        let rows = v.as_array().ok_or_else(|| Error::Invalid("matrix must be an array of rows".into()))?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Invalid("matrix row must be an array".into()))?
                    .iter()
                    .map(scalar_from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, parsed)
    }
}

impl RowSource for Matrix {
    fn ncols(&self) -> usize {
        self.cols
    }
    fn build_rows<A: Arith>(&self, a: &A) -> Result<Vec<Row<A::E>>> {
        (0..self.rows)
            .map(|i| {
                let mut out = Vec::new();
                for (j, v) in self.row(i).iter().enumerate() {
                    if !v.is_zero() {
                        let x = a.from_scalar(v)?;
                        if !a.is_zero(&x) {
                            out.push((j as u32, x));
                        }
                    }
                }
                Ok(out)
            })
            .collect()
    }
}

/// Rank, pivot columns and a kernel basis.
pub fn rank_kernel(a: &Matrix) -> RankKernel {
    let kern = sparse::kernel(a.field, a).expect("matrix entries live in the field");
    let kernel: Vec<Vec<Scalar>> = kern
        .into_iter()
        .map(|row| {
            let mut v = vec![Scalar::zero(); a.cols];
            for (c, x) in row {
                v[c as usize] = x;
            }
            v
        })
        .collect();
    let mut is_free = vec![false; a.cols];
    for v in &kernel {
        if let Some(j) = (0..a.cols).rev().find(|&j| !v[j].is_zero()) {
            is_free[j] = true;
        }
    }
    let pivots = (0..a.cols).filter(|&j| !is_free[j]).collect();
    RankKernel { rank: a.cols - kernel.len(), pivots, kernel }
}

pub fn solve_right(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows != b.rows {
        return Err(Error::Dimension(format!("solve: {} rows vs {}", a.rows, b.rows)));
    }
    let rhs: Vec<Vec<Scalar>> = (0..b.cols).map(|j| b.column(j)).collect();
    Ok(sparse::solve(a.field, &a.to_sparse(), &rhs)?.map(|cols| Matrix::from_columns(a.field, a.cols, &cols)))
}
