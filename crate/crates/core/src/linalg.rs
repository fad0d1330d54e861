//! Dense exact vectors and matrices over [`Rat`], Gaussian elimination, and
//! the plain linear-algebra alternative (either `Ax = b` is solvable or some
//! `y` has `yᵀA = 0ᵀ`, `yᵀb ≠ 0`).

use std::fmt;
use std::ops::{Deref, DerefMut, Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::alternative::Alternative;
use crate::error::{ensure, Error, Result};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Rat>);

impl Vector {
    pub fn new(entries: Vec<Rat>) -> Self {
        Vector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rat::zero(); n])
    }

    pub fn ones(n: usize) -> Self {
        Vector(vec![Rat::one(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v[i] = Rat::one();
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        entries.iter().map(|&x| Rat::from(x)).collect()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<Rat> {
        self.0
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dot product of unequal lengths");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn sum(&self) -> Rat {
        self.0.iter().sum()
    }

    pub fn scale(&self, s: &Rat) -> Vector {
        self.0.iter().map(|x| x * s).collect()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn neg(&self) -> Vector {
        self.0.iter().map(|x| -x).collect()
    }

    pub fn concat(&self, other: &Vector) -> Vector {
        self.0.iter().chain(&other.0).cloned().collect()
    }

    pub fn slice(&self, start: usize, end: usize) -> Vector {
        Vector(self.0[start..end].to_vec())
    }

    pub fn select(&self, idx: &[usize]) -> Vector {
        idx.iter().map(|&i| self.0[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(Rat::is_nonneg)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(Rat::is_positive)
    }

    pub fn is_nonpos(&self) -> bool {
        self.0.iter().all(|x| !x.is_positive())
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Vector) -> bool {
        assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indices of the strictly positive entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.0[i].is_positive()).collect()
    }

    pub fn max(&self) -> Option<&Rat> {
        self.0.iter().max()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.0.iter().min()
    }
}

impl Deref for Vector {
    type Target = [Rat];
    fn deref(&self) -> &[Rat] {
        &self.0
    }
}

impl DerefMut for Vector {
    fn deref_mut(&mut self) -> &mut [Rat] {
        &mut self.0
    }
}

impl FromIterator<Rat> for Vector {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl From<Vec<Rat>> for Vector {
    fn from(v: Vec<Rat>) -> Self {
        Vector(v)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Row-major dense matrix. Zero rows or zero columns are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds from rows; `cols` is needed to give a shape to a matrix with no rows.
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n_rows, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| Rat::from(x)).collect()).collect();
        Matrix::from_rows(rows, cols).expect("ragged integer matrix")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_row_vector(v: &Vector) -> Self {
        Matrix { rows: 1, cols: v.dim(), data: v.to_vec() }
    }

    pub fn from_col_vector(v: &Vector) -> Self {
        Matrix { rows: v.dim(), cols: 1, data: v.to_vec() }
    }

    /// The matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Self {
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Vector {
        Vector::new(self.row(i).to_vec())
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// `A x`
    pub fn mul_vec(&self, x: &Vector) -> Vector {
        assert_eq!(self.cols, x.dim(), "A x with mismatched dimensions");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x.iter()).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `yᵀ A`, returned as a column vector.
    pub fn vec_mul(&self, y: &Vector) -> Vector {
        assert_eq!(self.rows, y.dim(), "yᵀA with mismatched dimensions");
        let mut out = Vector::zeros(self.cols);
        for (i, yi) in y.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += yi * a;
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product with mismatched dimensions");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum with mismatched dimensions");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference with mismatched dimensions");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add_scalar(&self, s: &Rat) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x + s).collect() }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack with unequal column counts");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack with unequal row counts");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rat> {
        self.data.iter()
    }

    /// Largest absolute entry; zero for an empty matrix.
    pub fn max_abs(&self) -> Rat {
        self.data.iter().map(Rat::abs).max().unwrap_or_else(Rat::zero)
    }

    pub fn rank(&self) -> usize {
        row_reduce(self).pivots.len()
    }

    /// Indices of a maximal linearly independent set of rows, chosen greedily
    /// in ascending order.
    pub fn independent_rows(&self) -> Vec<usize> {
        row_reduce(&self.transpose()).pivots
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = self.hstack(&Matrix::identity(n));
        let red = row_reduce(&aug);
        if red.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| red.matrix[(i, n + j)].clone()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{} ", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(Rat::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Debug, Clone)]
pub struct RowReduced {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
pub fn row_reduce(m: &Matrix) -> RowReduced {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            a[(r, j)] *= &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                let delta = &f * &a[(r, j)];
                a[(i, j)] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    RowReduced { matrix: a, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// A basis of `{x : Mx = 0}` with `cols − rank` vectors, one per free column
/// of the reduced echelon form.
pub fn nullspace_basis(m: &Matrix) -> Vec<Vector> {
    let red = row_reduce(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = Vector::zeros(n);
            v[f] = Rat::one();
            for (r, &p) in red.pivots.iter().enumerate() {
                v[p] = -&red.matrix[(r, f)];
            }
            v
        })
        .collect()
}

/// Either a solution `x` of `Ax = b` (free columns set to zero), or a `y`
/// with `yᵀA = 0ᵀ` and `yᵀb ≠ 0`.
pub fn solve_or_refute(a: &Matrix, b: &Vector) -> Result<Alternative<Vector, Vector>> {
    let (m, n) = a.shape();
    if b.dim() != m {
        return Err(Error::Dimension(format!("A is {m}x{n} but b has length {}", b.dim())));
    }
    // Reduce [A | b | I]: the identity block records the row operations.
    let aug = a.hstack(&Matrix::from_col_vector(b)).hstack(&Matrix::identity(m));
    let red = row_reduce(&aug);
    let a_rank = red.pivots.iter().take_while(|&&p| p < n).count();
    let consistent = red.pivots.get(a_rank).is_none_or(|&p| p != n);
    if consistent {
        let mut x = Vector::zeros(n);
        for (r, &p) in red.pivots.iter().take(a_rank).enumerate() {
            x[p] = red.matrix[(r, n)].clone();
        }
        ensure!(&a.mul_vec(&x) == b, "solve_or_refute: Ax != b");
        Ok(Alternative::Left(x))
    } else {
        let y: Vector = (0..m).map(|j| red.matrix[(a_rank, n + 1 + j)].clone()).collect();
        ensure!(a.vec_mul(&y).is_zero(), "solve_or_refute: yᵀA != 0");
        ensure!(!y.dot(b).is_zero(), "solve_or_refute: yᵀb == 0");
        Ok(Alternative::Right(y))
    }
}

/// Unique solution of a square system, `None` when singular.
pub fn solve_square(a: &Matrix, b: &Vector) -> Option<Vector> {
    assert!(a.is_square());
    if a.rank() < a.rows() {
        return None;
    }
    solve_or_refute(a, b).ok()?.left()
}

/// Unique solution of `Ax = b` for a matrix of full column rank, `None` when
/// the system is inconsistent or underdetermined.
pub fn solve_unique(a: &Matrix, b: &Vector) -> Option<Vector> {
    let aug = a.hstack(&Matrix::from_col_vector(b));
    let red = row_reduce(&aug);
    let n = a.cols();
    if red.pivots.len() != n || red.pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some((0..n).map(|r| red.matrix[(r, n)].clone()).collect())
}
