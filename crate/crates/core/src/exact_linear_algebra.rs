//! Dense matrices over the rationals and canonical subspace bases.
//!
//! Elimination always picks the lowest-index nonzero row as pivot, so every
//! derived basis is a deterministic function of its input.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.to_strings()).finish()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        if let Some((j, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != rows) {
            return Err(Error::DimensionMismatch(format!(
                "column {j} has length {}, expected {rows}",
                c.len()
            )));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    /// Integer-entry convenience constructor, mostly for tests and fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rational::int(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product; panics when the inner dimensions disagree.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { data, ..*self }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { data, ..*self }
    }

    /// Columns `self | rhs` side by side.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(r, j)] * &f;
                    if !v.is_zero() {
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self · v = 0}`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref();
        let mut vectors = Vec::new();
        let mut pivot_iter = 0;
        for free in 0..self.cols {
            if pivot_iter < pivots.len() && pivots[pivot_iter] == free {
                pivot_iter += 1;
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            vectors.push(v);
        }
        SubspaceBasis::span(self.cols, vectors)
    }

    /// Basis of the functionals `f` with `fᵀ · self = 0`.
    pub fn left_annihilator(&self) -> SubspaceBasis {
        self.transpose().kernel_basis()
    }

    pub fn column_space(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.rows, self.columns())
    }

    /// Some solution `X` of `self · X = rhs`, with free variables set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "right-hand side has wrong row count");
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(pc, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() || self.rank() != self.rows {
            return None;
        }
        self.solve(&Matrix::identity(self.rows))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| rational::format_vec(self.row(i)))
            .collect()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// A linear subspace of `Q^ambient_dim`, stored canonically: the rows of the
/// reduced row-echelon form of any spanning set, each rescaled to a primitive
/// integer vector with positive leading entry. Equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl SubspaceBasis {
    pub fn span(ambient_dim: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = Matrix::from_rows(ambient_dim, rows).expect("spanning vector of wrong length");
        let (r, pivots) = m.rref();
        let vectors = (0..pivots.len()).map(|i| rational::primitive(r.row(i))).collect();
        SubspaceBasis { ambient_dim, vectors }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Matrix::identity(ambient_dim).column_space()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    /// The basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.vectors).expect("basis vectors have ambient length")
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rows = self.vectors.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(self.ambient_dim, rows).expect("length checked").rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.vectors.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        SubspaceBasis::span(
            self.ambient_dim,
            self.vectors.iter().chain(&other.vectors).cloned(),
        )
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> SubspaceBasis {
        assert_eq!(map.cols(), self.ambient_dim);
        SubspaceBasis::span(map.rows(), self.vectors.iter().map(|v| map.mul_vec(v)))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.vectors.iter().map(|v| rational::format_vec(v)).collect()
    }
}

/// `Bᵀ · gram · B` where `B` holds the basis vectors as columns.
pub fn restrict_form(gram: &Matrix, basis: &SubspaceBasis) -> Result<Matrix> {
    if !gram.is_square() || gram.rows() != basis.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "form of size {}x{} restricted to a subspace of Q^{}",
            gram.rows(),
            gram.cols(),
            basis.ambient_dim()
        )));
    }
    Ok(congruence(gram, &basis.matrix()))
}

/// `Cᵀ · gram · C` for an arbitrary column matrix `C`.
pub fn congruence(gram: &Matrix, columns: &Matrix) -> Matrix {
    columns.transpose().mul(&gram.mul(columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Matrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(2).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zeros(2, 3).kernel_basis(), SubspaceBasis::full(3));
        let k = Matrix::from_ints(&[&[1, 1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 2);
        for v in k.vectors() {
            assert!(v.iter().sum::<Rational>().is_zero());
        }
        assert_eq!(k.vectors(), &[ints(&[1, 0, -1]), ints(&[0, 1, -1])]);
    }

    #[test]
    fn left_annihilator_examples() {
        let col = Matrix::from_ints(&[&[1], &[0]]);
        assert_eq!(col.left_annihilator().vectors(), &[ints(&[0, 1])]);
        assert_eq!(Matrix::from_ints(&[&[2, 1], &[1, 1]]).left_annihilator().dim(), 0);
        // cross product of (1,1,0) and (0,1,1) is (1,-1,1)
        let m = Matrix::from_ints(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(m.left_annihilator().vectors(), &[ints(&[1, -1, 1])]);
    }

    #[test]
    fn restrict_form_examples() {
        let g = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
        let b = SubspaceBasis::span(2, [ints(&[1, 0])]);
        assert_eq!(restrict_form(&g, &b).unwrap(), Matrix::from_ints(&[&[1]]));
        let empty = SubspaceBasis::zero(2);
        let r = restrict_form(&g, &empty).unwrap();
        assert_eq!((r.rows(), r.cols()), (0, 0));
        let b = SubspaceBasis::span(2, [ints(&[2, -1])]);
        assert_eq!(restrict_form(&g, &b).unwrap(), Matrix::from_ints(&[&[6]]));
        assert!(restrict_form(&g, &SubspaceBasis::zero(3)).is_err());
    }

    #[test]
    fn echelon_bases_are_canonical() {
        let a = SubspaceBasis::span(3, [ints(&[1, 2, 3]), ints(&[0, 1, 1])]);
        let b = SubspaceBasis::span(3, [ints(&[2, 5, 7]), ints(&[-1, -1, -2])]);
        assert_eq!(a, b);
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let wide = Matrix::from_ints(&[&[1, 1, 0]]);
        let x = wide.solve(&Matrix::from_ints(&[&[3]])).unwrap();
        assert_eq!(wide.mul(&x), Matrix::from_ints(&[&[3]]));
        let sing = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&Matrix::from_ints(&[&[1], &[0]])).is_none());
        assert!(sing.inverse().is_none());
    }
}
