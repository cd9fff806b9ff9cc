//! Exact rational dense linear algebra.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere in the crate. Matrices are dense and row-major,
//! which is the right shape for the small adjacency and biadjacency matrices
//! this crate works with.
//!
//! Determinants use fraction-free (Bareiss) elimination so intermediate
//! entries stay integral when the input is integral. Kernels come from the
//! reduced row-echelon form with the canonical free-variable convention, so
//! bases are deterministic and safe to pin in tests. Both routines take an
//! `i128` fast path for small integer matrices and fall back to big-integer
//! arithmetic on overflow, with every exact division checked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Exact rational scalar. Always reduced, denominator always positive.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` when integral and `p/q` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch { expected: usize, got: usize },
    AmbientMismatch { left: usize, right: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            LinalgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LinalgError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions differ: {left} vs {right}")
            }
        }
    }
}

impl std::error::Error for LinalgError {}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// A dense vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QVector {
    entries: Vec<Rational>,
}

impl QVector {
    pub fn from_entries(entries: Vec<Rational>) -> Self {
        QVector { entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        QVector {
            entries: values.iter().map(|&v| rat(v)).collect(),
        }
    }

    pub fn zero(len: usize) -> Self {
        QVector {
            entries: vec![Rational::zero(); len],
        }
    }

    pub fn ones(len: usize) -> Self {
        QVector {
            entries: vec![Rational::one(); len],
        }
    }

    /// Canonical vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.entries[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Rational) {
        self.entries[i] = value;
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot product length mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn coordinate_sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        QVector {
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn add(&self, other: &QVector) -> QVector {
        assert_eq!(self.len(), other.len(), "vector sum length mismatch");
        QVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        assert_eq!(self.len(), other.len(), "vector difference length mismatch");
        QVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Indices of the nonzero coordinates.
    pub fn nonzero_positions(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Scales to integer entries with gcd one, first nonzero entry positive.
    ///
    /// The zero vector is returned unchanged.
    pub fn integer_normalized(&self) -> QVector {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.denom());
        }
        let scaled: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for v in &scaled {
            gcd = gcd.gcd(v);
        }
        let first = scaled.iter().find(|v| !v.is_zero()).unwrap();
        let sign = if first.is_negative() { -BigInt::one() } else { BigInt::one() };
        let divisor = gcd * sign;
        QVector {
            entries: scaled
                .into_iter()
                .map(|v| Rational::from_integer(v / &divisor))
                .collect(),
        }
    }
}

impl std::ops::Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(e))?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// A dense row-major matrix of exact rationals. Zero-sized dimensions are
/// legal; the empty matrix has determinant one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The all-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::one(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row_vec(&self, i: usize) -> QVector {
        QVector::from_entries(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col_vec(&self, j: usize) -> QVector {
        QVector::from_entries((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        QMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        QVector::from_entries(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j) * v.get(j)).sum())
                .collect(),
        )
    }

    pub fn add(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sum shape mismatch");
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "difference shape mismatch");
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    /// Rank-one product `u v^t`.
    pub fn outer(u: &QVector, v: &QVector) -> QMatrix {
        QMatrix::from_fn(u.len(), v.len(), |i, j| u.get(i) * v.get(j))
    }

    /// Copy with row `skip_row` and column `skip_col` removed.
    pub fn submatrix(&self, skip_row: usize, skip_col: usize) -> QMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == skip_row {
                continue;
            }
            for j in 0..self.cols {
                if j == skip_col {
                    continue;
                }
                data.push(self.get(i, j).clone());
            }
        }
        QMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    /// Copy keeping only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> QMatrix {
        QMatrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Copy with column `col` removed.
    pub fn without_column(&self, col: usize) -> QMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        self.select_columns(&keep)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        QMatrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", format_rational(self.get(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Echelon forms and kernels
// ---------------------------------------------------------------------------

/// Result of reduced row-echelon elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: QMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl QMatrix {
    /// Reduced row-echelon form with strictly increasing pivot columns.
    ///
    /// Pivot choice is the first nonzero entry in each column, so the output
    /// is deterministic (RREF is unique anyway, but pivot order matters for
    /// the row ordering during elimination).
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(found) = found else { continue };
            if found != pivot_row {
                for j in 0..m.cols {
                    let a = m.get(found, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(found, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let pivot = m.get(pivot_row, col).clone();
            for j in col..m.cols {
                let v = m.get(pivot_row, j) / &pivot;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j) - &factor * m.get(pivot_row, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Echelon { rref: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if let Some(rows) = self.to_i128_rows() {
            if let Some((rank, _, _)) = int_reduce(rows, self.cols) {
                return rank;
            }
        }
        self.rref().rank()
    }

    /// Canonical basis of `{x : Mx = 0}`: one vector per free column, with
    /// that coordinate set to one and the other free coordinates zero.
    pub fn nullspace_basis(&self) -> SubspaceBasis {
        if let Some(rows) = self.to_i128_rows() {
            if let Some((_, pivots, reduced)) = int_reduce(rows, self.cols) {
                return kernel_from_reduced_int(&reduced, &pivots, self.cols);
            }
        }
        let ech = self.rref();
        kernel_from_rref(&ech, self.cols)
    }

    /// Basis of the column space: the original columns at the pivot positions.
    pub fn column_space_basis(&self) -> SubspaceBasis {
        let pivots = self
            .to_i128_rows()
            .and_then(|rows| int_reduce(rows, self.cols))
            .map(|(_, pivots, _)| pivots)
            .unwrap_or_else(|| self.rref().pivots);
        let vectors = pivots.iter().map(|&j| self.col_vec(j)).collect();
        SubspaceBasis::new(self.rows, vectors)
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    ///
    /// Rational inputs are handled by clearing denominators row by row first,
    /// so the elimination itself runs over integers.
    pub fn det_bareiss(&self) -> Result<Rational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators: det(M) = det(B) / prod(row scaling factors).
        let mut scale = BigInt::one();
        let mut int_rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            int_rows.push(
                (0..n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
            scale *= lcm;
        }
        let det = if let Some(small) = rows_to_i128(&int_rows) {
            match int_bareiss_det(small) {
                Some(d) => BigInt::from(d),
                None => bigint_bareiss_det(int_rows),
            }
        } else {
            bigint_bareiss_det(int_rows)
        };
        Ok(Rational::new(det, scale))
    }

    /// Adjugate matrix: `adj(M) * M = det(M) * I`, entry `(i, j)` being the
    /// signed minor obtained by deleting row `j` and column `i`.
    ///
    /// Nonsingular matrices go through `det * inverse`; singular ones fall
    /// back to explicit cofactors.
    pub fn adjugate(&self) -> Result<QMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(QMatrix::zeros(0, 0));
        }
        let det = self.det_bareiss()?;
        if !det.is_zero() {
            let inv = self
                .inverse()
                .expect("nonzero determinant implies invertible");
            return Ok(inv.scale(&det));
        }
        Ok(QMatrix::from_fn(n, n, |i, j| {
            let minor = self
                .submatrix(j, i)
                .det_bareiss()
                .expect("submatrix of a square matrix is square");
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        }))
    }

    /// Inverse via Gauss-Jordan on the augmented identity, or `None` when
    /// singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&QMatrix::identity(n));
        let ech = aug.rref();
        if ech.pivots.iter().take(n).copied().ne(0..n) {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| ech.rref.get(i, n + j).clone()))
    }

    /// Some particular solution of `Mx = b`, or `None` when `b` is outside
    /// the column space. Free variables are set to zero.
    pub fn solve_particular(&self, b: &QVector) -> Result<Option<QVector>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let rhs = QMatrix::from_fn(self.rows, 1, |i, _| b.get(i).clone());
        let ech = self.hstack(&rhs).rref();
        if ech.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = QVector::zero(self.cols);
        for (row, &col) in ech.pivots.iter().enumerate() {
            x.set(col, ech.rref.get(row, self.cols).clone());
        }
        Ok(Some(x))
    }

    /// Whether `v` lies in the column space of the matrix.
    pub fn image_contains(&self, v: &QVector) -> Result<bool, LinalgError> {
        Ok(self.solve_particular(v)?.is_some())
    }

    fn to_i128_rows(&self) -> Option<Vec<Vec<i128>>> {
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.denom().is_one() {
                    return None;
                }
                row.push(e.numer().to_i64()? as i128);
            }
            rows.push(row);
        }
        Some(rows)
    }
}

fn kernel_from_rref(ech: &Echelon, cols: usize) -> SubspaceBasis {
    let free: Vec<usize> = (0..cols).filter(|c| !ech.pivots.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut v = QVector::zero(cols);
            v.set(f, Rational::one());
            for (row, &p) in ech.pivots.iter().enumerate() {
                v.set(p, -ech.rref.get(row, f).clone());
            }
            v
        })
        .collect();
    SubspaceBasis::new(cols, vectors)
}

fn kernel_from_reduced_int(reduced: &[Vec<i128>], pivots: &[usize], cols: usize) -> SubspaceBasis {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut v = QVector::zero(cols);
            v.set(f, Rational::one());
            for (row, &p) in pivots.iter().enumerate() {
                let num = BigInt::from(-reduced[row][f]);
                let den = BigInt::from(reduced[row][p]);
                v.set(p, Rational::new(num, den));
            }
            v
        })
        .collect();
    SubspaceBasis::new(cols, vectors)
}

fn rows_to_i128(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|row| row.iter().map(|v| v.to_i64().map(|x| x as i128)).collect())
        .collect()
}

/// Fraction-free Gauss-Jordan over `i128`. Returns `(rank, pivot columns,
/// reduced rows)` where each pivot row has zeros in every other pivot column,
/// or `None` on overflow or inexact division (the caller then retries with
/// exact rational arithmetic).
fn int_reduce(mut m: Vec<Vec<i128>>, cols: usize) -> Option<(usize, Vec<usize>, Vec<Vec<i128>>)> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev: i128 = 1;
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(found, pivot_row);
        let pivot = m[pivot_row][col];
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let factor = m[r][col];
            for j in 0..cols {
                if j == col {
                    continue;
                }
                let a = pivot.checked_mul(m[r][j])?;
                let b = factor.checked_mul(m[pivot_row][j])?;
                let num = a.checked_sub(b)?;
                if num % prev != 0 {
                    return None;
                }
                m[r][j] = num / prev;
            }
            m[r][col] = 0;
        }
        pivots.push(col);
        pivot_row += 1;
        prev = pivot;
    }
    let rank = pivots.len();
    Some((rank, pivots, m))
}

/// Bareiss determinant over `i128`; `None` on overflow.
fn int_bareiss_det(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    let mut sign: i128 = 1;
    let mut prev: i128 = 1;
    for k in 0..n {
        let Some(found) = (k..n).find(|&r| m[r][k] != 0) else {
            return Some(0);
        };
        if found != k {
            m.swap(found, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].checked_mul(m[i][j])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                let num = a.checked_sub(b)?;
                if num % prev != 0 {
                    return None;
                }
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Some(sign * m[n - 1][n - 1])
}

fn bigint_bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(found) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if found != k {
            m.swap(found, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A list of linearly independent vectors spanning a subspace of `Q^ambient`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<QVector>,
}

impl SubspaceBasis {
    pub fn new(ambient: usize, vectors: Vec<QVector>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        SubspaceBasis { ambient, vectors }
    }

    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: (0..ambient).map(|i| QVector::unit(ambient, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[QVector] {
        &self.vectors
    }

    pub fn is_trivial(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Matrix whose columns are the basis vectors.
    pub fn as_column_matrix(&self) -> QMatrix {
        QMatrix::from_fn(self.ambient, self.vectors.len(), |i, j| {
            self.vectors[j].get(i).clone()
        })
    }

    /// Matrix whose rows are the basis vectors.
    pub fn as_row_matrix(&self) -> QMatrix {
        QMatrix::from_fn(self.vectors.len(), self.ambient, |i, j| {
            self.vectors[i].get(j).clone()
        })
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &QVector) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch in contains");
        if v.is_zero() {
            return true;
        }
        if self.vectors.is_empty() {
            return false;
        }
        self.as_column_matrix()
            .image_contains(v)
            .expect("dimensions match by construction")
    }

    /// Whether both bases span the same subspace.
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.dim() == other.dim() && other.vectors.iter().all(|v| self.contains(v))
    }

    /// Rank of the stacked vectors. Equals `dim()` whenever the invariant
    /// holds; used by validation code.
    pub fn stacked_rank(&self) -> usize {
        self.as_row_matrix().rank()
    }

    /// Basis of the intersection of the two spans.
    ///
    /// Solves `[A | -B] (c, d)^t = 0` and reads the common vectors off as
    /// `A c`; the dimension comes out as `dim A + dim B - dim(A + B)`.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.is_trivial() || other.is_trivial() {
            return Ok(SubspaceBasis::empty(self.ambient));
        }
        let a = self.as_column_matrix();
        let b = other.as_column_matrix();
        let stacked = a.hstack(&b.scale(&-Rational::one()));
        let kernel = stacked.nullspace_basis();
        let candidates: Vec<QVector> = kernel
            .vectors()
            .iter()
            .map(|cd| {
                let coeffs = QVector::from_entries(cd.entries()[..self.dim()].to_vec());
                a.mul_vec(&coeffs)
            })
            .collect();
        if candidates.is_empty() {
            return Ok(SubspaceBasis::empty(self.ambient));
        }
        // Row-reduce the candidates to a canonical independent set.
        let stacked_rows = QMatrix::from_fn(candidates.len(), self.ambient, |i, j| {
            candidates[i].get(j).clone()
        });
        let ech = stacked_rows.rref();
        let vectors = (0..ech.rank()).map(|i| ech.rref.row_vec(i)).collect();
        Ok(SubspaceBasis::new(self.ambient, vectors))
    }
}
