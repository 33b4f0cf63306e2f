//! Exact dense linear algebra over a [`Field`].

use std::fmt;

use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn diagonal(values: &[F]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { F::zero() })
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        for col in columns {
            assert_eq!(col.len(), rows, "column length");
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Submatrix with the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|x| x.mul(k))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    /// Product `self * other`, skipping zero entries.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let other_rows: Vec<Vec<(usize, &F)>> = (0..other.rows)
            .map(|k| {
                (0..other.cols)
                    .filter_map(|j| {
                        let x = other.get(k, j);
                        (!x.is_zero()).then_some((j, x))
                    })
                    .collect()
            })
            .collect();
        let mut entries = vec![F::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            let mut terms: Vec<Vec<F>> = vec![Vec::new(); other.cols];
            for (k, row) in other_rows.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in row {
                    terms[*j].push(a.mul(b));
                }
            }
            for (j, t) in terms.into_iter().enumerate() {
                entries[i * other.cols + j] = sum(t);
            }
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        (0..self.rows)
            .map(|i| {
                sum((0..self.cols)
                    .filter(|&j| !v[j].is_zero())
                    .filter_map(|j| {
                        let a = self.get(i, j);
                        (!a.is_zero()).then(|| a.mul(&v[j]))
                    })
                    .collect())
            })
            .collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        assert!(self.is_square());
        (0..n).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Kronecker product; the row index of `A (x) B` is `i * B.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
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
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            // smallest nonzero pivot keeps intermediate expressions small
            let Some(p) = (r..m.rows)
                .filter(|&i| !m.get(i, col).is_zero())
                .min_by_key(|&i| m.get(i, col).complexity())
            else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let pivot_entry = m.get(r, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).sub(&factor.mul(pivot_entry));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r.get(row, f).neg();
                }
                v
            })
            .collect()
    }

    /// Columns of `self` at the pivot positions: a basis of the column space.
    pub fn image_basis(&self) -> Vec<Vec<F>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&j| self.column(j)).collect()
    }

    /// One solution of `self * x = b`.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::NoSolution);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(x)
    }

    /// Solves `self * X = B` column by column with a single elimination.
    pub fn solve_matrix(&self, b: &Self) -> Result<Self, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::DimensionMismatch("row counts differ".into()));
        }
        let n = self.cols;
        let aug = Self::from_fn(self.rows, n + b.cols, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                b.get(i, j - n).clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Err(LinalgError::NoSolution);
        }
        let mut x = Self::zeros(n, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(row, n + j).clone());
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let x = self
            .solve_matrix(&Self::identity(self.rows))
            .map_err(|_| LinalgError::Singular)?;
        if self.rank() < self.rows {
            return Err(LinalgError::Singular);
        }
        Ok(x)
    }

    /// Applies `f` entrywise, e.g. to specialise a symbolic matrix.
    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }
}

/// Sum of terms, pairing them up to keep operands balanced.
pub fn sum<F: Field>(mut terms: Vec<F>) -> F {
    terms.retain(|t| !t.is_zero());
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut it = terms.chunks(2);
        for pair in &mut it {
            next.push(if pair.len() == 2 { pair[0].add(&pair[1]) } else { pair[0].clone() });
        }
        terms = next;
    }
    terms.pop().unwrap_or_else(F::zero)
}

pub fn vec_is_zero<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale<F: Field>(a: &[F], k: &F) -> Vec<F> {
    a.iter().map(|x| x.mul(k)).collect()
}

/// `Some(k)` with `a = k * b` when `b` is nonzero and `a` is a multiple of it.
pub fn proportionality<F: Field>(a: &[F], b: &[F]) -> Option<F> {
    let i = b.iter().position(|x| !x.is_zero())?;
    let k = a[i].div(&b[i]).ok()?;
    (vec_sub(a, &vec_scale(b, &k)).iter().all(|x| x.is_zero())).then_some(k)
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::<Scalar>::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let z = Matrix::<Scalar>::zeros(2, 2);
        assert_eq!(z.rref(), (z.clone(), vec![]));
        let m = Matrix::new(2, 2, vec![s("q"), s("q^2"), s("1"), s("q")]);
        let expected = Matrix::new(2, 2, vec![s("1"), s("q"), s("0"), s("0")]);
        assert_eq!(m.rref(), (expected, vec![0]));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::<Scalar>::identity(4).kernel().is_empty());
        assert_eq!(Matrix::<Scalar>::zeros(1, 3).kernel().len(), 3);
    }

    #[test]
    fn solve_examples() {
        let b = vec![s("q"), s("c"), s("1/q")];
        assert_eq!(Matrix::identity(3).solve(&b).unwrap(), b);
        assert_eq!(
            Matrix::<Scalar>::zeros(3, 3).solve(&b),
            Err(LinalgError::NoSolution)
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Scalar>::identity(8).rank(), 8);
        assert_eq!(Matrix::<Scalar>::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::new(2, 2, vec![s("q"), s("1"), s("c"), s("q+c")]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Matrix::new(2, 2, vec![s("q"), s("q^2"), s("1"), s("q")]);
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<BigRational>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::new(r, c, v.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r, _) = m.rref();
            prop_assert_eq!(r.rref().0, r);
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix()) {
            for k in m.kernel() {
                prop_assert!(vec_is_zero(&m.apply(&k)));
            }
        }
    }
}
