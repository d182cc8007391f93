use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::echelon::{sparse_from_dense, Echelon};
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense vector of exact scalars.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// Linear combination `sum coeffs[i] * vectors[i]`.
pub fn combination(coeffs: &[Scalar], vectors: &[Vector], len: usize) -> Vector {
    let mut out = zero_vector(len);
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols(rows: &[Vector], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_columns(cols: &[Vector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|x| Scalar::from_int(*x)).collect() }
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.rows, "vector-matrix dimension mismatch");
        let mut out = zero_vector(self.cols);
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += x * a;
                }
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
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
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    /// `[self, rhs] = self rhs - rhs self`.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        &self.matmul(rhs) - &rhs.matmul(self)
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out[(self.rows + i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            if e.is_full() {
                break;
            }
            e.insert(sparse_from_dense(self.row(i)));
        }
        e
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Right null space.
    pub fn kernel(&self) -> Subspace {
        let basis = self.echelon().kernel();
        Subspace::from_vectors(self.cols, &basis)
    }

    /// Unique solution of `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vector> {
        let x = self.solve_any(b)?.ok_or(Error::Singular)?;
        if self.rank() != self.cols {
            return Err(Error::Singular);
        }
        Ok(x)
    }

    /// Some solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve_any(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("rhs has length {}, expected {}", b.len(), self.rows)));
        }
        // Kernel of [A | -b]; a solution exists iff some kernel vector has a non-zero last entry.
        let mut aug = Echelon::new(self.cols + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(-&b[i]);
            aug.insert(sparse_from_dense(&row));
        }
        for v in aug.kernel() {
            let last = &v[self.cols];
            if !last.is_zero() {
                let inv = last.recip();
                return Ok(Some(v[..self.cols].iter().map(|x| x * &inv).collect()));
            }
        }
        Ok(None)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        // Solve against each unit vector through a single RREF of [A | I].
        let mut aug = Echelon::new(2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            aug.insert(sparse_from_dense(&row));
        }
        let rref = aug.rref();
        if aug.pivots().iter().take(n).copied().ne(0..n) {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for (i, row) in rref.iter().enumerate() {
            for (c, x) in row {
                if *c >= n {
                    inv[(i, c - n)] = x.clone();
                }
            }
        }
        Ok(inv)
    }

    /// Symmetric positive definiteness via exact LDLᵀ (all pivots positive).
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_square() || *self != self.transpose() {
            return false;
        }
        let n = self.rows;
        let mut a = self.clone();
        for k in 0..n {
            let d = a[(k, k)].clone();
            if d.signum() <= 0 {
                return false;
            }
            for i in k + 1..n {
                let f = &a[(i, k)] / &d;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = &f * &a[(k, j)];
                    a[(i, j)] -= v;
                }
            }
        }
        true
    }

    /// `x^T self y`.
    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.mul_vec(y))
    }

    /// Flattened entries, used when operators are treated as vectors.
    pub fn to_vector(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: Vector) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_add(&self.data, &rhs.data) }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &rhs.data) }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(5, 2).rank(), 0);
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn projector_kernel() {
        // rank-one projector onto (1,1,0)/2
        let h = Scalar::new(1, 2);
        let z = Scalar::zero();
        let p = Matrix::from_rows(&[
            vec![h.clone(), h.clone(), z.clone()],
            vec![h.clone(), h.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone()],
        ]);
        assert_eq!(p.rank(), 1);
        let k = p.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(is_zero_vector(&p.mul_vec(v)));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let a = Matrix::from_i64(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(3));
        let b: Vector = [1, 2, 3].iter().map(|x| Scalar::from_int(*x)).collect();
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let sing = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(sing.inverse().is_err());
        let b2 = vec![Scalar::one(), Scalar::zero()];
        assert_eq!(sing.solve_any(&b2).unwrap(), None);
    }

    #[test]
    fn positive_definite() {
        assert!(Matrix::identity(4).is_positive_definite());
        assert!(Matrix::from_i64(2, 2, &[2, 1, 1, 2]).is_positive_definite());
        assert!(!Matrix::from_i64(2, 2, &[1, 2, 2, 1]).is_positive_definite());
        assert!(!Matrix::from_i64(2, 2, &[1, 2, 0, 1]).is_positive_definite());
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-3i64..=3, 1i64..=3), rows * cols).prop_map(move |v| {
            let data = v.into_iter().map(|(n, d)| Scalar::new(n, d)).collect();
            Matrix::from_vector(rows, cols, data)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(4, 6)) {
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.dim(), m.cols());
            for v in k.basis() {
                prop_assert!(is_zero_vector(&m.mul_vec(v)));
            }
        }

        #[test]
        fn solve_substitutes_back(m in small_matrix(4, 4), x in proptest::collection::vec(-5i64..5, 4)) {
            let x: Vector = x.into_iter().map(Scalar::from_int).collect();
            let b = m.mul_vec(&x);
            let y = m.solve_any(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&y), b);
        }
    }
}
