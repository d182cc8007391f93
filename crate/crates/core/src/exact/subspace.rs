use std::fmt;

use serde::{Deserialize, Serialize};

use super::echelon::{dense_from_sparse, sparse_from_dense, Echelon};
use super::matrix::{dot, is_zero_vector, Matrix, Vector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Linear subspace of `Q^n`, stored by its reduced row-echelon basis.
///
/// The representative is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_echelon(&{
            let mut e = Echelon::new(ambient);
            for i in 0..ambient {
                e.insert(vec![(i, Scalar::one())]);
            }
            e
        })
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vector]) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
            if e.is_full() {
                break;
            }
            e.insert(sparse_from_dense(v));
        }
        Self::from_echelon(&e)
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        let ambient = e.ncols();
        let basis = e.rref().iter().map(|r| dense_from_sparse(r, ambient)).collect();
        Subspace { ambient, basis, pivots: e.pivots() }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<Vector> = indices.into_iter().map(|i| super::matrix::unit_vector(ambient, i)).collect();
        Self::from_vectors(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduced row-echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows_with_cols(&self.basis, self.ambient)
    }

    /// `v` minus its echelon reduction; zero iff `v` lies in the subspace.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.residual(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient, &vs)
    }

    /// Orthogonal complement for the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        self.basis_matrix().kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.dim() == self.ambient {
            return other.clone();
        }
        if other.dim() == self.ambient {
            return self.clone();
        }
        let mut rows = self.annihilator().basis;
        rows.extend(other.annihilator().basis);
        Matrix::from_rows_with_cols(&rows, self.ambient).kernel()
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(m.rows(), &vs)
    }
}

/// `{ t in within : <s, t>_gram = 0 }`, the Gram-orthogonal complement of `s`
/// inside `within`.
pub fn gram_complement(s: &Subspace, within: &Subspace, gram: &Matrix) -> Result<Subspace> {
    if s.ambient() != within.ambient() || gram.rows() != s.ambient() || !gram.is_square() {
        return Err(Error::Dimension("gram_complement: inconsistent ambient dimensions".into()));
    }
    if !within.contains_subspace(s) {
        return Err(Error::NotContained("gram_complement: s is not inside within".into()));
    }
    if s.is_zero() {
        return Ok(within.clone());
    }
    let rows: Vec<Vector> = s.basis().iter().map(|v| gram.vec_mul(v)).collect();
    let perp = Matrix::from_rows_with_cols(&rows, s.ambient()).kernel();
    Ok(perp.intersection(within))
}

/// Whether every vector of `a` is Gram-orthogonal to every vector of `b`.
pub fn gram_orthogonal(a: &Subspace, b: &Subspace, gram: &Matrix) -> bool {
    a.basis().iter().all(|u| {
        let gu = gram.vec_mul(u);
        b.basis().iter().all(|v| dot(&gu, v).is_zero())
    })
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}, pivots {:?})", self.dim(), self.ambient, self.pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: &[i64]) -> Vector {
        x.iter().map(|a| Scalar::from_int(*a)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_vectors(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_vectors(3, &[v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert!(a.contains(&v(&[2, 3, 1])));
        assert!(!a.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn complement_edge_cases() {
        let within = Subspace::coordinate(4, [0, 1, 2]);
        let g = Matrix::identity(4);
        assert!(gram_complement(&within, &within, &g).unwrap().is_zero());
        assert_eq!(gram_complement(&Subspace::zero(4), &within, &g).unwrap(), within);
        let outside = Subspace::coordinate(4, [3]);
        assert!(gram_complement(&outside, &within, &g).is_err());
    }

    #[test]
    fn weighted_complement() {
        let g = Matrix::diagonal(&[Scalar::one(), Scalar::from_int(2)]);
        let s = Subspace::from_vectors(2, &[v(&[1, 1])]);
        let t = gram_complement(&s, &Subspace::full(2), &g).unwrap();
        assert_eq!(t, Subspace::from_vectors(2, &[v(&[-2, 1])]));
        assert!(gram_orthogonal(&s, &t, &g));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::coordinate(4, [0, 1]);
        let b = Subspace::from_vectors(4, &[v(&[1, 1, 0, 0]), v(&[0, 0, 1, 0])]);
        assert_eq!(a.intersection(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
    }

    fn small_vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vector>> {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), k)
            .prop_map(|vs| vs.into_iter().map(|x| v(&x)).collect())
    }

    proptest! {
        #[test]
        fn complement_is_involutive(s in small_vectors(5, 2), w in small_vectors(5, 2)) {
            let within = Subspace::from_vectors(5, &[s.clone(), w].concat());
            let s = Subspace::from_vectors(5, &s);
            let g = Matrix::diagonal(&[1, 2, 1, 3, 1].map(Scalar::from_int));
            let t = gram_complement(&s, &within, &g).unwrap();
            prop_assert_eq!(s.dim() + t.dim(), within.dim());
            prop_assert_eq!(gram_complement(&t, &within, &g).unwrap(), s);
        }

        #[test]
        fn intersection_dimension_formula(a in small_vectors(5, 3), b in small_vectors(5, 3)) {
            let a = Subspace::from_vectors(5, &a);
            let b = Subspace::from_vectors(5, &b);
            prop_assert_eq!(a.intersection(&b).dim() + a.sum(&b).dim(), a.dim() + b.dim());
        }
    }
}
