use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{combination, is_zero_vector, Matrix, Scalar, Subspace, Vector};

/// A Lie algebra of `n x n` rational matrices, stored by the canonical
/// echelon basis of its span.
#[derive(Clone, Serialize, Deserialize)]
pub struct Subalgebra {
    label: String,
    n: usize,
    basis: Vec<Matrix>,
    #[serde(skip)]
    span: Option<Subspace>,
}

impl PartialEq for Subalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.basis == other.basis
    }
}

impl Subalgebra {
    /// Span of the given operators. Bracket closure is not checked here.
    pub fn new(label: impl Into<String>, n: usize, ops: &[Matrix]) -> Self {
        let flat: Vec<Vector> = ops
            .iter()
            .map(|m| {
                assert_eq!((m.rows(), m.cols()), (n, n), "operator has wrong shape");
                m.to_vector()
            })
            .collect();
        Self::from_span(label, n, Subspace::from_vectors(n * n, &flat))
    }

    fn from_span(label: impl Into<String>, n: usize, span: Subspace) -> Self {
        let basis = span.basis().iter().map(|v| Matrix::from_vector(n, n, v.clone())).collect();
        Subalgebra { label: label.into(), n, basis, span: Some(span) }
    }

    pub fn zero(label: impl Into<String>, n: usize) -> Self {
        Self::new(label, n, &[])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Size of the matrices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn span(&self) -> Subspace {
        match &self.span {
            Some(s) => s.clone(),
            None => Subspace::from_vectors(self.n * self.n, &self.basis.iter().map(Matrix::to_vector).collect::<Vec<_>>()),
        }
    }

    pub fn contains(&self, op: &Matrix) -> bool {
        self.span().contains(&op.to_vector())
    }

    pub fn contains_algebra(&self, other: &Subalgebra) -> bool {
        let span = self.span();
        other.basis.iter().all(|m| span.contains(&m.to_vector()))
    }

    /// Every commutator of basis elements lies in the span.
    pub fn is_bracket_closed(&self) -> bool {
        let span = self.span();
        (0..self.dim()).all(|i| (i + 1..self.dim()).all(|j| span.contains(&self.basis[i].commutator(&self.basis[j]).to_vector())))
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> Matrix {
        let flat: Vec<Vector> = self.basis.iter().map(Matrix::to_vector).collect();
        Matrix::from_vector(self.n, self.n, combination(coeffs, &flat, self.n * self.n))
    }

    /// Subalgebra spanned by the elements whose basis coefficients lie in `coeffs`.
    pub fn from_coefficients(&self, label: impl Into<String>, coeffs: &Subspace) -> Subalgebra {
        let ops: Vec<Matrix> = coeffs.basis().iter().map(|c| self.combination(c)).collect();
        Subalgebra::new(label, self.n, &ops)
    }

    /// Columns `D_k v` for the basis elements `D_k`.
    pub fn evaluation(&self, v: &[Scalar]) -> Vec<Vector> {
        self.basis.iter().map(|d| d.mul_vec(v)).collect()
    }

    /// `span { D v : D in self }`.
    pub fn orbit_tangent(&self, v: &[Scalar]) -> Subspace {
        Subspace::from_vectors(self.n, &self.evaluation(v))
    }

    /// Rank of the evaluation map at `v`.
    pub fn orbit_dim(&self, v: &[Scalar]) -> usize {
        Matrix::from_columns(&self.evaluation(v), self.n).rank()
    }

    /// Kernel of a linear condition `D -> rows(D)` given per basis element.
    /// `conditions[k]` is the image of the `k`-th basis element; the result is
    /// the set of combinations with zero image.
    fn kernel_of(&self, label: impl Into<String>, conditions: Vec<Vector>) -> Subalgebra {
        let len = conditions.first().map_or(0, Vec::len);
        if len == 0 {
            return self.clone().with_label(label);
        }
        let m = Matrix::from_columns(&conditions, len);
        self.from_coefficients(label, &m.kernel())
    }

    /// `{ D : D v = 0 }`.
    pub fn stabilizer_vector(&self, label: impl Into<String>, v: &[Scalar]) -> Subalgebra {
        self.kernel_of(label, self.evaluation(v))
    }

    /// `{ D : D|_L = 0 }`.
    pub fn annihilator(&self, label: impl Into<String>, l: &Subspace) -> Subalgebra {
        let conditions = self
            .basis
            .iter()
            .map(|d| l.basis().iter().flat_map(|v| d.mul_vec(v)).collect())
            .collect();
        self.kernel_of(label, conditions)
    }

    /// `{ D : D(L) ⊆ L }`.
    pub fn preserver_subspace(&self, label: impl Into<String>, l: &Subspace) -> Subalgebra {
        let ann = l.annihilator();
        let conditions = self
            .basis
            .iter()
            .map(|d| {
                l.basis()
                    .iter()
                    .flat_map(|v| {
                        let dv = d.mul_vec(v);
                        ann.basis().iter().map(move |a| crate::exact::dot(a, &dv)).collect::<Vec<_>>()
                    })
                    .collect()
            })
            .collect();
        self.kernel_of(label, conditions)
    }

    /// `{ D : D x ∈ T }` for a single point and target subspace.
    pub fn tangent_condition(&self, label: impl Into<String>, x: &[Scalar], target: &Subspace) -> Subalgebra {
        let ann = target.annihilator();
        let conditions = self
            .basis
            .iter()
            .map(|d| {
                let dx = d.mul_vec(x);
                ann.basis().iter().map(|a| crate::exact::dot(a, &dx)).collect()
            })
            .collect();
        self.kernel_of(label, conditions)
    }

    pub fn intersection(&self, label: impl Into<String>, other: &Subalgebra) -> Subalgebra {
        Self::from_span(label, self.n, self.span().intersection(&other.span()))
    }

    /// `{ D : [D, h] ⊆ h }`.
    pub fn normalizer(&self, label: impl Into<String>, h: &Subalgebra) -> Subalgebra {
        let hs = h.span();
        let conditions = self
            .basis
            .iter()
            .map(|d| h.basis.iter().flat_map(|x| hs.residual(&d.commutator(x).to_vector())).collect())
            .collect();
        self.kernel_of(label, conditions)
    }

    /// `{ D : [D, h] = 0 }`.
    pub fn centralizer(&self, label: impl Into<String>, h: &Subalgebra) -> Subalgebra {
        let conditions = self
            .basis
            .iter()
            .map(|d| h.basis.iter().flat_map(|x| d.commutator(x).to_vector()).collect())
            .collect();
        self.kernel_of(label, conditions)
    }

    /// Derived algebra `[g, g]`.
    pub fn derived(&self) -> Subalgebra {
        let mut ops = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                ops.push(self.basis[i].commutator(&self.basis[j]));
            }
        }
        Subalgebra::new(format!("[{0}, {0}]", self.label), self.n, &ops)
    }

    pub fn center(&self) -> Subalgebra {
        self.centralizer(format!("z({})", self.label), self)
    }

    /// Sum of two subalgebras (bracket closure is the caller's concern).
    pub fn sum(&self, label: impl Into<String>, other: &Subalgebra) -> Subalgebra {
        Self::from_span(label, self.n, self.span().sum(&other.span()))
    }

    /// Each basis element is skew for `gram`: `G D + D^T G = 0`.
    pub fn is_skew(&self, gram: &Matrix) -> bool {
        self.basis.iter().all(|d| {
            let gd = gram.matmul(d);
            (&gd + &gd.transpose()).is_zero()
        })
    }

    /// Conjugates every basis element by an invertible `a`: `D -> a D a^{-1}`.
    pub fn conjugate(&self, label: impl Into<String>, a: &Matrix) -> Result<Subalgebra> {
        let inv = a.inverse()?;
        let ops: Vec<Matrix> = self.basis.iter().map(|d| a.matmul(d).matmul(&inv)).collect();
        Ok(Subalgebra::new(label, self.n, &ops))
    }

    /// Fails unless the dimension equals `expected`.
    pub fn expect_dim(self, expected: usize) -> Result<Self> {
        if self.dim() == expected {
            Ok(self)
        } else {
            Err(Error::UnexpectedDimension { what: self.label.clone(), expected, computed: self.dim() })
        }
    }

    /// Whether `D v = 0` for every element.
    pub fn fixes(&self, v: &[Scalar]) -> bool {
        self.basis.iter().all(|d| is_zero_vector(&d.mul_vec(v)))
    }
}

impl fmt::Debug for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subalgebra({}, dim {} on Q^{})", self.label, self.dim(), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Elementary skew matrix `E_ij - E_ji`.
    fn rot(n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = Scalar::one();
        m[(j, i)] = -Scalar::one();
        m
    }

    fn so(n: usize) -> Subalgebra {
        let mut ops = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                ops.push(rot(n, i, j));
            }
        }
        Subalgebra::new(format!("so({n})"), n, &ops)
    }

    #[test]
    fn so4_structure() {
        let g = so(4);
        assert_eq!(g.dim(), 6);
        assert!(g.is_bracket_closed());
        assert!(g.is_skew(&Matrix::identity(4)));
        assert_eq!(g.center().dim(), 0);
        assert_eq!(g.derived().dim(), 6);
    }

    #[test]
    fn stabilizers_and_annihilators() {
        let g = so(4);
        let e0 = crate::exact::unit_vector(4, 0);
        let st = g.stabilizer_vector("so(3)", &e0);
        assert_eq!(st.dim(), 3);
        assert!(st.is_bracket_closed());
        assert_eq!(g.orbit_dim(&e0), 3);
        let plane = Subspace::coordinate(4, [0, 1]);
        assert_eq!(g.annihilator("so(2)", &plane).dim(), 1);
        assert_eq!(g.preserver_subspace("so(2)+so(2)", &plane).dim(), 2);
    }

    #[test]
    fn normalizer_of_self_and_of_torus() {
        let g = so(4);
        assert_eq!(g.normalizer("n", &g), g);
        let t = Subalgebra::new("t", 4, &[rot(4, 0, 1)]);
        // so(2) + so(2) centralizes, normalizer is the same
        assert_eq!(g.centralizer("c", &t).dim(), 2);
        assert_eq!(g.normalizer("n", &t).dim(), 2);
    }
}
