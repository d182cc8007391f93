//! The exceptional Jordan algebra of Hermitian 3x3 octonion matrices and the
//! Cayley plane inside it.
//!
//! Coordinates (27 total): `0..3` are the diagonal entries `d1, d2, d3`;
//! `3..11`, `11..19`, `19..27` are the off-diagonal octonions `x23`, `x13`,
//! `x12` stored above the diagonal. The lower triangle holds conjugates.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace, Vector};
use crate::octonion::Octonion;

pub const DIM: usize = 27;
/// Dimension of the Cayley plane.
pub const PLANE_DIM: usize = 16;

/// Off-diagonal slot holding entry `(i, j)`, `i != j`.
pub fn slot(i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < 3 && j < 3);
    3 - i - j
}

pub fn off_index(slot: usize, c: usize) -> usize {
    3 + 8 * slot + c
}

/// Octonion 3x3 matrix, used for the definitional product.
pub type OctMatrix = [[Octonion; 3]; 3];

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanElement(Vector);

impl JordanElement {
    pub fn zero() -> Self {
        JordanElement(vec![Scalar::zero(); DIM])
    }

    pub fn identity() -> Self {
        let mut x = Self::zero();
        for i in 0..3 {
            x.0[i] = Scalar::one();
        }
        x
    }

    /// Diagonal idempotent `E_ii`.
    pub fn e(i: usize) -> Self {
        let mut x = Self::zero();
        x.0[i] = Scalar::one();
        x
    }

    pub fn basis(a: usize) -> Self {
        let mut x = Self::zero();
        x.0[a] = Scalar::one();
        x
    }

    pub fn from_coords(c: Vector) -> Self {
        assert_eq!(c.len(), DIM);
        JordanElement(c)
    }

    pub fn from_parts(d: [Scalar; 3], x23: Octonion, x13: Octonion, x12: Octonion) -> Self {
        let mut c = Vec::with_capacity(DIM);
        c.extend(d);
        for o in [x23, x13, x12] {
            c.extend(o.0);
        }
        JordanElement(c)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vector {
        self.0
    }

    pub fn diag(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn off(&self, slot: usize) -> Octonion {
        let base = off_index(slot, 0);
        Octonion(std::array::from_fn(|c| self.0[base + c].clone()))
    }

    /// Matrix entry `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Octonion {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Octonion::real(self.0[i].clone()),
            std::cmp::Ordering::Less => self.off(slot(i, j)),
            std::cmp::Ordering::Greater => self.off(slot(i, j)).conj(),
        }
    }

    pub fn to_matrix(&self) -> OctMatrix {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    /// Reads a Hermitian octonion matrix; fails if it is not Hermitian.
    pub fn from_matrix(m: &OctMatrix) -> Result<Self> {
        for i in 0..3 {
            if !m[i][i].is_real() {
                return Err(Error::InvalidArgument(format!("diagonal entry {i} is not real")));
            }
            for j in i + 1..3 {
                if m[j][i] != m[i][j].conj() {
                    return Err(Error::InvalidArgument(format!("entries ({i},{j}) and ({j},{i}) are not conjugate")));
                }
            }
        }
        Ok(Self::from_parts(
            [m[0][0].re().clone(), m[1][1].re().clone(), m[2][2].re().clone()],
            m[1][2].clone(),
            m[0][2].clone(),
            m[0][1].clone(),
        ))
    }

    pub fn trace(&self) -> Scalar {
        &self.0[0] + &self.0[1] + &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        JordanElement(self.0.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        JordanElement(crate::exact::vec_add(&self.0, &other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        JordanElement(crate::exact::vec_sub(&self.0, &other.0))
    }

    /// `x o y = (xy + yx)/2`, computed from the precomputed structure constants.
    pub fn mul(&self, other: &Self) -> Self {
        let table = structure_constants();
        let mut out = vec![Scalar::zero(); DIM];
        for (a, xa) in self.0.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in other.0.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let s = xa * yb;
                for (c, v) in &table[a][b] {
                    out[*c] += &s * v;
                }
            }
        }
        JordanElement(out)
    }

    /// The Jordan product straight from the matrix definition.
    pub fn mul_by_definition(&self, other: &Self) -> Self {
        let x = self.to_matrix();
        let y = other.to_matrix();
        let xy = oct_matmul(&x, &y);
        let yx = oct_matmul(&y, &x);
        let half = Scalar::new(1, 2);
        let sym: OctMatrix = std::array::from_fn(|i| std::array::from_fn(|j| (&xy[i][j] + &yx[i][j]).scale(&half)));
        Self::from_matrix(&sym).expect("symmetrized product of Hermitian matrices is Hermitian")
    }

    /// Trace form `tr(x o y)`.
    pub fn inner(&self, other: &Self) -> Scalar {
        let mut s = Scalar::zero();
        for i in 0..3 {
            s += &self.0[i] * &other.0[i];
        }
        let two = Scalar::from_int(2);
        for a in 3..DIM {
            if !self.0[a].is_zero() && !other.0[a].is_zero() {
                s += &two * &self.0[a] * &other.0[a];
            }
        }
        s
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Left multiplication operator `y -> x o y`.
    pub fn mult_operator(&self) -> Matrix {
        let mut m = Matrix::zeros(DIM, DIM);
        for b in 0..DIM {
            let col = self.mul(&JordanElement::basis(b));
            for (a, v) in col.0.into_iter().enumerate() {
                m[(a, b)] = v;
            }
        }
        m
    }
}

pub fn oct_matmul(x: &OctMatrix, y: &OctMatrix) -> OctMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|k| {
            let mut acc = Octonion::zero();
            for j in 0..3 {
                acc = &acc + &x[i][j].mul(&y[j][k]);
            }
            acc
        })
    })
}

/// `e_a o e_b` for all basis pairs, as sparse coordinate lists.
pub fn structure_constants() -> &'static Vec<Vec<Vec<(usize, Scalar)>>> {
    static TABLE: OnceLock<Vec<Vec<Vec<(usize, Scalar)>>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..DIM)
            .map(|a| {
                (0..DIM)
                    .map(|b| {
                        let p = JordanElement::basis(a).mul_by_definition(&JordanElement::basis(b));
                        p.0.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
                    })
                    .collect()
            })
            .collect()
    })
}

/// Gram matrix of the trace form in the coordinate basis.
pub fn gram() -> Matrix {
    let entries: Vec<Scalar> = (0..DIM).map(|a| if a < 3 { Scalar::one() } else { Scalar::from_int(2) }).collect();
    Matrix::diagonal(&entries)
}

/// Trace-zero hyperplane.
pub fn traceless() -> Subspace {
    let mut row = vec![Scalar::zero(); DIM];
    for x in row.iter_mut().take(3) {
        *x = Scalar::one();
    }
    Matrix::from_rows(&[row]).kernel()
}

/// Subspace of matrices with entries in `span{1, .., e_{k-1}}` (k = 1, 2, 4, 8
/// gives the real, complex, quaternionic and full Hermitian matrices).
pub fn hermitian_over(k: usize) -> Subspace {
    let mut idx: Vec<usize> = (0..3).collect();
    for s in 0..3 {
        idx.extend((0..k).map(|c| off_index(s, c)));
    }
    Subspace::coordinate(DIM, idx)
}

/// A trace-one idempotent: a point of the Cayley plane.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CayleyPoint(JordanElement);

impl CayleyPoint {
    pub fn new(x: JordanElement) -> Result<Self> {
        if !x.trace().is_one() {
            return Err(Error::NotOnVariety(format!("trace is {}", x.trace())));
        }
        if !x.is_idempotent() {
            return Err(Error::NotOnVariety("not idempotent".into()));
        }
        Ok(CayleyPoint(x))
    }

    /// The basepoint `diag(1, 0, 0)`.
    pub fn basepoint() -> Self {
        CayleyPoint(JordanElement::e(0))
    }

    pub fn e(i: usize) -> Self {
        CayleyPoint(JordanElement::e(i))
    }

    pub fn value(&self) -> &JordanElement {
        &self.0
    }

    pub fn coords(&self) -> &[Scalar] {
        self.0.coords()
    }

    /// `v v* / |v|^2` for `v = (a, b, 1)`.
    pub fn chart(a: &Octonion, b: &Octonion) -> Result<Self> {
        Self::from_column(&[a.clone(), b.clone(), Octonion::one()])
    }

    /// `v v* / |v|^2` for a column `v` whose entries generate an associative
    /// subalgebra; the result is verified.
    pub fn from_column(v: &[Octonion; 3]) -> Result<Self> {
        let n: Scalar = v.iter().map(Octonion::norm).sum();
        if n.is_zero() {
            return Err(Error::InvalidArgument("zero column".into()));
        }
        let inv = n.recip();
        let m: OctMatrix = std::array::from_fn(|i| std::array::from_fn(|j| v[i].mul(&v[j].conj()).scale(&inv)));
        Self::new(JordanElement::from_matrix(&m)?)
    }

    /// `T_x V = { y : tr y = 0, x o y + y o x = y }`.
    pub fn tangent_space(&self) -> Result<Subspace> {
        let mut rows = (&self.0.mult_operator().scale(&Scalar::from_int(2)) - &Matrix::identity(DIM)).row_vectors();
        let mut tr = vec![Scalar::zero(); DIM];
        for x in tr.iter_mut().take(3) {
            *x = Scalar::one();
        }
        rows.push(tr);
        let t = Matrix::from_rows(&rows).kernel();
        if t.dim() != PLANE_DIM {
            return Err(Error::UnexpectedDimension { what: "tangent space".into(), expected: PLANE_DIM, computed: t.dim() });
        }
        Ok(t)
    }
}

impl fmt::Debug for JordanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "J[d=({}, {}, {}), x23={}, x13={}, x12={}]",
            self.0[0],
            self.0[1],
            self.0[2],
            self.off(0),
            self.off(1),
            self.off(2)
        )
    }
}

impl fmt::Debug for CayleyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyPoint({:?})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small() -> impl Strategy<Value = Scalar> {
        (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Scalar::new(n, d))
    }

    fn element() -> impl Strategy<Value = JordanElement> {
        proptest::collection::vec(small(), DIM).prop_map(JordanElement::from_coords)
    }

    fn octonion() -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8(small()).prop_map(Octonion)
    }

    #[test]
    fn basepoint_and_orthogonal_idempotents() {
        let p = JordanElement::e(0);
        assert_eq!(p.mul(&p), p);
        assert!(JordanElement::e(0).mul(&JordanElement::e(1)).is_zero());
        assert_eq!(JordanElement::identity().mul(&p), p);
    }

    #[test]
    fn tangent_space_at_basepoint() {
        let t = CayleyPoint::basepoint().tangent_space().unwrap();
        // first row/column entries x12, x13 only
        let expected = Subspace::coordinate(DIM, (11..27).collect::<Vec<_>>());
        assert_eq!(t, expected);
        assert!(!t.contains(CayleyPoint::basepoint().coords()));
    }

    #[test]
    fn chart_center() {
        let x = CayleyPoint::chart(&Octonion::zero(), &Octonion::zero()).unwrap();
        assert_eq!(x, CayleyPoint::e(2));
    }

    #[test]
    fn gram_is_trace_form() {
        assert!(gram().is_positive_definite());
        let x = JordanElement::from_coords((0..DIM as i64).map(|a| Scalar::new(a - 5, 3)).collect());
        let y = JordanElement::from_coords((0..DIM as i64).map(|a| Scalar::from_int(a % 4 - 1)).collect());
        assert_eq!(x.inner(&y), x.mul(&y).trace());
        assert_eq!(gram().bilinear(x.coords(), y.coords()), x.inner(&y));
    }

    #[test]
    fn subalgebra_chain() {
        let dims: Vec<usize> = [1, 2, 4, 8].iter().map(|k| hermitian_over(*k).dim()).collect();
        assert_eq!(dims, vec![6, 9, 15, 27]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn fast_product_matches_definition(x in element(), y in element()) {
            prop_assert_eq!(x.mul(&y), x.mul_by_definition(&y));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn trace_form_associative(x in element(), y in element(), z in element()) {
            prop_assert_eq!(x.mul(&y).inner(&z), x.inner(&y.mul(&z)));
        }

        #[test]
        fn jordan_identity(x in element(), y in element()) {
            let xx = x.mul(&x);
            prop_assert_eq!(xx.mul(&y.mul(&x)), xx.mul(&y).mul(&x));
        }

        #[test]
        fn chart_points_are_on_the_plane(a in octonion(), b in octonion()) {
            let x = CayleyPoint::chart(&a, &b).unwrap();
            prop_assert_eq!(x.tangent_space().unwrap().dim(), PLANE_DIM);
        }
    }
}
