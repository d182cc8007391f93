//! Explicit Jordan algebra automorphisms `x -> A alpha(x) A^T`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::jordan::{self, CayleyPoint, JordanElement, OctMatrix, DIM};
use crate::octonion::Octonion;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutElement {
    label: String,
    op: Matrix,
}

/// `alpha_{p,q}(x + y l) = p x conj(p) + (q y conj(p)) l` for unit quaternions.
pub fn alpha(p: &Octonion, q: &Octonion, o: &Octonion) -> Octonion {
    let c = o.coords();
    let x = Octonion::quaternion([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]);
    let y = Octonion::quaternion([c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()]);
    let x2 = p.mul(&x).mul(&p.conj());
    let y2 = q.mul(&y).mul(&p.conj());
    let (a, b) = (x2.coords(), y2.coords());
    Octonion([a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone(), b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()])
}

fn is_orthogonal(a: &Matrix) -> bool {
    a.is_square() && a.matmul(&a.transpose()) == Matrix::identity(a.rows())
}

impl AutElement {
    /// The map `x -> A alpha_{p,q}(x) A^T`; `A` rational orthogonal, `p, q`
    /// unit quaternions.
    pub fn new(label: impl Into<String>, a: &Matrix, p: &Octonion, q: &Octonion) -> Result<Self> {
        if a.rows() != 3 || !is_orthogonal(a) {
            return Err(Error::InvalidArgument("A must be a 3x3 orthogonal matrix".into()));
        }
        for (name, u) in [("p", p), ("q", q)] {
            if !u.is_quaternion() || !u.norm().is_one() {
                return Err(Error::InvalidArgument(format!("{name} must be a unit quaternion")));
            }
        }
        let mut op = Matrix::zeros(DIM, DIM);
        for b in 0..DIM {
            let x = JordanElement::basis(b).to_matrix();
            let ax: OctMatrix = std::array::from_fn(|i| std::array::from_fn(|k| alpha(p, q, &x[i][k])));
            let img: OctMatrix = std::array::from_fn(|i| {
                std::array::from_fn(|k| {
                    let mut acc = Octonion::zero();
                    for j in 0..3 {
                        for l in 0..3 {
                            let s = &a[(i, j)] * &a[(k, l)];
                            if !s.is_zero() {
                                acc = &acc + &ax[j][l].scale(&s);
                            }
                        }
                    }
                    acc
                })
            });
            let y = JordanElement::from_matrix(&img)?;
            for (r, v) in y.into_coords().into_iter().enumerate() {
                op[(r, b)] = v;
            }
        }
        let el = AutElement { label: label.into(), op };
        if !el.is_automorphism() {
            return Err(Error::InvalidArgument("constructed map is not multiplicative".into()));
        }
        Ok(el)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &Matrix {
        &self.op
    }

    pub fn apply(&self, x: &JordanElement) -> JordanElement {
        JordanElement::from_coords(self.op.mul_vec(x.coords()))
    }

    pub fn apply_point(&self, x: &CayleyPoint) -> Result<CayleyPoint> {
        CayleyPoint::new(self.apply(x.value()))
    }

    /// Multiplicative on all basis pairs.
    pub fn is_automorphism(&self) -> bool {
        let images: Vec<JordanElement> = (0..DIM).map(|a| JordanElement::from_coords(self.op.column(a))).collect();
        (0..DIM).all(|a| {
            (a..DIM).all(|b| {
                let prod = JordanElement::basis(a).mul(&JordanElement::basis(b));
                self.apply(&prod) == images[a].mul(&images[b])
            })
        })
    }

    pub fn preserves_trace_form(&self) -> bool {
        let g = jordan::gram();
        self.op.transpose().matmul(&g).matmul(&self.op) == g
    }
}

fn diag3(d: [i64; 3]) -> Matrix {
    Matrix::diagonal(&d.map(Scalar::from_int))
}

/// `h1 = (diag(-1,-1,1), alpha_{i,i})`.
pub fn h1() -> AutElement {
    let i = Octonion::basis(1);
    AutElement::new("h1", &diag3([-1, -1, 1]), &i, &i).expect("h1 is an automorphism")
}

/// `h2 = (diag(-1,1,-1), alpha_{j,j})`.
pub fn h2() -> AutElement {
    let j = Octonion::basis(2);
    AutElement::new("h2", &diag3([-1, 1, -1]), &j, &j).expect("h2 is an automorphism")
}

/// Cyclic permutation of the diagonal sending `E33` to `E11`.
pub fn cyclic() -> AutElement {
    let a = Matrix::from_i64(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
    AutElement::new("cyclic", &a, &Octonion::one(), &Octonion::one()).expect("permutation is an automorphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_inputs_give_identity() {
        let e = AutElement::new("id", &Matrix::identity(3), &Octonion::one(), &Octonion::one()).unwrap();
        assert_eq!(*e.matrix(), Matrix::identity(DIM));
    }

    #[test]
    fn rejects_bad_inputs() {
        let two = Octonion::real(Scalar::from_int(2));
        assert!(AutElement::new("x", &Matrix::identity(3), &two, &Octonion::one()).is_err());
        assert!(AutElement::new("x", &Matrix::identity(3), &Octonion::basis(5), &Octonion::one()).is_err());
        assert!(AutElement::new("x", &diag3([2, 1, 1]), &Octonion::one(), &Octonion::one()).is_err());
    }

    #[test]
    fn generators_preserve_the_plane() {
        for h in [h1(), h2(), cyclic()] {
            assert!(h.preserves_trace_form(), "{}", h.label());
            let x = CayleyPoint::chart(&Octonion::from_i64([1, 0, 2, 0, 0, 1, 0, 0]), &Octonion::from_i64([0, 1, 0, 0, 3, 0, 0, 1]))
                .unwrap();
            assert!(h.apply_point(&x).is_ok());
        }
        assert_eq!(cyclic().apply_point(&CayleyPoint::e(2)).unwrap(), CayleyPoint::e(0));
    }

    #[test]
    fn alpha_is_an_octonion_automorphism() {
        let (p, q) = (Octonion::basis(1), Octonion::basis(2));
        for a in 0..8 {
            for b in 0..8 {
                let (x, y) = (Octonion::basis(a), Octonion::basis(b));
                assert_eq!(alpha(&p, &q, &x.mul(&y)), alpha(&p, &q, &x).mul(&alpha(&p, &q, &y)));
            }
        }
    }
}
