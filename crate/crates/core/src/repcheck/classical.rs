//! Classical matrix Lie algebras as real skew operators on their standard
//! real modules `R^n`, `C^n = R^{2n}` and `H^n = R^{4n}`.

use serde::{Deserialize, Serialize};

use crate::exact::{Matrix, Scalar};
use crate::octonion::Octonion;

/// Complex numbers act on `R^2` blocks with coordinates `(re, im)`;
/// quaternions act on `R^4` blocks with coordinates `(1, i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classical {
    So(usize),
    Su(usize),
    U(usize),
    Sp(usize),
}

impl Classical {
    pub fn name(self) -> String {
        match self {
            Classical::So(n) => format!("so{n}"),
            Classical::Su(n) => format!("su{n}"),
            Classical::U(n) => format!("u{n}"),
            Classical::Sp(n) => format!("sp{n}"),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Classical::So(n) => n * (n - 1) / 2,
            Classical::Su(n) => n * n - 1,
            Classical::U(n) => n * n,
            Classical::Sp(n) => n * (2 * n + 1),
        }
    }

    /// Real dimension of the standard module.
    pub fn module_dim(self) -> usize {
        match self {
            Classical::So(n) => n,
            Classical::Su(n) | Classical::U(n) => 2 * n,
            Classical::Sp(n) => 4 * n,
        }
    }

    pub fn basis(self) -> Vec<Matrix> {
        match self {
            Classical::So(n) => (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).map(|(a, b)| rotation(n, a, b)).collect(),
            Classical::U(n) | Classical::Su(n) => {
                let i = Octonion::basis(1);
                let mut out = Vec::new();
                for d in 0..n {
                    if matches!(self, Classical::U(_)) {
                        out.push(quaternionic(n, 2, &[(d, d, i.clone())]));
                    } else if d + 1 < n {
                        out.push(quaternionic(n, 2, &[(d, d, i.clone()), (d + 1, d + 1, -&i)]));
                    }
                }
                out.extend(off_diagonal(n, 2, &[Octonion::basis(1)]));
                out
            }
            Classical::Sp(n) => {
                let units: Vec<Octonion> = (1..4).map(Octonion::basis).collect();
                let mut out: Vec<Matrix> = (0..n).flat_map(|d| units.iter().map(move |u| quaternionic(n, 4, &[(d, d, u.clone())]))).collect();
                out.extend(off_diagonal(n, 4, &units));
                out
            }
        }
    }
}

/// `E_ab - E_ba`.
pub fn rotation(n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(a, b)] = -Scalar::one();
    m[(b, a)] = Scalar::one();
    m
}

/// Left multiplication by `q` on the first `k` coordinates of a quaternion.
pub fn left_mult(q: &Octonion, k: usize) -> Matrix {
    let mut m = Matrix::zeros(k, k);
    for c in 0..k {
        let img = q.mul(&Octonion::basis(c));
        for r in 0..k {
            m[(r, c)] = img.coords()[r].clone();
        }
    }
    m
}

/// Right multiplication by `q` on `H`.
pub fn right_mult(q: &Octonion) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for c in 0..4 {
        let img = Octonion::basis(c).mul(q);
        for r in 0..4 {
            m[(r, c)] = img.coords()[r].clone();
        }
    }
    m
}

/// Realification of the matrix with the given entries over `R^k` blocks,
/// `k = 2` for complex and `k = 4` for quaternionic entries.
fn quaternionic(n: usize, k: usize, entries: &[(usize, usize, Octonion)]) -> Matrix {
    let mut m = Matrix::zeros(n * k, n * k);
    for (a, b, q) in entries {
        let block = left_mult(q, k);
        for r in 0..k {
            for c in 0..k {
                m[(a * k + r, b * k + c)] = &m[(a * k + r, b * k + c)] + &block[(r, c)];
            }
        }
    }
    m
}

/// `E_ab - E_ba` and `u (E_ab + E_ba)` for `a < b` and each imaginary unit `u`.
fn off_diagonal(n: usize, k: usize, units: &[Octonion]) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push(quaternionic(n, k, &[(a, b, Octonion::one()), (b, a, -&Octonion::one())]));
            for u in units {
                out.push(quaternionic(n, k, &[(a, b, u.clone()), (b, a, u.clone())]));
            }
        }
    }
    out
}

/// Block-diagonal copies of `x` in every slot.
pub fn diagonal(x: &Matrix, copies: usize) -> Matrix {
    Matrix::identity(copies).kron(x)
}

/// `x` in slot `k` of `copies` summands, zero elsewhere.
pub fn on_summand(x: &Matrix, k: usize, copies: usize) -> Matrix {
    let mut e = Matrix::zeros(copies, copies);
    e[(k, k)] = Scalar::one();
    e.kron(x)
}

/// Scalar multiplication by `i` on `C^n`.
pub fn complex_unit(n: usize) -> Matrix {
    Matrix::identity(n).kron(&left_mult(&Octonion::basis(1), 2))
}

/// Right multiplication by `q` on `H^n`.
pub fn right_scalar(q: &Octonion, n: usize) -> Matrix {
    Matrix::identity(n).kron(&right_mult(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::Subalgebra;

    fn check(c: Classical) {
        let basis = c.basis();
        let alg = Subalgebra::new(c.name(), c.module_dim(), &basis);
        assert_eq!(basis.len(), c.dim(), "{}", c.name());
        assert_eq!(alg.dim(), c.dim(), "{}", c.name());
        assert!(basis.iter().all(|x| x.transpose() == -x), "{}", c.name());
        assert!(alg.is_bracket_closed(), "{}", c.name());
    }

    #[test]
    fn dimensions_and_closure() {
        for n in 2..=4 {
            check(Classical::So(n));
            check(Classical::Su(n));
            check(Classical::U(n));
        }
        check(Classical::Sp(1));
        check(Classical::Sp(2));
        check(Classical::Sp(3));
    }

    #[test]
    fn complex_and_quaternionic_structures_commute() {
        let j = complex_unit(3);
        assert!(Classical::U(3).basis().iter().all(|x| x.commutator(&j).is_zero()));
        let r = right_scalar(&Octonion::basis(2), 2);
        assert!(Classical::Sp(2).basis().iter().all(|x| x.commutator(&r).is_zero()));
        assert_eq!(r.matmul(&r), -&Matrix::identity(8));
    }

    #[test]
    fn special_unitary_is_traceless() {
        let j = complex_unit(3);
        // the complex trace of X is proportional to the real trace of J X
        for x in Classical::Su(3).basis() {
            let t: Scalar = (0..6).map(|i| j.matmul(&x)[(i, i)].clone()).sum();
            assert!(t.is_zero());
        }
    }
}
