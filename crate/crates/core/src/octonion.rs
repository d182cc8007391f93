//! Octonions as pairs of quaternions.
//!
//! Coordinates are ordered `1, i, j, k, l, li, lj, lk`; the first four form
//! the quaternion `a` and the last four the quaternion `b` of the pair
//! `(a, b) = a + b l`. Multiplication is
//! `(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exact::Scalar;

pub const BASIS_NAMES: [&str; 8] = ["1", "i", "j", "k", "l", "li", "lj", "lk"];

type Quat = [Scalar; 4];

fn quat_mul(p: &Quat, q: &Quat) -> Quat {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn quat_conj(q: &Quat) -> Quat {
    [q[0].clone(), -&q[1], -&q[2], -&q[3]]
}

fn quat_sub(p: &Quat, q: &Quat) -> Quat {
    std::array::from_fn(|i| &p[i] - &q[i])
}

fn quat_add(p: &Quat, q: &Quat) -> Quat {
    std::array::from_fn(|i| &p[i] + &q[i])
}

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Octonion(pub [Scalar; 8]);

impl Octonion {
    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| Scalar::zero()))
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(i: usize) -> Self {
        let mut o = Self::zero();
        o.0[i] = Scalar::one();
        o
    }

    pub fn real(r: Scalar) -> Self {
        let mut o = Self::zero();
        o.0[0] = r;
        o
    }

    pub fn from_i64(c: [i64; 8]) -> Self {
        Octonion(c.map(Scalar::from_int))
    }

    /// Quaternion `q0 + q1 i + q2 j + q3 k` sitting in the first factor.
    pub fn quaternion(q: [Scalar; 4]) -> Self {
        let [a, b, c, d] = q;
        let z = Scalar::zero;
        Octonion([a, b, c, d, z(), z(), z(), z()])
    }

    pub fn from_pair(a: Quat, b: Quat) -> Self {
        let [a0, a1, a2, a3] = a;
        let [b0, b1, b2, b3] = b;
        Octonion([a0, a1, a2, a3, b0, b1, b2, b3])
    }

    fn halves(&self) -> (Quat, Quat) {
        let c = &self.0;
        (
            [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()],
            [c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()],
        )
    }

    pub fn coords(&self) -> &[Scalar; 8] {
        &self.0
    }

    pub fn re(&self) -> &Scalar {
        &self.0[0]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.0[1..].iter().all(Scalar::is_zero)
    }

    /// Whether the element lies in the quaternion factor `span{1, i, j, k}`.
    pub fn is_quaternion(&self) -> bool {
        self.0[4..].iter().all(Scalar::is_zero)
    }

    pub fn conj(&self) -> Self {
        let mut c = self.0.clone();
        for x in c.iter_mut().skip(1) {
            *x = -&*x;
        }
        Octonion(c)
    }

    /// Squared Euclidean norm, `x conj(x)`.
    pub fn norm(&self) -> Scalar {
        self.0.iter().map(Scalar::square).sum()
    }

    /// Euclidean inner product `Re(x conj(y))`.
    pub fn inner(&self, other: &Octonion) -> Scalar {
        crate::exact::dot(&self.0, &other.0)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            None
        } else {
            Some(self.conj().scale(&n.recip()))
        }
    }

    pub fn mul(&self, other: &Octonion) -> Self {
        let (a, b) = self.halves();
        let (c, d) = other.halves();
        let first = quat_sub(&quat_mul(&a, &c), &quat_mul(&quat_conj(&d), &b));
        let second = quat_add(&quat_mul(&d, &a), &quat_mul(&b, &quat_conj(&c)));
        Octonion::from_pair(first, second)
    }

    pub fn commutator(&self, other: &Octonion) -> Self {
        &self.mul(other) - &other.mul(self)
    }

    pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion) -> Self {
        &x.mul(y).mul(z) - &x.mul(&y.mul(z))
    }
}

/// Product of two basis units: `e_i e_j = sign * e_k`.
pub fn unit_product(i: usize, j: usize) -> (i8, usize) {
    let p = Octonion::basis(i).mul(&Octonion::basis(j));
    let (k, v) = p.0.iter().enumerate().find(|(_, x)| !x.is_zero()).expect("units multiply to a unit");
    (v.signum() as i8, k)
}

/// Full multiplication table of the basis units.
pub fn multiplication_table() -> [[(i8, usize); 8]; 8] {
    std::array::from_fn(|i| std::array::from_fn(|j| unit_product(i, j)))
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (x, name) in self.0.iter().zip(BASIS_NAMES) {
            if x.is_zero() {
                continue;
            }
            let sep = if first { "" } else { " + " };
            if name == "1" {
                write!(f, "{sep}{x}")?;
            } else {
                write!(f, "{sep}({x}){name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn oct() -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8((-4i64..=4, 1i64..=3)).prop_map(|c| Octonion(c.map(|(n, d)| Scalar::new(n, d))))
    }

    #[test]
    fn unit_and_l_squared() {
        let x = Octonion::from_i64([1, 2, -3, 4, 0, 5, -1, 2]);
        assert_eq!(Octonion::one().mul(&x), x);
        assert_eq!(x.mul(&Octonion::one()), x);
        let l = Octonion::basis(4);
        assert_eq!(l.mul(&l), Octonion::real(Scalar::from_int(-1)));
    }

    #[test]
    fn quaternion_factor_is_standard() {
        let (i, j, k) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(3));
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(j.mul(&i), -&k);
    }

    #[test]
    fn table_is_signed_permutation() {
        let t = multiplication_table();
        for (i, row) in t.iter().enumerate() {
            let mut seen = [false; 8];
            for &(s, k) in row {
                assert!(s == 1 || s == -1);
                seen[k] = true;
            }
            assert!(seen.iter().all(|b| *b), "row {i}");
            if i > 0 {
                assert_eq!(row[i], (-1, 0));
            }
        }
    }

    #[test]
    fn not_associative() {
        let (i, j, l) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
        assert!(!Octonion::associator(&i, &j, &l).is_zero());
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(x in oct(), y in oct()) {
            prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn conjugation_reverses(x in oct(), y in oct()) {
            prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
        }

        #[test]
        fn alternative(x in oct(), y in oct()) {
            prop_assert_eq!(x.mul(&x).mul(&y), x.mul(&x.mul(&y)));
            prop_assert_eq!(x.mul(&y).mul(&y), x.mul(&y.mul(&y)));
        }

        #[test]
        fn inverse_is_two_sided(x in oct()) {
            prop_assume!(!x.is_zero());
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x.mul(&inv), Octonion::one());
            prop_assert_eq!(inv.mul(&x), Octonion::one());
        }
    }
}
