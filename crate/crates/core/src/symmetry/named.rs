//! Concrete subalgebras of `f4` and the geometric subalgebra constructions
//! (stabilizers, pointwise fixers, preservers).

use super::derivation::{der_jordan, der_octonion, is_derivation, lift_octonion_derivation};
use super::subalgebra::Subalgebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};
use crate::jordan::{CayleyPoint, JordanElement, OctMatrix, DIM};
use crate::octonion::Octonion;
use crate::samplers::{Sampler, SubmanifoldSample};

/// Consecutive unchanged additions required before a preserver is accepted.
pub const PRESERVER_STABLE_ROUNDS: usize = 3;
const PRESERVER_MAX_POINTS: usize = 64;

pub fn f4() -> Result<Subalgebra> {
    der_jordan()
}

pub fn g2() -> Result<Subalgebra> {
    der_octonion()
}

/// `D_X(x) = X x - x X` for a real skew 3x3 matrix `X`.
pub fn so3_element(x: &Matrix) -> Matrix {
    let mut op = Matrix::zeros(DIM, DIM);
    for b in 0..DIM {
        let m = JordanElement::basis(b).to_matrix();
        let prod = |l: &dyn Fn(usize, usize) -> Octonion| -> OctMatrix { std::array::from_fn(|i| std::array::from_fn(|k| l(i, k))) };
        let xm = prod(&|i, k| {
            let mut acc = Octonion::zero();
            for j in 0..3 {
                acc = &acc + &m[j][k].scale(&x[(i, j)]);
            }
            acc
        });
        let mx = prod(&|i, k| {
            let mut acc = Octonion::zero();
            for j in 0..3 {
                acc = &acc + &m[i][j].scale(&x[(j, k)]);
            }
            acc
        });
        let diff: OctMatrix = std::array::from_fn(|i| std::array::from_fn(|k| &xm[i][k] - &mx[i][k]));
        let y = JordanElement::from_matrix(&diff).expect("commutator with a real skew matrix is Hermitian");
        for (r, v) in y.into_coords().into_iter().enumerate() {
            op[(r, b)] = v;
        }
    }
    op
}

/// `so(3)` acting by conjugation with real rotations.
pub fn so3() -> Subalgebra {
    let ops: Vec<Matrix> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| {
            let mut x = Matrix::zeros(3, 3);
            x[(i, j)] = Scalar::one();
            x[(j, i)] = -Scalar::one();
            so3_element(&x)
        })
        .collect();
    Subalgebra::new("so3", DIM, &ops)
}

/// `so3 + g2`.
pub fn so3_g2() -> Result<Subalgebra> {
    Ok(so3().sum("so3+g2", &g2()?))
}

/// `d_v(x + y l) = (v y) l` for imaginary quaternions `v`: the `sp(1)` factor of
/// `so(4) ⊂ g2` acting trivially on the quaternions.
pub fn sp1_right() -> Subalgebra {
    let ops: Vec<Matrix> = (1..4)
        .map(|v| {
            let unit = Octonion::basis(v);
            let mut d = Matrix::zeros(8, 8);
            for c in 4..8 {
                let y = Octonion::basis(c - 4);
                let img = unit.mul(&y);
                for (r, val) in img.coords().iter().take(4).enumerate() {
                    d[(4 + r, c)] = val.clone();
                }
            }
            lift_octonion_derivation(&d)
        })
        .collect();
    debug_assert!(ops.iter().all(is_derivation));
    Subalgebra::new("sp1", DIM, &ops)
}

/// `{ D in g : D x = 0 }`.
pub fn stabilizer_point(g: &Subalgebra, x: &CayleyPoint) -> Subalgebra {
    g.stabilizer_vector(format!("{}_x", g.label()), x.coords())
}

/// `{ D in g : D|_L = 0 }`.
pub fn annihilator(g: &Subalgebra, l: &Subspace) -> Subalgebra {
    g.annihilator(format!("z_{}", g.label()), l)
}

/// Stabilizer of the basepoint in `f4`.
pub fn spin9() -> Result<Subalgebra> {
    Ok(stabilizer_point(&f4()?, &CayleyPoint::basepoint()).with_label("spin9"))
}

/// Common stabilizer of the three diagonal idempotents.
pub fn spin8() -> Result<Subalgebra> {
    let diag = Subspace::coordinate(DIM, [0, 1, 2]);
    Ok(f4()?.annihilator("spin8", &diag))
}

/// Pointwise fixer of the complex Hermitian matrices.
pub fn su3() -> Result<Subalgebra> {
    Ok(f4()?.annihilator("su3", &crate::jordan::hermitian_over(2)))
}

/// Result of a preserver computation.
#[derive(Debug, Clone)]
pub struct Preserver {
    pub algebra: Subalgebra,
    /// Dimension after each processed point.
    pub history: Vec<usize>,
}

/// `{ D in g : D x ∈ T_x P for every sample point }`, adding points until the
/// dimension is unchanged for [`PRESERVER_STABLE_ROUNDS`] consecutive points.
pub fn preserver(g: &Subalgebra, sample: &mut SubmanifoldSample, sampler: &mut Sampler) -> Result<Preserver> {
    let label = format!("n_{}({})", g.label(), sample.kind.name());
    let mut h = g.clone().with_label(label);
    let mut history = Vec::new();
    let mut stable = 0;
    let mut i = 0;
    loop {
        if i == sample.points.len() {
            if stable >= PRESERVER_STABLE_ROUNDS {
                return Ok(Preserver { algebra: h, history });
            }
            if i >= PRESERVER_MAX_POINTS {
                return Err(Error::Unstable(format!("preserver of {} did not stabilize", sample.kind.name())));
            }
            sample.extend(sampler)?;
        }
        let before = h.dim();
        h = h.tangent_condition(h.label().to_string(), sample.points[i].coords(), &sample.tangents[i]);
        history.push(h.dim());
        if h.dim() == before && i > 0 {
            stable += 1;
        } else {
            stable = 0;
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samplers::Kind;

    #[test]
    fn stabilizers_of_chart_points() {
        let (f, s) = (f4().unwrap(), spin9().unwrap());
        let q = Sampler::new(11, 13).chart_point();
        assert_eq!(stabilizer_point(&f, &q).dim(), 36);
        assert!(matches!(stabilizer_point(&s, &q).dim(), 21 | 28 | 36));
        let q = CayleyPoint::chart(&Octonion::basis(0), &Octonion::basis(1)).unwrap();
        let iso = stabilizer_point(&s, &q);
        assert_eq!(iso.dim(), 21);
        assert!(iso.is_bracket_closed());
    }

    #[test]
    fn so3_is_a_derivation_algebra() {
        let s = so3();
        assert_eq!(s.dim(), 3);
        assert!(s.basis().iter().all(is_derivation));
        assert!(s.is_bracket_closed());
    }

    #[test]
    fn sp1_right_structure() {
        let s = sp1_right();
        assert_eq!(s.dim(), 3);
        assert!(s.basis().iter().all(is_derivation));
        assert!(s.is_bracket_closed());
        assert_eq!(s.derived().dim(), 3);
        assert!(g2().unwrap().contains_algebra(&s));
        assert_eq!(s.annihilator("z", &crate::jordan::hermitian_over(4)).dim(), 3);
    }

    #[test]
    fn preserver_of_real_plane_in_so3_g2() {
        let g = so3_g2().unwrap();
        let mut sampler = Sampler::new(1, 13);
        let mut sample = SubmanifoldSample::draw(Kind::RP2, &mut sampler, 2).unwrap();
        let n = preserver(&g, &mut sample, &mut sampler).unwrap();
        assert_eq!(n.algebra.dim(), 17);
    }
}
