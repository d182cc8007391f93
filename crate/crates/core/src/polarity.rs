//! Polarity of linear actions, sections and asystaticity on the Cayley plane,
//! and singular orbit dimensions of cohomogeneity-two representations.
//!
//! A representation is polar iff, at one regular vector `v`, the normal space
//! `ν_v` satisfies `<X w, u> = 0` for every operator `X` and all `w, u ∈ ν_v`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{combination, dot, gram_orthogonal, unit_vector, vec_add, vec_sub, Matrix, Scalar, Subspace, Vector};
use crate::jordan::{self, CayleyPoint};
use crate::orbits::{self, LinearGroupAction};
use crate::samplers::{Sampler, SubmanifoldSample};
use crate::symmetry::{AutElement, Subalgebra};

/// Sample budget for the regular-vector search.
pub const REGULAR_BUDGET: usize = 50;
/// Consecutive samples at the running maximum that certify regularity.
pub const REGULAR_TIES: usize = 5;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegularVector {
    pub vector: Vector,
    pub orbit_dim: usize,
    pub samples: usize,
}

/// Samples random vectors until the running maximum orbit dimension is hit
/// [`REGULAR_TIES`] times in a row.
pub fn find_regular(act: &LinearGroupAction, sampler: &mut Sampler) -> Result<RegularVector> {
    let n = act.ambient_dim();
    let mut best: Option<(Vector, usize)> = None;
    let mut streak = 0;
    for i in 0..REGULAR_BUDGET {
        let v = sampler.vector(n);
        let d = act.orbit_dim(&v);
        match &best {
            Some((_, m)) if d < *m => streak = 0,
            Some((_, m)) if d == *m => streak += 1,
            _ => {
                best = Some((v, d));
                streak = 1;
            }
        }
        if streak >= REGULAR_TIES {
            let (vector, orbit_dim) = best.expect("set above");
            return Ok(RegularVector { vector, orbit_dim, samples: i + 1 });
        }
    }
    Err(Error::Unstable(format!("{}: no stable regular orbit dimension in {REGULAR_BUDGET} samples", act.label)))
}

/// `ambient - principal orbit dimension`.
pub fn rep_cohomogeneity(act: &LinearGroupAction, sampler: &mut Sampler) -> Result<usize> {
    Ok(act.ambient_dim() - find_regular(act, sampler)?.orbit_dim)
}

/// An operator `X` and normal vectors `w, u` with `<X w, u> != 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub operator: Matrix,
    pub w: Vector,
    pub u: Vector,
    pub value: Scalar,
}

impl Violation {
    /// Recomputes the pairing from scratch.
    pub fn recheck(&self, gram: &Matrix) -> bool {
        let v = gram.bilinear(&self.u, &self.operator.mul_vec(&self.w));
        v == self.value && !v.is_zero()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolarityVerdict {
    pub polar: bool,
    pub regular: RegularVector,
    pub cohomogeneity: usize,
    /// Basis of `ν_v`; a section when `polar`.
    pub normal_space: Vec<Vector>,
    pub violation: Option<Violation>,
}

pub fn rep_polar_test(act: &LinearGroupAction, sampler: &mut Sampler) -> Result<PolarityVerdict> {
    let regular = find_regular(act, sampler)?;
    Ok(polar_test_at(act, regular))
}

/// The orthogonality criterion at a given regular vector.
pub fn polar_test_at(act: &LinearGroupAction, regular: RegularVector) -> PolarityVerdict {
    let nu = act.normal_space(&regular.vector);
    let mut violation = None;
    'outer: for x in act.algebra.basis() {
        for w in nu.basis() {
            let xw = act.gram.mul_vec(&x.mul_vec(w));
            for u in nu.basis() {
                let value = dot(u, &xw);
                if !value.is_zero() {
                    violation = Some(Violation { operator: x.clone(), w: w.clone(), u: u.clone(), value });
                    break 'outer;
                }
            }
        }
    }
    PolarityVerdict {
        polar: violation.is_none(),
        cohomogeneity: act.ambient_dim() - regular.orbit_dim,
        regular,
        normal_space: nu.basis().to_vec(),
        violation,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SectionFailure {
    pub point: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SectionCheck {
    pub pass: bool,
    pub failures: Vec<SectionFailure>,
}

/// At every sample point: `dim T_x Σ = cohomogeneity` and `T_x Σ ⟂ g·x`.
pub fn section_check(g: &Subalgebra, sigma: &SubmanifoldSample, cohomogeneity: usize) -> SectionCheck {
    let gram = jordan::gram();
    let mut failures = Vec::new();
    for (i, (x, t)) in sigma.points.iter().zip(&sigma.tangents).enumerate() {
        if t.dim() != cohomogeneity {
            failures.push(SectionFailure { point: i, reason: format!("tangent dimension {} != cohomogeneity {cohomogeneity}", t.dim()) });
            continue;
        }
        let orbit = orbits::orbit_tangent(g, x);
        if !gram_orthogonal(t, &orbit, &gram) {
            failures.push(SectionFailure { point: i, reason: "tangent space is not orthogonal to the orbit".into() });
        }
    }
    SectionCheck { pass: failures.is_empty(), failures }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AsystaticReport {
    pub fixed_dim: usize,
    pub cohomogeneity: usize,
    pub pass: bool,
}

/// Fixed dimension of the supplied isotropy operators at `q` against the
/// cohomogeneity.
pub fn asystatic_check(derivations: &[Matrix], auts: &[AutElement], q: &CayleyPoint, cohomogeneity: usize) -> Result<AsystaticReport> {
    let fixed_dim = orbits::fixed_set(derivations, auts, q)?;
    Ok(AsystaticReport { fixed_dim, cohomogeneity, pass: fixed_dim == cohomogeneity })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SliceArcs {
    pub principal_orbit_dim: usize,
    /// Sub-maximal orbit dimensions along rational rays of a coordinate-aligned
    /// section plane; `None` when no sparse regular vector exists.
    pub ray_dims: Option<Vec<usize>>,
    /// Sub-maximal orbit dimensions found by coordinate and kernel probes.
    pub probe_dims: Vec<usize>,
    pub agree: bool,
    pub dims: (usize, usize),
}

/// Bound on the numerators of scanned ray directions.
pub const RAY_HEIGHT: i64 = 6;

fn submaximal(act: &LinearGroupAction, principal: usize, vs: impl Iterator<Item = Vector>) -> BTreeSet<usize> {
    vs.filter(|v| v.iter().any(|x| !x.is_zero()))
        .map(|v| act.orbit_dim(&v))
        .filter(|d| *d < principal)
        .collect()
}

/// First regular vector of the form `e_a + 2 e_b`.
fn sparse_regular(act: &LinearGroupAction, principal: usize) -> Option<Vector> {
    let n = act.ambient_dim();
    let two = Scalar::from_int(2);
    (0..n)
        .flat_map(|a| (0..n).filter(move |b| *b != a).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut v = unit_vector(n, a);
            v[b] = two.clone();
            v
        })
        .find(|v| act.orbit_dim(v) == principal)
}

/// Directions `p b1 + q b2` with coprime `|p|, |q| <= RAY_HEIGHT`.
fn rays(plane: &Subspace) -> Vec<Vector> {
    let (b1, b2) = (&plane.basis()[0], &plane.basis()[1]);
    let mut out = Vec::new();
    for p in -RAY_HEIGHT..=RAY_HEIGHT {
        for q in 0..=RAY_HEIGHT {
            if num_integer::gcd(p, q) != 1 || (q == 0 && p < 0) {
                continue;
            }
            let (ps, qs) = (Scalar::from_int(p), Scalar::from_int(q));
            out.push(b1.iter().zip(b2).map(|(x, y)| &ps * x + &qs * y).collect());
        }
    }
    out
}

/// The two singular orbit dimensions of a cohomogeneity-two representation.
///
/// Runs a ray scan in the normal plane of a sparse regular vector and an
/// independent probe over coordinate vectors and operator kernels.
pub fn slice_arc_dims(act: &LinearGroupAction, sampler: &mut Sampler) -> Result<SliceArcs> {
    let regular = find_regular(act, sampler)?;
    let n = act.ambient_dim();
    if n - regular.orbit_dim != 2 {
        return Err(Error::InvalidArgument(format!("{}: cohomogeneity is {}, not 2", act.label, n - regular.orbit_dim)));
    }
    let principal = regular.orbit_dim;

    let ray = sparse_regular(act, principal).map(|v| submaximal(act, principal, rays(&act.normal_space(&v)).into_iter()));

    let mut probes: Vec<Vector> = (0..n).map(|a| unit_vector(n, a)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let (ea, eb) = (unit_vector(n, a), unit_vector(n, b));
            probes.push(vec_add(&ea, &eb));
            probes.push(vec_sub(&ea, &eb));
        }
    }
    for x in act.algebra.basis() {
        let k = x.kernel();
        if k.is_zero() {
            continue;
        }
        for _ in 0..3 {
            let c = sampler.vector(k.dim());
            probes.push(combination(&c, k.basis(), n));
        }
    }
    let probe = submaximal(act, principal, probes.into_iter());

    let all: BTreeSet<usize> = ray.iter().flatten().chain(&probe).copied().collect();
    if all.len() != 2 {
        return Err(Error::Unstable(format!("{}: found sub-maximal orbit dimensions {all:?}, expected exactly two", act.label)));
    }
    let mut it = all.iter();
    let dims = (*it.next().expect("two"), *it.next().expect("two"));
    Ok(SliceArcs {
        principal_orbit_dim: principal,
        agree: ray.as_ref().is_none_or(|r| *r == probe),
        ray_dims: ray.map(|r| r.into_iter().collect()),
        probe_dims: probe.into_iter().collect(),
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = Scalar::one();
        m[(j, i)] = -Scalar::one();
        m
    }

    /// `so(p) + so(q)` on `R^p ⊗ R^q`, polar of cohomogeneity `min(p, q)`.
    fn tensor_rep(p: usize, q: usize) -> LinearGroupAction {
        let mut ops = Vec::new();
        for i in 0..p {
            for j in i + 1..p {
                ops.push(rot(p, i, j).kron(&Matrix::identity(q)));
            }
        }
        for i in 0..q {
            for j in i + 1..q {
                ops.push(Matrix::identity(p).kron(&rot(q, i, j)));
            }
        }
        LinearGroupAction::euclidean(format!("so{p}+so{q}"), p * q, &ops).unwrap()
    }

    #[test]
    fn trivial_algebra() {
        let act = LinearGroupAction::euclidean("0", 5, &[]).unwrap();
        let mut s = Sampler::new(1, 13);
        assert_eq!(rep_cohomogeneity(&act, &mut s).unwrap(), 5);
        assert!(rep_polar_test(&act, &mut s).unwrap().polar);
    }

    #[test]
    fn tensor_products_are_polar() {
        let mut s = Sampler::new(1, 13);
        let v = rep_polar_test(&tensor_rep(3, 4), &mut s).unwrap();
        assert!(v.polar);
        assert_eq!(v.cohomogeneity, 3);
        assert_eq!(v.normal_space.len(), 3);
    }

    #[test]
    fn so2_on_two_planes_is_not_polar() {
        // the diagonal circle on C^2 has cohomogeneity 3 and is not polar
        let j = rot(2, 0, 1);
        let act = LinearGroupAction::euclidean("u1", 4, &[j.direct_sum(&j)]).unwrap();
        let v = rep_polar_test(&act, &mut Sampler::new(2, 13)).unwrap();
        assert!(!v.polar);
        assert!(v.violation.unwrap().recheck(&act.gram));
    }

    #[test]
    fn arcs_of_so4_so2() {
        // 4x2 matrices: rank-one orbits have dim 4, isometric embeddings dim 5
        let act = tensor_rep(4, 2);
        let arcs = slice_arc_dims(&act, &mut Sampler::new(1, 13)).unwrap();
        assert!(arcs.agree, "{arcs:?}");
        assert!(arcs.ray_dims.is_some());
        assert_eq!(arcs.principal_orbit_dim, 6);
        assert_eq!(arcs.dims, (4, 5));
    }
}
