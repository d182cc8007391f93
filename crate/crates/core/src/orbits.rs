//! Orbit tangents, cohomogeneity, slice representations, fixed sets and
//! geodesic scans on the Cayley plane.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{gram_complement, Matrix, Scalar, Subspace, Vector};
use crate::jordan::{self, CayleyPoint, PLANE_DIM};
use crate::octonion::Octonion;
use crate::samplers::{sphere_block_point, Sampler};
use crate::symmetry::{AutElement, Subalgebra};

/// Samples that must attain the maximal orbit dimension before a
/// cohomogeneity estimate is considered generic.
pub const MIN_TIES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Constraint {
    None,
    UnitSphere,
    CayleyVariety,
}

/// A Lie algebra of Gram-skew operators on `Q^n`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinearGroupAction {
    pub label: String,
    pub gram: Matrix,
    pub algebra: Subalgebra,
    pub constraint: Constraint,
}

impl LinearGroupAction {
    pub fn new(label: impl Into<String>, gram: Matrix, ops: &[Matrix]) -> Result<Self> {
        let label = label.into();
        let algebra = Subalgebra::new(label.clone(), gram.rows(), ops);
        let act = LinearGroupAction { label, gram, algebra, constraint: Constraint::None };
        if !act.gram.is_positive_definite() {
            return Err(Error::InvalidArgument(format!("{}: Gram matrix is not positive definite", act.label)));
        }
        if !act.algebra.is_skew(&act.gram) {
            return Err(Error::InvalidArgument(format!("{}: operators are not skew", act.label)));
        }
        Ok(act)
    }

    /// Like [`LinearGroupAction::new`] with the standard inner product.
    pub fn euclidean(label: impl Into<String>, n: usize, ops: &[Matrix]) -> Result<Self> {
        Self::new(label, Matrix::identity(n), ops)
    }

    pub fn ambient_dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn orbit_dim(&self, v: &[Scalar]) -> usize {
        self.algebra.orbit_dim(v)
    }

    pub fn orbit_tangent(&self, v: &[Scalar]) -> Subspace {
        self.algebra.orbit_tangent(v)
    }

    /// Gram complement of the orbit tangent at `v` in the ambient space.
    pub fn normal_space(&self, v: &[Scalar]) -> Subspace {
        gram_complement(&self.orbit_tangent(v), &Subspace::full(self.ambient_dim()), &self.gram).expect("orbit tangent lies in the ambient space")
    }

    pub fn isotropy(&self, v: &[Scalar]) -> Subalgebra {
        self.algebra.stabilizer_vector(format!("{}_v", self.label), v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub point: Vector,
    pub param: Option<Scalar>,
    pub orbit_dim: usize,
    pub isotropy_dim: usize,
    pub slice_dim: usize,
}

/// `span { D x : D in g }`.
pub fn orbit_tangent(g: &Subalgebra, x: &CayleyPoint) -> Subspace {
    g.orbit_tangent(x.coords())
}

pub fn orbit_report(g: &Subalgebra, x: &CayleyPoint, param: Option<Scalar>) -> OrbitReport {
    let d = g.orbit_dim(x.coords());
    OrbitReport { point: x.coords().to_vec(), param, orbit_dim: d, isotropy_dim: g.dim() - d, slice_dim: PLANE_DIM - d }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Cohomogeneity {
    pub cohomogeneity: usize,
    pub max_orbit_dim: usize,
    /// Samples attaining the maximum.
    pub ties: usize,
    pub samples: usize,
    pub witness: Vector,
    /// Set when fewer than [`MIN_TIES`] samples attained the maximum.
    pub genericity_warning: bool,
}

fn cohom_from_samples(ambient: usize, samples: impl Iterator<Item = (Vector, usize)>) -> Cohomogeneity {
    let mut best: Option<(Vector, usize)> = None;
    let mut ties = 0;
    let mut count = 0;
    for (v, d) in samples {
        count += 1;
        match &best {
            Some((_, m)) if d < *m => {}
            Some((_, m)) if d == *m => ties += 1,
            _ => {
                best = Some((v, d));
                ties = 1;
            }
        }
    }
    let (witness, max_orbit_dim) = best.unwrap_or((Vec::new(), 0));
    Cohomogeneity { cohomogeneity: ambient - max_orbit_dim, max_orbit_dim, ties, samples: count, witness, genericity_warning: ties < MIN_TIES }
}

/// `16 - max orbit dimension` over random chart points.
pub fn cohomogeneity(g: &Subalgebra, n_samples: usize, sampler: &mut Sampler) -> Result<Cohomogeneity> {
    if n_samples < 20 {
        return Err(Error::InvalidArgument("at least 20 samples are required".into()));
    }
    let pts: Vec<CayleyPoint> = (0..n_samples).map(|_| sampler.chart_point()).collect();
    Ok(cohom_from_samples(PLANE_DIM, pts.into_iter().map(|x| {
        let d = g.orbit_dim(x.coords());
        (x.coords().to_vec(), d)
    })))
}

/// `ambient - max orbit dimension` over random vectors.
pub fn rep_cohomogeneity_samples(act: &LinearGroupAction, n_samples: usize, sampler: &mut Sampler) -> Cohomogeneity {
    let n = act.ambient_dim();
    let vs: Vec<Vector> = (0..n_samples).map(|_| sampler.vector(n)).collect();
    cohom_from_samples(
        n,
        vs.into_iter().map(|v| {
            let d = act.orbit_dim(&v);
            (v, d)
        }),
    )
}

/// Restriction of `ops` to an invariant subspace, in the echelon basis of
/// that subspace.
pub fn restrict(ops: &[Matrix], sub: &Subspace) -> Result<Vec<Matrix>> {
    let k = sub.dim();
    ops.iter()
        .map(|op| {
            let cols = sub
                .basis()
                .iter()
                .map(|v| sub.coordinates(&op.mul_vec(v)).ok_or_else(|| Error::NotContained("subspace is not invariant".into())))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(&cols, k))
        })
        .collect()
}

/// Gram matrix of `gram` restricted to the echelon basis of `sub`.
pub fn restrict_gram(gram: &Matrix, sub: &Subspace) -> Matrix {
    let b = sub.basis();
    let mut m = Matrix::zeros(b.len(), b.len());
    for i in 0..b.len() {
        let gi = gram.vec_mul(&b[i]);
        for j in 0..b.len() {
            m[(i, j)] = crate::exact::dot(&gi, &b[j]);
        }
    }
    m
}

/// Isotropy algebra at `x` acting on the normal space of the orbit through `x`.
pub fn slice_rep(g: &Subalgebra, x: &CayleyPoint) -> Result<LinearGroupAction> {
    let gram = jordan::gram();
    let tangent = x.tangent_space()?;
    let normal = gram_complement(&orbit_tangent(g, x), &tangent, &gram)?;
    let iso = g.stabilizer_vector(format!("{}_x", g.label()), x.coords());
    let ops = restrict(iso.basis(), &normal)?;
    let act = LinearGroupAction::new(format!("slice of {}", g.label()), restrict_gram(&gram, &normal), &ops)?;
    if !act.algebra.is_bracket_closed() {
        return Err(Error::InvalidArgument("restricted isotropy is not bracket closed".into()));
    }
    Ok(act)
}

/// Kernel of `op` inside `within`.
pub fn kernel_within(op: &Matrix, within: &Subspace) -> Subspace {
    if within.is_zero() {
        return within.clone();
    }
    let cols: Vec<Vector> = within.basis().iter().map(|v| op.mul_vec(v)).collect();
    let coeffs = Matrix::from_columns(&cols, op.rows()).kernel();
    let vs: Vec<Vector> = coeffs.basis().iter().map(|c| crate::exact::combination(c, within.basis(), within.ambient())).collect();
    Subspace::from_vectors(within.ambient(), &vs)
}

/// `T_x V ∩ ⋂ ker D ∩ ⋂ ker(A - 1)`.
pub fn fixed_subspace(derivations: &[Matrix], auts: &[AutElement], x: &CayleyPoint) -> Result<Subspace> {
    for d in derivations {
        if !crate::exact::is_zero_vector(&d.mul_vec(x.coords())) {
            return Err(Error::InvalidArgument("a derivation does not fix the point".into()));
        }
    }
    for a in auts {
        if a.apply(x.value()) != *x.value() {
            return Err(Error::InvalidArgument(format!("{} does not fix the point", a.label())));
        }
    }
    let mut t = x.tangent_space()?;
    for d in derivations {
        t = kernel_within(d, &t);
    }
    let id = Matrix::identity(jordan::DIM);
    for a in auts {
        t = kernel_within(&(a.matrix() - &id), &t);
    }
    Ok(t)
}

/// Dimension of the fixed submanifold through `x`.
pub fn fixed_set(derivations: &[Matrix], auts: &[AutElement], x: &CayleyPoint) -> Result<usize> {
    Ok(fixed_subspace(derivations, auts, x)?.dim())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeodesicScan {
    pub profile: Vec<OrbitReport>,
    pub regular_orbit_dim: usize,
    /// Distinct orbit dimensions below the regular one, increasing.
    pub dip_dims: Vec<usize>,
    /// `codim - 1` per dip, present only for cohomogeneity-one profiles.
    pub multiplicities: Option<Vec<usize>>,
}

/// Rational parameters `t` of the circle `c = (1-t^2)/(1+t^2)`, `s = 2t/(1+t^2)`;
/// `None` stands for `t = ∞`.
pub fn circle_parameters() -> Vec<Option<Scalar>> {
    let mut ts = vec![Some(Scalar::zero()), None];
    for (n, d) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2), (1, 5), (4, 3)] {
        ts.push(Some(Scalar::new(n, d)));
        ts.push(Some(Scalar::new(-n, d)));
    }
    ts
}

fn circle_point(t: &Option<Scalar>) -> (Scalar, Scalar) {
    match t {
        None => (-Scalar::one(), Scalar::zero()),
        Some(t) => {
            let t2 = t.square();
            let inv = (Scalar::one() + &t2).recip();
            ((Scalar::one() - &t2) * &inv, Scalar::from_int(2) * t * &inv)
        }
    }
}

/// Orbit dimensions along `[[(1+c)/2, (s/2) u, 0], [(s/2) conj(u), (1-c)/2, 0], [0, 0, 0]]`.
pub fn geodesic_orbit_scan(g: &Subalgebra, u: &Octonion) -> Result<GeodesicScan> {
    if !u.norm().is_one() {
        return Err(Error::InvalidArgument("direction must be a unit octonion".into()));
    }
    let mut profile = Vec::new();
    for t in circle_parameters() {
        let (c, s) = circle_point(&t);
        let mut coords = vec![c];
        coords.extend(u.scale(&s).0);
        let x = sphere_block_point(&coords)?;
        profile.push(orbit_report(g, &x, t));
    }
    let regular = profile.iter().map(|r| r.orbit_dim).max().unwrap_or(0);
    let mut dips: Vec<usize> = profile.iter().map(|r| r.orbit_dim).filter(|d| *d < regular).collect();
    dips.sort_unstable();
    dips.dedup();
    let multiplicities = (regular + 1 == PLANE_DIM).then(|| dips.iter().map(|d| PLANE_DIM - d - 1).collect());
    Ok(GeodesicScan { profile, regular_orbit_dim: regular, dip_dims: dips, multiplicities })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::named;

    #[test]
    fn basepoint_is_fixed_by_its_stabilizer() {
        let s = named::spin9().unwrap();
        assert!(orbit_tangent(&s, &CayleyPoint::basepoint()).is_zero());
    }

    #[test]
    fn orbit_plus_isotropy_is_total() {
        let g = named::so3_g2().unwrap();
        let mut s = Sampler::new(3, 13);
        for _ in 0..5 {
            let x = s.chart_point();
            let r = orbit_report(&g, &x, None);
            assert_eq!(r.orbit_dim + named::stabilizer_point(&g, &x).dim(), g.dim());
            assert!(x.tangent_space().unwrap().contains_subspace(&orbit_tangent(&g, &x)));
        }
    }

    #[test]
    fn f4_is_transitive() {
        let f = named::f4().unwrap();
        let c = cohomogeneity(&f, 20, &mut Sampler::new(1, 13)).unwrap();
        assert_eq!(c.cohomogeneity, 0);
        let scan = geodesic_orbit_scan(&f, &Octonion::one()).unwrap();
        assert!(scan.dip_dims.is_empty());
    }

    #[test]
    fn fixed_sets_of_g2_and_sp1() {
        let p = CayleyPoint::basepoint();
        let g2 = named::g2().unwrap();
        assert_eq!(fixed_set(g2.basis(), &[], &p).unwrap(), 2);
        assert_eq!(fixed_set(named::sp1_right().basis(), &[], &p).unwrap(), 8);
    }

    #[test]
    fn slices_at_the_basepoint() {
        let p = CayleyPoint::basepoint();
        assert_eq!(slice_rep(&named::f4().unwrap(), &p).unwrap().ambient_dim(), 0);
        let s = slice_rep(&named::spin9().unwrap(), &p).unwrap();
        assert_eq!(s.ambient_dim(), 16);
        assert_eq!(s.dim(), 36);
    }

    #[test]
    fn restrict_rejects_non_invariant() {
        let mut op = Matrix::zeros(2, 2);
        op[(1, 0)] = Scalar::one();
        assert!(restrict(&[op], &Subspace::coordinate(2, [0])).is_err());
    }
}
