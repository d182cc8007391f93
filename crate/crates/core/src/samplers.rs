//! Seeded rational sampling of points on the Cayley plane and on its
//! totally geodesic submanifolds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Scalar, Subspace, Vector};
use crate::jordan::{self, CayleyPoint, DIM};
use crate::octonion::Octonion;

pub const DEFAULT_HEIGHT: i64 = 13;

/// Random rationals `n/d` with `|n| <= height`, `1 <= d <= height`.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    height: i64,
}

impl Sampler {
    pub fn new(seed: u64, height: i64) -> Self {
        assert!(height >= 1, "height must be positive");
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), height }
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn rational(&mut self) -> Scalar {
        let n = self.rng.gen_range(-self.height..=self.height);
        let d = self.rng.gen_range(1..=self.height);
        Scalar::new(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let x = self.rational();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn vector(&mut self, n: usize) -> Vector {
        (0..n).map(|_| self.rational()).collect()
    }

    /// Octonion supported on the first `k` coordinates.
    pub fn octonion(&mut self, k: usize) -> Octonion {
        Octonion(std::array::from_fn(|c| if c < k { self.rational() } else { Scalar::zero() }))
    }

    /// Rational point on the unit sphere `S^{k}` in `Q^{k+1}`, by inverse
    /// stereographic projection from the pole `(1, 0, ..., 0)`.
    pub fn sphere_point(&mut self, k: usize) -> Vector {
        let u = self.vector(k);
        let n2: Scalar = u.iter().map(Scalar::square).sum();
        let inv = (&n2 + Scalar::one()).recip();
        let mut out = Vec::with_capacity(k + 1);
        out.push((&n2 - Scalar::one()) * &inv);
        out.extend(u.iter().map(|x| Scalar::from_int(2) * x * &inv));
        out
    }

    /// Random point in the affine chart `(a, b, 1)`.
    pub fn chart_point(&mut self) -> CayleyPoint {
        let a = self.octonion(8);
        let b = self.octonion(8);
        CayleyPoint::chart(&a, &b).expect("chart points are idempotent")
    }
}

/// Totally geodesic submanifolds through `E11` used as test families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Point,
    RP2,
    CP2,
    HP2,
    /// The projective line in the upper-left 2x2 block.
    CaP1,
    /// Sphere `S^k` inside `CaP1` with off-diagonal entry in `span{e_0..e_{k-1}}`.
    Sphere(usize),
    /// The fixed set `(a, -ab i, -ac j, ...)` of the principal isotropy of `SO3 x G2`.
    VH,
}

impl Kind {
    /// Manifold dimension.
    pub fn dim(self) -> usize {
        match self {
            Kind::Point => 0,
            Kind::RP2 | Kind::VH => 2,
            Kind::CP2 => 4,
            Kind::HP2 => 8,
            Kind::CaP1 => 8,
            Kind::Sphere(k) => k,
        }
    }

    /// Dimension of the linear span.
    pub fn span_dim(self) -> usize {
        match self {
            Kind::Point => 1,
            Kind::RP2 | Kind::VH => 6,
            Kind::CP2 => 9,
            Kind::HP2 => 15,
            Kind::CaP1 => 10,
            Kind::Sphere(k) => k + 2,
        }
    }

    pub fn name(self) -> String {
        match self {
            Kind::Point => "pt".into(),
            Kind::RP2 => "RP2".into(),
            Kind::CP2 => "CP2".into(),
            Kind::HP2 => "HP2".into(),
            Kind::CaP1 => "CaP1".into(),
            Kind::Sphere(k) => format!("S{k}"),
            Kind::VH => "VH".into(),
        }
    }

    /// The ambient linear space containing the submanifold.
    pub fn ambient_span(self) -> Subspace {
        let off = |s: usize, cs: &[usize]| cs.iter().map(move |c| jordan::off_index(s, *c)).collect::<Vec<_>>();
        match self {
            Kind::Point => Subspace::coordinate(DIM, [0]),
            Kind::RP2 => jordan::hermitian_over(1),
            Kind::CP2 => jordan::hermitian_over(2),
            Kind::HP2 => jordan::hermitian_over(4),
            Kind::CaP1 => Subspace::coordinate(DIM, [vec![0, 1], off(2, &[0, 1, 2, 3, 4, 5, 6, 7])].concat()),
            Kind::Sphere(k) => Subspace::coordinate(DIM, [vec![0, 1], off(2, &(0..k).collect::<Vec<_>>())].concat()),
            Kind::VH => Subspace::coordinate(DIM, [vec![0, 1, 2], off(2, &[1]), off(1, &[2]), off(0, &[3])].concat()),
        }
    }

    fn sample(self, s: &mut Sampler) -> Result<CayleyPoint> {
        match self {
            Kind::Point => Ok(CayleyPoint::basepoint()),
            Kind::RP2 | Kind::CP2 | Kind::HP2 => {
                let k = match self {
                    Kind::RP2 => 1,
                    Kind::CP2 => 2,
                    _ => 4,
                };
                let v = [s.octonion(k), s.octonion(k), s.octonion(k)];
                if v.iter().all(Octonion::is_zero) {
                    return self.sample(s);
                }
                CayleyPoint::from_column(&v)
            }
            Kind::CaP1 => sphere_block_point(&s.sphere_point(8)),
            Kind::Sphere(k) => {
                if !(1..=8).contains(&k) {
                    return Err(Error::InvalidArgument(format!("sphere dimension {k} outside 1..=8")));
                }
                sphere_block_point(&s.sphere_point(k))
            }
            Kind::VH => {
                let p = s.sphere_point(2);
                vh_point(&p[0], &p[1], &p[2])
            }
        }
    }
}

/// `[[(1+c)/2, w/2, 0], [conj(w)/2, (1-c)/2, 0], [0, 0, 0]]` for `(c, w)` on the unit sphere.
pub fn sphere_block_point(p: &[Scalar]) -> Result<CayleyPoint> {
    let half = Scalar::new(1, 2);
    let c = &p[0];
    let w = Octonion(std::array::from_fn(|i| p.get(i + 1).map_or(Scalar::zero(), |x| x * &half)));
    let d = [(Scalar::one() + c) * &half, (Scalar::one() - c) * &half, Scalar::zero()];
    CayleyPoint::new(jordan::JordanElement::from_parts(d, Octonion::zero(), Octonion::zero(), w))
}

/// Point of the fixed-set family with `a^2 + b^2 + c^2 = 1`.
pub fn vh_point(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<CayleyPoint> {
    let v = [Octonion::real(a.clone()), Octonion::basis(1).scale(b), Octonion::basis(2).scale(c)];
    CayleyPoint::from_column(&v)
}

/// Finitely many points of a submanifold with their tangent spaces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubmanifoldSample {
    pub kind: Kind,
    pub points: Vec<CayleyPoint>,
    pub tangents: Vec<Subspace>,
    pub linear_span: Subspace,
}

/// `T_x P = T_x V ∩ span(P)`, with its dimension checked.
pub fn submanifold_tangent(kind: Kind, x: &CayleyPoint) -> Result<Subspace> {
    let t = x.tangent_space()?.intersection(&kind.ambient_span());
    if t.dim() != kind.dim() {
        return Err(Error::UnexpectedDimension { what: format!("tangent space of {}", kind.name()), expected: kind.dim(), computed: t.dim() });
    }
    Ok(t)
}

impl SubmanifoldSample {
    /// Draws `span_dim + extra` points, the first being `E11`, and retries
    /// until the points span the expected linear space.
    pub fn draw(kind: Kind, sampler: &mut Sampler, extra: usize) -> Result<Self> {
        let want = kind.span_dim() + extra;
        let mut points = vec![CayleyPoint::basepoint()];
        let mut attempts = 0;
        loop {
            while points.len() < want.max(1) && kind != Kind::Point {
                points.push(kind.sample(sampler)?);
            }
            let coords: Vec<Vector> = points.iter().map(|p| p.coords().to_vec()).collect();
            let span = Subspace::from_vectors(DIM, &coords);
            if span.dim() == kind.span_dim() {
                let tangents = points.iter().map(|p| submanifold_tangent(kind, p)).collect::<Result<_>>()?;
                return Ok(SubmanifoldSample { kind, points, tangents, linear_span: span });
            }
            attempts += 1;
            if attempts > 20 {
                return Err(Error::Unstable(format!("{} samples do not span the expected space", kind.name())));
            }
            points.push(kind.sample(sampler)?);
        }
    }

    /// Adds one more point with its tangent.
    pub fn extend(&mut self, sampler: &mut Sampler) -> Result<()> {
        let x = self.kind.sample(sampler)?;
        self.tangents.push(submanifold_tangent(self.kind, &x)?);
        self.points.push(x);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_form_a_chain() {
        let mut s = Sampler::new(1, DEFAULT_HEIGHT);
        let spans: Vec<Subspace> =
            [Kind::RP2, Kind::CP2, Kind::HP2].iter().map(|k| SubmanifoldSample::draw(*k, &mut s, 4).unwrap().linear_span).collect();
        assert_eq!(spans.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![6, 9, 15]);
        assert!(spans[1].contains_subspace(&spans[0]));
        assert!(spans[2].contains_subspace(&spans[1]));
        let mut pts = Vec::new();
        for _ in 0..30 {
            pts.push(s.chart_point().coords().to_vec());
        }
        let full = Subspace::from_vectors(DIM, &pts);
        assert_eq!(full.dim(), 27);
    }

    #[test]
    fn every_family_has_the_right_tangent_dimension() {
        let mut s = Sampler::new(2, DEFAULT_HEIGHT);
        let mut kinds = vec![Kind::Point, Kind::RP2, Kind::CP2, Kind::HP2, Kind::CaP1, Kind::VH];
        kinds.extend((1..=8).map(Kind::Sphere));
        for k in kinds {
            let sample = SubmanifoldSample::draw(k, &mut s, 2).unwrap();
            for (x, t) in sample.points.iter().zip(&sample.tangents) {
                assert!(sample.linear_span.contains(x.coords()), "{}", k.name());
                assert!(x.tangent_space().unwrap().contains_subspace(t));
            }
        }
    }

    #[test]
    fn vh_point_matches_display() {
        let x = vh_point(&Scalar::new(3, 5), &Scalar::new(4, 5), &Scalar::zero()).unwrap();
        let v = x.value();
        assert_eq!(*v.diag(0), Scalar::new(9, 25));
        assert_eq!(*v.diag(1), Scalar::new(16, 25));
        // x12 = -ab i
        assert_eq!(v.off(2), Octonion::basis(1).scale(&Scalar::new(-12, 25)));
    }

    #[test]
    fn circle_points() {
        let x = sphere_block_point(&[Scalar::new(3, 5), Scalar::new(4, 5)]).unwrap();
        assert_eq!(*x.value().diag(0), Scalar::new(4, 5));
        assert_eq!(x.value().off(2), Octonion::real(Scalar::new(2, 5)));
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = Sampler::new(7, 5).chart_point();
        let b = Sampler::new(7, 5).chart_point();
        assert_eq!(a, b);
    }
}
