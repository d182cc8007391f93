//! Representations obtained inside the Jordan model: the spin representation
//! of `spin9` on `T_p V`, its restrictions to `sp2+sp1+sp1` and to an `so4`
//! acting on traceless symmetric 4x4 matrices, and two auxiliary
//! quaternionic representations.

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace, Vector};
use crate::jordan::{self, CayleyPoint, DIM};
use crate::octonion::Octonion;
use crate::orbits::{restrict, LinearGroupAction};
use crate::symmetry::named;
use crate::symmetry::Subalgebra;

use super::classical::{left_mult, right_mult, rotation, Classical};

/// `T_p V` at `p = E11`: the coordinates of `x13` and `x12`.
pub fn basepoint_tangent() -> Subspace {
    Subspace::coordinate(DIM, jordan::off_index(1, 0)..DIM)
}

/// Operators of `g` restricted to `T_p V`; `g` must fix `p`.
pub fn on_tangent(label: &str, g: &Subalgebra) -> Result<LinearGroupAction> {
    if !g.fixes(CayleyPoint::basepoint().coords()) {
        return Err(Error::InvalidArgument(format!("{} does not fix the basepoint", g.label())));
    }
    let ops = restrict(g.basis(), &basepoint_tangent())?;
    LinearGroupAction::euclidean(label, 16, &ops)
}

/// The 16-dimensional spin representation of `spin9`.
pub fn spin9_spinor() -> Result<LinearGroupAction> {
    on_tangent("spin9 on R16", &named::spin9()?)
}

/// `N(HP2)` computed as the preserver of the linear span of the quaternionic plane.
pub fn sp3_sp1() -> Result<Subalgebra> {
    Ok(named::f4()?.preserver_subspace("sp3+sp1", &jordan::hermitian_over(4)))
}

/// Isotropy of `sp3+sp1` at `p` on `T_p V`.
pub fn sp2_sp1_sp1() -> Result<LinearGroupAction> {
    let iso = named::stabilizer_point(&sp3_sp1()?, &CayleyPoint::basepoint()).expect_dim(16)?;
    on_tangent("sp2+sp1+sp1 on R16", &iso)
}

/// Orthogonal basis of traceless symmetric 4x4 matrices, every element of
/// squared Frobenius norm 4.
fn traceless_symmetric_basis() -> Vec<Matrix> {
    let diag = |d: [i64; 4]| Matrix::diagonal(&d.map(Scalar::from_int));
    let sym = |a: usize, b: usize, c: usize, d: usize, s: i64| {
        let mut m = Matrix::zeros(4, 4);
        for (i, j, v) in [(a, b, 1), (c, d, s)] {
            m[(i, j)] = Scalar::from_int(v);
            m[(j, i)] = Scalar::from_int(v);
        }
        m
    };
    let mut out = vec![diag([1, -1, 1, -1]), diag([1, -1, -1, 1]), diag([1, 1, -1, -1])];
    for (a, b, c, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        out.push(sym(a, b, c, d, 1));
        out.push(sym(a, b, c, d, -1));
    }
    out
}

/// The 9-dimensional `spin9`-module `{d1 = 0, d2 = -d3, x12 = x13 = 0}`,
/// basis vectors of squared norm 2.
fn vector_module_basis() -> Vec<Vector> {
    let mut w0 = vec![Scalar::zero(); DIM];
    w0[1] = Scalar::one();
    w0[2] = -Scalar::one();
    let mut out = vec![w0];
    out.extend((0..8).map(|c| crate::exact::unit_vector(DIM, jordan::off_index(0, c))));
    out
}

/// `so4` acting on traceless symmetric matrices, lifted to `spin9` through
/// the similarity sending the orthogonal basis above to the vector module.
pub fn so4_in_spin9() -> Result<Subalgebra> {
    let spin9 = named::spin9()?;
    let fs = traceless_symmetric_basis();
    let ws = vector_module_basis();
    let frob = |a: &Matrix, b: &Matrix| -> Scalar { a.entries().iter().zip(b.entries()).map(|(x, y)| x * y).sum() };
    let quarter = Scalar::new(1, 4);
    // columns: spin9 basis element evaluated on every w_k, stacked
    let cols: Vec<Vector> = spin9.basis().iter().map(|b| ws.iter().flat_map(|w| b.mul_vec(w)).collect()).collect();
    let system = Matrix::from_columns(&cols, DIM * ws.len());
    let mut ops = Vec::new();
    for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        let x = rotation(4, a, b);
        let mut target = Vec::with_capacity(DIM * ws.len());
        for f in &fs {
            let img = x.commutator(f);
            let mut v = vec![Scalar::zero(); DIM];
            for (g, w) in fs.iter().zip(&ws) {
                let c = frob(&img, g) * &quarter;
                if !c.is_zero() {
                    v = crate::exact::vec_add(&v, &crate::exact::vec_scale(w, &c));
                }
            }
            target.extend(v);
        }
        let coeffs = system
            .solve_any(&target)?
            .ok_or_else(|| Error::NotContained("so4 element has no preimage in spin9".into()))?;
        ops.push(spin9.combination(&coeffs));
    }
    Ok(Subalgebra::new("su2+su2", DIM, &ops))
}

/// The `so4` restriction of the spinor representation.
pub fn su2_su2_spinor() -> Result<LinearGroupAction> {
    on_tangent("su2+su2 on R16", &so4_in_spin9()?.expect_dim(6)?)
}

/// Operators `X -> f(X)` on `n x m` quaternion matrices in row-major `R^4` blocks.
fn quaternion_matrix_operator(n: usize, m: usize, f: impl Fn(&[Vec<Octonion>]) -> Vec<Vec<Octonion>>) -> Matrix {
    let dim = 4 * n * m;
    let mut op = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let (cell, c) = (col / 4, col % 4);
        let mut x = vec![vec![Octonion::zero(); m]; n];
        x[cell / m][cell % m] = Octonion::basis(c);
        let y = f(&x);
        for (i, row) in y.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                for r in 0..4 {
                    op[(4 * (i * m + j) + r, col)] = q.coords()[r].clone();
                }
            }
        }
    }
    op
}

fn quaternion_matmul(a: &[Vec<Octonion>], b: &[Vec<Octonion>]) -> Vec<Vec<Octonion>> {
    let inner = b.len();
    a.iter()
        .map(|row| (0..b[0].len()).map(|j| (0..inner).fold(Octonion::zero(), |acc, k| &acc + &row[k].mul(&b[k][j]))).collect())
        .collect()
}

/// `sp(n)` as quaternion skew-Hermitian matrices.
fn sp_matrices(n: usize) -> Vec<Vec<Vec<Octonion>>> {
    let zero = || vec![vec![Octonion::zero(); n]; n];
    let mut out = Vec::new();
    for d in 0..n {
        for u in 1..4 {
            let mut a = zero();
            a[d][d] = Octonion::basis(u);
            out.push(a);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let mut x = zero();
            x[a][b] = Octonion::one();
            x[b][a] = -&Octonion::one();
            out.push(x);
            for u in 1..4 {
                let mut x = zero();
                x[a][b] = Octonion::basis(u);
                x[b][a] = Octonion::basis(u);
                out.push(x);
            }
        }
    }
    out
}

/// `sp2+sp2` on 2x2 quaternion matrices by `X -> A X - X B`.
pub fn sp2_sp2() -> Result<LinearGroupAction> {
    let mut ops = Vec::new();
    for a in sp_matrices(2) {
        ops.push(quaternion_matrix_operator(2, 2, |x| quaternion_matmul(&a, x)));
    }
    for b in sp_matrices(2) {
        ops.push(quaternion_matrix_operator(2, 2, |x| {
            quaternion_matmul(x, &b).into_iter().map(|r| r.into_iter().map(|q| -&q).collect()).collect()
        }));
    }
    LinearGroupAction::euclidean("sp2+sp2 on H2xH2", 16, &ops)
}

/// `so3+so4` on `H^3` by `x -> A x + q x - x r` with `A` real skew and `q, r`
/// imaginary quaternions.
pub fn so3_so4() -> Result<LinearGroupAction> {
    let mut ops: Vec<Matrix> = Classical::So(3).basis().iter().map(|a| a.kron(&Matrix::identity(4))).collect();
    for u in 1..4 {
        let q = Octonion::basis(u);
        ops.push(Matrix::identity(3).kron(&left_mult(&q, 4)));
        ops.push(Matrix::identity(3).kron(&-&right_mult(&q)));
    }
    LinearGroupAction::euclidean("so3+so4 on R12", 12, &ops)
}

/// Every operator of `g` maps the vector module into itself.
pub fn preserves_vector_module(g: &Subalgebra) -> bool {
    let ws = vector_module_basis();
    let span = Subspace::from_vectors(DIM, &ws);
    g.basis().iter().all(|x| ws.iter().all(|w| span.contains(&x.mul_vec(w))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_bases_have_equal_norms() {
        let fs = traceless_symmetric_basis();
        for (i, a) in fs.iter().enumerate() {
            let tr: Scalar = (0..4).map(|k| a[(k, k)].clone()).sum();
            assert!(tr.is_zero());
            for (j, b) in fs.iter().enumerate() {
                let ip: Scalar = a.entries().iter().zip(b.entries()).map(|(x, y)| x * y).sum();
                assert_eq!(ip, Scalar::from_int(if i == j { 4 } else { 0 }));
            }
        }
    }

    #[test]
    fn so4_lift_is_a_subalgebra() {
        let g = so4_in_spin9().unwrap();
        assert_eq!(g.dim(), 6);
        assert!(g.is_bracket_closed());
        assert!(named::spin9().unwrap().contains_algebra(&g));
        assert!(preserves_vector_module(&g));
        let gram = jordan::gram();
        assert!(vector_module_basis().iter().all(|w| gram.bilinear(w, w) == Scalar::from_int(2)));
        assert_eq!(g.derived().dim(), 6);
    }

    #[test]
    fn spinor_representation_is_transitive_on_spheres() {
        let s = spin9_spinor().unwrap();
        assert_eq!(s.dim(), 36);
        let mut sampler = crate::samplers::Sampler::new(1, 13);
        assert_eq!(crate::polarity::rep_cohomogeneity(&s, &mut sampler).unwrap(), 1);
    }

    #[test]
    fn auxiliary_representations() {
        let mut sampler = crate::samplers::Sampler::new(1, 13);
        let a = sp2_sp2().unwrap();
        assert_eq!(a.dim(), 20);
        let v = crate::polarity::rep_polar_test(&a, &mut sampler).unwrap();
        assert!(v.polar);
        assert_eq!(v.cohomogeneity, 2);
        let b = so3_so4().unwrap();
        assert_eq!(b.dim(), 9);
        let v = crate::polarity::rep_polar_test(&b, &mut sampler).unwrap();
        assert!(v.polar);
        assert_eq!(v.cohomogeneity, 3);
    }
}
