//! Derivation algebras of the octonions and of the Jordan algebra.
//!
//! A derivation is found as the kernel of the Leibniz system
//! `D(e_a e_b) = D(e_a) e_b + e_a D(e_b)` whose unknowns are the entries of
//! `D` in row-major order (`D e_s = sum_r D[r][s] e_r`).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::cache;
use super::subalgebra::Subalgebra;
use crate::error::{Error, Result};
use crate::exact::{Echelon, Matrix, Scalar, SparseRow};
use crate::jordan::{self, JordanElement, DIM};
use crate::octonion::Octonion;

pub const G2_DIM: usize = 14;
pub const F4_DIM: usize = 52;

type Constants = Vec<Vec<Vec<(usize, Scalar)>>>;

fn octonion_constants() -> Constants {
    (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let p = Octonion::basis(a).mul(&Octonion::basis(b));
                    p.0.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
                })
                .collect()
        })
        .collect()
}

/// Leibniz equations for the ordered basis pairs `pairs`.
fn leibniz_rows(c: &Constants, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<SparseRow> {
    let n = c.len();
    let var = |r: usize, s: usize| r * n + s;
    let mut out = Vec::new();
    for (a, b) in pairs {
        let mut rows: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n];
        let add = |rows: &mut Vec<BTreeMap<usize, Scalar>>, m: usize, v: usize, x: &Scalar| {
            let e = rows[m].entry(v).or_insert_with(Scalar::zero);
            *e += x;
        };
        for (cc, val) in &c[a][b] {
            for m in 0..n {
                add(&mut rows, m, var(m, *cc), val);
            }
        }
        for k in 0..n {
            for (m, val) in &c[k][b] {
                add(&mut rows, *m, var(k, a), &-val);
            }
            for (m, val) in &c[a][k] {
                add(&mut rows, *m, var(k, b), &-val);
            }
        }
        for r in rows {
            let row: SparseRow = r.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            if !row.is_empty() {
                out.push(row);
            }
        }
    }
    out
}

fn kernel_operators(n: usize, rows: Vec<SparseRow>) -> Vec<Matrix> {
    let mut e = Echelon::new(n * n);
    for r in rows {
        if e.is_full() {
            break;
        }
        e.insert(r);
    }
    e.kernel().into_iter().map(|v| Matrix::from_vector(n, n, v)).collect()
}

/// Whether an 8x8 matrix is a derivation of the octonions.
pub fn is_octonion_derivation(d: &Matrix) -> bool {
    let apply = |x: &Octonion| Octonion(d.mul_vec(&x.0).try_into().expect("length 8"));
    (0..8).all(|a| {
        (0..8).all(|b| {
            let (ea, eb) = (Octonion::basis(a), Octonion::basis(b));
            apply(&ea.mul(&eb)) == &apply(&ea).mul(&eb) + &ea.mul(&apply(&eb))
        })
    })
}

/// `Der(Ca)` as 8x8 matrices.
pub fn der_octonion_8() -> Result<Vec<Matrix>> {
    let c = octonion_constants();
    let pairs = (0..8).flat_map(|a| (0..8).map(move |b| (a, b)));
    let ops = kernel_operators(8, leibniz_rows(&c, pairs));
    if ops.len() != G2_DIM {
        return Err(Error::UnexpectedDimension { what: "Der(Ca)".into(), expected: G2_DIM, computed: ops.len() });
    }
    Ok(ops)
}

/// Applies an octonion derivation to each off-diagonal entry of `J`.
pub fn lift_octonion_derivation(d: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(DIM, DIM);
    for s in 0..3 {
        for r in 0..8 {
            for c in 0..8 {
                m[(jordan::off_index(s, r), jordan::off_index(s, c))] = d[(r, c)].clone();
            }
        }
    }
    m
}

/// `g2 = Der(Ca)` acting on `J` entrywise.
pub fn der_octonion() -> Result<Subalgebra> {
    let ops: Vec<Matrix> = der_octonion_8()?.iter().map(lift_octonion_derivation).collect();
    Ok(Subalgebra::new("g2", DIM, &ops))
}

/// Whether a 27x27 matrix is a derivation of `J` (checked on all basis pairs).
pub fn is_derivation(d: &Matrix) -> bool {
    let images: Vec<JordanElement> = (0..DIM).map(|a| JordanElement::from_coords(d.column(a))).collect();
    (0..DIM).all(|a| {
        (a..DIM).all(|b| {
            let (ea, eb) = (JordanElement::basis(a), JordanElement::basis(b));
            let lhs = JordanElement::from_coords(d.mul_vec(ea.mul(&eb).coords()));
            lhs == images[a].mul(&eb).add(&ea.mul(&images[b]))
        })
    })
}

/// The Leibniz system for `Der(J)` over unordered basis pairs.
pub fn jordan_leibniz_system() -> Vec<SparseRow> {
    let c = jordan::structure_constants();
    leibniz_rows(c, (0..DIM).flat_map(|a| (a..DIM).map(move |b| (a, b))))
}

/// Solves for `f4 = Der(J)` from scratch.
pub fn der_jordan_uncached() -> Result<Subalgebra> {
    let ops = kernel_operators(DIM, jordan_leibniz_system());
    Subalgebra::new("f4", DIM, &ops).expect_dim(F4_DIM)
}

/// `f4 = Der(J)`, memoized in-process and on disk.
pub fn der_jordan() -> Result<Subalgebra> {
    static F4: OnceLock<Subalgebra> = OnceLock::new();
    if let Some(f) = F4.get() {
        return Ok(f.clone());
    }
    let f = if cache::enabled() {
        match cache::load()? {
            Some(ops) => Subalgebra::new("f4", DIM, &ops).expect_dim(F4_DIM)?,
            None => {
                let f = der_jordan_uncached()?;
                cache::store(f.basis())?;
                f
            }
        }
    } else {
        der_jordan_uncached()?
    };
    Ok(F4.get_or_init(|| f).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::hermitian_over;

    #[test]
    fn g2_has_dimension_14_and_is_closed() {
        let ops = der_octonion_8().unwrap();
        assert!(ops.iter().all(is_octonion_derivation));
        let g2 = der_octonion().unwrap();
        assert_eq!(g2.dim(), 14);
        assert!(g2.is_bracket_closed());
        assert!(g2.basis().iter().all(is_derivation));
        assert!(g2.is_skew(&jordan::gram()));
    }

    #[test]
    fn g2_kills_real_matrices() {
        let g2 = der_octonion().unwrap();
        assert_eq!(g2.annihilator("z", &hermitian_over(1)).dim(), 14);
    }

    #[test]
    fn non_derivation_is_rejected() {
        let mut d = Matrix::zeros(DIM, DIM);
        d[(0, 0)] = Scalar::one();
        assert!(!is_derivation(&d));
    }
}
