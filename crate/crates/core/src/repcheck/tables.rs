//! The infinitesimally polar, non-polar representations on complex and
//! quaternionic projective spaces, lifted to the covering spheres.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::octonion::Octonion;
use crate::orbits::LinearGroupAction;
use crate::polarity::{self, Violation};
use crate::samplers::{Sampler, DEFAULT_HEIGHT};

use super::classical::{complex_unit, diagonal, on_summand, right_scalar, Classical};
use super::restricted::spin9_spinor;

const FIXTURE: &str = include_str!("tables12.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub id: String,
    pub table: u8,
    pub row: u8,
    pub group: String,
    pub representation: String,
    /// Smallest admissible `n`; `None` for rows without a parameter.
    pub min_n: Option<usize>,
    pub m: String,
    pub orbit_space: String,
    pub quotient_dim: usize,
    pub polar: bool,
}

#[derive(Deserialize)]
struct Fixture {
    rows: Vec<TableRow>,
}

pub fn table_rows() -> Vec<TableRow> {
    serde_json::from_str::<Fixture>(FIXTURE).expect("embedded table fixture parses").rows
}

impl TableRow {
    /// Real dimension of the representation space for parameter `n`.
    pub fn real_dim(&self, n: usize) -> usize {
        match self.id.as_str() {
            "so2-spin9" => 32,
            "u2-spn" | "u1-spn" | "t2-spn" | "spn-sp1" => 8 * n,
            _ => 4 * n,
        }
    }
}

/// The lifted representation of `row` for parameter `n` (ignored for rows
/// without a parameter). The Hopf circle, resp. `sp1`, is included.
pub fn build_rep(row: &TableRow, n: usize) -> Result<LinearGroupAction> {
    if let Some(min) = row.min_n {
        if n < min {
            return Err(Error::InvalidArgument(format!("{} requires n >= {min}, got {n}", row.id)));
        }
    }
    let label = format!("{} (n={n})", row.id);
    let ops: Vec<Matrix> = match row.id.as_str() {
        "so2-spin9" => {
            let spin = spin9_spinor()?;
            let mut ops = vec![Classical::So(2).basis()[0].kron(&Matrix::identity(16))];
            ops.extend(spin.algebra.basis().iter().map(|x| Matrix::identity(2).kron(x)));
            ops
        }
        "u2-spn" => {
            // C2 (x)_C H^n with complex scalars acting by right multiplication by i
            let ri = right_scalar(&Octonion::basis(1), n);
            let id = Matrix::identity(4 * n);
            let mut ops: Vec<Matrix> = Classical::Sp(n).basis().iter().map(|x| diagonal(x, 2)).collect();
            for x in Classical::U(2).basis() {
                let mut op = Matrix::zeros(8 * n, 8 * n);
                for a in 0..2 {
                    for b in 0..2 {
                        let (re, im) = (&x[(2 * a, 2 * b)], &x[(2 * a + 1, 2 * b)]);
                        let block = &id.scale(re) + &ri.scale(im);
                        let mut e = Matrix::zeros(2, 2);
                        e[(a, b)] = crate::exact::Scalar::one();
                        op = &op + &e.kron(&block);
                    }
                }
                ops.push(op);
            }
            ops
        }
        "un" => Classical::U(n).basis().iter().map(|x| diagonal(x, 2)).collect(),
        "t2-sun" => {
            let mut ops: Vec<Matrix> = Classical::Su(n).basis().iter().map(|x| diagonal(x, 2)).collect();
            let j = complex_unit(n);
            ops.push(on_summand(&j, 0, 2));
            ops.push(on_summand(&j, 1, 2));
            ops
        }
        "u1-spn" | "t2-spn" => {
            let mut ops: Vec<Matrix> = Classical::Sp(n).basis().iter().map(|x| diagonal(x, 2)).collect();
            let ri = right_scalar(&Octonion::basis(1), n);
            if row.id == "u1-spn" {
                ops.push(diagonal(&ri, 2));
            } else {
                ops.push(on_summand(&ri, 0, 2));
                ops.push(on_summand(&ri, 1, 2));
            }
            ops
        }
        "spn-sp1" => {
            let mut ops: Vec<Matrix> = Classical::Sp(n).basis().iter().map(|x| diagonal(x, 2)).collect();
            ops.extend((1..4).map(|u| diagonal(&right_scalar(&Octonion::basis(u), n), 2)));
            ops
        }
        other => return Err(Error::InvalidArgument(format!("unknown table row {other}"))),
    };
    LinearGroupAction::euclidean(label, row.real_dim(n), &ops)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowReport {
    pub id: String,
    pub n: usize,
    pub seed: u64,
    pub ambient_dim: usize,
    pub algebra_dim: usize,
    /// Cohomogeneity of the linear action, one more than that on the unit sphere.
    pub cohomogeneity: usize,
    pub expected_cohomogeneity: usize,
    pub polar: bool,
    pub witness: Option<Violation>,
    pub pass: bool,
}

/// Checks non-polarity and `cohomogeneity = quotient dimension + 1`.
pub fn verify_row(row: &TableRow, n: usize, seed: u64) -> Result<RowReport> {
    let act = build_rep(row, n)?;
    let verdict = polarity::rep_polar_test(&act, &mut Sampler::new(seed, DEFAULT_HEIGHT))?;
    let expected = row.quotient_dim + 1;
    Ok(RowReport {
        id: row.id.clone(),
        n,
        seed,
        ambient_dim: act.ambient_dim(),
        algebra_dim: act.dim(),
        cohomogeneity: verdict.cohomogeneity,
        expected_cohomogeneity: expected,
        polar: verdict.polar,
        pass: verdict.cohomogeneity == expected && verdict.polar == row.polar,
        witness: verdict.violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_has_seven_rows() {
        let rows = table_rows();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows.iter().map(|r| r.quotient_dim).collect::<Vec<_>>(), vec![2, 2, 3, 2, 4, 3, 3]);
        assert!(rows.iter().all(|r| !r.polar));
    }

    #[test]
    fn conditions_are_enforced() {
        let row = &table_rows()[2];
        assert!(build_rep(row, 1).is_err());
        assert_eq!(build_rep(row, 2).unwrap().ambient_dim(), 8);
    }

    #[test]
    fn realified_dimensions() {
        let rows = table_rows();
        assert_eq!(build_rep(&rows[1], 2).unwrap().ambient_dim(), 16);
        assert_eq!(build_rep(&rows[6], 2).unwrap().ambient_dim(), 16);
        // u2 + sp2
        assert_eq!(build_rep(&rows[1], 2).unwrap().dim(), 14);
        assert!(build_rep(&rows[1], 2).unwrap().algebra.is_bracket_closed());
    }

    #[test]
    fn small_rows_verify() {
        for row in table_rows().iter().filter(|r| r.min_n.is_some()) {
            let r = verify_row(row, 2, 1).unwrap();
            assert!(r.pass, "{r:?}");
            assert!(r.witness.is_some());
        }
    }
}
