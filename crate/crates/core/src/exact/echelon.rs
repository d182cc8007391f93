//! Incremental fraction-free row reduction over sparse rows.
//!
//! Rows are cleared of denominators on entry and stored as primitive integer
//! vectors (content 1, positive leading entry). Elimination of a leading
//! entry `a` against a pivot row with leading entry `p` replaces the row by
//! `(p/g) row - (a/g) pivot` with `g = gcd(a, p)`, followed by content
//! removal, so no fractions appear until the final back-substitution.

use super::scalar::Scalar;

/// Sparse vector as `(column, value)` pairs with strictly increasing columns
/// and no explicit zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(row: &[(usize, Scalar)], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (c, x) in row {
        out[*c] = x.clone();
    }
    out
}

/// Scales a rational sparse row to a primitive integer row with positive
/// leading coefficient. Returns `None` for the zero row.
pub fn primitive(row: SparseRow) -> Option<SparseRow> {
    if row.is_empty() {
        return None;
    }
    let mut lcm = Scalar::one();
    for (_, x) in &row {
        if !x.is_integer() {
            lcm = Scalar::int_lcm(&lcm, &Scalar::from_bigint(x.denom()));
        }
    }
    let mut row: SparseRow = if lcm.is_one() {
        row
    } else {
        row.into_iter().map(|(c, x)| (c, x * &lcm)).collect()
    };
    let mut g = Scalar::zero();
    for (_, x) in &row {
        g = Scalar::int_gcd(&g, x);
        if g.is_one() {
            break;
        }
    }
    let flip = row[0].1.signum() < 0;
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    Some(row)
}

/// `alpha * a - beta * b` on sparse rows.
fn combine(alpha: &Scalar, a: &[(usize, Scalar)], beta: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push((ca, alpha * &a[i].1));
            i += 1;
        } else if cb < ca {
            out.push((cb, -(beta * &b[j].1)));
            j += 1;
        } else {
            let v = alpha * &a[i].1 - beta * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row-echelon form built one row at a time.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Reduces an integer row against the stored pivots; the result has no
    /// entry in any pivot column.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut pos = 0;
        while pos < row.len() {
            let col = row[pos].0;
            match self.pivot_row[col] {
                None => pos += 1,
                Some(r) => {
                    let pivot = &self.rows[r];
                    let lead = &pivot[0].1;
                    let a = &row[pos].1;
                    let g = Scalar::int_gcd(a, lead);
                    let alpha = lead / &g;
                    let beta = a / &g;
                    // Entries before `pos` are untouched columns < col of the pivot row.
                    let head: SparseRow = row[..pos].iter().map(|(c, x)| (*c, x * &alpha)).collect();
                    let tail = combine(&alpha, &row[pos..], &beta, pivot);
                    row = head;
                    row.extend(tail);
                    // content removal keeps integers small
                    row = match primitive_keep_sign(row) {
                        Some(r) => r,
                        None => return Vec::new(),
                    };
                }
            }
        }
        row
    }

    /// Inserts a rational row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        if self.is_full() {
            return false;
        }
        let Some(row) = primitive(row) else { return false };
        let reduced = self.reduce(row);
        let Some(reduced) = primitive(reduced) else { return false };
        let lead = reduced[0].0;
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(reduced);
        true
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        self.insert(sparse_from_dense(row))
    }

    /// Reduced row-echelon form: rows sorted by pivot column, each pivot equal
    /// to one and every pivot column zero outside its row.
    pub fn rref(&self) -> Vec<SparseRow> {
        let pivots = self.pivots();
        let mut reduced: Vec<Option<SparseRow>> = vec![None; self.ncols];
        // Process pivots from the right so every row used for elimination is final.
        for &p in pivots.iter().rev() {
            let src = &self.rows[self.pivot_row[p].unwrap()];
            let inv = src[0].1.recip();
            let mut row: SparseRow = src.iter().map(|(c, x)| (*c, x * &inv)).collect();
            let mut pos = 1;
            while pos < row.len() {
                let col = row[pos].0;
                if let Some(Some(other)) = reduced.get(col) {
                    let factor = row[pos].1.clone();
                    let head: SparseRow = row[..pos].to_vec();
                    let tail = combine(&Scalar::one(), &row[pos..], &factor, other);
                    row = head;
                    row.extend(tail);
                } else {
                    pos += 1;
                }
            }
            reduced[p] = Some(row);
        }
        pivots.into_iter().map(|p| reduced[p].take().unwrap()).collect()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        let pivots = self.pivots();
        let free: Vec<usize> = (0..self.ncols).filter(|c| self.pivot_row[*c].is_none()).collect();
        let mut basis = Vec::with_capacity(free.len());
        // column -> entries (row index, value) for free columns
        let mut by_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (k, row) in rref.iter().enumerate() {
            for (c, x) in row.iter().skip(1) {
                by_col[*c].push((k, x.clone()));
            }
        }
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.ncols];
            v[f] = Scalar::one();
            for (k, x) in &by_col[f] {
                v[pivots[*k]] = -x;
            }
            basis.push(v);
        }
        basis
    }
}

/// Like [`primitive`] for an integer row, but without forcing the sign.
fn primitive_keep_sign(row: SparseRow) -> Option<SparseRow> {
    if row.is_empty() {
        return None;
    }
    let mut g = Scalar::zero();
    for (_, x) in &row {
        g = Scalar::int_gcd(&g, x);
        if g.is_one() {
            return Some(row);
        }
    }
    Some(row.into_iter().map(|(c, x)| (c, x / &g)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|x| Scalar::from_int(*x)).collect()
    }

    #[test]
    fn rank_and_kernel_small() {
        let mut e = Echelon::new(3);
        assert!(e.insert_dense(&s(&[1, 2, 3])));
        assert!(e.insert_dense(&s(&[2, 4, 7])));
        assert!(!e.insert_dense(&s(&[3, 6, 10])));
        assert_eq!(e.rank(), 2);
        let k = e.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], s(&[-2, 1, 0]));
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new(4);
        e.insert_dense(&s(&[0, 2, 4, 6]));
        e.insert_dense(&s(&[3, 1, 0, 1]));
        let r = e.rref();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0][0], (0, Scalar::one()));
        assert_eq!(r[1][0], (1, Scalar::one()));
        assert!(r[0].iter().all(|(c, _)| *c != 1));
    }

    #[test]
    fn rational_rows_are_cleared() {
        let row = vec![(1, Scalar::new(1, 2)), (3, Scalar::new(-3, 4))];
        let p = primitive(row).unwrap();
        assert_eq!(p, vec![(1, Scalar::from_int(2)), (3, Scalar::from_int(-3))]);
    }
}
