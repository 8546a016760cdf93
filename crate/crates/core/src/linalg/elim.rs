//! Fraction-free Gaussian elimination.
//!
//! Rows are cleared to primitive integer vectors (content gcd divided out)
//! and the forward pass uses cross-multiplication updates, so no rational
//! arithmetic happens until the final normalization to reduced row echelon
//! form. The RREF of a row space is unique, which makes every public result
//! canonical regardless of pivot choices made here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::Rational;

use super::matrix::SparseVec;

/// Sparse integer row: strictly increasing indices, nonzero entries.
pub type IntRow = Vec<(usize, BigInt)>;

/// Clear denominators and divide out the content, keeping the sign.
pub fn to_primitive(row: &SparseVec) -> IntRow {
    if row.is_empty() {
        return Vec::new();
    }
    let mut lcm = BigInt::from(1);
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: IntRow = row
        .iter()
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect();
    let mut content = BigInt::zero();
    for (_, v) in &out {
        content = content.gcd(v);
        if content == BigInt::from(1) {
            return out;
        }
    }
    for (_, v) in &mut out {
        *v = &*v / &content;
    }
    out
}

fn reduce_content(row: &mut IntRow) {
    let mut content = BigInt::zero();
    for (_, v) in row.iter() {
        content = content.gcd(v);
        if content == BigInt::from(1) {
            return;
        }
    }
    if content > BigInt::from(1) {
        for (_, v) in row.iter_mut() {
            *v = &*v / &content;
        }
    }
}

/// `a*ra + b*rb` over sorted integer rows.
fn int_axpy(a: &BigInt, ra: &IntRow, b: &BigInt, rb: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(ra.len() + rb.len());
    let (mut i, mut j) = (0, 0);
    while i < ra.len() && j < rb.len() {
        match ra[i].0.cmp(&rb[j].0) {
            std::cmp::Ordering::Less => {
                out.push((ra[i].0, a * &ra[i].1));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((rb[j].0, b * &rb[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = a * &ra[i].1 + b * &rb[j].1;
                if !v.is_zero() {
                    out.push((ra[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for (k, v) in &ra[i..] {
        out.push((*k, a * v));
    }
    for (k, v) in &rb[j..] {
        out.push((*k, b * v));
    }
    out
}

/// Eliminate the leading entry of `row` against `pivot` (same leading column),
/// fraction-free with minimal multipliers, then re-primitivize.
fn eliminate_leading(row: &IntRow, pivot: &IntRow) -> IntRow {
    debug_assert_eq!(row[0].0, pivot[0].0);
    let p = &pivot[0].1;
    let v = &row[0].1;
    let g = p.gcd(v);
    let mut out = int_axpy(&(p / &g), row, &(-(v / &g)), pivot);
    reduce_content(&mut out);
    out
}

/// Echelon basis produced by [`echelon`]: rows keyed by pivot column.
pub struct Echelon {
    pub cols: usize,
    /// pivot column -> primitive integer row with that leading column
    pub rows: BTreeMap<usize, IntRow>,
}

/// Forward elimination. Consumes arbitrary sparse rational rows and returns
/// an echelon set with one primitive integer row per pivot column.
pub fn echelon<I>(cols: usize, rows: I) -> Echelon
where
    I: IntoIterator<Item = SparseVec>,
{
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    let mut queue: Vec<IntRow> = rows
        .into_iter()
        .map(|r| to_primitive(&r))
        .filter(|r| !r.is_empty())
        .collect();
    // Short rows first keeps the updates sparse.
    queue.sort_by_key(|r| std::cmp::Reverse(r.len()));
    while let Some(mut row) = queue.pop() {
        loop {
            if row.is_empty() {
                break;
            }
            let lead = row[0].0;
            debug_assert!(lead < cols, "row index out of bounds");
            match pivots.get(&lead) {
                None => {
                    pivots.insert(lead, row);
                    break;
                }
                Some(pivot) => {
                    row = eliminate_leading(&row, pivot);
                }
            }
        }
    }
    Echelon { cols, rows: pivots }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Back-substitute and normalize pivots to 1: the unique RREF, as
    /// rational rows ordered by pivot column. Zero rows are dropped.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut keys: Vec<usize> = self.rows.keys().copied().collect();
        let mut rows = self.rows;
        // Clear above each pivot, walking right-to-left.
        for idx in (0..keys.len()).rev() {
            let p = keys[idx];
            let pivot_row = rows[&p].clone();
            for &q in &keys[..idx] {
                let target = rows.get_mut(&q).unwrap();
                if let Ok(pos) = target.binary_search_by_key(&p, |e| e.0) {
                    let pv = &pivot_row[0].1;
                    let tv = target[pos].1.clone();
                    let g = pv.gcd(&tv);
                    let mut updated = int_axpy(&(pv / &g), target, &(-(&tv / &g)), &pivot_row);
                    reduce_content(&mut updated);
                    *target = updated;
                }
            }
        }
        keys.sort_unstable();
        keys.into_iter()
            .map(|p| {
                let row = &rows[&p];
                let lead = Rational::from_integer(row[0].1.clone());
                row.iter()
                    .map(|(j, v)| (*j, Rational::from_integer(v.clone()) / &lead))
                    .collect()
            })
            .collect()
    }
}

/// Canonical RREF rows of an arbitrary iterator of sparse rational rows.
pub fn rref_rows<I>(cols: usize, rows: I) -> Vec<SparseVec>
where
    I: IntoIterator<Item = SparseVec>,
{
    echelon(cols, rows).into_rref()
}

/// Canonical basis of `{x : for every row m, <m, x> = 0}`.
///
/// Constraint rows live in the same coordinate space as the solutions.
pub fn kernel_rows<I>(cols: usize, rows: I) -> Vec<SparseVec>
where
    I: IntoIterator<Item = SparseVec>,
{
    let rref = rref_rows(cols, rows);
    let mut is_pivot = vec![false; cols];
    for row in &rref {
        is_pivot[row[0].0] = true;
    }
    // Group the non-pivot entries of the RREF by column, tagged with the
    // pivot column of the row they came from.
    let mut by_column: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for row in &rref {
        let p = row[0].0;
        for (j, v) in &row[1..] {
            if !is_pivot[*j] {
                by_column.entry(*j).or_default().push((p, -v.clone()));
            }
        }
    }
    // One generator per free column: x_free = 1, x_pivot = -coeff.
    let mut generators: Vec<SparseVec> = Vec::new();
    for f in 0..cols {
        if is_pivot[f] {
            continue;
        }
        let mut v: SparseVec = vec![(f, crate::scalar::one())];
        if let Some(col) = by_column.remove(&f) {
            v.extend(col);
        }
        v.sort_by_key(|e| e.0);
        generators.push(v);
    }
    // The generators are independent but not echelonized; canonicalize.
    rref_rows(cols, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::SparseMatrix;
    use crate::scalar::{frac, int};

    fn rows_of(m: &SparseMatrix) -> Vec<SparseVec> {
        m.rows_iter().cloned().collect()
    }

    #[test]
    fn primitive_rows_clear_denominators() {
        let row: SparseVec = vec![(0, frac(2, 3)), (2, frac(-4, 9))];
        assert_eq!(
            to_primitive(&row),
            vec![(0, BigInt::from(3)), (2, BigInt::from(-2))]
        );
    }

    #[test]
    fn rref_identity_is_identity() {
        let m = SparseMatrix::identity(3);
        assert_eq!(rref_rows(3, rows_of(&m)), rows_of(&m));
    }

    #[test]
    fn rref_zero_matrix_is_empty() {
        let m = SparseMatrix::zero(2, 4);
        assert!(rref_rows(4, rows_of(&m)).is_empty());
    }

    #[test]
    fn rref_collapses_dependent_rows() {
        // Hand elimination: [[2,4],[1,2]] -> [[1,2]].
        let m = SparseMatrix::from_dense(&[vec![2, 4], vec![1, 2]]);
        let r = rref_rows(2, rows_of(&m));
        assert_eq!(r, vec![vec![(0, int(1)), (1, int(2))]]);
    }

    #[test]
    fn rref_with_rational_result() {
        let m = SparseMatrix::from_dense(&[vec![2, 3], vec![4, 7]]);
        let r = rref_rows(2, rows_of(&m));
        assert_eq!(r, rows_of(&SparseMatrix::identity(2)));
        let m2 = SparseMatrix::from_dense(&[vec![3, 5]]);
        assert_eq!(rref_rows(2, rows_of(&m2)), vec![vec![(0, int(1)), (1, frac(5, 3))]]);
    }

    #[test]
    fn kernel_of_single_constraint() {
        // Rank-nullity by hand: kernel of [1,1] is span{(1,-1)}.
        let k = kernel_rows(2, vec![vec![(0, int(1)), (1, int(1))]]);
        assert_eq!(k, vec![vec![(0, int(1)), (1, int(-1))]]);
    }

    #[test]
    fn kernel_of_zero_is_full() {
        let k = kernel_rows(3, Vec::<SparseVec>::new());
        assert_eq!(k, rows_of(&SparseMatrix::identity(3)));
    }
}
