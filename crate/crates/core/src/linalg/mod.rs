//! Exact rational sparse linear algebra: RREF, kernels, subspace calculus,
//! commutants and algebra closures. This is the engine under every theorem
//! check in the crate.

mod algebra;
mod elim;
mod matrix;
mod subspace;

pub use algebra::{
    algebra_closure, commutant, joint_kernel, operator_span, product_span, restrict_by,
    span_closure, subspace_commutant, subspace_operators, RrefBasis,
};
pub use elim::rref_rows;
pub use matrix::{vec_add_scaled, vec_get, vec_scale, SparseMatrix, SparseVec};
pub use subspace::{nullspace, rank, row_space, sparse_dot, Subspace};

use crate::scalar::Rational;

/// RREF of a matrix with zero rows dropped, returned as a matrix again.
pub fn rref(m: &SparseMatrix) -> SparseMatrix {
    let rows = rref_rows(m.cols(), m.rows_iter().cloned());
    let entries: Vec<(usize, usize, Rational)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v.clone())))
        .collect();
    SparseMatrix::from_entries(rows.len(), m.cols(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_is_idempotent_on_a_fixed_case() {
        let m = SparseMatrix::from_dense(&[vec![2, 4, 1], vec![1, 2, 0], vec![0, 0, 3]]);
        let r = rref(&m);
        assert_eq!(rref(&r), r);
    }

    #[test]
    fn rref_drops_zero_rows() {
        let m = SparseMatrix::from_dense(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(rref(&m).rows(), 0);
    }
}
