//! Operator-space computations: spans, commutants, and algebra closures.
//!
//! A `d x d` operator is flattened row-major into a `d*d` coordinate vector;
//! every subspace of operators in the crate uses this one flattening, which
//! is what makes subspaces produced by different constructions comparable.

use num_traits::Zero;

use crate::scalar::{one, Rational};

use super::elim::kernel_rows;
use super::matrix::{vec_add_scaled, SparseMatrix, SparseVec};
use super::subspace::Subspace;

/// A mutable reduced-row-echelon basis supporting one-at-a-time insertion.
pub struct RrefBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl RrefBasis {
    pub fn new(ambient: usize) -> Self {
        RrefBasis {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn pivot_position(&self, col: usize) -> Result<usize, usize> {
        self.rows.binary_search_by_key(&col, |row| row[0].0)
    }

    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = v.clone();
        let mut pos = 0;
        while pos < acc.len() {
            match self.pivot_position(acc[pos].0) {
                Ok(idx) => {
                    let c = -acc[pos].1.clone();
                    acc = vec_add_scaled(&acc, &c, &self.rows[idx]);
                }
                Err(_) => pos += 1,
            }
        }
        acc
    }

    /// Insert a vector; returns the new normalized basis row if it enlarged
    /// the span, maintaining full RREF (pivot columns cleared everywhere).
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let mut reduced = self.reduce(v);
        if reduced.is_empty() {
            return None;
        }
        let inv = one() / reduced[0].1.clone();
        reduced = super::matrix::vec_scale(&reduced, &inv);
        let pivot = reduced[0].0;
        debug_assert!(pivot < self.ambient);
        for row in &mut self.rows {
            if let Some(c) = super::matrix::vec_get(row, pivot) {
                let c = -c.clone();
                *row = vec_add_scaled(row, &c, &reduced);
            }
        }
        let at = self.pivot_position(pivot).unwrap_err();
        self.rows.insert(at, reduced.clone());
        Some(reduced)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_rows(self.ambient, self.rows)
    }
}

/// Span of a family of `d x d` operators inside the `d*d` operator space.
pub fn operator_span<'a, I>(d: usize, ops: I) -> Subspace
where
    I: IntoIterator<Item = &'a SparseMatrix>,
{
    let mut basis = RrefBasis::new(d * d);
    for op in ops {
        assert_eq!((op.rows(), op.cols()), (d, d), "operator dimension mismatch");
        basis.insert(&op.flatten());
    }
    basis.into_subspace()
}

/// Operators corresponding to the basis rows of a subspace of operator space.
pub fn subspace_operators(s: &Subspace, d: usize) -> Vec<SparseMatrix> {
    assert_eq!(s.ambient_dim(), d * d, "not an operator subspace");
    s.basis()
        .iter()
        .map(|row| SparseMatrix::from_flat(d, row))
        .collect()
}

/// Cut a subspace down to the vectors annihilated by a linear map, given as a
/// closure producing the image of each basis vector.
pub fn restrict_by<F>(space: &Subspace, mut image: F) -> Subspace
where
    F: FnMut(&SparseVec) -> SparseVec,
{
    if space.is_zero() {
        return space.clone();
    }
    // Assemble the constraint matrix column by column, transposed into rows
    // over the coefficient space.
    let mut constraint_rows: std::collections::BTreeMap<usize, SparseVec> =
        std::collections::BTreeMap::new();
    for (j, b) in space.basis().iter().enumerate() {
        for (idx, val) in image(b) {
            constraint_rows.entry(idx).or_default().push((j, val));
        }
    }
    let coeffs = kernel_rows(space.dim(), constraint_rows.into_values());
    space.from_coefficients(&coeffs)
}

/// Joint kernel of a family of operator actions on an ambient space, applied
/// one at a time so each restriction works in the current parametrization.
pub fn joint_kernel<F>(ambient: usize, actions: &[F]) -> Subspace
where
    F: Fn(&SparseVec) -> SparseVec,
{
    let mut space = Subspace::full(ambient);
    for action in actions {
        space = restrict_by(&space, action);
    }
    space
}

/// Canonical subspace of all operators commuting with every generator:
/// `{X : X A = A X for all A}` inside the `d*d` operator space.
pub fn commutant(generators: &[SparseMatrix], d: usize) -> Subspace {
    for g in generators {
        assert_eq!((g.rows(), g.cols()), (d, d), "generator dimension mismatch");
    }
    let mut space = Subspace::full(d * d);
    for g in generators {
        space = restrict_by(&space, |row| {
            SparseMatrix::from_flat(d, row).commutator(g).flatten()
        });
    }
    space
}

/// The unital associative algebra generated by the seed operators, as a
/// canonical subspace of operator space. The identity is always adjoined;
/// the span is grown by right-multiplying basis representatives with seed
/// operators until it stabilizes, which suffices for closure under products
/// since every basis element is itself a combination of words in the seed.
pub fn algebra_closure(seed: &[SparseMatrix], d: usize) -> Subspace {
    span_closure(seed, d, true)
}

/// Multiplicative span closure without adjoining the identity. Used for
/// algebras that only carry a local unit (e.g. a projection).
pub fn span_closure(seed: &[SparseMatrix], d: usize, with_identity: bool) -> Subspace {
    for m in seed {
        assert_eq!((m.rows(), m.cols()), (d, d), "seed dimension mismatch");
    }
    let mut basis = RrefBasis::new(d * d);
    let mut reps: Vec<SparseMatrix> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    let mut push = |m: SparseMatrix, basis: &mut RrefBasis, reps: &mut Vec<SparseMatrix>, queue: &mut Vec<usize>| {
        if let Some(row) = basis.insert(&m.flatten()) {
            reps.push(SparseMatrix::from_flat(d, &row));
            queue.push(reps.len() - 1);
        }
    };
    if with_identity {
        push(SparseMatrix::identity(d), &mut basis, &mut reps, &mut queue);
    }
    for m in seed {
        push(m.clone(), &mut basis, &mut reps, &mut queue);
    }
    while let Some(i) = queue.pop() {
        for g in seed {
            let prod = reps[i].mul(g);
            push(prod, &mut basis, &mut reps, &mut queue);
        }
        // Mathematically the dimension is bounded by d^2; exceeding it can
        // only mean a reduction bug, so fail loudly rather than loop.
        assert!(
            basis.dim() <= d * d,
            "algebra closure exceeded the ambient operator space"
        );
    }
    basis.into_subspace()
}

/// Dense column-major-free helper: dimension-checked product span of two
/// operator subspaces, used by tests probing closure properties.
pub fn product_span(a: &Subspace, b: &Subspace, d: usize) -> Subspace {
    let ops_a = subspace_operators(a, d);
    let ops_b = subspace_operators(b, d);
    let mut rows: Vec<SparseVec> = Vec::new();
    for x in &ops_a {
        for y in &ops_b {
            rows.push(x.mul(y).flatten());
        }
    }
    Subspace::from_rows(d * d, rows)
}

/// All operators commuting elementwise with a whole subspace of operators.
pub fn subspace_commutant(s: &Subspace, d: usize) -> Subspace {
    let ops = subspace_operators(s, d);
    commutant(&ops, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn diag(entries: &[i64]) -> SparseMatrix {
        SparseMatrix::from_entries(
            entries.len(),
            entries.len(),
            entries
                .iter()
                .enumerate()
                .map(|(i, &v)| (i, i, int(v))),
        )
    }

    #[test]
    fn commutant_of_nothing_is_everything() {
        let c = commutant(&[], 3);
        assert!(c.is_full());
        assert_eq!(c.dim(), 9);
    }

    #[test]
    fn commutant_of_identity_is_everything() {
        let c = commutant(&[SparseMatrix::identity(2)], 2);
        assert_eq!(c.dim(), 4);
    }

    #[test]
    fn commutant_of_generic_diagonal_is_diagonal() {
        // Solve [X, diag(1,2)] = 0 by hand: off-diagonal entries vanish.
        let c = commutant(&[diag(&[1, 2])], 2);
        assert_eq!(c.dim(), 2);
        let expected = operator_span(2, [&diag(&[1, 0]), &diag(&[0, 1])]);
        assert!(c.equal(&expected));
    }

    #[test]
    fn commutant_contains_identity() {
        let gens = [SparseMatrix::from_dense(&[vec![0, 1], vec![0, 0]])];
        let c = commutant(&gens, 2);
        assert!(c.contains_vector(&SparseMatrix::identity(2).flatten()));
    }

    #[test]
    fn closure_of_identity_alone() {
        let s = algebra_closure(&[SparseMatrix::identity(3)], 3);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn closure_of_swap_is_two_dimensional() {
        // The flip on C^2 (x) C^2 is an involution: algebra = span{id, swap}.
        let perm = [0usize, 2, 1, 3];
        let swap = SparseMatrix::from_entries(
            4,
            4,
            perm.iter().enumerate().map(|(j, &i)| (i, j, int(1))),
        );
        let s = algebra_closure(&[swap], 4);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn closure_of_generic_diagonal_spans_diagonals() {
        // Powers of diag(1,2) span all diagonal matrices.
        let s = algebra_closure(&[diag(&[1, 2])], 2);
        assert_eq!(s.dim(), 2);
        let expected = operator_span(2, [&diag(&[1, 0]), &diag(&[0, 1])]);
        assert!(s.equal(&expected));
    }

    #[test]
    fn commutant_is_multiplicatively_closed() {
        let gens = [SparseMatrix::from_dense(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 5]])];
        let c = commutant(&gens, 3);
        let closed = algebra_closure(&subspace_operators(&c, 3), 3);
        assert!(c.equal(&closed));
    }

    #[test]
    fn double_commutant_contains_closure() {
        let gens = [
            SparseMatrix::from_dense(&[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 2]]),
        ];
        let closure = algebra_closure(&gens, 3);
        let double = subspace_commutant(&commutant(&gens, 3), 3);
        assert!(double.contains(&closure));
    }

    #[test]
    fn rref_basis_insert_keeps_reduction_exact() {
        let mut b = RrefBasis::new(3);
        assert!(b.insert(&vec![(0, int(2)), (1, int(2))]).is_some());
        assert!(b.insert(&vec![(1, int(1)), (2, int(1))]).is_some());
        assert!(b.insert(&vec![(0, int(1)), (2, int(-1))]).is_none());
        let s = b.into_subspace();
        assert_eq!(s.dim(), 2);
        let r: Rational = s.basis()[0][1].1.clone();
        assert!(r.is_integer());
    }
}
