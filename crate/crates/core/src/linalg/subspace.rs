//! Linear subspaces of a coordinate space in canonical form.
//!
//! The stored basis is the reduced row echelon form of any spanning set, so
//! two subspaces of the same ambient space are equal as sets if and only if
//! they are structurally equal. Every operation returns canonical output.

use std::fmt;

use num_traits::Zero;

use crate::scalar::Rational;

use super::elim::{kernel_rows, rref_rows};
use super::matrix::{vec_add_scaled, vec_get, SparseMatrix, SparseVec};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows: nonzero, unit pivots, pivot columns strictly increasing and
    /// zero in every other row.
    basis: Vec<SparseVec>,
}

impl Subspace {
    /// Canonicalize an arbitrary spanning set.
    pub fn from_rows<I>(ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = SparseVec>,
    {
        Subspace {
            ambient,
            basis: rref_rows(ambient, rows),
        }
    }

    pub fn zero_space(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: SparseMatrix::identity(ambient).rows_iter().cloned().collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Residue of `v` after reducing by the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = v.clone();
        let mut pos = 0;
        while pos < acc.len() {
            let col = acc[pos].0;
            // Pivot columns are the leading indices; binary search the basis.
            match self.basis.binary_search_by_key(&col, |row| row[0].0) {
                Ok(idx) => {
                    // Basis rows have no entries left of their pivot, so the
                    // entries of acc before `pos` are untouched and the entry
                    // at `col` cancels exactly.
                    let c = -acc[pos].1.clone();
                    acc = vec_add_scaled(&acc, &c, &self.basis[idx]);
                }
                Err(_) => pos += 1,
            }
        }
        acc
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        other.basis.iter().all(|row| self.contains_vector(row))
    }

    /// Set equality; by canonicality this is basis identity.
    pub fn equal(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.basis == other.basis
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        Subspace::from_rows(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    /// Intersection via the Zassenhaus block trick: reduce rows `[a | a]` and
    /// `[b | 0]`; the reduced rows supported entirely on the right block form
    /// a canonical basis of the intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let n = self.ambient;
        let stacked = self
            .basis
            .iter()
            .map(|row| {
                let mut v: SparseVec = row.clone();
                v.extend(row.iter().map(|(j, x)| (j + n, x.clone())));
                v
            })
            .chain(other.basis.iter().cloned());
        let reduced = rref_rows(2 * n, stacked);
        let basis = reduced
            .into_iter()
            .filter(|row| row[0].0 >= n)
            .map(|row| row.into_iter().map(|(j, x)| (j - n, x)).collect())
            .collect();
        Subspace { ambient: n, basis }
    }

    /// Realize coefficient vectors (over the stored basis) as ambient vectors.
    pub fn from_coefficients(&self, coeffs: &[SparseVec]) -> Subspace {
        let rows = coeffs.iter().map(|c| {
            let mut acc: SparseVec = Vec::new();
            for (j, x) in c {
                acc = vec_add_scaled(&acc, x, &self.basis[*j]);
            }
            acc
        });
        Subspace::from_rows(self.ambient, rows)
    }
}

pub fn sparse_dot(a: &SparseVec, b: &SparseVec) -> Rational {
    let mut s = Rational::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Subspace dim {} of R^{} [", self.dim(), self.ambient)?;
        for row in &self.basis {
            let items: Vec<String> = row.iter().map(|(j, v)| format!("{j}:{v}")).collect();
            writeln!(f, "  {}", items.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Row space of a matrix, canonicalized.
pub fn row_space(m: &SparseMatrix) -> Subspace {
    Subspace::from_rows(m.cols(), m.rows_iter().cloned())
}

/// Canonical kernel `{x : m x = 0}` of a sparse matrix.
pub fn nullspace(m: &SparseMatrix) -> Subspace {
    Subspace {
        ambient: m.cols(),
        basis: kernel_rows(m.cols(), m.rows_iter().cloned()),
    }
}

/// Rank computed by forward elimination only.
pub fn rank(m: &SparseMatrix) -> usize {
    super::elim::echelon(m.cols(), m.rows_iter().cloned()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn unit(n: usize, i: usize) -> SparseVec {
        let _ = n;
        vec![(i, int(1))]
    }

    #[test]
    fn nullspace_examples() {
        // identity -> zero subspace
        assert!(nullspace(&SparseMatrix::identity(4)).is_zero());
        // zero 3x3 -> full space
        let ns = nullspace(&SparseMatrix::zero(3, 3));
        assert!(ns.is_full());
        assert_eq!(ns.dim(), 3);
        // [[1,1]] -> span{(1,-1)}
        let ns = nullspace(&SparseMatrix::from_dense(&[vec![1, 1]]));
        assert_eq!(ns.basis(), &[vec![(0, int(1)), (1, int(-1))]]);
    }

    #[test]
    fn equality_is_scaling_invariant() {
        let a = Subspace::from_rows(3, vec![unit(3, 0)]);
        let b = Subspace::from_rows(3, vec![vec![(0, int(2))]]);
        assert!(a.equal(&b));
        let c = Subspace::from_rows(3, vec![unit(3, 1)]);
        assert!(!a.equal(&c));
    }

    #[test]
    fn row_space_of_triangular_is_full() {
        let m = SparseMatrix::from_dense(&[vec![1, 1], vec![0, 1]]);
        assert!(row_space(&m).equal(&Subspace::full(2)));
    }

    #[test]
    fn intersect_examples() {
        let full = Subspace::full(3);
        let s = Subspace::from_rows(3, vec![vec![(0, int(1)), (1, int(5))]]);
        assert!(full.intersect(&s).equal(&s));

        let e1 = Subspace::from_rows(2, vec![unit(2, 0)]);
        let e2 = Subspace::from_rows(2, vec![unit(2, 1)]);
        assert!(e1.intersect(&e2).is_zero());

        // span{e1+e2, e3} ∩ span{e1+e2, e1} = span{e1+e2}
        let v12: SparseVec = vec![(0, int(1)), (1, int(1))];
        let a = Subspace::from_rows(3, vec![v12.clone(), unit(3, 2)]);
        let b = Subspace::from_rows(3, vec![v12.clone(), unit(3, 0)]);
        let expected = Subspace::from_rows(3, vec![v12]);
        assert!(a.intersect(&b).equal(&expected));
    }

    #[test]
    fn reduce_detects_membership() {
        let s = Subspace::from_rows(
            3,
            vec![vec![(0, int(1)), (2, int(1))], vec![(1, int(1)), (2, int(-1))]],
        );
        let member: SparseVec = vec![(0, int(2)), (1, int(2))];
        assert!(s.contains_vector(&member));
        assert!(!s.contains_vector(&unit(3, 0)));
    }
}
