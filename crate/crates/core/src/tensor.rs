//! The enhanced tensor space and its canonical basis.
//!
//! `V` is an `n`-dimensional space with basis `e_1, .., e_n`; the enhanced
//! space `W = V + C*eta` appends one extra line, so `dim W = n + 1`. The
//! `r`-fold tensor power of `W` carries three commuting structures used all
//! over the crate:
//!
//! * the place-permutation action of the symmetric group `S_r`,
//! * the diagonal action of `GL(n+1)` (and its Lie-algebra derivation),
//! * the sector decomposition: a basis tensor factors as `V`-vectors on a
//!   set of positions `I` and `eta` elsewhere, and the span of the tensors
//!   with a fixed `I` is the sector of `I`.
//!
//! All matrices are written in the lexicographic basis order of
//! multi-indices; that single global convention is what makes subspaces
//! assembled by different modules directly comparable.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::{rank, SparseMatrix, SparseVec};
use crate::perm::Permutation;
use crate::scalar::{one, Rational};

/// Dimensions of the problem: `n = dim V`, `r` = tensor degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Space {
    n: usize,
    r: usize,
}

impl Space {
    pub fn new(n: usize, r: usize) -> Self {
        assert!(n >= 1 && r >= 1, "need n >= 1 and r >= 1");
        let space = Space { n, r };
        assert!(
            checked_power(n + 1, r).is_some(),
            "(n+1)^r overflows usize"
        );
        space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `n + 1`, the dimension of the enhanced space.
    pub fn enhanced_dim(&self) -> usize {
        self.n + 1
    }

    /// `(n+1)^r`, the dimension of the tensor space.
    pub fn dim(&self) -> usize {
        checked_power(self.n + 1, self.r).unwrap()
    }

    /// The digit representing `eta`.
    pub fn eta(&self) -> usize {
        self.n
    }

    /// All multi-indices in lexicographic order; this order fixes the matrix
    /// coordinates used everywhere.
    pub fn basis(&self) -> Vec<MultiIndex> {
        (0..self.dim()).map(|k| MultiIndex::from_rank(self, k)).collect()
    }

    /// Multi-indices whose sector is exactly `I`, in lexicographic order.
    pub fn sector_basis(&self, sector: SectorSet) -> Vec<MultiIndex> {
        sector.assert_fits(self.r);
        let members = sector.members();
        let count = checked_power(self.n, members.len()).unwrap();
        let mut out = Vec::with_capacity(count);
        for mut code in 0..count {
            let mut entries = vec![self.eta(); self.r];
            // Decode most-significant-first so the output is lexicographic.
            for &pos in members.iter().rev() {
                entries[pos] = code % self.n;
                code /= self.n;
            }
            out.push(MultiIndex { entries });
        }
        out
    }
}

fn checked_power(base: usize, exp: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// A point of `{1..n+1}^r` indexing a basis tensor, stored 0-based; the digit
/// `n` stands for `eta`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    entries: Vec<usize>,
}

impl MultiIndex {
    pub fn new(space: &Space, entries: Vec<usize>) -> Self {
        assert_eq!(entries.len(), space.r, "wrong degree");
        assert!(entries.iter().all(|&e| e <= space.n), "digit out of range");
        MultiIndex { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Lexicographic rank; the linear coordinate of the basis tensor.
    pub fn rank(&self, space: &Space) -> usize {
        let base = space.enhanced_dim();
        self.entries.iter().fold(0, |acc, &d| acc * base + d)
    }

    pub fn from_rank(space: &Space, mut rank: usize) -> Self {
        let base = space.enhanced_dim();
        let mut entries = vec![0; space.r];
        for slot in (0..space.r).rev() {
            entries[slot] = rank % base;
            rank /= base;
        }
        debug_assert_eq!(rank, 0, "rank out of range");
        MultiIndex { entries }
    }

    /// Positions carrying a `V`-vector (digit < n).
    pub fn sector(&self, space: &Space) -> SectorSet {
        let mut mask = 0u32;
        for (k, &d) in self.entries.iter().enumerate() {
            if d < space.n {
                mask |= 1 << k;
            }
        }
        SectorSet(mask)
    }

    /// Place permutation: `(sigma . i)_{sigma(k)} = i_k`, matching the action
    /// of the symmetric group on basis tensors.
    pub fn permute(&self, sigma: &Permutation) -> MultiIndex {
        let mut entries = vec![0; self.entries.len()];
        for (k, &d) in self.entries.iter().enumerate() {
            entries[sigma.apply(k)] = d;
        }
        MultiIndex { entries }
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based for readability, matching the usual tuple notation.
        let items: Vec<String> = self.entries.iter().map(|d| (d + 1).to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Subset of tensor positions `{0, .., r-1}` as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectorSet(pub u32);

impl SectorSet {
    pub const EMPTY: SectorSet = SectorSet(0);

    pub fn from_members(members: &[usize]) -> Self {
        let mut mask = 0u32;
        for &k in members {
            assert!(k < 32);
            mask |= 1 << k;
        }
        SectorSet(mask)
    }

    /// `{0, .., l-1}`.
    pub fn first(l: usize) -> Self {
        assert!(l <= 32);
        SectorSet(((1u64 << l) - 1) as u32)
    }

    pub fn size(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, k: usize) -> bool {
        k < 32 && self.0 & (1 << k) != 0
    }

    pub fn members(&self) -> Vec<usize> {
        (0..32).filter(|&k| self.contains(k)).collect()
    }

    pub fn complement(&self, r: usize) -> SectorSet {
        SectorSet(!self.0 & (((1u64 << r) - 1) as u32))
    }

    pub fn assert_fits(&self, r: usize) {
        assert!(
            u64::from(self.0) < (1u64 << r),
            "sector does not fit in {r} positions"
        );
    }

    /// All subsets of `{0..r-1}`, ascending as masks.
    pub fn all(r: usize) -> Vec<SectorSet> {
        (0..(1u64 << r)).map(|m| SectorSet(m as u32)).collect()
    }

    /// All subsets of size `l`, ascending as masks.
    pub fn all_of_size(r: usize, l: usize) -> Vec<SectorSet> {
        SectorSet::all(r).into_iter().filter(|s| s.size() == l).collect()
    }

    /// Image under a permutation of positions.
    pub fn map(&self, sigma: &Permutation) -> SectorSet {
        SectorSet::from_members(&sigma.apply_set(&self.members()))
    }
}

impl fmt::Debug for SectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members().iter().map(|k| (k + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Sparse exact element of the tensor space.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    space: Space,
    coeffs: BTreeMap<MultiIndex, Rational>,
}

impl Tensor {
    pub fn zero(space: Space) -> Self {
        Tensor {
            space,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_vector(space: Space, index: MultiIndex) -> Self {
        let mut t = Tensor::zero(space);
        t.add_term(index, one());
        t
    }

    /// Expansion of a pure tensor `f_1 (x) .. (x) f_r` given the coordinate
    /// vectors of the factors in the enhanced space.
    pub fn pure(space: Space, factors: &[Vec<Rational>]) -> Self {
        assert_eq!(factors.len(), space.r(), "need r factors");
        for f in factors {
            assert_eq!(f.len(), space.enhanced_dim(), "factor dimension mismatch");
        }
        let mut t = Tensor::zero(space);
        let mut stack: Vec<(usize, Vec<usize>, Rational)> = vec![(0, Vec::new(), one())];
        while let Some((slot, prefix, coeff)) = stack.pop() {
            if slot == space.r() {
                t.add_term(MultiIndex { entries: prefix }, coeff);
                continue;
            }
            for (digit, v) in factors[slot].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut next = prefix.clone();
                next.push(digit);
                stack.push((slot + 1, next, &coeff * v));
            }
        }
        t
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, index: &MultiIndex) -> Rational {
        self.coeffs.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, index: MultiIndex, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.space, other.space);
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.space, other.space);
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.space);
        }
        Tensor {
            space: self.space,
            coeffs: self.coeffs.iter().map(|(i, v)| (i.clone(), v * c)).collect(),
        }
    }

    /// Coordinates in the canonical basis (sorted by rank).
    pub fn to_vec(&self) -> SparseVec {
        self.coeffs
            .iter()
            .map(|(i, v)| (i.rank(&self.space), v.clone()))
            .collect()
    }

    pub fn from_vec(space: Space, v: &SparseVec) -> Tensor {
        let mut t = Tensor::zero(space);
        for (idx, val) in v {
            t.add_term(MultiIndex::from_rank(&space, *idx), val.clone());
        }
        t
    }

    /// Apply an operator written in the canonical basis.
    pub fn apply(&self, m: &SparseMatrix) -> Tensor {
        Tensor::from_vec(self.space, &m.apply(&self.to_vec()))
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, v)| format!("{v}*{i:?}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Matrix of the place-permutation action: basis tensor of `i` goes to the
/// basis tensor of `sigma . i`. A group homomorphism into permutation matrices.
pub fn psi_matrix(space: &Space, sigma: &Permutation) -> SparseMatrix {
    assert_eq!(sigma.degree(), space.r(), "permutation degree mismatch");
    let d = space.dim();
    SparseMatrix::from_entries(
        d,
        d,
        (0..d).map(|j| {
            let idx = MultiIndex::from_rank(space, j);
            (idx.permute(sigma).rank(space), j, one())
        }),
    )
}

/// Error for a non-invertible group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularMatrix;

impl fmt::Display for SingularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix is singular")
    }
}

impl std::error::Error for SingularMatrix {}

/// Matrix of the diagonal action of `g` on the tensor space: the `r`-fold
/// Kronecker power. Multiplicative in `g`; rejects singular input.
pub fn phi_matrix(space: &Space, g: &SparseMatrix) -> Result<SparseMatrix, SingularMatrix> {
    let d = space.enhanced_dim();
    assert_eq!((g.rows(), g.cols()), (d, d), "element must be (n+1)x(n+1)");
    if rank(g) != d {
        return Err(SingularMatrix);
    }
    let mut acc = g.clone();
    for _ in 1..space.r() {
        acc = acc.kron(g);
    }
    Ok(acc)
}

/// Derivation (Leibniz) action of a Lie-algebra element: `X` applied in each
/// slot in turn, summed. Satisfies `lie([X,Y]) = [lie(X), lie(Y)]`.
pub fn lie_derivation(space: &Space, x: &SparseMatrix) -> SparseMatrix {
    let n1 = space.enhanced_dim();
    assert_eq!((x.rows(), x.cols()), (n1, n1), "element must be (n+1)x(n+1)");
    let d = space.dim();
    let by_col = x.transpose();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for j in 0..d {
        let idx = MultiIndex::from_rank(space, j);
        for slot in 0..space.r() {
            let digit = idx.entries()[slot];
            for (target, val) in by_col.row(digit) {
                let mut out = idx.clone();
                out.entries[slot] = *target;
                entries.push((out.rank(space), j, val.clone()));
            }
        }
    }
    SparseMatrix::from_entries(d, d, entries)
}

/// Diagonal idempotent projecting onto the span of the multi-indices whose
/// sector has exactly `l` elements. The `r+1` projections sum to the identity.
pub fn sector_projection(space: &Space, l: usize) -> SparseMatrix {
    assert!(l <= space.r(), "sector size out of range");
    let d = space.dim();
    SparseMatrix::from_entries(
        d,
        d,
        (0..d).filter_map(|j| {
            let idx = MultiIndex::from_rank(space, j);
            (idx.sector(space).size() == l).then(|| (j, j, one()))
        }),
    )
}
