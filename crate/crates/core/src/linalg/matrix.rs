//! Sparse vectors and matrices over the rationals.
//!
//! A vector is a sorted coordinate list; a matrix is a list of sparse rows.
//! Neither ever stores an explicit zero. Matrices are immutable values:
//! every operation returns a fresh matrix.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::scalar::{one, Rational};

/// Sparse coordinate vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

/// `dst += c * src`, keeping the sparse invariants.
pub fn vec_add_scaled(dst: &SparseVec, c: &Rational, src: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return dst.clone();
    }
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() && j < src.len() {
        match dst[i].0.cmp(&src[j].0) {
            std::cmp::Ordering::Less => {
                out.push(dst[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((src[j].0, c * &src[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &dst[i].1 + c * &src[j].1;
                if !v.is_zero() {
                    out.push((dst[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&dst[i..]);
    for (k, v) in &src[j..] {
        out.push((*k, c * v));
    }
    out
}

pub fn vec_scale(v: &SparseVec, c: &Rational) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(k, x)| (*k, c * x)).collect()
}

/// Entry at `idx`, if nonzero.
pub fn vec_get<'a>(v: &'a SparseVec, idx: usize) -> Option<&'a Rational> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|p| &v[p].1)
}

/// Sparse exact matrix with `rows x cols` shape, stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zero(n, n);
        for i in 0..n {
            m.data[i].push((i, one()));
        }
        m
    }

    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut map: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            if !v.is_zero() {
                let slot = map.entry((r, c)).or_insert_with(Rational::zero);
                *slot += v;
            }
        }
        let mut m = SparseMatrix::zero(rows, cols);
        for ((r, c), v) in map {
            if !v.is_zero() {
                m.data[r].push((c, v));
            }
        }
        m
    }

    /// Dense row-major integer literal, mostly for tests.
    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        SparseMatrix::from_entries(
            r,
            c,
            rows.iter().enumerate().flat_map(|(i, row)| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter()
                    .enumerate()
                    .map(move |(j, &v)| (i, j, crate::scalar::int(v)))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SparseVec> {
        self.data.iter()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        vec_get(&self.data[r], c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let c = one();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| vec_add_scaled(a, &c, b))
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let c = -one();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| vec_add_scaled(a, &c, b))
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| vec_scale(r, c)).collect(),
        }
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let slot = acc.entry(*j).or_insert_with(Rational::zero);
                    *slot += a * b;
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Matrix-vector product, treating `v` as a sparse column.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, row) in self.data.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            let mut s = Rational::zero();
            let (mut a, mut b) = (0usize, 0usize);
            while a < row.len() && b < v.len() {
                match row[a].0.cmp(&v[b].0) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        s += &row[a].1 * &v[b].1;
                        a += 1;
                        b += 1;
                    }
                }
            }
            if !s.is_zero() {
                acc.insert(i, s);
            }
        }
        acc.into_iter().collect()
    }

    /// Kronecker product; block structure follows the row-major index
    /// convention `(i1 * other.rows + i2, j1 * other.cols + j2)`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![Vec::new(); rows];
        for (i1, r1) in self.data.iter().enumerate() {
            for (i2, r2) in other.data.iter().enumerate() {
                let out = &mut data[i1 * other.rows + i2];
                for (j1, a) in r1 {
                    for (j2, b) in r2 {
                        out.push((j1 * other.cols + j2, a * b));
                    }
                }
                out.sort_by_key(|e| e.0);
            }
        }
        SparseMatrix { rows, cols, data }
    }

    /// Row-major flattening of a `d x d` operator into a length `d*d` vector.
    pub fn flatten(&self) -> SparseVec {
        let mut out = Vec::with_capacity(self.nnz());
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out.push((i * self.cols + j, v.clone()));
            }
        }
        out
    }

    /// Inverse of [`SparseMatrix::flatten`] for square `d x d` operators.
    pub fn from_flat(d: usize, v: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zero(d, d);
        for (idx, val) in v {
            assert!(*idx < d * d, "flat index out of bounds");
            m.data[idx / d].push((idx % d, val.clone()));
        }
        m
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.data.iter().enumerate() {
            if !row.is_empty() {
                let items: Vec<String> = row.iter().map(|(j, v)| format!("{j}:{v}")).collect();
                writeln!(f, "  row {i}: {}", items.join(" "))?;
            }
        }
        write!(f, "]")
    }
}
