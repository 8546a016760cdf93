//! Exact-arithmetic workbench for tensor-space centralizer algebras.
//!
//! The crate builds, over the rationals and with no rounding anywhere, the
//! objects attached to the maximal parabolic subgroup of `GL(n+1)` acting on
//! the `r`-fold tensor power of its natural module: the symmetric-group and
//! group actions on the tensor space, the finite-dimensional degenerate
//! double Hecke algebra `D(n,r)`, centralizer algebras of the full, Levi,
//! parabolic and unipotent subgroups, and the mixed-tensor invariant space.
//! On top of those it provides machine checks that the classical, Levi and
//! parabolic Schur-Weyl dualities hold as equalities of canonically
//! represented subspaces of operator space, at desk scale in `n` and `r`.
//!
//! Everything is computed twice where a theorem offers two routes (explicit
//! construction versus commutant kernel), and subspaces are always kept in
//! reduced row echelon form so equality is literal structural equality.

pub mod scalar;

pub mod linalg;

pub mod perm;

pub mod tensor;

pub mod group;

pub mod ddha;

pub mod dualities;
