//! Deciding nonvanishing of Schubert polynomial coefficients in polynomial
//! time, and counting them exactly.
//!
//! The decision pipeline never expands a polynomial: it reduces the question
//! `c_{alpha,w} > 0 ?` to membership of a lattice point in the Schubitope of
//! the Rothe diagram of `w`, and decides that membership by exact-rational
//! linear-programming feasibility over a column-compressed constraint system.
//! All arithmetic in the feasibility layer is exact; there is no tolerance
//! parameter anywhere.
//!
//! Counting goes through the transition recurrence: the transition tree of a
//! permutation is expanded down to vexillary leaves, whose polynomials are
//! flagged Schur functions, and coefficients are summed from flagged-tableau
//! contents.
//!
//! Every layer has an independent desk-scale oracle next to it (divided
//! differences, tableau enumeration, subset brute force over the Schubitope
//! halfspaces) so the fast paths can be cross-checked exhaustively on small
//! symmetric groups.
//!
//! Module map:
//! - [`perm`]: permutations, codes, Rothe diagrams, essential sets,
//!   accessible boxes, pivots, vexillarity.
//! - [`word`]: column words, the theta halfspace function, the greedy
//!   tableau, and brute-force Schubitope membership.
//! - [`tableau`]: tableau predicates and enumeration oracles, flagged
//!   semistandard tableaux, row-count matrices.
//! - [`lp`]: exact-rational feasibility systems, column compression,
//!   phase-1 simplex, integral vertices, total unimodularity.
//! - [`schubert`]: divided differences, the nonvanishing decision, the
//!   transition tree, flagged Schur functions, coefficient counting.
//! - [`poly`]: sparse multivariate polynomials with integer coefficients.
//! - [`text`]: parsing of permutations/codes/partitions and ASCII rendering
//!   of diagrams and transition trees.

pub mod error;
pub mod lp;
pub mod perm;
pub mod poly;
pub mod schubert;
pub mod sweep;
pub mod tableau;
pub mod text;
pub mod word;

pub use error::Error;
pub use perm::{Cell, Code, Diagram, Permutation};
pub use poly::MultiPoly;
pub use tableau::Tableau;

/// Convenience alias used throughout the feasibility layer.
pub type Rational = num::BigRational;
