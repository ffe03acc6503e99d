//! Exact combinatorics of cell diagrams and their weight polynomials.
//!
//! The crate revolves around one generating construction: start from a
//! diagram of cells in the first quadrant, repeatedly drop the rightmost cell
//! of a row to the first empty position below it in its column, and sum a
//! monomial for every diagram reached. Specializing the starting diagram
//! recovers the classical polynomial families — Demazure characters from
//! left-justified diagrams, Schubert polynomials from inversion diagrams of
//! permutations, and the lock and skew families from right-justified and
//! shifted diagrams — together with their slide-polynomial expansions and
//! quasisymmetric stable limits.
//!
//! Modules:
//! - [`composition`]: weak/strong compositions, partitions, dominance and
//!   refinement orders.
//! - [`diagram`]: cell diagrams, canonical constructors, structural
//!   predicates, text formats.
//! - [`perm`]: permutations, Lehmer codes, the vexillary test.
//! - [`moves`]: the move engine — closure enumeration and its distinguished
//!   subsets.
//! - [`poly`]: exact sparse polynomials, divided differences, all bases,
//!   triangular expansion.
//! - [`tableaux`]: lock tableaux and extended tableaux with their descent
//!   statistics.
//! - [`stable`]: quasisymmetric stable limits, basis conversion, Schur and
//!   skew-Schur oracles.

pub mod composition;
pub mod diagram;
pub mod error;
pub mod moves;
pub mod perm;
pub mod poly;
pub mod stable;
pub mod tableaux;

pub use composition::{
    compositions_of, descending_lex, dominance_le, dominance_lt, refines, Partition,
    StrongComposition, WeakComposition,
};
pub use diagram::{
    diagram_from_json, diagram_to_json, format_diagram, is_demazure, is_demazure_by_counts,
    is_fundamental, is_split, key_diagram, lock_diagram, parse_cell_list, parse_diagram,
    rothe_diagram, skew_diagram, Cell, Diagram,
};
pub use error::{Error, Result};
pub use moves::{
    destandardize, diagram_cap, enumerate_fkd, enumerate_kd, enumerate_kd_capped, enumerate_mkd,
    kohnert_move, kohnert_polynomial, KohnertSet, DEFAULT_DIAGRAM_CAP,
};
pub use perm::{all_permutations, is_vexillary, parse_permutation, Permutation};
pub use poly::{
    demazure_character, divided_difference, expand_in_kohnert_basis, fundamental_qsym_poly,
    fundamental_slide, is_quasisymmetric, lock_polynomial, monomial_qsym_poly, monomial_slide,
    pi, schubert, skew_polynomial, Polynomial,
};
pub use stable::{
    extended_schur, kohnert_qsym, kohnert_qsym_lift, kohnert_qsym_monomial, schur_expand,
    skew_schur,
    skew_stable_data, Basis, QSymSeries,
};
pub use tableaux::{
    descent_composition, enumerate_lock_tableaux, enumerate_qlt, enumerate_set, enumerate_sset,
    lock_label, ExtendedTableau, LockTableau,
};
