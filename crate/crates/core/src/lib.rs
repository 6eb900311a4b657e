//! Exact finite-scale combinatorics of submeasure ideals.
//!
//! This crate makes a family of classically infinitary constructions
//! executable on finite windows, with exact rational arithmetic throughout:
//!
//! - [`sets`] — bit-vector finite sets and hereditary set families;
//! - [`measures`] — rational measures, suprema submeasures, Kelley covering
//!   numbers and the covering submeasure ψ;
//! - [`ordinals`] and [`fronts`] — Cantor-normal-form ranks and uniform
//!   fronts (Schreier barrier, ⊕/⊗, envelopes of compact families);
//! - [`colorings`] — pair and front colorings (ℚ-colorings, convergence
//!   coloring, ED_fin, Galvin rules), homogeneity queries and a greedy
//!   Ramsey selector;
//! - [`posets`] — comparability orders with exact Dilworth/Mirsky
//!   decompositions;
//! - [`hyperlab`] — cardinal intervals, Mazur colorings, Gillis bounds,
//!   exact hypergraph chromatic numbers, monochromatic-cover search and
//!   empirical concentration on spaces of equi-surjections;
//! - [`banach`] — evaluation-sequence norms over compact families, the node
//!   basis of C(F), the cylinder-function representation of a supremum of
//!   measures, and sign-average identities.
//!
//! Everything is window-relative: no infinite object is ever materialized,
//! and each operation documents the window it was computed on.

pub mod banach;
pub mod colorings;
pub mod fronts;
pub mod gen;
pub mod hyperlab;
pub mod measures;
pub mod ordinals;
pub mod posets;
pub mod rat;
pub mod sets;

pub use rat::Rat;
pub use sets::{CompactFamily, FinSet, SetFamily};
