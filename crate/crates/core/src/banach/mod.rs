//! Finite-scale Banach-representation calculus.
//!
//! Everything here is a finite, exact-rational shadow of a sequence-space
//! computation: evaluation-sequence norms over a compact family, the node
//! basis of the function space of a compact hereditary family, the
//! cylinder-function representation of a supremum of measures, sign-average
//! identities, and the block-sequence/bounded/tall coloring stack.

mod eval;
mod node;
mod represent;
mod signs;
mod tall;
mod vectors;

pub use eval::{eval_norm, eval_norm_unit, schreier_lower_bound_audit};
pub use node::NodeBasisSpace;
pub use represent::{build_representation, Representation};
pub use signs::{halving_subset, sign_average_report, unconditional_norm, SignAverageReport};
pub use tall::{tall_bound_audit, tall_colorings, witness_family, TallBoundAudit};
pub use vectors::{
    bs_gap_audit, c0_hom1_audit, dyadic_density, dyadic_l2_partials, l1_norm,
    rademacher_sequence, ruled_interval_sequence, unit_coeffs, BanachError, C0NonPProfile,
    FinVectorSeq, VectorModel,
};
