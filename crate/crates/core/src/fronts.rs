//! Nash-Williams uniform fronts with symbolic ranks.
//!
//! Fronts are represented intensionally: a front is a rule that, given the
//! least element `n` of the base set, produces the residual front on the
//! tail past `n`. Rank-0 is `{∅}`; a rank-`α` front has residuals of rank
//! `α_n` with `α_n + 1 = α` (successor) or `α_n ↗ α` along the canonical
//! fundamental sequence (limit). Enumeration happens on demand over a
//! window; no front is ever materialized globally.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ordinals::{OrdinalCnf, OrdinalError};
use crate::sets::{CompactFamily, FinSet, SetFamily};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrontError {
    #[error("prefix {0} is too short: the front recursion exhausted it")]
    PrefixTooShort(String),
    #[error("rank-0 front has no residuals")]
    NoResidual,
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

/// A uniform front, given by structure rather than extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniformFront {
    /// `{∅}`, the unique rank-0 front.
    Empty,
    /// `[M]^d` for `d ≥ 1`; rank `d`.
    Cube(u32),
    /// The Schreier barrier `{s : #s = min s + 1}`; rank ω.
    Schreier,
    /// `A ⊕ B = {s ∪ t : s ∈ B, t ∈ A, s < t}`; rank `rank(A) + rank(B)`.
    OPlus(Box<UniformFront>, Box<UniformFront>),
    /// `A ⊗ B = {s_1 ∪ … ∪ s_k : s_i ∈ A blocks, {min s_i} ∈ B}`;
    /// rank `rank(A) · rank(B)`.
    OTimes(Box<UniformFront>, Box<UniformFront>),
    /// Explicit finite-rank step rule, produced by [`uniform_envelope`].
    StepMap {
        rank: u32,
        steps: BTreeMap<u32, UniformFront>,
        default: Box<UniformFront>,
    },
}

impl UniformFront {
    /// `[M]^d`, normalizing `d = 0` to the rank-0 front.
    pub fn cube(d: u32) -> UniformFront {
        if d == 0 { UniformFront::Empty } else { UniformFront::Cube(d) }
    }

    /// `A ⊕ B`; rank is the ordinal sum `rank(A) + rank(B)`.
    pub fn oplus(a: UniformFront, b: UniformFront) -> UniformFront {
        if a.rank().is_zero() {
            return b;
        }
        if b.rank().is_zero() {
            return a;
        }
        UniformFront::OPlus(Box::new(a), Box::new(b))
    }

    /// `A ⊗ B`; rank is the ordinal product `rank(A) · rank(B)`.
    pub fn otimes(a: UniformFront, b: UniformFront) -> UniformFront {
        if b.rank().is_zero() || a.rank().is_zero() {
            // no blocks to take, or only empty blocks: the member is ∅
            return UniformFront::Empty;
        }
        if a == UniformFront::Cube(1) {
            return b;
        }
        if b == UniformFront::Cube(1) {
            return a;
        }
        UniformFront::OTimes(Box::new(a), Box::new(b))
    }

    pub fn rank(&self) -> OrdinalCnf {
        match self {
            UniformFront::Empty => OrdinalCnf::zero(),
            UniformFront::Cube(d) => OrdinalCnf::finite(*d as u64),
            UniformFront::Schreier => OrdinalCnf::omega(),
            UniformFront::OPlus(a, b) => a.rank().add(&b.rank()),
            UniformFront::OTimes(a, b) => {
                a.rank().mul(&b.rank()).expect("front ranks stay below omega^omega")
            }
            UniformFront::StepMap { rank, .. } => OrdinalCnf::finite(*rank as u64),
        }
    }

    /// The residual front `A_{{n}} = {s : n < s, {n} ∪ s ∈ A}`.
    pub fn residual(&self, n: u32) -> Result<UniformFront, FrontError> {
        match self {
            UniformFront::Empty => Err(FrontError::NoResidual),
            UniformFront::Cube(d) => Ok(UniformFront::cube(d - 1)),
            UniformFront::Schreier => Ok(UniformFront::cube(n)),
            UniformFront::OPlus(a, b) => Ok(UniformFront::oplus(
                a.as_ref().clone(),
                b.residual(n)?,
            )),
            UniformFront::OTimes(a, b) => {
                // first block starts at n; afterwards the remaining blocks
                // form a member of A ⊗ B_{{n}}
                let rest = UniformFront::otimes(a.as_ref().clone(), b.residual(n)?);
                Ok(UniformFront::oplus(rest, a.residual(n)?))
            }
            UniformFront::StepMap { steps, default, .. } => {
                Ok(steps.get(&n).cloned().unwrap_or_else(|| default.as_ref().clone()))
            }
        }
    }

    /// The unique initial segment of `m` belonging to the front.
    pub fn step(&self, m: &FinSet) -> Result<FinSet, FrontError> {
        if self.rank().is_zero() {
            return Ok(FinSet::EMPTY);
        }
        let n = m.min_elem().ok_or_else(|| FrontError::PrefixTooShort(m.to_string()))?;
        let rest = self
            .residual(n)?
            .step(&m.remove(n))
            .map_err(|_| FrontError::PrefixTooShort(m.to_string()))?;
        Ok(rest.insert(n))
    }

    /// Membership: `s` is a member iff the step of `s` consumes it exactly.
    pub fn contains(&self, s: &FinSet) -> bool {
        self.step(s) == Ok(*s)
    }

    /// All members fully contained in the window set `m`.
    pub fn enumerate(&self, m: &FinSet) -> Vec<FinSet> {
        if self.rank().is_zero() {
            return vec![FinSet::EMPTY];
        }
        let mut out = Vec::new();
        for n in m.iter() {
            let residual = self.residual(n).expect("positive rank has residuals");
            for tail in residual.enumerate(&m.tail_past(n)) {
                out.push(tail.insert(n));
            }
        }
        out
    }

    /// Members as a [`SetFamily`] on `[0, window)`.
    pub fn enumerate_family(&self, window: u32) -> SetFamily {
        SetFamily::new(self.enumerate(&FinSet::window(window)), window)
            .expect("members live inside the window")
    }
}

impl fmt::Display for UniformFront {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniformFront::Empty => write!(f, "cube(0)"),
            UniformFront::Cube(d) => write!(f, "cube({d})"),
            UniformFront::Schreier => write!(f, "schreier"),
            UniformFront::OPlus(a, b) => write!(f, "oplus({a},{b})"),
            UniformFront::OTimes(a, b) => write!(f, "otimes({a},{b})"),
            UniformFront::StepMap { rank, .. } => write!(f, "envelope[rank={rank}]"),
        }
    }
}

/// The Schreier barrier `{s : #s = min s + 1}`.
pub fn schreier_front() -> UniformFront {
    UniformFront::Schreier
}

/// `front_step` as a free function, matching the operation table.
pub fn front_step(front: &UniformFront, m: &FinSet) -> Result<FinSet, FrontError> {
    front.step(m)
}

/// Rank of the well-founded prefix tree `(fam, ⊏)` of a hereditary family.
fn prefix_tree_rank(fam: &SetFamily) -> u32 {
    fn rank_below(fam: &SetFamily, prefix: FinSet, start: u32) -> u32 {
        let mut best = 0;
        for n in start..fam.window() {
            let node = prefix.insert(n);
            if fam.contains(&node) {
                best = best.max(1 + rank_below(fam, node, n + 1));
            }
        }
        best
    }
    rank_below(fam, FinSet::EMPTY, 0)
}

/// A uniform front on `m` whose ⊑-closure contains the compact family.
///
/// The recursion mirrors the prefix tree of the family: the residual at `n`
/// is an envelope of the residual family, padded by a cube of high elements
/// to reach the uniform rank. The returned rank equals the rank of the
/// prefix tree `(G, ⊏)` restricted to `m`.
pub fn uniform_envelope(g: &CompactFamily, m: &FinSet) -> UniformFront {
    fn env(fam: &SetFamily, m: &FinSet) -> UniformFront {
        let rank = prefix_tree_rank(fam);
        if rank == 0 {
            return UniformFront::Empty;
        }
        let mut steps = BTreeMap::new();
        for n in m.iter() {
            let residual_members: Vec<FinSet> = fam
                .iter()
                .filter(|s| s.min_elem() == Some(n))
                .map(|s| s.remove(n))
                .collect();
            let residual =
                SetFamily::new(residual_members, fam.window()).expect("within window");
            let mut step = env(&residual, &m.tail_past(n));
            let sub_rank = prefix_tree_rank(&residual);
            debug_assert!(sub_rank < rank);
            if sub_rank < rank - 1 {
                // pad with a cube of later elements; prefixes of padded
                // members still begin with the unpadded ones, so the
                // closure keeps the residual family.
                step = UniformFront::oplus(UniformFront::cube(rank - 1 - sub_rank), step);
            }
            steps.insert(n, step);
        }
        UniformFront::StepMap {
            rank,
            steps,
            default: Box::new(UniformFront::cube(rank - 1)),
        }
    }
    let restricted = g.family().restrict(m);
    env(&restricted, m)
}
