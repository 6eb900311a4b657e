//! Finitely supported vector sequences, the block-sequence coloring, its
//! truncation/gap audits, and the literal example sequences.

use std::collections::BTreeMap;

use num::{Signed, Zero};
use thiserror::Error;

use super::node::NodeBasisSpace;
use crate::colorings::PairColoring;
use crate::rat::{half_pow, rabs, rint, Rat};
use crate::sets::FinSet;

#[derive(Debug, Error)]
pub enum BanachError {
    #[error("set {0} is not 1-homogeneous for the block-sequence coloring")]
    NotHomogeneous(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("operation requires the coordinate model")]
    NotCoordinateModel,
    #[error("operation requires a node-basis model")]
    NotNodeModel,
    #[error("operation requires nonnegative vectors")]
    NotNonnegative,
    #[error("set {0} does not decompose over the doubled front")]
    NotInFront(String),
}

/// Which space the coefficient lists live in.
#[derive(Debug, Clone)]
pub enum VectorModel {
    /// Sup-norm sequence space: `‖x‖ = max_k |x(k)|`.
    Coordinate,
    /// Node-basis coefficients of the function space of a compact family.
    Node(NodeBasisSpace),
}

/// A finite sequence of finitely supported vectors.
#[derive(Debug, Clone)]
pub struct FinVectorSeq {
    vectors: Vec<BTreeMap<u32, Rat>>,
    model: VectorModel,
    nonneg: bool,
}

impl FinVectorSeq {
    pub fn new(vectors: Vec<BTreeMap<u32, Rat>>, model: VectorModel) -> Self {
        let mut vectors = vectors;
        for v in &mut vectors {
            v.retain(|_, c| !c.is_zero());
        }
        let nonneg = match &model {
            VectorModel::Coordinate => {
                vectors.iter().all(|v| v.values().all(|c| !c.is_negative()))
            }
            VectorModel::Node(space) => vectors.iter().all(|v| {
                let coeffs = dense(v, space.len());
                space
                    .family()
                    .members()
                    .iter()
                    .all(|t| !space.node_eval(&coeffs, t).is_negative())
            }),
        };
        FinVectorSeq { vectors, model, nonneg }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn model(&self) -> &VectorModel {
        &self.model
    }

    pub fn nonneg(&self) -> bool {
        self.nonneg
    }

    pub fn vector(&self, n: usize) -> &BTreeMap<u32, Rat> {
        &self.vectors[n]
    }

    pub fn coeff(&self, n: usize, k: u32) -> Rat {
        self.vectors[n].get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn max_supp(&self, n: usize) -> Option<u32> {
        self.vectors[n].keys().next_back().copied()
    }

    /// `Σ_{n∈F} a_n x_n` as a coefficient map.
    pub fn combo(&self, f: &FinSet, a: &[Rat]) -> BTreeMap<u32, Rat> {
        let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
        for n in f.iter() {
            let Some(v) = self.vectors.get(n as usize) else { continue };
            let scale = a.get(n as usize).cloned().unwrap_or_else(Rat::zero);
            if scale.is_zero() {
                continue;
            }
            for (k, c) in v {
                let entry = acc.entry(*k).or_insert_with(Rat::zero);
                *entry += scale.clone() * c.clone();
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    /// Norm of a coefficient map in this sequence's model.
    pub fn norm_of(&self, combo: &BTreeMap<u32, Rat>) -> Rat {
        match &self.model {
            VectorModel::Coordinate => {
                combo.values().map(rabs).max().unwrap_or_else(Rat::zero)
            }
            VectorModel::Node(space) => {
                let coeffs = dense(combo, space.len());
                space.sup_norm(&coeffs)
            }
        }
    }

    /// `‖Σ_{n∈F} a_n x_n‖`.
    pub fn sum_norm(&self, f: &FinSet, a: &[Rat]) -> Rat {
        let combo = self.combo(f, a);
        self.norm_of(&combo)
    }

    pub fn norm_of_vector(&self, n: usize) -> Rat {
        self.norm_of(&self.vectors[n])
    }

    /// The block-sequence color of a pair `m < n`: 1 exactly when the
    /// supports are aligned and every low coordinate of `x_n` is below the
    /// geometric threshold `1/(2^{k+1}·2^{m+1})`.
    pub fn bs_color(&self, m: usize, n: usize) -> u8 {
        assert!(m < n && n < self.len());
        let Some(cut) = self.max_supp(m) else {
            return 1; // empty support: both clauses are vacuous
        };
        if self.max_supp(n).is_none_or(|mn| mn < cut) {
            return 0;
        }
        let threshold_base = half_pow(m as u32 + 1);
        for (k, c) in &self.vectors[n] {
            if *k > cut {
                break;
            }
            if rabs(c) > half_pow(k + 1) * threshold_base.clone() {
                return 0;
            }
        }
        1
    }

    /// The block-sequence coloring materialized over the index window.
    pub fn bs_pair_coloring(&self) -> PairColoring {
        PairColoring::from_fn(self.len() as u32, 2, |m, n| {
            self.bs_color(m as usize, n as usize)
        })
    }

    /// Is every pair of `h` colored 1 by the block-sequence coloring?
    pub fn is_bs_hom1(&self, h: &FinSet) -> bool {
        let elems = h.elems();
        for (i, &m) in elems.iter().enumerate() {
            for &n in elems.iter().skip(i + 1) {
                if self.bs_color(m as usize, n as usize) != 1 {
                    return false;
                }
            }
        }
        true
    }

    /// `x_n^s`: coordinates up to the largest support of earlier members of
    /// `s` are cut to zero. Nonzero truncations form a block sequence.
    pub fn block_truncation(&self, s: &FinSet) -> Vec<(u32, BTreeMap<u32, Rat>)> {
        let mut out = Vec::new();
        let mut prev_max: Option<u32> = None;
        let mut running: Option<u32> = None;
        for n in s.iter() {
            let mut v = self.vectors[n as usize].clone();
            if let Some(cut) = running {
                v.retain(|k, _| *k > cut);
            }
            // the cut for later members includes this vector's full support
            let this_max = self.max_supp(n as usize);
            running = running.max(this_max);
            if !v.is_empty() {
                if let (Some(prev), Some(first)) = (prev_max, v.keys().next()) {
                    debug_assert!(*first > prev, "truncations must be blocks");
                }
                prev_max = v.keys().next_back().copied().or(prev_max);
            }
            out.push((n, v));
        }
        out
    }

    /// `‖Σ_{n∈s} a_n x_n^s‖`.
    pub fn truncated_sum_norm(&self, s: &FinSet, a: &[Rat]) -> Rat {
        let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
        for (n, v) in self.block_truncation(s) {
            let scale = a.get(n as usize).cloned().unwrap_or_else(Rat::zero);
            if scale.is_zero() {
                continue;
            }
            for (k, c) in v {
                let entry = acc.entry(k).or_insert_with(Rat::zero);
                *entry += scale.clone() * c.clone();
            }
        }
        acc.retain(|_, c| !c.is_zero());
        self.norm_of(&acc)
    }
}

fn dense(map: &BTreeMap<u32, Rat>, len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (k, c) in map {
        if (*k as usize) < len {
            out[*k as usize] = c.clone();
        }
    }
    out
}

/// Unit coefficient list.
pub fn unit_coeffs(len: usize) -> Vec<Rat> {
    vec![rint(1); len]
}

/// The truncation-gap audit on a 1-homogeneous set:
/// `|‖Σ a_n x_n‖ − ‖Σ a_n x_n^H‖| ≤ max_{n∈H}|a_n| / 2^{min H}`.
pub fn bs_gap_audit(
    x: &FinVectorSeq,
    h: &FinSet,
    a: &[Rat],
) -> Result<(Rat, Rat), BanachError> {
    if !x.is_bs_hom1(h) {
        return Err(BanachError::NotHomogeneous(h.to_string()));
    }
    let full = x.sum_norm(h, a);
    let truncated = x.truncated_sum_norm(h, a);
    let lhs = rabs(&(full - truncated));
    let max_coeff = h
        .iter()
        .map(|n| rabs(&a.get(n as usize).cloned().unwrap_or_else(Rat::zero)))
        .max()
        .unwrap_or_else(Rat::zero);
    let rhs = match h.min_elem() {
        Some(m) => max_coeff * half_pow(m),
        None => Rat::zero(),
    };
    assert!(lhs <= rhs, "truncation gap {lhs} exceeds the bound {rhs} on H = {h}");
    Ok((lhs, rhs))
}

/// Exhaustive audit that partial sums over a 1-homogeneous set in the
/// coordinate model stay below `sup_n ‖x_n‖ + 1`.
pub fn c0_hom1_audit(x: &FinVectorSeq, h: &FinSet) -> Result<(Rat, Rat), BanachError> {
    if !matches!(x.model(), VectorModel::Coordinate) {
        return Err(BanachError::NotCoordinateModel);
    }
    if !x.nonneg() {
        return Err(BanachError::NotNonnegative);
    }
    if h.card() > 20 {
        return Err(BanachError::BudgetExceeded(format!("{} subset exponents", h.card())));
    }
    if !x.is_bs_hom1(h) {
        return Err(BanachError::NotHomogeneous(h.to_string()));
    }
    let ones = unit_coeffs(x.len());
    let sup = (0..x.len()).map(|n| x.norm_of_vector(n)).max().unwrap_or_else(Rat::zero);
    let bound = sup + rint(1);
    let mut best = Rat::zero();
    for f in h.subsets() {
        let v = x.sum_norm(&f, &ones);
        assert!(v <= bound, "‖Σ_F x‖ = {v} exceeds {bound} at F = {f}");
        if v > best {
            best = v;
        }
    }
    Ok((best, bound))
}

/// The signed ℓ₁-model sequence supported on dyadic coordinate blocks:
/// `x_0 = u_0` and, inside block `n` (positions `Δ_n ≤ k < Δ_{n+1}` of the
/// triangular numbers), the Walsh-type sign patterns on the coordinate
/// window `[2^n−1, 2^{n+1}−1)` scaled by `1/(n·2^n)`.
pub fn rademacher_sequence(count: usize) -> FinVectorSeq {
    assert!(count <= 28, "coordinate window exhausted past 28 vectors");
    let tri = |n: u32| n * (n + 1) / 2;
    let mut vectors = Vec::with_capacity(count);
    for k in 0..count as u32 {
        let mut v = BTreeMap::new();
        if k == 0 {
            v.insert(0u32, rint(1));
        } else {
            let n = (1..).find(|&n| tri(n) <= k && k < tri(n + 1)).expect("triangular block");
            let scale = Rat::new(1.into(), ((n as i64) << n).into());
            let exp = tri(n + 1) - 1 - k;
            let lo = (1u32 << n) - 1;
            let hi = (1u32 << (n + 1)) - 1;
            for j in lo..hi {
                let sign = if ((j - lo) >> exp) & 1 == 0 { 1 } else { -1 };
                v.insert(j, scale.clone() * rint(sign));
            }
        }
        vectors.push(v);
    }
    FinVectorSeq::new(vectors, VectorModel::Coordinate)
}

/// ℓ₁ norm of a combination, for the ℓ₁-model examples.
pub fn l1_norm(combo: &BTreeMap<u32, Rat>) -> Rat {
    combo.values().map(rabs).fold(Rat::zero(), |acc, v| acc + v)
}

/// Per-interval profile of the ruled-interval sequence.
#[derive(Debug, Clone)]
pub struct C0NonPProfile {
    pub block: u32,
    pub interval: u32,
    /// Indices of the interval that fall inside the materialized window.
    pub indices: Vec<u32>,
    /// Measured `‖Σ_{k∈I∩window} x_k‖∞`.
    pub measured: Rat,
    /// The two incompatible literal values: the inline per-subset claim
    /// `1/(n+m+1)` and the full-interval value `n+1`. The measured norm is
    /// reported; neither literal is asserted.
    pub literal_small: Rat,
    pub literal_full: Rat,
}

/// The sequence `x_k = u_{m(k)}/(n(k)+m(k)+1)` over a round-robin partition
/// `A_n = {k ≡ n mod blocks}` split into intervals `I_m^n` of cardinality
/// `(n+1)(n+m+1)`, together with the measured sup-norm per interval.
pub fn ruled_interval_sequence(blocks: u32, count: usize) -> (FinVectorSeq, Vec<C0NonPProfile>) {
    assert!(blocks >= 1 && count <= 128);
    let mut vectors = vec![BTreeMap::new(); count];
    let mut profiles = Vec::new();
    for n in 0..blocks {
        // elements of A_n below count, in increasing order
        let members: Vec<u32> =
            (0..count as u32).filter(|k| k % blocks == n).collect();
        let mut at = 0usize;
        let mut m = 0u32;
        while at < members.len() {
            let size = ((n + 1) * (n + m + 1)) as usize;
            let chunk: Vec<u32> = members[at..(at + size).min(members.len())].to_vec();
            let scale = Rat::new(1.into(), (n as i64 + m as i64 + 1).into());
            for &k in &chunk {
                vectors[k as usize].insert(m, scale.clone());
            }
            let measured = scale.clone() * rint(chunk.len() as i64);
            profiles.push(C0NonPProfile {
                block: n,
                interval: m,
                indices: chunk,
                measured,
                literal_small: scale,
                literal_full: rint(n as i64 + 1),
            });
            at += size;
            m += 1;
        }
    }
    (FinVectorSeq::new(vectors, VectorModel::Coordinate), profiles)
}

/// The dyadic-density vectors `y_k = u_n / 2^n` for `k ∈ [2^n−1, 2^{n+1}−1)`.
pub fn dyadic_density(nblocks: u32) -> FinVectorSeq {
    assert!(nblocks <= 7, "coordinate window exhausted past 7 dyadic blocks");
    let count = (1usize << nblocks) - 1;
    let mut vectors = Vec::with_capacity(count);
    for k in 0..count as u32 {
        let n = crate::colorings::dyadic_block(k);
        let mut v = BTreeMap::new();
        v.insert(n, half_pow(n));
        vectors.push(v);
    }
    FinVectorSeq::new(vectors, VectorModel::Coordinate)
}

/// Partial sums of `Σ_n φ_n(A)²` for the dyadic block densities
/// `φ_n(A) = #(A ∩ [2^n−1, 2^{n+1}−1)) / 2^n`.
pub fn dyadic_l2_partials(a: &FinSet, nblocks: u32) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut acc = Rat::zero();
    for n in 0..nblocks {
        let block = FinSet::interval((1 << n) - 1, (1 << (n + 1)) - 1);
        let phi = Rat::new((a.intersect(&block).card() as i64).into(), 1.into()) * half_pow(n);
        acc += phi.clone() * phi;
        out.push(acc.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn coord_seq(vs: Vec<Vec<(u32, Rat)>>) -> FinVectorSeq {
        FinVectorSeq::new(
            vs.into_iter().map(|v| v.into_iter().collect()).collect(),
            VectorModel::Coordinate,
        )
    }

    #[test]
    fn bs_coloring_examples() {
        // disjoint increasing supports → 1
        let x = coord_seq(vec![
            vec![(0, rint(1))],
            vec![(1, rint(1))],
            vec![(2, rint(1))],
        ]);
        assert_eq!(x.bs_color(0, 1), 1);
        assert_eq!(x.bs_color(1, 2), 1);

        // identical unit coordinate: coefficient 1 > 1/2^{m+2} → 0
        let x = coord_seq(vec![vec![(0, rint(1))], vec![(0, rint(1))]]);
        assert_eq!(x.bs_color(0, 1), 0);

        // decreasing max-supports → 0
        let x = coord_seq(vec![vec![(5, rint(1))], vec![(2, rint(1))]]);
        assert_eq!(x.bs_color(0, 1), 0);

        // low coordinate just below the threshold → 1
        let x = coord_seq(vec![
            vec![(0, rint(1))],
            vec![(0, rat(1, 8)), (3, rint(1))], // 1/8 ≤ 1/(2^1·2^2)
        ]);
        assert_eq!(x.bs_color(0, 1), 1);
    }

    #[test]
    fn block_truncation_examples() {
        // already block: unchanged
        let x = coord_seq(vec![vec![(0, rint(1))], vec![(3, rint(2))]]);
        let t = x.block_truncation(&FinSet::of(&[0, 1]));
        assert_eq!(t[0].1, x.vector(0).clone());
        assert_eq!(t[1].1, x.vector(1).clone());

        // overlapping pair: second loses low coordinates
        let x = coord_seq(vec![
            vec![(0, rint(1)), (2, rint(1))],
            vec![(1, rat(1, 16)), (4, rint(1))],
        ]);
        let t = x.block_truncation(&FinSet::of(&[0, 1]));
        assert_eq!(t[1].1, vec![(4u32, rint(1))].into_iter().collect::<BTreeMap<_, _>>());

        // singleton: unchanged head
        let t = x.block_truncation(&FinSet::of(&[1]));
        assert_eq!(t[0].1, x.vector(1).clone());
    }

    #[test]
    fn bs_gap_audit_examples() {
        // block sequence: lhs = 0
        let x = coord_seq(vec![vec![(0, rint(1))], vec![(2, rint(3))]]);
        let ones = unit_coeffs(2);
        let (lhs, _) = bs_gap_audit(&x, &FinSet::of(&[0, 1]), &ones).unwrap();
        assert!(lhs.is_zero());

        // near-block pair with admissible tail mass
        let x = coord_seq(vec![
            vec![(0, rint(1))],
            vec![(0, rat(1, 8)), (2, rint(2))],
        ]);
        let (lhs, rhs) = bs_gap_audit(&x, &FinSet::of(&[0, 1]), &ones).unwrap();
        assert!(lhs <= rhs);
        assert_eq!(rhs, rint(1)); // max |a| = 1, min H = 0

        // zero coefficients → (0, 0)
        let zeros = vec![rint(0), rint(0)];
        let (lhs, rhs) = bs_gap_audit(&x, &FinSet::of(&[0, 1]), &zeros).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());

        // non-homogeneous H is rejected
        let bad = coord_seq(vec![vec![(0, rint(1))], vec![(0, rint(1))]]);
        assert!(matches!(
            bs_gap_audit(&bad, &FinSet::of(&[0, 1]), &ones),
            Err(BanachError::NotHomogeneous(_))
        ));
    }

    #[test]
    fn c0_audit_examples() {
        // disjointly supported unit vectors: sup = 1 ≤ 2
        let x = coord_seq(vec![
            vec![(0, rint(1))],
            vec![(1, rint(1))],
            vec![(2, rint(1))],
        ]);
        let (sup, bound) = c0_hom1_audit(&x, &FinSet::window(3)).unwrap();
        assert_eq!(sup, rint(1));
        assert_eq!(bound, rint(2));

        // geometric tails built to satisfy the thresholds
        let x = coord_seq(vec![
            vec![(0, rint(1))],
            vec![(0, rat(1, 8)), (1, rat(1, 16)), (2, rint(1))],
            vec![(0, rat(1, 16)), (2, rat(1, 64)), (4, rint(1))],
        ]);
        let h = FinSet::window(3);
        assert!(x.is_bs_hom1(&h));
        let (sup, bound) = c0_hom1_audit(&x, &h).unwrap();
        assert!(sup <= bound);

        // singleton H: ‖x‖ ≤ ‖x‖ + 1
        let (sup, bound) = c0_hom1_audit(&x, &FinSet::singleton(1)).unwrap();
        assert!(sup <= bound);
    }

    #[test]
    fn rademacher_values() {
        let x = rademacher_sequence(6);
        // x₁ = ½(0,1,1,0,…)
        assert_eq!(x.coeff(1, 1), rat(1, 2));
        assert_eq!(x.coeff(1, 2), rat(1, 2));
        assert_eq!(x.coeff(1, 0), rint(0));
        // x₂ = ½(0,1,−1,0,…)
        assert_eq!(x.coeff(2, 1), rat(1, 2));
        assert_eq!(x.coeff(2, 2), rat(-1, 2));
        // x₃, x₄, x₅ block patterns on coordinates 3..7
        assert_eq!(x.coeff(3, 3), rat(1, 8));
        assert_eq!(x.coeff(3, 6), rat(1, 8));
        assert_eq!(x.coeff(4, 4), rat(1, 8));
        assert_eq!(x.coeff(4, 5), rat(-1, 8));
        assert_eq!(x.coeff(5, 3), rat(1, 8));
        assert_eq!(x.coeff(5, 4), rat(-1, 8));
        // ‖x₃+x₄+x₅‖₁ = ‖(3,1,1,−1)/8‖₁ = 3/4
        let combo = x.combo(&FinSet::of(&[3, 4, 5]), &unit_coeffs(6));
        assert_eq!(l1_norm(&combo), rat(3, 4));
    }

    #[test]
    fn ruled_interval_profile() {
        let (x, profiles) = ruled_interval_sequence(3, 90);
        // every full interval measures (n+1), not the inline 1/(n+m+1);
        // the two literals only agree on the degenerate one-point interval
        for p in &profiles {
            let full = ((p.block + 1) * (p.block + p.interval + 1)) as usize;
            if p.indices.len() == full {
                assert_eq!(p.measured, p.literal_full);
                if (p.block, p.interval) != (0, 0) {
                    assert_ne!(p.measured, p.literal_small);
                }
            }
        }
        // vectors are single coordinates
        for n in 0..x.len() {
            assert!(x.vector(n).len() == 1);
        }
    }

    #[test]
    fn dyadic_profile() {
        // A = {2^n − 1 : n ≥ 1}: squares sum to a partial geometric < 1/3
        let a = FinSet::of(&[1, 3, 7, 15, 31, 63]);
        let partials = dyadic_l2_partials(&a, 7);
        assert_eq!(partials[1], rat(1, 4));
        assert_eq!(partials[2], rat(5, 16));
        for p in &partials {
            assert!(*p < rat(1, 3));
        }
        let seq = dyadic_density(5);
        assert_eq!(seq.coeff(0, 0), rint(1));
        assert_eq!(seq.coeff(1, 1), rat(1, 2));
        assert_eq!(seq.coeff(2, 1), rat(1, 2));
    }
}
