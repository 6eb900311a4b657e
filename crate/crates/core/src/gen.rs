//! Seeded generators for randomized audits.
//!
//! Shared by the CLI experiment runner and the acceptance suite so that the
//! same seed always produces the same instances.

use rand::Rng;

use crate::banach::{FinVectorSeq, NodeBasisSpace, VectorModel};
use crate::measures::RationalMeasure;
use crate::rat::{half_pow, rat, Rat};
use crate::sets::{CompactFamily, FinSet};

/// A random hereditary family over the window, generated by a few sets.
pub fn random_hereditary_family<R: Rng>(
    rng: &mut R,
    window: u32,
    generators: usize,
) -> CompactFamily {
    let mask_bound: u128 = if window >= 128 { u128::MAX } else { (1 << window) - 1 };
    let gens: Vec<FinSet> = (0..generators)
        .map(|_| FinSet::from_bits(rng.random_range(0..=mask_bound)))
        .collect();
    CompactFamily::generated_by(gens, window).expect("generators live in the window")
}

/// A list of random rational measures supported inside the window.
pub fn random_measures<R: Rng>(rng: &mut R, window: u32, count: usize) -> Vec<RationalMeasure> {
    (0..count)
        .map(|_| {
            RationalMeasure::new((0..window).filter_map(|n| {
                if rng.random_bool(0.7) {
                    Some((n, rat(rng.random_range(0..8), rng.random_range(1..8))))
                } else {
                    None
                }
            }))
            .expect("nonnegative weights")
        })
        .collect()
}

/// A nonnegative coordinate-model sequence whose full index set is
/// 1-homogeneous for the block-sequence coloring: supports move right and
/// every low coordinate sits below its geometric threshold.
pub fn bs_homogeneous_instance<R: Rng>(rng: &mut R, len: usize) -> FinVectorSeq {
    assert!(len <= 16, "coordinate window exhausted");
    let mut vectors = Vec::with_capacity(len);
    let mut prev_max: i64 = -1;
    for n in 0..len {
        let mut v = std::collections::BTreeMap::new();
        // sub-threshold tail on earlier coordinates
        for k in 0..=prev_max {
            if rng.random_bool(0.5) {
                let cap = half_pow(k as u32 + 1) * half_pow(n as u32 + 1);
                let num = rng.random_range(0..=4i64);
                let val = cap * rat(num, 4);
                if num > 0 {
                    v.insert(k as u32, val);
                }
            }
        }
        // fresh head block
        let width = rng.random_range(1..=2i64);
        for j in 0..width {
            let k = (prev_max + 1 + j) as u32;
            v.insert(k, rat(rng.random_range(1..=8), rng.random_range(1..=4)));
        }
        prev_max += width;
        vectors.push(v);
    }
    let seq = FinVectorSeq::new(vectors, VectorModel::Coordinate);
    debug_assert!(seq.is_bs_hom1(&FinSet::window(len as u32)));
    seq
}

/// Random coefficients in `[-limit, limit]` with small denominators.
pub fn random_coeffs<R: Rng>(rng: &mut R, len: usize, limit: i64) -> Vec<Rat> {
    (0..len).map(|_| rat(rng.random_range(-limit..=limit), rng.random_range(1..=4))).collect()
}

/// A nonnegative node-model sequence over a random compact family, with
/// coefficients placed on branch nodes: raw material for the witness-family
/// and tall-coloring audits.
pub fn node_model_instance<R: Rng>(
    rng: &mut R,
    window: u32,
    len: usize,
) -> (NodeBasisSpace, FinVectorSeq) {
    let fam = random_hereditary_family(rng, window, 2);
    let space = NodeBasisSpace::new(fam);
    let node_count = space.len();
    let mut vectors = Vec::with_capacity(len);
    for _ in 0..len {
        let mut v = std::collections::BTreeMap::new();
        for k in 0..node_count {
            if rng.random_bool(0.3) {
                v.insert(k as u32, rat(rng.random_range(0..4), rng.random_range(1..4)));
            }
        }
        vectors.push(v);
    }
    let seq = FinVectorSeq::new(vectors, VectorModel::Node(space.clone()));
    (space, seq)
}

/// Random rational Euclidean vectors for the sign-average report.
pub fn random_euclidean_tuple<R: Rng>(rng: &mut R, n: usize, dim: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|_| (0..dim).map(|_| rat(rng.random_range(-6..=6), rng.random_range(1..=5))).collect())
        .collect()
}
