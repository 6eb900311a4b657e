//! Cylinder-function representation of a supremum of measures.
//!
//! The singleton-value prefixes of the measures form a finitely branching
//! tree; an order embedding into binary strings (children in sorted value
//! order, child `i` encoded `0^i 1`) turns each tree level into a family of
//! disjoint cylinders, and the level-`n` indicator combination has
//! `‖Σ_{n∈F} g_n‖∞ = sup_k μ_k(F)` exactly.

use std::collections::BTreeMap;

use num::Zero;

use crate::measures::RationalMeasure;
use crate::rat::Rat;
use crate::sets::FinSet;

/// One node of the prefix tree: the value prefix and its binary code.
#[derive(Debug, Clone)]
pub struct TreeNode {
    /// `⟨μ_k({0}), …, μ_k({j})⟩` for the measures passing through here.
    pub prefix: Vec<Rat>,
    /// The cylinder code `ρ(prefix)` as bits.
    pub code: Vec<bool>,
}

/// The finite tree, the embedding, and the cylinder functions `g_n`.
#[derive(Debug, Clone)]
pub struct Representation {
    pub window: u32,
    pub nodes: Vec<TreeNode>,
    /// `g[n]`: list of (cylinder code, coefficient) with the coefficient
    /// `s(n)` of each depth-`(n+1)` node `s`.
    pub g: Vec<Vec<(Vec<bool>, Rat)>>,
    measures: Vec<RationalMeasure>,
}

impl Representation {
    /// `sup over 2^ℕ of Σ_{n∈F} g_n`, evaluated exactly.
    ///
    /// The combination is constant on the atoms "entered node v, then left
    /// the embedded tree", whose value is the prefix sum of v over F, and
    /// every atom arises this way; so the sup is the max over tree nodes.
    pub fn sup_norm_sum(&self, f: &FinSet) -> Rat {
        let mut best = Rat::zero();
        for node in &self.nodes {
            let mut acc = Rat::zero();
            for n in f.iter() {
                if (n as usize) < node.prefix.len() {
                    acc += node.prefix[n as usize].clone();
                }
            }
            if acc > best {
                best = acc;
            }
        }
        best
    }

    /// `sup_k μ_k(F)` from the input measures, the other side of the
    /// certified identity.
    pub fn sup_measure(&self, f: &FinSet) -> Rat {
        self.measures.iter().map(|m| m.eval(f)).max().unwrap_or_else(Rat::zero)
    }

    /// Certify `‖Σ_{n∈F} g_n‖∞ = sup_k μ_k(F)` for one `F`.
    pub fn certify(&self, f: &FinSet) -> (Rat, Rat) {
        let lhs = self.sup_norm_sum(f);
        let rhs = self.sup_measure(f);
        assert_eq!(lhs, rhs, "representation identity failed at F = {f}");
        (lhs, rhs)
    }

    /// Certify the identity for every subset of the window.
    pub fn certify_all(&self) -> bool {
        assert!(self.window <= 20, "exhaustive certification capped at window 20");
        for f in FinSet::window(self.window).subsets() {
            self.certify(&f);
        }
        true
    }
}

/// Build the tree, embedding and cylinder functions from measures on a
/// window. Callers normalize and quantize first when they want the value
/// sets finite per point; the construction itself is exact either way.
pub fn build_representation(ms: &[RationalMeasure], window: u32) -> Representation {
    // collect all prefixes, keyed by the value list
    let mut node_ids: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
    let mut prefixes: Vec<Vec<Rat>> = vec![Vec::new()];
    node_ids.insert(Vec::new(), 0);
    for m in ms {
        let mut prefix = Vec::new();
        for n in 0..window {
            prefix.push(m.weight(n));
            if !node_ids.contains_key(&prefix) {
                node_ids.insert(prefix.clone(), prefixes.len());
                prefixes.push(prefix.clone());
            }
        }
    }

    // children of each node, sorted by the appended value
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); prefixes.len()];
    for (prefix, &id) in &node_ids {
        if prefix.is_empty() {
            continue;
        }
        let parent = node_ids[&prefix[..prefix.len() - 1].to_vec()];
        children[parent].push(id);
    }
    for ch in &mut children {
        ch.sort_by(|&a, &b| {
            prefixes[a].last().expect("child").cmp(prefixes[b].last().expect("child"))
        });
    }

    // codes: child i of v gets code(v) ++ 0^i ++ 1 — prefix-free among siblings
    let mut codes: Vec<Vec<bool>> = vec![Vec::new(); prefixes.len()];
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for (i, &c) in children[v].iter().enumerate() {
            let mut code = codes[v].clone();
            code.extend(std::iter::repeat_n(false, i));
            code.push(true);
            codes[c] = code;
            stack.push(c);
        }
    }

    let nodes: Vec<TreeNode> = prefixes
        .iter()
        .zip(&codes)
        .map(|(prefix, code)| TreeNode { prefix: prefix.clone(), code: code.clone() })
        .collect();

    // g_n = Σ_{|s| = n+1} s(n)·1_{[ρ(s)]}
    let mut g: Vec<Vec<(Vec<bool>, Rat)>> = vec![Vec::new(); window as usize];
    for node in &nodes {
        if let Some(last) = node.prefix.last() {
            let n = node.prefix.len() - 1;
            g[n].push((node.code.clone(), last.clone()));
        }
    }

    Representation { window, nodes, g, measures: ms.to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{normalize_measures, quantize_measures};
    use crate::rat::{rat, rint};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn representation_certificate_examples() {
        // ms = (δ₀, δ₁/2): certified value on {0,1} is 1
        let ms = vec![
            RationalMeasure::point_mass(0, rint(1)),
            RationalMeasure::point_mass(1, rat(1, 2)),
        ];
        let rep = build_representation(&ms, 2);
        let (lhs, _) = rep.certify(&FinSet::of(&[0, 1]));
        assert_eq!(lhs, rint(1));

        // single measure: one branch, trivially equal everywhere
        let single = vec![RationalMeasure::new([(0, rat(1, 3)), (1, rat(2, 5))]).unwrap()];
        let rep = build_representation(&single, 2);
        assert!(rep.certify_all());

        // empty list: all zero
        let rep = build_representation(&[], 3);
        assert!(rep.certify_all());
        assert!(rep.sup_norm_sum(&FinSet::window(3)).is_zero());
    }

    #[test]
    fn embedding_is_order_preserving_and_prefix_free() {
        let ms = vec![
            RationalMeasure::new([(0, rint(1)), (1, rat(1, 2))]).unwrap(),
            RationalMeasure::new([(0, rint(1)), (2, rat(1, 4))]).unwrap(),
            RationalMeasure::new([(1, rat(1, 3))]).unwrap(),
        ];
        let rep = build_representation(&ms, 3);
        for a in &rep.nodes {
            for b in &rep.nodes {
                let prefix_rel = a.prefix.len() < b.prefix.len()
                    && b.prefix[..a.prefix.len()] == a.prefix[..];
                let code_rel =
                    a.code.len() < b.code.len() && b.code[..a.code.len()] == a.code[..];
                assert_eq!(prefix_rel, code_rel, "embedding must preserve the tree order");
            }
        }
    }

    #[test]
    fn random_quantized_families_certify_exhaustively() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..10 {
            let ms: Vec<RationalMeasure> = (0..rng.random_range(1..=4))
                .map(|_| {
                    RationalMeasure::new((0..6).filter_map(|n| {
                        if rng.random_bool(0.7) {
                            Some((n, rat(rng.random_range(0..8), rng.random_range(1..8))))
                        } else {
                            None
                        }
                    }))
                    .unwrap()
                })
                .collect();
            let prepared = quantize_measures(&normalize_measures(&ms, 6));
            let rep = build_representation(&prepared, 6);
            assert!(rep.certify_all());
        }
    }
}
