//! The node basis of the function space of a compact hereditary family.
//!
//! Nodes are enumerated cardinality-first (so `t_m ⊏ t_n` implies `m < n`,
//! with `t_0 = ∅`), and the basis function of a node is the indicator of
//! its upward ⊑-cone, which makes the evaluation identity
//! `x(t) = Σ_{t_k ⊑ t} f_k^*(x)` hold by construction.

use num::Zero;

use crate::rat::{rabs, Rat};
use crate::sets::{CompactFamily, FinSet};

#[derive(Debug, Clone)]
pub struct NodeBasisSpace {
    family: CompactFamily,
    nodes: Vec<FinSet>,
}

impl NodeBasisSpace {
    pub fn new(family: CompactFamily) -> Self {
        // canonical family order is (cardinality, lex), which is ⊏-monotone
        let nodes = family.members().to_vec();
        debug_assert_eq!(nodes.first(), Some(&FinSet::EMPTY));
        NodeBasisSpace { family, nodes }
    }

    pub fn family(&self) -> &CompactFamily {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, k: usize) -> &FinSet {
        &self.nodes[k]
    }

    /// θ: the index of a node in the enumeration.
    pub fn theta(&self, t: &FinSet) -> Option<usize> {
        self.nodes.binary_search(t).ok()
    }

    /// `x(t) = Σ_{t_k ⊑ t} coeffs[k]`.
    pub fn node_eval(&self, coeffs: &[Rat], t: &FinSet) -> Rat {
        let mut acc = Rat::zero();
        for (k, node) in self.nodes.iter().enumerate() {
            if node.is_initial_segment_of(t) {
                if let Some(c) = coeffs.get(k) {
                    acc += c.clone();
                }
            }
        }
        acc
    }

    /// `max_{t ∈ F} |x(t)|`.
    pub fn sup_norm(&self, coeffs: &[Rat]) -> Rat {
        self.nodes
            .iter()
            .map(|t| rabs(&self.node_eval(coeffs, t)))
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn node_eval_examples() {
        // F = {∅, {0}, {0,1}} with coefficients (1,2,3)
        let fam = CompactFamily::new(
            crate::sets::SetFamily::new(
                [FinSet::EMPTY, FinSet::of(&[0]), FinSet::of(&[1]), FinSet::of(&[0, 1])],
                2,
            )
            .unwrap(),
        )
        .unwrap();
        let space = NodeBasisSpace::new(fam);
        // enumeration: ∅, {0}, {1}, {0,1}
        assert_eq!(space.theta(&FinSet::EMPTY), Some(0));
        assert_eq!(space.theta(&FinSet::of(&[0, 1])), Some(3));
        let coeffs = vec![rint(1), rint(2), rint(0), rint(3)];
        assert_eq!(space.node_eval(&coeffs, &FinSet::of(&[0, 1])), rint(6));
        assert_eq!(space.node_eval(&coeffs, &FinSet::EMPTY), rint(1));
        assert_eq!(space.sup_norm(&coeffs), rint(6));
    }

    #[test]
    fn enumeration_is_initial_segment_monotone() {
        let fam = CompactFamily::schreier_family(7);
        let space = NodeBasisSpace::new(fam);
        for m in 0..space.len() {
            for n in 0..space.len() {
                if space.node(m) != space.node(n)
                    && space.node(m).is_initial_segment_of(space.node(n))
                {
                    assert!(m < n);
                }
            }
        }
    }
}
