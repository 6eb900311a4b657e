//! Evaluation-sequence norms over a compact family.

use num::Zero;

use crate::rat::{rabs, Rat};
use crate::sets::{CompactFamily, FinSet};

/// `‖Σ_{n∈F} a_n p_n‖ = max_{A∈K} |Σ_{n∈F∩A} a_n|`, exactly.
///
/// Coefficients are indexed by element; anything past the slice counts 0.
pub fn eval_norm(k: &CompactFamily, a: &[Rat], f: &FinSet) -> Rat {
    let mut best = Rat::zero();
    for member in k.members() {
        let sum = member
            .intersect(f)
            .iter()
            .fold(Rat::zero(), |acc, n| {
                acc + a.get(n as usize).cloned().unwrap_or_else(Rat::zero)
            });
        let v = rabs(&sum);
        if v > best {
            best = v;
        }
    }
    best
}

/// Unit-coefficient norm: `max_{A∈K} |F ∩ A|`, which for hereditary `K`
/// equals the largest cardinality in `K ↾ F`.
pub fn eval_norm_unit(k: &CompactFamily, f: &FinSet) -> u32 {
    k.members().iter().map(|a| a.intersect(f).card()).max().unwrap_or(0)
}

/// Norm over the Schreier closure on a window covering `F`, together with
/// the lower bound `#F/2`; the norm always dominates the bound.
pub fn schreier_lower_bound_audit(f: &FinSet) -> (u32, Rat) {
    let window = f.max_elem().map_or(1, |m| m + 1);
    let k = CompactFamily::schreier_family(window);
    let norm = eval_norm_unit(&k, f);
    let bound = Rat::new((f.card() as i64).into(), 2.into());
    assert!(
        Rat::from_integer((norm as i64).into()) >= bound,
        "Schreier norm {norm} under the bound #F/2 for F = {f}"
    );
    (norm, bound)
}
