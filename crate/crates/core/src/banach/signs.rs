//! Sign-average identities and the unconditionalization norm.
//!
//! Squared-norm averages are exact rationals; linear-norm averages involve
//! Euclidean square roots and are reported in floating point with a fixed
//! tolerance.

use num::{Signed, Zero};

use super::vectors::{BanachError, FinVectorSeq};
use crate::rat::{rabs, to_f64, Rat};
use crate::sets::FinSet;

/// Absolute slack granted to floating-point comparisons of sign averages.
const FLOAT_TOL: f64 = 1e-9;

/// Same-sign majority class of a value list: indices whose sum in absolute
/// value is at least half the total absolute mass (ties go to the
/// positives).
pub fn halving_subset(values: &[Rat]) -> Vec<usize> {
    let pos_sum: Rat =
        values.iter().filter(|v| v.is_positive()).fold(Rat::zero(), |a, v| a + v);
    let neg_sum: Rat =
        values.iter().filter(|v| v.is_negative()).fold(Rat::zero(), |a, v| a - v);
    let take_pos = pos_sum >= neg_sum;
    let picked: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| if take_pos { v.is_positive() } else { v.is_negative() })
        .map(|(i, _)| i)
        .collect();
    let total: Rat = values.iter().map(rabs).fold(Rat::zero(), |a, v| a + v);
    let class_sum = if take_pos { pos_sum } else { neg_sum };
    assert!(
        class_sum.clone() + class_sum >= total,
        "majority sign class misses half the mass"
    );
    picked
}

/// The unconditionalization norm
/// `max{max_n |a_n|, max over signs ‖Σ θ_n a_n x_n‖}`, exactly; at most 20
/// active coordinates. The sign supremum is invariant under flipping `a`.
pub fn unconditional_norm(x: &FinVectorSeq, a: &[Rat]) -> Result<Rat, BanachError> {
    let active: Vec<usize> =
        (0..x.len()).filter(|&n| !a.get(n).cloned().unwrap_or_else(Rat::zero).is_zero()).collect();
    if active.len() > 20 {
        return Err(BanachError::BudgetExceeded(format!(
            "{} active coordinates for the sign supremum",
            active.len()
        )));
    }
    let mut best = a.iter().map(rabs).max().unwrap_or_else(Rat::zero);
    let full = FinSet::try_from_iter((0..x.len()).map(|n| n as u32)).expect("index window");
    for mask in 0u32..1 << active.len() {
        let mut signed = a.to_vec();
        for (bit, &n) in active.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                signed[n] = -signed[n].clone();
            }
        }
        let v = x.sum_norm(&full, &signed);
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

/// Exact and floating sign/subset averages of a tuple of rational
/// Euclidean vectors.
#[derive(Debug, Clone)]
pub struct SignAverageReport {
    /// `𝔼_θ ‖Σ θ_k y_k‖²`, exact; equals `sum_sq` by the generalized
    /// parallelogram identity.
    pub e_sq: Rat,
    pub sum_sq: Rat,
    /// `𝔼_θ ‖Σ θ_k y_k‖` (floating).
    pub e_lin: f64,
    /// `𝔼_{A} ‖Σ_{k∈A} y_k‖` (floating); `e_lin ≤ 2·subset_avg`.
    pub subset_avg: f64,
    /// Whether `(Σ‖y_k‖^q)^{1/q} ≤ C·e_lin` for the supplied `(q, C)`.
    pub cotype_ok: Option<bool>,
}

/// Compute the report over all `2^n` sign patterns and subsets; `n ≤ 16`.
pub fn sign_average_report(
    vectors: &[Vec<Rat>],
    cotype: Option<(f64, f64)>,
) -> Result<SignAverageReport, BanachError> {
    let n = vectors.len();
    if n > 16 {
        return Err(BanachError::BudgetExceeded(format!("{n} vectors for sign averages")));
    }
    let dim = vectors.iter().map(Vec::len).max().unwrap_or(0);
    let coord = |v: &Vec<Rat>, j: usize| v.get(j).cloned().unwrap_or_else(Rat::zero);

    let sq_norm = |sum: &[Rat]| -> Rat {
        sum.iter().fold(Rat::zero(), |acc, c| acc + c.clone() * c.clone())
    };

    let mut e_sq = Rat::zero();
    let mut e_lin = 0.0f64;
    let mut subset_lin = 0.0f64;
    for mask in 0u32..1 << n {
        let mut signed = vec![Rat::zero(); dim];
        let mut subset = vec![Rat::zero(); dim];
        for (k, v) in vectors.iter().enumerate() {
            let plus = mask >> k & 1 == 0;
            for j in 0..dim {
                let c = coord(v, j);
                if plus {
                    signed[j] += c.clone();
                    subset[j] += c;
                } else {
                    signed[j] -= c;
                }
            }
        }
        let sq = sq_norm(&signed);
        e_sq += sq.clone();
        e_lin += to_f64(&sq).sqrt();
        subset_lin += to_f64(&sq_norm(&subset)).sqrt();
    }
    let count = Rat::new((1i64 << n).into(), 1.into());
    e_sq /= count;
    let scale = (1u64 << n) as f64;
    e_lin /= scale;
    subset_lin /= scale;

    let sum_sq = vectors.iter().fold(Rat::zero(), |acc, v| {
        acc + v.iter().fold(Rat::zero(), |a, c| a + c.clone() * c.clone())
    });
    assert_eq!(e_sq, sum_sq, "generalized parallelogram identity failed");
    assert!(
        e_lin <= 2.0 * subset_lin + FLOAT_TOL,
        "sign average {e_lin} exceeds twice the subset average {subset_lin}"
    );

    let cotype_ok = cotype.map(|(q, c)| {
        let lhs = vectors
            .iter()
            .map(|v| to_f64(&sq_norm(v)).sqrt().powf(q))
            .sum::<f64>()
            .powf(1.0 / q);
        lhs <= c * e_lin + FLOAT_TOL
    });

    Ok(SignAverageReport { e_sq, sum_sq, e_lin, subset_avg: subset_lin, cotype_ok })
}
