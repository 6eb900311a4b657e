//! Concrete pair and front colorings, homogeneity machinery, a greedy
//! Ramsey selector, and Devlin numbers.
//!
//! A pair coloring is materialized as a table over a window; a front
//! coloring pairs a [`UniformFront`] with a total rule on its members.
//! Homogeneity follows the convention that an empty restriction is
//! homogeneous for every color.

use std::collections::BTreeSet;
use std::fmt;

use num::Zero;
use rand::Rng;
use thiserror::Error;

use crate::fronts::UniformFront;
use crate::measures::SupSubmeasure;
use crate::rat::{rabs, Rat};
use crate::sets::{CompactFamily, FinSet, SetError, SetFamily};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("family is not hereditary")]
    NotHereditary(#[from] SetError),
    #[error("search budget exceeded ({0} nodes)")]
    BudgetExceeded(u64),
    #[error("insufficient density: {0}")]
    InsufficientDensity(String),
    #[error("Devlin numbers overflow u64 beyond d = 8 (requested {0})")]
    Overflow(u32),
    #[error("ground set must have at least 2 elements")]
    GroundTooSmall,
}

/// An enumeration of ℚ ∩ (0,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalEnumeration {
    /// Reduced fractions ordered by denominator, then numerator:
    /// 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, 2/5, ...
    Canonical,
    /// θ(n) = (n+1)/(n+2), strictly increasing — a diagnostic mode in which
    /// the induced pair coloring is constant 1.
    Monotone,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl RationalEnumeration {
    /// θ(n), the `n`-th rational of the enumeration.
    pub fn value(&self, n: usize) -> Rat {
        match self {
            RationalEnumeration::Monotone => {
                Rat::new((n as i64 + 1).into(), (n as i64 + 2).into())
            }
            RationalEnumeration::Canonical => {
                let mut count = 0usize;
                let mut q = 2u64;
                loop {
                    for p in 1..q {
                        if gcd(p, q) == 1 {
                            if count == n {
                                return Rat::new((p as i64).into(), (q as i64).into());
                            }
                            count += 1;
                        }
                    }
                    q += 1;
                }
            }
        }
    }

    /// Inverse of the enumeration, for detecting inconsistent inputs.
    pub fn index_of(&self, r: &Rat) -> Option<usize> {
        if *r <= Rat::zero() || *r >= Rat::new(1.into(), 1.into()) {
            return None;
        }
        match self {
            RationalEnumeration::Monotone => {
                let mut n = 0usize;
                while n <= 10_000 {
                    let v = self.value(n);
                    if v == *r {
                        return Some(n);
                    }
                    if v > *r {
                        return None; // monotone: already past r
                    }
                    n += 1;
                }
                None
            }
            RationalEnumeration::Canonical => {
                let mut n = 0usize;
                loop {
                    let v = self.value(n);
                    if v == *r {
                        return Some(n);
                    }
                    // canonical order exhausts each denominator in turn
                    if v.denom() > r.denom() {
                        return None;
                    }
                    n += 1;
                }
            }
        }
    }
}

/// A total coloring of the pairs `{m < n}` of a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairColoring {
    window: u32,
    colors: u8,
    table: Vec<u8>,
}

impl PairColoring {
    fn idx(window: u32, m: u32, n: u32) -> usize {
        debug_assert!(m < n && n < window);
        (n as usize * (n as usize - 1)) / 2 + m as usize
    }

    pub fn from_fn(window: u32, colors: u8, mut f: impl FnMut(u32, u32) -> u8) -> Self {
        let mut table = vec![0u8; (window as usize * (window as usize).saturating_sub(1)) / 2];
        for n in 1..window {
            for m in 0..n {
                let v = f(m, n);
                assert!(v < colors, "color {v} out of range");
                table[Self::idx(window, m, n)] = v;
            }
        }
        PairColoring { window, colors, table }
    }

    pub fn constant(window: u32, color: u8, colors: u8) -> Self {
        Self::from_fn(window, colors.max(color + 1), |_, _| color)
    }

    /// Uniformly random coloring from a seeded generator.
    pub fn random<R: Rng>(window: u32, colors: u8, rng: &mut R) -> Self {
        Self::from_fn(window, colors, |_, _| rng.random_range(0..colors))
    }

    /// The ED_fin comparability coloring: color 1 exactly when the two
    /// points lie in different dyadic blocks `s_n = [2^n−1, 2^{n+1}−1)`.
    pub fn ed_fin(window: u32) -> Self {
        Self::from_fn(window, 2, |m, n| u8::from(dyadic_block(m) != dyadic_block(n)))
    }

    /// The ℚ-coloring of an enumeration: 1 exactly when θ(m) < θ(n).
    pub fn q_coloring(theta: RationalEnumeration, window: u32) -> Self {
        let values: Vec<Rat> = (0..window as usize).map(|n| theta.value(n)).collect();
        Self::from_fn(window, 2, |m, n| u8::from(values[m as usize] < values[n as usize]))
    }

    /// Tall coloring of a submeasure with vanishing singletons: color 0
    /// exactly when both points fall in the same bucket
    /// `A_{k+1} = {n : 1/2^{k+1} ≤ φ({n}) < 1/2^k}` (or `A_0 = {φ ≥ 1}`).
    pub fn submeasure_blocks(phi: &SupSubmeasure, window: u32) -> Self {
        let bucket: Vec<Option<u32>> = (0..window).map(|n| phi_bucket(phi, n)).collect();
        Self::from_fn(window, 2, |m, n| {
            let same = bucket[m as usize].is_some() && bucket[m as usize] == bucket[n as usize];
            u8::from(!same)
        })
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn colors(&self) -> u8 {
        self.colors
    }

    pub fn color(&self, m: u32, n: u32) -> u8 {
        assert!(m != n, "pair coloring needs two distinct points");
        let (m, n) = if m < n { (m, n) } else { (n, m) };
        self.table[Self::idx(self.window, m, n)]
    }

    /// Colors attained on `[A]²`.
    pub fn hom_colors(&self, a: &FinSet) -> BTreeSet<u8> {
        let elems = a.elems();
        let mut out = BTreeSet::new();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                out.insert(self.color(elems[i], elems[j]));
            }
        }
        out
    }

    /// Is `a` homogeneous with color `i` (empty restriction counts)?
    pub fn is_homogeneous(&self, a: &FinSet, i: u8) -> bool {
        let attained = self.hom_colors(a);
        attained.is_empty() || (attained.len() == 1 && attained.contains(&i))
    }
}

/// Index of the dyadic block `s_n = [2^n−1, 2^{n+1}−1)` containing `k`.
pub fn dyadic_block(k: u32) -> u32 {
    // 2^n − 1 ≤ k < 2^{n+1} − 1  ⇔  n = ⌊log₂(k+1)⌋
    31 - (k + 1).leading_zeros()
}

fn phi_bucket(phi: &SupSubmeasure, n: u32) -> Option<u32> {
    let v = phi.point(n);
    if v.is_zero() {
        return None;
    }
    if v >= Rat::new(1.into(), 1.into()) {
        return Some(0);
    }
    // 1/2^{k+1} ≤ v < 1/2^k
    let mut k = 0u32;
    let mut upper = Rat::new(1.into(), 1.into());
    loop {
        let lower = &upper / Rat::new(2.into(), 1.into());
        if v >= lower && v < upper {
            return Some(k + 1);
        }
        upper = lower;
        k += 1;
        assert!(k < 4096, "singleton value too small to bucket");
    }
}

/// A coloring of the members of a uniform front.
pub struct FrontColoring {
    front: UniformFront,
    colors: u8,
    rule: Box<dyn Fn(&FinSet) -> u8 + Send + Sync>,
}

impl fmt::Debug for FrontColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FrontColoring({} colors on {})", self.colors, self.front)
    }
}

impl FrontColoring {
    pub fn new(
        front: UniformFront,
        colors: u8,
        rule: impl Fn(&FinSet) -> u8 + Send + Sync + 'static,
    ) -> Self {
        FrontColoring { front, colors, rule: Box::new(rule) }
    }

    /// A pair coloring viewed as a coloring of the front `[ℕ]²`.
    pub fn from_pair(c: PairColoring) -> Self {
        let colors = c.colors();
        FrontColoring::new(UniformFront::cube(2), colors, move |s| {
            let e = s.elems();
            c.color(e[0], e[1])
        })
    }

    /// The convergence coloring on triples: 1 iff `|θ(l) − θ(m)| < 1/(k+1)`.
    pub fn conv(theta: RationalEnumeration) -> Self {
        FrontColoring::new(UniformFront::cube(3), 2, move |s| {
            let e = s.elems();
            conv_color(theta, e[0], e[1], e[2])
        })
    }

    pub fn front(&self) -> &UniformFront {
        &self.front
    }

    pub fn colors(&self) -> u8 {
        self.colors
    }

    pub fn color(&self, s: &FinSet) -> u8 {
        debug_assert!(self.front.contains(s), "{s} is not a member of the front");
        (self.rule)(s)
    }

    /// `hom_check`: the set of colors attained on the front restricted to
    /// `a`. Empty result means `a` is homogeneous for every color.
    pub fn hom_check(&self, a: &FinSet) -> BTreeSet<u8> {
        self.front.enumerate(a).iter().map(|s| (self.rule)(s)).collect()
    }

    pub fn is_homogeneous(&self, a: &FinSet, i: u8) -> bool {
        let attained = self.hom_check(a);
        attained.is_empty() || (attained.len() == 1 && attained.contains(&i))
    }
}

/// `conv` on a triple `k < l < m`.
pub fn conv_color(theta: RationalEnumeration, k: u32, l: u32, m: u32) -> u8 {
    assert!(k < l && l < m);
    let gap = rabs(&(theta.value(l as usize) - theta.value(m as usize)));
    u8::from(gap < Rat::new(1.into(), (k as i64 + 1).into()))
}

/// `q̂` on a pair `m < n`.
pub fn q_color(theta: RationalEnumeration, m: u32, n: u32) -> u8 {
    assert!(m < n);
    u8::from(theta.value(m as usize) < theta.value(n as usize))
}

/// Result of an exhaustive search for a homogeneous partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverOutcome {
    /// A partition of the input into at most `k` homogeneous pieces.
    Partition(Vec<FinSet>),
    /// Exhaustion proved no such partition exists.
    Impossible,
}

/// Partition `m` into at most `k` pieces homogeneous for the front
/// coloring, or prove by exhaustion that none exists.
pub fn cover_by_homogeneous(
    c: &FrontColoring,
    m: &FinSet,
    k: usize,
    max_nodes: u64,
) -> Result<CoverOutcome, ColoringError> {
    if (k as u64) * (m.card() as u64) > 400 {
        return Err(ColoringError::BudgetExceeded(0));
    }
    let elems = m.elems();
    let mut pieces: Vec<FinSet> = Vec::new();
    let mut nodes = 0u64;

    fn piece_ok(c: &FrontColoring, piece: &FinSet) -> bool {
        c.hom_check(piece).len() <= 1
    }

    fn dfs(
        c: &FrontColoring,
        elems: &[u32],
        at: usize,
        k: usize,
        pieces: &mut Vec<FinSet>,
        nodes: &mut u64,
        max_nodes: u64,
    ) -> Result<bool, ColoringError> {
        *nodes += 1;
        if *nodes > max_nodes {
            return Err(ColoringError::BudgetExceeded(*nodes));
        }
        if at == elems.len() {
            return Ok(true);
        }
        let e = elems[at];
        for i in 0..pieces.len() {
            let candidate = pieces[i].insert(e);
            if piece_ok(c, &candidate) {
                let saved = pieces[i];
                pieces[i] = candidate;
                if dfs(c, elems, at + 1, k, pieces, nodes, max_nodes)? {
                    return Ok(true);
                }
                pieces[i] = saved;
            }
        }
        if pieces.len() < k {
            pieces.push(FinSet::singleton(e));
            if dfs(c, elems, at + 1, k, pieces, nodes, max_nodes)? {
                return Ok(true);
            }
            pieces.pop();
        }
        Ok(false)
    }

    if dfs(c, &elems, 0, k, &mut pieces, &mut nodes, max_nodes)? {
        Ok(CoverOutcome::Partition(pieces))
    } else {
        Ok(CoverOutcome::Impossible)
    }
}

/// Greedy pivot extraction of a homogeneous set.
///
/// Pivot is always the least remaining element; the rest follows the
/// majority color (ties to the smallest color index). For a 2-coloring on
/// `n` points the result has size at least `⌊log₂ n⌋ / 2`.
pub fn ramsey_extract(
    c: &PairColoring,
    ground: &FinSet,
) -> Result<(FinSet, u8), ColoringError> {
    let (set, color) = ramsey_extract_indices(c, &ground.elems())?;
    Ok((FinSet::try_from_iter(set).expect("subset of the ground"), color))
}

/// Index-based variant of [`ramsey_extract`] for windows beyond the bit-set
/// cap (the selector itself needs no set algebra).
pub fn ramsey_extract_indices(
    c: &PairColoring,
    ground: &[u32],
) -> Result<(Vec<u32>, u8), ColoringError> {
    if ground.len() < 2 {
        return Err(ColoringError::GroundTooSmall);
    }
    let mut rest: Vec<u32> = {
        let mut g = ground.to_vec();
        g.sort_unstable();
        g.dedup();
        g
    };
    let mut pivots: Vec<(u32, u8)> = Vec::new();
    while !rest.is_empty() {
        let p = rest.remove(0);
        let mut counts = vec![0u32; c.colors() as usize];
        for &x in &rest {
            counts[c.color(p, x) as usize] += 1;
        }
        let best = counts.iter().copied().max().unwrap_or(0);
        let color = counts.iter().position(|&v| v == best).unwrap_or(0) as u8;
        pivots.push((p, color));
        rest.retain(|&x| c.color(p, x) == color);
    }
    let mut counts = vec![0u32; c.colors() as usize];
    for (_, col) in &pivots {
        counts[*col as usize] += 1;
    }
    let best = counts.iter().copied().max().unwrap();
    let color = counts.iter().position(|&v| v == best).unwrap() as u8;
    let set: Vec<u32> =
        pivots.iter().filter(|(_, col)| *col == color).map(|(p, _)| *p).collect();
    Ok((set, color))
}

/// The Galvin rule of a hereditary compact family: a set is colored 1
/// exactly when one of its initial segments falls outside the family.
#[derive(Debug, Clone)]
pub struct GalvinColoring {
    family: CompactFamily,
}

impl GalvinColoring {
    pub fn new(family: SetFamily) -> Result<Self, ColoringError> {
        Ok(GalvinColoring { family: CompactFamily::new(family)? })
    }

    pub fn from_compact(family: CompactFamily) -> Self {
        GalvinColoring { family }
    }

    pub fn color(&self, m: &FinSet) -> u8 {
        u8::from(m.initial_segments().iter().any(|s| !self.family.contains(s)))
    }

    /// Exhaustive window check that the 0-homogeneous sets are exactly the
    /// family members.
    pub fn hom0_equals_family_on_window(&self) -> bool {
        FinSet::window(self.family.window())
            .subsets()
            .into_iter()
            .all(|m| (self.color(&m) == 0) == self.family.contains(&m))
    }
}

/// Constructive 0-homogeneous set for the convergence coloring: a set
/// `D ⊆ A` of size `r` with `θ(D)` increasing.
///
/// For each candidate pivot `a ∈ A` the builder looks for `2r+1` anchors
/// increasing in ℕ and in θ whose consecutive θ-gaps exceed `1/(a+1)`, then
/// for midpoints `d_k > a` with `θ(d_k)` inside every other anchor gap.
/// Triples of midpoints then straddle a full anchor gap, which is wider
/// than `1/(min D + 1)`, so they all get color 0.
pub fn conv_zero_builder(
    theta: RationalEnumeration,
    a: &FinSet,
    r: usize,
) -> Result<FinSet, ColoringError> {
    if r == 0 {
        return Ok(FinSet::EMPTY);
    }
    if r == 1 {
        return a
            .min_elem()
            .map(FinSet::singleton)
            .ok_or_else(|| ColoringError::InsufficientDensity("empty ground set".into()));
    }
    let elems = a.elems();
    let vals: Vec<Rat> = elems.iter().map(|&n| theta.value(n as usize)).collect();

    for (pi, &pivot) in elems.iter().enumerate() {
        let gap = Rat::new(1.into(), (pivot as i64 + 1).into());
        let Some(anchors) = gap_chain(&vals, &gap, 2 * r + 1) else { continue };
        // d_k past the pivot, increasing, with θ(d_k) ∈ (θ(a_{2k-2}), θ(a_{2k-1}))
        let mut picks: Vec<u32> = Vec::new();
        let mut start = pi + 1;
        let mut ok = true;
        for k in 1..=r {
            let lo = &vals[anchors[2 * k - 2]];
            let hi = &vals[anchors[2 * k - 1]];
            match (start..elems.len()).find(|&i| vals[i] > *lo && vals[i] < *hi) {
                Some(i) => {
                    picks.push(elems[i]);
                    start = i + 1;
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Ok(FinSet::try_from_iter(picks).expect("picks fit the window"));
        }
    }
    Err(ColoringError::InsufficientDensity(format!(
        "no pivot admits {} anchors with midpoints in {} elements",
        2 * r + 1,
        elems.len()
    )))
}

/// Patience-style DP for a chain with indices increasing, values
/// increasing, and all consecutive value gaps strictly above `gap`.
/// `chains[j]` keeps, among chains of length `j+1`, one with minimal last
/// value; greedily extending those is optimal for this gap constraint.
fn gap_chain(vals: &[Rat], gap: &Rat, want: usize) -> Option<Vec<usize>> {
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for (i, v) in vals.iter().enumerate() {
        let mut extend: Option<usize> = None;
        for (j, chain) in chains.iter().enumerate() {
            let last = &vals[*chain.last().expect("nonempty chain")];
            if &(v.clone() - last.clone()) > gap {
                extend = Some(j);
            }
        }
        let new_len = extend.map_or(0, |j| j + 1);
        let mut chain = extend.map_or_else(Vec::new, |j| chains[j].clone());
        chain.push(i);
        if new_len == chains.len() {
            chains.push(chain);
        } else if v < &vals[*chains[new_len].last().expect("nonempty chain")] {
            chains[new_len] = chain;
        }
        if chains.len() >= want {
            return Some(chains[want - 1].clone());
        }
    }
    None
}

/// Devlin numbers `t_d = T_{2d−1}`: odd tangent numbers via the
/// boustrophedon (Seidel) triangle; exact in `u64` up to `d = 8`.
pub fn devlin_number(d: u32) -> Result<u64, ColoringError> {
    if d == 0 || d > 8 {
        return Err(ColoringError::Overflow(d));
    }
    let n = (2 * d - 1) as usize;
    let mut row: Vec<u64> = vec![1];
    let mut zigzag: Vec<u64> = vec![1];
    for _ in 1..=n {
        let mut next = vec![0u64; row.len() + 1];
        for i in 1..next.len() {
            next[i] = next[i - 1] + row[row.len() - i];
        }
        zigzag.push(*next.last().expect("nonempty row"));
        row = next;
    }
    Ok(zigzag[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn canonical_enumeration_prefix() {
        let t = RationalEnumeration::Canonical;
        let expect = [rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 4), rat(3, 4), rat(1, 5)];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(&t.value(i), e);
            assert_eq!(t.index_of(e), Some(i));
        }
        assert_eq!(t.index_of(&rat(2, 4)), Some(0)); // reduces to 1/2
        assert_eq!(t.index_of(&rat(5, 3)), None);
    }

    #[test]
    fn q_coloring_examples() {
        let t = RationalEnumeration::Canonical;
        assert_eq!(q_color(t, 0, 1), 0); // 1/2 > 1/3
        assert_eq!(q_color(t, 1, 2), 1); // 1/3 < 2/3
        let mono = PairColoring::q_coloring(RationalEnumeration::Monotone, 10);
        for n in 1..10 {
            for m in 0..n {
                assert_eq!(mono.color(m, n), 1);
            }
        }
    }

    #[test]
    fn sierpinski_property_on_window() {
        // both induced relations are transitive on the window
        let c = PairColoring::q_coloring(RationalEnumeration::Canonical, 16);
        for i in [0u8, 1] {
            for a in 0..16u32 {
                for b in a + 1..16 {
                    for d in b + 1..16 {
                        if c.color(a, b) == i && c.color(b, d) == i {
                            assert_eq!(c.color(a, d), i);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conv_examples() {
        let t = RationalEnumeration::Canonical;
        assert_eq!(conv_color(t, 0, 1, 2), 1); // |1/3 − 2/3| = 1/3 < 1
        assert_eq!(conv_color(t, 2, 3, 4), 0); // |1/4 − 3/4| = 1/2 ≥ 1/3
        let front = FrontColoring::conv(t);
        assert_eq!(front.hom_check(&FinSet::of(&[2, 3, 4])), BTreeSet::from([0]));
        // empty restriction is homogeneous for all colors
        assert!(front.hom_check(&FinSet::of(&[2, 3])).is_empty());
    }

    #[test]
    fn ed_fin_examples() {
        let c = PairColoring::ed_fin(16);
        assert_eq!(c.color(1, 2), 0); // both in s_1 = {1,2}
        assert_eq!(c.color(2, 3), 1); // s_1 vs s_2
        assert_eq!(dyadic_block(0), 0);
        assert_eq!(dyadic_block(6), 2);
        assert_eq!(dyadic_block(7), 3);
    }

    #[test]
    fn submeasure_block_coloring() {
        use crate::measures::RationalMeasure;
        // φ({n}) = 1/2^n puts every point in its own bucket
        let phi = SupSubmeasure::new(
            vec![RationalMeasure::new((0..8).map(|n| (n, crate::rat::half_pow(n)))).unwrap()],
            8,
        );
        let c = PairColoring::submeasure_blocks(&phi, 8);
        for n in 1..8 {
            for m in 0..n {
                assert_eq!(c.color(m, n), 1);
            }
        }
    }

    #[test]
    fn hom_check_with_constant_coloring() {
        let c = FrontColoring::from_pair(PairColoring::constant(8, 1, 2));
        assert_eq!(c.hom_check(&FinSet::of(&[0, 3, 5])), BTreeSet::from([1]));
    }

    #[test]
    fn cover_by_homogeneous_examples() {
        // constant coloring: M itself, one piece
        let c = FrontColoring::from_pair(PairColoring::constant(10, 0, 2));
        let m = FinSet::window(10);
        match cover_by_homogeneous(&c, &m, 1, 1 << 20).unwrap() {
            CoverOutcome::Partition(p) => assert_eq!(p, vec![m]),
            other => panic!("expected partition, got {other:?}"),
        }

        // one ED_fin block is 0-homogeneous
        let ed = FrontColoring::from_pair(PairColoring::ed_fin(16));
        let block = FinSet::interval(3, 7); // s_2
        match cover_by_homogeneous(&ed, &block, 1, 1 << 20).unwrap() {
            CoverOutcome::Partition(p) => assert_eq!(p, vec![block]),
            other => panic!("expected partition, got {other:?}"),
        }

        // a conv 0-set admits a one-piece cover
        let t = RationalEnumeration::Canonical;
        let conv = FrontColoring::conv(t);
        let d = conv_zero_builder(t, &FinSet::window(64), 4).unwrap();
        assert_eq!(conv.hom_check(&d), BTreeSet::from([0]));
        match cover_by_homogeneous(&conv, &d, 1, 1 << 20).unwrap() {
            CoverOutcome::Partition(p) => {
                assert_eq!(p.len(), 1);
                assert!(conv.is_homogeneous(&p[0], 0));
            }
            CoverOutcome::Impossible => panic!("a single 0-homogeneous piece exists"),
        }

        // budget guard
        assert!(matches!(
            cover_by_homogeneous(&c, &FinSet::window(10), 100, 10),
            Err(ColoringError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn ramsey_extract_examples() {
        // constant 0 on [0,8) returns everything
        let c = PairColoring::constant(8, 0, 2);
        let (h, color) = ramsey_extract(&c, &FinSet::window(8)).unwrap();
        assert_eq!(color, 0);
        assert_eq!(h, FinSet::window(8));

        // block coloring: {0,1},{2,3},{4,5} blocks → transversal or block
        let blocks = PairColoring::from_fn(6, 2, |m, n| u8::from(m / 2 != n / 2));
        let (h, color) = ramsey_extract(&blocks, &FinSet::window(6)).unwrap();
        assert!(!h.is_empty());
        assert!(blocks.is_homogeneous(&h, color));

        // seeded random coloring on [0,64): guarantee ⌊log₂ 64⌋/2 = 3
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c = PairColoring::random(64, 2, &mut rng);
        let (h, color) = ramsey_extract(&c, &FinSet::window(64)).unwrap();
        assert!(h.card() >= 3);
        assert!(c.is_homogeneous(&h, color));

        assert!(matches!(
            ramsey_extract(&c, &FinSet::singleton(3)),
            Err(ColoringError::GroundTooSmall)
        ));
    }

    #[test]
    fn galvin_examples() {
        // K = sets of size ≤ 2 on [0,6)
        let k = CompactFamily::cube_family(6, 2);
        let g = GalvinColoring::from_compact(k);
        assert_eq!(g.color(&FinSet::of(&[1, 2, 3, 4])), 1);
        assert_eq!(g.color(&FinSet::of(&[1, 2])), 0);

        // power set of the window → constant 0
        let full = CompactFamily::generated_by([FinSet::window(5)], 5).unwrap();
        let g = GalvinColoring::from_compact(full);
        for m in FinSet::window(5).subsets() {
            assert_eq!(g.color(&m), 0);
        }

        // non-hereditary input is rejected
        let bad = SetFamily::new([FinSet::EMPTY, FinSet::of(&[0, 1])], 2).unwrap();
        assert!(matches!(GalvinColoring::new(bad), Err(ColoringError::NotHereditary(_))));
    }

    #[test]
    fn galvin_window_equivalence_over_families() {
        let gens = [
            vec![FinSet::of(&[0, 2, 4, 6]), FinSet::of(&[1, 3, 5])],
            vec![FinSet::of(&[0, 1, 2]), FinSet::of(&[7, 8, 9])],
            vec![FinSet::window(10)],
            vec![],
        ];
        for g in gens {
            let fam = CompactFamily::generated_by(g, 10).unwrap();
            let rule = GalvinColoring::from_compact(fam);
            assert!(rule.hom0_equals_family_on_window());
        }
    }

    #[test]
    fn conv_zero_builder_examples() {
        let t = RationalEnumeration::Canonical;
        let window = FinSet::window(96);
        assert_eq!(conv_zero_builder(t, &window, 1).unwrap().card(), 1);

        let d = conv_zero_builder(t, &window, 3).unwrap();
        assert_eq!(d.card(), 3);
        let conv = FrontColoring::conv(t);
        assert_eq!(conv.hom_check(&d), BTreeSet::from([0]));
        // θ increasing along D
        let vals: Vec<Rat> = d.iter().map(|n| t.value(n as usize)).collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]));

        // capacity exceeded
        assert!(matches!(
            conv_zero_builder(t, &FinSet::window(6), 5),
            Err(ColoringError::InsufficientDensity(_))
        ));
    }

    #[test]
    fn devlin_numbers() {
        assert_eq!(devlin_number(1).unwrap(), 1);
        assert_eq!(devlin_number(2).unwrap(), 2);
        assert_eq!(devlin_number(3).unwrap(), 16);
        assert_eq!(devlin_number(4).unwrap(), 272);
        assert!(devlin_number(9).is_err());
        assert!(devlin_number(0).is_err());
    }

    #[test]
    fn devlin_matches_tangent_series_oracle() {
        // independent derivation: T_n = n!·[z^n](sin/cos) via series division
        let terms = 16usize;
        let mut sin = vec![Rat::zero(); terms];
        let mut cos = vec![Rat::zero(); terms];
        let mut fact = vec![rint(1); terms];
        for n in 1..terms {
            fact[n] = fact[n - 1].clone() * rint(n as i64);
        }
        for n in 0..terms {
            if n % 2 == 1 {
                sin[n] = rint(if n % 4 == 1 { 1 } else { -1 }) / fact[n].clone();
            } else {
                cos[n] = rint(if n % 4 == 0 { 1 } else { -1 }) / fact[n].clone();
            }
        }
        // tan·cos = sin, solved coefficient by coefficient (cos[0] = 1)
        let mut tan = vec![Rat::zero(); terms];
        for n in 0..terms {
            let mut acc = sin[n].clone();
            for k in 0..n {
                acc -= tan[k].clone() * cos[n - k].clone();
            }
            tan[n] = acc;
        }
        for d in 1..=8u32 {
            let n = (2 * d - 1) as usize;
            let t = tan[n].clone() * fact[n].clone();
            assert!(t.is_integer());
            assert_eq!(devlin_number(d).unwrap().to_string(), t.numer().to_string());
        }
    }
}
