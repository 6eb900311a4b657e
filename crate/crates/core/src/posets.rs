//! Comparability orders from pair colorings, exact width and
//! Dilworth/Mirsky decompositions, and the window duality report linking
//! homogeneous decompositions to evaluation norms.
//!
//! The minimum chain cover is computed as `|P| − maximum matching` in the
//! bipartite split of the comparability relation; the maximum antichain is
//! extracted from the same matching by König's construction and
//! cross-checked against brute force on small instances.

use thiserror::Error;

use crate::banach::eval_norm_unit;
use crate::colorings::PairColoring;
use crate::sets::{CompactFamily, FinSet, SetFamily};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not irreflexive at {0}")]
    NotIrreflexive(u32),
    #[error("color {color} is not a comparability on this window: \
             {a} < {b} < {c} violates transitivity")]
    NotComparability { color: u8, a: u32, b: u32, c: u32 },
    #[error("relation is not transitive: {a} ≺ {b} ≺ {c} but not {a} ≺ {c}")]
    NotTransitive { a: u32, b: u32, c: u32 },
    #[error("ground set too large for the exact duality check ({0} points)")]
    BudgetExceeded(u32),
}

/// A strict partial order on an explicit finite ground set.
#[derive(Debug, Clone)]
pub struct Poset {
    elems: Vec<u32>,
    below: Vec<u128>, // below[i] bit j set ⇔ elems[i] ≺ elems[j]
}

impl Poset {
    /// Build from strict-order pairs; irreflexivity and transitivity are
    /// verified at construction.
    pub fn new(ground: &FinSet, pairs: &[(u32, u32)]) -> Result<Self, PosetError> {
        let elems = ground.elems();
        let n = elems.len();
        let pos = |x: u32| elems.iter().position(|&e| e == x);
        let mut below = vec![0u128; n];
        for &(a, b) in pairs {
            if a == b {
                return Err(PosetError::NotIrreflexive(a));
            }
            if let (Some(i), Some(j)) = (pos(a), pos(b)) {
                below[i] |= 1 << j;
            }
        }
        let poset = Poset { elems, below };
        poset.validate()?;
        Ok(poset)
    }

    fn validate(&self) -> Result<(), PosetError> {
        let n = self.len();
        for i in 0..n {
            if self.below[i] >> i & 1 == 1 {
                return Err(PosetError::NotIrreflexive(self.elems[i]));
            }
            for j in 0..n {
                if self.below[i] >> j & 1 == 1 {
                    if self.below[j] >> i & 1 == 1 {
                        return Err(PosetError::NotIrreflexive(self.elems[i]));
                    }
                    let missing = self.below[j] & !self.below[i];
                    if missing != 0 {
                        let k = missing.trailing_zeros() as usize;
                        return Err(PosetError::NotTransitive {
                            a: self.elems[i],
                            b: self.elems[j],
                            c: self.elems[k],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn lt(&self, a: u32, b: u32) -> bool {
        let i = self.elems.iter().position(|&e| e == a);
        let j = self.elems.iter().position(|&e| e == b);
        match (i, j) {
            (Some(i), Some(j)) => self.below[i] >> j & 1 == 1,
            _ => false,
        }
    }

    fn comparable(&self, i: usize, j: usize) -> bool {
        self.below[i] >> j & 1 == 1 || self.below[j] >> i & 1 == 1
    }

    /// Maximum matching in the bipartite split (left copy → right copy,
    /// edge `i → j` iff `i ≺ j`), by augmenting paths.
    fn max_matching(&self) -> Vec<Option<usize>> {
        let n = self.len();
        let mut matched_right: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let mut seen = vec![false; n];
            self.try_augment(i, &mut seen, &mut matched_right);
        }
        matched_right
    }

    fn try_augment(
        &self,
        i: usize,
        seen: &mut [bool],
        matched_right: &mut [Option<usize>],
    ) -> bool {
        for j in 0..self.len() {
            if self.below[i] >> j & 1 == 1 && !seen[j] {
                seen[j] = true;
                if matched_right[j].is_none()
                    || self.try_augment(matched_right[j].expect("checked"), seen, matched_right)
                {
                    matched_right[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }

    /// Exact width and a minimum chain cover of that size.
    ///
    /// The two numbers come from different routes (König antichain vs
    /// matching count) and are asserted equal; instances up to 20 points
    /// are additionally cross-checked against brute-force antichain search.
    pub fn width_and_dilworth(&self) -> (usize, Vec<Vec<u32>>) {
        let n = self.len();
        let matched_right = self.max_matching();
        let matching_size = matched_right.iter().flatten().count();

        // chains: follow matched successor pointers
        let mut succ: Vec<Option<usize>> = vec![None; n];
        let mut has_pred = vec![false; n];
        for (j, m) in matched_right.iter().enumerate() {
            if let Some(i) = m {
                succ[*i] = Some(j);
                has_pred[j] = true;
            }
        }
        let mut chains = Vec::new();
        for start in 0..n {
            if !has_pred[start] {
                let mut chain = vec![self.elems[start]];
                let mut cur = start;
                while let Some(next) = succ[cur] {
                    chain.push(self.elems[next]);
                    cur = next;
                }
                chains.push(chain);
            }
        }
        assert_eq!(chains.len(), n - matching_size, "chain cover size mismatch");

        // König: alternating reachability from unmatched left vertices;
        // the antichain avoids the resulting minimum vertex cover
        let mut visited_left = vec![false; n];
        let mut visited_right = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&i| succ[i].is_none()).collect();
        for &i in &stack {
            visited_left[i] = true;
        }
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if self.below[i] >> j & 1 == 1 && !visited_right[j] {
                    visited_right[j] = true;
                    if let Some(i2) = matched_right[j] {
                        if !visited_left[i2] {
                            visited_left[i2] = true;
                            stack.push(i2);
                        }
                    }
                }
            }
        }
        let antichain: Vec<usize> =
            (0..n).filter(|&v| visited_left[v] && !visited_right[v]).collect();
        for (a, &i) in antichain.iter().enumerate() {
            for &j in antichain.iter().skip(a + 1) {
                debug_assert!(!self.comparable(i, j), "König antichain is not an antichain");
            }
        }
        let width = antichain.len();
        assert_eq!(width, chains.len(), "Dilworth duality violated");

        if n <= 20 {
            assert_eq!(width, self.brute_force_width(), "width disagrees with brute force");
        }
        (width, chains)
    }

    /// Brute-force maximum antichain via bitmask recursion.
    pub fn brute_force_width(&self) -> usize {
        let n = self.len();
        assert!(n <= 20, "brute-force width capped at 20 points");
        let mut incomp = vec![0u32; n]; // incomparable, higher-indexed only
        for i in 0..n {
            for j in i + 1..n {
                if !self.comparable(i, j) {
                    incomp[i] |= 1 << j;
                }
            }
        }
        fn rec(avail: u32, incomp: &[u32]) -> usize {
            if avail == 0 {
                return 0;
            }
            let i = avail.trailing_zeros() as usize;
            let without = rec(avail & !(1 << i), incomp);
            let with = 1 + rec(avail & incomp[i], incomp);
            with.max(without)
        }
        rec(if n == 32 { u32::MAX } else { (1u32 << n) - 1 }, &incomp)
    }

    /// Mirsky decomposition: level `j` collects the elements whose longest
    /// chain ending there has length `j+1`; the number of levels equals the
    /// longest chain.
    pub fn mirsky_cover(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut level = vec![0usize; n];
        // iterate to a fixpoint; depth ≤ n so n rounds suffice
        for _ in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if self.below[i] >> j & 1 == 1 {
                        level[j] = level[j].max(level[i] + 1);
                    }
                }
            }
        }
        let height = level.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); height];
        for i in 0..n {
            out[level[i]].push(self.elems[i]);
        }
        for anti in &out {
            for (a, &x) in anti.iter().enumerate() {
                for &y in anti.iter().skip(a + 1) {
                    debug_assert!(!self.lt(x, y) && !self.lt(y, x));
                }
            }
        }
        out
    }

    /// Length of the longest chain.
    pub fn longest_chain(&self) -> usize {
        self.mirsky_cover().len()
    }
}

/// The relation `m ≺ n ⇔ m < n and c({m,n}) = i`, verified to be a strict
/// partial order on the window set.
pub fn poset_from_coloring(
    c: &PairColoring,
    color: u8,
    window: &FinSet,
) -> Result<Poset, PosetError> {
    let elems = window.elems();
    // check transitivity first to report a witnessing triple
    for (x, &a) in elems.iter().enumerate() {
        for (y, &b) in elems.iter().enumerate().skip(x + 1) {
            for &d in elems.iter().skip(y + 1) {
                if c.color(a, b) == color && c.color(b, d) == color && c.color(a, d) != color {
                    return Err(PosetError::NotComparability { color, a, b, c: d });
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for (x, &a) in elems.iter().enumerate() {
        for &b in elems.iter().skip(x + 1) {
            if c.color(a, b) == color {
                pairs.push((a, b));
            }
        }
    }
    Poset::new(window, &pairs)
}

/// Output of the window duality check for a comparability coloring.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub color: u8,
    pub window: FinSet,
    /// Longest `i`-homogeneous chain; the Mirsky pieces are (1−i)-homogeneous.
    pub longest_chain: usize,
    pub mirsky_pieces: Vec<FinSet>,
    /// Width; the Dilworth chains are `i`-homogeneous.
    pub width: usize,
    pub dilworth_pieces: Vec<FinSet>,
    /// Evaluation norm of the window over the family of `i`-homogeneous
    /// sets; equals the longest chain, tying the decomposition to the
    /// norm side of the duality.
    pub eval_norm: u32,
    pub pass: bool,
}

/// Window form of the comparability duality: a set with `i`-homogeneous
/// subsets of size ≤ L splits into ≤ L pieces homogeneous in color `1−i`,
/// and a set of width W into W pieces of color `i`; every piece is verified
/// by a homogeneity check, and L is reproduced as an evaluation norm.
pub fn window_duality_check(
    c: &PairColoring,
    color: u8,
    window: &FinSet,
) -> Result<DualityReport, PosetError> {
    if window.card() > 20 {
        return Err(PosetError::BudgetExceeded(window.card()));
    }
    let poset = poset_from_coloring(c, color, window)?;
    let mirsky = poset.mirsky_cover();
    let longest = mirsky.len();
    let (width, chains) = poset.width_and_dilworth();

    let other = 1 - color;
    let mirsky_pieces: Vec<FinSet> = mirsky
        .iter()
        .map(|p| FinSet::try_from_iter(p.iter().copied()).expect("window elements"))
        .collect();
    let dilworth_pieces: Vec<FinSet> = chains
        .iter()
        .map(|p| FinSet::try_from_iter(p.iter().copied()).expect("window elements"))
        .collect();

    let mut pass = true;
    for piece in &mirsky_pieces {
        pass &= c.is_homogeneous(piece, other);
    }
    for piece in &dilworth_pieces {
        pass &= c.is_homogeneous(piece, color);
    }
    pass &= union_is(window, &mirsky_pieces) && union_is(window, &dilworth_pieces);

    // the i-homogeneous subsets of the window form a hereditary compact
    // family; the evaluation norm of the window over it is the longest chain
    let hom_family: Vec<FinSet> = window
        .subsets()
        .into_iter()
        .filter(|s| c.is_homogeneous(s, color))
        .collect();
    let k = CompactFamily::new(SetFamily::new(hom_family, c.window()).expect("in window"))
        .expect("homogeneous families are hereditary");
    let norm = eval_norm_unit(&k, window);
    pass &= norm as usize == longest;

    Ok(DualityReport {
        color,
        window: *window,
        longest_chain: longest,
        mirsky_pieces,
        width,
        dilworth_pieces,
        eval_norm: norm,
        pass,
    })
}

fn union_is(window: &FinSet, pieces: &[FinSet]) -> bool {
    let mut acc = FinSet::EMPTY;
    let mut total = 0;
    for p in pieces {
        total += p.card();
        acc = acc.union(p);
    }
    acc == *window && total == window.card()
}
