//! Finite sets of naturals as fixed-width bit vectors, and finite set
//! families over an explicit ground window.
//!
//! A [`FinSet`] holds elements `< 128`; every family operation is
//! window-relative and exact. Families are kept in a canonical order
//! (cardinality, then lexicographic on the ascending element lists) so all
//! outputs are deterministic.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on elements: sets live inside `[0, 128)`.
pub const MAX_WINDOW: u32 = 128;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("element {0} exceeds the supported window of {MAX_WINDOW}")]
    ElementTooLarge(u32),
    #[error("member {member} is not contained in the ground window [0,{window})")]
    WindowOverflow { member: String, window: u32 },
    #[error("family is not hereditary: contains {member} but not its subset {missing}")]
    NotHereditary { member: String, missing: String },
    #[error("family does not contain the empty set")]
    MissingEmptySet,
    #[error("cannot parse finite set from {0:?}")]
    Parse(String),
}

/// A finite subset of ℕ, stored as a 128-bit mask.
///
/// Elements are absolute naturals in `[0, 128)`; the strictly increasing
/// internal order is the bit order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FinSet {
    bits: u128,
}

impl FinSet {
    pub const EMPTY: FinSet = FinSet { bits: 0 };

    pub fn from_bits(bits: u128) -> Self {
        FinSet { bits }
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn singleton(n: u32) -> Self {
        assert!(n < MAX_WINDOW, "element {n} out of range");
        FinSet { bits: 1u128 << n }
    }

    /// Interval `[lo, hi)`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        assert!(hi <= MAX_WINDOW && lo <= hi);
        if lo == hi {
            return FinSet::EMPTY;
        }
        let ones = if hi == MAX_WINDOW { !0u128 } else { (1u128 << hi) - 1 };
        FinSet { bits: ones & !((1u128 << lo) - 1) }
    }

    /// `[0, n)`, the canonical window set.
    pub fn window(n: u32) -> Self {
        Self::interval(0, n)
    }

    pub fn try_from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Result<Self, SetError> {
        let mut bits = 0u128;
        for n in iter {
            if n >= MAX_WINDOW {
                return Err(SetError::ElementTooLarge(n));
            }
            bits |= 1u128 << n;
        }
        Ok(FinSet { bits })
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn of(elems: &[u32]) -> Self {
        Self::try_from_iter(elems.iter().copied()).expect("element out of range")
    }

    pub fn card(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, n: u32) -> bool {
        n < MAX_WINDOW && self.bits >> n & 1 == 1
    }

    pub fn min_elem(&self) -> Option<u32> {
        if self.is_empty() { None } else { Some(self.bits.trailing_zeros()) }
    }

    pub fn max_elem(&self) -> Option<u32> {
        if self.is_empty() { None } else { Some(127 - self.bits.leading_zeros()) }
    }

    pub fn insert(&self, n: u32) -> Self {
        assert!(n < MAX_WINDOW);
        FinSet { bits: self.bits | 1u128 << n }
    }

    pub fn remove(&self, n: u32) -> Self {
        FinSet { bits: self.bits & !(1u128 << n) }
    }

    pub fn union(&self, other: &FinSet) -> Self {
        FinSet { bits: self.bits | other.bits }
    }

    pub fn intersect(&self, other: &FinSet) -> Self {
        FinSet { bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &FinSet) -> Self {
        FinSet { bits: self.bits & !other.bits }
    }

    pub fn is_subset_of(&self, other: &FinSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// `₊s`: the set without its minimum.
    pub fn drop_min(&self) -> Self {
        match self.min_elem() {
            Some(m) => self.remove(m),
            None => *self,
        }
    }

    /// `M/n`: elements strictly greater than `n`.
    pub fn tail_past(&self, n: u32) -> Self {
        self.difference(&FinSet::interval(0, n + 1))
    }

    /// Elements strictly below `n`.
    pub fn below(&self, n: u32) -> Self {
        self.intersect(&FinSet::interval(0, n))
    }

    /// `s ⊑ t`: `s` is an initial segment of `t`, i.e. `s = t ∩ [0,n]` for
    /// some `n` (the empty set is an initial segment of everything).
    pub fn is_initial_segment_of(&self, t: &FinSet) -> bool {
        match self.max_elem() {
            None => true,
            Some(m) => self.bits == t.below(m + 1).bits,
        }
    }

    /// Proper initial segments plus the set itself, shortest first.
    pub fn initial_segments(&self) -> Vec<FinSet> {
        let mut out = vec![FinSet::EMPTY];
        let mut acc = FinSet::EMPTY;
        for n in self.iter() {
            acc = acc.insert(n);
            out.push(acc);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let bits = self.bits;
        (0..MAX_WINDOW).filter(move |n| bits >> n & 1 == 1)
    }

    pub fn elems(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets; intended for small sets only.
    pub fn subsets(&self) -> Vec<FinSet> {
        let elems = self.elems();
        assert!(elems.len() <= 24, "subset enumeration capped at 24 elements");
        let mut out = Vec::with_capacity(1 << elems.len());
        for mask in 0u32..1u32 << elems.len() {
            let mut bits = 0u128;
            for (i, e) in elems.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    bits |= 1u128 << e;
                }
            }
            out.push(FinSet { bits });
        }
        out
    }

    /// All subsets of a given cardinality.
    pub fn subsets_of_size(&self, k: u32) -> Vec<FinSet> {
        let elems = self.elems();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(elems: &[u32], k: u32, start: usize, cur: &mut Vec<u32>, out: &mut Vec<FinSet>) {
            if cur.len() as u32 == k {
                out.push(FinSet::of(cur));
                return;
            }
            let need = k as usize - cur.len();
            for i in start..=elems.len().saturating_sub(need) {
                cur.push(elems[i]);
                rec(elems, k, i + 1, cur, out);
                cur.pop();
            }
        }
        if k as usize <= elems.len() {
            rec(&elems, k, 0, &mut cur, &mut out);
        }
        out
    }

    /// Canonical order: cardinality, then lexicographic on the ascending
    /// element lists.
    fn canon_cmp(&self, other: &FinSet) -> std::cmp::Ordering {
        self.card().cmp(&other.card()).then_with(|| {
            let d = self.bits ^ other.bits;
            if d == 0 {
                std::cmp::Ordering::Equal
            } else {
                // The set containing the least element of the symmetric
                // difference comes first in lexicographic order.
                let low = d.trailing_zeros();
                if self.bits >> low & 1 == 1 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            }
        })
    }
}

impl PartialOrd for FinSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FinSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canon_cmp(other)
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for FinSet {
    type Err = SetError;

    /// Text form `{1,3,7}`; whitespace tolerated, `{}` is the empty set.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| SetError::Parse(s.to_string()))?;
        let mut elems = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let n: u32 = part.parse().map_err(|_| SetError::Parse(s.to_string()))?;
            elems.push(n);
        }
        FinSet::try_from_iter(elems)
    }
}

impl Serialize for FinSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for FinSet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let elems: Vec<u32> = Vec::deserialize(de)?;
        FinSet::try_from_iter(elems).map_err(serde::de::Error::custom)
    }
}

/// Closure / maximality mode for family operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    /// Closed under arbitrary subsets.
    Subset,
    /// Closed under initial segments (`⊑`).
    InitialSegment,
}

/// A finite collection of [`FinSet`]s inside a ground window `[0, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFamily {
    members: Vec<FinSet>,
    window: u32,
}

impl SetFamily {
    pub fn new(members: impl IntoIterator<Item = FinSet>, window: u32) -> Result<Self, SetError> {
        if window > MAX_WINDOW {
            return Err(SetError::ElementTooLarge(window));
        }
        let win = FinSet::window(window);
        let mut members: Vec<FinSet> = members.into_iter().collect();
        for m in &members {
            if !m.is_subset_of(&win) {
                return Err(SetError::WindowOverflow { member: m.to_string(), window });
            }
        }
        members.sort();
        members.dedup();
        Ok(SetFamily { members, window })
    }

    pub fn empty(window: u32) -> Self {
        SetFamily { members: Vec::new(), window }
    }

    pub fn members(&self) -> &[FinSet] {
        &self.members
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &FinSet) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FinSet> {
        self.members.iter()
    }

    /// `fam ↾ A := fam ∩ 𝒫(A)`: exactly the members contained in `A`.
    pub fn restrict(&self, a: &FinSet) -> SetFamily {
        SetFamily {
            members: self.members.iter().filter(|m| m.is_subset_of(a)).copied().collect(),
            window: self.window,
        }
    }

    /// Smallest superfamily closed under the chosen relation.
    ///
    /// Downward closures cannot leave the ground window; the window check is
    /// kept anyway so a violated invariant surfaces as an error rather than
    /// silent corruption.
    pub fn hereditary_sq_closure(&self, mode: ClosureMode) -> Result<SetFamily, SetError> {
        let mut acc: Vec<FinSet> = Vec::new();
        for m in &self.members {
            match mode {
                ClosureMode::Subset => acc.extend(m.subsets()),
                ClosureMode::InitialSegment => acc.extend(m.initial_segments()),
            }
        }
        SetFamily::new(acc, self.window)
    }

    /// Members with no proper extension in the family, where "extension"
    /// matches the closure mode.
    pub fn max_elements(&self, mode: ClosureMode) -> SetFamily {
        let is_ext = |small: &FinSet, big: &FinSet| match mode {
            ClosureMode::Subset => small != big && small.is_subset_of(big),
            ClosureMode::InitialSegment => small != big && small.is_initial_segment_of(big),
        };
        let members = self
            .members
            .iter()
            .filter(|m| !self.members.iter().any(|other| is_ext(m, other)))
            .copied()
            .collect();
        SetFamily { members, window: self.window }
    }

    /// Largest member cardinality (0 for the empty family).
    pub fn max_card(&self) -> u32 {
        self.members.iter().map(|m| m.card()).max().unwrap_or(0)
    }
}

/// A hereditary (subset-closed, hence ⊑-closed) family containing ∅ — the
/// window-scale stand-in for a compact hereditary subset of `2^ℕ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactFamily {
    family: SetFamily,
}

impl CompactFamily {
    /// Validates heredity and membership of ∅.
    pub fn new(family: SetFamily) -> Result<Self, SetError> {
        if !family.contains(&FinSet::EMPTY) {
            return Err(SetError::MissingEmptySet);
        }
        for m in family.iter() {
            for n in m.iter() {
                let sub = m.remove(n);
                if !family.contains(&sub) {
                    return Err(SetError::NotHereditary {
                        member: m.to_string(),
                        missing: sub.to_string(),
                    });
                }
            }
        }
        Ok(CompactFamily { family })
    }

    /// Downward closure of arbitrary generators.
    pub fn generated_by(
        generators: impl IntoIterator<Item = FinSet>,
        window: u32,
    ) -> Result<Self, SetError> {
        let mut gens: Vec<FinSet> = generators.into_iter().collect();
        gens.push(FinSet::EMPTY);
        let fam = SetFamily::new(gens, window)?.hereditary_sq_closure(ClosureMode::Subset)?;
        Ok(CompactFamily { family: fam })
    }

    /// All sets of cardinality at most `k` inside the window.
    pub fn cube_family(window: u32, k: u32) -> Self {
        let mut members = Vec::new();
        for j in 0..=k.min(window) {
            members.extend(FinSet::window(window).subsets_of_size(j));
        }
        CompactFamily { family: SetFamily::new(members, window).unwrap() }
    }

    /// The Schreier-closure trace on the window: sets with `#s ≤ min s + 1`.
    pub fn schreier_family(window: u32) -> Self {
        let mut members = vec![FinSet::EMPTY];
        for m in 0..window {
            let tail = FinSet::interval(m + 1, window);
            for extra in 0..=m.min(tail.card()) {
                for t in tail.subsets_of_size(extra) {
                    members.push(t.insert(m));
                }
            }
        }
        CompactFamily { family: SetFamily::new(members, window).unwrap() }
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn window(&self) -> u32 {
        self.family.window
    }

    pub fn contains(&self, s: &FinSet) -> bool {
        self.family.contains(s)
    }

    pub fn members(&self) -> &[FinSet] {
        self.family.members()
    }

    pub fn restrict(&self, a: &FinSet) -> CompactFamily {
        CompactFamily { family: self.family.restrict(a) }
    }

    /// Residual family `K_{{n}} = {s : n < s and {n} ∪ s ∈ K}`.
    pub fn residual(&self, n: u32) -> SetFamily {
        let members: Vec<FinSet> = self
            .family
            .iter()
            .filter(|m| m.contains(n) && m.min_elem() == Some(n))
            .map(|m| m.remove(n))
            .collect();
        SetFamily::new(members, self.family.window).unwrap()
    }

    /// Rank of the well-founded tree `(K, ⊏)`: 0 for `{∅}`, else one more
    /// than the largest residual rank.
    pub fn tree_rank(&self) -> u32 {
        fn rank_of(fam: &SetFamily, prefix: FinSet, start: u32) -> u32 {
            let mut best = 0;
            for n in start..fam.window() {
                let node = prefix.insert(n);
                if fam.contains(&node) {
                    best = best.max(1 + rank_of(fam, node, n + 1));
                }
            }
            best
        }
        rank_of(&self.family, FinSet::EMPTY, 0)
    }

    /// Window Cantor–Bendixson rank: the number of derivative steps
    /// (removing ⊑-maximal members) until the family is exhausted.
    pub fn cb_rank_window(&self) -> u32 {
        let mut current = self.family.clone();
        let mut steps = 0;
        while !current.is_empty() {
            let maximal = current.max_elements(ClosureMode::InitialSegment);
            let remaining: Vec<FinSet> =
                current.iter().filter(|m| !maximal.contains(m)).copied().collect();
            current = SetFamily::new(remaining, current.window).unwrap();
            steps += 1;
        }
        steps
    }
}

/// `s ⊑ t` as a free function, matching the operation table.
pub fn is_initial_segment(s: &FinSet, t: &FinSet) -> bool {
    s.is_initial_segment_of(t)
}
