//! Ordinals below ω^ω in Cantor normal form.
//!
//! An ordinal is stored as the coefficient list of `Σ ω^k · c_k`. This is
//! exactly what uniform-front ranks need: finite ranks, ω for the Schreier
//! barrier, and the sums/products produced by the ⊕ and ⊗ constructions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exponents are capped; anything above this would leave the supported
/// ω^ω segment of the ordinals.
pub const MAX_EXPONENT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("ordinal exceeds the supported segment below omega^omega (exponent {0})")]
    RankTooHigh(usize),
}

/// Coefficients of `ω^k`, little-endian in `k`, canonical (no trailing zeros).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct OrdinalCnf {
    coeffs: Vec<u64>,
}

impl OrdinalCnf {
    pub fn zero() -> Self {
        OrdinalCnf { coeffs: Vec::new() }
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 { Self::zero() } else { OrdinalCnf { coeffs: vec![n] } }
    }

    pub fn omega() -> Self {
        OrdinalCnf { coeffs: vec![0, 1] }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Result<Self, OrdinalError> {
        if coeffs.len() > MAX_EXPONENT {
            return Err(OrdinalError::RankTooHigh(coeffs.len()));
        }
        let mut c = OrdinalCnf { coeffs };
        c.normalize();
        Ok(c)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    /// `true` if the ordinal is a successor (finite part nonzero).
    pub fn is_successor(&self) -> bool {
        !self.is_zero() && self.coeffs[0] > 0
    }

    /// Predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<OrdinalCnf> {
        if !self.is_successor() {
            return None;
        }
        let mut c = self.clone();
        c.coeffs[0] -= 1;
        c.normalize();
        Some(c)
    }

    /// The `n`-th element of the canonical fundamental sequence of a limit
    /// ordinal: for `β + ω^{k+1}·(c+1)` it is `β + ω^{k+1}·c + ω^k·n`.
    pub fn fundamental(&self, n: u64) -> Option<OrdinalCnf> {
        if self.is_zero() || self.is_successor() {
            return None;
        }
        let k = self.coeffs.iter().position(|&c| c > 0).expect("nonzero limit ordinal");
        let mut c = self.clone();
        c.coeffs[k] -= 1;
        debug_assert!(k >= 1);
        c.coeffs[k - 1] = n;
        c.normalize();
        Some(c)
    }

    /// Ordinal addition: terms of `self` strictly below the leading term of
    /// `rhs` are absorbed.
    pub fn add(&self, rhs: &OrdinalCnf) -> OrdinalCnf {
        if rhs.is_zero() {
            return self.clone();
        }
        let k = rhs.coeffs.len() - 1;
        let mut coeffs = rhs.coeffs.clone();
        if self.coeffs.len() > k {
            coeffs[k] += self.coeffs[k];
            coeffs.extend_from_slice(&self.coeffs[k + 1..]);
        }
        let mut c = OrdinalCnf { coeffs };
        c.normalize();
        c
    }

    /// Ordinal multiplication (left-distributes over the CNF of `rhs`).
    pub fn mul(&self, rhs: &OrdinalCnf) -> Result<OrdinalCnf, OrdinalError> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(OrdinalCnf::zero());
        }
        let deg = self.coeffs.len() - 1;
        let lead = self.coeffs[deg];
        let mut acc = OrdinalCnf::zero();
        for (j, &cj) in rhs.coeffs.iter().enumerate().rev() {
            if cj == 0 {
                continue;
            }
            let term = if j == 0 {
                // (ω^deg·lead + r)·c = ω^deg·(lead·c) + r
                let mut coeffs = self.coeffs.clone();
                coeffs[deg] = lead * cj;
                OrdinalCnf { coeffs }
            } else {
                // self·ω^j·c = ω^{deg+j}·c
                if deg + j >= MAX_EXPONENT {
                    return Err(OrdinalError::RankTooHigh(deg + j));
                }
                let mut coeffs = vec![0; deg + j + 1];
                coeffs[deg + j] = cj;
                OrdinalCnf { coeffs }
            };
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl PartialOrd for OrdinalCnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdinalCnf {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.coeffs.len() != other.coeffs.len() {
            return self.coeffs.len().cmp(&other.coeffs.len());
        }
        for k in (0..self.coeffs.len()).rev() {
            match self.coeffs[k].cmp(&other.coeffs[k]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for OrdinalCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrdinalCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "w")?,
                1 => write!(f, "w*{c}")?,
                _ if c == 1 => write!(f, "w^{k}")?,
                _ => write!(f, "w^{k}*{c}")?,
            }
        }
        Ok(())
    }
}
