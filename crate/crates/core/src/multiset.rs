//! Height-bounded multisets over the ground set `[n] = {1, ..., n}`.
//!
//! A [`Multiset`] stores one count per element, each in `0..=height`.
//! Indices are 1-based everywhere in the public interface; the literal
//! syntax is a list of `count/index` tokens such as `3/1 1/3`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    height: u32,
    counts: Vec<u32>,
}

impl Multiset {
    /// The empty multiset over `[n]`.
    pub fn empty(n: usize, height: u32) -> Self {
        Self {
            height,
            counts: vec![0; n],
        }
    }

    /// The regular multiset with every element at full height.
    pub fn full(n: usize, height: u32) -> Self {
        Self {
            height,
            counts: vec![height; n],
        }
    }

    /// Builds a multiset from a dense count vector (position 0 is element 1).
    pub fn from_counts(height: u32, counts: Vec<u32>) -> Result<Self> {
        if let Some((i, &c)) = counts.iter().enumerate().find(|(_, &c)| c > height) {
            return Err(Error::CountTooLarge {
                index: i + 1,
                count: c,
                height,
            });
        }
        Ok(Self { height, counts })
    }

    /// Builds a multiset from `(count, index)` pairs, indices 1-based.
    /// Repeated indices keep the last count given.
    pub fn from_pairs(n: usize, height: u32, pairs: &[(u32, usize)]) -> Result<Self> {
        let mut counts = vec![0; n];
        for &(c, i) in pairs {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            counts[i - 1] = c;
        }
        Self::from_counts(height, counts)
    }

    /// Parses the `count/index` literal syntax. `{}` or an empty string is
    /// the empty multiset; braces and commas are tolerated.
    pub fn parse(n: usize, height: u32, text: &str) -> Result<Self> {
        let cleaned: String = text
            .chars()
            .map(|c| if c == '{' || c == '}' || c == ',' { ' ' } else { c })
            .collect();
        let mut pairs = Vec::new();
        for tok in cleaned.split_whitespace() {
            let (c, i) = tok
                .split_once('/')
                .ok_or_else(|| Error::parse(1, format!("expected count/index, got `{tok}`")))?;
            let c: u32 = c
                .parse()
                .map_err(|_| Error::parse(1, format!("bad count in `{tok}`")))?;
            let i: usize = i
                .parse()
                .map_err(|_| Error::parse(1, format!("bad index in `{tok}`")))?;
            pairs.push((c, i));
        }
        Self::from_pairs(n, height, &pairs)
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// Count of element `index` (1-based).
    pub fn count(&self, index: usize) -> u32 {
        self.counts[index - 1]
    }

    /// Dense counts; position 0 is element 1.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub(crate) fn counts_mut(&mut self) -> &mut [u32] {
        &mut self.counts
    }

    pub fn cardinality(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Root set `M*`: indices with positive count, 1-based and ascending.
    pub fn root_set(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() || self.height != other.height {
            return Err(Error::DimensionMismatch {
                expected_n: self.n(),
                expected_h: self.height,
                got_n: other.n(),
                got_h: other.height,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Result<Self> {
        self.check_compatible(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self {
            height: self.height,
            counts,
        })
    }

    /// `self ⊆ other` pointwise.
    pub fn is_submset(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b))
    }

    /// Mset sum `⊕`, clipped at the height.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let h = self.height;
        self.zip_with(other, |a, b| (a + b).min(h))
    }

    /// Mset difference `⊖`, floored at zero.
    pub fn diff(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::max)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::min)
    }

    /// Complement with respect to the regular multiset of this height.
    pub fn complement(&self) -> Self {
        Self {
            height: self.height,
            counts: self.counts.iter().map(|&c| self.height - c).collect(),
        }
    }

    /// Literal form `3/1 1/3`; empty string for the empty multiset.
    pub fn to_literal(&self) -> String {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, c)| format!("{c}/{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, c)| format!("{c}/{}", i + 1))
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "{{{body}}}")
    }
}
