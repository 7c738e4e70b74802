//! Pomsets over a regular multiset of height `h` and their ideals.
//!
//! Every relation pair of a pomset over a regular multiset carries full
//! count, so the pomset is fully described by `(n, h, <)` where `<` is a
//! strict partial order on `[n]`. The transitive closure is always stored.
//!
//! An [`Ideal`] is a multiset obeying the down-closure law: a positive count
//! at `i` forces full count `h` at every `j < i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::multiset::Multiset;

/// Largest ground set supported; orders are stored as 64-bit masks.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pomset {
    height: u32,
    // below[i]: mask of j with j < i (strict), 0-based
    below: Vec<u64>,
    // above[i]: mask of j with i < j (strict), 0-based
    above: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal(Multiset);

impl Ideal {
    pub fn multiset(&self) -> &Multiset {
        &self.0
    }

    pub fn into_multiset(self) -> Multiset {
        self.0
    }

    pub fn cardinality(&self) -> u64 {
        self.0.cardinality()
    }

    pub fn root_set(&self) -> Vec<usize> {
        self.0.root_set()
    }

    pub fn count(&self, index: usize) -> u32 {
        self.0.count(index)
    }

    pub fn counts(&self) -> &[u32] {
        self.0.counts()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn height(&self) -> u32 {
        self.0.height()
    }

    /// Every element of the root set carries the full height.
    pub fn is_full_count(&self) -> bool {
        let h = self.0.height();
        self.0.counts().iter().all(|&c| c == 0 || c == h)
    }

    /// Root-set elements whose count is strictly below the height (1-based).
    pub fn partial_elements(&self) -> Vec<usize> {
        let h = self.0.height();
        self.0
            .counts()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0 && c < h)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn to_literal(&self) -> String {
        self.0.to_literal()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl Pomset {
    /// Builds a pomset on `[n]` from pairs `(i, j)` meaning `i < j` (1-based).
    /// The pairs need not be covers; the transitive closure is computed and
    /// any cycle is rejected.
    pub fn new(n: usize, height: u32, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as u64,
                lo: 1,
                hi: MAX_ELEMENTS as u64,
            });
        }
        if height == 0 {
            return Err(Error::OutOfRange {
                what: "height",
                value: 0,
                lo: 1,
                hi: u64::from(u32::MAX),
            });
        }
        let mut less = vec![vec![false; n]; n];
        for &(i, j) in pairs {
            for idx in [i, j] {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
            }
            if i == j {
                return Err(Error::CycleDetected(i));
            }
            less[i - 1][j - 1] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i][i]) {
            return Err(Error::CycleDetected(i + 1));
        }
        let mut below = vec![0u64; n];
        let mut above = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if less[i][j] {
                    below[j] |= 1 << i;
                    above[i] |= 1 << j;
                }
            }
        }
        // antisymmetry re-check after closure
        debug_assert!((0..n).all(|i| (0..n).all(|j| !(less[i][j] && less[j][i]))));
        Ok(Self {
            height,
            below,
            above,
        })
    }

    pub fn antichain(n: usize, height: u32) -> Result<Self> {
        Self::new(n, height, &[])
    }

    /// The chain `1 < 2 < ... < n`.
    pub fn chain(n: usize, height: u32) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, height, &pairs)
    }

    pub fn n(&self) -> usize {
        self.below.len()
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// `i < j` strictly, 1-based.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j - 1] >> (i - 1) & 1 == 1
    }

    /// Mask of elements strictly below element `i` (0-based).
    pub(crate) fn below_mask(&self, i: usize) -> u64 {
        self.below[i]
    }

    pub(crate) fn above_mask(&self, i: usize) -> u64 {
        self.above[i]
    }

    /// All pairs `(i, j)` with `i < j` in the closure, 1-based, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.less(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Covering pairs of the order (the Hasse diagram), 1-based.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| {
                // no k with i < k < j
                self.above[i - 1] & self.below[j - 1] == 0
            })
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| i == j || (self.below[j] >> i) & 1 == 1 || (self.below[i] >> j) & 1 == 1)
        })
    }

    pub fn is_antichain(&self) -> bool {
        self.below.iter().all(|&m| m == 0)
    }

    /// A linear extension (0-based), minimal elements first; ties broken by
    /// smallest index.
    pub(crate) fn linear_extension(&self) -> Vec<usize> {
        let n = self.n();
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&i| placed >> i & 1 == 0 && self.below[i] & !placed == 0)
                .expect("acyclic order always has a minimal element");
            placed |= 1 << next;
            out.push(next);
        }
        out
    }

    /// For a chain, its elements from bottom to top (1-based).
    pub fn chain_order(&self) -> Option<Vec<usize>> {
        if !self.is_chain() {
            return None;
        }
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&i| self.below[i].count_ones());
        Some(order.into_iter().map(|i| i + 1).collect())
    }

    /// Minimal elements (1-based).
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.below[i] == 0).map(|i| i + 1).collect()
    }

    /// Maximal elements (1-based).
    pub fn maximal_elements_of_order(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.above[i] == 0).map(|i| i + 1).collect()
    }

    /// The dual pomset: same multiset, order reversed.
    pub fn dual(&self) -> Self {
        Self {
            height: self.height,
            below: self.above.clone(),
            above: self.below.clone(),
        }
    }

    fn check_dims(&self, m: &Multiset) -> Result<()> {
        if m.n() != self.n() || m.height() != self.height {
            return Err(Error::DimensionMismatch {
                expected_n: self.n(),
                expected_h: self.height,
                got_n: m.n(),
                got_h: m.height(),
            });
        }
        Ok(())
    }

    fn first_violation(&self, m: &Multiset) -> Option<(usize, usize)> {
        let c = m.counts();
        for i in 0..self.n() {
            if c[i] > 0 {
                if let Some(j) = bits(self.below[i]).find(|&j| c[j] != self.height) {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, m: &Multiset) -> Result<bool> {
        self.check_dims(m)?;
        Ok(self.first_violation(m).is_none())
    }

    /// Validates `m` as an ideal of this pomset.
    pub fn ideal(&self, m: Multiset) -> Result<Ideal> {
        self.check_dims(&m)?;
        match self.first_violation(&m) {
            None => Ok(Ideal(m)),
            Some((above, below)) => Err(Error::NotAnIdeal { above, below }),
        }
    }

    pub fn empty_ideal(&self) -> Ideal {
        Ideal(Multiset::empty(self.n(), self.height))
    }

    pub fn full_ideal(&self) -> Ideal {
        Ideal(Multiset::full(self.n(), self.height))
    }

    /// Ideal generated by a submultiset: each element keeps its count and
    /// everything strictly below an element of the root set becomes full.
    pub fn generate(&self, m: &Multiset) -> Result<Ideal> {
        self.check_dims(m)?;
        Ok(Ideal(self.generate_unchecked(m.counts())))
    }

    pub(crate) fn generate_unchecked(&self, counts: &[u32]) -> Multiset {
        let mut down = 0u64;
        for (i, &c) in counts.iter().enumerate() {
            if c > 0 {
                down |= self.below[i];
            }
        }
        let out: Vec<u32> = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if down >> i & 1 == 1 { self.height } else { c })
            .collect();
        Multiset::from_counts(self.height, out).expect("counts bounded by height")
    }

    /// `Max(I)`: root-set elements with nothing of the root set above them,
    /// counts retained.
    pub fn maximal_elements(&self, ideal: &Ideal) -> Multiset {
        let c = ideal.counts();
        let root: u64 = c
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .fold(0, |acc, (i, _)| acc | 1 << i);
        let counts = c
            .iter()
            .enumerate()
            .map(|(i, &x)| if x > 0 && self.above[i] & root == 0 { x } else { 0 })
            .collect();
        Multiset::from_counts(self.height, counts).expect("subset of an ideal")
    }

    /// Complement of an ideal of `self`, as an ideal of the dual pomset.
    pub fn complement_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        let checked = self.ideal(ideal.multiset().clone())?;
        self.dual().ideal(checked.0.complement())
    }

    fn enumerate_ideals(&self, target: Option<u64>) -> Vec<Ideal> {
        let n = self.n();
        let order = self.linear_extension();
        let mut counts = vec![0u32; n];
        let mut out = Vec::new();

        struct Ctx<'a> {
            pomset: &'a Pomset,
            order: Vec<usize>,
            target: Option<u64>,
            out: &'a mut Vec<Ideal>,
        }

        fn rec(ctx: &mut Ctx<'_>, counts: &mut Vec<u32>, pos: usize, sum: u64) {
            let n = ctx.order.len();
            let h = ctx.pomset.height;
            if let Some(t) = ctx.target {
                if sum > t || sum + u64::from(h) * ((n - pos) as u64) < t {
                    return;
                }
            }
            if pos == n {
                if ctx.target.map_or(true, |t| t == sum) {
                    ctx.out.push(Ideal(
                        Multiset::from_counts(h, counts.clone()).expect("bounded"),
                    ));
                }
                return;
            }
            let i = ctx.order[pos];
            let preds_full = bits(ctx.pomset.below[i]).all(|j| counts[j] == h);
            let hi = if preds_full { h } else { 0 };
            for c in 0..=hi {
                counts[i] = c;
                rec(ctx, counts, pos + 1, sum + u64::from(c));
            }
            counts[i] = 0;
        }

        let mut ctx = Ctx {
            pomset: self,
            order,
            target,
            out: &mut out,
        };
        rec(&mut ctx, &mut counts, 0, 0);
        out.sort();
        out
    }

    /// Every ideal of the pomset, sorted by count vector.
    pub fn all_ideals(&self) -> Vec<Ideal> {
        self.enumerate_ideals(None)
    }

    /// `I^t`: all ideals of cardinality `t`, sorted by count vector.
    pub fn ideals_of_cardinality(&self, t: u64) -> Result<Vec<Ideal>> {
        let max = self.n() as u64 * u64::from(self.height);
        if t > max {
            return Err(Error::OutOfRange {
                what: "ideal cardinality",
                value: t,
                lo: 0,
                hi: max,
            });
        }
        Ok(self.enumerate_ideals(Some(t)))
    }

    /// `I_j^t`: ideals of cardinality `t` with exactly `j` maximal elements.
    pub fn ideals_by_maximal_count(&self, t: u64, j: usize) -> Result<Vec<Ideal>> {
        let hi = (t as usize).min(self.n());
        if j == 0 || j > hi {
            return Err(Error::OutOfRange {
                what: "maximal element count",
                value: j as u64,
                lo: 1,
                hi: hi as u64,
            });
        }
        Ok(self
            .ideals_of_cardinality(t)?
            .into_iter()
            .filter(|i| self.maximal_elements(i).root_set().len() == j)
            .collect())
    }

    /// An ideal `J ⊆ I` with `|J| = s`, obtained by repeatedly decrementing
    /// the largest-index maximal element.
    pub fn shrink_ideal(&self, ideal: &Ideal, s: u64) -> Result<Ideal> {
        let mut cur = self.ideal(ideal.multiset().clone())?.0;
        let card = cur.cardinality();
        if s > card {
            return Err(Error::OutOfRange {
                what: "target cardinality",
                value: s,
                lo: 0,
                hi: card,
            });
        }
        for _ in s..card {
            let max = self.maximal_elements(&Ideal(cur.clone()));
            let top = *max.root_set().last().expect("nonempty ideal has a maximal element");
            cur.counts_mut()[top - 1] -= 1;
        }
        Ok(Ideal(cur))
    }

    /// Down-set generated by an index mask in the induced poset.
    pub(crate) fn down_set_mask(&self, mask: u64) -> u64 {
        bits(mask).fold(mask, |acc, i| acc | self.below[i])
    }
}

pub(crate) fn mask_bits(mask: u64) -> impl Iterator<Item = usize> {
    bits(mask)
}
