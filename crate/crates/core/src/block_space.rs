//! The block space `Z_m^N = Z_m^{k_1} ⊕ ... ⊕ Z_m^{k_n}` with the pomset
//! block metric.
//!
//! Vectors are stored flat (`N` residues); block views are derived from the
//! label map `π = (k_1, ..., k_n)`. Arithmetic never looks at blocks.
//! Exhaustive iteration runs in odometer order (last coordinate fastest),
//! which coincides with lexicographic order on the residues.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::pomset::{mask_bits, Pomset};

/// Default upper bound on `m^N` for any exhaustive scan.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// Lee weight of a residue: `min(x, m - x)`.
pub fn lee_weight(x: u32, m: u32) -> u32 {
    let x = x % m;
    x.min(m - x)
}

/// Largest Lee weight among the entries of a block; zero for the zero block.
pub fn block_max_lee(block: &[u32], m: u32) -> u32 {
    block.iter().map(|&x| lee_weight(x, m)).max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockVector(Vec<u32>);

impl BlockVector {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub(crate) fn from_raw(coords: Vec<u32>) -> Self {
        Self(coords)
    }
}

impl fmt::Display for BlockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSpace {
    m: u32,
    pomset: Pomset,
    blocks: Vec<usize>,
    offsets: Vec<usize>,
}

impl BlockSpace {
    /// A space over `Z_m` whose pomset has height `⌊m/2⌋` and whose `i`-th
    /// block has length `blocks[i-1]`.
    pub fn new(m: u32, pomset: Pomset, blocks: Vec<usize>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSpace(format!("modulus m = {m} must be at least 2")));
        }
        if pomset.height() != m / 2 {
            return Err(Error::InvalidSpace(format!(
                "pomset height {} must equal floor(m/2) = {}",
                pomset.height(),
                m / 2
            )));
        }
        if blocks.len() != pomset.n() {
            return Err(Error::InvalidSpace(format!(
                "{} block lengths given for a pomset on {} elements",
                blocks.len(),
                pomset.n()
            )));
        }
        if let Some(i) = blocks.iter().position(|&k| k == 0) {
            return Err(Error::InvalidSpace(format!("block {} has length 0", i + 1)));
        }
        let mut offsets = Vec::with_capacity(blocks.len() + 1);
        let mut acc = 0;
        for &k in &blocks {
            offsets.push(acc);
            acc += k;
        }
        offsets.push(acc);
        Ok(Self {
            m,
            pomset,
            blocks,
            offsets,
        })
    }

    /// Shorthand: order given as 1-based pairs `(i, j)` meaning `i < j`.
    pub fn with_order(m: u32, blocks: Vec<usize>, pairs: &[(usize, usize)]) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSpace(format!("modulus m = {m} must be at least 2")));
        }
        let pomset = Pomset::new(blocks.len(), m / 2, pairs)?;
        Self::new(m, pomset, blocks)
    }

    pub fn chain(m: u32, blocks: Vec<usize>) -> Result<Self> {
        let pairs: Vec<_> = (1..blocks.len()).map(|i| (i, i + 1)).collect();
        Self::with_order(m, blocks, &pairs)
    }

    pub fn antichain(m: u32, blocks: Vec<usize>) -> Result<Self> {
        Self::with_order(m, blocks, &[])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `⌊m/2⌋`, the largest Lee weight and the pomset height.
    pub fn h(&self) -> u32 {
        self.m / 2
    }

    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    /// Total length `N = Σ k_i`.
    pub fn len(&self) -> usize {
        self.offsets[self.blocks.len()]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Length of block `index` (1-based).
    pub fn block_len(&self, index: usize) -> usize {
        self.blocks[index - 1]
    }

    pub fn pomset(&self) -> &Pomset {
        &self.pomset
    }

    pub fn has_unit_blocks(&self) -> bool {
        self.blocks.iter().all(|&k| k == 1)
    }

    /// Common block length, if all blocks have the same length.
    pub fn uniform_block_len(&self) -> Option<usize> {
        let k = self.blocks[0];
        self.blocks.iter().all(|&x| x == k).then_some(k)
    }

    /// Same modulus and blocks, dual pomset.
    pub fn dual(&self) -> Self {
        Self {
            m: self.m,
            pomset: self.pomset.dual(),
            blocks: self.blocks.clone(),
            offsets: self.offsets.clone(),
        }
    }

    /// Maximum possible weight `n⌊m/2⌋`.
    pub fn max_weight(&self) -> u64 {
        self.n() as u64 * u64::from(self.h())
    }

    /// `m^N` with overflow reported as an error.
    pub fn size(&self) -> Result<u128> {
        checked_pow(u128::from(self.m), self.len()).ok_or(Error::Overflow("m^N"))
    }

    /// `m^N` as an index bound, or `SpaceTooLarge` if it exceeds `cap`.
    pub fn enumerable_size(&self, cap: u128) -> Result<usize> {
        match self.size() {
            Ok(s) if s <= cap => Ok(s as usize),
            Ok(s) => Err(Error::SpaceTooLarge {
                size: s.to_string(),
                cap,
            }),
            Err(_) => Err(Error::SpaceTooLarge {
                size: format!("{}^{}", self.m, self.len()),
                cap,
            }),
        }
    }

    /// Builds a vector, reducing each entry modulo `m`.
    pub fn vector(&self, coords: &[i64]) -> Result<BlockVector> {
        if coords.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: coords.len(),
            });
        }
        let m = i64::from(self.m);
        Ok(BlockVector(
            coords.iter().map(|&x| x.rem_euclid(m) as u32).collect(),
        ))
    }

    pub fn zero(&self) -> BlockVector {
        BlockVector(vec![0; self.len()])
    }

    /// The vector that is `value` on every coordinate of block `index` (1-based)
    /// and zero elsewhere.
    pub fn block_unit(&self, index: usize, value: u32) -> BlockVector {
        let mut v = vec![0; self.len()];
        let r = self.block_range(index - 1);
        for x in &mut v[r] {
            *x = value % self.m;
        }
        BlockVector(v)
    }

    pub(crate) fn check(&self, v: &BlockVector) -> Result<()> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn block_range(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    /// Block `index` (1-based) of `v`.
    pub fn block<'a>(&self, v: &'a BlockVector, index: usize) -> &'a [u32] {
        &v.0[self.block_range(index - 1)]
    }

    pub fn add(&self, u: &BlockVector, v: &BlockVector) -> BlockVector {
        let m = self.m;
        BlockVector(u.0.iter().zip(&v.0).map(|(&a, &b)| (a + b) % m).collect())
    }

    pub fn sub(&self, u: &BlockVector, v: &BlockVector) -> BlockVector {
        let m = self.m;
        BlockVector(u.0.iter().zip(&v.0).map(|(&a, &b)| (a + m - b) % m).collect())
    }

    pub fn neg(&self, v: &BlockVector) -> BlockVector {
        let m = self.m;
        BlockVector(v.0.iter().map(|&a| (m - a) % m).collect())
    }

    pub fn scale(&self, v: &BlockVector, a: u32) -> BlockVector {
        let m = u64::from(self.m);
        let a = u64::from(a) % m;
        BlockVector(v.0.iter().map(|&x| (u64::from(x) * a % m) as u32).collect())
    }

    /// Standard dot product over all `N` flat coordinates, mod `m`.
    pub fn dot(&self, u: &BlockVector, v: &BlockVector) -> u32 {
        dot_mod(&u.0, &v.0, self.m)
    }

    /// Per-block maximum Lee weights, 0 for zero blocks.
    pub(crate) fn block_weights(&self, coords: &[u32]) -> Vec<u32> {
        (0..self.n())
            .map(|i| block_max_lee(&coords[self.block_range(i)], self.m))
            .collect()
    }

    /// Block support: count `w̃_L(v_i)` at each nonzero block.
    pub fn support(&self, v: &BlockVector) -> Multiset {
        Multiset::from_counts(self.h(), self.block_weights(&v.0)).expect("bounded by floor(m/2)")
    }

    /// Pomset block weight `|⟨supp(v)⟩|`.
    pub fn weight(&self, v: &BlockVector) -> u64 {
        self.weight_of(&v.0)
    }

    pub(crate) fn weight_of(&self, coords: &[u32]) -> u64 {
        let mut supp = 0u64;
        let mut down = 0u64;
        let mut tops = [0u32; crate::pomset::MAX_ELEMENTS];
        for i in 0..self.n() {
            let c = block_max_lee(&coords[self.block_range(i)], self.m);
            if c > 0 {
                supp |= 1 << i;
                down |= self.pomset.below_mask(i);
                tops[i] = c;
            }
        }
        let free = supp & !down;
        u64::from(down.count_ones()) * u64::from(self.h())
            + mask_bits(free).map(|i| u64::from(tops[i])).sum::<u64>()
    }

    /// Ideal generated by the block support of raw coordinates.
    pub(crate) fn generated_counts(&self, coords: &[u32]) -> Multiset {
        self.pomset.generate_unchecked(&self.block_weights(coords))
    }

    pub fn distance(&self, u: &BlockVector, v: &BlockVector) -> Result<u64> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.weight(&self.sub(u, v)))
    }

    fn nonzero_mask(&self, coords: &[u32]) -> u64 {
        (0..self.n())
            .filter(|&i| coords[self.block_range(i)].iter().any(|&x| x != 0))
            .fold(0, |acc, i| acc | 1 << i)
    }

    /// Poset block weight: size of the down-set generated by the nonzero
    /// blocks in the induced poset.
    pub fn poset_weight(&self, v: &BlockVector) -> u64 {
        self.poset_weight_of(&v.0)
    }

    pub(crate) fn poset_weight_of(&self, coords: &[u32]) -> u64 {
        u64::from(self.pomset.down_set_mask(self.nonzero_mask(coords)).count_ones())
    }

    pub fn poset_distance(&self, u: &BlockVector, v: &BlockVector) -> Result<u64> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.poset_weight(&self.sub(u, v)))
    }

    /// Weighted-coordinates poset weight for unit blocks: Lee weight on the
    /// maximal elements of the generated down-set plus `⌊m/2⌋` on the rest.
    pub fn pw_weight(&self, v: &BlockVector) -> Result<u64> {
        if !self.has_unit_blocks() {
            return Err(Error::NonUnitBlocks);
        }
        self.check(v)?;
        let ideal = self.pomset.down_set_mask(self.nonzero_mask(&v.0));
        let mut w = 0u64;
        for i in mask_bits(ideal) {
            let is_max = self.pomset.above_mask(i) & ideal == 0;
            w += if is_max {
                u64::from(lee_weight(v.0[i], self.m))
            } else {
                u64::from(self.h())
            };
        }
        Ok(w)
    }

    /// Odometer index of a vector (first coordinate most significant).
    pub fn index_of(&self, v: &BlockVector) -> usize {
        index_of(&v.0, self.m)
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn vector_at(&self, index: usize) -> BlockVector {
        let mut coords = vec![0u32; self.len()];
        let mut x = index;
        let m = self.m as usize;
        for c in coords.iter_mut().rev() {
            *c = (x % m) as u32;
            x /= m;
        }
        BlockVector(coords)
    }

    /// All vectors in odometer order, refusing spaces above `cap`.
    pub fn iter(&self, cap: u128) -> Result<VectorIter> {
        let size = self.enumerable_size(cap)?;
        Ok(self.iter_range(0..size))
    }

    /// Vectors with odometer index in `range`; disjoint ranges partition a scan.
    pub fn iter_range(&self, range: Range<usize>) -> VectorIter {
        let start = if range.start < range.end {
            self.vector_at(range.start).0
        } else {
            vec![0; self.len()]
        };
        VectorIter {
            m: self.m,
            current: start,
            remaining: range.end.saturating_sub(range.start),
        }
    }

    /// Calls `f(index, coords)` for every vector in odometer order without
    /// allocating per vector.
    pub(crate) fn scan(&self, cap: u128, mut f: impl FnMut(usize, &[u32])) -> Result<()> {
        let size = self.enumerable_size(cap)?;
        let mut cur = vec![0u32; self.len()];
        for idx in 0..size {
            f(idx, &cur);
            increment(&mut cur, self.m);
        }
        Ok(())
    }

    pub(crate) fn scan_range(&self, range: Range<usize>, mut f: impl FnMut(usize, &[u32])) {
        if range.is_empty() {
            return;
        }
        let mut cur = self.vector_at(range.start).0;
        for idx in range {
            f(idx, &cur);
            increment(&mut cur, self.m);
        }
    }

    /// Histogram of `key(coords)` over the whole space. The scan is split
    /// into contiguous ranges across threads and the partial counts summed.
    pub(crate) fn histogram(
        &self,
        cap: u128,
        buckets: usize,
        key: impl Fn(&[u32]) -> usize + Sync,
    ) -> Result<Vec<u128>> {
        let size = self.enumerable_size(cap)?;
        let threads = std::thread::available_parallelism()
            .map_or(1, |n| n.get())
            .min(size / 4096 + 1);
        let chunk = size.div_ceil(threads);
        let key = &key;
        let parts: Vec<Vec<u128>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let range = (t * chunk).min(size)..((t + 1) * chunk).min(size);
                    s.spawn(move || {
                        let mut local = vec![0u128; buckets];
                        self.scan_range(range, |_, c| local[key(c)] += 1);
                        local
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("scan thread")).collect()
        });
        let mut out = vec![0u128; buckets];
        for part in parts {
            for (o, x) in out.iter_mut().zip(part) {
                *o += x;
            }
        }
        Ok(out)
    }

    /// Weight of every vector, indexed by odometer index.
    pub fn weight_table(&self, cap: u128) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.enumerable_size(cap)?);
        self.scan(cap, |_, c| out.push(self.weight_of(c)))?;
        Ok(out)
    }
}

pub(crate) fn dot_mod(u: &[u32], v: &[u32], m: u32) -> u32 {
    let m = u64::from(m);
    (u.iter()
        .zip(v)
        .fold(0u64, |acc, (&a, &b)| (acc + u64::from(a) * u64::from(b)) % m)) as u32
}

pub(crate) fn index_of(coords: &[u32], m: u32) -> usize {
    coords
        .iter()
        .fold(0usize, |acc, &x| acc * m as usize + x as usize)
}

pub(crate) fn increment(coords: &mut [u32], m: u32) {
    for c in coords.iter_mut().rev() {
        *c += 1;
        if *c < m {
            return;
        }
        *c = 0;
    }
}

pub(crate) fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Iterator over a contiguous odometer range of vectors.
#[derive(Debug, Clone)]
pub struct VectorIter {
    m: u32,
    current: Vec<u32>,
    remaining: usize,
}

impl Iterator for VectorIter {
    type Item = BlockVector;

    fn next(&mut self) -> Option<BlockVector> {
        if self.remaining == 0 {
            return None;
        }
        let out = BlockVector(self.current.clone());
        self.remaining -= 1;
        if self.remaining > 0 {
            increment(&mut self.current, self.m);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for VectorIter {}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_space() -> BlockSpace {
        BlockSpace::with_order(7, vec![2, 3, 4, 4, 3, 2], &[(1, 2), (2, 4), (1, 4), (5, 6)])
            .unwrap()
    }

    #[test]
    fn lee_weights() {
        assert_eq!(lee_weight(5, 7), 2);
        assert_eq!(lee_weight(0, 7), 0);
        assert_eq!(lee_weight(3, 6), 3);
        assert_eq!((0..6).filter(|&x| lee_weight(x, 6) == 3).count(), 1);
        assert_eq!(block_max_lee(&[0, 1, 0, 1], 7), 1);
        assert_eq!(block_max_lee(&[2, 0], 7), 2);
        assert_eq!(block_max_lee(&[0, 0, 0], 7), 0);
    }

    #[test]
    fn example_vector_weight() {
        let s = example_space();
        let mut raw = vec![0i64; 18];
        // blocks: 2,3,4,4,3,2 -> block 4 = 0101, block 6 = 20
        raw[9..13].copy_from_slice(&[0, 1, 0, 1]);
        raw[16..18].copy_from_slice(&[2, 0]);
        let v = s.vector(&raw).unwrap();
        assert_eq!(
            s.support(&v),
            Multiset::from_pairs(6, 3, &[(1, 4), (2, 6)]).unwrap()
        );
        assert_eq!(s.weight(&v), 12);
        assert_eq!(s.poset_weight(&v), 5);
        // x_1, x_2, x_5 are free in the family
        raw[0] = 3;
        raw[3] = 6;
        raw[13] = 1;
        assert_eq!(s.weight(&s.vector(&raw).unwrap()), 12);
    }

    #[test]
    fn support_edge_cases() {
        let s = example_space();
        assert!(s.support(&s.zero()).is_empty());
        let all = s.vector(&[3; 18]).unwrap();
        assert_eq!(s.support(&all), Multiset::full(6, 3));
        assert_eq!(s.weight(&all), 18);
    }

    #[test]
    fn small_chain_weights() {
        let s = BlockSpace::chain(5, vec![1, 1]).unwrap();
        let v = s.vector(&[0, 1]).unwrap();
        assert_eq!(s.weight(&v), 3);
        assert_eq!(s.distance(&v, &v).unwrap(), 0);
        let x = s.vector(&[3, 1]).unwrap();
        assert_eq!(s.pw_weight(&x).unwrap(), 3);
        assert_eq!(s.weight(&x), 3);
        assert_eq!(s.pw_weight(&s.zero()).unwrap(), 0);
        assert_eq!(s.poset_weight(&s.zero()), 0);
    }

    #[test]
    fn antichain_poset_weight_counts_nonzero_blocks() {
        let s = BlockSpace::antichain(5, vec![2, 1, 2]).unwrap();
        let v = s.vector(&[0, 1, 0, 0, 4]).unwrap();
        assert_eq!(s.poset_weight(&v), 2);
    }

    #[test]
    fn reduction_and_errors() {
        let s = BlockSpace::chain(5, vec![1, 1]).unwrap();
        assert_eq!(s.vector(&[-1, 7]).unwrap().coords(), &[4, 2]);
        assert!(matches!(s.vector(&[1]), Err(Error::LengthMismatch { .. })));
        let t = BlockSpace::chain(5, vec![1, 2]).unwrap();
        assert!(s.distance(&s.zero(), &t.zero()).is_err());
        assert!(matches!(t.pw_weight(&t.zero()), Err(Error::NonUnitBlocks)));
        assert!(BlockSpace::new(5, Pomset::chain(2, 3).unwrap(), vec![1, 1]).is_err());
        assert!(BlockSpace::chain(1, vec![1]).is_err());
        assert!(BlockSpace::chain(5, vec![1, 0]).is_err());
    }

    #[test]
    fn odometer_order_and_ranges() {
        let s = BlockSpace::antichain(3, vec![1, 1]).unwrap();
        let all: Vec<_> = s.iter(DEFAULT_CAP).unwrap().collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[1].coords(), &[0, 1]);
        assert_eq!(all[3].coords(), &[1, 0]);
        for (i, v) in all.iter().enumerate() {
            assert_eq!(s.index_of(v), i);
            assert_eq!(&s.vector_at(i), v);
        }
        let mut split: Vec<_> = s.iter_range(0..4).collect();
        split.extend(s.iter_range(4..9));
        assert_eq!(split, all);
        assert!(matches!(s.iter(8), Err(Error::SpaceTooLarge { .. })));
    }

    #[test]
    fn arithmetic() {
        let s = BlockSpace::antichain(6, vec![2]).unwrap();
        let u = s.vector(&[5, 1]).unwrap();
        let v = s.vector(&[2, 3]).unwrap();
        assert_eq!(s.add(&u, &v).coords(), &[1, 4]);
        assert_eq!(s.sub(&u, &v).coords(), &[3, 4]);
        assert_eq!(s.neg(&u).coords(), &[1, 5]);
        assert_eq!(s.scale(&u, 2).coords(), &[4, 2]);
        assert_eq!(s.dot(&u, &v), (10 + 3) % 6);
    }
}
