//! Codes over chain pomsets: packing radius, Singleton bound and MDS
//! codes, and the duality between MDS and perfect codes.

use crate::block_space::{BlockSpace, BlockVector};
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::pomset::Ideal;

use super::{dual_code, verify_perfect, Code, Metric, PackingShape};

fn chain_order(space: &BlockSpace) -> Result<Vec<usize>> {
    space.pomset().chain_order().ok_or(Error::NotAChain)
}

/// Packing radius by exhaustive search; works for any order.
///
/// Balls of radius `r` around `0` and `δ` meet iff some `v` has
/// `w(v) <= r` and `w(δ - v) <= r`, so the radius is one less than the
/// least `min_v max(w(v), w(δ - v))` over codeword differences `δ`. A
/// single codeword has the largest possible radius `n·h`.
pub fn packing_radius_bruteforce(code: &Code, cap: u128) -> Result<u64> {
    let space = code.space();
    let table = space.weight_table(cap)?;
    let m = space.m();
    let mut diffs: Vec<BlockVector> = if code.is_linear() {
        code.words().iter().filter(|w| !w.is_zero()).cloned().collect()
    } else {
        let w = code.words();
        let mut d = Vec::new();
        for (i, u) in w.iter().enumerate() {
            for v in &w[i + 1..] {
                d.push(space.sub(u, v));
            }
        }
        d
    };
    diffs.sort();
    diffs.dedup();
    let mut best = space.max_weight() + 1;
    let mut other = vec![0u32; space.len()];
    for d in &diffs {
        let mut meet = u64::MAX;
        space.scan(cap, |idx, v| {
            for ((o, &a), &b) in other.iter_mut().zip(d.coords()).zip(v) {
                *o = (a + m - b) % m;
            }
            let far = table[idx].max(table[crate::block_space::index_of(&other, m)]);
            meet = meet.min(far);
        })?;
        best = best.min(meet);
    }
    Ok(best - 1)
}

/// `h·(d_P - 1)` with `d_P` the poset-block minimum distance.
///
/// Balls of radius `h·(d_P - 1)` are always disjoint on a chain, so this
/// never exceeds the true packing radius. It is exact when some pair of
/// codewords at minimum poset distance differs by Lee weight at most 2 in
/// its top block, in particular whenever `m <= 5`.
pub fn packing_radius_chain_formula(code: &Code) -> Result<u64> {
    chain_order(code.space())?;
    let d = code.min_distance(Metric::PosetBlock)?;
    Ok(u64::from(code.space().h()) * (d - 1))
}

/// Minimum distance with the convention that a one-word code has distance
/// one more than the largest weight.
fn distance_or_top(code: &Code, metric: Metric) -> Result<u64> {
    match code.min_distance(metric) {
        Err(Error::SingletonCode) => Ok(match metric {
            Metric::PomsetBlock => code.space().max_weight() + 1,
            Metric::PosetBlock => code.space().n() as u64 + 1,
        }),
        other => other,
    }
}

/// Both sides of a chain Singleton bound `Σ_{J*} k_i <= N - ⌈log_m |C|⌉`,
/// where `J*` is a prefix of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonReport {
    pub distance: u64,
    /// Number of chain elements in the prefix.
    pub prefix_len: usize,
    /// Chain elements in the prefix, 1-based, bottom first.
    pub prefix: Vec<usize>,
    pub lhs: u64,
    pub rhs: u64,
}

impl SingletonReport {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn is_mds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn report(code: &Code, order: &[usize], distance: u64, prefix_len: usize) -> SingletonReport {
    let space = code.space();
    let prefix = order[..prefix_len.min(order.len())].to_vec();
    let lhs = prefix.iter().map(|&i| space.block_len(i) as u64).sum();
    let rhs = (space.len() as u64).saturating_sub(u64::from(code.log_size()));
    SingletonReport {
        distance,
        prefix_len,
        prefix,
        lhs,
        rhs,
    }
}

/// Pomset-block Singleton bound with prefix length `⌊(d - 1)/h⌋`.
pub fn singleton_check(code: &Code) -> Result<SingletonReport> {
    let order = chain_order(code.space())?;
    let d = distance_or_top(code, Metric::PomsetBlock)?;
    let r = ((d - 1) / u64::from(code.space().h())) as usize;
    Ok(report(code, &order, d, r))
}

pub fn is_mds(code: &Code) -> Result<bool> {
    Ok(singleton_check(code)?.is_mds())
}

/// Poset-block Singleton bound with prefix length `d_P - 1`.
pub fn poset_singleton_check(code: &Code) -> Result<SingletonReport> {
    let order = chain_order(code.space())?;
    let d = distance_or_top(code, Metric::PosetBlock)?;
    Ok(report(code, &order, d, (d - 1) as usize))
}

/// Specialised forms of the Singleton bound, each `None` when its shape
/// condition does not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonForms {
    /// Equal block length `k`: `k·r <= N - ⌈log_m |C|⌉`.
    pub uniform: Option<bool>,
    /// Block lengths non-increasing along the chain:
    /// `r·k_min <= N - ⌈log⌉` and `r·k_min <= Σ_{prefix} k <= r·k_max`.
    pub decreasing: Option<bool>,
    /// Unit blocks: `r <= n - ⌈log_m |C|⌉`.
    pub unit: Option<bool>,
}

impl SingletonForms {
    pub fn all_hold(&self) -> bool {
        [self.uniform, self.decreasing, self.unit]
            .iter()
            .all(|x| x.unwrap_or(true))
    }
}

pub fn singleton_forms(code: &Code) -> Result<SingletonForms> {
    let rep = singleton_check(code)?;
    let space = code.space();
    let order = chain_order(space)?;
    let r = rep.prefix_len as u64;
    let lens: Vec<u64> = order.iter().map(|&i| space.block_len(i) as u64).collect();
    let uniform = space.uniform_block_len().map(|k| k as u64 * r <= rep.rhs);
    let decreasing = lens.windows(2).all(|w| w[0] >= w[1]).then(|| {
        let (hi, lo) = (lens[0], *lens.last().expect("nonempty chain"));
        r * lo <= rep.rhs && r * lo <= rep.lhs && rep.lhs <= r * hi
    });
    let unit = space
        .has_unit_blocks()
        .then(|| r <= (space.n() as u64).saturating_sub(u64::from(code.log_size())));
    Ok(SingletonForms {
        uniform,
        decreasing,
        unit,
    })
}

/// `⌊(d - 1)/h⌋ <= d_P - 1`, as `(lhs, rhs)`.
pub fn distance_ratio_inequality(code: &Code) -> Result<(u64, u64)> {
    let d = code.min_distance(Metric::PomsetBlock)?;
    let dp = code.min_distance(Metric::PosetBlock)?;
    Ok(((d - 1) / u64::from(code.space().h()), dp - 1))
}

/// An implication with both sides evaluated on their own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Implication {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

/// Pomset-block MDS implies poset-block MDS.
pub fn mds_implies_ppi_mds(code: &Code) -> Result<Implication> {
    Ok(Implication {
        hypothesis: is_mds(code)?,
        conclusion: poset_singleton_check(code)?.is_mds(),
    })
}

/// For an MDS code with equal block length `k` and `q = ⌈log_m |C|⌉`:
/// `h(n - q/k) + 1 <= d <= h(n - q/k + 1)`. Stored scaled by `k` so the
/// bounds stay integral: `(k·lo, k·d, k·hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceBracket {
    pub k: u64,
    pub lower_k: u64,
    pub distance_k: u64,
    pub upper_k: u64,
}

impl DistanceBracket {
    pub fn holds(&self) -> bool {
        self.lower_k <= self.distance_k && self.distance_k <= self.upper_k
    }
}

pub fn mds_distance_bracket(code: &Code) -> Result<DistanceBracket> {
    let space = code.space();
    chain_order(space)?;
    let k = space.uniform_block_len().ok_or(Error::NonUniformBlocks)? as u64;
    let h = u64::from(space.h());
    let n = space.n() as u64;
    let q = u64::from(code.log_size());
    let d = distance_or_top(code, Metric::PomsetBlock)?;
    let base = (n * k).saturating_sub(q);
    Ok(DistanceBracket {
        k,
        lower_k: h * base + k,
        distance_k: k * d,
        upper_k: h * (base + k),
    })
}

/// Full-count prefix ideal on `len` chain elements.
pub fn chain_prefix_ideal(space: &BlockSpace, len: usize) -> Result<Ideal> {
    let order = chain_order(space)?;
    if len > order.len() {
        return Err(Error::OutOfRange {
            what: "prefix length",
            value: len as u64,
            lo: 0,
            hi: order.len() as u64,
        });
    }
    let mut counts = vec![0u32; space.n()];
    for &i in &order[..len] {
        counts[i - 1] = space.h();
    }
    space.pomset().ideal(Multiset::from_counts(space.h(), counts)?)
}

/// The full-count prefix with `n - q/k` elements, when `|C| = m^q` and
/// `k | q`.
fn bridge_ideal(code: &Code, k: usize) -> Result<Option<Ideal>> {
    let space = code.space();
    match code.exact_log_size() {
        Some(q) if (q as usize) % k == 0 && q as usize <= space.len() => {
            chain_prefix_ideal(space, space.n() - q as usize / k).map(Some)
        }
        _ => Ok(None),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeReport {
    pub mds: bool,
    /// Full-count prefix ideal with `n - q/k` elements; `None` unless
    /// `|C| = m^q` with `k | q`.
    pub ideal: Option<Ideal>,
    /// MDS implies perfect for the prefix ideal.
    pub mds_to_perfect: Option<Implication>,
    /// Perfect for the prefix ideal implies MDS.
    pub perfect_to_mds: Option<Implication>,
    /// Perfect for the caller's ideal implies MDS.
    pub given: Option<(Ideal, Implication)>,
}

impl BridgeReport {
    pub fn holds(&self) -> bool {
        [self.mds_to_perfect, self.perfect_to_mds, self.given.as_ref().map(|g| g.1)]
            .iter()
            .all(|i| i.map_or(true, |i| i.holds()))
    }
}

/// Relates MDS codes to perfect codes for equal block lengths.
pub fn mds_iperfect_bridge(code: &Code, given: Option<&Ideal>, cap: u128) -> Result<BridgeReport> {
    let space = code.space();
    chain_order(space)?;
    let k = space.uniform_block_len().ok_or(Error::NonUniformBlocks)?;
    let mds = is_mds(code)?;
    let ideal = bridge_ideal(code, k)?;
    let (mds_to_perfect, perfect_to_mds) = match &ideal {
        Some(i) => {
            let perfect = verify_perfect(code, &PackingShape::Ideal(i.clone()), cap)?.is_perfect();
            (
                Some(Implication {
                    hypothesis: mds,
                    conclusion: perfect,
                }),
                Some(Implication {
                    hypothesis: perfect,
                    conclusion: mds,
                }),
            )
        }
        None => (None, None),
    };
    let given = match given {
        Some(i) => {
            let perfect = verify_perfect(code, &PackingShape::Ideal(i.clone()), cap)?.is_perfect();
            Some((
                i.clone(),
                Implication {
                    hypothesis: perfect,
                    conclusion: mds,
                },
            ))
        }
        None => None,
    };
    Ok(BridgeReport {
        mds,
        ideal,
        mds_to_perfect,
        perfect_to_mds,
        given,
    })
}

/// The four equivalent statements for a linear code of size `m^q` with
/// equal block length `k | q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourWay {
    pub ideal: Ideal,
    pub complement: Ideal,
    pub mds: bool,
    pub perfect: bool,
    pub dual_perfect: bool,
    pub dual_mds: bool,
    pub dual_size: usize,
}

impl FourWay {
    pub fn statements(&self) -> [bool; 4] {
        [self.mds, self.perfect, self.dual_perfect, self.dual_mds]
    }

    pub fn all_equal(&self) -> bool {
        let s = self.statements();
        s.iter().all(|&x| x == s[0])
    }
}

pub fn duality_equivalence(code: &Code, cap: u128) -> Result<FourWay> {
    let space = code.space();
    chain_order(space)?;
    let k = space.uniform_block_len().ok_or(Error::NonUniformBlocks)?;
    if !code.is_linear() {
        return Err(Error::NotLinear);
    }
    let ideal = bridge_ideal(code, k)?.ok_or(Error::BadCardinality(code.len() as u128))?;
    let dual = dual_code(code, cap)?;
    let complement = space.pomset().complement_ideal(&ideal)?;
    Ok(FourWay {
        mds: is_mds(code)?,
        perfect: verify_perfect(code, &PackingShape::Ideal(ideal.clone()), cap)?.is_perfect(),
        dual_perfect: verify_perfect(&dual, &PackingShape::Ideal(complement.clone()), cap)?.is_perfect(),
        dual_mds: is_mds(&dual)?,
        dual_size: dual.len(),
        ideal,
        complement,
    })
}

/// The unit repetition code, spanned by the all-ones vector of `space`,
/// and the block repetition code, spanned by `(1^n, 2^n, ..., (m-1)^n)` on
/// a chain of `n(m-1)` unit blocks.
pub fn repetition_codes(space: &BlockSpace, cap: u128) -> Result<(Code, Code)> {
    chain_order(space)?;
    space.uniform_block_len().ok_or(Error::NonUniformBlocks)?;
    let m = space.m();
    let ones = space.vector(&vec![1; space.len()])?;
    let unit = Code::span(space, &[ones], cap)?;
    let n = space.n();
    let long = BlockSpace::chain(m, vec![1; n * (m as usize - 1)])?;
    let gen: Vec<i64> = (1..m as i64).flat_map(|a| std::iter::repeat(a).take(n)).collect();
    let block = Code::span(&long, &[long.vector(&gen)?], cap)?;
    Ok((unit, block))
}
