//! Weight distribution of the whole space: the number `A_r` of vectors of
//! each pomset block weight `r`.

use crate::balls::delta;
use crate::block_space::{lee_weight, BlockSpace, DEFAULT_CAP};
use crate::count;
use crate::error::{Error, Result};
use crate::pomset::Ideal;

/// Shell sizes `A_0..=A_{n·h}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    m: u32,
    len: usize,
    shells: Vec<u128>,
}

impl WeightDistribution {
    pub fn shells(&self) -> &[u128] {
        &self.shells
    }

    pub fn get(&self, r: u64) -> Option<u128> {
        self.shells.get(r as usize).copied()
    }

    pub fn max_weight(&self) -> u64 {
        self.shells.len() as u64 - 1
    }

    pub fn total(&self) -> Result<u128> {
        self.shells
            .iter()
            .try_fold(0u128, |acc, &x| count::add(acc, x, "distribution total"))
    }

    /// `A_0 = 1` and the shells sum to `m^N`.
    pub fn is_consistent(&self) -> bool {
        let size = count::pow(u128::from(self.m), self.len, "m^N").ok();
        self.shells.first() == Some(&1) && self.total().ok() == size && size.is_some()
    }

    /// Tab-separated `r\tA_r` rows followed by a `# total` trailer.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (r, a) in self.shells.iter().enumerate() {
            out.push_str(&format!("{r}\t{a}\n"));
        }
        match self.total() {
            Ok(t) => out.push_str(&format!("# total {t}\n")),
            Err(_) => out.push_str("# total overflow\n"),
        }
        out
    }
}

/// Number of residues in `Z_m` of Lee weight exactly `r`, counted directly.
pub fn scalar_lee_shell(m: u32, r: u32) -> u32 {
    (0..m).filter(|&x| lee_weight(x, m) == r).count() as u32
}

/// `|D_r^k|`: vectors in `Z_m^k` whose largest Lee weight is exactly `r`.
pub fn d_r_count(m: u32, k: usize, r: u32) -> Result<u128> {
    let h = m / 2;
    if m < 2 {
        return Err(Error::OutOfRange {
            what: "modulus",
            value: u64::from(m),
            lo: 2,
            hi: u64::from(u32::MAX),
        });
    }
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "block length",
            value: 0,
            lo: 1,
            hi: u64::MAX,
        });
    }
    if r > h {
        return Err(Error::OutOfRange {
            what: "block weight",
            value: u64::from(r),
            lo: 0,
            hi: u64::from(h),
        });
    }
    if r == 0 {
        return Ok(1);
    }
    let below = u128::from(2 * r - 1);
    let upto = below + u128::from(scalar_lee_shell(m, r));
    Ok(count::pow(upto, k, "|D_r^k|")? - count::pow(below, k, "|D_r^k|")?)
}

fn check_shell(space: &BlockSpace, r: u64, lo: u64) -> Result<()> {
    if r < lo || r > space.max_weight() {
        return Err(Error::OutOfRange {
            what: "weight",
            value: r,
            lo,
            hi: space.max_weight(),
        });
    }
    Ok(())
}

/// Contribution of one ideal: `|D_c^k|` over the maximal elements times
/// `m^k` over the others.
fn ideal_shell(space: &BlockSpace, ideal: &Ideal, per_block: impl Fn(usize) -> usize) -> Result<u128> {
    let max = space.pomset().maximal_elements(ideal);
    let mut d: u128 = 1;
    let mut free_dims = 0usize;
    for i in ideal.root_set() {
        let k = per_block(i);
        if max.count(i) > 0 {
            d = count::mul(d, d_r_count(space.m(), k, max.count(i))?, "A_r")?;
        } else {
            free_dims += k;
        }
    }
    count::mul(d, count::pow(u128::from(space.m()), free_dims, "A_r")?, "A_r")
}

/// `A_r` as a sum over the ideals of cardinality `r`, grouped by the number
/// of maximal elements.
pub fn a_r_formula(space: &BlockSpace, r: u64) -> Result<u128> {
    check_shell(space, r, 1)?;
    let mut acc: u128 = 0;
    for j in 1..=(r as usize).min(space.n()) {
        for ideal in space.pomset().ideals_by_maximal_count(r, j)? {
            acc = count::add(acc, ideal_shell(space, &ideal, |i| space.block_len(i))?, "A_r")?;
        }
    }
    Ok(acc)
}

/// `A_r` for unit blocks: `Σ_I ∏_{Max} |D_c| · m^{|I*| - |Max(I)|}`.
pub fn a_r_unit_blocks(space: &BlockSpace, r: u64) -> Result<u128> {
    if !space.has_unit_blocks() {
        return Err(Error::NonUnitBlocks);
    }
    check_shell(space, r, 1)?;
    let m = space.m();
    let mut acc: u128 = 0;
    for ideal in space.pomset().ideals_of_cardinality(r)? {
        let max = space.pomset().maximal_elements(&ideal);
        let roots = ideal.root_set().len();
        let maxes = max.root_set();
        let mut term = count::pow(u128::from(m), roots - maxes.len(), "A_r")?;
        for i in maxes {
            term = count::mul(term, u128::from(scalar_lee_shell(m, max.count(i))), "A_r")?;
        }
        acc = count::add(acc, term, "A_r")?;
    }
    Ok(acc)
}

/// `A_r` when every block has the same length `k`.
pub fn a_r_uniform_blocks(space: &BlockSpace, r: u64) -> Result<u128> {
    let k = space.uniform_block_len().ok_or(Error::NonUniformBlocks)?;
    check_shell(space, r, 1)?;
    let mut acc: u128 = 0;
    for ideal in space.pomset().ideals_of_cardinality(r)? {
        acc = count::add(acc, ideal_shell(space, &ideal, |_| k)?, "A_r")?;
    }
    Ok(acc)
}

/// `A_{n·h}`: the only ideal of top cardinality is the full one, so the top
/// shell is `∏_{maximal} |D_h^{k}| · m^{Σ others k}`.
pub fn top_shell(space: &BlockSpace) -> Result<u128> {
    let full = space.pomset().full_ideal();
    let max = space.pomset().maximal_elements(&full);
    let mut acc: u128 = 1;
    for i in 1..=space.n() {
        let k = space.block_len(i);
        let f = if max.count(i) > 0 {
            delta(space, k, space.h())?
        } else {
            count::pow(u128::from(space.m()), k, "top shell")?
        };
        acc = count::mul(acc, f, "top shell")?;
    }
    Ok(acc)
}

/// `A_r` by counting weights over the whole space.
pub fn a_r_bruteforce(space: &BlockSpace, r: u64, cap: u128) -> Result<u128> {
    check_shell(space, r, 0)?;
    Ok(weight_distribution_bruteforce(space, cap)?.shells[r as usize])
}

pub fn weight_distribution_formula(space: &BlockSpace) -> Result<WeightDistribution> {
    let mut shells = vec![1u128];
    for r in 1..=space.max_weight() {
        shells.push(a_r_formula(space, r)?);
    }
    Ok(WeightDistribution {
        m: space.m(),
        len: space.len(),
        shells,
    })
}

pub fn weight_distribution_bruteforce(space: &BlockSpace, cap: u128) -> Result<WeightDistribution> {
    let buckets = space.max_weight() as usize + 1;
    let shells = space.histogram(cap, buckets, |c| space.weight_of(c) as usize)?;
    Ok(WeightDistribution {
        m: space.m(),
        len: space.len(),
        shells,
    })
}

/// Closed form on a chain. Write `r = t·h + k` with `0 < k <= h`; the
/// vectors of weight `r` fill the bottom `t` chain blocks freely and put
/// maximum Lee weight exactly `k` on block `t + 1`, so
/// `A_r = m^{Σ_{bottom t} k_i} · |D_k^{k_{t+1}}|`. The power of `m` covers
/// the non-maximal chain elements only.
pub fn chain_a_r(space: &BlockSpace, r: u64) -> Result<u128> {
    let order = space.pomset().chain_order().ok_or(Error::NotAChain)?;
    check_shell(space, r, 0)?;
    if r == 0 {
        return Ok(1);
    }
    let h = u64::from(space.h());
    let t = ((r - 1) / h) as usize;
    let k = (r - t as u64 * h) as u32;
    let free_dims: usize = order[..t].iter().map(|&i| space.block_len(i)).sum();
    count::mul(
        count::pow(u128::from(space.m()), free_dims, "A_r")?,
        d_r_count(space.m(), space.block_len(order[t]), k)?,
        "A_r",
    )
}

/// Shell counts under the `pw` weight and under the pomset weight agree.
pub fn pw_distribution_equals_pomset(space: &BlockSpace, cap: u128) -> Result<bool> {
    if !space.has_unit_blocks() {
        return Err(Error::NonUnitBlocks);
    }
    let pomset = weight_distribution_bruteforce(space, cap)?;
    let mut pw = vec![0u128; pomset.shells.len()];
    for v in space.iter(cap)? {
        let w = space.pw_weight(&v)? as usize;
        if w >= pw.len() {
            return Ok(false);
        }
        pw[w] += 1;
    }
    Ok(pw == pomset.shells)
}

/// Default-cap convenience for [`pw_distribution_equals_pomset`].
pub fn pw_matches(space: &BlockSpace) -> Result<bool> {
    pw_distribution_equals_pomset(space, DEFAULT_CAP)
}
