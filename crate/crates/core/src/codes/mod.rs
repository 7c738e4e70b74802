//! Block codes: minimum distance, perfect-code construction and
//! verification, and dual codes.

pub mod chain;

use std::collections::HashSet;

use crate::balls::{checked_ideal, BallKind, BallSpec};
use crate::block_space::{dot_mod, BlockSpace, BlockVector};
use crate::count;
use crate::error::{Error, Result};
use crate::pomset::Ideal;

/// Which block metric to measure a code with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Cardinality of the ideal generated by the block support.
    PomsetBlock,
    /// Size of the down-set of the nonzero blocks.
    PosetBlock,
}

/// A finite set of codewords in one space, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    space: BlockSpace,
    words: Vec<BlockVector>,
    linear: bool,
    generators: Option<Vec<BlockVector>>,
}

impl Code {
    /// Builds a code from explicit codewords. Linearity is detected, not
    /// assumed.
    pub fn explicit(space: &BlockSpace, words: Vec<BlockVector>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        for w in &words {
            space.check(w)?;
        }
        let mut words = words;
        words.sort();
        words.dedup();
        let generators = greedy_basis(space, &words);
        Ok(Self {
            space: space.clone(),
            linear: generators.is_some(),
            generators,
            words,
        })
    }

    /// The `Z_m`-span of `generators`, expanded in full. Refuses to grow
    /// beyond `cap` codewords.
    pub fn span(space: &BlockSpace, generators: &[BlockVector], cap: u128) -> Result<Self> {
        for g in generators {
            space.check(g)?;
        }
        let mut set: HashSet<BlockVector> = HashSet::from([space.zero()]);
        for g in generators {
            extend_span(space, &mut set, g);
            if set.len() as u128 > cap {
                return Err(Error::SpaceTooLarge {
                    size: format!("more than {}", set.len()),
                    cap,
                });
            }
        }
        Self::explicit(space, set.into_iter().collect())
    }

    /// Every vector of the space.
    pub fn whole_space(space: &BlockSpace, cap: u128) -> Result<Self> {
        Self::explicit(space, space.iter(cap)?.collect())
    }

    pub fn space(&self) -> &BlockSpace {
        &self.space
    }

    pub fn words(&self) -> &[BlockVector] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Closed under addition and scalar multiplication.
    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn contains(&self, v: &BlockVector) -> bool {
        self.words.binary_search(v).is_ok()
    }

    /// A generating set found greedily from the codewords.
    pub fn generators(&self) -> Result<&[BlockVector]> {
        self.generators.as_deref().ok_or(Error::NotLinear)
    }

    /// `⌈log_m |C|⌉`.
    pub fn log_size(&self) -> u32 {
        count::ceil_log(self.space.m(), self.len() as u128)
    }

    /// `Some(q)` when `|C| = m^q`.
    pub fn exact_log_size(&self) -> Option<u32> {
        count::exact_log(self.space.m(), self.len() as u128)
    }

    fn metric_weight(&self, metric: Metric, coords: &[u32]) -> u64 {
        match metric {
            Metric::PomsetBlock => self.space.weight_of(coords),
            Metric::PosetBlock => self.space.poset_weight_of(coords),
        }
    }

    /// Minimum distance. Linear codes use the least nonzero weight.
    pub fn min_distance(&self, metric: Metric) -> Result<u64> {
        if self.len() < 2 {
            return Err(Error::SingletonCode);
        }
        if self.linear {
            return Ok(self
                .words
                .iter()
                .filter(|w| !w.is_zero())
                .map(|w| self.metric_weight(metric, w.coords()))
                .min()
                .expect("at least one nonzero codeword"));
        }
        self.min_distance_pairwise(metric)
    }

    /// Minimum distance over all pairs of distinct codewords.
    pub fn min_distance_pairwise(&self, metric: Metric) -> Result<u64> {
        if self.len() < 2 {
            return Err(Error::SingletonCode);
        }
        let mut best = u64::MAX;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                best = best.min(self.metric_weight(metric, self.space.sub(u, v).coords()));
            }
        }
        Ok(best)
    }
}

fn extend_span(space: &BlockSpace, set: &mut HashSet<BlockVector>, g: &BlockVector) {
    if set.contains(g) {
        return;
    }
    let base: Vec<BlockVector> = set.iter().cloned().collect();
    let mut multiple = g.clone();
    for _ in 1..space.m() {
        for b in &base {
            set.insert(space.add(b, &multiple));
        }
        multiple = space.add(&multiple, g);
    }
}

/// Generators of `words` if it is a submodule, found by growing a span and
/// stopping once it outgrows the code.
fn greedy_basis(space: &BlockSpace, words: &[BlockVector]) -> Option<Vec<BlockVector>> {
    if words.binary_search(&space.zero()).is_err() {
        return None;
    }
    let mut set: HashSet<BlockVector> = HashSet::from([space.zero()]);
    let mut gens = Vec::new();
    for w in words {
        if set.contains(w) {
            continue;
        }
        extend_span(space, &mut set, w);
        gens.push(w.clone());
        if set.len() > words.len() {
            return None;
        }
    }
    (set.len() == words.len()).then_some(gens)
}

/// What a code is tested to be perfect for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PackingShape {
    Ideal(Ideal),
    Radius(u64),
}

/// How a perfectness check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `vector` lies in the balls around two distinct codewords.
    Overlap {
        vector: BlockVector,
        first: BlockVector,
        second: BlockVector,
    },
    /// `vector` lies in no ball.
    Uncovered(BlockVector),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectnessCertificate {
    pub shape: PackingShape,
    pub disjoint: bool,
    pub covering: bool,
    pub witness: Option<Witness>,
}

impl PerfectnessCertificate {
    pub fn is_perfect(&self) -> bool {
        self.disjoint && self.covering
    }
}

/// Checks that the balls of the given shape around the codewords partition
/// the space. The first overlap found in codeword order is reported; an
/// uncovered vector is reported only when the balls are disjoint.
pub fn verify_perfect(code: &Code, shape: &PackingShape, cap: u128) -> Result<PerfectnessCertificate> {
    let space = code.space();
    let size = space.enumerable_size(cap)?;
    let kind = match shape {
        PackingShape::Ideal(i) => BallKind::Ideal(i.clone()),
        PackingShape::Radius(r) => BallKind::Radius(*r),
    };
    let ball = BallSpec {
        center: space.zero(),
        kind,
    }
    .enumerate(space, cap)?;
    let mut owner = vec![u32::MAX; size];
    let mut witness = None;
    for (ci, c) in code.words().iter().enumerate() {
        for b in &ball {
            let v = space.add(c, b);
            let idx = space.index_of(&v);
            if owner[idx] == u32::MAX {
                owner[idx] = ci as u32;
            } else if witness.is_none() {
                witness = Some(Witness::Overlap {
                    vector: v,
                    first: code.words()[owner[idx] as usize].clone(),
                    second: c.clone(),
                });
            }
        }
    }
    let disjoint = witness.is_none();
    let uncovered = owner.iter().position(|&o| o == u32::MAX);
    if disjoint {
        witness = uncovered.map(|i| Witness::Uncovered(space.vector_at(i)));
    }
    Ok(PerfectnessCertificate {
        shape: shape.clone(),
        disjoint,
        covering: uncovered.is_none(),
        witness,
    })
}

/// All vectors whose coordinate `j` is drawn from `choices[j]`.
fn product_code(space: &BlockSpace, choices: &[Vec<u32>], cap: u128) -> Result<Code> {
    let mut size: u128 = 1;
    for c in choices {
        size = count::mul(size, c.len() as u128, "code size")?;
    }
    if size > cap {
        return Err(Error::SpaceTooLarge {
            size: size.to_string(),
            cap,
        });
    }
    let mut pos = vec![0usize; choices.len()];
    let mut words = Vec::with_capacity(size as usize);
    for _ in 0..size {
        words.push(BlockVector::from_raw(
            pos.iter().zip(choices).map(|(&p, c)| c[p]).collect(),
        ));
        for j in (0..pos.len()).rev() {
            pos[j] += 1;
            if pos[j] < choices[j].len() {
                break;
            }
            pos[j] = 0;
        }
    }
    Code::explicit(space, words)
}

/// The zero section `{v : v_i = 0 for i ∈ I*}` of a full-count ideal, one
/// representative per translate of `B_I`.
pub fn construct_perfect_full(space: &BlockSpace, ideal: &Ideal, cap: u128) -> Result<Code> {
    checked_ideal(space, ideal)?;
    if !ideal.is_full_count() {
        return Err(Error::NotFullCount);
    }
    let all: Vec<u32> = (0..space.m()).collect();
    let mut choices = Vec::with_capacity(space.len());
    for i in 1..=space.n() {
        let c = if ideal.count(i) > 0 { vec![0] } else { all.clone() };
        choices.extend(std::iter::repeat(c).take(space.block_len(i)));
    }
    product_code(space, &choices, cap)
}

/// Perfect code for an ideal with partial-count elements. Each partial
/// element with count `t` takes coordinates in the multiples of `2t + 1`,
/// which must divide `m`; full elements of the ideal are zero and elements
/// outside it are free.
pub fn construct_perfect_partial(space: &BlockSpace, ideal: &Ideal, cap: u128) -> Result<Code> {
    checked_ideal(space, ideal)?;
    let partial = ideal.partial_elements();
    if partial.is_empty() {
        return Err(Error::NotPartialCount);
    }
    let m = space.m();
    for &i in &partial {
        let t = ideal.count(i);
        if m % (2 * t + 1) != 0 {
            return Err(Error::DivisibilityFails {
                index: i,
                count: t,
                modulus_part: 2 * t + 1,
                m,
            });
        }
    }
    let all: Vec<u32> = (0..m).collect();
    let mut choices = Vec::with_capacity(space.len());
    for i in 1..=space.n() {
        let c = ideal.count(i);
        let set = if c == 0 {
            all.clone()
        } else if c == space.h() {
            vec![0]
        } else {
            (0..m).step_by((2 * c + 1) as usize).collect()
        };
        choices.extend(std::iter::repeat(set).take(space.block_len(i)));
    }
    product_code(space, &choices, cap)
}

/// `|C| = ∏_{partial} (m / (2t+1))^{k} · m^{Σ_{outside I*} k}` for the codes
/// built above.
pub fn constructed_size(space: &BlockSpace, ideal: &Ideal) -> Result<u128> {
    checked_ideal(space, ideal)?;
    let m = space.m();
    let mut acc: u128 = 1;
    for i in 1..=space.n() {
        let c = ideal.count(i);
        let base = if c == 0 {
            m
        } else if c == space.h() {
            1
        } else {
            m / (2 * c + 1)
        };
        acc = count::mul(acc, count::pow(u128::from(base), space.block_len(i), "|C|")?, "|C|")?;
    }
    Ok(acc)
}

/// `C^⊥` under the flat dot product mod `m`, as a code in the dual space.
pub fn dual_code(code: &Code, cap: u128) -> Result<Code> {
    let gens = code.generators()?.to_vec();
    let space = code.space();
    let m = space.m();
    let dual = space.dual();
    let mut words = Vec::new();
    space.scan(cap, |_, v| {
        if gens.iter().all(|g| dot_mod(v, g.coords(), m) == 0) {
            words.push(BlockVector::from_raw(v.to_vec()));
        }
    })?;
    Code::explicit(&dual, words)
}

/// Both sides of the perp biconditional for a full-count ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerpDuality {
    pub code_perfect: PerfectnessCertificate,
    pub dual_perfect: PerfectnessCertificate,
    pub dual: Code,
    pub complement: Ideal,
}

impl PerpDuality {
    pub fn holds(&self) -> bool {
        self.code_perfect.is_perfect() == self.dual_perfect.is_perfect()
    }
}

/// Evaluates "C is I-perfect" and "C⊥ is I^c-perfect in the dual space"
/// independently.
pub fn check_perp_duality(code: &Code, ideal: &Ideal, cap: u128) -> Result<PerpDuality> {
    if !code.is_linear() {
        return Err(Error::NotLinear);
    }
    if code.exact_log_size().is_none() {
        return Err(Error::BadCardinality(code.len() as u128));
    }
    checked_ideal(code.space(), ideal)?;
    if !ideal.is_full_count() {
        return Err(Error::NotFullCount);
    }
    let dual = dual_code(code, cap)?;
    let complement = code.space().pomset().complement_ideal(ideal)?;
    let code_perfect = verify_perfect(code, &PackingShape::Ideal(ideal.clone()), cap)?;
    let dual_perfect = verify_perfect(&dual, &PackingShape::Ideal(complement.clone()), cap)?;
    Ok(PerpDuality {
        code_perfect,
        dual_perfect,
        dual,
        complement,
    })
}
