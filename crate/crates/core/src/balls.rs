//! I-balls, I-spheres, r-balls and r-spheres.
//!
//! Membership and enumeration go through an exhaustive scan of the space
//! (the oracle path). The cardinality formulas are products over the
//! maximal elements of an ideal and sums over ideals of a given size.
//!
//! The sphere and ball sums over ideals with `j` maximal elements run over
//! `j = 1..=min(r, n)`: an ideal with `j` maximal elements has cardinality
//! at least `j`, so larger `j` contribute nothing.

use std::collections::HashMap;

use crate::block_space::{block_max_lee, BlockSpace, BlockVector};
use crate::count;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::pomset::Ideal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BallKind {
    Radius(u64),
    Ideal(Ideal),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSpec {
    pub center: BlockVector,
    pub kind: BallKind,
}

impl BallSpec {
    pub fn contains(&self, space: &BlockSpace, v: &BlockVector) -> Result<bool> {
        match &self.kind {
            BallKind::Radius(r) => Ok(space.distance(&self.center, v)? <= *r),
            BallKind::Ideal(i) => in_i_ball(space, &self.center, v, i),
        }
    }

    pub fn enumerate(&self, space: &BlockSpace, cap: u128) -> Result<Vec<BlockVector>> {
        match &self.kind {
            BallKind::Radius(r) => enumerate_r_ball(space, &self.center, *r, cap),
            BallKind::Ideal(i) => enumerate_i_ball(space, &self.center, i, cap),
        }
    }
}

/// Re-validates an ideal against the space's pomset.
pub(crate) fn checked_ideal(space: &BlockSpace, ideal: &Ideal) -> Result<()> {
    space.pomset().ideal(ideal.multiset().clone()).map(|_| ())
}

/// `supp(diff) ⊆ I`, blockwise on raw coordinates.
pub(crate) fn support_within(space: &BlockSpace, diff: &[u32], counts: &[u32]) -> bool {
    (0..space.n()).all(|i| block_max_lee(&diff[space.block_range(i)], space.m()) <= counts[i])
}

fn diff_into(space: &BlockSpace, u: &[u32], v: &[u32], out: &mut [u32]) {
    let m = space.m();
    for ((o, &a), &b) in out.iter_mut().zip(u).zip(v) {
        *o = (a + m - b) % m;
    }
}

pub fn in_i_ball(space: &BlockSpace, u: &BlockVector, v: &BlockVector, ideal: &Ideal) -> Result<bool> {
    checked_ideal(space, ideal)?;
    space.check(u)?;
    space.check(v)?;
    let d = space.sub(u, v);
    Ok(support_within(space, d.coords(), ideal.counts()))
}

/// `B_I(u)` by exhaustive scan, odometer order.
pub fn enumerate_i_ball(space: &BlockSpace, u: &BlockVector, ideal: &Ideal, cap: u128) -> Result<Vec<BlockVector>> {
    checked_ideal(space, ideal)?;
    space.check(u)?;
    let mut out = Vec::new();
    let mut d = vec![0; space.len()];
    space.scan(cap, |_, v| {
        diff_into(space, u.coords(), v, &mut d);
        if support_within(space, &d, ideal.counts()) {
            out.push(BlockVector::from_raw(v.to_vec()));
        }
    })?;
    Ok(out)
}

/// `S_I(u)`: vectors whose difference from `u` generates exactly `I`.
pub fn enumerate_i_sphere(space: &BlockSpace, u: &BlockVector, ideal: &Ideal, cap: u128) -> Result<Vec<BlockVector>> {
    checked_ideal(space, ideal)?;
    space.check(u)?;
    let mut out = Vec::new();
    let mut d = vec![0; space.len()];
    space.scan(cap, |_, v| {
        diff_into(space, u.coords(), v, &mut d);
        if space.generated_counts(&d).counts() == ideal.counts() {
            out.push(BlockVector::from_raw(v.to_vec()));
        }
    })?;
    Ok(out)
}

fn scan_by_distance(
    space: &BlockSpace,
    u: &BlockVector,
    cap: u128,
    keep: impl Fn(u64) -> bool,
) -> Result<Vec<BlockVector>> {
    space.check(u)?;
    let mut out = Vec::new();
    let mut d = vec![0; space.len()];
    space.scan(cap, |_, v| {
        diff_into(space, u.coords(), v, &mut d);
        if keep(space.weight_of(&d)) {
            out.push(BlockVector::from_raw(v.to_vec()));
        }
    })?;
    Ok(out)
}

pub fn enumerate_r_ball(space: &BlockSpace, u: &BlockVector, r: u64, cap: u128) -> Result<Vec<BlockVector>> {
    scan_by_distance(space, u, cap, |w| w <= r)
}

pub fn enumerate_r_sphere(space: &BlockSpace, u: &BlockVector, r: u64, cap: u128) -> Result<Vec<BlockVector>> {
    scan_by_distance(space, u, cap, |w| w == r)
}

/// Number of vectors generating each ideal, from one scan of the space.
pub fn ideal_census(space: &BlockSpace, cap: u128) -> Result<HashMap<Multiset, u128>> {
    let mut out: HashMap<Multiset, u128> = HashMap::new();
    space.scan(cap, |_, v| {
        *out.entry(space.generated_counts(v)).or_default() += 1;
    })?;
    Ok(out)
}

/// Number of blocks in `Z_m^k` whose maximum Lee weight is exactly `c`,
/// when `c` is the count of a maximal element of an ideal (`1 <= c <= h`).
///
/// Below the height there are `2c + 1` residues of Lee weight at most `c`.
/// At full height the top Lee-weight class has `N = 2` residues for odd `m`
/// and `N = 1` for even `m`.
pub fn delta(space: &BlockSpace, k: usize, c: u32) -> Result<u128> {
    let m = space.m();
    let h = space.h();
    if c == 0 || c > h {
        return Err(Error::OutOfRange {
            what: "maximal count",
            value: u64::from(c),
            lo: 1,
            hi: u64::from(h),
        });
    }
    if c < h {
        let a = count::pow(u128::from(2 * c + 1), k, "delta")?;
        let b = count::pow(u128::from(2 * c - 1), k, "delta")?;
        Ok(a - b)
    } else {
        let top = if m % 2 == 1 { 2 } else { 1 };
        let a = count::pow(u128::from(m), k, "delta")?;
        let b = count::pow(u128::from(m - top), k, "delta")?;
        Ok(a - b)
    }
}

/// `|S_I|`: product of `δ` over `Max(I)` times `m^{k_l}` over the rest of `I*`.
pub fn s_i_cardinality_formula(space: &BlockSpace, ideal: &Ideal) -> Result<u128> {
    checked_ideal(space, ideal)?;
    let max = space.pomset().maximal_elements(ideal);
    let mut acc: u128 = 1;
    for i in ideal.root_set() {
        let k = space.block_len(i);
        let factor = if max.count(i) > 0 {
            delta(space, k, max.count(i))?
        } else {
            count::pow(u128::from(space.m()), k, "m^k")?
        };
        acc = count::mul(acc, factor, "|S_I|")?;
    }
    Ok(acc)
}

fn check_radius(space: &BlockSpace, r: u64) -> Result<()> {
    if r > space.max_weight() {
        return Err(Error::OutOfRange {
            what: "radius",
            value: r,
            lo: 0,
            hi: space.max_weight(),
        });
    }
    Ok(())
}

/// `|S_r|`, summing `|S_I|` over `I ∈ I_j^r` for `j = 1..=min(r, n)`.
pub fn r_sphere_cardinality(space: &BlockSpace, r: u64) -> Result<u128> {
    check_radius(space, r)?;
    if r == 0 {
        return Ok(1);
    }
    let top = (r as usize).min(space.n());
    let mut acc: u128 = 0;
    for j in 1..=top {
        for ideal in space.pomset().ideals_by_maximal_count(r, j)? {
            acc = count::add(acc, s_i_cardinality_formula(space, &ideal)?, "|S_r|")?;
        }
    }
    Ok(acc)
}

/// `|B_r| = 1 + Σ_{i=1..r} |S_i|`.
pub fn r_ball_cardinality(space: &BlockSpace, r: u64) -> Result<u128> {
    check_radius(space, r)?;
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = count::add(acc, r_sphere_cardinality(space, i)?, "|B_r|")?;
    }
    Ok(acc)
}

/// `|B_I|` for any ideal: `(1 + 2c_i)^{k_i}` on partial elements, `m^{k_j}`
/// on full ones.
pub fn i_ball_cardinality(space: &BlockSpace, ideal: &Ideal) -> Result<u128> {
    checked_ideal(space, ideal)?;
    let h = space.h();
    let mut acc: u128 = 1;
    for i in ideal.root_set() {
        let c = ideal.count(i);
        let base = if c == h { space.m() } else { 1 + 2 * c };
        acc = count::mul(acc, count::pow(u128::from(base), space.block_len(i), "|B_I|")?, "|B_I|")?;
    }
    Ok(acc)
}

/// `|B_I|` for an ideal with at least one partial-count element.
pub fn partial_count_ball_cardinality(space: &BlockSpace, ideal: &Ideal) -> Result<u128> {
    if ideal.partial_elements().is_empty() {
        return Err(Error::NotPartialCount);
    }
    i_ball_cardinality(space, ideal)
}

/// A pair `u, v ∈ B_I` with `u + v ∉ B_I`, or `None` for a full-count
/// ideal (whose ball is a submodule).
///
/// For a partial element with count `c`, put `c` and `1` at the first
/// coordinate of its block: the sum has Lee weight `c + 1 <= h`.
pub fn nonlinearity_witness(space: &BlockSpace, ideal: &Ideal) -> Result<Option<(BlockVector, BlockVector)>> {
    checked_ideal(space, ideal)?;
    let Some(&j) = ideal.partial_elements().first() else {
        return Ok(None);
    };
    let at = space.block_range(j - 1).start;
    let mut u = vec![0u32; space.len()];
    let mut v = u.clone();
    u[at] = ideal.count(j);
    v[at] = 1;
    Ok(Some((BlockVector::from_raw(u), BlockVector::from_raw(v))))
}

/// Outcome of checking the structure of a full-count I-ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullCountReport {
    pub ideal: Ideal,
    /// `|B_I|` by enumeration.
    pub ball_size: u128,
    /// `m^{Σ_{i∈I*} k_i}`.
    pub formula_size: u128,
    /// `B_I` contains 0 and is closed under addition and scalar multiples.
    pub submodule: bool,
    /// Number of distinct I-balls found by partitioning the space.
    pub classes: u128,
    /// `m^{N - Σ_{i∈I*} k_i}`.
    pub expected_classes: u128,
    /// Every two I-balls met during the partition scan were equal or disjoint.
    pub identical_or_disjoint: bool,
    /// `B_I(u) = u + B_I` at the sampled centres.
    pub coset_property: bool,
    /// `B_I^⊥` (dot-product scan) equals `B_{I^c}` in the dual space.
    pub perp_is_dual_ball: bool,
}

impl FullCountReport {
    pub fn holds(&self) -> bool {
        self.ball_size == self.formula_size
            && self.submodule
            && self.classes == self.expected_classes
            && self.identical_or_disjoint
            && self.coset_property
            && self.perp_is_dual_ball
    }
}

/// Checks the coset and duality structure of `B_I` for a full-count ideal
/// by exhaustive scans.
pub fn full_count_ball_structure(space: &BlockSpace, ideal: &Ideal, cap: u128) -> Result<FullCountReport> {
    checked_ideal(space, ideal)?;
    if !ideal.is_full_count() {
        return Err(Error::NotFullCount);
    }
    let size = space.enumerable_size(cap)?;
    let m = space.m();
    let ball = enumerate_i_ball(space, &space.zero(), ideal, cap)?;
    let mut member = vec![false; size];
    for b in &ball {
        member[space.index_of(b)] = true;
    }

    let free_dims: usize = ideal.root_set().iter().map(|&i| space.block_len(i)).sum();
    let formula_size = count::pow(u128::from(m), free_dims, "|B_I|")?;
    let expected_classes = count::pow(u128::from(m), space.len() - free_dims, "classes")?;

    // Closure: unit coordinate vectors inside B_I generate it, and B_I is
    // stable under translation by each of them and under scaling.
    let units: Vec<usize> = (0..space.len())
        .filter(|&j| {
            let mut e = vec![0u32; space.len()];
            e[j] = 1;
            member[crate::block_space::index_of(&e, m)]
        })
        .collect();
    let mut submodule = member[0];
    'outer: for b in &ball {
        if b.coords().iter().enumerate().any(|(j, &x)| x != 0 && !units.contains(&j)) {
            submodule = false;
            break;
        }
        for &j in &units {
            let mut c = b.coords().to_vec();
            c[j] = (c[j] + 1) % m;
            if !member[crate::block_space::index_of(&c, m)] {
                submodule = false;
                break 'outer;
            }
        }
        for a in 2..m {
            if !member[space.index_of(&space.scale(b, a))] {
                submodule = false;
                break 'outer;
            }
        }
    }

    // Partition into translates of B_I.
    let mut class = vec![u32::MAX; size];
    let mut classes: u128 = 0;
    let mut identical_or_disjoint = true;
    for idx in 0..size {
        if class[idx] != u32::MAX {
            continue;
        }
        let u = space.vector_at(idx);
        let id = classes as u32;
        classes += 1;
        for b in &ball {
            let w = space.index_of(&space.add(&u, b));
            if class[w] != u32::MAX && class[w] != id {
                identical_or_disjoint = false;
            }
            class[w] = id;
        }
    }

    let mut coset_property = true;
    let samples = [0, size / 3, (2 * size) / 3, size - 1];
    for &s in &samples {
        let u = space.vector_at(s);
        let scanned = enumerate_i_ball(space, &u, ideal, cap)?;
        let mut translated: Vec<BlockVector> = ball.iter().map(|b| space.add(&u, b)).collect();
        translated.sort();
        if scanned != translated {
            coset_property = false;
        }
    }

    let generators: Vec<BlockVector> = if submodule {
        units
            .iter()
            .map(|&j| {
                let mut e = vec![0u32; space.len()];
                e[j] = 1;
                BlockVector::from_raw(e)
            })
            .collect()
    } else {
        ball.clone()
    };
    let dual = space.dual();
    let complement = space.pomset().complement_ideal(ideal)?;
    let mut perp_is_dual_ball = true;
    space.scan(cap, |_, v| {
        let in_perp = generators
            .iter()
            .all(|g| crate::block_space::dot_mod(v, g.coords(), m) == 0);
        let in_dual_ball = support_within(&dual, v, complement.counts());
        if in_perp != in_dual_ball {
            perp_is_dual_ball = false;
        }
    })?;

    Ok(FullCountReport {
        ideal: ideal.clone(),
        ball_size: ball.len() as u128,
        formula_size,
        submodule,
        classes,
        expected_classes,
        identical_or_disjoint,
        coset_property,
        perp_is_dual_ball,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block_space::DEFAULT_CAP;

    fn chain5() -> BlockSpace {
        BlockSpace::chain(5, vec![1, 1]).unwrap()
    }

    fn ideal(space: &BlockSpace, lit: &str) -> Ideal {
        let p = space.pomset();
        p.ideal(Multiset::parse(p.n(), p.height(), lit).unwrap()).unwrap()
    }

    fn vecs(space: &BlockSpace, raw: &[[i64; 2]]) -> Vec<BlockVector> {
        raw.iter().map(|r| space.vector(r).unwrap()).collect()
    }

    #[test]
    fn i_ball_membership() {
        let s = chain5();
        let i = ideal(&s, "2/1");
        let u = s.vector(&[3, 1]).unwrap();
        assert!(in_i_ball(&s, &u, &u, &i).unwrap());
        let ball = enumerate_i_ball(&s, &s.zero(), &i, DEFAULT_CAP).unwrap();
        let want = vecs(&s, &[[0, 0], [1, 0], [2, 0], [3, 0], [4, 0]]);
        assert_eq!(ball, want);
        let full = s.pomset().full_ideal();
        assert_eq!(enumerate_i_ball(&s, &u, &full, DEFAULT_CAP).unwrap().len(), 25);
    }

    #[test]
    fn spheres_and_r_balls() {
        let s = chain5();
        let u = s.vector(&[2, 4]).unwrap();
        assert_eq!(enumerate_r_ball(&s, &u, 0, DEFAULT_CAP).unwrap(), vec![u.clone()]);
        let b2 = enumerate_r_ball(&s, &s.zero(), 2, DEFAULT_CAP).unwrap();
        assert_eq!(b2, vecs(&s, &[[0, 0], [1, 0], [2, 0], [3, 0], [4, 0]]));
        let sph = enumerate_i_sphere(&s, &s.zero(), &ideal(&s, "2/1"), DEFAULT_CAP).unwrap();
        assert_eq!(sph, vecs(&s, &[[2, 0], [3, 0]]));
    }

    #[test]
    fn sphere_formula_values() {
        let s = chain5();
        assert_eq!(s_i_cardinality_formula(&s, &ideal(&s, "2/1")).unwrap(), 2);
        assert_eq!(s_i_cardinality_formula(&s, &s.pomset().empty_ideal()).unwrap(), 1);
        let single = BlockSpace::antichain(7, vec![2]).unwrap();
        assert_eq!(s_i_cardinality_formula(&single, &ideal(&single, "1/1")).unwrap(), 8);
    }

    #[test]
    fn radius_cardinalities() {
        let s = chain5();
        assert_eq!(r_ball_cardinality(&s, 0).unwrap(), 1);
        assert_eq!(r_ball_cardinality(&s, 2).unwrap(), 5);
        assert_eq!(r_ball_cardinality(&s, 4).unwrap(), 25);
        assert!(r_ball_cardinality(&s, 5).is_err());
    }

    #[test]
    fn partial_ball_sizes() {
        let z9 = BlockSpace::antichain(9, vec![1]).unwrap();
        assert_eq!(partial_count_ball_cardinality(&z9, &ideal(&z9, "1/1")).unwrap(), 3);
        let z7 = BlockSpace::antichain(7, vec![2]).unwrap();
        assert_eq!(partial_count_ball_cardinality(&z7, &ideal(&z7, "1/1")).unwrap(), 9);
        let s = chain5();
        assert_eq!(partial_count_ball_cardinality(&s, &ideal(&s, "2/1 1/2")).unwrap(), 15);
        assert!(matches!(
            partial_count_ball_cardinality(&s, &ideal(&s, "2/1")),
            Err(Error::NotPartialCount)
        ));
    }

    #[test]
    fn full_count_structure_on_small_chain() {
        let s = chain5();
        let r = full_count_ball_structure(&s, &ideal(&s, "2/1"), DEFAULT_CAP).unwrap();
        assert_eq!(r.ball_size, 5);
        assert_eq!(r.classes, 5);
        assert!(r.holds(), "{r:?}");
        let e = full_count_ball_structure(&s, &s.pomset().empty_ideal(), DEFAULT_CAP).unwrap();
        assert_eq!(e.ball_size, 1);
        assert!(e.submodule && e.holds());
        assert!(matches!(
            full_count_ball_structure(&s, &ideal(&s, "2/1 1/2"), DEFAULT_CAP),
            Err(Error::NotFullCount)
        ));
    }

    #[test]
    fn perp_of_bottom_ball_is_top_ball_in_dual() {
        let s = chain5();
        let dual = s.dual();
        let top = ideal(&dual, "2/2");
        let want = enumerate_i_ball(&dual, &dual.zero(), &top, DEFAULT_CAP).unwrap();
        assert_eq!(want, vecs(&s, &[[0, 0], [0, 1], [0, 2], [0, 3], [0, 4]]));
        let r = full_count_ball_structure(&s, &ideal(&s, "2/1"), DEFAULT_CAP).unwrap();
        assert!(r.perp_is_dual_ball);
    }

    #[test]
    fn partial_balls_are_not_subgroups() {
        let s = chain5();
        let (u, v) = nonlinearity_witness(&s, &ideal(&s, "2/1 1/2"))
            .unwrap()
            .expect("witness");
        let i = ideal(&s, "2/1 1/2");
        assert!(in_i_ball(&s, &s.zero(), &u, &i).unwrap());
        assert!(in_i_ball(&s, &s.zero(), &v, &i).unwrap());
        assert!(!in_i_ball(&s, &s.zero(), &s.add(&u, &v), &i).unwrap());
        assert_eq!(nonlinearity_witness(&s, &ideal(&s, "2/1")).unwrap(), None);
    }

    #[test]
    fn ball_spec_dispatch() {
        let s = chain5();
        let spec = BallSpec {
            center: s.zero(),
            kind: BallKind::Radius(2),
        };
        assert_eq!(spec.enumerate(&s, DEFAULT_CAP).unwrap().len(), 5);
        assert!(spec.contains(&s, &s.vector(&[2, 0]).unwrap()).unwrap());
        let spec = BallSpec {
            center: s.zero(),
            kind: BallKind::Ideal(ideal(&s, "2/1 1/2")),
        };
        assert_eq!(spec.enumerate(&s, DEFAULT_CAP).unwrap().len(), 15);
    }
}
