//! Shared configurations and from-the-definition oracles for the
//! integration tests. Nothing here calls the library's weight code.

#![allow(dead_code)]

use pomset_block::block_space::{BlockSpace, BlockVector};
use pomset_block::codes::Code;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Debug, Clone)]
pub struct Config {
    pub m: u32,
    pub blocks: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
    pub order: &'static str,
}

impl Config {
    pub fn space(&self) -> BlockSpace {
        BlockSpace::with_order(self.m, self.blocks.clone(), &self.pairs).expect("grid config")
    }

    pub fn size(&self) -> u64 {
        u64::from(self.m).pow(self.blocks.iter().sum::<usize>() as u32)
    }

    pub fn label(&self) -> String {
        format!("m={} blocks={:?} {}", self.m, self.blocks, self.order)
    }
}

/// Compositions of at most `total` into exactly `n` positive parts.
pub fn compositions(n: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let remaining = n - cur.len() - 1;
        for k in 1..=left.saturating_sub(remaining) {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total, &mut Vec::new(), &mut out);
    out
}

/// Orders on `n` elements: antichain, chain, and the five-element example
/// order `1<3, 2<4, 2<5` restricted to `[n]`, without duplicates.
pub fn orders(n: usize) -> Vec<(&'static str, Vec<(usize, usize)>)> {
    let mut out: Vec<(&'static str, Vec<(usize, usize)>)> = vec![("antichain", vec![])];
    if n >= 2 {
        out.push(("chain", (1..n).map(|i| (i, i + 1)).collect()));
    }
    let restricted: Vec<(usize, usize)> = [(1, 3), (2, 4), (2, 5)]
        .into_iter()
        .filter(|&(a, b)| a <= n && b <= n)
        .collect();
    if !restricted.is_empty() && n > 2 {
        out.push(("example order", restricted));
    }
    out
}

/// The grid: m in 4..=7, n in 1..=3, total block length at most 6, the
/// three orders, and at most 10^6 vectors.
pub fn grid() -> Vec<Config> {
    let mut out = Vec::new();
    for m in 4..=7u32 {
        for n in 1..=3 {
            for blocks in compositions(n, 6) {
                for (order, pairs) in orders(n) {
                    let c = Config {
                        m,
                        blocks: blocks.clone(),
                        pairs,
                        order,
                    };
                    if c.size() <= 1_000_000 {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

pub fn chain_grid(max_len: usize) -> Vec<Config> {
    grid()
        .into_iter()
        .filter(|c| c.order == "chain" || c.blocks.len() == 1)
        .filter(|c| c.blocks.iter().sum::<usize>() <= max_len)
        .collect()
}

pub fn lee(x: u32, m: u32) -> u32 {
    x.min(m - x)
}

pub fn block_slices<'a>(space: &BlockSpace, coords: &'a [u32]) -> Vec<&'a [u32]> {
    let mut out = Vec::new();
    let mut start = 0;
    for &k in space.blocks() {
        out.push(&coords[start..start + k]);
        start += k;
    }
    out
}

/// Largest Lee weight in each block.
pub fn support(space: &BlockSpace, coords: &[u32]) -> Vec<u32> {
    block_slices(space, coords)
        .iter()
        .map(|b| b.iter().map(|&x| lee(x, space.m())).max().unwrap_or(0))
        .collect()
}

/// Counts of the ideal generated by a support: anything strictly below a
/// support element is raised to full height.
pub fn generated(space: &BlockSpace, supp: &[u32]) -> Vec<u32> {
    let n = supp.len();
    let p = space.pomset();
    (0..n)
        .map(|i| {
            let below_support = (0..n).any(|j| supp[j] > 0 && p.less(i + 1, j + 1));
            if below_support {
                space.h()
            } else {
                supp[i]
            }
        })
        .collect()
}

pub fn weight(space: &BlockSpace, coords: &[u32]) -> u64 {
    generated(space, &support(space, coords))
        .iter()
        .map(|&c| u64::from(c))
        .sum()
}

pub fn poset_weight(space: &BlockSpace, coords: &[u32]) -> u64 {
    let supp = support(space, coords);
    let n = supp.len();
    let p = space.pomset();
    (0..n)
        .filter(|&i| (0..n).any(|j| supp[j] > 0 && (i == j || p.less(i + 1, j + 1))))
        .count() as u64
}

/// Lee weight on the maximal nonzero positions of the down-set, `h` on the
/// rest of the down-set. Unit blocks only.
pub fn pw_weight(space: &BlockSpace, coords: &[u32]) -> u64 {
    let n = coords.len();
    let p = space.pomset();
    let down: Vec<bool> = (0..n)
        .map(|i| (0..n).any(|j| coords[j] != 0 && (i == j || p.less(i + 1, j + 1))))
        .collect();
    (0..n)
        .filter(|&i| down[i])
        .map(|i| {
            let maximal = !(0..n).any(|j| down[j] && p.less(i + 1, j + 1));
            if maximal {
                u64::from(lee(coords[i], space.m()))
            } else {
                u64::from(space.h())
            }
        })
        .sum()
}

pub fn sub(m: u32, u: &[u32], v: &[u32]) -> Vec<u32> {
    u.iter().zip(v).map(|(&a, &b)| (a + m - b) % m).collect()
}

pub fn add(m: u32, u: &[u32], v: &[u32]) -> Vec<u32> {
    u.iter().zip(v).map(|(&a, &b)| (a + b) % m).collect()
}

pub fn all_vectors(space: &BlockSpace) -> Vec<Vec<u32>> {
    space
        .iter(10_000_000)
        .expect("desk scale")
        .map(|v| v.coords().to_vec())
        .collect()
}

/// Every count vector in `0..=h` per element that is down-closed.
pub fn all_ideals(space: &BlockSpace) -> Vec<Vec<u32>> {
    let n = space.n();
    let h = space.h();
    let p = space.pomset();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let ok = (0..n).all(|j| cur[j] == 0 || (0..n).all(|i| !p.less(i + 1, j + 1) || cur[i] == h));
        if ok {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            cur[i] += 1;
            if cur[i] <= h {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

pub fn within(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn vector(space: &BlockSpace, coords: &[u32]) -> BlockVector {
    let c: Vec<i64> = coords.iter().map(|&x| i64::from(x)).collect();
    space.vector(&c).expect("length matches")
}

/// A mix of random explicit codes and random spans.
pub fn random_codes(space: &BlockSpace, count: usize, seed: u64) -> Vec<Code> {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = space.len();
    let m = space.m();
    let rand_vec = |rng: &mut StdRng| -> BlockVector {
        let c: Vec<u32> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        vector(space, &c)
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let code = if rng.gen_bool(0.5) {
            let words = rng.gen_range(2..=8);
            let w: Vec<BlockVector> = (0..words).map(|_| rand_vec(&mut rng)).collect();
            Code::explicit(space, w).expect("nonempty")
        } else {
            let gens = rng.gen_range(1..=2);
            let g: Vec<BlockVector> = (0..gens).map(|_| rand_vec(&mut rng)).collect();
            Code::span(space, &g, 1_000_000).expect("small span")
        };
        if code.len() >= 2 {
            out.push(code);
        }
    }
    out
}
