//! Instance generators: complete 2-colorable hypergraphs, the Fano plane and
//! random k-uniform k-regular hypergraphs.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Bipartition, Hypergraph, Side};

const MAX_GENERATED_EDGES: u128 = 5_000_000;

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * u128::from(n - i) / u128::from(i + 1);
    }
    r
}

/// `K^s_{n,m}`: all `s`-subsets of `n + m` vertices meeting both parts.
/// Vertices `0..n` form side A and `n..n+m` side B. Edges come out in
/// lexicographic order.
pub fn gen_complete(s: usize, n: usize, m: usize) -> Result<(Hypergraph, Bipartition)> {
    if s < 2 || n < 1 || m < 1 || n + m < s {
        return Err(Error::Invalid(format!(
            "K^{s}_{{{n},{m}}} needs s >= 2, n >= 1, m >= 1 and n + m >= s"
        )));
    }
    let total = n + m;
    let count = binomial(total as u64, s as u64)
        - binomial(n as u64, s as u64)
        - binomial(m as u64, s as u64);
    if count > MAX_GENERATED_EDGES {
        return Err(Error::GuardExceeded(format!(
            "K^{s}_{{{n},{m}}} has {count} edges (limit {MAX_GENERATED_EDGES})"
        )));
    }
    let mut edges = Vec::with_capacity(count as usize);
    let mut comb: Vec<usize> = (0..s).collect();
    loop {
        let has_a = comb[0] < n;
        let has_b = comb[s - 1] >= n;
        if has_a && has_b {
            edges.push(comb.clone());
        }
        // next combination in lexicographic order
        let mut i = s;
        while i > 0 && comb[i - 1] == total - s + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        comb[i - 1] += 1;
        for j in i..s {
            comb[j] = comb[j - 1] + 1;
        }
    }
    let h = Hypergraph::new(total, edges)?;
    let side = (0..total)
        .map(|v| if v < n { Side::A } else { Side::B })
        .collect();
    let bip = Bipartition::new(&h, side)?;
    Ok((h, bip))
}

/// The Fano plane: lines `{i, i+1, i+3} mod 7`. 3-uniform, 3-regular and not
/// 2-colorable.
pub fn gen_fano() -> Hypergraph {
    let edges = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
    Hypergraph::new(7, edges).expect("fano lines are valid edges")
}

/// The 2-uniform cycle on `n >= 3` vertices.
pub fn gen_cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::Invalid("a cycle needs at least 3 vertices".into()));
    }
    Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
}

#[derive(Clone, Copy, Debug)]
pub struct RegularSearch {
    /// Total swap proposals across all restarts.
    pub max_proposals: u64,
    /// Proposals without improvement before restarting from a fresh shuffle.
    pub restart_after: u64,
    /// Accept repeated edges in the output.
    pub allow_duplicate_edges: bool,
}

impl Default for RegularSearch {
    fn default() -> Self {
        RegularSearch {
            max_proposals: 100_000,
            restart_after: 2_000,
            allow_duplicate_edges: false,
        }
    }
}

/// A k-uniform k-regular hypergraph on `n` vertices (so with `n` edges),
/// found by randomized point swapping. Returns `Ok(None)` when the proposal
/// budget runs out.
pub fn gen_k_regular_k_uniform(k: usize, n: usize, seed: u64) -> Result<Option<Hypergraph>> {
    gen_k_regular_k_uniform_with(k, n, seed, RegularSearch::default())
}

pub fn gen_k_regular_k_uniform_with(
    k: usize,
    n: usize,
    seed: u64,
    cfg: RegularSearch,
) -> Result<Option<Hypergraph>> {
    if k < 2 {
        return Err(Error::Invalid("k must be at least 2".into()));
    }
    if n < k {
        return Err(Error::Invalid(format!(
            "edge size {k} exceeds vertex count {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    let mut used = 0u64;
    while used < cfg.max_proposals {
        points.shuffle(&mut rng);
        let mut cost = layout_cost(&points, k, cfg.allow_duplicate_edges);
        let mut stale = 0u64;
        while cost > 0 && used < cfg.max_proposals && stale < cfg.restart_after {
            used += 1;
            stale += 1;
            let i = rng.gen_range(0..points.len());
            let j = rng.gen_range(0..points.len());
            if i / k == j / k || points[i] == points[j] {
                continue;
            }
            points.swap(i, j);
            let next = layout_cost(&points, k, cfg.allow_duplicate_edges);
            if next < cost {
                stale = 0;
                cost = next;
            } else if next == cost || rng.gen_bool(0.02) {
                cost = next;
            } else {
                points.swap(i, j);
            }
        }
        if cost == 0 {
            let edges = points.chunks(k).map(<[usize]>::to_vec).collect();
            return Ok(Some(Hypergraph::new(n, edges)?));
        }
    }
    Ok(None)
}

/// Repeated vertices inside edges, plus repeated edges unless allowed.
fn layout_cost(points: &[usize], k: usize, allow_duplicates: bool) -> usize {
    let mut cost = 0;
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for chunk in points.chunks(k) {
        let mut e = chunk.to_vec();
        e.sort_unstable();
        let before = e.len();
        e.dedup();
        cost += before - e.len();
        if !allow_duplicates {
            *seen.entry(e).or_insert(0) += 1;
        }
    }
    cost + seen.values().map(|c| c - 1).sum::<usize>()
}
