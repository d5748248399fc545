//! Maximum edge density `L(H) = max |E'| / |union of E'|` over nonempty edge
//! subsets, and the closed-form choosability bounds built on it.
//!
//! Everything here is exact rational arithmetic: the bounds take a ceiling
//! of `L(H)`, and a value sitting exactly on an integer must stay there.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, INF};
use crate::hypergraph::Hypergraph;

/// Subset enumeration is limited to this many edges (2^24 subsets).
pub const EXACT_EDGE_GUARD: usize = 24;

/// Nonnegative reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn ceil(self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn require_edges(h: &Hypergraph) -> Result<()> {
    if h.edge_count() == 0 {
        Err(Error::Invalid("density is undefined without edges".into()))
    } else {
        Ok(())
    }
}

/// `L(H)` by enumerating every nonempty edge subset with bitset unions.
pub fn density_exact(h: &Hypergraph) -> Result<Rational> {
    require_edges(h)?;
    let m = h.edge_count();
    if m > EXACT_EDGE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{m} edges exceed the enumeration limit of {EXACT_EDGE_GUARD}; use density_flow"
        )));
    }
    // compact the touched vertices into bit positions
    let mut index = vec![usize::MAX; h.n()];
    let mut next = 0;
    for e in h.edges() {
        for &v in e {
            if index[v] == usize::MAX {
                index[v] = next;
                next += 1;
            }
        }
    }
    let words = next.div_ceil(64);
    let masks: Vec<Vec<u64>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut w = vec![0u64; words];
            for &v in e {
                w[index[v] / 64] |= 1 << (index[v] % 64);
            }
            w
        })
        .collect();

    let mut best = (0u64, 1u64);
    let mut stack = vec![vec![0u64; words]; m + 1];
    enumerate_unions(&masks, 0, 0, &mut stack, &mut best);
    Ok(Rational::new(best.0, best.1))
}

/// Visits each nonempty subset once: the subset built so far is extended by
/// every edge after `from`.
fn enumerate_unions(
    masks: &[Vec<u64>],
    from: usize,
    depth: usize,
    stack: &mut [Vec<u64>],
    best: &mut (u64, u64),
) {
    for j in from..masks.len() {
        let (lo, hi) = stack.split_at_mut(depth + 1);
        let cur = &lo[depth];
        let nxt = &mut hi[0];
        let mut pop = 0u64;
        for (w, (a, b)) in nxt.iter_mut().zip(cur.iter().zip(&masks[j])) {
            *w = a | b;
            pop += u64::from(w.count_ones());
        }
        let count = depth as u64 + 1;
        if u128::from(count) * u128::from(best.1) > u128::from(best.0) * u128::from(pop) {
            *best = (count, pop);
        }
        enumerate_unions(masks, j + 1, depth + 1, stack, best);
    }
}

/// `L(H)` by Dinkelbach iteration over parametric minimum cuts.
///
/// For a candidate `a/b`, the network `source -> edge (b)`, `edge -> vertex
/// (inf)`, `vertex -> sink (a)` has a closure of value
/// `max_{E'} b|E'| - a|union E'| = b|E| - mincut`. A positive value yields a
/// denser subset, which becomes the next candidate; value zero certifies
/// optimality.
pub fn density_flow(h: &Hypergraph) -> Result<Rational> {
    require_edges(h)?;
    let m = h.edge_count();
    let (mut num, mut den) = (m as u64, touched_vertices(h, 0..m) as u64);
    let source = 0;
    let sink = 1 + m + h.n();
    loop {
        let mut net = FlowNetwork::new(sink + 1);
        for (i, e) in h.edges().iter().enumerate() {
            net.add_arc(source, 1 + i, den as i64);
            for &v in e {
                net.add_arc(1 + i, 1 + m + v, INF);
            }
        }
        for v in 0..h.n() {
            net.add_arc(1 + m + v, sink, num as i64);
        }
        let cut = net.max_flow(source, sink);
        let value = den as i64 * m as i64 - cut;
        if value <= 0 {
            return Ok(Rational::new(num, den));
        }
        let side = net.source_side(source);
        let chosen: Vec<usize> = (0..m).filter(|&i| side[1 + i]).collect();
        let next_num = chosen.len() as u64;
        let next_den = touched_vertices(h, chosen.into_iter()) as u64;
        debug_assert!(
            u128::from(next_num) * u128::from(den) > u128::from(num) * u128::from(next_den)
        );
        num = next_num;
        den = next_den;
    }
}

/// `L(H)` by enumeration when within the guard, otherwise by flow.
pub fn density(h: &Hypergraph) -> Result<Rational> {
    if h.edge_count() <= EXACT_EDGE_GUARD {
        density_exact(h)
    } else {
        density_flow(h)
    }
}

fn touched_vertices(h: &Hypergraph, edges: impl Iterator<Item = usize>) -> usize {
    let mut seen = vec![false; h.n()];
    let mut count = 0;
    for i in edges {
        for &v in h.edge(i) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
            }
        }
    }
    count
}

/// A bound on `ch(H)`. `valid` says whether the bound holds for
/// this hypergraph (2-colorability for the sparse and degree bounds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: u64,
    pub valid: bool,
}

/// `ceil(L(H)) + 1`, valid for 2-colorable `H`.
pub fn bound_sparse(h: &Hypergraph) -> Result<Bound> {
    let l = density(h)?;
    Ok(Bound {
        value: l.ceil() + 1,
        valid: h.find_bipartition().is_some(),
    })
}

/// `ceil(Delta / s) + 1`, valid for 2-colorable `H`.
pub fn bound_degree(h: &Hypergraph) -> Result<Bound> {
    let m = h.metrics()?;
    let ratio = Rational::new(m.max_degree as u64, m.min_edge_size as u64);
    debug_assert!(density(h).map_or(true, |l| l <= ratio), "L(H) <= Delta/s");
    Ok(Bound {
        value: ratio.ceil() + 1,
        valid: h.find_bipartition().is_some(),
    })
}

/// `ceil(2 Delta / s) + 1`, valid for every hypergraph.
pub fn bound_gk(h: &Hypergraph) -> Result<Bound> {
    Ok(Bound {
        value: gk_degree_cap(h)? as u64 + 1,
        valid: true,
    })
}

/// `ceil(2 Delta / s)`: the degree cap used by the constructive coloring.
pub fn gk_degree_cap(h: &Hypergraph) -> Result<usize> {
    let m = h.metrics()?;
    Ok((2 * m.max_degree).div_ceil(m.min_edge_size))
}
