//! Hopcroft–Karp maximum bipartite matching.

use std::collections::VecDeque;

const UNMATCHED: usize = usize::MAX;

/// Bipartite graph with `left` and `right` node sets and adjacency from the
/// left side. Neighbors are explored in the order given.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    right: usize,
    adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Right partner of each left node, if any.
    pub left: Vec<Option<usize>>,
    pub size: usize,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        debug_assert!(r < self.right);
        self.adj[l].push(r);
    }

    pub fn max_matching(&self) -> Matching {
        let n = self.adj.len();
        let mut ml = vec![UNMATCHED; n];
        let mut mr = vec![UNMATCHED; self.right];
        let mut dist = vec![u32::MAX; n];
        let mut size = 0;
        loop {
            // layered BFS from free left nodes
            let mut q = VecDeque::new();
            for l in 0..n {
                if ml[l] == UNMATCHED {
                    dist[l] = 0;
                    q.push_back(l);
                } else {
                    dist[l] = u32::MAX;
                }
            }
            let mut found = false;
            while let Some(l) = q.pop_front() {
                for &r in &self.adj[l] {
                    let m = mr[r];
                    if m == UNMATCHED {
                        found = true;
                    } else if dist[m] == u32::MAX {
                        dist[m] = dist[l] + 1;
                        q.push_back(m);
                    }
                }
            }
            if !found {
                break;
            }
            let mut it = vec![0usize; n];
            for l in 0..n {
                if ml[l] == UNMATCHED && self.augment(l, &mut ml, &mut mr, &mut dist, &mut it) {
                    size += 1;
                }
            }
        }
        Matching {
            left: ml
                .into_iter()
                .map(|r| (r != UNMATCHED).then_some(r))
                .collect(),
            size,
        }
    }

    fn augment(
        &self,
        l: usize,
        ml: &mut [usize],
        mr: &mut [usize],
        dist: &mut [u32],
        it: &mut [usize],
    ) -> bool {
        while it[l] < self.adj[l].len() {
            let r = self.adj[l][it[l]];
            it[l] += 1;
            let m = mr[r];
            let ok =
                m == UNMATCHED || (dist[m] == dist[l] + 1 && self.augment(m, ml, mr, dist, it));
            if ok {
                ml[l] = r;
                mr[r] = l;
                return true;
            }
        }
        dist[l] = u32::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(left: usize, right: usize, edges: &[(usize, usize)]) -> usize {
        fn go(l: usize, left: usize, used: &mut Vec<bool>, adj: &[Vec<usize>]) -> usize {
            if l == left {
                return 0;
            }
            let mut best = go(l + 1, left, used, adj);
            for &r in &adj[l] {
                if !used[r] {
                    used[r] = true;
                    best = best.max(1 + go(l + 1, left, used, adj));
                    used[r] = false;
                }
            }
            best
        }
        let mut adj = vec![Vec::new(); left];
        for &(l, r) in edges {
            adj[l].push(r);
        }
        go(0, left, &mut vec![false; right], &adj)
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let left = rng.gen_range(1..7);
            let right = rng.gen_range(1..7);
            let mut g = BipartiteGraph::new(left, right);
            let mut edges = Vec::new();
            for l in 0..left {
                for r in 0..right {
                    if rng.gen_bool(0.35) {
                        g.add_edge(l, r);
                        edges.push((l, r));
                    }
                }
            }
            let m = g.max_matching();
            assert_eq!(m.size, brute(left, right, &edges));
            let mut used = vec![false; right];
            for (l, r) in m.left.iter().enumerate() {
                if let Some(r) = *r {
                    assert!(edges.contains(&(l, r)));
                    assert!(!used[r]);
                    used[r] = true;
                }
            }
        }
    }
}
