//! Choosing two incidences per edge with every vertex chosen at most `k`
//! times, and the greedy list coloring this enables for arbitrary
//! hypergraphs.
//!
//! Start from any choice of two vertices per edge and repeatedly shed load
//! from overloaded vertices along augmenting paths
//! `v1, e1, v2, e2, ..., v_{m+1}` where `v_i` is chosen in `e_i` and
//! `v_{i+1}` is not. Flipping such a path moves one unit of degree from
//! `v1` to `v_{m+1}` and keeps two chosen vertices in every edge. For
//! `k = ceil(2 Delta / s)` a counting argument rules out getting stuck, so
//! the procedure always reaches zero overload.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::density::gk_degree_cap;
use crate::error::{Error, Result};
use crate::hypergraph::{is_proper, Coloring, Hypergraph, ListAssignment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceSelection {
    /// Two distinct vertices of each edge, smaller first.
    pub chosen: Vec<[usize; 2]>,
    pub k: usize,
    /// Augmenting paths flipped while building.
    pub flips: usize,
}

impl IncidenceSelection {
    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for pair in &self.chosen {
            d[pair[0]] += 1;
            d[pair[1]] += 1;
        }
        d
    }

    /// Total overload `sum_v max(0, d(v) - k)`.
    pub fn potential(&self, n: usize) -> usize {
        overload(&self.degrees(n), self.k)
    }
}

fn overload(deg: &[usize], k: usize) -> usize {
    deg.iter().map(|&d| d.saturating_sub(k)).sum()
}

/// Starts from the two smallest vertices of each edge and flips shortest
/// augmenting paths until no vertex exceeds `k`. Returns `None` when some
/// overload remains and no augmenting path reaches a vertex below `k`.
pub fn build_selection(h: &Hypergraph, k: usize) -> Option<IncidenceSelection> {
    let n = h.n();
    let mut chosen: Vec<[usize; 2]> = h.edges().iter().map(|e| [e[0], e[1]]).collect();
    let mut deg = vec![0usize; n];
    for pair in &chosen {
        deg[pair[0]] += 1;
        deg[pair[1]] += 1;
    }
    let incidence = h.incidence();
    let mut flips = 0;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    while overload(&deg, k) > 0 {
        parent.fill(None);
        seen.fill(false);
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] > k).collect();
        for &v in &queue {
            seen[v] = true;
        }
        let mut target = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &e in &incidence[v] {
                if !chosen[e].contains(&v) {
                    continue;
                }
                for &w in h.edge(e) {
                    if seen[w] || chosen[e].contains(&w) {
                        continue;
                    }
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    if deg[w] < k {
                        target = Some(w);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        let mut w = target?;
        // Shortest paths use each edge at most once: a repeated edge would
        // give a shortcut to the later vertex.
        deg[w] += 1;
        while let Some((v, e)) = parent[w] {
            let slot = chosen[e]
                .iter()
                .position(|&x| x == v)
                .expect("v chosen in e");
            chosen[e][slot] = w;
            chosen[e].sort_unstable();
            w = v;
        }
        deg[w] -= 1;
        flips += 1;
    }
    Some(IncidenceSelection { chosen, k, flips })
}

/// Colors any hypergraph from lists of size at least `ceil(2 Delta / s) + 1`:
/// build the selection at that cap, then color the graph of chosen pairs
/// greedily in vertex order.
pub fn list_color_gk(h: &Hypergraph, lists: &ListAssignment) -> Result<Coloring> {
    if lists.len() != h.n() {
        return Err(Error::Invalid(format!(
            "{} lists for {} vertices",
            lists.len(),
            h.n()
        )));
    }
    if h.edge_count() == 0 {
        return Ok(Coloring(lists.lists().iter().map(|l| l[0]).collect()));
    }
    let k = gk_degree_cap(h)?;
    if let Some(v) = (0..h.n()).find(|&v| lists.list(v).len() < k + 1) {
        return Err(Error::Precondition(format!(
            "vertex {v} has {} colors, at least {} required",
            lists.list(v).len(),
            k + 1
        )));
    }
    let sel =
        build_selection(h, k).expect("a selection with degrees <= ceil(2 Delta / s) always exists");
    let coloring = greedy_pairs(h.n(), &sel.chosen, lists)
        .expect("at most k colored neighbors and k + 1 colors per vertex");
    assert!(
        is_proper(h, &coloring) && coloring.respects(lists),
        "pair coloring failed to lift to the hypergraph"
    );
    Ok(coloring)
}

fn greedy_pairs(n: usize, pairs: &[[usize; 2]], lists: &ListAssignment) -> Option<Coloring> {
    let mut adj = vec![Vec::new(); n];
    for &[x, y] in pairs {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut color: Vec<Option<u32>> = vec![None; n];
    for v in 0..n {
        let c = lists
            .list(v)
            .iter()
            .copied()
            .find(|c| adj[v].iter().all(|&u| color[u] != Some(*c)))?;
        color[v] = Some(c);
    }
    Some(Coloring(color.into_iter().map(Option::unwrap).collect()))
}
