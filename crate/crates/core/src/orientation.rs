//! Orientations with bounded in-degree and list coloring of 2-colorable
//! hypergraphs through a bipartite pair-graph.
//!
//! An orientation with `max d(v) <= k` is a matching that covers every edge
//! in the bipartite graph between edges and `k` slot copies of each vertex.
//! Given a 2-coloring `(A, B)`, each edge `e` contributes one pair
//! `(head(e), u_e)` with `u_e` on the other side; a proper coloring of these
//! pairs is proper for the hypergraph, and lists of size `d(v) + 1` always
//! suffice for it.

use serde::{Deserialize, Serialize};

use crate::density::density;
use crate::error::{Error, Result};
use crate::hypergraph::{
    is_proper, Bipartition, Coloring, Hypergraph, ListAssignment, Orientation,
};
use crate::matching::BipartiteGraph;

/// An orientation with every `d(v) <= k`, if one exists.
pub fn hall_orientation(h: &Hypergraph, k: usize) -> Option<Orientation> {
    let m = h.edge_count();
    if m == 0 {
        return Some(Orientation::from_heads_unchecked(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    // no vertex can take more than m edges
    let k = k.min(m);
    let mut g = BipartiteGraph::new(m, h.n() * k);
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            for slot in 0..k {
                g.add_edge(i, v * k + slot);
            }
        }
    }
    let matching = g.max_matching();
    if matching.size < m {
        return None;
    }
    let heads = matching
        .left
        .into_iter()
        .map(|r| r.expect("perfect on the edge side") / k)
        .collect();
    Some(Orientation::from_heads_unchecked(heads))
}

/// The least `k` admitting an orientation with `max d(v) <= k`, with a
/// witness. This `k` equals `ceil(L(H))`.
pub fn min_orientation(h: &Hypergraph) -> Result<(usize, Orientation)> {
    if h.edge_count() == 0 {
        return Err(Error::Invalid("no edges to orient".into()));
    }
    let max_degree = h.degrees().into_iter().max().unwrap_or(1);
    let (mut lo, mut hi) = (1, max_degree);
    let mut best = hall_orientation(h, hi).expect("heads at any vertex fit degree Delta");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match hall_orientation(h, mid) {
            Some(o) => {
                hi = mid;
                best = o;
            }
            None => lo = mid + 1,
        }
    }
    debug_assert_eq!(
        density(h).map(|l| l.ceil() as usize).ok(),
        Some(lo),
        "min orientation degree equals ceil(L(H))"
    );
    Ok((lo, best))
}

/// One pair per hypergraph edge; `pairs[i].0` is the head.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairGraph {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    /// Index of the hypergraph edge each pair came from.
    pub origin: Vec<usize>,
}

/// Pairs `(head(e), u_e)` where `u_e` is the smallest vertex of `e` on the
/// side opposite to the head.
pub fn reduce_to_pairgraph(
    h: &Hypergraph,
    bip: &Bipartition,
    phi: &Orientation,
) -> Result<PairGraph> {
    bip.check(h)?;
    let phi = Orientation::new(h, phi.heads().to_vec())?;
    let mut pairs = Vec::with_capacity(h.edge_count());
    for (i, e) in h.edges().iter().enumerate() {
        let head = phi.head(i);
        let other = bip.side(head).other();
        let u = *e
            .iter()
            .find(|&&v| bip.side(v) == other)
            .expect("a checked bipartition meets every edge on both sides");
        pairs.push((head, u));
    }
    Ok(PairGraph {
        n: h.n(),
        origin: (0..pairs.len()).collect(),
        pairs,
    })
}

impl PairGraph {
    /// In-degree of each vertex as a head.
    pub fn head_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(x, _) in &self.pairs {
            d[x] += 1;
        }
        d
    }

    pub fn as_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(
            self.n,
            self.pairs.iter().map(|&(x, y)| vec![x, y]).collect(),
        )
        .expect("pairs join distinct vertices")
    }

    fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(x, y) in &self.pairs {
            adj[x].push(y);
            adj[y].push(x);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    /// Exhaustive backtracking: vertices by decreasing degree, colors in list
    /// order.
    pub fn color_by_backtracking(&self, lists: &ListAssignment) -> Option<Coloring> {
        let adj = self.neighbors();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
        let mut color: Vec<Option<u32>> = vec![None; self.n];
        fn go(
            i: usize,
            order: &[usize],
            adj: &[Vec<usize>],
            lists: &ListAssignment,
            color: &mut [Option<u32>],
        ) -> bool {
            let Some(&v) = order.get(i) else { return true };
            for &c in lists.list(v) {
                if adj[v].iter().all(|&u| color[u] != Some(c)) {
                    color[v] = Some(c);
                    if go(i + 1, order, adj, lists, color) {
                        return true;
                    }
                }
            }
            color[v] = None;
            false
        }
        go(0, &order, &adj, lists, &mut color)
            .then(|| Coloring(color.into_iter().map(|c| c.expect("all colored")).collect()))
    }

    /// Polynomial-time coloring when `|L(v)| > d(v)` for the head degrees.
    ///
    /// Arcs run head -> partner. Every induced subdigraph of a bipartite
    /// digraph has a kernel (an independent set absorbing all other
    /// vertices). For each color `c` in turn, the uncolored vertices whose
    /// list holds `c` receive `c` on a kernel of their subdigraph; the rest
    /// drop `c` and lose at least one out-arc, so `|L(v)| > outdeg(v)` holds
    /// throughout. `bip` is the 2-coloring the pairs cross.
    pub fn color_by_kernels(&self, bip: &Bipartition, lists: &ListAssignment) -> Option<Coloring> {
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        let mut inn: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(x, y) in &self.pairs {
            out[x].push(y);
            inn[y].push(x);
        }
        let mut color: Vec<Option<u32>> = vec![None; self.n];
        for c in lists.palette() {
            let active: Vec<bool> = (0..self.n)
                .map(|v| color[v].is_none() && lists.list(v).binary_search(&c).is_ok())
                .collect();
            for v in kernel(&out, &inn, active, bip) {
                color[v] = Some(c);
            }
        }
        color
            .into_iter()
            .collect::<Option<Vec<u32>>>()
            .map(Coloring)
    }
}

/// Kernel of the subdigraph induced by `active`, by repeatedly taking a sink
/// strong component `C`: a singleton joins the kernel; otherwise `C` lies on
/// both sides and its A-vertices absorb its B-vertices. Each step removes the
/// chosen vertices together with all their in-neighbors.
fn kernel(
    out: &[Vec<usize>],
    inn: &[Vec<usize>],
    mut alive: Vec<bool>,
    bip: &Bipartition,
) -> Vec<usize> {
    let mut kernel = Vec::new();
    while let Some(comp) = sink_component(out, &alive) {
        let chosen: Vec<usize> = if comp.len() == 1 {
            comp
        } else {
            comp.into_iter()
                .filter(|&v| bip.side(v) == crate::Side::A)
                .collect()
        };
        for &v in &chosen {
            alive[v] = false;
        }
        for &v in &chosen {
            for &u in &inn[v] {
                alive[u] = false;
            }
        }
        kernel.extend(chosen);
    }
    kernel.sort_unstable();
    kernel
}

/// A strong component of the alive subdigraph with no arcs leaving it.
fn sink_component(out: &[Vec<usize>], alive: &[bool]) -> Option<Vec<usize>> {
    let n = out.len();
    // iterative Tarjan; components are emitted in reverse topological order,
    // so the first one completed is a sink
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    for root in (0..n).filter(|&v| alive[v]) {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if let Some(&w) = out[v].get(*next) {
                *next += 1;
                if !alive[w] {
                    continue;
                }
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    return Some(comp);
                }
            }
        }
    }
    None
}

/// How the pair-graph is list colored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairSolver {
    #[default]
    Backtracking,
    Kernels,
}

/// Colors a 2-colorable hypergraph from lists with `|L(v)| >= d(v) + 1`
/// for the minimum orientation, by coloring its pair-graph.
pub fn list_color_sparse(
    h: &Hypergraph,
    bip: &Bipartition,
    lists: &ListAssignment,
) -> Result<Coloring> {
    list_color_sparse_with(h, bip, lists, PairSolver::default())
}

pub fn list_color_sparse_with(
    h: &Hypergraph,
    bip: &Bipartition,
    lists: &ListAssignment,
    solver: PairSolver,
) -> Result<Coloring> {
    if lists.len() != h.n() {
        return Err(Error::Invalid(format!(
            "{} lists for {} vertices",
            lists.len(),
            h.n()
        )));
    }
    bip.check(h)?;
    if h.edge_count() == 0 {
        return Ok(Coloring(lists.lists().iter().map(|l| l[0]).collect()));
    }
    let (_, phi) = min_orientation(h)?;
    let need = phi.degrees(h.n());
    if let Some(v) = (0..h.n()).find(|&v| lists.list(v).len() < need[v] + 1) {
        return Err(Error::Precondition(format!(
            "vertex {v} has {} colors but the orientation needs {}",
            lists.list(v).len(),
            need[v] + 1
        )));
    }
    let pg = reduce_to_pairgraph(h, bip, &phi)?;
    let coloring = match solver {
        PairSolver::Backtracking => pg.color_by_backtracking(lists),
        PairSolver::Kernels => pg.color_by_kernels(bip, lists),
    };
    let coloring = coloring.expect("pair-graph with lists of size d+1 must be colorable");
    assert!(
        is_proper(h, &coloring) && coloring.respects(lists),
        "pair-graph coloring failed to lift to the hypergraph"
    );
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, gen_cycle, gen_fano, gen_k_regular_k_uniform};
    use crate::hypergraph::Side;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn assert_orientation(h: &Hypergraph, o: &Orientation, k: usize) {
        assert!(Orientation::new(h, o.heads().to_vec()).is_ok());
        assert!(o.max_degree(h.n()) <= k);
    }

    #[test]
    fn hall_examples() {
        let (k33, _) = gen_complete(2, 3, 3).unwrap();
        let o = hall_orientation(&k33, 2).unwrap();
        assert_orientation(&k33, &o, 2);
        assert!(hall_orientation(&k33, 1).is_none());

        let e = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let o = hall_orientation(&e, 1).unwrap();
        assert_eq!(o.degrees(3).iter().sum::<usize>(), 1);
    }

    #[test]
    fn min_orientation_examples() {
        let (k33, _) = gen_complete(2, 3, 3).unwrap();
        let (k, o) = min_orientation(&k33).unwrap();
        assert_eq!(k, 2);
        assert_orientation(&k33, &o, 2);

        let (k, o) = min_orientation(&gen_fano()).unwrap();
        assert_eq!(k, 1);
        // a system of distinct representatives
        let mut heads = o.heads().to_vec();
        heads.sort_unstable();
        assert_eq!(heads, (0..7).collect::<Vec<_>>());

        assert_eq!(min_orientation(&gen_cycle(3).unwrap()).unwrap().0, 1);
        assert!(min_orientation(&Hypergraph::new(2, vec![]).unwrap()).is_err());
    }

    #[test]
    fn pairgraph_examples() {
        let e = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let bip = Bipartition::new(&e, vec![Side::A, Side::B, Side::B]).unwrap();
        let phi = Orientation::new(&e, vec![0]).unwrap();
        assert_eq!(
            reduce_to_pairgraph(&e, &bip, &phi).unwrap().pairs,
            vec![(0, 1)]
        );

        let (k33, bip) = gen_complete(2, 3, 3).unwrap();
        let (_, phi) = min_orientation(&k33).unwrap();
        let pg = reduce_to_pairgraph(&k33, &bip, &phi).unwrap();
        assert_eq!(pg.as_hypergraph(), k33);

        let (h, bip) = gen_complete(3, 2, 2).unwrap();
        let (_, phi) = min_orientation(&h).unwrap();
        let pg = reduce_to_pairgraph(&h, &bip, &phi).unwrap();
        assert_eq!(pg.pairs.len(), 4);
        assert_eq!(pg.head_degrees(), phi.degrees(h.n()));
        for (i, &(x, y)) in pg.pairs.iter().enumerate() {
            assert_ne!(bip.side(x), bip.side(y));
            assert!(h.edge(pg.origin[i]).contains(&x) && h.edge(pg.origin[i]).contains(&y));
        }
    }

    #[test]
    fn sparse_coloring_k33() {
        let (k33, bip) = gen_complete(2, 3, 3).unwrap();
        let lists = ListAssignment::uniform(6, &[1, 2, 3]).unwrap();
        for solver in [PairSolver::Backtracking, PairSolver::Kernels] {
            let c = list_color_sparse_with(&k33, &bip, &lists, solver).unwrap();
            assert!(is_proper(&k33, &c) && c.respects(&lists));
        }
        let short = ListAssignment::uniform(6, &[1, 2]).unwrap();
        assert!(matches!(
            list_color_sparse(&k33, &bip, &short),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sparse_coloring_with_two_lists_on_an_orientable_hypergraph() {
        // d <= 1 orientation exists, so any 2-lists work; identical lists
        // force a proper 2-coloring
        let (h, bip) = gen_complete(3, 2, 2).unwrap();
        assert_eq!(min_orientation(&h).unwrap().0, 1);
        let lists = ListAssignment::uniform(4, &[1, 2]).unwrap();
        let c = list_color_sparse(&h, &bip, &lists).unwrap();
        assert!(is_proper(&h, &c));
        assert_eq!(c.color_count(), 2);
    }

    #[test]
    fn sparse_coloring_regular_random_lists() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = gen_k_regular_k_uniform(4, 8, 3).unwrap().unwrap();
        let bip = h.find_bipartition().unwrap();
        let palette: Vec<u32> = (1..=6).collect();
        for _ in 0..100 {
            let lists = ListAssignment::new(
                (0..8)
                    .map(|_| palette.choose_multiple(&mut rng, 2).copied().collect())
                    .collect(),
            )
            .unwrap();
            let a = list_color_sparse_with(&h, &bip, &lists, PairSolver::Backtracking).unwrap();
            let b = list_color_sparse_with(&h, &bip, &lists, PairSolver::Kernels).unwrap();
            for c in [a, b] {
                assert!(is_proper(&h, &c) && c.respects(&lists));
            }
        }
    }

    #[test]
    fn kernel_solver_agrees_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let na = rng.gen_range(1..5);
            let nb = rng.gen_range(1..5);
            let s = rng.gen_range(2..=(na + nb).min(4));
            let (full, _) = gen_complete(s, na, nb).unwrap();
            let keep: Vec<usize> = (0..full.edge_count())
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            if keep.is_empty() {
                continue;
            }
            let h = full.with_edges(keep);
            let bip = h.find_bipartition().unwrap();
            let (k, phi) = min_orientation(&h).unwrap();
            assert_eq!(k as u64, density(&h).unwrap().ceil());
            let d = phi.degrees(h.n());
            let lists = ListAssignment::new(
                d.iter()
                    .map(|&dv| {
                        let mut pool: Vec<u32> = (1..=8).collect();
                        pool.shuffle(&mut rng);
                        pool.truncate(dv + 1);
                        pool
                    })
                    .collect(),
            )
            .unwrap();
            let pg = reduce_to_pairgraph(&h, &bip, &phi).unwrap();
            let c = pg.color_by_kernels(&bip, &lists).expect("kernel coloring");
            assert!(is_proper(&pg.as_hypergraph(), &c) && c.respects(&lists));
            assert!(pg.color_by_backtracking(&lists).is_some());
        }
    }
}
