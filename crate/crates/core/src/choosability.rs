//! Exact list coloring, f-choosability and the chromatic and choice numbers.
//!
//! These are the ground-truth oracles for everything else in the crate, so
//! every search is exhaustive and limited by explicit guards instead of
//! being truncated.
//!
//! # Enumerating list systems
//!
//! A list system `L` matters only up to renaming colors. Such a class is
//! determined by the multiset of *color classes* `{v : c in L(v)}`, one per
//! color, and vertex `v` lies in exactly `f(v)` of them. We enumerate these
//! multisets directly: each new class contains the smallest vertex that
//! still needs colors, and classes with the same smallest vertex appear in
//! nondecreasing bitmask order, so every multiset is produced exactly once.
//! The number of colors is at most `sum f(v)`, so a bad system exists iff
//! one exists over the universe `{1, ..., sum f(v)}`: distinct colors of any
//! bad system can be relabeled into it.
//!
//! Singleton classes are skipped whenever the maximum of `f` is attained at
//! least twice. If color `c` appears only in `L(v)`, coloring `v` with `c`
//! settles every edge through `v`, so a bad system stays bad after
//! replacing `c` in `L(v)` by any color `c'` of another list not already in
//! `L(v)`. Such `c'` exists when some other vertex has `f(w) >= f(v)`, and
//! each replacement removes a singleton class without creating one.
//!
//! A reported witness uses as few colors as possible: after the first bad
//! system turns up, the search is repeated with a budget of `max f`,
//! `max f + 1`, ... color classes and the first hit is returned.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Coloring, Hypergraph, ListAssignment};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_vertices: usize,
    /// Upper limit on `sum f(v)`, the size of the adversarial color universe.
    pub max_colors: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_vertices: 12,
            max_colors: 36,
        }
    }
}

/// Vertex limit for [`chromatic_number`].
pub const CHROMATIC_VERTEX_GUARD: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    /// A list system with no proper coloring, when not choosable.
    pub witness: Option<ListAssignment>,
    /// Complete list systems checked.
    pub lists_examined: u64,
}

/// Backtracking list colorer over a fixed vertex order. Each edge is checked
/// when its last vertex in that order gets a color.
struct ListSolver {
    order: Vec<usize>,
    closing: Vec<Vec<usize>>,
}

impl ListSolver {
    fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let deg = h.degrees();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut closing = vec![Vec::new(); n];
        for (i, e) in h.edges().iter().enumerate() {
            let last = e
                .iter()
                .copied()
                .max_by_key(|&v| pos[v])
                .expect("nonempty edge");
            closing[pos[last]].push(i);
        }
        ListSolver { order, closing }
    }

    fn solve<L: AsRef<[u32]>>(&self, h: &Hypergraph, lists: &[L]) -> Option<Vec<u32>> {
        let mut color = vec![u32::MAX; h.n()];
        self.go(0, h, lists, &mut color).then_some(color)
    }

    fn go<L: AsRef<[u32]>>(
        &self,
        i: usize,
        h: &Hypergraph,
        lists: &[L],
        color: &mut [u32],
    ) -> bool {
        let Some(&v) = self.order.get(i) else {
            return true;
        };
        for &c in lists[v].as_ref() {
            color[v] = c;
            let ok = self.closing[i]
                .iter()
                .all(|&e| h.edge(e).iter().any(|&u| color[u] != c));
            if ok && self.go(i + 1, h, lists, color) {
                return true;
            }
        }
        color[v] = u32::MAX;
        false
    }
}

/// A proper coloring with `color(v)` taken from `L(v)`, if any exists.
pub fn color_from_lists(h: &Hypergraph, lists: &ListAssignment) -> Option<Coloring> {
    if lists.len() != h.n() {
        return None;
    }
    ListSolver::new(h).solve(h, lists.lists()).map(Coloring)
}

pub fn is_k_choosable(h: &Hypergraph, k: usize) -> Result<ChoosabilityVerdict> {
    is_f_choosable(h, &vec![k; h.n()])
}

pub fn is_f_choosable(h: &Hypergraph, f: &[usize]) -> Result<ChoosabilityVerdict> {
    is_f_choosable_with(h, f, Guard::default())
}

/// Decides whether every list system with `|L(v)| = f(v)` admits a proper
/// coloring, returning a bad system with the fewest colors otherwise.
pub fn is_f_choosable_with(
    h: &Hypergraph,
    f: &[usize],
    guard: Guard,
) -> Result<ChoosabilityVerdict> {
    let n = h.n();
    if f.len() != n {
        return Err(Error::Invalid(format!(
            "f has {} entries for {n} vertices",
            f.len()
        )));
    }
    if f.contains(&0) {
        return Err(Error::Invalid("f(v) must be at least 1".into()));
    }
    let universe: usize = f.iter().sum();
    if n > guard.max_vertices.min(32) {
        return Err(Error::GuardExceeded(format!(
            "{n} vertices exceed the choosability limit of {}",
            guard.max_vertices.min(32)
        )));
    }
    if universe > guard.max_colors {
        return Err(Error::GuardExceeded(format!(
            "color universe {universe} exceeds the limit of {}",
            guard.max_colors
        )));
    }
    if h.edge_count() == 0 {
        return Ok(ChoosabilityVerdict {
            choosable: true,
            witness: None,
            lists_examined: 0,
        });
    }
    let max_f = *f.iter().max().expect("n >= 2 when edges exist");
    let allow_singletons = f.iter().filter(|&&x| x == max_f).count() < 2;
    let search = |max_classes: usize| {
        let mut s = SystemSearch {
            h,
            solver: ListSolver::new(h),
            remaining: f.to_vec(),
            classes: Vec::with_capacity(universe),
            max_classes,
            allow_singletons,
            examined: 0,
            lists: vec![Vec::new(); n],
        };
        let found = s.run(usize::MAX, 0).then(|| s.witness());
        (found, s.examined)
    };
    let (mut witness, mut examined) = search(universe);
    if let Some(first) = &witness {
        for budget in max_f..first.palette().len() {
            let (found, more) = search(budget);
            examined += more;
            if found.is_some() {
                witness = found;
                break;
            }
        }
    }
    Ok(ChoosabilityVerdict {
        choosable: witness.is_none(),
        witness,
        lists_examined: examined,
    })
}

struct SystemSearch<'a> {
    h: &'a Hypergraph,
    solver: ListSolver,
    remaining: Vec<usize>,
    /// Bitmask of vertices holding each color so far.
    classes: Vec<u32>,
    max_classes: usize,
    allow_singletons: bool,
    examined: u64,
    lists: Vec<Vec<u32>>,
}

impl SystemSearch<'_> {
    /// Returns true once a bad system is found; `classes` then holds it.
    fn run(&mut self, prev_min: usize, prev_mask: u32) -> bool {
        let n = self.h.n();
        let Some(u) = (0..n).find(|&v| self.remaining[v] > 0) else {
            self.examined += 1;
            for l in &mut self.lists {
                l.clear();
            }
            for (c, &mask) in self.classes.iter().enumerate() {
                for (v, l) in self.lists.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        l.push(c as u32);
                    }
                }
            }
            return self.solver.solve(self.h, &self.lists).is_none();
        };
        let still_needed = self.remaining.iter().copied().max().unwrap_or(0);
        if self.classes.len() + still_needed > self.max_classes {
            return false;
        }
        let cand: u32 = (u + 1..n)
            .filter(|&w| self.remaining[w] > 0)
            .fold(0, |m, w| m | 1 << w);
        let mut sub: u32 = 0;
        loop {
            let mask = 1 << u | sub;
            let big_enough = self.allow_singletons || sub != 0;
            let ordered = prev_min != u || mask >= prev_mask;
            if big_enough && ordered {
                self.take(mask);
                let found = self.run(u, mask);
                if found {
                    return true;
                }
                self.give_back(mask);
            }
            if sub == cand {
                break;
            }
            // next submask of `cand` in increasing order
            sub = sub.wrapping_sub(cand) & cand;
        }
        false
    }

    fn take(&mut self, mask: u32) {
        for v in bits(mask) {
            self.remaining[v] -= 1;
        }
        self.classes.push(mask);
    }

    fn give_back(&mut self, mask: u32) {
        for v in bits(mask) {
            self.remaining[v] += 1;
        }
        self.classes.pop();
    }

    /// The found system with colors numbered `1..` in class order.
    fn witness(&self) -> ListAssignment {
        let mut lists = vec![Vec::new(); self.h.n()];
        for (c, &mask) in self.classes.iter().enumerate() {
            for v in bits(mask) {
                lists[v].push(c as u32 + 1);
            }
        }
        ListAssignment::new(lists).expect("every vertex received f(v) >= 1 colors")
    }
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| mask >> v & 1 == 1)
}

/// Exact `chi(H)` by trying `r = 1, 2, ...` with backtracking in vertex
/// order; a vertex may only open the next unused color.
pub fn chromatic_number(h: &Hypergraph) -> Result<usize> {
    let n = h.n();
    if n > CHROMATIC_VERTEX_GUARD {
        return Err(Error::GuardExceeded(format!(
            "{n} vertices exceed the chromatic number limit of {CHROMATIC_VERTEX_GUARD}"
        )));
    }
    if h.edge_count() == 0 {
        return Ok(1);
    }
    let mut closing = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        closing[*e.last().expect("nonempty edge")].push(i);
    }
    let mut color = vec![0u32; n];
    for r in 2..=n as u32 {
        if colorable_with(h, &closing, 0, 0, r, &mut color) {
            return Ok(r as usize);
        }
    }
    unreachable!("n distinct colors are always proper")
}

fn colorable_with(
    h: &Hypergraph,
    closing: &[Vec<usize>],
    v: usize,
    used: u32,
    r: u32,
    color: &mut [u32],
) -> bool {
    if v == h.n() {
        return true;
    }
    for c in 0..r.min(used + 1) {
        color[v] = c;
        let ok = closing[v]
            .iter()
            .all(|&e| h.edge(e).iter().any(|&u| color[u] != c));
        if ok && colorable_with(h, closing, v + 1, used.max(c + 1), r, color) {
            return true;
        }
    }
    false
}

/// Exact `ch(H)`: the least `k >= chi(H)` such that `H` is k-choosable.
pub fn choice_number(h: &Hypergraph) -> Result<usize> {
    choice_number_with(h, Guard::default())
}

pub fn choice_number_with(h: &Hypergraph, guard: Guard) -> Result<usize> {
    if h.edge_count() == 0 {
        return Ok(1);
    }
    let mut k = chromatic_number(h)?;
    loop {
        if is_f_choosable_with(h, &vec![k; h.n()], guard)?.choosable {
            return Ok(k);
        }
        k += 1;
    }
}
