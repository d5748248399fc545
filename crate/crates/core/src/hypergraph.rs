//! Hypergraph representation and the certificate types attached to it.
//!
//! Vertices are `0..n`. Edges are kept as sorted vertex lists in insertion
//! order; equality between hypergraphs ignores edge order.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Summary statistics used by the closed-form bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub max_degree: usize,
    pub min_edge_size: usize,
    pub uniform: Option<usize>,
    pub edge_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    DuplicateEdge { first: usize, second: usize },
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge. Rejects out-of-range vertices,
    /// repeated vertices inside an edge and edges with fewer than two vertices.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            check_edge(n, &e).map_err(|m| Error::Invalid(format!("edge {i}: {m}")))?;
            sorted.push(e);
        }
        Ok(Hypergraph { n, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// Edge indices incident to each vertex, in edge order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Common edge size, if every edge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    pub fn metrics(&self) -> Result<Metrics> {
        if self.edges.is_empty() {
            return Err(Error::Invalid(
                "metrics undefined for a hypergraph without edges".into(),
            ));
        }
        Ok(Metrics {
            max_degree: self.degrees().into_iter().max().unwrap_or(0),
            min_edge_size: self.edges.iter().map(Vec::len).min().unwrap_or(0),
            uniform: self.uniformity(),
            edge_count: self.edges.len(),
        })
    }

    /// Non-fatal findings. Duplicate edges are legal (degrees count them
    /// with multiplicity) but reported here.
    pub fn validate(&self) -> Vec<Warning> {
        let mut seen: HashMap<&[usize], usize> = HashMap::new();
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            match seen.get(e.as_slice()) {
                Some(&first) => out.push(Warning::DuplicateEdge { first, second: i }),
                None => {
                    seen.insert(e, i);
                }
            }
        }
        out
    }

    /// Sub-hypergraph on the same vertex set keeping only the listed edges.
    pub fn with_edges(&self, keep: impl IntoIterator<Item = usize>) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: keep.into_iter().map(|i| self.edges[i].clone()).collect(),
        }
    }

    /// Parses the HGR text format.
    ///
    /// ```text
    /// c comment
    /// p hg <n> <edge_count>
    /// e <v1> <v2> ... <vk>
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let mut tok = raw.split_whitespace();
            let Some(kind) = tok.next() else { continue };
            match kind {
                "c" => {}
                "p" => {
                    if header.is_some() {
                        return Err(err("duplicate header".into()));
                    }
                    if tok.next() != Some("hg") {
                        return Err(err("expected `p hg <n> <edge_count>`".into()));
                    }
                    let n = parse_num(tok.next(), "vertex count").map_err(err)?;
                    let m = parse_num(tok.next(), "edge count").map_err(err)?;
                    if tok.next().is_some() {
                        return Err(err("trailing tokens after header".into()));
                    }
                    header = Some((n, m));
                }
                "e" => {
                    let Some((n, _)) = header else {
                        return Err(err("edge line before header".into()));
                    };
                    let mut e = Vec::new();
                    for t in tok {
                        let v: usize = t
                            .parse()
                            .map_err(|_| err(format!("bad vertex index `{t}`")))?;
                        e.push(v);
                    }
                    e.sort_unstable();
                    check_edge(n, &e).map_err(err)?;
                    edges.push(e);
                }
                other => return Err(err(format!("unknown line type `{other}`"))),
            }
        }
        let Some((n, m)) = header else {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "missing `p hg` header".into(),
            });
        };
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Ok(Hypergraph { n, edges })
    }

    /// Serializes to HGR. Output is byte-stable: sorted vertices, edges in
    /// stored order, LF line endings.
    pub fn to_hgr(&self) -> String {
        let mut s = format!("p hg {} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            s.push('e');
            for v in e {
                s.push(' ');
                s.push_str(&v.to_string());
            }
            s.push('\n');
        }
        s
    }

    /// Finds a proper 2-coloring by backtracking over vertices in index
    /// order, trying side A before side B. The first solution in that order
    /// is returned, so the result is deterministic.
    pub fn find_bipartition(&self) -> Option<Bipartition> {
        // Each edge is checked once its largest vertex receives a side.
        let mut closing: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            closing[*e.last().expect("edges are nonempty")].push(i);
        }
        let mut side = vec![Side::A; self.n];
        if self.bipartition_rec(0, &closing, &mut side) {
            Some(Bipartition { side })
        } else {
            None
        }
    }

    fn bipartition_rec(&self, v: usize, closing: &[Vec<usize>], side: &mut [Side]) -> bool {
        if v == self.n {
            return true;
        }
        for s in [Side::A, Side::B] {
            side[v] = s;
            let ok = closing[v].iter().all(|&i| {
                let e = &self.edges[i];
                e.iter().any(|&u| side[u] != s)
            });
            if ok && self.bipartition_rec(v + 1, closing, side) {
                return true;
            }
        }
        false
    }
}

fn parse_num(tok: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let t = tok.ok_or_else(|| format!("missing {what}"))?;
    t.parse().map_err(|_| format!("bad {what} `{t}`"))
}

/// Expects `e` sorted.
fn check_edge(n: usize, e: &[usize]) -> std::result::Result<(), String> {
    if e.len() < 2 {
        return Err(format!("edge of size {} (minimum is 2)", e.len()));
    }
    if let Some(&v) = e.iter().find(|&&v| v >= n) {
        return Err(format!("vertex {v} out of range for n = {n}"));
    }
    if e.windows(2).any(|w| w[0] == w[1]) {
        return Err("duplicate vertex in edge".into());
    }
    Ok(())
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for Hypergraph {}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hgr())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A proper 2-coloring certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    /// Checks that every edge of `h` meets both sides.
    pub fn new(h: &Hypergraph, side: Vec<Side>) -> Result<Self> {
        let bip = Bipartition { side };
        bip.check(h)?;
        Ok(bip)
    }

    pub fn check(&self, h: &Hypergraph) -> Result<()> {
        if self.side.len() != h.n() {
            return Err(Error::Invalid(format!(
                "bipartition covers {} vertices, hypergraph has {}",
                self.side.len(),
                h.n()
            )));
        }
        for (i, e) in h.edges().iter().enumerate() {
            let has_a = e.iter().any(|&v| self.side[v] == Side::A);
            let has_b = e.iter().any(|&v| self.side[v] == Side::B);
            if !(has_a && has_b) {
                return Err(Error::Invalid(format!("edge {i} lies inside one side")));
            }
        }
        Ok(())
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn part(&self, s: Side) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == s)
            .collect()
    }

    /// The 2-coloring `A -> 1`, `B -> 2`.
    pub fn to_coloring(&self) -> Coloring {
        Coloring(
            self.side
                .iter()
                .map(|s| if *s == Side::A { 1 } else { 2 })
                .collect(),
        )
    }
}

/// An assignment of a head vertex to every edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Orientation {
    head: Vec<usize>,
}

impl Orientation {
    pub fn new(h: &Hypergraph, head: Vec<usize>) -> Result<Self> {
        if head.len() != h.edge_count() {
            return Err(Error::Invalid(format!(
                "orientation has {} heads for {} edges",
                head.len(),
                h.edge_count()
            )));
        }
        for (i, (&v, e)) in head.iter().zip(h.edges()).enumerate() {
            if e.binary_search(&v).is_err() {
                return Err(Error::Invalid(format!(
                    "head {v} of edge {i} is not in the edge"
                )));
            }
        }
        Ok(Orientation { head })
    }

    pub(crate) fn from_heads_unchecked(head: Vec<usize>) -> Self {
        Orientation { head }
    }

    pub fn head(&self, e: usize) -> usize {
        self.head[e]
    }

    pub fn heads(&self) -> &[usize] {
        &self.head
    }

    /// `d(v)`: the number of edges whose head is `v`.
    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for &v in &self.head {
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self, n: usize) -> usize {
        self.degrees(n).into_iter().max().unwrap_or(0)
    }
}

/// Per-vertex color lists. Each list is sorted, duplicate-free and nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ListFile", into = "ListFile")]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct ListFile {
    n: usize,
    lists: Vec<Vec<u32>>,
}

impl TryFrom<ListFile> for ListAssignment {
    type Error = Error;

    fn try_from(f: ListFile) -> Result<Self> {
        if f.n != f.lists.len() {
            return Err(Error::Invalid(format!(
                "\"n\" is {} but {} lists given",
                f.n,
                f.lists.len()
            )));
        }
        ListAssignment::new(f.lists)
    }
}

impl From<ListAssignment> for ListFile {
    fn from(l: ListAssignment) -> Self {
        ListFile {
            n: l.lists.len(),
            lists: l.lists,
        }
    }
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u32>>) -> Result<Self> {
        let mut out = Vec::with_capacity(lists.len());
        for (v, mut l) in lists.into_iter().enumerate() {
            l.sort_unstable();
            if l.is_empty() {
                return Err(Error::Invalid(format!("empty list at vertex {v}")));
            }
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Invalid(format!(
                    "duplicate color in list of vertex {v}"
                )));
            }
            out.push(l);
        }
        Ok(ListAssignment { lists: out })
    }

    /// Every vertex gets the same list.
    pub fn uniform(n: usize, list: &[u32]) -> Result<Self> {
        Self::new(vec![list.to_vec(); n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    /// Sorted union of all lists.
    pub fn palette(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self.lists.iter().flatten().copied().collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("list assignment serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<u32>);

impl Coloring {
    pub fn color(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn respects(&self, lists: &ListAssignment) -> bool {
        self.0.len() == lists.len()
            && self
                .0
                .iter()
                .enumerate()
                .all(|(v, c)| lists.list(v).binary_search(c).is_ok())
    }

    pub fn color_count(&self) -> usize {
        let mut c = self.0.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// True iff no edge is monochromatic under `c`.
pub fn is_proper(h: &Hypergraph, c: &Coloring) -> bool {
    h.edges().iter().all(|e| {
        let first = c.color(e[0]);
        e[1..].iter().any(|&v| c.color(v) != first)
    })
}
