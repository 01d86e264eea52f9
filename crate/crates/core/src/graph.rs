// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Graphs, partitioned `B + E_l` graphs and colorings.
//!
//! Vertices are dense indices `0..n`. Colors are `1..=k` in every public
//! signature and rendering; a [`Coloring`] stores them shifted to `0..k`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Default vertex limit for exact chromatic-number computations.
pub const DEFAULT_CHROMATIC_CAP: usize = 30;

/// An undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    num_edges: usize,
}

fn normalize_edge((u, v): (Vertex, Vertex)) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            num_edges: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge [{u}, {v}] has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::input(format!(
                    "duplicate edge [{}, {}]",
                    u.min(w[0]),
                    u.max(w[0])
                )));
            }
        }
        Ok(Graph {
            adj,
            num_edges: edges.len(),
        })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path edges are simple")
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle edges are simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("complete graph edges are simple")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges).expect("complete bipartite edges are simple")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let (u, v) = normalize_edge((u, v));
        let edges: Vec<_> = self.edges().into_iter().filter(|&e| e != (u, v)).collect();
        Graph::from_edges(self.n(), &edges).expect("subgraph of a simple graph")
    }

    /// Deletes `v` and shifts the higher indices down by one.
    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).0
    }

    /// Subgraph induced by `vertices` (in the given order), plus the map
    /// from new indices back to the original ones.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in vertices.iter().enumerate() {
            index[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in vertices.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                let new_v = index[old_v];
                if new_v != usize::MAX && new_u < new_v {
                    edges.push((new_u, new_v));
                }
            }
        }
        let g = Graph::from_edges(vertices.len(), &edges).expect("induced subgraph is simple");
        (g, vertices.to_vec())
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for root in 0..self.n() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// A proper or improper assignment of colors `1..=k` to the vertices.
///
/// Orders lexicographically by color vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    raw: Vec<u8>,
    k: u8,
}

impl Coloring {
    /// Builds a coloring from 1-based colors.
    pub fn new(k: usize, colors: &[u8]) -> Result<Self> {
        if k == 0 || k > u8::MAX as usize {
            return Err(Error::input(format!("palette size {k} outside 1..=255")));
        }
        let mut raw = Vec::with_capacity(colors.len());
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c as usize > k {
                return Err(Error::input(format!(
                    "vertex {v} has color {c}, outside 1..={k}"
                )));
            }
            raw.push(c - 1);
        }
        Ok(Coloring { raw, k: k as u8 })
    }

    pub(crate) fn from_raw(k: u8, raw: Vec<u8>) -> Self {
        debug_assert!(raw.iter().all(|&c| c < k));
        Coloring { raw, k }
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    /// 1-based color of `v`.
    pub fn get(&self, v: Vertex) -> u8 {
        self.raw[v] + 1
    }

    /// 1-based color vector.
    pub fn colors(&self) -> Vec<u8> {
        self.raw.iter().map(|&c| c + 1).collect()
    }

    /// 0-based color vector.
    pub fn raw(&self) -> &[u8] {
        &self.raw
    }

    pub(crate) fn raw_mut(&mut self) -> &mut Vec<u8> {
        &mut self.raw
    }

    /// Applies the color permutation `perm`, where `perm[i - 1]` is the
    /// image of color `i`.
    pub fn permuted(&self, perm: &[u8]) -> Result<Coloring> {
        let k = self.k();
        let mut seen = vec![false; k];
        if perm.len() != k {
            return Err(Error::input(format!(
                "permutation has length {}, expected {k}",
                perm.len()
            )));
        }
        for &p in perm {
            if p == 0 || p as usize > k || std::mem::replace(&mut seen[p as usize - 1], true) {
                return Err(Error::input(format!(
                    "{perm:?} is not a permutation of 1..={k}"
                )));
            }
        }
        let raw = self.raw.iter().map(|&c| perm[c as usize] - 1).collect();
        Ok(Coloring { raw, k: self.k })
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.raw.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", c + 1)?;
        }
        Ok(())
    }
}

fn check_size(g: &Graph, c: &Coloring) -> Result<()> {
    if g.n() != c.len() {
        return Err(Error::input(format!(
            "coloring has {} entries but the graph has {} vertices",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_size(g, c)?;
    Ok(g.adj
        .iter()
        .enumerate()
        .all(|(u, list)| list.iter().all(|&v| c.raw[u] != c.raw[v])))
}

/// Checks that `c` is a proper coloring of `g`, naming a bad edge if not.
pub fn ensure_proper(g: &Graph, c: &Coloring) -> Result<()> {
    check_size(g, c)?;
    for (u, v) in g.edges() {
        if c.raw[u] == c.raw[v] {
            return Err(Error::input(format!(
                "edge [{u}, {v}] is monochromatic (color {})",
                c.get(u)
            )));
        }
    }
    Ok(())
}

/// The set `C(R)` of 1-based colors appearing on `r`.
pub fn colors_used(c: &Coloring, r: &[Vertex]) -> Result<BTreeSet<u8>> {
    r.iter()
        .map(|&v| {
            if v < c.len() {
                Ok(c.get(v))
            } else {
                Err(Error::input(format!("vertex {v} outside 0..{}", c.len())))
            }
        })
        .collect()
}

/// A proper 2-coloring split into sides, or `None` if `g` has an odd cycle.
///
/// In every connected component the smallest vertex lands on the first side.
pub fn bipartition(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let mut side = vec![u8::MAX; g.n()];
    for root in 0..g.n() {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    let a = (0..g.n()).filter(|&v| side[v] == 0).collect();
    let b = (0..g.n()).filter(|&v| side[v] == 1).collect();
    Some((a, b))
}

/// Min-degree peeling order (ties to the lowest index) and the largest
/// degree seen at removal time.
pub fn degeneracy_ordering(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        d = d.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    (order, d)
}

pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).1
}

/// Exact k-colorability search. Returns a proper k-coloring if one exists.
///
/// Vertices are visited in an order that keeps each new vertex adjacent to
/// as many placed vertices as possible; a fresh color is only ever the
/// smallest unused one, which removes palette symmetry.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::from_raw(k.clamp(1, 255) as u8, Vec::new()));
    }
    if k == 0 || k > u8::MAX as usize {
        return None;
    }
    let order = search_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier: Vec<Vec<Vertex>> = order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] < pos[v])
                .collect()
        })
        .collect();

    let mut color = vec![u8::MAX; n];
    // max_used[i] = number of distinct colors used by order[..i]
    let mut max_used = vec![0u8; n + 1];
    let mut next = vec![0u8; n];
    let mut i = 0usize;
    loop {
        let v = order[i];
        let limit = (max_used[i] as usize + 1).min(k) as u8;
        let mut placed = false;
        while next[i] < limit {
            let c = next[i];
            next[i] += 1;
            if earlier[i].iter().all(|&w| color[w] != c) {
                color[v] = c;
                max_used[i + 1] = max_used[i].max(c + 1);
                placed = true;
                break;
            }
        }
        if placed {
            i += 1;
            if i == n {
                return Some(Coloring::from_raw(k as u8, color));
            }
            next[i] = 0;
        } else {
            color[v] = u8::MAX;
            if i == 0 {
                return None;
            }
            i -= 1;
        }
    }
}

fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("a vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

/// Exact chromatic number for graphs of at most `cap` vertices.
pub fn chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "chromatic number vertex count",
            limit: cap,
            reached: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let upper = degeneracy(g) + 1;
    let lower = if g.num_edges() == 0 { 1 } else { 2 };
    for k in lower..upper {
        if find_coloring(g, k).is_some() {
            return Ok(k);
        }
    }
    Ok(upper)
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_cap(g, DEFAULT_CHROMATIC_CAP)
}

/// True iff `chi(g) = k` and deleting any edge or any vertex drops the
/// chromatic number to at most `k - 1`.
pub fn is_k_critical_with_cap(g: &Graph, k: usize, cap: usize) -> Result<bool> {
    if chromatic_number_with_cap(g, cap)? != k {
        return Ok(false);
    }
    if k == 0 {
        return Ok(false);
    }
    for (u, v) in g.edges() {
        if find_coloring(&g.without_edge(u, v), k - 1).is_none() {
            return Ok(false);
        }
    }
    for v in 0..g.n() {
        if find_coloring(&g.without_vertex(v), k - 1).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_k_critical(g: &Graph, k: usize) -> Result<bool> {
    is_k_critical_with_cap(g, k, DEFAULT_CHROMATIC_CAP)
}

/// A `B + E_l` graph: a bipartite base on sides `S`, `T` plus `l` edges added
/// inside the sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    graph: Graph,
    side_s: Vec<Vertex>,
    side_t: Vec<Vertex>,
    in_s: Vec<bool>,
    base_edges: Vec<(Vertex, Vertex)>,
    added_edges: Vec<(Vertex, Vertex)>,
}

impl PartitionedGraph {
    /// Validates the partition and edge classes and builds the combined graph.
    pub fn new(
        n: usize,
        side_s: &[Vertex],
        side_t: &[Vertex],
        base_edges: &[(Vertex, Vertex)],
        added_edges: &[(Vertex, Vertex)],
    ) -> Result<Self> {
        let mut membership = vec![None; n];
        for (label, side) in [("S", side_s), ("T", side_t)] {
            for &v in side {
                if v >= n {
                    return Err(Error::input(format!(
                        "side {label} lists vertex {v} outside 0..{n}"
                    )));
                }
                if membership[v].replace(label).is_some() {
                    return Err(Error::input(format!(
                        "vertex {v} appears twice in the partition"
                    )));
                }
            }
        }
        if let Some(v) = membership.iter().position(Option::is_none) {
            return Err(Error::input(format!("vertex {v} is in neither S nor T")));
        }
        let in_s: Vec<bool> = membership.iter().map(|m| *m == Some("S")).collect();

        let base: Vec<_> = base_edges.iter().map(|&e| normalize_edge(e)).collect();
        let added: Vec<_> = added_edges.iter().map(|&e| normalize_edge(e)).collect();
        for &(u, v) in base.iter().chain(&added) {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge [{u}, {v}] has an endpoint outside 0..{n}"
                )));
            }
        }
        for &(u, v) in &base {
            if in_s[u] == in_s[v] {
                return Err(Error::input(format!(
                    "base edge [{u}, {v}] does not join S to T"
                )));
            }
        }
        for &(u, v) in &added {
            if in_s[u] != in_s[v] {
                return Err(Error::input(format!(
                    "added edge [{u}, {v}] crosses between S and T"
                )));
            }
        }
        let all: Vec<_> = base.iter().chain(&added).copied().collect();
        let graph = Graph::from_edges(n, &all)?;

        let mut side_s = side_s.to_vec();
        let mut side_t = side_t.to_vec();
        side_s.sort_unstable();
        side_t.sort_unstable();
        let mut base = base;
        let mut added = added;
        base.sort_unstable();
        added.sort_unstable();
        Ok(PartitionedGraph {
            graph,
            side_s,
            side_t,
            in_s,
            base_edges: base,
            added_edges: added,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn side_s(&self) -> &[Vertex] {
        &self.side_s
    }

    pub fn side_t(&self) -> &[Vertex] {
        &self.side_t
    }

    pub fn in_s(&self, v: Vertex) -> bool {
        self.in_s[v]
    }

    pub fn base_edges(&self) -> &[(Vertex, Vertex)] {
        &self.base_edges
    }

    pub fn added_edges(&self) -> &[(Vertex, Vertex)] {
        &self.added_edges
    }

    /// Number of added edges.
    pub fn ell(&self) -> usize {
        self.added_edges.len()
    }

    pub fn added_in_s(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.added_edges
            .iter()
            .copied()
            .filter(|&(u, _)| self.in_s[u])
    }

    pub fn added_in_t(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.added_edges
            .iter()
            .copied()
            .filter(|&(u, _)| !self.in_s[u])
    }

    /// True iff the added edges form a matching (a `B + M_l` graph).
    pub fn is_matching(&self) -> bool {
        let mut used = vec![false; self.n()];
        self.added_edges.iter().all(|&(u, v)| {
            !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true)
        })
    }

    pub fn base_graph(&self) -> Graph {
        Graph::from_edges(self.n(), &self.base_edges).expect("validated on construction")
    }

    /// The spanning graph `(V, added_edges)`.
    pub fn added_graph(&self) -> Graph {
        Graph::from_edges(self.n(), &self.added_edges).expect("validated on construction")
    }

    /// The spanning graph `G[S] ∪ G[T]`, which equals [`Self::added_graph`].
    pub fn side_graph(&self) -> Graph {
        self.added_graph()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(k: usize, c: &[u8]) -> Coloring {
        Coloring::new(k, c).unwrap()
    }

    #[test]
    fn properness_examples() {
        let edge = Graph::path(2);
        assert!(is_proper(&edge, &col(2, &[1, 2])).unwrap());
        assert!(!is_proper(&edge, &col(2, &[1, 1])).unwrap());
        assert!(is_proper(&Graph::complete(3), &col(3, &[1, 2, 3])).unwrap());
        assert!(matches!(
            is_proper(&edge, &col(2, &[1, 2, 1])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn coloring_rejects_out_of_palette() {
        assert!(Coloring::new(3, &[1, 4]).is_err());
        assert!(Coloring::new(3, &[0]).is_err());
        assert!(Coloring::new(0, &[]).is_err());
    }

    #[test]
    fn colors_used_examples() {
        let c = col(2, &[1, 2, 1]);
        assert_eq!(colors_used(&c, &[0, 2]).unwrap(), BTreeSet::from([1]));
        assert_eq!(colors_used(&c, &[0, 1, 2]).unwrap(), BTreeSet::from([1, 2]));
        assert!(colors_used(&c, &[]).unwrap().is_empty());
        assert!(colors_used(&c, &[3]).is_err());
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            bipartition(&Graph::cycle(4)),
            Some((vec![0, 2], vec![1, 3]))
        );
        assert_eq!(bipartition(&Graph::cycle(5)), None);
        assert_eq!(bipartition(&Graph::empty(3)), Some((vec![0, 1, 2], vec![])));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&Graph::cycle(5)), 2);
        assert_eq!(degeneracy(&Graph::complete(4)), 3);
        assert_eq!(degeneracy(&Graph::star(3)), 1);
        assert_eq!(degeneracy(&Graph::empty(4)), 0);
        assert_eq!(degeneracy(&Graph::petersen()), 3);
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap(), 2);
    }

    /// Petersen chromatic number checked against a brute force over all
    /// assignments of up to three colors.
    #[test]
    fn petersen_chromatic_number_matches_brute_force() {
        let g = Graph::petersen();
        let brute = |k: u32| {
            (0..k.pow(10)).any(|mut code| {
                let mut c = [0u32; 10];
                for slot in c.iter_mut() {
                    *slot = code % k;
                    code /= k;
                }
                g.edges().iter().all(|&(u, v)| c[u] != c[v])
            })
        };
        assert!(!brute(2));
        assert!(brute(3));
        assert_eq!(chromatic_number(&g).unwrap(), 3);
    }

    #[test]
    fn chromatic_cap_is_enforced() {
        let g = Graph::path(31);
        assert!(chromatic_number(&g).unwrap_err().is_capacity());
        assert_eq!(chromatic_number_with_cap(&g, 40).unwrap(), 2);
    }

    #[test]
    fn criticality_examples() {
        assert!(is_k_critical(&Graph::cycle(5), 3).unwrap());
        assert!(!is_k_critical(&Graph::cycle(6), 3).unwrap());
        assert!(is_k_critical(&Graph::complete(4), 4).unwrap());
        assert!(is_k_critical(&Graph::complete(2), 2).unwrap());
        assert!(is_k_critical(&Graph::empty(1), 1).unwrap());
        // C_5 plus an isolated vertex is 3-chromatic but not critical.
        let padded = Graph::from_edges(6, &Graph::cycle(5).edges()).unwrap();
        assert!(!is_k_critical(&padded, 3).unwrap());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn partitioned_graph_validation() {
        let pg = PartitionedGraph::new(3, &[0, 1], &[2], &[(0, 2), (1, 2)], &[(0, 1)]).unwrap();
        assert_eq!(pg.ell(), 1);
        assert!(pg.is_matching());
        assert_eq!(bipartition(&pg.base_graph()), Some((vec![0, 1], vec![2])));
        assert!(PartitionedGraph::new(3, &[0, 1], &[2], &[(0, 1)], &[]).is_err());
        assert!(PartitionedGraph::new(3, &[0, 1], &[2], &[], &[(1, 2)]).is_err());
        assert!(PartitionedGraph::new(3, &[0], &[2], &[], &[]).is_err());
        assert!(PartitionedGraph::new(3, &[0, 1], &[1, 2], &[], &[]).is_err());
        assert!(PartitionedGraph::new(3, &[0, 1], &[2], &[(0, 2)], &[(0, 1), (1, 0)]).is_err());
        let path = PartitionedGraph::new(3, &[0, 1, 2], &[], &[], &[(0, 1), (1, 2)]).unwrap();
        assert!(!path.is_matching());
    }

    #[test]
    fn permuted_relabels_colors() {
        let c = col(3, &[1, 2, 3, 1]);
        assert_eq!(c.permuted(&[2, 3, 1]).unwrap().colors(), vec![2, 3, 1, 2]);
        assert!(c.permuted(&[1, 1, 2]).is_err());
        assert_eq!(c.to_string(), "1 2 3 1");
    }
}
