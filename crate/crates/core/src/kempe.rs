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

//! Bicolored subgraphs, Kempe components and Kempe changes.
//!
//! A Kempe component is a connected component of `G(i, j)`, the subgraph
//! induced by the vertices colored `i` or `j`. Swapping `i` and `j` on one
//! component (a Kempe change) always yields another proper coloring.
//!
//! The second half of the module holds the normalization procedures for
//! `B + E_l` graphs: clearing a color from each side of the base bipartition
//! and seeding a color into every component of `G[S]` and `G[T]`.

use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ensure_proper, Coloring, Graph, PartitionedGraph, Vertex};

/// A single Kempe change: swap the colors of `pair` on `vertices`.
///
/// Carries no snapshot, so it can be replayed against any coloring with
/// [`apply_change_checked`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KempeChange {
    /// 1-based colors, smaller first.
    pub pair: (u8, u8),
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
}

/// A maximal connected vertex set of `G(i, j)` under a specific coloring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KempeComponent {
    pair: (u8, u8),
    vertices: Vec<Vertex>,
    snapshot: u64,
}

impl KempeComponent {
    /// 1-based color pair `(i, j)` with `i < j`.
    pub fn pair(&self) -> (u8, u8) {
        self.pair
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Fingerprint of the coloring the component was computed from.
    pub fn snapshot(&self) -> u64 {
        self.snapshot
    }

    pub fn change(&self) -> KempeChange {
        KempeChange {
            pair: self.pair,
            vertices: self.vertices.clone(),
        }
    }
}

pub(crate) fn snapshot_of(c: &Coloring) -> u64 {
    let mut h = DefaultHasher::new();
    c.hash(&mut h);
    h.finish()
}

/// Validates a 1-based pair and returns it 0-based with the smaller first.
fn raw_pair(c: &Coloring, i: u8, j: u8) -> Result<(u8, u8)> {
    let k = c.k();
    if i == j {
        return Err(Error::input(format!(
            "color pair ({i}, {j}) must be two distinct colors"
        )));
    }
    for x in [i, j] {
        if x == 0 || x as usize > k {
            return Err(Error::input(format!("color {x} outside 1..={k}")));
        }
    }
    Ok((i.min(j) - 1, i.max(j) - 1))
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

/// Reusable buffers for component searches in hot loops.
#[derive(Default)]
pub(crate) struct Scratch {
    seen: Vec<u32>,
    epoch: u32,
    queue: Vec<Vertex>,
}

impl Scratch {
    pub(crate) fn new(n: usize) -> Self {
        Scratch {
            seen: vec![0; n],
            epoch: 0,
            queue: Vec::with_capacity(n),
        }
    }

    fn bump(&mut self, n: usize) {
        if self.seen.len() < n {
            self.seen.resize(n, 0);
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }
}

/// Calls `f` on every component of `G(a, b)` (0-based colors), in order of
/// smallest vertex. The slice handed to `f` is in discovery order.
pub(crate) fn for_each_component(
    g: &Graph,
    raw: &[u8],
    a: u8,
    b: u8,
    scratch: &mut Scratch,
    mut f: impl FnMut(&[Vertex]),
) {
    scratch.bump(g.n());
    let epoch = scratch.epoch;
    for root in 0..g.n() {
        let rc = raw[root];
        if (rc != a && rc != b) || scratch.seen[root] == epoch {
            continue;
        }
        scratch.queue.clear();
        scratch.queue.push(root);
        scratch.seen[root] = epoch;
        let mut head = 0;
        while head < scratch.queue.len() {
            let u = scratch.queue[head];
            head += 1;
            let want = if raw[u] == a { b } else { a };
            for &w in g.neighbors(u) {
                if raw[w] == want && scratch.seen[w] != epoch {
                    scratch.seen[w] = epoch;
                    scratch.queue.push(w);
                }
            }
        }
        f(&scratch.queue);
    }
}

/// The subgraph induced by the vertices colored `i` or `j`, with the map
/// from its indices back to `g`.
pub fn bicolored_subgraph(g: &Graph, c: &Coloring, i: u8, j: u8) -> Result<(Graph, Vec<Vertex>)> {
    check_size(g, c)?;
    let (a, b) = raw_pair(c, i, j)?;
    let keep: Vec<Vertex> = (0..g.n())
        .filter(|&v| c.raw()[v] == a || c.raw()[v] == b)
        .collect();
    Ok(g.induced_subgraph(&keep))
}

/// All `(i, j)`-components, ordered by smallest vertex.
pub fn kempe_components(g: &Graph, c: &Coloring, i: u8, j: u8) -> Result<Vec<KempeComponent>> {
    check_size(g, c)?;
    let (a, b) = raw_pair(c, i, j)?;
    let snapshot = snapshot_of(c);
    let mut out = Vec::new();
    let mut scratch = Scratch::new(g.n());
    for_each_component(g, c.raw(), a, b, &mut scratch, |comp| {
        let mut vertices = comp.to_vec();
        vertices.sort_unstable();
        out.push(KempeComponent {
            pair: (a + 1, b + 1),
            vertices,
            snapshot,
        });
    });
    Ok(out)
}

/// The `(i, j)`-component containing `v`; `v` must be colored `i` or `j`.
pub fn component_containing(
    g: &Graph,
    c: &Coloring,
    i: u8,
    j: u8,
    v: Vertex,
) -> Result<KempeComponent> {
    check_size(g, c)?;
    let (a, b) = raw_pair(c, i, j)?;
    if v >= g.n() {
        return Err(Error::input(format!("vertex {v} outside 0..{}", g.n())));
    }
    let raw = c.raw();
    if raw[v] != a && raw[v] != b {
        return Err(Error::input(format!(
            "vertex {v} has color {}, not in the pair ({}, {})",
            raw[v] + 1,
            a + 1,
            b + 1
        )));
    }
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    let mut vertices = vec![v];
    while let Some(u) = queue.pop_front() {
        let want = if raw[u] == a { b } else { a };
        for &w in g.neighbors(u) {
            if raw[w] == want && !seen[w] {
                seen[w] = true;
                vertices.push(w);
                queue.push_back(w);
            }
        }
    }
    vertices.sort_unstable();
    Ok(KempeComponent {
        pair: (a + 1, b + 1),
        vertices,
        snapshot: snapshot_of(c),
    })
}

fn swap_on(c: &Coloring, (i, j): (u8, u8), vertices: &[Vertex]) -> Coloring {
    let (a, b) = (i - 1, j - 1);
    let mut out = c.clone();
    let raw = out.raw_mut();
    for &v in vertices {
        raw[v] = if raw[v] == a { b } else { a };
    }
    out
}

/// Swaps the component's two colors on its vertices.
///
/// Rejects components computed from a different coloring.
pub fn apply_kempe_change(c: &Coloring, comp: &KempeComponent) -> Result<Coloring> {
    if comp.snapshot != snapshot_of(c) {
        return Err(Error::input(
            "stale Kempe component: it was computed from a different coloring",
        ));
    }
    Ok(swap_on(c, comp.pair, &comp.vertices))
}

/// Applies `change` after confirming it names a genuine Kempe component of
/// `c` on `g`.
pub fn apply_change_checked(g: &Graph, c: &Coloring, change: &KempeChange) -> Result<Coloring> {
    let first = *change
        .vertices
        .first()
        .ok_or_else(|| Error::input("Kempe change with no vertices"))?;
    let comp = component_containing(g, c, change.pair.0, change.pair.1, first)?;
    let mut listed = change.vertices.clone();
    listed.sort_unstable();
    if comp.vertices != listed || comp.pair != change.pair {
        return Err(Error::input(format!(
            "{:?} on {:?} is not a Kempe component of the current coloring",
            change.pair, change.vertices
        )));
    }
    Ok(swap_on(c, comp.pair, &comp.vertices))
}

/// Replays a sequence of Kempe changes from `start`, validating each step.
pub fn replay(g: &Graph, start: &Coloring, changes: &[KempeChange]) -> Result<Coloring> {
    changes.iter().try_fold(start.clone(), |c, change| {
        apply_change_checked(g, &c, change)
    })
}

/// Every coloring exactly one Kempe change away from `c`, sorted and
/// deduplicated by full coloring equality.
pub fn kempe_neighbors(g: &Graph, c: &Coloring) -> Result<Vec<Coloring>> {
    check_size(g, c)?;
    let k = c.k() as u8;
    let mut out = Vec::new();
    let mut scratch = Scratch::new(g.n());
    for a in 0..k {
        for b in a + 1..k {
            for_each_component(g, c.raw(), a, b, &mut scratch, |comp| {
                let mut next = c.clone();
                let raw = next.raw_mut();
                for &v in comp {
                    raw[v] = if raw[v] == a { b } else { a };
                }
                out.push(next);
            });
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A coloring reached by a recorded sequence of Kempe changes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub coloring: Coloring,
    pub changes: Vec<KempeChange>,
}

/// Makes `i` absent from `S` and `j` absent from `T` by `(i, j)`-changes.
///
/// Requires that no added edge is an `(i, j)`-edge. Then every
/// `(i, j)`-component uses only base edges, so its `S` vertices share one
/// color and its `T` vertices the other; flipping each component whose `S`
/// side is `i` (or that is a lone `T` vertex colored `j`) finishes the job.
pub fn clear_color_from_sides(
    pg: &PartitionedGraph,
    c: &Coloring,
    i: u8,
    j: u8,
) -> Result<Normalized> {
    let g = pg.graph();
    ensure_proper(g, c)?;
    let (a, b) = raw_pair(c, i, j)?;
    let (ri, rj) = (i - 1, j - 1);
    let raw = c.raw();
    for &(u, v) in pg.added_edges() {
        let (cu, cv) = (raw[u], raw[v]);
        if (cu == a && cv == b) || (cu == b && cv == a) {
            return Err(Error::input(format!(
                "added edge [{u}, {v}] is an ({i}, {j})-edge"
            )));
        }
    }

    let mut changes = Vec::new();
    let mut scratch = Scratch::new(g.n());
    let mut failure = None;
    for_each_component(g, raw, a, b, &mut scratch, |comp| {
        let mut s_color = None;
        let mut t_color = None;
        for &v in comp {
            let slot = if pg.in_s(v) {
                &mut s_color
            } else {
                &mut t_color
            };
            match *slot {
                None => *slot = Some(raw[v]),
                Some(x) if x != raw[v] => failure = Some(comp.to_vec()),
                Some(_) => {}
            }
        }
        if s_color.is_some() && s_color == t_color {
            failure = Some(comp.to_vec());
        }
        if s_color == Some(ri) || t_color == Some(rj) {
            let mut vertices = comp.to_vec();
            vertices.sort_unstable();
            changes.push(KempeChange {
                pair: (a + 1, b + 1),
                vertices,
            });
        }
    });
    if let Some(comp) = failure {
        return Err(Error::internal(format!(
            "({i}, {j})-component {comp:?} mixes colors within one side"
        )));
    }
    let mut coloring = c.clone();
    for change in &changes {
        coloring = swap_on(&coloring, change.pair, &change.vertices);
    }
    let out = coloring.raw();
    if pg.side_s().iter().any(|&v| out[v] == ri) || pg.side_t().iter().any(|&v| out[v] == rj) {
        return Err(Error::internal(
            "side clearing left a forbidden color behind",
        ));
    }
    Ok(Normalized { coloring, changes })
}

/// Given `i` absent from `S` and `j` absent from `T`, recolors one vertex
/// of every component of `G[S]` lacking `j` to `j` (and of every component
/// of `G[T]` lacking `i` to `i`). Each recoloring is a Kempe change on a
/// vertex that is isolated in the relevant bicolored subgraph.
pub fn seed_color_in_components(
    pg: &PartitionedGraph,
    c: &Coloring,
    i: u8,
    j: u8,
) -> Result<Normalized> {
    let g = pg.graph();
    ensure_proper(g, c)?;
    raw_pair(c, i, j)?;
    let k = c.k();
    if pg.ell() >= k * (k - 1) / 2 {
        return Err(Error::input(format!(
            "{} added edges; seeding needs fewer than {}",
            pg.ell(),
            k * (k - 1) / 2
        )));
    }
    let (ri, rj) = (i - 1, j - 1);
    if let Some(&v) = pg.side_s().iter().find(|&&v| c.raw()[v] == ri) {
        return Err(Error::input(format!("S vertex {v} has color {i}")));
    }
    if let Some(&v) = pg.side_t().iter().find(|&&v| c.raw()[v] == rj) {
        return Err(Error::input(format!("T vertex {v} has color {j}")));
    }

    let sides = pg.side_graph();
    let mut coloring = c.clone();
    let mut changes = Vec::new();
    for comp in sides.components() {
        let target = if pg.in_s(comp[0]) { rj } else { ri };
        if comp.iter().any(|&v| coloring.raw()[v] == target) {
            continue;
        }
        let w = comp[0];
        let r = coloring.raw()[w];
        let single = component_containing(g, &coloring, r + 1, target + 1, w)?;
        if single.vertices() != [w] {
            return Err(Error::internal(format!(
                "vertex {w} is not isolated in G({}, {})",
                r + 1,
                target + 1
            )));
        }
        changes.push(single.change());
        coloring = apply_kempe_change(&coloring, &single)?;
    }
    Ok(Normalized { coloring, changes })
}

/// Recolors `v` to `i` when no neighbor of `v` has color `i`; this is the
/// Kempe change on the singleton `(c(v), i)`-component `{v}`.
pub fn recolor_free_vertex(g: &Graph, c: &Coloring, v: Vertex, i: u8) -> Result<Coloring> {
    check_size(g, c)?;
    if v >= g.n() {
        return Err(Error::input(format!("vertex {v} outside 0..{}", g.n())));
    }
    if i == 0 || i as usize > c.k() {
        return Err(Error::input(format!("color {i} outside 1..={}", c.k())));
    }
    if let Some(&w) = g.neighbors(v).iter().find(|&&w| c.get(w) == i) {
        return Err(Error::input(format!(
            "vertex {v} has neighbor {w} already colored {i}"
        )));
    }
    if c.get(v) == i {
        return Ok(c.clone());
    }
    let comp = component_containing(g, c, c.get(v), i, v)?;
    debug_assert_eq!(comp.vertices(), [v]);
    apply_kempe_change(c, &comp)
}
