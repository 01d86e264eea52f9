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

//! Generators for the graph families used to probe Kempe equivalence on
//! `B + E_l` graphs: the rigid counterexample families, the `G**` gadget and
//! seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    bipartition, chromatic_number_with_cap, is_proper, Coloring, Graph, PartitionedGraph, Vertex,
    DEFAULT_CHROMATIC_CAP,
};
use crate::reconfig::{enumerate_colorings, rigidity_obstruction, same_up_to_color_permutation};

/// A partitioned graph with two proper k-colorings certified non-equivalent
/// by the rigidity obstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedPair {
    pub pg: PartitionedGraph,
    /// Canonical coloring; every bicolored subgraph under it is connected.
    pub c1: Coloring,
    /// A coloring outside the color-permutation orbit of `c1`.
    pub c2: Coloring,
    pub k: usize,
}

fn binom2(k: usize) -> usize {
    k * (k.saturating_sub(1)) / 2
}

fn check_certificate(pair: &CertifiedPair, expected_ell: usize) -> Result<()> {
    let g = pair.pg.graph();
    for (name, c) in [("c1", &pair.c1), ("c2", &pair.c2)] {
        if c.k() != pair.k || !is_proper(g, c)? {
            return Err(Error::internal(format!(
                "{name} is not a proper {}-coloring",
                pair.k
            )));
        }
    }
    if pair.pg.ell() != expected_ell {
        return Err(Error::internal(format!(
            "expected {expected_ell} added edges, built {}",
            pair.pg.ell()
        )));
    }
    if !rigidity_obstruction(g, &pair.c1, &pair.c2)? {
        return Err(Error::internal("rigidity certificate does not hold"));
    }
    Ok(())
}

fn chromatic(g: &Graph) -> Result<usize> {
    chromatic_number_with_cap(g, g.n().max(DEFAULT_CHROMATIC_CAP))
}

/// Base edges joining every `S`-`T` pair whose canonical colors differ.
fn cross_edges(side_s: &[Vertex], side_t: &[Vertex], canon: &[u8]) -> Vec<(Vertex, Vertex)> {
    side_s
        .iter()
        .flat_map(|&s| side_t.iter().map(move |&t| (s, t)))
        .filter(|&(s, t)| canon[s] != canon[t])
        .collect()
}

/// First proper k-coloring in lexicographic order that is not a color
/// permutation of `c1`.
fn search_alternative(g: &Graph, c1: &Coloring) -> Result<Coloring> {
    const SEARCH_CAP: usize = 1_000_000;
    for c in enumerate_colorings(g, c1.k(), SEARCH_CAP)? {
        let c = c.map_err(|e| Error::internal(format!("alternative coloring search: {e}")))?;
        if same_up_to_color_permutation(c1, &c).is_none() {
            return Ok(c);
        }
    }
    Err(Error::internal(
        "no coloring outside the permutation orbit of c1",
    ))
}

/// A `B + M_l` graph with `l = C(k, 2)` and two non-equivalent k-colorings.
///
/// `S` holds one added edge per color pair `{p, q}` (`p`-colored endpoint
/// first), `T` holds one vertex per color, and every `S`-`T` pair with
/// different canonical colors is a base edge. The alternative coloring puts
/// `(2, 3)` on every added edge and color 1 on all of `T`.
pub fn prop3_graph(k: usize) -> Result<CertifiedPair> {
    if !(3..=u8::MAX as usize).contains(&k) {
        return Err(Error::input(format!("prop3 needs k >= 3, got {k}")));
    }
    let mut canon = Vec::new();
    let mut added = Vec::new();
    for p in 1..=k as u8 {
        for q in p + 1..=k as u8 {
            added.push((canon.len(), canon.len() + 1));
            canon.extend([p, q]);
        }
    }
    let side_s: Vec<Vertex> = (0..canon.len()).collect();
    let side_t: Vec<Vertex> = (canon.len()..canon.len() + k).collect();
    canon.extend(1..=k as u8);
    let base = cross_edges(&side_s, &side_t, &canon);
    let pg = PartitionedGraph::new(canon.len(), &side_s, &side_t, &base, &added)?;

    let alt: Vec<u8> = side_s
        .iter()
        .map(|&v| if v % 2 == 0 { 2 } else { 3 })
        .chain(side_t.iter().map(|_| 1))
        .collect();
    let pair = CertifiedPair {
        c1: Coloring::new(k, &canon)?,
        c2: Coloring::new(k, &alt)?,
        pg,
        k,
    };
    check_certificate(&pair, binom2(k))?;
    if !pair.pg.is_matching() {
        return Err(Error::internal("prop3 added edges are not a matching"));
    }
    Ok(pair)
}

/// A `(k-1)`-colorable `B + E_l` graph with `l = C(k, 2)` and two
/// non-equivalent k-colorings.
///
/// `S` is a `K_{k-2}` colored `1..k-2` plus `2k-3` disjoint added edges
/// colored `(1,k-1), ..., (k-2,k-1), (1,k), ..., (k-1,k)`; `T` is one vertex
/// per color; base edges join differently colored `S`-`T` pairs.
pub fn prop4i_graph(k: usize) -> Result<CertifiedPair> {
    if !(4..=u8::MAX as usize).contains(&k) {
        return Err(Error::input(format!("prop4i needs k >= 4, got {k}")));
    }
    let k8 = k as u8;
    let mut canon: Vec<u8> = (1..=k8 - 2).collect();
    let mut added: Vec<(Vertex, Vertex)> = (0..k - 2)
        .flat_map(|u| (u + 1..k - 2).map(move |v| (u, v)))
        .collect();
    let pairs = (1..=k8 - 2)
        .map(|p| (p, k8 - 1))
        .chain((1..=k8 - 1).map(|p| (p, k8)));
    for (p, q) in pairs {
        added.push((canon.len(), canon.len() + 1));
        canon.extend([p, q]);
    }
    let side_s: Vec<Vertex> = (0..canon.len()).collect();
    let side_t: Vec<Vertex> = (canon.len()..canon.len() + k).collect();
    canon.extend(1..=k8);
    let base = cross_edges(&side_s, &side_t, &canon);
    let pg = PartitionedGraph::new(canon.len(), &side_s, &side_t, &base, &added)?;

    let c1 = Coloring::new(k, &canon)?;
    let c2 = search_alternative(pg.graph(), &c1)?;
    let pair = CertifiedPair { pg, c1, c2, k };
    check_certificate(&pair, binom2(k))?;
    let chi = chromatic(pair.pg.graph())?;
    if chi > k - 1 {
        return Err(Error::internal(format!(
            "prop4i graph has chromatic number {chi} > {}",
            k - 1
        )));
    }
    Ok(pair)
}

/// A k-chromatic `B + E_l` graph with `l = C(k, 2) - 1` and two
/// non-equivalent k-colorings.
///
/// `S` is a `K_{k-1}` colored `1..k-1` plus a vertex `v` colored `k-2`
/// joined to the clique vertices colored `1..k-3`. `T = {x, y, z}` with
/// added edge `xy`, colored `x = k-1`, `y = z = k`. The base is `K_{k,3}`
/// minus `x` to the clique vertex colored `k-1` and minus `y` to the clique
/// vertex colored `k-2`.
pub fn prop4ii_graph(k: usize) -> Result<CertifiedPair> {
    if !(4..=u8::MAX as usize).contains(&k) {
        return Err(Error::input(format!("prop4ii needs k >= 4, got {k}")));
    }
    let k8 = k as u8;
    let clique = k - 1;
    let v = clique;
    let (x, y, z) = (k, k + 1, k + 2);
    let mut canon: Vec<u8> = (1..=k8 - 1).collect();
    canon.push(k8 - 2);
    canon.extend([k8 - 1, k8, k8]);

    let mut added: Vec<(Vertex, Vertex)> = (0..clique)
        .flat_map(|a| (a + 1..clique).map(move |b| (a, b)))
        .collect();
    added.extend((0..k - 3).map(|a| (a, v)));
    added.push((x, y));

    let side_s: Vec<Vertex> = (0..k).collect();
    let side_t = vec![x, y, z];
    // clique vertex colored c sits at index c - 1
    let missing = [(k - 2, x), (k - 3, y)];
    let base: Vec<_> = side_s
        .iter()
        .flat_map(|&s| side_t.iter().map(move |&t| (s, t)))
        .filter(|e| !missing.contains(e))
        .collect();
    let pg = PartitionedGraph::new(k + 3, &side_s, &side_t, &base, &added)?;

    let c1 = Coloring::new(k, &canon)?;
    let c2 = search_alternative(pg.graph(), &c1)?;
    let pair = CertifiedPair { pg, c1, c2, k };
    check_certificate(&pair, binom2(k) - 1)?;
    let chi = chromatic(pair.pg.graph())?;
    if chi != k {
        return Err(Error::internal(format!(
            "prop4ii graph has chromatic number {chi}, expected {k}"
        )));
    }
    Ok(pair)
}

/// The `G**` gadget built from a base graph, with its vertex bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMap {
    pub base: Graph,
    pub gadget: Graph,
    /// `I_v` for every base vertex `v`, of size `deg(v)`.
    pub i_sets: Vec<Vec<Vertex>>,
    /// `(x_v, y_v)` for every base vertex `v`.
    pub apex: Vec<(Vertex, Vertex)>,
    /// Edges of `G*`, one per base edge, in base edge order.
    pub matching: Vec<(Vertex, Vertex)>,
    /// `B + M_l` witness: `S` is the union of the `I_v`, `T` the apex
    /// vertices, and the added matching is `G*` plus every `x_v y_v`.
    pub partition: PartitionedGraph,
}

/// Builds `G**`: each base vertex `v` becomes an independent set `I_v` of
/// size `deg(v)`, each base edge a matching edge between the corresponding
/// `I` sets, and each `I_v` gets two adjacent apex vertices joined to all
/// of it.
pub fn gstarstar(base: &Graph) -> Result<GadgetMap> {
    if base.n() == 0 || !base.is_connected() {
        return Err(Error::input(
            "gadget base graph must be connected and nonempty",
        ));
    }
    if let Some(v) = (0..base.n()).find(|&v| base.degree(v) == 0) {
        return Err(Error::input(format!("gadget base vertex {v} is isolated")));
    }
    let mut i_sets = Vec::with_capacity(base.n());
    let mut next = 0;
    for v in 0..base.n() {
        i_sets.push((next..next + base.degree(v)).collect::<Vec<_>>());
        next += base.degree(v);
    }
    let apex: Vec<_> = (0..base.n())
        .map(|v| (next + 2 * v, next + 2 * v + 1))
        .collect();
    let total = next + 2 * base.n();

    let mut used = vec![0usize; base.n()];
    let mut matching = Vec::with_capacity(base.num_edges());
    for (u, v) in base.edges() {
        matching.push((i_sets[u][used[u]], i_sets[v][used[v]]));
        used[u] += 1;
        used[v] += 1;
    }
    let mut base_edges = Vec::new();
    let mut added = matching.clone();
    for (v, set) in i_sets.iter().enumerate() {
        let (x, y) = apex[v];
        added.push((x, y));
        for &s in set {
            base_edges.push((s, x));
            base_edges.push((s, y));
        }
    }
    let side_s: Vec<Vertex> = (0..next).collect();
    let side_t: Vec<Vertex> = (next..total).collect();
    let partition = PartitionedGraph::new(total, &side_s, &side_t, &base_edges, &added)?;
    let map = GadgetMap {
        base: base.clone(),
        gadget: partition.graph().clone(),
        i_sets,
        apex,
        matching,
        partition,
    };
    map.validate()?;
    Ok(map)
}

impl GadgetMap {
    /// Checks the structural invariants of the gadget.
    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.base.n(), self.base.num_edges());
        let g = &self.gadget;
        if g.n() != 2 * m + 2 * n || g.num_edges() != 5 * m + n {
            return Err(Error::internal(format!(
                "gadget has {} vertices and {} edges, expected {} and {}",
                g.n(),
                g.num_edges(),
                2 * m + 2 * n,
                5 * m + n
            )));
        }
        for (v, set) in self.i_sets.iter().enumerate() {
            if set.len() != self.base.degree(v) {
                return Err(Error::internal(format!("|I_{v}| differs from deg({v})")));
            }
            let (x, y) = self.apex[v];
            if !g.has_edge(x, y) {
                return Err(Error::internal(format!("apex pair of {v} is not adjacent")));
            }
            for (a, &s) in set.iter().enumerate() {
                if !g.has_edge(s, x)
                    || !g.has_edge(s, y)
                    || set[a + 1..].iter().any(|&t| g.has_edge(s, t))
                {
                    return Err(Error::internal(format!("I_{v} is not joined correctly")));
                }
            }
        }
        if !self.partition.is_matching() {
            return Err(Error::internal("gadget added edges are not a matching"));
        }
        Ok(())
    }
}

/// Shape class requested for the components of the added edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Matching,
    Paths,
    Cycles4Plus,
    CompleteBipartite,
    Any,
}

impl Shape {
    pub const ALL: [Shape; 5] = [
        Shape::Matching,
        Shape::Paths,
        Shape::Cycles4Plus,
        Shape::CompleteBipartite,
        Shape::Any,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Matching => "matching",
            Shape::Paths => "paths",
            Shape::Cycles4Plus => "cycles4plus",
            Shape::CompleteBipartite => "complete_bipartite",
            Shape::Any => "any",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Shape::ALL
            .into_iter()
            .find(|shape| shape.name() == s)
            .ok_or_else(|| Error::input(format!("unknown shape {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomBpeParams {
    pub n_s: usize,
    pub n_t: usize,
    /// Probability of each `S`-`T` base edge.
    pub base_density: f64,
    pub ell: usize,
    pub shape: Shape,
    pub seed: u64,
}

/// A seeded random `B + E_l` graph. `S = 0..n_s`, `T = n_s..n_s + n_t`.
pub fn random_bpe(params: &RandomBpeParams) -> Result<PartitionedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    sample_bpe(
        &mut rng,
        params.n_s,
        params.n_t,
        params.base_density,
        params.ell,
        params.shape,
    )
}

fn infeasible(shape: Shape, ell: usize, n_s: usize, n_t: usize) -> Error {
    Error::input(format!(
        "cannot place {ell} added edges of shape {shape} on |S| = {n_s}, |T| = {n_t}"
    ))
}

/// Pops `count` free vertices from a random side that has enough.
fn take<R: Rng>(free: &mut [Vec<Vertex>; 2], rng: &mut R, count: usize) -> Option<Vec<Vertex>> {
    let sides: Vec<usize> = (0..2).filter(|&s| free[s].len() >= count).collect();
    let side = *sides.choose(rng)?;
    let at = free[side].len() - count;
    Some(free[side].split_off(at))
}

pub(crate) fn sample_bpe<R: Rng>(
    rng: &mut R,
    n_s: usize,
    n_t: usize,
    base_density: f64,
    ell: usize,
    shape: Shape,
) -> Result<PartitionedGraph> {
    if !(0.0..=1.0).contains(&base_density) {
        return Err(Error::input(format!(
            "base density {base_density} outside [0, 1]"
        )));
    }
    let side_s: Vec<Vertex> = (0..n_s).collect();
    let side_t: Vec<Vertex> = (n_s..n_s + n_t).collect();
    let mut free = [side_s.clone(), side_t.clone()];
    free.iter_mut().for_each(|f| f.shuffle(rng));
    let fail = || infeasible(shape, ell, n_s, n_t);

    let mut added = Vec::with_capacity(ell);
    match shape {
        Shape::Matching => {
            for _ in 0..ell {
                let vs = take(&mut free, rng, 2).ok_or_else(fail)?;
                added.push((vs[0], vs[1]));
            }
        }
        Shape::Paths => {
            let mut remaining = ell;
            while remaining > 0 {
                let room = free[0]
                    .len()
                    .max(free[1].len())
                    .saturating_sub(1)
                    .min(remaining);
                if room == 0 {
                    return Err(fail());
                }
                let len = rng.gen_range(1..=room);
                let vs = take(&mut free, rng, len + 1).ok_or_else(fail)?;
                added.extend(vs.windows(2).map(|w| (w[0], w[1])));
                remaining -= vs.len() - 1;
            }
        }
        Shape::Cycles4Plus => {
            let mut remaining = ell;
            while remaining > 0 {
                let room = free[0].len().max(free[1].len());
                let options: Vec<usize> = (4..=remaining.min(room))
                    .filter(|&len| remaining - len == 0 || remaining - len >= 4)
                    .collect();
                let &len = options.choose(rng).ok_or_else(fail)?;
                let vs = take(&mut free, rng, len).ok_or_else(fail)?;
                added.extend((0..len).map(|a| (vs[a], vs[(a + 1) % len])));
                remaining -= len;
            }
        }
        Shape::CompleteBipartite => {
            let mut remaining = ell;
            while remaining > 0 {
                let room = free[0].len().max(free[1].len());
                let options: Vec<(usize, usize)> = (1..=remaining)
                    .flat_map(|a| (a..=remaining).map(move |b| (a, b)))
                    .filter(|&(a, b)| a * b <= remaining && a + b <= room)
                    .collect();
                let &(a, b) = options.choose(rng).ok_or_else(fail)?;
                let vs = take(&mut free, rng, a + b).ok_or_else(fail)?;
                for &u in &vs[..a] {
                    added.extend(vs[a..].iter().map(|&w| (u, w)));
                }
                remaining -= a * b;
            }
        }
        Shape::Any => {
            let mut pool: Vec<(Vertex, Vertex)> = [&side_s, &side_t]
                .into_iter()
                .flat_map(|side| {
                    side.iter()
                        .enumerate()
                        .flat_map(move |(i, &u)| side[i + 1..].iter().map(move |&w| (u, w)))
                })
                .collect();
            if pool.len() < ell {
                return Err(fail());
            }
            pool.shuffle(rng);
            pool.truncate(ell);
            added = pool;
        }
    }

    let mut base = Vec::new();
    for &s in &side_s {
        for &t in &side_t {
            if rng.gen_bool(base_density) {
                base.push((s, t));
            }
        }
    }
    PartitionedGraph::new(n_s + n_t, &side_s, &side_t, &base, &added)
}

/// Structural class of one component of the added edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentClass {
    Path,
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddedComponent {
    pub vertices: Vec<Vertex>,
    pub class: ComponentClass,
}

/// Classifies each component of `(V, added_edges)` that has at least one
/// edge. Paths win over cycles, cycles over complete bipartite graphs, so a
/// single edge is a path and `K_{2,2}` is `cycle(4)`.
pub fn classify_added_components(pg: &PartitionedGraph) -> Vec<AddedComponent> {
    let added = pg.added_graph();
    added
        .components()
        .into_iter()
        .filter(|comp| comp.len() > 1)
        .map(|vertices| {
            let (h, _) = added.induced_subgraph(&vertices);
            let (nv, ne) = (h.n(), h.num_edges());
            let class = if ne + 1 == nv && h.max_degree() <= 2 {
                ComponentClass::Path
            } else if ne == nv && (0..nv).all(|v| h.degree(v) == 2) {
                ComponentClass::Cycle(nv)
            } else {
                match bipartition(&h) {
                    Some((a, b)) if a.len() * b.len() == ne => ComponentClass::CompleteBipartite(
                        a.len().min(b.len()),
                        a.len().max(b.len()),
                    ),
                    _ => ComponentClass::Other,
                }
            };
            AddedComponent { vertices, class }
        })
        .collect()
}

/// True iff every added component is a path, a cycle of length at least 4
/// or a complete bipartite graph.
pub fn added_components_allowed(pg: &PartitionedGraph) -> bool {
    classify_added_components(pg).iter().all(|c| match c.class {
        ComponentClass::Path | ComponentClass::CompleteBipartite(..) => true,
        ComponentClass::Cycle(len) => len >= 4,
        ComponentClass::Other => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_k_critical_with_cap;
    use crate::reconfig::all_bicolored_connected;

    #[test]
    fn prop3_k3_shape() {
        let p = prop3_graph(3).unwrap();
        assert_eq!(p.pg.n(), 9);
        assert_eq!(p.pg.ell(), 3);
        assert_eq!(p.pg.base_edges().len(), 12);
        assert!(rigidity_obstruction(p.pg.graph(), &p.c1, &p.c2).unwrap());
        assert_eq!(p.c2.colors(), vec![2, 3, 2, 3, 2, 3, 1, 1, 1]);
    }

    #[test]
    fn prop3_k4_shape() {
        let p = prop3_graph(4).unwrap();
        assert_eq!(
            (p.pg.side_s().len(), p.pg.side_t().len(), p.pg.ell()),
            (12, 4, 6)
        );
        assert!(p.pg.is_matching());
        assert!(prop3_graph(2).is_err());
    }

    #[test]
    fn prop4i_k4_shape() {
        let p = prop4i_graph(4).unwrap();
        assert_eq!(
            (p.pg.side_s().len(), p.pg.side_t().len(), p.pg.ell()),
            (12, 4, 6)
        );
        assert!(chromatic_number_with_cap(p.pg.graph(), 30).unwrap() <= 3);
        assert!(all_bicolored_connected(p.pg.graph(), &p.c1).unwrap());
        assert!(prop4i_graph(3).is_err());
    }

    #[test]
    fn prop4ii_k4_shape() {
        let p = prop4ii_graph(4).unwrap();
        assert_eq!(p.pg.n(), 7);
        assert_eq!(p.pg.ell(), 5);
        assert_eq!(chromatic_number_with_cap(p.pg.graph(), 30).unwrap(), 4);
        assert_eq!(p.c1.colors(), vec![1, 2, 3, 2, 3, 4, 4]);
    }

    #[test]
    fn larger_k_families_certify() {
        for k in 4..=5 {
            prop3_graph(k).unwrap();
            prop4i_graph(k).unwrap();
            prop4ii_graph(k).unwrap();
        }
    }

    #[test]
    fn gadget_counts() {
        let g = gstarstar(&Graph::complete(3)).unwrap();
        assert_eq!((g.gadget.n(), g.gadget.num_edges()), (12, 18));
        let g = gstarstar(&Graph::path(2)).unwrap();
        assert_eq!((g.gadget.n(), g.gadget.num_edges()), (6, 7));
        assert_eq!(g.partition.ell(), 3);
        assert!(gstarstar(&Graph::empty(1)).is_err());
        assert!(gstarstar(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()).is_err());
    }

    #[test]
    fn gadget_formulas_on_small_bases() {
        let bases = [
            Graph::path(2),
            Graph::path(3),
            Graph::path(6),
            Graph::complete(3),
            Graph::complete(4),
            Graph::cycle(5),
            Graph::star(4),
            Graph::complete_bipartite(2, 3),
        ];
        for base in &bases {
            let map = gstarstar(base).unwrap();
            let (n, m) = (base.n(), base.num_edges());
            assert_eq!(map.gadget.n(), 2 * m + 2 * n);
            assert_eq!(map.gadget.num_edges(), 5 * m + n);
            assert_eq!(map.partition.ell(), m + n);
            assert!(map.gadget.is_connected());
        }
    }

    #[test]
    fn gadget_of_k4_is_4_critical() {
        let map = gstarstar(&Graph::complete(4)).unwrap();
        assert!(is_k_critical_with_cap(&map.gadget, 4, 30).unwrap());
    }

    fn params(shape: Shape, ell: usize, n_s: usize, n_t: usize, seed: u64) -> RandomBpeParams {
        RandomBpeParams {
            n_s,
            n_t,
            base_density: 0.5,
            ell,
            shape,
            seed,
        }
    }

    #[test]
    fn random_matching_is_disjoint() {
        let pg = random_bpe(&params(Shape::Matching, 3, 6, 4, 7)).unwrap();
        assert_eq!(pg.ell(), 3);
        assert!(pg.is_matching());
    }

    #[test]
    fn random_cycle_of_four() {
        let pg = random_bpe(&params(Shape::Cycles4Plus, 4, 5, 5, 3)).unwrap();
        let comps = classify_added_components(&pg);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].class, ComponentClass::Cycle(4));
        assert!(random_bpe(&params(Shape::Cycles4Plus, 3, 5, 5, 3)).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        for shape in Shape::ALL {
            let p = params(shape, 4, 5, 5, 99);
            assert_eq!(random_bpe(&p).unwrap(), random_bpe(&p).unwrap(), "{shape}");
        }
    }

    #[test]
    fn random_shapes_satisfy_component_hypothesis() {
        for seed in 0..200 {
            for shape in [
                Shape::Matching,
                Shape::Paths,
                Shape::Cycles4Plus,
                Shape::CompleteBipartite,
            ] {
                let ell = if shape == Shape::Cycles4Plus {
                    4 + seed as usize % 3
                } else {
                    seed as usize % 6
                };
                let pg = random_bpe(&params(shape, ell, 6, 5, seed)).unwrap();
                assert_eq!(pg.ell(), ell);
                assert!(added_components_allowed(&pg), "{shape} seed {seed}");
            }
        }
    }

    #[test]
    fn infeasible_requests_are_rejected() {
        assert!(random_bpe(&params(Shape::Matching, 4, 3, 3, 0)).is_err());
        assert!(random_bpe(&params(Shape::Any, 7, 3, 3, 0)).is_err());
        let mut p = params(Shape::Any, 1, 3, 3, 0);
        p.base_density = 1.5;
        assert!(random_bpe(&p).is_err());
    }

    #[test]
    fn classification_examples() {
        let single = PartitionedGraph::new(3, &[0, 1], &[2], &[], &[(0, 1)]).unwrap();
        let got: Vec<_> = classify_added_components(&single)
            .into_iter()
            .map(|c| c.class)
            .collect();
        assert_eq!(got, vec![ComponentClass::Path]);

        let c4 = PartitionedGraph::new(
            4,
            &[0, 1, 2, 3],
            &[],
            &[],
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap();
        assert_eq!(
            classify_added_components(&c4)[0].class,
            ComponentClass::Cycle(4)
        );

        let tri =
            PartitionedGraph::new(3, &[0, 1, 2], &[], &[], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            classify_added_components(&tri)[0].class,
            ComponentClass::Cycle(3)
        );
        assert!(!added_components_allowed(&tri));

        let k23 = PartitionedGraph::new(
            5,
            &[0, 1, 2, 3, 4],
            &[],
            &[],
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        assert_eq!(
            classify_added_components(&k23)[0].class,
            ComponentClass::CompleteBipartite(2, 3)
        );

        let pendant = PartitionedGraph::new(
            5,
            &[0, 1, 2, 3, 4],
            &[],
            &[],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)],
        )
        .unwrap();
        assert_eq!(
            classify_added_components(&pendant)[0].class,
            ComponentClass::Other
        );
    }
}
