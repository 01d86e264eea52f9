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

//! Generators, a brute-force oracle and the engine invariants shared by the
//! property suite and the acceptance run.

#![allow(dead_code)]

use std::collections::VecDeque;

use kempe::kempe::{
    apply_kempe_change, clear_color_from_sides, kempe_components, kempe_neighbors, replay,
    seed_color_in_components,
};
use kempe::reconfig::kempe_classes;
use kempe::{Coloring, Graph, PartitionedGraph};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// A graph together with a proper coloring: vertices get random colors and
/// only edges between different colors are kept.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    pub g: Graph,
    pub c: Coloring,
}

pub fn colored_graph(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n, 2usize..=4)
        .prop_flat_map(|(n, k)| {
            (
                Just(n),
                Just(k),
                proptest::collection::vec(1..=k as u8, n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, k, colors, mask)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(mask)
                .filter(|&((u, v), keep)| keep && colors[u] != colors[v])
                .map(|(e, _)| e)
                .collect();
            ColoredGraph {
                g: Graph::from_edges(n, &edges).unwrap(),
                c: Coloring::new(k, &colors).unwrap(),
            }
        })
}

/// A small `B + E_l` graph, a palette size and a selector for one of its
/// proper colorings.
#[derive(Clone, Debug)]
pub struct AlmostBipartite {
    pub pg: PartitionedGraph,
    pub k: usize,
    pub pick: usize,
}

pub fn almost_bipartite() -> impl Strategy<Value = AlmostBipartite> {
    (1usize..=4, 1usize..=4, 3usize..=4)
        .prop_flat_map(|(n_s, n_t, k)| {
            let inner = n_s * (n_s - 1) / 2 + n_t * (n_t - 1) / 2;
            (
                Just(n_s),
                Just(n_t),
                Just(k),
                proptest::collection::vec(proptest::bool::weighted(0.6), n_s * n_t),
                proptest::collection::vec(proptest::bool::weighted(0.3), inner),
                any::<usize>(),
            )
        })
        .prop_map(|(n_s, n_t, k, base_mask, added_mask, pick)| {
            let s: Vec<usize> = (0..n_s).collect();
            let t: Vec<usize> = (n_s..n_s + n_t).collect();
            let base: Vec<_> = s
                .iter()
                .flat_map(|&u| t.iter().map(move |&v| (u, v)))
                .zip(base_mask)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            let inside = |side: &[usize]| {
                let side = side.to_vec();
                (0..side.len())
                    .flat_map(move |a| (a + 1..side.len()).map(move |b| (a, b)))
                    .collect::<Vec<_>>()
            };
            let candidates: Vec<_> = inside(&s)
                .into_iter()
                .chain(inside(&t).into_iter().map(|(a, b)| (a + n_s, b + n_s)))
                .collect();
            let added: Vec<_> = candidates
                .into_iter()
                .zip(added_mask)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            AlmostBipartite {
                pg: PartitionedGraph::new(n_s + n_t, &s, &t, &base, &added).unwrap(),
                k,
                pick,
            }
        })
}

/// Every proper k-coloring by trying all `k^n` assignments.
pub fn oracle_colorings(g: &Graph, k: usize) -> Vec<Vec<u8>> {
    let n = g.n();
    let total = k.pow(n as u32);
    let edges = g.edges();
    (0..total)
        .map(|mut code| {
            let mut colors = vec![0u8; n];
            for slot in colors.iter_mut().rev() {
                *slot = (code % k) as u8 + 1;
                code /= k;
            }
            colors
        })
        .filter(|colors| edges.iter().all(|&(u, v)| colors[u] != colors[v]))
        .collect()
}

/// Neighbors under one Kempe change, found by flood fill over the edge list.
fn oracle_neighbors(g: &Graph, k: usize, colors: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for a in 1..=k as u8 {
        for b in a + 1..=k as u8 {
            let mut done = vec![false; g.n()];
            for start in 0..g.n() {
                if done[start] || (colors[start] != a && colors[start] != b) {
                    continue;
                }
                let mut queue = VecDeque::from([start]);
                let mut next = colors.to_vec();
                done[start] = true;
                while let Some(u) = queue.pop_front() {
                    next[u] = if colors[u] == a { b } else { a };
                    for &w in g.neighbors(u) {
                        if !done[w] && (colors[w] == a || colors[w] == b) {
                            done[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
                out.push(next);
            }
        }
    }
    out
}

/// Kempe class label of every coloring in `all` (sorted), by BFS.
pub fn oracle_classes(g: &Graph, k: usize, all: &[Vec<u8>]) -> (usize, Vec<usize>) {
    let mut label = vec![usize::MAX; all.len()];
    let mut classes = 0;
    for root in 0..all.len() {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = classes;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in oracle_neighbors(g, k, &all[x]) {
                let iy = all
                    .binary_search(&y)
                    .expect("neighbors are proper colorings");
                if label[iy] == usize::MAX {
                    label[iy] = classes;
                    queue.push_back(iy);
                }
            }
        }
        classes += 1;
    }
    (classes, label)
}

/// Every Kempe change keeps the coloring proper and undoing it restores
/// the original.
pub fn check_change_properness_and_involution(cg: &ColoredGraph) -> Result<(), TestCaseError> {
    let k = cg.c.k() as u8;
    for a in 1..=k {
        for b in a + 1..=k {
            for comp in kempe_components(&cg.g, &cg.c, a, b).unwrap() {
                let next = apply_kempe_change(&cg.c, &comp).unwrap();
                prop_assert!(kempe::graph::is_proper(&cg.g, &next).unwrap());
                let back = kempe_components(&cg.g, &next, a, b)
                    .unwrap()
                    .into_iter()
                    .find(|x| x.vertices() == comp.vertices());
                prop_assert!(back.is_some(), "component vanished after the change");
                prop_assert_eq!(
                    apply_kempe_change(&next, &back.unwrap()).unwrap(),
                    cg.c.clone()
                );
            }
        }
    }
    Ok(())
}

/// `d` is a Kempe neighbor of `c` exactly when `c` is one of `d`.
pub fn check_neighbor_symmetry(cg: &ColoredGraph) -> Result<(), TestCaseError> {
    for d in kempe_neighbors(&cg.g, &cg.c).unwrap() {
        let back = kempe_neighbors(&cg.g, &d).unwrap();
        prop_assert!(
            back.binary_search(&cg.c).is_ok(),
            "{} -> {} is one-way",
            cg.c,
            d
        );
    }
    Ok(())
}

/// Renaming colors never leaves the Kempe class.
pub fn check_permutation_closure(cg: &ColoredGraph, shuffle: u64) -> Result<(), TestCaseError> {
    let k = cg.c.k();
    let mut perm: Vec<u8> = (1..=k as u8).collect();
    let mut state = shuffle;
    for i in (1..k).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        perm.swap(i, (state >> 33) as usize % (i + 1));
    }
    let image = cg.c.permuted(&perm).unwrap();
    let classes = kempe_classes(&cg.g, k, 200_000).unwrap();
    prop_assume!(!classes.is_truncated());
    prop_assert_eq!(classes.class_of(&cg.c), classes.class_of(&image));
    Ok(())
}

/// The engine's partition equals the BFS oracle's, class for class.
pub fn check_count_matches_oracle(cg: &ColoredGraph) -> Result<(), TestCaseError> {
    let k = cg.c.k();
    let all = oracle_colorings(&cg.g, k);
    prop_assume!(all.len() <= 10_000);
    let (classes, labels) = oracle_classes(&cg.g, k, &all);
    let engine = kempe_classes(&cg.g, k, 20_000).unwrap();
    prop_assert_eq!(engine.len(), all.len());
    prop_assert_eq!(engine.num_classes(), classes);
    let mut mapping = vec![None; classes];
    for (colors, &want) in all.iter().zip(&labels) {
        let got = engine.class_of(&Coloring::new(k, colors).unwrap()).unwrap();
        let slot = mapping[want].get_or_insert(got);
        prop_assert_eq!(*slot, got, "oracle class {} split by the engine", want);
    }
    Ok(())
}

/// Clearing `i` from `S` and `j` from `T`, then seeding each side-component,
/// meets both postconditions and the recorded changes replay exactly.
pub fn check_side_normalization(ab: &AlmostBipartite) -> Result<(), TestCaseError> {
    let g = ab.pg.graph();
    let all = oracle_colorings(g, ab.k);
    prop_assume!(!all.is_empty());
    let c = Coloring::new(ab.k, &all[ab.pick % all.len()]).unwrap();
    let k = ab.k as u8;
    let pair = (1..=k)
        .flat_map(|i| (1..=k).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .find(|&(i, j)| {
            ab.pg.added_edges().iter().all(|&(u, v)| {
                let (cu, cv) = (c.get(u), c.get(v));
                !((cu == i && cv == j) || (cu == j && cv == i))
            })
        });
    prop_assume!(pair.is_some());
    let (i, j) = pair.unwrap();

    let cleared = clear_color_from_sides(&ab.pg, &c, i, j).unwrap();
    prop_assert!(ab.pg.side_s().iter().all(|&v| cleared.coloring.get(v) != i));
    prop_assert!(ab.pg.side_t().iter().all(|&v| cleared.coloring.get(v) != j));
    prop_assert_eq!(
        replay(g, &c, &cleared.changes).unwrap(),
        cleared.coloring.clone()
    );

    if ab.pg.ell() < ab.k * (ab.k - 1) / 2 {
        let seeded = seed_color_in_components(&ab.pg, &cleared.coloring, i, j).unwrap();
        let side = ab.pg.side_graph();
        for comp in side.components() {
            let want = if ab.pg.in_s(comp[0]) { j } else { i };
            prop_assert!(
                comp.iter().any(|&v| seeded.coloring.get(v) == want),
                "component {:?} lacks color {}",
                comp,
                want
            );
        }
        prop_assert!(kempe::graph::is_proper(g, &seeded.coloring).unwrap());
        prop_assert_eq!(
            replay(g, &cleared.coloring, &seeded.changes).unwrap(),
            seeded.coloring.clone()
        );
    }
    Ok(())
}
