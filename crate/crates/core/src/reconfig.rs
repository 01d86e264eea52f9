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

//! Exhaustive exploration of the Kempe reconfiguration graph.
//!
//! The nodes are the proper k-colorings of a labeled graph; two colorings
//! are adjacent when one Kempe change turns one into the other. Classes are
//! computed over the full, explicit state set: no quotient by color
//! permutations is taken.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::{ensure_proper, Coloring, Graph};
use crate::kempe::{for_each_component, KempeChange, Scratch};

/// Default limit on the number of colorings a search may hold.
pub const DEFAULT_STATE_CAP: usize = 5_000_000;

/// Lexicographic backtracking over proper colorings, 0-based colors.
pub(crate) struct RawEnumerator {
    lower: Vec<Vec<usize>>,
    k: u8,
    colors: Vec<u8>,
    started: bool,
    done: bool,
}

impl RawEnumerator {
    pub(crate) fn new(g: &Graph, k: u8) -> Self {
        let lower = (0..g.n())
            .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
            .collect();
        RawEnumerator {
            lower,
            k,
            colors: vec![0; g.n()],
            started: false,
            done: k == 0,
        }
    }

    pub(crate) fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Moves to the next proper coloring; false once exhausted.
    pub(crate) fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let n = self.colors.len();
        if n == 0 {
            self.done = self.started;
            self.started = true;
            return !self.done;
        }
        let (mut i, mut start) = if self.started {
            (n - 1, self.colors[n - 1] + 1)
        } else {
            self.started = true;
            (0, 0)
        };
        loop {
            let mut c = start;
            while c < self.k && self.lower[i].iter().any(|&w| self.colors[w] == c) {
                c += 1;
            }
            if c < self.k {
                self.colors[i] = c;
                if i + 1 == n {
                    return true;
                }
                i += 1;
                start = 0;
            } else {
                if i == 0 {
                    self.done = true;
                    return false;
                }
                i -= 1;
                start = self.colors[i] + 1;
            }
        }
    }
}

/// Iterator over proper k-colorings in lexicographic order.
///
/// Yields one `Error::Capacity` (carrying the count produced so far) if more
/// than `cap` colorings exist, then stops.
pub struct Colorings {
    inner: RawEnumerator,
    produced: usize,
    cap: usize,
    finished: bool,
}

impl Iterator for Colorings {
    type Item = Result<Coloring>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished || !self.inner.advance() {
            self.finished = true;
            return None;
        }
        if self.produced == self.cap {
            self.finished = true;
            return Some(Err(Error::Capacity {
                what: "proper colorings",
                limit: self.cap,
                reached: self.produced,
            }));
        }
        self.produced += 1;
        Some(Ok(Coloring::from_raw(
            self.inner.k,
            self.inner.colors().to_vec(),
        )))
    }
}

fn check_k(k: usize) -> Result<u8> {
    if k == 0 || k > u8::MAX as usize {
        return Err(Error::input(format!("palette size {k} outside 1..=255")));
    }
    Ok(k as u8)
}

pub fn enumerate_colorings(g: &Graph, k: usize, cap: usize) -> Result<Colorings> {
    let k = check_k(k)?;
    Ok(Colorings {
        inner: RawEnumerator::new(g, k),
        produced: 0,
        cap,
        finished: false,
    })
}

/// Packs a color vector into a `u128` so that numeric order matches
/// lexicographic order of the vectors.
#[derive(Clone, Copy, Debug)]
struct Packer {
    n: usize,
    bits: u32,
}

impl Packer {
    fn new(n: usize, k: u8) -> Result<Self> {
        let bits = (u8::BITS - (k.max(2) - 1).leading_zeros()).max(1);
        if n as u32 * bits > 128 {
            return Err(Error::input(format!(
                "{n} vertices at {bits} bits per color do not fit a 128-bit state key"
            )));
        }
        Ok(Packer { n, bits })
    }

    fn pack(&self, raw: &[u8]) -> u128 {
        raw.iter()
            .fold(0u128, |key, &c| (key << self.bits) | c as u128)
    }

    fn unpack_into(&self, mut key: u128, out: &mut [u8]) {
        let mask = (1u128 << self.bits) - 1;
        for slot in out.iter_mut().rev() {
            *slot = (key & mask) as u8;
            key >>= self.bits;
        }
    }

    fn shift(&self, v: usize) -> u32 {
        self.bits * (self.n - 1 - v) as u32
    }
}

/// Every proper k-coloring of a graph, labeled by Kempe class.
///
/// Colorings are indexed in lexicographic order. Class labels are dense,
/// numbered in order of each class's lexicographically least member.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    k: u8,
    packer: Packer,
    keys: Vec<u128>,
    labels: Vec<u32>,
    num_classes: usize,
    truncated: bool,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn coloring(&self, index: usize) -> Coloring {
        let mut raw = vec![0; self.packer.n];
        self.packer.unpack_into(self.keys[index], &mut raw);
        Coloring::from_raw(self.k, raw)
    }

    pub fn label(&self, index: usize) -> u32 {
        self.labels[index]
    }

    /// Position of `c` in lexicographic order, if it is an enumerated
    /// coloring of this partition.
    pub fn index_of(&self, c: &Coloring) -> Option<usize> {
        if c.len() != self.packer.n || c.k() != self.k as usize {
            return None;
        }
        self.keys.binary_search(&self.packer.pack(c.raw())).ok()
    }

    pub fn class_of(&self, c: &Coloring) -> Option<u32> {
        self.index_of(c).map(|i| self.labels[i])
    }

    pub fn report(&self) -> KempeClassReport {
        if self.truncated {
            return KempeClassReport {
                k: self.k as usize,
                num_colorings: self.keys.len(),
                num_classes: 0,
                representatives: Vec::new(),
                class_sizes: Vec::new(),
                truncated: true,
            };
        }
        let mut representatives = Vec::with_capacity(self.num_classes);
        let mut class_sizes = vec![0usize; self.num_classes];
        for (i, &label) in self.labels.iter().enumerate() {
            if class_sizes[label as usize] == 0 {
                representatives.push(self.coloring(i));
            }
            class_sizes[label as usize] += 1;
        }
        KempeClassReport {
            k: self.k as usize,
            num_colorings: self.keys.len(),
            num_classes: self.num_classes,
            representatives,
            class_sizes,
            truncated: false,
        }
    }
}

/// Summary of a reconfiguration-graph exploration.
///
/// When `truncated` is set the state cap was hit: `num_colorings` is the
/// number enumerated before stopping and the class data is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeClassReport {
    pub k: usize,
    pub num_colorings: usize,
    /// `Kc(G, k)`.
    pub num_classes: usize,
    /// Lexicographically least coloring of each class, in increasing order.
    pub representatives: Vec<Coloring>,
    /// Size of each class, aligned with `representatives`.
    pub class_sizes: Vec<usize>,
    pub truncated: bool,
}

impl KempeClassReport {
    pub fn is_exact(&self) -> bool {
        !self.truncated
    }
}

const UNION_BLOCK: usize = 1 << 15;
const PAR_CHUNK: usize = 512;

/// Enumerates all proper k-colorings and merges each with its Kempe
/// neighbors in a disjoint-set forest.
pub fn kempe_classes(g: &Graph, k: usize, cap: usize) -> Result<ClassPartition> {
    let k8 = check_k(k)?;
    let packer = Packer::new(g.n(), k8)?;
    let mut keys = Vec::new();
    let mut it = RawEnumerator::new(g, k8);
    while it.advance() {
        if keys.len() == cap {
            return Ok(ClassPartition {
                k: k8,
                packer,
                keys,
                labels: Vec::new(),
                num_classes: 0,
                truncated: true,
            });
        }
        keys.push(packer.pack(it.colors()));
    }
    debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));

    let mut dsu = DisjointSets::new(keys.len());
    for (block_idx, block) in keys.chunks(UNION_BLOCK).enumerate() {
        let base = block_idx * UNION_BLOCK;
        let links: Vec<(u32, u32)> = block
            .par_chunks(PAR_CHUNK)
            .enumerate()
            .flat_map_iter(|(chunk_idx, chunk)| {
                let mut raw = vec![0u8; g.n()];
                let mut scratch = Scratch::new(g.n());
                let mut out = Vec::new();
                for (off, &key) in chunk.iter().enumerate() {
                    let idx = base + chunk_idx * PAR_CHUNK + off;
                    packer.unpack_into(key, &mut raw);
                    for a in 0..k8 {
                        for b in a + 1..k8 {
                            let flip = (a ^ b) as u128;
                            for_each_component(g, &raw, a, b, &mut scratch, |comp| {
                                let delta = comp
                                    .iter()
                                    .fold(0u128, |d, &v| d | (flip << packer.shift(v)));
                                let other = keys
                                    .binary_search(&(key ^ delta))
                                    .expect("a Kempe change yields a proper coloring");
                                if other > idx {
                                    out.push((idx as u32, other as u32));
                                }
                            });
                        }
                    }
                }
                out
            })
            .collect();
        for (a, b) in links {
            dsu.union(a as usize, b as usize);
        }
    }

    let mut labels = vec![u32::MAX; keys.len()];
    let mut root_label: HashMap<usize, u32> = HashMap::new();
    for (i, label) in labels.iter_mut().enumerate() {
        let root = dsu.find(i);
        let next = root_label.len() as u32;
        *label = *root_label.entry(root).or_insert(next);
    }
    Ok(ClassPartition {
        k: k8,
        packer,
        keys,
        labels,
        num_classes: root_label.len(),
        truncated: false,
    })
}

/// Computes `Kc(G, k)` exactly, or a truncated report if the number of
/// proper colorings exceeds `cap`.
pub fn count_kempe_classes(g: &Graph, k: usize, cap: usize) -> Result<KempeClassReport> {
    Ok(kempe_classes(g, k, cap)?.report())
}

/// Outcome of a pairwise equivalence query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Replayable changes leading from the first coloring to the second.
    Equivalent(Vec<KempeChange>),
    /// One of the two classes was explored completely without meeting the other.
    NotEquivalent,
    /// The state cap was hit first.
    Undecided { explored: usize },
}

fn check_pair_inputs(g: &Graph, c1: &Coloring, c2: &Coloring) -> Result<()> {
    if c1.k() != c2.k() {
        return Err(Error::input(format!(
            "palette sizes differ: {} vs {}",
            c1.k(),
            c2.k()
        )));
    }
    ensure_proper(g, c1)?;
    ensure_proper(g, c2)
}

fn change_between(from: &[u8], to: &[u8]) -> KempeChange {
    let vertices: Vec<usize> = (0..from.len()).filter(|&v| from[v] != to[v]).collect();
    let (a, b) = (from[vertices[0]], to[vertices[0]]);
    KempeChange {
        pair: (a.min(b) + 1, a.max(b) + 1),
        vertices,
    }
}

/// Bidirectional breadth-first search between `c1` and `c2`.
///
/// Each search tree stores its parent pointers; the Kempe change along an
/// edge is recovered as the set of vertices whose color differs.
pub fn are_kempe_equivalent(
    g: &Graph,
    c1: &Coloring,
    c2: &Coloring,
    cap: usize,
) -> Result<Verdict> {
    check_pair_inputs(g, c1, c2)?;
    if c1 == c2 {
        return Ok(Verdict::Equivalent(Vec::new()));
    }
    let k = c1.k() as u8;
    let start = c1.raw().to_vec();
    let goal = c2.raw().to_vec();
    // side 0 grows from c1, side 1 from c2
    let mut parents: [HashMap<Vec<u8>, Option<Vec<u8>>>; 2] = [HashMap::new(), HashMap::new()];
    parents[0].insert(start.clone(), None);
    parents[1].insert(goal.clone(), None);
    let mut frontiers = [vec![start], vec![goal]];
    let mut scratch = Scratch::new(g.n());

    let meet = 'search: loop {
        let side = if frontiers[0].len() <= frontiers[1].len() {
            0
        } else {
            1
        };
        if frontiers[side].is_empty() {
            return Ok(Verdict::NotEquivalent);
        }
        let mut next = Vec::new();
        for state in std::mem::take(&mut frontiers[side]) {
            let mut found = Vec::new();
            for a in 0..k {
                for b in a + 1..k {
                    for_each_component(g, &state, a, b, &mut scratch, |comp| {
                        let mut s = state.clone();
                        for &v in comp {
                            s[v] = if s[v] == a { b } else { a };
                        }
                        found.push(s);
                    });
                }
            }
            for s in found {
                if parents[side].contains_key(&s) {
                    continue;
                }
                parents[side].insert(s.clone(), Some(state.clone()));
                if parents[1 - side].contains_key(&s) {
                    break 'search s;
                }
                if parents[0].len() + parents[1].len() > cap {
                    return Ok(Verdict::Undecided {
                        explored: parents[0].len() + parents[1].len(),
                    });
                }
                next.push(s);
            }
        }
        frontiers[side] = next;
    };

    let trace = |side: usize| {
        let mut path = vec![meet.clone()];
        while let Some(Some(p)) = parents[side].get(path.last().unwrap()) {
            path.push(p.clone());
        }
        path
    };
    let mut forward = trace(0);
    forward.reverse();
    let backward = trace(1);
    let states: Vec<&Vec<u8>> = forward.iter().chain(backward.iter().skip(1)).collect();
    let changes = states
        .windows(2)
        .map(|w| change_between(w[0], w[1]))
        .collect();
    Ok(Verdict::Equivalent(changes))
}

/// True iff every bicolored subgraph `G(i, j)` of `c` has at most one
/// connected component (isolated vertices count as components).
pub fn all_bicolored_connected(g: &Graph, c: &Coloring) -> Result<bool> {
    ensure_proper(g, c)?;
    let k = c.k() as u8;
    let mut scratch = Scratch::new(g.n());
    for a in 0..k {
        for b in a + 1..k {
            let mut count = 0;
            for_each_component(g, c.raw(), a, b, &mut scratch, |_| count += 1);
            if count > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Certifies that `c1` and `c2` are not Kempe equivalent.
///
/// When every `G(i, j)` under `c1` is connected, each Kempe change swaps two
/// colors globally, so the class of `c1` is exactly its orbit under color
/// permutations. Returns true iff that holds and `c2` lies outside the orbit.
pub fn rigidity_obstruction(g: &Graph, c1: &Coloring, c2: &Coloring) -> Result<bool> {
    check_pair_inputs(g, c1, c2)?;
    Ok(all_bicolored_connected(g, c1)? && same_up_to_color_permutation(c1, c2).is_none())
}

/// The color permutation `p` (1-based, `p[i - 1]` is the image of `i`) with
/// `p(c1(v)) = c2(v)` for every vertex, if one exists. Colors unused by `c1`
/// map to the unused images in increasing order.
pub fn same_up_to_color_permutation(c1: &Coloring, c2: &Coloring) -> Option<Vec<u8>> {
    if c1.k() != c2.k() || c1.len() != c2.len() {
        return None;
    }
    let k = c1.k();
    let mut image = vec![u8::MAX; k];
    let mut taken = vec![false; k];
    for (&x, &y) in c1.raw().iter().zip(c2.raw()) {
        match image[x as usize] {
            u8::MAX => {
                if std::mem::replace(&mut taken[y as usize], true) {
                    return None;
                }
                image[x as usize] = y;
            }
            z if z != y => return None,
            _ => {}
        }
    }
    let mut free = (0..k as u8).filter(|&y| !taken[y as usize]);
    Some(
        image
            .into_iter()
            .map(|y| if y == u8::MAX { free.next().unwrap() } else { y } + 1)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kempe::replay;

    fn col(k: usize, c: &[u8]) -> Coloring {
        Coloring::new(k, c).unwrap()
    }

    fn count(g: &Graph, k: usize) -> usize {
        enumerate_colorings(g, k, usize::MAX).unwrap().count()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(count(&Graph::complete(3), 3), 6);
        assert_eq!(count(&Graph::path(2), 2), 2);
        assert_eq!(count(&Graph::cycle(4), 2), 2);
        assert_eq!(count(&Graph::empty(0), 3), 1);
        assert_eq!(count(&Graph::complete(4), 3), 0);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<Coloring> = enumerate_colorings(&Graph::path(3), 3, 100)
            .unwrap()
            .map(Result::unwrap)
            .collect();
        assert_eq!(all.len(), 12);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].colors(), vec![1, 2, 1]);
    }

    #[test]
    fn enumeration_cap_reports_partial_count() {
        let results: Vec<_> = enumerate_colorings(&Graph::complete(3), 3, 4)
            .unwrap()
            .collect();
        assert_eq!(results.len(), 5);
        assert_eq!(
            results[4],
            Err(Error::Capacity {
                what: "proper colorings",
                limit: 4,
                reached: 4
            })
        );
        // exactly at the cap is not an error
        assert!(enumerate_colorings(&Graph::complete(3), 3, 6)
            .unwrap()
            .all(|r| r.is_ok()));
        assert!(enumerate_colorings(&Graph::path(2), 0, 6).is_err());
    }

    #[test]
    fn class_count_examples() {
        let r = count_kempe_classes(&Graph::cycle(4), 2, 1000).unwrap();
        assert_eq!((r.num_colorings, r.num_classes), (2, 1));
        let r = count_kempe_classes(&Graph::cycle(5), 3, 1000).unwrap();
        assert_eq!((r.num_colorings, r.num_classes), (30, 1));
        let r = count_kempe_classes(&Graph::complete(3), 3, 1000).unwrap();
        assert_eq!((r.num_colorings, r.num_classes), (6, 1));
        assert_eq!(r.representatives[0].colors(), vec![1, 2, 3]);
        assert_eq!(r.class_sizes, vec![6]);
    }

    #[test]
    fn truncated_report() {
        let r = count_kempe_classes(&Graph::complete(3), 3, 5).unwrap();
        assert!(r.truncated);
        assert_eq!(r.num_colorings, 5);
        assert!(!r.is_exact());
    }

    #[test]
    fn uncolorable_graph_has_no_classes() {
        let r = count_kempe_classes(&Graph::complete(4), 3, 1000).unwrap();
        assert_eq!((r.num_colorings, r.num_classes), (0, 0));
    }

    #[test]
    fn equivalence_examples() {
        let c4 = Graph::cycle(4);
        let a = col(2, &[1, 2, 1, 2]);
        let b = col(2, &[2, 1, 2, 1]);
        assert_eq!(
            are_kempe_equivalent(&c4, &a, &a, 100).unwrap(),
            Verdict::Equivalent(vec![])
        );
        match are_kempe_equivalent(&c4, &a, &b, 100).unwrap() {
            Verdict::Equivalent(w) => {
                assert_eq!(w.len(), 1);
                assert_eq!(replay(&c4, &a, &w).unwrap(), b);
            }
            other => panic!("{other:?}"),
        }
        assert!(are_kempe_equivalent(&c4, &a, &col(3, &[1, 2, 1, 2]), 100).is_err());
    }

    #[test]
    fn equivalence_witness_replays_on_longer_paths() {
        let g = Graph::cycle(5);
        let a = col(3, &[1, 2, 1, 2, 3]);
        let b = col(3, &[3, 1, 2, 3, 2]);
        match are_kempe_equivalent(&g, &a, &b, 10_000).unwrap() {
            Verdict::Equivalent(w) => assert_eq!(replay(&g, &a, &w).unwrap(), b),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equivalence_can_be_undecided() {
        let g = Graph::empty(6);
        let a = col(3, &[1; 6]);
        let b = col(3, &[3; 6]);
        assert!(matches!(
            are_kempe_equivalent(&g, &a, &b, 4).unwrap(),
            Verdict::Undecided { .. }
        ));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(
            same_up_to_color_permutation(&col(2, &[1, 2, 1]), &col(2, &[2, 1, 2])),
            Some(vec![2, 1])
        );
        assert_eq!(
            same_up_to_color_permutation(&col(3, &[1, 2, 1]), &col(3, &[1, 2, 3])),
            None
        );
        let c = col(4, &[2, 3, 2]);
        assert_eq!(same_up_to_color_permutation(&c, &c), Some(vec![1, 2, 3, 4]));
        let p = same_up_to_color_permutation(&col(3, &[1, 2]), &col(3, &[3, 1])).unwrap();
        assert_eq!(p, vec![3, 1, 2]);
    }

    #[test]
    fn rigidity_examples() {
        let tri = Graph::complete(3);
        let c = col(3, &[1, 2, 3]);
        assert!(all_bicolored_connected(&tri, &c).unwrap());
        // a global swap of colors 1 and 2 stays in the orbit
        assert!(!rigidity_obstruction(&tri, &c, &col(3, &[2, 1, 3])).unwrap());
        let path = Graph::path(3);
        assert!(!rigidity_obstruction(&path, &col(3, &[1, 2, 1]), &col(3, &[1, 2, 3])).unwrap());
    }
}
