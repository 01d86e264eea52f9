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

//! Desk-scale verification of the Kempe-equivalence results and a seeded
//! counterexample search for the open conjecture.
//!
//! Universally quantified claims are checked by drawing (or enumerating)
//! instances that satisfy the claim's hypotheses and computing `Kc` exactly.
//! Existence claims are checked by building the certified instance.
//!
//! Trials run in parallel. Every random trial owns a ChaCha stream derived
//! from `(seed, trial index)`, so outcomes do not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    added_components_allowed, gstarstar, prop3_graph, prop4i_graph, prop4ii_graph, sample_bpe,
    CertifiedPair, Shape,
};
use crate::error::{Error, Result};
use crate::graph::{
    bipartition, chromatic_number_with_cap, degeneracy, find_coloring, is_k_critical_with_cap,
    Graph, PartitionedGraph, DEFAULT_CHROMATIC_CAP,
};
use crate::io::GraphDocument;
use crate::reconfig::{are_kempe_equivalent, kempe_classes, Verdict, DEFAULT_STATE_CAP};

/// How many times a trial may redraw before giving up on finding an
/// instance that meets the hypotheses.
const SAMPLE_ATTEMPTS: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Bm5,
    C3e5,
    Main,
    FourCri,
    Bipar,
    Dege,
    FiveEdges,
    Prop3,
    Prop4i,
    Prop4ii,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::Bm5,
        Claim::C3e5,
        Claim::Main,
        Claim::FourCri,
        Claim::Bipar,
        Claim::Dege,
        Claim::FiveEdges,
        Claim::Prop3,
        Claim::Prop4i,
        Claim::Prop4ii,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Bm5 => "bm5",
            Claim::C3e5 => "c3e5",
            Claim::Main => "main",
            Claim::FourCri => "fourcri",
            Claim::Bipar => "bipar",
            Claim::Dege => "dege",
            Claim::FiveEdges => "fiveedges",
            Claim::Prop3 => "prop3",
            Claim::Prop4i => "prop4i",
            Claim::Prop4ii => "prop4ii",
        }
    }

    /// Claims whose instances are drawn at random and therefore need a seed.
    pub fn is_randomized(self) -> bool {
        matches!(self, Claim::Bm5 | Claim::C3e5 | Claim::Main | Claim::Dege)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::input(format!("unknown claim {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyParams {
    /// Palette size; each claim has its own default.
    pub k: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Vertex bound; each claim has its own default.
    pub max_n: Option<usize>,
    /// Upper bound on the number of added edges for sampled instances.
    pub max_ell: Option<usize>,
    /// Fixes the added-edge shape for `main`.
    pub shape: Option<Shape>,
    pub cap: usize,
    /// `fourcri` also runs the `K_4` base.
    pub extended: bool,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            k: None,
            trials: 50,
            seed: 0,
            max_n: None,
            max_ell: None,
            shape: None,
            cap: DEFAULT_STATE_CAP,
            extended: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub k: usize,
    pub detail: String,
    /// Enough to reproduce the failure: the graph plus two colorings from
    /// different classes when available.
    pub instance: GraphDocument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub trial: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub claim: String,
    pub tried: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skip>,
    pub notes: Vec<String>,
}

impl VerificationOutcome {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outcomes always serialize")
    }
}

/// Result of checking one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrialResult {
    Pass,
    Fail {
        k: usize,
        detail: String,
        instance: GraphDocument,
    },
    Skip(String),
}

fn aggregate(claim: &str, results: Vec<TrialResult>, notes: Vec<String>) -> VerificationOutcome {
    let mut outcome = VerificationOutcome {
        claim: claim.to_string(),
        tried: results.len(),
        passed: 0,
        failures: Vec::new(),
        skipped: Vec::new(),
        notes,
    };
    for (trial, r) in results.into_iter().enumerate() {
        match r {
            TrialResult::Pass => outcome.passed += 1,
            TrialResult::Fail {
                k,
                detail,
                instance,
            } => outcome.failures.push(Failure {
                trial,
                k,
                detail,
                instance,
            }),
            TrialResult::Skip(reason) => outcome.skipped.push(Skip { trial, reason }),
        }
    }
    outcome
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn document(g: &Graph, pg: Option<&PartitionedGraph>) -> GraphDocument {
    match pg {
        Some(pg) => GraphDocument::from_partitioned(pg),
        None => GraphDocument::from_graph(g),
    }
}

/// Computes `Kc(g, k)` and passes iff it is exactly one.
pub fn expect_single_class(
    g: &Graph,
    pg: Option<&PartitionedGraph>,
    k: usize,
    cap: usize,
) -> TrialResult {
    let partition = match kempe_classes(g, k, cap) {
        Ok(p) => p,
        Err(e) => return TrialResult::Skip(e.to_string()),
    };
    if partition.is_truncated() {
        return TrialResult::Skip(format!("more than {cap} proper {k}-colorings"));
    }
    match partition.num_classes() {
        1 => TrialResult::Pass,
        0 => TrialResult::Skip(format!("graph is not {k}-colorable")),
        classes => {
            let report = partition.report();
            let instance = document(g, pg)
                .with_coloring("rep1", &report.representatives[0])
                .with_coloring("rep2", &report.representatives[1]);
            TrialResult::Fail {
                k,
                detail: format!("Kc = {classes} over {} colorings", report.num_colorings),
                instance,
            }
        }
    }
}

/// Conjecture hypotheses: `k >= 4`, `l < C(k, 2)` and `chi <= k - 1`.
pub fn check_conjecture_hypotheses(pg: &PartitionedGraph, k: usize) -> Result<bool> {
    if k < 4 || pg.ell() >= binom2(k) {
        return Ok(false);
    }
    let cap = pg.n().max(DEFAULT_CHROMATIC_CAP);
    Ok(chromatic_number_with_cap(pg.graph(), cap)? < k)
}

/// Checks one instance against the conjecture; out-of-hypothesis instances
/// are skipped before any class computation.
pub fn check_conjecture_instance(pg: &PartitionedGraph, k: usize, cap: usize) -> TrialResult {
    match check_conjecture_hypotheses(pg, k) {
        Ok(true) => expect_single_class(pg.graph(), Some(pg), k, cap),
        Ok(false) => TrialResult::Skip("out of hypothesis".into()),
        Err(e) => TrialResult::Skip(e.to_string()),
    }
}

/// Runs the desk-scale check for `claim`.
pub fn verify_theorem(claim: Claim, params: &VerifyParams) -> Result<VerificationOutcome> {
    match claim {
        Claim::Bm5 => verify_bm5(params),
        Claim::C3e5 => verify_c3e5(params),
        Claim::Main => verify_main(params),
        Claim::FourCri => Ok(verify_fourcri(params)),
        Claim::Bipar => Ok(verify_bipar(params)),
        Claim::Dege => verify_dege(params),
        Claim::FiveEdges => Ok(verify_fiveedges(params)),
        Claim::Prop3 => Ok(verify_existence(claim, params.k.unwrap_or(3), params.cap)),
        Claim::Prop4i => Ok(verify_existence(claim, params.k.unwrap_or(4), params.cap)),
        Claim::Prop4ii => Ok(verify_existence(claim, params.k.unwrap_or(4), params.cap)),
    }
}

fn run_trials(trials: usize, f: impl Fn(usize) -> TrialResult + Sync + Send) -> Vec<TrialResult> {
    (0..trials).into_par_iter().map(f).collect()
}

/// Splits `n` vertices into nonempty sides `S`, `T` at random.
fn random_sides<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> (usize, usize) {
    let n = rng.gen_range(min_n..=max_n);
    let n_s = rng.gen_range(1..n);
    (n_s, n - n_s)
}

/// Draws instances until `accept` takes one or the attempts run out.
fn sample_until<R: Rng>(
    rng: &mut R,
    mut draw: impl FnMut(&mut R) -> Result<PartitionedGraph>,
    mut accept: impl FnMut(&PartitionedGraph) -> Result<bool>,
) -> Option<PartitionedGraph> {
    for _ in 0..SAMPLE_ATTEMPTS {
        let Ok(pg) = draw(rng) else { continue };
        if let Ok(true) = accept(&pg) {
            return Some(pg);
        }
    }
    None
}

fn verify_bm5(params: &VerifyParams) -> Result<VerificationOutcome> {
    let k = params.k.unwrap_or(4);
    if k < 4 {
        return Err(Error::input(format!("bm5 needs k >= 4, got {k}")));
    }
    let max_n = params.max_n.unwrap_or(10).max(2);
    let max_ell = params.max_ell.unwrap_or(5).min(binom2(k) - 1);
    let results = run_trials(params.trials, |trial| {
        let mut rng = trial_rng(params.seed, trial);
        let pg = sample_until(
            &mut rng,
            |rng| {
                let (n_s, n_t) = random_sides(rng, 2, max_n);
                let room = (n_s / 2 + n_t / 2).min(max_ell);
                let ell = rng.gen_range(0..=room);
                let density = rng.gen_range(0.3..0.9);
                sample_bpe(rng, n_s, n_t, density, ell, Shape::Matching)
            },
            |pg| Ok(pg.is_matching() && pg.ell() < binom2(k)),
        );
        match pg {
            Some(pg) => expect_single_class(pg.graph(), Some(&pg), k, params.cap),
            None => TrialResult::Skip("no instance met the hypotheses".into()),
        }
    });
    Ok(aggregate(
        "bm5",
        results,
        vec![format!("k = {k}, l <= {max_ell}, n <= {max_n}")],
    ))
}

fn verify_c3e5(params: &VerifyParams) -> Result<VerificationOutcome> {
    if let Some(k) = params.k.filter(|&k| k != 4) {
        return Err(Error::input(format!("c3e5 is stated for k = 4, got {k}")));
    }
    let max_n = params.max_n.unwrap_or(10).max(2);
    let max_ell = params.max_ell.unwrap_or(5).min(5);
    let results = run_trials(params.trials, |trial| {
        let mut rng = trial_rng(params.seed, trial);
        let pg = sample_until(
            &mut rng,
            |rng| {
                let (n_s, n_t) = random_sides(rng, 2, max_n);
                let ell = rng.gen_range(0..=max_ell);
                let density = rng.gen_range(0.3..0.9);
                sample_bpe(rng, n_s, n_t, density, ell, Shape::Any)
            },
            |pg| Ok(pg.ell() <= 5 && find_coloring(pg.graph(), 3).is_some()),
        );
        match pg {
            Some(pg) => expect_single_class(pg.graph(), Some(&pg), 4, params.cap),
            None => TrialResult::Skip("no 3-colorable instance sampled".into()),
        }
    });
    Ok(aggregate(
        "c3e5",
        results,
        vec![format!("k = 4, l <= {max_ell}, n <= {max_n}")],
    ))
}

const MAIN_SHAPES: [Shape; 4] = [
    Shape::Paths,
    Shape::Cycles4Plus,
    Shape::CompleteBipartite,
    Shape::Matching,
];

fn verify_main(params: &VerifyParams) -> Result<VerificationOutcome> {
    if let Some(k) = params.k.filter(|&k| k < 4) {
        return Err(Error::input(format!("main needs k >= 4, got {k}")));
    }
    if params.shape == Some(Shape::Any) {
        return Err(Error::input("main needs a structured shape, not `any`"));
    }
    let max_n = params.max_n.unwrap_or(10).max(4);
    let results = run_trials(params.trials, |trial| {
        let mut rng = trial_rng(params.seed, trial);
        let k = params
            .k
            .unwrap_or_else(|| *[4, 5].choose(&mut rng).unwrap());
        let shape = params
            .shape
            .unwrap_or_else(|| *MAIN_SHAPES.choose(&mut rng).unwrap());
        let max_ell = params.max_ell.unwrap_or(usize::MAX).min(binom2(k) - 1);
        let min_ell = if shape == Shape::Cycles4Plus { 4 } else { 1 };
        if max_ell < min_ell {
            return TrialResult::Skip(format!("no room for shape {shape} below C({k}, 2)"));
        }
        let pg = sample_until(
            &mut rng,
            |rng| {
                let (n_s, n_t) = random_sides(rng, 4, max_n);
                let ell = rng.gen_range(min_ell..=max_ell);
                let density = rng.gen_range(0.4..0.95);
                sample_bpe(rng, n_s, n_t, density, ell, shape)
            },
            |pg| Ok(added_components_allowed(pg) && check_conjecture_hypotheses(pg, k)?),
        );
        match pg {
            Some(pg) => expect_single_class(pg.graph(), Some(&pg), k, params.cap),
            None => TrialResult::Skip(format!(
                "no {shape} instance met the hypotheses for k = {k}"
            )),
        }
    });
    let shape = params.shape.map_or("mixed".to_string(), |s| s.to_string());
    Ok(aggregate(
        "main",
        results,
        vec![format!("shape = {shape}, n <= {max_n}")],
    ))
}

fn verify_fourcri(params: &VerifyParams) -> VerificationOutcome {
    let mut bases = vec![
        ("K_2", Graph::complete(2)),
        ("P_3", Graph::path(3)),
        ("K_3", Graph::complete(3)),
        ("C_5", Graph::cycle(5)),
    ];
    if params.extended {
        bases.push(("K_4", Graph::complete(4)));
    }
    let results: Vec<TrialResult> = bases
        .par_iter()
        .map(|(name, base)| {
            let map = match gstarstar(base) {
                Ok(map) => map,
                Err(e) => {
                    return TrialResult::Fail {
                        k: 4,
                        detail: format!("{name}: {e}"),
                        instance: GraphDocument::from_graph(base),
                    }
                }
            };
            if *name == "K_4" {
                match is_k_critical_with_cap(&map.gadget, 4, map.gadget.n()) {
                    Ok(true) => {}
                    Ok(false) => {
                        return TrialResult::Fail {
                            k: 4,
                            detail: "G** of K_4 is not 4-critical".into(),
                            instance: GraphDocument::from_partitioned(&map.partition),
                        }
                    }
                    Err(e) => return TrialResult::Skip(e.to_string()),
                }
            }
            match expect_single_class(&map.gadget, Some(&map.partition), 4, params.cap) {
                TrialResult::Skip(reason) => TrialResult::Skip(format!("{name}: {reason}")),
                other => other,
            }
        })
        .collect();
    let names: Vec<&str> = bases.iter().map(|(name, _)| *name).collect();
    aggregate(
        "fourcri",
        results,
        vec![format!("bases in trial order: {}", names.join(", "))],
    )
}

/// Largest bipartite order enumerated exhaustively.
const BIPAR_MAX_N: usize = 8;

/// Canonical form of a bipartite adjacency matrix with rows `0..a` and
/// columns `a..a+b`: minimum over row orders of the sorted column bitsets.
fn bipartite_canonical(rows: usize, cols: usize, adj: &[u32]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..rows).collect();
    let mut best: Option<Vec<u32>> = None;
    permute(&mut order, 0, &mut |perm| {
        let mut columns: Vec<u32> = (0..cols)
            .map(|c| {
                perm.iter()
                    .enumerate()
                    .fold(0u32, |acc, (i, &r)| acc | (((adj[r] >> c) & 1) << i))
            })
            .collect();
        columns.sort_unstable();
        if best.as_ref().is_none_or(|b| columns < *b) {
            best = Some(columns);
        }
    });
    best.unwrap_or_default()
}

/// Calls `f` on every permutation of `items[at..]` (with the prefix fixed).
fn permute(items: &mut [usize], at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

/// Every connected bipartite graph on `2..=max_n` vertices, one per
/// isomorphism class.
pub fn connected_bipartite_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for a in 1..=n / 2 {
            let b = n - a;
            let mut seen = BTreeSet::new();
            for mask in 0u64..(1u64 << (a * b)) {
                let adj: Vec<u32> = (0..a)
                    .map(|r| ((mask >> (r * b)) & ((1 << b) - 1)) as u32)
                    .collect();
                let edges: Vec<(usize, usize)> = (0..a)
                    .flat_map(|r| (0..b).map(move |c| (r, c)))
                    .filter(|&(r, c)| adj[r] >> c & 1 == 1)
                    .map(|(r, c)| (r, a + c))
                    .collect();
                if edges.len() + 1 < n {
                    continue;
                }
                let g = Graph::from_edges(n, &edges).expect("bipartite edges are simple");
                if !g.is_connected() {
                    continue;
                }
                let mut key = bipartite_canonical(a, b, &adj);
                if a == b {
                    let transposed: Vec<u32> = (0..b)
                        .map(|c| (0..a).fold(0u32, |acc, r| acc | (((adj[r] >> c) & 1) << r)))
                        .collect();
                    key = key.min(bipartite_canonical(b, a, &transposed));
                }
                if seen.insert(key) {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn verify_bipar(params: &VerifyParams) -> VerificationOutcome {
    let max_n = params.max_n.unwrap_or(7);
    let ks: Vec<usize> = match params.k {
        Some(k) => vec![k],
        None => vec![2, 3],
    };
    let mut notes = vec![format!("k in {ks:?}")];
    if max_n > BIPAR_MAX_N {
        notes.push(format!("orders above {BIPAR_MAX_N} not enumerated"));
    }
    let graphs = connected_bipartite_graphs(max_n.min(BIPAR_MAX_N));
    notes.push(format!(
        "{} connected bipartite graphs on at most {} vertices, up to isomorphism",
        graphs.len(),
        max_n.min(BIPAR_MAX_N)
    ));
    let jobs: Vec<(&Graph, usize)> = graphs
        .iter()
        .flat_map(|g| ks.iter().map(move |&k| (g, k)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|&(g, k)| {
            if k < 2 {
                return TrialResult::Skip("k must be at least 2".into());
            }
            debug_assert!(bipartition(g).is_some());
            expect_single_class(g, None, k, params.cap)
        })
        .collect();
    aggregate("bipar", results, notes)
}

fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("sampled edges are simple")
}

fn verify_dege(params: &VerifyParams) -> Result<VerificationOutcome> {
    let max_n = params.max_n.unwrap_or(8).max(2);
    let max_k = 4;
    let results = run_trials(params.trials, |trial| {
        let mut rng = trial_rng(params.seed, trial);
        for _ in 0..SAMPLE_ATTEMPTS {
            let n = rng.gen_range(2..=max_n);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            let d = degeneracy(&g);
            let k = params.k.unwrap_or(d + 1);
            if d >= 1 && k > d && k <= max_k.max(params.k.unwrap_or(0)) {
                return expect_single_class(&g, None, k, params.cap);
            }
        }
        TrialResult::Skip("no graph met the degeneracy bound".into())
    });
    Ok(aggregate(
        "dege",
        results,
        vec![format!("k = d + 1 <= {max_k}, n <= {max_n}")],
    ))
}

/// Canonical edge list under all vertex relabelings (small graphs only).
fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    permute(&mut order, 0, &mut |perm| {
        let mut relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    best.unwrap_or_default()
}

/// Calls `f` on every subset of `0..total` of size at most `max`.
fn subsets(total: usize, max: usize, f: &mut impl FnMut(&[usize])) {
    fn go(
        start: usize,
        total: usize,
        max: usize,
        chosen: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        f(chosen);
        if chosen.len() == max {
            return;
        }
        for i in start..total {
            chosen.push(i);
            go(i + 1, total, max, chosen, f);
            chosen.pop();
        }
    }
    go(0, total, max, &mut Vec::new(), f);
}

/// Every 3-chromatic graph with at most five edges and no isolated
/// vertices, one per isomorphism class, plus the number of labeled graphs
/// examined.
pub fn three_chromatic_five_edge_graphs() -> (Vec<Graph>, usize) {
    const MAX_EDGES: usize = 5;
    let mut examined = 0;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // With no isolated vertices, five edges touch at most ten vertices.
    for n in 1..=2 * MAX_EDGES {
        let all: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let full = (1u32 << n) - 1;
        subsets(all.len(), MAX_EDGES, &mut |chosen| {
            let covered = chosen
                .iter()
                .fold(0u32, |acc, &e| acc | 1 << all[e].0 | 1 << all[e].1);
            if covered != full {
                return;
            }
            examined += 1;
            let edges: Vec<_> = chosen.iter().map(|&e| all[e]).collect();
            let g = Graph::from_edges(n, &edges).expect("subset of simple edges");
            if bipartition(&g).is_some() || find_coloring(&g, 3).is_none() {
                return;
            }
            if seen.insert(brute_canonical(&g)) {
                out.push(g);
            }
        });
    }
    (out, examined)
}

fn verify_fiveedges(params: &VerifyParams) -> VerificationOutcome {
    let (graphs, examined) = three_chromatic_five_edge_graphs();
    let results = graphs
        .par_iter()
        .map(|g| expect_single_class(g, None, 3, params.cap))
        .collect();
    aggregate(
        "fiveedges",
        results,
        vec![format!(
            "{examined} labeled graphs examined, {} 3-chromatic up to isomorphism",
            graphs.len()
        )],
    )
}

fn certified_document(pair: &CertifiedPair) -> GraphDocument {
    GraphDocument::from_partitioned(&pair.pg)
        .with_coloring("c1", &pair.c1)
        .with_coloring("c2", &pair.c2)
}

/// Builds the certified instance and confirms `Kc >= 2`: by full
/// enumeration when the colorings fit under `cap`, otherwise by exhausting
/// the class of `c1`.
pub fn check_certified_pair(pair: &CertifiedPair, cap: usize) -> (TrialResult, String) {
    let g = pair.pg.graph();
    let fail = |detail: String| TrialResult::Fail {
        k: pair.k,
        detail,
        instance: certified_document(pair),
    };
    match kempe_classes(g, pair.k, cap) {
        Ok(p) if !p.is_truncated() => {
            let (a, b) = (p.class_of(&pair.c1), p.class_of(&pair.c2));
            let note = format!(
                "full enumeration: {} colorings, Kc = {}",
                p.len(),
                p.num_classes()
            );
            if p.num_classes() >= 2 && a.is_some() && a != b {
                (TrialResult::Pass, note)
            } else {
                (fail(note.clone()), note)
            }
        }
        Ok(_) => match are_kempe_equivalent(g, &pair.c1, &pair.c2, cap) {
            Ok(Verdict::NotEquivalent) => (
                TrialResult::Pass,
                format!("more than {cap} colorings; class of c1 exhausted without reaching c2"),
            ),
            Ok(other) => {
                let note = format!("pairwise search: {other:?}");
                (fail(note.clone()), note)
            }
            Err(e) => (fail(e.to_string()), e.to_string()),
        },
        Err(e) => (TrialResult::Skip(e.to_string()), e.to_string()),
    }
}

fn verify_existence(claim: Claim, k: usize, cap: usize) -> VerificationOutcome {
    let built = match claim {
        Claim::Prop3 => prop3_graph(k),
        Claim::Prop4i => prop4i_graph(k),
        _ => prop4ii_graph(k),
    };
    let (result, note) = match built {
        Ok(pair) => check_certified_pair(&pair, cap),
        Err(e) => (
            TrialResult::Fail {
                k,
                detail: e.to_string(),
                instance: GraphDocument::from_graph(&Graph::empty(0)),
            },
            "construction failed".into(),
        ),
    };
    aggregate(claim.name(), vec![result], vec![format!("k = {k}"), note])
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchParams {
    pub k: usize,
    pub n_s: usize,
    pub n_t: usize,
    pub trials: usize,
    pub seed: u64,
    pub cap: usize,
    /// Upper bound on added edges; always kept below `C(k, 2)`.
    pub max_ell: Option<usize>,
}

/// Samples random `B + E_l` graphs satisfying the conjecture's hypotheses
/// and computes `Kc` exactly. Failures are counterexamples.
pub fn conjecture_search(params: &SearchParams) -> Result<VerificationOutcome> {
    let k = params.k;
    if k < 4 {
        return Err(Error::input(format!(
            "the conjecture concerns k >= 4, got {k}"
        )));
    }
    let max_ell = params.max_ell.unwrap_or(usize::MAX).min(binom2(k) - 1);
    let results = run_trials(params.trials, |trial| {
        let mut rng = trial_rng(params.seed, trial);
        let pg = sample_until(
            &mut rng,
            |rng| {
                let ell = rng.gen_range(0..=max_ell);
                let density = rng.gen_range(0.2..0.9);
                sample_bpe(rng, params.n_s, params.n_t, density, ell, Shape::Any)
            },
            |pg| check_conjecture_hypotheses(pg, k),
        );
        match pg {
            Some(pg) => check_conjecture_instance(&pg, k, params.cap),
            None => TrialResult::Skip("no in-hypothesis instance sampled".into()),
        }
    });
    Ok(aggregate(
        "conjecture",
        results,
        vec![format!(
            "k = {k}, |S| = {}, |T| = {}, l <= {max_ell}",
            params.n_s, params.n_t
        )],
    ))
}
