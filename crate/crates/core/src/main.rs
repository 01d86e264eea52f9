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

//! `kempe` command-line driver.
//!
//! Exit codes: 0 success, 1 a proved claim failed, 2 usage or input error,
//! 3 state cap reached, 4 I/O or internal error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kempe::constructions::{gstarstar, prop3_graph, prop4i_graph, prop4ii_graph, Shape};
use kempe::graph::find_coloring;
use kempe::io::{export_dot, parse_graph, GraphDocument};
use kempe::reconfig::{are_kempe_equivalent, count_kempe_classes, Verdict};
use kempe::verify::{
    conjecture_search, verify_theorem, Claim, SearchParams, VerificationOutcome, VerifyParams,
};
use kempe::{Coloring, Error};

const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "kempe",
    version,
    about = "Kempe equivalence of graph colorings"
)]
struct Cli {
    /// Also write a Graphviz rendering of the relevant graph here.
    #[arg(long, global = true, value_name = "OUT")]
    dot: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count proper k-colorings and Kempe classes.
    Count {
        file: PathBuf,
        /// Palette size; defaults to the document's `k`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, env = "KEMPE_CAP", default_value_t = kempe::reconfig::DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Decide whether two stored colorings are Kempe equivalent.
    Equiv {
        file: PathBuf,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, env = "KEMPE_CAP", default_value_t = kempe::reconfig::DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Build a certified instance or a gadget graph.
    Construct {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, required_unless_present = "base")]
        k: Option<usize>,
        /// Base graph for `gss`.
        #[arg(long, value_name = "FILE")]
        base: Option<PathBuf>,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a claim at desk scale.
    Verify {
        claim: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Required for randomized claims.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_ell: Option<usize>,
        #[arg(long, env = "KEMPE_CAP", default_value_t = kempe::reconfig::DEFAULT_STATE_CAP)]
        cap: usize,
        /// Added-edge shape for `main`.
        #[arg(long)]
        shape: Option<String>,
        /// Include the larger gadget bases.
        #[arg(long)]
        extended: bool,
    },
    /// Search random instances for a counterexample to the conjecture.
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        n_s: usize,
        #[arg(long, default_value_t = 4)]
        n_t: usize,
        #[arg(long)]
        max_ell: Option<usize>,
        #[arg(long, env = "KEMPE_CAP", default_value_t = kempe::reconfig::DEFAULT_STATE_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Prop3,
    Prop4i,
    Prop4ii,
    Gss,
}

/// What a command hands back to `main`.
struct Output {
    stdout: String,
    code: u8,
    dot: Option<(
        kempe::Graph,
        Option<kempe::PartitionedGraph>,
        Option<Coloring>,
    )>,
}

fn code_for(e: &Error) -> u8 {
    match e {
        Error::Input(_) => EXIT_USAGE,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

fn read(path: &Path) -> Result<String, (u8, String)> {
    fs::read_to_string(path).map_err(|e| (EXIT_INTERNAL, format!("{}: {e}", path.display())))
}

fn lib<T>(r: kempe::Result<T>) -> Result<T, (u8, String)> {
    r.map_err(|e| (code_for(&e), e.to_string()))
}

fn plural(n: usize, word: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { word } else { many })
}

fn count(file: &Path, k: Option<usize>, cap: usize) -> Result<Output, (u8, String)> {
    let (doc, parsed) = lib(parse_graph(&read(file)?))?;
    let k = k.or(doc.k).ok_or((
        EXIT_USAGE,
        "no palette size: pass --k or set k in the document".to_string(),
    ))?;
    let report = lib(count_kempe_classes(parsed.graph(), k, cap))?;
    let dot_coloring = report.representatives.first().cloned();
    let dot = Some((
        parsed.graph().clone(),
        parsed.partitioned().cloned(),
        dot_coloring,
    ));
    if report.truncated {
        return Ok(Output {
            stdout: format!(
                "more than {} colorings (cap reached after {}), classes unknown\n",
                cap, report.num_colorings
            ),
            code: EXIT_CAPACITY,
            dot,
        });
    }
    let mut stdout = format!(
        "{}, {}\n",
        plural(report.num_colorings, "coloring", "colorings"),
        plural(report.num_classes, "class", "classes")
    );
    if report.num_classes > 1 {
        for (rep, size) in report.representatives.iter().zip(&report.class_sizes) {
            stdout.push_str(&format!("  [{rep}] size {size}\n"));
        }
    }
    Ok(Output {
        stdout,
        code: 0,
        dot,
    })
}

fn equiv(
    file: &Path,
    c1: &str,
    c2: &str,
    k: Option<usize>,
    cap: usize,
) -> Result<Output, (u8, String)> {
    let (mut doc, parsed) = lib(parse_graph(&read(file)?))?;
    if k.is_some() {
        doc.k = k;
    }
    let a = lib(doc.coloring(c1))?;
    let b = lib(doc.coloring(c2))?;
    let verdict = lib(are_kempe_equivalent(parsed.graph(), &a, &b, cap))?;
    let dot = Some((
        parsed.graph().clone(),
        parsed.partitioned().cloned(),
        Some(a),
    ));
    let (stdout, code) = match verdict {
        Verdict::Equivalent(changes) => {
            let mut s = format!(
                "equivalent, witness of {}\n",
                plural(changes.len(), "change", "changes")
            );
            for ch in &changes {
                s.push_str(&format!(
                    "  swap {}/{} on {:?}\n",
                    ch.pair.0, ch.pair.1, ch.vertices
                ));
            }
            (s, 0)
        }
        Verdict::NotEquivalent => ("not equivalent\n".to_string(), 0),
        Verdict::Undecided { explored } => (
            format!("undecided: cap reached after exploring {explored} colorings\n"),
            EXIT_CAPACITY,
        ),
    };
    Ok(Output { stdout, code, dot })
}

fn construct(
    family: Family,
    k: Option<usize>,
    base: Option<&Path>,
) -> Result<Output, (u8, String)> {
    let need_k = || k.ok_or((EXIT_USAGE, "--k is required for this family".to_string()));
    let (doc, graph, pg, coloring) = match family {
        Family::Gss => {
            let path = base.ok_or((EXIT_USAGE, "gss needs --base <file>".to_string()))?;
            let (_, parsed) = lib(parse_graph(&read(path)?))?;
            let map = lib(gstarstar(parsed.graph()))?;
            let c = find_coloring(&map.gadget, 4);
            let mut doc = GraphDocument::from_partitioned(&map.partition);
            if let Some(c) = &c {
                doc = doc.with_coloring("c1", c);
            }
            (doc, map.gadget.clone(), map.partition, c)
        }
        _ => {
            let k = need_k()?;
            let pair = lib(match family {
                Family::Prop3 => prop3_graph(k),
                Family::Prop4i => prop4i_graph(k),
                _ => prop4ii_graph(k),
            })?;
            let doc = GraphDocument::from_partitioned(&pair.pg)
                .with_coloring("c1", &pair.c1)
                .with_coloring("c2", &pair.c2);
            (doc, pair.pg.graph().clone(), pair.pg, Some(pair.c1))
        }
    };
    Ok(Output {
        stdout: doc.to_json() + "\n",
        code: 0,
        dot: Some((graph, Some(pg), coloring)),
    })
}

fn outcome_output(outcome: VerificationOutcome, failing_code: u8) -> Result<Output, (u8, String)> {
    let dot = outcome.failures.first().and_then(|f| {
        let parsed = f.instance.build().ok()?;
        let c = f
            .instance
            .colorings
            .keys()
            .next()
            .and_then(|n| f.instance.coloring(n).ok());
        Some((parsed.graph().clone(), parsed.partitioned().cloned(), c))
    });
    let code = if outcome.is_clean() { 0 } else { failing_code };
    Ok(Output {
        stdout: outcome.to_json() + "\n",
        code,
        dot,
    })
}

fn run(cli: &Cli) -> Result<Output, (u8, String)> {
    match &cli.command {
        Command::Count { file, k, cap } => count(file, *k, *cap),
        Command::Equiv {
            file,
            c1,
            c2,
            k,
            cap,
        } => equiv(file, c1, c2, *k, *cap),
        Command::Construct {
            family, k, base, ..
        } => construct(*family, *k, base.as_deref()),
        Command::Verify {
            claim,
            k,
            trials,
            seed,
            max_n,
            max_ell,
            cap,
            shape,
            extended,
        } => {
            let claim: Claim = lib(claim.parse())?;
            if claim.is_randomized() && seed.is_none() {
                return Err((
                    EXIT_USAGE,
                    format!("claim {claim} is randomized: --seed is required"),
                ));
            }
            let shape: Option<Shape> = shape
                .as_deref()
                .map(str::parse)
                .transpose()
                .map_err(|e: Error| (EXIT_USAGE, e.to_string()))?;
            let params = VerifyParams {
                k: *k,
                trials: *trials,
                seed: seed.unwrap_or(0),
                max_n: *max_n,
                max_ell: *max_ell,
                shape,
                cap: *cap,
                extended: *extended,
            };
            outcome_output(lib(verify_theorem(claim, &params))?, EXIT_CLAIM_FAILED)
        }
        Command::Search {
            k,
            trials,
            seed,
            n_s,
            n_t,
            max_ell,
            cap,
        } => {
            let params = SearchParams {
                k: *k,
                n_s: *n_s,
                n_t: *n_t,
                trials: *trials,
                seed: *seed,
                cap: *cap,
                max_ell: *max_ell,
            };
            // A counterexample to an open conjecture is a finding, not an error.
            outcome_output(lib(conjecture_search(&params))?, 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let out = match run(&cli) {
        Ok(out) => out,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(code);
        }
    };
    let target = match &cli.command {
        Command::Construct {
            output: Some(path), ..
        } => Some(path),
        _ => None,
    };
    let written = match target {
        Some(path) => fs::write(path, &out.stdout),
        None => {
            print!("{}", out.stdout);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_INTERNAL);
    }
    if let Some(path) = &cli.dot {
        match &out.dot {
            Some((g, pg, c)) => {
                let export = export_dot(g, pg.as_ref(), c.as_ref());
                if let Some(w) = export.warning {
                    eprintln!("warning: {w}");
                }
                if let Err(e) = fs::write(path, export.text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_INTERNAL);
                }
            }
            None => eprintln!("warning: nothing to render, {} not written", path.display()),
        }
    }
    ExitCode::from(out.code)
}
