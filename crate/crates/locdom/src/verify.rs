//! Exhaustive verification suites over small-graph universes, with
//! machine-readable pass/fail reports.
//!
//! Each suite sweeps a universe of graphs (internal isomorph-free
//! enumeration up to the cap, or an externally supplied graph6 stream),
//! checks one batch of conclusions on every graph, and returns a report
//! whose violations each carry a graph6 string that reproduces the
//! failure on its own.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::assoc::{build_associated, has_degree1_w_vertex, select_h, ChoiceRule};
use crate::bipartite::bipartition;
use crate::cactus::{blocks, cactus_stats, is_cactus, random_cactus, tightness_check, CactusParams};
use crate::enumerate::enumerate_connected;
use crate::error::Result;
use crate::families::{FamilyKind, FamilySpec};
use crate::graph::Graph;
use crate::graph6;
use crate::solver::{
    all_ld_codes, closed_form, is_global_ld_set, is_ld_set, lambda, lambda_complement,
    lambda_global, Invariant,
};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub details: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub universe: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::error::Error::Io(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = String::from("suite,universe,checked,elapsed_ms,passed,graph6,details\n");
        let head = format!(
            "{},{},{},{},{}",
            field(&self.suite),
            field(&self.universe),
            self.checked,
            self.elapsed_ms,
            self.passed()
        );
        if self.violations.is_empty() {
            out.push_str(&format!("{head},,\n"));
        } else {
            for v in &self.violations {
                out.push_str(&format!("{head},{},{}\n", field(&v.graph6), field(&v.details)));
            }
        }
        out
    }

    /// One human-readable pass/fail line.
    pub fn summary_line(&self) -> String {
        format!(
            "[{}] {} — {} graphs checked, {} violations, {} ms",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checked,
            self.violations.len(),
            self.elapsed_ms
        )
    }
}

/// The set of graphs a suite sweeps. Internal enumeration starts at
/// order 3 (smaller orders carry no content for these checks) and is
/// capped; larger sweeps are supplied as graph6 streams.
#[derive(Clone, Debug)]
pub enum Universe {
    Enumerated { n_max: usize, bipartite_only: bool },
    Stream { description: String, graphs: Vec<Graph> },
}

impl Universe {
    pub fn connected_up_to(n_max: usize) -> Self {
        Universe::Enumerated {
            n_max,
            bipartite_only: false,
        }
    }

    pub fn bipartite_up_to(n_max: usize) -> Self {
        Universe::Enumerated {
            n_max,
            bipartite_only: true,
        }
    }

    pub fn from_graph6_text(description: &str, text: &str) -> Result<Self> {
        Ok(Universe::Stream {
            description: description.to_string(),
            graphs: graph6::decode_lines(text)?,
        })
    }

    pub fn description(&self) -> String {
        match self {
            Universe::Enumerated {
                n_max,
                bipartite_only,
            } => format!(
                "connected {}graphs, 3 <= n <= {n_max}",
                if *bipartite_only { "bipartite " } else { "" }
            ),
            Universe::Stream { description, .. } => description.clone(),
        }
    }

    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Universe::Enumerated {
                n_max,
                bipartite_only,
            } => {
                let mut out = Vec::new();
                for n in 3..=*n_max {
                    out.extend(enumerate_connected(n, *bipartite_only)?);
                }
                Ok(out)
            }
            Universe::Stream { graphs, .. } => Ok(graphs.clone()),
        }
    }
}

fn run_suite<F>(name: &str, universe: &Universe, check: F) -> Result<VerificationReport>
where
    F: Fn(&Graph) -> Vec<String> + Sync,
{
    let start = Instant::now();
    let graphs = universe.graphs()?;
    let mut violations: Vec<Violation> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let g6 = graph6::encode(g);
            check(g)
                .into_iter()
                .map(move |details| Violation {
                    graph6: g6.clone(),
                    details,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    violations.sort_by(|a, b| (&a.graph6, &a.details).cmp(&(&b.graph6, &b.details)));
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        suite: name.to_string(),
        universe: universe.description(),
        checked: graphs.len() as u64,
        violations,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// The invariant and its complement differ by at most one on every graph.
pub fn suite_complement_gap(universe: &Universe) -> Result<VerificationReport> {
    run_suite("complement-gap", universe, |g| {
        let l = lambda(g).value;
        let lc = lambda_complement(g).value;
        if l.abs_diff(lc) > 1 {
            vec![format!("lambda={l} lambda_complement={lc}: gap exceeds 1")]
        } else {
            Vec::new()
        }
    })
}

/// Sandwich bounds for the global invariant, the equality case when the
/// two base invariants differ, and the biconditional with all minimum
/// codes being non-global.
pub fn suite_global_bounds(universe: &Universe) -> Result<VerificationReport> {
    run_suite("global-bounds", universe, |g| {
        let mut bad = Vec::new();
        let l = lambda(g).value;
        let lc = lambda_complement(g).value;
        let lg = lambda_global(g).value;
        if !(l.max(lc) <= lg && lg <= l.min(lc) + 1) {
            bad.push(format!("sandwich violated: l={l} lc={lc} lg={lg}"));
        }
        if l != lc && lg != l.max(lc) {
            bad.push(format!("unequal case: lg={lg} != max({l},{lc})"));
        }
        let all_codes_non_global = all_ld_codes(g).iter().all(|&s| !is_global_ld_set(g, s));
        if (lg == l + 1) != all_codes_non_global {
            bad.push(format!(
                "biconditional violated: lg={lg} l={l} all_codes_non_global={all_codes_non_global}"
            ));
        }
        // a graph with a global minimum code has complement value <= own
        if !all_codes_non_global && lc > l {
            bad.push(format!("global code exists but lc={lc} > l={l}"));
        }
        bad
    })
}

/// The global invariant is complement-invariant.
pub fn suite_global_symmetry(universe: &Universe) -> Result<VerificationReport> {
    run_suite("global-symmetry", universe, |g| {
        let a = lambda_global(g).value;
        let b = lambda_global(&g.complement()).value;
        if a != b {
            vec![format!("lambda_global(g)={a} but lambda_global(complement)={b}")]
        } else {
            Vec::new()
        }
    })
}

fn family_specs(n_min: usize, n_max: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in n_min.max(7)..=n_max {
        specs.push(FamilySpec::one_param(FamilyKind::Path, n));
        specs.push(FamilySpec::one_param(FamilyKind::Cycle, n));
    }
    for n in n_min.max(8)..=n_max {
        specs.push(FamilySpec::one_param(FamilyKind::Wheel, n));
    }
    for n in n_min.max(2)..=n_max {
        specs.push(FamilySpec::one_param(FamilyKind::Complete, n));
    }
    for n in n_min.max(4)..=n_max {
        specs.push(FamilySpec::one_param(FamilyKind::Star, n));
    }
    for n in n_min.max(4)..=n_max {
        for r in 2..=n / 2 {
            specs.push(FamilySpec::two_param(FamilyKind::CompleteBipartite, r, n - r));
        }
    }
    for n in n_min.max(6)..=n_max {
        for r in 3..=n / 2 {
            specs.push(FamilySpec::two_param(FamilyKind::Bistar, r, n - r));
        }
    }
    specs
}

/// Solver values equal the closed forms on every named family graph in
/// range.
pub fn suite_families(n_min: usize, n_max: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let specs = family_specs(n_min, n_max);
    let mut violations: Vec<Violation> = specs
        .par_iter()
        .flat_map_iter(|spec| {
            let mut bad = Vec::new();
            let g = match crate::families::generate(spec) {
                Ok(g) => g,
                Err(e) => {
                    bad.push(Violation {
                        graph6: String::new(),
                        details: format!("{spec}: generation failed: {e}"),
                    });
                    return bad;
                }
            };
            let g6 = graph6::encode(&g);
            let got = [
                (Invariant::Lambda, lambda(&g).value),
                (Invariant::LambdaComplement, lambda_complement(&g).value),
                (Invariant::LambdaGlobal, lambda_global(&g).value),
            ];
            for (which, value) in got {
                match closed_form(spec, which) {
                    Ok(expected) if expected == value => {}
                    Ok(expected) => bad.push(Violation {
                        graph6: g6.clone(),
                        details: format!("{spec} {which:?}: solver={value} closed_form={expected}"),
                    }),
                    Err(e) => bad.push(Violation {
                        graph6: g6.clone(),
                        details: format!("{spec} {which:?}: {e}"),
                    }),
                }
            }
            bad
        })
        .collect();
    violations.sort_by(|a, b| (&a.graph6, &a.details).cmp(&(&b.graph6, &b.details)));
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        suite: "families".into(),
        universe: format!("named families, {n_min} <= n <= {n_max}"),
        checked: specs.len() as u64,
        violations,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Structural bounds on bipartite graphs whose complement invariant is
/// one higher: smaller side at least 3, larger side within
/// `[3r/2 + 1, 2^r - 1]`, plus the conditional conclusions about codes
/// touching both sides and degree-1 vertices.
pub fn suite_bipartite_gap(universe: &Universe) -> Result<VerificationReport> {
    run_suite("bipartite-gap", universe, |g| {
        let mut bad = Vec::new();
        let Ok(Some(bip)) = bipartition(g) else {
            bad.push("universe contains a non-bipartite or disconnected graph".into());
            return bad;
        };
        let (r, s) = (bip.r(), bip.s());
        let l = lambda(g).value;
        let lc = lambda_complement(g).value;
        let gap_plus = lc == l + 1;
        if gap_plus {
            if r < 3 {
                bad.push(format!("gap +1 with r={r} < 3"));
            }
            if 2 * s < 3 * r + 2 {
                bad.push(format!("gap +1 with s={s} < 3r/2 + 1 (r={r})"));
            }
            if r < 63 && s > (1usize << r) - 1 {
                bad.push(format!("gap +1 with s={s} > 2^{r} - 1"));
            }
            if !has_degree1_w_vertex(g, bip.w_side) && 2 * s < 3 * r + 2 {
                bad.push(format!("no degree-1 W-vertex but s={s} < 3r/2 + 1"));
            }
        }
        // conditional conclusions hold for every minimum code
        for code in all_ld_codes(g) {
            let touches_both =
                !code.intersection(bip.u_side).is_empty() && !code.intersection(bip.w_side).is_empty();
            let is_whole_w = r < s && code == bip.w_side;
            let huge_s = r < 63 && s >= 1usize << r;
            if (touches_both || is_whole_w || huge_s) && lc > l {
                bad.push(format!(
                    "code {code} meets a sufficient condition but lc={lc} > l={l}"
                ));
            }
        }
        bad
    })
}

/// Structural properties of the associated graph for every minimum code,
/// and the two-edges-per-label / cactus conclusions on gap-plus
/// bipartite graphs whose smaller side is a code.
pub fn suite_assoc_properties(
    universe: &Universe,
    samples_per_graph: usize,
    seed: u64,
) -> Result<VerificationReport> {
    run_suite("assoc-properties", universe, move |g| {
        let mut bad = Vec::new();
        if !g.is_connected() {
            bad.push("universe contains a disconnected graph".into());
            return bad;
        }
        for code in all_ld_codes(g) {
            let a = match build_associated(g, code) {
                Ok(a) => a,
                Err(e) => {
                    bad.push(format!("build failed for code {code}: {e}"));
                    continue;
                }
            };
            let report = a.check_properties(samples_per_graph, seed);
            if !report.all_hold() {
                bad.push(format!("properties failed for code {code}: {report:?}"));
            }
        }
        // gap-plus bipartite case: two edges per label, and every
        // two-per-label subgraph has all-cactus components
        if let Ok(Some(bip)) = bipartition(g) {
            let l = lambda(g).value;
            let lc = lambda_complement(g).value;
            if lc == l + 1 && is_ld_set(g, bip.u_side) && bip.r() == l {
                let a = build_associated(g, bip.u_side).expect("U is an LD-set");
                for label in bip.u_side.iter() {
                    let count = a.edges_with_label(label).unwrap().len();
                    if count < 2 {
                        bad.push(format!("gap +1 but label {label} has {count} < 2 edges"));
                    }
                }
                for rule in [
                    ChoiceRule::Lexicographic,
                    ChoiceRule::Reverse,
                    ChoiceRule::Seeded(seed),
                ] {
                    match select_h(&a, rule) {
                        Ok(h) => {
                            if !is_cactus(&h.graph) {
                                bad.push(format!("H under {rule:?} is not all-cactus"));
                            }
                        }
                        Err(e) => bad.push(format!("H selection under {rule:?} failed: {e}")),
                    }
                }
            }
        }
        bad
    })
}

/// Identities on randomly generated cactus graphs: the Euler-style count,
/// the excess decomposition on bipartite instances, and the tightness
/// biconditional with all blocks being 4-cycles.
pub fn suite_cactus(count: usize, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut violations = Vec::new();
    for i in 0..count {
        let bipartite = i % 2 == 0;
        let params = CactusParams {
            bipartite,
            ..CactusParams::default()
        };
        let g = random_cactus(seed.wrapping_add(i as u64), &params);
        let g6 = graph6::encode(&g);
        let mut push = |details: String| {
            violations.push(Violation {
                graph6: g6.clone(),
                details,
            })
        };
        let stats = match cactus_stats(&g) {
            Ok(s) => s,
            Err(e) => {
                push(format!("generator produced a non-cactus: {e}"));
                continue;
            }
        };
        if stats.order != stats.size - stats.cy + stats.cc {
            push(format!("order identity failed: {stats:?}"));
        }
        if bipartite {
            if stats.ex < 0 {
                push(format!("negative excess on bipartite cactus: {stats:?}"));
            }
            if 4 * stats.order as i64 != 3 * stats.size as i64 + stats.ex + 4 * stats.cc as i64 {
                push(format!("excess identity failed: {stats:?}"));
            }
            if (4 * stats.order as i64) < 3 * stats.size as i64 + 4 {
                push(format!("order lower bound failed: {stats:?}"));
            }
            if g.is_connected() {
                let tight = tightness_check(&g).expect("connected cactus");
                let all_c4 = blocks(&g).iter().all(|b| b.len() == 4);
                if tight != all_c4 {
                    push(format!("tightness biconditional failed: tight={tight} all_c4={all_c4}"));
                }
            }
        }
    }
    violations.sort_by(|a, b| (&a.graph6, &a.details).cmp(&(&b.graph6, &b.details)));
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        suite: "cactus".into(),
        universe: format!("{count} seeded random cactus graphs (seed {seed})"),
        checked: count as u64,
        violations,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
