//! Executes every structural and labeling claim over a corpus of graphs and
//! corona pairs, producing one report per claim.
//!
//! Instances that hit a search cap are marked skipped rather than failed.
//! Any other error, and any violated claim, is recorded as a counterexample.

use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use crate::automorphisms::{
    base_to_copy_events, decompose_corona_automorphism, enumerate_automorphisms,
    restriction_to_base, AutomorphismGroup, CoronaDecomposition,
};
use crate::config::{RunConfig, SearchLimits};
use crate::constructive::{
    compute_m, corona_edge_labeling, corona_vertex_bound, corona_vertex_labeling,
    friendship_splitting_labeling, splitting_edge_labeling, splitting_vertex_labeling,
};
use crate::corona::{neighbourhood_corona, splitting_graph, CoronaGraph};
use crate::distinguishing::{
    distinguishing_index, distinguishing_number, friendship_formula, friendship_splitting_formula,
    is_distinguishing_edge, is_distinguishing_vertex, DistinguishingReport,
};
use crate::error::{Error, Result};
use crate::families::{self, random_connected_graph, random_connected_pairs};
use crate::formats::{encode_graph6, parse_graph6};
use crate::graph::{EdgeLabeling, Graph, VertexLabeling};

pub const REPORT_SCHEMA: &str = "corona-sym/theorems/v1";

pub const THEOREM_IDS: [&str; 15] = [
    "Eq1-2",
    "counts",
    "L2.1",
    "C2.2",
    "C2.5",
    "C2.6",
    "T3.1i",
    "T3.1ii",
    "sharpness-star",
    "T3.2",
    "T3.3",
    "T3.5-trend",
    "T3.6",
    "C3.7",
    "T3.8",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    pub verdict: Verdict,
    pub detail: String,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instances: Vec<InstanceResult>,
    pub counterexamples: Vec<String>,
}

impl TheoremReport {
    fn new(theorem: &str) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            instances: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.instances
            .iter()
            .filter(|i| i.verdict == verdict)
            .count()
    }

    /// Runs `check` and records its outcome: `Ok(Ok(detail))` passes,
    /// `Ok(Err(detail))` is a counterexample, cap errors and an undefined
    /// distinguishing index skip.
    fn run(&mut self, instance: &str, check: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let outcome = check();
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        let (verdict, detail) = match outcome {
            Ok(Ok(detail)) => (Verdict::Pass, detail),
            Ok(Err(detail)) => (Verdict::Fail, detail),
            Err(
                e @ (Error::VertexCapExceeded { .. }
                | Error::GroupCapExceeded { .. }
                | Error::LabelingCapExceeded { .. }
                | Error::EdgeDegenerate),
            ) => (Verdict::Skipped, e.to_string()),
            Err(e) => (Verdict::Fail, format!("error: {e}")),
        };
        if verdict == Verdict::Fail {
            self.counterexamples.push(format!("{instance}: {detail}"));
        }
        self.instances.push(InstanceResult {
            instance: instance.to_string(),
            verdict,
            detail,
            wall_time_ms,
        });
    }
}

type Outcome = std::result::Result<String, String>;

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    pub schema: &'static str,
    pub config: RunConfig,
    pub reports: Vec<TheoremReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPair {
    pub name: String,
    pub g1: Graph,
    pub g2: Graph,
}

/// Single graphs feed the `G ⋆ K1` claims; pairs feed the `G1 ⋆ G2` claims.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub singles: Vec<NamedGraph>,
    pub pairs: Vec<NamedPair>,
}

fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("order-{}", g.order()))
}

impl Corpus {
    /// Named families plus graphs and pairs drawn from `seed`.
    pub fn default_corpus(seed: u64) -> Result<Corpus> {
        use families::{complete, cycle, friendship, path, star};
        let mut singles = Vec::new();
        let mut add = |name: String, graph: Graph| singles.push(NamedGraph { name, graph });
        for n in 2..=7 {
            add(format!("P{n}"), path(n)?);
        }
        for n in 3..=7 {
            add(format!("C{n}"), cycle(n)?);
        }
        for n in 2..=6 {
            add(format!("K{n}"), complete(n)?);
        }
        for n in 2..=6 {
            add(format!("K1,{n}"), star(n)?);
        }
        for n in 2..=3 {
            add(format!("F{n}"), friendship(n)?);
        }
        for i in 0..10u64 {
            let g = random_connected_graph(4 + (i as usize % 4), seed.wrapping_add(i))?;
            add(format!("random {}", g6(&g)), g);
        }

        let k1 = complete(1)?;
        let k2 = complete(2)?;
        let named = [
            ("P4*P3", path(4)?, path(3)?),
            ("P3*P2", path(3)?, path(2)?),
            ("C4*K2", cycle(4)?, k2.clone()),
            ("P3*K2", path(3)?, k2.clone()),
            ("K2*P3", k2.clone(), path(3)?),
            ("C4*P3", cycle(4)?, path(3)?),
            ("K3*P3", complete(3)?, path(3)?),
            ("C5*K2", cycle(5)?, k2.clone()),
            ("K4*K2", complete(4)?, k2),
            ("K1,3*K1", star(3)?, k1.clone()),
            ("K1,4*K1", star(4)?, k1.clone()),
            ("F2*K1", friendship(2)?, k1.clone()),
            ("P5*K1", path(5)?, k1.clone()),
            ("C6*K1", cycle(6)?, k1),
        ];
        let mut pairs: Vec<NamedPair> = named
            .into_iter()
            .map(|(name, g1, g2)| NamedPair {
                name: name.to_string(),
                g1,
                g2,
            })
            .collect();
        for (g1, g2) in random_connected_pairs(seed, 25, 2..=6, 1..=3)? {
            pairs.push(NamedPair {
                name: format!("random {}*{}", g6(&g1), g6(&g2)),
                g1,
                g2,
            });
        }
        Ok(Corpus { singles, pairs })
    }

    /// One entry per line: a single graph6 token, or two tokens for a pair.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Corpus> {
        let mut corpus = Corpus::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let parse = |t: &str| {
                parse_graph6(t)
                    .map_err(|e| Error::InvalidArgument(format!("corpus line {}: {e}", no + 1)))
            };
            match tokens.as_slice() {
                [] => {}
                [a] => corpus.singles.push(NamedGraph {
                    name: a.to_string(),
                    graph: parse(a)?,
                }),
                [a, b] => corpus.pairs.push(NamedPair {
                    name: format!("{a}*{b}"),
                    g1: parse(a)?,
                    g2: parse(b)?,
                }),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "corpus line {}: expected one or two graph6 tokens",
                        no + 1
                    )))
                }
            }
        }
        Ok(corpus)
    }
}

/// Memoised exact oracles, keyed by graph.
struct Oracles {
    limits: SearchLimits,
    groups: HashMap<Graph, Result<AutomorphismGroup>>,
    numbers: HashMap<Graph, Result<DistinguishingReport<VertexLabeling>>>,
    indices: HashMap<Graph, Result<DistinguishingReport<EdgeLabeling>>>,
}

impl Oracles {
    fn new(limits: SearchLimits) -> Self {
        Oracles {
            limits,
            groups: HashMap::new(),
            numbers: HashMap::new(),
            indices: HashMap::new(),
        }
    }

    fn group(&mut self, g: &Graph) -> Result<AutomorphismGroup> {
        let limits = self.limits;
        self.groups
            .entry(g.clone())
            .or_insert_with(|| enumerate_automorphisms(g, &limits))
            .clone()
    }

    fn number(&mut self, g: &Graph) -> Result<DistinguishingReport<VertexLabeling>> {
        let limits = self.limits;
        self.numbers
            .entry(g.clone())
            .or_insert_with(|| distinguishing_number(g, &limits))
            .clone()
    }

    fn index(&mut self, g: &Graph) -> Result<DistinguishingReport<EdgeLabeling>> {
        let limits = self.limits;
        self.indices
            .entry(g.clone())
            .or_insert_with(|| distinguishing_index(g, &limits))
            .clone()
    }
}

fn structure_hypotheses(g1: &Graph, g2: &Graph) -> bool {
    g1.order() > 1 && g1.is_connected() && g2.is_connected()
}

/// For copies that do not follow their base vertex, the base vertex and the
/// copy's target must have identical neighbourhoods in `G1`.
fn copy_map_consistent(corona: &CoronaGraph, d: &CoronaDecomposition) -> bool {
    (0..corona.index.n1)
        .all(|i| corona.g1.neighbors(d.copy_map.apply(i)) == corona.g1.neighbors(d.base.apply(i)))
}

fn check_decompositions(corona: &CoronaGraph, group: &AutomorphismGroup) -> Result<Outcome> {
    let mut twin_exchanges = 0;
    for f in group.elements() {
        let d = match decompose_corona_automorphism(corona, f) {
            Ok(d) => d,
            Err(Error::DecompositionFailure(msg)) => return Ok(Err(format!("{f}: {msg}"))),
            Err(e) => return Err(e),
        };
        if &d.reassemble(corona) != f {
            return Ok(Err(format!("{f}: reassembly differs")));
        }
        if !copy_map_consistent(corona, &d) {
            return Ok(Err(format!(
                "{f}: copy map {} inconsistent with base {}",
                d.copy_map, d.base
            )));
        }
        if !d.copies_follow_base() {
            twin_exchanges += 1;
        }
    }
    Ok(Ok(format!(
        "elements={} decomposed={} twin-copy-exchanges={twin_exchanges}",
        group.order(),
        group.order()
    )))
}

/// Ratio `D(F_n ⋆ K1) / D(F_n)` from the closed forms.
pub fn friendship_ratio(n: u64) -> f64 {
    friendship_splitting_formula(n) as f64 / friendship_formula(n) as f64
}

/// Decade grid used for the trend check.
pub const TREND_GRID: [u64; 6] = [10, 100, 1_000, 10_000, 100_000, 1_000_000];

pub fn run_theorem_harness(config: &RunConfig, corpus: &Corpus) -> Result<HarnessReport> {
    config.validate()?;
    let limits = config.limits();
    let mut oracles = Oracles::new(limits);
    let mut reports: HashMap<&str, TheoremReport> = THEOREM_IDS
        .iter()
        .map(|&id| (id, TheoremReport::new(id)))
        .collect();
    let mut report = |id: &str| reports.remove(id).expect("known theorem id");

    // corona pairs
    let coronas: Vec<Result<CoronaGraph>> = corpus
        .pairs
        .iter()
        .map(|p| neighbourhood_corona(&p.g1, &p.g2))
        .collect();

    let mut counts = report("counts");
    let mut degrees = report("Eq1-2");
    for (p, c) in corpus.pairs.iter().zip(&coronas) {
        counts.run(&p.name, || {
            let c = c.clone()?;
            let (n, m) = crate::corona::predicted_counts(&p.g1, &p.g2);
            Ok(verdict(
                c.graph.order() == n && c.graph.size() == m,
                format!(
                    "n={} (expected {n}) m={} (expected {m})",
                    c.graph.order(),
                    c.graph.size()
                ),
            ))
        });
        degrees.run(&p.name, || {
            let c = c.clone()?;
            let bad = c.formula_mismatches();
            Ok(verdict(bad.is_empty(), bad.join("; ")))
        });
    }

    let mut base_moves = report("L2.1");
    let mut max_degree = report("C2.2");
    let mut decomposition = report("C2.5");
    let mut corona_vertex = report("T3.6");
    let mut corona_vertex_rigid = report("C3.7");
    let mut corona_edge = report("T3.8");
    for (p, c) in corpus.pairs.iter().zip(&coronas) {
        let Ok(c) = c else { continue };
        if !structure_hypotheses(&p.g1, &p.g2) {
            continue;
        }
        let group = oracles.group(&c.graph);
        base_moves.run(&p.name, || {
            let group = group.clone()?;
            let events: Vec<_> = group
                .elements()
                .iter()
                .flat_map(|f| base_to_copy_events(c, f))
                .collect();
            let violations = events.iter().filter(|e| !e.degree_increases).count();
            Ok(verdict(
                violations == 0,
                format!(
                    "elements={} base-to-copy={} violations={violations}",
                    group.order(),
                    events.len()
                ),
            ))
        });
        max_degree.run(&p.name, || {
            let group = group.clone()?;
            let max = c.g1.max_degree();
            let top: Vec<usize> = (0..c.index.n1)
                .filter(|&v| c.g1.neighbors(v).len() == max)
                .collect();
            for f in group.elements() {
                if let Some(&v) = top.iter().find(|&&v| !c.index.is_base(f.apply(v))) {
                    return Ok(Err(format!("{f} sends max-degree vertex {v} into a copy")));
                }
                if c.g1.is_regular() {
                    if let Err(e) = restriction_to_base(c, f) {
                        return Ok(Err(format!("{f}: {e}")));
                    }
                }
            }
            Ok(Ok(format!(
                "elements={} regular={}",
                group.order(),
                c.g1.is_regular()
            )))
        });
        decomposition.run(&p.name, || check_decompositions(c, &group.clone()?));

        let vertex_bases = oracles
            .number(&p.g1)
            .and_then(|a| Ok((a, oracles.number(&p.g2)?)));
        corona_vertex.run(&p.name, || {
            let group = group.clone()?;
            let (r1, r2) = vertex_bases.clone()?;
            let l = corona_vertex_labeling(&p.g1, &p.g2, &r1.witness, &r2.witness, &limits)?;
            let bound = corona_vertex_bound(r1.value as u64, r2.value as u64);
            let ok = is_distinguishing_vertex(&c.graph, &group, &l)?;
            Ok(verdict(
                ok && l.label_count() as u64 <= bound,
                format!(
                    "D1={} D2={} M={} labels={} bound={bound} distinguishing={ok}",
                    r1.value,
                    r2.value,
                    compute_m(r1.value as u64, r2.value as u64),
                    l.label_count()
                ),
            ))
        });
        if matches!(&vertex_bases, Ok((r1, _)) if r1.value == 1) {
            corona_vertex_rigid.run(&p.name, || {
                let group = group.clone()?;
                let (r1, r2) = vertex_bases.clone()?;
                let l = corona_vertex_labeling(&p.g1, &p.g2, &r1.witness, &r2.witness, &limits)?;
                let ok = is_distinguishing_vertex(&c.graph, &group, &l)?;
                Ok(verdict(
                    ok && l.label_count() <= r2.value,
                    format!(
                        "D2={} labels={} distinguishing={ok}",
                        r2.value,
                        l.label_count()
                    ),
                ))
            });
        }
        corona_edge.run(&p.name, || {
            if p.g1.order() == 2 || p.g2.order() == 2 {
                return Err(Error::EdgeDegenerate);
            }
            let group = group.clone()?;
            let r1 = oracles.index(&p.g1)?;
            let (base2, d2) = if p.g2.size() == 0 {
                (EdgeLabeling::new(&p.g2, Vec::new())?, 0)
            } else {
                let r2 = oracles.index(&p.g2)?;
                (r2.witness, r2.value)
            };
            let l = corona_edge_labeling(&p.g1, &p.g2, &r1.witness, &base2, &limits)?;
            let ok = is_distinguishing_edge(&c.graph, &group, &l)?;
            let bound = r1.value.max(d2);
            Ok(verdict(
                ok && l.label_count() <= bound,
                format!(
                    "D'1={} D'2={d2} labels={} distinguishing={ok}",
                    r1.value,
                    l.label_count()
                ),
            ))
        });
    }

    // G ⋆ K1 claims over single graphs
    let mut splitting_decomposition = report("C2.6");
    let mut splitting_vertex = report("T3.1i");
    let mut splitting_edge = report("T3.1ii");
    for s in &corpus.singles {
        let g = &s.graph;
        if g.order() < 2 || !g.is_connected() {
            continue;
        }
        let split = splitting_graph(g)?;
        let group = oracles.group(&split.graph);
        splitting_decomposition.run(&s.name, || check_decompositions(&split, &group.clone()?));
        splitting_vertex.run(&s.name, || {
            let group = group.clone()?;
            let base = oracles.number(g)?;
            let l = splitting_vertex_labeling(g, &base.witness, &limits)?;
            let ok = is_distinguishing_vertex(&split.graph, &group, &l)?;
            let split_d = oracles.number(&split.graph)?.value;
            Ok(verdict(
                ok && l.label_count() <= base.value && split_d <= base.value,
                format!(
                    "D(G)={} D(G*K1)={split_d} labels={} distinguishing={ok}",
                    base.value,
                    l.label_count()
                ),
            ))
        });
        if g.order() > 2 {
            splitting_edge.run(&s.name, || {
                let group = group.clone()?;
                let base = oracles.index(g)?;
                let l = splitting_edge_labeling(g, &base.witness, &limits)?;
                let ok = is_distinguishing_edge(&split.graph, &group, &l)?;
                let split_d = oracles.index(&split.graph)?.value;
                Ok(verdict(
                    ok && l.label_count() <= base.value && split_d <= base.value,
                    format!(
                        "D'(G)={} D'(G*K1)={split_d} labels={} distinguishing={ok}",
                        base.value,
                        l.label_count()
                    ),
                ))
            });
        }
    }

    // fixed families
    let mut star_sharpness = report("sharpness-star");
    for n in 2..=4 {
        let star = families::star(n)?;
        let split = splitting_graph(&star)?;
        star_sharpness.run(&format!("K1,{n}*K1"), || {
            let d = oracles.number(&split.graph)?.value;
            let di = oracles.index(&split.graph)?.value;
            let d_star = oracles.number(&star)?.value;
            let di_star = oracles.index(&star)?.value;
            Ok(verdict(
                d == n && di == n && d_star == n && di_star == n,
                format!("D={d} D'={di} D(star)={d_star} D'(star)={di_star} n={n}"),
            ))
        });
    }

    let mut friendship = report("T3.2");
    for n in 2..=5usize {
        let f = families::friendship(n)?;
        friendship.run(&format!("F{n}"), || {
            let d = oracles.number(&f)?.value as u64;
            let formula = friendship_formula(n as u64);
            Ok(verdict(d == formula, format!("D={d} formula={formula}")))
        });
    }

    let mut friendship_split = report("T3.3");
    for n in 2..=5usize {
        let split = splitting_graph(&families::friendship(n)?)?;
        let group = oracles.group(&split.graph);
        friendship_split.run(&format!("F{n}*K1"), || {
            let group = group.clone()?;
            let formula = friendship_splitting_formula(n as u64);
            let l = friendship_splitting_labeling(n)?;
            let ok = is_distinguishing_vertex(&split.graph, &group, &l)?;
            let mut detail = format!(
                "formula={formula} labels={} distinguishing={ok}",
                l.label_count()
            );
            let mut pass = ok && l.label_count() as u64 == formula;
            if n <= 4 {
                let d = oracles.number(&split.graph)?.value as u64;
                detail.push_str(&format!(" D={d}"));
                pass &= d == formula;
            }
            Ok(verdict(pass, detail))
        });
    }

    let mut trend = report("T3.5-trend");
    trend.run("formula n=2..50", || {
        let bad: Vec<u64> = (2..=50).filter(|&n| friendship_ratio(n) >= 1.0).collect();
        Ok(verdict(bad.is_empty(), format!("ratio >= 1 at {bad:?}")))
    });
    trend.run("decade grid", || {
        let ratios: Vec<f64> = TREND_GRID.iter().map(|&n| friendship_ratio(n)).collect();
        let monotone = ratios.windows(2).all(|w| w[1] <= w[0]);
        let at_1e4 = friendship_ratio(10_000);
        Ok(verdict(
            monotone && at_1e4 <= 0.25 && at_1e4 <= friendship_ratio(100),
            format!("ratios={ratios:?}"),
        ))
    });

    let ordered = vec![
        degrees,
        counts,
        base_moves,
        max_degree,
        decomposition,
        splitting_decomposition,
        splitting_vertex,
        splitting_edge,
        star_sharpness,
        friendship,
        friendship_split,
        trend,
        corona_vertex,
        corona_vertex_rigid,
        corona_edge,
    ];
    let passed = ordered.iter().all(TheoremReport::passed);
    Ok(HarnessReport {
        schema: REPORT_SCHEMA,
        config: config.clone(),
        reports: ordered,
        passed,
    })
}
