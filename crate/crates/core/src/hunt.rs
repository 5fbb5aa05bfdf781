//! Random search for sequentially Cohen-Macaulay graphs on `n` vertices with
//! edge-ideal height `n/2` and no isolated vertex, testing three statements:
//!
//! 1. some vertex has degree one;
//! 2. the graph is vertex decomposable;
//! 3. `reg(R/I(G)) = a(G)`.
//!
//! Any graph passing the filter and failing a statement is emitted as a
//! [`Report`] carrying its Betti tables and decomposition trace. Sample `k` is
//! drawn from its own ChaCha stream, so results depend only on the seed and
//! sample index, and reports come out in index order whatever the thread count.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, is_sequentially_cm, Subject, HOCHSTER_RING_CAP};
use crate::decomp::vd::{is_vertex_decomposable, replay_vd_trace, VdOptions, VdVerdict};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::ideal::SqFreeIdeal;
use crate::io::GraphJson;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphModel {
    /// Each pair is an edge with probability `p`.
    ErdosRenyi { p: f64 },
    /// Uniform labeled trees, via Prüfer sequences.
    Tree,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HuntConfig {
    /// Vertex count: even, at least 4, at most 16.
    pub n: usize,
    pub model: GraphModel,
    pub seed: u64,
    pub samples: usize,
    /// State budget for the decomposability search on each sample.
    pub vd_budget: usize,
    pub fields: Vec<FieldSpec>,
    /// Graphs examined before the random samples, as indices `0..include.len()`.
    #[serde(default)]
    pub include: Vec<GraphJson>,
}

impl HuntConfig {
    pub fn new(n: usize, seed: u64, samples: usize) -> Self {
        HuntConfig {
            n,
            model: GraphModel::ErdosRenyi { p: 0.5 },
            seed,
            samples,
            vd_budget: 100_000,
            fields: FieldSpec::DEFAULT_PAIR.to_vec(),
            include: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.n < 4 || self.n % 2 != 0 {
            return bad(format!("n = {} must be even and at least 4", self.n));
        }
        if self.n > HOCHSTER_RING_CAP {
            return bad(format!("n = {} exceeds {HOCHSTER_RING_CAP}", self.n));
        }
        if let GraphModel::ErdosRenyi { p } = self.model {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("edge probability {p} outside [0, 1]"));
            }
        }
        if self.fields.is_empty() {
            return bad("no coefficient field".into());
        }
        for g in &self.include {
            if g.n != self.n {
                return bad(format!("included graph has {} vertices, expected {}", g.n, self.n));
            }
        }
        Ok(())
    }
}

/// Why a sample was set aside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Skip {
    IsolatedVertex,
    WrongHeight,
    NotSequentiallyCm,
    /// Characteristics disagree on sequential Cohen-Macaulayness.
    CharacteristicDependent,
    /// Decomposability search ran out of budget.
    VdInconclusive,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntSummary {
    pub examined: usize,
    /// Samples passing the filter.
    pub candidates: usize,
    pub violators: usize,
    pub skipped: std::collections::BTreeMap<String, usize>,
    /// `(sample index, reason)` for inconclusive samples.
    pub inconclusive: Vec<(usize, Skip)>,
}

enum Outcome {
    Skipped(Skip),
    Satisfies,
    Violates(Box<Report>),
}

pub fn sample_graph(cfg: &HuntConfig, index: usize) -> Graph {
    if let Some(g) = cfg.include.get(index) {
        return g.to_graph().expect("validated by hunt");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let n = cfg.n;
    let edges: Vec<(usize, usize)> = match cfg.model {
        GraphModel::ErdosRenyi { p } => (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect(),
        GraphModel::Tree => prufer_tree(n, &mut rng),
    };
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

fn prufer_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.shuffle(rng);
    edges
}

fn evaluate(cfg: &HuntConfig, index: usize) -> Result<Outcome> {
    let g = sample_graph(cfg, index);
    let stats = g.stats();
    if !stats.isolated_vertices.is_empty() {
        return Ok(Outcome::Skipped(Skip::IsolatedVertex));
    }
    let ideal = SqFreeIdeal::edge_ideal(&g);
    if ideal.height()? != cfg.n / 2 {
        return Ok(Outcome::Skipped(Skip::WrongHeight));
    }
    let seq_cm = cfg
        .fields
        .iter()
        .map(|&f| is_sequentially_cm(&g, f))
        .collect::<Result<Vec<_>>>()?;
    if seq_cm.iter().any(|&b| b != seq_cm[0]) {
        return Ok(Outcome::Skipped(Skip::CharacteristicDependent));
    }
    if !seq_cm[0] {
        return Ok(Outcome::Skipped(Skip::NotSequentiallyCm));
    }
    let (vd, trace) = is_vertex_decomposable(&g, &VdOptions { state_budget: cfg.vd_budget });
    if vd == VdVerdict::Inconclusive {
        return Ok(Outcome::Skipped(Skip::VdInconclusive));
    }
    let a = g.induced_matching_number();
    let tables = cfg
        .fields
        .iter()
        .map(|&f| betti_table(&ideal, Subject::Quotient, f))
        .collect::<Result<Vec<_>>>()?;
    let regs: Vec<i64> = tables.iter().map(|t| t.regularity().unwrap_or(0)).collect();

    let mut violated = Vec::new();
    if !stats.has_degree_one_vertex {
        violated.push(1);
    }
    if vd == VdVerdict::NotDecomposable {
        violated.push(2);
    }
    if regs.iter().any(|&r| r != a as i64) {
        violated.push(3);
    }
    if violated.is_empty() {
        return Ok(Outcome::Satisfies);
    }

    let mut r = Report::new(format!("hunt/n={}/seed={}/sample={index}", cfg.n, cfg.seed), &cfg.fields);
    r.record("graph", GraphJson::from_graph(&g));
    r.record("violated_statements", &violated);
    r.record("height", cfg.n / 2);
    r.record("has_degree_one_vertex", stats.has_degree_one_vertex);
    r.record("vertex_decomposable", vd);
    r.record("induced_matching_number", a);
    r.expect_per_char(
        "sequentially_cm",
        cfg.fields.iter().map(|&f| (f, Ok(true))).collect(),
        Some(true),
    );
    r.expect_per_char(
        "reg_quotient",
        cfg.fields.iter().copied().zip(regs.iter().map(|&x| Ok(x))).collect(),
        None,
    );
    r.expect_ok("vd_trace_replays", replay_vd_trace(&g, &trace), vd);
    for t in tables {
        r.certify(&format!("betti_quotient_char{}", t.field.characteristic()), t);
    }
    let dual = ideal.alexander_dual()?;
    for &f in &cfg.fields {
        r.certify(
            &format!("betti_dual_ideal_char{}", f.characteristic()),
            betti_table(&dual, Subject::Ideal, f)?,
        );
    }
    r.certify("vd_trace", &trace);
    Ok(Outcome::Violates(Box::new(r)))
}

/// Runs the search, handing each violator to `emit` in sample order.
pub fn hunt(cfg: &HuntConfig, mut emit: impl FnMut(Report)) -> Result<HuntSummary> {
    cfg.validate()?;
    let total = cfg.include.len() + cfg.samples;
    let mut summary = HuntSummary::default();
    const CHUNK: usize = 256;
    for start in (0..total).step_by(CHUNK) {
        let outcomes = (start..total.min(start + CHUNK))
            .into_par_iter()
            .map(|k| evaluate(cfg, k))
            .collect::<Result<Vec<_>>>()?;
        for (k, outcome) in (start..).zip(outcomes) {
            summary.examined += 1;
            match outcome {
                Outcome::Skipped(reason) => {
                    let key = serde_json::to_value(reason).expect("serializes");
                    *summary
                        .skipped
                        .entry(key.as_str().unwrap_or_default().to_string())
                        .or_insert(0) += 1;
                    if matches!(reason, Skip::CharacteristicDependent | Skip::VdInconclusive) {
                        summary.inconclusive.push((k, reason));
                    }
                }
                Outcome::Satisfies => summary.candidates += 1,
                Outcome::Violates(report) => {
                    summary.candidates += 1;
                    summary.violators += 1;
                    emit(*report);
                }
            }
        }
    }
    Ok(summary)
}
