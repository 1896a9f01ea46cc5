//! Seeded corpora of graphs and the per-instance property checks run over them.
//!
//! Random corpora use `ChaCha8Rng::seed_from_u64(seed)`. For each instance, in
//! order: `n = n_min + next_u64() % (n_max - n_min + 1)`, then for every pair
//! `u < v` in lexicographic order the edge is kept iff
//! `next_u64() % 1000 < edge_permille`. Exhaustive corpora list every edge set
//! on `n` vertices; bit `k` of the instance index selects the `k`-th pair.
//!
//! Canonical output sorts keys and contains no floats, timestamps or worker
//! counts, so it depends only on the configuration.

use itertools::Itertools;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    check_strand_theorem, check_subadditivity, corner_violations, first_strand_violation, generator_count_matches,
    k_polynomial_mismatch, strand, taylor_entry_violations, taylor_violations, SubadditivityMode,
    SubadditivityViolation,
};
use crate::betti::{eagon_reiner_table, hochster_table, t_vector, Convention, TVector};
use crate::complex::{Graph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CorpusSpec {
    Random { seed: u64, n_min: usize, n_max: usize, edge_permille: u32, count: usize },
    Exhaustive { n: usize },
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CorpusSpec::Random { n_min, n_max, edge_permille, .. } => {
                if n_min == 0 || n_min > n_max {
                    return Err(Error::Precondition(format!("bad vertex range {n_min}..={n_max}")));
                }
                if edge_permille > 1000 {
                    return Err(Error::Precondition(format!("edge probability {edge_permille}/1000 exceeds 1")));
                }
            }
            CorpusSpec::Exhaustive { n } => {
                if n * n.saturating_sub(1) / 2 > 24 {
                    return Err(Error::Precondition(format!("exhaustive enumeration on {n} vertices is too large")));
                }
            }
        }
        Ok(())
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).tuple_combinations()
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    spec.validate()?;
    Ok(match *spec {
        CorpusSpec::Random { seed, n_min, n_max, edge_permille, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let span = (n_max - n_min + 1) as u64;
            (0..count)
                .map(|_| {
                    let n = n_min + (rng.next_u64() % span) as usize;
                    let edges: Vec<_> =
                        pairs(n).filter(|_| rng.next_u64() % 1000 < u64::from(edge_permille)).collect();
                    Graph::new(n, edges).expect("generated edges are valid")
                })
                .collect()
        }
        CorpusSpec::Exhaustive { n } => {
            let all: Vec<_> = pairs(n).collect();
            (0u64..1 << all.len())
                .map(|mask| {
                    let edges = all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
                    Graph::new(n, edges).expect("enumerated edges are valid")
                })
                .collect()
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub corpora: Vec<CorpusSpec>,
    pub fields: Vec<FieldSpec>,
    pub cap: usize,
    /// Eagon–Reiner runs on instances whose index is a multiple of this; 0 disables it.
    pub dual_every: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpora: vec![CorpusSpec::Random { seed: 42, n_min: 4, n_max: 9, edge_permille: 400, count: 200 }],
            fields: vec![FieldSpec::GF2],
            cap: crate::betti::DEFAULT_CAP,
            dual_every: 4,
        }
    }
}

/// Everything computed and checked for one graph over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub index: usize,
    pub field: FieldSpec,
    pub graph: Graph,
    /// Ideal-side entries `(i, j, β_{i,j}(I))`.
    pub table: Vec<(usize, usize, u64)>,
    pub t: TVector,
    pub oracles_agree: Option<bool>,
    pub strand2_connected: bool,
    pub strand3_connected: bool,
    pub subadditivity_checked: usize,
    pub proved_violations: Vec<SubadditivityViolation>,
    /// All-pairs violations outside the proved range.
    pub findings: Vec<SubadditivityViolation>,
    pub corner_violations: Vec<(usize, usize)>,
    pub taylor_violations: Vec<usize>,
    pub taylor_entry_violations: Vec<(usize, usize)>,
    pub first_strand_violation: Option<usize>,
    pub generators_match: bool,
    pub k_polynomial_mismatch: Option<usize>,
}

impl InstanceResult {
    /// Reasons this instance breaks a proved property.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.oracles_agree == Some(false) {
            out.push("oracle disagreement".to_string());
        }
        if !self.strand2_connected || !self.strand3_connected {
            out.push("disconnected strand 2 or 3".to_string());
        }
        if !self.proved_violations.is_empty() {
            out.push("subadditivity violated for b <= 3".to_string());
        }
        if !self.corner_violations.is_empty() {
            out.push("corner property violated".to_string());
        }
        if !self.taylor_violations.is_empty() || !self.taylor_entry_violations.is_empty() {
            out.push("Taylor bounds violated".to_string());
        }
        if self.first_strand_violation.is_some() {
            out.push("first strand vanishes and reappears".to_string());
        }
        if !self.generators_match {
            out.push("generator count mismatch".to_string());
        }
        if self.k_polynomial_mismatch.is_some() {
            out.push("graded Euler characteristic mismatch".to_string());
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

pub fn check_instance(index: usize, g: &Graph, field: FieldSpec, cap: usize, dual: bool) -> Result<InstanceResult> {
    let d = SimplicialComplex::independence_complex(g);
    let table = hochster_table(&d, field, cap)?;
    let oracles_agree = if dual { Some(eagon_reiner_table(&d, field, cap)?.same_entries(&table)) } else { None };
    let t = t_vector(&table);
    let strands = check_strand_theorem(&table)?;
    debug_assert_eq!(strands.passed, strand(&table, 2).connected && strand(&table, 3).connected);
    let proved = check_subadditivity(&t, SubadditivityMode::BMax(3));
    let all = check_subadditivity(&t, SubadditivityMode::AllPairs);
    Ok(InstanceResult {
        index,
        field,
        graph: g.clone(),
        table: table.entries(Convention::Ideal),
        strand2_connected: strand(&table, 2).connected,
        strand3_connected: strand(&table, 3).connected,
        subadditivity_checked: all.checked.len(),
        proved_violations: proved.violations,
        findings: all.violations.into_iter().filter(|v| !v.in_proved_range()).collect(),
        corner_violations: corner_violations(&table),
        taylor_violations: taylor_violations(&t),
        taylor_entry_violations: taylor_entry_violations(&table),
        first_strand_violation: first_strand_violation(&table),
        generators_match: generator_count_matches(&table, &vec![2; g.edge_count()]),
        k_polynomial_mismatch: k_polynomial_mismatch(&table, &d.f_vector()),
        oracles_agree,
        t,
    })
}

/// A failing instance with enough context to replay it in isolation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureBundle {
    pub corpus: usize,
    pub index: usize,
    pub field: FieldSpec,
    pub cap: usize,
    pub dual: bool,
    pub graph: Graph,
    pub reasons: Vec<String>,
    pub result: InstanceResult,
}

impl FailureBundle {
    /// Recomputes the instance; the replay matches when the result is identical.
    pub fn replay(&self) -> Result<InstanceResult> {
        check_instance(self.index, &self.graph, self.field, self.cap, self.dual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub corpus: usize,
    pub index: usize,
    pub field: FieldSpec,
    pub graph: Graph,
    pub violation: SubadditivityViolation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub tables: usize,
    pub dual_checked: usize,
    pub oracle_disagreements: usize,
    pub strand_failures: usize,
    pub subadditivity_pairs_checked: usize,
    pub proved_violations: usize,
    pub conjecture_findings: usize,
    pub structural_failures: usize,
    pub failed_instances: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusResults {
    pub spec: CorpusSpec,
    pub instances: Vec<InstanceResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessReport {
    pub config: RunConfig,
    pub version: String,
    pub summary: Summary,
    pub corpora: Vec<CorpusResults>,
    pub failures: Vec<FailureBundle>,
    pub findings: Vec<Finding>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    /// Sorted keys, compact, newline-terminated.
    pub fn canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut s = serde_json::to_string(&value).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn summary_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "graphs: {}\ntables: {}\ndual checked: {}\noracle disagreements: {}\nstrand failures: {}\n\
             subadditivity pairs checked: {}\nproved-case violations: {}\nconjecture findings: {}\n\
             structural failures: {}\nfailed instances: {}\nverdict: {}\n",
            s.graphs,
            s.tables,
            s.dual_checked,
            s.oracle_disagreements,
            s.strand_failures,
            s.subadditivity_pairs_checked,
            s.proved_violations,
            s.conjecture_findings,
            s.structural_failures,
            s.failed_instances,
            if s.passed { "PASS" } else { "FAIL" },
        );
        for f in &self.failures {
            out.push_str(&format!("failure: corpus {} instance {} over {}: {}\n", f.corpus, f.index, f.field, f.reasons.join("; ")));
        }
        for f in &self.findings {
            out.push_str(&format!(
                "finding: corpus {} instance {} over {}: t_{} = {} > {} = t_{} + t_{}\n",
                f.corpus,
                f.index,
                f.field,
                f.violation.a + f.violation.b,
                f.violation.t_sum_index,
                f.violation.t_a_plus_t_b,
                f.violation.a,
                f.violation.b
            ));
        }
        out
    }
}

/// Runs every check on every (graph, field) pair using `workers` threads.
/// The report does not depend on `workers`.
pub fn run_harness(config: &RunConfig, workers: usize) -> Result<HarnessReport> {
    if config.fields.is_empty() {
        return Err(Error::Precondition("no fields selected".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let mut corpora = Vec::new();
    for spec in &config.corpora {
        let graphs = generate_corpus(spec)?;
        let jobs: Vec<(usize, FieldSpec)> = (0..graphs.len()).cartesian_product(config.fields.iter().copied()).collect();
        let instances = pool.install(|| {
            jobs.par_iter()
                .map(|&(idx, field)| {
                    let dual = config.dual_every != 0 && idx % config.dual_every == 0;
                    check_instance(idx, &graphs[idx], field, config.cap, dual)
                })
                .collect::<Result<Vec<_>>>()
        })?;
        corpora.push(CorpusResults { spec: *spec, instances });
    }

    let mut summary = Summary::default();
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    for (c, results) in corpora.iter().enumerate() {
        summary.graphs += results.instances.len() / config.fields.len();
        for r in &results.instances {
            summary.tables += 1;
            summary.dual_checked += usize::from(r.oracles_agree.is_some());
            summary.oracle_disagreements += usize::from(r.oracles_agree == Some(false));
            summary.strand_failures += usize::from(!r.strand2_connected || !r.strand3_connected);
            summary.subadditivity_pairs_checked += r.subadditivity_checked;
            summary.proved_violations += r.proved_violations.len();
            summary.conjecture_findings += r.findings.len();
            summary.structural_failures += usize::from(
                !r.corner_violations.is_empty()
                    || !r.taylor_violations.is_empty()
                    || !r.taylor_entry_violations.is_empty()
                    || r.first_strand_violation.is_some()
                    || !r.generators_match
                    || r.k_polynomial_mismatch.is_some(),
            );
            let reasons = r.failures();
            if !reasons.is_empty() {
                failures.push(FailureBundle {
                    corpus: c,
                    index: r.index,
                    field: r.field,
                    cap: config.cap,
                    dual: r.oracles_agree.is_some(),
                    graph: r.graph.clone(),
                    reasons,
                    result: r.clone(),
                });
            }
            findings.extend(r.findings.iter().map(|&violation| Finding {
                corpus: c,
                index: r.index,
                field: r.field,
                graph: r.graph.clone(),
                violation,
            }));
        }
    }
    summary.failed_instances = failures.len();
    summary.passed = failures.is_empty();
    Ok(HarnessReport {
        config: config.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        summary,
        corpora,
        failures,
        findings,
    })
}
