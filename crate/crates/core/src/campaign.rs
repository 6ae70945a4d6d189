//! Campaign runner: generate graphs, check every bound at every target, and
//! classify what comes back.
//!
//! Graphs are produced sequentially from the seeded streams, analysed on the
//! rayon pool, and merged back in `(family, trial, target, theorem)` order,
//! so the written CSV does not depend on the number of worker threads.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domination::{check_boutrig_chellali, BoutrigChellali, Solver};
use crate::error::Error;
use crate::gallery;
use crate::generate::{self, PRNG_ID};
use crate::graph::{Edge, Graph, Vertex};
use crate::io;
use crate::theorems::{
    Analysis, BoundReport, Target, TheoremConstruction, TheoremId, TheoremOutcome,
};

/// Exhaustive enumeration beyond this order is refused: `n = 8` is already
/// 2^28 labelled graphs.
pub const EXHAUSTIVE_MAX_N: usize = 7;

#[derive(Debug, thiserror::Error)]
pub enum CampaignError {
    #[error("invalid campaign config: {0}")]
    Config(String),
    #[error(transparent)]
    Analysis(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// One column of checks the campaign can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    T21,
    T22,
    T23,
    Cor,
    T24,
    /// `γ_w + 3γ_st/(Δ+1) ≤ n` on connected graphs of order at least 3.
    Bc,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::T21,
        Check::T22,
        Check::T23,
        Check::Cor,
        Check::T24,
        Check::Bc,
    ];

    pub fn theorem(self) -> Option<TheoremId> {
        Some(match self {
            Check::T21 => TheoremId::VertexDeletion,
            Check::T22 => TheoremId::VertexContraction,
            Check::T23 => TheoremId::PendantContraction,
            Check::Cor => TheoremId::PendantEdgeContraction,
            Check::T24 => TheoremId::NeighborhoodEdgeRemoval,
            Check::Bc => return None,
        })
    }

    pub fn code(self) -> &'static str {
        match self.theorem() {
            Some(t) => t.code(),
            None => "bc",
        }
    }
}

impl From<TheoremId> for Check {
    fn from(t: TheoremId) -> Self {
        match t {
            TheoremId::VertexDeletion => Check::T21,
            TheoremId::VertexContraction => Check::T22,
            TheoremId::PendantContraction => Check::T23,
            TheoremId::PendantEdgeContraction => Check::Cor,
            TheoremId::NeighborhoodEdgeRemoval => Check::T24,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl std::str::FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        Check::ALL
            .into_iter()
            .find(|c| c.code() == s)
            .ok_or_else(|| format!("unknown check {s:?} (expected t21, t22, t23, cor, t24 or bc)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    Info,
    TightnessHit,
    ConstructionInvalid,
    BoundViolation,
    Critical,
}

impl Severity {
    pub const ALL: [Severity; 5] = [
        Severity::Info,
        Severity::TightnessHit,
        Severity::ConstructionInvalid,
        Severity::BoundViolation,
        Severity::Critical,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::TightnessHit => "tightness-hit",
            Severity::ConstructionInvalid => "construction-invalid",
            Severity::BoundViolation => "bound-violation",
            Severity::Critical => "critical",
        }
    }

    /// Bound violations are critical except for the `G ⊙ v` bound; a failed
    /// construction is reported but never critical.
    pub fn classify(r: &BoundReport) -> Severity {
        if r.violated {
            if r.theorem.violation_is_critical() {
                Severity::Critical
            } else {
                Severity::BoundViolation
            }
        } else if !r.constructions_hold() {
            Severity::ConstructionInvalid
        } else if r.lower_tight || r.upper_tight {
            Severity::TightnessHit
        } else {
            Severity::Info
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A single order or an inclusive range `[lo, hi]` sampled uniformly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Order {
    Fixed(usize),
    Range([usize; 2]),
}

impl Order {
    fn bounds(self) -> (usize, usize) {
        match self {
            Order::Fixed(n) => (n, n),
            Order::Range([lo, hi]) => (lo, hi),
        }
    }

    fn sample(self, rng: &mut generate::GraphRng) -> usize {
        use rand::Rng;
        let (lo, hi) = self.bounds();
        if lo == hi {
            lo
        } else {
            rng.random_range(lo..=hi)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Family {
    Gnp {
        n: Order,
        p: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trials: Option<usize>,
    },
    Tree {
        n: Order,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trials: Option<usize>,
    },
    /// Every labelled graph of order `min_n..=max_n`.
    Exhaustive {
        max_n: usize,
        #[serde(default = "one")]
        min_n: usize,
    },
    Star {
        k: usize,
    },
    Path {
        k: usize,
    },
    Cycle {
        k: usize,
    },
    Complete {
        k: usize,
    },
    EdgeList {
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
    },
}

fn one() -> usize {
    1
}

fn default_trials() -> usize {
    1
}

fn default_checks() -> Vec<Check> {
    Check::ALL.to_vec()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    #[serde(default)]
    pub seed: u64,
    /// Trials for random families that do not set their own.
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub families: Vec<Family>,
    #[serde(default = "default_checks")]
    pub theorems: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub json: Option<PathBuf>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: 0,
            trials: default_trials(),
            families: Vec::new(),
            theorems: default_checks(),
            solver_cap: None,
            csv: None,
            json: None,
        }
    }
}

impl CampaignConfig {
    pub fn from_json(text: &str) -> Result<Self, CampaignError> {
        let cfg: CampaignConfig =
            serde_json::from_str(text).map_err(|e| CampaignError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CampaignError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<(), CampaignError> {
        let bad = |msg: String| Err(CampaignError::Config(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        for (i, fam) in self.families.iter().enumerate() {
            match fam {
                Family::Gnp { n, p, trials } => {
                    check_order(i, *n)?;
                    if !(0.0..=1.0).contains(p) {
                        return bad(format!("family {i}: p = {p} is outside [0, 1]"));
                    }
                    if *trials == Some(0) {
                        return bad(format!("family {i}: trials must be at least 1"));
                    }
                }
                Family::Tree { n, trials } => {
                    check_order(i, *n)?;
                    if *trials == Some(0) {
                        return bad(format!("family {i}: trials must be at least 1"));
                    }
                }
                Family::Exhaustive { max_n, min_n } => {
                    if *max_n > EXHAUSTIVE_MAX_N {
                        return bad(format!(
                            "family {i}: exhaustive max_n {max_n} exceeds {EXHAUSTIVE_MAX_N}"
                        ));
                    }
                    if *min_n > *max_n {
                        return bad(format!("family {i}: min_n {min_n} > max_n {max_n}"));
                    }
                }
                Family::EdgeList { n, edges } => {
                    Graph::from_edge_list(*n, edges)
                        .map_err(|e| CampaignError::Config(format!("family {i}: {e}")))?;
                }
                Family::Star { k }
                | Family::Path { k }
                | Family::Cycle { k }
                | Family::Complete { k } => {
                    family_graph(fam, *k)
                        .map_err(|e| CampaignError::Config(format!("family {i}: {e}")))?;
                }
            }
        }
        Ok(())
    }

    fn solver(&self) -> Solver {
        self.solver_cap
            .map_or_else(Solver::from_env, Solver::with_cap)
    }
}

fn check_order(i: usize, n: Order) -> Result<(), CampaignError> {
    let (lo, hi) = n.bounds();
    if lo == 0 || lo > hi {
        return Err(CampaignError::Config(format!(
            "family {i}: order range [{lo}, {hi}] must be non-empty and start at 1 or more"
        )));
    }
    Ok(())
}

fn family_graph(fam: &Family, k: usize) -> Result<Graph, Error> {
    match fam {
        Family::Star { .. } => gallery::star(k),
        Family::Path { .. } => gallery::path(k),
        Family::Cycle { .. } => gallery::cycle(k),
        _ => gallery::complete(k),
    }
}

/// The graphs a config generates, tagged with `(family, trial)`.
pub fn generate_graphs(cfg: &CampaignConfig) -> Result<Vec<(usize, usize, Graph)>, CampaignError> {
    cfg.validate()?;
    let mut out = Vec::new();
    for (fi, fam) in cfg.families.iter().enumerate() {
        let mut rng = generate::rng_for(cfg.seed, fi as u64);
        match fam {
            Family::Gnp { n, p, trials } => {
                for t in 0..trials.unwrap_or(cfg.trials) {
                    let order = n.sample(&mut rng);
                    out.push((fi, t, generate::gen_gnp(order, *p, &mut rng)));
                }
            }
            Family::Tree { n, trials } => {
                for t in 0..trials.unwrap_or(cfg.trials) {
                    let order = n.sample(&mut rng);
                    out.push((fi, t, generate::gen_random_tree(order, &mut rng)));
                }
            }
            Family::Exhaustive { max_n, min_n } => {
                let graphs = (*min_n..=*max_n).flat_map(generate::all_labelled_graphs);
                out.extend(graphs.enumerate().map(|(t, g)| (fi, t, g)));
            }
            Family::EdgeList { n, edges } => out.push((
                fi,
                0,
                Graph::from_edge_list(*n, edges).map_err(Error::from)?,
            )),
            Family::Star { k }
            | Family::Path { k }
            | Family::Cycle { k }
            | Family::Complete { k } => {
                out.push((fi, 0, family_graph(fam, *k)?));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub family: usize,
    pub trial: usize,
    /// Canonical serialization of the graph under test.
    pub graph: String,
    pub graph_hash: String,
    pub n: usize,
    pub m: usize,
    pub theorem: Option<Check>,
    pub target: Option<Target>,
    /// `γ_st(G)`, also for `bc` rows.
    pub gamma_before: Option<usize>,
    /// `γ_st` of the modified graph; `γ_w(G)` for `bc` rows.
    pub gamma_after: Option<usize>,
    pub lower: Option<i64>,
    /// The bound; `n` for `bc` rows.
    pub upper: Option<i64>,
    pub lower_tight: Option<bool>,
    pub upper_tight: Option<bool>,
    pub violated: Option<bool>,
    pub severity: Severity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constructions: Vec<TheoremConstruction>,
}

impl Finding {
    fn blank(family: usize, trial: usize, g: &Graph, graph: &str, hash: &str) -> Self {
        Finding {
            family,
            trial,
            graph: graph.to_owned(),
            graph_hash: hash.to_owned(),
            n: g.order(),
            m: g.size(),
            theorem: None,
            target: None,
            gamma_before: None,
            gamma_after: None,
            lower: None,
            upper: None,
            lower_tight: None,
            upper_tight: None,
            violated: None,
            severity: Severity::Info,
            detail: None,
            constructions: Vec::new(),
        }
    }

    fn fill_report(&mut self, r: BoundReport) {
        self.theorem = Some(r.theorem.into());
        self.target = Some(r.target);
        self.gamma_before = Some(r.gamma_before);
        self.gamma_after = Some(r.gamma_after);
        self.lower = r.lower;
        self.upper = Some(r.upper);
        self.lower_tight = Some(r.lower_tight);
        self.upper_tight = Some(r.upper_tight);
        self.violated = Some(r.violated);
        self.severity = Severity::classify(&r);
        let failed: Vec<String> = r
            .constructions
            .iter()
            .filter(|c| !c.holds())
            .map(|c| {
                let why = if c.valid {
                    format!("size {} > {}", c.candidate.len(), c.size_bound)
                } else {
                    "not strongly dominating".to_owned()
                };
                format!("{}: {why}", c.case)
            })
            .collect();
        if !failed.is_empty() {
            self.detail = Some(failed.join("; "));
        }
        self.constructions = r.constructions;
    }

    fn csv_record(&self) -> [String; 13] {
        fn opt<T: ToString>(x: &Option<T>) -> String {
            x.as_ref().map(T::to_string).unwrap_or_default()
        }
        [
            self.graph_hash.clone(),
            self.n.to_string(),
            self.m.to_string(),
            opt(&self.theorem),
            opt(&self.target),
            opt(&self.gamma_before),
            opt(&self.gamma_after),
            opt(&self.lower),
            opt(&self.upper),
            opt(&self.lower_tight),
            opt(&self.upper_tight),
            opt(&self.violated),
            self.severity.to_string(),
        ]
    }
}

pub const CSV_HEADER: [&str; 13] = [
    "graph-hash",
    "n",
    "m",
    "theorem",
    "target",
    "gamma-before",
    "gamma-after",
    "lower",
    "upper",
    "lower-tight",
    "upper-tight",
    "violated",
    "severity",
];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Summary {
    pub graphs: usize,
    pub skipped_graphs: usize,
    pub findings: usize,
    pub info: usize,
    pub tightness_hit: usize,
    pub construction_invalid: usize,
    pub bound_violation: usize,
    pub critical: usize,
}

impl Summary {
    fn count(&mut self, s: Severity) {
        self.findings += 1;
        *match s {
            Severity::Info => &mut self.info,
            Severity::TightnessHit => &mut self.tightness_hit,
            Severity::ConstructionInvalid => &mut self.construction_invalid,
            Severity::BoundViolation => &mut self.bound_violation,
            Severity::Critical => &mut self.critical,
        } += 1;
    }

    pub fn get(&self, s: Severity) -> usize {
        match s {
            Severity::Info => self.info,
            Severity::TightnessHit => self.tightness_hit,
            Severity::ConstructionInvalid => self.construction_invalid,
            Severity::BoundViolation => self.bound_violation,
            Severity::Critical => self.critical,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub generator: String,
    pub seed: u64,
    pub solver_cap: usize,
    pub config: CampaignConfig,
    pub summary: Summary,
    pub findings: Vec<Finding>,
}

impl CampaignReport {
    pub fn has_critical(&self) -> bool {
        self.summary.critical > 0
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CampaignError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for f in &self.findings {
            w.write_record(f.csv_record())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, out: W) -> Result<(), CampaignError> {
        let mut out = BufWriter::new(out);
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n")?;
        out.flush()?;
        Ok(())
    }

    /// Writes to the paths named in the config, if any.
    pub fn write_outputs(&self) -> Result<(), CampaignError> {
        if let Some(p) = &self.config.csv {
            self.write_csv(BufWriter::new(File::create(p)?))?;
        }
        if let Some(p) = &self.config.json {
            self.write_json(File::create(p)?)?;
        }
        Ok(())
    }
}

/// Runs every selected check on every generated graph.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport, CampaignError> {
    let solver = cfg.solver();
    let graphs = generate_graphs(cfg)?;
    let mut checks = cfg.theorems.clone();
    checks.sort();
    checks.dedup();

    let per_graph: Vec<Vec<Finding>> = graphs
        .par_iter()
        .map(|(fi, t, g)| analyse_graph(*fi, *t, g, &checks, solver))
        .collect::<Result<_, _>>()?;

    let mut summary = Summary {
        graphs: graphs.len(),
        ..Summary::default()
    };
    let mut findings = Vec::new();
    for batch in per_graph {
        if batch.len() == 1 && batch[0].theorem.is_none() {
            summary.skipped_graphs += 1;
        }
        for f in batch {
            summary.count(f.severity);
            findings.push(f);
        }
    }
    Ok(CampaignReport {
        generator: PRNG_ID.to_owned(),
        seed: cfg.seed,
        solver_cap: solver.cap,
        config: cfg.clone(),
        summary,
        findings,
    })
}

/// All findings for one graph, in `(target, theorem)` order with vertex
/// targets first, then pendant edges, then the graph-wide `bc` row.
pub fn analyse_graph(
    family: usize,
    trial: usize,
    g: &Graph,
    checks: &[Check],
    solver: Solver,
) -> Result<Vec<Finding>, CampaignError> {
    let text = io::serialize(g);
    let hash = io::hex_digest(text.as_bytes());
    let blank = || Finding::blank(family, trial, g, &text, &hash);
    if g.order() > solver.cap {
        let mut f = blank();
        f.detail = Some(format!(
            "order {} exceeds the solver cap of {}; graph skipped",
            g.order(),
            solver.cap
        ));
        return Ok(vec![f]);
    }

    let analysis = Analysis::new(g, solver).map_err(Error::from)?;
    let mut out = Vec::new();
    let mut run = |target: Target, theorem: TheoremId| -> Result<(), CampaignError> {
        let mut f = blank();
        match analysis.verify(target, theorem)? {
            TheoremOutcome::Report(r) => f.fill_report(r),
            TheoremOutcome::NotApplicable { reason, .. } => {
                f.theorem = Some(theorem.into());
                f.target = Some(target);
                f.detail = Some(format!("not applicable: {reason}"));
            }
        }
        out.push(f);
        Ok(())
    };

    let vertex_checks: Vec<TheoremId> = checks
        .iter()
        .filter_map(|c| c.theorem())
        .filter(|t| !t.takes_edge())
        .collect();
    for v in g.vertices() {
        for &t in &vertex_checks {
            let in_domain = match t {
                TheoremId::VertexContraction => g.degree(v) >= 2,
                TheoremId::PendantContraction => g.degree(v) == 1,
                _ => true,
            };
            if in_domain {
                run(Target::Vertex(v), t)?;
            }
        }
    }
    if checks.contains(&Check::Cor) {
        let pendant_edges: Vec<Edge> = g
            .edges()
            .filter(|e| g.degree(e.u()) == 1 || g.degree(e.v()) == 1)
            .collect();
        for e in pendant_edges {
            run(Target::Edge(e), TheoremId::PendantEdgeContraction)?;
        }
    }
    if checks.contains(&Check::Bc) {
        if let BoutrigChellali::Evaluated {
            n,
            gamma_w,
            gamma_st,
            lhs,
            holds,
            equality,
            ..
        } = check_boutrig_chellali(g, &solver).map_err(Error::from)?
        {
            let mut f = blank();
            f.theorem = Some(Check::Bc);
            f.gamma_before = Some(gamma_st);
            f.gamma_after = Some(gamma_w);
            f.upper = Some(n as i64);
            f.upper_tight = Some(equality);
            f.violated = Some(!holds);
            f.severity = if !holds {
                Severity::Critical
            } else if equality {
                Severity::TightnessHit
            } else {
                Severity::Info
            };
            f.detail = Some(format!("lhs = {lhs}"));
            out.push(f);
        }
    }
    Ok(out)
}
