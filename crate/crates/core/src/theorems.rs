//! Bounds on the strong domination number of a modified graph, the witness
//! constructions behind them, and a verifier that compares every bound
//! against exactly computed values.
//!
//! | id    | modification         | lower                 | upper                 |
//! |-------|----------------------|-----------------------|-----------------------|
//! | `t21` | `G - v`, `deg v ≥ 1` | `γ_st - deg v`        | `γ_st + deg v - 1`    |
//! | `t22` | `G / v`, `deg v ≥ 2` | `γ_st - deg v + 1`    | `γ_st + 1`            |
//! | `t23` | `G / v`, `v` pendant | `γ_st - 1`            | `γ_st + deg u - 1`    |
//! | `cor` | `G / e`, `e = uv`, `v` pendant | same as `t23` |                       |
//! | `t24` | `G ⊙ v`              | none                  | `γ_st + 1 - 2 deg v + Σ_{u~v} deg_{G⊙v} u` |
//!
//! Here `γ_st` is `γ_st(G)` and degrees are taken in `G` unless marked.
//! Bound endpoints are reported unclamped.
//!
//! Each construction produces a candidate vertex set in the graph it targets
//! and records whether the strong-domination checker accepts it. Validity is
//! measured, never assumed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domination::{is_strong_dominating_set, strong_cover_of, GammaResult, Solver};
use crate::error::{Error, SolveError};
use crate::graph::{Edge, Graph, IdMap, Vertex};

pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "t21")]
    VertexDeletion,
    #[serde(rename = "t22")]
    VertexContraction,
    #[serde(rename = "t23")]
    PendantContraction,
    #[serde(rename = "cor")]
    PendantEdgeContraction,
    #[serde(rename = "t24")]
    NeighborhoodEdgeRemoval,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::VertexDeletion,
        TheoremId::VertexContraction,
        TheoremId::PendantContraction,
        TheoremId::PendantEdgeContraction,
        TheoremId::NeighborhoodEdgeRemoval,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::VertexDeletion => "t21",
            TheoremId::VertexContraction => "t22",
            TheoremId::PendantContraction => "t23",
            TheoremId::PendantEdgeContraction => "cor",
            TheoremId::NeighborhoodEdgeRemoval => "t24",
        }
    }

    /// Whether a violated bound contradicts a proven statement. The `⊙`
    /// bound's closed form is known to undercount, so it does not.
    pub fn violation_is_critical(self) -> bool {
        self != TheoremId::NeighborhoodEdgeRemoval
    }

    pub fn takes_edge(self) -> bool {
        self == TheoremId::PendantEdgeContraction
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem {s:?} (expected t21, t22, t23, cor or t24)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Vertex(Vertex),
    Edge(Edge),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Vertex(v) => write!(f, "v{v}"),
            Target::Edge(e) => write!(f, "e{e}"),
        }
    }
}

impl FromStr for Target {
    type Err = String;

    /// Accepts `3`, `v3`, `0-1`, `0,1` and `e0-1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("cannot parse target {s:?}");
        let body = s.trim();
        let body = body.strip_prefix(['v', 'e']).unwrap_or(body);
        if let Some((a, b)) = body.split_once(['-', ',']) {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            Edge::new(a, b).map(Target::Edge).map_err(|e| e.to_string())
        } else {
            body.parse().map(Target::Vertex).map_err(|_| bad())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// From a γ_st-set of `G` to a strong dominating set of the modified graph.
    Forward,
    /// From a γ_st-set of the modified graph back to one of `G`.
    Reverse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremConstruction {
    /// Proof case that fired, e.g. `t22 reverse (iv)`.
    pub case: String,
    pub direction: Direction,
    /// Candidate set in the ids of the graph it is meant to dominate.
    pub candidate: VertexSet,
    pub valid: bool,
    /// Cardinality the argument promises for this case.
    pub size_bound: i64,
    pub within_bound: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremConstruction {
    fn checked(
        case: impl Into<String>,
        direction: Direction,
        target: &Graph,
        candidate: VertexSet,
        size_bound: i64,
    ) -> Self {
        let valid = is_strong_dominating_set(target, &candidate).unwrap_or(false);
        let within_bound = candidate.len() as i64 <= size_bound;
        Self {
            case: case.into(),
            direction,
            candidate,
            valid,
            size_bound,
            within_bound,
            note: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.valid && self.within_bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub target: Target,
    pub gamma_before: usize,
    pub gamma_after: usize,
    pub lower: Option<i64>,
    pub upper: i64,
    pub lower_tight: bool,
    pub upper_tight: bool,
    pub violated: bool,
    pub constructions: Vec<TheoremConstruction>,
}

impl BoundReport {
    fn new(
        theorem: TheoremId,
        target: Target,
        gamma_before: usize,
        gamma_after: usize,
        lower: Option<i64>,
        upper: i64,
    ) -> Self {
        let after = gamma_after as i64;
        Self {
            theorem,
            target,
            gamma_before,
            gamma_after,
            lower,
            upper,
            lower_tight: lower == Some(after),
            upper_tight: after == upper,
            violated: lower.is_some_and(|l| after < l) || after > upper,
            constructions: Vec::new(),
        }
    }

    pub fn constructions_hold(&self) -> bool {
        self.constructions.iter().all(TheoremConstruction::holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum TheoremOutcome {
    Report(BoundReport),
    NotApplicable {
        theorem: TheoremId,
        target: Target,
        reason: String,
    },
}

impl TheoremOutcome {
    pub fn report(&self) -> Option<&BoundReport> {
        match self {
            TheoremOutcome::Report(r) => Some(r),
            TheoremOutcome::NotApplicable { .. } => None,
        }
    }
}

/// A graph together with its exact strong domination number, shared by all
/// trials on that graph.
#[derive(Clone, Debug)]
pub struct Analysis<'g> {
    pub graph: &'g Graph,
    pub solver: Solver,
    pub gamma: GammaResult,
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g Graph, solver: Solver) -> Result<Self, SolveError> {
        let gamma = solver.gamma_st(graph)?;
        Ok(Self {
            graph,
            solver,
            gamma,
        })
    }

    pub fn gamma_st(&self) -> usize {
        self.gamma.value
    }

    fn witness(&self) -> &VertexSet {
        &self.gamma.witness.vertices
    }

    fn vertex(&self, v: Vertex) -> Result<usize, Error> {
        self.graph.check_vertex(v)?;
        Ok(self.graph.degree(v))
    }

    /// `γ_st(G) - deg v ≤ γ_st(G - v) ≤ γ_st(G) + deg v - 1`.
    pub fn bounds_vertex_deletion(&self, v: Vertex) -> Result<BoundReport, Error> {
        let deg = self.vertex(v)? as i64;
        if self.graph.order() < 2 {
            return Err(Error::Precondition("graph of order below 2".into()));
        }
        if deg == 0 {
            return Err(Error::Precondition(
                "isolated vertex: deleting it lowers γ_st by one, below γ_st(G) - deg(v)".into(),
            ));
        }
        let after = self
            .solver
            .gamma_st(&self.graph.delete_vertex(v)?.graph)?
            .value;
        let g = self.gamma_st() as i64;
        Ok(BoundReport::new(
            TheoremId::VertexDeletion,
            Target::Vertex(v),
            self.gamma_st(),
            after,
            Some(g - deg),
            g + deg - 1,
        ))
    }

    /// `γ_st(G) - deg v + 1 ≤ γ_st(G / v) ≤ γ_st(G) + 1` for `deg v ≥ 2`.
    pub fn bounds_vertex_contraction(&self, v: Vertex) -> Result<BoundReport, Error> {
        let deg = self.vertex(v)? as i64;
        if deg < 2 {
            return Err(Error::Precondition(format!(
                "vertex {v} has degree {deg}; contraction bounds need degree at least 2"
            )));
        }
        let after = self
            .solver
            .gamma_st(&self.graph.contract_vertex(v)?.graph)?
            .value;
        let g = self.gamma_st() as i64;
        Ok(BoundReport::new(
            TheoremId::VertexContraction,
            Target::Vertex(v),
            self.gamma_st(),
            after,
            Some(g - deg + 1),
            g + 1,
        ))
    }

    /// `γ_st(G) - 1 ≤ γ_st(G / v) ≤ γ_st(G) + deg u - 1` for pendant `v ~ u`.
    pub fn bounds_pendant_contraction(&self, v: Vertex) -> Result<BoundReport, Error> {
        let u = self.pendant_neighbor(v)?;
        let after = self
            .solver
            .gamma_st(&self.graph.contract_vertex(v)?.graph)?
            .value;
        Ok(self.pendant_interval(TheoremId::PendantContraction, Target::Vertex(v), u, after))
    }

    /// Same interval as the pendant contraction, measured on `G / e`.
    pub fn bounds_edge_contraction_pendant(&self, e: Edge) -> Result<BoundReport, Error> {
        let (_, u) = pendant_orientation(self.graph, e)?;
        let after = self
            .solver
            .gamma_st(&self.graph.contract_edge(e)?.graph)?
            .value;
        Ok(self.pendant_interval(TheoremId::PendantEdgeContraction, Target::Edge(e), u, after))
    }

    fn pendant_interval(
        &self,
        id: TheoremId,
        target: Target,
        u: Vertex,
        after: usize,
    ) -> BoundReport {
        let g = self.gamma_st() as i64;
        let deg_u = self.graph.degree(u) as i64;
        BoundReport::new(
            id,
            target,
            self.gamma_st(),
            after,
            Some(g - 1),
            g + deg_u - 1,
        )
    }

    fn pendant_neighbor(&self, v: Vertex) -> Result<Vertex, Error> {
        if self.vertex(v)? != 1 {
            return Err(Error::Precondition(format!("vertex {v} is not pendant")));
        }
        Ok(self.graph.neighbors(v)[0])
    }

    /// `γ_st(G) + 1 - 2 deg_G(v) + Σ_{u ∈ N_G(v)} deg_{G⊙v}(u)`, possibly ≤ 0.
    pub fn odot_bound_rhs(&self, v: Vertex) -> Result<i64, Error> {
        self.vertex(v)?;
        let odot = self.graph.odot_vertex(v)?.graph;
        Ok(odot_rhs(self.graph, &odot, v, self.gamma_st()))
    }

    /// `γ_st(G ⊙ v)` against [`Analysis::odot_bound_rhs`]. There is no lower bound.
    pub fn bounds_odot(&self, v: Vertex) -> Result<BoundReport, Error> {
        self.vertex(v)?;
        let odot = self.graph.odot_vertex(v)?.graph;
        let rhs = odot_rhs(self.graph, &odot, v, self.gamma_st());
        let after = self.solver.gamma_st(&odot)?.value;
        Ok(BoundReport::new(
            TheoremId::NeighborhoodEdgeRemoval,
            Target::Vertex(v),
            self.gamma_st(),
            after,
            None,
            rhs,
        ))
    }

    /// Computes the bound, runs every construction that belongs to it, and
    /// returns the filled report. Precondition mismatches (wrong target kind,
    /// wrong degree) come back as [`TheoremOutcome::NotApplicable`].
    pub fn verify(&self, target: Target, theorem: TheoremId) -> Result<TheoremOutcome, Error> {
        match self.verify_inner(target, theorem) {
            Ok(r) => Ok(TheoremOutcome::Report(r)),
            Err(Error::Precondition(reason)) => Ok(TheoremOutcome::NotApplicable {
                theorem,
                target,
                reason,
            }),
            Err(e) => Err(e),
        }
    }

    fn verify_inner(&self, target: Target, theorem: TheoremId) -> Result<BoundReport, Error> {
        let g = self.graph;
        let d = self.witness();
        match (theorem, target) {
            (TheoremId::PendantEdgeContraction, Target::Edge(e)) => {
                let mut r = self.bounds_edge_contraction_pendant(e)?;
                let contracted = g.contract_edge(e)?;
                let s = self.solver.gamma_st(&contracted.graph)?.witness.vertices;
                r.constructions = vec![
                    construct_pendant_edge_forward(g, e, d)?,
                    construct_pendant_edge_reverse(g, e, &s)?,
                ];
                Ok(r)
            }
            (_, Target::Edge(_)) | (TheoremId::PendantEdgeContraction, _) => Err(
                Error::Precondition(format!("{theorem} does not take a {target} target")),
            ),
            (TheoremId::VertexDeletion, Target::Vertex(v)) => {
                let mut r = self.bounds_vertex_deletion(v)?;
                let s = self
                    .solver
                    .gamma_st(&g.delete_vertex(v)?.graph)?
                    .witness
                    .vertices;
                r.constructions = vec![
                    construct_deletion_forward(g, v, d)?,
                    construct_deletion_reverse(g, v, &s)?,
                ];
                Ok(r)
            }
            (TheoremId::VertexContraction, Target::Vertex(v)) => {
                let mut r = self.bounds_vertex_contraction(v)?;
                let s = self
                    .solver
                    .gamma_st(&g.contract_vertex(v)?.graph)?
                    .witness
                    .vertices;
                r.constructions = vec![
                    construct_contraction_forward(g, v, d)?,
                    construct_contraction_reverse(g, v, &s)?,
                ];
                Ok(r)
            }
            (TheoremId::PendantContraction, Target::Vertex(v)) => {
                let mut r = self.bounds_pendant_contraction(v)?;
                let s = self
                    .solver
                    .gamma_st(&g.contract_vertex(v)?.graph)?
                    .witness
                    .vertices;
                r.constructions = vec![
                    construct_pendant_forward(g, v, d)?,
                    construct_pendant_reverse(g, v, &s)?,
                ];
                Ok(r)
            }
            (TheoremId::NeighborhoodEdgeRemoval, Target::Vertex(v)) => {
                let mut r = self.bounds_odot(v)?;
                let mut c = construct_odot_witness(g, v, d)?;
                c.size_bound = r.upper;
                c.within_bound = c.candidate.len() as i64 <= r.upper;
                r.constructions = vec![c];
                Ok(r)
            }
        }
    }
}

/// One-shot convenience around [`Analysis::verify`].
pub fn verify_theorem(
    g: &Graph,
    target: Target,
    theorem: TheoremId,
    solver: &Solver,
) -> Result<TheoremOutcome, Error> {
    Analysis::new(g, *solver)?.verify(target, theorem)
}

fn odot_rhs(g: &Graph, odot: &Graph, v: Vertex, gamma_st: usize) -> i64 {
    let sum: usize = g.neighbors(v).iter().map(|&u| odot.degree(u)).sum();
    gamma_st as i64 + 1 - 2 * g.degree(v) as i64 + sum as i64
}

/// For an edge with a pendant endpoint returns `(v, u)` with `v` pendant.
/// When both endpoints are pendant (`K_2`), `v` is the smaller id.
fn pendant_orientation(g: &Graph, e: Edge) -> Result<(Vertex, Vertex), Error> {
    if !g.contains_edge(e) {
        return Err(crate::GraphError::MissingEdge { u: e.u(), v: e.v() }.into());
    }
    let (a, b) = e.endpoints();
    match (g.degree(a) == 1, g.degree(b) == 1) {
        (true, _) => Ok((a, b)),
        (false, true) => Ok((b, a)),
        (false, false) => Err(Error::Precondition(format!(
            "edge {e} has no pendant endpoint"
        ))),
    }
}

fn require_sds(g: &Graph, set: &VertexSet, what: &str) -> Result<(), Error> {
    if is_strong_dominating_set(g, set)? {
        Ok(())
    } else {
        Err(Error::InvalidWitness {
            what: format!("{what} {set:?}"),
        })
    }
}

fn neighbors(g: &Graph, v: Vertex) -> VertexSet {
    g.neighbors(v).iter().copied().collect()
}

/// Pulls a set back through `map`, sending each new id to `pick(old)`.
fn pull_back(map: &IdMap, set: &VertexSet, pick: impl Fn(Vertex) -> Vertex) -> VertexSet {
    let inv = map.inverse();
    set.iter()
        .filter_map(|&x| inv.get(x).copied().flatten())
        .map(pick)
        .collect()
}

/// Deletion, upper side: `(D ∪ N(v)) \ {v}` is a strong dominating set of `G - v`.
pub fn construct_deletion_forward(
    g: &Graph,
    v: Vertex,
    d: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    g.check_vertex(v)?;
    require_sds(g, d, "D")?;
    let deleted = g.delete_vertex(v)?;
    let case = if d.contains(&v) {
        "t21 forward (v in D)"
    } else {
        "t21 forward (v not in D)"
    };
    let mut cand = d.clone();
    cand.extend(g.neighbors(v));
    cand.remove(&v);
    let bound = d.len() as i64 + g.degree(v) as i64 - 1;
    Ok(TheoremConstruction::checked(
        case,
        Direction::Forward,
        &deleted.graph,
        deleted.map.map_set(&cand),
        bound,
    ))
}

/// Deletion, lower side: from a γ_st-set `S` of `G - v`, case (i) adds `v`
/// when it out-degrees all its neighbours, otherwise case (ii) adds `N(v)`.
pub fn construct_deletion_reverse(
    g: &Graph,
    v: Vertex,
    s: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    g.check_vertex(v)?;
    let deleted = g.delete_vertex(v)?;
    require_sds(&deleted.graph, s, "S")?;
    let mut cand = pull_back(&deleted.map, s, |x| x);
    let dv = g.degree(v);
    let (case, bound) = if g.neighbors(v).iter().all(|&u| dv > g.degree(u)) {
        cand.insert(v);
        ("t21 reverse (i)", s.len() + 1)
    } else {
        cand.extend(g.neighbors(v));
        ("t21 reverse (ii)", s.len() + dv)
    };
    Ok(TheoremConstruction::checked(
        case,
        Direction::Reverse,
        g,
        cand,
        bound as i64,
    ))
}

/// Neighbour of `v` with the largest degree in `G`, ties to the smaller id.
fn heaviest_neighbor(g: &Graph, v: Vertex) -> Option<Vertex> {
    g.neighbors(v)
        .iter()
        .copied()
        .max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))
}

/// Contraction, upper side: swap `v` for (or add) its heaviest neighbour.
pub fn construct_contraction_forward(
    g: &Graph,
    v: Vertex,
    d: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    g.check_vertex(v)?;
    if g.degree(v) < 2 {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree below 2"
        )));
    }
    require_sds(g, d, "D")?;
    let contracted = g.contract_vertex(v)?;
    let heavy = heaviest_neighbor(g, v).expect("degree at least 2");
    let mut cand = d.clone();
    let case = if cand.remove(&v) {
        "t22 forward (v in D)"
    } else {
        "t22 forward (v not in D)"
    };
    cand.insert(heavy);
    Ok(TheoremConstruction::checked(
        case,
        Direction::Forward,
        &contracted.graph,
        contracted.map.map_set(&cand),
        d.len() as i64 + 1,
    ))
}

/// Contraction, lower side: five cases on how `N(v)` meets the γ_st-set `S`
/// of `G / v`; the first that applies fires.
pub fn construct_contraction_reverse(
    g: &Graph,
    v: Vertex,
    s: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    g.check_vertex(v)?;
    let dv = g.degree(v);
    if dv < 2 {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree below 2"
        )));
    }
    let contracted = g.contract_vertex(v)?;
    require_sds(&contracted.graph, s, "S")?;
    let s_g = pull_back(&contracted.map, s, |x| x);
    let nv = neighbors(g, v);
    let inside: Vec<_> = nv.iter().filter(|u| s_g.contains(u)).collect();
    let heavy_in = inside.iter().any(|&&u| g.degree(u) >= dv);
    let heavy_out = nv.iter().any(|u| !s_g.contains(u) && g.degree(*u) >= dv);

    let case = if inside.len() == nv.len() {
        "i"
    } else if inside.is_empty() {
        "ii"
    } else if nv.iter().all(|&u| dv >= g.degree(u)) {
        "iii"
    } else if heavy_in {
        "iv"
    } else if heavy_out {
        "v"
    } else {
        unreachable!("contraction cases are exhaustive")
    };
    let mut cand = s_g;
    let bound = if matches!(case, "i" | "ii" | "iii") {
        cand.insert(v);
        s.len() + 1
    } else {
        cand.extend(nv.iter().copied());
        s.len() + dv - 1
    };
    Ok(TheoremConstruction::checked(
        format!("t22 reverse ({case})"),
        Direction::Reverse,
        g,
        cand,
        bound as i64,
    ))
}

/// Pendant contraction, upper side, computed in `G`'s ids (v removed).
/// Returns `(case, candidate, bound, note)`.
fn pendant_forward_core(
    g: &Graph,
    v: Vertex,
    u: Vertex,
    d: &VertexSet,
    label: &str,
) -> (String, VertexSet, i64, Option<String>) {
    let mut d = d.clone();
    let mut note = None;
    if !d.contains(&u) {
        note = Some(format!(
            "γ_st-set does not contain the support vertex {u}; replaced {v} by {u}"
        ));
        d.remove(&v);
        d.insert(u);
    }
    let du = g.degree(u);
    let dominated = strong_cover_of(g, u);
    let w = g
        .neighbors(u)
        .iter()
        .copied()
        .find(|&w| w != v && !d.contains(&w) && dominated.contains(&w));
    let (case, mut cand) = match w {
        None => ("i", d.clone()),
        Some(w) if du > g.degree(w) => {
            let mut c = d.clone();
            c.extend(g.neighbors(u));
            c.remove(&w);
            ("ii", c)
        }
        Some(_) => {
            let mut c = d.clone();
            c.extend(g.neighbors(u));
            c.remove(&u);
            ("iii", c)
        }
    };
    cand.remove(&v);
    let bound = d.len() as i64 + du as i64 - 1;
    (format!("{label} forward ({case})"), cand, bound, note)
}

/// Pendant contraction, upper side. `D` must be a γ_st-set of `G`; when it
/// misses the support vertex `u` the construction swaps `v` for `u` first
/// and records that in `note`.
pub fn construct_pendant_forward(
    g: &Graph,
    v: Vertex,
    d: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    g.check_vertex(v)?;
    if g.degree(v) != 1 {
        return Err(Error::Precondition(format!("vertex {v} is not pendant")));
    }
    require_sds(g, d, "D")?;
    let u = g.neighbors(v)[0];
    let contracted = g.contract_vertex(v)?;
    let (case, cand, bound, note) = pendant_forward_core(g, v, u, d, "t23");
    let mut c = TheoremConstruction::checked(
        case,
        Direction::Forward,
        &contracted.graph,
        contracted.map.map_set(&cand),
        bound,
    );
    c.note = note;
    Ok(c)
}

/// Pendant contraction, lower side: `S ∪ {u}` for a γ_st-set `S` of `G / v`.
pub fn construct_pendant_reverse(
    g: &Graph,
    v: Vertex,
    s: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    g.check_vertex(v)?;
    if g.degree(v) != 1 {
        return Err(Error::Precondition(format!("vertex {v} is not pendant")));
    }
    let u = g.neighbors(v)[0];
    let contracted = g.contract_vertex(v)?;
    require_sds(&contracted.graph, s, "S")?;
    let mut cand = pull_back(&contracted.map, s, |x| x);
    cand.insert(u);
    Ok(TheoremConstruction::checked(
        "t23 reverse",
        Direction::Reverse,
        g,
        cand,
        s.len() as i64 + 1,
    ))
}

/// The pendant construction carried onto `G / e`, where the merged vertex
/// plays the role of the support vertex.
pub fn construct_pendant_edge_forward(
    g: &Graph,
    e: Edge,
    d: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    let (v, u) = pendant_orientation(g, e)?;
    require_sds(g, d, "D")?;
    let contracted = g.contract_edge(e)?;
    let (case, cand, bound, note) = pendant_forward_core(g, v, u, d, "cor");
    let mut c = TheoremConstruction::checked(
        case,
        Direction::Forward,
        &contracted.graph,
        contracted.map.map_set(&cand),
        bound,
    );
    c.note = note;
    Ok(c)
}

pub fn construct_pendant_edge_reverse(
    g: &Graph,
    e: Edge,
    s: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    let (v, u) = pendant_orientation(g, e)?;
    let contracted = g.contract_edge(e)?;
    require_sds(&contracted.graph, s, "S")?;
    let mut cand = pull_back(&contracted.map, s, |x| if x == v { u } else { x });
    cand.insert(u);
    Ok(TheoremConstruction::checked(
        "cor reverse",
        Direction::Reverse,
        g,
        cand,
        s.len() as i64 + 1,
    ))
}

/// `D' = (D \ N(v)) ∪ {v} ∪ ⋃_{u ~ v} (N_{G⊙v}(u) \ {v})`, checked in `G ⊙ v`.
///
/// A pendant `v` leaves the graph unchanged and `D` itself is returned; the
/// formula is only meant for `deg v >= 2`. The size bound recorded here is
/// `|D| + 1 - 2 deg v + Σ deg_{G⊙v}(u)`.
pub fn construct_odot_witness(
    g: &Graph,
    v: Vertex,
    d: &VertexSet,
) -> Result<TheoremConstruction, Error> {
    g.check_vertex(v)?;
    require_sds(g, d, "D")?;
    let odot = g.odot_vertex(v)?.graph;
    let bound = odot_rhs(g, &odot, v, d.len());
    if g.degree(v) == 1 {
        return Ok(TheoremConstruction::checked(
            "t24 (v pendant)",
            Direction::Forward,
            &odot,
            d.clone(),
            bound,
        ));
    }
    let nv = neighbors(g, v);
    let mut cand: VertexSet = d.difference(&nv).copied().collect();
    cand.insert(v);
    for &u in &nv {
        cand.extend(odot.neighbors(u).iter().copied().filter(|&x| x != v));
    }
    Ok(TheoremConstruction::checked(
        "t24",
        Direction::Forward,
        &odot,
        cand,
        bound,
    ))
}
