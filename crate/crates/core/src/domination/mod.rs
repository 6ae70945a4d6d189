//! Ordinary, strong and weak domination: membership checks, exact
//! minimum-cardinality solvers, a greedy strong upper bound, and the
//! Boutrig–Chellali inequality `γ_w + 3/(Δ+1)·γ_st ≤ n`.
//!
//! Conventions for degenerate inputs (not fixed by the literature):
//! the null graph has every domination number equal to 0, and the
//! Boutrig–Chellali check only applies to connected graphs of order ≥ 3.

mod solver;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{GraphError, SolveError};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_SOLVER_CAP: usize = 64;
pub const SOLVER_CAP_ENV: &str = "STDOM_SOLVER_CAP";

/// Which domination condition a set must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Every outside vertex has a neighbour in the set.
    Ordinary,
    /// ... a neighbour in the set of degree at least its own.
    Strong,
    /// ... a neighbour in the set of degree at most its own.
    Weak,
}

impl Kind {
    /// Whether a neighbour of degree `dominator` may dominate a vertex of
    /// degree `dominated`.
    #[inline]
    pub fn may_dominate(self, dominator: usize, dominated: usize) -> bool {
        match self {
            Kind::Ordinary => true,
            Kind::Strong => dominator >= dominated,
            Kind::Weak => dominator <= dominated,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Ordinary => "ordinary",
            Kind::Strong => "strong",
            Kind::Weak => "weak",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex set checked against one domination condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationWitness {
    pub vertices: BTreeSet<Vertex>,
    pub kind: Kind,
    pub valid: bool,
}

impl DominationWitness {
    pub fn check(g: &Graph, kind: Kind, vertices: BTreeSet<Vertex>) -> Result<Self, GraphError> {
        let valid = is_kind_dominating_set(g, kind, &vertices)?;
        Ok(Self {
            vertices,
            kind,
            valid,
        })
    }

    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaResult {
    pub value: usize,
    pub witness: DominationWitness,
    pub nodes_explored: u64,
}

/// Generic membership test behind the three public checkers.
pub fn is_kind_dominating_set(
    g: &Graph,
    kind: Kind,
    set: &BTreeSet<Vertex>,
) -> Result<bool, GraphError> {
    if let Some(&bad) = set.iter().find(|&&x| x >= g.order()) {
        return Err(GraphError::VertexOutOfRange {
            v: bad,
            n: g.order(),
        });
    }
    Ok(g.vertices().filter(|x| !set.contains(x)).all(|x| {
        g.neighbors(x)
            .iter()
            .any(|&y| set.contains(&y) && kind.may_dominate(g.degree(y), g.degree(x)))
    }))
}

pub fn is_dominating_set(g: &Graph, set: &BTreeSet<Vertex>) -> Result<bool, GraphError> {
    is_kind_dominating_set(g, Kind::Ordinary, set)
}

pub fn is_strong_dominating_set(g: &Graph, set: &BTreeSet<Vertex>) -> Result<bool, GraphError> {
    is_kind_dominating_set(g, Kind::Strong, set)
}

pub fn is_weak_dominating_set(g: &Graph, set: &BTreeSet<Vertex>) -> Result<bool, GraphError> {
    is_kind_dominating_set(g, Kind::Weak, set)
}

/// Exact solver with an order cap. Instances above the cap are refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solver {
    pub cap: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Self {
            cap: DEFAULT_SOLVER_CAP,
        }
    }
}

impl Solver {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    /// Cap from `STDOM_SOLVER_CAP`, falling back to the default when unset
    /// or unparsable.
    pub fn from_env() -> Self {
        std::env::var(SOLVER_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::with_cap)
            .unwrap_or_default()
    }

    pub fn gamma(&self, g: &Graph, kind: Kind) -> Result<GammaResult, SolveError> {
        let n = g.order();
        if n > self.cap {
            return Err(SolveError::TooLarge { n, cap: self.cap });
        }
        if n == 0 {
            return Ok(GammaResult {
                value: 0,
                witness: DominationWitness {
                    vertices: BTreeSet::new(),
                    kind,
                    valid: true,
                },
                nodes_explored: 0,
            });
        }
        let problem = solver::CoverProblem::new(g, kind);
        let out = solver::minimum_cover(&problem);
        let vertices: BTreeSet<_> = out.set.iter().collect();
        debug_assert!(is_kind_dominating_set(g, kind, &vertices).unwrap());
        Ok(GammaResult {
            value: vertices.len(),
            witness: DominationWitness {
                vertices,
                kind,
                valid: true,
            },
            nodes_explored: out.nodes,
        })
    }

    pub fn gamma_st(&self, g: &Graph) -> Result<GammaResult, SolveError> {
        self.gamma(g, Kind::Strong)
    }
}

pub fn gamma_exact(g: &Graph) -> Result<GammaResult, SolveError> {
    Solver::default().gamma(g, Kind::Ordinary)
}

pub fn gamma_st_exact(g: &Graph) -> Result<GammaResult, SolveError> {
    Solver::default().gamma(g, Kind::Strong)
}

pub fn gamma_w_exact(g: &Graph) -> Result<GammaResult, SolveError> {
    Solver::default().gamma(g, Kind::Weak)
}

/// Greedy strong dominating set: repeatedly add the vertex that
/// strong-dominates the most uncovered vertices (itself included),
/// ties to the smaller id.
pub fn greedy_strong_upper(g: &Graph) -> DominationWitness {
    let vertices = if g.order() == 0 {
        BTreeSet::new()
    } else {
        let problem = solver::CoverProblem::new(g, Kind::Strong);
        solver::greedy_cover(&problem).iter().collect()
    };
    DominationWitness {
        vertices,
        kind: Kind::Strong,
        valid: true,
    }
}

/// Vertices that `y` strong-dominates when chosen, itself included.
pub fn strong_cover_of(g: &Graph, y: Vertex) -> BTreeSet<Vertex> {
    solver::CoverProblem::new(g, Kind::Strong)
        .covers(y)
        .iter()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum BoutrigChellali {
    NotApplicable {
        n: usize,
        reason: String,
    },
    Evaluated {
        n: usize,
        gamma_w: usize,
        gamma_st: usize,
        max_degree: usize,
        /// `γ_w + 3·γ_st/(Δ+1)` as a reduced fraction.
        lhs: Ratio<u64>,
        holds: bool,
        equality: bool,
    },
}

impl BoutrigChellali {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Self::NotApplicable { .. } => None,
            Self::Evaluated { holds, .. } => Some(*holds),
        }
    }
}

/// Evaluates `γ_w(G) + 3/(Δ+1)·γ_st(G) ≤ n` in exact rational arithmetic.
pub fn check_boutrig_chellali(g: &Graph, solver: &Solver) -> Result<BoutrigChellali, SolveError> {
    let n = g.order();
    if n < 3 {
        return Ok(BoutrigChellali::NotApplicable {
            n,
            reason: "order below 3".into(),
        });
    }
    if !g.is_connected() {
        return Ok(BoutrigChellali::NotApplicable {
            n,
            reason: "disconnected".into(),
        });
    }
    let gamma_w = solver.gamma(g, Kind::Weak)?.value;
    let gamma_st = solver.gamma(g, Kind::Strong)?.value;
    let max_degree = g.max_degree();
    let lhs = Ratio::from_integer(gamma_w as u64)
        + Ratio::new(3 * gamma_st as u64, max_degree as u64 + 1);
    let bound = Ratio::from_integer(n as u64);
    Ok(BoutrigChellali::Evaluated {
        n,
        gamma_w,
        gamma_st,
        max_degree,
        lhs,
        holds: lhs <= bound,
        equality: lhs == bound,
    })
}
