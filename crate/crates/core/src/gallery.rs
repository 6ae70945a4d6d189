//! Standard families and the hand-transcribed tightness instances.
//!
//! Figure graphs live in `data/gallery/` as canonical edge lists, each with a
//! JSON sidecar naming the marked vertex (and support vertex for `fig4`), the
//! bound it is meant to attain, and the filled vertices of the drawing.
//! Vertices are numbered left to right, then top to bottom. The modified
//! graphs (`G / v`, `G ⊙ v`) are always derived with the graph operations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domination::Solver;
use crate::error::{Error, GraphError};
use crate::graph::{Graph, Vertex};
use crate::io;
use crate::theorems::{Analysis, BoundReport, Target, TheoremId, TheoremOutcome};

/// Largest figure has 141 vertices.
pub const GALLERY_SOLVER_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    LowerTight,
    UpperTight,
}

impl Expectation {
    pub fn met_by(self, r: &BoundReport) -> bool {
        !r.violated
            && match self {
                Expectation::LowerTight => r.lower_tight,
                Expectation::UpperTight => r.upper_tight,
            }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::LowerTight => "lower-tight",
            Expectation::UpperTight => "upper-tight",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryEntry {
    pub name: String,
    pub graph: Graph,
    pub target: Target,
    pub theorem: TheoremId,
    pub expected: Expectation,
    /// Support vertex of a pendant target, when the drawing labels it.
    pub support: Option<Vertex>,
    /// Filled vertices of the drawing, when transcribed.
    pub filled: Option<Vec<Vertex>>,
}

impl GalleryEntry {
    /// Runs the entry's theorem at its target with the given solver.
    pub fn verify(&self, solver: Solver) -> Result<GalleryCheck, Error> {
        let outcome = Analysis::new(&self.graph, solver)?.verify(self.target, self.theorem)?;
        let report = match outcome {
            TheoremOutcome::Report(r) => r,
            TheoremOutcome::NotApplicable { reason, .. } => {
                return Err(Error::Precondition(reason))
            }
        };
        Ok(GalleryCheck {
            matches: self.expected.met_by(&report),
            report,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryCheck {
    pub report: BoundReport,
    pub matches: bool,
}

fn family_min(name: &str, k: usize, min: usize) -> Result<(), Error> {
    if k < min {
        Err(Error::Precondition(format!("{name}({k}) needs k >= {min}")))
    } else {
        Ok(())
    }
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph, Error> {
    family_min("star", k, 1)?;
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Ok(Graph::from_edge_list(k + 1, &edges)?)
}

/// `P_k` labelled `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Result<Graph, Error> {
    family_min("path", k, 1)?;
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edge_list(k, &edges)?)
}

pub fn cycle(k: usize) -> Result<Graph, Error> {
    family_min("cycle", k, 3)?;
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.push((0, k - 1));
    Ok(Graph::from_edge_list(k, &edges)?)
}

pub fn complete(k: usize) -> Result<Graph, Error> {
    family_min("complete", k, 1)?;
    let edges: Vec<_> = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .collect();
    Ok(Graph::from_edge_list(k, &edges)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FigureId {
    Fig1,
    Fig2G,
    Fig3G,
    Fig4,
    Fig5G,
}

impl FigureId {
    pub const ALL: [FigureId; 5] = [
        FigureId::Fig1,
        FigureId::Fig2G,
        FigureId::Fig3G,
        FigureId::Fig4,
        FigureId::Fig5G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2G => "fig2_G",
            FigureId::Fig3G => "fig3_G",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5G => "fig5_G",
        }
    }

    /// Raw `(edge list, sidecar)` text as checked in.
    pub fn data(self) -> (&'static str, &'static str) {
        match self {
            FigureId::Fig1 => (
                include_str!("../data/gallery/fig1.txt"),
                include_str!("../data/gallery/fig1.json"),
            ),
            FigureId::Fig2G => (
                include_str!("../data/gallery/fig2_G.txt"),
                include_str!("../data/gallery/fig2_G.json"),
            ),
            FigureId::Fig3G => (
                include_str!("../data/gallery/fig3_G.txt"),
                include_str!("../data/gallery/fig3_G.json"),
            ),
            FigureId::Fig4 => (
                include_str!("../data/gallery/fig4.txt"),
                include_str!("../data/gallery/fig4.json"),
            ),
            FigureId::Fig5G => (
                include_str!("../data/gallery/fig5_G.txt"),
                include_str!("../data/gallery/fig5_G.json"),
            ),
        }
    }
}

impl FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown figure {s:?}"))
    }
}

#[derive(Debug, Deserialize)]
struct Sidecar {
    name: String,
    v: Vertex,
    #[serde(default)]
    u: Option<Vertex>,
    theorem: TheoremId,
    expected: Expectation,
    #[serde(default)]
    filled: Option<Vec<Vertex>>,
}

pub fn figure_graph(id: FigureId) -> Result<GalleryEntry, Error> {
    let (edges, sidecar) = id.data();
    let graph = io::parse(edges)?;
    let meta: Sidecar = serde_json::from_str(sidecar).map_err(|e| GraphError::Parse {
        line: e.line(),
        msg: format!("{} sidecar: {e}", id.name()),
    })?;
    graph.check_vertex(meta.v)?;
    if let Some(u) = meta.u {
        if !graph.has_edge(u, meta.v) {
            return Err(GraphError::MissingEdge { u, v: meta.v }.into());
        }
    }
    Ok(GalleryEntry {
        name: meta.name,
        graph,
        target: Target::Vertex(meta.v),
        theorem: meta.theorem,
        expected: meta.expected,
        support: meta.u,
        filled: meta.filled,
    })
}

/// Stars for the deletion upper bound, paths `P_{3k+1}` for the pendant
/// lower bound, then the five figures.
pub fn tightness_suite() -> Result<Vec<GalleryEntry>, Error> {
    let mut out = Vec::new();
    for k in 3..=5 {
        out.push(GalleryEntry {
            name: format!("star({k})"),
            graph: star(k)?,
            target: Target::Vertex(0),
            theorem: TheoremId::VertexDeletion,
            expected: Expectation::UpperTight,
            support: None,
            filled: Some(vec![0]),
        });
    }
    for k in 1..=4 {
        let n = 3 * k + 1;
        out.push(GalleryEntry {
            name: format!("path({n})"),
            graph: path(n)?,
            target: Target::Vertex(n - 1),
            theorem: TheoremId::PendantContraction,
            expected: Expectation::LowerTight,
            support: Some(n - 2),
            filled: None,
        });
    }
    for id in FigureId::ALL {
        out.push(figure_graph(id)?);
    }
    Ok(out)
}
