//! Exact strong (and weak) domination numbers, the graph modifications
//! `G - v`, `G / v`, `G / e`, `G ⊙ v`, and machinery that checks how the
//! strong domination number moves under each of them.

pub mod bitset;
pub mod campaign;
pub mod domination;
pub mod error;
pub mod gallery;
pub mod generate;
pub mod graph;
pub mod io;
pub mod theorems;

pub use campaign::{
    run_campaign, CampaignConfig, CampaignError, CampaignReport, Check, Family, Finding, Severity,
    Summary,
};
pub use domination::{
    check_boutrig_chellali, gamma_exact, gamma_st_exact, gamma_w_exact, greedy_strong_upper,
    is_dominating_set, is_strong_dominating_set, is_weak_dominating_set, BoutrigChellali,
    DominationWitness, GammaResult, Kind, Solver,
};
pub use error::{Error, GraphError, SolveError};
pub use generate::{gen_gnp, gen_random_tree, rng_for, PRNG_ID};
pub use graph::{Edge, Graph, IdMap, Modified, Vertex};
pub use theorems::{
    verify_theorem, Analysis, BoundReport, Direction, Target, TheoremConstruction, TheoremId,
    TheoremOutcome,
};
