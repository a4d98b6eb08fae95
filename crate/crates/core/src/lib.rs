//! Alpha-domination toolkit.
//!
//! A vertex set `X` is *alpha-dominating* when every vertex outside `X` has
//! at least `ceil(alpha * d_v)` neighbours in `X`, and *alpha-rate
//! dominating* when every vertex (inside or outside) has at least that many
//! members of its closed neighbourhood in `X`. This crate evaluates the
//! known closed-form bounds on the minimum size of such sets, builds small
//! sets with the random-set-plus-repair construction (and a deterministic
//! conditional-expectation variant), and provides a brute-force oracle for
//! graphs with at most 24 vertices.

pub mod alpha;
pub mod bounds;
pub mod construct;
pub mod domination;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod numerics;

pub use alpha::Alpha;
pub use bounds::{bound_report, BoundInputs, BoundReport};
pub use construct::{
    best_of_trials, construct_alpha, construct_alpha_rate, derandomize_alpha, ConstructionKind,
    ConstructionParams, PRule, TrialOutcome,
};
pub use domination::{alpha_degrees, verify, AlphaDegrees, Mode, VerifyReport};
pub use error::{Error, Result};
pub use exact::{exact_number, lower_bound, ExactResult};
pub use graph::{build_graph, BuiltGraph, Graph};
