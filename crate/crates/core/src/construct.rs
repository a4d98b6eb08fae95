//! Random-set constructions of alpha-dominating and alpha-rate dominating
//! sets, a best-of-trials driver and a conditional-expectation
//! derandomisation.
//!
//! Both constructions draw a set `A` by an independent coin of bias `p` per
//! vertex (ascending vertex order, one ChaCha8 stream per trial) and then
//! repair every vertex whose requirement `A` misses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alpha::Alpha;
use crate::bounds::{cor1_p, cor2_p, optimal_p, thm3_p, BoundInputs};
use crate::domination::{verify, Mode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numerics::binomial_cdf;

/// Master seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED_A1FA_D0E5_0001;

/// Which formula picks the selection probability.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PRule {
    /// `1 - ((1 + dh) dbar)^(-1/dh)`, minimiser of the expectation bound.
    #[default]
    Optimal,
    /// `min(1, (ln(dh + 1) + ln dbar) / (dh + 1))`.
    Simplified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    Alpha,
    Rate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionParams {
    pub trials: usize,
    pub master_seed: u64,
    pub p_override: Option<f64>,
    pub p_rule: PRule,
    /// Repair against the growing set instead of `A` alone. Output is still
    /// verified but no longer covered by the expectation bound.
    pub greedy_repair: bool,
}

impl Default for ConstructionParams {
    fn default() -> Self {
        ConstructionParams {
            trials: 1,
            master_seed: DEFAULT_SEED,
            p_override: None,
            p_rule: PRule::Optimal,
            greedy_repair: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub mode: Mode,
    /// `D = A ∪ B`, sorted.
    pub set: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub p_used: f64,
    pub seed: u64,
    pub trial_index: u64,
    pub size: usize,
}

/// Per-trial seed: SplitMix64 finaliser over the master seed and index.
pub fn trial_seed(master_seed: u64, trial_index: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    mix(master_seed.wrapping_add(mix(trial_index.wrapping_add(0x9E37_79B9_7F4A_7C15))))
}

/// Resolves the selection probability for `kind` under `params`.
pub fn selection_probability(
    graph: &Graph,
    alpha: Alpha,
    kind: ConstructionKind,
    params: &ConstructionParams,
) -> Result<f64> {
    if let Some(p) = params.p_override {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Probability(p));
        }
        return Ok(p);
    }
    let inputs = BoundInputs::new(graph, alpha);
    let p = match (kind, params.p_rule) {
        (ConstructionKind::Alpha, PRule::Optimal) => optimal_p(&inputs),
        (ConstructionKind::Alpha, PRule::Simplified) => cor1_p(&inputs),
        (ConstructionKind::Rate, PRule::Optimal) => thm3_p(&inputs),
        (ConstructionKind::Rate, PRule::Simplified) => cor2_p(&inputs),
    };
    p.ok_or(Error::EmptySetOptimal)
}

fn sample_a(n: usize, p: f64, seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.random_bool(p)).collect()
}

fn members(flags: &[bool]) -> Vec<usize> {
    flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(v, _)| v)
        .collect()
}

fn finish(
    graph: &Graph,
    mode: Mode,
    in_a: &[bool],
    in_b: &[bool],
    p: f64,
    seed: u64,
    trial_index: u64,
) -> TrialOutcome {
    let set: Vec<usize> = (0..graph.n()).filter(|&v| in_a[v] || in_b[v]).collect();
    let report = verify(graph, &set, mode).expect("construction produced out-of-range vertex");
    assert!(
        report.valid,
        "construction produced an invalid {mode} set: {report:?}"
    );
    TrialOutcome {
        mode,
        size: set.len(),
        set,
        a: members(in_a),
        b: members(in_b),
        p_used: p,
        seed,
        trial_index,
    }
}

fn alpha_trial(
    graph: &Graph,
    alpha: Alpha,
    p: f64,
    greedy: bool,
    seed: u64,
    index: u64,
) -> TrialOutcome {
    let n = graph.n();
    let in_a = sample_a(n, p, seed);
    let mut in_b = vec![false; n];
    for v in 0..n {
        if in_a[v] {
            continue;
        }
        let need = alpha.ceil_times(graph.degree(v));
        let have = graph
            .neighbors(v)
            .iter()
            .filter(|&&u| in_a[u] || (greedy && in_b[u]))
            .count();
        if have < need {
            in_b[v] = true;
        }
    }
    finish(graph, Mode::Alpha(alpha), &in_a, &in_b, p, seed, index)
}

fn rate_trial(
    graph: &Graph,
    alpha: Alpha,
    p: f64,
    greedy: bool,
    seed: u64,
    index: u64,
) -> TrialOutcome {
    let n = graph.n();
    let in_a = sample_a(n, p, seed);
    let mut in_b = vec![false; n];
    for v in 0..n {
        let need = alpha.ceil_times(graph.degree(v));
        let counted = |u: usize, in_b: &[bool]| in_a[u] || (greedy && in_b[u]);
        let have = graph
            .neighbors(v)
            .iter()
            .filter(|&&u| counted(u, &in_b))
            .count()
            + usize::from(counted(v, &in_b));
        if have >= need {
            continue;
        }
        let missing = need - have;
        // neighbours outside A: already-chosen ones first, then by index
        let mut free: Vec<usize> = graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !counted(u, &in_b))
            .collect();
        assert!(
            free.len() >= missing,
            "vertex {v} lacks candidates for repair"
        );
        free.sort_by_key(|&u| (!in_b[u], u));
        for &u in &free[..missing] {
            in_b[u] = true;
        }
    }
    finish(graph, Mode::AlphaRate(alpha), &in_a, &in_b, p, seed, index)
}

/// One trial of the alpha-dominating construction: `B` holds every vertex
/// outside `A` with fewer than `ceil(alpha d_v)` neighbours in `A`.
pub fn construct_alpha(
    graph: &Graph,
    alpha: Alpha,
    params: &ConstructionParams,
    trial_index: u64,
) -> Result<TrialOutcome> {
    let p = selection_probability(graph, alpha, ConstructionKind::Alpha, params)?;
    let seed = trial_seed(params.master_seed, trial_index);
    Ok(alpha_trial(
        graph,
        alpha,
        p,
        params.greedy_repair,
        seed,
        trial_index,
    ))
}

/// One trial of the alpha-rate construction: every vertex `v` with
/// `m = |N[v] ∩ A| < ceil(alpha d_v)` contributes `ceil(alpha d_v) - m`
/// neighbours outside `A` to `B`. Deficits are measured against `A` only;
/// neighbours already in `B` are reused before new ones (lowest index first).
pub fn construct_alpha_rate(
    graph: &Graph,
    alpha: Alpha,
    params: &ConstructionParams,
    trial_index: u64,
) -> Result<TrialOutcome> {
    let p = selection_probability(graph, alpha, ConstructionKind::Rate, params)?;
    let seed = trial_seed(params.master_seed, trial_index);
    Ok(rate_trial(
        graph,
        alpha,
        p,
        params.greedy_repair,
        seed,
        trial_index,
    ))
}

fn run_one(
    graph: &Graph,
    alpha: Alpha,
    kind: ConstructionKind,
    p: f64,
    params: &ConstructionParams,
    index: u64,
) -> TrialOutcome {
    let seed = trial_seed(params.master_seed, index);
    match kind {
        ConstructionKind::Alpha => alpha_trial(graph, alpha, p, params.greedy_repair, seed, index),
        ConstructionKind::Rate => rate_trial(graph, alpha, p, params.greedy_repair, seed, index),
    }
}

/// Runs `params.trials` independent trials in parallel and keeps the
/// smallest set, breaking ties by the lower trial index.
pub fn best_of_trials(
    graph: &Graph,
    alpha: Alpha,
    kind: ConstructionKind,
    params: &ConstructionParams,
) -> Result<TrialOutcome> {
    let p = selection_probability(graph, alpha, kind, params)?;
    let best = (0..params.trials.max(1) as u64)
        .into_par_iter()
        .map(|i| run_one(graph, alpha, kind, p, params, i))
        .min_by_key(|o| (o.size, o.trial_index))
        .expect("at least one trial");
    Ok(best)
}

/// Runs every trial and returns all outcomes in trial order.
pub fn run_trials(
    graph: &Graph,
    alpha: Alpha,
    kind: ConstructionKind,
    params: &ConstructionParams,
) -> Result<Vec<TrialOutcome>> {
    let p = selection_probability(graph, alpha, kind, params)?;
    Ok((0..params.trials as u64)
        .into_par_iter()
        .map(|i| run_one(graph, alpha, kind, p, params, i))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Derandomized {
    pub set: Vec<usize>,
    pub p_used: f64,
    /// `E(|A| + |B|)` before any vertex was fixed.
    pub initial_expectation: f64,
    /// `E(|A| + |B|)` after each decision; the last value equals `set.len()`.
    #[serde(skip)]
    pub trace: Vec<f64>,
}

/// Conditional-expectation derandomisation of [`construct_alpha`].
///
/// Vertices are fixed in ascending order. The exact conditional expectation
/// of `|A| + |B|` is maintained; each vertex takes whichever value does not
/// increase it (exclusion on ties). The result is therefore no larger than
/// the initial expectation, which is at most `thm2_bound * n`.
pub fn derandomize_alpha(graph: &Graph, alpha: Alpha) -> Result<Derandomized> {
    let n = graph.n();
    let inputs = BoundInputs::new(graph, alpha);
    let Some(p) = optimal_p(&inputs) else {
        return Ok(Derandomized {
            set: Vec::new(),
            p_used: 0.0,
            initial_expectation: 0.0,
            trace: Vec::new(),
        });
    };
    let need: Vec<usize> = (0..n).map(|v| alpha.ceil_times(graph.degree(v))).collect();
    // None = undecided
    let mut state: Vec<Option<bool>> = vec![None; n];
    let mut chosen_nb = vec![0usize; n];
    let mut open_nb: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();

    // contribution of v: P(v in A) + P(v not in A) P(fewer than need_v neighbours in A)
    let term = |v: usize, state: &[Option<bool>], chosen: &[usize], open: &[usize]| -> f64 {
        let deficient = binomial_cdf(open[v], p, need[v] as i64 - 1 - chosen[v] as i64);
        match state[v] {
            Some(true) => 1.0,
            Some(false) => deficient,
            None => p + (1.0 - p) * deficient,
        }
    };

    let mut expectation: f64 = (0..n).map(|v| term(v, &state, &chosen_nb, &open_nb)).sum();
    let initial_expectation = expectation;
    let mut trace = Vec::with_capacity(n);
    for w in 0..n {
        let before: f64 = std::iter::once(w)
            .chain(graph.neighbors(w).iter().copied())
            .map(|v| term(v, &state, &chosen_nb, &open_nb))
            .sum();
        let mut local = [0.0f64; 2];
        for (slot, choice) in local.iter_mut().zip([false, true]) {
            state[w] = Some(choice);
            for &u in graph.neighbors(w) {
                open_nb[u] -= 1;
                chosen_nb[u] += usize::from(choice);
            }
            *slot = std::iter::once(w)
                .chain(graph.neighbors(w).iter().copied())
                .map(|v| term(v, &state, &chosen_nb, &open_nb))
                .sum();
            for &u in graph.neighbors(w) {
                open_nb[u] += 1;
                chosen_nb[u] -= usize::from(choice);
            }
        }
        let choice = local[1] < local[0];
        state[w] = Some(choice);
        for &u in graph.neighbors(w) {
            open_nb[u] -= 1;
            chosen_nb[u] += usize::from(choice);
        }
        expectation += local[usize::from(choice)] - before;
        trace.push(expectation);
    }

    let in_a: Vec<bool> = state.iter().map(|s| s == &Some(true)).collect();
    let set: Vec<usize> = (0..n)
        .filter(|&v| in_a[v] || chosen_nb[v] < need[v])
        .collect();
    let report = verify(graph, &set, Mode::Alpha(alpha))?;
    assert!(report.valid, "derandomised set failed verification");
    Ok(Derandomized {
        set,
        p_used: p,
        initial_expectation,
        trace,
    })
}
