//! Deterministic and seeded random graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Attempts allowed to the configuration model before giving up.
pub const REGULAR_MAX_ATTEMPTS: usize = 10_000;

fn gen_err(msg: impl Into<String>) -> Error {
    Error::Generator(msg.into())
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::new(n, [])
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(gen_err(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(gen_err("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(gen_err("complete graph needs n >= 1"));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("static construction")
}

/// Circulant graph: `i ~ i ± s (mod n)` for every offset `s`.
///
/// Offsets must be distinct and lie in `1..=n/2`. Each offset below `n/2`
/// adds 2 to every degree; the antipodal offset `n/2` (even `n`) adds 1.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(gen_err(format!("circulant needs n >= 3, got {n}")));
    }
    let mut sorted = offsets.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(gen_err("circulant offsets must be distinct"));
    }
    if let Some(&bad) = sorted.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(gen_err(format!(
            "circulant offset {bad} outside 1..={}",
            n / 2
        )));
    }
    Graph::new(
        n,
        sorted
            .iter()
            .flat_map(|&s| (0..n).map(move |i| (i, (i + s) % n))),
    )
}

/// Erdős–Rényi `G(n, p)`: one coin per unordered pair, pairs visited in
/// lexicographic order.
pub fn gnp(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::Probability(prob));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Uniform-ish random `d`-regular graph via the pairing (configuration)
/// model, rejecting pairings with loops or parallel edges.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 || d >= n || (n * d) % 2 == 1 {
        return Err(gen_err(format!(
            "no simple {d}-regular graph on {n} vertices (need d < n and n*d even)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REGULAR_MAX_ATTEMPTS {
        if let Some(edges) = try_pairing(n, d, &mut rng) {
            return Graph::new(n, edges);
        }
    }
    Err(gen_err(format!(
        "stub pairing found no simple {d}-regular graph on {n} vertices in {REGULAR_MAX_ATTEMPTS} attempts"
    )))
}

/// One round of stepwise stub pairing: shuffle the open stubs, pair them
/// off, keep pairs that form new simple edges and retry with the leftovers.
/// Gives up when no remaining pair can be joined.
fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut edges = std::collections::BTreeSet::new();
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    while !stubs.is_empty() {
        let mut leftover: Vec<usize> = Vec::new();
        stubs.shuffle(rng);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u != v && edges.insert((u, v)) {
                continue;
            }
            leftover.extend([u, v]);
        }
        let joinable = leftover.iter().enumerate().any(|(i, &u)| {
            leftover[i + 1..]
                .iter()
                .any(|&v| u != v && !edges.contains(&(u.min(v), u.max(v))))
        });
        if !leftover.is_empty() && !joinable {
            return None;
        }
        stubs = leftover;
    }
    Some(edges.into_iter().collect())
}
