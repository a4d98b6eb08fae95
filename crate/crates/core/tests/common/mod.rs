//! Shared fixtures and a bitmask brute-force oracle that shares no code
//! with the library's verifier or exact solver.

#![allow(dead_code)]

use alphadom::generators::{gnp, random_regular};
use alphadom::io::parse_corpus;
use alphadom::{Alpha, Graph, Mode};

pub const CORPUS: &str = include_str!("../data/connected_upto7.txt");

pub fn corpus() -> Vec<(String, Graph)> {
    parse_corpus(CORPUS).expect("corpus parses")
}

pub fn alpha(p: u64, q: u64) -> Alpha {
    Alpha::new(p, q).unwrap()
}

/// Requirement and neighbourhood rule for `mode`, restated from the
/// definitions: (threshold, count closed neighbourhood, members exempt).
fn rule(mode: Mode, degree: usize) -> (u64, bool, bool) {
    let ceil = |p: u64, q: u64| (p * degree as u64).div_ceil(q);
    match mode {
        Mode::Dom => (1, false, true),
        Mode::KDom(k) => (k as u64, false, true),
        Mode::KTuple(k) => (k as u64, true, false),
        Mode::Alpha(a) => (ceil(a.numer(), a.denom()), false, true),
        Mode::AlphaRate(a) => (ceil(a.numer(), a.denom()), true, false),
    }
}

pub fn neighbour_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect()
}

pub fn satisfies(masks: &[u32], mask: u32, mode: Mode) -> bool {
    masks.iter().enumerate().all(|(v, &nb)| {
        let (need, closed, exempt) = rule(mode, nb.count_ones() as usize);
        let inside = mask >> v & 1 == 1;
        if inside && exempt {
            return true;
        }
        let hood = if closed { nb | (1 << v) } else { nb };
        (hood & mask).count_ones() as u64 >= need
    })
}

/// Minimum size over all `2^n` subsets.
pub fn brute_min(g: &Graph, mode: Mode) -> usize {
    let masks = neighbour_masks(g);
    (0u32..(1 << g.n()))
        .filter(|&m| satisfies(&masks, m, mode))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("full set qualifies")
}

pub fn set_satisfies(g: &Graph, set: &[usize], mode: Mode) -> bool {
    if g.n() <= 32 {
        let mask = set.iter().fold(0u32, |m, &v| m | (1 << v));
        return satisfies(&neighbour_masks(g), mask, mode);
    }
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    (0..g.n()).all(|v| {
        let (need, closed, exempt) = rule(mode, g.degree(v));
        if member[v] && exempt {
            return true;
        }
        let mut c = g.neighbors(v).iter().filter(|&&u| member[u]).count();
        if closed && member[v] {
            c += 1;
        }
        c as u64 >= need
    })
}

/// `count` seeded random graphs with `min_n <= n <= max_n` and minimum degree >= 1.
pub fn random_graphs_min_degree_one(
    count: usize,
    min_n: usize,
    max_n: usize,
    seed: u64,
) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        s += 1;
        let n = min_n + (s.wrapping_mul(2_654_435_761) % (max_n - min_n + 1) as u64) as usize;
        let g = if s.is_multiple_of(4) {
            let d = 1 + (s % 5) as usize;
            match random_regular(n, d, s) {
                Ok(g) => g,
                Err(_) => continue,
            }
        } else {
            let p = 0.08 + 0.05 * (s % 7) as f64;
            gnp(n, p, s).unwrap()
        };
        if g.min_degree() >= 1 {
            out.push(g);
        }
    }
    out
}
