//! Brute-force minimum sets for small graphs.
//!
//! Sizes are tried in increasing order starting from [`lower_bound`]; for
//! each size the subsets are visited in lexicographic order by a depth-first
//! search, so the first valid set found is the lexicographically least
//! minimum witness.

use serde::Serialize;

use crate::bounds::{alpha_lower_ceil, BoundInputs};
use crate::domination::Mode;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_EXACT_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub mode: Mode,
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

/// Sound floor for the search.
///
/// Alpha modes use the degree and edge-count lower bounds (exact rational
/// ceilings). The closed-neighbourhood modes add the counting bound
/// `sum_v req(v) <= |X| (Delta + 1)`; k-domination uses
/// `k (n - |X|) <= |X| Delta`.
pub fn lower_bound(graph: &Graph, mode: Mode) -> usize {
    let n = graph.n();
    let dm = graph.max_degree();
    let closed_count = || {
        let total: usize = (0..n).map(|v| mode.requirement(graph.degree(v))).sum();
        total.div_ceil(dm + 1)
    };
    let floor = match mode {
        Mode::Dom => n.div_ceil(dm + 1),
        Mode::KDom(k) => (k * n).div_ceil(dm + k),
        Mode::KTuple(k) => k.max(closed_count()),
        Mode::Alpha(a) => alpha_lower_ceil(&BoundInputs::new(graph, a)),
        Mode::AlphaRate(a) => alpha_lower_ceil(&BoundInputs::new(graph, a)).max(closed_count()),
    };
    floor.min(n)
}

struct Search<'g> {
    graph: &'g Graph,
    mode: Mode,
    need: Vec<usize>,
    member: Vec<bool>,
    /// `|N(v) ∩ X|`
    hits: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn achieved(&self, v: usize) -> usize {
        self.hits[v] + usize::from(self.mode.is_closed() && self.member[v])
    }

    fn satisfied(&self, v: usize) -> bool {
        (self.member[v] && self.mode.exempts_members()) || self.achieved(v) >= self.need[v]
    }

    /// False when some vertex can no longer be satisfied with `slots` more
    /// picks from vertices `>= next`.
    fn feasible(&self, next: usize, slots: usize) -> bool {
        let closed = self.mode.is_closed();
        (0..self.graph.n()).all(|v| {
            if self.satisfied(v) {
                return true;
            }
            if self.mode.exempts_members() && v >= next && slots > 0 {
                return true;
            }
            let missing = self.need[v] - self.achieved(v);
            let mut reachable = self
                .graph
                .neighbors(v)
                .iter()
                .filter(|&&u| u >= next)
                .count();
            if closed && v >= next {
                reachable += 1;
            }
            reachable.min(slots) >= missing
        })
    }

    fn set(&mut self, v: usize, on: bool) {
        self.member[v] = on;
        for &u in self.graph.neighbors(v) {
            if on {
                self.hits[u] += 1;
            } else {
                self.hits[u] -= 1;
            }
        }
        if on {
            self.chosen.push(v);
        } else {
            self.chosen.pop();
        }
    }

    fn dfs(&mut self, next: usize, slots: usize) -> bool {
        self.nodes += 1;
        if !self.feasible(next, slots) {
            return false;
        }
        if slots == 0 {
            return (0..self.graph.n()).all(|v| self.satisfied(v));
        }
        let n = self.graph.n();
        for v in next..=(n - slots) {
            self.set(v, true);
            if self.dfs(v + 1, slots - 1) {
                return true;
            }
            self.set(v, false);
        }
        false
    }
}

/// Minimum size of a `mode` set together with the lexicographically least
/// witness of that size.
pub fn exact_number(graph: &Graph, mode: Mode) -> Result<ExactResult> {
    let n = graph.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            n,
            cap: MAX_EXACT_VERTICES,
        });
    }
    mode.check(graph)?;
    let mut search = Search {
        graph,
        mode,
        need: (0..n).map(|v| mode.requirement(graph.degree(v))).collect(),
        member: vec![false; n],
        hits: vec![0; n],
        chosen: Vec::new(),
        nodes: 0,
    };
    for size in lower_bound(graph, mode)..=n {
        if search.dfs(0, size) {
            return Ok(ExactResult {
                mode,
                value: size,
                witness: search.chosen.clone(),
                nodes_explored: search.nodes,
            });
        }
    }
    unreachable!("the full vertex set satisfies every well-defined mode")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::Alpha;
    use crate::domination::verify;
    use crate::generators::{complete, cycle, empty, path, petersen};

    fn a(p: u64, q: u64) -> Alpha {
        Alpha::new(p, q).unwrap()
    }

    #[test]
    fn cycle_values() {
        let c5 = cycle(5).unwrap();
        let r = exact_number(&c5, Mode::Dom).unwrap();
        assert_eq!((r.value, r.witness.clone()), (2, vec![0, 2]));
        assert_eq!(exact_number(&c5, Mode::Alpha(Alpha::ONE)).unwrap().value, 3);
        assert_eq!(
            exact_number(&c5, Mode::AlphaRate(a(1, 2))).unwrap().value,
            2
        );
    }

    #[test]
    fn complete_values() {
        let k4 = complete(4).unwrap();
        assert_eq!(exact_number(&k4, Mode::Alpha(Alpha::ONE)).unwrap().value, 3);
        let r = exact_number(&k4, Mode::KTuple(2)).unwrap();
        assert_eq!((r.value, r.witness), (2, vec![0, 1]));
        assert!(matches!(
            exact_number(&k4, Mode::KTuple(5)),
            Err(Error::ModeUndefined { .. })
        ));
    }

    #[test]
    fn tiny_cases() {
        assert_eq!(exact_number(&path(2).unwrap(), Mode::Dom).unwrap().value, 1);
        assert_eq!(exact_number(&path(1).unwrap(), Mode::Dom).unwrap().value, 1);
        let e = empty(5).unwrap();
        assert_eq!(exact_number(&e, Mode::Alpha(a(1, 2))).unwrap().value, 0);
        assert_eq!(exact_number(&e, Mode::Dom).unwrap().value, 5);
        assert_eq!(exact_number(&e, Mode::KDom(2)).unwrap().value, 5);
    }

    #[test]
    fn size_cap() {
        let g = cycle(25).unwrap();
        assert!(matches!(
            exact_number(&g, Mode::Dom),
            Err(Error::TooLarge { n: 25, cap: 24 })
        ));
        assert!(exact_number(&cycle(24).unwrap(), Mode::Dom).is_ok());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&cycle(5).unwrap(), Mode::Alpha(a(1, 2))), 2);
        assert_eq!(lower_bound(&empty(4).unwrap(), Mode::Alpha(a(1, 3))), 0);
        let c = crate::generators::circulant(22, &(1..=5).collect::<Vec<_>>()).unwrap();
        // 10-regular, alpha = 1/10: n / 11
        assert_eq!(lower_bound(&c, Mode::Alpha(a(1, 10))), 2);
    }

    #[test]
    fn witnesses_verify_and_are_minimal() {
        let g = petersen();
        for mode in [
            Mode::Dom,
            Mode::KDom(2),
            Mode::KTuple(2),
            Mode::Alpha(a(1, 2)),
            Mode::AlphaRate(a(1, 2)),
            Mode::Alpha(Alpha::ONE),
        ] {
            let r = exact_number(&g, mode).unwrap();
            assert!(verify(&g, &r.witness, mode).unwrap().valid, "{mode}");
            assert!(lower_bound(&g, mode) <= r.value, "{mode}");
        }
        assert_eq!(exact_number(&g, Mode::Dom).unwrap().value, 3);
    }
}
