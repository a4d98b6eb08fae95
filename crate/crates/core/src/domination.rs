//! Membership conditions for the five domination variants and the
//! (closed) alpha-degree statistics.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numerics::{binomial_big, ln_big, ln_binomial, log_sum_exp};

/// Largest order for which [`AlphaDegrees`] also carries exact sums.
pub const EXACT_DEGREE_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every vertex outside `X` has a neighbour in `X`.
    Dom,
    /// Every vertex outside `X` has at least `k` neighbours in `X`.
    KDom(usize),
    /// Every vertex has at least `k` members of `N[v]` in `X`.
    KTuple(usize),
    /// Every vertex `v` outside `X` has at least `ceil(alpha d_v)` neighbours in `X`.
    Alpha(Alpha),
    /// Every vertex `v` has at least `ceil(alpha d_v)` members of `N[v]` in `X`.
    AlphaRate(Alpha),
}

impl Mode {
    /// Threshold for a vertex of the given degree.
    pub fn requirement(&self, degree: usize) -> usize {
        match *self {
            Mode::Dom => 1,
            Mode::KDom(k) | Mode::KTuple(k) => k,
            Mode::Alpha(a) | Mode::AlphaRate(a) => a.ceil_times(degree),
        }
    }

    /// Whether the count runs over the closed neighbourhood.
    pub fn is_closed(&self) -> bool {
        matches!(self, Mode::KTuple(_) | Mode::AlphaRate(_))
    }

    /// Whether members of `X` are exempt from the condition.
    pub fn exempts_members(&self) -> bool {
        !self.is_closed()
    }

    /// Rejects `k = 0` and k-tuple domination on graphs with `min_degree < k - 1`.
    pub fn check(&self, graph: &Graph) -> Result<()> {
        match *self {
            Mode::KDom(0) | Mode::KTuple(0) => {
                Err(Error::Mode(format!("{self}: k must be positive")))
            }
            Mode::KTuple(k) if graph.min_degree() + 1 < k => Err(Error::ModeUndefined {
                mode: self.to_string(),
                min_degree: graph.min_degree(),
                needed: k - 1,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Dom => write!(f, "dom"),
            Mode::KDom(k) => write!(f, "kdom({k})"),
            Mode::KTuple(k) => write!(f, "tuple({k})"),
            Mode::Alpha(a) => write!(f, "alpha({a})"),
            Mode::AlphaRate(a) => write!(f, "rate({a})"),
        }
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Deficiency {
    pub required: usize,
    pub achieved: usize,
}

/// Outcome of [`verify`]: valid exactly when no vertex is deficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub mode: Mode,
    pub valid: bool,
    pub set_size: usize,
    pub deficiencies: BTreeMap<usize, Deficiency>,
}

/// Checks `set` against `mode`, listing every vertex that falls short.
pub fn verify(graph: &Graph, set: &[usize], mode: Mode) -> Result<VerifyReport> {
    mode.check(graph)?;
    let n = graph.n();
    let mut member = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        member[v] = true;
    }
    let mut deficiencies = BTreeMap::new();
    for v in 0..n {
        if member[v] && mode.exempts_members() {
            continue;
        }
        let required = mode.requirement(graph.degree(v));
        let mut achieved = graph.neighbors(v).iter().filter(|&&u| member[u]).count();
        if mode.is_closed() && member[v] {
            achieved += 1;
        }
        if achieved < required {
            deficiencies.insert(v, Deficiency { required, achieved });
        }
    }
    Ok(VerifyReport {
        mode,
        valid: deficiencies.is_empty(),
        set_size: member.iter().filter(|&&b| b).count(),
        deficiencies,
    })
}

/// True when `alpha <= 1/Delta`, in which case every non-isolated vertex
/// needs exactly one neighbour and alpha-domination coincides with
/// domination on graphs without isolated vertices.
pub fn alpha_acts_as_domination(graph: &Graph, alpha: Alpha) -> bool {
    (alpha.numer() as u128) * (graph.max_degree() as u128) <= alpha.denom() as u128
}

/// Mean of `C(d_i, ceil(alpha d_i) - 1)` (open) and
/// `C(d_i + 1, ceil(alpha d_i) - 1)` (closed), kept in log space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaDegrees {
    pub n: usize,
    /// `ln` of the open alpha-degree; `-inf` when it is zero.
    pub log_open: f64,
    /// `ln` of the closed alpha-degree; `-inf` when it is zero.
    pub log_closed: f64,
    /// `n` times the open alpha-degree, for `n <= 64`.
    #[serde(serialize_with = "ser_big")]
    pub exact_open: Option<BigUint>,
    /// `n` times the closed alpha-degree, for `n <= 64`.
    #[serde(serialize_with = "ser_big")]
    pub exact_closed: Option<BigUint>,
}

fn ser_big<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

impl AlphaDegrees {
    pub fn open_is_zero(&self) -> bool {
        self.log_open == f64::NEG_INFINITY
    }

    pub fn closed_is_zero(&self) -> bool {
        self.log_closed == f64::NEG_INFINITY
    }

    /// Exact sums converted to logs of the means, when available.
    pub fn exact_logs(&self) -> Option<(f64, f64)> {
        let ln_n = (self.n as f64).ln();
        match (&self.exact_open, &self.exact_closed) {
            (Some(o), Some(c)) => Some((ln_big(o) - ln_n, ln_big(c) - ln_n)),
            _ => None,
        }
    }
}

pub fn alpha_degrees(graph: &Graph, alpha: Alpha) -> AlphaDegrees {
    alpha_degrees_of(&graph.degrees(), alpha)
}

/// [`alpha_degrees`] from a bare degree sequence.
pub fn alpha_degrees_of(degrees: &[usize], alpha: Alpha) -> AlphaDegrees {
    let n = degrees.len();
    // per-vertex terms only depend on the degree
    let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in degrees {
        *by_degree.entry(d).or_default() += 1;
    }
    let mut open = Vec::with_capacity(by_degree.len());
    let mut closed = Vec::with_capacity(by_degree.len());
    for (&d, &count) in &by_degree {
        let k = alpha.ceil_times(d) as i64 - 1;
        let ln_count = (count as f64).ln();
        open.push(ln_binomial(d as u64, k) + ln_count);
        closed.push(ln_binomial(d as u64 + 1, k) + ln_count);
    }
    let ln_n = (n as f64).ln();
    let (exact_open, exact_closed) = if n <= EXACT_DEGREE_MAX_N {
        let mut o = BigUint::ZERO;
        let mut c = BigUint::ZERO;
        for &d in degrees {
            let k = alpha.ceil_times(d) as i64 - 1;
            o += binomial_big(d as u64, k);
            c += binomial_big(d as u64 + 1, k);
        }
        (Some(o), Some(c))
    } else {
        (None, None)
    };
    AlphaDegrees {
        n,
        log_open: log_sum_exp(&open) - ln_n,
        log_closed: log_sum_exp(&closed) - ln_n,
        exact_open,
        exact_closed,
    }
}
