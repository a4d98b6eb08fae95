//! Closed-form lower and upper bounds on the domination numbers.
//!
//! All values that involve the (closed) alpha-degree go through its
//! logarithm, since `C(1000, 99)` alone is about `e^319.7`. The Dunbar-type
//! bounds are rational in `alpha` and are evaluated exactly before the
//! final conversion to `f64`.

use num_rational::Ratio;
use serde::Serialize;

use crate::alpha::Alpha;
use crate::domination::{alpha_degrees, alpha_degrees_of};
use crate::graph::Graph;

/// Graph statistics the bounds depend on.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundInputs {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub delta_hat: usize,
    pub log_open: f64,
    pub log_closed: f64,
    pub alpha: Alpha,
}

impl BoundInputs {
    pub fn new(graph: &Graph, alpha: Alpha) -> BoundInputs {
        let deg = alpha_degrees(graph, alpha);
        BoundInputs {
            n: graph.n(),
            m: graph.m(),
            min_degree: graph.min_degree(),
            max_degree: graph.max_degree(),
            delta_hat: alpha.delta_hat(graph.min_degree()),
            log_open: deg.log_open,
            log_closed: deg.log_closed,
            alpha,
        }
    }

    /// Inputs from a degree sequence alone (no adjacency needed).
    pub fn from_degrees(degrees: &[usize], alpha: Alpha) -> BoundInputs {
        assert!(!degrees.is_empty(), "degree sequence must be non-empty");
        let deg = alpha_degrees_of(degrees, alpha);
        let min_degree = *degrees.iter().min().unwrap();
        BoundInputs {
            n: degrees.len(),
            m: degrees.iter().sum::<usize>() / 2,
            min_degree,
            max_degree: *degrees.iter().max().unwrap(),
            delta_hat: alpha.delta_hat(min_degree),
            log_open: deg.log_open,
            log_closed: deg.log_closed,
            alpha,
        }
    }

    /// `n` vertices all of degree `d`.
    pub fn regular(n: usize, d: usize, alpha: Alpha) -> BoundInputs {
        BoundInputs::from_degrees(&vec![d; n], alpha)
    }

    fn pq(&self) -> (u128, u128) {
        (self.alpha.numer() as u128, self.alpha.denom() as u128)
    }
}

fn ratio_to_f64(r: Ratio<u128>) -> f64 {
    // both parts fit in 2^106 for any realistic input; split to keep 53 bits
    let (n, d) = (*r.numer(), *r.denom());
    let whole = n / d;
    let rem = n % d;
    whole as f64 + rem as f64 / d as f64
}

/// `alpha delta n / (Delta + alpha delta)`, exact and absolute.
pub fn dunbar_degree_lower_exact(i: &BoundInputs) -> Option<Ratio<u128>> {
    if i.max_degree == 0 {
        return None;
    }
    let (p, q) = i.pq();
    let (n, dl, dm) = (i.n as u128, i.min_degree as u128, i.max_degree as u128);
    Some(Ratio::new(p * dl * n, q * dm + p * dl))
}

/// `Delta n / (Delta + (1 - alpha) delta)`, exact and absolute.
pub fn dunbar_degree_upper_exact(i: &BoundInputs) -> Option<Ratio<u128>> {
    if i.max_degree == 0 {
        return None;
    }
    let (p, q) = i.pq();
    let (n, dl, dm) = (i.n as u128, i.min_degree as u128, i.max_degree as u128);
    Some(Ratio::new(q * dm * n, q * dm + (q - p) * dl))
}

/// `2 alpha m / ((1 + alpha) Delta)`, exact and absolute.
pub fn dunbar_edge_lower_exact(i: &BoundInputs) -> Option<Ratio<u128>> {
    if i.max_degree == 0 {
        return None;
    }
    let (p, q) = i.pq();
    let (m, dm) = (i.m as u128, i.max_degree as u128);
    Some(Ratio::new(2 * p * m, (q + p) * dm))
}

/// `((2 - alpha) Delta n - (2 - 2 alpha) m) / ((2 - alpha) Delta)`, exact and absolute.
pub fn dunbar_edge_upper_exact(i: &BoundInputs) -> Option<Ratio<u128>> {
    if i.max_degree == 0 {
        return None;
    }
    let (p, q) = i.pq();
    let (n, m, dm) = (i.n as u128, i.m as u128, i.max_degree as u128);
    let den = (2 * q - p) * dm;
    // n - 2(q-p)m / ((2q-p)Delta); the subtrahend never exceeds n since 2m <= n Delta
    Some(Ratio::new(n * den - 2 * (q - p) * m, den))
}

/// Degree-based lower and upper bound on `gamma_alpha`, as fractions of `n`.
pub fn dunbar_degree_bounds(i: &BoundInputs) -> Option<(f64, f64)> {
    let n = Ratio::from_integer(i.n as u128);
    Some((
        ratio_to_f64(dunbar_degree_lower_exact(i)? / n),
        ratio_to_f64(dunbar_degree_upper_exact(i)? / n),
    ))
}

/// Edge-count lower and upper bound on `gamma_alpha`, as absolute counts.
pub fn dunbar_edge_bounds(i: &BoundInputs) -> Option<(f64, f64)> {
    Some((
        ratio_to_f64(dunbar_edge_lower_exact(i)?),
        ratio_to_f64(dunbar_edge_upper_exact(i)?),
    ))
}

/// `ceil` of the best exact Dunbar lower bound (0 when none applies).
pub fn alpha_lower_ceil(i: &BoundInputs) -> usize {
    [dunbar_degree_lower_exact(i), dunbar_edge_lower_exact(i)]
        .into_iter()
        .flatten()
        .map(|r| r.ceil().to_integer() as usize)
        .max()
        .unwrap_or(0)
}

/// `1 - delta / (1 + delta)^(1 + 1/delta)`, for `delta >= 1`.
pub fn caro_roditty(i: &BoundInputs) -> Option<f64> {
    if i.min_degree == 0 {
        return None;
    }
    Some(expectation_bound(i.min_degree, 0.0))
}

/// `(ln(delta + 1) + 1) / (delta + 1)`; equals 1 for `delta = 0`.
pub fn classical_bound(i: &BoundInputs) -> f64 {
    log_bound(i.min_degree, 0.0)
}

/// Minimiser of `p + (1-p)^(dh+1) dbar` over `p in [0, 1]`.
///
/// The unconstrained minimiser `1 - ((1+dh) dbar)^(-1/dh)` is negative when
/// `(1+dh) dbar < 1`, which only happens with isolated vertices; the
/// constrained optimum is then `p = 0`.
fn expectation_p(delta_hat: usize, log_dbar: f64) -> f64 {
    let dh = delta_hat as f64;
    let l = (1.0 + dh).ln() + log_dbar;
    if l <= 0.0 {
        0.0
    } else {
        -(-l / dh).exp_m1()
    }
}

/// `min_p p + (1-p)^(dh+1) dbar` as a fraction of `n`.
fn expectation_bound(delta_hat: usize, log_dbar: f64) -> f64 {
    let dh = delta_hat as f64;
    if (1.0 + dh).ln() + log_dbar <= 0.0 {
        return log_dbar.exp();
    }
    let x = dh.ln() - (1.0 + 1.0 / dh) * (1.0 + dh).ln() - log_dbar / dh;
    -x.exp_m1()
}

fn log_p(delta_hat: usize, log_dbar: f64) -> f64 {
    let dh1 = delta_hat as f64 + 1.0;
    ((dh1.ln() + log_dbar) / dh1).clamp(0.0, 1.0)
}

/// `p + e^(-p(dh+1)) dbar` at the clamped logarithmic choice of `p`, capped at 1.
fn log_bound(delta_hat: usize, log_dbar: f64) -> f64 {
    let dh1 = delta_hat as f64 + 1.0;
    let raw = (dh1.ln() + log_dbar) / dh1;
    let value = if raw <= 0.0 {
        log_dbar.exp()
    } else if raw >= 1.0 {
        1.0
    } else {
        (dh1.ln() + log_dbar + 1.0) / dh1
    };
    value.min(1.0)
}

fn finite(x: f64) -> Option<f64> {
    (x != f64::NEG_INFINITY).then_some(x)
}

/// Random-set upper bound on `gamma_alpha` as a fraction of `n`.
pub fn thm2_bound(i: &BoundInputs) -> Option<f64> {
    finite(i.log_open).map(|l| expectation_bound(i.delta_hat, l))
}

/// Selection probability that attains [`thm2_bound`].
pub fn optimal_p(i: &BoundInputs) -> Option<f64> {
    finite(i.log_open).map(|l| expectation_p(i.delta_hat, l))
}

/// Logarithmic upper bound on `gamma_alpha` as a fraction of `n`.
pub fn cor1_bound(i: &BoundInputs) -> Option<f64> {
    finite(i.log_open).map(|l| log_bound(i.delta_hat, l))
}

pub fn cor1_p(i: &BoundInputs) -> Option<f64> {
    finite(i.log_open).map(|l| log_p(i.delta_hat, l))
}

/// Random-set upper bound on the alpha-rate domination number.
pub fn thm3_bound(i: &BoundInputs) -> Option<f64> {
    finite(i.log_closed).map(|l| expectation_bound(i.delta_hat, l))
}

pub fn thm3_p(i: &BoundInputs) -> Option<f64> {
    finite(i.log_closed).map(|l| expectation_p(i.delta_hat, l))
}

/// Logarithmic upper bound on the alpha-rate domination number.
pub fn cor2_bound(i: &BoundInputs) -> Option<f64> {
    finite(i.log_closed).map(|l| log_bound(i.delta_hat, l))
}

pub fn cor2_p(i: &BoundInputs) -> Option<f64> {
    finite(i.log_closed).map(|l| log_p(i.delta_hat, l))
}

/// Which parameter a bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Gamma,
    GammaAlpha,
    GammaRate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub target: Target,
    pub side: Side,
    pub applicable: bool,
    /// Bound divided by `n`.
    pub fraction: Option<f64>,
    /// Bound as a vertex count.
    pub absolute: Option<f64>,
    pub reason: Option<&'static str>,
}

/// Every bound for one `(graph, alpha)` pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub inputs: BoundInputs,
    pub entries: Vec<BoundEntry>,
    /// Largest applicable lower bound on `gamma_alpha` (absolute).
    pub alpha_lower_max: f64,
    /// Smallest applicable upper bound on `gamma_alpha` (absolute).
    pub alpha_upper_min: f64,
    /// Smallest applicable upper bound on the alpha-rate number (absolute).
    pub rate_upper_min: f64,
    pub note: Option<&'static str>,
}

pub const BOUND_NAMES: [&str; 10] = [
    "dunbar_degree_lower",
    "dunbar_degree_upper",
    "dunbar_edge_lower",
    "dunbar_edge_upper",
    "caro_roditty",
    "classical",
    "thm2",
    "cor1",
    "thm3",
    "cor2",
];

const NO_EDGES: &str = "graph has no edges (Delta = 0)";
const ISOLATED: &str = "minimum degree is 0";
const ZERO_OPEN: &str = "alpha-degree is 0: gamma_alpha = 0 for edgeless graphs";
const ZERO_CLOSED: &str =
    "closed alpha-degree is 0: the alpha-rate number is 0 for edgeless graphs";

pub fn bound_report(graph: &Graph, alpha: Alpha) -> BoundReport {
    report_from_inputs(BoundInputs::new(graph, alpha))
}

pub fn report_from_inputs(inputs: BoundInputs) -> BoundReport {
    let n = inputs.n as f64;
    let frac = |name, target, side, v: Option<f64>, reason| BoundEntry {
        name,
        target,
        side,
        applicable: v.is_some(),
        fraction: v,
        absolute: v.map(|f| f * n),
        reason: if v.is_some() { None } else { Some(reason) },
    };
    let abs = |name, target, side, v: Option<f64>, reason| BoundEntry {
        name,
        target,
        side,
        applicable: v.is_some(),
        fraction: v.map(|a| a / n),
        absolute: v,
        reason: if v.is_some() { None } else { Some(reason) },
    };
    use Side::*;
    use Target::*;
    let deg = dunbar_degree_bounds(&inputs);
    let edge = dunbar_edge_bounds(&inputs);
    let entries = vec![
        frac(
            "dunbar_degree_lower",
            GammaAlpha,
            Lower,
            deg.map(|b| b.0),
            NO_EDGES,
        ),
        frac(
            "dunbar_degree_upper",
            GammaAlpha,
            Upper,
            deg.map(|b| b.1),
            NO_EDGES,
        ),
        abs(
            "dunbar_edge_lower",
            GammaAlpha,
            Lower,
            edge.map(|b| b.0),
            NO_EDGES,
        ),
        abs(
            "dunbar_edge_upper",
            GammaAlpha,
            Upper,
            edge.map(|b| b.1),
            NO_EDGES,
        ),
        frac(
            "caro_roditty",
            Gamma,
            Upper,
            caro_roditty(&inputs),
            ISOLATED,
        ),
        frac(
            "classical",
            Gamma,
            Upper,
            Some(classical_bound(&inputs)),
            "",
        ),
        frac("thm2", GammaAlpha, Upper, thm2_bound(&inputs), ZERO_OPEN),
        frac("cor1", GammaAlpha, Upper, cor1_bound(&inputs), ZERO_OPEN),
        frac("thm3", GammaRate, Upper, thm3_bound(&inputs), ZERO_CLOSED),
        frac("cor2", GammaRate, Upper, cor2_bound(&inputs), ZERO_CLOSED),
    ];
    let pick = |target: Target, side: Side| {
        entries
            .iter()
            .filter(move |e| e.target == target && e.side == side)
    };
    let alpha_lower_max = pick(GammaAlpha, Lower)
        .filter_map(|e| e.absolute)
        .fold(0.0, f64::max);
    let alpha_upper_min = pick(GammaAlpha, Upper)
        .filter_map(|e| e.absolute)
        .fold(n, f64::min);
    let rate_upper_min = pick(GammaRate, Upper)
        .filter_map(|e| e.absolute)
        .fold(n, f64::min);
    let note = (inputs.log_open == f64::NEG_INFINITY)
        .then_some("no edges: the empty set is alpha-dominating, gamma_alpha = 0");
    BoundReport {
        inputs,
        entries,
        alpha_lower_max,
        alpha_upper_min,
        rate_upper_min,
        note,
    }
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Absolute value of a named bound, if applicable.
    pub fn absolute(&self, name: &str) -> Option<f64> {
        self.entry(name).and_then(|e| e.absolute)
    }

    pub fn fraction(&self, name: &str) -> Option<f64> {
        self.entry(name).and_then(|e| e.fraction)
    }

    /// Column names matching [`BoundReport::csv_record`].
    pub fn csv_header() -> Vec<String> {
        let mut h: Vec<String> = [
            "graph",
            "n",
            "m",
            "min_degree",
            "max_degree",
            "alpha",
            "delta_hat",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        h.extend(BOUND_NAMES.iter().map(|s| s.to_string()));
        h.extend(["alpha_lower_max", "alpha_upper_min", "rate_upper_min"].map(String::from));
        h
    }

    /// One row; bound columns hold fractions of `n` with 9 decimals, empty
    /// when the bound does not apply.
    pub fn csv_record(&self, label: &str) -> Vec<String> {
        let i = &self.inputs;
        let mut row = vec![
            label.to_string(),
            i.n.to_string(),
            i.m.to_string(),
            i.min_degree.to_string(),
            i.max_degree.to_string(),
            i.alpha.to_string(),
            i.delta_hat.to_string(),
        ];
        for name in BOUND_NAMES {
            row.push(self.fraction(name).map(fmt9).unwrap_or_default());
        }
        row.push(fmt9(self.alpha_lower_max));
        row.push(fmt9(self.alpha_upper_min));
        row.push(fmt9(self.rate_upper_min));
        row
    }
}

pub fn fmt9(x: f64) -> String {
    format!("{x:.9}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, empty, path};

    fn a(p: u64, q: u64) -> Alpha {
        Alpha::new(p, q).unwrap()
    }

    fn close(x: f64, y: f64, rel: f64) -> bool {
        (x - y).abs() <= rel * y.abs().max(1e-300)
    }

    #[test]
    fn thousand_regular_dunbar() {
        let i = BoundInputs::regular(2001, 1000, a(1, 10));
        let (lo, hi) = dunbar_degree_bounds(&i).unwrap();
        assert!(close(hi, 1000.0 / 1900.0, 1e-15));
        assert!(close(lo, 100.0 / 1100.0, 1e-15));
        assert_eq!(alpha_lower_ceil(&i), 2001usize.div_ceil(11));
    }

    #[test]
    fn k2_dunbar() {
        let i = BoundInputs::new(&path(2).unwrap(), Alpha::ONE);
        assert_eq!(dunbar_degree_bounds(&i), Some((0.5, 1.0)));
    }

    #[test]
    fn cycle_edge_bounds() {
        let i = BoundInputs::new(&cycle(5).unwrap(), a(1, 2));
        let (lo, hi) = dunbar_edge_bounds(&i).unwrap();
        assert!(close(lo, 5.0 / 3.0, 1e-15));
        assert!(close(hi, 10.0 / 3.0, 1e-15));
        let i = BoundInputs::new(&complete(4).unwrap(), Alpha::ONE);
        assert_eq!(dunbar_edge_bounds(&i).unwrap().0, 2.0);
    }

    #[test]
    fn caro_roditty_values() {
        let i = BoundInputs::new(&path(2).unwrap(), Alpha::ONE);
        assert!(close(caro_roditty(&i).unwrap(), 0.75, 1e-15));
        let i = BoundInputs::new(&cycle(5).unwrap(), a(1, 2));
        // 60-digit reference: 1 - 2/3^(3/2)
        assert!(close(
            caro_roditty(&i).unwrap(),
            0.615_099_820_540_249_5,
            1e-13
        ));
        assert!(caro_roditty(&BoundInputs::new(&empty(3).unwrap(), Alpha::ONE)).is_none());
    }

    #[test]
    fn cycle_bound_values() {
        let i = BoundInputs::new(&cycle(5).unwrap(), a(1, 2));
        assert!(close(
            thm2_bound(&i).unwrap(),
            0.615_099_820_540_249_5,
            1e-13
        ));
        assert!(close(
            optimal_p(&i).unwrap(),
            0.422_649_730_810_374_2,
            1e-13
        ));
        assert!(close(
            thm3_bound(&i).unwrap(),
            0.615_099_820_540_249_5,
            1e-13
        ));
    }

    #[test]
    fn complete_rate_value() {
        let i = BoundInputs::new(&complete(4).unwrap(), Alpha::ONE);
        assert_eq!(i.delta_hat, 1);
        assert!(close(thm3_bound(&i).unwrap(), 23.0 / 24.0, 1e-14));
    }

    #[test]
    fn unit_delta_hat_unit_degree() {
        // delta_hat = 1 and dbar = 1 (K_2 with alpha = 1)
        let i = BoundInputs::new(&path(2).unwrap(), Alpha::ONE);
        assert_eq!((i.delta_hat, i.log_open), (1, 0.0));
        assert!(close(optimal_p(&i).unwrap(), 0.5, 1e-15));
        assert!(close(
            cor1_bound(&i).unwrap(),
            0.846_573_590_279_972_7,
            1e-13
        ));
    }

    #[test]
    fn classical_values() {
        assert_eq!(
            classical_bound(&BoundInputs::new(&empty(4).unwrap(), a(1, 2))),
            1.0
        );
        let i = BoundInputs::new(&path(2).unwrap(), Alpha::ONE);
        assert!(close(classical_bound(&i), 0.846_573_590_279_972_7, 1e-13));
        let i = BoundInputs::regular(1001, 1000, a(1, 2));
        assert!(close(classical_bound(&i), 0.007_900_853_925_389_831, 1e-12));
    }

    #[test]
    fn sparse_graph_with_isolated_vertices_clamps_p() {
        // one edge plus 98 isolated vertices: unconstrained optimum is p < 0
        let g = crate::graph::Graph::new(100, [(0, 1)]).unwrap();
        let i = BoundInputs::new(&g, Alpha::ONE);
        assert_eq!(optimal_p(&i), Some(0.0));
        assert!(close(thm2_bound(&i).unwrap(), 0.02, 1e-12));
        assert_eq!(cor1_p(&i), Some(0.0));
        assert!(close(cor1_bound(&i).unwrap(), 0.02, 1e-12));
    }

    #[test]
    fn edgeless_report() {
        let r = bound_report(&empty(5).unwrap(), a(1, 2));
        for name in [
            "dunbar_degree_lower",
            "dunbar_edge_upper",
            "thm2",
            "cor1",
            "thm3",
            "cor2",
        ] {
            let e = r.entry(name).unwrap();
            assert!(
                !e.applicable && e.fraction.is_none() && e.reason.is_some(),
                "{name}"
            );
        }
        assert!(r.note.is_some());
        assert_eq!(r.alpha_lower_max, 0.0);
    }

    #[test]
    fn csv_shape() {
        let r = bound_report(&cycle(5).unwrap(), a(1, 2));
        let row = r.csv_record("cycle:5");
        assert_eq!(row.len(), BoundReport::csv_header().len());
        assert_eq!(row[5], "1/2");
        let thm2_col = BoundReport::csv_header()
            .iter()
            .position(|h| h == "thm2")
            .unwrap();
        assert_eq!(row[thm2_col], "0.615099821");
    }
}
