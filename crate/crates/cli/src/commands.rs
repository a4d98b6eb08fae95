use std::fmt::Write as _;
use std::path::Path;

use alphadom::bounds::fmt9;
use alphadom::{
    best_of_trials, bound_report, derandomize_alpha, exact_number, verify as check, Alpha,
    BoundReport, ConstructionKind, ConstructionParams, Error, Mode, PRule,
};
use anyhow::{bail, Context, Result};
use serde::Serialize;

use crate::source::Source;
use crate::{ConstructMode, Format, PRuleArg};

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_table(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn join(set: &[usize]) -> String {
    set.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct Labeled<'a, T> {
    graph: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

pub fn bounds(src: &Source, alpha: Alpha, format: Format) -> Result<String> {
    let report = bound_report(&src.graph, alpha);
    match format {
        Format::Json => json(&Labeled {
            graph: &src.label,
            body: &report,
        }),
        Format::Csv => csv_table(&BoundReport::csv_header(), &[report.csv_record(&src.label)]),
        Format::Text => Ok(bounds_text(&src.label, &report)),
    }
}

fn bounds_text(label: &str, r: &BoundReport) -> String {
    let i = &r.inputs;
    let mut s = String::new();
    let _ = writeln!(s, "graph      {label}");
    let _ = writeln!(
        s,
        "n {}  m {}  min degree {}  max degree {}  alpha {}  delta_hat {}",
        i.n, i.m, i.min_degree, i.max_degree, i.alpha, i.delta_hat
    );
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "{:<20} {:<12} {:<6} {:>14} {:>18}",
        "bound", "target", "side", "fraction of n", "vertices"
    );
    for e in &r.entries {
        let target = serde_json::to_value(e.target).expect("plain enum");
        let side = serde_json::to_value(e.side).expect("plain enum");
        let (target, side) = (target.as_str().unwrap_or(""), side.as_str().unwrap_or(""));
        match (e.fraction, e.absolute) {
            (Some(f), Some(a)) => {
                let _ = writeln!(
                    s,
                    "{:<20} {:<12} {:<6} {:>14} {:>18}",
                    e.name,
                    target,
                    side,
                    fmt9(f),
                    fmt9(a)
                );
            }
            _ => {
                let _ = writeln!(
                    s,
                    "{:<20} {:<12} {:<6} n/a: {}",
                    e.name,
                    target,
                    side,
                    e.reason.unwrap_or("not applicable")
                );
            }
        }
    }
    let _ = writeln!(s);
    let _ = writeln!(
        s,
        "{} <= gamma_alpha <= {}",
        fmt9(r.alpha_lower_max),
        fmt9(r.alpha_upper_min)
    );
    let _ = writeln!(s, "alpha-rate number <= {}", fmt9(r.rate_upper_min));
    if let Some(note) = r.note {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

fn read_set(path: &Path) -> Result<Vec<usize>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("{}: '{t}' is not a vertex index", path.display()))
        })
        .collect()
}

/// Rendered report and whether the set is valid.
pub fn verify(src: &Source, set_file: &Path, mode: Mode, format: Format) -> Result<(String, bool)> {
    let set = read_set(set_file)?;
    let report = check(&src.graph, &set, mode)?;
    let text = match format {
        Format::Json => json(&Labeled {
            graph: &src.label,
            body: &report,
        })?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .deficiencies
                .iter()
                .map(|(v, d)| {
                    vec![
                        v.to_string(),
                        d.required.to_string(),
                        d.achieved.to_string(),
                    ]
                })
                .collect();
            csv_table(&["vertex", "required", "achieved"].map(String::from), &rows)?
        }
        Format::Text => {
            let mut s = format!(
                "{}: {} set of size {} on {}\n",
                if report.valid { "valid" } else { "invalid" },
                report.mode,
                report.set_size,
                src.label
            );
            for (v, d) in &report.deficiencies {
                let _ = writeln!(s, "vertex {v}: needs {}, has {}", d.required, d.achieved);
            }
            s
        }
    };
    Ok((text, report.valid))
}

pub struct ConstructRequest {
    pub mode: ConstructMode,
    pub alpha: Alpha,
    pub trials: usize,
    pub seed: u64,
    pub p_rule: PRuleArg,
    pub p: Option<f64>,
    pub derandomize: bool,
    pub greedy_repair: bool,
}

#[derive(Serialize)]
struct Constructed<'a> {
    graph: &'a str,
    mode: Mode,
    method: &'static str,
    p_used: f64,
    seed: Option<u64>,
    trials: usize,
    trial_index: Option<u64>,
    size: usize,
    set: Vec<usize>,
}

pub fn construct(src: &Source, req: &ConstructRequest, format: Format) -> Result<String> {
    let g = &src.graph;
    let (mode, kind) = match req.mode {
        ConstructMode::Alpha => (Mode::Alpha(req.alpha), ConstructionKind::Alpha),
        ConstructMode::Rate => (Mode::AlphaRate(req.alpha), ConstructionKind::Rate),
    };
    let out = if req.derandomize {
        if req.mode == ConstructMode::Rate {
            bail!("--derandomize is only available for --mode alpha");
        }
        let d = derandomize_alpha(g, req.alpha)?;
        Constructed {
            graph: &src.label,
            mode,
            method: "derandomized",
            p_used: d.p_used,
            seed: None,
            trials: 0,
            trial_index: None,
            size: d.set.len(),
            set: d.set,
        }
    } else {
        if req.trials == 0 {
            bail!("--trials must be at least 1");
        }
        let params = ConstructionParams {
            trials: req.trials,
            master_seed: req.seed,
            p_override: req.p,
            p_rule: match req.p_rule {
                PRuleArg::Thm => PRule::Optimal,
                PRuleArg::Cor => PRule::Simplified,
            },
            greedy_repair: req.greedy_repair,
        };
        let method = if req.greedy_repair {
            "random+greedy-repair"
        } else {
            "random"
        };
        match best_of_trials(g, req.alpha, kind, &params) {
            Ok(o) => Constructed {
                graph: &src.label,
                mode,
                method,
                p_used: o.p_used,
                seed: Some(req.seed),
                trials: req.trials,
                trial_index: Some(o.trial_index),
                size: o.size,
                set: o.set,
            },
            Err(Error::EmptySetOptimal) => {
                eprintln!("note: every requirement is zero; the empty set is optimal");
                Constructed {
                    graph: &src.label,
                    mode,
                    method,
                    p_used: 0.0,
                    seed: Some(req.seed),
                    trials: req.trials,
                    trial_index: None,
                    size: 0,
                    set: Vec::new(),
                }
            }
            Err(e) => return Err(e.into()),
        }
    };
    if !check(g, &out.set, mode)?.valid {
        bail!("internal error: constructed set failed verification");
    }
    match format {
        Format::Json => json(&out),
        Format::Csv => csv_table(
            &[
                "graph", "mode", "method", "p_used", "seed", "trials", "size", "set",
            ]
            .map(String::from),
            &[vec![
                out.graph.to_string(),
                out.mode.to_string(),
                out.method.to_string(),
                fmt9(out.p_used),
                out.seed.map(|s| s.to_string()).unwrap_or_default(),
                out.trials.to_string(),
                out.size.to_string(),
                join(&out.set),
            ]],
        ),
        Format::Text => {
            let mut s = format!("{} {} set on {}\n", out.method, out.mode, out.graph);
            let _ = writeln!(s, "size    {}", out.size);
            let _ = writeln!(s, "p_used  {}", fmt9(out.p_used));
            if let Some(seed) = out.seed {
                let _ = writeln!(s, "seed    {seed}");
                let _ = writeln!(s, "trials  {}", out.trials);
            }
            let _ = writeln!(s, "set     {}", join(&out.set));
            Ok(s)
        }
    }
}

pub fn exact(src: &Source, mode: Mode, format: Format) -> Result<String> {
    let r = exact_number(&src.graph, mode).map_err(|e| match e {
        Error::TooLarge { .. } => anyhow::anyhow!(
            "{e}; use `bounds` for guaranteed intervals or `construct` for an upper bound"
        ),
        e => e.into(),
    })?;
    match format {
        Format::Json => json(&Labeled {
            graph: &src.label,
            body: &r,
        }),
        Format::Csv => csv_table(
            &["graph", "mode", "value", "witness"].map(String::from),
            &[vec![
                src.label.clone(),
                r.mode.to_string(),
                r.value.to_string(),
                join(&r.witness),
            ]],
        ),
        Format::Text => Ok(format!(
            "{} number of {}: {}\nwitness {}\n",
            r.mode,
            src.label,
            r.value,
            join(&r.witness)
        )),
    }
}
