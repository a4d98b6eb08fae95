use std::path::Path;

use alphadom::generators::{
    circulant, complete, cycle, empty, gnp, path, petersen, random_regular,
};
use alphadom::io::{parse_auto, parse_edge_list, IndexBase};
use alphadom::Graph;
use anyhow::{bail, Context, Result};

/// A loaded graph plus the label used in table rows.
pub struct Source {
    pub label: String,
    pub graph: Graph,
}

/// Reads `path`, choosing the format from its first meaningful token.
/// Duplicate edges are merged and reported on stderr.
pub fn load_file(path: &Path, one_based: bool) -> Result<Source> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let built = if one_based {
        parse_edge_list(&text, IndexBase::One)
    } else {
        parse_auto(&text)
    }
    .with_context(|| format!("cannot parse {}", path.display()))?;
    if built.duplicate_edges > 0 {
        eprintln!(
            "warning: {}: merged {} duplicate edge(s)",
            path.display(),
            built.duplicate_edges
        );
    }
    let label = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(Source {
        label,
        graph: built.graph,
    })
}

fn num<T: std::str::FromStr>(field: &str, what: &str, spec: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| anyhow::anyhow!("generator '{spec}': bad {what} '{field}'"))
}

/// Offsets like `1-500` or `1,3,5-7`.
fn offsets(field: &str, spec: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in field.split(',') {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (num(a, "offset", spec)?, num(b, "offset", spec)?);
                if a > b {
                    bail!("generator '{spec}': empty offset range '{part}'");
                }
                out.extend(a..=b);
            }
            None => out.push(num(part, "offset", spec)?),
        }
    }
    Ok(out)
}

/// Builds a graph from a compact spec such as `cycle:5`,
/// `circulant:2001:1-500`, `gnp:20:0.3:7` or `regular:50:4:1`.
pub fn generate(spec: &str) -> Result<Source> {
    let fields: Vec<&str> = spec.split(':').collect();
    let arity = |k: usize| -> Result<()> {
        if fields.len() != k + 1 {
            bail!("generator '{spec}': '{}' takes {k} argument(s)", fields[0]);
        }
        Ok(())
    };
    let graph = match fields[0] {
        "cycle" | "path" | "complete" | "empty" => {
            arity(1)?;
            let n = num(fields[1], "vertex count", spec)?;
            match fields[0] {
                "cycle" => cycle(n),
                "path" => path(n),
                "complete" => complete(n),
                _ => empty(n),
            }
        }
        "petersen" => {
            arity(0)?;
            Ok(petersen())
        }
        "circulant" => {
            arity(2)?;
            circulant(num(fields[1], "vertex count", spec)?, &offsets(fields[2], spec)?)
        }
        "gnp" => {
            arity(3)?;
            gnp(
                num(fields[1], "vertex count", spec)?,
                num(fields[2], "probability", spec)?,
                num(fields[3], "seed", spec)?,
            )
        }
        "regular" => {
            arity(3)?;
            random_regular(
                num(fields[1], "vertex count", spec)?,
                num(fields[2], "degree", spec)?,
                num(fields[3], "seed", spec)?,
            )
        }
        other => bail!(
            "unknown generator '{other}' (expected cycle, path, complete, empty, petersen, circulant, gnp or regular)"
        ),
    }
    .with_context(|| format!("generator '{spec}'"))?;
    Ok(Source {
        label: spec.to_string(),
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        let s = generate("circulant:12:1-2,4").unwrap();
        assert_eq!(s.graph.max_degree(), 6);
        assert_eq!(generate("petersen").unwrap().graph.m(), 15);
        assert_eq!(generate("gnp:10:0:7").unwrap().graph.m(), 0);
        assert!(generate("cycle").is_err());
        assert!(generate("cycle:x").is_err());
        assert!(generate("star:4").is_err());
        assert!(generate("circulant:10:4-2").is_err());
    }
}
