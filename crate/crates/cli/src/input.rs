use std::path::Path;

use clap::Args;
use num_rational::Ratio;
use serde_json::Value;
use zonolat::scalar::{parse_fraction_list, ExactInt};
use zonolat::zonotopes::{VectorConfig, Zonotope};
use zonolat::{Error, GraphSpec, Multigraph, Result};

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Graph literal: a JSON file path or inline JSON.
    #[arg(long, conflicts_with = "complete")]
    pub graph: Option<String>,
    /// Complete graph on this many vertices.
    #[arg(long)]
    pub complete: Option<usize>,
    /// Edge multiplicity for --complete.
    #[arg(long, default_value_t = 1, requires = "complete")]
    pub mult: u64,
    /// Translation vector, e.g. "1/2,1/2,0"; a single value is repeated.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ZonoArgs {
    #[command(flatten)]
    pub g: GraphArgs,
    /// Generators as JSON rows, e.g. "[[1,0],[1,1]]" (file path or inline).
    #[arg(long, conflicts_with_all = ["graph", "complete", "spec"])]
    pub vectors: Option<String>,
    /// Zonotope spec file: a graph literal or {"vectors": ..., "omega": [...]}.
    #[arg(long, conflicts_with_all = ["graph", "complete"])]
    pub spec: Option<String>,
}

fn read_json(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn graph_from_value(v: &Value) -> Result<Multigraph> {
    let spec: GraphSpec = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("graph literal: {e}")))?;
    spec.to_graph()
}

pub fn parse_omega<T: ExactInt>(s: Option<&str>, r: usize) -> Result<Vec<Ratio<T>>> {
    let Some(s) = s else {
        return Ok(vec![Ratio::from_integer(T::zero()); r]);
    };
    let w = parse_fraction_list::<T>(s)?;
    if w.len() == 1 && r > 1 {
        return Ok(vec![w[0].clone(); r]);
    }
    if w.len() != r {
        return Err(Error::InvalidInput(format!("ω has {} entries, expected {r}", w.len())));
    }
    Ok(w)
}

fn omega_from_value(v: &Value) -> Result<Option<String>> {
    match v.get("omega") {
        None => Ok(None),
        Some(Value::Array(a)) => {
            let parts: Vec<String> = a
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(Error::Parse("omega entries must be strings".into())),
                })
                .collect::<Result<_>>()?;
            Ok(Some(parts.join(",")))
        }
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(_) => Err(Error::Parse("omega must be a list".into())),
    }
}

impl GraphArgs {
    pub fn graph(&self) -> Result<Multigraph> {
        match (&self.graph, self.complete) {
            (Some(g), _) => graph_from_value(&read_json(g)?),
            (None, Some(n)) => Multigraph::complete(n, self.mult),
            (None, None) => Err(Error::InvalidInput("give --graph or --complete".into())),
        }
    }

    pub fn graph_and_omega<T: ExactInt>(&self) -> Result<(Multigraph, Vec<Ratio<T>>)> {
        let g = self.graph()?;
        let mut om = self.omega.clone();
        if om.is_none() {
            if let Some(path) = &self.graph {
                om = omega_from_value(&read_json(path)?)?;
            }
        }
        let w = parse_omega(om.as_deref(), g.r())?;
        Ok((g, w))
    }
}

/// A zonotope together with the graph it came from, if any.
pub struct ZonoInput<T> {
    pub zonotope: Zonotope<T>,
    pub graph: Option<Multigraph>,
}

fn vectors_zonotope<T: ExactInt>(v: &Value, omega: Option<&str>) -> Result<ZonoInput<T>> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("vectors: {e}")))?;
    let r = rows.first().map(Vec::len).ok_or_else(|| Error::InvalidInput("no generators".into()))?;
    let rows: Vec<Vec<T>> = rows.iter().map(|x| x.iter().map(|&c| T::from_i64_exact(c)).collect()).collect();
    let config = VectorConfig::new(r, rows)?;
    let w = parse_omega::<T>(omega, r)?;
    let zonotope = Zonotope::new(config, vec![T::zero(); r], w)?;
    Ok(ZonoInput { zonotope, graph: None })
}

impl ZonoArgs {
    pub fn load<T: ExactInt>(&self) -> Result<ZonoInput<T>> {
        if let Some(v) = &self.vectors {
            return vectors_zonotope(&read_json(v)?, self.g.omega.as_deref());
        }
        if let Some(s) = &self.spec {
            let v = read_json(s)?;
            let om = match &self.g.omega {
                Some(o) => Some(o.clone()),
                None => omega_from_value(&v)?,
            };
            if let Some(vecs) = v.get("vectors") {
                return vectors_zonotope(vecs, om.as_deref());
            }
            let g = graph_from_value(&v)?;
            let w = parse_omega::<T>(om.as_deref(), g.r())?;
            let zonotope = Zonotope::graphical(&g).translated(w)?;
            return Ok(ZonoInput { zonotope, graph: Some(g) });
        }
        let (g, w) = self.g.graph_and_omega::<T>()?;
        let zonotope = Zonotope::graphical(&g).translated(w)?;
        Ok(ZonoInput { zonotope, graph: Some(g) })
    }
}

/// `"a..b"` (exclusive) or `"a..=b"`.
pub fn parse_range(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::Parse(format!("invalid range `{s}`"));
    if let Some((a, b)) = s.split_once("..=") {
        let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        return Ok((a..=b).collect());
    }
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    Ok((a..b).collect())
}
