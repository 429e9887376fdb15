use clap::{Args, Subcommand};
use num_rational::Ratio;
use serde_json::{json, Value};
use zonolat::equivariant::verify_decomposition;
use zonolat::hitchin::{self, HitchinInstance};
use zonolat::posets::{hall_count, signed_factorial_sum, sphere_count, EdgeOrder, LexLabelling};
use zonolat::scalar::{factorial, format_fraction_list};
use zonolat::{Error, Multigraph, Result};

use crate::commands::{decomposition_output, Ctx};
use crate::input::{parse_range, GraphArgs};
use crate::output::{pass, Output};

#[derive(Debug, Clone, Args)]
pub struct ShellingSuite {
    /// Largest complete graph for the count comparison.
    #[arg(long, default_value_t = 5)]
    pub r_max: usize,
    /// Largest denominator of ω entries.
    #[arg(long, default_value_t = 4)]
    pub den_max: i64,
    /// Largest complete graph on which the LEX axiom is checked.
    #[arg(long, default_value_t = 5)]
    pub lex_max: usize,
}

#[derive(Debug, Clone, Args)]
pub struct HitchinSuite {
    #[arg(short = 'n', long, default_value_t = 4)]
    pub n: u64,
    #[arg(short = 'g', long, default_value_t = 2)]
    pub g: u64,
    /// Degrees to check, "a..b" or "a..=b".
    #[arg(long, default_value = "0..4")]
    pub d_range: String,
}

#[derive(Debug, Clone, Subcommand)]
pub enum VerifyCmd {
    /// LEX axiom, mediocre chains, sphere and Hall counts.
    Shelling(ShellingSuite),
    /// Character identity and summand bookkeeping; the built-in instance set
    /// when no graph is given.
    Decomposition {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Supports, ranks and gcd invariance.
    Hitchin(HitchinSuite),
    /// Every suite with default bounds.
    All,
}

/// Sorted tuples of fractions in `[0, 1)` with denominator at most `den`
/// and integral sum.
pub fn omega_grid(r: usize, den: i64) -> Vec<Vec<Ratio<i64>>> {
    let mut vals: Vec<Ratio<i64>> = (1..=den).flat_map(|q| (0..q).map(move |p| Ratio::new(p, q))).collect();
    vals.sort();
    vals.dedup();
    let mut out = Vec::new();
    fn go(start: usize, r: usize, vals: &[Ratio<i64>], cur: &mut Vec<Ratio<i64>>, out: &mut Vec<Vec<Ratio<i64>>>) {
        if cur.len() == r {
            if cur.iter().sum::<Ratio<i64>>().is_integer() {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..vals.len() {
            cur.push(vals[i]);
            go(i, r, vals, cur, out);
            cur.pop();
        }
    }
    go(0, r, &vals, &mut Vec::new(), &mut out);
    out
}

fn square() -> Multigraph {
    Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap()
}

pub fn shelling_suite(s: &ShellingSuite) -> Result<Output> {
    let mut out = Output::new("verify shelling");
    out.header(&["instance", "omegas", "lex_instances", "status"]);
    let mut failures: Vec<String> = Vec::new();
    let mut rows = Vec::new();
    for r in 2..=s.r_max {
        let k = Multigraph::complete(r, 1)?;
        let mut lex_instances = 0usize;
        let grid = omega_grid(r, s.den_max);
        for w in &grid {
            let lab = LexLabelling::new(&k, w, EdgeOrder::lexicographic(&k))?;
            let sc = sphere_count(&k, w)?;
            let med = lab.mediocre_count() as i64;
            let sf = signed_factorial_sum(w);
            let integral = w.iter().all(|x| x.is_integer());
            let hall_ok = integral || hall_count(&k, w)? == sc;
            let positive_ok = (sc > 0) == !integral;
            if sc != med || sc != sf || !hall_ok || !positive_ok {
                failures.push(format!(
                    "K{r} ω=({}): sphere {sc}, mediocre {med}, factorial {sf}",
                    format_fraction_list(w)
                ));
            }
            if r <= s.lex_max {
                match lab.check_lex_axiom() {
                    Ok(n) => lex_instances += n,
                    Err(e) => failures.push(format!("K{r} ω=({}): {e}", format_fraction_list(w))),
                }
            }
        }
        let ok = failures.is_empty();
        rows.push(json!({"instance": format!("K{r}"), "omegas": grid.len(), "lex_instances": lex_instances, "passed": ok}));
        out.row(vec![format!("K{r}"), grid.len().to_string(), lex_instances.to_string(), pass(ok)]);
        if !ok {
            break;
        }
    }
    let sq = square();
    let half = vec![Ratio::new(1, 2); 4];
    for order in ["12,23,34,14", "12,14,23,34"] {
        let lab = LexLabelling::new(&sq, &half, EdgeOrder::parse(&sq, order)?)?;
        let axiom = lab.check_lex_axiom();
        let counts_ok = lab.mediocre_count() as i64 == sphere_count(&sq, &half)?;
        if let Err(e) = &axiom {
            failures.push(format!("square, order {order}: {e}"));
        }
        if !counts_ok {
            failures.push(format!("square, order {order}: mediocre count differs from sphere count"));
        }
        let ok = axiom.is_ok() && counts_ok;
        let n = axiom.as_ref().map(|n| *n).unwrap_or(0);
        rows.push(json!({"instance": format!("square [{order}]"), "omegas": 1, "lex_instances": n, "passed": ok}));
        out.row(vec![format!("square [{order}]"), "1".into(), n.to_string(), pass(ok)]);
    }
    out.set("rows", rows);
    finish(out, failures)
}

fn finish(mut out: Output, failures: Vec<String>) -> Result<Output> {
    out.failed = !failures.is_empty();
    out.set("passed", failures.is_empty());
    if let Some(f) = failures.first() {
        out.note(format!("first counterexample: {f}"));
    }
    out.set("failures", failures);
    Ok(out)
}

fn default_decomposition_instances() -> Vec<(String, Multigraph, Vec<Ratio<i64>>)> {
    let eq = |r: usize, q: i64| vec![Ratio::new(1, q); r];
    vec![
        ("K3".into(), Multigraph::complete(3, 1).unwrap(), eq(3, 3)),
        ("K4".into(), Multigraph::complete(4, 1).unwrap(), eq(4, 4)),
        ("K4".into(), Multigraph::complete(4, 1).unwrap(), eq(4, 2)),
        ("K(3,2)".into(), Multigraph::complete(3, 2).unwrap(), eq(3, 3)),
        ("K(3,3)".into(), Multigraph::complete(3, 3).unwrap(), eq(3, 3)),
        ("square".into(), square(), eq(4, 2)),
        (
            "triangle(2,4,4)".into(),
            Multigraph::triangle(2, 4, 4),
            vec![Ratio::new(1, 2), Ratio::new(1, 2), Ratio::from(0)],
        ),
    ]
}

pub fn decomposition_suite(ctx: &Ctx, g: &GraphArgs) -> Result<Output> {
    if g.graph.is_some() || g.complete.is_some() {
        let (graph, w) = g.graph_and_omega::<i64>()?;
        let rep = verify_decomposition(&graph, &w, &ctx.budget)?;
        let mut out = decomposition_output(&rep, &graph, &w);
        out.set("command", "verify decomposition");
        return Ok(out);
    }
    let mut out = Output::new("verify decomposition");
    out.header(&["graph", "omega", "sigmas", "forests", "dimension", "status"]);
    let mut failures = Vec::new();
    let mut rows: Vec<Value> = Vec::new();
    for (name, graph, w) in default_decomposition_instances() {
        let rep = verify_decomposition(&graph, &w, &ctx.budget)?;
        let forests: usize = rep.per_sigma.iter().map(|p| p.forests_checked).sum();
        for p in rep.per_sigma.iter().filter(|p| !p.passed) {
            failures.push(format!("{name} σ={}: lhs {} rhs {} {:?}", p.sigma, p.lhs, p.rhs, p.forest_failures));
        }
        if rep.per_sigma.iter().all(|p| p.passed) && !rep.passed {
            failures.push(format!("{name}: summand characters do not add up"));
        }
        let om = format_fraction_list(&w);
        rows.push(json!({"graph": name, "omega": om, "sigmas": rep.group.len(), "forests": forests,
                         "dimension": rep.translated[0], "passed": rep.passed}));
        out.row(vec![
            name,
            om,
            rep.group.len().to_string(),
            forests.to_string(),
            rep.translated[0].to_string(),
            pass(rep.passed),
        ]);
    }
    out.set("rows", rows);
    finish(out, failures)
}

pub fn hitchin_suite(ctx: &Ctx, s: &HitchinSuite) -> Result<Output> {
    let ds = parse_range(&s.d_range)?;
    let mut out = Output::new("verify hitchin");
    out.header(&["d", "partition", "branches", "rank", "d_integral", "supports", "gcd_invariant"]);
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for &d in &ds {
        let inst = HitchinInstance::new(s.n, d, s.g)?;
        let rep = hitchin::supports(&inst)?;
        let gcd = hitchin::gcd_invariance::<i64>(&inst, &ctx.budget)?;
        let coprime = gcd.gcd == 1;
        for (row, grow) in rep.rows.iter().zip(&gcd.rows) {
            let inv = grow.at_d == grow.at_gcd;
            if !inv {
                failures.push(format!("d={d} {}: count {} vs {} at gcd", row.partition, grow.at_d, grow.at_gcd));
            }
            if coprime && row.rank != factorial(row.partition.len() as u64 - 1) {
                failures.push(format!("d={d} {}: coprime rank {} is not (ℓ−1)!", row.partition, row.rank));
            }
            rows.push(json!({"d": d, "partition": row.partition.to_string(), "branches": row.branches,
                             "rank": row.rank, "d_integral": row.d_integral, "supports": row.supports,
                             "count": grow.at_d, "gcd_invariant": inv}));
            out.row(vec![
                d.to_string(),
                row.partition.to_string(),
                row.branches.to_string(),
                row.rank.to_string(),
                row.d_integral.to_string(),
                row.supports.to_string(),
                inv.to_string(),
            ]);
        }
    }
    out.set("n", s.n);
    out.set("g", s.g);
    out.set("rows", rows);
    finish(out, failures)
}

pub fn verify(ctx: &Ctx, c: &VerifyCmd) -> Result<Output> {
    match c {
        VerifyCmd::Shelling(s) => shelling_suite(s),
        VerifyCmd::Decomposition { g } => decomposition_suite(ctx, g),
        VerifyCmd::Hitchin(s) => hitchin_suite(ctx, s),
        VerifyCmd::All => {
            let none = GraphArgs { graph: None, complete: None, mult: 1, omega: None };
            let suites = [
                ("shelling", shelling_suite(&ShellingSuite { r_max: 5, den_max: 4, lex_max: 5 })),
                ("decomposition", decomposition_suite(ctx, &none)),
                ("hitchin", hitchin_suite(ctx, &HitchinSuite { n: 4, g: 2, d_range: "0..4".into() })),
            ];
            let mut out = Output::new("verify all");
            out.header(&["suite", "status"]);
            let mut failures = Vec::new();
            let mut detail = serde_json::Map::new();
            for (name, res) in suites {
                let sub = res.map_err(|e| Error::Verification(format!("{name}: {e}")))?;
                if sub.failed {
                    let first = sub.json.get("failures").cloned().unwrap_or(Value::Null);
                    failures.push(format!("{name}: {first}"));
                }
                out.row(vec![name.into(), pass(!sub.failed)]);
                detail.insert(name.into(), Value::Object(sub.json));
            }
            out.set("suites", Value::Object(detail));
            finish(out, failures)
        }
    }
}
