use clap::{Args, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde_json::{json, Value};
use zonolat::equivariant::{
    interior_orbit_count, orientation_character, permutation_character, verify_decomposition, DecompositionReport,
};
use zonolat::graphs::{ehrhart_of_complete_graph, tutte_complete, GraphSpec};
use zonolat::hitchin::{self, HitchinInstance};
use zonolat::polynomial::Poly;
use zonolat::posets::{hall_count, omega_vector, signed_factorial_sum, sphere_count, EdgeOrder, LexLabelling};
use zonolat::scalar::{format_fraction, format_fraction_list, ExactInt};
use zonolat::zonotopes::{complete_count_polynomial, graphical_count, Budget, Zonotope};
use zonolat::{Error, IntPartition, Multigraph, Result};

use crate::input::{GraphArgs, ZonoArgs, ZonoInput};
use crate::output::{num, pass, strs, Output};

/// Settings shared by every command.
pub struct Ctx {
    pub budget: Budget,
    pub edge_order: Option<String>,
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Reciprocity,
    Mobius,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub z: ZonoArgs,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    /// Per-flat terms of the Möbius count.
    #[arg(long)]
    pub breakdown: bool,
    /// List the interior points (oracle only).
    #[arg(long)]
    pub points: bool,
}

#[derive(Debug, Clone, Args)]
pub struct EhrhartArgs {
    #[command(flatten)]
    pub z: ZonoArgs,
    /// Compare L(1) and the interior count against enumeration.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ShellingArgs {
    #[command(flatten)]
    pub g: GraphArgs,
    /// List the mediocre maximal chains.
    #[arg(long)]
    pub chains: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum HitchinCmd {
    /// Supports and local-system ranks for every partition of n.
    Supports {
        #[arg(short = 'n', long)]
        n: u64,
        #[arg(short = 'd', long, allow_hyphen_values = true)]
        d: i64,
        #[arg(short = 'g', long, default_value_t = 2)]
        g: u64,
    },
    /// Rank of the local system of one partition.
    Rank {
        #[arg(short = 'm', long)]
        m: String,
        #[arg(short = 'd', long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Number of irreducible components of the fibre over a stratum.
    Stalk {
        #[arg(short = 'm', long)]
        m: String,
        #[arg(short = 'd', long, allow_hyphen_values = true)]
        d: i64,
        #[arg(short = 'g', long, default_value_t = 2)]
        g: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Tutte,
    Table1,
    Figure5,
    ExamplePolynomials,
}

#[derive(Debug, Clone, Args)]
pub struct TablesArgs {
    #[arg(value_enum)]
    pub which: Table,
    /// Rank n for table1 and example-polynomials; largest vertex count for tutte.
    #[arg(short = 'n', long, default_value_t = 4)]
    pub n: u64,
}

fn partition_arg(s: &str) -> Result<IntPartition> {
    s.parse().map_err(|_| Error::Parse(format!("invalid partition `{s}`")))
}

fn flat_label<T: ExactInt>(z: &Zonotope<T>, mask: u64) -> String {
    match z.flat_partition(mask) {
        Some(p) => p.to_string(),
        None => {
            let idx: Vec<String> =
                (0..64).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", idx.join(","))
        }
    }
}

pub fn count<T: ExactInt>(ctx: &Ctx, a: &CountArgs) -> Result<Output> {
    let ZonoInput { zonotope: z, graph } = a.z.load::<T>()?;
    let mut out = Output::new("count");
    out.set("r", z.r());
    out.set("dim", z.dim());
    out.set("generators", z.config.generator_count());
    out.set("omega", strs(z.omega.iter().map(format_fraction)));
    let methods = match a.method {
        Method::All => vec![Method::Oracle, Method::Reciprocity, Method::Mobius],
        m => vec![m],
    };
    let mut counts: Vec<(&str, T)> = Vec::new();
    let mut points = None;
    let mut mobius = None;
    for m in methods {
        match m {
            Method::Oracle => {
                let pts = z.interior_points(&ctx.budget)?;
                counts.push(("oracle", T::from_i64_exact(pts.len() as i64)));
                points = Some(pts);
            }
            Method::Reciprocity => counts.push(("reciprocity", z.count_via_reciprocity(&ctx.budget)?)),
            Method::Mobius => {
                let mc = z.mobius_count(&ctx.budget)?;
                counts.push(("mobius", mc.total.clone()));
                mobius = Some(mc);
            }
            Method::All => unreachable!(),
        }
    }
    let agree = counts.windows(2).all(|w| w[0].1 == w[1].1);
    out.failed = !agree;
    out.set("count", num(&counts[0].1));
    out.set("methods", Value::Object(counts.iter().map(|(k, v)| (k.to_string(), num(v))).collect()));
    out.set("agree", agree);
    let names: Vec<&str> = counts.iter().map(|c| c.0).collect();
    out.note(format!("count: {} ({})", counts[0].1, if agree { "agree: " } else { "DISAGREE: " }.to_string() + &names.join(", ")));
    if a.points {
        match &points {
            Some(p) => out.set("points", Value::Array(p.iter().map(|x| Value::Array(x.iter().map(num).collect())).collect())),
            None => return Err(Error::InvalidInput("--points needs the oracle method".into())),
        }
    }
    if a.breakdown {
        let mc = match mobius {
            Some(m) => m,
            None => z.mobius_count(&ctx.budget)?,
        };
        out.header(&["flat", "rank", "coeff", "count"]);
        let mut rows = Vec::new();
        for r in mc.rows.iter().filter(|r| !r.coeff.is_zero()) {
            let label = flat_label(&z, r.flat_mask);
            rows.push(json!({"flat": label, "rank": r.rank, "coeff": num(&r.coeff), "count": num(&r.count)}));
            out.row(vec![label, r.rank.to_string(), r.coeff.to_string(), r.count.to_string()]);
        }
        out.set("breakdown", rows);
        if let Some(g) = graph.as_ref().filter(|g| g.is_complete_type()) {
            let gc = graphical_count(g, &z.omega, &ctx.budget)?;
            let rows: Vec<Value> = gc
                .rows
                .iter()
                .map(|r| {
                    json!({"type": r.block_type.to_string(), "b": r.b, "l": r.l, "coeff_sum": r.coeff_sum,
                           "contribution": num(&r.contribution)})
                })
                .collect();
            out.set("by_type", rows);
            if gc.total != counts[0].1 {
                out.failed = true;
            }
        }
    } else {
        out.header(&["method", "count"]);
        for (k, v) in &counts {
            out.row(vec![k.to_string(), v.to_string()]);
        }
    }
    Ok(out)
}

pub fn ehrhart<T: ExactInt>(ctx: &Ctx, a: &EhrhartArgs) -> Result<Output> {
    let ZonoInput { zonotope: z, graph } = a.z.load::<T>()?;
    let qp = z.ehrhart(&ctx.budget)?;
    let mut out = Output::new("ehrhart");
    out.set("r", z.r());
    out.set("dim", z.dim());
    out.set("omega", strs(z.omega.iter().map(format_fraction)));
    out.set("period", num(&qp.period));
    let period = qp.period.to_i64_exact();
    out.header(&["residue", "polynomial"]);
    let mut cons = Vec::new();
    for k in 0..period {
        let p = Poly::new(qp.constituent(k));
        cons.push(json!({"residue": k, "polynomial": p.to_string(), "coeffs": p.coeffs().iter().map(num).collect::<Vec<_>>()}));
        out.row(vec![k.to_string(), p.to_string()]);
    }
    out.set("constituents", cons);
    let terms: Vec<Value> = qp
        .terms
        .iter()
        .map(|t| json!({"flat": flat_label(&z, t.flat_mask), "rank": t.rank, "coeff": num(&t.coeff)}))
        .collect();
    out.set("terms", terms);
    let interior = z.count_via_reciprocity(&ctx.budget)?;
    out.set("interior_count", num(&interior));
    out.note(format!("period {}, interior count {interior}", qp.period));
    if let Some(g) = &graph {
        if *g == Multigraph::complete(g.r(), 1)? && z.omega.iter().all(|w| w.is_integer()) {
            let table = ehrhart_of_complete_graph::<T>(g.r());
            let ok = table == Poly::new(qp.constituent(0));
            out.set("matches_complete_graph_table", ok);
            out.failed |= !ok;
        }
    }
    if a.check {
        let closed = T::from_i64_exact(z.lattice_points(false, &ctx.budget)?.len() as i64);
        let open = z.interior_count(&ctx.budget)?;
        let ok = closed == qp.eval(1) && open == interior;
        out.set("check", json!({"lattice_points": num(&closed), "interior_points": num(&open), "ok": ok}));
        out.note(format!("enumeration check: {}", pass(ok)));
        out.failed |= !ok;
    }
    Ok(out)
}

pub fn character(ctx: &Ctx, a: &GraphArgs) -> Result<Output> {
    let (g, w) = a.graph_and_omega::<i64>()?;
    let chi = permutation_character(&g, &w, &ctx.budget)?;
    let orbits = interior_orbit_count(&g, &w, &ctx.budget)?;
    let mut out = Output::new("character");
    out.set("omega", strs(w.iter().map(format_fraction)));
    out.set("group_order", chi.group.len());
    out.header(&["sigma", "cycle_type", "fixed", "orientation"]);
    let mut rows = Vec::new();
    for (s, v) in chi.group.iter().zip(&chi.values) {
        let o = orientation_character(&g, s)?;
        let ct: Vec<String> = s.cycle_lengths().iter().map(|l| l.to_string()).collect();
        rows.push(json!({"sigma": s.to_string(), "cycle_type": ct.join(","), "fixed": v, "orientation": o}));
        out.row(vec![s.to_string(), ct.join(","), v.to_string(), o.to_string()]);
    }
    out.set("characters", rows);
    let sum: i64 = chi.values.iter().sum();
    let n = chi.group.len() as i64;
    let burnside_ok = sum % n == 0 && (sum / n) as usize == orbits;
    let class_fn = chi.is_class_function();
    out.set("orbits", orbits);
    out.set("burnside", json!({"sum": sum, "group_order": n, "ok": burnside_ok}));
    out.set("class_function", class_fn);
    out.note(format!("|Aut| = {n}, dimension {}, orbits {orbits}, Burnside {}", chi.dimension(), pass(burnside_ok)));
    out.failed = !(burnside_ok && class_fn);
    Ok(out)
}

pub fn decomposition_output(rep: &DecompositionReport<i64>, g: &Multigraph, w: &[Ratio<i64>]) -> Output {
    let mut out = Output::new("verify-decomposition");
    out.set("graph", serde_json::to_value(GraphSpec::from_graph(g)).unwrap());
    out.set("omega", strs(w.iter().map(format_fraction)));
    out.header(&["sigma", "lhs", "rhs", "forests", "status"]);
    let mut per = Vec::new();
    for p in &rep.per_sigma {
        let terms: Vec<Value> = p
            .terms
            .iter()
            .map(|t| {
                json!({"flat": t.flat.to_string(), "alpha": t.alpha, "signed_mobius": t.signed_mobius,
                       "fixed_count": t.fixed_count, "value": t.value})
            })
            .collect();
        per.push(json!({"sigma": p.sigma.to_string(), "lhs": p.lhs, "rhs": p.rhs, "terms": terms,
                        "forests_checked": p.forests_checked, "forest_failures": p.forest_failures, "passed": p.passed}));
        out.row(vec![p.sigma.to_string(), p.lhs.to_string(), p.rhs.to_string(), p.forests_checked.to_string(), pass(p.passed)]);
    }
    out.set("per_sigma", per);
    let summands: Vec<Value> = rep
        .summands
        .iter()
        .map(|s| {
            json!({"representative": s.representative.to_string(), "orbit": strs(&s.orbit),
                   "stabilizer": strs(&s.stabilizer), "alpha": s.alpha, "homology": s.homology,
                   "zonotope": s.zonotope, "induced": s.induced, "dimension": s.dimension})
        })
        .collect();
    out.set("group", strs(&rep.group));
    out.set("summands", summands);
    out.set("base_character", rep.base.clone());
    out.set("translated_character", rep.translated.clone());
    out.set("dimension_sum", rep.dimension_sum);
    out.set("passed", rep.passed);
    out.note(format!("C(Z+ω) = {} = C(Z) {} + {} induced summands", rep.translated[0], rep.base[0], rep.summands.len()));
    for s in &rep.summands {
        out.note(format!(
            "  S = {}: orbit {}, |Stab| {}, dimension {}",
            s.representative,
            s.orbit.len(),
            s.stabilizer.len(),
            s.dimension
        ));
    }
    out.note(format!("decomposition: {}", pass(rep.passed)));
    out.failed = !rep.passed;
    out
}

pub fn decomposition(ctx: &Ctx, a: &GraphArgs) -> Result<Output> {
    let (g, w) = a.graph_and_omega::<i64>()?;
    let rep = verify_decomposition(&g, &w, &ctx.budget)?;
    Ok(decomposition_output(&rep, &g, &w))
}

fn edge_order(ctx: &Ctx, g: &Multigraph) -> Result<EdgeOrder> {
    match &ctx.edge_order {
        Some(s) => EdgeOrder::parse(g, s),
        None => Ok(EdgeOrder::lexicographic(g)),
    }
}

pub fn shelling(ctx: &Ctx, a: &ShellingArgs) -> Result<Output> {
    let (g, w) = a.g.graph_and_omega::<i64>()?;
    let order = edge_order(ctx, &g)?;
    let order_names: Vec<String> = (0..order.len()).map(|e| order.edge_name(e)).collect();
    let lab = LexLabelling::new(&g, &w, order)?;
    let sphere = sphere_count(&g, &w)?;
    let mediocre = lab.mediocre_count() as i64;
    let hall = if w.iter().any(|x| !x.is_integer()) { Some(hall_count(&g, &w)?) } else { None };
    let factorial = g.is_complete_type().then(|| signed_factorial_sum(&w));
    let axiom = lab.check_lex_axiom();
    let mut out = Output::new("shelling");
    out.set("omega", strs(w.iter().map(format_fraction)));
    out.set("edge_order", order_names);
    out.set("non_integral_flats", lab.poset().len() - 2);
    out.set("sphere_count", sphere);
    out.set("mediocre_chains", mediocre);
    out.set("hall_count", hall);
    out.set("signed_factorial", factorial);
    let agree = mediocre == sphere && hall.is_none_or(|h| h == sphere) && factorial.is_none_or(|f| f == sphere);
    out.set("agree", agree);
    match &axiom {
        Ok(n) => out.set("lex_axiom", json!({"ok": true, "instances": n})),
        Err(e) => out.set("lex_axiom", json!({"ok": false, "counterexample": e})),
    }
    out.header(&["quantity", "value"]);
    out.row(vec!["sphere_count".into(), sphere.to_string()]);
    out.row(vec!["mediocre_chains".into(), mediocre.to_string()]);
    if let Some(h) = hall {
        out.row(vec!["hall_count".into(), h.to_string()]);
    }
    if let Some(f) = factorial {
        out.row(vec!["signed_factorial".into(), f.to_string()]);
    }
    out.row(vec!["lex_axiom".into(), pass(axiom.is_ok())]);
    if a.chains || ctx.verbose {
        let chains: Vec<String> = lab.mediocre_chains().iter().map(|c| lab.describe_chain(c)).collect();
        for c in &chains {
            out.note(format!("mediocre: {c}"));
        }
        out.set("chains", chains);
    }
    out.failed = !agree || axiom.is_err();
    Ok(out)
}

pub fn hitchin_cmd(ctx: &Ctx, c: &HitchinCmd) -> Result<Output> {
    match c {
        HitchinCmd::Supports { n, d, g } => {
            let inst = HitchinInstance::new(*n, *d, *g)?;
            let rep = hitchin::supports(&inst)?;
            let mut out = Output::new("hitchin supports");
            out.set("n", *n);
            out.set("d", *d);
            out.set("g", *g);
            out.set("moduli_dimension", inst.moduli_dimension());
            out.header(&["partition", "branches", "d_integral", "rank", "supports"]);
            let mut rows = Vec::new();
            for r in &rep.rows {
                rows.push(json!({"partition": r.partition.to_string(), "branches": r.branches,
                                 "d_integral": r.d_integral, "rank": r.rank, "supports": r.supports}));
                out.row(vec![
                    r.partition.to_string(),
                    r.branches.to_string(),
                    r.d_integral.to_string(),
                    r.rank.to_string(),
                    r.supports.to_string(),
                ]);
            }
            out.set("rows", rows);
            let sup: Vec<String> = rep.supporting().iter().map(|p| p.to_string()).collect();
            out.note(format!("supports: {}", sup.join(" ")));
            Ok(out)
        }
        HitchinCmd::Rank { m, d } => {
            let p = partition_arg(m)?;
            let rank = hitchin::rank_formula(&p, *d);
            let mut out = Output::new("hitchin rank");
            out.set("partition", p.to_string());
            out.set("d", *d);
            out.set("omega", strs(omega_vector::<i64>(&p, *d).iter().map(format_fraction)));
            out.set("d_integral", hitchin::is_d_integral(&p, *d));
            out.set("rank", rank);
            out.header(&["partition", "d", "rank"]);
            out.row(vec![p.to_string(), d.to_string(), rank.to_string()]);
            if p.len() >= 2 {
                let sc = sphere_count(&Multigraph::complete(p.len(), 1)?, &omega_vector::<i64>(&p, *d))?;
                out.set("sphere_count", sc);
                out.failed = sc != rank;
            }
            Ok(out)
        }
        HitchinCmd::Stalk { m, d, g } => {
            let p = partition_arg(m)?;
            let inst = HitchinInstance::new(p.n(), *d, *g)?;
            let s = hitchin::stalk_dimension::<i64>(&p, &inst, &ctx.budget)?;
            let mut out = Output::new("hitchin stalk");
            out.set("partition", p.to_string());
            out.set("d", *d);
            out.set("g", *g);
            out.set("graph", serde_json::to_value(GraphSpec::from_graph(&s.graph)).unwrap());
            out.set("omega", strs(s.omega.iter().map(format_fraction)));
            out.set("count", s.formula);
            out.set("oracle", s.oracle);
            out.header(&["partition", "d", "g", "count"]);
            out.row(vec![p.to_string(), d.to_string(), g.to_string(), s.formula.to_string()]);
            Ok(out)
        }
    }
}

pub fn tables(ctx: &Ctx, a: &TablesArgs) -> Result<Output> {
    match a.which {
        Table::Tutte => {
            let mut out = Output::new("tables tutte");
            out.header(&["n", "tutte", "ehrhart"]);
            let mut rows = Vec::new();
            for n in 2..=a.n.max(2) as usize {
                let t = tutte_complete::<i64>(n - 1).to_string();
                let e = ehrhart_of_complete_graph::<i64>(n).to_string();
                rows.push(json!({"n": n, "tutte": t, "ehrhart": e}));
                out.row(vec![n.to_string(), t, e]);
            }
            out.set("rows", rows);
            Ok(out)
        }
        Table::Table1 => {
            let parts = IntPartition::all(a.n);
            let mut out = Output::new("tables table1");
            let mut header = vec!["row".to_string()];
            header.extend(parts.iter().map(|p| p.to_string()));
            out.header = header;
            let b: Vec<u64> = parts.iter().map(hitchin::branch_count).collect();
            out.row(std::iter::once("b".to_string()).chain(b.iter().map(|v| v.to_string())).collect());
            let mut ls = Vec::new();
            for d in 0..=(a.n as i64) / 2 {
                let mut row = Vec::new();
                for p in &parts {
                    let rank = hitchin::rank_formula(p, d);
                    if p.len() >= 2 {
                        let w = omega_vector::<i64>(p, d);
                        let k = Multigraph::complete(p.len(), 1)?;
                        let sc = sphere_count(&k, &w)?;
                        let med = LexLabelling::new(&k, &w, EdgeOrder::lexicographic(&k))?.mediocre_count() as i64;
                        if sc != rank || med != rank {
                            return Err(Error::Verification(format!(
                                "{p}, d = {d}: rank {rank}, sphere count {sc}, mediocre chains {med}"
                            )));
                        }
                    }
                    row.push(rank);
                }
                out.row(std::iter::once(format!("l(omega({d}))")).chain(row.iter().map(|v| v.to_string())).collect());
                ls.push(json!({"d": d, "l": row}));
            }
            out.set("partitions", strs(&parts));
            out.set("b", b);
            out.set("l", ls);
            Ok(out)
        }
        Table::Figure5 => {
            let mut out = Output::new("tables figure5");
            out.header(&["d", "omega", "oracle", "reciprocity", "mobius"]);
            let k4 = Multigraph::complete(4, 1)?;
            let ones: IntPartition = "1,1,1,1".parse().unwrap();
            let mut rows = Vec::new();
            for d in 0..=2 {
                let w = omega_vector::<i64>(&ones, d);
                let z = Zonotope::graphical(&k4).translated(w.clone())?;
                let o = z.interior_count(&ctx.budget)?;
                let r = z.count_via_reciprocity(&ctx.budget)?;
                let m = z.mobius_count(&ctx.budget)?.total;
                out.failed |= o != r || o != m;
                rows.push(json!({"d": d, "omega": format_fraction_list(&w), "oracle": o, "reciprocity": r, "mobius": m}));
                out.row(vec![d.to_string(), format_fraction_list(&w), o.to_string(), r.to_string(), m.to_string()]);
            }
            out.set("rows", rows);
            Ok(out)
        }
        Table::ExamplePolynomials => {
            let mut out = Output::new("tables example-polynomials");
            out.header(&["d", "polynomial", "e=1", "e=2", "e=3"]);
            let ones = IntPartition::new(vec![1; a.n as usize])?;
            let mut rows = Vec::new();
            for d in 0..=(a.n as i64) / 2 {
                let p = complete_count_polynomial::<i64>(&omega_vector(&ones, d));
                let vals: Vec<i64> = (1..=3).map(|e| p.eval(&e)).collect();
                rows.push(json!({"d": d, "polynomial": p.display_in("e"), "values": vals}));
                let mut row = vec![d.to_string(), p.display_in("e")];
                row.extend(vals.iter().map(|v| v.to_string()));
                out.row(row);
            }
            out.set("n", a.n);
            out.set("rows", rows);
            Ok(out)
        }
    }
}
