use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use serde_json::{json, Value};

use rlid_core::constructions::{
    bipartite_three_coloring, find_split_partition, g_star, h_p, lift_coloring_gstar, power_path, prop1_graph,
    project_coloring_gstar, q1, q2, split_rlid_coloring, star, subdivide_with_pendants, FamilyInstance,
    SplitPartition,
};
use rlid_core::io::report::{coloring_pairs, to_value};
use rlid_core::io::{export_dot, parse_coloring, parse_graph_file, render, solve_json, write_coloring, write_graph};
use rlid_core::io::{GraphFormat, Parsed};
use rlid_core::sweep::{run_sweep, Assertion, Family as SweepFamily, Metric, SweepConfig, SweepReport, Verdict};
use rlid_core::{
    bounds_report, chi_exact, decide_k, verify, verify_identifying_code, BoundsOptions, Budget, Coloring, Error,
    Graph, GraphClass, Mode, Parameter, SolveOptions, Status, DEFAULT_NODE_BUDGET,
};

use crate::{Cli, Command, ConstructOut, Family, Format, GraphInput, GraphOut, Reduce, SweepArgs};

pub const BUDGET_ENV: &str = "RLID_NODE_BUDGET";

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::BudgetExceeded { .. } => (3, "budget-exceeded"),
            Error::Parse { .. } => (2, "parse"),
            Error::Io(_) => (2, "io"),
            Error::InvalidParameter(_) => (2, "usage"),
            Error::TheoremCounterexample(_) => (1, "theorem-counterexample"),
            Error::InvalidColoring(_) | Error::NotProper(..) => (1, "invalid-coloring"),
            _ => (1, "hypothesis"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

struct Ctx<'a> {
    cli: &'a Cli,
    budget: Budget,
}

impl Ctx<'_> {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.cli.output {
            Some(path) => fs::write(path, text).map_err(|e| Failure::from(Error::from(e))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn opts(&self) -> SolveOptions {
        SolveOptions::with_budget(self.budget)
    }
}

/// Node budget from the flag, then the environment, then the default.
pub fn resolve_budget(flag: Option<u64>, env: Option<String>, time_ms: Option<u64>) -> Result<Budget, Failure> {
    let nodes = match (flag, env) {
        (Some(n), _) => n,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{BUDGET_ENV}=`{s}` is not a node count")))?,
        (None, None) => DEFAULT_NODE_BUDGET,
    };
    if nodes == 0 {
        return Err(Failure::usage("node budget must be positive"));
    }
    let mut budget = Budget::nodes(nodes);
    if let Some(ms) = time_ms {
        if ms == 0 {
            return Err(Failure::usage("time budget must be positive"));
        }
        budget = budget.with_time(Duration::from_millis(ms));
    }
    Ok(budget)
}

pub fn run(cli: &Cli) -> Outcome {
    let budget = resolve_budget(cli.budget, std::env::var(BUDGET_ENV).ok(), cli.time_budget)?;
    let ctx = Ctx { cli, budget };
    match &cli.command {
        Command::Solve {
            input,
            param,
            bounds,
            timing,
            exhaustive,
            format,
        } => solve(&ctx, input, param, *bounds, *timing, *exhaustive, *format),
        Command::Decide { input, k, param, format } => decide(&ctx, input, *k, param, *format),
        Command::Verify {
            input,
            witness,
            mode,
            format,
        } => verify_cmd(&ctx, input, witness, mode, *format),
        Command::Bounds { input, clique, format } => bounds(&ctx, input, clique.as_deref(), *format),
        Command::Quotient { input, format, to } => quotient(&ctx, input, *format, *to),
        Command::Construct { family } => construct(&ctx, family),
        Command::ColorBipartite { input, format } => color_bipartite(&ctx, input, *format),
        Command::ColorSplit { input, clique, format } => color_split(&ctx, input, clique.as_deref(), *format),
        Command::Reduce { action } => reduce(&ctx, action),
        Command::Sweep(args) => sweep(&ctx, args),
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let format = match &input.input_format {
        Some(f) => f.parse::<GraphFormat>()?,
        None => GraphFormat::from_path(&input.graph),
    };
    let Parsed { graph, duplicate_edges } = parse_graph_file(&input.graph, format)?;
    if duplicate_edges > 0 {
        eprintln!("rlid: warning: collapsed {duplicate_edges} duplicate edge(s)");
    }
    Ok(graph)
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::from(Error::Io(format!("{}: {e}", path.display()))))
}

fn read_coloring(path: &Path, order: usize) -> Result<Coloring, Failure> {
    Ok(parse_coloring(&read_text(path)?, order)?)
}

fn graph_text(g: &Graph, to: GraphOut) -> String {
    let format = match to {
        GraphOut::Edgelist => GraphFormat::Edgelist,
        GraphOut::Dimacs => GraphFormat::Dimacs,
    };
    write_graph(g, format)
}

fn partition_from(g: &Graph, clique: Option<&[usize]>) -> Result<SplitPartition, Failure> {
    match clique {
        Some(k) => {
            let mut clique = k.to_vec();
            clique.sort_unstable();
            clique.dedup();
            let stable = g.vertices().filter(|v| clique.binary_search(v).is_err()).collect();
            let part = SplitPartition {
                clique,
                stable,
                separator: None,
            };
            part.validate(g)?;
            Ok(part)
        }
        None => Ok(find_split_partition(g)?),
    }
}

fn solve(
    ctx: &Ctx,
    input: &GraphInput,
    param: &str,
    with_bounds: bool,
    timing: bool,
    exhaustive: bool,
    format: Format,
) -> Outcome {
    let g = read_graph(input)?;
    let parameter: Parameter = param.parse()?;
    let mut opts = if exhaustive { SolveOptions::exhaustive() } else { SolveOptions::default() };
    opts.budget = ctx.budget;
    let r = chi_exact(&g, parameter, &opts)?;
    let report = with_bounds.then(|| {
        bounds_report(
            &g,
            &BoundsOptions {
                budget: ctx.budget,
                ..Default::default()
            },
        )
    });
    let text = match format {
        Format::Json => render(&solve_json(&r, report.as_ref(), timing)),
        Format::Plain => match r.status {
            Status::Exact => format!("{}\n", r.value),
            Status::BudgetExceeded => format!("{} budget-exceeded\n", r.value),
        },
    };
    ctx.emit(&text)?;
    Ok(match r.status {
        Status::Exact => ExitCode::SUCCESS,
        Status::BudgetExceeded => ExitCode::from(3),
    })
}

fn decide(ctx: &Ctx, input: &GraphInput, k: u32, param: &str, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let parameter: Parameter = param.parse()?;
    let found = decide_k(&g, parameter, k, &ctx.opts())?;
    let text = match (format, &found) {
        (Format::Plain, Some(c)) => format!("feasible\n{}", write_coloring(c)),
        (Format::Plain, None) => "infeasible\n".to_string(),
        (Format::Json, _) => render(&json!({
            "parameter": parameter,
            "k": k,
            "feasible": found.is_some(),
            "witness": found.as_ref().map(coloring_pairs),
        })),
    };
    ctx.emit(&text)?;
    Ok(if found.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify_cmd(ctx: &Ctx, input: &GraphInput, witness: &Path, mode: &str, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let mode: Mode = mode.parse()?;
    let report = if mode == Mode::IdCode {
        let text = read_text(witness)?;
        let mut code = Vec::new();
        for token in text.lines().flat_map(|l| l.split('#').next().unwrap_or("").split_whitespace()) {
            let v: usize = token
                .parse()
                .map_err(|_| Failure::from(Error::InvalidColoring(format!("`{token}` is not a vertex"))))?;
            if v >= g.order() {
                return Err(Error::InvalidColoring(format!("vertex {v} outside 0..{}", g.order())).into());
            }
            code.push(v);
        }
        code.sort_unstable();
        code.dedup();
        verify_identifying_code(&g, &code)
    } else {
        verify(&g, &read_coloring(witness, g.order())?, mode)?
    };
    let text = match format {
        Format::Json => render(&to_value(&report)),
        Format::Plain => {
            let mut out = String::new();
            if report.valid {
                writeln!(out, "valid {mode}").unwrap();
            } else {
                writeln!(out, "invalid {mode}: {} violation(s)", report.violations.len()).unwrap();
                for v in &report.violations {
                    let detail = serde_json::to_value(&v.kind).unwrap_or(Value::Null);
                    writeln!(out, "{} {} {}", v.u, v.v, detail).unwrap();
                }
            }
            out
        }
    };
    ctx.emit(&text)?;
    Ok(if report.valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn bounds(ctx: &Ctx, input: &GraphInput, clique: Option<&[usize]>, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let split_partition = clique.map(|k| partition_from(&g, Some(k))).transpose()?;
    let report = bounds_report(
        &g,
        &BoundsOptions {
            budget: ctx.budget,
            split_partition,
        },
    );
    let text = match format {
        Format::Json => render(&to_value(&report)),
        Format::Plain => {
            let mut out = format!("{} <= rlid <= {}\n", report.best_lower, report.best_upper);
            for (side, list) in [("lower", &report.lower), ("upper", &report.upper)] {
                for b in list.iter() {
                    let name = to_value(&b.provenance);
                    writeln!(out, "{side} {} {} ({})", b.value, name.as_str().unwrap_or(""), b.hypothesis).unwrap();
                }
            }
            for s in &report.skipped {
                writeln!(out, "skipped {}: {}", to_value(&s.provenance).as_str().unwrap_or(""), s.reason).unwrap();
            }
            out
        }
    };
    ctx.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn quotient(ctx: &Ctx, input: &GraphInput, format: Format, to: GraphOut) -> Outcome {
    let g = read_graph(input)?;
    let (q, part) = g.quotient();
    let text = match format {
        Format::Json => render(&json!({
            "t": part.t,
            "classes": part.classes,
            "representatives": part.classes.iter().map(|c| c[0]).collect::<Vec<_>>(),
            "quotient": { "order": q.order(), "edges": q.edges() },
        })),
        Format::Plain => graph_text(&q, to),
    };
    ctx.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn construct(ctx: &Ctx, family: &Family) -> Outcome {
    let (instance, out) = match family {
        Family::Star { p, out } => (star(*p)?, out),
        Family::Hp { p, out } => (h_p(*p)?, out),
        Family::Q1 { p, out } => (q1(*p)?, out),
        Family::Q2 { p, out } => (q2(*p)?, out),
        Family::Prop1 { p, out } => (prop1_graph(*p)?, out),
        Family::PowerPath { k, out } => {
            let graph = power_path(*k)?;
            let instance = FamilyInstance {
                name: format!("P^{}_{}", k - 1, 2 * k),
                graph,
                canonical_coloring: None,
                expected_chi_rlid: Some(2 * k),
            };
            (instance, out)
        }
        Family::Gstar { input, out } => (g_star(&read_graph(input)?)?.instance, out),
    };
    emit_instance(ctx, &instance, out)
}

fn emit_instance(ctx: &Ctx, instance: &FamilyInstance, out: &ConstructOut) -> Outcome {
    if let Some(path) = &out.coloring_out {
        let c = instance
            .canonical_coloring
            .as_ref()
            .ok_or_else(|| Failure::usage(format!("{} has no canonical coloring", instance.name)))?;
        fs::write(path, write_coloring(c)).map_err(|e| Failure::from(Error::from(e)))?;
    }
    let text = if out.dot {
        export_dot(&instance.graph, instance.canonical_coloring.as_ref())
    } else {
        graph_text(&instance.graph, out.to)
    };
    ctx.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn coloring_output(c: &Coloring, format: Format, extra: Value) -> String {
    match format {
        Format::Plain => write_coloring(c),
        Format::Json => {
            let mut v = json!({ "palette": c.colors_used(), "coloring": coloring_pairs(c) });
            if let (Value::Object(dst), Value::Object(src)) = (&mut v, extra) {
                dst.extend(src);
            }
            render(&v)
        }
    }
}

fn color_bipartite(ctx: &Ctx, input: &GraphInput, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let r = bipartite_three_coloring(&g)?;
    let extra = json!({ "source": r.source, "levels": r.levels });
    ctx.emit(&coloring_output(&r.coloring, format, extra))?;
    Ok(ExitCode::SUCCESS)
}

fn color_split(ctx: &Ctx, input: &GraphInput, clique: Option<&[usize]>, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let part = partition_from(&g, clique)?;
    let r = split_rlid_coloring(&g, &part)?;
    let extra = json!({
        "source": r.source,
        "separator": r.separator,
        "clique": part.clique,
    });
    ctx.emit(&coloring_output(&r.coloring, format, extra))?;
    Ok(ExitCode::SUCCESS)
}

fn reduce(ctx: &Ctx, action: &Reduce) -> Outcome {
    match action {
        Reduce::Build { input, to } => {
            let gs = g_star(&read_graph(input)?)?;
            ctx.emit(&graph_text(gs.graph(), *to))?;
        }
        Reduce::Lift { input, coloring, k } => {
            let g = read_graph(input)?;
            let c = read_coloring(coloring, g.order())?;
            ctx.emit(&write_coloring(&lift_coloring_gstar(&g, &c, *k)?))?;
        }
        Reduce::Project { input, coloring } => {
            let g = read_graph(input)?;
            let gs = subdivide_with_pendants(&g);
            let c = read_coloring(coloring, gs.graph().order())?;
            ctx.emit(&write_coloring(&project_coloring_gstar(&gs, &c)?))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn sweep_family(args: &SweepArgs) -> Result<SweepFamily, Failure> {
    let class = match args.family.as_str() {
        "all" => GraphClass::any(),
        "connected" => GraphClass::connected(),
        "bipartite" => GraphClass::connected().and_bipartite(),
        "twin-free" => GraphClass::connected().and_twin_free(),
        "split" => GraphClass::connected().and_twin_free().and_split(),
        "random-split" => {
            return Ok(SweepFamily::RandomSplit {
                count: args.count,
                seed: args.seed,
                clique_size: args.clique,
                stable_size: args.stable,
                edge_prob: args.edge_prob,
            })
        }
        "random-twins" => {
            return Ok(SweepFamily::RandomTwins {
                count: args.count,
                seed: args.seed,
                base_n: args.base_n,
                twins: args.twins,
            })
        }
        other => return Err(Failure::usage(format!("unknown family `{other}`"))),
    };
    if args.min_n > args.max_n {
        return Err(Failure::usage("--min-n exceeds --max-n"));
    }
    Ok(SweepFamily::Enumerated {
        class,
        min_n: args.min_n,
        max_n: args.max_n,
        unlabeled: args.unlabeled,
    })
}

fn sweep(ctx: &Ctx, args: &SweepArgs) -> Outcome {
    let metrics = args
        .metrics
        .iter()
        .map(|m| m.parse::<Metric>())
        .collect::<Result<Vec<_>, _>>()?;
    let assertions = args
        .assertions
        .iter()
        .map(|a| a.parse::<Assertion>())
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = SweepConfig {
        family: sweep_family(args)?,
        metrics,
        assertions,
        budget: ctx.budget,
        threads: args.threads,
    };
    let report = run_sweep(&cfg)?;
    let (pass, fail, unknown) = (
        report.count(Verdict::Pass),
        report.count(Verdict::Fail),
        report.count(Verdict::Unknown),
    );
    let shown = if args.failures_only {
        SweepReport {
            columns: report.columns.clone(),
            rows: report.rows.iter().filter(|r| r.verdict != Verdict::Pass).cloned().collect(),
        }
    } else {
        report
    };
    ctx.emit(&shown.to_tsv())?;
    eprintln!("rlid: {} graphs: {pass} pass, {fail} fail, {unknown} unknown", pass + fail + unknown);
    Ok(if fail > 0 {
        ExitCode::from(1)
    } else if unknown > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}
