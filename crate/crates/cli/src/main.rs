mod args;
mod input;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;
use specq_core::domination::domination_number;
use specq_core::extremal::report::{fmt_sig12, round_sig12};
use specq_core::extremal::{
    build_v, check_cycle_exclusion, check_sign_structure, check_tree_branch_monotone,
    check_unispan, check_uv, enumerate_graphs, extract_with_trace, find_minimizer_in,
    sweep_gamma, sweep_girth, sweep_k, verify_relocation, EnumOptions, ExtractionCase,
    GraphFilter, MinimizerClass, Verdict, VerificationReport,
};
use specq_core::{build_u, q_min, Error};

use args::{BuildArgs, CheckId, Cli, Command, EnumerateArgs, Family, Format, SweepCommand, VerifyArgs};
use input::{collect_graphs, for_each_graph};

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_SOFTWARE: u8 = 70;
const EXIT_IO: u8 = 74;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Internal(String),
    Io(io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Internal(_) => EXIT_SOFTWARE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Internal(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Graph6(_) => CliError::Data(e.to_string()),
            Error::NoConvergence { .. } | Error::ExtractionInvariant { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

struct Ctx<'a> {
    out: Out<'a>,
    format: Format,
    allow_large: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let threads = cli.global.threads.map_or(0, usize::from);
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("specq: {e}");
        return ExitCode::from(EXIT_SOFTWARE);
    }
    let stdout = io::stdout();
    let mut ctx = Ctx {
        out: BufWriter::new(stdout.lock()),
        format: cli.global.format(),
        allow_large: cli.global.allow_large,
    };
    let result = dispatch(&mut ctx, cli.command);
    let flushed = ctx.out.flush();
    match result.and_then(|code| flushed.map(|_| code).map_err(CliError::from)) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("specq: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<u8, CliError> {
    match command {
        Command::Build(a) => build(ctx, &a),
        Command::Qmin(a) => qmin(ctx, &a.graphs),
        Command::Gamma(a) => gamma(ctx, &a.graphs),
        Command::Enumerate(a) => enumerate(ctx, &a),
        Command::Verify(a) => verify(ctx, &a),
        Command::Sweep { what } => sweep(ctx, what),
        Command::ExtractUnicyclic(a) => extract(ctx, &a.graphs),
    }
}

fn num(x: f64) -> serde_json::Value {
    json!(round_sig12(x))
}

fn build(ctx: &mut Ctx, a: &BuildArgs) -> Result<u8, CliError> {
    let (g, param) = match a.family {
        Family::U => {
            let k = a.k.ok_or_else(|| CliError::Usage("--k is required for family U".into()))?;
            (build_u(a.n, k, a.g)?, ("k", k))
        }
        Family::V => {
            let gamma = a.gamma.ok_or_else(|| CliError::Usage("--gamma is required for family V".into()))?;
            (build_v(a.n, gamma, a.g)?, ("gamma", gamma))
        }
    };
    let family = match a.family {
        Family::U => "U",
        Family::V => "V",
    };
    match ctx.format {
        Format::Text => writeln!(ctx.out, "{g}")?,
        Format::Json => {
            let mut v = json!({ "family": family, "n": a.n, "g": a.g, "graph6": g.to_string(), "edges": g.edges() });
            v[param.0] = json!(param.1);
            writeln!(ctx.out, "{v}")?
        }
        Format::Csv => {
            writeln!(ctx.out, "family,n,{},g,graph6", param.0)?;
            writeln!(ctx.out, "{family},{},{},{},{g}", a.n, param.1, a.g)?
        }
    }
    Ok(0)
}

fn qmin(ctx: &mut Ctx, graphs: &[String]) -> Result<u8, CliError> {
    if ctx.format == Format::Csv {
        writeln!(ctx.out, "graph6,qmin,residual,gap")?;
    }
    for_each_graph(graphs, |s, g| {
        let r = q_min(&g)?;
        match ctx.format {
            Format::Text => writeln!(ctx.out, "{s} {}", fmt_sig12(r.qmin))?,
            Format::Csv => writeln!(
                ctx.out,
                "{s},{},{},{}",
                fmt_sig12(r.qmin),
                fmt_sig12(r.residual),
                fmt_sig12(r.gap)
            )?,
            Format::Json => {
                let vector: Vec<_> = r.vector.iter().map(|&x| num(x)).collect();
                let v = json!({
                    "graph6": s,
                    "qmin": num(r.qmin),
                    "residual": num(r.residual),
                    "gap": num(r.gap),
                    "vector": vector,
                });
                writeln!(ctx.out, "{v}")?
            }
        }
        Ok(())
    })?;
    Ok(0)
}

fn gamma(ctx: &mut Ctx, graphs: &[String]) -> Result<u8, CliError> {
    if ctx.format == Format::Csv {
        writeln!(ctx.out, "graph6,gamma,witness")?;
    }
    for_each_graph(graphs, |s, g| {
        let c = domination_number(&g);
        let w: Vec<String> = c.witness.iter().map(|v| v.to_string()).collect();
        match ctx.format {
            Format::Text => writeln!(ctx.out, "{s} {} {}", c.gamma, w.join(" "))?,
            Format::Csv => writeln!(ctx.out, "{s},{},{}", c.gamma, w.join(" "))?,
            Format::Json => writeln!(ctx.out, "{}", json!({ "graph6": s, "gamma": c.gamma, "witness": c.witness }))?,
        }
        Ok(())
    })?;
    Ok(0)
}

fn enumerate(ctx: &mut Ctx, a: &EnumerateArgs) -> Result<u8, CliError> {
    let filter = GraphFilter {
        connected: !a.all,
        non_bipartite: a.non_bipartite,
        unicyclic: a.unicyclic,
        gamma: a.gamma,
        odd_girth: a.odd_girth,
    };
    let opts = EnumOptions {
        allow_large: ctx.allow_large,
    };
    let graphs = enumerate_graphs(a.n, &filter, opts)?;
    if ctx.format == Format::Csv {
        writeln!(ctx.out, "graph6")?;
    }
    for g in graphs {
        match ctx.format {
            Format::Text | Format::Csv => writeln!(ctx.out, "{g}")?,
            Format::Json => writeln!(ctx.out, "{}", json!({ "graph6": g.to_string(), "edges": g.size() }))?,
        }
    }
    Ok(0)
}

fn need(v: Option<usize>, flag: &str, check: CheckId) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {}", check_name(check))))
}

fn check_name(c: CheckId) -> String {
    clap::ValueEnum::to_possible_value(&c)
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

fn verify(ctx: &mut Ctx, a: &VerifyArgs) -> Result<u8, CliError> {
    let c = a.check;
    let opts = EnumOptions {
        allow_large: ctx.allow_large,
    };
    let minimizer = |class: MinimizerClass| -> Result<Vec<VerificationReport>, CliError> {
        let r = find_minimizer_in(need(a.n, "n", c)?, need(a.gamma, "gamma", c)?, class, opts)?;
        Ok(vec![r.to_report()])
    };
    let reports = match c {
        CheckId::Relocate => {
            let gs = collect_graphs(&a.graphs)?;
            if gs.len() != 2 {
                return Err(CliError::Usage(format!(
                    "lemma-relocate takes exactly two graphs (host, branch), got {}",
                    gs.len()
                )));
            }
            let (v1, v2, u) = (need(a.v1, "v1", c)?, need(a.v2, "v2", c)?, need(a.u, "u", c)?);
            vec![verify_relocation(&gs[0], v1, v2, &gs[1], u)?]
        }
        CheckId::BranchValues => graph_reports(&a.graphs, check_tree_branch_monotone)?,
        CheckId::SpanningUnicyclic => graph_reports(&a.graphs, check_unispan)?,
        CheckId::SignStructure => vec![check_sign_structure(
            need(a.n, "n", c)?,
            need(a.k, "k", c)?,
            need(a.g, "g", c)?,
        )?],
        CheckId::PendantSweep => vec![sweep_k(need(a.n, "n", c)?, need(a.g, "g", c)?)?],
        CheckId::GammaSweep => vec![sweep_gamma(need(a.n, "n", c)?, need(a.g, "g", c)?)?],
        CheckId::GirthSweep => vec![sweep_girth(need(a.n, "n", c)?, need(a.gamma, "gamma", c)?)?],
        CheckId::UAboveV => vec![check_uv(need(a.n, "n", c)?, need(a.g, "g", c)?)?],
        CheckId::UnicyclicMinimizer => minimizer(MinimizerClass::Unicyclic(need(a.g, "g", c)?))?,
        CheckId::GirthMinimizer => minimizer(MinimizerClass::OddGirth(need(a.g, "g", c)?))?,
        CheckId::Minimizer => minimizer(MinimizerClass::All)?,
        CheckId::CycleExclusion => vec![check_cycle_exclusion(need(a.n, "n", c)?)?],
    };
    emit_reports(ctx, &reports)
}

fn graph_reports(
    graphs: &[String],
    check: impl Fn(&specq_core::Graph) -> specq_core::Result<VerificationReport>,
) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for_each_graph(graphs, |s, g| {
        out.push(check(&g)?.param("graph6", s));
        Ok(())
    })?;
    Ok(out)
}

fn emit_reports(ctx: &mut Ctx, reports: &[VerificationReport]) -> Result<u8, CliError> {
    let worst = reports.iter().map(|r| r.verdict).max().unwrap_or(Verdict::Pass);
    for r in reports {
        match ctx.format {
            Format::Json => writeln!(ctx.out, "{}", r.to_json())?,
            Format::Csv => match &r.csv {
                Some(csv) => write!(ctx.out, "{csv}")?,
                None => {
                    return Err(CliError::Usage(format!("{} has no tabular output; use --json", r.check_id)))
                }
            },
            Format::Text => write_text_report(&mut ctx.out, r)?,
        }
    }
    Ok(worst.exit_code() as u8)
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Indeterminate => "indeterminate",
        Verdict::Fail => "fail",
    }
}

fn write_text_report(out: &mut Out, r: &VerificationReport) -> io::Result<()> {
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            _ => format!("{k}={v}"),
        })
        .collect();
    writeln!(
        out,
        "{} {} margin={} tolerance={} {}",
        r.check_id,
        verdict_name(r.verdict),
        fmt_sig12(r.margin),
        fmt_sig12(r.tolerance),
        params.join(" ")
    )?;
    for w in &r.witnesses {
        let vals: Vec<String> = w.values.iter().map(|&x| fmt_sig12(x)).collect();
        writeln!(out, "  witness {} {} {}", w.label, w.graph6, vals.join(" "))?;
    }
    for n in &r.notes {
        writeln!(out, "  note {n}")?;
    }
    Ok(())
}

fn sweep(ctx: &mut Ctx, what: SweepCommand) -> Result<u8, CliError> {
    let r = match what {
        SweepCommand::K { n, g } => sweep_k(n, g)?,
        SweepCommand::Gamma { n, g } => sweep_gamma(n, g)?,
        SweepCommand::Girth { n, gamma } => sweep_girth(n, gamma)?,
    };
    let code = r.verdict.exit_code() as u8;
    match ctx.format {
        Format::Json => writeln!(ctx.out, "{}", r.to_json())?,
        Format::Text | Format::Csv => write!(ctx.out, "{}", r.csv.as_deref().unwrap_or_default())?,
    }
    if ctx.format != Format::Json && r.verdict != Verdict::Pass {
        eprintln!("specq: {} {}, margin {}", r.check_id, verdict_name(r.verdict), fmt_sig12(r.margin));
    }
    Ok(code)
}

fn case_name(c: ExtractionCase) -> &'static str {
    match c {
        ExtractionCase::SingleDominator => "single-dominator",
        ExtractionCase::ConnectedCut => "connected-cut",
        ExtractionCase::DisconnectedCut => "disconnected-cut",
    }
}

fn extract(ctx: &mut Ctx, graphs: &[String]) -> Result<u8, CliError> {
    if ctx.format == Format::Csv {
        writeln!(ctx.out, "graph6,unicyclic,case,dominating_set")?;
    }
    for_each_graph(graphs, |s, g| {
        let x = extract_with_trace(&g)?;
        let dom: Vec<String> = x.dominating_set.iter().map(|v| v.to_string()).collect();
        match ctx.format {
            Format::Text => writeln!(ctx.out, "{}", x.graph)?,
            Format::Csv => writeln!(ctx.out, "{s},{},{},{}", x.graph, case_name(x.case), dom.join(" "))?,
            Format::Json => writeln!(
                ctx.out,
                "{}",
                json!({
                    "graph6": s,
                    "unicyclic": x.graph.to_string(),
                    "case": case_name(x.case),
                    "dominating_set": x.dominating_set,
                })
            )?,
        }
        Ok(())
    })?;
    Ok(0)
}
