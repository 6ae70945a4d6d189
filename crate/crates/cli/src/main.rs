use std::io::{ErrorKind, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use stdom::campaign::{run_campaign, CampaignConfig, Check, Severity};
use stdom::gallery::{tightness_suite, Expectation, GALLERY_SOLVER_CAP};
use stdom::io::{parse_with_warnings, serialize};
use stdom::{check_boutrig_chellali, Analysis, Graph, Kind, Solver, Target, TheoremOutcome};

/// Exact strong domination numbers and checks of how they move under graph
/// modifications.
#[derive(Parser)]
#[command(name = "stdom", version, about)]
#[command(
    after_help = "The solver refuses graphs above 64 vertices unless STDOM_SOLVER_CAP says otherwise.\n\
Exit codes: 0 clean, 1 critical finding (or gallery mismatch), 2 usage or input error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact domination number and a minimum witness.
    GammaSt {
        /// Edge-list file ("n m" header, then one "u v" per line); "-" reads stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Strong)]
        kind: KindArg,
        /// Print JSON instead of two text lines.
        #[arg(long)]
        json: bool,
    },
    /// Apply one operation and print the resulting edge list.
    Modify {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        /// Vertex (`3`, `v3`) or edge (`0-1`, `e0-1`).
        #[arg(long)]
        target: Target,
    },
    /// Evaluate one bound at one target and print the report as JSON.
    Check {
        file: PathBuf,
        #[arg(long)]
        theorem: Check,
        /// Required for everything except `bc`.
        #[arg(long)]
        target: Option<Target>,
    },
    /// Run a campaign described by a JSON config.
    Campaign {
        #[arg(long)]
        config: PathBuf,
        /// Override the config's CSV path.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Override the config's JSON path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the tightness gallery, or verify every entry with --verify.
    Gallery {
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Strong,
    Weak,
    Ordinary,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Strong => Kind::Strong,
            KindArg::Weak => Kind::Weak,
            KindArg::Ordinary => Kind::Ordinary,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    DeleteV,
    DeleteE,
    ContractV,
    ContractE,
    Subdivide,
    Odot,
}

/// Writes to stdout; a closed pipe (`stdom ... | head`) is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let (g, warnings) =
        parse_with_warnings(&text).with_context(|| format!("parsing {}", path.display()))?;
    for w in warnings {
        eprintln!("warning: {}: line {}: {}", path.display(), w.line, w.msg);
    }
    Ok(g)
}

fn gamma_st(file: &Path, kind: KindArg, json: bool) -> Result<ExitCode> {
    let g = read_graph(file)?;
    let r = Solver::from_env().gamma(&g, kind.into())?;
    let witness: Vec<_> = r.witness.vertices.iter().collect();
    if json {
        let doc = serde_json::json!({
            "kind": Kind::from(kind),
            "value": r.value,
            "witness": witness,
            "nodes_explored": r.nodes_explored,
        });
        emit(&(serde_json::to_string_pretty(&doc)? + "\n"))?;
    } else {
        let name = match kind {
            KindArg::Strong => "gamma_st",
            KindArg::Weak => "gamma_w",
            KindArg::Ordinary => "gamma",
        };
        let list: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
        emit(&format!("{name} {}\nwitness {}\n", r.value, list.join(" ")))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn modify(file: &Path, op: Op, target: Target) -> Result<ExitCode> {
    let g = read_graph(file)?;
    let out = match (op, target) {
        (Op::DeleteV, Target::Vertex(v)) => g.delete_vertex(v)?,
        (Op::ContractV, Target::Vertex(v)) => g.contract_vertex(v)?,
        (Op::Odot, Target::Vertex(v)) => g.odot_vertex(v)?,
        (Op::DeleteE, Target::Edge(e)) => g.delete_edge(e)?,
        (Op::ContractE, Target::Edge(e)) => g.contract_edge(e)?,
        (Op::Subdivide, Target::Edge(e)) => g.subdivide_edge(e)?,
        (_, Target::Vertex(_)) => bail!("this operation takes an edge target such as 0-1"),
        (_, Target::Edge(_)) => bail!("this operation takes a vertex target"),
    };
    emit(&serialize(&out.graph))?;
    Ok(ExitCode::SUCCESS)
}

fn check(file: &Path, theorem: Check, target: Option<Target>) -> Result<ExitCode> {
    let g = read_graph(file)?;
    let solver = Solver::from_env();
    let Some(id) = theorem.theorem() else {
        let r = check_boutrig_chellali(&g, &solver)?;
        emit(&(serde_json::to_string_pretty(&r)? + "\n"))?;
        return Ok(exit_for(r.holds() == Some(false)));
    };
    let Some(target) = target else {
        bail!("--target is required for {theorem}");
    };
    let outcome = Analysis::new(&g, solver)?.verify(target, id)?;
    emit(&(serde_json::to_string_pretty(&outcome)? + "\n"))?;
    let critical = match &outcome {
        TheoremOutcome::Report(r) => Severity::classify(r) == Severity::Critical,
        TheoremOutcome::NotApplicable { .. } => false,
    };
    Ok(exit_for(critical))
}

fn exit_for(critical: bool) -> ExitCode {
    if critical {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn campaign(config: &Path, csv: Option<PathBuf>, json: Option<PathBuf>) -> Result<ExitCode> {
    let mut cfg =
        CampaignConfig::load(config).with_context(|| format!("loading {}", config.display()))?;
    cfg.csv = csv.or(cfg.csv);
    cfg.json = json.or(cfg.json);
    let report = run_campaign(&cfg)?;
    if cfg.csv.is_none() && cfg.json.is_none() {
        report.write_csv(std::io::stdout().lock())?;
    } else {
        report.write_outputs()?;
    }
    let s = &report.summary;
    eprintln!(
        "{} graphs ({} skipped), {} findings",
        s.graphs, s.skipped_graphs, s.findings
    );
    for sev in Severity::ALL {
        eprintln!("  {:<21} {}", sev.as_str(), s.get(sev));
    }
    Ok(exit_for(report.has_critical()))
}

fn gallery(verify: bool) -> Result<ExitCode> {
    let solver = Solver::with_cap(Solver::from_env().cap.max(GALLERY_SOLVER_CAP));
    let mut mismatches = 0;
    for e in tightness_suite()? {
        let head = format!(
            "{:<9} n={:<3} m={:<3} {} at {:<4} {}",
            e.name,
            e.graph.order(),
            e.graph.size(),
            e.theorem,
            e.target.to_string(),
            e.expected
        );
        if !verify {
            emit(&format!("{head}\n"))?;
            continue;
        }
        let c = e.verify(solver)?;
        let r = &c.report;
        let bound = match e.expected {
            Expectation::LowerTight => r.lower.unwrap_or_default(),
            Expectation::UpperTight => r.upper,
        };
        emit(&format!(
            "{head}: {} -> {} (bound {bound}) {}\n",
            r.gamma_before,
            r.gamma_after,
            if c.matches { "ok" } else { "MISMATCH" }
        ))?;
        mismatches += usize::from(!c.matches);
    }
    if mismatches > 0 {
        eprintln!("{mismatches} gallery entries do not reach their bound");
    }
    Ok(exit_for(mismatches > 0))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::GammaSt { file, kind, json } => gamma_st(&file, kind, json),
        Command::Modify { file, op, target } => modify(&file, op, target),
        Command::Check {
            file,
            theorem,
            target,
        } => check(&file, theorem, target),
        Command::Campaign { config, csv, json } => campaign(&config, csv, json),
        Command::Gallery { verify } => gallery(verify),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
