//! `coxcell`: command-line access to Coxeter group, Kazhdan–Lusztig and
//! representation computations.
//!
//! Exit codes: 0 success, 1 the queried property fails, 2 input or usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use coxcell::arith::{rational::parse_rational, CycloNumber};
use coxcell::coxeter::{CoxeterGraph, CoxeterGroup};
use coxcell::dihedral::{decompose, multiplicities_json};
use coxcell::hecke::{Caps, KlData};
use coxcell::rep::{AValueClass, MatrixRep};
use coxcell::rrep::{self, RRepSpec};

#[derive(Parser, Debug)]
#[command(name = "coxcell", version, about = "Exact Kazhdan-Lusztig cells and a-value-1 representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a graph and report its connectivity, lacing and cycle count.
    GraphValidate(GraphArgs),
    /// Enumerate group elements by length (DOT: Bruhat covering graph).
    Enumerate(GraphArgs),
    /// Kazhdan-Lusztig polynomials and mu coefficients.
    Kl(GraphArgs),
    /// The a-function on every element.
    Afunction(GraphArgs),
    /// Two-sided cells and their order (DOT: Hasse diagram).
    Cells(GraphArgs),
    /// Multiplicities of dihedral irreducibles in a two-generator representation.
    DihedralDecompose(RepArgs),
    /// Relations, a-value class, C_{w_rt} annihilation and R-representation test.
    RepCheck(RepArgs),
    /// Build the simple a-value-1 representation of a tree or V_x of a one-cycle graph.
    RrepBuild(RRepArgs),
    /// Certified catalog of a-value-1 R-representations.
    RrepClassify(RRepArgs),
    /// Kazhdan-Lusztig basis elements at q = 1.
    Specialize(SpecializeArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Length cap, or `length,size`; overrides the defaults 12 and 2000.
    #[arg(long, env = "COXCELL_CAP")]
    cap: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct RepArgs {
    #[arg(long)]
    rep: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct RRepArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Parameter x: `"p/q"` or a cyclotomic JSON object. Repeatable.
    #[arg(long = "x", allow_hyphen_values = true)]
    x: Vec<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SpecializeArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Element as a word in generator labels, `.`-separated or concatenated
    /// single letters; all elements when omitted.
    #[arg(long)]
    element: Option<String>,
    #[command(flatten)]
    output: Output,
}

enum Outcome {
    Holds,
    Fails,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::GraphValidate(args) => {
            let graph = read_graph(&args.graph)?;
            let mut json = serde_json::json!({"valid": true, "rank": graph.rank()});
            merge(&mut json, graph.flags_json());
            emit(&args.output, &json)
        }
        Command::Enumerate(args) => enumerate(args),
        Command::Kl(args) => {
            let data = kl_data(&args.graph, &args.output)?;
            emit(&args.output, &data.kl_json())
        }
        Command::Afunction(args) => {
            let data = kl_data(&args.graph, &args.output)?;
            let a = data.structure_constants().a_values();
            emit(&args.output, &a.to_json(&data.group))
        }
        Command::Cells(args) => {
            let data = kl_data(&args.graph, &args.output)?;
            let cells = data.cells();
            match args.output.format {
                Format::Json => emit(&args.output, &cells.to_json(&data.group)),
                Format::Dot => emit_text(&args.output, &cells.to_dot(&data.group)),
            }
        }
        Command::DihedralDecompose(args) => {
            let rep = read_rep(&args.rep)?;
            let graph = rep.graph();
            if graph.rank() != 2 {
                bail!("dihedral decomposition needs exactly two generators, found {}", graph.rank());
            }
            let m = graph.order(0, 1).finite().context("the two generators must have finite order product")?;
            let mults = decompose(rep.matrix(0), rep.matrix(1), m)?;
            emit(&args.output, &multiplicities_json(&mults))
        }
        Command::RepCheck(args) => rep_check(args),
        Command::RrepBuild(args) => rrep_build(args),
        Command::RrepClassify(args) => {
            let graph = read_graph(&args.graph)?;
            let samples = args.x.iter().map(|x| parse_scalar(x)).collect::<anyhow::Result<Vec<_>>>()?;
            let entries = rrep::classify(&graph, &samples)?;
            emit(&args.output, &rrep::catalog_json(&entries))?;
            let distinct = entries
                .iter()
                .enumerate()
                .all(|(i, a)| entries[..i].iter().all(|b| a.holonomy.is_none() || a.holonomy != b.holonomy));
            Ok(if entries.iter().all(|e| e.certificates.all_pass()) && distinct {
                Outcome::Holds
            } else {
                Outcome::Fails
            })
        }
        Command::Specialize(args) => specialize(args),
    }
}

fn enumerate(args: GraphArgs) -> anyhow::Result<Outcome> {
    let graph = read_graph(&args.graph)?;
    let caps = caps(&args.output)?;
    if args.output.format == Format::Dot {
        let data = coxcell::hecke::FiniteGroup::new(graph, caps)?;
        let mut dot = String::from("digraph bruhat {\n");
        for w in 0..data.len() {
            dot.push_str(&format!("  n{w} [label=\"{}\"];\n", data.name(w)));
        }
        for w in 0..data.len() {
            for y in 0..w {
                if data.length(y) + 1 == data.length(w) && data.bruhat_leq(y, w) {
                    dot.push_str(&format!("  n{y} -> n{w};\n"));
                }
            }
        }
        dot.push_str("}\n");
        return emit_text(&args.output, &dot);
    }
    let group = CoxeterGroup::new(graph);
    let enumeration = group.enumerate(caps.length, caps.size);
    let elements: Vec<Vec<String>> =
        enumeration.elements().map(|w| group.graph().word_labels(w.word())).collect();
    let json = serde_json::json!({
        "finite": enumeration.finite,
        "size": enumeration.total(),
        "level_sizes": enumeration.level_sizes(),
        "elements": elements,
    });
    emit(&args.output, &json)
}

fn rep_check(args: RepArgs) -> anyhow::Result<Outcome> {
    let rep = read_rep(&args.rep)?;
    rep.check_relations()?;
    let report = rep.classify_a_value();
    let mut json = serde_json::json!({"relations": true});
    merge(&mut json, report.to_json(&rep));
    json["cwrt_annihilation"] = rep.cwrt_annihilation()?.into();
    json["r_rep"] = match rep.is_r_rep() {
        Ok(check) => check.to_json(rep.graph()),
        Err(coxcell::Error::NotSimplyLaced) => serde_json::Value::Null,
        Err(e) => return Err(e.into()),
    };
    emit(&args.output, &json)?;
    Ok(if report.verdict == AValueClass::GreaterThanOne { Outcome::Fails } else { Outcome::Holds })
}

fn rrep_build(args: RRepArgs) -> anyhow::Result<Outcome> {
    let graph = read_graph(&args.graph)?;
    let rep = if graph.cycle_count() == 0 {
        if !args.x.is_empty() {
            bail!("a tree has no parameter; drop --x");
        }
        if !graph.connected() {
            bail!("graph must be connected");
        }
        rrep::tree_rep(&graph)?
    } else {
        let [x] = args.x.as_slice() else {
            bail!("one-cycle graphs need exactly one --x");
        };
        let spec = RRepSpec::new(graph, parse_scalar(x)?)?;
        rrep::build_quotient_vx(&spec)?
    };
    emit(&args.output, &rep.to_json())
}

fn specialize(args: SpecializeArgs) -> anyhow::Result<Outcome> {
    let data = kl_data(&args.graph, &args.output)?;
    let fg = &data.group;
    let ids: Vec<usize> = match &args.element {
        None => (0..fg.len()).collect(),
        Some(text) => {
            let element = parse_element(fg.group(), text)?;
            vec![fg.id(&element).context("element not in the enumerated group")?]
        }
    };
    let out = ids
        .into_iter()
        .map(|id| (fg.name(id), data.specialized_json(id)))
        .collect::<serde_json::Map<_, _>>();
    emit(&args.output, &serde_json::Value::Object(out))
}

fn parse_element(group: &CoxeterGroup, text: &str) -> anyhow::Result<coxcell::coxeter::Element> {
    let graph = group.graph();
    let labels: Vec<String> = if text == "e" {
        Vec::new()
    } else if text.contains('.') {
        text.split('.').map(str::to_string).collect()
    } else if graph.index_of(text).is_ok() {
        vec![text.to_string()]
    } else {
        text.chars().map(String::from).collect()
    };
    Ok(group.element_from_labels(&labels)?)
}

fn parse_scalar(text: &str) -> anyhow::Result<CycloNumber> {
    let text = text.trim();
    if text.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).context("parameter x is not valid JSON")?;
        Ok(CycloNumber::from_json(&value)?)
    } else {
        let text = text.trim_matches('"');
        Ok(CycloNumber::from_rational(1, parse_rational(text)?))
    }
}

fn caps(output: &Output) -> anyhow::Result<Caps> {
    let mut caps = Caps::default();
    if let Some(text) = &output.cap {
        let mut parts = text.split(',').map(|p| p.trim().parse::<usize>());
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(length)), None, None) => caps.length = length,
            (Some(Ok(length)), Some(Ok(size)), None) => caps = Caps { length, size },
            _ => bail!("cap must be `N` or `LENGTH,SIZE`, got `{text}`"),
        }
    }
    Ok(caps)
}

fn kl_data(path: &Path, output: &Output) -> anyhow::Result<KlData> {
    let graph = read_graph(path)?;
    let caps = caps(output)?;
    KlData::new(graph, caps).map_err(|e| match e {
        coxcell::Error::NotFinite => anyhow::anyhow!(
            "group is infinite or larger than the cap (length {}, size {})",
            caps.length,
            caps.size
        ),
        e => e.into(),
    })
}

fn read_json(path: &Path) -> anyhow::Result<serde_json::Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<CoxeterGraph> {
    Ok(CoxeterGraph::from_json(&read_json(path)?)?)
}

fn read_rep(path: &Path) -> anyhow::Result<MatrixRep> {
    Ok(MatrixRep::from_json(&read_json(path)?)?)
}

fn merge(into: &mut serde_json::Value, from: serde_json::Value) {
    if let (Some(a), serde_json::Value::Object(b)) = (into.as_object_mut(), from) {
        a.extend(b);
    }
}

fn emit(output: &Output, json: &serde_json::Value) -> anyhow::Result<Outcome> {
    if output.format == Format::Dot {
        bail!("this subcommand has no DOT output");
    }
    let mut text = serde_json::to_string_pretty(json)?;
    text.push('\n');
    emit_text(output, &text)
}

fn emit_text(output: &Output, text: &str) -> anyhow::Result<Outcome> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(Outcome::Holds)
}
