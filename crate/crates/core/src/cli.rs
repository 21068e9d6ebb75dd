//! Batch command-line surface.
//!
//! Subcommands: `pm analyze` (sign-sequence statistics), `generate`
//! (truncated crystal graphs as text, JSON or DOT), `check` (crystal axioms,
//! source uniqueness and rank-2 component verification), `compare` (rooted
//! isomorphism between two models), `witness` (a partition separating two
//! arm sequences) and `biorder` (configuration-crystal reports and the
//! domino construction).
//!
//! Exit codes: 0 for success/pass, 1 for a negative result (failed checks,
//! no witness, not isomorphic), 2 for usage, input or resource errors.
//! Output is byte-identical across identical invocations.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::arm_seq::ArmSequence;
use crate::biorder::{component_biorder, Biorder, Configuration};
use crate::crystal_graph::CrystalGraph;
use crate::models::{distinct_sets, witness, ModelSpec, WitnessError};
use crate::partition::Partition;
use crate::pm_seq::SignSeq;
use crate::reg_crystal::required_prefix;

#[derive(Parser)]
#[command(
    name = "crystal-models",
    about = "Partition models of the basic affine crystal: generation, verification, comparison",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sign-sequence calculus.
    Pm {
        #[command(subcommand)]
        command: PmCommand,
    },
    /// Generate the truncated crystal graph of a model.
    Generate(GenerateArgs),
    /// Verify crystal axioms, sources and rank-2 components.
    Check(CheckArgs),
    /// Compare two models by rooted isomorphism.
    Compare(CompareArgs),
    /// Find a partition separating two arm-sequence models.
    Witness(WitnessArgs),
    /// Configuration-crystal reports and the domino construction.
    Biorder(BiorderArgs),
}

#[derive(Subcommand)]
enum PmCommand {
    /// Statistics and reduction of a word over {+, 0, -}.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// Modulus n >= 3.
    #[arg(long)]
    n: u32,
    /// Model spec: regular | restricted | berg | colregular | prefix:... | canonical:...
    #[arg(long)]
    model: String,
    /// Truncation bound on partition size.
    #[arg(long = "max-size")]
    max_size: u32,
    /// Output format.
    #[arg(long, value_parser = ["text", "json", "dot"], default_value = "text")]
    format: String,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Accept the broadened arm-sequence rule 0 <= A_t <= nt-1.
    #[arg(long)]
    broad: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Read a graph JSON file instead of generating a model.
    #[arg(long, conflicts_with_all = ["n", "model", "max_size"])]
    input: Option<PathBuf>,
    #[arg(long, required_unless_present = "input")]
    n: Option<u32>,
    #[arg(long, required_unless_present = "input")]
    model: Option<String>,
    #[arg(long = "max-size", required_unless_present = "input")]
    max_size: Option<u32>,
    /// Comma-separated subset of: axioms,sources,rank2.
    #[arg(long, default_value = "axioms,sources,rank2")]
    checks: String,
    #[arg(long)]
    broad: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    n: u32,
    /// Modulus for the second model, when different.
    #[arg(long = "n-b")]
    n_b: Option<u32>,
    #[arg(long = "max-size")]
    max_size: u32,
    /// First model spec.
    model_a: String,
    /// Second model spec.
    model_b: String,
    #[arg(long)]
    broad: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    n: u32,
    /// First arm-sequence spec.
    spec_a: String,
    /// Second arm-sequence spec.
    spec_b: String,
    /// Prefix length used to materialize aliases.
    #[arg(long, default_value_t = 8)]
    len: usize,
    /// Accept the broadened rule (rejected by the witness search).
    #[arg(long)]
    broad: bool,
    /// Also run the brute-force membership scan up to this size.
    #[arg(long = "cross-check")]
    cross_check: Option<u32>,
}

#[derive(Args)]
struct BiorderArgs {
    /// Biorder JSON file to analyze.
    #[arg(long, conflicts_with = "from_partition")]
    input: Option<PathBuf>,
    /// Extract the domino biorder of the component containing this partition.
    #[arg(long = "from-partition")]
    from_partition: Option<String>,
    /// Residue i (the second label is i+1 mod n).
    #[arg(long, default_value_t = 0)]
    i: u32,
    #[arg(long, required_unless_present = "input")]
    n: Option<u32>,
    /// Arm-sequence spec for the node order.
    #[arg(long, required_unless_present = "input")]
    model: Option<String>,
    #[arg(long)]
    broad: bool,
}

/// Parse `std::env::args` and run; returns the process exit code.
pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout();
    run_from(&args, &mut stdout)
}

/// Testable entry point: run with explicit arguments, writing to `out`.
pub fn run_from(args: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Pm { command } => cmd_pm(command, out),
        Command::Generate(args) => cmd_generate(args, out),
        Command::Check(args) => cmd_check(args, out),
        Command::Compare(args) => cmd_compare(args, out),
        Command::Witness(args) => cmd_witness(args, out),
        Command::Biorder(args) => cmd_biorder(args, out),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err);
            2
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn cmd_pm(command: PmCommand, out: &mut dyn Write) -> CmdResult {
    match command {
        PmCommand::Analyze { sequence } => {
            let seq: SignSeq = sequence.parse()?;
            let a = seq.analyze();
            let fmt_pos = |p: Option<usize>| match p {
                Some(p) => p.to_string(),
                None => "none".to_string(),
            };
            writeln!(out, "sequence: {}", seq)?;
            writeln!(out, "epsilon:  {}", a.epsilon)?;
            writeln!(out, "phi:      {}", a.phi)?;
            writeln!(out, "good:     {}", fmt_pos(a.good_pos))?;
            writeln!(out, "cogood:   {}", fmt_pos(a.cogood_pos))?;
            writeln!(out, "reduced:  {}", seq.reduce())?;
            Ok(0)
        }
    }
}

fn alias_len(n: u32, max_size: u32) -> usize {
    required_prefix(n, max_size).max(1)
}

fn build_graph(
    n: u32,
    model: &str,
    max_size: u32,
    broad: bool,
) -> Result<(CrystalGraph, String), Box<dyn std::error::Error>> {
    let spec = ModelSpec::parse(n, model, broad, alias_len(n, max_size))?;
    let model = spec.build();
    let graph = CrystalGraph::generate(model.as_ref(), max_size)?;
    Ok((graph, model.describe()))
}

fn emit(out: &mut dyn Write, output: Option<&PathBuf>, text: &str) -> CmdResult {
    match output {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(0)
        }
        None => {
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
    }
}

fn cmd_generate(args: GenerateArgs, out: &mut dyn Write) -> CmdResult {
    let (graph, description) = build_graph(args.n, &args.model, args.max_size, args.broad)?;
    let text = match args.format.as_str() {
        "json" => graph.to_json() + "\n",
        "dot" => graph.to_dot(),
        _ => {
            let mut text = String::new();
            writeln!(text, "model: {}", description)?;
            writeln!(text, "max size: {}", args.max_size)?;
            writeln!(
                text,
                "vertices: {} edges: {}",
                graph.num_vertices(),
                graph.edges().len()
            )?;
            for m in 0..=args.max_size {
                let count = graph.vertices().iter().filter(|v| v.size == m).count();
                writeln!(text, "  size {:>2}: {}", m, count)?;
            }
            text
        }
    };
    emit(out, args.output.as_ref(), &text)
}

fn cmd_check(args: CheckArgs, out: &mut dyn Write) -> CmdResult {
    let (graph, label) = match &args.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            (CrystalGraph::from_json(&text)?, path.display().to_string())
        }
        None => {
            let (graph, description) = build_graph(
                args.n.unwrap(),
                args.model.as_ref().unwrap(),
                args.max_size.unwrap(),
                args.broad,
            )?;
            (graph, description)
        }
    };
    writeln!(out, "checking: {}", label)?;

    let selected: Vec<&str> = args.checks.split(',').map(str::trim).collect();
    for check in &selected {
        if !["axioms", "sources", "rank2"].contains(check) {
            return Err(format!("unknown check {:?}", check).into());
        }
    }
    let mut failed = false;

    if selected.contains(&"axioms") {
        let report = graph.verify_axioms();
        if report.is_ok() {
            let note = if report.weight_axioms_checked {
                ""
            } else {
                " (weight axioms skipped: missing weights or statistics)"
            };
            writeln!(out, "axioms: ok{}", note)?;
        } else {
            failed = true;
            writeln!(out, "axioms: FAIL ({} violations)", report.violations.len())?;
            for v in &report.violations {
                writeln!(out, "  {}", v)?;
            }
        }
    }

    if selected.contains(&"sources") {
        let sources = graph.sources();
        if sources.len() == 1 {
            writeln!(
                out,
                "sources: ok (unique source \"{}\")",
                graph.vertex(sources[0]).payload
            )?;
        } else {
            failed = true;
            writeln!(out, "sources: FAIL ({} sources)", sources.len())?;
            for s in sources {
                writeln!(out, "  {}", graph.vertex(s).payload)?;
            }
        }
    }

    if selected.contains(&"rank2") {
        let n = graph.n();
        let labels = graph.labels().to_vec();
        for (idx, &i) in labels.iter().enumerate() {
            for &j in &labels[idx + 1..] {
                let adjacent = (i + 1) % n == j % n || (j + 1) % n == i % n;
                let comps = graph.rank2(i, j);
                let mut complete = 0usize;
                let mut skipped = 0usize;
                let mut bad = Vec::new();
                for c in &comps {
                    if !c.complete {
                        skipped += 1;
                        continue;
                    }
                    complete += 1;
                    if adjacent {
                        let report = graph.check_local_axioms(c)?;
                        if !report.is_ok() {
                            bad.push((c.vertices[0], report.violations));
                        }
                    } else {
                        let violations = graph.check_commuting(c)?;
                        if !violations.is_empty() {
                            bad.push((c.vertices[0], violations));
                        }
                    }
                }
                let kind = if adjacent {
                    "local axioms"
                } else {
                    "commuting"
                };
                if bad.is_empty() {
                    writeln!(
                        out,
                        "rank2 ({},{}) [{}]: ok ({} complete, {} incomplete skipped)",
                        i, j, kind, complete, skipped
                    )?;
                } else {
                    failed = true;
                    writeln!(
                        out,
                        "rank2 ({},{}) [{}]: FAIL in {} of {} complete components ({} skipped)",
                        i,
                        j,
                        kind,
                        bad.len(),
                        complete,
                        skipped
                    )?;
                    for (root, violations) in &bad {
                        writeln!(out, "  component of \"{}\":", graph.vertex(*root).payload)?;
                        for v in violations {
                            writeln!(out, "    {}", v)?;
                        }
                    }
                }
            }
        }
    }

    Ok(if failed { 1 } else { 0 })
}

fn cmd_compare(args: CompareArgs, out: &mut dyn Write) -> CmdResult {
    let (ga, da) = build_graph(args.n, &args.model_a, args.max_size, args.broad)?;
    let (gb, db) = build_graph(
        args.n_b.unwrap_or(args.n),
        &args.model_b,
        args.max_size,
        args.broad,
    )?;
    writeln!(out, "a: {}", da)?;
    writeln!(out, "b: {}", db)?;
    match ga.isomorphic(&gb)? {
        Some(map) => {
            let identity = map
                .iter()
                .enumerate()
                .all(|(u, &v)| ga.vertex(u).payload == gb.vertex(v).payload);
            writeln!(
                out,
                "isomorphic ({} vertices{})",
                map.len(),
                if identity { ", identity witness" } else { "" }
            )?;
            for (u, &v) in map.iter().enumerate().take(5) {
                writeln!(
                    out,
                    "  ({}) -> ({})",
                    ga.vertex(u).payload,
                    gb.vertex(v).payload
                )?;
            }
            Ok(0)
        }
        None => {
            writeln!(out, "not isomorphic")?;
            Ok(1)
        }
    }
}

fn cmd_witness(args: WitnessArgs, out: &mut dyn Write) -> CmdResult {
    if args.broad {
        return Err(WitnessError::Broadened.into());
    }
    let a = ArmSequence::parse_spec(args.n, &args.spec_a, false, args.len)?;
    let b = ArmSequence::parse_spec(args.n, &args.spec_b, false, args.len)?;
    writeln!(out, "a: {}", a)?;
    writeln!(out, "b: {}", b)?;
    match witness(&a, &b) {
        Ok(w) => {
            let in_a = crate::reg_crystal::is_a_regular(&w, &a)?;
            writeln!(
                out,
                "witness: ({}) is regular for {} = {} only",
                w,
                if in_a { "a" } else { "b" },
                if in_a { a.to_string() } else { b.to_string() }
            )?;
            if let Some(bound) = args.cross_check {
                match distinct_sets(&a, &b, bound)? {
                    Some(found) => writeln!(out, "brute-force agreement: ({})", found)?,
                    None => writeln!(out, "brute force found nothing up to {}", bound)?,
                }
            }
            Ok(0)
        }
        Err(WitnessError::NoDifference(len)) => {
            writeln!(
                out,
                "no witness: prefixes agree on the comparable range (length {})",
                len
            )?;
            Ok(1)
        }
        Err(err) => Err(err.into()),
    }
}

fn parse_config(payload: &str) -> Configuration {
    if payload.is_empty() {
        return Configuration::new(Vec::new());
    }
    Configuration::new(
        payload
            .split(',')
            .map(|v| v.parse().expect("configuration payload"))
            .collect(),
    )
}

fn cmd_biorder(args: BiorderArgs, out: &mut dyn Write) -> CmdResult {
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)?;
        let biorder = Biorder::from_json(&text)?;
        return biorder_report(&biorder, out);
    }
    let member: Partition = args
        .from_partition
        .as_deref()
        .ok_or("pass --input FILE or --from-partition PARTITION")?
        .parse()?;
    let n = args.n.ok_or("--n is required with --from-partition")?;
    let spec = args
        .model
        .as_deref()
        .ok_or("--model is required with --from-partition")?;
    let len = alias_len(n, member.size() + 2 * (member.num_rows() as u32 + 3));
    let arm = ArmSequence::parse_spec(n, spec, args.broad, len)?;
    let cb = component_biorder(&member, args.i, &arm)?;
    writeln!(out, "member: ({})", member)?;
    writeln!(out, "labels: i={} j={}", cb.i, cb.j)?;
    writeln!(out, "c_down: ({})", cb.c_down)?;
    writeln!(out, "c_up: ({})", cb.c_up)?;
    writeln!(out, "dominoes:")?;
    for (idx, d) in cb.dominoes.iter().enumerate() {
        writeln!(
            out,
            "  {}: {} {} {}",
            cb.biorder.name(idx),
            d.i_node,
            d.j_node,
            if d.horizontal {
                "horizontal"
            } else {
                "vertical"
            }
        )?;
    }
    writeln!(out, "psi(member): {}", cb.psi(&member))?;
    writeln!(out, "biorder:")?;
    writeln!(out, "{}", cb.biorder.to_json())?;
    Ok(0)
}

fn biorder_report(biorder: &Biorder, out: &mut dyn Write) -> CmdResult {
    writeln!(out, "elements: {}", biorder.names().join(","))?;
    writeln!(out, "transitive: {}", biorder.is_transitive())?;
    if let Some((s1, s2)) = biorder.split() {
        let names = |ids: &[usize]| {
            ids.iter()
                .map(|&s| biorder.name(s).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(out, "split: [{}] over [{}]", names(&s1), names(&s2))?;
    }
    let graph = biorder.cc_graph()?;
    let components = graph.components();
    writeln!(
        out,
        "configurations: {} in {} components",
        graph.num_vertices(),
        components.len()
    )?;
    for (idx, comp) in components.iter().enumerate() {
        let good = comp.iter().all(|&v| {
            biorder
                .is_good(&parse_config(&graph.vertex(v).payload))
                .is_ok()
        });
        let sub = graph.subgraph(comp);
        let rank2 = sub.rank2(0, 1);
        let report = sub.check_local_axioms(&rank2[0])?;
        writeln!(
            out,
            "component {}: {} vertices, good: {}, sources: {}, local axioms: {}",
            idx + 1,
            comp.len(),
            if good { "yes" } else { "no" },
            report.sources.len(),
            if report.is_ok() { "pass" } else { "FAIL" }
        )?;
        for v in report.violations.iter().take(3) {
            writeln!(out, "  {}", v)?;
        }
    }
    Ok(0)
}
