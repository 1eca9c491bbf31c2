//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification finds a violation, 2 on
//! a usage error (unknown subcommand or flag, malformed input).

use std::io::Write;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::dn_classification::{enumerate_irr, is_almost_special, is_two_special};
use crate::exceptional_tables::{diff_ca_cs2, load_table, GroupType};
use crate::perm_groups::{catalog, identify, resolve_pair, GroupKind};
use crate::sign_twist::{default_cutoff, tensor_sign};
use crate::strata_map::{gamma_sigma, strata_table, StrataTable};
use crate::symbols::Symbol;
use crate::verify::{self, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "almost-special", version, about = "Symbols, almost special representations and strata groups")]
struct Cli {
    /// Emit one JSON document per line.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List Irr(W(D_n)) with almost special and 2-special flags.
    Classify {
        #[arg(long)]
        rank: u32,
    },
    /// Tensor a type D symbol with the sign representation.
    Twist {
        /// Symbol as "l1 ... lm / u1 ... um".
        #[arg(long)]
        symbol: String,
        #[arg(long)]
        cutoff: Option<u32>,
    },
    /// Run a verification sweep.
    Verify {
        check: Check,
        #[arg(long)]
        max_rank: Option<u32>,
    },
    /// Print an exceptional table of almost special representations.
    Table(TableArgs),
    /// Print the strata of a family with recomputed groups.
    Strata {
        #[arg(long)]
        table: String,
    },
    /// Subgroup catalog and quotients.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Check {
    Theorem12,
    LemmaB,
    SignClosure,
    TwistAlgebra,
    Tables,
    Strata,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
struct TableArgs {
    #[command(subcommand)]
    action: Option<TableAction>,
    #[arg(long = "type")]
    group: Option<String>,
}

#[derive(Debug, Subcommand)]
enum TableAction {
    /// Almost special but not 2-special entries.
    Diff {
        #[arg(long = "type")]
        group: String,
    },
}

#[derive(Debug, Subcommand)]
enum GroupAction {
    /// Identify upper/lower for cataloged subgroups.
    Quotient {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
    },
    /// List the cataloged subgroups.
    Catalog {
        #[arg(long)]
        ambient: Option<String>,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Check,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

type Outcome = Result<(), Failure>;

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    // Output is buffered so that sweeps can run inside a dedicated pool.
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
            Err(e) => Err(Failure::Usage(e.into())),
        },
        None => dispatch(&cli, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Classify { rank } => classify(*rank, json, out),
        Command::Twist { symbol, cutoff } => twist(symbol, *cutoff, json, out),
        Command::Verify { check, max_rank } => run_verify(*check, *max_rank, json, out),
        Command::Table(args) => match &args.action {
            Some(TableAction::Diff { group }) => table_diff(group, json, out),
            None => {
                let group = args.group.as_deref().ok_or_else(|| anyhow!("--type is required"))?;
                table(group, json, out)
            }
        },
        Command::Strata { table } => strata(table, json, out),
        Command::Group { action } => match action {
            GroupAction::Quotient { ambient, upper, lower } => group_quotient(ambient, upper, lower, json, out),
            GroupAction::Catalog { ambient } => group_catalog(ambient.as_deref(), json, out),
        },
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(rank: u32, json: bool, out: &mut dyn Write) -> Outcome {
    let labels = enumerate_irr(rank).map_err(anyhow::Error::from)?;
    let width = labels.iter().map(|l| l.class().to_string().len()).max().unwrap_or(0);
    if !json {
        writeln!(out, "{:<width$}  {:<6}  {:<14}  two_special", "symbol", "marker", "almost_special")?;
    }
    let (mut almost, mut two) = (0, 0);
    for l in &labels {
        let (a, x) = (is_almost_special(l), is_two_special(l));
        almost += a as usize;
        two += x as usize;
        let marker = l.marker().map(|m| m.to_string());
        if json {
            let record = json!({
                "symbol": l.class().to_string(),
                "degenerate": l.is_degenerate(),
                "marker": marker,
                "almost_special": a,
                "two_special": x,
            });
            writeln!(out, "{record}")?;
        } else {
            let marker = marker.unwrap_or_else(|| "-".into());
            writeln!(out, "{:<width$}  {:<6}  {:<14}  {}", l.class().to_string(), marker, yes_no(a), yes_no(x))?;
        }
    }
    if !json {
        writeln!(out, "D{rank}: {} labels, {almost} almost special, {two} 2-special", labels.len())?;
    }
    Ok(())
}

fn twist(symbol: &str, cutoff: Option<u32>, json: bool, out: &mut dyn Write) -> Outcome {
    let s: Symbol = symbol.parse().map_err(anyhow::Error::from)?;
    let cutoff = cutoff.unwrap_or_else(|| default_cutoff(&s));
    let t = tensor_sign(&s, cutoff).map_err(anyhow::Error::from)?;
    if json {
        let class = t.canonical().map(|c| c.to_string()).ok();
        writeln!(out, "{}", json!({"symbol": s.to_string(), "cutoff": cutoff, "twisted": t.to_string(), "class": class}))?;
    } else {
        writeln!(out, "{t}")?;
    }
    Ok(())
}

fn run_verify(check: Check, max_rank: Option<u32>, json: bool, out: &mut dyn Write) -> Outcome {
    let rank = |default: u32, min: u32| -> Result<u32, Failure> {
        let r = max_rank.unwrap_or(default);
        if r < min {
            return Err(anyhow!("--max-rank must be at least {min}").into());
        }
        Ok(r)
    };
    let report = match check {
        Check::Theorem12 => verify::theorem12(rank(24, 4)?),
        Check::LemmaB => verify::lemma_b(rank(12, 1)?, 3),
        Check::SignClosure => verify::sign_closure(rank(20, 4)?),
        Check::TwistAlgebra => verify::twist_algebra(rank(14, 1)?),
        Check::Tables => verify::tables(),
        Check::Strata => verify::strata(),
    };
    emit_report(&report, json, out)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn emit_report(report: &VerificationReport, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string(report).expect("report serializes"))
    } else {
        writeln!(
            out,
            "{} {} {}: {} instances, {} violations ({:.1} ms)",
            if report.passed() { "PASS" } else { "FAIL" },
            report.check,
            report.range,
            report.instances,
            report.violations.len(),
            report.wall_time_ms
        )?;
        for v in &report.violations {
            writeln!(out, "  {v}")?;
        }
        Ok(())
    }
}

fn parse_group(text: &str) -> Result<GroupType, Failure> {
    Ok(text.parse::<GroupType>().map_err(anyhow::Error::from)?)
}

fn table(group: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let t = load_table(parse_group(group)?).map_err(anyhow::Error::from)?;
    if json {
        for (i, row) in t.rows.iter().enumerate() {
            let members: Vec<_> = row
                .members
                .iter()
                .map(|m| json!({"label": m.label.to_string(), "two_special": m.two_special}))
                .collect();
            writeln!(out, "{}", json!({"type": t.group, "row": i + 1, "members": members}))?;
        }
    } else {
        write!(out, "{}", t.render())?;
    }
    Ok(())
}

fn table_diff(group: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let g = parse_group(group)?;
    let diff: Vec<String> = diff_ca_cs2(g).map_err(anyhow::Error::from)?.iter().map(|l| l.to_string()).collect();
    if json {
        writeln!(out, "{}", json!({"type": g, "diff": diff}))?;
    } else {
        writeln!(out, "{}", diff.join(" "))?;
    }
    Ok(())
}

fn strata(table: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let t: StrataTable = table.parse().map_err(anyhow::Error::from)?;
    let mut failed = false;
    for e in strata_table(t) {
        let computed = gamma_sigma(&e);
        failed |= computed.is_err();
        let computed_text = match &computed {
            Ok(k) => k.to_string(),
            Err(err) => format!("error: {err}"),
        };
        if json {
            let record = json!({
                "table": t.to_string(),
                "rep": e.rep.to_string(),
                "upper": e.upper_name,
                "lower": e.lower_name,
                "claimed": e.claimed_kind.to_string(),
                "computed": computed_text,
                "unipotent": e.has_unipotent_class,
            });
            writeln!(out, "{record}")?;
        } else {
            let pair = format!("{}/{}", e.upper_name, e.lower_name);
            let unipotent = if e.has_unipotent_class { "unipotent" } else { "-" };
            writeln!(out, "{:<8} {:<12} {:<4} {}", e.rep.to_string(), pair, computed_text, unipotent)?;
        }
    }
    if failed {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn parse_ambient(text: &str) -> Result<GroupKind, Failure> {
    let kind: GroupKind = text.parse().map_err(anyhow::Error::from)?;
    if kind.degree().is_none() {
        return Err(anyhow!("ambient group must be S3, S4 or S5, got {text}").into());
    }
    Ok(kind)
}

fn group_quotient(ambient: &str, upper: &str, lower: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let ambient = parse_ambient(ambient)?;
    let pair = resolve_pair(&ambient, upper, lower)
        .with_context(|| format!("{upper}/{lower} in {ambient}"))?;
    let q = pair.quotient().map_err(anyhow::Error::from)?;
    let kind = identify(&q.table);
    if json {
        let record = json!({
            "ambient": ambient.to_string(),
            "upper": upper,
            "lower": lower,
            "lower_generators": pair.lower.generators(),
            "order": q.order(),
            "kind": kind.to_string(),
        });
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "{kind}")?;
    }
    Ok(())
}

fn group_catalog(ambient: Option<&str>, json: bool, out: &mut dyn Write) -> Outcome {
    let ambients = match ambient {
        Some(a) => vec![parse_ambient(a)?],
        None => vec![GroupKind::S3, GroupKind::S4, GroupKind::S5],
    };
    for a in ambients {
        for (name, g) in catalog(&a).map_err(anyhow::Error::from)? {
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({"ambient": a.to_string(), "name": name, "order": g.order(), "generators": g.generators()})
                )?;
            } else {
                let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
                writeln!(out, "{:<3} {:<5} order {:<4} <{}>", a.to_string(), name, g.order(), gens.join(", "))?;
            }
        }
    }
    Ok(())
}
