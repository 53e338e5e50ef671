//! The `pentacover` command line.
//!
//! Exit codes: 0 success, 1 verification failure or computation error,
//! 2 usage error (bad flags, unreadable input, unmet side condition).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::acceptance::{self, Status, Tier};
use crate::construct::{
    canonical_arc_group, canonical_cover_subgroup, family, ConstructError, Family, FamilyInstance, Manifest, Params,
};
use crate::covers::{cover_kernels, quotient, verify_symmetric_cover, CoverReport, FibreGroup};
use crate::graph::{parse_graph, to_graph6, to_sparse6, Graph};
use crate::groups::perm::{format_perm_list, parse_perm_list};
use crate::groups::{Perm, PermGroup};
use crate::modarith::{multiplicative_order, solve_eq1};
use crate::symmetry::{automorphism_group, is_arc_transitive, isomorphism_report, stabilizer_report, DEFAULT_NODE_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pentacover", version, about = "Pentavalent symmetric graphs and their cyclic and dihedral covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph and write it out.
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Automorphism group order, generator count, vertex stabilizer and s.
    Aut {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two graphs are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Roots of x^4+x^3+x^2+x+1 modulo m.
    #[command(name = "solve-eq1")]
    SolveEq1 {
        #[arg(long)]
        m: u64,
    },
    /// Quotient of a graph by a group of automorphisms.
    Quotient {
        file: PathBuf,
        /// `canonical` (needs --family and parameters) or a file of permutations,
        /// one per line in image notation.
        #[arg(long)]
        subgroup: String,
        #[command(flatten)]
        family: OptionalFamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify that COVER is a symmetric regular cover as the named family claims.
    #[command(name = "verify-cover")]
    VerifyCover {
        cover: PathBuf,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// List the families, their parameters and side conditions.
    Catalog,
    /// Run the acceptance suite and print a pass/fail table.
    Acceptance {
        /// Only instances of at most 600 vertices.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, default_value_t = 0)]
    m: u64,
    #[arg(long, default_value_t = 0)]
    p: u64,
    #[arg(long, default_value_t = 0)]
    e: u32,
}

#[derive(Args, Debug)]
struct OptionalFamilyArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long, default_value_t = 0)]
    m: u64,
    #[arg(long, default_value_t = 0)]
    p: u64,
    #[arg(long, default_value_t = 0)]
    e: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Graph6,
    Sparse6,
}

/// A failed command: message plus exit code.
struct Failure(i32, String);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn failed(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_FAILED, msg.to_string())
}

fn construct_failure(e: ConstructError) -> Failure {
    match e {
        ConstructError::SideCondition { .. } | ConstructError::UnknownFamily(_) => usage(e),
        _ => failed(e),
    }
}

fn build_family(f: Family, m: u64, p: u64, e: u32) -> Result<FamilyInstance, Failure> {
    family(f, Params { m, p, e }).map_err(construct_failure)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map(|(g, _)| g).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Sparse6 => to_sparse6(g),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| failed(format!("{}: {e}", p.display()))),
        None => writeln!(out, "{text}").map_err(failed),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Build { family, format, output } => {
            let inst = build_family(family.family, family.m, family.p, family.e)?;
            emit(out, output.as_deref(), &encode(&inst.graph, format))?;
            Ok(EXIT_OK)
        }
        Command::Aut { file, json } => aut(&read_graph(&file)?, json, out),
        Command::Iso { first, second } => {
            let (g1, g2) = (read_graph(&first)?, read_graph(&second)?);
            let r = isomorphism_report(&g1, &g2, DEFAULT_NODE_BUDGET).map_err(failed)?;
            writeln!(out, "{}", if r.isomorphic { "isomorphic" } else { "not isomorphic" }).map_err(failed)?;
            Ok(EXIT_OK)
        }
        Command::SolveEq1 { m } => {
            if m == 0 {
                return Err(usage("m must be positive"));
            }
            let roots = solve_eq1(m).map_err(failed)?;
            if roots.is_empty() {
                writeln!(out, "no roots mod {m}").map_err(failed)?;
            }
            for r in roots {
                let order = multiplicative_order(r.value(), m).map_or("-".to_string(), |o| o.to_string());
                writeln!(out, "{} (order {order})", r.value()).map_err(failed)?;
            }
            Ok(EXIT_OK)
        }
        Command::Quotient { file, subgroup, family, format, output } => {
            let g = read_graph(&file)?;
            let group = if subgroup == "canonical" {
                let f = family.family.ok_or_else(|| usage("--subgroup canonical needs --family"))?;
                let inst = build_family(f, family.m, family.p, family.e)?;
                let map = identify_with(&inst, &g)?;
                let n = canonical_cover_subgroup(&inst).map_err(construct_failure)?;
                transport(&n.group, &map)?
            } else {
                let path = Path::new(&subgroup);
                let text = fs::read_to_string(path).map_err(|e| usage(format!("{subgroup}: {e}")))?;
                let perms = parse_perm_list(&text).map_err(|e| usage(format!("{subgroup}: {e}")))?;
                PermGroup::new(g.vertex_count(), perms).map_err(usage)?
            };
            let q = quotient(&g, &group).map_err(failed)?;
            emit(out, output.as_deref(), &encode(&q.graph, format))?;
            Ok(EXIT_OK)
        }
        Command::VerifyCover { cover, family, json } => {
            let g = read_graph(&cover)?;
            let inst = build_family(family.family, family.m, family.p, family.e)?;
            verify_cover(&inst, &g, json, out)
        }
        Command::Catalog => {
            let manifest = Manifest::builtin();
            for f in Family::ALL {
                let Some(entry) = manifest.entry(f.name()) else { continue };
                let params = if entry.parameters.is_empty() { String::new() } else { entry.parameters.join(", ") };
                let conditions = if entry.conditions.is_empty() { "-".to_string() } else { entry.conditions.join("; ") };
                writeln!(out, "{:<9} {:<24} {:<10} {conditions}", f.name(), entry.display, params).map_err(failed)?;
            }
            Ok(EXIT_OK)
        }
        Command::Acceptance { quick, json } => {
            let outcomes = acceptance::run(if quick { Tier::Quick } else { Tier::Full });
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&outcomes).map_err(failed)?).map_err(failed)?;
            } else {
                write!(out, "{}", acceptance::format_table(&outcomes)).map_err(failed)?;
            }
            Ok(if outcomes.iter().any(|o| o.status == Status::Fail) { EXIT_FAILED } else { EXIT_OK })
        }
    }
}

fn aut(g: &Graph, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let a = automorphism_group(g).map_err(failed)?;
    let n = g.vertex_count();
    let transitive = n > 0 && a.is_vertex_transitive(n);
    // the stabilizer and s are only meaningful for vertex-transitive graphs
    let stab = if transitive { Some(stabilizer_report(g, &a).map_err(failed)?) } else { None };
    let label = stab.as_ref().and_then(|s| s.label.clone());
    let s = stab.as_ref().and_then(|s| s.s);
    let arc_transitive = g.edge_count() > 0 && is_arc_transitive(g, &a);
    if json {
        let v = json!({
            "vertices": n,
            "edges": g.edge_count(),
            "order": a.order.to_string(),
            "generators": a.generators.len(),
            "vertex_transitive": transitive,
            "arc_transitive": arc_transitive,
            "stabilizer_order": a.stabilizer_order().to_string(),
            "stabilizer": label,
            "s": s,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(failed)?).map_err(failed)?;
    } else {
        writeln!(out, "order {}", a.order).map_err(failed)?;
        writeln!(out, "generators {}", a.generators.len()).map_err(failed)?;
        writeln!(out, "stabilizer {}", label.as_deref().unwrap_or("-")).map_err(failed)?;
        writeln!(out, "s {}", s.map_or("-".to_string(), |s| s.to_string())).map_err(failed)?;
    }
    Ok(EXIT_OK)
}

/// An isomorphism from the built instance onto the graph read from disk.
fn identify_with(inst: &FamilyInstance, g: &Graph) -> Result<Perm, Failure> {
    let r = isomorphism_report(&inst.graph, g, DEFAULT_NODE_BUDGET).map_err(failed)?;
    r.map.ok_or_else(|| failed(format!("the graph is not isomorphic to {}", inst.label())))
}

/// Carries a group on the instance's vertices over to the file's labelling.
fn transport(group: &PermGroup, map: &Perm) -> Result<PermGroup, Failure> {
    let gens = group.generators().iter().map(|k| k.conjugate_by(map)).collect();
    PermGroup::new(map.degree(), gens).map_err(failed)
}

fn verify_cover(inst: &FamilyInstance, g: &Graph, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let map = identify_with(inst, g)?;
    let (report, kernel, base_label) = match canonical_cover_subgroup(inst) {
        Ok(n) => {
            let base = family(n.base.0, n.base.1).map_err(construct_failure)?;
            let (base_label, base) = (base.label(), base.graph);
            let k = transport(&n.group, &map)?;
            let report = match canonical_arc_group(inst) {
                Ok(arc) => {
                    let arc_group = transport(&arc.group, &map)?;
                    let fibre = FibreGroup::Supplied { group: &arc_group, order: Some(arc.order) };
                    verify_symmetric_cover(g, &k, &base, fibre)
                }
                Err(ConstructError::NotApplicable(_)) => {
                    let aut = automorphism_group(g).map_err(failed)?;
                    verify_symmetric_cover(g, &k, &base, FibreGroup::Enumerate(&aut))
                }
                Err(e) => return Err(failed(e)),
            }
            .map_err(failed)?;
            (report, n.description, base_label)
        }
        Err(ConstructError::NotApplicable(_)) => k6_cover(inst, g)?,
        Err(e) => return Err(construct_failure(e)),
    };
    if json {
        let mut v = serde_json::to_value(&report).map_err(failed)?;
        v["kernel"] = json!(kernel);
        v["base"] = json!(base_label);
        writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(failed)?).map_err(failed)?;
    } else {
        writeln!(out, "kernel {kernel} of order {}", report.kernel_order).map_err(failed)?;
        writeln!(out, "semiregular {}", report.semiregular).map_err(failed)?;
        writeln!(out, "quotient {} vertices, valency preserved {}", report.quotient_order, report.valency_preserved)
            .map_err(failed)?;
        writeln!(out, "quotient isomorphic to {base_label} {}", report.iso_to_base).map_err(failed)?;
        if let Some(order) = report.fibre_group_order {
            writeln!(out, "fibre-preserving group order {order}").map_err(failed)?;
        }
        if let Some(at) = report.fibre_arc_transitive {
            writeln!(out, "fibre-preserving group arc-transitive {at}").map_err(failed)?;
        }
        writeln!(out, "{}", if report.checks_passed { "verified" } else { "not verified" }).map_err(failed)?;
    }
    Ok(if report.checks_passed { EXIT_OK } else { EXIT_FAILED })
}

/// Covers of `K_6`: the first normal semiregular kernel of order `|V|/6` that
/// gives a symmetric cover, searched inside the enumerated `Aut`.
fn k6_cover(inst: &FamilyInstance, g: &Graph) -> Result<(CoverReport, String, String), Failure> {
    let base_name = inst.expected.cover.as_ref().map(|c| c.base.as_str());
    if base_name != Some("k6") {
        return Err(usage(format!("{} has no cover subgroup to verify", inst.label())));
    }
    let k6 = Graph::complete(6);
    let aut = automorphism_group(g).map_err(failed)?;
    let mut last = None;
    for k in cover_kernels(g, &aut, g.vertex_count() / 6).map_err(failed)? {
        if !k.normal_in_aut {
            continue;
        }
        let r = verify_symmetric_cover(g, &k.group, &k6, FibreGroup::Enumerate(&aut)).map_err(failed)?;
        let label = k.label.unwrap_or("unidentified").to_string();
        let kernel = format!("{label}: {}", format_perm_list(k.group.generators()).trim_end().replace('\n', "; "));
        if r.checks_passed {
            return Ok((r, kernel, "k6".into()));
        }
        last = Some((r, kernel, "k6".into()));
    }
    last.ok_or_else(|| failed(format!("no normal semiregular subgroup of order {} in Aut", g.vertex_count() / 6)))
}
