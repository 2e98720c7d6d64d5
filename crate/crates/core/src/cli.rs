//! Command-line front end. [`run`] takes the argument vector and the two
//! output streams so that it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a verification claim failed, 2 usage error,
//! 3 runtime error (unreadable input, invalid table, cap exceeded).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::BoundReport;
use crate::complement::{self, Mode};
use crate::constructions::{example_group_with_cap, NamedGroup, Recipe, EXAMPLE_CAP};
use crate::error::Error;
use crate::group::{FiniteGroup, DEFAULT_CONSTRUCTION_CAP};
use crate::lattice::{self, generated_subgroup, Subgroup, SubgroupLattice, DEFAULT_LATTICE_CAP};
use crate::structure;
use crate::verify::{self, strip_timing, summarize, Status, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "complementa", version, about = "Complemented subgroups of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group and emit its Cayley table as cayley-v1 JSON.
    Build(Common),
    /// Enumerate the subgroup lattice.
    Lattice(Common),
    /// Decide a property of a group or of one of its subgroups.
    Check {
        property: Property,
        #[command(flatten)]
        common: Common,
    },
    /// Print the numeric bounds attached to m.
    Bounds {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
    /// Export the lattice as Graphviz DOT (or lattice JSON with --json).
    Export(Common),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Recipe name (theorem4, example, cyclic, dihedral, s3, c4xc2, ...) or
    /// a cayley-v1 JSON file.
    #[arg(long)]
    recipe: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    /// Handle name (x, a, B, ...) or comma-separated element words/indices.
    #[arg(long)]
    subgroup: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::First)]
    mode: ModeArg,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Order cap for construction and lattice enumeration.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    First,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Complemented,
    Complements,
    Supercomplemented,
    CSeparating,
    CompletelyFactorizable,
    Normal,
    Solvable,
    Nilpotent,
    DerivedSeries,
    LowerCentralSeries,
    ChiefSeries,
    Center,
    Frattini,
    Sylow,
    MinimalNormal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Theorem4,
    Example,
    Catalog,
    Bounds,
    Theorem1,
    Prop1,
    Theorem3,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownRecipe(_)
            | Error::UnknownElement(_)
            | Error::NotPrime(_)
            | Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parses `argv` (including the program name), executes, and returns the
/// exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli.command, err) {
        Ok((text, sink, code)) => match emit(&text, sink.as_deref(), out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                3
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

fn emit(text: &str, sink: Option<&Path>, out: &mut dyn Write) -> std::io::Result<()> {
    match sink {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    }
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Output text, optional output path, exit code.
type Execution = (String, Option<PathBuf>, i32);

fn execute(command: Command, err: &mut dyn Write) -> CliResult<Execution> {
    match command {
        Command::Build(c) => {
            let named = load(&c)?;
            let mut text = named.group.to_json();
            text.push('\n');
            Ok((text, c.out, 0))
        }
        Command::Lattice(c) => {
            let named = load(&c)?;
            let lat = build_lattice(&named.group, &c)?;
            let text = if c.json {
                to_line(&lat.to_document(&named.group))
            } else {
                lattice_text(&named.group, &lat)
            };
            Ok((text, c.out, 0))
        }
        Command::Export(c) => {
            let named = load(&c)?;
            let lat = build_lattice(&named.group, &c)?;
            let text = if c.json {
                to_line(&lat.to_document(&named.group))
            } else {
                lat.to_dot(&named.group)
            };
            Ok((text, c.out, 0))
        }
        Command::Bounds { m, q, json: _, out } => {
            let report = BoundReport::new(m, q)?;
            Ok((to_line(&report), out, 0))
        }
        Command::Check { property, common } => {
            let named = load(&common)?;
            let value = check(property, &named, &common)?;
            Ok((to_line(&value), common.out, 0))
        }
        Command::Verify { suite, common } => {
            let mut reports = run_suite(suite, &common)?;
            let (pass, fail, skipped) = summarize(&reports);
            let _ = writeln!(
                err,
                "{} claims: {pass} passed, {fail} failed, {skipped} skipped",
                reports.len()
            );
            strip_timing(&mut reports);
            let text = if common.json {
                to_line(&reports)
            } else {
                reports_text(&reports)
            };
            Ok((text, common.out, if fail > 0 { 1 } else { 0 }))
        }
    }
}

fn looks_like_file(recipe: &str) -> bool {
    recipe.ends_with(".json") || Path::new(recipe).is_file()
}

fn load(c: &Common) -> CliResult<NamedGroup> {
    let name = c
        .recipe
        .as_deref()
        .ok_or_else(|| Failure::Usage("--recipe is required".into()))?;
    if looks_like_file(name) {
        let text = std::fs::read_to_string(name)
            .map_err(|e| Failure::Runtime(format!("cannot read {name}: {e}")))?;
        let g = FiniteGroup::from_json(&text)?;
        return Ok(NamedGroup::new(name, g));
    }
    let recipe = Recipe::parse(name, c.p, c.n)?;
    match (recipe, c.cap) {
        (Recipe::Example(p), cap) => Ok(example_group_with_cap(p, cap.unwrap_or(EXAMPLE_CAP))?),
        (r, Some(cap)) if r.expected_fingerprint().order > cap.max(DEFAULT_CONSTRUCTION_CAP) => {
            Err(Error::CapExceeded {
                cap_name: "construction",
                size: r.expected_fingerprint().order,
                cap,
            }
            .into())
        }
        (r, _) => Ok(r.build()?),
    }
}

fn build_lattice(g: &FiniteGroup, c: &Common) -> CliResult<SubgroupLattice> {
    Ok(SubgroupLattice::build_with_cap(g, c.cap.unwrap_or(DEFAULT_LATTICE_CAP))?)
}

fn subgroup_arg(named: &NamedGroup, c: &Common) -> CliResult<Subgroup> {
    let spec = c
        .subgroup
        .as_deref()
        .ok_or_else(|| Failure::Usage("--subgroup is required for this property".into()))?;
    Ok(named.subgroup(spec)?)
}

fn subgroup_json(g: &FiniteGroup, h: &Subgroup) -> Value {
    json!({
        "order": h.order(),
        "generators": h.generators().iter().map(|&x| g.label(x)).collect::<Vec<_>>(),
        "members": h.members().to_vec(),
    })
}

fn decision_json(g: &FiniteGroup, d: &complement::Decision) -> Value {
    match &d.witness {
        None => json!({ "result": d.holds }),
        Some(w) => json!({ "result": d.holds, "witness": subgroup_json(g, w) }),
    }
}

fn check(property: Property, named: &NamedGroup, c: &Common) -> CliResult<Value> {
    let g = &named.group;
    let whole = Subgroup::whole(g);
    let sub = || subgroup_arg(named, c);
    let value = match property {
        Property::Complemented => {
            let h = sub()?;
            let found = complement::complements_by_search(g, &h, Mode::First);
            match found.complements.first() {
                Some(t) => json!({ "result": true, "complement": subgroup_json(g, t) }),
                None => json!({ "result": false }),
            }
        }
        Property::Complements => {
            let h = sub()?;
            let mode = match c.mode {
                ModeArg::First => Mode::First,
                ModeArg::All => Mode::All,
            };
            let found = if g.order() <= c.cap.unwrap_or(DEFAULT_LATTICE_CAP) {
                complement::complements_in(g, &build_lattice(g, c)?, &h, mode)
            } else {
                complement::complements_by_search(g, &h, mode)
            };
            json!({
                "result": !found.complements.is_empty(),
                "mode": mode,
                "exhaustive": found.exhaustive,
                "complements": found.complements.iter().map(|t| subgroup_json(g, t)).collect::<Vec<_>>(),
            })
        }
        Property::Supercomplemented => decision_json(g, &complement::is_supercomplemented(g, &sub()?)),
        Property::CSeparating => {
            let lat = build_lattice(g, c)?;
            let found = complement::c_separating_subgroups(g, &lat);
            match &c.subgroup {
                Some(_) => {
                    let h = sub()?;
                    json!({ "result": found.contains(&h) })
                }
                None => json!({
                    "result": !found.is_empty(),
                    "subgroups": found.iter().map(|h| subgroup_json(g, h)).collect::<Vec<_>>(),
                }),
            }
        }
        Property::CompletelyFactorizable => {
            let lat = build_lattice(g, c)?;
            decision_json(g, &complement::is_completely_factorizable(g, &lat))
        }
        Property::Normal => json!({ "result": lattice::is_normal(g, &sub()?) }),
        Property::Solvable => {
            let h = c.subgroup.as_ref().map(|_| sub()).transpose()?.unwrap_or(whole);
            json!({
                "result": structure::is_solvable(g, &h),
                "derived_length": structure::derived_length(g, &h),
            })
        }
        Property::Nilpotent => {
            let h = c.subgroup.as_ref().map(|_| sub()).transpose()?.unwrap_or(whole);
            json!({ "result": structure::is_nilpotent(g, &h) })
        }
        Property::DerivedSeries => {
            let h = c.subgroup.as_ref().map(|_| sub()).transpose()?.unwrap_or(whole);
            json!({ "result": structure::derived_series(g, &h).to_json(g) })
        }
        Property::LowerCentralSeries => {
            let h = c.subgroup.as_ref().map(|_| sub()).transpose()?.unwrap_or(whole);
            json!({ "result": structure::lower_central_series(g, &h).to_json(g) })
        }
        Property::ChiefSeries => json!({ "result": structure::chief_series(g)?.to_json(g) }),
        Property::Center => json!({ "result": subgroup_json(g, &structure::center(g, &whole)) }),
        Property::Frattini => {
            let lat = build_lattice(g, c)?;
            json!({ "result": subgroup_json(g, &structure::frattini(g, &lat)) })
        }
        Property::Sylow => {
            let p = c.p.ok_or_else(|| Failure::Usage("--p is required for sylow".into()))?;
            let lat = build_lattice(g, c)?;
            let all = structure::sylow_subgroups(g, &lat, p)?;
            json!({
                "result": all.iter().map(|h| subgroup_json(g, h)).collect::<Vec<_>>(),
                "count": all.len(),
            })
        }
        Property::MinimalNormal => json!({
            "result": structure::minimal_normal_subgroups(g)
                .iter()
                .map(|h| subgroup_json(g, h))
                .collect::<Vec<_>>(),
        }),
    };
    Ok(value)
}

/// A generator of a cyclic subgroup.
fn cyclic_generator(g: &FiniteGroup, h: &Subgroup) -> Option<usize> {
    h.elements().find(|&x| generated_subgroup(g, &[x]) == *h)
}

fn run_suite(suite: Suite, c: &Common) -> CliResult<Vec<VerificationReport>> {
    let reports = match suite {
        Suite::Theorem4 => verify::verify_theorem4(),
        Suite::Example => match c.p {
            Some(p) => verify::verify_example(p),
            None => [2, 3].into_iter().flat_map(verify::verify_example).collect(),
        },
        Suite::Catalog => verify::run_catalog_suite(),
        Suite::Bounds => verify::verify_bounds(),
        Suite::Theorem1 | Suite::Prop1 => {
            let named = load(c)?;
            let h = subgroup_arg(&named, c)?;
            let x = cyclic_generator(&named.group, &h)
                .ok_or_else(|| Failure::Usage("--subgroup must name a cyclic subgroup".into()))?;
            if suite == Suite::Theorem1 {
                verify::verify_theorem1_instance(&named.group, x)
            } else {
                verify::verify_prop1_instance(&named.group, x)
            }
        }
        Suite::Theorem3 => {
            let named = load(c)?;
            let h = subgroup_arg(&named, c)?;
            verify::verify_theorem3_instance(&named.group, &h)
        }
    };
    Ok(reports)
}

fn reports_text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        s.push_str(&format!("{status:<5} {}\n", r.claim));
    }
    s
}

fn lattice_text(g: &FiniteGroup, lat: &SubgroupLattice) -> String {
    let mut s = format!(
        "group of order {}: {} subgroups, {} conjugacy classes, {} normal\n",
        g.order(),
        lat.len(),
        lat.conjugacy_classes().len(),
        lat.normal_subgroups().count()
    );
    for (i, h) in lat.subgroups().iter().enumerate() {
        let normal = if lat.is_normal(i) { "  normal" } else { "" };
        s.push_str(&format!("{i:>4}  order {:>4}  {}{normal}\n", h.order(), h.describe(g)));
    }
    s
}
