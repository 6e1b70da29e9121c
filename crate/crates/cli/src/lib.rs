//! Command-line front end for the `subcanonical` crate.
//!
//! [`run`] takes the full argument vector (program name first) and two
//! writers so it can be driven from tests. Exit codes: 0 on success, 1 for
//! bad input or unmet preconditions, 2 when an internal invariant fails.

pub mod documents;

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use subcanonical::atlas::{self, StoredTable};
use subcanonical::covers::{self, CoverSpec, NamedConstruction};
use subcanonical::limit_series::{self, LimitSeriesProblem, TorsionClass};
use subcanonical::{
    Error, GapSet, NumericalSemigroup, PointProfile, RamificationSequence, VanishingSequence,
};

use documents::{
    AtlasRowDocument, CheckDocument, CrudeLimitDocument, EnumerationDocument, LimitDocument,
    ProfileDocument, RhoDocument, TableRowDocument, Tabular,
};

/// Comma-separated nonnegative integers; `none` is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<u32>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        atlas::parse_int_list(s).map(IntList)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Torsion {
    /// order 2g-2
    Full,
    /// order g-1
    Half,
}

#[derive(Debug, Parser)]
#[command(
    name = "subcanonical",
    version,
    about = "Invariants of subcanonical points on curves"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Read the low-genus table from this file instead of the built-in copy
    #[arg(long, global = true)]
    table_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the stored low-genus table
    Table {
        #[arg(long)]
        genus: Option<u32>,
    },
    /// List every admissible gap sequence of a subcanonical point
    Enumerate {
        #[arg(long)]
        genus: u32,
        /// Join against the stored table (genus <= 6)
        #[arg(long, visible_alias = "compare-paper")]
        compare_table: bool,
    },
    /// Profile a point and run the semigroup test
    Check(CheckArgs),
    /// Vanishing sequence at a ramification point of a cover
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Limit canonical series on a curve with an elliptic tail
    Limit {
        #[arg(long)]
        genus: u32,
        /// Ramification sequence of the node on the genus g-1 component
        #[arg(long)]
        alpha_q: IntList,
        #[arg(long, value_enum)]
        torsion: Torsion,
    },
    /// Adjusted Brill–Noether number
    Rho {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        alpha: IntList,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CheckArgs {
    #[arg(long)]
    gaps: Option<IntList>,
    #[arg(long)]
    vanishing: Option<IntList>,
    #[arg(long)]
    ramification: Option<IntList>,
}

#[derive(Debug, Subcommand)]
enum CoverCommand {
    /// Double cover branched at the base point
    Double {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        base_genus: u32,
        #[arg(long)]
        base_vanishing: IntList,
    },
    /// Cyclic cover totally ramified over a subcanonical base point
    Cyclic {
        #[arg(long)]
        sheets: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        base_genus: u32,
        #[arg(long)]
        base_vanishing: IntList,
    },
    /// One of the standard constructions
    Named {
        #[arg(long)]
        name: String,
        #[arg(long)]
        genus: u32,
    },
}

enum Output {
    Profile(ProfileDocument),
    Check(CheckDocument),
    Table(Vec<TableRowDocument>),
    Enumeration(EnumerationDocument),
    Limit(LimitDocument),
    Rho(RhoDocument),
}

impl Output {
    fn tabular(&self) -> Tabular {
        match self {
            Output::Profile(d) => d.tabular(),
            Output::Check(d) => d.tabular(),
            Output::Table(rows) => documents::table_tabular(rows),
            Output::Enumeration(d) => d.tabular(),
            Output::Limit(d) => d.tabular(),
            Output::Rho(d) => d.tabular(),
        }
    }

    fn json(&self) -> serde_json::Result<String> {
        fn pretty<T: Serialize>(value: &T) -> serde_json::Result<String> {
            serde_json::to_string_pretty(value)
        }
        match self {
            Output::Profile(d) => pretty(d),
            Output::Check(d) => pretty(d),
            Output::Table(d) => pretty(d),
            Output::Enumeration(d) => pretty(d),
            Output::Limit(d) => pretty(d),
            Output::Rho(d) => pretty(d),
        }
    }
}

fn load_table(path: &Option<PathBuf>) -> Result<StoredTable, Error> {
    match path {
        Some(p) => StoredTable::from_path(p),
        None => Ok(StoredTable::builtin()),
    }
}

fn check(args: CheckArgs) -> Result<Output, Error> {
    let vanishing = if let Some(IntList(gaps)) = args.gaps {
        GapSet::new(gaps)?.vanishing()
    } else if let Some(IntList(v)) = args.vanishing {
        VanishingSequence::new(v.len() as u32, v)?
    } else if let Some(IntList(r)) = args.ramification {
        RamificationSequence::new(r.len() as u32, r)?.vanishing()
    } else {
        unreachable!("clap requires one input")
    };
    let profile = ProfileDocument::from(&PointProfile::new(vanishing.clone()));
    let doc = match NumericalSemigroup::from_gaps(&vanishing.gaps()) {
        Ok(s) => CheckDocument {
            profile,
            semigroup_closed: true,
            violation: None,
            symmetric: Some(s.is_symmetric()),
            generators: Some(s.minimal_generators()),
        },
        Err(v) => CheckDocument {
            profile,
            semigroup_closed: false,
            violation: Some(v.into()),
            symmetric: None,
            generators: None,
        },
    };
    Ok(Output::Check(doc))
}

fn cover(command: CoverCommand) -> Result<Output, Error> {
    let result = match command {
        CoverCommand::Double {
            genus,
            base_genus,
            base_vanishing,
        } => {
            let base = VanishingSequence::new(base_genus, base_vanishing.0)?;
            covers::double_cover_vanishing(genus, &base)?
        }
        CoverCommand::Cyclic {
            sheets,
            ell,
            base_genus,
            base_vanishing,
        } => {
            let base = VanishingSequence::new(base_genus, base_vanishing.0)?;
            covers::cyclic_cover_vanishing(&CoverSpec::new(sheets, ell, base)?)?
        }
        CoverCommand::Named { name, genus } => {
            covers::named_construction(name.parse::<NamedConstruction>()?, genus)?
        }
    };
    Ok(Output::Profile(ProfileDocument::from(&result.profile)))
}

fn limit(genus: u32, alpha_q: Vec<u32>, torsion: Torsion) -> Result<Output, Error> {
    if genus < 3 {
        return Err(Error::Precondition(format!(
            "total genus must be at least 3, got {genus}"
        )));
    }
    let alpha = RamificationSequence::new(genus - 1, alpha_q)?;
    let torsion = match torsion {
        Torsion::Full => TorsionClass::full(genus)?,
        Torsion::Half => TorsionClass::half(genus)?,
    };
    let problem = LimitSeriesProblem::new(genus, alpha.clone(), torsion)?;
    let beta = limit_series::beta_at_node(&problem);
    let gamma = limit_series::gamma_at_marked_point(&problem)?;
    let verdict = limit_series::check_crude_limit(genus, &gamma.gamma, torsion, &alpha)?;
    let mut top = vec![0; genus as usize - 1];
    top.push(genus - 1);
    Ok(Output::Limit(LimitDocument {
        genus,
        torsion_order: torsion.order(),
        alpha_q: alpha.values().to_vec(),
        c_aspect_at_q: limit_series::c_aspect_ramification(&alpha)
            .values()
            .to_vec(),
        beta: beta.values().to_vec(),
        gamma: gamma.gamma.values().to_vec(),
        exceptional_index: gamma.exceptional_index,
        eh_star: limit_series::eh_star(&beta, &gamma.gamma, genus)?,
        crude_limit: CrudeLimitDocument {
            passes: verdict.passes(),
            violations: verdict.violations,
            excused_index: verdict.excused_index,
        },
        theta_parity: limit_series::limit_theta_parity(&problem)?,
        rho: limit_series::rho_adjusted(genus, genus - 1, 2 * genus - 2, &top)?,
        expected_dimensions: limit_series::expected_dimensions(genus)?,
    }))
}

fn enumerate(genus: u32, compare: bool, table: &StoredTable) -> Result<Output, Error> {
    let (rows, extras, missing) = if compare {
        let report = atlas::verify_known_table(genus, table)?;
        let extras = report
            .extras
            .iter()
            .map(|r| r.vanishing.clone())
            .collect::<Vec<_>>();
        let missing = report
            .missing
            .iter()
            .map(|r| r.vanishing.clone())
            .collect::<Vec<_>>();
        (
            report.rows,
            Some(documents::sequences(&extras)),
            Some(documents::sequences(&missing)),
        )
    } else {
        (atlas::atlas_rows(genus, table)?, None, None)
    };
    let rows = rows
        .iter()
        .map(|r| Ok(AtlasRowDocument::new(r, r.vanishing.classify_component()?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Output::Enumeration(EnumerationDocument {
        genus,
        count: rows.len(),
        rows,
        extras,
        missing,
    }))
}

fn execute(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Table { genus } => {
            let table = load_table(&cli.table_file)?;
            let rows = table
                .rows()
                .iter()
                .filter(|r| genus.is_none_or(|g| r.genus == g))
                .map(TableRowDocument::from)
                .collect();
            Ok(Output::Table(rows))
        }
        Command::Enumerate {
            genus,
            compare_table,
        } => enumerate(genus, compare_table, &load_table(&cli.table_file)?),
        Command::Check(args) => check(args),
        Command::Cover(command) => cover(command),
        Command::Limit {
            genus,
            alpha_q,
            torsion,
        } => limit(genus, alpha_q.0, torsion),
        Command::Rho {
            genus,
            rank,
            degree,
            alpha,
        } => {
            let rho = limit_series::rho_adjusted(genus, rank, degree, &alpha.0)?;
            Ok(Output::Rho(RhoDocument {
                genus,
                rank,
                degree,
                alpha: alpha.0,
                rho,
            }))
        }
    }
}

fn render(output: &Output, format: Format) -> Result<String, String> {
    match format {
        Format::Json => output.json().map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => {
            let t = output.tabular();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&t.headers).map_err(|e| e.to_string())?;
            for row in &t.rows {
                w.write_record(row).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        Format::Md => {
            let t = output.tabular();
            let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
            let mut s = line(t.headers.iter().map(|h| h.to_string()).collect());
            s += &line(t.headers.iter().map(|_| "---".to_string()).collect());
            for row in t.rows {
                s += &line(row.into_iter().map(|c| c.replace('|', "\\|")).collect());
            }
            Ok(s)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        2
    } else {
        1
    }
}

/// Parses `args`, runs the command and writes the result to `out`;
/// diagnostics go to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let format = cli.format;
    let output = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    match render(&output, format) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: cannot render output: {e}");
            2
        }
    }
}
