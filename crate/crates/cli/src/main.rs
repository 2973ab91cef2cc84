mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fullobs::closed_form::{
    count_obs_cycles, count_obs_paths, obs_cycles_closed, obs_cycles_members, obs_paths_closed, obs_paths_members,
};
use fullobs::enumeration::{Catalog, EnumerationRequest, Filter};
use fullobs::fullhom::full_hom_witness;
use fullobs::graph_core::{graph6_encode, StandardKind};
use fullobs::obstructions::{construct_witness_host, obs_oracle_in, obs_star_oracle_in, ObstructionSet};
use fullobs::pd_core::{full_core, linear_forest_spec};
use fullobs::validate::{run_suite, Suite, ValidateOptions};
use fullobs::Graph;

use input::{parse_range, read_graph6_file, GraphArg};

#[derive(Parser)]
#[command(name = "fullobs", version, about = "Full-homomorphism colourings and their minimal obstructions")]
struct Cli {
    /// Worker threads for enumeration and search (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether G has a full-homomorphism to H.
    Fullhom {
        g: String,
        h: String,
        /// Read both graphs as graph6 even if they look like shorthand.
        #[arg(long)]
        g6: bool,
    },
    /// Print the full core and the collapse map.
    Core {
        g: String,
        /// Read graph arguments as graph6 even if they look like shorthand.
        #[arg(long)]
        g6: bool,
    },
    /// Smallest path order admitting an injective full-homomorphism from a linear forest.
    Mu {
        g: String,
        /// Read graph arguments as graph6 even if they look like shorthand.
        #[arg(long)]
        g6: bool,
    },
    /// List isomorphism classes up to a given order.
    Enumerate {
        /// Largest order to list.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Canonicalize and deduplicate graphs from this file instead of generating.
        #[arg(long)]
        graph6_in: Option<PathBuf>,
        /// Write the listing here instead of stdout.
        #[arg(long)]
        graph6_out: Option<PathBuf>,
        /// Allow order 11.
        #[arg(long)]
        best_effort: bool,
    },
    /// Minimal obstructions of a host graph.
    Obs {
        /// Host graph: `P<n>`, `C<n>`, `K<n>`, an edge list `n:u-v,...`, or graph6.
        #[arg(long)]
        host: String,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Search only the graphs in this file.
        #[arg(long)]
        graph6_in: Option<PathBuf>,
        /// Print member names instead of graph6 (closed form only).
        #[arg(long)]
        names: bool,
        /// Read graph arguments as graph6 even if they look like shorthand.
        #[arg(long)]
        g6: bool,
    },
    /// Minimal obstructions with one vertex more than the host.
    ObsStar {
        /// Host graph: `P<n>`, `C<n>`, `K<n>`, an edge list `n:u-v,...`, or graph6.
        #[arg(long)]
        host: String,
        /// Search only the graphs in this file.
        #[arg(long)]
        graph6_in: Option<PathBuf>,
        /// Read graph arguments as graph6 even if they look like shorthand.
        #[arg(long)]
        g6: bool,
    },
    /// Build a host for which a connected point-determining graph is a minimal obstruction.
    WitnessHost {
        g: String,
        /// Read graph arguments as graph6 even if they look like shorthand.
        #[arg(long)]
        g6: bool,
    },
    /// Number of minimal obstructions of a path or cycle.
    Count {
        /// `P<n>` or `C<n>`; n may exceed the 32-vertex graph capacity.
        #[arg(long)]
        host: String,
    },
    /// Run a validation suite.
    Validate {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest graph order the suite enumerates.
        #[arg(long)]
        max_n: Option<usize>,
        /// Table rows, e.g. `5-8`.
        #[arg(long)]
        rows: Option<String>,
        /// Include checks that need the order-10 enumeration.
        #[arg(long)]
        extended: bool,
        /// Print records as tab-separated values.
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    PointDetermining,
    Connected,
    ConnectedRegular,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Filter {
        match f {
            FilterArg::All => Filter::All,
            FilterArg::PointDetermining => Filter::PointDetermining,
            FilterArg::Connected => Filter::Connected,
            FilterArg::ConnectedRegular => Filter::ConnectedRegular,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    ClosedForm,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paths,
    Cycles,
    Table1,
    Regular,
    Mu,
    Blowup,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Paths => Suite::Paths,
            SuiteArg::Cycles => Suite::Cycles,
            SuiteArg::Table1 => Suite::Table1,
            SuiteArg::Regular => Suite::Regular,
            SuiteArg::Mu => Suite::Mu,
            SuiteArg::Blowup => Suite::Blowup,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Outcome of a command that ran without error.
enum Answer {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot set up {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Answer::Yes), Ok(())) => ExitCode::SUCCESS,
        (Ok(Answer::No), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<Answer> {
    match command {
        Command::Fullhom { g, h, g6 } => {
            let g = GraphArg::parse(&g, g6)?.graph()?;
            let h = GraphArg::parse(&h, g6)?.graph()?;
            match full_hom_witness(&g, &h) {
                Some(w) => {
                    writeln!(out, "YES")?;
                    writeln!(out, "{}", join(w.assignment()))?;
                    Ok(Answer::Yes)
                }
                None => {
                    writeln!(out, "NO")?;
                    Ok(Answer::No)
                }
            }
        }
        Command::Core { g, g6 } => {
            let g = GraphArg::parse(&g, g6)?.graph()?;
            let (core, map) = full_core(&g);
            writeln!(out, "{}", graph6_encode(&core))?;
            writeln!(out, "{}", join(map.assignment()))?;
            Ok(Answer::Yes)
        }
        Command::Mu { g, g6 } => {
            let g = GraphArg::parse(&g, g6)?.graph()?;
            match linear_forest_spec(&g) {
                Ok(spec) => {
                    writeln!(out, "{}", spec.mu())?;
                    Ok(Answer::Yes)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(Answer::No)
                }
            }
        }
        Command::Enumerate {
            max_n,
            filter,
            graph6_in,
            graph6_out,
            best_effort,
        } => {
            let filter = Filter::from(filter);
            let catalog;
            let catalog: &Catalog = match &graph6_in {
                Some(path) => {
                    catalog = Catalog::from_graphs(read_graph6_file(path)?);
                    &catalog
                }
                None => Catalog::builtin(),
            };
            let upper = if graph6_in.is_some() {
                max_n.min(catalog.max_order())
            } else if best_effort {
                EnumerationRequest::best_effort(max_n, filter)?.max_order()
            } else {
                EnumerationRequest::new(max_n, filter)?.max_order()
            };
            let mut sink: Box<dyn Write> = match &graph6_out {
                Some(path) => Box::new(BufWriter::new(
                    File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
                )),
                None => Box::new(&mut *out),
            };
            for order in 1..=upper {
                for g in catalog.classes(order, filter)? {
                    writeln!(sink, "{}", graph6_encode(&g))?;
                }
            }
            sink.flush()?;
            Ok(Answer::Yes)
        }
        Command::Obs {
            host,
            method,
            graph6_in,
            names,
            g6,
        } => {
            let arg = GraphArg::parse(&host, g6)?;
            if method == Method::ClosedForm {
                if graph6_in.is_some() {
                    bail!("--graph6-in applies to the oracle method only");
                }
                match closed_form_family(&arg)? {
                    Some(family) => return print_closed_form(family, names, out),
                    None => eprintln!("note: no closed form for this host size; using the oracle"),
                }
            } else if names {
                bail!("--names applies to the closed form only");
            }
            let h = arg.graph()?;
            let set = match &graph6_in {
                Some(path) => obs_oracle_in(&Catalog::from_graphs(read_graph6_file(path)?), &h)?,
                None => obs_oracle_in(Catalog::builtin(), &h)?,
            };
            print_set(&set, out)?;
            Ok(Answer::Yes)
        }
        Command::ObsStar { host, graph6_in, g6 } => {
            let h = GraphArg::parse(&host, g6)?.graph()?;
            let set = match &graph6_in {
                Some(path) => obs_star_oracle_in(&Catalog::from_graphs(read_graph6_file(path)?), &h)?,
                None => obs_star_oracle_in(Catalog::builtin(), &h)?,
            };
            print_set(&set, out)?;
            Ok(Answer::Yes)
        }
        Command::WitnessHost { g, g6 } => {
            let g = GraphArg::parse(&g, g6)?.graph()?;
            let w = construct_witness_host(&g)?;
            writeln!(out, "{}", graph6_encode(&w.host))?;
            writeln!(out, "verified: {}", if w.verified { "yes" } else { "no" })?;
            Ok(if w.verified { Answer::Yes } else { Answer::No })
        }
        Command::Count { host } => {
            let arg = GraphArg::parse(&host, false)?;
            let count = match closed_form_family(&arg)? {
                Some(Family::Path(n)) => count_obs_paths(n)?,
                Some(Family::Cycle(n)) => count_obs_cycles(n)?,
                None => bail!("counts are available for P<n> with n >= 2 and C<n> with n >= 5"),
            };
            writeln!(out, "{count}")?;
            Ok(Answer::Yes)
        }
        Command::Validate {
            suite,
            max_n,
            rows,
            extended,
            tsv,
        } => {
            let opts = ValidateOptions {
                max_n,
                rows: rows.as_deref().map(parse_range).transpose()?,
                extended,
            };
            let report = run_suite(suite.into(), &opts)?;
            if tsv {
                write!(out, "{}", report.to_tsv())?;
            } else {
                write!(out, "{report}")?;
            }
            Ok(if report.all_passed() { Answer::Yes } else { Answer::No })
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Family {
    Path(usize),
    Cycle(usize),
}

/// The closed-form family for a host, if the host is a path with `n >= 2`
/// or a cycle with `n >= 5`. Other paths and cycles return `None`; hosts
/// that are neither are an error.
fn closed_form_family(arg: &GraphArg) -> Result<Option<Family>> {
    let (kind, n) = match *arg {
        GraphArg::Standard(kind, n) => (kind, n),
        GraphArg::Literal(g) => recognize(&g).context("the closed form covers paths and cycles only")?,
    };
    Ok(match kind {
        StandardKind::Path if n >= 2 => Some(Family::Path(n)),
        StandardKind::Cycle if n >= 5 => Some(Family::Cycle(n)),
        StandardKind::Path | StandardKind::Cycle => None,
        StandardKind::Complete if n <= 2 => (n == 2).then_some(Family::Path(2)),
        StandardKind::Complete if n == 3 => None,
        _ => bail!("the closed form covers paths and cycles only"),
    })
}

fn recognize(g: &Graph) -> Option<(StandardKind, usize)> {
    let n = g.order();
    if !g.is_connected() || g.degrees().iter().any(|&d| d > 2) {
        return None;
    }
    if g.size() + 1 == n {
        Some((StandardKind::Path, n))
    } else {
        (g.size() == n).then_some((StandardKind::Cycle, n))
    }
}

fn print_closed_form(family: Family, names: bool, out: &mut impl Write) -> Result<Answer> {
    if names {
        let members = match family {
            Family::Path(n) => obs_paths_members(n)?,
            Family::Cycle(n) => obs_cycles_members(n)?,
        };
        for m in members {
            writeln!(out, "{m}")?;
        }
        return Ok(Answer::Yes);
    }
    let set = match family {
        Family::Path(n) => obs_paths_closed(n)?,
        Family::Cycle(n) => obs_cycles_closed(n)?,
    };
    print_set(&set, out)?;
    Ok(Answer::Yes)
}

fn print_set(set: &ObstructionSet, out: &mut impl Write) -> Result<()> {
    for g in set.graphs() {
        writeln!(out, "{}", graph6_encode(g))?;
    }
    Ok(())
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
