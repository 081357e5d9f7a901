use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use distinguish::distinguishing::{
    count_distinguishing_colorings_within, distinguishing_number_within,
};
use distinguish::formulas::{direct_product_table, wreath_distinguishing_number};
use distinguish::grid::{feasible_oracle_within, DEFAULT_ORACLE_BUDGET};
use distinguish::group::DEFAULT_MAX_ELEMENTS;
use distinguish::{
    construct, direct_product_distinguishing_number, f, grid_feasible, verify, GridColoring,
    GroupAction,
};

mod source;

use source::{GroupSource, Limits};

/// Distinguishing numbers of finite permutation-group actions.
#[derive(Parser)]
#[command(name = "distinguish", version)]
struct Cli {
    /// Largest group the tool will materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,

    /// Work budget for brute-force searches.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print f_k(m).
    Fk {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
    },
    /// Distinguishing number of S_m x S_n on the m x n grid.
    Direct {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// The grid distinguishing numbers for 1 <= m, n <= max.
    Table {
        #[arg(long)]
        max: u64,
    },
    #[command(subcommand)]
    Grid(GridCommand),
    /// Distinguishing number of a wreath product.
    Wreath {
        #[arg(long)]
        inner: GroupSource,
        #[arg(long)]
        outer: GroupSource,
        /// Materialize the wreath group and search instead of using the bound.
        #[arg(long)]
        brute: bool,
    },
    /// Number of distinguishing r-colorings, by enumeration.
    Count {
        #[arg(long)]
        action: GroupSource,
        #[arg(long)]
        r: u32,
    },
    /// Distinguishing number of an action, by enumeration.
    Distnum {
        #[arg(long)]
        action: GroupSource,
    },
}

#[derive(Subcommand)]
enum GridCommand {
    /// Build a distinguishing k-coloring of the m x n grid.
    Construct {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a grid coloring read from a JSON or text file.
    Verify {
        #[arg(long)]
        file: String,
    },
    /// Whether the m x n grid has a distinguishing k-coloring.
    Feasible {
        #[command(flatten)]
        dims: Dims,
        /// Decide by enumerating column subsets.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Args)]
struct Dims {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(if e.is_resource_limit() { 3 } else { 2 })
        }
    }
}

fn usize_arg(x: u64) -> distinguish::Result<usize> {
    usize::try_from(x)
        .map_err(|_| distinguish::Error::InvalidArgument(format!("{} is too large", x)))
}

fn run(cli: &Cli) -> distinguish::Result<String> {
    let limits = Limits {
        max_elements: cli.max_elements,
        budget: cli.budget,
    };
    let out = match &cli.command {
        Command::Fk { k, m } => f(*k, *m)?.to_string(),
        Command::Direct { m, n } => direct_product_distinguishing_number(*m, *n)?.to_string(),
        Command::Table { max } => return Ok(render_table(&direct_product_table(*max)?)),
        Command::Grid(GridCommand::Construct { dims, format }) => {
            let c = construct(usize_arg(dims.m)?, usize_arg(dims.n)?, usize_arg(dims.k)?)?;
            return Ok(match format {
                Format::Json => c.to_json() + "\n",
                Format::Text => c.to_text(),
            });
        }
        Command::Grid(GridCommand::Verify { file }) => {
            let text = fs::read_to_string(file)
                .map_err(|e| distinguish::Error::Parse(format!("cannot read {}: {}", file, e)))?;
            verify(&GridColoring::parse(&text)?)?.to_string()
        }
        Command::Grid(GridCommand::Feasible { dims, oracle }) => {
            if *oracle {
                let (m, n, k) = (usize_arg(dims.m)?, usize_arg(dims.n)?, usize_arg(dims.k)?);
                feasible_oracle_within(m, n, k, limits.budget)?.to_string()
            } else {
                grid_feasible(dims.m, dims.n, dims.k)?.to_string()
            }
        }
        Command::Wreath {
            inner,
            outer,
            brute,
        } => {
            if *brute {
                let w = GroupAction::wreath_capped(
                    &limits.action(inner)?,
                    &limits.action(outer)?,
                    limits.max_elements,
                )?;
                distinguishing_number_within(&w, limits.budget)?.to_string()
            } else {
                let d = limits.distinguishing_number(outer)?;
                let (order, nr) = limits.counter(inner)?;
                wreath_distinguishing_number(nr, d, &order)?.to_string()
            }
        }
        Command::Count { action, r } => {
            count_distinguishing_colorings_within(&limits.action(action)?, *r, limits.budget)?
                .to_string()
        }
        Command::Distnum { action } => {
            distinguishing_number_within(&limits.action(action)?, limits.budget)?.to_string()
        }
    };
    Ok(out + "\n")
}

/// Right-aligned columns under an `m,n` header row.
fn render_table(table: &[Vec<u64>]) -> String {
    let max = table.len();
    let width = table
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .chain([max.to_string().len(), 3])
        .max()
        .unwrap_or(3);
    let mut out = format!("{:>width$}", "m,n");
    for n in 1..=max {
        out.push_str(&format!(" {:>width$}", n));
    }
    out.push('\n');
    for (i, row) in table.iter().enumerate() {
        out.push_str(&format!("{:>width$}", i + 1));
        for v in row {
            out.push_str(&format!(" {:>width$}", v));
        }
        out.push('\n');
    }
    out
}
