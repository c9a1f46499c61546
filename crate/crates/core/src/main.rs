use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use skeinlab::catalog::{Catalog, CatalogError};
use skeinlab::diagram::Template;
use skeinlab::select::{apply_binding, Invariant, SelectError};
use skeinlab::verify;

#[derive(Parser)]
#[command(name = "skeinlab", version, about = "Two-level skein invariants of link diagrams")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one invariant of a catalog link or a PD code.
    Compute {
        /// r, p, dubrovnik, kauffman, bracket, curly, hr, dt, kq, hr-formula, dt-formula,
        /// kq-formula, theta, zsum or double
        #[arg(long, short)]
        invariant: String,
        /// Catalog name, `PD[...]` text or JSON diagram
        #[arg(long, short)]
        link: String,
        /// Comma-separated edge labels directing the skein walk
        #[arg(long)]
        template: Option<String>,
        /// `jones`, `alexander` or `var=poly`; may be repeated
        #[arg(long = "set")]
        set: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Inspect the link catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Oracles,
    Isotopy,
    Specialize,
    PaperValues,
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show { name: String },
}

/// Failure classes with their exit codes.
enum Fail {
    Checks,
    Parse(String),
    Selector(String),
}

impl From<SelectError> for Fail {
    fn from(e: SelectError) -> Fail {
        Fail::Selector(e.to_string())
    }
}

impl From<CatalogError> for Fail {
    fn from(e: CatalogError) -> Fail {
        Fail::Parse(e.to_string())
    }
}

#[derive(Serialize)]
struct Output<'a> {
    invariant: &'a str,
    link: &'a str,
    value: String,
}

fn compute(invariant: &str, link: &str, template: Option<&str>, sets: &[String], json: bool) -> Result<(), Fail> {
    let inv: Invariant = invariant.parse()?;
    let cat = Catalog::load()?;
    let d = cat.resolve(link)?;
    let template = template.map(|t| Template::parse(&d, t)).transpose().map_err(|e| Fail::Parse(e.to_string()))?;
    let mut value = inv.eval(&d, template.as_ref())?;
    for s in sets {
        value = apply_binding(&value, s)?;
    }
    if json {
        let out = Output { invariant: inv.name(), link, value: value.to_string() };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{value}");
    }
    Ok(())
}

fn run_verify(suite: Suite, seed: u64) -> Result<(), Fail> {
    let cat = Catalog::load()?;
    let report = match suite {
        Suite::Oracles => verify::oracles(&verify::sample(&cat, 100, seed)),
        Suite::Isotopy => verify::isotopy(&verify::sample(&cat, 0, seed), 200, 50, seed),
        Suite::Specialize => verify::specialize_suite(&verify::sample(&cat, 0, seed)),
        Suite::PaperValues => verify::paper_values(&cat),
    };
    println!("{report}");
    if report.all_pass() {
        Ok(())
    } else {
        Err(Fail::Checks)
    }
}

fn catalog(action: &CatalogCmd) -> Result<(), Fail> {
    let cat = Catalog::load()?;
    match action {
        CatalogCmd::List => {
            for n in cat.names() {
                println!("{n}");
            }
        }
        CatalogCmd::Show { name } => {
            let d = cat.get(name).ok_or_else(|| Fail::Parse(format!("unknown link '{name}'")))?;
            println!("{d}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Compute { invariant, link, template, set, json } => {
            compute(invariant, link, template.as_deref(), set, *json)
        }
        Cmd::Verify { suite, seed } => run_verify(*suite, *seed),
        Cmd::Catalog { action } => catalog(action),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Checks) => ExitCode::from(1),
        Err(Fail::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Selector(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
